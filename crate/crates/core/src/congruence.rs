//! Congruences on finite algebras: generation by closure and quotients.

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraError, Elem, FiniteAlgebra, Table};

type BinOp = fn(&FiniteAlgebra, Elem, Elem) -> Elem;

/// A partition of the carrier, stored canonically: blocks sorted by their
/// least element, each block sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Congruence {
    blocks: Vec<Vec<Elem>>,
    block_of: Vec<usize>,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        let (lo, hi) = if rx < ry { (rx, ry) } else { (ry, rx) };
        self.parent[hi] = lo;
        true
    }
}

impl Congruence {
    /// Build from blocks. Fails if they do not partition `0..size`.
    pub fn from_blocks(size: usize, blocks: Vec<Vec<Elem>>) -> Result<Self, AlgebraError> {
        let mut block_of = vec![usize::MAX; size];
        for (i, block) in blocks.iter().enumerate() {
            for &x in block {
                if x >= size || block_of[x] != usize::MAX {
                    return Err(AlgebraError::InvalidPartition { size });
                }
                block_of[x] = i;
            }
        }
        if block_of.contains(&usize::MAX) {
            return Err(AlgebraError::InvalidPartition { size });
        }
        Ok(Self::from_labels(&block_of))
    }

    /// Build from any labeling; elements with equal labels share a block.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut blocks: Vec<Vec<Elem>> = Vec::new();
        let mut seen: Vec<(usize, usize)> = Vec::new();
        let mut block_of = vec![0; labels.len()];
        for (x, &l) in labels.iter().enumerate() {
            let idx = match seen.iter().find(|(lab, _)| *lab == l) {
                Some(&(_, i)) => i,
                None => {
                    seen.push((l, blocks.len()));
                    blocks.push(Vec::new());
                    blocks.len() - 1
                }
            };
            blocks[idx].push(x);
            block_of[x] = idx;
        }
        Congruence { blocks, block_of }
    }

    pub fn identity(size: usize) -> Self {
        Self::from_labels(&(0..size).collect::<Vec<_>>())
    }

    pub fn total(size: usize) -> Self {
        Self::from_labels(&vec![0; size])
    }

    pub fn blocks(&self) -> &[Vec<Elem>] {
        &self.blocks
    }

    pub fn block_of(&self, x: Elem) -> usize {
        self.block_of[x]
    }

    pub fn related(&self, x: Elem, y: Elem) -> bool {
        self.block_of[x] == self.block_of[y]
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Intersection of two partitions of the same carrier.
    pub fn intersect(&self, other: &Congruence) -> Congruence {
        let n = self.block_of.len();
        let labels: Vec<usize> = (0..n)
            .map(|x| self.block_of[x] * n + other.block_of[x])
            .collect();
        Self::from_labels(&labels)
    }

    /// First operation/witness at which the partition fails to be
    /// compatible, if any. Extra unary maps are checked too.
    pub fn incompatibility(
        &self,
        a: &FiniteAlgebra,
        unary: &[&[Elem]],
    ) -> Option<(&'static str, Vec<Elem>)> {
        let ops: [(&'static str, BinOp); 4] = [
            ("meet", FiniteAlgebra::meet),
            ("join", FiniteAlgebra::join),
            ("times", FiniteAlgebra::times),
            ("imp", FiniteAlgebra::imp),
        ];
        for block in &self.blocks {
            for (i, &x) in block.iter().enumerate() {
                for &y in &block[i + 1..] {
                    for map in unary {
                        if !self.related(map[x], map[y]) {
                            return Some(("unary", vec![x, y]));
                        }
                    }
                    for z in a.elements() {
                        for (name, op) in ops {
                            if !self.related(op(a, x, z), op(a, y, z))
                                || !self.related(op(a, z, x), op(a, z, y))
                            {
                                return Some((name, vec![x, y, z]));
                            }
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_compatible(&self, a: &FiniteAlgebra) -> bool {
        self.incompatibility(a, &[]).is_none()
    }
}

/// The smallest congruence containing `pairs`.
pub fn congruence_generated(a: &FiniteAlgebra, pairs: &[(Elem, Elem)]) -> Congruence {
    congruence_generated_with(a, &[], pairs)
}

/// As [`congruence_generated`], additionally compatible with the given
/// unary maps (e.g. quantifiers).
///
/// Every union performed is queued as an edge; each edge is closed under
/// all operations against every third element. Compatibility along paths
/// then follows by transitivity.
pub fn congruence_generated_with(
    a: &FiniteAlgebra,
    unary: &[&[Elem]],
    pairs: &[(Elem, Elem)],
) -> Congruence {
    let n = a.size();
    let mut uf = UnionFind::new(n);
    let mut pending: Vec<(Elem, Elem)> = Vec::new();
    for &(x, y) in pairs {
        if uf.union(x, y) {
            pending.push((x, y));
        }
    }
    while let Some((x, y)) = pending.pop() {
        let mut merge = |p: Elem, q: Elem, uf: &mut UnionFind| {
            if uf.union(p, q) {
                pending.push((p, q));
            }
        };
        for map in unary {
            merge(map[x], map[y], &mut uf);
        }
        for z in 0..n {
            merge(a.meet(x, z), a.meet(y, z), &mut uf);
            merge(a.join(x, z), a.join(y, z), &mut uf);
            merge(a.times(x, z), a.times(y, z), &mut uf);
            merge(a.imp(x, z), a.imp(y, z), &mut uf);
            merge(a.imp(z, x), a.imp(z, y), &mut uf);
        }
    }
    let labels: Vec<usize> = (0..n).map(|x| uf.find(x)).collect();
    Congruence::from_labels(&labels)
}

/// The quotient algebra on the blocks of `cong`.
pub fn quotient(a: &FiniteAlgebra, cong: &Congruence) -> Result<FiniteAlgebra, AlgebraError> {
    if cong.block_of.len() != a.size() {
        return Err(AlgebraError::InvalidPartition { size: a.size() });
    }
    if let Some((operation, witness)) = cong.incompatibility(a, &[]) {
        return Err(AlgebraError::IncompatiblePartition { operation, witness });
    }
    let m = cong.num_blocks();
    let rep: Vec<Elem> = cong.blocks.iter().map(|b| b[0]).collect();
    let lift = |op: fn(&FiniteAlgebra, Elem, Elem) -> Elem| {
        Table::from_fn(m, |p, q| cong.block_of(op(a, rep[p], rep[q])))
    };
    Ok(FiniteAlgebra::from_parts(
        format!("{}/~", a.name()),
        lift(FiniteAlgebra::meet),
        lift(FiniteAlgebra::join),
        lift(FiniteAlgebra::times),
        lift(FiniteAlgebra::imp),
        cong.block_of(a.zero()),
        cong.block_of(a.one()),
    ))
}

/// Image of a unary map on the quotient; `None` if the map is not
/// compatible with `cong`.
pub fn quotient_map(map: &[Elem], cong: &Congruence) -> Option<Vec<Elem>> {
    let image: Vec<Elem> = cong
        .blocks
        .iter()
        .map(|b| cong.block_of(map[b[0]]))
        .collect();
    cong.blocks
        .iter()
        .all(|b| {
            b.iter()
                .all(|&x| cong.block_of(map[x]) == image[cong.block_of(b[0])])
        })
        .then_some(image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtins as b;
    use crate::iso::find_isomorphism;

    #[test]
    fn empty_generators_give_identity() {
        let l4 = b::lukasiewicz(4);
        assert_eq!(congruence_generated(&l4, &[]), Congruence::identity(4));
    }

    #[test]
    fn boolean_four_atom_collapse() {
        let b4 = b::boolean4();
        let c = congruence_generated(&b4, &[(1, 0)]);
        assert_eq!(c.blocks(), &[vec![0, 1], vec![2, 3]]);
        let q = quotient(&b4, &c).unwrap();
        assert!(q.validate_rl().is_pass());
        assert!(find_isomorphism(&q, &b::boolean2()).is_some());
    }

    #[test]
    fn zero_one_collapses_everything() {
        for a in [b::lukasiewicz(5), b::godel(4), b::boolean4()] {
            let c = congruence_generated(&a, &[(a.zero(), a.one())]);
            assert_eq!(c, Congruence::total(a.size()));
            let q = quotient(&a, &c).unwrap();
            assert_eq!(q.size(), 1);
            assert!(q.validate_rl().is_pass());
        }
    }

    #[test]
    fn identity_quotient_is_isomorphic() {
        let g4 = b::godel(4);
        let q = quotient(&g4, &Congruence::identity(4)).unwrap();
        assert!(find_isomorphism(&q, &g4).is_some());
    }

    #[test]
    fn incompatible_partition_is_rejected() {
        // In L3 collapsing 0 and 1/2 forces 1/2 -> 0 = 1/2 ~ 1 = 0 -> 0.
        let l3 = b::lukasiewicz(3);
        let p = Congruence::from_blocks(3, vec![vec![0, 1], vec![2]]).unwrap();
        assert!(matches!(
            quotient(&l3, &p),
            Err(AlgebraError::IncompatiblePartition { .. })
        ));
    }

    #[test]
    fn bad_partitions() {
        assert!(Congruence::from_blocks(3, vec![vec![0, 1]]).is_err());
        assert!(Congruence::from_blocks(3, vec![vec![0, 1], vec![1, 2]]).is_err());
    }
}
