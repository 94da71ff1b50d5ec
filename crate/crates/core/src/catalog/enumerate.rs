use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{CatalogEntry, CatalogError, Provenance};
use crate::algebra::{Elem, FiniteAlgebra};
use crate::iso::canonical_form;

pub const DEFAULT_SIZE_CAP: usize = 6;

/// All residuated lattices with `n` elements, up to isomorphism.
pub fn enumerate_rls(n: usize) -> Result<Vec<CatalogEntry>, CatalogError> {
    enumerate_rls_with_cap(n, DEFAULT_SIZE_CAP)
}

/// As [`enumerate_rls`] with an explicit size cap.
///
/// Lattices are generated naturally labelled (`0` bottom, `n−1` top, and
/// `i < j` whenever `i` lies strictly below `j`); each monoid table is then
/// filled cell by cell with values below the meet, pruning on monotonicity,
/// join preservation and associativity as soon as the cells involved are
/// known. Results are merged by canonical form and sorted by it.
pub fn enumerate_rls_with_cap(n: usize, cap: usize) -> Result<Vec<CatalogEntry>, CatalogError> {
    if n > cap {
        return Err(CatalogError::LimitExceeded { size: n, cap });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let found: Vec<(Vec<u16>, FiniteAlgebra)> = lattices(n)
        .into_par_iter()
        .flat_map_iter(|leq| {
            monoids(n, &leq)
                .into_iter()
                .filter_map(|times| {
                    let t = |x: Elem, y: Elem| times[x * n + y];
                    let a = FiniteAlgebra::from_order("", n, |x, y| leq[x * n + y], t, 0, n - 1)
                        .ok()?;
                    Some((canonical_form(&a), a))
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let unique: BTreeMap<Vec<u16>, FiniteAlgebra> = found.into_iter().collect();
    Ok(unique
        .into_values()
        .enumerate()
        .map(|(i, a)| {
            let a = a.with_name(format!("RL{n}.{}", i + 1));
            CatalogEntry::new(a, Provenance::Enumerated)
        })
        .collect())
}

/// Order matrices (row-major `leq[x*n+y]`) of the naturally labelled
/// lattices on `n` elements, one per isomorphism class.
fn lattices(n: usize) -> Vec<Vec<bool>> {
    if n == 1 {
        return vec![vec![true]];
    }
    let mid: Vec<Elem> = (1..n - 1).collect();
    let pairs: Vec<(Elem, Elem)> = mid
        .iter()
        .flat_map(|&i| mid.iter().filter(move |&&j| i < j).map(move |&j| (i, j)))
        .collect();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
            leq[x * n + n - 1] = true;
            leq[x] = true;
        }
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                leq[i * n + j] = true;
            }
        }
        let transitive = (0..n).all(|x| {
            (0..n).all(|y| !leq[x * n + y] || (0..n).all(|z| !leq[y * n + z] || leq[x * n + z]))
        });
        if !transitive || !is_lattice(n, &leq) {
            continue;
        }
        if seen.insert(order_key(n, &leq)) {
            out.push(leq);
        }
    }
    out
}

fn is_lattice(n: usize, leq: &[bool]) -> bool {
    (0..n).all(|x| {
        (0..n).all(|y| {
            let lower: Vec<Elem> = (0..n)
                .filter(|&z| leq[z * n + x] && leq[z * n + y])
                .collect();
            let upper: Vec<Elem> = (0..n)
                .filter(|&z| leq[x * n + z] && leq[y * n + z])
                .collect();
            lower.iter().any(|&m| lower.iter().all(|&z| leq[z * n + m]))
                && upper.iter().any(|&j| upper.iter().all(|&z| leq[j * n + z]))
        })
    })
}

/// Least order matrix over all permutations of the middle elements.
fn order_key(n: usize, leq: &[bool]) -> Vec<bool> {
    let mut perm: Vec<Elem> = (0..n).collect();
    let mut best: Option<Vec<bool>> = None;
    permute_middle(&mut perm, 1, n, &mut |p| {
        let mut key = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                key[p[x] * n + p[y]] = leq[x * n + y];
            }
        }
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
    });
    best.unwrap_or_default()
}

fn permute_middle(p: &mut Vec<Elem>, k: usize, n: usize, visit: &mut impl FnMut(&[Elem])) {
    if k + 1 >= n {
        visit(p);
        return;
    }
    for i in k..n - 1 {
        p.swap(k, i);
        permute_middle(p, k + 1, n, visit);
        p.swap(k, i);
    }
}

struct MonoidSearch<'a> {
    n: usize,
    leq: &'a [bool],
    meet: Vec<Elem>,
    join: Vec<Elem>,
    cells: Vec<(Elem, Elem)>,
    table: Vec<Option<Elem>>,
    out: Vec<Vec<Elem>>,
}

/// Commutative, associative, join-preserving products with unit `n−1`.
/// On a finite lattice with `0` absorbing these are exactly the residuated
/// ones.
fn monoids(n: usize, leq: &[bool]) -> Vec<Vec<Elem>> {
    let bound = |x: Elem, y: Elem, lower: bool| {
        let cands: Vec<Elem> = (0..n)
            .filter(|&z| {
                if lower {
                    leq[z * n + x] && leq[z * n + y]
                } else {
                    leq[x * n + z] && leq[y * n + z]
                }
            })
            .collect();
        *cands
            .iter()
            .find(|&&m| {
                cands.iter().all(|&z| {
                    if lower {
                        leq[z * n + m]
                    } else {
                        leq[m * n + z]
                    }
                })
            })
            .expect("lattice")
    };
    let mut meet = vec![0; n * n];
    let mut join = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            meet[x * n + y] = bound(x, y, true);
            join[x * n + y] = bound(x, y, false);
        }
    }
    let top = n - 1;
    let mut table = vec![None; n * n];
    for x in 0..n {
        for (a, b, v) in [(x, top, x), (top, x, x), (x, 0, 0), (0, x, 0)] {
            table[a * n + b] = Some(v);
        }
    }
    let cells = (1..top)
        .flat_map(|i| (i..top).map(move |j| (i, j)))
        .collect();
    let mut s = MonoidSearch {
        n,
        leq,
        meet,
        join,
        cells,
        table,
        out: Vec::new(),
    };
    s.fill(0);
    s.out
}

impl MonoidSearch<'_> {
    fn fill(&mut self, k: usize) {
        let n = self.n;
        let Some(&(i, j)) = self.cells.get(k) else {
            self.out
                .push(self.table.iter().map(|v| v.expect("filled")).collect());
            return;
        };
        for v in 0..n {
            if !self.leq[v * n + self.meet[i * n + j]] {
                continue;
            }
            self.table[i * n + j] = Some(v);
            self.table[j * n + i] = Some(v);
            if self.consistent() {
                self.fill(k + 1);
            }
        }
        self.table[i * n + j] = None;
        self.table[j * n + i] = None;
    }

    fn get(&self, x: Elem, y: Elem) -> Option<Elem> {
        self.table[x * self.n + y]
    }

    fn consistent(&self) -> bool {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let Some(xy) = self.get(x, y) else { continue };
                for z in 0..n {
                    if let Some(xz) = self.get(x, z) {
                        if self.leq[y * n + z] && !self.leq[xy * n + xz] {
                            return false;
                        }
                        if let Some(xyz) = self.get(x, self.join[y * n + z]) {
                            if xyz != self.join[xy * n + xz] {
                                return false;
                            }
                        }
                    }
                    if let (Some(l), Some(yz)) = (self.get(xy, z), self.get(y, z)) {
                        if let Some(r) = self.get(x, yz) {
                            if l != r {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtins as b;
    use crate::iso::find_isomorphism;

    #[test]
    fn small_sizes() {
        assert_eq!(enumerate_rls(1).unwrap().len(), 1);
        let two = enumerate_rls(2).unwrap();
        assert_eq!(two.len(), 1);
        assert!(find_isomorphism(&two[0].algebra, &b::boolean2()).is_some());
        let three = enumerate_rls(3).unwrap();
        for want in [b::lukasiewicz(3), b::godel(3)] {
            assert!(three
                .iter()
                .any(|e| find_isomorphism(&e.algebra, &want).is_some()));
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_rls(7),
            Err(CatalogError::LimitExceeded { size: 7, cap: 6 })
        ));
    }

    #[test]
    fn lattice_counts() {
        // Unlabelled lattices on 1..=6 elements.
        let counts: Vec<usize> = (1..=6).map(|n| lattices(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 5, 15]);
    }

    #[test]
    fn every_entry_validates() {
        for n in 1..=5 {
            for e in enumerate_rls(n).unwrap() {
                assert!(e.algebra.validate_rl().is_pass(), "{}", e.name);
            }
        }
    }
}
