//! Isomorphism search and canonical forms.
//!
//! Both prune by an element invariant built from the order (down/up-set
//! sizes, covers) and the constants, so only relabelings that respect the
//! invariant classes are ever explored.

use crate::algebra::{Elem, FiniteAlgebra};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Invariant {
    is_zero: bool,
    is_one: bool,
    below: usize,
    above: usize,
    lower_covers: usize,
    upper_covers: usize,
    idempotent: bool,
    square_below: usize,
    annihilators: usize,
}

fn invariants(a: &FiniteAlgebra) -> Vec<Invariant> {
    let n = a.size();
    let below: Vec<usize> = (0..n)
        .map(|x| (0..n).filter(|&y| a.leq(y, x)).count())
        .collect();
    let covers = |x: Elem, y: Elem| {
        x != y && a.leq(x, y) && (0..n).all(|z| z == x || z == y || !(a.leq(x, z) && a.leq(z, y)))
    };
    (0..n)
        .map(|x| Invariant {
            is_zero: x == a.zero(),
            is_one: x == a.one(),
            below: below[x],
            above: (0..n).filter(|&y| a.leq(x, y)).count(),
            lower_covers: (0..n).filter(|&y| covers(y, x)).count(),
            upper_covers: (0..n).filter(|&y| covers(x, y)).count(),
            idempotent: a.times(x, x) == x,
            square_below: below[a.times(x, x)],
            annihilators: (0..n).filter(|&y| a.times(x, y) == a.zero()).count(),
        })
        .collect()
}

const OPS: [fn(&FiniteAlgebra, Elem, Elem) -> Elem; 4] = [
    FiniteAlgebra::meet,
    FiniteAlgebra::join,
    FiniteAlgebra::times,
    FiniteAlgebra::imp,
];

/// Find a bijection `f : a → b` commuting with every table and constant.
///
/// Deterministic: elements of `a` are assigned in increasing order and
/// candidates tried in increasing order, with forced values propagated
/// through the tables. The first complete assignment is returned.
pub fn find_isomorphism(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Option<Vec<Elem>> {
    let n = a.size();
    if n != b.size() {
        return None;
    }
    let inv_a = invariants(a);
    let inv_b = invariants(b);
    let mut sa = inv_a.clone();
    let mut sb = inv_b.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return None;
    }
    let mut search = IsoSearch { a, b, inv_a, inv_b };
    let mut state = State {
        map: vec![None; n],
        used: vec![false; n],
    };
    if !search.assign(&mut state, a.zero(), b.zero())
        || !search.assign(&mut state, a.one(), b.one())
    {
        return None;
    }
    search.solve(state)
}

#[derive(Clone)]
struct State {
    map: Vec<Option<Elem>>,
    used: Vec<bool>,
}

struct IsoSearch<'a> {
    a: &'a FiniteAlgebra,
    b: &'a FiniteAlgebra,
    inv_a: Vec<Invariant>,
    inv_b: Vec<Invariant>,
}

impl IsoSearch<'_> {
    /// Assign `x ↦ y` and propagate consequences; false on conflict.
    fn assign(&self, st: &mut State, x: Elem, y: Elem) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            match st.map[x] {
                Some(z) if z == y => continue,
                Some(_) => return false,
                None => {}
            }
            if st.used[y] || self.inv_a[x] != self.inv_b[y] {
                return false;
            }
            st.map[x] = Some(y);
            st.used[y] = true;
            for u in 0..st.map.len() {
                let Some(v) = st.map[u] else { continue };
                for op in OPS {
                    queue.push((op(self.a, x, u), op(self.b, y, v)));
                    queue.push((op(self.a, u, x), op(self.b, v, y)));
                }
            }
        }
        true
    }

    fn solve(&mut self, st: State) -> Option<Vec<Elem>> {
        let Some(next) = st.map.iter().position(Option::is_none) else {
            let map: Vec<Elem> = st.map.iter().map(|m| m.unwrap()).collect();
            return self.verify(&map).then_some(map);
        };
        for cand in 0..st.used.len() {
            if st.used[cand] || self.inv_a[next] != self.inv_b[cand] {
                continue;
            }
            let mut branch = st.clone();
            if self.assign(&mut branch, next, cand) {
                if let Some(found) = self.solve(branch) {
                    return Some(found);
                }
            }
        }
        None
    }

    fn verify(&self, f: &[Elem]) -> bool {
        let n = f.len();
        f[self.a.zero()] == self.b.zero()
            && f[self.a.one()] == self.b.one()
            && (0..n).all(|x| {
                (0..n).all(|y| {
                    OPS.iter()
                        .all(|op| f[op(self.a, x, y)] == op(self.b, f[x], f[y]))
                })
            })
    }
}

/// Check that `f` is an isomorphism from `a` onto `b`.
pub fn is_isomorphism(a: &FiniteAlgebra, b: &FiniteAlgebra, f: &[Elem]) -> bool {
    let n = a.size();
    if f.len() != n || b.size() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &y in f {
        if y >= n || seen[y] {
            return false;
        }
        seen[y] = true;
    }
    IsoSearch {
        a,
        b,
        inv_a: Vec::new(),
        inv_b: Vec::new(),
    }
    .verify(f)
}

/// Isomorphism-invariant key: the lexicographically least serialization of
/// the tables over all relabelings that respect the invariant classes.
pub fn canonical_form(a: &FiniteAlgebra) -> Vec<u16> {
    let n = a.size();
    let inv = invariants(a);
    let mut order: Vec<Elem> = (0..n).collect();
    order.sort_by(|&x, &y| inv[x].cmp(&inv[y]));
    // Block boundaries of equal invariants in sorted order.
    let mut blocks: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || inv[order[i]] != inv[order[start]] {
            blocks.push((start, i));
            start = i;
        }
    }
    let mut best: Option<Vec<u16>> = None;
    let mut label = vec![0usize; n];
    relabelings(&blocks, &order, &mut label, 0, &mut |label| {
        let key = serialize(a, label);
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
    });
    best.unwrap_or_default()
}

fn relabelings(
    blocks: &[(usize, usize)],
    order: &[Elem],
    label: &mut Vec<usize>,
    block: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    let Some(&(lo, hi)) = blocks.get(block) else {
        visit(label);
        return;
    };
    let mut members: Vec<Elem> = order[lo..hi].to_vec();
    permute(&mut members, 0, &mut |perm| {
        for (i, &x) in perm.iter().enumerate() {
            label[x] = lo + i;
        }
        relabelings(blocks, order, label, block + 1, visit);
    });
}

fn permute(items: &mut [Elem], k: usize, visit: &mut impl FnMut(&[Elem])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

fn serialize(a: &FiniteAlgebra, label: &[usize]) -> Vec<u16> {
    let n = a.size();
    let mut inv = vec![0; n];
    for (x, &l) in label.iter().enumerate() {
        inv[l] = x;
    }
    let mut key = Vec::with_capacity(2 + 4 * n * n);
    key.push(n as u16);
    key.push(label[a.zero()] as u16);
    key.push(label[a.one()] as u16);
    for op in OPS {
        for p in 0..n {
            for q in 0..n {
                key.push(label[op(a, inv[p], inv[q])] as u16);
            }
        }
    }
    key
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtins as b;

    #[test]
    fn identity_on_self() {
        let l3 = b::lukasiewicz(3);
        assert_eq!(find_isomorphism(&l3, &l3), Some(vec![0, 1, 2]));
    }

    #[test]
    fn size_mismatch_is_absent() {
        assert_eq!(find_isomorphism(&b::boolean2(), &b::lukasiewicz(3)), None);
    }

    #[test]
    fn relabeled_copy_is_found() {
        let l3 = b::lukasiewicz(3);
        let perm = [2, 0, 1];
        let p = l3.permuted(&perm);
        assert_eq!(find_isomorphism(&l3, &p), Some(perm.to_vec()));
        // and the inverse permutation the other way
        assert_eq!(find_isomorphism(&p, &l3), Some(vec![1, 2, 0]));
    }

    #[test]
    fn lukasiewicz_and_godel_differ() {
        assert_eq!(find_isomorphism(&b::lukasiewicz(3), &b::godel(3)), None);
        assert_ne!(
            canonical_form(&b::lukasiewicz(3)),
            canonical_form(&b::godel(3))
        );
    }

    #[test]
    fn boolean_four_has_nontrivial_automorphism() {
        let b4 = b::boolean4();
        let swap: Vec<Elem> = (0..4)
            .map(|x| match x {
                1 => 2,
                2 => 1,
                x => x,
            })
            .collect();
        assert!(is_isomorphism(&b4, &b4, &swap));
        assert_eq!(canonical_form(&b4), canonical_form(&b4.permuted(&swap)));
    }
}
