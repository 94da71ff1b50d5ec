//! Independent brute-force oracles shared by the integration tests.
//!
//! Nothing here calls the search or closure routines under test; each
//! oracle works directly from the operation tables.

#![allow(dead_code)]

use std::collections::BTreeSet;

use reslat_core::catalog::{builtins, enumerate_rls};
use reslat_core::{Catalog, CatalogEntry, Elem, FiniteAlgebra, QuantifierPair};

/// Builtins of size at most `max` together with every enumerated algebra of
/// size at most `min(max, 6)`, deduplicated up to isomorphism.
pub fn catalog_up_to(max: usize) -> Vec<CatalogEntry> {
    let mut entries: Vec<CatalogEntry> =
        builtins().into_iter().filter(|e| e.size() <= max).collect();
    for n in 1..=max.min(6) {
        entries.extend(enumerate_rls(n).expect("within cap"));
    }
    entries.into_iter().collect::<Catalog>().into_entries()
}

/// Every `(L, q)` with `L` a distributive catalog algebra of size at most
/// `max`.
pub fn rdl_pairs(max: usize) -> Vec<(FiniteAlgebra, QuantifierPair)> {
    catalog_up_to(max)
        .into_iter()
        .filter(|e| e.flags.is_rdl)
        .flat_map(|e| {
            let a = e.algebra;
            e.quantifiers.into_iter().map(move |q| (a.clone(), q))
        })
        .collect()
}

/// `{(x, y) : x ⊙ y = 0}` in lexicographic order.
pub fn kalman_pairs(l: &FiniteAlgebra) -> Vec<(Elem, Elem)> {
    let mut out = Vec::new();
    for x in l.elements() {
        for y in l.elements() {
            if l.times(x, y) == l.zero() {
                out.push((x, y));
            }
        }
    }
    out
}

/// All maps `{0..n} → {0..n}` as vectors, in lexicographic order.
pub fn all_maps(n: usize) -> Vec<Vec<Elem>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|m| {
                (0..n).map(move |v| {
                    let mut m = m.clone();
                    m.push(v);
                    m
                })
            })
            .collect();
    }
    out
}

/// Whether `(b, d)` satisfies all seven monadic axioms, written out
/// directly from their statements.
pub fn is_monadic_pair(a: &FiniteAlgebra, b: &[Elem], d: &[Elem]) -> bool {
    let els: Vec<Elem> = a.elements().collect();
    let m1 = els.iter().all(|&x| a.leq(b[x], x));
    let m2 = els.iter().all(|&x| b[d[x]] == d[x]);
    let m4 = b[a.zero()] == a.zero();
    let m5 = b[a.one()] == a.one();
    m1 && m2
        && m4
        && m5
        && els.iter().all(|&x| {
            els.iter().all(|&y| {
                b[a.meet(x, y)] == a.meet(b[x], b[y])
                    && b[a.imp(x, b[y])] == a.imp(d[x], b[y])
                    && b[a.imp(b[x], y)] == a.imp(b[x], b[y])
            })
        })
}

/// Every monadic pair, by trying all `n^n × n^n` candidate maps.
pub fn naive_quantifier_pairs(a: &FiniteAlgebra) -> BTreeSet<(Vec<Elem>, Vec<Elem>)> {
    let maps = all_maps(a.size());
    let mut out = BTreeSet::new();
    for b in &maps {
        // cheap necessary condition before the inner loop
        if !a.elements().all(|x| a.leq(b[x], x)) {
            continue;
        }
        for d in &maps {
            if is_monadic_pair(a, b, d) {
                out.insert((b.clone(), d.clone()));
            }
        }
    }
    out
}

/// All set partitions of `0..n` as block labels (restricted growth strings).
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for l in 0..=max {
            cur.push(l);
            go(n, cur, max.max(l + 1), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), 0, &mut out);
    out
}

/// Whether a labelling is compatible with the four binary operations.
pub fn labels_compatible(a: &FiniteAlgebra, labels: &[usize]) -> bool {
    let ops: [fn(&FiniteAlgebra, Elem, Elem) -> Elem; 4] = [
        FiniteAlgebra::meet,
        FiniteAlgebra::join,
        FiniteAlgebra::times,
        FiniteAlgebra::imp,
    ];
    let n = a.size();
    (0..n).all(|x| {
        (0..n).all(|y| {
            labels[x] != labels[y]
                || (0..n).all(|z| {
                    ops.iter().all(|op| {
                        labels[op(a, x, z)] == labels[op(a, y, z)]
                            && labels[op(a, z, x)] == labels[op(a, z, y)]
                    })
                })
        })
    })
}

/// Every partition of the carrier compatible with the operations.
pub fn compatible_partitions(a: &FiniteAlgebra) -> Vec<Vec<usize>> {
    set_partitions(a.size())
        .into_iter()
        .filter(|labels| labels_compatible(a, labels))
        .collect()
}

/// The smallest congruence relating `x` and `y`, as the intersection of
/// every compatible partition that relates them. Returned as sorted blocks.
pub fn naive_congruence(partitions: &[Vec<usize>], n: usize, x: Elem, y: Elem) -> Vec<Vec<Elem>> {
    let mut related = vec![vec![true; n]; n];
    for labels in partitions.iter().filter(|l| l[x] == l[y]) {
        for p in 0..n {
            for q in 0..n {
                if labels[p] != labels[q] {
                    related[p][q] = false;
                }
            }
        }
    }
    let mut blocks: Vec<Vec<Elem>> = Vec::new();
    let mut placed = vec![false; n];
    for p in 0..n {
        if placed[p] {
            continue;
        }
        let block: Vec<Elem> = (0..n).filter(|&q| related[p][q]).collect();
        for &q in &block {
            placed[q] = true;
        }
        blocks.push(block);
    }
    blocks
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Least serialization of the order and product over all `n!` relabelings.
pub fn brute_canonical(n: usize, leq: &[bool], times: &[Elem]) -> Vec<usize> {
    permutations(n)
        .into_iter()
        .map(|p| {
            let mut key = vec![0; 2 * n * n];
            for x in 0..n {
                for y in 0..n {
                    key[p[x] * n + p[y]] = leq[x * n + y] as usize;
                    key[n * n + p[x] * n + p[y]] = p[times[x * n + y]];
                }
            }
            key
        })
        .min()
        .unwrap_or_default()
}

/// The same key computed from an algebra.
pub fn algebra_key(a: &FiniteAlgebra) -> Vec<usize> {
    let n = a.size();
    let leq: Vec<bool> = (0..n * n).map(|i| a.leq(i / n, i % n)).collect();
    let times: Vec<Elem> = (0..n * n).map(|i| a.times(i / n, i % n)).collect();
    brute_canonical(n, &leq, &times)
}

/// Every residuated lattice on `n` elements up to isomorphism, by
/// generating every order with bottom `0` and top `n−1`, every product
/// table with the forced unit and zero rows, filtering, and keying on
/// [`brute_canonical`].
pub fn naive_rl_keys(n: usize) -> BTreeSet<Vec<usize>> {
    let mut keys = BTreeSet::new();
    if n == 1 {
        keys.insert(brute_canonical(1, &[true], &[0]));
        return keys;
    }
    let top = n - 1;
    let free_pairs: Vec<(Elem, Elem)> = (1..top)
        .flat_map(|i| (1..top).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    for mask in 0u64..(1 << free_pairs.len()) {
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
            leq[x] = true;
            leq[x * n + top] = true;
        }
        for (b, &(i, j)) in free_pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                leq[i * n + j] = true;
            }
        }
        if !is_lattice_order(n, &leq) {
            continue;
        }
        let free_cells: Vec<(Elem, Elem)> = (1..top)
            .flat_map(|i| (1..top).map(move |j| (i, j)))
            .collect();
        let total = n.pow(free_cells.len() as u32);
        for code in 0..total {
            let mut times = vec![0; n * n];
            for x in 0..n {
                times[x * n + top] = x;
                times[top * n + x] = x;
            }
            let mut c = code;
            for &(i, j) in &free_cells {
                times[i * n + j] = c % n;
                c /= n;
            }
            if is_residuated_monoid(n, &leq, &times) {
                keys.insert(brute_canonical(n, &leq, &times));
            }
        }
    }
    keys
}

fn is_lattice_order(n: usize, leq: &[bool]) -> bool {
    let le = |x: usize, y: usize| leq[x * n + y];
    let partial = (0..n).all(|x| {
        (0..n).all(|y| {
            (x == y || !(le(x, y) && le(y, x)))
                && (0..n).all(|z| !(le(x, y) && le(y, z)) || le(x, z))
        })
    });
    partial
        && (0..n).all(|x| {
            (0..n).all(|y| {
                let lower: Vec<usize> = (0..n).filter(|&z| le(z, x) && le(z, y)).collect();
                let upper: Vec<usize> = (0..n).filter(|&z| le(x, z) && le(y, z)).collect();
                lower.iter().any(|&m| lower.iter().all(|&z| le(z, m)))
                    && upper.iter().any(|&j| upper.iter().all(|&z| le(j, z)))
            })
        })
}

/// Commutative, associative, and residuated: for all `x, y` the set
/// `{z : z ⊙ x ≤ y}` has a greatest element and is a down-set.
fn is_residuated_monoid(n: usize, leq: &[bool], times: &[Elem]) -> bool {
    let le = |x: usize, y: usize| leq[x * n + y];
    let t = |x: usize, y: usize| times[x * n + y];
    for x in 0..n {
        for y in 0..n {
            if t(x, y) != t(y, x) {
                return false;
            }
            for z in 0..n {
                if t(t(x, y), z) != t(x, t(y, z)) {
                    return false;
                }
            }
        }
    }
    (0..n).all(|x| {
        (0..n).all(|y| {
            let ok: Vec<usize> = (0..n).filter(|&z| le(t(z, x), y)).collect();
            match ok.iter().copied().find(|&m| ok.iter().all(|&z| le(z, m))) {
                Some(m) => (0..n).all(|z| le(z, m) == ok.contains(&z)),
                None => false,
            }
        })
    })
}
