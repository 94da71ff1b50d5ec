//! Shared fixtures for the benchmarks.

use reslat_core::catalog::{builtin, standard_catalog};
use reslat_core::terms::random::{sample_cd, TermShape};
use reslat_core::{FiniteAlgebra, QuantifierPair, TermCD};

/// A builtin algebra by name.
pub fn algebra(name: &str) -> FiniteAlgebra {
    builtin(name)
        .unwrap_or_else(|| panic!("no builtin `{name}`"))
        .algebra
}

/// Every `(L, q)` with `|L| <= max`.
pub fn monadic_pairs(max: usize) -> Vec<(FiniteAlgebra, QuantifierPair)> {
    standard_catalog(max)
        .expect("sizes within the cap")
        .into_iter()
        .flat_map(|e| {
            let a = e.algebra;
            e.quantifiers.into_iter().map(move |q| (a.clone(), q))
        })
        .collect()
}

/// A fixed sample of c-differential terms of depth at most 4 over three
/// variables.
pub fn sample_terms(count: usize) -> Vec<TermCD> {
    sample_cd(20240601, &TermShape::default(), count)
}
