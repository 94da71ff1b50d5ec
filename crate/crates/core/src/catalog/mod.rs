//! Catalogs of small residuated lattices: built-in families, exhaustive
//! enumeration up to isomorphism, and JSON persistence.

pub mod builtins;
mod enumerate;
mod persist;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{ClassificationFlags, FiniteAlgebra};
use crate::iso::canonical_form;
use crate::monadic::{enumerate_monadic, QuantifierPair};
use crate::schema::SchemaError;

pub use enumerate::{enumerate_rls, enumerate_rls_with_cap, DEFAULT_SIZE_CAP};
pub use persist::{load, save};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("enumeration of size {size} exceeds the cap {cap}")]
    LimitExceeded { size: usize, cap: usize },
    #[error(transparent)]
    Schema(#[from] SchemaError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Builtin,
    Enumerated,
    Loaded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: FiniteAlgebra,
    pub flags: ClassificationFlags,
    pub quantifiers: Vec<QuantifierPair>,
    pub provenance: Provenance,
    /// Other names under which an isomorphic copy was offered.
    pub aliases: Vec<String>,
}

impl CatalogEntry {
    /// Classify the algebra and enumerate its quantifier pairs.
    pub fn new(algebra: FiniteAlgebra, provenance: Provenance) -> Self {
        let flags = algebra.classify();
        let quantifiers = enumerate_monadic(&algebra);
        CatalogEntry {
            name: algebra.name().to_string(),
            algebra,
            flags,
            quantifiers,
            provenance,
            aliases: Vec::new(),
        }
    }

    pub fn size(&self) -> usize {
        self.algebra.size()
    }

    /// Whether stored flags and quantifiers match recomputation.
    pub fn is_consistent(&self) -> bool {
        self.flags == self.algebra.classify()
            && self.quantifiers == enumerate_monadic(&self.algebra)
    }
}

/// A collection of pairwise non-isomorphic entries.
#[derive(Clone, Debug, Default)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
    keys: HashMap<Vec<u16>, usize>,
}

impl Catalog {
    pub fn new() -> Self {
        Self::default()
    }

    /// Add an entry unless an isomorphic one is present, in which case the
    /// new name is recorded as an alias. Returns whether it was added.
    pub fn insert(&mut self, entry: CatalogEntry) -> bool {
        let key = canonical_form(&entry.algebra);
        if let Some(&i) = self.keys.get(&key) {
            let existing = &mut self.entries[i];
            if existing.name != entry.name && !existing.aliases.contains(&entry.name) {
                existing.aliases.push(entry.name);
            }
            return false;
        }
        self.keys.insert(key, self.entries.len());
        self.entries.push(entry);
        true
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<CatalogEntry> {
        self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries
            .iter()
            .find(|e| e.name == name || e.aliases.iter().any(|a| a == name))
    }
}

impl FromIterator<CatalogEntry> for Catalog {
    fn from_iter<I: IntoIterator<Item = CatalogEntry>>(iter: I) -> Self {
        let mut c = Catalog::new();
        for e in iter {
            c.insert(e);
        }
        c
    }
}

/// The built-in algebras, deduplicated up to isomorphism.
pub fn builtins() -> Vec<CatalogEntry> {
    use builtins::*;
    let mut algebras = vec![trivial(), boolean2(), boolean4(), boolean8()];
    algebras.extend((2..=8).map(lukasiewicz));
    algebras.extend((3..=8).map(godel));
    algebras.extend((4..=6).map(nilpotent_minimum));
    algebras.push(boolean2().product(&lukasiewicz(3)));
    algebras.push(boolean2().product(&godel(3)));
    algebras.push(boolean2().product(&lukasiewicz(4)));
    algebras
        .into_iter()
        .map(|a| CatalogEntry::new(a, Provenance::Builtin))
        .collect::<Catalog>()
        .into_entries()
}

/// Builtins of size at most `max` followed by every enumerated algebra of
/// size at most `min(max, DEFAULT_SIZE_CAP)`, deduplicated up to
/// isomorphism.
pub fn standard_catalog(max: usize) -> Result<Vec<CatalogEntry>, CatalogError> {
    let mut catalog: Catalog = builtins().into_iter().filter(|e| e.size() <= max).collect();
    for n in 1..=max.min(DEFAULT_SIZE_CAP) {
        for e in enumerate_rls(n)? {
            catalog.insert(e);
        }
    }
    Ok(catalog.into_entries())
}

/// Look up a builtin by name or alias.
pub fn builtin(name: &str) -> Option<CatalogEntry> {
    builtins()
        .into_iter()
        .find(|e| e.name == name || e.aliases.iter().any(|a| a == name))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::find_isomorphism;

    #[test]
    fn builtin_flags() {
        let all = builtins();
        let by = |n: &str| all.iter().find(|e| e.name == n).unwrap();
        assert!(by("L3").flags.is_mv);
        assert!(!by("G4").flags.is_involutive);
        let one = by("1").flags;
        assert!(one.is_mv && one.is_rdl && one.is_divisible && one.is_prelinear);
    }

    #[test]
    fn lukasiewicz_two_is_an_alias_of_boolean_two() {
        let all = builtins();
        let b2 = all.iter().find(|e| e.name == "B2").unwrap();
        assert_eq!(b2.aliases, vec!["L2".to_string()]);
        assert!(all.iter().all(|e| e.name != "L2"));
        assert!(builtin("L2").is_some());
    }

    #[test]
    fn builtins_pairwise_non_isomorphic() {
        let all = builtins();
        for (i, a) in all.iter().enumerate() {
            assert!(a.algebra.validate().is_pass());
            for b in &all[i + 1..] {
                assert!(find_isomorphism(&a.algebra, &b.algebra).is_none());
            }
        }
    }

    #[test]
    fn standard_catalog_keeps_builtin_names() {
        let cat = standard_catalog(4).unwrap();
        assert_eq!(cat.len(), 1 + 1 + 2 + 7);
        assert!(cat.iter().any(|e| e.name == "L3"));
        assert!(cat.iter().all(|e| e.size() <= 4));
    }

    #[test]
    fn entries_are_consistent() {
        assert!(builtins().iter().all(CatalogEntry::is_consistent));
    }
}
