//! Selecting algebras and quantifier pairs from the command line.

use std::path::PathBuf;

use clap::Args;

use reslat_core::catalog::{builtin, load, standard_catalog};
use reslat_core::schema::{doc_to_algebra, doc_to_view, parse_doc, read_text};
use reslat_core::{CDiffView, CatalogEntry, FiniteAlgebra, Provenance, QuantifierPair};

use crate::CliError;

#[derive(Args, Debug, Clone)]
#[group(id = "source", required = true, multiple = false)]
pub struct Source {
    /// JSON file holding one algebra or one c-differential view
    #[arg(long, value_name = "PATH")]
    pub algebra: Option<PathBuf>,
    /// JSON file holding an array of algebras
    #[arg(long, value_name = "PATH")]
    pub catalog: Option<PathBuf>,
    /// A built-in algebra by name (B2, B4, B8, L2..L8, G3..G8, NM4..NM6, 1, ...)
    #[arg(long, value_name = "NAME")]
    pub builtin: Option<String>,
    /// Builtins of size <= N together with every enumerated residuated
    /// lattice of size <= min(N, 6)
    #[arg(long, value_name = "N")]
    pub standard: Option<usize>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Filter {
    /// Keep only algebras with a distributive lattice reduct
    #[arg(long)]
    pub distributive: bool,
}

/// What a source resolved to.
pub enum Loaded {
    Entries(Vec<CatalogEntry>),
    View(CDiffView),
}

impl Source {
    pub fn load(&self, filter: &Filter) -> Result<Loaded, CliError> {
        let entries = if let Some(path) = &self.algebra {
            let doc = parse_doc(&read_text(path)?)?;
            let label = doc.label(None);
            if doc.is_view() {
                return Ok(Loaded::View(doc_to_view(&doc, &label)?));
            }
            let a = doc_to_algebra(&doc, &label, false)?;
            vec![CatalogEntry::new(a, Provenance::Loaded)]
        } else if let Some(path) = &self.catalog {
            load(path)?
        } else if let Some(name) = &self.builtin {
            vec![builtin(name)
                .ok_or_else(|| CliError::Usage(format!("no builtin named `{name}`")))?]
        } else if let Some(n) = self.standard {
            standard_catalog(n)?
        } else {
            return Err(CliError::Usage("no algebra source given".into()));
        };
        Ok(Loaded::Entries(
            entries
                .into_iter()
                .filter(|e| !filter.distributive || e.flags.is_distributive)
                .collect(),
        ))
    }

    /// Algebras only; a view is a usage error.
    pub fn entries(&self, filter: &Filter, command: &str) -> Result<Vec<CatalogEntry>, CliError> {
        match self.load(filter)? {
            Loaded::Entries(e) => Ok(e),
            Loaded::View(_) => Err(CliError::Usage(format!(
                "`{command}` needs an algebra, not a c-differential view"
            ))),
        }
    }
}

#[derive(Args, Debug, Clone, Default)]
pub struct QuantifierChoice {
    /// Use only the K-th quantifier pair (0-based, in enumeration order)
    #[arg(long, value_name = "K", conflicts_with = "all_quantifiers")]
    pub quantifier_index: Option<usize>,
    /// Use every quantifier pair
    #[arg(long)]
    pub all_quantifiers: bool,
}

impl QuantifierChoice {
    pub fn is_given(&self) -> bool {
        self.quantifier_index.is_some() || self.all_quantifiers
    }

    /// `(index, pair)` for the chosen pairs of one entry; all pairs unless
    /// an index was given.
    pub fn select(&self, e: &CatalogEntry) -> Result<Vec<(usize, QuantifierPair)>, CliError> {
        match self.quantifier_index {
            Some(k) => e
                .quantifiers
                .get(k)
                .map(|q| vec![(k, q.clone())])
                .ok_or_else(|| {
                    CliError::Usage(format!(
                        "{} has {} quantifier pairs; index {k} is out of range",
                        e.name,
                        e.quantifiers.len()
                    ))
                }),
            None => Ok(e.quantifiers.iter().cloned().enumerate().collect()),
        }
    }
}

/// Every chosen `(entry name, index, L, q)`.
pub fn pairs(
    entries: &[CatalogEntry],
    choice: &QuantifierChoice,
) -> Result<Vec<(String, usize, FiniteAlgebra, QuantifierPair)>, CliError> {
    let mut out = Vec::new();
    for e in entries {
        for (k, q) in choice.select(e)? {
            out.push((e.name.clone(), k, e.algebra.clone(), q));
        }
    }
    Ok(out)
}
