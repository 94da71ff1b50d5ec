//! The JSON file format for algebras, catalog entries and c-differential
//! views, with load-time validation that reports table coordinates.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, ClassificationFlags, Elem, FiniteAlgebra, RawTables};
use crate::catalog::{CatalogEntry, Provenance};
use crate::kalman::CDiffView;
use crate::monadic::{check_monadic_rl, enumerate_monadic, QuantifierPair};
use crate::report::AxiomReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemaError {
    #[error("invalid JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{entry}: table `{table}` row {row}, column {column}: {reason}")]
    Table {
        entry: String,
        table: String,
        row: usize,
        column: usize,
        reason: String,
    },
    #[error("{entry}: field `{field}`: {reason}")]
    Field {
        entry: String,
        field: String,
        reason: String,
    },
    #[error("{entry}: axiom `{axiom}` fails at {witness:?}")]
    Axiom {
        entry: String,
        axiom: String,
        witness: Vec<Elem>,
    },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

/// One algebra as stored on disk. Tables are kept signed so that negative
/// entries are reported with coordinates instead of a parse failure.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub size: i64,
    pub meet: Vec<Vec<i64>>,
    pub join: Vec<Vec<i64>>,
    pub times: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub imp: Option<Vec<Vec<i64>>>,
    pub zero: i64,
    pub one: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flags: Option<ClassificationFlags>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quantifiers: Option<Vec<QuantifierPair>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub aliases: Option<Vec<String>>,
    /// Involution of a c-differential view.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inv: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center_box: Option<Vec<i64>>,
}

impl AlgebraDoc {
    /// Label used in error messages.
    pub fn label(&self, index: Option<usize>) -> String {
        match (&self.name, index) {
            (Some(n), _) => n.clone(),
            (None, Some(i)) => format!("entry {i}"),
            (None, None) => "algebra".into(),
        }
    }

    pub fn is_view(&self) -> bool {
        self.inv.is_some() || self.center.is_some()
    }
}

fn json_error(e: serde_json::Error) -> SchemaError {
    SchemaError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

fn field(entry: &str, field: &str, reason: impl Into<String>) -> SchemaError {
    SchemaError::Field {
        entry: entry.to_string(),
        field: field.to_string(),
        reason: reason.into(),
    }
}

fn index(entry: &str, name: &str, value: i64, size: usize) -> Result<Elem, SchemaError> {
    if value < 0 || value as u64 >= size as u64 {
        return Err(field(
            entry,
            name,
            format!("{value} is not an element index below {size}"),
        ));
    }
    Ok(value as Elem)
}

fn vector(entry: &str, name: &str, values: &[i64], size: usize) -> Result<Vec<Elem>, SchemaError> {
    if values.len() != size {
        return Err(field(
            entry,
            name,
            format!("expected {size} entries, found {}", values.len()),
        ));
    }
    values
        .iter()
        .enumerate()
        .map(|(i, &v)| index(entry, &format!("{name}[{i}]"), v, size))
        .collect()
}

fn table(
    entry: &str,
    name: &str,
    rows: &[Vec<i64>],
    size: usize,
) -> Result<Vec<Vec<usize>>, SchemaError> {
    let err = |row: usize, column: usize, reason: String| SchemaError::Table {
        entry: entry.to_string(),
        table: name.to_string(),
        row,
        column,
        reason,
    };
    if rows.len() != size {
        return Err(err(
            rows.len().min(size),
            0,
            format!("expected {size} rows, found {}", rows.len()),
        ));
    }
    let mut out = Vec::with_capacity(size);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != size {
            return Err(err(
                r,
                row.len().min(size),
                format!("expected {size} columns, found {}", row.len()),
            ));
        }
        let mut cells = Vec::with_capacity(size);
        for (c, &v) in row.iter().enumerate() {
            if v < 0 || v as u64 >= size as u64 {
                return Err(err(
                    r,
                    c,
                    format!("entry {v} is not an element index below {size}"),
                ));
            }
            cells.push(v as usize);
        }
        out.push(cells);
    }
    Ok(out)
}

fn first_violation(entry: &str, report: &AxiomReport) -> Result<(), SchemaError> {
    match report.violations.first() {
        None => Ok(()),
        Some(v) => Err(SchemaError::Axiom {
            entry: entry.to_string(),
            axiom: v.axiom.clone(),
            witness: v.witness.clone(),
        }),
    }
}

/// Build and validate the algebra of a document. `residuated` also
/// requires integrality and a bottom zero.
pub fn doc_to_algebra(
    doc: &AlgebraDoc,
    entry: &str,
    residuated: bool,
) -> Result<FiniteAlgebra, SchemaError> {
    if doc.size <= 0 {
        return Err(field(entry, "size", "must be positive"));
    }
    let n = doc.size as usize;
    let raw = RawTables {
        size: n,
        meet: table(entry, "meet", &doc.meet, n)?,
        join: table(entry, "join", &doc.join, n)?,
        times: table(entry, "times", &doc.times, n)?,
        imp: doc
            .imp
            .as_ref()
            .map(|t| table(entry, "imp", t, n))
            .transpose()?,
        zero: index(entry, "zero", doc.zero, n)?,
        one: index(entry, "one", doc.one, n)?,
    };
    let name = doc.name.clone().unwrap_or_else(|| entry.to_string());
    let algebra = FiniteAlgebra::from_tables(name, &raw).map_err(|e| match e {
        AlgebraError::ResiduationUndefined { x, y } => SchemaError::Axiom {
            entry: entry.to_string(),
            axiom: "residuation".into(),
            witness: vec![x, y],
        },
        AlgebraError::MalformedTable {
            table,
            row,
            column,
            reason,
        } => SchemaError::Table {
            entry: entry.to_string(),
            table: table.into(),
            row,
            column,
            reason,
        },
        other => field(entry, "size", other.to_string()),
    })?;
    let report = if residuated {
        algebra.validate_rl()
    } else {
        algebra.validate()
    };
    first_violation(entry, &report)?;
    Ok(algebra)
}

fn rows(t: &crate::algebra::Table) -> Vec<Vec<i64>> {
    t.rows()
        .into_iter()
        .map(|r| r.into_iter().map(|v| v as i64).collect())
        .collect()
}

fn ints(v: &[Elem]) -> Vec<i64> {
    v.iter().map(|&x| x as i64).collect()
}

/// The document of an algebra; the residual is always written out.
pub fn algebra_to_doc(a: &FiniteAlgebra) -> AlgebraDoc {
    AlgebraDoc {
        name: Some(a.name().to_string()),
        size: a.size() as i64,
        meet: rows(a.meet_table()),
        join: rows(a.join_table()),
        times: rows(a.times_table()),
        imp: Some(rows(a.imp_table())),
        zero: a.zero() as i64,
        one: a.one() as i64,
        ..AlgebraDoc::default()
    }
}

pub fn entry_to_doc(e: &CatalogEntry) -> AlgebraDoc {
    AlgebraDoc {
        name: Some(e.name.clone()),
        flags: Some(e.flags),
        quantifiers: Some(e.quantifiers.clone()),
        provenance: Some(e.provenance),
        aliases: (!e.aliases.is_empty()).then(|| e.aliases.clone()),
        ..algebra_to_doc(&e.algebra)
    }
}

/// Rebuild a catalog entry, re-validating the tables and checking stored
/// flags and quantifiers against recomputation.
pub fn doc_to_entry(doc: &AlgebraDoc, index: Option<usize>) -> Result<CatalogEntry, SchemaError> {
    let entry = doc.label(index);
    let algebra = doc_to_algebra(doc, &entry, true)?;
    let flags = algebra.classify();
    if let Some(stored) = doc.flags {
        if stored != flags {
            return Err(field(
                &entry,
                "flags",
                format!("stored {stored:?} but recomputed {flags:?}"),
            ));
        }
    }
    let quantifiers = enumerate_monadic(&algebra);
    if let Some(stored) = &doc.quantifiers {
        for (i, q) in stored.iter().enumerate() {
            let report = check_monadic_rl(&algebra, q)
                .map_err(|e| field(&entry, &format!("quantifiers[{i}]"), e.to_string()))?;
            first_violation(&format!("{entry} quantifiers[{i}]"), &report)?;
        }
        let mut sorted = stored.clone();
        sorted.sort();
        sorted.dedup();
        if sorted != quantifiers {
            return Err(field(
                &entry,
                "quantifiers",
                format!(
                    "{} stored pairs but {} pairs exist",
                    stored.len(),
                    quantifiers.len()
                ),
            ));
        }
    }
    Ok(CatalogEntry {
        name: algebra.name().to_string(),
        algebra,
        flags,
        quantifiers,
        provenance: doc.provenance.unwrap_or(Provenance::Loaded),
        aliases: doc.aliases.clone().unwrap_or_default(),
    })
}

/// A c-differential view: the algebra plus `inv`, `center` and an
/// optional `center_box`.
pub fn doc_to_view(doc: &AlgebraDoc, entry: &str) -> Result<CDiffView, SchemaError> {
    let algebra = doc_to_algebra(doc, entry, false)?;
    let n = algebra.size();
    let inv = vector(
        entry,
        "inv",
        doc.inv
            .as_deref()
            .ok_or_else(|| field(entry, "inv", "missing"))?,
        n,
    )?;
    let center = index(
        entry,
        "center",
        doc.center
            .ok_or_else(|| field(entry, "center", "missing"))?,
        n,
    )?;
    let mut view = CDiffView::new(algebra, inv, center);
    if let Some(bx) = &doc.center_box {
        view = view.with_center_box(vector(entry, "center_box", bx, n)?);
    }
    Ok(view)
}

pub fn view_to_doc(view: &CDiffView) -> AlgebraDoc {
    AlgebraDoc {
        inv: Some(ints(&view.inv)),
        center: Some(view.center as i64),
        center_box: view.center_box.as_deref().map(ints),
        ..algebra_to_doc(&view.algebra)
    }
}

pub fn parse_doc(text: &str) -> Result<AlgebraDoc, SchemaError> {
    serde_json::from_str(text).map_err(json_error)
}

/// A single document or an array of documents.
pub fn parse_docs(text: &str) -> Result<Vec<AlgebraDoc>, SchemaError> {
    if text.trim_start().starts_with('[') {
        serde_json::from_str(text).map_err(json_error)
    } else {
        Ok(vec![parse_doc(text)?])
    }
}

pub fn read_text(path: &Path) -> Result<String, SchemaError> {
    std::fs::read_to_string(path).map_err(|e| SchemaError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

pub fn write_text(path: &Path, text: &str) -> Result<(), SchemaError> {
    std::fs::write(path, text).map_err(|e| SchemaError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// Load one algebra, checking only the FLe axioms.
pub fn load_algebra(path: &Path) -> Result<FiniteAlgebra, SchemaError> {
    let doc = parse_doc(&read_text(path)?)?;
    doc_to_algebra(&doc, &doc.label(None), false)
}

pub fn load_view(path: &Path) -> Result<CDiffView, SchemaError> {
    let doc = parse_doc(&read_text(path)?)?;
    doc_to_view(&doc, &doc.label(None))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("documents serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtins as b;

    #[test]
    fn algebra_round_trip() {
        let l = b::lukasiewicz(4);
        let doc = algebra_to_doc(&l);
        let text = to_json(&doc);
        let back = doc_to_algebra(&parse_doc(&text).unwrap(), "L4", true).unwrap();
        assert_eq!(back, l);
    }

    #[test]
    fn imp_may_be_omitted() {
        let mut doc = algebra_to_doc(&b::godel(3));
        doc.imp = None;
        let a = doc_to_algebra(&doc, "G3", true).unwrap();
        assert_eq!(a, b::godel(3));
    }

    #[test]
    fn table_coordinates() {
        let mut doc = algebra_to_doc(&b::boolean2());
        doc.times[1][0] = -1;
        match doc_to_algebra(&doc, "B2", true) {
            Err(SchemaError::Table {
                table, row, column, ..
            }) => {
                assert_eq!((table.as_str(), row, column), ("times", 1, 0))
            }
            other => panic!("{other:?}"),
        }
        let mut doc = algebra_to_doc(&b::boolean2());
        doc.meet.pop();
        assert!(matches!(
            doc_to_algebra(&doc, "B2", true),
            Err(SchemaError::Table { .. })
        ));
        let mut doc = algebra_to_doc(&b::boolean2());
        doc.one = 2;
        assert!(matches!(
            doc_to_algebra(&doc, "B2", true),
            Err(SchemaError::Field { .. })
        ));
    }

    #[test]
    fn broken_residuation_names_triple() {
        let mut doc = algebra_to_doc(&b::boolean2());
        doc.imp.as_mut().unwrap()[1][0] = 1;
        match doc_to_algebra(&doc, "B2", true) {
            Err(SchemaError::Axiom { axiom, witness, .. }) => {
                assert_eq!(axiom, "residuation");
                assert_eq!(witness.len(), 3);
            }
            other => panic!("{other:?}"),
        }
        // unit law broken: times(1,1) = 0
        let mut doc = algebra_to_doc(&b::boolean2());
        doc.times[1][1] = 0;
        doc.imp = None;
        assert!(matches!(
            doc_to_algebra(&doc, "B2", false),
            Err(SchemaError::Axiom { .. })
        ));
    }

    #[test]
    fn json_errors_have_positions() {
        match parse_doc("{\n  \"size\": 2,\n  \"meet\": [[0, 0], [0 1]]\n}") {
            Err(SchemaError::Json { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_doc("{\"size\": 1, \"bogus\": 0}"),
            Err(SchemaError::Json { .. })
        ));
    }

    #[test]
    fn entry_consistency() {
        let e = CatalogEntry::new(b::lukasiewicz(3), Provenance::Builtin);
        let doc = entry_to_doc(&e);
        assert_eq!(doc_to_entry(&doc, None).unwrap(), e);
        let mut bad = doc.clone();
        bad.flags.as_mut().unwrap().is_mv = false;
        assert!(matches!(
            doc_to_entry(&bad, None),
            Err(SchemaError::Field { .. })
        ));
        let mut bad = doc.clone();
        bad.quantifiers = Some(vec![QuantifierPair::new(vec![0, 0, 0], vec![0, 0, 0])]);
        assert!(matches!(
            doc_to_entry(&bad, None),
            Err(SchemaError::Axiom { .. })
        ));
        let mut short = doc;
        short.quantifiers.as_mut().unwrap().pop();
        assert!(matches!(
            doc_to_entry(&short, None),
            Err(SchemaError::Field { .. })
        ));
    }

    #[test]
    fn view_round_trip() {
        let k = crate::kalman::build_k(&b::lukasiewicz(3)).unwrap();
        let view = k.view();
        let doc = view_to_doc(&view);
        assert!(doc.is_view());
        let back = doc_to_view(&parse_doc(&to_json(&doc)).unwrap(), "K").unwrap();
        assert_eq!(back, view);
        let mut bad = doc;
        bad.inv.as_mut().unwrap()[0] = 99;
        assert!(matches!(
            doc_to_view(&bad, "K"),
            Err(SchemaError::Field { .. })
        ));
    }
}
