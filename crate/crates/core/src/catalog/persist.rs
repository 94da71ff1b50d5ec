use std::path::Path;

use crate::schema::{doc_to_entry, entry_to_doc, parse_docs, read_text, to_json, write_text};

use super::{CatalogEntry, CatalogError};

/// Write entries as a JSON array, with flags and quantifier pairs.
pub fn save(entries: &[CatalogEntry], path: &Path) -> Result<(), CatalogError> {
    let docs: Vec<_> = entries.iter().map(entry_to_doc).collect();
    write_text(path, &to_json(&docs))?;
    Ok(())
}

/// Read an array (or a single object) and re-validate every entry.
pub fn load(path: &Path) -> Result<Vec<CatalogEntry>, CatalogError> {
    let docs = parse_docs(&read_text(path)?)?;
    let entries = docs
        .iter()
        .enumerate()
        .map(|(i, d)| doc_to_entry(d, Some(i)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(entries)
}
