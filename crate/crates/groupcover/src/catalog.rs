//! Built-in catalog of groups with expected covering values.
//!
//! The entries live in `catalog.toml` next to this file and are embedded at
//! compile time. An entry always carries a spec string; expected sigma and
//! c3 values are present only where the answer is pinned down independently
//! of this tool, so the verification suites can treat them as ground truth.

use crate::cover::SigmaValue;
use serde::Deserialize;
use std::sync::OnceLock;

#[derive(Debug, Clone, Deserialize)]
pub struct CatalogEntry {
    /// Group spec, parseable by [`crate::parse_group_spec`].
    pub spec: String,
    /// Expected minimal cover size, when known in advance.
    #[serde(default)]
    pub sigma: Option<SigmaValue>,
    /// Expected number of irredundant three-part covers, when known.
    #[serde(default)]
    pub c3: Option<usize>,
    /// Short justification for the expected values.
    #[serde(default)]
    pub note: Option<String>,
}

#[derive(Deserialize)]
struct CatalogFile {
    entry: Vec<CatalogEntry>,
}

/// Every catalog entry, in the order listed in the data file.
pub fn catalog() -> &'static [CatalogEntry] {
    static CACHE: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let file: CatalogFile =
            toml::from_str(include_str!("catalog.toml")).expect("embedded catalog is valid TOML");
        assert!(!file.entry.is_empty(), "embedded catalog is empty");
        file.entry
    })
}

/// The entry whose spec string matches exactly, if any.
pub fn catalog_entry(spec: &str) -> Option<&'static CatalogEntry> {
    catalog().iter().find(|e| e.spec == spec)
}
