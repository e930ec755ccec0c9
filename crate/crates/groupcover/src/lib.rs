//! Finite-group covering analysis over explicit multiplication tables.
//!
//! Groups are built as Cayley tables (identity at index 0), subgroups are
//! enumerated as bitsets over element indices, and covering invariants are
//! computed on top: the minimal covering number sigma, the number of
//! three-subgroup coverings, irredundant-triple predicates, and Klein
//! four-group quotient counts.

pub mod bitset;
pub mod catalog;
pub mod cover;
pub mod group;
pub mod lattice;
pub mod parse;
pub mod quotient;
pub mod report;
pub mod verify;

pub use bitset::BitSet;
pub use catalog::{catalog, catalog_entry, CatalogEntry};
pub use cover::{
    c3, enumerate_three_covers, sigma, C3Method, CoverTriple, SigmaResult, SigmaValue,
    UniqueCoverEquivalence,
};
pub use group::{GroupError, GroupTable};
pub use lattice::{all_subgroups, closure, SubgroupLattice, SubgroupSet};
pub use parse::{parse_group_spec, parse_spec_ast, GroupSpecAst, SpecError};
pub use quotient::{is_isomorphic_small, quotient, QuotientDescriptor};
pub use report::{analyze, csv_header, AnalysisReport};
pub use verify::{verify_suites, CheckResult, Suite, SuiteOutcome};
