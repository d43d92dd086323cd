//! Decision procedures: simple groups, semisimple groups
//! through their canonical simple quotients, and products of split type A
//! groups through the character lattice of the central kernel.

mod descriptor;
mod semisimple;
mod simple;
mod typea;
mod verdict;

pub use descriptor::{SemisimpleDescriptor, SimpleGroupDescriptor};
pub use semisimple::{
    canonical_quotients, classify_semisimple, classify_semisimple_report, product_consistency,
    projected_center, split_type_a_presentation, SemisimpleReport,
};
pub use simple::classify_simple;
pub use typea::{criterion_value, typea_engine, typea_engine_report, TypeAReport};
pub use verdict::{Rule, Verdict, Witness};

