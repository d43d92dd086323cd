//! Character lattices of central subgroups of split tori, and their finite
//! images modulo a vector of degrees.

mod character;
mod matrix;
mod residue;

pub use character::{character_lattice_of, CentralSubgroupSpec, CharacterLattice, TorsionGenerator};
pub use matrix::{hermite_normal_form, integer_kernel, smith_normal_form, IntMatrix, SmithForm};
pub use residue::{residue_image, subgroup_closure, ResidueGroup, DEFAULT_ENUMERATION_CAP};
