//! Diagonal quadratic forms over the rationals: Hilbert symbols, square
//! classes, Hasse and Witt invariants, and local/global isotropy.
//!
//! Brauer classes of order two are stored as their (finite, even) sets of
//! ramified places, so every invariant is an exact, canonical value.

mod form;
mod local;

pub use form::{
    torsor_d5_isotropic, IsotropyReport, IsotropyRule, RationalQuadraticForm, SpinDescriptor,
};
pub use local::{
    candidate_places, hilbert_symbol, hilbert_symbol_classes, quaternion_class,
    quaternion_class_of, Place, SquareClass, TwoTorsionBrauerClass,
};
