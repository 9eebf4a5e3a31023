//! Exact invariants of complex hyperplane arrangement complements.
//!
//! Starting from an [`Arrangement`] with coefficients in `Q(i)` the crate
//! computes the intersection poset, Möbius function, characteristic
//! polynomial and Betti numbers, searches for a chain of modular flats
//! certifying that the complement is fiber-type, builds stable wedge models
//! of the suspended complement from order complexes, and evaluates the
//! surgery groups `L_i` of the fundamental group of a fiber-type complement.
//!
//! ```
//! use hyparr::{braid_arrangement, fiber_type, surgery_pure_braid};
//!
//! let a = braid_arrangement(3).unwrap();
//! assert_eq!(fiber_type(&a).unwrap().fiber_ranks, vec![1, 2, 3]);
//! assert_eq!(surgery_pure_braid(3).unwrap().get(1).to_string(), "Z^6");
//! ```

pub mod abelian;
pub mod arrangement;
pub mod cli;
pub mod error;
pub mod format;
pub mod lattice;
pub mod linalg;
pub mod surgery;
pub mod topology;

pub use abelian::AbelianGroup;
pub use arrangement::{
    braid_arrangement, from_integer_forms, intersection_poset, make_arrangement, punctured_line,
    Arrangement, Flat, FlatId, Hyperplane, IntersectionPoset,
};
pub use error::{ArrangementError, LatticeError, SurgeryError};
pub use format::{parse_arrangement, serialize_arrangement, ParseError};
pub use lattice::{betti_numbers, char_poly, fiber_type, is_modular, mobius, CharPoly, FibrationTower, MobiusTable};
pub use linalg::GaussianRational;
pub use surgery::{
    assembly_from_betti, braid_extension, h_of_complement, k_theory_metadata, l_point, spf_pure_braid,
    surgery_fiber_type, surgery_pure_braid, LGroupValue, SurgeryTable,
};
pub use topology::{gm_wedge, order_complex_below, reduced_homology, suspension_wedge, WedgeDecomposition};
