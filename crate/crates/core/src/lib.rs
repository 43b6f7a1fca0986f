//! Exact enumeration for semi-magic squares of size three.
//!
//! The crate covers the sextuple (rectangle) representation of 3x3
//! semi-magic squares, the 72-element symmetry group acting on them, lattice
//! path counts from the zero square, the finite graded posets `M(3, s)` with
//! their convolution identities, and un-normalized Clebsch-Gordan
//! coefficients together with the symmetry relations the group induces on
//! them. All arithmetic is exact.

pub mod cg;
pub mod combinatorics;
pub mod enumeration;
pub mod error;
pub mod group;
pub mod poset;
pub mod square;
pub mod verify;

pub use cg::{
    cg_coefficient, cg_from_square, reciprocity_check, regge_identity, regge_orbit_table,
    square_from_cg, CGIndex, ReggeIdentity,
};
pub use enumeration::{path_number, path_polynomial, PathPolynomial};
pub use error::{Error, Result};
pub use group::{
    act, act_slots, all_elements, classify_reduced, orbit, GroupElement, OrbitClass, OrbitReport,
};
pub use poset::{build, export_dot, vandermonde_check, ConvolutionReport, GradedPoset, LabelStyle};
pub use square::{from_sextuple, validate_square, ReducedDecomposition, SemiMagicSquare, Sextuple};
