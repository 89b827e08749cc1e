//! Signed graphs under switching: exact spectra, cycle censuses, canonical
//! forms, sign-symmetry decisions with replayable witnesses, constructive
//! families, and exhaustive small-order catalogs.

pub mod canon;
pub mod census;
pub mod construct;
pub mod enumerate;
pub mod error;
mod gf;
pub mod graph;
pub mod io;
pub mod spectra;
pub mod verify;

pub use canon::{canonical_code, is_sign_symmetric, switching_isomorphic, CanonicalCode};
pub use census::{cycle_census, elementary_coefficients, odd_cycle_balanced, CycleCensus};
pub use error::{Result, SgError};
pub use graph::{SignedGraph, SignedPermutation, SwitchWitness, UGraph};
pub use spectra::{char_poly, eigenvalues, is_symmetric_spectrum, seidel_det, seidel_rank, CharPoly};
