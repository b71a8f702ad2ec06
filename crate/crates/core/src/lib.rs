//! Exact Gelfand-Tsetlin bases for irreducible representations of the
//! alternating groups, written as expansions in Young's orthogonal bases of
//! the ambient symmetric-group representations.

pub mod alt_labels;
pub mod associator;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod geodesics;
pub mod gt_basis;
pub mod matrix;
pub mod model;
pub mod partition;
pub mod scalar;
pub mod tableau;
pub mod verify;
pub mod yor;

pub use alt_labels::{AltLabel, Sign};
pub use error::{Error, Result};
pub use geodesics::AltPath;
pub use matrix::Matrix;
pub use partition::Partition;
pub use scalar::{FourthRoot, GaussianRational, Scalar};
pub use tableau::StandardTableau;
pub use yor::GtVector;
