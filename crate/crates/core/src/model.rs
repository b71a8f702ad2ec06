//! The two formulas everything else is built from: the action of a simple
//! transposition on Young's orthogonal basis, and the associator coefficient
//! `c_T`. Routing them through a trait lets the verification suites run
//! against deliberately broken variants.

use crate::error::Result;
use crate::partition::Partition;
use crate::scalar::Scalar;
use crate::tableau::StandardTableau;

pub trait Conventions: Sync {
    /// `ρ(s_i) v_T` as a list of `(tableau, coefficient)` terms.
    fn simple_image(&self, t: &StandardTableau, i: usize)
        -> Result<Vec<(StandardTableau, Scalar)>>;

    /// The coefficient `c_T` with `φ_λ(v_T) = c_T v_{T'}`.
    fn assoc_coeff(&self, lambda: &Partition, t: &StandardTableau) -> Result<Scalar>;
}

/// Young's orthogonal form together with the normalized associator.
#[derive(Clone, Copy, Debug, Default)]
pub struct Standard;

impl Conventions for Standard {
    fn simple_image(
        &self,
        t: &StandardTableau,
        i: usize,
    ) -> Result<Vec<(StandardTableau, Scalar)>> {
        crate::yor::simple_image(t, i)
    }

    fn assoc_coeff(&self, lambda: &Partition, t: &StandardTableau) -> Result<Scalar> {
        crate::associator::assoc_coeff(lambda, t)
    }
}

/// Young's orthogonal form with the same-column case sent to `+v_T`
/// instead of `−v_T`.
#[derive(Clone, Copy, Debug, Default)]
pub struct FlippedColumnSign;

impl Conventions for FlippedColumnSign {
    fn simple_image(
        &self,
        t: &StandardTableau,
        i: usize,
    ) -> Result<Vec<(StandardTableau, Scalar)>> {
        let image = crate::yor::simple_image(t, i)?;
        let same_column = t.position(i).map(|p| p.1) == t.position(i + 1).map(|p| p.1);
        if same_column {
            return Ok(vec![(t.clone(), Scalar::one())]);
        }
        Ok(image)
    }

    fn assoc_coeff(&self, lambda: &Partition, t: &StandardTableau) -> Result<Scalar> {
        crate::associator::assoc_coeff(lambda, t)
    }
}

/// The associator with `ε(w_T)` replaced by `+1`, so every `c_T` equals the
/// reference factor.
#[derive(Clone, Copy, Debug, Default)]
pub struct SignlessAssociator;

impl Conventions for SignlessAssociator {
    fn simple_image(
        &self,
        t: &StandardTableau,
        i: usize,
    ) -> Result<Vec<(StandardTableau, Scalar)>> {
        crate::yor::simple_image(t, i)
    }

    fn assoc_coeff(&self, lambda: &Partition, t: &StandardTableau) -> Result<Scalar> {
        if t.shape() != lambda {
            return Err(crate::error::Error::domain(format!(
                "{t} does not have shape {lambda}"
            )));
        }
        Ok(crate::associator::reference_factor(lambda)?.to_scalar())
    }
}
