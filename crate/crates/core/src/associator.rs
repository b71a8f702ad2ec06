//! The normalized associator `φ_λ` on `V_λ` for self-conjugate `λ`.
//!
//! `φ_λ(v_T) = c_T v_{T'}` with `c_T = i^{(n−d(λ))/2} ε(w_T)`, where `w_T` is
//! taken relative to the reference tableau `T_λ`. With this normalization
//! `φ_λ² = id`, `φ_λ` anticommutes with every `ρ_λ(s_i)`, and `φ_λ` restricts
//! to `φ_μ` along every self-conjugate cover `(μ, λ)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::model::{Conventions, Standard};
use crate::partition::Partition;
use crate::scalar::{FourthRoot, Scalar};
use crate::tableau::{enumerate_syt, permutation_sign, StandardTableau};
use crate::yor::{matrix_on_basis, GtVector};

fn require_self_conjugate(lambda: &Partition) -> Result<()> {
    if lambda.is_empty() || !lambda.is_self_conjugate() {
        return Err(Error::domain(format!(
            "associator requires a self-conjugate partition, got {lambda}"
        )));
    }
    Ok(())
}

/// `i^{(n−d(λ))/2}`, the value of `c_T` at the reference tableau.
pub fn reference_factor(lambda: &Partition) -> Result<FourthRoot> {
    require_self_conjugate(lambda)?;
    let excess = lambda.size() - lambda.diagonal_length()?;
    if !excess.is_multiple_of(2) {
        return Err(Error::Internal(format!(
            "n - d(λ) is odd for self-conjugate {lambda}"
        )));
    }
    Ok(FourthRoot::i_pow((excess / 2) as i64))
}

/// The fourth root of unity `c_T`.
pub fn assoc_coeff_root(lambda: &Partition, t: &StandardTableau) -> Result<FourthRoot> {
    let factor = reference_factor(lambda)?;
    let sign = permutation_sign(lambda, t)?;
    Ok(if sign > 0 { factor } else { -factor })
}

pub fn assoc_coeff(lambda: &Partition, t: &StandardTableau) -> Result<Scalar> {
    Ok(assoc_coeff_root(lambda, t)?.to_scalar())
}

pub fn apply_phi_with(
    model: &dyn Conventions,
    lambda: &Partition,
    v: &GtVector,
) -> Result<GtVector> {
    require_self_conjugate(lambda)?;
    if v.shape() != lambda {
        return Err(Error::domain(format!(
            "vector has shape {}, expected {lambda}",
            v.shape()
        )));
    }
    let mut out = GtVector::zero(lambda.clone());
    for (t, c) in v.terms() {
        let k = model.assoc_coeff(lambda, t)?;
        out.add_term(t.conjugate(), &(&k * c));
    }
    Ok(out)
}

/// Linear extension of `v_T ↦ c_T v_{T'}`.
pub fn apply_phi(lambda: &Partition, v: &GtVector) -> Result<GtVector> {
    apply_phi_with(&Standard, lambda, v)
}

pub fn phi_matrix_with(model: &dyn Conventions, lambda: &Partition) -> Result<Matrix> {
    require_self_conjugate(lambda)?;
    let basis = enumerate_syt(lambda);
    matrix_on_basis(&basis, |t| {
        apply_phi_with(model, lambda, &GtVector::basis(t.clone()))
    })
}

/// Matrix of `φ_λ` in the order of [`enumerate_syt`].
pub fn phi_matrix(lambda: &Partition) -> Result<Matrix> {
    phi_matrix_with(&Standard, lambda)
}

/// One row of the associator table: `φ_λ(v_T) = c_T v_{T'}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssocEntry {
    pub tableau: StandardTableau,
    pub coeff: FourthRoot,
    pub conjugate: StandardTableau,
}

pub fn assoc_table(lambda: &Partition) -> Result<Vec<AssocEntry>> {
    require_self_conjugate(lambda)?;
    enumerate_syt(lambda)
        .into_iter()
        .map(|t| {
            Ok(AssocEntry {
                coeff: assoc_coeff_root(lambda, &t)?,
                conjugate: t.conjugate(),
                tableau: t,
            })
        })
        .collect()
}
