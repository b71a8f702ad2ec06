//! Gelfand-Tsetlin vectors for `A_n` expanded in Young's orthogonal basis.
//!
//! For a path `(α⁽²⁾, …, α⁽ⁿ⁾)` the vector `u` is built level by level:
//!
//! * `u_(2) = v_[12]`, `u_(1,1) = v_[1/2]`;
//! * final label `λ^±` after an unsigned label: `u = u*^λ ± φ_λ(u*^λ)`;
//! * final label `λ^±` after `μ^±`: `u = u*^λ`;
//! * final unsigned label `α`: `u = u*^α`;
//!
//! where `u*` is the vector of the truncated path and `x^λ` is the embedding
//! `v_T ↦ v_{T^λ}`.

use serde::Serialize;

use crate::alt_labels::AltLabel;
use crate::associator::apply_phi_with;
use crate::error::{Error, Result};
use crate::geodesics::{geodesic_representatives_by, AltPath, RepresentativeRule};
use crate::model::{Conventions, Standard};
use crate::partition::Partition;
use crate::scalar::Scalar;
use crate::tableau::StandardTableau;
use crate::yor::GtVector;

/// `v_T ↦ v_{T^λ}` extended linearly.
pub fn embed(v: &GtVector, lambda: &Partition) -> Result<GtVector> {
    if !lambda.covers(v.shape()) {
        return Err(Error::domain(format!(
            "{} is not covered by {lambda}",
            v.shape()
        )));
    }
    let terms = v
        .terms()
        .map(|(t, c)| Ok((t.append_box(lambda)?, c.clone())))
        .collect::<Result<Vec<_>>>()?;
    GtVector::from_terms(lambda.clone(), terms)
}

/// Keeps the terms whose `(n−1)`-prefix has shape `μ` and drops the box holding `n`.
pub fn restrict(v: &GtVector, mu: &Partition) -> Result<GtVector> {
    if !v.shape().covers(mu) {
        return Err(Error::domain(format!(
            "{mu} is not covered by {}",
            v.shape()
        )));
    }
    let mut terms = Vec::new();
    for (t, c) in v.terms() {
        let smaller = t.remove_largest()?;
        if smaller.shape() == mu {
            terms.push((smaller, c.clone()));
        }
    }
    GtVector::from_terms(mu.clone(), terms)
}

fn base_vector(label: &AltLabel) -> Result<GtVector> {
    let t: StandardTableau = match label.partition().parts() {
        [2] => "12".parse()?,
        [1, 1] => "1/2".parse()?,
        _ => return Err(Error::domain(format!("{label} is not a label of size 2"))),
    };
    Ok(GtVector::basis(t))
}

pub fn gt_vector_with(model: &dyn Conventions, path: &AltPath) -> Result<GtVector> {
    let labels = path.labels();
    let mut u = base_vector(&labels[0])?;
    for w in labels.windows(2) {
        let (prev, next) = (&w[0], &w[1]);
        let lambda = next.partition();
        let lifted = embed(&u, lambda)?;
        u = match (next.sign(), prev.is_signed()) {
            (Some(sign), false) => {
                let image = apply_phi_with(model, lambda, &lifted)?;
                if image.support().any(|t| lifted.support().any(|s| s == t)) {
                    return Err(Error::Internal(format!(
                        "overlapping supports while building {path} at {next}"
                    )));
                }
                match sign {
                    crate::alt_labels::Sign::Plus => &lifted + &image,
                    crate::alt_labels::Sign::Minus => &lifted - &image,
                }
            }
            _ => lifted,
        };
    }
    Ok(u)
}

/// The vector `u_α` of a path, an element of `V_λ` for the final partition `λ`.
pub fn gt_vector(path: &AltPath) -> Result<GtVector> {
    gt_vector_with(&Standard, path)
}

/// A basis vector together with the path that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub path: AltPath,
    pub vector: GtVector,
}

impl Serialize for BasisElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("path", &self.path)?;
        map.serialize_entry("terms", &self.vector.terms_json())?;
        map.end()
    }
}

pub fn gt_basis_with(
    model: &dyn Conventions,
    alpha: &AltLabel,
    rule: RepresentativeRule,
) -> Result<Vec<BasisElement>> {
    geodesic_representatives_by(alpha, rule)?
        .into_iter()
        .map(|path| {
            let vector = gt_vector_with(model, &path)?;
            Ok(BasisElement { path, vector })
        })
        .collect()
}

/// One Gelfand-Tsetlin vector per geodesic ending at `α`, left unnormalized.
pub fn gt_basis(alpha: &AltLabel) -> Result<Vec<BasisElement>> {
    gt_basis_with(&Standard, alpha, RepresentativeRule::default())
}

/// Divides every vector of a basis by its norm.
pub fn normalize_basis(basis: Vec<BasisElement>) -> Result<Vec<BasisElement>> {
    basis
        .into_iter()
        .map(|e| {
            Ok(BasisElement {
                vector: e.vector.normalized()?,
                path: e.path,
            })
        })
        .collect()
}

/// `ζ` with `a = ζ·b`, when it exists.
pub fn unit_ratio(a: &GtVector, b: &GtVector) -> Option<Scalar> {
    a.ratio_to(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn vec_of(shape: &str, terms: &[(&str, Scalar)]) -> GtVector {
        GtVector::from_terms(p(shape), terms.iter().map(|(s, c)| (t(s), c.clone()))).unwrap()
    }

    fn one() -> Scalar {
        Scalar::one()
    }

    fn i() -> Scalar {
        Scalar::i()
    }

    #[test]
    fn embedding() {
        assert_eq!(
            embed(&GtVector::basis(t("12")), &p("2,1")).unwrap(),
            GtVector::basis(t("12/3"))
        );
        let v = vec_of("3,1", &[("124/3", one()), ("134/2", i())]);
        assert_eq!(
            embed(&v, &p("3,1,1")).unwrap(),
            vec_of("3,1,1", &[("124/3/5", one()), ("134/2/5", i())])
        );
        assert!(embed(&GtVector::zero(p("2")), &p("2,1")).unwrap().is_zero());
        assert!(embed(&v, &p("4,2")).is_err());
    }

    #[test]
    fn restriction() {
        let v = vec_of("2,1,1", &[("12/3/4", one()), ("13/2/4", i())]);
        assert_eq!(
            restrict(&v, &p("2,1")).unwrap(),
            vec_of("2,1", &[("12/3", one()), ("13/2", i())])
        );
        assert!(restrict(&v, &p("1,1,1")).unwrap().is_zero());
        let w = vec_of("3,1", &[("124/3", one())]);
        assert_eq!(
            restrict(&embed(&w, &p("3,2")).unwrap(), &p("3,1")).unwrap(),
            w
        );
        assert!(restrict(&v, &p("3")).is_err());
    }

    #[test]
    fn worked_chain() {
        let path: AltPath = "2;2,1^+;3,1;3,1,1^-".parse().unwrap();
        assert_eq!(
            gt_vector(&path).unwrap(),
            vec_of(
                "3,1,1",
                &[
                    ("124/3/5", one()),
                    ("134/2/5", i()),
                    ("135/2/4", -one()),
                    ("125/3/4", i())
                ]
            )
        );
    }

    #[test]
    fn four_one_one_vectors() {
        let a = gt_vector(&"2;2,1^+".parse().unwrap()).unwrap();
        let b = gt_vector(&"1,1;2,1^+".parse().unwrap()).unwrap();
        assert_eq!(a, vec_of("2,1", &[("12/3", one()), ("13/2", i())]));
        assert_eq!(b, vec_of("2,1", &[("12/3", -i()), ("13/2", one())]));
        assert_eq!(unit_ratio(&b, &a), Some(-i()));
    }

    #[test]
    fn minus_half_of_two_one() {
        let basis = gt_basis(&"2,1^-".parse().unwrap()).unwrap();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0].path, "1,1;2,1^-".parse().unwrap());
        assert_eq!(
            basis[0].vector,
            vec_of("2,1", &[("12/3", i()), ("13/2", one())])
        );
        let other = gt_vector(&"2;2,1^-".parse().unwrap()).unwrap();
        assert_eq!(other, vec_of("2,1", &[("12/3", one()), ("13/2", -i())]));
        assert_eq!(unit_ratio(&basis[0].vector, &other), Some(i()));
    }

    #[test]
    fn single_row() {
        let basis = gt_basis(&"6".parse().unwrap()).unwrap();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0].vector, GtVector::basis(t("123456")));
    }

    #[test]
    fn normalized_vectors_have_unit_norm() {
        for e in normalize_basis(gt_basis(&"3,1,1^+".parse().unwrap()).unwrap()).unwrap() {
            assert_eq!(
                e.vector.norm_sqr(),
                num_rational::BigRational::from_integer(1.into())
            );
        }
    }
}
