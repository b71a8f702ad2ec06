//! Young's orthogonal representation of `S_n` on `V_λ`.
//!
//! Vectors are finite maps from standard tableaux of one shape to [`Scalar`]
//! coefficients in the orthonormal basis `{v_T}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::model::{Conventions, Standard};
use crate::partition::Partition;
use crate::scalar::{GaussianRational, Scalar};
use crate::tableau::{enumerate_syt, StandardTableau};

/// An element of `V_λ` expanded in Young's orthogonal basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GtVector {
    shape: Partition,
    terms: BTreeMap<StandardTableau, Scalar>,
}

impl GtVector {
    pub fn zero(shape: Partition) -> Self {
        GtVector {
            shape,
            terms: BTreeMap::new(),
        }
    }

    /// The basis vector `v_T`.
    pub fn basis(t: StandardTableau) -> Self {
        let shape = t.shape().clone();
        let mut terms = BTreeMap::new();
        terms.insert(t, Scalar::one());
        GtVector { shape, terms }
    }

    pub fn from_terms(
        shape: Partition,
        terms: impl IntoIterator<Item = (StandardTableau, Scalar)>,
    ) -> Result<Self> {
        let mut v = GtVector::zero(shape);
        for (t, c) in terms {
            if *t.shape() != v.shape {
                return Err(Error::domain(format!(
                    "tableau {t} does not have shape {}",
                    v.shape
                )));
            }
            v.add_term(t, &c);
        }
        Ok(v)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn terms(&self) -> impl Iterator<Item = (&StandardTableau, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, t: &StandardTableau) -> Scalar {
        self.terms.get(t).cloned().unwrap_or_default()
    }

    pub fn support(&self) -> impl Iterator<Item = &StandardTableau> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_term(&mut self, t: StandardTableau, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(t).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn scale(&self, k: &Scalar) -> GtVector {
        let mut out = GtVector::zero(self.shape.clone());
        for (t, c) in &self.terms {
            out.add_term(t.clone(), &(k * c));
        }
        out
    }

    /// `⟨a, b⟩ = Σ conj(a_T)·b_T`, conjugate-linear in `self`.
    pub fn inner(&self, other: &GtVector) -> Scalar {
        let mut acc = Scalar::zero();
        if self.shape != other.shape {
            return acc;
        }
        for (t, a) in &self.terms {
            if let Some(b) = other.terms.get(t) {
                acc += &(&a.conj() * b);
            }
        }
        acc
    }

    /// `⟨v, v⟩` as a rational.
    pub fn norm_sqr(&self) -> BigRational {
        self.inner(self)
            .as_rational()
            .expect("squared norm is rational for coefficients with one radicand each")
    }

    /// Divides by the norm. Requires a rational squared norm.
    pub fn normalized(&self) -> Result<GtVector> {
        let n2 = self
            .inner(self)
            .as_rational()
            .ok_or_else(|| Error::Unsupported("norm is not a square root of a rational".into()))?;
        let norm = Scalar::sqrt_rational(&n2)?;
        Ok(self.scale(&norm.inv_monomial()?))
    }

    /// If `self = ζ·other` for a single scalar `ζ`, returns it.
    pub fn ratio_to(&self, other: &GtVector) -> Option<Scalar> {
        if self.shape != other.shape || self.terms.len() != other.terms.len() {
            return None;
        }
        if self.is_zero() {
            return None;
        }
        let mut ratio: Option<Scalar> = None;
        for (t, a) in &self.terms {
            let b = other.terms.get(t)?;
            let r = a * &b.inv_monomial().ok()?;
            match &ratio {
                None => ratio = Some(r),
                Some(prev) if *prev == r => {}
                Some(_) => return None,
            }
        }
        ratio
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (t, c)) in self.terms.iter().enumerate() {
            let tab = format!(
                "v_{{\\ytableaushort{{{}}}}}",
                t.rows()
                    .iter()
                    .map(|row| row.iter().map(|x| latex_entry(*x)).collect::<String>())
                    .collect::<Vec<_>>()
                    .join(",")
            );
            let coeff = c.to_latex();
            let term = match coeff.as_str() {
                "1" => tab,
                "-1" => format!("-{tab}"),
                _ if c.terms().count() > 1 => format!("\\left({coeff}\\right){tab}"),
                _ => format!("{coeff}{tab}"),
            };
            if k > 0 {
                out.push_str(if term.starts_with('-') { " " } else { " + " });
            }
            out.push_str(&term);
        }
        out
    }
}

fn latex_entry(x: usize) -> String {
    if x < 10 {
        x.to_string()
    } else {
        format!("{{{x}}}")
    }
}

impl Add<&GtVector> for &GtVector {
    type Output = GtVector;
    fn add(self, rhs: &GtVector) -> GtVector {
        assert_eq!(self.shape, rhs.shape, "adding vectors of different shapes");
        let mut out = self.clone();
        for (t, c) in &rhs.terms {
            out.add_term(t.clone(), c);
        }
        out
    }
}

impl Sub<&GtVector> for &GtVector {
    type Output = GtVector;
    fn sub(self, rhs: &GtVector) -> GtVector {
        self + &(-rhs)
    }
}

impl Neg for &GtVector {
    type Output = GtVector;
    fn neg(self) -> GtVector {
        GtVector {
            shape: self.shape.clone(),
            terms: self.terms.iter().map(|(t, c)| (t.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for GtVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (t, c)) in self.terms.iter().enumerate() {
            let single = c.terms().count() == 1;
            let negative = single && c.to_string().starts_with('-');
            let c = if negative { -c } else { c.clone() };
            match (k > 0, negative) {
                (true, true) => f.write_str(" - ")?,
                (true, false) => f.write_str(" + ")?,
                (false, true) => f.write_str("-")?,
                (false, false) => {}
            }
            if c.is_one() {
                write!(f, "v[{t}]")?;
            } else if single {
                write!(f, "{c}*v[{t}]")?;
            } else {
                write!(f, "({c})*v[{t}]")?;
            }
        }
        Ok(())
    }
}

struct TermsJson<'a>(&'a BTreeMap<StandardTableau, Scalar>);

impl Serialize for TermsJson<'_> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            tableau: &'a StandardTableau,
            coeff: &'a Scalar,
        }
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for (tableau, coeff) in self.0 {
            seq.serialize_element(&Term { tableau, coeff })?;
        }
        seq.end()
    }
}

impl GtVector {
    /// The `terms` array of the JSON form: `[{"tableau": [[..]], "coeff": Scalar}]`.
    pub fn terms_json(&self) -> serde_json::Value {
        serde_json::to_value(TermsJson(&self.terms)).expect("serializable")
    }
}

impl Serialize for GtVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("shape", &self.shape)?;
        map.serialize_entry("terms", &TermsJson(&self.terms))?;
        map.end()
    }
}

/// `ρ_λ(s_i) v_T` in Young's orthogonal form.
pub fn simple_image(t: &StandardTableau, i: usize) -> Result<Vec<(StandardTableau, Scalar)>> {
    let r = t.axial_distance(i)?;
    let (row, col) = t.position(i).expect("entry present");
    let (row2, col2) = t.position(i + 1).expect("entry present");
    if row == row2 {
        return Ok(vec![(t.clone(), Scalar::one())]);
    }
    if col == col2 {
        return Ok(vec![(t.clone(), -Scalar::one())]);
    }
    let r = BigRational::from_integer(BigInt::from(r));
    let inv_r = r.recip();
    let off_diag = Scalar::sqrt_rational(&(BigRational::from_integer(1.into()) - &inv_r * &inv_r))?;
    Ok(vec![
        (
            t.clone(),
            Scalar::from_gaussian(GaussianRational::real(inv_r)),
        ),
        (t.swap_adjacent(i)?, off_diag),
    ])
}

fn check_vector(lambda: &Partition, i: usize, v: &GtVector) -> Result<()> {
    if v.shape() != lambda {
        return Err(Error::domain(format!(
            "vector has shape {}, expected {lambda}",
            v.shape()
        )));
    }
    let n = lambda.size();
    if i == 0 || i >= n {
        return Err(Error::domain(format!(
            "generator index {i} outside 1..={}",
            n.saturating_sub(1)
        )));
    }
    Ok(())
}

pub fn act_simple_with(
    model: &dyn Conventions,
    lambda: &Partition,
    i: usize,
    v: &GtVector,
) -> Result<GtVector> {
    check_vector(lambda, i, v)?;
    let mut out = GtVector::zero(lambda.clone());
    for (t, c) in v.terms() {
        for (s, k) in model.simple_image(t, i)? {
            out.add_term(s, &(&k * c));
        }
    }
    Ok(out)
}

/// `ρ_λ(s_i) v`.
pub fn act_simple(lambda: &Partition, i: usize, v: &GtVector) -> Result<GtVector> {
    act_simple_with(&Standard, lambda, i, v)
}

/// Applies the product `s_{w_1} s_{w_2} ⋯ s_{w_k}`; the last index acts first.
pub fn act_word(lambda: &Partition, word: &[usize], v: &GtVector) -> Result<GtVector> {
    act_word_with(&Standard, lambda, word, v)
}

pub fn act_word_with(
    model: &dyn Conventions,
    lambda: &Partition,
    word: &[usize],
    v: &GtVector,
) -> Result<GtVector> {
    if v.shape() != lambda {
        return Err(Error::domain(format!(
            "vector has shape {}, expected {lambda}",
            v.shape()
        )));
    }
    let mut out = v.clone();
    for &i in word.iter().rev() {
        out = act_simple_with(model, lambda, i, &out)?;
    }
    Ok(out)
}

/// Matrix of `ρ_λ(s_i)` in the order of [`enumerate_syt`]; column `k` is the
/// image of the `k`-th basis vector.
pub fn rep_matrix(lambda: &Partition, i: usize) -> Result<Matrix> {
    rep_matrix_with(&Standard, lambda, i)
}

pub fn rep_matrix_with(model: &dyn Conventions, lambda: &Partition, i: usize) -> Result<Matrix> {
    let basis = enumerate_syt(lambda);
    matrix_on_basis(&basis, |t| {
        act_simple_with(model, lambda, i, &GtVector::basis(t.clone()))
    })
}

/// Matrix of a linear map given by its action on basis vectors.
pub(crate) fn matrix_on_basis(
    basis: &[StandardTableau],
    image: impl Fn(&StandardTableau) -> Result<GtVector>,
) -> Result<Matrix> {
    let index: BTreeMap<&StandardTableau, usize> =
        basis.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let mut m = Matrix::zeros(basis.len());
    for (col, t) in basis.iter().enumerate() {
        for (s, c) in image(t)?.terms() {
            let row = *index
                .get(s)
                .ok_or_else(|| Error::Internal(format!("image tableau {s} outside basis")))?;
            m.set(row, col, c.clone());
        }
    }
    Ok(m)
}

/// JSON form of a representation matrix: the basis order and the rows.
pub fn matrix_json(basis: &[StandardTableau], m: &Matrix) -> serde_json::Value {
    serde_json::json!({
        "basis": basis,
        "matrix": m.rows().map(|row| row.to_vec()).collect::<Vec<_>>(),
    })
}
