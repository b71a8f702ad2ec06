//! Exact coefficients: finite sums `Σ c_q·√q` where `q` runs over squarefree
//! positive integers and each `c_q` is a Gaussian rational.
//!
//! Values are kept in canonical form at all times (squarefree radicands, no
//! zero coefficients), so equality is structural.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A rational number with an imaginary part: `re + im·i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        GaussianRational {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussianRational {
            re: BigRational::from_integer(re.into()),
            im: BigRational::from_integer(im.into()),
        }
    }

    pub fn zero() -> Self {
        GaussianRational::from_ints(0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `|z|²`, always a nonnegative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        GaussianRational {
            re: &self.re * k,
            im: &self.im * k,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussianRational {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }
}

impl Add<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Mul<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}", imaginary_text(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(
                    f,
                    "({} {} {})",
                    self.re,
                    sign,
                    imaginary_text(&self.im.abs())
                )
            }
        }
    }
}

fn imaginary_text(im: &BigRational) -> String {
    if im.is_one() {
        "i".into()
    } else if *im == -BigRational::one() {
        "-i".into()
    } else {
        format!("{im}*i")
    }
}

/// The four units `±1, ±i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FourthRoot {
    One,
    MinusOne,
    I,
    MinusI,
}

impl FourthRoot {
    pub const ALL: [FourthRoot; 4] = [
        FourthRoot::One,
        FourthRoot::I,
        FourthRoot::MinusOne,
        FourthRoot::MinusI,
    ];

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => FourthRoot::One,
            1 => FourthRoot::I,
            2 => FourthRoot::MinusOne,
            _ => FourthRoot::MinusI,
        }
    }

    pub fn to_scalar(self) -> Scalar {
        match self {
            FourthRoot::One => Scalar::one(),
            FourthRoot::MinusOne => -Scalar::one(),
            FourthRoot::I => Scalar::i(),
            FourthRoot::MinusI => -Scalar::i(),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            FourthRoot::One => "1",
            FourthRoot::MinusOne => "-1",
            FourthRoot::I => "i",
            FourthRoot::MinusI => "-i",
        }
    }

    fn exponent(self) -> i64 {
        match self {
            FourthRoot::One => 0,
            FourthRoot::I => 1,
            FourthRoot::MinusOne => 2,
            FourthRoot::MinusI => 3,
        }
    }
}

impl Neg for FourthRoot {
    type Output = FourthRoot;
    fn neg(self) -> FourthRoot {
        FourthRoot::i_pow(self.exponent() + 2)
    }
}

impl Mul for FourthRoot {
    type Output = FourthRoot;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: FourthRoot) -> FourthRoot {
        FourthRoot::i_pow(self.exponent() + rhs.exponent())
    }
}

impl Serialize for FourthRoot {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl fmt::Display for FourthRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An element of `Q(i)` adjoined with square roots of positive rationals.
///
/// Radicand `1` holds the rational part. The empty map is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Scalar {
    terms: BTreeMap<u64, GaussianRational>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_gaussian(GaussianRational::from_ints(1, 0))
    }

    pub fn i() -> Self {
        Scalar::from_gaussian(GaussianRational::from_ints(0, 1))
    }

    pub fn from_int(k: i64) -> Self {
        Scalar::from_gaussian(GaussianRational::from_ints(k, 0))
    }

    pub fn from_rational(q: BigRational) -> Self {
        Scalar::from_gaussian(GaussianRational::real(q))
    }

    pub fn from_gaussian(c: GaussianRational) -> Self {
        Scalar::monomial(c, 1)
    }

    /// `c·√q` for an arbitrary positive integer `q`; the radicand is reduced.
    pub fn monomial(c: GaussianRational, q: u64) -> Self {
        assert!(q >= 1, "radicand must be positive");
        let mut s = Scalar::zero();
        if c.is_zero() {
            return s;
        }
        let (outer, inner) = square_split(q);
        let c = c.scale(&BigRational::from_integer(BigInt::from(outer)));
        s.terms.insert(inner, c);
        s
    }

    /// Exact square root of a nonnegative rational: `√(a/b) = (1/b)·√(ab)`.
    pub fn sqrt_rational(q: &BigRational) -> Result<Scalar> {
        if q.is_negative() {
            return Err(Error::domain(format!(
                "square root of negative rational {q}"
            )));
        }
        if q.is_zero() {
            return Ok(Scalar::zero());
        }
        let a = q.numer();
        let b = q.denom();
        let ab: u64 = u64::try_from(a * b)
            .map_err(|_| Error::Unsupported(format!("radicand of {q} exceeds 64 bits")))?;
        let inv_b = BigRational::new(BigInt::one(), b.clone());
        Ok(Scalar::monomial(GaussianRational::real(inv_b), ab))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == Scalar::one()
    }

    /// True when every coefficient has zero imaginary part.
    pub fn is_real(&self) -> bool {
        self.terms.values().all(GaussianRational::is_real)
    }

    /// Rational value when the scalar has no radical or imaginary part.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let c = self.terms.get(&1)?;
                c.is_real().then(|| c.re.clone())
            }
            _ => None,
        }
    }

    /// Iterates over `(radicand, coefficient)` in increasing radicand order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &GaussianRational)> {
        self.terms.iter().map(|(q, c)| (*q, c))
    }

    pub fn conj(&self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(q, c)| (*q, c.conj())).collect(),
        }
    }

    pub fn scale(&self, k: &BigRational) -> Scalar {
        if k.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            terms: self.terms.iter().map(|(q, c)| (*q, c.scale(k))).collect(),
        }
    }

    /// Inverse of a single-term scalar `c·√q`, namely `√q / (c·q)`.
    ///
    /// Multi-term inversion is not supported.
    pub fn inv_monomial(&self) -> Result<Scalar> {
        let mut it = self.terms.iter();
        match (it.next(), it.next()) {
            (Some((q, c)), None) => {
                let inv = c.inv().expect("stored coefficients are nonzero");
                let inv = inv.scale(&BigRational::new(BigInt::one(), BigInt::from(*q)));
                Ok(Scalar::monomial(inv, *q))
            }
            (None, _) => Err(Error::domain("inverse of zero")),
            _ => Err(Error::Unsupported(format!(
                "inverse of multi-term scalar {self}"
            ))),
        }
    }

    pub fn as_fourth_root(&self) -> Option<FourthRoot> {
        FourthRoot::ALL.into_iter().find(|u| u.to_scalar() == *self)
    }

    fn add_term(&mut self, q: u64, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(q) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Plain-text rendering as a LaTeX math fragment.
    pub fn to_latex(&self) -> String {
        if let Some(u) = self.as_fourth_root() {
            return u.as_str().to_string();
        }
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (q, c)) in self.terms.iter().enumerate() {
            let mut piece = gaussian_latex(c);
            if *q != 1 {
                piece = match piece.as_str() {
                    "1" => format!("\\sqrt{{{q}}}"),
                    "-1" => format!("-\\sqrt{{{q}}}"),
                    _ => format!("{piece}\\sqrt{{{q}}}"),
                };
            }
            if k > 0 && !piece.starts_with('-') {
                out.push('+');
            }
            out.push_str(&piece);
        }
        out
    }
}

fn rational_latex(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        let sign = if r.is_negative() { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", r.numer().abs(), r.denom())
    }
}

fn gaussian_latex(c: &GaussianRational) -> String {
    let im = |v: &BigRational| {
        if v.is_one() {
            "i".to_string()
        } else if *v == -BigRational::one() {
            "-i".to_string()
        } else {
            format!("{}i", rational_latex(v))
        }
    };
    match (c.re.is_zero(), c.im.is_zero()) {
        (_, true) => rational_latex(&c.re),
        (true, false) => im(&c.im),
        (false, false) => {
            let imag = im(&c.im);
            let joiner = if imag.starts_with('-') { "" } else { "+" };
            format!("\\left({}{joiner}{imag}\\right)", rational_latex(&c.re))
        }
    }
}

/// Splits `m` as `g²·q` with `q` squarefree; returns `(g, q)`.
pub fn square_split(m: u64) -> (u64, u64) {
    assert!(m >= 1, "square_split of zero");
    let mut outer = 1u64;
    let mut inner = 1u64;
    let mut rest = m;
    let mut p = 2u64;
    while p * p <= rest {
        let mut e = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        outer *= p.pow(e / 2);
        if e % 2 == 1 {
            inner *= p;
        }
        p += 1;
    }
    // whatever is left is prime
    inner *= rest;
    (outer, inner)
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(mut self, rhs: Scalar) -> Scalar {
        self += &rhs;
        self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for (q, c) in &rhs.terms {
            self.add_term(*q, c.clone());
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(q, c)| (*q, -c)).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (q1, c1) in &self.terms {
            for (q2, c2) in &rhs.terms {
                let (g, q) = square_split(q1 * q2);
                let c = (c1 * c2).scale(&BigRational::from_integer(BigInt::from(g)));
                out.add_term(q, c);
            }
        }
        out
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (q, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if *q == 1 {
                write!(f, "{c}")?;
            } else if c.is_real() && c.re.is_one() {
                write!(f, "sqrt({q})")?;
            } else if c.is_real() && c.re == -BigRational::one() {
                write!(f, "-sqrt({q})")?;
            } else {
                write!(f, "{c}*sqrt({q})")?;
            }
        }
        Ok(())
    }
}

/// `p/q` with the denominator omitted when it is 1.
pub fn rational_to_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    BigRational::from_str(s.trim()).map_err(|e| Error::parse(s, e.to_string()))
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    radicand: u64,
    re: String,
    im: String,
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (q, c) in &self.terms {
            seq.serialize_element(&TermJson {
                radicand: *q,
                re: rational_to_string(&c.re),
                im: rational_to_string(&c.im),
            })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<TermJson> = Vec::deserialize(deserializer)?;
        let mut out = Scalar::zero();
        for t in raw {
            if t.radicand == 0 {
                return Err(de::Error::custom("radicand must be positive"));
            }
            let re = parse_rational(&t.re).map_err(de::Error::custom)?;
            let im = parse_rational(&t.im).map_err(de::Error::custom)?;
            out += &Scalar::monomial(GaussianRational::new(re, im), t.radicand);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    fn root(c: BigRational, q: u64) -> Scalar {
        Scalar::monomial(GaussianRational::real(c), q)
    }

    #[test]
    fn like_terms_combine() {
        let half_root3 = root(rat(1, 2), 3);
        assert_eq!(&half_root3 + &half_root3, root(rat(1, 1), 3));
    }

    #[test]
    fn additive_inverse_is_empty() {
        let r3 = root(rat(1, 1), 3);
        let s = &r3 + &(-&r3);
        assert!(s.is_zero());
        assert_eq!(s.terms().count(), 0);
    }

    #[test]
    fn radical_parts_cancel() {
        let a = &Scalar::i() + &root(rat(1, 1), 2);
        let b = &Scalar::one() - &root(rat(1, 1), 2);
        assert_eq!(&a + &b, &Scalar::one() + &Scalar::i());
    }

    #[test]
    fn products_reduce_radicands() {
        let r3 = root(rat(1, 1), 3);
        assert_eq!(&r3 * &r3, Scalar::from_int(3));
        // 6 * 10 = 60 = 4 * 15
        let p = &root(rat(1, 1), 6) * &root(rat(1, 1), 10);
        assert_eq!(p, root(rat(2, 1), 15));
        assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::from_int(-1));
    }

    #[test]
    fn conjugation() {
        assert_eq!(Scalar::i().conj(), -Scalar::i());
        let z = &Scalar::one() + &(&Scalar::i() * &root(rat(1, 1), 2));
        let zbar = &Scalar::one() - &(&Scalar::i() * &root(rat(1, 1), 2));
        assert_eq!(z.conj(), zbar);
        let r = Scalar::from_rational(rat(3, 5));
        assert_eq!(r.conj(), r);
    }

    #[test]
    fn sqrt_of_rationals() {
        assert_eq!(
            Scalar::sqrt_rational(&rat(3, 4)).unwrap(),
            root(rat(1, 2), 3)
        );
        assert_eq!(Scalar::sqrt_rational(&rat(1, 1)).unwrap(), Scalar::one());
        assert!(Scalar::sqrt_rational(&rat(0, 1)).unwrap().is_zero());
        assert!(matches!(
            Scalar::sqrt_rational(&rat(-1, 2)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn fourth_roots() {
        assert_eq!((-Scalar::i()).as_fourth_root(), Some(FourthRoot::MinusI));
        assert_eq!(root(rat(1, 2), 3).as_fourth_root(), None);
        assert_eq!(Scalar::one().as_fourth_root(), Some(FourthRoot::One));
        assert_eq!(FourthRoot::i_pow(3), FourthRoot::MinusI);
        assert_eq!(FourthRoot::i_pow(-1), FourthRoot::MinusI);
    }

    #[test]
    fn monomial_inverse() {
        let x = root(rat(2, 3), 5);
        assert!((&x * &x.inv_monomial().unwrap()).is_one());
        let two_terms = &Scalar::one() + &root(rat(1, 1), 2);
        assert!(matches!(
            two_terms.inv_monomial(),
            Err(Error::Unsupported(_))
        ));
        assert!(Scalar::zero().inv_monomial().is_err());
    }

    #[test]
    fn square_split_small_values() {
        assert_eq!(square_split(1), (1, 1));
        assert_eq!(square_split(60), (2, 15));
        assert_eq!(square_split(72), (6, 2));
        assert_eq!(square_split(49), (7, 1));
    }

    #[test]
    fn json_format() {
        let s = &root(rat(1, 2), 3) + &Scalar::from_gaussian(GaussianRational::from_ints(-1, 1));
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(
            json,
            r#"[{"radicand":1,"re":"-1","im":"1"},{"radicand":3,"re":"1/2","im":"0"}]"#
        );
        let back: Scalar = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn text_and_latex() {
        assert_eq!(root(rat(1, 2), 3).to_string(), "1/2*sqrt(3)");
        assert_eq!(root(rat(-1, 1), 3).to_string(), "-sqrt(3)");
        assert_eq!(Scalar::i().scale(&rat(1, 2)).to_string(), "1/2*i");
        assert_eq!(Scalar::i().to_latex(), "i");
        assert_eq!(root(rat(-1, 2), 3).to_latex(), "-\\frac{1}{2}\\sqrt{3}");
    }
}
