//! Labels for irreducible representations of `A_n`.
//!
//! A label is either a non-self-conjugate partition `λ` (the restriction of
//! `V_λ`) or a self-conjugate partition tagged `+` or `−` (an eigenspace of
//! the associator). `λ` and `λ'` label isomorphic representations.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagram::BratteliDiagram;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::tableau::count_syt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AltLabel {
    partition: Partition,
    sign: Option<Sign>,
}

impl AltLabel {
    /// Builds a label; the sign must be present exactly when `partition` is self-conjugate.
    pub fn new(partition: Partition, sign: Option<Sign>) -> Result<Self> {
        if partition.is_empty() {
            return Err(Error::domain("label of the empty partition"));
        }
        match (partition.is_self_conjugate(), sign) {
            (true, None) => Err(Error::domain(format!(
                "self-conjugate {partition} needs a sign (^+ or ^-)"
            ))),
            (false, Some(_)) => Err(Error::domain(format!(
                "{partition} is not self-conjugate and cannot carry a sign"
            ))),
            _ => Ok(AltLabel { partition, sign }),
        }
    }

    pub fn unsigned(partition: Partition) -> Result<Self> {
        AltLabel::new(partition, None)
    }

    pub fn signed(partition: Partition, sign: Sign) -> Result<Self> {
        AltLabel::new(partition, Some(sign))
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn sign(&self) -> Option<Sign> {
        self.sign
    }

    pub fn is_signed(&self) -> bool {
        self.sign.is_some()
    }

    pub fn size(&self) -> usize {
        self.partition.size()
    }

    /// The other member of the `∼` class, if there is one.
    pub fn conjugate(&self) -> AltLabel {
        match self.sign {
            Some(_) => self.clone(),
            None => AltLabel {
                partition: self.partition.conjugate(),
                sign: None,
            },
        }
    }

    /// Representative of the `∼` class: reverse-lex first of `{λ, λ'}`, or the label itself when signed.
    pub fn canonical(&self) -> AltLabel {
        match self.sign {
            Some(_) => self.clone(),
            None => AltLabel {
                partition: self.partition.canonical_pair_rep(),
                sign: None,
            },
        }
    }
}

impl Ord for AltLabel {
    /// Reverse-lex on partitions, then unsigned, `+`, `−`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.partition
            .reverse_lex_cmp(&other.partition)
            .then_with(|| self.sign.cmp(&other.sign))
    }
}

impl PartialOrd for AltLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AltLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.partition)?;
        if let Some(s) = self.sign {
            write!(f, "^{}", s.as_str())?;
        }
        Ok(())
    }
}

impl FromStr for AltLabel {
    type Err = Error;

    /// `"3,1"`, `"2,1^+"`, `"3,1,1^-"`. Only ASCII signs are accepted.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let (body, sign) = match trimmed.split_once('^') {
            None => (trimmed, None),
            Some((body, "+")) => (body, Some(Sign::Plus)),
            Some((body, "-")) => (body, Some(Sign::Minus)),
            Some((_, other)) => {
                return Err(Error::parse(other, "sign must be ^+ or ^-"));
            }
        };
        let partition: Partition = body.parse()?;
        AltLabel::new(partition, sign).map_err(|e| Error::parse(trimmed, e.to_string()))
    }
}

impl<'de> Deserialize<'de> for AltLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            partition: Partition,
            sign: Option<Sign>,
        }
        let raw = Raw::deserialize(d)?;
        AltLabel::new(raw.partition, raw.sign).map_err(serde::de::Error::custom)
    }
}

/// `Θ̃(n)`: every non-self-conjugate partition once, every self-conjugate one twice.
pub fn labels(n: usize) -> Result<Vec<AltLabel>> {
    if n < 2 {
        return Err(Error::domain(format!("labels require n >= 2, got {n}")));
    }
    let mut out = Vec::new();
    for lam in partitions_of(n) {
        if lam.is_self_conjugate() {
            out.push(AltLabel::signed(lam.clone(), Sign::Plus)?);
            out.push(AltLabel::signed(lam, Sign::Minus)?);
        } else {
            out.push(AltLabel::unsigned(lam)?);
        }
    }
    Ok(out)
}

/// One label per isomorphism class of irreducible `A_n` representations.
pub fn class_representatives(n: usize) -> Result<Vec<AltLabel>> {
    let mut out: Vec<AltLabel> = labels(n)?
        .into_iter()
        .filter(|a| a.canonical() == *a)
        .collect();
    out.sort();
    Ok(out)
}

/// `α ∼ β`: equal, or unsigned and conjugate to each other.
pub fn equivalent(a: &AltLabel, b: &AltLabel) -> Result<bool> {
    if a.size() != b.size() {
        return Err(Error::domain(format!(
            "cannot compare labels of different sizes: {a} and {b}"
        )));
    }
    Ok(a == b || (!a.is_signed() && !b.is_signed() && b.partition == a.partition.conjugate()))
}

/// `α†`: labels of size `n−1` below `α`, with genuine containment of partitions.
///
/// Signs carry over between self-conjugate shapes; a self-conjugate shape
/// below an unsigned label contributes both signs.
pub fn dagger_down_set(a: &AltLabel) -> Result<Vec<AltLabel>> {
    if a.size() < 3 {
        return Err(Error::domain(format!(
            "dagger down set of {a} requires n >= 3"
        )));
    }
    let mut out = Vec::new();
    for mu in a.partition.down_set()? {
        if mu.is_self_conjugate() {
            match a.sign {
                Some(s) => out.push(AltLabel::signed(mu, s)?),
                None => {
                    out.push(AltLabel::signed(mu.clone(), Sign::Plus)?);
                    out.push(AltLabel::signed(mu, Sign::Minus)?);
                }
            }
        } else {
            out.push(AltLabel::unsigned(mu)?);
        }
    }
    Ok(out)
}

/// True iff `b ∈ a†`.
pub fn in_dagger(b: &AltLabel, a: &AltLabel) -> bool {
    a.size() >= 3
        && b.size() + 1 == a.size()
        && a.partition.covers(&b.partition)
        && match (a.sign, b.sign) {
            (Some(x), Some(y)) => x == y,
            _ => true,
        }
}

/// Dimension of `V_α`: `f^λ`, halved for signed labels.
pub fn dim_alt(a: &AltLabel) -> u128 {
    let f = count_syt(&a.partition);
    if a.is_signed() {
        f / 2
    } else {
        f
    }
}

/// Bratteli diagram of `A_2 ⊂ A_3 ⊂ ⋯ ⊂ A_max_n` on class representatives.
pub fn bratteli(max_n: usize) -> Result<BratteliDiagram> {
    if max_n < 2 {
        return Err(Error::domain(format!(
            "bratteli requires max_n >= 2, got {max_n}"
        )));
    }
    let mut diagram = BratteliDiagram::new("alternating");
    for n in 2..=max_n {
        for a in class_representatives(n)? {
            diagram.add_node(n, a.to_string(), a.sign());
        }
    }
    for n in 3..=max_n {
        for a in labels(n)? {
            for b in dagger_down_set(&a)? {
                diagram.add_edge(b.canonical().to_string(), a.canonical().to_string());
            }
        }
    }
    Ok(diagram)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(s: &str) -> AltLabel {
        s.parse().unwrap()
    }

    fn strings(v: &[AltLabel]) -> Vec<String> {
        v.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn label_sets() {
        assert_eq!(strings(&labels(2).unwrap()), ["2", "1,1"]);
        assert_eq!(
            strings(&labels(3).unwrap()),
            ["3", "2,1^+", "2,1^-", "1,1,1"]
        );
        assert_eq!(
            strings(&labels(4).unwrap()),
            ["4", "3,1", "2,2^+", "2,2^-", "2,1,1", "1,1,1,1"]
        );
        assert!(labels(1).is_err());
    }

    #[test]
    fn parsing() {
        assert_eq!(a("3,1,1^+").sign(), Some(Sign::Plus));
        assert_eq!(a("3,1,1^-").to_string(), "3,1,1^-");
        assert!("2,1".parse::<AltLabel>().is_err());
        assert!("3,1^+".parse::<AltLabel>().is_err());
        assert!("2,1^\u{2212}".parse::<AltLabel>().is_err());
        assert!("2,1^x".parse::<AltLabel>().is_err());
        let json = serde_json::to_string(&a("2,1^-")).unwrap();
        assert_eq!(json, r#"{"partition":[2,1],"sign":"-"}"#);
        assert_eq!(serde_json::from_str::<AltLabel>(&json).unwrap(), a("2,1^-"));
    }

    #[test]
    fn equivalence() {
        assert!(equivalent(&a("3,1"), &a("2,1,1")).unwrap());
        assert!(!equivalent(&a("2,1^+"), &a("2,1^-")).unwrap());
        assert!(equivalent(&a("4"), &a("4")).unwrap());
        assert!(equivalent(&a("4"), &a("3")).is_err());
    }

    #[test]
    fn dagger_sets() {
        assert_eq!(
            strings(&dagger_down_set(&a("3,1")).unwrap()),
            ["3", "2,1^+", "2,1^-"]
        );
        let mut got = strings(&dagger_down_set(&a("3,2,1^+")).unwrap());
        got.sort();
        assert_eq!(got, ["2,2,1", "3,1,1^+", "3,2"]);
        assert_eq!(
            strings(&dagger_down_set(&a("2,1^-")).unwrap()),
            ["2", "1,1"]
        );
        assert!(dagger_down_set(&a("2")).is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(dim_alt(&a("2,1^+")), 1);
        assert_eq!(dim_alt(&a("4,1,1")), 10);
        assert_eq!(dim_alt(&a("7")), 1);
    }

    #[test]
    fn sum_of_squared_dimensions_is_half_factorial() {
        for n in 2..=8usize {
            let total: u128 = class_representatives(n)
                .unwrap()
                .iter()
                .map(|x| dim_alt(x).pow(2))
                .sum();
            let half_factorial: u128 = (1..=n as u128).product::<u128>() / 2;
            assert_eq!(total, half_factorial, "n = {n}");
        }
    }

    #[test]
    fn branching_table() {
        // four cells of the A_n branching table, checked on raw labels
        for n in 3..=8 {
            for alpha in labels(n).unwrap() {
                let down = dagger_down_set(&alpha).unwrap();
                for mu in alpha.partition().down_set().unwrap() {
                    let hits: Vec<&AltLabel> =
                        down.iter().filter(|b| *b.partition() == mu).collect();
                    match (alpha.is_signed(), mu.is_self_conjugate()) {
                        (false, false) | (true, false) => {
                            assert_eq!(hits.len(), 1);
                            assert!(!hits[0].is_signed());
                        }
                        (false, true) => {
                            let signs: Vec<_> = hits.iter().map(|b| b.sign()).collect();
                            assert_eq!(signs, [Some(Sign::Plus), Some(Sign::Minus)]);
                        }
                        (true, true) => {
                            assert_eq!(hits.len(), 1);
                            assert_eq!(hits[0].sign(), alpha.sign());
                        }
                    }
                }
                for b in &down {
                    assert!(in_dagger(b, &alpha));
                }
                if let Some(Sign::Plus) = alpha.sign() {
                    let minus = AltLabel::signed(alpha.partition().clone(), Sign::Minus).unwrap();
                    let flipped: Vec<AltLabel> = dagger_down_set(&minus)
                        .unwrap()
                        .into_iter()
                        .map(|b| match b.sign() {
                            Some(_) => AltLabel::signed(b.partition().clone(), Sign::Plus).unwrap(),
                            None => b,
                        })
                        .collect();
                    assert_eq!(flipped, down);
                }
            }
        }
    }

    #[test]
    fn bratteli_edges() {
        let d = bratteli(8).unwrap();
        assert!(d.has_edge("3,3,1", "4,2,2"));
        assert!(d.has_edge("2", "2,1^+"));
        assert!(!d.nodes().iter().any(|node| node.label == "1,1"));
        assert_eq!(d.level(2).len(), 1);
    }
}
