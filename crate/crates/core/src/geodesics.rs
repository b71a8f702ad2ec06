//! Label sequences `(α⁽²⁾, …, α⁽ⁿ⁾)` through the `A_n` branching graph.
//!
//! Two sequences describe the same geodesic when they agree label by label up
//! to `∼`. Paths always store raw labels with genuine partition containment
//! between consecutive steps, so each one can be fed to the embedding
//! recursion in [`crate::gt_basis`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::alt_labels::{dagger_down_set, equivalent, in_dagger, AltLabel};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct AltPath {
    labels: Vec<AltLabel>,
}

impl AltPath {
    pub fn new(labels: Vec<AltLabel>) -> Result<Self> {
        let first = labels
            .first()
            .ok_or_else(|| Error::domain("a path needs at least one label"))?;
        if first.size() != 2 {
            return Err(Error::domain(format!(
                "path must start at level 2, not at {first}"
            )));
        }
        for w in labels.windows(2) {
            if !in_dagger(&w[0], &w[1]) {
                return Err(Error::domain(format!("{} is not below {}", w[0], w[1])));
            }
        }
        Ok(AltPath { labels })
    }

    pub fn labels(&self) -> &[AltLabel] {
        &self.labels
    }

    /// `n`, the size of the final label.
    pub fn size(&self) -> usize {
        self.labels.len() + 1
    }

    pub fn end(&self) -> &AltLabel {
        self.labels.last().expect("paths are nonempty")
    }

    /// The label at level `k` (`2 ≤ k ≤ n`).
    pub fn at(&self, k: usize) -> &AltLabel {
        &self.labels[k - 2]
    }

    /// `α*`: the path with its last label dropped.
    pub fn truncated(&self) -> Option<AltPath> {
        (self.labels.len() > 1).then(|| AltPath {
            labels: self.labels[..self.labels.len() - 1].to_vec(),
        })
    }

    /// The `∼`-class key: canonical label at every level.
    pub fn class_key(&self) -> Vec<AltLabel> {
        self.labels.iter().map(AltLabel::canonical).collect()
    }

    fn extended(&self, next: AltLabel) -> AltPath {
        let mut labels = self.labels.clone();
        labels.push(next);
        AltPath { labels }
    }
}

impl fmt::Display for AltPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, label) in self.labels.iter().enumerate() {
            if k > 0 {
                f.write_str(";")?;
            }
            write!(f, "{label}")?;
        }
        Ok(())
    }
}

impl FromStr for AltPath {
    type Err = Error;

    /// `"2;2,1^+;3,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let labels = s
            .split(';')
            .map(str::parse::<AltLabel>)
            .collect::<Result<Vec<_>>>()?;
        AltPath::new(labels).map_err(|e| Error::parse(s, e.to_string()))
    }
}

/// `Σ̃(α)`: every path ending at `α`, in lexicographic label order.
pub fn enumerate_paths(alpha: &AltLabel) -> Result<Vec<AltPath>> {
    if alpha.size() < 2 {
        return Err(Error::domain(format!("paths require n >= 2, got {alpha}")));
    }
    let mut out = if alpha.size() == 2 {
        vec![AltPath {
            labels: vec![alpha.clone()],
        }]
    } else {
        let mut out = Vec::new();
        for beta in dagger_down_set(alpha)? {
            for p in enumerate_paths(&beta)? {
                out.push(p.extended(alpha.clone()));
            }
        }
        out
    };
    out.sort();
    Ok(out)
}

/// Label-by-label `∼`.
pub fn path_equivalent(a: &AltPath, b: &AltPath) -> Result<bool> {
    if a.size() != b.size() {
        return Err(Error::domain(format!(
            "paths of different lengths: {a} and {b}"
        )));
    }
    for (x, y) in a.labels.iter().zip(&b.labels) {
        if !equivalent(x, y)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of steps from a signed label to an unsigned one.
pub fn branch_count_r(a: &AltPath) -> usize {
    a.labels
        .windows(2)
        .filter(|w| w[0].is_signed() && !w[1].is_signed())
        .count()
}

/// Every valid path `∼`-equivalent to `a`, sorted. Its size is `2^(r+1)`.
pub fn class_members(a: &AltPath) -> Vec<AltPath> {
    let mut partial: Vec<Vec<AltLabel>> = vec![Vec::new()];
    for label in &a.labels {
        let mut options = vec![label.clone()];
        let conj = label.conjugate();
        if conj != *label {
            options.push(conj);
        }
        let mut next = Vec::new();
        for prefix in &partial {
            for opt in &options {
                if prefix.last().is_none_or(|prev| in_dagger(prev, opt)) {
                    let mut p = prefix.clone();
                    p.push(opt.clone());
                    next.push(p);
                }
            }
        }
        partial = next;
    }
    let mut out: Vec<AltPath> = partial
        .into_iter()
        .map(|labels| AltPath { labels })
        .collect();
    out.sort();
    out
}

/// How to pick one path per class among those ending exactly at `α`.
///
/// Both rules compare label sequences position by position with the
/// [`AltLabel`] order (reverse-lex partitions, `+` before `−`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RepresentativeRule {
    /// The last sequence in the order, i.e. `(1,1)` over `(2)`, `(2,1,1)` over `(3,1)`.
    /// Reproduces the vectors printed for `(4,1,1)` in the reference example.
    #[default]
    ReverseLexLast,
    /// The first sequence in the order.
    ReverseLexFirst,
}

impl RepresentativeRule {
    fn prefers(self, candidate: &AltPath, current: &AltPath) -> bool {
        match self {
            RepresentativeRule::ReverseLexLast => candidate > current,
            RepresentativeRule::ReverseLexFirst => candidate < current,
        }
    }
}

/// One path per geodesic of `α`, each ending at `α` itself, using the default rule.
pub fn geodesic_representatives(alpha: &AltLabel) -> Result<Vec<AltPath>> {
    geodesic_representatives_by(alpha, RepresentativeRule::default())
}

/// One path per geodesic of `α`, sorted by label sequence.
pub fn geodesic_representatives_by(
    alpha: &AltLabel,
    rule: RepresentativeRule,
) -> Result<Vec<AltPath>> {
    let mut classes: BTreeMap<Vec<AltLabel>, AltPath> = BTreeMap::new();
    for p in enumerate_paths(alpha)? {
        let key = p.class_key();
        match classes.get(&key) {
            Some(current) if !rule.prefers(&p, current) => {}
            _ => {
                classes.insert(key, p);
            }
        }
    }
    let mut reps: Vec<AltPath> = classes.into_values().collect();
    reps.sort();
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(s: &str) -> AltPath {
        s.parse().unwrap()
    }

    fn a(s: &str) -> AltLabel {
        s.parse().unwrap()
    }

    #[test]
    fn small_path_sets() {
        assert_eq!(enumerate_paths(&a("2")).unwrap(), vec![path("2")]);
        assert_eq!(
            enumerate_paths(&a("2,1^+")).unwrap(),
            vec![path("2;2,1^+"), path("1,1;2,1^+")]
        );
    }

    #[test]
    fn invalid_paths_are_rejected() {
        assert!("3;3,1".parse::<AltPath>().is_err());
        assert!("2;2,1^+;2,2^-".parse::<AltPath>().is_err());
        assert!("2;1,1,1".parse::<AltPath>().is_err());
        assert!("2;3;2,1,1".parse::<AltPath>().is_err());
    }

    #[test]
    fn equivalence_of_paths() {
        assert!(path_equivalent(&path("2;2,1^+"), &path("1,1;2,1^+")).unwrap());
        assert!(!path_equivalent(&path("2;2,1^+"), &path("2;2,1^-")).unwrap());
        let p = path("2;3;3,1");
        assert!(path_equivalent(&p, &p).unwrap());
        assert!(path_equivalent(&path("2"), &p).is_err());
    }

    #[test]
    fn branch_counts() {
        assert_eq!(branch_count_r(&path("2;2,1^+;3,1;3,1,1^+;4,1,1")), 2);
        assert_eq!(branch_count_r(&path("2;3;4")), 0);
        assert_eq!(branch_count_r(&path("1,1;2,1^-;2,1,1")), 1);
    }

    #[test]
    fn small_classes() {
        assert_eq!(class_members(&path("2")), vec![path("2"), path("1,1")]);
        assert_eq!(
            class_members(&path("2;2,1^+")),
            vec![path("2;2,1^+"), path("1,1;2,1^+")]
        );
    }

    #[test]
    fn representatives() {
        assert_eq!(geodesic_representatives(&a("4,1,1")).unwrap().len(), 10);
        assert_eq!(
            geodesic_representatives(&a("2,1^+")).unwrap(),
            vec![path("1,1;2,1^+")]
        );
        assert_eq!(
            geodesic_representatives_by(&a("2,1^+"), RepresentativeRule::ReverseLexFirst).unwrap(),
            vec![path("2;2,1^+")]
        );
        assert_eq!(
            geodesic_representatives(&a("5")).unwrap(),
            vec![path("2;3;4;5")]
        );
    }
}
