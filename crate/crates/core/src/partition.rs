//! Integer partitions and the covering relation of Young's graph.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// The derived `Ord` is plain lexicographic order on the parts and is only
/// meant for use as a map key. Output orderings use [`Partition::reverse_lex_cmp`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

/// Which member of its self-conjugate cover a partition is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoverRole {
    Smaller,
    Larger,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::domain(format!(
                "partition {parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!(
                "partition {parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(Partition::new(parts.clone()).is_ok());
        Partition { parts }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Partition::from_parts_unchecked(if n == 0 { vec![] } else { vec![n] })
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition::from_parts_unchecked(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `r` (0-based), zero past the last row.
    pub fn part(&self, r: usize) -> usize {
        self.parts.get(r).copied().unwrap_or(0)
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        col < self.part(row)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// `max{i : i ≤ λ_i}` with 1-based rows.
    pub fn diagonal_length(&self) -> Result<usize> {
        if self.is_empty() {
            return Err(Error::domain("diagonal length of the empty partition"));
        }
        Ok(self
            .parts
            .iter()
            .enumerate()
            .take_while(|(i, &p)| *i < p)
            .count())
    }

    /// Rows (0-based) whose last cell can be removed.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&r| self.part(r) > self.part(r + 1))
            .collect()
    }

    /// Rows (0-based) where a cell can be added, including the new row below.
    pub fn addable_rows(&self) -> Vec<usize> {
        (0..=self.len())
            .filter(|&r| r == 0 || self.part(r - 1) > self.part(r))
            .collect()
    }

    pub fn remove_from_row(&self, r: usize) -> Result<Partition> {
        if !self.removable_rows().contains(&r) {
            return Err(Error::domain(format!(
                "row {} of {self} has no removable cell",
                r + 1
            )));
        }
        let mut parts = self.parts.clone();
        parts[r] -= 1;
        if parts[r] == 0 {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn add_to_row(&self, r: usize) -> Result<Partition> {
        if !self.addable_rows().contains(&r) {
            return Err(Error::domain(format!(
                "row {} of {self} has no addable cell",
                r + 1
            )));
        }
        let mut parts = self.parts.clone();
        if r == parts.len() {
            parts.push(1);
        } else {
            parts[r] += 1;
        }
        Ok(Partition { parts })
    }

    /// All partitions obtained by removing one corner, in reverse-lex order.
    pub fn down_set(&self) -> Result<Vec<Partition>> {
        if self.size() < 2 {
            return Err(Error::domain(format!("down set of {self} requires n >= 2")));
        }
        let mut out: Vec<Partition> = self
            .removable_rows()
            .into_iter()
            .map(|r| self.remove_from_row(r).expect("row is removable"))
            .collect();
        out.sort_by(Partition::reverse_lex_cmp);
        Ok(out)
    }

    /// All partitions obtained by adding one cell, in reverse-lex order.
    pub fn up_set(&self) -> Vec<Partition> {
        let mut out: Vec<Partition> = self
            .addable_rows()
            .into_iter()
            .map(|r| self.add_to_row(r).expect("row is addable"))
            .collect();
        out.sort_by(Partition::reverse_lex_cmp);
        out
    }

    /// True iff `mu` is obtained from `self` by removing one cell.
    pub fn covers(&self, mu: &Partition) -> bool {
        mu.size() + 1 == self.size()
            && mu.len() <= self.len()
            && (0..self.len()).all(|r| mu.part(r) <= self.part(r))
    }

    /// The row (0-based) of the unique cell of `self ∖ mu`.
    pub fn added_row(&self, mu: &Partition) -> Option<usize> {
        if !self.covers(mu) {
            return None;
        }
        (0..self.len()).find(|&r| self.part(r) != mu.part(r))
    }

    /// The other member of the self-conjugate cover containing `self`.
    ///
    /// `(1)` is paired with `(2,1)` as the smaller member.
    pub fn self_conjugate_cover_partner(&self) -> Result<(Partition, CoverRole)> {
        if !self.is_self_conjugate() || self.is_empty() {
            return Err(Error::domain(format!("{self} is not self-conjugate")));
        }
        if self.parts == [1] {
            return Ok((
                Partition::from_parts_unchecked(vec![2, 1]),
                CoverRole::Smaller,
            ));
        }
        let d = self.diagonal_length()?;
        // cell (d,d) is removable iff row d ends there and row d+1 is shorter
        let row = d - 1;
        if self.part(row) == d && self.part(row + 1) < d {
            Ok((self.remove_from_row(row)?, CoverRole::Larger))
        } else {
            Ok((self.add_to_row(d)?, CoverRole::Smaller))
        }
    }

    /// `λ` precedes `μ` when, at the first index where the zero-padded part
    /// sequences differ, `λ` has the larger part.
    pub fn reverse_lex_cmp(&self, other: &Partition) -> Ordering {
        let len = self.len().max(other.len());
        for k in 0..len {
            match other.part(k).cmp(&self.part(k)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    /// Whichever of `λ`, `λ'` comes first in reverse-lex order.
    pub fn canonical_pair_rep(&self) -> Partition {
        let conj = self.conjugate();
        if conj.reverse_lex_cmp(self) == Ordering::Less {
            conj
        } else {
            self.clone()
        }
    }
}

/// All partitions of `n`, in reverse-lex order (`(n)` first).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_parts_unchecked(prefix.clone()));
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(Error::parse(s, "empty partition"));
        }
        let parts = trimmed
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<usize>()
                    .map_err(|_| Error::parse(tok, "expected a positive integer part"))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| Error::parse(s, e.to_string()))
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}
