//! Standard Young tableaux.
//!
//! A standard tableau of shape `λ` is the same thing as a geodesic from `(1)`
//! to `λ` in Young's graph: the cells holding `1..=k` form the `k`-th shape on
//! the path. Rows and columns are 0-based internally; text and docs use the
//! usual 1-based convention.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{CoverRole, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    // Rows first so the derived order is lexicographic on the row-reading
    // word among tableaux of one shape.
    rows: Vec<Vec<usize>>,
    shape: Partition,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::domain(format!("tableau rows {rows:?}: {e}")))?;
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for &x in rows.iter().flatten() {
            if x == 0 || x > n || seen[x] {
                return Err(Error::domain(format!(
                    "tableau {rows:?} must contain each of 1..={n} exactly once"
                )));
            }
            seen[x] = true;
        }
        for (r, row) in rows.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                let right_ok = row.get(c + 1).is_none_or(|&y| y > x);
                let below_ok = rows
                    .get(r + 1)
                    .and_then(|next| next.get(c))
                    .is_none_or(|&y| y > x);
                if !right_ok || !below_ok {
                    return Err(Error::domain(format!(
                        "tableau {rows:?} is not increasing along rows and columns"
                    )));
                }
            }
        }
        Ok(StandardTableau { rows, shape })
    }

    fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        let shape = Partition::from_parts_unchecked(rows.iter().map(Vec::len).collect());
        StandardTableau { rows, shape }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// `(row, col)` of entry `k`, 0-based.
    pub fn position(&self, k: usize) -> Option<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .find_map(|(r, row)| row.iter().position(|&x| x == k).map(|c| (r, c)))
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row)?.get(col).copied()
    }

    /// Reflection about the principal diagonal.
    pub fn conjugate(&self) -> StandardTableau {
        let width = self.shape.part(0);
        let rows = (0..width)
            .map(|c| {
                self.rows
                    .iter()
                    .take_while(|row| row.len() > c)
                    .map(|row| row[c])
                    .collect()
            })
            .collect();
        StandardTableau::from_rows_unchecked(rows)
    }

    fn check_generator(&self, i: usize) -> Result<()> {
        let n = self.size();
        if i == 0 || i >= n {
            return Err(Error::domain(format!(
                "generator index {i} outside 1..={} for {self}",
                n.saturating_sub(1)
            )));
        }
        Ok(())
    }

    /// `r = (c' − r') − (c − r)` where `i` sits at `(r, c)` and `i+1` at `(r', c')`.
    pub fn axial_distance(&self, i: usize) -> Result<i64> {
        self.check_generator(i)?;
        let (r, c) = self.position(i).expect("entry present");
        let (r2, c2) = self.position(i + 1).expect("entry present");
        Ok((c2 as i64 - r2 as i64) - (c as i64 - r as i64))
    }

    /// `s_i T`: exchange `i` and `i+1`, which must share neither a row nor a column.
    pub fn swap_adjacent(&self, i: usize) -> Result<StandardTableau> {
        self.check_generator(i)?;
        let (r, c) = self.position(i).expect("entry present");
        let (r2, c2) = self.position(i + 1).expect("entry present");
        if r == r2 || c == c2 {
            return Err(Error::precondition(format!(
                "{i} and {} share a {} in {self}",
                i + 1,
                if r == r2 { "row" } else { "column" }
            )));
        }
        let mut rows = self.rows.clone();
        rows[r][c] = i + 1;
        rows[r2][c2] = i;
        Ok(StandardTableau::from_rows_unchecked(rows))
    }

    /// `T^λ`: place a box holding `n` in the unique cell of `λ ∖ shape(T)`.
    pub fn append_box(&self, lambda: &Partition) -> Result<StandardTableau> {
        let row = lambda
            .added_row(&self.shape)
            .ok_or_else(|| Error::domain(format!("{} is not covered by {lambda}", self.shape)))?;
        let mut rows = self.rows.clone();
        if row == rows.len() {
            rows.push(Vec::new());
        }
        rows[row].push(lambda.size());
        Ok(StandardTableau::from_rows_unchecked(rows))
    }

    /// Drops the box holding the largest entry.
    pub fn remove_largest(&self) -> Result<StandardTableau> {
        let n = self.size();
        if n == 0 {
            return Err(Error::domain("empty tableau"));
        }
        let (r, _) = self.position(n).expect("largest entry present");
        let mut rows = self.rows.clone();
        rows[r].pop();
        if rows[r].is_empty() {
            rows.pop();
        }
        Ok(StandardTableau::from_rows_unchecked(rows))
    }

    /// Shape of the cells holding `1..=k`.
    pub fn prefix_shape(&self, k: usize) -> Result<Partition> {
        if k == 0 || k > self.size() {
            return Err(Error::domain(format!(
                "prefix length {k} outside 1..={}",
                self.size()
            )));
        }
        let parts: Vec<usize> = self
            .rows
            .iter()
            .map(|row| row.iter().filter(|&&x| x <= k).count())
            .take_while(|&len| len > 0)
            .collect();
        Ok(Partition::from_parts_unchecked(parts))
    }

    /// The geodesic `(shape_1, …, shape_n)` in Young's graph.
    pub fn shape_chain(&self) -> Vec<Partition> {
        (1..=self.size())
            .map(|k| self.prefix_shape(k).expect("k in range"))
            .collect()
    }

    /// Fills rows left to right, top to bottom with `1..=n`.
    pub fn row_superstandard(lambda: &Partition) -> StandardTableau {
        let mut next = 1;
        let rows = lambda
            .parts()
            .iter()
            .map(|&len| {
                let row = (next..next + len).collect();
                next += len;
                row
            })
            .collect();
        StandardTableau::from_rows_unchecked(rows)
    }

    /// The reference tableau `T_λ` for a self-conjugate `λ`.
    ///
    /// The smaller member of a self-conjugate cover gets the row superstandard
    /// tableau; the larger member gets its partner's reference tableau with `n`
    /// added on the diagonal.
    pub fn reference(lambda: &Partition) -> Result<StandardTableau> {
        let (partner, role) = lambda.self_conjugate_cover_partner()?;
        match role {
            CoverRole::Smaller => Ok(StandardTableau::row_superstandard(lambda)),
            CoverRole::Larger => StandardTableau::row_superstandard(&partner).append_box(lambda),
        }
    }

    fn uses_spaces(&self) -> bool {
        self.size() > 9
    }
}

/// All standard tableaux of shape `λ`, ordered lexicographically by row-reading word.
pub fn enumerate_syt(lambda: &Partition) -> Vec<StandardTableau> {
    fn go(shape: &Partition) -> Vec<StandardTableau> {
        let n = shape.size();
        if n == 0 {
            return vec![StandardTableau::from_rows_unchecked(Vec::new())];
        }
        let mut out = Vec::new();
        for r in shape.removable_rows() {
            let smaller = shape.remove_from_row(r).expect("removable");
            for t in go(&smaller) {
                out.push(t.append_box(shape).expect("covered"));
            }
        }
        out
    }
    let mut all = go(lambda);
    all.sort();
    all
}

/// Number of standard tableaux of shape `λ` (the hook length formula).
pub fn count_syt(lambda: &Partition) -> u128 {
    let conj = lambda.conjugate();
    let n = lambda.size() as u128;
    let mut num: u128 = (1..=n).product();
    let mut den: u128 = 1;
    for (r, &len) in lambda.parts().iter().enumerate() {
        for c in 0..len {
            let hook = (len - c - 1) + (conj.part(c) - r - 1) + 1;
            den *= hook as u128;
        }
    }
    num /= den;
    num
}

/// Sign of `w_T`, the permutation sending the entry of `T_λ` in each cell to
/// the entry of `T` in the same cell.
pub fn permutation_sign(lambda: &Partition, t: &StandardTableau) -> Result<i8> {
    if t.shape() != lambda {
        return Err(Error::domain(format!(
            "tableau {t} has shape {}, expected {lambda}",
            t.shape()
        )));
    }
    let reference = StandardTableau::reference(lambda)?;
    Ok(relative_sign(&reference, t))
}

/// Sign of the cell-wise permutation taking `from` to `to` (same shape).
pub(crate) fn relative_sign(from: &StandardTableau, to: &StandardTableau) -> i8 {
    let n = from.size();
    let mut perm = vec![0usize; n + 1];
    for (a, b) in from.rows.iter().flatten().zip(to.rows.iter().flatten()) {
        perm[*a] = *b;
    }
    let mut seen = vec![false; n + 1];
    let mut sign = 1i8;
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            k = perm[k];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.uses_spaces() { " " } else { "" };
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                f.write_str("/")?;
            }
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            f.write_str(&cells.join(sep))?;
        }
        Ok(())
    }
}

impl FromStr for StandardTableau {
    type Err = Error;

    /// Accepts `"1 2 4/3/5"` or, when every entry is a single digit, `"124/3/5"`.
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .trim()
            .split('/')
            .map(|row| {
                let row = row.trim();
                if row.is_empty() {
                    return Err(Error::parse(s, "empty tableau row"));
                }
                let tokens: Vec<String> = if row.contains(char::is_whitespace) {
                    row.split_whitespace().map(str::to_string).collect()
                } else {
                    row.chars().map(String::from).collect()
                };
                tokens
                    .iter()
                    .map(|t| {
                        t.parse::<usize>()
                            .map_err(|_| Error::parse(t.as_str(), "expected an entry"))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        StandardTableau::new(rows).map_err(|e| Error::parse(s, e.to_string()))
    }
}

impl Serialize for StandardTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for StandardTableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<usize>>::deserialize(d)?;
        StandardTableau::new(rows).map_err(serde::de::Error::custom)
    }
}
