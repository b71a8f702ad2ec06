//! Exact property suites over Young's orthogonal form, the associator and the
//! Gelfand-Tsetlin construction.
//!
//! Every suite walks its shapes or labels in a fixed order and records one
//! entry per subject and check. A failing entry carries the first
//! counterexample found for that subject; later subjects are still checked.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::Serialize;

use crate::alt_labels::{class_representatives, labels, AltLabel, Sign};
use crate::associator::{apply_phi_with, phi_matrix_with};
use crate::error::{Error, Result};
use crate::geodesics::{class_members, RepresentativeRule};
use crate::gt_basis::{embed, gt_basis_with, gt_vector_with, restrict, BasisElement};
use crate::matrix::Matrix;
use crate::model::{Conventions, Standard};
use crate::partition::{partitions_of, CoverRole, Partition};
use crate::scalar::{GaussianRational, Scalar};
use crate::tableau::{enumerate_syt, StandardTableau};
use crate::yor::{act_simple_with, rep_matrix_with, GtVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub suite: String,
    pub subject: String,
    pub status: Status,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Report {
    entries: Vec<Entry>,
}

type Outcome = std::result::Result<(), String>;

/// Folds a library error into a failed outcome.
fn outcome(f: impl FnOnce() -> Result<Outcome>) -> Outcome {
    f().unwrap_or_else(|e| Err(format!("error: {e}")))
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    fn record(&mut self, suite: &str, subject: String, result: Outcome) {
        let (status, witness) = match result {
            Ok(()) => (Status::Pass, None),
            Err(w) => (Status::Fail, Some(w)),
        };
        self.entries.push(Entry {
            suite: suite.to_string(),
            subject,
            status,
            witness,
        });
    }

    /// One line per entry followed by a count of failures.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let status = match e.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            write!(out, "{status} {:<5} {}", e.suite, e.subject).unwrap();
            if let Some(w) = &e.witness {
                write!(out, " => {w}").unwrap();
            }
            out.push('\n');
        }
        let failed = self.failures().count();
        writeln!(out, "{} checks, {failed} failed", self.entries.len()).unwrap();
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

fn describe_difference(what: &str, lhs: &Matrix, rhs: &Matrix) -> String {
    let diffs = lhs.differences(rhs);
    match diffs.first() {
        None => format!("{what}: no difference"),
        Some(&(r, c)) => format!(
            "{what}: {} entries differ, first at ({r},{c}): {} vs {}",
            diffs.len(),
            lhs.get(r, c),
            rhs.get(r, c)
        ),
    }
}

fn check_equal(what: impl FnOnce() -> String, lhs: &Matrix, rhs: &Matrix) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(describe_difference(&what(), lhs, rhs))
    }
}

pub fn verify_yor(max_n: usize) -> Result<Report> {
    verify_yor_with(&Standard, max_n)
}

/// Involution, braid and commutation relations, symmetry and reality of the
/// matrices `ρ_λ(s_i)` for every `λ` with `2 ≤ |λ| ≤ max_n`.
pub fn verify_yor_with(model: &dyn Conventions, max_n: usize) -> Result<Report> {
    if max_n < 2 {
        return Err(Error::domain(format!(
            "yor suite requires max_n >= 2, got {max_n}"
        )));
    }
    let mut report = Report::new();
    for n in 2..=max_n {
        for lam in partitions_of(n) {
            let mats = match (1..n)
                .map(|i| rep_matrix_with(model, &lam, i))
                .collect::<Result<Vec<_>>>()
            {
                Ok(m) => m,
                Err(e) => {
                    report.record(
                        "yor",
                        format!("{lam}: matrices"),
                        Err(format!("error: {e}")),
                    );
                    continue;
                }
            };
            // mats[k] is the matrix of s_{k+1}
            let id = Matrix::identity(mats[0].dim());
            let involution = mats.iter().enumerate().try_for_each(|(k, m)| {
                check_equal(|| format!("s_{} squared vs identity", k + 1), &(m * m), &id)
            });
            report.record("yor", format!("{lam}: involution"), involution);

            let braid = mats.windows(2).enumerate().try_for_each(|(k, w)| {
                let lhs = &(&w[0] * &w[1]) * &w[0];
                let rhs = &(&w[1] * &w[0]) * &w[1];
                check_equal(|| format!("braid at i={}", k + 1), &lhs, &rhs)
            });
            report.record("yor", format!("{lam}: braid"), braid);

            let mut commutation = Ok(());
            'pairs: for a in 0..mats.len() {
                for b in a + 2..mats.len() {
                    let r = check_equal(
                        || format!("s_{} s_{} vs s_{} s_{}", a + 1, b + 1, b + 1, a + 1),
                        &(&mats[a] * &mats[b]),
                        &(&mats[b] * &mats[a]),
                    );
                    if r.is_err() {
                        commutation = r;
                        break 'pairs;
                    }
                }
            }
            report.record("yor", format!("{lam}: commutation"), commutation);

            let symmetric = mats.iter().enumerate().try_for_each(|(k, m)| {
                check_equal(
                    || format!("s_{} vs its transpose", k + 1),
                    m,
                    &m.transpose(),
                )
            });
            report.record("yor", format!("{lam}: symmetric"), symmetric);

            let real = match mats.iter().position(|m| !m.is_real()) {
                None => Ok(()),
                Some(k) => Err(format!("s_{} has a non-real entry", k + 1)),
            };
            report.record("yor", format!("{lam}: real"), real);
        }
    }
    Ok(report)
}

/// `c_{T_λ}` at the reference tableau for nine self-conjugate shapes.
pub const FACTOR_TABLE: [(&str, &str); 9] = [
    ("2,1", "i"),
    ("2,2", "i"),
    ("3,1,1", "-1"),
    ("3,2,1", "-1"),
    ("4,1,1,1", "-i"),
    ("4,2,1,1", "-i"),
    ("3,3,2", "-i"),
    ("3,3,3", "-i"),
    ("5,1,1,1,1", "1"),
];

fn gaussian_entry(s: &Scalar) -> Option<GaussianRational> {
    let mut out = GaussianRational::zero();
    for (q, c) in s.terms() {
        if q != 1 {
            return None;
        }
        out = c.clone();
    }
    Some(out)
}

/// Rank of a matrix whose entries are Gaussian rationals.
fn gaussian_rank(m: &Matrix) -> Option<usize> {
    let d = m.dim();
    let mut a: Vec<Vec<GaussianRational>> = m
        .rows()
        .map(|row| row.iter().map(gaussian_entry).collect::<Option<Vec<_>>>())
        .collect::<Option<Vec<_>>>()?;
    let mut rank = 0;
    for col in 0..d {
        let Some(pivot) = (rank..d).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = a[rank][col].inv().expect("pivot is nonzero");
        let pivot_row = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = &row[col] * &inv;
            for (entry, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *entry = &*entry + &(-&(&factor * p));
            }
        }
        rank += 1;
    }
    Some(rank)
}

fn eigenspace_dim(phi: &Matrix, eigenvalue: i64) -> Option<usize> {
    let mut shifted = phi.clone();
    for k in 0..phi.dim() {
        shifted.set(k, k, phi.get(k, k) - &Scalar::from_int(eigenvalue));
    }
    Some(phi.dim() - gaussian_rank(&shifted)?)
}

pub fn verify_associator(max_n: usize) -> Result<Report> {
    verify_associator_with(&Standard, max_n)
}

/// Anticommutation with `ρ_λ(s_i)`, `φ² = id`, `c_{s_iT} = −c_T`, balanced
/// `±1` eigenspaces and compatibility along self-conjugate covers, for every
/// self-conjugate `λ` with `3 ≤ |λ| ≤ max_n`; then the reference factors of
/// [`FACTOR_TABLE`].
pub fn verify_associator_with(model: &dyn Conventions, max_n: usize) -> Result<Report> {
    if max_n < 3 {
        return Err(Error::domain(format!(
            "associator suite requires max_n >= 3, got {max_n}"
        )));
    }
    let mut report = Report::new();
    for n in 3..=max_n {
        for lam in partitions_of(n)
            .into_iter()
            .filter(Partition::is_self_conjugate)
        {
            let phi = match phi_matrix_with(model, &lam) {
                Ok(m) => m,
                Err(e) => {
                    report.record(
                        "assoc",
                        format!("{lam}: phi matrix"),
                        Err(format!("error: {e}")),
                    );
                    continue;
                }
            };
            let anti = outcome(|| {
                for i in 1..n {
                    let m = rep_matrix_with(model, &lam, i)?;
                    let sum = &(&m * &phi) + &(&phi * &m);
                    if !sum.is_zero() {
                        let zero = Matrix::zeros(sum.dim());
                        return Ok(Err(describe_difference(
                            &format!("s_{i} phi + phi s_{i}"),
                            &sum,
                            &zero,
                        )));
                    }
                }
                Ok(Ok(()))
            });
            report.record("assoc", format!("{lam}: anticommutation"), anti);

            let involution = check_equal(
                || "phi squared vs identity".to_string(),
                &(&phi * &phi),
                &Matrix::identity(phi.dim()),
            );
            report.record("assoc", format!("{lam}: involution"), involution);

            let alternation = outcome(|| {
                for t in enumerate_syt(&lam) {
                    let c = model.assoc_coeff(&lam, &t)?;
                    for i in 1..n {
                        let Ok(s) = t.swap_adjacent(i) else { continue };
                        let cs = model.assoc_coeff(&lam, &s)?;
                        if cs != -c.clone() {
                            return Ok(Err(format!("c[{t}] = {c} but c[{s}] = {cs}")));
                        }
                    }
                }
                Ok(Ok(()))
            });
            report.record("assoc", format!("{lam}: sign alternation"), alternation);

            let half = phi.dim() / 2;
            let eigen = match (eigenspace_dim(&phi, 1), eigenspace_dim(&phi, -1)) {
                (Some(p), Some(m)) if p == half && m == half => Ok(()),
                (Some(p), Some(m)) => Err(format!(
                    "eigenspace dimensions {p} (+1) and {m} (-1), expected {half} each"
                )),
                _ => Err("phi has entries outside Q(i)".to_string()),
            };
            report.record("assoc", format!("{lam}: eigenspaces"), eigen);

            if let Ok((mu, CoverRole::Larger)) = lam.self_conjugate_cover_partner() {
                let cover = outcome(|| {
                    for t in enumerate_syt(&mu) {
                        let v = GtVector::basis(t.clone());
                        let lhs = apply_phi_with(model, &lam, &embed(&v, &lam)?)?;
                        let rhs = embed(&apply_phi_with(model, &mu, &v)?, &lam)?;
                        if lhs != rhs {
                            return Ok(Err(format!(
                                "at [{t}]: phi_lambda gives {lhs}, phi_mu gives {rhs}"
                            )));
                        }
                    }
                    Ok(Ok(()))
                });
                report.record("assoc", format!("{mu} < {lam}: cover"), cover);
            }
        }
    }
    for (shape, expected) in FACTOR_TABLE {
        let result = outcome(|| {
            let lam: Partition = shape.parse()?;
            let reference = StandardTableau::reference(&lam)?;
            let c = model.assoc_coeff(&lam, &reference)?;
            Ok(match c.as_fourth_root() {
                Some(u) if u.as_str() == expected => Ok(()),
                _ => Err(format!("c at [{reference}] is {c}, expected {expected}")),
            })
        });
        report.record("assoc", format!("{shape}: reference factor"), result);
    }
    Ok(report)
}

/// Number of standard tableaux of the label's shape by enumeration, halved for
/// signed labels.
fn dim_by_enumeration(alpha: &AltLabel) -> usize {
    let f = enumerate_syt(alpha.partition()).len();
    if alpha.is_signed() {
        f / 2
    } else {
        f
    }
}

/// Orthogonal projection of `x` onto the span of pairwise orthogonal vectors.
fn project(basis: &[BasisElement], x: &GtVector) -> Option<GtVector> {
    let mut out = GtVector::zero(x.shape().clone());
    for e in basis {
        let norm = e.vector.inner(&e.vector).as_rational()?;
        let coeff = e.vector.inner(x).scale(&norm.recip());
        out = &out + &e.vector.scale(&coeff);
    }
    Some(out)
}

pub fn verify_gt(alpha: &AltLabel) -> Result<Report> {
    verify_gt_with(&Standard, alpha)
}

/// Properties of the basis for one label `α`: count, unit coefficients,
/// support prefixes, `φ`-eigenvectors, orthogonality, equivalent-path ratios,
/// consistency with the level below and invariance of the span under `A_n`.
pub fn verify_gt_with(model: &dyn Conventions, alpha: &AltLabel) -> Result<Report> {
    let mut report = Report::new();
    let n = alpha.size();
    let lam = alpha.partition().clone();
    let basis = match gt_basis_with(model, alpha, RepresentativeRule::default()) {
        Ok(b) => {
            report.record("gt", format!("{alpha}: construction"), Ok(()));
            b
        }
        Err(e) => {
            report.record(
                "gt",
                format!("{alpha}: construction"),
                Err(format!("error: {e}")),
            );
            return Ok(report);
        }
    };

    let expected = dim_by_enumeration(alpha);
    let count = if basis.len() == expected && crate::alt_labels::dim_alt(alpha) == expected as u128
    {
        Ok(())
    } else {
        Err(format!(
            "{} vectors, dim_alt {}, enumeration gives {expected}",
            basis.len(),
            crate::alt_labels::dim_alt(alpha)
        ))
    };
    report.record("gt", format!("{alpha}: count"), count);

    let roots = basis.iter().find_map(|e| {
        e.vector
            .terms()
            .find(|(_, c)| c.as_fourth_root().is_none())
            .map(|(t, c)| format!("path {}: coefficient {c} at [{t}]", e.path))
    });
    report.record(
        "gt",
        format!("{alpha}: fourth roots"),
        roots.map_or(Ok(()), Err),
    );

    let prefixes = outcome(|| {
        for e in &basis {
            for t in e.vector.support() {
                for k in 2..=n {
                    let shape = t.prefix_shape(k)?;
                    let want = e.path.at(k).partition();
                    if shape != *want && shape != want.conjugate() {
                        return Ok(Err(format!(
                            "path {}: [{t}] has level-{k} shape {shape}",
                            e.path
                        )));
                    }
                }
            }
        }
        Ok(Ok(()))
    });
    report.record("gt", format!("{alpha}: support prefixes"), prefixes);

    if let Some(sign) = alpha.sign() {
        let eigen = outcome(|| {
            for e in &basis {
                let image = apply_phi_with(model, &lam, &e.vector)?;
                let want = match sign {
                    Sign::Plus => e.vector.clone(),
                    Sign::Minus => -&e.vector,
                };
                if image != want {
                    return Ok(Err(format!("path {}: phi(u) = {image}", e.path)));
                }
            }
            Ok(Ok(()))
        });
        report.record("gt", format!("{alpha}: eigenvector"), eigen);
    }

    let mut ortho = Ok(());
    'outer: for (a, x) in basis.iter().enumerate() {
        if x.vector.is_zero() {
            ortho = Err(format!("path {}: zero vector", x.path));
            break;
        }
        for y in &basis[a + 1..] {
            let ip = x.vector.inner(&y.vector);
            if !ip.is_zero() {
                ortho = Err(format!(
                    "paths {} and {}: inner product {ip}",
                    x.path, y.path
                ));
                break 'outer;
            }
        }
    }
    report.record("gt", format!("{alpha}: orthogonality"), ortho);

    let equivalent = outcome(|| {
        for e in &basis {
            for other in class_members(&e.path) {
                if other.end() != alpha || other == e.path {
                    continue;
                }
                let w = gt_vector_with(model, &other)?;
                match w.ratio_to(&e.vector) {
                    Some(z) if z.as_fourth_root().is_some() => {}
                    Some(z) => {
                        return Ok(Err(format!("{other} = ({z}) * {}, not a unit", e.path)));
                    }
                    None => {
                        return Ok(Err(format!("{other} is not a multiple of {}", e.path)));
                    }
                }
            }
        }
        Ok(Ok(()))
    });
    report.record("gt", format!("{alpha}: equivalent paths"), equivalent);

    if n >= 3 {
        let recursive = outcome(|| {
            for e in &basis {
                let prev_path = e.path.truncated().expect("n >= 3");
                let prev = prev_path.end();
                let lower = gt_vector_with(model, &prev_path)?;
                let mu = prev.partition();
                let got = restrict(&e.vector, mu)?;
                if got != lower {
                    return Ok(Err(format!(
                        "path {}: block {mu} is {got}, expected {lower}",
                        e.path
                    )));
                }
                let mu_conj = mu.conjugate();
                if mu_conj == *mu || !lam.covers(&mu_conj) {
                    continue;
                }
                let block = restrict(&e.vector, &mu_conj)?;
                if block.is_zero() {
                    continue;
                }
                let partner = class_members(&prev_path)
                    .into_iter()
                    .find(|p| p.end() == &prev.conjugate());
                let Some(partner) = partner else {
                    return Ok(Err(format!(
                        "path {}: block {mu_conj} is nonzero but no equivalent path ends there",
                        e.path
                    )));
                };
                let w = gt_vector_with(model, &partner)?;
                if block
                    .ratio_to(&w)
                    .and_then(|z| z.as_fourth_root())
                    .is_none()
                {
                    return Ok(Err(format!(
                        "path {}: block {mu_conj} is {block}, not a unit multiple of u[{partner}]",
                        e.path
                    )));
                }
            }
            Ok(Ok(()))
        });
        report.record("gt", format!("{alpha}: restriction"), recursive);
    }

    let invariance = outcome(|| {
        for i in 2..n {
            for e in &basis {
                let x =
                    act_simple_with(model, &lam, 1, &act_simple_with(model, &lam, i, &e.vector)?)?;
                match project(&basis, &x) {
                    Some(p) if p == x => {}
                    Some(_) => {
                        return Ok(Err(format!(
                            "s_1 s_{i} u[{}] leaves the span of the basis",
                            e.path
                        )));
                    }
                    None => return Ok(Err("basis vector with irrational squared norm".into())),
                }
            }
        }
        Ok(Ok(()))
    });
    report.record("gt", format!("{alpha}: invariance"), invariance);

    Ok(report)
}

pub fn verify_gt_levels(max_n: usize) -> Result<Report> {
    verify_gt_levels_with(&Standard, max_n)
}

/// [`verify_gt_with`] for every label of size `2..=max_n`, plus the identity
/// `Σ dim² = n!/2` over isomorphism classes at each level.
pub fn verify_gt_levels_with(model: &dyn Conventions, max_n: usize) -> Result<Report> {
    if max_n < 2 {
        return Err(Error::domain(format!(
            "gt suite requires max_n >= 2, got {max_n}"
        )));
    }
    let mut report = Report::new();
    for n in 2..=max_n {
        for alpha in labels(n)? {
            report.extend(verify_gt_with(model, &alpha)?);
        }
        let sum: BigInt = class_representatives(n)?
            .iter()
            .map(|a| {
                let d = BigInt::from(dim_by_enumeration(a));
                &d * &d
            })
            .sum();
        let half_factorial: BigInt = (1..=n).map(BigInt::from).product::<BigInt>() / 2;
        let result = if sum == half_factorial {
            Ok(())
        } else {
            Err(format!("sum of squares {sum}, n!/2 = {half_factorial}"))
        };
        report.record("gt", format!("level {n}: sum of squares"), result);
    }
    Ok(report)
}

/// Which suites to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Yor,
    Assoc,
    Gt,
    All,
}

pub fn run_suite(suite: Suite, max_n: usize) -> Result<Report> {
    run_suite_with(&Standard, suite, max_n)
}

pub fn run_suite_with(model: &dyn Conventions, suite: Suite, max_n: usize) -> Result<Report> {
    Ok(match suite {
        Suite::Yor => verify_yor_with(model, max_n)?,
        Suite::Assoc => verify_associator_with(model, max_n)?,
        Suite::Gt => verify_gt_levels_with(model, max_n)?,
        Suite::All => {
            let mut r = verify_yor_with(model, max_n)?;
            r.extend(verify_associator_with(model, max_n)?);
            r.extend(verify_gt_levels_with(model, max_n)?);
            r
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{FlippedColumnSign, SignlessAssociator};

    fn failing(report: &Report) -> Vec<String> {
        report.failures().map(|e| e.subject.clone()).collect()
    }

    #[test]
    fn small_suites_pass() {
        let r = verify_yor(4).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        let r = verify_associator(5).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        let r = verify_gt_levels(5).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn single_labels() {
        for s in ["2", "3,1,1^-", "4,1,1"] {
            let r = verify_gt(&s.parse().unwrap()).unwrap();
            assert!(r.passed(), "{}", r.to_text());
        }
    }

    #[test]
    fn bad_ranges() {
        assert!(verify_yor(1).is_err());
        assert!(verify_associator(2).is_err());
        assert!(verify_gt_levels(1).is_err());
    }

    #[test]
    fn faults_are_flagged() {
        let r = verify_yor_with(&FlippedColumnSign, 3).unwrap();
        assert!(failing(&r).contains(&"2,1: braid".to_string()));
        let r = verify_associator_with(&SignlessAssociator, 3).unwrap();
        assert!(!r.passed());
        let r = verify_gt_with(&SignlessAssociator, &"3,1,1^+".parse().unwrap()).unwrap();
        assert!(!r.passed());
        let r = verify_gt_with(&FlippedColumnSign, &"2,1^+".parse().unwrap()).unwrap();
        assert!(failing(&r).contains(&"2,1^+: invariance".to_string()));
    }

    #[test]
    fn text_and_json_forms() {
        let r = verify_yor(2).unwrap();
        let text = r.to_text();
        assert!(text.starts_with("PASS yor   2: involution\n"));
        assert!(text.ends_with("10 checks, 0 failed\n"));
        let json = r.to_json();
        assert_eq!(
            json[0],
            serde_json::json!({"suite": "yor", "subject": "2: involution", "status": "pass", "witness": null})
        );
    }

    #[test]
    fn gaussian_rank_of_small_matrices() {
        assert_eq!(gaussian_rank(&Matrix::identity(3)), Some(3));
        assert_eq!(gaussian_rank(&Matrix::zeros(2)), Some(0));
        let mut m = Matrix::zeros(2);
        m.set(0, 0, Scalar::one());
        m.set(0, 1, Scalar::i());
        m.set(1, 0, -Scalar::i());
        m.set(1, 1, Scalar::one());
        assert_eq!(gaussian_rank(&m), Some(1));
    }
}
