//! Acceptance criteria, one line of output each.
//!
//! Runs without the libtest harness so the per-criterion lines always reach
//! stdout; the process exits with status 1 if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use altgt::alt_labels::labels;
use altgt::associator::assoc_coeff;
use altgt::geodesics::{branch_count_r, class_members, enumerate_paths, path_equivalent};
use altgt::gt_basis::{gt_basis, gt_vector};
use altgt::model::{FlippedColumnSign, SignlessAssociator};
use altgt::verify::{
    verify_associator, verify_associator_with, verify_gt_levels, verify_gt_levels_with, verify_yor,
    verify_yor_with, Report,
};
use altgt::{AltLabel, AltPath, GtVector, Partition, Scalar, StandardTableau};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn path(s: &str) -> AltPath {
    s.parse().unwrap()
}

fn one() -> Scalar {
    Scalar::one()
}

fn i() -> Scalar {
    Scalar::i()
}

fn vector(shape: &str, terms: &[(&str, Scalar)]) -> GtVector {
    GtVector::from_terms(
        p(shape),
        terms
            .iter()
            .map(|(t, c)| (t.parse::<StandardTableau>().unwrap(), c.clone())),
    )
    .unwrap()
}

fn within(start: Instant, limit: Duration) -> Check {
    let took = start.elapsed();
    if took <= limit {
        Ok(())
    } else {
        Err(format!("took {took:?}, limit {limit:?}"))
    }
}

fn report_ok(name: &str, r: &Report) -> Check {
    match r.failures().next() {
        None => Ok(()),
        Some(e) => Err(format!(
            "{name}: {} failing checks, first {} ({})",
            r.failures().count(),
            e.subject,
            e.witness.clone().unwrap_or_default()
        )),
    }
}

fn factor_table() -> Check {
    let start = Instant::now();
    let table = [
        ("2,1", i()),
        ("2,2", i()),
        ("3,1,1", -one()),
        ("3,2,1", -one()),
        ("4,1,1,1", -i()),
        ("4,2,1,1", -i()),
        ("3,3,2", -i()),
        ("3,3,3", -i()),
        ("5,1,1,1,1", one()),
    ];
    for (shape, expected) in table {
        let lam = p(shape);
        let reference = StandardTableau::reference(&lam).map_err(|e| e.to_string())?;
        let got = assoc_coeff(&lam, &reference).map_err(|e| e.to_string())?;
        if got != expected {
            return Err(format!("{shape}: got {got}, expected {expected}"));
        }
    }
    within(start, Duration::from_secs(1))
}

fn worked_chain() -> Check {
    let start = Instant::now();
    let expected = [
        ("2;2,1^+", vector("2,1", &[("12/3", one()), ("13/2", i())])),
        (
            "2;2,1^+;3,1",
            vector("3,1", &[("124/3", one()), ("134/2", i())]),
        ),
        (
            "2;2,1^+;3,1;3,1,1^-",
            vector(
                "3,1,1",
                &[
                    ("124/3/5", one()),
                    ("134/2/5", i()),
                    ("135/2/4", -one()),
                    ("125/3/4", i()),
                ],
            ),
        ),
        (
            "2;2,1^+;3,1;3,1,1^-;4,1,1",
            vector(
                "4,1,1",
                &[
                    ("1246/3/5", one()),
                    ("1346/2/5", i()),
                    ("1356/2/4", -one()),
                    ("1256/3/4", i()),
                ],
            ),
        ),
    ];
    for (route, want) in expected {
        let got = gt_vector(&path(route)).map_err(|e| e.to_string())?;
        if got != want {
            return Err(format!("{route}: got {got}, expected {want}"));
        }
    }
    within(start, Duration::from_secs(1))
}

fn ten_vectors() -> Check {
    let start = Instant::now();
    let expected = [
        (
            "1,1;1,1,1;2,1,1;3,1,1^+;4,1,1",
            vector("4,1,1", &[("1456/2/3", one()), ("1236/4/5", -one())]),
        ),
        (
            "1,1;2,1^+;2,1,1;3,1,1^+;4,1,1",
            vector(
                "4,1,1",
                &[
                    ("1356/2/4", one()),
                    ("1246/3/5", one()),
                    ("1256/3/4", -i()),
                    ("1346/2/5", i()),
                ],
            ),
        ),
        (
            "1,1;2,1^-;2,1,1;3,1,1^+;4,1,1",
            vector(
                "4,1,1",
                &[
                    ("1356/2/4", one()),
                    ("1246/3/5", one()),
                    ("1256/3/4", i()),
                    ("1346/2/5", -i()),
                ],
            ),
        ),
        (
            "1,1;1,1,1;2,1,1;3,1,1^-;4,1,1",
            vector("4,1,1", &[("1456/2/3", one()), ("1236/4/5", one())]),
        ),
        (
            "1,1;2,1^+;2,1,1;3,1,1^-;4,1,1",
            vector(
                "4,1,1",
                &[
                    ("1356/2/4", one()),
                    ("1246/3/5", -one()),
                    ("1256/3/4", -i()),
                    ("1346/2/5", -i()),
                ],
            ),
        ),
        (
            "1,1;2,1^-;2,1,1;3,1,1^-;4,1,1",
            vector(
                "4,1,1",
                &[
                    ("1356/2/4", one()),
                    ("1246/3/5", -one()),
                    ("1256/3/4", i()),
                    ("1346/2/5", i()),
                ],
            ),
        ),
        (
            "1,1;2,1^+;3,1;4,1;4,1,1",
            vector("4,1,1", &[("1345/2/6", one()), ("1245/3/6", -i())]),
        ),
        (
            "1,1;2,1^-;3,1;4,1;4,1,1",
            vector("4,1,1", &[("1345/2/6", one()), ("1245/3/6", i())]),
        ),
        ("2;3;3,1;4,1;4,1,1", vector("4,1,1", &[("1235/4/6", one())])),
        ("2;3;4;4,1;4,1,1", vector("4,1,1", &[("1234/5/6", one())])),
    ];
    let basis = gt_basis(&"4,1,1".parse().unwrap()).map_err(|e| e.to_string())?;
    let got: BTreeSet<(Vec<AltLabel>, String)> = basis
        .iter()
        .map(|e| (e.path.class_key(), format!("{:?}", e.vector)))
        .collect();
    let want: BTreeSet<(Vec<AltLabel>, String)> = expected
        .iter()
        .map(|(route, v)| (path(route).class_key(), format!("{v:?}")))
        .collect();
    if basis.len() != 10 || got.len() != 10 || want.len() != 10 {
        return Err(format!("{} basis vectors", basis.len()));
    }
    for (route, v) in &expected {
        let key = path(route).class_key();
        match basis.iter().find(|e| e.path.class_key() == key) {
            None => return Err(format!("no basis vector for the class of {route}")),
            Some(e) if e.vector != *v => {
                return Err(format!(
                    "class of {route}: got {} from {}, expected {v}",
                    e.vector, e.path
                ));
            }
            Some(_) => {}
        }
    }
    if got != want {
        return Err("(class, vector) sets differ".into());
    }
    within(start, Duration::from_secs(1))
}

fn scalar_ratio() -> Check {
    let a = gt_vector(&path("1,1;2,1^+")).map_err(|e| e.to_string())?;
    let b = gt_vector(&path("2;2,1^+")).map_err(|e| e.to_string())?;
    let scaled = b.scale(&-i());
    if a == scaled {
        Ok(())
    } else {
        Err(format!("{a} is not -i * ({b})"))
    }
}

fn brute_force_class(a: &AltPath) -> BTreeSet<AltPath> {
    let end = a.end();
    let mut ends = vec![end.clone()];
    if end.conjugate() != *end {
        ends.push(end.conjugate());
    }
    ends.iter()
        .flat_map(|b| enumerate_paths(b).unwrap())
        .filter(|q| path_equivalent(a, q).unwrap())
        .collect()
}

fn class_sizes() -> Check {
    let start = Instant::now();
    let listed: BTreeSet<AltPath> = [
        "2;2,1^+;3,1;3,1,1^+;4,1,1",
        "2;2,1^+;3,1;3,1,1^+;3,1,1,1",
        "2;2,1^+;2,1,1;3,1,1^+;4,1,1",
        "2;2,1^+;2,1,1;3,1,1^+;3,1,1,1",
        "1,1;2,1^+;3,1;3,1,1^+;4,1,1",
        "1,1;2,1^+;3,1;3,1,1^+;3,1,1,1",
        "1,1;2,1^+;2,1,1;3,1,1^+;4,1,1",
        "1,1;2,1^+;2,1,1;3,1,1^+;3,1,1,1",
    ]
    .into_iter()
    .map(path)
    .collect();
    let example = path("2;2,1^+;3,1;3,1,1^+;4,1,1");
    let members: BTreeSet<AltPath> = class_members(&example).into_iter().collect();
    if members != listed {
        return Err(format!(
            "class of {example} has {} members, not the listed eight",
            members.len()
        ));
    }
    let mut checked = 0usize;
    for n in 2..=8 {
        for alpha in labels(n).map_err(|e| e.to_string())? {
            for a in enumerate_paths(&alpha).map_err(|e| e.to_string())? {
                let members = class_members(&a);
                let size = 1usize << (branch_count_r(&a) + 1);
                if members.len() != size {
                    return Err(format!("{a}: {} members, 2^(r+1) = {size}", members.len()));
                }
                let brute = brute_force_class(&a);
                if members.into_iter().collect::<BTreeSet<_>>() != brute {
                    return Err(format!("{a}: class differs from brute force"));
                }
                checked += 1;
            }
        }
    }
    if checked == 0 {
        return Err("no paths checked".into());
    }
    within(start, Duration::from_secs(30))
}

fn representation_identities() -> Check {
    let start = Instant::now();
    let r = verify_yor(7).map_err(|e| e.to_string())?;
    report_ok("yor", &r)?;
    within(start, Duration::from_secs(60))
}

fn associator_identities() -> Check {
    let start = Instant::now();
    let r = verify_associator(7).map_err(|e| e.to_string())?;
    report_ok("assoc", &r)?;
    for check in ["anticommutation", "involution", "eigenspaces"] {
        if !r.entries().iter().any(|e| e.subject.ends_with(check)) {
            return Err(format!("no {check} checks ran"));
        }
    }
    for cover in ["2,1 < 2,2: cover", "3,1,1 < 3,2,1: cover"] {
        if !r.entries().iter().any(|e| e.subject == cover) {
            return Err(format!("missing {cover}"));
        }
    }
    within(start, Duration::from_secs(30))
}

/// Standard fillings of `λ` counted over all `n!` placements of `1..=n`.
fn count_fillings(lam: &Partition) -> usize {
    fn place(
        grid: &mut [Vec<usize>],
        used: &mut [bool],
        cell: usize,
        cells: &[(usize, usize)],
    ) -> usize {
        if cell == cells.len() {
            let standard = cells.iter().all(|&(r, c)| {
                (c == 0 || grid[r][c - 1] < grid[r][c]) && (r == 0 || grid[r - 1][c] < grid[r][c])
            });
            return usize::from(standard);
        }
        let (r, c) = cells[cell];
        let mut total = 0;
        for x in 1..used.len() {
            if !used[x] {
                used[x] = true;
                grid[r][c] = x;
                total += place(grid, used, cell + 1, cells);
                used[x] = false;
            }
        }
        total
    }
    let cells: Vec<(usize, usize)> = lam
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = lam.parts().iter().map(|&len| vec![0; len]).collect();
    let mut used = vec![false; lam.size() + 1];
    place(&mut grid, &mut used, 0, &cells)
}

fn gt_properties() -> Check {
    let start = Instant::now();
    let r = verify_gt_levels(7).map_err(|e| e.to_string())?;
    report_ok("gt", &r)?;
    for n in 2..=7 {
        for alpha in labels(n).map_err(|e| e.to_string())? {
            let f = count_fillings(alpha.partition());
            let want = if alpha.is_signed() { f / 2 } else { f };
            let got = gt_basis(&alpha).map_err(|e| e.to_string())?.len();
            if got != want {
                return Err(format!(
                    "{alpha}: {got} vectors, {want} by exhaustive fillings"
                ));
            }
            if !r
                .entries()
                .iter()
                .any(|e| e.subject == format!("{alpha}: orthogonality"))
            {
                return Err(format!("{alpha} was not verified"));
            }
        }
        if !r
            .entries()
            .iter()
            .any(|e| e.subject == format!("level {n}: sum of squares"))
        {
            return Err(format!("level {n} sum of squares missing"));
        }
    }
    within(start, Duration::from_secs(60))
}

fn flagged(name: &str, r: altgt::Result<Report>) -> Check {
    match r {
        Ok(report) if !report.passed() => Ok(()),
        Ok(_) => Err(format!("{name} passed a mutated model")),
        Err(e) => Err(format!("{name}: {e}")),
    }
}

fn fault_injection() -> Check {
    flagged(
        "yor with flipped column sign",
        verify_yor_with(&FlippedColumnSign, 5),
    )?;
    flagged(
        "assoc with flipped column sign",
        verify_associator_with(&FlippedColumnSign, 5),
    )?;
    flagged(
        "assoc with signless associator",
        verify_associator_with(&SignlessAssociator, 5),
    )?;
    flagged(
        "gt with flipped column sign",
        verify_gt_levels_with(&FlippedColumnSign, 5),
    )?;
    flagged(
        "gt with signless associator",
        verify_gt_levels_with(&SignlessAssociator, 5),
    )?;
    Ok(())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 factor table", factor_table),
        ("2 worked chain", worked_chain),
        ("3 ten-vector example", ten_vectors),
        ("4 scalar ratio", scalar_ratio),
        ("5 class sizes", class_sizes),
        ("6 representation identities", representation_identities),
        ("7 associator identities", associator_identities),
        ("8 gt properties", gt_properties),
        ("9 fault injection", fault_injection),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(()) => println!("criterion {name}: PASS"),
            Err(why) => {
                failed += 1;
                println!("criterion {name}: FAIL ({why})");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
