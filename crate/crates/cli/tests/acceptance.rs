//! Acceptance criteria. Each criterion prints one `[PASS]` or `[FAIL]` line;
//! the process exits nonzero if any criterion fails. All comparisons are
//! exact: the tolerance is zero for every criterion.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::Instant;

use hilbert_core::enumeration::{enumerate_algebras, enumerate_raw, AlgebraCatalog};
use hilbert_core::{
    all_ce, all_filters, closure::ce_via_monomial_filters, run_suite, validate_hilbert, verify, HilbertAlgebra, Status, Suite,
    VerificationReport,
};

type Outcome = Result<String, String>;
type Criterion = fn() -> Outcome;
type Tables = BTreeSet<Vec<Vec<usize>>>;

fn catalogs(max: usize) -> Vec<AlgebraCatalog> {
    (1..=max).map(|n| enumerate_algebras(n).expect("within the default bound")).collect()
}

fn named(max: usize) -> Vec<(String, HilbertAlgebra)> {
    catalogs(max).iter().flat_map(AlgebraCatalog::named).collect()
}

/// Runs the suites on every algebra; any failed check fails the criterion.
fn suites_hold(max: usize, suites: &[Suite]) -> Result<VerificationReport, String> {
    let mut report = VerificationReport::new();
    for (name, alg) in named(max) {
        for &s in suites {
            report.extend(run_suite(&alg, s).with_subject(&name));
        }
    }
    if let Some(c) = report.failed().next() {
        return Err(format!(
            "{} [{}] failed: {:?}",
            c.check,
            c.subject,
            c.witnesses.first().map(|w| format!("{}: {}", w.law, w.detail))
        ));
    }
    Ok(report)
}

fn summarize(r: &VerificationReport) -> String {
    let instances: u64 = r.checks.iter().map(|c| c.instances).sum();
    format!(
        "{} checks, {} law instances, {} skipped",
        r.checks.len(),
        instances,
        r.count(Status::Skipped)
    )
}

// Direct transcription of the axioms, used as the brute-force oracle.
fn naive_axioms(n: usize, one: usize, t: &[usize]) -> bool {
    let imp = |x: usize, y: usize| t[x * n + y];
    for x in 0..n {
        for y in 0..n {
            if imp(x, imp(y, x)) != one {
                return false;
            }
            if x != y && imp(x, y) == one && imp(y, x) == one {
                return false;
            }
            for z in 0..n {
                if imp(imp(x, imp(y, z)), imp(imp(x, y), imp(x, z))) != one {
                    return false;
                }
            }
        }
    }
    true
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for x in (0..n).filter(|x| !p.contains(x)) {
                let mut q = p.clone();
                q.push(x);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// Least relabelled table over all permutations; a complete invariant that
/// shares no code with the library's canonical form.
fn orbit_key(alg: &HilbertAlgebra, perms: &[Vec<usize>]) -> (usize, Vec<Vec<usize>>) {
    perms
        .iter()
        .map(|p| {
            let q = alg.permuted(p);
            (q.one(), q.table())
        })
        .min()
        .expect("nonempty")
}

/// All tables on n elements with unit `one`. With `reduced`, the cells
/// forced by x -> x = 1 and x -> 1 = 1 are fixed.
fn brute_force(n: usize, one: usize, reduced: bool) -> (u64, Tables, Tables) {
    let free: Vec<usize> = (0..n * n)
        .filter(|&c| !reduced || (c / n != c % n && c % n != one))
        .collect();
    let mut t: Vec<usize> = (0..n * n).map(|c| if free.contains(&c) { 0 } else { one }).collect();
    let mut tried = 0u64;
    let mut oracle = BTreeSet::new();
    let mut validator = BTreeSet::new();
    let total = (n as u64).pow(free.len() as u32);
    for code in 0..total {
        let mut k = code;
        for &c in &free {
            t[c] = (k % n as u64) as usize;
            k /= n as u64;
        }
        tried += 1;
        let rows: Vec<Vec<usize>> = t.chunks(n).map(<[usize]>::to_vec).collect();
        if naive_axioms(n, one, &t) {
            oracle.insert(rows.clone());
        }
        if validate_hilbert(&rows, one).is_ok() {
            validator.insert(rows);
        }
    }
    (tried, oracle, validator)
}

fn criterion_1() -> Outcome {
    let mut tables = 0;
    let mut classes = Vec::new();
    for n in 1..=4 {
        let perms = permutations(n);
        let units: Vec<usize> = if n <= 3 { (0..n).collect() } else { vec![n - 1] };
        let mut orbit_keys = BTreeSet::new();
        for &one in &units {
            let (tried, oracle, validator) = brute_force(n, one, n == 4);
            tables += tried;
            if oracle != validator {
                return Err(format!("n={n}, unit {one}: oracle and validator disagree"));
            }
            if one == n - 1 {
                let searched: BTreeSet<_> = enumerate_raw(n).iter().map(HilbertAlgebra::table).collect();
                if searched != oracle {
                    return Err(format!("n={n}: propagated search finds {} tables, oracle {}", searched.len(), oracle.len()));
                }
            }
            for rows in &oracle {
                let alg = validate_hilbert(rows, one).expect("validated above");
                orbit_keys.insert(orbit_key(&alg, &perms));
            }
        }
        let catalog = enumerate_algebras(n).map_err(|e| e.to_string())?;
        if catalog.len() != orbit_keys.len() {
            return Err(format!("n={n}: catalog has {} classes, oracle {}", catalog.len(), orbit_keys.len()));
        }
        classes.push(orbit_keys.len());
    }
    if classes[2] != 2 {
        return Err(format!("n=3 gives {} classes", classes[2]));
    }
    Ok(format!("{tables} tables checked; classes per n = {classes:?}"))
}

fn criterion_2() -> Outcome {
    suites_hold(5, &[Suite::MultiplierCalculus]).map(|r| format!("n<=5: {}", summarize(&r)))
}

fn criterion_3() -> Outcome {
    let r = suites_hold(5, &[Suite::CeStructure])?;
    for (name, alg) in named(5) {
        let ce: BTreeSet<Vec<usize>> =
            all_ce(&alg).map_err(|e| e.to_string())?.maps().iter().map(|f| f.images().to_vec()).collect();
        let via: BTreeSet<Vec<usize>> =
            ce_via_monomial_filters(&alg).map_err(|e| e.to_string())?.iter().map(|f| f.images().to_vec()).collect();
        if ce != via {
            return Err(format!("{name}: isotone multipliers and monomial-filter construction differ"));
        }
    }
    Ok(format!("n<=5: {}; both constructions agree", summarize(&r)))
}

fn criterion_4() -> Outcome {
    suites_hold(4, &[Suite::Isotmult2, Suite::IdempotentLemma]).map(|r| format!("n<=4: {}", summarize(&r)))
}

fn criterion_5() -> Outcome {
    let r = suites_hold(5, &[Suite::Kappa])?;
    for (name, alg) in named(5) {
        let ce = all_ce(&alg).map_err(|e| e.to_string())?.len();
        let filters = all_filters(&alg).len();
        if ce != filters {
            return Err(format!("{name}: |CE| = {ce} but {filters} filters"));
        }
    }
    Ok(format!("n<=5: {}; |CE| = |filters| everywhere", summarize(&r)))
}

fn criterion_6() -> Outcome {
    suites_hold(5, &[Suite::Ff]).map(|r| format!("n<=5: {}", summarize(&r)))
}

fn criterion_7() -> Outcome {
    let r = suites_hold(5, &[Suite::Impla, Suite::FixpointCharacterization])?;
    let ran = r.checks.iter().filter(|c| c.check == "impla" && c.status == Status::Pass).count();
    if ran == 0 {
        return Err("no implication algebra was checked".into());
    }
    Ok(format!("n<=5: {}; {ran} implication algebras", summarize(&r)))
}

fn criterion_8() -> Outcome {
    suites_hold(5, &[Suite::JoinDensity, Suite::Kk2, Suite::Brouwerian, Suite::Bridge])
        .map(|r| format!("n<=5: {}", summarize(&r)))
}

fn criterion_9() -> Outcome {
    let algebras = named(4);
    let r = verify(&algebras, &[Suite::CrossSurvey]);
    if !r.passed() {
        let c = r.failed().next().expect("a failed check");
        return Err(format!("counterexample: {:?}", c.witnesses.first()));
    }
    Ok(format!("{} algebras, {}", algebras.len(), summarize(&r)))
}

fn criterion_10() -> Outcome {
    let run = |jobs: &str| {
        Command::new(env!("CARGO_BIN_EXE_hilbert"))
            .args(["--jobs", jobs, "verify", "--enumerate", "4", "--suite", "all"])
            .output()
            .map_err(|e| e.to_string())
    };
    let a = run("1")?;
    let b = run("4")?;
    if !a.status.success() || !b.status.success() {
        return Err(format!("exit codes {:?} and {:?}", a.status.code(), b.status.code()));
    }
    if a.stdout != b.stdout {
        return Err("reports differ between --jobs 1 and --jobs 4".into());
    }
    Ok(format!("{} identical bytes", a.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 10] = [
        ("validator agrees with brute force, n<=4", criterion_1),
        ("multiplier calculus", criterion_2),
        ("CE structure", criterion_3),
        ("isotone multipliers and idempotent composition", criterion_4),
        ("kernel embedding", criterion_5),
        ("fixpoint anti-embedding", criterion_6),
        ("implication algebras and fixpoint filters", criterion_7),
        ("adjoint semilattice and Brouwerian extension", criterion_8),
        ("cross-algebra survey, n<=4", criterion_9),
        ("determinism across worker counts", criterion_10),
    ];
    let mut failed = 0;
    for (k, (title, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] criterion {}: {title} ({detail}; {secs:.2}s)", k + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] criterion {}: {title} ({detail}; {secs:.2}s)", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
