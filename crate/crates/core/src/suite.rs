//! Named verification suites and the driver that runs them over a list of
//! algebras.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::adjoint::{check_brouwerian, check_filter_ideal_bridge, check_impla3, check_join_density, check_kk2};
use crate::algebra::{violations, HilbertAlgebra};
use crate::closure::{
    ce_from_monomial_filter, check_ce_structure, check_ff, check_fixpoint_filter_characterization,
    check_idempotent_lemma, check_isotmult2, check_kappa, implication_extras, kappa_inverse_cases, SUBSET_SCAN_LIMIT,
};
use crate::enumeration::cross_theorem_survey;
use crate::error::Error;
use crate::filters::{
    all_filters, all_filters_brute_force, congruence_classes, filter_generated, is_filter, is_filter_by_entailment,
    is_ideal, is_monomial, is_up_set, lower_set,
};
use crate::multipliers::{check_multiplier_calculus, meet_within};
use crate::report::{Check, CheckResult, VerificationReport};
use crate::subset::ElementSubset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Algebra,
    Filters,
    MultiplierCalculus,
    CeStructure,
    Isotmult2,
    IdempotentLemma,
    Kappa,
    Ff,
    JoinDensity,
    Kk2,
    Brouwerian,
    Bridge,
    Impla,
    FixpointCharacterization,
    CrossSurvey,
}

impl Suite {
    pub const ALL: [Suite; 15] = [
        Suite::Algebra,
        Suite::Filters,
        Suite::MultiplierCalculus,
        Suite::CeStructure,
        Suite::Isotmult2,
        Suite::IdempotentLemma,
        Suite::Kappa,
        Suite::Ff,
        Suite::JoinDensity,
        Suite::Kk2,
        Suite::Brouwerian,
        Suite::Bridge,
        Suite::Impla,
        Suite::FixpointCharacterization,
        Suite::CrossSurvey,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Filters => "filters",
            Suite::MultiplierCalculus => "multiplier-calculus",
            Suite::CeStructure => "ce-structure",
            Suite::Isotmult2 => "isotmult2",
            Suite::IdempotentLemma => "idempotent-lemma",
            Suite::Kappa => "kappa",
            Suite::Ff => "ff",
            Suite::JoinDensity => "join-density",
            Suite::Kk2 => "kk2",
            Suite::Brouwerian => "brouwerian",
            Suite::Bridge => "bridge",
            Suite::Impla => "impla",
            Suite::FixpointCharacterization => "fixpoint-characterization",
            Suite::CrossSurvey => "cross-survey",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|x| x.name()).collect();
                format!("unknown suite `{s}` (expected `all` or one of: {})", names.join(", "))
            })
    }
}

/// Parses a list of suite names; `all` selects every suite.
pub fn parse_suites<S: AsRef<str>>(names: &[S]) -> Result<Vec<Suite>, String> {
    let mut out = Vec::new();
    for n in names {
        if n.as_ref() == "all" {
            out.extend(Suite::ALL);
        } else {
            out.push(n.as_ref().parse()?);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Axioms, order, classification and blocks.
pub fn check_algebra(alg: &HilbertAlgebra) -> VerificationReport {
    let mut c = Check::new("algebra");
    let v = violations(alg.len(), alg.one(), alg.flat());
    c.law("axioms hold", v.is_empty(), || format!("{:?}", v.first()));
    c.law("natural order is a partial order with top 1", {
        let o = alg.natural_order();
        o.is_partial_order() && o.top() == Some(alg.one())
    }, String::new);
    for x in alg.elements() {
        c.law("1 -> x = x", alg.imp(alg.one(), x) == x, || format!("x={x}"));
    }
    let class = alg.classify();
    c.note(format!(
        "implication algebra: {}, implicative semilattice: {}",
        class.implication_algebra, class.implicative_semilattice
    ));
    if class.implication_algebra {
        for x in alg.elements() {
            for y in alg.elements() {
                let j = alg.imp(alg.imp(x, y), y);
                c.law("(x -> y) -> y is the join", alg.partial_join(x, y) == Some(j), || format!("x={x} y={y}"));
                let bounded = !(alg.down(x) & alg.down(y)).is_empty();
                if bounded {
                    c.law("bounded pairs have a meet", alg.partial_meet(x, y).is_some(), || format!("x={x} y={y}"));
                }
            }
        }
    }

    if alg.len() <= SUBSET_SCAN_LIMIT {
        let subalgebras: Vec<ElementSubset> =
            ElementSubset::all(alg.len()).filter(|&s| alg.is_subalgebra(s)).collect();
        let mut blocks = Vec::new();
        for &x in &subalgebras {
            for p in x.iter() {
                let b = alg.block_from(x, p);
                c.law("{x -> p : x in X} is a block for a subalgebra X containing p", alg.is_block(b), || {
                    format!("X={x} p={p}")
                });
                blocks.push(b);
            }
        }
        for b in ElementSubset::all(alg.len()).filter(|&b| alg.is_block(b)) {
            c.law(
                "every block arises from a subalgebra",
                subalgebras.iter().any(|&x| x.iter().any(|p| alg.block_from(x, p) == b)),
                || format!("B={b}"),
            );
            if class.implication_algebra {
                for x in b.iter() {
                    for y in b.iter() {
                        let m = alg.compatible_meet(x, y);
                        c.law("elements of a block are compatible", m.is_some(), || format!("B={b} x={x} y={y}"));
                        c.law("block meet = algebra meet", m == meet_within(alg, b, x, y), || {
                            format!("B={b} x={x} y={y}")
                        });
                    }
                }
            }
        }
    } else {
        c.note(format!("n > {SUBSET_SCAN_LIMIT}: blocks not enumerated"));
    }
    VerificationReport::single(c.finish())
}

/// Filter characterizations, generated filters, congruences and the sets
/// `J_a`.
pub fn check_filters(alg: &HilbertAlgebra) -> VerificationReport {
    let mut c = Check::new("filters");
    let fl = all_filters(alg);
    if alg.len() <= SUBSET_SCAN_LIMIT {
        for s in ElementSubset::all(alg.len()) {
            let f = is_filter(alg, s);
            c.law("the two filter definitions agree", f == is_filter_by_entailment(alg, s), || format!("S={s}"));
            c.law("filter_generated gives the least filter", {
                let g = filter_generated(alg, s);
                is_filter(alg, g) && s.is_subset(g) && (!f || g == s)
            }, || format!("S={s}"));
        }
        c.law("closure of principal filters finds every filter", fl.filters() == all_filters_brute_force(alg).as_slice(), String::new);
    }
    for &j in fl.filters() {
        c.law("filters are up-sets", is_up_set(alg, j), || format!("J={j}"));
        c.law("filters are relative subsemilattices", alg.is_relative_subsemilattice(j), || format!("J={j}"));
        c.law("finite filters are monomial", is_monomial(alg, j), || format!("J={j}"));
        let classes = congruence_classes(alg, j);
        c.law("the class of 1 is J", classes.class_of(alg.one()) == j, || format!("J={j}"));
        let union = classes.classes().iter().fold(ElementSubset::EMPTY, |acc, &k| acc | k);
        let total: usize = classes.classes().iter().map(|k| k.len()).sum();
        c.law("classes partition A", union == alg.universe() && total == alg.len(), || format!("J={j}"));
        for a in alg.elements() {
            c.law("J_a is an ideal", is_ideal(alg, lower_set(alg, j, a)), || format!("J={j} a={a}"));
        }
    }
    c.law("filter lattice is distributive", fl.lattice().is_distributive(), String::new);
    c.note(format!("{} filter(s)", fl.len()));
    VerificationReport::single(c.finish())
}

fn implication_only(name: &str, r: crate::error::Result<VerificationReport>) -> VerificationReport {
    match r {
        Ok(r) => r,
        Err(Error::Precondition(reason)) => VerificationReport::single(CheckResult::skipped(name, reason)),
        Err(e) => {
            let mut c = Check::new(name);
            c.law("suite runs", false, || e.to_string());
            VerificationReport::single(c.finish())
        }
    }
}

/// One per-algebra suite. [`Suite::CrossSurvey`] compares the algebra with
/// itself.
pub fn run_suite(alg: &HilbertAlgebra, suite: Suite) -> VerificationReport {
    match suite {
        Suite::Algebra => check_algebra(alg),
        Suite::Filters => check_filters(alg),
        Suite::MultiplierCalculus => check_multiplier_calculus(alg),
        Suite::CeStructure => check_ce_structure(alg),
        Suite::Isotmult2 => check_isotmult2(alg),
        Suite::IdempotentLemma => check_idempotent_lemma(alg),
        Suite::Kappa => {
            let mut r = check_kappa(alg);
            r.push(kappa_inverse_cases(alg, all_filters(alg).filters(), ce_from_monomial_filter));
            r
        }
        Suite::Ff => check_ff(alg),
        Suite::JoinDensity => check_join_density(alg),
        Suite::Kk2 => check_kk2(alg),
        Suite::Brouwerian => check_brouwerian(alg),
        Suite::Bridge => check_filter_ideal_bridge(alg),
        Suite::Impla => {
            let mut r = implication_only("impla", implication_extras(alg));
            r.extend(implication_only("impla3", check_impla3(alg)));
            r
        }
        Suite::FixpointCharacterization => check_fixpoint_filter_characterization(alg),
        Suite::CrossSurvey => cross_theorem_survey(&[("self".to_string(), alg.clone())]),
    }
}

/// Runs `suites` on every named algebra, in parallel over algebras. Results
/// come out algebra by algebra in input order, then the cross-survey over
/// the whole list if selected, so the report does not depend on the number
/// of worker threads.
pub fn verify(algebras: &[(String, HilbertAlgebra)], suites: &[Suite]) -> VerificationReport {
    let per_algebra: Vec<Suite> = suites.iter().copied().filter(|&s| s != Suite::CrossSurvey).collect();
    let parts: Vec<VerificationReport> = algebras
        .par_iter()
        .map(|(name, alg)| {
            let mut r = VerificationReport::new();
            for &s in &per_algebra {
                r.extend(run_suite(alg, s));
            }
            r.with_subject(name)
        })
        .collect();
    let mut report = VerificationReport::new();
    for p in parts {
        report.extend(p);
    }
    if suites.contains(&Suite::CrossSurvey) {
        report.extend(cross_theorem_survey(algebras));
    }
    report
}
