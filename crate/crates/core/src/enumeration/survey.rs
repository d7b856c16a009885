//! Pairwise comparison of algebras: filter lattices, adjoint semilattices,
//! endomorphism monoids and the algebras themselves.

use rayon::prelude::*;

use super::canon::are_isomorphic;
use super::monoid::{endomorphism_monoid, monoid_isomorphism, EndoMonoid};
use crate::adjoint::adjoint_semilattice;
use crate::algebra::HilbertAlgebra;
use crate::closure::is_closure_endomorphism;
use crate::filters::all_filters;
use crate::lattice::FiniteLattice;
use crate::report::{Check, VerificationReport};

struct Profile {
    filters: Result<FiniteLattice, String>,
    adjoint: Result<FiniteLattice, String>,
    monoid: Result<EndoMonoid, String>,
    semilattice: bool,
}

fn profile(alg: &HilbertAlgebra) -> Profile {
    Profile {
        filters: Ok(all_filters(alg).lattice().clone()),
        adjoint: adjoint_semilattice(alg)
            .map(|a| a.lattice().clone())
            .map_err(|e| e.to_string()),
        monoid: endomorphism_monoid(alg).map_err(|e| e.to_string()),
        semilattice: alg.is_implicative_semilattice(),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// For every pair `(A, B)` with `A` listed no later than `B`: filter lattices
/// isomorphic iff adjoint semilattices isomorphic; isomorphic endomorphism
/// monoids force isomorphic adjoint semilattices; for implicative
/// semilattices they force isomorphic algebras. Every pair gets a note with
/// the four verdicts.
pub fn cross_theorem_survey(algebras: &[(String, HilbertAlgebra)]) -> VerificationReport {
    let profiles: Vec<Profile> = algebras.par_iter().map(|(_, a)| profile(a)).collect();
    let pairs: Vec<(usize, usize)> = (0..algebras.len())
        .flat_map(|i| (i..algebras.len()).map(move |j| (i, j)))
        .collect();

    struct Verdict {
        laws: Vec<(&'static str, bool, String)>,
        note: String,
    }
    let verdicts: Vec<Verdict> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (na, a) = (&algebras[i].0, &algebras[i].1);
            let (nb, b) = (&algebras[j].0, &algebras[j].1);
            let (pa, pb) = (&profiles[i], &profiles[j]);
            let subject = format!("{na} / {nb}");
            let mut laws = Vec::new();
            let (fa, fb, aa, ab, ma, mb) = match (&pa.filters, &pb.filters, &pa.adjoint, &pb.adjoint, &pa.monoid, &pb.monoid) {
                (Ok(fa), Ok(fb), Ok(aa), Ok(ab), Ok(ma), Ok(mb)) => (fa, fb, aa, ab, ma, mb),
                _ => {
                    laws.push(("structures can be built", false, subject.clone()));
                    return Verdict { laws, note: format!("{subject}: construction failed") };
                }
            };
            let filters = fa.is_isomorphic(fb);
            let adjoint = aa.is_isomorphic(ab);
            let iso = monoid_isomorphism(ma, mb);
            let algebra = are_isomorphic(a, b).is_some();
            laws.push(("filter lattices ≅ implies adjoint semilattices ≅", !filters || adjoint, subject.clone()));
            laws.push(("adjoint semilattices ≅ implies filter lattices ≅", !adjoint || filters, subject.clone()));
            laws.push(("endomorphism monoids ≅ implies adjoint semilattices ≅", iso.is_none() || adjoint, subject.clone()));
            if pa.semilattice && pb.semilattice {
                laws.push((
                    "implicative semilattices: monoids ≅ implies algebras ≅",
                    iso.is_none() || algebra,
                    subject.clone(),
                ));
            }
            if let Some(s) = &iso {
                let carried = (0..ma.len()).all(|k| {
                    is_closure_endomorphism(a, &ma.maps()[k]) == is_closure_endomorphism(b, &mb.maps()[s[k]])
                });
                laws.push(("monoid isomorphism carries CE onto CE", carried, subject.clone()));
            }
            let note = format!(
                "{subject}: filters {} adjoint {} monoid {} algebra {}",
                yes_no(filters),
                yes_no(adjoint),
                yes_no(iso.is_some()),
                yes_no(algebra)
            );
            Verdict { laws, note }
        })
        .collect();

    let mut c = Check::new("cross-survey");
    for v in verdicts {
        for (law, holds, subject) in v.laws {
            c.law(law, holds, || subject);
        }
        c.note(v.note);
    }
    VerificationReport::single(c.finish()).with_subject("catalog")
}
