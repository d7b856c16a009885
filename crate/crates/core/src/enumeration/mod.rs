//! Exhaustive generation of small Hilbert algebras up to isomorphism,
//! endomorphism monoids, and the pairwise survey over a catalog.

mod canon;
mod monoid;
mod search;
mod survey;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

pub use canon::{are_isomorphic, automorphism_count, canonical, canonical_form, Canonical};
pub use monoid::{
    endomorphism_monoid, endomorphisms, endomorphisms_brute_force, monoid_isomorphic, monoid_isomorphism,
    EndoMonoid,
};
pub use search::enumerate_raw;
pub use survey::cross_theorem_survey;

use crate::algebra::HilbertAlgebra;
use crate::closure::closure_endomorphisms;
use crate::error::{Error, Result};
use crate::filters::all_filters;
use crate::multipliers::multipliers;

/// The default largest size [`enumerate_algebras`] accepts.
pub const DEFAULT_BOUND: usize = 6;

/// Labelled partial orders on `m` points, for the refusal message.
const LABELLED_POSETS: [&str; 10] = [
    "1", "1", "3", "19", "219", "4231", "130023", "6129859", "431723379", "44511042511",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraStats {
    pub filters: usize,
    pub multipliers: usize,
    pub closure_endomorphisms: usize,
    pub automorphisms: usize,
    pub implication_algebra: bool,
    pub implicative_semilattice: bool,
}

impl AlgebraStats {
    pub fn of(alg: &HilbertAlgebra) -> Self {
        let class = alg.classify();
        AlgebraStats {
            filters: all_filters(alg).len(),
            multipliers: multipliers(alg).len(),
            closure_endomorphisms: closure_endomorphisms(alg).len(),
            automorphisms: automorphism_count(alg),
            implication_algebra: class.implication_algebra,
            implicative_semilattice: class.implicative_semilattice,
        }
    }
}

/// One representative per isomorphism class of algebras of a given size, in
/// canonical form and sorted.
#[derive(Clone, Debug)]
pub struct AlgebraCatalog {
    n: usize,
    algebras: Vec<HilbertAlgebra>,
    stats: Vec<AlgebraStats>,
    labelled: usize,
}

impl AlgebraCatalog {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn algebras(&self) -> &[HilbertAlgebra] {
        &self.algebras
    }

    pub fn stats(&self) -> &[AlgebraStats] {
        &self.stats
    }

    pub fn len(&self) -> usize {
        self.algebras.len()
    }

    pub fn is_empty(&self) -> bool {
        self.algebras.is_empty()
    }

    /// Valid tables with the unit fixed at `n - 1` before deduplication.
    pub fn labelled_count(&self) -> usize {
        self.labelled
    }

    /// A stable name for the `i`-th member, such as `n4#2`.
    pub fn subject(&self, i: usize) -> String {
        format!("n{}#{}", self.n, i)
    }

    pub fn named(&self) -> Vec<(String, HilbertAlgebra)> {
        self.algebras
            .iter()
            .enumerate()
            .map(|(i, a)| (self.subject(i), a.clone()))
            .collect()
    }

    /// Counts per class: total, implication algebras, implicative
    /// semilattices.
    pub fn class_counts(&self) -> BTreeMap<&'static str, usize> {
        let mut m = BTreeMap::new();
        m.insert("total", self.len());
        m.insert("implication algebras", self.stats.iter().filter(|s| s.implication_algebra).count());
        m.insert(
            "implicative semilattices",
            self.stats.iter().filter(|s| s.implicative_semilattice).count(),
        );
        m
    }
}

pub fn enumerate_algebras(n: usize) -> Result<AlgebraCatalog> {
    enumerate_algebras_with_bound(n, DEFAULT_BOUND)
}

pub fn enumerate_algebras_with_bound(n: usize, bound: usize) -> Result<AlgebraCatalog> {
    if n == 0 {
        return Err(Error::Precondition("algebras have at least one element".into()));
    }
    if n > bound {
        let estimate = match LABELLED_POSETS.get(n - 1) {
            Some(c) => format!("{c} labelled orders on {} points, each searched for tables", n - 1),
            None => format!("more than {} labelled orders", LABELLED_POSETS[9]),
        };
        return Err(Error::BoundExceeded { n, bound, estimate });
    }
    let raw = enumerate_raw(n);
    let labelled = raw.len();
    let mut forms: Vec<HilbertAlgebra> = raw.par_iter().map(canonical_form).collect();
    forms.sort();
    forms.dedup();
    let stats = forms.par_iter().map(AlgebraStats::of).collect();
    Ok(AlgebraCatalog { n, algebras: forms, stats, labelled })
}
