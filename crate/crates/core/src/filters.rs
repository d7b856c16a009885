//! Filters (deductive systems), the filter lattice, filter congruences and
//! monomial filters.

use std::collections::BTreeSet;

use crate::algebra::HilbertAlgebra;
use crate::lattice::FiniteLattice;
use crate::subset::ElementSubset;

/// Contains the unit and is closed under detachment: `x` and `x -> y` in `J`
/// imply `y` in `J`.
pub fn is_filter(alg: &HilbertAlgebra, s: ElementSubset) -> bool {
    s.contains(alg.one())
        && s.iter()
            .all(|x| alg.elements().all(|y| !s.contains(alg.imp(x, y)) || s.contains(y)))
}

/// The alternative characterization: `J` is nonempty and `x <= y -> z` with
/// `x, y` in `J` forces `z` into `J`.
pub fn is_filter_by_entailment(alg: &HilbertAlgebra, s: ElementSubset) -> bool {
    !s.is_empty()
        && s.iter().all(|x| {
            s.iter().all(|y| {
                alg.elements()
                    .all(|z| !alg.leq(x, alg.imp(y, z)) || s.contains(z))
            })
        })
}

/// Upward closed.
pub fn is_up_set(alg: &HilbertAlgebra, s: ElementSubset) -> bool {
    s.iter().all(|x| alg.up(x).is_subset(s))
}

/// Downward closed and closed under existing binary joins.
pub fn is_ideal(alg: &HilbertAlgebra, s: ElementSubset) -> bool {
    s.iter().all(|x| alg.down(x).is_subset(s))
        && s.iter()
            .all(|x| s.iter().all(|y| alg.partial_join(x, y).map_or(true, |j| s.contains(j))))
}

/// Closed under every translation `x |-> p -> x`.
pub fn is_alpha_closed(alg: &HilbertAlgebra, s: ElementSubset) -> bool {
    s.iter().all(|x| alg.elements().all(|p| s.contains(alg.imp(p, x))))
}

/// The least filter including `x`.
pub fn filter_generated(alg: &HilbertAlgebra, x: ElementSubset) -> ElementSubset {
    let mut s = x.with(alg.one());
    loop {
        let mut next = s;
        for a in s.iter() {
            for b in alg.elements() {
                if s.contains(alg.imp(a, b)) {
                    next.insert(b);
                }
            }
        }
        if next == s {
            return s;
        }
        s = next;
    }
}

/// `[p)`, the filter generated by `p`.
pub fn principal_filter(alg: &HilbertAlgebra, p: usize) -> ElementSubset {
    filter_generated(alg, ElementSubset::singleton(p))
}

/// `J ⊔ K`, the filter generated by the union.
pub fn filter_join(alg: &HilbertAlgebra, j: ElementSubset, k: ElementSubset) -> ElementSubset {
    filter_generated(alg, j | k)
}

/// All filters of an algebra ordered by inclusion.
#[derive(Clone, Debug)]
pub struct FilterLattice {
    filters: Vec<ElementSubset>,
    lattice: FiniteLattice,
}

impl FilterLattice {
    fn new(filters: Vec<ElementSubset>) -> Self {
        let lattice = FiniteLattice::from_order(filters.len(), |a, b| filters[a].is_subset(filters[b]))
            .expect("filters of a Hilbert algebra form a lattice");
        FilterLattice { filters, lattice }
    }

    /// Sorted by size, then by bitmask.
    pub fn filters(&self) -> &[ElementSubset] {
        &self.filters
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.filters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.filters.is_empty()
    }

    pub fn index_of(&self, j: ElementSubset) -> Option<usize> {
        self.filters.iter().position(|&f| f == j)
    }
}

fn sorted(set: BTreeSet<ElementSubset>) -> Vec<ElementSubset> {
    let mut v: Vec<_> = set.into_iter().collect();
    v.sort_by_key(|s| (s.len(), s.bits()));
    v
}

/// Closes the principal filters under `⊔`. In a finite algebra every filter
/// is finitely generated, so this yields them all without visiting `2^n`
/// subsets.
pub fn finitely_generated_filters(alg: &HilbertAlgebra) -> Vec<ElementSubset> {
    let mut seen: BTreeSet<ElementSubset> = BTreeSet::new();
    let mut frontier: Vec<ElementSubset> = Vec::new();
    for p in alg.elements() {
        let f = principal_filter(alg, p);
        if seen.insert(f) {
            frontier.push(f);
        }
    }
    while let Some(f) = frontier.pop() {
        let current: Vec<_> = seen.iter().copied().collect();
        for g in current {
            let j = filter_join(alg, f, g);
            if seen.insert(j) {
                frontier.push(j);
            }
        }
    }
    sorted(seen)
}

pub fn all_filters(alg: &HilbertAlgebra) -> FilterLattice {
    FilterLattice::new(finitely_generated_filters(alg))
}

/// Every subset that passes [`is_filter`]; exponential, for cross-checks.
pub fn all_filters_brute_force(alg: &HilbertAlgebra) -> Vec<ElementSubset> {
    sorted(ElementSubset::all(alg.len()).filter(|&s| is_filter(alg, s)).collect())
}

/// The partition of the universe induced by a filter `J`: `a` and `b` share a
/// class iff `a -> b` and `b -> a` both lie in `J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceClasses {
    classes: Vec<ElementSubset>,
    class_index: Vec<usize>,
}

impl CongruenceClasses {
    /// Ordered by least member.
    pub fn classes(&self) -> &[ElementSubset] {
        &self.classes
    }

    pub fn class_of(&self, a: usize) -> ElementSubset {
        self.classes[self.class_index[a]]
    }
}

/// `a/J = {b : b -> a in J and a -> b in J}`
pub fn class_of(alg: &HilbertAlgebra, j: ElementSubset, a: usize) -> ElementSubset {
    alg.elements()
        .filter(|&b| j.contains(alg.imp(b, a)) && j.contains(alg.imp(a, b)))
        .collect()
}

pub fn congruence_classes(alg: &HilbertAlgebra, j: ElementSubset) -> CongruenceClasses {
    let mut classes: Vec<ElementSubset> = Vec::new();
    let mut class_index = vec![0; alg.len()];
    for a in alg.elements() {
        let c = class_of(alg, j, a);
        let idx = match classes.iter().position(|&k| k == c) {
            Some(i) => i,
            None => {
                classes.push(c);
                classes.len() - 1
            }
        };
        class_index[a] = idx;
    }
    CongruenceClasses { classes, class_index }
}

/// `J_a = {x : x -> a in J}`
pub fn lower_set(alg: &HilbertAlgebra, j: ElementSubset, a: usize) -> ElementSubset {
    alg.elements().filter(|&x| j.contains(alg.imp(x, a))).collect()
}

/// The greatest element of `a/J`, or `None` if the class has none.
pub fn monomial_max(alg: &HilbertAlgebra, j: ElementSubset, a: usize) -> Option<usize> {
    alg.natural_order().max_of(class_of(alg, j, a))
}

pub fn is_monomial(alg: &HilbertAlgebra, j: ElementSubset) -> bool {
    alg.elements().all(|a| monomial_max(alg, j, a).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{goedel_chain, implication_fork, two_chain};

    fn set(xs: &[usize]) -> ElementSubset {
        xs.iter().copied().collect()
    }

    #[test]
    fn trivial_filters() {
        for alg in [two_chain(), goedel_chain(3), implication_fork()] {
            assert!(is_filter(&alg, ElementSubset::singleton(alg.one())));
            assert!(is_filter(&alg, alg.universe()));
        }
        assert!(is_filter(&goedel_chain(3), set(&[1, 2])));
        assert!(!is_filter(&implication_fork(), set(&[0])));
    }

    #[test]
    fn generated_filters() {
        let f = implication_fork();
        assert_eq!(filter_generated(&f, ElementSubset::EMPTY), set(&[2]));
        assert_eq!(filter_generated(&f, set(&[0])), set(&[0, 2]));
        assert_eq!(filter_generated(&f, set(&[0, 1])), f.universe());
    }

    #[test]
    fn filter_lattices_of_small_algebras() {
        let t = all_filters(&two_chain());
        assert_eq!(t.len(), 2);

        let c = all_filters(&goedel_chain(3));
        assert_eq!(c.filters(), &[set(&[2]), set(&[1, 2]), set(&[0, 1, 2])]);
        assert!(c.lattice().is_isomorphic(&FiniteLattice::from_order(3, |a, b| a <= b).unwrap()));

        let f = all_filters(&implication_fork());
        assert_eq!(f.filters(), &[set(&[2]), set(&[0, 2]), set(&[1, 2]), set(&[0, 1, 2])]);
        assert!(f.lattice().is_boolean());
    }

    #[test]
    fn join_is_generated_union() {
        let f = implication_fork();
        assert_eq!(filter_join(&f, set(&[0, 2]), set(&[1, 2])), f.universe());
    }

    #[test]
    fn congruences() {
        let c = goedel_chain(3);
        let id = congruence_classes(&c, set(&[2]));
        assert_eq!(id.classes().len(), 3);
        let all = congruence_classes(&c, c.universe());
        assert_eq!(all.classes(), &[c.universe()]);
        let mid = congruence_classes(&c, set(&[1, 2]));
        assert_eq!(mid.classes(), &[set(&[0]), set(&[1, 2])]);
        assert_eq!(mid.class_of(2), set(&[1, 2]));
    }

    #[test]
    fn lower_sets() {
        let c = goedel_chain(3);
        for a in c.elements() {
            assert_eq!(lower_set(&c, set(&[2]), a), c.down(a));
        }
        assert_eq!(lower_set(&c, set(&[1, 2]), 1), c.universe());
        assert!(is_ideal(&c, lower_set(&c, set(&[1, 2]), 0)));
    }

    #[test]
    fn monomial_filters() {
        let c = goedel_chain(3);
        let one = set(&[2]);
        for a in c.elements() {
            assert_eq!(monomial_max(&c, one, a), Some(a));
            assert_eq!(monomial_max(&c, c.universe(), a), Some(2));
        }
        assert!(is_monomial(&c, one) && is_monomial(&c, c.universe()));
    }

    #[test]
    fn the_two_filter_tests_agree() {
        for alg in [goedel_chain(4), implication_fork(), crate::fixtures::boolean(2)] {
            for s in ElementSubset::all(alg.len()) {
                assert_eq!(is_filter(&alg, s), is_filter_by_entailment(&alg, s), "{s}");
            }
            assert_eq!(all_filters(&alg).filters(), all_filters_brute_force(&alg).as_slice());
        }
    }
}
