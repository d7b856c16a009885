//! Small worked examples on the 2-chain, the Gödel 3-chain `c` (0 < a < 1)
//! and the 3-element implication algebra `i` (atoms a, b under 1).

use hilbert_core::fixtures::{goedel_chain, implication_fork, singleton, two_chain};
use hilbert_core::multipliers::{alpha, delta, eps, iota};
use hilbert_core::{
    adjoint_semilattice, all_ce, all_filters, alpha_set, ce_from_monomial_filter, ce_from_retract,
    check_fixpoint_filter_characterization, class_of, endomorphism_monoid, filter_generated, is_closure_retract,
    is_filter, is_multiplier, is_special, kernel, lower_set, minimal_brouwerian_extension, multipliers, nabla,
    subtraction, validate_hilbert, Axiom, ElementSubset, EndoMap, Error, Status,
};

fn set(xs: &[usize]) -> ElementSubset {
    xs.iter().copied().collect()
}

fn map(xs: &[usize]) -> EndoMap {
    EndoMap::new(xs.to_vec())
}

// chain: 0, a, 1 = 0, 1, 2; fork: a, b, 1 = 0, 1, 2
const A: usize = 1;

#[test]
fn validation() {
    assert!(validate_hilbert(&[vec![0]], 0).is_ok());
    assert!(validate_hilbert(&[vec![1, 1], vec![0, 1]], 1).is_ok());
    let bad = vec![vec![2, 2, 2], vec![1, 2, 2], vec![0, 1, 2]];
    match validate_hilbert(&bad, 2) {
        Err(Error::Axioms(v)) => {
            assert!(v.iter().any(|w| w.axiom == Axiom::Exchange && w.witness == vec![1, 1, 0]), "{v:?}");
        }
        other => panic!("expected axiom violations, got {other:?}"),
    }
    assert!(matches!(validate_hilbert(&[vec![1, 3], vec![0, 1]], 1), Err(Error::Malformed(_))));
}

#[test]
fn order_and_meets() {
    let c = goedel_chain(3);
    let i = implication_fork();
    assert!(c.leq(0, A) && !c.leq(A, 0));
    assert!(!i.leq(0, 1) && !i.leq(1, 0));
    assert_eq!(c.compatible_meet(0, A), Some(0));
    assert_eq!(i.partial_join(0, 1), Some(2));
    assert_eq!(i.partial_meet(0, 1), None);
    assert!(!i.is_compatible(0, 1));
    for alg in [&c, &i] {
        assert!(alg.elements().all(|x| alg.compatible_meet(x, alg.one()) == Some(x)));
    }
    assert!(c.is_relative_subsemilattice(set(&[0, 2])));
    assert_eq!(i.block_from(i.universe(), 0), set(&[0, 2]));
    assert!(i.is_block(set(&[0, 2])));
}

#[test]
fn classification() {
    let c = goedel_chain(3).classify();
    assert!(c.implicative_semilattice && !c.implication_algebra);
    let i = implication_fork().classify();
    assert!(i.implication_algebra && !i.implicative_semilattice);
    let t = two_chain().classify();
    assert!(t.implication_algebra && t.implicative_semilattice);
}

#[test]
fn filters_and_classes() {
    let c = goedel_chain(3);
    let i = implication_fork();
    assert!(is_filter(&c, set(&[A, 2])));
    assert!(!is_filter(&i, set(&[0])));
    assert_eq!(filter_generated(&i, ElementSubset::default()), set(&[2]));
    assert_eq!(filter_generated(&i, set(&[0])), set(&[0, 2]));
    assert_eq!(filter_generated(&i, set(&[0, 1])), i.universe());
    let fc: Vec<ElementSubset> = all_filters(&c).filters().to_vec();
    assert_eq!(fc, vec![set(&[2]), set(&[1, 2]), set(&[0, 1, 2])]);
    assert_eq!(all_filters(&i).len(), 4);
    assert!(all_filters(&i).lattice().is_boolean());
    assert_eq!(class_of(&c, set(&[A, 2]), 0), set(&[0]));
    assert_eq!(class_of(&c, set(&[A, 2]), A), set(&[A, 2]));
    assert_eq!(lower_set(&c, set(&[A, 2]), A), c.universe());
}

#[test]
fn multipliers_of_the_fixtures() {
    let c = goedel_chain(3);
    let i = implication_fork();
    assert!(!is_multiplier(&c, &map(&[A, A, 2])));
    assert_eq!(alpha(&c, A), map(&[0, 2, 2]));
    assert_eq!(delta(&i, 0), map(&[0, 2, 2]));
    assert_eq!(delta(&i, 0), alpha(&i, 1));
    assert_eq!(alpha(&c, 2), eps(&c));
    assert_eq!(multipliers(&two_chain()).len(), 2);
    let mi = multipliers(&i);
    assert_eq!(mi.len(), 4);
    for f in [eps(&i), alpha(&i, 0), alpha(&i, 1), iota(&i)] {
        assert!(mi.contains(&f));
    }
    // the chain has one non-isotone multiplier besides eps, alpha_a, iota
    let mc = multipliers(&c);
    assert_eq!(mc.len(), 4);
    assert!(mc.contains(&map(&[2, A, 2])));
    assert!(!map(&[2, A, 2]).is_isotone(&c));
}

#[test]
fn closure_endomorphisms_of_the_fixtures() {
    let c = goedel_chain(3);
    let i = implication_fork();
    assert_eq!(all_ce(&two_chain()).unwrap().len(), 2);
    let cc = all_ce(&c).unwrap();
    assert_eq!(cc.len(), 3);
    assert!(cc.lattice().is_distributive());
    assert_eq!(all_ce(&i).unwrap().len(), 4);
    assert_eq!(kernel(&c, &eps(&c)), set(&[2]));
    assert_eq!(kernel(&c, &iota(&c)), c.universe());
    assert_eq!(alpha(&c, A).fixpoints(), set(&[0, 2]));
    assert_eq!(ce_from_monomial_filter(&c, set(&[A, 2])).unwrap().map(), &alpha(&c, A));
    assert_eq!(ce_from_monomial_filter(&c, set(&[2])).unwrap().map(), &eps(&c));
    assert!(matches!(ce_from_monomial_filter(&i, set(&[0])), Err(Error::NotAFilter(_))));
    assert!(is_special(&c, set(&[0, 2])) && is_closure_retract(&c, set(&[0, 2])));
    assert_eq!(ce_from_retract(&c, set(&[0, 2])).unwrap().map(), &alpha(&c, A));
    assert_eq!(ce_from_retract(&c, c.universe()).unwrap().map(), &eps(&c));
    assert_eq!(ce_from_retract(&c, set(&[2])).unwrap().map(), &iota(&c));
}

#[test]
fn nabla_on_the_fork() {
    let i = implication_fork();
    let fa = alpha(&i, 0).fixpoints();
    let fb = alpha(&i, 1).fixpoints();
    assert_eq!(nabla(&i, fa, fb), i.universe());
}

#[test]
fn fixpoint_filters() {
    let c = goedel_chain(3);
    assert!(!is_filter(&c, alpha(&c, A).fixpoints()));
    for alg in [two_chain(), implication_fork(), goedel_chain(3)] {
        let r = check_fixpoint_filter_characterization(&alg);
        assert!(r.passed());
    }
}

#[test]
fn adjoint_and_extension() {
    let i = implication_fork();
    assert_eq!(alpha_set(&i, set(&[0, 1])).map(), &iota(&i));
    assert_eq!(alpha_set(&i, ElementSubset::default()).map(), &eps(&i));
    assert_eq!(alpha_set(&i, set(&[2])).map(), &eps(&i));
    assert_eq!(subtraction(&i, &alpha(&i, 0), &alpha(&i, 1)).unwrap().map(), &alpha(&i, 1));
    assert_eq!(subtraction(&i, &eps(&i), &alpha(&i, 0)).unwrap().map(), &alpha(&i, 0));
    assert_eq!(subtraction(&i, &iota(&i), &alpha(&i, 0)).unwrap().map(), &eps(&i));

    assert_eq!(adjoint_semilattice(&singleton()).unwrap().len(), 1);
    let c = goedel_chain(3);
    let adj = adjoint_semilattice(&c).unwrap();
    assert_eq!(adj.len(), 3);
    assert_eq!(adj.lattice().covers().len(), 2);

    let ext = minimal_brouwerian_extension(&c).unwrap();
    let as_alg = ext.as_algebra().unwrap();
    assert!(hilbert_core::are_isomorphic(&as_alg, &c).is_some());
    assert_eq!(minimal_brouwerian_extension(&i).unwrap().len(), 4);
    assert_eq!(minimal_brouwerian_extension(&singleton()).unwrap().len(), 1);
}

#[test]
fn monoids() {
    assert_eq!(endomorphism_monoid(&two_chain()).unwrap().len(), 2);
    let i = implication_fork();
    let m = endomorphism_monoid(&i).unwrap();
    assert!(m.index_of(&map(&[1, 0, 2])).is_some());
    assert!(hilbert_core::enumeration::monoid_isomorphic(&m, &m));
}

#[test]
fn catalog_of_three() {
    let cat = hilbert_core::enumerate_algebras(3).unwrap();
    assert_eq!(cat.len(), 2);
    let survey = hilbert_core::cross_theorem_survey(&cat.named());
    assert_eq!(survey.checks[0].status, Status::Pass);
    assert!(survey.checks[0].notes.iter().any(|n| n.contains("filters no adjoint no")));
}
