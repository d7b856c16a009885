//! Library results against naive computations written out here: exhaustive
//! searches over all maps or subsets, straight from the definitions.

use std::collections::BTreeSet;

use hilbert_core::enumeration::{endomorphisms, enumerate_raw};
use hilbert_core::{
    all_ce, all_filters, enumerate_algebras, multipliers, AlgebraCatalog, ElementSubset, EndoMap, HilbertAlgebra,
};

fn catalogs(max: usize) -> Vec<AlgebraCatalog> {
    (1..=max).map(|n| enumerate_algebras(n).unwrap()).collect()
}

fn every_map(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .iter()
            .flat_map(|p: &Vec<usize>| {
                (0..n).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

fn images(maps: &[EndoMap]) -> BTreeSet<Vec<usize>> {
    maps.iter().map(|f| f.images().to_vec()).collect()
}

#[test]
fn multipliers_match_exhaustive_search() {
    for cat in catalogs(4) {
        let maps = every_map(cat.size());
        for alg in cat.algebras() {
            let naive: BTreeSet<Vec<usize>> = maps
                .iter()
                .filter(|f| alg.elements().all(|x| alg.elements().all(|y| f[alg.imp(x, y)] == alg.imp(x, f[y]))))
                .cloned()
                .collect();
            assert_eq!(images(&multipliers(alg)), naive);
        }
    }
}

#[test]
fn endomorphisms_match_exhaustive_search() {
    for cat in catalogs(4) {
        let maps = every_map(cat.size());
        for alg in cat.algebras() {
            let naive: BTreeSet<Vec<usize>> = maps
                .iter()
                .filter(|f| alg.elements().all(|x| alg.elements().all(|y| f[alg.imp(x, y)] == alg.imp(f[x], f[y]))))
                .cloned()
                .collect();
            assert_eq!(images(&endomorphisms(alg)), naive);
        }
    }
}

#[test]
fn closure_endomorphisms_match_exhaustive_search() {
    for cat in catalogs(4) {
        let maps = every_map(cat.size());
        for alg in cat.algebras() {
            let naive: BTreeSet<Vec<usize>> = maps
                .iter()
                .filter(|f| {
                    alg.elements().all(|x| {
                        alg.leq(x, f[x])
                            && f[f[x]] == f[x]
                            && alg.elements().all(|y| f[alg.imp(x, y)] == alg.imp(f[x], f[y]))
                    })
                })
                .cloned()
                .collect();
            let ce: Vec<EndoMap> = all_ce(alg).unwrap().maps().iter().map(|f| f.map().clone()).collect();
            assert_eq!(images(&ce), naive);
        }
    }
}

#[test]
fn filters_match_exhaustive_search() {
    for cat in catalogs(5) {
        for alg in cat.algebras() {
            let n = alg.len();
            let naive: BTreeSet<u64> = (0u64..1 << n)
                .filter(|&bits| {
                    let s = ElementSubset::from_bits(bits);
                    s.contains(alg.one())
                        && alg.elements().all(|x| {
                            alg.elements()
                                .all(|y| !(s.contains(x) && s.contains(alg.imp(x, y))) || s.contains(y))
                        })
                })
                .collect();
            let got: BTreeSet<u64> = all_filters(alg).filters().iter().map(|f| f.bits()).collect();
            assert_eq!(got, naive);
        }
    }
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

#[test]
fn labelled_count_is_the_sum_of_orbits() {
    // relabellings fix the unit, so each class contributes (n-1)!/|Aut|
    for cat in catalogs(5) {
        let n = cat.size();
        let orbits: usize = cat.stats().iter().map(|s| factorial(n - 1) / s.automorphisms).sum();
        assert_eq!(orbits, enumerate_raw(n).len(), "n={n}");
        assert_eq!(orbits, cat.labelled_count(), "n={n}");
    }
}

#[test]
fn catalog_members_are_pairwise_non_isomorphic() {
    for cat in catalogs(5) {
        let algs: &[HilbertAlgebra] = cat.algebras();
        for (i, a) in algs.iter().enumerate() {
            for b in &algs[i + 1..] {
                assert!(hilbert_core::are_isomorphic(a, b).is_none());
            }
        }
    }
}

#[test]
fn kernels_give_a_bijection_onto_filters() {
    for cat in catalogs(5) {
        for alg in cat.algebras() {
            let ce = all_ce(alg).unwrap();
            let kernels: BTreeSet<u64> = ce.maps().iter().map(|f| hilbert_core::kernel(alg, f).bits()).collect();
            let filters: BTreeSet<u64> = all_filters(alg).filters().iter().map(|f| f.bits()).collect();
            assert_eq!(kernels, filters);
            assert_eq!(ce.len(), filters.len());
        }
    }
}
