use std::sync::OnceLock;

use hilbert_core::enumeration::{automorphism_count, canonical_form};
use hilbert_core::multipliers::alpha;
use hilbert_core::{
    adjoint_semilattice, all_ce, are_isomorphic, enumerate_algebras, subtraction, AlgebraFile, HilbertAlgebra,
};
use proptest::prelude::*;
use proptest::sample::Index;

fn catalog() -> &'static [HilbertAlgebra] {
    static ALL: OnceLock<Vec<HilbertAlgebra>> = OnceLock::new();
    ALL.get_or_init(|| {
        (1..=5)
            .flat_map(|n| enumerate_algebras(n).unwrap().algebras().to_vec())
            .collect()
    })
}

/// A catalog algebra together with a random relabelling of it.
fn relabelled() -> impl Strategy<Value = (HilbertAlgebra, HilbertAlgebra)> {
    (0..catalog().len()).prop_flat_map(|i| {
        let alg = catalog()[i].clone();
        let n = alg.len();
        Just((0..n).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(move |perm| (alg.clone(), alg.permuted(&perm)))
    })
}

fn algebra() -> impl Strategy<Value = HilbertAlgebra> {
    (0..catalog().len()).prop_map(|i| catalog()[i].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn canonical_form_is_an_invariant((alg, moved) in relabelled()) {
        let c = canonical_form(&alg);
        prop_assert_eq!(canonical_form(&moved), c.clone());
        prop_assert_eq!(canonical_form(&c), c.clone());
        prop_assert_eq!(&c, &alg);
        prop_assert_eq!(automorphism_count(&moved), automorphism_count(&alg));
    }

    #[test]
    fn isomorphism_witness_is_a_homomorphism((alg, moved) in relabelled()) {
        let f = are_isomorphic(&alg, &moved).expect("relabelling is an isomorphism");
        let mut seen = f.clone();
        seen.sort_unstable();
        prop_assert_eq!(seen, (0..alg.len()).collect::<Vec<_>>());
        for x in alg.elements() {
            for y in alg.elements() {
                prop_assert_eq!(f[alg.imp(x, y)], moved.imp(f[x], f[y]));
            }
        }
    }

    #[test]
    fn counts_survive_relabelling((alg, moved) in relabelled()) {
        use hilbert_core::enumeration::AlgebraStats;
        let (a, b) = (AlgebraStats::of(&alg), AlgebraStats::of(&moved));
        prop_assert_eq!(a.filters, b.filters);
        prop_assert_eq!(a.multipliers, b.multipliers);
        prop_assert_eq!(a.closure_endomorphisms, b.closure_endomorphisms);
        prop_assert_eq!(a.implication_algebra, b.implication_algebra);
        prop_assert_eq!(a.implicative_semilattice, b.implicative_semilattice);
    }

    #[test]
    fn file_round_trip((_, moved) in relabelled()) {
        let text = AlgebraFile::from_algebra(&moved, None).to_json();
        let back = AlgebraFile::parse(&text).unwrap().to_algebra().unwrap();
        prop_assert_eq!(back, moved);
    }

    #[test]
    fn hilbert_identities(alg in algebra(), x in any::<Index>(), y in any::<Index>(), z in any::<Index>()) {
        let n = alg.len();
        let (x, y, z) = (x.index(n), y.index(n), z.index(n));
        let one = alg.one();
        prop_assert_eq!(alg.imp(one, x), x);
        prop_assert_eq!(alg.imp(x, alg.imp(y, z)), alg.imp(y, alg.imp(x, z)));
        prop_assert_eq!(alg.imp(x, alg.imp(y, x)), one);
        prop_assert_eq!(alg.imp(alg.imp(x, y), alg.imp(alg.imp(y, z), alg.imp(x, z))), one);
    }

    #[test]
    fn ce_meet_and_join_are_pointwise(alg in algebra(), i in any::<Index>(), j in any::<Index>()) {
        let ce = all_ce(&alg).unwrap();
        let (i, j) = (i.index(ce.len()), j.index(ce.len()));
        let (f, g) = (ce.maps()[i].map(), ce.maps()[j].map());
        prop_assert_eq!(ce.maps()[ce.join(i, j)].map(), &f.then(g));
        prop_assert_eq!(&f.then(g), &g.then(f));
        prop_assert_eq!(Some(ce.maps()[ce.meet(i, j)].map().clone()), f.pointwise_meet(&alg, g));
    }

    #[test]
    fn subtraction_residuates_the_join(alg in algebra(), i in any::<Index>(), j in any::<Index>(), k in any::<Index>()) {
        let adj = adjoint_semilattice(&alg).unwrap();
        let m = adj.len();
        let (i, j, k) = (i.index(m), j.index(m), k.index(m));
        let l = adj.lattice();
        prop_assert_eq!(l.leq(adj.subtract(i, j), k), l.leq(j, adj.join(i, k)));
    }

    #[test]
    fn subtraction_of_principal_maps(alg in algebra(), p in any::<Index>(), q in any::<Index>()) {
        let n = alg.len();
        let (p, q) = (p.index(n), q.index(n));
        let got = subtraction(&alg, &alpha(&alg, p), &alpha(&alg, q)).unwrap();
        prop_assert_eq!(got.map(), &alpha(&alg, alg.imp(p, q)));
    }
}
