//! The adjoint semilattice `CE^f` of finitely generated closure
//! endomorphisms, its subtraction, and the minimal Brouwerian extension built
//! on finitely generated filters.
//!
//! Subtraction is the dual relative pseudocomplement: `psi - phi` is the
//! least `chi` with `psi <= phi o chi`. On principal maps it satisfies
//! `alpha_q - alpha_p = alpha_(p -> q)`.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::{validate_hilbert, HilbertAlgebra};
use crate::closure::{
    ce_from_monomial_filter, closure_endomorphisms, kernel, ClosureEndo, SUBSET_SCAN_LIMIT,
};
use crate::endo::EndoMap;
use crate::error::{Error, Result};
use crate::filters::{all_filters, filter_generated, filter_join, finitely_generated_filters, principal_filter};
use crate::lattice::FiniteLattice;
use crate::multipliers::{alpha, delta, eps};
use crate::report::{Check, VerificationReport};
use crate::subset::ElementSubset;

/// `alpha_P`, the composite of `alpha_p` over `p` in `P`; `eps` for the
/// empty set.
pub fn alpha_set(alg: &HilbertAlgebra, p: ElementSubset) -> ClosureEndo {
    ClosureEndo::unchecked(p.iter().fold(eps(alg), |acc, x| acc.then(&alpha(alg, x))))
}

/// `CE^alpha = {alpha_p}`, sorted.
pub fn principal_ces(alg: &HilbertAlgebra) -> Vec<EndoMap> {
    let set: BTreeSet<EndoMap> = alg.elements().map(|p| alpha(alg, p)).collect();
    set.into_iter().collect()
}

/// `CE^f`: the closure of `CE^alpha` under composition, sorted.
pub fn finitely_generated_ces(alg: &HilbertAlgebra) -> Vec<EndoMap> {
    let gens = principal_ces(alg);
    let mut seen: BTreeSet<EndoMap> = gens.iter().cloned().collect();
    let mut frontier: Vec<EndoMap> = gens.clone();
    while let Some(f) = frontier.pop() {
        for g in &gens {
            let h = f.then(g);
            if seen.insert(h.clone()) {
                frontier.push(h);
            }
        }
    }
    seen.into_iter().collect()
}

fn least<'a>(alg: &HilbertAlgebra, cands: impl Iterator<Item = &'a EndoMap> + Clone) -> Option<&'a EndoMap> {
    cands
        .clone()
        .find(|f| cands.clone().all(|g| f.pointwise_leq(alg, g)))
}

/// The least `chi` in `CE^f` with `psi <= phi o chi`.
pub fn subtraction(alg: &HilbertAlgebra, phi: &EndoMap, psi: &EndoMap) -> Result<ClosureEndo> {
    subtraction_within(alg, &finitely_generated_ces(alg), phi, psi).map(ClosureEndo::unchecked)
}

fn subtraction_within(alg: &HilbertAlgebra, carrier: &[EndoMap], phi: &EndoMap, psi: &EndoMap) -> Result<EndoMap> {
    let cands = carrier.iter().filter(|chi| psi.pointwise_leq(alg, &phi.then(chi)));
    least(alg, cands)
        .cloned()
        .ok_or_else(|| Error::invariant(format!("no least chi with {psi} <= {phi} o chi")))
}

/// `CE^f` with its join (composition) and subtraction tables.
#[derive(Clone, Debug)]
pub struct AdjointSemilattice {
    maps: Vec<EndoMap>,
    join: Vec<usize>,
    subtraction: Vec<usize>,
    lattice: FiniteLattice,
}

impl AdjointSemilattice {
    /// Sorted.
    pub fn maps(&self) -> &[EndoMap] {
        &self.maps
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn index_of(&self, f: &EndoMap) -> Option<usize> {
        self.maps.binary_search(f).ok()
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i * self.len() + j]
    }

    /// `maps[j] - maps[i]`: the least `chi` with `maps[j] <= maps[i] o chi`.
    pub fn subtract(&self, i: usize, j: usize) -> usize {
        self.subtraction[i * self.len() + j]
    }

    /// The carrier under the pointwise order. Being a finite join-semilattice
    /// with a least element, it is a lattice.
    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }
}

pub fn adjoint_semilattice(alg: &HilbertAlgebra) -> Result<AdjointSemilattice> {
    let maps = finitely_generated_ces(alg);
    let m = maps.len();
    let find = |f: &EndoMap| {
        maps.binary_search(f)
            .map_err(|_| Error::invariant(format!("{f} is outside CE^f")))
    };
    let mut join = Vec::with_capacity(m * m);
    let mut subtraction = Vec::with_capacity(m * m);
    for f in &maps {
        for g in &maps {
            join.push(find(&f.then(g))?);
            subtraction.push(find(&subtraction_within(alg, &maps, f, g)?)?);
        }
    }
    let lattice = FiniteLattice::from_order(m, |i, j| maps[i].pointwise_leq(alg, &maps[j]))
        .map_err(|e| Error::invariant(format!("CE^f under the pointwise order: {e}")))?;
    Ok(AdjointSemilattice { maps, join, subtraction, lattice })
}

/// Every closure endomorphism is the join of the `alpha_p` over its kernel;
/// on implication algebras, also the meet of the `delta_p` over its
/// fixpoints.
pub fn check_join_density(alg: &HilbertAlgebra) -> VerificationReport {
    let mut c = Check::new("join-density");
    let implication = alg.is_implication_algebra();
    for f in closure_endomorphisms(alg) {
        let k = kernel(alg, &f);
        let forward = alpha_set(alg, k);
        let backward = k
            .iter()
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
            .fold(eps(alg), |acc, p| acc.then(&alpha(alg, p)));
        let w = || format!("phi={f} K={k}");
        c.law("phi = join of alpha_p over K_phi", *forward.map() == f, w);
        c.law("the join is order-independent", backward == f, w);
        if implication {
            let fx = f.fixpoints();
            let meet = fx
                .iter()
                .try_fold(crate::multipliers::iota(alg), |acc, p| acc.pointwise_meet(alg, &delta(alg, p)));
            c.law("phi = meet of delta_p over F_phi", meet.as_ref() == Some(&f), || format!("phi={f} F={fx}"));
        }
    }
    if !implication {
        c.note("not an implication algebra: the delta form was not checked");
    }
    VerificationReport::single(c.finish())
}

/// `CE^f` against the finitely generated filters, `alpha_P`, and the
/// subtraction laws.
pub fn check_kk2(alg: &HilbertAlgebra) -> VerificationReport {
    let mut c = Check::new("kk2");
    let ce = closure_endomorphisms(alg);
    let fg = finitely_generated_ces(alg);
    c.law("CE^f = CE", fg == ce, || format!("|CE^f|={} |CE|={}", fg.len(), ce.len()));
    let filters: BTreeSet<ElementSubset> = finitely_generated_filters(alg).into_iter().collect();
    let kernels: BTreeSet<ElementSubset> = fg.iter().map(|f| kernel(alg, f)).collect();
    c.law("kernel map is a bijection onto f.g. filters", kernels == filters && kernels.len() == fg.len(), || {
        format!("{} kernels, {} f.g. filters, |CE^f|={}", kernels.len(), filters.len(), fg.len())
    });
    for f in &fg {
        for g in &fg {
            c.law(
                "K(phi o psi) = K_phi ⊔ K_psi on CE^f",
                kernel(alg, &f.then(g)) == filter_join(alg, kernel(alg, f), kernel(alg, g)),
                || format!("phi={f} psi={g}"),
            );
            c.law(
                "phi <= psi iff K_phi in K_psi on CE^f",
                f.pointwise_leq(alg, g) == kernel(alg, f).is_subset(kernel(alg, g)),
                || format!("phi={f} psi={g}"),
            );
        }
    }

    let alphas = principal_ces(alg);
    for p in alg.elements() {
        for q in alg.elements() {
            if alg.leq(p, q) {
                c.law("p <= q implies alpha_q <= alpha_p", alpha(alg, q).pointwise_leq(alg, &alpha(alg, p)), || {
                    format!("p={p} q={q}")
                });
            }
        }
    }
    let range: BTreeSet<EndoMap> = alg.elements().map(|p| alpha(alg, p)).collect();
    c.law("range of p |-> alpha_p is CE^alpha", range.iter().eq(alphas.iter()), String::new);
    c.law("alpha_(empty) = alpha_1 = eps", {
        let e = eps(alg);
        *alpha_set(alg, ElementSubset::EMPTY).map() == e && alpha(alg, alg.one()) == e
    }, String::new);

    let subsets: Vec<ElementSubset> = if alg.len() <= SUBSET_SCAN_LIMIT {
        ElementSubset::all(alg.len()).collect()
    } else {
        c.note(format!("n > {SUBSET_SCAN_LIMIT}: alpha_P checked on subsets of size <= 2 only"));
        ElementSubset::all(alg.len()).filter(|s| s.len() <= 2).collect()
    };
    let mut by_filter: BTreeMap<ElementSubset, EndoMap> = BTreeMap::new();
    let mut by_map: BTreeMap<EndoMap, ElementSubset> = BTreeMap::new();
    for p in subsets {
        let a = alpha_set(alg, p).into_map();
        let gen = filter_generated(alg, p);
        c.law("K(alpha_P) is the filter generated by P", kernel(alg, &a) == gen, || format!("P={p}"));
        let prev = by_filter.insert(gen, a.clone());
        c.law("alpha_P depends only on the generated filter", prev.map_or(true, |b| b == a), || {
            format!("P={p}")
        });
        let prev = by_map.insert(a.clone(), gen);
        c.law("equal alpha_P forces equal generated filters", prev.map_or(true, |g| g == gen), || {
            format!("P={p}")
        });
    }

    match adjoint_semilattice(alg) {
        Err(e) => {
            c.law("subtraction exists on CE^f", false, || e.to_string());
        }
        Ok(adj) => {
            let m = adj.len();
            let maps = adj.maps();
            let e = adj.index_of(&eps(alg)).expect("eps is in CE^f");
            for i in 0..m {
                for j in 0..m {
                    let (f, g) = (&maps[i], &maps[j]);
                    let s = adj.subtract(i, j);
                    let w = || format!("phi={f} psi={g}");
                    if g.pointwise_leq(alg, f) {
                        c.law("psi <= phi implies psi - phi = eps", s == e, w);
                    }
                    for k in 0..m {
                        let chi = &maps[k];
                        c.law(
                            "residuation: psi <= phi o chi iff psi - phi <= chi",
                            g.pointwise_leq(alg, &f.then(chi)) == maps[s].pointwise_leq(alg, chi),
                            || format!("phi={f} psi={g} chi={chi}"),
                        );
                    }
                }
                c.law("psi - eps = psi", adj.subtract(e, i) == i, || format!("psi={}", maps[i]));
            }
            for p in alg.elements() {
                for q in alg.elements() {
                    let (ap, aq) = (alpha(alg, p), alpha(alg, q));
                    let got = &maps[adj.subtract(adj.index_of(&ap).unwrap(), adj.index_of(&aq).unwrap())];
                    c.law("alpha_q - alpha_p = alpha_(p->q)", *got == alpha(alg, alg.imp(p, q)), || {
                        format!("p={p} q={q} got={got}")
                    });
                    c.law("CE^alpha is closed under subtraction", alphas.binary_search(got).is_ok(), || {
                        format!("p={p} q={q}")
                    });
                }
            }
            let compact = adj.lattice().compact_elements();
            c.law("compact elements of CE = CE^f", compact.len() == ce.len() && fg == ce, String::new);
            c.note("every element of a finite lattice is compact, so compact generation holds trivially");
        }
    }
    VerificationReport::single(c.finish())
}

/// The implicative semilattice on finitely generated filters ordered by
/// reverse inclusion, with `A` embedded by `p |-> [p)`.
#[derive(Clone, Debug)]
pub struct BrouwerianExtension {
    filters: Vec<ElementSubset>,
    meet: Vec<usize>,
    imp: Vec<usize>,
    one: usize,
    embedding: Vec<usize>,
}

impl BrouwerianExtension {
    /// The carrier, sorted by size then bitmask.
    pub fn filters(&self) -> &[ElementSubset] {
        &self.filters
    }

    pub fn len(&self) -> usize {
        self.filters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.filters.is_empty()
    }

    /// `F <= G` iff `G ⊆ F`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.filters[j].is_subset(self.filters[i])
    }

    /// `F ⊔ G`.
    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.len() + j]
    }

    /// The least `H` (by inclusion) with `G ⊆ F ⊔ H`.
    pub fn imp(&self, i: usize, j: usize) -> usize {
        self.imp[i * self.len() + j]
    }

    /// The index of `{1}`.
    pub fn one(&self) -> usize {
        self.one
    }

    /// `p |-> index of [p)`.
    pub fn embedding(&self) -> &[usize] {
        &self.embedding
    }

    /// The implication reduct, validated as a Hilbert algebra.
    pub fn as_algebra(&self) -> Result<HilbertAlgebra> {
        let n = self.len();
        let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| self.imp(i, j)).collect()).collect();
        validate_hilbert(&table, self.one)
    }
}

pub fn minimal_brouwerian_extension(alg: &HilbertAlgebra) -> Result<BrouwerianExtension> {
    let filters = finitely_generated_filters(alg);
    let n = filters.len();
    let index = |j: ElementSubset| {
        filters
            .iter()
            .position(|&f| f == j)
            .ok_or_else(|| Error::invariant(format!("{j} is not a finitely generated filter")))
    };
    let mut meet = Vec::with_capacity(n * n);
    let mut imp = Vec::with_capacity(n * n);
    for &f in &filters {
        for &g in &filters {
            meet.push(index(filter_join(alg, f, g))?);
            let cands: Vec<ElementSubset> = filters
                .iter()
                .copied()
                .filter(|&h| g.is_subset(filter_join(alg, f, h)))
                .collect();
            let bottom = cands.iter().fold(alg.universe(), |acc, &h| acc & h);
            if !cands.contains(&bottom) {
                return Err(Error::invariant(format!("no least H with {g} ⊆ {f} ⊔ H")));
            }
            imp.push(index(bottom)?);
        }
    }
    let one = index(ElementSubset::singleton(alg.one()))?;
    let embedding = alg
        .elements()
        .map(|p| index(principal_filter(alg, p)))
        .collect::<Result<Vec<_>>>()?;
    Ok(BrouwerianExtension { filters, meet, imp, one, embedding })
}

/// The extension is an implicative semilattice into which `A` embeds, every
/// element is a finite meet of embedded ones, and it is dual to `CE^f`.
pub fn check_brouwerian(alg: &HilbertAlgebra) -> VerificationReport {
    let mut c = Check::new("brouwerian");
    let ext = match minimal_brouwerian_extension(alg) {
        Ok(e) => e,
        Err(e) => {
            c.law("extension exists", false, || e.to_string());
            return VerificationReport::single(c.finish());
        }
    };
    let n = ext.len();
    match ext.as_algebra() {
        Err(e) => {
            c.law("extension is a Hilbert algebra", false, || e.to_string());
        }
        Ok(h) => {
            c.law("extension is an implicative semilattice", h.is_implicative_semilattice(), String::new);
            for i in 0..n {
                for j in 0..n {
                    c.law("natural order is reverse inclusion", h.leq(i, j) == ext.leq(i, j), || {
                        format!("F={} G={}", ext.filters()[i], ext.filters()[j])
                    });
                    c.law("meet is ⊔", h.partial_meet(i, j) == Some(ext.meet(i, j)), || {
                        format!("F={} G={}", ext.filters()[i], ext.filters()[j])
                    });
                }
            }
            if alg.is_implicative_semilattice() {
                c.law("A implicative semilattice: extension ≅ A", crate::enumeration::are_isomorphic(alg, &h).is_some(), String::new);
            }
        }
    }
    let emb = ext.embedding();
    c.law("embedding preserves 1", emb[alg.one()] == ext.one(), String::new);
    for p in alg.elements() {
        for q in alg.elements() {
            let w = || format!("p={p} q={q}");
            c.law("[p) -> [q) = [p -> q)", ext.imp(emb[p], emb[q]) == emb[alg.imp(p, q)], w);
            if p != q {
                c.law("embedding is injective", emb[p] != emb[q], w);
            }
        }
    }
    let image: Vec<usize> = {
        let mut v = emb.to_vec();
        v.sort_unstable();
        v.dedup();
        v
    };
    for (i, &j) in ext.filters().iter().enumerate() {
        let as_meet = j.iter().map(|p| emb[p]).fold(ext.one(), |acc, k| ext.meet(acc, k));
        c.law("every element is a finite meet of embedded elements", as_meet == i, || format!("J={j}"));
    }
    c.note(format!("{} element(s), {} in the image of A", n, image.len()));

    // Dual to CE^f via J |-> the closure endomorphism with kernel J.
    let mut maps = Vec::with_capacity(n);
    for &j in ext.filters() {
        match ce_from_monomial_filter(alg, j) {
            Ok(f) => maps.push(f.into_map()),
            Err(e) => {
                c.law("every f.g. filter is a kernel", false, || format!("J={j}: {e}"));
                return VerificationReport::single(c.finish());
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            c.law(
                "F <= G in the extension iff phi_G <= phi_F",
                ext.leq(i, j) == maps[j].pointwise_leq(alg, &maps[i]),
                || format!("F={} G={}", ext.filters()[i], ext.filters()[j]),
            );
        }
    }
    VerificationReport::single(c.finish())
}

/// The lattice of nonempty ideals of `CE^f`.
pub fn ideal_lattice_of_adjoint(alg: &HilbertAlgebra) -> Result<FiniteLattice> {
    adjoint_semilattice(alg)?.lattice().ideal_lattice()
}

/// The ideal lattice of `CE^f` is isomorphic to the filter lattice.
pub fn check_filter_ideal_bridge(alg: &HilbertAlgebra) -> VerificationReport {
    let mut c = Check::new("bridge");
    let filters = all_filters(alg);
    match ideal_lattice_of_adjoint(alg) {
        Ok(ideals) => {
            c.law("ideals of CE^f ≅ filters of A", ideals.is_isomorphic(filters.lattice()), || {
                format!("{} ideals, {} filters", ideals.len(), filters.len())
            });
            c.note(format!("{} ideal(s)", ideals.len()));
        }
        Err(e) => {
            c.law("ideals of CE^f form a lattice", false, || e.to_string());
        }
    }
    VerificationReport::single(c.finish())
}

/// On implication algebras `CE^f` is a down-set of `CE`, and
/// `phi <= alpha_P` gives `phi = alpha_Q` with `Q = {phi p -> p : p in P}`.
/// Fails with [`Error::Precondition`] on other algebras.
pub fn check_impla3(alg: &HilbertAlgebra) -> Result<VerificationReport> {
    if !alg.is_implication_algebra() {
        return Err(Error::Precondition("not an implication algebra".into()));
    }
    let mut c = Check::new("impla3");
    let ce = closure_endomorphisms(alg);
    let fg = finitely_generated_ces(alg);
    for f in &ce {
        for g in &fg {
            if f.pointwise_leq(alg, g) {
                c.law("CE^f is a down-set of CE", fg.binary_search(f).is_ok(), || format!("phi={f} psi={g}"));
            }
        }
    }
    let subsets: Vec<ElementSubset> = if alg.len() <= SUBSET_SCAN_LIMIT {
        ElementSubset::all(alg.len()).collect()
    } else {
        c.note(format!("n > {SUBSET_SCAN_LIMIT}: P ranges over subsets of size <= 2"));
        ElementSubset::all(alg.len()).filter(|s| s.len() <= 2).collect()
    };
    for p in subsets {
        let ap = alpha_set(alg, p);
        for f in &ce {
            if f.pointwise_leq(alg, &ap) {
                let q: ElementSubset = p.iter().map(|x| alg.imp(f.apply(x), x)).collect();
                c.law("phi <= alpha_P implies phi = alpha_Q", alpha_set(alg, q).map() == f, || {
                    format!("phi={f} P={p} Q={q}")
                });
            }
        }
    }
    for f in &fg {
        for g in &fg {
            let m = f.pointwise_meet(alg, g);
            c.law(
                "CE^f is closed under meets",
                m.as_ref().is_some_and(|m| fg.binary_search(m).is_ok()),
                || format!("phi={f} psi={g}"),
            );
        }
    }
    Ok(VerificationReport::single(c.finish()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{goedel_chain, implication_fork, singleton, two_chain};
    use crate::multipliers::iota;

    fn set(xs: &[usize]) -> ElementSubset {
        xs.iter().copied().collect()
    }

    #[test]
    fn alpha_sets() {
        let f = implication_fork();
        assert_eq!(*alpha_set(&f, ElementSubset::EMPTY).map(), eps(&f));
        assert_eq!(*alpha_set(&f, set(&[2])).map(), eps(&f));
        assert_eq!(*alpha_set(&f, set(&[0, 1])).map(), iota(&f));
    }

    #[test]
    fn subtraction_examples() {
        let f = implication_fork();
        let (a, b) = (alpha(&f, 0), alpha(&f, 1));
        assert_eq!(*subtraction(&f, &a, &b).unwrap().map(), b);
        assert_eq!(*subtraction(&f, &eps(&f), &b).unwrap().map(), b);
        assert_eq!(*subtraction(&f, &iota(&f), &a).unwrap().map(), eps(&f));
    }

    #[test]
    fn adjoint_of_fixtures() {
        assert_eq!(adjoint_semilattice(&singleton()).unwrap().len(), 1);
        let c = adjoint_semilattice(&goedel_chain(3)).unwrap();
        assert!(c.lattice().is_isomorphic(&FiniteLattice::from_order(3, |a, b| a <= b).unwrap()));
        let f = adjoint_semilattice(&implication_fork()).unwrap();
        assert_eq!(f.len(), 4);
        assert!(f.lattice().is_boolean());
    }

    #[test]
    fn join_density_examples() {
        let c = goedel_chain(3);
        let k = kernel(&c, &alpha(&c, 1));
        assert_eq!(k, set(&[1, 2]));
        assert_eq!(*alpha_set(&c, k).map(), alpha(&c, 1));
        let f = implication_fork();
        let a = alpha(&f, 0);
        assert_eq!(a.fixpoints(), set(&[1, 2]));
        let m = delta(&f, 1).pointwise_meet(&f, &delta(&f, 2)).unwrap();
        assert_eq!(m, a);
    }

    #[test]
    fn extensions() {
        let s = minimal_brouwerian_extension(&singleton()).unwrap();
        assert_eq!(s.len(), 1);
        let c = goedel_chain(3);
        let e = minimal_brouwerian_extension(&c).unwrap();
        assert_eq!(e.len(), 3);
        assert!(crate::enumeration::are_isomorphic(&c, &e.as_algebra().unwrap()).is_some());
        let f = minimal_brouwerian_extension(&implication_fork()).unwrap();
        assert_eq!(f.len(), 4);
        assert!(f.as_algebra().unwrap().is_implicative_semilattice());
    }

    #[test]
    fn ideal_bridge() {
        assert_eq!(ideal_lattice_of_adjoint(&singleton()).unwrap().len(), 1);
        assert_eq!(ideal_lattice_of_adjoint(&goedel_chain(3)).unwrap().len(), 3);
        assert!(ideal_lattice_of_adjoint(&implication_fork()).unwrap().is_boolean());
    }

    #[test]
    fn fixture_checks_pass() {
        for alg in [singleton(), two_chain(), goedel_chain(3), goedel_chain(4), implication_fork()] {
            for r in [check_join_density(&alg), check_kk2(&alg), check_brouwerian(&alg), check_filter_ideal_bridge(&alg)] {
                assert!(r.passed(), "{}", r.render_text(false));
            }
        }
        assert!(check_impla3(&implication_fork()).unwrap().passed());
        assert!(check_impla3(&two_chain()).unwrap().passed());
        assert!(matches!(check_impla3(&goedel_chain(3)), Err(Error::Precondition(_))));
    }
}
