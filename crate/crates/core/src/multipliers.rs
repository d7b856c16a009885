//! Multipliers: self-maps with `f(x -> y) = x -> f(y)`, the named families
//! `eps`, `iota`, `alpha_p`, `beta_p`, `delta_p`, and the algebra they form.

use crate::algebra::HilbertAlgebra;
use crate::bijection::UNSET;
use crate::endo::EndoMap;
use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::report::{Check, VerificationReport};
use crate::subset::ElementSubset;

pub fn is_multiplier(alg: &HilbertAlgebra, f: &EndoMap) -> bool {
    f.len() == alg.len()
        && alg.elements().all(|x| {
            alg.elements()
                .all(|y| f.apply(alg.imp(x, y)) == alg.imp(x, f.apply(y)))
        })
}

/// The identity map.
pub fn eps(alg: &HilbertAlgebra) -> EndoMap {
    EndoMap::identity(alg.len())
}

/// The constant map onto the unit.
pub fn iota(alg: &HilbertAlgebra) -> EndoMap {
    EndoMap::constant(alg.len(), alg.one())
}

/// `x |-> p -> x`
pub fn alpha(alg: &HilbertAlgebra, p: usize) -> EndoMap {
    EndoMap::from_fn(alg.len(), |x| alg.imp(p, x))
}

/// `x |-> (x -> p) -> x`
pub fn beta(alg: &HilbertAlgebra, p: usize) -> EndoMap {
    EndoMap::from_fn(alg.len(), |x| alg.imp(alg.imp(x, p), x))
}

/// `x |-> (p -> x) -> x`
pub fn delta(alg: &HilbertAlgebra, p: usize) -> EndoMap {
    EndoMap::from_fn(alg.len(), |x| alg.imp(alg.imp(p, x), x))
}

/// Assigns `img[x] = v` and propagates `f(p -> x) = p -> f(x)` for all `p`.
/// Newly assigned positions are pushed onto `trail`.
fn assign(alg: &HilbertAlgebra, img: &mut [usize], trail: &mut Vec<usize>, x: usize, v: usize) -> bool {
    let mut queue = vec![(x, v)];
    while let Some((x, v)) = queue.pop() {
        match img[x] {
            UNSET => {
                img[x] = v;
                trail.push(x);
                for p in alg.elements() {
                    queue.push((alg.imp(p, x), alg.imp(p, v)));
                }
            }
            w if w == v => {}
            _ => return false,
        }
    }
    true
}

fn search(alg: &HilbertAlgebra, img: &mut [usize], trail: &mut Vec<usize>, out: &mut Vec<EndoMap>) {
    let Some(x) = img.iter().position(|&v| v == UNSET) else {
        let f = EndoMap::new(img.to_vec());
        if is_multiplier(alg, &f) {
            out.push(f);
        }
        return;
    };
    // Multipliers are extensive, so only the up-set of x is tried.
    for v in alg.up(x).iter() {
        let mark = trail.len();
        if assign(alg, img, trail, x, v) {
            search(alg, img, trail, out);
        }
        for y in trail.drain(mark..) {
            img[y] = UNSET;
        }
    }
}

/// Every multiplier, sorted by image vector.
///
/// Found by backtracking with propagation of the defining identity, starting
/// from `f(1) = 1`, instead of scanning all `n^n` maps.
pub fn multipliers(alg: &HilbertAlgebra) -> Vec<EndoMap> {
    let mut img = vec![UNSET; alg.len()];
    let mut trail = Vec::new();
    let mut out = Vec::new();
    if assign(alg, &mut img, &mut trail, alg.one(), alg.one()) {
        search(alg, &mut img, &mut trail, &mut out);
    }
    out.sort();
    out
}

/// All `n^n` maps filtered by [`is_multiplier`]; a cross-check for tiny `n`.
pub fn multipliers_brute_force(alg: &HilbertAlgebra) -> Vec<EndoMap> {
    all_maps(alg.len()).filter(|f| is_multiplier(alg, f)).collect()
}

/// Every self-map of `0..n` in lexicographic order.
pub fn all_maps(n: usize) -> impl Iterator<Item = EndoMap> {
    let total = (n as u64).checked_pow(n as u32).expect("too many maps to enumerate");
    (0..total).map(move |mut code| {
        let mut img = vec![0; n];
        for slot in img.iter_mut().rev() {
            *slot = (code % n as u64) as usize;
            code /= n as u64;
        }
        EndoMap::new(img)
    })
}

/// The multipliers with composition, pointwise implication and pointwise
/// meet, all as index tables over the sorted carrier.
#[derive(Clone, Debug)]
pub struct MultiplierAlgebra {
    maps: Vec<EndoMap>,
    compose: Vec<usize>,
    imp: Vec<usize>,
    meet: Vec<usize>,
    eps: usize,
    iota: usize,
}

fn lookup(maps: &[EndoMap], f: &EndoMap, what: &str) -> Result<usize> {
    maps.binary_search(f)
        .map_err(|_| Error::invariant(format!("{what} {f} is not in the carrier")))
}

/// Builds the tables; fails with [`Error::Invariant`] if the carrier is not
/// closed under an operation or two images have no meet.
pub fn all_multipliers(alg: &HilbertAlgebra) -> Result<MultiplierAlgebra> {
    MultiplierAlgebra::from_maps(alg, multipliers(alg))
}

impl MultiplierAlgebra {
    pub(crate) fn from_maps(alg: &HilbertAlgebra, maps: Vec<EndoMap>) -> Result<Self> {
        let m = maps.len();
        let mut compose = Vec::with_capacity(m * m);
        let mut imp = Vec::with_capacity(m * m);
        let mut meet = Vec::with_capacity(m * m);
        for f in &maps {
            for g in &maps {
                compose.push(lookup(&maps, &f.then(g), "composite")?);
                imp.push(lookup(&maps, &f.pointwise_imp(alg, g), "pointwise implication")?);
                let fg = f
                    .pointwise_meet(alg, g)
                    .ok_or_else(|| Error::invariant(format!("images of {f} and {g} have no meet")))?;
                meet.push(lookup(&maps, &fg, "pointwise meet")?);
            }
        }
        let eps = lookup(&maps, &self::eps(alg), "identity")?;
        let iota = lookup(&maps, &self::iota(alg), "unit map")?;
        Ok(MultiplierAlgebra { maps, compose, imp, meet, eps, iota })
    }

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

    /// Index of `maps[i] o maps[j]` (apply `i` first).
    pub fn compose(&self, i: usize, j: usize) -> usize {
        self.compose[i * self.len() + j]
    }

    pub fn imp(&self, i: usize, j: usize) -> usize {
        self.imp[i * self.len() + j]
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.len() + j]
    }

    pub fn eps(&self) -> usize {
        self.eps
    }

    pub fn iota(&self) -> usize {
        self.iota
    }

    /// `-phi = phi -> eps`
    pub fn complement(&self, i: usize) -> usize {
        self.imp(i, self.eps)
    }

    /// The carrier ordered pointwise.
    pub fn lattice(&self, alg: &HilbertAlgebra) -> Result<FiniteLattice> {
        FiniteLattice::from_order(self.len(), |i, j| self.maps[i].pointwise_leq(alg, &self.maps[j]))
    }

    /// `(M, ->, iota)` as a Hilbert algebra in its own right.
    pub fn as_algebra(&self) -> Result<HilbertAlgebra> {
        let m = self.len();
        let table: Vec<Vec<usize>> = (0..m).map(|i| (0..m).map(|j| self.imp(i, j)).collect()).collect();
        HilbertAlgebra::new(&table, self.iota)
    }
}

/// `M(x) = {phi x : phi in M}`
pub fn multiplier_block(alg: &HilbertAlgebra, x: usize) -> ElementSubset {
    multipliers(alg).iter().map(|f| f.apply(x)).collect()
}

/// Meet of `x` and `y` computed inside `b` with the inherited order.
pub(crate) fn meet_within(alg: &HilbertAlgebra, b: ElementSubset, x: usize, y: usize) -> Option<usize> {
    let lower = b & alg.down(x) & alg.down(y);
    lower.iter().find(|&m| lower.is_subset(alg.down(m)))
}

/// The nine calculus laws for every pair of multipliers and every element,
/// followed by the structure of the multiplier algebra.
pub fn check_multiplier_calculus(alg: &HilbertAlgebra) -> VerificationReport {
    let maps = multipliers(alg);
    let mut report = VerificationReport::new();
    report.push(calculus_laws(alg, &maps));
    report.push(multiplier_structure(alg, &maps));
    report
}

fn calculus_laws(alg: &HilbertAlgebra, maps: &[EndoMap]) -> crate::report::CheckResult {
    let mut c = Check::new("multiplier-calculus");
    let one = alg.one();
    let i = |a, b| alg.imp(a, b);
    let mut named = vec![("eps", eps(alg)), ("iota", iota(alg))];
    for p in alg.elements() {
        named.push(("alpha", alpha(alg, p)));
        named.push(("beta", beta(alg, p)));
        named.push(("delta", delta(alg, p)));
    }
    for (name, f) in &named {
        c.law("named maps are multipliers", is_multiplier(alg, f), || format!("{name} = {f}"));
    }
    for phi in maps {
        c.law("(a) phi 1 = 1", phi.apply(one) == one, || format!("phi={phi}"));
        for x in alg.elements() {
            let px = phi.apply(x);
            c.law("(b) x <= phi x", alg.leq(x, px), || format!("phi={phi} x={x}"));
            c.law("(c) phi x = (phi x -> x) -> x", px == i(i(px, x), x), || format!("phi={phi} x={x}"));
            c.law("(d) phi x = (phi x -> x) -> phi x", px == i(i(px, x), px), || format!("phi={phi} x={x}"));
            c.law("(e) phi phi x = phi x", phi.apply(px) == px, || format!("phi={phi} x={x}"));
        }
        for psi in maps {
            for x in alg.elements() {
                let px = phi.apply(x);
                let sx = psi.apply(x);
                let spx = psi.apply(px);
                let w = || format!("phi={phi} psi={psi} x={x}");
                c.law("(f) phi x = (phi x -> psi x) -> phi x", px == i(i(px, sx), px), w);
                c.law("(g) psi phi x = (phi x -> x) -> psi x", spx == i(i(px, x), sx), w);
                c.law("(h) psi phi x = phi psi x", spx == phi.apply(sx), w);
                c.law("(i) psi phi x = (phi x -> psi x) -> psi x", spx == i(i(px, sx), sx), w);
            }
        }
    }
    c.finish()
}

fn multiplier_structure(alg: &HilbertAlgebra, maps: &[EndoMap]) -> crate::report::CheckResult {
    let mut c = Check::new("multiplier-structure");
    let one = ElementSubset::singleton(alg.one());
    for phi in maps {
        let fix = phi.fixpoints();
        let w = || format!("phi={phi}");
        c.law("fixpoints = range", fix == phi.range(), w);
        c.law("fixpoint set is a subalgebra", alg.is_subalgebra(fix), w);
        let shrunk: ElementSubset = alg.elements().filter(|&x| alg.leq(phi.apply(x), x)).collect();
        c.law("F = {x : phi x <= x}", fix == shrunk, w);
        c.law("K meets F only in 1", phi.preimage(alg.one()) & fix == one, w);
        for psi in maps {
            c.law(
                "phi <= psi iff phi o psi = psi",
                phi.pointwise_leq(alg, psi) == (phi.then(psi) == *psi),
                || format!("phi={phi} psi={psi}"),
            );
        }
    }
    let m = match MultiplierAlgebra::from_maps(alg, maps.to_vec()) {
        Ok(m) => m,
        Err(e) => {
            c.law("closed under o, -> and pointwise meet", false, || e.to_string());
            return c.finish();
        }
    };
    match m.as_algebra() {
        Ok(ma) => {
            c.law("(M, ->, iota) is an implication algebra", ma.is_implication_algebra(), String::new);
            c.law(
                "eps is the least multiplier",
                (0..m.len()).all(|j| ma.leq(m.eps(), j)),
                String::new,
            );
        }
        Err(e) => {
            c.law("(M, ->, iota) is a Hilbert algebra", false, || e.to_string());
        }
    }
    match m.lattice(alg) {
        Ok(l) => {
            for a in 0..m.len() {
                for b in 0..m.len() {
                    let w = || format!("phi={} psi={}", m.maps()[a], m.maps()[b]);
                    c.law("join is composition", l.join(a, b) == m.compose(a, b), w);
                    c.law("meet is pointwise", l.meet(a, b) == m.meet(a, b), w);
                }
            }
            c.law("(M, o, /\\) is Boolean", l.is_boolean(), || {
                format!("distributivity failure {:?}", l.distributivity_failure())
            });
        }
        Err(e) => {
            c.law("pointwise order is a lattice", false, || e.to_string());
        }
    }
    for a in 0..m.len() {
        let neg = m.complement(a);
        let w = || format!("phi={}", m.maps()[a]);
        c.law("phi /\\ -phi = eps", m.meet(a, neg) == m.eps(), w);
        c.law("phi o -phi = iota", m.compose(a, neg) == m.iota(), w);
    }
    for x in alg.elements() {
        let b: ElementSubset = maps.iter().map(|f| f.apply(x)).collect();
        c.law("M(x) is a block", alg.is_block(b), || format!("x={x} M(x)={b}"));
        for u in b.iter() {
            for v in b.iter() {
                let w = || format!("x={x} u={u} v={v}");
                let cm = alg.compatible_meet(u, v);
                c.law("elements of M(x) are compatible", cm.is_some(), w);
                c.law("block meet = algebra meet", cm == meet_within(alg, b, u, v), w);
            }
        }
    }
    c.finish()
}
