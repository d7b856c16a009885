//! Endomorphism monoids and their isomorphisms.

use crate::algebra::HilbertAlgebra;
use crate::bijection::{self, UNSET};
use crate::endo::EndoMap;
use crate::error::{Error, Result};
use crate::multipliers::all_maps;

/// All maps with `f(x -> y) = f(x) -> f(y)`, sorted. Each choice of `f(x)`
/// is propagated through the table before the next element is tried.
pub fn endomorphisms(alg: &HilbertAlgebra) -> Vec<EndoMap> {
    let n = alg.len();
    let mut f = vec![UNSET; n];
    let mut out = Vec::new();
    f[alg.one()] = alg.one();
    extend(alg, &mut f, &mut out);
    out.sort();
    out
}

/// Closes the partial map under `f(x -> y) = f x -> f y`; `false` on a
/// clash.
fn propagate(alg: &HilbertAlgebra, f: &mut [usize], trail: &mut Vec<usize>) -> bool {
    let n = alg.len();
    loop {
        let mut changed = false;
        for x in 0..n {
            if f[x] == UNSET {
                continue;
            }
            for y in 0..n {
                if f[y] == UNSET {
                    continue;
                }
                let z = alg.imp(x, y);
                let w = alg.imp(f[x], f[y]);
                if f[z] == UNSET {
                    f[z] = w;
                    trail.push(z);
                    changed = true;
                } else if f[z] != w {
                    return false;
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

fn extend(alg: &HilbertAlgebra, f: &mut Vec<usize>, out: &mut Vec<EndoMap>) {
    let Some(x) = f.iter().position(|&v| v == UNSET) else {
        out.push(EndoMap::new(f.clone()));
        return;
    };
    for v in alg.elements() {
        f[x] = v;
        let mut trail = Vec::new();
        if propagate(alg, f, &mut trail) {
            extend(alg, f, out);
        }
        for z in trail {
            f[z] = UNSET;
        }
    }
    f[x] = UNSET;
}

/// Filters all `n^n` maps; for cross-checks on small algebras.
pub fn endomorphisms_brute_force(alg: &HilbertAlgebra) -> Vec<EndoMap> {
    all_maps(alg.len()).filter(|f| f.is_endomorphism(alg)).collect()
}

/// The endomorphisms of an algebra under composition.
#[derive(Clone, Debug)]
pub struct EndoMonoid {
    maps: Vec<EndoMap>,
    compose: Vec<usize>,
    identity: usize,
}

impl EndoMonoid {
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

    /// `maps[i]` first, then `maps[j]`.
    pub fn compose(&self, i: usize, j: usize) -> usize {
        self.compose[i * self.len() + j]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn is_idempotent(&self, i: usize) -> bool {
        self.compose(i, i) == i
    }

    /// Elements `phi` with `tau phi` idempotent for every idempotent `tau`:
    /// the monoid-theoretic description of closure endomorphisms.
    pub fn closure_like(&self) -> Vec<usize> {
        let idem: Vec<usize> = (0..self.len()).filter(|&t| self.is_idempotent(t)).collect();
        (0..self.len())
            .filter(|&p| idem.iter().all(|&t| self.is_idempotent(self.compose(p, t))))
            .collect()
    }

    /// Isomorphism-invariant data of one element.
    fn signature(&self, i: usize) -> (bool, usize, usize, usize, usize, usize) {
        let m = self.len();
        let fixes_right = (0..m).filter(|&j| self.compose(i, j) == i).count();
        let fixes_left = (0..m).filter(|&j| self.compose(j, i) == i).count();
        let absorbed = (0..m).filter(|&j| self.compose(i, j) == j).count();
        // index + period of the cyclic subsemigroup
        let mut powers = vec![i];
        let mut p = i;
        loop {
            p = self.compose(p, i);
            if powers.contains(&p) {
                break;
            }
            powers.push(p);
        }
        let start = powers.iter().position(|&q| q == p).unwrap();
        (self.is_idempotent(i), fixes_right, fixes_left, absorbed, start, powers.len() - start)
    }
}

pub fn endomorphism_monoid(alg: &HilbertAlgebra) -> Result<EndoMonoid> {
    let maps = endomorphisms(alg);
    let m = maps.len();
    let mut compose = Vec::with_capacity(m * m);
    for f in &maps {
        for g in &maps {
            let h = f.then(g);
            compose.push(
                maps.binary_search(&h)
                    .map_err(|_| Error::invariant(format!("composite {h} is not an endomorphism")))?,
            );
        }
    }
    let identity = maps
        .binary_search(&EndoMap::identity(alg.len()))
        .map_err(|_| Error::invariant("identity is not an endomorphism"))?;
    Ok(EndoMonoid { maps, compose, identity })
}

/// A bijection `s` with `s(f g) = s(f) s(g)`, as the image of each index of
/// `a`.
pub fn monoid_isomorphism(a: &EndoMonoid, b: &EndoMonoid) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    let m = a.len();
    let sa: Vec<_> = (0..m).map(|i| a.signature(i)).collect();
    let sb: Vec<_> = (0..m).map(|i| b.signature(i)).collect();
    let mut xa = sa.clone();
    let mut xb = sb.clone();
    xa.sort_unstable();
    xb.sort_unstable();
    if xa != xb {
        return None;
    }
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&i| (i != a.identity(), i));
    bijection::find(
        m,
        &order,
        |i| (0..m).filter(|&j| sb[j] == sa[i]).collect(),
        |f, x, y| {
            let g = |z: usize| if z == x { y } else { f[z] };
            (0..m).filter(|&u| g(u) != UNSET).all(|u| {
                [(x, u), (u, x)].iter().all(|&(p, q)| {
                    let r = g(a.compose(p, q));
                    r == UNSET || b.compose(g(p), g(q)) == r
                }) && (0..m)
                    .filter(|&v| g(v) != UNSET && a.compose(u, v) == x)
                    .all(|v| b.compose(g(u), g(v)) == y)
            })
        },
    )
}

pub fn monoid_isomorphic(a: &EndoMonoid, b: &EndoMonoid) -> bool {
    monoid_isomorphism(a, b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{goedel_chain, implication_fork, two_chain};

    #[test]
    fn two_chain_monoid() {
        let m = endomorphism_monoid(&two_chain()).unwrap();
        assert_eq!(m.maps(), &[EndoMap::new(vec![0, 1]), EndoMap::new(vec![1, 1])]);
    }

    #[test]
    fn fork_has_the_swap() {
        let m = endomorphism_monoid(&implication_fork()).unwrap();
        assert!(m.index_of(&EndoMap::new(vec![1, 0, 2])).is_some());
        assert!(monoid_isomorphic(&m, &m));
    }

    #[test]
    fn propagation_matches_brute_force() {
        for alg in [two_chain(), goedel_chain(3), goedel_chain(4), implication_fork()] {
            assert_eq!(endomorphisms(&alg), endomorphisms_brute_force(&alg));
        }
    }
}
