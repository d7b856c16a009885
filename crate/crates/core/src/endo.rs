use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::HilbertAlgebra;
use crate::subset::ElementSubset;

/// A total self-map of the universe, `img[x]` being the image of `x`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EndoMap(Vec<usize>);

impl EndoMap {
    pub fn new(img: Vec<usize>) -> Self {
        EndoMap(img)
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> usize) -> Self {
        EndoMap((0..n).map(f).collect())
    }

    pub fn identity(n: usize) -> Self {
        EndoMap((0..n).collect())
    }

    pub fn constant(n: usize, c: usize) -> Self {
        EndoMap(vec![c; n])
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `x |-> next(self(x))`: apply `self` first, then `next`.
    ///
    /// The lattice join `phi o psi` of closure endomorphisms is written
    /// `phi.then(psi)`; for those maps the order does not matter.
    pub fn then(&self, next: &EndoMap) -> EndoMap {
        EndoMap(self.0.iter().map(|&y| next.0[y]).collect())
    }

    pub fn is_idempotent(&self) -> bool {
        self.0.iter().all(|&y| self.0[y] == y)
    }

    /// `{x : f x = x}`
    pub fn fixpoints(&self) -> ElementSubset {
        self.0.iter().enumerate().filter(|&(x, &y)| x == y).map(|(x, _)| x).collect()
    }

    pub fn range(&self) -> ElementSubset {
        self.0.iter().copied().collect()
    }

    /// `{x : f x = c}`
    pub fn preimage(&self, c: usize) -> ElementSubset {
        self.0.iter().enumerate().filter(|&(_, &y)| y == c).map(|(x, _)| x).collect()
    }

    /// Pointwise order: `f x <= g x` for every `x`.
    pub fn pointwise_leq(&self, alg: &HilbertAlgebra, other: &EndoMap) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| alg.leq(a, b))
    }

    /// Pointwise implication `x |-> f x -> g x`.
    pub fn pointwise_imp(&self, alg: &HilbertAlgebra, other: &EndoMap) -> EndoMap {
        EndoMap(self.0.iter().zip(&other.0).map(|(&a, &b)| alg.imp(a, b)).collect())
    }

    /// Pointwise meet, or `None` where some pair of images has no meet.
    pub fn pointwise_meet(&self, alg: &HilbertAlgebra, other: &EndoMap) -> Option<EndoMap> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| alg.partial_meet(a, b))
            .collect::<Option<Vec<_>>>()
            .map(EndoMap)
    }

    pub fn is_isotone(&self, alg: &HilbertAlgebra) -> bool {
        alg.elements()
            .all(|x| alg.up(x).iter().all(|y| alg.leq(self.0[x], self.0[y])))
    }

    pub fn is_extensive(&self, alg: &HilbertAlgebra) -> bool {
        self.0.iter().enumerate().all(|(x, &y)| alg.leq(x, y))
    }

    /// `f(x -> y) = f x -> f y` for all `x, y`.
    pub fn is_endomorphism(&self, alg: &HilbertAlgebra) -> bool {
        alg.elements().all(|x| {
            alg.elements()
                .all(|y| self.0[alg.imp(x, y)] == alg.imp(self.0[x], self.0[y]))
        })
    }

    /// Renders the map as `(f 0, f 1, ..)` using `label`.
    pub fn display_with<F: Fn(usize) -> String>(&self, label: F) -> String {
        let items: Vec<String> = self.0.iter().map(|&y| label(y)).collect();
        format!("({})", items.join(","))
    }
}

impl fmt::Debug for EndoMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(|x| x.to_string()))
    }
}

impl fmt::Display for EndoMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(|x| x.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::goedel_chain;

    #[test]
    fn composition_order() {
        let f = EndoMap::new(vec![1, 1, 2]);
        let g = EndoMap::new(vec![0, 2, 2]);
        assert_eq!(f.then(&g), EndoMap::new(vec![2, 2, 2]));
        assert_eq!(g.then(&f), EndoMap::new(vec![1, 2, 2]));
    }

    #[test]
    fn pointwise_structure_on_chain() {
        let c = goedel_chain(3);
        let alpha_a = EndoMap::new(vec![0, 2, 2]);
        let eps = EndoMap::identity(3);
        assert!(eps.pointwise_leq(&c, &alpha_a));
        assert_eq!(alpha_a.pointwise_meet(&c, &eps), Some(eps.clone()));
        assert_eq!(alpha_a.fixpoints(), [0, 2].into_iter().collect());
        assert_eq!(alpha_a.preimage(2), [1, 2].into_iter().collect());
        assert!(alpha_a.is_endomorphism(&c) && alpha_a.is_isotone(&c) && alpha_a.is_extensive(&c));
        assert_eq!(alpha_a.to_string(), "(0,2,2)");
    }
}
