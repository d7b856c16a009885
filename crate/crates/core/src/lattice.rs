//! A small explicit finite lattice: carrier `0..len`, order matrix and
//! materialized join/meet tables. Used for filter lattices, the lattice of
//! closure endomorphisms and ideal lattices alike.

use crate::bijection::{self, UNSET};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLattice {
    size: usize,
    leq: Vec<bool>,
    join: Vec<usize>,
    meet: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl FiniteLattice {
    /// Builds the lattice on `0..size` ordered by `leq`, failing if `leq` is
    /// not a partial order or some pair lacks a join or a meet.
    pub fn from_order(size: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        if size == 0 {
            return Err(Error::Precondition("a lattice needs at least one element".into()));
        }
        let mut m = vec![false; size * size];
        for a in 0..size {
            for b in 0..size {
                m[a * size + b] = leq(a, b);
            }
        }
        let le = |a: usize, b: usize| m[a * size + b];
        for a in 0..size {
            if !le(a, a) {
                return Err(Error::Precondition(format!("order is not reflexive at {a}")));
            }
            for b in 0..size {
                if a != b && le(a, b) && le(b, a) {
                    return Err(Error::Precondition(format!("order is not antisymmetric at ({a},{b})")));
                }
                for c in 0..size {
                    if le(a, b) && le(b, c) && !le(a, c) {
                        return Err(Error::Precondition(format!("order is not transitive at ({a},{b},{c})")));
                    }
                }
            }
        }
        let mut join = vec![0; size * size];
        let mut meet = vec![0; size * size];
        for a in 0..size {
            for b in 0..size {
                let upper: Vec<usize> = (0..size).filter(|&c| le(a, c) && le(b, c)).collect();
                let lower: Vec<usize> = (0..size).filter(|&c| le(c, a) && le(c, b)).collect();
                join[a * size + b] = *upper
                    .iter()
                    .find(|&&j| upper.iter().all(|&c| le(j, c)))
                    .ok_or_else(|| Error::Precondition(format!("no join of {a} and {b}")))?;
                meet[a * size + b] = *lower
                    .iter()
                    .find(|&&j| lower.iter().all(|&c| le(c, j)))
                    .ok_or_else(|| Error::Precondition(format!("no meet of {a} and {b}")))?;
            }
        }
        let bottom = (0..size).find(|&a| (0..size).all(|b| le(a, b))).expect("finite lattice has a bottom");
        let top = (0..size).find(|&a| (0..size).all(|b| le(b, a))).expect("finite lattice has a top");
        Ok(FiniteLattice { size, leq: m, join, meet, bottom, top })
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.size + b]
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size + b]
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size + b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn join_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// The same carrier with the order reversed.
    pub fn dual(&self) -> FiniteLattice {
        FiniteLattice::from_order(self.size, |a, b| self.leq(b, a)).expect("dual of a lattice is a lattice")
    }

    /// Covering pairs `(a, b)`: `a < b` with nothing strictly in between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.size;
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b
                    && self.leq(a, b)
                    && !(0..n).any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b))
                {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// A triple violating `a /\ (b \/ c) = (a /\ b) \/ (a /\ c)`, if any.
    pub fn distributivity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.size;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.meet(a, self.join(b, c)) != self.join(self.meet(a, b), self.meet(a, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_failure().is_none()
    }

    /// Some complement of `a`, if one exists.
    pub fn complement(&self, a: usize) -> Option<usize> {
        (0..self.size).find(|&b| self.meet(a, b) == self.bottom && self.join(a, b) == self.top)
    }

    pub fn is_boolean(&self) -> bool {
        self.is_distributive() && (0..self.size).all(|a| self.complement(a).is_some())
    }

    /// Elements `a` such that whenever `a <= \/X`, a finite part of `X`
    /// already covers `a`. Every subset of a finite lattice is finite, so
    /// this is the whole carrier; the notion only bites for infinite ones.
    pub fn compact_elements(&self) -> Vec<usize> {
        (0..self.size).collect()
    }

    /// Nonempty down-sets closed under binary joins, as sorted index lists,
    /// in a deterministic order. Only the join structure is used, so this is
    /// the ideal lattice of the underlying join-semilattice.
    pub fn ideals(&self) -> Vec<Vec<usize>> {
        let n = self.size;
        let generate = |seed: &[bool]| -> Vec<bool> {
            let mut s = seed.to_vec();
            loop {
                let mut changed = false;
                for a in 0..n {
                    if !s[a] {
                        continue;
                    }
                    for b in 0..n {
                        if !s[b] && self.leq(b, a) {
                            s[b] = true;
                            changed = true;
                        }
                    }
                }
                for a in 0..n {
                    for b in 0..n {
                        if s[a] && s[b] && !s[self.join(a, b)] {
                            s[self.join(a, b)] = true;
                            changed = true;
                        }
                    }
                }
                if !changed {
                    return s;
                }
            }
        };
        let mut seen: Vec<Vec<bool>> = Vec::new();
        let mut frontier: Vec<Vec<bool>> = Vec::new();
        for a in 0..n {
            let mut seed = vec![false; n];
            seed[a] = true;
            let ideal = generate(&seed);
            if !seen.contains(&ideal) {
                seen.push(ideal.clone());
                frontier.push(ideal);
            }
        }
        while let Some(i) = frontier.pop() {
            let current = seen.clone();
            for j in current {
                let seed: Vec<bool> = i.iter().zip(&j).map(|(&x, &y)| x || y).collect();
                let ideal = generate(&seed);
                if !seen.contains(&ideal) {
                    seen.push(ideal.clone());
                    frontier.push(ideal);
                }
            }
        }
        let mut out: Vec<Vec<usize>> = seen
            .into_iter()
            .map(|s| (0..n).filter(|&a| s[a]).collect())
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// The ideals of [`ideals`](Self::ideals) ordered by inclusion.
    pub fn ideal_lattice(&self) -> Result<FiniteLattice> {
        let ideals = self.ideals();
        FiniteLattice::from_order(ideals.len(), |a, b| ideals[a].iter().all(|x| ideals[b].contains(x)))
    }

    /// Per element: (elements below, elements above, lower covers, upper covers).
    fn invariants(&self) -> Vec<(usize, usize, usize, usize)> {
        let covers = self.covers();
        (0..self.size)
            .map(|a| {
                let below = (0..self.size).filter(|&b| self.leq(b, a)).count();
                let above = (0..self.size).filter(|&b| self.leq(a, b)).count();
                let lower = covers.iter().filter(|&&(_, y)| y == a).count();
                let upper = covers.iter().filter(|&&(x, _)| x == a).count();
                (below, above, lower, upper)
            })
            .collect()
    }

    /// An order isomorphism onto `other` (hence a lattice isomorphism), as
    /// the image of each element of `self`.
    pub fn isomorphism_to(&self, other: &FiniteLattice) -> Option<Vec<usize>> {
        if self.size != other.size {
            return None;
        }
        let n = self.size;
        let mine = self.invariants();
        let theirs = other.invariants();
        let mut a_sorted = mine.clone();
        let mut b_sorted = theirs.clone();
        a_sorted.sort_unstable();
        b_sorted.sort_unstable();
        if a_sorted != b_sorted {
            return None;
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&a| (mine[a].0, a));
        bijection::find(
            n,
            &order,
            |a| (0..n).filter(|&b| theirs[b] == mine[a]).collect(),
            |f, a, b| {
                (0..n).all(|c| {
                    f[c] == UNSET
                        || (self.leq(a, c) == other.leq(b, f[c]) && self.leq(c, a) == other.leq(f[c], b))
                })
            },
        )
    }

    pub fn is_isomorphic(&self, other: &FiniteLattice) -> bool {
        self.isomorphism_to(other).is_some()
    }
}
