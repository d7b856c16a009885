//! Finite Hilbert algebras given by their implication tables.
//!
//! An algebra on `n` elements is a table `imp[x][y]` (the index of `x -> y`)
//! together with the index of the unit. The natural order is read off the
//! table: `x <= y` iff `x -> y` is the unit. Validation checks that this
//! relation really is a partial order with the unit on top, and that the
//! weakening and self-distribution axioms hold:
//!
//! ```text
//! x <= y -> x
//! x -> (y -> z) <= (x -> y) -> (x -> z)
//! ```
//!
//! The order axiom is read as `x -> y = 1` iff `x <= y`; a literal reading
//! with `x <= 1` on the right would hold for every pair and say nothing.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subset::ElementSubset;

/// Largest supported universe; subsets are 64-bit masks.
pub const MAX_ELEMENTS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    /// `x -> x = 1`
    Reflexivity,
    /// `x -> y = 1` and `y -> x = 1` imply `x = y`
    Antisymmetry,
    /// `x <= y` and `y <= z` imply `x <= z`
    Transitivity,
    /// `x <= 1`
    Top,
    /// `x <= y -> x`
    Weakening,
    /// `x -> (y -> z) <= (x -> y) -> (x -> z)`
    Exchange,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Reflexivity => "reflexivity",
            Axiom::Antisymmetry => "antisymmetry",
            Axiom::Transitivity => "transitivity",
            Axiom::Top => "top",
            Axiom::Weakening => "weakening",
            Axiom::Exchange => "exchange",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One failing instance of an axiom: the axiom and the elements it failed at.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

impl Violation {
    /// Formats as `axiom: (x,y,z)` using `label` for the elements.
    pub fn display_with<F: Fn(usize) -> String>(&self, label: F) -> String {
        let items: Vec<String> = self.witness.iter().map(|&x| label(x)).collect();
        format!("{}: ({})", self.axiom, items.join(","))
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(|x| x.to_string()))
    }
}

/// The natural order of an algebra, stored as up-sets and down-sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderRelation {
    up: Vec<ElementSubset>,
    down: Vec<ElementSubset>,
}

impl OrderRelation {
    fn from_leq<F: Fn(usize, usize) -> bool>(n: usize, leq: F) -> Self {
        let mut up = vec![ElementSubset::EMPTY; n];
        let mut down = vec![ElementSubset::EMPTY; n];
        for x in 0..n {
            for y in 0..n {
                if leq(x, y) {
                    up[x].insert(y);
                    down[y].insert(x);
                }
            }
        }
        OrderRelation { up, down }
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    /// `{y : x <= y}`
    pub fn up(&self, x: usize) -> ElementSubset {
        self.up[x]
    }

    /// `{y : y <= x}`
    pub fn down(&self, x: usize) -> ElementSubset {
        self.down[x]
    }

    pub fn is_partial_order(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| self.leq(x, x))
            && (0..n).all(|x| (0..n).all(|y| x == y || !(self.leq(x, y) && self.leq(y, x))))
            && (0..n).all(|x| self.up[x].iter().all(|y| self.up[y].is_subset(self.up[x])))
    }

    /// The greatest element, if there is one.
    pub fn top(&self) -> Option<usize> {
        (0..self.len()).find(|&t| self.down[t].len() == self.len())
    }

    /// Greatest element of `s`, if any.
    pub fn max_of(&self, s: ElementSubset) -> Option<usize> {
        s.iter().find(|&m| s.is_subset(self.down[m]))
    }

    /// Least element of `s`, if any.
    pub fn min_of(&self, s: ElementSubset) -> Option<usize> {
        s.iter().find(|&m| s.is_subset(self.up[m]))
    }

    /// Covering pairs `(x, y)` with `x < y` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in (self.up[x] - ElementSubset::singleton(x)).iter() {
                let between = (self.up[x] & self.down[y]) - ElementSubset::singleton(x) - ElementSubset::singleton(y);
                if between.is_empty() {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

/// Which of the named classes an algebra belongs to. Every validated algebra
/// is a Hilbert algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Classification {
    pub hilbert: bool,
    pub implication_algebra: bool,
    pub implicative_semilattice: bool,
}

/// A validated finite Hilbert algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertAlgebra {
    n: usize,
    one: usize,
    imp: Vec<u8>,
    order: OrderRelation,
}

impl PartialOrd for HilbertAlgebra {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HilbertAlgebra {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.one, &self.imp).cmp(&(other.n, other.one, &other.imp))
    }
}

/// Checks a raw table and returns every violated axiom instance.
///
/// Out-of-range entries, ragged rows and an empty table are reported as
/// [`Error::Malformed`]; axiom failures as [`Error::Axioms`] listing all of
/// them, not just the first.
pub fn validate_hilbert(table: &[Vec<usize>], one: usize) -> Result<HilbertAlgebra> {
    let n = table.len();
    if n == 0 {
        return Err(Error::Malformed("empty table".into()));
    }
    if n > MAX_ELEMENTS {
        return Err(Error::Malformed(format!("{n} elements exceeds the limit of {MAX_ELEMENTS}")));
    }
    if one >= n {
        return Err(Error::Malformed(format!("unit {one} out of range 0..{n}")));
    }
    let mut imp = Vec::with_capacity(n * n);
    for (x, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Malformed(format!("row {x} has {} entries, expected {n}", row.len())));
        }
        for (y, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(Error::Malformed(format!("entry ({x},{y}) = {v} out of range 0..{n}")));
            }
            imp.push(v as u8);
        }
    }
    let violations = violations(n, one, &imp);
    if violations.is_empty() {
        Ok(HilbertAlgebra::from_parts(n, one, imp))
    } else {
        Err(Error::Axioms(violations))
    }
}

/// All axiom violations of a flat `n*n` table with the given unit.
pub(crate) fn violations(n: usize, one: usize, imp: &[u8]) -> Vec<Violation> {
    let at = |x: usize, y: usize| imp[x * n + y] as usize;
    let leq = |x: usize, y: usize| at(x, y) == one;
    let mut out = Vec::new();
    let mut push = |axiom, witness: &[usize]| out.push(Violation { axiom, witness: witness.to_vec() });
    for x in 0..n {
        if !leq(x, x) {
            push(Axiom::Reflexivity, &[x]);
        }
    }
    for x in 0..n {
        for y in x + 1..n {
            if leq(x, y) && leq(y, x) {
                push(Axiom::Antisymmetry, &[x, y]);
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if !leq(x, y) {
                continue;
            }
            for z in 0..n {
                if leq(y, z) && !leq(x, z) {
                    push(Axiom::Transitivity, &[x, y, z]);
                }
            }
        }
    }
    for x in 0..n {
        if !leq(x, one) {
            push(Axiom::Top, &[x]);
        }
    }
    for x in 0..n {
        for y in 0..n {
            if !leq(x, at(y, x)) {
                push(Axiom::Weakening, &[x, y]);
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = at(x, at(y, z));
                let rhs = at(at(x, y), at(x, z));
                if !leq(lhs, rhs) {
                    push(Axiom::Exchange, &[x, y, z]);
                }
            }
        }
    }
    out
}

impl HilbertAlgebra {
    /// Validates `table` with unit `one`; see [`validate_hilbert`].
    pub fn new(table: &[Vec<usize>], one: usize) -> Result<Self> {
        validate_hilbert(table, one)
    }

    /// Builds an algebra from a flat table known to be valid.
    pub(crate) fn from_parts(n: usize, one: usize, imp: Vec<u8>) -> Self {
        let order = OrderRelation::from_leq(n, |x, y| imp[x * n + y] as usize == one);
        HilbertAlgebra { n, one, imp, order }
    }

    /// Validates a flat `n*n` table.
    pub fn from_flat(n: usize, one: usize, flat: &[usize]) -> Result<Self> {
        if flat.len() != n * n {
            return Err(Error::Malformed(format!("expected {} entries, got {}", n * n, flat.len())));
        }
        let rows: Vec<Vec<usize>> = flat.chunks(n.max(1)).map(|r| r.to_vec()).collect();
        validate_hilbert(&rows, one)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn imp(&self, x: usize, y: usize) -> usize {
        self.imp[x * self.n + y] as usize
    }

    pub(crate) fn flat(&self) -> &[u8] {
        &self.imp
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|x| (0..self.n).map(|y| self.imp(x, y)).collect()).collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn universe(&self) -> ElementSubset {
        ElementSubset::full(self.n)
    }

    pub fn natural_order(&self) -> &OrderRelation {
        &self.order
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.order.leq(x, y)
    }

    pub fn up(&self, x: usize) -> ElementSubset {
        self.order.up(x)
    }

    pub fn down(&self, x: usize) -> ElementSubset {
        self.order.down(x)
    }

    /// Greatest lower bound of `x` and `y` in the natural order, if it exists.
    pub fn partial_meet(&self, x: usize, y: usize) -> Option<usize> {
        self.order.max_of(self.down(x) & self.down(y))
    }

    /// Least upper bound of `x` and `y` in the natural order, if it exists.
    pub fn partial_join(&self, x: usize, y: usize) -> Option<usize> {
        self.order.min_of(self.up(x) & self.up(y))
    }

    /// A lower bound `c` of `x` and `y` with `x <= y -> c`, if one exists.
    /// Such a bound is necessarily the meet of `x` and `y`.
    pub fn compatible_meet(&self, x: usize, y: usize) -> Option<usize> {
        (self.down(x) & self.down(y)).iter().find(|&c| self.leq(x, self.imp(y, c)))
    }

    pub fn is_compatible(&self, x: usize, y: usize) -> bool {
        self.compatible_meet(x, y).is_some()
    }

    /// Contains the unit and is closed under implication.
    pub fn is_subalgebra(&self, s: ElementSubset) -> bool {
        s.contains(self.one) && s.iter().all(|x| s.iter().all(|y| s.contains(self.imp(x, y))))
    }

    /// Closed under all existing compatible meets.
    pub fn is_relative_subsemilattice(&self, s: ElementSubset) -> bool {
        s.iter().all(|x| {
            s.iter()
                .all(|y| self.compatible_meet(x, y).map_or(true, |m| s.contains(m)))
        })
    }

    /// `{x -> p : x in X}`. When `X` is a subalgebra this is a block.
    pub fn block_from(&self, x_set: ElementSubset, p: usize) -> ElementSubset {
        x_set.iter().map(|x| self.imp(x, p)).collect()
    }

    /// A subalgebra which, with the inherited operation, is a bounded
    /// implication algebra: `(x -> y) -> x = x` on `B` and `B` has a least
    /// element.
    pub fn is_block(&self, b: ElementSubset) -> bool {
        self.is_subalgebra(b)
            && self.order.min_of(b).is_some()
            && b.iter().all(|x| b.iter().all(|y| self.imp(self.imp(x, y), x) == x))
    }

    /// `(x -> y) -> x = x` for all `x, y`.
    pub fn is_implication_algebra(&self) -> bool {
        self.elements()
            .all(|x| self.elements().all(|y| self.imp(self.imp(x, y), x) == x))
    }

    /// Every pair has a compatible meet.
    pub fn is_implicative_semilattice(&self) -> bool {
        self.elements()
            .all(|x| self.elements().all(|y| self.is_compatible(x, y)))
    }

    pub fn classify(&self) -> Classification {
        Classification {
            hilbert: true,
            implication_algebra: self.is_implication_algebra(),
            implicative_semilattice: self.is_implicative_semilattice(),
        }
    }

    /// The algebra obtained by renaming element `x` to `perm[x]`.
    pub fn permuted(&self, perm: &[usize]) -> HilbertAlgebra {
        let n = self.n;
        let mut imp = vec![0u8; n * n];
        for x in 0..n {
            for y in 0..n {
                imp[perm[x] * n + perm[y]] = perm[self.imp(x, y)] as u8;
            }
        }
        HilbertAlgebra::from_parts(n, perm[self.one], imp)
    }
}
