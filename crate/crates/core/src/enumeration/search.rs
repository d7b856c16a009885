//! Backtracking search for all implication tables on `n` elements with the
//! unit fixed at `n - 1`.
//!
//! The natural order is chosen first (any partial order on the other
//! elements, with the unit on top). Cells `x -> y` with `x <= y` are then
//! forced to the unit and the rest range over `{v != 1 : y <= v}`. The rows
//! of the unit are set to `1 -> x = x`; that identity holds in every Hilbert
//! algebra, and the final validation re-derives it with everything else.
//!
//! After each cell, every fully determined instance of weakening,
//! self-distributivity and commutation is checked. These identities hold in
//! all Hilbert algebras, so pruning on them loses nothing.

use rayon::prelude::*;

use crate::algebra::{violations, HilbertAlgebra};

const UNSET: u8 = u8::MAX;

/// All partial orders on `0..m`, as row-major `leq` matrices.
pub(crate) fn labelled_posets(m: usize) -> Vec<Vec<bool>> {
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let mut leq = vec![false; m * m];
    for i in 0..m {
        leq[i * m + i] = true;
    }
    fn rec(k: usize, m: usize, pairs: &[(usize, usize)], leq: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if k == pairs.len() {
            let transitive = (0..m).all(|a| {
                (0..m).all(|b| !leq[a * m + b] || (0..m).all(|c| !leq[b * m + c] || leq[a * m + c]))
            });
            if transitive {
                out.push(leq.clone());
            }
            return;
        }
        let (i, j) = pairs[k];
        for choice in 0..3 {
            leq[i * m + j] = choice == 1;
            leq[j * m + i] = choice == 2;
            // reject early if the pair closes a violated triple with
            // already decided pairs
            let ok = (0..m).all(|c| {
                let decided = |a: usize, b: usize| {
                    let (x, y) = if a < b { (a, b) } else { (b, a) };
                    a == b || pairs[..=k].contains(&(x, y))
                };
                [(i, j), (j, i)].iter().all(|&(a, b)| {
                    if !leq[a * m + b] || c == a || c == b {
                        return true;
                    }
                    let fwd = !(decided(b, c) && decided(a, c)) || !leq[b * m + c] || leq[a * m + c];
                    let back = !(decided(c, a) && decided(c, b)) || !leq[c * m + a] || leq[c * m + b];
                    fwd && back
                })
            });
            if ok {
                rec(k + 1, m, pairs, leq, out);
            }
        }
        leq[i * m + j] = false;
        leq[j * m + i] = false;
    }
    rec(0, m, &pairs, &mut leq, &mut out);
    out
}

struct Filler<'a> {
    n: usize,
    one: u8,
    imp: Vec<u8>,
    cells: Vec<(usize, usize)>,
    domains: Vec<Vec<u8>>,
    found: &'a mut Vec<Vec<u8>>,
}

impl Filler<'_> {
    fn get(&self, x: u8, y: u8) -> u8 {
        self.imp[x as usize * self.n + y as usize]
    }

    /// No fully determined instance of the pruning identities fails.
    fn consistent(&self) -> bool {
        let n = self.n as u8;
        for x in 0..n {
            for y in 0..n {
                let xy = self.get(x, y);
                let yx = self.get(y, x);
                if yx != UNSET {
                    let w = self.get(x, yx);
                    if w != UNSET && w != self.one {
                        return false;
                    }
                }
                for z in 0..n {
                    let yz = self.get(y, z);
                    if yz == UNSET {
                        continue;
                    }
                    let lhs = self.get(x, yz);
                    if lhs == UNSET {
                        continue;
                    }
                    let xz = self.get(x, z);
                    if xz != UNSET {
                        if xy != UNSET {
                            let rhs = self.get(xy, xz);
                            if rhs != UNSET && rhs != lhs {
                                return false;
                            }
                        }
                        let rhs = self.get(y, xz);
                        if rhs != UNSET && rhs != lhs {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn fill(&mut self, k: usize) {
        if k == self.cells.len() {
            if violations(self.n, self.one as usize, &self.imp).is_empty() {
                self.found.push(self.imp.clone());
            }
            return;
        }
        let (x, y) = self.cells[k];
        for i in 0..self.domains[k].len() {
            let v = self.domains[k][i];
            self.imp[x * self.n + y] = v;
            if self.consistent() {
                self.fill(k + 1);
            }
        }
        self.imp[x * self.n + y] = UNSET;
    }
}

/// All valid tables whose natural order on `0..n-1` is `leq` (on the first
/// `n - 1` elements, the unit `n - 1` on top).
pub(crate) fn tables_over(n: usize, leq: &[bool]) -> Vec<Vec<u8>> {
    let m = n - 1;
    let one = m as u8;
    let mut imp = vec![UNSET; n * n];
    for x in 0..n {
        imp[x * n + m] = one;
        imp[m * n + x] = x as u8;
    }
    let mut rank: Vec<usize> = (0..m).collect();
    rank.sort_by_key(|&x| ((0..m).filter(|&y| leq[y * m + x]).count(), x));
    let mut cells = Vec::new();
    let mut domains = Vec::new();
    for &x in &rank {
        for &y in &rank {
            if leq[x * m + y] {
                imp[x * n + y] = one;
            } else {
                cells.push((x, y));
                domains.push((0..m).filter(|&v| leq[y * m + v]).map(|v| v as u8).collect());
            }
        }
    }
    let mut found = Vec::new();
    let mut f = Filler { n, one, imp, cells, domains, found: &mut found };
    if f.consistent() {
        f.fill(0);
    }
    found
}

/// Every valid table on `n` elements with unit `n - 1`, without
/// deduplication, in a deterministic order.
pub fn enumerate_raw(n: usize) -> Vec<HilbertAlgebra> {
    assert!(n >= 1, "algebras are nonempty");
    let posets = labelled_posets(n - 1);
    posets
        .par_iter()
        .flat_map_iter(|leq| tables_over(n, leq))
        .map(|imp| HilbertAlgebra::from_parts(n, n - 1, imp))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labelled_poset_counts() {
        let counts: Vec<usize> = (0..5).map(|m| labelled_posets(m).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 19, 219]);
    }

    #[test]
    fn small_raw_counts() {
        assert_eq!(enumerate_raw(1).len(), 1);
        assert_eq!(enumerate_raw(2).len(), 1);
        // Goedel chain in two labellings, plus the fork
        assert_eq!(enumerate_raw(3).len(), 3);
    }
}
