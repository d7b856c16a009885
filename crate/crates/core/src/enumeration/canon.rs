//! Canonical forms and isomorphisms of Hilbert algebras.
//!
//! The canonical form is the lexicographically least relabelled table among
//! the relabellings that sort elements by an isomorphism-invariant colour.
//! Every isomorphism preserves colours, so two algebras are isomorphic iff
//! their canonical forms agree.

use crate::algebra::HilbertAlgebra;
use crate::bijection::{self, UNSET};

/// Colour classes from iterated refinement, numbered canonically. The unit
/// always gets the largest colour.
fn colours(alg: &HilbertAlgebra) -> Vec<usize> {
    let n = alg.len();
    let initial: Vec<(usize, usize)> = alg
        .elements()
        .map(|x| (alg.down(x).len(), alg.up(x).len()))
        .collect();
    let mut colour = rank(&initial);
    loop {
        let keys: Vec<(usize, Vec<(usize, usize, usize)>)> = (0..n)
            .map(|x| {
                let mut around: Vec<_> = (0..n)
                    .map(|y| (colour[y], colour[alg.imp(x, y)], colour[alg.imp(y, x)]))
                    .collect();
                around.sort_unstable();
                (colour[x], around)
            })
            .collect();
        let next = rank(&keys);
        let classes = |c: &[usize]| c.iter().max().map_or(0, |m| m + 1);
        if classes(&next) == classes(&colour) {
            return next;
        }
        colour = next;
    }
}

fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut distinct = keys.to_vec();
    distinct.sort();
    distinct.dedup();
    keys.iter()
        .map(|k| distinct.binary_search(k).expect("key is present"))
        .collect()
}

/// The canonical representative together with how it was reached.
#[derive(Clone, Debug)]
pub struct Canonical {
    /// The canonical table; its unit is the last element.
    pub form: HilbertAlgebra,
    /// `labelling[x]` is the canonical name of element `x`.
    pub labelling: Vec<usize>,
    /// Number of relabellings that reach the form, which is the size of the
    /// automorphism group.
    pub automorphisms: usize,
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

pub fn canonical(alg: &HilbertAlgebra) -> Canonical {
    let n = alg.len();
    let colour = colours(alg);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (colour[x], x));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &x in &order {
        match classes.last_mut() {
            Some(c) if colour[c[0]] == colour[x] => c.push(x),
            _ => classes.push(vec![x]),
        }
    }
    let per_class: Vec<Vec<Vec<usize>>> = classes.iter().map(|c| permutations(c)).collect();

    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    let mut ties = 0;
    let mut choice = vec![0usize; classes.len()];
    let mut labelling = vec![0usize; n];
    let mut table = vec![0u8; n * n];
    loop {
        let mut pos = 0;
        for (k, perm) in choice.iter().zip(&per_class) {
            for &x in &perm[*k] {
                labelling[x] = pos;
                pos += 1;
            }
        }
        for x in 0..n {
            for y in 0..n {
                table[labelling[x] * n + labelling[y]] = labelling[alg.imp(x, y)] as u8;
            }
        }
        match &best {
            Some((t, _)) if table > *t => {}
            Some((t, _)) if table == *t => ties += 1,
            _ => {
                best = Some((table.clone(), labelling.clone()));
                ties = 1;
            }
        }
        // advance the mixed-radix counter
        let mut i = 0;
        loop {
            if i == choice.len() {
                let (t, l) = best.expect("at least one relabelling");
                let one = l[alg.one()];
                debug_assert_eq!(one, n - 1);
                return Canonical {
                    form: HilbertAlgebra::from_parts(n, one, t),
                    labelling: l,
                    automorphisms: ties,
                };
            }
            choice[i] += 1;
            if choice[i] < per_class[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Idempotent and constant on isomorphism classes.
pub fn canonical_form(alg: &HilbertAlgebra) -> HilbertAlgebra {
    canonical(alg).form
}

pub fn automorphism_count(alg: &HilbertAlgebra) -> usize {
    canonical(alg).automorphisms
}

/// An isomorphism `f` with `f(x -> y) = f(x) -> f(y)`, as the image of each
/// element of `a`. Found by backtracking, so it does not depend on the size
/// of the colour classes.
pub fn are_isomorphic(a: &HilbertAlgebra, b: &HilbertAlgebra) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    let n = a.len();
    let inv = |alg: &HilbertAlgebra| -> Vec<(usize, usize, usize)> {
        alg.elements()
            .map(|x| {
                let fixed = alg.elements().filter(|&y| alg.imp(x, y) == y).count();
                (alg.down(x).len(), alg.up(x).len(), fixed)
            })
            .collect()
    };
    let (ia, ib) = (inv(a), inv(b));
    let mut sa = ia.clone();
    let mut sb = ib.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (std::cmp::Reverse(a.down(x).len()), x));
    let f = bijection::find(
        n,
        &order,
        |x| (0..n).filter(|&y| ib[y] == ia[x]).collect(),
        |f, x, y| {
            let g = |z: usize| if z == x { y } else { f[z] };
            (0..n).filter(|&u| g(u) != UNSET).all(|u| {
                let pairs = [(x, u), (u, x)];
                pairs.iter().all(|&(p, q)| {
                    let r = g(a.imp(p, q));
                    r == UNSET || b.imp(g(p), g(q)) == r
                }) && (0..n).filter(|&v| g(v) != UNSET && a.imp(u, v) == x).all(|v| b.imp(g(u), g(v)) == y)
            })
        },
    )?;
    debug_assert!(a.elements().all(|x| a.elements().all(|y| f[a.imp(x, y)] == b.imp(f[x], f[y]))));
    Some(f)
}
