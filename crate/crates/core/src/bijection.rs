//! Backtracking search for structure-preserving bijections between two
//! finite carriers of equal size.

pub(crate) const UNSET: usize = usize::MAX;

/// Searches for a bijection `f` from `0..n` onto `0..n`.
///
/// Elements are mapped in the order given by `order`. `candidates(a)` lists
/// the targets allowed for `a` (typically those with the same invariants), and
/// `consistent(f, a, b)` decides whether `a |-> b` is compatible with the
/// partial assignment `f` (unassigned entries hold [`UNSET`]); it is called
/// before `f[a]` is written. Every complete bijection found is passed to
/// `visit`, which returns `true` to stop.
pub(crate) fn search<C, K, V>(n: usize, order: &[usize], candidates: C, consistent: K, mut visit: V)
where
    C: Fn(usize) -> Vec<usize>,
    K: Fn(&[usize], usize, usize) -> bool,
    V: FnMut(&[usize]) -> bool,
{
    debug_assert_eq!(order.len(), n);
    let mut f = vec![UNSET; n];
    let mut used = vec![false; n];
    let cands: Vec<Vec<usize>> = order.iter().map(|&a| candidates(a)).collect();
    step(0, order, &cands, &consistent, &mut visit, &mut f, &mut used);
}

fn step<K, V>(
    depth: usize,
    order: &[usize],
    cands: &[Vec<usize>],
    consistent: &K,
    visit: &mut V,
    f: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool
where
    K: Fn(&[usize], usize, usize) -> bool,
    V: FnMut(&[usize]) -> bool,
{
    if depth == order.len() {
        return visit(f);
    }
    let a = order[depth];
    for &b in &cands[depth] {
        if used[b] || !consistent(f, a, b) {
            continue;
        }
        f[a] = b;
        used[b] = true;
        let stop = step(depth + 1, order, cands, consistent, visit, f, used);
        used[b] = false;
        f[a] = UNSET;
        if stop {
            return true;
        }
    }
    false
}

/// First bijection found, if any.
pub(crate) fn find<C, K>(n: usize, order: &[usize], candidates: C, consistent: K) -> Option<Vec<usize>>
where
    C: Fn(usize) -> Vec<usize>,
    K: Fn(&[usize], usize, usize) -> bool,
{
    let mut found = None;
    search(n, order, candidates, consistent, |f| {
        found = Some(f.to_vec());
        true
    });
    found
}
