//! Small named algebras used throughout the tests and docs.

use crate::algebra::HilbertAlgebra;

pub fn singleton() -> HilbertAlgebra {
    HilbertAlgebra::from_parts(1, 0, vec![0])
}

/// The two-element chain `0 < 1`.
pub fn two_chain() -> HilbertAlgebra {
    goedel_chain(2)
}

/// The Goedel chain `0 < 1 < .. < n-1` with `x -> y = 1` if `x <= y` and `y`
/// otherwise. The unit is `n - 1`.
pub fn goedel_chain(n: usize) -> HilbertAlgebra {
    assert!(n >= 1);
    let one = n - 1;
    let imp = (0..n)
        .flat_map(|x| (0..n).map(move |y| if x <= y { one } else { y } as u8))
        .collect();
    HilbertAlgebra::from_parts(n, one, imp)
}

/// The three-element implication algebra: atoms `a = 0` and `b = 1` under
/// the unit `2`, with `a -> b = b` and `b -> a = a`.
pub fn implication_fork() -> HilbertAlgebra {
    HilbertAlgebra::from_parts(3, 2, vec![2, 1, 2, 0, 2, 2, 0, 1, 2])
}

/// The Boolean algebra of subsets of a `k`-element set with
/// `x -> y = not x or y`. Element indices are the bitmasks themselves.
pub fn boolean(k: u32) -> HilbertAlgebra {
    assert!(k <= 6);
    let n = 1usize << k;
    let mask = n - 1;
    let imp = (0..n)
        .flat_map(|x| (0..n).map(move |y| ((!x | y) & mask) as u8))
        .collect();
    HilbertAlgebra::from_parts(n, mask, imp)
}
