//! Named families of finite residuated lattices.

use crate::algebra::FiniteAlgebra;

/// The one-element algebra, where `0 = 1`.
pub fn trivial() -> FiniteAlgebra {
    FiniteAlgebra::chain("1", 1, |_, _| 0).expect("one-element chain")
}

/// Two-element Boolean algebra.
pub fn boolean2() -> FiniteAlgebra {
    FiniteAlgebra::chain("B2", 2, |x, y| x.min(y)).expect("boolean chain")
}

/// Four-element Boolean algebra `2 × 2`; atoms are 1 and 2.
pub fn boolean4() -> FiniteAlgebra {
    boolean2().product(&boolean2()).with_name("B4")
}

/// Eight-element Boolean algebra `2 × 2 × 2`.
pub fn boolean8() -> FiniteAlgebra {
    boolean4().product(&boolean2()).with_name("B8")
}

/// Łukasiewicz chain with `n` elements `0, 1/(n-1), …, 1`, indexed by
/// numerator: `x ⊙ y = max(0, x + y − (n−1))`.
pub fn lukasiewicz(n: usize) -> FiniteAlgebra {
    assert!(n >= 1, "chain needs at least one element");
    let top = n - 1;
    FiniteAlgebra::chain(format!("L{n}"), n, move |x, y| (x + y).saturating_sub(top))
        .expect("lukasiewicz chain")
}

/// Gödel chain with `n` elements: `x ⊙ y = min(x, y)`.
pub fn godel(n: usize) -> FiniteAlgebra {
    assert!(n >= 1, "chain needs at least one element");
    FiniteAlgebra::chain(format!("G{n}"), n, |x, y| x.min(y)).expect("godel chain")
}

/// Nilpotent minimum chain: `x ⊙ y = min(x, y)` when `x + y` exceeds the
/// top index, else 0. Involutive but not divisible from four elements on.
pub fn nilpotent_minimum(n: usize) -> FiniteAlgebra {
    assert!(n >= 1, "chain needs at least one element");
    let top = n - 1;
    FiniteAlgebra::chain(
        format!("NM{n}"),
        n,
        move |x, y| {
            if x + y > top {
                x.min(y)
            } else {
                0
            }
        },
    )
    .expect("nilpotent minimum chain")
}
