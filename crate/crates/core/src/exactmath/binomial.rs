use std::cell::{Cell, RefCell};
use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

thread_local! {
    static CACHE: RefCell<HashMap<(i64, i64), BigInt>> = RefCell::new(HashMap::new());
    static CACHE_ENABLED: Cell<bool> = const { Cell::new(true) };
}

// Entries with a lower index beyond this are cheap to recompute relative to
// their size and would only bloat the table.
const CACHE_MAX_LOWER: i64 = 512;

/// Generalized binomial coefficient `s(s-1)...(s-a+1)/a!` for any integer
/// `s`, and `0` when `a < 0`.
///
/// Vanishes exactly when `a < 0` or `a > s >= 0`. Results are memoized per
/// thread; the cache never changes a result.
pub fn binom(s: i64, a: i64) -> BigInt {
    if a < 0 || (s >= 0 && a > s) {
        return BigInt::zero();
    }
    if a == 0 {
        return BigInt::one();
    }
    if a > CACHE_MAX_LOWER || !CACHE_ENABLED.with(Cell::get) {
        return binom_uncached(s, a);
    }
    if let Some(hit) = CACHE.with(|c| c.borrow().get(&(s, a)).cloned()) {
        return hit;
    }
    let value = binom_uncached(s, a);
    CACHE.with(|c| c.borrow_mut().insert((s, a), value.clone()));
    value
}

/// [`binom`] without touching the memo table.
pub fn binom_uncached(s: i64, a: i64) -> BigInt {
    if a < 0 || (s >= 0 && a > s) {
        return BigInt::zero();
    }
    // binom(s, a) = binom(s, s - a) holds for s >= 0; take the shorter product.
    let a = if s >= 0 { a.min(s - a) } else { a };
    let mut acc = BigInt::one();
    for i in 0..a {
        // acc = binom(s, i), so acc * (s - i) is divisible by i + 1.
        acc *= s - i;
        acc /= i + 1;
    }
    acc
}

/// Toggle memoization on the calling thread.
pub fn set_binom_cache_enabled(enabled: bool) {
    CACHE_ENABLED.with(|c| c.set(enabled));
}

/// Drop every memoized binomial on the calling thread.
pub fn clear_binom_cache() {
    CACHE.with(|c| c.borrow_mut().clear());
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // Direct falling-factorial product over the rationals, kept apart from
    // the stepwise exact division used above.
    fn falling_over_factorial(s: i64, a: i64) -> BigInt {
        if a < 0 {
            return BigInt::zero();
        }
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for i in 0..a {
            num *= s - i;
            den *= i + 1;
        }
        assert!((&num % &den).is_zero());
        num / den
    }

    #[test]
    fn small_values() {
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(3, -2), BigInt::zero());
        assert_eq!(binom(-1, 2), BigInt::from(1));
        assert_eq!(binom(0, 0), BigInt::one());
        assert_eq!(binom(-3, 0), BigInt::one());
        assert_eq!(binom(4, 5), BigInt::zero());
        assert_eq!(binom(-2, 3), BigInt::from(-4));
    }

    #[test]
    fn negative_upper_via_reflection() {
        // binom(-1, 2) = (-1)^2 binom(2 - (-1) - 1, 2) = binom(2, 2)
        assert_eq!(binom(-1, 2), binom(2, 2));
    }

    #[test]
    fn large_arguments_are_exact() {
        let b = binom(100, 50);
        assert_eq!(b.to_string(), "100891344545564193334812497256");
    }

    #[test]
    fn cache_is_invisible() {
        clear_binom_cache();
        set_binom_cache_enabled(false);
        let cold: Vec<BigInt> = (-15..15).flat_map(|s| (-3..12).map(move |a| binom(s, a))).collect();
        set_binom_cache_enabled(true);
        let warm: Vec<BigInt> = (-15..15).flat_map(|s| (-3..12).map(move |a| binom(s, a))).collect();
        let again: Vec<BigInt> = (-15..15).flat_map(|s| (-3..12).map(move |a| binom(s, a))).collect();
        assert_eq!(cold, warm);
        assert_eq!(warm, again);
    }

    proptest! {
        #[test]
        fn matches_defining_product(s in -40i64..40, a in -5i64..30) {
            prop_assert_eq!(binom(s, a), falling_over_factorial(s, a));
        }

        #[test]
        fn zero_locus(s in -30i64..30, a in -30i64..30) {
            let vanishes = a < 0 || (a > s && s >= 0);
            prop_assert_eq!(binom(s, a).is_zero(), vanishes);
        }

        #[test]
        fn pascal(s in -25i64..25, a in -25i64..25) {
            prop_assert_eq!(binom(s, a - 1) + binom(s, a), binom(s + 1, a));
        }
    }
}
