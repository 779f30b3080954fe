//! Exact binomial coefficients with overflow checking.

/// C(n, r) as a checked u64. Returns `None` on overflow, `Some(0)` for r > n.
pub fn try_binomial(n: u64, r: u64) -> Option<u64> {
    if r > n {
        return Some(0);
    }
    let r = r.min(n - r);
    let mut acc: u64 = 1;
    for i in 1..=r {
        // acc * (n - r + i) is always divisible by i at this point.
        acc = acc.checked_mul(n - r + i)? / i;
    }
    Some(acc)
}

/// C(n, r) over signed arguments: 0 when r < 0 or r > n or n < 0.
///
/// Panics on overflow; all bound formulas in this crate stay far below
/// u64 at the supported parameter ranges.
pub fn binom(n: i64, r: i64) -> u64 {
    if n < 0 || r < 0 || r > n {
        return 0;
    }
    try_binomial(n as u64, r as u64).expect("binomial overflow")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binom(0, 0), 1);
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(8, 3), 56);
        assert_eq!(binom(5, 6), 0);
        assert_eq!(binom(5, -1), 0);
        assert_eq!(binom(-2, 0), 0);
    }

    #[test]
    fn pascal_identity() {
        for n in 1..30i64 {
            for r in 1..=n {
                assert_eq!(binom(n, r), binom(n - 1, r - 1) + binom(n - 1, r));
            }
        }
    }

    #[test]
    fn overflow_is_detected() {
        assert_eq!(try_binomial(200, 100), None);
        assert_eq!(try_binomial(64, 2), Some(2016));
    }
}
