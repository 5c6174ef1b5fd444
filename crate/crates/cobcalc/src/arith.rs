//! Integer and rational groundwork: binary digit sums, 2-adic valuations,
//! prime-power detection, admissible codimensions, and partitions.
//!
//! Everything here is exact; there is no floating point anywhere in this
//! crate.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Exact rational scalar used throughout the crate.
///
/// Values are always stored in lowest terms with a positive denominator;
/// the `num-rational` constructors maintain both invariants.
pub type Rat = num_rational::BigRational;

/// Convenience constructor for the rational `n/d`.
///
/// Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Number of ones in the binary expansion of `m`.
pub fn alpha(m: u64) -> u32 {
    m.count_ones()
}

/// 2-adic valuation of a nonzero integer: the largest `k` with `2^k | x`.
///
/// Panics if `x == 0` (the valuation would be infinite).
pub fn v2(x: &BigInt) -> u64 {
    assert!(!x.is_zero(), "v2(0) is infinite");
    x.trailing_zeros().expect("nonzero integer has trailing_zeros")
}

/// `v2` for machine integers.
pub fn v2_i64(x: i64) -> u64 {
    assert!(x != 0, "v2(0) is infinite");
    x.trailing_zeros() as u64
}

/// Binomial coefficient `C(n, k)` as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// Checks the valuation identity `v2(C(2c, c)) = alpha(c)`.
///
/// The identity is a consequence of the 2-adic valuation formula for
/// factorials, so this must return `true` for every `c >= 1`; the function
/// recomputes both sides from scratch rather than trusting that fact.
pub fn central_binom_valuation_check(c: u64) -> bool {
    assert!(c >= 1);
    v2(&binomial(2 * c, c)) == u64::from(alpha(c))
}

/// The coefficient `lambda_i`: `p` when `i = p^t - 1` for a prime `p` and
/// `t >= 1`, and `1` otherwise.
///
/// For a fixed `i` at most one prime can match (two would force
/// `p^t = q^s = i + 1`), so the rule is well defined.
pub fn hazewinkel_lambda(i: u64) -> u64 {
    assert!(i >= 1);
    let n = i + 1;
    let p = smallest_prime_factor(n);
    let mut m = n;
    while m % p == 0 {
        m /= p;
    }
    if m == 1 {
        p
    } else {
        1
    }
}

fn smallest_prime_factor(n: u64) -> u64 {
    debug_assert!(n >= 2);
    if n % 2 == 0 {
        return 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return d;
        }
        d += 2;
    }
    n
}

/// All `c` in `[0, limit]` with `alpha(c + alpha(c)) > alpha(c)`, ascending.
///
/// These are the codimensions for which the general divisibility theorem
/// applies; the list starts `2, 4, 5, 8, 9, 12, 16, 17, ...`.
pub fn admissible_c(limit: u64) -> Vec<u64> {
    (0..=limit)
        .filter(|&c| alpha(c + u64::from(alpha(c))) > alpha(c))
        .collect()
}

/// A partition: weakly decreasing tuple of positive integers.
///
/// Partitions index the monomial basis `c_λ = c_{λ1} c_{λ2} ···` of the
/// polynomial ring in the Chern classes. The canonical order used for
/// matrix columns and serialization everywhere in this crate is descending
/// lexicographic, which is exactly the order implemented by `Ord` here and
/// the order in which [`partitions`] enumerates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, checking that `parts` is weakly decreasing and
    /// positive.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing"
        );
        assert!(parts.iter().all(|&p| p >= 1), "partition parts must be positive");
        Partition { parts }
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-part partition `(k)`.
    pub fn single(k: u32) -> Self {
        assert!(k >= 1);
        Partition { parts: vec![k] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Multiset union with another partition, re-sorted decreasing.
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts: Vec<u32> =
            self.parts.iter().chain(other.parts.iter()).copied().collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }
}

impl Ord for Partition {
    // Descending lexicographic: (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)
    // as map keys, so ascending iteration yields the canonical column order.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        for (a, b) in self.parts.iter().zip(other.parts.iter()) {
            match b.cmp(a) {
                std::cmp::Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.parts.len().cmp(&other.parts.len())
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl std::fmt::Debug for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(self, f)
    }
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fill(n, n, &mut stack, &mut out);
    out
}

fn fill(remaining: u32, max_part: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: stack.clone() });
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        stack.push(part);
        fill(remaining - part, part, stack, out);
        stack.pop();
    }
}

/// 2-adic valuation of a nonzero rational: `v2(num) - v2(den)`.
pub fn v2_rat(x: &Rat) -> i64 {
    assert!(!x.is_zero(), "v2(0) is infinite");
    v2(x.numer()) as i64 - v2(x.denom()) as i64
}

/// True if the rational is an integer.
pub fn is_integer(x: &Rat) -> bool {
    x.denom().abs() == BigInt::from(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn alpha_small_values() {
        assert_eq!(alpha(0), 0);
        assert_eq!(alpha(3), 2);
        // c = 12 satisfies the admissibility condition: alpha(14) = 3 > 2.
        assert_eq!(alpha(12), 2);
        assert_eq!(alpha(12 + u64::from(alpha(12))), 3);
    }

    #[test]
    fn alpha_recursions() {
        for m in 0..2000u64 {
            assert_eq!(alpha(2 * m), alpha(m));
            assert_eq!(alpha(2 * m + 1), alpha(m) + 1);
        }
    }

    #[test]
    fn v2_small_values() {
        assert_eq!(v2(&BigInt::from(6)), 1);
        assert_eq!(v2(&BigInt::from(48)), 4);
        // v2(C(4,2)) = v2(6) = 1 = alpha(2)
        assert_eq!(v2(&binomial(4, 2)), u64::from(alpha(2)));
    }

    #[test]
    #[should_panic(expected = "v2(0)")]
    fn v2_rejects_zero() {
        v2(&BigInt::zero());
    }

    #[test]
    fn v2_is_additive() {
        let samples: [i64; 7] = [1, -2, 6, 48, -40, 7, 1024];
        for &x in &samples {
            for &y in &samples {
                assert_eq!(
                    v2(&BigInt::from(x * y)),
                    v2(&BigInt::from(x)) + v2(&BigInt::from(y))
                );
            }
        }
    }

    #[test]
    fn central_binomial_valuation_small() {
        assert!(central_binom_valuation_check(1)); // v2(2) = 1 = alpha(1)
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert!(central_binom_valuation_check(3)); // v2(20) = 2 = alpha(3)
        assert!(central_binom_valuation_check(64));
    }

    #[test]
    fn central_binomial_valuation_through_256() {
        for c in 1..=256 {
            assert!(central_binom_valuation_check(c), "failed at c = {c}");
        }
    }

    #[test]
    fn lambda_rule() {
        assert_eq!(hazewinkel_lambda(1), 2); // 1 = 2^1 - 1
        assert_eq!(hazewinkel_lambda(4), 5); // 4 = 5^1 - 1
        assert_eq!(hazewinkel_lambda(5), 1); // 6 is not a prime power
        assert_eq!(hazewinkel_lambda(3), 2); // 3 = 2^2 - 1
        assert_eq!(hazewinkel_lambda(8), 3); // 8 = 3^2 - 1
        assert_eq!(hazewinkel_lambda(7), 2); // 7 = 2^3 - 1
    }

    /// Independent check of the lambda rule: enumerate prime powers up to
    /// 10^4 + 1 and confirm every `i` is hit by at most one prime.
    #[test]
    fn lambda_matching_prime_is_unique() {
        const LIMIT: u64 = 10_000;
        let mut matches: std::collections::HashMap<u64, Vec<u64>> = Default::default();
        for p in 2..=LIMIT + 1 {
            if smallest_prime_factor(p) != p {
                continue; // not prime
            }
            let mut power = p;
            while power <= LIMIT + 1 {
                matches.entry(power - 1).or_default().push(p);
                match power.checked_mul(p) {
                    Some(next) => power = next,
                    None => break,
                }
            }
        }
        for i in 1..=LIMIT {
            let hits = matches.get(&i).map(Vec::as_slice).unwrap_or(&[]);
            assert!(hits.len() <= 1, "i = {i} matched by {hits:?}");
            let expected = hits.first().copied().unwrap_or(1);
            assert_eq!(hazewinkel_lambda(i), expected, "i = {i}");
        }
    }

    #[test]
    fn admissible_set_matches_known_values() {
        assert_eq!(admissible_c(17), vec![2, 4, 5, 8, 9, 12, 16, 17]);
        assert_eq!(admissible_c(1), Vec::<u64>::new());
        assert_eq!(admissible_c(3), vec![2]); // nothing to say when c = 3
    }

    #[test]
    fn partition_counts() {
        // p(0..=20)
        let expected = [
            1u32, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490,
            627,
        ];
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(partitions(n as u32).len() as u32, count, "p({n})");
        }
    }

    #[test]
    fn partition_order_is_descending_lex() {
        let parts: Vec<String> = partitions(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(parts, ["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
        // Enumeration order agrees with Ord.
        let listed = partitions(8);
        let mut sorted = listed.clone();
        sorted.sort();
        assert_eq!(listed, sorted);
        assert_eq!(partitions(0), vec![Partition::empty()]);
    }

    #[test]
    fn partition_invariants() {
        for p in partitions(9) {
            assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
            assert!(p.parts().iter().all(|&x| x >= 1));
            assert_eq!(p.weight(), 9);
        }
        let m = Partition::new(vec![3, 1]).merge(&Partition::new(vec![2, 1]));
        assert_eq!(m, Partition::new(vec![3, 2, 1, 1]));
    }

    #[test]
    fn rationals_are_normalized() {
        let x = rat(4, -6);
        assert_eq!(x, rat(-2, 3));
        assert!(x.denom() > &BigInt::zero());
        let y = rat(1, 3) + rat(2, 3);
        assert!(y.is_one());
        assert!(is_integer(&y));
        assert_eq!(v2_rat(&rat(12, 1)), 2);
        assert_eq!(v2_rat(&rat(5, 8)), -3);
    }
}
