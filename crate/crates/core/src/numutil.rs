//! Exact integer helpers: factorials, binomial coefficients, small primes.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as an exact rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `p/q`, or the bare integer when the denominator is one.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

static FACTORIALS: Mutex<Vec<BigInt>> = Mutex::new(Vec::new());

/// `n!` as an exact integer, memoized.
pub fn factorial(n: u64) -> BigInt {
    let mut table = FACTORIALS.lock().unwrap();
    if table.is_empty() {
        table.push(BigInt::one());
    }
    while (table.len() as u64) <= n {
        let next = table.last().unwrap() * BigInt::from(table.len());
        table.push(next);
    }
    table[n as usize].clone()
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Multinomial coefficient `n! / (k_1! k_2! ... k_r!)` with `n = sum k_i`.
pub fn multinomial(parts: &[u64]) -> BigInt {
    let n: u64 = parts.iter().sum();
    let mut denom = BigInt::one();
    for &k in parts {
        denom *= factorial(k);
    }
    factorial(n) / denom
}

/// Deterministic primality by trial division; intended for small moduli.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut p = 3u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return false;
        }
        p += 2;
    }
    true
}

/// The set of primes dividing `n` (taken over |n|), by trial division.
///
/// The integers factored here are denominators of Reynolds coefficients,
/// which divide small factorials, so the loop terminates quickly.
pub fn prime_factors(n: &BigInt) -> std::collections::BTreeSet<u64> {
    let mut out = std::collections::BTreeSet::new();
    let mut m = n.abs();
    if m <= BigInt::one() {
        return out;
    }
    let mut p = BigInt::from(2u64);
    while &p * &p <= m {
        if (&m % &p).is_zero() {
            out.insert(u64::try_from(&p).expect("prime factor exceeds u64"));
            while (&m % &p).is_zero() {
                m /= &p;
            }
        }
        p += 1;
    }
    if m > BigInt::one() {
        out.insert(u64::try_from(&m).expect("prime factor exceeds u64"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(19), "121645100408832000".parse().unwrap());
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(4, 7), BigInt::from(0));
        assert_eq!(multinomial(&[1, 1, 1, 1]), BigInt::from(24));
        assert_eq!(multinomial(&[2, 1, 1]), BigInt::from(12));
    }

    #[test]
    fn small_primes() {
        let primes: Vec<u64> = (0..20).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }

    #[test]
    fn factorization() {
        let set = prime_factors(&BigInt::from(5040));
        assert_eq!(set.into_iter().collect::<Vec<_>>(), vec![2, 3, 5, 7]);
        assert!(prime_factors(&BigInt::from(1)).is_empty());
        assert_eq!(
            prime_factors(&BigInt::from(-12))
                .into_iter()
                .collect::<Vec<_>>(),
            vec![2, 3]
        );
    }
}
