//! The characteristic-p classification of R-linear splittings for the four
//! classical inclusions, as a pure table-driven predicate, plus the
//! denominator-prime measurement that explains why no single splitting
//! survives reduction mod p.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::numutil::is_prime;
use crate::polyring::Polynomial;
use crate::reynolds::{self, ReynoldsError, ReynoldsRequest};

/// Which inclusion `R c S` is being classified.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SplitCase {
    /// `k[XY] c k[X_{m x t}, Y_{t x n}]`
    GlXy,
    /// `k[size-t minors] c k[Y_{t x n}]`, `t <= n`
    SlMinors,
    /// `k[Y^tr Y] c k[Y_{t x n}]`
    OGram,
    /// `k[Y^tr Omega Y] c k[Y_{2t x n}]`
    SpPfaff,
}

impl fmt::Display for SplitCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            SplitCase::GlXy => "gl-xy",
            SplitCase::SlMinors => "sl-minors",
            SplitCase::OGram => "o-gram",
            SplitCase::SpPfaff => "sp-pfaff",
        };
        write!(f, "{name}")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SplitQuery {
    pub case: SplitCase,
    /// The characteristic; must be prime.
    pub p: u64,
    pub m: u64,
    pub n: u64,
    pub t: u64,
}

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum SplitError {
    #[error("invalid query: {0}")]
    InvalidQuery(String),
}

/// The verdict with the clause that decided it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SplitVerdict {
    pub splits: bool,
    pub clause: String,
}

/// Decides whether the inclusion splits R-linearly in characteristic `p`.
pub fn splits_r_linearly(q: &SplitQuery) -> Result<SplitVerdict, SplitError> {
    if !is_prime(q.p) {
        return Err(SplitError::InvalidQuery(format!("{} is not prime", q.p)));
    }
    if q.t < 1 || q.n < 1 {
        return Err(SplitError::InvalidQuery("t and n must be positive".into()));
    }
    let verdict = |splits: bool, clause: &str| SplitVerdict {
        splits,
        clause: clause.to_string(),
    };
    match q.case {
        SplitCase::GlXy => {
            if q.m < 1 {
                return Err(SplitError::InvalidQuery("m must be positive".into()));
            }
            if q.t == 1 {
                Ok(verdict(true, "t = 1"))
            } else if q.m.min(q.n) <= q.t {
                Ok(verdict(true, "min{m, n} <= t"))
            } else {
                Ok(verdict(false, "t > 1 and min{m, n} > t"))
            }
        }
        SplitCase::SlMinors => {
            if q.t > q.n {
                return Err(SplitError::InvalidQuery(format!(
                    "minors need t <= n, got t={}, n={}",
                    q.t, q.n
                )));
            }
            if q.t == 1 {
                Ok(verdict(true, "t = 1"))
            } else if q.t == q.n {
                Ok(verdict(true, "t = n"))
            } else {
                Ok(verdict(false, "1 < t < n"))
            }
        }
        SplitCase::OGram => {
            if q.t == 1 {
                Ok(verdict(true, "t = 1"))
            } else if q.t == 2 && q.p % 2 == 1 {
                Ok(verdict(true, "t = 2 and p odd"))
            } else if q.p == 2 && 2 * q.n <= q.t + 1 {
                Ok(verdict(true, "p = 2 and n <= (t + 1)/2"))
            } else if q.p % 2 == 1 && 2 * q.n <= q.t + 2 {
                Ok(verdict(true, "p odd and n <= (t + 2)/2"))
            } else {
                Ok(verdict(false, "no clause applies"))
            }
        }
        SplitCase::SpPfaff => {
            if q.n <= q.t + 1 {
                Ok(verdict(true, "n <= t + 1"))
            } else {
                Ok(verdict(false, "n > t + 1"))
            }
        }
    }
}

/// Primes dividing any coefficient denominator of the Reynolds image of
/// `f`; the witness for the every-prime-shows-up phenomenon.
pub fn denominator_primes(
    f: &Polynomial,
    req: &ReynoldsRequest,
) -> Result<BTreeSet<u64>, ReynoldsError> {
    let image = reynolds::apply(req, f)?;
    Ok(reynolds::denominator_primes_of(&image))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::{ActionSpec, Group};
    use crate::invariants::delta;
    use crate::polyring::parse_polynomial;
    use crate::reynolds::Strategy;

    fn q(case: SplitCase, p: u64, t: u64, m: u64, n: u64) -> SplitQuery {
        SplitQuery { case, p, m, n, t }
    }

    #[test]
    fn printed_examples() {
        let v = splits_r_linearly(&q(SplitCase::SlMinors, 5, 2, 1, 3)).unwrap();
        assert!(!v.splits);
        let v = splits_r_linearly(&q(SplitCase::GlXy, 7, 1, 4, 9)).unwrap();
        assert!(v.splits);
        assert_eq!(v.clause, "t = 1");
        let v = splits_r_linearly(&q(SplitCase::OGram, 3, 2, 1, 10)).unwrap();
        assert!(v.splits);
        assert_eq!(v.clause, "t = 2 and p odd");
    }

    #[test]
    fn sp_threshold() {
        assert!(
            splits_r_linearly(&q(SplitCase::SpPfaff, 2, 3, 1, 4))
                .unwrap()
                .splits
        );
        assert!(
            !splits_r_linearly(&q(SplitCase::SpPfaff, 2, 3, 1, 5))
                .unwrap()
                .splits
        );
    }

    #[test]
    fn odd_half_bounds_avoid_integer_division() {
        // (t + 1)/2 at t = 4 is 5/2: n = 2 passes for p = 2, n = 3 fails.
        assert!(
            splits_r_linearly(&q(SplitCase::OGram, 2, 4, 1, 2))
                .unwrap()
                .splits
        );
        assert!(
            !splits_r_linearly(&q(SplitCase::OGram, 2, 4, 1, 3))
                .unwrap()
                .splits
        );
        // n = 3 <= (4 + 2)/2 = 3 still passes for odd p.
        assert!(
            splits_r_linearly(&q(SplitCase::OGram, 3, 4, 1, 3))
                .unwrap()
                .splits
        );
    }

    #[test]
    fn invalid_queries() {
        assert!(splits_r_linearly(&q(SplitCase::GlXy, 6, 2, 2, 2)).is_err());
        assert!(splits_r_linearly(&q(SplitCase::SlMinors, 5, 3, 1, 2)).is_err());
    }

    #[test]
    fn denominator_primes_of_power_family() {
        let req = ReynoldsRequest {
            spec: ActionSpec::standard(Group::Sl, 2, 2).unwrap(),
            strategy: Strategy::General,
        };
        let f = parse_polynomial("a1*b2").unwrap();
        let primes = denominator_primes(&f, &req).unwrap();
        assert_eq!(primes.into_iter().collect::<Vec<_>>(), vec![2]);

        let f4 = parse_polynomial("a1^4*b2^4").unwrap();
        let primes = denominator_primes(&f4, &req).unwrap();
        assert_eq!(primes.into_iter().collect::<Vec<_>>(), vec![5]);

        // Already invariant: the projection fixes it, no denominators.
        let primes = denominator_primes(&delta(1, 2), &req).unwrap();
        assert!(primes.is_empty());
    }
}
