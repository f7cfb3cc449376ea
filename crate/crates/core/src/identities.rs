//! Executable checks for the factorial and integration identities the
//! closed forms rest on. These run before the main engine is trusted.

use num_traits::{One, Zero};

use crate::haar::su2_monomial_integral;
use crate::numutil::{binomial, factorial, multinomial, Rat};
use crate::polyring::{Polynomial, Variable};

/// The beta value `a! b! / (a + b + 1)!`.
pub fn beta_value(a: u64, b: u64) -> Rat {
    Rat::new(factorial(a) * factorial(b), factorial(a + b + 1))
}

/// Checks `(x + y)^n / (n + 1)` against its multinomial resummation
/// `sum_{2i+j+k=n} C(n; i,i,j,k) (i+j)!(i+k)!/(n+1)! x^{i+j} y^{i+k}`
/// as exact two-variable polynomials.
pub fn check_b2(n: u64) -> bool {
    let x = Polynomial::var(Variable::a(1));
    let y = Polynomial::var(Variable::b(1));
    let lhs = (&x + &y)
        .pow(n as u32)
        .scale(&Rat::new(1.into(), (n + 1).into()));

    let mut rhs = Polynomial::zero();
    for i in 0..=(n / 2) {
        for j in 0..=(n - 2 * i) {
            let k = n - 2 * i - j;
            let coeff = Rat::new(
                multinomial(&[i, i, j, k]) * factorial(i + j) * factorial(i + k),
                factorial(n + 1),
            );
            let term = &x.pow((i + j) as u32) * &y.pow((i + k) as u32);
            rhs += term.scale(&coeff);
        }
    }
    lhs == rhs
}

/// Checks the alternating sum `sum_k C(n,k) (-1)^k / (m+k+1)` against the
/// beta value, exactly.
pub fn check_b3(m: u64, n: u64) -> bool {
    let mut sum = Rat::zero();
    for k in 0..=n {
        let term = Rat::new(binomial(n, k), (m + k + 1).into());
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum == beta_value(m, n)
}

/// The trigonometric integral of the closed-form proof reduces, through the
/// substitution chain, to the alternating binomial sum; this confirms the
/// algebraic endpoint `sum_k C(a,k) (-1)^k / (b+k+1) = a! b! / (a+b+1)!`.
/// The calculus steps themselves are not machine-checked.
pub fn check_b4_reduction(a: u64, b: u64) -> bool {
    let mut sum = Rat::zero();
    for k in 0..=a {
        let term = Rat::new(binomial(a, k), (b + k + 1).into());
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum == beta_value(a, b)
}

/// Structural checks on the SU(2) monomial integral for all exponents up
/// to `bound`: reversal symmetry, indifference to swapping the
/// anti-diagonal exponents, and the unitarity row sums
/// `int (u11 u22 - u12 u21) = 1` expressing `det U = 1`.
pub fn check_b5_consistency(bound: u64) -> bool {
    for a in 0..=bound {
        for b in 0..=bound {
            for c in 0..=bound {
                for d in 0..=bound {
                    let v = su2_monomial_integral(a, b, c, d);
                    if v != su2_monomial_integral(d, c, b, a) {
                        return false;
                    }
                    if v != su2_monomial_integral(a, c, b, d) {
                        return false;
                    }
                }
            }
        }
    }
    // Both unitarity row sums reduce on SU(2), via the adjugate, to the
    // same integrand u11 u22 - u12 u21 = det U = 1.
    let row_sum = su2_monomial_integral(1, 0, 0, 1) - su2_monomial_integral(0, 1, 1, 0);
    row_sum.is_one()
}
