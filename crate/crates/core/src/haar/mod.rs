//! Exact monomial Haar integrals: a closed form over SU(2) and a
//! Weingarten engine over U(t).

mod perm;
mod weingarten;

pub use perm::{CycleType, Permutation};
pub use weingarten::{unitary_weingarten, WeingartenTable};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::numutil::{factorial, Rat};
use crate::polyring::{Monomial, Polynomial, VarKind, Variable};

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum HaarError {
    #[error("Gram matrix not invertible: degree {degree} exceeds dimension {dim}")]
    SingularGram { degree: usize, dim: u64 },
    #[error("variable {0} does not belong in this integrand")]
    ForeignVariable(Variable),
    #[error("{0}")]
    Unsupported(String),
}

/// `int_{SU(2)} u11^a u12^b u21^c u22^d`: equals
/// `(-1)^b a! b! / (a+b+1)!` when `a = d` and `b = c`, and 0 otherwise.
pub fn su2_monomial_integral(a: u64, b: u64, c: u64, d: u64) -> Rat {
    if a != d || b != c {
        return Rat::zero();
    }
    let value = Rat::new(factorial(a) * factorial(b), factorial(a + b + 1));
    if b.is_multiple_of(2) {
        value
    } else {
        -value
    }
}

fn monomial_factors(m: &Monomial, kind: VarKind, t: u64) -> Result<Vec<(u16, u16)>, HaarError> {
    let mut factors = Vec::new();
    for (v, e) in m.iter() {
        if v.kind != kind || v.row as u64 > t || v.col as u64 > t {
            return Err(HaarError::ForeignVariable(v));
        }
        for _ in 0..e {
            factors.push((v.row, v.col));
        }
    }
    Ok(factors)
}

fn unitary_integral_impl(
    t: u64,
    i: &Monomial,
    j: &Monomial,
    any_regime: bool,
) -> Result<Rat, HaarError> {
    let u_factors = monomial_factors(i, VarKind::U, t)?;
    let ubar_factors = monomial_factors(j, VarKind::UBar, t)?;
    if u_factors.len() != ubar_factors.len() {
        return Ok(Rat::zero());
    }
    let d = u_factors.len();
    if d == 0 {
        return Ok(Rat::one());
    }
    if !any_regime && t < d as u64 {
        return Err(HaarError::SingularGram { degree: d, dim: t });
    }

    let all = Permutation::all(d);
    let row_matches: Vec<&Permutation> = all
        .iter()
        .filter(|sigma| (0..d).all(|k| u_factors[k].0 == ubar_factors[sigma.apply(k)].0))
        .collect();
    if row_matches.is_empty() {
        return Ok(Rat::zero());
    }
    let col_matches: Vec<&Permutation> = all
        .iter()
        .filter(|tau| (0..d).all(|k| u_factors[k].1 == ubar_factors[tau.apply(k)].1))
        .collect();

    let table = WeingartenTable::global();
    let mut total = Rat::zero();
    for sigma in &row_matches {
        let sigma_inv = sigma.inverse();
        for tau in &col_matches {
            let ct = tau.compose(&sigma_inv).cycle_type();
            total += table.value_any_regime(&ct, t)?;
        }
    }
    Ok(total)
}

/// `int_{U(t)} u^I ubar^J` by the Weingarten expansion: zero unless the
/// degrees balance, else `sum Wg(tau sigma^-1, t)` over pairs where
/// `sigma` matches the u-factor rows to the ubar-factor rows
/// (`row(u_k) = row(ubar_{sigma(k)})`) and `tau` likewise matches the
/// columns. Which of the two permutations carries rows is pinned by the
/// SU(2) consistency oracle; by class symmetry of `Wg` the value is the
/// same either way. Balanced degrees above `t` are a `SingularGram` error
/// here.
pub fn unitary_monomial_integral(t: u64, i: &Monomial, j: &Monomial) -> Result<Rat, HaarError> {
    unitary_integral_impl(t, i, j, false)
}

/// Same integral with the regime restriction lifted: below `t >= d` the
/// Weingarten values come from the exact Moore-Penrose solve.
pub fn unitary_monomial_integral_any_regime(
    t: u64,
    i: &Monomial,
    j: &Monomial,
) -> Result<Rat, HaarError> {
    unitary_integral_impl(t, i, j, true)
}

/// Which compact group the u-variables are integrated over.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IntegrationMode {
    /// SU(2) closed form; requires `t = 2` and a UBar-free integrand.
    Su2,
    /// U(t) Weingarten engine.
    Unitary,
}

/// Replaces every U/UBar monomial of `p` by its exact Haar integral and
/// collects the X/Y coefficients.
pub fn integrate_out_u(
    p: &Polynomial,
    t: u64,
    mode: IntegrationMode,
) -> Result<Polynomial, HaarError> {
    if mode == IntegrationMode::Su2 && t != 2 {
        return Err(HaarError::Unsupported(format!(
            "SU(2) integration requires t = 2, got t = {t}"
        )));
    }
    let mut result = Polynomial::zero();
    for (u_monomial, coeff) in p.collect_u() {
        let value = match mode {
            IntegrationMode::Su2 => {
                for v in u_monomial.variables() {
                    if v.kind != VarKind::U || v.row > 2 || v.col > 2 {
                        return Err(HaarError::ForeignVariable(v));
                    }
                }
                su2_monomial_integral(
                    u_monomial.exponent(Variable::u(1, 1)) as u64,
                    u_monomial.exponent(Variable::u(1, 2)) as u64,
                    u_monomial.exponent(Variable::u(2, 1)) as u64,
                    u_monomial.exponent(Variable::u(2, 2)) as u64,
                )
            }
            IntegrationMode::Unitary => {
                let i = u_monomial.filter_kind(VarKind::U);
                let j = u_monomial.filter_kind(VarKind::UBar);
                unitary_monomial_integral(t, &i, &j)?
            }
        };
        result += coeff.scale(&value);
    }
    Ok(result)
}
