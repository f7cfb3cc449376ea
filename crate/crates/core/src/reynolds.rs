//! The Reynolds operator: the general expand-and-integrate algorithm,
//! closed-form fast paths on `k[Y_{2x2}]`, the multigrading kernel filter,
//! and the conjecture checker.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::actions::{self, ActionError, ActionSpec, Group};
use crate::haar::{self, HaarError, IntegrationMode};
use crate::invariants::{delta, xy_entry};
use crate::numutil::{binomial, factorial, prime_factors, Rat};
use crate::polyring::{multidegree, Monomial, Polynomial, VarKind};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strategy {
    General,
    ClosedForm,
    Auto,
}

/// A request pairing an action with an evaluation strategy. Supported:
/// SL with `t = 2, m = 0` under any strategy, and GL with `m >= 1` under
/// the general strategy.
#[derive(Clone, Copy, Debug)]
pub struct ReynoldsRequest {
    pub spec: ActionSpec,
    pub strategy: Strategy,
}

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum ReynoldsError {
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Haar(#[from] HaarError),
    #[error("unsupported request: {0}")]
    Unsupported(String),
}

/// Applies the Reynolds operator according to the request.
pub fn apply(req: &ReynoldsRequest, f: &Polynomial) -> Result<Polynomial, ReynoldsError> {
    req.spec.validate_polynomial(f)?;
    match (req.spec.group, req.spec.m, req.spec.t) {
        (Group::Sl, 0, 2) => match req.strategy {
            Strategy::General => reynolds_sl2(f),
            Strategy::ClosedForm => sl2_closed_linear(f),
            Strategy::Auto => sl2_auto(f),
        },
        (Group::Gl, m, _) if m >= 1 => match req.strategy {
            Strategy::General => reynolds_gl(f, &req.spec),
            _ => Err(ReynoldsError::Unsupported(format!(
                "GL action supports only the general strategy, got {:?}",
                req.strategy
            ))),
        },
        _ => Err(ReynoldsError::Unsupported(format!(
            "no Reynolds engine for {}",
            req.spec
        ))),
    }
}

fn sl2_spec_for(f: &Polynomial) -> Result<ActionSpec, ReynoldsError> {
    let cols = f
        .variables()
        .iter()
        .map(|v| v.col)
        .max()
        .unwrap_or(1)
        .max(1);
    ActionSpec::standard(Group::Sl, 2, cols).map_err(Into::into)
}

fn sl2_monomial_general(mu: &Monomial, spec: &ActionSpec) -> Result<Polynomial, ReynoldsError> {
    let expanded = actions::phi_standard(
        &Polynomial::term(Rat::from_integer(1.into()), mu.clone()),
        spec,
    )?;
    Ok(haar::integrate_out_u(&expanded, 2, IntegrationMode::Su2)?)
}

/// The Reynolds operator for the standard SL2 action on `k[Y_{2xN}]`,
/// computed monomial by monomial through `phi` and the SU(2) integrals.
/// No kernel shortcut is taken here; the `Auto` strategy layers the
/// multigrading filter on top.
pub fn reynolds_sl2(f: &Polynomial) -> Result<Polynomial, ReynoldsError> {
    let spec = sl2_spec_for(f)?;
    let mut out = Polynomial::zero();
    for (mu, coeff) in f.terms() {
        out += sl2_monomial_general(mu, &spec)?.scale(coeff);
    }
    Ok(out)
}

/// Closed form on `k[Y_{2x2}]`: the monomial `(a1 b2)^n (a2 b1)^m` maps to
/// `n! m! / (n+m+1)! Delta12^n Delta21^m`, and every other monomial to zero.
pub fn reynolds_sl2_closed(mu: &Monomial) -> Result<Polynomial, ReynoldsError> {
    for v in mu.variables() {
        if v.kind != VarKind::Y || v.row > 2 || v.col > 2 {
            return Err(ReynoldsError::Unsupported(format!(
                "closed form is for k[Y_2x2]: variable {v} out of range"
            )));
        }
    }
    let n = mu.exponent(crate::polyring::Variable::a(1));
    let m = mu.exponent(crate::polyring::Variable::a(2));
    if mu.exponent(crate::polyring::Variable::b(2)) != n
        || mu.exponent(crate::polyring::Variable::b(1)) != m
    {
        return Ok(Polynomial::zero());
    }
    let coeff = Rat::new(
        factorial(n as u64) * factorial(m as u64),
        factorial(n as u64 + m as u64 + 1),
    );
    let image = &delta(1, 2).pow(n) * &delta(2, 1).pow(m);
    Ok(image.scale(&coeff))
}

fn sl2_closed_linear(f: &Polynomial) -> Result<Polynomial, ReynoldsError> {
    let mut out = Polynomial::zero();
    for (mu, coeff) in f.terms() {
        out += reynolds_sl2_closed(mu)?.scale(coeff);
    }
    Ok(out)
}

fn sl2_auto(f: &Polynomial) -> Result<Polynomial, ReynoldsError> {
    let spec = sl2_spec_for(f)?;
    let mut out = Polynomial::zero();
    for (mu, coeff) in f.terms() {
        if multidegree_filter(mu) == FilterVerdict::Zero {
            continue;
        }
        let within_2x2 = mu
            .variables()
            .all(|v| v.kind == VarKind::Y && v.row <= 2 && v.col <= 2);
        let image = if within_2x2 {
            reynolds_sl2_closed(mu)?
        } else {
            sl2_monomial_general(mu, &spec)?
        };
        out += image.scale(coeff);
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FilterVerdict {
    /// The two row degrees differ, so the Reynolds image is certainly zero.
    Zero,
    /// The filter is silent.
    Unknown,
}

/// The multigrading kernel test on monomials of `k[Y_{2xN}]`.
pub fn multidegree_filter(mu: &Monomial) -> FilterVerdict {
    match multidegree(mu, 2) {
        Ok(md) => {
            if md.0[0] != md.0[1] {
                FilterVerdict::Zero
            } else {
                FilterVerdict::Unknown
            }
        }
        Err(_) => FilterVerdict::Unknown,
    }
}

/// The Reynolds operator for the GL action on `k[X_{mxt}, Y_{txn}]` via the
/// dual map and Weingarten integration over U(t). Fails with `SingularGram`
/// when a balanced u-degree exceeds `t`.
pub fn reynolds_gl(f: &Polynomial, spec: &ActionSpec) -> Result<Polynomial, ReynoldsError> {
    if spec.group != Group::Gl || spec.m < 1 {
        return Err(ReynoldsError::Unsupported(format!(
            "general dual-action engine needs a GL spec with m >= 1, got {spec}"
        )));
    }
    let mut out = Polynomial::zero();
    for (mu, coeff) in f.terms() {
        let expanded = actions::phi_standard_dual(
            &Polynomial::term(Rat::from_integer(1.into()), mu.clone()),
            spec,
        )?;
        let integrated = haar::integrate_out_u(&expanded, spec.t as u64, IntegrationMode::Unitary)?;
        out += integrated.scale(coeff);
    }
    Ok(out)
}

/// The set of primes dividing any coefficient denominator.
pub fn denominator_primes_of(p: &Polynomial) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    for (_, coeff) in p.terms() {
        out.extend(prime_factors(coeff.denom()));
    }
    out
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ConjectureOutcome {
    Match,
    Mismatch { lhs: Polynomial, rhs: Polynomial },
    Skipped(String),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConjectureItem {
    pub conjecture: &'static str,
    pub params: String,
    pub outcome: ConjectureOutcome,
}

impl fmt::Display for ConjectureItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            ConjectureOutcome::Match => {
                write!(f, "MATCH    {} at {}", self.conjecture, self.params)
            }
            ConjectureOutcome::Mismatch { lhs, rhs } => write!(
                f,
                "MISMATCH {} at {}: engine {} vs predicted {}",
                self.conjecture, self.params, lhs, rhs
            ),
            ConjectureOutcome::Skipped(why) => {
                write!(
                    f,
                    "SKIPPED  {} at {}: {}",
                    self.conjecture, self.params, why
                )
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ConjectureReport {
    pub items: Vec<ConjectureItem>,
}

impl ConjectureReport {
    /// True when no tuple mismatched (skips do not count against).
    pub fn no_mismatch(&self) -> bool {
        !self
            .items
            .iter()
            .any(|i| matches!(i.outcome, ConjectureOutcome::Mismatch { .. }))
    }

    pub fn match_count(&self) -> usize {
        self.items
            .iter()
            .filter(|i| i.outcome == ConjectureOutcome::Match)
            .count()
    }
}

fn ab_monomial(pairs: &[(u16, u16, u32)]) -> Monomial {
    // (i, j, e) stands for (a_i b_j)^e
    let mut m = Monomial::one();
    for &(i, j, e) in pairs {
        let factor = Monomial::from_pairs([
            (crate::polyring::Variable::a(i), e),
            (crate::polyring::Variable::b(j), e),
        ]);
        m = m.mul(&factor);
    }
    m
}

/// Evaluates both sides of every conjecture within the budget and reports
/// each tuple; the conjectures are never assumed.
///
/// Budget semantics: the 2x3 product formula runs over `i + j + k <= budget`,
/// the odd-power kernel claim over exponents `2n + 1 <= budget`, and the GL
/// moment formula over `t = 2, n <= min(3, budget)` and
/// `t = 3, n <= min(2, budget)`, skipping tuples outside the Weingarten
/// regime `n <= t`.
pub fn check_conjectures(budget: u64) -> Result<ConjectureReport, ReynoldsError> {
    let mut report = ConjectureReport::default();

    // R((a1 b2)^i (a1 b3)^j (a2 b3)^k)
    //   =? (i+j)! (k+j)! / ((i+j+k+1)! j!) Delta12^i Delta13^j Delta23^k
    for total in 0..=budget {
        for i in 0..=total {
            for j in 0..=(total - i) {
                let k = total - i - j;
                let mu = ab_monomial(&[(1, 2, i as u32), (1, 3, j as u32), (2, 3, k as u32)]);
                let lhs = reynolds_sl2(&Polynomial::term(Rat::from_integer(1.into()), mu))?;
                let coeff = Rat::new(
                    factorial(i + j) * factorial(k + j),
                    factorial(i + j + k + 1) * factorial(j),
                );
                let rhs = (&(&delta(1, 2).pow(i as u32) * &delta(1, 3).pow(j as u32))
                    * &delta(2, 3).pow(k as u32))
                    .scale(&coeff);
                report.items.push(ConjectureItem {
                    conjecture: "2x3 product formula",
                    params: format!("(i,j,k)=({i},{j},{k})"),
                    outcome: if lhs == rhs {
                        ConjectureOutcome::Match
                    } else {
                        ConjectureOutcome::Mismatch { lhs, rhs }
                    },
                });
            }
        }
    }

    // R((a1 a2 a3 b1 b2 b3)^e) =? 0 for odd exponents e within budget
    for e in (1..=budget).step_by(2) {
        let mu = ab_monomial(&[(1, 1, e as u32), (2, 2, e as u32), (3, 3, e as u32)]);
        let lhs = reynolds_sl2(&Polynomial::term(Rat::from_integer(1.into()), mu))?;
        report.items.push(ConjectureItem {
            conjecture: "odd-power kernel",
            params: format!("n={} (degree {})", (e - 1) / 2, 6 * e),
            outcome: if lhs.is_zero() {
                ConjectureOutcome::Match
            } else {
                ConjectureOutcome::Mismatch {
                    lhs,
                    rhs: Polynomial::zero(),
                }
            },
        });
    }

    // R((x11 y11)^n) =? binom(n+t-1, t-1)^{-1} ([XY]_{11})^n
    for (t, n_cap) in [(2u16, 3u64), (3, 2)] {
        for n in 0..=n_cap.min(budget) {
            let params = format!("t={t}, n={n}");
            if n > t as u64 {
                report.items.push(ConjectureItem {
                    conjecture: "GL moment formula",
                    params,
                    outcome: ConjectureOutcome::Skipped(format!(
                        "u-degree {n} exceeds the Weingarten regime at t={t}"
                    )),
                });
                continue;
            }
            let spec = ActionSpec::standard_dual(Group::Gl, t, 1, 1).expect("valid spec");
            let mu = Monomial::from_pairs([
                (crate::polyring::Variable::x(1, 1), n as u32),
                (crate::polyring::Variable::y(1, 1), n as u32),
            ]);
            let lhs = reynolds_gl(&Polynomial::term(Rat::from_integer(1.into()), mu), &spec)?;
            let coeff = Rat::new(BigInt::from(1), binomial(n + t as u64 - 1, t as u64 - 1));
            let rhs = xy_entry(1, 1, t).pow(n as u32).scale(&coeff);
            report.items.push(ConjectureItem {
                conjecture: "GL moment formula",
                params,
                outcome: if lhs == rhs {
                    ConjectureOutcome::Match
                } else {
                    ConjectureOutcome::Mismatch { lhs, rhs }
                },
            });
        }
    }

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numutil::rat;
    use crate::polyring::{parse_polynomial, Variable};

    fn term(mu: Monomial) -> Polynomial {
        Polynomial::term(Rat::from_integer(1.into()), mu)
    }

    #[test]
    fn power_family_closed_form() {
        // R((a1 b2)^n) = Delta12^n / (n+1), via the general engine.
        for n in 0..=8u32 {
            let mu = ab_monomial(&[(1, 2, n)]);
            let image = reynolds_sl2(&term(mu)).unwrap();
            let expected = delta(1, 2).pow(n).scale(&rat(1, n as i64 + 1));
            assert_eq!(image, expected, "n = {n}");
        }
    }

    #[test]
    fn unbalanced_monomials_die() {
        let a1 = parse_polynomial("a1").unwrap();
        assert!(reynolds_sl2(&a1).unwrap().is_zero());
        let p = parse_polynomial("a1^2*b2").unwrap();
        assert!(reynolds_sl2(&p).unwrap().is_zero());
    }

    #[test]
    fn worked_example_values() {
        let p = parse_polynomial("a1*b2*a3*b4").unwrap();
        let expected = (&delta(1, 2) * &delta(3, 4)).scale(&rat(1, 3))
            - (&delta(1, 3) * &delta(2, 4)).scale(&rat(1, 6));
        assert_eq!(reynolds_sl2(&p).unwrap(), expected);

        let q = parse_polynomial("a1*b2*a2*b3*a3*b1").unwrap();
        assert!(reynolds_sl2(&q).unwrap().is_zero());
    }

    #[test]
    fn closed_form_values() {
        // (a1 b2)^2 (a2 b1) -> (2! 1! / 4!) Delta12^2 Delta21 = -1/12 Delta12^3
        let mu = ab_monomial(&[(1, 2, 2), (2, 1, 1)]);
        let image = reynolds_sl2_closed(&mu).unwrap();
        assert_eq!(image, delta(1, 2).pow(3).scale(&rat(-1, 12)));

        // (a1 b1)^3 is not of the closed form
        let bad = Monomial::from_pairs([(Variable::a(1), 3), (Variable::b(1), 3)]);
        assert!(reynolds_sl2_closed(&bad).unwrap().is_zero());

        assert_eq!(
            reynolds_sl2_closed(&Monomial::one()).unwrap(),
            Polynomial::one()
        );
    }

    #[test]
    fn closed_and_general_agree_on_2x2() {
        for n in 0..=3u32 {
            for m in 0..=3u32 {
                let mu = ab_monomial(&[(1, 2, n), (2, 1, m)]);
                let closed = reynolds_sl2_closed(&mu).unwrap();
                let general = reynolds_sl2(&term(mu)).unwrap();
                assert_eq!(closed, general, "n={n}, m={m}");
            }
        }
    }

    #[test]
    fn filter_verdicts() {
        let unbalanced = Monomial::from_pairs([(Variable::a(1), 2), (Variable::b(2), 1)]);
        assert_eq!(multidegree_filter(&unbalanced), FilterVerdict::Zero);
        let balanced = Monomial::from_pairs([(Variable::a(1), 1), (Variable::b(1), 1)]);
        assert_eq!(multidegree_filter(&balanced), FilterVerdict::Unknown);
        assert_eq!(multidegree_filter(&Monomial::one()), FilterVerdict::Unknown);
    }

    #[test]
    fn projection_fixes_invariants() {
        let g = &delta(1, 2).pow(2) * &delta(1, 3);
        assert_eq!(reynolds_sl2(&g).unwrap(), g);

        let spec = ActionSpec::standard_dual(Group::Gl, 2, 2, 2).unwrap();
        let h = &xy_entry(1, 1, 2) * &xy_entry(2, 2, 2);
        assert_eq!(reynolds_gl(&h, &spec).unwrap(), h);
    }

    #[test]
    fn gl_first_moment() {
        let spec = ActionSpec::standard_dual(Group::Gl, 2, 1, 1).unwrap();
        let f = parse_polynomial("x[1][1]*y[1][1]").unwrap();
        let image = reynolds_gl(&f, &spec).unwrap();
        let expected = parse_polynomial("1/2*x[1][1]*y[1][1] + 1/2*x[1][2]*y[2][1]").unwrap();
        assert_eq!(image, expected);

        let lone = parse_polynomial("x[1][1]").unwrap();
        assert!(reynolds_gl(&lone, &spec).unwrap().is_zero());
        assert_eq!(
            reynolds_gl(&Polynomial::one(), &spec).unwrap(),
            Polynomial::one()
        );
    }

    #[test]
    fn gl_first_moment_off_diagonal_at_t_three() {
        let spec = ActionSpec::standard_dual(Group::Gl, 3, 1, 2).unwrap();
        let f = parse_polynomial("x[1][1]*y[1][2]").unwrap();
        let image = reynolds_gl(&f, &spec).unwrap();
        assert_eq!(image, xy_entry(1, 2, 3).scale(&rat(1, 3)));
    }

    #[test]
    fn gl_at_dimension_one_is_the_circle_average() {
        let spec = ActionSpec::standard_dual(Group::Gl, 1, 1, 1).unwrap();
        let f = parse_polynomial("x[1][1]*y[1][1]").unwrap();
        assert_eq!(reynolds_gl(&f, &spec).unwrap(), f);
        // imbalanced monomials average to zero on the circle
        let g = parse_polynomial("x[1][1]^2*y[1][1]").unwrap();
        assert!(reynolds_gl(&g, &spec).unwrap().is_zero());
    }

    #[test]
    fn gl_regime_error_propagates() {
        let spec = ActionSpec::standard_dual(Group::Gl, 2, 1, 1).unwrap();
        let f = parse_polynomial("x[1][1]^3*y[1][1]^3").unwrap();
        assert!(matches!(
            reynolds_gl(&f, &spec),
            Err(ReynoldsError::Haar(HaarError::SingularGram { .. }))
        ));
    }

    #[test]
    fn strategies_dispatch() {
        let spec = ActionSpec::standard(Group::Sl, 2, 2).unwrap();
        let f = parse_polynomial("a1^3*b2^3").unwrap();
        for strategy in [Strategy::General, Strategy::ClosedForm, Strategy::Auto] {
            let req = ReynoldsRequest { spec, strategy };
            let image = apply(&req, &f).unwrap();
            assert_eq!(image, delta(1, 2).pow(3).scale(&rat(1, 4)), "{strategy:?}");
        }
        // a1 * b2^3 has multidegree (1, 3), so every strategy kills it.
        let unbalanced = parse_polynomial("a1*b2^3").unwrap();
        for strategy in [Strategy::General, Strategy::ClosedForm, Strategy::Auto] {
            let req = ReynoldsRequest { spec, strategy };
            assert!(apply(&req, &unbalanced).unwrap().is_zero(), "{strategy:?}");
        }

        let gl_spec = ActionSpec::standard_dual(Group::Gl, 2, 1, 1).unwrap();
        let req = ReynoldsRequest {
            spec: gl_spec,
            strategy: Strategy::ClosedForm,
        };
        assert!(matches!(
            apply(&req, &Polynomial::one()),
            Err(ReynoldsError::Unsupported(_))
        ));
    }

    #[test]
    fn small_conjecture_sweep_matches() {
        let report = check_conjectures(2).unwrap();
        assert!(report.no_mismatch());
        // 2x3 formula at (1,1,0) gives 1/3 Delta12 Delta13.
        let mu = ab_monomial(&[(1, 2, 1), (1, 3, 1)]);
        let image = reynolds_sl2(&term(mu)).unwrap();
        assert_eq!(image, (&delta(1, 2) * &delta(1, 3)).scale(&rat(1, 3)));
    }

    #[test]
    fn denominator_audit() {
        let image = reynolds_sl2(&term(ab_monomial(&[(1, 2, 4)]))).unwrap();
        let primes = denominator_primes_of(&image);
        assert!(primes.contains(&5));
        assert_eq!(denominator_primes_of(&delta(1, 2)), BTreeSet::new());
    }
}
