//! Generator sets for the classical invariant rings, invariance testing by
//! random exact group elements, and exact expression of polynomials in the
//! generators.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::actions::{self, ActionError, ActionSpec, Group, RationalMatrix};
use crate::linalg::{solve_exact, LinSolve};
use crate::numutil::Rat;
use crate::polyring::{Monomial, MultiDegree, Polynomial, Variable};

/// The SL2 minor `Delta_{i,j} = a_i b_j - a_j b_i`.
pub fn delta(i: u16, j: u16) -> Polynomial {
    &(&Polynomial::var(Variable::a(i)) * &Polynomial::var(Variable::b(j)))
        - &(&Polynomial::var(Variable::a(j)) * &Polynomial::var(Variable::b(i)))
}

/// The GL invariant `[XY]_{ij} = sum_k x_{ik} y_{kj}`.
pub fn xy_entry(i: u16, j: u16, t: u16) -> Polynomial {
    let mut out = Polynomial::zero();
    for k in 1..=t {
        out += Polynomial::var(Variable::x(i, k)) * Polynomial::var(Variable::y(k, j));
    }
    out
}

/// Grading data of a generator: the per-row multidegree when the
/// generator is multihomogeneous (a size-t minor takes one variable from
/// each row), otherwise just the total degree (Gram, skew-Gram, and XY
/// entries mix rows).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GeneratorDegree {
    PerRow(MultiDegree),
    Total(u64),
}

/// A named invariant with its polynomial value.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Generator {
    pub name: String,
    pub value: Polynomial,
    pub degree: GeneratorDegree,
}

/// The generating invariants of one classical action.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneratorSet {
    pub spec: ActionSpec,
    pub generators: Vec<Generator>,
}

/// Determinant of a square matrix of polynomials by cofactor expansion.
fn poly_det(rows: &[Vec<Polynomial>]) -> Polynomial {
    let n = rows.len();
    if n == 0 {
        return Polynomial::one();
    }
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut det = Polynomial::zero();
    for (j, entry) in rows[0].iter().enumerate() {
        let minor: Vec<Vec<Polynomial>> = rows[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let cofactor = entry * &poly_det(&minor);
        if j % 2 == 0 {
            det += cofactor;
        } else {
            det += -cofactor;
        }
    }
    det
}

/// Size-`t` minor of `Y` on the 1-based column set `cols`.
fn y_minor(cols: &[u16], t: u16) -> Polynomial {
    let rows: Vec<Vec<Polynomial>> = (1..=t)
        .map(|i| {
            cols.iter()
                .map(|&j| Polynomial::var(Variable::y(i, j)))
                .collect()
        })
        .collect();
    poly_det(&rows)
}

/// The generating invariants: entries of `XY` for GL, size-`t` minors of
/// `Y` for SL (which needs `t <= n`), entries of `Y^tr Y` for O, and the
/// upper triangle of `Y^tr Omega Y` for Sp.
pub fn generators(spec: &ActionSpec) -> Result<GeneratorSet, ActionError> {
    let mut gens = Vec::new();
    match spec.group {
        Group::Gl => {
            if spec.m < 1 {
                return Err(ActionError::InvalidSpec(
                    "GL generators need the dual action (m >= 1)".into(),
                ));
            }
            for i in 1..=spec.m {
                for j in 1..=spec.n {
                    gens.push(Generator {
                        name: format!("XY({i},{j})"),
                        value: xy_entry(i, j, spec.t),
                        degree: GeneratorDegree::Total(2),
                    });
                }
            }
        }
        Group::Sl => {
            if spec.t > spec.n {
                return Err(ActionError::InvalidSpec(format!(
                    "SL minors need t <= n, got t={}, n={}",
                    spec.t, spec.n
                )));
            }
            for cols in (1..=spec.n).combinations(spec.t as usize) {
                gens.push(Generator {
                    name: format!("Delta({})", cols.iter().join(",")),
                    value: y_minor(&cols, spec.t),
                    degree: GeneratorDegree::PerRow(MultiDegree(vec![1; spec.t as usize])),
                });
            }
        }
        Group::O => {
            // [Y^tr Y]_{ij} = sum_k y_{ki} y_{kj}, symmetric in (i, j).
            for i in 1..=spec.n {
                for j in i..=spec.n {
                    let mut value = Polynomial::zero();
                    for k in 1..=spec.t {
                        value +=
                            Polynomial::var(Variable::y(k, i)) * Polynomial::var(Variable::y(k, j));
                    }
                    gens.push(Generator {
                        name: format!("YtY({i},{j})"),
                        value,
                        degree: GeneratorDegree::Total(2),
                    });
                }
            }
        }
        Group::Sp => {
            // [Y^tr Omega Y]_{ij} = sum_k (y_{k,i} y_{k+s,j} - y_{k+s,i} y_{k,j}),
            // antisymmetric, so only i < j is kept.
            let half = spec.t / 2;
            for i in 1..=spec.n {
                for j in (i + 1)..=spec.n {
                    let mut value = Polynomial::zero();
                    for k in 1..=half {
                        value += &(&Polynomial::var(Variable::y(k, i))
                            * &Polynomial::var(Variable::y(half + k, j)))
                            - &(&Polynomial::var(Variable::y(half + k, i))
                                * &Polynomial::var(Variable::y(k, j)));
                    }
                    gens.push(Generator {
                        name: format!("YtOmY({i},{j})"),
                        value,
                        degree: GeneratorDegree::Total(2),
                    });
                }
            }
        }
    }
    Ok(GeneratorSet {
        spec: *spec,
        generators: gens,
    })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum InvarianceVerdict {
    /// All sampled group elements fixed the polynomial.
    InvariantLikely,
    /// A concrete witness moving the polynomial.
    NotInvariant(Box<RationalMatrix>),
}

/// Tests invariance against `trials` seeded pseudo-random group elements.
pub fn is_invariant(
    p: &Polynomial,
    spec: &ActionSpec,
    trials: usize,
    seed: u64,
) -> Result<InvarianceVerdict, ActionError> {
    assert!(trials >= 1, "at least one trial");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let m = actions::random_element(spec, &mut rng);
        if actions::act(&m, p, spec)? != *p {
            return Ok(InvarianceVerdict::NotInvariant(Box::new(m)));
        }
    }
    Ok(InvarianceVerdict::InvariantLikely)
}

/// An exact expression `sum c_alpha prod gens^alpha`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GenExpression {
    /// `(coefficient, [(generator index, exponent), ..])`
    pub terms: Vec<(Rat, Vec<(usize, u32)>)>,
    names: Vec<String>,
}

impl GenExpression {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Expands back into the ambient polynomial ring.
    pub fn expand(&self, gens: &GeneratorSet) -> Polynomial {
        let mut out = Polynomial::zero();
        for (coeff, powers) in &self.terms {
            let mut term = Polynomial::constant(coeff.clone());
            for &(idx, exp) in powers {
                term = &term * &gens.generators[idx].value.pow(exp);
            }
            out += term;
        }
        out
    }
}

impl fmt::Display for GenExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (coeff, powers)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " {} ", if coeff < &Rat::zero() { "-" } else { "+" })?;
            } else if coeff < &Rat::zero() {
                write!(f, "-")?;
            }
            let mag = if coeff < &Rat::zero() {
                -coeff.clone()
            } else {
                coeff.clone()
            };
            let mut wrote = false;
            if !mag.is_one() || powers.is_empty() {
                if mag.denom().is_one() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "{}/{}", mag.numer(), mag.denom())?;
                }
                wrote = true;
            }
            for &(idx, exp) in powers {
                if wrote {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.names[idx])?;
                if exp > 1 {
                    write!(f, "^{exp}")?;
                }
                wrote = true;
            }
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ExpressOutcome {
    InSpan(GenExpression),
    NotInSpan,
}

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum ExpressError {
    #[error("candidate budget exceeded: {0}")]
    BudgetExceeded(String),
}

/// Hard cap on the candidate-monomial count for one linear solve.
pub const DEFAULT_CANDIDATE_CAP: usize = 20_000;

/// Writes `p` as an exact rational combination of products of generators,
/// degree bound permitting, by solving the coefficient-matching linear
/// system. Relations among the generators make the expression non-unique;
/// the deterministic pivoting of the solver picks one reproducibly.
pub fn express_in_generators(
    p: &Polynomial,
    gens: &GeneratorSet,
    degree_bound: u64,
) -> Result<ExpressOutcome, ExpressError> {
    let names: Vec<String> = gens.generators.iter().map(|g| g.name.clone()).collect();
    let mut expression = GenExpression {
        terms: Vec::new(),
        names,
    };
    for (degree, component) in p.homogeneous_components() {
        match express_component(&component, degree, gens, degree_bound)? {
            ExpressOutcome::InSpan(expr) => expression.terms.extend(expr.terms),
            ExpressOutcome::NotInSpan => return Ok(ExpressOutcome::NotInSpan),
        }
    }
    Ok(ExpressOutcome::InSpan(expression))
}

fn express_component(
    p: &Polynomial,
    degree: u64,
    gens: &GeneratorSet,
    degree_bound: u64,
) -> Result<ExpressOutcome, ExpressError> {
    if p.is_zero() {
        return Ok(ExpressOutcome::InSpan(GenExpression {
            terms: Vec::new(),
            names: Vec::new(),
        }));
    }
    if degree == 0 {
        // A nonzero constant is the empty product.
        return Ok(ExpressOutcome::InSpan(GenExpression {
            terms: vec![(p.coefficient(&Monomial::one()), Vec::new())],
            names: Vec::new(),
        }));
    }
    if degree > degree_bound {
        return Err(ExpressError::BudgetExceeded(format!(
            "component degree {degree} exceeds the bound {degree_bound}"
        )));
    }
    if gens.generators.is_empty() {
        return Ok(ExpressOutcome::NotInSpan);
    }
    // All classical generator families are homogeneous of one degree.
    let gen_degree = match &gens.generators[0].degree {
        GeneratorDegree::PerRow(md) => md.0.iter().sum(),
        GeneratorDegree::Total(d) => *d,
    };
    if !degree.is_multiple_of(gen_degree) {
        return Ok(ExpressOutcome::NotInSpan);
    }
    let size = (degree / gen_degree) as usize;
    let candidate_count =
        crate::numutil::binomial((gens.generators.len() + size - 1) as u64, size as u64);
    if candidate_count > num_bigint::BigInt::from(DEFAULT_CANDIDATE_CAP) {
        return Err(ExpressError::BudgetExceeded(format!(
            "{candidate_count} candidate products exceed the cap {DEFAULT_CANDIDATE_CAP}"
        )));
    }

    let mut candidates: Vec<(Vec<(usize, u32)>, Polynomial)> = Vec::new();
    for combo in (0..gens.generators.len()).combinations_with_replacement(size) {
        let mut powers: Vec<(usize, u32)> = Vec::new();
        for idx in combo {
            match powers.last_mut() {
                Some((last, exp)) if *last == idx => *exp += 1,
                _ => powers.push((idx, 1)),
            }
        }
        let mut value = Polynomial::one();
        for &(idx, exp) in &powers {
            value = &value * &gens.generators[idx].value.pow(exp);
        }
        candidates.push((powers, value));
    }

    // Row space: every monomial in the candidates or the target.
    let mut row_index: BTreeMap<&Monomial, usize> = BTreeMap::new();
    for (_, value) in &candidates {
        for (m, _) in value.terms() {
            let next = row_index.len();
            row_index.entry(m).or_insert(next);
        }
    }
    for (m, _) in p.terms() {
        let next = row_index.len();
        row_index.entry(m).or_insert(next);
    }

    let rows = row_index.len();
    let mut matrix = vec![vec![Rat::zero(); candidates.len()]; rows];
    for (col, (_, value)) in candidates.iter().enumerate() {
        for (m, c) in value.terms() {
            matrix[row_index[m]][col] = c.clone();
        }
    }
    let mut rhs = vec![Rat::zero(); rows];
    for (m, c) in p.terms() {
        rhs[row_index[m]] = c.clone();
    }

    match solve_exact(&matrix, &rhs) {
        LinSolve::Inconsistent => Ok(ExpressOutcome::NotInSpan),
        LinSolve::Solved { x, .. } => {
            let terms: Vec<(Rat, Vec<(usize, u32)>)> = candidates
                .into_iter()
                .zip(x)
                .filter(|(_, coeff)| !coeff.is_zero())
                .map(|((powers, _), coeff)| (coeff, powers))
                .collect();
            Ok(ExpressOutcome::InSpan(GenExpression {
                terms,
                names: Vec::new(),
            }))
        }
    }
}
