//! The substitution maps behind each classical action and the action of
//! concrete rational group elements on polynomials.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::linalg;
use crate::numutil::{rat_int, Rat};
use crate::polyring::{Polynomial, VarKind, Variable};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Group {
    Gl,
    Sl,
    O,
    Sp,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Group::Gl => "GL",
            Group::Sl => "SL",
            Group::O => "O",
            Group::Sp => "Sp",
        };
        write!(f, "{name}")
    }
}

/// Which classical action is in play: the group, the matrix size `t`, the
/// number `n` of standard copies, and the number `m` of dual copies
/// (`m = 0` for the pure standard action).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ActionSpec {
    pub group: Group,
    pub t: u16,
    pub n: u16,
    pub m: u16,
}

impl ActionSpec {
    pub fn new(group: Group, t: u16, n: u16, m: u16) -> Result<Self, ActionError> {
        if t < 1 || n < 1 {
            return Err(ActionError::InvalidSpec(format!(
                "t and n must be positive, got t={t}, n={n}"
            )));
        }
        if group == Group::Sp && !t.is_multiple_of(2) {
            return Err(ActionError::InvalidSpec(format!(
                "symplectic group needs even t, got t={t}"
            )));
        }
        Ok(ActionSpec { group, t, n, m })
    }

    /// The action on `k[Y_{t x n}]`.
    pub fn standard(group: Group, t: u16, n: u16) -> Result<Self, ActionError> {
        Self::new(group, t, n, 0)
    }

    /// The action on `k[X_{m x t}, Y_{t x n}]`.
    pub fn standard_dual(group: Group, t: u16, m: u16, n: u16) -> Result<Self, ActionError> {
        if m < 1 {
            return Err(ActionError::InvalidSpec("dual action needs m >= 1".into()));
        }
        Self::new(group, t, n, m)
    }

    fn check_variable(&self, v: Variable) -> Result<(), ActionError> {
        let ok = match v.kind {
            VarKind::Y => v.row <= self.t && v.col <= self.n,
            VarKind::X => self.m >= 1 && v.row <= self.m && v.col <= self.t,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(ActionError::ShapeMismatch {
                var: v,
                spec: *self,
            })
        }
    }

    /// Checks that every variable of `f` fits this action's matrices.
    pub fn validate_polynomial(&self, f: &Polynomial) -> Result<(), ActionError> {
        for v in f.variables() {
            self.check_variable(v)?;
        }
        Ok(())
    }
}

impl fmt::Display for ActionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 0 {
            write!(
                f,
                "{} (t={}) on Y[{}x{}]",
                self.group, self.t, self.t, self.n
            )
        } else {
            write!(
                f,
                "{} (t={}) on X[{}x{}], Y[{}x{}]",
                self.group, self.t, self.m, self.t, self.t, self.n
            )
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum ActionError {
    #[error("variable {var} does not fit the action {spec}")]
    ShapeMismatch { var: Variable, spec: ActionSpec },
    #[error("no dual-side variant for {0}")]
    UnsupportedGroup(Group),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("invalid action: {0}")]
    InvalidSpec(String),
}

/// A square matrix of exact rationals, used as a concrete group element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMatrix {
    size: usize,
    entries: Vec<Rat>,
}

impl RationalMatrix {
    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size);
        for i in 0..size {
            *m.get_mut(i, i) = Rat::one();
        }
        m
    }

    fn zeros(size: usize) -> Self {
        RationalMatrix {
            size,
            entries: vec![Rat::zero(); size * size],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let size = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == size),
            "matrix must be square"
        );
        RationalMatrix {
            size,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn diagonal(diag: Vec<Rat>) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, d) in diag.into_iter().enumerate() {
            *m.get_mut(i, i) = d;
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// 0-based access.
    pub fn get(&self, row: usize, col: usize) -> &Rat {
        &self.entries[row * self.size + col]
    }

    fn get_mut(&mut self, row: usize, col: usize) -> &mut Rat {
        &mut self.entries[row * self.size + col]
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut out = Self::zeros(self.size);
        for i in 0..self.size {
            for j in 0..self.size {
                *out.get_mut(j, i) = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.size, other.size);
        let mut out = Self::zeros(self.size);
        for i in 0..self.size {
            for j in 0..self.size {
                let mut acc = Rat::zero();
                for k in 0..self.size {
                    acc += self.get(i, k) * other.get(k, j);
                }
                *out.get_mut(i, j) = acc;
            }
        }
        out
    }

    pub fn det(&self) -> Rat {
        let rows: Vec<Vec<Rat>> = (0..self.size)
            .map(|i| (0..self.size).map(|j| self.get(i, j).clone()).collect())
            .collect();
        linalg::determinant(&rows)
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> RationalMatrix {
        let mut out = Self::zeros(self.size - 1);
        let mut r = 0;
        for i in 0..self.size {
            if i == skip_row {
                continue;
            }
            let mut c = 0;
            for j in 0..self.size {
                if j == skip_col {
                    continue;
                }
                *out.get_mut(r, c) = self.get(i, j).clone();
                c += 1;
            }
            r += 1;
        }
        out
    }

    /// Transposed cofactor matrix; satisfies `M . adj(M) = det(M) . I`.
    pub fn adjugate(&self) -> RationalMatrix {
        if self.size == 1 {
            return RationalMatrix::identity(1);
        }
        let mut out = Self::zeros(self.size);
        for i in 0..self.size {
            for j in 0..self.size {
                let cofactor = self.minor(i, j).det();
                let signed = if (i + j) % 2 == 0 {
                    cofactor
                } else {
                    -cofactor
                };
                *out.get_mut(j, i) = signed;
            }
        }
        out
    }

    /// Exact inverse via adjugate over determinant.
    pub fn inverse(&self) -> Result<RationalMatrix, ActionError> {
        let det = self.det();
        if det.is_zero() {
            return Err(ActionError::SingularMatrix);
        }
        let adj = self.adjugate();
        let mut out = Self::zeros(self.size);
        for i in 0..self.size {
            for j in 0..self.size {
                *out.get_mut(i, j) = adj.get(i, j) / &det;
            }
        }
        Ok(out)
    }

    /// Membership test for the group named by `spec`.
    pub fn satisfies(&self, spec: &ActionSpec) -> bool {
        if self.size != spec.t as usize {
            return false;
        }
        match spec.group {
            Group::Gl => !self.det().is_zero(),
            Group::Sl => self.det().is_one(),
            Group::O => self.transpose().mul(self) == RationalMatrix::identity(self.size),
            Group::Sp => {
                let omega = symplectic_form(self.size);
                self.transpose().mul(&omega).mul(self) == omega
            }
        }
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.size {
            write!(f, "[")?;
            for j in 0..self.size {
                if j > 0 {
                    write!(f, ", ")?;
                }
                let e = self.get(i, j);
                if e.denom().is_one() {
                    write!(f, "{}", e.numer())?;
                } else {
                    write!(f, "{}/{}", e.numer(), e.denom())?;
                }
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// The standard symplectic form `[[0, I], [-I, 0]]` of even size.
pub fn symplectic_form(size: usize) -> RationalMatrix {
    assert!(size.is_multiple_of(2));
    let half = size / 2;
    let mut omega = RationalMatrix::zeros(size);
    for i in 0..half {
        *omega.get_mut(i, half + i) = Rat::one();
        *omega.get_mut(half + i, i) = -Rat::one();
    }
    omega
}

fn u_row_image(row: u16, col: u16, t: u16) -> Polynomial {
    // y_{row,col} -> sum_k u_{row,k} y_{k,col}
    let mut image = Polynomial::zero();
    for k in 1..=t {
        image += Polynomial::var(Variable::u(row, k)) * Polynomial::var(Variable::y(k, col));
    }
    image
}

/// The map `phi: Y -> UY` into the enlarged ring `k[Y][U]`.
pub fn phi_standard(f: &Polynomial, spec: &ActionSpec) -> Result<Polynomial, ActionError> {
    let mut images: BTreeMap<Variable, Polynomial> = BTreeMap::new();
    for v in f.variables() {
        if v.kind != VarKind::Y {
            return Err(ActionError::ShapeMismatch {
                var: v,
                spec: *spec,
            });
        }
        spec.check_variable(v)?;
        images.insert(v, u_row_image(v.row, v.col, spec.t));
    }
    Ok(f.substitute(&images).expect("images cover all variables"))
}

/// The map `phi: X -> X UBar^tr, Y -> UY` into `k[X, Y][U, UBar]`.
pub fn phi_standard_dual(f: &Polynomial, spec: &ActionSpec) -> Result<Polynomial, ActionError> {
    if spec.m < 1 {
        return Err(ActionError::InvalidSpec("dual action needs m >= 1".into()));
    }
    let mut images: BTreeMap<Variable, Polynomial> = BTreeMap::new();
    for v in f.variables() {
        spec.check_variable(v)?;
        let image = match v.kind {
            VarKind::Y => u_row_image(v.row, v.col, spec.t),
            VarKind::X => {
                // x_{ij} -> [X UBar^tr]_{ij} = sum_k x_{ik} ubar_{jk}
                let mut image = Polynomial::zero();
                for k in 1..=spec.t {
                    image += Polynomial::var(Variable::x(v.row, k))
                        * Polynomial::var(Variable::ubar(v.col, k));
                }
                image
            }
            _ => unreachable!("check_variable rejects U-side variables"),
        };
        images.insert(v, image);
    }
    Ok(f.substitute(&images).expect("images cover all variables"))
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
        if entry.is_zero() {
            continue;
        }
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

/// Entries of the symbolic adjugate of `U`, indexed 1-based.
fn u_adjugate_entry(row: u16, col: u16, t: u16) -> Polynomial {
    // adj(U)_{row,col} = (-1)^{row+col} det(U with row `col`, column `row` removed)
    let minor: Vec<Vec<Polynomial>> = (1..=t)
        .filter(|&i| i != col)
        .map(|i| {
            (1..=t)
                .filter(|&j| j != row)
                .map(|j| Polynomial::var(Variable::u(i, j)))
                .collect()
        })
        .collect();
    let det = poly_det(&minor);
    if (row + col).is_multiple_of(2) {
        det
    } else {
        -det
    }
}

/// The UBar-free variant of the dual map: for SL the inverse of a special
/// unitary matrix is its adjugate, for O it is the transpose, so `X` maps
/// through `X adj(U)` or `X U^tr` respectively.
pub fn phi_dual_variant(f: &Polynomial, spec: &ActionSpec) -> Result<Polynomial, ActionError> {
    if !matches!(spec.group, Group::Sl | Group::O) {
        return Err(ActionError::UnsupportedGroup(spec.group));
    }
    if spec.m < 1 {
        return Err(ActionError::InvalidSpec("dual action needs m >= 1".into()));
    }
    let mut images: BTreeMap<Variable, Polynomial> = BTreeMap::new();
    for v in f.variables() {
        spec.check_variable(v)?;
        let image = match v.kind {
            VarKind::Y => u_row_image(v.row, v.col, spec.t),
            VarKind::X => {
                let mut image = Polynomial::zero();
                for k in 1..=spec.t {
                    let factor = match spec.group {
                        Group::Sl => u_adjugate_entry(k, v.col, spec.t),
                        Group::O => Polynomial::var(Variable::u(v.col, k)),
                        _ => unreachable!(),
                    };
                    image += Polynomial::var(Variable::x(v.row, k)) * factor;
                }
                image
            }
            _ => unreachable!("check_variable rejects U-side variables"),
        };
        images.insert(v, image);
    }
    Ok(f.substitute(&images).expect("images cover all variables"))
}

/// Applies the concrete group element `M`: `Y -> MY` and, on the dual
/// side, `X -> X M^{-1}`.
pub fn act(
    m: &RationalMatrix,
    f: &Polynomial,
    spec: &ActionSpec,
) -> Result<Polynomial, ActionError> {
    assert_eq!(m.size(), spec.t as usize, "group element size mismatch");
    let vars = f.variables();
    let needs_inverse = vars.iter().any(|v| v.kind == VarKind::X);
    let inverse = if needs_inverse {
        Some(m.inverse()?)
    } else {
        None
    };

    let mut images: BTreeMap<Variable, Polynomial> = BTreeMap::new();
    for v in vars {
        spec.check_variable(v)?;
        let image = match v.kind {
            VarKind::Y => {
                let mut image = Polynomial::zero();
                for k in 1..=spec.t {
                    let coeff = m.get((v.row - 1) as usize, (k - 1) as usize).clone();
                    image += Polynomial::var(Variable::y(k, v.col)).scale(&coeff);
                }
                image
            }
            VarKind::X => {
                let inv = inverse.as_ref().unwrap();
                let mut image = Polynomial::zero();
                for k in 1..=spec.t {
                    let coeff = inv.get((k - 1) as usize, (v.col - 1) as usize).clone();
                    image += Polynomial::var(Variable::x(v.row, k)).scale(&coeff);
                }
                image
            }
            _ => unreachable!("check_variable rejects U-side variables"),
        };
        images.insert(v, image);
    }
    Ok(f.substitute(&images).expect("images cover all variables"))
}

fn small_nonzero(rng: &mut impl Rng) -> i64 {
    loop {
        let v = rng.random_range(-4i64..=4);
        if v != 0 {
            return v;
        }
    }
}

fn random_gl(t: usize, rng: &mut impl Rng) -> RationalMatrix {
    loop {
        let rows: Vec<Vec<Rat>> = (0..t)
            .map(|_| {
                (0..t)
                    .map(|_| rat_int(rng.random_range(-3i64..=3)))
                    .collect()
            })
            .collect();
        let m = RationalMatrix::from_rows(rows);
        if !m.det().is_zero() {
            return m;
        }
    }
}

fn random_sl(t: usize, rng: &mut impl Rng) -> RationalMatrix {
    if t == 2 {
        // [[a, b], [c, (1+bc)/a]] has determinant one for any a != 0.
        let a = rat_int(small_nonzero(rng));
        let b = rat_int(rng.random_range(-3i64..=3));
        let c = rat_int(rng.random_range(-3i64..=3));
        let d = (Rat::one() + &b * &c) / &a;
        return RationalMatrix::from_rows(vec![vec![a, b], vec![c, d]]);
    }
    // Scale the first row of a random invertible matrix by 1/det.
    let m = random_gl(t, rng);
    let det = m.det();
    let rows: Vec<Vec<Rat>> = (0..t)
        .map(|i| {
            (0..t)
                .map(|j| {
                    let e = m.get(i, j).clone();
                    if i == 0 {
                        e / &det
                    } else {
                        e
                    }
                })
                .collect()
        })
        .collect();
    RationalMatrix::from_rows(rows)
}

fn random_reflection(t: usize, rng: &mut impl Rng) -> RationalMatrix {
    // I - 2 v v^tr / (v^tr v) for a rational vector with v^tr v != 0.
    loop {
        let v: Vec<Rat> = (0..t)
            .map(|_| rat_int(rng.random_range(-3i64..=3)))
            .collect();
        let norm: Rat = v.iter().map(|e| e * e).sum();
        if norm.is_zero() {
            continue;
        }
        let mut m = RationalMatrix::identity(t);
        for i in 0..t {
            for j in 0..t {
                let delta = rat_int(2) * &v[i] * &v[j] / &norm;
                *m.get_mut(i, j) -= delta;
            }
        }
        return m;
    }
}

fn random_orthogonal(t: usize, rng: &mut impl Rng) -> RationalMatrix {
    let mut m = RationalMatrix::identity(t);
    for _ in 0..t.max(2) {
        m = m.mul(&random_reflection(t, rng));
    }
    m
}

fn random_symplectic(t: usize, rng: &mut impl Rng) -> RationalMatrix {
    assert!(t.is_multiple_of(2));
    let half = t / 2;
    let mut m = RationalMatrix::identity(t);
    for _ in 0..3 {
        let factor = match rng.random_range(0..3) {
            0 => {
                // [[A, 0], [0, (A^tr)^{-1}]]
                let a = random_gl(half, rng);
                let a_inv_tr = a.inverse().unwrap().transpose();
                let mut block = RationalMatrix::zeros(t);
                for i in 0..half {
                    for j in 0..half {
                        *block.get_mut(i, j) = a.get(i, j).clone();
                        *block.get_mut(half + i, half + j) = a_inv_tr.get(i, j).clone();
                    }
                }
                block
            }
            1 => {
                // [[I, B], [0, I]] with B symmetric
                let mut b = RationalMatrix::zeros(half);
                for i in 0..half {
                    for j in i..half {
                        let e = rat_int(rng.random_range(-3i64..=3));
                        *b.get_mut(i, j) = e.clone();
                        *b.get_mut(j, i) = e;
                    }
                }
                let mut block = RationalMatrix::identity(t);
                for i in 0..half {
                    for j in 0..half {
                        *block.get_mut(i, half + j) = b.get(i, j).clone();
                    }
                }
                block
            }
            _ => symplectic_form(t),
        };
        m = m.mul(&factor);
    }
    m
}

/// A pseudo-random element of the group named by `spec`.
pub fn random_element(spec: &ActionSpec, rng: &mut impl Rng) -> RationalMatrix {
    let t = spec.t as usize;
    let m = match spec.group {
        Group::Gl => random_gl(t, rng),
        Group::Sl => random_sl(t, rng),
        Group::O => random_orthogonal(t, rng),
        Group::Sp => random_symplectic(t, rng),
    };
    debug_assert!(m.satisfies(spec), "sampled element outside the group");
    m
}

/// `count` seeded pseudo-random group elements; the same seed always
/// produces the same elements.
pub fn seeded_elements(spec: &ActionSpec, count: usize, seed: u64) -> Vec<RationalMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_element(spec, &mut rng)).collect()
}
