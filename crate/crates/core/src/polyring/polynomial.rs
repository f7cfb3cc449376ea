use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::variable::{VarKind, Variable};
use super::PolyError;
use crate::numutil::Rat;

/// Sparse multivariate polynomial over the exact rationals.
///
/// Invariant: no stored coefficient is zero. Terms are keyed by the graded
/// term order, so iteration (and printing, which walks terms largest first)
/// is deterministic.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rat>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Polynomial { terms }
    }

    pub fn var(v: Variable) -> Self {
        Polynomial::term(Rat::one(), Monomial::var(v))
    }

    pub fn term(coeff: Rat, monomial: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(monomial, coeff);
        }
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending term order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// The single monomial of `p` when `p` is a monomial with coefficient 1.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        (c.is_one()).then_some(m)
    }

    pub fn variables(&self) -> BTreeSet<Variable> {
        self.terms.keys().flat_map(|m| m.variables()).collect()
    }

    /// Largest total degree among terms; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// `Some(d)` when all terms share total degree `d`; zero is homogeneous
    /// of every degree, reported as `None`.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut degrees = self.terms.keys().map(|m| m.total_degree());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn homogeneous_components(&self) -> BTreeMap<u64, Polynomial> {
        let mut out: BTreeMap<u64, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.total_degree())
                .or_default()
                .add_term(c.clone(), m.clone());
        }
        out
    }

    fn add_term(&mut self, coeff: Rat, monomial: Monomial) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Applies the ring homomorphism sending each variable to its image.
    /// Every variable occurring in `self` must have an image.
    pub fn substitute(
        &self,
        images: &BTreeMap<Variable, Polynomial>,
    ) -> Result<Polynomial, PolyError> {
        let mut power_cache: HashMap<(Variable, u32), Polynomial> = HashMap::new();
        let mut result = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut term_image = Polynomial::constant(c.clone());
            for (v, e) in m.iter() {
                let image = images.get(&v).ok_or(PolyError::MissingImage(v))?;
                let powered = power_cache.entry((v, e)).or_insert_with(|| image.pow(e));
                term_image = &term_image * powered;
            }
            result += term_image;
        }
        Ok(result)
    }

    /// Groups terms by their U/UBar content: returns pairs
    /// `(u-monomial, coefficient polynomial in the X/Y variables)` whose
    /// sum of products reassembles `self`. Pairs are emitted with the
    /// largest u-monomial first.
    pub fn collect_u(&self) -> Vec<(Monomial, Polynomial)> {
        let mut groups: BTreeMap<Monomial, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (u_part, xy_part) = m.split_u();
            groups
                .entry(u_part)
                .or_default()
                .add_term(c.clone(), xy_part);
        }
        groups.into_iter().rev().collect()
    }

    /// True when every variable is a Y variable with row at most `rows`.
    pub fn is_y_polynomial(&self, rows: u16) -> bool {
        self.variables()
            .iter()
            .all(|v| v.kind == VarKind::Y && v.row <= rows)
    }
}

/// Per-row exponent totals of a Y-monomial, e.g. `(1, 1)` for `a1*b2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiDegree(pub Vec<u64>);

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// Row multidegree of a monomial in the Y variables with `t` rows.
pub fn multidegree(mu: &Monomial, t: u16) -> Result<MultiDegree, PolyError> {
    let mut rows = vec![0u64; t as usize];
    for (v, e) in mu.iter() {
        if v.kind != VarKind::Y || v.row > t {
            return Err(PolyError::ForeignVariable(v));
        }
        rows[(v.row - 1) as usize] += e as u64;
    }
    Ok(MultiDegree(rows))
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(c.clone(), m.clone());
        }
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl AddAssign for Polynomial {
    fn add_assign(&mut self, rhs: Polynomial) {
        for (m, c) in rhs.terms {
            self.add_term(c, m);
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(-c.clone(), m.clone());
        }
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ca * cb, ma.mul(mb));
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

fn fmt_rat(c: &Rat, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if c.denom().is_one() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

fn fmt_variable(v: Variable, alias: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if alias && v.kind == VarKind::Y && v.row <= 2 {
        let letter = if v.row == 1 { 'a' } else { 'b' };
        write!(f, "{}{}", letter, v.col)
    } else {
        write!(f, "{v}")
    }
}

pub(crate) fn fmt_monomial(m: &Monomial, alias: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for (v, e) in m.iter() {
        if !first {
            write!(f, "*")?;
        }
        first = false;
        fmt_variable(v, alias, f)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Y variables in rows 1 and 2 print as `a<col>`/`b<col>` exactly when the
/// polynomial contains no other kind of variable; matrices with X, U, or
/// deeper Y rows print every variable in bracket form.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let alias = self.is_y_polynomial(2);
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if m.is_one() {
                fmt_rat(&mag, f)?;
            } else {
                if !mag.is_one() {
                    fmt_rat(&mag, f)?;
                    write!(f, "*")?;
                }
                fmt_monomial(m, alias, f)?;
            }
        }
        Ok(())
    }
}

/// A monomial rendered under the same aliasing rule `Display` uses.
pub struct MonomialDisplay<'a> {
    pub monomial: &'a Monomial,
    pub alias: bool,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomial.is_one() {
            write!(f, "1")
        } else {
            fmt_monomial(self.monomial, self.alias, f)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numutil::{rat, rat_int};

    fn pa(i: u16) -> Polynomial {
        Polynomial::var(Variable::a(i))
    }

    fn pb(i: u16) -> Polynomial {
        Polynomial::var(Variable::b(i))
    }

    #[test]
    fn additive_inverse_cancels() {
        let p = &pa(1) + &(-&pa(1));
        assert!(p.is_zero());
    }

    #[test]
    fn values_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Polynomial>();
        assert_send_sync::<Monomial>();
        assert_send_sync::<Variable>();
        assert_send_sync::<MultiDegree>();
    }

    #[test]
    fn doubling_collects() {
        let ab = &pa(1) * &pb(2);
        let sum = &ab + &ab;
        assert_eq!(sum, ab.scale(&rat_int(2)));
        assert_eq!(sum.num_terms(), 1);
    }

    #[test]
    fn exact_fraction_addition() {
        let p = pa(1).scale(&rat(1, 2)) + pa(1).scale(&rat(1, 3));
        assert_eq!(p, pa(1).scale(&rat(5, 6)));
    }

    #[test]
    fn difference_of_squares() {
        let lhs = (&pa(1) + &pb(1)) * (&pa(1) - &pb(1));
        let rhs = &(&pa(1) * &pa(1)) - &(&pb(1) * &pb(1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn minor_product_expands() {
        // Delta_{1,2} * Delta_{2,1} = -Delta_{1,2}^2
        let d12 = &(&pa(1) * &pb(2)) - &(&pa(2) * &pb(1));
        let d21 = &(&pa(2) * &pb(1)) - &(&pa(1) * &pb(2));
        assert_eq!(&d12 * &d21, -&(&d12 * &d12));
    }

    #[test]
    fn one_is_multiplicative_identity() {
        let p = &(&pa(1) + &pb(2)) * &pa(3);
        assert_eq!(&Polynomial::one() * &p, p);
    }

    #[test]
    fn substitute_extends_assignment() {
        // a1 -> a1*u11 + b1*u12
        let image = &(&pa(1) * &Polynomial::var(Variable::u(1, 1)))
            + &(&pb(1) * &Polynomial::var(Variable::u(1, 2)));
        let images = BTreeMap::from([(Variable::a(1), image.clone())]);
        assert_eq!(pa(1).substitute(&images).unwrap(), image);
        // constants need no images
        assert_eq!(
            Polynomial::one().substitute(&BTreeMap::new()).unwrap(),
            Polynomial::one()
        );
        // missing image is an error
        assert!(matches!(
            pa(2).substitute(&images),
            Err(PolyError::MissingImage(_))
        ));
    }

    #[test]
    fn collect_u_splits_and_reassembles() {
        let u11 = Polynomial::var(Variable::u(1, 1));
        let u12 = Polynomial::var(Variable::u(1, 2));
        let p = &(&pa(1) * &u11) + &(&pb(1) * &u12);
        let pairs = p.collect_u();
        assert_eq!(pairs.len(), 2);
        assert_eq!(pairs[0].0, Monomial::var(Variable::u(1, 1)));
        assert_eq!(pairs[0].1, pa(1));
        assert_eq!(pairs[1].0, Monomial::var(Variable::u(1, 2)));
        assert_eq!(pairs[1].1, pb(1));

        let no_u = &pa(1) + &pb(2);
        let pairs = no_u.collect_u();
        assert_eq!(pairs, vec![(Monomial::one(), no_u.clone())]);
    }

    #[test]
    fn multidegree_counts_rows() {
        let ab = Monomial::from_pairs([(Variable::a(1), 1), (Variable::b(2), 1)]);
        assert_eq!(multidegree(&ab, 2).unwrap(), MultiDegree(vec![1, 1]));
        let sq = Monomial::from_pairs([(Variable::a(1), 2), (Variable::b(1), 1)]);
        assert_eq!(multidegree(&sq, 2).unwrap(), MultiDegree(vec![2, 1]));
        assert_eq!(
            multidegree(&Monomial::one(), 2).unwrap(),
            MultiDegree(vec![0, 0])
        );
        let foreign = Monomial::var(Variable::x(1, 1));
        assert!(matches!(
            multidegree(&foreign, 2),
            Err(PolyError::ForeignVariable(_))
        ));
    }

    #[test]
    fn display_uses_aliases_only_for_two_row_y() {
        let p = &(&pa(1) * &pb(2)).scale(&rat(1, 2)) - &(&pa(2) * &pb(1)).scale(&rat(1, 2));
        assert_eq!(p.to_string(), "1/2*a1*b2 - 1/2*a2*b1");
        let q = &Polynomial::var(Variable::x(1, 1)) * &Polynomial::var(Variable::y(1, 1));
        assert_eq!(q.to_string(), "x[1][1]*y[1][1]");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::constant(rat(-3, 4)).to_string(), "-3/4");
    }

    #[test]
    fn display_orders_terms_like_binomial_expansion() {
        let d12 = &(&pa(1) * &pb(2)) - &(&pa(2) * &pb(1));
        let p = d12.pow(3).scale(&rat(1, 4));
        assert_eq!(
            p.to_string(),
            "1/4*a1^3*b2^3 - 3/4*a1^2*a2*b1*b2^2 + 3/4*a1*a2^2*b1^2*b2 - 1/4*a2^3*b1^3"
        );
    }
}
