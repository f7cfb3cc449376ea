use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::variable::{VarKind, Variable};

/// A power product of variables, stored sparsely. No zero exponents are kept.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    exps: BTreeMap<Variable, u32>,
}

impl Monomial {
    /// The empty product.
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Variable) -> Self {
        Self::from_pairs([(v, 1)])
    }

    pub fn from_pairs<I: IntoIterator<Item = (Variable, u32)>>(pairs: I) -> Self {
        let mut exps: BTreeMap<Variable, u32> = BTreeMap::new();
        for (v, e) in pairs {
            if e == 0 {
                continue;
            }
            let slot = exps.entry(v).or_insert(0);
            *slot = slot.checked_add(e).expect("exponent overflow");
        }
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        self.exps.get(&v).copied().unwrap_or(0)
    }

    /// Variables with their exponents, in the global variable order.
    pub fn iter(&self) -> impl Iterator<Item = (Variable, u32)> + '_ {
        self.exps.iter().map(|(&v, &e)| (v, e))
    }

    pub fn variables(&self) -> impl DoubleEndedIterator<Item = Variable> + '_ {
        self.exps.keys().copied()
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.values().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (&v, &e) in &other.exps {
            let slot = exps.entry(v).or_insert(0);
            *slot = slot.checked_add(e).expect("exponent overflow");
        }
        Monomial { exps }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        let exps = self
            .exps
            .iter()
            .map(|(&v, &e)| (v, e.checked_mul(k).expect("exponent overflow")))
            .collect();
        Monomial { exps }
    }

    /// Splits into the U/UBar part and the X/Y part.
    pub fn split_u(&self) -> (Monomial, Monomial) {
        let mut u_part = BTreeMap::new();
        let mut xy_part = BTreeMap::new();
        for (&v, &e) in &self.exps {
            if v.is_u_side() {
                u_part.insert(v, e);
            } else {
                xy_part.insert(v, e);
            }
        }
        (Monomial { exps: u_part }, Monomial { exps: xy_part })
    }

    /// Restriction to one kind of variable.
    pub fn filter_kind(&self, kind: VarKind) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .filter(|(v, _)| v.kind == kind)
                .map(|(&v, &e)| (v, e))
                .collect(),
        }
    }
}

/// Graded order: total degree first, then lexicographic in the global
/// variable order with earlier variables dominating. Larger means printed
/// earlier.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let mut lhs = self.exps.iter();
        let mut rhs = other.exps.iter();
        loop {
            match (lhs.next(), rhs.next()) {
                (None, None) => return Ordering::Equal,
                // Exhausted side has exponent 0 at the other's next variable.
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((va, ea)), Some((vb, eb))) => {
                    match va.cmp(vb) {
                        // The smaller variable is the more significant one;
                        // the side holding it has a positive exponent there.
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => match ea.cmp(eb) {
                            Ordering::Equal => continue,
                            ord => return ord,
                        },
                    }
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in self.iter() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{v}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
