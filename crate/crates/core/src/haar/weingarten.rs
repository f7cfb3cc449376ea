use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};

use num_traits::Zero;

use super::perm::{CycleType, Permutation};
use super::HaarError;
use crate::linalg::{solve_exact, LinSolve};
use crate::numutil::Rat;

/// Memoized Weingarten values, keyed by `(degree, cycle type, dimension)`.
///
/// `Wg(sigma, t)` is the `(sigma, id)` entry of the inverse of the Gram
/// matrix `G(sigma, tau) = t^{#cycles(sigma tau^-1)}` on `S_d x S_d`; it
/// depends on `sigma` only through its cycle type, so the table solves the
/// class-collapsed system of size `p(d)` instead of inverting `d! x d!`.
/// Cache key: `(degree, cycle-type parts, dimension)`.
type TableKey = (usize, Vec<usize>, u64);

pub struct WeingartenTable {
    cache: RwLock<HashMap<TableKey, Rat>>,
}

static GLOBAL: LazyLock<WeingartenTable> = LazyLock::new(|| WeingartenTable {
    cache: RwLock::new(HashMap::new()),
});

impl WeingartenTable {
    /// The process-wide table shared by all integrations.
    pub fn global() -> &'static WeingartenTable {
        &GLOBAL
    }

    /// `Wg` at cycle type `ct`; errors below the invertible regime `t >= d`.
    pub fn value(&self, ct: &CycleType, t: u64) -> Result<Rat, HaarError> {
        let d = ct.sum();
        if t < d as u64 {
            return Err(HaarError::SingularGram { degree: d, dim: t });
        }
        self.value_any_regime(ct, t)
    }

    /// `Wg` at cycle type `ct` in any regime. Below `t >= d` the Gram
    /// matrix is only positive semidefinite and `Wg` is its Moore-Penrose
    /// solution, still an exact rational.
    pub fn value_any_regime(&self, ct: &CycleType, t: u64) -> Result<Rat, HaarError> {
        let d = ct.sum();
        let key = (d, ct.parts().to_vec(), t);
        if let Some(hit) = self.cache.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let solved = if t >= d as u64 {
            solve_class_system(d, t)?
        } else {
            solve_pseudo_inverse(d, t)
        };
        let mut guard = self.cache.write().unwrap();
        for (parts, value) in &solved {
            guard.insert((d, parts.clone(), t), value.clone());
        }
        Ok(guard[&key].clone())
    }
}

/// Solves, for every cycle-type class of `S_d` at once, the defining system
/// `sum_tau t^{#cycles(sigma tau^-1)} Wg(tau) = [sigma = id]`.
fn solve_class_system(d: usize, t: u64) -> Result<Vec<(Vec<usize>, Rat)>, HaarError> {
    let classes = CycleType::partitions(d);
    let reps: Vec<Permutation> = classes.iter().map(|ct| ct.representative()).collect();
    let class_index: HashMap<Vec<usize>, usize> = classes
        .iter()
        .enumerate()
        .map(|(i, ct)| (ct.parts().to_vec(), i))
        .collect();

    let mut matrix = vec![vec![Rat::zero(); classes.len()]; classes.len()];
    for tau in Permutation::all(d) {
        let tau_inv = tau.inverse();
        let col = class_index[tau.cycle_type().parts()];
        for (row, rep) in reps.iter().enumerate() {
            let cycles = rep.compose(&tau_inv).cycle_count() as u32;
            matrix[row][col] += Rat::from_integer(num_bigint::BigInt::from(t).pow(cycles));
        }
    }

    let identity_class = class_index[CycleType::new(vec![1; d.max(1)]).parts()];
    let mut rhs = vec![Rat::zero(); classes.len()];
    rhs[identity_class] = Rat::from_integer(1.into());

    match solve_exact(&matrix, &rhs) {
        LinSolve::Solved { x, free_vars: 0 } => Ok(classes
            .iter()
            .zip(x)
            .map(|(ct, v)| (ct.parts().to_vec(), v))
            .collect()),
        _ => Err(HaarError::SingularGram { degree: d, dim: t }),
    }
}

/// `Wg(sigma, t)` on the singular side `t < d`: the minimum-norm solution
/// of `G w = e_id` over the full group algebra. `w = B z` for a basis `B`
/// of the column space, where `B^tr G B z = B^tr e_id`; every step stays
/// rational because `G` is symmetric positive semidefinite.
fn solve_pseudo_inverse(d: usize, t: u64) -> Vec<(Vec<usize>, Rat)> {
    let perms = Permutation::all(d);
    let size = perms.len();
    let gram: Vec<Vec<Rat>> = perms
        .iter()
        .map(|sigma| {
            perms
                .iter()
                .map(|tau| {
                    let cycles = sigma.compose(&tau.inverse()).cycle_count() as u32;
                    Rat::from_integer(num_bigint::BigInt::from(t).pow(cycles))
                })
                .collect()
        })
        .collect();

    // Column-space basis by naive elimination on a copy.
    let mut work = gram.clone();
    let mut basis_cols: Vec<usize> = Vec::new();
    let mut row = 0usize;
    for col in 0..size {
        let Some(pivot) = (row..size).find(|&r| !work[r][col].is_zero()) else {
            continue;
        };
        work.swap(row, pivot);
        let pivot_value = work[row][col].clone();
        for r in (row + 1)..size {
            if work[r][col].is_zero() {
                continue;
            }
            let factor = &work[r][col] / &pivot_value;
            let pivot_row = work[row].clone();
            for (entry, above) in work[r][col..].iter_mut().zip(&pivot_row[col..]) {
                *entry -= &factor * above;
            }
        }
        basis_cols.push(col);
        row += 1;
        if row == size {
            break;
        }
    }

    let rank = basis_cols.len();
    // Reduced system B^tr G B z = B^tr e_id; with B made of columns of the
    // symmetric G, (B^tr G B)[i][j] = (G^3)[b_i][b_j] and (B^tr e_id)[i] =
    // G[b_i][id].
    let id_pos = perms
        .iter()
        .position(|p| *p == Permutation::identity(d))
        .expect("identity present");
    // gb[k][j] = (G^2)[k][b_j]
    let gb: Vec<Vec<Rat>> = (0..size)
        .map(|k| {
            basis_cols
                .iter()
                .map(|&bj| {
                    let mut acc = Rat::zero();
                    for (left, row) in gram[k].iter().zip(&gram) {
                        acc += left * &row[bj];
                    }
                    acc
                })
                .collect()
        })
        .collect();
    let mut reduced = vec![vec![Rat::zero(); rank]; rank];
    for (i, &bi) in basis_cols.iter().enumerate() {
        for j in 0..rank {
            let mut acc = Rat::zero();
            for k in 0..size {
                acc += &gram[k][bi] * &gb[k][j];
            }
            reduced[i][j] = acc;
        }
    }
    let rhs: Vec<Rat> = basis_cols
        .iter()
        .map(|&b| gram[b][id_pos].clone())
        .collect();
    let LinSolve::Solved { x: z, free_vars: 0 } = solve_exact(&reduced, &rhs) else {
        unreachable!("reduced Gram system is positive definite");
    };

    let mut values: HashMap<Vec<usize>, Rat> = HashMap::new();
    for (row, sigma) in perms.iter().enumerate() {
        let mut w = Rat::zero();
        for (j, &b) in basis_cols.iter().enumerate() {
            w += &gram[row][b] * &z[j];
        }
        let parts = sigma.cycle_type().parts().to_vec();
        match values.get(&parts) {
            Some(seen) => debug_assert_eq!(seen, &w, "Wg must be a class function"),
            None => {
                values.insert(parts, w);
            }
        }
    }
    values.into_iter().collect()
}

/// `Wg(sigma, t)` for a concrete permutation.
pub fn unitary_weingarten(sigma: &Permutation, t: u64) -> Result<Rat, HaarError> {
    if sigma.degree() == 0 {
        return Ok(Rat::from_integer(1.into()));
    }
    WeingartenTable::global().value(&sigma.cycle_type(), t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numutil::{rat, rat_int};

    #[test]
    fn table_is_safe_for_concurrent_readers() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<WeingartenTable>();
        let threads: Vec<_> = (0..4)
            .map(|i| {
                std::thread::spawn(move || {
                    let ct = CycleType::new(vec![2, 1]);
                    WeingartenTable::global().value(&ct, 3 + (i % 2)).unwrap()
                })
            })
            .collect();
        for t in threads {
            t.join().unwrap();
        }
    }

    #[test]
    fn degree_one_is_reciprocal_dimension() {
        for t in 1..=5 {
            let wg = unitary_weingarten(&Permutation::identity(1), t).unwrap();
            assert_eq!(wg, rat(1, t as i64));
        }
    }

    #[test]
    fn degree_two_closed_forms() {
        // Inverting [[t^2, t], [t, t^2]] gives 1/(t^2-1) and -1/(t(t^2-1)).
        for t in 2i64..=5 {
            let id = unitary_weingarten(&Permutation::identity(2), t as u64).unwrap();
            let swap = unitary_weingarten(&Permutation::transposition(2, 0, 1), t as u64).unwrap();
            assert_eq!(id, rat(1, t * t - 1));
            assert_eq!(swap, rat(-1, t * (t * t - 1)));
        }
        let id2 = unitary_weingarten(&Permutation::identity(2), 2).unwrap();
        assert_eq!(id2, rat(1, 3));
        let swap2 = unitary_weingarten(&Permutation::transposition(2, 0, 1), 2).unwrap();
        assert_eq!(swap2, rat(-1, 6));
    }

    #[test]
    fn below_regime_is_an_error() {
        let err = unitary_weingarten(&Permutation::identity(3), 2).unwrap_err();
        assert_eq!(err, HaarError::SingularGram { degree: 3, dim: 2 });
    }

    #[test]
    fn pseudo_inverse_values_at_degree_three() {
        // Frozen from the character expansion over partitions with at most
        // two rows: (1/36)[(dim la)^2 chi_la(sigma) / s_la(1,1)] summed over
        // la in {[3], [2,1]} with s values 4 and 2.
        let table = WeingartenTable::global();
        assert_eq!(
            table
                .value_any_regime(&CycleType::new(vec![1, 1, 1]), 2)
                .unwrap(),
            rat(17, 144)
        );
        assert_eq!(
            table
                .value_any_regime(&CycleType::new(vec![2, 1]), 2)
                .unwrap(),
            rat(1, 144)
        );
        assert_eq!(
            table.value_any_regime(&CycleType::new(vec![3]), 2).unwrap(),
            rat(-7, 144)
        );
    }

    #[test]
    fn pseudo_inverse_satisfies_moore_penrose_conditions() {
        // w lies in the column space by construction; check the residual
        // G w - e_id is orthogonal to it, at d = 3, t = 2.
        let d = 3;
        let t = 2u64;
        let perms = Permutation::all(d);
        let table = WeingartenTable::global();
        let w: Vec<Rat> = perms
            .iter()
            .map(|p| table.value_any_regime(&p.cycle_type(), t).unwrap())
            .collect();
        let gram: Vec<Vec<Rat>> = perms
            .iter()
            .map(|sigma| {
                perms
                    .iter()
                    .map(|tau| {
                        let c = sigma.compose(&tau.inverse()).cycle_count() as u32;
                        Rat::from_integer(num_bigint::BigInt::from(t).pow(c))
                    })
                    .collect()
            })
            .collect();
        let id_pos = perms
            .iter()
            .position(|p| *p == Permutation::identity(d))
            .unwrap();
        let residual: Vec<Rat> = (0..perms.len())
            .map(|r| {
                let mut acc = Rat::zero();
                for (c, wc) in w.iter().enumerate() {
                    acc += &gram[r][c] * wc;
                }
                if r == id_pos {
                    acc -= rat_int(1);
                }
                acc
            })
            .collect();
        for col in 0..perms.len() {
            let mut dot = Rat::zero();
            for (row, res) in gram.iter().zip(&residual) {
                dot += &row[col] * res;
            }
            assert_eq!(dot, rat_int(0), "residual not orthogonal at column {col}");
        }
    }

    #[test]
    fn value_is_class_function() {
        for d in 1..=4 {
            let t = 5u64;
            for sigma in Permutation::all(d) {
                let direct = unitary_weingarten(&sigma, t).unwrap();
                let by_type = WeingartenTable::global()
                    .value(&sigma.cycle_type(), t)
                    .unwrap();
                assert_eq!(direct, by_type);
            }
        }
    }

    /// Independent oracle: solve the full (uncollapsed) d! x d! Gram system
    /// and compare entrywise with the class-collapsed solution.
    #[test]
    fn matches_full_gram_inverse_up_to_degree_three() {
        for d in 1..=3usize {
            for t in (d as u64)..=4 {
                let perms = Permutation::all(d);
                let matrix: Vec<Vec<Rat>> = perms
                    .iter()
                    .map(|sigma| {
                        perms
                            .iter()
                            .map(|tau| {
                                let cycles = sigma.compose(&tau.inverse()).cycle_count() as u32;
                                Rat::from_integer(num_bigint::BigInt::from(t).pow(cycles))
                            })
                            .collect()
                    })
                    .collect();
                let mut rhs = vec![Rat::zero(); perms.len()];
                let id_pos = perms
                    .iter()
                    .position(|p| *p == Permutation::identity(d))
                    .unwrap();
                rhs[id_pos] = rat_int(1);
                let LinSolve::Solved { x, free_vars: 0 } = solve_exact(&matrix, &rhs) else {
                    panic!("full Gram system singular at d={d}, t={t}");
                };
                for (sigma, expected) in perms.iter().zip(x) {
                    assert_eq!(unitary_weingarten(sigma, t).unwrap(), expected);
                }
            }
        }
    }

    /// The class-collapsed solution must satisfy the original defining
    /// system row by row; checked at degree four where full inversion is
    /// too expensive.
    #[test]
    fn satisfies_defining_system_at_degree_four() {
        let d = 4;
        for t in [4u64, 5] {
            for ct in CycleType::partitions(d) {
                let rep = ct.representative();
                let mut acc = Rat::zero();
                for tau in Permutation::all(d) {
                    let cycles = rep.compose(&tau.inverse()).cycle_count() as u32;
                    let gram = Rat::from_integer(num_bigint::BigInt::from(t).pow(cycles));
                    acc += gram * unitary_weingarten(&tau, t).unwrap();
                }
                let expected = if ct == CycleType::new(vec![1, 1, 1, 1]) {
                    rat_int(1)
                } else {
                    rat_int(0)
                };
                assert_eq!(acc, expected, "row {ct} at t={t}");
            }
        }
    }
}
