use itertools::Itertools;
use num_bigint::BigInt;

use crate::numutil::factorial;

/// A permutation of `{0, .., d-1}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(d: usize) -> Self {
        Permutation {
            images: (0..d).collect(),
        }
    }

    /// Builds from one-line images; panics unless `images` is a bijection.
    pub fn from_images(images: Vec<usize>) -> Self {
        let d = images.len();
        let mut seen = vec![false; d];
        for &i in &images {
            assert!(i < d && !seen[i], "not a permutation");
            seen[i] = true;
        }
        Permutation { images }
    }

    pub fn transposition(d: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (0..d).collect();
        images.swap(i, j);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self . other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: (0..self.degree())
                .map(|i| self.apply(other.apply(i)))
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn cycle_count(&self) -> usize {
        self.cycle_lengths().len()
    }

    fn cycle_lengths(&self) -> Vec<usize> {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut lengths = Vec::new();
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut at = start;
            while !seen[at] {
                seen[at] = true;
                at = self.apply(at);
                len += 1;
            }
            lengths.push(len);
        }
        lengths
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::new(self.cycle_lengths())
    }

    /// All `d!` permutations, in a fixed deterministic order.
    pub fn all(d: usize) -> Vec<Permutation> {
        (0..d)
            .permutations(d)
            .map(Permutation::from_images)
            .collect()
    }
}

/// An integer partition, the cycle type of a permutation: parts are stored
/// weakly decreasing.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    pub fn new(mut parts: Vec<usize>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// A canonical permutation with this cycle type.
    pub fn representative(&self) -> Permutation {
        let mut images: Vec<usize> = Vec::with_capacity(self.sum());
        let mut base = 0;
        for &len in &self.parts {
            for k in 0..len {
                images.push(base + (k + 1) % len);
            }
            base += len;
        }
        Permutation::from_images(images)
    }

    /// Number of permutations in `S_d` with this cycle type:
    /// `d! / prod_i (i^{m_i} m_i!)` where `m_i` counts parts equal to `i`.
    pub fn class_size(&self) -> BigInt {
        let d = self.sum() as u64;
        let mut denom = BigInt::from(1u32);
        let mut run = 0u64;
        let mut prev = 0usize;
        for &p in &self.parts {
            if p == prev {
                run += 1;
            } else {
                denom *= factorial(run);
                run = 1;
                prev = p;
            }
            denom *= BigInt::from(p);
        }
        denom *= factorial(run);
        factorial(d) / denom
    }

    /// All partitions of `d`, largest-part-first within each partition,
    /// enumerated in a fixed order.
    pub fn partitions(d: usize) -> Vec<CycleType> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn go(
            remaining: usize,
            max_part: usize,
            current: &mut Vec<usize>,
            out: &mut Vec<CycleType>,
        ) {
            if remaining == 0 {
                out.push(CycleType {
                    parts: current.clone(),
                });
                return;
            }
            for part in (1..=remaining.min(max_part)).rev() {
                current.push(part);
                go(remaining - part, part, current, out);
                current.pop();
            }
        }
        go(d, d, &mut current, &mut out);
        out
    }
}

impl std::fmt::Display for CycleType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}
