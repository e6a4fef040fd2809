//! Integer indexing of the symmetric group.
//!
//! Permutations of `{1, …, n}` in one-line notation are ranked into
//! `[0, n!)` through their Lehmer code in the factorial number system. The
//! resulting order is lexicographic and the identity ranks 0. Every dense
//! vector over states elsewhere in the crate addresses its entries through
//! this bijection.
//!
//! All operations are pure functions on immutable values and can be called
//! from any number of threads.

use thiserror::Error;

/// Hard cap on the group order. 12! ≈ 4.8·10⁸ states is the last order whose
/// ranks are still cheap integers; see [`N_FULL_VECTOR_MAX`] for the
/// practical full-vector limit.
pub const N_MAX: usize = 12;

/// Largest order for which full n!-length vectors are practical on a desk
/// machine (11! ≈ 4.0·10⁷ states ≈ 320 MB per f64 vector).
pub const N_FULL_VECTOR_MAX: usize = 11;

const FACTORIALS: [u64; N_MAX + 1] = [
    1,
    1,
    2,
    6,
    24,
    120,
    720,
    5_040,
    40_320,
    362_880,
    3_628_800,
    39_916_800,
    479_001_600,
];

/// n! for n ≤ [`N_MAX`].
///
/// Panics if `n > N_MAX`; orders beyond the cap are rejected at type
/// construction, so this is unreachable from validated values.
pub fn factorial(n: usize) -> u64 {
    FACTORIALS[n]
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("order n={0} outside the supported range 2..={N_MAX}")]
    OrderOutOfRange(usize),
    #[error("entry {0} is not a label in 1..={1}")]
    LabelOutOfRange(usize, usize),
    #[error("label {0} appears more than once")]
    DuplicateLabel(usize),
    #[error("index {index} out of range: n={n} has {max} states")]
    IndexOutOfRange { index: u64, n: usize, max: u64 },
    #[error("swap position {0} out of range 1..={1}")]
    PositionOutOfRange(usize, usize),
}

/// A permutation of `{1, …, n}` in one-line notation `(x_1, …, x_n)`.
///
/// Labels are 1-based; positions in the public API are 1-based as well,
/// while internal buffers are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    entries: Vec<u8>,
}

/// A dense integer rank in `[0, n!)` together with its order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PermIndex {
    value: usize,
    n: usize,
}

impl PermIndex {
    pub fn new(value: usize, n: usize) -> Result<Self, PermError> {
        check_order(n)?;
        let max = factorial(n);
        if (value as u64) >= max {
            return Err(PermError::IndexOutOfRange {
                index: value as u64,
                n,
                max,
            });
        }
        Ok(Self { value, n })
    }

    pub fn value(&self) -> usize {
        self.value
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

fn check_order(n: usize) -> Result<(), PermError> {
    if !(2..=N_MAX).contains(&n) {
        return Err(PermError::OrderOutOfRange(n));
    }
    Ok(())
}

impl Permutation {
    /// Validates that `entries` is a bijection on `{1, …, n}`.
    pub fn new(entries: Vec<u8>) -> Result<Self, PermError> {
        let n = entries.len();
        check_order(n)?;
        let mut seen = [false; N_MAX + 1];
        for &e in &entries {
            let e = e as usize;
            if e < 1 || e > n {
                return Err(PermError::LabelOutOfRange(e, n));
            }
            if seen[e] {
                return Err(PermError::DuplicateLabel(e));
            }
            seen[e] = true;
        }
        Ok(Self { entries })
    }

    pub fn identity(n: usize) -> Result<Self, PermError> {
        check_order(n)?;
        Ok(Self {
            entries: (1..=n as u8).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// One-line notation, `entries()[k]` = label at position k+1.
    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    /// Swaps the entries in positions `r` and `r+1` (1-based).
    ///
    /// This is an involution: applying it twice returns the input.
    pub fn apply_tau(&self, r: usize) -> Result<Self, PermError> {
        let n = self.n();
        if r < 1 || r > n - 1 {
            return Err(PermError::PositionOutOfRange(r, n - 1));
        }
        let mut entries = self.entries.clone();
        entries.swap(r - 1, r);
        Ok(Self { entries })
    }

    /// Lehmer rank: the number of permutations lexicographically smaller
    /// than `self`. Identity ↦ 0, reversal ↦ n!−1.
    pub fn rank(&self) -> PermIndex {
        let n = self.n();
        let mut acc: u64 = 0;
        for i in 0..n {
            let mut smaller = 0u64;
            for j in (i + 1)..n {
                if self.entries[j] < self.entries[i] {
                    smaller += 1;
                }
            }
            acc += smaller * FACTORIALS[n - 1 - i];
        }
        PermIndex {
            value: acc as usize,
            n,
        }
    }

    /// Inverse of [`Permutation::rank`].
    pub fn unrank(index: PermIndex) -> Self {
        let mut perm = [0u8; N_MAX];
        let mut code = [0u8; N_MAX];
        unrank_into(index.value, index.n, &mut perm, &mut code);
        Self {
            entries: perm[..index.n].to_vec(),
        }
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Decodes `index` into one-line notation plus its Lehmer code, without
/// allocating. `perm[..n]` receives labels, `code[..n]` the factorial-base
/// digits. Hot path for the matrix-free operators.
pub(crate) fn unrank_into(index: usize, n: usize, perm: &mut [u8; N_MAX], code: &mut [u8; N_MAX]) {
    debug_assert!((index as u64) < FACTORIALS[n]);
    let mut rem = index as u64;
    for i in 0..n {
        let f = FACTORIALS[n - 1 - i];
        code[i] = (rem / f) as u8;
        rem %= f;
    }
    let mut labels = [0u8; N_MAX];
    for (k, l) in labels[..n].iter_mut().enumerate() {
        *l = k as u8 + 1;
    }
    for i in 0..n {
        let d = code[i] as usize;
        perm[i] = labels[d];
        labels.copy_within(d + 1..n, d);
    }
}

/// Rank of the permutation obtained by swapping positions `r0` and `r0+1`
/// (0-based), computed in O(1) from the Lehmer code of the current state.
///
/// Swapping adjacent positions only perturbs the two code digits at those
/// positions: with a = perm[r0], b = perm[r0+1] and c_x = #{later entries
/// smaller than x}, the digits (code[r0], code[r0+1]) become
/// ([a<b] + c_b, c_a) where c_a, c_b are recovered from the old digits.
pub(crate) fn neighbor_rank(
    index: usize,
    perm: &[u8; N_MAX],
    code: &[u8; N_MAX],
    r0: usize,
    n: usize,
) -> usize {
    debug_assert!(r0 + 1 < n);
    let f1 = FACTORIALS[n - 1 - r0] as i64;
    let f2 = FACTORIALS[n - 2 - r0] as i64;
    let l0 = code[r0] as i64;
    let l1 = code[r0 + 1] as i64;
    let delta = if perm[r0] < perm[r0 + 1] {
        (1 + l1 - l0) * f1 + (l0 - l1) * f2
    } else {
        (l1 - l0) * f1 + (l0 - 1 - l1) * f2
    };
    (index as i64 + delta) as usize
}
