//! The algebra of `Ω^k = {-1, 0, 1}^k`: inner products, enumeration,
//! zero padding, and orbit representatives under signed coordinate
//! permutations.
//!
//! Vectors are value types with a total order. The order is the
//! balanced-ternary numeric order (most significant trit first), which is
//! the same as lexicographic order on the trit sequence. All enumerations
//! produced here follow that order, so searches built on top of them are
//! deterministic.

use std::fmt;
use thiserror::Error;

/// Largest supported dimension. `3^12` vectors is the most any exact
/// routine in this crate is prepared to enumerate.
pub const MAX_DIMENSION: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TernaryError {
    #[error("trit value {0} is not one of -1, 0, 1")]
    BadTrit(i8),
    #[error("vector dimension must be at least 1")]
    ZeroDimension,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("dimension {k} exceeds the enumeration cap {cap}")]
    CapExceeded { k: usize, cap: usize },
    #[error("cannot zero-pad a vector of dimension {from} to smaller dimension {to}")]
    PadShrinks { from: usize, to: usize },
}

/// An element of `Ω^k`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TernaryVector {
    trits: Vec<i8>,
}

impl TernaryVector {
    pub fn new(trits: Vec<i8>) -> Result<Self, TernaryError> {
        if trits.is_empty() {
            return Err(TernaryError::ZeroDimension);
        }
        for &t in &trits {
            if !(-1..=1).contains(&t) {
                return Err(TernaryError::BadTrit(t));
            }
        }
        Ok(Self { trits })
    }

    /// The zero vector of dimension `k`.
    pub fn zero(k: usize) -> Self {
        assert!(k >= 1, "dimension must be at least 1");
        Self { trits: vec![0; k] }
    }

    pub fn dimension(&self) -> usize {
        self.trits.len()
    }

    pub fn trits(&self) -> &[i8] {
        &self.trits
    }

    pub fn is_zero(&self) -> bool {
        self.trits.iter().all(|&t| t == 0)
    }

    /// Number of nonzero trits. Equals `⟨v, v⟩`.
    pub fn support(&self) -> usize {
        self.trits.iter().filter(|&&t| t != 0).count()
    }

    /// Standard integer inner product.
    pub fn dot(&self, other: &Self) -> Result<i32, TernaryError> {
        if self.dimension() != other.dimension() {
            return Err(TernaryError::DimensionMismatch(
                self.dimension(),
                other.dimension(),
            ));
        }
        Ok(self
            .trits
            .iter()
            .zip(&other.trits)
            .map(|(&a, &b)| i32::from(a) * i32::from(b))
            .sum())
    }

    pub fn negated(&self) -> Self {
        Self {
            trits: self.trits.iter().map(|&t| -t).collect(),
        }
    }

    /// Extend with trailing zeros to dimension `k2`. Inner products between
    /// padded vectors equal those of the originals.
    pub fn zero_pad(&self, k2: usize) -> Result<Self, TernaryError> {
        if k2 < self.dimension() {
            return Err(TernaryError::PadShrinks {
                from: self.dimension(),
                to: k2,
            });
        }
        let mut trits = self.trits.clone();
        trits.resize(k2, 0);
        Ok(Self { trits })
    }

    /// Canonical form under signed coordinate permutations: all nonzero
    /// trits become `+1` and are moved to the front.
    pub fn orbit_canonical_form(&self) -> Self {
        let s = self.support();
        let mut trits = vec![0i8; self.dimension()];
        for t in trits.iter_mut().take(s) {
            *t = 1;
        }
        Self { trits }
    }

    /// Position of this vector in the canonical enumeration of `Ω^k`.
    pub fn index(&self) -> usize {
        self.trits
            .iter()
            .fold(0usize, |acc, &t| acc * 3 + (t + 1) as usize)
    }

    /// Inverse of [`TernaryVector::index`].
    pub fn from_index(k: usize, mut index: usize) -> Self {
        assert!(k >= 1 && index < 3usize.pow(k as u32));
        let mut trits = vec![0i8; k];
        for t in trits.iter_mut().rev() {
            *t = (index % 3) as i8 - 1;
            index /= 3;
        }
        Self { trits }
    }
}

impl fmt::Display for TernaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, t) in self.trits.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for TernaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Least `k ≥ 0` with `3^k ≥ x`.
pub(crate) fn log3_ceil(x: usize) -> usize {
    let mut k = 0;
    let mut pow = 1usize;
    while pow < x {
        pow *= 3;
        k += 1;
    }
    k
}

/// Sign of an integer, as a trit.
pub fn sgn(x: i32) -> i8 {
    match x.cmp(&0) {
        std::cmp::Ordering::Less => -1,
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Greater => 1,
    }
}

fn check_cap(k: usize) -> Result<(), TernaryError> {
    if k == 0 {
        return Err(TernaryError::ZeroDimension);
    }
    if k > MAX_DIMENSION {
        return Err(TernaryError::CapExceeded {
            k,
            cap: MAX_DIMENSION,
        });
    }
    Ok(())
}

/// All `3^k` vectors of `Ω^k` (or `3^k - 1` when the zero vector is
/// excluded), in balanced-ternary order.
pub fn enumerate(k: usize, include_zero: bool) -> Result<Vec<TernaryVector>, TernaryError> {
    check_cap(k)?;
    let total = 3usize.pow(k as u32);
    let mut out = Vec::with_capacity(total);
    for index in 0..total {
        let v = TernaryVector::from_index(k, index);
        if include_zero || !v.is_zero() {
            out.push(v);
        }
    }
    Ok(out)
}

/// One representative per orbit of the nonzero vectors of `Ω^k` under the
/// group of signed coordinate permutations. The representatives are the
/// vectors `(1,…,1,0,…,0)` with `t` ones, `1 ≤ t ≤ k`, in ascending
/// support order.
///
/// Signed permutations preserve inner products, so a constraint system
/// built from inner-product signs may fix any single unknown vector to a
/// representative of its orbit without losing solutions.
pub fn orbit_representatives(k: usize) -> Result<Vec<TernaryVector>, TernaryError> {
    check_cap(k)?;
    Ok((1..=k)
        .map(|t| {
            let mut trits = vec![0i8; k];
            for x in trits.iter_mut().take(t) {
                *x = 1;
            }
            TernaryVector { trits }
        })
        .collect())
}
