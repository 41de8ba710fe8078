//! Permutations and the Koszul signs they pick up when acting on graded
//! tensors.
//!
//! Conventions, fixed once here and used verbatim everywhere else:
//!
//! * permutations act on slot indices `0..n`, with composition
//!   `(s . t)(i) = s(t(i))`;
//! * moving a permutation across homogeneous factors of degrees
//!   `p = (p_1, ..., p_n)` costs the sign `(-1)^{nu(s, p)}` with
//!   `nu(s, p) = sum_{i < j, s(j) < s(i)} p_i p_j` — one factor `p_i p_j`
//!   per inverted pair, so only odd-degree slots contribute;
//! * exchanging two adjacent groups of homogeneous factors of degrees `p`
//!   (first group) and `q` (second group) costs
//!   `(-1)^{sum_{i > j} p_i q_j}` when the second group moves past the
//!   first.

use itertools::Itertools;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("images {0:?} are not a permutation of 0..{1}")]
    NotBijective(Vec<usize>, usize),
}

/// A permutation of `{0, .., n-1}`, stored by its images.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(PermError::NotBijective(images.clone(), n));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition of `a` and `b` in `S_n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self . other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "composition across different sizes");
        Permutation {
            images: (0..self.n()).map(|i| self.apply(other.apply(i))).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    /// The ordinary sign, `(-1)^{inversions}`.
    pub fn sign(&self) -> i64 {
        let mut inversions = 0u64;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.images[j] < self.images[i] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// All of `S_n` in lexicographic order of image vectors.
    pub fn all(n: usize) -> Vec<Permutation> {
        (0..n)
            .permutations(n)
            .map(|images| Permutation { images })
            .collect()
    }
}

/// The Koszul exponent of the rearrangement `(b_0, ..., b_{n-1}) ->
/// (b_{s(0)}, ..., b_{s(n-1)})`, reduced mod 2.
///
/// Factors `b_{s(i)}` and `b_{s(j)}` cross exactly when `i < j` but
/// `s(i) > s(j)`, and each crossing costs the product of their degrees:
/// `nu(s, p) = sum_{i < j, s(i) > s(j)} p_{s(i)} p_{s(j)}`.
pub fn nu_exponent(sigma: &Permutation, degrees: &[i64]) -> u8 {
    assert_eq!(sigma.n(), degrees.len(), "degree list must match the slots");
    let mut total = 0u64;
    for i in 0..degrees.len() {
        for j in i + 1..degrees.len() {
            let (si, sj) = (sigma.apply(i), sigma.apply(j));
            if sj < si {
                total += (degrees[si].rem_euclid(2) * degrees[sj].rem_euclid(2)) as u64;
            }
        }
    }
    (total % 2) as u8
}

/// The Koszul sign `(-1)^{nu(s, p)}`.
pub fn nu_sign(sigma: &Permutation, degrees: &[i64]) -> i64 {
    if nu_exponent(sigma, degrees) == 0 {
        1
    } else {
        -1
    }
}

/// The interchange exponent `sum_{i > j} p_i q_j` mod 2: the cost of moving
/// the block with degrees `q` leftward past the block with degrees `p`,
/// slot by slot.
pub fn interchange_exponent(p: &[i64], q: &[i64]) -> u8 {
    assert_eq!(p.len(), q.len(), "blocks must have equal length");
    let mut total = 0u64;
    for i in 0..p.len() {
        for j in 0..i {
            total += (p[i].rem_euclid(2) * q[j].rem_euclid(2)) as u64;
        }
    }
    (total % 2) as u8
}

/// Degrees permuted by `sigma`: `(p . s)_i = p_{s(i)}`.
pub fn permuted_degrees(sigma: &Permutation, degrees: &[i64]) -> Vec<i64> {
    (0..degrees.len()).map(|i| degrees[sigma.apply(i)]).collect()
}
