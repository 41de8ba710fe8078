//! Finite graded vector spaces with a fixed ordered basis, and the bases of
//! their tensor powers.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Default cap on the number of tensor basis elements an oracle operation
/// is allowed to enumerate.
pub const DEFAULT_DIM_BOUND: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("tensor power would have {needed} basis elements, above the bound {bound}")]
    DimensionBound { needed: u128, bound: usize },
}

/// A basis vector of a graded space: degree plus position within that
/// degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label {
    pub degree: i64,
    pub index: usize,
}

/// A finite graded vector space, described by its dimension in each degree.
/// Zero dimensions are not stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedSpace {
    dims: BTreeMap<i64, usize>,
}

impl GradedSpace {
    pub fn from_dims(dims: impl IntoIterator<Item = (i64, usize)>) -> Self {
        GradedSpace {
            dims: dims.into_iter().filter(|&(_, d)| d > 0).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn dim_in(&self, degree: i64) -> usize {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn degrees(&self) -> impl Iterator<Item = (&i64, &usize)> {
        self.dims.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    /// The ordered basis: degrees ascending, index ascending within each.
    pub fn basis(&self) -> Vec<Label> {
        let mut out = Vec::with_capacity(self.dim());
        for (&degree, &d) in &self.dims {
            for index in 0..d {
                out.push(Label { degree, index });
            }
        }
        out
    }

    /// All basis tuples of the `n`-th tensor power in lexicographic order,
    /// refusing to enumerate more than `bound` of them.
    pub fn tensor_basis(&self, n: usize, bound: usize) -> Result<Vec<Vec<Label>>, OracleError> {
        let dim = self.dim() as u128;
        let needed = dim.checked_pow(n as u32).unwrap_or(u128::MAX);
        if needed > bound as u128 {
            return Err(OracleError::DimensionBound { needed, bound });
        }
        let basis = self.basis();
        let mut out: Vec<Vec<Label>> = vec![Vec::new()];
        for _ in 0..n {
            let mut next = Vec::with_capacity(out.len() * basis.len());
            for partial in &out {
                for &label in &basis {
                    let mut ext = partial.clone();
                    ext.push(label);
                    next.push(ext);
                }
            }
            out = next;
        }
        Ok(out)
    }
}

impl fmt::Display for GradedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .dims
            .iter()
            .map(|(deg, d)| format!("{deg}: {d}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Total degree of a basis tuple.
pub fn total_degree(tuple: &[Label]) -> i64 {
    tuple.iter().map(|l| l.degree).sum()
}

/// The degree list of a basis tuple.
pub fn degrees_of(tuple: &[Label]) -> Vec<i64> {
    tuple.iter().map(|l| l.degree).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_is_ordered_by_degree_then_index() {
        let v = GradedSpace::from_dims([(1, 1), (-1, 2), (0, 0)]);
        let basis = v.basis();
        assert_eq!(v.dim(), 3);
        assert_eq!(
            basis,
            vec![
                Label { degree: -1, index: 0 },
                Label { degree: -1, index: 1 },
                Label { degree: 1, index: 0 },
            ]
        );
        assert_eq!(v.dim_in(0), 0);
    }

    #[test]
    fn tensor_basis_counts_and_bound() {
        let v = GradedSpace::from_dims([(0, 2), (1, 1)]);
        let b2 = v.tensor_basis(2, 100).unwrap();
        assert_eq!(b2.len(), 9);
        // Lexicographic: first tuple repeats the first basis vector.
        assert_eq!(b2[0], vec![v.basis()[0], v.basis()[0]]);
        assert_eq!(
            v.tensor_basis(5, 100).unwrap_err(),
            OracleError::DimensionBound { needed: 243, bound: 100 }
        );
        // n = 0 has exactly the empty tuple.
        assert_eq!(v.tensor_basis(0, 10).unwrap(), vec![Vec::new()]);
    }
}
