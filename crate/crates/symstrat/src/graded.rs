//! Finitely supported sequences of non-negative integers indexed by
//! homological degree (Poincaré polynomials of graded vector spaces).

use std::fmt;

use serde::{Deserialize, Serialize};

/// Dimension vector of a graded vector space, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GradedDim(Vec<u64>);

impl GradedDim {
    pub fn zero() -> Self {
        GradedDim(Vec::new())
    }

    /// The one-dimensional space concentrated in degree 0.
    pub fn point() -> Self {
        GradedDim(vec![1])
    }

    pub fn from_dims(dims: Vec<u64>) -> Self {
        let mut g = GradedDim(dims);
        g.trim();
        g
    }

    fn trim(&mut self) {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    pub fn dim(&self, degree: usize) -> u64 {
        self.0.get(degree).copied().unwrap_or(0)
    }

    pub fn set_dim(&mut self, degree: usize, dim: u64) {
        if degree >= self.0.len() {
            if dim == 0 {
                return;
            }
            self.0.resize(degree + 1, 0);
        }
        self.0[degree] = dim;
        self.trim();
    }

    pub fn add_dim(&mut self, degree: usize, dim: u64) {
        if dim == 0 {
            return;
        }
        if degree >= self.0.len() {
            self.0.resize(degree + 1, 0);
        }
        self.0[degree] += dim;
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest degree carrying a nonzero dimension, if any.
    pub fn max_degree(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn total_dim(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Alternating sum Σ (−1)^i dim_i.
    pub fn euler(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }

    pub fn dims(&self) -> &[u64] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.0.iter().copied().enumerate().filter(|&(_, d)| d > 0)
    }

    /// Degrees re-indexed by `degree ↦ top − degree`; used for passing
    /// between homology and compactly supported cohomology of an
    /// oriented manifold of dimension `top`.
    pub fn regrade_dual(&self, top: usize) -> GradedDim {
        let mut out = GradedDim::zero();
        for (i, d) in self.iter() {
            assert!(i <= top, "degree {i} exceeds duality dimension {top}");
            out.add_dim(top - i, d);
        }
        out
    }

    /// Degrees shifted up by `shift`.
    pub fn shift_up(&self, shift: usize) -> GradedDim {
        let mut out = GradedDim::zero();
        for (i, d) in self.iter() {
            out.add_dim(i + shift, d);
        }
        out
    }

    /// Pointwise equality of dimensions in all degrees ≤ `through`.
    pub fn agrees_through(&self, other: &GradedDim, through: usize) -> bool {
        (0..=through).all(|i| self.dim(i) == other.dim(i))
    }

    /// Parses a comma-separated dimension list such as "1,0,1".
    pub fn parse(s: &str) -> crate::Result<GradedDim> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(GradedDim::zero());
        }
        let dims = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| crate::Error::Invalid(format!("bad dimension entry '{t}'")))
            })
            .collect::<crate::Result<Vec<_>>>()?;
        Ok(GradedDim::from_dims(dims))
    }
}

impl fmt::Display for GradedDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let strs: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl fmt::Debug for GradedDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_and_indexes() {
        let g = GradedDim::from_dims(vec![1, 0, 2, 0, 0]);
        assert_eq!(g.max_degree(), Some(2));
        assert_eq!(g.dim(1), 0);
        assert_eq!(g.dim(2), 2);
        assert_eq!(g.dim(99), 0);
        assert_eq!(g.total_dim(), 3);
        assert_eq!(g.euler(), 3);
    }

    #[test]
    fn dual_regrade_roundtrip() {
        let g = GradedDim::from_dims(vec![1, 3, 2]);
        let dual = g.regrade_dual(5);
        assert_eq!(dual.dims(), &[0, 0, 0, 2, 3, 1]);
        assert_eq!(dual.regrade_dual(5), g);
    }

    #[test]
    fn parse_display() {
        let g = GradedDim::parse("1, 0, 1").unwrap();
        assert_eq!(g.to_string(), "1,0,1");
        assert!(GradedDim::parse("").unwrap().is_zero());
        assert!(GradedDim::parse("1,x").is_err());
    }
}
