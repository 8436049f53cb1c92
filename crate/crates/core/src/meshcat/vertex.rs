use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A vertex `(i, p)` of `ZQ`, or a frozen vertex `(i', p)` of the framed quiver.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RQVertex {
    pub p: i64,
    pub frozen: bool,
    pub i: usize,
}

impl RQVertex {
    pub fn new(i: usize, p: i64) -> Self {
        RQVertex { p, frozen: false, i }
    }

    pub fn frozen(i: usize, p: i64) -> Self {
        RQVertex { p, frozen: true, i }
    }

    pub fn tau(self) -> Self {
        RQVertex { p: self.p - 1, ..self }
    }

    pub fn tau_inv(self) -> Self {
        RQVertex { p: self.p + 1, ..self }
    }

    /// Parses `(i,p)` or `(i',p)` with `i` counted from 1.
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        let bad = || Error::Parse(format!("cannot parse vertex {:?}", s));
        let inner = s.trim().strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(bad)?;
        let (a, b) = inner.split_once(',').ok_or_else(bad)?;
        let a = a.trim();
        let (a, frozen) = match a.strip_suffix('\'') {
            Some(t) => (t, true),
            None => (a, false),
        };
        let i: usize = a.parse().map_err(|_| bad())?;
        let p: i64 = b.trim().parse().map_err(|_| bad())?;
        if i == 0 || i > rank {
            return Err(Error::VertexOutOfRange { vertex: i, size: rank });
        }
        Ok(RQVertex { p, frozen, i: i - 1 })
    }
}

impl fmt::Display for RQVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.frozen {
            write!(f, "({}',{})", self.i + 1, self.p)
        } else {
            write!(f, "({},{})", self.i + 1, self.p)
        }
    }
}

/// `sigma(i, n) = (i', n-1)` and `sigma(i', n) = (i, n)`.
pub fn sigma(v: RQVertex) -> RQVertex {
    if v.frozen {
        RQVertex::new(v.i, v.p)
    } else {
        RQVertex::frozen(v.i, v.p - 1)
    }
}

pub fn sigma_inv(v: RQVertex) -> RQVertex {
    if v.frozen {
        RQVertex::new(v.i, v.p + 1)
    } else {
        RQVertex::frozen(v.i, v.p)
    }
}

/// A translation-quiver automorphism of the form
/// `(i, p) -> (perm[i], p + shift[i])`, acting in the same way on `(i', p)`
/// (which is what commuting with `sigma` forces).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexMap {
    perm: Vec<usize>,
    shift: Vec<i64>,
}

impl VertexMap {
    pub fn new(perm: Vec<usize>, shift: Vec<i64>) -> Self {
        assert_eq!(perm.len(), shift.len());
        VertexMap { perm, shift }
    }

    pub fn identity(n: usize) -> Self {
        VertexMap { perm: (0..n).collect(), shift: vec![0; n] }
    }

    /// `tau^k`.
    pub fn tau_power(n: usize, k: i64) -> Self {
        VertexMap { perm: (0..n).collect(), shift: vec![-k; n] }
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn shift(&self) -> &[i64] {
        &self.shift
    }

    pub fn apply(&self, v: RQVertex) -> RQVertex {
        RQVertex { p: v.p + self.shift[v.i], frozen: v.frozen, i: self.perm[v.i] }
    }

    /// `self . other`.
    pub fn compose(&self, other: &VertexMap) -> VertexMap {
        let n = self.perm.len();
        VertexMap {
            perm: (0..n).map(|i| self.perm[other.perm[i]]).collect(),
            shift: (0..n).map(|i| other.shift[i] + self.shift[other.perm[i]]).collect(),
        }
    }

    pub fn inverse(&self) -> VertexMap {
        let n = self.perm.len();
        let mut perm = vec![0; n];
        let mut shift = vec![0; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            shift[self.perm[i]] = -self.shift[i];
        }
        VertexMap { perm, shift }
    }

    pub fn pow(&self, k: i64) -> VertexMap {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = VertexMap::identity(self.perm.len());
        for _ in 0..k.unsigned_abs() {
            out = base.compose(&out);
        }
        out
    }

    pub fn min_shift(&self) -> i64 {
        self.shift.iter().copied().min().unwrap_or(0)
    }

    pub fn max_shift(&self) -> i64 {
        self.shift.iter().copied().max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_round_trip() {
        for v in [RQVertex::new(2, 5), RQVertex::frozen(0, -3)] {
            assert_eq!(sigma_inv(sigma(v)), v);
            assert_eq!(sigma(sigma_inv(v)), v);
        }
        assert_eq!(sigma(sigma(RQVertex::new(1, 4))), RQVertex::new(1, 3));
    }

    #[test]
    fn compose_and_inverse() {
        let f = VertexMap::new(vec![1, 0], vec![2, 1]);
        let g = VertexMap::tau_power(2, 1);
        let v = RQVertex::new(0, 0);
        assert_eq!(f.compose(&g).apply(v), f.apply(g.apply(v)));
        assert_eq!(f.inverse().apply(f.apply(v)), v);
        assert_eq!(f.pow(3).apply(v), f.apply(f.apply(f.apply(v))));
        assert_eq!(f.pow(-2).apply(f.pow(2).apply(v)), v);
    }
}
