//! Quivers without loops or 2-cycles, encoded by skew-symmetric exchange
//! matrices, and ice quivers with Fomin-Zelevinsky mutation.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt::Write as _;

/// A finite quiver with no loops and no 2-cycles. `b[i][j] > 0` counts arrows
/// `i -> j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quiver {
    b: Vec<Vec<i64>>,
}

impl Quiver {
    pub fn empty(n: usize) -> Self {
        Quiver { b: vec![vec![0; n]; n] }
    }

    /// Builds a quiver from a list of arrows (0-based). Repeated arrows add up;
    /// opposite arrows cancel, as a 2-cycle cannot be represented.
    pub fn from_arrows(n: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        let mut q = Self::empty(n);
        for &(s, t) in arrows {
            for v in [s, t] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, size: n });
                }
            }
            if s == t {
                return Err(Error::InvalidOrientation(format!("loop at vertex {}", s + 1)));
            }
            q.b[s][t] += 1;
            q.b[t][s] -= 1;
        }
        Ok(q)
    }

    pub fn from_b_matrix(b: Vec<Vec<i64>>) -> Result<Self> {
        let n = b.len();
        for (i, row) in b.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Parse("exchange matrix is not square".into()));
            }
            for j in 0..n {
                if row[j] != -b[j][i] {
                    return Err(Error::Parse(format!(
                        "exchange matrix is not skew-symmetric at ({}, {})",
                        i, j
                    )));
                }
            }
        }
        Ok(Quiver { b })
    }

    pub fn n(&self) -> usize {
        self.b.len()
    }

    pub fn b(&self) -> &[Vec<i64>] {
        &self.b
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.b[i][j]
    }

    /// Number of arrows `i -> j`.
    pub fn arrow_count(&self, i: usize, j: usize) -> usize {
        self.b[i][j].max(0) as usize
    }

    /// All arrows, repeated according to multiplicity, in lexicographic order.
    pub fn arrows(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for _ in 0..self.arrow_count(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn successors(&self, i: usize) -> Vec<usize> {
        (0..self.n()).filter(|&j| self.b[i][j] > 0).collect()
    }

    pub fn predecessors(&self, i: usize) -> Vec<usize> {
        (0..self.n()).filter(|&j| self.b[j][i] > 0).collect()
    }

    pub fn neighbours(&self, i: usize) -> Vec<usize> {
        (0..self.n()).filter(|&j| self.b[i][j] != 0).collect()
    }

    pub fn is_sink(&self, i: usize) -> bool {
        self.b[i].iter().all(|&x| x <= 0)
    }

    pub fn is_source(&self, i: usize) -> bool {
        self.b[i].iter().all(|&x| x >= 0)
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.is_sink(i)).collect()
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.is_source(i)).collect()
    }

    /// Every vertex is a sink or a source.
    pub fn is_bipartite_orientation(&self) -> bool {
        (0..self.n()).all(|i| self.is_sink(i) || self.is_source(i))
    }

    pub fn opposite(&self) -> Quiver {
        Quiver { b: self.b.iter().map(|r| r.iter().map(|x| -x).collect()).collect() }
    }

    /// Reverses every arrow incident to `i`.
    pub fn reflect_at(&self, i: usize) -> Quiver {
        let mut b = self.b.clone();
        for j in 0..self.n() {
            b[i][j] = -b[i][j];
            b[j][i] = -b[j][i];
        }
        Quiver { b }
    }

    /// Undirected edges `(i, j)` with `i < j`.
    pub fn underlying_edges(&self) -> BTreeSet<(usize, usize)> {
        let mut e = BTreeSet::new();
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.b[i][j] != 0 {
                    e.insert((i, j));
                }
            }
        }
        e
    }

    /// Kahn's algorithm with smallest-index tie breaking; `None` on a cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.n();
        let mut indeg: Vec<usize> = (0..n).map(|i| self.predecessors(i).len()).collect();
        let mut ready: BTreeSet<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(&v) = ready.iter().next() {
            ready.remove(&v);
            order.push(v);
            for w in self.successors(v) {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.insert(w);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    pub fn to_dot(&self) -> String {
        let labels: Vec<String> = (1..=self.n()).map(|i| i.to_string()).collect();
        dot(&self.b, &labels, self.n())
    }
}

fn dot(b: &[Vec<i64>], labels: &[String], mutable: usize) -> String {
    let mut s = String::from("digraph quiver {\n");
    for (v, l) in labels.iter().enumerate() {
        let shape = if v >= mutable { ", shape=box" } else { "" };
        let _ = writeln!(s, "  v{} [label=\"{}\"{}];", v, l.replace('"', "'"), shape);
    }
    for (i, row) in b.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            for _ in 0..x.max(0) {
                let _ = writeln!(s, "  v{} -> v{};", i, j);
            }
        }
    }
    s.push_str("}\n");
    s
}

/// Parses `"1>2,3>2"` (1-based) into 0-based arrows.
pub fn parse_arrows(s: &str) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (a, b) = part
            .split_once('>')
            .ok_or_else(|| Error::Parse(format!("expected `i>j`, got `{}`", part)))?;
        let parse = |x: &str| -> Result<usize> {
            let v: usize = x
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad vertex `{}`", x.trim())))?;
            v.checked_sub(1).ok_or_else(|| Error::Parse("vertices are 1-based".into()))
        };
        out.push((parse(a)?, parse(b)?));
    }
    Ok(out)
}

/// A quiver whose first `mutable` vertices are mutable and whose remaining
/// vertices are frozen. Arrows between frozen vertices are discarded.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IceQuiver {
    quiver: Quiver,
    mutable: usize,
    labels: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct IceQuiverJson {
    n: usize,
    m: usize,
    b: Vec<Vec<i64>>,
    #[serde(default)]
    labels: Vec<String>,
}

impl Serialize for IceQuiver {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IceQuiverJson {
            n: self.mutable,
            m: self.frozen_count(),
            b: self.quiver.b.clone(),
            labels: self.labels.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IceQuiver {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = IceQuiverJson::deserialize(d)?;
        if j.b.len() != j.n + j.m {
            return Err(serde::de::Error::custom("b has the wrong size"));
        }
        let q = Quiver::from_b_matrix(j.b).map_err(serde::de::Error::custom)?;
        let mut ice = IceQuiver::new(q, j.n).map_err(serde::de::Error::custom)?;
        if !j.labels.is_empty() {
            ice = ice.with_labels(j.labels).map_err(serde::de::Error::custom)?;
        }
        Ok(ice)
    }
}

impl IceQuiver {
    pub fn new(mut quiver: Quiver, mutable: usize) -> Result<Self> {
        let n = quiver.n();
        if mutable > n {
            return Err(Error::VertexOutOfRange { vertex: mutable, size: n });
        }
        for i in mutable..n {
            for j in mutable..n {
                quiver.b[i][j] = 0;
            }
        }
        let labels = (0..n)
            .map(|v| if v < mutable { (v + 1).to_string() } else { format!("f{}", v - mutable + 1) })
            .collect();
        Ok(IceQuiver { quiver, mutable, labels })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.quiver.n() {
            return Err(Error::Parse("label count does not match vertex count".into()));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn b(&self) -> &[Vec<i64>] {
        self.quiver.b()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mutable_count(&self) -> usize {
        self.mutable
    }

    pub fn frozen_count(&self) -> usize {
        self.quiver.n() - self.mutable
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.n()
    }

    pub fn is_frozen(&self, v: usize) -> bool {
        v >= self.mutable
    }

    /// The full subquiver on the mutable vertices.
    pub fn mutable_part(&self) -> Quiver {
        let b = self.quiver.b[..self.mutable].iter().map(|r| r[..self.mutable].to_vec()).collect();
        Quiver { b }
    }

    /// Fomin-Zelevinsky mutation at the mutable vertex `k`.
    pub fn mutate(&self, k: usize) -> Result<IceQuiver> {
        let n = self.quiver.n();
        if k >= n {
            return Err(Error::VertexOutOfRange { vertex: k, size: n });
        }
        if self.is_frozen(k) {
            return Err(Error::FrozenMutation { vertex: k });
        }
        let b = &self.quiver.b;
        let mut nb = b.clone();
        for i in 0..n {
            for j in 0..n {
                nb[i][j] = if i == k || j == k {
                    -b[i][j]
                } else {
                    let prod = b[i][k].checked_mul(b[k][j]).ok_or(Error::Overflow("mutation"))?;
                    b[i][j]
                        .checked_add(b[i][k].signum() * prod.max(0))
                        .ok_or(Error::Overflow("mutation"))?
                };
            }
        }
        let mut out = IceQuiver::new(Quiver { b: nb }, self.mutable)?;
        out.labels = self.labels.clone();
        Ok(out)
    }

    pub fn mutate_sequence(&self, word: &[usize]) -> Result<IceQuiver> {
        word.iter().try_fold(self.clone(), |q, &k| q.mutate(k))
    }

    /// Reorders vertices: vertex `order[v]` of `self` becomes vertex `v`.
    /// The order must keep mutable vertices first.
    pub fn reorder(&self, order: &[usize]) -> Result<IceQuiver> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        if order.len() != n {
            return Err(Error::Internal("reorder: wrong length".into()));
        }
        for (v, &o) in order.iter().enumerate() {
            if o >= n || seen[o] || (v < self.mutable) != (o < self.mutable) {
                return Err(Error::Internal("reorder: not a type-preserving permutation".into()));
            }
            seen[o] = true;
        }
        let b = (0..n).map(|i| (0..n).map(|j| self.quiver.b[order[i]][order[j]]).collect()).collect();
        Ok(IceQuiver {
            quiver: Quiver { b },
            mutable: self.mutable,
            labels: order.iter().map(|&o| self.labels[o].clone()).collect(),
        })
    }

    pub fn to_dot(&self) -> String {
        dot(&self.quiver.b, &self.labels, self.mutable)
    }

    /// Plain-text arrow list using the vertex labels.
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "ice quiver: {} mutable, {} frozen\n",
            self.mutable_count(),
            self.frozen_count()
        );
        for (i, j) in self.quiver.arrows() {
            let _ = writeln!(s, "  {} -> {}", self.labels[i], self.labels[j]);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_mutation_reverses_arrow() {
        let q = Quiver::from_arrows(2, &[(0, 1)]).unwrap();
        let ice = IceQuiver::new(q, 2).unwrap();
        let m = ice.mutate(0).unwrap();
        assert_eq!(m.b(), &[vec![0, -1], vec![1, 0]]);
    }

    #[test]
    fn a3_linear_mutation_at_middle_creates_arrow() {
        let q = Quiver::from_arrows(3, &[(0, 1), (1, 2)]).unwrap();
        let m = IceQuiver::new(q, 3).unwrap().mutate(1).unwrap();
        assert_eq!(m.quiver().arrows(), vec![(0, 2), (1, 0), (2, 1)]);
    }

    #[test]
    fn frozen_mutation_rejected() {
        let q = Quiver::from_arrows(2, &[(0, 1)]).unwrap();
        let ice = IceQuiver::new(q, 1).unwrap();
        assert_eq!(ice.mutate(1), Err(Error::FrozenMutation { vertex: 1 }));
    }

    #[test]
    fn frozen_arrows_discarded() {
        let q = Quiver::from_arrows(3, &[(0, 1), (1, 2)]).unwrap();
        let ice = IceQuiver::new(q, 1).unwrap();
        assert_eq!(ice.quiver().arrows(), vec![(0, 1)]);
    }

    #[test]
    fn parse_orientation() {
        assert_eq!(parse_arrows("1>2, 3>2").unwrap(), vec![(0, 1), (2, 1)]);
        assert!(parse_arrows("1-2").is_err());
        assert!(parse_arrows("0>1").is_err());
    }

    #[test]
    fn empty_dot() {
        let d = Quiver::empty(0).to_dot();
        assert!(d.starts_with("digraph quiver {"));
        assert!(d.trim_end().ends_with('}'));
    }

    #[test]
    fn json_round_trip() {
        let q = Quiver::from_arrows(3, &[(0, 1), (2, 0)]).unwrap();
        let ice = IceQuiver::new(q, 2).unwrap();
        let s = serde_json::to_string(&ice).unwrap();
        let back: IceQuiver = serde_json::from_str(&s).unwrap();
        assert_eq!(ice, back);
    }
}
