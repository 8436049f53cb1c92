//! Simply-laced Dynkin diagrams, their root systems and the piecewise-linear
//! involutions `tau_plus`, `tau_minus` on almost positive roots.

use crate::error::{Error, Result};
use crate::quiver::Quiver;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::D => 'D',
            Family::E => 'E',
        };
        write!(f, "{}", c)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            other => Err(Error::Parse(format!("unknown Dynkin family `{}`", other))),
        }
    }
}

/// An ADE Dynkin diagram. Vertices are `0..rank`; E uses Bourbaki numbering
/// (vertex 2 hangs off vertex 4, counting from 1).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DynkinDiagram {
    family: Family,
    rank: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl DynkinDiagram {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        if !ok {
            let c = family.to_string().chars().next().unwrap_or('?');
            return Err(Error::UnsupportedType { family: c, rank });
        }
        let edges: BTreeSet<(usize, usize)> = match family {
            Family::A => (0..rank - 1).map(|i| (i, i + 1)).collect(),
            Family::D => {
                let mut e: BTreeSet<_> = (0..rank - 2).map(|i| (i, i + 1)).collect();
                e.insert((rank - 3, rank - 1));
                e
            }
            Family::E => {
                let mut e: BTreeSet<_> = [(0, 2), (1, 3), (2, 3)].into_iter().collect();
                for i in 3..rank - 1 {
                    e.insert((i, i + 1));
                }
                e
            }
        };
        Ok(DynkinDiagram { family, rank, edges })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i.min(j), i.max(j)))
    }

    /// Symmetric pairing of simple roots.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        if i == j {
            2
        } else if self.adjacent(i, j) {
            -1
        } else {
            0
        }
    }

    pub fn coxeter_number(&self) -> usize {
        match (self.family, self.rank) {
            (Family::A, n) => n + 1,
            (Family::D, n) => 2 * n - 2,
            (Family::E, 6) => 12,
            (Family::E, 7) => 18,
            (Family::E, _) => 30,
        }
    }

    pub fn positive_root_count(&self) -> usize {
        match (self.family, self.rank) {
            (Family::A, n) => n * (n + 1) / 2,
            (Family::D, n) => n * (n - 1),
            (Family::E, 6) => 36,
            (Family::E, 7) => 63,
            (Family::E, _) => 120,
        }
    }

    /// The bipartite orientation in which vertex 1 (and everything at even
    /// distance from it) is a source.
    pub fn bipartite_orientation(&self) -> Quiver {
        let mut colour = vec![None; self.rank];
        colour[0] = Some(0usize);
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for w in 0..self.rank {
                if self.adjacent(v, w) && colour[w].is_none() {
                    colour[w] = Some(1 - colour[v].unwrap_or(0));
                    stack.push(w);
                }
            }
        }
        let arrows: Vec<_> = self
            .edges
            .iter()
            .map(|&(i, j)| if colour[i] == Some(0) { (i, j) } else { (j, i) })
            .collect();
        Quiver::from_arrows(self.rank, &arrows).expect("diagram edges are valid")
    }

    /// Validates that `arrows` orient each edge of the diagram exactly once.
    pub fn orientation(&self, arrows: &[(usize, usize)]) -> Result<Quiver> {
        let q = Quiver::from_arrows(self.rank, arrows)?;
        self.check_orientation(&q)?;
        Ok(q)
    }

    pub fn check_orientation(&self, q: &Quiver) -> Result<()> {
        if q.n() != self.rank {
            return Err(Error::InvalidOrientation(format!(
                "{} vertices given, {} has {}",
                q.n(),
                self.name(),
                self.rank
            )));
        }
        for i in 0..self.rank {
            for j in 0..self.rank {
                let e = q.entry(i, j).abs();
                let want = i64::from(self.adjacent(i, j));
                if e != want {
                    return Err(Error::InvalidOrientation(format!(
                        "edge {}-{} must carry exactly {} arrow(s) for {}",
                        i + 1,
                        j + 1,
                        want,
                        self.name()
                    )));
                }
            }
        }
        Ok(())
    }
}

/// A root, stored by its coefficients in the basis of simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Root(coeffs)
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    pub fn negative_simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = -1;
        Root(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Coefficient of the `i`-th simple root.
    pub fn multiplicity(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn negative_simple_index(&self) -> Option<usize> {
        let i = self.0.iter().position(|&c| c != 0)?;
        (self.0[i] == -1 && self.0.iter().filter(|&&c| c != 0).count() == 1).then_some(i)
    }

    pub fn simple_index(&self) -> Option<usize> {
        let i = self.0.iter().position(|&c| c != 0)?;
        (self.0[i] == 1 && self.0.iter().filter(|&&c| c != 0).count() == 1).then_some(i)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

/// Renders an integer vector in the basis `a1, a2, ...`, e.g. `a1+2a2`, `-a3`.
pub fn format_vector(v: &[i64]) -> String {
    let mut s = String::new();
    for (i, &c) in v.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        if c.abs() != 1 {
            s.push_str(&c.abs().to_string());
        }
        s.push_str(&format!("a{}", i + 1));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_vector(&self.0))
    }
}

impl Root {
    /// Parses the sparse text form, e.g. `a1+2a3`, `-a2`, for a given rank.
    pub fn parse(s: &str, rank: usize) -> Result<Root> {
        let mut v = vec![0i64; rank];
        let s = s.replace(' ', "");
        if s == "0" {
            return Ok(Root(v));
        }
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let (sign, tail) = match rest.as_bytes()[0] {
                b'-' => (-1, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ => (1, rest),
            };
            let end = tail.find(['+', '-']).unwrap_or(tail.len());
            let term = &tail[..end];
            let (c, idx) = term
                .split_once('a')
                .ok_or_else(|| Error::Parse(format!("bad root term `{}`", term)))?;
            let c: i64 = if c.is_empty() {
                1
            } else {
                c.parse().map_err(|_| Error::Parse(format!("bad coefficient `{}`", c)))?
            };
            let i: usize =
                idx.parse().map_err(|_| Error::Parse(format!("bad simple root index `{}`", idx)))?;
            if i == 0 || i > rank {
                return Err(Error::Parse(format!("simple root a{} out of range", i)));
            }
            v[i - 1] += sign * c;
            rest = &tail[end..];
        }
        Ok(Root(v))
    }
}

/// `s_i(v) = v - (v, a_i) a_i` for an arbitrary integer vector.
pub fn simple_reflection(d: &DynkinDiagram, i: usize, v: &[i64]) -> Vec<i64> {
    let pairing: i64 = (0..d.rank()).map(|j| v[j] * d.cartan(i, j)).sum();
    let mut out = v.to_vec();
    out[i] -= pairing;
    out
}

pub fn pairing(d: &DynkinDiagram, u: &[i64], v: &[i64]) -> i64 {
    let n = d.rank();
    let mut s = 0;
    for i in 0..n {
        for j in 0..n {
            s += u[i] * d.cartan(i, j) * v[j];
        }
    }
    s
}

/// Positive and almost positive roots of an ADE diagram.
#[derive(Clone, Debug)]
pub struct RootSystem {
    diagram: DynkinDiagram,
    positive: Vec<Root>,
    almost_positive: Vec<Root>,
    index: HashMap<Root, usize>,
}

impl RootSystem {
    pub fn new(diagram: DynkinDiagram) -> Self {
        let positive = positive_roots(&diagram);
        let n = diagram.rank();
        let mut almost_positive = positive.clone();
        almost_positive.extend((0..n).map(|i| Root::negative_simple(n, i)));
        let index = almost_positive.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();
        RootSystem { diagram, positive, almost_positive, index }
    }

    pub fn of_type(family: Family, rank: usize) -> Result<Self> {
        Ok(Self::new(DynkinDiagram::new(family, rank)?))
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// Positive roots followed by `-a1, ..., -an`.
    pub fn almost_positive(&self) -> &[Root] {
        &self.almost_positive
    }

    /// Position of a root in [`RootSystem::almost_positive`].
    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }

    pub fn reflect(&self, i: usize, r: &Root) -> Root {
        Root(simple_reflection(&self.diagram, i, &r.0))
    }

    /// `tau_eps(alpha)` for the given bipartite sign function.
    pub fn tau_eps(&self, signs: &SignFunction, eps: Sign, alpha: &Root) -> Result<Root> {
        if !self.contains(alpha) {
            return Err(Error::NotARoot(alpha.to_string()));
        }
        if let Some(j) = alpha.negative_simple_index() {
            if signs.get(j) == eps.flip() {
                return Ok(alpha.clone());
            }
        }
        let mut v = alpha.0.clone();
        for k in (0..self.rank()).filter(|&k| signs.get(k) == eps) {
            v = simple_reflection(&self.diagram, k, &v);
        }
        let r = Root(v);
        if !self.contains(&r) {
            return Err(Error::Internal(format!(
                "tau_{} sends {} outside the almost positive roots",
                eps, alpha
            )));
        }
        Ok(r)
    }

    pub fn tau_plus(&self, signs: &SignFunction, alpha: &Root) -> Result<Root> {
        self.tau_eps(signs, Sign::Plus, alpha)
    }

    pub fn tau_minus(&self, signs: &SignFunction, alpha: &Root) -> Result<Root> {
        self.tau_eps(signs, Sign::Minus, alpha)
    }

    /// `tau = tau_minus . tau_plus`.
    pub fn tau(&self, signs: &SignFunction, alpha: &Root) -> Result<Root> {
        self.tau_minus(signs, &self.tau_plus(signs, alpha)?)
    }

    /// Orbits of `tau` on the almost positive roots, each listed along the
    /// orbit starting from its first root in the standard order.
    pub fn tau_orbits(&self, signs: &SignFunction) -> Result<Vec<Vec<Root>>> {
        let mut seen = vec![false; self.almost_positive.len()];
        let mut orbits = Vec::new();
        for (k, r) in self.almost_positive.iter().enumerate() {
            if seen[k] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut cur = r.clone();
            loop {
                let idx = self.index_of(&cur).ok_or_else(|| Error::NotARoot(cur.to_string()))?;
                if seen[idx] {
                    break;
                }
                seen[idx] = true;
                orbit.push(cur.clone());
                cur = self.tau(signs, &cur)?;
            }
            if cur != *r {
                return Err(Error::Internal("tau is not a permutation".into()));
            }
            orbits.push(orbit);
        }
        Ok(orbits)
    }
}

/// All positive roots, by closing the simple roots under simple reflections;
/// sorted by height, then with larger leading coefficients first (so the
/// simple roots come out as `a1, a2, ...`).
pub fn positive_roots(d: &DynkinDiagram) -> Vec<Root> {
    let n = d.rank();
    let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut stack: Vec<Vec<i64>> = (0..n).map(|i| Root::simple(n, i).0).collect();
    while let Some(v) = stack.pop() {
        if !found.insert(v.clone()) {
            continue;
        }
        for i in 0..n {
            let w = simple_reflection(d, i, &v);
            if w.iter().all(|&c| c >= 0) && !found.contains(&w) {
                stack.push(w);
            }
        }
    }
    let mut roots: Vec<Root> = found.into_iter().map(Root).collect();
    roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0)));
    roots
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// The sign function of a bipartite orientation: sources are `+`, sinks `-`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignFunction(Vec<Sign>);

impl SignFunction {
    pub fn from_orientation(q: &Quiver) -> Result<Self> {
        if !q.is_bipartite_orientation() {
            let bad = (0..q.n()).find(|&i| !q.is_sink(i) && !q.is_source(i)).unwrap_or(0);
            return Err(Error::InvalidOrientation(format!(
                "orientation is not bipartite: vertex {} is neither a sink nor a source",
                bad + 1
            )));
        }
        Ok(SignFunction(
            (0..q.n()).map(|i| if q.is_source(i) { Sign::Plus } else { Sign::Minus }).collect(),
        ))
    }

    pub fn get(&self, i: usize) -> Sign {
        self.0[i]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self, s: Sign) -> impl Iterator<Item = usize> + '_ {
        (0..self.0.len()).filter(move |&i| self.0[i] == s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3() -> (RootSystem, SignFunction) {
        let rs = RootSystem::of_type(Family::A, 3).unwrap();
        let q = rs.diagram().orientation(&[(0, 1), (2, 1)]).unwrap();
        (rs, SignFunction::from_orientation(&q).unwrap())
    }

    fn r(s: &str) -> Root {
        Root::parse(s, 3).unwrap()
    }

    #[test]
    fn root_counts() {
        for (f, n) in [(Family::A, 1), (Family::A, 5), (Family::D, 4), (Family::D, 6), (Family::E, 6), (Family::E, 7), (Family::E, 8)] {
            let rs = RootSystem::of_type(f, n).unwrap();
            assert_eq!(rs.positive_roots().len(), rs.diagram().positive_root_count(), "{}{}", f, n);
            let h = rs.diagram().coxeter_number();
            assert_eq!(2 * rs.positive_roots().len(), h * n);
        }
    }

    #[test]
    fn a2_roots_in_order() {
        let rs = RootSystem::of_type(Family::A, 2).unwrap();
        let names: Vec<String> = rs.almost_positive().iter().map(|r| r.to_string()).collect();
        assert_eq!(names, ["a1", "a2", "a1+a2", "-a1", "-a2"]);
    }

    #[test]
    fn reflections() {
        let d = DynkinDiagram::new(Family::A, 2).unwrap();
        assert_eq!(simple_reflection(&d, 0, &[1, 0]), vec![-1, 0]);
        assert_eq!(simple_reflection(&d, 0, &[0, 1]), vec![1, 1]);
    }

    #[test]
    fn a3_tau_examples() {
        let (rs, s) = a3();
        assert_eq!(rs.tau_plus(&s, &r("-a1")).unwrap(), r("a1"));
        assert_eq!(rs.tau_minus(&s, &r("a1")).unwrap(), r("a1+a2"));
        assert_eq!(rs.tau_minus(&s, &r("-a1")).unwrap(), r("-a1"));
        assert_eq!(rs.tau(&s, &r("-a2")).unwrap(), r("a2"));
        assert_eq!(rs.tau(&s, &r("a2")).unwrap(), r("a1+a2+a3"));
        let mut sizes: Vec<usize> = rs.tau_orbits(&s).unwrap().iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![3, 6]);
    }

    #[test]
    fn a3_orbit_display() {
        // -a1 <-> a1 <-> a1+a2 <-> a2+a3 <-> a3 <-> -a3, alternating tau_plus, tau_minus
        let (rs, s) = a3();
        let chain = ["-a1", "a1", "a1+a2", "a2+a3", "a3", "-a3"];
        for (k, w) in chain.windows(2).enumerate() {
            let eps = if k % 2 == 0 { Sign::Plus } else { Sign::Minus };
            assert_eq!(rs.tau_eps(&s, eps, &r(w[0])).unwrap(), r(w[1]));
        }
        assert_eq!(rs.tau_minus(&s, &r("-a3")).unwrap(), r("-a3"));
        assert_eq!(rs.tau_plus(&s, &r("-a2")).unwrap(), r("-a2"));
        assert_eq!(rs.tau_minus(&s, &r("-a2")).unwrap(), r("a2"));
        assert_eq!(rs.tau_plus(&s, &r("a2")).unwrap(), r("a1+a2+a3"));
        assert_eq!(rs.tau_minus(&s, &r("a1+a2+a3")).unwrap(), r("a1+a2+a3"));
    }

    #[test]
    fn root_text_round_trip() {
        for s in ["a1", "-a3", "a1+2a2+a3", "2a2"] {
            assert_eq!(Root::parse(s, 3).unwrap().to_string(), s);
        }
        assert!(Root::parse("a4", 3).is_err());
    }

    #[test]
    fn non_bipartite_rejected() {
        let d = DynkinDiagram::new(Family::A, 3).unwrap();
        let q = d.orientation(&[(0, 1), (1, 2)]).unwrap();
        assert!(SignFunction::from_orientation(&q).is_err());
    }

    #[test]
    fn bad_orientation_rejected() {
        let d = DynkinDiagram::new(Family::A, 3).unwrap();
        assert!(d.orientation(&[(0, 2), (1, 2)]).is_err());
        assert!(DynkinDiagram::new(Family::D, 3).is_err());
        assert!(DynkinDiagram::new(Family::E, 9).is_err());
    }
}
