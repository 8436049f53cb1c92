//! The Frobenius model of the cluster algebra with universal coefficients:
//! root labels on the orbit quiver, the cluster-tilting object
//! `T~ = X_{-a_1} + ... + X_{-a_n} + (all P_a)`, its exchange conflations, and
//! the ice quiver of `T~` computed by enumeration and from morphism spaces.

mod oracle;
mod verify;

pub use oracle::{Approximation, GabrielQuiver, ResolutionCheck};
pub use verify::{verify_main_theorem, CheckResult, CheckStatus, VerificationReport, VerifyOptions};

use crate::error::{Error, Result};
use crate::meshcat::{sigma, sigma_inv, MeshCategory, RQVertex, RepetitionQuiver, VertexMap};
use crate::nakajima::{Nakajima, OrbitQuiver};
use crate::quiver::{IceQuiver, Quiver};
use crate::rootsys::{Root, RootSystem, Sign, SignFunction};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// How far [`Categorification::conflation_additivity`] looks back.
pub const ADDITIVITY_REACH: i64 = 5;

/// `X_a` for a non-frozen orbit, `P_a` for a frozen one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Label {
    X(Root),
    P(Root),
}

impl Label {
    pub fn root(&self) -> &Root {
        match self {
            Label::X(r) | Label::P(r) => r,
        }
    }

    pub fn is_frozen(&self) -> bool {
        matches!(self, Label::P(_))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::X(r) => write!(f, "X[{}]", r),
            Label::P(r) => write!(f, "P[{}]", r),
        }
    }
}

/// A multiset of labels.
pub type LabelCount = BTreeMap<Label, usize>;

fn render_multiset(m: &LabelCount) -> String {
    if m.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> =
        m.iter().map(|(l, &k)| if k == 1 { l.to_string() } else { format!("{}^{}", l, k) }).collect();
    parts.join(" + ")
}

/// `0 -> left -> middle -> right -> 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Conflation {
    pub left: Label,
    pub middle: LabelCount,
    pub right: Label,
}

impl fmt::Display for Conflation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0 -> {} -> {} -> {} -> 0", self.left, render_multiset(&self.middle), self.right)
    }
}

/// The two exchange conflations of `X_{-a_i}`: `incoming` ends at it (its
/// middle term gives the arrows into `i`), `outgoing` starts at it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExchangePair {
    pub vertex: usize,
    pub incoming: Conflation,
    pub outgoing: Conflation,
}

/// A conflation of the Frobenius category before passing to orbits.
#[derive(Clone, Debug)]
pub struct LiftedConflation {
    pub left: RQVertex,
    pub middle: Vec<(RQVertex, usize)>,
    pub right: RQVertex,
}

/// The summands of a basic cluster-tilting object with the results of the
/// rigidity and maximality sweeps.
#[derive(Clone, Debug, Serialize)]
pub struct ClusterTiltingObject {
    pub mutable: Vec<Label>,
    pub frozen: Vec<Label>,
    /// Pairs of summands with nonzero `Ext^1`.
    pub rigidity_failures: Vec<(Label, Label)>,
    /// Non-summands with `Ext^1(T, X) = 0`.
    pub maximality_failures: Vec<Label>,
    /// Frozen objects with some nonzero `Ext^1`.
    pub frozen_ext_failures: Vec<Label>,
}

impl ClusterTiltingObject {
    pub fn is_cluster_tilting(&self) -> bool {
        self.rigidity_failures.is_empty() && self.maximality_failures.is_empty() && self.frozen_ext_failures.is_empty()
    }
}

/// The labeled orbit category `gpr(S_C) / F` for `F = Sigma tau^-1`.
pub struct Categorification {
    nak: Nakajima,
    rs: RootSystem,
    orientation: Quiver,
    signs: SignFunction,
    rq: RepetitionQuiver,
    f_inv: VertexMap,
    orbit: OrbitQuiver,
    labels: Vec<Label>,
    by_rep: HashMap<RQVertex, usize>,
    by_label: HashMap<Label, usize>,
}

impl Categorification {
    /// The full configuration `C = ZQ_0`.
    pub fn new(rs: &RootSystem, orientation: &Quiver) -> Result<Self> {
        Self::with_configuration(rs, orientation, None)
    }

    /// `config` as accepted by [`crate::nakajima::Configuration::parse`].
    pub fn with_configuration(rs: &RootSystem, orientation: &Quiver, config: Option<&str>) -> Result<Self> {
        let signs = SignFunction::from_orientation(orientation)?;
        let nak = Nakajima::new(rs, orientation, 1, config)?;
        let mut orbit = nak.orbit_quiver()?;
        let rq = RepetitionQuiver::new(orientation, true)?;
        let mut c = Categorification {
            f_inv: nak.f().inverse(),
            nak,
            rs: rs.clone(),
            orientation: orientation.clone(),
            signs,
            rq,
            orbit: orbit.clone(),
            labels: Vec::new(),
            by_rep: HashMap::new(),
            by_label: HashMap::new(),
        };
        let mut labels = Vec::with_capacity(orbit.vertices.len());
        for v in &orbit.vertices {
            labels.push(if v.frozen { c.frozen_label(v.rep)? } else { Label::X(c.x_root(v.rep)?) });
        }
        for (k, l) in labels.iter().enumerate() {
            if c.by_label.insert(l.clone(), k).is_some() {
                return Err(Error::Internal(format!("label {} is used twice", l)));
            }
            c.by_rep.insert(orbit.vertices[k].rep, k);
        }
        let xs: Vec<&Root> = labels.iter().filter(|l| !l.is_frozen()).map(Label::root).collect();
        if xs.len() != rs.almost_positive().len() || !xs.iter().all(|r| rs.contains(r)) {
            return Err(Error::Internal("X labels are not a bijection with the almost positive roots".into()));
        }
        orbit.labels = labels.iter().map(Label::to_string).collect();
        c.orbit = orbit;
        c.labels = labels;
        Ok(c)
    }

    pub fn nakajima(&self) -> &Nakajima {
        &self.nak
    }

    pub fn roots(&self) -> &RootSystem {
        &self.rs
    }

    pub fn orientation(&self) -> &Quiver {
        &self.orientation
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// The orbit quiver with labels `X[..]` and `P[..]`.
    pub fn orbit_quiver(&self) -> &OrbitQuiver {
        &self.orbit
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// Label of any vertex of the framed quiver (frozen vertices must survive).
    pub fn label(&self, v: RQVertex) -> Result<&Label> {
        self.by_rep
            .get(&self.nak.rep(v))
            .map(|&k| &self.labels[k])
            .ok_or_else(|| Error::Parse(format!("{} is not a vertex of the configuration quiver", v)))
    }

    /// Orbit representative carrying a label.
    pub fn vertex(&self, l: &Label) -> Result<RQVertex> {
        self.by_label
            .get(l)
            .map(|&k| self.orbit.vertices[k].rep)
            .ok_or_else(|| Error::Parse(format!("no orbit is labeled {}", l)))
    }

    /// The root of a non-frozen vertex: the member of its orbit lying in the
    /// fundamental domain `mod kQ` (root `a`) or at some `Sigma P(i)` (`-a_i`).
    fn x_root(&self, v: RQVertex) -> Result<Root> {
        let happel = self.nak.happel();
        let n = self.rank();
        let proj: Vec<Root> = (0..n).map(|i| happel.point(RQVertex::new(i, 0)).root).collect();
        let mut found = Vec::new();
        let mut cur = v;
        for _ in 0..4 {
            cur = self.f_inv.apply(cur);
        }
        for _ in 0..9 {
            let pt = happel.point(cur);
            if pt.shift == 0 {
                found.push(pt.root);
            } else if pt.shift == 1 {
                if let Some(i) = proj.iter().position(|r| *r == pt.root) {
                    found.push(Root::negative_simple(n, i));
                }
            }
            cur = self.nak.f().apply(cur);
        }
        found.dedup();
        match found.as_slice() {
            [r] => Ok(r.clone()),
            _ => Err(Error::Internal(format!(
                "the orbit of {} meets the fundamental domain at {:?}",
                v,
                found.iter().map(Root::to_string).collect::<Vec<_>>()
            ))),
        }
    }

    /// `P_{tau_+(a)}` where `X_a` sits at `sigma^-1` of the frozen vertex,
    /// checked against `tau_-` of the label at its predecessor.
    fn frozen_label(&self, v: RQVertex) -> Result<Label> {
        let after = self.x_root(sigma_inv(v))?;
        let before = self.x_root(RQVertex::new(v.i, v.p))?;
        let plus = self.rs.tau_plus(&self.signs, &after)?;
        let minus = self.rs.tau_minus(&self.signs, &before)?;
        if plus != minus {
            return Err(Error::Internal(format!(
                "label clash at {}: tau_+({}) = {} but tau_-({}) = {}",
                v, after, plus, before, minus
            )));
        }
        Ok(Label::P(plus))
    }

    /// The orbits of `X_{-a_i}`, in the order of `i`.
    pub fn initial_summands(&self) -> Result<Vec<RQVertex>> {
        (0..self.rank()).map(|i| self.vertex(&Label::X(Root::negative_simple(self.rank(), i)))).collect()
    }

    /// Orbits of the objects `X_d` for a list of denominator vectors.
    pub fn summands_for(&self, d_vectors: &[Vec<i64>]) -> Result<Vec<RQVertex>> {
        d_vectors.iter().map(|d| self.vertex(&Label::X(Root::new(d.clone())))).collect()
    }

    /// Surviving frozen orbits in the order of the almost positive roots of
    /// their labels.
    pub fn frozen_summands(&self) -> Vec<RQVertex> {
        self.rs
            .almost_positive()
            .iter()
            .filter_map(|r| self.by_label.get(&Label::P(r.clone())))
            .map(|&k| self.orbit.vertices[k].rep)
            .collect()
    }

    /// Rigidity and maximality of `mutable` together with all frozen
    /// orbits, using `Ext^1` in the orbit category.
    pub fn cluster_tilting(&self, mutable: &[RQVertex]) -> Result<ClusterTiltingObject> {
        let mut rigidity_failures = Vec::new();
        for &a in mutable {
            for &b in mutable {
                if self.nak.orbit_ext1(a, b)? != 0 {
                    rigidity_failures.push((self.label(a)?.clone(), self.label(b)?.clone()));
                }
            }
        }
        let mut maximality_failures = Vec::new();
        let chosen: Vec<RQVertex> = mutable.iter().map(|&v| self.nak.rep(v)).collect();
        for x in self.nak.non_frozen_reps() {
            if chosen.contains(&x) {
                continue;
            }
            let mut total = 0;
            for &a in mutable {
                total += self.nak.orbit_ext1(a, x)?;
            }
            if total == 0 {
                maximality_failures.push(self.label(x)?.clone());
            }
        }
        let frozen = self.frozen_summands();
        let mut frozen_ext_failures = Vec::new();
        let everything: Vec<RQVertex> = self.orbit.vertices.iter().map(|v| v.rep).collect();
        for &p in &frozen {
            for &y in &everything {
                if self.nak.orbit_ext1(p, y)? != 0 || self.nak.orbit_ext1(y, p)? != 0 {
                    frozen_ext_failures.push(self.label(p)?.clone());
                    break;
                }
            }
        }
        Ok(ClusterTiltingObject {
            mutable: mutable.iter().map(|&v| self.label(v).cloned()).collect::<Result<_>>()?,
            frozen: frozen.iter().map(|&v| self.label(v).cloned()).collect::<Result<_>>()?,
            rigidity_failures,
            maximality_failures,
            frozen_ext_failures,
        })
    }

    /// The exchange conflations of `X_{-a_i}` in closed form.
    pub fn exchange_conflations(&self, i: usize) -> Result<ExchangePair> {
        let n = self.rank();
        if i >= n {
            return Err(Error::VertexOutOfRange { vertex: i, size: n });
        }
        let neg = |j: usize| Root::negative_simple(n, j);
        let x_minus = Label::X(neg(i));
        let x_plus = Label::X(Root::simple(n, i));
        let mut projectives = LabelCount::new();
        for a in self.rs.positive_roots() {
            let m = a.multiplicity(i);
            if m > 0 {
                projectives.insert(Label::P(a.clone()), m as usize);
            }
        }
        let neighbours = |js: Vec<usize>| -> LabelCount {
            let mut m: LabelCount = js.into_iter().map(|j| (Label::X(neg(j)), 1)).collect();
            m.insert(Label::P(neg(i)), 1);
            m
        };
        let (incoming, outgoing) = match self.signs.get(i) {
            Sign::Plus => (
                Conflation { left: x_plus.clone(), middle: projectives, right: x_minus.clone() },
                Conflation {
                    left: x_minus,
                    middle: neighbours(self.orientation.successors(i)),
                    right: x_plus,
                },
            ),
            Sign::Minus => (
                Conflation {
                    left: x_plus.clone(),
                    middle: neighbours(self.orientation.predecessors(i)),
                    right: x_minus.clone(),
                },
                Conflation { left: x_minus, middle: projectives, right: x_plus },
            ),
        };
        Ok(ExchangePair { vertex: i, incoming, outgoing })
    }

    fn lifted_to_labels(&self, c: &LiftedConflation) -> Result<Conflation> {
        let mut middle = LabelCount::new();
        for (v, m) in &c.middle {
            *middle.entry(self.label(*v)?.clone()).or_insert(0) += m;
        }
        Ok(Conflation { left: self.label(c.left)?.clone(), middle, right: self.label(c.right)?.clone() })
    }

    /// The exchange conflations of `X_{-a_i}` read off the framed quiver:
    /// one is the mesh through a lift of `X_{-a_i}`, the other is
    /// `0 -> Sigma^-1 z -> P_z -> z -> 0` with `P_z` the sum of
    /// `D(y, z)` copies of `sigma(y)`.
    pub fn lifted_conflations(&self, i: usize) -> Result<(LiftedConflation, LiftedConflation)> {
        let n = self.rank();
        let x = self.vertex(&Label::X(Root::negative_simple(n, i)))?;
        let target = Label::X(Root::simple(n, i));
        let alive = |v: &RQVertex| self.nak.is_alive(*v);
        let mesh = |z: RQVertex| -> LiftedConflation {
            let middle = self.rq.predecessors(z).into_iter().filter(alive).map(|m| (m, 1)).collect();
            LiftedConflation { left: z.tau(), middle, right: z }
        };
        let m_out = mesh(x.tau_inv());
        let m_in = mesh(x);
        let mesh_conf = if *self.label(m_out.right)? == target {
            m_out
        } else if *self.label(m_in.left)? == target {
            m_in
        } else {
            return Err(Error::Internal(format!("no mesh through {} reaches {}", x, target)));
        };
        let sigma_inv_map = self.nak.happel().sigma().inverse();
        let y = self.vertex(&target)?;
        let z = if *self.label(sigma_inv_map.apply(x))? == target {
            x
        } else if *self.label(sigma_inv_map.apply(y))? == *self.label(x)? {
            y
        } else {
            return Err(Error::Internal(format!("{} and {} are not Sigma-neighbours", x, target)));
        };
        let cover = self.projective_cover(z)?;
        Ok((mesh_conf, LiftedConflation { left: sigma_inv_map.apply(z), middle: cover, right: z }))
    }

    /// `sum_y D(y, z) sigma(y)` over the non-frozen `y`.
    fn projective_cover(&self, z: RQVertex) -> Result<Vec<(RQVertex, usize)>> {
        let h = self.nak.happel().coxeter_number();
        let mut out = Vec::new();
        for p in z.p - h - 2..=z.p {
            for i in 0..self.rank() {
                let y = RQVertex::new(i, p);
                let (f, g) = self.nak.stable_functor(y)?;
                let d = f.dim(g.inverse().apply(z));
                if d > 0 {
                    let s = sigma(y);
                    if !self.nak.is_alive(s) {
                        return Err(Error::NotAdmissible(format!("{} is not in the configuration", s)));
                    }
                    out.push((s, d));
                }
            }
        }
        Ok(out)
    }

    /// Both lifted exchange conflations of `X_{-a_i}` as labeled
    /// conflations, in the layout of [`Categorification::exchange_conflations`].
    pub fn computed_conflations(&self, i: usize) -> Result<ExchangePair> {
        let (a, b) = self.lifted_conflations(i)?;
        let (a, b) = (self.lifted_to_labels(&a)?, self.lifted_to_labels(&b)?);
        let (incoming, outgoing) = if a.right.root().is_positive() { (b, a) } else { (a, b) };
        Ok(ExchangePair { vertex: i, incoming, outgoing })
    }

    /// Exactness of `Hom(P, -)` on a lifted conflation, for the frozen `P`
    /// from two levels before its left end up to its right end. Spaces in
    /// `R_C` grow exponentially with distance, so only `P` within
    /// [`ADDITIVITY_REACH`] levels of the right end are used. Returns
    /// `(checked, failures)`.
    pub fn conflation_additivity(&self, c: &LiftedConflation) -> Result<(usize, Vec<RQVertex>)> {
        let cat = MeshCategory::framed(&self.rq, crate::meshcat::FrozenFilter::All);
        let mut checked = 0;
        let mut bad = Vec::new();
        for p in (c.left.p - 2).max(c.right.p - ADDITIVITY_REACH)..=c.right.p {
            for i in 0..self.rank() {
                let f = RQVertex::frozen(i, p);
                if !self.nak.is_alive(f) {
                    continue;
                }
                let hom = cat.hom_from_until(f, c.right.p);
                let mid: usize = c.middle.iter().map(|(v, m)| m * hom.dim(*v)).sum();
                checked += 1;
                if hom.dim(c.left) + hom.dim(c.right) != mid {
                    bad.push(f);
                }
            }
        }
        Ok((checked, bad))
    }

    /// The ice quiver of `T~` by direct enumeration. Vertex `i < n` is
    /// `X_{-a_i}`, the frozen vertices are the `P_a` in the order of the
    /// almost positive roots.
    pub fn ice_quiver_direct(&self) -> Result<IceQuiver> {
        if !self.nak.configuration().is_full() {
            return Err(Error::NotAdmissible("the direct enumeration needs C = ZQ_0".into()));
        }
        let n = self.rank();
        let roots = self.rs.almost_positive();
        let total = n + roots.len();
        let frozen = |r: &Root| n + self.rs.index_of(r).expect("almost positive root");
        let mut b = vec![vec![0i64; total]; total];
        let mut arrow = |s: usize, t: usize, k: i64| {
            b[s][t] += k;
            b[t][s] -= k;
        };
        for (i, j) in self.orientation.arrows() {
            arrow(i, j, 1);
        }
        for i in 0..n {
            let neg = frozen(&Root::negative_simple(n, i));
            let source = self.signs.get(i) == Sign::Plus;
            for a in self.rs.positive_roots() {
                let m = a.multiplicity(i);
                if m > 0 {
                    if source {
                        arrow(frozen(a), i, m);
                    } else {
                        arrow(i, frozen(a), m);
                    }
                }
            }
            if source {
                arrow(i, neg, 1);
            } else {
                arrow(neg, i, 1);
            }
        }
        let mut labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        labels.extend(roots.iter().map(Root::to_string));
        IceQuiver::new(Quiver::from_b_matrix(b)?, n)?.with_labels(labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    pub(crate) fn a2() -> Categorification {
        let rs = RootSystem::of_type(Family::A, 2).unwrap();
        let q = rs.diagram().orientation(&[(0, 1)]).unwrap();
        Categorification::new(&rs, &q).unwrap()
    }

    fn r(v: &[i64]) -> Root {
        Root::new(v.to_vec())
    }

    #[test]
    fn a2_labels_follow_the_mesh() {
        let c = a2();
        let x = |i, p| c.label(RQVertex::new(i, p)).unwrap().clone();
        let pf = |i, p| c.label(RQVertex::frozen(i, p)).unwrap().clone();
        assert_eq!(x(0, 0), Label::X(r(&[1, 0])));
        assert_eq!(pf(0, 0), Label::P(r(&[1, 1])));
        assert_eq!(x(1, 0), Label::X(r(&[1, 1])));
        assert_eq!(pf(1, 0), Label::P(r(&[1, 0])));
        let sp1 = c.nakajima().happel().sigma().apply(RQVertex::new(0, 0));
        assert_eq!(c.label(sp1).unwrap(), &Label::X(r(&[-1, 0])));
    }

    #[test]
    fn a2_source_conflations() {
        let c = a2();
        let e = c.exchange_conflations(0).unwrap();
        let labels = |m: &LabelCount| m.keys().map(|l| l.to_string()).collect::<Vec<_>>();
        assert_eq!(labels(&e.outgoing.middle), ["X[-a2]", "P[-a1]"]);
        assert_eq!(labels(&e.incoming.middle), ["P[a1]", "P[a1+a2]"]);
        assert_eq!(c.computed_conflations(0).unwrap(), e);
        assert_eq!(c.computed_conflations(1).unwrap(), c.exchange_conflations(1).unwrap());
    }

    #[test]
    fn a1_direct() {
        let rs = RootSystem::of_type(Family::A, 1).unwrap();
        let q = rs.diagram().bipartite_orientation();
        let c = Categorification::new(&rs, &q).unwrap();
        let ice = c.ice_quiver_direct().unwrap();
        assert_eq!(ice.to_text(), "ice quiver: 1 mutable, 2 frozen\n  1 -> -a1\n  a1 -> 1\n");
    }
}
