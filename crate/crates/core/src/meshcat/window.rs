use super::vertex::RQVertex;
use crate::error::{Error, Result};
use crate::quiver::Quiver;
use std::fmt::Write as _;

/// The infinite repetition quiver `ZQ` of an acyclic quiver, optionally
/// framed by the vertices `(i', p)` with arrows `(i,p) -> (i',p) -> (i,p+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepetitionQuiver {
    orientation: Quiver,
    framed: bool,
    topo: Vec<usize>,
}

impl RepetitionQuiver {
    pub fn new(orientation: &Quiver, framed: bool) -> Result<Self> {
        let topo = orientation
            .topological_order()
            .ok_or_else(|| Error::InvalidOrientation("quiver has an oriented cycle".into()))?;
        Ok(RepetitionQuiver { orientation: orientation.clone(), framed, topo })
    }

    pub fn orientation(&self) -> &Quiver {
        &self.orientation
    }

    pub fn rank(&self) -> usize {
        self.orientation.n()
    }

    pub fn is_framed(&self) -> bool {
        self.framed
    }

    pub fn unframed(&self) -> RepetitionQuiver {
        RepetitionQuiver { framed: false, ..self.clone() }
    }

    pub fn framed(&self) -> RepetitionQuiver {
        RepetitionQuiver { framed: true, ..self.clone() }
    }

    /// Vertices of level `p`, in an order compatible with the arrows inside
    /// the level: non-frozen in topological order, then frozen.
    pub fn level(&self, p: i64) -> Vec<RQVertex> {
        let mut v: Vec<RQVertex> = self.topo.iter().map(|&i| RQVertex::new(i, p)).collect();
        if self.framed {
            v.extend(self.topo.iter().map(|&i| RQVertex::frozen(i, p)));
        }
        v
    }

    pub fn predecessors(&self, v: RQVertex) -> Vec<RQVertex> {
        let q = &self.orientation;
        if v.frozen {
            return vec![RQVertex::new(v.i, v.p)];
        }
        let mut out: Vec<RQVertex> = q.predecessors(v.i).into_iter().map(|j| RQVertex::new(j, v.p)).collect();
        out.extend(q.successors(v.i).into_iter().map(|j| RQVertex::new(j, v.p - 1)));
        if self.framed {
            out.push(RQVertex::frozen(v.i, v.p - 1));
        }
        out
    }

    pub fn successors(&self, v: RQVertex) -> Vec<RQVertex> {
        let q = &self.orientation;
        if v.frozen {
            return vec![RQVertex::new(v.i, v.p + 1)];
        }
        let mut out: Vec<RQVertex> = q.successors(v.i).into_iter().map(|j| RQVertex::new(j, v.p)).collect();
        out.extend(q.predecessors(v.i).into_iter().map(|j| RQVertex::new(j, v.p + 1)));
        if self.framed {
            out.push(RQVertex::frozen(v.i, v.p));
        }
        out
    }

    /// The mesh ending at a vertex: `(tau z, middle terms)`. With
    /// `frozen_meshes`, frozen vertices get the mesh `(i',p-1) -> (i,p) -> (i',p)`.
    pub fn mesh(&self, z: RQVertex, frozen_meshes: bool) -> Option<(RQVertex, Vec<RQVertex>)> {
        if z.frozen && !frozen_meshes {
            return None;
        }
        Some((z.tau(), self.predecessors(z)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArrowLabel {
    /// `(a, p): (i, p) -> (j, p)` for an arrow `a: i -> j`.
    Arrow { source: usize, target: usize, p: i64 },
    /// `sigma(a, p): (j, p-1) -> (i, p)`.
    Sigma { source: usize, target: usize, p: i64 },
    /// `(i, p) -> (i', p)`.
    ToFrozen { i: usize, p: i64 },
    /// `(i', p) -> (i, p+1)`.
    FromFrozen { i: usize, p: i64 },
}

/// A finite window `p_min <= p <= p_max` of `ZQ` or of the framed quiver.
#[derive(Clone, Debug)]
pub struct TranslationQuiver {
    pub p_min: i64,
    pub p_max: i64,
    pub framed: bool,
    pub vertices: Vec<RQVertex>,
    pub arrows: Vec<(RQVertex, RQVertex, ArrowLabel)>,
}

impl TranslationQuiver {
    pub fn contains(&self, v: RQVertex) -> bool {
        v.p >= self.p_min && v.p <= self.p_max && (self.framed || !v.frozen)
    }

    /// Drops the frozen vertices failing `keep`, with their arrows.
    pub fn retain_frozen(&mut self, keep: impl Fn(RQVertex) -> bool) {
        let alive = |v: &RQVertex| !v.frozen || keep(*v);
        self.vertices.retain(alive);
        self.arrows.retain(|(a, b, _)| alive(a) && alive(b));
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph zq {\n  rankdir=LR;\n");
        let id = |v: &RQVertex| format!("\"{}\"", v);
        for v in &self.vertices {
            let shape = if v.frozen { " [shape=box]" } else { "" };
            let _ = writeln!(s, "  {}{};", id(v), shape);
        }
        for (a, b, _) in &self.arrows {
            let _ = writeln!(s, "  {} -> {};", id(a), id(b));
        }
        s.push_str("}\n");
        s
    }
}

/// All vertices and arrows of the window `[p_min, p_max]`.
pub fn build_zq(orientation: &Quiver, p_min: i64, p_max: i64, framed: bool) -> Result<TranslationQuiver> {
    if p_min > p_max {
        return Err(Error::Parse("empty window".into()));
    }
    let rq = RepetitionQuiver::new(orientation, framed)?;
    let mut vertices = Vec::new();
    let mut arrows = Vec::new();
    for p in p_min..=p_max {
        vertices.extend(rq.level(p));
        for (i, j) in orientation.arrows() {
            arrows.push((RQVertex::new(i, p), RQVertex::new(j, p), ArrowLabel::Arrow { source: i, target: j, p }));
            if p > p_min {
                arrows.push((
                    RQVertex::new(j, p - 1),
                    RQVertex::new(i, p),
                    ArrowLabel::Sigma { source: i, target: j, p },
                ));
            }
        }
        if framed {
            for i in 0..orientation.n() {
                arrows.push((RQVertex::new(i, p), RQVertex::frozen(i, p), ArrowLabel::ToFrozen { i, p }));
                if p < p_max {
                    arrows.push((RQVertex::frozen(i, p), RQVertex::new(i, p + 1), ArrowLabel::FromFrozen { i, p }));
                }
            }
        }
    }
    Ok(TranslationQuiver { p_min, p_max, framed, vertices, arrows })
}
