//! Morphism spaces of mesh categories, computed one source at a time.
//!
//! For a fixed source `x` the functor `Hom(x, -)` is built level by level:
//! at a vertex `z`, every morphism is a sum of morphisms through the
//! predecessors of `z`, and the only new relation is the mesh relator at `z`,
//! so `Hom(x, z)` is the cokernel of `Hom(x, tau z) -> sum Hom(x, y)`. Frozen
//! vertices carry no relator; frozen vertices that are not kept are zero
//! objects. Once a whole level vanishes every later space vanishes, because
//! every path crosses every intermediate level.

use super::vertex::{RQVertex, VertexMap};
use super::window::RepetitionQuiver;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, RowSpace, Q};
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// Which frozen vertices survive.
#[derive(Clone)]
pub enum FrozenFilter {
    All,
    Predicate(Arc<dyn Fn(RQVertex) -> bool + Send + Sync>),
}

impl fmt::Debug for FrozenFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrozenFilter::All => f.write_str("All"),
            FrozenFilter::Predicate(_) => f.write_str("Predicate(..)"),
        }
    }
}

/// The mesh category of `ZQ` (unframed), or the quotient of the framed mesh
/// category by the identities of the frozen vertices that are not kept.
#[derive(Clone, Debug)]
pub struct MeshCategory {
    rq: RepetitionQuiver,
    keep: FrozenFilter,
    level_cap: i64,
}

#[derive(Clone, Debug)]
struct Space {
    dim: usize,
    reps: Vec<Vec<RQVertex>>,
    incoming: HashMap<RQVertex, Matrix>,
}

/// The functor `Hom(x, -)` restricted to the vertices where it is nonzero.
#[derive(Clone, Debug)]
pub struct HomFunctor {
    source: RQVertex,
    spaces: HashMap<RQVertex, Space>,
    last_level: i64,
    vanished: bool,
}

impl MeshCategory {
    pub fn new(rq: RepetitionQuiver, keep: FrozenFilter) -> Self {
        let level_cap = 8 * rq.rank() as i64 + 24;
        MeshCategory { rq, keep, level_cap }
    }

    pub fn unframed(rq: &RepetitionQuiver) -> Self {
        Self::new(rq.unframed(), FrozenFilter::All)
    }

    pub fn framed(rq: &RepetitionQuiver, keep: FrozenFilter) -> Self {
        Self::new(rq.framed(), keep)
    }

    pub fn with_level_cap(mut self, cap: i64) -> Self {
        self.level_cap = cap;
        self
    }

    pub fn quiver(&self) -> &RepetitionQuiver {
        &self.rq
    }

    pub fn is_alive(&self, v: RQVertex) -> bool {
        if !v.frozen {
            return true;
        }
        self.rq.is_framed()
            && match &self.keep {
                FrozenFilter::All => true,
                FrozenFilter::Predicate(f) => f(v),
            }
    }

    /// `Hom(x, -)`, which must vanish within the level cap.
    pub fn hom_from(&self, x: RQVertex) -> Result<HomFunctor> {
        let h = self.knit_from(x, x.p + self.level_cap + 1);
        if h.vanished {
            Ok(h)
        } else {
            Err(Error::WindowTooSmall(format!("Hom({}, -) does not vanish within {} levels", x, self.level_cap)))
        }
    }

    /// `Hom(x, -)` on the levels up to `p_max`, stopping early if it vanishes.
    pub fn hom_from_until(&self, x: RQVertex, p_max: i64) -> HomFunctor {
        self.knit_from(x, p_max)
    }

    fn knit_from(&self, x: RQVertex, p_max: i64) -> HomFunctor {
        let mut spaces: HashMap<RQVertex, Space> = HashMap::new();
        if !self.is_alive(x) {
            return HomFunctor { source: x, spaces, last_level: x.p - 1, vanished: true };
        }
        spaces.insert(x, Space { dim: 1, reps: vec![vec![x]], incoming: HashMap::new() });
        let level = self.rq.level(x.p);
        let start = level.iter().position(|&v| v == x).map_or(0, |k| k + 1);
        for &z in &level[start..] {
            if self.is_alive(z) {
                if let Some(space) = self.knit_vertex(&spaces, z) {
                    spaces.insert(z, space);
                }
            }
        }
        let mut h = HomFunctor { source: x, spaces, last_level: x.p, vanished: false };
        self.extend(&mut h, p_max);
        h
    }

    /// Continues knitting `h` up to level `p_max`, unless it has vanished.
    pub fn extend(&self, h: &mut HomFunctor, p_max: i64) {
        while !h.vanished && h.last_level < p_max {
            let p = h.last_level + 1;
            let mut nonzero = false;
            for z in self.rq.level(p) {
                if !self.is_alive(z) {
                    continue;
                }
                if let Some(space) = self.knit_vertex(&h.spaces, z) {
                    h.spaces.insert(z, space);
                    nonzero = true;
                }
            }
            if nonzero {
                h.last_level = p;
            } else {
                h.vanished = true;
            }
        }
    }

    fn knit_vertex(&self, spaces: &HashMap<RQVertex, Space>, z: RQVertex) -> Option<Space> {
        let preds: Vec<(RQVertex, &Space)> = self
            .rq
            .predecessors(z)
            .into_iter()
            .filter_map(|y| spaces.get(&y).map(|s| (y, s)))
            .collect();
        if preds.is_empty() {
            return None;
        }
        let mut offsets = Vec::with_capacity(preds.len());
        let mut total = 0;
        for (_, s) in &preds {
            offsets.push(total);
            total += s.dim;
        }
        let mut relations = RowSpace::new(total);
        if let (false, Some(t)) = (z.frozen, spaces.get(&z.tau())) {
            let tz = z.tau();
            for b in 0..t.dim {
                let mut v = vec![Q::zero(); total];
                for ((_, s), &off) in preds.iter().zip(&offsets) {
                    if let Some(m) = s.incoming.get(&tz) {
                        for r in 0..s.dim {
                            v[off + r] += m.get(r, b);
                        }
                    }
                }
                relations.insert(&v);
            }
        }
        let free = relations.free_columns();
        if free.is_empty() {
            return None;
        }
        let pi = relations.quotient_map();
        let mut reps = Vec::with_capacity(free.len());
        for &c in &free {
            let k = offsets.partition_point(|&o| o <= c) - 1;
            let mut path = preds[k].1.reps[c - offsets[k]].clone();
            path.push(z);
            reps.push(path);
        }
        let incoming = preds
            .iter()
            .zip(&offsets)
            .map(|((y, s), &off)| (*y, pi.column_block(off, s.dim)))
            .collect();
        Some(Space { dim: free.len(), reps, incoming })
    }

    pub fn hom_dim(&self, x: RQVertex, y: RQVertex) -> Result<usize> {
        Ok(self.hom_from(x)?.dim(y))
    }
}

impl HomFunctor {
    pub fn source(&self) -> RQVertex {
        self.source
    }

    /// The last level computed.
    pub fn last_level(&self) -> i64 {
        self.last_level
    }

    /// Whether the functor is known to vanish beyond [`HomFunctor::last_level`].
    pub fn vanished(&self) -> bool {
        self.vanished
    }

    /// Whether [`HomFunctor::dim`] is exact at `y`.
    pub fn covers(&self, y: RQVertex) -> bool {
        self.vanished || y.p <= self.last_level
    }

    pub fn dim(&self, y: RQVertex) -> usize {
        self.spaces.get(&y).map_or(0, |s| s.dim)
    }

    /// Vertices with a nonzero morphism space, sorted.
    pub fn support(&self) -> Vec<(RQVertex, usize)> {
        let mut v: Vec<_> = self.spaces.iter().map(|(k, s)| (*k, s.dim)).collect();
        v.sort();
        v
    }

    /// A path representing each basis element of `Hom(source, y)`.
    pub fn representatives(&self, y: RQVertex) -> &[Vec<RQVertex>] {
        self.spaces.get(&y).map_or(&[], |s| &s.reps)
    }

    /// Post-composition with the arrow `a -> b`.
    pub fn arrow_map(&self, a: RQVertex, b: RQVertex) -> Option<&Matrix> {
        self.spaces.get(&b)?.incoming.get(&a)
    }

    /// Post-composes `v` in `Hom(source, path[0])` with the path.
    pub fn apply_path(&self, v: &[Q], path: &[RQVertex]) -> Option<Vec<Q>> {
        let mut cur = v.to_vec();
        for w in path.windows(2) {
            let m = self.arrow_map(w[0], w[1])?;
            cur = m.mul_vec(&cur);
        }
        Some(cur)
    }

    /// Coordinates of the class of a path starting at the source.
    pub fn class_of_path(&self, path: &[RQVertex]) -> Option<Vec<Q>> {
        if path.first() != Some(&self.source) {
            return None;
        }
        self.apply_path(&[Q::one()], path)
    }
}

/// `Hom(g x, -)` obtained from `Hom(x, -)` through a quiver automorphism `g`
/// under which the category is invariant.
#[derive(Clone, Debug)]
pub struct Translated<'a> {
    functor: &'a HomFunctor,
    g: VertexMap,
    g_inv: VertexMap,
}

impl<'a> Translated<'a> {
    pub fn new(functor: &'a HomFunctor, g: VertexMap) -> Self {
        let g_inv = g.inverse();
        Translated { functor, g, g_inv }
    }

    pub fn source(&self) -> RQVertex {
        self.g.apply(self.functor.source())
    }

    pub fn covers(&self, y: RQVertex) -> bool {
        self.functor.covers(self.g_inv.apply(y))
    }

    pub fn dim(&self, y: RQVertex) -> usize {
        self.functor.dim(self.g_inv.apply(y))
    }

    pub fn support(&self) -> Vec<(RQVertex, usize)> {
        self.functor.support().into_iter().map(|(v, d)| (self.g.apply(v), d)).collect()
    }

    pub fn representatives(&self, y: RQVertex) -> Vec<Vec<RQVertex>> {
        self.functor
            .representatives(self.g_inv.apply(y))
            .iter()
            .map(|p| p.iter().map(|&v| self.g.apply(v)).collect())
            .collect()
    }

    pub fn apply_path(&self, v: &[Q], path: &[RQVertex]) -> Option<Vec<Q>> {
        let pulled: Vec<RQVertex> = path.iter().map(|&w| self.g_inv.apply(w)).collect();
        self.functor.apply_path(v, &pulled)
    }
}
