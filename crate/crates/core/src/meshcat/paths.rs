//! Morphism spaces of a mesh category by brute force: enumerate every path in
//! a finite window and divide by the ideal generated by the mesh relators.
//! Slow, but independent of the level-by-level engine in `hom`.

use super::vertex::RQVertex;
use super::window::TranslationQuiver;
use crate::error::{Error, Result};
use crate::linalg::Q;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap, HashSet};

/// The space of path classes from `x` to `y`.
#[derive(Clone, Debug)]
pub struct PathHom {
    pub dim: usize,
    /// Every path from `x` to `y`.
    pub paths: Vec<Vec<RQVertex>>,
    /// Paths whose classes form a basis.
    pub basis: Vec<Vec<RQVertex>>,
    pub relation_rank: usize,
}

type Sparse = BTreeMap<usize, Q>;

/// Sparse echelon form keyed by pivot (the largest column of each row).
#[derive(Default)]
struct SparseSpace {
    rows: HashMap<usize, Sparse>,
}

impl SparseSpace {
    fn insert(&mut self, mut v: Sparse) {
        while let Some((&p, c)) = v.iter().next_back() {
            let Some(row) = self.rows.get(&p) else {
                let inv = c.recip();
                for x in v.values_mut() {
                    *x *= &inv;
                }
                self.rows.insert(p, v);
                return;
            };
            let f = c.clone();
            for (k, r) in row {
                let e = v.entry(*k).or_insert_with(Q::zero);
                *e -= &f * r;
                if e.is_zero() {
                    v.remove(k);
                }
            }
        }
    }
}

struct Adjacency {
    succ: HashMap<RQVertex, Vec<RQVertex>>,
    pred: HashMap<RQVertex, Vec<RQVertex>>,
}

impl Adjacency {
    fn new(tq: &TranslationQuiver) -> Self {
        let mut succ: HashMap<RQVertex, Vec<RQVertex>> = HashMap::new();
        let mut pred: HashMap<RQVertex, Vec<RQVertex>> = HashMap::new();
        for (a, b, _) in &tq.arrows {
            succ.entry(*a).or_default().push(*b);
            pred.entry(*b).or_default().push(*a);
        }
        Adjacency { succ, pred }
    }

    fn reach(&self, start: RQVertex, forward: bool) -> HashSet<RQVertex> {
        let adj = if forward { &self.succ } else { &self.pred };
        let mut seen = HashSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in adj.get(&v).into_iter().flatten() {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// All paths `a -> b`.
    fn paths(&self, a: RQVertex, b: RQVertex, to_b: &HashSet<RQVertex>) -> Vec<Vec<RQVertex>> {
        let mut out = Vec::new();
        let mut cur = vec![a];
        self.extend(b, to_b, &mut cur, &mut out);
        out
    }

    fn extend(&self, b: RQVertex, to_b: &HashSet<RQVertex>, cur: &mut Vec<RQVertex>, out: &mut Vec<Vec<RQVertex>>) {
        let v = *cur.last().unwrap();
        if v == b {
            out.push(cur.clone());
            return;
        }
        for &w in self.succ.get(&v).into_iter().flatten() {
            if to_b.contains(&w) {
                cur.push(w);
                self.extend(b, to_b, cur, out);
                cur.pop();
            }
        }
    }
}

/// Dimension of the morphism space `x -> y` in the mesh category of the
/// window, with a basis of path classes. Mesh relators are imposed at every
/// non-frozen vertex whose whole mesh lies in the window, and also at frozen
/// vertices when `frozen_relate` is set.
pub fn mesh_hom_dim(tq: &TranslationQuiver, x: RQVertex, y: RQVertex, frozen_relate: bool) -> Result<PathHom> {
    for v in [x, y] {
        if !tq.contains(v) {
            return Err(Error::WindowTooSmall(format!(
                "{} lies outside the window [{}, {}]",
                v, tq.p_min, tq.p_max
            )));
        }
    }
    let adj = Adjacency::new(tq);
    let from_x = adj.reach(x, true);
    let to_y = adj.reach(y, false);
    if !from_x.contains(&y) {
        return Ok(PathHom { dim: 0, paths: Vec::new(), basis: Vec::new(), relation_rank: 0 });
    }
    let paths = adj.paths(x, y, &to_y);
    let index: HashMap<&[RQVertex], usize> = paths.iter().enumerate().map(|(k, p)| (p.as_slice(), k)).collect();

    let mut space = SparseSpace::default();
    let mut to_cache: HashMap<RQVertex, HashSet<RQVertex>> = HashMap::new();
    for &z in &tq.vertices {
        if (z.frozen && !frozen_relate) || !from_x.contains(&z) || !to_y.contains(&z) {
            continue;
        }
        let tz = z.tau();
        if !tq.contains(tz) || !from_x.contains(&tz) {
            continue;
        }
        let middles: Vec<RQVertex> = adj.pred.get(&z).into_iter().flatten().copied().collect();
        // a relator only counts when its whole mesh is in the window
        let complete = middles.iter().all(|m| adj.pred.get(m).is_some_and(|p| p.contains(&tz)));
        if !complete || middles.is_empty() {
            continue;
        }
        let to_tz = to_cache.entry(tz).or_insert_with(|| adj.reach(tz, false)).clone();
        let us = adj.paths(x, tz, &to_tz);
        let vs = adj.paths(z, y, &to_y);
        for u in &us {
            for v in &vs {
                let mut rel = Sparse::new();
                for &m in &middles {
                    let mut p = u.clone();
                    p.push(m);
                    p.extend_from_slice(v);
                    let k = index[p.as_slice()];
                    *rel.entry(k).or_insert_with(Q::zero) += Q::one();
                }
                rel.retain(|_, c| !c.is_zero());
                if !rel.is_empty() {
                    space.insert(rel);
                }
            }
        }
    }
    let relation_rank = space.rows.len();
    let basis: Vec<Vec<RQVertex>> =
        (0..paths.len()).filter(|k| !space.rows.contains_key(k)).map(|k| paths[k].clone()).collect();
    Ok(PathHom { dim: paths.len() - relation_rank, paths, basis, relation_rank })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::meshcat::build_zq;
    use crate::quiver::Quiver;

    #[test]
    fn a2_commutativity_square() {
        let q = Quiver::from_arrows(2, &[(0, 1)]).unwrap();
        let w = build_zq(&q, -1, 3, true).unwrap();
        let x = RQVertex::new(0, 0);
        let z = RQVertex::new(0, 1);
        let h = mesh_hom_dim(&w, x, z, false).unwrap();
        // two routes, one relation
        assert_eq!(h.paths.len(), 2);
        assert_eq!(h.dim, 1);
        let y = RQVertex::new(1, 0);
        let h = mesh_hom_dim(&w, y, RQVertex::frozen(0, 1), false).unwrap();
        assert_eq!(h.dim, 1);
        let u = build_zq(&q, -1, 3, false).unwrap();
        assert_eq!(mesh_hom_dim(&u, x, z, false).unwrap().dim, 0);
    }

    #[test]
    fn outside_window_is_an_error() {
        let q = Quiver::from_arrows(2, &[(0, 1)]).unwrap();
        let w = build_zq(&q, 0, 2, false).unwrap();
        assert!(mesh_hom_dim(&w, RQVertex::new(0, 0), RQVertex::new(0, 5), false).is_err());
    }
}
