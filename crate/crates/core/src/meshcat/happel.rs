//! The identification of `ZQ` with the indecomposables of the bounded derived
//! category of a Dynkin quiver, computed by knitting classes in the
//! Grothendieck group outwards from the projective slice.

use super::vertex::{RQVertex, VertexMap};
use super::window::{build_zq, RepetitionQuiver, TranslationQuiver};
use crate::error::{Error, Result};
use crate::quiver::Quiver;
use crate::repmod::{ext1_dim, hom_dim, module_quiver, ModuleCategory, QuiverRep};
use crate::rootsys::{Root, RootSystem};
use serde::Serialize;
use std::collections::HashMap;
use std::fmt;

/// An indecomposable `Sigma^shift M_root` of the derived category.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DerivedPoint {
    pub root: Root,
    pub shift: i64,
}

impl fmt::Display for DerivedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.root, self.shift)
    }
}

/// The knitted coordinates of `ZQ` together with `nu`, `Sigma` and `tau`.
#[derive(Clone, Debug)]
pub struct Happel {
    rs: RootSystem,
    orientation: Quiver,
    h: i64,
    /// `base[i][r]` is the point at `(i, r)` for `0 <= r < h`.
    base: Vec<Vec<DerivedPoint>>,
    lookup: HashMap<(Root, bool), (usize, i64)>,
    nu: VertexMap,
    sigma: VertexMap,
}

fn sign_of(c: &[i64]) -> Option<bool> {
    if c.iter().all(|&x| x >= 0) && c.iter().any(|&x| x > 0) {
        Some(true)
    } else if c.iter().all(|&x| x <= 0) && c.iter().any(|&x| x < 0) {
        Some(false)
    } else {
        None
    }
}

impl Happel {
    /// Knits the classes of the indecomposables over `2h + 2` levels on each
    /// side of the projectives, reads off shifts from sign changes along
    /// `tau`-orbits, and locates the injectives to define `nu`.
    pub fn knit(rs: &RootSystem, orientation: &Quiver) -> Result<Happel> {
        rs.diagram().check_orientation(orientation)?;
        let n = rs.rank();
        let h = rs.diagram().coxeter_number() as i64;
        let w = 2 * h + 2;
        let topo = orientation
            .topological_order()
            .ok_or_else(|| Error::InvalidOrientation("quiver has an oriented cycle".into()))?;
        let mq = module_quiver(orientation);
        let idx = |p: i64| (p + w) as usize;
        let width = (2 * w + 1) as usize;
        let mut class = vec![vec![Vec::<i64>::new(); width]; n];
        for (i, row) in class.iter_mut().enumerate() {
            row[idx(0)] = QuiverRep::projective(&mq, i).dim_vector();
        }
        let combine = |acc: &mut Vec<i64>, v: &[i64], sign: i64| {
            for (a, b) in acc.iter_mut().zip(v) {
                *a += sign * b;
            }
        };
        for p in 0..w {
            for &i in &topo {
                let mut c = vec![0; n];
                for j in orientation.predecessors(i) {
                    combine(&mut c, &class[j][idx(p + 1)], 1);
                }
                for j in orientation.successors(i) {
                    combine(&mut c, &class[j][idx(p)], 1);
                }
                combine(&mut c, &class[i][idx(p)].clone(), -1);
                class[i][idx(p + 1)] = c;
            }
        }
        for p in (-w + 1..=0).rev() {
            for &i in topo.iter().rev() {
                let mut c = vec![0; n];
                for j in orientation.predecessors(i) {
                    combine(&mut c, &class[j][idx(p)], 1);
                }
                for j in orientation.successors(i) {
                    combine(&mut c, &class[j][idx(p - 1)], 1);
                }
                combine(&mut c, &class[i][idx(p)].clone(), -1);
                class[i][idx(p - 1)] = c;
            }
        }

        let mut shift = vec![vec![0i64; width]; n];
        for i in 0..n {
            let mut sign = Vec::with_capacity(width);
            for p in -w..=w {
                let c = &class[i][idx(p)];
                let s = sign_of(c).ok_or_else(|| {
                    Error::Internal(format!("knitted class {:?} at ({},{}) is not a root", c, i + 1, p))
                })?;
                let r = Root::new(if s { c.clone() } else { c.iter().map(|x| -x).collect() });
                if !rs.contains(&r) {
                    return Err(Error::Internal(format!(
                        "knitted class {:?} at ({},{}) is not a root",
                        c,
                        i + 1,
                        p
                    )));
                }
                sign.push(s);
            }
            let z = idx(0);
            for k in z + 1..width {
                shift[i][k] = shift[i][k - 1] + i64::from(sign[k] != sign[k - 1]);
            }
            for k in (0..z).rev() {
                shift[i][k] = shift[i][k + 1] - i64::from(sign[k] != sign[k + 1]);
            }
            for k in 0..width {
                if (shift[i][k] % 2 == 0) != sign[k] {
                    return Err(Error::Internal(format!("shift parity broken at ({},{})", i + 1, k as i64 - w)));
                }
            }
        }

        let point_at = |i: usize, p: i64| -> DerivedPoint {
            let c = &class[i][idx(p)];
            let s = shift[i][idx(p)];
            let root = Root::new(if s % 2 == 0 { c.clone() } else { c.iter().map(|x| -x).collect() });
            DerivedPoint { root, shift: s }
        };
        // periodicity: tau^-h acts as Sigma^2
        for i in 0..n {
            for p in -w..=w - h {
                let a = point_at(i, p);
                let b = point_at(i, p + h);
                if b.root != a.root || b.shift != a.shift + 2 {
                    return Err(Error::Internal(format!(
                        "knitting is not periodic at ({},{}): {} vs {}",
                        i + 1,
                        p,
                        a,
                        b
                    )));
                }
            }
        }
        let base: Vec<Vec<DerivedPoint>> = (0..n).map(|i| (0..h).map(|r| point_at(i, r)).collect()).collect();
        let mut lookup = HashMap::new();
        for (i, row) in base.iter().enumerate() {
            for (r, pt) in row.iter().enumerate() {
                if lookup.insert((pt.root.clone(), pt.shift % 2 == 0), (i, r as i64)).is_some() {
                    return Err(Error::Internal(format!("{} appears twice in one period", pt)));
                }
            }
        }
        if lookup.len() != 2 * rs.positive_roots().len() {
            return Err(Error::Internal("one period does not cover every indecomposable".into()));
        }

        let mut happel = Happel {
            rs: rs.clone(),
            orientation: orientation.clone(),
            h,
            base,
            lookup,
            nu: VertexMap::identity(n),
            sigma: VertexMap::identity(n),
        };
        let mut perm = vec![0; n];
        let mut nu_shift = vec![0; n];
        for i in 0..n {
            let target = DerivedPoint { root: Root::new(QuiverRep::injective(&mq, i).dim_vector()), shift: 0 };
            let v = happel.vertex_of(&target).ok_or_else(|| {
                Error::WindowTooSmall(format!("injective at vertex {} not found by knitting", i + 1))
            })?;
            perm[i] = v.i;
            nu_shift[i] = v.p;
        }
        happel.nu = VertexMap::new(perm, nu_shift);
        happel.sigma = VertexMap::tau_power(n, -1).compose(&happel.nu);
        happel.check_guards()?;
        Ok(happel)
    }

    fn check_guards(&self) -> Result<()> {
        let n = self.rank();
        let rq = RepetitionQuiver::new(&self.orientation, false)?;
        for i in 0..n {
            let x = RQVertex::new(i, 0);
            for y in rq.successors(x) {
                let (a, b) = (self.nu.apply(x), self.nu.apply(y));
                if !rq.successors(a).contains(&b) {
                    return Err(Error::Internal(format!("nu does not preserve the arrow {} -> {}", x, y)));
                }
            }
        }
        for p in 0..self.h {
            for i in 0..n {
                let x = RQVertex::new(i, p);
                let a = self.point(x);
                let b = self.point(self.sigma.apply(x));
                if b.root != a.root || b.shift != a.shift + 1 {
                    return Err(Error::Internal(format!("Sigma sends {} to {}", a, b)));
                }
            }
        }
        let (_, bad) = self.sigma_squared_check(0, self.h);
        if let Some(v) = bad.first() {
            return Err(Error::Internal(format!("Sigma^2 differs from tau^-h at {}", v)));
        }
        Ok(())
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

    pub fn coxeter_number(&self) -> i64 {
        self.h
    }

    pub fn point(&self, v: RQVertex) -> DerivedPoint {
        let r = v.p.rem_euclid(self.h);
        let d = v.p.div_euclid(self.h);
        let b = &self.base[v.i][r as usize];
        DerivedPoint { root: b.root.clone(), shift: b.shift + 2 * d }
    }

    pub fn vertex_of(&self, pt: &DerivedPoint) -> Option<RQVertex> {
        let even = pt.shift.rem_euclid(2) == 0;
        let &(i, r) = self.lookup.get(&(pt.root.clone(), even))?;
        let s0 = self.base[i][r as usize].shift;
        Some(RQVertex::new(i, r + self.h * (pt.shift - s0) / 2))
    }

    pub fn tau(&self) -> VertexMap {
        VertexMap::tau_power(self.rank(), 1)
    }

    pub fn nu(&self) -> &VertexMap {
        &self.nu
    }

    pub fn sigma(&self) -> &VertexMap {
        &self.sigma
    }

    /// `F(n) = Sigma^n tau^-1`.
    pub fn f_map(&self, n: i64) -> VertexMap {
        self.sigma.pow(n).compose(&VertexMap::tau_power(self.rank(), -1))
    }

    /// Compares `Sigma^2` with `tau^-h` at every vertex with level in
    /// `[p_min, p_max]`, both as vertex maps and through the knitted points.
    /// Returns the number of vertices checked and the violations.
    pub fn sigma_squared_check(&self, p_min: i64, p_max: i64) -> (usize, Vec<RQVertex>) {
        let s2 = self.sigma.pow(2);
        let t = VertexMap::tau_power(self.rank(), -self.h);
        let mut checked = 0;
        let mut bad = Vec::new();
        for p in p_min..=p_max {
            for i in 0..self.rank() {
                let x = RQVertex::new(i, p);
                checked += 1;
                let a = s2.apply(x);
                let pa = self.point(a);
                let px = self.point(x);
                if a != t.apply(x) || pa.root != px.root || pa.shift != px.shift + 2 {
                    bad.push(x);
                }
            }
        }
        (checked, bad)
    }

    /// A window around `[p_min, p_max]` padded by `h` levels on each side.
    pub fn padded_window(&self, p_min: i64, p_max: i64, framed: bool) -> Result<TranslationQuiver> {
        build_zq(&self.orientation, p_min - self.h, p_max + self.h, framed)
    }
}

/// Morphism dimensions in the derived category, computed from modules:
/// `Hom(Sigma^s M, Sigma^t N)` is `Hom(M, N)` for `t = s`, `Ext^1(M, N)` for
/// `t = s + 1` and zero otherwise.
#[derive(Clone, Debug)]
pub struct DerivedModel {
    happel: Happel,
    cat: ModuleCategory,
    cache: HashMap<(Root, Root, bool), usize>,
}

impl DerivedModel {
    pub fn new(rs: &RootSystem, orientation: &Quiver) -> Result<Self> {
        let happel = Happel::knit(rs, orientation)?;
        let cat = ModuleCategory::new(rs.clone(), orientation.clone())?;
        Ok(DerivedModel { happel, cat, cache: HashMap::new() })
    }

    pub fn happel(&self) -> &Happel {
        &self.happel
    }

    pub fn modules(&mut self) -> &mut ModuleCategory {
        &mut self.cat
    }

    pub fn hom_dim_dq(&mut self, x: RQVertex, y: RQVertex) -> Result<usize> {
        if x.frozen || y.frozen {
            return Err(Error::Parse("frozen vertices have no derived counterpart".into()));
        }
        let a = self.happel.point(x);
        let b = self.happel.point(y);
        let ext = match b.shift - a.shift {
            0 => false,
            1 => true,
            _ => return Ok(0),
        };
        let key = (a.root.clone(), b.root.clone(), ext);
        if let Some(&d) = self.cache.get(&key) {
            return Ok(d);
        }
        let m = self.cat.indecomposable(&a.root)?;
        let n = self.cat.indecomposable(&b.root)?;
        let d = if ext { ext1_dim(&m, &n) } else { hom_dim(&m, &n) };
        self.cache.insert(key, d);
        Ok(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    fn a2() -> (RootSystem, Quiver) {
        let rs = RootSystem::of_type(Family::A, 2).unwrap();
        let q = rs.diagram().orientation(&[(0, 1)]).unwrap();
        (rs, q)
    }

    #[test]
    fn a2_slice_and_suspension() {
        let (rs, q) = a2();
        let hp = Happel::knit(&rs, &q).unwrap();
        assert_eq!(hp.point(RQVertex::new(0, 0)).root.coeffs(), &[1, 0]);
        assert_eq!(hp.point(RQVertex::new(1, 0)).root.coeffs(), &[1, 1]);
        // the simple at the sink sits between x and Sigma x
        assert_eq!(hp.point(RQVertex::new(0, 1)), DerivedPoint { root: Root::new(vec![0, 1]), shift: 0 });
        assert_eq!(hp.sigma().apply(RQVertex::new(0, 0)), RQVertex::new(1, 1));
        assert_eq!(hp.point(RQVertex::new(1, 1)), DerivedPoint { root: Root::new(vec![1, 0]), shift: 1 });
    }

    #[test]
    fn serre_duality_a3() {
        let rs = RootSystem::of_type(Family::A, 3).unwrap();
        let q = rs.diagram().orientation(&[(0, 1), (1, 2)]).unwrap();
        let mut dm = DerivedModel::new(&rs, &q).unwrap();
        let nu = dm.happel().nu().clone();
        for p in 0..4 {
            for i in 0..3 {
                for r in -1..5 {
                    for j in 0..3 {
                        let x = RQVertex::new(i, p);
                        let y = RQVertex::new(j, r);
                        let a = dm.hom_dim_dq(x, y).unwrap();
                        let b = dm.hom_dim_dq(y, nu.apply(x)).unwrap();
                        assert_eq!(a, b, "{} {}", x, y);
                        if r < p {
                            assert_eq!(a, 0);
                        }
                    }
                }
            }
        }
    }
}
