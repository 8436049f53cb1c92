//! Representations of Dynkin quivers over the rationals, BGP reflection
//! functors and the Coxeter-functor identities on dimension vectors.
//!
//! Modules are right modules over the path algebra of the orientation `Q`,
//! which are representations of the opposite quiver. The switch lives in
//! [`module_quiver`] and nowhere else.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, RowSpace, Q};
use crate::quiver::Quiver;
use crate::rootsys::{Root, RootSystem, Sign, SignFunction};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::collections::HashMap;

/// Right modules: maps go against the arrows of the orientation.
pub const RIGHT_MODULES: bool = true;

/// The quiver whose representations are the modules over `orientation`.
pub fn module_quiver(orientation: &Quiver) -> Quiver {
    if RIGHT_MODULES {
        orientation.opposite()
    } else {
        orientation.clone()
    }
}

/// A representation: a vector space dimension per vertex and a matrix
/// (target x source) per arrow. Arrows have multiplicity at most one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverRep {
    quiver: Quiver,
    dims: Vec<usize>,
    maps: BTreeMap<(usize, usize), Matrix>,
}

/// Basis of a space of morphisms, one matrix per vertex.
#[derive(Clone, Debug)]
pub struct HomSolution {
    pub dimension: usize,
    pub basis: Vec<Vec<Matrix>>,
}

impl QuiverRep {
    pub fn new(quiver: Quiver, dims: Vec<usize>, maps: BTreeMap<(usize, usize), Matrix>) -> Result<Self> {
        if dims.len() != quiver.n() {
            return Err(Error::Internal("dimension vector has the wrong length".into()));
        }
        for (s, t) in quiver.arrows() {
            if quiver.arrow_count(s, t) > 1 {
                return Err(Error::Internal("multiple arrows are not supported".into()));
            }
            let m = maps
                .get(&(s, t))
                .ok_or_else(|| Error::Internal(format!("missing map for arrow {}->{}", s + 1, t + 1)))?;
            if m.rows() != dims[t] || m.cols() != dims[s] {
                return Err(Error::Internal(format!("map {}->{} has the wrong shape", s + 1, t + 1)));
            }
        }
        if maps.len() != quiver.arrows().len() {
            return Err(Error::Internal("maps given for non-arrows".into()));
        }
        Ok(QuiverRep { quiver, dims, maps })
    }

    pub fn zero(quiver: &Quiver) -> Self {
        let dims = vec![0; quiver.n()];
        let maps = quiver.arrows().into_iter().map(|a| (a, Matrix::zeros(0, 0))).collect();
        QuiverRep { quiver: quiver.clone(), dims, maps }
    }

    pub fn simple(quiver: &Quiver, i: usize) -> Self {
        let mut dims = vec![0; quiver.n()];
        dims[i] = 1;
        let maps = quiver
            .arrows()
            .into_iter()
            .map(|(s, t)| ((s, t), Matrix::zeros(dims[t], dims[s])))
            .collect();
        QuiverRep { quiver: quiver.clone(), dims, maps }
    }

    /// The indecomposable projective at `i`: paths starting at `i`.
    pub fn projective(quiver: &Quiver, i: usize) -> Self {
        let paths = paths_from(quiver, i);
        let mut basis: Vec<Vec<Vec<usize>>> = vec![Vec::new(); quiver.n()];
        for p in paths {
            basis[*p.last().unwrap()].push(p);
        }
        let dims: Vec<usize> = basis.iter().map(Vec::len).collect();
        let maps = quiver
            .arrows()
            .into_iter()
            .map(|(s, t)| {
                let mut m = Matrix::zeros(dims[t], dims[s]);
                for (c, p) in basis[s].iter().enumerate() {
                    let mut ext = p.clone();
                    ext.push(t);
                    let r = basis[t].iter().position(|x| *x == ext).expect("path extension");
                    m.set(r, c, Q::one());
                }
                ((s, t), m)
            })
            .collect();
        QuiverRep { quiver: quiver.clone(), dims, maps }
    }

    /// The indecomposable injective at `i`: dual of paths ending at `i`.
    pub fn injective(quiver: &Quiver, i: usize) -> Self {
        let op = quiver.opposite();
        let dual = Self::projective(&op, i);
        let maps = quiver
            .arrows()
            .into_iter()
            .map(|(s, t)| ((s, t), dual.maps[&(t, s)].transpose()))
            .collect();
        QuiverRep { quiver: quiver.clone(), dims: dual.dims, maps }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_vector(&self) -> Vec<i64> {
        self.dims.iter().map(|&d| d as i64).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn map(&self, s: usize, t: usize) -> Option<&Matrix> {
        self.maps.get(&(s, t))
    }

    /// Exact fraction dump of all maps.
    pub fn debug_dump(&self) -> String {
        let mut s = format!("dims {:?}\n", self.dims);
        for ((a, b), m) in &self.maps {
            s.push_str(&format!("{} -> {}: {:?}", a + 1, b + 1, m));
        }
        s
    }
}

fn paths_from(q: &Quiver, i: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack = vec![vec![i]];
    while let Some(p) = stack.pop() {
        let last = *p.last().unwrap();
        for w in q.successors(last) {
            let mut e = p.clone();
            e.push(w);
            stack.push(e);
        }
        out.push(p);
    }
    out
}

/// All families `(f_v)` with `f_t M_a = N_a f_s` for every arrow `a: s -> t`.
pub fn hom_space(m: &QuiverRep, n: &QuiverRep) -> HomSolution {
    let (ker, offsets) = intertwiner_system(m, n, true);
    let basis = ker
        .kernel()
        .into_iter()
        .map(|v| {
            (0..m.dims.len())
                .map(|x| {
                    let mut f = Matrix::zeros(n.dims[x], m.dims[x]);
                    for r in 0..n.dims[x] {
                        for c in 0..m.dims[x] {
                            f.set(r, c, v[offsets[x] + r * m.dims[x] + c].clone());
                        }
                    }
                    f
                })
                .collect()
        })
        .collect::<Vec<_>>();
    HomSolution { dimension: basis.len(), basis }
}

pub fn hom_dim(m: &QuiverRep, n: &QuiverRep) -> usize {
    hom_space(m, n).dimension
}

/// Matrix of `(f_v) -> (f_t M_a - N_a f_s)_a`; columns are the entries of the
/// `f_v`, blocks at `offsets`.
fn intertwiner_system(m: &QuiverRep, n: &QuiverRep, _rows_by_arrow: bool) -> (Matrix, Vec<usize>) {
    assert_eq!(m.quiver, n.quiver, "representations of different quivers");
    let nv = m.dims.len();
    let mut offsets = vec![0; nv + 1];
    for v in 0..nv {
        offsets[v + 1] = offsets[v] + n.dims[v] * m.dims[v];
    }
    let unknowns = offsets[nv];
    let arrows = m.quiver.arrows();
    let eqs: usize = arrows.iter().map(|&(s, t)| n.dims[t] * m.dims[s]).sum();
    let mut a = Matrix::zeros(eqs, unknowns);
    let mut row = 0;
    for &(s, t) in &arrows {
        let ma = &m.maps[&(s, t)];
        let na = &n.maps[&(s, t)];
        for r in 0..n.dims[t] {
            for c in 0..m.dims[s] {
                // (f_t M_a)[r][c] = sum_k f_t[r][k] M_a[k][c]
                for k in 0..m.dims[t] {
                    let x = ma.get(k, c);
                    if !x.is_zero() {
                        let col = offsets[t] + r * m.dims[t] + k;
                        let v = a.get(row, col) + x;
                        a.set(row, col, v);
                    }
                }
                // (N_a f_s)[r][c] = sum_k N_a[r][k] f_s[k][c]
                for k in 0..n.dims[s] {
                    let x = na.get(r, k);
                    if !x.is_zero() {
                        let col = offsets[s] + k * m.dims[s] + c;
                        let v = a.get(row, col) - x;
                        a.set(row, col, v);
                    }
                }
                row += 1;
            }
        }
    }
    offsets.pop();
    (a, offsets)
}

/// `<d, e> = sum_i d_i e_i - sum_{a: i -> j} d_i e_j` over the given quiver.
pub fn euler_form(d: &[i64], e: &[i64], quiver: &Quiver) -> i64 {
    let diag: i64 = d.iter().zip(e).map(|(a, b)| a * b).sum();
    let off: i64 = quiver.arrows().iter().map(|&(i, j)| d[i] * e[j]).sum();
    diag - off
}

/// `dim Ext^1 = dim Hom - <dim M, dim N>` (hereditary case).
pub fn ext1_dim(m: &QuiverRep, n: &QuiverRep) -> usize {
    let h = hom_dim(m, n) as i64;
    let e = h - euler_form(&m.dim_vector(), &n.dim_vector(), &m.quiver);
    assert!(e >= 0, "negative Ext^1 dimension: module convention is inconsistent");
    e as usize
}

/// `Ext^1` as the cokernel of the intertwiner map, without the Euler form.
pub fn ext1_dim_by_resolution(m: &QuiverRep, n: &QuiverRep) -> usize {
    let (a, _) = intertwiner_system(m, n, true);
    a.rows() - a.rank()
}

/// BGP reflection at a sink (kernel) or a source (cokernel) of the
/// representation's quiver. The result lives on the quiver reflected at `i`.
pub fn reflection_functor(m: &QuiverRep, i: usize) -> Result<QuiverRep> {
    let q = &m.quiver;
    if i >= q.n() {
        return Err(Error::VertexOutOfRange { vertex: i, size: q.n() });
    }
    let new_q = q.reflect_at(i);
    let mut maps: BTreeMap<(usize, usize), Matrix> =
        m.maps.iter().filter(|((s, t), _)| *s != i && *t != i).map(|(k, v)| (*k, v.clone())).collect();
    let mut dims = m.dims.clone();
    if q.is_sink(i) {
        let preds = q.predecessors(i);
        let blocks: Vec<Matrix> = preds.iter().map(|&j| m.maps[&(j, i)].clone()).collect();
        let phi = Matrix::hstack(m.dims[i], &blocks);
        let total: usize = preds.iter().map(|&j| m.dims[j]).sum();
        let kernel = Matrix::from_columns(total, &phi.kernel());
        dims[i] = kernel.cols();
        let mut off = 0;
        for &j in &preds {
            maps.insert((i, j), kernel.row_block(off, m.dims[j]));
            off += m.dims[j];
        }
    } else if q.is_source(i) {
        let succs = q.successors(i);
        let blocks: Vec<Matrix> = succs.iter().map(|&j| m.maps[&(i, j)].clone()).collect();
        let psi = Matrix::vstack(m.dims[i], &blocks);
        let total: usize = succs.iter().map(|&j| m.dims[j]).sum();
        let mut image = RowSpace::new(total);
        for c in 0..psi.cols() {
            image.insert(&psi.column(c));
        }
        let pi = image.quotient_map();
        dims[i] = pi.rows();
        let mut off = 0;
        for &j in &succs {
            maps.insert((j, i), pi.column_block(off, m.dims[j]));
            off += m.dims[j];
        }
    } else {
        return Err(Error::NotSinkOrSource { vertex: i });
    }
    QuiverRep::new(new_q, dims, maps)
}

/// Whether some morphism `M -> N` is invertible at every vertex. Tries the
/// basis elements, then a few fixed generic combinations.
pub fn is_isomorphic(m: &QuiverRep, n: &QuiverRep) -> bool {
    if m.quiver != n.quiver || m.dims != n.dims {
        return false;
    }
    if m.is_zero() {
        return true;
    }
    let hom = hom_space(m, n);
    let invertible = |f: &[Matrix]| f.iter().all(Matrix::is_invertible);
    if hom.basis.iter().any(|f| invertible(f)) {
        return true;
    }
    for seed in 1..4i64 {
        let mut acc: Vec<Matrix> = m.dims.iter().zip(&n.dims).map(|(&a, &b)| Matrix::zeros(b, a)).collect();
        for (k, f) in hom.basis.iter().enumerate() {
            let c = crate::linalg::q((k as i64 + 1) * seed * 7 + seed * seed);
            acc = acc.iter().zip(f).map(|(a, b)| a.add(&b.scale(&c))).collect();
        }
        if invertible(&acc) {
            return true;
        }
    }
    false
}

/// The module category of a Dynkin orientation, with a cache of the
/// indecomposables.
#[derive(Clone, Debug)]
pub struct ModuleCategory {
    roots: RootSystem,
    orientation: Quiver,
    quiver: Quiver,
    cache: HashMap<Root, QuiverRep>,
}

impl ModuleCategory {
    pub fn new(roots: RootSystem, orientation: Quiver) -> Result<Self> {
        roots.diagram().check_orientation(&orientation)?;
        let quiver = module_quiver(&orientation);
        Ok(ModuleCategory { roots, orientation, quiver, cache: HashMap::new() })
    }

    pub fn roots(&self) -> &RootSystem {
        &self.roots
    }

    pub fn orientation(&self) -> &Quiver {
        &self.orientation
    }

    /// The quiver carrying the representations.
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn simple(&self, i: usize) -> QuiverRep {
        QuiverRep::simple(&self.quiver, i)
    }

    pub fn projective(&self, i: usize) -> QuiverRep {
        QuiverRep::projective(&self.quiver, i)
    }

    pub fn injective(&self, i: usize) -> QuiverRep {
        QuiverRep::injective(&self.quiver, i)
    }

    pub fn euler_form(&self, d: &[i64], e: &[i64]) -> i64 {
        euler_form(d, e, &self.quiver)
    }

    /// The indecomposable with dimension vector `alpha`, cached.
    pub fn indecomposable(&mut self, alpha: &Root) -> Result<QuiverRep> {
        if let Some(m) = self.cache.get(alpha) {
            return Ok(m.clone());
        }
        let m = build_indecomposable(&self.roots, &self.quiver, alpha)?;
        self.cache.insert(alpha.clone(), m.clone());
        Ok(m)
    }
}

/// Builds the indecomposable representation of `quiver` with dimension vector
/// `alpha` by reflecting at sinks down to a simple and reflecting back.
pub fn build_indecomposable(rs: &RootSystem, quiver: &Quiver, alpha: &Root) -> Result<QuiverRep> {
    if !alpha.is_positive() || !rs.contains(alpha) {
        return Err(Error::NotARoot(alpha.to_string()));
    }
    let n = rs.rank();
    let cap = 4 * n * rs.diagram().coxeter_number() + 8;
    let mut cur_q = quiver.clone();
    let mut cur = alpha.clone();
    let mut steps = Vec::new();
    let mut last_used = vec![0usize; n];
    let base = loop {
        if let Some(j) = cur.simple_index() {
            break j;
        }
        let i = cur_q
            .sinks()
            .into_iter()
            .min_by_key(|&i| (last_used[i], i))
            .ok_or_else(|| Error::Internal("quiver without sinks".into()))?;
        cur = rs.reflect(i, &cur);
        if !cur.is_positive() {
            return Err(Error::Internal(format!("reflection chain for {} left the positive roots", alpha)));
        }
        cur_q = cur_q.reflect_at(i);
        steps.push(i);
        last_used[i] = steps.len();
        if steps.len() > cap {
            return Err(Error::Internal(format!("reflection chain for {} does not terminate", alpha)));
        }
    };
    let mut m = QuiverRep::simple(&cur_q, base);
    for &i in steps.iter().rev() {
        m = reflection_functor(&m, i)?;
    }
    if m.quiver != *quiver || m.dim_vector() != alpha.coeffs() {
        return Err(Error::Internal(format!("reflection chain for {} ended at {:?}", alpha, m.dims)));
    }
    if hom_dim(&m, &m) != 1 {
        return Err(Error::Internal(format!("module for {} is not a brick", alpha)));
    }
    Ok(m)
}

/// Applies the reflections at all vertices of sign `eps` (pairwise
/// non-adjacent, so the order is irrelevant).
pub fn coxeter_composite(m: &QuiverRep, signs: &SignFunction, eps: Sign) -> Result<QuiverRep> {
    signs.vertices(eps).try_fold(m.clone(), |acc, i| reflection_functor(&acc, i))
}

/// Outcome of an exhaustive sweep.
#[derive(Clone, Debug, Default)]
pub struct SweepReport {
    pub checks: usize,
    pub violations: Vec<String>,
    pub notes: Vec<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.violations.push(what());
        }
    }
}

/// For every non-simple positive `alpha` and each sign: the same-sign
/// reflection composite sends `M_alpha` to a module of dimension
/// `tau_eps(alpha)`, and applying it twice gives back `M_alpha`.
pub fn verify_coxeter_lemma(cat: &mut ModuleCategory) -> Result<SweepReport> {
    let signs = SignFunction::from_orientation(cat.orientation())?;
    let rs = cat.roots().clone();
    let mut report = SweepReport::default();
    for alpha in rs.positive_roots() {
        let m = cat.indecomposable(alpha)?;
        for eps in [Sign::Plus, Sign::Minus] {
            let c = coxeter_composite(&m, &signs, eps)?;
            if alpha.simple_index().is_some_and(|i| signs.get(i) == eps) {
                report.check(c.is_zero(), || format!("C^{} does not kill S({})", eps, alpha));
                continue;
            }
            let want = rs.tau_eps(&signs, eps, alpha)?;
            report.check(c.dim_vector() == want.coeffs(), || {
                format!("dim C^{}(M_{}) = {:?}, expected {}", eps, alpha, c.dims(), want)
            });
            let back = coxeter_composite(&c, &signs, eps)?;
            report.check(is_isomorphic(&back, &m), || format!("C^{0} C^{0} M_{1} is not M_{1}", eps, alpha));
        }
    }
    report.notes.push(
        "statements involving the suspension are derived-category statements; only their module shadows are checked"
            .into(),
    );
    Ok(report)
}

/// `[tau_plus(alpha) : a_i] = dim Ext^1(M_alpha, S(i))` for sources `i` and
/// `[tau_minus(alpha) : a_i] = dim Ext^1(S(i), M_alpha)` for sinks `i`, over
/// all positive `alpha != a_i`. The excluded pairs are listed in the notes.
pub fn verify_tau_ext(cat: &mut ModuleCategory) -> Result<SweepReport> {
    let signs = SignFunction::from_orientation(cat.orientation())?;
    let rs = cat.roots().clone();
    let mut report = SweepReport::default();
    for alpha in rs.positive_roots() {
        let m = cat.indecomposable(alpha)?;
        for i in 0..rs.rank() {
            let s = cat.simple(i);
            let eps = signs.get(i);
            let lhs = rs.tau_eps(&signs, eps, alpha)?.multiplicity(i);
            let rhs = match eps {
                Sign::Plus => ext1_dim(&m, &s),
                Sign::Minus => ext1_dim(&s, &m),
            } as i64;
            if alpha.simple_index() == Some(i) {
                report.notes.push(format!("excluded alpha = a{}: multiplicity {} vs Ext^1 {}", i + 1, lhs, rhs));
                continue;
            }
            report.check(lhs == rhs, || {
                format!("vertex {} ({}), alpha {}: multiplicity {} but Ext^1 {}", i + 1, eps, alpha, lhs, rhs)
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    fn cat(f: Family, n: usize) -> ModuleCategory {
        let rs = RootSystem::of_type(f, n).unwrap();
        let q = rs.diagram().bipartite_orientation();
        ModuleCategory::new(rs, q).unwrap()
    }

    #[test]
    fn projectives_of_a2() {
        // orientation 1 -> 2; right modules
        let rs = RootSystem::of_type(Family::A, 2).unwrap();
        let q = rs.diagram().orientation(&[(0, 1)]).unwrap();
        let c = ModuleCategory::new(rs, q).unwrap();
        assert_eq!(c.projective(0).dims(), &[1, 0]);
        assert_eq!(c.projective(1).dims(), &[1, 1]);
        assert_eq!(c.injective(0).dims(), &[1, 1]);
        assert_eq!(c.injective(1).dims(), &[0, 1]);
    }

    #[test]
    fn d4_highest_root() {
        let mut c = cat(Family::D, 4);
        let top = c.roots().positive_roots().last().unwrap().clone();
        assert_eq!(top.coeffs(), &[1, 2, 1, 1]);
        let m = c.indecomposable(&top).unwrap();
        assert_eq!(hom_dim(&m, &m), 1);
        assert_eq!(ext1_dim(&m, &m), 0);
    }

    #[test]
    fn reflection_kills_simple() {
        let c = cat(Family::A, 3);
        for i in 0..3 {
            let s = c.simple(i);
            assert!(reflection_functor(&s, i).unwrap().is_zero());
        }
    }

    #[test]
    fn a3_sweeps() {
        let mut c = cat(Family::A, 3);
        let r = verify_coxeter_lemma(&mut c).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
        let r = verify_tau_ext(&mut c).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
    }

    #[test]
    fn middle_vertex_rejected() {
        let rs = RootSystem::of_type(Family::A, 3).unwrap();
        let q = rs.diagram().orientation(&[(0, 1), (1, 2)]).unwrap();
        let m = QuiverRep::simple(&q, 0);
        assert_eq!(reflection_functor(&m, 1), Err(Error::NotSinkOrSource { vertex: 1 }));
    }
}
