use super::laurent::LaurentPoly;
use super::tropical::TropicalMonomial;
use crate::error::{Error, Result};
use crate::quiver::{IceQuiver, Quiver};
use crate::rootsys::{format_vector, RootSystem, SignFunction};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// A seed: an ice quiver, a cluster expressed in the initial cluster, and the
/// tropical coefficient tuple `y_j = prod_f p_f^{b[f][j]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    ice: IceQuiver,
    cluster: Vec<LaurentPoly>,
    coeffs: Vec<TropicalMonomial>,
}

/// A factor of an exchange monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    /// A cluster variable, named by its denominator vector.
    Cluster(Vec<i64>),
    /// A frozen variable, by frozen index.
    Frozen(usize),
}

/// A monomial as a sorted list of factors with positive exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<(Factor, u32)>);

impl Monomial {
    fn new(mut f: Vec<(Factor, u32)>) -> Self {
        f.sort();
        Monomial(f)
    }

    pub fn render(&self, frozen_labels: &[String]) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(f, e)| {
                let base = match f {
                    Factor::Cluster(d) => format!("x[{}]", format_vector(d)),
                    Factor::Frozen(j) => format!("p[{}]", frozen_labels[*j]),
                };
                if *e == 1 {
                    base
                } else {
                    format!("{}^{}", base, e)
                }
            })
            .collect();
        parts.join("*")
    }
}

/// `x_k * x_k' = incoming + outgoing`, where `incoming` collects the arrows
/// into `k` and `outgoing` the arrows out of `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeRelation {
    pub vertex: usize,
    pub old: Vec<i64>,
    pub new: Vec<i64>,
    pub incoming: Monomial,
    pub outgoing: Monomial,
}

impl ExchangeRelation {
    pub fn render(&self, frozen_labels: &[String]) -> String {
        format!(
            "x[{}]*x[{}] = {} + {}",
            format_vector(&self.old),
            format_vector(&self.new),
            self.incoming.render(frozen_labels),
            self.outgoing.render(frozen_labels)
        )
    }
}

/// JSON form of a seed.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SeedJson {
    pub schema: String,
    pub b_matrix: Vec<Vec<i64>>,
    pub frozen_labels: Vec<String>,
    pub cluster: Vec<String>,
    pub y: Vec<String>,
}

impl Seed {
    /// The initial seed of an ice quiver: cluster `x_1..x_n`.
    pub fn initial(ice: IceQuiver) -> Self {
        let n = ice.mutable_count();
        let m = ice.frozen_count();
        let cluster = (0..n).map(|i| LaurentPoly::x(n, m, i)).collect();
        let coeffs = Self::y_from_ice(&ice);
        Seed { ice, cluster, coeffs }
    }

    /// `y_j = prod_f p_f^{b[f][j]}` read off the frozen rows.
    pub fn y_from_ice(ice: &IceQuiver) -> Vec<TropicalMonomial> {
        let n = ice.mutable_count();
        let b = ice.b();
        (0..n)
            .map(|j| TropicalMonomial::from_pairs((n..ice.vertex_count()).map(|f| (f - n, b[f][j]))))
            .collect()
    }

    pub fn ice(&self) -> &IceQuiver {
        &self.ice
    }

    pub fn cluster(&self) -> &[LaurentPoly] {
        &self.cluster
    }

    pub fn coeffs(&self) -> &[TropicalMonomial] {
        &self.coeffs
    }

    pub fn rank(&self) -> usize {
        self.ice.mutable_count()
    }

    pub fn frozen_labels(&self) -> Vec<String> {
        self.ice.labels()[self.rank()..].to_vec()
    }

    /// Cluster as a sorted list, for deduplication of unlabeled seeds.
    pub fn key(&self) -> Vec<LaurentPoly> {
        let mut k = self.cluster.clone();
        k.sort();
        k
    }

    fn variable(&self, v: usize) -> (LaurentPoly, Factor) {
        let n = self.rank();
        let m = self.ice.frozen_count();
        if v < n {
            (self.cluster[v].clone(), Factor::Cluster(self.cluster[v].d_vector()))
        } else {
            (LaurentPoly::p(n, m, v - n), Factor::Frozen(v - n))
        }
    }

    /// Mutation at the mutable vertex `k`, returning the new seed and the
    /// exchange relation used.
    pub fn mutate(&self, k: usize) -> Result<(Seed, ExchangeRelation)> {
        let new_ice = self.ice.mutate(k)?;
        let n = self.rank();
        let m = self.ice.frozen_count();
        let b = self.ice.b();
        let mut inc = LaurentPoly::one(n, m);
        let mut out = LaurentPoly::one(n, m);
        let mut inc_f = Vec::new();
        let mut out_f = Vec::new();
        for v in 0..self.ice.vertex_count() {
            let e = b[v][k];
            if e == 0 {
                continue;
            }
            let (var, factor) = self.variable(v);
            let pw = var.pow(e.unsigned_abs() as u32)?;
            if e > 0 {
                inc = inc.mul(&pw)?;
                inc_f.push((factor, e as u32));
            } else {
                out = out.mul(&pw)?;
                out_f.push((factor, (-e) as u32));
            }
        }
        let new_var = inc.add(&out)?.div_exact(&self.cluster[k])?;
        let relation = ExchangeRelation {
            vertex: k,
            old: self.cluster[k].d_vector(),
            new: new_var.d_vector(),
            incoming: Monomial::new(inc_f),
            outgoing: Monomial::new(out_f),
        };
        let mut cluster = self.cluster.clone();
        cluster[k] = new_var;
        let coeffs = self.mutate_y(k);
        let recomputed = Self::y_from_ice(&new_ice);
        if coeffs != recomputed {
            return Err(Error::Internal(format!(
                "tropical y-mutation at {} disagrees with the mutated ice quiver",
                k + 1
            )));
        }
        Ok((Seed { ice: new_ice, cluster, coeffs }, relation))
    }

    /// Tropical coefficient mutation, computed from the y-tuple alone.
    fn mutate_y(&self, k: usize) -> Vec<TropicalMonomial> {
        let b = self.ice.b();
        let yk = &self.coeffs[k];
        let yk_plus = yk.oplus(&TropicalMonomial::one());
        (0..self.rank())
            .map(|j| {
                if j == k {
                    yk.inv()
                } else {
                    let bkj = b[k][j];
                    self.coeffs[j].mul(&yk.pow(bkj.max(0))).mul(&yk_plus.pow(-bkj))
                }
            })
            .collect()
    }

    pub fn mutate_sequence(&self, word: &[usize]) -> Result<(Seed, Vec<ExchangeRelation>)> {
        let mut s = self.clone();
        let mut rels = Vec::new();
        for &k in word {
            let (t, r) = s.mutate(k)?;
            s = t;
            rels.push(r);
        }
        Ok((s, rels))
    }

    pub fn to_json(&self) -> SeedJson {
        let n = self.rank();
        let labels = self.frozen_labels();
        let xs: Vec<String> = (1..=n).map(|i| format!("x{}", i)).collect();
        let ps: Vec<String> = labels.iter().map(|l| format!("p[{}]", l)).collect();
        SeedJson {
            schema: crate::cli::SCHEMA.to_string(),
            b_matrix: self.ice.b().to_vec(),
            frozen_labels: labels.clone(),
            cluster: self.cluster.iter().map(|c| c.render(&xs, &ps)).collect(),
            y: self.coeffs.iter().map(|y| y.render(&labels)).collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let j = self.to_json();
        let mut s = self.ice.to_text();
        for (i, (c, y)) in j.cluster.iter().zip(&j.y).enumerate() {
            let _ = writeln!(s, "  x{} = {}    y{} = {}", i + 1, c, i + 1, y);
        }
        s
    }
}

/// The ice quiver with universal coefficients on a bipartite orientation: one
/// frozen vertex per almost positive root `a`, with `eps(j)[a:a_j]` arrows from
/// it to `j` (negative counts reverse the arrows).
pub fn universal_ice_quiver(rs: &RootSystem, q: &Quiver) -> Result<IceQuiver> {
    rs.diagram().check_orientation(q)?;
    let signs = SignFunction::from_orientation(q)?;
    let n = rs.rank();
    let roots = rs.almost_positive();
    let total = n + roots.len();
    let mut b = vec![vec![0i64; total]; total];
    for i in 0..n {
        for j in 0..n {
            b[i][j] = q.entry(i, j);
        }
    }
    for (a, root) in roots.iter().enumerate() {
        for j in 0..n {
            let e = signs.get(j).as_i64() * root.multiplicity(j);
            b[n + a][j] = e;
            b[j][n + a] = -e;
        }
    }
    let mut labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    labels.extend(roots.iter().map(|r| r.to_string()));
    IceQuiver::new(Quiver::from_b_matrix(b)?, n)?.with_labels(labels)
}

pub fn universal_seed(rs: &RootSystem, q: &Quiver) -> Result<Seed> {
    Ok(Seed::initial(universal_ice_quiver(rs, q)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    #[test]
    fn a1_universal() {
        let rs = RootSystem::of_type(Family::A, 1).unwrap();
        let q = rs.diagram().bipartite_orientation();
        let s = universal_seed(&rs, &q).unwrap();
        assert_eq!(s.ice().b(), &[vec![0, -1, 1], vec![1, 0, 0], vec![-1, 0, 0]]);
    }

    #[test]
    fn a2_y1() {
        let rs = RootSystem::of_type(Family::A, 2).unwrap();
        let q = rs.diagram().orientation(&[(0, 1)]).unwrap();
        let s = universal_seed(&rs, &q).unwrap();
        // frozen order: a1, a2, a1+a2, -a1, -a2
        assert_eq!(s.coeffs()[0].dense(5), vec![1, 0, 1, -1, 0]);
        assert_eq!(s.coeffs()[0].render(&s.frozen_labels()), "p[a1]*p[a1+a2]*p[-a1]^-1");
    }

    #[test]
    fn mutation_is_involutive() {
        let rs = RootSystem::of_type(Family::A, 3).unwrap();
        let q = rs.diagram().bipartite_orientation();
        let s = universal_seed(&rs, &q).unwrap();
        for k in 0..3 {
            let (t, _) = s.mutate(k).unwrap();
            let (u, _) = t.mutate(k).unwrap();
            assert_eq!(u, s);
        }
    }
}
