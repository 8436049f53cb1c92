use super::seed::Seed;
use super::tropical::TropicalMonomial;
use crate::error::{Error, Result};
use crate::linalg::{q, solve, to_i64, Matrix, Q};
use std::collections::{HashSet, VecDeque};

/// Images of the source frozen generators, as monomials in the target ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializationMap {
    pub images: Vec<TropicalMonomial>,
}

impl SpecializationMap {
    pub fn apply(&self, y: &TropicalMonomial) -> TropicalMonomial {
        y.exponents()
            .fold(TropicalMonomial::one(), |acc, (f, e)| acc.mul(&self.images[f].pow(e)))
    }

    pub fn is_trivial(&self) -> bool {
        self.images.iter().all(TropicalMonomial::is_one)
    }
}

#[derive(Clone, Debug)]
pub struct SpecializationReport {
    pub map: Option<SpecializationMap>,
    /// Whether the linear constraints pin the map down uniquely.
    pub unique: bool,
    pub seeds_checked: usize,
    pub conditions_checked: usize,
    pub failure: Option<String>,
}

impl SpecializationReport {
    pub fn succeeded(&self) -> bool {
        self.map.is_some() && self.failure.is_none()
    }
}

/// Looks for a coefficient specialization from `universal` to `target`: a
/// group map on frozen generators sending every `y_{j,t}` to the target's
/// and every `y_{j,t} + 1` to the target's, at every seed `t`.
pub fn check_specialization(universal: &Seed, target: &Seed, budget: usize) -> Result<SpecializationReport> {
    if universal.ice().mutable_part() != target.ice().mutable_part() {
        return Err(Error::Internal("seeds have different mutable parts".into()));
    }
    let m = universal.ice().frozen_count();
    let mt = target.ice().frozen_count();
    let n = universal.rank();

    // Explore both seeds in lockstep.
    let mut pairs = vec![(universal.clone(), target.clone())];
    let mut seen: HashSet<_> = HashSet::from([universal.key()]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for k in 0..n {
            let (u, _) = pairs[i].0.mutate(k)?;
            if seen.insert(u.key()) {
                if pairs.len() >= budget {
                    return Err(Error::BudgetExceeded { budget });
                }
                let (t, _) = pairs[i].1.mutate(k)?;
                pairs.push((u, t));
                queue.push_back(pairs.len() - 1);
            }
        }
    }

    // phi . c = cbar and phi . min(c, 0) = min(cbar, 0), one system per target generator.
    let mut rows = Vec::new();
    let mut rhs: Vec<Vec<i64>> = Vec::new();
    for (u, t) in &pairs {
        for j in 0..n {
            let c = u.coeffs()[j].dense(m);
            let cb = t.coeffs()[j].dense(mt);
            rows.push(c.iter().map(|&x| q(x)).collect::<Vec<Q>>());
            rhs.push(cb.clone());
            rows.push(c.iter().map(|&x| q(x.min(0))).collect());
            rhs.push(cb.iter().map(|&x| x.min(0)).collect());
        }
    }
    let a = Matrix::from_rows(m, &rows);
    let mut images = vec![Vec::new(); m];
    let mut unique = true;
    for r in 0..mt {
        let b: Vec<Q> = rhs.iter().map(|row| q(row[r])).collect();
        let Some((x, kernel)) = solve(&a, &b) else {
            return Ok(SpecializationReport {
                map: None,
                unique: false,
                seeds_checked: pairs.len(),
                conditions_checked: 0,
                failure: Some(format!(
                    "no exponent vector for target generator {} satisfies all conditions",
                    r + 1
                )),
            });
        };
        unique &= kernel.is_empty();
        for (f, v) in x.iter().enumerate() {
            let e = to_i64(v).ok_or_else(|| Error::Internal("non-integral specialization".into()))?;
            images[f].push((r, e));
        }
    }
    let map = SpecializationMap {
        images: images.into_iter().map(TropicalMonomial::from_pairs).collect(),
    };

    // Independent check by evaluating the map.
    let one = TropicalMonomial::one();
    let mut checked = 0;
    for (s, (u, t)) in pairs.iter().enumerate() {
        for j in 0..n {
            let y = &u.coeffs()[j];
            let yb = &t.coeffs()[j];
            let conditions = [
                (map.apply(y), yb.clone(), "phi(y) = ybar"),
                (map.apply(&y.oplus(&one)), yb.oplus(&one), "phi(y + 1) = ybar + 1"),
            ];
            for (lhs, rhs, what) in conditions {
                checked += 1;
                if lhs != rhs {
                    return Ok(SpecializationReport {
                        map: Some(map),
                        unique,
                        seeds_checked: pairs.len(),
                        conditions_checked: checked,
                        failure: Some(format!("{} fails at seed {}, vertex {}", what, s, j + 1)),
                    });
                }
            }
        }
    }
    Ok(SpecializationReport {
        map: Some(map),
        unique,
        seeds_checked: pairs.len(),
        conditions_checked: checked,
        failure: None,
    })
}
