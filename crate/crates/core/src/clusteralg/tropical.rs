use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// An element of the tropical semifield on generators `p_0, p_1, ...`: a
/// Laurent monomial, with `*` adding exponents and `+` taking the
/// componentwise minimum.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TropicalMonomial(BTreeMap<usize, i64>);

impl TropicalMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn generator(i: usize) -> Self {
        Self::from_pairs([(i, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut m = BTreeMap::new();
        for (i, e) in pairs {
            *m.entry(i).or_insert(0) += e;
        }
        m.retain(|_, e| *e != 0);
        TropicalMonomial(m)
    }

    pub fn from_dense(exps: &[i64]) -> Self {
        Self::from_pairs(exps.iter().copied().enumerate())
    }

    pub fn dense(&self, m: usize) -> Vec<i64> {
        (0..m).map(|i| self.exponent(i)).collect()
    }

    pub fn exponent(&self, i: usize) -> i64 {
        self.0.get(&i).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.0.iter().map(|(&i, &e)| (i, e))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_pairs(self.exponents().chain(other.exponents()))
    }

    pub fn inv(&self) -> Self {
        self.pow(-1)
    }

    pub fn pow(&self, k: i64) -> Self {
        Self::from_pairs(self.exponents().map(|(i, e)| (i, e * k)))
    }

    /// Tropical sum: componentwise minimum of exponents.
    pub fn oplus(&self, other: &Self) -> Self {
        let keys: std::collections::BTreeSet<usize> =
            self.0.keys().chain(other.0.keys()).copied().collect();
        Self::from_pairs(keys.into_iter().map(|i| (i, self.exponent(i).min(other.exponent(i)))))
    }

    /// Renders with generator names `p[label]`.
    pub fn render(&self, labels: &[String]) -> String {
        if self.is_one() {
            return "1".into();
        }
        let mut s = String::new();
        for (i, e) in self.exponents() {
            if !s.is_empty() {
                s.push('*');
            }
            let name = labels.get(i).cloned().unwrap_or_else(|| format!("f{}", i + 1));
            let _ = write!(s, "p[{}]", name);
            if e != 1 {
                let _ = write!(s, "^{}", e);
            }
        }
        s
    }
}
