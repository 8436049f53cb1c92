use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// A Laurent polynomial with integer coefficients in cluster variables
/// `x_1..x_n` and coefficient generators `p_1..p_m`. Keys are exponent vectors
/// `(x-exponents, p-exponents)`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    nx: usize,
    np: usize,
    terms: BTreeMap<Vec<i64>, i64>,
}

impl LaurentPoly {
    pub fn zero(nx: usize, np: usize) -> Self {
        LaurentPoly { nx, np, terms: BTreeMap::new() }
    }

    pub fn monomial(nx: usize, np: usize, exps: Vec<i64>, coeff: i64) -> Self {
        assert_eq!(exps.len(), nx + np);
        let mut p = Self::zero(nx, np);
        if coeff != 0 {
            p.terms.insert(exps, coeff);
        }
        p
    }

    pub fn one(nx: usize, np: usize) -> Self {
        Self::monomial(nx, np, vec![0; nx + np], 1)
    }

    pub fn x(nx: usize, np: usize, i: usize) -> Self {
        let mut e = vec![0; nx + np];
        e[i] = 1;
        Self::monomial(nx, np, e, 1)
    }

    pub fn p(nx: usize, np: usize, j: usize) -> Self {
        let mut e = vec![0; nx + np];
        e[nx + j] = 1;
        Self::monomial(nx, np, e, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64], i64)> {
        self.terms.iter().map(|(k, &c)| (k.as_slice(), c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, e: Vec<i64>, c: i64) -> Result<()> {
        let slot = self.terms.entry(e).or_insert(0);
        *slot = slot.checked_add(c).ok_or(Error::Overflow("Laurent addition"))?;
        if *slot == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), -c)?;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero(self.nx, self.np);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                let e: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.checked_mul(cb).ok_or(Error::Overflow("Laurent product"))?)?;
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut out = Self::one(self.nx, self.np);
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Multiplies by the monomial with exponent vector `shift`.
    fn shifted(&self, shift: &[i64]) -> Self {
        LaurentPoly {
            nx: self.nx,
            np: self.np,
            terms: self
                .terms
                .iter()
                .map(|(e, &c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c))
                .collect(),
        }
    }

    /// Componentwise minimum of all exponent vectors.
    fn min_exponents(&self) -> Vec<i64> {
        let mut m = vec![i64::MAX; self.nx + self.np];
        for e in self.terms.keys() {
            for (a, &b) in m.iter_mut().zip(e) {
                *a = (*a).min(b);
            }
        }
        m
    }

    /// The denominator vector: `d_i = -min` exponent of `x_i`.
    pub fn d_vector(&self) -> Vec<i64> {
        let m = self.min_exponents();
        m[..self.nx].iter().map(|&v| if v == i64::MAX { 0 } else { -v }).collect()
    }

    /// Exact division in the Laurent ring. Both operands are first moved to
    /// polynomials without monomial factors; the quotient is then found by
    /// multivariate long division in lex order, which must leave no remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::InexactDivision("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let sf: Vec<i64> = self.min_exponents().iter().map(|v| -v).collect();
        let sg: Vec<i64> = divisor.min_exponents().iter().map(|v| -v).collect();
        let g = divisor.shifted(&sg);
        let (lg, cg) = g.terms.iter().next_back().map(|(k, &c)| (k.clone(), c)).unwrap();
        let mut r = self.shifted(&sf);
        let mut quotient = Self::zero(self.nx, self.np);
        while let Some((lr, cr)) = r.terms.iter().next_back().map(|(k, &c)| (k.clone(), c)) {
            let diff: Vec<i64> = lr.iter().zip(&lg).map(|(a, b)| a - b).collect();
            if diff.iter().any(|&d| d < 0) || cr % cg != 0 {
                return Err(Error::InexactDivision(format!(
                    "{} / {}",
                    self.render_default(),
                    divisor.render_default()
                )));
            }
            let t = Self::monomial(self.nx, self.np, diff, cr / cg);
            r = r.sub(&t.mul(&g)?)?;
            quotient.add_term(t.terms.keys().next().unwrap().clone(), cr / cg)?;
        }
        let back: Vec<i64> = sg.iter().zip(&sf).map(|(a, b)| a - b).collect();
        Ok(quotient.shifted(&back))
    }

    pub fn render_default(&self) -> String {
        let xs: Vec<String> = (1..=self.nx).map(|i| format!("x{}", i)).collect();
        let ps: Vec<String> = (1..=self.np).map(|i| format!("p{}", i)).collect();
        self.render(&xs, &ps)
    }

    /// Text form as `numerator / denominator` with the given variable names.
    pub fn render(&self, xnames: &[String], pnames: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let neg: Vec<i64> = self.min_exponents().iter().map(|&v| (-v).max(0)).collect();
        let num = self.shifted(&neg);
        let names: Vec<&String> = xnames.iter().chain(pnames).collect();
        let mono = |e: &[i64]| -> String {
            let mut parts = Vec::new();
            for (k, &p) in e.iter().enumerate() {
                if p == 0 {
                    continue;
                }
                parts.push(if p == 1 { names[k].clone() } else { format!("{}^{}", names[k], p) });
            }
            parts.join("*")
        };
        let mut s = String::new();
        for (e, &c) in num.terms.iter().rev() {
            let m = mono(e);
            if !s.is_empty() {
                s.push_str(if c < 0 { " - " } else { " + " });
            } else if c < 0 {
                s.push('-');
            }
            let a = c.abs();
            match (a, m.is_empty()) {
                (1, true) => s.push('1'),
                (1, false) => s.push_str(&m),
                (_, true) => {
                    let _ = write!(s, "{}", a);
                }
                (_, false) => {
                    let _ = write!(s, "{}*{}", a, m);
                }
            }
        }
        let den = mono(&neg);
        if den.is_empty() {
            s
        } else if num.terms.len() > 1 {
            format!("({}) / ({})", s, den)
        } else {
            format!("{} / ({})", s, den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_division_round_trip() {
        let x1 = LaurentPoly::x(2, 1, 0);
        let x2 = LaurentPoly::x(2, 1, 1);
        let p = LaurentPoly::p(2, 1, 0);
        let f = x1.add(&p).unwrap().mul(&x2.add(&LaurentPoly::one(2, 1)).unwrap()).unwrap();
        let g = x2.add(&LaurentPoly::one(2, 1)).unwrap();
        assert_eq!(f.div_exact(&g).unwrap(), x1.add(&p).unwrap());
        let q = f.div_exact(&x1).unwrap();
        assert_eq!(q.mul(&x1).unwrap(), f);
        assert_eq!(q.d_vector(), vec![1, 0]);
    }

    #[test]
    fn inexact_division_detected() {
        let x1 = LaurentPoly::x(2, 0, 0);
        let x2 = LaurentPoly::x(2, 0, 1);
        let s = x1.add(&x2).unwrap();
        assert!(x1.div_exact(&s).is_err());
    }
}
