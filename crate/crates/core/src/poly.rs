//! Sparse multivariate polynomials with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::{format_rational, Rational};

/// A polynomial in `nvars` variables, stored as exponent vector to
/// coefficient. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl SymPoly {
    pub fn zero(nvars: usize) -> Self {
        SymPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, Rational::one())
    }

    pub fn monomial(exps: Vec<u32>, c: Rational) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    /// `Σ cᵢ xᵢ`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        SymPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// `p(images₀, images₁, …)`: substitutes a polynomial for each variable.
    pub fn substitute(&self, images: &[SymPoly]) -> SymPoly {
        assert_eq!(images.len(), self.nvars);
        let n = images.first().map_or(0, |p| p.nvars);
        let mut powers: Vec<Vec<SymPoly>> = images.iter().map(|p| vec![SymPoly::one(n), p.clone()]).collect();
        let mut out = SymPoly::zero(n);
        for (e, c) in &self.terms {
            let mut t = SymPoly::constant(n, c.clone());
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                if k > 0 {
                    t = &t * &powers[i][k as usize];
                }
            }
            out = &out + &t;
        }
        out
    }

    /// `x ↦ p(Mx)` for a square matrix `M`.
    pub fn compose_linear(&self, m: &[Vec<Rational>]) -> SymPoly {
        let images: Vec<SymPoly> = m.iter().map(|row| SymPoly::linear(row)).collect();
        self.substitute(&images)
    }

    /// `x ↦ p(x + v)`.
    pub fn translate(&self, v: &[Rational]) -> SymPoly {
        let n = self.nvars;
        let images: Vec<SymPoly> =
            (0..n).map(|i| &SymPoly::var(n, i) + &SymPoly::constant(n, v[i].clone())).collect();
        self.substitute(&images)
    }
}

impl<'a> Add<&'a SymPoly> for &'a SymPoly {
    type Output = SymPoly;
    fn add(self, o: &SymPoly) -> SymPoly {
        assert_eq!(self.nvars, o.nvars);
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a SymPoly> for &'a SymPoly {
    type Output = SymPoly;
    fn sub(self, o: &SymPoly) -> SymPoly {
        self + &-o
    }
}

impl Neg for &SymPoly {
    type Output = SymPoly;
    fn neg(self) -> SymPoly {
        self.scale(&-Rational::one())
    }
}

impl<'a> Mul<&'a SymPoly> for &'a SymPoly {
    type Output = SymPoly;
    fn mul(self, o: &SymPoly) -> SymPoly {
        assert_eq!(self.nvars, o.nvars);
        let mut acc: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        SymPoly { nvars: self.nvars, terms: acc }
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{k}", i + 1) })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", format_rational(c))?;
            } else if c.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "({})*{}", format_rational(c), vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, q};
    use proptest::prelude::*;

    #[test]
    fn arithmetic() {
        let x = SymPoly::var(2, 0);
        let y = SymPoly::var(2, 1);
        let s = &x + &y;
        let d = &x - &y;
        assert_eq!(&s * &d, &x.pow(2) - &y.pow(2));
        assert!((&s - &s).is_zero());
        assert_eq!(s.pow(3).degree(), Some(3));
        assert_eq!(s.pow(2).eval(&[int(2), q(1, 2)]), q(25, 4));
        assert_eq!(SymPoly::zero(2).degree(), None);
    }

    #[test]
    fn substitution() {
        // (x + y)² at x = a + b, y = a − b is 4a².
        let p = (&SymPoly::var(2, 0) + &SymPoly::var(2, 1)).pow(2);
        let a = SymPoly::var(2, 0);
        let b = SymPoly::var(2, 1);
        assert_eq!(p.substitute(&[&a + &b, &a - &b]), a.pow(2).scale(&int(4)));
        let t = SymPoly::var(1, 0).pow(2).translate(&[int(1)]);
        assert_eq!(t.eval(&[int(2)]), int(9));
    }

    proptest! {
        #[test]
        fn evaluation_is_a_ring_map(c in proptest::collection::vec(-4i64..5, 6), pt in proptest::collection::vec(-3i64..4, 2)) {
            let x = SymPoly::var(2, 0);
            let y = SymPoly::var(2, 1);
            let p = &(&x.scale(&int(c[0])) + &y.pow(2).scale(&int(c[1]))) + &SymPoly::constant(2, int(c[2]));
            let r = &(&x.pow(2).scale(&int(c[3])) + &(&x * &y).scale(&int(c[4]))) + &SymPoly::constant(2, int(c[5]));
            let pt: Vec<Rational> = pt.iter().map(|&v| int(v)).collect();
            prop_assert_eq!((&p * &r).eval(&pt), p.eval(&pt) * r.eval(&pt));
            prop_assert_eq!((&p + &r).eval(&pt), p.eval(&pt) + r.eval(&pt));
        }
    }
}
