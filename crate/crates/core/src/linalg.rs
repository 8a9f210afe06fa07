//! Exact linear algebra over the rationals.
//!
//! Elimination is fraction-free: rows are scaled to integer rows and reduced
//! with the Bareiss form of Gauss-Jordan elimination, in which every
//! intermediate entry is a minor of the input and every division is exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Scales a rational row to a primitive integer row with the same kernel.
fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let mut den = BigInt::one();
    for x in row {
        den = den.lcm(x.denom());
    }
    row.iter().map(|x| (x * Rational::from_integer(den.clone())).to_integer()).collect()
}

/// Result of fraction-free Gauss-Jordan elimination.
///
/// Each pivot row `i` has the common pivot value `pivot` in column
/// `pivots[i]` and zeros in every other pivot column.
#[derive(Debug, Clone)]
pub struct FractionFree {
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
    pub pivot: BigInt,
    pub ncols: usize,
}

impl FractionFree {
    pub fn new(input: &[Vec<Rational>], ncols: usize) -> Self {
        let mut m: Vec<Vec<BigInt>> = input.iter().map(|r| integer_row(r)).collect();
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..ncols {
            if r == m.len() {
                break;
            }
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let piv = m[r][c].clone();
            for i in 0..m.len() {
                if i == r {
                    continue;
                }
                let a = m[i][c].clone();
                for j in 0..ncols {
                    let num = &piv * &m[i][j] - &a * &m[r][j];
                    debug_assert!((&num % &prev).is_zero(), "inexact Bareiss division");
                    m[i][j] = num / &prev;
                }
            }
            prev = piv;
            pivots.push(c);
            r += 1;
        }
        m.truncate(r);
        // Earlier pivot rows were rescaled as later pivots were processed; the
        // Jordan form leaves every pivot equal to the last one.
        for (i, &c) in pivots.iter().enumerate() {
            debug_assert_eq!(m[i][c], prev);
        }
        FractionFree { rows: m, pivots, pivot: prev, ncols }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// A basis of the right kernel, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let mut is_pivot = vec![false; self.ncols];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        let d = Rational::from_integer(self.pivot.clone());
        let mut out = Vec::new();
        for f in (0..self.ncols).filter(|&f| !is_pivot[f]) {
            let mut v = vec![Rational::zero(); self.ncols];
            v[f] = d.clone();
            for (i, &c) in self.pivots.iter().enumerate() {
                v[c] = -Rational::from_integer(self.rows[i][f].clone());
            }
            out.push(normalize(v));
        }
        out
    }
}

/// Divides a vector by its first nonzero entry.
pub fn normalize(mut v: Vec<Rational>) -> Vec<Rational> {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
        for x in v.iter_mut() {
            *x /= &lead;
        }
    }
    v
}

pub fn rank(rows: &[Vec<Rational>], ncols: usize) -> usize {
    FractionFree::new(rows, ncols).rank()
}

pub fn kernel(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    FractionFree::new(rows, ncols).kernel()
}

/// Determinant of a square matrix by Bareiss elimination.
pub fn det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    let mut den = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in m {
        let mut l = BigInt::one();
        for x in row {
            l = l.lcm(x.denom());
        }
        den *= &l;
        a.push(row.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect());
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    Rational::new(sign * &a[n - 1][n - 1], den)
}

/// One solution of `A x = b`, or `None` when the system is inconsistent.
pub fn solve(a: &[Vec<Rational>], b: &[Rational], ncols: usize) -> Option<Vec<Rational>> {
    let aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let ff = FractionFree::new(&aug, ncols + 1);
    if ff.pivots.last() == Some(&ncols) {
        return None;
    }
    let d = Rational::from_integer(ff.pivot.clone());
    let mut x = vec![Rational::zero(); ncols];
    for (i, &c) in ff.pivots.iter().enumerate() {
        x[c] = Rational::from_integer(ff.rows[i][ncols].clone()) / &d;
    }
    Some(x)
}

/// Row space in reduced echelon form, used for reduction modulo a subspace.
#[derive(Debug, Clone)]
pub struct Echelon {
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
    ncols: usize,
}

impl Echelon {
    pub fn new(rows: &[Vec<Rational>], ncols: usize) -> Self {
        let ff = FractionFree::new(rows, ncols);
        let d = Rational::from_integer(ff.pivot.clone());
        let rows = ff
            .rows
            .iter()
            .map(|r| r.iter().map(|x| Rational::from_integer(x.clone()) / &d).collect())
            .collect();
        Echelon { rows, pivots: ff.pivots, ncols }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduced rows; row `i` has a one in column `pivots()[i]`.
    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that are not pivots; their unit vectors span a complement.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ncols];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ncols).filter(|&c| !is_pivot[c]).collect()
    }

    /// Reduces `v` in place to its normal form modulo the row space.
    pub fn reduce(&self, v: &mut [Rational]) {
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            if v[c].is_zero() {
                continue;
            }
            let f = v[c].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Zero::is_zero)
    }
}

/// Integer matrix helpers used for Cartan matrices.
pub fn is_integral(m: &[Vec<Rational>]) -> bool {
    m.iter().all(|r| r.iter().all(|x| x.is_integer()))
}

/// Smallest positive rational multiple of `row` that is a primitive integer
/// vector, with the sign of the original row preserved.
pub fn primitive_integer_row(row: &[Rational]) -> Vec<Rational> {
    let ints = integer_row(row);
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return row.to_vec();
    }
    ints.into_iter().map(|x| Rational::from_integer(x / g.abs())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, q};
    use proptest::prelude::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn det_small() {
        assert_eq!(det(&mat(&[&[2, -1], &[-1, 0]])), int(-1));
        assert_eq!(det(&mat(&[&[1, 2], &[2, 4]])), int(0));
        let m = vec![vec![q(1, 2), int(1)], vec![int(3), q(1, 3)]];
        assert_eq!(det(&m), q(1, 6) - int(3));
        assert_eq!(det(&mat(&[&[0, 1], &[1, 0]])), int(-1));
    }

    #[test]
    fn kernel_and_solve() {
        let m = mat(&[&[1, 1, 0], &[0, 0, 1]]);
        let k = kernel(&m, 3);
        assert_eq!(k, vec![vec![int(1), int(-1), int(0)]]);
        let x = solve(&m, &[int(2), int(5)], 3).unwrap();
        assert_eq!(&x[0] + &x[1], int(2));
        assert_eq!(x[2], int(5));
        assert!(solve(&mat(&[&[1, 1], &[2, 2]]), &[int(1), int(3)], 2).is_none());
    }

    #[test]
    fn echelon_reduce() {
        let e = Echelon::new(&mat(&[&[1, 2, 0], &[2, 4, 1]]), 3);
        assert_eq!(e.rank(), 2);
        assert_eq!(e.free_columns(), vec![1]);
        assert!(e.contains(&[int(3), int(6), int(-2)]));
        assert!(!e.contains(&[int(0), int(1), int(0)]));
    }

    #[test]
    fn primitive_rows() {
        let r = primitive_integer_row(&[q(-1, 2), q(3, 4), int(0)]);
        assert_eq!(r, vec![int(-2), int(3), int(0)]);
    }

    proptest! {
        #[test]
        fn kernel_vectors_annihilate(entries in proptest::collection::vec(-4i64..5, 12), rows in 1usize..4) {
            let ncols = 12 / rows.max(1);
            let m: Vec<Vec<Rational>> = entries.chunks(ncols).take(rows)
                .map(|c| c.iter().map(|&x| q(x, 1 + (x.abs() % 3))).collect()).collect();
            let k = kernel(&m, ncols);
            prop_assert_eq!(k.len() + rank(&m, ncols), ncols);
            for v in &k {
                for row in &m {
                    let s: Rational = row.iter().zip(v).map(|(a, b)| a * b).sum();
                    prop_assert!(s.is_zero());
                }
            }
        }
    }
}
