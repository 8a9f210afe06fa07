//! Strict homogeneous feasibility by Fourier-Motzkin elimination.
//!
//! Given rows `a_k`, find a rational `x` with `a_k · x > 0` for every `k`,
//! or report that none exists. Rows are kept as primitive integer vectors and
//! deduplicated after every elimination step; combined rows whose history
//! involves more original rows than eliminated variables plus one are
//! dropped (Chernikov's rule), which removes only redundant inequalities.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};

use crate::linalg::primitive_integer_row;
use crate::rational::Rational;

#[derive(Clone, Debug)]
struct Row {
    a: Vec<Rational>,
    history: BTreeSet<usize>,
}

fn dot(a: &[Rational], x: &[Rational]) -> Rational {
    a.iter().zip(x).filter(|(p, _)| !p.is_zero()).map(|(p, q)| p * q).sum()
}

fn dedup(rows: Vec<Row>) -> Vec<Row> {
    let mut by_vec: BTreeMap<Vec<Rational>, Row> = BTreeMap::new();
    for mut r in rows {
        r.a = primitive_integer_row(&r.a);
        match by_vec.get(&r.a) {
            Some(old) if old.history.len() <= r.history.len() => {}
            _ => {
                by_vec.insert(r.a.clone(), r);
            }
        }
    }
    by_vec.into_values().collect()
}

/// A point strictly inside `{x : a_k · x > 0}`, or `None` if that cone is
/// empty.
pub fn strict_feasible_point(rows: &[Vec<Rational>], dim: usize) -> Option<Vec<Rational>> {
    let mut stages: Vec<Vec<Row>> = Vec::with_capacity(dim + 1);
    let mut cur = dedup(
        rows.iter()
            .enumerate()
            .map(|(i, a)| Row { a: a.clone(), history: [i].into_iter().collect() })
            .collect(),
    );
    for var in (0..dim).rev() {
        stages.push(cur.clone());
        let eliminated = dim - var;
        let (mut pos, mut neg, mut rest) = (vec![], vec![], vec![]);
        for r in cur {
            if r.a[var].is_positive() {
                pos.push(r);
            } else if r.a[var].is_negative() {
                neg.push(r);
            } else {
                rest.push(r);
            }
        }
        for p in &pos {
            for n in &neg {
                let history: BTreeSet<usize> = p.history.union(&n.history).copied().collect();
                if history.len() > eliminated + 1 {
                    continue;
                }
                let cp = p.a[var].clone();
                let cn = -n.a[var].clone();
                let a: Vec<Rational> =
                    p.a.iter().zip(&n.a).map(|(x, y)| x * &cn + y * &cp).collect();
                rest.push(Row { a, history });
            }
        }
        cur = dedup(rest);
        if cur.iter().any(|r| r.a.iter().all(Zero::is_zero)) {
            return None;
        }
    }
    // Back substitution: fix variables in increasing order.
    let mut x = vec![Rational::zero(); dim];
    for var in 0..dim {
        let stage = &stages[dim - 1 - var];
        let mut lo: Option<Rational> = None;
        let mut hi: Option<Rational> = None;
        for r in stage {
            let c = &r.a[var];
            if c.is_zero() {
                continue;
            }
            // c·x_var + rest > 0 with later variables still zero.
            let bound = -dot(&r.a, &x) / c;
            if c.is_positive() {
                if lo.as_ref().map_or(true, |l| bound > *l) {
                    lo = Some(bound);
                }
            } else if hi.as_ref().map_or(true, |h| bound < *h) {
                hi = Some(bound);
            }
        }
        x[var] = match (lo, hi) {
            (Some(l), Some(h)) => (l + h) / Rational::from_integer(2.into()),
            (Some(l), None) => l + Rational::one(),
            (None, Some(h)) => h - Rational::one(),
            (None, None) => Rational::zero(),
        };
    }
    debug_assert!(rows.iter().all(|a| dot(a, &x).is_positive()));
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use proptest::prelude::*;

    fn rows(v: &[&[i64]]) -> Vec<Vec<Rational>> {
        v.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn simple_cones() {
        let x = strict_feasible_point(&rows(&[&[1, -1, 0], &[1, 0, -1], &[0, 1, -1]]), 3).unwrap();
        assert!(x[0] > x[1] && x[1] > x[2]);
        assert!(strict_feasible_point(&rows(&[&[1, 0], &[-1, 0]]), 2).is_none());
        assert!(strict_feasible_point(&rows(&[&[1, 1], &[-1, 0], &[0, -1]]), 2).is_none());
        assert!(strict_feasible_point(&rows(&[&[0, 0]]), 2).is_none());
        assert_eq!(strict_feasible_point(&[], 2), Some(vec![int(0), int(0)]));
    }

    proptest! {
        #[test]
        fn witness_or_certificate(seed in proptest::collection::vec(-3i64..4, 3), extra in proptest::collection::vec(proptest::collection::vec(-3i64..4, 3), 1..7)) {
            // Rows positive on a planted point are always feasible.
            let planted: Vec<Rational> = seed.iter().map(|&x| int(x)).collect();
            let mut rs: Vec<Vec<Rational>> = Vec::new();
            for e in &extra {
                let r: Vec<Rational> = e.iter().map(|&x| int(x)).collect();
                let v = dot(&r, &planted);
                if v.is_positive() {
                    rs.push(r);
                } else if v.is_negative() {
                    rs.push(r.iter().map(|x| -x).collect());
                }
            }
            let x = strict_feasible_point(&rs, 3);
            prop_assert!(x.is_some());
            let x = x.unwrap();
            for r in &rs {
                prop_assert!(dot(r, &x).is_positive());
            }
            // Adding the negation of any row makes it infeasible.
            if let Some(r) = rs.first() {
                let mut bad = rs.clone();
                bad.push(r.iter().map(|x| -x).collect());
                prop_assert!(strict_feasible_point(&bad, 3).is_none());
            }
        }
    }
}
