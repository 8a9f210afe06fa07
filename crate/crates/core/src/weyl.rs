//! Finite reflection groups generated by root reflections, acting on
//! weights in the family coordinates.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::{One, Zero};

use crate::rational::{int, Rational, Weight};
use crate::rootsys::SuperRootSystem;

type Matrix = Vec<Vec<Rational>>;

fn identity(d: usize) -> Matrix {
    (0..d)
        .map(|i| (0..d).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect()
}

fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let d = a.len();
    let mut out = vec![vec![Rational::zero(); d]; d];
    for i in 0..d {
        for k in 0..d {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..d {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

fn apply(m: &Matrix, v: &Weight) -> Weight {
    Weight(
        m.iter()
            .map(|row| row.iter().zip(&v.0).filter(|(a, _)| !a.is_zero()).map(|(a, b)| a * b).sum())
            .collect(),
    )
}

/// Matrix of the reflection `v ↦ v − 2(v,α)/(α,α) α`.
pub fn reflection_matrix(sys: &SuperRootSystem, alpha: &Weight) -> Matrix {
    let d = sys.dim();
    let aa = sys.form(alpha, alpha);
    assert!(!aa.is_zero(), "reflection in an isotropic root");
    let g_alpha: Vec<Rational> =
        (0..d).map(|j| (0..d).map(|k| &sys.gram[j][k] * &alpha.0[k]).sum()).collect();
    let mut m = identity(d);
    for i in 0..d {
        for j in 0..d {
            m[i][j] -= int(2) * &alpha.0[i] * &g_alpha[j] / &aa;
        }
    }
    m
}

pub fn reflect(sys: &SuperRootSystem, alpha: &Weight, v: &Weight) -> Weight {
    let aa = sys.form(alpha, alpha);
    let c = int(2) * sys.form(v, alpha) / aa;
    v - &alpha.scale(&c)
}

#[derive(Clone, Debug)]
pub struct WeylGroup {
    pub generators: Vec<Weight>,
    /// Elements as matrices, each with its sign `(−1)^{length}`, in
    /// breadth-first order starting from the identity.
    pub elements: Vec<(Matrix, i64)>,
}

impl WeylGroup {
    /// The group generated by reflections in the given non-isotropic roots.
    pub fn generated_by(sys: &SuperRootSystem, roots: &[Weight]) -> Self {
        let gens: Vec<Matrix> = roots.iter().map(|a| reflection_matrix(sys, a)).collect();
        let id = identity(sys.dim());
        let mut seen: BTreeMap<Matrix, usize> = BTreeMap::new();
        let mut elements = vec![(id.clone(), 1)];
        seen.insert(id, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &gens {
                let m = matmul(g, &elements[i].0);
                if !seen.contains_key(&m) {
                    seen.insert(m.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push((m, -elements[i].1));
                }
            }
        }
        WeylGroup { generators: roots.to_vec(), elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn act(&self, idx: usize, v: &Weight) -> Weight {
        apply(&self.elements[idx].0, v)
    }

    pub fn sign(&self, idx: usize) -> i64 {
        self.elements[idx].1
    }

    pub fn orbit(&self, v: &Weight) -> BTreeSet<Weight> {
        (0..self.order()).map(|i| self.act(i, v)).collect()
    }

    pub fn stabilizer_order(&self, v: &Weight) -> usize {
        (0..self.order()).filter(|&i| &self.act(i, v) == v).count()
    }

    /// Index of the element mapping the set `from` onto the set `to`.
    pub fn find_mapping(&self, from: &[Weight], to: &[Weight]) -> Option<usize> {
        let target: BTreeSet<&Weight> = to.iter().collect();
        (0..self.order()).find(|&i| {
            from.len() == to.len() && from.iter().all(|w| target.contains(&self.act(i, w)))
        })
    }

    /// The element sending every root of `positive` to a negative of one.
    pub fn longest_element(&self, positive: &[Weight]) -> Option<usize> {
        let neg: Vec<Weight> = positive.iter().map(|w| -w).collect();
        self.find_mapping(positive, &neg)
    }

    pub fn matrix(&self, idx: usize) -> &Matrix {
        &self.elements[idx].0
    }
}
