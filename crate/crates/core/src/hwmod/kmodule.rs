//! Finite-dimensional irreducible modules of the compact subalgebra `𝔨`.
//!
//! `𝔨` is reductive; its semisimple part splits into simple ideals, one for
//! each connected component of the compact simple roots. Weight
//! multiplicities are computed with Freudenthal's recursion on each ideal,
//! using the invariant form rescaled to be positive on that ideal, and
//! multiplied together.

use std::collections::BTreeMap;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::possys::{simple_coefficients, HermitianPair, PositiveSystem};
use crate::rational::{int, q, Rational, Weight};
use crate::rootsys::SuperRootSystem;
use crate::weyl::WeylGroup;

use super::HighestWeight;

/// A finite formal sum `Σ c_μ e^μ`.
pub type WeightPoly = BTreeMap<Weight, i64>;

pub fn poly_mul(a: &WeightPoly, b: &WeightPoly) -> WeightPoly {
    let mut out = WeightPoly::new();
    for (x, cx) in a {
        for (y, cy) in b {
            *out.entry(x + y).or_insert(0) += cx * cy;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KModule {
    pub highest: Weight,
    /// Compact simple roots.
    pub simple: Vec<Weight>,
    pub weights: BTreeMap<Weight, u64>,
}

impl KModule {
    pub fn dim(&self) -> u64 {
        self.weights.values().sum()
    }

    pub fn character(&self) -> WeightPoly {
        self.weights.iter().map(|(w, &m)| (w.clone(), m as i64)).collect()
    }
}

/// Splits the compact simple roots into mutually orthogonal components.
fn components(sys: &SuperRootSystem, simple: &[Weight]) -> Vec<Vec<usize>> {
    let n = simple.len();
    let mut comp: Vec<usize> = (0..n).collect();
    fn find(c: &mut Vec<usize>, i: usize) -> usize {
        if c[i] != i {
            let r = find(c, c[i]);
            c[i] = r;
        }
        c[i]
    }
    for i in 0..n {
        for j in i + 1..n {
            if !sys.form(&simple[i], &simple[j]).is_zero() {
                let (a, b) = (find(&mut comp, i), find(&mut comp, j));
                comp[a] = b;
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        let r = find(&mut comp, i);
        groups.entry(r).or_default().push(i);
    }
    groups.into_values().collect()
}

/// Multiplicities of `F_λ` for one simple ideal, keyed by the drop
/// `λ − μ` in coordinates of the ideal's simple roots.
fn freudenthal(
    sys: &SuperRootSystem,
    lambda: &Weight,
    simple: &[Weight],
    positive: &[(Weight, Vec<i64>)],
) -> BTreeMap<Vec<i64>, u64> {
    let r = simple.len();
    let sign = if sys.form(&simple[0], &simple[0]).is_positive() { int(1) } else { int(-1) };
    let form = |x: &Weight, y: &Weight| &sign * sys.form(x, y);
    let mut rho = Weight::zero(sys.dim());
    for (a, _) in positive {
        rho += a;
    }
    let rho = rho.scale(&q(1, 2));
    let lr = lambda + &rho;
    let to_weight = |n: &[i64]| -> Weight {
        let mut w = Weight::zero(sys.dim());
        for (k, s) in n.iter().zip(simple) {
            w += &s.scale(&int(*k));
        }
        w
    };
    let mut mult: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    mult.insert(vec![0; r], 1);
    let mut height = 0i64;
    loop {
        height += 1;
        let mut found = false;
        for n in compositions(r, height) {
            let nu = to_weight(&n);
            let den = int(2) * form(&lr, &nu) - form(&nu, &nu);
            if den.is_zero() {
                continue;
            }
            let mu = lambda - &nu;
            let mut num = Rational::zero();
            for (a, ca) in positive {
                let mut j = 1i64;
                loop {
                    let key: Vec<i64> = n.iter().zip(ca).map(|(x, c)| x - j * c).collect();
                    if key.iter().any(|&x| x < 0) {
                        break;
                    }
                    if let Some(&m) = mult.get(&key) {
                        num += int(m as i64) * form(&(&mu + &a.scale(&int(j))), a);
                    }
                    j += 1;
                }
            }
            let m = int(2) * num / den;
            debug_assert!(m.is_integer() && !m.is_negative());
            let m = m.to_integer().to_u64().unwrap_or(0);
            if m > 0 {
                mult.insert(n, m);
                found = true;
            }
        }
        if !found {
            break;
        }
    }
    mult
}

/// All vectors of `r` nonnegative integers summing to `h`.
pub(crate) fn compositions(r: usize, h: i64) -> Vec<Vec<i64>> {
    if r == 0 {
        return if h == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=h {
        for mut rest in compositions(r - 1, h - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `F_λ` for the compact roots `P_k` of `p`.
pub fn build_k_module(hw: &HighestWeight) -> Result<KModule> {
    let pk = hw.pair.decompose(&hw.p).p_k;
    k_module(hw.sys(), &pk, &hw.lambda)
}

/// Irreducible module of highest weight `λ` for the reductive algebra with
/// positive roots `pk`.
pub fn k_module(sys: &SuperRootSystem, pk: &[Weight], lambda: &Weight) -> Result<KModule> {
    let simple = crate::possys::simple_roots(pk);
    for a in &simple {
        let c = sys.coroot(lambda, a);
        if !c.is_integer() || c.is_negative() {
            return Err(Error::NotDominant(format!("lambda(H_{}) = {c}", sys.family.label_weight(a))));
        }
    }
    let mut weights: BTreeMap<Weight, u64> = BTreeMap::new();
    weights.insert(lambda.clone(), 1);
    for comp in components(sys, &simple) {
        let cs: Vec<Weight> = comp.iter().map(|&i| simple[i].clone()).collect();
        let positive: Vec<(Weight, Vec<i64>)> = pk
            .iter()
            .filter_map(|a| {
                let c = simple_coefficients(&cs, a)?;
                Some((a.clone(), c.iter().map(|x| x.to_integer().to_i64().unwrap()).collect()))
            })
            .collect();
        let local = freudenthal(sys, lambda, &cs, &positive);
        let mut next = BTreeMap::new();
        for (w, m) in &weights {
            for (n, k) in &local {
                let mut v = w.clone();
                for (c, s) in n.iter().zip(&cs) {
                    v -= &s.scale(&int(*c));
                }
                *next.entry(v).or_insert(0) += m * k;
            }
        }
        weights = next;
    }
    Ok(KModule { highest: lambda.clone(), simple, weights })
}

/// `Π_{α∈P_k} (λ+ρ_k, α)/(ρ_k, α)`.
pub fn weyl_dimension(sys: &SuperRootSystem, pk: &[Weight], lambda: &Weight) -> Rational {
    let mut rho = Weight::zero(sys.dim());
    for a in pk {
        rho += a;
    }
    let rho = rho.scale(&q(1, 2));
    let lr = lambda + &rho;
    let mut d = Rational::one();
    for a in pk {
        d *= sys.form(&lr, a) / sys.form(&rho, a);
    }
    d
}

/// The Weyl group of `𝔨`, generated by the compact simple roots.
pub fn compact_weyl_group(pair: &HermitianPair, p: &PositiveSystem) -> WeylGroup {
    pair.compact_weyl_group(p)
}

/// `e^{ρ_k} Π_{α∈P_k} (1 − e^{−α})`.
pub fn weyl_denominator(sys: &SuperRootSystem, pk: &[Weight]) -> WeightPoly {
    let mut rho = Weight::zero(sys.dim());
    for a in pk {
        rho += a;
    }
    let mut out: WeightPoly = [(rho.scale(&q(1, 2)), 1)].into_iter().collect();
    for a in pk {
        let f: WeightPoly = [(Weight::zero(sys.dim()), 1), (-a, -1)].into_iter().collect();
        out = poly_mul(&out, &f);
    }
    out
}

/// `Σ_{s∈W} ε(s) e^{s(v)}`.
pub fn alternating_sum(w: &WeylGroup, v: &Weight) -> WeightPoly {
    let mut out = WeightPoly::new();
    for i in 0..w.order() {
        *out.entry(w.act(i, v)).or_insert(0) += w.sign(i);
    }
    out.retain(|_, c| *c != 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::possys::build_hermitian_pair;
    use crate::rootsys::Family;

    #[test]
    fn small_modules() {
        let pair = build_hermitian_pair(&Family::a(2, 1).unwrap(), "su", Some([3, 0, 1, 1])).unwrap();
        let p = pair.constructed_system().unwrap();
        let pk = pair.decompose(&p).p_k;
        assert_eq!(pk.len(), 3);
        let lam = Weight::from_ints(&[1, 0, 0, 0, 0]);
        let f = k_module(&pair.sys, &pk, &lam).unwrap();
        assert_eq!(f.dim(), 3);
        let lam = Weight::from_ints(&[2, 1, 0, 0, 0]);
        let f = k_module(&pair.sys, &pk, &lam).unwrap();
        assert_eq!(f.dim(), 8);
        assert_eq!(f.weights[&Weight::from_ints(&[1, 1, 1, 0, 0])], 2);
        assert_eq!(weyl_dimension(&pair.sys, &pk, &lam), int(8));
        let trivial = k_module(&pair.sys, &pk, &Weight::zero(5)).unwrap();
        assert_eq!(trivial.dim(), 1);
    }

    #[test]
    fn negative_form_components() {
        // sp(2) inside B(0,2): compact roots δ₁ − δ₂ with (δ,δ) = −1.
        let pair = build_hermitian_pair(&Family::b(0, 2).unwrap(), "sp", None).unwrap();
        let p = pair.constructed_system().unwrap();
        let pk = pair.decompose(&p).p_k;
        let lam = Weight::from_ints(&[2, 0]);
        let f = k_module(&pair.sys, &pk, &lam).unwrap();
        assert_eq!(f.dim(), 3);
        assert_eq!(weyl_dimension(&pair.sys, &pk, &lam), int(3));
    }

    #[test]
    fn numerator_identity() {
        let pair = build_hermitian_pair(&Family::b(3, 1).unwrap(), "so2-sp", None).unwrap();
        let p = pair.constructed_system().unwrap();
        let pk = pair.decompose(&p).p_k;
        let w = pair.compact_weyl_group(&p);
        let mut rho = Weight::zero(4);
        for a in &pk {
            rho += a;
        }
        let rho = rho.scale(&q(1, 2));
        for lam in [Weight::from_ints(&[0, 1, 0, 0]), Weight::from_ints(&[5, 2, 1, -3])] {
            let f = k_module(&pair.sys, &pk, &lam).unwrap();
            let lhs = poly_mul(&weyl_denominator(&pair.sys, &pk), &f.character());
            assert_eq!(lhs, alternating_sum(&w, &(&lam + &rho)));
        }
    }
}
