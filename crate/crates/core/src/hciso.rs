//! The polynomial side of the Harish-Chandra isomorphism.
//!
//! Polynomials live on `𝔥*` in the family coordinates. `I(𝔥)` is the set of
//! `W`-invariant `φ` with `φ(ν + tα) = φ(ν)` for every isotropic root `α`
//! and every `ν ⊥ α`. The infinitesimal character of highest weight `λ`
//! evaluates `φ` at `λ + ρ`.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::SymPoly;
use crate::possys::{simple_roots, PositiveSystem};
use crate::rational::{Rational, Weight};
use crate::rootsys::SuperRootSystem;
use crate::weyl::WeylGroup;

/// The Weyl group of the even part `𝔤₀`, generated by the simple roots of
/// `P₀`.
pub fn even_weyl_group(sys: &SuperRootSystem, p: &PositiveSystem) -> WeylGroup {
    WeylGroup::generated_by(sys, &simple_roots(&p.even()))
}

pub fn weyl_orbit(w: &WeylGroup, lambda: &Weight) -> BTreeSet<Weight> {
    w.orbit(lambda)
}

/// The linear polynomial `μ ↦ (μ, α)`.
pub fn linear_form(sys: &SuperRootSystem, alpha: &Weight) -> SymPoly {
    let d = sys.dim();
    let coeffs: Vec<Rational> = (0..d).map(|j| (0..d).map(|k| &sys.gram[j][k] * &alpha.0[k]).sum()).collect();
    SymPoly::linear(&coeffs)
}

/// The invariant form `μ ↦ (μ, μ)`.
pub fn quadratic_form(sys: &SuperRootSystem) -> SymPoly {
    let d = sys.dim();
    let mut p = SymPoly::zero(d);
    for i in 0..d {
        for j in 0..d {
            let mut e = vec![0; d];
            e[i] += 1;
            e[j] += 1;
            p.add_term(e, sys.gram[i][j].clone());
        }
    }
    p
}

pub fn is_w_invariant(w: &WeylGroup, phi: &SymPoly) -> bool {
    (0..w.order()).all(|i| &phi.compose_linear(w.matrix(i)) == phi)
}

/// `Σ_{s ∈ W} φ∘s`.
pub fn symmetrize(w: &WeylGroup, phi: &SymPoly) -> SymPoly {
    let mut out = SymPoly::zero(phi.nvars());
    for i in 0..w.order() {
        out = &out + &phi.compose_linear(w.matrix(i));
    }
    out
}

/// Orbit-symmetrized coordinate power sums `Σ_s (s·x)ᵢᵏ`, `1 ≤ k ≤ max_degree`,
/// with duplicates and zeros removed.
pub fn invariant_generators(w: &WeylGroup, nvars: usize, max_degree: u32) -> Vec<SymPoly> {
    let mut out: Vec<SymPoly> = Vec::new();
    for k in 1..=max_degree {
        for i in 0..nvars {
            let p = symmetrize(w, &SymPoly::var(nvars, i).pow(k));
            if !p.is_zero() && !out.contains(&p) {
                out.push(p);
            }
        }
    }
    out
}

/// `g = Π (μ, α)` over all isotropic roots `α`; `1` when there are none.
pub fn g_polynomial(sys: &SuperRootSystem) -> SymPoly {
    let mut g = SymPoly::one(sys.dim());
    for r in sys.isotropic_roots() {
        g = &g * &linear_form(sys, &r.weight);
    }
    g
}

/// Whether `φ(ν + tα) − φ(ν)` vanishes identically for `ν ∈ α^⊥`, for every
/// isotropic root `α`, as a polynomial identity in `t` and coordinates on
/// `α^⊥`.
pub fn satisfies_isotropic_condition(sys: &SuperRootSystem, phi: &SymPoly) -> bool {
    let d = sys.dim();
    for r in sys.isotropic_roots() {
        let alpha = &r.weight;
        let row: Vec<Rational> = (0..d).map(|j| (0..d).map(|k| &sys.gram[j][k] * &alpha.0[k]).sum()).collect();
        let perp = linalg::kernel(&[row], d);
        // Variables: one per basis vector of α^⊥, then t.
        let n = perp.len() + 1;
        let base: Vec<SymPoly> = (0..d)
            .map(|i| {
                let c: Vec<Rational> = perp.iter().map(|b| b[i].clone()).chain([Rational::zero()]).collect();
                SymPoly::linear(&c)
            })
            .collect();
        let moved: Vec<SymPoly> =
            (0..d).map(|i| &base[i] + &SymPoly::var(n, n - 1).scale(&alpha.0[i])).collect();
        if phi.substitute(&moved) != phi.substitute(&base) {
            return false;
        }
    }
    true
}

/// Membership in `I(𝔥)`. `φ` must be `W`-invariant.
pub fn in_i_h(sys: &SuperRootSystem, w: &WeylGroup, phi: &SymPoly) -> Result<bool> {
    if !is_w_invariant(w, phi) {
        return Err(Error::NotWInvariant);
    }
    Ok(satisfies_isotropic_condition(sys, phi))
}

/// Membership in `I(𝔥)` of a polynomial written in the highest-weight
/// variable `λ = ν − ρ`: tests `ν ↦ φ(ν − ρ)`. Non-invariant polynomials
/// are not members.
pub fn in_i_h_shifted(sys: &SuperRootSystem, w: &WeylGroup, rho: &Weight, phi: &SymPoly) -> bool {
    let shifted = phi.translate(&(-rho).0);
    is_w_invariant(w, &shifted) && satisfies_isotropic_condition(sys, &shifted)
}

/// Isotropic roots `α` with `(λ + ρ, α) = 0`.
pub fn atypical_roots(sys: &SuperRootSystem, rho: &Weight, lambda: &Weight) -> Vec<Weight> {
    let nu = lambda + rho;
    sys.isotropic_roots()
        .into_iter()
        .filter(|r| sys.form(&nu, &r.weight).is_zero())
        .map(|r| r.weight.clone())
        .collect()
}

pub fn is_typical(sys: &SuperRootSystem, rho: &Weight, lambda: &Weight) -> bool {
    atypical_roots(sys, rho, lambda).is_empty()
}

/// Whether `μ + ρ ∈ W(λ + ρ)`, the necessary condition for equal
/// infinitesimal characters at typical `λ`. Atypical `λ` is an error.
pub fn linkage(sys: &SuperRootSystem, w: &WeylGroup, rho: &Weight, lambda: &Weight, mu: &Weight) -> Result<bool> {
    if let Some(a) = atypical_roots(sys, rho, lambda).first() {
        return Err(Error::Atypical(sys.family.label_weight(a)));
    }
    let target = mu + rho;
    let nu = lambda + rho;
    Ok((0..w.order()).any(|i| w.act(i, &nu) == target))
}

/// `χ_λ(φ) = φ(λ + ρ)`.
pub fn infinitesimal_character(phi: &SymPoly, rho: &Weight, lambda: &Weight) -> Rational {
    phi.eval(&(lambda + rho).0)
}

#[derive(Clone, Debug, Serialize)]
pub struct LinkageReport {
    pub typical: bool,
    pub atypical_roots: Vec<Weight>,
    pub linked: Option<bool>,
    pub orbit_size: usize,
}

pub fn linkage_report(sys: &SuperRootSystem, p: &PositiveSystem, rho: &Weight, lambda: &Weight, mu: &Weight) -> LinkageReport {
    let w = even_weyl_group(sys, p);
    let atyp = atypical_roots(sys, rho, lambda);
    LinkageReport {
        typical: atyp.is_empty(),
        linked: linkage(sys, &w, rho, lambda, mu).ok(),
        atypical_roots: atyp,
        orbit_size: w.orbit(&(lambda + rho)).len(),
    }
}

/// `c + g·ψ`.
pub fn lemma_element(sys: &SuperRootSystem, c: Rational, psi: &SymPoly) -> SymPoly {
    &SymPoly::constant(sys.dim(), c) + &(&g_polynomial(sys) * psi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::possys::standard_positive_system;
    use crate::rational::{int, q};
    use crate::rootsys::{build_root_system, Family};

    fn setup(f: Family) -> (SuperRootSystem, WeylGroup, PositiveSystem) {
        let s = build_root_system(&f).unwrap();
        let p = standard_positive_system(&s).unwrap();
        let w = even_weyl_group(&s, &p);
        (s, w, p)
    }

    #[test]
    fn invariance() {
        let (s, w, _) = setup(Family::a(1, 0).unwrap());
        assert!(is_w_invariant(&w, &quadratic_form(&s)));
        assert!(!is_w_invariant(&w, &SymPoly::var(3, 0)));
        for p in invariant_generators(&w, 3, 3) {
            assert!(is_w_invariant(&w, &p));
        }
        let orbit = weyl_orbit(&w, &Weight::zero(3));
        assert_eq!(orbit.len(), 1);
    }

    #[test]
    fn g_and_membership() {
        let (s, w, _) = setup(Family::b(0, 1).unwrap());
        assert_eq!(g_polynomial(&s), SymPoly::one(1));
        let x2 = SymPoly::var(1, 0).pow(2);
        assert_eq!(in_i_h(&s, &w, &x2), Ok(true));
        assert_eq!(in_i_h(&s, &w, &SymPoly::var(1, 0)), Err(Error::NotWInvariant));

        let (s, w, p) = setup(Family::a(1, 0).unwrap());
        let g = g_polynomial(&s);
        assert_eq!(g.degree(), Some(4));
        assert_eq!(in_i_h(&s, &w, &SymPoly::constant(3, q(3, 7))), Ok(true));
        let psi = &invariant_generators(&w, 3, 2)[0] * &quadratic_form(&s);
        assert_eq!(in_i_h(&s, &w, &lemma_element(&s, int(5), &psi)), Ok(true));
        // x₁² + x₂² is W-invariant but moves along ε₁ − δ₁.
        let bad = symmetrize(&w, &SymPoly::var(3, 0).pow(2));
        assert_eq!(in_i_h(&s, &w, &bad), Ok(false));

        let rho = crate::hwmod::rho(&s, &p).rho;
        let q2 = quadratic_form(&s);
        let casimir = &q2 + &(&linear_form(&s, &rho)).scale(&int(2));
        assert!(in_i_h_shifted(&s, &w, &rho, &casimir));
        assert!(!in_i_h_shifted(&s, &w, &rho, &q2));
    }

    #[test]
    fn linkage_b01() {
        let (s, w, p) = setup(Family::b(0, 1).unwrap());
        let rho = crate::hwmod::rho(&s, &p).rho;
        assert_eq!(rho, Weight(vec![q(1, 2)]));
        let lam = Weight(vec![q(1, 2)]);
        assert_eq!(linkage(&s, &w, &rho, &lam, &lam), Ok(true));
        assert_eq!(linkage(&s, &w, &rho, &lam, &Weight(vec![q(-3, 2)])), Ok(true));
        assert_eq!(linkage(&s, &w, &rho, &lam, &Weight(vec![q(3, 2)])), Ok(false));

        let (s, w, p) = setup(Family::a(1, 0).unwrap());
        let rho = crate::hwmod::rho(&s, &p).rho;
        let atypical = &Weight::zero(3) - &rho;
        assert!(matches!(linkage(&s, &w, &rho, &atypical, &atypical), Err(Error::Atypical(_))));
    }
}
