//! The universal Harish-Chandra module `U^λ = U(𝔤) ⊗_{U(𝔨 ⊕ 𝔭⁺)} F_λ`.
//!
//! `F_λ` is the irreducible finite-dimensional `𝔨`-module of highest weight
//! `λ` with `𝔭⁺` acting by zero. As a `U(𝔭⁻)`-module `U^λ` is free on `F_λ`,
//! which gives its character; [`verma`] builds finite slices of it to look
//! for singular vectors.

mod character;
mod kmodule;
pub mod verma;

pub use character::{character_bruteforce, character_formula, FormalCharacter};
pub use kmodule::{
    alternating_sum, build_k_module, k_module, poly_mul, compact_weyl_group, weyl_denominator, weyl_dimension, KModule,
    WeightPoly,
};
pub use verma::{find_singular_vectors, is_hc_module_slice, ModuleSlice, PbwTerm, SingularVector};

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::possys::{is_admissible, HermitianPair, PositiveSystem};
use crate::rational::{q, Rational, Weight};
use crate::rootsys::SuperRootSystem;

/// Half sums attached to a positive system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rho {
    /// `ρ = ρ₀ − ρ₁`.
    pub rho: Weight,
    pub rho0: Weight,
    pub rho1: Weight,
}

fn half_sum(dim: usize, ws: impl Iterator<Item = Weight>) -> Weight {
    let mut acc = Weight::zero(dim);
    for w in ws {
        acc += &w;
    }
    acc.scale(&q(1, 2))
}

pub fn rho(sys: &SuperRootSystem, p: &PositiveSystem) -> Rho {
    let d = sys.dim();
    let rho0 = half_sum(d, p.even().into_iter());
    let rho1 = half_sum(d, p.odd().into_iter());
    Rho { rho: &rho0 - &rho1, rho0, rho1 }
}

/// `ρ_k` and `ρ_{n,0}`, the half sums of `P_k` and `P_{n,0}`.
pub fn rho_parts(pair: &HermitianPair, p: &PositiveSystem) -> (Weight, Weight) {
    let d = pair.decompose(p);
    let dim = pair.sys.dim();
    (half_sum(dim, d.p_k.into_iter()), half_sum(dim, d.p_n0.into_iter()))
}

/// A highest weight for an admissible positive system, dominant integral
/// on the compact roots.
#[derive(Clone, Debug)]
pub struct HighestWeight {
    pub lambda: Weight,
    pub pair: HermitianPair,
    pub p: PositiveSystem,
}

impl HighestWeight {
    pub fn new(pair: &HermitianPair, p: &PositiveSystem, lambda: Weight) -> Result<Self> {
        let sys = &pair.sys;
        if lambda.dim() != sys.dim() {
            return Err(Error::DimensionMismatch { expected: sys.dim(), got: lambda.dim() });
        }
        if !is_admissible(pair, p) {
            return Err(Error::NotAdmissible);
        }
        for a in pair.compact_simple(p) {
            let c = sys.coroot(&lambda, &a);
            if !c.is_integer() || c.is_negative() {
                return Err(Error::NotDominant(format!(
                    "lambda(H_{}) = {c}",
                    sys.family.label_weight(&a)
                )));
            }
        }
        Ok(HighestWeight { lambda, pair: pair.clone(), p: p.clone() })
    }

    pub fn sys(&self) -> &SuperRootSystem {
        &self.pair.sys
    }

    pub fn rho(&self) -> Rho {
        rho(self.sys(), &self.p)
    }
}

/// One line of the irreducibility test: `(λ+ρ)(H_γ)` for a non-compact
/// positive root `γ`.
#[derive(Clone, Debug, Serialize)]
pub struct CriterionTerm {
    pub root: Weight,
    pub isotropic: bool,
    #[serde(serialize_with = "crate::rational::serde_rational::serialize")]
    pub value: Rational,
    pub holds: bool,
}

/// `(λ+ρ)(H_γ)` for every `γ ∈ P_n`, with the requirement `≤ 0`, or `< 0`
/// when `γ` is isotropic.
pub fn criterion_terms(hw: &HighestWeight) -> Vec<CriterionTerm> {
    let sys = hw.sys();
    let nu = &hw.lambda + &hw.rho().rho;
    hw.pair
        .noncompact(&hw.p)
        .into_iter()
        .map(|g| {
            let isotropic = sys.is_isotropic(&g);
            let value = sys.coroot(&nu, &g);
            let holds = if isotropic { value.is_negative() } else { !value.is_positive() };
            CriterionTerm { root: g, isotropic, value, holds }
        })
        .collect()
}

/// The sufficient condition for irreducibility of `U^λ`.
pub fn check_irreducibility_criterion(hw: &HighestWeight) -> bool {
    criterion_terms(hw).iter().all(|t| t.holds)
}

/// Whether `λ + ρ` is orthogonal to no isotropic root.
pub fn is_typical(hw: &HighestWeight) -> bool {
    let sys = hw.sys();
    let nu = &hw.lambda + &hw.rho().rho;
    sys.isotropic_roots().iter().all(|r| !sys.form(&nu, &r.weight).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::possys::{build_hermitian_pair, standard_positive_system};
    use crate::rational::int;
    use crate::rootsys::{build_root_system, Family};

    #[test]
    fn rho_examples() {
        let s = build_root_system(&Family::b(0, 1).unwrap()).unwrap();
        let p = standard_positive_system(&s).unwrap();
        assert_eq!(rho(&s, &p).rho, Weight(vec![q(1, 2)]));
        let s = build_root_system(&Family::a(1, 0).unwrap()).unwrap();
        let p = standard_positive_system(&s).unwrap();
        assert_eq!(rho(&s, &p).rho, Weight::from_ints(&[0, -1, 1]));
        let s = build_root_system(&Family::b(2, 1).unwrap()).unwrap();
        let p = standard_positive_system(&s).unwrap();
        let r = rho(&s, &p);
        assert_eq!(&r.rho0 - &r.rho1, r.rho);
    }

    #[test]
    fn criterion_b01() {
        let pair = build_hermitian_pair(&Family::b(0, 1).unwrap(), "sp", None).unwrap();
        let p = pair.constructed_system().unwrap();
        for (c, expect) in [(q(-1, 2), true), (int(-3), true), (q(-1, 3), false), (int(2), false)] {
            let hw = HighestWeight::new(&pair, &p, Weight(vec![c])).unwrap();
            assert_eq!(check_irreducibility_criterion(&hw), expect);
        }
    }

    #[test]
    fn dominance_required() {
        let pair = build_hermitian_pair(&Family::a(1, 0).unwrap(), "su", Some([2, 0, 1, 0])).unwrap();
        let p = pair.constructed_system().unwrap();
        assert!(HighestWeight::new(&pair, &p, Weight::from_ints(&[1, 0, 0])).is_ok());
        assert!(matches!(
            HighestWeight::new(&pair, &p, Weight::from_ints(&[0, 1, 0])),
            Err(Error::NotDominant(_))
        ));
        assert!(matches!(
            HighestWeight::new(&pair, &p, Weight(vec![q(1, 2), int(0), int(0)])),
            Err(Error::NotDominant(_))
        ));
    }
}
