//! Height-truncated characters of `U^λ`.
//!
//! A term `e^μ` is stored by its offset: the coefficients of `λ − μ` in the
//! simple roots of `P`. The height of `μ` is the sum of the offset.

use std::collections::BTreeMap;

use num_traits::{Signed, ToPrimitive};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::possys::simple_coefficients;
use crate::rational::{int, Weight};

use super::kmodule::build_k_module;
use super::{rho, HighestWeight};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalCharacter {
    pub base: Weight,
    pub height_bound: usize,
    /// Simple roots of `P`, the basis for offsets.
    pub simple: Vec<Weight>,
    pub terms: BTreeMap<Vec<i64>, i64>,
}

impl FormalCharacter {
    fn new(hw: &HighestWeight, depth: usize) -> Self {
        FormalCharacter {
            base: hw.lambda.clone(),
            height_bound: depth,
            simple: hw.p.simple_roots(),
            terms: BTreeMap::new(),
        }
    }

    /// Offset of `λ − μ`, if it is a nonnegative integral combination of
    /// the simple roots.
    pub fn offset_of(&self, diff: &Weight) -> Option<Vec<i64>> {
        let c = simple_coefficients(&self.simple, diff)?;
        c.iter()
            .map(|x| if x.is_integer() && !x.is_negative() { x.to_integer().to_i64() } else { None })
            .collect()
    }

    pub fn weight_of(&self, offset: &[i64]) -> Weight {
        let mut w = self.base.clone();
        for (c, s) in offset.iter().zip(&self.simple) {
            w -= &s.scale(&int(*c));
        }
        w
    }

    pub fn mult(&self, mu: &Weight) -> i64 {
        self.offset_of(&(&self.base - mu)).and_then(|o| self.terms.get(&o).copied()).unwrap_or(0)
    }

    /// Terms as `(μ, multiplicity)`, sorted by height then coordinates.
    pub fn sorted_terms(&self) -> Vec<(Weight, i64)> {
        let mut v: Vec<(i64, Weight, i64)> = self
            .terms
            .iter()
            .map(|(o, &m)| (o.iter().sum(), self.weight_of(o), m))
            .collect();
        v.sort();
        v.into_iter().map(|(_, w, m)| (w, m)).collect()
    }

    fn add(&mut self, offset: Vec<i64>, c: i64) {
        if offset.iter().sum::<i64>() as usize > self.height_bound {
            return;
        }
        let e = self.terms.entry(offset.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&offset);
        }
    }

    /// Multiplies by `Σ_{k≥0} e^{−kη}`, or by `1 + e^{−η}` when
    /// `odd` is set, truncating at the height bound.
    fn multiply_series(&mut self, eta: &[i64], odd: bool) {
        let h: i64 = eta.iter().sum();
        let cap = if odd { 1 } else { self.height_bound as i64 / h.max(1) };
        let old = std::mem::take(&mut self.terms);
        for (o, c) in &old {
            for k in 0..=cap {
                let shifted: Vec<i64> = o.iter().zip(eta).map(|(a, b)| a + k * b).collect();
                self.add(shifted, *c);
            }
        }
    }
}

impl Serialize for FormalCharacter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            mu: Weight,
            mult: i64,
        }
        let terms: Vec<Term> = self.sorted_terms().into_iter().map(|(mu, mult)| Term { mu, mult }).collect();
        let mut st = s.serialize_struct("FormalCharacter", 3)?;
        st.serialize_field("base", &self.base)?;
        st.serialize_field("heightBound", &self.height_bound)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

fn root_offsets(ch: &FormalCharacter, roots: &[Weight]) -> Result<Vec<Vec<i64>>> {
    roots
        .iter()
        .map(|a| ch.offset_of(a).ok_or_else(|| Error::Internal("root outside the simple cone".into())))
        .collect()
}

/// `[Σ_{s∈W_k} ε(s) e^{s(λ+ρ₀)−ρ₀}] · Π_{η∈P₀} (1 − e^{−η})⁻¹ · Π_{η∈P₁} (1 + e^{−η})`.
pub fn character_formula(hw: &HighestWeight, depth: usize) -> Result<FormalCharacter> {
    let mut ch = FormalCharacter::new(hw, depth);
    let rho0 = rho(hw.sys(), &hw.p).rho0;
    let w = hw.pair.compact_weyl_group(&hw.p);
    let v = &hw.lambda + &rho0;
    for i in 0..w.order() {
        let image = &w.act(i, &v) - &rho0;
        let off = ch
            .offset_of(&(&hw.lambda - &image))
            .ok_or_else(|| Error::Internal("Weyl group image above the highest weight".into()))?;
        ch.add(off, w.sign(i));
    }
    for eta in root_offsets(&ch, &hw.p.even())? {
        ch.multiply_series(&eta, false);
    }
    for eta in root_offsets(&ch, &hw.p.odd())? {
        ch.multiply_series(&eta, true);
    }
    Ok(ch)
}

/// `ch(F_λ) · ch S(𝔭₀⁻) · ch Λ(𝔭₁⁻)`, with `F_λ` from Freudenthal's formula
/// and the other factors by counting PBW monomials.
pub fn character_bruteforce(hw: &HighestWeight, depth: usize) -> Result<FormalCharacter> {
    let mut ch = FormalCharacter::new(hw, depth);
    let f = build_k_module(hw)?;
    for (mu, m) in &f.weights {
        let off = ch
            .offset_of(&(&hw.lambda - mu))
            .ok_or_else(|| Error::Internal("weight of F above the highest weight".into()))?;
        ch.add(off, *m as i64);
    }
    let d = hw.pair.decompose(&hw.p);
    // Monomials in the non-compact negative root vectors: exponents are
    // enumerated one generator at a time.
    let gens: Vec<(Vec<i64>, bool)> = root_offsets(&ch, &d.p_n0)?
        .into_iter()
        .map(|o| (o, false))
        .chain(root_offsets(&ch, &d.p_n1)?.into_iter().map(|o| (o, true)))
        .collect();
    let mut monomials: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    monomials.insert(vec![0; ch.simple.len()], 1);
    for (g, odd) in &gens {
        let h: i64 = g.iter().sum();
        let mut next: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
        for (o, c) in &monomials {
            let mut k = 0;
            loop {
                let t: Vec<i64> = o.iter().zip(g).map(|(a, b)| a + k * b).collect();
                if t.iter().sum::<i64>() as usize > depth {
                    break;
                }
                *next.entry(t).or_insert(0) += c;
                k += 1;
                if *odd && k > 1 || h == 0 {
                    break;
                }
            }
        }
        monomials = next;
    }
    let base = std::mem::take(&mut ch.terms);
    for (a, ca) in &base {
        for (b, cb) in &monomials {
            ch.add(a.iter().zip(b).map(|(x, y)| x + y).collect(), ca * cb);
        }
    }
    Ok(ch)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::possys::build_hermitian_pair;
    use crate::rational::q;
    use crate::rootsys::Family;

    #[test]
    fn b01_generic() {
        let pair = build_hermitian_pair(&Family::b(0, 1).unwrap(), "sp", None).unwrap();
        let p = pair.constructed_system().unwrap();
        let hw = HighestWeight::new(&pair, &p, Weight(vec![q(7, 3)])).unwrap();
        let ch = character_formula(&hw, 3).unwrap();
        let terms = ch.sorted_terms();
        assert_eq!(terms.len(), 4);
        assert!(terms.iter().all(|(_, m)| *m == 1));
        assert_eq!(ch, character_bruteforce(&hw, 3).unwrap());
        assert_eq!(character_formula(&hw, 0).unwrap().terms.len(), 1);
    }

    #[test]
    fn all_compact_even_part() {
        let pair = build_hermitian_pair(&Family::a(1, 0).unwrap(), "su", Some([2, 0, 1, 0])).unwrap();
        let p = pair.constructed_system().unwrap();
        let hw = HighestWeight::new(&pair, &p, Weight::zero(3)).unwrap();
        // ε₁ + ε₂ − 2δ₁ = (ε₁ − ε₂) + 2(ε₂ − δ₁) has height 3.
        let ch = character_bruteforce(&hw, 3).unwrap();
        let expect: Vec<(Weight, i64)> = vec![
            (Weight::zero(3), 1),
            (Weight::from_ints(&[-1, 0, 1]), 1),
            (Weight::from_ints(&[0, -1, 1]), 1),
            (Weight::from_ints(&[-1, -1, 2]), 1),
        ];
        let mut got = ch.sorted_terms();
        got.sort();
        let mut expect = expect;
        expect.sort();
        assert_eq!(got, expect);
        assert_eq!(ch, character_formula(&hw, 3).unwrap());
        assert_eq!(character_bruteforce(&hw, 2).unwrap().terms.len(), 3);
    }
}
