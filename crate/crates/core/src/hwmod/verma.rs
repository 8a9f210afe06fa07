//! Finite slices of `U^λ` with an explicit `𝔤`-action.
//!
//! `U^λ` is the quotient of the Verma module `M(λ)` for the Borel subalgebra
//! of `P` by the submodule generated by `f_α^{λ(H_α)+1} v` for the compact
//! simple roots `α`. Elements of `M(λ)` are written in the PBW basis of
//! `U(𝔫⁻)` applied to `v`: monomials in the negative root vectors, ordered
//! by height and then coordinates, odd exponents at most one. The action of
//! a basis element of `𝔤` on a monomial is computed by commuting it to the
//! right with the structure constants of the matrix realization.

use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, Echelon};
use crate::possys::{enumeration_budget, simple_coefficients};
use crate::rational::{int, q, Rational, Weight};
use crate::realize::{realize_algebra, StructureConstants};

use super::kmodule::build_k_module;
use super::HighestWeight;

type Mono = Vec<u8>;
type Elem = BTreeMap<Mono, Rational>;

fn add_into(acc: &mut Elem, m: &Mono, c: Rational) {
    if c.is_zero() {
        return;
    }
    let e = acc.entry(m.clone()).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        acc.remove(m);
    }
}

struct Layer {
    basis: Vec<Mono>,
    index: HashMap<Mono, usize>,
    relations: Echelon,
}

/// `M(λ)` and its quotient `U^λ` up to a height bound.
pub struct ModuleSlice {
    pub depth: usize,
    pub lambda: Weight,
    sc: StructureConstants,
    /// Simple roots of `P`, the basis for offsets.
    simple: Vec<Weight>,
    /// Basis indices of the negative root vectors, in PBW order.
    neg: Vec<usize>,
    neg_pos: HashMap<usize, usize>,
    odd: Vec<bool>,
    gen_offset: Vec<Vec<i64>>,
    /// Basis indices of the simple root vectors of `P`.
    raising: Vec<usize>,
    compact_raising: Vec<usize>,
    compact_lowering: Vec<usize>,
    /// Relations `f^k v = 0` as (PBW position, exponent).
    relations: Vec<(usize, u32)>,
    monomials: BTreeMap<Vec<i64>, Vec<Mono>>,
    memo: HashMap<(usize, Mono), Rc<Elem>>,
    rel_memo: HashMap<(usize, Mono), Rc<Elem>>,
    layers: HashMap<Vec<i64>, Rc<Layer>>,
}

impl ModuleSlice {
    pub fn new(hw: &HighestWeight, depth: usize) -> Result<Self> {
        let sc = realize_algebra(&hw.sys().family)?;
        let simple = hw.p.simple_roots();
        let mut negs: Vec<(i64, Weight, usize, Vec<i64>)> = Vec::new();
        for r in &hw.p.roots {
            let c = simple_coefficients(&simple, &r.weight)
                .ok_or_else(|| Error::Internal("positive root outside the simple span".into()))?;
            let c: Vec<i64> = c.iter().map(|x| x.to_integer().to_i64().unwrap()).collect();
            let idx = sc.root_index(&-&r.weight).ok_or_else(|| Error::NotARoot(format!("{:?}", r.weight)))?;
            negs.push((c.iter().sum(), -&r.weight, idx, c));
        }
        negs.sort();
        let neg: Vec<usize> = negs.iter().map(|t| t.2).collect();
        let neg_pos = neg.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let odd = neg.iter().map(|&x| sc.parity[x].is_odd()).collect();
        let gen_offset = negs.iter().map(|t| t.3.clone()).collect();
        let raising = simple.iter().map(|s| sc.root_index(s).unwrap()).collect();
        let compact_simple = hw.pair.compact_simple(&hw.p);
        let compact_raising = compact_simple.iter().map(|s| sc.root_index(s).unwrap()).collect();
        let compact_lowering: Vec<usize> = compact_simple.iter().map(|s| sc.root_index(&-s).unwrap()).collect();
        let mut slice = ModuleSlice {
            depth,
            lambda: hw.lambda.clone(),
            sc,
            simple,
            neg,
            neg_pos,
            odd,
            gen_offset,
            raising,
            compact_raising,
            compact_lowering: compact_lowering.clone(),
            relations: Vec::new(),
            monomials: BTreeMap::new(),
            memo: HashMap::new(),
            rel_memo: HashMap::new(),
            layers: HashMap::new(),
        };
        for (s, f) in compact_simple.iter().zip(&compact_lowering) {
            let k = hw.sys().coroot(&hw.lambda, s);
            let k = k.to_integer().to_u32().ok_or_else(|| Error::NotDominant(format!("{k}")))?;
            slice.relations.push((slice.neg_pos[f], k + 1));
        }
        slice.enumerate_monomials()?;
        Ok(slice)
    }

    fn enumerate_monomials(&mut self) -> Result<()> {
        let n = self.neg.len();
        let r = self.simple.len();
        let budget = enumeration_budget();
        let mut count = 0usize;
        let mut stack: Vec<(usize, Mono, Vec<i64>)> = vec![(0, vec![0; n], vec![0; r])];
        while let Some((i, m, off)) = stack.pop() {
            if i == n {
                count += 1;
                if count > budget {
                    return Err(Error::BudgetExceeded(budget));
                }
                self.monomials.entry(off).or_default().push(m);
                continue;
            }
            let h: i64 = self.gen_offset[i].iter().sum();
            let used: i64 = off.iter().sum();
            let cap = if self.odd[i] { 1 } else { (self.depth as i64 - used) / h };
            for k in 0..=cap {
                if used + k * h > self.depth as i64 {
                    break;
                }
                let mut m2 = m.clone();
                m2[i] = k as u8;
                let off2: Vec<i64> = off.iter().zip(&self.gen_offset[i]).map(|(a, b)| a + k * b).collect();
                stack.push((i + 1, m2, off2));
            }
        }
        for v in self.monomials.values_mut() {
            v.sort();
        }
        Ok(())
    }

    /// Drops the relations, leaving a slice of the Verma module `M(λ)`.
    pub fn drop_relations(&mut self) {
        self.relations.clear();
        self.rel_memo.clear();
        self.layers.clear();
    }

    /// Offsets with at least one monomial, by height then coordinates.
    pub fn offsets(&self) -> Vec<Vec<i64>> {
        let mut v: Vec<Vec<i64>> = self.monomials.keys().cloned().collect();
        v.sort_by_key(|o| (o.iter().sum::<i64>(), o.clone()));
        v
    }

    pub fn weight_of_offset(&self, o: &[i64]) -> Weight {
        let mut w = self.lambda.clone();
        for (c, s) in o.iter().zip(&self.simple) {
            w -= &s.scale(&int(*c));
        }
        w
    }

    fn mono_weight(&self, m: &Mono) -> Weight {
        let mut w = self.lambda.clone();
        for (i, &a) in m.iter().enumerate() {
            if a > 0 {
                w += &self.sc.weight_of(self.neg[i]).scale(&int(a as i64));
            }
        }
        w
    }

    pub fn mono_label(&self, m: &Mono) -> String {
        let f = &self.sc.sys.family;
        let parts: Vec<String> = m
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| {
                let l = format!("x[{}]", f.label_weight(&self.sc.weight_of(self.neg[i])));
                if a == 1 { l } else { format!("{l}^{a}") }
            })
            .collect();
        if parts.is_empty() { "v".into() } else { format!("{} v", parts.join(" ")) }
    }

    /// `x · m`, for a basis element `x` of `𝔤` and a PBW monomial `m`
    /// applied to the highest weight vector, in normal form.
    fn lmul(&mut self, x: usize, m: &Mono) -> Rc<Elem> {
        if let Some(r) = self.memo.get(&(x, m.clone())) {
            return r.clone();
        }
        let res = Rc::new(self.lmul_uncached(x, m));
        self.memo.insert((x, m.clone()), res.clone());
        res
    }

    fn lmul_uncached(&mut self, x: usize, m: &Mono) -> Elem {
        let mut out = Elem::new();
        if x < self.sc.rank {
            let c = self.sc.eval(&self.mono_weight(m), &[(x, Rational::from_integer(1.into()))]);
            add_into(&mut out, m, c);
            return out;
        }
        let first = m.iter().position(|&a| a > 0);
        let pos = self.neg_pos.get(&x).copied();
        let Some(j) = first else {
            if let Some(p) = pos {
                let mut m2 = m.clone();
                m2[p] = 1;
                out.insert(m2, Rational::from_integer(1.into()));
            }
            return out;
        };
        if let Some(p) = pos {
            if p < j || (p == j && !self.odd[j]) {
                let mut m2 = m.clone();
                m2[p] += 1;
                out.insert(m2, Rational::from_integer(1.into()));
                return out;
            }
            if p == j {
                // x² = ½[x, x] for odd x.
                let mut rest = m.clone();
                rest[j] -= 1;
                let br = self.sc.bracket(x, x).clone();
                for (y, cy) in br {
                    let part = self.lmul(y, &rest);
                    for (mm, c) in part.iter() {
                        add_into(&mut out, mm, &cy * c * q(1, 2));
                    }
                }
                return out;
            }
        }
        // x · f_j · rest = ± f_j · (x · rest) + [x, f_j] · rest.
        let fj = self.neg[j];
        let mut rest = m.clone();
        rest[j] -= 1;
        let sign = if self.sc.parity[x].is_odd() && self.odd[j] { int(-1) } else { int(1) };
        let inner = self.lmul(x, &rest);
        for (mm, c) in inner.iter() {
            let part = self.lmul(fj, mm);
            for (m3, c3) in part.iter() {
                add_into(&mut out, m3, &sign * c * c3);
            }
        }
        let br = self.sc.bracket(x, fj).clone();
        for (y, cy) in br {
            let part = self.lmul(y, &rest);
            for (mm, c) in part.iter() {
                add_into(&mut out, mm, &cy * c);
            }
        }
        out
    }

    fn apply(&mut self, x: usize, v: &Elem) -> Elem {
        let mut out = Elem::new();
        for (m, c) in v {
            let part = self.lmul(x, m);
            for (mm, cc) in part.iter() {
                add_into(&mut out, mm, c * cc);
            }
        }
        out
    }

    /// `m · f^k v` for relation `r`.
    fn relation_image(&mut self, r: usize, m: &Mono) -> Rc<Elem> {
        if let Some(e) = self.rel_memo.get(&(r, m.clone())) {
            return e.clone();
        }
        let res = match m.iter().position(|&a| a > 0) {
            None => {
                let (p, k) = self.relations[r];
                let mut g = vec![0u8; self.neg.len()];
                g[p] = k as u8;
                let mut e = Elem::new();
                if !(self.odd[p] && k > 1) {
                    e.insert(g, Rational::from_integer(1.into()));
                } else {
                    // Odd powers reduce through x² = ½[x, x].
                    let mut cur: Elem = [(vec![0u8; self.neg.len()], Rational::from_integer(1.into()))].into();
                    for _ in 0..k {
                        cur = self.apply(self.neg[p], &cur);
                    }
                    e = cur;
                }
                e
            }
            Some(j) => {
                let mut rest = m.clone();
                rest[j] -= 1;
                let inner = self.relation_image(r, &rest);
                self.apply(self.neg[j], &inner)
            }
        };
        let res = Rc::new(res);
        self.rel_memo.insert((r, m.clone()), res.clone());
        res
    }

    fn layer(&mut self, o: &[i64]) -> Rc<Layer> {
        if let Some(l) = self.layers.get(o) {
            return l.clone();
        }
        let basis = self.monomials.get(o).cloned().unwrap_or_default();
        let index: HashMap<Mono, usize> = basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let mut rows = Vec::new();
        for r in 0..self.relations.len() {
            let (p, k) = self.relations[r];
            let shift: Vec<i64> = o.iter().zip(&self.gen_offset[p]).map(|(a, b)| a - k as i64 * b).collect();
            if shift.iter().any(|&x| x < 0) {
                continue;
            }
            let ms = self.monomials.get(&shift).cloned().unwrap_or_default();
            for m in ms {
                let e = self.relation_image(r, &m);
                rows.push(to_coords(&index, &e));
            }
        }
        let relations = Echelon::new(&rows, basis.len());
        let l = Rc::new(Layer { basis, index, relations });
        self.layers.insert(o.to_vec(), l.clone());
        l
    }

    /// Dimension of `U^λ` at the weight with offset `o`.
    pub fn quotient_dim(&mut self, o: &[i64]) -> usize {
        let l = self.layer(o);
        l.basis.len() - l.relations.rank()
    }

    /// Columns `x·b` for each basis monomial `b` of layer `o`, reduced
    /// modulo the relations of the target layer, as rows of constraints.
    fn constraint_rows(&mut self, xs: &[usize], o: &[i64], basis: &[Mono]) -> Vec<Vec<Rational>> {
        let mut rows = Vec::new();
        for &x in xs {
            let wx = self.sc.weight_of(x);
            let delta = simple_coefficients(&self.simple, &wx).unwrap();
            let target: Vec<i64> = o.iter().zip(&delta).map(|(a, d)| a - d.to_integer().to_i64().unwrap()).collect();
            if target.iter().any(|&t| t < 0) {
                continue;
            }
            let tl = self.layer(&target);
            let mut cols = Vec::with_capacity(basis.len());
            for b in basis {
                let e = self.lmul(x, b);
                let mut v = to_coords(&tl.index, &e);
                tl.relations.reduce(&mut v);
                cols.push(v);
            }
            for t in 0..tl.basis.len() {
                let row: Vec<Rational> = cols.iter().map(|c| c[t].clone()).collect();
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
        rows
    }

    /// Vectors at offset `o`, modulo the relations, killed by every
    /// element of `xs`. Returned as reduced coordinate vectors.
    fn annihilated(&mut self, xs: &[usize], o: &[i64]) -> Vec<Vec<Rational>> {
        let l = self.layer(o);
        let n = l.basis.len();
        if n == l.relations.rank() {
            return vec![];
        }
        let rows = self.constraint_rows(xs, o, &l.basis);
        let kernel = if rows.is_empty() {
            (0..n).map(|i| (0..n).map(|j| if i == j { int(1) } else { int(0) }).collect()).collect()
        } else {
            linalg::kernel(&rows, n)
        };
        let reduced: Vec<Vec<Rational>> = kernel
            .into_iter()
            .map(|mut v| {
                l.relations.reduce(&mut v);
                v
            })
            .collect();
        let e = Echelon::new(&reduced, n);
        e.rows().to_vec()
    }

    fn vector_terms(&self, o: &[i64], v: &[Rational]) -> Vec<PbwTerm> {
        let l = &self.layers[o];
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| PbwTerm { monomial: self.mono_label(&l.basis[i]), coeff: c.clone() })
            .collect()
    }
}

fn to_coords(index: &HashMap<Mono, usize>, e: &Elem) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); index.len()];
    for (m, c) in e {
        let i = index.get(m).expect("monomial of the wrong weight");
        v[*i] = c.clone();
    }
    v
}

#[derive(Clone, Debug, Serialize)]
pub struct SingularVector {
    pub mu: Weight,
    pub height: usize,
    pub vector: Vec<PbwTerm>,
}

/// A term of a vector in the PBW basis, e.g. `x[-e1+e2]^2 v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PbwTerm {
    pub monomial: String,
    #[serde(serialize_with = "crate::rational::serde_rational::serialize")]
    pub coeff: Rational,
}

/// Singular vectors of `U^λ` at weights `μ ≠ λ` of height at most `depth`:
/// a basis, modulo the relations, of the vectors killed by every simple
/// root vector of `P`.
pub fn find_singular_vectors(hw: &HighestWeight, depth: usize) -> Result<Vec<SingularVector>> {
    let mut slice = ModuleSlice::new(hw, depth)?;
    singular_vectors_in(&mut slice)
}

pub fn singular_vectors_in(slice: &mut ModuleSlice) -> Result<Vec<SingularVector>> {
    let raising = slice.raising.clone();
    let mut out = Vec::new();
    for o in slice.offsets() {
        let h: i64 = o.iter().sum();
        if h == 0 {
            continue;
        }
        for v in slice.annihilated(&raising, &o) {
            out.push(SingularVector {
                mu: slice.weight_of_offset(&o),
                height: h as usize,
                vector: slice.vector_terms(&o, &v),
            });
        }
    }
    Ok(out)
}

/// Checks on the slice that `U(𝔨)v` is the irreducible `𝔨`-module `F_λ`:
/// its weight multiplicities equal those of `F_λ` up to the height bound,
/// and it has no `𝔨`-singular vector besides `v`.
pub fn is_hc_module_slice(slice: &mut ModuleSlice, hw: &HighestWeight) -> Result<bool> {
    let f = build_k_module(hw)?;
    let lowering = slice.compact_lowering.clone();
    let raising = slice.compact_raising.clone();
    let r = slice.simple.len();
    let zero = vec![0i64; r];
    let mut spans: BTreeMap<(i64, Vec<i64>), Vec<Vec<Rational>>> = BTreeMap::new();
    let l0 = slice.layer(&zero);
    let mut v0 = vec![Rational::zero(); l0.basis.len()];
    v0[l0.index[&vec![0u8; slice.neg.len()]]] = int(1);
    l0.relations.reduce(&mut v0);
    if v0.iter().all(Zero::is_zero) {
        return Ok(false);
    }
    spans.insert((0, zero), vec![v0]);
    let mut done: Vec<(Vec<i64>, Vec<Vec<Rational>>)> = Vec::new();
    while let Some(((_, o), vs)) = spans.pop_first() {
        let l = slice.layer(&o);
        let e = Echelon::new(&vs, l.basis.len());
        let vs: Vec<Vec<Rational>> = e.rows().to_vec();
        for &x in &lowering {
            let wx = slice.sc.weight_of(x);
            let delta = simple_coefficients(&slice.simple, &(-&wx)).unwrap();
            let target: Vec<i64> = o.iter().zip(&delta).map(|(a, d)| a + d.to_integer().to_i64().unwrap()).collect();
            let h: i64 = target.iter().sum();
            if h as usize > slice.depth {
                continue;
            }
            let tl = slice.layer(&target);
            for v in &vs {
                let elem: Elem = l.basis.iter().cloned().zip(v.iter().cloned()).filter(|(_, c)| !c.is_zero()).collect();
                let img = slice.apply(x, &elem);
                let mut w = to_coords(&tl.index, &img);
                tl.relations.reduce(&mut w);
                if w.iter().any(|c| !c.is_zero()) {
                    spans.entry((h, target.clone())).or_default().push(w);
                }
            }
        }
        done.push((o, vs));
    }
    for (o, vs) in &done {
        let mu = slice.weight_of_offset(o);
        if f.weights.get(&mu).copied().unwrap_or(0) != vs.len() as u64 {
            return Ok(false);
        }
    }
    let max_height = f.weights.keys().filter_map(|w| {
        let c = simple_coefficients(&slice.simple, &(&hw.lambda - w))?;
        Some(c.iter().map(|x| x.to_integer().to_i64().unwrap()).sum::<i64>())
    }).max().unwrap_or(0);
    if (max_height as usize) <= slice.depth {
        let total: usize = done.iter().map(|(_, vs)| vs.len()).sum();
        if total as u64 != f.dim() {
            return Ok(false);
        }
    }
    // No 𝔨-singular vectors inside U(𝔨)v away from the top.
    for (o, vs) in &done {
        if o.iter().all(|&c| c == 0) {
            continue;
        }
        let l = slice.layer(o);
        let rows = slice.constraint_rows(&raising, o, &l.basis);
        // Combinations Σ cᵢ vᵢ with every constraint row vanishing.
        let restricted: Vec<Vec<Rational>> = rows
            .iter()
            .map(|row| vs.iter().map(|v| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect())
            .collect();
        let k = if restricted.is_empty() { vs.len() } else { vs.len() - linalg::rank(&restricted, vs.len()) };
        if k > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hwmod::character_bruteforce;
    use crate::possys::build_hermitian_pair;
    use crate::rootsys::Family;

    #[test]
    fn osp12_verma() {
        let pair = build_hermitian_pair(&Family::b(0, 1).unwrap(), "sp", None).unwrap();
        let p = pair.constructed_system().unwrap();
        // Generic λ: no singular vectors.
        let hw = HighestWeight::new(&pair, &p, Weight(vec![q(-5, 2)])).unwrap();
        assert!(find_singular_vectors(&hw, 8).unwrap().is_empty());
        // λ(H_{2δ}) = 1: singular vector at depth 3.
        let hw = HighestWeight::new(&pair, &p, Weight(vec![int(1)])).unwrap();
        let sv = find_singular_vectors(&hw, 6).unwrap();
        assert_eq!(sv.len(), 1);
        assert_eq!(sv[0].height, 3);
        assert_eq!(sv[0].mu, Weight(vec![int(-2)]));
    }

    #[test]
    fn slice_dimensions_match_character() {
        let pair = build_hermitian_pair(&Family::a(2, 1).unwrap(), "su", Some([2, 1, 1, 1])).unwrap();
        let p = pair.constructed_system().unwrap();
        let hw = HighestWeight::new(&pair, &p, Weight::from_ints(&[1, 0, -3, 0, 2])).unwrap();
        let ch = character_bruteforce(&hw, 4).unwrap();
        let mut slice = ModuleSlice::new(&hw, 4).unwrap();
        for o in slice.offsets() {
            assert_eq!(slice.quotient_dim(&o) as i64, ch.terms.get(&o).copied().unwrap_or(0), "{o:?}");
        }
        assert!(is_hc_module_slice(&mut slice, &hw).unwrap());
        slice.drop_relations();
        assert!(!is_hc_module_slice(&mut slice, &hw).unwrap());
    }
}
