//! Positive systems, simple systems, Hermitian pairs and admissibility.
//!
//! A Hermitian pair is recorded as the set of compact even roots; every odd
//! root is non-compact. A positive system `P` splits as
//! `P = P_k ⊔ P_{n,0} ⊔ P_{n,1}` (compact, non-compact even, odd), and it is
//! admissible when the span of the non-compact positive root spaces is
//! stable under the compact roots and closed under brackets.

use std::collections::{BTreeSet, VecDeque};

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::feasibility::strict_feasible_point;
use crate::linalg;
use crate::rational::{int, q, Rational, Weight};
use crate::rootsys::{Family, Root, SuperRootSystem};
use crate::weyl::WeylGroup;

/// Default cap on the number of positive systems visited by enumeration.
/// Overridden by the `SUPERHC_ENUM_BUDGET` environment variable.
pub const DEFAULT_ENUM_BUDGET: usize = 200_000;

pub fn enumeration_budget() -> usize {
    std::env::var("SUPERHC_ENUM_BUDGET")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_ENUM_BUDGET)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositiveSystem {
    /// Sorted lexicographically by coordinates.
    pub roots: Vec<Root>,
}

impl PositiveSystem {
    /// Wraps a set of roots; fails if a weight is not a root. No positivity
    /// check is made.
    pub fn from_weights(sys: &SuperRootSystem, ws: &[Weight]) -> Result<Self> {
        let mut roots: Vec<Root> = ws.iter().map(|w| sys.expect_root(w).cloned()).collect::<Result<_>>()?;
        roots.sort();
        roots.dedup();
        Ok(PositiveSystem { roots })
    }

    /// Roots that are nonnegative combinations of `simple`.
    pub fn from_simple(sys: &SuperRootSystem, simple: &[Weight]) -> Result<Self> {
        let cols: Vec<Vec<Rational>> = simple.iter().map(|w| w.0.clone()).collect();
        if linalg::rank(&cols, sys.dim()) != simple.len() {
            return Err(Error::DependentSimpleRoots);
        }
        let mut roots = Vec::new();
        for r in &sys.roots {
            let c = simple_coefficients(simple, &r.weight)
                .ok_or_else(|| Error::NotPositive("roots outside the span of the simple roots".into()))?;
            if c.iter().all(|x| !x.is_negative()) {
                roots.push(r.clone());
            }
        }
        let p = PositiveSystem { roots };
        if p.roots.len() * 2 != sys.roots.len() {
            return Err(Error::NotPositive("simple roots do not split the roots".into()));
        }
        Ok(p)
    }

    /// Roots on which the functional `l` (plain coordinate pairing) is
    /// positive.
    pub fn from_functional(sys: &SuperRootSystem, l: &Weight) -> Result<Self> {
        let mut roots = Vec::new();
        for r in &sys.roots {
            let v = dot(l, &r.weight);
            if v.is_zero() {
                return Err(Error::NotPositive("functional vanishes on a root".into()));
            }
            if v.is_positive() {
                roots.push(r.clone());
            }
        }
        Ok(PositiveSystem { roots })
    }

    pub fn weights(&self) -> Vec<Weight> {
        self.roots.iter().map(|r| r.weight.clone()).collect()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.roots.binary_search_by(|r| r.weight.cmp(w)).is_ok()
    }

    pub fn even(&self) -> Vec<Weight> {
        self.roots.iter().filter(|r| !r.is_odd()).map(|r| r.weight.clone()).collect()
    }

    pub fn odd(&self) -> Vec<Weight> {
        self.roots.iter().filter(|r| r.is_odd()).map(|r| r.weight.clone()).collect()
    }

    pub fn negate(&self) -> PositiveSystem {
        let mut roots: Vec<Root> = self.roots.iter().map(Root::neg).collect();
        roots.sort();
        PositiveSystem { roots }
    }

    pub fn simple_roots(&self) -> Vec<Weight> {
        simple_roots(&self.weights())
    }
}

pub fn dot(a: &Weight, b: &Weight) -> Rational {
    a.0.iter().zip(&b.0).filter(|(x, _)| !x.is_zero()).map(|(x, y)| x * y).sum()
}

/// Indecomposable elements: those not a sum of two (possibly equal)
/// elements of the set.
pub fn simple_roots(p: &[Weight]) -> Vec<Weight> {
    let set: BTreeSet<&Weight> = p.iter().collect();
    let mut out: Vec<Weight> = p
        .iter()
        .filter(|a| !p.iter().any(|b| set.contains(&(*a - b)) && !(*a - b).is_zero()))
        .cloned()
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Coordinates of `w` in the basis `simple`, if `w` lies in their span.
pub fn simple_coefficients(simple: &[Weight], w: &Weight) -> Option<Vec<Rational>> {
    let d = w.dim();
    let a: Vec<Vec<Rational>> = (0..d).map(|i| simple.iter().map(|s| s.0[i].clone()).collect()).collect();
    linalg::solve(&a, &w.0, simple.len())
}

/// Every element of `p` is a nonnegative integral combination of `simple`.
pub fn regenerates(simple: &[Weight], p: &[Weight]) -> bool {
    p.iter().all(|w| match simple_coefficients(simple, w) {
        Some(c) => c.iter().all(|x| x.is_integer() && !x.is_negative()),
        None => false,
    })
}

/// Checks `P ∩ −P = ∅`, `P ∪ −P = Δ` and closure under root sums.
pub fn is_abstract_positive(sys: &SuperRootSystem, p: &[Weight]) -> Result<bool> {
    for w in p {
        sys.expect_root(w)?;
    }
    let set: BTreeSet<&Weight> = p.iter().collect();
    for w in p {
        if set.contains(&-w) {
            return Ok(false);
        }
    }
    for r in &sys.roots {
        if !set.contains(&r.weight) && !set.contains(&-&r.weight) {
            return Ok(false);
        }
    }
    for a in p {
        for b in p {
            let s = a + b;
            if sys.contains(&s) && !set.contains(&s) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A functional `l` with `l(α) > 0` on all of `P`, found by exact
/// Fourier-Motzkin elimination. The simple roots are tried first; the full
/// system is used if that witness does not cover `P`.
pub fn positivity_functional(sys: &SuperRootSystem, p: &PositiveSystem) -> Result<Weight> {
    let ws = p.weights();
    let check = |x: &[Rational]| ws.iter().all(|w| dot(&Weight(x.to_vec()), w).is_positive());
    let simple = simple_roots(&ws);
    let rows: Vec<Vec<Rational>> = simple.iter().map(|w| w.0.clone()).collect();
    if let Some(x) = strict_feasible_point(&rows, sys.dim()) {
        if check(&x) {
            return Ok(Weight(x));
        }
    }
    let rows: Vec<Vec<Rational>> = ws.iter().map(|w| w.0.clone()).collect();
    strict_feasible_point(&rows, sys.dim())
        .map(Weight)
        .ok_or_else(|| Error::Internal("abstract positive system without a positive functional".into()))
}

/// Positive system obtained by reflecting across the line of a simple
/// root: `α` and `2α` change sign, everything else stays.
pub fn flip_line(sys: &SuperRootSystem, p: &PositiveSystem, alpha: &Weight) -> PositiveSystem {
    let two = alpha.scale(&int(2));
    let mut roots: Vec<Root> = p
        .roots
        .iter()
        .map(|r| if r.weight == *alpha || r.weight == two { r.neg() } else { r.clone() })
        .collect();
    roots.sort();
    debug_assert!(roots.iter().all(|r| sys.contains(&r.weight)));
    PositiveSystem { roots }
}

/// The positive system of the paper's distinguished simple system for the
/// family.
pub fn standard_simple_system(family: &Family) -> Vec<Weight> {
    let d = family.dim();
    let (a, b) = family.split();
    let u = |i: usize| Weight::unit(d, i);
    let diff = |i: usize, j: usize| &u(i) - &u(j);
    let mut out = Vec::new();
    match family {
        Family::A { .. } => {
            for i in 0..a + b - 1 {
                out.push(diff(i, i + 1));
            }
        }
        Family::B { m, n } => {
            for i in 0..m.saturating_sub(1) {
                out.push(diff(i, i + 1));
            }
            if *m > 0 {
                out.push(u(m - 1));
            }
            for j in 0..n - 1 {
                out.push(diff(a + j, a + j + 1));
            }
            if *m > 0 {
                out.push(diff(a + n - 1, 0));
            } else {
                out.push(u(a + n - 1));
            }
        }
        Family::D { m, n } => {
            for i in 0..m - 1 {
                out.push(diff(i, i + 1));
            }
            out.push(&u(m - 2) + &u(m - 1));
            for j in 0..n - 1 {
                out.push(diff(a + j, a + j + 1));
            }
            out.push(diff(a + n - 1, 0));
        }
        Family::C { n } => {
            out.push(diff(0, 1));
            for j in 1..n - 1 {
                out.push(diff(j, j + 1));
            }
            out.push(u(n - 1).scale(&int(2)));
        }
        Family::D21 { .. } => {
            out.push(Weight::from_ints(&[1, 1, 1]));
            out.push(Weight::from_ints(&[0, -2, 0]));
            out.push(Weight::from_ints(&[0, 0, -2]));
        }
        Family::F4 => {
            out.push(Weight(vec![q(1, 2); 4]));
            out.push(Weight::from_ints(&[-1, 0, 0, 0]));
            out.push(Weight::from_ints(&[1, -1, 0, 0]));
            out.push(Weight::from_ints(&[0, 1, -1, 0]));
        }
        Family::G3 => {
            out.push(Weight::from_ints(&[1, 0, 1]));
            out.push(Weight::from_ints(&[0, 1, 0]));
            out.push(Weight::from_ints(&[-1, -2, 0]));
        }
    }
    out
}

pub fn standard_positive_system(sys: &SuperRootSystem) -> Result<PositiveSystem> {
    PositiveSystem::from_simple(sys, &standard_simple_system(&sys.family))
}

/// All positive systems of `sys`, reached from the standard one by
/// reflections across simple root lines (adjacent chambers). Sorted.
pub fn enumerate_positive_systems(sys: &SuperRootSystem, budget: usize) -> Result<Vec<PositiveSystem>> {
    let start = standard_positive_system(sys)?;
    let mut seen: BTreeSet<PositiveSystem> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(p) = queue.pop_front() {
        for a in p.simple_roots() {
            let next = flip_line(sys, &p, &a);
            if !seen.contains(&next) {
                if seen.len() >= budget {
                    return Err(Error::BudgetExceeded(budget));
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Every abstract positive system, found by trying all sign choices on
/// pairs `±α`. Exponential; meant for rank ≤ 3.
pub fn abstract_positive_bruteforce(sys: &SuperRootSystem) -> Vec<PositiveSystem> {
    let reps: Vec<&Root> = sys.roots.iter().filter(|r| r.weight.leading_sign() > 0).collect();
    let k = reps.len();
    assert!(k < 24, "brute force over 2^{k} sign choices");
    let mut out = Vec::new();
    for mask in 0u32..(1 << k) {
        let ws: Vec<Weight> = reps
            .iter()
            .enumerate()
            .map(|(i, r)| if mask >> i & 1 == 1 { -&r.weight } else { r.weight.clone() })
            .collect();
        if is_abstract_positive(sys, &ws).unwrap_or(false) {
            out.push(PositiveSystem::from_weights(sys, &ws).unwrap());
        }
    }
    out.sort();
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RealForm {
    /// su(p,q) ⊕ su(r,s) ⊕ u(1) for sl(p+q | r+s).
    Su { p: usize, q: usize, r: usize, s: usize },
    /// so(2, ·) ⊕ sp(n, R) for B(m,n) with m ≥ 1, D(m,n) and C(n).
    So2Sp,
    /// so*(2m) ⊕ sp(n, R) for D(m,n).
    SoStarSp,
    /// sp(n, R) for B(0,n).
    Sp,
    /// sl(2,R)³ for D(2,1;α).
    Sl2Cubed,
    /// sl(2,R) ⊕ su(2) ⊕ su(2) for D(2,1;α).
    Sl2Su2Su2,
    /// sl(2,R) ⊕ so(7) for F(4).
    Sl2So7,
    /// su(2) ⊕ so(2,5) for F(4).
    Su2So25,
    /// sl(2,R) ⊕ compact G2 for G(3).
    Sl2G2,
}

impl RealForm {
    pub fn tag(&self) -> &'static str {
        match self {
            RealForm::Su { .. } => "su",
            RealForm::So2Sp => "so2-sp",
            RealForm::SoStarSp => "sostar-sp",
            RealForm::Sp => "sp",
            RealForm::Sl2Cubed => "sl2x3",
            RealForm::Sl2Su2Su2 => "su2x2-sl2",
            RealForm::Sl2So7 => "sl2-so7",
            RealForm::Su2So25 => "su2-so25",
            RealForm::Sl2G2 => "sl2-g2",
        }
    }

    /// Real forms available for a family, as command-line tags.
    pub fn tags_for(family: &Family) -> &'static [&'static str] {
        match family {
            Family::A { .. } => &["su"],
            Family::B { m: 0, .. } => &["sp"],
            Family::B { .. } | Family::C { .. } => &["so2-sp"],
            Family::D { .. } => &["so2-sp", "sostar-sp"],
            Family::D21 { .. } => &["sl2x3", "su2x2-sl2"],
            Family::F4 => &["sl2-so7", "su2-so25"],
            Family::G3 => &["sl2-g2"],
        }
    }
}

#[derive(Clone, Debug)]
pub struct HermitianPair {
    pub sys: SuperRootSystem,
    pub form: RealForm,
    /// Compact roots, closed under negation. All are even.
    pub compact: BTreeSet<Weight>,
}

/// Builds the pair for a real form tag. `split` is `(p, q, r, s)` and is
/// required for type A, where `p + q = m + 1` and `r + s = n + 1`.
pub fn build_hermitian_pair(family: &Family, tag: &str, split: Option<[usize; 4]>) -> Result<HermitianPair> {
    let sys = crate::rootsys::build_root_system(family)?;
    let illegal = || Error::IllegalRealForm { family: family.to_string(), form: tag.to_string() };
    if !RealForm::tags_for(family).contains(&tag) {
        return Err(illegal());
    }
    let (a, _) = family.split();
    let form = match tag {
        "su" => {
            let [p, q, r, s] = split.ok_or_else(|| Error::InvalidFamily("su needs p,q,r,s".into()))?;
            let (m1, n1) = family.split();
            if p + q != m1 || r + s != n1 {
                return Err(Error::InvalidFamily(format!(
                    "p+q must be {m1} and r+s must be {n1}, got {p},{q},{r},{s}"
                )));
            }
            RealForm::Su { p, q, r, s }
        }
        "so2-sp" => RealForm::So2Sp,
        "sostar-sp" => RealForm::SoStarSp,
        "sp" => RealForm::Sp,
        "sl2x3" => RealForm::Sl2Cubed,
        "su2x2-sl2" => RealForm::Sl2Su2Su2,
        "sl2-so7" => RealForm::Sl2So7,
        "su2-so25" => RealForm::Su2So25,
        "sl2-g2" => RealForm::Sl2G2,
        _ => return Err(illegal()),
    };
    let eps_sum = |w: &Weight| -> Rational { w.0[..a].iter().sum() };
    let del_sum = |w: &Weight| -> Rational { w.0[a..].iter().sum() };
    let is_compact = |w: &Weight| -> bool {
        match &form {
            RealForm::Su { p, r, .. } => {
                let support: Vec<usize> = (0..w.dim()).filter(|&i| !w.0[i].is_zero()).collect();
                let (i, j) = (support[0], support[1]);
                if i < a && j < a {
                    (i < *p) == (j < *p)
                } else if i >= a && j >= a {
                    (i - a < *r) == (j - a < *r)
                } else {
                    false
                }
            }
            RealForm::So2Sp => match family {
                Family::C { .. } => del_sum(w).is_zero(),
                _ => w.0[0].is_zero() && del_sum(w).is_zero(),
            },
            RealForm::SoStarSp => eps_sum(w).is_zero() && del_sum(w).is_zero(),
            RealForm::Sp => del_sum(w).is_zero(),
            RealForm::Sl2Cubed => false,
            RealForm::Sl2Su2Su2 => w.0[0].is_zero(),
            RealForm::Sl2So7 | RealForm::Sl2G2 => w.0[a].is_zero(),
            RealForm::Su2So25 => w.0[a].is_zero() && w.0[0].is_zero(),
        }
    };
    let compact = sys.even().filter(|r| is_compact(&r.weight)).map(|r| r.weight.clone()).collect();
    Ok(HermitianPair { sys, form, compact })
}

/// The split of a positive system into compact, non-compact even and odd
/// roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    #[serde(rename = "P_k")]
    pub p_k: Vec<Weight>,
    #[serde(rename = "P_n0")]
    pub p_n0: Vec<Weight>,
    #[serde(rename = "P_n1")]
    pub p_n1: Vec<Weight>,
}

impl HermitianPair {
    pub fn family(&self) -> &Family {
        &self.sys.family
    }

    pub fn is_compact(&self, w: &Weight) -> bool {
        self.compact.contains(w)
    }

    pub fn decompose(&self, p: &PositiveSystem) -> Decomposition {
        let mut d = Decomposition { p_k: vec![], p_n0: vec![], p_n1: vec![] };
        for r in &p.roots {
            if r.is_odd() {
                d.p_n1.push(r.weight.clone());
            } else if self.is_compact(&r.weight) {
                d.p_k.push(r.weight.clone());
            } else {
                d.p_n0.push(r.weight.clone());
            }
        }
        d
    }

    /// Non-compact positive roots `P_n = P_{n,0} ⊔ P_{n,1}`.
    pub fn noncompact(&self, p: &PositiveSystem) -> Vec<Weight> {
        p.roots.iter().filter(|r| !self.is_compact(&r.weight)).map(|r| r.weight.clone()).collect()
    }

    /// Simple roots of the compact positive system `P_k`.
    pub fn compact_simple(&self, p: &PositiveSystem) -> Vec<Weight> {
        simple_roots(&self.decompose(p).p_k)
    }

    /// The Weyl group of the compact subalgebra.
    pub fn compact_weyl_group(&self, p: &PositiveSystem) -> WeylGroup {
        WeylGroup::generated_by(&self.sys, &self.compact_simple(p))
    }

    /// The simple system from which the admissible system of this pair is
    /// built. For `su(2) ⊕ so(2,5)` the distinguished simple system is moved
    /// by the Weyl group element taking its even simple roots to
    /// `{ε₃, ε₁−ε₂, ε₂−ε₃, δ}`.
    pub fn admissible_simple_system(&self) -> Result<Vec<Weight>> {
        let pi = standard_simple_system(self.family());
        if self.form != RealForm::Su2So25 {
            return Ok(pi);
        }
        let p = PositiveSystem::from_simple(&self.sys, &pi)?;
        let pi0 = simple_roots(&p.even());
        let target: Vec<Weight> = [[0, 0, 1, 0], [1, -1, 0, 0], [0, 1, -1, 0], [0, 0, 0, 1]]
            .iter()
            .map(|r| Weight::from_ints(r))
            .collect();
        let w = WeylGroup::generated_by(&self.sys, &pi0);
        let idx = w
            .find_mapping(&pi0, &target)
            .ok_or_else(|| Error::Internal("no Weyl group element with the required image".into()))?;
        let mut out: Vec<Weight> = pi.iter().map(|x| w.act(idx, x)).collect();
        out.sort();
        Ok(out)
    }

    pub fn constructed_system(&self) -> Result<PositiveSystem> {
        PositiveSystem::from_simple(&self.sys, &self.admissible_simple_system()?)
    }
}

/// Root-level admissibility: compact roots move non-compact positive roots
/// to non-compact positive roots, and non-compact positive roots add up to
/// non-compact positive roots.
pub fn is_admissible(pair: &HermitianPair, p: &PositiveSystem) -> bool {
    let nc = pair.noncompact(p);
    let ok = |s: &Weight| !pair.sys.contains(s) || (p.contains(s) && !pair.is_compact(s));
    for a in &pair.compact {
        for b in &nc {
            if !ok(&(a + b)) {
                return false;
            }
        }
    }
    for b in &nc {
        for c in &nc {
            if !ok(&(b + c)) {
                return false;
            }
        }
    }
    true
}

/// Admissibility read off the brackets of a matrix realization:
/// `[𝔨, 𝔭⁺] ⊂ 𝔭⁺` and `[𝔭⁺, 𝔭⁺] ⊂ 𝔭⁺`, where `𝔭⁺` is spanned by the root
/// vectors of `P_n`. The structure constants must belong to `pair.sys`.
pub fn is_admissible_by_brackets(sc: &crate::realize::StructureConstants, pair: &HermitianPair, p: &PositiveSystem) -> bool {
    let nc: Vec<usize> = pair.noncompact(p).iter().filter_map(|w| sc.root_index(w)).collect();
    let ks: Vec<usize> = pair.compact.iter().filter_map(|w| sc.root_index(w)).collect();
    let inside: BTreeSet<usize> = nc.iter().copied().collect();
    let closed = |a: usize, b: usize| sc.bracket(a, b).iter().all(|(i, _)| inside.contains(i));
    ks.iter().chain(&nc).all(|&a| nc.iter().all(|&b| closed(a, b)))
}

pub fn enumerate_admissible(pair: &HermitianPair, budget: usize) -> Result<Vec<PositiveSystem>> {
    Ok(enumerate_positive_systems(&pair.sys, budget)?
        .into_iter()
        .filter(|p| is_admissible(pair, p))
        .collect())
}

/// `P⁻ = P_k ⊔ −P_n`.
pub fn flip_noncompact(pair: &HermitianPair, p: &PositiveSystem) -> Result<PositiveSystem> {
    if !is_admissible(pair, p) {
        return Err(Error::NotAdmissible);
    }
    let mut roots: Vec<Root> =
        p.roots.iter().map(|r| if pair.is_compact(&r.weight) { r.clone() } else { r.neg() }).collect();
    roots.sort();
    Ok(PositiveSystem { roots })
}

/// Weights `μ ∈ P_{n,1}` with `μ + α ∉ P_{n,1}` for every `α ∈ P_k`: the
/// highest weights of the compact-module components of the odd part.
pub fn p1_highest_weights(pair: &HermitianPair, p: &PositiveSystem) -> Vec<Weight> {
    let d = pair.decompose(p);
    let odd: BTreeSet<&Weight> = d.p_n1.iter().collect();
    d.p_n1
        .iter()
        .filter(|mu| d.p_k.iter().all(|a| !odd.contains(&(*mu + a))))
        .cloned()
        .collect()
}

pub fn count_p1_components(pair: &HermitianPair, p: &PositiveSystem) -> usize {
    p1_highest_weights(pair, p).len()
}

/// Highest weights of the compact-module components of `P_{n,0}`.
pub fn p0_highest_weights(pair: &HermitianPair, p: &PositiveSystem) -> Vec<Weight> {
    let d = pair.decompose(p);
    let set: BTreeSet<&Weight> = d.p_n0.iter().collect();
    d.p_n0
        .iter()
        .filter(|mu| d.p_k.iter().all(|a| !set.contains(&(*mu + a))))
        .cloned()
        .collect()
}

/// Facts relating the simple roots of `P`, of its even part `P₀`, and of
/// `P₀⁻ = P_k ⊔ −P_{n,0}`.
#[derive(Clone, Debug, Serialize)]
pub struct SimpleSystemFacts {
    pub simple: Vec<Weight>,
    pub even_simple: Vec<Weight>,
    /// Highest weights `β′` of the compact-module components of `P_{n,0}`.
    pub highest_noncompact: Vec<Weight>,
    /// Compact simple roots of `P` and of `P₀` agree.
    pub same_compact_simple: bool,
    /// The simple system of `P₀⁻` is the compact simple roots of `P₀`
    /// together with the `−β′`.
    pub flipped_even_simple: bool,
    /// Every `β′` is a non-compact simple root of `P₀` plus a nonnegative
    /// integral combination of compact simple roots, matched one to one.
    pub highest_from_simple: bool,
}

pub fn simple_system_facts(pair: &HermitianPair, p: &PositiveSystem) -> Result<SimpleSystemFacts> {
    if !is_admissible(pair, p) {
        return Err(Error::NotAdmissible);
    }
    let simple = p.simple_roots();
    let even = p.even();
    let even_simple = simple_roots(&even);
    let compact_of = |v: &[Weight]| -> BTreeSet<Weight> { v.iter().filter(|w| pair.is_compact(w)).cloned().collect() };
    let a = compact_of(&simple);
    let a0 = compact_of(&even_simple);
    let same_compact_simple = a == a0;

    let betas = p0_highest_weights(pair, p);
    let d = pair.decompose(p);
    let minus: Vec<Weight> = d.p_k.iter().cloned().chain(d.p_n0.iter().map(|w| -w)).collect();
    let expected: BTreeSet<Weight> = a0.iter().cloned().chain(betas.iter().map(|w| -w)).collect();
    let got: BTreeSet<Weight> = simple_roots(&minus).into_iter().collect();
    let flipped_even_simple = expected == got;

    let nc_simple: Vec<Weight> = even_simple.iter().filter(|w| !pair.is_compact(w)).cloned().collect();
    let alphas: Vec<Weight> = a0.iter().cloned().collect();
    let in_cone = |v: &Weight| -> bool {
        if v.is_zero() {
            return true;
        }
        if alphas.is_empty() {
            return false;
        }
        match simple_coefficients(&alphas, v) {
            Some(c) => c.iter().all(|x| x.is_integer() && !x.is_negative()),
            None => false,
        }
    };
    let mut used = vec![false; nc_simple.len()];
    let mut highest_from_simple = betas.len() == nc_simple.len();
    for b in &betas {
        match (0..nc_simple.len()).find(|&i| !used[i] && in_cone(&(b - &nc_simple[i]))) {
            Some(i) => used[i] = true,
            None => highest_from_simple = false,
        }
    }
    Ok(SimpleSystemFacts {
        simple,
        even_simple,
        highest_noncompact: betas,
        same_compact_simple,
        flipped_even_simple,
        highest_from_simple,
    })
}

/// The record printed by the `admissible` and `components` commands.
#[derive(Clone, Debug, Serialize)]
pub struct PairReport {
    #[serde(flatten)]
    pub parts: Decomposition,
    pub admissible: bool,
    pub components_p1: usize,
}

pub fn pair_report(pair: &HermitianPair, p: &PositiveSystem) -> PairReport {
    PairReport {
        parts: pair.decompose(p),
        admissible: is_admissible(pair, p),
        components_p1: count_p1_components(pair, p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;

    fn w(xs: &[i64]) -> Weight {
        Weight::from_ints(xs)
    }

    #[test]
    fn a10_standard() {
        let s = build_root_system(&Family::a(1, 0).unwrap()).unwrap();
        let p = [w(&[1, -1, 0]), w(&[1, 0, -1]), w(&[0, 1, -1])];
        assert!(is_abstract_positive(&s, &p).unwrap());
        let all: Vec<Weight> = s.roots.iter().map(|r| r.weight.clone()).collect();
        assert!(!is_abstract_positive(&s, &all).unwrap());
        assert!(!is_abstract_positive(&s, &p[..2]).unwrap());
        assert!(is_abstract_positive(&s, &[w(&[1, 0, 0])]).is_err());
        let ps = PositiveSystem::from_weights(&s, &p).unwrap();
        assert_eq!(ps.simple_roots(), vec![w(&[0, 1, -1]), w(&[1, -1, 0])]);
        assert_eq!(ps, standard_positive_system(&s).unwrap());
        let l = positivity_functional(&s, &ps).unwrap();
        assert!(p.iter().all(|a| dot(&l, a).is_positive()));
        assert!(p.iter().all(|a| dot(&l, &-a).is_negative()));
        let given = w(&[2, 1, 0]);
        assert!(p.iter().all(|a| dot(&given, a).is_positive()));
    }

    #[test]
    fn b01_and_f4_simple() {
        let s = build_root_system(&Family::b(0, 1).unwrap()).unwrap();
        let p = standard_positive_system(&s).unwrap();
        assert_eq!(p.weights(), vec![w(&[1]), w(&[2])]);
        assert_eq!(p.simple_roots(), vec![w(&[1])]);
        let f = build_root_system(&Family::F4).unwrap();
        let pf = standard_positive_system(&f).unwrap();
        let mut expect = standard_simple_system(&Family::F4);
        expect.sort();
        assert_eq!(pf.simple_roots(), expect);
        assert!(regenerates(&expect, &pf.weights()));
    }

    #[test]
    fn enumeration_matches_bruteforce() {
        for f in [Family::a(1, 0), Family::b(0, 1), Family::b(1, 1), Family::c(2), Family::a(0, 2)] {
            let s = build_root_system(&f.unwrap()).unwrap();
            let bfs = enumerate_positive_systems(&s, 10_000).unwrap();
            let brute = abstract_positive_bruteforce(&s);
            assert_eq!(bfs, brute, "{}", s.family);
            for p in &bfs {
                let l = positivity_functional(&s, p).unwrap();
                assert_eq!(&PositiveSystem::from_functional(&s, &l).unwrap(), p);
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let s = build_root_system(&Family::a(2, 1).unwrap()).unwrap();
        assert_eq!(enumerate_positive_systems(&s, 5), Err(Error::BudgetExceeded(5)));
    }

    #[test]
    fn pairs_and_admissibility() {
        let pair = build_hermitian_pair(&Family::b(2, 1).unwrap(), "so2-sp", None).unwrap();
        let expect: BTreeSet<Weight> = [w(&[0, 1, 0]), w(&[0, -1, 0])].into_iter().collect();
        assert_eq!(pair.compact, expect);
        let p = pair.constructed_system().unwrap();
        assert!(is_admissible(&pair, &p));
        assert_eq!(count_p1_components(&pair, &p), 3);
        let facts = simple_system_facts(&pair, &p).unwrap();
        assert!(facts.same_compact_simple && facts.flipped_even_simple && facts.highest_from_simple);

        let d = build_hermitian_pair(&Family::d21(q(1, 2)).unwrap(), "sl2x3", None).unwrap();
        assert!(d.compact.is_empty());
        assert!(build_hermitian_pair(&Family::b(2, 1).unwrap(), "sp", None).is_err());
        assert!(build_hermitian_pair(&Family::a(1, 0).unwrap(), "su", Some([1, 1, 2, 0])).is_err());

        let f = build_hermitian_pair(&Family::F4, "su2-so25", None).unwrap();
        let untransformed = standard_positive_system(&f.sys).unwrap();
        assert!(!is_admissible(&f, &untransformed));
        let mut pi = f.admissible_simple_system().unwrap();
        pi.sort();
        let mut expect = vec![
            w(&[0, 0, 1, 0]),
            w(&[1, -1, 0, 0]),
            w(&[0, 1, -1, 0]),
            Weight(vec![q(-1, 2), q(-1, 2), q(-1, 2), q(1, 2)]),
        ];
        expect.sort();
        assert_eq!(pi, expect);
        assert!(is_admissible(&f, &f.constructed_system().unwrap()));
    }

    #[test]
    fn flips() {
        let pair = build_hermitian_pair(&Family::b(0, 1).unwrap(), "sp", None).unwrap();
        let p = pair.constructed_system().unwrap();
        let m = flip_noncompact(&pair, &p).unwrap();
        assert_eq!(m.weights(), vec![w(&[-2]), w(&[-1])]);
        assert_eq!(flip_noncompact(&pair, &m).unwrap(), p);

        let pair = build_hermitian_pair(&Family::a(1, 0).unwrap(), "su", Some([1, 1, 1, 0])).unwrap();
        let all = enumerate_admissible(&pair, 1000).unwrap();
        assert!(!all.is_empty());
        for p in &all {
            let m = flip_noncompact(&pair, p).unwrap();
            assert!(is_abstract_positive(&pair.sys, &m.weights()).unwrap());
            assert!(all.contains(&m));
        }
    }
}
