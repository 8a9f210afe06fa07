//! Root systems of the basic classical Lie superalgebras.
//!
//! Every family is described in a fixed coordinate basis of the dual Cartan
//! subalgebra:
//!
//! | family | basis | form |
//! |---|---|---|
//! | `A(m,n)` = sl(m+1\|n+1) | ε₁..ε_{m+1}, δ₁..δ_{n+1} | (ε,ε)=1, (δ,δ)=−1 |
//! | `B(m,n)` = osp(2m+1\|2n) | ε₁..ε_m, δ₁..δ_n | (ε,ε)=1, (δ,δ)=−1 |
//! | `C(n)` = osp(2\|2n−2) | ε, δ₁..δ_{n−1} | (ε,ε)=1, (δ,δ)=−1 |
//! | `D(m,n)` = osp(2m\|2n) | ε₁..ε_m, δ₁..δ_n | (ε,ε)=1, (δ,δ)=−1 |
//! | `D(2,1;α)` | ε₁, ε₂, ε₃ | diag(−(1+α), 1, α) |
//! | `F(4)` | ε₁, ε₂, ε₃, δ | diag(1, 1, 1, −3) |
//! | `G(3)` | ε₁, ε₂, δ | (εᵢ,εᵢ)=2, (ε₁,ε₂)=−1, (δ,δ)=−2 |
//!
//! For `G(3)` the third functional ε₃ = −ε₁−ε₂ is eliminated.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_rational, int, parse_rational, q, Rational, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// sl(m+1|n+1), m ≠ n.
    A { m: usize, n: usize },
    /// osp(2m+1|2n); `m == 0` is osp(1|2n).
    B { m: usize, n: usize },
    /// osp(2|2n−2), n ≥ 2.
    C { n: usize },
    /// osp(2m|2n), m ≥ 2.
    D { m: usize, n: usize },
    D21 { alpha: Rational },
    F4,
    G3,
}

impl Family {
    pub fn a(m: usize, n: usize) -> Result<Self> {
        Family::A { m, n }.validated()
    }

    pub fn b(m: usize, n: usize) -> Result<Self> {
        Family::B { m, n }.validated()
    }

    pub fn c(n: usize) -> Result<Self> {
        Family::C { n }.validated()
    }

    pub fn d(m: usize, n: usize) -> Result<Self> {
        Family::D { m, n }.validated()
    }

    pub fn d21(alpha: Rational) -> Result<Self> {
        Family::D21 { alpha }.validated()
    }

    pub fn validated(self) -> Result<Self> {
        let bad = |msg: &str| Err(Error::InvalidFamily(format!("{self}: {msg}")));
        match &self {
            Family::A { m, n } if m == n => bad("A(n,n) is not basic classical"),
            Family::B { n: 0, .. } => bad("n must be at least 1"),
            Family::C { n } if *n < 2 => bad("n must be at least 2"),
            Family::D { m, .. } if *m < 2 => bad("m must be at least 2"),
            Family::D { n: 0, .. } => bad("n must be at least 1"),
            Family::D21 { alpha } if alpha.is_zero() || *alpha == int(-1) => {
                bad("alpha must not be 0 or -1")
            }
            _ => Ok(self),
        }
    }

    /// Family letter as used on the command line.
    pub fn tag(&self) -> &'static str {
        match self {
            Family::A { .. } => "A",
            Family::B { .. } => "B",
            Family::C { .. } => "C",
            Family::D { .. } => "D",
            Family::D21 { .. } => "D21a",
            Family::F4 => "F4",
            Family::G3 => "G3",
        }
    }

    pub fn params(&self) -> Vec<usize> {
        match *self {
            Family::A { m, n } | Family::B { m, n } | Family::D { m, n } => vec![m, n],
            Family::C { n } => vec![n],
            _ => vec![],
        }
    }

    pub fn alpha(&self) -> Option<&Rational> {
        match self {
            Family::D21 { alpha } => Some(alpha),
            _ => None,
        }
    }

    /// Number of ε-type and δ-type coordinates.
    pub fn split(&self) -> (usize, usize) {
        match *self {
            Family::A { m, n } => (m + 1, n + 1),
            Family::B { m, n } | Family::D { m, n } => (m, n),
            Family::C { n } => (1, n - 1),
            Family::D21 { .. } => (3, 0),
            Family::F4 => (3, 1),
            Family::G3 => (2, 1),
        }
    }

    pub fn dim(&self) -> usize {
        let (a, b) = self.split();
        a + b
    }

    /// Dimension of the Cartan subalgebra. For type A the coordinates are
    /// those of gl(m+1|n+1), and `Σε − Σδ` vanishes on the Cartan subalgebra
    /// of sl(m+1|n+1); it is orthogonal to every root.
    pub fn cartan_rank(&self) -> usize {
        match self {
            Family::A { .. } => self.dim() - 1,
            _ => self.dim(),
        }
    }

    pub fn basis_labels(&self) -> Vec<String> {
        let (a, b) = self.split();
        match self {
            Family::C { .. } => std::iter::once("e".to_string())
                .chain((1..=b).map(|j| format!("d{j}")))
                .collect(),
            Family::F4 | Family::G3 => (1..=a)
                .map(|i| format!("e{i}"))
                .chain(std::iter::once("d".to_string()))
                .collect(),
            _ => (1..=a)
                .map(|i| format!("e{i}"))
                .chain((1..=b).map(|j| format!("d{j}")))
                .collect(),
        }
    }

    /// Gram matrix of the invariant form in the family basis.
    pub fn gram(&self) -> Vec<Vec<Rational>> {
        let d = self.dim();
        let mut g = vec![vec![Rational::zero(); d]; d];
        match self {
            Family::A { .. } | Family::B { .. } | Family::C { .. } | Family::D { .. } => {
                let (a, _) = self.split();
                for (i, row) in g.iter_mut().enumerate() {
                    row[i] = if i < a { int(1) } else { int(-1) };
                }
            }
            Family::D21 { alpha } => {
                g[0][0] = -(Rational::one() + alpha);
                g[1][1] = int(1);
                g[2][2] = alpha.clone();
            }
            Family::F4 => {
                for (i, row) in g.iter_mut().enumerate().take(3) {
                    row[i] = int(1);
                }
                g[3][3] = int(-3);
            }
            Family::G3 => {
                g[0][0] = int(2);
                g[1][1] = int(2);
                g[0][1] = int(-1);
                g[1][0] = int(-1);
                g[2][2] = int(-2);
            }
        }
        g
    }

    /// Brings user input into the family basis. For `G(3)` a weight may be
    /// given with four coordinates (ε₁, ε₂, ε₃, δ); ε₃ is then eliminated.
    pub fn normalize_weight(&self, w: Weight) -> Result<Weight> {
        if *self == Family::G3 && w.dim() == 4 {
            let c = &w.0;
            return Ok(Weight(vec![&c[0] - &c[2], &c[1] - &c[2], c[3].clone()]));
        }
        if w.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: w.dim() });
        }
        Ok(w)
    }

    /// Human readable form of a weight, e.g. `e1-d1` or `1/2e1+1/2d`.
    pub fn label_weight(&self, w: &Weight) -> String {
        let labels = self.basis_labels();
        let mut out = String::new();
        for (c, l) in w.0.iter().zip(&labels) {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let a = c.abs();
            if !a.is_one() {
                out.push_str(&format_rational(&a));
            }
            out.push_str(l);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// True for the families that come with a supermatrix realization.
    pub fn is_classical(&self) -> bool {
        matches!(self, Family::A { .. } | Family::B { .. } | Family::C { .. } | Family::D { .. })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A { m, n } => write!(f, "A({m},{n})"),
            Family::B { m, n } => write!(f, "B({m},{n})"),
            Family::C { n } => write!(f, "C({n})"),
            Family::D { m, n } => write!(f, "D({m},{n})"),
            Family::D21 { alpha } => write!(f, "D(2,1;{})", format_rational(alpha)),
            Family::F4 => write!(f, "F(4)"),
            Family::G3 => write!(f, "G(3)"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// Sign `(-1)^{|x||y|}`.
    pub fn sign(self, other: Parity) -> i64 {
        if self.is_odd() && other.is_odd() {
            -1
        } else {
            1
        }
    }

    pub fn add(self, other: Parity) -> Parity {
        if self.is_odd() != other.is_odd() {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    #[serde(rename = "coords")]
    pub weight: Weight,
    pub parity: Parity,
}

impl Root {
    pub fn new(weight: Weight, parity: Parity) -> Self {
        Root { weight, parity }
    }

    pub fn is_odd(&self) -> bool {
        self.parity.is_odd()
    }

    pub fn neg(&self) -> Root {
        Root { weight: -&self.weight, parity: self.parity }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperRootSystem {
    pub family: Family,
    pub gram: Vec<Vec<Rational>>,
    /// Sorted lexicographically by coordinates.
    pub roots: Vec<Root>,
}

fn signed_pairs(d: usize, i: usize, j: usize, si: i64, sj: i64) -> Weight {
    let mut w = Weight::zero(d);
    w.0[i] = int(si);
    w.0[j] = int(sj);
    w
}

fn single(d: usize, i: usize, c: Rational) -> Weight {
    let mut w = Weight::zero(d);
    w.0[i] = c;
    w
}

pub fn build_root_system(family: &Family) -> Result<SuperRootSystem> {
    let family = family.clone().validated()?;
    let d = family.dim();
    let (a, b) = family.split();
    let mut even: BTreeSet<Weight> = BTreeSet::new();
    let mut odd: BTreeSet<Weight> = BTreeSet::new();
    let eps = |i: usize| i;
    let del = |j: usize| a + j;
    // ±x_i ± x_j over an index range, plus optional ±x_i and ±2x_i.
    let orthogonal = |set: &mut BTreeSet<Weight>, idx: &[usize], short: bool, long: bool| {
        for (k, &i) in idx.iter().enumerate() {
            for &j in &idx[k + 1..] {
                for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                    set.insert(signed_pairs(d, i, j, si, sj));
                }
            }
            for s in [1, -1] {
                if short {
                    set.insert(single(d, i, int(s)));
                }
                if long {
                    set.insert(single(d, i, int(2 * s)));
                }
            }
        }
    };
    let es: Vec<usize> = (0..a).map(eps).collect();
    let ds: Vec<usize> = (0..b).map(del).collect();
    match &family {
        Family::A { .. } => {
            for block in [&es, &ds] {
                for &i in block.iter() {
                    for &j in block.iter() {
                        if i != j {
                            even.insert(signed_pairs(d, i, j, 1, -1));
                        }
                    }
                }
            }
            for &i in &es {
                for &j in &ds {
                    odd.insert(signed_pairs(d, i, j, 1, -1));
                    odd.insert(signed_pairs(d, i, j, -1, 1));
                }
            }
        }
        Family::B { .. } | Family::C { .. } | Family::D { .. } => {
            let b_type = matches!(family, Family::B { .. });
            if !matches!(family, Family::C { .. }) {
                orthogonal(&mut even, &es, b_type, false);
            }
            orthogonal(&mut even, &ds, false, true);
            for &i in &es {
                for &j in &ds {
                    for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        odd.insert(signed_pairs(d, i, j, si, sj));
                    }
                }
            }
            if b_type {
                for &j in &ds {
                    odd.insert(single(d, j, int(1)));
                    odd.insert(single(d, j, int(-1)));
                }
            }
        }
        Family::D21 { .. } => {
            for i in 0..3 {
                even.insert(single(d, i, int(2)));
                even.insert(single(d, i, int(-2)));
            }
            for s in 0..8 {
                let w = Weight((0..3).map(|i| int(if s >> i & 1 == 0 { 1 } else { -1 })).collect());
                odd.insert(w);
            }
        }
        Family::F4 => {
            orthogonal(&mut even, &es, true, false);
            even.insert(single(d, 3, int(1)));
            even.insert(single(d, 3, int(-1)));
            for s in 0..16 {
                let w = Weight((0..4).map(|i| q(if s >> i & 1 == 0 { 1 } else { -1 }, 2)).collect());
                odd.insert(w);
            }
        }
        Family::G3 => {
            // Short and long roots of G2 in the (ε₁, ε₂) basis, with ε₃ = −ε₁−ε₂.
            let e = [
                Weight::from_ints(&[1, 0, 0]),
                Weight::from_ints(&[0, 1, 0]),
                Weight::from_ints(&[-1, -1, 0]),
            ];
            let dl = Weight::from_ints(&[0, 0, 1]);
            for i in 0..3 {
                even.insert(e[i].clone());
                even.insert(-&e[i]);
                for j in 0..3 {
                    if i != j {
                        even.insert(&e[i] - &e[j]);
                    }
                }
                odd.insert(&dl + &e[i]);
                odd.insert(&dl - &e[i]);
                odd.insert(&e[i] - &dl);
                odd.insert(-&(&dl + &e[i]));
            }
            even.insert(dl.scale(&int(2)));
            even.insert(dl.scale(&int(-2)));
            odd.insert(dl.clone());
            odd.insert(-&dl);
        }
    }
    let mut roots: Vec<Root> = even
        .into_iter()
        .map(|w| Root::new(w, Parity::Even))
        .chain(odd.into_iter().map(|w| Root::new(w, Parity::Odd)))
        .collect();
    roots.sort();
    Ok(SuperRootSystem { gram: family.gram(), family, roots })
}

impl SuperRootSystem {
    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    pub fn even(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| !r.is_odd())
    }

    pub fn odd(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.is_odd())
    }

    pub fn root(&self, w: &Weight) -> Option<&Root> {
        self.roots
            .binary_search_by(|r| r.weight.cmp(w))
            .ok()
            .map(|i| &self.roots[i])
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.root(w).is_some()
    }

    /// Looks up a weight, failing with `NotARoot` when it is not in Δ.
    pub fn expect_root(&self, w: &Weight) -> Result<&Root> {
        self.root(w).ok_or_else(|| Error::NotARoot(self.family.label_weight(w)))
    }

    /// Invariant form without dimension checks.
    pub fn form(&self, x: &Weight, y: &Weight) -> Rational {
        let mut s = Rational::zero();
        for (i, row) in self.gram.iter().enumerate() {
            if x.0[i].is_zero() {
                continue;
            }
            for (j, g) in row.iter().enumerate() {
                if !g.is_zero() && !y.0[j].is_zero() {
                    s += &x.0[i] * g * &y.0[j];
                }
            }
        }
        s
    }

    pub fn pairing(&self, x: &Weight, y: &Weight) -> Result<Rational> {
        for w in [x, y] {
            if w.dim() != self.dim() {
                return Err(Error::DimensionMismatch { expected: self.dim(), got: w.dim() });
            }
        }
        Ok(self.form(x, y))
    }

    /// `λ(H_γ)`: `2(λ,γ)/(γ,γ)`, or `(λ,γ)` when γ is isotropic. Unchecked.
    pub fn coroot(&self, lambda: &Weight, gamma: &Weight) -> Rational {
        let gg = self.form(gamma, gamma);
        let lg = self.form(lambda, gamma);
        if gg.is_zero() {
            lg
        } else {
            int(2) * lg / gg
        }
    }

    pub fn coroot_pair(&self, lambda: &Weight, gamma: &Weight) -> Result<Rational> {
        if lambda.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: lambda.dim() });
        }
        self.expect_root(gamma)?;
        Ok(self.coroot(lambda, gamma))
    }

    pub fn is_isotropic(&self, gamma: &Weight) -> bool {
        self.form(gamma, gamma).is_zero()
    }

    /// Isotropy decided from the root set alone: odd and `2γ ∉ Δ`.
    pub fn is_isotropic_combinatorial(&self, gamma: &Root) -> bool {
        gamma.is_odd() && !self.contains(&gamma.weight.scale(&int(2)))
    }

    pub fn isotropic_roots(&self) -> Vec<&Root> {
        self.odd().filter(|r| self.is_isotropic(&r.weight)).collect()
    }

    pub fn gram_det(&self) -> Rational {
        crate::linalg::det(&self.gram)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(RootSystemJson::from(self)).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let j: RootSystemJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        j.try_into()
    }
}

#[derive(Serialize, Deserialize)]
struct RootSystemJson {
    family: String,
    params: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    alpha: Option<String>,
    gram: Vec<Vec<String>>,
    roots: Vec<Root>,
}

impl From<&SuperRootSystem> for RootSystemJson {
    fn from(s: &SuperRootSystem) -> Self {
        RootSystemJson {
            family: s.family.tag().to_string(),
            params: s.family.params(),
            alpha: s.family.alpha().map(format_rational),
            gram: s.gram.iter().map(|r| r.iter().map(format_rational).collect()).collect(),
            roots: s.roots.clone(),
        }
    }
}

impl TryFrom<RootSystemJson> for SuperRootSystem {
    type Error = Error;

    fn try_from(j: RootSystemJson) -> Result<Self> {
        let alpha = j.alpha.as_deref().map(parse_rational).transpose()?;
        let family = parse_family(&j.family, &j.params, alpha)?;
        let gram = j
            .gram
            .iter()
            .map(|r| r.iter().map(|x| parse_rational(x)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let mut roots = j.roots;
        roots.sort();
        Ok(SuperRootSystem { family, gram, roots })
    }
}

/// Builds a family from its command-line tag and parameters.
pub fn parse_family(tag: &str, params: &[usize], alpha: Option<Rational>) -> Result<Family> {
    let need = |k: usize| {
        if params.len() == k {
            Ok(())
        } else {
            Err(Error::InvalidFamily(format!("{tag} expects {k} parameters, got {}", params.len())))
        }
    };
    match tag {
        "A" => need(2).and_then(|_| Family::a(params[0], params[1])),
        "B" => need(2).and_then(|_| Family::b(params[0], params[1])),
        "C" => need(1).and_then(|_| Family::c(params[0])),
        "D" => need(2).and_then(|_| Family::d(params[0], params[1])),
        "D21" | "D21a" => {
            let a = alpha.ok_or_else(|| Error::InvalidFamily("D(2,1;alpha) needs alpha".into()))?;
            Family::d21(a)
        }
        "F4" => Ok(Family::F4),
        "G3" => Ok(Family::G3),
        other => Err(Error::InvalidFamily(format!("unknown family `{other}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(xs: &[i64]) -> Weight {
        Weight::from_ints(xs)
    }

    fn small_families() -> Vec<Family> {
        let mut v = Vec::new();
        for m in 0..=3 {
            for n in 0..=3 {
                if m != n {
                    v.push(Family::A { m, n });
                }
                if n >= 1 {
                    v.push(Family::B { m, n });
                    if m >= 2 {
                        v.push(Family::D { m, n });
                    }
                }
            }
        }
        for n in 2..=4 {
            v.push(Family::C { n });
        }
        for alpha in [q(1, 2), int(1), int(-3), q(2, 7)] {
            v.push(Family::D21 { alpha });
        }
        v.push(Family::F4);
        v.push(Family::G3);
        v
    }

    #[test]
    fn a10_roots() {
        let s = build_root_system(&Family::a(1, 0).unwrap()).unwrap();
        let even: Vec<_> = s.even().map(|r| r.weight.clone()).collect();
        assert_eq!(even, vec![w(&[-1, 1, 0]), w(&[1, -1, 0])]);
        let odd: BTreeSet<_> = s.odd().map(|r| r.weight.clone()).collect();
        let expect: BTreeSet<_> =
            [w(&[1, 0, -1]), w(&[-1, 0, 1]), w(&[0, 1, -1]), w(&[0, -1, 1])].into_iter().collect();
        assert_eq!(odd, expect);
        assert_eq!(s.pairing(&w(&[1, 0, 0]), &w(&[1, 0, 0])).unwrap(), int(1));
        assert_eq!(s.pairing(&w(&[0, 0, 1]), &w(&[0, 0, 1])).unwrap(), int(-1));
        assert_eq!(s.coroot_pair(&w(&[1, -1, 0]), &w(&[1, -1, 0])).unwrap(), int(2));
        assert_eq!(s.coroot_pair(&w(&[1, 0, 0]), &w(&[1, 0, -1])).unwrap(), int(1));
        assert!(s.is_isotropic(&w(&[1, 0, -1])));
        assert!(s.coroot_pair(&w(&[1, 0, 0]), &w(&[1, 0, 0])).is_err());
        assert!(s.pairing(&w(&[1, 0]), &w(&[1, 0, 0])).is_err());
    }

    #[test]
    fn b01_roots() {
        let s = build_root_system(&Family::b(0, 1).unwrap()).unwrap();
        let all: Vec<_> = s.roots.iter().map(|r| (r.weight.clone(), r.parity)).collect();
        assert_eq!(
            all,
            vec![
                (w(&[-2]), Parity::Even),
                (w(&[-1]), Parity::Odd),
                (w(&[1]), Parity::Odd),
                (w(&[2]), Parity::Even)
            ]
        );
        assert_eq!(s.coroot_pair(&w(&[1]), &w(&[2])).unwrap(), int(1));
        assert!(!s.is_isotropic(&w(&[1])));
    }

    #[test]
    fn d21_odd_roots_isotropic() {
        let s = build_root_system(&Family::d21(q(1, 2)).unwrap()).unwrap();
        assert_eq!(s.even().count(), 6);
        assert_eq!(s.odd().count(), 8);
        assert!(s.odd().all(|r| s.is_isotropic(&r.weight)));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(Family::a(1, 1).is_err());
        assert!(Family::d21(int(0)).is_err());
        assert!(Family::d21(int(-1)).is_err());
        assert!(Family::c(1).is_err());
        assert!(Family::d(1, 1).is_err());
        assert!(Family::b(2, 0).is_err());
    }

    #[test]
    fn root_counts_match_dimensions() {
        // dim g − rank from the classical dimension formulas.
        let expect = |f: &Family| -> usize {
            match *f {
                Family::A { m, n } => {
                    let (p, q) = (m + 1, n + 1);
                    (p + q) * (p + q) - 1 - (p + q - 1)
                }
                Family::B { m, n } => {
                    let (mm, nn) = (2 * m + 1, 2 * n);
                    mm * (mm - 1) / 2 + nn * (nn + 1) / 2 + mm * nn - m - n
                }
                Family::C { n } => {
                    let nn = 2 * n - 2;
                    1 + nn * (nn + 1) / 2 + 2 * nn - n
                }
                Family::D { m, n } => {
                    let (mm, nn) = (2 * m, 2 * n);
                    mm * (mm - 1) / 2 + nn * (nn + 1) / 2 + mm * nn - m - n
                }
                Family::D21 { .. } => 17 - 3,
                Family::F4 => 40 - 4,
                Family::G3 => 31 - 3,
            }
        };
        for f in small_families() {
            let s = build_root_system(&f).unwrap();
            assert_eq!(s.roots.len(), expect(&f), "{f}");
        }
    }

    #[test]
    fn structural_laws() {
        for f in small_families() {
            let s = build_root_system(&f).unwrap();
            assert!(!s.gram_det().is_zero(), "{f}");
            for r in &s.roots {
                assert!(!r.weight.is_zero());
                assert!(s.contains(&-&r.weight), "{f}: negation");
                assert_eq!(s.is_isotropic(&r.weight) && r.is_odd(), s.is_isotropic_combinatorial(r), "{f}");
                assert!(r.is_odd() || !s.is_isotropic(&r.weight), "{f}: isotropic even root");
                for k in [-4i64, -3, -2, 2, 3, 4] {
                    let in_delta = s.contains(&r.weight.scale(&int(k)));
                    let law = r.is_odd() && !s.is_isotropic(&r.weight) && k.abs() == 2;
                    assert_eq!(in_delta, law, "{f}: {k} times {:?}", r.weight);
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        for f in small_families() {
            let s = build_root_system(&f).unwrap();
            let back = SuperRootSystem::from_json(&s.to_json()).unwrap();
            assert_eq!(back, s);
        }
    }

    #[test]
    fn g3_four_coordinate_input() {
        let g = Family::G3;
        let x = g.normalize_weight(Weight::from_ints(&[0, 0, 1, 0])).unwrap();
        assert_eq!(x, w(&[-1, -1, 0]));
        assert!(g.normalize_weight(Weight::from_ints(&[1, 0])).is_err());
        assert_eq!(g.label_weight(&w(&[1, 0, -1])), "e1-d");
    }
}
