//! Supermatrix realizations of sl(m|n) and osp(M|2n).
//!
//! The algebra is cut out of gl(p|q) by linear constraints: vanishing
//! supertrace for type A, and super-skewness with respect to an even
//! supersymmetric form for the orthosymplectic families. Root vectors are
//! obtained by solving those constraints on the span of the matrix units
//! whose diagonal weight difference is the root, so nothing about the root
//! vectors is tabulated by hand.

use std::collections::BTreeMap;

use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{format_rational, int, Rational, Weight};
use crate::rootsys::{build_root_system, Family, Parity, SuperRootSystem};

/// A square supermatrix with block sizes `(p|q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperMatrix {
    pub p: usize,
    pub q: usize,
    pub entries: Vec<Vec<Rational>>,
}

impl SuperMatrix {
    pub fn zero(p: usize, q: usize) -> Self {
        let n = p + q;
        SuperMatrix { p, q, entries: vec![vec![Rational::zero(); n]; n] }
    }

    /// Matrix unit `E_ij`.
    pub fn unit(p: usize, q: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(p, q);
        m.entries[i][j] = Rational::one();
        m
    }

    pub fn size(&self) -> usize {
        self.p + self.q
    }

    fn index_parity(&self, i: usize) -> bool {
        i >= self.p
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|r| r.iter().all(Zero::is_zero))
    }

    /// Parity of a homogeneous matrix; `None` when both blocks are occupied.
    /// The zero matrix counts as even.
    pub fn parity(&self) -> Option<Parity> {
        let mut even = false;
        let mut odd = false;
        for (i, row) in self.entries.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    if self.index_parity(i) == self.index_parity(j) {
                        even = true;
                    } else {
                        odd = true;
                    }
                }
            }
        }
        match (even, odd) {
            (_, false) => Some(Parity::Even),
            (false, true) => Some(Parity::Odd),
            _ => None,
        }
    }

    fn nonzeros(&self) -> Vec<(usize, usize, &Rational)> {
        let mut out = Vec::new();
        for (i, row) in self.entries.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    out.push((i, j, x));
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &SuperMatrix) -> SuperMatrix {
        let mut out = SuperMatrix::zero(self.p, self.q);
        let rhs = other.nonzeros();
        for (i, k, a) in self.nonzeros() {
            for (k2, j, b) in &rhs {
                if *k2 == k {
                    out.entries[i][*j] += a * *b;
                }
            }
        }
        out
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &SuperMatrix) {
        for (i, j, x) in other.nonzeros() {
            self.entries[i][j] += c * x;
        }
    }

    pub fn scale(&self, c: &Rational) -> SuperMatrix {
        let mut out = SuperMatrix::zero(self.p, self.q);
        out.add_scaled(c, self);
        out
    }

    /// Supertrace `Σ (−1)^{|u|} x_uu`.
    pub fn supertrace(&self) -> Rational {
        let mut s = Rational::zero();
        for i in 0..self.size() {
            if self.index_parity(i) {
                s -= &self.entries[i][i];
            } else {
                s += &self.entries[i][i];
            }
        }
        s
    }
}

/// `xy − (−1)^{|x||y|} yx` for homogeneous `x`, `y`.
pub fn supercommutator(x: &SuperMatrix, y: &SuperMatrix) -> Result<SuperMatrix> {
    if (x.p, x.q) != (y.p, y.q) {
        return Err(Error::NotHomogeneous(format!(
            "block sizes ({}|{}) and ({}|{})",
            x.p, x.q, y.p, y.q
        )));
    }
    let (Some(px), Some(py)) = (x.parity(), y.parity()) else {
        return Err(Error::NotHomogeneous("mixed parity".into()));
    };
    let mut out = x.mul(y);
    out.add_scaled(&int(-px.sign(py)), &y.mul(x));
    Ok(out)
}

#[derive(Clone, Debug)]
enum Kind {
    Special,
    /// Gram matrix of the even supersymmetric form on the defining module.
    Orthosymplectic(Vec<Vec<Rational>>),
}

/// The defining representation: block sizes, diagonal weights, and the
/// constraints singling out the algebra inside gl(p|q).
#[derive(Clone, Debug)]
pub struct Realization {
    pub family: Family,
    pub p: usize,
    pub q: usize,
    /// Weight of each standard basis vector of the defining module.
    pub weights: Vec<Weight>,
    /// Index of the basis vector whose weight is the `c`-th coordinate
    /// functional.
    pub coordinate_index: Vec<usize>,
    kind: Kind,
}

impl Realization {
    pub fn new(family: &Family) -> Result<Self> {
        let family = family.clone().validated()?;
        let d = family.dim();
        match family {
            Family::A { m, n } => {
                let (p, q) = (m + 1, n + 1);
                let weights = (0..p + q).map(|i| Weight::unit(d, i)).collect();
                Ok(Realization { family, p, q, weights, coordinate_index: (0..d).collect(), kind: Kind::Special })
            }
            Family::B { .. } | Family::C { .. } | Family::D { .. } => {
                let (m, n) = family.split();
                let odd_even = matches!(family, Family::B { .. });
                let p = 2 * m + usize::from(odd_even);
                let q = 2 * n;
                let size = p + q;
                let mut j = vec![vec![Rational::zero(); size]; size];
                let mut weights = vec![Weight::zero(d); size];
                let mut coordinate_index = vec![0; d];
                for i in 0..m {
                    j[i][m + i] = int(1);
                    j[m + i][i] = int(1);
                    weights[i] = Weight::unit(d, i);
                    weights[m + i] = -Weight::unit(d, i);
                    coordinate_index[i] = i;
                }
                if odd_even {
                    j[2 * m][2 * m] = int(1);
                }
                for k in 0..n {
                    let (a, b) = (p + k, p + n + k);
                    j[a][b] = int(1);
                    j[b][a] = int(-1);
                    weights[a] = Weight::unit(d, m + k);
                    weights[b] = -Weight::unit(d, m + k);
                    coordinate_index[m + k] = a;
                }
                Ok(Realization { family, p, q, weights, coordinate_index, kind: Kind::Orthosymplectic(j) })
            }
            other => Err(Error::Unrealized(other.to_string())),
        }
    }

    pub fn size(&self) -> usize {
        self.p + self.q
    }

    fn odd_index(&self, i: usize) -> bool {
        i >= self.p
    }

    /// Linear constraints on the coefficients of `X = Σ c_k E_{positions[k]}`.
    fn constraints(&self, positions: &[(usize, usize)]) -> Vec<Vec<Rational>> {
        let n = self.size();
        match &self.kind {
            Kind::Special => {
                let row: Vec<Rational> = positions
                    .iter()
                    .map(|&(i, j)| {
                        if i != j {
                            Rational::zero()
                        } else if self.odd_index(i) {
                            int(-1)
                        } else {
                            int(1)
                        }
                    })
                    .collect();
                if row.iter().all(Zero::is_zero) {
                    vec![]
                } else {
                    vec![row]
                }
            }
            Kind::Orthosymplectic(jm) => {
                // (X^T J)_uv + (−1)^{|X||u|} (J X)_uv = 0 for every u, v.
                let mut rows = Vec::new();
                for u in 0..n {
                    for v in 0..n {
                        let mut row = vec![Rational::zero(); positions.len()];
                        for (k, &(a, b)) in positions.iter().enumerate() {
                            let x_odd = self.odd_index(a) != self.odd_index(b);
                            let sign = if x_odd && self.odd_index(u) { int(-1) } else { int(1) };
                            if b == u && !jm[a][v].is_zero() {
                                row[k] += &jm[a][v];
                            }
                            if b == v && !jm[u][a].is_zero() {
                                row[k] += &sign * &jm[u][a];
                            }
                        }
                        if row.iter().any(|x| !x.is_zero()) {
                            rows.push(row);
                        }
                    }
                }
                rows
            }
        }
    }

    fn solve_on(&self, positions: &[(usize, usize)]) -> Vec<SuperMatrix> {
        let rows = self.constraints(positions);
        linalg::kernel(&rows, positions.len())
            .into_iter()
            .map(|v| {
                let mut m = SuperMatrix::zero(self.p, self.q);
                for (c, &(i, j)) in v.iter().zip(positions) {
                    m.entries[i][j] = c.clone();
                }
                m
            })
            .collect()
    }

    /// Matrix units `E_ij` with weight difference `w_i − w_j = alpha`.
    pub fn positions_of(&self, alpha: &Weight) -> Vec<(usize, usize)> {
        let n = self.size();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if &(&self.weights[i] - &self.weights[j]) == alpha && (i != j || alpha.is_zero()) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// A basis of the `alpha`-weight space of the algebra.
    pub fn weight_space(&self, alpha: &Weight) -> Vec<SuperMatrix> {
        let pos = self.positions_of(alpha);
        if pos.is_empty() {
            return vec![];
        }
        self.solve_on(&pos)
    }

    pub fn cartan_basis(&self) -> Vec<SuperMatrix> {
        self.weight_space(&Weight::zero(self.family.dim()))
    }

    /// Dimension of the whole algebra, computed from the constraints on all
    /// of gl(p|q) without any weight decomposition.
    pub fn algebra_dim(&self) -> usize {
        let n = self.size();
        let mut total = 0;
        for odd in [false, true] {
            let pos: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .filter(|&(i, j)| (self.odd_index(i) != self.odd_index(j)) == odd)
                .collect();
            let rows = self.constraints(&pos);
            total += pos.len() - linalg::rank(&rows, pos.len());
        }
        total
    }

    /// All nonzero weight differences of the defining module.
    pub fn candidate_weights(&self) -> Vec<Weight> {
        let mut v: Vec<Weight> = Vec::new();
        for a in &self.weights {
            for b in &self.weights {
                let w = a - b;
                if !w.is_zero() {
                    v.push(w);
                }
            }
        }
        v.sort();
        v.dedup();
        v
    }

    /// `λ(h)` for a diagonal matrix `h`.
    pub fn eval(&self, lambda: &Weight, h: &SuperMatrix) -> Rational {
        let mut s = Rational::zero();
        for (c, &k) in lambda.0.iter().zip(&self.coordinate_index) {
            if !c.is_zero() {
                s += c * &h.entries[k][k];
            }
        }
        s
    }
}

/// Sparse coefficient vector over a basis.
pub type SparseVec = Vec<(usize, Rational)>;

fn push_term(acc: &mut BTreeMap<usize, Rational>, i: usize, c: Rational) {
    let e = acc.entry(i).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        acc.remove(&i);
    }
}

/// Basis, brackets and invariant form of a realized superalgebra.
///
/// Basis indices `0..rank` are the Cartan basis, followed by one root vector
/// per root in the order of [`SuperRootSystem::roots`].
#[derive(Clone, Debug)]
pub struct StructureConstants {
    pub sys: SuperRootSystem,
    pub realization: Realization,
    pub basis: Vec<SuperMatrix>,
    pub parity: Vec<Parity>,
    pub rank: usize,
    /// `table[a][b]` is `[x_a, x_b]` in the basis.
    pub table: Vec<Vec<SparseVec>>,
    /// `(λ,μ)_str = str_scale · (λ,μ)` on roots.
    pub str_scale: Rational,
    str_gram_h: Vec<Vec<Rational>>,
    root_pos: BTreeMap<Weight, usize>,
    /// For each root vector, an entry where it is nonzero.
    pivots: Vec<(usize, usize)>,
}

pub fn realize_algebra(family: &Family) -> Result<StructureConstants> {
    let realization = Realization::new(family)?;
    let sys = build_root_system(family)?;
    let cartan = realization.cartan_basis();
    let rank = cartan.len();
    if rank != family.cartan_rank() {
        return Err(Error::Internal(format!("Cartan subalgebra of dimension {rank}")));
    }
    let mut basis = cartan;
    let mut parity = vec![Parity::Even; rank];
    let mut root_pos = BTreeMap::new();
    let mut pivots = Vec::new();
    for r in &sys.roots {
        let sp = realization.weight_space(&r.weight);
        if sp.len() != 1 {
            return Err(Error::Internal(format!("root space of dimension {}", sp.len())));
        }
        let x = sp.into_iter().next().unwrap();
        let pivot = realization
            .positions_of(&r.weight)
            .into_iter()
            .find(|&(i, j)| !x.entries[i][j].is_zero())
            .ok_or_else(|| Error::Internal("zero root vector".into()))?;
        root_pos.insert(r.weight.clone(), basis.len());
        parity.push(r.parity);
        pivots.push(pivot);
        basis.push(x);
    }
    let mut sc = StructureConstants {
        sys,
        realization,
        basis,
        parity,
        rank,
        table: vec![],
        str_scale: Rational::zero(),
        str_gram_h: vec![],
        root_pos,
        pivots,
    };
    sc.str_gram_h = (0..rank)
        .map(|i| (0..rank).map(|j| sc.basis[i].mul(&sc.basis[j]).supertrace()).collect())
        .collect();
    let n = sc.basis.len();
    let mut table = vec![vec![SparseVec::new(); n]; n];
    for a in 0..n {
        for b in 0..n {
            let m = supercommutator(&sc.basis[a], &sc.basis[b])?;
            table[a][b] = sc.decompose(&m)?;
        }
    }
    sc.table = table;
    sc.str_scale = sc.compute_str_scale()?;
    Ok(sc)
}

impl StructureConstants {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn family(&self) -> &Family {
        &self.sys.family
    }

    pub fn root_index(&self, alpha: &Weight) -> Option<usize> {
        self.root_pos.get(alpha).copied()
    }

    pub fn weight_of(&self, idx: usize) -> Weight {
        if idx < self.rank {
            Weight::zero(self.sys.dim())
        } else {
            self.sys.roots[idx - self.rank].weight.clone()
        }
    }

    /// Coordinates of a matrix of the algebra in the basis.
    pub fn decompose(&self, m: &SuperMatrix) -> Result<SparseVec> {
        let mut out = SparseVec::new();
        let mut rest = m.clone();
        for (k, &(i, j)) in self.pivots.iter().enumerate() {
            let idx = self.rank + k;
            let x = &self.basis[idx];
            let c = &m.entries[i][j] / &x.entries[i][j];
            if !c.is_zero() {
                rest.add_scaled(&-c.clone(), x);
                out.push((idx, c));
            }
        }
        let n = m.size();
        if (0..n).any(|i| (0..n).any(|j| i != j && !rest.entries[i][j].is_zero())) {
            return Err(Error::Internal("matrix is not in the algebra".into()));
        }
        let diag: Vec<Rational> = (0..n).map(|i| rest.entries[i][i].clone()).collect();
        if diag.iter().any(|x| !x.is_zero()) {
            let a: Vec<Vec<Rational>> = (0..n)
                .map(|u| (0..self.rank).map(|l| self.basis[l].entries[u][u].clone()).collect())
                .collect();
            let c = linalg::solve(&a, &diag, self.rank)
                .ok_or_else(|| Error::Internal("diagonal part outside the Cartan subalgebra".into()))?;
            let mut h: SparseVec = c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
            h.extend(out);
            out = h;
        }
        out.sort_by_key(|t| t.0);
        Ok(out)
    }

    pub fn to_matrix(&self, v: &[(usize, Rational)]) -> SuperMatrix {
        let mut m = SuperMatrix::zero(self.realization.p, self.realization.q);
        for (i, c) in v {
            m.add_scaled(c, &self.basis[*i]);
        }
        m
    }

    pub fn bracket(&self, a: usize, b: usize) -> &SparseVec {
        &self.table[a][b]
    }

    /// Bracket of two homogeneous sparse vectors of the given parities.
    pub fn bracket_vec(&self, x: &[(usize, Rational)], y: &[(usize, Rational)]) -> SparseVec {
        let mut acc = BTreeMap::new();
        for (a, ca) in x {
            for (b, cb) in y {
                for (c, cc) in &self.table[*a][*b] {
                    push_term(&mut acc, *c, ca * cb * cc);
                }
            }
        }
        acc.into_iter().collect()
    }

    /// Supertrace form `str(x_a x_b)`.
    pub fn str_form(&self, a: usize, b: usize) -> Rational {
        self.basis[a].mul(&self.basis[b]).supertrace()
    }

    /// Value `λ(h)` of a weight on a Cartan element given in the basis.
    pub fn eval(&self, lambda: &Weight, h: &[(usize, Rational)]) -> Rational {
        h.iter()
            .map(|(i, c)| c * self.realization.eval(lambda, &self.basis[*i]))
            .sum()
    }

    /// The Cartan element `h_λ` with `str(h_λ h) = λ(h)` for all `h`.
    pub fn h_of(&self, lambda: &Weight) -> SparseVec {
        let rhs: Vec<Rational> =
            (0..self.rank).map(|k| self.realization.eval(lambda, &self.basis[k])).collect();
        let c = linalg::solve(&self.str_gram_h, &rhs, self.rank).expect("nondegenerate form on h");
        c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()
    }

    fn compute_str_scale(&self) -> Result<Rational> {
        let mut scale: Option<Rational> = None;
        for a in &self.sys.roots {
            let ha = self.h_of(&a.weight);
            for b in &self.sys.roots {
                let s = self.eval(&b.weight, &ha);
                let g = self.sys.form(&a.weight, &b.weight);
                match (&scale, g.is_zero()) {
                    (_, true) if s.is_zero() => {}
                    (_, true) => return Err(Error::Internal("forms differ in their zero sets".into())),
                    (None, false) => scale = Some(s / g),
                    (Some(c), false) if s == c * &g => {}
                    _ => return Err(Error::Internal("forms are not proportional".into())),
                }
            }
        }
        scale.ok_or_else(|| Error::Internal("no root pairs".into()))
    }

    /// `H_γ` in the Cartan basis: `λ(H_γ)` equals
    /// [`SuperRootSystem::coroot`] for every λ.
    pub fn coroot_element(&self, gamma: &Weight) -> SparseVec {
        let h = self.h_of(gamma);
        let gg = self.sys.form(gamma, gamma);
        let c = if gg.is_zero() {
            Rational::one() / &self.str_scale
        } else {
            int(2) / (&self.str_scale * gg)
        };
        h.into_iter().map(|(i, x)| (i, x * &c)).collect()
    }

    /// Checks super-antisymmetry and the super-Jacobi identity on all basis
    /// pairs and triples. Returns the number of violations.
    pub fn jacobi_violations(&self) -> usize {
        match self.integer_table().and_then(|t| jacobi_integer(&t, &self.parity)) {
            Some(bad) => bad,
            None => self.jacobi_violations_exact(),
        }
    }

    /// The table scaled by the common denominator of its entries, when the
    /// entries fit in `i64`. Both sides of the Jacobi identity are
    /// quadratic in the table, so the scaled table satisfies it exactly when
    /// the original does.
    fn integer_table(&self) -> Option<Vec<Vec<Vec<(usize, i128)>>>> {
        let mut den = num_bigint::BigInt::one();
        for row in &self.table {
            for v in row {
                for (_, c) in v {
                    den = num_integer::Integer::lcm(&den, c.denom());
                }
            }
        }
        let den = Rational::from_integer(den);
        self.table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| {
                        v.iter()
                            .map(|(i, c)| (c * &den).to_integer().to_i64().map(|x| (*i, x as i128)))
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }

    fn jacobi_violations_exact(&self) -> usize {
        let n = self.dim();
        let mut bad = 0;
        for a in 0..n {
            for b in 0..n {
                let s = -int(self.parity[a].sign(self.parity[b]));
                let ba: SparseVec = self.table[b][a].iter().map(|(i, c)| (*i, c * &s)).collect();
                if self.table[a][b] != ba {
                    bad += 1;
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = &self.table[a][b];
                for c in 0..n {
                    // [a,[b,c]] = [[a,b],c] + (−1)^{|a||b|} [b,[a,c]]
                    let lhs = self.bracket_vec(&[(a, Rational::one())], &self.table[b][c]);
                    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                    for (i, x) in self.bracket_vec(ab, &[(c, Rational::one())]) {
                        push_term(&mut acc, i, x);
                    }
                    let s = int(self.parity[a].sign(self.parity[b]));
                    for (i, x) in self.bracket_vec(&[(b, Rational::one())], &self.table[a][c]) {
                        push_term(&mut acc, i, x * &s);
                    }
                    let rhs: SparseVec = acc.into_iter().collect();
                    if lhs != rhs {
                        bad += 1;
                    }
                }
            }
        }
        bad
    }

    /// JSON dump of all nonzero brackets.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Term {
            idx: usize,
            coeff: String,
        }
        #[derive(Serialize)]
        struct Triple {
            a: usize,
            b: usize,
            out: Vec<Term>,
        }
        let mut out = Vec::new();
        for a in 0..self.dim() {
            for b in 0..self.dim() {
                if self.table[a][b].is_empty() {
                    continue;
                }
                out.push(Triple {
                    a,
                    b,
                    out: self.table[a][b]
                        .iter()
                        .map(|(i, c)| Term { idx: *i, coeff: format_rational(c) })
                        .collect(),
                });
            }
        }
        serde_json::to_value(out).expect("serializable")
    }
}

/// Integer version of [`StructureConstants::jacobi_violations`]. `None`
/// on overflow.
fn jacobi_integer(t: &[Vec<Vec<(usize, i128)>>], parity: &[Parity]) -> Option<usize> {
    let n = t.len();
    let mut bad = 0;
    for a in 0..n {
        for b in 0..n {
            let s = -(parity[a].sign(parity[b]) as i128);
            let ba: Vec<(usize, i128)> = t[b][a].iter().map(|(i, c)| (*i, c * s)).collect();
            if t[a][b] != ba {
                bad += 1;
            }
        }
    }
    let mut lhs = vec![0i128; n];
    let mut rhs = vec![0i128; n];
    let add = |acc: &mut [i128], outer: i128, inner: &[(usize, i128)]| -> Option<()> {
        for (k, v) in inner {
            acc[*k] = acc[*k].checked_add(outer.checked_mul(*v)?)?;
        }
        Some(())
    };
    for a in 0..n {
        for b in 0..n {
            let sab = parity[a].sign(parity[b]) as i128;
            for c in 0..n {
                // [a,[b,c]] = [[a,b],c] + (−1)^{|a||b|} [b,[a,c]]
                for (x, v) in &t[b][c] {
                    add(&mut lhs, *v, &t[a][*x])?;
                }
                for (x, v) in &t[a][b] {
                    add(&mut rhs, *v, &t[*x][c])?;
                }
                for (x, v) in &t[a][c] {
                    add(&mut rhs, v.checked_mul(sab)?, &t[b][*x])?;
                }
                if lhs != rhs {
                    bad += 1;
                }
                lhs.iter_mut().for_each(|x| *x = 0);
                rhs.iter_mut().for_each(|x| *x = 0);
            }
        }
    }
    Some(bad)
}

/// Cartan matrix `a_ij = α_j(H_{α_i})` of a simple system. Rows of isotropic
/// simple roots are rescaled to primitive integer rows (the scale of `H_γ`
/// for isotropic γ is a convention).
pub fn cartan_matrix(sys: &SuperRootSystem, simple: &[Weight]) -> Result<Vec<Vec<Rational>>> {
    for s in simple {
        sys.expect_root(s)?;
    }
    let rows: Vec<Vec<Rational>> = simple.iter().map(|w| w.0.clone()).collect();
    if linalg::rank(&rows, sys.dim()) != simple.len() {
        return Err(Error::DependentSimpleRoots);
    }
    Ok(cartan_rows(sys, simple).into_iter().map(|(row, _)| row).collect())
}

/// Rows of the Cartan matrix together with the factor applied to `H_{α_i}`.
fn cartan_rows(sys: &SuperRootSystem, simple: &[Weight]) -> Vec<(Vec<Rational>, Rational)> {
    simple
        .iter()
        .map(|ai| {
            let row: Vec<Rational> = simple.iter().map(|aj| sys.coroot(aj, ai)).collect();
            if sys.is_isotropic(ai) {
                let prim = linalg::primitive_integer_row(&row);
                let k = row
                    .iter()
                    .zip(&prim)
                    .find(|(x, _)| !x.is_zero())
                    .map(|(x, p)| p / x)
                    .unwrap_or_else(Rational::one);
                (prim, k)
            } else {
                (row, Rational::one())
            }
        })
        .collect()
}

/// Chevalley-type generators `(e_i, f_i, h_i)` attached to a simple system,
/// normalized so that `[e_i, f_i] = h_i` and `[h_i, e_j] = a_ij e_j`.
pub struct Generators {
    pub e: Vec<SparseVec>,
    pub f: Vec<SparseVec>,
    pub h: Vec<SparseVec>,
    pub cartan: Vec<Vec<Rational>>,
}

pub fn chevalley_generators(sc: &StructureConstants, simple: &[Weight]) -> Result<Generators> {
    let cartan = cartan_matrix(&sc.sys, simple)?;
    let rows = cartan_rows(&sc.sys, simple);
    let mut g = Generators { e: vec![], f: vec![], h: vec![], cartan };
    for (a, (_, k)) in simple.iter().zip(&rows) {
        let ei = sc.root_index(a).ok_or_else(|| Error::NotARoot(format!("{a}")))?;
        let fi = sc.root_index(&-a).ok_or_else(|| Error::NotARoot(format!("{}", -a)))?;
        let h: SparseVec = sc.coroot_element(a).into_iter().map(|(i, x)| (i, x * k)).collect();
        // [e, x_{−α}] is a multiple of h_α, hence of h.
        let br = sc.bracket(ei, fi);
        let (i0, c0) = h.first().ok_or_else(|| Error::Internal("zero coroot".into()))?;
        let b0 = br
            .iter()
            .find(|(i, _)| i == i0)
            .map(|(_, c)| c.clone())
            .ok_or_else(|| Error::Internal("[e_α, e_−α] not proportional to h_α".into()))?;
        let t = c0 / b0;
        g.e.push(vec![(ei, Rational::one())]);
        g.f.push(vec![(fi, t)]);
        g.h.push(h);
    }
    Ok(g)
}

/// Checks `[e_i,f_j] = δ_ij h_i`, `[h_i,e_j] = a_ij e_j`, `[h_i,f_j] = −a_ij f_j`.
pub fn generator_relations_hold(sc: &StructureConstants, g: &Generators) -> bool {
    let r = g.e.len();
    let scale = |v: &SparseVec, c: &Rational| -> SparseVec {
        if c.is_zero() {
            vec![]
        } else {
            v.iter().map(|(i, x)| (*i, x * c)).collect()
        }
    };
    for i in 0..r {
        for j in 0..r {
            let ef = sc.bracket_vec(&g.e[i], &g.f[j]);
            let expect = if i == j { g.h[i].clone() } else { vec![] };
            if ef != expect {
                return false;
            }
            if sc.bracket_vec(&g.h[i], &g.e[j]) != scale(&g.e[j], &g.cartan[i][j]) {
                return false;
            }
            if sc.bracket_vec(&g.h[i], &g.f[j]) != scale(&g.f[j], &-g.cartan[i][j].clone()) {
                return false;
            }
        }
    }
    true
}

/// `dim(h ⊕ n⁺(P)) = ½(dim g + dim h)`, with every dimension measured in the
/// realization.
pub fn borel_dimension_check(family: &Family, positive: &[Weight]) -> Result<bool> {
    let real = Realization::new(family)?;
    let rank = real.cartan_basis().len();
    let mut dim_m = rank;
    for a in positive {
        dim_m += real.weight_space(a).len();
    }
    Ok(2 * dim_m == real.algebra_dim() + rank)
}

/// Results of checking the structural properties of the root decomposition
/// inside a realization. Every field is a count of violations.
#[derive(Debug, Default, Clone, PartialEq, Eq, Serialize)]
pub struct RootDecompositionReport {
    pub dimension: usize,
    pub root_space_dims: usize,
    pub extra_weights: usize,
    pub bracket_closure: usize,
    pub form_orthogonality: usize,
    pub coroot_brackets: usize,
}

impl RootDecompositionReport {
    pub fn is_clean(&self) -> bool {
        *self == RootDecompositionReport::default()
    }
}

/// Checks `g = h ⊕ ⊕ g_α` with one-dimensional root spaces, the bracket rule
/// `[g_α, g_β] = g_{α+β}`, str-orthogonality of root spaces, and
/// `[e_α, e_−α] = (e_α, e_−α) h_α`.
pub fn root_decomposition_report(sc: &StructureConstants) -> RootDecompositionReport {
    let mut rep = RootDecompositionReport::default();
    let real = &sc.realization;
    if real.algebra_dim() != sc.rank + sc.sys.roots.len() {
        rep.dimension += 1;
    }
    for r in &sc.sys.roots {
        if real.weight_space(&r.weight).len() != 1 {
            rep.root_space_dims += 1;
        }
    }
    for w in real.candidate_weights() {
        if !sc.sys.contains(&w) && !real.weight_space(&w).is_empty() {
            rep.extra_weights += 1;
        }
    }
    let zero = Weight::zero(sc.sys.dim());
    for a in &sc.sys.roots {
        let ia = sc.root_index(&a.weight).unwrap();
        for b in &sc.sys.roots {
            let ib = sc.root_index(&b.weight).unwrap();
            let sum = &a.weight + &b.weight;
            let br = sc.bracket(ia, ib);
            if sum == zero {
                let h = sc.h_of(&a.weight);
                let c = sc.str_form(ia, ib);
                let expect: SparseVec = h.into_iter().map(|(i, x)| (i, x * &c)).filter(|(_, x)| !x.is_zero()).collect();
                if c.is_zero() || *br != expect {
                    rep.coroot_brackets += 1;
                }
            } else if sc.sys.contains(&sum) {
                let is = sc.root_index(&sum).unwrap();
                if br.len() != 1 || br[0].0 != is {
                    rep.bracket_closure += 1;
                }
            } else if !br.is_empty() {
                rep.bracket_closure += 1;
            }
            if sum != zero && !sc.str_form(ia, ib).is_zero() {
                rep.form_orthogonality += 1;
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn w(xs: &[i64]) -> Weight {
        Weight::from_ints(xs)
    }

    #[test]
    fn odd_supercommutator_is_anticommutator() {
        let x = SuperMatrix::unit(2, 1, 0, 2);
        let y = SuperMatrix::unit(2, 1, 2, 0);
        let z = supercommutator(&x, &y).unwrap();
        let mut expect = SuperMatrix::unit(2, 1, 0, 0);
        expect.entries[2][2] = int(1);
        assert_eq!(z, expect);
        let e = SuperMatrix::unit(2, 1, 0, 1);
        assert!(supercommutator(&e, &e).unwrap().is_zero());
        let mut mixed = SuperMatrix::unit(2, 1, 0, 1);
        mixed.entries[0][2] = int(1);
        assert!(supercommutator(&mixed, &e).is_err());
        assert!(supercommutator(&e, &SuperMatrix::unit(1, 1, 0, 1)).is_err());
    }

    #[test]
    fn diagonal_conjugation() {
        let real = Realization::new(&Family::a(1, 0).unwrap()).unwrap();
        let mut h = SuperMatrix::zero(2, 1);
        h.entries[0][0] = int(3);
        h.entries[1][1] = int(-1);
        h.entries[2][2] = int(5);
        for alpha in real.candidate_weights() {
            for x in real.weight_space(&alpha) {
                let br = supercommutator(&h, &x).unwrap();
                assert_eq!(br, x.scale(&real.eval(&alpha, &h)));
            }
        }
    }

    #[test]
    fn small_dimensions() {
        let sl21 = realize_algebra(&Family::a(1, 0).unwrap()).unwrap();
        assert_eq!(sl21.rank, 2);
        assert_eq!(sl21.dim(), 8);
        assert_eq!(sl21.realization.algebra_dim(), 8);
        let osp12 = realize_algebra(&Family::b(0, 1).unwrap()).unwrap();
        assert_eq!((osp12.dim(), osp12.rank, osp12.sys.roots.len()), (5, 1, 4));
        assert_eq!(osp12.str_scale, q(1, 2));
        assert_eq!(sl21.str_scale, int(1));
    }

    #[test]
    fn cartan_matrices() {
        let s = build_root_system(&Family::a(1, 0).unwrap()).unwrap();
        let c = cartan_matrix(&s, &[w(&[1, -1, 0]), w(&[0, 1, -1])]).unwrap();
        assert_eq!(c, vec![vec![int(2), int(-1)], vec![int(-1), int(0)]]);
        let b = build_root_system(&Family::b(0, 1).unwrap()).unwrap();
        assert_eq!(cartan_matrix(&b, &[w(&[1])]).unwrap(), vec![vec![int(2)]]);
        assert_eq!(
            cartan_matrix(&s, &[w(&[1, -1, 0]), w(&[-1, 1, 0])]),
            Err(Error::DependentSimpleRoots)
        );
    }

    #[test]
    fn generators_and_borel() {
        let f = Family::a(1, 0).unwrap();
        let sc = realize_algebra(&f).unwrap();
        let g = chevalley_generators(&sc, &[w(&[1, -1, 0]), w(&[0, 1, -1])]).unwrap();
        assert!(generator_relations_hold(&sc, &g));
        let p = [w(&[1, -1, 0]), w(&[1, 0, -1]), w(&[0, 1, -1])];
        assert!(borel_dimension_check(&f, &p).unwrap());
        assert!(!borel_dimension_check(&f, &p[..2]).unwrap());
        assert!(borel_dimension_check(&Family::b(0, 1).unwrap(), &[w(&[2]), w(&[1])]).unwrap());
    }

    #[test]
    fn small_realizations_are_consistent() {
        for f in [Family::a(1, 0), Family::b(0, 1), Family::b(1, 1), Family::c(2), Family::a(0, 2)] {
            let sc = realize_algebra(&f.unwrap()).unwrap();
            assert!(root_decomposition_report(&sc).is_clean(), "{}", sc.family());
            assert_eq!(sc.jacobi_violations(), 0, "{}", sc.family());
            for r in &sc.sys.roots {
                for l in &sc.sys.roots {
                    let h = sc.coroot_element(&r.weight);
                    assert_eq!(sc.eval(&l.weight, &h), sc.sys.coroot(&l.weight, &r.weight));
                }
            }
        }
    }

    #[test]
    fn integer_and_exact_jacobi_agree() {
        let mut sc = realize_algebra(&Family::b(1, 1).unwrap()).unwrap();
        assert_eq!(sc.jacobi_violations_exact(), 0);
        assert_eq!(jacobi_integer(&sc.integer_table().unwrap(), &sc.parity), Some(0));
        let (a, b) = (0, sc.dim() - 1);
        let v = sc.table[a][b].clone();
        sc.table[a][b] = v.iter().map(|(i, c)| (*i, c * q(3, 2))).collect();
        sc.table[a][b].push((a, q(1, 7)));
        let exact = sc.jacobi_violations_exact();
        assert!(exact > 0);
        assert_eq!(jacobi_integer(&sc.integer_table().unwrap(), &sc.parity), Some(exact));
    }

    #[test]
    fn exceptional_families_are_unrealized() {
        assert!(matches!(realize_algebra(&Family::F4), Err(Error::Unrealized(_))));
    }
}
