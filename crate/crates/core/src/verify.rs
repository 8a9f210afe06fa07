//! The invariant suite behind `superhc verify`.
//!
//! Every check runs over a fixed list of small cases and reports a count
//! of violations. [`Scope::Quick`] keeps the run to a few seconds;
//! [`Scope::Full`] widens the ranks and depths.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::hciso;
use crate::hwmod::{
    self, alternating_sum, build_k_module, character_bruteforce, character_formula, check_irreducibility_criterion,
    find_singular_vectors, poly_mul, weyl_denominator, HighestWeight, ModuleSlice,
};
use crate::possys::{
    abstract_positive_bruteforce, build_hermitian_pair, enumerate_positive_systems,
    enumeration_budget, flip_noncompact, is_abstract_positive, is_admissible, is_admissible_by_brackets,
    positivity_functional, simple_system_facts, standard_positive_system, HermitianPair, PositiveSystem, RealForm,
};
use crate::rational::{int, q, Weight};
use crate::realize::{
    borel_dimension_check, chevalley_generators, realize_algebra, root_decomposition_report, Realization,
    StructureConstants,
};
use crate::rootsys::{build_root_system, Family, SuperRootSystem};
use crate::weyl::{reflection_matrix, WeylGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    Quick,
    Full,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub violations: usize,
    pub passed: bool,
    /// First few failing cases.
    pub detail: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

struct Tally {
    name: &'static str,
    cases: usize,
    bad: Vec<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, cases: 0, bad: vec![] }
    }

    fn case(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.bad.push(what());
        }
    }

    fn result<T>(&mut self, r: Result<T>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.cases += 1;
                self.bad.push(format!("{}: {e}", what()));
                None
            }
        }
    }

    fn finish(self) -> Check {
        Check {
            name: self.name.to_string(),
            cases: self.cases,
            violations: self.bad.len(),
            passed: self.bad.is_empty() && self.cases > 0,
            detail: self.bad.into_iter().take(5).collect(),
        }
    }
}

/// Families with every parameter at most `max`, plus a few `D(2,1;α)`,
/// `F(4)` and `G(3)`.
pub fn small_families(max: usize) -> Vec<Family> {
    let mut v = Vec::new();
    for m in 0..=max {
        for n in 0..=max {
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
    for n in 2..=max + 1 {
        v.push(Family::C { n });
    }
    for a in [q(1, 2), int(2), q(-1, 3), q(3, 5)] {
        v.push(Family::D21 { alpha: a });
    }
    v.push(Family::F4);
    v.push(Family::G3);
    v
}

/// Classical families whose realization has `m + n ≤ max_sum`.
pub fn realizable_families(max_sum: usize) -> Vec<Family> {
    let mut v = Vec::new();
    for m in 0..=max_sum {
        for n in 0..=max_sum - m {
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
    for n in 2..=max_sum {
        v.push(Family::C { n });
    }
    v
}

/// Every Hermitian pair with parameters at most `max`; type A runs over all
/// splits `p + q = m + 1`, `r + s = n + 1`.
pub fn hermitian_pairs(max: usize) -> Vec<HermitianPair> {
    let mut out = Vec::new();
    for f in small_families(max) {
        for tag in RealForm::tags_for(&f) {
            if *tag == "su" {
                let (a, b) = f.split();
                for p in 0..=a {
                    for r in 0..=b {
                        out.extend(build_hermitian_pair(&f, tag, Some([p, a - p, r, b - r])));
                    }
                }
            } else {
                out.extend(build_hermitian_pair(&f, tag, None));
            }
        }
    }
    out
}

fn label(pair: &HermitianPair) -> String {
    match &pair.form {
        RealForm::Su { p, q, r, s } => format!("{} su({p},{q}|{r},{s})", pair.family()),
        f => format!("{} {}", pair.family(), f.tag()),
    }
}

pub fn run(scope: Scope) -> VerifyReport {
    let full = scope == Scope::Full;
    let families = small_families(if full { 3 } else { 2 });
    let systems: Vec<SuperRootSystem> = families.iter().filter_map(|f| build_root_system(f).ok()).collect();
    let pairs = hermitian_pairs(if full { 3 } else { 2 });
    // Chamber counts grow quickly; enumeration stays at parameters ≤ 2.
    let enum_pairs = hermitian_pairs(2);
    let admissible = admissible_systems(&enum_pairs);
    let mut checks = vec![
        root_laws(&systems),
        form_invariance(&systems),
        realization_checks(if full { 3 } else { 1 }),
        jacobi(if full { 5 } else { 2 }),
        positive_system_notions(&systems),
        constructed_systems(&pairs),
        admissible_systems_laws(&enum_pairs, &admissible),
        bracket_admissibility(&enum_pairs, if full { 2 } else { 1 }),
    ];
    checks.extend(module_checks(full));
    checks.push(hciso_checks(full));
    let failed = checks.iter().filter(|c| !c.passed).count();
    VerifyReport { passed: checks.len() - failed, failed, checks }
}

/// Admissible systems of every pair; positive systems are enumerated once
/// per family.
fn admissible_systems(pairs: &[HermitianPair]) -> Vec<Result<Vec<PositiveSystem>>> {
    let mut cache: Option<(Family, Result<Vec<PositiveSystem>>)> = None;
    let mut out = Vec::new();
    for pair in pairs {
        if cache.as_ref().map(|c| &c.0) != Some(pair.family()) {
            cache = Some((pair.family().clone(), enumerate_positive_systems(&pair.sys, enumeration_budget())));
        }
        let all = &cache.as_ref().expect("filled above").1;
        out.push(all.clone().map(|v| v.into_iter().filter(|p| is_admissible(pair, p)).collect()));
    }
    out
}

/// Negation closure, the doubling law, the two isotropy tests, and
/// nondegeneracy of the form.
fn root_laws(systems: &[SuperRootSystem]) -> Check {
    let mut t = Tally::new("roots: negation, doubling, isotropy, nondegenerate form");
    for s in systems {
        let f = &s.family;
        t.case(!s.gram_det().is_zero(), || format!("{f}: degenerate form"));
        for r in &s.roots {
            let a = &r.weight;
            t.case(s.contains(&-a), || format!("{f}: -({a}) missing"));
            let single = !r.is_odd() || s.is_isotropic(a);
            for k in [2, 3, -2, -3] {
                let expect = !single && k.abs() == 2;
                t.case(s.contains(&a.scale(&int(k))) == expect, || format!("{f}: {k}·({a})"));
            }
            t.case(s.is_isotropic(a) == s.is_isotropic_combinatorial(r), || format!("{f}: isotropy of {a}"));
        }
    }
    t.finish()
}

/// The form on `𝔥*` is invariant under the reflections of the even roots.
fn form_invariance(systems: &[SuperRootSystem]) -> Check {
    let mut t = Tally::new("roots: W-invariance of the form");
    for s in systems {
        let d = s.dim();
        for r in s.even() {
            let m = reflection_matrix(s, &r.weight);
            let mut ok = true;
            for i in 0..d {
                for j in 0..d {
                    let col = |k: usize| Weight((0..d).map(|x| m[x][k].clone()).collect());
                    if s.form(&col(i), &col(j)) != s.gram[i][j] {
                        ok = false;
                    }
                }
            }
            t.case(ok, || format!("{}: reflection in {}", s.family, r.weight));
        }
    }
    t.finish()
}

/// Root decomposition, Chevalley generators and Borel dimensions inside
/// the matrix realizations.
fn realization_checks(max: usize) -> Check {
    let mut t = Tally::new("realize: root decomposition, generators, Borel dimension");
    for f in realizable_families(max + 1) {
        let f = &f;
        let Some(sc) = t.result(realize_algebra(f), || format!("{f}")) else { continue };
        let rep = root_decomposition_report(&sc);
        t.case(rep.is_clean(), || format!("{f}: {rep:?}"));
        t.case(sc.sys.roots.len() + f.cartan_rank() == sc.dim(), || format!("{f}: |Δ| + rank ≠ dim"));
        let Some(p) = t.result(standard_positive_system(&sc.sys), || format!("{f}")) else { continue };
        if let Some(g) = t.result(chevalley_generators(&sc, &p.simple_roots()), || format!("{f}")) {
            t.case(crate::realize::generator_relations_hold(&sc, &g), || format!("{f}: generator relations"));
        }
        if let Some(ok) = t.result(borel_dimension_check(f, &p.weights()), || format!("{f}")) {
            t.case(ok, || format!("{f}: Borel dimension"));
        }
        if let Ok(real) = Realization::new(f) {
            t.case(real.algebra_dim() == sc.dim(), || format!("{f}: realization size"));
        }
    }
    t.finish()
}

fn jacobi(max_sum: usize) -> Check {
    let mut t = Tally::new("realize: super-Jacobi identity");
    for f in realizable_families(max_sum) {
        let f = &f;
        if let Some(sc) = t.result(realize_algebra(f), || format!("{f}")) {
            let bad = sc.jacobi_violations();
            t.case(bad == 0, || format!("{f}: {bad} violations"));
        }
    }
    t.finish()
}

/// Abstract positive systems, adjacent-chamber enumeration and positivity
/// functionals agree at rank ≤ 3.
fn positive_system_notions(systems: &[SuperRootSystem]) -> Check {
    let mut t = Tally::new("possys: abstract positive = functional positive");
    for s in systems.iter().filter(|s| s.dim() <= 3) {
        let f = &s.family;
        let brute = abstract_positive_bruteforce(s);
        let Some(walked) = t.result(enumerate_positive_systems(s, enumeration_budget()), || format!("{f}")) else {
            continue;
        };
        t.case(brute == walked, || format!("{f}: {} abstract vs {} enumerated", brute.len(), walked.len()));
        for p in &walked {
            if let Some(l) = t.result(positivity_functional(s, p), || format!("{f}")) {
                let again = PositiveSystem::from_functional(s, &l);
                t.case(again.as_ref() == Ok(p), || format!("{f}: functional {l}"));
            }
            t.case(is_abstract_positive(s, &p.weights()) == Ok(true), || format!("{f}: not abstract"));
        }
    }
    t.finish()
}

/// Constructed systems are admissible, and admissible systems have an
/// abelian `𝔭₀⁺`.
fn constructed_systems(pairs: &[HermitianPair]) -> Check {
    let mut t = Tally::new("possys: constructed systems admissible, simple-system facts");
    for pair in pairs {
        let Some(p) = t.result(pair.constructed_system(), || label(pair)) else { continue };
        t.case(is_admissible(pair, &p), || format!("{}: constructed system not admissible", label(pair)));
        if let Some(f) = t.result(simple_system_facts(pair, &p), || label(pair)) {
            let ok = f.same_compact_simple && f.flipped_even_simple && f.highest_from_simple;
            t.case(ok, || format!("{}: {f:?}", label(pair)));
        }
    }
    t.finish()
}

/// On every admissible system: `𝔭₀⁺` is abelian and flipping the
/// non-compact roots twice is the identity.
fn admissible_systems_laws(pairs: &[HermitianPair], admissible: &[Result<Vec<PositiveSystem>>]) -> Check {
    let mut t = Tally::new("possys: p0+ abelian, flip involution");
    for (pair, all) in pairs.iter().zip(admissible) {
        let Some(all) = t.result(all.clone(), || label(pair)) else { continue };
        for p in &all {
            let n0 = pair.decompose(p).p_n0;
            let abelian = n0.iter().all(|a| n0.iter().all(|b| !pair.sys.contains(&(a + b))));
            t.case(abelian, || format!("{}: p0+ not abelian", label(pair)));
            let twice = flip_noncompact(pair, p).and_then(|m| flip_noncompact(pair, &m));
            t.case(twice.as_ref() == Ok(p), || format!("{}: flip not an involution", label(pair)));
        }
    }
    t.finish()
}

/// Root-level and bracket-level admissibility agree on every positive
/// system of the classical pairs.
fn bracket_admissibility(pairs: &[HermitianPair], max: usize) -> Check {
    let mut t = Tally::new("possys: admissibility by roots = by brackets");
    let mut cache: Option<(Family, StructureConstants, Vec<PositiveSystem>)> = None;
    for pair in pairs.iter().filter(|p| p.family().is_classical() && p.family().params().iter().all(|&x| x <= max)) {
        if cache.as_ref().map(|c| &c.0) != Some(pair.family()) {
            let Some(sc) = t.result(realize_algebra(pair.family()), || label(pair)) else { continue };
            let Some(all) = t.result(enumerate_positive_systems(&pair.sys, enumeration_budget()), || label(pair))
            else {
                continue;
            };
            cache = Some((pair.family().clone(), sc, all));
        }
        let (_, sc, all) = cache.as_ref().expect("filled above");
        for p in all {
            t.case(is_admissible(pair, p) == is_admissible_by_brackets(sc, pair, p), || {
                format!("{}: disagreement at {:?}", label(pair), p.simple_roots())
            });
        }
    }
    t.finish()
}

/// Integral `λ` near zero, dominant for the compact roots.
fn dominant_weights(pair: &HermitianPair, p: &PositiveSystem, range: i64, limit: usize) -> Vec<HighestWeight> {
    let d = pair.sys.dim();
    let mut out = Vec::new();
    let mut coords = vec![-range; d];
    loop {
        if let Ok(hw) = HighestWeight::new(pair, p, Weight::from_ints(&coords)) {
            out.push(hw);
            if out.len() >= limit {
                return out;
            }
        }
        let mut i = 0;
        loop {
            if i == d {
                return out;
            }
            coords[i] += 1;
            if coords[i] <= range {
                break;
            }
            coords[i] = -range;
            i += 1;
        }
    }
}

fn module_pairs() -> Vec<HermitianPair> {
    let mut v = Vec::new();
    v.extend(build_hermitian_pair(&Family::A { m: 1, n: 0 }, "su", Some([1, 1, 1, 0])));
    v.extend(build_hermitian_pair(&Family::A { m: 2, n: 1 }, "su", Some([2, 1, 1, 1])));
    v.extend(build_hermitian_pair(&Family::B { m: 0, n: 1 }, "sp", None));
    v.extend(build_hermitian_pair(&Family::B { m: 0, n: 2 }, "sp", None));
    v.extend(build_hermitian_pair(&Family::B { m: 2, n: 1 }, "so2-sp", None));
    v.extend(build_hermitian_pair(&Family::C { n: 2 }, "so2-sp", None));
    v.extend(build_hermitian_pair(&Family::D21 { alpha: q(1, 2) }, "su2x2-sl2", None));
    v
}

fn module_checks(full: bool) -> Vec<Check> {
    let depth = if full { 5 } else { 3 };
    let per_pair = if full { 8 } else { 3 };
    let mut oracle = Tally::new("hwmod: character formula = PBW count");
    let mut numerator = Tally::new("hwmod: Weyl numerator identity");
    let mut freeness = Tally::new("hwmod: slice dimensions = character");
    let mut criterion = Tally::new("hwmod: criterion implies no singular vectors");
    for pair in module_pairs() {
        let name = label(&pair);
        let Some(p) = oracle.result(pair.constructed_system(), || name.clone()) else { continue };
        let realizable = pair.family().is_classical();
        let (rho_k, _) = hwmod::rho_parts(&pair, &p);
        for hw in dominant_weights(&pair, &p, 2, per_pair) {
            let lam = &hw.lambda;
            let a = oracle.result(character_formula(&hw, depth), || format!("{name} λ={lam}"));
            let b = oracle.result(character_bruteforce(&hw, depth), || format!("{name} λ={lam}"));
            if let (Some(a), Some(b)) = (&a, &b) {
                oracle.case(a == b, || format!("{name} λ={lam}"));
            }
            if let Some(f) = numerator.result(build_k_module(&hw), || format!("{name} λ={lam}")) {
                let pk = pair.decompose(&p).p_k;
                let lhs = poly_mul(&weyl_denominator(&pair.sys, &pk), &f.character());
                let rhs = alternating_sum(&pair.compact_weyl_group(&p), &(lam + &rho_k));
                numerator.case(lhs == rhs, || format!("{name} λ={lam}"));
            }
            if !realizable {
                continue;
            }
            if let (Some(b), Some(mut slice)) =
                (&b, freeness.result(ModuleSlice::new(&hw, depth.min(3)), || format!("{name} λ={lam}")))
            {
                for o in slice.offsets() {
                    let got = slice.quotient_dim(&o) as i64;
                    freeness.case(got == b.terms.get(&o).copied().unwrap_or(0), || format!("{name} λ={lam} at {o:?}"));
                }
            }
            if check_irreducibility_criterion(&hw) {
                let d = if full { 8 } else { 4 };
                if let Some(sv) = criterion.result(find_singular_vectors(&hw, d), || format!("{name} λ={lam}")) {
                    criterion.case(sv.is_empty(), || format!("{name} λ={lam}: {} singular vectors", sv.len()));
                }
            }
        }
    }
    vec![oracle.finish(), numerator.finish(), freeness.finish(), criterion.finish()]
}

/// `c + g·ψ` lies in `I(𝔥)`; without isotropic roots membership is plain
/// invariance; singular vectors at typical weights are linked.
fn hciso_checks(full: bool) -> Check {
    let mut t = Tally::new("hciso: g-multiples, empty product, linkage of singular vectors");
    let mut families = vec![Family::A { m: 1, n: 0 }, Family::B { m: 1, n: 1 }, Family::B { m: 0, n: 2 }];
    if full {
        families.push(Family::A { m: 2, n: 1 });
    }
    for f in families {
        let Some(s) = t.result(build_root_system(&f), || format!("{f}")) else { continue };
        let Some(p) = t.result(standard_positive_system(&s), || format!("{f}")) else { continue };
        let w = hciso::even_weyl_group(&s, &p);
        let gens = hciso::invariant_generators(&w, s.dim(), 2);
        let g = hciso::g_polynomial(&s);
        for (i, psi) in gens.iter().enumerate() {
            let phi = hciso::lemma_element(&s, q(i as i64 + 1, 3), psi);
            t.case(hciso::in_i_h(&s, &w, &phi) == Ok(true), || format!("{f}: c + g·ψ{i}"));
            if g.degree() == Some(0) {
                t.case(hciso::in_i_h(&s, &w, psi) == Ok(true), || format!("{f}: invariant ψ{i}"));
            }
        }
    }
    // Singular vectors at typical weights on a wall of a non-compact root.
    let Ok(pair) = build_hermitian_pair(&Family::B { m: 0, n: 1 }, "sp", None) else { return t.finish() };
    let Ok(p) = pair.constructed_system() else { return t.finish() };
    let w = WeylGroup::generated_by(&pair.sys, &crate::possys::simple_roots(&p.even()));
    let rho = hwmod::rho(&pair.sys, &p).rho;
    for c in [1, 2, 3] {
        let lam = Weight(vec![int(c)]);
        let Some(hw) = t.result(HighestWeight::new(&pair, &p, lam.clone()), || format!("λ={lam}")) else { continue };
        if let Some(sv) = t.result(find_singular_vectors(&hw, 8), || format!("λ={lam}")) {
            t.case(!sv.is_empty(), || format!("λ={lam}: no singular vector"));
            for v in sv {
                let ok = hciso::linkage(&pair.sys, &w, &rho, &lam, &v.mu) == Ok(true);
                t.case(ok, || format!("λ={lam}: μ={} not linked", v.mu));
            }
        }
    }
    t.finish()
}
