//! The `superhc` command line.
//!
//! [`run_from`] parses arguments and returns the exit status together with
//! everything that would be printed, so the binary is a thin wrapper.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::hciso::{self, linkage_report};
use crate::hwmod::{
    character_bruteforce, character_formula, check_irreducibility_criterion, criterion_terms, find_singular_vectors,
    rho, FormalCharacter, HighestWeight,
};
use crate::possys::{
    build_hermitian_pair, enumerate_admissible, enumeration_budget, p1_highest_weights, pair_report,
    standard_positive_system, HermitianPair, PositiveSystem, RealForm,
};
use crate::rational::{parse_rational, Weight};
use crate::rootsys::{build_root_system, parse_family, Family, SuperRootSystem};
use crate::verify::{self, Scope};

#[derive(Parser, Debug)]
#[command(name = "superhc", version, about = "Root data and highest weight Harish-Chandra modules of Lie superalgebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// The root system with parities and the invariant form.
    Roots {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Compact / non-compact split of the admissible positive system.
    Admissible {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        form: FormArgs,
        /// List every admissible positive system instead.
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Number of irreducible compact components of the odd non-compact part.
    Components {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        form: FormArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Height-truncated character of the universal module.
    Character {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        form: FormArgs,
        #[command(flatten)]
        weight: LambdaArgs,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Irreducibility criterion and a singular-vector search.
    Irreducible {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        form: FormArgs,
        #[command(flatten)]
        weight: LambdaArgs,
        #[arg(long, default_value_t = 8)]
        depth: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Whether μ + ρ lies in the even Weyl group orbit of λ + ρ.
    Linkage {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        form: FormArgs,
        #[command(flatten)]
        weight: LambdaArgs,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Whether λ + ρ is orthogonal to no isotropic root.
    Typical {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        form: FormArgs,
        #[command(flatten)]
        weight: LambdaArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run the invariant suite.
    Verify {
        /// Larger ranks and depths.
        #[arg(long)]
        full: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Case tables: simple roots, P_k, P_n0, P_n1 and the component count.
    Table {
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[command(flatten)]
        form: FormArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    /// A, B, C, D, D21a, F4 or G3.
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Parameter of D(2,1;α), e.g. 1/2.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct FormArgs {
    /// Real form tag; defaults to the first one available for the family.
    #[arg(long)]
    pub form: Option<String>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct LambdaArgs {
    /// Comma separated coordinates in the ε/δ basis, e.g. `1,-1/2,0`.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Formula,
    Brute,
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match dispatch(&cli.command) {
        Ok(o) => o,
        Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn family_of(tag: &str, m: Option<usize>, n: Option<usize>, alpha: Option<&str>) -> Result<Family> {
    let params: Vec<usize> = match tag {
        "A" | "B" | "D" => vec![
            m.ok_or_else(|| Error::InvalidFamily(format!("{tag} needs --m")))?,
            n.ok_or_else(|| Error::InvalidFamily(format!("{tag} needs --n")))?,
        ],
        "C" => vec![n.ok_or_else(|| Error::InvalidFamily("C needs --n".into()))?],
        _ => vec![],
    };
    let alpha = alpha.map(parse_rational).transpose()?;
    parse_family(tag, &params, alpha)
}

impl FamilyArgs {
    fn family(&self) -> Result<Family> {
        family_of(&self.family, self.m, self.n, self.alpha.as_deref())
    }
}

impl FormArgs {
    fn split(&self) -> Option<[usize; 4]> {
        match (self.p, self.q, self.r, self.s) {
            (Some(p), Some(q), Some(r), Some(s)) => Some([p, q, r, s]),
            _ => None,
        }
    }

    fn pair(&self, family: &Family) -> Result<HermitianPair> {
        let tag = match &self.form {
            Some(t) => t.as_str(),
            None => RealForm::tags_for(family)[0],
        };
        let split = self.split();
        if tag == "su" && split.is_none() && [self.p, self.q, self.r, self.s].iter().any(Option::is_some) {
            return Err(Error::InvalidFamily("su needs all of --p --q --r --s".into()));
        }
        build_hermitian_pair(family, tag, split)
    }
}

fn parse_weight(family: &Family, s: &str) -> Result<Weight> {
    family.normalize_weight(Weight::parse(s)?)
}

fn render<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn labels(f: &Family, ws: &[Weight]) -> String {
    if ws.is_empty() {
        return "(none)".into();
    }
    ws.iter().map(|w| f.label_weight(w)).collect::<Vec<_>>().join(", ")
}

fn pair_label(pair: &HermitianPair) -> String {
    match &pair.form {
        RealForm::Su { p, q, r, s } => format!("{} su({p},{q}|{r},{s})", pair.family()),
        f => format!("{} {}", pair.family(), f.tag()),
    }
}

fn dispatch(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Roots { family, out } => {
            let sys = build_root_system(&family.family()?)?;
            Ok(Outcome::ok(match out.format {
                Format::Json => render(&sys.to_json()),
                Format::Text => roots_text(&sys),
            }))
        }
        Command::Admissible { family, form, all, out } => {
            let pair = form.pair(&family.family()?)?;
            if *all {
                let systems = enumerate_admissible(&pair, enumeration_budget())?;
                let reports: Vec<_> = systems
                    .iter()
                    .map(|p| json!({ "simple": p.simple_roots(), "report": pair_report(&pair, p) }))
                    .collect();
                return Ok(Outcome::ok(match out.format {
                    Format::Json => render(&json!({ "count": systems.len(), "systems": reports })),
                    Format::Text => {
                        let mut s = format!("{} admissible positive systems\n", systems.len());
                        for p in &systems {
                            let _ = writeln!(s, "  {}", labels(pair.family(), &p.simple_roots()));
                        }
                        s
                    }
                }));
            }
            let p = pair.constructed_system()?;
            let rep = pair_report(&pair, &p);
            Ok(Outcome::ok(match out.format {
                Format::Json => render(&rep),
                Format::Text => split_text(&pair, &p),
            }))
        }
        Command::Components { family, form, out } => {
            let pair = form.pair(&family.family()?)?;
            let p = pair.constructed_system()?;
            let hw = p1_highest_weights(&pair, &p);
            Ok(Outcome::ok(match out.format {
                Format::Json => render(&json!({ "components_p1": hw.len(), "highest_weights": hw })),
                Format::Text => format!("{}\n", hw.len()),
            }))
        }
        Command::Character { family, form, weight, depth, method, out } => {
            let hw = highest_weight(family, form, weight)?;
            let ch = match method {
                Method::Formula => character_formula(&hw, *depth)?,
                Method::Brute => character_bruteforce(&hw, *depth)?,
            };
            Ok(Outcome::ok(match out.format {
                Format::Json => render(&ch),
                Format::Text => character_text(hw.sys(), &ch),
            }))
        }
        Command::Irreducible { family, form, weight, depth, out } => {
            let hw = highest_weight(family, form, weight)?;
            let criterion = check_irreducibility_criterion(&hw);
            let sv = if hw.sys().family.is_classical() { Some(find_singular_vectors(&hw, *depth)?) } else { None };
            Ok(Outcome::ok(match out.format {
                Format::Json => render(&json!({
                    "criterion": criterion,
                    "singular_vectors": sv,
                    "depth": depth,
                    "terms": criterion_terms(&hw),
                })),
                Format::Text => {
                    let f = &hw.sys().family;
                    let mut s = format!("criterion: {criterion}\n");
                    for t in criterion_terms(&hw) {
                        let _ = writeln!(
                            s,
                            "  (λ+ρ)(H_{}) = {}{}",
                            f.label_weight(&t.root),
                            crate::rational::format_rational(&t.value),
                            if t.holds { "" } else { "  violated" }
                        );
                    }
                    match &sv {
                        None => s.push_str("singular vectors: no realization for this family\n"),
                        Some(v) => {
                            let _ = writeln!(s, "singular vectors up to depth {depth}: {}", v.len());
                            for x in v {
                                let _ = writeln!(s, "  weight {} at height {}", f.label_weight(&x.mu), x.height);
                            }
                        }
                    }
                    s
                }
            }))
        }
        Command::Linkage { family, form, weight, mu, out } => {
            let (sys, p) = system_and_positive(family, form)?;
            let lambda = parse_weight(&sys.family, &weight.lambda)?;
            let mu = parse_weight(&sys.family, mu)?;
            let r = rho(&sys, &p).rho;
            let rep = linkage_report(&sys, &p, &r, &lambda, &mu);
            Ok(Outcome::ok(match out.format {
                Format::Json => render(&rep),
                Format::Text => match rep.linked {
                    Some(b) => format!("{b}\n"),
                    None => format!("atypical: {}\n", labels(&sys.family, &rep.atypical_roots)),
                },
            }))
        }
        Command::Typical { family, form, weight, out } => {
            let (sys, p) = system_and_positive(family, form)?;
            let lambda = parse_weight(&sys.family, &weight.lambda)?;
            let r = rho(&sys, &p).rho;
            let atyp = hciso::atypical_roots(&sys, &r, &lambda);
            Ok(Outcome::ok(match out.format {
                Format::Json => render(&json!({ "typical": atyp.is_empty(), "atypical_roots": atyp, "rho": r })),
                Format::Text => format!("{}\n", atyp.is_empty()),
            }))
        }
        Command::Verify { full, out } => {
            let rep = verify::run(if *full { Scope::Full } else { Scope::Quick });
            let code = if rep.all_passed() { 0 } else { 1 };
            let stdout = match out.format {
                Format::Json => render(&rep),
                Format::Text => {
                    let mut s = String::new();
                    for c in &rep.checks {
                        let tag = if c.passed { "PASS" } else { "FAIL" };
                        let _ = writeln!(s, "{tag} {} ({} cases, {} violations)", c.name, c.cases, c.violations);
                        for d in &c.detail {
                            let _ = writeln!(s, "     {d}");
                        }
                    }
                    let _ = writeln!(s, "passed {}, failed {}", rep.passed, rep.failed);
                    s
                }
            };
            Ok(Outcome { code, stdout, stderr: String::new() })
        }
        Command::Table { family, m, n, alpha, form, out } => {
            let pairs = table_pairs(family.as_deref(), *m, *n, alpha.as_deref(), form)?;
            let mut rows = Vec::new();
            let mut text = String::new();
            for pair in &pairs {
                let p = pair.constructed_system()?;
                let rep = pair_report(&pair, &p);
                rows.push(json!({
                    "case": pair_label(pair),
                    "simple": pair.admissible_simple_system()?,
                    "report": rep,
                }));
                let _ = writeln!(text, "{}", pair_label(pair));
                let _ = writeln!(text, "  Π:    {}", labels(pair.family(), &p.simple_roots()));
                text.push_str(&indent(&split_text(pair, &p)));
            }
            Ok(Outcome::ok(match out.format {
                Format::Json => render(&rows),
                Format::Text => text,
            }))
        }
    }
}

fn indent(s: &str) -> String {
    s.lines().map(|l| format!("  {l}\n")).collect()
}

fn highest_weight(family: &FamilyArgs, form: &FormArgs, weight: &LambdaArgs) -> Result<HighestWeight> {
    let pair = form.pair(&family.family()?)?;
    let p = pair.constructed_system()?;
    let lambda = parse_weight(pair.family(), &weight.lambda)?;
    HighestWeight::new(&pair, &p, lambda)
}

/// The constructed admissible system when a form is given, otherwise the
/// distinguished positive system.
fn system_and_positive(family: &FamilyArgs, form: &FormArgs) -> Result<(SuperRootSystem, PositiveSystem)> {
    let f = family.family()?;
    if form.form.is_some() || form.split().is_some() {
        let pair = form.pair(&f)?;
        let p = pair.constructed_system()?;
        return Ok((pair.sys, p));
    }
    let sys = build_root_system(&f)?;
    let p = standard_positive_system(&sys)?;
    Ok((sys, p))
}

fn table_pairs(
    family: Option<&str>,
    m: Option<usize>,
    n: Option<usize>,
    alpha: Option<&str>,
    form: &FormArgs,
) -> Result<Vec<HermitianPair>> {
    let families = match family {
        Some(tag) => vec![family_of(tag, m, n, alpha)?],
        None => vec![
            Family::a(2, 1)?,
            Family::b(2, 1)?,
            Family::b(0, 2)?,
            Family::c(3)?,
            Family::d(3, 1)?,
            Family::d21(crate::rational::q(1, 2))?,
            Family::F4,
            Family::G3,
        ],
    };
    let mut out = Vec::new();
    for f in &families {
        let tags: Vec<&str> = match &form.form {
            Some(t) => vec![t.as_str()],
            None => RealForm::tags_for(f).to_vec(),
        };
        for tag in tags {
            if tag == "su" && form.split().is_none() {
                let (a, b) = f.split();
                for p in (1..=a).rev() {
                    for r in (1..=b).rev() {
                        out.push(build_hermitian_pair(f, tag, Some([p, a - p, r, b - r]))?);
                    }
                }
            } else {
                out.push(form_for(tag, form).pair(f)?);
            }
        }
    }
    Ok(out)
}

fn form_for(tag: &str, base: &FormArgs) -> FormArgs {
    FormArgs { form: Some(tag.to_string()), ..base.clone() }
}

fn roots_text(sys: &SuperRootSystem) -> String {
    let f = &sys.family;
    let even: Vec<Weight> = sys.even().map(|r| r.weight.clone()).collect();
    let odd: Vec<Weight> = sys.odd().map(|r| r.weight.clone()).collect();
    let iso: Vec<Weight> = sys.isotropic_roots().iter().map(|r| r.weight.clone()).collect();
    format!(
        "{f}\nbasis: {}\neven ({}): {}\nodd ({}): {}\nisotropic: {}\n",
        f.basis_labels().join(", "),
        even.len(),
        labels(f, &even),
        odd.len(),
        labels(f, &odd),
        labels(f, &iso)
    )
}

fn split_text(pair: &HermitianPair, p: &PositiveSystem) -> String {
    let rep = pair_report(pair, p);
    let f = pair.family();
    format!(
        "P_k:  {}\nP_n0: {}\nP_n1: {}\nadmissible: {}\ncomponents_p1: {}\n",
        labels(f, &rep.parts.p_k),
        labels(f, &rep.parts.p_n0),
        labels(f, &rep.parts.p_n1),
        rep.admissible,
        rep.components_p1
    )
}

fn character_text(sys: &SuperRootSystem, ch: &FormalCharacter) -> String {
    let f = &sys.family;
    let mut s = format!("highest weight {} to height {}\n", f.label_weight(&ch.base), ch.height_bound);
    for (mu, m) in ch.sorted_terms() {
        let _ = writeln!(s, "  {m:>4}  {}", f.label_weight(&mu));
    }
    s
}
