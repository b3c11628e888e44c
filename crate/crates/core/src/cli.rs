//! Command-line front end. Exit codes: 0 when the checked property holds, 1 when it fails
//! (a witness is printed), 2 on invalid input.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{
    check_identities_c1_c5, check_properties, IdentityReport, Property, PropertyReport, ResiduatedLattice, Verdict,
};
use crate::classify::{
    are_isomorphic, bl_structure_listing, enumerate_algebras, enumerate_lattice_skeletons, non_bl_expressions,
    table_reports, ClassFilter, ClassifyError, EnumerateOptions, Method,
};
use crate::corpus;
use crate::ideal_lattice::{build_ideal_lattice, check_c6_c7, is_multiplication_lattice, IdealLatticeError};
use crate::io::{load_algebra, to_json_text, write_expr, write_lattice_file, write_ring_spec, LatticeFile};
use crate::ordinal::{evaluate_expr, ordinal_product, AlgebraExpr};
use crate::ring::{build_ring, classify_ideals, enumerate_ideals, FiniteRing, RingSpec, Sidedness};

#[derive(Parser, Debug)]
#[command(name = "reslat", version, about = "Finite residuated lattices and ideal lattices of finite rings")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Left,
    Right,
    Two,
}

impl From<Side> for Sidedness {
    fn from(s: Side) -> Self {
        match s {
            Side::Left => Sidedness::Left,
            Side::Right => Sidedness::Right,
            Side::Two => Sidedness::Two,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide properties of an algebra given as a lattice, expression or ring spec file.
    Check {
        file: PathBuf,
        /// residuated, div, prel (or mtl), bl, mv, heyting or chain; all when omitted.
        #[arg(long)]
        property: Option<String>,
    },
    /// List the ideals of a ring with maximal/prime/principal statistics.
    RingIdeals {
        spec: PathBuf,
        #[arg(long, value_enum, default_value_t = Side::Two)]
        side: Side,
        /// Also write Id(A) as a lattice file.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Decide whether a commutative ring is a multiplication ring.
    IsMultiplication { spec: PathBuf },
    /// c1-c5 on a divisible algebra, or c6-c7 on a multiplication ring spec.
    Identities { file: PathBuf },
    /// Ordinal product of two BL-algebras.
    OrdinalProduct {
        left: PathBuf,
        right: PathBuf,
        /// Write the product as a lattice file instead of printing its tables.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Search for an isomorphism between two algebras.
    Iso { a: PathBuf, b: PathBuf },
    /// Enumerate algebras of one size up to isomorphism.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "divisible")]
        filter: ClassFilter,
        #[arg(long, default_value = "brute")]
        method: Method,
        #[arg(long)]
        threads: Option<usize>,
        /// Lift the exhaustive-search size guard.
        #[arg(long)]
        allow_large: bool,
    },
    /// Bounded lattices on n elements up to isomorphism.
    Skeletons {
        #[arg(long)]
        n: usize,
    },
    /// Counts of BL-algebras and divisible residuated lattices, with structure listings.
    Tables {
        #[arg(long, default_value_t = 6)]
        max: usize,
        #[arg(long, default_value = "generate")]
        method: Method,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Write the test corpus (ring specs, lattice files, expressions) into a directory.
    SeedCorpus { dir: PathBuf },
}

#[derive(Debug, PartialEq, Eq)]
enum Outcome {
    Holds,
    Fails,
}

#[derive(Debug)]
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type CmdResult = Result<Outcome, InputError>;

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match dispatch(&cli, out) {
        Ok(Outcome::Holds) => 0,
        Ok(Outcome::Fails) => 1,
        Err(InputError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Check { file, property } => cmd_check(file, property.as_deref(), json, out),
        Command::RingIdeals { spec, side, emit } => cmd_ring_ideals(spec, (*side).into(), emit.as_deref(), json, out),
        Command::IsMultiplication { spec } => cmd_is_multiplication(spec, json, out),
        Command::Identities { file } => cmd_identities(file, json, out),
        Command::OrdinalProduct { left, right, output } => cmd_ordinal(left, right, output.as_deref(), json, out),
        Command::Iso { a, b } => cmd_iso(a, b, json, out),
        Command::Enumerate { n, filter, method, threads, allow_large } => {
            let opts = EnumerateOptions { allow_large: *allow_large, threads: *threads };
            cmd_enumerate(*n, *filter, *method, opts, json, out)
        }
        Command::Skeletons { n } => cmd_skeletons(*n, json, out),
        Command::Tables { max, method, threads } => cmd_tables(*max, *method, *threads, json, out),
        Command::SeedCorpus { dir } => cmd_seed(dir, json, out),
    }
}

const RING_KINDS: [&str; 4] = ["Zn", "product", "polyquot", "table"];

enum Input {
    Ring(RingSpec),
    Algebra(ResiduatedLattice),
}

fn read_input(path: &Path) -> Result<Input, InputError> {
    let text = fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let is_ring = value.get("kind").and_then(Value::as_str).is_some_and(|k| RING_KINDS.contains(&k));
    if is_ring {
        let spec: RingSpec =
            serde_json::from_value(value).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
        Ok(Input::Ring(spec))
    } else {
        Ok(Input::Algebra(load_algebra(path)?))
    }
}

fn read_algebra(path: &Path) -> Result<ResiduatedLattice, InputError> {
    match read_input(path)? {
        Input::Algebra(l) => Ok(l),
        Input::Ring(spec) => Ok(evaluate_expr(&AlgebraExpr::ring(spec))?),
    }
}

fn read_ring(path: &Path) -> Result<FiniteRing, InputError> {
    match read_input(path)? {
        Input::Ring(spec) => Ok(build_ring(&spec)?),
        Input::Algebra(_) => Err(InputError(format!("{}: expected a ring spec", path.display()))),
    }
}

fn emit_json(out: &mut dyn Write, v: &Value) -> Result<(), InputError> {
    writeln!(out, "{}", to_json_text(v)?)?;
    Ok(())
}

fn labels_of(l: &ResiduatedLattice, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| l.label(x)).collect()
}

fn tuple(l: &ResiduatedLattice, xs: &[usize]) -> String {
    format!("({})", labels_of(l, xs).join(","))
}

/// Defining identity of each property, as printed next to a failure.
fn identity_text(p: Property) -> &'static str {
    match p {
        Property::Residuated => "x*z <= y iff z <= x->y",
        Property::Divisible => "x*(x->y) = x^y",
        Property::Prelinear => "(x->y) v (y->x) = 1",
        Property::Bl => "x*(x->y) = x^y and (x->y) v (y->x) = 1",
        Property::Mv => "BL and x** = x",
        Property::Heyting => "x*x = x",
        Property::Chain => "x <= y or y <= x",
    }
}

/// `(a,b): c ≠ 1` style rendering of a failed property's witness.
fn witness_text(l: &ResiduatedLattice, p: Property, r: &PropertyReport) -> String {
    let v = r.get(p);
    let Some(w) = &v.witness else { return String::new() };
    let lab = |x: usize| l.label(x);
    let div = |w: &[usize]| {
        let (x, y) = (w[0], w[1]);
        format!("{}: {} ≠ {}", tuple(l, w), lab(l.odot(x, l.arrow(x, y))), lab(l.meet(x, y)))
    };
    let prel = |w: &[usize]| {
        let (x, y) = (w[0], w[1]);
        format!("{}: {} ≠ {}", tuple(l, w), lab(l.join(l.arrow(x, y), l.arrow(y, x))), lab(l.top()))
    };
    match p {
        Property::Divisible => div(w),
        Property::Prelinear => prel(w),
        Property::Bl | Property::Mv if !r.is_divisible() => div(w),
        Property::Bl | Property::Mv if !r.is_prelinear() => prel(w),
        Property::Mv => format!("{}: x** = {} ≠ {}", tuple(l, w), lab(l.neg(l.neg(w[0]))), lab(w[0])),
        Property::Heyting => format!("{}: x*x = {} ≠ {}", tuple(l, w), lab(l.odot(w[0], w[0])), lab(w[0])),
        Property::Chain => format!("{}: incomparable", tuple(l, w)),
        Property::Bl | Property::Residuated => tuple(l, w),
    }
}

fn verdict_json(l: &ResiduatedLattice, v: &Verdict) -> Value {
    json!({ "holds": v.holds, "witness": v.witness.as_ref().map(|w| labels_of(l, w)) })
}

fn expr_value(l: &ResiduatedLattice) -> Value {
    l.provenance().map_or(Value::Null, |e| Value::String(e.to_string()))
}

fn cmd_check(file: &Path, property: Option<&str>, json: bool, out: &mut dyn Write) -> CmdResult {
    let property = property
        .map(|s| Property::parse(s).ok_or_else(|| InputError(format!("unknown property `{s}`"))))
        .transpose()?;
    let l = read_algebra(file)?;
    let r = check_properties(&l);
    match property {
        Some(p) => {
            let v = r.get(p);
            let detail = witness_text(&l, p, &r);
            if json {
                emit_json(
                    out,
                    &json!({
                        "property": p.name(),
                        "holds": v.holds,
                        "witness": v.witness.as_ref().map(|w| labels_of(&l, w)),
                        "detail": (!v.holds).then_some(detail),
                        "expr": expr_value(&l),
                    }),
                )?;
            } else if v.holds {
                writeln!(out, "{}: holds", p.name())?;
            } else {
                writeln!(out, "{}: fails", p.name())?;
                writeln!(out, "identity: {}", identity_text(p))?;
                writeln!(out, "witness {detail}")?;
            }
            Ok(if v.holds { Outcome::Holds } else { Outcome::Fails })
        }
        None => {
            if json {
                let props: serde_json::Map<String, Value> =
                    Property::ALL.iter().map(|&p| (p.name().to_string(), verdict_json(&l, r.get(p)))).collect();
                emit_json(out, &json!({ "size": l.size(), "expr": expr_value(&l), "properties": props }))?;
            } else {
                if let Some(e) = l.provenance() {
                    writeln!(out, "{e}")?;
                }
                writeln!(out, "{} elements", l.size())?;
                for p in Property::ALL {
                    let v = r.get(p);
                    if v.holds {
                        writeln!(out, "{:<11} holds", p.name())?;
                    } else {
                        writeln!(out, "{:<11} fails  {}", p.name(), witness_text(&l, p, &r))?;
                    }
                }
            }
            Ok(Outcome::Holds)
        }
    }
}

fn cmd_ring_ideals(spec: &Path, side: Sidedness, emit: Option<&Path>, json: bool, out: &mut dyn Write) -> CmdResult {
    let ring = read_ring(spec)?;
    let ideals = enumerate_ideals(&ring, side);
    let stats = if side == Sidedness::Two && ring.is_commutative() { Some(classify_ideals(&ring)?) } else { None };
    if let Some(path) = emit {
        let id = build_ideal_lattice(&ring)?;
        write_lattice_file(path, id.algebra())?;
    }
    if json {
        let list: Vec<Value> = ideals
            .iter()
            .map(|i| {
                json!({
                    "label": ring.describe_ideal_on(i, side),
                    "size": i.len(),
                    "elements": i.elements().iter().map(|&x| ring.label(x).to_string()).collect::<Vec<_>>(),
                })
            })
            .collect();
        emit_json(out, &json!({ "ring": ring.name(), "side": side, "ideals": list, "stats": stats }))?;
        return Ok(Outcome::Holds);
    }
    let kind = if side == Sidedness::Two && ring.is_commutative() { String::new() } else { format!("{side} ") };
    writeln!(out, "{}: {} elements, {} {kind}ideals", ring.name(), ring.size(), ideals.len())?;
    for (k, i) in ideals.iter().enumerate() {
        let elems: Vec<&str> = i.elements().iter().map(|&x| ring.label(x)).collect();
        writeln!(out, "{k:>4}  {:<12} |I| = {:<4} {{{}}}", ring.describe_ideal_on(i, side), i.len(), elems.join(", "))?;
    }
    if let Some(s) = stats {
        let names =
            |ks: &[usize]| ks.iter().map(|&k| ring.describe_ideal_on(&ideals[k], side)).collect::<Vec<_>>().join(" ");
        writeln!(out, "maximal ideals: {}  [{}]", s.n_maximal, names(&s.maximal))?;
        writeln!(out, "prime ideals:   {}  [{}]", s.n_prime, names(&s.prime))?;
        writeln!(out, "local: {}", s.is_local)?;
        match s.non_principal {
            None => writeln!(out, "principal ideal ring: true")?,
            Some(k) => writeln!(
                out,
                "principal ideal ring: false, {} is not principal",
                ring.describe_ideal_on(&ideals[k], side)
            )?,
        }
    }
    Ok(Outcome::Holds)
}

fn cmd_is_multiplication(spec: &Path, json: bool, out: &mut dyn Write) -> CmdResult {
    let ring = read_ring(spec)?;
    let id = build_ideal_lattice(&ring)?;
    let v = match is_multiplication_lattice(&id) {
        Ok(v) => v,
        Err(IdealLatticeError::CriteriaDisagree(c)) => {
            return Err(InputError(format!("multiplication criteria disagree on {}: {c:?}", ring.name())))
        }
        Err(e) => return Err(e.into()),
    };
    let l = id.algebra();
    let detail = v.witness.as_ref().map(|w| {
        let (i, j) = (w[0], w[1]);
        format!(
            "(I,J) = {}: I(J:I) = {} ≠ I^J = {}",
            tuple(l, w),
            l.label(l.odot(i, l.arrow(i, j))),
            l.label(l.meet(i, j))
        )
    });
    if json {
        emit_json(
            out,
            &json!({
                "ring": ring.name(),
                "multiplication": v.holds,
                "witness": v.witness.as_ref().map(|w| labels_of(l, w)),
                "detail": detail,
                "criteria": {
                    "factorization": verdict_json(l, &v.criteria.factorization),
                    "quotient_identity": verdict_json(l, &v.criteria.quotient_identity),
                    "divisible": verdict_json(l, &v.criteria.divisible),
                },
            }),
        )?;
    } else {
        writeln!(
            out,
            "{}: {}",
            ring.name(),
            if v.holds { "multiplication ring" } else { "not a multiplication ring" }
        )?;
        for (name, c) in [
            ("factorization J = I K", &v.criteria.factorization),
            ("I (J:I) = I ^ J", &v.criteria.quotient_identity),
            ("Id(A) divisible", &v.criteria.divisible),
        ] {
            writeln!(out, "  {name:<24} {}", if c.holds { "holds" } else { "fails" })?;
        }
        if let Some(d) = detail {
            writeln!(out, "witness {d}")?;
        }
    }
    Ok(if v.holds { Outcome::Holds } else { Outcome::Fails })
}

fn print_identities(
    out: &mut dyn Write,
    json: bool,
    subject: &str,
    l: &ResiduatedLattice,
    report: &IdentityReport,
) -> CmdResult {
    if json {
        let results: Vec<Value> = report
            .results
            .iter()
            .map(|r| json!({ "name": r.name, "holds": r.verdict.holds, "witness": r.verdict.witness.as_ref().map(|w| labels_of(l, w)) }))
            .collect();
        emit_json(out, &json!({ "subject": subject, "results": results }))?;
    } else {
        writeln!(out, "{subject}")?;
        for r in &report.results {
            match &r.verdict.witness {
                None => writeln!(out, "  {}  holds", r.name)?,
                Some(w) => writeln!(out, "  {}  fails at {}", r.name, tuple(l, w))?,
            }
        }
    }
    Ok(if report.all_hold() { Outcome::Holds } else { Outcome::Fails })
}

fn cmd_identities(file: &Path, json: bool, out: &mut dyn Write) -> CmdResult {
    match read_input(file)? {
        Input::Ring(spec) => {
            let ring = build_ring(&spec)?;
            let id = build_ideal_lattice(&ring)?;
            match check_c6_c7(&ring) {
                Ok(d) => {
                    let report = IdentityReport { results: vec![d.c6, d.c7] };
                    print_identities(out, json, &ring.name(), id.algebra(), &report)
                }
                Err(IdealLatticeError::PreconditionNotMultiplication { ring, witness }) => {
                    let msg =
                        format!("{ring} is not a multiplication ring (witness {})", tuple(id.algebra(), &witness));
                    if json {
                        emit_json(
                            out,
                            &json!({ "subject": ring, "precondition": "multiplication", "holds": false, "detail": msg }),
                        )?;
                    } else {
                        writeln!(out, "{msg}")?;
                    }
                    Ok(Outcome::Fails)
                }
                Err(e) => Err(e.into()),
            }
        }
        Input::Algebra(l) => {
            let subject = l.provenance().map_or_else(|| file.display().to_string(), |e| e.to_string());
            match check_identities_c1_c5(&l) {
                Ok(report) => print_identities(out, json, &subject, &l, &report),
                Err(e) => {
                    let msg = format!("not divisible (witness {})", tuple(&l, &e.witness));
                    if json {
                        emit_json(
                            out,
                            &json!({ "subject": subject, "precondition": "divisible", "holds": false, "detail": msg }),
                        )?;
                    } else {
                        writeln!(out, "{subject}: {msg}")?;
                    }
                    Ok(Outcome::Fails)
                }
            }
        }
    }
}

fn render_table(
    out: &mut dyn Write,
    l: &ResiduatedLattice,
    name: &str,
    f: impl Fn(usize, usize) -> usize,
) -> io::Result<()> {
    let n = l.size();
    let labels: Vec<String> = (0..n).map(|x| l.label(x)).collect();
    let w = labels.iter().map(String::len).max().unwrap_or(1).max(name.len());
    write!(out, "{name:>w$} |")?;
    for lab in &labels {
        write!(out, " {lab:>w$}")?;
    }
    writeln!(out)?;
    writeln!(out, "{}", "-".repeat((w + 1) * (n + 1) + 1))?;
    for x in 0..n {
        write!(out, "{:>w$} |", labels[x])?;
        for y in 0..n {
            write!(out, " {:>w$}", labels[f(x, y)])?;
        }
        writeln!(out)?;
    }
    Ok(())
}

fn render_algebra(out: &mut dyn Write, l: &ResiduatedLattice) -> io::Result<()> {
    let n = l.size();
    let covers: Vec<String> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| x != y && l.leq(x, y) && !(0..n).any(|z| z != x && z != y && l.leq(x, z) && l.leq(z, y)))
        .map(|(x, y)| format!("{} < {}", l.label(x), l.label(y)))
        .collect();
    writeln!(out, "covers: {}", covers.join(", "))?;
    render_table(out, l, "*", |x, y| l.odot(x, y))?;
    render_table(out, l, "->", |x, y| l.arrow(x, y))
}

fn cmd_ordinal(left: &Path, right: &Path, output: Option<&Path>, json: bool, out: &mut dyn Write) -> CmdResult {
    let (a, b) = (read_algebra(left)?, read_algebra(right)?);
    let p = ordinal_product(&a, &b).map_err(|e| {
        let (which, l) = match e {
            crate::ordinal::OrdinalError::NotBLAlgebra { factor: crate::ordinal::Factor::Left, .. } => (left, &a),
            _ => (right, &b),
        };
        let crate::ordinal::OrdinalError::NotBLAlgebra { witness, .. } = &e;
        InputError(format!("{} is not a BL-algebra (witness {})", which.display(), tuple(l, witness)))
    })?;
    if let Some(path) = output {
        write_lattice_file(path, &p)?;
    }
    if json {
        emit_json(out, &serde_json::to_value(LatticeFile::from_algebra(&p))?)?;
    } else {
        let name = p.provenance().map_or_else(|| "product".to_string(), |e| e.to_string());
        writeln!(out, "{name}: {} elements", p.size())?;
        render_algebra(out, &p)?;
    }
    Ok(Outcome::Holds)
}

fn cmd_iso(a: &Path, b: &Path, json: bool, out: &mut dyn Write) -> CmdResult {
    let (la, lb) = (read_algebra(a)?, read_algebra(b)?);
    let cert = are_isomorphic(&la, &lb);
    if json {
        let mapping = cert
            .as_ref()
            .map(|c| (0..la.size()).map(|x| json!([la.label(x), lb.label(c.mapping[x])])).collect::<Vec<_>>());
        emit_json(out, &json!({ "isomorphic": cert.is_some(), "certificate": cert, "mapping": mapping }))?;
    } else {
        match &cert {
            Some(c) => {
                writeln!(out, "isomorphic (verified: {})", c.verified)?;
                for x in 0..la.size() {
                    writeln!(out, "  {} -> {}", la.label(x), lb.label(c.mapping[x]))?;
                }
            }
            None => writeln!(out, "not isomorphic")?,
        }
    }
    Ok(if cert.is_some() { Outcome::Holds } else { Outcome::Fails })
}

fn classify_outcome(e: ClassifyError) -> CmdResult {
    Err(InputError(e.to_string()))
}

fn cmd_enumerate(
    n: usize,
    filter: ClassFilter,
    method: Method,
    opts: EnumerateOptions,
    json: bool,
    out: &mut dyn Write,
) -> CmdResult {
    let report = match enumerate_algebras(n, filter, method, opts) {
        Ok(r) => r,
        Err(e @ ClassifyError::MethodMismatch { .. }) => {
            writeln!(out, "{e}")?;
            return Ok(Outcome::Fails);
        }
        Err(e) => return classify_outcome(e),
    };
    if json {
        emit_json(out, &report.to_json())?;
    } else {
        write!(out, "{}", report.render_text())?;
    }
    Ok(Outcome::Holds)
}

fn cmd_skeletons(n: usize, json: bool, out: &mut dyn Write) -> CmdResult {
    let ls = match enumerate_lattice_skeletons(n) {
        Ok(ls) => ls,
        Err(e) => return classify_outcome(e),
    };
    if json {
        let list: Vec<Value> = ls
            .iter()
            .map(|l| {
                let leq: Vec<Vec<u8>> =
                    l.leq_matrix().into_iter().map(|r| r.into_iter().map(u8::from).collect()).collect();
                json!({ "size": l.size(), "chain": l.is_chain(), "bottom": l.bottom(), "top": l.top(), "leq": leq })
            })
            .collect();
        emit_json(out, &json!({ "n": n, "count": ls.len(), "lattices": list }))?;
        return Ok(Outcome::Holds);
    }
    writeln!(out, "{} lattices with {n} elements", ls.len())?;
    for (k, l) in ls.iter().enumerate() {
        let m = l.size();
        let covers: Vec<String> = (0..m)
            .flat_map(|x| (0..m).map(move |y| (x, y)))
            .filter(|&(x, y)| x != y && l.leq(x, y) && !(0..m).any(|z| z != x && z != y && l.leq(x, z) && l.leq(z, y)))
            .map(|(x, y)| format!("{x}<{y}"))
            .collect();
        let kind = if l.is_chain() { "chain" } else { "" };
        writeln!(out, "{:>4}  {:<6} {}", k + 1, kind, covers.join(" "))?;
    }
    Ok(Outcome::Holds)
}

fn cmd_tables(max: usize, method: Method, threads: Option<usize>, json: bool, out: &mut dyn Write) -> CmdResult {
    let compute = || table_reports(max, method);
    let report = match threads {
        Some(t) => rayon::ThreadPoolBuilder::new().num_threads(t).build()?.install(compute),
        None => compute(),
    };
    let report = match report {
        Ok(r) => r,
        Err(e @ (ClassifyError::MethodMismatch { .. } | ClassifyError::CatalogIncomplete { .. })) => {
            writeln!(out, "{e}")?;
            return Ok(Outcome::Fails);
        }
        Err(e) => return classify_outcome(e),
    };
    if json {
        emit_json(out, &serde_json::to_value(&report)?)?;
    } else {
        write!(out, "{}", report.render_text())?;
    }
    Ok(Outcome::Holds)
}

fn file_stem(name: &str) -> String {
    let mut s: String =
        name.chars().map(|c| if c.is_ascii_alphanumeric() { c.to_ascii_lowercase() } else { '_' }).collect();
    while s.contains("__") {
        s = s.replace("__", "_");
    }
    s.trim_matches('_').to_string()
}

fn cmd_seed(dir: &Path, json: bool, out: &mut dyn Write) -> CmdResult {
    let mut written: Vec<String> = Vec::new();
    let mut record = |p: PathBuf| written.push(p.strip_prefix(dir).unwrap_or(&p).display().to_string());
    for sub in ["rings", "lattices", "exprs"] {
        fs::create_dir_all(dir.join(sub))?;
    }
    let mut rings = corpus::ring_corpus();
    rings.push(corpus::m2z2());
    for spec in &rings {
        let p = dir.join("rings").join(format!("{}.json", file_stem(&spec.name())));
        write_ring_spec(&p, spec)?;
        record(p);
    }
    let p = dir.join("lattices").join("non_bl5.json");
    write_lattice_file(&p, &corpus::non_bl_divisible())?;
    record(p);
    let (diamond, odot) = corpus::diamond_meet_tables();
    let file = LatticeFile {
        size: diamond.size(),
        labels: diamond.labels().map(|s| s.to_vec()),
        leq: diamond.leq_matrix().into_iter().map(|r| r.into_iter().map(u8::from).collect()).collect(),
        odot,
        arrow: None,
    };
    let p = dir.join("lattices").join("diamond_meet.json");
    fs::write(&p, to_json_text(&file)? + "\n")?;
    record(p);
    let mut exprs: Vec<(String, AlgebraExpr)> = vec![
        ("idz4".into(), AlgebraExpr::zn(4)),
        ("idz9".into(), AlgebraExpr::zn(9)),
        ("idz2".into(), AlgebraExpr::zn(2)),
        ("idz2xz2".into(), AlgebraExpr::zn_product(&[2, 2])),
    ];
    for (k, e) in bl_structure_listing().into_iter().enumerate() {
        exprs.push((format!("bl{}_{:02}", e.n, k + 1), e.expr));
    }
    for (k, e) in non_bl_expressions().into_iter().enumerate() {
        exprs.push((format!("div{}_{:02}", e.n, k + 1), e.expr));
    }
    exprs.push(("non_bl5_literal".into(), AlgebraExpr::literal("../lattices/non_bl5.json")));
    for (name, e) in &exprs {
        let p = dir.join("exprs").join(format!("{name}.json"));
        write_expr(&p, e)?;
        record(p);
    }
    if json {
        emit_json(out, &json!({ "dir": dir.display().to_string(), "files": written }))?;
    } else {
        writeln!(out, "wrote {} files to {}", written.len(), dir.display())?;
        for w in &written {
            writeln!(out, "  {w}")?;
        }
    }
    Ok(Outcome::Holds)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("reslat").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn unknown_subcommand_is_invalid_input() {
        let (code, _, err) = run_args(&["frobnicate"]);
        assert_eq!(code, 2);
        assert!(!err.is_empty());
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("enumerate"));
    }

    #[test]
    fn missing_file_is_invalid_input() {
        let (code, _, err) = run_args(&["check", "/nonexistent/x.json"]);
        assert_eq!(code, 2);
        assert!(err.contains("nonexistent"));
    }

    #[test]
    fn file_stems() {
        assert_eq!(file_stem("Z2[X]/(X^2)"), "z2_x_x_2");
        assert_eq!(file_stem("Z2xZ4"), "z2xz4");
    }
}
