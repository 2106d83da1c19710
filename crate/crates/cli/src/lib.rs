//! `skewpbw` command-line front end.
//!
//! [`run`] parses an argument vector, executes one command and returns
//! the text to print together with the process exit code:
//! 0 success, 1 usage, 2 parse, 3 inconsistent presentation, 4 internal.

mod error;
mod session;

use std::panic::{catch_unwind, AssertUnwindSafe};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use skewpbw::freemod::{module_buchberger, VectorPoly};
use skewpbw::graded::{
    associated_graded, naive_transfer_gap_demo, transfer_from_graded, transfer_to_graded, GradedAlgebra,
};
use skewpbw::groebner::{self, buchberger, buchberger_with_certificates, GroebnerBasis, ReduceMode};
use skewpbw::orders::induce_graded_order;
use skewpbw::{AlgebraPresentation, Polynomial};

pub use error::CliError;
pub use session::Session;

#[derive(Parser, Debug)]
#[command(name = "skewpbw", version, about = "Left Gröbner bases and graded transfer for skew PBW extensions")]
struct Cli {
    /// Presentation file, or the name of a bundled algebra
    /// (weyl1, weyl2, qplane_q2, qplane_q2_gf7, usl2, heisenberg, inconsistent_demo).
    #[arg(long, global = true, default_value = "weyl1")]
    algebra: String,
    /// Monomial order: deglex or degrevlex, optionally with a variable
    /// priority such as `deglex:y>x`.
    #[arg(long, global = true, default_value = "deglex")]
    order: String,
    /// Module order such as `top:deglex` or `pot:degrevlex`.
    #[arg(long, global = true)]
    module_order: Option<String>,
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report the cubic overlap check of the presentation.
    Check,
    /// Normal form of an expression.
    Normalize {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Product of two expressions, left times right.
    Mul {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Reduced left Gröbner basis of the given generators.
    Gb {
        #[arg(required = true)]
        generators: Vec<String>,
    },
    /// Divide an expression by a list of polynomials.
    Reduce {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(long, required = true, num_args = 1..)]
        by: Vec<String>,
        /// Stop at the first irreducible leading term.
        #[arg(long)]
        top: bool,
    },
    /// Decide membership in the left ideal generated by `--in`.
    Member {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(long = "in", required = true, num_args = 1..)]
        ideal: Vec<String>,
    },
    /// Principal symbol in the associated graded algebra.
    Symbol {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Presentation of the associated graded algebra.
    GrAlgebra,
    /// Generators of the graded ideal: symbols of a Gröbner basis.
    GrIdeal {
        #[arg(required = true)]
        generators: Vec<String>,
    },
    /// Transfer a Gröbner basis between the algebra and its graded algebra.
    Transfer {
        #[arg(long, value_enum)]
        direction: Direction,
        /// Generators (to-graded) or graded basis elements (from-graded).
        #[arg(required = true)]
        generators: Vec<String>,
        /// Lifts of the graded basis elements (from-graded only).
        #[arg(long, num_args = 1..)]
        lifts: Vec<String>,
    },
    /// Compare the graded ideal with the ideal of the generators' symbols.
    GapDemo {
        #[arg(required = true)]
        generators: Vec<String>,
    },
    /// Reduced Gröbner basis of a submodule of a free module.
    ModuleGb {
        /// Vector literals `[f1, ..., fm]`.
        #[arg(required = true)]
        vectors: Vec<String>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Direction {
    ToGraded,
    FromGraded,
}

/// What a command prints and how the process exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

struct Report {
    text: String,
    fields: Map<String, Value>,
}

impl Report {
    fn new() -> Self {
        Report { text: String::new(), fields: Map::new() }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn set(&mut self, key: &str, value: Value) {
        self.fields.insert(key.to_string(), value);
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Check => "check",
        Command::Normalize { .. } => "normalize",
        Command::Mul { .. } => "mul",
        Command::Gb { .. } => "gb",
        Command::Reduce { .. } => "reduce",
        Command::Member { .. } => "member",
        Command::Symbol { .. } => "symbol",
        Command::GrAlgebra => "gr-algebra",
        Command::GrIdeal { .. } => "gr-ideal",
        Command::Transfer { .. } => "transfer",
        Command::GapDemo { .. } => "gap-demo",
        Command::ModuleGb { .. } => "module-gb",
    }
}

/// Runs one invocation; `args[0]` is the program name.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                CommandResult { stdout: rendered, stderr: String::new(), exit_code: 0 }
            } else {
                CommandResult { stdout: String::new(), stderr: rendered, exit_code: 1 }
            };
        }
    };
    let json_mode = cli.json;
    let name = command_name(&cli.command);
    let outcome = catch_unwind(AssertUnwindSafe(|| execute(&cli))).unwrap_or_else(|panic| {
        let msg = panic
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "unknown panic".into());
        Err(CliError::Internal(msg))
    });
    match outcome {
        Ok((session, report)) => {
            let stdout = if json_mode {
                let mut doc = Map::new();
                doc.insert("status".into(), json!("ok"));
                doc.insert("command".into(), json!(name));
                doc.insert("algebra".into(), json!(session.algebra_name));
                doc.insert("order".into(), json!(session.order.to_string()));
                doc.extend(report.fields);
                format!("{}\n", serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable"))
            } else {
                report.text
            };
            CommandResult { stdout, stderr: String::new(), exit_code: 0 }
        }
        Err(e) => {
            let code = e.exit_code();
            if json_mode {
                let mut doc = e.to_json();
                doc["command"] = json!(name);
                let stdout = format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"));
                CommandResult { stdout, stderr: String::new(), exit_code: code }
            } else {
                CommandResult { stdout: String::new(), stderr: format!("error: {}\n", e.message()), exit_code: code }
            }
        }
    }
}

fn execute(cli: &Cli) -> Result<(Session, Report), CliError> {
    let mut s = Session::open(&cli.algebra, &cli.order, cli.module_order.as_deref())?;
    let report = match &cli.command {
        Command::Check => check(&mut s),
        Command::Normalize { expr } => {
            let f = s.poly(expr)?;
            single(&s, "result", &f)
        }
        Command::Mul { left, right } => {
            let f = &s.poly(left)? * &s.poly(right)?;
            single(&s, "result", &f)
        }
        Command::Gb { generators } => gb(&mut s, generators),
        Command::Reduce { f, by, top } => reduce(&mut s, f, by, *top),
        Command::Member { f, ideal } => member(&mut s, f, ideal),
        Command::Symbol { expr } => symbol(&s, expr),
        Command::GrAlgebra => Ok(gr_algebra(&s)),
        Command::GrIdeal { generators } => gr_ideal(&mut s, generators),
        Command::Transfer { direction: Direction::ToGraded, generators, .. } => to_graded(&mut s, generators),
        Command::Transfer { direction: Direction::FromGraded, generators, lifts } => from_graded(&mut s, generators, lifts),
        Command::GapDemo { generators } => gap_demo(&mut s, generators),
        Command::ModuleGb { vectors } => module_gb(&mut s, vectors),
    }?;
    Ok((s, report))
}

fn shown(s: &Session, fs: &[Polynomial]) -> Vec<String> {
    fs.iter().map(|f| s.show(f)).collect()
}

fn single(s: &Session, key: &str, f: &Polynomial) -> Result<Report, CliError> {
    let mut r = Report::new();
    let text = s.show(f);
    r.line(&text);
    r.set(key, json!(text));
    Ok(r)
}

fn list_lines(r: &mut Report, items: &[String]) {
    for item in items {
        r.line(format!("  {item}"));
    }
}

fn check(s: &mut Session) -> Result<Report, CliError> {
    let alg = s.algebra.clone();
    let failures = alg.consistency_check();
    let names = alg.var_names();
    let mut r = Report::new();
    let mut items = Vec::new();
    for fail in &failures {
        let (i, j, k) = fail.triple;
        let word = format!("{}*{}*{}", names[k], names[j], names[i]);
        let (a, b, d) = (s.show(&fail.upper_first), s.show(&fail.lower_first), s.show(&fail.difference()));
        r.line(format!("overlap {word}: {a} vs {b} (difference {d})"));
        items.push(json!({ "word": word, "upper_first": a, "lower_first": b, "difference": d }));
    }
    r.set("consistent", json!(failures.is_empty()));
    r.set("failures", Value::Array(items));
    if failures.is_empty() {
        r.line("consistent");
        Ok(r)
    } else {
        Err(CliError::Inconsistent(format!("{}{} overlap failure(s)", r.text, failures.len())))
    }
}

fn gb(s: &mut Session, generators: &[String]) -> Result<Report, CliError> {
    s.require_consistent()?;
    let fs = s.polys(generators)?;
    let basis = buchberger(&s.algebra, &fs, &s.order)?;
    let mut r = Report::new();
    let items = shown(s, basis.generators());
    for item in &items {
        r.line(item);
    }
    r.set("basis", json!(items));
    r.set("verified", json!(basis.is_verified()));
    r.set("reduced", json!(basis.is_reduced()));
    Ok(r)
}

fn cofactor_lines(r: &mut Report, s: &Session, generators: &[String], cofactors: &[Polynomial]) -> Value {
    let mut items = Vec::new();
    for (g, q) in generators.iter().zip(cofactors) {
        let q = s.show(q);
        r.line(format!("  ({q}) * ({g})"));
        items.push(json!({ "generator": g, "cofactor": q }));
    }
    Value::Array(items)
}

fn reduce(s: &mut Session, f: &str, by: &[String], top: bool) -> Result<Report, CliError> {
    s.require_consistent()?;
    let poly = s.poly(f)?;
    let divisors = s.polys(by)?;
    if divisors.iter().any(Polynomial::is_zero) {
        return Err(CliError::Usage("divisors must be nonzero".into()));
    }
    let mode = if top { ReduceMode::Top } else { ReduceMode::Full };
    let trace = groebner::reduce(&poly, &divisors, &s.order, mode);
    let shown_by = shown(s, &divisors);
    let mut r = Report::new();
    let remainder = s.show(&trace.remainder);
    r.line(format!("remainder: {remainder}"));
    r.line("cofactors:");
    let cof = cofactor_lines(&mut r, s, &shown_by, &trace.cofactors);
    r.set("remainder", json!(remainder));
    r.set("cofactors", cof);
    Ok(r)
}

fn member(s: &mut Session, f: &str, ideal: &[String]) -> Result<Report, CliError> {
    s.require_consistent()?;
    let poly = s.poly(f)?;
    let gens = s.polys(ideal)?;
    let (basis, certs) = buchberger_with_certificates(&s.algebra, &gens, &s.order)?;
    let (is_member, trace) = groebner::ideal_membership(&poly, &basis)?;
    let mut r = Report::new();
    r.line(format!("member: {is_member}"));
    let basis_items = shown(s, basis.generators());
    r.line("basis:");
    list_lines(&mut r, &basis_items);
    let remainder = s.show(&trace.remainder);
    r.line(format!("remainder: {remainder}"));
    r.set("member", json!(is_member));
    r.set("basis", json!(basis_items));
    r.set("remainder", json!(remainder));
    if is_member {
        // f = sum_k q_k g_k and g_k = sum_i c_ki f_i
        let mut combined = vec![Polynomial::zero(&s.algebra); gens.len()];
        for (q, row) in trace.cofactors.iter().zip(&certs) {
            for (slot, c) in combined.iter_mut().zip(row) {
                *slot = &*slot + &(q * c);
            }
        }
        r.line("certificate:");
        let shown_gens = shown(s, &gens);
        let cert = cofactor_lines(&mut r, s, &shown_gens, &combined);
        r.set("certificate", cert);
    } else {
        r.set("certificate", Value::Null);
    }
    Ok(r)
}

fn graded(s: &Session) -> GradedAlgebra {
    associated_graded(&s.algebra)
}

fn symbol(s: &Session, expr: &str) -> Result<Report, CliError> {
    let f = s.poly(expr)?;
    let gr = graded(s);
    let eta = gr.symbol(&f)?;
    let mut r = Report::new();
    let text = eta.poly().format_with(&induce_graded_order(&s.order));
    r.line(&text);
    r.set("symbol", json!(text));
    r.set("degree", json!(eta.degree()));
    Ok(r)
}

fn gr_algebra(s: &Session) -> Report {
    let gr = graded(s);
    let g: &AlgebraPresentation = gr.presentation();
    let mut r = Report::new();
    let text = g.to_text();
    r.text.push_str(&text);
    r.set("presentation", json!(text));
    r.set("quasi_commutative", json!(g.is_quasi_commutative()));
    r
}

fn graded_items(s: &Session, basis: &GroebnerBasis) -> Vec<String> {
    let o = induce_graded_order(&s.order);
    basis.generators().iter().map(|g| g.format_with(&o)).collect()
}

fn gr_ideal(s: &mut Session, generators: &[String]) -> Result<Report, CliError> {
    s.require_consistent()?;
    let fs = s.polys(generators)?;
    let basis = buchberger(&s.algebra, &fs, &s.order)?;
    let gr = graded(s);
    let graded_basis = transfer_to_graded(&basis, &gr)?;
    let mut r = Report::new();
    let items = graded_items(s, &graded_basis);
    for item in &items {
        r.line(item);
    }
    r.set("basis", json!(shown(s, basis.generators())));
    r.set("graded_basis", json!(items));
    Ok(r)
}

fn to_graded(s: &mut Session, generators: &[String]) -> Result<Report, CliError> {
    s.require_consistent()?;
    let fs = s.polys(generators)?;
    let basis = buchberger(&s.algebra, &fs, &s.order)?;
    let graded_basis = transfer_to_graded(&basis, &graded(s))?;
    let mut r = Report::new();
    let source = shown(s, basis.generators());
    let items = graded_items(s, &graded_basis);
    r.line("basis:");
    list_lines(&mut r, &source);
    r.line("graded basis:");
    list_lines(&mut r, &items);
    r.line(format!("verified: {}", graded_basis.is_verified()));
    r.set("direction", json!("to-graded"));
    r.set("basis", json!(source));
    r.set("graded_basis", json!(items));
    r.set("verified", json!(graded_basis.is_verified()));
    Ok(r)
}

fn from_graded(s: &mut Session, generators: &[String], lifts: &[String]) -> Result<Report, CliError> {
    s.require_consistent()?;
    if lifts.is_empty() {
        return Err(CliError::Usage("from-graded needs --lifts".into()));
    }
    let gr = graded(s);
    let graded_order = induce_graded_order(&s.order);
    let gbar = generators
        .iter()
        .map(|t| s.poly_in(t, gr.presentation()))
        .collect::<Result<Vec<_>, _>>()?;
    let gbar = GroebnerBasis::checked(gr.presentation(), gbar, graded_order);
    if !gbar.is_verified() {
        return Err(CliError::Usage("graded elements do not form a Gröbner basis".into()));
    }
    let lifted = s.polys(lifts)?;
    let basis = transfer_from_graded(&gr, &gbar, &lifted, &s.order)?;
    let mut r = Report::new();
    let items = shown(s, basis.generators());
    let graded_shown = graded_items(s, &gbar);
    r.line("graded basis:");
    list_lines(&mut r, &graded_shown);
    r.line("basis:");
    list_lines(&mut r, &items);
    r.line(format!("verified: {}", basis.is_verified()));
    r.set("direction", json!("from-graded"));
    r.set("basis", json!(items));
    r.set("graded_basis", json!(graded_shown));
    r.set("verified", json!(basis.is_verified()));
    Ok(r)
}

fn gap_demo(s: &mut Session, generators: &[String]) -> Result<Report, CliError> {
    s.require_consistent()?;
    let fs = s.polys(generators)?;
    let gr = graded(s);
    let report = naive_transfer_gap_demo(&gr, &fs, &s.order)?;
    let o = induce_graded_order(&s.order);
    let basis = shown(s, report.basis.generators());
    let graded_basis: Vec<String> = report.graded_basis.iter().map(|h| h.poly().format_with(&o)).collect();
    let naive_generators: Vec<String> = report.naive_generators.iter().map(|h| h.poly().format_with(&o)).collect();
    let naive_basis: Vec<String> = report.naive_basis.generators().iter().map(|g| g.format_with(&o)).collect();
    let shown_fs = shown(s, &fs);

    let mut r = Report::new();
    r.line("Groebner basis of I:");
    list_lines(&mut r, &basis);
    r.line("certificates (basis element = sum of cofactor * generator):");
    let mut certificates = Vec::new();
    for (g, row) in basis.iter().zip(&report.certificates) {
        r.line(format!("  {g} ="));
        let terms: Vec<Value> = shown_fs
            .iter()
            .zip(row)
            .map(|(f, q)| {
                let q = s.show(q);
                r.line(format!("    ({q}) * ({f})"));
                json!({ "generator": f, "cofactor": q })
            })
            .collect();
        certificates.push(json!({ "element": g, "terms": terms }));
    }
    r.line("Gr(I) generated by:");
    list_lines(&mut r, &graded_basis);
    r.line("symbols of the generators:");
    list_lines(&mut r, &naive_generators);
    r.line("Groebner basis of the ideal they generate:");
    list_lines(&mut r, &naive_basis);
    let mut gaps = Vec::new();
    if report.gap_elements.is_empty() {
        r.line("no gap: Gr(I) equals the ideal of the symbols");
    } else {
        r.line("in Gr(I) but not in the ideal of the symbols:");
        for gap in &report.gap_elements {
            let sym = gap.symbol.poly().format_with(&o);
            let rem = gap.naive_remainder.format_with(&o);
            r.line(format!("  {sym} (normal form {rem})"));
            gaps.push(json!({ "symbol": sym, "naive_remainder": rem, "basis_index": gap.index }));
        }
    }
    r.set("basis", json!(basis));
    r.set("graded_basis", json!(graded_basis));
    r.set("naive_generators", json!(naive_generators));
    r.set("naive_basis", json!(naive_basis));
    r.set("gap_elements", Value::Array(gaps));
    r.set("certificates", Value::Array(certificates));
    Ok(r)
}

fn module_gb(s: &mut Session, vectors: &[String]) -> Result<Report, CliError> {
    s.require_consistent()?;
    let vs: Vec<VectorPoly> = vectors.iter().map(|t| s.vector(t)).collect::<Result<_, _>>()?;
    let rank = vs[0].rank();
    if vs.iter().any(|v| v.rank() != rank) {
        return Err(CliError::Usage("vectors have different lengths".into()));
    }
    let mo = s.module_order(rank)?;
    let basis = module_buchberger(&s.algebra, &vs, &mo)?;
    let items: Vec<String> = basis.generators().iter().map(|v| v.format_with(&mo)).collect();
    let mut r = Report::new();
    for item in &items {
        r.line(item);
    }
    r.set("rank", json!(rank));
    r.set("module_order", json!(mo.to_string()));
    r.set("basis", json!(items));
    r.set("verified", json!(basis.is_verified()));
    Ok(r)
}
