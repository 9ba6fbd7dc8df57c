//! Command-line front end. The `trisect` binary forwards to [`run`].
//!
//! Diagram arguments are resolved in order as an existing file path, `-`
//! for standard input, a built-in catalog name, and finally
//! `$TRISECT_CATALOG_DIR/<NAME>.td`.
//!
//! Exit codes: 0 success; 1 validation failure, failed expectation or
//! operation error; 2 parse or shape error; 3 internal inconsistency.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::catalog::{catalog_entries, catalog_get};
use crate::diagram::{validate_diagram, Diagram, DiagramParams};
use crate::format::{
    format_report, format_validation, format_verdict, parse_diagram, parse_diagram_strict, render_diagram,
    render_handle_summary, FormatError, ReportFormat,
};
use crate::invariants::{distinguish, invariant_report, InvariantError, InvariantReport};
use crate::ops::{
    audit_boundary_sum_claim, audit_connected_sum_claim, audit_move_sequence, boundary_connected_sum, cap_all,
    cap_component, connected_sum, stabilize, stabilize_diagram, Direction, EulerAudit, MoveSequence, OpsError,
    StabilizationKind, StabilizationMove,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

pub const CATALOG_DIR_ENV: &str = "TRISECT_CATALOG_DIR";

#[derive(Parser, Debug)]
#[command(name = "trisect", version, about = "Homology-level toolkit for relative trisection diagrams")]
pub struct Cli {
    /// Reject diagrams that fail validation when they are read.
    #[arg(long, global = true)]
    pub strict: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Structured,
}

impl From<OutputFormat> for ReportFormat {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Text => ReportFormat::Text,
            OutputFormat::Structured => ReportFormat::Structured,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TypeArg {
    #[value(name = "I", alias = "1")]
    I,
    #[value(name = "II", alias = "2")]
    II,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the homological trisection conditions of each diagram.
    Validate {
        #[arg(required = true)]
        diagrams: Vec<String>,
    },
    /// Cap one boundary component, or all of them.
    Cap {
        diagram: String,
        /// 1-based boundary component to cap.
        #[arg(long, conflicts_with = "all")]
        component: Option<usize>,
        /// Cap every component (the default).
        #[arg(long)]
        all: bool,
    },
    /// Interior connected sum; at most one summand may have boundary.
    Sum(SumArgs),
    /// Boundary connected sum of two page-genus-zero relative diagrams.
    Bsum(SumArgs),
    /// Apply a relative stabilization to a diagram or to bare parameters.
    Stabilize {
        diagram: Option<String>,
        /// Parameters `g,k,p,b` instead of a diagram.
        #[arg(long, conflicts_with = "diagram")]
        params: Option<DiagramParams>,
        #[arg(long = "type", value_enum)]
        kind: TypeArg,
        #[arg(long)]
        destab: bool,
    },
    /// Check a count of stabilizations against a change of parameters.
    AuditMoves {
        #[arg(long)]
        start: DiagramParams,
        #[arg(long)]
        end: DiagramParams,
        /// `l+,l-,m+,m-`: Type I and Type II stabilizations and destabilizations.
        #[arg(long, default_value = "0,0,0,0")]
        counts: String,
    },
    /// Invariants of closed diagrams; page-genus-zero relative diagrams are capped first.
    Invariants {
        #[arg(required = true)]
        diagrams: Vec<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Try to show two diagrams are not diffeomorphism and handleslide equivalent.
    Distinguish {
        first: String,
        second: String,
        /// Exit with status 1 unless the verdict is DISTINCT.
        #[arg(long)]
        expect_distinct: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Built-in diagrams.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Args, Debug)]
pub struct SumArgs {
    left: String,
    right: String,
    /// Parameters `g,k,p,b` to audit against the Euler characteristic.
    #[arg(long)]
    claim: Option<DiagramParams>,
}

#[derive(Subcommand, Debug)]
pub enum CatalogAction {
    List,
    Show { name: String },
    /// Print entries as `.td`, or write `<NAME>.td` files into `--dir`.
    Export {
        #[arg(required = true)]
        names: Vec<String>,
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum CliError {
    Parse(String),
    Failure(String),
    Internal(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Failure(_) => EXIT_FAILURE,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Failure(m) | CliError::Internal(m) => m,
        }
    }
}

impl From<OpsError> for CliError {
    fn from(e: OpsError) -> Self {
        CliError::Failure(e.to_string())
    }
}

impl From<InvariantError> for CliError {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::InternalInconsistency(_) => CliError::Internal(e.to_string()),
            other => CliError::Failure(other.to_string()),
        }
    }
}

struct Input {
    label: String,
    source: Source,
}

enum Source {
    Text(String),
    Catalog(Diagram),
}

struct Session<'a> {
    strict: bool,
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Session<'_> {
    fn read(&mut self, arg: &str) -> Result<Input, CliError> {
        let path = Path::new(arg);
        if arg != "-" && path.is_file() {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{arg}: {e}")))?;
            return Ok(Input { label: arg.to_string(), source: Source::Text(text) });
        }
        if arg == "-" {
            if self.stdin_used {
                return Err(CliError::Parse("standard input can only be read once".into()));
            }
            self.stdin_used = true;
            let mut text = String::new();
            self.stdin
                .read_to_string(&mut text)
                .map_err(|e| CliError::Parse(format!("<stdin>: {e}")))?;
            return Ok(Input { label: "<stdin>".into(), source: Source::Text(text) });
        }
        if let Ok(e) = catalog_get(arg) {
            return Ok(Input { label: e.name.clone(), source: Source::Catalog(e.diagram) });
        }
        if let Some(dir) = std::env::var_os(CATALOG_DIR_ENV) {
            let p = Path::new(&dir).join(format!("{arg}.td"));
            if p.is_file() {
                let text = std::fs::read_to_string(&p)
                    .map_err(|e| CliError::Parse(format!("{}: {e}", p.display())))?;
                return Ok(Input { label: p.display().to_string(), source: Source::Text(text) });
            }
        }
        Err(CliError::Parse(format!(
            "{arg}: not a file, '-', a catalog name, or an entry of ${CATALOG_DIR_ENV}"
        )))
    }

    fn load(&mut self, arg: &str) -> Result<Diagram, CliError> {
        let input = self.read(arg)?;
        materialize(input, self.strict)
    }
}

fn materialize(input: Input, strict: bool) -> Result<Diagram, CliError> {
    let d = match input.source {
        Source::Catalog(d) => d,
        Source::Text(text) => {
            let parsed = if strict { parse_diagram_strict(&text) } else { parse_diagram(&text) };
            return parsed.map_err(|e| match e {
                FormatError::Validation(_) => CliError::Failure(format!("{}: {e}", input.label)),
                _ => CliError::Parse(format!("{}: {e}", input.label)),
            });
        }
    };
    if strict {
        let r = validate_diagram(&d);
        if !r.ok() {
            return Err(CliError::Failure(format!("{}: {}", input.label, FormatError::Validation(r))));
        }
    }
    Ok(d)
}

fn require_valid(d: &Diagram) -> Result<(), CliError> {
    let r = validate_diagram(d);
    if r.ok() {
        Ok(())
    } else {
        Err(CliError::Failure(format_validation(d.name(), &r).trim_end().to_string()))
    }
}

/// Invariants of a closed diagram or of the cap of a relative one.
pub fn capped_report(d: &Diagram) -> Result<InvariantReport, InvariantError> {
    if d.is_closed() {
        invariant_report(d)
    } else {
        let (capped, _) = cap_all(d)?;
        invariant_report(&capped)
    }
}

fn render_euler_audit(a: &EulerAudit) -> String {
    let verdict = |ok: bool| if ok { "PASS" } else { "FAIL" };
    let mut out = format!(
        "# euler audit ({}): summands force χ = {}\n# implemented {} has χ = {}: {}\n",
        a.operation,
        a.expected_euler,
        a.implemented,
        a.implemented_euler,
        verdict(a.implemented_passes())
    );
    if let (Some(c), Some(e), Some(ok)) = (a.claimed, a.claimed_euler, a.claim_passes()) {
        let _ = writeln!(out, "# claimed {c} has χ = {e}: {}", verdict(ok));
    }
    out
}

fn parse_counts(s: &str) -> Result<MoveSequence, CliError> {
    let v: Vec<usize> = s
        .split(',')
        .map(|x| x.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| CliError::Parse(format!("--counts {s:?}: expected four nonnegative integers l+,l-,m+,m-")))?;
    match v[..] {
        [l_plus, l_minus, m_plus, m_minus] => Ok(MoveSequence { l_plus, l_minus, m_plus, m_minus }),
        _ => Err(CliError::Parse(format!("--counts {s:?}: expected four integers, found {}", v.len()))),
    }
}

fn execute(cli: Cli, session: &mut Session<'_>, out: &mut String) -> Result<i32, CliError> {
    match cli.command {
        Command::Validate { diagrams } => {
            let inputs = diagrams.iter().map(|a| session.read(a)).collect::<Result<Vec<_>, _>>()?;
            let results: Vec<Result<(String, bool), CliError>> = inputs
                .into_par_iter()
                .map(|input| {
                    let label = input.label.clone();
                    let d = materialize(input, false)?;
                    let r = validate_diagram(&d);
                    Ok((format_validation(&label, &r), r.ok()))
                })
                .collect();
            let mut code = EXIT_OK;
            for r in results {
                match r {
                    Ok((text, ok)) => {
                        out.push_str(&text);
                        if !ok {
                            code = code.max(EXIT_FAILURE);
                        }
                    }
                    Err(e) => {
                        let _ = writeln!(out, "{}", e.message());
                        code = code.max(e.code());
                    }
                }
            }
            Ok(code)
        }
        Command::Cap { diagram, component, all: _ } => {
            let d = session.load(&diagram)?;
            match component {
                Some(c) => out.push_str(&render_diagram(&cap_component(&d, c)?)),
                None => {
                    let (capped, summary) = cap_all(&d)?;
                    out.push_str(&render_handle_summary(&summary));
                    out.push_str(&render_diagram(&capped));
                }
            }
            Ok(EXIT_OK)
        }
        Command::Sum(args) => sum_command(session, args, false, out),
        Command::Bsum(args) => sum_command(session, args, true, out),
        Command::Stabilize { diagram, params, kind, destab } => {
            let mv = StabilizationMove::new(
                match kind {
                    TypeArg::I => StabilizationKind::TypeI,
                    TypeArg::II => StabilizationKind::TypeII,
                },
                if destab { Direction::Destabilize } else { Direction::Stabilize },
            );
            match (diagram, params) {
                (_, Some(p)) => {
                    let _ = writeln!(out, "{}", stabilize(p, mv)?);
                }
                (Some(arg), None) => {
                    let d = session.load(&arg)?;
                    out.push_str(&render_diagram(&stabilize_diagram(&d, mv)?));
                }
                (None, None) => return Err(CliError::Parse("stabilize needs a diagram or --params".into())),
            }
            Ok(EXIT_OK)
        }
        Command::AuditMoves { start, end, counts } => {
            let seq = parse_counts(&counts)?;
            let a = audit_move_sequence(start, seq, end);
            let _ = writeln!(out, "start {}  end {}", a.start, a.end);
            for e in &a.equations {
                let _ = writeln!(
                    out,
                    "Δ{} = {:>3}  predicted {:>3}  {}",
                    e.quantity,
                    e.observed,
                    e.predicted,
                    if e.holds() { "ok" } else { "MISMATCH" }
                );
            }
            let _ = writeln!(out, "consistent = {}", a.consistent);
            if let (Some(d), Some(m)) = (a.defect, a.defect_matches) {
                let _ = writeln!(out, "defect 1-b-3p = {d}  (observed Δg matches: {m})");
            }
            Ok(if a.consistent { EXIT_OK } else { EXIT_FAILURE })
        }
        Command::Invariants { diagrams, format } => {
            let inputs = diagrams.iter().map(|a| session.read(a)).collect::<Result<Vec<_>, _>>()?;
            let strict = session.strict;
            let results: Vec<Result<String, CliError>> = inputs
                .into_par_iter()
                .map(|input| {
                    let d = materialize(input, strict)?;
                    require_valid(&d)?;
                    Ok(format_report(&capped_report(&d)?, format.into()))
                })
                .collect();
            let mut code = EXIT_OK;
            for (i, r) in results.into_iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                match r {
                    Ok(text) => out.push_str(&text),
                    Err(e) => {
                        let _ = writeln!(out, "error: {}", e.message());
                        code = code.max(e.code());
                    }
                }
            }
            Ok(code)
        }
        Command::Distinguish { first, second, expect_distinct, format } => {
            let a = session.load(&first)?;
            let b = session.load(&second)?;
            require_valid(&a)?;
            require_valid(&b)?;
            let v = distinguish(&a, &b)?;
            out.push_str(&format_verdict(&v, format.into()));
            Ok(if expect_distinct && !v.is_distinct() { EXIT_FAILURE } else { EXIT_OK })
        }
        Command::Catalog { action } => {
            match action {
                CatalogAction::List => {
                    for e in catalog_entries() {
                        let _ = writeln!(out, "{:<12} {:<14} {}", e.name, e.provenance, e.diagram.params());
                    }
                }
                CatalogAction::Show { name } => {
                    let e = catalog_get(&name).map_err(|e| CliError::Failure(e.to_string()))?;
                    let _ = writeln!(out, "# provenance: {}\n# {}", e.provenance, e.notes);
                    out.push_str(&render_diagram(&e.diagram));
                }
                CatalogAction::Export { names, dir } => {
                    for name in names {
                        let e = catalog_get(&name).map_err(|e| CliError::Failure(e.to_string()))?;
                        let text = render_diagram(&e.diagram);
                        match &dir {
                            Some(dir) => {
                                std::fs::create_dir_all(dir)
                                    .map_err(|err| CliError::Failure(format!("{}: {err}", dir.display())))?;
                                let p = dir.join(format!("{}.td", e.name));
                                std::fs::write(&p, text)
                                    .map_err(|err| CliError::Failure(format!("{}: {err}", p.display())))?;
                                let _ = writeln!(out, "{}", p.display());
                            }
                            None => out.push_str(&text),
                        }
                    }
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn sum_command(session: &mut Session<'_>, args: SumArgs, boundary: bool, out: &mut String) -> Result<i32, CliError> {
    let l = session.load(&args.left)?;
    let r = session.load(&args.right)?;
    let (d, audit) = if boundary {
        (
            boundary_connected_sum(&l, &r)?,
            audit_boundary_sum_claim(l.params(), r.params(), args.claim),
        )
    } else {
        (connected_sum(&l, &r)?, audit_connected_sum_claim(l.params(), r.params(), args.claim))
    };
    out.push_str(&render_euler_audit(&audit));
    out.push_str(&render_diagram(&d));
    Ok(if audit.claim_passes() == Some(false) { EXIT_FAILURE } else { EXIT_OK })
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code. Normal output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let mut session = Session { strict: cli.strict, stdin, stdin_used: false };
    let mut buf = String::new();
    let code = match execute(cli, &mut session, &mut buf) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.code()
        }
    };
    let _ = out.write_all(buf.as_bytes());
    code
}
