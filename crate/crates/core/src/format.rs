//! The `.td` diagram file format and report rendering.
//!
//! ```text
//! td 1
//! # comment
//! name CP2
//! surface 1 0
//! params 1 0 0 0
//! alpha 1 0
//! beta 0 1
//! gamma 1 1
//! ```
//!
//! Curve lines hold a `;`-separated list of vectors, each a
//! whitespace-separated list of integers of length `2g + max(b − 1, 0)`.
//! A curve line with nothing after the keyword is an empty family.
//!
//! Structured reports are `key = value` lines. The first line is
//! `schema = trisect-report/1` (or `trisect-verdict/1`); lists are
//! comma-separated and matrices are rows separated by `;`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use thiserror::Error;

use crate::diagram::{validate_diagram, CurveClass, Diagram, DiagramParams, FamilyLabel, SurfaceModel, ValidationReport};
use crate::invariants::{InvariantReport, Verdict};
use crate::linalg::IntegerMatrix;
use crate::ops::HandleSummary;

pub const FORMAT_VERSION: &str = "1";
pub const REPORT_SCHEMA: &str = "trisect-report/1";
pub const VERDICT_SCHEMA: &str = "trisect-verdict/1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}, column {column}: {context} has {found} coordinates, expected {expected}")]
    Shape {
        line: usize,
        column: usize,
        context: String,
        expected: usize,
        found: usize,
    },
    #[error("diagram fails validation:\n{}", render_violations(.0))]
    Validation(ValidationReport),
}

fn render_violations(r: &ValidationReport) -> String {
    r.violations
        .iter()
        .map(|v| format!("  {v}"))
        .collect::<Vec<_>>()
        .join("\n")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Structured,
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

/// Splits on whitespace, recording 1-based character columns.
fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (col, (idx, ch)) in line.char_indices().enumerate() {
        if ch.is_whitespace() {
            if let Some((s, c)) = start.take() {
                out.push(Token { text: &line[s..idx], column: c + 1 });
            }
        } else if start.is_none() {
            start = Some((idx, col));
        }
    }
    if let Some((s, c)) = start {
        out.push(Token { text: &line[s..], column: c + 1 });
    }
    out
}

/// Everything before the first `#` that is not escaped as `\#`.
fn strip_comment(raw: &str) -> &str {
    let bytes = raw.as_bytes();
    (0..bytes.len())
        .find(|&i| bytes[i] == b'#' && (i == 0 || bytes[i - 1] != b'\\'))
        .map_or(raw, |i| &raw[..i])
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn parse_usize(line: usize, t: &Token<'_>) -> Result<usize, FormatError> {
    t.text
        .parse()
        .map_err(|_| syntax(line, t.column, format!("expected a nonnegative integer, found {:?}", t.text)))
}

fn parse_counts(line: usize, toks: &[Token<'_>], n: usize, keyword_end: usize) -> Result<Vec<usize>, FormatError> {
    if toks.len() != n {
        let column = toks.get(n).map_or(keyword_end, |t| t.column);
        return Err(syntax(line, column, format!("expected {n} integers, found {}", toks.len())));
    }
    toks.iter().map(|t| parse_usize(line, t)).collect()
}

struct CurveLine {
    line: usize,
    vectors: Vec<(usize, Vec<BigInt>)>,
}

fn parse_curves(line: usize, rest: &str, rest_col: usize) -> Result<CurveLine, FormatError> {
    let mut vectors = Vec::new();
    if rest.trim().is_empty() {
        return Ok(CurveLine { line, vectors });
    }
    let mut col = rest_col;
    for chunk in rest.split(';') {
        let toks = tokens(chunk);
        if toks.is_empty() {
            return Err(syntax(line, col, "empty vector between ';' separators"));
        }
        let mut v = Vec::with_capacity(toks.len());
        for t in &toks {
            let x: BigInt = t
                .text
                .parse()
                .map_err(|_| syntax(line, col + t.column - 1, format!("expected an integer, found {:?}", t.text)))?;
            v.push(x);
        }
        vectors.push((col + toks[0].column - 1, v));
        col += chunk.chars().count() + 1;
    }
    Ok(CurveLine { line, vectors })
}

/// Parses a `.td` document. Only structure and vector lengths are checked.
pub fn parse_diagram(text: &str) -> Result<Diagram, FormatError> {
    let mut version_seen = false;
    let mut name: Option<String> = None;
    let mut surface: Option<(usize, SurfaceModel)> = None;
    let mut params: Option<(usize, DiagramParams)> = None;
    let mut curves: [Option<CurveLine>; 3] = [None, None, None];
    let mut last_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let content = strip_comment(raw);
        let toks = tokens(content);
        let Some(kw) = toks.first() else { continue };
        let kw_end = kw.column + kw.text.chars().count();
        if !version_seen {
            if kw.text != "td" {
                return Err(syntax(line, kw.column, "expected version line `td 1`"));
            }
            match toks.get(1) {
                Some(t) if t.text == FORMAT_VERSION && toks.len() == 2 => {}
                Some(t) => return Err(syntax(line, t.column, format!("unsupported format version {:?}", t.text))),
                None => return Err(syntax(line, kw_end, "missing format version")),
            }
            version_seen = true;
            continue;
        }
        let dup = |what: &str| syntax(line, kw.column, format!("duplicate {what} line"));
        // Byte offset just after the keyword, for the free-text remainder.
        let rest_byte = content
            .char_indices()
            .nth(kw_end - 1)
            .map_or(content.len(), |(b, _)| b);
        let rest = &content[rest_byte..];
        match kw.text {
            "name" => {
                if name.is_some() {
                    return Err(dup("name"));
                }
                name = Some(rest.trim().replace("\\#", "#"));
            }
            "surface" => {
                if surface.is_some() {
                    return Err(dup("surface"));
                }
                let v = parse_counts(line, &toks[1..], 2, kw_end)?;
                surface = Some((line, SurfaceModel::new(v[0], v[1])));
            }
            "params" => {
                if params.is_some() {
                    return Err(dup("params"));
                }
                let v = parse_counts(line, &toks[1..], 4, kw_end)?;
                let p = DiagramParams::relative(v[0], v[1], v[2], v[3]);
                if p.is_closed() && p.p != 0 {
                    return Err(syntax(line, toks[3].column, "closed parameters (b = 0) must have p = 0"));
                }
                params = Some((line, p));
            }
            "alpha" | "beta" | "gamma" => {
                let label: FamilyLabel = kw.text.parse().expect("keyword is a family label");
                let slot = &mut curves[label as usize];
                if slot.is_some() {
                    return Err(dup(kw.text));
                }
                *slot = Some(parse_curves(line, rest, kw_end)?);
            }
            other => return Err(syntax(line, kw.column, format!("unknown keyword {other:?}"))),
        }
    }

    let end = last_line + 1;
    if !version_seen {
        return Err(syntax(end, 1, "empty document: expected version line `td 1`"));
    }
    let (pline, params) = params.ok_or_else(|| syntax(end, 1, "missing params line"))?;
    let (sline, surface) = surface.ok_or_else(|| syntax(end, 1, "missing surface line"))?;
    if surface.genus() != params.g || surface.boundary_count() != params.b {
        return Err(syntax(
            sline.max(pline),
            1,
            format!(
                "surface ({} {}) does not match params {params}",
                surface.genus(),
                surface.boundary_count()
            ),
        ));
    }
    let expected = surface.h1_rank();
    let mut fams: [Vec<CurveClass>; 3] = Default::default();
    for label in FamilyLabel::ALL {
        let cl = curves[label as usize]
            .take()
            .ok_or_else(|| syntax(end, 1, format!("missing {label} line")))?;
        for (idx, (column, v)) in cl.vectors.into_iter().enumerate() {
            if v.len() != expected {
                return Err(FormatError::Shape {
                    line: cl.line,
                    column,
                    context: format!("{label} curve {}", idx + 1),
                    expected,
                    found: v.len(),
                });
            }
            fams[label as usize].push(CurveClass::new(v));
        }
    }
    let [a, b, c] = fams;
    let name = name.filter(|n| !n.is_empty()).unwrap_or_else(|| "unnamed".to_string());
    Diagram::new(name, surface, params, a, b, c).map_err(|e| syntax(end, 1, e.to_string()))
}

/// [`parse_diagram`] followed by [`validate_diagram`].
pub fn parse_diagram_strict(text: &str) -> Result<Diagram, FormatError> {
    let d = parse_diagram(text)?;
    let report = validate_diagram(&d);
    if report.ok() {
        Ok(d)
    } else {
        Err(FormatError::Validation(report))
    }
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn render_family(d: &Diagram, label: FamilyLabel) -> String {
    let vs: Vec<String> = d
        .family(label)
        .members()
        .iter()
        .map(|c| join(c.coords(), " "))
        .collect();
    if vs.is_empty() {
        label.as_str().to_string()
    } else {
        format!("{} {}", label.as_str(), vs.join("; "))
    }
}

pub fn render_diagram(d: &Diagram) -> String {
    let p = d.params();
    let name = d.name().replace(['\n', '\r'], " ").replace('#', "\\#");
    let mut out = format!(
        "td {FORMAT_VERSION}\nname {}\nsurface {} {}\nparams {} {} {} {}\n",
        name.trim(),
        d.surface().genus(),
        d.surface().boundary_count(),
        p.g,
        p.k,
        p.p,
        p.b
    );
    for label in FamilyLabel::ALL {
        out.push_str(&render_family(d, label));
        out.push('\n');
    }
    out
}

/// `#` comment lines describing the handles added by capping.
pub fn render_handle_summary(h: &HandleSummary) -> String {
    let mut out = format!(
        "# handles: {} two-handle(s), {} four-handle(s)\n",
        h.two_handle_count, h.four_handle_count
    );
    for (i, c) in h.attaching_classes.iter().enumerate() {
        let _ = writeln!(out, "# two-handle {} attached along {}", i + 1, join(c, " "));
    }
    out
}

pub fn render_matrix_rows(m: &IntegerMatrix) -> String {
    (0..m.rows())
        .map(|i| join(m.row(i), " "))
        .collect::<Vec<_>>()
        .join("; ")
}

fn torsion_text(t: &[BigInt]) -> String {
    if t.is_empty() {
        "none".into()
    } else {
        t.iter().map(|x| format!("Z/{x}")).collect::<Vec<_>>().join(" + ")
    }
}

fn structured_fields(r: &InvariantReport, prefix: &str, out: &mut String) {
    let p = r.params;
    let mut kv = |k: &str, v: String| {
        let _ = writeln!(out, "{prefix}{k} = {v}");
    };
    kv("name", r.name.clone());
    kv("params", format!("{},{},{},{}", p.g, p.k, p.p, p.b));
    kv("euler", r.euler.to_string());
    kv("b1", r.b1.to_string());
    kv("h1_torsion", join(&r.h1_torsion, ","));
    kv("b2", r.b2.to_string());
    kv("b3", r.b3.to_string());
    kv("signature", r.signature.to_string());
    kv("parity", r.parity.to_string());
    kv("definiteness", r.definiteness.to_string());
    kv("form_rank", r.form_matrix.rows().to_string());
    kv("form", render_matrix_rows(&r.form_matrix));
}

pub fn format_report(r: &InvariantReport, mode: ReportFormat) -> String {
    match mode {
        ReportFormat::Structured => {
            let mut out = format!("schema = {REPORT_SCHEMA}\n");
            structured_fields(r, "", &mut out);
            out
        }
        ReportFormat::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "{} {}", r.name, r.params);
            let _ = writeln!(out, "  euler characteristic  {}", r.euler);
            let _ = writeln!(out, "  H1                    Z^{} torsion {}", r.b1, torsion_text(&r.h1_torsion));
            let _ = writeln!(out, "  betti numbers         b1 = {}, b2 = {}, b3 = {}", r.b1, r.b2, r.b3);
            let _ = writeln!(out, "  intersection form     [{}]", render_matrix_rows(&r.form_matrix));
            let _ = writeln!(
                out,
                "  signature {}, {}, {}",
                r.signature, r.parity, r.definiteness
            );
            out
        }
    }
}

pub fn format_verdict(v: &Verdict, mode: ReportFormat) -> String {
    let witness = v.witness.map_or("none", |w| w.as_str());
    match mode {
        ReportFormat::Structured => {
            let mut out = format!("schema = {VERDICT_SCHEMA}\nverdict = {}\nwitness = {witness}\n", v.value);
            if let Some((a, b)) = &v.reports {
                structured_fields(a, "left.", &mut out);
                structured_fields(b, "right.", &mut out);
            }
            out
        }
        ReportFormat::Text => {
            let mut out = format!("{} (witness: {witness})\n", v.value);
            if let Some((a, b)) = &v.reports {
                out.push_str(&format_report(a, ReportFormat::Text));
                out.push_str(&format_report(b, ReportFormat::Text));
            }
            out
        }
    }
}

/// Human-readable validation outcome, one violation per line.
pub fn format_validation(name: &str, r: &ValidationReport) -> String {
    if r.ok() {
        format!("{name}: OK\n")
    } else {
        let mut out = format!("{name}: INVALID ({} violation(s))\n", r.violations.len());
        for v in &r.violations {
            let _ = writeln!(out, "  {v}");
        }
        out
    }
}
