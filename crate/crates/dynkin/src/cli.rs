//! Command-line surface: table generation, verification against the
//! embedded reference values, bound tables, root-system dumps, and
//! single-representation reports.
//!
//! Output discipline: stdout carries data, stderr carries diagnostics.
//! Three formats — aligned text, RFC-4180 CSV, and JSON with a
//! `schema_version` field and all big numbers as decimal strings. Every
//! renderer iterates ordered structures only, so identical invocations
//! produce byte-identical output.
//!
//! Exit codes: 0 success (and, for verifying commands, all comparisons
//! agree); 1 a verification or internal-agreement mismatch; 2 usage
//! errors (bad type, weight, scope, or flags); 3 a resource cap exceeded
//! in a computation that was explicitly required.

use std::fmt::Write as _;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::index::{fundamental_index_table_with, index_report, IndexReport, OracleMode};
use crate::reference::ReferenceKind;
use crate::report::{
    bounds_table, build_verification, BoundsRow, CheckResult, Scope, VerificationReport,
    SCHEMA_VERSION,
};
use crate::representation::DEFAULT_MASS_CAP;
use crate::rootsystem::{LieType, RootSystem, Weight};
use crate::serdes::{ratio_from_string, ratio_to_string};

/// Exact Dynkin indices of simple Lie algebra representations, computed
/// by two independent routes and audited against published tables.
#[derive(Debug, Parser)]
#[command(name = "dynkin", version, max_term_width = 100)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Aligned human-readable columns.
    Text,
    /// RFC-4180 CSV.
    Csv,
    /// One JSON object with a schema_version field.
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleArg {
    /// Always run the character-sum oracle; over-cap is a hard error.
    On,
    /// Never run the oracle.
    Off,
    /// Run the oracle only when the dimension is under the cap.
    Auto,
}

impl From<OracleArg> for OracleMode {
    fn from(a: OracleArg) -> OracleMode {
        match a {
            OracleArg::On => OracleMode::On,
            OracleArg::Off => OracleMode::Off,
            OracleArg::Auto => OracleMode::Auto,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Index table over the fundamental representations of one type.
    Table {
        /// Simple type, e.g. "E8" or "B5".
        #[arg(value_name = "TYPE")]
        lie_type: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, value_enum, default_value_t = OracleArg::Auto)]
        oracle: OracleArg,
        /// Total-mass cap for the oracle's weight systems.
        #[arg(long, default_value_t = DEFAULT_MASS_CAP)]
        cap: u64,
    },
    /// Verify computed tables against the embedded reference values.
    Verify {
        /// "all", "dtable", "bounds", a series letter ("B"), or a type ("E6").
        #[arg(value_name = "SCOPE", default_value = "all")]
        scope: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, value_enum, default_value_t = OracleArg::Auto)]
        oracle: OracleArg,
        #[arg(long, default_value_t = DEFAULT_MASS_CAP)]
        cap: u64,
    },
    /// The nine-row cokernel bound table (base and conditional improved).
    Bounds {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Root-system data for one type: roots, comarks, invariants.
    Roots {
        #[arg(value_name = "TYPE")]
        lie_type: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Full report for a single dominant highest weight.
    Index {
        #[arg(value_name = "TYPE")]
        lie_type: String,
        /// Comma-separated coordinates on the fundamental weights, e.g. "1,0,2".
        #[arg(value_name = "WEIGHT")]
        weight: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, value_enum, default_value_t = OracleArg::Auto)]
        oracle: OracleArg,
        #[arg(long, default_value_t = DEFAULT_MASS_CAP)]
        cap: u64,
        /// Also report the theta-bundle level under the (unproven)
        /// square-root hypothesis: orthogonal representations of even
        /// index contribute half their index.
        #[arg(long)]
        assume_sqrt: bool,
    },
}

/// Exit code for a failed computation: usage errors are 2, exceeding a
/// required cap is 3, and internal inconsistencies are 1 (a failed
/// verification of the crate's own invariants).
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::CapExceeded { .. } => 3,
        Error::InternalInconsistency(_) => 1,
        _ => 2,
    }
}

/// Executes a parsed command; returns rendered stdout and the exit code.
pub fn execute(cli: &Cli) -> Result<(String, i32)> {
    match &cli.command {
        Command::Table {
            lie_type,
            format,
            oracle,
            cap,
        } => cmd_table(lie_type, *format, (*oracle).into(), *cap),
        Command::Verify {
            scope,
            format,
            oracle,
            cap,
        } => cmd_verify(scope, *format, (*oracle).into(), *cap),
        Command::Bounds { format } => cmd_bounds(*format),
        Command::Roots { lie_type, format } => cmd_roots(lie_type, *format),
        Command::Index {
            lie_type,
            weight,
            format,
            oracle,
            cap,
            assume_sqrt,
        } => cmd_index(lie_type, weight, *format, (*oracle).into(), *cap, *assume_sqrt),
    }
}

/// Runs a parsed command to completion, printing stdout/stderr; returns
/// the process exit code.
pub fn main_with(cli: &Cli) -> i32 {
    match execute(cli) {
        Ok((out, code)) => {
            print!("{out}");
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn parse_type(s: &str) -> Result<LieType> {
    s.parse()
}

/// Parses "1,0,2" (commas, optional spaces) into a weight.
pub fn parse_weight(s: &str) -> Result<Weight> {
    let err = |reason: &str| Error::ParseWeight {
        input: s.to_string(),
        reason: reason.to_string(),
    };
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Err(err("empty coordinate list"));
    }
    trimmed
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<i64>()
                .map_err(|_| err(&format!("coordinate {:?} is not an integer", c.trim())))
        })
        .collect::<Result<Vec<i64>>>()
        .map(Weight::new)
}

// ---------------------------------------------------------------------------
// Shared entry-table rendering

const ENTRY_HEADERS: [&str; 10] = [
    "lie_type",
    "weight",
    "dim",
    "casimir",
    "index_closed",
    "index_oracle",
    "reference_value",
    "agree_internal",
    "agree_reference",
    "orthogonal",
];

fn weight_field(w: &Weight) -> String {
    w.coords()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn weight_from_field(s: &str) -> Result<Weight> {
    s.split_whitespace()
        .map(|c| {
            c.parse::<i64>().map_err(|_| Error::ParseWeight {
                input: s.to_string(),
                reason: format!("coordinate {c:?} is not an integer"),
            })
        })
        .collect::<Result<Vec<i64>>>()
        .map(Weight::new)
}

fn entry_fields(e: &IndexReport) -> [String; 10] {
    [
        e.lie_type.to_string(),
        weight_field(&e.lam),
        e.dim.to_string(),
        ratio_to_string(&e.casimir),
        e.index_closed.to_string(),
        e.index_oracle.as_ref().map(ratio_to_string).unwrap_or_default(),
        e.reference_value
            .as_ref()
            .map(BigInt::to_string)
            .unwrap_or_default(),
        e.agree_internal.to_string(),
        e.agree_reference.map(|b| b.to_string()).unwrap_or_default(),
        e.orthogonal.to_string(),
    ]
}

fn entry_from_fields(fields: &[String]) -> Result<IndexReport> {
    let bad = |what: &str| {
        Error::ParseWeight {
            input: fields.join(","),
            reason: format!("malformed {what} field in entry row"),
        }
    };
    if fields.len() != ENTRY_HEADERS.len() {
        return Err(bad("column count"));
    }
    let parse_flag = |s: &str| -> Result<Option<bool>> {
        match s {
            "" => Ok(None),
            "true" => Ok(Some(true)),
            "false" => Ok(Some(false)),
            _ => Err(bad("boolean")),
        }
    };
    Ok(IndexReport {
        lie_type: fields[0].parse()?,
        lam: weight_from_field(&fields[1])?,
        dim: BigInt::from_str(&fields[2]).map_err(|_| bad("dim"))?,
        casimir: ratio_from_string(&fields[3]).ok_or_else(|| bad("casimir"))?,
        index_closed: BigInt::from_str(&fields[4]).map_err(|_| bad("index_closed"))?,
        index_oracle: if fields[5].is_empty() {
            None
        } else {
            Some(ratio_from_string(&fields[5]).ok_or_else(|| bad("index_oracle"))?)
        },
        reference_value: if fields[6].is_empty() {
            None
        } else {
            Some(BigInt::from_str(&fields[6]).map_err(|_| bad("reference_value"))?)
        },
        agree_internal: parse_flag(&fields[7])?.ok_or_else(|| bad("agree_internal"))?,
        agree_reference: parse_flag(&fields[8])?,
        orthogonal: parse_flag(&fields[9])?.ok_or_else(|| bad("orthogonal"))?,
    })
}

fn entry_flags(e: &IndexReport) -> String {
    let mut flags = Vec::new();
    if !e.agree_internal {
        flags.push("ORACLE-MISMATCH");
    } else if e.index_oracle.is_none() {
        flags.push("skipped-oracle");
    } else {
        flags.push("oracle-ok");
    }
    match e.agree_reference {
        Some(false) => flags.push("REF-MISMATCH"),
        Some(true) => flags.push("ref-ok"),
        None => flags.push("no-ref"),
    }
    if e.orthogonal {
        flags.push("orthogonal");
    }
    flags.join(",")
}

fn align(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let render_row = |out: &mut String, cells: &[String]| {
        let mut line = String::new();
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            let _ = write!(line, "{:<width$}", cell, width = widths[i]);
        }
        out.push_str(line.trim_end());
        out.push('\n');
    };
    render_row(
        &mut out,
        &headers.iter().map(|h| h.to_string()).collect::<Vec<_>>(),
    );
    render_row(
        &mut out,
        &widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>(),
    );
    for row in rows {
        render_row(&mut out, row);
    }
    out
}

fn entries_text(entries: &[IndexReport]) -> String {
    let headers = [
        "type", "weight", "dim", "casimir", "index", "oracle", "reference", "flags",
    ];
    let rows: Vec<Vec<String>> = entries
        .iter()
        .map(|e| {
            vec![
                e.lie_type.to_string(),
                e.lam.to_string(),
                e.dim.to_string(),
                ratio_to_string(&e.casimir),
                e.index_closed.to_string(),
                e.index_oracle
                    .as_ref()
                    .map(ratio_to_string)
                    .unwrap_or_else(|| "-".to_string()),
                e.reference_value
                    .as_ref()
                    .map(BigInt::to_string)
                    .unwrap_or_else(|| "-".to_string()),
                entry_flags(e),
            ]
        })
        .collect();
    align(&headers, &rows)
}

/// Entry table as CSV (the `table` command's machine format).
pub fn entries_to_csv(entries: &[IndexReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(ENTRY_HEADERS).expect("csv write");
    for e in entries {
        w.write_record(entry_fields(e)).expect("csv write");
    }
    String::from_utf8(w.into_inner().expect("csv flush")).expect("csv utf8")
}

/// Parses a CSV entry table back; exact inverse of [`entries_to_csv`].
pub fn entries_from_csv(s: &str) -> Result<Vec<IndexReport>> {
    let mut r = csv::Reader::from_reader(s.as_bytes());
    let mut out = Vec::new();
    for rec in r.records() {
        let rec = rec.map_err(|e| Error::ParseWeight {
            input: "csv".to_string(),
            reason: e.to_string(),
        })?;
        let fields: Vec<String> = rec.iter().map(str::to_string).collect();
        out.push(entry_from_fields(&fields)?);
    }
    Ok(out)
}

fn entries_json_value(entries: &[IndexReport]) -> serde_json::Value {
    serde_json::to_value(entries).expect("entries serialize")
}

fn json_string(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json render");
    s.push('\n');
    s
}

fn entries_exit_code(entries: &[IndexReport]) -> i32 {
    let ok = entries
        .iter()
        .all(|e| e.agree_internal && e.agree_reference != Some(false));
    if ok {
        0
    } else {
        1
    }
}

// ---------------------------------------------------------------------------
// table

fn cmd_table(type_str: &str, format: Format, mode: OracleMode, cap: u64) -> Result<(String, i32)> {
    let t = parse_type(type_str)?;
    let rs = RootSystem::new(t);
    let entries = fundamental_index_table_with(&rs, mode, cap)?;
    let code = entries_exit_code(&entries);
    let out = match format {
        Format::Text => {
            let mut s = format!(
                "fundamental representations of {t} (dim g = {}, d(g) = {}, dual Coxeter = {})\n\n",
                rs.dimension(),
                rs.d_of_g(),
                rs.dual_coxeter_number()
            );
            s.push_str(&entries_text(&entries));
            s
        }
        Format::Csv => entries_to_csv(&entries),
        Format::Json => json_string(&serde_json::json!({
            "schema_version": SCHEMA_VERSION,
            "command": "table",
            "lie_type": t,
            "entries": entries_json_value(&entries),
        })),
    };
    Ok((out, code))
}

// ---------------------------------------------------------------------------
// verify

const VERIFY_HEADERS: [&str; 17] = [
    "record",
    "lie_type",
    "weight",
    "dim",
    "casimir",
    "index_closed",
    "index_oracle",
    "reference_value",
    "agree_internal",
    "agree_reference",
    "orthogonal",
    "label",
    "kind",
    "citation",
    "computed",
    "reference",
    "pass",
];

fn kind_str(k: ReferenceKind) -> &'static str {
    match k {
        ReferenceKind::FundamentalIndices => "fundamental_indices",
        ReferenceKind::DOfG => "d_of_g",
        ReferenceKind::GammaBound => "gamma_bound",
        ReferenceKind::GammaBoundImproved => "gamma_bound_improved",
        ReferenceKind::DimensionFormula => "dimension_formula",
    }
}

fn kind_from_str(s: &str) -> Result<ReferenceKind> {
    match s {
        "fundamental_indices" => Ok(ReferenceKind::FundamentalIndices),
        "d_of_g" => Ok(ReferenceKind::DOfG),
        "gamma_bound" => Ok(ReferenceKind::GammaBound),
        "gamma_bound_improved" => Ok(ReferenceKind::GammaBoundImproved),
        "dimension_formula" => Ok(ReferenceKind::DimensionFormula),
        _ => Err(Error::ParseWeight {
            input: s.to_string(),
            reason: "unknown reference kind".to_string(),
        }),
    }
}

fn bigints_field(v: &[BigInt]) -> String {
    v.iter()
        .map(BigInt::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn bigints_from_field(s: &str) -> Result<Vec<BigInt>> {
    s.split_whitespace()
        .map(|x| {
            BigInt::from_str(x).map_err(|_| Error::ParseWeight {
                input: s.to_string(),
                reason: format!("value {x:?} is not an integer"),
            })
        })
        .collect()
}

/// The verification report flattened to one CSV table: entry rows carry
/// the per-representation columns, check rows the per-table columns, with
/// a leading `record` discriminator.
pub fn verify_to_csv(report: &VerificationReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(VERIFY_HEADERS).expect("csv write");
    for e in &report.entries {
        let mut row = vec!["entry".to_string()];
        row.extend(entry_fields(e));
        row.extend(std::iter::repeat_n(String::new(), 6));
        w.write_record(&row).expect("csv write");
    }
    for c in &report.checks {
        let mut row = vec!["check".to_string()];
        row.extend(std::iter::repeat_n(String::new(), 10));
        row.push(c.label.clone());
        row.push(kind_str(c.kind).to_string());
        row.push(c.citation.clone());
        row.push(bigints_field(&c.computed));
        row.push(bigints_field(&c.reference));
        row.push(c.pass.to_string());
        w.write_record(&row).expect("csv write");
    }
    String::from_utf8(w.into_inner().expect("csv flush")).expect("csv utf8")
}

/// Parses the flattened verification CSV back into entries and checks.
pub fn verify_from_csv(s: &str) -> Result<(Vec<IndexReport>, Vec<CheckResult>)> {
    let mut entries = Vec::new();
    let mut checks = Vec::new();
    let mut r = csv::Reader::from_reader(s.as_bytes());
    for rec in r.records() {
        let rec = rec.map_err(|e| Error::ParseWeight {
            input: "csv".to_string(),
            reason: e.to_string(),
        })?;
        let fields: Vec<String> = rec.iter().map(str::to_string).collect();
        match fields[0].as_str() {
            "entry" => entries.push(entry_from_fields(&fields[1..11])?),
            "check" => {
                let pass = match fields[16].as_str() {
                    "true" => true,
                    "false" => false,
                    other => {
                        return Err(Error::ParseWeight {
                            input: other.to_string(),
                            reason: "malformed pass field in check row".to_string(),
                        })
                    }
                };
                checks.push(CheckResult {
                    label: fields[11].clone(),
                    kind: kind_from_str(&fields[12])?,
                    citation: fields[13].clone(),
                    computed: bigints_from_field(&fields[14])?,
                    reference: bigints_from_field(&fields[15])?,
                    pass,
                });
            }
            other => {
                return Err(Error::ParseWeight {
                    input: other.to_string(),
                    reason: "unknown record discriminator".to_string(),
                })
            }
        }
    }
    Ok((entries, checks))
}

fn verify_text(report: &VerificationReport) -> String {
    let mut s = format!("verification scope: {}\n", report.scope);
    if !report.types.is_empty() {
        let names: Vec<String> = report.types.iter().map(LieType::to_string).collect();
        let _ = writeln!(s, "types ({}): {}", names.len(), names.join(" "));
    }
    s.push('\n');
    if !report.entries.is_empty() {
        s.push_str(&entries_text(&report.entries));
        s.push('\n');
    }
    if !report.checks.is_empty() {
        s.push_str("checks:\n");
        for c in &report.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "  {status}  {} [{}]", c.label, c.citation);
            if !c.pass {
                let _ = writeln!(
                    s,
                    "        computed  {}\n        reference {}",
                    bigints_field(&c.computed),
                    bigints_field(&c.reference)
                );
            }
        }
        s.push('\n');
    }
    let sm = &report.summary;
    let _ = writeln!(
        s,
        "summary: entries={} internal-agree={} oracle-skipped={} ref-match={} ref-mismatch={} checks-pass={} checks-fail={} -> {}",
        sm.entry_count,
        sm.internal_agreements,
        sm.oracle_skipped,
        sm.reference_matches,
        sm.reference_mismatches,
        sm.checks_passed,
        sm.checks_failed,
        if sm.all_ok { "ALL OK" } else { "MISMATCH" }
    );
    s
}

fn cmd_verify(scope_str: &str, format: Format, mode: OracleMode, cap: u64) -> Result<(String, i32)> {
    let scope = Scope::parse(scope_str)?;
    let report = build_verification(scope, mode, cap)?;
    let code = if report.summary.all_ok { 0 } else { 1 };
    let out = match format {
        Format::Text => verify_text(&report),
        Format::Csv => verify_to_csv(&report),
        Format::Json => {
            let v = serde_json::to_value(&report).expect("report serialize");
            json_string(&v)
        }
    };
    Ok((out, code))
}

// ---------------------------------------------------------------------------
// bounds

const CONDITIONAL_NOTE: &str =
    "improved bounds are conditional on the unproven square-root hypothesis \
     for theta bundles of orthogonal representations";

fn bounds_text(rows: &[BoundsRow]) -> String {
    let headers = [
        "row",
        "d(g)",
        "gamma<=",
        "gamma<= (conditional)",
        "index d(g) attained by",
    ];
    let table: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.row.clone(),
                r.d_of_g.to_string(),
                r.gamma_bound.to_string(),
                r.gamma_bound_improved.to_string(),
                r.attaining_fundamental
                    .map(|i| format!("w{i}"))
                    .unwrap_or_else(|| "NOT FOUND".to_string()),
            ]
        })
        .collect();
    let mut s = align(&headers, &table);
    s.push('\n');
    s.push_str("note: ");
    s.push_str(CONDITIONAL_NOTE);
    s.push('\n');
    s
}

fn cmd_bounds(format: Format) -> Result<(String, i32)> {
    let rows = bounds_table();
    let out = match format {
        Format::Text => bounds_text(&rows),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "row",
                "lie_type",
                "d_of_g",
                "gamma_bound",
                "gamma_bound_improved_conditional",
                "attaining_fundamental",
            ])
            .expect("csv write");
            for r in &rows {
                w.write_record([
                    r.row.clone(),
                    r.lie_type.to_string(),
                    r.d_of_g.to_string(),
                    r.gamma_bound.to_string(),
                    r.gamma_bound_improved.to_string(),
                    r.attaining_fundamental
                        .map(|i| i.to_string())
                        .unwrap_or_default(),
                ])
                .expect("csv write");
            }
            String::from_utf8(w.into_inner().expect("csv flush")).expect("csv utf8")
        }
        Format::Json => json_string(&serde_json::json!({
            "schema_version": SCHEMA_VERSION,
            "command": "bounds",
            "improved_bound_conditional": true,
            "conditional_note": CONDITIONAL_NOTE,
            "rows": rows,
        })),
    };
    Ok((out, 0))
}

// ---------------------------------------------------------------------------
// roots

#[derive(Serialize)]
struct RootJson<'a> {
    weight: &'a [i64],
    simple_coords: &'a [i64],
    coroot_coords: &'a [i64],
    height: i64,
}

fn cmd_roots(type_str: &str, format: Format) -> Result<(String, i32)> {
    let t = parse_type(type_str)?;
    let rs = RootSystem::new(t);
    let out = match format {
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "type: {t}");
            let _ = writeln!(s, "rank: {}", rs.rank());
            let _ = writeln!(s, "dim g: {}", rs.dimension());
            let _ = writeln!(s, "positive roots: {}", rs.positive_roots().len());
            let _ = writeln!(
                s,
                "comarks (theta-coroot coefficients): {}",
                rs.coroot_decomposition()
                    .iter()
                    .map(|m| m.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            let _ = writeln!(s, "d(g): {}", rs.d_of_g());
            let _ = writeln!(s, "dual Coxeter number: {}", rs.dual_coxeter_number());
            let _ = writeln!(
                s,
                "canonical level: {}",
                crate::index::canonical_level(&rs)
            );
            let _ = writeln!(s, "highest root: {}", rs.highest_root());
            s.push('\n');
            let headers = ["height", "weight", "simple_coords", "coroot_coords"];
            let rows: Vec<Vec<String>> = rs
                .positive_roots()
                .iter()
                .map(|r| {
                    vec![
                        r.height().to_string(),
                        r.weight().to_string(),
                        format!(
                            "[{}]",
                            r.simple_coords()
                                .iter()
                                .map(|c| c.to_string())
                                .collect::<Vec<_>>()
                                .join(",")
                        ),
                        format!(
                            "[{}]",
                            r.coroot_coords()
                                .iter()
                                .map(|c| c.to_string())
                                .collect::<Vec<_>>()
                                .join(",")
                        ),
                    ]
                })
                .collect();
            s.push_str(&align(&headers, &rows));
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["height", "weight", "simple_coords", "coroot_coords"])
                .expect("csv write");
            for r in rs.positive_roots() {
                w.write_record([
                    r.height().to_string(),
                    weight_field(r.weight()),
                    r.simple_coords()
                        .iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()
                        .join(" "),
                    r.coroot_coords()
                        .iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()
                        .join(" "),
                ])
                .expect("csv write");
            }
            String::from_utf8(w.into_inner().expect("csv flush")).expect("csv utf8")
        }
        Format::Json => {
            let roots: Vec<RootJson> = rs
                .positive_roots()
                .iter()
                .map(|r| RootJson {
                    weight: r.weight().coords(),
                    simple_coords: r.simple_coords(),
                    coroot_coords: r.coroot_coords(),
                    height: r.height(),
                })
                .collect();
            json_string(&serde_json::json!({
                "schema_version": SCHEMA_VERSION,
                "command": "roots",
                "lie_type": t,
                "rank": rs.rank(),
                "dimension": rs.dimension(),
                "comarks": rs.coroot_decomposition(),
                "d_of_g": rs.d_of_g(),
                "dual_coxeter_number": rs.dual_coxeter_number(),
                "canonical_level": crate::index::canonical_level(&rs),
                "highest_root": rs.highest_root().coords(),
                "positive_roots": roots,
            }))
        }
    };
    Ok((out, 0))
}

// ---------------------------------------------------------------------------
// index

fn theta_level(e: &IndexReport) -> BigInt {
    if e.orthogonal && (&e.index_closed % 2u8).is_zero() {
        &e.index_closed / 2
    } else {
        e.index_closed.clone()
    }
}

fn cmd_index(
    type_str: &str,
    weight_str: &str,
    format: Format,
    mode: OracleMode,
    cap: u64,
    assume_sqrt: bool,
) -> Result<(String, i32)> {
    let t = parse_type(type_str)?;
    let rs = RootSystem::new(t);
    let lam = parse_weight(weight_str)?;
    let entry = index_report(&rs, &lam, mode, cap)?;
    let code = entries_exit_code(std::slice::from_ref(&entry));
    let level = assume_sqrt.then(|| theta_level(&entry));
    let out = match format {
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "type: {t}");
            let _ = writeln!(s, "highest weight: {}", entry.lam);
            let _ = writeln!(s, "dim: {}", entry.dim);
            let _ = writeln!(s, "casimir: {}", ratio_to_string(&entry.casimir));
            let _ = writeln!(s, "index (closed form): {}", entry.index_closed);
            match &entry.index_oracle {
                Some(v) => {
                    let _ = writeln!(s, "index (character-sum oracle): {}", ratio_to_string(v));
                }
                None => {
                    let _ = writeln!(s, "index (character-sum oracle): skipped-oracle");
                }
            }
            match &entry.reference_value {
                Some(v) => {
                    let _ = writeln!(s, "reference value: {v}");
                }
                None => {
                    let _ = writeln!(s, "reference value: none stated");
                }
            }
            let _ = writeln!(
                s,
                "internal agreement: {}",
                if entry.agree_internal { "ok" } else { "MISMATCH" }
            );
            if let Some(agree) = entry.agree_reference {
                let _ = writeln!(
                    s,
                    "reference agreement: {}",
                    if agree { "ok" } else { "MISMATCH" }
                );
            }
            let _ = writeln!(
                s,
                "orthogonal: {}",
                if entry.orthogonal { "yes" } else { "no" }
            );
            if let Some(level) = &level {
                let _ = writeln!(
                    s,
                    "theta level (conditional on square-root hypothesis): {level}"
                );
            }
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut headers: Vec<&str> = ENTRY_HEADERS.to_vec();
            headers.push("theta_level_conditional");
            w.write_record(&headers).expect("csv write");
            let mut row: Vec<String> = entry_fields(&entry).to_vec();
            row.push(
                level
                    .as_ref()
                    .map(BigInt::to_string)
                    .unwrap_or_default(),
            );
            w.write_record(&row).expect("csv write");
            String::from_utf8(w.into_inner().expect("csv flush")).expect("csv utf8")
        }
        Format::Json => json_string(&serde_json::json!({
            "schema_version": SCHEMA_VERSION,
            "command": "index",
            "assume_sqrt": assume_sqrt,
            "theta_level_conditional": level.as_ref().map(BigInt::to_string),
            "entry": serde_json::to_value(&entry).expect("entry serialize"),
        })),
    };
    Ok((out, code))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::Series;

    fn report(scope: &str) -> VerificationReport {
        build_verification(Scope::parse(scope).unwrap(), OracleMode::Auto, DEFAULT_MASS_CAP)
            .unwrap()
    }

    #[test]
    fn weight_parsing() {
        assert_eq!(parse_weight("1,0,2").unwrap(), Weight::new(vec![1, 0, 2]));
        assert_eq!(parse_weight(" 3 , -1 ").unwrap(), Weight::new(vec![3, -1]));
        assert!(parse_weight("").is_err());
        assert!(parse_weight("1,x").is_err());
    }

    #[test]
    fn entry_csv_round_trip() {
        let t = LieType::new(Series::G, 2).unwrap();
        let rs = RootSystem::new(t);
        let entries =
            fundamental_index_table_with(&rs, OracleMode::Auto, DEFAULT_MASS_CAP).unwrap();
        let csv = entries_to_csv(&entries);
        let back = entries_from_csv(&csv).unwrap();
        assert_eq!(back, entries);
    }

    #[test]
    fn verify_csv_round_trip() {
        let rep = report("G2");
        let csv = verify_to_csv(&rep);
        let (entries, checks) = verify_from_csv(&csv).unwrap();
        assert_eq!(entries, rep.entries);
        assert_eq!(checks, rep.checks);
    }

    #[test]
    fn verify_json_round_trip() {
        let rep = report("dtable");
        let json = serde_json::to_string(&rep).unwrap();
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rep);
    }

    #[test]
    fn execute_is_deterministic() {
        let cli = Cli {
            command: Command::Verify {
                scope: "F4".to_string(),
                format: Format::Json,
                oracle: OracleArg::Auto,
                cap: DEFAULT_MASS_CAP,
            },
        };
        let (a, code_a) = execute(&cli).unwrap();
        let (b, code_b) = execute(&cli).unwrap();
        assert_eq!(a, b);
        assert_eq!((code_a, code_b), (0, 0));
    }

    #[test]
    fn table_exit_zero_on_match() {
        let cli = Cli {
            command: Command::Table {
                lie_type: "G2".to_string(),
                format: Format::Text,
                oracle: OracleArg::Auto,
                cap: DEFAULT_MASS_CAP,
            },
        };
        let (out, code) = execute(&cli).unwrap();
        assert_eq!(code, 0);
        assert!(out.contains("oracle-ok"));
        assert!(out.contains('8'));
    }

    #[test]
    fn oracle_on_over_cap_is_cap_error() {
        let cli = Cli {
            command: Command::Table {
                lie_type: "G2".to_string(),
                format: Format::Text,
                oracle: OracleArg::On,
                cap: 3,
            },
        };
        let err = execute(&cli).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
        assert_eq!(exit_code(&err), 3);
    }

    #[test]
    fn usage_errors_are_exit_two() {
        for e in [
            Error::ParseLieType {
                input: "H3".to_string(),
            },
            Error::ParseScope {
                input: "junk".to_string(),
            },
            Error::NotDominant {
                weight: "[-1]".to_string(),
            },
        ] {
            assert_eq!(exit_code(&e), 2);
        }
        assert_eq!(
            exit_code(&Error::InternalInconsistency("x".to_string())),
            1
        );
    }

    #[test]
    fn bounds_formats_render() {
        for format in [Format::Text, Format::Csv, Format::Json] {
            let (out, code) = cmd_bounds(format).unwrap();
            assert_eq!(code, 0);
            assert!(out.contains("30"), "{format:?}");
            // The conditional marker is present in every format.
            assert!(out.to_lowercase().contains("conditional"), "{format:?}");
        }
    }

    #[test]
    fn index_assume_sqrt_halves_even_orthogonal() {
        // G2 adjoint: orthogonal, index 8 -> conditional level 4.
        let (out, code) = cmd_index("G2", "0,1", Format::Text, OracleMode::Auto, 100_000, true)
            .unwrap();
        assert_eq!(code, 0);
        assert!(out.contains("theta level (conditional on square-root hypothesis): 4"));
        // E7 w7: symplectic (not orthogonal), index 12 stays 12.
        let (out, _) =
            cmd_index("E7", "0,0,0,0,0,0,1", Format::Text, OracleMode::Auto, 100_000, true)
                .unwrap();
        assert!(out.contains("theta level (conditional on square-root hypothesis): 12"));
        assert!(out.contains("orthogonal: no"));
    }

    #[test]
    fn roots_csv_has_all_roots() {
        let (out, code) = cmd_roots("F4", Format::Csv).unwrap();
        assert_eq!(code, 0);
        // Header plus 24 positive roots.
        assert_eq!(out.trim_end().lines().count(), 25);
    }
}
