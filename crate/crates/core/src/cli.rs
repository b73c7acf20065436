//! Command-line front end. [`run`] takes the argument vector and output
//! streams so it can be driven from tests.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bijection::MapId;
use crate::classes::{lookup_class, CLASS_IDS};
use crate::harness::registry::lookup_identity;
use crate::harness::report::render_summary;
use crate::harness::{
    compare_with_bfile, identity_ids, lookup_series, parse_bfile, verify_all, verify_record, Format, Limits, Status,
    SERIES_IDS,
};
use crate::overpartition::Overpartition;
use crate::partition::Partition;

#[derive(Debug, Parser)]
#[command(
    name = "overpartition",
    version,
    about = "Enumerate partition classes, apply bijections and verify overpartition identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Csv,
    Records,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Table => Format::Table,
            FormatArg::Csv => Format::Csv,
            FormatArg::Records => Format::Records,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ListKind {
    Classes,
    Identities,
    Series,
    Maps,
}

#[derive(Debug, Args)]
struct Range {
    /// A single n.
    #[arg(long, conflicts_with_all = ["from", "to"])]
    n: Option<u64>,
    /// First n of a range.
    #[arg(long)]
    from: Option<u64>,
    /// Last n of a range.
    #[arg(long)]
    to: Option<u64>,
}

impl Range {
    fn bounds(&self) -> Result<(u64, u64), String> {
        match (self.n, self.from, self.to) {
            (Some(n), _, _) => Ok((n, n)),
            (None, from, Some(to)) => {
                let from = from.unwrap_or(0);
                if from > to {
                    Err(format!("empty range {from}..={to}"))
                } else {
                    Ok((from, to))
                }
            }
            _ => Err("give --n or --to (with optional --from)".into()),
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the members of a class of weight n, one per line.
    Enumerate {
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: FormatArg,
    },
    /// Count the members of a class for each n in a range.
    Count {
        #[arg(long)]
        class: String,
        #[command(flatten)]
        range: Range,
        #[arg(long, value_enum, default_value = "table")]
        format: FormatArg,
    },
    /// Print coefficients of a named series.
    Coeff {
        #[arg(long)]
        series: String,
        #[command(flatten)]
        range: Range,
        #[arg(long, value_enum, default_value = "table")]
        format: FormatArg,
    },
    /// Apply a bijection (f, h-oe, h-eo, g-gg, g-lg) or its inverse.
    Bijection {
        #[arg(long)]
        map: String,
        /// Comma-separated parts; overlined parts carry a trailing '~'.
        #[arg(long, allow_hyphen_values = true)]
        input: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Verify one identity, or all of them with --id all.
    Verify {
        #[arg(long, default_value = "all")]
        id: String,
        #[arg(long, default_value_t = 40)]
        max_n: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: FormatArg,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads for --id all.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Omit elapsed times so repeated runs are byte-identical.
        #[arg(long)]
        no_timing: bool,
        /// Cap on n for enumerated class counts.
        #[arg(long)]
        enum_cap: Option<u64>,
        /// Cap on n for pair counts.
        #[arg(long)]
        pair_cap: Option<u64>,
        /// Cap on n for bijection image counts.
        #[arg(long)]
        bijection_cap: Option<u64>,
    },
    /// Compare a named series against a local OEIS b-file.
    Oeis {
        #[arg(long)]
        series: String,
        #[arg(long)]
        bfile: PathBuf,
        /// Coefficient of q^n is compared with the b-file entry n + offset.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        offset: i64,
        /// Largest n to compute; defaults to the end of the b-file.
        #[arg(long)]
        max_n: Option<u64>,
    },
    /// List registered ids.
    List {
        #[arg(value_enum)]
        kind: ListKind,
    },
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn unknown(kind: &str, id: &str, known: &[String]) -> Failure {
    usage(format!(
        "unknown {kind} id {id:?}; registered ids:\n  {}",
        known.join("\n  ")
    ))
}

fn strings(ids: &[&str]) -> Vec<String> {
    ids.iter().map(|s| s.to_string()).collect()
}

fn class_ids() -> Vec<String> {
    let mut ids = strings(CLASS_IDS);
    ids.push("distinct-min:k=K, distinct-over:k=K (K >= 1)".into());
    ids.push("lebesgue:a=A,b=B (A >= 0, B in -1..2)".into());
    ids
}

fn map_ids() -> Vec<String> {
    MapId::ALL.iter().map(|m| m.id().to_string()).collect()
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let io = |e: std::io::Error| Failure {
        code: 2,
        message: e.to_string(),
    };
    match cli.command {
        Command::Enumerate { class, n, format } => {
            let spec = lookup_class(&class).ok_or_else(|| unknown("class", &class, &class_ids()))?;
            let members = spec.enumerate(n);
            let format = Format::from(format);
            if format == Format::Csv {
                writeln!(out, "n,member").map_err(io)?;
            }
            for m in members {
                let line = match format {
                    Format::Table => m.to_string(),
                    Format::Csv => format!("{n},\"{m}\""),
                    Format::Records => serde_json::json!({
                        "class": class,
                        "n": n,
                        "member": m.to_string(),
                    })
                    .to_string(),
                };
                writeln!(out, "{line}").map_err(io)?;
            }
            Ok(0)
        }
        Command::Count { class, range, format } => {
            let spec = lookup_class(&class).ok_or_else(|| unknown("class", &class, &class_ids()))?;
            let (from, to) = range.bounds().map_err(usage)?;
            let counts = spec.counts_upto(to);
            write_pairs(
                out,
                Format::from(format),
                "count",
                &class,
                from,
                &counts[from as usize..],
            )
            .map_err(io)?;
            Ok(0)
        }
        Command::Coeff { series, range, format } => {
            let side = lookup_series(&series).ok_or_else(|| unknown("series", &series, &strings(SERIES_IDS)))?;
            let (from, to) = range.bounds().map_err(usage)?;
            let values = side.values(to, &Limits::unbounded()).map_err(|e| Failure {
                code: 1,
                message: e.to_string(),
            })?;
            write_pairs(
                out,
                Format::from(format),
                "coeff",
                &series,
                from,
                &values[from as usize..],
            )
            .map_err(io)?;
            Ok(0)
        }
        Command::Bijection { map, input, inverse } => {
            let m: MapId = map.parse().map_err(|_| unknown("map", &map, &map_ids()))?;
            let bad_input = |e: crate::partition::PartitionError| usage(format!("malformed input {input:?}: {e}"));
            let text = if inverse {
                let op: Overpartition = input.parse().map_err(bad_input)?;
                m.inverse(&op).map(|p| p.to_string())
            } else {
                let p: Partition = input.parse().map_err(bad_input)?;
                m.forward(&p).map(|o| o.to_string())
            }
            .map_err(|e| Failure {
                code: 1,
                message: e.to_string(),
            })?;
            writeln!(out, "{text}").map_err(io)?;
            Ok(0)
        }
        Command::Verify {
            id,
            max_n,
            format,
            out: path,
            jobs,
            no_timing,
            enum_cap,
            pair_cap,
            bijection_cap,
        } => {
            let mut limits = Limits::default();
            if let Some(c) = enum_cap {
                limits.enumeration = c;
            }
            if let Some(c) = pair_cap {
                limits.pairs = c;
            }
            if let Some(c) = bijection_cap {
                limits.bijection = c;
            }
            let format = Format::from(format);
            let mut reports = if id == "all" {
                verify_all(max_n, &limits, jobs.max(1))
            } else {
                let record = lookup_identity(&id).ok_or_else(|| unknown("identity", &id, &identity_ids()))?;
                vec![verify_record(&record, max_n, &limits)]
            };
            if no_timing {
                reports = reports.into_iter().map(|r| r.without_timing()).collect();
            }
            let text = if id == "all" {
                render_summary(&reports, format)
            } else {
                reports[0].render(format)
            };
            match path {
                Some(p) => fs::write(&p, text).map_err(io)?,
                None => out.write_all(text.as_bytes()).map_err(io)?,
            }
            let failed = reports.iter().any(|r| r.status == Status::Fail);
            Ok(i32::from(failed))
        }
        Command::Oeis {
            series,
            bfile,
            offset,
            max_n,
        } => {
            let side = lookup_series(&series).ok_or_else(|| unknown("series", &series, &strings(SERIES_IDS)))?;
            let text =
                fs::read_to_string(&bfile).map_err(|e| usage(format!("cannot read {}: {e}", bfile.display())))?;
            let file = parse_bfile(&text).map_err(|e| usage(format!("{}: {e}", bfile.display())))?;
            let last = file.last_index().map_or(0, |l| (l - offset).max(0) as u64);
            let n = max_n.unwrap_or(last);
            let values = side.values(n, &Limits::unbounded()).map_err(|e| Failure {
                code: 1,
                message: e.to_string(),
            })?;
            let m = compare_with_bfile(&values, &file, offset);
            match m.first_mismatch {
                None => {
                    writeln!(out, "match: {} terms compared (offset {offset})", m.compared).map_err(io)?;
                    Ok(0)
                }
                Some((n, computed, entry)) => {
                    writeln!(
                        out,
                        "mismatch at n={n}: series {computed}, b-file entry {} is {entry}",
                        n as i64 + offset
                    )
                    .map_err(io)?;
                    Ok(1)
                }
            }
        }
        Command::List { kind } => {
            let ids = match kind {
                ListKind::Classes => class_ids(),
                ListKind::Identities => identity_ids(),
                ListKind::Series => strings(SERIES_IDS),
                ListKind::Maps => map_ids(),
            };
            for id in ids {
                writeln!(out, "{id}").map_err(io)?;
            }
            Ok(0)
        }
    }
}

fn write_pairs(
    out: &mut dyn Write,
    format: Format,
    what: &str,
    id: &str,
    from: u64,
    values: &[impl std::fmt::Display],
) -> std::io::Result<()> {
    if format == Format::Csv {
        writeln!(out, "n,{what}")?;
    }
    for (i, v) in values.iter().enumerate() {
        let n = from + i as u64;
        match format {
            Format::Table => writeln!(out, "{n} {v}")?,
            Format::Csv => writeln!(out, "{n},{v}")?,
            Format::Records => {
                let value: serde_json::Number = v.to_string().parse().expect("integers parse as JSON numbers");
                writeln!(out, "{}", serde_json::json!({ "id": id, "n": n, what: value }))?
            }
        }
    }
    Ok(())
}

/// Runs the CLI on `argv` (including the program name) and returns the exit
/// status: 0 on success, 1 when a verification fails, 2 on usage errors.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
