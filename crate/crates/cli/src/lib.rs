//! `psp` command-line front end. Every command renders either text or
//! JSON (`--format`), and the diagram command can also write SVG.
//!
//! Exit codes: 0 success, 1 domain-negative answer (e.g. not a stride
//! generator), 2 bad input, 3 verification mismatch.

pub mod svg;

use std::fmt::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use psp_core::{cover3, Basis, Error};
use psp_formulas::{maximal_set, mopt, osg0, osg1, pp_bound, pp_limit, sg1_1, OsgRow, PP_LIMIT};
use psp_search::{best_osg, brute_m3, verify_tables, Guard, Table, VerifyOptions};
use psp_service::analyze;
use psp_stride::{classify, order_cap, sg1_order, sg_series, underlying_sg, StrideGenerator};
use psp_threads::diagram;
use serde::Serialize;
use serde_json::{json, Value};

pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "psp", version, about = "Postage stamp covers and stride generators for {1, a2, a3}")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Osg0,
    Osg1,
    Sg1,
    Mopt,
    Maximal,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cover C({1,a2,a3}, 3, s) and its underlying stride generator.
    Cover {
        #[arg(long)]
        a2: i64,
        #[arg(long)]
        a3: i64,
        #[arg(short)]
        s: i64,
    },
    /// Brute-force M(3,s) with all maximal bases.
    Msearch {
        #[arg(short)]
        s: i64,
        /// Largest s searched without complaint.
        #[arg(long, env = "PSP_MAX_S", default_value_t = 60)]
        max_s: i64,
    },
    /// Classify a basis as SG(n,p), or list its whole series.
    Sg {
        #[arg(long)]
        a2: i64,
        #[arg(long)]
        a3: i64,
        #[arg(short, required_unless_present = "series", conflicts_with = "series")]
        n: Option<i64>,
        #[arg(long)]
        series: bool,
    },
    /// Longest SG(n,p): closed forms for p <= 1, exhaustive search above.
    Osg {
        #[arg(short)]
        n: i64,
        #[arg(short)]
        p: i64,
        /// Search exhaustively even when a closed form exists.
        #[arg(long)]
        search: bool,
    },
    /// Rows of the closed-form tables over a range of n (or s).
    Tables {
        #[arg(value_enum)]
        kind: TableKind,
        #[arg(long)]
        from: i64,
        #[arg(long)]
        to: i64,
    },
    /// Thread diagram over [from, to), as text or SVG.
    Diagram {
        #[arg(long)]
        a2: i64,
        #[arg(long)]
        a3: i64,
        #[arg(short)]
        n: i64,
        /// Order of the drawn threads; defaults to the classified order.
        #[arg(short)]
        p: Option<i64>,
        #[arg(long)]
        from: Option<i64>,
        #[arg(long)]
        to: Option<i64>,
        /// Write SVG here (`-` for stdout).
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long, default_value_t = svg::DEFAULT_SCALE)]
        scale: i64,
    },
    /// The pp bound for each s (default 40..=58) and its limit.
    Pp {
        #[arg(short)]
        s: Vec<i64>,
    },
    /// Check published tables against the search engines.
    Verify {
        #[arg(value_enum, required = true)]
        tables: Vec<TableArg>,
        #[arg(long)]
        s_from: Option<i64>,
        #[arg(long)]
        s_to: Option<i64>,
        #[arg(long)]
        n_max: Option<i64>,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, env = "PSP_MAX_S", default_value_t = 60)]
        max_s: i64,
    },
    /// Serve the JSON endpoints on 127.0.0.1.
    Serve {
        #[arg(long, default_value_t = psp_service::DEFAULT_PORT)]
        port: u16,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableArg {
    T700,
    T103,
    T105,
    T501,
    T502,
    T503,
    T101,
    T102,
    T300,
    Pp,
}

impl From<TableArg> for Table {
    fn from(t: TableArg) -> Self {
        Table::ALL[t as usize]
    }
}

/// What a command produced, before printing.
#[derive(Debug, Clone, PartialEq)]
pub enum Output {
    Text(String),
    Json(Value),
    Svg(String),
    /// Written to a file; the text is a confirmation line.
    Written(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
    /// Output still worth printing (e.g. the report of a failed verify).
    pub output: Option<String>,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure { code, message: message.into(), output: None }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Inconsistent(_) => EXIT_MISMATCH,
            _ => EXIT_INPUT,
        };
        Failure::new(code, e.to_string())
    }
}

type Res = std::result::Result<Output, Failure>;

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("domain types serialize")
}

fn basis(a2: i64, a3: i64) -> Result<Basis, Failure> {
    Ok(Basis::new(a2, a3)?)
}

/// `SG(8,2) break 22 (order 4) non-canonical`
pub fn sg_line(sg: &StrideGenerator) -> String {
    let breaks: Vec<String> = sg
        .breaks
        .iter()
        .map(|b| match b.order.finite() {
            Some(q) => format!("{} (order {q})", b.y),
            None => format!("{} (canonical)", b.y),
        })
        .collect();
    let word = if breaks.len() == 1 { "break" } else { "breaks" };
    let canon = if sg.is_canonical() { "canonical" } else { "non-canonical" };
    format!("{sg} {word} {} {canon}", breaks.join(", "))
}

fn cmd_cover(format: Format, a2: i64, a3: i64, s: i64) -> Res {
    let b = basis(a2, a3)?;
    if s < 1 {
        return Err(Failure::new(EXIT_INPUT, format!("s must be >= 1, got {s}")));
    }
    let c = cover3(&b, s)?;
    let sg = if c.is_trivial() { None } else { Some(underlying_sg(&b, s)?.0) };
    Ok(match format {
        Format::Json => Output::Json(json!({ "basis": b, "cover": c, "underlying": sg.as_ref().map(|sg| analyze(&sg.basis, sg.n, Some(s), None)).transpose()? })),
        Format::Text => Output::Text(match sg {
            None => format!("X={}", c.x),
            Some(sg) => format!("X={} k={} Y={} {sg}", c.x, c.k, c.y),
        }),
    })
}

fn cmd_msearch(format: Format, s: i64, max_s: i64) -> Res {
    let m = brute_m3(s, &Guard { s_max: max_s, ..Guard::default() })?;
    Ok(match format {
        Format::Json => Output::Json(to_json(&m)),
        Format::Text => {
            let sets: Vec<String> = m.bases.iter().map(|b| b.to_string()).collect();
            Output::Text(format!("M(3,{s})={} {}", m.m, sets.join(" ")))
        }
    })
}

fn cmd_sg(format: Format, a2: i64, a3: i64, n: Option<i64>, series: bool) -> Res {
    let b = basis(a2, a3)?;
    if series {
        let all = sg_series(&b);
        return Ok(match format {
            Format::Json => {
                Output::Json(Value::Array(all.iter().map(|sg| analyze(&b, sg.n, None, None).map(|a| to_json(&a))).collect::<Result<_, _>>()?))
            }
            Format::Text => Output::Text(all.iter().map(sg_line).collect::<Vec<_>>().join("\n")),
        });
    }
    let n = n.expect("clap requires -n without --series");
    if n < 1 {
        return Err(Failure::new(EXIT_INPUT, format!("n must be >= 1, got {n}")));
    }
    match classify(&b, n) {
        None => Err(Failure::new(EXIT_NEGATIVE, format!("{b} is not a stride generator at n={n}"))),
        Some(sg) => Ok(match format {
            Format::Json => Output::Json(to_json(&analyze(&b, n, None, None)?)),
            Format::Text => Output::Text(sg_line(&sg)),
        }),
    }
}

fn osg_text(rows: &[OsgRow], p: i64) -> String {
    rows.iter().map(|r| format!("OSG({},{p}) = {} y={}", r.n, r.basis(), r.y)).collect::<Vec<_>>().join("\n")
}

fn cmd_osg(format: Format, n: i64, p: i64, search: bool) -> Res {
    if n < 1 || p < 0 {
        return Err(Failure::new(EXIT_INPUT, format!("need n >= 1 and p >= 0, got n={n} p={p}")));
    }
    let rows = match p {
        0 if !search => osg0(n)?,
        1 if !search => vec![osg1(n)?],
        _ => {
            Guard::default().check_n(n)?;
            let best = best_osg(n, p)?.ok_or_else(|| Failure::new(EXIT_NEGATIVE, format!("no SG({n},{p}) exists")))?;
            best.bases.iter().map(|&(b, y)| OsgRow { n, a2: b.a2, a3: b.a3, y }).collect()
        }
    };
    Ok(match format {
        Format::Json => Output::Json(json!({ "n": n, "p": p, "rows": rows })),
        Format::Text => Output::Text(osg_text(&rows, p)),
    })
}

fn cmd_tables(format: Format, kind: TableKind, from: i64, to: i64) -> Res {
    if from > to || to - from > 100_000 {
        return Err(Failure::new(EXIT_INPUT, format!("bad range {from}..={to}")));
    }
    let mut rows = Vec::new();
    let mut text = String::new();
    for v in from..=to {
        match kind {
            TableKind::Osg0 | TableKind::Osg1 | TableKind::Sg1 => {
                let r = match kind {
                    TableKind::Osg0 => osg0(v)?,
                    TableKind::Osg1 => vec![osg1(v)?],
                    _ => sg1_1(v)?,
                };
                for row in r {
                    let _ = writeln!(text, "{}\t{}\t{}\t{}", row.n, row.a2, row.a3, row.y);
                    rows.push(to_json(&row));
                }
            }
            TableKind::Mopt => {
                let m = mopt(v)?;
                let _ = writeln!(text, "{}\t{}\t{}\t{}\t{}\t{}", m.s, m.t, m.r, m.k_opt, m.n_opt, m.x_opt);
                rows.push(to_json(&m));
            }
            TableKind::Maximal => {
                let m = maximal_set(v)?;
                let _ = writeln!(text, "{}\t{}\t{}", m.s, m.basis(), m.x_opt);
                rows.push(to_json(&m));
            }
        }
    }
    Ok(match format {
        Format::Json => Output::Json(Value::Array(rows)),
        Format::Text => Output::Text(text.trim_end().to_string()),
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_diagram(
    format: Format,
    a2: i64,
    a3: i64,
    n: i64,
    p: Option<i64>,
    from: Option<i64>,
    to: Option<i64>,
    svg_path: Option<PathBuf>,
    scale: i64,
) -> Res {
    let b = basis(a2, a3)?;
    if n < 1 || scale < 1 {
        return Err(Failure::new(EXIT_INPUT, format!("need n >= 1 and scale >= 1, got n={n} scale={scale}")));
    }
    let (from, to) = (from.unwrap_or(0), to.unwrap_or(2 * a3));
    if to - from > 1_000_000 {
        return Err(Failure::new(EXIT_INPUT, format!("window {from}..{to} too wide")));
    }
    // Same order choice as the service: classified p, else the SG1 order.
    let p = match p {
        Some(p) if p >= 0 => p,
        Some(p) => return Err(Failure::new(EXIT_INPUT, format!("p must be >= 0, got {p}"))),
        None => classify(&b, n).map(|sg| sg.p).or_else(|| sg1_order(&b, n)).unwrap_or_else(|| order_cap(&b, n).min(4)),
    };
    let d = diagram(&b, n, p, from, to);
    if let Some(path) = svg_path {
        let doc = svg::render(&d, scale);
        if path.as_os_str() == "-" {
            return Ok(Output::Svg(doc));
        }
        std::fs::write(&path, doc).map_err(|e| Failure::new(EXIT_INPUT, format!("cannot write {}: {e}", path.display())))?;
        return Ok(Output::Written(format!("wrote {}", path.display())));
    }
    Ok(match format {
        Format::Json => Output::Json(to_json(&d)),
        Format::Text => {
            let mut t = format!("{b} n={n} p={p} window [{from}, {to})\n");
            for th in &d.threads {
                let x = &th.thread;
                let _ = writeln!(t, "T{}({})\t{}..{}\t{:?}", x.i, x.c2, x.start, x.end, th.layer);
            }
            let marks: Vec<String> = d.marks.iter().map(|m| m.to_string()).collect();
            let _ = write!(t, "marks: {}", marks.join(" "));
            Output::Text(t)
        }
    })
}

fn cmd_pp(format: Format, s: Vec<i64>) -> Res {
    let s = if s.is_empty() { (40..=58).collect() } else { s };
    let vals = s.iter().map(|&s| Ok((s, pp_bound(s)?))).collect::<Result<Vec<_>, Error>>()?;
    let lim = pp_limit();
    Ok(match format {
        Format::Json => Output::Json(json!({
            "values": vals.iter().map(|&(s, v)| json!({"s": s, "pp": v})).collect::<Vec<_>>(),
            "limit": {"num": lim.numer(), "den": lim.denom(), "value": PP_LIMIT},
        })),
        Format::Text => {
            let mut t: String = vals.iter().map(|(s, v)| format!("pp({s}) = {v:.9}\n")).collect();
            let _ = write!(t, "limit = {lim} = {PP_LIMIT:.9}");
            Output::Text(t)
        }
    })
}

fn cmd_verify(format: Format, tables: Vec<TableArg>, s_range: (Option<i64>, Option<i64>), n_max: Option<i64>, max_s: i64) -> Res {
    let mut opts = VerifyOptions::new(tables.into_iter().map(Table::from).collect());
    opts.guard.s_max = max_s;
    opts.n_max = n_max;
    opts.s_range = match s_range {
        (None, None) => None,
        (a, b) => Some((a.unwrap_or(1), b.unwrap_or(i64::MAX))),
    };
    let report = verify_tables(&opts)?;
    let out = match format {
        Format::Json => serde_json::to_string_pretty(&report).expect("report serializes"),
        Format::Text => {
            let mut t = String::new();
            for r in &report.rows {
                let mark = if r.pass { "pass" } else { "FAIL" };
                let _ = writeln!(t, "{mark} {} {}: expected {} got {}", r.table, r.row, r.expected, r.actual);
            }
            for &tb in &opts.tables {
                let (ok, all) = report.count(tb);
                let _ = writeln!(t, "{tb}: {ok}/{all} pass");
            }
            let _ = write!(t, "{} ms, {} bases examined, {} pruned", report.elapsed_ms, report.examined, report.pruned);
            t
        }
    };
    if report.passed() {
        Ok(match format {
            Format::Json => Output::Json(to_json(&report)),
            Format::Text => Output::Text(out),
        })
    } else {
        let n = report.failures().count();
        Err(Failure { code: EXIT_MISMATCH, message: format!("{n} rows failed"), output: Some(out) })
    }
}

/// Run a parsed command. `serve` blocks until the server stops.
pub fn run(cli: Cli) -> Res {
    let f = cli.format;
    match cli.command {
        Command::Cover { a2, a3, s } => cmd_cover(f, a2, a3, s),
        Command::Msearch { s, max_s } => cmd_msearch(f, s, max_s),
        Command::Sg { a2, a3, n, series } => cmd_sg(f, a2, a3, n, series),
        Command::Osg { n, p, search } => cmd_osg(f, n, p, search),
        Command::Tables { kind, from, to } => cmd_tables(f, kind, from, to),
        Command::Diagram { a2, a3, n, p, from, to, svg, scale } => cmd_diagram(f, a2, a3, n, p, from, to, svg, scale),
        Command::Pp { s } => cmd_pp(f, s),
        Command::Verify { tables, s_from, s_to, n_max, jobs, max_s } => {
            if let Some(j) = jobs {
                // Only fails if a pool already exists; the default one is fine then.
                let _ = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global();
            }
            cmd_verify(f, tables, (s_from, s_to), n_max, max_s)
        }
        Command::Serve { port } => {
            let rt = tokio::runtime::Runtime::new().map_err(|e| Failure::new(EXIT_INPUT, e.to_string()))?;
            eprintln!("listening on http://127.0.0.1:{port}");
            rt.block_on(psp_service::serve(port)).map_err(|e| Failure::new(EXIT_INPUT, format!("serve: {e}")))?;
            Ok(Output::Text(String::new()))
        }
    }
}
