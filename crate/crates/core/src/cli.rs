//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::artifact;
use crate::bounds::counts::{
    flag_count, gaussian_binomial, hermitian_count, nondegenerate_quadric_count, projective_count, quadric_count,
};
use crate::bounds::{
    anchor, cayley_bacharach_bound, covering_family_bound, dl_a24_params, elementary_bound, griesmer,
    hermitian_ch_bound, lachaud_section_bounds, ruled_surface_bound, singleton, sorensen_bound,
    weil_hypersurface_interval, BoundReport, BoundValue, GriesmerMode,
};
use crate::codes::{build_from_descriptor, ghw, min_distance, weight_distribution, Search, DEFAULT_BUDGET};
use crate::compare::{compare, ComparisonRow};
use crate::error::{Error, Result};
use crate::gf::{field_of_order, ArithOp, Elem};
use crate::predict::predict;
use crate::varieties::{construct, format_point, Descriptor};

#[derive(Parser, Debug)]
#[command(name = "varcodes", version, about = "Evaluation codes on varieties over finite fields")]
pub struct Cli {
    /// Maximum number of column evaluations a search may perform.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    /// Worker threads for exhaustive searches (default: all cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the output here instead of stdout (for `build`, the artifact).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Describe GF(q), optionally evaluating one operation.
    Field {
        q: u64,
        #[arg(long, value_enum, requires = "a")]
        op: Option<Op>,
        #[arg(long)]
        a: Option<u32>,
        /// Second operand, or the exponent for `pow`.
        #[arg(long)]
        b: Option<u32>,
        /// List every element with its discrete logarithm.
        #[arg(long)]
        elements: bool,
    },
    /// Enumerate the evaluation points of a variety.
    Points {
        /// Descriptor JSON, inline or as a file path.
        descriptor: String,
    },
    /// Build C_h(X; S) and store it as an artifact.
    Build {
        descriptor: String,
        #[arg(long, default_value_t = 1)]
        h: u32,
    },
    /// Measure exact parameters of a stored code.
    Analyze {
        artifact: PathBuf,
        /// Any of d, wdist, ghw:R (repeatable or comma separated).
        #[arg(long = "task", value_delimiter = ',', default_value = "d")]
        tasks: Vec<String>,
        /// Include wall-clock timings (makes output nondeterministic).
        #[arg(long)]
        timing: bool,
    },
    /// Evaluate one bound calculator.
    Bound {
        #[command(subcommand)]
        bound: BoundCmd,
    },
    /// Closed-form parameters for a descriptor.
    Predict {
        descriptor: String,
        #[arg(long, default_value_t = 1)]
        h: u32,
    },
    /// Measured parameters against predictions and bounds.
    Compare {
        /// Descriptors or arrays of descriptors; an "h" key overrides --h.
        #[arg(required = true)]
        descriptors: Vec<String>,
        #[arg(long, default_value_t = 1)]
        h: u32,
    },
    /// Export a stored code's generator matrix or weight enumerator.
    Export {
        artifact: PathBuf,
        #[arg(long, value_enum, default_value_t = ExportWhat::Generator)]
        what: ExportWhat,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
    Inv,
    Pow,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExportWhat {
    Generator,
    Weights,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CountFamily {
    Projective,
    Quadric,
    Hermitian,
    Grassmann,
    Flag,
}

#[derive(Args, Debug)]
pub struct CountArgs {
    #[arg(long, value_enum)]
    family: CountFamily,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    l: Option<u32>,
    #[arg(long)]
    w: Option<u8>,
    /// Rank of a possibly degenerate quadric (defaults to m + 1).
    #[arg(long)]
    rho: Option<u32>,
    #[arg(long)]
    r: Option<u64>,
}

#[derive(Subcommand, Debug)]
pub enum BoundCmd {
    /// n - s |P^{delta-1}| for a variety of dimension delta and degree s < q + 1.
    Elementary {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        s: u64,
        #[arg(long)]
        delta: u32,
        #[arg(long)]
        q: u64,
    },
    /// Covering family of a curves with at most N points, eta per section.
    Covering {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        a: u64,
        #[arg(long = "big-n")]
        big_n: u64,
        #[arg(long)]
        eta: u64,
        #[arg(long)]
        l: u64,
    },
    /// Complete intersection of the given degrees.
    CayleyBacharach {
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u64>,
        #[arg(long)]
        h: u64,
    },
    /// Point count interval for a smooth hypersurface of degree s in P^m.
    Weil {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        s: u64,
    },
    /// Hyperplane-section bounds for a smooth hypersurface.
    Lachaud {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        s: u64,
        #[arg(long)]
        n: u64,
        /// #X(F_q); enables the comparison and weight bounds.
        #[arg(long = "x-count")]
        x_count: Option<u64>,
    },
    /// Largest d for given n, or smallest n for given d, at dimension k
    Griesmer {
        #[arg(long, value_enum, default_value_t = GriesmerArg::MaxD)]
        mode: GriesmerArg,
        /// Length (max-d) or distance (min-n).
        #[arg(long)]
        value: u64,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        q: u64,
    },
    /// d <= n - k + 1
    Singleton {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Conjectured d for C_h on the Hermitian surface.
    Sorensen {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        h: u64,
        #[arg(long)]
        r: u64,
    },
    /// Lower bound for C_h on the Hermitian surface, h >= 2
    HermitianCh {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        h: u64,
        #[arg(long)]
        r: u64,
    },
    /// Normalized ruled surface over a curve with a points.
    Ruled {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        b1: u64,
        #[arg(long)]
        b2: u64,
        #[arg(long, allow_negative_numbers = true)]
        e: i64,
    },
    /// Deligne-Lusztig surface of type 2A4 over GF(q^2).
    DlA24 {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        h: u64,
    },
    /// Closed-form rational point counts.
    Counts(CountArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GriesmerArg {
    MaxD,
    MinN,
}

/// Rendered command output: JSON plus an optional dedicated table.
struct Output {
    json: Value,
    table: Option<Table>,
}

struct Table {
    headers: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Output {
    fn json(json: Value) -> Output {
        Output { json, table: None }
    }

    fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(serde_json::to_string_pretty(&self.json)? + "\n"),
            Format::Csv => {
                let t = self.table.as_ref().map_or_else(|| flatten(&self.json), |t| t.clone_ref());
                let mut w = csv::Writer::from_writer(Vec::new());
                let io = |e: csv::Error| Error::Io(e.into());
                w.write_record(&t.headers).map_err(io)?;
                for r in &t.rows {
                    w.write_record(r).map_err(io)?;
                }
                let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
                Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
            }
            Format::Table => {
                let t = self.table.as_ref().map_or_else(|| flatten(&self.json), |t| t.clone_ref());
                Ok(t.aligned())
            }
        }
    }
}

impl Table {
    fn clone_ref(&self) -> Table {
        Table {
            headers: self.headers.clone(),
            rows: self.rows.clone(),
        }
    }

    fn aligned(&self) -> String {
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.len()).collect();
        for r in &self.rows {
            for (w, c) in widths.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let s: Vec<String> = cells.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
            s.join("  ").trim_end().to_string() + "\n"
        };
        let mut out = line(&self.headers);
        out += &(line(&widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>()));
        for r in &self.rows {
            out += &line(r);
        }
        out
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

/// Arrays of objects become one row per element; objects become key/value rows.
fn flatten(v: &Value) -> Table {
    match v {
        Value::Array(items) if items.iter().all(Value::is_object) && !items.is_empty() => {
            let mut headers: Vec<String> = Vec::new();
            for it in items {
                for k in it.as_object().unwrap().keys() {
                    if !headers.contains(k) {
                        headers.push(k.clone());
                    }
                }
            }
            let rows = items
                .iter()
                .map(|it| headers.iter().map(|h| it.get(h).map_or(String::new(), cell)).collect())
                .collect();
            Table { headers, rows }
        }
        Value::Object(map) => Table {
            headers: vec!["key".into(), "value".into()],
            rows: map.iter().map(|(k, v)| vec![k.clone(), cell(v)]).collect(),
        },
        other => Table {
            headers: vec!["value".into()],
            rows: vec![vec![cell(other)]],
        },
    }
}

fn read_json_arg(arg: &str) -> Result<Value> {
    let t = arg.trim_start();
    let text = if t.starts_with('{') || t.starts_with('[') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg)?
    };
    Ok(serde_json::from_str(&text)?)
}

fn parse_descriptor(v: Value) -> Result<Descriptor> {
    Ok(serde_json::from_value(v)?)
}

fn descriptor_arg(arg: &str) -> Result<Descriptor> {
    parse_descriptor(read_json_arg(arg)?)
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report serializes")
}

fn report(r: BoundReport) -> Output {
    Output::json(to_value(&r))
}

fn run_bound(cmd: &BoundCmd) -> Result<Output> {
    Ok(match *cmd {
        BoundCmd::Elementary { n, s, delta, q } => report(BoundReport::new(
            "elementary",
            &[("n", json!(n)), ("s", json!(s)), ("delta", json!(delta)), ("q", json!(q))],
            BoundValue::DLower {
                d: elementary_bound(n, s, delta, q)?,
            },
            anchor::ELEMENTARY,
        )),
        BoundCmd::Covering { n, a, big_n, eta, l } => report(BoundReport::new(
            "covering",
            &[("n", json!(n)), ("a", json!(a)), ("N", json!(big_n)), ("eta", json!(eta)), ("l", json!(l))],
            BoundValue::DLower {
                d: covering_family_bound(n, a, big_n, eta, l)?,
            },
            anchor::COVERING,
        )),
        BoundCmd::CayleyBacharach { ref degrees, h } => report(
            BoundReport::new(
                "cayley-bacharach",
                &[("degrees", json!(degrees)), ("h", json!(h))],
                BoundValue::CayleyBacharach(cayley_bacharach_bound(degrees, h)?),
                anchor::CAYLEY_BACHARACH,
            )
            .with_note("ballico_fontanari holds only when every m+1 points of S span P^m"),
        ),
        BoundCmd::Weil { q, m, s } => {
            let i = weil_hypersurface_interval(q, m, s)?;
            report(BoundReport::new(
                "weil",
                &[("q", json!(q)), ("m", json!(m)), ("s", json!(s))],
                BoundValue::Interval { lo: i.lo, hi: i.hi },
                anchor::WEIL,
            ))
        }
        BoundCmd::Lachaud { q, m, s, n, x_count } => report(BoundReport::new(
            "lachaud",
            &[("q", json!(q)), ("m", json!(m)), ("s", json!(s)), ("n", json!(n)), ("x_count", json!(x_count))],
            BoundValue::Sections(lachaud_section_bounds(q, m, s, n, x_count)?),
            anchor::LACHAUD_SECTIONS,
        )),
        BoundCmd::Griesmer { mode, value, k, q } => {
            let (m, key) = match mode {
                GriesmerArg::MaxD => (GriesmerMode::MaxD, "n"),
                GriesmerArg::MinN => (GriesmerMode::MinN, "d"),
            };
            let v = griesmer(value, k, q, m)?;
            let value_out = match m {
                GriesmerMode::MaxD => BoundValue::DUpper { d: v as i64 },
                GriesmerMode::MinN => BoundValue::Length { n: v },
            };
            report(BoundReport::new(
                "griesmer",
                &[(key, json!(value)), ("k", json!(k)), ("q", json!(q))],
                value_out,
                anchor::GRIESMER,
            ))
        }
        BoundCmd::Singleton { n, k } => report(BoundReport::new(
            "singleton",
            &[("n", json!(n)), ("k", json!(k))],
            BoundValue::DUpper { d: singleton(n, k) },
            anchor::SINGLETON,
        )),
        BoundCmd::Sorensen { n, h, r } => report(BoundReport::new(
            "sorensen",
            &[("n", json!(n)), ("h", json!(h)), ("r", json!(r))],
            BoundValue::DLower {
                d: sorensen_bound(n, h, r),
            },
            anchor::SORENSEN,
        )),
        BoundCmd::HermitianCh { n, h, r } => report(BoundReport::new(
            "hermitian-ch",
            &[("n", json!(n)), ("h", json!(h)), ("r", json!(r))],
            BoundValue::DLower {
                d: hermitian_ch_bound(n, h, r)?,
            },
            anchor::HERMITIAN_CH,
        )),
        BoundCmd::Ruled { a, q, b1, b2, e } => {
            let (n, d) = ruled_surface_bound(a, q, b1, b2, e)?;
            report(BoundReport::new(
                "ruled",
                &[("a", json!(a)), ("q", json!(q)), ("b1", json!(b1)), ("b2", json!(b2)), ("e", json!(e))],
                BoundValue::Code {
                    n,
                    k: 0,
                    d_lower: d,
                },
                anchor::RULED,
            )
            .with_note("k is not determined by the bound"))
        }
        BoundCmd::DlA24 { q, h } => {
            let (n, k, d) = dl_a24_params(q, h)?;
            report(BoundReport::new(
                "dl-a24",
                &[("q", json!(q)), ("h", json!(h))],
                BoundValue::Code { n, k, d_lower: d },
                anchor::DL_A24,
            ))
        }
        BoundCmd::Counts(ref c) => report(run_counts(c)?),
    })
}

fn run_counts(c: &CountArgs) -> Result<BoundReport> {
    let need = |v: Option<u64>, name: &str| v.ok_or_else(|| Error::InvalidParams(format!("--{name} is required")));
    let (inputs, value) = match c.family {
        CountFamily::Projective => {
            let q = need(c.q, "q")?;
            (vec![("q", json!(q)), ("m", json!(c.m))], projective_count(q, c.m))
        }
        CountFamily::Quadric => {
            let q = need(c.q, "q")?;
            let w = need(c.w.map(u64::from), "w")? as u8;
            let v = match c.rho {
                Some(rho) => quadric_count(q, c.m, rho, w)?,
                None => nondegenerate_quadric_count(q, c.m, w)?,
            };
            (vec![("q", json!(q)), ("m", json!(c.m)), ("rho", json!(c.rho)), ("w", json!(w))], v)
        }
        CountFamily::Hermitian => {
            let r = need(c.r, "r")?;
            (vec![("r", json!(r)), ("m", json!(c.m))], hermitian_count(r, c.m)?)
        }
        CountFamily::Grassmann => {
            let q = need(c.q, "q")?;
            let l = need(c.l.map(u64::from), "l")? as u32;
            (vec![("q", json!(q)), ("l", json!(l)), ("m", json!(c.m))], gaussian_binomial(q, c.m, l))
        }
        CountFamily::Flag => {
            let q = need(c.q, "q")?;
            if c.m < 2 {
                return Err(Error::InvalidParams("flag counts need m >= 2".into()));
            }
            (vec![("q", json!(q)), ("m", json!(c.m))], flag_count(q, c.m))
        }
    };
    let family = to_value(&c.family_name());
    let mut all = vec![("family", family)];
    all.extend(inputs);
    Ok(BoundReport::new("counts", &all, BoundValue::Count { value }, anchor::COUNTS))
}

impl CountArgs {
    fn family_name(&self) -> &'static str {
        match self.family {
            CountFamily::Projective => "projective",
            CountFamily::Quadric => "quadric",
            CountFamily::Hermitian => "hermitian",
            CountFamily::Grassmann => "grassmann",
            CountFamily::Flag => "flag",
        }
    }
}

fn run_field(q: u64, op: Option<Op>, a: Option<u32>, b: Option<u32>, elements: bool) -> Result<Output> {
    let f = field_of_order(q)?;
    let mut out = Map::new();
    out.insert("p".into(), json!(f.p()));
    out.insert("e".into(), json!(f.e()));
    out.insert("q".into(), json!(f.q()));
    out.insert("modulus".into(), json!(f.modulus()));
    out.insert("generator".into(), json!(f.generator().0));
    if let Some(op) = op {
        let a = Elem(a.ok_or_else(|| Error::InvalidParams("--a is required".into()))?);
        let b = b.map(Elem);
        if !f.contains(a) || b.is_some_and(|b| !f.contains(b)) {
            return Err(Error::InvalidParams(format!("operands must be below {q}")));
        }
        let need_b = || b.ok_or_else(|| Error::InvalidParams("--b is required".into()));
        let r = match op {
            Op::Add => f.add(a, need_b()?),
            Op::Sub => f.sub(a, need_b()?),
            Op::Mul => f.mul(a, need_b()?),
            Op::Div => f.div(a, need_b()?)?,
            Op::Inv => f.inv(a)?,
            Op::Pow => f.apply(ArithOp::Pow(need_b()?.0 as u64), a, Elem::ZERO)?,
        };
        out.insert("result".into(), json!(r.0));
    }
    if elements {
        let rows: Vec<Value> = f.elements().map(|x| json!({"element": x.0, "log": f.log(x)})).collect();
        out.insert("elements".into(), Value::Array(rows));
    }
    Ok(Output::json(Value::Object(out)))
}

fn run_points(desc: &Descriptor) -> Result<Output> {
    let c = construct(desc, 1)?;
    let ps = c.points;
    let table = Table {
        headers: vec!["index".into(), "label".into(), "coords".into()],
        rows: ps
            .points()
            .iter()
            .zip(ps.labels())
            .enumerate()
            .map(|(i, (p, l))| vec![i.to_string(), l.clone(), format_point(p)])
            .collect(),
    };
    Ok(Output {
        json: to_value(&ps.to_json()),
        table: Some(table),
    })
}

fn run_analyze(path: &Path, tasks: &[String], timing: bool, search: &Search) -> Result<Output> {
    let code = artifact::load(path)?;
    let mut out = Map::new();
    out.insert("n".into(), json!(code.n()));
    out.insert("k".into(), json!(code.k()));
    out.insert("q".into(), json!(code.q()));
    let mut times = Map::new();
    for task in tasks {
        let start = Instant::now();
        match task.trim() {
            "d" => {
                out.insert("d".into(), json!(min_distance(&code, search)?));
            }
            "wdist" => {
                out.insert("weight_distribution".into(), to_value(&weight_distribution(&code, search)?));
            }
            t if t.starts_with("ghw:") => {
                let r: usize = t[4..]
                    .parse()
                    .map_err(|_| Error::InvalidParams(format!("bad GHW order in task {t:?}")))?;
                let entry = out.entry("ghw").or_insert_with(|| json!({}));
                entry[r.to_string()] = json!(ghw(&code, r, search)?);
            }
            t => return Err(Error::InvalidParams(format!("unknown task {t:?}; expected d, wdist or ghw:R"))),
        }
        times.insert(task.clone(), json!(start.elapsed().as_millis() as u64));
    }
    if timing {
        out.insert("timing_ms".into(), Value::Object(times));
    }
    Ok(Output::json(Value::Object(out)))
}

fn compare_entries(args: &[String], default_h: u32) -> Result<Vec<(Descriptor, u32)>> {
    let mut entries = Vec::new();
    for a in args {
        let v = read_json_arg(a)?;
        let items = match v {
            Value::Array(items) => items,
            other => vec![other],
        };
        for mut item in items {
            let h = match item.as_object_mut().and_then(|o| o.remove("h")) {
                Some(h) => h
                    .as_u64()
                    .and_then(|h| u32::try_from(h).ok())
                    .ok_or_else(|| Error::InvalidParams(format!("bad h value {h}")))?,
                None => default_h,
            };
            entries.push((parse_descriptor(item)?, h));
        }
    }
    Ok(entries)
}

fn compare_table(rows: &[ComparisonRow]) -> Table {
    let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
    Table {
        headers: ["code", "h", "[n,k]", "d", "predicted", "griesmer", "singleton", "attains", "lower bounds", "error"]
            .map(String::from)
            .to_vec(),
        rows: rows
            .iter()
            .map(|r| {
                let nk = match (r.n, r.k) {
                    (Some(n), Some(k)) => format!("[{n},{k}]"),
                    _ => "-".into(),
                };
                let predicted = r.predicted_d.as_ref().map(|p| {
                    let vals = p.values.iter().map(i64::to_string).collect::<Vec<_>>().join("|");
                    format!("{vals} ({})", cell(&to_value(&p.status)))
                });
                let bounds = r.lower_bounds.iter().map(|b| format!("{}={}", b.name, b.d)).collect::<Vec<_>>();
                vec![
                    r.label.clone(),
                    r.h.to_string(),
                    nk,
                    opt(r.measured_d.map(|d| d.to_string())),
                    opt(predicted),
                    opt(r.griesmer_max_d.map(|d| d.to_string())),
                    opt(r.singleton.map(|d| d.to_string())),
                    opt(r.griesmer_attained.map(|b| if b { "yes" } else { "no" }.to_string())),
                    bounds.join(" "),
                    r.error.clone().unwrap_or_default(),
                ]
            })
            .collect(),
    }
}

fn run_export(path: &Path, what: ExportWhat, format: Format, search: &Search) -> Result<Output> {
    let code = artifact::load(path)?;
    match what {
        ExportWhat::Generator => {
            let g = code.generator();
            let rows: Vec<Vec<String>> =
                (0..g.rows()).map(|i| g.row(i).iter().map(|a| a.0.to_string()).collect()).collect();
            let json = match format {
                Format::Json => serde_json::from_str(&artifact::to_json(&code))?,
                _ => Value::Null,
            };
            Ok(Output {
                json,
                table: Some(Table {
                    headers: code.point_labels().to_vec(),
                    rows,
                }),
            })
        }
        ExportWhat::Weights => {
            let w = weight_distribution(&code, search)?;
            Ok(Output {
                json: to_value(&w),
                table: Some(Table {
                    headers: vec!["weight".into(), "count".into()],
                    rows: w.counts.iter().map(|(a, b)| vec![a.to_string(), b.to_string()]).collect(),
                }),
            })
        }
    }
}

/// Runs one invocation, writing the report to `--out` or `stdout`.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<()> {
    let search = match cli.workers {
        Some(w) => Search::new(cli.budget, w),
        None => Search {
            budget: cli.budget,
            ..Search::default()
        },
    };
    let mut out_path = cli.out.as_deref();
    let output = match &cli.command {
        Command::Field { q, op, a, b, elements } => run_field(*q, *op, *a, *b, *elements)?,
        Command::Points { descriptor } => run_points(&descriptor_arg(descriptor)?)?,
        Command::Build { descriptor, h } => {
            let code = build_from_descriptor(&descriptor_arg(descriptor)?, *h)?;
            match out_path.take() {
                Some(p) => {
                    artifact::save(&code, p)?;
                    Output::json(json!({
                        "n": code.n(),
                        "k": code.k(),
                        "kernel_dim": code.kernel_dim(),
                        "artifact": p.display().to_string(),
                    }))
                }
                None => Output::json(serde_json::from_str(&artifact::to_json(&code))?),
            }
        }
        Command::Analyze { artifact, tasks, timing } => run_analyze(artifact, tasks, *timing, &search)?,
        Command::Bound { bound } => run_bound(bound)?,
        Command::Predict { descriptor, h } => Output::json(to_value(&predict(&descriptor_arg(descriptor)?, *h)?)),
        Command::Compare { descriptors, h } => {
            let rows = compare(&compare_entries(descriptors, *h)?, &search);
            Output {
                json: to_value(&rows),
                table: Some(compare_table(&rows)),
            }
        }
        Command::Export { artifact, what } => run_export(artifact, *what, cli.format, &search)?,
    };
    let text = output.render(cli.format)?;
    match out_path {
        Some(p) => std::fs::write(p, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Parses `args`, runs, and returns the process exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli, &mut std::io::stdout().lock()) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_to_string(args: &[&str]) -> Result<String> {
        let cli = Cli::try_parse_from(std::iter::once("varcodes").chain(args.iter().copied())).unwrap();
        let mut buf = Vec::new();
        run(&cli, &mut buf)?;
        Ok(String::from_utf8(buf).unwrap())
    }

    #[test]
    fn field_arithmetic() {
        let v: Value = serde_json::from_str(&run_to_string(&["field", "4", "--op", "mul", "--a", "2", "--b", "3"]).unwrap()).unwrap();
        assert_eq!(v["result"], json!(1));
        assert_eq!(v["modulus"], json!([1, 1, 1]));
    }

    #[test]
    fn bound_reports() {
        let v: Value = serde_json::from_str(
            &run_to_string(&["bound", "elementary", "--n", "45", "--s", "3", "--delta", "2", "--q", "4"]).unwrap(),
        )
        .unwrap();
        assert_eq!(v["value"], json!({"kind": "d_lower", "d": 30}));
        let v: Value = serde_json::from_str(
            &run_to_string(&["bound", "griesmer", "--value", "81", "--k", "4", "--q", "8"]).unwrap(),
        )
        .unwrap();
        assert_eq!(v["value"]["d"], json!(69));
        let v: Value = serde_json::from_str(
            &run_to_string(&["bound", "counts", "--family", "hermitian", "--r", "2", "--m", "3"]).unwrap(),
        )
        .unwrap();
        assert_eq!(v["value"]["value"], json!(45));
        assert!(matches!(
            run_to_string(&["bound", "hermitian-ch", "--n", "45", "--h", "3", "--r", "2"]),
            Err(Error::HTooLarge { .. })
        ));
    }

    #[test]
    fn flatten_shapes() {
        let t = flatten(&json!([{"a": 1, "b": "x"}, {"a": 2, "c": null}]));
        assert_eq!(t.headers, vec!["a", "b", "c"]);
        assert_eq!(t.rows[1], vec!["2", "", ""]);
        let t = flatten(&json!({"n": 7}));
        assert_eq!(t.rows, vec![vec!["n".to_string(), "7".to_string()]]);
    }

    #[test]
    fn compare_entries_take_h_overrides() {
        let e = compare_entries(
            &[r#"[{"q":2,"family":"projective_space","m":2,"h":2},{"q":3,"family":"flag","m":3}]"#.to_string()],
            1,
        )
        .unwrap();
        assert_eq!(e.iter().map(|x| x.1).collect::<Vec<_>>(), vec![2, 1]);
    }
}
