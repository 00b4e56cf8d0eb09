//! Argument grammar and command dispatch.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use mexlab_core::bounds::{self, FormulaId};
use mexlab_core::construct::{deletion_method, norm_graph, NormGraphParams};
use mexlab_core::extraction::{extract_dense, ExtractionParams};
use mexlab_core::oracle::{OracleMode, OracleQuery};
use mexlab_core::{count_cliques, count_copies, edge_clique_participation, is_free, Graph, Rational};

use crate::edgelist;
use crate::error::{CliError, EXIT_OK, EXIT_USAGE};
use crate::experiment;
use crate::literal::{load_graph, load_pattern};
use crate::report::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Plain,
}

/// Graph arguments take an edge-list path or a literal: K<r>, K<s>_<t>[_..], C<l>, S<m>.
#[derive(Debug, Parser)]
#[command(name = "mexlab", version, about = "Clique counts in F-free graphs: bounds, constructions and exact search")]
pub struct Cli {
    /// Worker threads; output does not depend on this.
    #[arg(long, global = true, env = "MEXLAB_THREADS")]
    pub threads: Option<usize>,
    /// Seed for randomized commands; recorded in their reports.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Clique counts k_1..k_R.
    Count {
        #[arg(long)]
        input: String,
        #[arg(long, default_value_t = 3)]
        max_clique: usize,
    },
    /// Number of K_r containing each edge.
    Participation {
        #[arg(long)]
        input: String,
        #[arg(long)]
        r: usize,
    },
    /// Number of copies of a pattern.
    PatternCount {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        input: String,
    },
    /// Whether the input contains no copy of a pattern.
    FreeCheck {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        input: String,
    },
    /// Keep the edges lying in many K_r.
    Extract {
        #[arg(long)]
        input: String,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        alpha: f64,
        #[arg(long = "C")]
        c: f64,
        /// Report path; stdout if absent.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Where to write the extracted graph.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a closed-form exponent or constant.
    Bounds {
        #[arg(long, value_parser = formula_parser())]
        formula: String,
        /// Comma-separated k=v pairs; lists as s=[2,2,2].
        #[arg(long, default_value = "")]
        params: String,
    },
    #[command(subcommand)]
    Construct(Construct),
    #[command(subcommand)]
    Oracle(Oracle),
    /// Run a scaling experiment from a JSON spec.
    Experiment {
        spec: PathBuf,
        /// CSV path; stdout if absent.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

/// Graph goes to --out, or to stdout when absent. The report goes to
/// --report, or to stdout when the graph went to a file.
#[derive(Debug, Subcommand)]
pub enum Construct {
    NormGraph {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Deletion {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1.0)]
        c: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum Oracle {
    /// Max copies of the target over F-free graphs with exactly m edges.
    Mex {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        target: String,
        #[arg(long)]
        forbidden: String,
        #[arg(long)]
        max_vertices: Option<usize>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Max copies of the target over F-free graphs on n vertices.
    Ex {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        target: String,
        #[arg(long)]
        forbidden: String,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn formula_parser() -> clap::builder::PossibleValuesParser {
    clap::builder::PossibleValuesParser::new(FormulaId::ALL.map(FormulaId::as_str))
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind::{DisplayHelp, DisplayVersion};
            let text = e.render().to_string();
            return if matches!(e.kind(), DisplayHelp | DisplayVersion) {
                let _ = out.write_all(text.as_bytes());
                EXIT_OK
            } else {
                let _ = err.write_all(text.as_bytes());
                EXIT_USAGE
            };
        }
    };
    match execute(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "{}", serde_json::to_string(&e.report()).unwrap_or_default());
            e.exit_code()
        }
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cli.threads {
        if t == 0 {
            return Err(CliError::invalid("--threads must be at least 1"));
        }
        pool = pool.num_threads(t);
    }
    let pool = pool
        .build()
        .map_err(|e| CliError::invalid(format!("thread pool: {e}")))?;
    dispatch(cli, &pool, out)
}

struct Emitter<'a> {
    format: OutputFormat,
    out: &'a mut dyn Write,
}

impl Emitter<'_> {
    fn render<T: Serialize>(&self, report: &T) -> Result<String, CliError> {
        let value = serde_json::to_value(report).map_err(|e| CliError::invalid(e.to_string()))?;
        Ok(match self.format {
            OutputFormat::Json | OutputFormat::Csv => {
                let mut s = serde_json::to_string_pretty(&value).map_err(|e| CliError::invalid(e.to_string()))?;
                s.push('\n');
                s
            }
            OutputFormat::Plain => plain(&value),
        })
    }

    fn stdout(&mut self, text: &str) -> Result<(), CliError> {
        self.out
            .write_all(text.as_bytes())
            .map_err(|e| CliError::io("<stdout>", e))
    }

    /// Writes `report` to `path`, or to stdout.
    fn report<T: Serialize>(&mut self, report: &T, path: Option<&Path>) -> Result<(), CliError> {
        let text = self.render(report)?;
        match path {
            Some(p) => std::fs::write(p, text).map_err(|e| CliError::io(p, e)),
            None => self.stdout(&text),
        }
    }

    fn graph(&mut self, g: &Graph, path: Option<&Path>) -> Result<(), CliError> {
        match path {
            Some(p) => edgelist::write_file(p, g),
            None => self.stdout(&edgelist::write(g)),
        }
    }
}

/// One `key: value` line per top-level field.
fn plain(value: &serde_json::Value) -> String {
    let mut s = String::new();
    if let serde_json::Value::Object(map) = value {
        for (k, v) in map {
            match v {
                serde_json::Value::String(t) if !t.contains('\n') => s += &format!("{k}: {t}\n"),
                other => s += &format!("{k}: {other}\n"),
            }
        }
    }
    s
}

fn dispatch(cli: &Cli, pool: &rayon::ThreadPool, out: &mut dyn Write) -> Result<(), CliError> {
    if cli.format == OutputFormat::Csv && !matches!(cli.command, Command::Experiment { .. }) {
        return Err(CliError::invalid("--format csv applies to experiment only"));
    }
    let mut em = Emitter { format: cli.format, out };
    match &cli.command {
        Command::Count { input, max_clique } => {
            if *max_clique < 1 {
                return Err(CliError::invalid("--max-clique must be at least 1"));
            }
            let g = load_graph(input)?;
            let k = count_cliques(&g, *max_clique);
            em.report(&CountReport::new(&g, &k), None)
        }
        Command::Participation { input, r } => {
            let g = load_graph(input)?;
            let counts = edge_clique_participation(&g, *r)?;
            em.report(&ParticipationReport::new(*r, &counts), None)
        }
        Command::PatternCount { pattern, input } => {
            let f = load_pattern(pattern)?;
            let g = load_graph(input)?;
            let count = count_copies(&f, &g)?;
            em.report(&PatternCountReport::new(&f, count), None)
        }
        Command::FreeCheck { pattern, input } => {
            let f = load_pattern(pattern)?;
            let g = load_graph(input)?;
            em.report(&FreeCheckReport::new(&f, is_free(&f, &g)), None)
        }
        Command::Extract {
            input,
            r,
            alpha,
            c,
            report,
            out,
        } => {
            let g = load_graph(input)?;
            let p = ExtractionParams::new(*r, *alpha, *c)?;
            let (h, rep) = extract_dense(&g, &p)?;
            if let Some(path) = out {
                edgelist::write_file(path, &h)?;
            }
            em.report(&ExtractionReportDto::from(&rep), report.as_deref())
        }
        Command::Bounds { formula, params } => {
            let id = FormulaId::parse(formula).ok_or_else(|| CliError::Usage(format!("unknown formula {formula}")))?;
            let rep = evaluate_bound(id, params)?;
            em.report(&ExponentReportDto::from(&rep), None)
        }
        Command::Construct(Construct::NormGraph { q, s, out }) => {
            let params = NormGraphParams::new(*q, *s)?;
            let g = norm_graph(params)?;
            em.graph(&g, out.as_deref())?;
            if out.is_some() {
                em.report(
                    &NormGraphReport {
                        kind: "norm_graph",
                        q: *q,
                        s: *s,
                        n: g.n(),
                        m: g.m(),
                    },
                    None,
                )?;
            }
            Ok(())
        }
        Command::Construct(Construct::Deletion {
            pattern,
            u,
            r,
            n,
            c,
            out,
            report,
        }) => {
            let f = load_pattern(pattern)?;
            let (g, run) = deletion_method(&f, *u, *r, *n, cli.seed, *c)?;
            em.graph(&g, out.as_deref())?;
            if out.is_some() || report.is_some() {
                em.report(&DeletionReport::from(&run), report.as_deref())?;
            }
            Ok(())
        }
        Command::Oracle(Oracle::Mex {
            m,
            target,
            forbidden,
            max_vertices,
            report,
        }) => {
            let mut q = OracleQuery::mex(*m, load_pattern(target)?, load_pattern(forbidden)?);
            if let Some(v) = max_vertices {
                q.max_vertices = *v;
            }
            let res = q.run()?;
            em.report(&OracleReport::new(OracleMode::Mex { m: *m }, &res), report.as_deref())
        }
        Command::Oracle(Oracle::Ex {
            n,
            target,
            forbidden,
            report,
        }) => {
            let res = OracleQuery::ex(*n, load_pattern(target)?, load_pattern(forbidden)?).run()?;
            em.report(&OracleReport::new(OracleMode::Ex { n: *n }, &res), report.as_deref())
        }
        Command::Experiment { spec, csv } => {
            let spec = experiment::load_spec(spec)?;
            let res = pool.install(|| experiment::run(&spec))?;
            let csv_err = |path: &Path| {
                let path = path.to_path_buf();
                move |e: csv::Error| match e.into_kind() {
                    csv::ErrorKind::Io(io) => CliError::io(path, io),
                    other => CliError::invalid(format!("csv: {other:?}")),
                }
            };
            match csv {
                Some(path) => {
                    let file = std::fs::File::create(path).map_err(|e| CliError::io(path, e))?;
                    experiment::write_csv(&res, file).map_err(csv_err(path))?;
                    if cli.format == OutputFormat::Csv {
                        return Ok(());
                    }
                    em.report(&ExperimentReport::new(spec.family.name(), spec.u, spec.r, &res), None)
                }
                None => {
                    let mut buf = Vec::new();
                    experiment::write_csv(&res, &mut buf).map_err(csv_err(Path::new("<stdout>")))?;
                    em.stdout(&String::from_utf8_lossy(&buf))
                }
            }
        }
    }
}

/// Splits `a=1,b=[1,2],c=3/4` on top-level commas.
pub fn split_params(s: &str) -> Result<BTreeMap<String, String>, CliError> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    let mut map = BTreeMap::new();
    for part in parts.into_iter().map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| CliError::invalid(format!("parameter {part:?} is not k=v")))?;
        if map.insert(k.trim().to_string(), v.trim().to_string()).is_some() {
            return Err(CliError::invalid(format!("parameter {k} given twice")));
        }
    }
    Ok(map)
}

struct Params(BTreeMap<String, String>);

impl Params {
    fn take(&mut self, key: &str) -> Result<String, CliError> {
        self.0
            .remove(key)
            .ok_or_else(|| CliError::invalid(format!("missing parameter {key}")))
    }

    fn bad(key: &str, v: &str, what: &str) -> CliError {
        CliError::invalid(format!("parameter {key}={v} is not {what}"))
    }

    fn int(&mut self, key: &str) -> Result<usize, CliError> {
        let v = self.take(key)?;
        v.parse().map_err(|_| Self::bad(key, &v, "a non-negative integer"))
    }

    fn opt_int(&mut self, key: &str) -> Result<Option<usize>, CliError> {
        if self.0.contains_key(key) {
            self.int(key).map(Some)
        } else {
            Ok(None)
        }
    }

    fn real(&mut self, key: &str) -> Result<f64, CliError> {
        let v = self.take(key)?;
        parse_rational(&v)
            .map(|r| *r.numer() as f64 / *r.denom() as f64)
            .or_else(|| v.parse().ok())
            .ok_or_else(|| Self::bad(key, &v, "a number"))
    }

    fn rational(&mut self, key: &str) -> Result<Rational, CliError> {
        let v = self.take(key)?;
        parse_rational(&v).ok_or_else(|| Self::bad(key, &v, "a rational p/q or a decimal"))
    }

    fn list(&mut self, key: &str) -> Result<Vec<usize>, CliError> {
        let v = self.take(key)?;
        let inner = v
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Self::bad(key, &v, "a list [a,b,...]"))?;
        inner
            .split(',')
            .map(|t| t.trim().parse().map_err(|_| Self::bad(key, &v, "a list of integers")))
            .collect()
    }

    fn finish(self) -> Result<(), CliError> {
        match self.0.keys().next() {
            Some(k) => Err(CliError::invalid(format!("unknown parameter {k}"))),
            None => Ok(()),
        }
    }
}

/// Exact value of `p/q`, an integer, or a terminating decimal.
pub fn parse_rational(s: &str) -> Option<Rational> {
    if let Some((p, q)) = s.split_once('/') {
        let (p, q): (i64, i64) = (p.trim().parse().ok()?, q.trim().parse().ok()?);
        return (q != 0).then(|| Rational::new(p, q));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, s),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) || frac.len() > 15 {
        return None;
    }
    let den = 10i64.checked_pow(frac.len() as u32)?;
    let num: i64 = format!("{int}{frac}").parse().ok()?;
    let r = Rational::new(num, den);
    Some(if neg { -r } else { r })
}

pub fn evaluate_bound(id: FormulaId, params: &str) -> Result<bounds::ExponentReport, CliError> {
    let mut p = Params(split_params(params)?);
    let rep = match id {
        FormulaId::Lemma21Constant => bounds::lemma21_report(p.int("u")?, p.int("r")?),
        FormulaId::Cor12 => bounds::cor12_report(p.int("r")?, p.rational("s")?),
        FormulaId::Thm13F => bounds::thm13_report(p.real("alpha")?, p.real("beta")?),
        FormulaId::Cor14Kst => bounds::cor14_kst(p.int("r")?, p.int("s")?, p.opt_int("t")?),
        FormulaId::Thm15General => {
            let (u, r) = (p.int("u")?, p.int("r")?);
            bounds::thm15_general(u, r, &load_pattern(&p.take("pattern")?)?)
        }
        FormulaId::Thm41KstLower => bounds::thm41_kst_lower(p.int("u")?, p.int("r")?, p.int("s")?, p.int("t")?),
        FormulaId::Thm43Multipartite => bounds::thm43_multipartite(p.int("r")?, &p.list("s")?),
        FormulaId::Remark42OnePart => bounds::remark42_one_part(p.int("r")?, &p.list("s")?),
        FormulaId::Cor44TripartiteLower => bounds::cor44_tripartite_lower(p.int("s1")?, p.int("s2")?, p.int("s3")?),
        FormulaId::Thm46JoinCycle => bounds::thm46_join_cycle(p.int("r")?, p.int("s")?, p.int("l")?),
        FormulaId::Cor17Classifier => {
            let t = p.int("t")?;
            bounds::cor17_report(&load_pattern(&p.take("pattern")?)?, t)
        }
    }?;
    p.finish()?;
    Ok(rep)
}
