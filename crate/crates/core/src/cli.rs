//! Command-line front end.
//!
//! Insertions are written `L(a,b)` for generators and `L(a,b;m,n)` for
//! general quadratics, with vectors given as basis labels or rational
//! combinations such as `(1/2)e1+(1/3)e2`. Lists are separated by `;` or
//! whitespace.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::corr::random::{random_insertion_list, rng};
use crate::corr::{
    corr_check, corr_closed_form, corr_diagram_sum, corr_direct, corr_recursion, enum_diagrams,
    CheckOptions, CheckReport, InsertionList, Method, Prefactor, Side,
};
use crate::error::{Error, Result};
use crate::exact::{as_positive_int, parse_rational, CorrFn, Format};
use crate::jordan::{endo_from_pair, jordan_product, trace_cycle};
use crate::lca::{Lca, Level, Quadratic};
use crate::superlinear::{make_type_space, FormedSpace, JType, Vector};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "voacorr", version, about = "Exact correlation functions of Jordan-type vertex algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args, Clone)]
struct TypeArgs {
    /// Jordan type: A, B or C.
    #[arg(long = "type", value_name = "X")]
    jtype: JType,
    #[arg(long, default_value_t = 1)]
    rank: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute a correlation function with one or more engines.
    Corr {
        #[command(flatten)]
        ty: TypeArgs,
        /// `symbolic` or a rational value of r.
        #[arg(long, default_value = "symbolic")]
        level: String,
        #[arg(long, default_value = "")]
        insertions: String,
        /// recursion, diagrams, closed, direct (repeat or comma-separate).
        #[arg(long = "method", value_delimiter = ',', default_value = "closed")]
        methods: Vec<String>,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Print every nonzero k-th product of two quadratics.
    Bracket {
        #[command(flatten)]
        ty: TypeArgs,
        x: String,
        y: String,
        /// Print the affinization bracket [x t^p, y t^q] instead.
        #[arg(long, num_args = 2, value_names = ["P", "Q"], allow_hyphen_values = true)]
        modes: Option<Vec<i64>>,
        #[arg(long, default_value = "symbolic")]
        level: String,
    },
    /// The 2-cocycle c(x, y).
    Cocycle {
        #[command(flatten)]
        ty: TypeArgs,
        x: String,
        y: String,
    },
    /// Matrices, Jordan products and traces of generators.
    Jordan {
        #[command(flatten)]
        ty: TypeArgs,
        /// Trace of the ordered product of the listed generators.
        #[arg(long, conflicts_with = "product")]
        trace: bool,
        /// Jordan product of exactly two generators.
        #[arg(long)]
        product: bool,
        generators: Vec<String>,
    },
    /// Count or list contraction diagrams.
    Diagrams {
        #[arg(long = "type", value_name = "X")]
        jtype: JType,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count: bool,
    },
    /// Cross-verify the engines on random insertion lists.
    Check {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, value_delimiter = ',', default_value = "1,2")]
        ranks: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "A,B,C")]
        types: Vec<JType>,
        #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
        r_samples: Vec<u32>,
        /// Random lists per (type, rank, n).
        #[arg(long, default_value_t = 3)]
        instances: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Drop the cycle factor of the closed-form prefactor.
        #[arg(long, hide = true)]
        corrupt_prefactor: bool,
    },
    /// Time the engines; prints CSV.
    Bench {
        #[arg(long = "type", value_name = "X", default_value = "B")]
        jtype: JType,
        #[arg(long, default_value_t = 2)]
        rank: usize,
        #[arg(long, default_value_t = 2)]
        min_n: usize,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Replay the golden corpus.
    Selftest {
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

/// A `corr` job as stored in the golden corpus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobSpec {
    pub jtype: JType,
    pub rank: usize,
    #[serde(default = "symbolic")]
    pub level: String,
    pub insertions: Vec<String>,
    pub methods: Vec<Method>,
    #[serde(default = "text")]
    pub format: String,
    #[serde(default)]
    pub seed: u64,
}

fn symbolic() -> String {
    "symbolic".into()
}

fn text() -> String {
    "text".into()
}

// ------------------------------------------------------------------ parsing

/// Splits at `sep` outside parentheses.
fn split_top(s: &str, sep: impl Fn(char) -> bool) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth == 0 && sep(ch) {
            if !cur.trim().is_empty() {
                out.push(cur.trim().to_string());
            }
            cur.clear();
        } else {
            cur.push(ch);
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

pub fn split_insertions(s: &str) -> Vec<String> {
    split_top(s, |c| c == ';' || c.is_whitespace())
}

/// `L(a,b)` or `L(a,b;m,n)` parsed into vectors and modes.
pub fn parse_label(space: &FormedSpace, s: &str) -> Result<(Vector, Vector, u32, u32)> {
    let s = s.trim();
    let inner = s
        .strip_prefix("L(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected L(a,b) or L(a,b;m,n), got `{s}`")))?;
    let halves = split_top(inner, |c| c == ';');
    let (vecs, modes) = match halves.as_slice() {
        [v] => (v.as_str(), None),
        [v, m] => (v.as_str(), Some(m.as_str())),
        _ => return Err(Error::Parse(format!("malformed insertion `{s}`"))),
    };
    let parts = split_top(vecs, |c| c == ',');
    let [a, b] = parts.as_slice() else {
        return Err(Error::Parse(format!("expected two vectors in `{s}`")));
    };
    let (m, n) = match modes {
        None => (1, 1),
        Some(ms) => {
            let nums: Vec<&str> = ms.split(',').map(str::trim).collect();
            let [m, n] = nums.as_slice() else {
                return Err(Error::Parse(format!("expected two modes in `{s}`")));
            };
            let p = |x: &str| x.parse::<u32>().map_err(|_| Error::Parse(format!("bad mode `{x}`")));
            (p(m)?, p(n)?)
        }
    };
    Ok((space.parse_vector(a)?, space.parse_vector(b)?, m, n))
}

pub fn parse_insertions(jtype: JType, rank: usize, specs: &[String]) -> Result<InsertionList> {
    let space = Arc::new(make_type_space(jtype, rank)?);
    let mut entries = Vec::new();
    for s in specs {
        let (a, b, m, n) = parse_label(&space, s)?;
        if (m, n) != (1, 1) {
            return Err(Error::NonGenerator);
        }
        entries.push((a, b));
    }
    InsertionList::with_space(space, entries)
}

fn parse_quadratic(lca: &Lca, s: &str) -> Result<Quadratic> {
    let (a, b, m, n) = parse_label(lca.space(), s)?;
    lca.quadratic(&a, &b, m, n)
}

fn parse_level(s: &str) -> Result<Level> {
    if s.eq_ignore_ascii_case("symbolic") || s == "r" {
        Ok(Level::Symbolic)
    } else {
        Ok(Level::Value(parse_rational(s)?))
    }
}

// ------------------------------------------------------------------ corr

/// Output of a `corr` job.
#[derive(Debug, Clone)]
pub struct CorrOutput {
    pub results: Vec<(Method, CorrFn)>,
    pub agreement: bool,
    pub witness: Option<String>,
}

pub fn run_job(spec: &JobSpec) -> Result<CorrOutput> {
    let t = parse_insertions(spec.jtype, spec.rank, &spec.insertions)?;
    let level = parse_level(&spec.level)?;
    if spec.methods.is_empty() {
        return Err(Error::Parse("no method given".into()));
    }
    let mut results = Vec::new();
    for &m in &spec.methods {
        let f = match m {
            Method::Direct => {
                let r = match &level {
                    Level::Value(v) => as_positive_int(v).ok_or_else(|| Error::InvalidLevel(v.clone()))?,
                    Level::Symbolic => {
                        return Err(Error::Parse("the direct method needs --level <positive integer>".into()))
                    }
                };
                corr_direct(&t, r)?
            }
            _ => {
                let f = match m {
                    Method::Recursion => corr_recursion(&t)?,
                    Method::Diagrams => corr_diagram_sum(&t)?,
                    _ => corr_closed_form(&t)?,
                };
                match &level {
                    Level::Symbolic => f,
                    Level::Value(v) => f.specialize(v),
                }
            }
        };
        results.push((m, f));
    }
    let mut witness = None;
    for (_, f) in &results[1..] {
        if let Some(w) = results[0].1.difference_witness(f)? {
            witness = Some(w);
            break;
        }
    }
    Ok(CorrOutput {
        agreement: witness.is_none(),
        results,
        witness,
    })
}

pub fn render_job(out: &CorrOutput, format: Format) -> String {
    if format == Format::Json {
        let with_method = |m: &Method, f: &CorrFn| {
            let mut v = f.to_json();
            v["method"] = json!(m.to_string());
            v["agreement"] = json!(out.agreement);
            v
        };
        let v = if out.results.len() == 1 {
            with_method(&out.results[0].0, &out.results[0].1)
        } else {
            let mut v = json!({
                "results": out.results.iter().map(|(m, f)| with_method(m, f)).collect::<Vec<_>>(),
                "agreement": out.agreement,
            });
            if let Some(w) = &out.witness {
                v["witness"] = json!(w);
            }
            v
        };
        return v.to_string();
    }
    if out.results.len() == 1 {
        return out.results[0].1.render(format);
    }
    let mut lines: Vec<String> = out
        .results
        .iter()
        .map(|(m, f)| format!("{m}: {}", f.render(format)))
        .collect();
    lines.push(format!("agreement: {}", out.agreement));
    if let Some(w) = &out.witness {
        lines.push(format!("witness: {w}"));
    }
    lines.join("\n")
}

fn methods_from(names: &[String]) -> Result<Vec<Method>> {
    names.iter().map(|s| s.trim().parse()).collect()
}

// ------------------------------------------------------------------ other subcommands

fn cmd_bracket(ty: &TypeArgs, x: &str, y: &str, modes: Option<&[i64]>, level: &str) -> Result<String> {
    let lca = Lca::new(ty.jtype, ty.rank)?;
    let (qx, qy) = (parse_quadratic(&lca, x)?, parse_quadratic(&lca, y)?);
    let (ex, ey) = (lca.element(&qx)?, lca.element(&qy)?);
    let space = lca.space();
    if let Some(&[p, q]) = modes {
        let b = lca.lie_bracket_modes(&ex, p, &ey, q, &parse_level(level)?)?;
        let mut lines: Vec<String> = b
            .terms
            .iter()
            .map(|((k, t), c)| {
                format!("{c}*L({},{};{},{}) t^{t}", space.label(k.a), space.label(k.b), k.m, k.n)
            })
            .collect();
        if !b.central.is_zero() {
            lines.push(format!("({}) K t^-1", b.central));
        }
        return Ok(if lines.is_empty() { "0".into() } else { lines.join("\n") });
    }
    let top = qx.degree() + qy.degree() - 1;
    let mut lines = Vec::new();
    for k in 0..=top {
        let p = lca.kth_product(&ex, k, &ey)?;
        if !p.is_zero() {
            lines.push(format!("({k}): {}", lca.render(&p)));
        }
    }
    Ok(if lines.is_empty() { "0".into() } else { lines.join("\n") })
}

fn cmd_cocycle(ty: &TypeArgs, x: &str, y: &str) -> Result<String> {
    let lca = Lca::new(ty.jtype, ty.rank)?;
    Ok(lca.cocycle(&parse_quadratic(&lca, x)?, &parse_quadratic(&lca, y)?)?.to_string())
}

fn cmd_jordan(ty: &TypeArgs, trace: bool, product: bool, gens: &[String]) -> Result<String> {
    let space = make_type_space(ty.jtype, ty.rank)?;
    let specs: Vec<String> = gens.iter().flat_map(|g| split_insertions(g)).collect();
    let pairs = specs
        .iter()
        .map(|s| {
            let (a, b, m, n) = parse_label(&space, s)?;
            if (m, n) != (1, 1) {
                return Err(Error::NonGenerator);
            }
            Ok((a, b))
        })
        .collect::<Result<Vec<_>>>()?;
    if trace {
        return Ok(trace_cycle(&space, &pairs)?.to_string());
    }
    let elems = pairs
        .iter()
        .map(|(a, b)| endo_from_pair(&space, a, b))
        .collect::<Result<Vec<_>>>()?;
    if product {
        let [x, y] = elems.as_slice() else {
            return Err(Error::Parse("--product needs exactly two generators".into()));
        };
        return Ok(jordan_product(x, y)?.matrix.to_string().trim_end().to_string());
    }
    Ok(elems
        .iter()
        .zip(&specs)
        .map(|(e, s)| format!("{s} =\n{}", e.matrix.to_string().trim_end()))
        .collect::<Vec<_>>()
        .join("\n"))
}

fn cmd_diagrams(jtype: JType, n: usize, count: bool) -> String {
    let ds = enum_diagrams(n, jtype);
    if count {
        return ds.len().to_string();
    }
    let name = |v: crate::corr::Vertex| {
        match v.side {
            Side::A => format!("a{}", v.pos + 1),
            Side::B if jtype == JType::A => format!("b{}*", v.pos + 1),
            Side::B => format!("b{}", v.pos + 1),
        }
    };
    ds.iter()
        .map(|d| {
            let edges: Vec<String> = d.edges.iter().map(|&(u, v)| format!("{}{}", name(u), name(v))).collect();
            format!("{{{}}}", edges.join(", "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[derive(Debug, Serialize)]
struct MatrixReport {
    pass: bool,
    instances: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_failure: Option<Value>,
    reports: Vec<CheckReport>,
}

#[allow(clippy::too_many_arguments)]
fn cmd_check(
    max_n: usize,
    ranks: &[usize],
    types: &[JType],
    r_samples: &[u32],
    instances: usize,
    seed: u64,
    corrupt: bool,
) -> Result<(String, bool)> {
    use rayon::prelude::*;
    let mut jobs = Vec::new();
    for &jt in types {
        for &d in ranks {
            for n in 0..=max_n {
                for i in 0..instances {
                    jobs.push((jt, d, n, i));
                }
            }
        }
    }
    let reports = jobs
        .par_iter()
        .map(|&(jt, d, n, i)| {
            let s = seed
                .wrapping_mul(1_000_003)
                .wrapping_add((jt as u64) << 40 | (d as u64) << 24 | (n as u64) << 12 | i as u64);
            let t = random_insertion_list(&mut rng(s), jt, d, n)?;
            let opts = CheckOptions {
                r_samples: r_samples.to_vec(),
                seed: s,
                prefactor: if corrupt { Prefactor::Corrupted } else { Prefactor::Standard },
                ..Default::default()
            };
            corr_check(&t, &opts)
        })
        .collect::<Result<Vec<_>>>()?;
    let first_failure = reports.iter().find_map(|r| {
        r.first_failure().map(|f| {
            json!({"type": r.jtype, "rank": r.rank, "n": r.n, "check": f.name, "witness": f.witness})
        })
    });
    let rep = MatrixReport {
        pass: first_failure.is_none(),
        instances: reports.len(),
        first_failure,
        reports,
    };
    let pass = rep.pass;
    Ok((serde_json::to_string_pretty(&rep).expect("report serializes"), pass))
}

fn cmd_bench(jtype: JType, rank: usize, min_n: usize, max_n: usize, seed: u64) -> Result<String> {
    let mut lines = vec!["engine,n,type,millis,terms".to_string()];
    for n in min_n..=max_n {
        let t = random_insertion_list(&mut rng(seed.wrapping_add(n as u64)), jtype, rank, n)?;
        let start = Instant::now();
        let count = enum_diagrams(n, jtype).len();
        lines.push(format!("diagrams,{n},{jtype},{},{count}", start.elapsed().as_millis()));
        let start = Instant::now();
        let f = corr_closed_form(&t)?;
        lines.push(format!("closed,{n},{jtype},{},{}", start.elapsed().as_millis(), f.num_terms()));
        let start = Instant::now();
        let f = corr_recursion(&t)?;
        lines.push(format!("recursion,{n},{jtype},{},{}", start.elapsed().as_millis(), f.num_terms()));
    }
    Ok(lines.join("\n"))
}

/// A golden-corpus entry: a job and its expected text rendering.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GoldenCase {
    pub name: String,
    pub spec: JobSpec,
    pub expected: String,
}

pub fn default_corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

pub fn load_corpus(dir: &Path) -> Result<Vec<GoldenCase>> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| Error::Parse(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .iter()
        .map(|p| {
            let text = std::fs::read_to_string(p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?;
            serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))
        })
        .collect()
}

fn cmd_selftest(dir: &Path, out: &mut dyn Write) -> Result<bool> {
    let cases = load_corpus(dir)?;
    let mut ok = true;
    for case in &cases {
        let format: Format = case.spec.format.parse()?;
        let got = run_job(&case.spec).map(|o| render_job(&o, format));
        let pass = matches!(&got, Ok(s) if *s == case.expected);
        ok &= pass;
        let _ = writeln!(out, "{} {}", if pass { "ok  " } else { "FAIL" }, case.name);
        if !pass {
            let _ = writeln!(out, "  expected: {}", case.expected);
            match got {
                Ok(s) => {
                    let _ = writeln!(out, "  got:      {s}");
                }
                Err(e) => {
                    let _ = writeln!(out, "  error:    {e}");
                }
            }
        }
    }
    let _ = writeln!(out, "{} cases, {}", cases.len(), if ok { "all passed" } else { "failures" });
    Ok(ok)
}

// ------------------------------------------------------------------ entry point

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if code == EXIT_OK { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    let mut print = |s: String| {
        let _ = writeln!(out, "{s}");
    };
    match cmd {
        Command::Corr {
            ty,
            level,
            insertions,
            methods,
            format,
        } => {
            let spec = JobSpec {
                jtype: ty.jtype,
                rank: ty.rank,
                level,
                insertions: split_insertions(&insertions),
                methods: methods_from(&methods)?,
                format,
                seed: 0,
            };
            let format: Format = spec.format.parse()?;
            let o = run_job(&spec)?;
            print(render_job(&o, format));
            Ok(if o.agreement { EXIT_OK } else { EXIT_VERIFY })
        }
        Command::Bracket { ty, x, y, modes, level } => {
            print(cmd_bracket(&ty, &x, &y, modes.as_deref(), &level)?);
            Ok(EXIT_OK)
        }
        Command::Cocycle { ty, x, y } => {
            print(cmd_cocycle(&ty, &x, &y)?);
            Ok(EXIT_OK)
        }
        Command::Jordan {
            ty,
            trace,
            product,
            generators,
        } => {
            print(cmd_jordan(&ty, trace, product, &generators)?);
            Ok(EXIT_OK)
        }
        Command::Diagrams { jtype, n, count } => {
            print(cmd_diagrams(jtype, n, count));
            Ok(EXIT_OK)
        }
        Command::Check {
            max_n,
            ranks,
            types,
            r_samples,
            instances,
            seed,
            corrupt_prefactor,
        } => {
            if ranks.contains(&0) || r_samples.contains(&0) {
                return Err(Error::InvalidRank);
            }
            let (report, pass) = cmd_check(max_n, &ranks, &types, &r_samples, instances, seed, corrupt_prefactor)?;
            print(report);
            Ok(if pass { EXIT_OK } else { EXIT_VERIFY })
        }
        Command::Bench {
            jtype,
            rank,
            min_n,
            max_n,
            seed,
        } => {
            print(cmd_bench(jtype, rank, min_n, max_n, seed)?);
            Ok(EXIT_OK)
        }
        Command::Selftest { corpus } => {
            let dir = corpus.unwrap_or_else(default_corpus_dir);
            let ok = cmd_selftest(&dir, out)?;
            Ok(if ok { EXIT_OK } else { EXIT_VERIFY })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["voacorr"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap().trim_end().to_string())
    }

    #[test]
    fn splitting() {
        assert_eq!(split_insertions("L(e1,e1);L(e1,e1)"), ["L(e1,e1)", "L(e1,e1)"]);
        assert_eq!(split_insertions("L(e1,e2) L(e1,e2)"), ["L(e1,e2)", "L(e1,e2)"]);
        assert_eq!(split_insertions("L((1/2)e1+(1/3)e2,e1)"), ["L((1/2)e1+(1/3)e2,e1)"]);
        assert!(split_insertions("  ").is_empty());
    }

    #[test]
    fn labels() {
        let sp = make_type_space(JType::B, 2).unwrap();
        let (a, b, m, n) = parse_label(&sp, "L(e1,e2;2,3)").unwrap();
        assert_eq!((a, b, m, n), (sp.basis_vector(0), sp.basis_vector(1), 2, 3));
        assert!(parse_label(&sp, "L(e1)").is_err());
        assert!(parse_label(&sp, "M(e1,e2)").is_err());
        assert!(parse_label(&sp, "L(e1,e9)").is_err());
    }

    #[test]
    fn corr_examples() {
        let (c, s) = run_str(&[
            "corr", "--type", "B", "--rank", "1", "--level", "symbolic", "--insertions",
            "L(e1,e1);L(e1,e1)", "--method", "closed",
        ]);
        assert_eq!((c, s.as_str()), (0, "(1/2*r) * (z1-z2)^-4"));
        let (c, s) = run_str(&[
            "corr", "--type", "A", "--rank", "1", "--level", "1", "--insertions",
            "L(e1,e1*);L(e1,e1*)", "--method", "direct",
        ]);
        assert_eq!((c, s.as_str()), (0, "(1/4) * (z1-z2)^-4"));
        let (c, s) = run_str(&["corr", "--type", "B", "--insertions", ""]);
        assert_eq!((c, s.as_str()), (0, "1"));
    }

    #[test]
    fn other_examples() {
        assert_eq!(run_str(&["cocycle", "--type", "B", "--rank", "1", "L(e1,e1;1,1)", "L(e1,e1;1,1)"]).1, "1/12");
        assert_eq!(run_str(&["diagrams", "--type", "B", "--n", "3", "--count"]).1, "8");
        assert_eq!(
            run_str(&["jordan", "--type", "B", "--rank", "2", "--trace", "L(e1,e2) L(e1,e2)"]).1,
            "2"
        );
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["corr", "--type", "Q"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["corr", "--type", "B", "--insertions", "L(e1,e7)"]).0, EXIT_USAGE);
        assert_eq!(
            run_str(&["corr", "--type", "B", "--insertions", "L(e1,e1);L(e1,e1)", "--method", "direct"]).0,
            EXIT_USAGE
        );
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
        let (c, s) = run_str(&["check", "--max-n", "2", "--types", "B", "--ranks", "1", "--corrupt-prefactor"]);
        assert_eq!(c, EXIT_VERIFY);
        assert!(s.contains("witness"));
        assert_eq!(run_str(&["check", "--max-n", "2", "--types", "B"]).0, EXIT_OK);
    }
}
