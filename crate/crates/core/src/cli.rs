//! Command-line verbs. `run` parses argv, writes the report to `out`,
//! diagnostics to `err`, and returns the exit code: 0 on success, 1 for a
//! negative answer or a failed algebraic condition, 2 for usage and parse
//! errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_integer::Integer;
use serde_json::{json, Value};

use crate::chain::{ChainComplex, ChainMap};
use crate::derived::{ideal_quotient_module, tor, ResolveSide, TorRequest};
use crate::diagram::{long_exact_sequence, LesSlot, ShortExactSeqComplexes};
use crate::exactlin::{snf, Matrix, RingSpec};
use crate::fpmod::{Decomposition, FpModule};
use crate::homotopy::{are_chain_homotopic, find_null_homotopy};
use crate::json::{degree_raising_to_json, JsonError, JsonForm};
use crate::report::{format_table, run_suite, SuiteSize};
use crate::resolve::free_resolution;
use crate::simplicial::{format_report, homology_report, SimplicialComplex};

#[derive(Parser, Debug)]
#[command(name = "homalg", version, about = "Exact homological algebra over Z and Z/m")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Side {
    Left,
    Right,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Smith normal form of a matrix.
    Snf { matrix: PathBuf },
    /// Canonical decomposition of a module.
    Decompose { module: PathBuf },
    /// Homology of a complex, or of a simplicial complex with --simplicial.
    Homology {
        #[arg(required_unless_present = "simplicial", conflicts_with = "simplicial")]
        complex: Option<PathBuf>,
        #[arg(long)]
        simplicial: Option<PathBuf>,
    },
    /// Exactness of a complex at every degree.
    CheckExact { complex: PathBuf },
    /// Long exact homology sequence of a short exact sequence of complexes.
    Les { ses: PathBuf },
    /// Null-homotopy of one chain map, or a homotopy between two.
    Homotopy { f: PathBuf, g: Option<PathBuf> },
    /// Free resolution of a module.
    Resolve {
        module: PathBuf,
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
    /// Tor of two modules, or the gcd table with --table.
    Tor {
        #[arg(long, default_value = "Z")]
        ring: RingSpec,
        #[arg(num_args = 0..=2)]
        modules: Vec<PathBuf>,
        #[arg(long, default_value_t = 1)]
        degree: usize,
        #[arg(long, value_enum, default_value = "right")]
        side: Side,
        #[arg(long, num_args = 2, value_names = ["A_MAX", "B_MAX"])]
        table: Option<Vec<i64>>,
    },
    /// Run the fixture suite and print a pass/fail table.
    Report {
        /// Smaller randomized corpora.
        #[arg(long)]
        quick: bool,
        #[arg(long)]
        seed: Option<u64>,
    },
}

enum Failure {
    /// Exit 1 with a message on stderr.
    Domain(String),
    /// Exit 2 with a message on stderr.
    Usage(String),
}

/// Output plus exit code for a successful (possibly negative) answer.
struct Answer {
    text: String,
    code: i32,
}

impl Answer {
    fn ok(text: String) -> Self {
        Answer { text, code: 0 }
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match execute(&cli) {
        Ok(answer) => {
            let _ = writeln!(out, "{}", answer.text.trim_end());
            answer.code
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load<T: JsonForm>(path: &Path) -> Result<T, Failure> {
    let text = read(path)?;
    T::from_json_str(&text).map_err(|e| located(path, e))
}

fn located(path: &Path, e: JsonError) -> Failure {
    let msg = format!("{}: {e}", path.display());
    if e.is_parse_error() {
        Failure::Usage(msg)
    } else {
        Failure::Domain(msg)
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

fn decomposition_json(d: &Decomposition) -> Value {
    json!({
        "decomposition": d.to_string(),
        "free_rank": d.free_rank,
        "invariant_factors": d.invariant_factors.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
    })
}

fn module_summary(m: &FpModule) -> Value {
    let mut v = decomposition_json(m.decomposition());
    let d = m.decomposition();
    v["module"] = FpModule::from_decomposition(&d.ring, d.free_rank, &d.invariant_factors).to_json();
    v
}

fn execute(cli: &Cli) -> Result<Answer, Failure> {
    let as_json = cli.json;
    match &cli.verb {
        Verb::Snf { matrix } => {
            let a: Matrix = load(matrix)?;
            let s = snf(&a);
            let factors: Vec<String> = s.invariant_factors().iter().map(|x| x.to_string()).collect();
            Ok(Answer::ok(if as_json {
                pretty(&json!({
                    "rank": s.rank,
                    "invariant_factors": factors,
                    "d": s.d.to_json(),
                    "u": s.u.to_json(),
                    "v": s.v.to_json(),
                }))
            } else {
                format!(
                    "rank: {}\ninvariant factors: {}\nD =\n{}\nU =\n{}\nV =\n{}",
                    s.rank,
                    if factors.is_empty() { "none".into() } else { factors.join(", ") },
                    s.d.to_string().trim_end(),
                    s.u.to_string().trim_end(),
                    s.v.to_string().trim_end()
                )
            }))
        }
        Verb::Decompose { module } => {
            let m: FpModule = load(module)?;
            Ok(Answer::ok(if as_json { pretty(&module_summary(&m)) } else { m.decomposition().to_string() }))
        }
        Verb::Homology { complex, simplicial } => {
            let (degrees, modules): (Vec<i64>, Vec<FpModule>) = match (complex, simplicial) {
                (_, Some(path)) => {
                    let k: SimplicialComplex = read(path)?
                        .parse()
                        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    let c = crate::simplicial::chain_complex_of(&k, &RingSpec::Integers);
                    if !as_json {
                        return Ok(Answer::ok(format_report(&homology_report(&k))));
                    }
                    let dims = k.dimension().map_or(0, |d| d as i64 + 1);
                    ((0..dims).collect(), (0..dims).map(|n| c.homology_module(n)).collect())
                }
                (Some(path), None) => {
                    let c: ChainComplex = load(path)?;
                    (c.degrees().collect(), c.degrees().map(|n| c.homology_module(n)).collect())
                }
                (None, None) => return Err(Failure::Usage("give a complex file or --simplicial".into())),
            };
            Ok(Answer::ok(if as_json {
                let map: serde_json::Map<String, Value> =
                    degrees.iter().zip(&modules).map(|(n, m)| (n.to_string(), module_summary(m))).collect();
                pretty(&json!({ "homology": map }))
            } else {
                degrees
                    .iter()
                    .zip(&modules)
                    .map(|(n, m)| format!("H{n} = {}", m.decomposition()))
                    .collect::<Vec<_>>()
                    .join(", ")
            }))
        }
        Verb::CheckExact { complex } => {
            let c: ChainComplex = load(complex)?;
            let bad = c.inexact_degrees();
            let text = if as_json {
                pretty(&json!({ "exact": bad.is_empty(), "inexact_degrees": bad }))
            } else if bad.is_empty() {
                format!("exact at degrees {}..{}", c.lo(), c.hi())
            } else {
                let list: Vec<String> = bad.iter().map(|n| n.to_string()).collect();
                format!("not exact at degree{} {}", if bad.len() > 1 { "s" } else { "" }, list.join(", "))
            };
            Ok(Answer { text, code: if bad.is_empty() { 0 } else { 1 } })
        }
        Verb::Les { ses } => {
            let s: ShortExactSeqComplexes = load(ses)?;
            let les = long_exact_sequence(&s).map_err(|e| Failure::Domain(e.to_string()))?;
            let checked = les.modules.len().saturating_sub(2);
            Ok(Answer::ok(if as_json {
                let terms: Vec<Value> = les
                    .slots
                    .iter()
                    .zip(&les.modules)
                    .map(|(slot, m)| {
                        let mut v = decomposition_json(m.decomposition());
                        v["slot"] = Value::String(slot.to_string());
                        v
                    })
                    .collect();
                let maps: Vec<Value> = les.maps.iter().map(|h| h.to_json()).collect();
                pretty(&json!({ "terms": terms, "maps": maps, "exact": les.is_exact(), "positions_checked": checked }))
            } else {
                let mut lines: Vec<String> = les
                    .slots
                    .iter()
                    .zip(&les.modules)
                    .map(|(slot, m)| match slot {
                        LesSlot::Zero => format!("{:>8}", "0"),
                        _ => format!("{slot:>8} = {}", m.decomposition()),
                    })
                    .collect();
                lines.push(format!("exact at all {checked} interior positions"));
                lines.join("\n")
            }))
        }
        Verb::Homotopy { f, g } => {
            let f: ChainMap = load(f)?;
            let found = match g {
                None => find_null_homotopy(&f),
                Some(path) => {
                    let g: ChainMap = load(path)?;
                    if g.source() != f.source() || g.target() != f.target() {
                        return Err(Failure::Usage("the two chain maps must share source and target".into()));
                    }
                    are_chain_homotopic(&f, &g)
                }
            };
            Ok(match found {
                Some(s) if as_json => Answer::ok(pretty(&degree_raising_to_json(&s))),
                Some(s) => {
                    let mut lines = vec!["homotopy found".to_string()];
                    for (n, h) in s.levels().iter().filter(|(_, h)| h.map().rows() * h.map().cols() > 0) {
                        lines.push(format!("s_{n} =\n{}", h.map().to_string().trim_end()));
                    }
                    Answer::ok(lines.join("\n"))
                }
                None => Answer {
                    text: if as_json { pretty(&Value::Null) } else { "no homotopy exists".into() },
                    code: 1,
                },
            })
        }
        Verb::Resolve { module, depth } => {
            let m: FpModule = load(module)?;
            let res = free_resolution(&m, *depth);
            Ok(Answer::ok(if as_json {
                pretty(&res.to_json())
            } else {
                let ranks: Vec<String> = res.free_ranks.iter().map(|r| r.to_string()).collect();
                let mut lines = vec![
                    format!("ranks: {}", ranks.join(" ")),
                    format!("complete: {}", res.complete),
                    format!("final map bijective: {}", res.final_map_bijective),
                    format!("augmentation =\n{}", res.augmentation.map().to_string().trim_end()),
                ];
                for (i, phi) in res.maps.iter().enumerate() {
                    lines.push(format!("phi_{} =\n{}", i + 1, phi.map().to_string().trim_end()));
                }
                lines.join("\n")
            }))
        }
        Verb::Tor { ring, modules, degree, side, table } => {
            if let Some(t) = table {
                if !modules.is_empty() {
                    return Err(Failure::Usage("--table takes no module files".into()));
                }
                if !ring.is_integers() {
                    return Err(Failure::Usage("--table is defined over Z".into()));
                }
                return Ok(tor_table(t[0], t[1], as_json));
            }
            let [a, b] = modules.as_slice() else {
                return Err(Failure::Usage("tor needs two module files".into()));
            };
            let (m, n): (FpModule, FpModule) = (load(a)?, load(b)?);
            for (path, x) in [(a, &m), (b, &n)] {
                if x.ring() != ring {
                    return Err(Failure::Usage(format!("{} is over {}, not {ring}", path.display(), x.ring())));
                }
            }
            let side = match side {
                Side::Left => ResolveSide::Left,
                Side::Right => ResolveSide::Right,
            };
            let t = tor(&TorRequest::new(&m, &n, *degree).side(side)).map_err(|e| Failure::Domain(e.to_string()))?;
            Ok(Answer::ok(if as_json { pretty(&module_summary(&t)) } else { t.decomposition().to_string() }))
        }
        Verb::Report { quick, seed } => {
            let mut size = if *quick { SuiteSize::quick() } else { SuiteSize::full() };
            if let Some(s) = seed {
                size.seed = *s;
            }
            let results = run_suite(size);
            let all = results.iter().all(|r| r.passed);
            let text = if as_json {
                let rows: Vec<Value> = results
                    .iter()
                    .map(|r| json!({"id": r.id, "name": r.name, "passed": r.passed, "detail": r.detail, "seconds": r.elapsed.as_secs_f64()}))
                    .collect();
                pretty(&Value::Array(rows))
            } else {
                format_table(&results)
            };
            Ok(Answer { text, code: if all { 0 } else { 1 } })
        }
    }
}

fn tor_table(a_max: i64, b_max: i64, as_json: bool) -> Answer {
    let z = RingSpec::Integers;
    let mut rows = Vec::new();
    let mut all = true;
    for a in 2..=a_max {
        for b in 2..=b_max {
            let (ma, mb) = (FpModule::cyclic(&z, a), FpModule::cyclic(&z, b));
            let right = tor(&TorRequest::new(&ma, &mb, 1)).expect("same ring");
            let left = tor(&TorRequest::new(&ma, &mb, 1).side(ResolveSide::Left)).expect("same ring");
            let ideal = ideal_quotient_module(&BigInt::from(a), &BigInt::from(b));
            let g = a.gcd(&b);
            let want = FpModule::cyclic(&z, g);
            let ok = [&right, &left, &ideal].iter().all(|m| m.is_isomorphic(&want));
            all &= ok;
            rows.push((a, b, right, left, ideal, g, ok));
        }
    }
    let text = if as_json {
        let v: Vec<Value> = rows
            .iter()
            .map(|(a, b, r, l, i, g, ok)| {
                json!({
                    "a": a.to_string(), "b": b.to_string(),
                    "resolve_right": r.decomposition().to_string(),
                    "resolve_left": l.decomposition().to_string(),
                    "ideal_quotient": i.decomposition().to_string(),
                    "gcd": g.to_string(), "agree": ok,
                })
            })
            .collect();
        pretty(&Value::Array(v))
    } else {
        let mut lines = vec![format!("{:>3} {:>3}  {:<6} {:<6} {:<6} {:>3}", "a", "b", "right", "left", "ideal", "gcd")];
        for (a, b, r, l, i, g, ok) in &rows {
            lines.push(format!(
                "{a:>3} {b:>3}  {:<6} {:<6} {:<6} {g:>3}{}",
                r.decomposition().to_string(),
                l.decomposition().to_string(),
                i.decomposition().to_string(),
                if *ok { "" } else { "  MISMATCH" }
            ));
        }
        lines.push(format!("{} cases, {}", rows.len(), if all { "all agree" } else { "mismatches found" }));
        lines.join("\n")
    };
    Answer { text, code: if all { 0 } else { 1 } }
}
