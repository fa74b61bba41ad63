use std::io::Write;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use quipu_core::error::SearchError;
use quipu_core::poly::{parse_rational, rational_to_string};
use quipu_core::quipu::{classify, enumerate_quipus, Kinds, QuipuSpec};
use quipu_core::search::{MinimizerReport, SearchOptions};
use quipu_core::suites::{run_suite, SuiteReport, DEFAULT_SEED, SUITES};
use quipu_core::{
    brute_force_all_graphs, brute_force_sparse, charpoly, compare_rho, graph6, minimize_over_quipus, rho_certified,
    verify_theorem, Exec, Graph, Rational,
};

#[derive(Parser, Debug)]
#[command(name = "quipu", version, about = "Exact spectral radius tools for quipus and minimizer searches")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Width of reported root intervals, as `p/q` or `1e-12`.
    #[arg(long, global = true, default_value = "1e-12", value_parser = parse_tolerance)]
    tolerance: Rational,
    /// Worker threads; 1 runs sequentially. Overrides QUIPU_WORKERS.
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Wall-clock budget per search, in seconds.
    #[arg(long, global = true)]
    budget_secs: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Space {
    All,
    Sparse,
    Quipu,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Certified spectral radius of a graph6 string or spec literal.
    Rho { graph: String },
    /// Characteristic polynomial coefficients, lowest degree first.
    Charpoly { graph: String },
    /// Quipu or dagger parameters of a graph, if it is one.
    Classify { graph: String },
    /// Quipus and daggers with the given order and diameter.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value = "open,closed,dagger")]
        kinds: Kinds,
    },
    /// Minimum spectral radius at the given order and diameter.
    Minimize {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value_t = Space::Quipu)]
        space: Space,
    },
    /// Checks the minimizers at order 3k+1 and diameter 2k.
    VerifyTheorem {
        /// A single k; without it every k from 2 to --max-k runs.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 8)]
        max_k: usize,
    },
    /// Runs the named property suites.
    VerifyLemmas {
        #[arg(long)]
        suite: Option<String>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Lists suite names and exits.
        #[arg(long)]
        list: bool,
    },
    /// Exact ordering of the spectral radii of two graphs.
    Compare { first: String, second: String },
}

fn parse_tolerance(text: &str) -> Result<Rational, String> {
    let value = match text.split_once(['e', 'E']) {
        Some((mantissa, exp)) => {
            let m = parse_rational(mantissa).map_err(|e| e.to_string())?;
            let e: i32 = exp.parse().map_err(|_| format!("bad exponent in {text:?}"))?;
            let ten = Rational::from_integer(10.into());
            if e >= 0 {
                m * num_pow(&ten, e as u32)
            } else {
                m / num_pow(&ten, e.unsigned_abs())
            }
        }
        None => parse_rational(text).map_err(|e| e.to_string())?,
    };
    if value <= Rational::from_integer(0.into()) {
        return Err("tolerance must be positive".into());
    }
    Ok(value)
}

fn num_pow(x: &Rational, e: u32) -> Rational {
    (0..e).fold(Rational::from_integer(1.into()), |acc, _| acc * x)
}

enum Failure {
    Usage(String),
    Budget(String),
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

/// The same result in all three renderings, plus whether it counts as a pass.
struct Output {
    json: Value,
    csv: String,
    text: String,
    pass: bool,
}

fn parse_graph(text: &str) -> Result<(Graph, Option<QuipuSpec>), Failure> {
    let looks_like_spec = text.starts_with("spec:")
        || ["open:", "closed:", "dagger:"].iter().any(|p| text.starts_with(p));
    if looks_like_spec {
        let spec: QuipuSpec = text.parse().map_err(|e| Failure::Usage(format!("{e}")))?;
        return Ok((spec.realize(), Some(spec)));
    }
    let g = graph6::decode(text).map_err(|e| Failure::Usage(format!("{e}")))?;
    Ok((g, None))
}

fn csv_field(text: &str) -> String {
    if text.contains([',', '"', '\n']) {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}

fn report_output(rep: MinimizerReport) -> Output {
    let pass = rep.sound && rep.stats.audit_failures == 0;
    Output {
        csv: format!("{}\n{}\n", MinimizerReport::CSV_HEADER, rep.csv_row()),
        text: rep.to_text(),
        json: rep.to_json(),
        pass,
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let exec = match cli.workers {
        Some(0) => Exec::Parallel,
        Some(1) => Exec::Sequential,
        Some(k) => Exec::Workers(k),
        None => Exec::from_env(),
    };
    let opts = SearchOptions {
        exec,
        tolerance: cli.tolerance.clone(),
        budget: cli.budget_secs.map(Duration::from_secs),
        ..SearchOptions::default()
    };
    match &cli.command {
        Command::Rho { graph } => {
            let (g, _) = parse_graph(graph)?;
            let root = rho_certified(&charpoly(&g), &cli.tolerance).map_err(|e| Failure::Usage(e.to_string()))?;
            let s = root.summary();
            Ok(Output {
                csv: format!("lo,hi,approx\n{},{},{}\n", s.lo, s.hi, s.approx),
                text: format!("{root}\n"),
                json: serde_json::to_value(&s).expect("summary serializes"),
                pass: true,
            })
        }
        Command::Charpoly { graph } => {
            let (g, _) = parse_graph(graph)?;
            let coeffs = charpoly(&g).to_strings();
            let csv: String = coeffs.iter().enumerate().map(|(i, c)| format!("{i},{c}\n")).collect();
            Ok(Output {
                text: format!("[{}]\n", coeffs.join(", ")),
                csv: format!("degree,coefficient\n{csv}"),
                json: json!(coeffs),
                pass: true,
            })
        }
        Command::Classify { graph } => {
            let (g, _) = parse_graph(graph)?;
            let spec = classify(&g).map(|s| s.canonicalize());
            let literal = spec.as_ref().map(ToString::to_string);
            Ok(Output {
                text: format!("{}\n", literal.clone().unwrap_or_else(|| "not a quipu or dagger".into())),
                csv: format!("graph6,spec\n{},{}\n", graph6::encode(&g), csv_field(&literal.clone().unwrap_or_default())),
                json: json!({ "graph6": graph6::encode(&g), "spec": literal }),
                pass: true,
            })
        }
        Command::Enumerate { n, d, kinds } => {
            let specs = enumerate_quipus(*n, *d, *kinds);
            let rows: Vec<(String, String)> =
                specs.iter().map(|s| (s.to_string(), graph6::encode(&s.realize()))).collect();
            Ok(Output {
                text: rows.iter().map(|(s, g)| format!("{s}  {g}\n")).collect::<String>()
                    + &format!("{} specs\n", rows.len()),
                csv: "spec,graph6\n".to_string() + &rows.iter().map(|(s, g)| format!("{},{g}\n", csv_field(s))).collect::<String>(),
                json: json!({
                    "n": n, "d": d, "kinds": kinds.to_string(), "count": rows.len(),
                    "specs": rows.iter().map(|(s, g)| json!({ "spec": s, "graph6": g })).collect::<Vec<_>>(),
                }),
                pass: true,
            })
        }
        Command::Minimize { n, d, space } => {
            let rep = match space {
                Space::All => brute_force_all_graphs(*n, *d, &opts)?,
                Space::Sparse => brute_force_sparse(*n, *d, &opts)?,
                Space::Quipu => minimize_over_quipus(*n, *d, None, &opts)?,
            };
            Ok(report_output(rep))
        }
        Command::VerifyTheorem { k, max_k } => {
            if *max_k < 2 {
                return Err(Failure::Usage("--max-k must be at least 2".into()));
            }
            let ks: Vec<usize> = match k {
                Some(k) => vec![*k],
                None => (2..=*max_k).collect(),
            };
            let mut verdicts = Vec::new();
            for &k in &ks {
                verdicts.push(verify_theorem(k, &opts)?);
            }
            let mut csv = String::from("k,n,d,winners,rho_lo,rho_hi,pass\n");
            for v in &verdicts {
                let (winners, lo, hi) = match &v.report {
                    Some(r) => (
                        r.winners.len(),
                        rational_to_string(&r.min_rho.lo()),
                        rational_to_string(&r.min_rho.hi()),
                    ),
                    None => (0, String::new(), String::new()),
                };
                csv.push_str(&format!("{},{},{},{winners},{lo},{hi},{}\n", v.k, 3 * v.k + 1, 2 * v.k, v.pass));
            }
            Ok(Output {
                pass: verdicts.iter().all(|v| v.pass),
                text: verdicts.iter().map(|v| v.to_text()).collect(),
                json: json!(verdicts.iter().map(|v| v.to_json()).collect::<Vec<_>>()),
                csv,
            })
        }
        Command::VerifyLemmas { suite, seed, list } => {
            if *list {
                return Ok(Output {
                    text: SUITES.iter().map(|(n, d)| format!("{n:22} {d}\n")).collect(),
                    csv: "suite,description\n".to_string()
                        + &SUITES.iter().map(|(n, d)| format!("{n},{}\n", csv_field(d))).collect::<String>(),
                    json: json!(SUITES.iter().map(|(n, d)| json!({ "suite": n, "description": d })).collect::<Vec<_>>()),
                    pass: true,
                });
            }
            let names: Vec<&str> = match suite {
                Some(s) => vec![s.as_str()],
                None => SUITES.iter().map(|(n, _)| *n).collect(),
            };
            let mut reports: Vec<SuiteReport> = Vec::new();
            for name in names {
                let known = SUITES.iter().map(|(n, _)| *n).collect::<Vec<_>>().join(", ");
                reports.push(
                    run_suite(name, *seed, exec)
                        .ok_or_else(|| Failure::Usage(format!("unknown suite {name:?}; known: {known}")))?,
                );
            }
            let line = |r: &SuiteReport| {
                let mut s = format!("{:22} {} ({} cases)\n", r.name, if r.pass() { "PASS" } else { "FAIL" }, r.cases);
                for f in r.failures.iter().take(10) {
                    s.push_str(&format!("    {f}\n"));
                }
                s
            };
            Ok(Output {
                pass: reports.iter().all(SuiteReport::pass),
                text: reports.iter().map(line).collect(),
                csv: "suite,cases,failures,pass\n".to_string()
                    + &reports
                        .iter()
                        .map(|r| format!("{},{},{},{}\n", r.name, r.cases, r.failures.len(), r.pass()))
                        .collect::<String>(),
                json: json!(reports),
            })
        }
        Command::Compare { first, second } => {
            let (a, _) = parse_graph(first)?;
            let (b, _) = parse_graph(second)?;
            let ord = format!("{:?}", compare_rho(&a, &b));
            Ok(Output {
                text: format!("{ord}\n"),
                csv: format!("ordering\n{ord}\n"),
                json: json!({ "ordering": ord }),
                pass: true,
            })
        }
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(body: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(body.as_bytes()).and_then(|_| out.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let body = match cli.format {
                Format::Json => serde_json::to_string_pretty(&out.json).expect("json renders") + "\n",
                Format::Csv => out.csv,
                Format::Text => out.text,
            };
            emit(&body);
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Budget(msg)) => {
            emit(&match cli.format {
                Format::Json => format!("{}\n", json!({ "status": "budget-exceeded", "message": msg })),
                _ => format!("budget exceeded: {msg}\n"),
            });
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
