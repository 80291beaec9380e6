mod output;

use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use mixedloop::algebra::{Cyc6, Field, Ring, Q};
use mixedloop::fpl::{self, FplConfig, FplJson};
use mixedloop::groundstate;
use mixedloop::link::Basis;
use mixedloop::qkz::{self, QkzSolution};
use mixedloop::report::{self, Check};
use mixedloop::suite::{self, SuiteConfig};
use mixedloop::{operators, sumrule};
use serde_json::{json, Value};

use output::{Format, Report};

/// Thread count for the parallel parts; unset means one per core.
const THREADS_ENV: &str = "MIXEDLOOP_THREADS";

#[derive(Parser)]
#[command(name = "mixedloop", version, about = "Exact computations for the Temperley-Lieb loop model with a mixed boundary")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write artifacts into this directory instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Link patterns of a given size in canonical order.
    Patterns {
        #[arg(long)]
        size: usize,
        #[command(flatten)]
        common: Common,
    },
    /// The stochastic Hamiltonian as a matrix over Q[a].
    Hamiltonian {
        #[arg(long)]
        size: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Exact ground state as polynomials in the boundary weight a.
    Groundstate {
        #[arg(long)]
        size: usize,
        /// Also evaluate at this value of a.
        #[arg(long)]
        a: Option<Q>,
        #[command(flatten)]
        common: Common,
    },
    /// Integrability identities of the R and K matrices.
    Integrability {
        #[arg(long)]
        size: usize,
        #[arg(long, value_enum, default_value_t = Mode::Sampled)]
        mode: Mode,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Polynomial solution of the qKZ system.
    Qkz {
        #[command(subcommand)]
        action: QkzAction,
    },
    /// Sum of the components against the character product.
    Sumrule {
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 10)]
        points: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Symplectic characters at coincident points.
    Chi {
        #[arg(long)]
        n: usize,
        /// Evaluate at these points, comma separated rationals.
        #[arg(long, value_delimiter = ',')]
        at: Vec<Q>,
        #[command(flatten)]
        common: Common,
    },
    /// Horizontally and vertically symmetric fully packed loops.
    Fpl {
        #[command(subcommand)]
        action: FplAction,
    },
    /// Compare FPL classes with the ground state.
    Conjecture {
        #[command(subcommand)]
        action: ConjectureAction,
    },
    /// Run every acceptance check and print a summary table.
    ReproducePaper {
        #[arg(long, default_value_t = 8)]
        max_size: usize,
        #[arg(long, default_value_t = 13)]
        fpl_max: usize,
        #[arg(long, default_value_t = 5)]
        positivity_max: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum QkzAction {
    /// Build the solution, optionally directly at the stochastic point.
    Build {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        stochastic: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Check the qKZ relations and the structure of a solution.
    Verify {
        #[arg(long)]
        size: Option<usize>,
        /// A solution written by `qkz build`.
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum FplAction {
    /// One JSON edge-occupation object per line.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// JSONL file to write; stdout if absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Group configurations by connectivity with their a-polynomials.
    Classify {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum ConjectureAction {
    Verify {
        #[arg(long)]
        size: usize,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Symbolic,
    Sampled,
}

// sizes above these limits are usage errors
const MAX_PATTERN_SIZE: usize = 14;
const MAX_GROUND_SIZE: usize = 9;
const MAX_QKZ_SIZE: usize = 5;
const MAX_SYMBOLIC_SIZE: usize = 4;
const MAX_FPL_N: usize = 15;

fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow::Error::msg(msg.into()).context(UsageMarker)
}

#[derive(Debug)]
struct UsageMarker;

impl std::fmt::Display for UsageMarker {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("usage error")
    }
}

fn limit(name: &str, v: usize, lo: usize, hi: usize) -> Result<()> {
    if v < lo || v > hi {
        return Err(usage(format!("{name} must be in {lo}..={hi}, got {v}")));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(n) = std::env::var(THREADS_ENV) {
        match n.parse::<usize>() {
            Ok(k) if k > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
            }
            _ => {
                eprintln!("error: {THREADS_ENV} must be a positive integer");
                return ExitCode::from(2);
            }
        }
    }
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let is_usage = e.downcast_ref::<UsageMarker>().is_some();
            eprintln!("error: {}", e.root_cause());
            ExitCode::from(if is_usage { 2 } else { 1 })
        }
    }
}

/// Run one subcommand; `Ok(false)` means a verification failed.
fn run(cmd: Command) -> Result<bool> {
    match cmd {
        Command::Patterns { size, common } => {
            limit("size", size, 1, MAX_PATTERN_SIZE)?;
            let b = Basis::new(size);
            let rows: Vec<Vec<String>> =
                b.patterns().iter().enumerate().map(|(k, p)| vec![k.to_string(), p.encoding()]).collect();
            let j = json!({"size": size, "patterns": b.patterns().iter().map(|p| p.encoding()).collect::<Vec<_>>()});
            Report::new("patterns", j).table(&["index", "pattern"], rows).emit(&common)
        }
        Command::Hamiltonian { size, common } => {
            limit("size", size, 1, MAX_GROUND_SIZE)?;
            let b = Basis::new(size);
            let h = groundstate::hamiltonian(&b);
            let pats: Vec<String> = b.patterns().iter().map(|p| p.encoding()).collect();
            let entries: Vec<Vec<String>> = h.iter().map(|r| r.iter().map(|x| x.fmt_var("a")).collect()).collect();
            let mut rows = Vec::new();
            for (i, r) in entries.iter().enumerate() {
                for (j, x) in r.iter().enumerate() {
                    if x != "0" {
                        rows.push(vec![pats[i].clone(), pats[j].clone(), x.clone()]);
                    }
                }
            }
            let j = json!({"size": size, "patterns": pats, "matrix": entries});
            Report::new("hamiltonian", j).table(&["row", "column", "entry"], rows).emit(&common)
        }
        Command::Groundstate { size, a, common } => {
            limit("size", size, 1, MAX_GROUND_SIZE)?;
            let gs = groundstate::ground_state(size)?;
            let pats: Vec<String> = gs.basis.patterns().iter().map(|p| p.encoding()).collect();
            let polys: Vec<String> = gs.components.iter().map(|p| p.fmt_var("a")).collect();
            let at: Option<Vec<String>> = a.as_ref().map(|a| gs.at(a).iter().map(Q::to_string).collect());
            let z = gs.a_polynomial_sum();
            let mut j = json!({
                "size": size,
                "patterns": pats,
                "components": polys,
                "sum": z.fmt_var("a"),
                "eigenvalue": groundstate::eigenvalue(size).fmt_var("a"),
                "rho": sumrule::log_derivative_at_one(&z).to_string(),
            });
            if let (Some(a), Some(v)) = (&a, &at) {
                j["a"] = json!(a.to_string());
                j["values"] = json!(v);
            }
            let rows = pats
                .iter()
                .enumerate()
                .map(|(k, p)| {
                    let mut r = vec![p.clone(), polys[k].clone()];
                    if let Some(v) = &at {
                        r.push(v[k].clone());
                    }
                    r
                })
                .collect();
            let head: &[&str] = if at.is_some() { &["pattern", "component", "value"] } else { &["pattern", "component"] };
            Report::new("groundstate", j).table(head, rows).emit(&common)
        }
        Command::Integrability { size, mode, samples, seed, common } => {
            let checks = match mode {
                Mode::Symbolic => {
                    limit("size", size, 2, MAX_SYMBOLIC_SIZE)?;
                    operators::verify_symbolic(size, 0)
                }
                Mode::Sampled => {
                    limit("size", size, 2, MAX_PATTERN_SIZE)?;
                    let mut c = operators::verify_sampled(size, samples, seed, 0);
                    c.push(operators::verify_comm_s(size, samples, seed, false));
                    c
                }
            };
            checks_report("integrability", json!({"size": size, "seed": seed}), checks).emit(&common)
        }
        Command::Qkz { action: QkzAction::Build { size, stochastic, common } } => {
            limit("size", size, 1, MAX_QKZ_SIZE + usize::from(stochastic))?;
            let j = if stochastic {
                qkz::build::<Cyc6>(size, Default::default())?.solution.to_json()?
            } else {
                qkz::build_solution(size)?.to_json()?
            };
            Report::new("qkz", j).emit(&common)
        }
        Command::Qkz { action: QkzAction::Verify { size, input, common } } => {
            let sol: QkzSolution = match (size, input) {
                (_, Some(path)) => {
                    let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
                    let v: Value = serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
                    QkzSolution::from_json(&v).map_err(|e| usage(e.to_string()))?
                }
                (Some(l), None) => {
                    limit("size", l, 1, MAX_QKZ_SIZE)?;
                    qkz::build_solution(l)?
                }
                (None, None) => return Err(usage("give --size or --in")),
            };
            let l = sol.size();
            let mut checks = sol.verify_qkz(l <= 4);
            checks.push(Check::from_bool(format!("Laurent in q (L={l})"), sol.is_laurent(), || "rational coefficient".into()));
            checks.push(sol.verify_degree_windows());
            if l <= 4 {
                checks.extend(sol.verify_structure());
            }
            checks_report("qkz-verify", json!({"size": l}), checks).emit(&common)
        }
        Command::Sumrule { size, points, seed, common } => {
            limit("size", size, 1, 6)?;
            let mut j = json!({"size": size, "points": points, "seed": seed});
            let mut checks = Vec::new();
            if size <= 4 {
                let sol = qkz::build::<Cyc6>(size, Default::default())?.solution;
                let z = sumrule::sum_rule(&sol);
                j["sum"] = json!(z.to_string());
                if size <= 3 {
                    checks.push(sumrule::verify_zdet_symbolic(&sol));
                }
                let h = sumrule::homogeneous_value(&z).divide(&Cyc6::from_int(3).pow((size * (size - 1) / 2) as u32));
                j["homogeneous_scaled"] = json!(h.map(|x| x.to_string()));
            }
            let zdet = sumrule::verify_zdet_points(size, points, seed);
            j["zdet_status"] = json!(zdet.status);
            j["hvsasm"] = json!(sumrule::hvsasm_count(size).to_string());
            checks.push(zdet);
            checks_report("sumrule", j, checks).emit(&common)
        }
        Command::Chi { n, at, common } => {
            limit("n", n, 1, 12)?;
            let mut j = json!({
                "n": n,
                "dimension": sumrule::weyl_dimension(n).to_string(),
                "scaled": sumrule::chi_scaled(n).to_string(),
                "homogeneous": sumrule::chi_homogeneous_w(n)?.fmt_var("w"),
            });
            let mut rows = vec![vec!["dimension".into(), j["dimension"].as_str().unwrap().into()]];
            rows.push(vec!["scaled".into(), j["scaled"].as_str().unwrap().into()]);
            rows.push(vec!["homogeneous".into(), j["homogeneous"].as_str().unwrap().into()]);
            if !at.is_empty() {
                if at.len() != n {
                    return Err(usage(format!("--at needs {n} values")));
                }
                let v = sumrule::symplectic_char_jt(&at)?.to_string();
                rows.push(vec!["value".into(), v.clone()]);
                j["value"] = json!(v);
            }
            Report::new("chi", j).table(&["quantity", "value"], rows).emit(&common)
        }
        Command::Fpl { action: FplAction::Enumerate { n, out } } => {
            if n % 2 == 0 {
                return Err(usage("n must be odd"));
            }
            limit("n", n, 5, MAX_FPL_N)?;
            let configs = fpl::enumerate_hvsfpl(n);
            let mut buf = Vec::new();
            for c in &configs {
                serde_json::to_writer(&mut buf, &FplJson::from(c))?;
                buf.push(b'\n');
            }
            match out {
                Some(path) => {
                    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                        fs::create_dir_all(dir)?;
                    }
                    fs::write(&path, &buf).with_context(|| format!("writing {}", path.display()))?;
                    eprintln!("{} configurations written to {}", configs.len(), path.display());
                }
                None => std::io::stdout().write_all(&buf)?,
            }
            Ok(true)
        }
        Command::Fpl { action: FplAction::Classify { input, common } } => {
            let f = fs::File::open(&input).with_context(|| format!("opening {}", input.display()))?;
            let mut configs: Vec<FplConfig> = Vec::new();
            for (k, line) in BufReader::new(f).lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let j: FplJson = serde_json::from_str(&line).map_err(|e| usage(format!("line {}: {e}", k + 1)))?;
                configs.push(FplConfig::try_from(&j).map_err(|e| usage(format!("line {}: {e}", k + 1)))?);
            }
            if configs.is_empty() {
                return Err(usage("no configurations in input"));
            }
            if configs.iter().any(|c| c.size() != configs[0].size()) {
                return Err(usage("configurations of different sizes"));
            }
            let t = fpl::classify(&configs)?;
            let rows: Vec<Vec<String>> = t
                .patterns
                .iter()
                .enumerate()
                .map(|(k, p)| vec![p.encoding(), t.counts[k].to_string(), t.polys[k].fmt_var("a")])
                .collect();
            let classes: Vec<Value> = rows
                .iter()
                .zip(&t.counts)
                .map(|(r, c)| json!({"pattern": r[0], "count": c, "a_polynomial": r[2]}))
                .collect();
            let j = json!({
                "n": configs[0].size(),
                "size": t.size,
                "total": configs.len(),
                "classes": classes,
                "statistic_disagreements": t.statistic_disagreements,
            });
            Report::new("classes", j).table(&["pattern", "count", "a_polynomial"], rows).emit(&common)
        }
        Command::Conjecture { action: ConjectureAction::Verify { size, common } } => {
            limit("size", size, 1, (MAX_FPL_N - 3) / 2)?;
            let r = fpl::verify_conjectures(size)?;
            let ok = r.counts_verified() && r.refined_verified();
            let rows = r
                .classes
                .iter()
                .map(|c| {
                    vec![
                        c.pattern.encoding(),
                        c.fpl_count.to_string(),
                        c.ground_state_at_one.clone(),
                        c.count.to_string(),
                        c.fpl_poly.clone(),
                        c.ground_state_poly.clone(),
                        c.refined.to_string(),
                    ]
                })
                .collect();
            let head = ["pattern", "fpl_count", "ground_state_at_one", "count_verdict", "fpl_poly", "ground_state_poly", "refined_verdict"];
            Ok(Report::new("conjecture", serde_json::to_value(&r)?).table(&head, rows).emit(&common)? && ok)
        }
        Command::ReproducePaper { max_size, fpl_max, positivity_max, seed, common } => {
            limit("max-size", max_size, 1, 8)?;
            limit("fpl-max", fpl_max, 5, MAX_FPL_N)?;
            let cfg = SuiteConfig { max_size, fpl_max, seed, positivity_max };
            let results = suite::run(&cfg);
            let ok = results.iter().all(|r| r.passed());
            for r in &results {
                eprintln!("{r}");
            }
            let rows = results
                .iter()
                .map(|r| {
                    vec![
                        r.id.to_string(),
                        r.title.clone(),
                        r.status.to_string(),
                        r.checks.len().to_string(),
                        r.first_failure().map_or(String::new(), |c| c.to_string()),
                    ]
                })
                .collect();
            let j = json!({"config": cfg, "all_pass": ok, "criteria": results});
            Ok(Report::new("summary", j).table(&["criterion", "title", "status", "checks", "first_failure"], rows).emit(&common)? && ok)
        }
    }
}

fn checks_report(name: &'static str, mut j: Value, checks: Vec<Check>) -> Report {
    let ok = report::all_pass(&checks);
    let rows = checks
        .iter()
        .map(|c| vec![c.identity.clone(), c.status.to_string(), c.witness.clone().unwrap_or_default()])
        .collect();
    j["status"] = json!(if ok { "PASS" } else { "FAIL" });
    j["checks"] = json!(checks);
    Report::new(name, j).table(&["identity", "status", "witness"], rows).passing(ok)
}

