use std::fmt::Debug;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use operad_forge::exact::scalar::fmt_q;
use operad_forge::main_theorem::construction::{m_psi, m_psi_ns, MPsi};
use operad_forge::main_theorem::*;
use operad_forge::operad::json as pjson;
use operad_forge::operad::presented::{self, PresentedOperad};
use operad_forge::operad::Operad;
use operad_forge::verify::{self, Config, Report};

#[derive(Parser)]
#[command(name = "operad-forge", version, about = "Exact operadic structure constants and their verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true)]
    arity_cap: Option<usize>,
    #[arg(long, global = true)]
    weight_cap: Option<usize>,
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 100)]
    samples: usize,
    /// write the JSON here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Profile::Default)]
    profile: Profile,
}

#[derive(Clone, Copy, ValueEnum)]
enum Profile {
    Default,
    Deep,
}

#[derive(Subcommand)]
enum Command {
    /// Dimensions, action matrices and composition tables of an operad
    /// (`com`, `lie`, `ass` or a presentation file).
    BuildOperad { operad: String },
    /// The images `M_Ψ(ℓ_n)` for `id_com`, `id_lie`, `id_ass`, `u`, `a` or
    /// `id_as`, up to arity 5 by default.
    MPsi {
        psi: String,
        /// also certify that `M_Ψ` commutes with the differentials
        #[arg(long)]
        check: bool,
    },
    /// Run a verification suite, or `all`.
    Verify { suite: String },
}

impl Cli {
    fn config(&self) -> Config {
        let mut c = match self.profile {
            Profile::Default => Config::default_profile(),
            Profile::Deep => Config::deep_profile(),
        };
        c.arity_cap = self.arity_cap.unwrap_or(c.arity_cap);
        c.weight_cap = self.weight_cap.unwrap_or(c.weight_cap);
        c.seed = self.seed;
        c.samples = self.samples;
        c
    }
}

fn emit(out: &Option<PathBuf>, v: &Value) -> Result<()> {
    let text = serde_json::to_string_pretty(v)? + "\n";
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{}", text);
            Ok(())
        }
    }
}

fn operad_by_name(name: &str, cap: usize) -> Result<PresentedOperad> {
    match name.to_lowercase().as_str() {
        "com" => Ok(presented::com(cap)),
        "lie" => Ok(presented::lie(cap)),
        "ass" => Ok(presented::ass(cap)),
        _ => {
            let text = std::fs::read_to_string(name).with_context(|| format!("no stock operad or file named {}", name))?;
            let spec = pjson::parse(&text).with_context(|| format!("in {}", name))?;
            pjson::load(&spec, cap).with_context(|| format!("in {}", name))
        }
    }
}

fn m_table<S: Operad + 'static, QO: Operad + 'static, P: Operad + 'static>(m: &MPsi<S, QO, P>, psi: &str, cap: usize, check: bool) -> (Value, bool)
where
    P::E: Debug,
{
    let mut images = serde_json::Map::new();
    for n in 2..=cap {
        let terms: Vec<Value> = m.of_top(n).iter().map(|((p, t), c)| json!([format!("{:?}", p), m.res.free.to_json(t), fmt_q(c)])).collect();
        images.insert(format!("l{}", n), Value::Array(terms));
    }
    let mut out = json!({ "psi": psi, "arity_cap": cap, "images": images });
    let mut ok = true;
    if check {
        let f = m.chain_failures(cap);
        ok = f.is_empty();
        out["certificate"] = json!({
            "chain_map": if ok { "PASS" } else { "FAIL" },
            "failing_generators": f.iter().map(|g| format!("{:?}", g)).collect::<Vec<_>>(),
        });
    }
    (out, ok)
}

fn run(cli: &Cli) -> Result<bool> {
    let cfg = cli.config();
    if cfg.arity_cap < 2 || cfg.weight_cap < 2 {
        bail!("caps must be at least 2");
    }
    match &cli.command {
        Command::BuildOperad { operad } => {
            let op = operad_by_name(operad, cfg.arity_cap)?;
            let d = pjson::dump(&op, cfg.arity_cap, |t| op.free.to_json(t).to_string());
            emit(&cli.out, &serde_json::to_value(d)?)?;
            Ok(true)
        }
        Command::MPsi { psi, check } => {
            // certificates go to arity 5 unless asked otherwise
            let (cap, wc) = (cli.arity_cap.unwrap_or(5), 2);
            let (v, ok) = match psi.as_str() {
                "id_com" => m_table(&m_psi(&id_com(), cap, wc), psi, cap, *check),
                "id_lie" => m_table(&m_psi(&id_lie(cap), cap, wc), psi, cap, *check),
                "id_ass" => m_table(&m_psi(&id_ass(), cap, wc), psi, cap, *check),
                "u" => m_table(&m_psi(&forget(), cap, wc), psi, cap, *check),
                "a" => m_table(&m_psi(&antisymmetrization(cap), cap, wc), psi, cap, *check),
                "id_as" => m_table(&m_psi_ns(&id_as(), cap, wc), psi, cap, *check),
                _ => bail!("unknown morphism {} (expected id_com, id_lie, id_ass, u, a or id_as)", psi),
            };
            emit(&cli.out, &v)?;
            Ok(ok)
        }
        Command::Verify { suite } => {
            let names: Vec<&str> = if suite == "all" { verify::SUITES.to_vec() } else { vec![suite.as_str()] };
            let mut reports: Vec<Report> = vec![];
            for name in names {
                match verify::run_suite(name, &cfg) {
                    Some(r) => reports.push(r),
                    None => bail!("unknown suite {} (expected one of {} or all)", name, verify::SUITES.join(", ")),
                }
            }
            let ok = reports.iter().all(|r| r.passed);
            for r in &reports {
                for a in r.assertions.iter().filter(|a| !a.passed) {
                    eprintln!("FAIL {}: {} {}", r.suite, a.name, a.detail);
                }
                eprintln!("{} {} ({:.1}s)", if r.passed { "PASS" } else { "FAIL" }, r.suite, r.seconds);
            }
            emit(&cli.out, &json!({ "config": cfg, "passed": ok, "reports": reports }))?;
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("OPERAD_FORGE_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        // ignore a pool that was already set up
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(2)
        }
    }
}
