//! Command line front end. The binary is a thin wrapper around [`run`].

use crate::categorify::{verify_main_theorem, Categorification, CheckStatus, VerifyOptions};
use crate::clusteralg::{exchange_graph, universal_seed, Seed};
use crate::error::{Error, Result};
use crate::nakajima::Nakajima;
use crate::quiver::{parse_arrows, Quiver};
use crate::rootsys::{Family, RootSystem, SignFunction};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

/// Version tag of every JSON document written by the tool.
pub const SCHEMA: &str = "cluster-frobenius/1";

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "cluster-frobenius", version, about = "Finite-type cluster algebras with universal coefficients")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Almost positive roots and the tau-orbits.
    Roots(Common),
    /// The initial seed with universal coefficients.
    UniversalSeed(Common),
    /// Applies a mutation word to the universal seed.
    Mutate {
        #[command(flatten)]
        common: Common,
        /// 1-based vertices, e.g. "1,2,1".
        #[arg(long)]
        word: String,
    },
    /// Closure of the universal seed under mutation.
    ExchangeGraph(Common),
    /// The orbit quiver of the configuration quiver under F.
    ArQuiver(Common),
    /// Compares the universal seed with the ice quiver of the cluster-tilting object.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Also compare the quiver of every seed of the exchange graph.
        #[arg(long)]
        all_seeds: bool,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Dynkin family: A, D or E.
    #[arg(long = "type")]
    pub family: String,
    #[arg(long)]
    pub rank: usize,
    /// Arrows "1>2,3>2"; defaults to the bipartite orientation with odd sources.
    #[arg(long)]
    pub orientation: Option<String>,
    /// "full" or a list of vertices "(i,p);(j,q)".
    #[arg(long)]
    pub config: Option<String>,
    /// n in F = Sigma^n tau^-1.
    #[arg(long, default_value_t = 1)]
    pub f_power: i64,
    /// Directory for output files.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Maximal number of seeds explored.
    #[arg(long, default_value_t = crate::clusteralg::DEFAULT_BUDGET)]
    pub budget: usize,
}

/// Validated options shared by all commands.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub roots: RootSystem,
    pub orientation: Quiver,
    pub configuration: Option<String>,
    pub f_power: i64,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub budget: usize,
}

impl RunConfig {
    pub fn from_common(c: &Common) -> Result<Self> {
        let family: Family = c.family.parse()?;
        let roots = RootSystem::of_type(family, c.rank)?;
        let orientation = match &c.orientation {
            None => roots.diagram().bipartite_orientation(),
            Some(s) => roots.diagram().orientation(&parse_arrows(s)?)?,
        };
        SignFunction::from_orientation(&orientation)?;
        if c.f_power < 1 {
            return Err(Error::Parse("--f-power must be at least 1".into()));
        }
        let configuration = c.config.clone().filter(|s| !s.trim().eq_ignore_ascii_case("full"));
        if let Some(s) = &configuration {
            let happel = crate::meshcat::Happel::knit(&roots, &orientation)?;
            crate::nakajima::Configuration::parse(s, happel.f_map(c.f_power))?;
        }
        Ok(RunConfig {
            roots,
            orientation,
            configuration,
            f_power: c.f_power,
            format: c.format,
            out: c.out.clone(),
            budget: c.budget,
        })
    }
}

/// What a command produced: the main document, extra files and the exit code.
struct Output {
    stdout: String,
    files: Vec<(String, String)>,
    code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, files: Vec::new(), code: EXIT_PASS }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json serializes") + "\n"
}

fn cmd_roots(cfg: &RunConfig) -> Result<Output> {
    let rs = &cfg.roots;
    let signs = SignFunction::from_orientation(&cfg.orientation)?;
    let orbits = rs.tau_orbits(&signs)?;
    let roots: Vec<String> = rs.almost_positive().iter().map(|r| r.to_string()).collect();
    let orbit_strings: Vec<Vec<String>> =
        orbits.iter().map(|o| o.iter().map(|r| r.to_string()).collect()).collect();
    let stdout = match cfg.format {
        Format::Json => pretty(&json!({
            "schema": SCHEMA,
            "diagram": rs.diagram().name(),
            "almost_positive_roots": roots,
            "tau_orbits": orbit_strings,
        })),
        Format::Text | Format::Dot => {
            let mut s = format!("{}: {} almost positive roots\n", rs.diagram().name(), roots.len());
            for r in &roots {
                let _ = writeln!(s, "  {}", r);
            }
            let _ = writeln!(s, "tau-orbits:");
            for o in &orbit_strings {
                let _ = writeln!(s, "  ({}) {}", o.len(), o.join(" -> "));
            }
            s
        }
    };
    Ok(Output::ok(stdout))
}

fn seed_output(seed: &Seed, format: Format) -> Output {
    let json = serde_json::to_string_pretty(&seed.to_json()).expect("seed serializes") + "\n";
    let dot = seed.ice().to_dot();
    let stdout = match format {
        Format::Json => json.clone(),
        Format::Dot => dot.clone(),
        Format::Text => seed.to_text(),
    };
    Output { stdout, files: vec![("seed.json".into(), json), ("seed.dot".into(), dot)], code: EXIT_PASS }
}

fn cmd_universal_seed(cfg: &RunConfig) -> Result<Output> {
    Ok(seed_output(&universal_seed(&cfg.roots, &cfg.orientation)?, cfg.format))
}

fn parse_word(word: &str, n: usize) -> Result<Vec<usize>> {
    word.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            let k: usize = s.parse().map_err(|_| Error::Parse(format!("bad vertex `{}`", s)))?;
            if k == 0 || k > n {
                return Err(Error::VertexOutOfRange { vertex: k, size: n });
            }
            Ok(k - 1)
        })
        .collect()
}

fn cmd_mutate(cfg: &RunConfig, word: &str) -> Result<Output> {
    let seed = universal_seed(&cfg.roots, &cfg.orientation)?;
    let word = parse_word(word, seed.rank())?;
    let (result, relations) = seed.mutate_sequence(&word)?;
    let labels = seed.frozen_labels();
    let mut out = seed_output(&result, cfg.format);
    if cfg.format == Format::Text {
        let mut s = String::from("exchange relations:\n");
        for r in &relations {
            let _ = writeln!(s, "  mu_{}: {}", r.vertex + 1, r.render(&labels));
        }
        out.stdout = s + &out.stdout;
    }
    Ok(out)
}

fn cmd_exchange_graph(cfg: &RunConfig) -> Result<Output> {
    let seed = universal_seed(&cfg.roots, &cfg.orientation)?;
    let g = exchange_graph(&seed, cfg.budget)?;
    let labels = seed.frozen_labels();
    let relations: Vec<String> = g.distinct_relations().iter().map(|r| r.render(&labels)).collect();
    let d: Vec<String> = g.d_vectors().iter().map(|v| crate::rootsys::format_vector(v)).collect();
    let stdout = match cfg.format {
        Format::Json => pretty(&json!({
            "schema": SCHEMA,
            "diagram": cfg.roots.diagram().name(),
            "seeds": g.seed_count(),
            "variables": g.variable_count(),
            "edges": g.edges.len() / 2,
            "d_vectors": d,
            "relations": relations,
        })),
        Format::Text | Format::Dot => {
            let mut s = format!(
                "{}: {} seeds, {} cluster variables, {} exchanges\n",
                cfg.roots.diagram().name(),
                g.seed_count(),
                g.variable_count(),
                g.edges.len() / 2
            );
            for r in &relations {
                let _ = writeln!(s, "  {}", r);
            }
            s
        }
    };
    Ok(Output::ok(stdout))
}

fn cmd_ar_quiver(cfg: &RunConfig) -> Result<Output> {
    let oq = if cfg.f_power == 1 {
        Categorification::with_configuration(&cfg.roots, &cfg.orientation, cfg.configuration.as_deref())?
            .orbit_quiver()
            .clone()
    } else {
        Nakajima::new(&cfg.roots, &cfg.orientation, cfg.f_power, cfg.configuration.as_deref())?.orbit_quiver()?
    };
    let dot = oq.to_dot();
    let stdout = match cfg.format {
        Format::Dot => dot.clone(),
        Format::Text => oq.to_text(),
        Format::Json => pretty(&json!({
            "schema": SCHEMA,
            "diagram": cfg.roots.diagram().name(),
            "vertices": oq.labels,
            "frozen": oq.vertices.iter().map(|v| v.frozen).collect::<Vec<_>>(),
            "arrows": oq.labeled_arrows(),
        })),
    };
    Ok(Output { stdout, files: vec![("orbit_quiver.dot".into(), dot)], code: EXIT_PASS })
}

fn cmd_verify(cfg: &RunConfig, all_seeds: bool) -> Result<Output> {
    let opts = VerifyOptions {
        configuration: cfg.configuration.clone(),
        f_power: Some(cfg.f_power),
        all_seeds,
    };
    let mut report = verify_main_theorem(&cfg.roots, &cfg.orientation, &opts)?;
    if report.status == CheckStatus::NotApplicable {
        // structural checks that make sense for any F
        let nak = Nakajima::new(&cfg.roots, &cfg.orientation, cfg.f_power, cfg.configuration.as_deref())?;
        let adm = nak.is_admissible()?;
        let oq = nak.orbit_quiver()?;
        report.checks.push(crate::categorify::CheckResult {
            name: "structure".into(),
            status: if adm.admissible { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: format!(
                "admissible: {}; orbit quiver with {} + {} vertices",
                adm.admissible,
                oq.non_frozen_count(),
                oq.frozen_count()
            ),
        });
    }
    let code = match report.status {
        CheckStatus::Fail => EXIT_FAIL,
        _ => EXIT_PASS,
    };
    let json = report.to_json() + "\n";
    let text = report.to_text();
    let stdout = match cfg.format {
        Format::Json => json.clone(),
        Format::Dot => report.to_dot(),
        Format::Text => text.clone(),
    };
    let mut files = vec![("report.json".to_string(), json), ("report.txt".to_string(), text)];
    if code == EXIT_FAIL {
        files.push(("quivers.dot".into(), report.to_dot()));
    }
    Ok(Output { stdout, files, code })
}

fn is_usage(e: &Error) -> bool {
    matches!(
        e,
        Error::UnsupportedType { .. }
            | Error::InvalidOrientation(_)
            | Error::Parse(_)
            | Error::NotAdmissible(_)
            | Error::VertexOutOfRange { .. }
            | Error::NotSinkOrSource { .. }
    )
}

/// Parses `args` (including the program name), runs the command, writes
/// output to `stdout` and files to `--out`, and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn std::io::Write, stderr: &mut dyn std::io::Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            if code == EXIT_PASS {
                let _ = write!(stdout, "{}", e.render());
            } else {
                let _ = write!(stderr, "{}", e.render());
            }
            return code;
        }
    };
    let common = match &cli.command {
        Command::Roots(c) | Command::UniversalSeed(c) | Command::ExchangeGraph(c) | Command::ArQuiver(c) => c,
        Command::Mutate { common, .. } | Command::Verify { common, .. } => common,
    };
    let cfg = match RunConfig::from_common(common) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e);
            return EXIT_USAGE;
        }
    };
    let result = match &cli.command {
        Command::Roots(_) => cmd_roots(&cfg),
        Command::UniversalSeed(_) => cmd_universal_seed(&cfg),
        Command::Mutate { word, .. } => cmd_mutate(&cfg, word),
        Command::ExchangeGraph(_) => cmd_exchange_graph(&cfg),
        Command::ArQuiver(_) => cmd_ar_quiver(&cfg),
        Command::Verify { all_seeds, .. } => cmd_verify(&cfg, *all_seeds),
    };
    match result {
        Ok(out) => {
            let _ = stdout.write_all(out.stdout.as_bytes());
            if let Some(dir) = &cfg.out {
                if let Err(e) = write_files(dir, &out.files) {
                    let _ = writeln!(stderr, "error: {}", e);
                    return EXIT_FAIL;
                }
            }
            out.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e);
            if is_usage(&e) {
                EXIT_USAGE
            } else {
                EXIT_FAIL
            }
        }
    }
}

fn write_files(dir: &std::path::Path, files: &[(String, String)]) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    for (name, content) in files {
        std::fs::write(dir.join(name), content)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("cluster-frobenius").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn verify_a2() {
        let (code, out, _) = run_args(&["verify", "--type", "A", "--rank", "2"]);
        assert_eq!(code, 0, "{}", out);
        assert!(out.contains("PASS"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&["verify", "--type", "B", "--rank", "2"]).0, 2);
        assert_eq!(run_args(&["verify", "--type", "A", "--rank", "3", "--orientation", "1>2,2>3"]).0, 2);
        assert_eq!(run_args(&["frobnicate"]).0, 2);
    }

    #[test]
    fn higher_f_is_reported_not_applicable() {
        let (code, out, _) = run_args(&["verify", "--type", "A", "--rank", "2", "--f-power", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains("N/A"));
    }

    #[test]
    fn json_is_deterministic() {
        let a = run_args(&["universal-seed", "--type", "D", "--rank", "4", "--format", "json"]).1;
        let b = run_args(&["universal-seed", "--type", "D", "--rank", "4", "--format", "json"]).1;
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["schema"], SCHEMA);
    }
}
