use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use bgg_core::bgg::{bgg_matrices, ind_into_projectives, tensor_projectives, verify_report, BggReport, SimpleData};
use bgg_core::group::DEFAULT_ORDER_CAP;
use bgg_core::io::{self, Aliases};
use bgg_core::profile::{verify_duality_identities, Check, NicholsProfile};
use bgg_core::taft::verify_taft;
use bgg_core::{DoubleGroup, Error, Weight};
use clap::{Args, Parser, Subcommand};

/// Exact weights, fusion and graded BGG data for Drinfeld doubles.
#[derive(Parser)]
#[command(name = "bggkit", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Group file; overrides the group referenced by a profile.
    #[arg(long, global = true)]
    group: Option<PathBuf>,
    /// Profile file (graded character of the Nichols algebra).
    #[arg(long, global = true)]
    profile: Option<PathBuf>,
    /// Simple-module data: graded simple characters or an [M:L] matrix.
    #[arg(long, global = true)]
    simples: Option<PathBuf>,
    /// Weight alias map.
    #[arg(long, global = true)]
    aliases: Option<PathBuf>,
    /// Output directory for report files.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Directory for cached centralizer character tables.
    #[arg(long, global = true, env = "BGGKIT_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Refuse groups larger than this.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP)]
    max_group_order: usize,
    /// Forget the grading (evaluate at t = 1).
    #[arg(long, global = true)]
    ungraded: bool,
}

#[derive(Subcommand)]
enum Command {
    /// List the simple D(G)-modules with dimensions and duals.
    Weights,
    /// Fusion rule of two weights, or the full table when none are given.
    Fusion { a: Option<String>, b: Option<String> },
    /// Verma and projective characters with graded BGG reciprocity.
    Bgg,
    /// Expand Ind(mu) in projective covers.
    Ind { mu: Option<String> },
    /// Expand P(mu) ⊗ P(nu) in induced modules; all pairs when none are given.
    Tensor { mu: Option<String>, nu: Option<String> },
    /// Generate and fully verify the rank-one Taft example of order n.
    Taft { n: u32 },
    /// Run all identity checks on a profile and simple data.
    Verify,
}

/// Line to stdout; a closed pipe ends the process quietly.
macro_rules! say {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let mut out = std::io::stdout().lock();
        if writeln!(out, $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

/// A failed run: exit status plus message.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_input_error() {
            2
        } else if e.is_oracle_error() {
            4
        } else {
            3
        };
        let mut message = e.to_string();
        if let Error::NotInSpan { residual, .. } = &e {
            let _ = write!(message, "\nresidual: {}\nresidual JSON: {}", residual, io::graded_char_to_json(residual));
        }
        Failure { code, message }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

type Run = Result<(), Failure>;

struct Loaded {
    dg: Arc<DoubleGroup>,
    aliases: Aliases,
}

struct Setup {
    dg: Arc<DoubleGroup>,
    aliases: Aliases,
    profile: NicholsProfile,
    simples: SimpleData,
}

impl Common {
    fn load_group(&self, fallback: Option<PathBuf>) -> Result<Loaded, Failure> {
        let path = self.group.clone().or(fallback).ok_or_else(|| input_error("--group is required"))?;
        let dg = io::load_double(&path, self.max_group_order, self.cache_dir.as_deref())?;
        let aliases = match &self.aliases {
            Some(p) => io::load_aliases(p, &dg)?,
            None => Aliases::default(),
        };
        Ok(Loaded { dg, aliases })
    }

    fn load_setup(&self) -> Result<Setup, Failure> {
        let profile_path = self.profile.as_ref().ok_or_else(|| input_error("--profile is required"))?;
        let simples_path = self.simples.as_ref().ok_or_else(|| input_error("--simples is required"))?;
        let group_path = if self.group.is_some() { None } else { Some(io::profile_group_path(profile_path)?) };
        let Loaded { dg, aliases } = self.load_group(group_path)?;
        let profile = io::load_profile(profile_path, dg.clone(), &aliases)?;
        let mut simples = io::load_simples(simples_path, &profile, &aliases)?;
        if self.ungraded {
            simples = simples.collapse(&profile)?;
        }
        Ok(Setup { dg, aliases, profile, simples })
    }
}

fn weight_arg(loaded: &Loaded, arg: &Option<String>) -> Result<Option<Weight>, Failure> {
    arg.as_deref().map(|s| loaded.aliases.resolve(&loaded.dg, s)).transpose().map_err(Failure::from)
}

fn cmd_weights(common: &Common) -> Run {
    let Loaded { dg, aliases } = common.load_group(None)?;
    let rows: Vec<[String; 4]> = dg
        .weights()
        .iter()
        .map(|&w| {
            [
                w.label(),
                aliases.get(w).unwrap_or("-").to_string(),
                dg.dimension(w).to_string(),
                aliases.name(dg.dual_weight(w)),
            ]
        })
        .collect();
    let header = ["weight", "alias", "dim", "dual"].map(String::from);
    let widths: Vec<usize> =
        (0..4).map(|i| rows.iter().chain([&header]).map(|r| r[i].chars().count()).max().unwrap_or(0)).collect();
    let line = |r: &[String; 4]| {
        let cells: Vec<String> = r.iter().zip(&widths).map(|(c, &w)| format!("{:<w$}", c, w = w)).collect();
        cells.join("  ").trim_end().to_string()
    };
    say!("{}", line(&header));
    for r in &rows {
        say!("{}", line(r));
    }
    let total: u64 = dg.weights().iter().map(|&w| dg.dimension(w).pow(2)).sum();
    say!("{} weights; sum of dim^2 = {} (|G|^2 = {})", rows.len(), total, dg.group().order().pow(2));
    Ok(())
}

fn fusion_line(loaded: &Loaded, a: Weight, b: Weight) -> Result<String, Failure> {
    let row = loaded.dg.fusion(a, b)?;
    let terms: Vec<String> = row
        .iter()
        .map(|(&w, &m)| if m == 1 { loaded.aliases.name(w) } else { format!("{} {}", m, loaded.aliases.name(w)) })
        .collect();
    Ok(format!("{} ⊗ {} = {}", loaded.aliases.name(a), loaded.aliases.name(b), terms.join(" + ")))
}

fn cmd_fusion(common: &Common, a: &Option<String>, b: &Option<String>) -> Run {
    let loaded = common.load_group(None)?;
    let ws = loaded.dg.weights().to_vec();
    let pairs: Vec<(Weight, Weight)> = match (weight_arg(&loaded, a)?, weight_arg(&loaded, b)?) {
        (Some(x), Some(y)) => vec![(x, y)],
        (None, None) => ws.iter().enumerate().flat_map(|(i, &x)| ws[i..].iter().map(move |&y| (x, y))).collect(),
        _ => return Err(input_error("give two weights or none")),
    };
    for (x, y) in pairs {
        say!("{}", fusion_line(&loaded, x, y)?);
    }
    Ok(())
}

fn write_out(dir: &Path, name: &str, contents: &str) -> Run {
    io::write_file(&dir.join(name), contents)?;
    Ok(())
}

fn emit_report(common: &Common, s: &Setup, report: &BggReport) -> Run {
    let text = io::report_text(&s.dg, &s.profile, report, &s.aliases);
    match &common.out {
        Some(dir) => {
            let js = io::report_to_json(&s.dg, &s.profile, report, &s.aliases);
            write_out(dir, "report.json", &io::to_pretty(&js))?;
            write_out(dir, "report.txt", &text)?;
            say!("wrote {} and {}", dir.join("report.json").display(), dir.join("report.txt").display());
        }
        None => say!("{}", text.trim_end()),
    }
    Ok(())
}

fn cmd_bgg(common: &Common) -> Run {
    let s = common.load_setup()?;
    let report = bgg_matrices(&s.profile, &s.simples)?;
    emit_report(common, &s, &report)
}

fn cmd_ind(common: &Common, mu: &Option<String>) -> Run {
    let s = common.load_setup()?;
    let report = bgg_matrices(&s.profile, &s.simples)?;
    let loaded = Loaded { dg: s.dg.clone(), aliases: s.aliases.clone() };
    let targets = match weight_arg(&loaded, mu)? {
        Some(w) => vec![w],
        None => s.dg.weights().to_vec(),
    };
    for w in targets {
        let map = ind_into_projectives(&s.profile, &s.simples, &report, w)?;
        let dim = s.profile.ind_char(w)?.dimension(&s.dg);
        say!("{} = {}    [dim {}]", s.aliases.module("Ind", w), io::render_ind_sum(&map, "P", &s.aliases), dim);
    }
    Ok(())
}

fn cmd_tensor(common: &Common, mu: &Option<String>, nu: &Option<String>) -> Run {
    let s = common.load_setup()?;
    let report = bgg_matrices(&s.profile, &s.simples)?;
    let loaded = Loaded { dg: s.dg.clone(), aliases: s.aliases.clone() };
    let ws = s.dg.weights().to_vec();
    let pairs: Vec<(Weight, Weight)> = match (weight_arg(&loaded, mu)?, weight_arg(&loaded, nu)?) {
        (Some(x), Some(y)) => vec![(x, y)],
        (None, None) => ws.iter().flat_map(|&x| ws.iter().map(move |&y| (x, y))).collect(),
        _ => return Err(input_error("give two weights or none")),
    };
    let ind_dim = s.profile.dimension() * s.profile.dimension();
    for (x, y) in pairs {
        let map = tensor_projectives(&s.profile, &report, x, y)?;
        let lhs = report.projective_char(x).dimension(&s.dg) * report.projective_char(y).dimension(&s.dg);
        let rhs: i64 = map.iter().map(|(&w, p)| p.eval_one() * ind_dim * s.dg.dimension(w) as i64).sum();
        say!(
            "{} ⊗ {} = {}    [dims {} = {}]",
            s.aliases.module("P", x),
            s.aliases.module("P", y),
            io::render_ind_sum(&map, "Ind", &s.aliases),
            lhs,
            rhs
        );
    }
    Ok(())
}

fn print_checks(checks: &[Check]) -> Run {
    let failed: Vec<&Check> = checks.iter().filter(|c| !c.passed).collect();
    for c in &failed {
        say!("FAIL {}", c.name);
    }
    if failed.is_empty() {
        say!("{} checks passed", checks.len());
        Ok(())
    } else {
        Err(Failure { code: 4, message: format!("{} of {} checks failed", failed.len(), checks.len()) })
    }
}

fn cmd_verify(common: &Common) -> Run {
    let s = common.load_setup()?;
    let report = bgg_matrices(&s.profile, &s.simples)?;
    let mut checks = Vec::new();
    for &w in s.dg.weights() {
        for c in verify_duality_identities(&s.profile, w)? {
            checks.push(Check::new(format!("{}: {}", s.aliases.name(w), c.name), c.passed));
        }
    }
    checks.extend(verify_report(&s.profile, &s.simples, &report)?);
    let simples_known = match &s.simples {
        SimpleData::Graded(_) => true,
        SimpleData::Ungraded(u) => u.determines_simples(),
    };
    if simples_known {
        for &w in s.dg.weights() {
            ind_into_projectives(&s.profile, &s.simples, &report, w)?;
            checks.push(Check::new(format!("Ind({}) expands in projective covers", s.aliases.name(w)), true));
        }
    } else {
        say!("note: [M:L] does not determine the simple characters; Ind expansions skipped");
    }
    print_checks(&checks)
}

fn cmd_taft(common: &Common, n: u32) -> Run {
    if !(2..=12).contains(&n) {
        return Err(input_error(format!("taft order must be between 2 and 12, got {}", n)));
    }
    let (setup, summary) = verify_taft(n)?;
    if let Some(dir) = &common.out {
        let aliases = Aliases::new(setup.aliases())?;
        write_out(dir, "group.json", &io::to_pretty(&io::group_to_json(setup.double.group())))?;
        write_out(dir, "aliases.json", &io::to_pretty(&aliases.to_json()))?;
        write_out(dir, "profile.json", &io::to_pretty(&io::profile_to_json(&setup.profile, "group.json")))?;
        write_out(dir, "simples.json", &io::to_pretty(&io::simple_table_to_json(&setup.table)))?;
        let js = io::report_to_json(&setup.double, &setup.profile, &summary.report, &aliases);
        write_out(dir, "report.json", &io::to_pretty(&js))?;
        write_out(dir, "report.txt", &io::report_text(&setup.double, &setup.profile, &summary.report, &aliases))?;
        let mut text = String::new();
        for c in &summary.checks {
            let _ = writeln!(text, "{} {}", if c.passed { "ok  " } else { "FAIL" }, c.name);
        }
        let _ = writeln!(text, "{}", summary.headline());
        write_out(dir, "summary.txt", &text)?;
    }
    say!("Taft order {}: {}", n, summary.headline());
    if summary.all_passed() {
        Ok(())
    } else {
        for c in summary.checks.iter().filter(|c| !c.passed) {
            say!("FAIL {}", c.name);
        }
        Err(Failure { code: 4, message: summary.headline() })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let c = &cli.common;
    let result = match &cli.command {
        Command::Weights => cmd_weights(c),
        Command::Fusion { a, b } => cmd_fusion(c, a, b),
        Command::Bgg => cmd_bgg(c),
        Command::Ind { mu } => cmd_ind(c, mu),
        Command::Tensor { mu, nu } => cmd_tensor(c, mu, nu),
        Command::Taft { n } => cmd_taft(c, *n),
        Command::Verify => cmd_verify(c),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
