//! Argument parsing and subcommand dispatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use moduli_lab::complex::{self, Capacity, FaceRule};
use moduli_lab::homology;
use moduli_lab::linalg::{is_prime, RankMethod, RankOptions, DEFAULT_PRIMES};
use moduli_lab::{moduli, polygon, spectra};

use crate::error::CliError;
use crate::golden::{self, GoldenFile};
use crate::output::{Emit, Format, Payload, Table};
use crate::verify::{self, VerifyContext};

/// Inclusive range written `a..b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NRange {
    pub from: usize,
    pub to: usize,
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s.split_once("..").ok_or_else(|| format!("expected a..b, got {s:?}"))?;
        let from = a.trim().parse().map_err(|_| format!("bad range start {a:?}"))?;
        let to = b.trim().trim_start_matches('=').parse().map_err(|_| format!("bad range end {b:?}"))?;
        if from > to {
            return Err(format!("empty range {s}"));
        }
        Ok(NRange { from, to })
    }
}

#[derive(Debug, Parser)]
#[command(name = "moduli-lab", version, about = "Coset complexes, moduli cells, homology ranks and spectral gaps")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Debug, Args, Serialize)]
pub struct GlobalArgs {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Directory for output files, named `<command>-n<k>.<ext>`.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Eigenvalues at or below this count as zero.
    #[arg(long, global = true, default_value_t = spectra::TOL_ZERO)]
    pub tol_zero: f64,
    /// Tolerance for comparisons against published decimals.
    #[arg(long, global = true, default_value_t = 2e-3)]
    pub tol_published: f64,
    /// Primes for modular rank checks, comma separated.
    #[arg(long, global = true, value_delimiter = ',')]
    pub primes: Vec<u64>,
    #[arg(long, global = true)]
    pub max_graph_n: Option<usize>,
    #[arg(long, global = true)]
    pub max_ball_n: Option<usize>,
    #[arg(long, global = true)]
    pub max_link_n: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuleArg {
    NonCrossing,
    Commuting,
}

impl From<RuleArg> for FaceRule {
    fn from(r: RuleArg) -> Self {
        match r {
            RuleArg::NonCrossing => FaceRule::NonCrossing,
            RuleArg::Commuting => FaceRule::Commuting,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
pub enum ComplexKind {
    #[value(name = "B")]
    #[serde(rename = "B")]
    Full,
    #[value(name = "ball")]
    #[serde(rename = "ball")]
    Ball,
    /// The punctured ball A(n,k).
    #[value(name = "A")]
    #[serde(rename = "A")]
    Punctured,
    #[value(name = "moduli")]
    #[serde(rename = "moduli")]
    Moduli,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MethodArg {
    Exact,
    ModP,
    Both,
}

impl From<MethodArg> for RankMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Exact => RankMethod::Exact,
            MethodArg::ModP => RankMethod::ModP,
            MethodArg::Both => RankMethod::Both,
        }
    }
}

#[derive(Clone, Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Coset graph G(n).
    Graph {
        #[arg(long)]
        n: usize,
        /// Write the edge list instead of the summary.
        #[arg(long)]
        edge_list: bool,
    },
    /// Square complex B(n).
    Complex {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = RuleArg::NonCrossing)]
        rule: RuleArg,
        /// Write faces as vertex-cycle lines instead of the summary.
        #[arg(long)]
        faces: bool,
    },
    /// Ball B(n,k) around the identity coset.
    Ball {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Remove the identity vertex.
        #[arg(long)]
        punctured: bool,
        #[arg(long)]
        edge_list: bool,
    },
    /// Link graph L(n) and its spectral gap.
    Link {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        edge_list: bool,
    },
    /// λ(n) for one n, a series, the conjecture check or the covering report.
    Spectra {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        series: Option<NRange>,
        #[arg(long)]
        conjecture: Option<usize>,
        #[arg(long)]
        covering: Option<usize>,
    },
    /// First homology rank over ℚ.
    Homology {
        #[arg(long, value_enum)]
        complex: ComplexKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = RuleArg::NonCrossing)]
        rule: RuleArg,
        /// Also write ∂1 and ∂2 in coordinate text format (needs --out).
        #[arg(long)]
        matrices: bool,
    },
    /// Cell census of the moduli complex.
    Moduli {
        #[arg(long)]
        n: usize,
        /// Also compute the H1 rank.
        #[arg(long)]
        h1: bool,
    },
    /// Diagonal counts: parallel pairs, non-crossing pairs, equilateral triples, M.
    Counts {
        #[arg(long, conflicts_with = "range")]
        n: Option<usize>,
        #[arg(long)]
        range: Option<NRange>,
    },
    /// Greedy 5-separated set in G(n).
    Pack {
        #[arg(long)]
        n: usize,
    },
    /// Audit of H1(B(n,2)) against the counting formula.
    #[command(name = "audit-t3")]
    AuditT3 {
        #[arg(long)]
        n: usize,
    },
    /// Counterexample report for the triangle-average criterion.
    Conjecture {
        #[arg(long, default_value_t = 70)]
        n: usize,
    },
    /// Run acceptance criteria.
    Verify {
        /// `all`, `paper-lambda`, `theorem1`, `theorem2`, `theorem3`, a
        /// criterion name, or ids like `1,5,9`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Recompute derived golden values and rewrite the golden file first.
        #[arg(long)]
        bless: bool,
        #[arg(long)]
        golden: Option<PathBuf>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Graph { .. } => "graph",
            Command::Complex { .. } => "complex",
            Command::Ball { .. } => "ball",
            Command::Link { .. } => "link",
            Command::Spectra { .. } => "spectra",
            Command::Homology { .. } => "homology",
            Command::Moduli { .. } => "moduli",
            Command::Counts { .. } => "counts",
            Command::Pack { .. } => "pack",
            Command::AuditT3 { .. } => "audit-t3",
            Command::Conjecture { .. } => "conjecture",
            Command::Verify { .. } => "verify",
        }
    }

    /// The `<k>` in output file names.
    fn label(&self) -> String {
        match self {
            Command::Graph { n, .. }
            | Command::Complex { n, .. }
            | Command::Link { n, .. }
            | Command::Moduli { n, .. }
            | Command::Pack { n }
            | Command::AuditT3 { n }
            | Command::Conjecture { n } => n.to_string(),
            Command::Ball { n, k, .. } | Command::Homology { n, k, .. } => format!("{n}-k{k}"),
            Command::Spectra { n, series, conjecture, covering } => match (n, series, conjecture, covering) {
                (_, Some(r), _, _) => format!("{}-{}", r.from, r.to),
                (_, _, Some(c), _) => format!("{c}-conjecture"),
                (_, _, _, Some(c)) => format!("{c}-covering"),
                (Some(n), ..) => n.to_string(),
                _ => "none".into(),
            },
            Command::Counts { n, range } => match (n, range) {
                (Some(n), _) => n.to_string(),
                (_, Some(r)) => format!("{}-{}", r.from, r.to),
                _ => "4-12".into(),
            },
            Command::Verify { suite, .. } => suite.replace(',', "_"),
        }
    }
}

impl GlobalArgs {
    fn capacity(&self) -> Capacity {
        let d = Capacity::default();
        Capacity {
            full_graph_max_n: self.max_graph_n.unwrap_or(d.full_graph_max_n),
            ball_max_n: self.max_ball_n.unwrap_or(d.ball_max_n),
            link_max_n: self.max_link_n.unwrap_or(d.link_max_n),
        }
    }

    fn primes(&self) -> Vec<u64> {
        if self.primes.is_empty() {
            DEFAULT_PRIMES.to_vec()
        } else {
            self.primes.clone()
        }
    }

    fn validate(&self) -> Result<(), CliError> {
        for (name, t) in [("--tol-zero", self.tol_zero), ("--tol-published", self.tol_published)] {
            if !(t > 0.0 && t.is_finite()) {
                return Err(CliError::Usage(format!("{name} must be positive, got {t}")));
            }
        }
        if let Some(p) = self.primes.iter().find(|&&p| !is_prime(p)) {
            return Err(CliError::Usage(format!("--primes: {p} is not prime")));
        }
        Ok(())
    }
}

/// Echo of the effective configuration, embedded in every output.
fn config_echo(cli: &Cli) -> Value {
    json!({
        "command": cli.command.name(),
        "args": cli.command,
        "format": cli.global.format,
        "out": cli.global.out,
        "seed": cli.global.seed,
        "tol_zero": cli.global.tol_zero,
        "tol_published": cli.global.tol_published,
        "primes": cli.global.primes(),
        "capacity": cli.global.capacity(),
    })
}

fn init_threads() {
    if let Some(n) = std::env::var("MODULI_LAB_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // A second call in the same process keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

/// Parses `argv`, runs the command and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{}", e.render());
                    1
                }
            };
        }
    };
    init_threads();
    match execute(&cli, stdout, stderr) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    cli.global.validate()?;
    let started = Instant::now();
    let g = &cli.global;
    let cap = g.capacity();
    let payload = match &cli.command {
        Command::Verify { suite, bless, golden } => {
            return run_verify(cli, suite, *bless, golden.clone(), stdout, stderr);
        }
        cmd => compute(cmd, g, &cap)?,
    };
    let emit = Emit {
        command: cli.command.name(),
        label: cli.command.label(),
        format: g.format,
        out: g.out.as_deref(),
        config: config_echo(cli),
        seed: g.seed,
        seconds: started.elapsed().as_secs_f64(),
    };
    emit.write(payload, stdout, stderr)
}

fn rank_options(g: &GlobalArgs, method: MethodArg) -> RankOptions {
    RankOptions {
        method: method.into(),
        primes: g.primes(),
    }
}

fn h1_table(r: &homology::H1Report) -> Table {
    let mut t = Table::new([
        "n", "complex", "vertices", "edges", "faces", "components", "rank_boundary2", "h1_rank", "method",
        "exact_rank", "mod_p_ranks", "disagreement",
    ]);
    let mod_p: Vec<String> = r.mod_p_ranks.iter().map(|(p, k)| format!("{p}:{k}")).collect();
    t.push([
        r.n.to_string(),
        r.complex_name.clone(),
        r.vertices.to_string(),
        r.edges.to_string(),
        r.faces.to_string(),
        r.components.to_string(),
        r.rank_boundary2.to_string(),
        r.h1_rank.to_string(),
        serde_json::to_value(r.method).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default(),
        r.exact_rank.map(|x| x.to_string()).unwrap_or_default(),
        mod_p.join(";"),
        r.disagreement.to_string(),
    ]);
    t
}

fn compute(cmd: &Command, g: &GlobalArgs, cap: &Capacity) -> Result<Payload, CliError> {
    Ok(match cmd {
        Command::Graph { n, edge_list } => {
            let cg = complex::build_coset_graph(*n, cap)?;
            let gr = cg.graph();
            if *edge_list {
                return Ok(Payload::Text {
                    body: gr.to_edge_list(*n, "G"),
                    extension: "txt",
                });
            }
            Payload::report(&json!({
                "n": n,
                "vertices": gr.vertex_count(),
                "edges": gr.edge_count(),
                "degree": gr.degree(0),
                "level_sizes": cg.level_sizes(),
                "radius": cg.radius(),
                "stats": cg.stats(),
            }))
        }
        Command::Complex { n, rule, faces } => {
            let gcos = complex::build_coset_graph(*n, cap)?;
            let b = complex::attach_faces(gcos, (*rule).into())?;
            let c = b.complex();
            if *faces {
                return Ok(Payload::Text {
                    body: c.faces_text(),
                    extension: "txt",
                });
            }
            Payload::report(&json!({
                "n": n,
                "rule": rule,
                "vertices": c.vertex_count(),
                "edges": c.edge_count(),
                "faces": c.face_count(),
                "euler_characteristic": c.euler_characteristic(),
                "face_stats": b.face_stats(),
            }))
        }
        Command::Ball { n, k, punctured, edge_list } => {
            let b = complex::build_ball(*n, *k, cap)?;
            let (ball, meta) = complex::ball_complex(&b, *k)?;
            let c = if *punctured { complex::punctured_ball(&ball).0 } else { ball };
            if *edge_list {
                return Ok(Payload::Text {
                    body: c.graph().to_edge_list(*n, "ball"),
                    extension: "txt",
                });
            }
            Payload::report(&json!({
                "n": n,
                "k": k,
                "punctured": punctured,
                "vertices": c.vertex_count(),
                "edges": c.edge_count(),
                "faces": c.face_count(),
                "euler_characteristic": c.euler_characteristic(),
                "level_sizes": meta.level_sizes,
            }))
        }
        Command::Link { n, edge_list } => {
            let l = complex::link_graph(*n, cap)?;
            if *edge_list {
                return Ok(Payload::Text {
                    body: l.to_edge_list(*n, "L"),
                    extension: "txt",
                });
            }
            let rep = spectra::smallest_positive_eigenvalue(&l, &format!("L({n})"), g.tol_zero)?;
            Payload::report(&json!({
                "link": rep,
                "lambda": spectra::subdivision_gap(rep.lambda1),
                "edges": l.edge_count(),
            }))
        }
        Command::Spectra { n, series, conjecture, covering } => spectra_payload(*n, *series, *conjecture, *covering, cap)?,
        Command::Homology { complex: kind, n, k, method, rule, matrices } => {
            let opts = rank_options(g, *method);
            let (name, d1, d2) = match kind {
                ComplexKind::Moduli => {
                    let m = moduli::build_moduli_complex(*n)?;
                    (format!("moduli({n})"), m.boundary1().clone(), m.boundary2().clone())
                }
                ComplexKind::Full => {
                    let b = complex::attach_faces(complex::build_coset_graph(*n, cap)?, (*rule).into())?;
                    let (d1, d2) = homology::boundary_matrices(b.complex())?;
                    (format!("B({n})"), d1, d2)
                }
                ComplexKind::Ball | ComplexKind::Punctured => {
                    let b = complex::build_ball(*n, *k, cap)?;
                    let (ball, _) = complex::ball_complex(&b, *k)?;
                    let (name, c) = if *kind == ComplexKind::Ball {
                        (format!("B({n},{k})"), ball)
                    } else {
                        (format!("A({n},{k})"), complex::punctured_ball(&ball).0)
                    };
                    let (d1, d2) = homology::boundary_matrices(&c)?;
                    (name, d1, d2)
                }
            };
            if *matrices {
                let dir = g
                    .out
                    .as_deref()
                    .ok_or_else(|| CliError::Usage("--matrices needs --out".into()))?;
                std::fs::create_dir_all(dir)?;
                std::fs::write(dir.join(format!("homology-n{n}-k{k}.d1.txt")), d1.to_coordinate_text())?;
                std::fs::write(dir.join(format!("homology-n{n}-k{k}.d2.txt")), d2.to_coordinate_text())?;
            }
            let r = homology::h1_from_boundaries(&name, *n, &d1, &d2, &opts)?;
            let t = h1_table(&r);
            Payload::report_with_table(&r, t)
        }
        Command::Moduli { n, h1 } => {
            let m = moduli::build_moduli_complex(*n)?;
            let mut t = Table::new(["dim", "count"]);
            for (d, c) in m.census().iter().enumerate() {
                t.push([d.to_string(), c.to_string()]);
            }
            let h1_rank = if *h1 {
                Some(moduli::h1_moduli(&m, &rank_options(g, MethodArg::Both))?)
            } else {
                None
            };
            Payload::report_with_table(
                &json!({
                    "n": n,
                    "census": m.census(),
                    "full_census": m.has_full_census(),
                    "euler_characteristic": m.euler_characteristic(),
                    "h1": h1_rank,
                }),
                t,
            )
        }
        Command::Counts { n, range } => {
            let ns: Vec<usize> = match (n, range) {
                (Some(n), _) => vec![*n],
                (_, Some(r)) => (r.from..=r.to).collect(),
                _ => (4..=12).collect(),
            };
            let mut t = Table::new(["n", "P", "S", "eqTriples", "M", "ambiguous"]);
            for n in ns {
                let r = polygon::counts_report(n)?;
                t.push([
                    r.n.to_string(),
                    r.p.to_string(),
                    r.s.to_string(),
                    r.eq_triples.to_string(),
                    r.m.to_string(),
                    r.ambiguous.to_string(),
                ]);
            }
            Payload::Table(t)
        }
        Command::Pack { n } => {
            let r = complex::packing_report(*n, cap)?;
            let mut t = Table::new(["n", "min_dist", "set_size", "separated", "maximal", "m_value", "lower_bound"]);
            t.push([
                r.n.to_string(),
                r.min_dist.to_string(),
                r.set_size.to_string(),
                r.separated.to_string(),
                r.maximal.to_string(),
                r.m_value.to_string(),
                r.lower_bound.to_string(),
            ]);
            Payload::report_with_table(&r, t)
        }
        Command::AuditT3 { n } => {
            let a = homology::audit_theorem3(*n, cap)?;
            let mut t = Table::new(["id", "quantity", "computed", "claimed", "matches"]);
            for r in &a.rows {
                t.push([
                    r.id.clone(),
                    r.quantity.clone(),
                    r.computed.to_string(),
                    r.claimed.map(|c| c.to_string()).unwrap_or_default(),
                    r.matches.map(|m| m.to_string()).unwrap_or_default(),
                ]);
            }
            Payload::report_with_table(&a, t)
        }
        Command::Conjecture { n } => Payload::report(&spectra::counterexample_report(*n, cap)?),
        Command::Verify { .. } => unreachable!("verify is dispatched separately"),
    })
}

fn spectra_payload(
    n: Option<usize>,
    series: Option<NRange>,
    conjecture: Option<usize>,
    covering: Option<usize>,
    cap: &Capacity,
) -> Result<Payload, CliError> {
    let chosen = [n.is_some(), series.is_some(), conjecture.is_some(), covering.is_some()]
        .iter()
        .filter(|&&x| x)
        .count();
    if chosen != 1 {
        return Err(CliError::Usage(
            "spectra needs exactly one of --n, --series, --conjecture, --covering".into(),
        ));
    }
    if let Some(r) = series {
        let s = spectra::lambda_series(r.from, r.to, cap)?;
        let mut t = Table::new(["n", "lambda1", "vertices", "seconds"]);
        for row in &s.rows {
            t.push([
                row.n.to_string(),
                format!("{:.12}", row.lambda),
                row.vertices.to_string(),
                format!("{:.3}", row.seconds),
            ]);
        }
        return Ok(Payload::report_with_table(&s, t));
    }
    if let Some(c) = conjecture {
        return Ok(Payload::report(&spectra::conjecture_check(c, cap)?));
    }
    if let Some(c) = covering {
        return Ok(Payload::report(&spectra::covering_consistency(c, cap)?));
    }
    let n = n.expect("exactly one option is set");
    let l = spectra::link_lambda(n, cap)?;
    let mut t = Table::new(["n", "lambda1", "vertices", "seconds"]);
    t.push([
        l.n.to_string(),
        format!("{:.12}", l.lambda),
        l.vertices.to_string(),
        format!("{:.3}", l.seconds),
    ]);
    Ok(Payload::report_with_table(&l, t))
}

fn run_verify(
    cli: &Cli,
    suite: &str,
    bless: bool,
    golden_path: Option<PathBuf>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<(), CliError> {
    let started = Instant::now();
    let g = &cli.global;
    let cap = g.capacity();
    let path = golden_path.unwrap_or_else(golden::default_path);
    if bless {
        let fresh = verify::bless(&cap)?;
        fresh.save(&path)?;
        writeln!(stderr, "blessed {} ({} entries)", path.display(), fresh.entries.len())?;
    }
    let golden = GoldenFile::load(&path)?;
    let ctx = VerifyContext {
        golden,
        seed: g.seed,
        tol_published: g.tol_published,
        capacity: cap,
        primes: g.primes(),
    };
    let report = verify::verify(suite, &ctx)?;
    for line in &report.lines {
        writeln!(stdout, "{line}")?;
    }
    let failures = report.failures();
    writeln!(
        stdout,
        "{} of {} criteria passed (seed {})",
        report.lines.len() - failures,
        report.lines.len(),
        g.seed
    )?;
    if let Some(dir) = g.out.as_deref() {
        let emit = Emit {
            command: "verify",
            label: cli.command.label(),
            format: Format::Json,
            out: Some(dir),
            config: config_echo(cli),
            seed: g.seed,
            seconds: started.elapsed().as_secs_f64(),
        };
        emit.write(Payload::report(&report), stdout, stderr)?;
    }
    if failures > 0 {
        return Err(CliError::AcceptanceFailed(failures));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_parse() {
        assert_eq!("6..8".parse::<NRange>().unwrap(), NRange { from: 6, to: 8 });
        assert_eq!("6..=8".parse::<NRange>().unwrap(), NRange { from: 6, to: 8 });
        assert!("8..6".parse::<NRange>().is_err());
        assert!("6-8".parse::<NRange>().is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
