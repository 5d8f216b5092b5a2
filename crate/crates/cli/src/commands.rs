use std::fmt::Write as _;
use std::io::Read as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use hgdual::{
    check_dual_with, check_simple_ip, compute_new_transversal_with, det_new_transversal, dualize,
    evaluate_guess, minimize_transversal, nd_check_random_with, Assignment, CheckFailure, Disjunct,
    EdgeId, EnumHit, EnumOptions, Error, Label, LabelSet, NdOutcome, Pair, Reason, SearchStats,
    Status, VertexSet, MAX_VERTICES,
};
use serde::Serialize;

use crate::format::{
    emit_hypergraph, emit_pair, parse_dnf, parse_hypergraph, parse_pair, remove_vertices,
    render_set, token_list, NamedPair,
};
use crate::generate::{exp_family_pair, random_hypergraph};

#[derive(Debug, Parser)]
#[command(
    name = "hgdual",
    version,
    about = "Hypergraph duality checking and dualization"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether H is the transversal hypergraph of G.
    ///
    /// Exit status: 0 dual, 1 not dual, 2 input error.
    Check(CheckArgs),
    /// Search for a transversal of G that contains no edge of H.
    ///
    /// Exit status: 0 none found, 1 found, 2 input error.
    Find(FindArgs),
    /// Print all minimal transversals of a hypergraph.
    Dualize(DualizeArgs),
    /// Generate instances.
    #[command(subcommand)]
    Gen(GenCommand),
}

#[derive(Debug, Args)]
pub struct PairInput {
    /// Pair file: G, a blank line, then H. Use `-` for standard input.
    pub file: PathBuf,
    /// Remove vertices that are isolated in G or in H before solving.
    #[arg(long)]
    pub drop_isolated: bool,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub input: PairInput,
    /// Print a JSON report.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Deterministic recursive search.
    #[value(alias = "gaur")]
    Recursive,
    /// Enumeration of small label sets in order.
    Enum,
    /// Uniformly random label sets.
    Random,
}

#[derive(Debug, Args)]
pub struct FindArgs {
    #[command(flatten)]
    pub input: PairInput,
    #[arg(long, value_enum, default_value_t = Mode::Recursive)]
    pub mode: Mode,
    /// Number of guesses in random mode.
    #[arg(long, default_value_t = 100_000)]
    pub trials: u64,
    /// Seed for random mode.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for enum mode.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=1024))]
    pub jobs: u64,
    /// Largest guess tried by enum and random modes, instead of ⌊log₂|H|⌋+1.
    #[arg(long)]
    pub max_guess_size: Option<usize>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct DualizeArgs {
    /// Hypergraph file. Use `-` for standard input.
    pub file: PathBuf,
    /// Drop edges that contain another edge instead of rejecting the input.
    #[arg(long)]
    pub minimize_first: bool,
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    /// A random simple hypergraph, or with --dual a pair ⟨G, tr(G)⟩.
    Random {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        edges: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        dual: bool,
    },
    /// The pair G = {{x_j, y_j}}, H = {{x_1..x_i}, {y_1..y_i}}.
    ExpFamily {
        #[arg(long)]
        size: usize,
    },
    /// The hypergraph of a monotone DNF, one term per line.
    FromDnf { file: PathBuf },
}

/// What a command produced: exit status and both output streams.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Self {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(message: impl std::fmt::Display) -> Self {
        Self {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }

    fn with_warnings(mut self, warnings: &[String]) -> Self {
        let mut prefix = String::new();
        for w in warnings {
            let _ = writeln!(prefix, "warning: {w}");
        }
        self.stderr = prefix + &self.stderr;
        self
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(0, text)
            }
        }
    }
}

pub fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Check(args) => cmd_check(&args),
        Command::Find(args) => cmd_find(&args),
        Command::Dualize(args) => cmd_dualize(&args),
        Command::Gen(g) => cmd_gen(&g),
    }
}

fn read_input(path: &Path) -> Result<String, String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("cannot read standard input: {e}"))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
    }
}

fn load_pair(input: &PairInput) -> Result<(NamedPair, Vec<String>), String> {
    let text = read_input(&input.file)?;
    let pair = parse_pair(&text).map_err(|e| format!("{}: {e}", input.file.display()))?;
    let inst = &pair.instance;
    let in_g = inst.g().isolated_vertices();
    let in_h = inst.h().isolated_vertices();
    let mut warnings = Vec::new();
    for (side, set) in [("G", &in_g), ("H", &in_h)] {
        if !set.is_empty() {
            warnings.push(format!(
                "vertices isolated in {side}: {}",
                render_set(&pair.names, set)
            ));
        }
    }
    if input.drop_isolated {
        let drop = in_g.union(&in_h);
        if !drop.is_empty() {
            warnings.push(format!("dropping {}", render_set(&pair.names, &drop)));
            return Ok((remove_vertices(&pair.names, inst, &drop), warnings));
        }
    }
    Ok((pair, warnings))
}

fn render_label(names: &[String], l: &Label) -> String {
    match *l {
        Label::Exclude(v) => format!("Exc({})", names[v.0]),
        Label::IncludeCritical(v, e) => format!("Inc({},G#{})", names[v.0], e.0),
    }
}

fn render_guess(names: &[String], guess: &LabelSet) -> Vec<String> {
    guess.iter().map(|l| render_label(names, l)).collect()
}

fn side_of(reason: Reason) -> (&'static str, &'static str) {
    match reason {
        Reason::NotSimpleG => ("G", "G"),
        Reason::NotSimpleH => ("H", "H"),
        _ => ("G", "H"),
    }
}

fn describe_failure(pair: &NamedPair, f: &CheckFailure) -> String {
    let (first, second) = side_of(f.reason);
    let edge = |side: &str, id: EdgeId| {
        let hg = if side == "G" {
            pair.instance.g()
        } else {
            pair.instance.h()
        };
        render_set(&pair.names, &hg.edges()[id.0])
    };
    let a = format!("{first}#{} {}", f.edges.0 .0, edge(first, f.edges.0));
    let b = format!("{second}#{} {}", f.edges.1 .0, edge(second, f.edges.1));
    match f.reason {
        Reason::NoIntersectionProperty => format!("{a} and {b} are disjoint"),
        _ => format!("{a} is contained in {b}"),
    }
}

#[derive(Serialize)]
struct OffendingEdge {
    side: &'static str,
    index: usize,
    edge: Vec<String>,
}

#[derive(Serialize)]
struct CertificateJson {
    #[serde(rename = "in")]
    included: Option<Vec<String>>,
    #[serde(rename = "ex")]
    excluded: Option<Vec<String>>,
    new_transversal: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    disjunct: Option<Disjunct>,
    #[serde(skip_serializing_if = "Option::is_none")]
    offending_edges: Option<[OffendingEdge; 2]>,
}

#[derive(Serialize)]
struct CheckReport<'a> {
    status: Status,
    reason: Option<Reason>,
    certificate: Option<CertificateJson>,
    stats: &'a SearchStats,
}

fn render_stats(stats: &SearchStats) -> String {
    format!(
        "stats: calls {}, max depth {}, com sizes per level {:?}, label sets tried {}",
        stats.calls, stats.recursion_depth_max, stats.com_sizes_per_level, stats.label_sets_tried
    )
}

fn cmd_check(args: &CheckArgs) -> Outcome {
    let (pair, warnings) = match load_pair(&args.input) {
        Ok(p) => p,
        Err(e) => return Outcome::error(e),
    };
    let names = &pair.names;
    let mut stats = SearchStats::default();
    let verdict = check_dual_with(&pair.instance, &mut stats);
    let code = if verdict.is_dual() { 0 } else { 1 };

    let offending = verdict
        .certificate
        .as_ref()
        .and_then(|c| c.offending_edges)
        .map(|edges| {
            let reason = verdict.reason.expect("failures carry a reason");
            CheckFailure { reason, edges }
        });

    let mut out = String::new();
    if args.json {
        let certificate = verdict.certificate.as_ref().map(|c| {
            let witness = c.witness.as_ref();
            CertificateJson {
                included: witness.map(|w| token_list(names, w.assignment.included())),
                excluded: witness.map(|w| token_list(names, w.assignment.excluded())),
                new_transversal: c.new_transversal.as_ref().map(|t| token_list(names, t)),
                disjunct: witness.map(|w| w.disjunct),
                offending_edges: offending.map(|f| {
                    let (first, second) = side_of(f.reason);
                    let edge = |side: &'static str, id: EdgeId| {
                        let hg = if side == "G" {
                            pair.instance.g()
                        } else {
                            pair.instance.h()
                        };
                        OffendingEdge {
                            side,
                            index: id.0,
                            edge: token_list(names, &hg.edges()[id.0]),
                        }
                    };
                    [edge(first, f.edges.0), edge(second, f.edges.1)]
                }),
            }
        });
        let report = CheckReport {
            status: verdict.status,
            reason: verdict.reason,
            certificate,
            stats: &stats,
        };
        out = serde_json::to_string_pretty(&report).expect("report serializes");
        out.push('\n');
    } else {
        match (verdict.status, verdict.reason) {
            (Status::Dual, None) => out.push_str("dual\n"),
            (Status::Dual, Some(r)) => {
                let _ = writeln!(out, "dual ({})", r.as_str());
            }
            (Status::NotDual, r) => {
                let r = r.expect("not dual carries a reason");
                let _ = writeln!(out, "not dual ({})", r.as_str());
            }
        }
        if let Some(c) = &verdict.certificate {
            if let Some(t) = &c.new_transversal {
                let _ = writeln!(out, "new transversal: {}", render_set(names, t));
            }
            if let Some(w) = &c.witness {
                let _ = writeln!(
                    out,
                    "witness: in {} ex {} ({} side)",
                    render_set(names, w.assignment.included()),
                    render_set(names, w.assignment.excluded()),
                    disjunct_name(w.disjunct)
                );
            }
        }
        if let Some(f) = &offending {
            let _ = writeln!(out, "offending edges: {}", describe_failure(&pair, f));
        }
        out.push_str(&render_stats(&stats));
        out.push('\n');
    }
    Outcome::ok(code, out).with_warnings(&warnings)
}

fn disjunct_name(d: Disjunct) -> &'static str {
    match d {
        Disjunct::Included => "included",
        Disjunct::Excluded => "excluded",
    }
}

fn branch_description(d: Disjunct) -> &'static str {
    match d {
        Disjunct::Included => "included vertices plus frequent vertices",
        Disjunct::Excluded => "complement of excluded vertices plus infrequent vertices",
    }
}

#[derive(Serialize, Default)]
struct FindReport {
    mode: Option<Mode>,
    found: bool,
    new_transversal: Option<Vec<String>>,
    minimized: Option<Vec<String>>,
    branch: Option<Disjunct>,
    #[serde(rename = "in")]
    included: Option<Vec<String>>,
    #[serde(rename = "ex")]
    excluded: Option<Vec<String>>,
    guess: Option<Vec<String>>,
    trial: Option<u64>,
    accepted_without_guess: Option<Reason>,
    stats: SearchStats,
}

fn cmd_find(args: &FindArgs) -> Outcome {
    let (pair, warnings) = match load_pair(&args.input) {
        Ok(p) => p,
        Err(e) => return Outcome::error(e),
    };
    let inst = &pair.instance;
    let names = &pair.names;
    let mut stats = SearchStats::default();
    let mut report = FindReport {
        mode: Some(args.mode),
        ..FindReport::default()
    };

    let mut transversal: Option<VertexSet> = None;
    let fill_hit = |report: &mut FindReport, hit: &EnumHit| {
        report.found = true;
        report.new_transversal = Some(token_list(names, &hit.transversal));
        report.branch = Some(hit.disjunct);
        report.included = Some(token_list(names, hit.augmented.included()));
        report.excluded = Some(token_list(names, hit.augmented.excluded()));
        report.guess = Some(render_guess(names, &hit.guess));
    };

    match args.mode {
        Mode::Recursive => {
            if let Some(f) = check_simple_ip(inst) {
                return Outcome::error(format!(
                    "recursive mode needs simple hypergraphs with the intersection property ({}: {})",
                    f.reason.as_str(),
                    describe_failure(&pair, &f)
                ))
                .with_warnings(&warnings);
            }
            if let Some(w) =
                det_new_transversal(inst, &Assignment::empty(inst.universe()), &mut stats)
            {
                transversal = Some(w.transversal());
                report.found = true;
                report.new_transversal = Some(token_list(names, &w.transversal()));
                report.branch = Some(w.disjunct);
                report.included = Some(token_list(names, w.assignment.included()));
                report.excluded = Some(token_list(names, w.assignment.excluded()));
            }
        }
        Mode::Enum => {
            let opts = EnumOptions {
                max_size: args.max_guess_size,
                jobs: args.jobs as usize,
            };
            match compute_new_transversal_with(inst, opts, &mut stats) {
                Err(Error::IntersectionProperty { g, h }) => {
                    let f = CheckFailure {
                        reason: Reason::NoIntersectionProperty,
                        edges: (g, h),
                    };
                    return Outcome::error(format!(
                        "enum mode needs the intersection property ({})",
                        describe_failure(&pair, &f)
                    ))
                    .with_warnings(&warnings);
                }
                Err(e) => return Outcome::error(e).with_warnings(&warnings),
                Ok(Some(hit)) => {
                    fill_hit(&mut report, &hit);
                    transversal = Some(hit.transversal);
                }
                Ok(None) => {}
            }
        }
        Mode::Random => {
            match nd_check_random_with(
                inst,
                args.trials,
                args.seed,
                args.max_guess_size,
                &mut stats,
            ) {
                NdOutcome::CheckFailed(reason) => {
                    report.found = true;
                    report.accepted_without_guess = Some(reason);
                }
                NdOutcome::Accepted { guess, trial } => {
                    let hit = evaluate_guess(inst, &guess)
                        .expect("drawn guesses are congruent")
                        .expect("accepted guesses are witnesses");
                    fill_hit(&mut report, &hit);
                    report.trial = Some(trial);
                    transversal = Some(hit.transversal);
                }
                NdOutcome::NotFound => {}
            }
        }
    }

    if let Some(t) = &transversal {
        let m = minimize_transversal(inst.g(), t).expect("found sets are transversals");
        report.minimized = Some(token_list(names, &m));
    }
    report.stats = stats;
    let code = if report.found { 1 } else { 0 };

    let out = if args.json {
        let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
        s.push('\n');
        s
    } else {
        render_find(&report, args)
    };
    Outcome::ok(code, out).with_warnings(&warnings)
}

fn render_find(r: &FindReport, args: &FindArgs) -> String {
    let mut out = String::new();
    let braces = |v: &Vec<String>| format!("{{{}}}", v.join(" "));
    if let Some(reason) = r.accepted_without_guess {
        let _ = writeln!(out, "accepted without guessing ({})", reason.as_str());
    } else if let Some(t) = &r.new_transversal {
        let _ = writeln!(out, "new transversal: {}", braces(t));
        if let Some(m) = &r.minimized {
            let _ = writeln!(out, "minimized: {}", braces(m));
        }
        if let Some(d) = r.branch {
            let _ = writeln!(
                out,
                "branch: {} ({})",
                disjunct_name(d),
                branch_description(d)
            );
        }
        if let (Some(i), Some(e)) = (&r.included, &r.excluded) {
            let _ = writeln!(out, "pair: in {} ex {}", braces(i), braces(e));
        }
        if let Some(g) = &r.guess {
            let _ = writeln!(out, "guess: {{{}}}", g.join(", "));
        }
        if let Some(t) = r.trial {
            let _ = writeln!(out, "trial: {t}");
        }
    } else if args.mode == Mode::Random {
        let _ = writeln!(out, "none (no refutation in {} trials)", args.trials);
    } else {
        out.push_str("none\n");
    }
    out.push_str(&render_stats(&r.stats));
    out.push('\n');
    out
}

fn cmd_dualize(args: &DualizeArgs) -> Outcome {
    let text = match read_input(&args.file) {
        Ok(t) => t,
        Err(e) => return Outcome::error(e),
    };
    let parsed = match parse_hypergraph(&text) {
        Ok(p) => p,
        Err(e) => return Outcome::error(format!("{}: {e}", args.file.display())),
    };
    let mut warnings = Vec::new();
    let mut g = parsed.hypergraph;
    if args.minimize_first {
        let m = g.minimize();
        if m.len() != g.len() {
            warnings.push(format!("dropped {} redundant edge(s)", g.len() - m.len()));
        }
        g = m;
    }
    match dualize(&g) {
        Ok(tr) => Outcome::ok(0, emit_hypergraph(&parsed.names, &tr)).with_warnings(&warnings),
        Err(Error::NotSimple {
            contained,
            container,
        }) => Outcome::error(format!(
            "input is not simple: edge #{} {} is contained in edge #{} {}; rerun with --minimize-first",
            contained.0,
            render_set(&parsed.names, &g.edges()[contained.0]),
            container.0,
            render_set(&parsed.names, &g.edges()[container.0]),
        )),
        Err(e) => Outcome::error(e),
    }
}

fn cmd_gen(cmd: &GenCommand) -> Outcome {
    match *cmd {
        GenCommand::Random {
            vertices,
            edges,
            seed,
            dual,
        } => {
            if vertices == 0 || vertices > MAX_VERTICES {
                return Outcome::error(format!("--vertices must be in 1..={MAX_VERTICES}"));
            }
            if edges == 0 {
                return Outcome::error("--edges must be at least 1");
            }
            let g = random_hypergraph(vertices, edges, seed);
            if dual {
                let h = dualize(&g.hypergraph).expect("generated hypergraphs are simple");
                let inst = hgdual::Instance::new(g.hypergraph, h).expect("shared universe");
                Outcome::ok(0, emit_pair(&g.names, &inst))
            } else {
                Outcome::ok(0, emit_hypergraph(&g.names, &g.hypergraph))
            }
        }
        GenCommand::ExpFamily { size } => {
            if size == 0 || 2 * size > MAX_VERTICES {
                return Outcome::error(format!("--size must be in 1..={}", MAX_VERTICES / 2));
            }
            let p = exp_family_pair(size);
            Outcome::ok(0, emit_pair(&p.names, &p.instance))
        }
        GenCommand::FromDnf { ref file } => {
            let text = match read_input(file) {
                Ok(t) => t,
                Err(e) => return Outcome::error(e),
            };
            match parse_dnf(&text) {
                Ok((hg, warnings)) => Outcome::ok(0, emit_hypergraph(&hg.names, &hg.hypergraph))
                    .with_warnings(&warnings),
                Err(e) => Outcome::error(format!("{}: {e}", file.display())),
            }
        }
    }
}
