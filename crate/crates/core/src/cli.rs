//! The `fhg` command-line front end.
//!
//! Subcommands: `solve`, `verify`, `gadget`, `reduce`, `walk`, `enumerate`,
//! `stats`. Reports are line-oriented `key: value` text. Exit codes:
//! 0 success/stable, 1 unstable (or expectation violated), 2 unknown under
//! a budget, 3 usage or parse errors.
//!
//! `--game -` reads the game from standard input, so gadgets pipe straight
//! into the other commands. `FHG_MAX_NODES` supplies a default node budget
//! when `--max-nodes` is not given.

use crate::instances;
use crate::io::{self, ParsedGame};
use crate::model::{connected_components, girth, Game, HedonicGame, Partition};
use crate::rational::format_rat;
use crate::solvers;
use crate::stability::{
    self, BlockKind, BlockingCertificate, SearchBudget, SearchOutcome, Verdict,
};
use crate::{Error, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::io::Read as _;
use std::io::Write;

#[derive(Parser)]
#[command(name = "fhg", version, about = "Fractional hedonic games: solvers and stability checks")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a stable partition for a tractable graph class.
    Solve(SolveArgs),
    /// Check a partition for core or strict-core stability.
    Verify(VerifyArgs),
    /// Emit a named benchmark game.
    Gadget(GadgetArgs),
    /// Transform instances: subsidy elimination, grid-clique encoding,
    /// clique verification gadget.
    Reduce(ReduceArgs),
    /// Repeatedly form a blocking coalition and report the trajectory.
    Walk(WalkArgs),
    /// Exhaustively scan all partitions for stable ones.
    Enumerate(EnumerateArgs),
    /// Summarise a game file.
    Stats(StatsArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SolverClass {
    Degree2,
    Forest,
    BakersMillers,
    Matching,
    StarPacking,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Concept {
    Core,
    StrictCore,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Expectation {
    Stable,
    Unstable,
}

#[derive(Args)]
struct SolveArgs {
    /// Which constructive solver to run.
    #[arg(long, value_enum)]
    class: SolverClass,
    /// Game file ('-' for stdin).
    #[arg(long)]
    game: String,
    /// Run the star-packing search even when the girth precondition fails
    /// (no stability claim attaches to the output).
    #[arg(long)]
    force: bool,
    /// Skip the post-hoc stability verification of the output.
    #[arg(long)]
    no_verify: bool,
    /// Write the partition here instead of stdout.
    #[arg(long)]
    output: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Game file ('-' for stdin).
    #[arg(long)]
    game: String,
    /// Partition file.
    #[arg(long)]
    partition: String,
    #[arg(long, value_enum, default_value = "core")]
    concept: Concept,
    /// Restrict the search to connected coalitions (simple symmetric only).
    #[arg(long)]
    connected: bool,
    /// Largest coalition size to consider.
    #[arg(long)]
    max_size: Option<usize>,
    /// Node budget for the search (default from FHG_MAX_NODES).
    #[arg(long)]
    max_nodes: Option<u64>,
    /// Worker threads for the connected search.
    #[arg(long, default_value = "1")]
    threads: usize,
    /// Exit nonzero when the verdict differs from this expectation.
    #[arg(long, value_enum)]
    expect: Option<Expectation>,
    /// Re-verify a coalition (one line of player labels) as a certificate
    /// against the partition instead of searching.
    #[arg(long)]
    check_certificate: Option<String>,
}

#[derive(Args)]
struct GadgetArgs {
    /// Gadget name, or 'bakers-millers:<s1,s2,...>' for a complete
    /// multipartite game with the given type sizes.
    name: String,
    /// Write the game here instead of stdout.
    #[arg(long)]
    output: Option<String>,
    /// Write the gadget's certified partition here, when it has one.
    #[arg(long)]
    partition_output: Option<String>,
}

#[derive(Args)]
struct ReduceArgs {
    #[command(subcommand)]
    which: ReduceCommand,
}

#[derive(Subcommand)]
enum ReduceCommand {
    /// Replace singleton subsidies by attached cliques.
    Supported {
        /// Subsidised game file ('-' for stdin).
        #[arg(long)]
        game: String,
        #[arg(long)]
        output: Option<String>,
        /// Translate a partition through the reduction instead of emitting
        /// the game.
        #[arg(long)]
        map_partition: Option<String>,
        /// Direction of the partition translation.
        #[arg(long, default_value = "forward")]
        direction: MapDirection,
    },
    /// Encode a grid-clique instance as a subsidised game.
    MaxminClique {
        /// Instance file ('-' for stdin).
        #[arg(long)]
        instance: String,
        #[arg(long)]
        output: Option<String>,
    },
    /// Subsidise every vertex at level k−1 so that all-singletons is core
    /// stable exactly when the graph has no k-clique.
    Clique {
        /// Graph file ('-' for stdin).
        #[arg(long)]
        game: String,
        /// Clique size target k (at least 3).
        #[arg(long)]
        target: usize,
        #[arg(long)]
        output: Option<String>,
        /// Write the all-singletons candidate partition here.
        #[arg(long)]
        partition_output: Option<String>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapDirection {
    Forward,
    Backward,
}

#[derive(Args)]
struct WalkArgs {
    /// Game file ('-' for stdin).
    #[arg(long)]
    game: String,
    /// Starting partition file; defaults to all singletons.
    #[arg(long)]
    start: Option<String>,
    /// Run this many random starts instead of a fixed one.
    #[arg(long)]
    random_starts: Option<usize>,
    /// Seed for random starts.
    #[arg(long, default_value = "0")]
    seed: u64,
    #[arg(long, default_value = "1000")]
    max_steps: usize,
    /// Node budget per step (default from FHG_MAX_NODES, else 4000).
    #[arg(long)]
    max_nodes: Option<u64>,
    /// Largest coalition size per deviation.
    #[arg(long)]
    max_size: Option<usize>,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Game file ('-' for stdin).
    #[arg(long)]
    game: String,
    #[arg(long, value_enum, default_value = "core")]
    concept: Concept,
    /// Refusal bound on the player count.
    #[arg(long, default_value_t = stability::ENUMERATION_BOUND)]
    bound: usize,
    /// List every stable partition instead of stopping at the first.
    #[arg(long)]
    all: bool,
}

#[derive(Args)]
struct StatsArgs {
    /// Game file ('-' for stdin).
    #[arg(long)]
    game: String,
}

/// Parses `argv` and runs it, writing reports to `out` and diagnostics to
/// `err`. Returns the process exit code.
pub fn run<W: Write, E: Write>(argv: &[String], out: &mut W, err: &mut E) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own help/version output.
            let _ = write!(err, "{e}");
            return if e.use_stderr() { 3 } else { 0 };
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            3
        }
    }
}

fn dispatch<W: Write>(cli: Cli, out: &mut W) -> Result<i32> {
    match cli.command {
        Command::Solve(args) => cmd_solve(args, out),
        Command::Verify(args) => cmd_verify(args, out),
        Command::Gadget(args) => cmd_gadget(args, out),
        Command::Reduce(args) => cmd_reduce(args, out),
        Command::Walk(args) => cmd_walk(args, out),
        Command::Enumerate(args) => cmd_enumerate(args, out),
        Command::Stats(args) => cmd_stats(args, out),
    }
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Unsupported(format!("cannot read stdin: {e}")))?;
        return Ok(buf);
    }
    std::fs::read_to_string(path)
        .map_err(|e| Error::Unsupported(format!("cannot read '{path}': {e}")))
}

fn write_output<W: Write>(
    target: &Option<String>,
    content: &str,
    out: &mut W,
) -> Result<()> {
    match target {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| Error::Unsupported(format!("cannot write '{path}': {e}"))),
        None => {
            let _ = write!(out, "{content}");
            Ok(())
        }
    }
}

fn load_game(path: &str) -> Result<ParsedGame> {
    io::parse_game(&read_input(path)?)
}

fn load_plain_game(path: &str) -> Result<Game> {
    match load_game(path)? {
        ParsedGame::Plain(g) => Ok(g),
        ParsedGame::Supported(_) => Err(Error::Unsupported(
            "this command needs a game without subsidies".into(),
        )),
    }
}

fn env_max_nodes() -> Option<u64> {
    std::env::var("FHG_MAX_NODES").ok()?.parse().ok()
}

fn certificate_lines(cert: &BlockingCertificate) -> String {
    let labels: Vec<String> = cert.coalition.iter().map(|&i| (i + 1).to_string()).collect();
    let mut s = format!("coalition: {}\n", labels.join(" "));
    s.push_str(&format!("min-delta: {}\n", format_rat(&cert.min_delta())));
    for d in &cert.member_deltas {
        s.push_str(&format!(
            "member: {} {} -> {}\n",
            d.player + 1,
            format_rat(&d.current),
            format_rat(&d.proposed),
        ));
    }
    s
}

fn cmd_solve<W: Write>(args: SolveArgs, out: &mut W) -> Result<i32> {
    let game = load_plain_game(&args.game)?;
    let (partition, note) = match args.class {
        SolverClass::Degree2 => (solvers::solve_degree2(&game)?, None),
        SolverClass::Forest => (solvers::solve_forest(&game)?, None),
        SolverClass::Matching => (solvers::solve_bipartite_matching(&game)?, None),
        SolverClass::BakersMillers => {
            let types = solvers::type_space_from_game(&game)?;
            (solvers::solve_bakers_millers_finest(&types), None)
        }
        SolverClass::StarPacking => {
            let run = if args.force {
                solvers::solve_star_packing_forced(&game)?
            } else {
                solvers::solve_star_packing(&game)?
            };
            let note = format!("moves: {}", run.moves.len());
            (run.partition, Some(note))
        }
    };
    write_output(&args.output, &io::serialize_partition(&partition), out)?;
    if let Some(note) = note {
        let _ = writeln!(out, "{note}");
    }
    if !args.no_verify {
        if args.class == SolverClass::BakersMillers {
            let types = solvers::type_space_from_game(&game)?;
            let ok = solvers::check_bakers_millers_strict_core(&types, &partition);
            let _ = writeln!(out, "strict-core: {}", if ok { "stable" } else { "unstable" });
            return Ok(if ok { 0 } else { 1 });
        }
        let verdict = stability::is_core_stable(
            &game,
            &partition,
            &stability::complete_budget(&game),
        )?;
        match verdict {
            Verdict::Stable => {
                let _ = writeln!(out, "core: stable");
            }
            Verdict::Unstable(cert) => {
                let _ = writeln!(out, "core: unstable");
                let _ = write!(out, "{}", certificate_lines(&cert));
                return Ok(1);
            }
            Verdict::Unknown => {
                let _ = writeln!(out, "core: unknown");
                return Ok(2);
            }
        }
    }
    Ok(0)
}

fn budget_from(connected: bool, max_size: Option<usize>, max_nodes: Option<u64>) -> SearchBudget {
    SearchBudget {
        max_coalition_size: max_size,
        max_nodes: max_nodes.or_else(env_max_nodes),
        connected_only: connected,
    }
}

fn cmd_verify<W: Write>(args: VerifyArgs, out: &mut W) -> Result<i32> {
    let parsed = load_game(&args.game)?;
    let n = parsed.player_count();
    let partition = io::parse_partition(&read_input(&args.partition)?, n)?;
    let kind = match args.concept {
        Concept::Core => BlockKind::Strong,
        Concept::StrictCore => BlockKind::Weak,
    };

    if let Some(cert_path) = &args.check_certificate {
        // A certificate file holds the blocking coalition on its first line.
        let coalition = first_coalition_line(&read_input(cert_path)?, n)?;
        return check_certificate(&parsed, &partition, kind, coalition, out);
    }

    let budget = budget_from(args.connected, args.max_size, args.max_nodes);
    let outcome = match &parsed {
        ParsedGame::Plain(g) => {
            stability::find_blocking_threaded(g, &partition, kind, &budget, args.threads)?
        }
        ParsedGame::Supported(sg) => {
            stability::find_blocking_threaded(sg, &partition, kind, &budget, args.threads)?
        }
    };
    let concept = match args.concept {
        Concept::Core => "core",
        Concept::StrictCore => "strict-core",
    };
    let _ = writeln!(out, "players: {n}");
    let _ = writeln!(out, "concept: {concept}");
    let search_desc = if budget.connected_only {
        match budget.max_coalition_size {
            Some(k) => format!("connected, size <= {k}"),
            None => "connected".to_string(),
        }
    } else {
        "all-subsets".to_string()
    };
    let (verdict, code) = match outcome {
        SearchOutcome::Found(cert) => {
            let _ = writeln!(out, "verdict: unstable");
            let _ = write!(out, "{}", certificate_lines(&cert));
            ("unstable", 1)
        }
        SearchOutcome::NoneFound => {
            let _ = writeln!(out, "verdict: stable ({search_desc} search, complete)");
            ("stable", 0)
        }
        SearchOutcome::BudgetExhausted => {
            let _ = writeln!(out, "verdict: unknown (budget exhausted)");
            ("unknown", 2)
        }
    };
    if let Some(expect) = args.expect {
        let expected = match expect {
            Expectation::Stable => "stable",
            Expectation::Unstable => "unstable",
        };
        if verdict == "unknown" {
            return Ok(2);
        }
        return Ok(if verdict == expected { 0 } else { 1 });
    }
    Ok(code)
}

fn first_coalition_line(text: &str, n: usize) -> Result<Vec<usize>> {
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut coalition = Vec::new();
        for field in line.split_whitespace() {
            let label: usize = field.parse().map_err(|_| Error::Parse {
                line: 1,
                msg: format!("bad player label '{field}'"),
            })?;
            if label == 0 || label > n {
                return Err(Error::Parse {
                    line: 1,
                    msg: format!("player label {label} outside 1..={n}"),
                });
            }
            coalition.push(label - 1);
        }
        return Ok(coalition);
    }
    Err(Error::Parse {
        line: 1,
        msg: "certificate file is empty".into(),
    })
}

fn check_certificate<W: Write>(
    parsed: &ParsedGame,
    partition: &Partition,
    kind: BlockKind,
    coalition: Vec<usize>,
    out: &mut W,
) -> Result<i32> {
    fn build<G: HedonicGame>(
        game: &G,
        partition: &Partition,
        kind: BlockKind,
        coalition: Vec<usize>,
    ) -> (BlockingCertificate, bool) {
        let cert = BlockingCertificate {
            member_deltas: coalition
                .iter()
                .map(|&i| stability::MemberDelta {
                    player: i,
                    current: game.coalition_utility(i, partition.coalition_of(i)),
                    proposed: game.coalition_utility(i, &coalition),
                })
                .collect(),
            coalition,
            kind,
        };
        let ok = stability::verify_certificate(game, partition, &cert).is_ok();
        (cert, ok)
    }
    let (cert, ok) = match parsed {
        ParsedGame::Plain(g) => build(g, partition, kind, coalition),
        ParsedGame::Supported(sg) => build(sg, partition, kind, coalition),
    };
    if ok {
        let _ = writeln!(out, "certificate: confirmed");
        let _ = write!(out, "{}", certificate_lines(&cert));
        Ok(1)
    } else {
        let _ = writeln!(out, "certificate: rejected");
        Ok(3)
    }
}

fn cmd_gadget<W: Write>(args: GadgetArgs, out: &mut W) -> Result<i32> {
    if let Some(sizes) = args.name.strip_prefix("bakers-millers:") {
        let sizes: Vec<usize> = sizes
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Unsupported(format!("bad type size '{s}'")))
            })
            .collect::<Result<_>>()?;
        let types = crate::model::TypeSpace::from_sizes(&sizes)?;
        let game = instances::bakers_millers_graph(&types);
        write_output(&args.output, &io::serialize_game(&game), out)?;
        return Ok(0);
    }
    let gadget = instances::gadget(&args.name)?;
    write_output(&args.output, &io::serialize_game(&gadget.game), out)?;
    if let Some(target) = &args.partition_output {
        let Some(p) = &gadget.certified_partition else {
            return Err(Error::Unsupported(format!(
                "gadget '{}' has no certified partition",
                args.name
            )));
        };
        std::fs::write(target, io::serialize_partition(p))
            .map_err(|e| Error::Unsupported(format!("cannot write '{target}': {e}")))?;
    }
    Ok(0)
}

fn cmd_reduce<W: Write>(args: ReduceArgs, out: &mut W) -> Result<i32> {
    match args.which {
        ReduceCommand::Supported {
            game,
            output,
            map_partition,
            direction,
        } => {
            let ParsedGame::Supported(sg) = load_game(&game)? else {
                return Err(Error::Unsupported(
                    "subsidy elimination needs a game with subsidy records".into(),
                ));
            };
            let reduction = instances::reduce_supported(&sg)?;
            if let Some(partition_path) = map_partition {
                let text = read_input(&partition_path)?;
                let mapped = match direction {
                    MapDirection::Forward => {
                        let p = io::parse_partition(&text, sg.player_count())?;
                        reduction.forward(&p)?
                    }
                    MapDirection::Backward => {
                        let p = io::parse_partition(&text, reduction.game.player_count())?;
                        reduction.backward(&p)?
                    }
                };
                write_output(&output, &io::serialize_partition(&mapped), out)?;
            } else {
                write_output(&output, &io::serialize_game(&reduction.game), out)?;
            }
            Ok(0)
        }
        ReduceCommand::MaxminClique { instance, output } => {
            let inst = io::parse_grid_clique(&read_input(&instance)?)?;
            let (sg, layout) = instances::reduce_maxmin_clique(&inst)?;
            write_output(&output, &io::serialize_supported_game(&sg), out)?;
            let _ = writeln!(out, "players: {}", layout.total_players);
            let _ = writeln!(out, "guards-per-cell: {}", layout.guard_count);
            let _ = writeln!(out, "clique-target: {}", inst.target());
            Ok(0)
        }
        ReduceCommand::Clique {
            game,
            target,
            output,
            partition_output,
        } => {
            let graph = load_plain_game(&game)?;
            let (sg, singletons) = instances::clique_verification_gadget(&graph, target)?;
            write_output(&output, &io::serialize_supported_game(&sg), out)?;
            if let Some(path) = partition_output {
                std::fs::write(&path, io::serialize_partition(&singletons))
                    .map_err(|e| Error::Unsupported(format!("cannot write '{path}': {e}")))?;
            }
            Ok(0)
        }
    }
}

fn random_partition(n: usize, rng: &mut ChaCha8Rng) -> Partition {
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); n];
    for player in 0..n {
        buckets[rng.random_range(0..n)].push(player);
    }
    buckets.retain(|b| !b.is_empty());
    Partition::new(n, buckets).expect("bucket assignment covers everyone")
}

fn cmd_walk<W: Write>(args: WalkArgs, out: &mut W) -> Result<i32> {
    let parsed = load_game(&args.game)?;
    let n = parsed.player_count();
    let budget = SearchBudget {
        max_coalition_size: args.max_size,
        max_nodes: args.max_nodes.or_else(env_max_nodes).or(Some(4000)),
        connected_only: parsed.base().is_simple() && parsed.base().is_symmetric(),
    };
    let starts: Vec<Partition> = if let Some(count) = args.random_starts {
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
        (0..count).map(|_| random_partition(n, &mut rng)).collect()
    } else if let Some(path) = &args.start {
        vec![io::parse_partition(&read_input(path)?, n)?]
    } else {
        vec![Partition::singletons(n)]
    };
    let mut all_converged = true;
    for (i, start) in starts.iter().enumerate() {
        let walk = match &parsed {
            ParsedGame::Plain(g) => stability::deviation_walk(g, start, args.max_steps, &budget)?,
            ParsedGame::Supported(sg) => {
                stability::deviation_walk(sg, start, args.max_steps, &budget)?
            }
        };
        let end = match walk.end {
            stability::WalkEnd::Converged => "converged",
            stability::WalkEnd::Cycled => "cycled",
            stability::WalkEnd::StepLimit => "step-limit",
            stability::WalkEnd::SearchBudget => "search-budget",
        };
        let _ = writeln!(out, "walk: {i} end: {end} steps: {}", walk.steps.len());
        if walk.converged() {
            let _ = write!(out, "{}", io::serialize_partition(&walk.partition));
        } else {
            all_converged = false;
        }
    }
    Ok(if all_converged { 0 } else { 1 })
}

fn cmd_enumerate<W: Write>(args: EnumerateArgs, out: &mut W) -> Result<i32> {
    let parsed = load_game(&args.game)?;
    let kind = match args.concept {
        Concept::Core => BlockKind::Strong,
        Concept::StrictCore => BlockKind::Weak,
    };
    fn scan<G: HedonicGame, W: Write>(
        game: &G,
        kind: BlockKind,
        bound: usize,
        all: bool,
        out: &mut W,
    ) -> Result<i32> {
        if all {
            let stable = stability::enumerate_stable_partitions(game, kind, bound)?;
            let _ = writeln!(out, "stable-count: {}", stable.len());
            for p in &stable {
                let _ = writeln!(out, "stable: {}", growth_text(p));
            }
            Ok(if stable.is_empty() { 1 } else { 0 })
        } else {
            let budget = stability::complete_budget(game);
            for p in stability::enumerate_partitions_with_bound(game.player_count(), bound)? {
                if matches!(
                    stability::find_blocking(game, &p, kind, &budget)?,
                    SearchOutcome::NoneFound
                ) {
                    let _ = writeln!(out, "result: nonempty");
                    let _ = write!(out, "{}", io::serialize_partition(&p));
                    return Ok(0);
                }
            }
            let _ = writeln!(out, "result: empty");
            Ok(1)
        }
    }
    match &parsed {
        ParsedGame::Plain(g) => scan(g, kind, args.bound, args.all, out),
        ParsedGame::Supported(sg) => scan(sg, kind, args.bound, args.all, out),
    }
}

fn growth_text(p: &Partition) -> String {
    p.coalitions()
        .iter()
        .map(|c| {
            c.iter()
                .map(|&i| (i + 1).to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join(" | ")
}

fn cmd_stats<W: Write>(args: StatsArgs, out: &mut W) -> Result<i32> {
    let parsed = load_game(&args.game)?;
    let game = parsed.base();
    let n = game.player_count();
    let _ = writeln!(out, "players: {n}");
    let _ = writeln!(out, "simple: {}", game.is_simple());
    let _ = writeln!(out, "symmetric: {}", game.is_symmetric());
    if game.is_symmetric() {
        let _ = writeln!(out, "edges: {}", game.edges().len());
        let comps = connected_components(game)?;
        let _ = writeln!(out, "components: {}", comps.len());
        let degrees: Vec<usize> = (0..n).map(|v| game.degree(v)).collect();
        let _ = writeln!(out, "max-degree: {}", degrees.iter().max().unwrap());
        let _ = writeln!(out, "min-degree: {}", degrees.iter().min().unwrap());
        if let Some(k) = solvers::regularity(game) {
            let _ = writeln!(out, "regular: {k}");
        }
    }
    if game.is_simple() && game.is_symmetric() {
        match girth(game)? {
            Some(g) => {
                let _ = writeln!(out, "girth: {g}");
            }
            None => {
                let _ = writeln!(out, "girth: infinite");
            }
        }
    }
    if let ParsedGame::Supported(sg) = &parsed {
        let _ = writeln!(out, "subsidised-players: {}", sg.subsidies().len());
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_cli(args: &[&str]) -> (i32, String, String) {
        let argv: Vec<String> = std::iter::once("fhg".to_string())
            .chain(args.iter().map(|s| s.to_string()))
            .collect();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(&argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn gadget_stats_pipeline() {
        let dir = std::env::temp_dir().join("fhg-cli-test-gadget");
        std::fs::create_dir_all(&dir).unwrap();
        let game_path = dir.join("g.fhg");
        let (code, _, _) = run_cli(&[
            "gadget",
            "two-triangles-6",
            "--output",
            game_path.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
        let (code, out, _) = run_cli(&["stats", "--game", game_path.to_str().unwrap()]);
        assert_eq!(code, 0);
        assert!(out.contains("players: 6"));
        assert!(out.contains("edges: 9"));
        assert!(out.contains("girth: 3"));
    }

    #[test]
    fn unknown_gadget_fails_with_catalogue() {
        let (code, _, err) = run_cli(&["gadget", "mystery"]);
        assert_eq!(code, 3);
        assert!(err.contains("two-triangles-6"));
    }

    #[test]
    fn verify_reports_instability_with_exit_code_one() {
        let dir = std::env::temp_dir().join("fhg-cli-test-verify");
        std::fs::create_dir_all(&dir).unwrap();
        let game_path = dir.join("c5.fhg");
        let part_path = dir.join("grand.part");
        run_cli(&["gadget", "c5", "--output", game_path.to_str().unwrap()]);
        std::fs::write(&part_path, "1 2 3 4 5\n").unwrap();
        let (code, out, _) = run_cli(&[
            "verify",
            "--game",
            game_path.to_str().unwrap(),
            "--partition",
            part_path.to_str().unwrap(),
            "--concept",
            "strict-core",
        ]);
        assert_eq!(code, 1);
        assert!(out.contains("verdict: unstable"));
        assert!(out.contains("coalition:"));
    }

    #[test]
    fn outputs_are_deterministic() {
        let (c1, out1, _) = run_cli(&["gadget", "empty-core-40"]);
        let (c2, out2, _) = run_cli(&["gadget", "empty-core-40"]);
        assert_eq!(c1, 0);
        assert_eq!(c1, c2);
        assert_eq!(out1, out2);
    }

    #[test]
    fn solve_star_packing_reports_stability() {
        let dir = std::env::temp_dir().join("fhg-cli-test-solve");
        std::fs::create_dir_all(&dir).unwrap();
        let game_path = dir.join("path.fhg");
        std::fs::write(&game_path, "fhg 4 undirected simple\n1 2\n2 3\n3 4\n").unwrap();
        let (code, out, _) = run_cli(&[
            "solve",
            "--class",
            "star-packing",
            "--game",
            game_path.to_str().unwrap(),
        ]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("core: stable"));
    }

    #[test]
    fn enumerate_confirms_emptiness() {
        let dir = std::env::temp_dir().join("fhg-cli-test-enum");
        std::fs::create_dir_all(&dir).unwrap();
        let game_path = dir.join("d5.fhg");
        run_cli(&["gadget", "digraph-5", "--output", game_path.to_str().unwrap()]);
        let (code, out, _) = run_cli(&["enumerate", "--game", game_path.to_str().unwrap()]);
        assert_eq!(code, 1);
        assert!(out.contains("result: empty"));
    }
}
