//! `rlida` command-line front end.
//!
//! Exit codes: 0 success, 1 other failure, 2 usage error, 3 unreadable or
//! malformed input, 4 instance has no solution, 5 node or time cap exceeded,
//! 6 algorithms disagree on an optimal cost.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rlida::bench::{
    emit_csv, emit_table, run_suite, thousands, BenchConfig, BenchError, BenchInstance, EmitFormat,
    TimingSpec,
};
use rlida::crp::{parse_crp_file, random_crp_instance, write_crp_file, CrpDomain};
use rlida::metareason::{bound_alpha_star, bound_b_of_alpha, bound_b_star, DecisionPolicy};
use rlida::search::{ida_star, Algorithm, Domain, SearchConfig, SearchError, DEFAULT_MAX_DEPTH};
use rlida::tiles::{
    parse_tile_file, random_walk_instance, write_tile_file, GoalLayout, TileCostModel, TileFile,
    TileInstance, TilePuzzle,
};

mod exit {
    pub const OTHER: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const INPUT: u8 = 3;
    pub const UNSOLVABLE: u8 = 4;
    pub const CAPPED: u8 = 5;
    pub const MISMATCH: u8 = 6;
}

#[derive(Parser)]
#[command(
    name = "rlida",
    version,
    about = "IDA*, Lazy IDA* and Rational Lazy IDA* solver"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve every instance in a file.
    Solve(SolveArgs),
    /// Run several algorithms over instance files and tabulate the counters.
    Bench(BenchArgs),
    /// Generate random instances.
    Gen(GenArgs),
    /// Print the helpfulness bound over a grid of parameters.
    BoundCheck(BoundArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum DomainKind {
    Tiles,
    Crp,
}

#[derive(Clone, Copy, ValueEnum)]
enum GoalArg {
    BlankFirst,
    BlankLast,
}

impl From<GoalArg> for GoalLayout {
    fn from(g: GoalArg) -> Self {
        match g {
            GoalArg::BlankFirst => GoalLayout::BlankFirst,
            GoalArg::BlankLast => GoalLayout::BlankLast,
        }
    }
}

#[derive(Args, Clone)]
struct DomainArgs {
    #[arg(long, value_enum, default_value = "tiles")]
    domain: DomainKind,
    /// Board rows, when the file does not say.
    #[arg(long)]
    rows: Option<usize>,
    /// Board columns, when the file does not say.
    #[arg(long)]
    cols: Option<usize>,
    /// Moving tile t costs t.
    #[arg(long)]
    weighted: bool,
    /// Goal layout, when the file does not say.
    #[arg(long, value_enum, default_value = "blank-first")]
    goal: GoalArg,
}

#[derive(Args, Clone)]
struct LimitArgs {
    /// Where the decision rule gets t1, t2, te: calibrate | fixed:t1,t2,te | ema:decay.
    #[arg(long, default_value = "calibrate")]
    timing: TimingSpec,
    #[arg(long)]
    node_cap: Option<u64>,
    #[arg(long)]
    time_cap_s: Option<f64>,
    /// Seed for timing calibration.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct SolveArgs {
    instance: PathBuf,
    #[command(flatten)]
    domain: DomainArgs,
    /// ida-h1 | ida-h2 | ida-max | lida | rlida:<policy>
    #[arg(long, default_value = "lida")]
    algorithm: Algorithm,
    /// Shorthand for --algorithm rlida:<policy>: always | never | const:<p>[:simplified] | adaptive[:<cap>][:simplified]
    #[arg(long)]
    policy: Option<DecisionPolicy>,
    #[command(flatten)]
    limits: LimitArgs,
    /// Print the moves of each solution.
    #[arg(long)]
    show_moves: bool,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(required = true)]
    instances: Vec<PathBuf>,
    #[command(flatten)]
    domain: DomainArgs,
    /// Comma-separated algorithms.
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "ida-h1,ida-h2,lida,rlida:const:0.3"
    )]
    algorithms: Vec<Algorithm>,
    #[command(flatten)]
    limits: LimitArgs,
    #[arg(long, default_value_t = 1)]
    reps: usize,
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long, default_value = "markdown")]
    format: EmitFormat,
    /// Write the table here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write per-instance CSV here.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum, default_value = "tiles")]
    domain: DomainKind,
    #[arg(long, default_value_t = 4)]
    rows: usize,
    #[arg(long, default_value_t = 4)]
    cols: usize,
    #[arg(long, value_enum, default_value = "blank-first")]
    goal: GoalArg,
    #[arg(long, default_value_t = 45)]
    steps_min: usize,
    #[arg(long, default_value_t = 80)]
    steps_max: usize,
    #[arg(long, default_value_t = 3)]
    stacks: usize,
    #[arg(long, default_value_t = 4)]
    tiers: usize,
    #[arg(long, default_value_t = 8)]
    containers: usize,
    #[arg(long, default_value_t = 10)]
    count: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BoundArgs {
    /// Sample counts, comma-separated.
    #[arg(long, value_delimiter = ',', default_values_t = [1u64, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024])]
    n: Vec<u64>,
    /// Helpfulness levels, comma-separated.
    #[arg(long, value_delimiter = ',', default_values_t = [0.5, 1.0])]
    l: Vec<f64>,
    /// Sample means, comma-separated.
    #[arg(long = "mean-x", value_delimiter = ',', default_values_t = [0.0, 0.1])]
    mean_x: Vec<f64>,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

type CliResult = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::new(exit::INPUT, format!("{}: {e}", path.display())))
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| Failure::new(exit::OTHER, format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn geometry(args: &DomainArgs) -> Option<(usize, usize)> {
    args.rows.zip(args.cols)
}

fn costs(args: &DomainArgs) -> TileCostModel {
    if args.weighted {
        TileCostModel::Weighted
    } else {
        TileCostModel::Unit
    }
}

fn load_tiles(path: &Path, args: &DomainArgs) -> Result<Vec<BenchInstance<TilePuzzle>>, Failure> {
    let text = read(path)?;
    let file = parse_tile_file(&text, geometry(args), args.goal.into())
        .map_err(|e| Failure::new(exit::INPUT, format!("{}: {e}", path.display())))?;
    let stem = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("instance");
    file.instances
        .iter()
        .enumerate()
        .map(|(i, inst)| {
            let domain = TilePuzzle::new(inst.board, file.layout, costs(args)).map_err(|e| {
                Failure::new(
                    exit::INPUT,
                    format!("{}:{}: {e}", path.display(), inst.line),
                )
            })?;
            Ok(BenchInstance {
                id: format!("{stem}:{}", i + 1),
                seed: inst.seed,
                domain,
            })
        })
        .collect()
}

fn load_crp(path: &Path) -> Result<Vec<BenchInstance<CrpDomain>>, Failure> {
    let text = read(path)?;
    let instances = parse_crp_file(&text)
        .map_err(|e| Failure::new(exit::INPUT, format!("{}: {e}", path.display())))?;
    let stem = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("instance");
    Ok(instances
        .iter()
        .enumerate()
        .map(|(i, inst)| BenchInstance {
            id: format!("{stem}:{}", i + 1),
            seed: inst.seed,
            domain: CrpDomain::new(inst),
        })
        .collect())
}

fn search_config<D: Domain>(
    domain: &D,
    algorithm: &Algorithm,
    limits: &LimitArgs,
) -> Result<SearchConfig, Failure> {
    let time_cap = match limits.time_cap_s {
        Some(s) if s.is_finite() && s > 0.0 => Some(Duration::from_secs_f64(s)),
        Some(_) => return Err(Failure::new(exit::USAGE, "--time-cap-s must be positive")),
        None => None,
    };
    if limits.node_cap == Some(0) {
        return Err(Failure::new(exit::USAGE, "--node-cap must be positive"));
    }
    let uses_timing = matches!(algorithm, Algorithm::Lazy(p) if p.uses_timing());
    let timing = if uses_timing {
        limits.timing.resolve(domain, limits.seed)
    } else {
        Default::default()
    };
    Ok(SearchConfig {
        node_cap: limits.node_cap,
        time_cap,
        max_depth: DEFAULT_MAX_DEPTH,
        timing,
    })
}

fn solve_all<D: Domain>(
    instances: &[BenchInstance<D>],
    algorithm: &Algorithm,
    args: &SolveArgs,
    show: impl Fn(&D::Move) -> String,
) -> CliResult {
    let mut code = 0;
    let mut out = String::new();
    for inst in instances {
        let config = search_config(&inst.domain, algorithm, &args.limits)?;
        let label = algorithm.label(inst.domain.heuristic_names());
        let (stats, status) = match ida_star(&inst.domain, algorithm, &config) {
            Ok(sol) => {
                let _ = writeln!(out, "{}: cost {} ({label})", inst.id, sol.cost);
                if args.show_moves {
                    let moves: Vec<String> = sol.path.iter().map(&show).collect();
                    let _ = writeln!(out, "  moves: {}", moves.join(" "));
                }
                (sol.stats, 0)
            }
            Err(e) => {
                let status = match e {
                    SearchError::Unsolvable { .. } => exit::UNSOLVABLE,
                    SearchError::LimitExceeded { .. } => exit::CAPPED,
                };
                let _ = writeln!(out, "{}: {e} ({label})", inst.id);
                (e.stats().clone(), status)
            }
        };
        let _ = writeln!(
            out,
            "  time {:.4}s  generated {}  h2 total {}  h2 helpful {}  iterations {}",
            stats.wall_time.as_secs_f64(),
            thousands(stats.generated),
            thousands(stats.h2_evals),
            thousands(stats.h2_helpful),
            stats.iterations
        );
        code = code.max(status);
    }
    print!("{out}");
    Ok(code)
}

fn cmd_solve(args: SolveArgs) -> CliResult {
    let algorithm = match args.policy {
        Some(p) => Algorithm::Lazy(p),
        None => args.algorithm,
    };
    match args.domain.domain {
        DomainKind::Tiles => {
            let instances = load_tiles(&args.instance, &args.domain)?;
            solve_all(&instances, &algorithm, &args, |m| m.letter().to_string())
        }
        DomainKind::Crp => {
            let instances = load_crp(&args.instance)?;
            solve_all(&instances, &algorithm, &args, |m| m.to_string())
        }
    }
}

fn bench<D: Domain + Sync>(instances: Vec<BenchInstance<D>>, args: &BenchArgs) -> CliResult {
    let time_cap = match args.limits.time_cap_s {
        Some(s) if s.is_finite() && s > 0.0 => Some(Duration::from_secs_f64(s)),
        Some(_) => return Err(Failure::new(exit::USAGE, "--time-cap-s must be positive")),
        None => None,
    };
    let config = BenchConfig {
        algorithms: args.algorithms.clone(),
        timing: args.limits.timing,
        node_cap: args.limits.node_cap,
        time_cap,
        repetitions: args.reps,
        threads: args.threads,
        calibration_seed: args.limits.seed,
    };
    let report = run_suite(&instances, &config).map_err(|e| match e {
        BenchError::CostMismatch { .. } => Failure::new(exit::MISMATCH, e.to_string()),
        BenchError::NoInstances => Failure::new(exit::INPUT, e.to_string()),
        BenchError::NoAlgorithms | BenchError::InvalidCap => {
            Failure::new(exit::USAGE, e.to_string())
        }
        BenchError::Threads(_) => Failure::new(exit::OTHER, e.to_string()),
    })?;
    for id in &report.excluded {
        eprintln!("note: {id} left out of the totals (a run hit a cap)");
    }
    write_output(args.out.as_deref(), &emit_table(&report, args.format))?;
    if let Some(path) = &args.csv {
        write_output(Some(path), &emit_csv(&report.records))?;
    }
    Ok(0)
}

fn cmd_bench(args: BenchArgs) -> CliResult {
    match args.domain.domain {
        DomainKind::Tiles => {
            let mut all = Vec::new();
            for p in &args.instances {
                all.extend(load_tiles(p, &args.domain)?);
            }
            bench(all, &args)
        }
        DomainKind::Crp => {
            let mut all = Vec::new();
            for p in &args.instances {
                all.extend(load_crp(p)?);
            }
            bench(all, &args)
        }
    }
}

fn cmd_gen(args: GenArgs) -> CliResult {
    let usage = |e: &dyn std::fmt::Display| Failure::new(exit::USAGE, e.to_string());
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let text = match args.domain {
        DomainKind::Tiles => {
            if args.steps_min > args.steps_max {
                return Err(Failure::new(exit::USAGE, "--steps-min exceeds --steps-max"));
            }
            let layout: GoalLayout = args.goal.into();
            rlida::tiles::TileGoal::new(args.rows, args.cols, layout).map_err(|e| usage(&e))?;
            let mut instances = Vec::with_capacity(args.count);
            for _ in 0..args.count {
                let seed: u64 = rng.gen();
                let steps = rng.gen_range(args.steps_min..=args.steps_max);
                let board = random_walk_instance(args.rows, args.cols, steps, seed, layout)
                    .map_err(|e| usage(&e))?;
                instances.push(TileInstance {
                    board,
                    seed: Some(seed),
                    steps: Some(steps),
                    line: 0,
                });
            }
            write_tile_file(&TileFile {
                rows: args.rows,
                cols: args.cols,
                layout,
                instances,
            })
        }
        DomainKind::Crp => {
            let mut instances = Vec::with_capacity(args.count);
            for _ in 0..args.count {
                let seed: u64 = rng.gen();
                instances.push(
                    random_crp_instance(args.stacks, args.tiers, args.containers, seed)
                        .map_err(|e| usage(&e))?,
                );
            }
            write_crp_file(&instances)
        }
    };
    write_output(args.out.as_deref(), &text)?;
    Ok(0)
}

fn cmd_bound_check(args: BoundArgs) -> CliResult {
    let mut out = String::from("N\tl\tmean_x\talpha*\tB(alpha*)\tB*\tp_h\n");
    let show = |v: Option<f64>| v.map_or("-".to_string(), |x| format!("{x:.6}"));
    for &n in &args.n {
        for &l in &args.l {
            for &m in &args.mean_x {
                let alpha = bound_alpha_star(n, l, m).ok();
                let b_alpha = alpha.and_then(|a| bound_b_of_alpha(a, n, l, m).ok());
                let b_star = bound_b_star(n, l, m).ok();
                let p_h = b_star.map_or(1.0, |b| b.clamp(0.0, 1.0));
                let _ = writeln!(
                    out,
                    "{n}\t{l}\t{m}\t{}\t{}\t{}\t{p_h:.6}",
                    show(alpha),
                    show(b_alpha),
                    show(b_star)
                );
            }
        }
    }
    print!("{out}");
    Ok(0)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(a) => cmd_solve(a),
        Command::Bench(a) => cmd_bench(a),
        Command::Gen(a) => cmd_gen(a),
        Command::BoundCheck(a) => cmd_bound_check(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
