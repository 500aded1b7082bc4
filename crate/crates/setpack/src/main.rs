//! Command-line front end: gadget generation, reductions, solving, the
//! equivalence harness, and the DP-vs-BnB timing sweep.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use setpack::bench::{bench_dichotomy, dp_log_slope, write_csv};
use setpack::gen::builtin_pattern;
use setpack::graph::{Graph, SubIsoInstance};
use setpack::iss::{build_compatible_iss, check_compatible_pair};
use setpack::json::{
    load_json, save_json, GraphDoc, InstanceDoc, IssPairDoc, ManifestDoc, SubIsoDoc, VecSumDoc,
    WitnessDoc,
};
use setpack::reduction::{
    build_psp_instance, enumerate_orderings, vectorize_instance, GadgetMode, OrderedPattern,
};
use setpack::solvers::{
    solve_exact_cover_bfs, solve_exact_cover_bnb, solve_set_packing_bnb, solve_set_packing_dp,
    solve_subiso_bruteforce, solve_vector_sum, SolveBudget,
};
use setpack::verify::{compactness_sweep, sweep_exhaustive};
use setpack::{Error, Result};

const VERSION: &str = concat!(
    env!("CARGO_PKG_VERSION"),
    "\ngadget modes:\n",
    "  paper: N = 2 * ceil(log2(n + 1)) + 2\n",
    "  tight: smallest even N with C(N, N/2) / 2 >= n",
);

#[derive(Parser)]
#[command(name = "setpack", version = VERSION, about = "Compact set packing toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Paper,
    Tight,
}

impl From<ModeArg> for GadgetMode {
    fn from(m: ModeArg) -> GadgetMode {
        match m {
            ModeArg::Paper => GadgetMode::Paper,
            ModeArg::Tight => GadgetMode::Tight,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    Psp,
    Xcover,
    Vecsum,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProblemArg {
    Psp,
    Xcover,
    Vecsum,
    Subiso,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    Dp,
    Bfs,
    Bnb,
    Enum,
}

#[derive(Subcommand)]
enum Command {
    /// Build a compatible intersecting set system pair
    GenIss(GenIssArgs),
    /// Reduce a subgraph isomorphism question to per-ordering instances
    Reduce(ReduceArgs),
    /// Solve a single instance file
    Solve(SolveArgs),
    /// Run the exhaustive equivalence harness
    Verify(VerifyArgs),
    /// Time the mask DP against branch-and-bound, emitting CSV
    Bench(BenchArgs),
}

#[derive(Args)]
struct GenIssArgs {
    /// Even universe size of the gadget
    #[arg(long)]
    n_elems: usize,
    /// Re-verify every pair property by brute force and print the report
    #[arg(long)]
    check: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(long, value_enum)]
    target: TargetArg,
    /// Host graph JSON file
    #[arg(long)]
    graph: PathBuf,
    /// Pattern: a builtin name (edge, p3, k3, c4, paw) or a JSON file
    #[arg(long)]
    pattern: String,
    #[arg(long, value_enum, default_value = "paper")]
    gadget: ModeArg,
    /// "all" or a 0-indexed ordering position
    #[arg(long, default_value = "all")]
    ordering: String,
    /// Output directory for instance files and the manifest
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(value_enum)]
    problem: ProblemArg,
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_enum)]
    algo: Option<AlgoArg>,
    /// Override the instance's decision budget
    #[arg(long)]
    r: Option<usize>,
    /// Write the found witness (0-indexed set positions) here
    #[arg(long)]
    witness: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check every labeled host graph on 3..=n_max vertices
    #[arg(long)]
    n_max: usize,
    /// Builtin name or JSON file
    #[arg(long)]
    pattern: String,
    #[arg(long, value_enum, default_value = "tight")]
    mode: ModeArg,
    /// Solve all orderings instead of stopping at the first yes
    #[arg(long)]
    full: bool,
    #[arg(long)]
    report: Option<PathBuf>,
    /// Worker thread cap
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// CSV output path (defaults to stdout)
    #[arg(long)]
    out: Option<PathBuf>,
}

fn load_pattern(name_or_path: &str) -> Result<Graph> {
    if ["edge", "p3", "k3", "c4", "paw"].contains(&name_or_path) {
        builtin_pattern(name_or_path)
    } else {
        load_json::<GraphDoc>(Path::new(name_or_path))?.to_graph()
    }
}

fn cmd_gen_iss(args: &GenIssArgs) -> Result<bool> {
    let pair = build_compatible_iss(args.n_elems)?;
    println!(
        "built compatible pair: N = {}, M = {}",
        pair.n_elems,
        pair.m_sets()
    );
    if args.check {
        let report = check_compatible_pair(&pair);
        print!("{report}");
        if !report.all_passed() {
            return Err(Error::Internal("constructed pair failed validation".into()));
        }
    }
    if let Some(out) = &args.out {
        save_json(out, &IssPairDoc::from_pair(&pair))?;
        println!("wrote {}", out.display());
    }
    Ok(true)
}

fn cmd_reduce(args: &ReduceArgs) -> Result<bool> {
    let g = load_json::<GraphDoc>(&args.graph)?.to_graph()?;
    let h = load_pattern(&args.pattern)?;
    let si = SubIsoInstance::new(g, h.clone())?;
    let mode: GadgetMode = args.gadget.into();
    let patterns: Vec<OrderedPattern> = enumerate_orderings(&h)?.collect();
    let selected: Vec<(usize, &OrderedPattern)> = if args.ordering == "all" {
        patterns.iter().enumerate().collect()
    } else {
        let idx: usize = args
            .ordering
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("bad ordering '{}'", args.ordering)))?;
        let p = patterns.get(idx).ok_or_else(|| {
            Error::Range(format!("ordering {idx} out of range 0..{}", patterns.len()))
        })?;
        vec![(idx, p)]
    };

    fs::create_dir_all(&args.out)?;
    let mut files = Vec::new();
    let mut orderings = Vec::new();
    let mut manifest_sizes = None;
    for (idx, pattern) in &selected {
        let red = build_psp_instance(&si, pattern, mode)?;
        let stem = match args.target {
            TargetArg::Psp => format!("psp_ord{idx:03}.json"),
            TargetArg::Xcover => format!("xcover_ord{idx:03}.json"),
            TargetArg::Vecsum => format!("vecsum_ord{idx:03}.json"),
        };
        let path = args.out.join(&stem);
        match args.target {
            TargetArg::Psp | TargetArg::Xcover => {
                save_json(
                    &path,
                    &InstanceDoc::from_family(&red.inst.family, Some(red.inst.r)),
                )?;
            }
            TargetArg::Vecsum => {
                save_json(&path, &VecSumDoc::from_instance(&vectorize_instance(&red)?))?;
            }
        }
        files.push(stem);
        orderings.push(pattern.order().to_vec());
        if manifest_sizes.is_none() {
            let u = red.inst.family.universe_size();
            let s = red.inst.family.len();
            manifest_sizes = Some((red.layout.n_elems(), red.inst.r, u, s));
        }
    }
    let (n_elems, r, universe_size, set_count) =
        manifest_sizes.expect("at least one ordering selected");
    let manifest = ManifestDoc {
        target: match args.target {
            TargetArg::Psp => "psp".into(),
            TargetArg::Xcover => "xcover".into(),
            TargetArg::Vecsum => "vecsum".into(),
        },
        mode: mode.to_string(),
        n: si.g.n(),
        m: si.g.edge_count(),
        k: h.edge_count(),
        l: h.n(),
        n_elems,
        r,
        universe_size,
        set_count,
        compactness_ratio: universe_size as f64 / (r as f64 * (set_count as f64).log2()),
        orderings,
        files,
        seed: None,
    };
    save_json(&args.out.join("manifest.json"), &manifest)?;
    println!(
        "wrote {} instance file(s) + manifest to {}",
        selected.len(),
        args.out.display()
    );
    Ok(true)
}

fn cmd_solve(args: &SolveArgs) -> Result<bool> {
    let budget = SolveBudget::default();
    let (found, witness): (bool, Option<Vec<usize>>) = match args.problem {
        ProblemArg::Psp => {
            let doc: InstanceDoc = load_json(&args.input)?;
            let inst = doc.to_psp(args.r)?;
            match args.algo.unwrap_or(AlgoArg::Bnb) {
                AlgoArg::Dp => {
                    let (max, w) = solve_set_packing_dp(&inst, &budget)?;
                    println!("max packing size: {max}");
                    (max >= inst.r, Some(w.indices().to_vec()))
                }
                AlgoArg::Bnb => {
                    let (found, w) = solve_set_packing_bnb(&inst, &budget)?;
                    (found, w.map(|w| w.indices().to_vec()))
                }
                _ => {
                    return Err(Error::InvalidArgument(
                        "packing supports --algo dp or bnb".into(),
                    ))
                }
            }
        }
        ProblemArg::Xcover => {
            let doc: InstanceDoc = load_json(&args.input)?;
            let inst = doc.to_xcover(args.r)?;
            match args.algo.unwrap_or(AlgoArg::Bnb) {
                AlgoArg::Bfs => match solve_exact_cover_bfs(&inst, &budget)? {
                    Some((size, w)) => {
                        println!("minimum exact cover size: {size}");
                        (size <= inst.r, Some(w.indices().to_vec()))
                    }
                    None => (false, None),
                },
                AlgoArg::Bnb => {
                    let (found, w) = solve_exact_cover_bnb(&inst, &budget)?;
                    (found, w.map(|w| w.indices().to_vec()))
                }
                _ => {
                    return Err(Error::InvalidArgument(
                        "exact cover supports --algo bfs or bnb".into(),
                    ))
                }
            }
        }
        ProblemArg::Vecsum => {
            let doc: VecSumDoc = load_json(&args.input)?;
            let inst = doc.to_instance(args.r)?;
            solve_vector_sum(&inst, &budget)?
        }
        ProblemArg::Subiso => {
            let doc: SubIsoDoc = load_json(&args.input)?;
            let si = SubIsoInstance::new(doc.g.to_graph()?, doc.h.to_graph()?)?;
            match solve_subiso_bruteforce(&si)? {
                Some(phi) => {
                    println!("map: {:?}", phi.map());
                    (true, None)
                }
                None => (false, None),
            }
        }
    };
    println!("{}", if found { "yes" } else { "no" });
    if let (Some(path), Some(indices)) = (&args.witness, &witness) {
        save_json(path, &WitnessDoc {
            indices: indices.clone(),
        })?;
        println!("wrote witness to {}", path.display());
    }
    Ok(found)
}

fn cmd_verify(args: &VerifyArgs) -> Result<bool> {
    if let Some(jobs) = args.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    }
    let h = load_pattern(&args.pattern)?;
    let mode: GadgetMode = args.mode.into();
    let budget = SolveBudget::default();
    let mut all = Vec::new();
    for n in 3..=args.n_max {
        if h.n() > n {
            println!("n = {n}: skipped (pattern has more vertices than the host)");
            continue;
        }
        let reports = sweep_exhaustive(n, &h, mode, &budget, args.full)?;
        let yes = reports.iter().filter(|r| r.subiso_answer).count();
        println!(
            "n = {n}: {} host graphs, {} contain the pattern, zero disagreements",
            reports.len(),
            yes
        );
        all.extend(reports);
    }
    let records = compactness_sweep(&[3, 10, 100, 1000], &h, mode)?;
    for rec in &records {
        println!(
            "compactness n = {:4}: |U| = {}, |S| = {}, r = {}, ratio = {:.3}",
            rec.n, rec.universe_size, rec.set_count, rec.r, rec.ratio
        );
    }
    if let Some(path) = &args.report {
        save_json(path, &all)?;
        println!("wrote {} reports to {}", all.len(), path.display());
    }
    Ok(true)
}

fn cmd_bench(args: &BenchArgs) -> Result<bool> {
    let rows = bench_dichotomy(args.seed, &SolveBudget::default())?;
    if !rows.iter().all(|r| r.agree) {
        return Err(Error::Equivalence(
            "DP and branch-and-bound disagreed on a benchmark row".into(),
        ));
    }
    match &args.out {
        Some(path) => {
            let mut buf = Vec::new();
            write_csv(&rows, &mut buf)?;
            fs::write(path, buf)?;
            println!("wrote {} rows to {}", rows.len(), path.display());
        }
        None => write_csv(&rows, std::io::stdout().lock())?,
    }
    if let Some(slope) = dp_log_slope(&rows) {
        eprintln!("dp log2-time slope per universe element: {slope:.3}");
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::GenIss(args) => cmd_gen_iss(args),
        Command::Reduce(args) => cmd_reduce(args),
        Command::Solve(args) => cmd_solve(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Bench(args) => cmd_bench(args),
    };
    match outcome {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
