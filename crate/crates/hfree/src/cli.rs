//! Command-line front end. One subcommand per construction; the library
//! does the work and this module moves files around.
//!
//! Exit codes: 0 success, 1 domain errors (invalid pattern, failed
//! verification, promise violation), 2 I/O and parse errors.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::augment::{augment, verify_augment_preserves};
use crate::coloring::Coloring;
use crate::degenerate::{check_degenerate_coloring, find_degenerate_coloring_with_budget, DegenerateSearch};
use crate::fixtures::{Family, FixtureSpec};
use crate::gadgets::{
    self, eq_gadget, eq_set_gadget, gadget_x, grotzsch, hstar, neq_gadget, verify_eq_rigidity,
    verify_hstar_soundness, verify_neq_rigidity, verify_pair_rigidity, Gadget,
};
use crate::graph::Graph;
use crate::io;
use crate::pattern::Pattern;
use crate::reductions::{
    color_code_with, detect_induced_hfree, sieve, BaseDetector, ColorCodeResult, Instance,
    PipelineConfig, Verdict,
};

/// Environment variable consulted for the default seed; flags override it.
pub const SEED_ENV: &str = "HFREE_SEED";

#[derive(Parser)]
#[command(name = "hfree", version, about = "pattern reductions for triangle detection", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the augmented pattern H+ of a pattern
    Augment(AugmentArgs),
    /// Emit a named gadget
    Gadget(GadgetArgs),
    /// Build the pattern H* of a 3-colored pattern
    ColoredAugment(ColoredAugmentArgs),
    /// Run a named verification check
    Verify(VerifyArgs),
    /// Check or search degenerate 3-colorings
    DegenerateColor(DegenerateArgs),
    /// Split a host into 3-colored induced instances
    Colorcode(ColorcodeArgs),
    /// Subsample one 3-colored instance toward unique triangles
    Sieve(SieveArgs),
    /// End-to-end triangle detection under an induced-freeness promise
    Detect(DetectArgs),
    /// Generate a fixture graph
    Gen(GenArgs),
    /// Scaling ladder for color-coded generation
    Bench(BenchArgs),
    /// Convert between edge-list and DOT formats
    Export(ExportArgs),
}

#[derive(Args)]
struct AugmentArgs {
    /// Pattern file (edge list)
    #[arg(long)]
    pattern: PathBuf,
    /// Output graph file
    #[arg(long, short)]
    output: PathBuf,
    /// Optional sidecar mapping each non-edge to its wedge pair
    #[arg(long)]
    wedges: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum GadgetKindArg {
    Grotzsch,
    Eq,
    EqSet,
    Neq,
    X,
}

#[derive(Args)]
struct GadgetArgs {
    #[arg(long, value_enum)]
    kind: GadgetKindArg,
    /// Set size for eq-set
    #[arg(long, default_value_t = 1)]
    set_size: usize,
    #[arg(long, short)]
    output: PathBuf,
    /// Terminal-label sidecar (`name vertex_id` lines)
    #[arg(long)]
    terminals: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::El)]
    format: FormatArg,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum FormatArg {
    El,
    Dot,
}

#[derive(Args)]
struct ColoredAugmentArgs {
    /// 3-colored pattern file (colored edge list)
    #[arg(long)]
    pattern: PathBuf,
    #[arg(long, short)]
    output: PathBuf,
    #[arg(long)]
    terminals: Option<PathBuf>,
    /// Also run the soundness verifier and fail on an unsound build
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check to run: eq-rigidity | neq-rigidity | pair-rigidity |
    /// grotzsch-critical | invariants | hstar-soundness | all
    #[arg(long)]
    check: Option<String>,
    /// Gadget file for checks that take one
    #[arg(long)]
    gadget: Option<PathBuf>,
    #[arg(long)]
    terminals: Option<PathBuf>,
    /// Colored pattern file for hstar-soundness
    #[arg(long)]
    pattern: Option<PathBuf>,
    /// Run the built-in corpus end to end
    #[arg(long)]
    all: bool,
}

#[derive(Args)]
struct DegenerateArgs {
    /// Pattern file (edge list)
    #[arg(long)]
    pattern: PathBuf,
    /// Coloring to check (colored graph file); searched when absent
    #[arg(long)]
    coloring: Option<PathBuf>,
    /// Write the found coloring here
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Search node budget
    #[arg(long, default_value_t = crate::degenerate::DEFAULT_NODE_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct ColorcodeArgs {
    #[arg(long)]
    host: PathBuf,
    /// Directory for the generated instances (colored graphs plus
    /// `.map` back-map sidecars)
    #[arg(long)]
    out_dir: Option<PathBuf>,
    #[arg(long, default_value_t = 2)]
    cap_factor: usize,
    #[arg(long)]
    stats_json: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct SieveArgs {
    /// 3-colored instance file
    #[arg(long)]
    instance: PathBuf,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 8)]
    reps: usize,
    #[arg(long)]
    out_dir: Option<PathBuf>,
    #[arg(long)]
    stats_json: Option<PathBuf>,
}

#[derive(Args)]
struct DetectArgs {
    #[arg(long)]
    pattern: PathBuf,
    #[arg(long)]
    host: PathBuf,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 8)]
    sieve_reps: usize,
    #[arg(long, default_value_t = 15)]
    amplify: usize,
    #[arg(long, default_value = "brute")]
    base_detector: BaseDetector,
    /// Audit the induced-freeness promise by brute force first
    #[arg(long)]
    audit_promise: bool,
    #[arg(long, default_value_t = 2)]
    cap_factor: usize,
    #[arg(long)]
    stats_json: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum FamilyArg {
    RandomGnp,
    OddCycleBlowup,
    CompleteTripartite,
    PlantedTriangle,
    Path,
    Cycle,
    Clique,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    cycle: Option<usize>,
    #[arg(long)]
    block: Option<usize>,
    #[arg(long)]
    part: Option<usize>,
    #[arg(long)]
    left: Option<usize>,
    #[arg(long)]
    right: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, short)]
    output: PathBuf,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated ladder of host sizes
    #[arg(long, value_delimiter = ',', default_values_t = [256usize, 1024, 4096])]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 6.0)]
    avg_degree: f64,
    #[arg(long)]
    seed: Option<u64>,
    /// Write rows as a JSON array here (also printed as JSON lines)
    #[arg(long)]
    stats_json: Option<PathBuf>,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum)]
    format: FormatArg,
    #[arg(long, short)]
    output: PathBuf,
    #[arg(long)]
    terminals: Option<PathBuf>,
}

enum CliError {
    Domain(String),
    Io(String),
}

impl From<io::FormatError> for CliError {
    fn from(e: io::FormatError) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<gadgets::GadgetError> for CliError {
    fn from(e: gadgets::GadgetError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<crate::pattern::PatternError> for CliError {
    fn from(e: crate::pattern::PatternError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<crate::reductions::PipelineError> for CliError {
    fn from(e: crate::reductions::PipelineError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<crate::degenerate::DegenerateError> for CliError {
    fn from(e: crate::degenerate::DegenerateError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<crate::fixtures::FixtureError> for CliError {
    fn from(e: crate::fixtures::FixtureError) -> Self {
        CliError::Domain(e.to_string())
    }
}

/// Stats JSON emitted by the reduction subcommands.
#[derive(Serialize)]
struct StatsJson {
    command: String,
    seed: u64,
    n: usize,
    m: usize,
    instance_count: usize,
    max_instance_size: usize,
    triangle_partition_ok: bool,
    wall_ms: u128,
}

/// Parses argv and runs. Returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints its own message; usage problems are parse errors
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            1
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn env_seed() -> u64 {
    std::env::var(SEED_ENV).ok().and_then(|s| s.parse().ok()).unwrap_or(0)
}

fn resolve_seed(flag: Option<u64>) -> u64 {
    flag.unwrap_or_else(env_seed)
}

fn load_pattern(path: &Path) -> Result<(Graph, Option<Coloring>), CliError> {
    Ok(io::read_graph(path)?)
}

fn load_colored_pattern(path: &Path) -> Result<Pattern, CliError> {
    let (graph, coloring) = io::read_graph(path)?;
    let coloring = coloring.ok_or_else(|| {
        CliError::Domain(format!("{}: expected a colored pattern (missing `colors` block)", path.display()))
    })?;
    let coloring = if coloring.palette() < 3 {
        coloring.promote(3).expect("promotion to a wider palette")
    } else {
        coloring
    };
    Ok(Pattern::colored(graph, coloring)?)
}

fn write_gadget(
    gadget: &Gadget,
    output: &Path,
    terminals: Option<&Path>,
    format: FormatArg,
) -> Result<(), CliError> {
    let contents = match format {
        FormatArg::El => io::emit_graph(&gadget.graph),
        FormatArg::Dot => io::emit_dot(&gadget.graph, None, Some(&gadget.terminals)),
    };
    io::write_file(output, &contents)?;
    if let Some(tpath) = terminals {
        io::write_file(tpath, &io::emit_terminals(&gadget.terminals))?;
    }
    Ok(())
}

fn write_instances(dir: &Path, instances: &[Instance]) -> Result<(), CliError> {
    std::fs::create_dir_all(dir)
        .map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
    for (i, inst) in instances.iter().enumerate() {
        let base = dir.join(format!("instance_{i:05}"));
        io::write_file(
            &base.with_extension("cel"),
            &io::emit_colored_graph(&inst.graph, &inst.coloring),
        )?;
        let map_lines: String = inst
            .back_map
            .iter()
            .enumerate()
            .map(|(local, host)| format!("{local} {host}\n"))
            .collect();
        io::write_file(&base.with_extension("map"), &map_lines)?;
    }
    Ok(())
}

fn write_stats(path: Option<&Path>, stats: &StatsJson) -> Result<(), CliError> {
    if let Some(path) = path {
        let body = serde_json::to_string_pretty(stats).expect("stats serialize");
        io::write_file(path, &body)?;
    }
    Ok(())
}

fn dispatch(cmd: Command) -> Result<(), CliError> {
    match cmd {
        Command::Augment(args) => {
            eprintln!("config: augment pattern={}", args.pattern.display());
            let (graph, _) = load_pattern(&args.pattern)?;
            let aug = augment(&Pattern::plain(graph));
            io::write_file(&args.output, &io::emit_graph(aug.graph()))?;
            if let Some(wpath) = args.wedges {
                let lines: String = aug
                    .wedges()
                    .iter()
                    .map(|(&(u, v), &(x, y))| format!("{u} {v} {x} {y}\n"))
                    .collect();
                io::write_file(&wpath, &lines)?;
            }
            println!(
                "augmented: {} base vertices -> {} vertices, {} wedge pairs",
                aug.base().n(),
                aug.graph().n(),
                aug.wedges().len()
            );
            Ok(())
        }
        Command::Gadget(args) => {
            eprintln!("config: gadget kind={:?} set_size={}", args.kind, args.set_size);
            let gadget = match args.kind {
                GadgetKindArg::Grotzsch => grotzsch(),
                GadgetKindArg::Eq => eq_gadget(),
                GadgetKindArg::EqSet => {
                    if args.set_size < 1 {
                        return Err(CliError::Domain("--set-size must be >= 1".into()));
                    }
                    eq_set_gadget(args.set_size)
                }
                GadgetKindArg::Neq => neq_gadget(),
                GadgetKindArg::X => gadget_x(),
            };
            write_gadget(&gadget, &args.output, args.terminals.as_deref(), args.format)?;
            println!("gadget {:?}: {} vertices, {} edges", gadget.kind, gadget.graph.n(), gadget.graph.m());
            Ok(())
        }
        Command::ColoredAugment(args) => {
            eprintln!("config: colored-augment pattern={}", args.pattern.display());
            let pattern = load_colored_pattern(&args.pattern)?;
            let hs = hstar(&pattern)?;
            hs.gadget.verify_invariants()?;
            write_gadget(&hs.gadget, &args.output, args.terminals.as_deref(), FormatArg::El)?;
            println!(
                "hstar ({:?}): {} vertices, {} edges, {} triangles",
                hs.gadget.kind,
                hs.graph().n(),
                hs.graph().m(),
                hs.graph().count_triangles()
            );
            if args.verify {
                let report = verify_hstar_soundness(&pattern, &hs);
                println!("soundness: {report}");
                if !report.sound {
                    return Err(CliError::Domain("hstar soundness verification failed".into()));
                }
            }
            Ok(())
        }
        Command::Verify(args) => run_verify(args),
        Command::DegenerateColor(args) => {
            eprintln!("config: degenerate-color pattern={} budget={}", args.pattern.display(), args.budget);
            let (graph, _) = load_pattern(&args.pattern)?;
            match args.coloring {
                Some(cpath) => {
                    let (cgraph, coloring) = io::read_graph(&cpath)?;
                    if cgraph != graph {
                        return Err(CliError::Domain(format!(
                            "{}: coloring file carries a different graph",
                            cpath.display()
                        )));
                    }
                    let coloring = coloring
                        .ok_or_else(|| CliError::Domain(format!("{}: no colors block", cpath.display())))?
                        .promote(3)
                        .map_err(|e| CliError::Domain(e.to_string()))?;
                    let ok = check_degenerate_coloring(&graph, &coloring)?;
                    println!("degenerate: {ok}");
                    if !ok {
                        return Err(CliError::Domain("coloring is not degenerate".into()));
                    }
                }
                None => match find_degenerate_coloring_with_budget(&graph, args.budget)? {
                    DegenerateSearch::Found(coloring) => {
                        println!("degenerate coloring found");
                        if let Some(out) = args.output {
                            io::write_file(&out, &io::emit_colored_graph(&graph, &coloring))?;
                        }
                    }
                    DegenerateSearch::Exhausted => {
                        return Err(CliError::Domain("no degenerate 3-coloring exists".into()));
                    }
                    DegenerateSearch::Inconclusive { nodes } => {
                        return Err(CliError::Domain(format!(
                            "search inconclusive after {nodes} nodes; raise --budget"
                        )));
                    }
                },
            }
            Ok(())
        }
        Command::Colorcode(args) => {
            let seed = resolve_seed(args.seed);
            eprintln!("config: colorcode host={} cap_factor={} seed={seed}", args.host.display(), args.cap_factor);
            let (host, _) = io::read_graph(&args.host)?;
            let start = Instant::now();
            let result = color_code_with(&host, args.cap_factor);
            let wall_ms = start.elapsed().as_millis();
            match result {
                ColorCodeResult::Triangle(t) => {
                    println!("triangle found during coloring: {} {} {}", t[0], t[1], t[2]);
                    write_stats(
                        args.stats_json.as_deref(),
                        &StatsJson {
                            command: "colorcode".into(),
                            seed,
                            n: host.n(),
                            m: host.m(),
                            instance_count: 0,
                            max_instance_size: 0,
                            triangle_partition_ok: true,
                            wall_ms,
                        },
                    )
                }
                ColorCodeResult::Instances(instances) => {
                    let total: u64 = instances.iter().map(|i| i.graph.count_triangles()).sum();
                    let partition_ok = total == host.count_triangles();
                    println!(
                        "instances: {} (max size {}), triangle partition {}",
                        instances.len(),
                        instances.iter().map(|i| i.n()).max().unwrap_or(0),
                        if partition_ok { "exact" } else { "BROKEN" }
                    );
                    if let Some(dir) = &args.out_dir {
                        write_instances(dir, &instances)?;
                    }
                    write_stats(
                        args.stats_json.as_deref(),
                        &StatsJson {
                            command: "colorcode".into(),
                            seed,
                            n: host.n(),
                            m: host.m(),
                            instance_count: instances.len(),
                            max_instance_size: instances.iter().map(|i| i.n()).max().unwrap_or(0),
                            triangle_partition_ok: partition_ok,
                            wall_ms,
                        },
                    )?;
                    if !partition_ok {
                        return Err(CliError::Domain("triangle partition check failed".into()));
                    }
                    Ok(())
                }
            }
        }
        Command::Sieve(args) => {
            let seed = resolve_seed(args.seed);
            eprintln!("config: sieve instance={} reps={} seed={seed}", args.instance.display(), args.reps);
            let (graph, coloring) = io::read_graph(&args.instance)?;
            let coloring = coloring
                .ok_or_else(|| CliError::Domain(format!("{}: sieve needs a 3-colored instance", args.instance.display())))?
                .promote(3)
                .map_err(|e| CliError::Domain(e.to_string()))?;
            if !coloring.is_proper(&graph) {
                return Err(CliError::Domain("instance coloring is not proper".into()));
            }
            let n = graph.n();
            let m = graph.m();
            let back_map = (0..n as u32).collect();
            let inst = Instance { graph, coloring, back_map };
            let mut rng = {
                use rand_chacha::rand_core::SeedableRng;
                rand_chacha::ChaCha8Rng::seed_from_u64(seed)
            };
            let start = Instant::now();
            let outputs = sieve(&inst, args.reps, &mut rng);
            let wall_ms = start.elapsed().as_millis();
            println!(
                "sieved into {} induced subgraphs (max size {})",
                outputs.len(),
                outputs.iter().map(|o| o.n()).max().unwrap_or(0)
            );
            if let Some(dir) = &args.out_dir {
                write_instances(dir, &outputs)?;
            }
            write_stats(
                args.stats_json.as_deref(),
                &StatsJson {
                    command: "sieve".into(),
                    seed,
                    n,
                    m,
                    instance_count: outputs.len(),
                    max_instance_size: outputs.iter().map(|o| o.n()).max().unwrap_or(0),
                    triangle_partition_ok: true,
                    wall_ms,
                },
            )
        }
        Command::Detect(args) => {
            let seed = resolve_seed(args.seed);
            let config = PipelineConfig {
                seed,
                class_cap_factor: args.cap_factor,
                sieve_repetitions: args.sieve_reps,
                amplification_runs: args.amplify,
                base_detector: args.base_detector,
                audit_promise: args.audit_promise,
            };
            eprintln!(
                "config: detect pattern={} host={} seed={seed} sieve_reps={} amplify={} base={:?} audit={} cap_factor={}",
                args.pattern.display(),
                args.host.display(),
                config.sieve_repetitions,
                config.amplification_runs,
                config.base_detector,
                config.audit_promise,
                config.class_cap_factor,
            );
            let (pattern_graph, pattern_coloring) = load_pattern(&args.pattern)?;
            let pattern = match pattern_coloring {
                Some(c) => Pattern::colored(pattern_graph, c.promote(3).map_err(|e| CliError::Domain(e.to_string()))?)?,
                None => Pattern::plain(pattern_graph),
            };
            let (host, _) = io::read_graph(&args.host)?;
            let report = detect_induced_hfree(&host, &pattern, &config)?;
            match report.verdict {
                Verdict::TriangleFound => {
                    let t = report.witness.unwrap();
                    println!("triangle_found {} {} {}", t[0], t[1], t[2]);
                }
                Verdict::TriangleFree => println!("triangle_free"),
            }
            write_stats(
                args.stats_json.as_deref(),
                &StatsJson {
                    command: "detect".into(),
                    seed,
                    n: host.n(),
                    m: host.m(),
                    instance_count: report.stats.instance_count,
                    max_instance_size: report.stats.max_instance_size,
                    triangle_partition_ok: report.stats.triangle_partition_ok,
                    wall_ms: report.stats.wall_ms,
                },
            )
        }
        Command::Gen(args) => {
            let seed = resolve_seed(args.seed);
            let family = build_family(&args)?;
            eprintln!("config: gen family={family:?} seed={seed}");
            let spec = FixtureSpec { family, seed };
            let (graph, coloring) = spec.generate()?;
            let contents = match &coloring {
                Some(c) => io::emit_colored_graph(&graph, c),
                None => io::emit_graph(&graph),
            };
            io::write_file(&args.output, &contents)?;
            println!("generated: {} vertices, {} edges", graph.n(), graph.m());
            Ok(())
        }
        Command::Bench(args) => {
            let seed = resolve_seed(args.seed);
            eprintln!("config: bench sizes={:?} avg_degree={} seed={seed}", args.sizes, args.avg_degree);
            let rows = crate::bench::bench_color_code_ladder(&args.sizes, args.avg_degree, seed);
            for row in &rows {
                println!("{}", serde_json::to_string(row).expect("row serialize"));
            }
            if let Some(exp) = crate::bench::measured_exponent(&rows) {
                println!("{{\"measured_exponent\": {exp:.4}}}");
            }
            if let Some(path) = args.stats_json {
                let body = serde_json::to_string_pretty(&rows).expect("rows serialize");
                io::write_file(&path, &body)?;
            }
            Ok(())
        }
        Command::Export(args) => {
            eprintln!("config: export input={} format={:?}", args.input.display(), args.format);
            let (graph, coloring) = io::read_graph(&args.input)?;
            let terminals = match &args.terminals {
                Some(tpath) => Some(io::read_terminals(tpath)?),
                None => None,
            };
            let contents = match args.format {
                FormatArg::El => match &coloring {
                    Some(c) => io::emit_colored_graph(&graph, c),
                    None => io::emit_graph(&graph),
                },
                FormatArg::Dot => io::emit_dot(&graph, coloring.as_ref(), terminals.as_ref()),
            };
            io::write_file(&args.output, &contents)?;
            Ok(())
        }
    }
}

fn build_family(args: &GenArgs) -> Result<Family, CliError> {
    let need = |opt: Option<usize>, name: &str| {
        opt.ok_or_else(|| CliError::Domain(format!("--{name} is required for this family")))
    };
    Ok(match args.family {
        FamilyArg::RandomGnp => Family::RandomGnp {
            n: need(args.n, "n")?,
            p: args.p.ok_or_else(|| CliError::Domain("--p is required for random-gnp".into()))?,
        },
        FamilyArg::OddCycleBlowup => Family::OddCycleBlowup {
            cycle: need(args.cycle, "cycle")?,
            block: need(args.block, "block")?,
        },
        FamilyArg::CompleteTripartite => Family::CompleteTripartite { part: need(args.part, "part")? },
        FamilyArg::PlantedTriangle => Family::PlantedTriangle {
            left: need(args.left, "left")?,
            right: need(args.right, "right")?,
        },
        FamilyArg::Path => Family::Path { n: need(args.n, "n")? },
        FamilyArg::Cycle => Family::Cycle { n: need(args.n, "n")? },
        FamilyArg::Clique => Family::Clique { n: need(args.n, "n")? },
    })
}

fn run_verify(args: VerifyArgs) -> Result<(), CliError> {
    if args.all {
        return verify_corpus();
    }
    let check = args
        .check
        .as_deref()
        .ok_or_else(|| CliError::Domain("pass --check <name> or --all".into()))?;
    eprintln!("config: verify check={check}");

    let load_gadget_graph = |kind| -> Result<Gadget, CliError> {
        let path = args
            .gadget
            .as_ref()
            .ok_or_else(|| CliError::Domain(format!("--check {check} needs --gadget")))?;
        let (graph, _) = io::read_graph(path)?;
        let terminals = match &args.terminals {
            Some(tpath) => io::read_terminals(tpath)?,
            None => BTreeMap::new(),
        };
        Ok(Gadget { graph, terminals, kind })
    };

    let pass = match check {
        "eq-rigidity" => {
            let g = match &args.gadget {
                Some(_) => load_gadget_graph(crate::gadgets::GadgetKind::Eq)?,
                None => eq_gadget(),
            };
            verify_eq_rigidity(&g)
        }
        "neq-rigidity" => {
            let g = match &args.gadget {
                Some(_) => load_gadget_graph(crate::gadgets::GadgetKind::Neq)?,
                None => neq_gadget(),
            };
            verify_neq_rigidity(&g)
        }
        "pair-rigidity" => {
            let g = match &args.gadget {
                Some(_) => load_gadget_graph(crate::gadgets::GadgetKind::X)?,
                None => gadget_x(),
            };
            let (ok, extendable) = verify_pair_rigidity(&g);
            println!("pair-rigidity examined {extendable} extendable assignments");
            ok
        }
        "grotzsch-critical" => {
            let g = match &args.gadget {
                Some(_) => load_gadget_graph(crate::gadgets::GadgetKind::Grotzsch)?,
                None => grotzsch(),
            };
            g.verify_invariants().is_ok()
        }
        "invariants" => {
            let path = args
                .gadget
                .as_ref()
                .ok_or_else(|| CliError::Domain("--check invariants needs --gadget".into()))?;
            let (graph, _) = io::read_graph(path)?;
            // without a kind tag, check the shared invariants
            let triangle_free = graph.is_triangle_free();
            let colorable = crate::coloring::is_three_colorable(&graph);
            println!("triangle-free: {triangle_free}, 3-colorable: {colorable}");
            triangle_free && colorable
        }
        "hstar-soundness" => {
            let ppath = args
                .pattern
                .as_ref()
                .ok_or_else(|| CliError::Domain("--check hstar-soundness needs --pattern".into()))?;
            let pattern = load_colored_pattern(ppath)?;
            let hs = hstar(&pattern)?;
            if let Some(gpath) = &args.gadget {
                let (graph, _) = io::read_graph(gpath)?;
                if graph != *hs.graph() {
                    return Err(CliError::Domain(format!(
                        "{}: gadget file does not match the deterministic build from the pattern",
                        gpath.display()
                    )));
                }
            }
            let report = verify_hstar_soundness(&pattern, &hs);
            println!("soundness: {report}");
            report.sound
        }
        other => {
            return Err(CliError::Domain(format!(
                "unknown check {other:?}; known: eq-rigidity, neq-rigidity, pair-rigidity, grotzsch-critical, invariants, hstar-soundness"
            )))
        }
    };
    println!("{}", if pass { "PASS" } else { "FAIL" });
    if pass {
        Ok(())
    } else {
        Err(CliError::Domain(format!("check {check} failed")))
    }
}

/// The built-in corpus: every gadget invariant plus the fixture soundness
/// checks, at desk scale.
fn verify_corpus() -> Result<(), CliError> {
    let mut failures = 0;
    let mut run = |name: &str, ok: bool| {
        println!("{}: {}", name, if ok { "PASS" } else { "FAIL" });
        if !ok {
            failures += 1;
        }
    };

    run("grotzsch-critical", grotzsch().verify_invariants().is_ok());
    let eq = eq_gadget();
    run("eq-invariants", eq.verify_invariants().is_ok());
    run("eq-rigidity", verify_eq_rigidity(&eq));
    let neq = neq_gadget();
    run("neq-invariants", neq.verify_invariants().is_ok());
    run("neq-rigidity", verify_neq_rigidity(&neq));
    let eqs = eq_set_gadget(3);
    run("eq-set-invariants", eqs.verify_invariants().is_ok());
    run("eq-set-rigidity", gadgets::verify_eq_set_rigidity(&eqs, 3));
    let x = gadget_x();
    run("x-invariants", x.verify_invariants().is_ok());
    run("x-pair-rigidity", verify_pair_rigidity(&x).0);

    for (name, pattern) in crate::fixtures::colored_pattern_corpus() {
        let hs = hstar(&pattern).map_err(|e| CliError::Domain(e.to_string()))?;
        run(&format!("hstar-invariants[{name}]"), hs.gadget.verify_invariants().is_ok());
        run(
            &format!("hstar-triangles[{name}]"),
            hs.graph().count_triangles() == pattern.graph().count_triangles(),
        );
        run(&format!("hstar-soundness[{name}]"), verify_hstar_soundness(&pattern, &hs).sound);
    }

    let p5 = Pattern::plain(crate::fixtures::path(5));
    run("augment-preserves[P5]", verify_augment_preserves(&p5).all_ok());
    run("augment-size[P6]", augment(&Pattern::plain(crate::fixtures::path(6))).graph().n() == 26);
    run("augment-size[C7]", augment(&Pattern::plain(crate::fixtures::cycle(7))).graph().n() == 35);

    if failures == 0 {
        println!("verify --all: PASS");
        Ok(())
    } else {
        Err(CliError::Domain(format!("{failures} corpus checks failed")))
    }
}
