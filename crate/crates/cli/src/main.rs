//! `bwlab`: batch front end for the reductions, witnesses, checkers and
//! exact solvers. Prints a `key=value` report on stdout.
//!
//! Exit status: 0 pass or yes, 1 fail or no, 2 usage or format error,
//! 3 refused by a size guard.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use bwlab::bw_solvers::{bandwidth_brute, bandwidth_decide_dp, directed_bandwidth_brute, SolveError};
use bwlab::codec;
use bwlab::formula::{parse_formula, Assignment, Formula};
use bwlab::graph::{bandwidth_of_layout, directed_bandwidth_of_order, validate_caterpillar, DirectedStretch, Layout};
use bwlab::report::{self, Report, Verdict};
use bwlab::sat2wpe::{build_emulation_witness, build_wpe_instance, Variant};
use bwlab::wpe::{check_uniform_emulation, solve_wpe_brute, solve_wpe_dp, EmulationMap, WpeInstance};
use bwlab::wpe2bw::{build_caterpillar_capped, build_layout_witness, extract_emulation, normalize_factor, CaterpillarConstants};
use bwlab::wpe2dbw::{build_dag_capped, build_order_witness, DagConstants};
use bwlab::{Refused, SearchLimits};

/// Instances with more vertices than this are written with `value*count` runs.
const COMPACT_ABOVE: u64 = 1_000_000;

#[derive(Parser)]
#[command(name = "bwlab", version, about = "Reductions to (directed) bandwidth of caterpillars, with witnesses and checkers")]
struct Cli {
    /// Leave timings out so reports are byte-stable.
    #[arg(long, global = true)]
    deterministic: bool,
    /// Node budget for exhaustive searches.
    #[arg(long, global = true, env = "BWLAB_MAX_NODES", default_value_t = SearchLimits::DEFAULT_MAX_NODES)]
    max_nodes: u64,
    /// Largest graph the exact bandwidth solvers accept.
    #[arg(long, global = true, default_value_t = SearchLimits::DEFAULT_MAX_VERTICES)]
    max_solver_vertices: u64,
    /// Largest caterpillar or DAG the reductions will build.
    #[arg(long, global = true, default_value_t = bwlab::wpe2bw::DEFAULT_MAX_VERTICES)]
    max_vertices: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Formula and k to a weighted path emulation instance.
    ReduceSatWpe(SatArgs),
    /// WPE instance with pin first=M to a caterpillar.
    ReduceWpeBw(ReduceArgs),
    /// WPE instance with pins first=M last=M to a DAG.
    ReduceWpeDbw(ReduceArgs),
    /// Build a witness: an emulation from an assignment, or a layout from an emulation.
    Witness(WitnessArgs),
    /// Check an emulation map or a (directed) bandwidth layout.
    Check(CheckArgs),
    /// Solve a WPE instance or a small bandwidth instance exactly.
    Solve(SolveArgs),
    /// Run a whole pipeline and check every stage.
    Roundtrip(RoundtripArgs),
    /// Constants and structural counts of a construction.
    Stats(StatsArgs),
}

#[derive(Args)]
struct SatArgs {
    #[arg(long)]
    formula: PathBuf,
    #[arg(long)]
    k: u32,
    #[arg(long, default_value = "free")]
    variant: Variant,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Role sidecar for the path vertices.
    #[arg(long)]
    roles: Option<PathBuf>,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(long)]
    wpe: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Bw,
    Dbw,
}

#[derive(Args)]
struct WitnessArgs {
    #[arg(long, conflicts_with = "wpe")]
    formula: Option<PathBuf>,
    #[arg(long)]
    k: Option<u32>,
    /// True variables, comma separated.
    #[arg(long, value_delimiter = ',')]
    assignment: Vec<u32>,
    #[arg(long, default_value = "free")]
    variant: Variant,
    #[arg(long)]
    wpe: Option<PathBuf>,
    #[arg(long)]
    map: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "bw")]
    target: Target,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long, requires = "map")]
    wpe: Option<PathBuf>,
    #[arg(long)]
    map: Option<PathBuf>,
    #[arg(long, conflicts_with = "digraph", requires_all = ["layout", "k"])]
    graph: Option<PathBuf>,
    #[arg(long, requires_all = ["layout", "k"])]
    digraph: Option<PathBuf>,
    #[arg(long)]
    layout: Option<PathBuf>,
    #[arg(long)]
    k: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Engine {
    Brute,
    Dp,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    wpe: Option<PathBuf>,
    #[arg(long, conflicts_with = "wpe")]
    graph: Option<PathBuf>,
    #[arg(long, conflicts_with_all = ["wpe", "graph"])]
    digraph: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "brute")]
    engine: Engine,
    /// Bandwidth bound for the dp engine on graphs.
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RoundtripArgs {
    #[arg(long, conflicts_with = "wpe")]
    formula: Option<PathBuf>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long, default_value = "free")]
    variant: Variant,
    #[arg(long)]
    wpe: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "bw")]
    target: Target,
}

#[derive(Args)]
struct StatsArgs {
    #[arg(long, conflicts_with = "wpe")]
    formula: Option<PathBuf>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long, default_value = "free")]
    variant: Variant,
    #[arg(long)]
    wpe: Option<PathBuf>,
    /// Also report the caterpillar or DAG built from the instance.
    #[arg(long, value_enum)]
    target: Option<Target>,
}

enum Failure {
    /// Bad arguments, unreadable or malformed input.
    Input(String),
    Refused(String),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<Refused> for Failure {
    fn from(e: Refused) -> Self {
        Failure::Refused(e.to_string())
    }
}

fn input<E: std::fmt::Display>(what: &Path) -> impl FnOnce(E) -> Failure + '_ {
    move |e| Failure::Input(format!("{}: {e}", what.display()))
}

struct Ctx {
    limits: SearchLimits,
    max_vertices: u64,
    report: Report,
}

impl Ctx {
    fn read(&mut self, key: &str, path: &Path) -> Result<String, Failure> {
        let bytes = fs::read(path).map_err(input(path))?;
        self.report.set(format!("input.{key}.sha256"), hex::encode(Sha256::digest(&bytes)));
        String::from_utf8(bytes).map_err(input(path))
    }

    fn formula(&mut self, path: &Path) -> Result<Formula, Failure> {
        let text = self.read("formula", path)?;
        parse_formula(&text).map_err(input(path))
    }

    fn wpe(&mut self, path: &Path) -> Result<WpeInstance, Failure> {
        let text = self.read("wpe", path)?;
        codec::decode_wpe(&text).map_err(input(path))
    }

    fn map(&mut self, path: &Path) -> Result<EmulationMap, Failure> {
        let text = self.read("map", path)?;
        codec::decode_map(&text).map_err(input(path))
    }

    fn layout(&mut self, path: &Path) -> Result<Layout, Failure> {
        let text = self.read("layout", path)?;
        codec::decode_layout(&text).map_err(input(path))
    }

    fn timed<T>(&mut self, name: &str, f: impl FnOnce(&mut Self) -> T) -> T {
        let started = Instant::now();
        let out = f(self);
        self.report.timing(name, started.elapsed());
        out
    }
}

fn write_out(path: &Option<PathBuf>, text: &str, r: &mut Report, key: &str) -> Result<(), Failure> {
    if let Some(p) = path {
        fs::write(p, text).map_err(input(p))?;
        r.set(format!("output.{key}"), p.display());
    }
    Ok(())
}

fn need<T: Clone>(v: &Option<T>, flag: &str) -> Result<T, Failure> {
    v.clone().ok_or_else(|| Failure::Input(format!("missing --{flag}")))
}

fn encode_instance(inst: &WpeInstance) -> String {
    if inst.n() > COMPACT_ABOVE {
        codec::encode_wpe_compact(inst)
    } else {
        codec::encode_wpe(inst)
    }
}

fn reduce_sat(ctx: &mut Ctx, a: &SatArgs) -> Result<(), Failure> {
    let f = ctx.formula(&a.formula)?;
    let con = ctx.timed("reduce", |_| build_wpe_instance(&f, a.k, a.variant)).map_err(|e| Failure::Input(e.to_string()))?;
    report::wpe_construction_stats(&con, &mut ctx.report);
    write_out(&a.out, &encode_instance(&con.instance), &mut ctx.report, "wpe")?;
    write_out(&a.roles, &codec::encode_wpe_roles(&con), &mut ctx.report, "roles")?;
    Ok(())
}

fn normalized(ctx: &mut Ctx, inst: &WpeInstance) -> Result<WpeInstance, Failure> {
    let norm = normalize_factor(inst).map_err(|e| Failure::Input(e.to_string()))?;
    ctx.report.set("normalized_factor", norm.c() / inst.c());
    Ok(norm)
}

fn build_failure(e: bwlab::wpe2bw::BuildError) -> Failure {
    match e {
        bwlab::wpe2bw::BuildError::TooLarge { .. } => Failure::Refused(e.to_string()),
        e => Failure::Input(e.to_string()),
    }
}

fn reduce_bw(ctx: &mut Ctx, a: &ReduceArgs) -> Result<(), Failure> {
    let inst = ctx.wpe(&a.wpe)?;
    let inst = normalized(ctx, &inst)?;
    let cap = ctx.max_vertices;
    let con = ctx.timed("reduce", |_| build_caterpillar_capped(&inst, cap)).map_err(build_failure)?;
    report::caterpillar_stats(&con, &mut ctx.report);
    let hair = validate_caterpillar(&con.graph).map(|i| i.max_hair_len());
    ctx.report.set("graph.max_hair_len", hair.as_ref().map(|h| h.to_string()).unwrap_or_else(|e| e.to_string()));
    ctx.report.check_bool("caterpillar_hair_le_3", matches!(hair, Ok(h) if h <= 3));
    write_out(&a.out, &codec::encode_graph(&con.graph, Some(&con.roles)), &mut ctx.report, "graph")
}

fn reduce_dbw(ctx: &mut Ctx, a: &ReduceArgs) -> Result<(), Failure> {
    let inst = ctx.wpe(&a.wpe)?;
    let inst = normalized(ctx, &inst)?;
    let cap = ctx.max_vertices;
    let con = ctx.timed("reduce", |_| build_dag_capped(&inst, cap)).map_err(build_failure)?;
    report::dag_stats(&con, &mut ctx.report);
    let hair = con.digraph.underlying().ok().and_then(|g| validate_caterpillar(&g).ok()).map(|i| i.max_hair_len());
    ctx.report.check_bool("caterpillar_hair_le_1", matches!(hair, Some(h) if h <= 1));
    write_out(&a.out, &codec::encode_digraph(&con.digraph, Some(&con.roles)), &mut ctx.report, "digraph")
}

fn witness(ctx: &mut Ctx, a: &WitnessArgs) -> Result<(), Failure> {
    if let Some(fp) = &a.formula {
        let f = ctx.formula(fp)?;
        let k = need(&a.k, "k")?;
        let con = build_wpe_instance(&f, k, a.variant).map_err(|e| Failure::Input(e.to_string()))?;
        let assignment = Assignment::from_vars(a.assignment.iter().copied());
        match build_emulation_witness(&con, &assignment) {
            Ok(map) => {
                let ok = check_uniform_emulation(&con.instance, &map).map(|r| r.is_valid()).unwrap_or(false);
                ctx.report.check_bool("emulation", ok);
                write_out(&a.out, &codec::encode_map_compact(&map), &mut ctx.report, "map")?;
            }
            Err(e) => {
                ctx.report.set("refusal", e);
                ctx.report.check("assignment_gate", Verdict::Fail);
            }
        }
        return Ok(());
    }
    let inst = ctx.wpe(&need(&a.wpe, "wpe")?)?;
    let map = ctx.map(&need(&a.map, "map")?)?;
    let inst = normalized(ctx, &inst)?;
    let cap = ctx.max_vertices;
    let (layout, k) = match a.target {
        Target::Bw => {
            let con = build_caterpillar_capped(&inst, cap).map_err(build_failure)?;
            (ctx.timed("witness", |_| build_layout_witness(&con, &map)), con.constants.k)
        }
        Target::Dbw => {
            let con = build_dag_capped(&inst, cap).map_err(build_failure)?;
            (ctx.timed("witness", |_| build_order_witness(&con, &map)), con.constants.k)
        }
    };
    ctx.report.set("k", k);
    match layout {
        Ok(l) => {
            ctx.report.check("witness", Verdict::Pass);
            write_out(&a.out, &codec::encode_layout(&l), &mut ctx.report, "layout")?;
        }
        Err(e) => {
            ctx.report.set("witness_error", e);
            ctx.report.check("witness", Verdict::Fail);
        }
    }
    Ok(())
}

fn check(ctx: &mut Ctx, a: &CheckArgs) -> Result<(), Failure> {
    if let Some(wp) = &a.wpe {
        let inst = ctx.wpe(wp)?;
        let map = ctx.map(&need(&a.map, "map")?)?;
        let report = check_uniform_emulation(&inst, &map).map_err(|e| Failure::Input(e.to_string()))?;
        if let Some(v) = &report.violation {
            ctx.report.set("violation", v);
        }
        ctx.report.check_bool("emulation", report.is_valid());
        return Ok(());
    }
    let k = need(&a.k, "k")?;
    let layout = ctx.layout(&need(&a.layout, "layout")?)?;
    if let Some(gp) = &a.graph {
        let text = ctx.read("graph", gp)?;
        let (g, _) = codec::decode_graph(&text).map_err(input(gp))?;
        let bw = bandwidth_of_layout(&g, &layout).map_err(|e| Failure::Input(e.to_string()))?;
        ctx.report.set("bandwidth", bw);
        ctx.report.set("k", k);
        ctx.report.check_bool("bandwidth_le_k", bw <= k);
        return Ok(());
    }
    let dp = need(&a.digraph, "graph or --digraph")?;
    let text = ctx.read("digraph", &dp)?;
    let (d, _) = codec::decode_digraph(&text).map_err(input(&dp))?;
    ctx.report.set("k", k);
    match directed_bandwidth_of_order(&d, &layout).map_err(|e| Failure::Input(e.to_string()))? {
        DirectedStretch::Feasible(s) => {
            ctx.report.set("directed_bandwidth", s);
            ctx.report.check("topological", Verdict::Pass);
            ctx.report.check_bool("directed_bandwidth_le_k", s <= k);
        }
        DirectedStretch::Infeasible { tail, head } => {
            ctx.report.set("backward_arc", format!("{} {}", tail + 1, head + 1));
            ctx.report.check("topological", Verdict::Fail);
        }
    }
    Ok(())
}

fn solve(ctx: &mut Ctx, a: &SolveArgs) -> Result<(), Failure> {
    let limits = ctx.limits;
    if let Some(wp) = &a.wpe {
        let inst = ctx.wpe(wp)?;
        let found = ctx.timed("solve", |_| match a.engine {
            Engine::Brute => solve_wpe_brute(&inst, limits),
            Engine::Dp => solve_wpe_dp(&inst, limits),
        })?;
        ctx.report.set("answer", if found.is_some() { "yes" } else { "no" });
        if let Some(f) = &found {
            ctx.report.set("map", codec::encode_map(f).trim_end());
            write_out(&a.out, &codec::encode_map(f), &mut ctx.report, "map")?;
        }
        ctx.report.check_bool("solved", found.is_some());
        return Ok(());
    }
    let (text, directed) = match (&a.graph, &a.digraph) {
        (Some(g), _) => (ctx.read("graph", g)?, false),
        (_, Some(d)) => (ctx.read("digraph", d)?, true),
        _ => return Err(Failure::Input("one of --wpe, --graph, --digraph is required".into())),
    };
    let layout = if directed {
        let (d, _) = codec::decode_digraph(&text).map_err(|e| Failure::Input(e.to_string()))?;
        let (k, l) = ctx.timed("solve", |_| directed_bandwidth_brute(&d, limits)).map_err(|e| match e {
            SolveError::Refused(r) => Failure::from(r),
            SolveError::Graph(g) => Failure::Input(g.to_string()),
        })?;
        ctx.report.set("directed_bandwidth", k);
        Some(l)
    } else {
        let (g, _) = codec::decode_graph(&text).map_err(|e| Failure::Input(e.to_string()))?;
        match (a.engine, a.k) {
            (Engine::Dp, Some(k)) => {
                let found = ctx.timed("solve", |_| bandwidth_decide_dp(&g, k, limits))?;
                ctx.report.set("k", k);
                ctx.report.set("answer", if found.is_some() { "yes" } else { "no" });
                found
            }
            (Engine::Dp, None) => return Err(Failure::Input("--engine dp on a graph needs --k".into())),
            (Engine::Brute, k) => {
                let (bw, l) = ctx.timed("solve", |_| bandwidth_brute(&g, limits))?;
                ctx.report.set("bandwidth", bw);
                match k {
                    Some(k) => {
                        ctx.report.set("answer", if bw <= k { "yes" } else { "no" });
                        (bw <= k).then_some(l)
                    }
                    None => Some(l),
                }
            }
        }
    };
    if let Some(l) = &layout {
        write_out(&a.out, &codec::encode_layout(l), &mut ctx.report, "layout")?;
    }
    ctx.report.check_bool("solved", layout.is_some());
    Ok(())
}

fn roundtrip(ctx: &mut Ctx, a: &RoundtripArgs) -> Result<(), Failure> {
    if let Some(fp) = &a.formula {
        let f = ctx.formula(fp)?;
        let k = need(&a.k, "k")?;
        let con = ctx.timed("reduce", |_| build_wpe_instance(&f, k, a.variant)).map_err(|e| Failure::Input(e.to_string()))?;
        report::wpe_construction_stats(&con, &mut ctx.report);
        let Some(assignment) = f.weighted_sat_oracle(k) else {
            ctx.report.set("satisfiable", false);
            ctx.report.check("assignment", Verdict::Fail);
            return Ok(());
        };
        ctx.report.set("assignment", assignment.vars().map(|v| v.to_string()).collect::<Vec<_>>().join(","));
        let map = ctx.timed("witness", |_| build_emulation_witness(&con, &assignment));
        match map {
            Ok(map) => {
                let ok = check_uniform_emulation(&con.instance, &map).map(|r| r.is_valid()).unwrap_or(false);
                ctx.report.check_bool("emulation", ok);
            }
            Err(e) => {
                ctx.report.set("witness_error", e);
                ctx.report.check("emulation", Verdict::Fail);
            }
        }
        return Ok(());
    }
    let inst = ctx.wpe(&need(&a.wpe, "wpe or --formula")?)?;
    let limits = ctx.limits;
    let Some(f) = ctx.timed("solve", |_| solve_wpe_brute(&inst, limits))? else {
        ctx.report.set("answer", "no");
        ctx.report.check("emulation", Verdict::Fail);
        return Ok(());
    };
    ctx.report.set("map", codec::encode_map(&f).trim_end());
    let inst = normalized(ctx, &inst)?;
    let cap = ctx.max_vertices;
    match a.target {
        Target::Bw => {
            let con = build_caterpillar_capped(&inst, cap).map_err(build_failure)?;
            report::caterpillar_stats(&con, &mut ctx.report);
            let layout = match ctx.timed("witness", |_| build_layout_witness(&con, &f)) {
                Ok(l) => l,
                Err(e) => {
                    ctx.report.set("witness_error", e);
                    ctx.report.check("witness", Verdict::Fail);
                    return Ok(());
                }
            };
            let bw = bandwidth_of_layout(&con.graph, &layout).map_err(|e| Failure::Input(e.to_string()))?;
            ctx.report.set("witness_bandwidth", bw);
            ctx.report.check_bool("witness_bandwidth_le_k", bw <= con.constants.k);
            match ctx.timed("extract", |_| extract_emulation(&con, &layout)) {
                Ok(x) => {
                    ctx.report.set("extracted_map", codec::encode_map(&x.map).trim_end());
                    ctx.report.check_bool("extracted_emulation", x.report.is_valid());
                }
                Err(e) => {
                    ctx.report.set("extract_error", e);
                    ctx.report.check("extracted_emulation", Verdict::Fail);
                }
            }
        }
        Target::Dbw => {
            let con = build_dag_capped(&inst, cap).map_err(build_failure)?;
            report::dag_stats(&con, &mut ctx.report);
            match ctx.timed("witness", |_| build_order_witness(&con, &f)) {
                Ok(l) => {
                    let s = directed_bandwidth_of_order(&con.digraph, &l).map_err(|e| Failure::Input(e.to_string()))?;
                    let ok = match s {
                        DirectedStretch::Feasible(x) => {
                            ctx.report.set("witness_directed_bandwidth", x);
                            x <= con.constants.k
                        }
                        DirectedStretch::Infeasible { tail, head } => {
                            ctx.report.set("backward_arc", format!("{} {}", tail + 1, head + 1));
                            false
                        }
                    };
                    ctx.report.check_bool("witness_directed_le_k", ok);
                }
                Err(e) => {
                    ctx.report.set("witness_error", e);
                    ctx.report.check("witness", Verdict::Fail);
                }
            }
        }
    }
    Ok(())
}

fn stats(ctx: &mut Ctx, a: &StatsArgs) -> Result<(), Failure> {
    let inst = if let Some(fp) = &a.formula {
        let f = ctx.formula(fp)?;
        let con = build_wpe_instance(&f, need(&a.k, "k")?, a.variant).map_err(|e| Failure::Input(e.to_string()))?;
        report::wpe_construction_stats(&con, &mut ctx.report);
        con.instance
    } else {
        let inst = ctx.wpe(&need(&a.wpe, "wpe or --formula")?)?;
        report::instance_stats(&inst, &mut ctx.report);
        inst
    };
    let Some(target) = a.target else { return Ok(()) };
    let inst = normalized(ctx, &inst)?;
    let cap = ctx.max_vertices;
    match target {
        Target::Bw => {
            let cs = CaterpillarConstants::new(&inst).map_err(|e| Failure::Input(e.to_string()))?;
            if cs.vertices > cap {
                ctx.report.set("bw.b", cs.b);
                ctx.report.set("bw.k", cs.k);
                ctx.report.set("bw.alpha_formula", cs.alpha);
                ctx.report.set("bw.filler_len", cs.filler_len);
                ctx.report.set("graph.vertices", cs.vertices);
                ctx.report.set("refusal", format!("construction of {} vertices exceeds the limit of {cap}", cs.vertices));
                ctx.report.check("size_guard", Verdict::Refused);
                return Ok(());
            }
            let con = build_caterpillar_capped(&inst.with_pins(bwlab::wpe::Pins { first: Some(bwlab::wpe::End::M), last: None }), cap)
                .map_err(build_failure)?;
            report::caterpillar_stats(&con, &mut ctx.report);
        }
        Target::Dbw => {
            let cs = DagConstants::new(&inst).map_err(|e| Failure::Input(e.to_string()))?;
            if cs.vertices > cap {
                ctx.report.set("dbw.b", cs.b);
                ctx.report.set("dbw.k", cs.k);
                ctx.report.set("dbw.alpha_formula", cs.alpha);
                ctx.report.set("graph.vertices", cs.vertices);
                ctx.report.set("refusal", format!("construction of {} vertices exceeds the limit of {cap}", cs.vertices));
                ctx.report.check("size_guard", Verdict::Refused);
                return Ok(());
            }
            let pins = bwlab::wpe::Pins { first: Some(bwlab::wpe::End::M), last: Some(bwlab::wpe::End::M) };
            let con = build_dag_capped(&inst.with_pins(pins), cap).map_err(build_failure)?;
            report::dag_stats(&con, &mut ctx.report);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = match &cli.command {
        Command::ReduceSatWpe(_) => "reduce-sat-wpe",
        Command::ReduceWpeBw(_) => "reduce-wpe-bw",
        Command::ReduceWpeDbw(_) => "reduce-wpe-dbw",
        Command::Witness(_) => "witness",
        Command::Check(_) => "check",
        Command::Solve(_) => "solve",
        Command::Roundtrip(_) => "roundtrip",
        Command::Stats(_) => "stats",
    };
    let mut limits = SearchLimits::new(cli.max_nodes);
    limits.max_vertices = cli.max_solver_vertices;
    let mut ctx = Ctx { limits, max_vertices: cli.max_vertices, report: Report::new(name) };
    let outcome = match &cli.command {
        Command::ReduceSatWpe(a) => reduce_sat(&mut ctx, a),
        Command::ReduceWpeBw(a) => reduce_bw(&mut ctx, a),
        Command::ReduceWpeDbw(a) => reduce_dbw(&mut ctx, a),
        Command::Witness(a) => witness(&mut ctx, a),
        Command::Check(a) => check(&mut ctx, a),
        Command::Solve(a) => solve(&mut ctx, a),
        Command::Roundtrip(a) => roundtrip(&mut ctx, a),
        Command::Stats(a) => stats(&mut ctx, a),
    };
    match outcome {
        Ok(()) => {}
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Refused(msg)) => {
            ctx.report.set("refusal", msg);
            ctx.report.check("size_guard", Verdict::Refused);
        }
    }
    print!("{}", ctx.report.render(cli.deterministic));
    ExitCode::from(match ctx.report.verdict() {
        Verdict::Pass => 0,
        Verdict::Fail => 1,
        Verdict::Refused => 3,
    })
}
