//! The `ggl` command line.
//!
//! Exit status: 0 on success, 1 when a verification finds a mismatch,
//! 2 on usage, parse, guard or I/O errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::closed_forms;
use crate::convexity::{self, ClosureKind, ConvexityReport, Limits};
use crate::error::{Error, Result};
use crate::families::parse_family_spec;
use crate::game::{self, BruteSolver, Engine, FastSolver, GameKind, GameSpec, Nimber, Solver};
use crate::graph::{self, Graph};
use crate::search::{self, SearchConfig};
use crate::structure::StructureDigraph;
use crate::verify;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Environment variable that lowers the vertex cap.
pub const MAX_VERTICES_ENV: &str = "GGL_MAX_VERTICES";

#[derive(Parser, Debug)]
#[command(
    name = "ggl",
    version,
    about = "Geodetic achievement and avoidance games on graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Largest set family an enumeration may build.
    #[arg(long, default_value_t = Limits::default().max_family, global = true)]
    max_family: usize,

    /// Largest graph the exact-set engine accepts.
    #[arg(long, default_value_t = Limits::default().max_brute_vertices, global = true)]
    max_brute_vertices: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    /// Graph description, e.g. `grid:3x4` or `corona(multipartite:2,3)`.
    #[arg(long)]
    family: Option<String>,

    /// Graph file: `n <count>` then one `u v` line per edge.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct GameArgs {
    #[arg(long, default_value = "dng", value_parser = parse_game)]
    game: GameKind,

    #[arg(long, default_value = "hull", value_parser = parse_closure)]
    closure: ClosureKind,
}

fn parse_game(s: &str) -> std::result::Result<GameKind, String> {
    s.parse()
}

fn parse_closure(s: &str) -> std::result::Result<ClosureKind, String> {
    s.parse()
}

fn parse_engine(s: &str) -> std::result::Result<Engine, String> {
    s.parse()
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Nim-number of a game, with a winning first move.
    Nim {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        game: GameArgs,
        /// structure, fast or brute; by default the first that fits the limits.
        #[arg(long, value_parser = parse_engine)]
        engine: Option<Engine>,
    },
    /// Simplicial vertices and the maximal nongenerating, minimal generating,
    /// Frattini and intersection sets.
    Analyze {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "hull", value_parser = parse_closure)]
        closure: ClosureKind,
        /// Report both closures and compare them.
        #[arg(long)]
        both_closures: bool,
    },
    /// Structure diagram in DOT.
    Diagram {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        game: GameArgs,
        /// Merge equivalent classes.
        #[arg(long)]
        simplified: bool,
        /// Write the DOT text here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the closed forms for the standard families against the
    /// structure engine.
    Table1 {
        /// Only these rows (cycle, hypercube, grid, multipartite, wheel,
        /// genwheel, split, corona, block).
        #[arg(long)]
        row: Vec<String>,
        #[arg(long, hide = true)]
        inject_failure: bool,
    },
    /// Cross-check the engines and the graph-operation laws.
    Verify {
        #[command(subcommand)]
        mode: VerifyMode,
    },
    /// Random search for graphs with a given nim-number.
    Search {
        #[command(flatten)]
        game: GameArgs,
        #[arg(long, default_value_t = 0)]
        target_nim: u32,
        #[arg(long, default_value_t = 9)]
        vertices: usize,
        #[arg(long, default_value_t = 10_000)]
        iterations: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Edge probability of the random graphs.
        #[arg(long, default_value_t = verify::DEFAULT_EDGE_PROBABILITY)]
        p: f64,
        #[arg(long)]
        diameter2: bool,
        #[arg(long)]
        geodetic_only: bool,
        #[arg(long, default_value_t = 1)]
        max_witnesses: usize,
        /// Directory for witness graph files.
        #[arg(long)]
        out_dir: Option<PathBuf>,
        /// Instead of searching, run a probe (`union-odd`).
        #[arg(long)]
        probe: Option<Probe>,
        /// Pairs sampled by the probe.
        #[arg(long, default_value_t = 50)]
        pairs: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Probe {
    UnionOdd,
}

#[derive(Subcommand, Debug)]
enum VerifyMode {
    /// Every labeled connected graph up to a size.
    Exhaustive {
        #[arg(long, default_value_t = 5)]
        max_vertices: usize,
        /// Permit seven vertices (about two million graphs).
        #[arg(long)]
        allow_seven: bool,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Seeded random connected graphs.
    Random {
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 9)]
        vertices: usize,
        /// Smallest order; defaults to `--vertices`.
        #[arg(long)]
        min_vertices: Option<usize>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = verify::DEFAULT_EDGE_PROBABILITY)]
        p: f64,
    },
}

/// Parses arguments and runs; returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli) {
        Ok(Outcome { text, passed }) => {
            print!("{text}");
            if passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

pub fn main() -> i32 {
    run(std::env::args_os())
}

struct Outcome {
    text: String,
    passed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, passed: true }
    }
}

fn vertex_cap() -> Result<usize> {
    match std::env::var(MAX_VERTICES_ENV) {
        Ok(v) => {
            let cap: usize = v.trim().parse().map_err(|_| Error::InvalidParameter {
                family: MAX_VERTICES_ENV.into(),
                constraint: "a positive integer".into(),
            })?;
            if cap > MAX_VERTICES {
                eprintln!(
                    "warning: {MAX_VERTICES_ENV}={cap} exceeds the hard cap, using {MAX_VERTICES}"
                );
            }
            Ok(cap.min(MAX_VERTICES))
        }
        Err(_) => Ok(MAX_VERTICES),
    }
}

fn load(source: &Source) -> Result<(Graph, String)> {
    let (g, name) = match (&source.family, &source.file) {
        (Some(spec), _) => (parse_family_spec(spec)?.build()?, spec.clone()),
        (None, Some(path)) => (graph::read_graph_file(path)?, path.display().to_string()),
        (None, None) => unreachable!("clap enforces one graph source"),
    };
    let cap = vertex_cap()?;
    if g.order() > cap {
        return Err(Error::TooManyVertices { n: g.order(), cap });
    }
    Ok((g, name))
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let limits = Limits {
        max_family: cli.max_family,
        max_brute_vertices: cli.max_brute_vertices,
    };
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Nim {
            source,
            game,
            engine,
        } => cmd_nim(
            source,
            GameSpec::new(game.game, game.closure),
            *engine,
            &limits,
            json,
        ),
        Command::Analyze {
            source,
            closure,
            both_closures,
        } => cmd_analyze(source, *closure, *both_closures, &limits, json),
        Command::Diagram {
            source,
            game,
            simplified,
            out,
        } => cmd_diagram(
            source,
            GameSpec::new(game.game, game.closure),
            *simplified,
            out.as_ref(),
            &limits,
            json,
        ),
        Command::Table1 {
            row,
            inject_failure,
        } => cmd_table1(row, *inject_failure, &limits, json),
        Command::Verify { mode } => cmd_verify(mode, &limits, json),
        Command::Search {
            game,
            target_nim,
            vertices,
            iterations,
            seed,
            p,
            diameter2,
            geodetic_only,
            max_witnesses,
            out_dir,
            probe,
            pairs,
        } => {
            if !(0.0..=1.0).contains(p) {
                return Err(Error::InvalidParameter {
                    family: "search".into(),
                    constraint: "0 <= p <= 1".into(),
                });
            }
            if *vertices == 0 || *vertices > vertex_cap()? {
                return Err(Error::TooManyVertices {
                    n: *vertices,
                    cap: vertex_cap()?,
                });
            }
            if probe.is_some() {
                return cmd_probe(*pairs, *vertices, *seed, *p, &limits, json);
            }
            let cfg = SearchConfig {
                spec: GameSpec::new(game.game, game.closure),
                target: Nimber(*target_nim),
                vertices: *vertices,
                iterations: *iterations,
                seed: *seed,
                edge_probability: *p,
                diameter2: *diameter2,
                geodetic_only: *geodetic_only,
                max_witnesses: *max_witnesses,
            };
            cmd_search(&cfg, out_dir.as_ref(), &limits, json)
        }
    }
}

fn first_winning_move(g: &Graph, spec: GameSpec, limits: &Limits) -> Result<Option<usize>> {
    match FastSolver::new(g, spec, limits) {
        Ok(mut s) => Ok(s.winning_move(VertexSet::EMPTY)),
        Err(Error::Guard { .. }) => {
            Ok(BruteSolver::new(g, spec, limits)?.winning_move(VertexSet::EMPTY))
        }
        Err(e) => Err(e),
    }
}

fn cmd_nim(
    source: &Source,
    spec: GameSpec,
    engine: Option<Engine>,
    limits: &Limits,
    json: bool,
) -> Result<Outcome> {
    let (g, name) = load(source)?;
    let start = Instant::now();
    let (nim, engine) = match engine {
        Some(e) => (game::nim_with(&g, spec, e, limits)?, e),
        None => game::nim_auto(&g, spec, limits)?,
    };
    let elapsed = start.elapsed().as_secs_f64() * 1e3;
    let mv = if nim == Nimber::ZERO {
        None
    } else {
        first_winning_move(&g, spec, limits)?
    };
    let text = if json {
        json!({
            "graph": name,
            "order": g.order(),
            "edges": g.edge_count(),
            "game": spec.game,
            "closure": spec.closure,
            "nim": nim,
            "winning_move": mv,
            "engine": engine,
            "elapsed_ms": elapsed,
        })
        .to_string()
            + "\n"
    } else {
        let mv = mv.map_or("none".to_string(), |v| {
            format!("{} (vertex {v})", g.label(v))
        });
        format!(
            "graph: {name} ({} vertices, {} edges)\ngame: {spec}\nnim: {nim}\nwinning move: {mv}\nengine: {engine}\ntime: {elapsed:.2} ms\n",
            g.order(),
            g.edge_count()
        )
    };
    Ok(Outcome::ok(text))
}

fn operators_agree(g: &Graph) -> Option<bool> {
    (g.order() <= 20).then(|| {
        (0..1u32 << g.order()).all(|b| {
            let p = VertexSet::from_bits(b);
            convexity::geodetic_closure(g, p) == convexity::convex_hull(g, p)
        })
    })
}

fn report_text(g: &Graph, r: &ConvexityReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "[{}]", r.kind);
    let _ = writeln!(
        s,
        "maximal nongenerating ({}): {}",
        r.maximal_nongenerating.len(),
        r.maximal_nongenerating.format(g)
    );
    let _ = writeln!(
        s,
        "minimal generating ({}): {}",
        r.minimal_generating.len(),
        r.minimal_generating.format(g)
    );
    let _ = writeln!(s, "frattini: {}", g.format_set(r.frattini));
    let _ = writeln!(s, "intersection sets: {}", r.intersection_sets.len());
    s
}

fn cmd_analyze(
    source: &Source,
    closure: ClosureKind,
    both: bool,
    limits: &Limits,
    json: bool,
) -> Result<Outcome> {
    let (g, name) = load(source)?;
    let kinds: Vec<ClosureKind> = if both {
        ClosureKind::BOTH.to_vec()
    } else {
        vec![closure]
    };
    let reports = kinds
        .iter()
        .map(|&k| ConvexityReport::compute(&g, k, limits))
        .collect::<Result<Vec<_>>>()?;
    let comparison = if both {
        let nims = |kind| -> Result<Vec<Nimber>> {
            GameKind::BOTH
                .iter()
                .map(|&game| Ok(game::nim_auto(&g, GameSpec::new(game, kind), limits)?.0))
                .collect()
        };
        let hull_nims = nims(ClosureKind::Hull)?;
        let geo_nims = nims(ClosureKind::Geodetic)?;
        Some((
            operators_agree(&g),
            reports[0].maximal_nongenerating == reports[1].maximal_nongenerating,
            reports[0].minimal_generating == reports[1].minimal_generating,
            hull_nims,
            geo_nims,
        ))
    } else {
        None
    };
    let simplicial = convexity::simplicial_vertices(&g);
    let text = if json {
        let mut v = json!({
            "graph": name,
            "order": g.order(),
            "edges": g.edge_count(),
            "simplicial": simplicial,
            "closures": reports,
        });
        if let Some((ops, n_eq, g_eq, h, geo)) = &comparison {
            v["comparison"] = json!({
                "operators_equal": ops,
                "maximal_nongenerating_equal": n_eq,
                "minimal_generating_equal": g_eq,
                "nim_hull": {"DNG": h[0], "GEN": h[1]},
                "nim_geodetic": {"DNG": geo[0], "GEN": geo[1]},
                "games_equal": h == geo,
            });
        }
        v.to_string() + "\n"
    } else {
        let mut s = format!(
            "graph: {name} ({} vertices, {} edges)\nsimplicial: {}\n",
            g.order(),
            g.edge_count(),
            g.format_set(simplicial)
        );
        for r in &reports {
            s.push_str(&report_text(&g, r));
        }
        if let Some((ops, n_eq, g_eq, h, geo)) = &comparison {
            let verdict = |b: bool| if b { "equal" } else { "differ" };
            let ops = match ops {
                Some(b) => verdict(*b),
                None => "not checked (more than 20 vertices)",
            };
            let _ = writeln!(s, "[comparison]");
            let _ = writeln!(s, "operators: {ops}");
            let _ = writeln!(s, "maximal nongenerating families: {}", verdict(*n_eq));
            let _ = writeln!(s, "minimal generating families: {}", verdict(*g_eq));
            let _ = writeln!(s, "nim hull: DNG {} GEN {}", h[0], h[1]);
            let _ = writeln!(s, "nim geodetic: DNG {} GEN {}", geo[0], geo[1]);
            let _ = writeln!(s, "games: {}", verdict(h == geo));
        }
        s
    };
    Ok(Outcome::ok(text))
}

fn cmd_diagram(
    source: &Source,
    spec: GameSpec,
    simplified: bool,
    out: Option<&PathBuf>,
    limits: &Limits,
    json: bool,
) -> Result<Outcome> {
    let (g, name) = load(source)?;
    let d = StructureDigraph::build(&g, spec, limits)?;
    let (dot, nodes) = if simplified {
        let s = d.simplify();
        (s.to_dot(), s.len())
    } else {
        (d.to_dot(), d.len())
    };
    let nim = d.game_nim();
    if let Some(path) = out {
        std::fs::write(path, &dot)?;
    }
    let text = if json {
        let mut v = json!({
            "graph": name,
            "game": spec.game,
            "closure": spec.closure,
            "nim": nim,
            "nodes": nodes,
            "simplified": simplified,
        });
        match out {
            Some(p) => v["out"] = json!(p.display().to_string()),
            None => v["dot"] = json!(dot),
        }
        v.to_string() + "\n"
    } else {
        match out {
            Some(p) => format!("nim: {nim}\nnodes: {nodes}\nwrote {}\n", p.display()),
            None => {
                eprintln!("nim: {nim}");
                dot
            }
        }
    };
    Ok(Outcome::ok(text))
}

fn cmd_table1(
    rows: &[String],
    inject_failure: bool,
    limits: &Limits,
    json: bool,
) -> Result<Outcome> {
    let mut cases = closed_forms::table1_cases();
    if !rows.is_empty() {
        cases.retain(|c| rows.iter().any(|r| r == c.row));
    }
    let start = Instant::now();
    let cells = closed_forms::table1(&cases, limits, inject_failure);
    let passed = cells.iter().all(|c| c.ok);
    let good = cells.iter().filter(|c| c.ok).count();
    let text = if json {
        serde_json::to_string(&cells).expect("serializable") + "\n"
    } else {
        let width = cells
            .iter()
            .map(|c| c.param.len())
            .max()
            .unwrap_or(5)
            .max(5);
        let mut s = format!(
            "{:<13} {:<width$} {:<4} {:>8} {:>8}  ok\n",
            "row", "param", "game", "expected", "computed"
        );
        for c in &cells {
            let computed = c
                .computed
                .map_or_else(|| "-".to_string(), |v| v.to_string());
            let _ = writeln!(
                s,
                "{:<13} {:<width$} {:<4} {:>8} {:>8}  {}",
                c.row,
                c.param,
                c.game,
                c.expected,
                computed,
                if c.ok { "yes" } else { "NO" }
            );
            if let Some(e) = &c.error {
                let _ = writeln!(s, "    error: {e}");
            }
        }
        let _ = writeln!(
            s,
            "{good}/{} cells match ({:.1} s, {} workers)",
            cells.len(),
            start.elapsed().as_secs_f64(),
            rayon::current_num_threads()
        );
        if cells.iter().any(|c| c.row == "block") {
            s.push_str("note: the block row accepts any graph whose blocks are cliques\n");
        }
        s
    };
    Ok(Outcome { text, passed })
}

fn cmd_verify(mode: &VerifyMode, limits: &Limits, json: bool) -> Result<Outcome> {
    let (report, recipe) = match mode {
        VerifyMode::Exhaustive {
            max_vertices,
            allow_seven,
            seed,
        } => {
            let cap = if *allow_seven { 7 } else { 6 };
            if *max_vertices > cap {
                return Err(Error::Guard {
                    what: "exhaustive enumeration vertex count",
                    limit: cap,
                });
            }
            if *max_vertices == 7 {
                eprintln!(
                    "enumerating labeled connected graphs on up to 7 vertices, this takes a while"
                );
            }
            (
                verify::exhaustive(*max_vertices, *seed, limits)?,
                format!("ggl verify exhaustive --max-vertices {max_vertices} --seed {seed}"),
            )
        }
        VerifyMode::Random {
            count,
            vertices,
            min_vertices,
            seed,
            p,
        } => {
            let min = min_vertices.unwrap_or(*vertices);
            if min == 0
                || min > *vertices
                || *vertices > limits.max_brute_vertices.min(vertex_cap()?)
            {
                return Err(Error::InvalidParameter {
                    family: "verify random".into(),
                    constraint: "1 <= min-vertices <= vertices <= brute-force limit".into(),
                });
            }
            if !(0.0..=1.0).contains(p) {
                return Err(Error::InvalidParameter {
                    family: "verify random".into(),
                    constraint: "0 <= p <= 1".into(),
                });
            }
            (
                verify::random(*count, min, *vertices, *seed, *p, limits)?,
                format!("ggl verify random --count {count} --vertices {vertices} --min-vertices {min} --seed {seed} --p {p}"),
            )
        }
    };
    let passed = report.passed();
    let text = if json {
        serde_json::to_string(&report).expect("serializable") + "\n"
    } else {
        let mut s = format!(
            "{}: {} graphs, {} law checks, {} mismatches (seed {}, p = {}, {} workers)\n",
            report.mode,
            report.graphs,
            report.law_checks,
            report.mismatches.len(),
            report.seed,
            report.edge_probability,
            report.workers
        );
        for m in &report.mismatches {
            let _ = writeln!(s, "MISMATCH {}: {}\n{}", m.check, m.detail, m.graph);
        }
        if !passed {
            let _ = writeln!(s, "reproduce with: {recipe}");
            s.push_str("or save a graph above to a file and run `ggl nim --file <path>` with each engine\n");
        }
        s
    };
    Ok(Outcome { text, passed })
}

fn cmd_search(
    cfg: &SearchConfig,
    out_dir: Option<&PathBuf>,
    limits: &Limits,
    json: bool,
) -> Result<Outcome> {
    let report = search::search(cfg, limits)?;
    let mut files = Vec::new();
    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir)?;
        for (i, w) in report.witnesses.iter().enumerate() {
            let path = dir.join(format!(
                "{}-nim{}-n{}-{i}.txt",
                cfg.spec.game.name().to_lowercase(),
                w.nim,
                cfg.vertices
            ));
            std::fs::write(
                &path,
                format!("# {} nim {} ({})\n{}", cfg.spec, w.nim, w.source, w.graph),
            )?;
            files.push(path.display().to_string());
        }
    }
    let text = if json {
        let mut v = serde_json::to_value(&report).expect("serializable");
        v["files"] = json!(files);
        v.to_string() + "\n"
    } else {
        let mut s = format!(
            "searched {} graphs on {} vertices for {} nim {} (seed {}, p = {})\n",
            report.tried,
            report.vertices,
            cfg.spec,
            cfg.target,
            report.seed,
            report.edge_probability
        );
        if report.witnesses.is_empty() {
            s.push_str("no witness found\n");
        }
        for w in &report.witnesses {
            let _ = writeln!(s, "witness ({}):\n{}", w.source, w.graph);
        }
        for f in &files {
            let _ = writeln!(s, "wrote {f}");
        }
        s
    };
    Ok(Outcome::ok(text))
}

fn cmd_probe(
    pairs: usize,
    max_vertices: usize,
    seed: u64,
    p: f64,
    limits: &Limits,
    json: bool,
) -> Result<Outcome> {
    let max_vertices = max_vertices.min(9);
    let r = search::probe_union_odd(pairs, max_vertices, seed, p, limits)?;
    let text = if json {
        serde_json::to_string(&r).expect("serializable") + "\n"
    } else {
        let mut s = format!(
            "union-odd probe: {} pairs of odd graphs with DNG nim 0 (up to {max_vertices} vertices, seed {seed})\n",
            r.pairs
        );
        if r.counterexamples.is_empty() {
            s.push_str("counterexample: none\n");
        }
        for [a, b] in &r.counterexamples {
            let _ = writeln!(s, "counterexample:\n{a}--\n{b}");
        }
        s
    };
    Ok(Outcome::ok(text))
}
