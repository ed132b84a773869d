//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.
//!
//! Expected values are either quoted from the source material (named
//! examples, fixture families) or computed here by brute-force oracles that
//! share no code with the library's engines.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use geodetic_games::closed_forms::{self, expected_family_n, expected_frattini};
use geodetic_games::convexity::{self, ClosureKind, Limits, SetFamily};
use geodetic_games::families::FamilySpec;
use geodetic_games::game::{self, Engine, GameKind, GameSpec, Nimber};
use geodetic_games::graph::Graph;
use geodetic_games::structure::{ClassParity, StructureDigraph};
use geodetic_games::verify;
use geodetic_games::VertexSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const LIMITS: Limits = Limits {
    max_family: 1 << 20,
    max_brute_vertices: 22,
};

// Wall-clock budgets. Generous next to the measured times so that a slow
// machine does not fail the suite.
const BUDGET_NAMED: Duration = Duration::from_secs(1);
const BUDGET_TABLE: Duration = Duration::from_secs(300);
const BUDGET_ENGINES: Duration = Duration::from_secs(120);
const PROPERTY_CASES: usize = 10_000;

fn main() {
    let criteria: [Criterion; 7] = [
        ("named examples", named_examples),
        ("summary table", summary_table),
        ("engine equivalence", engine_equivalence),
        ("family structures", family_structures),
        ("graph-operation laws", operation_laws),
        ("operator divergence", operator_divergence),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(note) => println!("PASS {} {name}: {note} ({secs:.2} s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why} ({secs:.2} s)", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= budget, || format!("took {t:?}, budget {budget:?}"))
}

fn spec(text: &str) -> FamilySpec {
    text.parse().expect("valid family spec")
}

fn build(text: &str) -> Graph {
    spec(text).build().expect("family builds")
}

// 1-based vertex lists, as the fixtures are labelled.
fn set1(vs: &[usize]) -> VertexSet {
    vs.iter().map(|v| v - 1).collect()
}

fn fam1(n: usize, sets: &[&[usize]]) -> SetFamily {
    SetFamily::new(n, sets.iter().map(|s| set1(s)))
}

// ---------------------------------------------------------------- oracles

/// Distances by breadth-first search; `None` between components.
fn bfs_distances(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.order();
    (0..n)
        .map(|s| {
            let mut d = vec![None; n];
            d[s] = Some(0);
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in g.neighbors(u) {
                    if d[v].is_none() {
                        d[v] = Some(d[u].unwrap() + 1);
                        queue.push_back(v);
                    }
                }
            }
            d
        })
        .collect()
}

/// Closure operators computed from scratch on bitmasks.
struct Oracle {
    n: usize,
    /// `between[u][v]`: vertices on some geodesic from `u` to `v`.
    between: Vec<Vec<u32>>,
}

impl Oracle {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let d = bfs_distances(g);
        let between = (0..n)
            .map(|u| {
                (0..n)
                    .map(|v| {
                        match d[u][v] {
                        None => (1 << u) | (1 << v),
                        Some(duv) => (0..n)
                            .filter(|&w| {
                                matches!((d[u][w], d[w][v]), (Some(a), Some(b)) if a + b == duv)
                            })
                            .fold(0, |m, w| m | 1 << w),
                    }
                    })
                    .collect()
            })
            .collect();
        Oracle { n, between }
    }

    fn full(&self) -> u32 {
        (1u32 << self.n) - 1
    }

    fn geodetic(&self, p: u32) -> u32 {
        let vs: Vec<usize> = (0..self.n).filter(|&v| p >> v & 1 == 1).collect();
        let mut out = 0;
        for &u in &vs {
            for &v in &vs {
                out |= self.between[u][v];
            }
        }
        out
    }

    fn hull(&self, p: u32) -> u32 {
        let mut s = p;
        loop {
            let t = self.geodetic(s);
            if t == s {
                return s;
            }
            s = t;
        }
    }

    fn close(&self, p: u32, kind: ClosureKind) -> u32 {
        match kind {
            ClosureKind::Hull => self.hull(p),
            ClosureKind::Geodetic => self.geodetic(p),
        }
    }

    fn generating_table(&self, kind: ClosureKind) -> Vec<bool> {
        (0..1u32 << self.n)
            .map(|p| self.close(p, kind) == self.full())
            .collect()
    }
}

fn max_nongenerating_oracle(n: usize, gen: &[bool]) -> SetFamily {
    SetFamily::new(
        n,
        (0..1u32 << n)
            .filter(|&p| {
                !gen[p as usize] && (0..n).all(|v| p >> v & 1 == 1 || gen[(p | 1 << v) as usize])
            })
            .map(VertexSet::from_bits),
    )
}

fn min_generating_oracle(n: usize, gen: &[bool]) -> SetFamily {
    SetFamily::new(
        n,
        (0..1u32 << n)
            .filter(|&p| {
                gen[p as usize] && (0..n).all(|v| p >> v & 1 == 0 || !gen[(p & !(1 << v)) as usize])
            })
            .map(VertexSet::from_bits),
    )
}

/// Nim-number of the empty position by plain recursion over all subsets.
/// Every option adds a bit, so descending mask order visits options first.
fn nim_oracle(n: usize, gen: &[bool], game: GameKind) -> u32 {
    let size = 1usize << n;
    let mut nim = vec![0u32; size];
    for p in (0..size).rev() {
        let legal = match game {
            GameKind::Dng => !gen[p],
            GameKind::Gen => true,
        };
        if !legal || (game == GameKind::Gen && gen[p]) {
            continue;
        }
        let mut seen = 0u64;
        for v in 0..n {
            let q = p | 1 << v;
            if q == p || (game == GameKind::Dng && gen[q]) {
                continue;
            }
            seen |= 1 << nim[q];
        }
        nim[p] = seen.trailing_ones();
    }
    nim[0]
}

fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect::<Vec<_>>()
        .into_iter()
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, &edges).unwrap()
}

/// Random graph on `1..=max` vertices with a random edge density.
fn draw(rng: &mut impl Rng, max: usize) -> (usize, Graph) {
    let n = rng.gen_range(1..=max);
    let p = rng.gen_range(0.15..0.9);
    (n, random_graph(rng, n, p))
}

// ------------------------------------------------------------- criterion 1

fn named_examples() -> Outcome {
    let start = Instant::now();
    // (graph, DNG, GEN); None where only one game is given
    let cases: Vec<(&str, Graph, Option<u32>, Option<u32>)> = vec![
        ("trivial", build("path:1"), Some(0), Some(1)),
        ("K2", build("path:2"), Some(1), Some(0)),
        (
            "two isolated vertices",
            Graph::new(2, &[]).unwrap(),
            Some(1),
            Some(0),
        ),
        ("diamond", build("diamond"), Some(1), Some(0)),
        ("4-pan", build("pan:4"), Some(2), Some(0)),
        ("W5", build("wheel:5"), Some(1), Some(2)),
        ("Petersen", build("petersen"), Some(1), Some(0)),
        ("nim-7 graph", build("fig-nim7"), Some(7), None),
        (
            "C4 + P2",
            build("cliquesum(cycle:4@0,path:2@0)"),
            Some(2),
            Some(0),
        ),
        (
            "C4 + P3",
            build("cliquesum(cycle:4@0,path:3@0)"),
            Some(3),
            Some(3),
        ),
        (
            "C4 + P4",
            build("cliquesum(cycle:4@0,path:4@0)"),
            Some(2),
            Some(0),
        ),
        (
            "C4 + P5",
            build("cliquesum(cycle:4@0,path:5@0)"),
            Some(3),
            Some(3),
        ),
    ];
    for (name, g, dng, gen) in &cases {
        for (game, want) in [(GameKind::Dng, dng), (GameKind::Gen, gen)] {
            let Some(want) = want else { continue };
            let (got, _) =
                game::nim_auto(g, GameSpec::hull(game), &LIMITS).map_err(|e| e.to_string())?;
            ensure(got == Nimber(*want), || {
                format!("{name} {game}: {got}, expected {want}")
            })?;
        }
    }
    within(start, BUDGET_NAMED)?;
    Ok(format!("{} graphs", cases.len()))
}

// ------------------------------------------------------------- criterion 2

fn summary_table() -> Outcome {
    let start = Instant::now();
    let cases = closed_forms::table1_cases();
    let rows: HashSet<&str> = cases.iter().map(|c| c.row).collect();
    ensure(rows.len() == 9, || format!("{} rows", rows.len()))?;
    let cells = closed_forms::table1(&cases, &LIMITS, false);
    let bad: Vec<String> = cells
        .iter()
        .filter(|c| !c.ok)
        .map(|c| {
            format!(
                "{} {} {}: {:?} vs {}",
                c.row, c.param, c.game, c.computed, c.expected
            )
        })
        .collect();
    ensure(bad.is_empty(), || bad.join("; "))?;
    within(start, BUDGET_TABLE)?;
    Ok(format!("{} cells", cells.len()))
}

// ------------------------------------------------------------- criterion 3

fn engine_equivalence() -> Outcome {
    let start = Instant::now();
    let mut graphs: Vec<Graph> = (1..=5).flat_map(verify::labeled_connected_graphs).collect();
    let exhaustive = graphs.len();
    graphs.extend(verify::random_graphs(
        200,
        6,
        9,
        42,
        verify::DEFAULT_EDGE_PROBABILITY,
    ));
    for g in &graphs {
        let oracle = Oracle::new(g);
        for spec in GameSpec::all() {
            let gen = oracle.generating_table(spec.closure);
            let want = Nimber(nim_oracle(g.order(), &gen, spec.game));
            for engine in [Engine::Brute, Engine::Fast, Engine::Structure] {
                let got = game::nim_with(g, spec, engine, &LIMITS).map_err(|e| e.to_string())?;
                ensure(got == want, || {
                    format!(
                        "{spec} {engine}: {got} vs oracle {want} on {}",
                        g.to_edge_list()
                    )
                })?;
            }
        }
    }
    within(start, BUDGET_ENGINES)?;
    Ok(format!(
        "{exhaustive} exhaustive + 200 random graphs, 4 games each"
    ))
}

// ------------------------------------------------------------- criterion 4

fn family_specs() -> Vec<String> {
    let mut out = Vec::new();
    out.extend((3..=10).map(|n| format!("cycle:{n}")));
    out.extend((2..=4).map(|n| format!("hypercube:{n}")));
    out.push("lattice:2,2".into());
    for m in 2..=4 {
        for n in m.max(3)..=5 {
            out.push(format!("grid:{m}x{n}"));
        }
    }
    for total in 2..=8 {
        out.extend(partitions(total).into_iter().map(|p| {
            let p: Vec<String> = p.iter().map(|x| x.to_string()).collect();
            format!("multipartite:{}", p.join(","))
        }));
    }
    out.extend((5..=9).map(|n| format!("wheel:{n}")));
    for m in 2..=3 {
        for n in 3..=6 {
            out.push(format!("genwheel:{m},{n}"));
        }
    }
    out
}

fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            if cur.len() >= 2 {
                out.push(cur.clone());
            }
            return;
        }
        for p in min..=rest {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 1, &mut Vec::new(), &mut out);
    out
}

/// `𝒢` must be exactly the minimal sets contained in no member of `𝒩`.
fn check_g_against_n(g_fam: &SetFamily, n_fam: &SetFamily, order: usize) -> bool {
    let generates = |p: VertexSet| !n_fam.iter().any(|m| p.is_subset(m));
    if order <= 16 {
        let all = (0..1u32 << order)
            .map(VertexSet::from_bits)
            .filter(|&p| generates(p) && p.iter().all(|v| !generates(p.without(v))));
        return *g_fam == SetFamily::new(order, all);
    }
    g_fam
        .iter()
        .all(|p| generates(p) && p.iter().all(|v| !generates(p.without(v))))
}

fn family_structures() -> Outcome {
    let mut checked = 0;
    for text in family_specs() {
        let s = spec(&text);
        let g = s.build().map_err(|e| e.to_string())?;
        let n_fam = convexity::maximal_nongenerating(&g, ClosureKind::Hull, &LIMITS)
            .map_err(|e| e.to_string())?;
        let g_fam = convexity::minimal_generating(&g, ClosureKind::Hull, &LIMITS)
            .map_err(|e| e.to_string())?;
        let phi = convexity::frattini(&g, ClosureKind::Hull, &LIMITS).map_err(|e| e.to_string())?;
        let want_n =
            expected_family_n(&s).ok_or_else(|| format!("{text}: no construction for N"))?;
        let want_phi =
            expected_frattini(&s).ok_or_else(|| format!("{text}: no construction for Phi"))?;
        ensure(n_fam == want_n, || {
            format!("{text}: N {n_fam}, construction {want_n}")
        })?;
        ensure(phi == want_phi, || {
            format!("{text}: Phi {phi}, construction {want_phi}")
        })?;
        ensure(check_g_against_n(&g_fam, &n_fam, g.order()), || {
            format!("{text}: G {g_fam} is not the transversal family of N")
        })?;
        if g.order() <= 16 {
            let gen = Oracle::new(&g).generating_table(ClosureKind::Hull);
            ensure(max_nongenerating_oracle(g.order(), &gen) == n_fam, || {
                format!("{text}: N differs from the brute-force oracle")
            })?;
            ensure(min_generating_oracle(g.order(), &gen) == g_fam, || {
                format!("{text}: G differs from the brute-force oracle")
            })?;
        }
        checked += 1;
    }

    // fixtures, with their published families
    let hull = ClosureKind::Hull;
    let fixtures: Vec<(&str, Graph, SetFamily, Option<SetFamily>, VertexSet)> = vec![
        (
            "diamond",
            build("diamond"),
            fam1(4, &[&[1, 2, 3], &[2, 3, 4]]),
            Some(fam1(4, &[&[1, 4]])),
            set1(&[2, 3]),
        ),
        (
            "4-pan",
            build("pan:4"),
            fam1(5, &[&[1, 2, 3], &[1, 2, 4], &[2, 3, 4, 5]]),
            Some(fam1(5, &[&[1, 5], &[1, 3, 4]])),
            set1(&[2]),
        ),
        (
            "P4",
            build("path:4"),
            fam1(4, &[&[1, 2, 3], &[2, 3, 4]]),
            Some(fam1(4, &[&[1, 4]])),
            set1(&[2, 3]),
        ),
        (
            "C4",
            build("cycle:4"),
            fam1(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]),
            Some(fam1(4, &[&[1, 3], &[2, 4]])),
            VertexSet::EMPTY,
        ),
        (
            "fig-barP3",
            build("fig-barP3"),
            fam1(5, &[&[1, 2, 4, 5], &[1, 2, 3, 5], &[1, 2, 3, 4]]),
            Some(fam1(5, &[&[3, 4, 5]])),
            set1(&[1, 2]),
        ),
        (
            "fig-disj",
            build("fig-disj"),
            fam1(8, &[&[1], &[4], &[5, 6], &[7, 8]]).complement(),
            None,
            // the vertices outside every complement
            set1(&[2, 3]),
        ),
    ];
    for (name, g, want_n, want_g, want_phi) in fixtures {
        let n_fam =
            convexity::maximal_nongenerating(&g, hull, &LIMITS).map_err(|e| e.to_string())?;
        ensure(n_fam == want_n, || {
            format!("{name}: N {n_fam}, expected {want_n}")
        })?;
        ensure(n_fam.intersection() == want_phi, || {
            format!("{name}: Phi {}", n_fam.intersection())
        })?;
        if let Some(want_g) = want_g {
            let g_fam =
                convexity::minimal_generating(&g, hull, &LIMITS).map_err(|e| e.to_string())?;
            ensure(g_fam == want_g, || {
                format!("{name}: G {g_fam}, expected {want_g}")
            })?;
        }
        checked += 1;
    }
    Ok(format!("{checked} graphs"))
}

// ------------------------------------------------------------- criterion 5

fn operation_laws() -> Outcome {
    let pool: Vec<Graph> = (1..=5).flat_map(verify::labeled_connected_graphs).collect();
    let (checks, mismatches) =
        verify::check_operation_laws(&pool, 150, 7, &LIMITS).map_err(|e| e.to_string())?;
    ensure(mismatches.is_empty(), || {
        let m = &mismatches[0];
        format!(
            "{} mismatches, first {}: {} on {}",
            mismatches.len(),
            m.check,
            m.detail,
            m.graph
        )
    })?;
    ensure(checks >= 300, || format!("only {checks} law checks"))?;
    Ok(format!("{checks} law checks on sampled pairs"))
}

// ------------------------------------------------------------- criterion 6

fn operator_divergence() -> Outcome {
    let q3 = build("hypercube:3");
    let s: VertexSet = [0b000, 0b011, 0b110].into_iter().collect();
    ensure(convexity::convex_hull(&q3, s) == q3.vertices(), || {
        "Q3 hull".into()
    })?;
    ensure(
        convexity::geodetic_closure(&q3, s) == q3.vertices().without(0b101),
        || {
            format!(
                "Q3 geodetic closure {}",
                convexity::geodetic_closure(&q3, s)
            )
        },
    )?;

    let k23 = build("multipartite:2,3");
    let p = set1(&[3, 4]);
    ensure(convexity::convex_hull(&k23, p) == k23.vertices(), || {
        "K23 hull".into()
    })?;
    ensure(
        convexity::geodetic_closure(&k23, p) == set1(&[1, 2, 3, 4]),
        || "K23 closure".into(),
    )?;

    let g = build("corona(multipartite:2,3)");
    let oracle = Oracle::new(&g);
    let differ = (0..1u32 << g.order()).any(|p| oracle.hull(p) != oracle.geodetic(p));
    ensure(differ, || "corona(K23): operators coincide".into())?;
    let gh =
        convexity::minimal_generating(&g, ClosureKind::Hull, &LIMITS).map_err(|e| e.to_string())?;
    let gg = convexity::minimal_generating(&g, ClosureKind::Geodetic, &LIMITS)
        .map_err(|e| e.to_string())?;
    ensure(gh == gg, || format!("corona(K23): G differs, {gh} vs {gg}"))?;
    ensure(gh.len() == 1, || {
        format!("corona(K23): G {gh} is not a single set")
    })?;
    for game in GameKind::BOTH {
        let a = game::nim_with(&g, GameSpec::hull(game), Engine::Structure, &LIMITS)
            .map_err(|e| e.to_string())?;
        let b = game::nim_with(&g, GameSpec::geodetic(game), Engine::Structure, &LIMITS)
            .map_err(|e| e.to_string())?;
        ensure(a == b, || {
            format!("corona(K23) {game}: hull {a}, geodetic {b}")
        })?;
    }
    Ok("Q3, K23 and corona(K23) witnesses".into())
}

// ------------------------------------------------------------- criterion 7

fn property_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut notes = Vec::new();

    // closure laws, on arbitrary (possibly disconnected) graphs
    for _ in 0..PROPERTY_CASES {
        let (n, g) = draw(&mut rng, 8);
        let full = (1u32 << n) - 1;
        let p = rng.gen::<u32>() & full;
        let q = p | (rng.gen::<u32>() & full);
        let (ps, qs) = (VertexSet::from_bits(p), VertexSet::from_bits(q));
        let oracle = Oracle::new(&g);
        for kind in ClosureKind::BOTH {
            let cp = convexity::close(&g, ps, kind);
            let cq = convexity::close(&g, qs, kind);
            ensure(ps.is_subset(cp), || {
                format!("{kind} not extensive on {}", g.to_edge_list())
            })?;
            ensure(cp.is_subset(cq), || {
                format!("{kind} not monotone on {}", g.to_edge_list())
            })?;
            ensure(cp.bits() == oracle.close(p, kind), || {
                format!("{kind} differs from oracle")
            })?;
        }
        let h = convexity::convex_hull(&g, ps);
        ensure(convexity::convex_hull(&g, h) == h, || {
            "hull not idempotent".into()
        })?;
        ensure(convexity::geodetic_closure(&g, h) == h, || {
            "hull not convex".into()
        })?;
    }
    notes.push(format!("closure {PROPERTY_CASES}"));

    // nongenerator theorem
    for _ in 0..PROPERTY_CASES {
        let (n, g) = draw(&mut rng, 7);
        let oracle = Oracle::new(&g);
        for kind in ClosureKind::BOTH {
            let gen = oracle.generating_table(kind);
            let nongenerators = (0..n)
                .filter(|&v| {
                    (0..1u32 << n).all(|p| !gen[p as usize] || gen[(p & !(1 << v)) as usize])
                })
                .fold(0u32, |m, v| m | 1 << v);
            let phi = convexity::frattini(&g, kind, &LIMITS).map_err(|e| e.to_string())?;
            ensure(phi.bits() == nongenerators, || {
                format!("{kind}: Phi {phi} vs nongenerators on {}", g.to_edge_list())
            })?;
        }
    }
    notes.push(format!("nongenerators {PROPERTY_CASES}"));

    // parity-forced avoidance nim, counted over graphs where it applies
    let mut applicable = 0;
    let mut drawn = 0;
    while applicable < PROPERTY_CASES {
        drawn += 1;
        ensure(drawn <= 50 * PROPERTY_CASES, || {
            format!("only {applicable} parity cases")
        })?;
        let (n, g) = draw(&mut rng, 7);
        let oracle = Oracle::new(&g);
        let kind = if rng.gen_bool(0.5) {
            ClosureKind::Hull
        } else {
            ClosureKind::Geodetic
        };
        let family =
            convexity::maximal_nongenerating(&g, kind, &LIMITS).map_err(|e| e.to_string())?;
        let Some(forced) = game::parity_forced_nim(&family) else {
            continue;
        };
        applicable += 1;
        let gen = oracle.generating_table(kind);
        let want = nim_oracle(n, &gen, GameKind::Dng);
        ensure(forced == Nimber(want), || {
            format!("parity {forced} vs {want} on {}", g.to_edge_list())
        })?;
    }
    notes.push(format!("parity {applicable}"));

    // terminal classes and simplification
    for _ in 0..PROPERTY_CASES {
        let (n, g) = draw(&mut rng, 7);
        let oracle = Oracle::new(&g);
        for spec in GameSpec::all() {
            let gen = oracle.generating_table(spec.closure);
            let d = StructureDigraph::build(&g, spec, &LIMITS).map_err(|e| e.to_string())?;
            let terminals: Vec<_> = d.terminals().into_iter().map(|i| &d.classes[i]).collect();
            match spec.game {
                GameKind::Dng => {
                    let sets = SetFamily::new(n, terminals.iter().map(|c| c.set));
                    ensure(sets == max_nongenerating_oracle(n, &gen), || {
                        format!("{spec}: terminal classes {sets} on {}", g.to_edge_list())
                    })?;
                }
                GameKind::Gen => {
                    let ok = terminals.len() == 1
                        && terminals[0].set == g.vertices()
                        && terminals[0].parity == ClassParity::Both;
                    ensure(ok, || {
                        format!("{spec}: terminal classes on {}", g.to_edge_list())
                    })?;
                }
            }
            let want = Nimber(nim_oracle(n, &gen, spec.game));
            let simplified = d.simplify();
            ensure(simplified.len() <= d.len(), || "simplification grew".into())?;
            ensure(simplified.recomputed_game_nim() == want, || {
                format!(
                    "{spec}: simplified {} vs {want} on {}",
                    simplified.recomputed_game_nim(),
                    g.to_edge_list()
                )
            })?;
        }
    }
    notes.push(format!("terminal/simplification {PROPERTY_CASES}"));

    Ok(notes.join(", "))
}
