//! Closed-form nim-numbers, maximal nongenerating families and Frattini
//! subsets for the graph families with known answers, and the table that
//! checks them against the structure engine.
//!
//! All expectations are for the convex hull games.

use rayon::prelude::*;
use serde::Serialize;

use crate::convexity::{self, ClosureKind, Limits, SetFamily};
use crate::error::Result;
use crate::families::{Combinator, Family, FamilySpec};
use crate::game::{GameKind, GameSpec, Nimber};
use crate::graph::{self, Graph};
use crate::structure::StructureDigraph;
use crate::vertex_set::VertexSet;

fn pty(n: usize) -> u32 {
    (n % 2) as u32
}

/// Nim-numbers of both games together with the rule that produced them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Expectation {
    pub rule: &'static str,
    pub dng: Nimber,
    pub gen: Nimber,
}

impl Expectation {
    fn new(rule: &'static str, dng: u32, gen: u32) -> Self {
        Expectation {
            rule,
            dng: Nimber(dng),
            gen: Nimber(gen),
        }
    }

    pub fn get(&self, game: GameKind) -> Nimber {
        match game {
            GameKind::Dng => self.dng,
            GameKind::Gen => self.gen,
        }
    }

    /// Graphs with a unique minimal generating set.
    fn unique_generating(rule: &'static str, order: usize) -> Self {
        Self::new(rule, 1 - pty(order), pty(order))
    }
}

pub fn cycle(n: usize) -> Expectation {
    let dng = u32::from(matches!(n % 4, 1 | 2));
    Expectation::new("cycle", dng, pty(n))
}

pub fn hypercube() -> Expectation {
    Expectation::new("hypercube", 0, 0)
}

/// `P_m □ P_n` with `2 <= m <= n`.
pub fn grid(m: usize, n: usize) -> Expectation {
    let dng = if m == 2 { 0 } else { 2 * pty(m + n) };
    Expectation::new("grid", dng, pty(m * n))
}

pub fn multipartite(parts: &[usize]) -> Expectation {
    let sigma = parts.iter().filter(|&&m| m == 1).count();
    let lambda = parts.len() - sigma;
    if lambda <= 1 {
        return Expectation::unique_generating("multipartite", parts.iter().sum());
    }
    let gen = if lambda.is_multiple_of(2) {
        2 * pty(sigma)
    } else {
        pty(sigma)
    };
    Expectation::new("multipartite", pty(lambda + sigma), gen)
}

/// `W_n = K_1 + C_{n-1}`, `n >= 5`.
pub fn wheel(n: usize) -> Expectation {
    let gen = if n == 5 { 2 } else { pty(n) };
    Expectation::new("wheel", pty(n), gen)
}

/// `W_{m,n} = K̄_m + C_n`; `m = 1` is the wheel `W_{n+1}`.
pub fn generalized_wheel(m: usize, n: usize) -> Expectation {
    if m == 1 {
        return wheel(n + 1);
    }
    if n == 3 {
        Expectation::new("genwheel", pty(m), 1 - pty(m))
    } else {
        Expectation::new("genwheel", 1, 0)
    }
}

/// `K_m + K̄_n`, `n >= 2`.
pub fn complete_split(m: usize, n: usize) -> Expectation {
    Expectation::unique_generating("split", m + n)
}

/// `H ∘ K_1` for nontrivial `H`.
pub fn corona() -> Expectation {
    Expectation::new("corona", 1, 0)
}

pub fn block(order: usize) -> Expectation {
    Expectation::unique_generating("block", order)
}

/// Expectation for a described graph, from the most specific rule that
/// applies. `None` when no closed form is known.
pub fn expected(spec: &FamilySpec) -> Option<Expectation> {
    match spec {
        FamilySpec::Named { family, params } => {
            let p = params.as_slice();
            let direct = match family {
                Family::Cycle => Some(cycle(p[0])),
                Family::Hypercube if p[0] >= 2 => Some(hypercube()),
                Family::Grid => Some(grid(p[0], p[1])),
                Family::Lattice if p.len() == 2 => Some(grid(p[0].min(p[1]), p[0].max(p[1]))),
                Family::Multipartite => Some(multipartite(p)),
                Family::Wheel => Some(wheel(p[0])),
                Family::GenWheel => Some(generalized_wheel(p[0], p[1])),
                Family::Split if p[1] >= 2 => Some(complete_split(p[0], p[1])),
                _ => None,
            };
            direct.or_else(|| expected_for_graph(&spec.build().ok()?))
        }
        FamilySpec::Combine {
            op: Combinator::Corona,
            args,
        } => {
            let h = args[0].build().ok()?;
            if h.order() >= 2 {
                Some(corona())
            } else {
                expected_for_graph(&spec.build().ok()?)
            }
        }
        _ => expected_for_graph(&spec.build().ok()?),
    }
}

pub fn expected_nim(spec: &FamilySpec, game: GameKind) -> Option<Nimber> {
    expected(spec).map(|e| e.get(game))
}

/// Rules that only look at the graph: block graphs, and more generally
/// graphs whose simplicial vertices generate.
pub fn expected_for_graph(g: &Graph) -> Option<Expectation> {
    if is_block_graph(g) {
        return Some(block(g.order()));
    }
    let l = convexity::simplicial_vertices(g);
    if !l.is_empty() && convexity::is_generating(g, l, ClosureKind::Hull) {
        return Some(Expectation::unique_generating("simplicial", g.order()));
    }
    None
}

/// Blocks (maximal 2-connected subgraphs or bridges) and cut vertices.
pub fn blocks(g: &Graph) -> (Vec<VertexSet>, VertexSet) {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        blocks: Vec<VertexSet>,
        cuts: VertexSet,
    }

    fn dfs(s: &mut State, u: usize, parent: Option<usize>) {
        s.time += 1;
        s.disc[u] = s.time;
        s.low[u] = s.time;
        let mut children = 0;
        for v in s.g.neighbors(u) {
            if s.disc[v] == 0 {
                children += 1;
                s.stack.push((u, v));
                dfs(s, v, Some(u));
                s.low[u] = s.low[u].min(s.low[v]);
                if s.low[v] >= s.disc[u] {
                    if parent.is_some() || children > 1 {
                        s.cuts.insert(u);
                    }
                    let mut block = VertexSet::EMPTY;
                    while let Some((a, b)) = s.stack.pop() {
                        block = block.with(a).with(b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    s.blocks.push(block);
                }
            } else if Some(v) != parent && s.disc[v] < s.disc[u] {
                s.stack.push((u, v));
                s.low[u] = s.low[u].min(s.disc[v]);
            }
        }
    }

    let n = g.order();
    let mut s = State {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
        cuts: VertexSet::EMPTY,
    };
    for v in 0..n {
        if s.disc[v] == 0 {
            if g.degree(v) == 0 {
                s.blocks.push(VertexSet::singleton(v));
                s.disc[v] = usize::MAX;
            } else {
                dfs(&mut s, v, None);
            }
        }
    }
    s.blocks.sort_unstable();
    (s.blocks, s.cuts)
}

/// Whether every block is a complete graph.
pub fn is_block_graph(g: &Graph) -> bool {
    blocks(g)
        .0
        .iter()
        .all(|&b| b.iter().all(|v| (b.without(v)).is_subset(g.neighbors(v))))
}

fn cycle_arcs(n: usize) -> SetFamily {
    let len = n.div_ceil(2);
    SetFamily::new(
        n,
        (0..n).map(|start| (0..len).map(|k| (start + k) % n).collect()),
    )
}

fn half_cubes(d: usize) -> SetFamily {
    let n = 1 << d;
    SetFamily::new(
        n,
        (0..d).flat_map(|bit| {
            [0, 1].map(|b| {
                (0..n)
                    .filter(|x| (x >> bit) & 1 == b)
                    .collect::<VertexSet>()
            })
        }),
    )
}

// coordinates of a row-major lattice index
fn coords(mut i: usize, dims: &[usize]) -> Vec<usize> {
    let mut c = vec![0; dims.len()];
    for (k, &d) in dims.iter().enumerate().rev() {
        c[k] = i % d;
        i /= d;
    }
    c
}

fn lattice_sides(dims: &[usize]) -> SetFamily {
    let n: usize = dims.iter().product();
    let mut sets = Vec::new();
    for (k, &d) in dims.iter().enumerate() {
        sets.push((0..n).filter(|&i| coords(i, dims)[k] > 0).collect());
        sets.push((0..n).filter(|&i| coords(i, dims)[k] < d - 1).collect());
    }
    SetFamily::new(n, sets)
}

fn lattice_interior(dims: &[usize]) -> VertexSet {
    let n: usize = dims.iter().product();
    (0..n)
        .filter(|&i| {
            coords(i, dims)
                .iter()
                .zip(dims)
                .all(|(&c, &d)| c > 0 && c < d - 1)
        })
        .collect()
}

fn part_ranges(parts: &[usize]) -> Vec<std::ops::Range<usize>> {
    let mut start = 0;
    parts
        .iter()
        .map(|&m| {
            start += m;
            start - m..start
        })
        .collect()
}

fn transversals(parts: &[usize]) -> SetFamily {
    let n: usize = parts.iter().sum();
    let mut sets = vec![VertexSet::EMPTY];
    for r in part_ranges(parts) {
        sets = sets
            .into_iter()
            .flat_map(|s| r.clone().map(move |v| s.with(v)))
            .collect();
    }
    SetFamily::new(n, sets)
}

fn wheel_family(rim: usize, centres: usize) -> SetFamily {
    let n = rim + centres;
    let pairs = (0..rim).map(|i| VertexSet::singleton(centres + i).with(centres + (i + 1) % rim));
    if centres == 1 {
        SetFamily::new(n, pairs.map(|p| p.complement(n)))
    } else {
        SetFamily::new(n, pairs.flat_map(|p| (0..centres).map(move |c| p.with(c))))
    }
}

// Complements of the singletons of the unique minimal generating set.
fn unique_generating_family(g: &Graph) -> Option<SetFamily> {
    let l = convexity::simplicial_vertices(g);
    if l.is_empty() || !convexity::is_generating(g, l, ClosureKind::Hull) {
        return None;
    }
    let n = g.order();
    Some(SetFamily::new(
        n,
        l.iter().map(|v| VertexSet::singleton(v).complement(n)),
    ))
}

/// `𝒩` predicted for the described graph.
pub fn expected_family_n(spec: &FamilySpec) -> Option<SetFamily> {
    if let FamilySpec::Named { family, params } = spec {
        let p = params.as_slice();
        let direct = match family {
            Family::Cycle => Some(cycle_arcs(p[0])),
            Family::Hypercube => Some(half_cubes(p[0])),
            Family::Grid | Family::Lattice => Some(lattice_sides(p)),
            Family::Multipartite if p.iter().filter(|&&m| m >= 2).count() >= 2 => {
                Some(transversals(p))
            }
            Family::Wheel => Some(wheel_family(p[0] - 1, 1)),
            Family::GenWheel if p[1] >= 4 => Some(wheel_family(p[1], p[0])),
            _ => None,
        };
        if direct.is_some() {
            return direct;
        }
    }
    unique_generating_family(&spec.build().ok()?)
}

/// `Φ` predicted for the described graph.
pub fn expected_frattini(spec: &FamilySpec) -> Option<VertexSet> {
    if let FamilySpec::Named { family, params } = spec {
        let p = params.as_slice();
        let direct = match family {
            Family::Cycle | Family::Hypercube => Some(VertexSet::EMPTY),
            Family::Grid | Family::Lattice => Some(lattice_interior(p)),
            Family::Multipartite => {
                let small: VertexSet = part_ranges(p)
                    .into_iter()
                    .filter(|r| r.len() == 1)
                    .flatten()
                    .collect();
                let n: usize = p.iter().sum();
                Some(if small.len() == p.len() && small.len() == n {
                    VertexSet::EMPTY
                } else {
                    small
                })
            }
            Family::Wheel => Some(VertexSet::singleton(0)),
            Family::GenWheel if p[0] >= 2 && p[1] >= 4 => Some(VertexSet::EMPTY),
            _ => None,
        };
        if direct.is_some() {
            return direct;
        }
    }
    let g = spec.build().ok()?;
    if is_block_graph(&g) {
        return Some(blocks(&g).1);
    }
    let l = convexity::simplicial_vertices(&g);
    (!l.is_empty() && convexity::is_generating(&g, l, ClosureKind::Hull))
        .then(|| l.complement(g.order()))
}

/// One graph of the summary table with its expected values.
#[derive(Clone, Debug)]
pub struct TableCase {
    pub row: &'static str,
    pub param: String,
    pub graph: Graph,
    pub expected: Expectation,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableCell {
    pub row: &'static str,
    pub param: String,
    pub game: GameKind,
    pub expected: Nimber,
    pub computed: Option<Nimber>,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

fn spec_case(row: &'static str, spec: FamilySpec, expected: Expectation) -> TableCase {
    TableCase {
        row,
        param: spec.to_string(),
        graph: spec.build().expect("table parameters are in range"),
        expected,
    }
}

/// Integer partitions of `n` into at least two parts, parts ascending.
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

/// Connected graphs on `2..=max_order` vertices, one per isomorphism class.
pub fn small_connected_graphs(max_order: usize) -> Vec<Graph> {
    let mut out: Vec<Graph> = Vec::new();
    for n in 2..=max_order {
        let mut seen = std::collections::HashSet::new();
        for g in crate::verify::labeled_connected_graphs(n) {
            if seen.insert(canonical_edges(&g)) {
                out.push(g);
            }
        }
    }
    out
}

// Lexicographically least sorted edge list over all relabelings.
fn canonical_edges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    loop {
        let mut edges: Vec<(usize, usize)> = g
            .edges()
            .map(|(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        if best.as_ref().is_none_or(|b| edges < *b) {
            best = Some(edges);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap_or_default()
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// All graphs covered by the summary table, in row order.
pub fn table1_cases() -> Vec<TableCase> {
    use FamilySpec as S;
    let named = |f: Family, p: &[usize]| S::named(f, p);
    let mut cases = Vec::new();
    for n in 3..=12 {
        cases.push(spec_case("cycle", named(Family::Cycle, &[n]), cycle(n)));
    }
    for n in 2..=4 {
        cases.push(spec_case(
            "hypercube",
            named(Family::Hypercube, &[n]),
            hypercube(),
        ));
    }
    for m in 2..=4 {
        for n in m..=5 {
            let spec = if n < 3 {
                named(Family::Lattice, &[m, n])
            } else {
                named(Family::Grid, &[m, n])
            };
            cases.push(spec_case("grid", spec, grid(m, n)));
        }
    }
    for total in 2..=8 {
        for parts in partitions(total) {
            let e = multipartite(&parts);
            cases.push(spec_case(
                "multipartite",
                named(Family::Multipartite, &parts),
                e,
            ));
        }
    }
    for n in 5..=9 {
        cases.push(spec_case("wheel", named(Family::Wheel, &[n]), wheel(n)));
    }
    for m in 2..=3 {
        for n in 3..=6 {
            let e = generalized_wheel(m, n);
            cases.push(spec_case("genwheel", named(Family::GenWheel, &[m, n]), e));
        }
    }
    for m in 1..=4 {
        for n in 2..=4 {
            cases.push(spec_case(
                "split",
                named(Family::Split, &[m, n]),
                complete_split(m, n),
            ));
        }
    }
    for h in small_connected_graphs(4) {
        let edges: Vec<String> = h.edges().map(|(u, v)| format!("{u}-{v}")).collect();
        cases.push(TableCase {
            row: "corona",
            param: format!("n={} [{}]", h.order(), edges.join(" ")),
            graph: graph::corona(&h).expect("small corona"),
            expected: corona(),
        });
    }
    let mut block_spec = |spec: FamilySpec| {
        let g = spec.build().expect("block sample in range");
        let e = block(g.order());
        cases.push(spec_case("block", spec, e));
    };
    for n in 2..=8 {
        block_spec(named(Family::Path, &[n]));
    }
    for n in 2..=6 {
        block_spec(named(Family::Star, &[n]));
    }
    for n in 2..=6 {
        block_spec(named(Family::Complete, &[n]));
    }
    for l in 2..=3 {
        block_spec(named(Family::Windmill, &[3, l]));
    }
    block_spec(named(Family::FigBlock, &[]));
    cases
}

/// Computes every case with the structure engine. Cells are returned in
/// case order, DNG before GEN. `inject_failure` perturbs the first
/// expectation so that failure reporting can be exercised.
pub fn table1(cases: &[TableCase], limits: &Limits, inject_failure: bool) -> Vec<TableCell> {
    let mut cells: Vec<TableCell> = cases
        .par_iter()
        .flat_map_iter(|case| {
            GameKind::BOTH.into_iter().map(move |game| {
                let computed = StructureDigraph::build(&case.graph, GameSpec::hull(game), limits)
                    .map(|d| d.game_nim());
                let expected = case.expected.get(game);
                let (computed, error) = match computed {
                    Ok(v) => (Some(v), None),
                    Err(e) => (None, Some(e.to_string())),
                };
                TableCell {
                    row: case.row,
                    param: case.param.clone(),
                    game,
                    expected,
                    computed,
                    ok: computed == Some(expected),
                    error,
                }
            })
        })
        .collect();
    if inject_failure {
        if let Some(c) = cells.first_mut() {
            c.expected += Nimber(1);
            c.ok = c.computed == Some(c.expected);
        }
    }
    cells
}

/// Convenience for the expectations of the structure engine on one graph.
pub fn check_graph(g: &Graph, e: &Expectation, limits: &Limits) -> Result<bool> {
    for game in GameKind::BOTH {
        let d = StructureDigraph::build(g, GameSpec::hull(game), limits)?;
        if d.game_nim() != e.get(game) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn spec(s: &str) -> FamilySpec {
        s.parse().unwrap()
    }

    #[test]
    fn named_examples() {
        assert_eq!(
            expected_nim(&spec("cycle:6"), GameKind::Dng),
            Some(Nimber(1))
        );
        assert_eq!(
            expected_nim(&spec("cycle:6"), GameKind::Gen),
            Some(Nimber(0))
        );
        assert_eq!(
            expected_nim(&spec("grid:3x4"), GameKind::Dng),
            Some(Nimber(2))
        );
        assert_eq!(
            expected_nim(&spec("grid:3x4"), GameKind::Gen),
            Some(Nimber(0))
        );
        assert_eq!(
            expected_nim(&spec("wheel:5"), GameKind::Dng),
            Some(Nimber(1))
        );
        assert_eq!(
            expected_nim(&spec("wheel:5"), GameKind::Gen),
            Some(Nimber(2))
        );
        assert_eq!(expected(&spec("genwheel:1,4")), Some(wheel(5)));
        assert_eq!(expected(&spec("path:5")).unwrap().rule, "block");
        assert_eq!(expected(&spec("corona(cycle:4)")).unwrap().rule, "corona");
        assert_eq!(expected(&spec("fig-barP3")).unwrap().rule, "simplicial");
        assert_eq!(expected(&spec("pan:4")), None);
        assert_eq!(expected(&spec("lattice:2,2,2")), None);
    }

    #[test]
    fn block_decomposition() {
        let (b, cuts) = blocks(&families::fig_block());
        assert_eq!(b.len(), 7);
        let expected: VertexSet = [2, 3, 4, 8, 9, 11].iter().map(|v| v - 1).collect();
        assert_eq!(cuts, expected);
        assert!(is_block_graph(&families::fig_block()));
        assert!(is_block_graph(&families::windmill(3, 3).unwrap()));
        assert!(!is_block_graph(&families::cycle(4).unwrap()));
        assert!(!is_block_graph(&families::diamond()));
        let (b, cuts) = blocks(&Graph::new(3, &[(0, 1)]).unwrap());
        assert_eq!(b.len(), 2);
        assert!(cuts.is_empty());
    }

    #[test]
    fn predicted_families() {
        let w6 = expected_family_n(&spec("wheel:6")).unwrap();
        assert_eq!(w6.len(), 5);
        assert!(w6.iter().all(|s| s.len() == 4 && s.contains(0)));
        assert_eq!(expected_family_n(&spec("hypercube:3")).unwrap().len(), 6);
        assert_eq!(
            expected_family_n(&spec("multipartite:2,2")).unwrap().len(),
            4
        );
        assert_eq!(expected_family_n(&spec("genwheel:2,4")).unwrap().len(), 8);
        assert_eq!(expected_frattini(&spec("grid:4x4")).unwrap().len(), 4);
        assert_eq!(
            expected_frattini(&spec("multipartite:1,1,2")).unwrap(),
            [0, 1].into_iter().collect()
        );
        assert_eq!(
            expected_frattini(&spec("windmill:3x3")).unwrap(),
            VertexSet::singleton(0)
        );
        assert_eq!(
            expected_frattini(&spec("complete:4")).unwrap(),
            VertexSet::EMPTY
        );
    }

    #[test]
    fn partitions_and_small_graphs() {
        assert_eq!(
            partitions(4),
            vec![vec![1, 1, 1, 1], vec![1, 1, 2], vec![1, 3], vec![2, 2]]
        );
        let counts: Vec<usize> = (2..=4).map(|n| small_connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 3, 9]);
    }

    #[test]
    fn injected_failure_is_reported() {
        let cases: Vec<TableCase> = table1_cases().into_iter().take(2).collect();
        let limits = Limits::default();
        assert!(table1(&cases, &limits, false).iter().all(|c| c.ok));
        let cells = table1(&cases, &limits, true);
        assert!(!cells[0].ok);
        assert!(cells[1..].iter().all(|c| c.ok));
    }
}
