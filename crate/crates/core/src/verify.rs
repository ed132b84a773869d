//! Cross-checks between the engines and against the graph-operation laws,
//! over exhaustive and seeded random graph samples.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::convexity::{self, ClosureKind, Limits, SetFamily};
use crate::error::Result;
use crate::game::{self, BruteSolver, FastSolver, GameKind, GameSpec, Solver};
use crate::graph::{self, Graph};
use crate::structure::{ClassParity, StructureDigraph};
use crate::vertex_set::VertexSet;

/// Default edge probability for random graphs.
pub const DEFAULT_EDGE_PROBABILITY: f64 = 0.4;

/// A failed check, with the graph needed to reproduce it.
#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub check: String,
    pub detail: String,
    pub graph: String,
}

impl Mismatch {
    fn new(check: impl Into<String>, detail: impl Into<String>, g: &Graph) -> Self {
        Mismatch {
            check: check.into(),
            detail: detail.into(),
            graph: g.to_edge_list(),
        }
    }
}

/// Every labeled graph on `n` vertices that is connected.
pub fn labeled_connected_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let m = pairs.len();
    assert!(m < 32, "too many vertex pairs to enumerate");
    (0..1u64 << m).filter_map(move |mask| {
        let edges: Vec<_> = (0..m)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        let g = Graph::new(n, &edges).ok()?;
        g.is_connected().then_some(g)
    })
}

/// Graph with independent edges of probability `p`, redrawn until
/// connected.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    loop {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect::<Vec<_>>()
            .into_iter()
            .filter(|_| rng.gen_bool(p))
            .collect();
        let g = Graph::new(n, &edges).expect("valid edges");
        if g.is_connected() {
            return g;
        }
    }
}

/// Checks the three engines against each other, plus the per-position
/// class values, terminal classes, simplification, and the parity rule.
pub fn check_engines(g: &Graph, limits: &Limits) -> Result<Vec<Mismatch>> {
    let mut out = Vec::new();
    for spec in GameSpec::all() {
        let family = convexity::maximal_nongenerating(g, spec.closure, limits)?;
        let mut brute = BruteSolver::new(g, spec, limits)?;
        let mut fast = FastSolver::from_family(family.clone(), spec);
        let d = StructureDigraph::build(g, spec, limits)?;
        let b = brute.nim(VertexSet::EMPTY);
        let f = fast.nim(VertexSet::EMPTY);
        let s = d.game_nim();
        if b != f || b != s {
            out.push(Mismatch::new(
                "engines",
                format!("{spec}: brute {b}, fast {f}, structure {s}"),
                g,
            ));
        }
        let simplified = d.simplify().recomputed_game_nim();
        if simplified != s {
            out.push(Mismatch::new(
                "simplification",
                format!("{spec}: structure {s}, simplified {simplified}"),
                g,
            ));
        }
        if spec.game == GameKind::Dng {
            if let Some(r) = game::parity_forced_nim(&family) {
                if r != b {
                    out.push(Mismatch::new(
                        "parity",
                        format!("{spec}: forced {r}, brute {b}"),
                        g,
                    ));
                }
            }
        }
        if let Some(detail) = terminal_class_error(&d, &family, spec.game) {
            out.push(Mismatch::new(
                "terminal classes",
                format!("{spec}: {detail}"),
                g,
            ));
        }
        for bits in 0..1u32 << g.order() {
            let p = VertexSet::from_bits(bits);
            if !game::is_legal(g, spec, p) {
                continue;
            }
            let class = convexity::ceil(p, &family);
            let Some(i) = d.class_of(class) else {
                out.push(Mismatch::new(
                    "classes",
                    format!("{spec}: no class for {p}"),
                    g,
                ));
                continue;
            };
            let predicted = d.classes[i].ty.nim(p.parity());
            let actual = brute.nim(p);
            if predicted != actual {
                out.push(Mismatch::new(
                    "positions",
                    format!(
                        "{spec}: position {p} has nim {actual}, class {class} predicts {predicted}"
                    ),
                    g,
                ));
                break;
            }
        }
    }
    Ok(out)
}

fn terminal_class_error(
    d: &StructureDigraph,
    family: &SetFamily,
    game: GameKind,
) -> Option<String> {
    let terminals = d.terminals();
    match game {
        GameKind::Dng => {
            let sets = SetFamily::new(d.order, terminals.iter().map(|&i| d.classes[i].set));
            (sets != *family).then(|| format!("terminal classes {sets} differ from {family}"))
        }
        GameKind::Gen => {
            let ok = terminals.len() == 1 && d.classes[terminals[0]].parity == ClassParity::Both;
            (!ok).then(|| format!("{} terminal classes", terminals.len()))
        }
    }
}

/// `Φ` equals the set of vertices removable from every generating set.
pub fn check_nongenerator_theorem(g: &Graph, limits: &Limits) -> Result<Vec<Mismatch>> {
    let mut out = Vec::new();
    for kind in ClosureKind::BOTH {
        let phi = convexity::frattini(g, kind, limits)?;
        let brute = convexity::nongenerators_brute(g, kind);
        if phi != brute {
            out.push(Mismatch::new(
                "nongenerators",
                format!("{kind}: frattini {phi}, nongenerators {brute}"),
                g,
            ));
        }
    }
    Ok(out)
}

fn product(a: VertexSet, b: VertexSet, h_order: usize) -> VertexSet {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| graph::box_index(x, y, h_order)))
        .collect()
}

fn shift(s: VertexSet, by: usize) -> VertexSet {
    s.map(|v| v + by)
}

/// Maximal nongenerating sets of `G ⊔ H` from those of the parts.
pub fn check_union_law(g: &Graph, h: &Graph, limits: &Limits) -> Result<Vec<Mismatch>> {
    let u = graph::disjoint_union(g, h)?;
    let mut out = Vec::new();
    for kind in ClosureKind::BOTH {
        let ng = convexity::maximal_nongenerating(g, kind, limits)?;
        let nh = convexity::maximal_nongenerating(h, kind, limits)?;
        let vg = g.vertices();
        let vh = shift(h.vertices(), g.order());
        let predicted = SetFamily::new(
            u.order(),
            ng.iter()
                .map(|n| n | vh)
                .chain(nh.iter().map(|n| vg | shift(n, g.order()))),
        );
        let direct = convexity::maximal_nongenerating(&u, kind, limits)?;
        if predicted != direct {
            out.push(Mismatch::new(
                "union law",
                format!("{kind}: {direct} vs {predicted}"),
                &u,
            ));
        }
    }
    Ok(out)
}

/// Hull factorization on sampled subsets, and `𝒩`, `Φ` of `G □ H`.
/// The family laws need both factors nontrivial: `𝒩(K₁) = {∅}` would
/// contribute the empty set.
pub fn check_box_law(
    g: &Graph,
    h: &Graph,
    rng: &mut impl Rng,
    samples: usize,
    limits: &Limits,
) -> Result<Vec<Mismatch>> {
    let b = graph::box_product(g, h)?;
    let ho = h.order();
    let mut out = Vec::new();
    for _ in 0..samples {
        let s: VertexSet = (0..b.order()).filter(|_| rng.gen_bool(0.3)).collect();
        let pg: VertexSet = s.iter().map(|v| v / ho).collect();
        let ph: VertexSet = s.iter().map(|v| v % ho).collect();
        let predicted = product(
            convexity::convex_hull(g, pg),
            convexity::convex_hull(h, ph),
            ho,
        );
        let direct = convexity::convex_hull(&b, s);
        if predicted != direct {
            out.push(Mismatch::new(
                "hull factorization",
                format!("[{s}] = {direct}, product {predicted}"),
                &b,
            ));
        }
    }
    let kind = ClosureKind::Hull;
    let ng = convexity::maximal_nongenerating(g, kind, limits)?;
    let nh = convexity::maximal_nongenerating(h, kind, limits)?;
    let predicted = SetFamily::new(
        b.order(),
        ng.iter()
            .map(|n| product(n, h.vertices(), ho))
            .chain(nh.iter().map(|n| product(g.vertices(), n, ho))),
    );
    let direct = convexity::maximal_nongenerating(&b, kind, limits)?;
    if predicted != direct {
        out.push(Mismatch::new(
            "box law",
            format!("{direct} vs {predicted}"),
            &b,
        ));
    }
    let phi = product(ng.intersection(), nh.intersection(), ho);
    if direct.intersection() != phi {
        out.push(Mismatch::new(
            "box frattini",
            format!("{} vs {phi}", direct.intersection()),
            &b,
        ));
    }
    Ok(out)
}

/// `𝒩` and `Φ` of a 1-clique sum of nontrivial connected graphs.
pub fn check_clique_sum_law(parts: &[(&Graph, usize)], limits: &Limits) -> Result<Vec<Mismatch>> {
    let sum = graph::one_clique_sum(parts)?;
    let n = sum.graph.order();
    let mut out = Vec::new();
    for kind in ClosureKind::BOTH {
        let images: Vec<VertexSet> = parts
            .iter()
            .zip(&sum.maps)
            .map(|((g, _), map)| g.vertices().map(|v| map[v]))
            .collect();
        let mut predicted = Vec::new();
        let mut phi = VertexSet::EMPTY;
        for (i, ((g, c), map)) in parts.iter().zip(&sum.maps).enumerate() {
            let others = images
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(VertexSet::EMPTY, |a, (_, &s)| a | s);
            let at_c: Vec<VertexSet> = convexity::maximal_nongenerating(g, kind, limits)?
                .iter()
                .filter(|s| s.contains(*c))
                .map(|s| s.map(|v| map[v]))
                .collect();
            phi |= at_c.iter().fold(VertexSet::full(n), |a, &s| a & s);
            predicted.extend(at_c.into_iter().map(|s| s | others));
        }
        let predicted = SetFamily::new(n, predicted);
        let direct = convexity::maximal_nongenerating(&sum.graph, kind, limits)?;
        if predicted != direct {
            out.push(Mismatch::new(
                "clique-sum law",
                format!("{kind}: {direct} vs {predicted}"),
                &sum.graph,
            ));
        }
        if direct.intersection() != phi {
            out.push(Mismatch::new(
                "clique-sum frattini",
                format!("{kind}: {} vs {phi}", direct.intersection()),
                &sum.graph,
            ));
        }
    }
    Ok(out)
}

/// Runs the three operation laws on pairs drawn from `pool`.
pub fn check_operation_laws(
    pool: &[Graph],
    pairs: usize,
    seed: u64,
    limits: &Limits,
) -> Result<(usize, Vec<Mismatch>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nontrivial: Vec<&Graph> = pool.iter().filter(|g| g.order() >= 2).collect();
    let mut out = Vec::new();
    let mut checks = 0;
    for _ in 0..pairs {
        let (Some(g), Some(h)) = (pool.choose(&mut rng), pool.choose(&mut rng)) else {
            break;
        };
        out.extend(check_union_law(g, h, limits)?);
        checks += 1;
        if let (Some(&a), Some(&b)) = (nontrivial.choose(&mut rng), nontrivial.choose(&mut rng)) {
            out.extend(check_box_law(a, b, &mut rng, 8, limits)?);
            let (ca, cb) = (rng.gen_range(0..a.order()), rng.gen_range(0..b.order()));
            out.extend(check_clique_sum_law(&[(a, ca), (b, cb)], limits)?);
            checks += 2;
        }
    }
    Ok((checks, out))
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub mode: String,
    pub graphs: usize,
    pub law_checks: usize,
    pub seed: u64,
    pub edge_probability: f64,
    pub workers: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn check_all(graphs: &[Graph], limits: &Limits, nongenerators: bool) -> Result<Vec<Mismatch>> {
    let per_graph: Vec<Result<Vec<Mismatch>>> = graphs
        .par_iter()
        .map(|g| {
            let mut m = check_engines(g, limits)?;
            if nongenerators {
                m.extend(check_nongenerator_theorem(g, limits)?);
            }
            Ok(m)
        })
        .collect();
    let mut out = Vec::new();
    for r in per_graph {
        out.extend(r?);
    }
    Ok(out)
}

/// All labeled connected graphs on `1..=max_vertices` vertices.
pub fn exhaustive(max_vertices: usize, seed: u64, limits: &Limits) -> Result<VerifyReport> {
    let graphs: Vec<Graph> = (1..=max_vertices)
        .flat_map(labeled_connected_graphs)
        .collect();
    let mut mismatches = check_all(&graphs, limits, true)?;
    let pool: Vec<Graph> = graphs.iter().filter(|g| g.order() <= 5).cloned().collect();
    let (law_checks, laws) = check_operation_laws(&pool, 60, seed, limits)?;
    mismatches.extend(laws);
    Ok(VerifyReport {
        mode: format!("exhaustive up to {max_vertices} vertices"),
        graphs: graphs.len(),
        law_checks,
        seed,
        edge_probability: DEFAULT_EDGE_PROBABILITY,
        workers: rayon::current_num_threads(),
        mismatches,
    })
}

/// `count` seeded random connected graphs with `min..=max` vertices.
pub fn random(
    count: usize,
    min_vertices: usize,
    max_vertices: usize,
    seed: u64,
    p: f64,
    limits: &Limits,
) -> Result<VerifyReport> {
    let graphs = random_graphs(count, min_vertices, max_vertices, seed, p);
    let mut mismatches = check_all(&graphs, limits, max_vertices <= 12)?;
    let pool: Vec<Graph> = random_graphs(40, 1, max_vertices.min(5), seed ^ 0x5eed, p);
    let (law_checks, laws) = check_operation_laws(&pool, 40, seed, limits)?;
    mismatches.extend(laws);
    Ok(VerifyReport {
        mode: format!("random {count} graphs, {min_vertices}-{max_vertices} vertices"),
        graphs: graphs.len(),
        law_checks,
        seed,
        edge_probability: p,
        workers: rayon::current_num_threads(),
        mismatches,
    })
}

pub fn random_graphs(
    count: usize,
    min_vertices: usize,
    max_vertices: usize,
    seed: u64,
    p: f64,
) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_vertices..=max_vertices);
            random_connected_graph(&mut rng, n, p)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn connected_graph_counts() {
        // labeled connected graphs: 1, 1, 4, 38, 728
        let counts: Vec<usize> = (1..=5)
            .map(|n| labeled_connected_graphs(n).count())
            .collect();
        assert_eq!(counts, vec![1, 1, 4, 38, 728]);
    }

    #[test]
    fn random_graphs_are_reproducible() {
        let a = random_graphs(5, 6, 9, 42, DEFAULT_EDGE_PROBABILITY);
        let b = random_graphs(5, 6, 9, 42, DEFAULT_EDGE_PROBABILITY);
        assert_eq!(a, b);
        assert!(a
            .iter()
            .all(|g| g.is_connected() && (6..=9).contains(&g.order())));
    }

    #[test]
    fn fixtures_pass_engine_checks() {
        let l = Limits::default();
        for g in [
            families::diamond(),
            families::pan(4).unwrap(),
            families::fig_bar_p3(),
        ] {
            assert!(check_engines(&g, &l).unwrap().is_empty());
            assert!(check_nongenerator_theorem(&g, &l).unwrap().is_empty());
        }
    }

    #[test]
    fn laws_on_fixtures() {
        let l = Limits::default();
        let c4 = families::cycle(4).unwrap();
        let p2 = families::path(2).unwrap();
        assert!(check_union_law(&c4, &p2, &l).unwrap().is_empty());
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(check_box_law(&c4, &p2, &mut rng, 20, &l)
            .unwrap()
            .is_empty());
        assert!(check_clique_sum_law(&[(&c4, 1), (&p2, 0)], &l)
            .unwrap()
            .is_empty());
    }
}
