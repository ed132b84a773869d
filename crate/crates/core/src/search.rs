//! Random search for graphs with a prescribed nim-number, and the probe for
//! disjoint unions of odd graphs with avoidance nim-number 0.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::convexity::Limits;
use crate::error::Result;
use crate::families;
use crate::game::{nim_auto, GameKind, GameSpec, Nimber};
use crate::graph::{self, Graph};
use crate::verify::random_connected_graph;

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub spec: GameSpec,
    pub target: Nimber,
    pub vertices: usize,
    pub iterations: usize,
    pub seed: u64,
    pub edge_probability: f64,
    /// Only graphs of diameter at most 2.
    pub diameter2: bool,
    /// Only geodetic graphs: connected with unique shortest paths.
    pub geodetic_only: bool,
    /// Stop after this many witnesses.
    pub max_witnesses: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub source: String,
    pub nim: Nimber,
    pub graph: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub game: GameSpec,
    pub target: Nimber,
    pub vertices: usize,
    pub tried: usize,
    pub seed: u64,
    pub edge_probability: f64,
    pub witnesses: Vec<Witness>,
}

/// Whether every pair of vertices is joined by exactly one geodesic.
pub fn is_geodetic_graph(g: &Graph) -> bool {
    if !g.is_connected() {
        return false;
    }
    let n = g.order();
    (0..n).all(|u| {
        let mut count = vec![0u32; n];
        count[u] = 1;
        let mut by_dist: Vec<usize> = (0..n).collect();
        by_dist.sort_by_key(|&v| g.distance(u, v));
        for &v in by_dist.iter().skip(1) {
            count[v] = g
                .neighbors(v)
                .iter()
                .filter(|&w| g.distance(u, w) + 1 == g.distance(u, v))
                .map(|w| count[w])
                .sum();
        }
        count.iter().all(|&c| c == 1)
    })
}

fn accepts(cfg: &SearchConfig, g: &Graph) -> bool {
    if cfg.diameter2 && g.diameter().is_none_or(|d| d > 2) {
        return false;
    }
    if cfg.geodetic_only && !is_geodetic_graph(g) {
        return false;
    }
    true
}

pub fn search(cfg: &SearchConfig, limits: &Limits) -> Result<SearchReport> {
    let mut witnesses = Vec::new();
    let mut tried = 0;

    // known witnesses first
    let seeds = [
        ("fig-nim7", families::fig_nim7()),
        ("petersen", families::petersen()),
        ("diamond", families::diamond()),
        ("fig-disj", families::fig_disj()),
        ("fig-barP3", families::fig_bar_p3()),
    ];
    for (name, g) in seeds {
        if g.order() != cfg.vertices || !accepts(cfg, &g) {
            continue;
        }
        tried += 1;
        let (nim, _) = nim_auto(&g, cfg.spec, limits)?;
        if nim == cfg.target {
            witnesses.push(Witness {
                source: name.to_string(),
                nim,
                graph: g.to_edge_list(),
            });
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for i in 0..cfg.iterations {
        if witnesses.len() >= cfg.max_witnesses {
            break;
        }
        let g = random_connected_graph(&mut rng, cfg.vertices, cfg.edge_probability);
        if !accepts(cfg, &g) {
            continue;
        }
        tried += 1;
        let (nim, _) = nim_auto(&g, cfg.spec, limits)?;
        if nim == cfg.target {
            witnesses.push(Witness {
                source: format!("random #{i}"),
                nim,
                graph: g.to_edge_list(),
            });
        }
    }
    Ok(SearchReport {
        game: cfg.spec,
        target: cfg.target,
        vertices: cfg.vertices,
        tried,
        seed: cfg.seed,
        edge_probability: cfg.edge_probability,
        witnesses,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct UnionProbe {
    pub pairs: usize,
    pub seed: u64,
    /// Pairs where the union's avoidance nim-number is not 1.
    pub counterexamples: Vec<[String; 2]>,
}

/// Samples pairs of connected odd-order graphs whose avoidance game has
/// nim-number 0 and records those whose disjoint union does not have
/// nim-number 1.
pub fn probe_union_odd(
    pairs: usize,
    max_vertices: usize,
    seed: u64,
    p: f64,
    limits: &Limits,
) -> Result<UnionProbe> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spec = GameSpec::hull(GameKind::Dng);
    let odd_orders: Vec<usize> = (1..=max_vertices).filter(|n| n % 2 == 1).collect();
    let mut pool: Vec<Graph> = Vec::new();
    let mut attempts = 0;
    while pool.len() < 12 && attempts < 2000 {
        attempts += 1;
        let n = odd_orders[rng.gen_range(0..odd_orders.len())];
        let g = random_connected_graph(&mut rng, n, p);
        if nim_auto(&g, spec, limits)?.0 == Nimber::ZERO {
            pool.push(g);
        }
    }
    let mut counterexamples = Vec::new();
    let mut checked = 0;
    if !pool.is_empty() {
        for _ in 0..pairs {
            let g = &pool[rng.gen_range(0..pool.len())];
            let h = &pool[rng.gen_range(0..pool.len())];
            let u = graph::disjoint_union(g, h)?;
            checked += 1;
            if nim_auto(&u, spec, limits)?.0 != Nimber(1) {
                counterexamples.push([g.to_edge_list(), h.to_edge_list()]);
            }
        }
    }
    Ok(UnionProbe {
        pairs: checked,
        seed,
        counterexamples,
    })
}
