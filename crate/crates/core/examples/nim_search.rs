//! Random search for an avoidance game with a large nim-number, and the
//! disjoint-union probe for odd graphs.

use geodetic_games::game::Nimber;
use geodetic_games::search::{probe_union_odd, search, SearchConfig};
use geodetic_games::{GameKind, GameSpec, Limits};

fn main() -> geodetic_games::Result<()> {
    let limits = Limits::default();
    let cfg = SearchConfig {
        spec: GameSpec::hull(GameKind::Dng),
        target: Nimber(3),
        vertices: 8,
        iterations: 2000,
        seed: 11,
        edge_probability: 0.35,
        diameter2: false,
        geodetic_only: false,
        max_witnesses: 1,
    };
    let r = search(&cfg, &limits)?;
    println!("tried {} graphs, {} witnesses", r.tried, r.witnesses.len());
    for w in &r.witnesses {
        print!("{} (nim {}):\n{}", w.source, w.nim, w.graph);
    }
    let probe = probe_union_odd(100, 7, 3, 0.4, &limits)?;
    println!(
        "union probe: {} pairs, {} counterexamples",
        probe.pairs,
        probe.counterexamples.len()
    );
    Ok(())
}
