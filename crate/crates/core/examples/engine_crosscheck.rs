//! Runs the three engines side by side on seeded random graphs.

use std::time::Instant;

use geodetic_games::game::{nim_with, Engine};
use geodetic_games::verify::{random_graphs, DEFAULT_EDGE_PROBABILITY};
use geodetic_games::{GameSpec, Limits};

fn main() -> geodetic_games::Result<()> {
    let limits = Limits::default();
    let graphs = random_graphs(50, 6, 12, 7, DEFAULT_EDGE_PROBABILITY);
    for engine in [Engine::Brute, Engine::Fast, Engine::Structure] {
        let start = Instant::now();
        let mut total = 0;
        for g in &graphs {
            for spec in GameSpec::all() {
                total += nim_with(g, spec, engine, &limits)?.value();
            }
        }
        println!(
            "{:<9} checksum {total} in {:.1} ms",
            engine.name(),
            start.elapsed().as_secs_f64() * 1e3
        );
    }
    let report = geodetic_games::verify::random(50, 6, 9, 7, DEFAULT_EDGE_PROBABILITY, &limits)?;
    println!(
        "cross-check: {} graphs, {} mismatches",
        report.graphs,
        report.mismatches.len()
    );
    Ok(())
}
