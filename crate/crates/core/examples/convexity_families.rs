//! Maximal nongenerating sets, minimal generating sets and the Frattini
//! subset under both closure operators.

use geodetic_games::{families, ClosureKind, ConvexityReport, Limits};

fn main() -> geodetic_games::Result<()> {
    let limits = Limits::default();
    for text in [
        "path:4",
        "cycle:4",
        "pan:4",
        "hypercube:3",
        "multipartite:2,3",
    ] {
        let g = families::parse_family_spec(text)?.build()?;
        println!("{text}");
        for kind in ClosureKind::BOTH {
            let r = ConvexityReport::compute(&g, kind, &limits)?;
            println!("  [{kind}] N = {}", r.maximal_nongenerating.format(&g));
            println!("  [{kind}] G = {}", r.minimal_generating.format(&g));
            println!("  [{kind}] Phi = {}", g.format_set(r.frattini));
        }
    }
    Ok(())
}
