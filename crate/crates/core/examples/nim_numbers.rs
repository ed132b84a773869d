//! Nim-numbers of both games on a few graphs, with a winning first move.

use geodetic_games::game::{self, nim_auto};
use geodetic_games::{families, GameKind, GameSpec, Limits, VertexSet};

fn main() -> geodetic_games::Result<()> {
    let limits = Limits::default();
    for text in [
        "diamond", "pan:4", "wheel:5", "petersen", "grid:3x4", "fig-nim7",
    ] {
        let g = families::parse_family_spec(text)?.build()?;
        for kind in GameKind::BOTH {
            let spec = GameSpec::hull(kind);
            let (nim, engine) = nim_auto(&g, spec, &limits)?;
            let mv = game::winning_move(&g, spec, VertexSet::EMPTY)?;
            let mv = mv.map_or("none".to_string(), |v| g.label(v));
            println!("{text:<10} {kind}  nim {nim:<2} winning move {mv:<6} ({engine})");
        }
    }
    Ok(())
}
