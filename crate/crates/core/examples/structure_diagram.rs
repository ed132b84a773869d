//! Structure digraph of the achievement game on the wheel W5, its type
//! triples, and the simplified diagram in DOT.

use geodetic_games::{families, GameKind, GameSpec, Limits, StructureDigraph};

fn main() -> geodetic_games::Result<()> {
    let g = families::wheel(5)?;
    let d = StructureDigraph::build(&g, GameSpec::hull(GameKind::Gen), &Limits::default())?;
    println!(
        "{} classes, {} edges, game nim {}",
        d.len(),
        d.edge_count(),
        d.game_nim()
    );
    for c in &d.classes {
        println!("  {:<16} {} height {}", g.format_set(c.set), c.ty, c.height);
    }
    let s = d.simplify();
    println!(
        "simplified to {} nodes, nim {}",
        s.len(),
        s.recomputed_game_nim()
    );
    print!("{}", s.to_dot());
    Ok(())
}
