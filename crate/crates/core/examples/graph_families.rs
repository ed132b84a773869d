//! Building graphs from family descriptions, including combinators.

use geodetic_games::families;

fn main() -> geodetic_games::Result<()> {
    let specs = [
        "cycle:6",
        "grid:3x4",
        "hypercube:3",
        "genwheel:2,5",
        "split:2,3",
        "windmill:3x2",
        "corona(multipartite:2,3)",
        "box(path:2,cycle:4)",
        "union(cycle:3,path:2)",
        "join(path:2,path:3)",
        "cliquesum(cycle:4@0,path:3@0)",
    ];
    for text in specs {
        let spec = families::parse_family_spec(text)?;
        let g = spec.build()?;
        let diam = g.diameter().map_or("inf".to_string(), |d| d.to_string());
        println!(
            "{:<30} {:>2} vertices {:>3} edges, diameter {diam}",
            spec.to_string(),
            g.order(),
            g.edge_count()
        );
    }
    // edge-list round trip
    let g = families::pan(4)?;
    print!("{}", g.to_edge_list());
    Ok(())
}
