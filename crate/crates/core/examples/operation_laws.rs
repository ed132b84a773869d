//! Maximal nongenerating sets of unions, box products and 1-clique sums
//! predicted from the parts and compared with direct enumeration.

use geodetic_games::verify::{check_box_law, check_clique_sum_law, check_union_law};
use geodetic_games::{convexity, families, ClosureKind, Limits};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> geodetic_games::Result<()> {
    let limits = Limits::default();
    let c4 = families::cycle(4)?;
    let p3 = families::path(3)?;
    let k3 = families::complete(3)?;

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut mismatches = check_union_law(&c4, &p3, &limits)?;
    mismatches.extend(check_box_law(&c4, &p3, &mut rng, 50, &limits)?);
    mismatches.extend(check_clique_sum_law(
        &[(&c4, 0), (&p3, 0), (&k3, 1)],
        &limits,
    )?);
    println!("law mismatches: {}", mismatches.len());

    let b = geodetic_games::graph::box_product(&c4, &p3)?;
    let n = convexity::maximal_nongenerating(&b, ClosureKind::Hull, &limits)?;
    println!(
        "C4 box P3: {} maximal nongenerating sets, Phi = {}",
        n.len(),
        b.format_set(n.intersection())
    );
    Ok(())
}
