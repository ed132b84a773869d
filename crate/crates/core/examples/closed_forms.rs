//! Checks the closed forms for the standard families against the
//! structure engine and prints a per-row summary.

use std::collections::BTreeMap;

use geodetic_games::closed_forms::{table1, table1_cases};
use geodetic_games::Limits;

fn main() {
    let cells = table1(&table1_cases(), &Limits::default(), false);
    let mut rows: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for c in &cells {
        let e = rows.entry(c.row).or_default();
        e.0 += c.ok as usize;
        e.1 += 1;
        if !c.ok {
            println!(
                "mismatch: {} {} {} expected {} got {:?}",
                c.row, c.param, c.game, c.expected, c.computed
            );
        }
    }
    for (row, (ok, all)) in rows {
        println!("{row:<13} {ok}/{all}");
    }
}
