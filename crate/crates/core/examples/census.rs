//! Lists every trivalent diagram with a few arcs, one per conjugacy class,
//! and checks the totals against the generating series.

use trivalent::census::enumerate_size;
use trivalent::counting::{counts, CountKind};
use trivalent::diagram::{automorphism_order, rot_orbits};

fn main() -> trivalent::Result<()> {
    let max = 6;
    let pointed = counts(CountKind::Pointed, max, false)?;
    let classes = counts(CountKind::Classes, max, false)?;
    for n in 1..=max {
        let report = enumerate_size(n, true)?;
        println!(
            "size {n}: {} classes, {} subgroups (series: {}, {})",
            report.unpointed_classes,
            report.pointed_classes,
            classes[n - 1],
            pointed[n - 1]
        );
        for d in &report.class_representatives {
            let vertices = rot_orbits(d).len();
            println!(
                "  {d}    |Aut|={} vertices={vertices}",
                automorphism_order(d)?
            );
        }
    }
    Ok(())
}
