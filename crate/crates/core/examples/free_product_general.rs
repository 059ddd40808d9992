//! Subgroups of Z * Z/2, where the rotation may be any permutation.
//! The series are checked against a direct census for small indices.

use trivalent::census::enumerate_size;
use trivalent::counting::{counts, CountKind};

fn main() -> trivalent::Result<()> {
    let max = 15;
    let pointed = counts(CountKind::Pointed, max, true)?;
    let classes = counts(CountKind::Classes, max, true)?;
    for n in 1..=max {
        let check = if n <= 6 {
            let census = enumerate_size(n, false)?;
            let ok = census.pointed_classes == pointed[n - 1]
                && census.unpointed_classes == classes[n - 1];
            if ok {
                "census agrees"
            } else {
                "CENSUS DISAGREES"
            }
        } else {
            ""
        };
        println!(
            "{n:>3} {:>20} {:>18}  {check}",
            pointed[n - 1],
            classes[n - 1]
        );
    }
    Ok(())
}
