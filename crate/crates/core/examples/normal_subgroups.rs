//! Normal subgroups of small index: diagrams whose automorphism group acts
//! transitively on the arcs. Prints whether that group is abelian.

use trivalent::census::enumerate_normal;
use trivalent::diagram::automorphisms;

fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    g.iter().map(|&x| f[x]).collect()
}

fn main() -> trivalent::Result<()> {
    for n in 1..=12 {
        let normal = enumerate_normal(n)?;
        if normal.is_empty() {
            continue;
        }
        println!("index {n}: {} normal", normal.len());
        for d in &normal {
            let auts = automorphisms(d)?;
            let abelian = auts
                .iter()
                .all(|f| auts.iter().all(|g| compose(f, g) == compose(g, f)));
            println!(
                "  {d}  order {} {}",
                auts.len(),
                if abelian { "abelian" } else { "non-abelian" }
            );
        }
    }
    Ok(())
}
