//! Graphviz source for the barycentric subdivision of a diagram: black
//! vertices are rotation cycles, white vertices are edges.
//!
//! `cargo run --example barycentric_dot -- "n=3; rot=[1,2,0]; inv=[1,0,2]" | dot -Tsvg`

use trivalent::diagram::{barycentric_export, parse_diagram};

fn main() -> trivalent::Result<()> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "n=6; rot=[1,2,0,4,5,3]; inv=[3,5,4,0,2,1]".to_string());
    let parsed = parse_diagram(&text)?;
    let graph = barycentric_export(&parsed.diagram);
    eprintln!(
        "{} black, {} white, white degrees {:?}",
        graph.black,
        graph.white,
        graph.white_degrees()
    );
    print!("{}", graph.to_dot());
    Ok(())
}
