//! Inclusion and conjugacy of subgroups given by pointed diagrams.
//!
//! A pointed morphism exists exactly when the first subgroup is contained
//! in the second; otherwise the closure stops on a critical pair.

use trivalent::diagram::{
    conjugate_subgroups, parse_diagram, pointed_morphism, Morphism, PointedDiagram,
};

fn show(name: &str, src: &PointedDiagram, dst: &PointedDiagram) {
    match pointed_morphism(src, dst) {
        Morphism::Found(map) => println!("{name}: included, arc map {map:?}"),
        Morphism::Obstructed(p) => println!(
            "{name}: not included, arc {} -> {} and {} (via {} of arc {})",
            p.arc,
            p.first,
            p.second,
            p.generator.name(),
            p.from
        ),
    }
}

fn main() -> trivalent::Result<()> {
    // index 6, automorphism group S_3
    let level_two =
        parse_diagram("n=6; rot=[1,2,0,4,5,3]; inv=[3,5,4,0,2,1]; base=0")?.pointed()?;
    // the unique subgroup of index 2
    let index_two = parse_diagram("n=2; rot=[0,1]; inv=[1,0]; base=0")?.pointed()?;
    // index 3, a loop with one leg
    let loop3 = parse_diagram("n=3; rot=[1,2,0]; inv=[1,0,2]; base=0")?.pointed()?;

    show("level two in index two", &level_two, &index_two);
    show("index two in loop", &index_two, &loop3);
    show("level two in loop", &level_two, &loop3);
    show(
        "anything in the whole group",
        &loop3,
        &PointedDiagram::terminal(),
    );

    for base in 0..3 {
        let moved = PointedDiagram::new(loop3.diagram().clone(), base)?;
        println!(
            "loop based at {base}: conjugate to base 0: {}, equal: {}",
            conjugate_subgroups(&loop3, &moved),
            pointed_morphism(&loop3, &moved).exists()
        );
    }
    Ok(())
}
