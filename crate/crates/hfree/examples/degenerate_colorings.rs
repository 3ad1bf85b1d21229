//! Degenerate 3-colorings: certified by greedy peeling, found by pruned
//! backtracking. The augmented 5-path admits one, which is what lets the
//! fast base algorithms consume augmented path patterns.
//!
//!     cargo run --release -p hfree --example degenerate_colorings

use hfree::augment::augment;
use hfree::coloring::Coloring;
use hfree::degenerate::{check_degenerate_coloring, find_degenerate_coloring, DegenerateSearch};
use hfree::fixtures;
use hfree::pattern::Pattern;

fn main() {
    // hand-built: a single edge colored 0-1 peels immediately
    let edge = hfree::graph::Graph::from_edges(2, &[(0, 1)]);
    let c = Coloring::new(3, vec![0, 1]).unwrap();
    println!("edge colored (0,1): degenerate = {:?}", check_degenerate_coloring(&edge, &c));

    // the rainbow triangle is the exceptional subgraph and passes
    let k3 = fixtures::clique(3);
    let c = Coloring::new(3, vec![0, 1, 2]).unwrap();
    println!("rainbow K3: degenerate = {:?}", check_degenerate_coloring(&k3, &c));

    // search on the 17-vertex augmented 5-path
    let aug = augment(&Pattern::plain(fixtures::path(5)));
    match find_degenerate_coloring(aug.graph()).expect("at most one triangle") {
        DegenerateSearch::Found(coloring) => {
            println!(
                "augmented P5 ({} vertices): found a degenerate coloring",
                aug.graph().n()
            );
            println!("  base path colors: {:?}", &coloring.colors()[..5]);
            assert_eq!(check_degenerate_coloring(aug.graph(), &coloring), Ok(true));
        }
        other => panic!("search must succeed on the augmented 5-path, got {other:?}"),
    }

    // contrast on C6: the two-coloring gives every vertex a monochromatic
    // neighborhood, while the cyclic rainbow coloring leaves nothing to peel
    let c6 = fixtures::cycle(6);
    let two = Coloring::new(3, vec![0, 1, 0, 1, 0, 1]).unwrap();
    let rainbow = Coloring::new(3, vec![0, 1, 2, 0, 1, 2]).unwrap();
    println!("C6 colored 0,1,0,1,0,1: degenerate = {:?}", check_degenerate_coloring(&c6, &two));
    println!("C6 colored 0,1,2,0,1,2: degenerate = {:?}", check_degenerate_coloring(&c6, &rainbow));
    assert_eq!(check_degenerate_coloring(&c6, &two), Ok(true));
    assert_eq!(check_degenerate_coloring(&c6, &rainbow), Ok(false));
}
