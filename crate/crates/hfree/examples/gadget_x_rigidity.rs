//! The six-terminal gadget X: in every proper 3-coloring its three vertex
//! pairs carry the three distinct unordered pairs of distinct colors.
//!
//!     cargo run --release -p hfree --example gadget_x_rigidity

use hfree::coloring::enumerate_extendable_colorings;
use hfree::gadgets::{gadget_x, X_PAIRS};

fn main() {
    let x = gadget_x();
    println!(
        "gadget X: {} vertices, {} edges, triangles: {}",
        x.graph.n(),
        x.graph.m(),
        x.graph.count_triangles()
    );

    let terminals: Vec<_> = ["u", "v", "w", "x1", "x2", "y1", "y2", "z1", "z2"]
        .iter()
        .map(|t| x.terminal(t))
        .collect();
    let extendable = enumerate_extendable_colorings(&x.graph, &terminals);
    println!("extendable assignments over the 9 terminals (out of 3^9 = 19683): {}", extendable.len());
    for a in &extendable {
        let core = &a[..3];
        let pairs: Vec<String> = X_PAIRS
            .iter()
            .enumerate()
            .map(|(j, names)| format!("{{{},{}}}={{{},{}}}", names[0], names[1], a[3 + 2 * j], a[4 + 2 * j]))
            .collect();
        println!("  core (u,v,w) = {core:?}, {}", pairs.join(", "));
    }
    // each core rainbow ordering forces a unique coloring on the pairs
    assert_eq!(extendable.len(), 6);
}
