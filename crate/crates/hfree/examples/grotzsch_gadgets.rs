//! The Grötzsch graph and the equality/inequality gadgets carved from it.
//!
//!     cargo run --release -p hfree --example grotzsch_gadgets

use hfree::coloring::{enumerate_extendable_colorings, is_three_colorable};
use hfree::gadgets::{eq_gadget, eq_set_gadget, grotzsch, neq_gadget, verify_eq_set_rigidity};

fn main() {
    let g = grotzsch();
    println!(
        "Grötzsch graph: {} vertices, {} edges, triangle-free: {}, 3-colorable: {}",
        g.graph.n(),
        g.graph.m(),
        g.graph.is_triangle_free(),
        is_three_colorable(&g.graph),
    );
    // 4-critical: deleting any single edge restores 3-colorability
    g.verify_invariants().expect("4-criticality");
    println!("deleting any one of the {} edges makes it 3-colorable", g.graph.m());

    let eq = eq_gadget();
    let projections = enumerate_extendable_colorings(&eq.graph, &[eq.terminal("u"), eq.terminal("v")]);
    println!("\nEQ gadget ({} vertices): extendable terminal colorings {projections:?}", eq.graph.n());

    let neq = neq_gadget();
    let projections =
        enumerate_extendable_colorings(&neq.graph, &[neq.terminal("u"), neq.terminal("v")]);
    println!("NEQ gadget ({} vertices): extendable terminal colorings {projections:?}", neq.graph.n());

    let eqs = eq_set_gadget(3);
    println!(
        "EQ against a 3-set ({} vertices): all-equal projections only: {}",
        eqs.graph.n(),
        verify_eq_set_rigidity(&eqs, 3),
    );
}
