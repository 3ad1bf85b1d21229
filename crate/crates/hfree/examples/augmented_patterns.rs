//! Augmented patterns: attach two wedges to every non-edge of a pattern,
//! keeping 3-colorability and the triangle count intact.
//!
//!     cargo run --release -p hfree --example augmented_patterns

use hfree::augment::{augment, verify_augment_preserves};
use hfree::fixtures;
use hfree::pattern::Pattern;

fn main() {
    for (name, pattern) in [
        ("P5", Pattern::plain(fixtures::path(5))),
        ("P6", Pattern::plain(fixtures::path(6))),
        ("C7", Pattern::plain(fixtures::cycle(7))),
        ("K4", Pattern::plain(fixtures::clique(4))),
    ] {
        let aug = augment(&pattern);
        let report = verify_augment_preserves(&pattern);
        println!(
            "{name}: {} vertices -> {} vertices ({} wedge pairs), \
             3-colorability preserved: {}, triangle count preserved: {}",
            pattern.n(),
            aug.graph().n(),
            aug.wedges().len(),
            report.chromatic_ok,
            report.triangle_ok,
        );
    }

    // The point of the wedges: once a non-edge of the base pattern shows up
    // as an edge, it closes two triangles.
    let aug = augment(&Pattern::plain(fixtures::path(5)));
    let (x, y) = aug.wedge(0, 3).unwrap();
    let mut host = aug.graph().clone();
    assert_eq!(host.count_triangles(), 0);
    host.add_edge(0, 3);
    println!(
        "adding the non-edge (0,3) to the augmented 5-path closes triangles (0,3,{x}) and (0,3,{y}); \
         total triangles now {}",
        host.count_triangles()
    );
    assert!(host.is_triangle([0, 3, x]) && host.is_triangle([0, 3, y]));
}
