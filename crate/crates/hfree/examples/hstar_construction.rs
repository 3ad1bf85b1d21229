//! The pattern H*: six copies of a 3-colored pattern wired into coloring
//! gadgets so that every proper 3-coloring of H* realizes the forbidden
//! coloring on one copy. A 3-colored host avoiding the colored pattern can
//! therefore never contain H* as a subgraph.
//!
//!     cargo run --release -p hfree --example hstar_construction

use hfree::fixtures::colored_pattern_corpus;
use hfree::gadgets::{hstar, verify_hstar_soundness};

fn main() {
    for (name, pattern) in colored_pattern_corpus() {
        let hs = hstar(&pattern).expect("corpus patterns build");
        hs.gadget.verify_invariants().expect("kind invariants");
        let report = verify_hstar_soundness(&pattern, &hs);
        println!(
            "{name:12} ({} vertices, {} triangles) -> H* with {} vertices, {} edges, {} triangles; {report}",
            pattern.n(),
            pattern.graph().count_triangles(),
            hs.graph().n(),
            hs.graph().m(),
            hs.graph().count_triangles(),
        );
        assert!(report.sound);
        assert_eq!(hs.graph().count_triangles(), pattern.graph().count_triangles());
    }
}
