//! The self-reduction pipeline: triangle-or-coloring, color-coded instance
//! generation, sieving toward unique-triangle instances, and the
//! end-to-end detector for induced-pattern-free hosts.

mod colorcode;
mod detect;
mod sieve;

pub use colorcode::{
    color_code, color_code_for_colored_setting, color_code_with, random_three_partition,
    refine_classes, triangle_or_sqrt_coloring, ColorCodeResult, ColoredGraph, Instance,
    TriangleOrColoring,
};
pub use detect::{
    detect_induced_hfree, reduce_to_unique, BaseDetector, BruteForceDetector, DetectionReport,
    DetectionStats, PipelineConfig, PipelineError, ReductionResult, TriangleDetector, Verdict,
};
pub use sieve::{sieve, subsample_guesses};
