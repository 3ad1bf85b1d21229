//! Scaling harness: instance counts of color-coded generation across a
//! size ladder, with a measured growth exponent.

use std::time::Instant;

use serde::Serialize;

use crate::fixtures;
use crate::graph::ceil_sqrt;
use crate::reductions::{
    color_code, refine_classes, triangle_or_sqrt_coloring, ColorCodeResult, TriangleOrColoring,
};

#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub classes: usize,
    pub instance_count: usize,
    pub max_instance_size: usize,
    pub wall_ms: u128,
    /// Phase I found a triangle, so no instances were generated.
    pub short_circuited: bool,
}

/// Runs color coding on one sparse random host per ladder size. The hosts
/// keep a fixed expected degree, so the number of refined classes tracks
/// `√n` and the instance count its cube-over-six.
pub fn bench_color_code_ladder(sizes: &[usize], avg_degree: f64, seed: u64) -> Vec<BenchRow> {
    sizes.iter().map(|&n| bench_one(n, avg_degree, seed)).collect()
}

fn bench_one(n: usize, avg_degree: f64, seed: u64) -> BenchRow {
    let p = if n > 1 { (avg_degree / (n - 1) as f64).min(1.0) } else { 0.0 };
    let g = fixtures::gnp(n, p, seed ^ n as u64);
    let classes = match triangle_or_sqrt_coloring(&g) {
        TriangleOrColoring::Coloring(c) => {
            refine_classes(&c, 2).classes().iter().filter(|cl| !cl.is_empty()).count()
        }
        TriangleOrColoring::Triangle(_) => 0,
    };
    let start = Instant::now();
    let result = color_code(&g);
    let wall_ms = start.elapsed().as_millis();
    match result {
        ColorCodeResult::Instances(instances) => {
            let s = ceil_sqrt(n);
            debug_assert!(instances.iter().all(|i| i.n() <= 6 * s));
            BenchRow {
                n,
                m: g.m(),
                classes,
                instance_count: instances.len(),
                max_instance_size: instances.iter().map(|i| i.n()).max().unwrap_or(0),
                wall_ms,
                short_circuited: false,
            }
        }
        ColorCodeResult::Triangle(_) => BenchRow {
            n,
            m: g.m(),
            classes,
            instance_count: 0,
            max_instance_size: 0,
            wall_ms,
            short_circuited: true,
        },
    }
}

/// Least-squares slope of `ln(instance_count)` against `ln(n)` over rows
/// that produced instances. `None` with fewer than two usable rows.
pub fn measured_exponent(rows: &[BenchRow]) -> Option<f64> {
    let points: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| !r.short_circuited && r.instance_count > 0)
        .map(|r| ((r.n as f64).ln(), (r.instance_count as f64).ln()))
        .collect();
    if points.len() < 2 {
        return None;
    }
    let n = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let cov: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let var: f64 = points.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    (var > 0.0).then(|| cov / var)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ladder_produces_rows_and_exponent() {
        let rows = bench_color_code_ladder(&[64, 256], 2.0, 17);
        assert_eq!(rows.len(), 2);
        assert!(rows.iter().all(|r| !r.short_circuited));
        assert!(measured_exponent(&rows).is_some());
    }

    #[test]
    fn instance_count_matches_class_count() {
        for row in bench_color_code_ladder(&[128], 2.0, 3) {
            let k = row.classes;
            assert_eq!(row.instance_count, k * (k - 1) * (k - 2) / 6);
        }
    }
}
