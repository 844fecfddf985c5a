//! Timing of [`recognize`](crate::recognize::recognize) on prebuilt graphs.

use std::hint::black_box;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::graph::Graph;
use crate::recognize::recognize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub calls: u64,
    pub nanos_per_call: f64,
    /// `nanos_per_call / (n + m)`.
    pub nanos_per_unit: f64,
}

/// Times `recognize(g)`. Calls are grouped into batches lasting at least
/// `batch` each; the fastest of `rounds` batches is reported, which filters
/// scheduler noise at small sizes.
pub fn time_recognize(g: &Graph, batch: Duration, rounds: usize) -> BenchRow {
    // Size the batch from one warm-up call.
    let start = Instant::now();
    black_box(recognize(black_box(g)).ok());
    let single = start.elapsed().max(Duration::from_nanos(1));
    let calls = (batch.as_nanos() / single.as_nanos()).clamp(1, 1 << 24) as u64;

    let mut best = f64::INFINITY;
    for _ in 0..rounds.max(1) {
        let start = Instant::now();
        for _ in 0..calls {
            black_box(recognize(black_box(g)).ok());
        }
        let per_call = start.elapsed().as_nanos() as f64 / calls as f64;
        best = best.min(per_call);
    }
    let units = (g.n() + g.m()).max(1) as f64;
    BenchRow {
        n: g.n(),
        m: g.m(),
        calls,
        nanos_per_call: best,
        nanos_per_unit: best / units,
    }
}

/// Largest over smallest `nanos_per_unit` across rows; 1.0 for fewer than
/// two rows.
pub fn spread(rows: &[BenchRow]) -> f64 {
    let ratios = rows.iter().map(|r| r.nanos_per_unit);
    let max = ratios.clone().fold(f64::NEG_INFINITY, f64::max);
    let min = ratios.fold(f64::INFINITY, f64::min);
    if rows.len() < 2 {
        1.0
    } else {
        max / min
    }
}
