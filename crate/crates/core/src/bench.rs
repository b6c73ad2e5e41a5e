//! Wall-clock comparison of engines at a single `(d, n)`.

use std::time::Instant;

use serde::Serialize;

use crate::engines::{Counter, Engine, WalkSpec};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchRecord {
    pub engine: String,
    pub d: usize,
    pub n: u64,
    pub repetitions: usize,
    pub min_ns: u64,
    pub median_ns: u64,
    /// Decimal string of the count.
    pub digest: String,
}

/// Times each engine `reps` times. Records come back sorted by engine name.
pub fn run_bench(
    spec: WalkSpec,
    engines: &[Engine],
    reps: usize,
    counter: &Counter,
) -> Result<Vec<BenchRecord>> {
    if reps == 0 {
        return Err(Error::InvalidArgument("reps must be at least 1".into()));
    }
    if engines.is_empty() {
        return Err(Error::InvalidArgument("no engines selected".into()));
    }
    let mut engines = engines.to_vec();
    engines.sort_by_key(|e| e.name());
    engines.dedup();

    let mut records = Vec::with_capacity(engines.len());
    for engine in engines {
        let mut times = Vec::with_capacity(reps);
        let mut digest = String::new();
        for _ in 0..reps {
            let start = Instant::now();
            let value = counter.count(engine, spec)?;
            times.push(start.elapsed().as_nanos() as u64);
            digest = value.to_string();
        }
        times.sort_unstable();
        records.push(BenchRecord {
            engine: engine.name().to_string(),
            d: spec.d(),
            n: spec.n(),
            repetitions: reps,
            min_ns: times[0],
            median_ns: times[times.len() / 2],
            digest,
        });
    }
    Ok(records)
}

pub fn digests_agree(records: &[BenchRecord]) -> bool {
    records.windows(2).all(|w| w[0].digest == w[1].digest)
}
