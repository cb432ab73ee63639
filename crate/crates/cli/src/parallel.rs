//! Parallel drivers for the per-row search kernels.
//!
//! Work is partitioned by `a` (or by grid point); rayon's indexed collect keeps
//! the merged output in the same order as the sequential kernels.

use std::env;

use fermatlab_core::explorer::{self, Conjecture1Row, NearMissScan, Solution};
use fermatlab_core::geometry::{self, SweepGrid, SweepRow};
use fermatlab_core::{Error, Natural, Result};
use rayon::prelude::*;

/// Caps sweep parallelism; `0` or unset means one thread per core.
pub const THREADS_ENV: &str = "FERMATLAB_THREADS";

pub fn thread_count() -> usize {
    env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .unwrap_or(0)
}

/// Runs `f` on a pool sized from [`THREADS_ENV`].
pub fn install<R: Send>(f: impl FnOnce() -> R + Send) -> R {
    match rayon::ThreadPoolBuilder::new()
        .num_threads(thread_count())
        .build()
    {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

pub fn flt_search(a_max: u64, n_min: u32, n_max: u32) -> Result<Vec<Solution>> {
    let rows: Result<Vec<Vec<Solution>>> = install(|| {
        (1..=a_max)
            .into_par_iter()
            .map(|a| explorer::flt_row(a, n_min, n_max))
            .collect()
    });
    Ok(rows?.into_iter().flatten().collect())
}

pub fn flt_brute_force(a_max: u64, n_max: u32) -> Result<Vec<Solution>> {
    if a_max < 2 || n_max < 3 {
        return Err(Error::Domain("need a_max >= 2 and n_max >= 3"));
    }
    flt_search(a_max, 3, n_max)
}

pub fn near_miss_search(a_max: u64, exponents: &[u32], cap: &Natural) -> Result<NearMissScan> {
    if a_max < 2 {
        return Err(Error::Domain("need a_max >= 2"));
    }
    let rows: Result<Vec<NearMissScan>> = install(|| {
        (1..=a_max)
            .into_par_iter()
            .map(|a| explorer::near_miss_row(a, exponents, cap))
            .collect()
    });
    let mut scan = NearMissScan::default();
    for row in rows? {
        scan.extend(row);
    }
    scan.sort();
    Ok(scan)
}

pub fn conjecture1_experiment(a_max: u64, n_max: u32) -> Vec<Conjecture1Row> {
    install(|| {
        (1..=a_max)
            .into_par_iter()
            .flat_map_iter(|a| explorer::conjecture1_row(a, n_max))
            .collect()
    })
}

pub fn geometry_sweep(grid: &SweepGrid) -> Result<Vec<SweepRow>> {
    let points = geometry::sweep_points(grid);
    install(|| {
        points
            .par_iter()
            .map(|&(a, b, n)| geometry::sweep_point(a, b, n))
            .collect()
    })
}
