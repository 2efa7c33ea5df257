//! Timing comparison of the interpolation pipeline against Buchberger-Moller
//! on deterministic random point sets.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use idealgb::gbuilder::groebner_lagrange_counted;
use idealgb::oracle::bm_vanishing_ideal_counted;
use idealgb::workload::{random_ordering, random_points, rng};
use idealgb::OpCount;

use crate::commands::CliError;

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub seed: u64,
    pub dims: Vec<usize>,
    pub sizes: Vec<usize>,
    pub instances: usize,
    /// Smallest coordinate bound; grown when the grid is too small.
    pub bound: i64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self { seed: 0, dims: vec![2], sizes: vec![8, 16, 32], instances: 3, bound: 5 }
    }
}

#[derive(Debug, Clone)]
pub struct BenchRow {
    pub dim: usize,
    pub size: usize,
    pub instances: usize,
    pub pipeline: Duration,
    pub bm: Duration,
    pub pipeline_ops: OpCount,
    pub bm_ops: OpCount,
    pub agree: bool,
    /// Hash of every printed basis in the row; identical for identical seeds.
    pub digest: u64,
}

impl BenchRow {
    pub fn speedup(&self) -> f64 {
        self.bm.as_secs_f64() / self.pipeline.as_secs_f64().max(1e-12)
    }
}

fn fnv1a(mut h: u64, bytes: &[u8]) -> u64 {
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

fn bound_for(dim: usize, size: usize, min: i64) -> i64 {
    let mut b = min.max(1);
    while ((2 * b + 1) as f64).powi(dim as i32) < (2 * size) as f64 {
        b += 1;
    }
    b
}

pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRow>, CliError> {
    if config.instances == 0 {
        return Err(CliError::Invalid("--instances must be positive".into()));
    }
    let mut rows = Vec::new();
    for &dim in &config.dims {
        if dim == 0 {
            return Err(CliError::Invalid("dimensions must be positive".into()));
        }
        let vars: Vec<String> = (1..=dim).map(|i| format!("x{i}")).collect();
        for &size in &config.sizes {
            if size == 0 {
                return Err(CliError::Invalid("sizes must be positive".into()));
            }
            let bound = bound_for(dim, size, config.bound);
            let mut row = BenchRow {
                dim,
                size,
                instances: config.instances,
                pipeline: Duration::ZERO,
                bm: Duration::ZERO,
                pipeline_ops: OpCount::default(),
                bm_ops: OpCount::default(),
                agree: true,
                digest: 0xcbf2_9ce4_8422_2325,
            };
            for i in 0..config.instances {
                let stream = (dim as u64) << 48 ^ (size as u64) << 24 ^ i as u64;
                let mut r = rng(config.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ stream);
                let ord = random_ordering(&mut r, dim);
                let points = random_points(&mut r, dim, size, bound);

                let t = Instant::now();
                let ours = groebner_lagrange_counted(&points, &ord, &mut row.pipeline_ops).map_err(CliError::from_core)?;
                row.pipeline += t.elapsed();

                let t = Instant::now();
                let bm = bm_vanishing_ideal_counted(&points, &ord, &mut row.bm_ops).map_err(CliError::from_core)?;
                row.bm += t.elapsed();

                row.agree &= ours.same_basis(&bm);
                for g in &ours.basis {
                    row.digest = fnv1a(row.digest, g.to_text(&ord, &vars).as_bytes());
                    row.digest = fnv1a(row.digest, b"\n");
                }
            }
            rows.push(row);
        }
    }
    Ok(rows)
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

pub fn render_table(rows: &[BenchRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>3} {:>4} {:>5} {:>12} {:>12} {:>8} {:>14} {:>14} {:>6}  {}",
        "d", "n", "inst", "pipeline_ms", "bm_ms", "bm/pipe", "pipeline_ops", "bm_ops", "agree", "digest"
    );
    for r in rows {
        let _ = writeln!(
            out,
            "{:>3} {:>4} {:>5} {:>12.3} {:>12.3} {:>8.2} {:>14} {:>14} {:>6}  {:016x}",
            r.dim,
            r.size,
            r.instances,
            ms(r.pipeline),
            ms(r.bm),
            r.speedup(),
            r.pipeline_ops.total(),
            r.bm_ops.total(),
            if r.agree { "yes" } else { "NO" },
            r.digest
        );
    }
    out
}

/// Same as [`render_table`] without the wall-clock columns.
pub fn render_deterministic(rows: &[BenchRow]) -> String {
    rows.iter()
        .map(|r| {
            format!(
                "{} {} {} {} {} {} {:016x}\n",
                r.dim,
                r.size,
                r.instances,
                r.pipeline_ops.total(),
                r.bm_ops.total(),
                r.agree,
                r.digest
            )
        })
        .collect()
}
