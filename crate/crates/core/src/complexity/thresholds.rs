use serde::Serialize;

use super::{formula_direct, hw_model, total, Algorithm, HwRow};

/// Code length at which the integer formulas are swept.
const SWEEP_N: u64 = 1_000_000;
/// Rate grid step, in hundredths.
const GRID: u64 = 100;

/// One comparison swept over the rate `R = k/n`.
#[derive(Debug, Clone, Serialize)]
pub struct Threshold {
    pub name: &'static str,
    /// What the compared difference measures; positive means the first
    /// decoder is costlier.
    pub comparison: &'static str,
    /// Analytic crossover, `None` when the difference keeps its sign.
    pub expected: Option<f64>,
    /// Grid rates enclosing the first sign change, `None` if there is none.
    pub bracket: Option<(f64, f64)>,
}

impl Threshold {
    pub fn brackets_expected(&self) -> bool {
        match (self.expected, self.bracket) {
            (Some(r), Some((lo, hi))) => lo - 1e-12 <= r && r <= hi + 1e-12,
            (None, None) => true,
            _ => false,
        }
    }
}

fn sweep(name: &'static str, comparison: &'static str, expected: Option<f64>, diff: impl Fn(u64) -> f64) -> Threshold {
    let grid: Vec<(f64, f64)> = (1..GRID).map(|j| (j as f64 / GRID as f64, diff(j))).collect();
    let first = grid[0].1.signum();
    let bracket = grid.windows(2).find(|w| w[1].1 == 0.0 || w[1].1.signum() != first).map(|w| (w[0].0, w[1].0));
    Threshold { name, comparison, expected, bracket }
}

/// `(n, k)` at grid rate `j / GRID`.
fn code_at(j: u64) -> (usize, usize) {
    let t = (GRID - j) * SWEEP_N / (2 * GRID);
    (SWEEP_N as usize, (SWEEP_N - 2 * t) as usize)
}

fn direct_mul(alg: Algorithm, j: u64) -> f64 {
    let (n, k) = code_at(j);
    total(&formula_direct(alg, n, k).expect("grid codes are valid")).mul as f64
}

fn hw_total(alg: Algorithm, j: u64) -> HwRow {
    let (n, k) = code_at(j);
    hw_model(alg, n, k).expect("grid codes are valid").pop().expect("total row")
}

fn hw_diff(a: Algorithm, b: Algorithm, j: u64, f: fn(&HwRow) -> u64) -> f64 {
    f(&hw_total(a, j)) as f64 - f(&hw_total(b, j)) as f64
}

/// Sweeps every decoder comparison over `R` in steps of 0.01 and reports
/// where each difference changes sign.
///
/// Fast-implementation comparisons use the second-highest-order coefficients
/// (in units of `n log^2 n`) of the multiplication-count differences, since
/// the leading terms coincide.
pub fn rate_thresholds() -> Vec<Threshold> {
    use Algorithm::*;
    let r = |j: u64| j as f64 / GRID as f64;
    vec![
        sweep("direct.gao_vs_syndrome.mul", "gao - syndrome multiplications", Some(0.2), |j| {
            direct_mul(Gao, j) - direct_mul(Syndrome, j)
        }),
        sweep("direct.gao_vs_gao_mod.mul", "gao - gao-mod multiplications", Some(2.0 / 3.0), |j| {
            direct_mul(Gao, j) - direct_mul(GaoMod, j)
        }),
        sweep("fast.gao_vs_gao_mod.mul", "gao - gao-mod, 3/4 (25R - 13)", Some(0.52), |j| 0.75 * (25.0 * r(j) - 13.0)),
        sweep("fast.syndrome_vs_gao.mul", "syndrome - gao, 3/4 (1 - 31R)", Some(1.0 / 31.0), |j| {
            0.75 * (1.0 - 31.0 * r(j))
        }),
        sweep("fast.syndrome_vs_gao_mod.mul", "syndrome - gao-mod, -9/2 (2 + R)", None, |j| -4.5 * (2.0 + r(j))),
        sweep("hw.syndrome_vs_gao_mod.registers", "syndrome - gao-mod registers", Some(21.0 / 43.0), |j| {
            hw_diff(Syndrome, GaoMod, j, |h| h.registers)
        }),
        sweep("hw.gao_vs_gao_mod.registers", "gao - gao-mod registers", Some(9.0 / 17.0), |j| {
            hw_diff(Gao, GaoMod, j, |h| h.registers)
        }),
        sweep("hw.gao_vs_gao_mod.muxes", "gao - gao-mod multiplexers", Some(1.0 / 3.0), |j| {
            hw_diff(Gao, GaoMod, j, |h| h.muxes)
        }),
        sweep("hw.gao_vs_gao_mod.registers_and_muxes", "gao - gao-mod, min of register and mux differences", Some(9.0 / 17.0), |j| {
            hw_diff(Gao, GaoMod, j, |h| h.registers).min(hw_diff(Gao, GaoMod, j, |h| h.muxes))
        }),
        sweep("hw.syndrome_vs_gao.latency", "syndrome - gao latency", Some(1.0 / 7.0), |j| {
            hw_diff(Syndrome, Gao, j, |h| h.latency)
        }),
    ]
}
