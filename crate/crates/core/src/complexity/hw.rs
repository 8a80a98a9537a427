use serde::Serialize;

use super::{check_params, Algorithm};
use crate::error::Result;

/// Critical path delay shared by every architecture.
pub const CPD: &str = "T_mult + T_add + T_mux";

/// Resources and timing of one functional unit, or of a whole decoder.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HwRow {
    pub unit: &'static str,
    pub multipliers: u64,
    pub adders: u64,
    pub inverters: u64,
    pub registers: u64,
    pub muxes: u64,
    pub latency: u64,
    /// Clock cycles per received word.
    pub cycles_per_word: u64,
}

#[allow(clippy::too_many_arguments)]
fn row(unit: &'static str, mult: u64, add: u64, inv: u64, reg: u64, mux: u64, lat: u64, cyc: u64) -> HwRow {
    HwRow { unit, multipliers: mult, adders: add, inverters: inv, registers: reg, muxes: mux, latency: lat, cycles_per_word: cyc }
}

/// Unit rows followed by the total row. Units run pipelined, so the total
/// latency is the sum and the total cycles per word is the slowest unit.
/// The syndrome architecture also pays `n + 21t` registers for the delay line
/// holding the received word.
pub fn hw_model(alg: Algorithm, n: usize, k: usize) -> Result<Vec<HwRow>> {
    let t = check_params(n, k)? as u64;
    let (n, k) = (n as u64, k as u64);
    let (units, extra_registers) = match alg {
        Algorithm::Syndrome => (
            vec![
                row("syndromes", 2 * t, 2 * t, 0, 10 * t, 2 * t, n + 6 * t, 6 * t),
                row("key_equation", 2 * t + 1, 2 * t + 1, 0, 10 * t + 5, 14 * t + 7, 12 * t, 12 * t),
                row("correction", 3 * t + 3, 3 * t + 1, 1, 12 * t + 10, 3 * t + 1, 3 * t, 3 * t),
            ],
            n + 21 * t,
        ),
        Algorithm::Gao => (
            vec![
                row("interpolation", n, n, 0, 5 * n, n, 4 * n, 3 * n),
                row("partial_gcd", n + 1, n + 1, 0, 5 * n + 5, 7 * n + 7, 12 * t, 12 * t),
                row(
                    "message_recovery",
                    2 * k + t + 3,
                    k + t + 1,
                    1,
                    6 * k + 5 * t + 8,
                    7 * k + 7 * t + 7,
                    6 * k + 4,
                    6 * k,
                ),
            ],
            0,
        ),
        Algorithm::GaoMod => (
            vec![
                row("interpolation", n, n, 0, 5 * n, n, 4 * n, 3 * n),
                row("partial_gcd", 2 * t + 1, 2 * t + 1, 0, 10 * t + 5, 14 * t + 7, 12 * t, 12 * t),
                row("message_recovery", 3 * n + 2, 3 * n + 1, 1, 7 * n + 7, 7 * n + 7, 6 * n + t - 2, 6 * n),
            ],
            0,
        ),
    };
    let sum = |f: fn(&HwRow) -> u64| units.iter().map(f).sum::<u64>();
    let total = HwRow {
        unit: "total",
        multipliers: sum(|r| r.multipliers),
        adders: sum(|r| r.adders),
        inverters: sum(|r| r.inverters),
        registers: sum(|r| r.registers) + extra_registers,
        muxes: sum(|r| r.muxes),
        latency: sum(|r| r.latency),
        cycles_per_word: units.iter().map(|r| r.cycles_per_word).max().unwrap_or(0),
    };
    let mut rows = units;
    rows.push(total);
    Ok(rows)
}
