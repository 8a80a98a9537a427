//! Closed-form operation counts, cost ceilings, the hardware model, rate
//! thresholds and the case-study report.

mod hw;
mod report;
mod thresholds;

pub use hw::{hw_model, HwRow, CPD};
pub use report::{case_study_report, case_study_report_with, Report, ReportRow};
pub use thresholds::{rate_thresholds, Threshold};

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::counts::OpCounts;
use crate::error::{Error, Result};

/// Weighted cost `2m (mul + inv) + add`, in field-addition units.
pub fn overall_cost(c: OpCounts, m: u32) -> u64 {
    c.overall(m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    /// Interpolation, partial GCD on `(g0, g1)`, division `g / v`.
    Gao,
    /// Partial GCD on the top halves of `g0, g1`, then `g1 + (g0 / v) u`.
    GaoMod,
    Syndrome,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Gao, Algorithm::GaoMod, Algorithm::Syndrome];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Gao => "gao",
            Algorithm::GaoMod => "gao-mod",
            Algorithm::Syndrome => "syndrome",
        }
    }

    pub fn steps(self) -> &'static [Step] {
        match self {
            Algorithm::Gao | Algorithm::GaoMod => &[Step::Interpolation, Step::PartialGcd, Step::MessageRecovery],
            Algorithm::Syndrome => &[Step::Syndromes, Step::KeyEquation, Step::Chien, Step::Forney],
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Algorithm> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown decoder {s:?} (expected gao, gao-mod or syndrome)")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Step {
    Interpolation,
    PartialGcd,
    MessageRecovery,
    Syndromes,
    KeyEquation,
    Chien,
    Forney,
}

impl Step {
    pub fn name(self) -> &'static str {
        match self {
            Step::Interpolation => "interpolation",
            Step::PartialGcd => "partial_gcd",
            Step::MessageRecovery => "message_recovery",
            Step::Syndromes => "syndromes",
            Step::KeyEquation => "key_equation",
            Step::Chien => "chien",
            Step::Forney => "forney",
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Per-step counts in the algorithm's step order.
pub type StepCounts = Vec<(Step, OpCounts)>;

pub fn total(steps: &StepCounts) -> OpCounts {
    steps.iter().map(|s| s.1).sum()
}

fn check_params(n: usize, k: usize) -> Result<usize> {
    if k == 0 || k >= n {
        return Err(Error::InvalidCode(format!("need 0 < k < n, got n = {n}, k = {k}")));
    }
    if !(n - k).is_multiple_of(2) {
        return Err(Error::OddRedundancy(n - k));
    }
    Ok((n - k) / 2)
}

/// Direct-implementation counts per step, as closed forms in `n, k, t`.
pub fn formula_direct(alg: Algorithm, n: usize, k: usize) -> Result<StepCounts> {
    let t = check_params(n, k)? as u64;
    let (n, k) = (n as u64, k as u64);
    let c = OpCounts::new;
    Ok(match alg {
        Algorithm::Gao => vec![
            (Step::Interpolation, c(n * (n - 1), n * (n - 1), 0)),
            (Step::PartialGcd, c(4 * t * (n + 2), 2 * t * (n + 1), 0)),
            (Step::MessageRecovery, c((k + 2) * (k + 1) + 2 * k * t, k * (t + 2), 1)),
        ],
        Algorithm::GaoMod => {
            let recovery = if 2 * k > n {
                c(n * n + n * t + 5 * n + 5 - 2 * t * t - 2 * t, 2 * n * t + 2 * n + 2 - 2 * t * t, 1)
            } else {
                c((9 * n * n + 36 * n + 44).div_ceil(8), (3 * n * n + 12 * n + 12).div_ceil(8), 1)
            };
            vec![
                (Step::Interpolation, c(n * (n - 1), n * (n - 1), 0)),
                (Step::PartialGcd, c(4 * t * (2 * t + 2), 2 * t * (2 * t + 1), 0)),
                (Step::MessageRecovery, recovery),
            ]
        }
        Algorithm::Syndrome => vec![
            (Step::Syndromes, c(2 * t * (n - 1), 2 * t * (n - 1), 0)),
            (Step::KeyEquation, c(4 * t * (2 * t + 2), 2 * t * (2 * t + 1), 0)),
            (Step::Chien, c(n * (t - 1), n * t, 0)),
            (Step::Forney, c(2 * t * t, t * (2 * t - 1), t)),
        ],
    })
}

/// `ceil(log2 h)`, with `log 0 = log 1 = 0`.
pub fn log2_ceil(h: usize) -> u64 {
    h.max(1).next_power_of_two().trailing_zeros() as u64
}

/// Additive-FFT product ceiling for a product of fewer than `h` coefficients,
/// evaluated at `p = ceil(log2 h)`.
pub fn bound_cantor(h: usize) -> OpCounts {
    let (h, p) = (h as i64, log2_ceil(h) as i64);
    // Twice each ceiling keeps the halves exact.
    let mul2 = 3 * h * p * p + 7 * h * p - 4 * h + 2 * p + 4;
    let add2 = 3 * h * p * p + 21 * h * p - 26 * h + 2 * p + 30;
    let half_up = |v: i64| (v.max(0) as u64).div_ceil(2);
    OpCounts::new(half_up(mul2), half_up(add2), 2 * h as u64)
}

/// The looser multiplication ceiling `1.5 h log^2 h + 7.5 h log h + 8h`.
pub fn bound_cantor_loose_mul(h: usize) -> u64 {
    let (h, p) = (h as u64, log2_ceil(h));
    (3 * h * p * p + 15 * h * p + 16 * h).div_ceil(2)
}

/// Ceilings on additions in MPE and MPI at recursion level `i` with a
/// `p`-dimensional basis.
pub fn bound_mpe_mpi(i: u32, p: u32) -> (u64, u64) {
    let (i, p) = (i as i64, p as i64);
    let lin = (p - 3) * ((1 << i) - 1) + i;
    // i (i + c) 2^(i-2), exact for i >= 1.
    let quad = |c: i64| i * (i + c) * (1 << i) / 4;
    ((quad(3) + lin).max(0) as u64, (quad(5) + lin).max(0) as u64)
}

/// Cost model of one product of two polynomials with fewer than `x`
/// coefficients each: the additive-FFT ceiling at `2x - 1`.
pub fn mul_cost(x: usize) -> OpCounts {
    if x == 0 {
        OpCounts::ZERO
    } else {
        bound_cantor(2 * x - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_study_totals() {
        let tot = |a, n, k| total(&formula_direct(a, n, k).unwrap());
        assert_eq!(tot(Algorithm::Gao, 255, 223), OpCounts::new(138754, 76976, 1));
        assert_eq!(tot(Algorithm::GaoMod, 255, 223), OpCounts::new(136787, 73986, 1));
        assert_eq!(tot(Algorithm::Syndrome, 255, 223), OpCounts::new(14641, 13760, 16));
        assert_eq!(overall_cost(tot(Algorithm::Gao, 255, 223), 8), 2297056);
        assert_eq!(overall_cost(tot(Algorithm::GaoMod, 255, 223), 8), 2262594);
        assert_eq!(overall_cost(tot(Algorithm::Syndrome, 255, 223), 8), 248272);
        assert_eq!(overall_cost(tot(Algorithm::Gao, 511, 447), 9), 10317206);
        assert_eq!(overall_cost(tot(Algorithm::GaoMod, 511, 447), 9), 10142090);
        assert_eq!(overall_cost(tot(Algorithm::Syndrome, 511, 447), 9), 1117330);
        assert_eq!(overall_cost(OpCounts::new(0, 7, 0), 8), 7);
    }

    #[test]
    fn table_total_rows() {
        for (n, k) in [(255usize, 223usize), (511, 447), (63, 33), (100, 20), (15, 1)] {
            let t = ((n - k) / 2) as u64;
            let (nn, kk) = (n as u64, k as u64);
            let gao = total(&formula_direct(Algorithm::Gao, n, k).unwrap());
            assert_eq!(gao.mul, 2 * nn * nn + 2 * nn * t + 2 * nn + 2 * t + 2);
            assert_eq!(gao.add + 2 * t * t + 2 * t, nn * nn + 3 * nn * t + nn);
            let syn = total(&formula_direct(Algorithm::Syndrome, n, k).unwrap());
            assert_eq!(syn.mul + nn, 3 * nn * t + 10 * t * t + 6 * t);
            assert_eq!(syn.add + t, 3 * nn * t + 6 * t * t);
            if 2 * kk > nn {
                let gm = total(&formula_direct(Algorithm::GaoMod, n, k).unwrap());
                assert_eq!(gm.mul, 2 * nn * nn + nn * t + 6 * t * t + 4 * nn + 6 * t + 5);
                assert_eq!(gm.add, nn * nn + 2 * nn * t + 2 * t * t + nn + 2 * t + 2);
            }
        }
        let gm = formula_direct(Algorithm::GaoMod, 511, 447).unwrap();
        assert_eq!(gm[2].1, OpCounts::new(277921, 31680, 1));
        assert!(matches!(formula_direct(Algorithm::Gao, 6, 3), Err(Error::OddRedundancy(3))));
    }

    #[test]
    fn cantor_ceilings() {
        assert_eq!(bound_cantor(256).mul, 31242);
        for h in 2..=128 {
            let (a, b) = (bound_cantor(h), bound_cantor(2 * h));
            assert!(b.mul >= 2 * a.mul && b.add >= 2 * a.add, "h = {h}");
        }
        assert_eq!(bound_mpe_mpi(1, 3), (3, 4));
        for i in 1..=8 {
            let (e, s) = bound_mpe_mpi(i, 8);
            assert_eq!(s - e, (i as u64) << (i - 1));
        }
    }
}
