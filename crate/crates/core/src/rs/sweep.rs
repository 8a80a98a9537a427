//! Exhaustive checks on RS(7, 3) over GF(8).

use serde::Serialize;

use super::{rs_decode, rs_decode_erasures, rs_encode, rs_new, ErasureSpec, FastConfig, FastDiv, FastEea, Impl, PointSet, RsCode};
use crate::complexity::{formula_direct, Algorithm, Step};
use crate::counts::OpCounts;
use crate::gf2m::{Field, Symbol};
use crate::poly::Poly;
use crate::Result;

#[derive(Debug, Clone, Serialize)]
pub struct SweepCheck {
    pub name: &'static str,
    pub cases: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl SweepCheck {
    fn new(name: &'static str) -> Self {
        SweepCheck { name, cases: 0, failures: 0, first_failure: None }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }
}

/// Largest direct-mode count seen for one step, beside its closed form.
#[derive(Debug, Clone, Serialize)]
pub struct StepMaximum {
    pub decoder: Algorithm,
    pub step: Step,
    pub measured: OpCounts,
    pub formula: OpCounts,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub checks: Vec<SweepCheck>,
    pub step_maxima: Vec<StepMaximum>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(SweepCheck::passed)
    }
}

/// Direct, default fast, and fast with every fast primitive forced on.
pub fn sweep_impls() -> [Impl; 3] {
    let forced = FastConfig { eea: FastEea::Feea, division: FastDiv::Newton, mul_threshold: 2, feea_crossover: 0 };
    [Impl::Direct, Impl::fast(), Impl::Fast(forced)]
}

pub fn rs73() -> RsCode {
    rs_new(Field::new(3, None).expect("GF(8)"), 7, 3, PointSet::Cyclic).expect("RS(7,3)")
}

fn all_messages() -> Vec<Poly> {
    (0..512u16).map(|v| Poly::new(vec![v & 7, (v >> 3) & 7, v >> 6])).collect()
}

/// Every error pattern with exactly `w` nonzero entries, on positions not in `avoid`.
fn patterns(n: usize, w: usize, avoid: &[usize]) -> Vec<Vec<(usize, Symbol)>> {
    let free: Vec<usize> = (0..n).filter(|p| !avoid.contains(p)).collect();
    let mut out = Vec::new();
    for pos in subsets(&free, w) {
        let mut mags = vec![1 as Symbol; w];
        loop {
            out.push(pos.iter().copied().zip(mags.iter().copied()).collect());
            let Some(i) = mags.iter().position(|&m| m < 7) else { break };
            mags[i] += 1;
            mags[..i].iter_mut().for_each(|m| *m = 1);
        }
    }
    out
}

fn subsets(items: &[usize], w: usize) -> Vec<Vec<usize>> {
    if w == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in subsets(&items[i + 1..], w - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

fn corrupt(word: &[Symbol], errs: &[(usize, Symbol)]) -> Vec<Symbol> {
    let mut w = word.to_vec();
    for &(p, e) in errs {
        w[p] ^= e;
    }
    w
}

fn distance(a: &[Symbol], b: &[Symbol]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

pub fn exhaustive_rs73() -> Result<SweepReport> {
    let code = rs73();
    let imps = sweep_impls();
    let msgs = all_messages();
    let codewords: Vec<Vec<Symbol>> = msgs.iter().map(|m| rs_encode(&code, m, Impl::Direct)).collect::<Result<_>>()?;

    let mut maxima: Vec<StepMaximum> = Vec::new();
    for alg in Algorithm::ALL {
        for (step, formula) in formula_direct(alg, 7, 3)? {
            maxima.push(StepMaximum { decoder: alg, step, measured: OpCounts::ZERO, formula });
        }
    }

    let mut round_trip = SweepCheck::new("round_trip_weight_le_2");
    let mut error_sets = SweepCheck::new("error_positions_exact");
    let mut within = SweepCheck::new("direct_counts_within_formula");
    let small: Vec<_> = (0..=2).flat_map(|w| patterns(7, w, &[])).collect();
    for (msg, cw) in msgs.iter().zip(&codewords) {
        for errs in &small {
            let received = corrupt(cw, errs);
            for alg in Algorithm::ALL {
                for imp in imps {
                    let res = rs_decode(&code, alg, &received, imp)?;
                    round_trip.record(res.is_ok() && res.message.as_ref() == Some(msg), || {
                        format!("{alg} {} msg {:?} errors {errs:?}", imp.name(), msg.coeffs())
                    });
                    let found: Vec<(usize, Symbol)> = res.errors.iter().map(|(&p, &e)| (p, e)).collect();
                    error_sets.record(&found == errs, || format!("{alg} {} errors {errs:?} found {found:?}", imp.name()));
                    if imp == Impl::Direct {
                        for mx in maxima.iter_mut().filter(|m| m.decoder == alg) {
                            let c = res.step(mx.step).unwrap_or_default();
                            mx.measured = OpCounts::new(mx.measured.mul.max(c.mul), mx.measured.add.max(c.add), mx.measured.inv.max(c.inv));
                            within.record(c.within(&mx.formula), || format!("{alg}.{} {c} > {}", mx.step, mx.formula));
                        }
                    }
                }
            }
        }
    }

    let mut erasures = SweepCheck::new("erasures_2f_plus_nu_le_4");
    for nu in 1..=4 {
        for erased in subsets(&(0..7).collect::<Vec<_>>(), nu) {
            let spec = ErasureSpec::new(&code, &erased)?;
            let errors: Vec<_> = (0..=(4 - nu) / 2).flat_map(|f| patterns(7, f, &erased)).collect();
            for (msg, cw) in msgs.iter().zip(&codewords) {
                for errs in &errors {
                    let mut received = corrupt(cw, errs);
                    erased.iter().for_each(|&p| received[p] = 0);
                    for alg in Algorithm::ALL {
                        for imp in imps {
                            let res = rs_decode_erasures(&code, &received, &spec, alg, imp)?;
                            erasures.record(res.is_ok() && res.message.as_ref() == Some(msg), || {
                                format!("{alg} {} erased {erased:?} errors {errs:?}", imp.name())
                            });
                        }
                    }
                }
            }
        }
    }

    let mut beyond = SweepCheck::new("weight_3_fails_or_stays_within_t");
    let mut agree = SweepCheck::new("cross_decoder_agreement");
    let heavy = patterns(7, 3, &[]);
    for idx in [0usize, 0o321, 0o777] {
        for errs in &heavy {
            let received = corrupt(&codewords[idx], errs);
            let mut accepted: Option<Poly> = None;
            for alg in Algorithm::ALL {
                for imp in imps {
                    let res = rs_decode(&code, alg, &received, imp)?;
                    if !res.is_ok() {
                        beyond.record(true, String::new);
                        continue;
                    }
                    let msg = res.message.clone().unwrap_or_default();
                    let cw = rs_encode(&code, &msg, Impl::Direct)?;
                    let sound = res.codeword.as_ref() == Some(&cw) && distance(&cw, &received) <= code.t();
                    beyond.record(sound, || format!("{alg} {} errors {errs:?} gave a non-codeword or far word", imp.name()));
                    match &accepted {
                        None => accepted = Some(msg),
                        Some(prev) => agree.record(*prev == msg, || format!("{alg} {} disagrees on {errs:?}", imp.name())),
                    }
                }
            }
        }
    }

    Ok(SweepReport { checks: vec![round_trip, error_sets, erasures, beyond, agree, within], step_maxima: maxima })
}
