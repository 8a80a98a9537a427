//! Reed-Solomon evaluation codes and their decoders.
//!
//! A codeword is `(m(a_0), ..., m(a_(n-1)))` for a message `m` of degree
//! below `k`. Each decoder runs in one of two modes: `Direct` uses the
//! quadratic building blocks, `Fast` the additive FFT, fast multiplication
//! and (on request) the fast Euclidean algorithm and Newton division.

mod erasures;
mod syndrome;
mod syndromeless;

pub mod sweep;
pub use erasures::{rs_decode_erasures, ErasureSpec};
pub use syndrome::rs_decode_syndrome;
pub use syndromeless::{rs_decode_gao, rs_decode_gao_mod};

use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

use crate::cantor::{mpe, CantorCtx};
use crate::complexity::{Algorithm, Step};
use crate::counts::{Meter, OpCounts};
use crate::error::{Error, Result};
use crate::euclid::DEFAULT_CROSSOVER;
use crate::gf2m::{Field, Symbol};
use crate::mulstrat::{Multiplier, DEFAULT_FAST_THRESHOLD};
use crate::poly::{poly_eval_horner, poly_from_roots, Poly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointSet {
    /// `a_i = alpha^i`, `n = 2^m - 1`.
    Cyclic,
    Explicit(Vec<Symbol>),
}

#[derive(Debug, Clone)]
pub struct RsCode {
    field: Field,
    cantor: CantorCtx,
    n: usize,
    k: usize,
    points: Vec<Symbol>,
    g0: Poly,
    cyclic: bool,
    /// Position of each code point in the additive-FFT point order, when the
    /// evaluation subspace is the whole field.
    subspace_index: Option<Vec<usize>>,
}

/// Builds a code; `n - k` must be even.
pub fn rs_new(field: Field, n: usize, k: usize, points: PointSet) -> Result<RsCode> {
    if k < n && !(n - k).is_multiple_of(2) {
        return Err(Error::OddRedundancy(n - k));
    }
    RsCode::build(field, n, k, points, false)
}

impl RsCode {
    fn build(field: Field, n: usize, k: usize, points: PointSet, allow_no_redundancy: bool) -> Result<RsCode> {
        if k == 0 || k > n || (k == n && !allow_no_redundancy) || n > field.size() {
            return Err(Error::InvalidCode(format!(
                "need 0 < k < n <= 2^m, got n = {n}, k = {k}, 2^m = {}",
                field.size()
            )));
        }
        let points = match points {
            PointSet::Cyclic => {
                if n != field.order() {
                    return Err(Error::InvalidCode(format!(
                        "cyclic point set needs n = 2^m - 1 = {}, got {n}",
                        field.order()
                    )));
                }
                (0..n).map(|i| field.pow_alpha(i as i64)).collect()
            }
            PointSet::Explicit(pts) => {
                if pts.len() != n {
                    return Err(Error::LengthMismatch { expected: n, got: pts.len() });
                }
                let mut seen = BTreeSet::new();
                for &p in &pts {
                    field.check(p as u32)?;
                    if !seen.insert(p) {
                        return Err(Error::DuplicatePoint(p));
                    }
                }
                pts
            }
        };
        let cyclic = n == field.order() && points.iter().enumerate().all(|(i, &p)| p == field.pow_alpha(i as i64));
        let scratch = Meter::new(&field);
        let g0 = if cyclic { {
            let mut v = vec![0; n + 1];
            v[0] = 1;
            v[n] = 1;
            Poly::new(v)
        } } else { poly_from_roots(&scratch, &points) };
        let cantor = CantorCtx::new(&field);
        let subspace_index = (cantor.p() == field.m() as usize)
            .then(|| points.iter().map(|&p| cantor.index_of(p).expect("subspace is the whole field")).collect());
        Ok(RsCode { field, cantor, n, k, points, g0, cyclic, subspace_index })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn cantor(&self) -> &CantorCtx {
        &self.cantor
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn t(&self) -> usize {
        (self.n - self.k) / 2
    }

    pub fn d(&self) -> usize {
        self.n - self.k + 1
    }

    pub fn points(&self) -> &[Symbol] {
        &self.points
    }

    pub fn g0(&self) -> &Poly {
        &self.g0
    }

    pub fn is_cyclic(&self) -> bool {
        self.cyclic
    }

    /// The same code restricted to the positions in `keep`; `n - k` may be odd.
    pub(crate) fn punctured(&self, keep: &[usize]) -> Result<RsCode> {
        let pts = keep.iter().map(|&i| self.points[i]).collect();
        RsCode::build(self.field.clone(), keep.len(), self.k, PointSet::Explicit(pts), true)
    }

    fn check_word(&self, word: &[Symbol]) -> Result<()> {
        if word.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: word.len() });
        }
        word.iter().try_for_each(|&s| self.field.check(s as u32).map(|_| ()))
    }
}

/// How a decoder is implemented.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "mode")]
pub enum Impl {
    #[default]
    Direct,
    Fast(FastConfig),
}

impl Impl {
    pub fn fast() -> Impl {
        Impl::Fast(FastConfig::default())
    }

    pub fn name(&self) -> &'static str {
        match self {
            Impl::Direct => "direct",
            Impl::Fast(_) => "fast",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FastEea {
    /// Classical monic algorithm with fast cofactor products.
    Classic,
    Feea,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FastDiv {
    Long,
    Newton,
}

/// Method choices of the fast mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FastConfig {
    pub eea: FastEea,
    pub division: FastDiv,
    /// Operand length from which products use the additive FFT.
    pub mul_threshold: usize,
    /// Degree at or below which the fast Euclidean algorithm runs classically.
    pub feea_crossover: usize,
}

impl Default for FastConfig {
    fn default() -> Self {
        FastConfig {
            eea: FastEea::Classic,
            division: FastDiv::Long,
            mul_threshold: DEFAULT_FAST_THRESHOLD,
            feea_crossover: DEFAULT_CROSSOVER,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    DecodingFailure,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepRecord {
    pub step: Step,
    pub method: &'static str,
    pub counts: OpCounts,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecodeResult {
    pub decoder: Algorithm,
    pub implementation: Impl,
    pub status: Status,
    pub message: Option<Poly>,
    pub codeword: Option<Vec<Symbol>>,
    /// Position to error magnitude (received minus corrected), nonzero only.
    pub errors: BTreeMap<usize, Symbol>,
    pub failure: Option<String>,
    pub counts: OpCounts,
    pub steps: Vec<StepRecord>,
}

impl DecodeResult {
    pub fn is_ok(&self) -> bool {
        self.status == Status::Ok
    }

    pub fn step(&self, step: Step) -> Option<OpCounts> {
        self.steps.iter().find(|s| s.step == step).map(|s| s.counts)
    }
}

/// Collects per-step counts while a decoder runs.
pub(crate) struct Run<'f> {
    pub meter: Meter<'f>,
    steps: Vec<StepRecord>,
}

impl<'f> Run<'f> {
    pub fn new(field: &'f Field) -> Run<'f> {
        Run { meter: Meter::new(field), steps: Vec::new() }
    }

    pub fn step<T>(&mut self, step: Step, method: &'static str, f: impl FnOnce(&Meter<'f>) -> T) -> T {
        let (out, counts) = self.meter.measure(|| f(&self.meter));
        match self.steps.iter_mut().find(|s| s.step == step) {
            Some(rec) => rec.counts += counts,
            None => self.steps.push(StepRecord { step, method, counts }),
        }
        out
    }

    fn finish(self, code: &RsCode, alg: Algorithm, imp: Impl, received: &[Symbol], outcome: Outcome) -> DecodeResult {
        let mut steps = self.steps;
        steps.sort_by_key(|s| s.step);
        let counts = steps.iter().map(|s| s.counts).sum();
        let base = DecodeResult {
            decoder: alg,
            implementation: imp,
            status: Status::DecodingFailure,
            message: None,
            codeword: None,
            errors: BTreeMap::new(),
            failure: None,
            counts,
            steps,
        };
        match outcome {
            Outcome::Failure(why) => DecodeResult { failure: Some(why), ..base },
            Outcome::Message(m) => {
                let codeword = evaluate_all(code, &m);
                let errors: BTreeMap<usize, Symbol> = received
                    .iter()
                    .zip(&codeword)
                    .enumerate()
                    .filter(|(_, (r, c))| r != c)
                    .map(|(i, (r, c))| (i, r ^ c))
                    .collect();
                DecodeResult { status: Status::Ok, message: Some(m), codeword: Some(codeword), errors, ..base }
            }
        }
    }
}

pub(crate) enum Outcome {
    Message(Poly),
    Failure(String),
}

/// Uncounted evaluation of `m` at every code point.
fn evaluate_all(code: &RsCode, m: &Poly) -> Vec<Symbol> {
    code.points.iter().map(|&p| m.eval_plain(&code.field, p)).collect()
}

/// Encodes a message of degree below `k`.
pub fn rs_encode(code: &RsCode, message: &Poly, imp: Impl) -> Result<Vec<Symbol>> {
    if message.len() > code.k {
        return Err(Error::MessageTooLong { deg: message.deg_i() as usize, k: code.k });
    }
    message.coeffs().iter().try_for_each(|&c| code.field.check(c as u32).map(|_| ()))?;
    let meter = Meter::new(&code.field);
    Ok(match (imp, &code.subspace_index) {
        (Impl::Fast(_), Some(idx)) => {
            let vals = mpe(&meter, &code.cantor, message, code.cantor.p())?;
            idx.iter().map(|&i| vals[i]).collect()
        }
        _ => code.points.iter().map(|&p| poly_eval_horner(&meter, message, p)).collect(),
    })
}

fn multiplier<'c>(code: &'c RsCode, cfg: &FastConfig) -> Multiplier<'c> {
    Multiplier::fast(&code.cantor, cfg.mul_threshold)
}

/// Evaluates `f` at all code points through one transform over the field,
/// when the subspace covers it.
fn fast_eval_all(meter: &Meter, code: &RsCode, f: &Poly) -> Option<Vec<Symbol>> {
    let idx = code.subspace_index.as_ref()?;
    let vals = mpe(meter, &code.cantor, f, code.cantor.p()).ok()?;
    Some(idx.iter().map(|&i| vals[i]).collect())
}

/// Runs one of the three decoders.
pub fn rs_decode(code: &RsCode, alg: Algorithm, received: &[Symbol], imp: Impl) -> Result<DecodeResult> {
    match alg {
        Algorithm::Gao => rs_decode_gao(code, received, imp),
        Algorithm::GaoMod => rs_decode_gao_mod(code, received, imp),
        Algorithm::Syndrome => rs_decode_syndrome(code, received, imp),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf8() -> Field {
        Field::new(3, None).unwrap()
    }

    #[test]
    fn construction() {
        let code = rs_new(gf8(), 7, 3, PointSet::Cyclic).unwrap();
        assert_eq!((code.t(), code.d()), (2, 5));
        assert!(code.is_cyclic());
        let m = Meter::new(code.field());
        assert_eq!(code.g0(), &poly_from_roots(&m, code.points()));
        assert_eq!(code.g0(), &Poly::new(vec![1, 0, 0, 0, 0, 0, 0, 1]));
        let big = rs_new(Field::new(8, None).unwrap(), 255, 223, PointSet::Cyclic).unwrap();
        assert_eq!(big.t(), 16);
        assert_eq!(rs_new(gf8(), 6, 3, PointSet::Cyclic).unwrap_err(), Error::OddRedundancy(3));
        assert_eq!(
            rs_new(gf8(), 3, 1, PointSet::Explicit(vec![1, 2, 1])).unwrap_err(),
            Error::DuplicatePoint(1)
        );
        let shuffled = rs_new(gf8(), 3, 1, PointSet::Explicit(vec![0, 5, 3])).unwrap();
        assert!(!shuffled.is_cyclic());
        assert_eq!(shuffled.g0(), &poly_from_roots(&m, &[0, 5, 3]));
    }

    #[test]
    fn encoding() {
        let code = rs_new(gf8(), 7, 3, PointSet::Cyclic).unwrap();
        for imp in [Impl::Direct, Impl::fast()] {
            assert_eq!(rs_encode(&code, &Poly::zero(), imp).unwrap(), vec![0; 7]);
            assert_eq!(rs_encode(&code, &Poly::one(), imp).unwrap(), vec![1; 7]);
            assert_eq!(rs_encode(&code, &Poly::x(), imp).unwrap(), code.points().to_vec());
        }
        assert!(matches!(
            rs_encode(&code, &Poly::monomial(1, 3), Impl::Direct),
            Err(Error::MessageTooLong { deg: 3, k: 3 })
        ));
    }
}
