//! Extended Euclidean algorithm: classical (monic and inversion-free
//! cross-multiplication variants) with a partial-GCD stop, and the fast
//! divide-and-conquer variant on truncated operands.
//!
//! Results describe one point of the remainder sequence: `l` completed
//! division steps, the monic remainder `r_l`, the unnormalized next remainder
//! `r~_(l+1)`, and the matrix `R` with
//! `R[0] . (r0, r1) = r_l` and `R[1] . (r0, r1) = r~_(l+1)`.

use serde::Serialize;

use crate::complexity::{log2_ceil, mul_cost};
use crate::counts::{Meter, OpCounts};
use crate::error::{Error, Result};
use crate::gf2m::{Field, Symbol};
use crate::mulstrat::Multiplier;
use crate::poly::{divmod_monic, poly_add, poly_scale, Poly};

pub type Mat2 = [[Poly; 2]; 2];

fn identity() -> Mat2 {
    [[Poly::one(), Poly::zero()], [Poly::zero(), Poly::one()]]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EeaResult {
    pub l: usize,
    pub r_last: Poly,
    pub r_next_raw: Poly,
    /// Leading coefficient of `r_next_raw`, 1 when it is zero.
    pub rho: Symbol,
    /// `[[s_l, t_l], [s_(l+1), t_(l+1)]]`. The `s` entries are zero when
    /// their computation was switched off.
    pub r: Mat2,
}

impl EeaResult {
    pub fn s_next(&self) -> &Poly {
        &self.r[1][0]
    }

    pub fn t_next(&self) -> &Poly {
        &self.r[1][1]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopRule {
    /// Run until the remainder vanishes.
    Gcd,
    /// Stop at the first remainder of degree below the threshold.
    DegreeBelow(usize),
}

impl StopRule {
    fn reached(self, r: &Poly) -> bool {
        match (self, r.deg()) {
            (_, None) => true,
            (StopRule::Gcd, Some(_)) => false,
            (StopRule::DegreeBelow(d), Some(deg)) => deg < d,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EeaVariant {
    /// Every remainder made monic right away (one inversion per step).
    Monic,
    /// Inversion-free elementary reductions `lc(b) a - lc(a) x^d b`;
    /// remainders and cofactors carry an unknown common scale.
    CrossMult,
}

/// Options shared by the classical and fast algorithms.
#[derive(Debug, Clone, Copy)]
pub struct EeaConfig<'c> {
    pub mul: Multiplier<'c>,
    /// Compute `s_(l+1)`; the `s` column is needed only for the second row.
    pub want_s: bool,
    /// The fast algorithm hands subproblems with `deg r0` at most this to
    /// the classical one.
    pub crossover: usize,
}

/// Default crossover degree below which the fast algorithm runs classically.
pub const DEFAULT_CROSSOVER: usize = 32;

impl Default for EeaConfig<'static> {
    fn default() -> Self {
        EeaConfig { mul: Multiplier::schoolbook(), want_s: true, crossover: DEFAULT_CROSSOVER }
    }
}

fn check_order(r0: &Poly, r1: &Poly) -> Result<()> {
    match (r0.deg(), r1.deg()) {
        (None, _) => Err(Error::DegreeOrder("r0 must be nonzero".into())),
        (Some(a), Some(b)) if b >= a => Err(Error::DegreeOrder(format!("need deg r0 > deg r1, got {a} and {b}"))),
        _ => Ok(()),
    }
}

fn lc_or_one(p: &Poly) -> Symbol {
    if p.is_zero() {
        1
    } else {
        p.lc()
    }
}

/// `q * row`, skipping the `s` entry when it is not tracked.
fn mul_row(meter: &Meter, mul: &Multiplier, q: &Poly, row: &[Poly; 2], want_s: bool) -> [Poly; 2] {
    let s = if want_s { mul.mul(meter, q, &row[0]) } else { Poly::zero() };
    [s, mul.mul(meter, q, &row[1])]
}

fn add_row(meter: &Meter, a: &[Poly; 2], b: &[Poly; 2]) -> [Poly; 2] {
    [poly_add(meter, &a[0], &b[0]), poly_add(meter, &a[1], &b[1])]
}

fn scale_row(meter: &Meter, row: &[Poly; 2], c: Symbol) -> [Poly; 2] {
    [poly_scale(meter, &row[0], c), poly_scale(meter, &row[1], c)]
}

/// Classical extended Euclid on `(r0, r1)`, `deg r0 > deg r1`. The monic
/// variant needs monic inputs.
pub fn eea_classic(
    meter: &Meter,
    cfg: &EeaConfig,
    r0: &Poly,
    r1: &Poly,
    stop: StopRule,
    variant: EeaVariant,
) -> Result<EeaResult> {
    check_order(r0, r1)?;
    match variant {
        EeaVariant::Monic => {
            if !r0.is_monic() || !(r1.is_zero() || r1.is_monic()) {
                return Err(Error::NotMonic);
            }
            classic_monic(meter, cfg, r0.clone(), r1.clone(), stop)
        }
        EeaVariant::CrossMult => Ok(classic_cross(meter, cfg, r0.clone(), r1.clone(), stop)),
    }
}

fn classic_monic(meter: &Meter, cfg: &EeaConfig, r0: Poly, r1: Poly, stop: StopRule) -> Result<EeaResult> {
    let [row0, row1] = identity();
    let (mut cur, mut cur_row) = (r0, row0);
    let (mut next, mut next_row) = (r1, row1);
    let mut l = 0;
    loop {
        if stop.reached(&next) {
            let rho = lc_or_one(&next);
            return Ok(EeaResult { l, r_last: cur, r_next_raw: next, rho, r: [cur_row, next_row] });
        }
        if l > 0 {
            let inv = meter.inv(next.lc())?;
            next = poly_scale(meter, &next, inv);
            next_row = scale_row(meter, &next_row, inv);
        }
        let (q, rem) = divmod_monic(meter, &cur, &next)?;
        let new_row = add_row(meter, &cur_row, &mul_row(meter, &cfg.mul, &q, &next_row, cfg.want_s));
        (cur, cur_row) = (std::mem::replace(&mut next, rem), std::mem::replace(&mut next_row, new_row));
        l += 1;
    }
}

/// `lc(b) a - lc(a) x^d b` where `d = deg a - deg b`; the leading
/// coefficient cancels and is not computed.
fn reduce(meter: &Meter, a: &Poly, b: &Poly, lb: Symbol, la: Symbol, d: usize) -> Poly {
    let top = a.len() - 1;
    let out: Vec<Symbol> = (0..top)
        .map(|j| {
            let x = meter.mul(lb, a.coeff(j));
            if j >= d && j - d < b.len() {
                meter.add(x, meter.mul(la, b.coeff(j - d)))
            } else {
                x
            }
        })
        .collect();
    Poly::new(out)
}

/// `lb * a + la * x^d * b` on cofactors.
fn combine(meter: &Meter, a: &Poly, b: &Poly, lb: Symbol, la: Symbol, d: usize) -> Poly {
    let shifted = poly_scale(meter, b, la).shl(d);
    poly_add(meter, &poly_scale(meter, a, lb), &shifted)
}

fn classic_cross(meter: &Meter, cfg: &EeaConfig, r0: Poly, r1: Poly, stop: StopRule) -> EeaResult {
    let [mut a_row, mut b_row] = identity();
    let (mut a, mut b) = (r0, r1);
    let mut l = 0;
    while !stop.reached(&b) {
        // One division step: reduce a below deg b, then swap.
        let db = b.deg_i() as usize;
        let lb = b.lc();
        while let Some(da) = a.deg().filter(|&da| da >= db) {
            let la = a.lc();
            let d = da - db;
            a = reduce(meter, &a, &b, lb, la, d);
            let s = if cfg.want_s { combine(meter, &a_row[0], &b_row[0], lb, la, d) } else { Poly::zero() };
            a_row = [s, combine(meter, &a_row[1], &b_row[1], lb, la, d)];
        }
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut a_row, &mut b_row);
        l += 1;
    }
    let rho = lc_or_one(&b);
    EeaResult { l, r_last: a, r_next_raw: b, rho, r: [a_row, b_row] }
}

/// Number of division steps `j` with `deg r0 - deg r_j <= h < deg r0 - deg r_(j+1)`.
pub fn eta(field: &Field, r0: &Poly, r1: &Poly, h: usize) -> Result<usize> {
    check_order(r0, r1)?;
    let n0 = r0.deg_i() as usize;
    let meter = Meter::new(field);
    let cfg = EeaConfig { want_s: false, ..Default::default() };
    let stop = StopRule::DegreeBelow(n0.saturating_sub(h));
    let res = classic_cross(&meter, &cfg, r0.clone(), r1.clone(), if h >= n0 { StopRule::Gcd } else { stop });
    Ok(res.l)
}

/// Fast extended Euclid on monic `r0, r1` with `deg r0 > deg r1`: the
/// remainder-sequence point after `eta(r0, r1, h)` steps, identical to the
/// classical monic result for the same stop.
pub fn feea(meter: &Meter, cfg: &EeaConfig, r0: &Poly, r1: &Poly, h: usize) -> Result<EeaResult> {
    check_order(r0, r1)?;
    if !r0.is_monic() || !(r1.is_zero() || r1.is_monic()) {
        return Err(Error::NotMonic);
    }
    feea_rec(meter, cfg, r0, r1, h, cfg.want_s)
}

fn shift_split(p: &Poly, e: usize) -> (Poly, Poly) {
    (p.shr(e), p.low(e))
}

/// `row . (lo0, lo1) + top x^e`: a remainder of the full operands from the
/// one returned for their truncations.
fn lift(meter: &Meter, mul: &Multiplier, row: &[Poly; 2], lo0: &Poly, lo1: &Poly, top: &Poly, e: usize) -> Poly {
    if e == 0 {
        return top.clone();
    }
    let a = mul.mul(meter, &row[0], lo0);
    let b = mul.mul(meter, &row[1], lo1);
    poly_add(meter, &poly_add(meter, &a, &b), &top.shl(e))
}

fn feea_rec(meter: &Meter, cfg: &EeaConfig, r0: &Poly, r1: &Poly, h: usize, want_s: bool) -> Result<EeaResult> {
    let n0 = r0.deg_i() as usize;
    let trivial = |r1: &Poly| match r1.deg() {
        None => true,
        Some(n1) => h < n0 - n1,
    };
    if trivial(r1) {
        return Ok(EeaResult { l: 0, r_last: r0.clone(), r_next_raw: r1.clone(), rho: 1, r: identity() });
    }
    if n0 <= cfg.crossover {
        let sub = EeaConfig { want_s, ..*cfg };
        let stop = if h >= n0 { StopRule::Gcd } else { StopRule::DegreeBelow(n0 - h) };
        return classic_monic(meter, &sub, r0.clone(), r1.clone(), stop);
    }
    let mul = &cfg.mul;

    // First half: h/2 steps' worth of degree drop on the top 2(h/2) coefficients.
    let h1 = h / 2;
    let e = n0.saturating_sub(2 * h1);
    let (t0, lo0) = shift_split(r0, e);
    let (t1, lo1) = shift_split(r1, e);
    let first = feea_rec(meter, cfg, &t0, &t1, h1, true)?;
    let r_prev = lift(meter, mul, &first.r[0], &lo0, &lo1, &first.r_last, e);
    let r_raw = lift(meter, mul, &first.r[1], &lo0, &lo1, &first.r_next_raw, e);
    let [row_prev, row_raw] = first.r;
    let j = first.l + 1;
    if r_raw.is_zero() || r_raw.deg_i() < n0 as isize - h as isize {
        let rho = lc_or_one(&r_raw);
        return Ok(EeaResult { l: j - 1, r_last: r_prev, r_next_raw: r_raw, rho, r: [row_prev, row_raw] });
    }

    // One explicit division step.
    let inv = meter.inv(r_raw.lc())?;
    let r_j = poly_scale(meter, &r_raw, inv);
    let row_j = scale_row(meter, &row_raw, inv);
    let (q, r_next_raw) = divmod_monic(meter, &r_prev, &r_j)?;
    let row_next = add_row(meter, &row_prev, &mul_row(meter, mul, &q, &row_j, true));
    let n_j = r_j.deg_i() as usize;
    if r_next_raw.is_zero() || r_next_raw.deg_i() < n0 as isize - h as isize {
        let rho = lc_or_one(&r_next_raw);
        return Ok(EeaResult { l: j, r_last: r_j, r_next_raw, rho, r: [row_j, row_next] });
    }
    let inv = meter.inv(r_next_raw.lc())?;
    let r_next = poly_scale(meter, &r_next_raw, inv);
    let row_next = scale_row(meter, &row_next, inv);

    // Second half on the remaining degree budget.
    let h2 = h - (n0 - n_j);
    let e2 = n_j.saturating_sub(2 * h2);
    let (t0, lo0) = shift_split(&r_j, e2);
    let (t1, lo1) = shift_split(&r_next, e2);
    let second = feea_rec(meter, cfg, &t0, &t1, h2, true)?;
    let c = lift(meter, mul, &second.r[0], &lo0, &lo1, &second.r_last, e2);
    let d = lift(meter, mul, &second.r[1], &lo0, &lo1, &second.r_next_raw, e2);
    let s = &second.r;
    let entry = |a: &Poly, b: &Poly, x: &Poly, y: &Poly| {
        let p = mul.mul(meter, a, x);
        poly_add(meter, &p, &mul.mul(meter, b, y))
    };
    let top = [entry(&s[0][0], &s[0][1], &row_j[0], &row_next[0]), entry(&s[0][0], &s[0][1], &row_j[1], &row_next[1])];
    let bottom_s = if want_s { entry(&s[1][0], &s[1][1], &row_j[0], &row_next[0]) } else { Poly::zero() };
    let bottom = [bottom_s, entry(&s[1][0], &s[1][1], &row_j[1], &row_next[1])];
    let rho = lc_or_one(&d);
    Ok(EeaResult { l: j + second.l, r_last: c, r_next_raw: d, rho, r: [top, bottom] })
}

fn mul_terms(terms: &[(u64, usize)]) -> OpCounts {
    terms.iter().map(|&(c, x)| {
        let m = mul_cost(x);
        OpCounts::new(c * m.mul, c * m.add, c * m.inv)
    }).sum()
}

/// Cost ceiling of [`feea`] with polynomial products priced by the
/// additive-FFT ceiling. `n0 <= 2h` uses the tighter bound (with the
/// normal-degree-sequence constants when `normal`), otherwise the general one.
pub fn bound_feea(n0: usize, h: usize, normal: bool) -> OpCounts {
    let (n0u, hu) = (n0 as u64, h as u64);
    if n0 <= 2 * h {
        let lg = log2_ceil(h);
        if normal {
            let m = mul_terms(&[(10 * lg, h)]);
            m + OpCounts::new((55 * hu + 12) * lg / 2 + 1, (69 * hu + 6) * lg / 2 + 1, 3 * hu)
        } else {
            mul_terms(&[(17 * lg, h)]) + OpCounts::new((48 * hu + 2) * lg, (51 * hu + 2) * lg, 3 * hu)
        }
    } else {
        let half = h / 2;
        let lg = log2_ceil(half);
        let m = mul_terms(&[
            (34 * lg, half),
            (1, n0 / 2),
            (4, (2 * n0).saturating_sub(h).div_ceil(4)),
            (2, (n0 - h) / 2),
            (4, h),
            (2, 3 * h / 4),
            (4, half),
        ]);
        m + OpCounts::new((48 * hu + 4) * lg + 9 * n0u + 22 * hu, (51 * hu + 4) * lg + 11 * n0u + 17 * hu + 2, 3 * hu)
    }
}

/// Work saved by not computing `s_(l+1)`.
pub fn feea_s_savings(h: usize) -> OpCounts {
    let hu = h as u64;
    mul_terms(&[(2, h / 2)]) + OpCounts::new(3 * hu + 1, 4 * hu + 1, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly_mul_school;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf256() -> Field {
        Field::new(8, None).unwrap()
    }

    fn random_monic(rng: &mut ChaCha8Rng, deg: usize) -> Poly {
        let mut v: Vec<Symbol> = (0..deg).map(|_| rng.gen_range(0..256)).collect();
        v.push(1);
        Poly::new(v)
    }

    fn check_rows(m: &Meter, r0: &Poly, r1: &Poly, res: &EeaResult) {
        let apply = |row: &[Poly; 2]| poly_add(m, &poly_mul_school(m, &row[0], r0), &poly_mul_school(m, &row[1], r1));
        assert_eq!(apply(&res.r[0]), res.r_last);
        assert_eq!(apply(&res.r[1]), res.r_next_raw);
    }

    #[test]
    fn trivial_inputs() {
        let f = gf256();
        let m = Meter::new(&f);
        let cfg = EeaConfig::default();
        let g = Poly::new(vec![3, 0, 1]);
        for v in [EeaVariant::Monic, EeaVariant::CrossMult] {
            let res = eea_classic(&m, &cfg, &g, &Poly::zero(), StopRule::Gcd, v).unwrap();
            assert_eq!((res.l, &res.r_last, &res.r), (0, &g, &identity()));
        }
        let res = eea_classic(&m, &cfg, &Poly::new(vec![0, 1, 1]), &Poly::new(vec![1, 1]), StopRule::Gcd, EeaVariant::Monic)
            .unwrap();
        assert_eq!((res.r_last, res.r_next_raw), (Poly::new(vec![1, 1]), Poly::zero()));
        assert!(eea_classic(&m, &cfg, &Poly::x(), &g, StopRule::Gcd, EeaVariant::Monic).is_err());
    }

    #[test]
    fn bezout_at_every_stop() {
        let f = gf256();
        let m = Meter::new(&f);
        let cfg = EeaConfig::default();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let n0 = rng.gen_range(1..40);
            let r0 = random_monic(&mut rng, n0);
            let r1 = { let d = rng.gen_range(0..n0); random_monic(&mut rng, d) };
            for d in 0..=n0 {
                let mono = eea_classic(&m, &cfg, &r0, &r1, StopRule::DegreeBelow(d), EeaVariant::Monic).unwrap();
                check_rows(&m, &r0, &r1, &mono);
                assert!(mono.r_last.is_monic());
                let cross = eea_classic(&m, &cfg, &r0, &r1, StopRule::DegreeBelow(d), EeaVariant::CrossMult).unwrap();
                check_rows(&m, &r0, &r1, &cross);
                assert_eq!(cross.l, mono.l);
                assert_eq!(cross.r_next_raw.deg(), mono.r_next_raw.deg());
            }
        }
    }

    #[test]
    fn eta_matches_trace() {
        let f = gf256();
        let m = Meter::new(&f);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..50 {
            let n0 = rng.gen_range(1..30);
            let r0 = random_monic(&mut rng, n0);
            let r1 = { let d = rng.gen_range(0..n0); random_monic(&mut rng, d) };
            let full = eea_classic(&m, &EeaConfig::default(), &r0, &r1, StopRule::Gcd, EeaVariant::Monic).unwrap();
            assert_eq!(eta(&f, &r0, &r1, n0 + 3).unwrap(), full.l);
            assert_eq!(eta(&f, &r0, &r1, 0).unwrap(), 0);
        }
    }

    #[test]
    fn feea_matches_classic() {
        let f = gf256();
        let m = Meter::new(&f);
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..300 {
            let n0 = rng.gen_range(1..80);
            let r0 = random_monic(&mut rng, n0);
            let r1 = if rng.gen_bool(0.1) { Poly::zero() } else { { let d = rng.gen_range(0..n0); random_monic(&mut rng, d) } };
            let h = rng.gen_range(0..=n0);
            let cfg = EeaConfig { crossover: rng.gen_range(0..4), ..Default::default() };
            let fast = feea(&m, &cfg, &r0, &r1, h).unwrap();
            let stop = if h >= n0 { StopRule::Gcd } else { StopRule::DegreeBelow(n0 - h) };
            let slow = eea_classic(&m, &cfg, &r0, &r1, stop, EeaVariant::Monic).unwrap();
            assert_eq!(fast, slow, "n0 = {n0}, h = {h}");
            assert_eq!(fast.l, eta(&f, &r0, &r1, h).unwrap());
        }
    }
}
