use super::{multiplier, DecodeResult, FastConfig, FastDiv, FastEea, Impl, Outcome, Run, RsCode};
use crate::cantor::mpi;
use crate::complexity::{Algorithm, Step};
use crate::counts::Meter;
use crate::error::Result;
use crate::euclid::{eea_classic, feea, EeaConfig, EeaResult, EeaVariant, StopRule};
use crate::gf2m::Symbol;
use crate::mulstrat::Multiplier;
use crate::newton::fast_divmod;
use crate::poly::{poly_add, poly_divmod_long, poly_idft_naive, poly_interp_lagrange, poly_scale, Poly};

/// Decoding by interpolation, partial GCD of `(g0, g1)` and the division
/// `g / v`.
pub fn rs_decode_gao(code: &RsCode, received: &[Symbol], imp: Impl) -> Result<DecodeResult> {
    code.check_word(received)?;
    decode(code, received, imp, Algorithm::Gao)
}

/// Decoding by interpolation, partial GCD of the top parts `g0 / x^k`,
/// `g1 / x^k`, and `m = g1 + (g0 / v) u`.
pub fn rs_decode_gao_mod(code: &RsCode, received: &[Symbol], imp: Impl) -> Result<DecodeResult> {
    code.check_word(received)?;
    decode(code, received, imp, Algorithm::GaoMod)
}

/// Shared by the plain and the erasure decoders; `code` may have odd
/// redundancy.
fn decode(code: &RsCode, received: &[Symbol], imp: Impl, alg: Algorithm) -> Result<DecodeResult> {
    let mut run = Run::new(&code.field);
    let outcome = run_steps(&mut run, code, received, imp, alg)?;
    Ok(run.finish(code, alg, imp, received, outcome))
}

pub(crate) fn run_steps(run: &mut Run, code: &RsCode, received: &[Symbol], imp: Impl, alg: Algorithm) -> Result<Outcome> {
    let g1 = interpolate(run, code, received, imp)?;
    match alg {
        Algorithm::Gao => gao(run, code, &g1, imp),
        _ => gao_mod(run, code, &g1, imp),
    }
}

fn interpolate(run: &mut Run, code: &RsCode, received: &[Symbol], imp: Impl) -> Result<Poly> {
    let fast_mpi = matches!(imp, Impl::Fast(_)) && code.cyclic && code.subspace_index.is_some();
    if fast_mpi {
        // Interpolate on the whole field with value 0 at the origin, then fold
        // the x^n term back using x^n = 1 on the code points.
        let idx = code.subspace_index.as_ref().expect("checked");
        let mut vals = vec![0; code.field.size()];
        for (i, &r) in received.iter().enumerate() {
            vals[idx[i]] = r;
        }
        return run.step(Step::Interpolation, "mpi", |m| {
            let f0 = mpi(m, &code.cantor, &vals)?;
            let mut c = f0.padded(code.n + 1);
            let z = c.pop().expect("n + 1 coefficients");
            c[0] = m.add(c[0], z);
            Ok(Poly::new(c))
        });
    }
    if code.cyclic {
        run.step(Step::Interpolation, "idft", |m| poly_idft_naive(m, &code.points, received))
    } else {
        run.step(Step::Interpolation, "lagrange", |m| poly_interp_lagrange(m, &code.points, received))
    }
}

/// Multiplies `c` in unless the scale is known to be 1.
fn rescale(m: &Meter, p: &Poly, c: Option<Symbol>) -> Poly {
    match c {
        Some(c) => poly_scale(m, p, c),
        None => p.clone(),
    }
}

/// Divides by a monic copy of `r1` so the monic algorithms apply; returns
/// the normalized polynomial and the factor taken out.
fn normalize(m: &Meter, r1: &Poly) -> Result<(Poly, Option<Symbol>)> {
    if r1.is_zero() {
        return Ok((Poly::zero(), None));
    }
    let c = r1.lc();
    let inv = m.inv(c)?;
    Ok((poly_scale(m, r1, inv), Some(c)))
}

fn fast_eea(m: &Meter, mul: Multiplier, cfg: &FastConfig, r0: &Poly, r1: &Poly, below: usize, want_s: bool) -> Result<EeaResult> {
    let eea_cfg = EeaConfig { mul, want_s, crossover: cfg.feea_crossover };
    match cfg.eea {
        FastEea::Classic => eea_classic(m, &eea_cfg, r0, r1, StopRule::DegreeBelow(below), EeaVariant::Monic),
        FastEea::Feea => feea(m, &eea_cfg, r0, r1, r0.deg_i() as usize - below),
    }
}

fn eea_method(cfg: &FastConfig) -> &'static str {
    match cfg.eea {
        FastEea::Classic => "eea-monic",
        FastEea::Feea => "feea",
    }
}

/// Inversion-free division `a = q b + r`: returns `(lc(b)^K q, r')` with
/// `r'` a multiple of `r` and `K = deg a - deg b + 1`, rescaling the partial
/// quotient at every step.
fn pseudo_divide(m: &Meter, a: &Poly, b: &Poly) -> (Poly, Poly) {
    let (Some(da), Some(db)) = (a.deg(), b.deg()) else { return (Poly::zero(), a.clone()) };
    if da < db {
        return (Poly::zero(), a.clone());
    }
    let lb = b.lc();
    let mut rem = a.coeffs().to_vec();
    let mut q = vec![0; da - db + 1];
    for top in (db..=da).rev() {
        let c = rem[top];
        let qpos = top - db;
        for qc in q.iter_mut().skip(qpos + 1) {
            *qc = m.mul(*qc, lb);
        }
        q[qpos] = c;
        for j in 0..top {
            let scaled = m.mul(lb, rem[j]);
            rem[j] = if j + db >= top { m.add(scaled, m.mul(c, b.coeff(j + db - top))) } else { scaled };
        }
        rem[top] = 0;
    }
    (Poly::new(q), Poly::new(rem))
}

fn gao(run: &mut Run, code: &RsCode, g1: &Poly, imp: Impl) -> Result<Outcome> {
    let (n, k) = (code.n, code.k);
    let below = (n + k).div_ceil(2);
    match imp {
        Impl::Direct => {
            let cfg = EeaConfig { want_s: false, ..Default::default() };
            let res = run.step(Step::PartialGcd, "eea-cross-mult", |m| {
                eea_classic(m, &cfg, &code.g0, g1, StopRule::DegreeBelow(below), EeaVariant::CrossMult)
            })?;
            let (g, v) = (res.r_next_raw, res.r[1][1].clone());
            run.step(Step::MessageRecovery, "pseudo-division", |m| {
                let (q, r) = pseudo_divide(m, &g, &v);
                if !r.is_zero() {
                    return Ok(Outcome::Failure("v does not divide g".into()));
                }
                if q.is_zero() {
                    return Ok(Outcome::Message(Poly::zero()));
                }
                let inv = m.inv(m.mul(q.lc(), v.lc()))?;
                let unscale = m.mul(g.lc(), inv);
                Ok(check_len(poly_scale(m, &q, unscale), k))
            })
        }
        Impl::Fast(cfg) => {
            let mul = multiplier(code, &cfg);
            let (res, c) = run.step(Step::PartialGcd, eea_method(&cfg), |m| {
                let (g1n, c) = normalize(m, g1)?;
                Ok::<_, crate::Error>((fast_eea(m, mul, &cfg, &code.g0, &g1n, below, false)?, c))
            })?;
            // g = (t_next / c) g1 mod g0, so m = c g / t_next.
            let (g, v) = (res.r_next_raw, res.r[1][1].clone());
            let method = if cfg.division == FastDiv::Newton { "newton-division" } else { "long-division" };
            run.step(Step::MessageRecovery, method, |m| {
                let (q, r) = divide(m, mul, &cfg, &g, &v)?;
                if !r.is_zero() {
                    return Ok(Outcome::Failure("v does not divide g".into()));
                }
                Ok(check_len(rescale(m, &q, c), k))
            })
        }
    }
}

/// The `s` cofactor of `u s0 + v s1 = r`, `deg r < deg s0`, `s0` monic: the
/// quotient of `v s1` by `s0`, which depends only on the coefficients of
/// `v s1` from `deg s0` up.
fn cofactor_from_top(m: &Meter, v: &Poly, s1: &Poly, s0: &Poly) -> Poly {
    let d = s0.deg_i() as usize;
    let top = v.len() + s1.len();
    if top < d + 2 {
        return Poly::zero();
    }
    let top = top - 2;
    let mut high: Vec<Symbol> = (d..=top)
        .map(|c| {
            let lo = c.saturating_sub(s1.len() - 1);
            let hi = c.min(v.len() - 1);
            let mut terms = (lo..=hi).map(|i| m.mul(v.coeff(i), s1.coeff(c - i)));
            let first = terms.next().unwrap_or(0);
            terms.fold(first, |acc, x| m.add(acc, x))
        })
        .collect();
    // Long division restricted to positions >= d, over the terms s0 has.
    let terms: Vec<(usize, Symbol)> = (0..d).map(|j| (j, s0.coeff(j))).filter(|t| t.1 != 0).collect();
    let mut q = vec![0; top - d + 1];
    for idx in (d..=top).rev() {
        let c = high[idx - d];
        q[idx - d] = c;
        for &(j, sj) in terms.iter().filter(|t| t.0 + idx >= 2 * d) {
            let pos = idx + j - 2 * d;
            high[pos] = m.add(high[pos], m.mul(c, sj));
        }
    }
    Poly::new(q)
}

/// `a / b` for any nonzero `b`.
fn divide(m: &Meter, mul: Multiplier, cfg: &FastConfig, a: &Poly, b: &Poly) -> Result<(Poly, Poly)> {
    match cfg.division {
        FastDiv::Long => poly_divmod_long(m, a, b),
        FastDiv::Newton => {
            let inv = m.inv(b.lc())?;
            let (q, r) = fast_divmod(m, &mul, a, &poly_scale(m, b, inv))?;
            Ok((poly_scale(m, &q, inv), r))
        }
    }
}

fn check_len(msg: Poly, k: usize) -> Outcome {
    if msg.len() > k {
        Outcome::Failure(format!("recovered message has degree {} >= k = {k}", msg.deg_i()))
    } else {
        Outcome::Message(msg)
    }
}

fn gao_mod(run: &mut Run, code: &RsCode, g1: &Poly, imp: Impl) -> Result<Outcome> {
    let (n, k) = (code.n, code.k);
    let below = (n - k).div_ceil(2);
    let s0 = code.g0.shr(k);
    let s1 = g1.shr(k);
    let finish = |m: &Meter, mul: Multiplier, q: &Poly, u: &Poly| {
        let prod = mul.mul(m, q, u);
        check_len(poly_add(m, g1, &prod), k)
    };
    match imp {
        Impl::Direct => {
            let cfg = EeaConfig { want_s: false, ..Default::default() };
            let res = run.step(Step::PartialGcd, "eea-cross-mult", |m| {
                eea_classic(m, &cfg, &s0, &s1, StopRule::DegreeBelow(below), EeaVariant::CrossMult)
            })?;
            let v = res.r[1][1].clone();
            run.step(Step::MessageRecovery, "pseudo-division", |m| {
                let u = cofactor_from_top(m, &v, &s1, &s0);
                let (q, r) = pseudo_divide(m, &code.g0, &v);
                if !r.is_zero() {
                    return Ok(Outcome::Failure("v does not divide g0".into()));
                }
                // g0 is monic, so the true quotient has leading coefficient 1 / lc(v).
                let unscale = m.inv(m.mul(q.lc(), v.lc()))?;
                let q = poly_scale(m, &q, unscale);
                Ok(finish(m, Multiplier::schoolbook(), &q, &u))
            })
        }
        Impl::Fast(cfg) => {
            let mul = multiplier(code, &cfg);
            let (res, c) = run.step(Step::PartialGcd, eea_method(&cfg), |m| {
                let (s1n, c) = normalize(m, &s1)?;
                Ok::<_, crate::Error>((fast_eea(m, mul, &cfg, &s0, &s1n, below, true)?, c))
            })?;
            let [u, v] = res.r[1].clone();
            let method = if cfg.division == FastDiv::Newton { "newton-division" } else { "long-division" };
            run.step(Step::MessageRecovery, method, |m| {
                // (c u, v) pairs with s1 as (u, v) pairs with s1 / c.
                let u = rescale(m, &u, c);
                let (q, r) = divide(m, mul, &cfg, &code.g0, &v)?;
                if !r.is_zero() {
                    return Ok(Outcome::Failure("v does not divide g0".into()));
                }
                Ok(finish(m, mul, &q, &u))
            })
        }
    }
}
