use super::{fast_eval_all, multiplier, DecodeResult, FastEea, Impl, Outcome, Run, RsCode};
use crate::complexity::{Algorithm, Step};
use crate::counts::Meter;
use crate::error::{Error, Result};
use crate::euclid::{eea_classic, feea, EeaConfig, EeaVariant, StopRule};
use crate::gf2m::Symbol;
use crate::mulstrat::Multiplier;
use crate::poly::{horner_slice, poly_idft_naive, poly_scale, Poly};

/// Syndromes, key equation by partial GCD, Chien search and Forney's
/// formula. Needs the cyclic point set.
pub fn rs_decode_syndrome(code: &RsCode, received: &[Symbol], imp: Impl) -> Result<DecodeResult> {
    decode_with_erasures(code, received, &[], imp)
}

pub(crate) fn decode_with_erasures(code: &RsCode, received: &[Symbol], erased: &[usize], imp: Impl) -> Result<DecodeResult> {
    if !code.cyclic {
        return Err(Error::NotCyclic);
    }
    code.check_word(received)?;
    let mut run = Run::new(&code.field);
    let outcome = correct(&mut run, code, received, erased, imp)?;
    Ok(run.finish(code, Algorithm::Syndrome, imp, received, outcome))
}

fn horner_or_mpe(imp: Impl, code: &RsCode) -> &'static str {
    if matches!(imp, Impl::Fast(_)) && code.subspace_index.is_some() {
        "mpe"
    } else {
        "horner"
    }
}

fn correct(run: &mut Run, code: &RsCode, received: &[Symbol], erased: &[usize], imp: Impl) -> Result<Outcome> {
    let field = &code.field;
    let (n, two_t, nu) = (code.n, code.n - code.k, erased.len());
    let mul = match imp {
        Impl::Fast(cfg) => multiplier(code, &cfg),
        Impl::Direct => Multiplier::schoolbook(),
    };
    let word = Poly::new(received.to_vec());

    // S(x) = sum_(j=1..2t) r(alpha^j) x^(j-1), then the erasure locator
    // Gamma = prod (1 + X_i x) and the modified syndrome S Gamma mod x^2t.
    let (xi, gamma) = run.step(Step::Syndromes, horner_or_mpe(imp, code), |m| {
        let s: Vec<Symbol> = match imp {
            Impl::Fast(_) if code.subspace_index.is_some() => {
                let all = fast_eval_all(m, code, &word).expect("subspace covers the field");
                all[1..=two_t].to_vec()
            }
            _ => (1..=two_t).map(|j| horner_slice(m, received, field.pow_alpha(j as i64))).collect(),
        };
        let s = Poly::new(s);
        if nu == 0 {
            return (s, Poly::one());
        }
        let gamma = erased.iter().fold(Poly::one(), |acc, &i| {
            let root = Poly::new(vec![1, code.points[i]]);
            mul.mul(m, &acc, &root)
        });
        (mul.mul(m, &s, &gamma).low(two_t), gamma)
    });

    let below = (two_t + nu).div_ceil(2);
    let x2t = Poly::monomial(1, two_t);
    // (lambda, omega, c) with omega = c * lambda * xi mod x^2t.
    let (lambda, omega, c) = match imp {
        Impl::Direct => run.step(Step::KeyEquation, "eea-cross-mult", |m| {
            let cfg = EeaConfig { want_s: false, ..Default::default() };
            let res = eea_classic(m, &cfg, &x2t, &xi, StopRule::DegreeBelow(below), EeaVariant::CrossMult)?;
            let lambda = if nu == 0 { res.r[1][1].clone() } else { mul.mul(m, &res.r[1][1], &gamma) };
            Ok::<_, Error>((lambda, res.r_next_raw, None))
        })?,
        Impl::Fast(cfg) => {
            let method = if cfg.eea == FastEea::Feea { "feea" } else { "eea-monic" };
            run.step(Step::KeyEquation, method, |m| {
                let eea_cfg = EeaConfig { mul, want_s: false, crossover: cfg.feea_crossover };
                let (xin, c) = if xi.is_zero() {
                    (Poly::zero(), None)
                } else {
                    let inv = m.inv(xi.lc())?;
                    (poly_scale(m, &xi, inv), Some(xi.lc()))
                };
                let res = match cfg.eea {
                    FastEea::Classic => {
                        eea_classic(m, &eea_cfg, &x2t, &xin, StopRule::DegreeBelow(below), EeaVariant::Monic)?
                    }
                    FastEea::Feea => feea(m, &eea_cfg, &x2t, &xin, two_t - below)?,
                };
                let lambda = if nu == 0 { res.r[1][1].clone() } else { mul.mul(m, &res.r[1][1], &gamma) };
                Ok::<_, Error>((lambda, res.r_next_raw, c))
            })?
        }
    };

    // Chien search on the reversed locator made monic: psi_0 = 1.
    let width = (two_t + nu) / 2;
    if lambda.coeff(0) == 0 || lambda.len() > width + 1 {
        return Ok(Outcome::Failure("locator has no constant term or is too long".into()));
    }
    let monic_rev = run.step(Step::Forney, "horner", |m| {
        let inv = m.inv(lambda.coeff(0))?;
        let mut rev: Vec<Symbol> = (0..=width).map(|j| if j == 0 { 1 } else { m.mul(lambda.coeff(j), inv) }).collect();
        rev.reverse();
        Ok::<_, Error>(rev)
    })?;
    let roots: Vec<usize> = run.step(Step::Chien, horner_or_mpe(imp, code), |m| {
        let values: Vec<Symbol> = match imp {
            Impl::Fast(_) if code.subspace_index.is_some() => {
                fast_eval_all(m, code, &Poly::new(monic_rev.clone())).expect("subspace covers the field")
            }
            _ => code.points.iter().map(|&x| horner_monic(m, &monic_rev, x)).collect(),
        };
        (0..n).filter(|&i| values[i] == 0).collect()
    });
    if roots.len() != lambda.deg_i() as usize {
        return Ok(Outcome::Failure(format!(
            "locator of degree {} has {} roots among the code points",
            lambda.deg_i(),
            roots.len()
        )));
    }

    let corrected = run.step(Step::Forney, "horner", |m| forney(m, code, received, &lambda, &omega, c, &roots, below));
    let Some(corrected) = corrected? else {
        return Ok(Outcome::Failure("locator has a repeated root".into()));
    };
    let scratch = Meter::new(field);
    let msg = poly_idft_naive(&scratch, &code.points, &corrected)?;
    Ok(if msg.len() > code.k {
        Outcome::Failure("corrected word is not a codeword".into())
    } else {
        Outcome::Message(msg)
    })
}

/// Horner on coefficients `[c_0, ..., c_(D-1), 1]` without multiplying by the
/// leading 1.
fn horner_monic(m: &Meter, coeffs: &[Symbol], x: Symbol) -> Symbol {
    let d = coeffs.len() - 1;
    if d == 0 {
        return 1;
    }
    let mut acc = m.add(x, coeffs[d - 1]);
    for &c in coeffs[..d - 1].iter().rev() {
        acc = m.add(m.mul(acc, x), c);
    }
    acc
}

/// `e = Omega(X^-1) / Lambda'(X^-1)` at each root, with `Lambda'` evaluated
/// as `P(y)`, `y = X^-2`, from the odd coefficients. Returns `None` on a
/// vanishing derivative.
#[allow(clippy::too_many_arguments)]
fn forney(
    m: &Meter,
    code: &RsCode,
    received: &[Symbol],
    lambda: &Poly,
    omega: &Poly,
    c: Option<Symbol>,
    roots: &[usize],
    omega_len: usize,
) -> Result<Option<Vec<Symbol>>> {
    let field = &code.field;
    let width = lambda.len().max(2) - 1;
    let odd: Vec<Symbol> = (0..width.div_ceil(2)).map(|j| lambda.coeff(2 * j + 1)).collect();
    let omega_c = omega.padded(omega_len.max(1));
    let mut numer = Vec::with_capacity(roots.len());
    let mut denom = Vec::with_capacity(roots.len());
    for &i in roots {
        let x_inv = field.pow_alpha(-(i as i64));
        numer.push(horner_slice(m, &omega_c, x_inv));
        if odd.len() > 1 {
            let y = m.mul(x_inv, x_inv);
            denom.push(horner_slice(m, &odd, y));
        }
    }
    if roots.is_empty() {
        return Ok(Some(received.to_vec()));
    }
    if odd.len() == 1 {
        // Constant derivative: one inversion serves every root.
        if odd[0] == 0 {
            return Ok(None);
        }
        let inv = m.inv(odd[0])?;
        return Ok(Some(apply(m, received, roots, &numer, &vec![inv; roots.len()], c)));
    }
    if denom.contains(&0) {
        return Ok(None);
    }
    let mut inv: Vec<Symbol> = vec![0; roots.len()];
    let mut start = 0;
    // One inversion serves the first two derivatives when the budget of
    // inversions would otherwise be exceeded.
    if roots.len() >= 2 && roots.len() + 1 > omega_len {
        let both = m.inv(m.mul(denom[0], denom[1]))?;
        inv[0] = m.mul(both, denom[1]);
        inv[1] = m.mul(both, denom[0]);
        start = 2;
    }
    for j in start..roots.len() {
        inv[j] = m.inv(denom[j])?;
    }
    Ok(Some(apply(m, received, roots, &numer, &inv, c)))
}

fn apply(m: &Meter, received: &[Symbol], roots: &[usize], numer: &[Symbol], inv: &[Symbol], c: Option<Symbol>) -> Vec<Symbol> {
    let mut word = received.to_vec();
    for (j, &i) in roots.iter().enumerate() {
        let mut e = m.mul(numer[j], inv[j]);
        if let Some(c) = c {
            e = m.mul(e, c);
        }
        word[i] = m.add(word[i], e);
    }
    word
}
