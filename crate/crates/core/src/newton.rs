//! Division with remainder through power-series inversion by Newton iteration.
//!
//! In characteristic 2 the step `g <- 2g - b g^2` collapses to `g <- b g^2`,
//! and squaring costs one multiplication per coefficient.

use crate::complexity::mul_cost;
use crate::counts::{Meter, OpCounts};
use crate::error::{Error, Result};
use crate::mulstrat::Multiplier;
use crate::poly::{poly_add, poly_rev, Poly};

fn square(meter: &Meter, g: &Poly) -> Poly {
    let mut out = vec![0; (2 * g.len()).saturating_sub(1)];
    for (i, &c) in g.coeffs().iter().enumerate() {
        out[2 * i] = meter.mul(c, c);
    }
    Poly::new(out)
}

/// Precision schedule `ceil(k / 2^(r-j))`, `j = 1..=r`, `r = ceil(log2 k)`.
pub fn precision_schedule(k: usize) -> Vec<usize> {
    let r = k.next_power_of_two().trailing_zeros();
    (1..=r).map(|j| k.div_ceil(1 << (r - j))).collect()
}

fn newton_from(meter: &Meter, mul: &Multiplier, b: &Poly, k: usize, g0: Poly) -> Poly {
    let mut g = g0;
    for l in precision_schedule(k) {
        let g2 = square(meter, &g).low(l);
        g = mul.mul(meter, &b.low(l), &g2).low(l);
    }
    g
}

/// `g` with `b g = 1 mod x^k`.
pub fn inv_mod_xk(meter: &Meter, mul: &Multiplier, b: &Poly, k: usize) -> Result<Poly> {
    if b.coeff(0) == 0 {
        return Err(Error::NotInvertibleModXk);
    }
    if k == 0 {
        return Ok(Poly::zero());
    }
    let g0 = Poly::constant(meter.inv(b.coeff(0))?);
    Ok(newton_from(meter, mul, b, k, g0))
}

/// Quotient and remainder of `a / b` for monic `b`, via the reversed
/// quotient `q* = rev(a) rev(b)^-1 mod x^(d0+1)`.
pub fn fast_divmod(meter: &Meter, mul: &Multiplier, a: &Poly, b: &Poly) -> Result<(Poly, Poly)> {
    let Some(d1) = b.deg() else { return Err(Error::DivisionByZero) };
    if !b.is_monic() {
        return Err(Error::NotMonic);
    }
    let Some(da) = a.deg().filter(|&da| da >= d1) else { return Ok((Poly::zero(), a.clone())) };
    let d0 = da - d1;
    let rev_b = poly_rev(b, d1)?;
    let g = newton_from(meter, mul, &rev_b, d0 + 1, Poly::one());
    let rev_a = poly_rev(a, da)?.low(d0 + 1);
    let q_star = mul.mul(meter, &rev_a, &g).low(d0 + 1);
    let q = Poly::new(q_star.padded(d0 + 1).into_iter().rev().collect());
    let qb_low = mul.mul(meter, &q.low(d1), &b.low(d1)).low(d1);
    let r = poly_add(meter, &a.low(d1), &qb_low);
    Ok((q, r))
}

/// Cost ceiling of [`fast_divmod`] for `deg a = d0 + d1`, `deg b = d1`,
/// with products priced by the additive-FFT ceiling.
pub fn bound_fast_divmod(d0: usize, d1: usize) -> OpCounts {
    let m = mul_cost(d0);
    let last = mul_cost((d0 + d1).div_ceil(2));
    let (d0u, d1u) = (d0 as u64, d1 as u64);
    OpCounts::new(4 * m.mul, 4 * m.add, 4 * m.inv) + last + OpCounts::new(15 * d0u + d1u + 7, 11 * d0u + 2 * d1u + 8, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cantor::CantorCtx;
    use crate::gf2m::Field;
    use crate::poly::{poly_divmod_long, poly_mul_school};
    use proptest::prelude::*;

    fn gf256() -> Field {
        Field::new(8, None).unwrap()
    }

    #[test]
    fn schedule() {
        assert_eq!(precision_schedule(1), Vec::<usize>::new());
        assert_eq!(precision_schedule(5), vec![2, 3, 5]);
        assert_eq!(precision_schedule(8), vec![2, 4, 8]);
    }

    #[test]
    fn inverse_examples() {
        let f = gf256();
        let m = Meter::new(&f);
        let s = Multiplier::schoolbook();
        assert_eq!(inv_mod_xk(&m, &s, &Poly::one(), 9).unwrap(), Poly::one());
        assert_eq!(inv_mod_xk(&m, &s, &Poly::new(vec![1, 1]), 3).unwrap(), Poly::new(vec![1, 1, 1]));
        assert_eq!(inv_mod_xk(&m, &s, &Poly::x(), 3), Err(Error::NotInvertibleModXk));
    }

    #[test]
    fn divmod_examples() {
        let f = gf256();
        let m = Meter::new(&f);
        let s = Multiplier::schoolbook();
        let a = Poly::new(vec![1, 1, 0, 1]);
        let b = Poly::monomial(1, 2);
        assert_eq!(fast_divmod(&m, &s, &a, &b).unwrap(), (Poly::x(), Poly::new(vec![1, 1])));
        assert_eq!(fast_divmod(&m, &s, &a, &Poly::new(vec![1, 2])), Err(Error::NotMonic));
        assert_eq!(fast_divmod(&m, &s, &b, &a).unwrap(), (Poly::zero(), b.clone()));
    }

    proptest! {
        #[test]
        fn inverse_multiplies_back(mut b in proptest::collection::vec(0u16..256, 1..80), k in 1usize..100) {
            let f = gf256();
            let m = Meter::new(&f);
            b[0] |= 1;
            let b = Poly::new(b);
            let g = inv_mod_xk(&m, &Multiplier::schoolbook(), &b, k).unwrap();
            prop_assert_eq!(poly_mul_school(&m, &b, &g).low(k), Poly::one());
        }

        #[test]
        fn matches_long_division(
            a in proptest::collection::vec(0u16..256, 0..200),
            mut b in proptest::collection::vec(0u16..256, 1..100),
        ) {
            let f = gf256();
            let ctx = CantorCtx::new(&f);
            let m = Meter::new(&f);
            *b.last_mut().unwrap() = 1;
            let (a, b) = (Poly::new(a), Poly::new(b));
            let fast = fast_divmod(&m, &Multiplier::fast(&ctx, 8), &a, &b).unwrap();
            prop_assert_eq!(fast, poly_divmod_long(&m, &a, &b).unwrap());
        }

        #[test]
        fn exact_multiple(
            q in proptest::collection::vec(0u16..256, 0..60),
            mut b in proptest::collection::vec(0u16..256, 1..60),
        ) {
            let f = gf256();
            let m = Meter::new(&f);
            *b.last_mut().unwrap() = 1;
            let (q, b) = (Poly::new(q), Poly::new(b));
            let a = poly_mul_school(&m, &q, &b);
            prop_assert_eq!(fast_divmod(&m, &Multiplier::schoolbook(), &a, &b).unwrap(), (q, Poly::zero()));
        }
    }
}
