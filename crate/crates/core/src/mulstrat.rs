//! Choice between schoolbook and additive-FFT multiplication.

use crate::cantor::{cantor_mul, CantorCtx};
use crate::counts::Meter;
use crate::poly::{poly_mul_school, Poly};

/// Operand length at which fast multiplication takes over by default.
pub const DEFAULT_FAST_THRESHOLD: usize = 16;

/// Polynomial multiplier: schoolbook, or Cantor's product when both operands
/// have at least `threshold` coefficients and the product fits the subspace.
#[derive(Debug, Clone, Copy)]
pub struct Multiplier<'c> {
    cantor: Option<&'c CantorCtx>,
    threshold: usize,
}

impl<'c> Multiplier<'c> {
    pub fn schoolbook() -> Multiplier<'static> {
        Multiplier { cantor: None, threshold: usize::MAX }
    }

    pub fn fast(ctx: &'c CantorCtx, threshold: usize) -> Multiplier<'c> {
        Multiplier { cantor: Some(ctx), threshold }
    }

    pub fn cantor(&self) -> Option<&'c CantorCtx> {
        self.cantor
    }

    pub fn threshold(&self) -> usize {
        self.threshold
    }

    /// True when `a * b` with these lengths would go through the FFT path.
    pub fn uses_fast(&self, la: usize, lb: usize) -> bool {
        match self.cantor {
            Some(ctx) => la.min(lb) >= self.threshold.max(2) && la + lb - 1 <= 1 << ctx.p(),
            None => false,
        }
    }

    pub fn mul(&self, meter: &Meter, a: &Poly, b: &Poly) -> Poly {
        match self.cantor {
            Some(ctx) if self.uses_fast(a.len(), b.len()) => {
                cantor_mul(meter, ctx, a, b).expect("product length checked against subspace")
            }
            _ => poly_mul_school(meter, a, b),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2m::Field;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn strategies_agree() {
        let f = Field::new(8, None).unwrap();
        let ctx = CantorCtx::new(&f);
        let m = Meter::new(&f);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let fast = Multiplier::fast(&ctx, 4);
        for _ in 0..50 {
            let a = Poly::new((0..rng.gen_range(0..100)).map(|_| rng.gen_range(0..256)).collect());
            let b = Poly::new((0..rng.gen_range(0..100)).map(|_| rng.gen_range(0..256)).collect());
            assert_eq!(fast.mul(&m, &a, &b), Multiplier::schoolbook().mul(&m, &a, &b));
        }
        assert!(!fast.uses_fast(200, 200));
        assert!(!fast.uses_fast(3, 100));
        assert!(fast.uses_fast(4, 100));
    }
}
