//! Additive-FFT multipoint evaluation/interpolation over the subspaces
//! spanned by a Cantor basis, and the polynomial product built on them.
//!
//! With `beta_1 = 1` and `beta_(i-1) = beta_i^2 + beta_i`, the subspace
//! polynomials `s_i(x) = prod_{c in W_i} (x - c)` are linearized and sparse:
//! `s_0 = x`, `s_i = s_(i-1)^2 + s_(i-1)(beta_i) s_(i-1)`.
//!
//! Point `j` of `W_i` is `sum_k bit_k(j) beta_(k+1)`.

use crate::counts::Meter;
use crate::error::{Error, Result};
use crate::gf2m::{Field, Symbol};
use crate::poly::{poly_mul_school, Poly};

/// Sparse linearized polynomial: `(exponent, coefficient)` pairs, exponents
/// increasing, all coefficients nonzero.
pub type Sparse = Vec<(usize, Symbol)>;

/// Precomputed Cantor basis data for one field.
#[derive(Debug, Clone)]
pub struct CantorCtx {
    basis: Vec<Symbol>,
    s_polys: Vec<Sparse>,
    /// `s_vals[i][j] = s_i(beta_(j+1))`.
    s_vals: Vec<Vec<Symbol>>,
}

fn eval_sparse(field: &Field, s: &Sparse, x: Symbol) -> Symbol {
    s.iter().fold(0, |acc, &(e, c)| acc ^ field.mul(c, field.pow(x, e as u64)))
}

impl CantorCtx {
    /// Builds the longest Cantor chain available in `field`. Precomputation
    /// is not metered.
    pub fn new(field: &Field) -> CantorCtx {
        let mut basis: Vec<Symbol> = vec![1];
        while basis.len() < field.m() as usize {
            let Some(next) = field.half_trace_solve(*basis.last().unwrap()) else { break };
            if in_span(&basis, next) {
                break;
            }
            basis.push(next);
        }
        let p = basis.len();
        let mut s_polys: Vec<Sparse> = vec![vec![(1, 1)]];
        for i in 1..=p {
            let prev = &s_polys[i - 1];
            let c = eval_sparse(field, prev, basis[i - 1]);
            let mut next: Vec<(usize, Symbol)> = Vec::new();
            for &(e, a) in prev {
                next.push((e, field.mul(a, c)));
            }
            for &(e, a) in prev {
                next.push((2 * e, field.square(a)));
            }
            next.sort_by_key(|t| t.0);
            let mut merged: Sparse = Vec::new();
            for (e, a) in next {
                match merged.last_mut() {
                    Some(last) if last.0 == e => last.1 ^= a,
                    _ => merged.push((e, a)),
                }
            }
            merged.retain(|t| t.1 != 0);
            s_polys.push(merged);
        }
        let s_vals = (0..=p)
            .map(|i| basis.iter().map(|&b| eval_sparse(field, &s_polys[i], b)).collect())
            .collect();
        CantorCtx { basis, s_polys, s_vals }
    }

    /// Dimension of the largest evaluation subspace.
    pub fn p(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Symbol] {
        &self.basis
    }

    /// `s_i` as sparse `(exponent, coefficient)` terms.
    pub fn s_poly(&self, i: usize) -> &Sparse {
        &self.s_polys[i]
    }

    /// `s_i` as a dense polynomial.
    pub fn s_dense(&self, i: usize) -> Poly {
        let mut v = vec![0; (1 << i) + 1];
        for &(e, c) in &self.s_polys[i] {
            v[e] = c;
        }
        Poly::new(v)
    }

    /// `s_i(beta_j)`, 1-based `j`.
    pub fn s_val(&self, i: usize, j: usize) -> Symbol {
        self.s_vals[i][j - 1]
    }

    /// The `idx`-th point of the subspace ordering.
    pub fn point(&self, idx: usize) -> Symbol {
        self.basis
            .iter()
            .enumerate()
            .filter(|(k, _)| idx >> k & 1 == 1)
            .fold(0, |acc, (_, &b)| acc ^ b)
    }

    /// Inverse of [`CantorCtx::point`] on `W_p`; `None` outside the subspace.
    pub fn index_of(&self, x: Symbol) -> Option<usize> {
        // Gaussian elimination on the basis; p <= 16 so this is cheap.
        let mut rows: Vec<(Symbol, usize)> = self.basis.iter().enumerate().map(|(k, &b)| (b, 1 << k)).collect();
        let mut target = (x, 0usize);
        for bit in (0..16).rev() {
            let Some(pos) = rows.iter().position(|r| r.0 >> bit & 1 == 1) else { continue };
            let piv = rows.swap_remove(pos);
            for r in rows.iter_mut() {
                if r.0 >> bit & 1 == 1 {
                    r.0 ^= piv.0;
                    r.1 ^= piv.1;
                }
            }
            if target.0 >> bit & 1 == 1 {
                target.0 ^= piv.0;
                target.1 ^= piv.1;
            }
        }
        (target.0 == 0).then_some(target.1)
    }

    /// `s_(level-1)(c)` for the coset representative with index bits `coset`
    /// (bits below `level` are zero). Table lookups only.
    fn coset_const(&self, level: usize, coset: usize) -> Symbol {
        (level..self.p())
            .filter(|k| coset >> k & 1 == 1)
            .fold(0, |acc, k| acc ^ self.s_vals[level - 1][k])
    }

    /// Nonleading terms of the divisor `s_(level-1)(x) - s_(level-1)(c)`.
    fn divisor_tail(&self, level: usize, coset: usize) -> Sparse {
        let s = &self.s_polys[level - 1];
        let mut tail: Sparse = Vec::with_capacity(s.len());
        if coset != 0 {
            tail.push((0, self.coset_const(level, coset)));
        }
        tail.extend(s[..s.len() - 1].iter().copied());
        tail
    }
}

fn in_span(basis: &[Symbol], x: Symbol) -> bool {
    (0..1usize << basis.len()).any(|mask| {
        basis.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).fold(0, |a, (_, &b)| a ^ b) == x
    })
}

/// Evaluates `f` (degree below `2^i`) at every point of `W_i`, in subspace order.
pub fn mpe(meter: &Meter, ctx: &CantorCtx, f: &Poly, i: usize) -> Result<Vec<Symbol>> {
    if i > ctx.p() {
        return Err(Error::ExceedsSubspace { needed: 1 << i, available: 1 << ctx.p() });
    }
    if f.len() > 1 << i {
        return Err(Error::ExceedsSubspace { needed: f.len(), available: 1 << i });
    }
    let mut out = vec![0; 1 << i];
    mpe_rec(meter, ctx, f.coeffs().to_vec(), i, 0, &mut out);
    Ok(out)
}

fn mpe_rec(meter: &Meter, ctx: &CantorCtx, mut f: Vec<Symbol>, level: usize, coset: usize, out: &mut [Symbol]) {
    if level == 0 {
        out[0] = f.first().copied().unwrap_or(0);
        return;
    }
    let half = 1 << (level - 1);
    if f.len() > half {
        let tail = ctx.divisor_tail(level, coset);
        for j in (half..f.len()).rev() {
            let q = f[j];
            for &(e, a) in &tail {
                let k = j - half + e;
                f[k] = meter.add(f[k], meter.mul(q, a));
            }
        }
    }
    let g: Vec<Symbol> = f.iter().skip(half).copied().collect();
    f.truncate(half);
    let sb = ctx.s_vals[level - 1][level - 1];
    let mut r1 = f.clone();
    for (k, &gk) in g.iter().enumerate() {
        r1[k] = meter.add(r1[k], meter.mul(sb, gk));
    }
    let (lo, hi) = out.split_at_mut(half);
    mpe_rec(meter, ctx, f, level - 1, coset, lo);
    mpe_rec(meter, ctx, r1, level - 1, coset | half, hi);
}

/// Interpolates the unique `f` of degree below `2^i` taking `values` on `W_i`.
pub fn mpi(meter: &Meter, ctx: &CantorCtx, values: &[Symbol]) -> Result<Poly> {
    mpi_with_len(meter, ctx, values, values.len())
}

/// As [`mpi`], when the caller knows `deg f < out_len`; the top recursion
/// level then computes only the needed coefficients.
pub fn mpi_with_len(meter: &Meter, ctx: &CantorCtx, values: &[Symbol], out_len: usize) -> Result<Poly> {
    let n = values.len();
    if !n.is_power_of_two() || n > 1 << ctx.p() {
        return Err(Error::ExceedsSubspace { needed: n, available: 1 << ctx.p() });
    }
    let level = n.trailing_zeros() as usize;
    let out_len = out_len.min(n);
    // The divisor constant depends only on the level: invert it once.
    let top_needed = level > 0 && out_len > 1 << (level - 1);
    let invs = (1..=level)
        .map(|i| if i < level || top_needed { meter.inv(ctx.s_vals[i - 1][i - 1]) } else { Ok(0) })
        .collect::<Result<Vec<Symbol>>>()?;
    Ok(Poly::new(mpi_rec(meter, ctx, &invs, values, level, 0, out_len)))
}

fn mpi_rec(
    meter: &Meter,
    ctx: &CantorCtx,
    invs: &[Symbol],
    values: &[Symbol],
    level: usize,
    coset: usize,
    out_len: usize,
) -> Vec<Symbol> {
    if level == 0 {
        return vec![values[0]];
    }
    let half = 1 << (level - 1);
    let r0 = mpi_rec(meter, ctx, invs, &values[..half], level - 1, coset, half);
    let glen = out_len.saturating_sub(half);
    let mut f = r0.clone();
    if glen == 0 {
        return f;
    }
    let r1 = mpi_rec(meter, ctx, invs, &values[half..], level - 1, coset | half, half);
    let inv_sb = invs[level - 1];
    let g: Vec<Symbol> = (0..glen).map(|k| meter.mul(meter.add(r0[k], r1[k]), inv_sb)).collect();
    f.extend_from_slice(&g);
    for &(e, a) in &ctx.divisor_tail(level, coset) {
        for (k, &gk) in g.iter().enumerate() {
            f[k + e] = meter.add(f[k + e], meter.mul(gk, a));
        }
    }
    f
}

/// Product via MPE of both operands at level `ceil(log2 h)`, pointwise
/// multiplication, and MPI, where `h = deg a + deg b + 1`. Zero or constant
/// operands take the schoolbook path.
pub fn cantor_mul(meter: &Meter, ctx: &CantorCtx, a: &Poly, b: &Poly) -> Result<Poly> {
    if a.len() <= 1 || b.len() <= 1 {
        return Ok(poly_mul_school(meter, a, b));
    }
    let h = a.len() + b.len() - 1;
    if h > 1 << ctx.p() {
        return Err(Error::ExceedsSubspace { needed: h, available: 1 << ctx.p() });
    }
    let level = h.next_power_of_two().trailing_zeros() as usize;
    let va = mpe(meter, ctx, a, level)?;
    let vb = mpe(meter, ctx, b, level)?;
    let prod: Vec<Symbol> = va.iter().zip(&vb).map(|(&x, &y)| meter.mul(x, y)).collect();
    mpi_with_len(meter, ctx, &prod, h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly_eval_horner;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf256() -> Field {
        Field::new(8, None).unwrap()
    }

    /// Searches every element for a Cantor chain, independent of the
    /// Gaussian-elimination solver used by the constructor.
    fn chain_length_by_search(field: &Field) -> usize {
        let mut chain = vec![1u16];
        loop {
            let prev = *chain.last().unwrap();
            let roots: Vec<Symbol> =
                (0..field.size() as u32).map(|x| x as Symbol).filter(|&x| field.square(x) ^ x == prev).collect();
            match roots.first() {
                Some(&r) if chain.len() < field.m() as usize && !in_span(&chain, r) => chain.push(r),
                _ => return chain.len(),
            }
        }
    }

    #[test]
    fn chain_lengths() {
        let f = gf256();
        let ctx = CantorCtx::new(&f);
        assert_eq!(ctx.p(), 8);
        assert_eq!(chain_length_by_search(&f), 8);
        assert_eq!(ctx.basis()[0], 1);
        for i in 1..ctx.p() {
            let b = ctx.basis()[i];
            assert_eq!(f.square(b) ^ b, ctx.basis()[i - 1]);
        }
        let f9 = Field::new(9, None).unwrap();
        assert_eq!(CantorCtx::new(&f9).p(), chain_length_by_search(&f9));
        let f4 = Field::new(4, None).unwrap();
        assert_eq!(CantorCtx::new(&f4).p(), 4);
    }

    #[test]
    fn subspace_polys_vanish_and_factor() {
        let f = gf256();
        let ctx = CantorCtx::new(&f);
        let meter = Meter::new(&f);
        for i in 0..=ctx.p() {
            assert!(ctx.s_poly(i).len() <= i + 1);
            assert!(ctx.s_poly(i).iter().all(|&(e, _)| e.is_power_of_two()));
            for idx in 0..1usize << i {
                assert_eq!(eval_sparse(&f, ctx.s_poly(i), ctx.point(idx)), 0);
            }
            if i < ctx.p() {
                assert_ne!(ctx.s_val(i, i + 1), 0);
                let si = ctx.s_dense(i);
                let shifted = crate::poly::poly_add(&meter, &si, &Poly::constant(ctx.s_val(i, i + 1)));
                assert_eq!(poly_mul_school(&meter, &si, &shifted), ctx.s_dense(i + 1));
            }
        }
    }

    #[test]
    fn point_index_roundtrip() {
        let f = gf256();
        let ctx = CantorCtx::new(&f);
        for idx in 0..256 {
            assert_eq!(ctx.index_of(ctx.point(idx)), Some(idx));
        }
    }

    #[test]
    fn mpe_edge_cases() {
        let f = gf256();
        let ctx = CantorCtx::new(&f);
        let m = Meter::new(&f);
        assert_eq!(mpe(&m, &ctx, &Poly::constant(9), 4).unwrap(), vec![9; 16]);
        assert_eq!(mpe(&m, &ctx, &Poly::new(vec![7, 3]), 0), Err(Error::ExceedsSubspace { needed: 2, available: 1 }));
        assert_eq!(mpe(&m, &ctx, &Poly::constant(5), 0).unwrap(), vec![5]);
        assert!(mpi(&m, &ctx, &[0; 8]).unwrap().is_zero());
        assert_eq!(mpi(&m, &ctx, &[6]).unwrap(), Poly::constant(6));
        assert!(mpi(&m, &ctx, &[1, 2, 3]).is_err());
    }

    #[test]
    fn mpe_matches_horner_all_levels() {
        let f = gf256();
        let ctx = CantorCtx::new(&f);
        let m = Meter::new(&f);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for i in 0..=ctx.p() {
            for _ in 0..4 {
                let len = rng.gen_range(0..=1usize << i);
                let g = Poly::new((0..len).map(|_| rng.gen_range(0..256)).collect());
                let vals = mpe(&m, &ctx, &g, i).unwrap();
                for (idx, &v) in vals.iter().enumerate() {
                    assert_eq!(v, poly_eval_horner(&m, &g, ctx.point(idx)));
                }
                assert_eq!(mpi(&m, &ctx, &vals).unwrap(), g);
            }
        }
    }

    #[test]
    fn cantor_mul_examples() {
        let f = gf256();
        let ctx = CantorCtx::new(&f);
        let m = Meter::new(&f);
        let xp1 = Poly::new(vec![1, 1]);
        assert_eq!(cantor_mul(&m, &ctx, &xp1, &xp1).unwrap(), Poly::new(vec![1, 0, 1]));
        assert!(cantor_mul(&m, &ctx, &Poly::zero(), &xp1).unwrap().is_zero());
        let big = Poly::monomial(1, 200);
        assert!(matches!(cantor_mul(&m, &ctx, &big, &big), Err(Error::ExceedsSubspace { .. })));
    }

    #[test]
    fn gf512_has_trivial_chain() {
        let f9 = Field::new(9, None).unwrap();
        let ctx = CantorCtx::new(&f9);
        // Tr(1) = 1 for odd m, so x^2 + x = 1 has no root.
        assert_eq!(ctx.p(), 1);
    }

    proptest! {
        #[test]
        fn cantor_mul_matches_schoolbook(
            a in proptest::collection::vec(0u16..256, 0..128),
            b in proptest::collection::vec(0u16..256, 0..128),
        ) {
            let f = gf256();
            let ctx = CantorCtx::new(&f);
            let m = Meter::new(&f);
            let (a, b) = (Poly::new(a), Poly::new(b));
            prop_assert_eq!(cantor_mul(&m, &ctx, &a, &b).unwrap(), poly_mul_school(&m, &a, &b));
        }
    }
}
