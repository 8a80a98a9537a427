//! Dense univariate polynomials over GF(2^m) and their classical arithmetic.
//!
//! Counting conventions: every executed field operation is charged, including
//! multiplications by zero or one. Polynomial addition charges one addition
//! per coefficient of the longer operand.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::counts::Meter;
use crate::error::{Error, Result};
use crate::gf2m::{Field, Symbol};

/// A polynomial stored low-to-high with no trailing zeros.
///
/// The zero polynomial has no coefficients and degree `None`, which orders
/// below every `Some(d)`.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<Symbol>", from = "Vec<Symbol>")]
pub struct Poly {
    coeffs: Vec<Symbol>,
}

impl From<Vec<Symbol>> for Poly {
    fn from(v: Vec<Symbol>) -> Self {
        Poly::new(v)
    }
}

impl From<Poly> for Vec<Symbol> {
    fn from(p: Poly) -> Self {
        p.coeffs
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]", self)
    }
}

impl fmt::Display for Poly {
    /// Low-to-high hex coefficients, e.g. `1 0 1` for `x^2 + 1`; `0` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.coeffs.iter().map(|c| format!("{c:x}")).collect();
        write!(f, "{}", s.join(" "))
    }
}

impl Poly {
    pub fn new(mut coeffs: Vec<Symbol>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(1)
    }

    pub fn constant(c: Symbol) -> Poly {
        Poly::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: Symbol, k: usize) -> Poly {
        let mut v = vec![0; k + 1];
        v[k] = c;
        Poly::new(v)
    }

    /// The identity polynomial `x`.
    pub fn x() -> Poly {
        Poly::monomial(1, 1)
    }

    pub fn parse(field: &Field, text: &str) -> Result<Poly> {
        Ok(Poly::new(crate::gf2m::parse_symbols(field, text)?))
    }

    pub fn coeffs(&self) -> &[Symbol] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Symbol> {
        self.coeffs
    }

    /// Number of stored coefficients, `deg + 1` (0 for the zero polynomial).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree as a signed integer, `-1` for zero. Only for degree arithmetic
    /// in comparisons, never for indexing.
    pub fn deg_i(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    /// Leading coefficient (0 for the zero polynomial).
    pub fn lc(&self) -> Symbol {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> Symbol {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lc() == 1
    }

    /// Coefficients padded with zeros to exactly `len` entries.
    pub fn padded(&self, len: usize) -> Vec<Symbol> {
        let mut v = self.coeffs.clone();
        v.resize(len.max(v.len()), 0);
        v
    }

    /// `self * x^k`.
    pub fn shl(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![0; k];
        v.extend_from_slice(&self.coeffs);
        Poly { coeffs: v }
    }

    /// `self div x^k`.
    pub fn shr(&self, k: usize) -> Poly {
        Poly::new(self.coeffs.iter().skip(k).copied().collect())
    }

    /// `self mod x^k`.
    pub fn low(&self, k: usize) -> Poly {
        Poly::new(self.coeffs.iter().take(k).copied().collect())
    }

    /// Uncounted evaluation, for oracles and bookkeeping outside measured regions.
    pub fn eval_plain(&self, field: &Field, x: Symbol) -> Symbol {
        self.coeffs.iter().rev().fold(0, |acc, &c| field.mul(acc, x) ^ c)
    }
}

/// Coefficient-wise sum; charges `min(len a, len b)` additions, the
/// positions where both operands have a coefficient.
pub fn poly_add(meter: &Meter, a: &Poly, b: &Poly) -> Poly {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut v = long.coeffs.clone();
    for (x, &y) in v.iter_mut().zip(&short.coeffs) {
        *x = meter.add(*x, y);
    }
    Poly::new(v)
}

/// Scales every coefficient by `c`; charges `len` multiplications.
pub fn poly_scale(meter: &Meter, a: &Poly, c: Symbol) -> Poly {
    Poly::new(a.coeffs.iter().map(|&x| meter.mul(x, c)).collect())
}

/// Schoolbook product: `len a * len b` multiplications and
/// `len a * len b - (len a + len b - 1)` additions.
pub fn poly_mul_school(meter: &Meter, a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let mut out = vec![0 as Symbol; a.len() + b.len() - 1];
    let mut touched = vec![false; out.len()];
    for (i, &x) in a.coeffs.iter().enumerate() {
        for (j, &y) in b.coeffs.iter().enumerate() {
            let p = meter.mul(x, y);
            let k = i + j;
            if touched[k] {
                out[k] = meter.add(out[k], p);
            } else {
                out[k] = p;
                touched[k] = true;
            }
        }
    }
    Poly::new(out)
}

/// Horner evaluation over an explicit coefficient slice (low-to-high):
/// `len - 1` multiplications and additions for a nonempty slice.
pub fn horner_slice(meter: &Meter, coeffs: &[Symbol], x: Symbol) -> Symbol {
    let mut it = coeffs.iter().rev();
    let Some(&top) = it.next() else { return 0 };
    it.fold(top, |acc, &c| meter.add(meter.mul(acc, x), c))
}

/// `f(x0)` by Horner's rule: `deg f` multiplications and additions.
pub fn poly_eval_horner(meter: &Meter, f: &Poly, x0: Symbol) -> Symbol {
    horner_slice(meter, f.coeffs(), x0)
}

/// Evaluates `f` (degree below `points.len()`) at every point, each by
/// Horner over the full length-`n` coefficient vector; `n(n-1)` of each.
pub fn poly_dft_naive(meter: &Meter, f: &Poly, points: &[Symbol]) -> Result<Vec<Symbol>> {
    let n = points.len();
    if f.len() > n {
        return Err(Error::LengthMismatch { expected: n, got: f.len() });
    }
    let coeffs = f.padded(n);
    Ok(points.iter().map(|&x| horner_slice(meter, &coeffs, x)).collect())
}

/// Inverse DFT over the full group `alpha^0, ..., alpha^(n-1)`, `n = 2^m - 1`.
///
/// `f_j = sum_i values_i alpha^(-ij)`; no `1/n` factor since `n` is odd.
pub fn poly_idft_naive(meter: &Meter, points: &[Symbol], values: &[Symbol]) -> Result<Poly> {
    let field = meter.field();
    let n = field.order();
    if points.len() != n || points.iter().enumerate().any(|(i, &p)| p != field.pow_alpha(i as i64)) {
        return Err(Error::NotFullGroup);
    }
    if values.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: values.len() });
    }
    let v = (0..n).map(|j| horner_slice(meter, values, field.pow_alpha(-(j as i64)))).collect();
    Ok(Poly::new(v))
}

/// `prod (x - a_i)` over the given points.
pub fn poly_from_roots(meter: &Meter, points: &[Symbol]) -> Poly {
    points.iter().fold(Poly::one(), |acc, &a| {
        // acc * (x + a)
        let mut v = vec![0 as Symbol; acc.len() + 1];
        for (i, &c) in acc.coeffs().iter().enumerate() {
            v[i + 1] = meter.add(v[i + 1], c);
            v[i] = meter.add(v[i], meter.mul(c, a));
        }
        Poly::new(v)
    })
}

/// Lagrange interpolation through `(points_i, values_i)`.
pub fn poly_interp_lagrange(meter: &Meter, points: &[Symbol], values: &[Symbol]) -> Result<Poly> {
    if points.len() != values.len() {
        return Err(Error::LengthMismatch { expected: points.len(), got: values.len() });
    }
    let mut seen = vec![false; meter.field().size()];
    for &p in points {
        if std::mem::replace(&mut seen[p as usize], true) {
            return Err(Error::DuplicatePoint(p));
        }
    }
    let master = poly_from_roots(meter, points);
    let mut acc = Poly::zero();
    for (i, (&a, &v)) in points.iter().zip(values).enumerate() {
        // basis numerator: master / (x - a)
        let (num, _) = divmod_monic(meter, &master, &Poly::new(vec![a, 1]))?;
        let mut denom = 1;
        for (j, &b) in points.iter().enumerate() {
            if j != i {
                denom = meter.mul(denom, meter.add(a, b));
            }
        }
        let w = meter.mul(v, meter.inv(denom)?);
        acc = poly_add(meter, &acc, &poly_scale(meter, &num, w));
    }
    Ok(acc)
}

/// Division with remainder by a general nonzero divisor. One inversion of
/// `lc(b)`; per quotient coefficient one scaling multiplication plus
/// `deg b` multiplications and additions.
pub fn poly_divmod_long(meter: &Meter, a: &Poly, b: &Poly) -> Result<(Poly, Poly)> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if a.len() < b.len() {
        return Ok((Poly::zero(), a.clone()));
    }
    let inv_lc = meter.inv(b.lc())?;
    Ok(long_division(meter, a, b, Some(inv_lc)))
}

/// Division by a monic divisor: no inversion, `deg b` multiplications and
/// additions per quotient coefficient.
pub fn divmod_monic(meter: &Meter, a: &Poly, b: &Poly) -> Result<(Poly, Poly)> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if !b.is_monic() {
        return Err(Error::NotMonic);
    }
    if a.len() < b.len() {
        return Ok((Poly::zero(), a.clone()));
    }
    Ok(long_division(meter, a, b, None))
}

fn long_division(meter: &Meter, a: &Poly, b: &Poly, inv_lc: Option<Symbol>) -> (Poly, Poly) {
    let db = b.len() - 1;
    let mut rem = a.coeffs.clone();
    let qlen = a.len() - db;
    let mut q = vec![0 as Symbol; qlen];
    for j in (0..qlen).rev() {
        let top = rem[j + db];
        let c = match inv_lc {
            Some(inv) => meter.mul(top, inv),
            None => top,
        };
        q[j] = c;
        rem[j + db] = 0;
        for (i, &bc) in b.coeffs[..db].iter().enumerate() {
            rem[j + i] = meter.add(rem[j + i], meter.mul(c, bc));
        }
    }
    rem.truncate(db);
    (Poly::new(q), Poly::new(rem))
}

/// `x^h f(1/x)`, requiring `h >= deg f`.
pub fn poly_rev(f: &Poly, h: usize) -> Result<Poly> {
    if let Some(d) = f.deg() {
        if h < d {
            return Err(Error::ReversalTooShort { h, deg: d });
        }
    }
    let mut v = f.padded(h + 1);
    v.reverse();
    Ok(Poly::new(v))
}

/// Keeps the top `h + 1` coefficients of `f` as a degree-`h` polynomial:
/// `f_n x^h + ... + f_(n-h)`, zero-filling below index 0. Zero when `h < 0`.
pub fn poly_trunc_top(f: &Poly, h: isize) -> Poly {
    let Some(n) = f.deg() else { return Poly::zero() };
    if h < 0 {
        return Poly::zero();
    }
    let h = h as usize;
    if h >= n {
        f.shl(h - n)
    } else {
        f.shr(n - h)
    }
}

/// Formal derivative; in characteristic two only odd-degree terms survive.
pub fn poly_deriv(f: &Poly) -> Poly {
    Poly::new(
        f.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| if i % 2 == 1 { c } else { 0 })
            .collect(),
    )
}
