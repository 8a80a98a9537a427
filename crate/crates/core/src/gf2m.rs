//! Arithmetic in GF(2^m), 2 <= m <= 16.
//!
//! Elements are packed in the polynomial basis: bit `i` of a [`Symbol`] is the
//! coefficient of `x^i`. Multiplication and inversion go through log/antilog
//! tables built from the smallest primitive element of the field.

use std::fmt;

use crate::error::{Error, Result};

/// A field element in polynomial-basis representation.
pub type Symbol = u16;

/// Default irreducible (primitive) moduli, indexed by `m`.
const DEFAULT_MODULI: [u32; 17] = [
    0, 0, 0x7, 0xb, 0x13, 0x25, 0x43, 0x89, 0x11d, 0x211, 0x409, 0x805, 0x1053, 0x201b, 0x4443,
    0x8003, 0x1100b,
];

/// The default modulus for GF(2^m), e.g. `x^8+x^4+x^3+x^2+1` for `m = 8`.
pub fn default_modulus(m: u32) -> Option<u32> {
    DEFAULT_MODULI.get(m as usize).copied().filter(|&p| p != 0)
}

/// An immutable GF(2^m) context.
#[derive(Clone)]
pub struct Field {
    m: u32,
    modulus: u32,
    alpha: Symbol,
    exp: Vec<Symbol>,
    log: Vec<u32>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("m", &self.m)
            .field("modulus", &format_args!("{:#x}", self.modulus))
            .field("alpha", &self.alpha)
            .finish()
    }
}

/// Carry-less product of two bit-polynomials.
fn clmul(a: u64, b: u64) -> u64 {
    let mut r = 0;
    let mut b = b;
    let mut i = 0;
    while b != 0 {
        if b & 1 == 1 {
            r ^= a << i;
        }
        b >>= 1;
        i += 1;
    }
    r
}

fn bit_degree(a: u64) -> i32 {
    63 - a.leading_zeros() as i32
}

/// Remainder of bit-polynomial `a` modulo `b` (b != 0).
fn clmod(mut a: u64, b: u64) -> u64 {
    let db = bit_degree(b);
    while a != 0 && bit_degree(a) >= db {
        a ^= b << (bit_degree(a) - db);
    }
    a
}

/// Renders a GF(2) polynomial such as `x^3+x+1`.
pub fn format_bitpoly(p: u64) -> String {
    if p == 0 {
        return "0".into();
    }
    let mut terms = Vec::new();
    for i in (0..64).rev() {
        if p >> i & 1 == 1 {
            terms.push(match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            });
        }
    }
    terms.join("+")
}

/// Smallest nontrivial factor of `p` of degree at most `deg p / 2`, if any.
fn find_factor(p: u64) -> Option<u64> {
    let d = bit_degree(p);
    for fd in 1..=d / 2 {
        for low in 0..(1u64 << fd) {
            let f = (1u64 << fd) | low;
            if clmod(p, f) == 0 {
                return Some(f);
            }
        }
    }
    None
}

impl Field {
    /// Builds GF(2^m) for the given modulus, or the default one when `None`.
    pub fn new(m: u32, modulus: Option<u32>) -> Result<Field> {
        if !(2..=16).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        let modulus = modulus.unwrap_or_else(|| default_modulus(m).unwrap());
        if bit_degree(modulus as u64) != m as i32 {
            return Err(Error::ModulusDegree { m, modulus });
        }
        if let Some(f) = find_factor(modulus as u64) {
            return Err(Error::Reducible { factor: format_bitpoly(f) });
        }
        let order = (1usize << m) - 1;
        let alpha = (2..=order as u64)
            .find(|&g| Self::multiplicative_order(g, modulus as u64, order) == order)
            .expect("the multiplicative group of a finite field is cyclic") as Symbol;

        let mut exp = vec![0 as Symbol; 2 * order];
        let mut log = vec![0u32; order + 1];
        let mut x: u64 = 1;
        for i in 0..order {
            exp[i] = x as Symbol;
            log[x as usize] = i as u32;
            x = clmod(clmul(x, alpha as u64), modulus as u64);
        }
        for i in order..2 * order {
            exp[i] = exp[i - order];
        }
        Ok(Field { m, modulus, alpha, exp, log })
    }

    fn multiplicative_order(g: u64, modulus: u64, order: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 1 {
            x = clmod(clmul(x, g), modulus);
            k += 1;
            if k > order {
                return 0;
            }
        }
        k
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of field elements, `2^m`.
    pub fn size(&self) -> usize {
        1 << self.m
    }

    /// Order of the multiplicative group, `2^m - 1`.
    pub fn order(&self) -> usize {
        (1 << self.m) - 1
    }

    /// The primitive element used for the log tables.
    pub fn alpha(&self) -> Symbol {
        self.alpha
    }

    pub fn contains(&self, a: u32) -> bool {
        (a as usize) < self.size()
    }

    pub fn check(&self, a: u32) -> Result<Symbol> {
        if self.contains(a) {
            Ok(a as Symbol)
        } else {
            Err(Error::NotInField(a))
        }
    }

    /// `alpha^e` for any integer exponent.
    pub fn pow_alpha(&self, e: i64) -> Symbol {
        self.exp[e.rem_euclid(self.order() as i64) as usize]
    }

    /// Discrete log base alpha of a nonzero element.
    pub fn log(&self, a: Symbol) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    #[inline]
    pub fn mul(&self, a: Symbol, b: Symbol) -> Symbol {
        if a == 0 || b == 0 {
            0
        } else {
            self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
        }
    }

    pub fn inv(&self, a: Symbol) -> Result<Symbol> {
        if a == 0 {
            return Err(Error::InverseOfZero);
        }
        Ok(self.exp[(self.order() - self.log[a as usize] as usize) % self.order()])
    }

    pub fn square(&self, a: Symbol) -> Symbol {
        self.mul(a, a)
    }

    pub fn pow(&self, a: Symbol, e: u64) -> Symbol {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let l = self.log[a as usize] as u64 * (e % self.order() as u64);
        self.exp[(l % self.order() as u64) as usize]
    }

    /// Absolute trace `a + a^2 + ... + a^(2^(m-1))`, which lies in {0, 1}.
    pub fn trace(&self, a: Symbol) -> Symbol {
        let mut acc = 0;
        let mut x = a;
        for _ in 0..self.m {
            acc ^= x;
            x = self.square(x);
        }
        acc
    }

    /// Solves `x^2 + x = b`. Returns the smaller of the two roots, or `None`
    /// when `Tr(b) = 1`.
    ///
    /// The map `x -> x^2 + x` is GF(2)-linear, so the root is found by
    /// Gaussian elimination on its matrix in the polynomial basis.
    pub fn half_trace_solve(&self, b: Symbol) -> Option<Symbol> {
        if self.trace(b) != 0 {
            return None;
        }
        let m = self.m as usize;
        // rows[i]: image of the basis vector e_i, augmented with the bit i in the high half.
        let mut rows: Vec<(u32, u32)> = (0..m)
            .map(|i| {
                let e = 1u16 << i;
                ((self.square(e) ^ e) as u32, 1u32 << i)
            })
            .collect();
        // Reduce to find, for each pivot bit, a combination of basis vectors.
        let mut pivots: Vec<(u32, u32)> = Vec::new();
        for bit in (0..m).rev() {
            if let Some(pos) = rows.iter().position(|r| r.0 >> bit & 1 == 1) {
                let p = rows.swap_remove(pos);
                for r in rows.iter_mut() {
                    if r.0 >> bit & 1 == 1 {
                        r.0 ^= p.0;
                        r.1 ^= p.1;
                    }
                }
                for q in pivots.iter_mut() {
                    if q.0 >> bit & 1 == 1 {
                        q.0 ^= p.0;
                        q.1 ^= p.1;
                    }
                }
                pivots.push(p);
            }
        }
        let mut target = b as u32;
        let mut x = 0u32;
        for (img, combo) in &pivots {
            let bit = 31 - img.leading_zeros();
            if target >> bit & 1 == 1 {
                target ^= img;
                x ^= combo;
            }
        }
        debug_assert_eq!(target, 0);
        let x = x as Symbol;
        Some(x.min(x ^ 1))
    }

    /// Lowercase hex rendering of a symbol.
    pub fn fmt_symbol(a: Symbol) -> String {
        format!("{a:x}")
    }
}

/// Parses whitespace-separated lowercase hex symbols.
pub fn parse_symbols(field: &Field, text: &str) -> Result<Vec<Symbol>> {
    text.split_whitespace()
        .map(|tok| {
            let v = u32::from_str_radix(tok, 16).map_err(|e| Error::Parse(format!("{tok:?}: {e}")))?;
            field.check(v)
        })
        .collect()
}

/// Formats symbols as whitespace-separated lowercase hex.
pub fn format_symbols(symbols: &[Symbol]) -> String {
    symbols.iter().map(|s| format!("{s:x}")).collect::<Vec<_>>().join(" ")
}
