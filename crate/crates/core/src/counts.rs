//! Field-operation tallies.

use std::cell::Cell;
use std::fmt;
use std::ops::{Add, AddAssign, Sub};

use serde::{Deserialize, Serialize};

use crate::gf2m::{Field, Symbol};
use crate::error::Result;

/// Numbers of field multiplications, additions and inversions.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OpCounts {
    pub mul: u64,
    pub add: u64,
    pub inv: u64,
}

impl OpCounts {
    pub const ZERO: OpCounts = OpCounts { mul: 0, add: 0, inv: 0 };

    pub const fn new(mul: u64, add: u64, inv: u64) -> Self {
        OpCounts { mul, add, inv }
    }

    /// Weighted cost in field-addition units: one multiplication or
    /// inversion is worth `2m` additions.
    pub fn overall(&self, m: u32) -> u64 {
        2 * m as u64 * (self.mul + self.inv) + self.add
    }

    /// Componentwise `self <= other`.
    pub fn within(&self, other: &OpCounts) -> bool {
        self.mul <= other.mul && self.add <= other.add && self.inv <= other.inv
    }
}

impl Add for OpCounts {
    type Output = OpCounts;
    fn add(self, o: OpCounts) -> OpCounts {
        OpCounts::new(self.mul + o.mul, self.add + o.add, self.inv + o.inv)
    }
}

impl AddAssign for OpCounts {
    fn add_assign(&mut self, o: OpCounts) {
        *self = *self + o;
    }
}

impl Sub for OpCounts {
    type Output = OpCounts;
    fn sub(self, o: OpCounts) -> OpCounts {
        OpCounts::new(self.mul - o.mul, self.add - o.add, self.inv - o.inv)
    }
}

impl std::iter::Sum for OpCounts {
    fn sum<I: Iterator<Item = OpCounts>>(iter: I) -> OpCounts {
        iter.fold(OpCounts::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for OpCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.mul, self.add, self.inv)
    }
}

/// Field arithmetic bound to a running tally.
///
/// Every algorithm in the crate takes a `&Meter` and performs its field
/// operations through it, so the tally covers exactly what was executed.
/// A meter belongs to one call tree; concurrent work uses separate meters.
pub struct Meter<'f> {
    field: &'f Field,
    counts: Cell<OpCounts>,
}

impl<'f> Meter<'f> {
    pub fn new(field: &'f Field) -> Self {
        Meter { field, counts: Cell::new(OpCounts::ZERO) }
    }

    pub fn field(&self) -> &'f Field {
        self.field
    }

    pub fn counts(&self) -> OpCounts {
        self.counts.get()
    }

    pub fn reset(&self) {
        self.counts.set(OpCounts::ZERO);
    }

    #[inline]
    pub fn add(&self, a: Symbol, b: Symbol) -> Symbol {
        let mut c = self.counts.get();
        c.add += 1;
        self.counts.set(c);
        a ^ b
    }

    #[inline]
    pub fn mul(&self, a: Symbol, b: Symbol) -> Symbol {
        let mut c = self.counts.get();
        c.mul += 1;
        self.counts.set(c);
        self.field.mul(a, b)
    }

    #[inline]
    pub fn inv(&self, a: Symbol) -> Result<Symbol> {
        let r = self.field.inv(a)?;
        let mut c = self.counts.get();
        c.inv += 1;
        self.counts.set(c);
        Ok(r)
    }

    /// Runs `f` and returns its result with the operations it performed.
    pub fn measure<T>(&self, f: impl FnOnce() -> T) -> (T, OpCounts) {
        let before = self.counts();
        let out = f();
        (out, self.counts() - before)
    }
}
