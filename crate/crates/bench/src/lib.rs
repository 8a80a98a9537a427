//! Shared fixtures for the criterion benches.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rswb_core::rs::{rs_encode, rs_new, Impl, PointSet, RsCode};
use rswb_core::{Field, Poly, Symbol};

pub fn cyclic_code(m: u32, k: usize) -> RsCode {
    let field = Field::new(m, None).expect("default modulus");
    let n = field.order();
    rs_new(field, n, k, PointSet::Cyclic).expect("valid code")
}

/// A codeword of a random message with `errors` random symbol errors.
pub fn noisy_word(code: &RsCode, errors: usize, seed: u64) -> Vec<Symbol> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = code.field().size() as u16;
    let msg = Poly::new((0..code.k()).map(|_| rng.gen_range(0..q)).collect());
    let mut word = rs_encode(code, &msg, Impl::Direct).expect("encodable");
    for p in sample(&mut rng, code.n(), errors) {
        word[p] ^= rng.gen_range(1..q);
    }
    word
}

pub fn random_poly(len: usize, q: u16, seed: u64) -> Poly {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Poly::new((0..len).map(|_| rng.gen_range(1..q)).collect())
}
