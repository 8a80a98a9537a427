use std::collections::BTreeSet;

use super::syndrome::decode_with_erasures;
use super::syndromeless::run_steps;
use super::{DecodeResult, Impl, Run, RsCode};
use crate::complexity::Algorithm;
use crate::error::{Error, Result};
use crate::gf2m::Symbol;

/// Validated erasure positions of one received word.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ErasureSpec {
    positions: Vec<usize>,
}

impl ErasureSpec {
    pub fn new(code: &RsCode, positions: &[usize]) -> Result<ErasureSpec> {
        let mut seen = BTreeSet::new();
        for &pos in positions {
            if pos >= code.n {
                return Err(Error::ErasureOutOfRange { pos, n: code.n });
            }
            if !seen.insert(pos) {
                return Err(Error::DuplicateErasure(pos));
            }
        }
        let two_t = code.n - code.k;
        if positions.len() > two_t {
            return Err(Error::TooManyErasures { nu: positions.len(), two_t });
        }
        Ok(ErasureSpec { positions: seen.into_iter().collect() })
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }
}

/// Corrects `f` errors and `nu` erasures whenever `2f + nu <= n - k`.
///
/// The syndromeless decoders run errors-only on the code shortened to the
/// unerased positions; the syndrome decoder folds the erasure locator into
/// the key equation.
pub fn rs_decode_erasures(
    code: &RsCode,
    received: &[Symbol],
    erasures: &ErasureSpec,
    alg: Algorithm,
    imp: Impl,
) -> Result<DecodeResult> {
    code.check_word(received)?;
    if alg == Algorithm::Syndrome {
        return decode_with_erasures(code, received, &erasures.positions, imp);
    }
    let keep: Vec<usize> = (0..code.n).filter(|i| erasures.positions.binary_search(i).is_err()).collect();
    let short = code.punctured(&keep)?;
    let short_word: Vec<Symbol> = keep.iter().map(|&i| received[i]).collect();
    let mut run = Run::new(&short.field);
    let outcome = run_steps(&mut run, &short, &short_word, imp, alg)?;
    Ok(run.finish(code, alg, imp, received, outcome))
}
