use anyhow::anyhow;
use rswb_core::complexity::Algorithm;
use rswb_core::gf2m::format_symbols;
use rswb_core::rs::{rs_decode, rs_decode_erasures, rs_encode, DecodeResult, ErasureSpec, Impl, RsCode, Status};
use rswb_core::OpCounts;
use serde::Serialize;

use crate::words::{Truth, Word};
use crate::{Failure, EXIT_FAILURE, EXIT_INTERNAL};

#[derive(Serialize)]
pub struct Counts {
    pub mul: u64,
    pub add: u64,
    pub inv: u64,
    pub overall: u64,
}

impl Counts {
    pub fn new(c: OpCounts, m: u32) -> Counts {
        Counts { mul: c.mul, add: c.add, inv: c.inv, overall: c.overall(m) }
    }
}

#[derive(Serialize)]
struct StepOut {
    step: String,
    method: &'static str,
    #[serde(flatten)]
    counts: Counts,
}

#[derive(Serialize)]
struct ErrorOut {
    position: usize,
    magnitude: String,
}

#[derive(Serialize)]
struct ResultOut {
    word: usize,
    decoder: Algorithm,
    implementation: &'static str,
    status: Status,
    message: Option<String>,
    codeword: Option<String>,
    errors: Vec<ErrorOut>,
    erasures: Vec<usize>,
    failure: Option<String>,
    counts: Counts,
    steps: Vec<StepOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verify: Option<&'static str>,
}

fn decode_word(code: &RsCode, alg: Algorithm, imp: Impl, w: &Word) -> Result<DecodeResult, Failure> {
    if w.erased.is_empty() {
        Ok(rs_decode(code, alg, &w.symbols, imp)?)
    } else {
        let spec = ErasureSpec::new(code, &w.erased)?;
        Ok(rs_decode_erasures(code, &w.symbols, &spec, alg, imp)?)
    }
}

/// A returned word must be the encoding of the returned message, within
/// the correction radius of the received word.
fn check_invariants(code: &RsCode, w: &Word, res: &DecodeResult) -> Result<(), String> {
    let (Some(msg), Some(cw)) = (&res.message, &res.codeword) else {
        return Err("status ok without message and codeword".into());
    };
    let enc = rs_encode(code, msg, Impl::Direct).map_err(|e| e.to_string())?;
    if &enc != cw {
        return Err("returned codeword is not the encoding of the returned message".into());
    }
    let flips = res.errors.keys().filter(|p| !w.erased.contains(p)).count();
    if 2 * flips + w.erased.len() > 2 * code.t() {
        return Err(format!("{flips} corrected errors with {} erasures exceed the radius", w.erased.len()));
    }
    Ok(())
}

fn verdict(code: &RsCode, res: &DecodeResult, truth: &Truth) -> &'static str {
    let within = 2 * truth.errors.len() + truth.erasures.len() <= 2 * code.t();
    let found: Vec<_> = res.errors.iter().filter(|(p, _)| !truth.erasures.contains(p)).map(|(&p, &e)| (p, e)).collect();
    let exact = res.status == Status::Ok && found == truth.errors.iter().map(|(&p, &e)| (p, e)).collect::<Vec<_>>();
    match (exact, within, res.status) {
        (true, _, _) => "recovered",
        (false, true, _) => "mismatch",
        (false, false, Status::Ok) => "miscorrected",
        (false, false, Status::DecodingFailure) => "failure",
    }
}

/// JSON lines for every word, and the exit status.
pub fn run(code: &RsCode, alg: Algorithm, imp: Impl, words: &[Word], truth: Option<&[Truth]>) -> Result<(String, u8), Failure> {
    if let Some(t) = truth {
        if t.len() != words.len() {
            return Err(anyhow!("{} truth lines for {} words", t.len(), words.len()).into());
        }
    }
    let m = code.field().m();
    let (mut text, mut status) = (String::new(), 0u8);
    for (i, w) in words.iter().enumerate() {
        let res = decode_word(code, alg, imp, w)?;
        if res.status == Status::Ok {
            if let Err(why) = check_invariants(code, w, &res) {
                return Err(crate::internal(anyhow!("word {}: {why}", i + 1)));
            }
        } else {
            status = status.max(EXIT_FAILURE);
        }
        let verify = match truth {
            Some(t) => {
                if t[i].erasures != w.erased {
                    return Err(anyhow!("word {}: erased positions differ from the truth file", i + 1).into());
                }
                let v = verdict(code, &res, &t[i]);
                if v == "mismatch" {
                    status = EXIT_INTERNAL;
                }
                Some(v)
            }
            None => None,
        };
        let out = ResultOut {
            word: i + 1,
            decoder: alg,
            implementation: imp.name(),
            status: res.status,
            message: res.message.as_ref().map(|p| format_symbols(&p.padded(code.k()))),
            codeword: res.codeword.as_ref().map(|c| format_symbols(c)),
            errors: res.errors.iter().map(|(&p, &e)| ErrorOut { position: p, magnitude: format!("{e:x}") }).collect(),
            erasures: w.erased.clone(),
            failure: res.failure.clone(),
            counts: Counts::new(res.counts, m),
            steps: res
                .steps
                .iter()
                .map(|s| StepOut { step: s.step.to_string(), method: s.method, counts: Counts::new(s.counts, m) })
                .collect(),
            verify,
        };
        text.push_str(&serde_json::to_string(&out).expect("serializable"));
        text.push('\n');
    }
    Ok((text, status))
}
