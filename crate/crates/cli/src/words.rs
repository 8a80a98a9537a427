//! Word files: one word per line, whitespace-separated lowercase hex
//! symbols, `?` for an erased symbol. Blank lines and `#` comments are skipped.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read, Write};

use anyhow::{bail, Context, Result};
use rswb_core::gf2m::format_symbols;
use rswb_core::{Field, Symbol};
use serde::{Deserialize, Serialize};

/// A parsed word; erased positions hold 0 in `symbols`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    pub symbols: Vec<Symbol>,
    pub erased: Vec<usize>,
}

impl Word {
    pub fn render(&self) -> String {
        self.symbols
            .iter()
            .enumerate()
            .map(|(i, s)| if self.erased.contains(&i) { "?".to_string() } else { format!("{s:x}") })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub fn read_text(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

pub fn write_text(path: &str, text: &str) -> Result<()> {
    if path == "-" {
        io::stdout().write_all(text.as_bytes()).context("writing stdout")
    } else {
        fs::write(path, text).with_context(|| format!("writing {path}"))
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_words(field: &Field, text: &str) -> Result<Vec<Word>> {
    let mut out = Vec::new();
    for (line, body) in content_lines(text) {
        let mut word = Word { symbols: Vec::new(), erased: Vec::new() };
        for (i, tok) in body.split_whitespace().enumerate() {
            if tok == "?" {
                word.erased.push(i);
                word.symbols.push(0);
                continue;
            }
            let v = u32::from_str_radix(tok, 16).with_context(|| format!("line {line}: bad symbol {tok:?}"))?;
            word.symbols.push(field.check(v).with_context(|| format!("line {line}"))?);
        }
        out.push(word);
    }
    if out.is_empty() {
        bail!("no words in input");
    }
    Ok(out)
}

pub fn render_plain(words: &[Vec<Symbol>]) -> String {
    words.iter().map(|w| format_symbols(w) + "\n").collect()
}

/// Ground truth written by `corrupt`, one JSON object per line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Truth {
    /// Position to the magnitude added at that position.
    pub errors: BTreeMap<usize, Symbol>,
    pub erasures: Vec<usize>,
}

pub fn parse_truth(text: &str) -> Result<Vec<Truth>> {
    content_lines(text)
        .map(|(line, body)| serde_json::from_str(body).with_context(|| format!("truth line {line}")))
        .collect()
}
