//! `rswb`: encode, corrupt, decode and benchmark Reed-Solomon words, and
//! emit the complexity tables.

mod bench;
mod decode;
mod table;
mod words;

use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rswb_core::complexity::{case_study_report_with, hw_model, rate_thresholds, Algorithm, CPD};
use rswb_core::gf2m::default_modulus;
use rswb_core::rs::sweep::exhaustive_rs73;
use rswb_core::rs::{rs_encode, rs_new, FastConfig, FastDiv, FastEea, Impl, PointSet, RsCode};
use rswb_core::{Field, Poly};
use serde::Serialize;

use table::{render, Format, Table};
use words::{parse_words, read_text, render_plain, write_text, Truth, Word};

/// Exit status for a decoding failure.
const EXIT_FAILURE: u8 = 1;
/// Exit status for bad arguments or input.
const EXIT_USAGE: u8 = 2;
/// Exit status when a result violates a codec invariant.
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(name = "rswb", version, about = "Reed-Solomon decoding workbench over GF(2^m) with operation counts")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Encode message lines (k hex symbols, low degree first) into codewords.
    Encode {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        imp: ImplArgs,
        #[arg(long, short, default_value = "-")]
        input: String,
        #[arg(long, short, default_value = "-")]
        output: String,
    },
    /// Add random errors and erasures to codewords and record the ground truth.
    Corrupt {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, short, default_value = "-")]
        input: String,
        #[arg(long, short, default_value = "-")]
        output: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        errors: usize,
        #[arg(long, default_value_t = 0)]
        erasures: usize,
        /// Ground-truth sidecar (JSON lines).
        #[arg(long)]
        truth: Option<String>,
    },
    /// Decode received words; prints one JSON result per line.
    Decode {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        imp: ImplArgs,
        #[arg(long, default_value = "gao")]
        decoder: Algorithm,
        #[arg(long, short, default_value = "-")]
        input: String,
        #[arg(long, short, default_value = "-")]
        output: String,
        /// Ground-truth sidecar from `corrupt`; checks exact error recovery.
        #[arg(long)]
        verify: Option<String>,
    },
    /// Decode random corrupted words and aggregate operation counts.
    Bench(bench::BenchArgs),
    /// Per-step formula and measured counts for one code.
    Tables {
        #[arg(long, default_value_t = 255)]
        n: usize,
        #[arg(long, default_value_t = 223)]
        k: usize,
        #[arg(long, default_value_t = 8)]
        m: u32,
        /// Seeded t-error words per decoder for the measured columns.
        #[arg(long, default_value_t = 8)]
        trials: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Hardware resources, latency and throughput of the three architectures.
    Hwmodel {
        #[arg(long, default_value_t = 255)]
        n: usize,
        #[arg(long, default_value_t = 223)]
        k: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Rate thresholds found by sweeping the cost formulas.
    Thresholds {
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Exhaustive RS(7,3) sweep over every decoder and implementation.
    Selftest {
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
    },
}

#[derive(Args, Clone)]
struct CodeArgs {
    /// Extension degree of GF(2^m).
    #[arg(long, default_value_t = 8)]
    m: u32,
    /// Field modulus in hex, or "default".
    #[arg(long, default_value = "default")]
    modulus: String,
    /// Code length; defaults to 2^m - 1.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: usize,
    /// "cyclic", or comma-separated hex evaluation points.
    #[arg(long, default_value = "cyclic")]
    points: String,
}

impl CodeArgs {
    fn build(&self) -> anyhow::Result<RsCode> {
        let modulus = match self.modulus.as_str() {
            "default" => None,
            hex => Some(
                u32::from_str_radix(hex.trim_start_matches("0x"), 16).with_context(|| format!("bad modulus {hex:?}"))?,
            ),
        };
        if modulus.is_none() && default_modulus(self.m).is_none() {
            bail!("no default modulus for m = {}; pass --modulus", self.m);
        }
        let field = Field::new(self.m, modulus)?;
        let n = self.n.unwrap_or(field.order());
        let points = if self.points == "cyclic" {
            PointSet::Cyclic
        } else {
            let pts = self
                .points
                .split(',')
                .map(|p| u32::from_str_radix(p.trim(), 16).map_err(|e| anyhow!("bad point {p:?}: {e}")).and_then(|v| Ok(field.check(v)?)))
                .collect::<anyhow::Result<Vec<_>>>()?;
            PointSet::Explicit(pts)
        };
        Ok(rs_new(field, n, self.k, points)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ImplKind {
    Direct,
    Fast,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EeaKind {
    Classic,
    Feea,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DivKind {
    Long,
    Newton,
}

#[derive(Args, Clone)]
struct ImplArgs {
    #[arg(long = "impl", value_enum, default_value = "direct")]
    kind: ImplKind,
    /// Euclidean algorithm of the fast mode.
    #[arg(long, value_enum, default_value = "classic")]
    eea: EeaKind,
    /// Division of the fast mode.
    #[arg(long, value_enum, default_value = "long")]
    division: DivKind,
}

impl ImplArgs {
    fn resolve(&self) -> Impl {
        match self.kind {
            ImplKind::Direct => Impl::Direct,
            ImplKind::Fast => Impl::Fast(FastConfig {
                eea: match self.eea {
                    EeaKind::Classic => FastEea::Classic,
                    EeaKind::Feea => FastEea::Feea,
                },
                division: match self.division {
                    DivKind::Long => FastDiv::Long,
                    DivKind::Newton => FastDiv::Newton,
                },
                ..FastConfig::default()
            }),
        }
    }
}

/// Error carrying the process exit status.
struct Failure {
    code: u8,
    err: anyhow::Error,
}

impl From<anyhow::Error> for Failure {
    fn from(err: anyhow::Error) -> Self {
        Failure { code: EXIT_USAGE, err }
    }
}

impl From<rswb_core::Error> for Failure {
    fn from(err: rswb_core::Error) -> Self {
        Failure { code: EXIT_USAGE, err: err.into() }
    }
}

fn internal(err: anyhow::Error) -> Failure {
    Failure { code: EXIT_INTERNAL, err }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("rswb: {:#}", f.err);
            ExitCode::from(f.code)
        }
    }
}

fn run(cmd: Command) -> Result<u8, Failure> {
    match cmd {
        Command::Encode { code, imp, input, output } => {
            let code = code.build()?;
            let msgs = parse_words(code.field(), &read_text(&input)?)?;
            let mut out = Vec::new();
            for (i, w) in msgs.iter().enumerate() {
                if !w.erased.is_empty() {
                    return Err(anyhow!("message {} contains erasures", i + 1).into());
                }
                out.push(rs_encode(&code, &Poly::new(w.symbols.clone()), imp.resolve())?);
            }
            write_text(&output, &render_plain(&out))?;
            Ok(0)
        }
        Command::Corrupt { code, input, output, seed, errors, erasures, truth } => {
            let code = code.build()?;
            corrupt(&code, &input, &output, seed, errors, erasures, truth.as_deref())?;
            Ok(0)
        }
        Command::Decode { code, imp, decoder, input, output, verify } => {
            let code = code.build()?;
            let received = parse_words(code.field(), &read_text(&input)?)?;
            let truth = match &verify {
                Some(path) => Some(words::parse_truth(&read_text(path)?)?),
                None => None,
            };
            let (text, status) = decode::run(&code, decoder, imp.resolve(), &received, truth.as_deref())?;
            write_text(&output, &text)?;
            Ok(status)
        }
        Command::Bench(args) => bench::run(&args),
        Command::Tables { n, k, m, trials, seed, format } => {
            let report = case_study_report_with(n, k, m, trials, seed)?;
            let text = match format {
                Format::Csv => report.to_csv(),
                Format::Md => report.to_markdown(),
                Format::Json => table::json(&report),
            };
            print!("{text}");
            Ok(0)
        }
        Command::Hwmodel { n, k, format } => {
            print!("{}", hwmodel(n, k, format)?);
            Ok(0)
        }
        Command::Thresholds { format } => {
            let list = rate_thresholds();
            let mut t = Table::new("Rate thresholds", &["name", "comparison", "expected", "bracket_low", "bracket_high", "brackets_expected"]);
            let opt = |v: Option<f64>| v.map(|x| format!("{x:.6}")).unwrap_or_else(|| "none".into());
            for th in &list {
                t.push(vec![
                    th.name.into(),
                    th.comparison.into(),
                    opt(th.expected),
                    opt(th.bracket.map(|b| b.0)),
                    opt(th.bracket.map(|b| b.1)),
                    th.brackets_expected().to_string(),
                ]);
            }
            print!("{}", render(format, &[t], &list));
            Ok(if list.iter().all(|t| t.brackets_expected()) { 0 } else { EXIT_INTERNAL })
        }
        Command::Selftest { format } => {
            let report = exhaustive_rs73()?;
            let mut checks = Table::new("RS(7,3) exhaustive sweep", &["check", "cases", "failures", "first_failure"]);
            for c in &report.checks {
                checks.push(vec![c.name.into(), c.cases.to_string(), c.failures.to_string(), c.first_failure.clone().unwrap_or_default()]);
            }
            let mut maxima = Table::new("Largest direct-mode step counts", &["decoder", "step", "measured", "formula"]);
            for m in &report.step_maxima {
                maxima.push(vec![m.decoder.to_string(), m.step.to_string(), m.measured.to_string(), m.formula.to_string()]);
            }
            print!("{}", render(format, &[checks, maxima], &report));
            Ok(if report.passed() { 0 } else { EXIT_INTERNAL })
        }
    }
}

fn corrupt(
    code: &RsCode,
    input: &str,
    output: &str,
    seed: u64,
    errors: usize,
    erasures: usize,
    truth_path: Option<&str>,
) -> Result<(), Failure> {
    if errors + erasures > code.n() {
        return Err(anyhow!("{} errors plus {} erasures exceed n = {}", errors, erasures, code.n()).into());
    }
    let words = parse_words(code.field(), &read_text(input)?)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = code.field().size() as u32;
    let (mut text, mut truth) = (String::new(), String::new());
    for (i, w) in words.iter().enumerate() {
        if w.symbols.len() != code.n() || !w.erased.is_empty() {
            return Err(anyhow!("line {}: expected a complete word of {} symbols", i + 1, code.n()).into());
        }
        let picked = rand::seq::index::sample(&mut rng, code.n(), errors + erasures).into_vec();
        let mut t = Truth { errors: Default::default(), erasures: picked[errors..].to_vec() };
        t.erasures.sort_unstable();
        let mut out = Word { symbols: w.symbols.clone(), erased: t.erasures.clone() };
        for &p in &picked[..errors] {
            let e = rng.gen_range(1..q) as u16;
            out.symbols[p] ^= e;
            t.errors.insert(p, e);
        }
        t.erasures.iter().for_each(|&p| out.symbols[p] = 0);
        text.push_str(&out.render());
        text.push('\n');
        truth.push_str(&serde_json::to_string(&t).expect("serializable"));
        truth.push('\n');
    }
    write_text(output, &text)?;
    if let Some(path) = truth_path {
        write_text(path, &truth)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct HwEntry {
    decoder: Algorithm,
    critical_path: &'static str,
    units: Vec<rswb_core::complexity::HwRow>,
}

fn hwmodel(n: usize, k: usize, format: Format) -> Result<String, Failure> {
    let mut t = Table::new(
        format!("Hardware model, RS({n}, {k}), critical path {CPD}"),
        &["decoder", "unit", "multipliers", "adders", "inverters", "registers", "muxes", "latency", "cycles_per_word"],
    );
    let mut entries = Vec::new();
    for alg in Algorithm::ALL {
        let rows = hw_model(alg, n, k)?;
        for r in &rows {
            t.push(vec![
                alg.to_string(),
                r.unit.into(),
                r.multipliers.to_string(),
                r.adders.to_string(),
                r.inverters.to_string(),
                r.registers.to_string(),
                r.muxes.to_string(),
                r.latency.to_string(),
                r.cycles_per_word.to_string(),
            ]);
        }
        entries.push(HwEntry { decoder: alg, critical_path: CPD, units: rows });
    }
    Ok(render(format, &[t], &entries))
}
