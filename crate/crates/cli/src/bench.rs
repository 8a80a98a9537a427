use std::collections::BTreeMap;
use std::time::Instant;

use anyhow::{anyhow, Context};
use clap::Args;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rswb_core::complexity::{Algorithm, Step};
use rswb_core::rs::{rs_decode, rs_decode_erasures, rs_encode, ErasureSpec, Impl, RsCode, Status};
use rswb_core::{OpCounts, Poly};
use serde::Serialize;

use crate::table::{render, Format, Table};
use crate::{CodeArgs, Failure, ImplArgs, ImplKind};

#[derive(Args)]
pub struct BenchArgs {
    #[command(flatten)]
    code: CodeArgs,
    #[command(flatten)]
    imp: ImplArgs,
    /// Decoders to run; all three by default.
    #[arg(long, value_delimiter = ',')]
    decoders: Vec<Algorithm>,
    /// Run both implementations instead of only `--impl`.
    #[arg(long)]
    both: bool,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Errors per word; defaults to the largest correctable count.
    #[arg(long)]
    errors: Option<usize>,
    #[arg(long, default_value_t = 0)]
    erasures: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Debug, Clone, Copy, Default, Serialize)]
struct Mean {
    mul: f64,
    add: f64,
    inv: f64,
    overall: f64,
}

#[derive(Debug, Clone, Serialize)]
struct StepSummary {
    step: Step,
    mean: Mean,
    max: OpCounts,
}

#[derive(Debug, Clone, Serialize)]
struct Summary {
    decoder: Algorithm,
    implementation: &'static str,
    trials: usize,
    ok: usize,
    failures: usize,
    wrong: usize,
    mean: Mean,
    max: OpCounts,
    max_overall: u64,
    steps: Vec<StepSummary>,
}

struct Trial {
    status: Status,
    correct: bool,
    counts: OpCounts,
    steps: Vec<(Step, OpCounts)>,
}

fn threads() -> anyhow::Result<Option<usize>> {
    match std::env::var("RSWB_THREADS") {
        Ok(v) => {
            let n: usize = v.trim().parse().with_context(|| format!("RSWB_THREADS = {v:?}"))?;
            Ok(Some(n.max(1)))
        }
        Err(_) => Ok(None),
    }
}

fn one_trial(code: &RsCode, runs: &[(Algorithm, Impl)], seed: u64, idx: usize, errors: usize, erasures: usize) -> Result<Vec<Trial>, rswb_core::Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(idx as u64);
    let q = code.field().size() as u16;
    let msg = Poly::new((0..code.k()).map(|_| rng.gen_range(0..q)).collect());
    let mut word = rs_encode(code, &msg, Impl::Direct)?;
    let picked = sample(&mut rng, code.n(), errors + erasures).into_vec();
    for &p in &picked[..errors] {
        word[p] ^= rng.gen_range(1..q);
    }
    let erased = &picked[errors..];
    erased.iter().for_each(|&p| word[p] = 0);
    let spec = if erased.is_empty() { None } else { Some(ErasureSpec::new(code, erased)?) };
    runs.iter()
        .map(|&(alg, imp)| {
            let res = match &spec {
                None => rs_decode(code, alg, &word, imp)?,
                Some(s) => rs_decode_erasures(code, &word, s, alg, imp)?,
            };
            Ok(Trial {
                status: res.status,
                correct: res.message.as_ref() == Some(&msg),
                counts: res.counts,
                steps: res.steps.iter().map(|s| (s.step, s.counts)).collect(),
            })
        })
        .collect()
}

fn mean(sum: [u64; 4], n: usize) -> Mean {
    let d = n.max(1) as f64;
    Mean { mul: sum[0] as f64 / d, add: sum[1] as f64 / d, inv: sum[2] as f64 / d, overall: sum[3] as f64 / d }
}

fn cmax(a: OpCounts, b: OpCounts) -> OpCounts {
    OpCounts::new(a.mul.max(b.mul), a.add.max(b.add), a.inv.max(b.inv))
}

fn summarize(alg: Algorithm, imp: Impl, trials: &[&Trial], m: u32) -> Summary {
    let acc = |c: OpCounts, s: &mut [u64; 4]| {
        s[0] += c.mul;
        s[1] += c.add;
        s[2] += c.inv;
        s[3] += c.overall(m);
    };
    let mut sum = [0u64; 4];
    let mut max = OpCounts::ZERO;
    let mut steps: BTreeMap<Step, ([u64; 4], OpCounts)> = BTreeMap::new();
    for t in trials {
        acc(t.counts, &mut sum);
        max = cmax(max, t.counts);
        for &(step, c) in &t.steps {
            let e = steps.entry(step).or_insert(([0; 4], OpCounts::ZERO));
            acc(c, &mut e.0);
            e.1 = cmax(e.1, c);
        }
    }
    let ok = trials.iter().filter(|t| t.status == Status::Ok).count();
    Summary {
        decoder: alg,
        implementation: imp.name(),
        trials: trials.len(),
        ok,
        failures: trials.len() - ok,
        wrong: trials.iter().filter(|t| t.status == Status::Ok && !t.correct).count(),
        mean: mean(sum, trials.len()),
        max,
        max_overall: trials.iter().map(|t| t.counts.overall(m)).max().unwrap_or(0),
        steps: steps.into_iter().map(|(step, (s, mx))| StepSummary { step, mean: mean(s, trials.len()), max: mx }).collect(),
    }
}

pub fn run(args: &BenchArgs) -> Result<u8, Failure> {
    let code = args.code.build()?;
    let errors = args.errors.unwrap_or(code.t().saturating_sub(args.erasures.div_ceil(2)));
    if errors + args.erasures > code.n() {
        return Err(anyhow!("{errors} errors plus {} erasures exceed n = {}", args.erasures, code.n()).into());
    }
    let decoders = if args.decoders.is_empty() { Algorithm::ALL.to_vec() } else { args.decoders.clone() };
    let imps = if args.both {
        let mut fast = args.imp.clone();
        fast.kind = ImplKind::Fast;
        vec![Impl::Direct, fast.resolve()]
    } else {
        vec![args.imp.resolve()]
    };
    if decoders.contains(&Algorithm::Syndrome) && !code.is_cyclic() {
        return Err(rswb_core::Error::NotCyclic.into());
    }
    let runs: Vec<(Algorithm, Impl)> = decoders.iter().flat_map(|&a| imps.iter().map(move |&i| (a, i))).collect();

    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads()? {
        pool = pool.num_threads(n);
    }
    let pool = pool.build().map_err(|e| anyhow!("thread pool: {e}"))?;
    let start = Instant::now();
    let results: Vec<Vec<Trial>> = pool.install(|| {
        (0..args.trials)
            .into_par_iter()
            .map(|i| one_trial(&code, &runs, args.seed, i, errors, args.erasures))
            .collect::<Result<_, _>>()
    })?;
    let elapsed = start.elapsed();

    let m = code.field().m();
    let summaries: Vec<Summary> = runs
        .iter()
        .enumerate()
        .map(|(j, &(alg, imp))| summarize(alg, imp, &results.iter().map(|r| &r[j]).collect::<Vec<_>>(), m))
        .collect();

    let title = format!("RS({}, {}) over GF(2^{m}), {} trials, {errors} errors, {} erasures", code.n(), code.k(), args.trials, args.erasures);
    let mut totals = Table::new(
        title,
        &["decoder", "impl", "trials", "ok", "failures", "wrong", "mean_mul", "mean_add", "mean_inv", "mean_overall", "max_overall"],
    );
    let mut steps = Table::new("Per-step counts", &["decoder", "impl", "step", "mean_mul", "mean_add", "mean_inv", "max_mul", "max_add", "max_inv"]);
    for s in &summaries {
        totals.push(vec![
            s.decoder.to_string(),
            s.implementation.into(),
            s.trials.to_string(),
            s.ok.to_string(),
            s.failures.to_string(),
            s.wrong.to_string(),
            format!("{:.1}", s.mean.mul),
            format!("{:.1}", s.mean.add),
            format!("{:.2}", s.mean.inv),
            format!("{:.1}", s.mean.overall),
            s.max_overall.to_string(),
        ]);
        for st in &s.steps {
            steps.push(vec![
                s.decoder.to_string(),
                s.implementation.into(),
                st.step.to_string(),
                format!("{:.1}", st.mean.mul),
                format!("{:.1}", st.mean.add),
                format!("{:.2}", st.mean.inv),
                st.max.mul.to_string(),
                st.max.add.to_string(),
                st.max.inv.to_string(),
            ]);
        }
    }
    print!("{}", render(args.format, &[totals, steps], &summaries));
    eprintln!("wall time {:.3} s on {} threads", elapsed.as_secs_f64(), pool.current_num_threads());
    Ok(0)
}
