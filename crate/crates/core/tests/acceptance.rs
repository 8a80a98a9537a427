//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rswb_core::cantor::{cantor_mul, CantorCtx};
use rswb_core::complexity::{bound_cantor, case_study_report_with, formula_direct, overall_cost, rate_thresholds, Algorithm, Step};
use rswb_core::euclid::{bound_feea, eea_classic, eta, feea, EeaConfig, EeaVariant, StopRule};
use rswb_core::mulstrat::{Multiplier, DEFAULT_FAST_THRESHOLD};
use rswb_core::newton::{bound_fast_divmod, fast_divmod};
use rswb_core::poly::{poly_divmod_long, poly_mul_school};
use rswb_core::rs::sweep::exhaustive_rs73;
use rswb_core::{Field, Meter, OpCounts, Poly, Symbol};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_poly(rng: &mut ChaCha8Rng, q: u16, len: usize) -> Poly {
    let mut v: Vec<Symbol> = (0..len).map(|_| rng.gen_range(0..q)).collect();
    if let Some(top) = v.last_mut() {
        *top = rng.gen_range(1..q);
    }
    Poly::new(v)
}

fn random_monic(rng: &mut ChaCha8Rng, q: u16, deg: usize) -> Poly {
    let mut v: Vec<Symbol> = (0..deg).map(|_| rng.gen_range(0..q)).collect();
    v.push(1);
    Poly::new(v)
}

type Row = (Step, [u64; 4]);
type CodeRows = ((usize, usize, u32), Algorithm, Vec<Row>);

fn direct_table() -> Vec<CodeRows> {
    use Algorithm::*;
    use Step::*;
    vec![
        ((255, 223, 8), Gao, vec![
            (Interpolation, [64770, 64770, 0, 1101090]),
            (PartialGcd, [16448, 8192, 0, 271360]),
            (MessageRecovery, [57536, 4014, 1, 924606]),
        ]),
        // Interpolation overall is often quoted as 11101090, a typo.
        ((255, 223, 8), GaoMod, vec![
            (Interpolation, [64770, 64770, 0, 1101090]),
            (PartialGcd, [2176, 1056, 0, 35872]),
            (MessageRecovery, [69841, 8160, 1, 1125632]),
        ]),
        ((255, 223, 8), Syndrome, vec![
            (Syndromes, [8128, 8128, 0, 138176]),
            (KeyEquation, [2176, 1056, 0, 35872]),
            (Chien, [3825, 4080, 0, 65280]),
            (Forney, [512, 496, 16, 8944]),
        ]),
        ((511, 447, 9), Gao, vec![
            (Interpolation, [260610, 260610, 0, 4951590]),
            (PartialGcd, [65664, 32768, 0, 1214720]),
            (MessageRecovery, [229760, 15198, 1, 4150896]),
        ]),
        ((511, 447, 9), GaoMod, vec![
            (Interpolation, [260610, 260610, 0, 4951590]),
            (PartialGcd, [8448, 4160, 0, 156224]),
            (MessageRecovery, [277921, 31680, 1, 5034276]),
        ]),
        ((511, 447, 9), Syndrome, vec![
            (Syndromes, [32640, 32640, 0, 620160]),
            (KeyEquation, [8448, 4160, 0, 156224]),
            (Chien, [15841, 16352, 0, 301490]),
            (Forney, [2048, 2016, 32, 39456]),
        ]),
    ]
}

fn golden_formulas() -> Outcome {
    let totals = [
        ((255, 223), Algorithm::Gao, [138754, 76976, 1, 2297056]),
        ((255, 223), Algorithm::GaoMod, [136787, 73986, 1, 2262594]),
        ((255, 223), Algorithm::Syndrome, [14641, 13760, 16, 248272]),
        ((511, 447), Algorithm::Gao, [556034, 308576, 1, 10317206]),
        ((511, 447), Algorithm::GaoMod, [546979, 296450, 1, 10142090]),
        ((511, 447), Algorithm::Syndrome, [58977, 55168, 32, 1117330]),
    ];
    let cells = |c: OpCounts, m: u32| [c.mul, c.add, c.inv, overall_cost(c, m)];
    let mut checked = 0;
    for ((n, k, m), alg, rows) in direct_table() {
        let got = formula_direct(alg, n, k).map_err(|e| e.to_string())?;
        ensure(got.len() == rows.len(), || format!("{alg} ({n},{k}) has {} steps", got.len()))?;
        for ((step, c), (want_step, want)) in got.iter().zip(&rows) {
            ensure(step == want_step && cells(*c, m) == *want, || format!("{alg}.{step} ({n},{k}): {:?} != {want:?}", cells(*c, m)))?;
            checked += 4;
        }
        let (_, _, want) = totals.iter().find(|t| t.0 == (n, k) && t.1 == alg).unwrap();
        let sum: OpCounts = got.iter().map(|s| s.1).sum();
        ensure(cells(sum, m) == *want, || format!("{alg}.total ({n},{k}): {:?} != {want:?}", cells(sum, m)))?;
        checked += 4;
    }
    Ok(format!("{checked} cells equal; gao-mod interpolation overall is 1101090, not the quoted 11101090"))
}

fn exhaustive_desk_scale() -> Outcome {
    let report = exhaustive_rs73().map_err(|e| e.to_string())?;
    for c in &report.checks {
        ensure(c.passed(), || format!("{}: {} of {} failed, first: {:?}", c.name, c.failures, c.cases, c.first_failure))?;
    }
    let cases: u64 = report.checks.iter().map(|c| c.cases).sum();
    Ok(format!("{} checks, {cases} decoder runs verified", report.checks.len()))
}

fn measured_vs_formula() -> Outcome {
    let report = case_study_report_with(255, 223, 8, 8, 0x2551).map_err(|e| e.to_string())?;
    let exact = ["gao.interpolation", "gao-mod.interpolation", "syndrome.syndromes", "syndrome.chien"];
    for row in &report.rows {
        if row.key.contains(".total.") {
            continue;
        }
        ensure(row.measured_direct <= row.formula_direct, || format!("{}: {} > {}", row.key, row.measured_direct, row.formula_direct))?;
        if exact.iter().any(|p| row.key.starts_with(&format!("{p}."))) {
            ensure(row.measured_direct == row.formula_direct, || format!("{}: {} != {}", row.key, row.measured_direct, row.formula_direct))?;
        }
    }
    Ok(format!("{} cells within ceilings over {} worst-case words per decoder", report.rows.len(), report.trials))
}

fn cantor_ceiling() -> Outcome {
    let f = Field::new(8, None).unwrap();
    let ctx = CantorCtx::new(&f);
    let mut rng = ChaCha8Rng::seed_from_u64(0x7e01);
    let mut worst: f64 = 0.0;
    for h in 2..=256usize {
        let la = h.div_ceil(2);
        let (a, b) = (random_poly(&mut rng, 256, la), random_poly(&mut rng, 256, h + 1 - la));
        let m = Meter::new(&f);
        cantor_mul(&m, &ctx, &a, &b).map_err(|e| e.to_string())?;
        let (got, cap) = (m.counts(), bound_cantor(h));
        ensure(got.within(&cap), || format!("h = {h}: {got} exceeds {cap}"))?;
        worst = worst.max(got.mul as f64 / cap.mul.max(1) as f64);
    }
    for i in 0..500 {
        let la = rng.gen_range(0..=128);
        let lb = rng.gen_range(0..=(257 - la.max(1)).min(128));
        let (a, b) = (random_poly(&mut rng, 256, la), random_poly(&mut rng, 256, lb));
        let m = Meter::new(&f);
        let fast = cantor_mul(&m, &ctx, &a, &b).map_err(|e| e.to_string())?;
        ensure(fast == poly_mul_school(&m, &a, &b), || format!("pair {i} (lengths {la}, {lb}) differs from schoolbook"))?;
    }
    Ok(format!("h in [2, 256] within ceiling (worst mul ratio {worst:.2}); 500 products match schoolbook"))
}

fn feea_oracle() -> Outcome {
    let f = Field::new(8, None).unwrap();
    let ctx = CantorCtx::new(&f);
    let mut rng = ChaCha8Rng::seed_from_u64(0xfeea);
    let cfg = EeaConfig { mul: Multiplier::fast(&ctx, DEFAULT_FAST_THRESHOLD), ..Default::default() };
    let mut runs = 0;
    let mut pairs = 0;
    while pairs < 1000 {
        let n0 = rng.gen_range(4..=255);
        let r0 = random_monic(&mut rng, 256, n0);
        let d1 = rng.gen_range(0..n0);
        let r1 = random_monic(&mut rng, 256, d1);
        pairs += 1;
        let hs: Vec<usize> = if n0 <= 24 { (1..=n0).collect() } else { (0..4).map(|_| rng.gen_range(1..=n0)).collect() };
        for h in hs {
            let m = Meter::new(&f);
            let fast = feea(&m, &cfg, &r0, &r1, h).map_err(|e| e.to_string())?;
            let used = m.counts();
            let stop = if h >= n0 { StopRule::Gcd } else { StopRule::DegreeBelow(n0 - h) };
            let slow = eea_classic(&Meter::new(&f), &cfg, &r0, &r1, stop, EeaVariant::Monic).map_err(|e| e.to_string())?;
            ensure(fast == slow, || format!("n0 = {n0}, h = {h}: fast and classical results differ"))?;
            let steps = eta(&f, &r0, &r1, h).map_err(|e| e.to_string())?;
            ensure(fast.l == steps, || format!("n0 = {n0}, h = {h}: l = {} but eta = {steps}", fast.l))?;
            let cap = bound_feea(n0, h, false);
            ensure(used.within(&cap), || format!("n0 = {n0}, h = {h}: {used} exceeds {cap}"))?;
            runs += 1;
        }
    }
    Ok(format!("{pairs} pairs, {runs} (pair, h) runs equal classical truncation and stay within the ceiling"))
}

fn newton_oracle() -> Outcome {
    let f = Field::new(8, None).unwrap();
    let ctx = CantorCtx::new(&f);
    let mul = Multiplier::fast(&ctx, DEFAULT_FAST_THRESHOLD);
    let mut rng = ChaCha8Rng::seed_from_u64(0x4e77);
    let classes = [(1usize, 15usize), (16, 63), (64, 127), (128, 255)];
    for (lo, hi) in classes {
        for i in 0..200 {
            let d0 = rng.gen_range(lo..=hi);
            let d1 = rng.gen_range(0..=d0);
            let a = random_poly(&mut rng, 256, d0 + 1);
            let b = random_monic(&mut rng, 256, d1);
            let m = Meter::new(&f);
            let got = fast_divmod(&m, &mul, &a, &b).map_err(|e| e.to_string())?;
            let used = m.counts();
            let want = poly_divmod_long(&Meter::new(&f), &a, &b).map_err(|e| e.to_string())?;
            ensure(got == want, || format!("class [{lo}, {hi}] instance {i}: quotient or remainder differs"))?;
            let cap = bound_fast_divmod(d0, d1);
            ensure(used.within(&cap), || format!("deg {d0} / {d1}: {used} exceeds {cap}"))?;
        }
    }
    Ok(format!("{} instances over {} size classes exact and within the ceiling", 200 * classes.len(), classes.len()))
}

fn thresholds() -> Outcome {
    let list = rate_thresholds();
    let mut parts = Vec::new();
    for t in &list {
        ensure(t.brackets_expected(), || format!("{}: expected {:?}, bracket {:?}", t.name, t.expected, t.bracket))?;
        parts.push(t.name);
    }
    Ok(format!("{} crossovers bracketed: {}", list.len(), parts.join(", ")))
}

fn fast_below_direct() -> Outcome {
    let mut notes = Vec::new();
    for (n, k, m) in [(255, 223, 8), (511, 447, 9)] {
        let rep = case_study_report_with(n, k, m, 2, 0x8).map_err(|e| e.to_string())?;
        for alg in Algorithm::ALL {
            let row = rep.get(&format!("{}.total.overall", alg.name())).unwrap();
            ensure(row.measured_fast < row.measured_direct, || format!("({n},{k}) {alg}: fast {} >= direct {}", row.measured_fast, row.measured_direct))?;
        }
        if n == 511 {
            for alg in [Algorithm::Gao, Algorithm::GaoMod] {
                let part = |col: fn(&rswb_core::complexity::ReportRow) -> u64| -> u64 {
                    ["partial_gcd", "message_recovery"].iter().map(|s| col(rep.get(&format!("{}.{s}.overall", alg.name())).unwrap())).sum()
                };
                let (fast, direct) = (part(|r| r.measured_fast), part(|r| r.measured_direct));
                ensure(fast < direct, || format!("(511,447) {alg} partial GCD + recovery: fast {fast} >= direct {direct}"))?;
                notes.push(format!("{alg} {fast} < {direct}"));
            }
        }
    }
    Ok(format!("all fast totals below direct; (511,447) partial GCD + recovery: {}", notes.join(", ")))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("golden direct formulas", golden_formulas),
        ("exhaustive RS(7,3) correctness", exhaustive_desk_scale),
        ("measured counts vs formulas at (255,223)", measured_vs_formula),
        ("additive-FFT multiplication ceiling", cantor_ceiling),
        ("fast Euclid equals classical truncation", feea_oracle),
        ("Newton division oracle", newton_oracle),
        ("rate thresholds", thresholds),
        ("fast mode below direct mode", fast_below_direct),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (tag, detail) = match run() {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {}: {tag} {name} ({:.1?}): {detail}", i + 1, start.elapsed());
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
