//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qconv::code::{
    check_self_orthogonal, coset_leader_table, free_distance, min_distance, terminate,
    verify_dual_pair, BlockCodeSpec, CodePair, CodeSpec, ConvCodeSpec,
};
use qconv::decode::{
    decode_conv_css, decode_conv_f4, decode_tb9, viterbi_coset_leader, Axis, ConvFrame,
    DecodeOutcome, EventKind, SingleErrorTable, SyndromeSeq,
};
use qconv::gf::{Field, F4};
use qconv::presets::preset;
use qconv::sim::{fit_coefficient, monte_carlo, ChannelParams, DecoderKind, Pipeline, TrialReport};

const PRESETS: [&str; 6] = ["five_qubit", "f4_conv", "tb9", "steane", "css_conv", "tb15"];
/// Union-bound coefficients per encoded qubit, same order as `PRESETS`.
const PUBLISHED_C: [f64; 6] = [10.0, 12.0, 12.0, 21.0, 21.0, 21.0];
const MC_P: [f64; 3] = [2e-3, 4e-3, 8e-3];
const MC_TRIALS: u64 = 4_000_000;
const MC_SEED: u64 = 20_240_601;
const FRAME: usize = 12;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn pair(name: &str) -> CodePair {
    preset(name).expect("bundled preset")
}

fn conv_stab(name: &str) -> ConvCodeSpec {
    pair(name)
        .stabilizer
        .as_conv()
        .expect("convolutional")
        .clone()
}

fn f4(v: u8) -> F4 {
    F4::from_u8(v).unwrap()
}

// Independent GF(4) arithmetic for syndrome oracles: 0, 1, ω, ω̄ = 0..3.
const MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
const CONJ: [u8; 4] = [0, 1, 3, 2];

fn oracle_dot(a: &[u8], b: &[u8], field: Field) -> u8 {
    a.iter().zip(b).fold(0, |acc, (&x, &y)| {
        let y = if field == Field::GF4 {
            CONJ[y as usize]
        } else {
            y
        };
        acc ^ MUL[x as usize][y as usize]
    })
}

/// Syndromes against every generator shift lying inside an `blocks`-block
/// frame, built straight from the generator row.
fn oracle_syndromes(stab: &ConvCodeSpec, e: &[u8], blocks: usize) -> Vec<u8> {
    let row: Vec<u8> = stab.rows()[0].iter().map(|x| x.to_u8()).collect();
    let n = stab.block_width();
    let span = row.len() / n;
    (0..=blocks - span)
        .map(|start| {
            let mut g = vec![0u8; blocks * n];
            g[start * n..(start + span) * n].copy_from_slice(&row);
            oracle_dot(e, &g, stab.field())
        })
        .collect()
}

fn labels(e: &[u8]) -> Vec<F4> {
    e.iter().map(|&v| f4(v)).collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for name in PRESETS {
        let p = pair(name);
        if !check_self_orthogonal(&p.stabilizer) {
            failures.push(format!("{name}: not self-orthogonal"));
        }
        if !verify_dual_pair(&p) {
            failures.push(format!("{name}: dual pairing"));
        }
        let (len, dim_c, dim_n) = match (&p.stabilizer, &p.normalizer) {
            (CodeSpec::Block(s), CodeSpec::Block(c)) => (s.len(), s.dim(), c.dim()),
            (CodeSpec::Conv(s), CodeSpec::Conv(c)) => {
                (s.block_width(), s.rows().len(), c.rows().len())
            }
            _ => unreachable!(),
        };
        if dim_c + dim_n != len || p.params.k + 2 * dim_c != len || p.params.n != len {
            failures.push(format!("{name}: dimensions {len} {dim_c} {dim_n}"));
        }
    }
    let t = start.elapsed();
    let ok = failures.is_empty() && t < Duration::from_secs(1);
    outcome(ok, format!("6 presets, {:?}, failures {failures:?}", t))
}

/// Nonzero codewords of a block code, counted by enumeration.
fn codeword_count(code: &BlockCodeSpec) -> u64 {
    let q = code.field().order() as u64;
    q.pow(code.dim() as u32) - 1
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut got = Vec::new();
    let mut ok = true;
    for (name, len, dim, words) in [
        ("five_qubit", 5, 3, 63),
        ("tb9", 9, 6, 4095),
        ("tb15", 15, 10, 1023),
    ] {
        let norm = pair(name).normalizer.as_block().unwrap().clone();
        let d = min_distance(&norm).unwrap();
        ok &= d == 3 && norm.len() == len && norm.dim() == dim && codeword_count(&norm) == words;
        got.push(format!("{name} ({}, {}) d={d}", norm.len(), norm.dim()));
    }
    let f4n = pair("f4_conv").normalizer.as_conv().unwrap().clone();
    let t3 = terminate(&f4n, 3).unwrap();
    let d = min_distance(&t3).unwrap();
    ok &= (t3.len(), t3.dim(), d) == (9, 5, 3);
    got.push(format!("terminated f4 ({}, {}, {d})", t3.len(), t3.dim()));
    for name in ["f4_conv", "css_conv"] {
        let norm = pair(name).normalizer.as_conv().unwrap().clone();
        let d = free_distance(&norm, 2 * norm.memory() + 2).unwrap();
        ok &= d == 3;
        got.push(format!("{name} d_free={d}"));
    }
    let t = start.elapsed();
    ok &= t < Duration::from_secs(10);
    outcome(ok, format!("{}; {:?}", got.join(", "), t))
}

fn criterion_3() -> Outcome {
    // Tables as printed in the source, error tuple then syndromes.
    let f4_table: [(&[u8], &[u8]); 9] = [
        (&[1, 0, 0], &[1, 1]),
        (&[2, 0, 0], &[2, 2]),
        (&[3, 0, 0], &[3, 3]),
        (&[0, 1, 0], &[3, 1]),
        (&[0, 2, 0], &[1, 2]),
        (&[0, 3, 0], &[2, 3]),
        (&[0, 0, 1], &[2, 1]),
        (&[0, 0, 2], &[3, 2]),
        (&[0, 0, 3], &[1, 3]),
    ];
    let css_table: [(&[u8], &[u8]); 3] = [
        (&[1, 0, 0], &[1, 1, 1]),
        (&[0, 1, 0], &[1, 0, 1]),
        (&[0, 0, 1], &[1, 0, 0]),
    ];
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, want) in [("f4_conv", &f4_table[..]), ("css_conv", &css_table[..])] {
        let table = SingleErrorTable::derive(&conv_stab(name)).unwrap();
        let got: Vec<(Vec<u8>, Vec<u8>)> = table
            .rows()
            .iter()
            .map(|r| {
                (
                    r.pattern.iter().map(|x| x.to_u8()).collect(),
                    r.signature.iter().map(|x| x.to_u8()).collect(),
                )
            })
            .collect();
        let want: Vec<(Vec<u8>, Vec<u8>)> =
            want.iter().map(|(e, s)| (e.to_vec(), s.to_vec())).collect();
        let same = got == want;
        ok &= same;
        detail.push(format!(
            "{name} {} rows {}",
            got.len(),
            if same { "equal" } else { "differ" }
        ));
    }
    outcome(ok, detail.join(", "))
}

fn single_pauli_errors(qubits: usize, range: std::ops::Range<usize>) -> Vec<Vec<F4>> {
    let mut out = Vec::new();
    for q in range {
        for v in 1..4 {
            let mut e = vec![F4::ZERO; qubits];
            e[q] = f4(v);
            out.push(e);
        }
    }
    out
}

fn criterion_4() -> Outcome {
    let mut detail = Vec::new();
    let mut bad_total = 0;
    for name in ["tb9", "tb15"] {
        let p = pair(name);
        let pipe = Pipeline::new(&p, DecoderKind::Table, FRAME).unwrap();
        let errors = single_pauli_errors(pipe.qubits(), 0..pipe.qubits());
        let bad = errors
            .iter()
            .filter(|e| {
                let (est, _) = pipe.decode(e).unwrap();
                qconv::code::residual(e, &est).iter().any(|x| !x.is_zero())
            })
            .count();
        bad_total += bad;
        detail.push(format!(
            "{name} {}/{} exact",
            errors.len() - bad,
            errors.len()
        ));
    }
    for (name, gap) in [("f4_conv", 2), ("css_conv", 3)] {
        let p = pair(name);
        let pipe = Pipeline::new(&p, DecoderKind::Table, FRAME).unwrap();
        let singles = single_pauli_errors(pipe.qubits(), pipe.noisy_qubits());
        let bad1 = singles
            .iter()
            .filter(|e| pipe.decode(e).unwrap().0 != **e)
            .count();
        let n = pipe.block_width();
        let interior = pipe.noisy_qubits();
        let mut doubles = 0;
        let mut bad2 = 0;
        for a in interior.clone() {
            let b0 = (a / n + gap) * n;
            for b in b0..(b0 + n).min(interior.end) {
                for va in 1..4 {
                    for vb in 1..4 {
                        let mut e = vec![F4::ZERO; pipe.qubits()];
                        e[a] = f4(va);
                        e[b] = f4(vb);
                        doubles += 1;
                        bad2 += usize::from(pipe.decode(&e).unwrap().0 != e);
                    }
                }
            }
        }
        bad_total += bad1 + bad2;
        detail.push(format!(
            "{name} singles {}/{}, gap-{gap} pairs {}/{doubles}",
            singles.len() - bad1,
            singles.len(),
            doubles - bad2
        ));
    }
    outcome(bad_total == 0, detail.join(", "))
}

fn criterion_5() -> Outcome {
    let stab = conv_stab("f4_conv");
    let frame = SingleErrorTable::derive(&stab)
        .unwrap()
        .frame(Axis::Linear, FRAME)
        .unwrap();
    let nu = stab.memory();
    let mut patterns = 0;
    let mut exceptions = Vec::new();
    // Interior blocks whose next block is also inside the interior.
    for block in nu..FRAME - nu - 1 {
        for (qa, qb) in [(0, 1), (0, 2), (1, 2)] {
            for va in 1..4u8 {
                for vb in 1..4u8 {
                    let mut raw = vec![0u8; 3 * FRAME];
                    raw[3 * block + qa] = va;
                    raw[3 * block + qb] = vb;
                    patterns += 1;
                    let syn = oracle_syndromes(&stab, &raw, FRAME);
                    let isolated = syn.iter().filter(|&&s| s != 0).count() == 1;
                    let out = decode_conv_f4(&frame.syndromes(&labels(&raw)).unwrap()).unwrap();
                    let detected = out
                        .events
                        .iter()
                        .any(|e| e.kind == EventKind::DetectedUncorrectable);
                    if !(isolated && detected) {
                        exceptions.push(format!(
                            "{:?} in block {block}",
                            &raw[3 * block..3 * block + 3]
                        ));
                    }
                }
            }
        }
    }
    let blocks = FRAME - 2 * nu - 1;
    outcome(
        exceptions.is_empty(),
        format!(
            "{patterns} patterns over {blocks} blocks; {} exceptions ({} of 27 per block), e.g. {}",
            exceptions.len(),
            exceptions.len() / blocks,
            exceptions.first().map(String::as_str).unwrap_or("none")
        ),
    )
}

type Decoder = fn(&SyndromeSeq) -> qconv::Result<DecodeOutcome>;

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut mismatches = 0;
    let samples = 10_000;
    for (name, decode) in [
        ("f4_conv", decode_conv_f4 as Decoder),
        ("css_conv", decode_conv_css as Decoder),
    ] {
        let stab = conv_stab(name);
        let frame = SingleErrorTable::derive(&stab)
            .unwrap()
            .frame(Axis::Linear, FRAME)
            .unwrap();
        let nu = stab.memory();
        let values = stab.field().nonzero();
        for _ in 0..samples {
            let mut e = vec![F4::ZERO; 3 * FRAME];
            if rng.random_bool(0.9) {
                let q = rng.random_range(3 * nu..3 * (FRAME - nu));
                e[q] = values[rng.random_range(0..values.len())];
            }
            let s = frame.syndromes(&e).unwrap();
            let table = decode(&s).unwrap().estimate;
            let viterbi = viterbi_coset_leader(&stab, &s).unwrap();
            mismatches += usize::from(table != viterbi);
        }
    }
    let tb9 = pair("tb9");
    let cosets = coset_leader_table(&tb9).unwrap();
    let circ = ConvFrame::new(
        &conv_stab("f4_conv"),
        qconv::decode::ScanOrder::Forward,
        Axis::Circular,
        3,
    )
    .unwrap();
    let mut tb_checked = 0;
    let mut tb_bad = 0;
    let mut errors = single_pauli_errors(9, 0..9);
    errors.push(vec![F4::ZERO; 9]);
    for e in &errors {
        let ours = decode_tb9(&circ.syndromes(e).unwrap()).unwrap().estimate;
        let leader = cosets.lookup(&cosets.syndrome(e)).unwrap();
        tb_checked += 1;
        tb_bad += usize::from(ours != leader);
    }
    outcome(
        mismatches == 0 && tb_bad == 0 && cosets.len() == 64,
        format!(
            "{} random frames, {mismatches} table/trellis mismatches; tb9 {tb_checked} cosets vs {}-entry table, {tb_bad} mismatches",
            2 * samples,
            cosets.len()
        ),
    )
}

fn run_monte_carlo() -> Vec<Vec<TrialReport>> {
    PRESETS
        .iter()
        .map(|name| {
            let p = pair(name);
            let kind = DecoderKind::default_for(&p);
            MC_P.iter()
                .map(|&prob| {
                    let mut params = ChannelParams::new(prob, MC_SEED);
                    params.frame_blocks = FRAME;
                    monte_carlo(&p, kind, &params, MC_TRIALS).unwrap()
                })
                .collect()
        })
        .collect()
}

fn criterion_7(reports: &[Vec<TrialReport>]) -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, reps) in PRESETS.iter().zip(reports) {
        match fit_coefficient(reps) {
            Ok(fit) => {
                ok &= (1.7..=2.3).contains(&fit.slope);
                detail.push(format!("{name} {:.3}", fit.slope));
            }
            Err(e) => {
                ok = false;
                detail.push(format!("{name} {e}"));
            }
        }
    }
    outcome(
        ok,
        format!(
            "slopes over p = 2,4,8e-3 with {MC_TRIALS} trials: {}",
            detail.join(", ")
        ),
    )
}

fn criterion_8(reports: &[Vec<TrialReport>]) -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for ((name, reps), published) in PRESETS.iter().zip(reports).zip(PUBLISHED_C) {
        let c = reps[0].c;
        let inside = (0.3 * published..=1.15 * published).contains(&c);
        ok &= inside;
        detail.push(format!(
            "{name} {c:.2} (bound {published}){}",
            if inside { "" } else { " OUT" }
        ));
    }
    let f4c = reports[1][0].c;
    let cssc = reports[4][0].c;
    let ratio = cssc / f4c;
    let ratio_ok = (1.3..=2.7).contains(&ratio);
    ok &= ratio_ok;
    detail.push(format!(
        "css/f4 ratio {ratio:.2}{}",
        if ratio_ok { "" } else { " OUT of [1.3, 2.7]" }
    ));
    outcome(ok, format!("c at p = 2e-3: {}", detail.join(", ")))
}

fn main() {
    let mut results: Vec<(u32, &str, Outcome)> = vec![
        (1, "structural verification", criterion_1()),
        (2, "exhaustive distances", criterion_2()),
        (3, "single-error tables", criterion_3()),
        (4, "exhaustive single-error correction", criterion_4()),
        (5, "weight-2 detection", criterion_5()),
        (6, "oracle equivalence", criterion_6()),
    ];
    let reports = run_monte_carlo();
    results.push((7, "quadratic scaling", criterion_7(&reports)));
    results.push((8, "coefficient consistency", criterion_8(&reports)));
    let mut failed = 0;
    for (n, title, o) in &results {
        failed += usize::from(!o.passed);
        println!(
            "criterion {n} {}: {title}: {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!("{} criteria, {failed} failed", results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
