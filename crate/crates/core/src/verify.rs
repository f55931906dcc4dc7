//! Structural checks over a set of code pairs.

use crate::code::{
    check_self_orthogonal, coset_leader_table, free_distance, min_distance, tailbite, terminate,
    verify_dual_pair, CodePair, CodeSpec, ConvCodeSpec, ENUMERATION_LIMIT,
};
use crate::decode::SingleErrorTable;
use crate::error::Result;
use crate::gf::{Field, RowSpace, F4};
use crate::presets::{preset, tail_biting_source, BUNDLED};
use crate::sim::{DecoderKind, Pipeline, DEFAULT_FRAME_BLOCKS};

/// Single-error table of the GF(4) convolutional code: error 3-tuple and
/// the syndrome pair it produces.
pub const F4_TABLE: [([u8; 3], [u8; 2]); 9] = [
    ([1, 0, 0], [1, 1]),
    ([2, 0, 0], [2, 2]),
    ([3, 0, 0], [3, 3]),
    ([0, 1, 0], [3, 1]),
    ([0, 2, 0], [1, 2]),
    ([0, 3, 0], [2, 3]),
    ([0, 0, 1], [2, 1]),
    ([0, 0, 2], [3, 2]),
    ([0, 0, 3], [1, 3]),
];

/// Single-error table of the binary convolutional code.
pub const CSS_TABLE: [([u8; 3], [u8; 3]); 3] = [
    ([1, 0, 0], [1, 1, 1]),
    ([0, 1, 0], [1, 0, 1]),
    ([0, 0, 1], [1, 0, 0]),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub code: String,
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(code: &str, check: &str, passed: bool, detail: impl Into<String>) -> CheckResult {
        CheckResult {
            code: code.to_string(),
            check: check.to_string(),
            passed,
            detail: detail.into(),
        }
    }

    fn from_result(code: &str, check: &str, r: Result<(bool, String)>) -> CheckResult {
        match r {
            Ok((passed, detail)) => CheckResult::new(code, check, passed, detail),
            Err(e) => CheckResult::new(code, check, false, format!("error: {e}")),
        }
    }
}

/// Bundled presets, in listing order.
pub fn bundled_pairs() -> Vec<(String, Result<CodePair>)> {
    BUNDLED
        .iter()
        .map(|(name, _)| (name.to_string(), preset(name)))
        .collect()
}

/// Runs every check on every pair whose name is in `only` (all when empty).
pub fn run_suite(pairs: &[(String, Result<CodePair>)], only: &[String]) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for (name, pair) in pairs {
        if !only.is_empty() && !only.iter().any(|o| o == name) {
            continue;
        }
        match pair {
            Ok(pair) => out.extend(check_pair(pair)),
            Err(e) => out.push(CheckResult::new(name, "load", false, e.to_string())),
        }
    }
    out
}

pub fn check_pair(pair: &CodePair) -> Vec<CheckResult> {
    let name = pair.name.as_str();
    let mut out = vec![
        CheckResult::new(
            name,
            "self_orthogonal",
            check_self_orthogonal(&pair.stabilizer),
            "",
        ),
        CheckResult::new(name, "dual_pair", verify_dual_pair(pair), ""),
        CheckResult::from_result(name, "dimensions", dimensions(pair)),
    ];
    match (&pair.stabilizer, &pair.normalizer) {
        (CodeSpec::Conv(stab), CodeSpec::Conv(norm)) => {
            out.push(CheckResult::from_result(
                name,
                "free_distance",
                conv_distance(pair, norm),
            ));
            out.push(CheckResult::from_result(
                name,
                "single_error_table",
                table_matches(stab),
            ));
            if stab.field() == Field::GF4 {
                out.push(CheckResult::from_result(
                    name,
                    "terminated_9_5_3",
                    terminated_953(norm),
                ));
            }
            out.push(CheckResult::from_result(
                name,
                "single_error_correction",
                single_errors(pair),
            ));
            out.push(CheckResult::from_result(
                name,
                "spaced_errors",
                spaced_errors(pair, stab.memory() + 1),
            ));
        }
        (CodeSpec::Block(_), CodeSpec::Block(norm)) => {
            out.push(CheckResult::from_result(
                name,
                "min_distance",
                min_distance(norm).map(|d| (d == pair.params.d, format!("d = {d}"))),
            ));
            out.push(CheckResult::from_result(
                name,
                "coset_table",
                coset_table(pair),
            ));
            out.push(CheckResult::from_result(
                name,
                "single_error_correction",
                single_errors(pair),
            ));
            if tail_biting_source(name).is_some() {
                out.push(CheckResult::from_result(
                    name,
                    "tail_biting_form",
                    tail_biting_form(pair),
                ));
            }
        }
        _ => out.push(CheckResult::new(
            name,
            "kinds",
            false,
            "stabilizer and normalizer differ in kind",
        )),
    }
    out
}

fn rank_of(spec: &CodeSpec) -> Result<usize> {
    match spec {
        CodeSpec::Block(b) => Ok(b.row_space()?.rank()),
        CodeSpec::Conv(c) => Ok(c.rows().len()),
    }
}

/// `n − k = 2·dim C` and `dim C + dim C⊥ = n`, per block for convolutional codes.
fn dimensions(pair: &CodePair) -> Result<(bool, String)> {
    let (rs, rn) = (rank_of(&pair.stabilizer)?, rank_of(&pair.normalizer)?);
    let len = match &pair.stabilizer {
        CodeSpec::Block(b) => b.len(),
        CodeSpec::Conv(c) => c.block_width(),
    };
    let independent = match (&pair.stabilizer, &pair.normalizer) {
        (CodeSpec::Block(s), CodeSpec::Block(c)) => rs == s.dim() && rn == c.dim(),
        _ => true,
    };
    let ok = independent && rs + rn == len && pair.params.n == len && pair.params.k + 2 * rs == len;
    Ok((
        ok,
        format!(
            "n = {len}, dim C = {rs}, dim C⊥ = {rn}, k = {}",
            pair.params.k
        ),
    ))
}

fn conv_distance(pair: &CodePair, norm: &ConvCodeSpec) -> Result<(bool, String)> {
    // Longest input horizon whose codewords can still be enumerated.
    let q = norm.field().order() as f64;
    let per_block = norm.rows().len() as f64 * q.log2();
    let fits = ((ENUMERATION_LIMIT as f64).log2() / per_block).floor() as usize;
    let horizon = fits.max(2 * norm.memory() + 2);
    let d = free_distance(norm, horizon)?;
    Ok((
        d == pair.params.d,
        format!("d_free = {d} over {horizon} input blocks"),
    ))
}

fn terminated_953(norm: &ConvCodeSpec) -> Result<(bool, String)> {
    let t = terminate(norm, 3)?;
    let d = min_distance(&t)?;
    Ok((
        t.len() == 9 && t.dim() == 5 && d == 3,
        format!("({}, {}, {d})", t.len(), t.dim()),
    ))
}

fn table_matches(stab: &ConvCodeSpec) -> Result<(bool, String)> {
    let table = SingleErrorTable::derive(stab)?;
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
    let want: Vec<(Vec<u8>, Vec<u8>)> = match stab.field() {
        Field::GF4 => F4_TABLE
            .iter()
            .map(|(e, s)| (e.to_vec(), s.to_vec()))
            .collect(),
        Field::GF2 => CSS_TABLE
            .iter()
            .map(|(e, s)| (e.to_vec(), s.to_vec()))
            .collect(),
    };
    Ok((
        got == want,
        format!("{} rows, {:?} scan", got.len(), table.order()),
    ))
}

fn coset_table(pair: &CodePair) -> Result<(bool, String)> {
    let table = coset_leader_table(pair)?;
    let r = pair.stabilizer.as_block().map_or(0, |b| b.dim());
    Ok((
        table.len() == pair.field().order().pow(r as u32),
        format!("{} entries", table.len()),
    ))
}

/// Every single-qubit Pauli error on a qubit that the channel can hit is
/// decoded exactly by the default decoder.
fn single_errors(pair: &CodePair) -> Result<(bool, String)> {
    let pipe = Pipeline::new(pair, DecoderKind::default_for(pair), DEFAULT_FRAME_BLOCKS)?;
    let mut tried = 0;
    let mut bad = 0;
    for q in pipe.noisy_qubits() {
        for v in F4::NONZERO {
            let mut e = vec![F4::ZERO; pipe.qubits()];
            e[q] = v;
            tried += 1;
            if pipe.decode(&e)?.0 != e {
                bad += 1;
            }
        }
    }
    Ok((bad == 0, format!("{tried} errors, {bad} wrong")))
}

/// Pairs of single-qubit errors `gap` blocks apart in the interior of a
/// convolutional frame are decoded exactly.
fn spaced_errors(pair: &CodePair, gap: usize) -> Result<(bool, String)> {
    let pipe = Pipeline::new(pair, DecoderKind::Table, DEFAULT_FRAME_BLOCKS)?;
    let n = pipe.block_width();
    let noisy = pipe.noisy_qubits();
    let (first, last) = (noisy.start / n, noisy.end / n);
    let mut tried = 0;
    let mut bad = 0;
    for b in first..last.saturating_sub(gap) {
        for qa in 0..n {
            for qb in 0..n {
                for va in F4::NONZERO {
                    for vb in F4::NONZERO {
                        let mut e = vec![F4::ZERO; pipe.qubits()];
                        e[b * n + qa] = va;
                        e[(b + gap) * n + qb] = vb;
                        tried += 1;
                        if pipe.decode(&e)?.0 != e {
                            bad += 1;
                        }
                    }
                }
            }
        }
    }
    Ok((bad == 0, format!("{tried} pairs, {bad} wrong")))
}

fn same_space(a: &[Vec<F4>], b: &[Vec<F4>], field: Field, len: usize) -> Result<bool> {
    let sa = RowSpace::new(field, len, a)?;
    let sb = RowSpace::new(field, len, b)?;
    Ok(sa.rank() == sb.rank()
        && b.iter()
            .map(|r| sa.contains(r))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .all(|x| x))
}

/// The pair spans the same codes as the wrapped convolutional generators.
fn tail_biting_form(pair: &CodePair) -> Result<(bool, String)> {
    let (conv, blocks) = tail_biting_source(&pair.name).expect("tail-biting preset");
    let src = preset(conv)?;
    let (CodeSpec::Conv(cs), CodeSpec::Conv(cn)) = (&src.stabilizer, &src.normalizer) else {
        unreachable!("convolutional preset");
    };
    let (Some(s), Some(c)) = (pair.stabilizer.as_block(), pair.normalizer.as_block()) else {
        return Ok((false, "not a block pair".into()));
    };
    let len = s.len();
    let ok = same_space(s.rows(), tailbite(cs, blocks)?.rows(), s.field(), len)?
        && same_space(c.rows(), tailbite(cn, blocks)?.rows(), c.field(), len)?;
    Ok((ok, format!("{conv} wrapped on {blocks} blocks")))
}
