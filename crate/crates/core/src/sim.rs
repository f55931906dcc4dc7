//! Depolarizing channel, end-to-end trials and Monte-Carlo estimates.
//!
//! A trial samples an error, forms its syndromes, decodes, and checks
//! whether the residual (actual + estimate) lies in the stabilizer label
//! code. Convolutional codes are run on terminated frames of `L` blocks;
//! the first and last `memory` blocks are guard blocks that stay error-free,
//! and rates per encoded qubit divide by the `L − 2·memory` interior blocks.

use std::fmt;
use std::ops::{Add, Range};
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Geometric};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::{terminate, CodePair, CodeSpec, ConvCodeSpec};
use crate::decode::{Axis, BlockLookupDecoder, ConvFrame, ConvTableDecoder, ViterbiDecoder};
use crate::error::{Error, Result};
use crate::gf::{add_vecs, Field, RowSpace, F4};
use crate::pauli::{merge_planes, split_planes, Pauli, PauliErrorSeq};
use crate::presets::{preset, tail_biting_source};

pub const DEFAULT_FRAME_BLOCKS: usize = 12;
pub const RNG_NAME: &str = "chacha8/splitmix64";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecoderKind {
    /// Single-error syndrome table (sliding window or circular).
    Table,
    /// Minimum-weight trellis search on the terminated frame.
    Viterbi,
    /// Full coset-leader table of a block code.
    CosetLookup,
}

impl DecoderKind {
    pub const ALL: [DecoderKind; 3] = [
        DecoderKind::Table,
        DecoderKind::Viterbi,
        DecoderKind::CosetLookup,
    ];

    pub fn id(self) -> &'static str {
        match self {
            DecoderKind::Table => "table",
            DecoderKind::Viterbi => "viterbi",
            DecoderKind::CosetLookup => "coset_lookup",
        }
    }

    /// Table decoding where the code has one, coset lookup otherwise.
    pub fn default_for(pair: &CodePair) -> DecoderKind {
        if pair.is_convolutional() || tail_biting_source(&pair.name).is_some() {
            DecoderKind::Table
        } else {
            DecoderKind::CosetLookup
        }
    }
}

impl fmt::Display for DecoderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for DecoderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<DecoderKind> {
        DecoderKind::ALL
            .into_iter()
            .find(|k| k.id() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown decoder id {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChannelParams {
    pub p: f64,
    /// Probabilities of X, Y, Z given that a qubit is hit.
    pub pauli_weights: [f64; 3],
    pub frame_blocks: usize,
    pub seed: u64,
}

impl Default for ChannelParams {
    fn default() -> Self {
        ChannelParams {
            p: 0.0,
            pauli_weights: [1.0 / 3.0; 3],
            frame_blocks: DEFAULT_FRAME_BLOCKS,
            seed: 0,
        }
    }
}

impl ChannelParams {
    pub fn new(p: f64, seed: u64) -> ChannelParams {
        ChannelParams {
            p,
            seed,
            ..ChannelParams::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.p) {
            return Err(Error::InvalidParameter(format!(
                "p = {} is outside [0, 1]",
                self.p
            )));
        }
        if self.pauli_weights.iter().any(|w| !(0.0..=1.0).contains(w)) {
            return Err(Error::InvalidParameter(
                "Pauli weights must lie in [0, 1]".into(),
            ));
        }
        let total: f64 = self.pauli_weights.iter().sum();
        if (total - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidParameter(format!(
                "Pauli weights sum to {total}, not 1"
            )));
        }
        if self.frame_blocks == 0 {
            return Err(Error::InvalidParameter(
                "frame_blocks must be positive".into(),
            ));
        }
        Ok(())
    }

    fn pick_pauli(&self, u: f64) -> Pauli {
        let [wx, wy, _] = self.pauli_weights;
        if u < wx {
            Pauli::X
        } else if u < wx + wy {
            Pauli::Y
        } else {
            Pauli::Z
        }
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Independent generator for one trial.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(splitmix64(splitmix64(seed) ^ trial))
}

/// Fills `labels[range]` with independent depolarizing errors.
fn sample_into<R: Rng + ?Sized>(
    params: &ChannelParams,
    labels: &mut [F4],
    range: Range<usize>,
    rng: &mut R,
) {
    if params.p <= 0.0 {
        return;
    }
    let gap = Geometric::new(params.p).expect("p validated");
    let mut pos = range.start;
    loop {
        let skip = gap.sample(rng);
        pos = match usize::try_from(skip).ok().and_then(|s| pos.checked_add(s)) {
            Some(x) if x < range.end => x,
            _ => break,
        };
        labels[pos] = params.pick_pauli(rng.random::<f64>()).label();
        pos += 1;
    }
}

/// Independent error on each of `qubits` qubits.
pub fn sample_errors<R: Rng + ?Sized>(
    params: &ChannelParams,
    qubits: usize,
    block_width: usize,
    rng: &mut R,
) -> Result<PauliErrorSeq> {
    params.validate()?;
    let mut labels = vec![F4::ZERO; qubits];
    sample_into(params, &mut labels, 0..qubits, rng);
    PauliErrorSeq::new(labels, block_width)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Success,
    LogicalFailure,
}

/// Residual test against a stabilizer label code, on labels or, for binary
/// codes, on each plane.
#[derive(Debug, Clone)]
struct Adjudicator {
    space: RowSpace,
}

impl Adjudicator {
    fn new(stab: &CodeSpec, blocks: usize) -> Result<Adjudicator> {
        let block = match stab {
            CodeSpec::Block(b) => b.clone(),
            CodeSpec::Conv(c) => terminate(c, blocks)?,
        };
        Ok(Adjudicator {
            space: block.row_space()?,
        })
    }

    fn verdict(&self, residual: &[F4]) -> Result<Verdict> {
        if residual.len() != self.space.len() {
            return Err(Error::LengthMismatch {
                left: self.space.len(),
                right: residual.len(),
            });
        }
        if residual.iter().all(|x| x.is_zero()) {
            return Ok(Verdict::Success);
        }
        let ok = if self.space.field() == Field::GF2 {
            let (b, p) = split_planes(residual);
            self.space.contains(&b)? && self.space.contains(&p)?
        } else {
            self.space.contains(residual)?
        };
        Ok(if ok {
            Verdict::Success
        } else {
            Verdict::LogicalFailure
        })
    }
}

/// Success iff `actual + estimate` lies in the stabilizer label code. For a
/// convolutional pair the code is terminated to the frame the labels cover.
pub fn adjudicate(pair: &CodePair, actual: &[F4], estimate: &[F4]) -> Result<Verdict> {
    if actual.len() != estimate.len() {
        return Err(Error::LengthMismatch {
            left: actual.len(),
            right: estimate.len(),
        });
    }
    let n = pair.block_width();
    if !actual.len().is_multiple_of(n) {
        return Err(Error::Shape(format!(
            "{} labels do not fill blocks of {n}",
            actual.len()
        )));
    }
    Adjudicator::new(&pair.stabilizer, actual.len() / n)?.verdict(&add_vecs(actual, estimate))
}

#[derive(Debug, Clone)]
enum Engine {
    Coset(BlockLookupDecoder),
    Linear(ConvTableDecoder, ConvFrame),
    Circular(ConvTableDecoder, ConvFrame),
    Viterbi(ViterbiDecoder),
}

impl Engine {
    /// Decodes one label sequence (or one plane).
    fn decode(&self, e: &[F4]) -> Result<(Vec<F4>, bool)> {
        match self {
            Engine::Coset(d) => Ok((d.decode_error(e)?, false)),
            Engine::Linear(d, frame) => {
                let out = d.decode_linear(&frame.syndromes(e)?)?;
                let detected = out.detected();
                Ok((out.estimate, detected))
            }
            Engine::Circular(d, frame) => {
                let out = d.decode_circular(&frame.syndromes(e)?)?;
                let detected = out.detected();
                Ok((out.estimate, detected))
            }
            Engine::Viterbi(d) => Ok((d.decode(&d.frame().syndromes(e)?)?, false)),
        }
    }
}

fn conv_stabilizer(pair: &CodePair) -> Option<&ConvCodeSpec> {
    pair.stabilizer.as_conv()
}

/// Decoder, frame and adjudicator for one code, ready to run trials.
#[derive(Debug, Clone)]
pub struct Pipeline {
    name: String,
    kind: DecoderKind,
    field: Field,
    block_width: usize,
    qubits: usize,
    noisy: Range<usize>,
    encoded: usize,
    engine: Engine,
    adjudicator: Adjudicator,
}

impl Pipeline {
    /// `frame_blocks` applies to convolutional codes only.
    pub fn new(pair: &CodePair, kind: DecoderKind, frame_blocks: usize) -> Result<Pipeline> {
        let unsupported = || Error::UnknownDecoder {
            code: pair.name.clone(),
            decoder: kind.id().to_string(),
        };
        let n = pair.block_width();
        let (engine, qubits, noisy, encoded, adj_blocks) = if let Some(stab) = conv_stabilizer(pair)
        {
            let nu = stab.memory();
            if frame_blocks < 2 * nu + 1 {
                return Err(Error::TooFewBlocks {
                    blocks: frame_blocks,
                    min: 2 * nu + 1,
                });
            }
            let engine = match kind {
                DecoderKind::Table => {
                    let d = ConvTableDecoder::new(stab)?;
                    let frame = d.table().frame(Axis::Linear, frame_blocks)?;
                    Engine::Linear(d, frame)
                }
                DecoderKind::Viterbi => {
                    Engine::Viterbi(ViterbiDecoder::for_code(stab, frame_blocks)?)
                }
                DecoderKind::CosetLookup => return Err(unsupported()),
            };
            let interior = frame_blocks - 2 * nu;
            (
                engine,
                frame_blocks * n,
                nu * n..(frame_blocks - nu) * n,
                interior * pair.params.k,
                frame_blocks,
            )
        } else {
            let block = pair.stabilizer.as_block().expect("block pair");
            let engine = match (kind, tail_biting_source(&pair.name)) {
                (DecoderKind::CosetLookup, _) => Engine::Coset(BlockLookupDecoder::new(pair)?),
                (DecoderKind::Table, Some((conv, blocks))) => {
                    let src = preset(conv)?;
                    let d = ConvTableDecoder::new(
                        conv_stabilizer(&src).expect("convolutional preset"),
                    )?;
                    let frame = d.table().frame(Axis::Circular, blocks)?;
                    Engine::Circular(d, frame)
                }
                _ => return Err(unsupported()),
            };
            let len = block.len();
            (engine, len, 0..len, pair.params.k, len / n)
        };
        Ok(Pipeline {
            name: pair.name.clone(),
            kind,
            field: pair.field(),
            block_width: n,
            qubits,
            noisy,
            encoded,
            engine,
            adjudicator: Adjudicator::new(&pair.stabilizer, adj_blocks)?,
        })
    }

    pub fn code_name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> DecoderKind {
        self.kind
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn block_width(&self) -> usize {
        self.block_width
    }

    /// Qubits that receive channel errors.
    pub fn noisy_qubits(&self) -> Range<usize> {
        self.noisy.clone()
    }

    /// Encoded qubits protected by the frame.
    pub fn encoded_qubits(&self) -> usize {
        self.encoded
    }

    /// Estimate for an actual error, and whether the decoder flagged an
    /// uncorrectable error.
    pub fn decode(&self, actual: &[F4]) -> Result<(Vec<F4>, bool)> {
        if actual.len() != self.qubits {
            return Err(Error::LengthMismatch {
                left: self.qubits,
                right: actual.len(),
            });
        }
        if self.field == Field::GF2 {
            let (b, p) = split_planes(actual);
            let (eb, db) = self.engine.decode(&b)?;
            let (ep, dp) = self.engine.decode(&p)?;
            Ok((merge_planes(&eb, &ep), db || dp))
        } else {
            self.engine.decode(actual)
        }
    }

    pub fn adjudicate(&self, actual: &[F4], estimate: &[F4]) -> Result<Verdict> {
        self.adjudicator.verdict(&add_vecs(actual, estimate))
    }

    pub fn sample<R: Rng + ?Sized>(&self, params: &ChannelParams, rng: &mut R) -> Vec<F4> {
        let mut labels = vec![F4::ZERO; self.qubits];
        sample_into(params, &mut labels, self.noisy.clone(), rng);
        labels
    }

    fn trial(&self, params: &ChannelParams, index: u64) -> Result<Counts> {
        let mut rng = trial_rng(params.seed, index);
        let actual = self.sample(params, &mut rng);
        if actual.iter().all(|x| x.is_zero()) {
            return Ok(Counts::default());
        }
        let (estimate, detected) = self.decode(&actual)?;
        let failed = self.adjudicate(&actual, &estimate)? == Verdict::LogicalFailure;
        Ok(Counts {
            failures: failed as u64,
            detected: detected as u64,
        })
    }

    /// Runs trials `0..trials` in parallel and aggregates them into a report.
    pub fn run(&self, params: &ChannelParams, trials: u64) -> Result<TrialReport> {
        params.validate()?;
        if trials == 0 {
            return Err(Error::InvalidParameter("trials must be at least 1".into()));
        }
        let counts = (0..trials)
            .into_par_iter()
            .map(|i| self.trial(params, i))
            .try_reduce(Counts::default, |a, b| Ok(a + b))?;
        Ok(TrialReport::new(self, params, trials, counts))
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Counts {
    failures: u64,
    detected: u64,
}

impl Add for Counts {
    type Output = Counts;

    fn add(self, o: Counts) -> Counts {
        Counts {
            failures: self.failures + o.failures,
            detected: self.detected + o.detected,
        }
    }
}

/// Aggregate of one Monte-Carlo run at a single p.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialReport {
    pub code: String,
    pub decoder: DecoderKind,
    pub p: f64,
    pub trials: u64,
    pub failures: u64,
    /// Trials in which the decoder flagged an uncorrectable error.
    pub detected: u64,
    pub rate: f64,
    pub rate_per_qubit: f64,
    pub std_error: f64,
    /// `rate_per_qubit / p²` with a normal-approximation 95% interval.
    pub c: f64,
    pub c_lo: f64,
    pub c_hi: f64,
    pub seed: u64,
    pub frame_blocks: usize,
    pub encoded_qubits: usize,
    pub rng: String,
}

const Z95: f64 = 1.959_963_984_540_054;

impl TrialReport {
    fn new(pipe: &Pipeline, params: &ChannelParams, trials: u64, counts: Counts) -> TrialReport {
        let rate = counts.failures as f64 / trials as f64;
        let k = pipe.encoded_qubits() as f64;
        let std_error = (rate * (1.0 - rate) / trials as f64).sqrt() / k;
        let rate_per_qubit = rate / k;
        let p2 = params.p * params.p;
        let (c, half) = if p2 > 0.0 {
            (rate_per_qubit / p2, Z95 * std_error / p2)
        } else {
            (0.0, 0.0)
        };
        TrialReport {
            code: pipe.code_name().to_string(),
            decoder: pipe.kind(),
            p: params.p,
            trials,
            failures: counts.failures,
            detected: counts.detected,
            rate,
            rate_per_qubit,
            std_error,
            c,
            c_lo: (c - half).max(0.0),
            c_hi: c + half,
            seed: params.seed,
            frame_blocks: pipe.qubits() / pipe.block_width(),
            encoded_qubits: pipe.encoded_qubits(),
            rng: RNG_NAME.to_string(),
        }
    }
}

pub fn monte_carlo(
    pair: &CodePair,
    decoder: DecoderKind,
    params: &ChannelParams,
    trials: u64,
) -> Result<TrialReport> {
    params.validate()?;
    Pipeline::new(pair, decoder, params.frame_blocks)?.run(params, trials)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Fit {
    /// Least-squares slope of log(rate) against log(p).
    pub slope: f64,
    /// `rate_per_qubit / p²` at the smallest p.
    pub coefficient: f64,
    pub points: usize,
}

/// Fits reports with nonzero failures; needs at least two distinct p.
pub fn fit_coefficient(reports: &[TrialReport]) -> Result<Fit> {
    let mut pts: Vec<(f64, f64)> = reports
        .iter()
        .filter(|r| r.failures > 0 && r.p > 0.0)
        .map(|r| (r.p, r.rate_per_qubit))
        .collect();
    pts.sort_by(|a, b| a.0.total_cmp(&b.0));
    let distinct =
        pts.windows(2).filter(|w| w[0].0 != w[1].0).count() + usize::from(!pts.is_empty());
    if distinct < 2 {
        return Err(Error::InsufficientData(format!(
            "need nonzero failures at two distinct p values, have {distinct}"
        )));
    }
    let logs: Vec<(f64, f64)> = pts.iter().map(|&(p, r)| (p.ln(), r.ln())).collect();
    let m = logs.len() as f64;
    let mx = logs.iter().map(|l| l.0).sum::<f64>() / m;
    let my = logs.iter().map(|l| l.1).sum::<f64>() / m;
    let sxy: f64 = logs.iter().map(|l| (l.0 - mx) * (l.1 - my)).sum();
    let sxx: f64 = logs.iter().map(|l| (l.0 - mx).powi(2)).sum();
    let (p0, r0) = pts[0];
    Ok(Fit {
        slope: sxy / sxx,
        coefficient: r0 / (p0 * p0),
        points: pts.len(),
    })
}
