//! Syndrome formation and decoding.
//!
//! Convolutional syndromes are indexed in *scan coordinates*. A decoder scans
//! a frame in one direction, and the first syndrome an error in block `j`
//! disturbs is the one of the generator whose leading block sits on `j`:
//! its last block when scanning forward, its first block when scanning in
//! reverse. Position `t` of a [`SyndromeSeq`] is the syndrome of the
//! generator whose leading block is scan block `t`, so an isolated error in
//! scan block `j` shows up at positions `j ..= j + memory`.
//!
//! In reverse order, scan block `t` is physical block `L − 1 − t` on a
//! linear frame of `L` blocks and `(N − t) mod N` on a circular one.
//! Which order a code uses is fixed by [`SingleErrorTable::derive`]: the
//! order must let every weight-1 error announce itself at its own block.

mod block;
mod table;
mod viterbi;

pub use block::{decode_block_lookup, BlockLookupDecoder};
pub use table::{
    decode_conv_css, decode_conv_f4, decode_tb15, decode_tb9, ConvTableDecoder, SingleErrorTable,
    TableRow,
};
pub use viterbi::{viterbi_coset_leader, ViterbiDecoder};

use serde::{Deserialize, Serialize};

use crate::code::ConvCodeSpec;
use crate::error::{Error, Result};
use crate::gf::{field_dot, Field, F4};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ScanOrder {
    Forward,
    Reverse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    /// Terminated frame: only generators lying wholly inside are measured.
    Linear,
    /// Tail-biting frame: generators wrap around.
    Circular,
}

/// One syndrome per scan position. On a linear frame the first `memory`
/// positions have no generator and hold zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SyndromeSeq {
    pub field: Field,
    pub values: Vec<F4>,
}

impl SyndromeSeq {
    pub fn new(field: Field, values: Vec<F4>) -> Result<SyndromeSeq> {
        if let Some(&bad) = values.iter().find(|&&x| !field.contains(x)) {
            return Err(Error::NotInField {
                symbol: bad.to_u8(),
                field,
            });
        }
        Ok(SyndromeSeq { field, values })
    }

    pub fn from_u8s(field: Field, raw: &[u8]) -> Result<SyndromeSeq> {
        let values = raw.iter().map(|&v| F4::from_u8(v)).collect::<Result<_>>()?;
        SyndromeSeq::new(field, values)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|x| x.is_zero())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EventKind {
    Corrected,
    DetectedUncorrectable,
}

/// Something the decoder did at a physical block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DecodeEvent {
    pub block: usize,
    pub kind: EventKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeOutcome {
    /// Estimated error labels in physical order (a single plane for binary
    /// codes).
    pub estimate: Vec<F4>,
    pub events: Vec<DecodeEvent>,
    /// The estimate reproduces every input syndrome.
    pub residual_syndrome_zero: bool,
}

impl DecodeOutcome {
    pub fn detected(&self) -> bool {
        self.events
            .iter()
            .any(|e| e.kind == EventKind::DetectedUncorrectable)
    }

    pub fn corrections(&self) -> usize {
        self.events
            .iter()
            .filter(|e| e.kind == EventKind::Corrected)
            .count()
    }
}

/// Geometry of a single-generator convolutional stabilizer laid on a frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvFrame {
    field: Field,
    block_width: usize,
    memory: usize,
    order: ScanOrder,
    axis: Axis,
    blocks: usize,
    /// Generator blocks in scan coordinates, `lead` last.
    scan_blocks: Vec<Vec<F4>>,
}

impl ConvFrame {
    pub fn new(
        stab: &ConvCodeSpec,
        order: ScanOrder,
        axis: Axis,
        blocks: usize,
    ) -> Result<ConvFrame> {
        if stab.rows().len() != 1 {
            return Err(Error::InvalidCode(format!(
                "{}: syndrome scanning needs exactly one basic generator, found {}",
                stab.name(),
                stab.rows().len()
            )));
        }
        if blocks < stab.memory() + 1 {
            return Err(Error::TooFewBlocks {
                blocks,
                min: stab.memory() + 1,
            });
        }
        let oriented = match order {
            ScanOrder::Forward => stab.clone(),
            ScanOrder::Reverse => stab.time_reversed(),
        };
        let scan_blocks = (0..=stab.memory())
            .map(|i| oriented.block(0, i).to_vec())
            .collect();
        Ok(ConvFrame {
            field: stab.field(),
            block_width: stab.block_width(),
            memory: stab.memory(),
            order,
            axis,
            blocks,
            scan_blocks,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn block_width(&self) -> usize {
        self.block_width
    }

    pub fn memory(&self) -> usize {
        self.memory
    }

    pub fn order(&self) -> ScanOrder {
        self.order
    }

    pub fn axis(&self) -> Axis {
        self.axis
    }

    pub fn blocks(&self) -> usize {
        self.blocks
    }

    pub fn qubits(&self) -> usize {
        self.blocks * self.block_width
    }

    pub fn with_blocks(&self, blocks: usize) -> Result<ConvFrame> {
        if blocks < self.memory + 1 {
            return Err(Error::TooFewBlocks {
                blocks,
                min: self.memory + 1,
            });
        }
        Ok(ConvFrame {
            blocks,
            ..self.clone()
        })
    }

    /// Scan block holding physical block `b`. The map is an involution.
    pub fn scan_block(&self, b: usize) -> usize {
        match (self.order, self.axis) {
            (ScanOrder::Forward, _) => b,
            (ScanOrder::Reverse, Axis::Linear) => self.blocks - 1 - b,
            (ScanOrder::Reverse, Axis::Circular) => (self.blocks - b) % self.blocks,
        }
    }

    pub fn physical_block(&self, t: usize) -> usize {
        self.scan_block(t)
    }

    /// Generator block in scan coordinates; block `memory` leads.
    pub fn scan_generator_block(&self, i: usize) -> &[F4] {
        &self.scan_blocks[i]
    }

    /// Contribution of an error pattern in scan block `j` to positions
    /// `j, j+1, …, j+memory`.
    pub fn signature(&self, pattern: &[F4]) -> Vec<F4> {
        (0..=self.memory)
            .map(|k| field_dot(self.field, pattern, &self.scan_blocks[self.memory - k]))
            .collect()
    }

    /// Reorders physical blocks into scan order (or back; the map is its
    /// own inverse).
    pub fn permute(&self, v: &[F4]) -> Vec<F4> {
        let n = self.block_width;
        let mut out = vec![F4::ZERO; v.len()];
        for b in 0..self.blocks {
            let t = self.scan_block(b);
            out[t * n..(t + 1) * n].copy_from_slice(&v[b * n..(b + 1) * n]);
        }
        out
    }

    fn check_len(&self, v: &[F4]) -> Result<()> {
        if v.len() != self.qubits() {
            return Err(Error::LengthMismatch {
                left: self.qubits(),
                right: v.len(),
            });
        }
        if let Some(&bad) = v.iter().find(|&&x| !self.field.contains(x)) {
            return Err(Error::NotInField {
                symbol: bad.to_u8(),
                field: self.field,
            });
        }
        Ok(())
    }

    /// Syndromes of a physical error sequence, in scan order.
    pub fn syndromes(&self, e: &[F4]) -> Result<SyndromeSeq> {
        self.check_len(e)?;
        let scan = self.permute(e);
        Ok(SyndromeSeq {
            field: self.field,
            values: self.scan_syndromes(&scan),
        })
    }

    /// Syndromes of an error already in scan order.
    pub(crate) fn scan_syndromes(&self, scan: &[F4]) -> Vec<F4> {
        let n = self.block_width;
        let nu = self.memory;
        let l = self.blocks;
        (0..l)
            .map(|t| {
                if self.axis == Axis::Linear && t < nu {
                    return F4::ZERO;
                }
                let mut acc = F4::ZERO;
                for i in 0..=nu {
                    let b = (t + l + i - nu) % l;
                    acc += field_dot(self.field, &scan[b * n..(b + 1) * n], &self.scan_blocks[i]);
                }
                acc
            })
            .collect()
    }
}

/// Syndromes of `e` against the terminated frame of `stab`, in scan order.
pub fn syndromes_conv(e: &[F4], stab: &ConvCodeSpec, order: ScanOrder) -> Result<SyndromeSeq> {
    let n = stab.block_width();
    if !e.len().is_multiple_of(n) {
        return Err(Error::Shape(format!(
            "{} labels do not fill blocks of {n}",
            e.len()
        )));
    }
    ConvFrame::new(stab, order, Axis::Linear, e.len() / n)?.syndromes(e)
}
