use std::sync::OnceLock;

use crate::code::ConvCodeSpec;
use crate::decode::{
    Axis, ConvFrame, DecodeEvent, DecodeOutcome, EventKind, ScanOrder, SyndromeSeq,
};
use crate::error::{Error, Result};
use crate::gf::{Field, F4};
use crate::presets::preset;

/// One weight-1 error pattern within a block and the syndromes it produces
/// at positions `j ..= j + memory`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub pattern: Vec<F4>,
    pub signature: Vec<F4>,
}

/// Lookup table from single-error syndrome signatures to error patterns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingleErrorTable {
    frame: ConvFrame,
    rows: Vec<TableRow>,
}

impl SingleErrorTable {
    /// Builds the table for `stab`, scanning forward if that separates all
    /// weight-1 errors and in reverse otherwise. Separation means every
    /// weight-1 pattern disturbs its own leading position and no two
    /// patterns share a signature.
    pub fn derive(stab: &ConvCodeSpec) -> Result<SingleErrorTable> {
        for order in [ScanOrder::Forward, ScanOrder::Reverse] {
            let frame = ConvFrame::new(stab, order, Axis::Linear, stab.memory() + 1)?;
            let rows = single_error_rows(&frame);
            let leads = rows.iter().all(|r| !r.signature[0].is_zero());
            let distinct = rows
                .iter()
                .enumerate()
                .all(|(i, a)| rows[i + 1..].iter().all(|b| a.signature != b.signature));
            if leads && distinct {
                return Ok(SingleErrorTable { frame, rows });
            }
        }
        Err(Error::NoSingleErrorTable(stab.name().to_string()))
    }

    pub fn order(&self) -> ScanOrder {
        self.frame.order()
    }

    pub fn memory(&self) -> usize {
        self.frame.memory()
    }

    pub fn field(&self) -> Field {
        self.frame.field()
    }

    /// Rows ordered by error position, then by symbol value.
    pub fn rows(&self) -> &[TableRow] {
        &self.rows
    }

    pub fn lookup(&self, signature: &[F4]) -> Option<&TableRow> {
        self.rows.iter().find(|r| r.signature == signature)
    }

    /// Frame geometry with this table's scan order.
    pub fn frame(&self, axis: Axis, blocks: usize) -> Result<ConvFrame> {
        let f = self.frame.with_blocks(blocks)?;
        Ok(ConvFrame { axis, ..f })
    }
}

fn single_error_rows(frame: &ConvFrame) -> Vec<TableRow> {
    let n = frame.block_width();
    let mut rows = Vec::new();
    for pos in 0..n {
        for &v in frame.field().nonzero() {
            let mut pattern = vec![F4::ZERO; n];
            pattern[pos] = v;
            let signature = frame.signature(&pattern);
            rows.push(TableRow { pattern, signature });
        }
    }
    rows
}

/// Table-lookup decoder for a single-generator convolutional code, on a
/// terminated or tail-biting frame.
#[derive(Debug, Clone)]
pub struct ConvTableDecoder {
    table: SingleErrorTable,
}

impl ConvTableDecoder {
    pub fn new(stab: &ConvCodeSpec) -> Result<ConvTableDecoder> {
        Ok(ConvTableDecoder {
            table: SingleErrorTable::derive(stab)?,
        })
    }

    pub fn table(&self) -> &SingleErrorTable {
        &self.table
    }

    fn check(&self, s: &SyndromeSeq) -> Result<()> {
        if s.field != self.table.field() {
            return Err(Error::FieldMismatch {
                left: self.table.field(),
                right: s.field,
            });
        }
        Ok(())
    }

    /// Sliding-window decoding of a terminated frame.
    ///
    /// Zero syndromes are skipped. At the first nonzero position `j` the
    /// window `j ..= j + memory` is looked up; a hit places the pattern in
    /// block `j`, cancels its predicted syndromes and resumes after the
    /// window. A miss (including a window running off the frame) is a
    /// detected, uncorrected error at `j`, and scanning resumes at `j + 1`.
    pub fn decode_linear(&self, s: &SyndromeSeq) -> Result<DecodeOutcome> {
        self.check(s)?;
        let frame = self.table.frame(Axis::Linear, s.len())?;
        let n = frame.block_width();
        let nu = frame.memory();
        let l = s.len();
        let mut work = s.values.clone();
        let mut scan_estimate = vec![F4::ZERO; l * n];
        let mut events = Vec::new();
        let mut j = 0;
        while j < l {
            if work[j].is_zero() {
                j += 1;
                continue;
            }
            let hit = if j + nu < l {
                self.table.lookup(&work[j..=j + nu])
            } else {
                None
            };
            match hit {
                Some(row) => {
                    scan_estimate[j * n..(j + 1) * n].copy_from_slice(&row.pattern);
                    for (k, &c) in row.signature.iter().enumerate() {
                        work[j + k] += c;
                    }
                    events.push(DecodeEvent {
                        block: frame.physical_block(j),
                        kind: EventKind::Corrected,
                    });
                    j += nu + 1;
                }
                None => {
                    events.push(DecodeEvent {
                        block: frame.physical_block(j),
                        kind: EventKind::DetectedUncorrectable,
                    });
                    j += 1;
                }
            }
        }
        let residual_syndrome_zero = frame.scan_syndromes(&scan_estimate) == s.values;
        Ok(DecodeOutcome {
            estimate: frame.permute(&scan_estimate),
            events,
            residual_syndrome_zero,
        })
    }

    /// Single-error decoding on a circular axis.
    ///
    /// A single error in block `j` leaves the `N − memory − 1` positions
    /// before `j` at zero and `j` nonzero. Exactly one position must match
    /// that shape and its window must be in the table; anything else is a
    /// detected, uncorrected error.
    pub fn decode_circular(&self, s: &SyndromeSeq) -> Result<DecodeOutcome> {
        self.check(s)?;
        let frame = self.table.frame(Axis::Circular, s.len())?;
        let n = frame.block_width();
        let nu = frame.memory();
        let l = s.len();
        let v = &s.values;
        let mut scan_estimate = vec![F4::ZERO; l * n];
        let mut events = Vec::new();
        if !s.is_zero() {
            let quiet = l - nu - 1;
            let starts: Vec<usize> = (0..l)
                .filter(|&j| !v[j].is_zero() && (1..=quiet).all(|d| v[(j + l - d) % l].is_zero()))
                .collect();
            let window = |j: usize| -> Vec<F4> { (0..=nu).map(|k| v[(j + k) % l]).collect() };
            let hit = match starts.as_slice() {
                [j] => self.table.lookup(&window(*j)).map(|row| (*j, row)),
                _ => None,
            };
            match hit {
                Some((j, row)) => {
                    scan_estimate[j * n..(j + 1) * n].copy_from_slice(&row.pattern);
                    events.push(DecodeEvent {
                        block: frame.physical_block(j),
                        kind: EventKind::Corrected,
                    });
                }
                None => {
                    let first = starts
                        .first()
                        .copied()
                        .unwrap_or_else(|| v.iter().position(|x| !x.is_zero()).expect("nonzero"));
                    events.push(DecodeEvent {
                        block: frame.physical_block(first),
                        kind: EventKind::DetectedUncorrectable,
                    });
                }
            }
        }
        let residual_syndrome_zero = frame.scan_syndromes(&scan_estimate) == s.values;
        Ok(DecodeOutcome {
            estimate: frame.permute(&scan_estimate),
            events,
            residual_syndrome_zero,
        })
    }
}

fn preset_decoder(
    cell: &'static OnceLock<ConvTableDecoder>,
    name: &str,
) -> &'static ConvTableDecoder {
    cell.get_or_init(|| {
        let pair = preset(name).expect("bundled preset");
        ConvTableDecoder::new(pair.stabilizer.as_conv().expect("convolutional preset"))
            .expect("bundled preset has a single-error table")
    })
}

fn f4_decoder() -> &'static ConvTableDecoder {
    static CELL: OnceLock<ConvTableDecoder> = OnceLock::new();
    preset_decoder(&CELL, "f4_conv")
}

fn css_decoder() -> &'static ConvTableDecoder {
    static CELL: OnceLock<ConvTableDecoder> = OnceLock::new();
    preset_decoder(&CELL, "css_conv")
}

/// 9-entry table decoder for the GF(4) convolutional code.
pub fn decode_conv_f4(s: &SyndromeSeq) -> Result<DecodeOutcome> {
    f4_decoder().decode_linear(s)
}

/// 3-entry table decoder for one plane (bit flip or phase flip) of the CSS
/// convolutional code; both planes use the same decoder.
pub fn decode_conv_css(s: &SyndromeSeq) -> Result<DecodeOutcome> {
    css_decoder().decode_linear(s)
}

/// Circular decoder for the [9,3,3] tail-biting code.
pub fn decode_tb9(s: &SyndromeSeq) -> Result<DecodeOutcome> {
    if s.len() != 3 {
        return Err(Error::LengthMismatch {
            left: 3,
            right: s.len(),
        });
    }
    f4_decoder().decode_circular(s)
}

/// Circular decoder for one plane of the [15,5,3] tail-biting code.
pub fn decode_tb15(s: &SyndromeSeq) -> Result<DecodeOutcome> {
    if s.len() != 5 {
        return Err(Error::LengthMismatch {
            left: 5,
            right: s.len(),
        });
    }
    css_decoder().decode_circular(s)
}
