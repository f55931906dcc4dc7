use std::cmp::Ordering;

use crate::code::ConvCodeSpec;
use crate::decode::{Axis, ConvFrame, ScanOrder, SingleErrorTable, SyndromeSeq};
use crate::error::{Error, Result};
use crate::gf::{weight, Field, F4};

/// Minimum-weight coset leader search over the syndrome-former trellis of a
/// terminated frame.
///
/// Blocks are visited in scan order. The state after block `t` holds the
/// partial syndromes already committed to positions `t+1 ..= t+memory`, so
/// there are `q^memory` states and `q^n` branches per state.
#[derive(Debug, Clone)]
pub struct ViterbiDecoder {
    frame: ConvFrame,
    branches: Vec<Branch>,
}

#[derive(Debug, Clone)]
struct Branch {
    pattern: Vec<F4>,
    weight: usize,
    signature: Vec<F4>,
}

#[derive(Debug, Clone)]
struct Survivor {
    cost: usize,
    path: Vec<F4>,
}

fn better(a: &Survivor, b: &Survivor) -> bool {
    match a.cost.cmp(&b.cost) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => a.path < b.path,
    }
}

fn encode_state(field: Field, digits: &[F4]) -> usize {
    digits
        .iter()
        .fold(0, |acc, d| acc * field.order() + d.to_u8() as usize)
}

impl ViterbiDecoder {
    pub fn new(stab: &ConvCodeSpec, order: ScanOrder, blocks: usize) -> Result<ViterbiDecoder> {
        let frame = ConvFrame::new(stab, order, Axis::Linear, blocks)?;
        let field = frame.field();
        let n = frame.block_width();
        let q = field.order();
        let branches = (0..q.pow(n as u32))
            .map(|mut x| {
                let mut pattern = vec![F4::ZERO; n];
                for slot in pattern.iter_mut().rev() {
                    *slot = field.elements()[x % q];
                    x /= q;
                }
                let signature = frame.signature(&pattern);
                Branch {
                    weight: weight(&pattern),
                    pattern,
                    signature,
                }
            })
            .collect();
        Ok(ViterbiDecoder { frame, branches })
    }

    /// Uses the scan order under which `stab` has a single-error table, or
    /// forward order if it has none.
    pub fn for_code(stab: &ConvCodeSpec, blocks: usize) -> Result<ViterbiDecoder> {
        let order = SingleErrorTable::derive(stab)
            .map(|t| t.order())
            .unwrap_or(ScanOrder::Forward);
        ViterbiDecoder::new(stab, order, blocks)
    }

    pub fn frame(&self) -> &ConvFrame {
        &self.frame
    }

    /// Minimum-weight physical error sequence with syndromes `s`. Ties go to
    /// the lexicographically smallest sequence in scan order.
    pub fn decode(&self, s: &SyndromeSeq) -> Result<Vec<F4>> {
        let field = self.frame.field();
        if s.field != field {
            return Err(Error::FieldMismatch {
                left: field,
                right: s.field,
            });
        }
        if s.len() != self.frame.blocks() {
            return Err(Error::LengthMismatch {
                left: self.frame.blocks(),
                right: s.len(),
            });
        }
        let nu = self.frame.memory();
        let q = field.order();
        let states = q.pow(nu as u32);
        let mut survivors: Vec<Option<Survivor>> = vec![None; states];
        survivors[0] = Some(Survivor {
            cost: 0,
            path: Vec::new(),
        });
        let mut partial = vec![F4::ZERO; nu];
        for t in 0..s.len() {
            let mut next: Vec<Option<Survivor>> = vec![None; states];
            for (state, surv) in survivors.iter().enumerate() {
                let Some(surv) = surv else { continue };
                let mut x = state;
                for slot in partial.iter_mut().rev() {
                    *slot = field.elements()[x % q];
                    x /= q;
                }
                for br in &self.branches {
                    let lead = partial.first().copied().unwrap_or(F4::ZERO) + br.signature[0];
                    if t >= nu && lead != s.values[t] {
                        continue;
                    }
                    let shifted: Vec<F4> = (1..=nu)
                        .map(|k| partial.get(k).copied().unwrap_or(F4::ZERO) + br.signature[k])
                        .collect();
                    let target = encode_state(field, &shifted);
                    let cost = surv.cost + br.weight;
                    let replace = match &next[target] {
                        None => true,
                        Some(cur) => {
                            cost < cur.cost
                                || (cost == cur.cost
                                    && (surv.path.as_slice(), br.pattern.as_slice())
                                        < (
                                            &cur.path[..surv.path.len()],
                                            &cur.path[surv.path.len()..],
                                        ))
                        }
                    };
                    if replace {
                        let mut path = surv.path.clone();
                        path.extend_from_slice(&br.pattern);
                        next[target] = Some(Survivor { cost, path });
                    }
                }
            }
            survivors = next;
        }
        let best = survivors
            .into_iter()
            .flatten()
            .reduce(|a, b| if better(&b, &a) { b } else { a })
            .ok_or_else(|| {
                Error::InvalidParameter("syndrome sequence has no consistent error".into())
            })?;
        Ok(self.frame.permute(&best.path))
    }
}

/// Minimum-weight error sequence for syndromes `s` of the single-generator
/// convolutional stabilizer `stab` on a terminated frame of `s.len()` blocks.
pub fn viterbi_coset_leader(stab: &ConvCodeSpec, s: &SyndromeSeq) -> Result<Vec<F4>> {
    ViterbiDecoder::for_code(stab, s.len())?.decode(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::preset;

    fn stab(name: &str) -> ConvCodeSpec {
        preset(name).unwrap().stabilizer.as_conv().unwrap().clone()
    }

    /// Every error on the frame, grouped by syndrome; returns the minimum
    /// weight in the coset of `target`.
    fn brute_min_weight(frame: &ConvFrame, target: &SyndromeSeq) -> usize {
        let field = frame.field();
        let q = field.order();
        let len = frame.qubits();
        let mut best = usize::MAX;
        for mut x in 0..q.pow(len as u32) {
            let mut e = vec![F4::ZERO; len];
            for slot in e.iter_mut().rev() {
                *slot = field.elements()[x % q];
                x /= q;
            }
            if weight(&e) < best && frame.syndromes(&e).unwrap() == *target {
                best = weight(&e);
            }
        }
        best
    }

    #[test]
    fn zero_syndromes_give_zero() {
        for name in ["f4_conv", "css_conv"] {
            let st = stab(name);
            let field = st.field();
            let s = SyndromeSeq::new(field, vec![F4::ZERO; 6]).unwrap();
            assert!(viterbi_coset_leader(&st, &s)
                .unwrap()
                .iter()
                .all(|x| x.is_zero()));
        }
    }

    #[test]
    fn single_errors_are_their_own_leaders() {
        for name in ["f4_conv", "css_conv"] {
            let st = stab(name);
            let dec = ViterbiDecoder::for_code(&st, 8).unwrap();
            let nu = st.memory();
            for b in 0..8 {
                let scan = dec.frame().scan_block(b);
                if scan < nu || scan + nu >= 8 {
                    continue;
                }
                for q in 0..3 {
                    for &v in st.field().nonzero() {
                        let mut e = vec![F4::ZERO; 24];
                        e[3 * b + q] = v;
                        let s = dec.frame().syndromes(&e).unwrap();
                        assert_eq!(dec.decode(&s).unwrap(), e, "{name} block {b} qubit {q}");
                    }
                }
            }
        }
    }

    #[test]
    fn double_errors_match_exhaustive_coset_search() {
        let st = stab("f4_conv");
        let dec = ViterbiDecoder::for_code(&st, 4).unwrap();
        for (a, va) in [(0, 1u8), (1, 2), (2, 3)] {
            for (b, vb) in [(0, 3u8), (1, 1), (2, 2)] {
                if a == b {
                    continue;
                }
                let mut e = vec![F4::ZERO; 12];
                e[3 + a] = F4::from_u8(va).unwrap();
                e[3 + b] = F4::from_u8(vb).unwrap();
                let s = dec.frame().syndromes(&e).unwrap();
                let got = dec.decode(&s).unwrap();
                assert_eq!(dec.frame().syndromes(&got).unwrap(), s);
                assert!(weight(&got) <= 2);
                assert_eq!(weight(&got), brute_min_weight(dec.frame(), &s));
            }
        }
    }

    #[test]
    fn css_leaders_match_exhaustive_search() {
        let st = stab("css_conv");
        let dec = ViterbiDecoder::for_code(&st, 4).unwrap();
        for x in 0u32..(1 << 12) {
            if x.count_ones() != 2 {
                continue;
            }
            let e: Vec<F4> = (0..12)
                .map(|i| if x >> i & 1 == 1 { F4::ONE } else { F4::ZERO })
                .collect();
            let s = dec.frame().syndromes(&e).unwrap();
            let got = dec.decode(&s).unwrap();
            assert_eq!(dec.frame().syndromes(&got).unwrap(), s);
            assert_eq!(weight(&got), brute_min_weight(dec.frame(), &s));
        }
    }

    #[test]
    fn rejects_wrong_field_or_length() {
        let dec = ViterbiDecoder::for_code(&stab("f4_conv"), 4).unwrap();
        assert!(dec
            .decode(&SyndromeSeq::new(Field::GF2, vec![F4::ZERO; 4]).unwrap())
            .is_err());
        assert!(dec
            .decode(&SyndromeSeq::new(Field::GF4, vec![F4::ZERO; 5]).unwrap())
            .is_err());
    }
}
