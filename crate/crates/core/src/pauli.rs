//! Pauli operators as GF(4) labels and as bit-flip / phase-flip planes.
//!
//! | Pauli | label | planes (bit, phase) |
//! |-------|-------|---------------------|
//! | I     | 0     | (0, 0)              |
//! | X     | ω     | (1, 0)              |
//! | Y     | 1     | (1, 1)              |
//! | Z     | ω̄     | (0, 1)              |
//!
//! Phases are not tracked; everything downstream works on labels.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf::{weight, F4};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub const ALL: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];

    pub fn label(self) -> F4 {
        match self {
            Pauli::I => F4::ZERO,
            Pauli::X => F4::W,
            Pauli::Y => F4::ONE,
            Pauli::Z => F4::WB,
        }
    }

    pub fn from_label(x: F4) -> Pauli {
        match x.to_u8() {
            0 => Pauli::I,
            1 => Pauli::Y,
            2 => Pauli::X,
            _ => Pauli::Z,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    pub fn from_char(c: char) -> Result<Pauli> {
        match c {
            'I' => Ok(Pauli::I),
            'X' => Ok(Pauli::X),
            'Y' => Ok(Pauli::Y),
            'Z' => Ok(Pauli::Z),
            _ => Err(Error::Parse(format!("not a Pauli symbol: {c:?}"))),
        }
    }
}

pub fn pauli_to_label(p: Pauli) -> F4 {
    p.label()
}

/// (bit-flip, phase-flip) bits of a label.
#[inline]
pub fn label_planes(x: F4) -> (F4, F4) {
    match x.to_u8() {
        0 => (F4::ZERO, F4::ZERO),
        1 => (F4::ONE, F4::ONE),
        2 => (F4::ONE, F4::ZERO),
        _ => (F4::ZERO, F4::ONE),
    }
}

/// Inverse of [`label_planes`]: ω·bit + ω̄·phase.
#[inline]
pub fn merge_label(bit: F4, phase: F4) -> F4 {
    F4::W * bit + F4::WB * phase
}

/// One GF(4) label per qubit, grouped in blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PauliErrorSeq {
    labels: Vec<F4>,
    block_width: usize,
}

impl PauliErrorSeq {
    pub fn new(labels: Vec<F4>, block_width: usize) -> Result<PauliErrorSeq> {
        if block_width == 0 || !labels.len().is_multiple_of(block_width) {
            return Err(Error::Shape(format!(
                "{} labels do not fill blocks of {block_width}",
                labels.len()
            )));
        }
        Ok(PauliErrorSeq {
            labels,
            block_width,
        })
    }

    pub fn identity(qubits: usize, block_width: usize) -> Result<PauliErrorSeq> {
        PauliErrorSeq::new(vec![F4::ZERO; qubits], block_width)
    }

    pub fn labels(&self) -> &[F4] {
        &self.labels
    }

    pub fn labels_mut(&mut self) -> &mut [F4] {
        &mut self.labels
    }

    pub fn into_labels(self) -> Vec<F4> {
        self.labels
    }

    pub fn block_width(&self) -> usize {
        self.block_width
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn weight(&self) -> usize {
        weight(&self.labels)
    }

    pub fn split_planes(&self) -> (Vec<F4>, Vec<F4>) {
        split_planes(&self.labels)
    }

    pub fn from_planes(bit: &[F4], phase: &[F4], block_width: usize) -> Result<PauliErrorSeq> {
        if bit.len() != phase.len() {
            return Err(Error::LengthMismatch {
                left: bit.len(),
                right: phase.len(),
            });
        }
        PauliErrorSeq::new(merge_planes(bit, phase), block_width)
    }

    pub fn paulis(&self) -> impl Iterator<Item = Pauli> + '_ {
        self.labels.iter().map(|&x| Pauli::from_label(x))
    }
}

impl fmt::Display for PauliErrorSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, block) in self.labels.chunks(self.block_width).enumerate() {
            if j > 0 {
                f.write_str(" ")?;
            }
            for &x in block {
                write!(f, "{}", Pauli::from_label(x).as_char())?;
            }
        }
        Ok(())
    }
}

impl FromStr for PauliErrorSeq {
    type Err = Error;

    /// Parses `"XII IZI"`: whitespace separates blocks, which must all be the
    /// same width.
    fn from_str(s: &str) -> Result<PauliErrorSeq> {
        let mut labels = Vec::new();
        let mut width = None;
        for group in s.split_whitespace() {
            let n = group.chars().count();
            if *width.get_or_insert(n) != n {
                return Err(Error::Parse(format!("uneven block widths in {s:?}")));
            }
            for c in group.chars() {
                labels.push(Pauli::from_char(c)?.label());
            }
        }
        PauliErrorSeq::new(labels, width.unwrap_or(1))
    }
}

pub fn split_planes(labels: &[F4]) -> (Vec<F4>, Vec<F4>) {
    labels.iter().map(|&x| label_planes(x)).unzip()
}

pub fn merge_planes(bit: &[F4], phase: &[F4]) -> Vec<F4> {
    bit.iter()
        .zip(phase)
        .map(|(&b, &p)| merge_label(b, p))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn label_map() {
        assert_eq!(pauli_to_label(Pauli::X), F4::W);
        assert_eq!(pauli_to_label(Pauli::Y), F4::ONE);
        assert_eq!(pauli_to_label(Pauli::I), F4::ZERO);
        assert_eq!(pauli_to_label(Pauli::Z), F4::WB);
        assert!(Pauli::from_char('Q').is_err());
    }

    #[test]
    fn plane_examples() {
        let (b, p) = split_planes(&[F4::W, F4::ZERO, F4::WB]);
        assert_eq!(b, vec![F4::ONE, F4::ZERO, F4::ZERO]);
        assert_eq!(p, vec![F4::ZERO, F4::ZERO, F4::ONE]);
        let (b, p) = split_planes(&[F4::ZERO; 3]);
        assert!(b.iter().chain(&p).all(|x| x.is_zero()));
        let (b, p) = split_planes(&[F4::ONE; 3]);
        assert_eq!(b, vec![F4::ONE; 3]);
        assert_eq!(p, vec![F4::ONE; 3]);
    }

    #[test]
    fn weights() {
        let e: PauliErrorSeq = "III III".parse().unwrap();
        assert_eq!(e.weight(), 0);
        let e = PauliErrorSeq::new(
            vec![F4::W, F4::ZERO, F4::ZERO, F4::ZERO, F4::WB, F4::ZERO],
            3,
        )
        .unwrap();
        assert_eq!(e.weight(), 2);
        assert_eq!(e.to_string(), "XII IZI");
    }

    #[test]
    fn parse_rejects_ragged_blocks() {
        assert!("XI III".parse::<PauliErrorSeq>().is_err());
        assert!("XQI".parse::<PauliErrorSeq>().is_err());
    }

    fn label() -> impl Strategy<Value = F4> {
        (0u8..4).prop_map(|v| F4::from_u8(v).unwrap())
    }

    proptest! {
        #[test]
        fn planes_round_trip(labels in proptest::collection::vec(label(), 0..40)) {
            let (b, p) = split_planes(&labels);
            prop_assert_eq!(merge_planes(&b, &p), labels);
        }

        #[test]
        fn weight_dominates_planes(labels in proptest::collection::vec(label(), 0..40)) {
            let (b, p) = split_planes(&labels);
            let (wb, wp) = (weight(&b), weight(&p));
            let w = weight(&labels);
            let ys = labels.iter().filter(|&&x| x == F4::ONE).count();
            prop_assert!(w >= wb.max(wp));
            prop_assert_eq!(w, wb + wp - ys);
            prop_assert_eq!(w == wb + wp, ys == 0);
        }
    }
}
