//! Bundled code pairs and the TOML file format they ship in.
//!
//! A pair file names the code, its quantum parameters, and two code specs:
//!
//! ```toml
//! name = "f4_conv"
//! params = [3, 1, 3]
//!
//! [stabilizer]
//! name = "f4_conv.C"
//! kind = "conv"        # or "block"
//! field = 4            # 2 or 4
//! block_width = 3
//! memory = 1           # conv only
//! rows = [[1, 1, 1, 1, 2, 3]]
//! ```
//!
//! Symbols use the canonical integer encoding 0, 1, 2 (ω), 3 (ω̄).

use serde::{Deserialize, Serialize};

use crate::code::{
    min_distance, quantum_distance, terminate, verify_dual_pair, BlockCodeSpec, CodePair, CodeSpec,
    ConvCodeSpec, QuantumParams, Role,
};
use crate::error::{Error, Result};
use crate::gf::{Field, F4};

const FIVE_QUBIT: &str = include_str!("../presets/five_qubit.toml");
const STEANE: &str = include_str!("../presets/steane.toml");
const F4_CONV: &str = include_str!("../presets/f4_conv.toml");
const CSS_CONV: &str = include_str!("../presets/css_conv.toml");
const TB9: &str = include_str!("../presets/tb9.toml");
const TB15: &str = include_str!("../presets/tb15.toml");

/// Presets backed by a bundled data file, with the file contents.
pub const BUNDLED: [(&str, &str); 6] = [
    ("five_qubit", FIVE_QUBIT),
    ("steane", STEANE),
    ("f4_conv", F4_CONV),
    ("css_conv", CSS_CONV),
    ("tb9", TB9),
    ("tb15", TB15),
];

/// Every accepted preset name; the parameterised ones take a block count,
/// written `terminated_f4(3)` or `terminated_f4:3`.
pub const PRESET_NAMES: [&str; 8] = [
    "five_qubit",
    "steane",
    "f4_conv",
    "css_conv",
    "tb9",
    "tb15",
    "terminated_f4(N)",
    "terminated_css(N)",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpecKind {
    Conv,
    Block,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecFile {
    pub name: String,
    pub kind: SpecKind,
    pub field: u32,
    pub block_width: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub memory: Option<usize>,
    pub rows: Vec<Vec<u8>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairFile {
    pub name: String,
    pub params: [usize; 3],
    pub stabilizer: SpecFile,
    pub normalizer: SpecFile,
}

fn decode_rows(rows: &[Vec<u8>]) -> Result<Vec<Vec<F4>>> {
    rows.iter()
        .map(|r| r.iter().map(|&v| F4::from_u8(v)).collect())
        .collect()
}

impl SpecFile {
    pub fn from_spec(spec: &CodeSpec) -> SpecFile {
        let (kind, memory, rows) = match spec {
            CodeSpec::Conv(c) => (SpecKind::Conv, Some(c.memory()), c.rows()),
            CodeSpec::Block(b) => (SpecKind::Block, None, b.rows()),
        };
        SpecFile {
            name: spec.name().to_string(),
            kind,
            field: spec.field().order() as u32,
            block_width: spec.block_width(),
            memory,
            rows: rows
                .iter()
                .map(|r| r.iter().map(|x| x.to_u8()).collect())
                .collect(),
        }
    }

    /// Builds the code without checking row independence, so that a damaged
    /// file can still be loaded and diagnosed.
    fn to_spec(&self, role: Role) -> Result<CodeSpec> {
        let field = Field::from_order(self.field)?;
        let rows = decode_rows(&self.rows)?;
        match self.kind {
            SpecKind::Conv => {
                let memory = self.memory.ok_or_else(|| {
                    Error::Parse(format!("{}: conv spec needs `memory`", self.name))
                })?;
                Ok(CodeSpec::Conv(ConvCodeSpec::new(
                    &self.name,
                    field,
                    self.block_width,
                    memory,
                    role,
                    rows,
                )?))
            }
            SpecKind::Block => {
                let len = rows
                    .first()
                    .map(Vec::len)
                    .ok_or_else(|| Error::Parse(format!("{}: no rows", self.name)))?;
                Ok(CodeSpec::Block(BlockCodeSpec::new_unchecked(
                    &self.name,
                    field,
                    self.block_width,
                    len,
                    role,
                    rows,
                )?))
            }
        }
    }
}

impl PairFile {
    pub fn parse(text: &str) -> Result<PairFile> {
        toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("pair files always serialize")
    }

    pub fn from_pair(pair: &CodePair) -> PairFile {
        PairFile {
            name: pair.name.clone(),
            params: [pair.params.n, pair.params.k, pair.params.d],
            stabilizer: SpecFile::from_spec(&pair.stabilizer),
            normalizer: SpecFile::from_spec(&pair.normalizer),
        }
    }

    /// Shape-checked pair; structural properties are left to the caller.
    pub fn into_pair_unchecked(&self) -> Result<CodePair> {
        let stabilizer = self.stabilizer.to_spec(Role::StabilizerLabel)?;
        let normalizer = self.normalizer.to_spec(Role::NormalizerLabel)?;
        if stabilizer.field() != normalizer.field() {
            return Err(Error::FieldMismatch {
                left: stabilizer.field(),
                right: normalizer.field(),
            });
        }
        let [n, k, d] = self.params;
        Ok(CodePair {
            name: self.name.clone(),
            stabilizer,
            normalizer,
            params: QuantumParams { n, k, d },
        })
    }

    /// Pair that satisfies every structural invariant.
    pub fn into_pair(&self) -> Result<CodePair> {
        let pair = self.into_pair_unchecked()?;
        validate(&pair)?;
        Ok(pair)
    }
}

/// Checks independence, self-orthogonality, the dual pairing, the stated k,
/// and for block codes the stated distance.
pub fn validate(pair: &CodePair) -> Result<()> {
    let bad = |what: &str| Err(Error::InvalidCode(format!("{}: {what}", pair.name)));
    for spec in [&pair.stabilizer, &pair.normalizer] {
        if let CodeSpec::Block(b) = spec {
            let rank = b.row_space()?.rank();
            if rank != b.dim() {
                return Err(Error::Dependent {
                    rank,
                    rows: b.dim(),
                });
            }
        }
    }
    if !crate::code::check_self_orthogonal(&pair.stabilizer) {
        return bad("stabilizer code is not self-orthogonal");
    }
    if !verify_dual_pair(pair) {
        return bad("normalizer is not the orthogonal code of the stabilizer");
    }
    match (&pair.stabilizer, &pair.normalizer) {
        (CodeSpec::Block(s), CodeSpec::Block(c)) => {
            if pair.params.n != s.len() || pair.params.k + 2 * s.dim() != s.len() {
                return bad("stated [n, k] disagree with the generator matrices");
            }
            if min_distance(c)? != pair.params.d {
                return bad("stated distance disagrees with the normalizer code");
            }
        }
        (CodeSpec::Conv(s), _) => {
            if pair.params.n != s.block_width()
                || pair.params.k + 2 * s.rows().len() != s.block_width()
            {
                return bad("stated per-block [n, k] disagree with the generators");
            }
        }
        _ => return bad("stabilizer and normalizer are different kinds of code"),
    }
    Ok(())
}

fn parse_parameterised(name: &str) -> Option<(&str, usize)> {
    let (base, arg) = if let Some(open) = name.find('(') {
        let inner = name[open + 1..].strip_suffix(')')?;
        (&name[..open], inner)
    } else {
        name.split_once(':')?
    };
    Some((base, arg.trim().parse().ok()?))
}

/// Looks up a preset by name and validates it.
pub fn preset(name: &str) -> Result<CodePair> {
    if let Some((_, text)) = BUNDLED.iter().find(|(n, _)| *n == name) {
        return PairFile::parse(text)?.into_pair();
    }
    match terminated_source(name) {
        Some((conv, blocks)) => terminated_pair(conv, blocks),
        None => Err(Error::UnknownPreset(name.to_string())),
    }
}

/// Convolutional preset and block count a tail-biting preset is built from.
pub fn tail_biting_source(name: &str) -> Option<(&'static str, usize)> {
    match name {
        "tb9" => Some(("f4_conv", 3)),
        "tb15" => Some(("css_conv", 5)),
        _ => None,
    }
}

/// Convolutional preset and block count of a terminated preset name.
pub fn terminated_source(name: &str) -> Option<(&'static str, usize)> {
    match parse_parameterised(name) {
        Some(("terminated_f4", blocks)) => Some(("f4_conv", blocks)),
        Some(("terminated_css", blocks)) => Some(("css_conv", blocks)),
        _ => None,
    }
}

/// Terminated block version of a convolutional preset: the stabilizer is
/// every generator shift lying inside the window and the normalizer is its
/// orthogonal complement. Generators cut by the window edges are dropped,
/// so qubits near the edges are less protected than in the interior.
fn terminated_pair(conv_name: &str, blocks: usize) -> Result<CodePair> {
    let conv = preset(conv_name)?;
    let CodeSpec::Conv(stab) = &conv.stabilizer else {
        unreachable!("convolutional preset");
    };
    let stabilizer = terminate(stab, blocks)?;
    let normalizer = stabilizer.dual(
        format!("{conv_name}|term{blocks}.C_perp"),
        Role::NormalizerLabel,
    )?;
    let n = stabilizer.len();
    let k = n - 2 * stabilizer.dim();
    let d = quantum_distance(&stabilizer, &normalizer, conv.params.d)?.unwrap_or(conv.params.d);
    Ok(CodePair {
        name: format!(
            "terminated_{}({blocks})",
            conv_name.trim_end_matches("_conv")
        ),
        stabilizer: CodeSpec::Block(stabilizer),
        normalizer: CodeSpec::Block(normalizer),
        params: QuantumParams { n, k, d },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_bundled_preset_loads() {
        for (name, _) in BUNDLED {
            let pair = preset(name).unwrap();
            assert_eq!(pair.name, name);
        }
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(
            preset("seven_qubit"),
            Err(Error::UnknownPreset(_))
        ));
        assert!(matches!(
            preset("terminated_f4(x)"),
            Err(Error::UnknownPreset(_))
        ));
    }

    #[test]
    fn parameterised_names() {
        assert_eq!(
            parse_parameterised("terminated_f4(3)"),
            Some(("terminated_f4", 3))
        );
        assert_eq!(
            parse_parameterised("terminated_css:6"),
            Some(("terminated_css", 6))
        );
        assert_eq!(parse_parameterised("tb9"), None);
    }

    #[test]
    fn file_round_trip() {
        for (name, text) in BUNDLED {
            let file = PairFile::parse(text).unwrap();
            let again = PairFile::parse(&file.to_toml()).unwrap();
            assert_eq!(file, again, "{name}");
            assert_eq!(PairFile::from_pair(&file.into_pair().unwrap()), file);
        }
    }

    #[test]
    fn terminated_presets() {
        let t = preset("terminated_f4(3)").unwrap();
        assert_eq!((t.params.n, t.params.k), (9, 5));
        assert!(crate::code::check_self_orthogonal(&t.stabilizer) && verify_dual_pair(&t));
        let t = preset("terminated_css:6").unwrap();
        assert_eq!((t.params.n, t.params.k), (18, 10));
        assert!(verify_dual_pair(&t));
        assert!(matches!(
            preset("terminated_css(2)"),
            Err(Error::TooFewBlocks { .. })
        ));
    }

    #[test]
    fn corrupted_row_fails_validation() {
        let mut file = PairFile::parse(TB9).unwrap();
        file.normalizer.rows[0] = vec![1, 0, 0, 0, 0, 0, 0, 0, 0];
        assert!(file.into_pair_unchecked().is_ok());
        assert!(matches!(file.into_pair(), Err(Error::InvalidCode(_))));
    }

    #[test]
    fn conv_spec_without_memory_is_rejected() {
        let text = F4_CONV.replace("memory = 1\n", "");
        assert!(matches!(
            PairFile::parse(&text).unwrap().into_pair(),
            Err(Error::Parse(_))
        ));
    }
}
