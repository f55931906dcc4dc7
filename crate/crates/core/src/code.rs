//! Convolutional and block label codes, the block transforms that turn a
//! convolutional code into a finite one, and exhaustive structural checks.
//!
//! A convolutional code is described by its basic generator rows. Row `r`
//! holds `memory + 1` blocks of `block_width` symbols; block `i` is the
//! coefficient of Dⁱ, so shifting a row by `s` blocks multiplies it by Dˢ.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{add_vecs, axpy, field_dot, weight, Field, RowSpace, F4};

/// Largest number of vectors any exhaustive routine will enumerate.
pub const ENUMERATION_LIMIT: u128 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    StabilizerLabel,
    NormalizerLabel,
    Classical,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvCodeSpec {
    name: String,
    field: Field,
    block_width: usize,
    memory: usize,
    role: Role,
    rows: Vec<Vec<F4>>,
}

impl ConvCodeSpec {
    pub fn new(
        name: impl Into<String>,
        field: Field,
        block_width: usize,
        memory: usize,
        role: Role,
        rows: Vec<Vec<F4>>,
    ) -> Result<ConvCodeSpec> {
        let name = name.into();
        if block_width == 0 {
            return Err(Error::Shape(format!(
                "{name}: block width must be positive"
            )));
        }
        if rows.is_empty() {
            return Err(Error::Shape(format!("{name}: no generator rows")));
        }
        let width = (memory + 1) * block_width;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != width {
                return Err(Error::Shape(format!(
                    "{name}: row {i} has {} symbols, expected {width}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| !field.contains(x)) {
                return Err(Error::NotInField {
                    symbol: bad.to_u8(),
                    field,
                });
            }
            if row.iter().all(|x| x.is_zero()) {
                return Err(Error::Shape(format!("{name}: row {i} is zero")));
            }
        }
        Ok(ConvCodeSpec {
            name,
            field,
            block_width,
            memory,
            role,
            rows,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
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

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn rows(&self) -> &[Vec<F4>] {
        &self.rows
    }

    /// Coefficient block Dⁱ of row `r`.
    pub fn block(&self, r: usize, i: usize) -> &[F4] {
        &self.rows[r][i * self.block_width..(i + 1) * self.block_width]
    }

    /// Number of blocks from D⁰ through the last nonzero block of row `r`.
    pub fn row_span(&self, r: usize) -> usize {
        (0..=self.memory)
            .rev()
            .find(|&i| self.block(r, i).iter().any(|x| !x.is_zero()))
            .map_or(0, |i| i + 1)
    }

    /// Row `r` shifted to start at block `start` in a frame of `blocks`
    /// blocks. With `wrap`, blocks past the end fold back cyclically;
    /// without it, `None` is returned if any nonzero block would overhang.
    pub fn place_row(&self, r: usize, start: usize, blocks: usize, wrap: bool) -> Option<Vec<F4>> {
        let n = self.block_width;
        let mut out = vec![F4::ZERO; blocks * n];
        for i in 0..self.row_span(r) {
            let mut b = start + i;
            if b >= blocks {
                if !wrap {
                    return None;
                }
                b %= blocks;
            }
            for (dst, &src) in out[b * n..(b + 1) * n].iter_mut().zip(self.block(r, i)) {
                *dst += src;
            }
        }
        Some(out)
    }

    /// Inner product of row `a` with row `b` shifted right by `shift` blocks.
    fn shifted_dot(&self, a: usize, other: &ConvCodeSpec, b: usize, shift: isize) -> F4 {
        let mut acc = F4::ZERO;
        for i in 0..=self.memory {
            let j = i as isize - shift;
            if j < 0 || j > other.memory as isize {
                continue;
            }
            acc += field_dot(self.field, self.block(a, i), other.block(b, j as usize));
        }
        acc
    }

    /// Every pair of rows, at every relative block shift where they
    /// overlap, is orthogonal. Shift invariance makes this sufficient for the
    /// whole infinite generator set.
    pub fn is_self_orthogonal(&self) -> bool {
        self.orthogonal_to(self)
    }

    fn orthogonal_to(&self, other: &ConvCodeSpec) -> bool {
        if self.field != other.field || self.block_width != other.block_width {
            return false;
        }
        let reach = (self.memory + other.memory) as isize;
        (0..self.rows.len()).all(|a| {
            (0..other.rows.len())
                .all(|b| (-reach..=reach).all(|s| self.shifted_dot(a, other, b, s).is_zero()))
        })
    }

    /// Copy of the code with the block order of every generator reversed
    /// (Dⁱ ↦ D^(memory−i)). Symbols within a block keep their order.
    pub fn time_reversed(&self) -> ConvCodeSpec {
        let n = self.block_width;
        let rows = self
            .rows
            .iter()
            .map(|row| row.chunks(n).rev().flatten().copied().collect())
            .collect();
        ConvCodeSpec {
            rows,
            name: format!("{}~rev", self.name),
            ..self.clone()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCodeSpec {
    name: String,
    field: Field,
    block_width: usize,
    len: usize,
    role: Role,
    rows: Vec<Vec<F4>>,
}

impl BlockCodeSpec {
    /// Validates shape, field membership and linear independence of rows.
    pub fn new(
        name: impl Into<String>,
        field: Field,
        block_width: usize,
        len: usize,
        role: Role,
        rows: Vec<Vec<F4>>,
    ) -> Result<BlockCodeSpec> {
        let spec = BlockCodeSpec::new_unchecked(name, field, block_width, len, role, rows)?;
        let rank = spec.row_space()?.rank();
        if rank != spec.rows.len() {
            return Err(Error::Dependent {
                rank,
                rows: spec.rows.len(),
            });
        }
        Ok(spec)
    }

    /// Shape and field checks only; rows may be dependent.
    pub fn new_unchecked(
        name: impl Into<String>,
        field: Field,
        block_width: usize,
        len: usize,
        role: Role,
        rows: Vec<Vec<F4>>,
    ) -> Result<BlockCodeSpec> {
        let name = name.into();
        if block_width == 0 || !len.is_multiple_of(block_width) {
            return Err(Error::Shape(format!(
                "{name}: length {len} is not a multiple of block width {block_width}"
            )));
        }
        for row in &rows {
            if row.len() != len {
                return Err(Error::LengthMismatch {
                    left: len,
                    right: row.len(),
                });
            }
            if let Some(&bad) = row.iter().find(|&&x| !field.contains(x)) {
                return Err(Error::NotInField {
                    symbol: bad.to_u8(),
                    field,
                });
            }
        }
        Ok(BlockCodeSpec {
            name,
            field,
            block_width,
            len,
            role,
            rows,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn block_width(&self) -> usize {
        self.block_width
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn rows(&self) -> &[Vec<F4>] {
        &self.rows
    }

    pub fn row_space(&self) -> Result<RowSpace> {
        RowSpace::new(self.field, self.len, &self.rows)
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.orthogonal_to(self)
    }

    fn orthogonal_to(&self, other: &BlockCodeSpec) -> bool {
        self.field == other.field
            && self.len == other.len
            && self.rows.iter().all(|a| {
                other
                    .rows
                    .iter()
                    .all(|b| field_dot(self.field, a, b).is_zero())
            })
    }

    /// Syndrome of `e`: one inner product per generator row.
    pub fn syndrome(&self, e: &[F4]) -> Vec<F4> {
        self.rows
            .iter()
            .map(|g| field_dot(self.field, e, g))
            .collect()
    }

    /// Rows sorted lexicographically, for order-insensitive comparison.
    pub fn sorted_rows(&self) -> Vec<Vec<F4>> {
        let mut rows = self.rows.clone();
        rows.sort();
        rows
    }

    /// Same code with the field's dual complement as a new spec.
    pub fn dual(&self, name: impl Into<String>, role: Role) -> Result<BlockCodeSpec> {
        let rows = crate::gf::dual_basis(self.field, self.len, &self.rows)?;
        BlockCodeSpec::new(name, self.field, self.block_width, self.len, role, rows)
    }
}

/// Either kind of label code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeSpec {
    Conv(ConvCodeSpec),
    Block(BlockCodeSpec),
}

impl CodeSpec {
    pub fn name(&self) -> &str {
        match self {
            CodeSpec::Conv(c) => c.name(),
            CodeSpec::Block(b) => b.name(),
        }
    }

    pub fn field(&self) -> Field {
        match self {
            CodeSpec::Conv(c) => c.field(),
            CodeSpec::Block(b) => b.field(),
        }
    }

    pub fn block_width(&self) -> usize {
        match self {
            CodeSpec::Conv(c) => c.block_width(),
            CodeSpec::Block(b) => b.block_width(),
        }
    }

    pub fn as_conv(&self) -> Option<&ConvCodeSpec> {
        match self {
            CodeSpec::Conv(c) => Some(c),
            CodeSpec::Block(_) => None,
        }
    }

    pub fn as_block(&self) -> Option<&BlockCodeSpec> {
        match self {
            CodeSpec::Block(b) => Some(b),
            CodeSpec::Conv(_) => None,
        }
    }
}

pub fn check_self_orthogonal(code: &CodeSpec) -> bool {
    match code {
        CodeSpec::Conv(c) => c.is_self_orthogonal(),
        CodeSpec::Block(b) => b.is_self_orthogonal(),
    }
}

/// Quantum parameters [n, k, d]. For convolutional codes n and k count
/// qubits per block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuantumParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
}

impl fmt::Display for QuantumParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.n, self.k, self.d)
    }
}

/// A stabilizer label code C together with its orthogonal code C⊥.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodePair {
    pub name: String,
    pub stabilizer: CodeSpec,
    pub normalizer: CodeSpec,
    pub params: QuantumParams,
}

impl CodePair {
    pub fn field(&self) -> Field {
        self.stabilizer.field()
    }

    /// CSS-type codes are given by binary label codes.
    pub fn is_css(&self) -> bool {
        self.field() == Field::GF2
    }

    pub fn is_convolutional(&self) -> bool {
        matches!(self.stabilizer, CodeSpec::Conv(_))
    }

    pub fn block_width(&self) -> usize {
        self.stabilizer.block_width()
    }
}

pub fn verify_dual_pair(pair: &CodePair) -> bool {
    match (&pair.stabilizer, &pair.normalizer) {
        (CodeSpec::Conv(s), CodeSpec::Conv(c)) => {
            s.orthogonal_to(c) && s.rows().len() + c.rows().len() == s.block_width()
        }
        (CodeSpec::Block(s), CodeSpec::Block(c)) => {
            let (Ok(rs), Ok(rc)) = (s.row_space(), c.row_space()) else {
                return false;
            };
            s.orthogonal_to(c) && rs.rank() + rc.rank() == s.len()
        }
        _ => false,
    }
}

/// Block code of all shifts of `conv`'s generators whose support fits in
/// `blocks` blocks.
pub fn terminate(conv: &ConvCodeSpec, blocks: usize) -> Result<BlockCodeSpec> {
    if blocks < conv.memory() + 1 {
        return Err(Error::TooFewBlocks {
            blocks,
            min: conv.memory() + 1,
        });
    }
    let mut rows = Vec::new();
    for start in 0..blocks {
        for r in 0..conv.rows().len() {
            if let Some(row) = conv.place_row(r, start, blocks, false) {
                rows.push(row);
            }
        }
    }
    BlockCodeSpec::new(
        format!("{}|term{blocks}", conv.name()),
        conv.field(),
        conv.block_width(),
        blocks * conv.block_width(),
        conv.role(),
        rows,
    )
}

/// Block code of every generator shift starting in `blocks` blocks, with the
/// overhang wrapped cyclically to the start. Rows are in shift-start order.
pub fn tailbite(conv: &ConvCodeSpec, blocks: usize) -> Result<BlockCodeSpec> {
    if blocks < conv.memory() + 1 {
        return Err(Error::TooFewBlocks {
            blocks,
            min: conv.memory() + 1,
        });
    }
    let rows = (0..blocks)
        .flat_map(|start| {
            (0..conv.rows().len()).map(move |r| {
                conv.place_row(r, start, blocks, true)
                    .expect("wrapping placement always fits")
            })
        })
        .collect();
    BlockCodeSpec::new(
        format!("{}|tb{blocks}", conv.name()),
        conv.field(),
        conv.block_width(),
        blocks * conv.block_width(),
        conv.role(),
        rows,
    )
}

fn check_enumeration(q: usize, exponent: usize) -> Result<()> {
    let size = (q as u128)
        .checked_pow(exponent as u32)
        .unwrap_or(u128::MAX);
    if size > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            size,
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(())
}

/// Calls `visit` with every linear combination of `rows` except the zero
/// combination. Depth-first so each step costs one row update.
fn for_each_combination(field: Field, rows: &[Vec<F4>], len: usize, mut visit: impl FnMut(&[F4])) {
    fn go(
        field: Field,
        rows: &[Vec<F4>],
        acc: &mut Vec<F4>,
        any: bool,
        visit: &mut dyn FnMut(&[F4]),
    ) {
        let Some((row, rest)) = rows.split_first() else {
            if any {
                visit(acc);
            }
            return;
        };
        go(field, rest, acc, any, visit);
        for &c in field.nonzero() {
            axpy(acc, c, row);
            go(field, rest, acc, true, visit);
            axpy(acc, c, row);
        }
    }
    let mut acc = vec![F4::ZERO; len];
    go(field, rows, &mut acc, false, &mut visit);
}

/// Minimum Hamming weight over all nonzero codewords, by enumeration.
pub fn min_distance(code: &BlockCodeSpec) -> Result<usize> {
    check_enumeration(code.field().order(), code.dim())?;
    let mut best = usize::MAX;
    for_each_combination(code.field(), code.rows(), code.len(), |c| {
        let w = weight(c);
        if w > 0 {
            best = best.min(w);
        }
    });
    Ok(best)
}

/// Minimum weight over nonzero codewords produced by inputs supported on at
/// most `horizon` blocks. Codewords are observed over `horizon + memory`
/// blocks, which contains every such codeword completely.
pub fn free_distance(conv: &ConvCodeSpec, horizon: usize) -> Result<usize> {
    let min = 2 * conv.memory() + 2;
    if horizon < min {
        return Err(Error::TooFewBlocks {
            blocks: horizon,
            min,
        });
    }
    let blocks = horizon + conv.memory();
    let mut rows = Vec::new();
    for start in 0..horizon {
        for r in 0..conv.rows().len() {
            rows.push(
                conv.place_row(r, start, blocks, false)
                    .expect("window holds every shift"),
            );
        }
    }
    check_enumeration(conv.field().order(), rows.len())?;
    let mut best = usize::MAX;
    for_each_combination(conv.field(), &rows, blocks * conv.block_width(), |c| {
        let w = weight(c);
        if w > 0 {
            best = best.min(w);
        }
    });
    Ok(best)
}

/// Smallest weight `w ≤ max_weight` of a vector in the normalizer code but
/// not in the stabilizer code, or `None` if there is none that light.
pub fn quantum_distance(
    stab: &BlockCodeSpec,
    norm: &BlockCodeSpec,
    max_weight: usize,
) -> Result<Option<usize>> {
    let (cs, cn) = (stab.row_space()?, norm.row_space()?);
    let n = norm.len();
    let nonzero = norm.field().nonzero();
    for w in 1..=max_weight.min(n) {
        let mut positions: Vec<usize> = (0..w).collect();
        loop {
            let mut digits = vec![0usize; w];
            loop {
                let mut v = vec![F4::ZERO; n];
                for (&p, &d) in positions.iter().zip(&digits) {
                    v[p] = nonzero[d];
                }
                if cn.contains(&v)? && !cs.contains(&v)? {
                    return Ok(Some(w));
                }
                let Some(i) = digits.iter().rposition(|&d| d + 1 < nonzero.len()) else {
                    break;
                };
                digits[i] += 1;
                digits[i + 1..].iter_mut().for_each(|d| *d = 0);
            }
            let Some(i) = (0..w).rev().find(|&i| positions[i] < n - w + i) else {
                break;
            };
            positions[i] += 1;
            for j in i + 1..w {
                positions[j] = positions[j - 1] + 1;
            }
        }
    }
    Ok(None)
}

/// Syndrome → minimum-weight coset leader for a block code pair.
#[derive(Debug, Clone)]
pub struct CosetTable {
    field: Field,
    stabilizer: BlockCodeSpec,
    leaders: Vec<Vec<F4>>,
}

impl CosetTable {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.leaders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leaders.is_empty()
    }

    /// Number of qubits (vector length).
    pub fn qubits(&self) -> usize {
        self.stabilizer.len()
    }

    pub fn syndrome(&self, e: &[F4]) -> Vec<F4> {
        self.stabilizer.syndrome(e)
    }

    /// Table index of a syndrome tuple; the first syndrome is most significant.
    pub fn index(&self, syndrome: &[F4]) -> Result<usize> {
        if syndrome.len() != self.stabilizer.dim() {
            return Err(Error::LengthMismatch {
                left: self.stabilizer.dim(),
                right: syndrome.len(),
            });
        }
        let q = self.field.order();
        syndrome.iter().try_fold(0usize, |acc, &s| {
            if self.field.contains(s) {
                Ok(acc * q + s.to_u8() as usize)
            } else {
                Err(Error::NotInField {
                    symbol: s.to_u8(),
                    field: self.field,
                })
            }
        })
    }

    pub fn syndrome_at(&self, index: usize) -> Vec<F4> {
        let q = self.field.order();
        let r = self.stabilizer.dim();
        let mut out = vec![F4::ZERO; r];
        let mut x = index;
        for slot in out.iter_mut().rev() {
            *slot = F4::from_u8((x % q) as u8).expect("digit below field order");
            x /= q;
        }
        out
    }

    pub fn leader(&self, index: usize) -> Result<&[F4]> {
        self.leaders
            .get(index)
            .map(Vec::as_slice)
            .ok_or(Error::SyndromeOutOfRange {
                index,
                size: self.leaders.len(),
            })
    }

    pub fn lookup(&self, syndrome: &[F4]) -> Result<&[F4]> {
        self.leader(self.index(syndrome)?)
    }

    /// (syndrome, leader) in table order.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<F4>, &[F4])> + '_ {
        self.leaders
            .iter()
            .enumerate()
            .map(|(i, l)| (self.syndrome_at(i), l.as_slice()))
    }
}

/// Builds the coset-leader table of a block pair by enumerating all qⁿ
/// vectors in lexicographic order (position 0 most significant), so ties
/// between minimum-weight vectors go to the lexicographically smallest.
pub fn coset_leader_table(pair: &CodePair) -> Result<CosetTable> {
    let CodeSpec::Block(stab) = &pair.stabilizer else {
        return Err(Error::InvalidCode(format!(
            "{}: coset tables need a block code",
            pair.name
        )));
    };
    let field = stab.field();
    let n = stab.len();
    let q = field.order();
    check_enumeration(q, n)?;
    check_enumeration(q, stab.dim())?;
    let size = q.pow(stab.dim() as u32);
    let mut best: Vec<Option<(usize, Vec<F4>)>> = vec![None; size];
    let mut v = vec![F4::ZERO; n];
    let total = q.pow(n as u32);
    let table = CosetTable {
        field,
        stabilizer: stab.clone(),
        leaders: Vec::new(),
    };
    for count in 0..total {
        let mut x = count;
        for slot in v.iter_mut().rev() {
            *slot = F4::from_u8((x % q) as u8).expect("digit below field order");
            x /= q;
        }
        let idx = table.index(&table.syndrome(&v))?;
        let w = weight(&v);
        match &best[idx] {
            Some((bw, _)) if *bw <= w => {}
            _ => best[idx] = Some((w, v.clone())),
        }
    }
    let leaders = best
        .into_iter()
        .map(|b| b.map(|(_, l)| l))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| {
            Error::InvalidCode(format!("{}: some syndromes are unreachable", pair.name))
        })?;
    Ok(CosetTable { leaders, ..table })
}

/// Residual of an actual error and a decoder estimate.
pub fn residual(actual: &[F4], estimate: &[F4]) -> Vec<F4> {
    add_vecs(actual, estimate)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(raw: &[u8]) -> Vec<F4> {
        raw.iter().map(|&v| F4::from_u8(v).unwrap()).collect()
    }

    #[test]
    fn single_row_not_self_orthogonal() {
        let b = BlockCodeSpec::new(
            "t",
            Field::GF4,
            3,
            3,
            Role::Classical,
            vec![row(&[1, 0, 0])],
        )
        .unwrap();
        assert!(!b.is_self_orthogonal());
    }

    #[test]
    fn dependent_rows_rejected() {
        let r = row(&[1, 2, 3]);
        let err = BlockCodeSpec::new("t", Field::GF4, 3, 3, Role::Classical, vec![r.clone(), r]);
        assert!(matches!(err, Err(Error::Dependent { rank: 1, rows: 2 })));
    }

    #[test]
    fn row_span_ignores_trailing_zero_blocks() {
        let c = ConvCodeSpec::new(
            "t",
            Field::GF4,
            3,
            1,
            Role::NormalizerLabel,
            vec![row(&[3, 2, 1, 0, 0, 0]), row(&[1, 1, 1, 1, 2, 3])],
        )
        .unwrap();
        assert_eq!(c.row_span(0), 1);
        assert_eq!(c.row_span(1), 2);
        assert!(c.place_row(1, 2, 3, false).is_none());
        assert_eq!(
            c.place_row(0, 2, 3, false).unwrap(),
            row(&[0, 0, 0, 0, 0, 0, 3, 2, 1])
        );
        assert_eq!(
            c.place_row(1, 2, 3, true).unwrap(),
            row(&[1, 2, 3, 0, 0, 0, 1, 1, 1])
        );
    }

    #[test]
    fn too_small_windows_rejected() {
        let c = ConvCodeSpec::new(
            "t",
            Field::GF2,
            3,
            2,
            Role::StabilizerLabel,
            vec![row(&[1, 1, 1, 1, 0, 0, 1, 1, 0])],
        )
        .unwrap();
        assert!(matches!(
            terminate(&c, 2),
            Err(Error::TooFewBlocks { blocks: 2, min: 3 })
        ));
        assert!(matches!(tailbite(&c, 2), Err(Error::TooFewBlocks { .. })));
        assert!(matches!(
            free_distance(&c, 5),
            Err(Error::TooFewBlocks { blocks: 5, min: 6 })
        ));
    }

    #[test]
    fn time_reversal_reverses_blocks_only() {
        let c = ConvCodeSpec::new(
            "t",
            Field::GF2,
            3,
            2,
            Role::StabilizerLabel,
            vec![row(&[1, 1, 1, 1, 0, 0, 1, 1, 0])],
        )
        .unwrap();
        assert_eq!(
            c.time_reversed().rows()[0],
            row(&[1, 1, 0, 1, 0, 0, 1, 1, 1])
        );
    }

    #[test]
    fn enumeration_limit_enforced() {
        let rows: Vec<Vec<F4>> = (0..11)
            .map(|i| {
                let mut r = vec![F4::ZERO; 11];
                r[i] = F4::ONE;
                r
            })
            .collect();
        let big = BlockCodeSpec::new("id", Field::GF4, 1, 11, Role::Classical, rows).unwrap();
        assert!(matches!(min_distance(&big), Err(Error::TooLarge { .. })));
    }
}
