//! Arithmetic over GF(2) and GF(4), inner products and small dense
//! linear-algebra kernels.
//!
//! GF(4) = {0, 1, ω, ω̄} with ω² = ω̄, ω·ω̄ = 1 and 1 + ω + ω̄ = 0. Elements
//! are stored with the canonical integer encoding 0 ↦ 0, 1 ↦ 1, ω ↦ 2,
//! ω̄ ↦ 3. Under that encoding field addition is a bitwise XOR.
//!
//! ```text
//! × | 0  1  ω  ω̄
//! --+------------
//! 0 | 0  0  0  0
//! 1 | 0  1  ω  ω̄
//! ω | 0  ω  ω̄  1
//! ω̄ | 0  ω̄  1  ω
//! ```
//!
//! GF(2) vectors use the same representation restricted to {0, 1}, so a
//! binary code can be read as a GF(4) code without conversion.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Element of GF(4), canonical encoding 0, 1, 2 (ω), 3 (ω̄).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct F4(u8);

const MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
const INV: [u8; 4] = [0, 1, 3, 2];

impl F4 {
    pub const ZERO: F4 = F4(0);
    pub const ONE: F4 = F4(1);
    /// ω
    pub const W: F4 = F4(2);
    /// ω̄ = ω²
    pub const WB: F4 = F4(3);

    pub const ALL: [F4; 4] = [F4::ZERO, F4::ONE, F4::W, F4::WB];
    pub const NONZERO: [F4; 3] = [F4::ONE, F4::W, F4::WB];

    /// Builds an element from its canonical integer encoding.
    pub fn from_u8(v: u8) -> Result<F4> {
        if v < 4 {
            Ok(F4(v))
        } else {
            Err(Error::BadSymbol(v))
        }
    }

    #[inline]
    pub const fn to_u8(self) -> u8 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Frobenius conjugate x ↦ x²: fixes 0 and 1, swaps ω and ω̄.
    #[inline]
    pub const fn conj(self) -> F4 {
        match self.0 {
            2 => F4(3),
            3 => F4(2),
            v => F4(v),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self) -> Option<F4> {
        if self.is_zero() {
            None
        } else {
            Some(F4(INV[self.0 as usize]))
        }
    }

    /// Symbol used in human-readable output: 0, 1, w, W.
    pub fn symbol(self) -> char {
        ['0', '1', 'w', 'W'][self.0 as usize]
    }

    pub fn from_symbol(c: char) -> Result<F4> {
        match c {
            '0' => Ok(F4::ZERO),
            '1' => Ok(F4::ONE),
            'w' => Ok(F4::W),
            'W' => Ok(F4::WB),
            _ => Err(Error::Parse(format!("not a GF(4) symbol: {c:?}"))),
        }
    }
}

#[allow(clippy::suspicious_arithmetic_impl, clippy::suspicious_op_assign_impl)]
impl Add for F4 {
    type Output = F4;
    #[inline]
    fn add(self, rhs: F4) -> F4 {
        F4(self.0 ^ rhs.0)
    }
}

// Characteristic 2: subtraction is addition.
#[allow(clippy::suspicious_arithmetic_impl, clippy::suspicious_op_assign_impl)]
impl Sub for F4 {
    type Output = F4;
    #[inline]
    fn sub(self, rhs: F4) -> F4 {
        F4(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl, clippy::suspicious_op_assign_impl)]
impl AddAssign for F4 {
    #[inline]
    fn add_assign(&mut self, rhs: F4) {
        self.0 ^= rhs.0;
    }
}

impl Mul for F4 {
    type Output = F4;
    #[inline]
    fn mul(self, rhs: F4) -> F4 {
        F4(MUL[self.0 as usize][rhs.0 as usize])
    }
}

impl MulAssign for F4 {
    #[inline]
    fn mul_assign(&mut self, rhs: F4) {
        *self = *self * rhs;
    }
}

impl fmt::Display for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

pub fn f4_mul(a: F4, b: F4) -> F4 {
    a * b
}

pub fn f4_conj(a: F4) -> F4 {
    a.conj()
}

/// The two fields codes may live over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    GF2,
    GF4,
}

impl Field {
    pub fn order(self) -> usize {
        match self {
            Field::GF2 => 2,
            Field::GF4 => 4,
        }
    }

    pub fn elements(self) -> &'static [F4] {
        match self {
            Field::GF2 => &F4::ALL[..2],
            Field::GF4 => &F4::ALL,
        }
    }

    pub fn nonzero(self) -> &'static [F4] {
        match self {
            Field::GF2 => &F4::NONZERO[..1],
            Field::GF4 => &F4::NONZERO,
        }
    }

    pub fn contains(self, x: F4) -> bool {
        self == Field::GF4 || x.to_u8() < 2
    }

    pub fn from_order(q: u32) -> Result<Field> {
        match q {
            2 => Ok(Field::GF2),
            4 => Ok(Field::GF4),
            _ => Err(Error::Parse(format!("field order must be 2 or 4, got {q}"))),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::GF2 => write!(f, "GF(2)"),
            Field::GF4 => write!(f, "GF(4)"),
        }
    }
}

/// A field-tagged vector whose length is a whole number of blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FVec {
    field: Field,
    block_width: usize,
    symbols: Vec<F4>,
}

impl FVec {
    pub fn new(field: Field, block_width: usize, symbols: Vec<F4>) -> Result<FVec> {
        if block_width == 0 || !symbols.len().is_multiple_of(block_width) {
            return Err(Error::Shape(format!(
                "length {} is not a multiple of block width {}",
                symbols.len(),
                block_width
            )));
        }
        if let Some(&bad) = symbols.iter().find(|&&x| !field.contains(x)) {
            return Err(Error::NotInField {
                symbol: bad.to_u8(),
                field,
            });
        }
        Ok(FVec {
            field,
            block_width,
            symbols,
        })
    }

    pub fn zeros(field: Field, block_width: usize, len: usize) -> Result<FVec> {
        FVec::new(field, block_width, vec![F4::ZERO; len])
    }

    pub fn from_u8s(field: Field, block_width: usize, raw: &[u8]) -> Result<FVec> {
        let symbols = raw
            .iter()
            .map(|&v| F4::from_u8(v))
            .collect::<Result<Vec<_>>>()?;
        FVec::new(field, block_width, symbols)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn block_width(&self) -> usize {
        self.block_width
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn blocks(&self) -> usize {
        self.symbols.len() / self.block_width
    }

    pub fn symbols(&self) -> &[F4] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<F4> {
        self.symbols
    }

    pub fn block(&self, j: usize) -> &[F4] {
        &self.symbols[j * self.block_width..(j + 1) * self.block_width]
    }

    pub fn weight(&self) -> usize {
        weight(&self.symbols)
    }

    pub fn to_u8s(&self) -> Vec<u8> {
        self.symbols.iter().map(|x| x.to_u8()).collect()
    }

    fn check_pair(&self, other: &FVec) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: other.field,
            });
        }
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for FVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, block) in self.symbols.chunks(self.block_width).enumerate() {
            if j > 0 {
                f.write_str(" ")?;
            }
            for x in block {
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

/// Hamming weight of a symbol slice.
pub fn weight(v: &[F4]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

/// Σ aᵢ·conj(bᵢ) over equal-length slices. The second argument is the
/// conjugated one.
#[inline]
pub fn hermitian_dot(a: &[F4], b: &[F4]) -> F4 {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(F4::ZERO, |acc, (&x, &y)| acc + x * y.conj())
}

/// Inner product appropriate to `field`: Hermitian over GF(4), the usual
/// dot product over GF(2). On {0,1}-valued inputs the two coincide.
#[inline]
pub fn field_dot(field: Field, a: &[F4], b: &[F4]) -> F4 {
    match field {
        Field::GF4 => hermitian_dot(a, b),
        Field::GF2 => a.iter().zip(b).fold(F4::ZERO, |acc, (&x, &y)| acc + x * y),
    }
}

pub fn hermitian_inner(a: &FVec, b: &FVec) -> Result<F4> {
    a.check_pair(b)?;
    if a.field != Field::GF4 {
        return Err(Error::FieldMismatch {
            left: a.field,
            right: Field::GF4,
        });
    }
    Ok(hermitian_dot(&a.symbols, &b.symbols))
}

pub fn f2_inner(a: &FVec, b: &FVec) -> Result<u8> {
    a.check_pair(b)?;
    if a.field != Field::GF2 {
        return Err(Error::FieldMismatch {
            left: a.field,
            right: Field::GF2,
        });
    }
    Ok(field_dot(Field::GF2, &a.symbols, &b.symbols).to_u8())
}

/// `dst += c·src`
#[inline]
pub fn axpy(dst: &mut [F4], c: F4, src: &[F4]) {
    if c.is_zero() {
        return;
    }
    for (d, &s) in dst.iter_mut().zip(src) {
        *d += c * s;
    }
}

/// Elementwise sum of two equal-length slices.
pub fn add_vecs(a: &[F4], b: &[F4]) -> Vec<F4> {
    a.iter().zip(b).map(|(&x, &y)| x + y).collect()
}

/// Row space of a matrix held in reduced row-echelon form.
///
/// Membership tests reduce the candidate against the pivots, so building the
/// space once and querying it many times costs O(rank · len) per query.
#[derive(Debug, Clone)]
pub struct RowSpace {
    field: Field,
    len: usize,
    basis: Vec<Vec<F4>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(field: Field, len: usize, rows: &[Vec<F4>]) -> Result<RowSpace> {
        for row in rows {
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
        let (basis, pivots) = rref(rows.to_vec(), len);
        Ok(RowSpace {
            field,
            len,
            basis,
            pivots,
        })
    }

    pub fn from_fvecs(rows: &[FVec]) -> Result<RowSpace> {
        let first = rows.first().ok_or_else(|| {
            Error::Shape("row space of an empty matrix needs an explicit shape".into())
        })?;
        let raw: Vec<Vec<F4>> = rows.iter().map(|r| r.symbols.clone()).collect();
        if let Some(r) = rows.iter().find(|r| r.field != first.field) {
            return Err(Error::FieldMismatch {
                left: first.field,
                right: r.field,
            });
        }
        RowSpace::new(first.field, first.len(), &raw)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<F4>] {
        &self.basis
    }

    /// Reduces `v` against the basis; the result is zero iff `v` is in the span.
    pub fn reduce(&self, v: &[F4]) -> Vec<F4> {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = r[p];
            axpy(&mut r, c, row);
        }
        r
    }

    pub fn contains(&self, v: &[F4]) -> Result<bool> {
        if v.len() != self.len {
            return Err(Error::LengthMismatch {
                left: self.len,
                right: v.len(),
            });
        }
        if !v.iter().all(|&x| self.field.contains(x)) {
            return Ok(false);
        }
        Ok(self.reduce(v).iter().all(|x| x.is_zero()))
    }

    /// Basis of {x : Σ xᵢ·rᵢ = 0 for every row r} (plain, unconjugated).
    pub fn null_space(&self) -> Vec<Vec<F4>> {
        let pivot_set: Vec<Option<usize>> = {
            let mut by_col = vec![None; self.len];
            for (i, &p) in self.pivots.iter().enumerate() {
                by_col[p] = Some(i);
            }
            by_col
        };
        let mut out = Vec::new();
        for free in (0..self.len).filter(|&c| pivot_set[c].is_none()) {
            let mut x = vec![F4::ZERO; self.len];
            x[free] = F4::ONE;
            // Row i reads x[pivot_i] + Σ_free row_i[free]·x[free] = 0.
            for (row, &p) in self.basis.iter().zip(&self.pivots) {
                x[p] = row[free];
            }
            out.push(x);
        }
        out
    }
}

/// Reduced row-echelon form; returns the nonzero rows and their pivot columns.
fn rref(mut rows: Vec<Vec<F4>>, len: usize) -> (Vec<Vec<F4>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..len {
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = rows[r][col].inv().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x *= inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r {
                let c = row[col];
                axpy(row, c, &pivot_row);
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank(field: Field, len: usize, rows: &[Vec<F4>]) -> Result<usize> {
    Ok(RowSpace::new(field, len, rows)?.rank())
}

/// True iff `v` is a linear combination of `rows`.
pub fn membership(rows: &[FVec], v: &FVec) -> Result<bool> {
    let space = RowSpace::from_fvecs(rows)?;
    if space.field() != v.field() {
        return Err(Error::FieldMismatch {
            left: space.field(),
            right: v.field(),
        });
    }
    space.contains(v.symbols())
}

/// Basis of the orthogonal complement of `rows` under the field's inner
/// product (Hermitian for GF(4)).
pub fn dual_basis(field: Field, len: usize, rows: &[Vec<F4>]) -> Result<Vec<Vec<F4>>> {
    // ⟨x, r⟩ = Σ xᵢ·conj(rᵢ), which is linear in x with coefficients conj(r).
    let conj_rows: Vec<Vec<F4>> = match field {
        Field::GF4 => rows
            .iter()
            .map(|r| r.iter().map(|x| x.conj()).collect())
            .collect(),
        Field::GF2 => rows.to_vec(),
    };
    Ok(RowSpace::new(field, len, &conj_rows)?.null_space())
}
