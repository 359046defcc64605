//! Exact dense linear algebra over the rationals and prime fields.
//!
//! Every homological computation in this crate bottoms out in the routines here:
//! reduced row echelon form, kernels and particular solutions. Pivoting always
//! takes the first nonzero entry in column order so that the bases produced are
//! reproducible.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which field the scalars live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    /// Parses `q` or `fp:<p>`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        let p = s
            .strip_prefix("fp:")
            .ok_or_else(|| Error::Parse(format!("unknown field `{s}`, expected `q` or `fp:<p>`")))?;
        let p: u64 = p
            .parse()
            .map_err(|_| Error::Parse(format!("bad characteristic `{p}`")))?;
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A field with runtime context (the characteristic, for prime fields).
pub trait Field: Clone + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
}

/// Arbitrary-precision rationals.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
}

/// The prime field F_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    fn reduce(&self, v: u128) -> u64 {
        (v % self.p as u128) as u64
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        self.reduce(*a as u128 + *b as u128)
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        self.reduce(*a as u128 + (self.p - *b) as u128)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.reduce(*a as u128 * *b as u128)
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        let mut base = *a as u128;
        let mut exp = self.p - 2;
        let mut acc: u128 = 1;
        let m = self.p as u128;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            exp >>= 1;
        }
        Some(acc as u64)
    }
}

/// Dense row-major matrix over a field.
#[derive(Clone)]
pub struct Mat<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> PartialEq for Mat<F> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl<F: Field> fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}{}", self.rows, self.cols, self)
    }
}

impl<F: Field> fmt::Display for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

/// Result of a row reduction.
#[derive(Clone, Debug, PartialEq)]
pub struct Rref<F: Field> {
    pub rank: usize,
    pub reduced: Mat<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Mat<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Mat {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(field: &F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    /// Builds a matrix from integer rows; all rows must have `cols` entries.
    pub fn from_i64(field: &F, rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count does not match shape");
        Self::from_fn(field, rows, cols, |i, j| field.from_i64(entries[i * cols + j]))
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| self.field.is_zero(a))
    }

    pub fn mul(&self, other: &Mat<F>) -> Mat<F> {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let f = &self.field;
        let mut out = Mat::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = f.add(&out.data[idx], &f.mul(a, b));
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Mat<F> {
        Mat::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Submatrix on the given row and column index lists (in the given order).
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Mat<F> {
        Mat::from_fn(&self.field, rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    pub fn column(&self, j: usize) -> Mat<F> {
        Mat::from_fn(&self.field, self.rows, 1, |i, _| self.get(i, j).clone())
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, other: &Mat<F>) -> Mat<F> {
        assert_eq!(self.rows, other.rows, "row mismatch in hcat");
        Mat::from_fn(&self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    /// Vertical concatenation.
    pub fn vcat(&self, other: &Mat<F>) -> Mat<F> {
        assert_eq!(self.cols, other.cols, "column mismatch in vcat");
        Mat::from_fn(&self.field, self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j).clone()
            } else {
                other.get(i - self.rows, j).clone()
            }
        })
    }

    /// Block diagonal matrix `diag(self, other)`.
    pub fn block_diag(&self, other: &Mat<F>) -> Mat<F> {
        let f = &self.field;
        Mat::from_fn(f, self.rows + other.rows, self.cols + other.cols, |i, j| {
            match (i < self.rows, j < self.cols) {
                (true, true) => self.get(i, j).clone(),
                (false, false) => other.get(i - self.rows, j - self.cols).clone(),
                _ => f.zero(),
            }
        })
    }

    /// Columns of a matrix with `rows` rows, given as vectors.
    pub fn from_columns(field: &F, rows: usize, columns: &[Vec<F::Elem>]) -> Mat<F> {
        Mat::from_fn(field, rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn column_vec(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn scale(&self, c: &F::Elem) -> Mat<F> {
        Mat::from_fn(&self.field, self.rows, self.cols, |i, j| {
            self.field.mul(c, self.get(i, j))
        })
    }

    pub fn sub(&self, other: &Mat<F>) -> Mat<F> {
        assert!(self.rows == other.rows && self.cols == other.cols);
        Mat::from_fn(&self.field, self.rows, self.cols, |i, j| {
            self.field.sub(self.get(i, j), other.get(i, j))
        })
    }

    /// Reduced row echelon form with first-nonzero pivoting.
    pub fn rref(&self) -> Rref<F> {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for c in 0..m.cols {
            if prow == m.rows {
                break;
            }
            let Some(r) = (prow..m.rows).find(|&r| !f.is_zero(m.get(r, c))) else {
                continue;
            };
            if r != prow {
                for j in 0..m.cols {
                    m.data.swap(r * m.cols + j, prow * m.cols + j);
                }
            }
            let inv = f.inv(m.get(prow, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let v = f.mul(&inv, m.get(prow, j));
                m.set(prow, j, v);
            }
            for r2 in 0..m.rows {
                if r2 == prow {
                    continue;
                }
                let factor = m.get(r2, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(r2, j), &f.mul(&factor, m.get(prow, j)));
                    m.set(r2, j, v);
                }
            }
            pivots.push(c);
            prow += 1;
        }
        Rref {
            rank: pivots.len(),
            reduced: m,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the null space, one vector per column.
    pub fn kernel_basis(&self) -> Mat<F> {
        let f = &self.field;
        let Rref { reduced, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Mat::zeros(f, self.cols, free.len());
        for (col, &fc) in free.iter().enumerate() {
            k.set(fc, col, f.one());
            for (row, &pc) in pivots.iter().enumerate() {
                k.set(pc, col, f.neg(reduced.get(row, fc)));
            }
        }
        k
    }

    /// Solves `self * x = b`, with free variables set to zero.
    pub fn solve(&self, b: &Mat<F>) -> Option<Mat<F>> {
        assert_eq!(self.rows, b.rows, "row mismatch in solve");
        let f = &self.field;
        let aug = self.hcat(b);
        let Rref { reduced, pivots, .. } = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Mat::zeros(f, self.cols, b.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, reduced.get(row, self.cols + j).clone());
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Mat<F>> {
        if self.rows != self.cols {
            return None;
        }
        let x = self.solve(&Mat::identity(&self.field, self.rows))?;
        if self.rank() == self.rows {
            Some(x)
        } else {
            None
        }
    }
}

/// Indices `k` such that the standard vectors `e_k` complete the column span
/// of `span` to a basis of the ambient space.
pub fn complement_coordinates<F: Field>(span: &Mat<F>) -> Vec<usize> {
    let pivots = span.transpose().rref().pivots;
    (0..span.rows()).filter(|k| !pivots.contains(k)).collect()
}

/// Column basis of the span of `m`, picked as the pivot columns of `m` itself.
pub fn column_basis<F: Field>(m: &Mat<F>) -> Mat<F> {
    let pivots = m.rref().pivots;
    let rows: Vec<usize> = (0..m.rows()).collect();
    m.select(&rows, &pivots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: usize, cols: usize, e: &[i64]) -> Mat<Rationals> {
        Mat::from_i64(&Rationals, rows, cols, e)
    }

    #[test]
    fn rref_identity() {
        let r = Mat::identity(&Rationals, 2).rref();
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 1]);
    }

    #[test]
    fn rref_dependent_rows() {
        let r = q(2, 2, &[1, 2, 2, 4]).rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(r.reduced, q(2, 2, &[1, 2, 0, 0]));
    }

    #[test]
    fn rref_over_f2() {
        let f2 = PrimeField::new(2).unwrap();
        let m = Mat::from_i64(&f2, 2, 2, &[1, 1, 1, 1]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn rref_of_empty_matrix() {
        let r = Mat::zeros(&Rationals, 0, 3).rref();
        assert_eq!(r.rank, 0);
        assert_eq!(Mat::zeros(&Rationals, 0, 3).kernel_basis().cols(), 3);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Mat::identity(&Rationals, 3).kernel_basis().cols(), 0);
        let k = Mat::zeros(&Rationals, 2, 3).kernel_basis();
        assert_eq!(k.cols(), 3);
        assert_eq!(k.rank(), 3);
        let k = q(2, 3, &[1, 1, 0, 0, 0, 1]).kernel_basis();
        assert_eq!(k, q(3, 1, &[-1, 1, 0]));
    }

    #[test]
    fn solve_examples() {
        let b = q(2, 2, &[3, -1, 7, 5]);
        assert_eq!(Mat::identity(&Rationals, 2).solve(&b), Some(b.clone()));
        assert_eq!(q(1, 2, &[1, 1]).solve(&q(1, 1, &[2])), Some(q(2, 1, &[2, 0])));
        assert_eq!(q(2, 1, &[1, 1]).solve(&q(2, 1, &[1, 2])), None);
    }

    #[test]
    fn rational_inverse_is_exact() {
        let f = Rationals;
        let a = BigRational::new(BigInt::from(7), BigInt::from(13));
        let b = f.inv(&a).unwrap();
        assert_eq!(f.mul(&a, &b), f.one());
    }

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7u64 {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
        assert_eq!(f.from_i64(-1), 6);
        assert!(PrimeField::new(4).is_err());
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!(FieldSpec::parse("q").unwrap(), FieldSpec::Rationals);
        assert_eq!(FieldSpec::parse("fp:3").unwrap(), FieldSpec::Prime(3));
        assert!(matches!(FieldSpec::parse("fp:9"), Err(Error::NotPrime(9))));
        assert!(FieldSpec::parse("r").is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let m = q(2, 2, &[2, 1, 1, 1]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(&Rationals, 2));
        assert!(q(2, 2, &[1, 2, 2, 4]).inverse().is_none());
    }

    #[test]
    fn complement_of_a_line() {
        // span of (1,1,0): complement picks e_1, e_2
        let span = q(3, 1, &[1, 1, 0]);
        assert_eq!(complement_coordinates(&span), vec![1, 2]);
    }
}
