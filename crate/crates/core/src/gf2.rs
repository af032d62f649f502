//! Linear algebra over the two-element field on packed `u64` words.
//!
//! [`BitChain`] doubles as a row of a [`Gf2Matrix`] and as a chain of faces
//! (bit `k` set means face `k` is selected).

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Default ceiling on the number of chains [`enumerate_kernel`] may yield.
pub const DEFAULT_ENUM_CAP: u64 = 1 << 20;

const WORD: usize = 64;

fn words_for(width: usize) -> usize {
    width.div_ceil(WORD)
}

/// A packed bit vector of fixed width. Bits at positions `>= width` are
/// always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitChain {
    width: usize,
    words: Vec<u64>,
}

impl BitChain {
    pub fn zeros(width: usize) -> Self {
        BitChain {
            width,
            words: vec![0; words_for(width)],
        }
    }

    /// Builds a chain with the given (0-based) positions set. Repeated
    /// positions toggle, so `[3, 3]` yields the zero chain.
    pub fn from_indices(width: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut c = Self::zeros(width);
        for i in indices {
            c.toggle(i);
        }
        c
    }

    /// Low `width` bits of `mask`; `width` must be at most 64.
    pub fn from_u64(width: usize, mask: u64) -> Self {
        assert!(width <= WORD);
        let mut c = Self::zeros(width);
        if width > 0 {
            let keep = if width == WORD {
                u64::MAX
            } else {
                (1 << width) - 1
            };
            c.words[0] = mask & keep;
        }
        c
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.width, "bit {i} out of range {}", self.width);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.width, "bit {i} out of range {}", self.width);
        let m = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= m;
        } else {
            self.words[i / WORD] &= !m;
        }
    }

    pub fn toggle(&mut self, i: usize) {
        assert!(i < self.width, "bit {i} out of range {}", self.width);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn xor_assign(&mut self, other: &BitChain) {
        assert_eq!(self.width, other.width, "width mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &BitChain) -> BitChain {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn and_parity(&self, other: &BitChain) -> bool {
        assert_eq!(self.width, other.width, "width mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .fold(0, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Positions of set bits in increasing order.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + b)
            })
        })
    }

    /// Lowest set position, if any.
    pub fn first_one(&self) -> Option<usize> {
        self.ones().next()
    }

    /// Order of the rendered bitstrings (position 0 leftmost, `'0' < '1'`).
    pub fn cmp_bitstring(&self, other: &BitChain) -> Ordering {
        for (a, b) in self.words.iter().zip(&other.words) {
            if a != b {
                let low = (a ^ b).trailing_zeros();
                return if a >> low & 1 == 1 {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
            }
        }
        self.width.cmp(&other.width)
    }

    /// `'0'`/`'1'` rendering, position 0 leftmost.
    pub fn to_bitstring(&self) -> String {
        (0..self.width)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }

    pub fn parse_bitstring(text: &str) -> Result<BitChain> {
        let text = text.trim();
        let mut c = BitChain::zeros(text.chars().count());
        for (i, ch) in text.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => c.set(i, true),
                other => return Err(Error::BitstringChar(other)),
            }
        }
        Ok(c)
    }
}

impl fmt::Debug for BitChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitChain({})", self.to_bitstring())
    }
}

/// Dense matrix over GF(2) stored as row bit vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BitChain>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Gf2Matrix {
            rows,
            cols,
            data: vec![BitChain::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Matrix whose `j`-th column is `columns[j]`; every column must have
    /// width `rows`.
    pub fn from_columns(rows: usize, columns: &[BitChain]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.width(), rows, "column {j} has wrong height");
            for i in col.ones() {
                m.set(i, j, true);
            }
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<BitChain>) -> Self {
        for r in &rows {
            assert_eq!(r.width(), cols, "row has wrong width");
        }
        Gf2Matrix {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BitChain {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.data[i].set(j, value)
    }

    pub fn column(&self, j: usize) -> BitChain {
        BitChain::from_indices(self.rows, (0..self.rows).filter(|&i| self.get(i, j)))
    }

    /// `M · x`.
    pub fn mul_vec(&self, x: &BitChain) -> BitChain {
        assert_eq!(x.width(), self.cols, "vector width mismatch");
        let mut out = BitChain::zeros(self.rows);
        for (i, r) in self.data.iter().enumerate() {
            if r.and_parity(x) {
                out.set(i, true);
            }
        }
        out
    }

    /// Reduced row echelon form on a private copy. Pivot columns are chosen
    /// left to right; returns the nonzero rows and their pivot columns.
    pub fn reduced_echelon(&self) -> (Vec<BitChain>, Vec<usize>) {
        let mut rows = self.data.clone();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.cols {
            let Some(p) = (next..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(next, p);
            let pivot_row = rows[next].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != next && row.get(col) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(col);
            next += 1;
            if next == rows.len() {
                break;
            }
        }
        rows.truncate(next);
        (rows, pivots)
    }
}

pub fn rank(m: &Gf2Matrix) -> usize {
    m.reduced_echelon().1.len()
}

/// Basis of `{x : Mx = 0}`: one vector per non-pivot column `f` of the
/// reduced echelon form, in increasing `f`, with `x_f = 1`, the other free
/// coordinates 0, and pivot coordinates read off the reduced rows.
pub fn kernel_basis(m: &Gf2Matrix) -> Vec<BitChain> {
    let (rref, pivots) = m.reduced_echelon();
    let mut is_pivot = vec![false; m.cols()];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.cols())
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut x = BitChain::zeros(m.cols());
            x.set(f, true);
            for (row, &p) in rref.iter().zip(&pivots) {
                if row.get(f) {
                    x.set(p, true);
                }
            }
            x
        })
        .collect()
}

/// Streams every nonzero combination of `basis`.
///
/// Order is the binary reflected Gray code: step `t = 1, 2, …, 2^d − 1`
/// toggles basis vector `trailing_zeros(t)` into the running sum. With the
/// basis from [`kernel_basis`] this is a deterministic function of the
/// reduced echelon form.
pub fn enumerate_kernel(basis: &[BitChain], cap: u64) -> Result<KernelIter<'_>> {
    let d = basis.len();
    let count: u128 = if d >= 128 {
        u128::MAX
    } else {
        (1u128 << d) - 1
    };
    if count > cap as u128 {
        return Err(Error::EnumerationCap { count, cap });
    }
    let width = basis.first().map_or(0, BitChain::width);
    Ok(KernelIter {
        basis,
        current: BitChain::zeros(width),
        step: 0,
        total: count as u64,
    })
}

pub struct KernelIter<'a> {
    basis: &'a [BitChain],
    current: BitChain,
    step: u64,
    total: u64,
}

impl Iterator for KernelIter<'_> {
    type Item = BitChain;

    fn next(&mut self) -> Option<BitChain> {
        if self.step >= self.total {
            return None;
        }
        self.step += 1;
        let flip = self.step.trailing_zeros() as usize;
        self.current.xor_assign(&self.basis[flip]);
        Some(self.current.clone())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.step) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for KernelIter<'_> {}
