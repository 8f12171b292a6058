use std::fmt;

use super::bitvec::{words_for, BitVector};

/// Dense bit-packed matrix over the two-element field.
///
/// Rows are stored contiguously as 64-bit words, so row reduction and
/// matrix-vector products run word-parallel. Sparse construction and the
/// text interchange format live in [`super::SparseBitMatrix`]; conversion
/// between the two is explicit.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = words_for(cols);
        Self {
            rows,
            cols,
            words_per_row,
            data: vec![0; rows * words_per_row],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: &[(usize, usize)]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for &(r, c) in entries {
            m.set(r, c, true);
        }
        m
    }

    pub fn from_rows(rows: &[BitVector]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows in from_rows");
            m.row_words_mut(i).copy_from_slice(row.words());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        (self.data[r * self.words_per_row + c / 64] >> (c % 64)) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        let w = r * self.words_per_row + c / 64;
        if value {
            self.data[w] |= 1u64 << (c % 64);
        } else {
            self.data[w] &= !(1u64 << (c % 64));
        }
    }

    pub(crate) fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    pub(crate) fn row_words_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    pub fn row(&self, r: usize) -> BitVector {
        BitVector::from_words(self.cols, self.row_words(r).to_vec())
    }

    pub fn row_weight(&self, r: usize) -> usize {
        self.row_words(r).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// XOR row `src` into row `dst`, starting at word `from_word`.
    pub(crate) fn xor_rows(&mut self, dst: usize, src: usize, from_word: usize) {
        debug_assert_ne!(dst, src);
        let w = self.words_per_row;
        let (a, b) = if dst < src {
            let (lo, hi) = self.data.split_at_mut(src * w);
            (&mut lo[dst * w..dst * w + w], &hi[..w])
        } else {
            let (lo, hi) = self.data.split_at_mut(dst * w);
            (&mut hi[..w], &lo[src * w..src * w + w])
        };
        for i in from_word..w {
            a[i] ^= b[i];
        }
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let w = self.words_per_row;
        for i in 0..w {
            self.data.swap(a * w + i, b * w + i);
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for (wi, &word) in self.row_words(r).iter().enumerate() {
                let mut w = word;
                while w != 0 {
                    let c = wi * 64 + w.trailing_zeros() as usize;
                    w &= w - 1;
                    t.set(c, r, true);
                }
            }
        }
        t
    }

    /// Matrix product over the two-element field (addition = XOR).
    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "matmul dimension mismatch: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Self::zeros(self.rows, other.cols);
        let w_out = out.words_per_row;
        for r in 0..self.rows {
            for (wi, &word) in self.row_words(r).iter().enumerate() {
                let mut w = word;
                while w != 0 {
                    let k = wi * 64 + w.trailing_zeros() as usize;
                    w &= w - 1;
                    let src = k * w_out..(k + 1) * w_out;
                    let dst = r * w_out..(r + 1) * w_out;
                    let (a, b) = (src.start, dst.start);
                    for i in 0..w_out {
                        out.data[b + i] ^= other.data[a + i];
                    }
                }
            }
        }
        out
    }

    pub fn mul_vector(&self, v: &BitVector) -> BitVector {
        assert_eq!(self.cols, v.len(), "mul_vector dimension mismatch");
        let mut out = BitVector::zeros(self.rows);
        for r in 0..self.rows {
            let dot: u64 = self
                .row_words(r)
                .iter()
                .zip(v.words())
                .map(|(a, b)| (a & b).count_ones() as u64)
                .sum();
            if dot & 1 == 1 {
                out.set(r, true);
            }
        }
        out
    }

    /// Kronecker (tensor) product, row-major index convention:
    /// entry ((r1, r2), (c1, c2)) maps to (r1 * b.rows + r2, c1 * b.cols + c2).
    pub fn kronecker(&self, b: &Self) -> Self {
        let mut out = Self::zeros(self.rows * b.rows, self.cols * b.cols);
        for r1 in 0..self.rows {
            for c1 in self.row(r1).iter_ones() {
                for r2 in 0..b.rows {
                    for c2 in b.row(r2).iter_ones() {
                        out.set(r1 * b.rows + r2, c1 * b.cols + c2, true);
                    }
                }
            }
        }
        out
    }

    /// Horizontal concatenation `[A | B | ...]`.
    pub fn hconcat(blocks: &[&BitMatrix]) -> Self {
        assert!(!blocks.is_empty(), "hconcat of no blocks");
        let rows = blocks[0].rows;
        assert!(
            blocks.iter().all(|b| b.rows == rows),
            "hconcat row count mismatch"
        );
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let mut offset = 0;
        for b in blocks {
            for r in 0..rows {
                for c in b.row(r).iter_ones() {
                    out.set(r, offset + c, true);
                }
            }
            offset += b.cols;
        }
        out
    }

    /// Vertical concatenation.
    pub fn vconcat(blocks: &[&BitMatrix]) -> Self {
        assert!(!blocks.is_empty(), "vconcat of no blocks");
        let cols = blocks[0].cols;
        assert!(
            blocks.iter().all(|b| b.cols == cols),
            "vconcat column count mismatch"
        );
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut out = Self::zeros(rows, cols);
        let mut offset = 0;
        for b in blocks {
            for r in 0..b.rows {
                out.row_words_mut(offset + r).copy_from_slice(b.row_words(r));
            }
            offset += b.rows;
        }
        out
    }

    /// Block matrix from a grid of equal-height-per-row, equal-width-per-column
    /// blocks. `None` entries stand for zero blocks.
    pub fn block(grid: &[Vec<Option<&BitMatrix>>]) -> Self {
        assert!(!grid.is_empty() && !grid[0].is_empty(), "empty block grid");
        let ncols = grid[0].len();
        assert!(grid.iter().all(|r| r.len() == ncols), "ragged block grid");
        let mut row_heights = vec![None; grid.len()];
        let mut col_widths = vec![None; ncols];
        for (i, row) in grid.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                if let Some(m) = cell {
                    match row_heights[i] {
                        None => row_heights[i] = Some(m.rows),
                        Some(h) => assert_eq!(h, m.rows, "block row height mismatch at ({i},{j})"),
                    }
                    match col_widths[j] {
                        None => col_widths[j] = Some(m.cols),
                        Some(w) => assert_eq!(w, m.cols, "block col width mismatch at ({i},{j})"),
                    }
                }
            }
        }
        let heights: Vec<usize> = row_heights
            .iter()
            .map(|h| h.expect("block grid row with no matrix"))
            .collect();
        let widths: Vec<usize> = col_widths
            .iter()
            .map(|w| w.expect("block grid column with no matrix"))
            .collect();
        let mut out = Self::zeros(heights.iter().sum(), widths.iter().sum());
        let mut roff = 0;
        for (i, row) in grid.iter().enumerate() {
            let mut coff = 0;
            for (j, cell) in row.iter().enumerate() {
                if let Some(m) = cell {
                    for r in 0..m.rows {
                        for c in m.row(r).iter_ones() {
                            out.set(roff + r, coff + c, true);
                        }
                    }
                }
                coff += widths[j];
            }
            roff += heights[i];
        }
        out
    }

    /// Keep only the rows listed (in the given order).
    pub fn select_rows(&self, keep: &[usize]) -> Self {
        let mut out = Self::zeros(keep.len(), self.cols);
        for (i, &r) in keep.iter().enumerate() {
            assert!(r < self.rows, "row {r} out of range");
            out.row_words_mut(i).copy_from_slice(self.row_words(r));
        }
        out
    }

    pub fn random_with_density<R: rand::Rng>(
        rows: usize,
        cols: usize,
        density: f64,
        rng: &mut R,
    ) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if rng.gen_bool(density) {
                    m.set(r, c, true);
                }
            }
        }
        m
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix({}x{})", self.rows, self.cols)?;
        for r in 0..self.rows.min(32) {
            let line: String = (0..self.cols.min(80))
                .map(|c| if self.get(r, c) { '1' } else { '.' })
                .collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronecker_of_identities() {
        let i2 = BitMatrix::identity(2);
        let i3 = BitMatrix::identity(3);
        assert_eq!(i2.kronecker(&i3), BitMatrix::identity(6));
    }

    #[test]
    fn hconcat_doubles_identity() {
        let i2 = BitMatrix::identity(2);
        let m = BitMatrix::hconcat(&[&i2, &i2]);
        assert_eq!(m.rows(), 2);
        assert_eq!(m.cols(), 4);
        for r in 0..2 {
            assert_eq!(m.row_weight(r), 2);
        }
    }

    #[test]
    fn matmul_matches_naive_triple_loop() {
        // cyclic repetition code with three bits: H * H^T entry-wise
        let h = BitMatrix::from_entries(3, 3, &[(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 0)]);
        let prod = h.matmul(&h.transpose());
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = false;
                for k in 0..3 {
                    acc ^= h.get(i, k) & h.get(j, k);
                }
                assert_eq!(prod.get(i, j), acc, "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn block_assembles_with_zero_cells() {
        let i2 = BitMatrix::identity(2);
        let m = BitMatrix::block(&[
            vec![Some(&i2), None],
            vec![None, Some(&i2)],
        ]);
        assert_eq!(m, BitMatrix::identity(4));
    }

    #[test]
    fn transpose_round_trip() {
        let m = BitMatrix::from_entries(3, 70, &[(0, 0), (1, 65), (2, 69), (0, 64)]);
        assert_eq!(m.transpose().transpose(), m);
    }

    #[test]
    fn mul_vector_matches_rows() {
        let m = BitMatrix::from_entries(2, 3, &[(0, 0), (0, 1), (1, 2)]);
        let v = BitVector::from_support(3, &[1, 2]);
        let s = m.mul_vector(&v);
        assert_eq!(s.support(), vec![0, 1]);
    }
}
