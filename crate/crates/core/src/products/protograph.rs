use super::poly::PolynomialF2;
use crate::error::CssError;
use crate::gf2::BitMatrix;

/// Matrix whose entries are polynomials sharing one (dims, modulus): a
/// parity check matrix over the ring of circulants. Expanding every entry
/// to its circulant yields the binary parity check matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Protograph {
    rows: usize,
    cols: usize,
    dims: usize,
    modulus: usize,
    entries: Vec<PolynomialF2>,
}

impl Protograph {
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<PolynomialF2>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        let first = entries.first().expect("protograph cannot be empty");
        let (dims, modulus) = (first.dims(), first.modulus());
        assert!(
            entries
                .iter()
                .all(|p| p.dims() == dims && p.modulus() == modulus),
            "entries must share dims and modulus"
        );
        Self {
            rows,
            cols,
            dims,
            modulus,
            entries,
        }
    }

    /// Single-entry protograph, the common case for named models.
    pub fn single(p: PolynomialF2) -> Self {
        Self::from_entries(1, 1, vec![p])
    }

    pub fn identity(n: usize, dims: usize, modulus: usize) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                entries.push(if r == c {
                    PolynomialF2::one(dims, modulus)
                } else {
                    PolynomialF2::zero(dims, modulus)
                });
            }
        }
        Self::from_entries(n, n, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dims(&self) -> usize {
        self.dims
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn entry(&self, r: usize, c: usize) -> &PolynomialF2 {
        &self.entries[r * self.cols + c]
    }

    pub fn same_ring(&self, other: &Self) -> Result<(), CssError> {
        if (self.dims, self.modulus) != (other.dims, other.modulus) {
            return Err(CssError::ProtographMismatch(
                self.dims,
                self.modulus,
                other.dims,
                other.modulus,
            ));
        }
        Ok(())
    }

    /// Conjugate transpose: the ring-level analogue of the binary
    /// transpose, since conjugation expands to the circulant transpose.
    pub fn dagger(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.entry(r, c).conj());
            }
        }
        Self::from_entries(self.cols, self.rows, entries)
    }

    /// Kronecker product with ring multiplication of entries.
    pub fn kronecker(&self, other: &Self) -> Self {
        self.same_ring(other).expect("kronecker ring mismatch");
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut entries = Vec::with_capacity(rows * cols);
        for r1 in 0..self.rows {
            for r2 in 0..other.rows {
                for c1 in 0..self.cols {
                    for c2 in 0..other.cols {
                        entries.push(self.entry(r1, c1).mul(other.entry(r2, c2)));
                    }
                }
            }
        }
        Self::from_entries(rows, cols, entries)
    }

    /// Side-by-side concatenation over the same ring.
    pub fn hconcat(&self, other: &Self) -> Self {
        self.same_ring(other).expect("hconcat ring mismatch");
        assert_eq!(self.rows, other.rows, "hconcat row mismatch");
        let mut entries = Vec::with_capacity((self.cols + other.cols) * self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                entries.push(self.entry(r, c).clone());
            }
            for c in 0..other.cols {
                entries.push(other.entry(r, c).clone());
            }
        }
        Self::from_entries(self.rows, self.cols + other.cols, entries)
    }

    /// Expand every entry to its circulant, giving the binary matrix of
    /// size (rows * L^D) x (cols * L^D).
    pub fn expand(&self) -> BitMatrix {
        let block = self.modulus.pow(self.dims as u32);
        let mut out = BitMatrix::zeros(self.rows * block, self.cols * block);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let p = self.entry(r, c);
                if p.is_zero() {
                    continue;
                }
                let circ = p.to_circulant();
                for br in 0..block {
                    for bc in circ.row(br).iter_ones() {
                        out.set(r * block + br, c * block + bc, true);
                    }
                }
            }
        }
        out
    }
}
