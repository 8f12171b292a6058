use super::{BitMatrix, BitVector};

/// Reduced row echelon form of a matrix over the two-element field.
///
/// Pivot rows are the first `rank()` rows of `reduced`; `pivots[i]` is the
/// pivot column of row `i`.
#[derive(Clone, Debug)]
pub struct Echelon {
    reduced: BitMatrix,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn reduced(&self) -> &BitMatrix {
        &self.reduced
    }

    /// Reduce `v` modulo the row space: the result is zero iff `v` lies in it.
    pub fn reduce(&self, v: &BitVector) -> BitVector {
        assert_eq!(v.len(), self.reduced.cols(), "reduce dimension mismatch");
        let mut out = v.clone();
        for (row, &p) in self.pivots.iter().enumerate() {
            if out.get(p) {
                let words = self.reduced.row_words(row);
                for (a, b) in out.words_mut().iter_mut().zip(words) {
                    *a ^= b;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.reduce(v).is_zero()
    }
}

impl BitMatrix {
    /// Reduced row echelon form; pure, the input is untouched.
    pub fn echelonize(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols() {
            // rows above r are settled; rows >= r are zero left of c
            let Some(pivot_row) = (r..m.rows()).find(|&i| m.get(i, c)) else {
                continue;
            };
            m.swap_rows(r, pivot_row);
            let from_word = c / 64;
            for i in 0..m.rows() {
                if i != r && m.get(i, c) {
                    m.xor_rows(i, r, from_word);
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.rows() {
                break;
            }
        }
        Echelon { reduced: m, pivots }
    }

    /// Dimension of the row space over the two-element field.
    pub fn rank(&self) -> usize {
        self.echelonize().rank()
    }

    /// Basis of `{v : M v = 0}`, one vector per free column, ascending.
    pub fn kernel_basis(&self) -> Vec<BitVector> {
        let ech = self.echelonize();
        let mut is_pivot = vec![false; self.cols()];
        for &p in ech.pivots() {
            is_pivot[p] = true;
        }
        let mut basis = Vec::with_capacity(self.cols() - ech.rank());
        for (f, &pivot) in is_pivot.iter().enumerate() {
            if pivot {
                continue;
            }
            let mut v = BitVector::zeros(self.cols());
            v.set(f, true);
            for (row, &p) in ech.pivots().iter().enumerate() {
                if ech.reduced().get(row, f) {
                    v.set(p, true);
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Basis of the left kernel `{u : u M = 0}`.
    pub fn cokernel_basis(&self) -> Vec<BitVector> {
        self.transpose().kernel_basis()
    }

    /// Any `e` with `M e = s`, or `None` when `s` has no preimage.
    ///
    /// A missing preimage signals a syndrome outside the image of the map,
    /// i.e. a nontrivial coset of the column space.
    pub fn solve(&self, s: &BitVector) -> Option<BitVector> {
        assert_eq!(s.len(), self.rows(), "solve dimension mismatch");
        let mut m = self.clone();
        let mut rhs = s.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols() {
            let Some(pivot_row) = (r..m.rows()).find(|&i| m.get(i, c)) else {
                continue;
            };
            m.swap_rows(r, pivot_row);
            if pivot_row != r {
                let (a, b) = (rhs.get(r), rhs.get(pivot_row));
                rhs.set(r, b);
                rhs.set(pivot_row, a);
            }
            let from_word = c / 64;
            for i in 0..m.rows() {
                if i != r && m.get(i, c) {
                    m.xor_rows(i, r, from_word);
                    if rhs.get(r) {
                        rhs.flip(i);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.rows() {
                break;
            }
        }
        // any remaining nonzero rhs entry sits on an all-zero row
        for i in r..m.rows() {
            if rhs.get(i) {
                return None;
            }
        }
        let mut e = BitVector::zeros(self.cols());
        for (row, &p) in pivots.iter().enumerate() {
            if rhs.get(row) {
                e.set(p, true);
            }
        }
        Some(e)
    }
}
