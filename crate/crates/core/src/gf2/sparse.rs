use std::fmt::Write as _;

use super::BitMatrix;
use crate::error::FormatError;

/// Coordinate-list matrix over the two-element field.
///
/// Used for construction from graphs and for the text interchange format;
/// conversion to the dense representation is explicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseBitMatrix {
    rows: usize,
    cols: usize,
    /// Ascending, duplicate-free column indices per row.
    row_support: Vec<Vec<usize>>,
}

impl SparseBitMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            row_support: vec![Vec::new(); rows],
        }
    }

    pub fn from_row_support(rows: usize, cols: usize, row_support: Vec<Vec<usize>>) -> Self {
        assert_eq!(row_support.len(), rows, "row count mismatch");
        let mut m = Self { rows, cols, row_support };
        for support in &mut m.row_support {
            support.sort_unstable();
            support.dedup();
            if let Some(&last) = support.last() {
                assert!(last < cols, "column index {last} out of range");
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_support(&self, r: usize) -> &[usize] {
        &self.row_support[r]
    }

    pub fn insert(&mut self, r: usize, c: usize) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        if let Err(pos) = self.row_support[r].binary_search(&c) {
            self.row_support[r].insert(pos, c);
        }
    }

    pub fn nnz(&self) -> usize {
        self.row_support.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.rows, self.cols);
        for (r, support) in self.row_support.iter().enumerate() {
            for &c in support {
                m.set(r, c, true);
            }
        }
        m
    }

    pub fn from_dense(m: &BitMatrix) -> Self {
        let row_support = (0..m.rows()).map(|r| m.row(r).support()).collect();
        Self {
            rows: m.rows(),
            cols: m.cols(),
            row_support,
        }
    }

    /// Text form: a `rows cols` header line, then one line per row listing
    /// the ascending column indices of its ones; a blank line is a zero row.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.rows, self.cols);
        for support in &self.row_support {
            let line: Vec<String> = support.iter().map(|c| c.to_string()).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, FormatError> {
        let mut lines = text.lines();
        let header = lines.next().ok_or(FormatError::MissingHeader)?;
        let mut parts = header.split_whitespace();
        let rows: usize = parts
            .next()
            .ok_or(FormatError::MissingHeader)?
            .parse()
            .map_err(|_| FormatError::BadHeader(header.to_string()))?;
        let cols: usize = parts
            .next()
            .ok_or(FormatError::BadHeader(header.to_string()))?
            .parse()
            .map_err(|_| FormatError::BadHeader(header.to_string()))?;
        if parts.next().is_some() {
            return Err(FormatError::BadHeader(header.to_string()));
        }
        let mut row_support = Vec::with_capacity(rows);
        for r in 0..rows {
            let line = lines.next().ok_or(FormatError::TruncatedBody {
                expected_rows: rows,
                found_rows: r,
            })?;
            let mut support = Vec::new();
            for token in line.split_whitespace() {
                let c: usize = token
                    .parse()
                    .map_err(|_| FormatError::BadEntry { row: r, token: token.to_string() })?;
                if c >= cols {
                    return Err(FormatError::ColumnOutOfRange { row: r, col: c, cols });
                }
                support.push(c);
            }
            let sorted = support.windows(2).all(|w| w[0] < w[1]);
            if !sorted {
                return Err(FormatError::UnsortedRow { row: r });
            }
            row_support.push(support);
        }
        Ok(Self { rows, cols, row_support })
    }
}

impl BitMatrix {
    pub fn to_sparse(&self) -> SparseBitMatrix {
        SparseBitMatrix::from_dense(self)
    }

    pub fn from_sparse(s: &SparseBitMatrix) -> Self {
        s.to_dense()
    }
}
