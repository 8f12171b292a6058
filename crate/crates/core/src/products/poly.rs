use std::collections::BTreeSet;
use std::fmt;

use crate::gf2::BitMatrix;

/// Multivariate polynomial over the two-element field with all exponents
/// reduced modulo a single length `L` per axis: an element of the group
/// algebra of (Z_L)^D.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolynomialF2 {
    dims: usize,
    modulus: usize,
    monomials: BTreeSet<Vec<u16>>,
}

impl PolynomialF2 {
    pub fn zero(dims: usize, modulus: usize) -> Self {
        assert!(modulus >= 1 && modulus <= u16::MAX as usize);
        Self {
            dims,
            modulus,
            monomials: BTreeSet::new(),
        }
    }

    pub fn one(dims: usize, modulus: usize) -> Self {
        let mut p = Self::zero(dims, modulus);
        p.toggle(vec![0; dims]);
        p
    }

    /// The generator of one axis: x, y, z, ... for axis 0, 1, 2, ...
    pub fn variable(dims: usize, modulus: usize, axis: usize) -> Self {
        assert!(axis < dims, "axis {axis} out of range for {dims} dims");
        let mut exps = vec![0u16; dims];
        if modulus > 1 {
            exps[axis] = 1;
        }
        let mut p = Self::zero(dims, modulus);
        p.toggle(exps);
        p
    }

    pub fn from_exponents<I, E>(dims: usize, modulus: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[u16]>,
    {
        let mut p = Self::zero(dims, modulus);
        for term in terms {
            let e = term.as_ref();
            assert_eq!(e.len(), dims, "exponent tuple length mismatch");
            let reduced: Vec<u16> = e.iter().map(|&v| v % modulus as u16).collect();
            p.toggle(reduced);
        }
        p
    }

    fn toggle(&mut self, exps: Vec<u16>) {
        if !self.monomials.remove(&exps) {
            self.monomials.insert(exps);
        }
    }

    pub fn dims(&self) -> usize {
        self.dims
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn term_count(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Group order L^D: the circulant dimension.
    pub fn group_order(&self) -> usize {
        self.modulus.pow(self.dims as u32)
    }

    fn assert_compatible(&self, other: &Self) {
        assert_eq!(
            (self.dims, self.modulus),
            (other.dims, other.modulus),
            "polynomial dims/modulus mismatch"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut out = self.clone();
        for m in &other.monomials {
            out.toggle(m.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut out = Self::zero(self.dims, self.modulus);
        let l = self.modulus as u16;
        for a in &self.monomials {
            for b in &other.monomials {
                let exps: Vec<u16> = a.iter().zip(b).map(|(&x, &y)| (x + y) % l).collect();
                out.toggle(exps);
            }
        }
        out
    }

    /// Conjugation: every exponent is negated modulo L. The circulant of
    /// the conjugate is the transpose of the circulant.
    pub fn conj(&self) -> Self {
        let l = self.modulus as u16;
        let mut out = Self::zero(self.dims, self.modulus);
        for m in &self.monomials {
            out.toggle(m.iter().map(|&e| (l - e) % l).collect());
        }
        out
    }

    fn index_of(&self, exps: &[u16]) -> usize {
        exps.iter()
            .fold(0usize, |acc, &e| acc * self.modulus + e as usize)
    }

    fn exps_of(&self, mut index: usize) -> Vec<u16> {
        let mut exps = vec![0u16; self.dims];
        for axis in (0..self.dims).rev() {
            exps[axis] = (index % self.modulus) as u16;
            index /= self.modulus;
        }
        exps
    }

    /// Matrix of multiplication by this polynomial on the group algebra:
    /// entry (g, h) is set iff g - h is in the support. Ring homomorphism:
    /// sums map to sums, products to products, conjugation to transpose.
    pub fn to_circulant(&self) -> BitMatrix {
        let size = self.group_order();
        let l = self.modulus as u16;
        let mut m = BitMatrix::zeros(size, size);
        for g in 0..size {
            let g_exps = self.exps_of(g);
            for e in &self.monomials {
                let h_exps: Vec<u16> = g_exps
                    .iter()
                    .zip(e)
                    .map(|(&gi, &ei)| (gi + l - ei) % l)
                    .collect();
                m.set(g, self.index_of(&h_exps), true);
            }
        }
        m
    }
}

impl fmt::Debug for PolynomialF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return write!(f, "0");
        }
        let names = ["x", "y", "z", "w"];
        let terms: Vec<String> = self
            .monomials
            .iter()
            .map(|m| {
                let factors: Vec<String> = m
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        let name = names.get(i).copied().unwrap_or("v");
                        if e == 1 {
                            name.to_string()
                        } else {
                            format!("{name}^{e}")
                        }
                    })
                    .collect();
                if factors.is_empty() {
                    "1".to_string()
                } else {
                    factors.join("")
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
