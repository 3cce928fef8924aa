//! Square matrices over F_2, bit-packed one row per `u64`.
//!
//! Entry `(i, j)` (0-based in the API, 1-based in prose) lives in bit `j` of
//! row word `i`, so column 1 is the least significant bit. Every bit above
//! the dimension is kept zero.

use core::fmt;
use core::ops::Mul;

use rand_core::RngCore;

use crate::Error;

/// Largest supported dimension: one row per machine word.
pub const MAX_DIM: usize = 64;

#[inline]
pub(crate) fn low_mask(bits: usize) -> u64 {
    if bits >= 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

fn check_dim(m: usize) -> Result<(), Error> {
    if (1..=MAX_DIM).contains(&m) {
        Ok(())
    } else {
        Err(Error::DimensionOutOfRange { dim: m })
    }
}

/// A square matrix over F_2 of dimension `1..=64`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    dim: usize,
    rows: [u64; MAX_DIM],
}

impl F2Matrix {
    pub fn zero(m: usize) -> Result<Self, Error> {
        check_dim(m)?;
        Ok(F2Matrix {
            dim: m,
            rows: [0; MAX_DIM],
        })
    }

    /// The identity `I_m`.
    pub fn identity(m: usize) -> Result<Self, Error> {
        let mut a = Self::zero(m)?;
        for i in 0..m {
            a.rows[i] = 1 << i;
        }
        Ok(a)
    }

    /// The anti-diagonal `J_m`: entry `(i, j)` is one iff `i + j = m + 1`.
    ///
    /// `J_m` reverses the order of a digit vector, so it maps the digits of
    /// `n` to the coordinate `n / 2^m`.
    pub fn anti_diagonal(m: usize) -> Result<Self, Error> {
        let mut a = Self::zero(m)?;
        for i in 0..m {
            a.rows[i] = 1 << (m - 1 - i);
        }
        Ok(a)
    }

    /// The upper-triangular Pascal matrix `P_m` reduced mod 2.
    ///
    /// Entry `(i, j)` is `binom(j-1, i-1) mod 2`, which by Lucas' theorem is
    /// one iff the bits of `i-1` are a subset of the bits of `j-1`.
    pub fn pascal(m: usize) -> Result<Self, Error> {
        Self::from_fn(m, |i, j| i & j == i)
    }

    /// Builds a matrix from a predicate on 0-based `(row, column)`.
    pub fn from_fn(m: usize, mut entry: impl FnMut(usize, usize) -> bool) -> Result<Self, Error> {
        let mut a = Self::zero(m)?;
        for i in 0..m {
            for j in 0..m {
                if entry(i, j) {
                    a.rows[i] |= 1 << j;
                }
            }
        }
        Ok(a)
    }

    /// Builds a matrix from row words (bit `j` = column `j + 1`).
    pub fn from_rows(rows: &[u64]) -> Result<Self, Error> {
        let mut a = Self::zero(rows.len())?;
        let mask = low_mask(rows.len());
        for (i, &r) in rows.iter().enumerate() {
            if r & !mask != 0 {
                return Err(Error::RowOutOfRange { row: i + 1 });
            }
            a.rows[i] = r;
        }
        Ok(a)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows[..self.dim]
    }

    #[inline]
    pub fn row(&self, i: usize) -> u64 {
        assert!(i < self.dim, "row {i} out of range for dim {}", self.dim);
        self.rows[i]
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.dim && j < self.dim, "entry ({i},{j}) out of range");
        (self.rows[i] >> j) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.dim && j < self.dim, "entry ({i},{j}) out of range");
        if value {
            self.rows[i] |= 1 << j;
        } else {
            self.rows[i] &= !(1 << j);
        }
    }

    /// Matrix product over F_2.
    pub fn multiply(&self, rhs: &F2Matrix) -> Result<F2Matrix, Error> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: rhs.dim,
            });
        }
        let mut out = F2Matrix {
            dim: self.dim,
            rows: [0; MAX_DIM],
        };
        for (dst, &lhs_row) in out.rows.iter_mut().zip(self.rows()) {
            let mut bits = lhs_row;
            let mut acc = 0;
            while bits != 0 {
                let k = bits.trailing_zeros() as usize;
                acc ^= rhs.rows[k];
                bits &= bits - 1;
            }
            *dst = acc;
        }
        Ok(out)
    }

    /// Matrix-vector product: bit `i` of the result is the parity of
    /// `row_i & v`.
    #[inline]
    pub fn mul_vec(&self, v: u64) -> u64 {
        let mut out = 0;
        for (i, &r) in self.rows().iter().enumerate() {
            out |= (((r & v).count_ones() & 1) as u64) << i;
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut basis = EchelonBasis::new();
        self.rows().iter().filter(|&&r| basis.insert(r)).count()
    }

    pub fn is_nonsingular(&self) -> bool {
        self.rank() == self.dim
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<F2Matrix, Error> {
        let n = self.dim;
        let mut work = self.rows;
        let mut inv = F2Matrix::identity(n)?.rows;
        for col in 0..n {
            let bit = 1u64 << col;
            let pivot = (col..n)
                .find(|&r| work[r] & bit != 0)
                .ok_or(Error::Singular)?;
            work.swap(col, pivot);
            inv.swap(col, pivot);
            for r in 0..n {
                if r != col && work[r] & bit != 0 {
                    work[r] ^= work[col];
                    inv[r] ^= inv[col];
                }
            }
        }
        Ok(F2Matrix { dim: n, rows: inv })
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut out = F2Matrix {
            dim: self.dim,
            rows: [0; MAX_DIM],
        };
        for i in 0..self.dim {
            for j in 0..self.dim {
                if self.get(i, j) {
                    out.rows[j] |= 1 << i;
                }
            }
        }
        out
    }

    /// Lower triangular with unit diagonal. Over F_2 these are exactly the
    /// nonsingular lower-triangular matrices.
    pub fn is_lower_triangular_nonsingular(&self) -> bool {
        self.rows()
            .iter()
            .enumerate()
            .all(|(i, &r)| r & !low_mask(i + 1) == 0 && (r >> i) & 1 == 1)
    }

    /// Upper triangular with unit diagonal.
    pub fn is_upper_triangular_nonsingular(&self) -> bool {
        self.rows()
            .iter()
            .enumerate()
            .all(|(i, &r)| r & low_mask(i) == 0 && (r >> i) & 1 == 1)
    }

    /// Unit-triangular factorization `self = L * U`.
    ///
    /// The factorization exists iff every leading principal minor is
    /// nonsingular, and it is then unique. On failure the error carries the
    /// order of the smallest singular leading minor.
    pub fn lu_decompose(&self) -> Result<(F2Matrix, F2Matrix), Error> {
        let n = self.dim;
        let mut lower = F2Matrix::identity(n)?;
        let mut upper = self.clone();
        for k in 0..n {
            let bit = 1u64 << k;
            if upper.rows[k] & bit == 0 {
                return Err(Error::NotDecomposable { minor: k + 1 });
            }
            for i in k + 1..n {
                if upper.rows[i] & bit != 0 {
                    upper.rows[i] ^= upper.rows[k];
                    lower.rows[i] |= bit;
                }
            }
        }
        Ok((lower, upper))
    }

    /// The upper-left `k x k` submatrix.
    pub fn prefix(&self, k: usize) -> Result<F2Matrix, Error> {
        if k == 0 || k > self.dim {
            return Err(Error::PrefixOutOfRange { k, dim: self.dim });
        }
        let mut out = F2Matrix::zero(k)?;
        let mask = low_mask(k);
        for i in 0..k {
            out.rows[i] = self.rows[i] & mask;
        }
        Ok(out)
    }

    /// Uniform sample from GL(m, F_2): rows are drawn uniformly and
    /// rejected while they lie in the span of the rows accepted so far.
    pub fn random_nonsingular<R: RngCore + ?Sized>(m: usize, rng: &mut R) -> Result<Self, Error> {
        let mut a = Self::zero(m)?;
        let mask = low_mask(m);
        let mut basis = EchelonBasis::new();
        for i in 0..m {
            loop {
                let r = rng.next_u64() & mask;
                if basis.insert(r) {
                    a.rows[i] = r;
                    break;
                }
            }
        }
        Ok(a)
    }

    /// Uniform unit lower-triangular matrix.
    pub fn random_lower<R: RngCore + ?Sized>(m: usize, rng: &mut R) -> Result<Self, Error> {
        let mut a = Self::zero(m)?;
        for i in 0..m {
            a.rows[i] = (rng.next_u64() & low_mask(i)) | (1 << i);
        }
        Ok(a)
    }

    /// Uniform unit upper-triangular matrix.
    pub fn random_upper<R: RngCore + ?Sized>(m: usize, rng: &mut R) -> Result<Self, Error> {
        let mut a = Self::zero(m)?;
        let mask = low_mask(m);
        for i in 0..m {
            a.rows[i] = (rng.next_u64() & mask & !low_mask(i + 1)) | (1 << i);
        }
        Ok(a)
    }
}

/// Panics on a dimension mismatch; use [`F2Matrix::multiply`] for the
/// fallible form.
impl Mul for &F2Matrix {
    type Output = F2Matrix;

    fn mul(self, rhs: &F2Matrix) -> F2Matrix {
        self.multiply(rhs)
            .expect("dimension mismatch in matrix product")
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Matrix[")?;
        for (i, &r) in self.rows().iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            for j in 0..self.dim {
                f.write_str(if (r >> j) & 1 == 1 { "1" } else { "0" })?;
            }
        }
        f.write_str("]")
    }
}

/// Incremental row echelon basis keyed by the highest set bit.
#[derive(Clone)]
pub(crate) struct EchelonBasis {
    by_top_bit: [u64; 64],
}

impl EchelonBasis {
    pub(crate) fn new() -> Self {
        EchelonBasis {
            by_top_bit: [0; 64],
        }
    }

    /// Adds `v` and reports whether it was independent of the basis.
    #[inline]
    pub(crate) fn insert(&mut self, mut v: u64) -> bool {
        while v != 0 {
            let top = 63 - v.leading_zeros() as usize;
            let b = self.by_top_bit[top];
            if b == 0 {
                self.by_top_bit[top] = v;
                return true;
            }
            v ^= b;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn m(rows: &[&str]) -> F2Matrix {
        F2Matrix::from_fn(rows.len(), |i, j| rows[i].as_bytes()[j] == b'1').unwrap()
    }

    #[test]
    fn structural_matrices() {
        assert_eq!(F2Matrix::identity(1).unwrap(), m(&["1"]));
        assert_eq!(F2Matrix::identity(2).unwrap(), m(&["10", "01"]));
        assert_eq!(F2Matrix::identity(3).unwrap(), m(&["100", "010", "001"]));
        assert_eq!(F2Matrix::anti_diagonal(1).unwrap(), m(&["1"]));
        assert_eq!(F2Matrix::anti_diagonal(2).unwrap(), m(&["01", "10"]));
        assert_eq!(
            F2Matrix::anti_diagonal(3).unwrap(),
            m(&["001", "010", "100"])
        );
        assert_eq!(F2Matrix::pascal(2).unwrap(), m(&["11", "01"]));
        assert_eq!(F2Matrix::pascal(3).unwrap(), m(&["111", "010", "001"]));
        assert_eq!(
            F2Matrix::pascal(4).unwrap(),
            m(&["1111", "0101", "0011", "0001"])
        );
    }

    #[test]
    fn pascal_matches_binomials_mod_2() {
        // Pascal's rule mod 2, independent of the Lucas subset test.
        let n = 64;
        let mut binom = [[0u8; 64]; 64];
        for row in 0..n {
            binom[row][0] = 1;
            for k in 1..=row {
                binom[row][k] = (binom[row - 1][k - 1] + binom[row - 1][k]) % 2;
            }
        }
        let p = F2Matrix::pascal(n).unwrap();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(p.get(i, j), binom[j][i] == 1, "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn dimension_bounds() {
        assert_eq!(
            F2Matrix::identity(0),
            Err(Error::DimensionOutOfRange { dim: 0 })
        );
        assert_eq!(
            F2Matrix::pascal(65),
            Err(Error::DimensionOutOfRange { dim: 65 })
        );
        assert!(F2Matrix::anti_diagonal(64).is_ok());
        assert_eq!(
            F2Matrix::from_rows(&[0b100, 0]),
            Err(Error::RowOutOfRange { row: 1 })
        );
    }

    #[test]
    fn products() {
        let i2 = F2Matrix::identity(2).unwrap();
        let j2 = F2Matrix::anti_diagonal(2).unwrap();
        assert_eq!(&j2 * &j2, i2);
        let p3 = F2Matrix::pascal(3).unwrap();
        assert_eq!(&p3 * &p3, F2Matrix::identity(3).unwrap());
        assert_eq!(&m(&["10", "11"]) * &m(&["11", "01"]), m(&["11", "10"]));
        assert_eq!(
            i2.multiply(&F2Matrix::identity(3).unwrap()),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn ranks() {
        assert_eq!(F2Matrix::identity(4).unwrap().rank(), 4);
        assert_eq!(F2Matrix::zero(3).unwrap().rank(), 0);
        assert_eq!(m(&["11", "11"]).rank(), 1);
        assert_eq!(F2Matrix::anti_diagonal(64).unwrap().rank(), 64);
    }

    #[test]
    fn inverses() {
        let i3 = F2Matrix::identity(3).unwrap();
        assert_eq!(i3.inverse().unwrap(), i3);
        let j4 = F2Matrix::anti_diagonal(4).unwrap();
        assert_eq!(j4.inverse().unwrap(), j4);
        let p3 = F2Matrix::pascal(3).unwrap();
        assert_eq!(p3.inverse().unwrap(), p3);
        assert_eq!(m(&["11", "11"]).inverse(), Err(Error::Singular));
    }

    #[test]
    fn triangular_predicates() {
        for n in 1..=5 {
            let i = F2Matrix::identity(n).unwrap();
            assert!(i.is_lower_triangular_nonsingular());
            assert!(i.is_upper_triangular_nonsingular());
        }
        let l = m(&["10", "11"]);
        assert!(l.is_lower_triangular_nonsingular());
        assert!(!l.is_upper_triangular_nonsingular());
        let j2 = F2Matrix::anti_diagonal(2).unwrap();
        assert!(!j2.is_lower_triangular_nonsingular());
        assert!(!j2.is_upper_triangular_nonsingular());
        assert!(!m(&["10", "10"]).is_lower_triangular_nonsingular());
    }

    #[test]
    fn lu_examples() {
        let i3 = F2Matrix::identity(3).unwrap();
        assert_eq!(i3.lu_decompose().unwrap(), (i3.clone(), i3));
        let (l, u) = m(&["11", "10"]).lu_decompose().unwrap();
        assert_eq!(l, m(&["10", "11"]));
        assert_eq!(u, m(&["11", "01"]));
        assert_eq!(&l * &u, m(&["11", "10"]));
        assert_eq!(
            F2Matrix::anti_diagonal(2).unwrap().lu_decompose(),
            Err(Error::NotDecomposable { minor: 1 })
        );
        assert_eq!(
            m(&["110", "110", "001"]).lu_decompose(),
            Err(Error::NotDecomposable { minor: 2 })
        );
    }

    #[test]
    fn prefixes() {
        let p4 = F2Matrix::pascal(4).unwrap();
        assert_eq!(p4.prefix(2).unwrap(), F2Matrix::pascal(2).unwrap());
        assert_eq!(p4.prefix(4).unwrap(), p4);
        assert_eq!(
            F2Matrix::anti_diagonal(4).unwrap().prefix(2).unwrap(),
            F2Matrix::zero(2).unwrap()
        );
        assert_eq!(p4.prefix(0), Err(Error::PrefixOutOfRange { k: 0, dim: 4 }));
        assert_eq!(p4.prefix(5), Err(Error::PrefixOutOfRange { k: 5, dim: 4 }));
    }

    #[test]
    fn samplers_hit_their_sets() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        assert_eq!(
            F2Matrix::random_lower(1, &mut rng).unwrap(),
            F2Matrix::identity(1).unwrap()
        );
        let mut seen_upper = alloc::vec::Vec::new();
        let mut seen_gl = alloc::vec::Vec::new();
        for _ in 0..400 {
            let u = F2Matrix::random_upper(2, &mut rng).unwrap();
            assert!(u == m(&["11", "01"]) || u == m(&["10", "01"]));
            if !seen_upper.contains(&u) {
                seen_upper.push(u);
            }
            let g = F2Matrix::random_nonsingular(2, &mut rng).unwrap();
            assert!(g.is_nonsingular());
            if !seen_gl.contains(&g) {
                seen_gl.push(g);
            }
        }
        assert_eq!(seen_upper.len(), 2);
        // Brute force: 6 of the 16 2x2 matrices are nonsingular.
        let gl2 = (0u64..16)
            .filter(|bits| F2Matrix::from_rows(&[bits & 3, bits >> 2]).unwrap().rank() == 2)
            .count();
        assert_eq!(gl2, 6);
        assert_eq!(seen_gl.len(), gl2);
        for n in [3, 17, 64] {
            assert!(F2Matrix::random_lower(n, &mut rng)
                .unwrap()
                .is_lower_triangular_nonsingular());
            assert!(F2Matrix::random_upper(n, &mut rng)
                .unwrap()
                .is_upper_triangular_nonsingular());
            assert_eq!(F2Matrix::random_nonsingular(n, &mut rng).unwrap().rank(), n);
        }
    }
}
