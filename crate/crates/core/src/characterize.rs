//! Characterization of digital (0,m,2)- and (0,m,3)-nets and of digital
//! (0,1)- and (0,2)-sequences in base 2.
//!
//! A triple `(A, B, C)` generates a digital (0,m,3)-net iff
//!
//! ```text
//! (A, B, C) = (J M, L1 U M, L2 P U M)
//! ```
//!
//! for unit lower-triangular `L1`, `L2`, unit upper-triangular `U` and
//! nonsingular `M`. Over F_2 the factors are unique: `M = J A`, then `L1`
//! and `U` come from the unit LU factorization of `B M^-1`, and `L2` is
//! what remains of `C M^-1`. [`decompose_0m3`] follows exactly this chain
//! and reports which link breaks when the triple is not a (0,m,3)-net.
//!
//! A pair of infinite matrices `(B, C)` generates a digital (0,2)-sequence
//! iff `B = L1 U` and `C = L2 P U` with infinite unit-triangular factors.
//! Unit LU factors of a prefix are prefixes of the factors of the whole
//! matrix, so a window either rejects definitively or certifies up to its
//! depth.

use alloc::vec::Vec;
use core::fmt;

use rand_core::RngCore;

use crate::matrix::low_mask;
use crate::net::MatrixPrefix;
use crate::{Error, F2Matrix};

/// Largest `m` for the exhaustive enumeration.
pub const MAX_ENUMERATE_M: usize = 3;

/// Why a tuple is not a (0,m,2)/(0,m,3)-net or a prefix is not a
/// (0,1)/(0,2)-sequence window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rejection {
    /// The first matrix is singular, so its coordinate alone is not
    /// equidistributed.
    SingularA,
    /// The second matrix (after removing `M`) has a singular leading
    /// principal minor of this order.
    NotLu { minor: usize },
    /// The remaining factor of the third matrix is not unit lower
    /// triangular, i.e. the upper parts are not related by `P`.
    L2NotLower,
}

impl Rejection {
    pub fn name(&self) -> &'static str {
        match self {
            Rejection::SingularA => "SingularA",
            Rejection::NotLu { .. } => "NotLU",
            Rejection::L2NotLower => "L2NotLower",
        }
    }

    pub fn minor(&self) -> Option<usize> {
        match *self {
            Rejection::NotLu { minor } => Some(minor),
            _ => None,
        }
    }
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::SingularA => f.write_str("first generator matrix is singular"),
            Rejection::NotLu { minor } => {
                write!(f, "leading principal minor of order {minor} is singular")
            }
            Rejection::L2NotLower => {
                f.write_str("remaining factor of the third matrix is not unit lower triangular")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecomposeError {
    /// The input is malformed (e.g. dimensions differ).
    Invalid(Error),
    /// The input is well formed but is not a (0,m,s)-net generator.
    Rejected(Rejection),
}

impl From<Error> for DecomposeError {
    fn from(e: Error) -> Self {
        DecomposeError::Invalid(e)
    }
}

impl From<Rejection> for DecomposeError {
    fn from(r: Rejection) -> Self {
        DecomposeError::Rejected(r)
    }
}

impl fmt::Display for DecomposeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecomposeError::Invalid(e) => e.fmt(f),
            DecomposeError::Rejected(r) => r.fmt(f),
        }
    }
}

impl core::error::Error for DecomposeError {}

/// Factors `(L1, L2, U, M)` of a (0,m,3)-net triple.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NetDecomposition3 {
    pub l1: F2Matrix,
    pub l2: F2Matrix,
    pub u: F2Matrix,
    /// The right factor `M` shared by all three matrices.
    pub right: F2Matrix,
}

impl NetDecomposition3 {
    /// Validates the factor preconditions.
    pub fn new(l1: F2Matrix, l2: F2Matrix, u: F2Matrix, right: F2Matrix) -> Result<Self, Error> {
        let m = l1.dim();
        for f in [&l2, &u, &right] {
            if f.dim() != m {
                return Err(Error::DimensionMismatch {
                    left: m,
                    right: f.dim(),
                });
            }
        }
        if !l1.is_lower_triangular_nonsingular() {
            return Err(Error::InvalidFactor("L1 must be unit lower triangular"));
        }
        if !l2.is_lower_triangular_nonsingular() {
            return Err(Error::InvalidFactor("L2 must be unit lower triangular"));
        }
        if !u.is_upper_triangular_nonsingular() {
            return Err(Error::InvalidFactor("U must be unit upper triangular"));
        }
        if !right.is_nonsingular() {
            return Err(Error::InvalidFactor("M must be nonsingular"));
        }
        Ok(NetDecomposition3 { l1, l2, u, right })
    }

    pub fn dim(&self) -> usize {
        self.l1.dim()
    }

    /// `(J M, L1 U M, L2 P U M)`.
    pub fn compose(&self) -> [F2Matrix; 3] {
        let m = self.dim();
        let j = F2Matrix::anti_diagonal(m).expect("valid dimension");
        let p = F2Matrix::pascal(m).expect("valid dimension");
        let um = &self.u * &self.right;
        [&j * &self.right, &self.l1 * &um, &self.l2 * &(&p * &um)]
    }
}

/// Factors `(L, U, M)` of a (0,m,2)-net pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NetDecomposition2 {
    pub l: F2Matrix,
    pub u: F2Matrix,
    pub right: F2Matrix,
}

impl NetDecomposition2 {
    pub fn new(l: F2Matrix, u: F2Matrix, right: F2Matrix) -> Result<Self, Error> {
        let m = l.dim();
        for f in [&u, &right] {
            if f.dim() != m {
                return Err(Error::DimensionMismatch {
                    left: m,
                    right: f.dim(),
                });
            }
        }
        if !l.is_lower_triangular_nonsingular() {
            return Err(Error::InvalidFactor("L must be unit lower triangular"));
        }
        if !u.is_upper_triangular_nonsingular() {
            return Err(Error::InvalidFactor("U must be unit upper triangular"));
        }
        if !right.is_nonsingular() {
            return Err(Error::InvalidFactor("M must be nonsingular"));
        }
        Ok(NetDecomposition2 { l, u, right })
    }

    /// `(J M, L U M)`.
    pub fn compose(&self) -> [F2Matrix; 2] {
        let j = F2Matrix::anti_diagonal(self.l.dim()).expect("valid dimension");
        [&j * &self.right, &self.l * &(&self.u * &self.right)]
    }
}

fn same_dims(ms: &[&F2Matrix]) -> Result<usize, Error> {
    let m = ms[0].dim();
    match ms.iter().find(|a| a.dim() != m) {
        Some(bad) => Err(Error::DimensionMismatch {
            left: m,
            right: bad.dim(),
        }),
        None => Ok(m),
    }
}

/// Strips the common right factor: returns `M = J A` and `M^-1`.
fn right_factor(a: &F2Matrix) -> Result<(F2Matrix, F2Matrix), DecomposeError> {
    let m = F2Matrix::anti_diagonal(a.dim())?.multiply(a)?;
    let inv = m.inverse().map_err(|_| Rejection::SingularA)?;
    Ok((m, inv))
}

fn unit_lu(b: &F2Matrix) -> Result<(F2Matrix, F2Matrix), Rejection> {
    b.lu_decompose().map_err(|e| match e {
        Error::NotDecomposable { minor } => Rejection::NotLu { minor },
        other => unreachable!("lu_decompose only fails with NotDecomposable, got {other}"),
    })
}

/// Decomposes a (0,m,3)-net triple into its unique factors, or explains
/// why the triple does not generate a (0,m,3)-net.
pub fn decompose_0m3(
    a: &F2Matrix,
    b: &F2Matrix,
    c: &F2Matrix,
) -> Result<NetDecomposition3, DecomposeError> {
    let m = same_dims(&[a, b, c])?;
    let (right, right_inv) = right_factor(a)?;
    let (l1, u) = unit_lu(&(b * &right_inv))?;
    // L2 = C M^-1 U^-1 P^-1 and P^-1 = P over F_2.
    let p = F2Matrix::pascal(m)?;
    let u_inv = u.inverse()?;
    let l2 = &(&(c * &right_inv) * &u_inv) * &p;
    if !l2.is_lower_triangular_nonsingular() {
        return Err(Rejection::L2NotLower.into());
    }
    Ok(NetDecomposition3 { l1, l2, u, right })
}

/// `(J M, L1 U M, L2 P U M)` from validated factors.
pub fn compose_0m3(
    l1: &F2Matrix,
    l2: &F2Matrix,
    u: &F2Matrix,
    right: &F2Matrix,
) -> Result<[F2Matrix; 3], Error> {
    NetDecomposition3::new(l1.clone(), l2.clone(), u.clone(), right.clone()).map(|d| d.compose())
}

/// Decomposes a (0,m,2)-net pair as `(J M, L U M)`.
pub fn decompose_0m2(a: &F2Matrix, b: &F2Matrix) -> Result<NetDecomposition2, DecomposeError> {
    same_dims(&[a, b])?;
    let (right, right_inv) = right_factor(a)?;
    let (l, u) = unit_lu(&(b * &right_inv))?;
    Ok(NetDecomposition2 { l, u, right })
}

pub fn compose_0m2(l: &F2Matrix, u: &F2Matrix, right: &F2Matrix) -> Result<[F2Matrix; 2], Error> {
    NetDecomposition2::new(l.clone(), u.clone(), right.clone()).map(|d| d.compose())
}

/// For unit upper-triangular `U1`, `U2`: `(J, U1, U2)` generates a
/// (0,m,3)-net iff `U2 = P U1`.
pub fn check_upper_pair(u1: &F2Matrix, u2: &F2Matrix) -> Result<bool, Error> {
    let m = same_dims(&[u1, u2])?;
    if !u1.is_upper_triangular_nonsingular() || !u2.is_upper_triangular_nonsingular() {
        return Err(Error::InvalidFactor(
            "U1 and U2 must be unit upper triangular",
        ));
    }
    Ok(*u2 == &F2Matrix::pascal(m)? * u1)
}

/// Outcome of a finite-window sequence decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PrefixVerdict {
    /// No violation inside the window; the property holds for all prefixes
    /// up to this depth.
    Certified { depth: usize },
    /// The property fails for the infinite matrices; `depth` is the
    /// smallest window that exhibits the failure.
    Rejected { depth: usize, reason: Rejection },
}

impl PrefixVerdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, PrefixVerdict::Certified { .. })
    }
}

/// Decides whether `B` can generate a digital (0,1)-sequence, i.e. whether
/// `B = L U` with infinite unit-triangular factors, on the given window.
pub fn decide_01_sequence_prefix(b: &MatrixPrefix) -> PrefixVerdict {
    match unit_lu(b.window()) {
        Ok(_) => PrefixVerdict::Certified { depth: b.depth() },
        Err(reason) => PrefixVerdict::Rejected {
            depth: reason.minor().expect("LU rejections carry the minor"),
            reason,
        },
    }
}

/// Smallest `k` such that the `k x k` prefix of `a` is not unit lower
/// triangular.
fn first_non_lower_depth(a: &F2Matrix) -> Option<usize> {
    a.rows()
        .iter()
        .enumerate()
        .filter_map(|(i, &r)| {
            let diag = (r >> i) & 1 == 0;
            let above = r & !low_mask(i + 1);
            let above_col = (above != 0).then(|| above.trailing_zeros() as usize + 1);
            let diag_col = diag.then_some(i + 1);
            match (above_col, diag_col) {
                (Some(x), Some(y)) => Some(x.min(y)),
                (x, y) => x.or(y),
            }
        })
        .min()
}

/// Decides whether `(B, C)` can generate a digital (0,2)-sequence on
/// windows of equal depth `d`: `B^(d) = L1 U` and `C^(d) U^-1 P_d` must be
/// unit lower triangular.
pub fn decide_02_sequence_prefix(
    b: &MatrixPrefix,
    c: &MatrixPrefix,
) -> Result<PrefixVerdict, Error> {
    let d = same_dims(&[b.window(), c.window()])?;
    let (_, u) = match unit_lu(b.window()) {
        Ok(f) => f,
        Err(reason) => {
            return Ok(PrefixVerdict::Rejected {
                depth: reason.minor().expect("LU rejections carry the minor"),
                reason,
            })
        }
    };
    let l2 = &(c.window() * &u.inverse()?) * &F2Matrix::pascal(d)?;
    Ok(match first_non_lower_depth(&l2) {
        None => PrefixVerdict::Certified { depth: d },
        Some(depth) => PrefixVerdict::Rejected {
            depth,
            reason: Rejection::L2NotLower,
        },
    })
}

/// All matrices whose free entries (given row-major) range over every bit
/// pattern, in ascending order of the row-major bit string.
fn all_with_free_entries(
    m: usize,
    free: &[(usize, usize)],
    fixed: impl Fn(usize, usize) -> bool,
) -> Vec<F2Matrix> {
    let f = free.len();
    (0u64..1 << f)
        .map(|idx| {
            let mut a = F2Matrix::from_fn(m, &fixed).expect("valid dimension");
            for (p, &(i, j)) in free.iter().enumerate() {
                if (idx >> (f - 1 - p)) & 1 == 1 {
                    a.set(i, j, true);
                }
            }
            a
        })
        .collect()
}

fn check_enumerable(m: usize) -> Result<(), Error> {
    if m == 0 {
        return Err(Error::DimensionOutOfRange { dim: 0 });
    }
    if m > MAX_ENUMERATE_M {
        return Err(Error::TooLarge {
            what: "m",
            value: m,
            cap: MAX_ENUMERATE_M,
        });
    }
    Ok(())
}

/// Every unit lower-triangular `m x m` matrix, in row-major bit order.
pub fn all_unit_lower(m: usize) -> Result<Vec<F2Matrix>, Error> {
    check_enumerable(m)?;
    let free: Vec<_> = (0..m).flat_map(|i| (0..i).map(move |j| (i, j))).collect();
    Ok(all_with_free_entries(m, &free, |i, j| i == j))
}

/// Every unit upper-triangular `m x m` matrix, in row-major bit order.
pub fn all_unit_upper(m: usize) -> Result<Vec<F2Matrix>, Error> {
    check_enumerable(m)?;
    let free: Vec<_> = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .collect();
    Ok(all_with_free_entries(m, &free, |i, j| i == j))
}

/// GL(m, F_2) in row-major bit order.
pub fn all_nonsingular(m: usize) -> Result<Vec<F2Matrix>, Error> {
    check_enumerable(m)?;
    let free: Vec<_> = (0..m).flat_map(|i| (0..m).map(move |j| (i, j))).collect();
    let mut all = all_with_free_entries(m, &free, |_, _| false);
    all.retain(F2Matrix::is_nonsingular);
    Ok(all)
}

/// Iterator over every factor tuple `(L1, L2, U, M)` with `L1` outermost and
/// `M` innermost.
#[derive(Debug, Clone)]
pub struct FactorEnumeration {
    lower: Vec<F2Matrix>,
    upper: Vec<F2Matrix>,
    general: Vec<F2Matrix>,
    index: usize,
}

impl FactorEnumeration {
    pub fn total(&self) -> usize {
        self.lower.len() * self.lower.len() * self.upper.len() * self.general.len()
    }
}

impl Iterator for FactorEnumeration {
    type Item = NetDecomposition3;

    fn next(&mut self) -> Option<NetDecomposition3> {
        if self.index >= self.total() {
            return None;
        }
        let mut rest = self.index;
        let im = rest % self.general.len();
        rest /= self.general.len();
        let iu = rest % self.upper.len();
        rest /= self.upper.len();
        let i2 = rest % self.lower.len();
        let i1 = rest / self.lower.len();
        self.index += 1;
        Some(NetDecomposition3 {
            l1: self.lower[i1].clone(),
            l2: self.lower[i2].clone(),
            u: self.upper[iu].clone(),
            right: self.general[im].clone(),
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.total() - self.index;
        (left, Some(left))
    }
}

impl ExactSizeIterator for FactorEnumeration {}

pub fn enumerate_0m3_factors(m: usize) -> Result<FactorEnumeration, Error> {
    Ok(FactorEnumeration {
        lower: all_unit_lower(m)?,
        upper: all_unit_upper(m)?,
        general: all_nonsingular(m)?,
        index: 0,
    })
}

/// Every triple generating a digital (0,m,3)-net, each exactly once.
pub fn enumerate_0m3(m: usize) -> Result<impl Iterator<Item = [F2Matrix; 3]>, Error> {
    Ok(enumerate_0m3_factors(m)?.map(|d| d.compose()))
}

/// Uniform factors; draws `L1`, `L2`, `U`, then `M`.
pub fn sample_0m3_factors<R: RngCore + ?Sized>(
    m: usize,
    rng: &mut R,
) -> Result<NetDecomposition3, Error> {
    Ok(NetDecomposition3 {
        l1: F2Matrix::random_lower(m, rng)?,
        l2: F2Matrix::random_lower(m, rng)?,
        u: F2Matrix::random_upper(m, rng)?,
        right: F2Matrix::random_nonsingular(m, rng)?,
    })
}

/// A uniformly random (0,m,3)-net triple.
pub fn random_0m3<R: RngCore + ?Sized>(m: usize, rng: &mut R) -> Result<[F2Matrix; 3], Error> {
    sample_0m3_factors(m, rng).map(|d| d.compose())
}

/// Uniform factors of a (0,m,2)-net pair; draws `L`, `U`, then `M`.
pub fn sample_0m2_factors<R: RngCore + ?Sized>(
    m: usize,
    rng: &mut R,
) -> Result<NetDecomposition2, Error> {
    Ok(NetDecomposition2 {
        l: F2Matrix::random_lower(m, rng)?,
        u: F2Matrix::random_upper(m, rng)?,
        right: F2Matrix::random_nonsingular(m, rng)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::net::GeneratorTuple;
    use crate::verify::strength_by_rank;
    use alloc::vec;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn i(m: usize) -> F2Matrix {
        F2Matrix::identity(m).unwrap()
    }
    fn j(m: usize) -> F2Matrix {
        F2Matrix::anti_diagonal(m).unwrap()
    }
    fn p(m: usize) -> F2Matrix {
        F2Matrix::pascal(m).unwrap()
    }
    fn rows(r: &[&str]) -> F2Matrix {
        F2Matrix::from_fn(r.len(), |a, b| r[a].as_bytes()[b] == b'1').unwrap()
    }
    fn t_value(ms: &[F2Matrix]) -> usize {
        strength_by_rank(&GeneratorTuple::new(ms.to_vec()).unwrap()).t_value
    }

    #[test]
    fn canonical_triple_decomposes_to_identities() {
        for m in 1..=8 {
            let d = decompose_0m3(&j(m), &i(m), &p(m)).unwrap();
            assert_eq!(d, NetDecomposition3::new(i(m), i(m), i(m), i(m)).unwrap());
        }
    }

    #[test]
    fn diagonal_pair_is_not_lu() {
        for c in [i(2), p(2), j(2)] {
            assert_eq!(
                decompose_0m3(&j(2), &j(2), &c),
                Err(DecomposeError::Rejected(Rejection::NotLu { minor: 1 }))
            );
        }
    }

    #[test]
    fn singular_first_matrix() {
        let z = F2Matrix::zero(3).unwrap();
        assert_eq!(
            decompose_0m3(&z, &i(3), &p(3)),
            Err(DecomposeError::Rejected(Rejection::SingularA))
        );
        assert_eq!(
            decompose_0m2(&z, &i(3)),
            Err(DecomposeError::Rejected(Rejection::SingularA))
        );
    }

    #[test]
    fn l2_not_lower() {
        assert_eq!(
            decompose_0m3(&j(2), &i(2), &i(2)),
            Err(DecomposeError::Rejected(Rejection::L2NotLower))
        );
    }

    #[test]
    fn dimension_mismatch() {
        assert!(matches!(
            decompose_0m3(&j(2), &i(3), &p(2)),
            Err(DecomposeError::Invalid(Error::DimensionMismatch { .. }))
        ));
    }

    #[test]
    fn compose_examples() {
        assert_eq!(
            compose_0m3(&i(3), &i(3), &i(3), &i(3)).unwrap(),
            [j(3), i(3), p(3)]
        );
        assert_eq!(
            compose_0m3(&i(3), &i(3), &i(3), &j(3)).unwrap(),
            [i(3), j(3), &p(3) * &j(3)]
        );
        assert!(matches!(
            compose_0m3(&p(3), &i(3), &i(3), &i(3)),
            Err(Error::InvalidFactor(_))
        ));
        assert!(matches!(
            compose_0m3(&i(3), &i(3), &i(3), &F2Matrix::zero(3).unwrap()),
            Err(Error::InvalidFactor(_))
        ));
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let triple = random_0m3(3, &mut rng).unwrap();
            assert_eq!(t_value(&triple), 0);
        }
    }

    #[test]
    fn two_dimensional_examples() {
        let d = decompose_0m2(&j(4), &i(4)).unwrap();
        assert_eq!((d.l, d.u, d.right), (i(4), i(4), i(4)));
        let d = decompose_0m2(&j(2), &rows(&["11", "10"])).unwrap();
        assert_eq!(d.l, rows(&["10", "11"]));
        assert_eq!(d.u, rows(&["11", "01"]));
        assert_eq!(d.right, i(2));
        assert_eq!(
            decompose_0m2(&j(2), &j(2)),
            Err(DecomposeError::Rejected(Rejection::NotLu { minor: 1 }))
        );
    }

    #[test]
    fn upper_pairs() {
        for m in 1..=6 {
            assert!(check_upper_pair(&i(m), &p(m)).unwrap());
            assert!(check_upper_pair(&p(m), &i(m)).unwrap());
        }
        assert!(!check_upper_pair(&i(2), &i(2)).unwrap());
        assert!(check_upper_pair(&j(2), &i(2)).is_err());
    }

    #[test]
    fn sequence_01_windows() {
        for d in [1, 7, 64] {
            assert_eq!(
                decide_01_sequence_prefix(&MatrixPrefix::pascal(d).unwrap()),
                PrefixVerdict::Certified { depth: d }
            );
        }
        assert_eq!(
            decide_01_sequence_prefix(&MatrixPrefix::anti_diagonal(2).unwrap()),
            PrefixVerdict::Rejected {
                depth: 1,
                reason: Rejection::NotLu { minor: 1 }
            }
        );
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let l = F2Matrix::random_lower(20, &mut rng).unwrap();
        let u = F2Matrix::random_upper(20, &mut rng).unwrap();
        assert!(decide_01_sequence_prefix(&MatrixPrefix::new(&l * &u)).is_certified());
    }

    #[test]
    fn sequence_02_windows() {
        for d in 1..=16 {
            let v = decide_02_sequence_prefix(
                &MatrixPrefix::identity(d).unwrap(),
                &MatrixPrefix::pascal(d).unwrap(),
            )
            .unwrap();
            assert_eq!(v, PrefixVerdict::Certified { depth: d });
        }
        let v = decide_02_sequence_prefix(
            &MatrixPrefix::identity(5).unwrap(),
            &MatrixPrefix::identity(5).unwrap(),
        )
        .unwrap();
        assert_eq!(
            v,
            PrefixVerdict::Rejected {
                depth: 2,
                reason: Rejection::L2NotLower
            }
        );
        assert!(decide_02_sequence_prefix(
            &MatrixPrefix::identity(1).unwrap(),
            &MatrixPrefix::identity(1).unwrap()
        )
        .unwrap()
        .is_certified());

        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let f = sample_0m3_factors(8, &mut rng).unwrap();
        let b = &f.l1 * &f.u;
        let c = &f.l2 * &(&p(8) * &f.u);
        assert_eq!(
            decide_02_sequence_prefix(&MatrixPrefix::new(b), &MatrixPrefix::new(c)).unwrap(),
            PrefixVerdict::Certified { depth: 8 }
        );
        assert!(decide_02_sequence_prefix(
            &MatrixPrefix::identity(3).unwrap(),
            &MatrixPrefix::identity(4).unwrap()
        )
        .is_err());
    }

    #[test]
    fn non_lower_depth() {
        assert_eq!(first_non_lower_depth(&i(4)), None);
        assert_eq!(first_non_lower_depth(&p(4)), Some(2));
        assert_eq!(
            first_non_lower_depth(&rows(&["100", "110", "000"])),
            Some(3)
        );
        assert_eq!(first_non_lower_depth(&j(3)), Some(1));
    }

    #[test]
    fn enumeration_sizes_and_order() {
        assert_eq!(all_unit_lower(3).unwrap().len(), 8);
        assert_eq!(all_unit_upper(2).unwrap(), vec![i(2), rows(&["11", "01"])]);
        assert_eq!(all_nonsingular(2).unwrap().len(), 6);
        assert_eq!(all_nonsingular(3).unwrap().len(), 168);
        assert_eq!(all_nonsingular(2).unwrap()[0], rows(&["01", "10"]));
        assert_eq!(
            enumerate_0m3(1).unwrap().collect::<Vec<_>>(),
            vec![[i(1), i(1), i(1)]]
        );
        assert_eq!(enumerate_0m3_factors(2).unwrap().len(), 48);
        assert_eq!(enumerate_0m3_factors(3).unwrap().len(), 86016);
        assert!(enumerate_0m3_factors(4).is_err());
    }
}
