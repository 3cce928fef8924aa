//! Digital nets and digital sequence prefixes with exact dyadic coordinates.

use alloc::vec::Vec;

use crate::matrix::{low_mask, F2Matrix};
use crate::Error;

/// Largest `m` for which [`net_points`] materializes the `2^m` points.
pub const MAX_NET_POINTS_M: usize = 24;

/// The exact value `numerator / 2^precision` in `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dyadic {
    numerator: u64,
    precision: u32,
}

impl Dyadic {
    pub fn new(numerator: u64, precision: u32) -> Option<Self> {
        (precision <= 64 && numerator & !low_mask(precision as usize) == 0).then_some(Dyadic {
            numerator,
            precision,
        })
    }

    #[inline]
    pub fn numerator(&self) -> u64 {
        self.numerator
    }

    #[inline]
    pub fn precision(&self) -> u32 {
        self.precision
    }

    /// The `m`-digit truncation: keeps the leading `m` binary digits.
    /// `m` larger than the current precision is clamped.
    pub fn truncate(&self, m: u32) -> Dyadic {
        let m = m.min(self.precision);
        let shift = self.precision - m;
        Dyadic {
            numerator: if shift == 64 {
                0
            } else {
                self.numerator >> shift
            },
            precision: m,
        }
    }

    /// The leading `c` binary digits as an integer (the box offset along
    /// this axis at resolution `2^-c`).
    #[inline]
    pub fn leading_digits(&self, c: u32) -> u64 {
        self.truncate(c).numerator
    }

    pub fn to_f64(&self) -> f64 {
        // 2^-precision built from its exponent bits; exact for precision <= 64.
        let scale = f64::from_bits((1023 - u64::from(self.precision)) << 52);
        self.numerator as f64 * scale
    }
}

/// A point of `[0, 1)^s` with dyadic coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyadicPoint {
    pub coords: Vec<Dyadic>,
}

/// The digit vector `(z_1(n), ..., z_m(n))` of `n`, packed with `z_i` in
/// bit `i - 1`. This packing coincides with `n` itself.
pub fn digits(n: u64, m: usize) -> Result<u64, Error> {
    if m > 64 || n & !low_mask(m) != 0 {
        return Err(Error::IndexOutOfRange { n, m });
    }
    Ok(n)
}

/// `phi_k(y) = sum_i y_i / 2^i` for a digit vector `y` of length `k`
/// packed with `y_i` in bit `i - 1`.
pub fn phi(y: u64, k: usize) -> Dyadic {
    assert!((1..=64).contains(&k), "phi needs 1 <= k <= 64");
    let y = y & low_mask(k);
    Dyadic {
        numerator: y.reverse_bits() >> (64 - k),
        precision: k as u32,
    }
}

/// An ordered tuple `(C_1, ..., C_s)` of generator matrices of one dimension.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorTuple {
    matrices: Vec<F2Matrix>,
}

impl GeneratorTuple {
    pub fn new(matrices: Vec<F2Matrix>) -> Result<Self, Error> {
        let first = matrices.first().ok_or(Error::EmptyTuple)?;
        if let Some(bad) = matrices.iter().find(|c| c.dim() != first.dim()) {
            return Err(Error::DimensionMismatch {
                left: first.dim(),
                right: bad.dim(),
            });
        }
        Ok(GeneratorTuple { matrices })
    }

    pub fn m(&self) -> usize {
        self.matrices[0].dim()
    }

    pub fn s(&self) -> usize {
        self.matrices.len()
    }

    pub fn matrices(&self) -> &[F2Matrix] {
        &self.matrices
    }

    pub fn into_matrices(self) -> Vec<F2Matrix> {
        self.matrices
    }

    /// Prepends `J_m`, whose coordinate for point `n` is `n / 2^m`.
    ///
    /// A (t,s)-sequence joined with this coordinate over its first `2^m`
    /// points is a (t,m,s+1)-net.
    pub fn extend_with_index_coordinate(&self) -> GeneratorTuple {
        let mut matrices = Vec::with_capacity(self.s() + 1);
        matrices.push(F2Matrix::anti_diagonal(self.m()).expect("dimension already validated"));
        matrices.extend(self.matrices.iter().cloned());
        GeneratorTuple { matrices }
    }
}

/// The `2^m` points of a digital net, stored as coordinate numerators over
/// the common denominator `2^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NetPoints {
    m: usize,
    s: usize,
    numerators: Vec<u64>,
}

impl NetPoints {
    /// Wraps raw numerators laid out point-major (`n * s + j`). The length
    /// must be `2^m * s` and every numerator below `2^m`.
    pub fn from_numerators(m: usize, s: usize, numerators: Vec<u64>) -> Result<Self, Error> {
        if m > MAX_NET_POINTS_M {
            return Err(Error::TooLarge {
                what: "m",
                value: m,
                cap: MAX_NET_POINTS_M,
            });
        }
        if s == 0 {
            return Err(Error::EmptyTuple);
        }
        if numerators.len() != (1usize << m) * s {
            return Err(Error::DimensionMismatch {
                left: (1usize << m) * s,
                right: numerators.len(),
            });
        }
        if let Some(&bad) = numerators.iter().find(|&&k| k >> m != 0) {
            return Err(Error::IndexOutOfRange { n: bad, m });
        }
        Ok(NetPoints { m, s, numerators })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn len(&self) -> usize {
        1 << self.m
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Numerators of point `n` over `2^m`.
    pub fn numerators(&self, n: usize) -> &[u64] {
        &self.numerators[n * self.s..(n + 1) * self.s]
    }

    pub fn coord(&self, n: usize, j: usize) -> Dyadic {
        Dyadic {
            numerator: self.numerators[n * self.s + j],
            precision: self.m as u32,
        }
    }

    pub fn point(&self, n: usize) -> DyadicPoint {
        DyadicPoint {
            coords: (0..self.s).map(|j| self.coord(n, j)).collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u64]> + '_ {
        self.numerators.chunks_exact(self.s)
    }
}

/// Generates the digital net of `gen`: coordinate `j` of point `n` is
/// `phi_m(C_j * digits(n))`.
pub fn net_points(gen: &GeneratorTuple) -> Result<NetPoints, Error> {
    let m = gen.m();
    if m > MAX_NET_POINTS_M {
        return Err(Error::TooLarge {
            what: "m",
            value: m,
            cap: MAX_NET_POINTS_M,
        });
    }
    let s = gen.s();
    let mut numerators = Vec::with_capacity((1usize << m) * s);
    for n in 0..1u64 << m {
        for c in gen.matrices() {
            numerators.push(phi(c.mul_vec(n), m).numerator);
        }
    }
    Ok(NetPoints { m, s, numerators })
}

/// A finite window `C^(depth)` standing in for an infinite generator matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatrixPrefix {
    window: F2Matrix,
}

impl MatrixPrefix {
    pub fn new(window: F2Matrix) -> Self {
        MatrixPrefix { window }
    }

    pub fn identity(depth: usize) -> Result<Self, Error> {
        F2Matrix::identity(depth).map(Self::new)
    }

    /// Window of the infinite Pascal matrix.
    pub fn pascal(depth: usize) -> Result<Self, Error> {
        F2Matrix::pascal(depth).map(Self::new)
    }

    pub fn anti_diagonal(depth: usize) -> Result<Self, Error> {
        F2Matrix::anti_diagonal(depth).map(Self::new)
    }

    pub fn depth(&self) -> usize {
        self.window.dim()
    }

    pub fn window(&self) -> &F2Matrix {
        &self.window
    }

    /// The shallower window `C^(k)`.
    pub fn truncate(&self, k: usize) -> Result<MatrixPrefix, Error> {
        self.window.prefix(k).map(Self::new)
    }
}

/// Common depth of a family of prefixes (the minimum).
pub(crate) fn common_depth(gens: &[MatrixPrefix]) -> Result<usize, Error> {
    gens.iter()
        .map(MatrixPrefix::depth)
        .min()
        .ok_or(Error::EmptyTuple)
}

/// The first `count` points of the digital sequence generated by `gens`,
/// truncated to `precision` digits.
///
/// Prefixes of different depth are cut to the smallest one, `d`. The result
/// equals the truncation of the infinite sequence as long as
/// `precision <= d` and `count <= 2^d`, which are the preconditions checked.
pub fn sequence_points(
    gens: &[MatrixPrefix],
    count: u64,
    precision: usize,
) -> Result<Vec<DyadicPoint>, Error> {
    let depth = common_depth(gens)?;
    if precision == 0 || precision > depth {
        return Err(Error::PrecisionExceedsDepth { precision, depth });
    }
    if depth < 64 && count > 1u64 << depth {
        return Err(Error::CountExceedsWindow { count, depth });
    }
    let windows = gens
        .iter()
        .map(|g| g.window.prefix(depth))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((0..count)
        .map(|n| DyadicPoint {
            coords: windows
                .iter()
                .map(|c| phi(c.mul_vec(n), depth).truncate(precision as u32))
                .collect(),
        })
        .collect())
}
