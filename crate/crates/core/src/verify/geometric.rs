use alloc::vec;
use alloc::vec::Vec;

use crate::net::NetPoints;
use crate::Error;

use super::Compositions;

/// Default cap on `m` for the counting oracle.
pub const DEFAULT_GEOMETRIC_MAX_M: usize = 12;

/// The box `prod_i [a_i / 2^c_i, (a_i + 1) / 2^c_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElementaryInterval {
    pub shape: Vec<usize>,
    pub offsets: Vec<u64>,
}

impl ElementaryInterval {
    /// Volume as the exponent `sum c_i` of `2^-sum c_i`.
    pub fn volume_exponent(&self) -> usize {
        self.shape.iter().sum()
    }

    pub fn contains(&self, point: &[u64], m: usize) -> bool {
        self.shape
            .iter()
            .zip(&self.offsets)
            .zip(point)
            .all(|((&c, &a), &x)| x >> (m - c) == a)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalWitness {
    pub interval: ElementaryInterval,
    /// Number of points actually inside, always below `2^t`.
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometricVerdict {
    pub passed: bool,
    pub witness: Option<IntervalWitness>,
}

/// Counts points in every elementary interval of volume `2^(t-m)`.
///
/// Shapes are visited in lexicographic order and, within the first failing
/// shape, the witness is the lexicographically smallest interval holding
/// fewer than `2^t` points. Any miscount forces such an underfull interval,
/// since the counts of one shape always sum to `2^m`.
pub fn is_net_geometric(pts: &NetPoints, t: usize) -> Result<GeometricVerdict, Error> {
    is_net_geometric_capped(pts, t, DEFAULT_GEOMETRIC_MAX_M)
}

/// [`is_net_geometric`] with an explicit cap on `m`.
pub fn is_net_geometric_capped(
    pts: &NetPoints,
    t: usize,
    max_m: usize,
) -> Result<GeometricVerdict, Error> {
    let m = pts.m();
    if m > max_m {
        return Err(Error::TooLarge {
            what: "m",
            value: m,
            cap: max_m,
        });
    }
    if t > m {
        return Err(Error::TOutOfRange { t, m });
    }
    let level = m - t;
    let expected = 1u64 << t;
    let mut counts = vec![0u64; 1 << level];
    for shape in Compositions::new(level, pts.s()) {
        counts.iter_mut().for_each(|c| *c = 0);
        // Bucket key: leading digits of each coordinate, first axis most
        // significant, so key order is lexicographic order of offsets.
        for p in pts.iter() {
            let key = shape
                .iter()
                .zip(p)
                .fold(0u64, |key, (&c, &x)| (key << c) | (x >> (m - c)));
            counts[key as usize] += 1;
        }
        if let Some(key) = counts.iter().position(|&c| c < expected) {
            let mut offsets = vec![0u64; shape.len()];
            let mut rest = key as u64;
            for (o, &c) in offsets.iter_mut().zip(&shape).rev() {
                *o = rest & ((1u64 << c) - 1);
                rest >>= c;
            }
            return Ok(GeometricVerdict {
                passed: false,
                witness: Some(IntervalWitness {
                    interval: ElementaryInterval { shape, offsets },
                    count: counts[key],
                }),
            });
        }
    }
    Ok(GeometricVerdict {
        passed: true,
        witness: None,
    })
}
