use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::net::NetPoints;
use crate::Error;

/// Largest `m` accepted by [`l2_star_discrepancy`] (the formula is
/// quadratic in the number of points).
pub const MAX_DISCREPANCY_M: usize = 16;

/// Exact squared L2 star discrepancy as `numerator / denominator`, in
/// lowest terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct L2Discrepancy {
    numerator: BigInt,
    denominator: BigInt,
}

impl L2Discrepancy {
    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    /// True iff the value equals `p / q`.
    pub fn equals_ratio(&self, p: i64, q: i64) -> bool {
        &self.numerator * BigInt::from(q) == &self.denominator * BigInt::from(p)
    }

    /// The squared discrepancy rounded to the nearest `f64`.
    pub fn squared(&self) -> f64 {
        if self.numerator.is_zero() {
            return 0.0;
        }
        let (num, den) = (self.numerator.magnitude(), self.denominator.magnitude());
        let shift = (den.bits() + 64).saturating_sub(num.bits());
        let q = (num << shift) / den;
        let mut value = q.to_f64().unwrap_or(f64::INFINITY);
        let mut rest = shift;
        while rest > 0 {
            let step = rest.min(512);
            value *= f64::from_bits((1023 - step) << 52);
            rest -= step;
        }
        value
    }
}

/// Warnock's closed form for the squared L2 star discrepancy:
///
/// `3^-s - 2/N sum_n prod_i (1 - x_ni^2)/2 + 1/N^2 sum_{n,n'} prod_i (1 - max(x_ni, x_n'i))`
///
/// evaluated exactly on the dyadic coordinates.
pub fn l2_star_discrepancy(pts: &NetPoints) -> Result<L2Discrepancy, Error> {
    let m = pts.m();
    if m > MAX_DISCREPANCY_M {
        return Err(Error::TooLarge {
            what: "m",
            value: m,
            cap: MAX_DISCREPANCY_M,
        });
    }
    let s = pts.s();
    // Coordinates are k / R with R = N = 2^m.
    let r = 1u128 << m;
    let fits_u128 = s * (2 * m) + m < 127 && s * m + 2 * m < 127;

    let (sum_sq, sum_max) = if fits_u128 {
        let mut sum_sq = 0u128;
        let mut sum_max = 0u128;
        for (n, p) in pts.iter().enumerate() {
            sum_sq += p
                .iter()
                .map(|&k| r * r - u128::from(k) * u128::from(k))
                .product::<u128>();
            sum_max += p.iter().map(|&k| r - u128::from(k)).product::<u128>();
            for q in pts.iter().skip(n + 1) {
                let prod: u128 = p
                    .iter()
                    .zip(q)
                    .map(|(&a, &b)| r - u128::from(a.max(b)))
                    .product();
                sum_max += 2 * prod;
            }
        }
        (BigUint::from(sum_sq), BigUint::from(sum_max))
    } else {
        let mut sum_sq = BigUint::zero();
        let mut sum_max = BigUint::zero();
        for (n, p) in pts.iter().enumerate() {
            sum_sq += p.iter().fold(BigUint::one(), |acc, &k| {
                acc * BigUint::from(r * r - u128::from(k) * u128::from(k))
            });
            let mut row = p.iter().fold(BigUint::one(), |acc, &k| {
                acc * BigUint::from(r - u128::from(k))
            });
            for q in pts.iter().skip(n + 1) {
                let prod = p.iter().zip(q).fold(BigUint::one(), |acc, (&a, &b)| {
                    acc * BigUint::from(r - u128::from(a.max(b)))
                });
                row += prod << 1u32;
            }
            sum_max += row;
        }
        (sum_sq, sum_max)
    };

    // term2 = sum_sq / 2^e2 with 2^e2 = N (2 R^2)^s / 2, term3 = sum_max / 2^e3.
    let e2 = m + s * (2 * m + 1) - 1;
    let e3 = 2 * m + s * m;
    let e = e2.max(e3);
    let three_s = BigInt::from(3u8).pow(s as u32);
    let dyadic_part = BigInt::from(sum_max << (e - e3)) - BigInt::from(sum_sq << (e - e2));
    let numerator = (BigInt::one() << e) + &three_s * dyadic_part;
    let denominator = three_s << e;
    let g = numerator.gcd(&denominator);
    Ok(L2Discrepancy {
        numerator: numerator / &g,
        denominator: denominator / g,
    })
}
