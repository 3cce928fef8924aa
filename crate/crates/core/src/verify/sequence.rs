use alloc::vec::Vec;

use crate::net::{common_depth, GeneratorTuple, MatrixPrefix};
use crate::{Error, F2Matrix};

use super::{strength_by_rank, TReport};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthVerdict {
    pub depth: usize,
    /// Rank report for `(J_depth, C_1^(depth), ..., C_s^(depth))`.
    pub report: TReport,
    pub passed: bool,
}

/// Per-depth results of [`check_sequence_prefix`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceReport {
    pub t: usize,
    pub max_depth: usize,
    pub depths: Vec<DepthVerdict>,
}

impl SequenceReport {
    /// All examined depths pass. This certifies the (t,s)-sequence property
    /// only up to `max_depth`.
    pub fn certified(&self) -> bool {
        self.depths.iter().all(|d| d.passed)
    }

    pub fn first_failure(&self) -> Option<&DepthVerdict> {
        self.depths.iter().find(|d| !d.passed)
    }
}

/// Checks `(J_m, C_1^(m), ..., C_s^(m))` against t-value `t` for each
/// `m = 1..=max_depth`.
///
/// The generators define a (t,s)-sequence iff this holds for every `m`, so
/// the report is a certificate up to `max_depth` and a definitive rejection
/// at any failing depth.
pub fn check_sequence_prefix(
    gens: &[MatrixPrefix],
    max_depth: usize,
    t: usize,
) -> Result<SequenceReport, Error> {
    let depth = common_depth(gens)?;
    if max_depth == 0 || max_depth > depth {
        return Err(Error::PrefixOutOfRange {
            k: max_depth,
            dim: depth,
        });
    }
    let mut depths = Vec::with_capacity(max_depth);
    for m in 1..=max_depth {
        let mut matrices = Vec::with_capacity(gens.len() + 1);
        matrices.push(F2Matrix::anti_diagonal(m)?);
        for g in gens {
            matrices.push(g.window().prefix(m)?);
        }
        let report = strength_by_rank(&GeneratorTuple::new(matrices)?);
        depths.push(DepthVerdict {
            depth: m,
            passed: report.is_net_with_t(t),
            report,
        });
    }
    Ok(SequenceReport {
        t,
        max_depth,
        depths,
    })
}
