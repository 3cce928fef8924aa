//! JSON verdicts shared by `check-net`, `check-seq` and `decompose`.

use f2net_core::characterize::Rejection;
use f2net_core::verify::{GeometricVerdict, SequenceReport};
use f2net_core::TReport;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Net,
    SequencePrefix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Composition {
        composition: Vec<usize>,
    },
    Interval {
        shape: Vec<usize>,
        offsets: Vec<u64>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub kind: Kind,
    pub m: usize,
    pub s: usize,
    /// The t-value tested against.
    pub t: usize,
    pub strength: usize,
    pub passed: bool,
    pub witness: Option<Witness>,
    pub checked_depths: Vec<usize>,
    /// Only set by `decompose`; `null` when the decomposition succeeds.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<Option<&'static str>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minor: Option<usize>,
}

impl Report {
    /// Verdict of the rank criterion at t-value `t`.
    pub fn net(r: &TReport, t: usize) -> Report {
        let passed = r.is_net_with_t(t);
        Report {
            kind: Kind::Net,
            m: r.m,
            s: r.s,
            t,
            strength: r.strength,
            passed,
            witness: if passed {
                None
            } else {
                r.witness
                    .clone()
                    .map(|composition| Witness::Composition { composition })
            },
            checked_depths: vec![r.m],
            reason: None,
            minor: None,
        }
    }

    /// Verdict of the counting oracle; `strength` still comes from the rank
    /// report.
    pub fn geometric(r: &TReport, t: usize, v: &GeometricVerdict) -> Report {
        Report {
            passed: v.passed,
            witness: v.witness.as_ref().map(|w| Witness::Interval {
                shape: w.interval.shape.clone(),
                offsets: w.interval.offsets.clone(),
            }),
            ..Report::net(r, t)
        }
    }

    /// Summary of a per-depth sequence check. `m` is the deepest window
    /// examined; strength and witness refer to the first failing depth, or
    /// to the deepest one when every depth passes.
    pub fn sequence(r: &SequenceReport, s: usize) -> Report {
        let decisive = r
            .first_failure()
            .or(r.depths.last())
            .expect("at least one depth is checked");
        Report {
            kind: Kind::SequencePrefix,
            m: r.max_depth,
            s,
            t: r.t,
            strength: decisive.report.strength,
            passed: r.certified(),
            witness: if decisive.passed {
                None
            } else {
                decisive
                    .report
                    .witness
                    .clone()
                    .map(|composition| Witness::Composition { composition })
            },
            checked_depths: r.depths.iter().map(|d| d.depth).collect(),
            reason: None,
            minor: None,
        }
    }

    /// A rank verdict at t = 0 extended with the decomposition outcome.
    pub fn decomposition(r: &TReport, rejection: Option<Rejection>) -> Report {
        Report {
            passed: rejection.is_none(),
            reason: Some(rejection.map(|x| x.name())),
            minor: rejection.and_then(|x| x.minor()),
            ..Report::net(r, 0)
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }
}
