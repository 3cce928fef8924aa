use crate::matrix::EchelonBasis;
use crate::net::GeneratorTuple;

use super::{Compositions, TReport};

/// Rank test for one composition: the first `d_j` rows of each `C_j`,
/// stacked, must be linearly independent.
pub fn composition_has_full_rank(gen: &GeneratorTuple, composition: &[usize]) -> bool {
    assert_eq!(
        composition.len(),
        gen.s(),
        "composition length must equal s"
    );
    let mut basis = EchelonBasis::new();
    gen.matrices()
        .iter()
        .zip(composition)
        .all(|(c, &d)| d <= c.dim() && c.rows()[..d].iter().all(|&r| basis.insert(r)))
}

fn first_failing(gen: &GeneratorTuple, k: usize) -> Option<alloc::vec::Vec<usize>> {
    Compositions::new(k, gen.s()).find(|c| !composition_has_full_rank(gen, c))
}

fn report(gen: &GeneratorTuple, strength: usize) -> TReport {
    let m = gen.m();
    TReport {
        m,
        s: gen.s(),
        strength,
        t_value: m - strength,
        witness: (strength < m).then(|| {
            first_failing(gen, strength + 1)
                .expect("a failing composition exists above the strength")
        }),
    }
}

/// Strength and t-value of the digital net generated by `gen`.
///
/// Rows are fed into one incremental echelon basis in composition order
/// (all of `C_1`'s chosen rows, then `C_2`'s, ...), sharing the elimination
/// across every composition with a common prefix. The first row found
/// dependent at total row count `k` shows that some composition of `k` fails,
/// and every failing composition produces such an event at or below its own
/// size, so the strength is one less than the smallest event.
pub fn strength_by_rank(gen: &GeneratorTuple) -> TReport {
    let m = gen.m();
    let mut smallest_failure = m + 1;
    search(gen, 0, &EchelonBasis::new(), 0, &mut smallest_failure);
    report(gen, smallest_failure - 1)
}

fn search(
    gen: &GeneratorTuple,
    j: usize,
    basis: &EchelonBasis,
    used: usize,
    smallest_failure: &mut usize,
) {
    let rows = gen.matrices()[j].rows();
    let last = j + 1 == gen.s();
    let mut basis = basis.clone();
    let mut taken = 0;
    loop {
        if !last {
            search(gen, j + 1, &basis, used + taken, smallest_failure);
        }
        let k = used + taken + 1;
        if k >= *smallest_failure {
            return;
        }
        if !basis.insert(rows[taken]) {
            *smallest_failure = k;
            return;
        }
        taken += 1;
    }
}

/// Reference implementation of [`strength_by_rank`]: tests every
/// composition of every level from scratch.
pub fn strength_by_rank_naive(gen: &GeneratorTuple) -> TReport {
    let m = gen.m();
    let strength = (1..=m)
        .find(|&k| first_failing(gen, k).is_some())
        .map_or(m, |k| k - 1);
    report(gen, strength)
}
