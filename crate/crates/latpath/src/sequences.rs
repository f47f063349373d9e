//! Unimodality, log-concavity, and q-unimodality predicates over exact
//! integer (and polynomial) sequences. All comparisons are weak, so
//! plateaus never disqualify a sequence, and negative terms are compared
//! by the same inequality chains as positive ones.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::qpoly::{poly_leq, QPolynomial};

/// True iff some index m has s_0 <= ... <= s_m >= s_{m+1} >= ... .
/// Equivalently: no strict ascent after the first strict descent. Empty
/// and singleton sequences qualify.
pub fn is_unimodal(s: &[BigInt]) -> bool {
    let mut descended = false;
    for w in s.windows(2) {
        if w[0] > w[1] {
            descended = true;
        } else if descended && w[0] < w[1] {
            return false;
        }
    }
    true
}

/// True iff s_{i−1}·s_{i+1} <= s_i² at every interior index. Sequences
/// with fewer than three terms qualify vacuously.
pub fn is_log_concave(s: &[BigInt]) -> bool {
    s.windows(3).all(|w| &w[0] * &w[2] <= &w[1] * &w[1])
}

/// All indices attaining the maximum term. Errors on the empty sequence,
/// which has no maximum.
pub fn mode_indices(s: &[BigInt]) -> Result<Vec<usize>> {
    let max = s.iter().max().ok_or(Error::EmptySequence)?;
    Ok(s.iter()
        .enumerate()
        .filter(|(_, t)| *t == max)
        .map(|(k, _)| k)
        .collect())
}

/// Unimodality with the coefficientwise order in place of <=: true iff a
/// single index m has s_0 <=_q ... <=_q s_m >=_q ... . Per-coefficient
/// unimodality alone is NOT enough — the peak must be common — so this
/// tries every candidate m directly.
pub fn is_q_unimodal(s: &[QPolynomial]) -> bool {
    if s.len() <= 1 {
        return true;
    }
    (0..s.len()).any(|m| {
        s[..m].iter().zip(&s[1..=m]).all(|(a, b)| poly_leq(a, b))
            && s[m..].iter().zip(&s[m + 1..]).all(|(a, b)| poly_leq(b, a))
    })
}
