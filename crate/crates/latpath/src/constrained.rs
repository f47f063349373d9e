//! Partitions, path counting above a Ferrers diagram, and the derived
//! partition sequences behind the two unimodality statements this module
//! can test wholesale: the open conjecture (same λ at every position) and
//! the proved theorem (position-dependent λᵏ).
//!
//! T_{i,j}(λ) counts N/E paths from the origin to (i, j) whose vertices
//! (x, y) all satisfy x ≥ λ_{j−y}: the diagram of λ, drawn in the box's
//! upper-left corner, is off limits. A dynamic program over allowed cells
//! does the counting; the path enumerator ground-truths it in tests.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sequences::is_unimodal;

/// An integer partition: weakly decreasing positive parts. Reads past the
/// last part see zeros, so every partition behaves as an infinite
/// weakly-decreasing nonnegative sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!(
                "parts must be positive: {parts:?}"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of (positive) rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// λ_i, zero-extended past the last row.
    pub fn part(&self, i: usize) -> u64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Cellwise containment: every row of `other` fits inside this
    /// partition's row.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.rows()).all(|i| other.part(i) <= self.part(i))
    }
}

impl From<Partition> for Vec<u64> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl TryFrom<Vec<u64>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u64>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// Comma-separated parts; the empty partition prints as the empty string.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut sep = "";
        for p in &self.parts {
            write!(f, "{sep}{p}")?;
            sep = ",";
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|piece| {
                piece
                    .trim()
                    .parse::<u64>()
                    .map_err(|e| Error::InvalidPartition(format!("bad part {piece:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// |T_{i,j}(λ)| by dynamic programming: f(x,y) = f(x−1,y) + f(x,y−1) over
/// allowed cells, disallowed cells contributing 0. Negative targets and a
/// disallowed origin give 0.
pub fn count_constrained(i: i64, j: i64, lambda: &Partition) -> BigInt {
    if i < 0 || j < 0 {
        return BigInt::zero();
    }
    let allowed = |x: i64, y: i64| x >= lambda.part((j - y) as usize) as i64;
    // row holds f(·, y): overwrite ascending in x so row[x-1] is already
    // the current row when row[x] is formed.
    let mut row = vec![BigInt::zero(); i as usize + 1];
    for y in 0..=j {
        for x in 0..=i {
            let xi = x as usize;
            row[xi] = if !allowed(x, y) {
                BigInt::zero()
            } else if x == 0 && y == 0 {
                BigInt::one()
            } else {
                let from_west = if x > 0 {
                    row[xi - 1].clone()
                } else {
                    BigInt::zero()
                };
                let from_south = std::mem::take(&mut row[xi]);
                from_west + from_south
            };
        }
    }
    row[i as usize].clone()
}

/// The partition list λ⁰..λⁿ: first strip rows off the top one at a time
/// (indices up to ⌊n/2⌋), then, restarting from the ⌈n/2⌉-row strip, add
/// full-height columns one at a time. For even n the clauses agree at the
/// midpoint. A strip past the last row is the empty partition, and adding
/// columns to it changes nothing.
pub fn lambda_derived(lambda: &Partition, n: u64) -> Vec<Partition> {
    let half_down = (n / 2) as usize;
    let half_up = n.div_ceil(2) as usize;
    let strip = |rows: usize| -> Vec<u64> { lambda.parts[rows.min(lambda.rows())..].to_vec() };
    (0..=n as usize)
        .map(|idx| {
            let parts = if idx <= half_down {
                strip(idx)
            } else {
                let add = (idx - half_up) as u64;
                strip(half_up).into_iter().map(|p| p + add).collect()
            };
            Partition::new(parts).expect("row strips and column adds preserve partition shape")
        })
        .collect()
}

/// The conjectured-unimodal sequence: |T_{k,n−k}(λ)| for k = 0..n, with
/// the same λ at every position.
pub fn simion_sequence(lambda: &Partition, n: u64) -> Vec<BigInt> {
    let n = n as i64;
    (0..=n)
        .map(|k| count_constrained(k, n - k, lambda))
        .collect()
}

/// The proved-unimodal sequence: |T_{k,n−k}(λᵏ)| with λᵏ from
/// [`lambda_derived`].
pub fn sagan_sequence(lambda: &Partition, n: u64) -> Vec<BigInt> {
    let derived = lambda_derived(lambda, n);
    derived
        .iter()
        .enumerate()
        .map(|(k, lk)| count_constrained(k as i64, n as i64 - k as i64, lk))
        .collect()
}

/// All partitions with at most `max_rows` rows and parts at most
/// `max_part`, in lexicographic order on part lists.
pub fn partitions_in_box(max_part: u64, max_rows: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut parts: Vec<u64> = Vec::new();
    fn visit(parts: &mut Vec<u64>, max_part: u64, rows_left: u64, out: &mut Vec<Partition>) {
        out.push(Partition {
            parts: parts.clone(),
        });
        if rows_left == 0 {
            return;
        }
        let cap = parts.last().copied().unwrap_or(max_part);
        for p in 1..=cap {
            parts.push(p);
            visit(parts, max_part, rows_left - 1, out);
            parts.pop();
        }
    }
    visit(&mut parts, max_part, max_rows, &mut out);
    out
}

/// One sequence the scan found non-unimodal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanFailure {
    pub lambda: Partition,
    pub n: u64,
    #[serde(with = "crate::bigjson::vec")]
    pub sequence: Vec<BigInt>,
}

/// Result of an exhaustive conjecture scan: how many (λ, n) pairs were
/// checked and which failed. An empty failure list at any new size is one
/// more data point for the conjecture; a nonempty one would refute it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub checked: u64,
    pub failures: Vec<ScanFailure>,
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Test `is_unimodal(simion_sequence(λ, n))` for every λ in the
/// max_part × max_rows box and every n ≤ n_max, in deterministic order
/// (λ lexicographic, then n ascending).
pub fn scan_simion(max_part: u64, max_rows: u64, n_max: u64) -> ScanReport {
    let mut report = ScanReport {
        checked: 0,
        failures: Vec::new(),
    };
    for lambda in partitions_in_box(max_part, max_rows) {
        for n in 0..=n_max {
            let sequence = simion_sequence(&lambda, n);
            report.checked += 1;
            if !is_unimodal(&sequence) {
                report.failures.push(ScanFailure {
                    lambda: lambda.clone(),
                    n,
                    sequence,
                });
            }
        }
    }
    report
}
