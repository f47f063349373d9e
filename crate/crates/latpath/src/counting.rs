//! Exact closed-form counts for two-step and four-step families, and the
//! binomial-product sequences built from them. All arithmetic is
//! arbitrary-precision; parity or range mismatches count as empty families
//! (0), never as errors, so the sequence builders stay total.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Binomial coefficient with the zero convention: C(n, m) = 0 when m < 0
/// or m > n. Negative n is a caller error.
///
/// Computed by the multiplicative formula; every intermediate division is
/// exact because each prefix product is itself a binomial coefficient.
pub fn binomial(n: i64, m: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::NegativeBinomial { n });
    }
    if m < 0 || m > n {
        return Ok(BigInt::zero());
    }
    let m = m.min(n - m);
    let mut acc = BigInt::one();
    for t in 1..=m {
        acc = acc * (n - m + t) / t;
    }
    Ok(acc)
}

/// Trinomial (multinomial) coefficient n! / (a! b! c!) when a, b, c >= 0
/// and a + b + c = n; 0 otherwise.
pub fn trinomial(n: i64, a: i64, b: i64, c: i64) -> BigInt {
    if a < 0 || b < 0 || c < 0 || a + b + c != n {
        return BigInt::zero();
    }
    // n = a + b + c >= 0 here, so neither binomial can fail.
    binomial(n, a).unwrap() * binomial(n - a, b).unwrap()
}

/// |T_{i,j}|: N/E paths from the origin to (i, j).
pub fn count_two_step(i: i64, j: i64) -> BigInt {
    if i < 0 || j < 0 {
        return BigInt::zero();
    }
    binomial(i + j, i).unwrap()
}

/// Splits an endpoint/length triple into the S-step and W-step counts
/// (r, s) a walk must use: r south steps, s west steps... more precisely
/// r = (n-i-j)/2 counts one matched pair. None on parity mismatch or n < 0.
fn four_step_split(i: i64, j: i64, n: i64) -> Option<(i64, i64)> {
    if n < 0 || (n - i - j) % 2 != 0 {
        return None;
    }
    Some(((n - i - j) / 2, (n + i - j) / 2))
}

/// |F_{i,j}(n)|: four-step walks of length n from the origin to (i, j),
/// which is C(n,r)·C(n,s) with r = (n−i−j)/2, s = (n+i−j)/2, and 0 when
/// n and i+j disagree mod 2.
pub fn count_four_step(i: i64, j: i64, n: i64) -> BigInt {
    match four_step_split(i, j, n) {
        Some((r, s)) => binomial(n, r).unwrap() * binomial(n, s).unwrap(),
        None => BigInt::zero(),
    }
}

/// |F⁺_{i,j}(n)|: four-step walks confined to the upper half-plane y >= 0.
/// For j >= 0 this is C(n,r)C(n,s) − C(n,r−1)C(n,s−1) (walks that dip to
/// y = −1 reflect to walks ending at (i, −2−j)); for j < 0 the family is
/// empty, where the raw difference would go negative.
pub fn count_four_step_upper(i: i64, j: i64, n: i64) -> BigInt {
    if j < 0 {
        return BigInt::zero();
    }
    match four_step_split(i, j, n) {
        Some((r, s)) => {
            binomial(n, r).unwrap() * binomial(n, s).unwrap()
                - binomial(n, r - 1).unwrap() * binomial(n, s - 1).unwrap()
        }
        None => BigInt::zero(),
    }
}

/// The sequence C(n, l−k)·C(n, k) for k = 0..l. Term k equals
/// |F_{−l+2k, n−l}(n)|, so the sequence records four-step counts along a
/// fixed anti-diagonal of endpoints.
pub fn product_sequence(n: u64, l: u64) -> Vec<BigInt> {
    let (n, l) = (n as i64, l as i64);
    (0..=l)
        .map(|k| binomial(n, l - k).unwrap() * binomial(n, k).unwrap())
        .collect()
}

/// The upper-half-plane companion of [`product_sequence`]: term k is
/// |F⁺_{−l+2k, n−l}(n)|. For l <= n this equals the literal difference
/// C(n,l−k)C(n,k) − C(n,l−k−1)C(n,k−1); for l > n the endpoints lie below
/// the axis and every term is 0.
pub fn upper_product_sequence(n: u64, l: u64) -> Vec<BigInt> {
    let (n, l) = (n as i64, l as i64);
    (0..=l)
        .map(|k| count_four_step_upper(-l + 2 * k, n - l, n))
        .collect()
}
