//! Positional decimal expansions of sums `Σ rᵢ·√kᵢ` at arbitrary precision.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

fn pow10(n: usize) -> BigInt {
    num_traits::pow(BigInt::from(10), n)
}

fn digit_count(n: &BigInt) -> usize {
    if n.is_zero() {
        0
    } else {
        n.abs().to_str_radix(10).len()
    }
}

/// Decimal string of `±Σ rᵢ·√kᵢ` with `sig` significant digits.
///
/// `terms` must sum to a positive value; `negative` selects the sign. Each
/// `√k` is truncated at working precision `W`, so the scaled sum is low by at
/// most `Σ|rᵢ| + 1` units; `W` is raised until that error sits well below the
/// last retained digit.
pub(crate) fn decimal_from_terms(negative: bool, terms: &[(BigRational, u64)], sig: usize) -> String {
    let sig = sig.max(1);
    let err_bound: BigRational = terms.iter().map(|(r, _)| r.abs()).sum::<BigRational>() + BigRational::from_integer(1.into());
    let guard = digit_count(&err_bound.ceil().to_integer()) + 4;
    let mut work = sig + guard + 8;
    let scaled = loop {
        let scale = pow10(work);
        let mut acc = BigRational::zero();
        for (r, k) in terms {
            if r.is_zero() {
                continue;
            }
            let root = if *k == 1 {
                scale.clone()
            } else {
                (BigInt::from(*k) * &scale * &scale).sqrt()
            };
            acc += r * BigRational::from_integer(root);
        }
        let v = acc.floor().to_integer();
        let len = digit_count(&v);
        if len >= sig + guard {
            break v;
        }
        work += (sig + guard).saturating_sub(len) + 2;
    };

    // Round half up to `sig` digits.
    let len = digit_count(&scaled);
    let drop = len - sig;
    let (q, _) = (&scaled + BigInt::from(5) * pow10(drop) / BigInt::from(10)).div_rem(&pow10(drop));
    let mut digits = q.to_str_radix(10);
    let mut exp = drop as i64 - work as i64;
    if digits.len() > sig {
        digits.pop();
        exp += 1;
    }
    place_point(negative, &digits, exp)
}

/// Renders `digits × 10^exp`, trimming trailing fractional zeros.
fn place_point(negative: bool, digits: &str, exp: i64) -> String {
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if exp >= 0 {
        out.push_str(digits);
        out.extend(std::iter::repeat_n('0', exp as usize));
        return out;
    }
    let frac_len = (-exp) as usize;
    let (int_part, frac_part) = if digits.len() > frac_len {
        let split = digits.len() - frac_len;
        (digits[..split].to_string(), digits[split..].to_string())
    } else {
        let pad = "0".repeat(frac_len - digits.len());
        ("0".to_string(), format!("{pad}{digits}"))
    };
    let frac_trimmed = frac_part.trim_end_matches('0');
    out.push_str(&int_part);
    if !frac_trimmed.is_empty() {
        out.push('.');
        out.push_str(frac_trimmed);
    }
    out
}

/// `r·√k` as a decimal with `sig` significant digits.
pub fn rational_times_sqrt(r: &BigRational, k: u64, sig: usize) -> String {
    if r.is_zero() || k == 0 {
        return "0".to_string();
    }
    let negative = r.is_negative();
    decimal_from_terms(negative, &[(r.abs(), k)], sig)
}
