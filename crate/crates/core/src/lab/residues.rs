//! Legendre symbols and modular inverses.

use num_integer::Integer;

use crate::arith::is_prime;

use super::LabError;

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % m as u128) as u64;
        }
        base = (base as u128 * base as u128 % m as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Legendre symbol `(a / p)` for an odd prime `p`, by Euler's criterion.
pub fn legendre(a: i64, p: u64) -> Result<i8, LabError> {
    if p == 2 || !is_prime(p) {
        return Err(LabError::NotOddPrime(p));
    }
    let a = a.rem_euclid(p as i64) as u64;
    match pow_mod(a, (p - 1) / 2, p) {
        0 => Ok(0),
        1 => Ok(1),
        x if x == p - 1 => Ok(-1),
        x => unreachable!("Euler's criterion gave {x} mod prime {p}"),
    }
}

/// Inverse of `a` modulo `m`, in `[0, m)`.
pub fn mod_inverse(a: i64, m: u64) -> Result<u64, LabError> {
    let mi = m as i64;
    let g = a.rem_euclid(mi).extended_gcd(&mi);
    if m < 2 || g.gcd != 1 {
        return Err(LabError::NotInvertible { a, m });
    }
    Ok(g.x.rem_euclid(mi) as u64)
}

/// Quadratic non-residues in `1..p`.
pub fn non_residues(p: u64) -> Result<Vec<u64>, LabError> {
    (1..p)
        .filter_map(|r| match legendre(r as i64, p) {
            Ok(-1) => Some(Ok(r)),
            Ok(_) => None,
            Err(e) => Some(Err(e)),
        })
        .collect()
}

/// Residues `r` in `1..p` with `2^{-1} r` a non-residue.
pub fn half_non_residues(p: u64) -> Result<Vec<u64>, LabError> {
    let half = mod_inverse(2, p)?;
    let mut out = Vec::new();
    for r in 1..p {
        if legendre((half * r % p) as i64, p)? == -1 {
            out.push(r);
        }
    }
    Ok(out)
}
