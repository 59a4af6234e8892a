//! Combinatorial counts of colored (over)partitions by direct dynamic
//! programming, plus an exhaustive enumerator for tiny `n`.
//!
//! Nothing here touches the series engine: counts are plain `BigInt`
//! vectors, so agreement with the eta-quotient route is a real check.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::qseries::ColorParams;

/// Default largest `n` accepted by [`enumerate_small`].
pub const ENUMERATION_CAP: u64 = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("n = {n} exceeds the enumeration cap {cap}")]
    TooLarge { n: u64, cap: u64 },
}

fn colors_for(p: ColorParams, size: usize) -> u64 {
    if size.is_multiple_of(2) {
        p.r()
    } else {
        p.s()
    }
}

/// `abar_{r,s}(0..order)` by multiplying in `(1 + q^d)/(1 - q^d)` once per
/// color class of each part size `d`.
pub fn count_overcolored(p: ColorParams, order: usize) -> Vec<BigInt> {
    let sizes: Vec<usize> = (1..order).collect();
    count_overcolored_in_order(p, order, &sizes)
}

/// [`count_overcolored`] with part sizes applied in the given order.
pub fn count_overcolored_in_order(p: ColorParams, order: usize, sizes: &[usize]) -> Vec<BigInt> {
    let mut c = unit(order);
    for &d in sizes {
        for _ in 0..colors_for(p, d) {
            // 1/(1 - q^d)
            for n in d..order {
                let prev = c[n - d].clone();
                c[n] += prev;
            }
            // (1 + q^d)
            for n in (d..order).rev() {
                let prev = c[n - d].clone();
                c[n] += prev;
            }
        }
    }
    c
}

/// `a_{r,s}(0..order)`: one factor `1/(1 - q^d)` per color class.
pub fn count_colored(p: ColorParams, order: usize) -> Vec<BigInt> {
    let mut c = unit(order);
    for d in 1..order {
        for _ in 0..colors_for(p, d) {
            for n in d..order {
                let prev = c[n - d].clone();
                c[n] += prev;
            }
        }
    }
    c
}

fn unit(order: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); order];
    if let Some(first) = c.first_mut() {
        *first = BigInt::one();
    }
    c
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Part {
    pub size: u64,
    /// 1-based color index.
    pub color: u64,
    pub overlined: bool,
}

/// An overlined colored partition. Within each `(size, color)` class at most
/// one part carries the overline.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OvercoloredPartition {
    parts: Vec<Part>,
}

impl OvercoloredPartition {
    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn total(&self) -> u64 {
        self.parts.iter().map(|p| p.size).sum()
    }

    /// Checks the color range and one-overline-per-class rule.
    pub fn is_valid_for(&self, p: ColorParams) -> bool {
        let colors_ok = self
            .parts
            .iter()
            .all(|x| x.size >= 1 && x.color >= 1 && x.color <= colors_for(p, x.size as usize));
        let mut overlined: Vec<(u64, u64)> = self
            .parts
            .iter()
            .filter(|x| x.overlined)
            .map(|x| (x.size, x.color))
            .collect();
        let n = overlined.len();
        overlined.sort_unstable();
        overlined.dedup();
        colors_ok && overlined.len() == n
    }
}

const SUBSCRIPTS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let color: String = self
            .color
            .to_string()
            .chars()
            .map(|d| SUBSCRIPTS[d.to_digit(10).unwrap() as usize])
            .collect();
        write!(f, "{}{}{}", self.size, color, if self.overlined { "'" } else { "" })
    }
}

impl fmt::Display for OvercoloredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.parts.iter().map(Part::to_string).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Every overlined colored partition of `n`, with the default cap.
pub fn enumerate_small(p: ColorParams, n: u64) -> Result<Vec<OvercoloredPartition>, OracleError> {
    enumerate_with_cap(p, n, ENUMERATION_CAP)
}

pub fn enumerate_with_cap(p: ColorParams, n: u64, cap: u64) -> Result<Vec<OvercoloredPartition>, OracleError> {
    if n > cap {
        return Err(OracleError::TooLarge { n, cap });
    }
    // classes in display order: larger sizes first, then color
    let classes: Vec<(u64, u64)> = (1..=n)
        .rev()
        .flat_map(|d| (1..=colors_for(p, d as usize)).map(move |c| (d, c)))
        .collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(&classes, 0, n, &mut current, &mut out);
    Ok(out)
}

fn fill(
    classes: &[(u64, u64)],
    idx: usize,
    remaining: u64,
    current: &mut Vec<Part>,
    out: &mut Vec<OvercoloredPartition>,
) {
    if remaining == 0 {
        out.push(OvercoloredPartition { parts: current.clone() });
        return;
    }
    let Some(&(size, color)) = classes.get(idx) else {
        return;
    };
    let plain = Part { size, color, overlined: false };
    for k in (1..=remaining / size).rev() {
        for overlined in [true, false] {
            let mark = current.len();
            if overlined {
                current.push(Part { overlined: true, ..plain });
                current.extend(std::iter::repeat_n(plain, k as usize - 1));
            } else {
                current.extend(std::iter::repeat_n(plain, k as usize));
            }
            fill(classes, idx + 1, remaining - k * size, current, out);
            current.truncate(mark);
        }
    }
    fill(classes, idx + 1, remaining, current, out);
}
