//! Square-class bookkeeping for the mod 4 and mod 8 residue tables.

use serde::{Deserialize, Serialize};

use crate::arith::{exact_sqrt, isqrt};

/// Which of the quadratic shapes `n` takes, with witnesses.
///
/// Witnesses are non-negative; `rep_count` counts ordered pairs
/// `(k, l)` with `k, l >= 1` and `k^2 + 2 l^2 = n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NSquareClassification {
    pub n: u64,
    /// `n = k^2`.
    pub square: Option<u64>,
    /// `n = 2 k^2`.
    pub twice_square: Option<u64>,
    /// `n = 2 (2k)^2`.
    pub twice_even_square: Option<u64>,
    /// `n = 2 (2k - 1)^2`, `k >= 1`.
    pub twice_odd_square: Option<u64>,
    /// `n = 4 k^2`.
    pub four_times_square: Option<u64>,
    pub rep_count: u64,
}

impl NSquareClassification {
    pub fn is_square(&self) -> bool {
        self.square.is_some()
    }

    pub fn is_twice_square(&self) -> bool {
        self.twice_square.is_some()
    }

    pub fn is_twice_even_square(&self) -> bool {
        self.twice_even_square.is_some()
    }

    pub fn is_twice_odd_square(&self) -> bool {
        self.twice_odd_square.is_some()
    }

    pub fn is_four_times_square(&self) -> bool {
        self.four_times_square.is_some()
    }

    pub fn is_sum_square_twice_square(&self) -> bool {
        self.rep_count > 0
    }

    /// Number of mod-8 table rows that apply (square, `2(2k)^2`,
    /// `2(2k-1)^2`, `4k^2`, `k^2 + 2l^2`).
    pub fn mod8_case_count(&self) -> usize {
        [
            self.is_square(),
            self.is_twice_even_square(),
            self.is_twice_odd_square(),
            self.is_four_times_square(),
            self.is_sum_square_twice_square(),
        ]
        .iter()
        .filter(|&&b| b)
        .count()
    }
}

pub fn classify_n(n: u64) -> NSquareClassification {
    let square = exact_sqrt(n);
    let twice_square = if n.is_multiple_of(2) { exact_sqrt(n / 2) } else { None };
    let twice_even_square = twice_square.filter(|k| k % 2 == 0).map(|k| k / 2);
    let twice_odd_square = twice_square.filter(|k| k % 2 == 1).map(|k| k.div_ceil(2));
    let four_times_square = if n.is_multiple_of(4) { exact_sqrt(n / 4) } else { None };
    let mut rep_count = 0;
    for k in 1..=isqrt(n) {
        let rest = n - k * k;
        if rest >= 2 && rest.is_multiple_of(2) && exact_sqrt(rest / 2).is_some_and(|l| l >= 1) {
            rep_count += 1;
        }
    }
    NSquareClassification {
        n,
        square,
        twice_square,
        twice_even_square,
        twice_odd_square,
        four_times_square,
        rep_count,
    }
}
