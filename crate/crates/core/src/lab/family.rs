//! Parameter families of the congruence theorems and the claims built on them.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith::is_prime;
use crate::qseries::ColorParams;
use crate::report::{Expectation, Progression};

use super::LabError;

/// `(2j, 2i+1)`, `(free, 2i)` or `(2j+1, free)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Thm5Form {
    EvenOdd,
    EvenS,
    OddR,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Thm6Form {
    /// `(free, 2^k)`
    PowerS,
    /// `(free, 2^k i + 2^(k-1))`
    HalfOffsetS,
    /// `(2^(k+1) j + 2^k - 1, 2^k i + 1)`
    OddShift,
    /// `(2^(k+1) j + 2^k, 2^k i)`
    EvenShift,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Thm7Form {
    /// `(3(k-j) + 3, 3k + 6)`
    Base36,
    /// `(3(k-j) + 5, 3k + 1)`
    Base51,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Thm8Form {
    /// `(p(k-j) + p - 1, pk + p + 1)`, residues that are non-residues.
    NonResidue,
    /// `(p(k-j) + p - 1, pk + p)`, residues `r` with `r/2` a non-residue.
    HalfNonResidue,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Scheme {
    Direct { r: i64, s: i64 },
    Thm5 { form: Thm5Form, i: i64, j: i64, free: i64 },
    Thm6 { form: Thm6Form, k: u32, i: i64, j: i64, free: i64 },
    Thm7 { form: Thm7Form, k: i64, j: i64 },
    Thm8 { form: Thm8Form, p: u64, k: i64, j: i64 },
    Conjecture { k: u32, i: i64, j: i64 },
}

/// A scheme together with the color counts it resolves to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    scheme: Scheme,
    colors: ColorParams,
}

impl FamilyParams {
    pub fn new(scheme: Scheme) -> Result<Self, LabError> {
        let (r, s) = resolve(&scheme)?;
        let colors = ColorParams::new(r, s).map_err(|_| {
            LabError::InvalidFamily(format!("{scheme:?} resolves to r = {r}, s = {s}"))
        })?;
        Ok(Self { scheme, colors })
    }

    pub fn direct(r: i64, s: i64) -> Result<Self, LabError> {
        Self::new(Scheme::Direct { r, s })
    }

    pub fn scheme(&self) -> &Scheme {
        &self.scheme
    }

    pub fn colors(&self) -> ColorParams {
        self.colors
    }

    /// Family indices plus the resolved `r` and `s`.
    pub fn params(&self) -> BTreeMap<String, i64> {
        let mut m = BTreeMap::new();
        let mut put = |k: &str, v: i64| {
            m.insert(k.to_string(), v);
        };
        match self.scheme {
            Scheme::Direct { .. } => {}
            Scheme::Thm5 { form, i, j, .. } => match form {
                Thm5Form::EvenOdd => {
                    put("i", i);
                    put("j", j);
                }
                Thm5Form::EvenS => put("i", i),
                Thm5Form::OddR => put("j", j),
            },
            Scheme::Thm6 { form, k, i, j, .. } => {
                put("k", k as i64);
                match form {
                    Thm6Form::PowerS => {}
                    Thm6Form::HalfOffsetS => put("i", i),
                    Thm6Form::OddShift | Thm6Form::EvenShift => {
                        put("i", i);
                        put("j", j);
                    }
                }
            }
            Scheme::Thm7 { k, j, .. } => {
                put("k", k);
                put("j", j);
            }
            Scheme::Thm8 { p, k, j, .. } => {
                put("p", p as i64);
                put("k", k);
                put("j", j);
            }
            Scheme::Conjecture { k, i, j } => {
                put("k", k as i64);
                put("i", i);
                put("j", j);
            }
        }
        put("r", self.colors.r() as i64);
        put("s", self.colors.s() as i64);
        m
    }
}

fn need(cond: bool, what: &str) -> Result<(), LabError> {
    if cond {
        Ok(())
    } else {
        Err(LabError::InvalidFamily(what.to_string()))
    }
}

fn resolve(scheme: &Scheme) -> Result<(i64, i64), LabError> {
    Ok(match *scheme {
        Scheme::Direct { r, s } => (r, s),
        Scheme::Thm5 { form, i, j, free } => match form {
            Thm5Form::EvenOdd => (2 * j, 2 * i + 1),
            Thm5Form::EvenS => (free, 2 * i),
            Thm5Form::OddR => (2 * j + 1, free),
        },
        Scheme::Thm6 { form, k, i, j, free } => {
            need(k >= 1, "k >= 1")?;
            let pk = 1i64 << k;
            match form {
                Thm6Form::PowerS => (free, pk),
                Thm6Form::HalfOffsetS => (free, pk * i + pk / 2),
                Thm6Form::OddShift => (2 * pk * j + pk - 1, pk * i + 1),
                Thm6Form::EvenShift => (2 * pk * j + pk, pk * i),
            }
        }
        Scheme::Thm7 { form, k, j } => {
            need(k >= j && j >= 0, "k >= j >= 0")?;
            match form {
                Thm7Form::Base36 => (3 * (k - j) + 3, 3 * k + 6),
                Thm7Form::Base51 => (3 * (k - j) + 5, 3 * k + 1),
            }
        }
        Scheme::Thm8 { form, p, k, j } => {
            need(k >= j && j >= 0, "k >= j >= 0")?;
            if p < 3 || !is_prime(p) {
                return Err(LabError::NotOddPrime(p));
            }
            let p = p as i64;
            match form {
                Thm8Form::NonResidue => (p * (k - j) + p - 1, p * k + p + 1),
                Thm8Form::HalfNonResidue => (p * (k - j) + p - 1, p * k + p),
            }
        }
        Scheme::Conjecture { k, i, j } => {
            need(k >= 1 && i >= 0 && j >= 0, "k >= 1 and i, j >= 0")?;
            let pk = 1i64 << k;
            (2 * pk * j + pk - 1, pk * i + 1)
        }
    })
}

/// Which counting function a claim is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CountingFunction {
    /// `abar_{r,s}(n)`, overlined.
    Overcolored,
    /// `a_{r,s}(n)`, plain.
    Colored,
}

/// `f(step*n + residue) = 0 (mod modulus)` for every index at least `start`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceClaim {
    /// Equation tag, e.g. `"1.53"`.
    pub label: String,
    pub family: FamilyParams,
    pub function: CountingFunction,
    pub progression: Progression,
    pub modulus: u64,
    /// Smallest coefficient index checked.
    pub start: u64,
    pub expectation: Expectation,
    pub note: Option<String>,
}

impl CongruenceClaim {
    pub fn new(label: &str, family: FamilyParams, step: u64, residue: u64, modulus: u64) -> Self {
        Self {
            label: label.to_string(),
            family,
            function: CountingFunction::Overcolored,
            progression: Progression::new(step, residue),
            modulus,
            start: 0,
            expectation: Expectation::Holds,
            note: None,
        }
    }

    /// Only indices `>= start` are checked.
    pub fn starting_at(mut self, start: u64) -> Self {
        self.start = start;
        self
    }

    pub fn expecting(mut self, e: Expectation) -> Self {
        self.expectation = e;
        self
    }

    pub fn with_note(mut self, note: &str) -> Self {
        self.note = Some(note.to_string());
        self
    }

    pub fn for_function(mut self, f: CountingFunction) -> Self {
        self.function = f;
        self
    }

    /// Series order needed to reach progression index `n_max`.
    pub fn required_order(&self, n_max: u64) -> usize {
        (self.progression.at(n_max) + 1) as usize
    }

    pub fn describe(&self) -> String {
        let f = match self.function {
            CountingFunction::Overcolored => "abar",
            CountingFunction::Colored => "a",
        };
        let c = self.family.colors();
        format!(
            "{f}_{{{},{}}}({}n+{}) = 0 mod {}",
            c.r(),
            c.s(),
            self.progression.step,
            self.progression.residue,
            self.modulus
        )
    }
}
