//! Checking congruence claims against generating-function coefficients.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use crate::qseries::{gf_colored, gf_overcolored, ColorParams};
use crate::report::{Counterexample, NRange, VerificationReport};
use crate::ring::ResidueRing;
use crate::series::ModSeries;

use super::family::{CongruenceClaim, CountingFunction};

type Key = (CountingFunction, ColorParams, u64);

/// Generating functions reduced modulo `M`, shared between claims.
///
/// A lookup returns a series of at least the requested order; a longer one
/// already in the cache is reused.
#[derive(Default)]
pub struct SeriesCache {
    inner: Mutex<HashMap<Key, Arc<ModSeries>>>,
}

impl SeriesCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, function: CountingFunction, p: ColorParams, modulus: u64, order: usize) -> Arc<ModSeries> {
        let key = (function, p, modulus);
        if let Some(s) = self.inner.lock().unwrap().get(&key) {
            if s.order() >= order {
                return Arc::clone(s);
            }
        }
        let ring = ResidueRing::new(modulus).expect("claim moduli are validated");
        let built = Arc::new(match function {
            CountingFunction::Overcolored => gf_overcolored(p, order, &ring),
            CountingFunction::Colored => gf_colored(p, order, &ring),
        });
        let mut map = self.inner.lock().unwrap();
        let entry = map.entry(key).or_insert_with(|| Arc::clone(&built));
        if entry.order() < built.order() {
            *entry = Arc::clone(&built);
        }
        built
    }

    pub fn len(&self) -> usize {
        self.inner.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Check `claim` for progression indices `0..=n_max`, building the series
/// fresh.
pub fn verify_claim(claim: &CongruenceClaim, n_max: u64) -> VerificationReport {
    verify_claim_cached(claim, n_max, &SeriesCache::new())
}

pub fn verify_claim_cached(claim: &CongruenceClaim, n_max: u64, cache: &SeriesCache) -> VerificationReport {
    let mut builder = VerificationReport::start(claim.label.clone(), claim.describe())
        .params(&claim.family.params())
        .progression(claim.progression)
        .modulus(claim.modulus)
        .expect(claim.expectation);
    if let Some(note) = &claim.note {
        builder = builder.note(note.clone());
    }
    let order = claim.required_order(n_max);
    let series = cache.get(claim.function, claim.family.colors(), claim.modulus, order);
    let counterexamples = (0..=n_max)
        .map(|n| claim.progression.at(n))
        .filter(|&idx| idx >= claim.start)
        .filter_map(|idx| {
            let v = *series.coeff(idx as usize);
            (v != 0).then(|| Counterexample {
                n: idx,
                value: v.to_string(),
            })
        })
        .collect();
    builder.finish(NRange { from: 0, to: n_max }, order, counterexamples)
}

/// Verify many claims in parallel, building each distinct series once at
/// the largest order any claim needs.
pub fn run_claims(claims: &[CongruenceClaim], n_max: u64) -> Vec<VerificationReport> {
    let mut needed: HashMap<Key, usize> = HashMap::new();
    for c in claims {
        let order = needed
            .entry((c.function, c.family.colors(), c.modulus))
            .or_default();
        *order = (*order).max(c.required_order(n_max));
    }
    let cache = SeriesCache::new();
    let keys: Vec<(Key, usize)> = needed.into_iter().collect();
    keys.par_iter().for_each(|&((f, p, m), order)| {
        cache.get(f, p, m, order);
    });
    claims
        .par_iter()
        .map(|c| verify_claim_cached(c, n_max, &cache))
        .collect()
}
