//! Guess-and-check with uniformly random guesses.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hypergraph::Instance;
use crate::labels::{binomial, default_guess_size, label_universe, LabelSet};

use super::{check_simple_ip, check_witness_aug, Reason, SearchStats};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NdOutcome {
    /// The simplicity or intersection check failed; accepted without guessing.
    CheckFailed(Reason),
    /// The guess drawn at `trial` (0-based) was accepted.
    Accepted {
        guess: LabelSet,
        trial: u64,
    },
    NotFound,
}

/// Draws up to `trials` label sets uniformly from the guess space and
/// returns the first one whose augmentation is a witness.
///
/// A failed simplicity or intersection check accepts with the empty guess.
/// `None` only means no refutation was found.
pub fn nd_check_random(inst: &Instance, trials: u64, seed: u64) -> Option<LabelSet> {
    match nd_check_random_with(inst, trials, seed, None, &mut SearchStats::default()) {
        NdOutcome::CheckFailed(_) => Some(LabelSet::empty()),
        NdOutcome::Accepted { guess, .. } => Some(guess),
        NdOutcome::NotFound => None,
    }
}

pub fn nd_check_random_with(
    inst: &Instance,
    trials: u64,
    seed: u64,
    max_size: Option<usize>,
    stats: &mut SearchStats,
) -> NdOutcome {
    if let Some(failure) = check_simple_ip(inst) {
        return NdOutcome::CheckFailed(failure.reason);
    }
    let labels = label_universe(inst);
    let max_size = max_size
        .unwrap_or_else(|| default_guess_size(inst))
        .min(labels.len());
    // cumulative[j] = number of guesses of size < j + 1
    let mut cumulative = Vec::with_capacity(max_size + 1);
    let mut total: u128 = 0;
    for j in 0..=max_size {
        total = total.saturating_add(binomial(labels.len(), j));
        cumulative.push(total);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let r = rng.gen_range(0..total);
        let size = cumulative.partition_point(|&c| c <= r);
        let mut idx = sample(&mut rng, labels.len(), size).into_vec();
        idx.sort_unstable();
        let guess = LabelSet::new(idx.into_iter().map(|i| labels[i]));
        stats.label_sets_tried += 1;
        if check_witness_aug(inst, &guess).expect("guesses are drawn from congruent labels") {
            return NdOutcome::Accepted { guess, trial };
        }
    }
    NdOutcome::NotFound
}
