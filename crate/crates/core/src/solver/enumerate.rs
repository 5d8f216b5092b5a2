//! Ordered enumeration of small label sets, each checked by augmentation.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::assignment::{
    augment, witness_disjunct, witnessed_transversal, AugmentedPair, Disjunct,
};
use crate::error::{Error, Result};
use crate::hypergraph::Instance;
use crate::labels::{
    default_guess_size, label_universe, next_combination, sigma_of_labels,
    sigma_of_labels_unchecked, Label, LabelSet,
};
use crate::vertex_set::VertexSet;

use super::SearchStats;

/// A label set whose augmented pair witnesses a new transversal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumHit {
    pub guess: LabelSet,
    pub augmented: AugmentedPair,
    pub disjunct: Disjunct,
    /// `In(Σ) ∪ Freq` for [`Disjunct::Included`], `V ∖ (Ex(Σ) ∪ Infreq)`
    /// for [`Disjunct::Excluded`].
    pub transversal: VertexSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumOptions {
    /// Largest label set tried; `None` means `⌊log₂ |H|⌋ + 1`.
    pub max_size: Option<usize>,
    /// Worker threads; 1 runs on the calling thread.
    pub jobs: usize,
}

impl Default for EnumOptions {
    fn default() -> Self {
        Self {
            max_size: None,
            jobs: 1,
        }
    }
}

fn evaluate(inst: &Instance, labels: &[Label]) -> Option<(AugmentedPair, Disjunct)> {
    let pair = sigma_of_labels_unchecked(inst, labels);
    let aug = augment(inst, &pair);
    witness_disjunct(inst, &aug).map(|d| (aug, d))
}

fn hit(labels: &[Label], aug: AugmentedPair, disjunct: Disjunct) -> EnumHit {
    let transversal = witnessed_transversal(&aug, disjunct);
    EnumHit {
        guess: LabelSet::new(labels.iter().copied()),
        augmented: aug,
        disjunct,
        transversal,
    }
}

/// Which disjunct of the witnessing condition `σ(Σ)⁺` satisfies, if any.
pub fn witness_aug_disjunct(inst: &Instance, sigma: &LabelSet) -> Result<Option<Disjunct>> {
    let pair = sigma_of_labels(inst, sigma)?;
    let aug = augment(inst, &pair);
    Ok(witness_disjunct(inst, &aug))
}

/// The augmented pair of `Σ` and the transversal it certifies, if it is a
/// witness.
pub fn evaluate_guess(inst: &Instance, sigma: &LabelSet) -> Result<Option<EnumHit>> {
    let pair = sigma_of_labels(inst, sigma)?;
    let aug = augment(inst, &pair);
    Ok(witness_disjunct(inst, &aug).map(|d| hit(sigma.labels(), aug, d)))
}

/// True iff `σ(Σ)⁺` satisfies the witnessing condition.
pub fn check_witness_aug(inst: &Instance, sigma: &LabelSet) -> Result<bool> {
    witness_aug_disjunct(inst, sigma).map(|d| d.is_some())
}

/// First label set, in label-set order, whose augmentation is a witness.
///
/// Fails when the intersection property does not hold. `None` means no new
/// transversal of `G` w.r.t. `H` exists.
pub fn compute_new_transversal(inst: &Instance) -> Result<Option<EnumHit>> {
    compute_new_transversal_with(inst, EnumOptions::default(), &mut SearchStats::default())
}

pub fn compute_new_transversal_with(
    inst: &Instance,
    opts: EnumOptions,
    stats: &mut SearchStats,
) -> Result<Option<EnumHit>> {
    if let Some((g, h)) = inst.find_disjoint_pair() {
        return Err(Error::IntersectionProperty { g, h });
    }
    let labels = label_universe(inst);
    let max_size = opts.max_size.unwrap_or_else(|| default_guess_size(inst));
    let tried = AtomicU64::new(0);

    let result = if opts.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .expect("thread pool");
        pool.install(|| search(inst, &labels, max_size, true, &tried))
    } else {
        search(inst, &labels, max_size, false, &tried)
    };
    stats.label_sets_tried += tried.into_inner();
    Ok(result)
}

fn search(
    inst: &Instance,
    labels: &[Label],
    max_size: usize,
    parallel: bool,
    tried: &AtomicU64,
) -> Option<EnumHit> {
    let n = labels.len();
    for k in 0..=max_size.min(n) {
        if k == 0 {
            tried.fetch_add(1, Ordering::Relaxed);
            if let Some((aug, d)) = evaluate(inst, &[]) {
                return Some(hit(&[], aug, d));
            }
            continue;
        }
        // Sets of size k with first label `first` form a contiguous run of
        // the order, and runs are ordered by `first`, so the first hit over
        // runs is the least hit of size k.
        let run = |first: usize| -> Option<EnumHit> {
            let mut idx: Vec<usize> = (first..first + k).collect();
            let mut buf: Vec<Label> = Vec::with_capacity(k);
            let mut count = 0u64;
            let found = loop {
                buf.clear();
                buf.extend(idx.iter().map(|&i| labels[i]));
                count += 1;
                if let Some((aug, d)) = evaluate(inst, &buf) {
                    break Some(hit(&buf, aug, d));
                }
                if !next_combination(&mut idx, n, 1) {
                    break None;
                }
            };
            tried.fetch_add(count, Ordering::Relaxed);
            found
        };
        let firsts = 0..=n - k;
        let found = if parallel {
            firsts.into_par_iter().find_map_first(run)
        } else {
            firsts.into_iter().find_map(run)
        };
        if found.is_some() {
            return found;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::fixtures::*;
    use crate::hypergraph::{EdgeId, Hypergraph, VertexId};
    use crate::labels::enumerate_label_sets;

    fn inc(v: usize, e: usize) -> Label {
        Label::IncludeCritical(VertexId(v), EdgeId(e))
    }

    #[test]
    fn missing_bdf_guess_from_the_tree() {
        let sigma = LabelSet::new([inc(3, 0), Label::Exclude(VertexId(4))]);
        assert!(check_witness_aug(&missing_bdf(), &sigma).unwrap());
        assert!(check_witness_aug(&dual_six(), &sigma).is_ok_and(|b| !b));
    }

    #[test]
    fn incongruent_guess_is_an_error() {
        let sigma = LabelSet::new([inc(1, 0)]);
        assert!(matches!(
            check_witness_aug(&missing_bdf(), &sigma),
            Err(Error::Incongruent(_))
        ));
    }

    #[test]
    fn dual_pair_rejects_every_small_guess() {
        let i = dual_six();
        for sigma in enumerate_label_sets(&i, default_guess_size(&i)) {
            assert!(!check_witness_aug(&i, &sigma).unwrap(), "{sigma}");
        }
        assert_eq!(compute_new_transversal(&i).unwrap(), None);
    }

    #[test]
    fn missing_bdf_finds_a_new_transversal() {
        let i = missing_bdf();
        let hit = compute_new_transversal(&i).unwrap().unwrap();
        assert!(i.is_new_transversal(&hit.transversal));
        assert!(hit.guess.len() <= 3);
        // the hit is the least accepted guess
        for sigma in enumerate_label_sets(&i, 3) {
            if sigma == hit.guess {
                break;
            }
            assert!(!check_witness_aug(&i, &sigma).unwrap());
        }
    }

    #[test]
    fn empty_guess_can_suffice() {
        // G = {{a}}, H = {}: Com = ∅, so every free vertex is frequent
        let i = Instance::new(
            Hypergraph::from_edges(1, [vec![0]]).unwrap(),
            Hypergraph::empty(1),
        )
        .unwrap();
        let hit = compute_new_transversal(&i).unwrap().unwrap();
        assert!(hit.guess.is_empty());
        assert_eq!(hit.disjunct, Disjunct::Included);
        assert!(hit.transversal.contains(0));
    }

    #[test]
    fn intersection_property_is_required() {
        let i = Instance::new(
            Hypergraph::from_edges(2, [vec![0]]).unwrap(),
            Hypergraph::from_edges(2, [vec![1]]).unwrap(),
        )
        .unwrap();
        assert!(matches!(
            compute_new_transversal(&i),
            Err(Error::IntersectionProperty { .. })
        ));
    }

    #[test]
    fn parallel_search_returns_the_same_hit() {
        let i = missing_bdf();
        let seq = compute_new_transversal(&i).unwrap();
        let mut stats = SearchStats::default();
        let par = compute_new_transversal_with(
            &i,
            EnumOptions {
                max_size: None,
                jobs: 4,
            },
            &mut stats,
        )
        .unwrap();
        assert_eq!(seq, par);
        assert!(stats.label_sets_tried > 0);
    }
}
