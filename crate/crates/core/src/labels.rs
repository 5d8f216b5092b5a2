//! Decomposition-tree labels, label sets and their total order.
//!
//! A label is either the exclusion of a vertex or the inclusion of a vertex
//! as critical for an edge of `G` that contains it. Labels are ordered by
//! the pair `⟨vertex, object⟩`, where an exclusion uses the vertex itself as
//! the second object and an inclusion uses the edge. Vertices precede edges
//! in the object order, so `Exclude(v)` comes right before every
//! `IncludeCritical(v, _)`. Label sets are ordered by size first and then
//! lexicographically on their sorted labels.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::assignment::{Assignment, Extension, LoosePair};
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Instance, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    Exclude(VertexId),
    IncludeCritical(VertexId, EdgeId),
}

impl Label {
    pub fn vertex(&self) -> VertexId {
        match *self {
            Label::Exclude(v) | Label::IncludeCritical(v, _) => v,
        }
    }

    fn order_key(&self) -> (usize, Option<usize>) {
        match *self {
            Label::Exclude(v) => (v.0, None),
            Label::IncludeCritical(v, e) => (v.0, Some(e.0)),
        }
    }

    pub fn extension(&self) -> Extension {
        match *self {
            Label::Exclude(v) => Extension::Exclude(v),
            Label::IncludeCritical(v, e) => Extension::IncludeCritical(v, e),
        }
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Exclude(v) => write!(f, "Exc({})", v.0),
            Label::IncludeCritical(v, e) => write!(f, "Inc({},{})", v.0, e.0),
        }
    }
}

/// An unordered, duplicate-free set of labels, stored sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LabelSet(Vec<Label>);

impl LabelSet {
    pub fn new<I: IntoIterator<Item = Label>>(labels: I) -> Self {
        let mut v: Vec<Label> = labels.into_iter().collect();
        v.sort();
        v.dedup();
        Self(v)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Label> {
        self.0.iter()
    }
}

impl Ord for LabelSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for LabelSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("}")
    }
}

/// A root-to-node sequence of labels.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Path(pub Vec<Label>);

impl Path {
    pub fn label_set(&self) -> LabelSet {
        LabelSet::new(self.0.iter().copied())
    }
}

pub fn compare_labels(a: &Label, b: &Label) -> Ordering {
    a.cmp(b)
}

pub fn compare_label_sets(a: &LabelSet, b: &LabelSet) -> Ordering {
    a.cmp(b)
}

/// Every label names an existing vertex, and every inclusion names an edge
/// of `G` that contains its vertex.
pub fn is_congruent(inst: &Instance, sigma: &LabelSet) -> bool {
    congruency_error(inst, sigma).is_none()
}

fn congruency_error(inst: &Instance, sigma: &LabelSet) -> Option<String> {
    let n = inst.universe();
    for l in sigma.iter() {
        let v = l.vertex();
        if v.0 >= n {
            return Some(format!("{l}: vertex out of range"));
        }
        if let Label::IncludeCritical(_, e) = *l {
            match inst.g().edge(e) {
                None => return Some(format!("{l}: no such edge of G")),
                Some(edge) if !edge.contains(v.0) => {
                    return Some(format!("{l}: vertex not in edge"));
                }
                Some(_) => {}
            }
        }
    }
    None
}

/// `In(Σ)` and `Ex(Σ)`: included vertices of all inclusions; excluded
/// vertices of all exclusions plus `G ∖ {v}` for each inclusion. The two
/// sides may overlap.
pub fn sigma_of_labels(inst: &Instance, sigma: &LabelSet) -> Result<LoosePair> {
    if let Some(msg) = congruency_error(inst, sigma) {
        return Err(Error::Incongruent(msg));
    }
    Ok(sigma_of_labels_unchecked(inst, sigma.labels()))
}

pub(crate) fn sigma_of_labels_unchecked(inst: &Instance, labels: &[Label]) -> LoosePair {
    let mut p = LoosePair::empty(inst.universe());
    for l in labels {
        match *l {
            Label::Exclude(v) => {
                p.excluded.insert(v.0);
            }
            Label::IncludeCritical(v, e) => {
                p.included.insert(v.0);
                for u in inst.g().edges()[e.0].iter() {
                    if u != v.0 {
                        p.excluded.insert(u);
                    }
                }
            }
        }
    }
    p
}

/// The assignment at the end of a path, checking applicability step by step.
pub fn sigma_of_path(inst: &Instance, path: &Path) -> Result<Assignment> {
    let mut sigma = Assignment::empty(inst.universe());
    for (i, l) in path.0.iter().enumerate() {
        sigma = sigma
            .extend(inst, l.extension())
            .map_err(|e| Error::InvalidPath {
                step: i + 1,
                reason: e.to_string(),
            })?;
    }
    Ok(sigma)
}

/// All labels that can leave the root, sorted.
pub fn label_universe(inst: &Instance) -> Vec<Label> {
    let mut labels = Vec::new();
    for v in 0..inst.universe() {
        labels.push(Label::Exclude(VertexId(v)));
        for (e, edge) in inst.g().edges().iter().enumerate() {
            if edge.contains(v) {
                labels.push(Label::IncludeCritical(VertexId(v), EdgeId(e)));
            }
        }
    }
    debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
    labels
}

/// `⌊log₂ |H|⌋ + 1`, taken as 1 when `H` has no edges.
pub fn default_guess_size(inst: &Instance) -> usize {
    match inst.h().len() {
        0 => 1,
        m => m.ilog2() as usize + 1,
    }
}

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = match acc.checked_mul((n - i) as u128) {
            Some(x) => x / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Number of label sets of size at most `max_size` over `labels` labels.
pub fn count_label_sets(labels: usize, max_size: usize) -> u128 {
    (0..=max_size.min(labels))
        .map(|j| binomial(labels, j))
        .fold(0u128, u128::saturating_add)
}

/// Advances `idx` to the next `k`-combination of `0..n` in lexicographic
/// order, touching only positions at or after `lo`. Returns `false` when
/// exhausted.
pub(crate) fn next_combination(idx: &mut [usize], n: usize, lo: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > lo {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Stream of all label sets of size at most `max_size`, in increasing order.
pub struct LabelSetEnumerator {
    labels: Vec<Label>,
    max_size: usize,
    idx: Vec<usize>,
    state: EnumState,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum EnumState {
    Fresh,
    Running,
    Done,
}

impl LabelSetEnumerator {
    pub fn new(labels: Vec<Label>, max_size: usize) -> Self {
        let max_size = max_size.min(labels.len());
        Self {
            labels,
            max_size,
            idx: Vec::new(),
            state: EnumState::Fresh,
        }
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    fn advance(&mut self) -> bool {
        match self.state {
            EnumState::Done => return false,
            EnumState::Fresh => {
                self.state = EnumState::Running;
                return true;
            }
            EnumState::Running => {}
        }
        if next_combination(&mut self.idx, self.labels.len(), 0) {
            return true;
        }
        let k = self.idx.len() + 1;
        if k > self.max_size {
            self.state = EnumState::Done;
            return false;
        }
        self.idx = (0..k).collect();
        true
    }
}

impl Iterator for LabelSetEnumerator {
    type Item = LabelSet;

    fn next(&mut self) -> Option<LabelSet> {
        if !self.advance() {
            return None;
        }
        Some(LabelSet(self.idx.iter().map(|&i| self.labels[i]).collect()))
    }
}

/// All label sets of `inst` with at most `max_size` labels, in order.
pub fn enumerate_label_sets(inst: &Instance, max_size: usize) -> LabelSetEnumerator {
    LabelSetEnumerator::new(label_universe(inst), max_size)
}
