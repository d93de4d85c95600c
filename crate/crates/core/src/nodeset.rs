use serde::{Deserialize, Serialize};
use std::fmt;

/// A subset of the simple-root index set, stored as a bitmask over 0-based nodes.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct NodeSet(pub u64);

impl NodeSet {
    pub const EMPTY: NodeSet = NodeSet(0);

    pub fn full(rank: usize) -> Self {
        if rank >= 64 {
            NodeSet(u64::MAX)
        } else {
            NodeSet((1u64 << rank) - 1)
        }
    }

    pub fn single(i: usize) -> Self {
        NodeSet(1 << i)
    }

    pub fn from_nodes<I: IntoIterator<Item = usize>>(nodes: I) -> Self {
        NodeSet(nodes.into_iter().fold(0, |m, i| m | (1 << i)))
    }

    /// Build from 1-based node labels.
    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Self {
        Self::from_nodes(labels.into_iter().map(|i| i - 1))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: NodeSet) -> Self {
        NodeSet(self.0 | o.0)
    }

    pub fn intersect(self, o: NodeSet) -> Self {
        NodeSet(self.0 & o.0)
    }

    pub fn minus(self, o: NodeSet) -> Self {
        NodeSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: NodeSet) -> bool {
        self.0 & !o.0 == 0
    }

    /// Complement inside {0..rank}.
    pub fn complement(self, rank: usize) -> Self {
        NodeSet::full(rank).minus(self)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let m = self.0;
        (0..64).filter(move |i| m >> i & 1 == 1)
    }

    /// 1-based labels, ascending.
    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    /// All subsets of {0..rank} in increasing mask order.
    pub fn all_subsets(rank: usize) -> impl Iterator<Item = NodeSet> {
        (0..1u64 << rank).map(NodeSet)
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.labels())
    }
}
