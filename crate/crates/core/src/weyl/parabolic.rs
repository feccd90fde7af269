use std::fmt;

use serde::{Deserialize, Serialize};

/// A standard parabolic subgroup, given by its set of simple indices (0-based bitmask).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Parabolic(pub u32);

impl Parabolic {
    pub const BOREL: Parabolic = Parabolic(0);

    pub fn full(rank: usize) -> Self {
        Parabolic(((1u64 << rank) - 1) as u32)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        Parabolic(it.into_iter().fold(0, |m, i| m | (1 << i)))
    }

    /// Stabilizer of a weight given in fundamental-weight coordinates.
    pub fn stabilizer(weight: &[i64]) -> Self {
        Self::from_indices(weight.iter().enumerate().filter(|(_, &x)| x == 0).map(|(i, _)| i))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn is_subset(self, other: Parabolic) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersect(self, other: Parabolic) -> Self {
        Parabolic(self.0 & other.0)
    }

    pub fn union(self, other: Parabolic) -> Self {
        Parabolic(self.0 | other.0)
    }

    pub fn minus(self, other: Parabolic) -> Self {
        Parabolic(self.0 & !other.0)
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Parabolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.indices().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", v.join(","))
    }
}

/// A left coset `w W_P`, stored by its minimal representative.
///
/// The representative is an element id of the owning [`super::WeylGroup`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coset {
    pub rep: usize,
    pub parabolic: Parabolic,
}
