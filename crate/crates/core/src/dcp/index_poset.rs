use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A set of non-empty subsets of `[m]` ordered by inclusion, containing `[m]`, graded of
/// length `m - 1` and closed under the rule `underline(J) ⊆ I  =>  J ⊆ I`.
///
/// Subsets are bitmasks over 0-based indices. Elements are sorted by decreasing size,
/// then lexicographically, so the maximum `[m]` has index 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexPoset {
    m: usize,
    sets: Vec<u32>,
    underline: Vec<u32>,
    covers_down: Vec<Vec<usize>>,
    covers_up: Vec<Vec<usize>>,
}

pub fn mask_to_vec(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

fn show(mask: u32) -> String {
    let v: Vec<String> = mask_to_vec(mask).iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", v.join(","))
}

impl IndexPoset {
    /// Build from 1-based subsets of `[m]`.
    pub fn new(m: usize, subsets: &[Vec<usize>]) -> Result<Self> {
        let bad = |reason: String| Error::InvalidIndexPoset { reason };
        if m == 0 || m > 31 {
            return Err(bad(format!("m = {m} out of range")));
        }
        let mut masks = BTreeSet::new();
        for s in subsets {
            if s.is_empty() {
                return Err(bad("the empty set is not allowed".into()));
            }
            let mut mask = 0u32;
            for &x in s {
                if x == 0 || x > m {
                    return Err(bad(format!("element {x} outside [{m}]")));
                }
                mask |= 1 << (x - 1);
            }
            masks.insert(mask);
        }
        let full = ((1u64 << m) - 1) as u32;
        if !masks.contains(&full) {
            return Err(bad(format!("missing the maximum [{m}]")));
        }
        let mut sets: Vec<u32> = masks.into_iter().collect();
        sets.sort_by(|&a, &b| {
            b.count_ones()
                .cmp(&a.count_ones())
                .then_with(|| mask_to_vec(a).cmp(&mask_to_vec(b)))
        });
        let n = sets.len();
        let sub = |a: u32, b: u32| a & !b == 0;
        let mut covers_down = vec![Vec::new(); n];
        let mut covers_up = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..n {
                if i == j || !sub(sets[j], sets[i]) {
                    continue;
                }
                let between = (0..n).any(|k| {
                    k != i && k != j && sub(sets[j], sets[k]) && sub(sets[k], sets[i])
                });
                if !between {
                    covers_down[i].push(j);
                    covers_up[j].push(i);
                }
            }
        }
        for i in 0..n {
            if covers_down[i].is_empty() && sets[i].count_ones() != 1 {
                return Err(bad(format!("minimal element {} is not a singleton", show(sets[i]))));
            }
            for &j in &covers_down[i] {
                if sets[i].count_ones() != sets[j].count_ones() + 1 {
                    return Err(bad(format!(
                        "covering {} > {} skips a size",
                        show(sets[i]),
                        show(sets[j])
                    )));
                }
            }
        }
        let underline: Vec<u32> = (0..n)
            .map(|i| {
                if covers_down[i].is_empty() {
                    sets[i]
                } else {
                    covers_down[i].iter().fold(0, |acc, &k| acc | (sets[i] & !sets[k]))
                }
            })
            .collect();
        for j in 0..n {
            for i in 0..n {
                if sub(underline[j], sets[i]) && !sub(sets[j], sets[i]) {
                    return Err(bad(format!(
                        "underline of {} lies in {} but {} does not",
                        show(sets[j]),
                        show(sets[i]),
                        show(sets[j])
                    )));
                }
            }
        }
        Ok(IndexPoset {
            m,
            sets,
            underline,
            covers_down,
            covers_up,
        })
    }

    /// All non-empty subsets of `[m]`.
    pub fn powerset(m: usize) -> Result<Self> {
        let subsets: Vec<Vec<usize>> = (1u32..1 << m).map(mask_to_vec).collect();
        Self::new(m, &subsets)
    }

    /// The chain `[1] ⊂ [2] ⊂ ... ⊂ [m]`.
    pub fn chain(m: usize) -> Result<Self> {
        let subsets: Vec<Vec<usize>> = (1..=m).map(|k| (1..=k).collect()).collect();
        Self::new(m, &subsets)
    }

    /// The chain `{order[0]} ⊂ {order[0], order[1]} ⊂ ...` for a permutation of `[m]`.
    pub fn chain_in_order(order: &[usize]) -> Result<Self> {
        let subsets: Vec<Vec<usize>> = (1..=order.len()).map(|k| order[..k].to_vec()).collect();
        Self::new(order.len(), &subsets)
    }

    /// Every valid index poset on `[m]`.
    pub fn enumerate_all(m: usize) -> Vec<Self> {
        let full = (1u32 << m) - 1;
        let others: Vec<u32> = (1..full).collect();
        let mut out = Vec::new();
        for choice in 0u64..1 << others.len() {
            let mut subsets = vec![mask_to_vec(full)];
            for (k, &s) in others.iter().enumerate() {
                if choice >> k & 1 == 1 {
                    subsets.push(mask_to_vec(s));
                }
            }
            if let Ok(p) = Self::new(m, &subsets) {
                out.push(p);
            }
        }
        out
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn top(&self) -> usize {
        0
    }

    pub fn set(&self, i: usize) -> u32 {
        self.sets[i]
    }

    /// 1-based sorted elements of the `i`-th subset.
    pub fn elements(&self, i: usize) -> Vec<usize> {
        mask_to_vec(self.sets[i])
    }

    pub fn underline(&self, i: usize) -> u32 {
        self.underline[i]
    }

    pub fn covers_down(&self, i: usize) -> &[usize] {
        &self.covers_down[i]
    }

    pub fn covers_up(&self, i: usize) -> &[usize] {
        &self.covers_up[i]
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.sets[j] & !self.sets[i] == 0
    }

    pub fn find(&self, mask: u32) -> Option<usize> {
        self.sets.iter().position(|&s| s == mask)
    }

    pub fn is_chain(&self) -> bool {
        self.sets.len() == self.m
    }

    /// `e_I`, the indicator vector of the underline of `I`.
    pub fn e(&self, i: usize) -> Vec<i64> {
        (0..self.m).map(|k| (self.underline[i] >> k & 1) as i64).collect()
    }

    /// All covering chains `I = I_r ⊂ ... ⊂ I_m = [m]`, listed bottom-up.
    pub fn chains_to_top(&self, i: usize) -> Vec<Vec<usize>> {
        if i == self.top() {
            return vec![vec![i]];
        }
        let mut out = Vec::new();
        for &up in &self.covers_up[i] {
            for mut c in self.chains_to_top(up) {
                c.insert(0, i);
                out.push(c);
            }
        }
        out
    }

    pub fn label(&self, i: usize) -> String {
        show(self.sets[i])
    }
}
