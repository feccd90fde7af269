//! Graded posets with a unique maximum and integer bonds on covering edges, and the
//! lattice points of their LS-monoids.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use num_traits::Zero;

use crate::Rational;

/// A vector on the nodes of a bonded poset, keyed by node id, zero entries omitted.
pub type NodeVector = BTreeMap<usize, Rational>;

/// Graded poset given by its covering edges, each carrying a positive bond.
#[derive(Clone, Debug)]
pub struct BondedPoset {
    pub rank: Vec<usize>,
    /// `lower[u]` lists `(v, bond)` for every `v` covered by `u`.
    pub lower: Vec<Vec<(usize, i64)>>,
    pub top: usize,
}

/// `reach[u]` is the set of nodes `v <= u` joined to `u` by a saturated chain whose bonds
/// are all divisible by a fixed denominator.
type Reach = Vec<Vec<u64>>;

fn bit(set: &[u64], k: usize) -> bool {
    set[k / 64] >> (k % 64) & 1 == 1
}

impl BondedPoset {
    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn lcm_of_bonds(&self) -> i64 {
        self.lower
            .iter()
            .flatten()
            .fold(1i64, |acc, &(_, b)| acc.lcm(&b))
    }

    fn reach(&self, q: i64) -> Reach {
        let n = self.len();
        let words = n.div_ceil(64).max(1);
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&u| self.rank[u]);
        let mut reach = vec![vec![0u64; words]; n];
        for &u in &order {
            reach[u][u / 64] |= 1 << (u % 64);
            for &(v, b) in &self.lower[u] {
                if b % q == 0 {
                    let src = reach[v].clone();
                    for (d, s) in reach[u].iter_mut().zip(src) {
                        *d |= s;
                    }
                }
            }
        }
        reach
    }

    /// Nodes below `u` reachable by a saturated chain with all bonds divisible by `q`.
    pub fn reachable(&self, q: i64) -> Vec<BTreeSet<usize>> {
        let r = self.reach(q);
        (0..self.len())
            .map(|u| (0..self.len()).filter(|&v| bit(&r[u], v)).collect())
            .collect()
    }

    /// All maximal chains from the top, listed top-down.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = vec![self.top];
        self.chains_rec(&mut cur, &mut out);
        out
    }

    fn chains_rec(&self, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let u = *cur.last().unwrap();
        if self.lower[u].is_empty() {
            out.push(cur.clone());
            return;
        }
        for &(v, _) in &self.lower[u] {
            cur.push(v);
            self.chains_rec(cur, out);
            cur.pop();
        }
    }

    pub fn bond(&self, u: usize, v: usize) -> Option<i64> {
        self.lower[u].iter().find(|&&(w, _)| w == v).map(|&(_, b)| b)
    }

    /// Whether `v` lies in the LS-lattice of the maximal chain `chain` (top-down).
    pub fn in_chain_lattice(&self, chain: &[usize], v: &NodeVector) -> bool {
        if v.keys().any(|k| !chain.contains(k)) {
            return false;
        }
        let mut partial = Rational::zero();
        for w in chain.windows(2) {
            partial += v.get(&w[0]).copied().unwrap_or_else(Rational::zero);
            let b = self.bond(w[0], w[1]).expect("consecutive chain elements cover");
            if !(partial * b).is_integer() {
                return false;
            }
        }
        partial += v.get(chain.last().unwrap()).copied().unwrap_or_else(Rational::zero);
        partial.is_integer()
    }

    /// Whether `v` lies in the LS-lattice of some maximal chain: its support is a chain
    /// and consecutive support elements are joined by a saturated chain whose bonds
    /// make the running partial sum integral.
    pub fn in_lattice(&self, v: &NodeVector) -> bool {
        let mut support: Vec<(usize, Rational)> = v.iter().map(|(&k, &c)| (k, c)).collect();
        support.sort_by_key(|&(k, _)| std::cmp::Reverse(self.rank[k]));
        let mut partial = Rational::zero();
        for w in support.windows(2) {
            partial += w[0].1;
            let q = *partial.denom();
            if !self.chain_exists(q, w[0].0, w[1].0) {
                return false;
            }
        }
        partial += support.last().map(|x| x.1).unwrap_or_else(Rational::zero);
        partial.is_integer()
    }

    /// Whether a saturated chain from `u` down to `v != u` has all bonds divisible by `q`.
    pub fn chain_exists(&self, q: i64, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        let mut stack = vec![u];
        let mut seen = BTreeSet::new();
        while let Some(x) = stack.pop() {
            if x == v {
                return true;
            }
            for &(y, b) in &self.lower[x] {
                if b % q == 0 && self.rank[y] >= self.rank[v] && seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        false
    }

    /// All non-negative vectors of the LS-monoid (union over maximal chains) whose
    /// degree `sum_u a_u deg(u)` equals `target`.
    pub fn monoid_points(&self, deg: &[Vec<i64>], target: &[i64]) -> Vec<NodeVector> {
        let step = Rational::new(1, self.lcm_of_bonds());
        let mut reach: BTreeMap<i64, Reach> = BTreeMap::new();
        for q in 1..=self.lcm_of_bonds() {
            if self.lcm_of_bonds() % q == 0 {
                reach.insert(q, self.reach(q));
            }
        }
        let mut ctx = Search {
            poset: self,
            deg,
            step,
            reach,
            out: Vec::new(),
        };
        let rem: Vec<Rational> = target.iter().map(|&x| Rational::from_integer(x)).collect();
        if rem.iter().all(|x| x.is_zero()) {
            return vec![NodeVector::new()];
        }
        let mut cur = Vec::new();
        let mut candidates: Vec<usize> = (0..self.len()).collect();
        candidates.sort_by_key(|&u| (std::cmp::Reverse(self.rank[u]), u));
        for u in candidates {
            ctx.extend(u, Rational::zero(), &rem, &mut cur);
        }
        let mut out = ctx.out;
        out.sort();
        out
    }
}

struct Search<'a> {
    poset: &'a BondedPoset,
    deg: &'a [Vec<i64>],
    step: Rational,
    reach: BTreeMap<i64, Reach>,
    out: Vec<NodeVector>,
}

impl Search<'_> {
    /// Put a positive coefficient on `u`, then continue below it.
    fn extend(&mut self, u: usize, partial: Rational, rem: &[Rational], cur: &mut Vec<(usize, Rational)>) {
        let du = &self.deg[u];
        let mut cap: Option<Rational> = None;
        for (r, &d) in rem.iter().zip(du) {
            if d > 0 {
                let c = *r / Rational::from_integer(d);
                cap = Some(cap.map_or(c, |x: Rational| x.min(c)));
            }
        }
        let Some(cap) = cap else { return };
        let mut c = self.step;
        while c <= cap {
            let rem2: Vec<Rational> = rem
                .iter()
                .zip(du)
                .map(|(r, &d)| *r - c * Rational::from_integer(d))
                .collect();
            let s = partial + c;
            cur.push((u, c));
            if rem2.iter().all(|x| x.is_zero()) {
                if s.is_integer() {
                    self.out.push(cur.iter().copied().collect());
                }
            } else {
                let q = *s.denom();
                if let Some(r) = self.reach.get(&q) {
                    let below: Vec<usize> = (0..self.poset.len())
                        .filter(|&v| v != u && bit(&r[u], v))
                        .collect();
                    for v in below {
                        self.extend(v, s, &rem2, cur);
                    }
                }
            }
            cur.pop();
            c += self.step;
        }
    }
}

/// Lattice points of a single maximal chain, by the defining congruences. Used as an
/// independent check of [`BondedPoset::monoid_points`].
pub fn chain_points(poset: &BondedPoset, chain: &[usize], deg: &[Vec<i64>], target: &[i64]) -> Vec<NodeVector> {
    let l = chain
        .windows(2)
        .fold(1i64, |acc, w| acc.lcm(&poset.bond(w[0], w[1]).unwrap()));
    let step = Rational::new(1, l);
    let mut out = Vec::new();
    let mut coeffs = vec![Rational::zero(); chain.len()];
    fn rec(
        k: usize,
        chain: &[usize],
        deg: &[Vec<i64>],
        target: &[i64],
        step: Rational,
        coeffs: &mut Vec<Rational>,
        acc: &mut Vec<Rational>,
        poset: &BondedPoset,
        out: &mut Vec<NodeVector>,
    ) {
        if k == chain.len() {
            if acc.iter().zip(target).all(|(a, &t)| *a == Rational::from_integer(t)) {
                let v: NodeVector = chain
                    .iter()
                    .zip(coeffs.iter())
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(&u, &c)| (u, c))
                    .collect();
                if poset.in_chain_lattice(chain, &v) {
                    out.push(v);
                }
            }
            return;
        }
        let d = &deg[chain[k]];
        let mut c = Rational::zero();
        loop {
            let fits = acc
                .iter()
                .zip(d)
                .zip(target)
                .all(|((a, &x), &t)| *a + c * Rational::from_integer(x) <= Rational::from_integer(t));
            if !fits {
                break;
            }
            coeffs[k] = c;
            for (a, &x) in acc.iter_mut().zip(d) {
                *a += c * Rational::from_integer(x);
            }
            rec(k + 1, chain, deg, target, step, coeffs, acc, poset, out);
            for (a, &x) in acc.iter_mut().zip(d) {
                *a -= c * Rational::from_integer(x);
            }
            c += step;
            if d.iter().all(|&x| x == 0) {
                break;
            }
        }
        coeffs[k] = Rational::zero();
    }
    let mut acc = vec![Rational::zero(); target.len()];
    rec(0, chain, deg, target, step, &mut coeffs, &mut acc, poset, &mut out);
    out
}

/// Union over all maximal chains of [`chain_points`].
pub fn monoid_points_by_chains(poset: &BondedPoset, deg: &[Vec<i64>], target: &[i64]) -> Vec<NodeVector> {
    let mut all = BTreeSet::new();
    for chain in poset.maximal_chains() {
        all.extend(chain_points(poset, &chain, deg, target));
    }
    all.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// A diamond with one bond 2: top 0 > {1, 2} > 3.
    fn diamond() -> BondedPoset {
        BondedPoset {
            rank: vec![2, 1, 1, 0],
            lower: vec![vec![(1, 2), (2, 1)], vec![(3, 2)], vec![(3, 1)], vec![]],
            top: 0,
        }
    }

    #[test]
    fn half_integral_points_need_even_bonds() {
        let p = diamond();
        let deg = vec![vec![1]; 4];
        let pts = p.monoid_points(&deg, &[1]);
        let half = Rational::new(1, 2);
        // degree-1 points: the four vertices, plus halves along 0 > 1 > 3
        assert!(pts.contains(&NodeVector::from([(0, half), (1, half)])));
        assert!(pts.contains(&NodeVector::from([(1, half), (3, half)])));
        assert!(pts.contains(&NodeVector::from([(0, half), (3, half)])));
        assert!(!pts.contains(&NodeVector::from([(2, half), (3, half)])));
        assert_eq!(pts.len(), 4 + 3);
        assert_eq!(pts, monoid_points_by_chains(&p, &deg, &[1]));
    }

    #[test]
    fn chain_enumeration_agrees_with_support_search() {
        let p = diamond();
        let deg = vec![vec![1]; 4];
        for d in 0..4 {
            let a = p.monoid_points(&deg, &[d]);
            let b = monoid_points_by_chains(&p, &deg, &[d]);
            assert_eq!(a, b, "degree {d}");
            for v in &a {
                assert!(p.in_lattice(v));
            }
        }
    }
}
