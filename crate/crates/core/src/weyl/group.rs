use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use super::parabolic::{Coset, Parabolic};
use super::root_datum::RootDatum;
use crate::error::{Error, Result};

/// Default bound on the group order; `F4` is the largest group that fits.
pub const DEFAULT_ORDER_LIMIT: u64 = 1152;

/// A Weyl group element as an integer matrix on fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylElt {
    pub matrix: Vec<Vec<i64>>,
    pub length: usize,
}

/// The full Weyl group of a root datum with multiplication tables and Bruhat order.
///
/// Elements are addressed by ids `0..order()`, sorted by length; id 0 is the identity.
pub struct WeylGroup {
    datum: RootDatum,
    mats: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    len: Vec<usize>,
    words: Vec<Vec<usize>>,
    lmul: Vec<Vec<usize>>,
    rmul: Vec<Vec<usize>>,
    inv: Vec<usize>,
    bruhat: Vec<Vec<u64>>,
    w0: usize,
    reflection_root: HashMap<usize, usize>,
    lift_tables: Mutex<HashMap<Parabolic, Arc<LiftTable>>>,
    quotient_covers: Mutex<HashMap<Parabolic, Arc<Vec<Vec<usize>>>>>,
}

impl std::fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "WeylGroup({}{}, order {})", self.datum.family, self.datum.rank, self.order())
    }
}

/// Maximal element below a bound inside a coset, for every bound and coset.
struct LiftTable {
    coset_pos: HashMap<usize, usize>,
    max_below: Vec<Vec<Option<usize>>>,
}

fn mat_mul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += x * b[k * n + j];
            }
        }
    }
    out
}

impl WeylGroup {
    pub fn new(datum: RootDatum) -> Result<Self> {
        Self::with_limit(datum, DEFAULT_ORDER_LIMIT)
    }

    pub fn with_limit(datum: RootDatum, limit: u64) -> Result<Self> {
        let order = datum.weyl_order();
        if order > limit {
            return Err(Error::GroupTooLarge { order, limit });
        }
        let n = datum.rank;
        // (s_i lambda)_j = lambda_j - lambda_i <alpha_i, alpha_j^vee>
        let simple: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut m = vec![0i64; n * n];
                for j in 0..n {
                    m[j * n + j] = 1;
                    m[j * n + i] -= datum.cartan[j][i];
                }
                m
            })
            .collect();
        let mut id = vec![0i64; n * n];
        for j in 0..n {
            id[j * n + j] = 1;
        }
        let mut mats = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut len = vec![0usize];
        let mut head = 0;
        while head < mats.len() {
            for s in &simple {
                let m = mat_mul(s, &mats[head], n);
                if !index.contains_key(&m) {
                    index.insert(m.clone(), mats.len());
                    mats.push(m);
                    len.push(len[head] + 1);
                }
            }
            head += 1;
        }
        let size = mats.len();
        debug_assert_eq!(size as u64, order);
        let lookup = |m: &Vec<i64>| index[m];
        let lmul: Vec<Vec<usize>> = simple
            .iter()
            .map(|s| mats.iter().map(|w| lookup(&mat_mul(s, w, n))).collect())
            .collect();
        let rmul: Vec<Vec<usize>> = simple
            .iter()
            .map(|s| mats.iter().map(|w| lookup(&mat_mul(w, s, n))).collect())
            .collect();
        let mut words = vec![Vec::new(); size];
        for w in 1..size {
            let i = (0..n).find(|&i| len[rmul[i][w]] < len[w]).unwrap();
            let mut word = words[rmul[i][w]].clone();
            word.push(i);
            words[w] = word;
        }
        let mut inv = vec![0; size];
        for w in 0..size {
            let mut x = 0;
            for &i in words[w].iter().rev() {
                x = rmul[i][x];
            }
            inv[w] = x;
        }
        let w0 = (0..size).max_by_key(|&w| len[w]).unwrap();
        let mut g = WeylGroup {
            datum,
            mats,
            index,
            len,
            words,
            lmul,
            rmul,
            inv,
            bruhat: Vec::new(),
            w0,
            reflection_root: HashMap::new(),
            lift_tables: Mutex::new(HashMap::new()),
            quotient_covers: Mutex::new(HashMap::new()),
        };
        g.bruhat = g.build_bruhat();
        g.reflection_root = g.build_reflections();
        Ok(g)
    }

    fn build_bruhat(&self) -> Vec<Vec<u64>> {
        let size = self.order();
        let words = size.div_ceil(64);
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(size);
        let mut e = vec![0u64; words];
        e[0] = 1;
        rows.push(e);
        for v in 1..size {
            let s = self.left_descents(v).indices().next().unwrap();
            let sv = self.lmul[s][v];
            let mut row = vec![0u64; words];
            for u in 0..size {
                let su = self.lmul[s][u];
                let probe = if self.len[su] < self.len[u] { su } else { u };
                if rows[sv][probe / 64] >> (probe % 64) & 1 == 1 {
                    row[u / 64] |= 1 << (u % 64);
                }
            }
            rows.push(row);
        }
        rows
    }

    fn build_reflections(&self) -> HashMap<usize, usize> {
        let n = self.rank();
        let mut out = HashMap::new();
        for b in 0..self.datum.positive_roots.len() {
            // s_beta(lambda) = lambda - <lambda, beta^vee> beta
            let beta = self.datum.root_weight(b);
            let cor = &self.datum.positive_coroots[b];
            let mut m = vec![0i64; n * n];
            for j in 0..n {
                m[j * n + j] += 1;
                for k in 0..n {
                    m[j * n + k] -= beta[j] * cor[k];
                }
            }
            out.insert(self.index[&m], b);
        }
        out
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank
    }

    pub fn order(&self) -> usize {
        self.mats.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn w0(&self) -> usize {
        self.w0
    }

    pub fn length(&self, w: usize) -> usize {
        self.len[w]
    }

    /// Lexicographically smallest reduced word, read right to left by descents (0-based letters).
    pub fn reduced_word(&self, w: usize) -> &[usize] {
        &self.words[w]
    }

    pub fn element(&self, w: usize) -> WeylElt {
        let n = self.rank();
        WeylElt {
            matrix: self.mats[w].chunks(n).map(|r| r.to_vec()).collect(),
            length: self.len[w],
        }
    }

    pub fn id_of(&self, elt: &WeylElt) -> Option<usize> {
        let flat: Vec<i64> = elt.matrix.iter().flatten().copied().collect();
        self.index.get(&flat).copied()
    }

    /// Product `s_{i_1} ... s_{i_k}` of a word of 0-based simple indices.
    pub fn from_word(&self, word: &[usize]) -> Result<usize> {
        let mut w = 0;
        for &i in word {
            if i >= self.rank() {
                return Err(Error::InvalidWord(format!("letter {} out of range", i + 1)));
            }
            w = self.rmul[i][w];
        }
        Ok(w)
    }

    pub fn simple(&self, i: usize) -> usize {
        self.lmul[i][0]
    }

    pub fn lmul(&self, i: usize, w: usize) -> usize {
        self.lmul[i][w]
    }

    pub fn rmul(&self, w: usize, i: usize) -> usize {
        self.rmul[i][w]
    }

    pub fn mul(&self, u: usize, v: usize) -> usize {
        self.words[v].iter().fold(u, |x, &i| self.rmul[i][x])
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.inv[w]
    }

    pub fn right_descents(&self, w: usize) -> Parabolic {
        Parabolic::from_indices((0..self.rank()).filter(|&i| self.len[self.rmul[i][w]] < self.len[w]))
    }

    pub fn left_descents(&self, w: usize) -> Parabolic {
        Parabolic::from_indices((0..self.rank()).filter(|&i| self.len[self.lmul[i][w]] < self.len[w]))
    }

    /// Action on a weight in fundamental-weight coordinates.
    pub fn act(&self, w: usize, lambda: &[i64]) -> Vec<i64> {
        let n = self.rank();
        let m = &self.mats[w];
        (0..n).map(|j| (0..n).map(|k| m[j * n + k] * lambda[k]).sum()).collect()
    }

    /// Index of the positive root whose reflection is `w`, if `w` is a reflection.
    pub fn reflection_root(&self, w: usize) -> Option<usize> {
        self.reflection_root.get(&w).copied()
    }

    pub fn bruhat_leq(&self, u: usize, v: usize) -> bool {
        self.bruhat[v][u / 64] >> (u % 64) & 1 == 1
    }

    /// Support of `w`: simple indices occurring in a (any) reduced word.
    pub fn support(&self, w: usize) -> Parabolic {
        Parabolic::from_indices(self.words[w].iter().copied())
    }

    pub fn in_subgroup(&self, w: usize, p: Parabolic) -> bool {
        self.support(w).is_subset(p)
    }

    /// `s_j = w0 s_i w0` defines the involution `i -> j` of the Dynkin diagram.
    pub fn w0_conjugate(&self, p: Parabolic) -> Parabolic {
        Parabolic::from_indices(p.indices().map(|i| {
            let c = self.mul(self.mul(self.w0, self.simple(i)), self.w0);
            (0..self.rank()).find(|&j| self.simple(j) == c).unwrap()
        }))
    }

    // ---- cosets ----

    pub fn is_min_rep(&self, w: usize, p: Parabolic) -> bool {
        self.right_descents(w).intersect(p).is_empty()
    }

    pub fn is_max_rep(&self, w: usize, p: Parabolic) -> bool {
        p.is_subset(self.right_descents(w))
    }

    pub fn min_rep(&self, mut w: usize, p: Parabolic) -> usize {
        while let Some(i) = self.right_descents(w).intersect(p).indices().next() {
            w = self.rmul[i][w];
        }
        w
    }

    pub fn max_rep(&self, mut w: usize, p: Parabolic) -> usize {
        while let Some(i) = p.minus(self.right_descents(w)).indices().next() {
            w = self.rmul[i][w];
        }
        w
    }

    /// Longest element of `W_P`.
    pub fn longest(&self, p: Parabolic) -> usize {
        self.max_rep(0, p)
    }

    pub fn coset(&self, w: usize, p: Parabolic) -> Coset {
        Coset {
            rep: self.min_rep(w, p),
            parabolic: p,
        }
    }

    /// Maximal element of the coset in `W`.
    pub fn coset_max(&self, c: Coset) -> usize {
        self.max_rep(c.rep, c.parabolic)
    }

    /// Minimal representatives `W^P`, in id order.
    pub fn min_reps(&self, p: Parabolic) -> Vec<usize> {
        (0..self.order()).filter(|&w| self.is_min_rep(w, p)).collect()
    }

    pub fn cosets(&self, p: Parabolic) -> Vec<Coset> {
        self.min_reps(p)
            .into_iter()
            .map(|rep| Coset { rep, parabolic: p })
            .collect()
    }

    pub fn coset_leq(&self, a: Coset, b: Coset) -> bool {
        debug_assert_eq!(a.parabolic, b.parabolic);
        self.bruhat_leq(a.rep, b.rep)
    }

    /// Natural projection `W/W_P -> W/W_P'` for `P` contained in `P'`.
    pub fn project(&self, c: Coset, to: Parabolic) -> Result<Coset> {
        if !c.parabolic.is_subset(to) {
            return Err(Error::Precondition(format!(
                "cannot project from {} to {}",
                c.parabolic, to
            )));
        }
        Ok(self.coset(c.rep, to))
    }

    /// Unique minimal lift of `c` to `W/W_P'` for `P'` contained in the parabolic of `c`.
    pub fn min_lift(&self, c: Coset, to: Parabolic) -> Result<Coset> {
        self.check_lift(c, to)?;
        Ok(Coset {
            rep: c.rep,
            parabolic: to,
        })
    }

    /// Unique maximal lift of `c` to `W/W_P'` for `P'` contained in the parabolic of `c`.
    pub fn max_lift(&self, c: Coset, to: Parabolic) -> Result<Coset> {
        self.check_lift(c, to)?;
        Ok(self.coset(self.coset_max(c), to))
    }

    fn check_lift(&self, c: Coset, to: Parabolic) -> Result<()> {
        if !to.is_subset(c.parabolic) {
            return Err(Error::Precondition(format!(
                "cannot lift from {} to {}",
                c.parabolic, to
            )));
        }
        Ok(())
    }

    /// Factorization `w = a b` with `a` in `W^{P'}` and `b` in `W_{P'}` and `W^P`.
    pub fn product_decomposition(&self, w: usize, p: Parabolic, p2: Parabolic) -> Result<(usize, usize)> {
        if !p.is_subset(p2) {
            return Err(Error::Precondition(format!("{p} is not contained in {p2}")));
        }
        if !self.is_min_rep(w, p) {
            return Err(Error::Precondition("element is not a minimal representative".into()));
        }
        let a = self.min_rep(w, p2);
        let b = self.mul(self.inv[a], w);
        Ok((a, b))
    }

    fn lift_table(&self, p: Parabolic) -> Arc<LiftTable> {
        if let Some(t) = self.lift_tables.lock().unwrap().get(&p) {
            return t.clone();
        }
        let reps = self.min_reps(p);
        let coset_pos: HashMap<usize, usize> = reps.iter().enumerate().map(|(k, &r)| (r, k)).collect();
        let size = self.order();
        let mut max_below: Vec<Vec<Option<usize>>> = Vec::with_capacity(size);
        let mut row = vec![None; reps.len()];
        row[coset_pos[&0]] = Some(0);
        max_below.push(row);
        // {x in C : x <= v} = {x in C : x <= sv} u s{y in sC : y <= sv} for s a left descent of v
        for v in 1..size {
            let s = self.left_descents(v).indices().next().unwrap();
            let sv = self.lmul[s][v];
            let mut row = vec![None; reps.len()];
            for (k, &c) in reps.iter().enumerate() {
                let sc = coset_pos[&self.min_rep(self.lmul[s][c], p)];
                let a = max_below[sv][k];
                let b = max_below[sv][sc].map(|y| self.lmul[s][y]);
                row[k] = match (a, b) {
                    (Some(a), Some(b)) => Some(if self.bruhat_leq(a, b) { b } else { a }),
                    (a, b) => a.or(b),
                };
            }
            max_below.push(row);
        }
        let t = Arc::new(LiftTable { coset_pos, max_below });
        self.lift_tables.lock().unwrap().insert(p, t.clone());
        t
    }

    /// Largest element `x` of the coset `c` with `x <= v` in `W`.
    pub fn max_below_in_coset(&self, v: usize, c: Coset) -> Option<usize> {
        let t = self.lift_table(c.parabolic);
        t.max_below[v][t.coset_pos[&c.rep]]
    }

    /// Smallest element `x` of the coset `c` with `x >= v` in `W`.
    pub fn min_above_in_coset(&self, v: usize, c: Coset) -> Option<usize> {
        // x >= v iff x w0 <= v w0, and c w0 = (c.rep w0) W_{P*}
        let pc = self.w0_conjugate(c.parabolic);
        let cw0 = self.coset(self.mul(c.rep, self.w0), pc);
        self.max_below_in_coset(self.mul(v, self.w0), cw0)
            .map(|y| self.mul(y, self.w0))
    }

    /// Deodhar: the maximal lift of `phi` (in `W/W_P'`) to `W/W_P` that lies below `theta`
    /// (in `W/W_P`). Requires `P` inside `P'` and `pi_{P'}(theta) >= phi`.
    pub fn deodhar_max_lift(&self, theta: Coset, phi: Coset) -> Result<Coset> {
        let proj = self.project(theta, phi.parabolic)?;
        if !self.coset_leq(phi, proj) {
            return Err(Error::Precondition("phi is not below the projection of theta".into()));
        }
        let x = self
            .max_below_in_coset(self.coset_max(theta), phi)
            .expect("Deodhar lift exists");
        Ok(self.coset(x, theta.parabolic))
    }

    /// Deodhar: the minimal lift of `theta` (in `W/W_P'`) to `W/W_P` that lies above `phi`
    /// (in `W/W_P`). Requires `P` inside `P'` and `theta >= pi_{P'}(phi)`.
    pub fn deodhar_min_lift(&self, phi: Coset, theta: Coset) -> Result<Coset> {
        let proj = self.project(phi, theta.parabolic)?;
        if !self.coset_leq(proj, theta) {
            return Err(Error::Precondition("theta is not above the projection of phi".into()));
        }
        let x = self
            .min_above_in_coset(phi.rep, theta)
            .expect("Deodhar lift exists");
        Ok(self.coset(x, phi.parabolic))
    }

    /// Lower covers of each minimal representative in `W/W_P`, keyed by element id.
    pub fn lower_covers(&self, p: Parabolic) -> Arc<Vec<Vec<usize>>> {
        if let Some(t) = self.quotient_covers.lock().unwrap().get(&p) {
            return t.clone();
        }
        let reps = self.min_reps(p);
        let mut by_len: Vec<Vec<usize>> = vec![Vec::new(); self.len[self.w0] + 1];
        for &r in &reps {
            by_len[self.len[r]].push(r);
        }
        let mut covers = vec![Vec::new(); self.order()];
        for &x in &reps {
            if self.len[x] == 0 {
                continue;
            }
            covers[x] = by_len[self.len[x] - 1]
                .iter()
                .copied()
                .filter(|&y| self.bruhat_leq(y, x))
                .collect();
        }
        let t = Arc::new(covers);
        self.quotient_covers.lock().unwrap().insert(p, t.clone());
        t
    }

    /// Positive root `beta` with `s_beta y = x`, for a covering `x > y` of minimal representatives.
    pub fn cover_root(&self, x: usize, y: usize) -> usize {
        self.reflection_root(self.mul(x, self.inv[y]))
            .expect("covering pairs differ by a reflection")
    }

    /// All coverings `(upper, lower, beta)` in the interval below `tau` of `W/W_P`.
    pub fn covering_relations(&self, p: Parabolic, tau: Coset) -> Vec<(Coset, Coset, usize)> {
        let covers = self.lower_covers(p);
        let mut out = Vec::new();
        for x in self.min_reps(p) {
            if !self.bruhat_leq(x, tau.rep) {
                continue;
            }
            for &y in &covers[x] {
                out.push((
                    Coset { rep: x, parabolic: p },
                    Coset { rep: y, parabolic: p },
                    self.cover_root(x, y),
                ));
            }
        }
        out
    }

    /// A coset `psi` covered by `theta` in `W/W_Q` with `psi >= phi` and
    /// `pi_P(theta) > pi_P(psi)`, given `theta > phi` and `pi_P(theta) > pi_P(phi)`.
    pub fn bruhat_interval_cover(&self, theta: Coset, phi: Coset, p: Parabolic) -> Result<Coset> {
        let q = theta.parabolic;
        if phi.parabolic != q || !q.is_subset(p) {
            return Err(Error::Precondition("parabolic mismatch".into()));
        }
        let pt = self.min_rep(theta.rep, p);
        if theta.rep == phi.rep
            || !self.bruhat_leq(phi.rep, theta.rep)
            || pt == self.min_rep(phi.rep, p)
        {
            return Err(Error::Precondition("need theta > phi with strict projections".into()));
        }
        self.lower_covers(q)[theta.rep]
            .iter()
            .copied()
            .find(|&y| self.bruhat_leq(phi.rep, y) && self.min_rep(y, p) != pt)
            .map(|rep| Coset { rep, parabolic: q })
            .ok_or_else(|| Error::Precondition("no interval cover found".into()))
    }
}
