//! LS-tableaux: sequences of LS-paths with standardness via defining chains.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::dcp::{check_standard, Dcp, IndexPoset, Setup};
use crate::demazure_oracle::Character;
use crate::error::{Error, Result};
use crate::lspath::{enumerate_ls_paths, LsPath, LsPathJson};
use crate::weyl::{type_a, Coset, Parabolic, Weight, WeylGroup};

/// An LS-tableau: columns `pi_1, ..., pi_s`, each an LS-path of its own shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LsTableau {
    pub columns: Vec<LsPath>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LsTableauJson {
    pub columns: Vec<LsPathJson>,
}

impl LsTableau {
    /// `mu = sum` of the column shapes.
    pub fn total_shape(&self, rank: usize) -> Weight {
        let mut mu = vec![0; rank];
        for c in &self.columns {
            for (a, b) in mu.iter_mut().zip(&c.shape) {
                *a += b;
            }
        }
        mu
    }

    /// All cosets of all columns, in reading order.
    fn flattened(&self) -> impl Iterator<Item = Coset> + '_ {
        self.columns.iter().flat_map(|c| c.cosets.iter().copied())
    }

    /// Endpoint of the concatenated path.
    pub fn endpoint(&self, g: &WeylGroup) -> Result<Weight> {
        let mut acc = vec![0; g.rank()];
        for c in &self.columns {
            for (a, b) in acc.iter_mut().zip(c.endpoint(g)?) {
                *a += b;
            }
        }
        Ok(acc)
    }

    pub fn to_json(&self, g: &WeylGroup) -> LsTableauJson {
        LsTableauJson {
            columns: self.columns.iter().map(|c| c.to_json(g)).collect(),
        }
    }
}

/// Greedy maximal defining chain in `W`: the Deodhar maximal lift of each coset below the
/// previous lift, starting from the maximal element of `tau W_mu`. `None` if some lift
/// fails to exist. The lifts are elements of `W`.
fn greedy_lifts(g: &WeylGroup, t: &LsTableau, tau: Coset) -> Result<Option<Vec<usize>>> {
    if t.columns.is_empty() {
        return Ok(Some(Vec::new()));
    }
    let mu = t.total_shape(g.rank());
    let wmu = Parabolic::stabilizer(&mu);
    let mut bound = g.coset_max(g.project(tau, wmu)?);
    let mut lifts = Vec::new();
    for c in t.flattened() {
        match g.max_below_in_coset(bound, c) {
            Some(x) => {
                lifts.push(x);
                bound = x;
            }
            None => return Ok(None),
        }
    }
    Ok(Some(lifts))
}

/// The unique maximal defining chain in `W/W_mu`, or `None` if `t` is not `tau`-standard.
/// `tau` must live in `W/W_P` with `W_P` inside the stabilizer of `mu`.
pub fn defining_chain(g: &WeylGroup, t: &LsTableau, tau: Coset) -> Result<Option<Vec<Coset>>> {
    let wmu = Parabolic::stabilizer(&t.total_shape(g.rank()));
    Ok(greedy_lifts(g, t, tau)?.map(|v| v.into_iter().map(|x| g.coset(x, wmu)).collect()))
}

pub fn is_standard(g: &WeylGroup, t: &LsTableau, tau: Coset) -> Result<bool> {
    Ok(greedy_lifts(g, t, tau)?.is_some())
}

/// Each pair of consecutive columns is standard on its own.
pub fn is_weakly_standard(g: &WeylGroup, t: &LsTableau, tau: Coset) -> Result<bool> {
    for w in t.columns.windows(2) {
        let pair = LsTableau { columns: w.to_vec() };
        if !is_standard(g, &pair, tau)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether the given elements of `W` form a defining chain of `t`: they lift the
/// flattened cosets, decrease weakly and lie below `max(tau W_mu)`.
pub fn is_defining_chain(g: &WeylGroup, t: &LsTableau, tau: Coset, chain: &[usize]) -> Result<bool> {
    let wmu = Parabolic::stabilizer(&t.total_shape(g.rank()));
    let flat: Vec<Coset> = t.flattened().collect();
    if flat.len() != chain.len() {
        return Ok(false);
    }
    let mut bound = g.coset_max(g.project(tau, wmu)?);
    for (&x, c) in chain.iter().zip(&flat) {
        if g.min_rep(x, c.parabolic) != c.rep || !g.bruhat_leq(g.min_rep(x, wmu), g.min_rep(bound, wmu)) {
            return Ok(false);
        }
        bound = x;
    }
    Ok(true)
}

/// The unique weakly decreasing sequence `I_1 ⊇ ... ⊇ I_s` with `sum e_{I_k} = d`.
///
/// Starting at `T = [m]`: pick `i` in `underline(T)` with `d_i` minimal, repeat `T`
/// `d_i` times, subtract, and continue with `T \ {i}`.
pub fn shape_for_degree(ip: &IndexPoset, d: &[i64]) -> Result<Vec<usize>> {
    if d.len() != ip.m() || d.iter().any(|&x| x < 0) {
        return Err(Error::Precondition(format!("{d:?} is not a degree in N^{}", ip.m())));
    }
    let mut rest = d.to_vec();
    let mut out = Vec::new();
    let mut t = ip.top();
    loop {
        let under = ip.underline(t);
        let i = (0..ip.m())
            .filter(|&k| under >> k & 1 == 1)
            .min_by_key(|&k| (rest[k], k))
            .unwrap();
        let times = rest[i];
        for _ in 0..times {
            out.push(t);
        }
        for (k, r) in rest.iter_mut().enumerate() {
            if under >> k & 1 == 1 {
                *r -= times;
            }
        }
        let next = ip.set(t) & !(1 << i);
        if next == 0 {
            break;
        }
        t = ip.find(next).ok_or_else(|| Error::Precondition("index poset is not closed as expected".into()))?;
    }
    if rest.iter().any(|&x| x != 0) {
        return Err(Error::Precondition(format!("no weakly decreasing sequence has degree {d:?}")));
    }
    Ok(out)
}

/// Standard LS-tableaux of type `(lambda, I)`, degree `d`, bounded by `tau`. Requires
/// the index poset to be `tau`-standard.
pub fn enumerate_standard(setup: &Setup, dcp: &Dcp, d: &[i64]) -> Result<Vec<LsTableau>> {
    let report = check_standard(setup, dcp);
    if !report.standard {
        return Err(Error::NotTauStandard(format!("{} colliding node pairs", report.collisions.len())));
    }
    let shape = shape_for_degree(setup.iposet(), d)?;
    if shape.is_empty() {
        return Ok(vec![LsTableau { columns: vec![] }]);
    }
    let g = setup.group();
    let mut candidates: BTreeMap<usize, Vec<LsPath>> = BTreeMap::new();
    for &i in &shape {
        if let std::collections::btree_map::Entry::Vacant(e) = candidates.entry(i) {
            e.insert(enumerate_ls_paths(g, setup.lambda_index(i), setup.tau(), 1)?);
        }
    }
    let mu = setup.weight_of_degree(d);
    let wmu = Parabolic::stabilizer(&mu);
    let start = g.coset_max(g.project(setup.tau(), wmu)?);
    let mut out = Vec::new();
    let mut cur = Vec::new();
    extend(g, &shape, &candidates, start, &mut cur, &mut out);
    Ok(out)
}

fn extend(
    g: &WeylGroup,
    shape: &[usize],
    candidates: &BTreeMap<usize, Vec<LsPath>>,
    bound: usize,
    cur: &mut Vec<LsPath>,
    out: &mut Vec<LsTableau>,
) {
    let k = cur.len();
    if k == shape.len() {
        out.push(LsTableau { columns: cur.clone() });
        return;
    }
    'paths: for path in &candidates[&shape[k]] {
        let mut b = bound;
        for &c in &path.cosets {
            match g.max_below_in_coset(b, c) {
                Some(x) => b = x,
                None => continue 'paths,
            }
        }
        cur.push(path.clone());
        extend(g, shape, candidates, b, cur, out);
        cur.pop();
    }
}

/// Multiset of endpoints.
pub fn character(g: &WeylGroup, tableaux: &[LsTableau]) -> Result<Character> {
    let mut ch = Character::new();
    for t in tableaux {
        *ch.entry(t.endpoint(g)?).or_insert(0) += 1;
    }
    Ok(ch)
}

/// A Young tableau in type `A_n`, stored column by column from left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct YoungTableau {
    pub columns: Vec<Vec<usize>>,
}

impl YoungTableau {
    /// Rows weakly increase, columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        let cols_ok = self.columns.iter().all(|c| c.windows(2).all(|w| w[0] < w[1]));
        let rows_ok = self.columns.windows(2).all(|w| {
            w[0].len() >= w[1].len() && w[1].iter().zip(&w[0]).all(|(right, left)| left <= right)
        });
        cols_ok && rows_ok
    }

    /// Rows, top to bottom.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let h = self.columns.iter().map(|c| c.len()).max().unwrap_or(0);
        (0..h)
            .map(|r| self.columns.iter().filter_map(|c| c.get(r).copied()).collect())
            .collect()
    }
}

/// Young tableau of an LS-tableau whose columns are single cosets of maximal parabolics
/// (type `A`, fundamental shapes): columns are reversed and each coset becomes its set.
pub fn young_from_ls(g: &WeylGroup, t: &LsTableau) -> Result<YoungTableau> {
    let mut columns = Vec::new();
    for c in t.columns.iter().rev() {
        if c.cosets.len() != 1 {
            return Err(Error::InvalidTableau("columns must be single cosets".into()));
        }
        columns.push(type_a::subset_of_coset(g, c.cosets[0])?);
    }
    Ok(YoungTableau { columns })
}

pub fn ls_from_young(g: &WeylGroup, y: &YoungTableau) -> Result<LsTableau> {
    let mut columns = Vec::new();
    for col in y.columns.iter().rev() {
        if col.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidTableau("columns must increase strictly".into()));
        }
        let c = type_a::coset_from_subset(g, col)?;
        let mut shape = vec![0; g.rank()];
        shape[col.len() - 1] = 1;
        columns.push(LsPath {
            shape,
            cosets: vec![c],
            cuts: vec![crate::Rational::from_integer(1)],
        });
    }
    Ok(LsTableau { columns })
}
