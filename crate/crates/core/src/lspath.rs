//! Lakshmibai-Seshadri paths.
//!
//! A path `(sigma_p > ... > sigma_1; 0 < d_p < ... < d_1 = 1)` of shape `nu` is stored
//! with `cosets = [sigma_p, ..., sigma_1]` in `W/W_nu` and `cuts = [d_p, ..., d_1]`.
//! It runs in direction `sigma_p(nu)` on `[0, d_p]`, then `sigma_{p-1}(nu)` up to
//! `d_{p-1}`, and so on.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::BondedPoset;
use crate::weyl::{Coset, Parabolic, Weight, WeylGroup};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LsPath {
    pub shape: Weight,
    pub cosets: Vec<Coset>,
    pub cuts: Vec<Rational>,
}

/// Serialized form: cosets as 1-based reduced words of minimal representatives, cuts as
/// `"num/den"` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LsPathJson {
    pub shape: Weight,
    pub cosets: Vec<Vec<usize>>,
    pub cuts: Vec<String>,
}

pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidPath(format!("bad rational {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse().map_err(|_| bad())?, d.trim().parse().map_err(|_| bad())?),
        None => (s.trim().parse().map_err(|_| bad())?, 1i64),
    };
    if d == 0 {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// The interval below `top` in `W/W_P` as a bonded poset for the weight `nu`. Node 0 is
/// `top`; nodes are sorted by decreasing length.
pub struct QuotientPoset {
    pub cosets: Vec<Coset>,
    pub poset: BondedPoset,
}

impl QuotientPoset {
    pub fn new(g: &WeylGroup, nu: &[i64], top: Coset) -> Self {
        let p = top.parabolic;
        let mut cosets: Vec<Coset> = g
            .cosets(p)
            .into_iter()
            .filter(|&c| g.coset_leq(c, top))
            .collect();
        cosets.sort_by_key(|c| (std::cmp::Reverse(g.length(c.rep)), c.rep));
        let pos = |rep: usize| cosets.iter().position(|c| c.rep == rep).unwrap();
        let covers = g.lower_covers(p);
        let lower: Vec<Vec<(usize, i64)>> = cosets
            .iter()
            .map(|c| {
                covers[c.rep]
                    .iter()
                    .map(|&y| {
                        let beta = g.cover_root(c.rep, y);
                        let bond = g.datum().pair_coroot(&g.act(y, nu), beta).abs();
                        (pos(y), bond)
                    })
                    .collect()
            })
            .collect();
        let rank = cosets.iter().map(|c| g.length(c.rep)).collect();
        QuotientPoset {
            cosets,
            poset: BondedPoset { rank, lower, top: 0 },
        }
    }

    pub fn position(&self, c: Coset) -> Option<usize> {
        self.cosets.iter().position(|&x| x == c)
    }
}

fn check_shape(g: &WeylGroup, nu: &[i64]) -> Result<()> {
    if nu.len() != g.rank() || nu.iter().any(|&x| x < 0) || nu.iter().all(|&x| x == 0) {
        return Err(Error::InvalidWeight(format!("{nu:?} is not a non-zero dominant weight")));
    }
    Ok(())
}

impl LsPath {
    /// Check the defining conditions; the chain condition uses the bonds of `W/W_nu`.
    pub fn validate(&self, g: &WeylGroup) -> Result<()> {
        check_shape(g, &self.shape)?;
        let bad = |m: &str| Err(Error::InvalidPath(m.to_string()));
        let p = Parabolic::stabilizer(&self.shape);
        if self.cosets.is_empty() || self.cosets.len() != self.cuts.len() {
            return bad("cosets and cuts must be non-empty and of equal length");
        }
        if self.cosets.iter().any(|c| c.parabolic != p || !g.is_min_rep(c.rep, p)) {
            return bad("cosets must be minimal representatives in W/W_shape");
        }
        if *self.cuts.last().unwrap() != Rational::one() {
            return bad("the last cut must be 1");
        }
        let mut prev = Rational::zero();
        for c in &self.cuts {
            if *c <= prev {
                return bad("cuts must increase strictly from 0");
            }
            prev = *c;
        }
        let q = QuotientPoset::new(g, &self.shape, g.coset(g.w0(), p));
        for k in 0..self.cosets.len() - 1 {
            let (hi, lo) = (self.cosets[k], self.cosets[k + 1]);
            if hi == lo || !g.coset_leq(lo, hi) {
                return bad("cosets must decrease strictly");
            }
            let q_den = *self.cuts[k].denom();
            let (u, v) = (q.position(hi).unwrap(), q.position(lo).unwrap());
            if !q.poset.chain_exists(q_den, u, v) {
                return bad("no (d, nu)-chain between consecutive cosets");
            }
        }
        Ok(())
    }

    /// `pi(1) = sum_j (d_j - d_{j+1}) sigma_j(nu)`.
    pub fn endpoint(&self, g: &WeylGroup) -> Result<Weight> {
        let mut acc = vec![Rational::zero(); g.rank()];
        let mut prev = Rational::zero();
        for (c, &cut) in self.cosets.iter().zip(&self.cuts) {
            let dir = g.act(c.rep, &self.shape);
            for (a, &x) in acc.iter_mut().zip(&dir) {
                *a += (cut - prev) * Rational::from_integer(x);
            }
            prev = cut;
        }
        acc.into_iter()
            .map(|x| {
                if x.is_integer() {
                    Ok(x.to_integer())
                } else {
                    Err(Error::InvalidPath("endpoint is not integral".into()))
                }
            })
            .collect()
    }

    /// Initial direction `sigma_p`.
    pub fn initial(&self) -> Coset {
        self.cosets[0]
    }

    /// Coefficients `(d_j - d_{j+1}) * d` on the cosets, for a path of shape `d nu`.
    pub fn to_vector(&self, d: i64) -> Vec<(Coset, Rational)> {
        let mut prev = Rational::zero();
        self.cosets
            .iter()
            .zip(&self.cuts)
            .map(|(&c, &cut)| {
                let coeff = (cut - prev) * Rational::from_integer(d);
                prev = cut;
                (c, coeff)
            })
            .collect()
    }

    /// Inverse of [`LsPath::to_vector`]: entries must be sorted from the largest coset down.
    pub fn from_vector(shape: Weight, d: i64, entries: &[(Coset, Rational)]) -> Self {
        let mut partial = Rational::zero();
        let mut cosets = Vec::new();
        let mut cuts = Vec::new();
        for &(c, a) in entries {
            partial += a;
            cosets.push(c);
            cuts.push(partial / Rational::from_integer(d));
        }
        LsPath { shape, cosets, cuts }
    }

    pub fn to_json(&self, g: &WeylGroup) -> LsPathJson {
        LsPathJson {
            shape: self.shape.clone(),
            cosets: self
                .cosets
                .iter()
                .map(|c| g.reduced_word(c.rep).iter().map(|i| i + 1).collect())
                .collect(),
            cuts: self.cuts.iter().map(rational_string).collect(),
        }
    }

    pub fn from_json(g: &WeylGroup, j: &LsPathJson) -> Result<Self> {
        check_shape(g, &j.shape)?;
        let p = Parabolic::stabilizer(&j.shape);
        let cosets = j
            .cosets
            .iter()
            .map(|w| {
                let word: Vec<usize> = w
                    .iter()
                    .map(|&i| i.checked_sub(1).ok_or_else(|| Error::InvalidWord("letters are 1-based".into())))
                    .collect::<Result<_>>()?;
                Ok(g.coset(g.from_word(&word)?, p))
            })
            .collect::<Result<Vec<_>>>()?;
        let cuts = j.cuts.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
        let path = LsPath {
            shape: j.shape.clone(),
            cosets,
            cuts,
        };
        path.validate(g)?;
        Ok(path)
    }
}

/// All LS-paths of shape `d nu` with initial direction at most `tau`.
///
/// Paths correspond to the degree-`d` points of the LS-monoid of the interval below
/// `tau` in `W/W_nu`; the chains are explored implicitly through the supports.
pub fn enumerate_ls_paths(g: &WeylGroup, nu: &[i64], tau: Coset, d: i64) -> Result<Vec<LsPath>> {
    check_shape(g, nu)?;
    if d < 1 {
        return Err(Error::Precondition("degree must be positive".into()));
    }
    let p = Parabolic::stabilizer(nu);
    let top = g.project(tau, p)?;
    let q = QuotientPoset::new(g, nu, top);
    let shape: Weight = nu.iter().map(|x| x * d).collect();
    let deg = vec![vec![1]; q.cosets.len()];
    let mut out: Vec<LsPath> = q
        .poset
        .monoid_points(&deg, &[d])
        .into_iter()
        .map(|v| {
            let mut entries: Vec<(Coset, Rational)> = v.iter().map(|(&k, &a)| (q.cosets[k], a)).collect();
            entries.sort_by_key(|(c, _)| std::cmp::Reverse(g.length(c.rep)));
            LsPath::from_vector(shape.clone(), d, &entries)
        })
        .collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::demazure_oracle::demazure_character;
    use crate::weyl::{weyl_group, Family};
    use proptest::prelude::*;

    fn endpoint_character(g: &WeylGroup, paths: &[LsPath]) -> BTreeMap<Weight, i64> {
        let mut ch = BTreeMap::new();
        for p in paths {
            *ch.entry(p.endpoint(g).unwrap()).or_insert(0) += 1;
        }
        ch
    }

    #[test]
    fn paths_give_demazure_characters() {
        let cases: Vec<(Family, usize, Vec<i64>)> = vec![
            (Family::A, 2, vec![1, 0]),
            (Family::A, 2, vec![1, 1]),
            (Family::A, 3, vec![0, 1, 0]),
            (Family::A, 3, vec![1, 0, 1]),
            (Family::B, 2, vec![1, 0]),
            (Family::B, 2, vec![0, 1]),
            (Family::C, 3, vec![0, 1, 0]),
            (Family::B, 3, vec![0, 0, 1]),
            (Family::G, 2, vec![1, 0]),
            (Family::G, 2, vec![0, 1]),
            (Family::D, 4, vec![0, 1, 0, 0]),
        ];
        for (f, n, nu) in cases {
            let g = weyl_group(f, n).unwrap();
            let p = Parabolic::stabilizer(&nu);
            let taus: Vec<Coset> = g.cosets(p).into_iter().step_by(3).collect();
            for tau in taus {
                for d in 1..=2 {
                    let paths = enumerate_ls_paths(&g, &nu, tau, d).unwrap();
                    for path in &paths {
                        path.validate(&g).unwrap();
                        assert!(g.coset_leq(path.initial(), tau));
                    }
                    let mu: Vec<i64> = nu.iter().map(|x| x * d).collect();
                    assert_eq!(endpoint_character(&g, &paths), demazure_character(&g, &mu, tau).unwrap(), "{f}{n} {nu:?} d={d}");
                }
            }
        }
    }

    #[test]
    fn g2_has_non_integral_cuts() {
        let g = weyl_group(Family::G, 2).unwrap();
        let nu = vec![1, 0];
        let top = g.coset(g.w0(), Parabolic::stabilizer(&nu));
        let paths = enumerate_ls_paths(&g, &nu, top, 1).unwrap();
        assert_eq!(paths.len(), 7);
        assert!(paths.iter().any(|p| p.cuts.len() > 1));
    }

    /// All decreasing coset sequences with cuts on a grid, filtered by `validate`.
    fn brute_force(g: &WeylGroup, nu: &[i64], d: i64, grid: i64) -> Vec<LsPath> {
        let p = Parabolic::stabilizer(nu);
        let shape: Weight = nu.iter().map(|x| x * d).collect();
        let cosets = g.cosets(p);
        let mut out = Vec::new();
        fn rec(
            g: &WeylGroup,
            cosets: &[Coset],
            cur: &mut Vec<Coset>,
            cuts: &mut Vec<Rational>,
            grid: i64,
            shape: &Weight,
            out: &mut Vec<LsPath>,
        ) {
            let last = cuts.last().copied().unwrap_or_else(Rational::zero);
            if last == Rational::one() {
                let path = LsPath {
                    shape: shape.clone(),
                    cosets: cur.clone(),
                    cuts: cuts.clone(),
                };
                if path.validate(g).is_ok() {
                    out.push(path);
                }
                return;
            }
            for &c in cosets {
                if let Some(&prev) = cur.last() {
                    if prev == c || !g.coset_leq(c, prev) {
                        continue;
                    }
                }
                for k in 1..=grid {
                    let cut = Rational::new(k, grid);
                    if cut <= last {
                        continue;
                    }
                    cur.push(c);
                    cuts.push(cut);
                    rec(g, cosets, cur, cuts, grid, shape, out);
                    cur.pop();
                    cuts.pop();
                }
            }
        }
        rec(g, &cosets, &mut vec![], &mut vec![], grid, &shape, &mut out);
        out.sort();
        out
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for (f, n, nu, d) in [
            (Family::B, 2, vec![1, 0], 1),
            (Family::B, 2, vec![0, 1], 2),
            (Family::G, 2, vec![1, 0], 1),
            (Family::A, 2, vec![1, 1], 1),
        ] {
            let g = weyl_group(f, n).unwrap();
            let top = g.coset(g.w0(), Parabolic::stabilizer(&nu));
            let fast = enumerate_ls_paths(&g, &nu, top, d).unwrap();
            assert_eq!(fast, brute_force(&g, &nu, d, 6 * d), "{f}{n} {nu:?}");
        }
    }

    #[test]
    fn per_chain_enumeration_agrees() {
        for (f, n, nu) in [(Family::B, 3, vec![1, 0, 0]), (Family::G, 2, vec![0, 1]), (Family::C, 3, vec![1, 0, 0])] {
            let g = weyl_group(f, n).unwrap();
            let top = g.coset(g.w0(), Parabolic::stabilizer(&nu));
            let q = QuotientPoset::new(&g, &nu, top);
            let deg = vec![vec![1]; q.cosets.len()];
            for d in 1..=3 {
                assert_eq!(
                    q.poset.monoid_points(&deg, &[d]),
                    crate::poset::monoid_points_by_chains(&q.poset, &deg, &[d])
                );
            }
        }
    }

    #[test]
    fn validation_rejections() {
        let g = weyl_group(Family::B, 2).unwrap();
        let nu = vec![1, 0];
        let p = Parabolic::stabilizer(&nu);
        let top = g.coset(g.w0(), p);
        let id = g.coset(0, p);
        let ok = LsPath { shape: nu.clone(), cosets: vec![top], cuts: vec![Rational::one()] };
        ok.validate(&g).unwrap();
        let wrong_order = LsPath { shape: nu.clone(), cosets: vec![id, top], cuts: vec![Rational::new(1, 2), Rational::one()] };
        assert!(wrong_order.validate(&g).is_err());
        let bad_cut = LsPath { shape: nu.clone(), cosets: vec![top], cuts: vec![Rational::new(1, 2)] };
        assert!(bad_cut.validate(&g).is_err());
        let not_dominant = LsPath { shape: vec![-1, 0], cosets: vec![top], cuts: vec![Rational::one()] };
        assert!(not_dominant.validate(&g).is_err());
        // cut 1/3 is not compatible with bonds 1 or 2
        let one_third = LsPath {
            shape: nu.clone(),
            cosets: vec![top, id],
            cuts: vec![Rational::new(1, 3), Rational::one()],
        };
        assert!(one_third.validate(&g).is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = weyl_group(Family::G, 2).unwrap();
        let nu = vec![1, 0];
        let top = g.coset(g.w0(), Parabolic::stabilizer(&nu));
        for path in enumerate_ls_paths(&g, &nu, top, 2).unwrap() {
            let j = path.to_json(&g);
            assert_eq!(LsPath::from_json(&g, &j).unwrap(), path);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn vector_round_trip(k in 0usize..40, d in 1i64..4) {
            let g = weyl_group(Family::B, 3).unwrap();
            let nu = vec![0, 1, 0];
            let top = g.coset(g.w0(), Parabolic::stabilizer(&nu));
            let paths = enumerate_ls_paths(&g, &nu, top, d).unwrap();
            let path = &paths[k % paths.len()];
            let back = LsPath::from_vector(path.shape.clone(), d, &path.to_vector(d));
            prop_assert_eq!(&back, path);
            let total: Rational = path.to_vector(d).iter().map(|x| x.1).sum();
            prop_assert_eq!(total, Rational::from_integer(d));
        }
    }
}
