//! One-line notation for type `A_n` (`W = S_{n+1}`).
//!
//! `w` sends `e_j` to `e_{w(j)}`; a coset in `W/W_{P_k}` (stabilizer of `omega_k`) is
//! written as the sorted set `{w(1), ..., w(k)}`.

use super::group::WeylGroup;
use super::parabolic::{Coset, Parabolic};
use super::root_datum::Family;
use crate::error::{Error, Result};

fn check(g: &WeylGroup) -> Result<usize> {
    if g.datum().family != Family::A {
        return Err(Error::Precondition("one-line notation needs type A".into()));
    }
    Ok(g.rank())
}

fn epsilon(n: usize, j: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    if j < n {
        v[j] += 1;
    }
    if j > 0 {
        v[j - 1] -= 1;
    }
    v
}

/// One-line notation `w(1) ... w(n+1)` (1-based values).
pub fn one_line(g: &WeylGroup, w: usize) -> Result<Vec<usize>> {
    let n = check(g)?;
    let eps: Vec<Vec<i64>> = (0..=n).map(|j| epsilon(n, j)).collect();
    Ok((0..=n)
        .map(|j| {
            let img = g.act(w, &eps[j]);
            eps.iter().position(|e| *e == img).unwrap() + 1
        })
        .collect())
}

pub fn from_one_line(g: &WeylGroup, perm: &[usize]) -> Result<usize> {
    let n = check(g)?;
    let mut sorted = perm.to_vec();
    sorted.sort_unstable();
    if sorted != (1..=n + 1).collect::<Vec<_>>() {
        return Err(Error::InvalidWord(format!("{perm:?} is not a permutation of 1..{}", n + 1)));
    }
    (0..g.order())
        .find(|&w| one_line(g, w).unwrap() == perm)
        .ok_or_else(|| Error::InvalidWord("permutation not found".into()))
}

/// Parse a string of digits such as `"4312"`.
pub fn parse_digits(s: &str) -> Result<Vec<usize>> {
    s.chars()
        .map(|c| {
            c.to_digit(10)
                .map(|d| d as usize)
                .ok_or_else(|| Error::InvalidWord(format!("bad digit in {s:?}")))
        })
        .collect()
}

pub fn perm(g: &WeylGroup, s: &str) -> Result<usize> {
    from_one_line(g, &parse_digits(s)?)
}

/// Parabolic of the maximal parabolic `P_k` (stabilizer of `omega_k`), `k` 1-based.
pub fn maximal_parabolic(g: &WeylGroup, k: usize) -> Parabolic {
    Parabolic::full(g.rank()).minus(Parabolic::from_indices([k - 1]))
}

/// Coset of `W/W_P` with `P` the stabilizer of a sum of fundamental weights, from the
/// sets `{w(1..k)}` for each `k` not in `P`. For `W/W_{P_k}` pass a single subset.
pub fn coset_from_subset(g: &WeylGroup, subset: &[usize]) -> Result<Coset> {
    let n = check(g)?;
    let k = subset.len();
    if k == 0 || k > n {
        return Err(Error::InvalidWord(format!("subset {subset:?} has bad size")));
    }
    let mut rest: Vec<usize> = (1..=n + 1).filter(|x| !subset.contains(x)).collect();
    let mut p: Vec<usize> = subset.to_vec();
    p.sort_unstable();
    p.append(&mut rest);
    let w = from_one_line(g, &p)?;
    Ok(g.coset(w, maximal_parabolic(g, k)))
}

pub fn coset_from_digits(g: &WeylGroup, s: &str) -> Result<Coset> {
    coset_from_subset(g, &parse_digits(s)?)
}

/// Sorted set `{w(1), ..., w(k)}` of a coset of a maximal parabolic `P_k`.
pub fn subset_of_coset(g: &WeylGroup, c: Coset) -> Result<Vec<usize>> {
    let n = check(g)?;
    let missing: Vec<usize> = Parabolic::full(n).minus(c.parabolic).indices().collect();
    if missing.len() != 1 {
        return Err(Error::Precondition("coset of a maximal parabolic expected".into()));
    }
    let k = missing[0] + 1;
    let mut s = one_line(g, c.rep)?[..k].to_vec();
    s.sort_unstable();
    Ok(s)
}

pub fn digits(v: &[usize]) -> String {
    v.iter().map(|d| d.to_string()).collect()
}
