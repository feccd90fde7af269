//! Demazure characters and the Weyl dimension formula.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::weyl::{Coset, Parabolic, RootDatum, Weight, WeylGroup};

/// A virtual character: weight to multiplicity, zero entries removed.
pub type Character = BTreeMap<Weight, i64>;

fn check_dominant(mu: &[i64], rank: usize) -> Result<()> {
    if mu.len() != rank || mu.iter().any(|&x| x < 0) {
        return Err(Error::InvalidWeight(format!("{mu:?} is not a dominant weight of rank {rank}")));
    }
    Ok(())
}

fn add(ch: &mut Character, w: Weight, c: i64) {
    match ch.entry(w) {
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if *e.get() == 0 {
                e.remove();
            }
        }
        Entry::Vacant(e) => {
            if c != 0 {
                e.insert(c);
            }
        }
    }
}

/// The Demazure operator `D_i` applied to a character.
pub fn demazure_operator(datum: &RootDatum, i: usize, ch: &Character) -> Character {
    let alpha = datum.simple_root_weight(i);
    let shift = |nu: &Weight, k: i64| -> Weight { nu.iter().zip(&alpha).map(|(a, b)| a - k * b).collect() };
    let mut out = Character::new();
    for (nu, &c) in ch {
        let n = nu[i];
        if n >= 0 {
            for k in 0..=n {
                add(&mut out, shift(nu, k), c);
            }
        } else if n <= -2 {
            for k in 1..-n {
                add(&mut out, shift(nu, -k), -c);
            }
        }
    }
    out
}

/// Character of the Demazure module `V(mu)_tau`. The coset `tau` is projected to
/// `W/W_mu`; its parabolic must lie in the stabilizer of `mu`.
pub fn demazure_character(g: &WeylGroup, mu: &[i64], tau: Coset) -> Result<Character> {
    check_dominant(mu, g.rank())?;
    let tau = g.project(tau, Parabolic::stabilizer(mu))?;
    let mut ch = Character::from([(mu.to_vec(), 1)]);
    for &i in g.reduced_word(tau.rep).iter().rev() {
        ch = demazure_operator(g.datum(), i, &ch);
    }
    Ok(ch)
}

/// `dim V(mu)_tau`.
pub fn demazure_dimension(g: &WeylGroup, mu: &[i64], tau: Coset) -> Result<i64> {
    Ok(demazure_character(g, mu, tau)?.values().sum())
}

/// Weyl dimension formula `prod <mu + rho, beta^vee> / <rho, beta^vee>`.
pub fn weyl_dimension(datum: &RootDatum, mu: &[i64]) -> Result<BigUint> {
    check_dominant(mu, datum.rank)?;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for cor in &datum.positive_coroots {
        let r: i64 = cor.iter().sum();
        let m: i64 = cor.iter().zip(mu).map(|(c, x)| c * (x + 1)).sum();
        num *= m;
        den *= r;
    }
    debug_assert!((&num % &den).is_zero());
    Ok((num / den).to_biguint().expect("positive"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{weyl_group, Family};
    use proptest::prelude::*;

    /// Number of semistandard Young tableaux with entries in `1..=n+1` (type `A_n`).
    fn ssyt_count(mu: &[i64]) -> u64 {
        let n = mu.len();
        // column lengths from the omega-coordinates
        let mut cols = vec![];
        for k in (0..n).rev() {
            for _ in 0..mu[k] {
                cols.push(k + 1);
            }
        }
        fn rec(cols: &[usize], prev: Option<&[usize]>, max: usize) -> u64 {
            let Some((&len, rest)) = cols.split_first() else { return 1 };
            let mut total = 0;
            let mut col = vec![0; len];
            fn fill(
                k: usize,
                col: &mut Vec<usize>,
                prev: Option<&[usize]>,
                max: usize,
                rest: &[usize],
                total: &mut u64,
            ) {
                if k == col.len() {
                    *total += rec(rest, Some(col), max);
                    return;
                }
                let lo = if k == 0 { 1 } else { col[k - 1] + 1 };
                for x in lo..=max {
                    if prev.is_some_and(|p| p[k] > x) {
                        continue;
                    }
                    col[k] = x;
                    fill(k + 1, col, prev, max, rest, total);
                }
            }
            fill(0, &mut col, prev, max, rest, &mut total);
            total
        }
        rec(&cols, None, n + 1)
    }

    #[test]
    fn weyl_dimension_matches_tableaux_count() {
        for n in 1..=4 {
            let d = RootDatum::new(Family::A, n).unwrap();
            let mut mus = vec![vec![0; n]];
            for _ in 0..3 {
                let mut next = vec![];
                for m in &mus {
                    for i in 0..n {
                        let mut m2 = m.clone();
                        m2[i] += 1;
                        next.push(m2);
                    }
                }
                mus.extend(next);
            }
            for mu in mus {
                assert_eq!(weyl_dimension(&d, &mu).unwrap(), BigUint::from(ssyt_count(&mu)));
            }
        }
    }

    #[test]
    fn known_dimensions() {
        let cases = [
            (Family::B, 3, vec![1, 0, 0], 7u32),
            (Family::B, 3, vec![0, 0, 1], 8),
            (Family::C, 3, vec![1, 0, 0], 6),
            (Family::D, 4, vec![0, 1, 0, 0], 28),
            (Family::G, 2, vec![1, 0], 7),
            (Family::G, 2, vec![0, 1], 14),
            (Family::F, 4, vec![0, 0, 0, 1], 26),
            (Family::E, 8, vec![0, 0, 0, 0, 0, 0, 0, 1], 248),
        ];
        for (f, n, mu, dim) in cases {
            let d = RootDatum::new(f, n).unwrap();
            assert_eq!(weyl_dimension(&d, &mu).unwrap(), BigUint::from(dim), "{f}{n} {mu:?}");
        }
    }

    #[test]
    fn full_demazure_character_is_weyl_character() {
        for (f, n) in [(Family::A, 3), (Family::B, 3), (Family::G, 2), (Family::D, 4)] {
            let g = weyl_group(f, n).unwrap();
            for mu in [vec![1; n], {
                let mut v = vec![0; n];
                v[0] = 2;
                v
            }] {
                let tau = g.coset(g.w0(), Parabolic::BOREL);
                let ch = demazure_character(&g, &mu, tau).unwrap();
                assert!(ch.values().all(|&c| c > 0));
                let dim: i64 = ch.values().sum();
                assert_eq!(BigUint::from(dim as u64), weyl_dimension(g.datum(), &mu).unwrap());
                // W-invariance
                for i in 0..n {
                    for (nu, c) in &ch {
                        let s = g.act(g.simple(i), nu);
                        assert_eq!(ch.get(&s), Some(c));
                    }
                }
            }
        }
    }

    #[test]
    fn identity_gives_highest_weight_only() {
        let g = weyl_group(Family::B, 3).unwrap();
        let ch = demazure_character(&g, &[1, 1, 0], g.coset(0, Parabolic::BOREL)).unwrap();
        assert_eq!(ch, Character::from([(vec![1, 1, 0], 1)]));
    }

    #[test]
    fn simple_reflection_string() {
        // D_1 e^{2 omega_1} in A_1: e^2 + e^0 + e^-2
        let g = weyl_group(Family::A, 1).unwrap();
        let ch = demazure_character(&g, &[2], g.coset(g.w0(), Parabolic::BOREL)).unwrap();
        assert_eq!(ch, Character::from([(vec![2], 1), (vec![0], 1), (vec![-2], 1)]));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn operators_are_idempotent(i in 0usize..3, entries in prop::collection::vec((prop::collection::vec(-3i64..4, 3), -2i64..3), 1..6)) {
            let d = RootDatum::new(Family::B, 3).unwrap();
            let mut ch = Character::new();
            for (w, c) in entries {
                if c != 0 {
                    add(&mut ch, w, c);
                }
            }
            let once = demazure_operator(&d, i, &ch);
            let twice = demazure_operator(&d, i, &once);
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn demazure_dimension_is_monotone(word in prop::collection::vec(0usize..3, 0..8), a in 0i64..3, b in 0i64..3) {
            let g = weyl_group(Family::A, 3).unwrap();
            let w = g.from_word(&word).unwrap();
            let mu = vec![a, b, 1];
            let full = demazure_dimension(&g, &mu, g.coset(w, Parabolic::BOREL)).unwrap();
            for i in 0..3 {
                let sw = g.lmul(i, w);
                if g.length(sw) < g.length(w) {
                    let smaller = demazure_dimension(&g, &mu, g.coset(sw, Parabolic::BOREL)).unwrap();
                    prop_assert!(smaller <= full);
                }
            }
        }
    }
}
