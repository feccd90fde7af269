use std::collections::BTreeSet;

use proptest::prelude::*;

use super::type_a::*;
use super::*;

fn group(f: Family, n: usize) -> WeylGroup {
    weyl_group(f, n).unwrap()
}

/// All products of subwords of a reduced word of `v`: this is the interval `[e, v]`.
fn subword_interval(g: &WeylGroup, v: usize) -> BTreeSet<usize> {
    let word = g.reduced_word(v).to_vec();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << word.len()) {
        let sub: Vec<usize> = word
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &i)| i)
            .collect();
        out.insert(g.from_word(&sub).unwrap());
    }
    out
}

fn all_parabolics(n: usize) -> Vec<Parabolic> {
    (0..1u32 << n).map(Parabolic).collect()
}

#[test]
fn group_orders() {
    for (f, n, o) in [
        (Family::A, 1, 2),
        (Family::A, 3, 24),
        (Family::B, 2, 8),
        (Family::B, 3, 48),
        (Family::C, 3, 48),
        (Family::D, 4, 192),
        (Family::G, 2, 12),
        (Family::F, 4, 1152),
    ] {
        let g = group(f, n);
        assert_eq!(g.order(), o);
        assert_eq!(g.length(g.w0()), g.datum().positive_roots.len());
    }
    assert!(matches!(
        weyl_group(Family::E, 6),
        Err(crate::Error::GroupTooLarge { .. })
    ));
}

#[test]
fn length_counts_inversions_of_roots() {
    for (f, n) in [(Family::B, 3), (Family::G, 2), (Family::D, 4)] {
        let g = group(f, n);
        let d = g.datum();
        let pos: Vec<Vec<i64>> = (0..d.positive_roots.len()).map(|b| d.root_weight(b)).collect();
        for w in 0..g.order() {
            let neg = pos.iter().filter(|r| !pos.contains(&g.act(w, r))).count();
            assert_eq!(neg, g.length(w));
        }
    }
}

#[test]
fn bruhat_matches_subword_property() {
    for (f, n) in [(Family::A, 3), (Family::B, 3), (Family::G, 2), (Family::C, 3)] {
        let g = group(f, n);
        for v in 0..g.order() {
            let below = subword_interval(&g, v);
            for u in 0..g.order() {
                assert_eq!(g.bruhat_leq(u, v), below.contains(&u));
            }
        }
    }
}

#[test]
fn bruhat_matches_tableau_criterion_in_type_a() {
    let g = group(Family::A, 3);
    for u in 0..g.order() {
        let pu = one_line(&g, u).unwrap();
        for v in 0..g.order() {
            let pv = one_line(&g, v).unwrap();
            let crit = (1..=4).all(|k| {
                let mut a = pu[..k].to_vec();
                let mut b = pv[..k].to_vec();
                a.sort_unstable();
                b.sort_unstable();
                a.iter().zip(&b).all(|(x, y)| x <= y)
            });
            assert_eq!(g.bruhat_leq(u, v), crit);
        }
    }
}

#[test]
fn one_line_conventions() {
    let g = group(Family::A, 3);
    assert_eq!(one_line(&g, g.simple(0)).unwrap(), vec![2, 1, 3, 4]);
    assert_eq!(one_line(&g, g.w0()).unwrap(), vec![4, 3, 2, 1]);
    let w = g.from_word(&[1, 0]).unwrap();
    let c = g.coset(w, maximal_parabolic(&g, 1));
    assert_eq!(subset_of_coset(&g, c).unwrap(), vec![3]);
    for w in 0..g.order() {
        let p = one_line(&g, w).unwrap();
        let inv = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        assert_eq!(inv, g.length(w));
    }
}

#[test]
fn lift_examples_in_type_a() {
    let g = group(Family::A, 3);
    let line = |w| digits(&one_line(&g, w).unwrap());
    let c134 = coset_from_digits(&g, "134").unwrap();
    assert_eq!(line(g.coset_max(c134)), "4312");
    let c13 = coset_from_digits(&g, "13").unwrap();
    assert_eq!(line(g.coset_max(c13)), "3142");
    let c3 = coset_from_digits(&g, "3").unwrap();
    assert_eq!(line(g.min_lift(c3, Parabolic::BOREL).unwrap().rep), "3124");
    let c124 = coset_from_digits(&g, "124").unwrap();
    let phi = g.coset(perm(&g, "3124").unwrap(), Parabolic::BOREL);
    let lift = g.deodhar_min_lift(phi, c124).unwrap();
    assert_eq!(line(lift.rep), "4123");
}

/// Every coset of `W/W_small` lying over `phi`.
fn lifts(g: &WeylGroup, phi: Coset, small: Parabolic) -> Vec<Coset> {
    g.cosets(small)
        .into_iter()
        .filter(|c| g.min_rep(c.rep, phi.parabolic) == phi.rep)
        .collect()
}

fn unique_extreme(g: &WeylGroup, set: &[Coset], max: bool) -> Coset {
    let ext: Vec<Coset> = set
        .iter()
        .copied()
        .filter(|&a| {
            set.iter()
                .all(|&b| if max { g.coset_leq(b, a) } else { g.coset_leq(a, b) })
        })
        .collect();
    assert_eq!(ext.len(), 1);
    ext[0]
}

fn check_deodhar_grid(g: &WeylGroup) {
    let n = g.rank();
    for p in all_parabolics(n) {
        for p2 in all_parabolics(n).into_iter().filter(|&p2| p.is_subset(p2)) {
            for theta in g.cosets(p) {
                let pt = g.project(theta, p2).unwrap();
                for phi in g.cosets(p2) {
                    let ls = lifts(g, phi, p);
                    if g.coset_leq(phi, pt) {
                        let below: Vec<Coset> =
                            ls.iter().copied().filter(|&c| g.coset_leq(c, theta)).collect();
                        assert_eq!(g.deodhar_max_lift(theta, phi).unwrap(), unique_extreme(g, &below, true));
                    } else {
                        assert!(g.deodhar_max_lift(theta, phi).is_err());
                    }
                    // theta in W/W_{p2} playing the role of the coarse coset, phi2 fine
                    let fine = theta;
                    let coarse = phi;
                    if g.coset_leq(g.project(fine, p2).unwrap(), coarse) {
                        let above: Vec<Coset> =
                            ls.iter().copied().filter(|&c| g.coset_leq(fine, c)).collect();
                        assert_eq!(g.deodhar_min_lift(fine, coarse).unwrap(), unique_extreme(g, &above, false));
                    } else {
                        assert!(g.deodhar_min_lift(fine, coarse).is_err());
                    }
                }
            }
        }
    }
}

#[test]
fn deodhar_lifts_match_brute_force_a3() {
    check_deodhar_grid(&group(Family::A, 3));
}

#[test]
fn deodhar_lifts_match_brute_force_b2() {
    check_deodhar_grid(&group(Family::B, 2));
}

#[test]
fn deodhar_lifts_match_brute_force_g2() {
    check_deodhar_grid(&group(Family::G, 2));
}

#[test]
fn plain_lifts_are_extreme() {
    let g = group(Family::B, 3);
    for p in all_parabolics(3) {
        for p2 in all_parabolics(3).into_iter().filter(|&p2| p2.is_subset(p)) {
            for c in g.cosets(p) {
                let ls = lifts(&g, c, p2);
                assert_eq!(g.min_lift(c, p2).unwrap(), unique_extreme(&g, &ls, false));
                assert_eq!(g.max_lift(c, p2).unwrap(), unique_extreme(&g, &ls, true));
            }
        }
    }
}

#[test]
fn product_decomposition_lengths_add() {
    for (f, n) in [(Family::A, 3), (Family::C, 3), (Family::D, 4)] {
        let g = group(f, n);
        for p in all_parabolics(n) {
            for p2 in all_parabolics(n).into_iter().filter(|&p2| p.is_subset(p2)) {
                for w in g.min_reps(p) {
                    let (a, b) = g.product_decomposition(w, p, p2).unwrap();
                    assert_eq!(g.mul(a, b), w);
                    assert_eq!(g.length(a) + g.length(b), g.length(w));
                    assert!(g.is_min_rep(a, p2));
                    assert!(g.in_subgroup(b, p2) && g.is_min_rep(b, p));
                }
            }
        }
    }
}

#[test]
fn distinct_simple_reflections_give_reduced_words() {
    fn perms(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        for k in 0..rest.len() {
            let x = rest.remove(k);
            cur.push(x);
            perms(rest, cur, out);
            cur.pop();
            rest.insert(k, x);
        }
    }
    for (f, n) in [(Family::A, 3), (Family::D, 4), (Family::B, 3), (Family::F, 4)] {
        let g = group(f, n);
        let mut words = vec![];
        perms(&mut (0..n).collect(), &mut vec![], &mut words);
        for w in words {
            assert_eq!(g.length(g.from_word(&w).unwrap()), w.len());
        }
    }
}

#[test]
fn covering_roots_and_interval_cover() {
    for (f, n) in [(Family::A, 3), (Family::B, 3), (Family::G, 2)] {
        let g = group(f, n);
        for q in all_parabolics(n) {
            let top = g.coset(g.w0(), q);
            for (x, y, b) in g.covering_relations(q, top) {
                let sb = g.mul(x.rep, g.inverse(y.rep));
                assert_eq!(g.reflection_root(sb), Some(b));
                assert_eq!(g.length(x.rep), g.length(y.rep) + 1);
            }
            for p in all_parabolics(n).into_iter().filter(|&p| q.is_subset(p)) {
                for theta in g.cosets(q) {
                    for phi in g.cosets(q) {
                        let strict = theta != phi
                            && g.coset_leq(phi, theta)
                            && g.min_rep(theta.rep, p) != g.min_rep(phi.rep, p);
                        let r = g.bruhat_interval_cover(theta, phi, p);
                        assert_eq!(strict, r.is_ok());
                        if let Ok(psi) = r {
                            assert!(g.lower_covers(q)[theta.rep].contains(&psi.rep));
                            assert!(g.coset_leq(phi, psi));
                            assert_ne!(g.min_rep(psi.rep, p), g.min_rep(theta.rep, p));
                        }
                    }
                }
            }
        }
    }
}

fn small_type() -> impl Strategy<Value = (Family, usize)> {
    prop_oneof![
        Just((Family::A, 3)),
        Just((Family::B, 3)),
        Just((Family::C, 3)),
        Just((Family::D, 4)),
        Just((Family::G, 2)),
        Just((Family::A, 4)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn projections_and_lifts((f, n) in small_type(), word in prop::collection::vec(0usize..8, 0..14), a in 0u32..16, b in 0u32..16) {
        let g = group(f, n);
        let word: Vec<usize> = word.into_iter().map(|i| i % n).collect();
        let w = g.from_word(&word).unwrap();
        let full = Parabolic::full(n).0;
        let small = Parabolic(a & b & full);
        let big = Parabolic((a | b) & full);
        let c = g.coset(w, big);
        prop_assert_eq!(g.project(g.min_lift(c, small).unwrap(), big).unwrap(), c);
        prop_assert_eq!(g.project(g.max_lift(c, small).unwrap(), big).unwrap(), c);
        let fine = g.coset(w, small);
        prop_assert!(g.coset_leq(g.min_lift(c, small).unwrap(), fine));
        prop_assert!(g.coset_leq(fine, g.max_lift(c, small).unwrap()));
        prop_assert_eq!(g.length(g.inverse(w)), g.length(w));
        prop_assert_eq!(g.mul(w, g.inverse(w)), 0);
    }

    #[test]
    fn projection_is_monotone((f, n) in small_type(), u in 0usize..10_000, v in 0usize..10_000, p in 0u32..16) {
        let g = group(f, n);
        let (u, v) = (u % g.order(), v % g.order());
        let p = Parabolic(p & Parabolic::full(n).0);
        if g.bruhat_leq(u, v) {
            prop_assert!(g.bruhat_leq(g.min_rep(u, p), g.min_rep(v, p)));
        }
    }
}
