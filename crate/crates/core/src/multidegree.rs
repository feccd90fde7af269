//! Multidegrees of a Schubert variety in a product of projective spaces, computed twice:
//! from bond products along maximal chains of the DCP poset, and from the leading
//! coefficients of the multigraded Hilbert polynomial fitted exactly to dimensions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::dcp::{Dcp, Setup};
use crate::demazure_oracle::{demazure_dimension, weyl_dimension};
use crate::error::{Error, Result};
use crate::BigRational;

/// Multidegree coefficients keyed by the exponent tuple `k`.
pub type Multidegree = BTreeMap<Vec<usize>, BigInt>;

/// Unique solution of the square system `a x = b`, or `None` if `a` is singular.
pub fn solve_exact<T>(mut a: Vec<Vec<Ratio<T>>>, mut b: Vec<Ratio<T>>) -> Option<Vec<Ratio<T>>>
where
    T: Clone + Integer + Signed,
{
    let n = b.len();
    assert!(a.len() == n && a.iter().all(|r| r.len() == n), "square system expected");
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for x in a[col][col..].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        b[col] = b[col].clone() * inv;
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in col..n {
                let delta = f.clone() * a[col][c].clone();
                a[r][c] = a[r][c].clone() - delta;
            }
            let delta = f * b[col].clone();
            b[r] = b[r].clone() - delta;
        }
    }
    Some(b)
}

/// All exponent tuples in `m` variables with total degree at most `max`, graded then
/// lexicographic.
pub fn monomials(m: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|v: Vec<usize>| {
                let used: usize = v.iter().sum();
                (0..=max - used).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.sort_by_key(|v| (v.iter().sum::<usize>(), v.clone()));
    out
}

/// `dim X_tau`, the length of the minimal representative of `tau` in `W/W_Q`.
pub fn schubert_dimension(setup: &Setup) -> usize {
    setup.group().length(setup.tau().rep)
}

/// `dim V(d . lambda)_tau`.
pub fn hilbert_function(setup: &Setup, d: &[usize]) -> Result<BigInt> {
    let deg: Vec<i64> = d.iter().map(|&x| x as i64).collect();
    let mu = setup.weight_of_degree(&deg);
    if setup.is_w0() {
        Ok(BigInt::from(weyl_dimension(setup.group().datum(), &mu)?))
    } else {
        Ok(BigInt::from(demazure_dimension(setup.group(), &mu, setup.tau())?))
    }
}

/// For a totally ordered index poset: the coordinate `i` with `underline(I) = {i}`.
fn chain_coordinates(setup: &Setup) -> Result<Vec<usize>> {
    let ip = setup.iposet();
    if !ip.is_chain() {
        return Err(Error::InvalidIndexPoset {
            reason: "the multidegree comparison needs a totally ordered index poset".into(),
        });
    }
    Ok((0..ip.len()).map(|i| ip.underline(i).trailing_zeros() as usize).collect())
}

/// `sum_c prod(bonds of c)` over maximal chains `c` of the DCP poset, grouped by the type
/// `k` of the chain: `c` has `k_i + 1` nodes whose index has underline `{i}`.
pub fn chain_multidegrees(setup: &Setup, dcp: &Dcp) -> Result<Multidegree> {
    let coord = chain_coordinates(setup)?;
    let m = setup.m();
    let mut lower = vec![Vec::new(); dcp.len()];
    for e in &dcp.edges {
        lower[e.upper].push((e.lower, e.bond));
    }
    // counts of nodes per coordinate on chains from a node down to a minimal element
    let mut memo: Vec<Option<Multidegree>> = vec![None; dcp.len()];
    let mut order: Vec<usize> = (0..dcp.len()).collect();
    order.sort_by_key(|&k| dcp.nodes[k].rank);
    for &u in &order {
        let mut here = Multidegree::new();
        let c = coord[dcp.nodes[u].index];
        if lower[u].is_empty() {
            let mut k = vec![0; m];
            k[c] = 1;
            here.insert(k, BigInt::one());
        }
        for &(v, bond) in &lower[u] {
            for (k, w) in memo[v].as_ref().expect("lower nodes come first") {
                let mut k = k.clone();
                k[c] += 1;
                *here.entry(k).or_insert_with(BigInt::zero) += w * bond;
            }
        }
        memo[u] = Some(here);
    }
    let mut out = Multidegree::new();
    for (k, w) in memo[0].take().unwrap() {
        if k.iter().all(|&x| x >= 1) {
            out.insert(k.iter().map(|x| x - 1).collect(), w);
        }
    }
    Ok(out)
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, x| acc * x)
}

/// The Hilbert polynomial in the monomial basis, fitted exactly on the simplex
/// `|d| <= dim X_tau`.
#[derive(Clone, Debug)]
pub struct HilbertFit {
    pub dimension: usize,
    pub coefficients: BTreeMap<Vec<usize>, BigRational>,
}

impl HilbertFit {
    pub fn evaluate(&self, d: &[usize]) -> BigRational {
        self.coefficients
            .iter()
            .map(|(a, c)| {
                let v = a
                    .iter()
                    .zip(d)
                    .fold(BigInt::one(), |acc, (&e, &x)| acc * BigInt::from(x).pow(e as u32));
                c.clone() * BigRational::from_integer(v)
            })
            .fold(BigRational::zero(), |acc, x| acc + x)
    }

    /// Leading coefficients multiplied by `k_1! ... k_m!`.
    pub fn multidegrees(&self) -> Result<Multidegree> {
        let mut out = Multidegree::new();
        for (k, c) in &self.coefficients {
            if k.iter().sum::<usize>() != self.dimension {
                continue;
            }
            let v = c * BigRational::from_integer(k.iter().map(|&x| factorial(x)).product());
            if !v.is_integer() {
                return Err(Error::Precondition(format!("multidegree {k:?} is not integral")));
            }
            out.insert(k.clone(), v.to_integer());
        }
        Ok(out)
    }
}

pub fn fit_hilbert_polynomial(setup: &Setup) -> Result<HilbertFit> {
    let dimension = schubert_dimension(setup);
    let basis = monomials(setup.m(), dimension);
    let points = basis.clone();
    let mut a = Vec::new();
    let mut b = Vec::new();
    for p in &points {
        a.push(
            basis
                .iter()
                .map(|e| {
                    let v = e.iter().zip(p).fold(BigInt::one(), |acc, (&k, &x)| acc * BigInt::from(x).pow(k as u32));
                    BigRational::from_integer(v)
                })
                .collect(),
        );
        b.push(BigRational::from_integer(hilbert_function(setup, p)?));
    }
    let x = solve_exact(a, b).ok_or_else(|| Error::Precondition("interpolation system is singular".into()))?;
    Ok(HilbertFit {
        dimension,
        coefficients: basis.into_iter().zip(x).filter(|(_, c)| !c.is_zero()).collect(),
    })
}

/// `Delta^k H(0) = sum_{j <= k} (-1)^{|k - j|} prod binom(k_i, j_i) H(j)`, which equals the
/// normalized leading coefficient for `|k| = dim X_tau`.
pub fn finite_difference(setup: &Setup, k: &[usize]) -> Result<BigInt> {
    let mut total = BigInt::zero();
    let mut js: Vec<Vec<usize>> = vec![vec![]];
    for &ki in k {
        js = js
            .into_iter()
            .flat_map(|v| {
                (0..=ki).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    for j in js {
        let mut coeff = BigInt::one();
        for (&ki, &ji) in k.iter().zip(&j) {
            coeff *= factorial(ki) / (factorial(ji) * factorial(ki - ji));
        }
        let sign = (k.iter().sum::<usize>() - j.iter().sum::<usize>()) % 2;
        let h = hilbert_function(setup, &j)?;
        if sign == 0 {
            total += coeff * h;
        } else {
            total -= coeff * h;
        }
    }
    Ok(total)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureRow {
    pub k: Vec<usize>,
    /// Sum of bond products over maximal DCP chains of type `k`.
    pub chains: String,
    /// Normalized leading coefficient of the fitted Hilbert polynomial.
    pub hilbert: String,
    /// The same coefficient from a mixed finite difference on the box `j <= k`.
    pub difference: String,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub dimension: usize,
    pub grid: usize,
    /// The fitted polynomial reproduces every dimension with `|d| <= max(grid, dim + 1)`.
    pub fit_verified: bool,
    pub rows: Vec<ConjectureRow>,
}

impl ConjectureReport {
    pub fn agree(&self) -> bool {
        self.fit_verified && self.rows.iter().all(|r| r.agree)
    }
}

/// Compare both sides for every `k` with `|k| = dim X_tau`. `grid` is the largest total
/// degree used for fitting and validation; it must be at least `dim X_tau`.
pub fn multidegree_conjecture_check(setup: &Setup, dcp: &Dcp, grid: Option<usize>) -> Result<ConjectureReport> {
    let dimension = schubert_dimension(setup);
    let grid = grid.unwrap_or(dimension);
    if grid < dimension {
        return Err(Error::GridTooSmall {
            required: dimension,
            given: grid,
        });
    }
    let chains = chain_multidegrees(setup, dcp)?;
    let fit = fit_hilbert_polynomial(setup)?;
    let mut fit_verified = true;
    for d in monomials(setup.m(), grid.max(dimension + 1)) {
        if d.iter().sum::<usize>() > dimension
            && fit.evaluate(&d) != BigRational::from_integer(hilbert_function(setup, &d)?)
        {
            fit_verified = false;
        }
    }
    let hilbert = fit.multidegrees()?;
    let mut rows = Vec::new();
    for k in monomials(setup.m(), dimension) {
        if k.iter().sum::<usize>() != dimension {
            continue;
        }
        let left = chains.get(&k).cloned().unwrap_or_default();
        let right = hilbert.get(&k).cloned().unwrap_or_default();
        let diff = finite_difference(setup, &k)?;
        rows.push(ConjectureRow {
            agree: left == right && right == diff,
            k,
            chains: left.to_string(),
            hilbert: right.to_string(),
            difference: diff.to_string(),
        });
    }
    Ok(ConjectureReport {
        dimension,
        grid,
        fit_verified,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dcp::tests::{figure4_setup, fundamental, type_a, w0_fixtures};
    use crate::dcp::IndexPoset;
    use crate::weyl::{weyl_group, Family};
    use std::sync::Arc;

    #[test]
    fn solver_recovers_a_known_solution() {
        let r = |x: i64| Ratio::from_integer(x);
        let a = vec![vec![r(2), r(1), r(0)], vec![r(1), r(3), r(1)], vec![r(0), r(1), r(4)]];
        let x = vec![Ratio::new(1, 2), r(-1), Ratio::new(3, 4)];
        let b: Vec<Ratio<i64>> = a
            .iter()
            .map(|row| row.iter().zip(&x).map(|(p, q)| p * q).sum())
            .collect();
        assert_eq!(solve_exact(a, b).unwrap(), x);
        let singular = vec![vec![r(1), r(2)], vec![r(2), r(4)]];
        assert!(solve_exact(singular, vec![r(1), r(2)]).is_none());
    }

    #[test]
    fn monomials_are_counted_by_binomials() {
        assert_eq!(monomials(3, 6).len(), 84);
        assert_eq!(monomials(1, 4), vec![vec![0], vec![1], vec![2], vec![3], vec![4]]);
    }

    #[test]
    fn figure4_multidegrees() {
        let s = figure4_setup();
        let d = Dcp::build(&s);
        let r = multidegree_conjecture_check(&s, &d, None).unwrap();
        assert_eq!(r.dimension, 6);
        assert!(r.agree(), "{:?}", r.rows);
        // with all bonds 1 the chain sums add up to the number of maximal chains
        let chains: BigInt = chain_multidegrees(&s, &d).unwrap().values().sum();
        assert_eq!(chains, BigInt::from(d.bonded().maximal_chains().len()));
    }

    #[test]
    fn single_weight_degrees() {
        // Grassmannian Gr(2,4) has degree 2; the projective plane has degree 1
        let s = type_a(3, &[2], IndexPoset::chain(1).unwrap(), "w0");
        let d = Dcp::build(&s);
        assert_eq!(chain_multidegrees(&s, &d).unwrap(), Multidegree::from([(vec![4], BigInt::from(2))]));
        assert!(multidegree_conjecture_check(&s, &d, None).unwrap().agree());
        let s = type_a(2, &[1], IndexPoset::chain(1).unwrap(), "w0");
        let d = Dcp::build(&s);
        assert_eq!(chain_multidegrees(&s, &d).unwrap(), Multidegree::from([(vec![2], BigInt::from(1))]));
    }

    #[test]
    fn identity_is_a_point() {
        let s = type_a(2, &[1, 2], IndexPoset::chain(2).unwrap(), "123");
        let d = Dcp::build(&s);
        let r = multidegree_conjecture_check(&s, &d, None).unwrap();
        assert_eq!(r.dimension, 0);
        assert_eq!(r.rows.len(), 1);
        assert_eq!(r.rows[0].chains, "1");
        assert!(r.agree());
    }

    #[test]
    fn grid_must_cover_the_dimension() {
        let s = figure4_setup();
        let d = Dcp::build(&s);
        assert!(matches!(
            multidegree_conjecture_check(&s, &d, Some(3)),
            Err(Error::GridTooSmall { required: 6, given: 3 })
        ));
        let ps = Setup::new(s.group_arc(), s.lambdas().to_vec(), IndexPoset::powerset(3).unwrap(), s.tau().rep).unwrap();
        assert!(chain_multidegrees(&ps, &Dcp::build(&ps)).is_err());
    }

    #[test]
    fn finite_differences_match_the_fit() {
        for s in w0_fixtures().into_iter().filter(|s| s.group().order() <= 48) {
            let fit = fit_hilbert_polynomial(&s).unwrap();
            for (k, v) in fit.multidegrees().unwrap() {
                assert_eq!(finite_difference(&s, &k).unwrap(), v);
            }
        }
    }

    #[test]
    fn bonded_chains_in_type_b() {
        // B2 with a bond 2 in the DCP: the comparison still reports its outcome
        let g = Arc::new(weyl_group(Family::B, 2).unwrap());
        let w0 = g.w0();
        let s = Setup::new(g, vec![fundamental(2, 1), fundamental(2, 2)], IndexPoset::chain(2).unwrap(), w0).unwrap();
        let d = Dcp::build(&s);
        assert!(d.edges.iter().any(|e| e.bond == 2));
        let r = multidegree_conjecture_check(&s, &d, None).unwrap();
        assert!(r.fit_verified);
        assert!(r.rows.iter().all(|row| row.hilbert == row.difference));
    }
}
