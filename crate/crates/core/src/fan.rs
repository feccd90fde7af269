//! The LS-fan of monoids over the DCP poset: lattice points, degree and weight maps,
//! decomposition into degree-one parts, and the bijection with standard LS-tableaux.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::dcp::{check_standard, Dcp, Setup};
use crate::error::{Error, Result};
use crate::lspath::{parse_rational, rational_string, LsPath};
use crate::poset::{monoid_points_by_chains, BondedPoset, NodeVector};
use crate::tableaux::LsTableau;
use crate::weyl::Coset;
use crate::Rational;

/// Non-negative rational coefficients on DCP nodes, zero entries omitted.
pub type FanVector = NodeVector;

/// Serialized entry of a fan vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanEntry {
    pub node_id: usize,
    pub coefficient: String,
}

pub fn fan_vector_to_json(v: &FanVector) -> Vec<FanEntry> {
    v.iter()
        .map(|(&node_id, c)| FanEntry {
            node_id,
            coefficient: rational_string(c),
        })
        .collect()
}

pub fn fan_vector_from_json(entries: &[FanEntry]) -> Result<FanVector> {
    let mut v = FanVector::new();
    for e in entries {
        let c = parse_rational(&e.coefficient)?;
        if !c.is_zero() {
            v.insert(e.node_id, c);
        }
    }
    Ok(v)
}

/// The fan over a fixed DCP: bonded poset, node degrees and, for tau-standard index
/// posets, the inverse of `rho`.
pub struct LsFan<'a> {
    setup: &'a Setup,
    dcp: &'a Dcp,
    poset: BondedPoset,
    degrees: Vec<Vec<i64>>,
    rho_inverse: Option<BTreeMap<(Coset, usize), usize>>,
}

impl<'a> LsFan<'a> {
    pub fn new(setup: &'a Setup, dcp: &'a Dcp) -> Self {
        let rho_inverse = check_standard(setup, dcp)
            .standard
            .then(|| (0..dcp.len()).map(|k| (dcp.rho(setup, k), k)).collect());
        LsFan {
            setup,
            dcp,
            poset: dcp.bonded(),
            degrees: dcp.degrees(setup),
            rho_inverse,
        }
    }

    pub fn poset(&self) -> &BondedPoset {
        &self.poset
    }

    pub fn is_standard(&self) -> bool {
        self.rho_inverse.is_some()
    }

    /// `LS+(d)`: all fan vectors of degree `d`.
    pub fn points(&self, d: &[i64]) -> Result<Vec<FanVector>> {
        self.check_degree(d)?;
        Ok(self.poset.monoid_points(&self.degrees, d))
    }

    /// The same set, as the union over maximal chains of the chain lattices.
    pub fn points_by_chains(&self, d: &[i64]) -> Result<Vec<FanVector>> {
        self.check_degree(d)?;
        Ok(monoid_points_by_chains(&self.poset, &self.degrees, d))
    }

    fn check_degree(&self, d: &[i64]) -> Result<()> {
        if d.len() != self.setup.m() || d.iter().any(|&x| x < 0) {
            return Err(Error::Precondition(format!("{d:?} is not a degree in N^{}", self.setup.m())));
        }
        Ok(())
    }

    /// Membership in the LS-lattice of the maximal chain `chain` (top-down node ids).
    pub fn in_chain_lattice(&self, chain: &[usize], v: &FanVector) -> Result<bool> {
        if v.keys().any(|k| !chain.contains(k)) {
            return Err(Error::Precondition("support is not contained in the chain".into()));
        }
        Ok(self.poset.in_chain_lattice(chain, v))
    }

    /// Membership in `LS+`: positive entries on a chain satisfying the lattice conditions.
    pub fn contains(&self, v: &FanVector) -> bool {
        v.iter().all(|(&k, c)| k < self.dcp.len() && *c > Rational::zero()) && self.poset.in_lattice(v)
    }

    /// `deg a = sum a_(theta, I) e_I`.
    pub fn degree(&self, v: &FanVector) -> Vec<Rational> {
        let mut d = vec![Rational::zero(); self.setup.m()];
        for (&k, &c) in v {
            for (a, &e) in d.iter_mut().zip(&self.degrees[k]) {
                *a += c * Rational::from_integer(e);
            }
        }
        d
    }

    /// `wt a = sum a_(theta, I) theta(lambda_I)`, which must be integral.
    pub fn weight(&self, v: &FanVector) -> Result<Vec<i64>> {
        let g = self.setup.group();
        let mut w = vec![Rational::zero(); g.rank()];
        for (&k, &c) in v {
            let n = self.dcp.nodes[k];
            let mu = g.act(n.theta.rep, self.setup.lambda_index(n.index));
            for (a, &x) in w.iter_mut().zip(&mu) {
                *a += c * Rational::from_integer(x);
            }
        }
        w.iter()
            .map(|x| {
                if x.is_integer() {
                    Ok(x.to_integer())
                } else {
                    Err(Error::Precondition("weight is not integral".into()))
                }
            })
            .collect()
    }

    /// Support sorted from the top of the DCP down.
    fn sorted_support(&self, v: &FanVector) -> Vec<(usize, Rational)> {
        let mut s: Vec<(usize, Rational)> = v.iter().map(|(&k, &c)| (k, c)).collect();
        s.sort_by_key(|&(k, _)| (std::cmp::Reverse(self.dcp.nodes[k].rank), k));
        s
    }

    /// The unique decomposition `v = v_1 + ... + v_s` into degree-one parts with the
    /// support of each part above the support of the next. Returns `(I_k, v_k)`.
    ///
    /// The support is cut top-down into consecutive intervals of mass one.
    pub fn decompose(&self, v: &FanVector) -> Result<Vec<(usize, FanVector)>> {
        if !self.contains(v) {
            return Err(Error::Precondition("vector is not in the LS-fan".into()));
        }
        let mut parts: Vec<FanVector> = Vec::new();
        let mut mass = Rational::zero();
        for (k, c) in self.sorted_support(v) {
            let end = mass + c;
            while mass < end {
                let slot = mass.floor().to_integer() as usize;
                let upper = (mass.floor() + Rational::one()).min(end);
                if parts.len() <= slot {
                    parts.push(FanVector::new());
                }
                *parts[slot].entry(k).or_insert_with(Rational::zero) += upper - mass;
                mass = upper;
            }
        }
        let mut out = Vec::new();
        for part in parts {
            let indices: Vec<usize> = part.keys().map(|&k| self.dcp.nodes[k].index).collect();
            let i = indices[0];
            if indices.iter().any(|&j| j != i) || !self.poset.in_lattice(&part) {
                return Err(Error::Precondition("a degree-one part leaves a single index".into()));
            }
            out.push((i, part));
        }
        Ok(out)
    }

    fn require_standard(&self) -> Result<&BTreeMap<(Coset, usize), usize>> {
        self.rho_inverse
            .as_ref()
            .ok_or_else(|| Error::NotTauStandard("rho is not injective on the DCP poset".into()))
    }

    /// `Theta_d`: column `k` of shape `lambda_{I_k}` is sent to `sum_j (d_j - d_{j+1})
    /// e_{rho^{-1}(sigma_j, I_k)}`, and the columns are added.
    pub fn theta(&self, shape: &[usize], t: &LsTableau) -> Result<FanVector> {
        let rho_inv = self.require_standard()?;
        if shape.len() != t.columns.len() {
            return Err(Error::InvalidTableau("shape and tableau differ in length".into()));
        }
        let mut v = FanVector::new();
        for (&i, col) in shape.iter().zip(&t.columns) {
            if &col.shape != self.setup.lambda_index(i) {
                return Err(Error::InvalidTableau(format!("column shape differs from lambda_{}", self.setup.iposet().label(i))));
            }
            for (sigma, c) in col.to_vector(1) {
                let node = rho_inv
                    .get(&(sigma, i))
                    .ok_or_else(|| Error::InvalidTableau("column direction is not below tau".into()))?;
                *v.entry(*node).or_insert_with(Rational::zero) += c;
            }
        }
        Ok(v)
    }

    /// Inverse of [`LsFan::theta`] via [`LsFan::decompose`]; returns the shape and tableau.
    pub fn theta_inverse(&self, v: &FanVector) -> Result<(Vec<usize>, LsTableau)> {
        self.require_standard()?;
        let g = self.setup.group();
        let mut shape = Vec::new();
        let mut columns = Vec::new();
        for (i, part) in self.decompose(v)? {
            let entries: Vec<(Coset, Rational)> = self
                .sorted_support(&part)
                .into_iter()
                .map(|(k, c)| (self.dcp.rho(self.setup, k).0, c))
                .collect();
            let path = LsPath::from_vector(self.setup.lambda_index(i).clone(), 1, &entries);
            path.validate(g)?;
            shape.push(i);
            columns.push(path);
        }
        Ok((shape, LsTableau { columns }))
    }
}
