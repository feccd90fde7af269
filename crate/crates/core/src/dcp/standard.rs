use std::collections::BTreeMap;

use serde::Serialize;

use super::build::Dcp;
use super::setup::Setup;
use super::underline::UnderlineW;
use crate::weyl::Coset;

/// The four equivalent conditions for `tau = w0`, evaluated for one element `I` and one
/// covering chain `I = I_r ⊂ ... ⊂ [m]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriteriaRow {
    pub index: usize,
    pub chain: Vec<usize>,
    /// (i) `(id W_{P_I}, I)` has a single preimage under `rho`.
    pub unique_preimage: bool,
    /// (ii) `min_Q(max_{Q_I}(id W_{P_I})) = max_Q(min_{Q^r}(id W_{P_I}))`.
    pub lift_equality: bool,
    /// (iii) `W_{P_I} ∩ W^{Q_I} ⊆ W_{Q^r} ∩ W^Q`.
    pub subgroup_inclusion: bool,
    /// (iv) `Δ_{Q_I} ∪ Δ_{Q^r} = Δ_{P_I}` and every Dynkin path from `Δ_{Q_I} \ Δ_{Q^r}`
    /// to `Δ_{Q^r} \ Δ_{Q_I}` leaves `Δ_{P_I}`.
    pub dynkin_separation: bool,
}

impl CriteriaRow {
    pub fn all_agree(&self) -> bool {
        let v = self.unique_preimage;
        self.lift_equality == v && self.subgroup_inclusion == v && self.dynkin_separation == v
    }
}

#[derive(Clone, Debug)]
pub struct StandardnessReport {
    /// `rho: D -> W(lambda, tau)` is injective.
    pub standard: bool,
    /// `rho` is surjective (always expected).
    pub surjective: bool,
    /// Pairs of DCP nodes with the same image under `rho`.
    pub collisions: Vec<(usize, usize)>,
    /// Criteria (i)-(iv), only computed for `tau = w0`.
    pub criteria: Vec<CriteriaRow>,
}

impl StandardnessReport {
    /// For `tau = w0`: every row has all four criteria equal, the rows of one `I` agree
    /// across chains, and the conjunction matches injectivity of `rho`.
    pub fn criteria_consistent(&self) -> bool {
        if self.criteria.is_empty() {
            return true;
        }
        let mut by_index: BTreeMap<usize, bool> = BTreeMap::new();
        for row in &self.criteria {
            if !row.all_agree() {
                return false;
            }
            if let Some(&v) = by_index.get(&row.index) {
                if v != row.unique_preimage {
                    return false;
                }
            }
            by_index.insert(row.index, row.unique_preimage);
        }
        by_index.values().all(|&v| v) == self.standard
    }
}

pub fn check_standard(setup: &Setup, dcp: &Dcp) -> StandardnessReport {
    let mut images: BTreeMap<(Coset, usize), Vec<usize>> = BTreeMap::new();
    for k in 0..dcp.len() {
        images.entry(dcp.rho(setup, k)).or_default().push(k);
    }
    let mut collisions = Vec::new();
    for pre in images.values() {
        for a in 0..pre.len() {
            for b in a + 1..pre.len() {
                collisions.push((pre[a], pre[b]));
            }
        }
    }
    let uw = UnderlineW::build(setup);
    let surjective = uw.nodes.iter().all(|n| images.contains_key(n));
    let criteria = if setup.is_w0() { criteria_rows(setup, dcp) } else { Vec::new() };
    StandardnessReport {
        standard: collisions.is_empty(),
        surjective,
        collisions,
        criteria,
    }
}

fn criteria_rows(setup: &Setup, dcp: &Dcp) -> Vec<CriteriaRow> {
    let g = setup.group();
    let ip = setup.iposet();
    let q = setup.q();
    let d = g.datum();
    let mut rows = Vec::new();
    for i in 0..ip.len() {
        let p = setup.p_index(i);
        let qi = setup.q_lower(i);
        let preimages = (0..dcp.len())
            .filter(|&k| dcp.nodes[k].index == i && g.min_rep(dcp.nodes[k].theta.rep, p) == 0)
            .count();
        for chain in ip.chains_to_top(i) {
            let qr = setup.chain_parabolic(&chain);
            let lhs = g.min_rep(g.longest(p), qi);
            let rhs = g.min_rep(g.longest(qr), q);
            let inclusion = (0..g.order())
                .filter(|&w| g.in_subgroup(w, p) && g.is_min_rep(w, qi))
                .all(|w| g.in_subgroup(w, qr) && g.is_min_rep(w, q));
            let union_ok = qi.union(qr) == p;
            let separated = qi.minus(qr).indices().all(|a| {
                qr.minus(qi)
                    .indices()
                    .all(|b| d.dynkin_path(a, b).iter().any(|&v| !p.contains(v)))
            });
            rows.push(CriteriaRow {
                index: i,
                chain,
                unique_preimage: preimages == 1,
                lift_equality: lhs == rhs,
                subgroup_inclusion: inclusion,
                dynkin_separation: union_ok && separated,
            });
        }
    }
    rows
}
