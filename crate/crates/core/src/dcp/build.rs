use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::setup::Setup;
use crate::error::{Error, Result};
use crate::poset::BondedPoset;
use crate::weyl::{Coset, Parabolic};

/// Node `(theta, I)` of the DCP poset; `theta` is a `Q_I`-minimal coset in `W/W_Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DcpNode {
    pub theta: Coset,
    pub index: usize,
    pub rank: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeKind {
    /// Same index set, `theta` covers `phi` in `W/W_Q` with strict projection to `W/W_{P_I}`.
    #[serde(rename = "sameI")]
    SameI,
    /// Same coset, `I` covers `J` in the index poset.
    #[serde(rename = "shrinkI")]
    ShrinkI,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DcpEdge {
    pub upper: usize,
    pub lower: usize,
    pub kind: EdgeKind,
    /// Positive root `beta` with `s_beta phi = theta`, for `SameI` edges.
    pub root: Option<usize>,
    pub bond: i64,
}

/// The graded poset `D(lambda, I, tau)` with its covering edges and bonds.
///
/// Nodes are sorted by decreasing rank, then index-poset order, then element id, so the
/// unique maximum `(tau, [m])` is node 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dcp {
    pub nodes: Vec<DcpNode>,
    pub edges: Vec<DcpEdge>,
    index: HashMap<(usize, usize), usize>,
}

impl Dcp {
    fn assemble(setup: &Setup, keys: BTreeSet<(usize, usize)>, pairs: BTreeSet<((usize, usize), (usize, usize))>) -> Self {
        let q = setup.q();
        let mut nodes: Vec<DcpNode> = keys
            .into_iter()
            .map(|(rep, i)| {
                let theta = Coset { rep, parabolic: q };
                DcpNode {
                    theta,
                    index: i,
                    rank: setup.node_rank(theta, i),
                }
            })
            .collect();
        nodes.sort_by_key(|n| (std::cmp::Reverse(n.rank), n.index, n.theta.rep));
        let index: HashMap<(usize, usize), usize> = nodes
            .iter()
            .enumerate()
            .map(|(k, n)| ((n.theta.rep, n.index), k))
            .collect();
        let g = setup.group();
        let mut edges: Vec<DcpEdge> = pairs
            .into_iter()
            .map(|(a, b)| {
                let (upper, lower) = (index[&a], index[&b]);
                if a.1 == b.1 {
                    let beta = g.cover_root(a.0, b.0);
                    let mu = g.act(b.0, setup.lambda_index(a.1));
                    DcpEdge {
                        upper,
                        lower,
                        kind: EdgeKind::SameI,
                        root: Some(beta),
                        bond: g.datum().pair_coroot(&mu, beta).abs(),
                    }
                } else {
                    DcpEdge {
                        upper,
                        lower,
                        kind: EdgeKind::ShrinkI,
                        root: None,
                        bond: 1,
                    }
                }
            })
            .collect();
        edges.sort();
        Dcp { nodes, edges, index }
    }

    /// Inductive construction from the top `(tau, [m])` down, one rank at a time.
    pub fn build(setup: &Setup) -> Self {
        let g = setup.group();
        let ip = setup.iposet();
        let covers = g.lower_covers(setup.q());
        let top = (setup.tau().rep, ip.top());
        let mut keys = BTreeSet::from([top]);
        let mut pairs = BTreeSet::new();
        let mut current = BTreeSet::from([top]);
        while !current.is_empty() {
            let mut next = BTreeSet::new();
            for &(theta, i) in &current {
                for &j in ip.covers_down(i) {
                    if g.is_min_rep(theta, setup.q_lower(j)) {
                        next.insert((theta, j));
                        pairs.insert(((theta, i), (theta, j)));
                    }
                }
                let p = setup.p_index(i);
                let pt = g.min_rep(theta, p);
                for &phi in &covers[theta] {
                    if g.is_min_rep(phi, setup.q_lower(i)) && g.min_rep(phi, p) != pt {
                        next.insert((phi, i));
                        pairs.insert(((theta, i), (phi, i)));
                    }
                }
            }
            keys.extend(next.iter().copied());
            current = next;
        }
        Self::assemble(setup, keys, pairs)
    }

    /// Closed-form construction for `tau = w0`: `(theta, I)` is a node iff `theta` is
    /// `Q_I`-minimal and `Q^r`-maximal for the intersection `Q^r` of the `P_J` along some
    /// covering chain from `I` to `[m]`. Edges are all pairs of the two covering shapes.
    pub fn build_direct(setup: &Setup) -> Result<Self> {
        if !setup.is_w0() {
            return Err(Error::Precondition("the direct construction needs tau = w0".into()));
        }
        let g = setup.group();
        let ip = setup.iposet();
        let q = setup.q();
        let mut keys = BTreeSet::new();
        for i in 0..ip.len() {
            let chains: Vec<Parabolic> = ip
                .chains_to_top(i)
                .iter()
                .map(|c| setup.chain_parabolic(c))
                .collect();
            for theta in g.min_reps(q) {
                if !g.is_min_rep(theta, setup.q_lower(i)) {
                    continue;
                }
                let top = g.max_rep(theta, q);
                if chains.iter().any(|&qr| g.is_max_rep(top, qr)) {
                    keys.insert((theta, i));
                }
            }
        }
        let covers = g.lower_covers(q);
        let mut pairs = BTreeSet::new();
        for &(theta, i) in &keys {
            for &j in ip.covers_down(i) {
                if keys.contains(&(theta, j)) {
                    pairs.insert(((theta, i), (theta, j)));
                }
            }
            let p = setup.p_index(i);
            for &phi in &covers[theta] {
                if keys.contains(&(phi, i)) && g.min_rep(phi, p) != g.min_rep(theta, p) {
                    pairs.insert(((theta, i), (phi, i)));
                }
            }
        }
        Ok(Self::assemble(setup, keys, pairs))
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn find(&self, theta: usize, i: usize) -> Option<usize> {
        self.index.get(&(theta, i)).copied()
    }

    /// `rho(theta, I) = (pi_{P_I}(theta), I)`.
    pub fn rho(&self, setup: &Setup, node: usize) -> (Coset, usize) {
        let n = self.nodes[node];
        (setup.group().coset(n.theta.rep, setup.p_index(n.index)), n.index)
    }

    /// The unique node over `(sigma, I)`; an error if `rho` is not injective there.
    pub fn rho_inverse(&self, setup: &Setup, sigma: Coset, i: usize) -> Result<usize> {
        let pre: Vec<usize> = (0..self.len())
            .filter(|&k| self.nodes[k].index == i && self.rho(setup, k).0 == sigma)
            .collect();
        match pre.as_slice() {
            [k] => Ok(*k),
            [] => Err(Error::Precondition(format!("no node over ({}, {})", sigma.rep, setup.iposet().label(i)))),
            _ => Err(Error::NotTauStandard(format!(
                "{} nodes over one element of index {}",
                pre.len(),
                setup.iposet().label(i)
            ))),
        }
    }

    /// The bonded poset on the nodes, for lattice-point enumeration.
    pub fn bonded(&self) -> BondedPoset {
        let mut lower = vec![Vec::new(); self.len()];
        for e in &self.edges {
            lower[e.upper].push((e.lower, e.bond));
        }
        BondedPoset {
            rank: self.nodes.iter().map(|n| n.rank).collect(),
            lower,
            top: 0,
        }
    }

    /// Degree `e_I` of each node.
    pub fn degrees(&self, setup: &Setup) -> Vec<Vec<i64>> {
        self.nodes.iter().map(|n| setup.iposet().e(n.index)).collect()
    }
}

/// For `tau = w0`: `rho^{-1}(theta, I) = (min_Q(max_{Q_I}(theta)), I)`.
pub fn rho_inverse_w0(setup: &Setup, sigma: Coset, i: usize) -> Coset {
    let g = setup.group();
    let rep = g.min_rep(g.coset_max(sigma), setup.q_lower(i));
    Coset {
        rep,
        parabolic: setup.q(),
    }
}
