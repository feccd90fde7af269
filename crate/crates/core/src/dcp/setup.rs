use std::sync::Arc;

use super::index_poset::IndexPoset;
use crate::error::{Error, Result};
use crate::weyl::{Coset, Parabolic, Weight, WeylGroup};

/// The data `(G, lambda, I, tau)` of a stratification together with derived parabolics.
///
/// `Q` is the stabilizer of `sum lambda_i`; `tau` lives in `W/W_Q`. For each element `I`
/// of the index poset: `lambda_I = e_I . lambda`, `P_I` its stabilizer,
/// `Q_I = ∩_{J ⊆ I} P_J` and `Q^I = Q_tau ∩ ∩_{J ⊇ I} P_J`.
#[derive(Clone, Debug)]
pub struct Setup {
    group: Arc<WeylGroup>,
    lambdas: Vec<Weight>,
    iposet: IndexPoset,
    tau: Coset,
    q: Parabolic,
    q_tau: Parabolic,
    lambda_index: Vec<Weight>,
    p_index: Vec<Parabolic>,
    q_lower: Vec<Parabolic>,
    q_upper: Vec<Parabolic>,
}

impl Setup {
    /// `tau` is any element of `W`; it is replaced by its coset in `W/W_Q`.
    pub fn new(group: Arc<WeylGroup>, lambdas: Vec<Weight>, iposet: IndexPoset, tau: usize) -> Result<Self> {
        let n = group.rank();
        if lambdas.is_empty() {
            return Err(Error::InvalidWeight("no weights given".into()));
        }
        for l in &lambdas {
            if l.len() != n || l.iter().any(|&x| x < 0) || l.iter().all(|&x| x == 0) {
                return Err(Error::InvalidWeight(format!(
                    "{l:?} is not a non-zero dominant weight of rank {n}"
                )));
            }
        }
        if iposet.m() != lambdas.len() {
            return Err(Error::InvalidIndexPoset {
                reason: format!("index poset on [{}] for {} weights", iposet.m(), lambdas.len()),
            });
        }
        if tau >= group.order() {
            return Err(Error::InvalidWord("tau is not an element of W".into()));
        }
        let sum = |mask: u32| -> Weight {
            let mut w = vec![0; n];
            for (k, l) in lambdas.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    for (a, b) in w.iter_mut().zip(l) {
                        *a += b;
                    }
                }
            }
            w
        };
        let full = ((1u64 << lambdas.len()) - 1) as u32;
        let q = Parabolic::stabilizer(&sum(full));
        let tau = group.coset(tau, q);
        let q_tau = group.right_descents(group.coset_max(tau));
        let len = iposet.len();
        let lambda_index: Vec<Weight> = (0..len).map(|i| sum(iposet.underline(i))).collect();
        let p_index: Vec<Parabolic> = lambda_index.iter().map(|l| Parabolic::stabilizer(l)).collect();
        let everything = Parabolic::full(n);
        let q_lower: Vec<Parabolic> = (0..len)
            .map(|i| {
                (0..len)
                    .filter(|&j| iposet.contains(i, j))
                    .fold(everything, |acc, j| acc.intersect(p_index[j]))
            })
            .collect();
        let q_upper: Vec<Parabolic> = (0..len)
            .map(|i| {
                (0..len)
                    .filter(|&j| iposet.contains(j, i))
                    .fold(q_tau, |acc, j| acc.intersect(p_index[j]))
            })
            .collect();
        Ok(Setup {
            group,
            lambdas,
            iposet,
            tau,
            q,
            q_tau,
            lambda_index,
            p_index,
            q_lower,
            q_upper,
        })
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn group_arc(&self) -> Arc<WeylGroup> {
        self.group.clone()
    }

    pub fn lambdas(&self) -> &[Weight] {
        &self.lambdas
    }

    pub fn m(&self) -> usize {
        self.lambdas.len()
    }

    pub fn iposet(&self) -> &IndexPoset {
        &self.iposet
    }

    pub fn tau(&self) -> Coset {
        self.tau
    }

    pub fn is_w0(&self) -> bool {
        self.tau == self.group.coset(self.group.w0(), self.q)
    }

    pub fn q(&self) -> Parabolic {
        self.q
    }

    pub fn q_tau(&self) -> Parabolic {
        self.q_tau
    }

    pub fn lambda_index(&self, i: usize) -> &Weight {
        &self.lambda_index[i]
    }

    pub fn p_index(&self, i: usize) -> Parabolic {
        self.p_index[i]
    }

    pub fn q_lower(&self, i: usize) -> Parabolic {
        self.q_lower[i]
    }

    pub fn q_upper(&self, i: usize) -> Parabolic {
        self.q_upper[i]
    }

    /// `pi_{P_I}(tau)`.
    pub fn tau_index(&self, i: usize) -> Coset {
        self.group.coset(self.tau.rep, self.p_index[i])
    }

    /// `sum_i d_i lambda_i`.
    pub fn weight_of_degree(&self, d: &[i64]) -> Weight {
        let mut w = vec![0; self.group.rank()];
        for (l, &k) in self.lambdas.iter().zip(d) {
            for (a, b) in w.iter_mut().zip(l) {
                *a += k * b;
            }
        }
        w
    }

    /// Intersection `Q^r` of the `P_J` along a covering chain in the index poset.
    pub fn chain_parabolic(&self, chain: &[usize]) -> Parabolic {
        chain
            .iter()
            .fold(Parabolic::full(self.group.rank()), |acc, &j| acc.intersect(self.p_index[j]))
    }

    /// Rank `ell(theta) + |I| - 1` of a DCP node.
    pub fn node_rank(&self, theta: Coset, i: usize) -> usize {
        self.group.length(theta.rep) + self.iposet.set(i).count_ones() as usize - 1
    }
}

/// Whether some path in the Dynkin diagram contains every node that carries a weight,
/// for a sequence of positive multiples of distinct fundamental weights. On success the
/// weight indices are returned in the order in which they appear along such a path.
pub fn totally_ordered_exists(group: &WeylGroup, lambdas: &[Weight]) -> Result<Option<Vec<usize>>> {
    let n = group.rank();
    let mut nodes = Vec::new();
    for l in lambdas {
        let support: Vec<usize> = (0..n).filter(|&k| l[k] != 0).collect();
        if l.len() != n || support.len() != 1 || l[support[0]] < 0 {
            return Err(Error::InvalidWeight(format!("{l:?} is not a multiple of a fundamental weight")));
        }
        if nodes.contains(&support[0]) {
            return Err(Error::InvalidWeight("fundamental weights must be distinct".into()));
        }
        nodes.push(support[0]);
    }
    let d = group.datum();
    // the minimal subtree spanning the nodes is a path iff some pair of them spans it all
    for &a in &nodes {
        for &b in &nodes {
            let path = d.dynkin_path(a, b);
            if nodes.iter().all(|x| path.contains(x)) {
                let mut order: Vec<usize> = (0..nodes.len()).collect();
                order.sort_by_key(|&k| path.iter().position(|&x| x == nodes[k]).unwrap());
                return Ok(Some(order));
            }
        }
    }
    Ok(None)
}
