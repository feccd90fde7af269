use super::setup::Setup;
use crate::weyl::Coset;

/// The poset `W(lambda, tau)` of pairs `(theta, I)` with `theta <= pi_{P_I}(tau)` in
/// `W/W_{P_I}`, ordered by the transitive hull of
/// `(theta, I) >= (phi, J)  iff  I ⊇ J  and  max_Q(theta) >= min_Q(phi)`.
#[derive(Clone, Debug)]
pub struct UnderlineW {
    /// `(theta, I)`, grouped by `I` in index-poset order, then by decreasing length.
    pub nodes: Vec<(Coset, usize)>,
    /// `generating[a][b]`: the defining relation `a >= b`.
    pub generating: Vec<Vec<bool>>,
    /// `order[a][b]`: its transitive hull.
    pub order: Vec<Vec<bool>>,
    /// Covering pairs `(upper, lower)` of the hull.
    pub hasse: Vec<(usize, usize)>,
    /// Whether the defining relation is already transitive.
    pub transitive: bool,
    /// Whether the relation agrees with `pi_{P_J}(max_{Q_I}(theta)) >= phi` on all pairs.
    pub characterizations_agree: bool,
}

impl UnderlineW {
    pub fn build(setup: &Setup) -> Self {
        let g = setup.group();
        let ip = setup.iposet();
        let mut nodes = Vec::new();
        for i in 0..ip.len() {
            let top = setup.tau_index(i);
            let mut cs: Vec<Coset> = g
                .cosets(setup.p_index(i))
                .into_iter()
                .filter(|&c| g.coset_leq(c, top))
                .collect();
            cs.sort_by_key(|c| (std::cmp::Reverse(g.length(c.rep)), c.rep));
            nodes.extend(cs.into_iter().map(|c| (c, i)));
        }
        let n = nodes.len();
        let q = setup.q();
        let max_q: Vec<usize> = nodes.iter().map(|&(c, _)| g.min_rep(g.coset_max(c), q)).collect();
        let mut generating = vec![vec![false; n]; n];
        let mut agree = true;
        for a in 0..n {
            let (theta, i) = nodes[a];
            let lifted = g.min_rep(g.coset_max(theta), setup.q_lower(i));
            for b in 0..n {
                let (phi, j) = nodes[b];
                if !ip.contains(i, j) {
                    continue;
                }
                let rel = g.bruhat_leq(phi.rep, max_q[a]);
                let alt = g.bruhat_leq(phi.rep, g.min_rep(lifted, setup.p_index(j)));
                agree &= rel == alt;
                generating[a][b] = rel;
            }
        }
        let mut order = generating.clone();
        for k in 0..n {
            for a in 0..n {
                if order[a][k] {
                    for b in 0..n {
                        if order[k][b] {
                            order[a][b] = true;
                        }
                    }
                }
            }
        }
        let transitive = order == generating;
        let mut hasse = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b
                    && order[a][b]
                    && !(0..n).any(|c| c != a && c != b && order[a][c] && order[c][b])
                {
                    hasse.push((a, b));
                }
            }
        }
        UnderlineW {
            nodes,
            generating,
            order,
            hasse,
            transitive,
            characterizations_agree: agree,
        }
    }

    pub fn find(&self, c: Coset, i: usize) -> Option<usize> {
        self.nodes.iter().position(|&x| x == (c, i))
    }
}
