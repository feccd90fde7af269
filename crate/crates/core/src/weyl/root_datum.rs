use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Cartan-Killing family of an irreducible root system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        f.write_str(c)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(Error::InvalidType {
                family: other.to_string(),
                rank: 0,
            }),
        }
    }
}

/// Root datum of a simple algebraic group, with Bourbaki numbering.
///
/// `cartan[i][j]` is `<alpha_j, alpha_i^vee>`. Roots are stored in the basis of
/// simple roots, coroots in the basis of simple coroots, both indexed alike.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    pub family: Family,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub positive_roots: Vec<Vec<i64>>,
    pub positive_coroots: Vec<Vec<i64>>,
}

impl RootDatum {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::InvalidType {
                family: family.to_string(),
                rank,
            });
        }
        let cartan = cartan_matrix(family, rank);
        let (positive_roots, positive_coroots) = positive_roots(&cartan);
        Ok(RootDatum {
            family,
            rank,
            cartan,
            positive_roots,
            positive_coroots,
        })
    }

    /// Order of the Weyl group, from the classification.
    pub fn weyl_order(&self) -> u64 {
        let n = self.rank as u64;
        let fact = |k: u64| (1..=k).product::<u64>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u64 << n) * fact(n),
            Family::D => (1u64 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    /// Neighbours of each node in the Dynkin diagram.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        (0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .filter(|&j| j != i && self.cartan[i][j] != 0)
                    .collect()
            })
            .collect()
    }

    /// The simple root `alpha_i` in the basis of fundamental weights.
    pub fn simple_root_weight(&self, i: usize) -> Vec<i64> {
        (0..self.rank).map(|j| self.cartan[j][i]).collect()
    }

    /// `<lambda, beta^vee>` for a weight in fundamental-weight coordinates.
    pub fn pair_coroot(&self, lambda: &[i64], root: usize) -> i64 {
        lambda
            .iter()
            .zip(&self.positive_coroots[root])
            .map(|(a, b)| a * b)
            .sum()
    }

    /// The positive root with index `root`, in fundamental-weight coordinates.
    pub fn root_weight(&self, root: usize) -> Vec<i64> {
        let mut out = vec![0; self.rank];
        for (i, &c) in self.positive_roots[root].iter().enumerate() {
            for (j, o) in out.iter_mut().enumerate() {
                *o += c * self.cartan[j][i];
            }
        }
        out
    }

    /// The unique simple path between two Dynkin nodes (the diagram is a tree).
    pub fn dynkin_path(&self, from: usize, to: usize) -> Vec<usize> {
        let adj = self.adjacency();
        let mut parent = vec![usize::MAX; self.rank];
        parent[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            for &u in &adj[v] {
                if parent[u] == usize::MAX {
                    parent[u] = v;
                    queue.push_back(u);
                }
            }
        }
        let mut path = vec![to];
        let mut v = to;
        while v != from {
            v = parent[v];
            path.push(v);
        }
        path.reverse();
        path
    }
}

fn cartan_matrix(family: Family, n: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match family {
        Family::A | Family::B | Family::C => {
            for i in 1..n {
                link(i - 1, i);
            }
        }
        Family::D => {
            for i in 1..n - 1 {
                link(i - 1, i);
            }
            link(n - 3, n - 1);
        }
        Family::E => {
            link(0, 2);
            link(1, 3);
            for i in 3..n {
                link(i - 1, i);
            }
        }
        Family::F => {
            for i in 1..4 {
                link(i - 1, i);
            }
        }
        Family::G => link(0, 1),
    }
    match family {
        // alpha_n short
        Family::B => c[n - 1][n - 2] = -2,
        // alpha_n long
        Family::C => c[n - 2][n - 1] = -2,
        // alpha_1, alpha_2 long; alpha_3, alpha_4 short
        Family::F => c[2][1] = -2,
        // alpha_1 short, alpha_2 long
        Family::G => c[0][1] = -3,
        _ => {}
    }
    c
}

/// Positive roots and their coroots, generated as Weyl orbits of the simple ones.
fn positive_roots(cartan: &[Vec<i64>]) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let n = cartan.len();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        queue.push_back((e.clone(), e));
    }
    while let Some((root, coroot)) = queue.pop_front() {
        if !seen.insert((root.clone(), coroot.clone())) {
            continue;
        }
        for j in 0..n {
            // s_j(beta) = beta - <beta, alpha_j^vee> alpha_j
            let a: i64 = (0..n).map(|i| root[i] * cartan[j][i]).sum();
            // s_j(beta^vee) = beta^vee - <alpha_j, beta^vee> alpha_j^vee
            let b: i64 = (0..n).map(|i| coroot[i] * cartan[i][j]).sum();
            let mut r = root.clone();
            r[j] -= a;
            let mut c = coroot.clone();
            c[j] -= b;
            if !seen.contains(&(r.clone(), c.clone())) {
                queue.push_back((r, c));
            }
        }
    }
    let mut pos: Vec<(Vec<i64>, Vec<i64>)> = seen
        .into_iter()
        .filter(|(r, _)| r.iter().all(|&x| x >= 0))
        .collect();
    pos.sort_by(|a, b| {
        let ha: i64 = a.0.iter().sum();
        let hb: i64 = b.0.iter().sum();
        ha.cmp(&hb).then_with(|| b.0.cmp(&a.0))
    });
    pos.into_iter().unzip()
}
