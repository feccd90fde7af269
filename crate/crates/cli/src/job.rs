//! Job description shared by flags and JSON job files.

use std::path::PathBuf;
use std::sync::Arc;

use lsfan::dcp::{IndexPoset, Setup};
use lsfan::weyl::{type_a, weyl_group, Family};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Dot,
}

/// `"chain"`, `"powerset"`, or explicit 1-based subsets of `[m]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IposetSpec {
    Named(String),
    Sets(Vec<Vec<usize>>),
}

impl Default for IposetSpec {
    fn default() -> Self {
        IposetSpec::Named("chain".into())
    }
}

impl IposetSpec {
    /// Flag syntax: `chain`, `powerset`, `chain:3,1,2` or sets separated by `;` with
    /// elements separated by `,`, e.g. `1;2;1,2`.
    pub fn parse(s: &str) -> Result<Self, CliError> {
        let s = s.trim();
        if s == "chain" || s == "powerset" || s.starts_with("chain:") {
            return Ok(IposetSpec::Named(s.into()));
        }
        let sets = s
            .split(';')
            .map(parse_list::<usize>)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IposetSpec::Sets(sets))
    }

    pub fn build(&self, m: usize) -> Result<IndexPoset, CliError> {
        let ip = match self {
            IposetSpec::Named(n) if n == "chain" => IndexPoset::chain(m)?,
            IposetSpec::Named(n) if n == "powerset" => IndexPoset::powerset(m)?,
            IposetSpec::Named(n) => match n.strip_prefix("chain:") {
                Some(order) => IndexPoset::chain_in_order(&parse_list::<usize>(order)?)?,
                None => return Err(CliError::Input(format!("unknown index poset {n:?}"))),
            },
            IposetSpec::Sets(sets) => IndexPoset::new(m, sets)?,
        };
        if ip.m() != m {
            return Err(CliError::Input(format!("index poset on [{}] for {m} weights", ip.m())));
        }
        Ok(ip)
    }
}

/// Everything a command needs. Missing optional fields take their defaults.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub dynkin_type: String,
    pub rank: usize,
    /// Dominant weights in fundamental-weight coordinates.
    pub lambdas: Vec<Vec<i64>>,
    /// `"w0"`, `"e"`, a 1-based reduced word such as `"2,1"`, or in type A a one-line
    /// permutation such as `"oneline:3412"`.
    #[serde(default = "default_tau")]
    pub tau: String,
    #[serde(default)]
    pub iposet: IposetSpec,
    #[serde(default)]
    pub command: Option<String>,
    /// Explicit degrees for `enumerate` and `verify`.
    #[serde(default)]
    pub degrees: Vec<Vec<i64>>,
    /// All degrees componentwise below this bound, in addition to `degrees`.
    #[serde(default)]
    pub degree_box: Option<Vec<i64>>,
    /// Largest total degree used by the multidegree comparison.
    #[serde(default)]
    pub grid: Option<usize>,
    /// Run the multidegree comparison as part of `verify`.
    #[serde(default)]
    pub conjecture: bool,
    #[serde(default)]
    pub output: Option<PathBuf>,
    #[serde(default)]
    pub format: Format,
}

fn default_tau() -> String {
    "w0".into()
}

pub fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, CliError> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|x| !x.is_empty())
        .map(|x| x.parse().map_err(|_| CliError::Input(format!("bad list entry {x:?} in {s:?}"))))
        .collect()
}

impl JobSpec {
    pub fn setup(&self) -> Result<Setup, CliError> {
        let family: Family = self
            .dynkin_type
            .parse()
            .map_err(|_| CliError::Input(format!("unknown Dynkin type {:?}", self.dynkin_type)))?;
        let g = Arc::new(weyl_group(family, self.rank)?);
        let tau = self.tau.trim();
        let t = if tau == "w0" {
            g.w0()
        } else if tau == "e" || tau.is_empty() {
            g.identity()
        } else if let Some(perm) = tau.strip_prefix("oneline:") {
            type_a::perm(&g, perm)?
        } else {
            let word = parse_list::<usize>(tau)?
                .into_iter()
                .map(|i| i.checked_sub(1).ok_or_else(|| CliError::Input("word letters are 1-based".into())))
                .collect::<Result<Vec<_>, _>>()?;
            g.from_word(&word)?
        };
        let ip = self.iposet.build(self.lambdas.len())?;
        Ok(Setup::new(g, self.lambdas.clone(), ip, t)?)
    }

    /// The explicit degrees followed by the box, without repetitions, in a fixed order.
    pub fn degree_list(&self) -> Result<Vec<Vec<i64>>, CliError> {
        let m = self.lambdas.len();
        let mut out: Vec<Vec<i64>> = Vec::new();
        for d in &self.degrees {
            if d.len() != m {
                return Err(CliError::Input(format!("degree {d:?} needs {m} entries")));
            }
            if !out.contains(d) {
                out.push(d.clone());
            }
        }
        if let Some(b) = &self.degree_box {
            if b.len() != m || b.iter().any(|&x| x < 0) {
                return Err(CliError::Input(format!("degree box {b:?} needs {m} non-negative entries")));
            }
            let mut all = vec![vec![]];
            for &hi in b {
                all = all
                    .into_iter()
                    .flat_map(|v: Vec<i64>| {
                        (0..=hi).map(move |x| {
                            let mut w = v.clone();
                            w.push(x);
                            w
                        })
                    })
                    .collect();
            }
            for d in all {
                if !out.contains(&d) {
                    out.push(d);
                }
            }
        }
        Ok(out)
    }
}
