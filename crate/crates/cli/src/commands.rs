//! The subcommands. Each returns a serializable report and whether it passed.

use std::collections::BTreeSet;

use lsfan::dcp::{check_standard, Dcp, Setup, UnderlineW};
use lsfan::demazure_oracle::{demazure_character, Character};
use lsfan::fan::{fan_vector_to_json, FanEntry, FanVector, LsFan};
use lsfan::multidegree::{multidegree_conjecture_check, ConjectureReport};
use lsfan::tableaux::{character, enumerate_standard, shape_for_degree, LsTableauJson};
use serde::Serialize;

use crate::job::{Format, JobSpec};
use crate::render::{dcp_dot, dcp_json, index_set, underline_dot, underline_json};
use crate::CliError;

/// Rendered output plus the verdict that decides the exit code.
pub struct Outcome {
    pub body: String,
    pub passed: bool,
    /// Human-readable lines for the diagnostic stream.
    pub notes: Vec<String>,
}

fn json<T: Serialize>(v: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn require_json(job: &JobSpec, command: &str) -> Result<(), CliError> {
    if job.format == Format::Dot {
        return Err(CliError::Input(format!("{command} has no DOT output")));
    }
    Ok(())
}

fn require_standard(setup: &Setup, dcp: &Dcp) -> Result<(), CliError> {
    let r = check_standard(setup, dcp);
    if !r.standard {
        return Err(CliError::Input(format!(
            "index poset is not tau-standard ({} colliding node pairs); tableaux and fan \
             points are only in bijection for standard posets",
            r.collisions.len()
        )));
    }
    Ok(())
}

pub fn cmd_dcp(job: &JobSpec) -> Result<Outcome, CliError> {
    let setup = job.setup()?;
    let dcp = Dcp::build(&setup);
    let report = dcp_json(&setup, &dcp);
    let s = &report.summary;
    let mut notes = vec![format!("{} nodes, {} covering edges", s.nodes, s.edges)];
    notes.push(if s.all_bonds_one {
        "all bonds 1".to_string()
    } else {
        format!("bonds up to lcm {}", s.lcm_of_bonds)
    });
    let body = match job.format {
        Format::Json => json(&report)?,
        Format::Dot => dcp_dot(&setup, &dcp),
    };
    Ok(Outcome { body, passed: true, notes })
}

pub fn cmd_underline_w(job: &JobSpec) -> Result<Outcome, CliError> {
    let setup = job.setup()?;
    let uw = UnderlineW::build(&setup);
    let body = match job.format {
        Format::Json => json(&underline_json(&setup, &uw))?,
        Format::Dot => underline_dot(&setup, &uw),
    };
    let mut notes = vec![format!("{} elements, {} covering pairs", uw.nodes.len(), uw.hasse.len())];
    if !uw.transitive {
        notes.push("the defining relation is not transitive; edges are covers of its hull".into());
    }
    Ok(Outcome { body, passed: true, notes })
}

#[derive(Serialize)]
struct CriteriaJson {
    #[serde(rename = "I")]
    index_set: Vec<usize>,
    chain: Vec<Vec<usize>>,
    unique_preimage: bool,
    lift_equality: bool,
    subgroup_inclusion: bool,
    dynkin_separation: bool,
}

#[derive(Serialize)]
struct CheckJson {
    standard: bool,
    surjective: bool,
    /// Pairs of DCP node ids with the same image under `rho`.
    collisions: Vec<[usize; 2]>,
    criteria: Vec<CriteriaJson>,
    criteria_consistent: bool,
}

pub fn cmd_check(job: &JobSpec) -> Result<Outcome, CliError> {
    require_json(job, "check")?;
    let setup = job.setup()?;
    let dcp = Dcp::build(&setup);
    let r = check_standard(&setup, &dcp);
    let report = CheckJson {
        standard: r.standard,
        surjective: r.surjective,
        collisions: r.collisions.iter().map(|&(a, b)| [a, b]).collect(),
        criteria: r
            .criteria
            .iter()
            .map(|row| CriteriaJson {
                index_set: index_set(&setup, row.index),
                chain: row.chain.iter().map(|&i| index_set(&setup, i)).collect(),
                unique_preimage: row.unique_preimage,
                lift_equality: row.lift_equality,
                subgroup_inclusion: row.subgroup_inclusion,
                dynkin_separation: row.dynkin_separation,
            })
            .collect(),
        criteria_consistent: r.criteria_consistent(),
    };
    let verdict = if r.standard { "tau-standard" } else { "NOT tau-standard" };
    Ok(Outcome {
        body: json(&report)?,
        passed: true,
        notes: vec![verdict.into()],
    })
}

#[derive(Serialize)]
struct EnumeratedJson {
    tableau: LsTableauJson,
    fan_vector: Vec<FanEntry>,
}

#[derive(Serialize)]
struct DegreeJson {
    degree: Vec<i64>,
    shape: Vec<Vec<usize>>,
    count: usize,
    elements: Vec<EnumeratedJson>,
}

pub fn cmd_enumerate(job: &JobSpec) -> Result<Outcome, CliError> {
    require_json(job, "enumerate")?;
    let setup = job.setup()?;
    let dcp = Dcp::build(&setup);
    require_standard(&setup, &dcp)?;
    let fan = LsFan::new(&setup, &dcp);
    let g = setup.group();
    let mut out = Vec::new();
    for d in job.degree_list()? {
        let shape = shape_for_degree(setup.iposet(), &d)?;
        let tabs = enumerate_standard(&setup, &dcp, &d)?;
        let elements = tabs
            .iter()
            .map(|t| {
                Ok(EnumeratedJson {
                    tableau: t.to_json(g),
                    fan_vector: fan_vector_to_json(&fan.theta(&shape, t)?),
                })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        out.push(DegreeJson {
            shape: shape.iter().map(|&i| index_set(&setup, i)).collect(),
            count: tabs.len(),
            degree: d,
            elements,
        });
    }
    let notes = out.iter().map(|d| format!("degree {:?}: {}", d.degree, d.count)).collect();
    Ok(Outcome {
        body: json(&out)?,
        passed: true,
        notes,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRow {
    pub check: &'static str,
    pub degree: Vec<i64>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Serialize)]
struct VerifyJson {
    passed: bool,
    warnings: Vec<String>,
    checks: Vec<CheckRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    conjecture: Option<ConjectureReport>,
}

fn row(check: &'static str, degree: &[i64], failure: Option<String>) -> CheckRow {
    CheckRow {
        check,
        degree: degree.to_vec(),
        passed: failure.is_none(),
        detail: failure,
    }
}

fn fan_character(fan: &LsFan, points: &[FanVector]) -> Result<Character, CliError> {
    let mut ch = Character::new();
    for v in points {
        *ch.entry(fan.weight(v)?).or_insert(0) += 1;
    }
    Ok(ch)
}

fn first_difference(a: &Character, b: &Character) -> Option<String> {
    let keys: BTreeSet<_> = a.keys().chain(b.keys()).collect();
    keys.into_iter().find_map(|k| {
        let (x, y) = (a.get(k).copied().unwrap_or(0), b.get(k).copied().unwrap_or(0));
        (x != y).then(|| format!("weight {k:?}: {x} vs {y}"))
    })
}

/// Counting and character identities and `Theta` round trips at every requested degree;
/// optionally the multidegree comparison, which is reported but never fails the run.
pub fn cmd_verify(job: &JobSpec) -> Result<Outcome, CliError> {
    require_json(job, "verify")?;
    let setup = job.setup()?;
    let dcp = Dcp::build(&setup);
    require_standard(&setup, &dcp)?;
    let fan = LsFan::new(&setup, &dcp);
    let g = setup.group();
    let degrees = job.degree_list()?;
    let mut warnings = Vec::new();
    if degrees.is_empty() {
        warnings.push("empty degree grid: nothing to verify".to_string());
    }
    let mut checks = Vec::new();
    for d in &degrees {
        let oracle = demazure_character(g, &setup.weight_of_degree(d), setup.tau())?;
        let dim: i64 = oracle.values().sum();
        let tabs = enumerate_standard(&setup, &dcp, d)?;
        let points = fan.points(d)?;
        let counting = (tabs.len() as i64 != dim || points.len() as i64 != dim)
            .then(|| format!("tableaux {}, fan points {}, dimension {dim}", tabs.len(), points.len()));
        checks.push(row("counting", d, counting));
        let ch_tab = character(g, &tabs)?;
        let ch_fan = fan_character(&fan, &points)?;
        let char_fail = first_difference(&ch_tab, &oracle)
            .map(|x| format!("tableaux: {x}"))
            .or_else(|| first_difference(&ch_fan, &oracle).map(|x| format!("fan: {x}")));
        checks.push(row("character", d, char_fail));
        let shape = shape_for_degree(setup.iposet(), d)?;
        let mut images = BTreeSet::new();
        let mut theta_fail = None;
        for t in &tabs {
            let v = fan.theta(&shape, t)?;
            let back = fan.theta_inverse(&v).map(|x| x.1);
            if back.as_ref() != Ok(t) {
                theta_fail = Some(format!("round trip fails at {:?}", fan_vector_to_json(&v)));
                break;
            }
            images.insert(v);
        }
        if theta_fail.is_none() && images != points.iter().cloned().collect::<BTreeSet<_>>() {
            theta_fail = Some("image of Theta differs from the fan points".into());
        }
        checks.push(row("theta", d, theta_fail));
    }
    let conjecture = if job.conjecture {
        let report = multidegree_conjecture_check(&setup, &dcp, job.grid)?;
        if !report.agree() {
            warnings.push("multidegree comparison disagrees; see the conjecture table".into());
        }
        Some(report)
    } else {
        None
    };
    let passed = checks.iter().all(|c| c.passed);
    let mut notes = warnings.iter().map(|w| format!("warning: {w}")).collect::<Vec<_>>();
    if let Some(c) = checks.iter().find(|c| !c.passed) {
        notes.push(format!(
            "FAIL {} at degree {:?}: {}",
            c.check,
            c.degree,
            c.detail.as_deref().unwrap_or("")
        ));
    } else {
        notes.push(format!("{} checks passed", checks.len()));
    }
    let report = VerifyJson {
        passed,
        warnings,
        checks,
        conjecture,
    };
    Ok(Outcome {
        body: json(&report)?,
        passed,
        notes,
    })
}

/// The multidegree comparison alone. Disagreement is a finding, not an error.
pub fn cmd_conjecture(job: &JobSpec) -> Result<Outcome, CliError> {
    require_json(job, "conjecture")?;
    let setup = job.setup()?;
    let dcp = Dcp::build(&setup);
    let report = multidegree_conjecture_check(&setup, &dcp, job.grid)?;
    let mut notes = vec![format!("dimension {}, grid {}", report.dimension, report.grid)];
    for r in report.rows.iter().filter(|r| !r.agree || r.chains != "0") {
        notes.push(format!(
            "k = {:?}: chains {}, hilbert {}{}",
            r.k,
            r.chains,
            r.hilbert,
            if r.agree { "" } else { "  (differs)" }
        ));
    }
    notes.push(if report.agree() { "multidegrees agree" } else { "multidegrees differ" }.into());
    Ok(Outcome {
        body: json(&report)?,
        passed: true,
        notes,
    })
}
