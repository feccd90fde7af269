//! JSON and DOT views of library values.

use std::fmt::Write as _;

use lsfan::dcp::{mask_to_vec, Dcp, EdgeKind, Setup, UnderlineW};
use lsfan::weyl::{type_a, Coset, Family};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NodeJson {
    pub id: usize,
    /// 1-based reduced word of the minimal representative.
    pub theta: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub one_line: Option<String>,
    #[serde(rename = "I")]
    pub index_set: Vec<usize>,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeJson {
    pub from: usize,
    pub to: usize,
    #[serde(rename = "type")]
    pub kind: EdgeKind,
    pub bond: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DcpSummary {
    pub nodes: usize,
    pub edges: usize,
    pub all_bonds_one: bool,
    pub lcm_of_bonds: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DcpJson {
    pub nodes: Vec<NodeJson>,
    pub edges: Vec<EdgeJson>,
    pub summary: DcpSummary,
}

pub fn word(setup: &Setup, c: Coset) -> Vec<usize> {
    setup.group().reduced_word(c.rep).iter().map(|i| i + 1).collect()
}

/// One-line notation of the minimal representative, in type A only.
pub fn one_line(setup: &Setup, c: Coset) -> Option<String> {
    let g = setup.group();
    (g.datum().family == Family::A).then(|| type_a::digits(&type_a::one_line(g, c.rep).expect("type A")))
}

pub fn index_set(setup: &Setup, i: usize) -> Vec<usize> {
    mask_to_vec(setup.iposet().set(i))
}

fn node_label(setup: &Setup, c: Coset, i: usize) -> String {
    let theta = match one_line(setup, c) {
        Some(s) => s,
        None => {
            let w = word(setup, c);
            if w.is_empty() {
                "e".into()
            } else {
                w.iter().map(|x| format!("s{x}")).collect()
            }
        }
    };
    format!("({theta}, {})", setup.iposet().label(i))
}

pub fn dcp_json(setup: &Setup, dcp: &Dcp) -> DcpJson {
    let nodes = dcp
        .nodes
        .iter()
        .enumerate()
        .map(|(id, n)| NodeJson {
            id,
            theta: word(setup, n.theta),
            one_line: one_line(setup, n.theta),
            index_set: index_set(setup, n.index),
            rank: n.rank,
        })
        .collect();
    let edges = dcp
        .edges
        .iter()
        .map(|e| EdgeJson {
            from: e.upper,
            to: e.lower,
            kind: e.kind,
            bond: e.bond,
        })
        .collect();
    DcpJson {
        nodes,
        edges,
        summary: DcpSummary {
            nodes: dcp.len(),
            edges: dcp.edges.len(),
            all_bonds_one: dcp.edges.iter().all(|e| e.bond == 1),
            lcm_of_bonds: dcp.bonded().lcm_of_bonds(),
        },
    }
}

/// Plain graph, upper node to lower node; bonds other than 1 are shown as edge labels.
pub fn dcp_dot(setup: &Setup, dcp: &Dcp) -> String {
    let mut s = String::from("digraph dcp {\n");
    for (k, n) in dcp.nodes.iter().enumerate() {
        let _ = writeln!(s, "  n{k} [label=\"{}\"];", node_label(setup, n.theta, n.index));
    }
    for e in &dcp.edges {
        let mut attrs = Vec::new();
        if e.kind == EdgeKind::ShrinkI {
            attrs.push("style=dashed".to_string());
        }
        if e.bond != 1 {
            attrs.push(format!("label=\"{}\"", e.bond));
        }
        let attrs = if attrs.is_empty() { String::new() } else { format!(" [{}]", attrs.join(" ")) };
        let _ = writeln!(s, "  n{} -> n{}{attrs};", e.upper, e.lower);
    }
    s.push_str("}\n");
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnderlineNodeJson {
    pub id: usize,
    pub theta: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub one_line: Option<String>,
    #[serde(rename = "I")]
    pub index_set: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnderlineJson {
    pub nodes: Vec<UnderlineNodeJson>,
    /// Covering pairs `[upper, lower]` of the transitive hull.
    pub edges: Vec<[usize; 2]>,
    pub transitive: bool,
    pub characterizations_agree: bool,
}

pub fn underline_json(setup: &Setup, uw: &UnderlineW) -> UnderlineJson {
    UnderlineJson {
        nodes: uw
            .nodes
            .iter()
            .enumerate()
            .map(|(id, &(c, i))| UnderlineNodeJson {
                id,
                theta: word(setup, c),
                one_line: coset_one_line(setup, c),
                index_set: index_set(setup, i),
            })
            .collect(),
        edges: uw.hasse.iter().map(|&(a, b)| [a, b]).collect(),
        transitive: uw.transitive,
        characterizations_agree: uw.characterizations_agree,
    }
}

/// Cosets of maximal parabolics in type A are clearer as subsets; other cosets use the
/// one-line notation of the minimal representative.
fn coset_one_line(setup: &Setup, c: Coset) -> Option<String> {
    let g = setup.group();
    if g.datum().family != Family::A {
        return None;
    }
    match type_a::subset_of_coset(g, c) {
        Ok(v) => Some(format!("{{{}}}", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))),
        Err(_) => one_line(setup, c),
    }
}

pub fn underline_dot(setup: &Setup, uw: &UnderlineW) -> String {
    let mut s = String::from("digraph underline_w {\n");
    for (k, &(c, i)) in uw.nodes.iter().enumerate() {
        let theta = coset_one_line(setup, c).unwrap_or_else(|| format!("{:?}", word(setup, c)));
        let _ = writeln!(s, "  n{k} [label=\"({theta}, {})\"];", setup.iposet().label(i));
    }
    for &(a, b) in &uw.hasse {
        let _ = writeln!(s, "  n{a} -> n{b};");
    }
    s.push_str("}\n");
    s
}
