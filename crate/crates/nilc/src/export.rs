//! JSON and DOT serializations of orbit posets.

use serde::{Deserialize, Serialize};

use crate::affine_weyl;
use crate::catalogue::Height2Orbit;
use crate::error::{Error, Result};
use crate::poset::{self, BOrbit, OrbitPoset, TildePair};
use crate::root_system::RootSystem;
use crate::weyl;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SystemJson {
    #[serde(rename = "type")]
    pub type_letter: String,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NodeJson {
    pub id: String,
    pub roots: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w_word: Option<String>,
    pub dim: usize,
    pub sigma_word: String,
    pub g_orbit: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PosetJson {
    pub system: SystemJson,
    pub nodes: Vec<NodeJson>,
    pub covers: Vec<(String, String)>,
}

fn system_json(sys: &RootSystem) -> SystemJson {
    SystemJson {
        type_letter: sys.cartan_type().letter.to_string(),
        rank: sys.cartan_type().rank,
    }
}

pub fn n2_poset_json(sys: &RootSystem, p: &OrbitPoset<BOrbit>) -> PosetJson {
    let nodes = p
        .nodes
        .iter()
        .enumerate()
        .map(|(k, n)| NodeJson {
            id: format!("n{k}"),
            roots: n.set.roots().iter().map(|r| r.coords.clone()).collect(),
            w_word: None,
            dim: n.dim,
            sigma_word: affine_weyl::word_string(sys, &n.sigma.element),
            g_orbit: n.g_orbit.clone(),
        })
        .collect();
    PosetJson {
        system: system_json(sys),
        nodes,
        covers: p
            .covers
            .iter()
            .map(|&(a, b)| (format!("n{a}"), format!("n{b}")))
            .collect(),
    }
}

pub fn tilde_poset_json(
    sys: &RootSystem,
    cat: &[Height2Orbit],
    p: &OrbitPoset<TildePair>,
) -> PosetJson {
    let nodes = p
        .nodes
        .iter()
        .enumerate()
        .map(|(k, n)| {
            let moved = n
                .set
                .map(sys, |r| n.w.act(r))
                .expect("node sets stay strongly orthogonal");
            NodeJson {
                id: format!("n{k}"),
                roots: n.set.roots().iter().map(|r| r.coords.clone()).collect(),
                w_word: Some(weyl::word_string(sys, &n.w)),
                dim: n.dim,
                sigma_word: affine_weyl::word_string(sys, &n.sigma.element),
                g_orbit: poset::g_orbit_id(sys, cat, &moved),
            }
        })
        .collect();
    PosetJson {
        system: system_json(sys),
        nodes,
        covers: p
            .covers
            .iter()
            .map(|&(a, b)| (format!("n{a}"), format!("n{b}")))
            .collect(),
    }
}

pub fn to_json_string(p: &PosetJson) -> String {
    serde_json::to_string_pretty(p).expect("poset serializes")
}

pub fn from_json_string(s: &str) -> Result<PosetJson> {
    serde_json::from_str(s).map_err(|e| Error::Parse(format!("bad poset JSON: {e}")))
}

/// DOT output with nodes labelled "id\ndim" and rank groups by dimension.
pub fn to_dot_string(p: &PosetJson) -> String {
    let mut out = String::new();
    out.push_str("digraph poset {\n  rankdir=BT;\n");
    for n in &p.nodes {
        out.push_str(&format!("  \"{}\" [label=\"{}\\n{}\"];\n", n.id, n.id, n.dim));
    }
    let mut dims: Vec<usize> = p.nodes.iter().map(|n| n.dim).collect();
    dims.sort_unstable();
    dims.dedup();
    for d in dims {
        let ids: Vec<String> = p
            .nodes
            .iter()
            .filter(|n| n.dim == d)
            .map(|n| format!("\"{}\";", n.id))
            .collect();
        out.push_str(&format!("  {{ rank=same; {} }}\n", ids.join(" ")));
    }
    for (a, b) in &p.covers {
        out.push_str(&format!("  \"{a}\" -> \"{b}\";\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue::catalogue;
    use crate::root_system::{CartanType, TypeLetter};

    #[test]
    fn json_roundtrip() {
        let sys = RootSystem::build(CartanType::new(TypeLetter::A, 1).unwrap()).unwrap();
        let cat = catalogue(&sys);
        let p = poset::enumerate_n2(&sys, &cat);
        let j = n2_poset_json(&sys, &p);
        let s = to_json_string(&j);
        let back = from_json_string(&s).unwrap();
        assert_eq!(j, back);
    }

    #[test]
    fn dot_contains_rank_groups() {
        let sys = RootSystem::build(CartanType::new(TypeLetter::A, 1).unwrap()).unwrap();
        let cat = catalogue(&sys);
        let p = poset::enumerate_n2(&sys, &cat);
        let dot = to_dot_string(&n2_poset_json(&sys, &p));
        assert!(dot.contains("rank=same"));
        assert!(dot.contains("\"n0\" -> \"n1\""));
    }
}
