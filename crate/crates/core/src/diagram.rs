//! Graded branching graphs and their DOT / JSON output.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::alt_labels::Sign;
use crate::error::{Error, Result};
use crate::partition::partitions_of;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Node {
    pub level: usize,
    pub label: String,
    pub sign: Option<Sign>,
}

/// Nodes grouped by level, edges joining a node to one on the level above.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BratteliDiagram {
    chain: String,
    nodes: Vec<Node>,
    // (lower, upper), deduplicated, insertion order kept
    edges: Vec<(String, String)>,
    seen: BTreeSet<(String, String)>,
}

impl BratteliDiagram {
    pub fn new(chain: impl Into<String>) -> Self {
        BratteliDiagram {
            chain: chain.into(),
            nodes: Vec::new(),
            edges: Vec::new(),
            seen: BTreeSet::new(),
        }
    }

    pub fn chain(&self) -> &str {
        &self.chain
    }

    pub fn add_node(&mut self, level: usize, label: String, sign: Option<Sign>) {
        self.nodes.push(Node { level, label, sign });
    }

    pub fn add_edge(&mut self, lower: String, upper: String) {
        if self.seen.insert((lower.clone(), upper.clone())) {
            self.edges.push((lower, upper));
        }
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(String, String)] {
        &self.edges
    }

    pub fn level(&self, n: usize) -> Vec<&Node> {
        self.nodes.iter().filter(|node| node.level == n).collect()
    }

    pub fn has_edge(&self, lower: &str, upper: &str) -> bool {
        self.seen.contains(&(lower.to_string(), upper.to_string()))
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "graph {} {{", self.chain).unwrap();
        writeln!(out, "  rankdir=TB;").unwrap();
        writeln!(out, "  node [shape=box];").unwrap();
        let mut levels: Vec<usize> = self.nodes.iter().map(|n| n.level).collect();
        levels.dedup();
        for level in levels {
            writeln!(out, "  {{ rank=same;").unwrap();
            for node in self.level(level) {
                let color = match node.sign {
                    Some(Sign::Plus) => ", color=red, fontcolor=red",
                    Some(Sign::Minus) => ", color=green, fontcolor=green",
                    None => "",
                };
                writeln!(
                    out,
                    "    \"{}\" [label=\"{}\"{color}];",
                    node.label, node.label
                )
                .unwrap();
            }
            writeln!(out, "  }}").unwrap();
        }
        for (lower, upper) in &self.edges {
            writeln!(out, "  \"{lower}\" -- \"{upper}\";").unwrap();
        }
        out.push_str("}\n");
        out
    }

    /// `{"chain", "nodes": [...], "down": {upper: [lower, ...]}}`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut down = serde_json::Map::new();
        for node in &self.nodes {
            let below: Vec<&str> = self
                .edges
                .iter()
                .filter(|(_, upper)| *upper == node.label)
                .map(|(lower, _)| lower.as_str())
                .collect();
            down.insert(node.label.clone(), serde_json::json!(below));
        }
        serde_json::json!({
            "chain": self.chain,
            "nodes": self.nodes,
            "down": down,
        })
    }
}

/// Young's graph on partitions of `1..=max_n`.
pub fn young_graph(max_n: usize) -> Result<BratteliDiagram> {
    if max_n < 1 {
        return Err(Error::domain("young graph requires max_n >= 1"));
    }
    let mut d = BratteliDiagram::new("symmetric");
    for n in 1..=max_n {
        for lam in partitions_of(n) {
            d.add_node(n, lam.to_string(), None);
        }
    }
    for n in 2..=max_n {
        for lam in partitions_of(n) {
            for mu in lam.down_set()? {
                d.add_edge(mu.to_string(), lam.to_string());
            }
        }
    }
    Ok(d)
}
