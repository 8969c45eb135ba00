//! Layered Collatz tree rooted at 1.
//!
//! Layer 1 holds the terminal integers, and each later layer holds, for every
//! non-starter node above it, the first `breadth` members of its predecessor
//! row. Starters never have children, so they are the leaves.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{syracuse_step, terminal, OddInt};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeNode {
    pub value: OddInt,
    pub parent: Option<OddInt>,
    pub depth: u64,
    pub is_leaf: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Segment {
    /// `None` only for the segment holding the root.
    pub parent: Option<OddInt>,
    pub children: Vec<OddInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeLayer {
    pub depth: u64,
    pub segments: Vec<Segment>,
}

impl TreeLayer {
    pub fn values(&self) -> impl Iterator<Item = &OddInt> {
        self.segments.iter().flat_map(|s| s.children.iter())
    }

    pub fn segment(&self, parent: &OddInt) -> Option<&[OddInt]> {
        self.segments
            .iter()
            .find(|s| s.parent.as_ref() == Some(parent))
            .map(|s| s.children.as_slice())
    }

    pub fn nodes(&self) -> impl Iterator<Item = TreeNode> + '_ {
        self.segments.iter().flat_map(move |s| {
            s.children.iter().map(move |v| TreeNode {
                value: v.clone(),
                parent: s.parent.clone(),
                depth: self.depth,
                is_leaf: is_starter(v),
            })
        })
    }
}

fn is_starter(v: &OddInt) -> bool {
    v.rem_u32(3) == 0
}

/// The first `count` odd integers whose Syracuse iterate is `y`, smallest
/// first, each linked to the next by `x -> 4x + 1`.
pub fn predecessors_of(y: &OddInt, count: usize) -> Result<Vec<OddInt>> {
    if count == 0 {
        return Err(Error::param("count", "must be at least 1"));
    }
    if y.is_one() {
        return Err(Error::RootPredecessors);
    }
    let r = y.value() / 6u32;
    let first = match y.rem_u32(6) {
        1 => r * 8u32 + 1u32,
        5 => r * 4u32 + 3u32,
        _ => return Err(Error::StarterHasNoPredecessors(y.value().clone())),
    };
    let mut out = Vec::with_capacity(count);
    let mut z = OddInt::new_unchecked(first);
    for _ in 0..count {
        let next = z.four_x_plus_one();
        out.push(z);
        z = next;
    }
    Ok(out)
}

pub fn build_layers(max_depth: u64, breadth: usize) -> Result<Vec<TreeLayer>> {
    if max_depth == 0 {
        return Err(Error::param("max_depth", "must be at least 1"));
    }
    if breadth == 0 {
        return Err(Error::param("breadth", "must be at least 1"));
    }
    let root = OddInt::one();
    let mut layers = vec![TreeLayer {
        depth: 0,
        segments: vec![Segment {
            parent: None,
            children: vec![root.clone()],
        }],
    }];
    layers.push(TreeLayer {
        depth: 1,
        segments: vec![Segment {
            parent: Some(root),
            children: (1..=breadth as u64).map(terminal).collect(),
        }],
    });
    for depth in 2..=max_depth {
        let parents: Vec<&OddInt> = layers
            .last()
            .expect("layer 1 exists")
            .values()
            .filter(|v| !is_starter(v))
            .collect();
        let mut segments = parents
            .par_iter()
            .map(|&p| {
                Ok(Segment {
                    parent: Some(p.clone()),
                    children: predecessors_of(p, breadth)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        segments.sort_by(|a, b| a.parent.cmp(&b.parent));
        layers.push(TreeLayer { depth, segments });
    }
    Ok(layers)
}

/// Checks every non-root node against the Syracuse step. Returns the first
/// node whose iterate differs from its recorded parent.
pub fn find_unsound_node(layers: &[TreeLayer]) -> Option<TreeNode> {
    layers
        .iter()
        .flat_map(|l| l.nodes())
        .filter(|n| n.parent.is_some())
        .find(|n| Some(syracuse_step(&n.value).iterate) != n.parent)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
    Text,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            "text" => Ok(ExportFormat::Text),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

pub fn export_tree(layers: &[TreeLayer], format: ExportFormat) -> Result<Vec<u8>> {
    if layers.is_empty() {
        return Err(Error::param("layers", "nothing to export"));
    }
    let out = match format {
        ExportFormat::Dot => to_dot(layers),
        ExportFormat::Json => to_json_lines(layers)?,
        ExportFormat::Text => to_text(layers),
    };
    Ok(out.into_bytes())
}

fn to_dot(layers: &[TreeLayer]) -> String {
    let mut s = String::from("digraph collatz {\n  rankdir=BT;\n  node [shape=ellipse];\n");
    for layer in layers {
        for node in layer.nodes() {
            if node.value.is_one() {
                writeln!(s, "  {} [shape=doublecircle];", node.value).unwrap();
            } else if node.is_leaf {
                writeln!(
                    s,
                    "  {} [shape=box, style=filled, fillcolor=lightgrey];",
                    node.value
                )
                .unwrap();
            }
        }
    }
    for layer in layers {
        for node in layer.nodes() {
            if let Some(parent) = &node.parent {
                writeln!(s, "  {} -> {};", node.value, parent).unwrap();
            }
        }
    }
    s.push_str("}\n");
    s
}

fn to_json_lines(layers: &[TreeLayer]) -> Result<String> {
    let mut s = String::new();
    for layer in layers {
        s.push_str(&serde_json::to_string(layer).map_err(|e| Error::Io(e.to_string()))?);
        s.push('\n');
    }
    Ok(s)
}

fn to_text(layers: &[TreeLayer]) -> String {
    let mut children: HashMap<&OddInt, &[OddInt]> = HashMap::new();
    for layer in layers.iter().skip(1) {
        for seg in &layer.segments {
            if let Some(p) = &seg.parent {
                children.insert(p, &seg.children);
            }
        }
    }
    let mut s = String::new();
    // (value, depth), depth-first in segment order
    let mut stack: Vec<(&OddInt, usize)> = layers[0].values().map(|v| (v, 0)).collect();
    stack.reverse();
    while let Some((v, depth)) = stack.pop() {
        let marker = if is_starter(v) { " [starter]" } else { "" };
        writeln!(s, "{}{}{}", "  ".repeat(depth), v, marker).unwrap();
        if let Some(kids) = children.get(v) {
            // the root's own layer-0 entry is not its child
            stack.extend(
                kids.iter()
                    .rev()
                    .filter(|k| *k != v)
                    .map(|k| (k, depth + 1)),
            );
        }
    }
    s
}
