//! Graphviz output for the covering relations of the natural order, of `CE`
//! and of the filter lattice.

use std::fmt::Write as _;

use crate::algebra::HilbertAlgebra;
use crate::closure::all_ce;
use crate::error::Result;
use crate::filters::all_filters;
use crate::subset::ElementSubset;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DotKind {
    Hasse,
    Ce,
    Filters,
}

impl std::str::FromStr for DotKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "hasse" => Ok(DotKind::Hasse),
            "ce" => Ok(DotKind::Ce),
            "filters" => Ok(DotKind::Filters),
            _ => Err(format!("unknown diagram `{s}` (expected hasse, ce or filters)")),
        }
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn digraph(name: &str, nodes: &[String], edges: &[(usize, usize)]) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {name} {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    for (i, label) in nodes.iter().enumerate() {
        writeln!(out, "  n{i} [label={}];", quote(label)).unwrap();
    }
    for &(a, b) in edges {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn subset_label(s: ElementSubset, label: &dyn Fn(usize) -> String) -> String {
    let parts: Vec<String> = s.iter().map(label).collect();
    format!("{{{}}}", parts.join(","))
}

/// A DOT digraph with an edge from each element to each of its upper
/// covers. Nodes are numbered in a fixed order so output is stable.
pub fn to_dot(alg: &HilbertAlgebra, kind: DotKind, label: &dyn Fn(usize) -> String) -> Result<String> {
    Ok(match kind {
        DotKind::Hasse => {
            let nodes: Vec<String> = alg.elements().map(label).collect();
            digraph("hasse", &nodes, &alg.natural_order().covers())
        }
        DotKind::Ce => {
            let ce = all_ce(alg)?;
            let nodes: Vec<String> = ce.maps().iter().map(|f| f.display_with(label)).collect();
            digraph("ce", &nodes, &ce.lattice().covers())
        }
        DotKind::Filters => {
            let fl = all_filters(alg);
            let nodes: Vec<String> = fl.filters().iter().map(|&j| subset_label(j, label)).collect();
            digraph("filters", &nodes, &fl.lattice().covers())
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{goedel_chain, implication_fork, singleton};

    fn idx(i: usize) -> String {
        i.to_string()
    }

    #[test]
    fn chain_is_a_path() {
        let d = to_dot(&goedel_chain(3), DotKind::Hasse, &idx).unwrap();
        assert_eq!(d.matches("->").count(), 2);
        assert!(d.contains("n0 -> n1;") && d.contains("n1 -> n2;"));
    }

    #[test]
    fn fork_ce_is_a_diamond() {
        let d = to_dot(&implication_fork(), DotKind::Ce, &idx).unwrap();
        assert_eq!(d.matches("[label=").count(), 4);
        assert_eq!(d.matches("->").count(), 4);
    }

    #[test]
    fn singleton_has_one_node() {
        for k in [DotKind::Hasse, DotKind::Ce, DotKind::Filters] {
            let d = to_dot(&singleton(), k, &idx).unwrap();
            assert_eq!(d.matches("[label=").count(), 1);
            assert!(!d.contains("->"));
        }
    }
}
