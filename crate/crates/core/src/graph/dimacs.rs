//! DIMACS `.col` format: `c` comment lines, a single `p edge <n> <m>`
//! problem line, then one `e <i> <j>` line per edge.

use super::{Graph, GraphError};

/// A parsed graph plus any non-fatal findings (duplicate edges, an edge
/// count differing from the header).
#[derive(Debug, Clone)]
pub struct DimacsReport {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

pub fn parse_dimacs(text: &str) -> Result<Graph, GraphError> {
    parse_dimacs_with_warnings(text).map(|r| r.graph)
}

pub fn parse_dimacs_with_warnings(text: &str) -> Result<DimacsReport, GraphError> {
    let mut graph: Option<Graph> = None;
    let mut declared = 0usize;
    let mut edge_lines = 0usize;
    let mut warnings = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut fields = raw.split_whitespace();
        match fields.next() {
            None | Some("c") => continue,
            Some("p") => {
                if graph.is_some() {
                    return Err(GraphError::MissingHeader { line });
                }
                let bad = || GraphError::BadHeader { line, text: raw.trim().to_string() };
                if fields.next() != Some("edge") {
                    return Err(bad());
                }
                let n: usize = fields.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
                declared = fields.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
                if fields.next().is_some() {
                    return Err(bad());
                }
                graph = Some(Graph::new(n));
            }
            Some("e") => {
                let g = graph.as_mut().ok_or(GraphError::MissingHeader { line })?;
                let bad = || GraphError::BadEdge { line, text: raw.trim().to_string() };
                let i: usize = fields.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
                let j: usize = fields.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
                if fields.next().is_some() {
                    return Err(bad());
                }
                edge_lines += 1;
                if !g.add_edge(i, j)? {
                    warnings.push(format!("line {line}: duplicate edge {{{i}, {j}}} ignored"));
                }
            }
            Some(_) => return Err(GraphError::BadEdge { line, text: raw.trim().to_string() }),
        }
    }

    let graph = graph.ok_or(GraphError::MissingHeader { line: text.lines().count() + 1 })?;
    if edge_lines != declared {
        warnings.push(format!("header declares {declared} edges but {edge_lines} edge lines were read"));
    }
    Ok(DimacsReport { graph, warnings })
}

pub fn render_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (i, j) in g.edges() {
        out.push_str(&format!("e {i} {j}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn path_graph() {
        let g = parse_dimacs("c path\np edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(g, Graph::path(3));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(parse_dimacs("p edge 2 1\ne 1 1\n"), Err(GraphError::SelfLoop(1)));
        assert!(matches!(parse_dimacs("e 1 2\n"), Err(GraphError::MissingHeader { .. })));
        assert!(matches!(parse_dimacs("p col 3 2\n"), Err(GraphError::BadHeader { .. })));
        assert!(matches!(parse_dimacs("p edge x 2\n"), Err(GraphError::BadHeader { .. })));
        assert_eq!(parse_dimacs("p edge 2 1\ne 1 3\n"), Err(GraphError::VertexOutOfRange { vertex: 3, n: 2 }));
        assert!(matches!(parse_dimacs("p edge 2 1\ne 1\n"), Err(GraphError::BadEdge { .. })));
        assert!(matches!(parse_dimacs(""), Err(GraphError::MissingHeader { .. })));
    }

    #[test]
    fn duplicates_and_count_mismatch_warn() {
        let r = parse_dimacs_with_warnings("p edge 3 3\ne 1 2\ne 2 1\n").unwrap();
        assert_eq!(r.graph.edge_count(), 1);
        assert_eq!(r.warnings.len(), 2);
    }

    proptest! {
        #[test]
        fn render_then_parse(n in 1usize..9, raw in proptest::collection::vec((1usize..9, 1usize..9), 0..20)) {
            let mut g = Graph::new(n);
            for (i, j) in raw {
                if i <= n && j <= n && i != j {
                    g.add_edge(i, j).unwrap();
                }
            }
            let report = parse_dimacs_with_warnings(&render_dimacs(&g)).unwrap();
            prop_assert_eq!(report.graph, g);
            prop_assert!(report.warnings.is_empty());
        }
    }
}
