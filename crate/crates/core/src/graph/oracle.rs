//! Brute-force coloring oracle.
//!
//! Proper colorings are enumerated up to renaming of colors: vertex `v`
//! may only take an existing class or open the next new one. Each
//! partition into `l` independent classes stands for `k·(k−1)⋯(k−l+1)`
//! labeled colorings.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{ColorPartition, Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_vertices: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_vertices: 20 }
    }
}

/// The number of proper `k`-colorings with labeled colors (the chromatic
/// polynomial at `k`) and the distinct color-class partitions they induce.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoringCensus {
    pub count: u128,
    pub partitions: BTreeSet<ColorPartition>,
}

impl ColoringCensus {
    /// The proper colorings are a single orbit under permuting the `k`
    /// colors: one partition and `k!` colorings. Once `n >= k` that
    /// partition uses every color; below that only `K_{k−1}` qualifies.
    pub fn is_uniquely_colorable(&self, k: usize) -> bool {
        self.partitions.len() == 1 && Some(self.count) == (1..=k as u128).try_fold(1u128, |a, i| a.checked_mul(i))
    }

    /// Some proper coloring that uses every color, if one exists.
    pub fn surjective_partition(&self, k: usize) -> Option<&ColorPartition> {
        self.partitions.iter().find(|p| p.len() == k)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("census serializes")
    }
}

pub fn enumerate_colorings(g: &Graph, k: usize, budget: OracleBudget) -> Result<ColoringCensus, GraphError> {
    if g.n() > budget.max_vertices {
        return Err(GraphError::BudgetExceeded { n: g.n(), max: budget.max_vertices });
    }
    let adj = g.adjacency();
    let mut census = ColoringCensus { count: 0, partitions: BTreeSet::new() };
    let mut labels = vec![0usize; g.n() + 1];
    assign(&adj, k, 1, 0, &mut labels, &mut census);
    Ok(census)
}

fn falling_factorial(k: usize, l: usize) -> u128 {
    (0..l).map(|i| (k - i) as u128).product()
}

fn assign(adj: &[Vec<usize>], k: usize, v: usize, used: usize, labels: &mut [usize], census: &mut ColoringCensus) {
    let n = labels.len() - 1;
    if v > n {
        census.count += falling_factorial(k, used);
        census.partitions.insert(ColorPartition::from_coloring(&labels[1..]));
        return;
    }
    for class in 0..(used + 1).min(k) {
        if adj[v].iter().any(|&u| u < v && labels[u] == class) {
            continue;
        }
        labels[v] = class;
        assign(adj, k, v + 1, used.max(class + 1), labels, census);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Labeled brute force over all k^n maps, independent of the
    // class-based enumeration above.
    fn naive_count(g: &Graph, k: usize) -> u128 {
        let n = g.n();
        let mut count = 0;
        for code in 0..k.pow(n as u32) {
            let color = |v: usize| code / k.pow((v - 1) as u32) % k;
            if g.edges().all(|(i, j)| color(i) != color(j)) {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn small_cases() {
        let b = OracleBudget::default();
        let p3 = enumerate_colorings(&Graph::path(3), 3, b).unwrap();
        assert_eq!(p3.count, 12);
        assert_eq!(p3.partitions.len(), 2);
        let k3 = enumerate_colorings(&Graph::complete(3), 3, b).unwrap();
        assert_eq!(k3.count, 6);
        assert_eq!(k3.partitions.len(), 1);
        assert!(k3.is_uniquely_colorable(3));
        let k4 = enumerate_colorings(&Graph::complete(4), 3, b).unwrap();
        assert_eq!(k4.count, 0);
        assert!(k4.partitions.is_empty());
        assert!(enumerate_colorings(&Graph::complete(2), 3, b).unwrap().is_uniquely_colorable(3));
        let k2_plus_vertex = Graph::from_edges(3, [(1, 2)]).unwrap();
        assert!(!enumerate_colorings(&k2_plus_vertex, 3, b).unwrap().is_uniquely_colorable(3));
    }

    #[test]
    fn matches_labeled_brute_force() {
        let graphs = [Graph::cycle(5), Graph::path(4), Graph::complete(4), Graph::new(3), Graph::cycle(6)];
        for g in &graphs {
            for k in 1..=4 {
                assert_eq!(enumerate_colorings(g, k, OracleBudget::default()).unwrap().count, naive_count(g, k));
            }
        }
    }

    #[test]
    fn budget() {
        let err = enumerate_colorings(&Graph::new(9), 2, OracleBudget { max_vertices: 8 });
        assert_eq!(err, Err(GraphError::BudgetExceeded { n: 9, max: 8 }));
    }

    #[test]
    fn relabeling_invariance() {
        let g = Graph::from_edges(6, [(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 6), (6, 4)]).unwrap();
        let base = enumerate_colorings(&g, 3, OracleBudget::default()).unwrap().count;
        for perm in [[2, 3, 1, 6, 4, 5], [6, 5, 4, 3, 2, 1], [1, 4, 2, 5, 3, 6]] {
            let h = g.relabel(&perm);
            assert_eq!(enumerate_colorings(&h, 3, OracleBudget::default()).unwrap().count, base);
        }
    }

    #[test]
    fn json() {
        let c = enumerate_colorings(&Graph::path(3), 3, OracleBudget::default()).unwrap();
        assert_eq!(c.to_json(), r#"{"count":12,"partitions":[[[1],[2],[3]],[[2],[1,3]]]}"#);
    }
}
