// Read a graph in DIMACS edge format, count its colorings by brute force
// and write it back out.

use gbcolor::graph::{enumerate_colorings, parse_dimacs_with_warnings, render_dimacs, OracleBudget};

const WHEEL: &str = "\
c wheel with five spokes
p edge 6 10
e 1 2
e 2 3
e 3 4
e 4 5
e 5 1
e 6 1
e 6 2
e 6 3
e 6 4
e 6 5
e 6 5
";

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let report = parse_dimacs_with_warnings(WHEEL)?;
    for w in &report.warnings {
        println!("warning: {w}");
    }
    let g = report.graph;
    println!("{} vertices, {} edges", g.n(), g.edge_count());
    for k in 3..=5 {
        let census = enumerate_colorings(&g, k, OracleBudget::default())?;
        println!("k = {k}: {} colorings, {} partitions", census.count, census.partitions.len());
    }
    let census = enumerate_colorings(&g, 4, OracleBudget::default())?;
    if let Some(p) = census.partitions.iter().next() {
        println!("first 4-coloring: {p}");
    }
    print!("{}", render_dimacs(&g));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
