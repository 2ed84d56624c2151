// Unique colorability of a strip of triangles. Every method answers the
// same question; the Gröbner basis shape also hands back the coloring.

use gbcolor::algorithms::{is_uniquely_k_colorable, Certificate, Method, SolveOptions};
use gbcolor::graph::{enumerate_colorings, Graph, OracleBudget};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // Triangles 123, 234, 345, 456 glued along edges.
    let strip = Graph::from_edges(6, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5), (4, 6), (5, 6)])?;
    let c6 = Graph::cycle(6);

    let opts = SolveOptions::default();
    for (name, g) in [("triangle strip", &strip), ("6-cycle", &c6)] {
        let census = enumerate_colorings(g, 3, OracleBudget::default())?;
        let coloring = census.surjective_partition(3).cloned();
        println!("{name}: {} proper 3-colorings, {} up to renaming", census.count, census.partitions.len());
        for method in Method::UNIQUENESS {
            if method.needs_coloring() && coloring.is_none() {
                continue;
            }
            let v = is_uniquely_k_colorable(g, 3, method, coloring.as_ref(), &opts)?;
            match &v.certificate {
                Some(Certificate::Partition(p)) => println!("  {method}: {} with classes {p}", v.answer),
                Some(Certificate::Dimension(d)) => println!("  {method}: {} (dim {d})", v.answer),
                _ => println!("  {method}: {}", v.answer),
            }
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
