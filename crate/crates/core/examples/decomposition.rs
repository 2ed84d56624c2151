// The ideal of 3-colorings of the path 1 - 2 - 3 splits into one ideal
// per coloring up to renaming: {1,3 | 2} and {1 | 2 | 3}.

use gbcolor::algorithms::{decompose, SolveOptions};
use gbcolor::coloring::{coloring_ideal, ideal_i_gk};
use gbcolor::field::Rationals;
use gbcolor::graph::{ColorPartition, Graph, OracleBudget};
use gbcolor::ideal::{ideals_equal, intersect_with};
use gbcolor::poly::{OrderKind, TermOrder};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p3 = Graph::path(3);
    let nu1: ColorPartition = "1,3;2".parse()?;
    let nu2: ColorPartition = "1;2;3".parse()?;
    let a1 = coloring_ideal(Rationals, &nu1, 3)?;
    let a2 = coloring_ideal(Rationals, &nu2, 3)?;
    println!("A({nu1}) = {a1}");
    println!("A({nu2}) = {a2}");

    let meet = intersect_with(&a1, &a2, OrderKind::DegRevLex)?;
    let igk = ideal_i_gk(Rationals, &p3, 3);
    println!("intersection:");
    for g in meet.groebner_basis(TermOrder::DEGREVLEX).polys() {
        println!("  {g}");
    }
    println!("equals I(P3, 3): {}", ideals_equal(&meet, &igk, TermOrder::DEGREVLEX)?);

    // The same check for a 5-cycle, with the colorings found by the oracle.
    let d = decompose(&Graph::cycle(5), 3, OracleBudget::default(), &SolveOptions::default())?;
    println!("C5: {} coloring ideals, intersection matches: {}", d.partitions.len(), d.ideal_ok);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
