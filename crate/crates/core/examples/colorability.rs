// Decide 3-colorability of the Petersen graph and 2-colorability of a
// 5-cycle with every algebraic method, over ℚ and GF(2).
//
// ```bash
// cargo run --release --example colorability
// ```

use gbcolor::algorithms::{is_k_colorable, Method, SolveOptions};
use gbcolor::field::FieldConfig;
use gbcolor::graph::Graph;
use gbcolor::poly::OrderKind;

fn petersen() -> Graph {
    let outer = (1..=5).map(|i| (i, i % 5 + 1));
    let spokes = (1..=5).map(|i| (i, i + 5));
    let inner = (1..=5).map(|i| (i + 5, (i + 1) % 5 + 6));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("valid edges")
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [("petersen", petersen(), 3), ("C5", Graph::cycle(5), 2)];
    for (name, g, k) in &cases {
        for field in [FieldConfig::Rationals, FieldConfig::PrimeField(2), FieldConfig::PrimeField(3)] {
            if field.validate(*k).is_err() {
                continue;
            }
            let opts = SolveOptions::new(OrderKind::DegRevLex, field);
            for method in Method::COLORABILITY {
                // The Vandermonde ideal is only generated for small k.
                if method == Method::NfGraphPolyJnk && *k > opts.jnk_max_k {
                    continue;
                }
                let v = is_k_colorable(g, *k, method, &opts)?;
                println!(
                    "{name:>8} {k}-colorable over {field}: {:<5} via {method} ({:.1} ms)",
                    v.answer,
                    v.elapsed.as_secs_f64() * 1e3
                );
            }
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
