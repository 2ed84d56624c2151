// Buchberger's algorithm on a small system: reduced bases under three
// orders, normal forms and the standard monomials of the quotient.

use gbcolor::field::Rationals;
use gbcolor::groebner::{reduced_basis, standard_monomials};
use gbcolor::poly::{OrderKind, PolyRing, TermOrder};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for kind in OrderKind::ALL {
        let ring = PolyRing::new(Rationals, 3, TermOrder::new(kind));
        let gens = vec![
            ring.parse("x1^2 + x2 + x3 - 1")?,
            ring.parse("x1 + x2^2 + x3 - 1")?,
            ring.parse("x1 + x2 + x3^2 - 1")?,
        ];
        let gb = reduced_basis(&gens, TermOrder::new(kind));
        println!("{kind}: {} elements", gb.len());
        for g in gb.polys() {
            println!("  {g}");
        }
        let f = ring.parse("x1*x2*x3")?;
        println!("  x1*x2*x3 reduces to {}", gb.normal_form(&f));
        let standard = standard_monomials(&gb, 3)?;
        println!("  {} standard monomials", standard.len());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
