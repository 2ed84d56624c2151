// Gröbner basis of the ideal of a fixed 3-coloring of twelve vertices,
// read off directly from the color classes, and its JSON form.

use gbcolor::coloring::{nu_basis, recognize_nu_shape};
use gbcolor::field::Rationals;
use gbcolor::graph::ColorPartition;
use gbcolor::groebner::{is_groebner_basis, GroebnerBasis};
use gbcolor::poly::TermOrder;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p: ColorPartition = "1,5,8,10;2,6,9,11;3,4,7,12".parse()?;
    let basis = nu_basis(Rationals, &p, 3, true)?;
    println!("reduced basis for {p}:");
    for line in basis.rendered() {
        println!("  {line}");
    }
    println!("is a Gröbner basis: {}", is_groebner_basis(&basis.polys, TermOrder::DEGREVLEX));

    let gb = GroebnerBasis::from_known_basis(basis.polys.clone(), TermOrder::DEGREVLEX);
    if let Some(q) = recognize_nu_shape(&gb, 12, 3) {
        println!("coloring recovered from the basis: {q}");
    }
    println!("{}", basis.to_json());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
