// Sums, intersections and colon ideals on hand-written generators.

use gbcolor::field::{PrimeField, Rationals};
use gbcolor::ideal::{colon_with, ideals_equal, intersect_with, Ideal};
use gbcolor::poly::{OrderKind, PolyRing, TermOrder};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let ring = PolyRing::new(Rationals, 2, TermOrder::DEGREVLEX);
    let i = Ideal::new(ring.clone(), vec![ring.parse("x1^2 - 1")?, ring.parse("x2 - x1")?]);
    let j = Ideal::new(ring.clone(), vec![ring.parse("x1 - 1")?, ring.parse("x2^2 - 1")?]);
    println!("I = {i}, dim {}", i.quotient_dimension(TermOrder::DEGREVLEX)?);
    println!("J = {j}, dim {}", j.quotient_dimension(TermOrder::DEGREVLEX)?);

    let meet = intersect_with(&i, &j, OrderKind::Lex)?;
    println!("I ∩ J has dim {}", meet.quotient_dimension(TermOrder::LEX)?);
    let colon = colon_with(&i, &j, OrderKind::DegRevLex)?;
    println!("I : J = {colon}");
    let sum = i.sum(&j)?;
    let sum_basis: Vec<String> =
        sum.groebner_basis(TermOrder::DEGREVLEX).polys().iter().map(|g| g.to_string()).collect();
    println!("I + J = ⟨{}⟩", sum_basis.join(", "));
    println!("x1*x2 - 1 ∈ I: {}", i.contains(&ring.parse("x1*x2 - 1")?, TermOrder::LEX)?);

    // Over GF(2) the two points (1,1) and (-1,-1) coincide.
    let f2 = PolyRing::new(PrimeField::new(2)?, 2, TermOrder::DEGREVLEX);
    let i2 = Ideal::new(f2.clone(), vec![f2.parse("x1^2 - 1")?, f2.parse("x2 - x1")?]);
    let double = Ideal::new(f2.clone(), vec![f2.parse("x1^2 + 1")?, f2.parse("x1 + x2")?]);
    println!(
        "over GF(2): dim {}, same as ⟨(x1+1)^2, x1+x2⟩: {}",
        i2.quotient_dimension(TermOrder::LEX)?,
        ideals_equal(&i2, &double, TermOrder::LEX)?
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
