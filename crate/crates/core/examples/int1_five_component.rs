// Order 1 indeterminacy for four spheres whose triples all vanish while
// the quadruple does not.

use nonrep::indeterminacy::{int1_quadruple, int1_triple, IntersectionData};
use nonrep::milnor::{first_nonvanishing_order, parse_longitudes, sublink, Verdict};

const DATA: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/five_component.int"));
const LONGITUDES: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/five_component.longitudes"));
const BORROMEAN: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/borromean.int"));
const BORROMEAN_DUAL: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/borromean_dual.int"));

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("Borromean X_L: {}", int1_triple(&IntersectionData::parse(BORROMEAN)?).to_string().replace('\n', ", "));
    println!("with a dual sphere: {}", int1_triple(&IntersectionData::parse(BORROMEAN_DUAL)?).to_string().replace('\n', ", "));

    let img = int1_quadruple(&IntersectionData::parse(DATA)?)?;
    println!("{img}");
    let (t3, t4) = ([1, 0, 0, 0], [0, 1, 0, 0]);
    println!("(1,2),3 + (1,2),4 in INT_1: {}", img.image.contains(&[1, 1, 0, 0]));
    println!("(1,2),3 in INT_1: {}", img.image.contains(&t3));
    println!("(1,2),4 in INT_1: {}", img.image.contains(&t4));

    let ls = parse_longitudes(LONGITUDES, 5)?;
    let split = sublink(&ls, &[1, 2, 4]);
    println!("sublink 124 all vanish: {}", first_nonvanishing_order(&split)? == Verdict::AllVanish);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
