// The quadratic order 2 indeterminacy for one sphere of self-intersection
// one. The attained set in `Z⊕Z` is explored on a box of inputs; whether
// it is a subgroup is left open.

use nonrep::indeterminacy::{int2_linear, int2_membership, int2_quadratic_image, IntersectionData};

const DATA: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/quadratic.int"));

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let d = IntersectionData::parse(DATA)?;
    println!("linear part alone:\n{}", int2_linear(&d)?);
    let rep = int2_quadratic_image(&d, 4, 1 << 30)?;
    println!("{rep}");
    for p in [(16, 0), (0, -16), (7, -3), (17, 0)] {
        println!("{p:?}: {}", int2_membership(p, &d, 4, 1 << 30)?.to_string().replace('\n', ", "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
