// A four component link with a single order 2 tree `(((1,2),3),4)`:
// the longitude of the first component is `[x2,[x3,x4]]`.

use nonrep::milnor::{magnus_expand, mu_invariants, parse_longitudes, sublink, verify_eta_identity};
use nonrep::tree::{parse_forest, TreeContext};
use nonrep::GroupKind;

const FOREST: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/bing.forest"));
const LONGITUDES: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/bing.longitudes"));

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let ls = parse_longitudes(LONGITUDES, 4)?;
    println!("{}", ls[0]);
    println!("Magnus expansion to degree 3: {}", magnus_expand(&ls[0], 3, true));
    for (i, e) in mu_invariants(&ls, 2)? {
        println!("mu^{i} = {e}");
    }
    let forest = parse_forest(FOREST, TreeContext::new(2, 4, GroupKind::Trivial))?;
    println!("eta identity per component: {:?}", verify_eta_identity(&forest, &ls)?);

    // Every three component sublink is trivial to this order.
    let sub = sublink(&ls, &[1, 2, 3]);
    println!("sublink 123, order 1: {:?}", mu_invariants(&sub, 1)?.values().all(|e| e.is_zero()));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
