// The Borromean rings: one order 1 tree, and Milnor's triple linking
// number read off the longitudes.
//
// ```text
// cargo run --example borromean
// ```

use nonrep::lie::{eta, lie_normalize};
use nonrep::milnor::{first_nonvanishing_order, parse_longitudes, verify_eta_identity, Verdict};
use nonrep::tree::{forest_to_sum, normalize_lambda, parse_forest, TreeContext};
use nonrep::GroupKind;

const FOREST: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/borromean.forest"));
const LONGITUDES: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/borromean.longitudes"));

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = TreeContext::new(1, 3, GroupKind::Trivial);
    let forest = parse_forest(FOREST, ctx)?;
    let lambda = normalize_lambda(&forest_to_sum(&forest)?)?;
    print!("lambda_1 =\n{lambda}");

    let trees = lambda.to_tree_sum();
    for i in 1..=3 {
        println!("eta^{i} = {}", lie_normalize(&eta(i, &trees)?)?);
    }

    let ls = parse_longitudes(LONGITUDES, 3)?;
    match first_nonvanishing_order(&ls)? {
        Verdict::Order(n, mu) => {
            println!("first nonvanishing order: {n}");
            for (i, e) in &mu {
                println!("  mu^{i} = {e}");
            }
        }
        Verdict::AllVanish => println!("all invariants vanish"),
    }
    let ok = verify_eta_identity(&forest, &ls)?;
    println!("eta^i(lambda) = mu^i for i = 1, 2, 3: {ok:?}");
    assert!(ok.iter().all(|&b| b));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
