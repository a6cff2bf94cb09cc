// `Λ_2(4)` has rank two. Every order 2 tree on four labels is a
// combination of the simple trees `t1 = (1,(2,(3,4)))` and
// `t2 = (1,(3,(2,4)))`.

use nonrep::tree::{basis_indices, lambda_rank, normalize_lambda, parse_tree, TreeContext, TreeSum};
use nonrep::GroupKind;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("rank of Lambda_2(4) = {}", lambda_rank(2, 4));
    for b in basis_indices(2, 4) {
        println!("  basis tree {b}");
    }
    let ctx = TreeContext::new(2, 4, GroupKind::Trivial);
    for s in ["(((1,2),3),4)", "((1,2),(3,4))", "((1,3),(2,4))", "((1,4),(2,3))", "((4,1),(3,2))"] {
        let t = parse_tree(s, GroupKind::Trivial)?;
        let v = normalize_lambda(&TreeSum::from_terms(ctx, [(t, 1)])?)?;
        let line: Vec<String> = v.to_string().lines().map(str::to_string).collect();
        println!("{s:>16} = {}", line.join(" + "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
