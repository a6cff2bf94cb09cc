// The maps `η^i` from trees to Lie brackets, and the identity
// `Σ_i (η^i)⁻¹ ∘ η^i = (n+2)·id` on `Λ_n(m)`.

use nonrep::lie::{eta, eta_left_inverse, lie_normalize};
use nonrep::tree::{basis_indices, normalize_lambda, LambdaVector, TreeContext};
use nonrep::GroupKind;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (n, m) = (2, 5);
    let ctx = TreeContext::new(n, m, GroupKind::Trivial);
    let idx = basis_indices(n, m)[3].clone();
    let t = LambdaVector::basis(ctx, idx.clone());
    println!("t = {idx}");
    let mut total = LambdaVector::zero(ctx);
    for i in 1..=m {
        let a = eta(i, &t.to_tree_sum())?;
        if !a.is_zero() {
            println!("  eta^{i}(t) = {}", lie_normalize(&a)?);
        }
        total = total.add(&normalize_lambda(&eta_left_inverse(i, &a, ctx)?)?);
    }
    print!("sum of left inverses:\n{total}");
    assert_eq!(total, t.scaled(n as i64 + 2));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
