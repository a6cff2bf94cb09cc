// Parallel copies, band sums, orientation reversal and deletion acting on
// tree sums, and the canceling-parallels identity.

use nonrep::tree::{op_delete, op_parallel, op_reverse, op_sum, parse_tree_sum, TreeContext};
use nonrep::GroupKind;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = TreeContext::new(2, 4, GroupKind::Free(2));
    let s = parse_tree_sum("1 (((1,2[x1]),3),4)\n-2 ((1,3),(2[x2^-1],4))\n", ctx)?;
    print!("s =\n{s}");

    let d = op_parallel(&s, 2)?;
    print!("delta_2(s), a fifth label for the parallel copy:\n{d}");
    print!("e_5(delta_2(s)):\n{}", op_delete(&d, 5)?);
    print!("s_4(s):\n{}", op_reverse(&s, 4)?);

    // Two parallel copies of A_2, one reversed, banded back into A_2.
    let m = ctx.labels;
    let twice = op_parallel(&op_parallel(&s, 2)?, m + 1)?;
    let flipped = op_reverse(&twice, m + 1)?;
    let back = op_sum(&op_sum(&flipped, m + 2, m + 1)?, m + 1, 2)?;
    let back = back.with_ctx(ctx)?;
    println!("canceling parallels give back s: {}", back == s);
    assert_eq!(back, s);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
