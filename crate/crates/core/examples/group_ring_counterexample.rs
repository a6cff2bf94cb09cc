// Three parallel copies of a sphere in a manifold with `π_1 = Z`: the
// six relabelings of `Y(e,g,h)` give a nonzero element of `Z[Z×Z]` as soon
// as `g` and `h` are distinct and nontrivial.

use nonrep::tree::{forest_to_sum, normalize_lambda, parse_forest, TreeContext};
use nonrep::GroupKind;

fn forest(g: i64, h: i64) -> String {
    let w = |k: i64| if k == 0 { "e".to_string() } else { format!("x1^{k}") };
    let mut s = String::new();
    for (a, b, c) in [(1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)] {
        s.push_str(&format!("+ (({a},{b}[{}]),{c}[{}])\n", w(g), w(h)));
    }
    s
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = TreeContext::new(1, 3, GroupKind::FreeAbelian(1));
    for (g, h) in [(1, 2), (2, 1), (1, 1), (0, 3), (3, -3)] {
        let f = parse_forest(&forest(g, h), ctx)?;
        let v = normalize_lambda(&forest_to_sum(&f)?)?;
        let shown = if v.is_zero() { "0\n".to_string() } else { v.to_string() };
        print!("g = x^{g}, h = x^{h}: {shown}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
