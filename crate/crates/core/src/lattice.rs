//! Subgroups of `Z^d`: Hermite normal form, membership with certificates,
//! and Smith invariant factors of the quotient.
//!
//! Arithmetic is done in `i128` and panics on overflow rather than wrapping.

use std::fmt;

type Row = Vec<i128>;

fn add_mul(dst: &mut [i128], src: &[i128], k: i128) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d = s.checked_mul(k).and_then(|x| d.checked_add(x)).expect("lattice arithmetic overflow");
    }
}

fn neg(r: &mut [i128]) {
    for x in r {
        *x = -*x;
    }
}

/// Row Hermite normal form of `a` together with a unimodular `u` such that
/// `u·a` is the returned matrix (zero rows last).
fn hnf_with_transform(a: &[Row], cols: usize) -> (Vec<Row>, Vec<Row>) {
    let n = a.len();
    let mut h: Vec<Row> = a.to_vec();
    let mut u: Vec<Row> = (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect();
    let mut p = 0;
    for c in 0..cols {
        if p == n {
            break;
        }
        while let Some(best) = (p..n).filter(|&i| h[i][c] != 0).min_by_key(|&i| h[i][c].abs()) {
            h.swap(p, best);
            u.swap(p, best);
            let mut done = true;
            for i in p + 1..n {
                if h[i][c] != 0 {
                    let q = h[i][c].div_euclid(h[p][c]);
                    let (hp, up) = (h[p].clone(), u[p].clone());
                    add_mul(&mut h[i], &hp, -q);
                    add_mul(&mut u[i], &up, -q);
                    done &= h[i][c] == 0;
                }
            }
            if done {
                break;
            }
        }
        if h[p][c] == 0 {
            continue;
        }
        if h[p][c] < 0 {
            neg(&mut h[p]);
            neg(&mut u[p]);
        }
        for i in 0..p {
            let q = h[i][c].div_euclid(h[p][c]);
            if q != 0 {
                let (hp, up) = (h[p].clone(), u[p].clone());
                add_mul(&mut h[i], &hp, -q);
                add_mul(&mut u[i], &up, -q);
            }
        }
        p += 1;
    }
    (h, u)
}

/// Diagonal of the Smith normal form, nonzero entries only, each dividing
/// the next.
pub fn smith_diagonal(a: &[Vec<i64>], cols: usize) -> Vec<i64> {
    let mut m: Vec<Row> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let rows = m.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| m[i][j] != 0)
            .min_by_key(|&(i, j)| m[i][j].abs());
        let Some((pi, pj)) = pivot else { break };
        m.swap(t, pi);
        for r in m.iter_mut() {
            r.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..rows {
            let q = m[i][t].div_euclid(m[t][t]);
            let mt = m[t].clone();
            add_mul(&mut m[i], &mt, -q);
            clean &= m[i][t] == 0;
        }
        for j in t + 1..cols {
            let q = m[t][j].div_euclid(m[t][t]);
            if q != 0 {
                for r in m.iter_mut() {
                    r[j] = r[t].checked_mul(q).and_then(|x| r[j].checked_sub(x)).expect("lattice arithmetic overflow");
                }
            }
            clean &= m[t][j] == 0;
        }
        if !clean {
            continue;
        }
        let d = m[t][t];
        if let Some(i) = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| m[i][j] % d != 0)) {
            let mi = m[i].clone();
            add_mul(&mut m[t], &mi, 1);
            continue;
        }
        diag.push(d.abs() as i64);
        t += 1;
    }
    diag
}

/// A subgroup of `Z^dim` presented by its Hermite normal form basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSubgroup {
    pub dim: usize,
    pub basis: Vec<Vec<i64>>,
    /// Invariant factors of `Z^dim / subgroup`, length `dim`: the Smith
    /// diagonal followed by zeros, `0` standing for a free summand `Z`.
    pub invariant_factors: Vec<i64>,
}

impl LatticeSubgroup {
    pub fn from_generators(dim: usize, gens: &[Vec<i64>]) -> Self {
        assert!(gens.iter().all(|g| g.len() == dim), "generator length");
        let a: Vec<Row> = gens.iter().map(|g| g.iter().map(|&x| x as i128).collect()).collect();
        let (h, _) = hnf_with_transform(&a, dim);
        let basis: Vec<Vec<i64>> = h
            .into_iter()
            .filter(|r| r.iter().any(|&x| x != 0))
            .map(|r| r.into_iter().map(|x| i64::try_from(x).expect("HNF entry fits i64")).collect())
            .collect();
        let mut invariant_factors = smith_diagonal(&basis, dim);
        invariant_factors.resize(dim, 0);
        LatticeSubgroup { dim, basis, invariant_factors }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        solve(&self.basis, v).is_some()
    }

    /// The quotient as a product of cyclic groups, trivial factors omitted.
    pub fn quotient_description(&self) -> String {
        let parts: Vec<String> = self
            .invariant_factors
            .iter()
            .filter(|&&d| d != 1)
            .map(|&d| if d == 0 { "Z".to_string() } else { format!("Z/{d}") })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for LatticeSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "basis:")?;
        for r in &self.basis {
            let s: Vec<String> = r.iter().map(i64::to_string).collect();
            writeln!(f, "  ({})", s.join(", "))?;
        }
        let fs: Vec<String> = self.invariant_factors.iter().map(i64::to_string).collect();
        writeln!(f, "invariant factors: ({})", fs.join(", "))?;
        write!(f, "quotient: {}", self.quotient_description())
    }
}

/// Integer coefficients `x` with `Σ x_k·gens_k = v`, if any.
pub fn solve(gens: &[Vec<i64>], v: &[i64]) -> Option<Vec<i64>> {
    let dim = v.len();
    let a: Vec<Row> = gens.iter().map(|g| g.iter().map(|&x| x as i128).collect()).collect();
    let (h, u) = hnf_with_transform(&a, dim);
    let mut rest: Row = v.iter().map(|&x| x as i128).collect();
    let mut coef = vec![0i128; gens.len()];
    let mut p = 0;
    for c in 0..dim {
        if p < h.len() && h[p][c] != 0 && h[p][..c].iter().all(|&x| x == 0) {
            if rest[c] % h[p][c] != 0 {
                return None;
            }
            let q = rest[c] / h[p][c];
            add_mul(&mut rest, &h[p], -q);
            add_mul(&mut coef, &u[p], q);
            p += 1;
        } else if rest[c] != 0 {
            return None;
        }
    }
    coef.into_iter().map(|x| i64::try_from(x).ok()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hnf_is_canonical() {
        let a = LatticeSubgroup::from_generators(2, &[vec![2, 4], vec![6, 0]]);
        let b = LatticeSubgroup::from_generators(2, &[vec![8, 4], vec![2, 4], vec![0, 12]]);
        assert_eq!(a.basis, vec![vec![2, 4], vec![0, 12]]);
        assert_eq!(a, b);
        assert_eq!(a.invariant_factors, vec![2, 12]);
    }

    #[test]
    fn quotients() {
        let z = LatticeSubgroup::from_generators(4, &[]);
        assert_eq!(z.invariant_factors, vec![0, 0, 0, 0]);
        assert_eq!(z.quotient_description(), "Z + Z + Z + Z");
        let s = LatticeSubgroup::from_generators(4, &[vec![1, 1, 0, 0]]);
        assert_eq!(s.invariant_factors, vec![1, 0, 0, 0]);
        assert!(s.contains(&[3, 3, 0, 0]));
        assert!(!s.contains(&[1, 0, 0, 0]));
    }

    #[test]
    fn solve_gives_certificates() {
        let gens = vec![vec![3, 1], vec![5, 2]];
        let x = solve(&gens, &[1, 0]).unwrap();
        assert_eq!(x[0] * 3 + x[1] * 5, 1);
        assert_eq!(x[0] + x[1] * 2, 0);
        assert_eq!(solve(&[vec![2, 0]], &[1, 0]), None);
        assert_eq!(solve(&[], &[0, 0]), Some(vec![]));
    }

    #[test]
    fn smith_fixes_divisibility() {
        assert_eq!(smith_diagonal(&[vec![2, 0], vec![0, 3]], 2), vec![1, 6]);
        assert_eq!(smith_diagonal(&[vec![4, 6]], 2), vec![2]);
    }
}
