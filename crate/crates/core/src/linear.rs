//! Helpers for sparse integer combinations stored in ordered maps.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

/// Adds `coeff` to the entry for `key`, dropping it if it cancels to zero.
pub fn add_coeff<K: Ord>(map: &mut BTreeMap<K, i64>, key: K, coeff: i64) {
    if coeff == 0 {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(coeff);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += coeff;
            if *o.get() == 0 {
                o.remove();
            }
        }
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i64
}

/// gcd of all values; 0 for an empty or all-zero input.
pub fn gcd_all(values: impl IntoIterator<Item = i64>) -> i64 {
    values.into_iter().fold(0, gcd)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_key() {
        let mut m = BTreeMap::new();
        add_coeff(&mut m, "a", 3);
        add_coeff(&mut m, "a", -3);
        assert!(m.is_empty());
    }

    #[test]
    fn gcds() {
        assert_eq!(gcd_all([4, 6]), 2);
        assert_eq!(gcd_all([3, 5]), 1);
        assert_eq!(gcd_all([0, 0]), 0);
        assert_eq!(gcd_all([-4, 0]), 4);
    }
}
