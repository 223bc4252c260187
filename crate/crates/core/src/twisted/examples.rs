//! Bundled exponent tables: ℤ/2×ℤ/2 cocycle candidates and single-entry
//! mutations of valid cocycles.

use super::{cyclic_cocycle, Cocycle3, FiniteGroup};

/// Ids accepted by [`v4_table`]. `a1a2b1c1` is not a cocycle.
pub const V4_TABLE_IDS: [&str; 5] = ["trivial", "a1b1c1", "a1b2c2", "a1b2c1+a2b1c2", "a1a2b1c1"];

pub fn klein_four() -> FiniteGroup {
    FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2))
}

/// Exponent table mod 2 on ℤ/2×ℤ/2, element `(x₁,x₂)` at index `2x₁ + x₂`.
pub fn v4_table(id: &str) -> Option<Cocycle3> {
    let f: fn([usize; 2], [usize; 2], [usize; 2]) -> usize = match id {
        "trivial" => |_, _, _| 0,
        "a1b1c1" => |a, b, c| a[0] * b[0] * c[0],
        "a1b2c2" => |a, b, c| a[0] * b[1] * c[1],
        "a1b2c1+a2b1c2" => |a, b, c| a[0] * b[1] * c[0] + a[1] * b[0] * c[1],
        "a1a2b1c1" => |a, b, c| a[0] * a[1] * b[0] * c[0],
        _ => return None,
    };
    let split = |x: usize| [x / 2, x % 2];
    Some(Cocycle3::from_fn(klein_four(), 2, |a, b, c| f(split(a), split(b), split(c)) as i64))
}

/// Ten tables, each a valid cocycle with one normalized entry shifted.
pub fn mutated_tables() -> Vec<(String, Cocycle3)> {
    let cyclic = [
        (3, 1, [1, 1, 1], 1),
        (3, 1, [1, 2, 1], 1),
        (3, 2, [2, 2, 2], 2),
        (4, 1, [1, 2, 3], 1),
        (4, 1, [3, 3, 3], 2),
        (4, 0, [1, 1, 2], 1),
        (5, 2, [2, 3, 4], 1),
        (6, 1, [5, 5, 5], 3),
        (6, 1, [2, 3, 1], 1),
    ];
    let mut out: Vec<(String, Cocycle3)> = cyclic
        .iter()
        .map(|&(n, k, [a, b, c], shift)| {
            let mut w = cyclic_cocycle(n, k);
            w.set_exp(a, b, c, w.exp(a, b, c) as i64 + shift);
            (format!("zn:{n}:{k} with ω({a},{b},{c}) shifted by {shift}"), w)
        })
        .collect();
    let mut w = v4_table("a1b2c2").expect("bundled");
    w.set_exp(3, 2, 1, w.exp(3, 2, 1) as i64 + 1);
    out.push(("v4:a1b2c2 with ω(3,2,1) shifted by 1".to_string(), w));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_v4_tables_are_gated() {
        for id in V4_TABLE_IDS {
            let valid = v4_table(id).unwrap().check().is_valid();
            assert_eq!(valid, id != "a1a2b1c1", "{id}");
        }
        assert!(v4_table("nope").is_none());
    }

    #[test]
    fn mutations_keep_normalization_and_break_the_cocycle_condition() {
        let tables = mutated_tables();
        assert_eq!(tables.len(), 10);
        for (name, w) in tables {
            let r = w.check();
            assert_eq!(r.normalization_failures, 0, "{name}");
            assert!(r.cocycle_failures > 0 && !r.cocycle_examples.is_empty(), "{name}");
        }
    }
}
