//! Seeded generator of valid, resolvable problems.
//!
//! Lines along one axis are generated first with arbitrary orders; they fix
//! the block `[0, m1) x [0, m2)`. Lines along the other axis get an order at
//! least as large as the block width, copy the block values into their first
//! slots (some left as holes) and fill the remaining slots freely, so the
//! overlap is consistent by construction.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{from_frac, Rational};
use crate::recurrence::{extend_sequence, Axis, DifferenceEquation2, Line, Problem};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Upper bound for `m1` and `m2`.
    pub max_m: u32,
    /// Upper bound for every line recurrence order.
    pub max_order: u32,
    /// Upper bound for numerators and denominators.
    pub max_coeff: i64,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            max_m: 3,
            max_order: 3,
            max_coeff: 9,
        }
    }
}

impl Bounds {
    pub const LIMIT_M: u32 = 4;
    pub const LIMIT_ORDER: u32 = 4;
    pub const LIMIT_COEFF: i64 = 9;

    pub fn check(&self) -> Result<(), String> {
        if !(1..=Self::LIMIT_M).contains(&self.max_m) {
            return Err(format!("max-m must be in 1..={}", Self::LIMIT_M));
        }
        if !(1..=Self::LIMIT_ORDER).contains(&self.max_order) {
            return Err(format!("max-order must be in 1..={}", Self::LIMIT_ORDER));
        }
        if !(1..=Self::LIMIT_COEFF).contains(&self.max_coeff) {
            return Err(format!("max-coeff must be in 1..={}", Self::LIMIT_COEFF));
        }
        Ok(())
    }
}

fn rational(rng: &mut ChaCha8Rng, max: i64, nonzero: bool) -> Rational {
    loop {
        let n = rng.gen_range(-max..=max);
        if nonzero && n == 0 {
            continue;
        }
        let d = if rng.gen_bool(0.6) { 1 } else { rng.gen_range(1..=max) };
        return from_frac(n, d);
    }
}

fn recurrence(rng: &mut ChaCha8Rng, order: usize, max: i64) -> Vec<Rational> {
    let mut c: Vec<Rational> = (0..order).map(|_| rational(rng, max, false)).collect();
    c.push(rational(rng, max, true));
    c
}

/// Deterministic for a fixed `seed` and `bounds`. Corner sizes are capped by
/// `max_order` so the second family of lines can cover the block.
pub fn random_problem(seed: u64, bounds: Bounds) -> Problem {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cap = bounds.max_m.min(bounds.max_order);
    let m = (rng.gen_range(1..=cap), rng.gen_range(1..=cap));
    let max = bounds.max_coeff;

    let mut coeffs = Vec::new();
    for a1 in 0..=m.0 {
        for a2 in 0..=m.1 {
            let c = if (a1, a2) == m {
                rational(&mut rng, max, true)
            } else if rng.gen_bool(0.6) {
                rational(&mut rng, max, false)
            } else {
                Rational::zero()
            };
            coeffs.push(((a1, a2), c));
        }
    }
    let equation = DifferenceEquation2::new(m, coeffs).expect("indices inside the box");

    let columns_first = rng.gen_bool(0.5);
    let (first_axis, first_count, second_count) = if columns_first {
        (Axis::VaryX2, m.0, m.1)
    } else {
        (Axis::VaryX1, m.1, m.0)
    };
    let small_values = max.min(5);

    let mut lines = Vec::new();
    // block[k][j]: value of first-family line k at index j < second_count.
    let mut block = Vec::new();
    for offset in 0..first_count {
        let order = rng.gen_range(1..=bounds.max_order) as usize;
        let c = recurrence(&mut rng, order, max);
        let seg: Vec<Rational> = (0..order).map(|_| rational(&mut rng, small_values, false)).collect();
        block.push(extend_sequence(&c, &seg, second_count as usize));
        lines.push(Line::known(first_axis, offset, c, seg));
    }
    for offset in 0..second_count {
        let order = rng.gen_range(first_count..=bounds.max_order.max(first_count)) as usize;
        let c = recurrence(&mut rng, order, max);
        let initial = (0..order)
            .map(|i| {
                if i < first_count as usize {
                    let v = block[i][offset as usize].clone();
                    if rng.gen_bool(0.5) {
                        None
                    } else {
                        Some(v)
                    }
                } else {
                    Some(rational(&mut rng, small_values, false))
                }
            })
            .collect();
        lines.push(Line::new(first_axis.transverse(), offset, c, initial));
    }
    Problem::new(equation, lines)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        for seed in 0..5 {
            assert_eq!(random_problem(seed, Bounds::default()), random_problem(seed, Bounds::default()));
        }
        assert_ne!(random_problem(1, Bounds::default()), random_problem(2, Bounds::default()));
    }

    #[test]
    fn always_resolvable() {
        let b = Bounds {
            max_m: 4,
            max_order: 4,
            max_coeff: 9,
        };
        for seed in 0..200 {
            let p = random_problem(seed, b);
            p.resolve().unwrap_or_else(|e| panic!("seed {seed}: {e}"));
            let (m1, m2) = p.corner();
            assert!(m1 <= 4 && m2 <= 4);
            assert!(p.lines.iter().all(|l| l.recurrence.order() <= 4));
        }
    }

    #[test]
    fn bounds_checked() {
        assert!(Bounds::default().check().is_ok());
        assert!(Bounds { max_m: 5, ..Bounds::default() }.check().is_err());
        assert!(Bounds { max_order: 0, ..Bounds::default() }.check().is_err());
        assert!(Bounds { max_coeff: 10, ..Bounds::default() }.check().is_err());
    }
}
