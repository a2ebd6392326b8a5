//! Ready-made problems used by the tests, the acceptance suite and the docs.

use crate::arith::{from_int, Rational};
use crate::recurrence::{Axis, DifferenceEquation2, Line, Problem};

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| from_int(x)).collect()
}

fn equation(corner: (u32, u32), coeffs: &[((u32, u32), i64)]) -> DifferenceEquation2 {
    DifferenceEquation2::new(corner, coeffs.iter().map(|&(a, c)| (a, from_int(c))))
        .expect("sample coefficients lie in the box")
}

/// `f(x+1, y+1) - f(x, y+1) - f(x, y) = 0` with `f(x, 0) = 1` and
/// `f(0, y) = 0` for `y >= 1`; the solution is `C(x, y)`.
pub fn binomial() -> Problem {
    Problem::new(
        equation((1, 1), &[((1, 1), 1), ((0, 1), -1), ((0, 0), -1)]),
        vec![
            Line::known(Axis::VaryX2, 0, ints(&[0, 1]), ints(&[1])),
            Line::known(Axis::VaryX1, 0, ints(&[-1, 1]), ints(&[1])),
        ],
    )
}

/// Bit strings of length `x` starting with 0 and containing `y` singles
/// (runs of length one).
pub fn bloom_singles() -> Problem {
    Problem::new(bloom_equation(), bloom_lines([Some(1), Some(0), Some(1), Some(1), Some(0)]))
}

/// [`bloom_singles`] with `phi(0, 0)` and `phi(1, 0)` left as holes in one
/// of the two lines through each point.
pub fn bloom_singles_with_holes() -> Problem {
    Problem::new(bloom_equation(), bloom_lines([Some(1), None, Some(1), None, Some(0)]))
}

fn bloom_equation() -> DifferenceEquation2 {
    equation(
        (2, 1),
        &[((2, 1), 1), ((1, 1), -1), ((1, 0), -1), ((0, 1), -1), ((0, 0), 1)],
    )
}

/// Slots in order: column 0 `[phi(0,0)]`, column 1 `[phi(1,0), phi(1,1)]`,
/// row 0 `[phi(0,0), phi(1,0)]`.
fn bloom_lines(s: [Option<i64>; 5]) -> Vec<Line> {
    let s: Vec<Option<Rational>> = s.iter().map(|v| v.map(from_int)).collect();
    vec![
        Line::new(Axis::VaryX2, 0, ints(&[0, 1]), vec![s[0].clone()]),
        Line::new(Axis::VaryX2, 1, ints(&[0, 0, 1]), vec![s[1].clone(), s[2].clone()]),
        Line::new(Axis::VaryX1, 0, ints(&[-1, -1, 1]), vec![s[3].clone(), s[4].clone()]),
    ]
}

/// `r(x, y)` for `0 <= x, y <= 6` as printed for the singles problem, top
/// row first (`y = 6`), with `r(0, 0)` in the lower-left corner.
pub const BLOOM_TABLE_ROWS_TOP_DOWN: [[i64; 7]; 7] = [
    [0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 1, 0, 5],
    [0, 0, 0, 1, 0, 4, 4],
    [0, 0, 1, 0, 3, 3, 9],
    [0, 1, 0, 2, 2, 5, 8],
    [1, 0, 1, 1, 2, 3, 5],
];
