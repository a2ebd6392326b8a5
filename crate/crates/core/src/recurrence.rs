//! Problem data: the two-dimensional equation, the one-dimensional line
//! recurrences that generate the initial data on the strips, and the
//! resolution of initial segments with holes.
//!
//! A line with [`Axis::VaryX2`] and offset `k` carries `phi(k, y)` for
//! `y >= 0` (one per `k < m1`); a line with [`Axis::VaryX1`] and offset `k`
//! carries `phi(x, k)` (one per `k < m2`). Line coefficients are listed in
//! increasing index order: `c0*s(i) + c1*s(i+1) + ... + cmu*s(i+mu) = 0`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::arith::{Rational, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    /// `x1` varies, `x2` is fixed at the line offset.
    VaryX1,
    /// `x2` varies, `x1` is fixed at the line offset.
    VaryX2,
}

impl Axis {
    /// Grid point at position `index` along a line of this axis.
    pub fn point(self, offset: u32, index: u32) -> (u32, u32) {
        match self {
            Axis::VaryX1 => (index, offset),
            Axis::VaryX2 => (offset, index),
        }
    }

    pub fn transverse(self) -> Axis {
        match self {
            Axis::VaryX1 => Axis::VaryX2,
            Axis::VaryX2 => Axis::VaryX1,
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::VaryX1 => f.write_str("x2-fixed"),
            Axis::VaryX2 => f.write_str("x1-fixed"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProblemError {
    #[error("dimension m{axis} is zero; both corner coordinates must be positive")]
    DegenerateDimension { axis: u8 },
    #[error("corner coefficient c_m at {corner:?} is zero or absent")]
    ZeroCornerCoefficient { corner: (u32, u32) },
    #[error("coefficient index {alpha:?} lies outside the box [0, {corner:?}]")]
    CoefficientOutsideBox { alpha: (u32, u32), corner: (u32, u32) },
    #[error("missing {axis} line with offset {offset}")]
    MissingLine { axis: Axis, offset: u32 },
    #[error("{axis} line with offset {offset} given more than once")]
    DuplicateLine { axis: Axis, offset: u32 },
    #[error("{axis} line offset {offset} is not below {limit}")]
    LineOffsetOutOfRange { axis: Axis, offset: u32, limit: u32 },
    #[error("{axis} line with offset {offset} needs at least two coefficients")]
    LineOrderTooSmall { axis: Axis, offset: u32 },
    #[error("{axis} line with offset {offset} has zero leading coefficient")]
    ZeroLeadingCoefficient { axis: Axis, offset: u32 },
    #[error("{axis} line with offset {offset} has {found} initial slots, expected {expected}")]
    SlotCountMismatch { axis: Axis, offset: u32, expected: usize, found: usize },
    #[error("initial data underdetermined; unresolved points {points:?}")]
    Underdetermined { points: Vec<(u32, u32)> },
    #[error("inconsistent initial data at {point:?}: x1-fixed line gives {column}, x2-fixed line gives {row}")]
    Inconsistent { point: (u32, u32), column: Rational, row: Rational },
    #[error("point {point:?} is not in the initial data set")]
    PointNotInX0 { point: (u32, u32) },
}

impl ProblemError {
    /// Well-formed input whose initial data cannot be resolved.
    pub fn is_data_conflict(&self) -> bool {
        matches!(self, ProblemError::Underdetermined { .. } | ProblemError::Inconsistent { .. })
    }
}

/// `sum c_alpha f(x + alpha) = 0` with every `alpha` inside the box
/// `[0, m]`. Absent coefficients are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceEquation2 {
    corner: (u32, u32),
    coeffs: BTreeMap<(u32, u32), Rational>,
}

impl DifferenceEquation2 {
    pub fn new(
        corner: (u32, u32),
        coeffs: impl IntoIterator<Item = ((u32, u32), Rational)>,
    ) -> Result<Self, ProblemError> {
        let mut map = BTreeMap::new();
        for (alpha, c) in coeffs {
            if alpha.0 > corner.0 || alpha.1 > corner.1 {
                return Err(ProblemError::CoefficientOutsideBox { alpha, corner });
            }
            if !c.is_zero() {
                let e = map.entry(alpha).or_insert_with(Rational::zero);
                *e += c;
            }
        }
        map.retain(|_, c| !c.is_zero());
        Ok(Self { corner, coeffs: map })
    }

    pub fn corner(&self) -> (u32, u32) {
        self.corner
    }

    pub fn coeff(&self, alpha: (u32, u32)) -> Rational {
        self.coeffs.get(&alpha).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero coefficients.
    pub fn coeffs(&self) -> impl Iterator<Item = ((u32, u32), &Rational)> + '_ {
        self.coeffs.iter().map(|(a, c)| (*a, c))
    }

    pub fn scaled(&self, s: &Rational) -> Self {
        Self {
            corner: self.corner,
            coeffs: self.coeffs.iter().map(|(a, c)| (*a, c * s)).collect(),
        }
    }

    pub fn validate(&self) -> Result<(), ProblemError> {
        if self.corner.0 == 0 {
            return Err(ProblemError::DegenerateDimension { axis: 1 });
        }
        if self.corner.1 == 0 {
            return Err(ProblemError::DegenerateDimension { axis: 2 });
        }
        if self.coeff(self.corner).is_zero() {
            return Err(ProblemError::ZeroCornerCoefficient { corner: self.corner });
        }
        Ok(())
    }
}

/// One-dimensional recurrence along a coordinate line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineRecurrence {
    pub axis: Axis,
    pub offset: u32,
    /// `c0, ..., cmu` in increasing order.
    pub coeffs: Vec<Rational>,
}

impl LineRecurrence {
    pub fn new(axis: Axis, offset: u32, coeffs: Vec<Rational>) -> Self {
        Self { axis, offset, coeffs }
    }

    /// Recurrence order `mu`.
    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn extend(&self, segment: &[Rational], upto: usize) -> Vec<Rational> {
        extend_sequence(&self.coeffs, segment, upto)
    }
}

/// First `upto` terms of the sequence with `coeffs[0] s(i) + ... +
/// coeffs[mu] s(i + mu) = 0` and initial terms `segment`.
///
/// Requires `segment.len() == coeffs.len() - 1` and a nonzero last
/// coefficient.
pub fn extend_sequence<T: Scalar>(coeffs: &[T], segment: &[T], upto: usize) -> Vec<T> {
    let mu = coeffs.len() - 1;
    assert_eq!(segment.len(), mu, "segment length must equal the recurrence order");
    let lead = coeffs[mu].clone();
    let mut out: Vec<T> = segment.iter().take(upto).cloned().collect();
    while out.len() < upto {
        let i = out.len();
        let acc = (0..mu).fold(T::zero(), |acc, j| acc + coeffs[j].clone() * out[i - mu + j].clone());
        out.push(-(acc / lead.clone()));
    }
    out
}

/// A line recurrence together with its initial slots; `None` marks a value
/// to be derived from the transverse line through that point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub recurrence: LineRecurrence,
    pub initial: Vec<Option<Rational>>,
}

impl Line {
    pub fn new(axis: Axis, offset: u32, coeffs: Vec<Rational>, initial: Vec<Option<Rational>>) -> Self {
        Self {
            recurrence: LineRecurrence::new(axis, offset, coeffs),
            initial,
        }
    }

    /// Line with every initial slot given.
    pub fn known(axis: Axis, offset: u32, coeffs: Vec<Rational>, initial: Vec<Rational>) -> Self {
        Self::new(axis, offset, coeffs, initial.into_iter().map(Some).collect())
    }
}

/// The initial value problem: equation plus strip data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem {
    pub equation: DifferenceEquation2,
    pub lines: Vec<Line>,
}

impl Problem {
    pub fn new(equation: DifferenceEquation2, lines: Vec<Line>) -> Self {
        Self { equation, lines }
    }

    pub fn corner(&self) -> (u32, u32) {
        self.equation.corner()
    }

    pub fn validate(&self) -> Result<(), ProblemError> {
        self.equation.validate()?;
        let (m1, m2) = self.corner();
        let mut seen = BTreeMap::new();
        for line in &self.lines {
            let rec = &line.recurrence;
            let (axis, offset) = (rec.axis, rec.offset);
            let limit = match axis {
                Axis::VaryX2 => m1,
                Axis::VaryX1 => m2,
            };
            if offset >= limit {
                return Err(ProblemError::LineOffsetOutOfRange { axis, offset, limit });
            }
            if seen.insert((axis, offset), ()).is_some() {
                return Err(ProblemError::DuplicateLine { axis, offset });
            }
            if rec.coeffs.len() < 2 {
                return Err(ProblemError::LineOrderTooSmall { axis, offset });
            }
            if rec.coeffs.last().is_some_and(|c| c.is_zero()) {
                return Err(ProblemError::ZeroLeadingCoefficient { axis, offset });
            }
            if line.initial.len() != rec.order() {
                return Err(ProblemError::SlotCountMismatch {
                    axis,
                    offset,
                    expected: rec.order(),
                    found: line.initial.len(),
                });
            }
        }
        for (axis, limit) in [(Axis::VaryX2, m1), (Axis::VaryX1, m2)] {
            for offset in 0..limit {
                if !seen.contains_key(&(axis, offset)) {
                    return Err(ProblemError::MissingLine { axis, offset });
                }
            }
        }
        Ok(())
    }

    fn line_index(&self, axis: Axis, offset: u32) -> Option<usize> {
        self.lines
            .iter()
            .position(|l| l.recurrence.axis == axis && l.recurrence.offset == offset)
    }

    /// Validates, fills every hole and checks that row and column data agree
    /// on the block `[0, m1) x [0, m2)`.
    pub fn resolve(&self) -> Result<ResolvedInitialData, ProblemError> {
        self.validate()?;
        let (m1, m2) = self.corner();
        let mut slots: Vec<Vec<Option<Rational>>> = self.lines.iter().map(|l| l.initial.clone()).collect();

        let total: usize = slots.iter().map(Vec::len).sum();
        let max_sweeps = (total * total).max(1);
        for _ in 0..max_sweeps {
            let mut progress = false;
            for li in 0..self.lines.len() {
                let rec = &self.lines[li].recurrence;
                for i in 0..slots[li].len() {
                    if slots[li][i].is_some() {
                        continue;
                    }
                    let (x1, x2) = rec.axis.point(rec.offset, i as u32);
                    let (t_offset, t_index) = match rec.axis {
                        Axis::VaryX1 => (x1, x2),
                        Axis::VaryX2 => (x2, x1),
                    };
                    let Some(ti) = self.line_index(rec.axis.transverse(), t_offset) else {
                        continue;
                    };
                    if let Some(v) = known_value(&self.lines[ti].recurrence, &slots[ti], t_index as usize) {
                        slots[li][i] = Some(v);
                        progress = true;
                    }
                }
            }
            if !progress {
                break;
            }
        }

        let mut holes = Vec::new();
        for (line, s) in self.lines.iter().zip(&slots) {
            for (i, v) in s.iter().enumerate() {
                if v.is_none() {
                    holes.push(line.recurrence.axis.point(line.recurrence.offset, i as u32));
                }
            }
        }
        if !holes.is_empty() {
            holes.sort_unstable();
            holes.dedup();
            return Err(ProblemError::Underdetermined { points: holes });
        }

        let mut columns = vec![None; m1 as usize];
        let mut rows = vec![None; m2 as usize];
        for (line, s) in self.lines.iter().zip(slots) {
            let rec = line.recurrence.clone();
            let resolved = ResolvedLine {
                segment: s.into_iter().map(|v| v.expect("holes checked above")).collect(),
                recurrence: rec,
            };
            let off = resolved.recurrence.offset as usize;
            match resolved.recurrence.axis {
                Axis::VaryX2 => columns[off] = Some(resolved),
                Axis::VaryX1 => rows[off] = Some(resolved),
            }
        }
        let data = ResolvedInitialData {
            corner: (m1, m2),
            columns: columns.into_iter().map(|c| c.expect("validated")).collect(),
            rows: rows.into_iter().map(|r| r.expect("validated")).collect(),
        };
        data.check_overlap()?;
        Ok(data)
    }
}

fn known_value(rec: &LineRecurrence, slots: &[Option<Rational>], index: usize) -> Option<Rational> {
    if let Some(Some(v)) = slots.get(index) {
        return Some(v.clone());
    }
    let segment: Option<Vec<Rational>> = slots.iter().cloned().collect();
    segment.map(|s| rec.extend(&s, index + 1).swap_remove(index))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolvedLine {
    pub recurrence: LineRecurrence,
    pub segment: Vec<Rational>,
}

impl ResolvedLine {
    pub fn values(&self, upto: usize) -> Vec<Rational> {
        self.recurrence.extend(&self.segment, upto)
    }

    pub fn value_at(&self, index: usize) -> Rational {
        self.values(index + 1).swap_remove(index)
    }
}

/// Initial data with every hole filled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolvedInitialData {
    corner: (u32, u32),
    columns: Vec<ResolvedLine>,
    rows: Vec<ResolvedLine>,
}

impl ResolvedInitialData {
    pub fn corner(&self) -> (u32, u32) {
        self.corner
    }

    /// Line `phi(offset, .)`, `offset < m1`.
    pub fn column(&self, offset: u32) -> &ResolvedLine {
        &self.columns[offset as usize]
    }

    /// Line `phi(., offset)`, `offset < m2`.
    pub fn row(&self, offset: u32) -> &ResolvedLine {
        &self.rows[offset as usize]
    }

    pub fn lines(&self) -> impl Iterator<Item = &ResolvedLine> {
        self.columns.iter().chain(&self.rows)
    }

    /// `phi(x1, x2)` on the strips `x1 < m1` or `x2 < m2`. Points in both
    /// strips are read from the `x1`-fixed line.
    pub fn phi_at(&self, point: (u32, u32)) -> Result<Rational, ProblemError> {
        let (m1, m2) = self.corner;
        let (x1, x2) = point;
        if x1 < m1 {
            Ok(self.column(x1).value_at(x2 as usize))
        } else if x2 < m2 {
            Ok(self.row(x2).value_at(x1 as usize))
        } else {
            Err(ProblemError::PointNotInX0 { point })
        }
    }

    /// Back to a problem with every slot given.
    pub fn to_problem(&self, equation: DifferenceEquation2) -> Problem {
        let lines = self
            .lines()
            .map(|l| Line::known(l.recurrence.axis, l.recurrence.offset, l.recurrence.coeffs.clone(), l.segment.clone()))
            .collect();
        Problem::new(equation, lines)
    }

    fn check_overlap(&self) -> Result<(), ProblemError> {
        let (m1, m2) = self.corner;
        for x1 in 0..m1 {
            let column = self.column(x1).values(m2 as usize);
            for x2 in 0..m2 {
                let row = self.row(x2).value_at(x1 as usize);
                if column[x2 as usize] != row {
                    return Err(ProblemError::Inconsistent {
                        point: (x1, x2),
                        column: column[x2 as usize].clone(),
                        row,
                    });
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::from_int;
    use crate::samples;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| from_int(x)).collect()
    }

    #[test]
    fn extend_examples() {
        assert_eq!(extend_sequence(&ints(&[-1, -1, 1]), &ints(&[1, 0]), 7), ints(&[1, 0, 1, 1, 2, 3, 5]));
        assert_eq!(extend_sequence(&ints(&[0, 1]), &ints(&[1]), 4), ints(&[1, 0, 0, 0]));
        assert_eq!(extend_sequence(&ints(&[3, -2, 5]), &ints(&[0, 0]), 6), ints(&[0; 6]));
        assert_eq!(extend_sequence(&[-1.0, -1.0, 1.0], &[0.0, 1.0], 8)[7], 13.0);
    }

    #[test]
    fn validate_examples() {
        assert_eq!(samples::binomial().validate(), Ok(()));
        assert_eq!(samples::bloom_singles().validate(), Ok(()));

        let mut p = samples::binomial();
        p.equation = DifferenceEquation2::new((1, 1), [((0, 1), from_int(-1)), ((0, 0), from_int(-1))]).unwrap();
        assert_eq!(p.validate(), Err(ProblemError::ZeroCornerCoefficient { corner: (1, 1) }));

        let mut p = samples::binomial();
        p.lines.retain(|l| l.recurrence.axis != Axis::VaryX1);
        assert_eq!(p.validate(), Err(ProblemError::MissingLine { axis: Axis::VaryX1, offset: 0 }));

        let mut p = samples::binomial();
        p.lines[0].recurrence.coeffs = ints(&[1, 0]);
        assert!(matches!(p.validate(), Err(ProblemError::ZeroLeadingCoefficient { .. })));

        let eq = DifferenceEquation2::new((0, 1), [((0, 1), from_int(1))]).unwrap();
        assert_eq!(eq.validate(), Err(ProblemError::DegenerateDimension { axis: 1 }));

        assert!(matches!(
            DifferenceEquation2::new((1, 1), [((2, 0), from_int(1))]),
            Err(ProblemError::CoefficientOutsideBox { .. })
        ));

        let mut p = samples::binomial();
        p.lines.push(p.lines[0].clone());
        assert!(matches!(p.validate(), Err(ProblemError::DuplicateLine { .. })));

        let mut p = samples::binomial();
        p.lines[0].initial.push(None);
        assert!(matches!(p.validate(), Err(ProblemError::SlotCountMismatch { .. })));
    }

    #[test]
    fn resolve_fills_holes() {
        let p = samples::bloom_singles_with_holes();
        let data = p.resolve().unwrap();
        assert_eq!(data, samples::bloom_singles().resolve().unwrap());
        assert_eq!(data.phi_at((1, 1)).unwrap(), from_int(1));
        assert_eq!(data.phi_at((0, 0)).unwrap(), from_int(1));
    }

    #[test]
    fn resolve_identity_and_idempotence() {
        let p = samples::bloom_singles();
        let data = p.resolve().unwrap();
        for (line, r) in p.lines.iter().zip(data.lines()) {
            let _ = r;
            let given: Vec<Rational> = line.initial.iter().cloned().map(Option::unwrap).collect();
            let off = line.recurrence.offset;
            let resolved = match line.recurrence.axis {
                Axis::VaryX2 => data.column(off),
                Axis::VaryX1 => data.row(off),
            };
            assert_eq!(resolved.segment, given);
        }
        let again = data.to_problem(p.equation.clone()).resolve().unwrap();
        assert_eq!(again, data);
    }

    #[test]
    fn resolve_detects_clash() {
        let mut p = samples::binomial();
        let col = p.lines.iter_mut().find(|l| l.recurrence.axis == Axis::VaryX2).unwrap();
        col.initial = vec![Some(from_int(2))];
        match p.resolve() {
            Err(ProblemError::Inconsistent { point, column, row }) => {
                assert_eq!(point, (0, 0));
                assert_eq!(column, from_int(2));
                assert_eq!(row, from_int(1));
            }
            other => panic!("expected Inconsistent, got {other:?}"),
        }
    }

    #[test]
    fn resolve_detects_underdetermined() {
        let mut p = samples::binomial();
        for l in &mut p.lines {
            l.initial = vec![None];
        }
        assert_eq!(p.resolve(), Err(ProblemError::Underdetermined { points: vec![(0, 0)] }));

        // phi(1, 0) has no transverse line when m1 = 1.
        let mut p = samples::binomial();
        let row = p.lines.iter_mut().find(|l| l.recurrence.axis == Axis::VaryX1).unwrap();
        row.recurrence.coeffs = ints(&[1, -2, 1]);
        row.initial = vec![Some(from_int(1)), None];
        assert_eq!(p.resolve(), Err(ProblemError::Underdetermined { points: vec![(1, 0)] }));
    }

    #[test]
    fn phi_at_examples() {
        let bloom = samples::bloom_singles().resolve().unwrap();
        assert_eq!(bloom.phi_at((5, 0)).unwrap(), from_int(3));
        assert_eq!(bloom.phi_at((0, 3)).unwrap(), from_int(0));
        assert_eq!(bloom.phi_at((1, 1)).unwrap(), from_int(1));
        assert_eq!(bloom.phi_at((2, 1)), Err(ProblemError::PointNotInX0 { point: (2, 1) }));
        let binom = samples::binomial().resolve().unwrap();
        assert_eq!(binom.phi_at((0, 0)).unwrap(), from_int(1));
        assert_eq!(binom.phi_at((7, 0)).unwrap(), from_int(1));
        assert_eq!(binom.phi_at((0, 7)).unwrap(), from_int(0));
    }

    /// Independent fill of the strips: iterate each line recurrence on a grid.
    fn brute_force_strips(p: &Problem, n: usize) -> Vec<Vec<Option<Rational>>> {
        let (m1, m2) = p.corner();
        let mut grid = vec![vec![None; n + 1]; n + 1];
        for line in &p.lines {
            let rec = &line.recurrence;
            let mu = rec.order();
            let mut seq: Vec<Rational> = line.initial.iter().map(|v| v.clone().unwrap()).collect();
            for i in mu..=n {
                let mut s = Rational::zero();
                for j in 0..mu {
                    s += &rec.coeffs[j] * &seq[i - mu + j];
                }
                seq.push(-s / &rec.coeffs[mu]);
            }
            for (i, v) in seq.into_iter().enumerate().take(n + 1) {
                let (x1, x2) = rec.axis.point(rec.offset, i as u32);
                let cell = &mut grid[x1 as usize][x2 as usize];
                if rec.axis == Axis::VaryX2 || cell.is_none() {
                    *cell = Some(v);
                }
            }
        }
        assert!(grid.iter().flatten().enumerate().all(|(k, v)| {
            let (x1, x2) = ((k / (n + 1)) as u32, (k % (n + 1)) as u32);
            v.is_some() == (x1 < m1 || x2 < m2)
        }));
        grid
    }

    #[test]
    fn phi_at_matches_brute_force() {
        for p in [samples::binomial(), samples::bloom_singles()] {
            let data = p.resolve().unwrap();
            let grid = brute_force_strips(&p, 20);
            for (x1, col) in grid.iter().enumerate() {
                for (x2, v) in col.iter().enumerate() {
                    let point = (x1 as u32, x2 as u32);
                    match v {
                        Some(v) => assert_eq!(&data.phi_at(point).unwrap(), v, "at {point:?}"),
                        None => assert!(data.phi_at(point).is_err()),
                    }
                }
            }
        }
    }

    fn small_rat() -> impl Strategy<Value = Rational> {
        (-9i64..10, 1i64..10).prop_map(|(n, d)| crate::arith::from_frac(n, d))
    }

    fn recurrence_and_segments() -> impl Strategy<Value = (Vec<Rational>, Vec<Rational>, Vec<Rational>, Rational, Rational)> {
        (1usize..5).prop_flat_map(|mu| {
            (
                prop::collection::vec(small_rat(), mu + 1).prop_filter("leading nonzero", |c| !c.last().unwrap().is_zero()),
                prop::collection::vec(small_rat(), mu),
                prop::collection::vec(small_rat(), mu),
                small_rat(),
                small_rat(),
            )
        })
    }

    proptest! {
        #[test]
        fn extend_is_linear((c, a, b, s, t) in recurrence_and_segments()) {
            let mix: Vec<Rational> = a.iter().zip(&b).map(|(x, y)| &s * x + &t * y).collect();
            let lhs = extend_sequence(&c, &mix, 15);
            let ea = extend_sequence(&c, &a, 15);
            let eb = extend_sequence(&c, &b, 15);
            let rhs: Vec<Rational> = ea.iter().zip(&eb).map(|(x, y)| &s * x + &t * y).collect();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn extend_is_shift_consistent((c, a, _b, _s, _t) in recurrence_and_segments(), n in 5usize..20) {
            let mu = c.len() - 1;
            let full = extend_sequence(&c, &a, n + mu);
            let tail = extend_sequence(&c, &full[n - mu..n], 2 * mu);
            prop_assert_eq!(&tail[..], &full[n - mu..n + mu]);
        }
    }
}
