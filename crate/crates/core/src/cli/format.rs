//! JSON documents read and written by the command-line tool.
//!
//! Problem file:
//!
//! ```json
//! {
//!   "equation": {
//!     "m": [1, 1],
//!     "coefficients": [
//!       {"alpha": [1, 1], "value": "1"},
//!       {"alpha": [0, 1], "value": "-1"},
//!       {"alpha": [0, 0], "value": "-1"}
//!     ]
//!   },
//!   "lines": [
//!     {"fixed_axis": 1, "offset": 0, "coefficients": ["0", "1"], "initial": ["1"]},
//!     {"fixed_axis": 2, "offset": 0, "coefficients": ["-1", "1"], "initial": [null]}
//!   ],
//!   "variables": ["z", "w"]
//! }
//! ```
//!
//! `fixed_axis: 1` means `x1` is held at `offset` and the line runs along
//! `x2`. `null` marks an initial value to be derived from the crossing line.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{parse_rational, ArithError, Rational};
use crate::poly::render::{render_ratfunc2, Style};
use crate::poly::{Exp2, Poly2, PolyError, RatFunc2};
use crate::recurrence::{Axis, DifferenceEquation2, Line, Problem, ProblemError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{context}: {source}")]
    Rational { context: String, source: ArithError },
    #[error("fixed_axis must be 1 or 2, got {0}")]
    BadAxis(u8),
    #[error(transparent)]
    Problem(#[from] ProblemError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn rat(text: &str, context: impl FnOnce() -> String) -> Result<Rational, FormatError> {
    parse_rational(text).map_err(|source| FormatError::Rational {
        context: context(),
        source,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoefficientSpec {
    pub alpha: [u32; 2],
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EquationSpec {
    pub m: [u32; 2],
    pub coefficients: Vec<CoefficientSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LineSpec {
    pub fixed_axis: u8,
    pub offset: u32,
    pub coefficients: Vec<String>,
    pub initial: Vec<Option<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub equation: EquationSpec,
    pub lines: Vec<LineSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variables: Option<[String; 2]>,
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// Builds and validates the problem.
    pub fn to_problem(&self) -> Result<Problem, FormatError> {
        let mut coeffs = Vec::new();
        for c in &self.equation.coefficients {
            let v = rat(&c.value, || format!("equation coefficient {:?}", c.alpha))?;
            coeffs.push(((c.alpha[0], c.alpha[1]), v));
        }
        let equation = DifferenceEquation2::new((self.equation.m[0], self.equation.m[1]), coeffs)?;
        let mut lines = Vec::new();
        for l in &self.lines {
            let axis = match l.fixed_axis {
                1 => Axis::VaryX2,
                2 => Axis::VaryX1,
                other => return Err(FormatError::BadAxis(other)),
            };
            let ctx = || format!("line fixed_axis={} offset={}", l.fixed_axis, l.offset);
            let coeffs = l
                .coefficients
                .iter()
                .map(|c| rat(c, ctx))
                .collect::<Result<Vec<_>, _>>()?;
            let initial = l
                .initial
                .iter()
                .map(|v| v.as_deref().map(|t| rat(t, ctx)).transpose())
                .collect::<Result<Vec<_>, _>>()?;
            lines.push(Line::new(axis, l.offset, coeffs, initial));
        }
        let problem = Problem::new(equation, lines);
        problem.validate()?;
        Ok(problem)
    }

    pub fn from_problem(problem: &Problem) -> Self {
        let (m1, m2) = problem.corner();
        ProblemFile {
            equation: EquationSpec {
                m: [m1, m2],
                coefficients: problem
                    .equation
                    .coeffs()
                    .map(|((a1, a2), c)| CoefficientSpec {
                        alpha: [a1, a2],
                        value: c.to_string(),
                    })
                    .collect(),
            },
            lines: problem
                .lines
                .iter()
                .map(|l| LineSpec {
                    fixed_axis: match l.recurrence.axis {
                        Axis::VaryX2 => 1,
                        Axis::VaryX1 => 2,
                    },
                    offset: l.recurrence.offset,
                    coefficients: l.recurrence.coeffs.iter().map(ToString::to_string).collect(),
                    initial: l.initial.iter().map(|v| v.as_ref().map(ToString::to_string)).collect(),
                })
                .collect(),
            variables: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub exponents: [u32; 2],
    pub coefficient: String,
}

/// A rational function as written by `--format json`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GfFile {
    pub variables: [String; 2],
    pub numerator: Vec<TermSpec>,
    pub denominator: Vec<TermSpec>,
    #[serde(default)]
    pub text: String,
}

fn terms_of(p: &Poly2<Rational>) -> Vec<TermSpec> {
    p.terms()
        .rev()
        .map(|(Exp2(a, b), c)| TermSpec {
            exponents: [a, b],
            coefficient: c.to_string(),
        })
        .collect()
}

fn poly_of(terms: &[TermSpec], part: &str) -> Result<Poly2<Rational>, FormatError> {
    let mut p = Poly2::zero();
    for t in terms {
        let c = rat(&t.coefficient, || format!("{part} term {:?}", t.exponents))?;
        p.add_term(Exp2(t.exponents[0], t.exponents[1]), c);
    }
    Ok(p)
}

impl GfFile {
    pub fn from_ratfunc(f: &RatFunc2, vars: [&str; 2]) -> Self {
        GfFile {
            variables: vars.map(str::to_string),
            numerator: terms_of(f.numerator()),
            denominator: terms_of(f.denominator()),
            text: render_ratfunc2(f, vars, Style::Plain),
        }
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// The function as written, rescaled but not reduced.
    pub fn to_ratfunc(&self) -> Result<RatFunc2, FormatError> {
        let num = poly_of(&self.numerator, "numerator")?;
        let den = poly_of(&self.denominator, "denominator")?;
        Ok(RatFunc2::unreduced(num, den)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;
    use crate::solver2d::assemble_gf;

    #[test]
    fn problem_round_trip() {
        for p in [samples::binomial(), samples::bloom_singles_with_holes()] {
            let file = ProblemFile::from_problem(&p);
            let back = ProblemFile::parse(&file.to_json()).unwrap();
            assert_eq!(back, file);
            assert_eq!(back.to_problem().unwrap(), p);
        }
    }

    #[test]
    fn schema_errors() {
        assert!(matches!(ProblemFile::parse("{}"), Err(FormatError::Json(_))));
        let mut f = ProblemFile::from_problem(&samples::binomial());
        f.lines[0].fixed_axis = 3;
        assert!(matches!(f.to_problem(), Err(FormatError::BadAxis(3))));
        let mut f = ProblemFile::from_problem(&samples::binomial());
        f.lines[0].coefficients[0] = "x".into();
        assert!(matches!(f.to_problem(), Err(FormatError::Rational { .. })));
        let text = ProblemFile::from_problem(&samples::binomial()).to_json().replace("\"offset\"", "\"ofset\"");
        assert!(ProblemFile::parse(&text).is_err());
    }

    #[test]
    fn gf_json_round_trip() {
        let f = assemble_gf(&samples::bloom_singles()).unwrap();
        let doc = GfFile::from_ratfunc(&f, ["z", "w"]);
        assert_eq!(doc.text, "(z - 1)/(z^2*w - z*w - w - z + 1)");
        let back = GfFile::parse(&doc.to_json()).unwrap().to_ratfunc().unwrap();
        assert_eq!(back, f);
    }
}
