//! Coefficient system for the potential-function bound.
//!
//! For a minimum degree `d` the coefficients `a, s, b_1..b_d` are fixed by
//! taking four families of constraints with equality:
//!
//! ```text
//! (iii) (d+1)a - d b_{d-1}                                          = s
//! (iv)  j a + j(d-j+1)(b_j - b_{j-1}) - (j-1) b_{j-2}                = s   (3 <= j <= d)
//! (v)   2a + 2(d-1)(b_2 - b_1)                                      = s
//! (vi)  a + d b_1                                                   = s
//! ```
//!
//! With `s = 1` every `b_j` is an affine function of `a`, obtained by
//! back-substitution from (vi) upward; (iii) then pins `a`. The remaining two
//! conditions (monotone differences and the phase-0 inequality) are checked
//! afterwards, never assumed.

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{self, int, Rational, Rounding};

/// Smallest minimum degree the solver accepts.
pub const MIN_DEGREE: usize = 3;
/// Smallest minimum degree for which the bound improves on earlier ones.
pub const IMPROVEMENT_FROM: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientSet {
    d: usize,
    a: Rational,
    s: Rational,
    /// `b[k - 1]` holds `b_k`.
    b: Vec<Rational>,
}

impl CoefficientSet {
    /// Builds a set from explicit values. Only shape and positivity are
    /// checked; use [`verify_conditions`] for the theorem's conditions.
    pub fn from_parts(d: usize, a: Rational, s: Rational, b: Vec<Rational>) -> Result<Self> {
        if d < MIN_DEGREE {
            return Err(Error::DegreeTooSmall { got: d, min: MIN_DEGREE });
        }
        if b.len() != d {
            return Err(Error::InvalidParameter(format!(
                "expected {d} b-values, got {}",
                b.len()
            )));
        }
        let zero = Rational::zero();
        if a <= zero || s <= zero || b.iter().any(|x| *x <= zero) {
            return Err(Error::InvalidParameter(
                "coefficients must be strictly positive".into(),
            ));
        }
        Ok(Self { d, a, s, b })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn s(&self) -> &Rational {
        &self.s
    }

    /// `b_k` for `1 <= k <= d`.
    pub fn b(&self, k: usize) -> &Rational {
        assert!((1..=self.d).contains(&k), "b index {k} outside 1..={}", self.d);
        &self.b[k - 1]
    }

    /// `b_1..b_d` in index order.
    pub fn bs(&self) -> &[Rational] {
        &self.b
    }

    /// Value of a blue vertex with `white_deg` white neighbors (`b_min(deg, d)`).
    pub fn blue_value(&self, white_deg: usize) -> &Rational {
        self.b(white_deg.clamp(1, self.d))
    }

    /// `a / s` in lowest terms.
    pub fn bound(&self) -> Rational {
        bound_ratio(self)
    }

    pub fn improvement_claimed(&self) -> bool {
        self.d >= IMPROVEMENT_FROM
    }

    /// Multiplies every coefficient by a positive factor.
    pub fn rescaled(&self, factor: &Rational) -> Self {
        assert!(*factor > Rational::zero(), "rescale factor must be positive");
        Self {
            d: self.d,
            a: &self.a * factor,
            s: &self.s * factor,
            b: self.b.iter().map(|x| x * factor).collect(),
        }
    }

    /// Rescales so that `s` takes the given value.
    pub fn scaled_to_s(&self, s: &Rational) -> Self {
        self.rescaled(&(s / &self.s))
    }

    /// Smallest rescaling that makes `a`, `s` and every `b_k` integral.
    pub fn integer_scaled(&self) -> Self {
        let l = rational::common_denominator(
            std::iter::once(&self.a)
                .chain(std::iter::once(&self.s))
                .chain(self.b.iter()),
        );
        let g = {
            use num_integer::Integer;
            let all = std::iter::once(&self.a)
                .chain(std::iter::once(&self.s))
                .chain(self.b.iter())
                .map(|x| (x * Rational::from_integer(l.clone())).to_integer());
            all.fold(num_bigint::BigInt::zero(), |acc, x| acc.gcd(&x))
        };
        self.rescaled(&Rational::new(l, g))
    }

    /// Left-hand side minus `s` for every equality of the system, labelled.
    /// All entries are zero for a set produced by [`solve_coefficients`].
    pub fn residuals(&self) -> Vec<(String, Rational)> {
        let d = self.d;
        let di = |x: usize| int(x as i64);
        let b = |k: usize| self.b(k).clone();
        let mut out = Vec::with_capacity(d + 1);
        out.push(("vi".to_string(), &self.a + di(d) * b(1) - &self.s));
        out.push((
            "v".to_string(),
            di(2) * &self.a + di(2 * (d - 1)) * (b(2) - b(1)) - &self.s,
        ));
        for j in 3..=d {
            let lhs = di(j) * &self.a + di(j * (d - j + 1)) * (b(j) - b(j - 1))
                - di(j - 1) * b(j - 2);
            out.push((format!("iv[i={}]", d + 2 - j), lhs - &self.s));
        }
        out.push((
            "iii".to_string(),
            di(d + 1) * &self.a - di(d) * b(d - 1) - &self.s,
        ));
        out
    }
}

/// `c + k * a`, the form every `b_j` takes before `a` is known.
#[derive(Clone, Debug)]
struct Affine {
    constant: Rational,
    slope: Rational,
}

impl Affine {
    fn plus(&self, other: &Affine) -> Affine {
        Affine {
            constant: &self.constant + &other.constant,
            slope: &self.slope + &other.slope,
        }
    }

    fn times(&self, k: &Rational) -> Affine {
        Affine {
            constant: &self.constant * k,
            slope: &self.slope * k,
        }
    }

    fn at(&self, a: &Rational) -> Rational {
        &self.constant + &self.slope * a
    }
}

/// Solves the equality system for minimum degree `d`.
///
/// The result is scaled so that `a / s` is already in lowest terms, i.e.
/// `a` and `s` are the numerator and denominator of the bound.
pub fn solve_coefficients(d: usize) -> Result<CoefficientSet> {
    if d < MIN_DEGREE {
        return Err(Error::DegreeTooSmall { got: d, min: MIN_DEGREE });
    }
    let di = |x: usize| int(x as i64);
    let one = Rational::one();
    let mut b: Vec<Affine> = Vec::with_capacity(d);

    // (vi): b_1 = (1 - a) / d
    b.push(Affine {
        constant: &one / di(d),
        slope: -(&one / di(d)),
    });
    // (v): b_2 = b_1 + (1 - 2a) / (2(d-1))
    let den = di(2 * (d - 1));
    b.push(b[0].plus(&Affine {
        constant: &one / &den,
        slope: -(di(2) / &den),
    }));
    // (iv): b_j = b_{j-1} + (1 - j a + (j-1) b_{j-2}) / (j (d-j+1))
    for j in 3..=d {
        let den = j * (d - j + 1);
        assert!(den >= d, "back-substitution denominator {den} for j={j}, d={d}");
        let numer = Affine {
            constant: one.clone(),
            slope: -di(j),
        }
        .plus(&b[j - 3].times(&di(j - 1)));
        let next = b[j - 2].plus(&numer.times(&(&one / di(den))));
        b.push(next);
    }
    // (iii): (d+1) a - d b_{d-1} = 1
    let last = &b[d - 2];
    let coef = di(d + 1) - di(d) * &last.slope;
    assert!(!coef.is_zero(), "singular coefficient system for d={d}");
    let a = (one + di(d) * &last.constant) / coef;

    let b_vals: Vec<Rational> = b.iter().map(|x| x.at(&a)).collect();
    let unit = CoefficientSet {
        d,
        a: a.clone(),
        s: Rational::one(),
        b: b_vals,
    };
    let normalized = unit.rescaled(&Rational::from_integer(a.denom().clone()));
    Ok(normalized)
}

/// `a / s` in lowest terms.
pub fn bound_ratio(c: &CoefficientSet) -> Rational {
    &c.a / &c.s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub d: usize,
    pub i: bool,
    pub ii: bool,
    pub iii: bool,
    pub iv: bool,
    pub v: bool,
    pub vi: bool,
    /// `(d+2)a - (d+1)b_d - s`.
    #[serde(serialize_with = "serialize_fraction")]
    pub slack_ii: Rational,
    pub pass: bool,
}

impl ConditionReport {
    /// Names of the conditions that failed, in order.
    pub fn failures(&self) -> Vec<&'static str> {
        [
            ("i", self.i),
            ("ii", self.ii),
            ("iii", self.iii),
            ("iv", self.iv),
            ("v", self.v),
            ("vi", self.vi),
        ]
        .into_iter()
        .filter(|(_, ok)| !ok)
        .map(|(name, _)| name)
        .collect()
    }
}

/// Evaluates the six conditions as exact inequalities.
pub fn verify_conditions(c: &CoefficientSet) -> ConditionReport {
    let d = c.d;
    let di = |x: usize| int(x as i64);
    let a = &c.a;
    let s = &c.s;
    let b = |k: usize| c.b(k);

    // (i): 0 <= b_d - b_{d-1} <= ... <= b_2 - b_1 <= b_1 and b_d <= a
    let diffs: Vec<Rational> = (2..=d).map(|k| b(k) - b(k - 1)).collect();
    let i = diffs.last().is_some_and(|x| *x >= Rational::zero())
        && diffs.windows(2).all(|w| w[1] <= w[0])
        && diffs[0] <= *b(1)
        && b(d) <= a;

    let slack_ii = di(d + 2) * a - di(d + 1) * b(d) - s;
    let ii = slack_ii >= Rational::zero();
    let iii = di(d + 1) * a - di(d) * b(d - 1) >= *s;
    let iv = (2..=d - 1).all(|i| {
        let j = d - i + 2;
        di(j) * a + di(j * (i - 1)) * (b(j) - b(j - 1)) - di(j - 1) * b(j - 2) >= *s
    });
    let v = di(2) * a + di(2 * (d - 1)) * (b(2) - b(1)) >= *s;
    let vi = a + di(d) * b(1) >= *s;

    ConditionReport {
        d,
        i,
        ii,
        iii,
        iv,
        v,
        vi,
        slack_ii,
        pass: i && ii && iii && iv && v && vi,
    }
}

/// Solves and verifies every `d` in the inclusive range, in order.
pub fn verify_range(d_min: usize, d_max: usize) -> Result<Vec<(CoefficientSet, ConditionReport)>> {
    if d_min > d_max {
        return Err(Error::InvalidParameter(format!(
            "empty degree range {d_min}..={d_max}"
        )));
    }
    (d_min..=d_max)
        .into_par_iter()
        .map(|d| {
            let c = solve_coefficients(d)?;
            let r = verify_conditions(&c);
            Ok((c, r))
        })
        .collect()
}

fn serialize_fraction<S: serde::Serializer>(r: &Rational, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.serialize_str(&rational::fraction_string(r))
}

#[derive(Clone, Debug, Serialize)]
pub struct ConditionFlags {
    pub i: bool,
    pub ii: bool,
    pub iii: bool,
    pub iv: bool,
    pub v: bool,
    pub vi: bool,
}

/// JSON shape of a coefficient set: rationals as `"num/den"` strings.
#[derive(Clone, Debug, Serialize)]
pub struct CoefficientJson {
    pub d: usize,
    pub a: String,
    pub s: String,
    pub b: Vec<String>,
    pub bound: String,
    pub bound_decimal: String,
    pub conditions: ConditionFlags,
    pub improvement_claimed: bool,
}

impl CoefficientJson {
    pub fn new(c: &CoefficientSet, report: &ConditionReport) -> Self {
        let bound = c.bound();
        Self {
            d: c.d,
            a: rational::fraction_string(&c.a),
            s: rational::fraction_string(&c.s),
            b: c.b.iter().map(rational::fraction_string).collect(),
            bound: rational::fraction_string(&bound),
            bound_decimal: rational::to_decimal(&bound, 6, Rounding::HalfAwayFromZero),
            conditions: ConditionFlags {
                i: report.i,
                ii: report.ii,
                iii: report.iii,
                iv: report.iv,
                v: report.v,
                vi: report.vi,
            },
            improvement_claimed: c.improvement_claimed(),
        }
    }
}
