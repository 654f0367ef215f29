//! Earlier upper bounds on the domination number (as coefficients of `n`)
//! and the comparison table against the coefficient-system bound.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::coefficients::solve_coefficients;
use crate::error::{Error, Result};
use crate::rational::{self, frac, Rational, Rounding};

/// Which harmonic sum the Arnautov–Payan bound uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum ArnautovVariant {
    /// `H_{δ+1} / (δ+1)`, the formula as usually written.
    AsPrinted,
    /// `H_δ / (δ+1)`, the variant whose values appear in the published table.
    AsTabulated,
}

impl ArnautovVariant {
    pub fn name(self) -> &'static str {
        match self {
            ArnautovVariant::AsPrinted => "as_printed",
            ArnautovVariant::AsTabulated => "as_tabulated",
        }
    }
}

fn require(delta: usize, min: usize) -> Result<()> {
    if delta < min {
        Err(Error::DegreeTooSmall { got: delta, min })
    } else {
        Ok(())
    }
}

fn harmonic(m: usize) -> f64 {
    (1..=m).map(|j| 1.0 / j as f64).sum()
}

pub fn arnautov_bound(delta: usize, variant: ArnautovVariant) -> Result<f64> {
    require(delta, 1)?;
    let terms = match variant {
        ArnautovVariant::AsPrinted => delta + 1,
        ArnautovVariant::AsTabulated => delta,
    };
    Ok(harmonic(terms) / (delta + 1) as f64)
}

/// `(1 + ln(δ+1)) / (δ+1)`.
pub fn alon_bound(delta: usize) -> Result<f64> {
    require(delta, 1)?;
    let m = (delta + 1) as f64;
    Ok((1.0 + m.ln()) / m)
}

/// `δ / (3δ - 1)`, exact.
pub fn simple_bound(delta: usize) -> Result<Rational> {
    require(delta, 1)?;
    Ok(frac(delta as i64, 3 * delta as i64 - 1))
}

/// `1 - Π_{j=1}^{δ+1} jδ / (jδ + 1)`.
pub fn clark_bound(delta: usize) -> Result<f64> {
    require(delta, 1)?;
    let d = delta as f64;
    let product: f64 = (1..=delta + 1)
        .map(|j| {
            let jd = j as f64 * d;
            jd / (jd + 1.0)
        })
        .product();
    Ok(1.0 - product)
}

/// `1 - (δ² - δ + 1) / (1 + δ Π_{j=1}^{δ-1} (1 + (δ+1)/(jδ)))`.
pub fn biro_bound(delta: usize) -> Result<f64> {
    require(delta, 2)?;
    let d = delta as f64;
    let product: f64 = (1..delta)
        .map(|j| 1.0 + (d + 1.0) / (j as f64 * d))
        .product();
    Ok(1.0 - (d * d - d + 1.0) / (1.0 + d * product))
}

/// One row of the comparison table. Display rounding is applied on output;
/// the fields keep full precision.
#[derive(Clone, Debug, Serialize)]
pub struct BoundsRow {
    pub delta: usize,
    pub arnautov: f64,
    pub alon: f64,
    #[serde(skip)]
    pub simple_exact: Rational,
    pub simple: f64,
    pub clark: f64,
    pub biro: f64,
    #[serde(skip)]
    pub theorem_exact: Rational,
    pub theorem: f64,
    pub arnautov_variant: ArnautovVariant,
}

impl BoundsRow {
    pub fn compute(delta: usize, variant: ArnautovVariant) -> Result<Self> {
        let simple_exact = simple_bound(delta)?;
        let theorem_exact = solve_coefficients(delta)?.bound();
        Ok(Self {
            delta,
            arnautov: arnautov_bound(delta, variant)?,
            alon: alon_bound(delta)?,
            simple: rational::to_f64(&simple_exact),
            simple_exact,
            clark: clark_bound(delta)?,
            biro: biro_bound(delta)?,
            theorem: rational::to_f64(&theorem_exact),
            theorem_exact,
            arnautov_variant: variant,
        })
    }

    /// The four published columns rendered to six decimals:
    /// Arnautov, simple, Biró, theorem.
    pub fn display_columns(&self) -> [String; 4] {
        let r6 = |x: f64| rational::f64_to_decimal(x, 6, Rounding::HalfAwayFromZero);
        [
            r6(self.arnautov),
            rational::to_decimal(&self.simple_exact, 6, Rounding::HalfAwayFromZero),
            r6(self.biro),
            rational::to_decimal(&self.theorem_exact, 6, Rounding::HalfAwayFromZero),
        ]
    }
}

/// One row per δ in `d_min..=d_max`, ordered by δ.
pub fn comparison_table(
    d_min: usize,
    d_max: usize,
    variant: ArnautovVariant,
) -> Result<Vec<BoundsRow>> {
    require(d_min, 5)?;
    if d_min > d_max {
        return Err(Error::InvalidParameter(format!(
            "empty degree range {d_min}..={d_max}"
        )));
    }
    (d_min..=d_max)
        .into_par_iter()
        .map(|d| BoundsRow::compute(d, variant))
        .collect()
}

pub fn render_table(rows: &[BoundsRow]) -> String {
    let mut out = String::new();
    if let Some(first) = rows.first() {
        let _ = writeln!(out, "# arnautov variant: {}", first.arnautov_variant.name());
    }
    let _ = writeln!(
        out,
        "{:>5}  {:>10}  {:>10}  {:>10}  {:>10}",
        "delta", "arnautov", "simple", "biro", "theorem"
    );
    for row in rows {
        let [a, s, b, t] = row.display_columns();
        let _ = writeln!(out, "{:>5}  {:>10}  {:>10}  {:>10}  {:>10}", row.delta, a, s, b, t);
    }
    out
}

pub fn render_csv(rows: &[BoundsRow]) -> String {
    let mut out = String::from("delta,arnautov,simple,biro,theorem\n");
    for row in rows {
        let [a, s, b, t] = row.display_columns();
        let _ = writeln!(out, "{},{a},{s},{b},{t}", row.delta);
    }
    out
}

/// Best bound known before the coefficient-system bound, for δ in 1..=7,
/// rendered the way the literature summary lists it. For δ <= 5 this is the
/// exact `δ/(3δ-1)`; for δ = 6, 7 it is the Biró bound rounded up to four
/// decimals.
pub fn best_prior_bound(delta: usize) -> Result<String> {
    match delta {
        1..=5 => {
            let r = simple_bound(delta)?;
            Ok(format!("{}/{}", r.numer(), r.denom()))
        }
        6 | 7 => Ok(rational::f64_to_decimal(biro_bound(delta)?, 4, Rounding::Up)),
        _ => Err(Error::InvalidParameter(format!(
            "no literature summary entry for delta={delta}"
        ))),
    }
}
