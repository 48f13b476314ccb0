//! Lower and upper bounds on the Randić index in terms of the order `n`,
//! minimum degree `d` and maximum degree `D`, with structural equality
//! certificates.
//!
//! Equality is never decided from floating-point slack. The lower bound is
//! tight exactly on `(d, D)`-biregular graphs and the upper bound exactly on
//! the class-chain family (see [`crate::constructions`]); the report carries
//! those certificates, and the numeric slacks are diagnostics.

use serde::Serialize;

use crate::constructions::{family_f_with_degrees, FamilyFCertificate};
use crate::error::{Error, Result};
use crate::graph::{BiregularCertificate, Graph};
use crate::numeric::{
    compensated_sum, inv_sqrt, inv_sqrt_product, serialize_opt_real, serialize_real,
};
use crate::profile::DegreeProfile;
use crate::randic::{direct_with_degrees, positive_degrees};

fn check_strict(n: usize, d: usize, big_d: usize) -> Result<()> {
    if d == 0 || d >= big_d {
        return Err(Error::Precondition(format!(
            "bound needs 1 <= d < D, got d = {d}, D = {big_d}"
        )));
    }
    if n < 2 {
        return Err(Error::Precondition(format!("bound needs n >= 2, got {n}")));
    }
    Ok(())
}

/// `sqrt(d D) n / (d + D)`, attained only by `(d, D)`-biregular graphs.
pub fn lower_bound(n: usize, d: usize, big_d: usize) -> Result<f64> {
    check_strict(n, d, big_d)?;
    Ok(((d * big_d) as f64).sqrt() * n as f64 / (d + big_d) as f64)
}

/// `n/2 - sum_{i=d}^{D-1} (1/sqrt(i) - 1/sqrt(i+1))^2 / 2`, valid for
/// connected graphs.
pub fn upper_bound(n: usize, d: usize, big_d: usize) -> Result<f64> {
    check_strict(n, d, big_d)?;
    Ok(n as f64 / 2.0 - upper_bound_deficit(d, big_d))
}

fn upper_bound_deficit(d: usize, big_d: usize) -> f64 {
    compensated_sum((d..big_d).map(|i| {
        let diff = inv_sqrt(i) - inv_sqrt(i + 1);
        0.5 * diff * diff
    }))
}

/// The weaker `d n / (d + D)` lower bound for connected graphs.
pub fn baseline_bound(n: usize, d: usize, big_d: usize) -> Result<f64> {
    if d == 0 || d > big_d || n < 2 {
        return Err(Error::Precondition(format!(
            "baseline needs 1 <= d <= D and n >= 2, got n = {n}, d = {d}, D = {big_d}"
        )));
    }
    Ok((d * n) as f64 / (d + big_d) as f64)
}

/// `sqrt(n - 1)`, the minimum over graphs without isolated vertices,
/// attained only by stars.
pub fn star_bound(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::Precondition(format!(
            "star bound needs n >= 2, got {n}"
        )));
    }
    Ok(((n - 1) as f64).sqrt())
}

/// One term of the decomposition: `coefficient * m_ij`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DecompositionTerm {
    pub i: usize,
    pub j: usize,
    pub count: usize,
    #[serde(serialize_with = "serialize_real")]
    pub coefficient: f64,
}

/// Both sides of
/// `R(G) = sqrt(dD) n/(d+D) + sum_{d<=i<=j<=D} [1/sqrt(ij) - sqrt(dD)/(d+D) (1/i + 1/j)] m_ij`
/// together with the sign pattern of the coefficients.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DecompositionCheck {
    #[serde(serialize_with = "serialize_real")]
    pub lhs: f64,
    #[serde(serialize_with = "serialize_real")]
    pub rhs: f64,
    #[serde(serialize_with = "serialize_real")]
    pub residual: f64,
    /// Coefficient of `m_dD`; zero in exact arithmetic.
    #[serde(serialize_with = "serialize_real")]
    pub extremal_coefficient: f64,
    /// Smallest coefficient over all other pairs `d <= i <= j <= D`.
    #[serde(serialize_with = "serialize_real")]
    pub min_other_coefficient: f64,
    /// Terms with `m_ij > 0`.
    pub terms: Vec<DecompositionTerm>,
}

impl DecompositionCheck {
    pub fn holds(&self, tolerance: f64) -> bool {
        self.residual <= tolerance
            && self.extremal_coefficient.abs() <= tolerance
            && self.min_other_coefficient > 0.0
    }
}

fn decomposition_coefficient(i: usize, j: usize, scale: f64) -> f64 {
    inv_sqrt_product(i, j) - scale * (1.0 / i as f64 + 1.0 / j as f64)
}

/// Evaluates the degree-class decomposition of the index. Rejects regular
/// graphs, for which the decomposition has no `(d, D)` cross term.
pub fn decomposition_identity(g: &Graph) -> Result<DecompositionCheck> {
    let degrees = positive_degrees(g)?;
    let profile = DegreeProfile::from_degrees(g, &degrees)?;
    decomposition_from_profile(&profile)
}

pub(crate) fn decomposition_from_profile(profile: &DegreeProfile) -> Result<DecompositionCheck> {
    let (d, big_d) = (profile.min_degree(), profile.max_degree());
    if d == big_d {
        return Err(Error::Precondition(
            "decomposition needs minimum degree < maximum degree".into(),
        ));
    }
    let n = profile.order();
    let base = lower_bound(n, d, big_d)?;
    let scale = ((d * big_d) as f64).sqrt() / (d + big_d) as f64;

    let terms: Vec<DecompositionTerm> = profile
        .cross_counts()
        .iter()
        .map(|(&(i, j), &count)| DecompositionTerm {
            i,
            j,
            count,
            coefficient: decomposition_coefficient(i, j, scale),
        })
        .collect();

    let lhs = compensated_sum(
        terms
            .iter()
            .map(|t| t.count as f64 * inv_sqrt_product(t.i, t.j)),
    );
    let rhs = compensated_sum(
        std::iter::once(base).chain(terms.iter().map(|t| t.count as f64 * t.coefficient)),
    );

    let min_other_coefficient = (d..=big_d)
        .flat_map(|i| (i..=big_d).map(move |j| (i, j)))
        .filter(|&pair| pair != (d, big_d))
        .map(|(i, j)| decomposition_coefficient(i, j, scale))
        .fold(f64::INFINITY, f64::min);

    Ok(DecompositionCheck {
        lhs,
        rhs,
        residual: (lhs - rhs).abs(),
        extremal_coefficient: decomposition_coefficient(d, big_d, scale),
        min_other_coefficient,
        terms,
    })
}

/// `(1/sqrt(x) - 1/sqrt(z))^2 - (1/sqrt(x) - 1/sqrt(y))^2 - (1/sqrt(y) - 1/sqrt(z))^2`
/// for `1 <= x < y < z`; strictly positive.
pub fn separation_gap(x: f64, y: f64, z: f64) -> Result<f64> {
    if !(1.0 <= x && x < y && y < z) {
        return Err(Error::Precondition(format!(
            "separation gap needs 1 <= x < y < z, got ({x}, {y}, {z})"
        )));
    }
    let (a, b, c) = (x.sqrt().recip(), y.sqrt().recip(), z.sqrt().recip());
    Ok((a - c).powi(2) - (a - b).powi(2) - (b - c).powi(2))
}

/// Factored form of [`separation_gap`]: `2 (1/sqrt(x) - 1/sqrt(y)) (1/sqrt(y) - 1/sqrt(z))`.
pub fn separation_gap_product(x: f64, y: f64, z: f64) -> f64 {
    let (a, b, c) = (x.sqrt().recip(), y.sqrt().recip(), z.sqrt().recip());
    2.0 * (a - b) * (b - c)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub d: usize,
    #[serde(rename = "D")]
    pub big_d: usize,
    pub connected: bool,
    pub regular: bool,
    #[serde(serialize_with = "serialize_real")]
    pub randic: f64,
    #[serde(rename = "lowerBound", serialize_with = "serialize_real")]
    pub lower_bound: f64,
    #[serde(rename = "upperBound", serialize_with = "serialize_opt_real")]
    pub upper_bound: Option<f64>,
    /// Why `upper_bound` is absent, when it is.
    #[serde(rename = "upperBoundNote")]
    pub upper_bound_note: Option<String>,
    #[serde(rename = "baselineBound", serialize_with = "serialize_real")]
    pub baseline_bound: f64,
    /// `randic - lower_bound`.
    #[serde(rename = "lowerSlack", serialize_with = "serialize_real")]
    pub lower_slack: f64,
    /// `upper_bound - randic`.
    #[serde(rename = "upperSlack", serialize_with = "serialize_opt_real")]
    pub upper_slack: Option<f64>,
    #[serde(rename = "lowerEquality")]
    pub lower_equality: Option<BiregularCertificate>,
    #[serde(rename = "upperEquality")]
    pub upper_equality: Option<FamilyFCertificate>,
}

impl BoundsReport {
    /// Bounds whose slack falls below `-tolerance`. Always empty unless a
    /// theorem has a counterexample.
    pub fn violations(&self, tolerance: f64) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.lower_slack < -tolerance {
            out.push("lower");
        }
        if self.upper_slack.is_some_and(|s| s < -tolerance) {
            out.push("upper");
        }
        if self.lower_bound < self.baseline_bound - tolerance {
            out.push("baseline");
        }
        out
    }
}

pub fn bounds_report(g: &Graph) -> Result<BoundsReport> {
    let degrees = positive_degrees(g)?;
    let profile = DegreeProfile::from_degrees(g, &degrees)?;
    let (n, d, big_d) = (g.order(), profile.min_degree(), profile.max_degree());
    let randic = direct_with_degrees(g, &degrees).value;
    let connected = g.is_connected();
    let lower_equality = g
        .biregular_certificate()
        .filter(|c| (c.low_degree, c.high_degree) == (d, big_d));

    if profile.is_regular() {
        let half = n as f64 / 2.0;
        return Ok(BoundsReport {
            n,
            d,
            big_d,
            connected,
            regular: true,
            randic,
            lower_bound: half,
            upper_bound: Some(half),
            upper_bound_note: Some("regular graph: index equals n/2".into()),
            baseline_bound: half,
            lower_slack: randic - half,
            upper_slack: Some(half - randic),
            lower_equality,
            upper_equality: None,
        });
    }

    let lower = lower_bound(n, d, big_d)?;
    let (upper, note) = if connected {
        (Some(upper_bound(n, d, big_d)?), None)
    } else {
        (
            None,
            Some("graph is disconnected: upper bound requires connectivity".to_string()),
        )
    };
    Ok(BoundsReport {
        n,
        d,
        big_d,
        connected,
        regular: false,
        randic,
        lower_bound: lower,
        upper_bound: upper,
        upper_bound_note: note,
        baseline_bound: baseline_bound(n, d, big_d)?,
        lower_slack: randic - lower,
        upper_slack: upper.map(|u| u - randic),
        lower_equality,
        upper_equality: family_f_with_degrees(g, &degrees, &profile),
    })
}
