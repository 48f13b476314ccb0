//! Floating-point helpers shared by the index and bound computations.

use serde::Serializer;

/// Default tolerance for algebraic identities evaluated in `f64`.
pub const IDENTITY_TOLERANCE: f64 = 1e-12;

/// Default tolerance for inequality slacks.
pub const SLACK_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub identity: f64,
    pub slack: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            identity: IDENTITY_TOLERANCE,
            slack: SLACK_TOLERANCE,
        }
    }
}

/// Neumaier's compensated summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = CompensatedSum::new();
        iter.into_iter().for_each(|x| s.add(x));
        s
    }
}

pub fn compensated_sum<I: IntoIterator<Item = f64>>(iter: I) -> f64 {
    iter.into_iter().collect::<CompensatedSum>().value()
}

/// `1 / sqrt(a * b)` with the product taken in integers.
pub fn inv_sqrt_product(a: usize, b: usize) -> f64 {
    1.0 / ((a * b) as f64).sqrt()
}

pub fn inv_sqrt(a: usize) -> f64 {
    1.0 / (a as f64).sqrt()
}

/// Rounds to 15 significant decimal digits.
pub fn round_sig15(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.14e}").parse().expect("formatted float parses")
}

/// Decimal text with at most 15 significant digits, `.` as separator.
pub fn format_real(x: f64) -> String {
    let r = round_sig15(x);
    if r == 0.0 {
        "0".into()
    } else {
        r.to_string()
    }
}

pub(crate) fn serialize_real<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(round_sig15(*x))
}

pub(crate) fn serialize_opt_real<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_some(&round_sig15(*v)),
        None => s.serialize_none(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensation_recovers_small_terms() {
        let naive: f64 = [1.0, 1e-16, 1e-16, -1.0].iter().sum();
        assert_eq!(naive, 0.0);
        let s = compensated_sum([1.0, 1e-16, 1e-16, -1.0]);
        assert!((s - 2e-16).abs() < 1e-30);
    }

    #[test]
    fn fifteen_digits() {
        assert_eq!(format_real(3f64.sqrt()), "1.73205080756888");
        assert_eq!(format_real(2.5), "2.5");
        assert_eq!(format_real(0.0), "0");
        assert_eq!(format_real(-0.125), "-0.125");
    }
}
