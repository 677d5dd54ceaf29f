use serde::Serialize;

/// Outcome of one numerical check. `pass` holds exactly when `abs_err <= tolerance`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub r: f64,
    pub computed: f64,
    pub expected: f64,
    pub abs_err: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckReport {
    /// Two-sided check: `abs_err = |computed - expected|`.
    pub fn new(
        name: impl Into<String>,
        r: f64,
        computed: f64,
        expected: f64,
        tolerance: f64,
    ) -> Self {
        Self::with_error(
            name,
            r,
            computed,
            expected,
            (computed - expected).abs(),
            tolerance,
        )
    }

    /// One-sided check of `computed <= expected`: only the excess counts as error.
    pub fn at_most(
        name: impl Into<String>,
        r: f64,
        computed: f64,
        expected: f64,
        tolerance: f64,
    ) -> Self {
        Self::with_error(
            name,
            r,
            computed,
            expected,
            (computed - expected).max(0.0),
            tolerance,
        )
    }

    pub fn with_error(
        name: impl Into<String>,
        r: f64,
        computed: f64,
        expected: f64,
        abs_err: f64,
        tolerance: f64,
    ) -> Self {
        Self {
            name: name.into(),
            r,
            computed,
            expected,
            abs_err,
            tolerance,
            // NaN errors fail.
            pass: abs_err <= tolerance,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_iff_error_within_tolerance() {
        assert!(CheckReport::new("a", 0.5, 1.0, 1.0 + 1e-13, 1e-12).pass);
        assert!(!CheckReport::new("a", 0.5, 1.0, 1.1, 1e-12).pass);
        assert!(CheckReport::at_most("b", 0.5, 0.2, 0.9, 1e-12).pass);
        let r = CheckReport::at_most("b", 0.5, 0.9, 0.2, 1e-12);
        assert!(!r.pass);
        assert!((r.abs_err - 0.7).abs() < 1e-15);
        assert!(!CheckReport::new("nan", 0.5, f64::NAN, 0.0, 1.0).pass);
    }
}
