use serde::Serialize;

use crate::tolerances::INEQUALITY_SLACK;

/// Outcome of checking `lower ≤ middle ≤ upper` for one sample.
///
/// `witness`, when present, is an intermediate quantity that must also sit
/// between `lower` and `middle` (for example `C_l1(ρ)` under a convex-roof
/// estimate).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InequalityReport {
    pub context: String,
    pub lower: f64,
    pub middle: f64,
    pub upper: Option<f64>,
    pub witness: Option<f64>,
    pub lower_margin: f64,
    pub upper_margin: Option<f64>,
    /// Allowed negative margin; `1e-9` unless set with [`Self::with_slack`].
    pub slack: f64,
    pub pass: bool,
}

impl InequalityReport {
    pub fn new(context: impl Into<String>, lower: f64, middle: f64, upper: Option<f64>) -> Self {
        let mut report = Self {
            context: context.into(),
            lower,
            middle,
            upper,
            witness: None,
            lower_margin: middle - lower,
            upper_margin: upper.map(|u| u - middle),
            slack: INEQUALITY_SLACK,
            pass: false,
        };
        report.pass = report.evaluate();
        report
    }

    pub fn with_witness(mut self, witness: f64) -> Self {
        self.witness = Some(witness);
        self.pass = self.evaluate();
        self
    }

    pub fn with_slack(mut self, slack: f64) -> Self {
        self.slack = slack;
        self.pass = self.evaluate();
        self
    }

    /// `deviation ≤ tolerance` with no extra slack.
    pub fn agreement(context: impl Into<String>, deviation: f64, tolerance: f64) -> Self {
        Self::new(context, deviation, tolerance, None).with_slack(0.0)
    }

    fn evaluate(&self) -> bool {
        let ok = |margin: f64| margin >= -self.slack;
        let witness_ok = self.witness.is_none_or(|w| ok(w - self.lower) && ok(self.middle - w));
        ok(self.lower_margin) && self.upper_margin.is_none_or(ok) && witness_ok
    }

    /// Smallest of the margins (negative means a violation before slack).
    pub fn worst_margin(&self) -> f64 {
        let mut m = self.lower_margin;
        if let Some(u) = self.upper_margin {
            m = m.min(u);
        }
        if let Some(w) = self.witness {
            m = m.min(w - self.lower).min(self.middle - w);
        }
        m
    }
}
