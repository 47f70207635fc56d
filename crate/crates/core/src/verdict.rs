//! Pass/fail reports for exhaustive checks.

use serde::Serialize;
use serde_json::{Map, Value};

/// Outcome of an exhaustive check, with the first counterexample found.
#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub check: String,
    pub scope: String,
    pub pass: bool,
    /// Number of individual cases examined.
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    #[serde(skip_serializing_if = "Map::is_empty")]
    pub details: Map<String, Value>,
}

impl Verdict {
    pub fn new(check: impl Into<String>, scope: impl Into<String>) -> Self {
        Verdict {
            check: check.into(),
            scope: scope.into(),
            pass: true,
            cases: 0,
            counterexample: None,
            details: Map::new(),
        }
    }

    pub fn case(&mut self) {
        self.cases += 1;
    }

    /// Records a failed case; only the first counterexample is kept.
    pub fn fail(&mut self, ce: Value) {
        self.pass = false;
        if self.counterexample.is_none() {
            self.counterexample = Some(ce);
        }
    }

    /// Records a case that must hold.
    pub fn require(&mut self, ok: bool, ce: impl FnOnce() -> Value) {
        self.case();
        if !ok {
            self.fail(ce());
        }
    }

    pub fn detail(&mut self, key: &str, v: impl Into<Value>) {
        self.details.insert(key.into(), v.into());
    }

    /// Folds another verdict into this one.
    pub fn absorb(&mut self, other: Verdict) {
        self.cases += other.cases;
        if !other.pass {
            let ce = other.counterexample.unwrap_or(Value::Null);
            self.fail(serde_json::json!({ "check": other.check, "scope": other.scope, "counterexample": ce }));
        }
    }
}
