use serde::Serialize;

/// Outcome of checking one identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub holds: bool,
    /// Diagnostics are reported but do not decide whether a suite passes.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub diagnostic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl RelationCheck {
    pub fn new(name: impl Into<String>, holds: bool) -> Self {
        Self {
            name: name.into(),
            holds,
            diagnostic: false,
            detail: None,
        }
    }

    pub fn diagnostic(name: impl Into<String>, holds: bool, detail: Option<String>) -> Self {
        Self {
            name: name.into(),
            holds,
            diagnostic: true,
            detail,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub suite: String,
    pub n: usize,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn new(suite: impl Into<String>, n: usize) -> Self {
        Self {
            suite: suite.into(),
            n,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: RelationCheck) {
        self.checks.push(check);
    }

    pub fn check(&mut self, name: impl Into<String>, holds: bool) {
        self.checks.push(RelationCheck::new(name, holds));
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().filter(|c| !c.diagnostic).all(|c| c.holds)
    }

    pub fn failures(&self) -> Vec<&RelationCheck> {
        self.checks
            .iter()
            .filter(|c| !c.diagnostic && !c.holds)
            .collect()
    }

    pub fn extend(&mut self, other: RelationReport) {
        self.checks.extend(other.checks);
    }
}
