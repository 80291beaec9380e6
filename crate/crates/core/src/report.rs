use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

/// Result of checking one identity, with a witness on failure.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub identity: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(identity: impl Into<String>) -> Self {
        Check { identity: identity.into(), status: Status::Pass, witness: None }
    }

    pub fn fail(identity: impl Into<String>, witness: impl Into<String>) -> Self {
        Check { identity: identity.into(), status: Status::Fail, witness: Some(witness.into()) }
    }

    pub fn from_bool(identity: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Check::pass(identity)
        } else {
            Check::fail(identity, witness())
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.status, self.identity)?;
        if let Some(w) = &self.witness {
            write!(f, " [{w}]")?;
        }
        Ok(())
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(Check::passed)
}

/// First failing check, if any.
pub fn first_failure(checks: &[Check]) -> Option<&Check> {
    checks.iter().find(|c| !c.passed())
}
