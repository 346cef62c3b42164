//! Pass/fail reports for the runtime verification routines.  Every check
//! records a witness string on failure so mismatches are diagnosable from
//! the CLI output alone.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

impl CheckItem {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckItem { name: name.into(), passed: true, witness: None }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        CheckItem { name: name.into(), passed: false, witness: Some(witness.into()) }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport { items: Vec::new() }
    }

    pub fn push(&mut self, item: CheckItem) {
        self.items.push(item);
    }

    /// Records `name` as passed when `ok`, otherwise failed with the
    /// lazily-built witness.
    pub fn record(&mut self, name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) {
        if ok {
            self.push(CheckItem::pass(name));
        } else {
            self.push(CheckItem::fail(name, witness()));
        }
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|item| item.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckItem> {
        self.items.iter().find(|item| !item.passed)
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.items.extend(other.items);
    }

    /// Exit code under the CLI contract: 0 when everything passed,
    /// 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.items
                .iter()
                .map(|item| {
                    let mut obj = serde_json::json!({
                        "name": item.name,
                        "passed": item.passed,
                    });
                    if let Some(w) = &item.witness {
                        obj["witness"] = serde_json::json!(w);
                    }
                    obj
                })
                .collect(),
        )
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            if item.passed {
                writeln!(f, "ok   {}", item.name)?;
            } else {
                writeln!(
                    f,
                    "FAIL {}: {}",
                    item.name,
                    item.witness.as_deref().unwrap_or("(no witness)")
                )?;
            }
        }
        Ok(())
    }
}
