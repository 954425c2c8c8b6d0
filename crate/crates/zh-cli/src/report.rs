//! Machine-readable command reports.

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

/// Overall outcome of a command.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One checked item: a rule instance, a lemma, a script, a comparison.
#[derive(Clone, Debug, Serialize)]
pub struct Item {
    pub name: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub detail: Value,
}

impl Item {
    pub fn new(name: impl Into<String>, ok: bool) -> Item {
        Item { name: name.into(), ok, message: None, detail: Value::Null }
    }

    pub fn with_message(mut self, message: impl Into<String>) -> Item {
        self.message = Some(message.into());
        self
    }

    pub fn with_detail(mut self, detail: Value) -> Item {
        self.detail = detail;
        self
    }
}

/// The result of one command invocation.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub items: Vec<Item>,
    pub elapsed_ms: u128,
    /// Free-form output such as a matrix or a diagram.
    #[serde(rename = "output", skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
}

impl Report {
    pub fn new(command: impl Into<String>, items: Vec<Item>, elapsed: Duration) -> Report {
        let status = if items.iter().all(|i| i.ok) { Status::Pass } else { Status::Fail };
        Report { command: command.into(), status, items, elapsed_ms: elapsed.as_millis(), text: None }
    }

    pub fn with_text(mut self, text: impl Into<String>) -> Report {
        self.text = Some(text.into());
        self
    }

    pub fn failures(&self) -> usize {
        self.items.iter().filter(|i| !i.ok).count()
    }

    /// The process exit code: 0 iff no item failed.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.status == Status::Fail)
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialise")
    }

    /// Human-readable form: one line per item, then a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(t) = &self.text {
            out.push_str(t);
            if !t.ends_with('\n') {
                out.push('\n');
            }
        }
        for i in &self.items {
            let mark = if i.ok { "ok  " } else { "FAIL" };
            match &i.message {
                Some(m) => writeln!(out, "{mark} {}: {m}", i.name),
                None => writeln!(out, "{mark} {}", i.name),
            }
            .expect("writing to a string");
        }
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
        };
        writeln!(out, "{}: {status} ({} item(s), {} failure(s), {} ms)", self.command, self.items.len(), self.failures(), self.elapsed_ms).expect("writing to a string");
        out
    }
}
