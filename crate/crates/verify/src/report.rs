//! Machine-readable scenario reports.
//!
//! Reports serialize to JSON with sorted keys. Two runs on the same input
//! differ only in the `seconds` values under `timings`.

use std::fmt;
use std::path::Path;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

impl Status {
    pub fn of(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    pub check: String,
    pub status: Status,
    pub expected: String,
    pub computed: String,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
    /// Set when a check runs over more than one field, e.g. an F_p pre-check
    /// followed by the ℚ confirmation.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
}

impl Row {
    pub fn new(
        check: impl Into<String>,
        status: Status,
        expected: impl Into<String>,
        computed: impl Into<String>,
    ) -> Self {
        Row {
            check: check.into(),
            status,
            expected: expected.into(),
            computed: computed.into(),
            note: String::new(),
            field: None,
        }
    }

    /// PASS when `expected == computed`.
    pub fn compare(check: impl Into<String>, expected: impl ToString, computed: impl ToString) -> Self {
        let (e, c) = (expected.to_string(), computed.to_string());
        Row::new(check, Status::of(e == c), e, c)
    }

    pub fn skip(check: impl Into<String>, note: impl Into<String>) -> Self {
        Row::new(check, Status::Skip, "-", "-").with_note(note)
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    pub fn with_field(mut self, field: impl ToString) -> Self {
        self.field = Some(field.to_string());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InputSummary {
    pub algebra: String,
    pub field: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Timing {
    pub phase: String,
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub scenario: String,
    pub input: InputSummary,
    pub rows: Vec<Row>,
    pub timings: Vec<Timing>,
    pub version: String,
}

impl Report {
    pub fn new(scenario: impl Into<String>, input: InputSummary) -> Self {
        Report {
            scenario: scenario.into(),
            input,
            rows: Vec::new(),
            timings: Vec::new(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    /// FAIL if any row fails; otherwise PASS if some row passed, SKIP if
    /// every row was skipped.
    pub fn status(&self) -> Status {
        if self.rows.iter().any(|r| r.status == Status::Fail) {
            Status::Fail
        } else if self.rows.iter().any(|r| r.status == Status::Pass) {
            Status::Pass
        } else {
            Status::Skip
        }
    }

    /// 0 when everything that ran passed, 1 on any failure, 2 when nothing ran.
    pub fn exit_code(&self) -> i32 {
        match self.status() {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Skip => 2,
        }
    }

    pub fn time(&mut self, phase: impl Into<String>, seconds: f64) {
        self.timings.push(Timing { phase: phase.into(), seconds });
    }

    /// Canonical JSON: keys sorted at every level, two-space indentation.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Envelope<'a> {
            #[serde(flatten)]
            report: &'a Report,
            status: Status,
        }
        // round-tripping through Value sorts keys, since serde_json's map is ordered
        let value = serde_json::to_value(Envelope { report: self, status: self.status() }).expect("report serializes");
        let mut text = serde_json::to_string_pretty(&value).expect("value serializes");
        text.push('\n');
        text
    }

    pub fn write(&self, path: impl AsRef<Path>) -> std::io::Result<()> {
        std::fs::write(path, self.to_json())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.input.n.map(|n| format!(" n={n}")).unwrap_or_default();
        writeln!(f, "{} on {} over {}{n}: {}", self.scenario, self.input.algebra, self.input.field, self.status())?;
        for r in &self.rows {
            let field = r.field.as_deref().map(|x| format!(" [{x}]")).unwrap_or_default();
            write!(f, "  {:<4} {}{field}: expected {}, computed {}", r.status, r.check, r.expected, r.computed)?;
            if !r.note.is_empty() {
                write!(f, " ({})", r.note)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
