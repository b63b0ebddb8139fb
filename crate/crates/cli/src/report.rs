//! Run reports in a human layout or the versioned machine layout.

use std::fmt::Write as _;
use std::time::Duration;

use unigraph_core::{EdgeColoring, Graph};

/// First line of every machine report.
pub const MACHINE_HEADER: &str = "unigraph-report 1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Invalid,
    TooLarge,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Invalid => "invalid",
            Status::TooLarge => "too-large",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Invalid => 2,
            Status::TooLarge => 3,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub status: Status,
    fields: Vec<(String, String)>,
    notices: Vec<String>,
    error: Option<String>,
    pub elapsed: Duration,
}

impl Report {
    pub fn new(command: String) -> Self {
        Self {
            command,
            status: Status::Ok,
            fields: Vec::new(),
            notices: Vec::new(),
            error: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn field(&mut self, key: impl Into<String>, value: impl ToString) {
        // Values stay on one line so the machine layout is line-delimited.
        let value = value.to_string().replace('\n', " ");
        self.fields.push((key.into(), value));
    }

    pub fn notice(&mut self, text: impl Into<String>) {
        self.notices.push(text.into().replace('\n', " "));
    }

    pub fn fail(&mut self, status: Status, message: String) {
        self.status = status;
        self.error = Some(message);
    }

    /// Records `n`, `m` and the degree set of the input graph.
    pub fn fingerprint(&mut self, g: &Graph) {
        self.field("input.n", g.n());
        self.field("input.m", g.m());
        self.field("input.degree_set", join(g.degree_set().as_slice()));
    }

    pub fn render_machine(&self) -> String {
        let mut out = format!("{MACHINE_HEADER}\n");
        let _ = writeln!(out, "command={}", self.command);
        let _ = writeln!(out, "status={}", self.status.as_str());
        if let Some(e) = &self.error {
            let _ = writeln!(out, "error={e}");
        }
        for (k, v) in &self.fields {
            let _ = writeln!(out, "{k}={v}");
        }
        for n in &self.notices {
            let _ = writeln!(out, "notice={n}");
        }
        let _ = writeln!(out, "time_ms={:.3}", self.elapsed.as_secs_f64() * 1e3);
        out.push_str("end\n");
        out
    }

    pub fn render_human(&self) -> String {
        let width = self.fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in &self.fields {
            let _ = writeln!(out, "{k:width$}  {v}");
        }
        for n in &self.notices {
            let _ = writeln!(out, "note: {n}");
        }
        if let Some(e) = &self.error {
            let _ = writeln!(out, "error: {e}");
        }
        out
    }
}

pub fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// `u-v` pairs separated by spaces.
pub fn edges(g: &Graph) -> String {
    g.edges()
        .iter()
        .map(|(u, v)| format!("{u}-{v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// `u-v:c` triples in edge order, which is sorted by `u`, then `v`.
pub fn coloring(g: &Graph, c: &EdgeColoring) -> String {
    g.edges()
        .iter()
        .zip(c.colors())
        .map(|((u, v), c)| format!("{u}-{v}:{c}"))
        .collect::<Vec<_>>()
        .join(" ")
}
