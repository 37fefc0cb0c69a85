use serde::Serialize;

use dpf_core::DegenerateOrder;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const NEGATIVE: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const THEOREM_VIOLATION: i32 = 3;
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub nodes: Option<u64>,
    pub backtracks: Option<u64>,
    pub millis: Option<u64>,
}

/// The result of one command, printed as text or as JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<[usize; 2]>>,
    pub diagnostics: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub stats: Stats,
    /// Text the command produced (generated files, colorings, reductions).
    #[serde(skip_serializing_if = "String::is_empty")]
    pub output: String,
    #[serde(skip)]
    pub code: i32,
}

impl Report {
    pub fn new(status: &str, code: i32) -> Self {
        Report {
            status: status.to_string(),
            witness: None,
            diagnostics: Vec::new(),
            seed: None,
            stats: Stats::default(),
            output: String::new(),
            code,
        }
    }

    pub fn error(code: i32, message: impl Into<String>) -> Self {
        let status = match code {
            exit::THEOREM_VIOLATION => "theorem-violation",
            exit::USAGE => "usage-error",
            _ => "error",
        };
        Report::new(status, code).with_diagnostic(message)
    }

    pub fn with_diagnostic(mut self, message: impl Into<String>) -> Self {
        self.diagnostics.push(message.into());
        self
    }

    pub fn with_witness(mut self, order: &DegenerateOrder) -> Self {
        self.witness = Some(order.pairs().iter().map(|p| [p.vertex, p.color]).collect());
        self
    }

    /// Human-readable form: a `# status` line, diagnostics as comments, then
    /// the command output. A witnessed coloring prints as a coloring file.
    pub fn to_text(&self) -> String {
        let mut out = format!("# {}\n", self.status);
        for d in &self.diagnostics {
            let prefix = if self.code == exit::THEOREM_VIOLATION { "THEOREM-VIOLATION: " } else { "" };
            out.push_str(&format!("# {prefix}{d}\n"));
        }
        if let (Some(n), Some(b)) = (self.stats.nodes, self.stats.backtracks) {
            out.push_str(&format!("# nodes {n} backtracks {b}\n"));
        }
        if let Some(ms) = self.stats.millis {
            out.push_str(&format!("# millis {ms}\n"));
        }
        out.push_str(&self.output);
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("reports serialize");
        s.push('\n');
        s
    }
}
