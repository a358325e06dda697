use std::fmt::Display;
use std::io::{self, Write};
use std::path::Path;
use std::process::ExitCode;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Violations,
    Error,
}

#[derive(Debug)]
enum Line {
    Human(String),
    Witness(String),
}

/// Outcome of a command: status, human-readable lines, and `!`-prefixed
/// witness lines, printed in the order they were added.
#[derive(Debug)]
pub struct Report {
    status: Status,
    lines: Vec<Line>,
    error: Option<String>,
}

/// A command failure that maps to exit code 2.
#[derive(Debug)]
pub struct Failure {
    message: String,
    witnesses: Vec<String>,
}

impl Failure {
    pub fn new(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            witnesses: Vec::new(),
        }
    }

    pub fn with_witnesses(mut self, witnesses: Vec<String>) -> Self {
        self.witnesses = witnesses;
        self
    }

    pub fn io(path: &Path, err: impl Display) -> Self {
        Failure::new(format!("{}: {err}", path.display()))
    }
}

impl From<cimatroid::Error> for Failure {
    fn from(e: cimatroid::Error) -> Self {
        Failure::new(e.to_string())
    }
}

impl Report {
    pub fn new() -> Self {
        Report {
            status: Status::Pass,
            lines: Vec::new(),
            error: None,
        }
    }

    pub fn from_error(f: Failure) -> Self {
        Report {
            status: Status::Error,
            lines: f.witnesses.into_iter().map(Line::Witness).collect(),
            error: Some(f.message),
        }
    }

    pub fn say(&mut self, line: impl Into<String>) {
        self.lines.push(Line::Human(line.into()));
    }

    /// Records a violation and marks the report as failing.
    pub fn witness(&mut self, line: impl Into<String>) {
        self.lines.push(Line::Witness(line.into()));
        self.fail();
    }

    pub fn fail(&mut self) {
        if self.status == Status::Pass {
            self.status = Status::Violations;
        }
    }

    pub fn print(&self) {
        let mut out = io::stdout().lock();
        for line in &self.lines {
            let written = match line {
                Line::Human(s) => writeln!(out, "{s}"),
                Line::Witness(s) => writeln!(out, "! {s}"),
            };
            if written.is_err() {
                break;
            }
        }
        let _ = out.flush();
        if let Some(e) = &self.error {
            let _ = writeln!(io::stderr(), "error: {e}");
        }
    }

    pub fn exit_code(&self) -> ExitCode {
        match self.status {
            Status::Pass => ExitCode::SUCCESS,
            Status::Violations => ExitCode::from(1),
            Status::Error => ExitCode::from(2),
        }
    }
}
