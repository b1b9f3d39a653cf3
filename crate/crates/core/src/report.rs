//! Verdicts with witnesses, shared by every checker.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Holds,
    Violated,
    Inconclusive,
    Error,
}

impl Verdict {
    /// Process exit status for a verdict.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Holds => 0,
            Verdict::Violated => 1,
            Verdict::Inconclusive => 2,
            Verdict::Error => 3,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Holds => "Holds",
            Verdict::Violated => "Violated",
            Verdict::Inconclusive => "Inconclusive",
            Verdict::Error => "Error",
        };
        f.write_str(s)
    }
}

impl FromStr for Verdict {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Holds" => Ok(Verdict::Holds),
            "Violated" => Ok(Verdict::Violated),
            "Inconclusive" => Ok(Verdict::Inconclusive),
            "Error" => Ok(Verdict::Error),
            other => Err(Error::Parse {
                line: 0,
                message: format!("unknown verdict `{other}`"),
            }),
        }
    }
}

/// Outcome of a checker. Violated and Inconclusive reports always carry at
/// least one witness; Holds reports carry none.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub verdict: Verdict,
    pub witnesses: Vec<String>,
    pub timing_ms: u64,
    pub command: String,
    pub input_sha256: String,
}

impl CheckReport {
    fn with(verdict: Verdict, witnesses: Vec<String>) -> Self {
        Self {
            verdict,
            witnesses,
            timing_ms: 0,
            command: String::new(),
            input_sha256: String::new(),
        }
    }

    pub fn holds() -> Self {
        Self::with(Verdict::Holds, Vec::new())
    }

    pub fn violated(witnesses: Vec<String>) -> Self {
        assert!(!witnesses.is_empty(), "violated report needs a witness");
        Self::with(Verdict::Violated, witnesses)
    }

    pub fn inconclusive(witnesses: Vec<String>) -> Self {
        assert!(!witnesses.is_empty(), "inconclusive report needs a witness");
        Self::with(Verdict::Inconclusive, witnesses)
    }

    pub fn error(message: impl Into<String>) -> Self {
        Self::with(Verdict::Error, vec![message.into()])
    }

    /// Holds when there are no witnesses, Violated otherwise.
    pub fn from_witnesses(witnesses: Vec<String>) -> Self {
        if witnesses.is_empty() {
            Self::holds()
        } else {
            Self::violated(witnesses)
        }
    }

    pub fn is_holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn is_violated(&self) -> bool {
        self.verdict == Verdict::Violated
    }

    pub fn is_inconclusive(&self) -> bool {
        self.verdict == Verdict::Inconclusive
    }

    pub fn is_error(&self) -> bool {
        self.verdict == Verdict::Error
    }

    pub fn with_command(mut self, command: impl Into<String>) -> Self {
        self.command = command.into();
        self
    }

    pub fn with_input(mut self, input: &[u8]) -> Self {
        self.input_sha256 = sha256_hex(input);
        self
    }

    pub fn with_timing(mut self, started: Instant) -> Self {
        self.timing_ms = started.elapsed().as_millis() as u64;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Line-based rendering; `witness` lines repeat once per witness.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "verdict: {}\ncommand: {}\ninput_sha256: {}\ntiming_ms: {}\n",
            self.verdict, self.command, self.input_sha256, self.timing_ms
        );
        for w in &self.witnesses {
            out.push_str("witness: ");
            out.push_str(w);
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut report = Self::holds();
        let mut saw_verdict = false;
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once(": ")
                .or_else(|| line.split_once(':'))
                .ok_or(Error::Parse {
                    line: i + 1,
                    message: "expected `key: value`".into(),
                })?;
            let value = value.to_string();
            match key {
                "verdict" => {
                    report.verdict = value.parse()?;
                    saw_verdict = true;
                }
                "command" => report.command = value,
                "input_sha256" => report.input_sha256 = value,
                "timing_ms" => {
                    report.timing_ms = value.parse().map_err(|_| Error::Parse {
                        line: i + 1,
                        message: "timing_ms is not an integer".into(),
                    })?
                }
                "witness" => report.witnesses.push(value),
                other => {
                    return Err(Error::Parse {
                        line: i + 1,
                        message: format!("unknown report field `{other}`"),
                    })
                }
            }
        }
        if !saw_verdict {
            return Err(Error::Parse {
                line: 0,
                message: "missing verdict".into(),
            });
        }
        Ok(report)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}
