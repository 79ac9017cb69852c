use serde::Serialize;
use serde_json::Value;

use pte_core::Error;

use crate::Format;

pub const EXIT_VERIFICATION: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

pub fn exit_code(err: &Error) -> u8 {
    match err {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

/// JSON envelope around every command's payload. `elapsed_ms` is the only
/// field that varies between runs with identical inputs.
#[derive(Debug, Serialize)]
pub struct Envelope<'a> {
    pub command: &'a str,
    pub params: &'a Value,
    pub result: &'a Value,
    pub elapsed_ms: u64,
}

#[derive(Debug)]
pub struct CommandOutput {
    pub command: &'static str,
    pub params: Value,
    pub result: Value,
    pub elapsed_ms: u64,
    pub csv: String,
    pub plain: String,
    pub passed: bool,
    /// Printed to stderr when `passed` is false.
    pub diagnostics: Option<String>,
}

impl CommandOutput {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let env = Envelope {
                    command: self.command,
                    params: &self.params,
                    result: &self.result,
                    elapsed_ms: self.elapsed_ms,
                };
                let mut s = serde_json::to_string_pretty(&env).expect("json values always serialize");
                s.push('\n');
                s
            }
            Format::Csv => self.csv.clone(),
            Format::Plain => self.plain.clone(),
        }
    }
}
