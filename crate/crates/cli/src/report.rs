use serde::Serialize;
use serde_json::Value;

/// Bump on any change to the fields below or to the shape of `detail`.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct Config {
    pub command: String,
    pub selectors: Vec<String>,
    pub samples: usize,
    pub seed: u64,
    pub tolerances: Vec<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub config: Config,
    pub checks: Vec<Check>,
    pub passed: usize,
    pub failed: usize,
    pub pass: bool,
    pub wall_time_s: f64,
}

impl Report {
    pub fn new(config: Config, checks: Vec<Check>, wall_time_s: f64) -> Report {
        let passed = checks.iter().filter(|c| c.pass).count();
        Report {
            schema_version: SCHEMA_VERSION,
            config,
            failed: checks.len() - passed,
            passed,
            pass: passed == checks.len(),
            checks,
            wall_time_s,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out += &format!("{} {}\n", if c.pass { "PASS" } else { "FAIL" }, c.name);
        }
        out += &format!(
            "{}: {} passed, {} failed ({:.2}s)\n",
            if self.pass { "PASS" } else { "FAIL" },
            self.passed,
            self.failed,
            self.wall_time_s
        );
        out
    }
}
