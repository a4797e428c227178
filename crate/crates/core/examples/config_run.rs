//! Drive a run from TOML, the way the command line does, and print the
//! JSON report.
//!
//! ```text
//! cargo run --example config_run -- path/to/run.toml
//! ```

use twonorm::config::{Overrides, RunConfig};
use twonorm::report::{config_digest, RunReport};
use twonorm::run;

const DEFAULT: &str = r#"
[schedule]
window = [1000, 2000]
epsilon = 0.02

[sequence.root]
expr = "(sqrt(n), sqrt(n))"
expect = { quasi-cauchy = "pass" }

[sequence.toward-one]
expr = "(1 + 1/n, 1 + 1/n)"
limit = [1, 1]

[function.wave]
expr = "(sin(x1), cos(x2))"

[probes]
run = ["ward", "sequential"]
"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => DEFAULT.to_string(),
    };
    let ov = Overrides::default();
    let cfg = RunConfig::from_toml(&text, &ov)?;

    let mut report = RunReport::new("probe", cfg.seed, config_digest([text.as_str()], &ov));
    report.reports.extend(run::classify(&cfg)?);
    if !cfg.functions.is_empty() {
        report.reports.extend(run::probe(&cfg)?);
    }
    print!("{}", report.to_json());
    eprintln!("as expected: {}", report.as_expected());
    Ok(())
}
