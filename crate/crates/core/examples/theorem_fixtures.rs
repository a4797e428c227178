//! List the built-in theorem cases, run one family by glob and tally.

use std::collections::BTreeMap;

use twonorm::config::Overrides;
use twonorm::theorems::{load_cases, run_case, select_cases};
use twonorm::Status;

fn main() -> twonorm::Result<()> {
    let selector = std::env::args().nth(1).unwrap_or_else(|| "thm-*".into());
    let cases = load_cases(None, &Overrides::default())?;
    for c in &cases {
        println!("{:<32} {}", c.id, c.source.display());
    }
    let mut tally: BTreeMap<String, [usize; 3]> = BTreeMap::new();
    for case in select_cases(&cases, &selector)? {
        for r in run_case(case)? {
            let slot = match r.status {
                Status::Pass => 0,
                Status::Fail => 1,
                Status::Inconclusive => 2,
            };
            tally.entry(case.id.clone()).or_default()[slot] += 1;
        }
    }
    println!("\n{:<32} pass fail inconclusive", "case");
    for (id, [p, f, i]) in tally {
        println!("{id:<32} {p:>4} {f:>4} {i:>12}");
    }
    Ok(())
}
