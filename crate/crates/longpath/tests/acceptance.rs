//! Runs the ten acceptance criteria and prints one line per criterion.
//! Exits non-zero when any criterion fails.

use std::process::ExitCode;

use longpath::suites::{run_all, summary_table, SuiteOptions};

fn main() -> ExitCode {
    let reports = match run_all(&SuiteOptions::default()) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("acceptance: {e}");
            return ExitCode::FAILURE;
        }
    };
    print!("{}", summary_table(&reports));
    let passed = reports.iter().filter(|r| r.passed).count();
    println!("acceptance: {passed}/{} criteria passed", reports.len());
    if passed == reports.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
