//! Every acceptance criterion at its stated tolerance, one line each.

use std::process::ExitCode;

use solvtrip::permcore::Caps;
use solvtrip_cli::suite::{checks, run_check, Context};

fn main() -> ExitCode {
    let ctx = Context::new(Caps::default());
    let criteria: Vec<_> = checks().into_iter().filter(|c| c.criterion.is_some()).collect();
    assert_eq!(criteria.len(), 13);
    let mut failed = Vec::new();
    for check in &criteria {
        let r = run_check(&ctx, check);
        println!("{}", r.line());
        if !r.passed() {
            failed.push(r.criterion.unwrap_or(0));
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria pass", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
