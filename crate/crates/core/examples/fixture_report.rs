//! The quick fixture suite, as printed by `homalg report --quick`.

use homalg::report::{format_table, run_suite, SuiteSize};

fn main() {
    let results = run_suite(SuiteSize::quick());
    print!("{}", format_table(&results));
}
