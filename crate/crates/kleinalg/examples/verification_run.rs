//! A full verification run through the library API (the `verify`
//! subcommand drives exactly this), with the structured report rendered at
//! the end.
//!
//! Run with: cargo run --example verification_run

use kleinalg::checks::{render_structured, render_text, run_all, RunConfig};

fn main() {
    let cfg = RunConfig {
        window: 3,
        q_list: vec![5, 13],
        census_n: vec![2, 4],
        seed: 42,
    };
    cfg.validate().expect("default-style config is valid");

    let report = run_all(&cfg);
    print!("{}", render_text(&report));

    println!("--- structured form (deterministic at a fixed seed) ---");
    let doc = render_structured(&report);
    // print just the head; the full document is a single JSON value
    for line in doc.lines().take(12) {
        println!("{line}");
    }
    println!("... ({} bytes total)", doc.len());
    std::process::exit(i32::from(!report.all_pass()));
}
