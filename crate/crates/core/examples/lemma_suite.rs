// Runs the randomized identity checks over Q and GF(2).
//
//     cargo run --example lemma_suite -- 0 200

use volume_strassen::suite::{run_lemma_suite, SuiteConfig};
use volume_strassen::Field;

pub fn run_example_with(seed: u64, trials: usize) -> volume_strassen::Result<()> {
    for field in [Field::Rational, Field::Prime(2)] {
        let report = run_lemma_suite(&SuiteConfig::new(seed, trials, field));
        println!("over {field}, seed {seed}, {trials} trials:");
        print!("{report}");
        assert!(report.passed());
    }
    Ok(())
}

pub fn run_example() -> volume_strassen::Result<()> {
    run_example_with(0, 20)
}

fn main() {
    let mut args = std::env::args().skip(1);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(0);
    let trials = args.next().and_then(|s| s.parse().ok()).unwrap_or(100);
    if let Err(e) = run_example_with(seed, trials) {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
