// Times recursive against naive multiplication on random f64 matrices.
//
//     cargo run --release --example float_bench -- 512 64 5

use volume_strassen::engine::bench;
use volume_strassen::{build_algorithm, canonical_strassen_params, Field};

pub fn run_example_with(n: usize, cutoff: usize, reps: usize) -> volume_strassen::Result<()> {
    let alg = build_algorithm(&canonical_strassen_params(Field::Rational))?;
    let report = bench(&alg, n, cutoff, reps, 0)?;
    print!("{}", report.to_csv());
    println!(
        "speedup {:.2}x",
        report.naive_median() / report.recursive_median()
    );
    assert!(report.max_rel_error <= 1e-10);
    Ok(())
}

pub fn run_example() -> volume_strassen::Result<()> {
    run_example_with(128, 32, 2)
}

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let n = args.first().copied().unwrap_or(256);
    let cutoff = args.get(1).copied().unwrap_or(64);
    let reps = args.get(2).copied().unwrap_or(5);
    if let Err(e) = run_example_with(n, cutoff, reps) {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
