// Exports an algorithm as factor matrices U, V, W and checks the 64
// coefficient equations sum_r U[r][ij] V[r][kl] W[r][mn] = d_jk d_im d_ln.
//
//     cargo run --example export_factors

use volume_strassen::io::factors_to_json;
use volume_strassen::{
    build_algorithm, canonical_strassen_params, verify_brent, FactorMatrices, Field,
};

pub fn run_example() -> volume_strassen::Result<()> {
    let alg = build_algorithm(&canonical_strassen_params(Field::Rational))?;
    let factors = FactorMatrices::from_algorithm(&alg);
    print!("{}", factors_to_json(&factors));

    let report = verify_brent(&factors);
    println!("{}/{} equations hold", report.checked_count - report.violations.len(), report.checked_count);
    assert!(report.passed);

    // Dropping one product breaks some equations.
    let mut broken = factors.clone();
    broken.w[3] = broken.w[3].clone().map(|c| c.zero_like());
    let report = verify_brent(&broken);
    println!("without term 3: {} equations fail", report.violations.len());
    assert!(!report.passed);
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
