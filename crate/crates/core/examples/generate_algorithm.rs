// Builds a rank-7 algorithm from three non-colinear vectors of your choice.
// Each λ_i is taken to be the form vanishing on v_i.
//
//     cargo run --example generate_algorithm

use volume_strassen::io::algorithm_to_json;
use volume_strassen::{
    build_algorithm, denominator, validate_params, verify_bilinear, Field, Params, Vec2,
};

pub fn run_example() -> volume_strassen::Result<()> {
    let q = Field::Rational;
    let params = Params::from_vectors([
        Vec2::from_ints(q, 1, 2),
        Vec2::from_ints(q, 3, 1),
        Vec2::from_ints(q, -1, 1),
    ])?;

    let report = validate_params(&params);
    println!("{report}");
    println!("D = {}", denominator(&params)?);

    let alg = build_algorithm(&params)?;
    let check = verify_bilinear(&alg);
    println!("rank {}, {}/{} basis pairs correct", alg.rank(), check.checked_count - check.failures.len(), check.checked_count);
    assert!(check.passed);

    // Colinear vectors are rejected with the failing condition named.
    let bad = Params::from_vectors([
        Vec2::from_ints(q, 1, 2),
        Vec2::from_ints(q, 2, 4),
        Vec2::from_ints(q, -1, 1),
    ])?;
    println!("degenerate choice: {}", validate_params(&bad).diagnostic().unwrap_or_default());
    assert!(build_algorithm(&bad).is_err());

    print!("{}", algorithm_to_json(&alg));
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
