// Exact recursive multiplication of rational matrices, with operation counts
// compared to the closed-form prediction.
//
//     cargo run --example recursive_multiply

use volume_strassen::engine::{multiply_naive, multiply_recursive, CountModel, DenseMatrix};
use volume_strassen::{build_algorithm, canonical_strassen_params, Field, Scalar};

fn matrix(n: usize, f: impl Fn(usize, usize) -> Scalar) -> volume_strassen::Result<DenseMatrix<Scalar>> {
    DenseMatrix::from_rows((0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect())
}

pub fn run_example() -> volume_strassen::Result<()> {
    let alg = build_algorithm(&canonical_strassen_params(Field::Rational))?;
    let model = CountModel::of(&alg);

    // 5x5 is padded to 8x8.
    let a = matrix(5, |i, j| Scalar::ratio(i as i64 - j as i64, 1 + j as i64).unwrap())?;
    let b = matrix(5, |i, j| Scalar::ratio(2 * i as i64 + j as i64 - 3, 7).unwrap())?;
    let (p, _) = multiply_recursive(&alg, &a, &b, 1)?;
    assert_eq!(p, multiply_naive(&a, &b)?);
    for row in p.rows() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        println!("  {}", cells.join("  "));
    }

    for (n, cutoff) in [(8, 1), (32, 1), (32, 4), (64, 16)] {
        let id = DenseMatrix::identity(n, Field::Rational);
        let (_, counts) = multiply_recursive(&alg, &id, &id, cutoff)?;
        let predicted = model.predict_for(n, cutoff);
        println!(
            "n = {n:>3}, cutoff {cutoff:>2}: {} leaf products, {} scalar mults, {} additions",
            counts.base_multiplications, counts.scalar_multiplications, counts.scalar_additions
        );
        assert_eq!(counts, predicted);
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
