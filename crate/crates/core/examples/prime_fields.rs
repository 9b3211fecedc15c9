// The construction works over any field with three pairwise independent
// vectors in k^2, including GF(2) where 1 = -1.
//
//     cargo run --example prime_fields

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use volume_strassen::sample::valid_params;
use volume_strassen::{build_algorithm, canonical_strassen_params, verify_bilinear, Field};

pub fn run_example() -> volume_strassen::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for p in [2, 3, 5, 7, 101] {
        let field = Field::prime(p)?;
        let canonical = build_algorithm(&canonical_strassen_params(field))?;
        assert!(verify_bilinear(&canonical).passed);

        let mut verified = 0;
        for _ in 0..20 {
            let alg = build_algorithm(&valid_params(&mut rng, field))?;
            verified += verify_bilinear(&alg).passed as usize;
        }
        println!("{field}: canonical ok, {verified}/20 random algorithms verified");
        assert_eq!(verified, 20);
    }

    // Over GF(2) the canonical algorithm is Strassen's with all signs gone.
    let gf2 = build_algorithm(&canonical_strassen_params(Field::Prime(2)))?;
    for t in gf2.terms() {
        println!("  X = {}  Y = {}  Z = {}", t.x, t.y, t.z);
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
