// The command-line pipeline run from files: params -> gen -> verify ->
// multiply, using the same entry point as the `strassen` binary.
//
//     cargo run --example file_pipeline

use std::fs;

use volume_strassen::cli::run;
use volume_strassen::io::params_to_json;
use volume_strassen::{canonical_strassen_params, Field};

fn strassen(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("strassen").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8_lossy(&out).into_owned() + &String::from_utf8_lossy(&err))
}

pub fn run_example() -> volume_strassen::Result<()> {
    let dir = std::env::temp_dir().join(format!("strassen-pipeline-{}", std::process::id()));
    fs::create_dir_all(&dir)?;
    let path = |name: &str| dir.join(name).to_string_lossy().into_owned();

    fs::write(path("params.json"), params_to_json(&canonical_strassen_params(Field::Prime(7))))?;
    fs::write(path("a.csv"), "1,2,3\n4,5,6\n0,1,2\n")?;
    fs::write(path("b.csv"), "6,0,1\n5,1,2\n-1,3,3\n")?;

    let (code, _) = strassen(&["gen", &path("params.json"), "-o", &path("alg.json")]);
    assert_eq!(code, 0);
    let (code, text) = strassen(&["verify", &path("alg.json")]);
    print!("verify: {text}");
    assert_eq!(code, 0);
    let (code, text) = strassen(&["multiply", &path("alg.json"), &path("a.csv"), &path("b.csv")]);
    println!("product over GF(7):\n{text}");
    assert_eq!(code, 0);

    fs::remove_dir_all(&dir)?;
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
