// Derives Strassen's seven products from the canonical parameters and
// checks the text against the stored golden copy.
//
//     cargo run --example strassen_demo

use volume_strassen::demo::run_demo;

pub fn run_example() -> volume_strassen::Result<()> {
    let (text, matches_golden) = run_demo()?;
    print!("{text}");
    assert!(matches_golden, "demo drifted from the golden text");
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
