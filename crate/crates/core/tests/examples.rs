#[allow(dead_code)]
mod strassen_demo {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/strassen_demo.rs"));
}

#[test]
fn strassen_demo_runs() {
    strassen_demo::run_example().expect("strassen_demo example should run");
}

#[allow(dead_code)]
mod generate_algorithm {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/generate_algorithm.rs"));
}

#[test]
fn generate_algorithm_runs() {
    generate_algorithm::run_example().expect("generate_algorithm example should run");
}

#[allow(dead_code)]
mod prime_fields {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/prime_fields.rs"));
}

#[test]
fn prime_fields_runs() {
    prime_fields::run_example().expect("prime_fields example should run");
}

#[allow(dead_code)]
mod lemma_suite {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/lemma_suite.rs"));
}

#[test]
fn lemma_suite_runs() {
    lemma_suite::run_example().expect("lemma_suite example should run");
}

#[allow(dead_code)]
mod recursive_multiply {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/recursive_multiply.rs"));
}

#[test]
fn recursive_multiply_runs() {
    recursive_multiply::run_example().expect("recursive_multiply example should run");
}

#[allow(dead_code)]
mod float_bench {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/float_bench.rs"));
}

#[test]
fn float_bench_runs() {
    float_bench::run_example().expect("float_bench example should run");
}

#[allow(dead_code)]
mod export_factors {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/export_factors.rs"));
}

#[test]
fn export_factors_runs() {
    export_factors::run_example().expect("export_factors example should run");
}

#[allow(dead_code)]
mod file_pipeline {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/file_pipeline.rs"));
}

#[test]
fn file_pipeline_runs() {
    file_pipeline::run_example().expect("file_pipeline example should run");
}
