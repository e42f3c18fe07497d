//! Keeps the examples honest: the assertion-bearing ones are compiled in
//! and executed as tests.

mod worked_triple {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/worked_triple.rs"
    ));
}

mod classify_lattice {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/classify_lattice.rs"
    ));
}

#[test]
fn worked_triple_example_runs() {
    worked_triple::main().expect("worked_triple example should run");
}

#[test]
fn classify_lattice_example_runs() {
    classify_lattice::main().expect("classify_lattice example should run");
}
