#[allow(dead_code)]
mod construct_code {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/construct_code.rs"
    ));
}

#[allow(dead_code)]
mod lattice_bounds {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/lattice_bounds.rs"
    ));
}

#[allow(dead_code)]
mod distance_report {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/distance_report.rs"
    ));
}

#[allow(dead_code)]
mod torus_walks {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/torus_walks.rs"
    ));
}

#[allow(dead_code)]
mod square_roots {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/square_roots.rs"
    ));
}

#[allow(dead_code)]
mod equivalences {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/equivalences.rs"
    ));
}

#[allow(dead_code)]
mod sweep_catalog {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/sweep_catalog.rs"
    ));
}

#[test]
fn construct_code_example_runs() {
    construct_code::run_example().expect("construct_code example should run");
}

#[test]
fn lattice_bounds_example_runs() {
    lattice_bounds::run_example().expect("lattice_bounds example should run");
}

#[test]
fn distance_report_example_runs() {
    distance_report::run_example().expect("distance_report example should run");
}

#[test]
fn torus_walks_example_runs() {
    torus_walks::run_example().expect("torus_walks example should run");
}

#[test]
fn square_roots_example_runs() {
    square_roots::run_example().expect("square_roots example should run");
}

#[test]
fn equivalences_example_runs() {
    equivalences::run_example().expect("equivalences example should run");
}

#[test]
fn sweep_catalog_example_runs() {
    sweep_catalog::run_example().expect("sweep_catalog example should run");
}
