//! End-to-end acceptance suite: one test per entry in the verification
//! registry, each printing a single PASS/FAIL line.

use dmodrep::verify::{run_check, VerifyConfig, CHECKS};

fn run(name: &str) {
    let cfg = VerifyConfig::default();
    match run_check(name, &cfg).expect("check is registered") {
        Ok(detail) => println!("PASS {name}: {detail}"),
        Err(reason) => panic!("FAIL {name}: {reason}"),
    }
}

#[test]
fn n8_criticality() {
    run("n8-criticality");
}

#[test]
fn n8_middle_never() {
    run("n8-middle-never");
}

#[test]
fn n7_closure() {
    run("n7-closure");
}

#[test]
fn n4_alpha_orbit() {
    run("n4-alpha-orbit");
}

#[test]
fn conformal_relations() {
    run("conformal-relations");
}

#[test]
fn graded_jacobi() {
    run("graded-jacobi");
}

#[test]
fn table_golden() {
    run("table-golden");
}

#[test]
fn curvature_oracle() {
    run("curvature-oracle");
}

#[test]
fn duality() {
    run("duality");
}

#[test]
fn measure_dimension() {
    run("measure-dimension");
}

#[test]
fn golden_ratio() {
    run("golden-ratio");
}

#[test]
fn basis_independence() {
    run("basis-independence");
}

#[test]
fn clifford_relations() {
    run("clifford-relations");
}

#[test]
fn registry_is_fully_exercised() {
    let names: Vec<&str> = CHECKS.iter().map(|(n, _)| *n).collect();
    assert_eq!(
        names,
        [
            "n8-criticality",
            "n8-middle-never",
            "n7-closure",
            "n4-alpha-orbit",
            "conformal-relations",
            "graded-jacobi",
            "table-golden",
            "curvature-oracle",
            "duality",
            "measure-dimension",
            "golden-ratio",
            "basis-independence",
            "clifford-relations",
        ]
    );
}
