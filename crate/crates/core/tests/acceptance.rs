//! Release-gate suite: one test per criterion, each printing its pass/fail
//! line. Run with `cargo test --test acceptance -- --nocapture` to see the
//! table.

use hermite_zeros::selftest;

fn run(id: usize) {
    let outcome = selftest::run_criterion(id).expect("valid criterion id");
    println!("{}", outcome.summary_line());
    for detail in &outcome.details {
        println!("    {detail}");
    }
    for note in &outcome.informational {
        println!("    note: {note}");
    }
    assert!(
        outcome.passed,
        "criterion {id} failed:\n{}",
        outcome.details.join("\n")
    );
}

#[test]
fn criterion_01_operator_identity() {
    run(1);
}

#[test]
fn criterion_02_generating_function_oracle() {
    run(2);
}

#[test]
fn criterion_03_standard_real_rootedness() {
    run(3);
}

#[test]
fn criterion_04_appell_threshold_structure() {
    run(4);
}

#[test]
fn criterion_05_generalized_family_suite() {
    run(5);
}

#[test]
fn criterion_06_zero_monotonicity() {
    run(6);
}

#[test]
fn criterion_07_turan_suite() {
    run(7);
}

#[test]
fn criterion_08_sign_count_law() {
    run(8);
}

#[test]
fn criterion_09_asymptotics() {
    run(9);
}

#[test]
fn criterion_10_beardon_driver() {
    run(10);
}
