//! Prints the acceptance report and fails if any criterion is not met.

fn main() {
    let outcomes = phonon_damping_validation::run_all();
    print!("{}", phonon_damping_validation::report(&outcomes));
    if outcomes.iter().any(|o| !o.pass) {
        std::process::exit(1);
    }
}
