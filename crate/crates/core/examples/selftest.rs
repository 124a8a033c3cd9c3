//! The built-in corpus of hand-checked values.

fn main() {
    let report = reesmult::selftest::run_selftest();
    print!("{}", report.render_text());
    if !report.all_passed() {
        std::process::exit(1);
    }
}
