fn main() {
    let args: Vec<String> = std::env::args().collect();
    if args.len() > 1 {
        let report = dgal_core::scenarios::run_scenario(&args[1]).expect("known scenario");
        println!("{report}");
    } else {
        for report in dgal_core::scenarios::run_all() {
            println!(
                "{} {}",
                if report.passed() { "PASS" } else { "FAIL" },
                report.scenario
            );
        }
    }
}
