//! The `.plp` problem and `.plev` evidence file formats, driven through the
//! same entry point the `plogic` binary uses.

use std::io::Write as _;

fn main() {
    let problem = "\
# Modus ponens with a conjunctive antecedent.
option schema conj-mp
sentence A1 prior 0.8
sentence A2 prior 0.7
sentence A3 prior 0.6
sentence \"A1 & A2 & A3 -> B\" prior 0.8
target B
";
    let evidence = "\
prior-solution 0.2 0.2 0.2 0.2 0.2
assess A2 auto
assess A3 auto
evidence on A3 likelihood 0.8 0.4
";

    let dir = std::env::temp_dir();
    let problem_path = dir.join("plogic-example.plp");
    let evidence_path = dir.join("plogic-example.plev");
    std::fs::write(&problem_path, problem).unwrap();
    std::fs::write(&evidence_path, evidence).unwrap();
    let problem_path = problem_path.to_string_lossy().into_owned();
    let evidence_path = evidence_path.to_string_lossy().into_owned();

    for args in [
        vec!["worlds", problem_path.as_str()],
        vec!["compress", problem_path.as_str()],
        vec!["entail", problem_path.as_str(), "--dump-lp"],
        vec!["stats", problem_path.as_str()],
        vec![
            "revise",
            problem_path.as_str(),
            "--evidence",
            evidence_path.as_str(),
        ],
    ] {
        println!("$ plogic {}", args.join(" "));
        let output = plogic::cli::run(&args);
        print!("{}", output.stdout);
        let _ = std::io::stderr().write_all(output.stderr.as_bytes());
        assert_eq!(output.code, 0);
        println!();
    }
}
