// Drive the `gbd` command line in-process and read its JSON report.
//
// $ cargo run --example cli_in_process

use gbdetect::cli::{run, RunReport};

fn main() {
    let path = std::env::temp_dir().join("gbd-example.poly");
    std::fs::write(&path, "vars x y\nx^2 + x*y\ny^2\n").unwrap();
    let path = path.to_str().unwrap();

    let text = run(["detect", path]);
    print!("{}", text.stdout);
    println!("exit code {}", text.code);

    let json = run(["verify", path, "--weights", "1/2,1/4", "--json"]);
    let report: RunReport = serde_json::from_str(&json.stdout).unwrap();
    println!("digest {}", report.input_digest);
    println!("groebner {}", report.result["groebner"]);

    let bad = run(["verify", path, "--weights", "0,1"]);
    print!("exit code {}: {}", bad.code, bad.stderr);
}
