//! The command line driven in process on an inline job file.

fn main() {
    let dir = std::env::temp_dir().join("ramlimit-example");
    std::fs::create_dir_all(&dir).unwrap();
    let job = dir.join("conic.json");
    std::fs::write(
        &job,
        r#"{"family": ["X0*X1", "X2^2"], "factorization": [{"factor": "X0"}, {"factor": "X1"}],
            "system": {"pencil": [1, 2, 3]}}"#,
    )
    .unwrap();
    let args = ["ramlimit", "dual-limit", job.to_str().unwrap(), "--verify"];
    let code = ramlimit::cli::run(args, &mut std::io::stdout(), &mut std::io::stderr());
    println!("exit {code}");
}
