use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_optseq");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env_remove("OPTSEQ_BUDGET").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Value of `key` in the first record of kind `kind`.
fn field(o: &Output, kind: &str, key: &str) -> String {
    let prefix = format!("kind={kind} ");
    let line =
        stdout(o).lines().find(|l| l.starts_with(&prefix)).unwrap_or_else(|| panic!("no {kind} record")).to_string();
    line.split(' ').find_map(|t| t.strip_prefix(&format!("{key}="))).unwrap().to_string()
}

#[test]
fn header_is_first_line() {
    for args in [&["verify", "oqs", "+i+"][..], &["catalog", "--max-m", "3"], &["search", "optimum", "-n", "3"]] {
        assert_eq!(stdout(&run(args)).lines().next(), Some("optseq-v1"));
    }
}

#[test]
fn documented_examples() {
    let o = run(&["verify", "oqs", "+i+"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(field(&o, "oqs", "spectrum"), "3,1,1");

    let o = run(&["convert", "oqs-to-gobs", "+-+++"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(field(&o, "oqs-to-gobs", "output"), "+---+++-++");

    let o = run(&["verify", "asds", "-m", "7", "--b", "1,2", "--d", "0,2", "--symmetric"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(field(&o, "asds", "class"), "asds");
    assert_eq!(field(&o, "asds", "symmetric"), "false");
}

#[test]
fn leading_hyphen_sequences_are_accepted() {
    let o = run(&["convert", "oqs-to-gobs", "-++++"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(field(&o, "oqs-to-gobs", "output"), "-+--+---++");
    assert_eq!(run(&["verify", "oqs", "-+i+j+i+-"]).status.code(), Some(0));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "oqs", "++-"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "oqs", "+++"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "gobs", "+---+++-++"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "cocycle", "-m", "3", "--lambda", "--deltas", "2"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "cocycle", "-m", "7", "--lambda", "--deltas", "2,3,8,10"]).status.code(), Some(1));
    assert_eq!(run(&["search", "asds", "-m", "5", "--k1", "5", "--k2", "5", "--mu", "0"]).status.code(), Some(1));
    for bad in [
        &["bogus"][..],
        &["verify", "oqs", "xyz"],
        &["verify", "oqs", "++++"],
        &["search", "oqs", "-m", "4"],
        &["search", "oqs", "-m", "5", "--jobs", "0"],
        &["verify"],
    ] {
        let o = run(bad);
        assert_eq!(o.status.code(), Some(2), "{bad:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn cocycle_example_row_sums() {
    let o = run(&["verify", "cocycle", "-m", "7", "--lambda", "--deltas", "2,3,8,10"]);
    let sums: Vec<i64> = field(&o, "cocycle", "row_sums").split(',').map(|s| s.parse().unwrap()).collect();
    assert_eq!(sums.len(), 14);
    assert_eq!(sums[7..].iter().filter(|s| s.abs() == 4).count(), 2);
    assert_eq!(field(&o, "cocycle", "matrix").split('/').count(), 14);
}

#[test]
fn convert_pairs_invert_each_other() {
    for f in ["+i+", "+-+++", "-+i+j+i+-", "+-j-i-j-+", "+++ijji"] {
        let phi = field(&run(&["convert", "oqs-to-gobs", f]), "oqs-to-gobs", "output");
        let back = run(&["convert", "gobs-to-oqs", &phi]);
        assert_eq!(back.status.code(), Some(0));
        assert_eq!(field(&back, "gobs-to-oqs", "output"), f);
    }
    for f in ["+i+", "+-+++", "-+i+j+i+-", "+-j-i-j-+", "+++ijji"] {
        let o = run(&["convert", "oqs-to-asds", f]);
        assert_eq!(o.status.code(), Some(0), "{f}");
        let (m, b, d) = (field(&o, "oqs-to-asds", "m"), field(&o, "oqs-to-asds", "b"), field(&o, "oqs-to-asds", "d"));
        let back = run(&["convert", "asds-to-oqs", "-m", &m, "--b", &b, "--d", &d]);
        assert_eq!(back.status.code(), Some(0), "{f}");
        let g = field(&back, "asds-to-oqs", "output");
        assert_eq!(run(&["verify", "oqs", &g]).status.code(), Some(0));
    }
    for f in ["+i+", "+-+++", "+++ijji"] {
        let o = run(&["convert", "oqs-to-cocycle", f]);
        assert_eq!(o.status.code(), Some(0));
        let m = field(&o, "oqs-to-cocycle", "m");
        let deltas = field(&o, "oqs-to-cocycle", "deltas");
        let mut args = vec!["convert", "cocycle-to-asds", "-m", &m, "--lambda"];
        if !deltas.is_empty() {
            args.extend(["--deltas", &deltas]);
        }
        assert_eq!(run(&args).status.code(), Some(0), "{f}");
    }
}

#[test]
fn budget_override() {
    let o = Command::new(BIN).args(["search", "oqs", "-m", "7"]).env("OPTSEQ_BUDGET", "10").output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(field(&o, "error", "verdict"), "false");
    let o = Command::new(BIN).args(["search", "oqs", "-m", "5"]).env("OPTSEQ_BUDGET", "1000000").output().unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn search_and_catalog_records() {
    let o = run(&["search", "oqs", "-m", "5", "--canonical"]);
    assert_eq!(field(&o, "summary", "count"), "4");
    let o = run(&["search", "oqs", "-m", "5"]);
    assert_eq!(field(&o, "summary", "count"), "140");
    let o = run(&["search", "optimum", "-n", "4", "--alphabet", "binary"]);
    assert_eq!(field(&o, "optimum", "max"), "0");

    let out = stdout(&run(&["catalog", "--max-m", "7"]));
    let rows: Vec<&str> = out.lines().filter(|l| l.starts_with("kind=catalog")).collect();
    assert_eq!(rows.len(), 4);
    assert!(rows[0].contains("m=1 raw=4 canonical=1 witness=+ ") && rows[0].ends_with("predicted=trivial"));
    assert!(rows[1].contains("m=3 raw=36 canonical=2") && rows[1].ends_with("predicted=true"));
    assert!(rows[2].contains("m=5 raw=140 canonical=4") && rows[2].ends_with("predicted=true"));
    assert!(rows[3].contains("m=7 raw=392 canonical=8") && rows[3].ends_with("predicted=true"));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let a = run(&["search", "oqs", "-m", "5", "--jobs", "1"]);
    let b = run(&["search", "oqs", "-m", "5", "--jobs", "3"]);
    assert_eq!(a.stdout, b.stdout);
}
