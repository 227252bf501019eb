use puiseux_tree_cli::{run, EXIT_FAIL, EXIT_OK, EXIT_USAGE};

fn ptree(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("ptree").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn hp_distance_of_first_sequence_points() {
    let (code, out, _) = ptree(&["dist", "hp", "--z1", "0;1", "--z2", "X^(-1/2);X^(-1/2)"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "1/2");
}

#[test]
fn tree_commands() {
    let (code, out, _) = ptree(&["project", "--z", "X + X^(-2) ; X^(-1)"]);
    assert_eq!((code, out.trim()), (EXIT_OK, "X ; -1"));
    let (code, out, _) = ptree(&["dist", "tree", "--p1", "X ; 0", "--p2", "0 ; -1"]);
    assert_eq!((code, out.trim()), (EXIT_OK, "3"));
    let (code, out, _) =
        ptree(&["median", "--p1", "0;-2", "--p2", "X^(-1/2);-2", "--p3", "0;0"]);
    assert_eq!((code, out.trim()), (EXIT_OK, "0 ; -1/2"));
}

#[test]
fn obstruction_for_zero() {
    let (code, out, _) = ptree(&["verify", "obstruction", "--a", "0", "--max-n", "8"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("n* = 2"), "{out}");
    let (code, out, _) =
        ptree(&["verify", "obstruction", "--a", "0", "--max-n", "8", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["command"], "verify obstruction");
    assert_eq!(doc["summary"]["pass"], 1);
    assert_eq!(doc["checks"][0]["status"], "pass");
}

#[test]
fn skip_is_not_failure() {
    let (code, out, _) = ptree(&["verify", "obstruction", "--a", "X^(-1/2) + X^(-3/4) + X^(-7/8) + X^(-15/16)", "--max-n", "3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("SKIP"), "{out}");
}

#[test]
fn small_verifications_pass() {
    for args in [
        &["verify", "cauchy", "--max-n", "6"][..],
        &["verify", "branching", "--max-n", "4", "--seed", "3"],
        &["verify", "vertical", "--x", "0", "--a", "X^(-1/2) + X^(-3/4)", "--heights", "1/4"],
        &["verify", "axioms", "--samples", "40"],
        &["verify", "crossratio", "--samples", "20", "--window", "16"],
    ] {
        let (code, out, err) = ptree(args);
        assert_eq!(code, EXIT_OK, "{args:?}\n{out}\n{err}");
        assert!(out.contains("fail=0"), "{out}");
    }
}

#[test]
fn usage_errors() {
    let (code, _, err) = ptree(&["dist", "hp", "--z1", "0;0", "--z2", "0;1"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("series :="), "{err}");
    let (code, _, err) = ptree(&["dist", "hp", "--z1", "0;X^(1/0)", "--z2", "0;1"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("zero denominator at byte 7"), "{err}");
    assert_eq!(ptree(&["verify", "nothing"]).0, EXIT_USAGE);
    assert_eq!(ptree(&["verify", "all", "--window", "0"]).0, EXIT_USAGE);
    assert_eq!(ptree(&["verify", "vertical", "--a", "0"]).0, EXIT_USAGE);
    assert_eq!(ptree(&["verify", "vertical", "--heights", "-1"]).0, EXIT_USAGE);
    let (code, out, _) = ptree(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("verify"));
}

#[test]
fn failing_check_exits_two() {
    // a window too small for any circle expansion leaves the oracle undecided
    let (code, out, _) = ptree(&["verify", "crossratio", "--samples", "10", "--window", "1/8"]);
    assert_eq!(code, EXIT_FAIL, "{out}");
}
