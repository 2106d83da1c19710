use skewpbw_cli::run;

fn cli(args: &[&str]) -> skewpbw_cli::CommandResult {
    run(std::iter::once("skewpbw").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> String {
    let r = cli(args);
    assert_eq!(r.exit_code, 0, "{args:?}: {}", r.stderr);
    r.stdout
}

#[test]
fn normalize_weyl_commutator() {
    assert_eq!(ok(&["normalize", "y*x"]), "x*y + 1\n");
}

#[test]
fn normalize_leading_minus() {
    assert_eq!(ok(&["normalize", "-y*x"]), "-x*y - 1\n");
}

#[test]
fn mul_matches_normalize() {
    assert_eq!(ok(&["mul", "y", "x^2"]), ok(&["normalize", "y*x^2"]));
    assert_eq!(ok(&["mul", "y", "x^2"]), "x^2*y + 2*x\n");
}

#[test]
fn normalize_round_trip() {
    for expr in ["y^3*x^2", "(y + x)^3", "y*x*y - 2/3*x", "-(x*y)^2 + y"] {
        let once = ok(&["normalize", expr]);
        let twice = ok(&["normalize", once.trim_end()]);
        assert_eq!(once, twice, "{expr}");
    }
}

#[test]
fn weyl2_basis_collapses_to_y1() {
    assert_eq!(ok(&["--algebra", "weyl2", "gb", "x1*y1", "x2*y1^2 - y1"]), "y1\n");
}

#[test]
fn global_flags_after_positionals() {
    assert_eq!(ok(&["gb", "x1*y1", "x2*y1^2 - y1", "--algebra", "weyl2"]), "y1\n");
}

#[test]
fn reduce_reports_remainder_and_cofactor() {
    let out = ok(&["reduce", "x^2*y", "--by", "x*y - 1"]);
    assert_eq!(out, "remainder: x\ncofactors:\n  (x) * (x*y - 1)\n");
}

#[test]
fn member_certificate_in_quantum_plane() {
    let out = ok(&["--algebra", "qplane_q2", "member", "x*y", "--in", "x", "y"]);
    assert!(out.starts_with("member: true\n"), "{out}");
    assert!(out.contains("remainder: 0\n"));
    assert!(out.contains("certificate:\n"));
}

#[test]
fn non_member() {
    let out = ok(&["--algebra", "qplane_q2", "member", "1", "--in", "x"]);
    assert!(out.starts_with("member: false\n"), "{out}");
    assert!(out.contains("remainder: 1\n"));
}

#[test]
fn symbol_drops_lower_degree() {
    assert_eq!(ok(&["symbol", "y*x + x"]), "x*y\n");
}

#[test]
fn graded_weyl_algebra_is_commutative() {
    let out = ok(&["gr-algebra"]);
    assert!(out.contains("vars x y"), "{out}");
    let r = cli(&["--algebra", "weyl1", "--json", "gr-algebra"]);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["quasi_commutative"], true);
}

#[test]
fn gap_demo_weyl2() {
    let out = ok(&["--algebra", "weyl2", "gap-demo", "x1*y1 + x2", "x2*y1^2 - y1"]);
    let expected_tail = "\
Gr(I) generated by:
  y1
  x2
symbols of the generators:
  x1*y1
  x2*y1^2
Groebner basis of the ideal they generate:
  x1*y1
  x2*y1^2
in Gr(I) but not in the ideal of the symbols:
  y1 (normal form y1)
  x2 (normal form x2)
";
    assert!(out.ends_with(expected_tail), "{out}");
    assert!(out.starts_with("Groebner basis of I:\n  y1\n  x2\n"), "{out}");
}

#[test]
fn transfer_both_directions() {
    let to = ok(&["transfer", "--direction", "to-graded", "x*y - 1"]);
    assert!(to.contains("graded basis:\n  x*y\n"), "{to}");
    let from = ok(&["transfer", "--direction", "from-graded", "x*y", "--lifts", "x*y - 1"]);
    assert!(from.ends_with("basis:\n  x*y - 1\nverified: true\n"), "{from}");
}

#[test]
fn module_basis_of_coprime_pair() {
    let out = ok(&["--algebra", "qplane_q2", "module-gb", "[x, 1]", "[y, 0]"]);
    assert_eq!(out, "[0, y]\n[y, 0]\n[x, 1]\n");
}

#[test]
fn check_consistent_presentation() {
    for alg in ["weyl1", "weyl2", "qplane_q2", "qplane_q2_gf7", "usl2", "heisenberg"] {
        assert_eq!(ok(&["--algebra", alg, "check"]), "consistent\n", "{alg}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(cli(&["normalize", "y*x"]).exit_code, 0);
    assert_eq!(cli(&["frobnicate"]).exit_code, 1);
    assert_eq!(cli(&["--algebra", "no_such_algebra", "normalize", "1"]).exit_code, 1);
    assert_eq!(cli(&["--order", "lex", "normalize", "1"]).exit_code, 1);
    assert_eq!(cli(&["normalize", "x*+"]).exit_code, 2);
    assert_eq!(cli(&["normalize", "z"]).exit_code, 2);
    assert_eq!(cli(&["--algebra", "inconsistent_demo", "gb", "x"]).exit_code, 3);
    assert_eq!(cli(&["--algebra", "inconsistent_demo", "check"]).exit_code, 3);
    assert_eq!(cli(&["reduce", "x", "--by", "0"]).exit_code, 1);
    assert_eq!(cli(&["--help"]).exit_code, 0);
}

#[test]
fn parse_error_has_position() {
    let r = cli(&["--json", "normalize", "x*+"]);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "parse");
    assert_eq!(v["error"]["line"], 1);
    assert!(v["error"]["column"].as_u64().unwrap() >= 3);
}

#[test]
fn inconsistent_check_names_the_overlap() {
    let r = cli(&["--algebra", "inconsistent_demo", "check"]);
    assert!(r.stderr.contains("overlap z*y*x"), "{}", r.stderr);
    assert!(r.stderr.contains("difference 1"), "{}", r.stderr);
}

#[test]
fn presentation_file_argument() {
    let dir = std::env::temp_dir().join(format!("skewpbw-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("w.alg");
    std::fs::write(&path, skewpbw::corpus::source("weyl1").unwrap()).unwrap();
    let out = ok(&["--algebra", path.to_str().unwrap(), "normalize", "y*x"]);
    assert_eq!(out, "x*y + 1\n");
    std::fs::remove_dir_all(&dir).ok();
}
