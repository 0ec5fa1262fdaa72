//! End-to-end checks of the command-line front end: pinned text output for
//! worked examples, exit codes, stdin input, JSON stability and help coverage.

use std::io::Write;
use std::process::{Command, Stdio};

use exacta::cli::{dispatch, dispatch_with_stdin, subcommand_paths};
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    dispatch(std::iter::once("exacta").chain(args.iter().copied()))
}

const GOLDEN: &[(&[&str], &str)] = &[
    (&["nt", "gcd", "252", "198"],
     "18\n"),
    (&["nt", "gcd", "222", "102"],
     "6\n"),
    (&["nt", "lcm", "90", "24"],
     "360\n"),
    (&["nt", "tobase", "125", "7"],
     "(236)_7\n"),
    (&["nt", "tobase", "147", "2"],
     "(10010011)_2\n"),
    (&["nt", "divmod", "133", "21"],
     "133 = 21*6 + 7\n"),
    (&["nt", "factor", "48"],
     "2^4 * 3\n"),
    (&["comb", "fact", "5"],
     "120\n"),
    (&["comb", "binom", "7", "2"],
     "21\n"),
    (&["comb", "expand", "4", "3", "0", "2", "1"],
     "81 + 216*x + 216*x^2 + 96*x^3 + 16*x^4\n"),
    (&["comb", "term", "12", "5", "1", "1/2", "1", "2/3"],
     "T_5 = 495*x^(20/3)\n"),
    (&["comb", "term", "12", "5", "1", "1", "1", "-2"],
     "T_5 = 495\n"),
    (&["logic", "classify", "(p & !p) -> q"],
     "tautology\n"),
    (&["logic", "classify", "p -> (q | r)"],
     "contingent\n"),
    (&["logic", "classify", "!(p & q) <-> (!p | !q)"],
     "tautology\n"),
    (&["set", "ops", "{a,b,c,d,e,f}", "{d,e,f,g,h}", "--op", "symdiff"],
     "{a, b, c, g, h}\n"),
    (&["set", "power", "{a,b,c}"],
     "{{}, {a}, {b}, {c}, {a, b}, {a, c}, {b, c}, {a, b, c}}\n|P(A)| = 8\n"),
    (&["set", "venn3", "35", "18", "22", "6", "11", "4", "1"],
     "|C| = 15\nonly A = 9\nonly B = 6\nonly C = 1\nA∩B only = 5\nB∩C only = 10\nA∩C only = 3\nA∩B∩C = 1\n"),
    (&["rel", "classes", "{1,2,3,4,5,6}", "(1,1),(1,2),(1,3),(2,1),(2,2),(2,3),(3,1),(3,2),(3,3),(4,4),(4,5),(5,4),(5,5),(6,6)"],
     "{1, 2, 3}\n{4, 5}\n{6}\n"),
    (&["rel", "props", "{2,4,8,16}", "(2,2),(2,4),(2,8),(2,16),(4,4),(4,8),(4,16),(8,8),(8,16),(16,16)"],
     "reflexive: yes\nantireflexive: no\nsymmetric: no\nantisymmetric: yes\ntransitive: yes\nequivalence: no\npartial order: yes\n"),
    (&["alg", "classify", "add:6"],
     "closed: yes\nassociative: yes\ncommutative: yes\nneutral: 0\ninverses: 0^-1 = 0, 1^-1 = 5, 2^-1 = 4, 3^-1 = 3, 4^-1 = 2, 5^-1 = 1\nclass: abelian group\n"),
    (&["alg", "cayley", "units"],
     " * | -1  1  i -i\n---+------------\n-1 |  1 -1 -i  i\n 1 | -1  1  i -i\n i | -i  i -1  1\n-i |  i -i  1 -1\n"),
    (&["cx", "arith", "3+4i", "mul", "2-5i"],
     "26-7i\n"),
    (&["cx", "arith", "2-5i", "div", "3+4i"],
     "-14/25-23/25i\n"),
    (&["cx", "roots", "1-i", "3"],
     "w0 = (1.1224620483, 1.8325957146 rad = 105°)\nw1 = (1.1224620483, 3.926990817 rad = 225°)\nw2 = (1.1224620483, 6.0213859194 rad = 345°)\n"),
    (&["mat", "det", "7 -4; 3 4"],
     "40\n"),
    (&["mat", "det", "3 2 -1; 1 2 4; 0 6 -2"],
     "-86\n"),
    (&["mat", "det", "2 1 2 1; 2 -3 1 -3; 4 2 2 2; -2 4 -1 5", "--method", "laplace"],
     "16\n"),
    (&["mat", "adj", "3 -5; 4 6"],
     " 6 5\n-4 3\n"),
    (&["mat", "inverse", "2 -3; 0 1"],
     "1/2 3/2\n  0   1\n"),
    (&["mat", "inverse", "-1 0 -2; 0 2 1; 1 -1 2"],
     "-5 -2 -4\n-1  0 -1\n 2  1  2\n"),
    (&["mat", "rank", "2 3 -1 4; 5 -3 8 19; 1 -2 3 5"],
     "2\n"),
    (&["mat", "arith", "mul", "3 1 -2; 0 2 0", "2 1; 0 4; -1 0"],
     "8 7\n0 8\n"),
    (&["sys", "classify", "1 1 | 2; 2 2 | 4"],
     "rank(A) = 1, rank(A|b) = 1, n = 2: infinite\n"),
    (&["sys", "gauss", "1 1 1 | 3; 2 3 -1 | 4; -1 2 1 | 2; 3 1 -3 | 1"],
     "x1 = 1, x2 = 1, x3 = 1\n"),
    (&["sys", "gauss", "1 1 1 | 3; 2 3 -1 | 4; 1 2 -2 | 1; 3 5 -3 | 5"],
     "x1 = -4·t1 + 5\nx2 = 3·t1 - 2\nx3 = t1\nparticular: (5, -2, 0)\ndirection t1: (-4, 3, 1)\n"),
    (&["sys", "gauss", "1 1 1 1 | 4; 2 3 1 -2 | 3; 3 4 2 -1 | 7"],
     "x1 = -2·t1 - 5·t2 + 9\nx2 = t1 + 4·t2 - 5\nx3 = t1\nx4 = t2\nparticular: (9, -5, 0, 0)\ndirection t1: (-2, 1, 1, 0)\ndirection t2: (-5, 4, 0, 1)\n"),
    (&["sys", "cramer", "1 1 1 | 3; 0 1 -3 | -2; 0 0 1 | 1"],
     "D = 1\nD1 = 1\nD2 = 1\nD3 = 1\nx1 = 1, x2 = 1, x3 = 1\n"),
    (&["sys", "homogeneous", "1 2 1; 2 3 1; 3 5 2; 2 4 2"],
     "nontrivial solutions\nx1 = t1\nx2 = -t1\nx3 = t1\nparticular: (0, 0, 0)\ndirection t1: (1, -1, 1)\n"),
    (&["geo", "plane", "--points", "(1,1,0)", "(-2,0,4)", "(2,3,-1)"],
     "7x - y + 5z - 6 = 0\nsegment: x/(6/7) + y/(-6) + z/(6/5) = 1\nhesse: cos α = 0.8082903769, cos β = -0.1154700538, cos γ = 0.5773502692, p = 0.692820323 (p² = 12/25)\nparametric: (6/7, 0, 0) + u(1, 7, 0) + v(-5, 0, 7)\n"),
    (&["geo", "dist", "(0,6,4)", "2 -1 -2 5"],
     "d = 3 (d² = 9)\n"),
    (&["geo", "dist", "(0,6,4)", "2x - y - 2z + 5 = 0"],
     "d = 3 (d² = 9)\n"),
    (&["geo", "line", "--planes", "2x - y - z = 4", "2x - 3y - 2z + 7 = 0"],
     "point=(19/4, 11/2, 0) dir=(-1, 2, -4)\ncanonical: (x - 19/4)/-1 = (y - 11/2)/2 = z/-4\nparametric: x = 19/4 - t, y = 11/2 + 2t, z = -4t\n"),
    (&["geo", "line", "--planes", "2 -1 -1 -4", "2 -3 -2 7"],
     "point=(19/4, 11/2, 0) dir=(-1, 2, -4)\ncanonical: (x - 19/4)/-1 = (y - 11/2)/2 = z/-4\nparametric: x = 19/4 - t, y = 11/2 + 2t, z = -4t\n"),
    (&["geo", "relate", "(x-1)/2 = y/3 = (z+1)/-1", "1 1 5 -7"],
     "parallel\n"),
    (&["geo", "relate", "(x-2)/3=(y-1)/-2=(z-3)/2", "2 2 -1 -3"],
     "contained\n"),
    (&["geo", "relate", "(x-1)/3=(y-2)/-2=(z-3)/1", "6 -4 2 7"],
     "intersecting\npoint = (-5/28, 39/14, 73/28)\nsin φ = 1\nφ = 1.5707963268\n"),
    (&["geo", "vec", "--tetra", "(3,1,-2)", "(-4,2,3)", "(1,5,-1)", "(-5,-1,2)"],
     "tetrahedron volume = 9\nparallelepiped volume = 54\nheight from D = 1.6696595181 (h² = 1458/523)\n"),
    (&["mix", "prop", "x+9", "6", "x", "5"],
     "x = 45\n"),
    (&["mix", "split", "198", "1", "2", "3", "5"],
     "18, 36, 54, 90\n"),
    (&["mix", "percent", "--base", "32", "--part", "30"],
     "p = 375/4 ≈ 93.75%\n"),
    (&["mix", "chain", "--final", "60", "-10", "15"],
     "start = 4000/69 ≈ 57.97\n"),
    (&["mix", "simple", "48", "78", "60", "10"],
     "x1 = 6, x2 = 4\n"),
    (&["mix", "star", "160", "140", "110", "50", "--target", "120", "--total", "560"],
     "280, 40, 80, 160\n"),
];

#[test]
fn golden_outputs() {
    assert!(GOLDEN.len() >= 30);
    for (args, expected) in GOLDEN {
        let (code, out, err) = run(args);
        assert_eq!(code, 0, "{args:?}: {err}");
        assert_eq!(out, *expected, "{args:?}");
    }
}

#[test]
fn domain_errors_exit_one() {
    for (args, msg) in [
        (&["mat", "inverse", "2 -3; -4 6"][..], "singular matrix"),
        (&["sys", "gauss", "1 1 | 2; 1 1 | 3"], "inconsistent system"),
        (&["sys", "cramer", "1 1 | 2; 2 2 | 4"], "singular system"),
        (&["nt", "gcd", "0", "0"], "gcd(0, 0) is undefined"),
        (&["geo", "plane", "--points", "(0,0,0)", "(1,1,1)", "(2,2,2)"], "points are collinear"),
        (&["mix", "star", "10", "30", "50", "--target", "20", "--total", "9"], "unequal number"),
    ] {
        let (code, out, err) = run(args);
        assert_eq!(code, 1, "{args:?}");
        assert!(out.is_empty());
        assert!(err.contains(msg), "{args:?}: {err}");
    }
}

#[test]
fn parse_errors_exit_two() {
    for args in [
        &["mat", "det", "1 2; 3"][..],
        &["logic", "classify", "p ->"],
        &["cx", "arith", "3+4j", "mul", "1"],
        &["nt", "gcd", "12"],
        &["mat", "det", "1", "--bogus"],
        &["nosuch"],
    ] {
        let (code, out, err) = run(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty());
        assert!(!err.is_empty());
    }
}

#[test]
fn stdin_placeholder() {
    let (code, out, _) = dispatch_with_stdin(["exacta", "mat", "inverse", "-"], "2 -3\n0 1\n");
    assert_eq!((code, out.as_str()), (0, "1/2 3/2\n  0   1\n"));
    let (code, out, _) = dispatch_with_stdin(["exacta", "sys", "gauss", "-"], "1 1\n1 -1\n|\n2 0\n");
    assert_eq!((code, out.as_str()), (0, "x1 = 1, x2 = 1\n"));
}

#[test]
fn binary_process() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_exacta"))
        .args(["mat", "det", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"7 -4\n3 4\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "40\n");

    let out = Command::new(env!("CARGO_BIN_EXE_exacta")).args(["mat", "inverse", "2 -3; -4 6"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("singular matrix"));
}

#[test]
fn json_round_trip() {
    for (args, _) in GOLDEN {
        let mut argv = vec!["--json"];
        argv.extend_from_slice(args);
        let (code, out, err) = run(&argv);
        assert_eq!(code, 0, "{args:?}: {err}");
        let v: Value = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        assert_eq!(format!("{}\n", serde_json::to_string(&v).unwrap()), out, "{args:?}");
    }
}

#[test]
fn json_schema_samples() {
    let (_, out, _) = run(&["--json", "mix", "chain", "--final", "60", "-10", "15"]);
    assert_eq!(out, "{\"solved\":\"start\",\"value\":{\"num\":4000,\"den\":69}}\n");
    let (_, out, _) = run(&["mat", "det", "--json", "7 -4; 3 4"]);
    assert_eq!(out, "{\"det\":{\"num\":40,\"den\":1}}\n");
    let (_, out, _) = run(&["--json", "sys", "gauss", "1 1 1 | 3; 2 3 -1 | 4; 1 2 -2 | 1; 3 5 -3 | 5"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"], "infinite");
    assert_eq!(v["free_cols"], serde_json::json!([3]));
    assert_eq!(v["directions"][0][0], serde_json::json!({"num": -4, "den": 1}));
}

#[test]
fn help_lists_every_subcommand() {
    let (code, top, _) = run(&["--help"]);
    assert_eq!(code, 0);
    let paths = subcommand_paths();
    assert!(paths.len() >= 50);
    for path in &paths {
        let (group, sub) = path.split_once(' ').unwrap();
        assert!(top.contains(group), "{group} missing from top-level help");
        let (code, help, _) = run(&[group, "--help"]);
        assert_eq!(code, 0);
        assert!(help.lines().any(|l| l.trim_start().starts_with(sub)), "{path} missing from help");
    }
    for expected in [
        "nt gcd",
        "nt lcm",
        "nt factor",
        "nt prime",
        "nt tobase",
        "nt frombase",
        "nt divmod",
        "comb fact",
        "comb binom",
        "comb expand",
        "comb term",
        "comb sum",
        "logic table",
        "logic classify",
        "logic equiv",
        "set ops",
        "set power",
        "set cart",
        "set venn3",
        "rel props",
        "rel classes",
        "rel compose",
        "rel inverse",
        "alg cayley",
        "alg classify",
        "cx arith",
        "cx polar",
        "cx pow",
        "cx roots",
        "mat arith",
        "mat det",
        "mat adj",
        "mat inverse",
        "mat rank",
        "mat solveq",
        "sys classify",
        "sys gauss",
        "sys cramer",
        "sys invmethod",
        "sys homogeneous",
        "geo vec",
        "geo plane",
        "geo line",
        "geo relate",
        "geo dist",
        "mix prop",
        "mix split",
        "mix percent",
        "mix chain",
        "mix simple",
        "mix star",
    ] {
        assert!(paths.iter().any(|p| p == expected), "{expected}");
    }
}
