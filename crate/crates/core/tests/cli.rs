use hlp::cli::run;
use hlp::hall_littlewood::{expand, Route};
use hlp::{LaurentPoly, Partition};
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("hlp").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn expand_all_routes_agree() {
    let (code, out, _) = call(&["expand", "--n", "3", "--lambda", "2,1,0", "--route", "all"]);
    assert_eq!(code, 0);
    assert!(out.contains("X[1,1,1]: 2 - t - t^2"), "{out}");
    assert!(out.contains("routes agree: yes"));
    assert!(out.is_ascii());
}

#[test]
fn increasing_lambda_is_a_usage_error() {
    let (code, out, err) = call(&["expand", "--n", "3", "--lambda", "1,2,0"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("lambda must be weakly decreasing"), "{err}");
}

#[test]
fn unknown_route_is_a_usage_error() {
    let (code, _, _) = call(&["expand", "--n", "3", "--lambda", "2,1", "--route", "schur"]);
    assert_eq!(code, 2);
}

#[test]
fn json_round_trips_through_the_schema() {
    let (code, out, _) = call(&[
        "expand", "--n", "3", "--lambda", "2,1", "--route", "hecke", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["shape"], serde_json::json!([2, 1, 0]));
    assert_eq!(v["n"], 3);
    assert_eq!(v["route"], "hecke");
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["pass"] == true));

    let expected = expand(&Partition::parse("2,1", 3).unwrap(), Route::Hecke).unwrap();
    let records = v["coefficients"].as_array().unwrap();
    assert_eq!(records.len(), expected.poly.len());
    for (rec, (mu, c)) in records.iter().zip(expected.poly.terms()) {
        let exponent: Vec<i32> = serde_json::from_value(rec["exponent"].clone()).unwrap();
        let poly: LaurentPoly = serde_json::from_value(rec["poly"].clone()).unwrap();
        assert_eq!(exponent, mu.entries());
        assert_eq!(&poly, c);
    }
}

#[test]
fn json_for_all_routes_is_a_list() {
    let (code, out, _) = call(&[
        "expand", "--n", "2", "--lambda", "2", "--route", "all", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let routes: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["route"].as_str().unwrap())
        .collect();
    assert_eq!(routes, ["macdonald", "hecke", "psi_lift"]);
}

#[test]
fn psi_table_for_320() {
    let (code, out, _) = call(&["psi", "--n", "3", "--lambda", "3,2,0"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 15);
    let row = rows
        .iter()
        .find(|r| r.trim_start().starts_with("113,22"))
        .unwrap();
    assert!(row.ends_with("1 - t^2"), "{row}");
}

#[test]
fn latex_uses_ytableau_rows() {
    let (code, out, _) = call(&["psi", "--n", "3", "--lambda", "3,2", "--format", "latex"]);
    assert_eq!(code, 0);
    assert!(
        out.contains("\\psi_{\\ytableaushort{113,22}} = 1 - t^{2}"),
        "{out}"
    );
    let (_, out, _) = call(&[
        "bigpsi",
        "--n",
        "3",
        "--lambda",
        "2,1",
        "--tableau",
        "2,3/3",
        "--format",
        "latex",
    ]);
    assert!(
        out.starts_with("\\Psi_{\\ytableaushort{23,3}} = T_{s_1s_2s_1}"),
        "{out}"
    );
}

#[test]
fn bigpsi_table_for_210() {
    let (code, out, _) = call(&["bigpsi", "--n", "3", "--lambda", "2,1,0"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 9);
    assert!(out.contains("11,2         T[e]"), "{out}");
}

#[test]
fn hasse_of_third_fundamental_weight() {
    let (code, out, _) = call(&["hasse", "--ell", "3", "--n", "5"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph"));
    let edges: Vec<&str> = out.lines().filter(|l| l.contains("->")).collect();
    let nodes = out
        .lines()
        .filter(|l| l.trim_end().ends_with("\";") && !l.contains("->"))
        .count();
    assert_eq!(nodes, 10);
    assert_eq!(edges.len(), 12);
    assert!(edges.iter().all(|e| e.contains("label=\"s")));
}

#[test]
fn verify_is_deterministic() {
    let (code, first, _) = call(&["verify", "--n", "3", "--max-weight", "4"]);
    assert_eq!(code, 0);
    assert!(first.ends_with("0 failed\n"), "{first}");
    let (_, second, _) = call(&["verify", "--n", "3", "--max-weight", "4"]);
    assert_eq!(first, second);
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    for sub in ["expand", "psi", "bigpsi", "verify", "hasse"] {
        assert!(out.contains(sub));
    }
}
