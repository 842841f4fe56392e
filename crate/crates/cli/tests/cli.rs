use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;
use txy_cli::report::{ClassifyReport, SeriesReport, VerifyReport};
use txy_cli::{run, InputDocument, Report, SearchRecord};

const S3_12: &str = r#"{"n":"3","points":[{"weights":["1","2","-3"],"sign":"+1"},{"weights":["-1","-2","3"],"sign":"+1"}]}"#;
const S3_11: &str = r#"{"n":"3","points":[{"weights":["1","1","-2"],"sign":"+1"},{"weights":["-1","-1","2"],"sign":"+1"}]}"#;
const S3_22: &str = r#"{"n":"3","points":[{"weights":["2","2","-4"],"sign":"+1"},{"weights":["-2","-2","4"],"sign":"+1"}]}"#;
const Z_23: &str = r#"{"n":"2","points":[{"weights":["2","3"],"sign":"+1"},{"weights":["2","3"],"sign":"-1"}]}"#;
const L1_4: &str = r#"{"n":"1","points":[{"weights":["4"],"sign":"+1"},{"weights":["-4"],"sign":"+1"}]}"#;
const PAIRING_FAILS: &str = r#"{"n":"1","points":[{"weights":["3"],"sign":"+1"},{"weights":["-2"],"sign":"+1"}]}"#;
const ONE_POINT: &str = r#"{"n":"1","points":[{"weights":["1"],"sign":"+1"}]}"#;

fn call(args: &[&str], input: &str) -> (i32, String, String) {
    let mut argv = vec!["txy"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut input.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn report(args: &[&str], input: &str) -> (i32, Report) {
    let (code, out, err) = call(args, input);
    assert!(err.is_empty(), "{err}");
    (code, serde_json::from_str(&out).expect("report re-parses"))
}

fn with_genus(doc: &str, genus: &str) -> String {
    let mut v: Value = serde_json::from_str(doc).unwrap();
    v["genus"] = serde_json::from_str(genus).unwrap();
    v.to_string()
}

fn pairs(ms: &[txy_cli::report::Monomial]) -> Vec<(u32, u32, &str)> {
    ms.iter().map(|m| (m.x, m.y, m.coeff.as_str())).collect()
}

#[test]
fn verify_s3_constant() {
    let (code, r) = report(&["verify"], S3_12);
    let Report::Verify(VerifyReport { rigid, constant, defect_terms, .. }) = r else { panic!() };
    assert_eq!(code, 0);
    assert!(rigid);
    assert_eq!(defect_terms, 0);
    assert_eq!(pairs(&constant.unwrap()), vec![(1, 2, "1"), (2, 1, "-1")]);
}

#[test]
fn verify_z_is_zero() {
    let (code, r) = report(&["verify"], Z_23);
    let Report::Verify(v) = r else { panic!() };
    assert_eq!(code, 0);
    assert_eq!(v.constant, Some(vec![]));
}

#[test]
fn verify_not_rigid_exits_one() {
    let (code, r) = report(&["verify"], PAIRING_FAILS);
    let Report::Verify(v) = r else { panic!() };
    assert_eq!(code, 1);
    assert!(!v.rigid && v.constant.is_none() && v.defect_terms > 0);
}

#[test]
fn input_errors_exit_two() {
    let zero = r#"{"n":"1","points":[{"weights":["0"],"sign":"+1"}]}"#;
    let (code, out, err) = call(&["verify"], zero);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("points[0].weights[0]"), "{err}");

    let (code, _, err) = call(&["verify"], "{\"n\": \"1\",\n \"points\": [}");
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");

    let bad_sign = r#"{"n":"1","points":[{"weights":["1"],"sign":"2"}]}"#;
    let (code, _, err) = call(&["verify"], bad_sign);
    assert_eq!(code, 2);
    assert!(err.contains("points[0].sign"), "{err}");

    assert_eq!(call(&["verify", "/nonexistent/input.json"], "").0, 2);
    assert_eq!(call(&["frobnicate"], "").0, 2);
}

#[test]
fn classify_examples() {
    let (code, r) = report(&["classify"], L1_4);
    let Report::Classify(ClassifyReport { tag, proof, .. }) = r else { panic!() };
    assert_eq!((code, tag.as_str()), (0, "L1(4)"));
    assert!(proof.unwrap().n1_shortcut);

    let (code, r) = report(&["classify"], PAIRING_FAILS);
    let Report::Classify(c) = r else { panic!() };
    assert_eq!((code, c.family.as_str()), (1, "NotRigid"));
    assert!(c.proof.is_none() && c.proof_note.is_some());

    let (code, r) = report(&["classify"], S3_22);
    let Report::Classify(c) = r else { panic!() };
    assert_eq!((code, c.tag.as_str()), (0, "S3(2,2)"));
    let p = c.proof.unwrap();
    assert!(p.eq6_holds && p.eq8_holds);
    let c9 = p.eq9_conclusion.unwrap();
    assert_eq!((c9.k, c9.l, c9.a), (1, 2, 4));
}

#[test]
fn classify_needs_two_points() {
    assert_eq!(call(&["classify"], ONE_POINT).0, 2);
}

#[test]
fn replay_rejects_z() {
    assert_eq!(call(&["replay"], Z_23).0, 2);
    let (code, r) = report(&["replay"], S3_12);
    let Report::Replay(p) = r else { panic!() };
    assert_eq!(code, 0);
    assert!(p.eq7_holds);
}

#[test]
fn series_todd_l1() {
    let doc = with_genus(r#"{"n":"1","points":[{"weights":["1"],"sign":"+1"},{"weights":["-1"],"sign":"+1"}]}"#, r#"{"name":"todd"}"#);
    let (code, r) = report(&["series"], &doc);
    let Report::Series(SeriesReport { coefficients, cross_check, constant, .. }) = r else { panic!() };
    assert_eq!(code, 0);
    assert!(constant && cross_check.is_none());
    assert_eq!(coefficients.len(), 13);
    for row in coefficients {
        let want = if row.exponent == 0 { vec![(0, 0, "1")] } else { vec![] };
        assert_eq!(pairs(&row.numerator), want, "u^{}", row.exponent);
    }
}

#[test]
fn series_s3_cross_check() {
    let (code, r) = report(&["series", "--order", "12"], S3_11);
    let Report::Series(s) = r else { panic!() };
    assert_eq!(code, 0);
    assert_eq!(s.cross_check.as_deref(), Some("agree"));
    assert_eq!(pairs(&s.value.unwrap()), vec![(1, 2, "1"), (2, 1, "-1")]);
    assert_eq!((s.lowest, s.coefficients.len()), (-3, 15));
}

#[test]
fn series_one_point() {
    let (code, r) = report(&["series"], ONE_POINT);
    let Report::Series(s) = r else { panic!() };
    assert_eq!(code, 1);
    assert!(!s.constant);
    assert_eq!(s.cross_check.as_deref(), Some("agree"));
    let pole = &s.coefficients[0];
    assert_eq!(pole.exponent, -1);
    assert!(!pole.numerator.is_empty());
}

#[test]
fn series_custom_genus_and_errors() {
    let todd = r#"{"name":"my-todd","coefficients":["1/2","1/12","0","-1/720"]}"#;
    let doc = with_genus(S3_11, todd);
    let (code, r) = report(&["series", "--order", "4"], &doc);
    let Report::Series(s) = r else { panic!() };
    assert_eq!((code, s.genus.as_str()), (0, "my-todd"));
    assert_eq!(s.value, Some(vec![]));

    assert_eq!(call(&["series"], &with_genus(S3_11, r#"{"name":"elliptic"}"#)).0, 2);
    assert_eq!(call(&["series", "--order", "3"], S3_11).0, 2);
    assert_eq!(call(&["series", "--order", "1000"], S3_11).0, 2);
}

#[test]
fn order_from_document() {
    let mut v: Value = serde_json::from_str(S3_11).unwrap();
    v["order"] = "5".into();
    let (_, r) = report(&["series"], &v.to_string());
    let Report::Series(s) = r else { panic!() };
    assert_eq!(s.order, 5);
}

fn search_records(args: &[&str]) -> Vec<SearchRecord> {
    let (code, out, err) = call(args, "");
    assert_eq!(code, 0, "{err}");
    out.lines().map(|l| serde_json::from_str(l).expect("record re-parses")).collect()
}

fn families(args: &[&str]) -> Vec<String> {
    let recs = search_records(args);
    let Some(SearchRecord::Summary(s)) = recs.last() else { panic!("summary must be last") };
    s.families.keys().cloned().collect()
}

#[test]
fn search_examples() {
    assert_eq!(families(&["search", "--n", "3", "--m", "2", "--max-weight", "4"]), ["S3", "Z"]);
    assert_eq!(families(&["search", "--n", "4", "--m", "2", "--max-weight", "4"]), ["Z"]);
    let recs = search_records(&["search", "--n", "1", "--m", "1", "--max-weight", "3"]);
    let [SearchRecord::Summary(s)] = recs.as_slice() else { panic!() };
    assert_eq!(s.rigid, 0);
}

#[test]
fn search_hits_reparse_as_input() {
    let recs = search_records(&["search", "--n", "3", "--m", "2", "--max-weight", "3", "--jobs", "2"]);
    let mut hits = 0;
    for r in &recs[..recs.len() - 1] {
        let SearchRecord::Hit(h) = r else { panic!("only the last record is a summary") };
        let doc = InputDocument::parse(&h.data.to_string()).unwrap();
        let (code, r) = report(&["verify"], &doc.to_string());
        let Report::Verify(v) = r else { panic!() };
        assert_eq!(code, 0);
        assert_eq!(v.constant.unwrap(), h.constant);
        hits += 1;
    }
    assert!(hits > 0);
}

#[test]
fn search_flags() {
    let recs = search_records(&["search", "--n", "1", "--m", "2", "--max-weight", "3", "--signs", "++", "--effective-only"]);
    let tags: Vec<_> = recs
        .iter()
        .filter_map(|r| match r {
            SearchRecord::Hit(h) => h.tag.clone(),
            _ => None,
        })
        .collect();
    assert_eq!(tags, ["L1(1)"]);
    assert_eq!(call(&["search", "--n", "1", "--m", "2", "--max-weight", "3", "--signs", "+"], "").0, 2);
    assert_eq!(call(&["search", "--n", "0", "--max-weight", "3"], "").0, 2);
    assert_eq!(call(&["search", "--n", "1", "--max-weight", "3", "--jobs", "0"], "").0, 2);
    let (code, out, _) = call(&["search", "--n", "1", "--max-weight", "2", "--format", "table"], "");
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.trim() == "L1: 4"), "{out}");
}

#[test]
fn binary_exit_codes() {
    let exe = env!("CARGO_BIN_EXE_txy");
    for (doc, want) in [(S3_12, 0), (PAIRING_FAILS, 1), ("{}", 2)] {
        let mut child = Command::new(exe)
            .arg("verify")
            .stdin(Stdio::piped())
            .stdout(Stdio::null())
            .stderr(Stdio::null())
            .spawn()
            .unwrap();
        child.stdin.take().unwrap().write_all(doc.as_bytes()).unwrap();
        assert_eq!(child.wait().unwrap().code(), Some(want), "{doc}");
    }
}
