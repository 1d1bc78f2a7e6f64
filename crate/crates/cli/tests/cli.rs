use std::path::PathBuf;
use std::process::Command;

use hypoly_cli::{run, EXIT_DOMAIN, EXIT_INPUT};
use hypoly_combinatorics::{IndexSet, WeightVector};
use hypoly_isom_bridge::{sample_core_point, sample_polygon_point, HyperpolygonPoint};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

fn call(args: &[&str]) -> (i32, Value) {
    let mut argv = vec!["hypoly"];
    argv.extend_from_slice(args);
    let (code, text) = run(argv);
    (code, serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}")))
}

fn ok(args: &[&str]) -> Value {
    let (code, v) = call(args);
    assert_eq!((code, &v["ok"]), (0, &json!(true)), "{v}");
    v["result"].clone()
}

fn err(args: &[&str]) -> (i32, String) {
    let (code, v) = call(args);
    assert_eq!(v["ok"], json!(false), "{v}");
    (code, v["error"]["code"].as_str().unwrap().to_string())
}

fn scratch(name: &str, contents: &Value) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hypoly-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, serde_json::to_string(contents).unwrap()).unwrap();
    path
}

#[test]
fn integrals_and_short_sets() {
    let v = ok(&["intersect", "--alpha", "1,1,3,3,3", "--S", "1,2", "--monomial", "2,0,0,0,0"]);
    assert_eq!(v["value"], json!(-2));
    let v = ok(&["intersect", "--alpha", "1,1,3,3,3", "--S", "1,2,3", "--monomial", "0,0,0,1,1", "--method", "recursive"]);
    assert_eq!(v["value"], json!(1));
    let v = ok(&["shortsets", "--alpha", "2,1,5,1,2"]);
    assert_eq!(v["short_sets"].as_array().unwrap().len(), 10);
    assert_eq!(ok(&["polygon-nonempty", "--alpha", "10,1,1,2"])["nonempty"], json!(false));
    assert_eq!(ok(&["betti", "--alpha", "10,1,1,2"])["poincare_x"], json!([1, 4]));
}

#[test]
fn rings_and_pairings() {
    assert_eq!(ok(&["ring", "--space", "X", "--n", "5"])["dims"], json!([1, 5, 11]));
    assert_eq!(ok(&["ring", "--space", "US", "--alpha", "1,1,3,3,3", "--S", "1,2,3"])["dims"], json!([1, 1, 1]));
    let half = |sign: &str, idx: &[usize]| {
        idx.iter()
            .map(|&i| {
                let mut e = vec![0; 5];
                e[i - 1] = 1;
                json!({ "coeff": format!("{sign}1/2"), "exponents": e })
            })
            .collect::<Vec<_>>()
    };
    let basis = json!([half("", &[1, 3, 4, 5]), half("-", &[1, 3]), half("-", &[1, 4]), half("-", &[1, 5])]);
    let path = scratch("basis.json", &basis);
    let v = ok(&["pairing", "--alpha", "1,1,3,3,3", "--S", "1,2", "--basis", path.to_str().unwrap()]);
    assert_eq!(v["matrix"], json!([[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]));
    assert_eq!(ok(&["verify-ideal", "--alpha", "1,1,3,3,3", "--S", "1,2"])["consistent"], json!(true));
}

#[test]
fn exit_codes() {
    assert_eq!(err(&["intersect", "--alpha", "1,1,1,1", "--S", "1,2", "--monomial", "1,0,0,0"]), (EXIT_INPUT, "NON_GENERIC".into()));
    assert_eq!(err(&["shortsets"]), (EXIT_INPUT, "MISSING_PARAM".into()));
    assert_eq!(err(&["shortsets", "--alpha", "1,x,3"]).1, "PARSE_ERROR");
    assert_eq!(err(&["frobnicate"]), (EXIT_INPUT, "USAGE".into()));
    assert_eq!(err(&[]).1, "USAGE");
    assert_eq!(err(&["intersect", "--alpha", "1,1,3,3,3", "--S", "1,2,3,4", "--monomial", "2,0,0,0,0"]), (EXIT_DOMAIN, "SET_NOT_SHORT".into()));
    assert_eq!(err(&["wallcross", "--minus", "2,1,5,1,2", "--plus", "2,1,5,1,2"]), (EXIT_DOMAIN, "SAME_CHAMBER".into()));
    assert_eq!(err(&["wallcross", "--minus", "2,1,5,1,2", "--plus", "3,1,5,1,2"]).1, "NON_GENERIC");
    let (code, text) = run(["hypoly", "--help"]);
    assert_eq!(code, 0);
    assert!(text.contains("wallcross"));
}

#[test]
fn request_files_merge_with_flags() {
    let req = scratch("req.json", &json!({ "command": "intersect", "params": { "alpha": [1, 1, 3, 3, 3], "S": [1, 2], "monomial": [0, 0, 0, 1, 1] } }));
    let path = req.to_str().unwrap();
    assert_eq!(ok(&["--json-in", path])["value"], json!(2));
    assert_eq!(ok(&["intersect", "--json-in", path, "--monomial", "1,0,0,0,1"])["value"], json!(0));
    assert_eq!(err(&["shortsets", "--json-in", path]).1, "COMMAND_MISMATCH");
    let bare = scratch("bare.json", &json!({ "alpha": ["2", "1", "5", "1", "2"], "min_card": 3 }));
    let v = ok(&["shortsets", "--json-in", bare.to_str().unwrap()]);
    assert_eq!(v["short_sets"].as_array().unwrap().len(), 4);
    let wrong = scratch("wrong.json", &json!({ "alpha": [1, 2, 3], "colour": 1 }));
    assert_eq!(err(&["generic", "--json-in", wrong.to_str().unwrap()]).0, EXIT_INPUT);
}

#[test]
fn output_is_deterministic() {
    let args = ["phb-critical", "--g", "0", "--d", "0", "--alpha", "1,2,2,2", "--pretty"];
    let first = run(std::iter::once("hypoly").chain(args));
    let second = run(std::iter::once("hypoly").chain(args));
    assert_eq!(first, second);
    assert!(first.1.contains('\n'));
    let compact = run(["hypoly", "chamber", "--alpha", "1,1,1,2"]).1;
    assert!(!compact.contains('\n'));
}

fn flat(pairs: &[[hypoly_isom_bridge::Cx<f64>; 2]]) -> Value {
    json!(pairs.iter().flatten().map(|c| [c.re, c.im]).collect::<Vec<_>>())
}

fn point_doc(alpha: &[i64], pt: &HyperpolygonPoint<f64>) -> Value {
    json!({ "alpha": alpha, "p": flat(pt.p()), "q": flat(pt.q()) })
}

#[test]
fn verify_isom_on_sampled_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let ints = [2, 1, 5, 1, 2];
    let alpha = WeightVector::from_integers(&ints).unwrap();
    let polygon = sample_polygon_point(&alpha, &mut rng).unwrap();
    let core = sample_core_point(&alpha, IndexSet::from_members(5, [1, 2, 5]).unwrap(), &mut rng).unwrap();
    for (name, pt) in [("polygon.json", polygon), ("core.json", core)] {
        let path = scratch(name, &point_doc(&ints, &pt));
        let v = ok(&["verify-isom", "--point", path.to_str().unwrap()]);
        assert_eq!(v["valid"], json!(true), "{v}");
        assert_eq!(v["format"], json!("hyperpolygon"));
        assert_eq!(v["exact_round_trip"], json!(true));
    }
    let collinear = json!({
        "alpha": [2, 2, 3],
        "p": vec![[0.0, 0.0]; 6],
        "q": [[2.0, 0.0], [0.0, 0.0], [2.0, 0.0], [0.0, 0.0], [0.0, 0.0], [2.0, 0.0]],
    });
    let path = scratch("bad.json", &collinear);
    let v = ok(&["verify-isom", "--point", path.to_str().unwrap()]);
    assert_eq!(v["valid"], json!(false));
}

#[test]
fn binary_writes_envelope_and_exit_code() {
    let out = Command::new(env!("CARGO_BIN_EXE_hypoly"))
        .args(["generic", "--alpha", "1,1,1,1"])
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["generic"], json!(false));
    assert_eq!(out.status.code(), Some(0));
    let out = Command::new(env!("CARGO_BIN_EXE_hypoly"))
        .args(["core", "--alpha", "1,1,1,1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_INPUT));
}
