use hypoly_isom_bridge::{verify_phb, verify_point, Cx, HyperpolygonPoint, PhbPoint, ResidueMatrix};
use hypoly_phb_moduli::ParabolicWeights;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::commands::parabolic_weights;
use crate::error::CliError;
use crate::input;

type Pair = [f64; 2];

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PointWire {
    alpha: Value,
    #[serde(default)]
    beta1: Option<Value>,
    #[serde(default)]
    beta2: Option<Value>,
    p: Vec<Pair>,
    q: Vec<Pair>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PhbWire {
    beta1: Value,
    beta2: Value,
    flags: Vec<[Pair; 2]>,
    residues: Vec<[[Pair; 2]; 2]>,
}

fn cx(p: &Pair) -> Cx<f64> {
    Cx::new(p[0], p[1])
}

fn pairs(flat: &[Pair], n: usize, name: &str) -> Result<Vec<[Cx<f64>; 2]>, CliError> {
    if flat.len() != 2 * n {
        return Err(CliError::input(
            "LENGTH_MISMATCH",
            format!("`{name}` needs {} complex entries, found {}", 2 * n, flat.len()),
        ));
    }
    Ok(flat.chunks(2).map(|c| [cx(&c[0]), cx(&c[1])]).collect())
}

pub fn verify(doc: &Value, tol: f64) -> Result<Value, CliError> {
    let is_point = doc.get("p").is_some() || doc.get("q").is_some();
    if is_point {
        let wire: PointWire = serde_json::from_value(doc.clone())?;
        let alpha = input::weights_value(&wire.alpha)?;
        let beta = match (&wire.beta1, &wire.beta2) {
            (Some(b1), Some(b2)) => parabolic_weights(&json!({ "beta1": b1, "beta2": b2 }))?,
            _ => ParabolicWeights::from_alpha(&alpha)?,
        };
        let n = alpha.n();
        let pt = HyperpolygonPoint::new(pairs(&wire.p, n, "p")?, pairs(&wire.q, n, "q")?)?;
        let report = verify_point(&pt, &alpha, &beta, tol)?;
        let mut v = serde_json::to_value(report)?;
        v["format"] = json!("hyperpolygon");
        v["n"] = json!(n);
        return Ok(v);
    }
    let wire: PhbWire = serde_json::from_value(doc.clone())?;
    let beta = parabolic_weights(&json!({ "beta1": wire.beta1, "beta2": wire.beta2 }))?;
    let residues = wire
        .residues
        .iter()
        .map(|m| ResidueMatrix { m: [[cx(&m[0][0]), cx(&m[0][1])], [cx(&m[1][0]), cx(&m[1][1])]] })
        .collect();
    let flags = wire.flags.iter().map(|f| [cx(&f[0]), cx(&f[1])]).collect();
    let n = beta.n();
    let phb = PhbPoint::new(flags, residues, beta)?;
    let mut v = serde_json::to_value(verify_phb(&phb, tol)?)?;
    v["format"] = json!("parabolic_higgs");
    v["n"] = json!(n);
    Ok(v)
}
