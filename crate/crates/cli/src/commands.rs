use clap::{Args, ValueEnum};
use hypoly_cohomology::{
    graded_dims, ideal_consistency_witness, ring_us, ring_x, GradedRingPresentation,
};
use hypoly_combinatorics::{
    chamber_signature, nongeneric_witness, polygon_nonempty, short_sets, WeightVector,
};
use hypoly_core_geometry::{
    core_components, core_intersection, derived_polygon_poincare, fixed_components,
    fixed_point_sum, poincare_x,
};
use hypoly_intersection::{
    integrate, integrate_recursive, pairing_matrix, polygon_c1_power, triangular_sets, Monomial,
    Poly,
};
use hypoly_phb_moduli::{
    critical_submanifolds, restrict_to_trivial, zero_index_components, ParabolicWeights,
};
use hypoly_wallcross::crossing_report;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::input::{self, check_n, document, index_set, raw_value, require, weights};
use crate::isom;

type Out = Result<Value, CliError>;

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Args, Serialize, Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
pub struct AlphaArgs {
    /// Weights as exact rationals, e.g. `1,1,3,3,3` or `3/2,1,1`.
    #[arg(long, value_delimiter = ',')]
    pub alpha: Option<Vec<String>>,
}

impl AlphaArgs {
    fn weights(&self) -> Result<WeightVector, CliError> {
        weights(&require(&self.alpha, "alpha")?)
    }
}

pub fn generic(a: AlphaArgs) -> Out {
    let alpha = a.weights()?;
    let witness = nongeneric_witness(alpha.entries());
    Ok(json!({ "generic": witness.is_none(), "witness": witness }))
}

#[derive(Args, Serialize, Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
pub struct ShortSetArgs {
    #[arg(long, value_delimiter = ',')]
    pub alpha: Option<Vec<String>>,
    /// Smallest cardinality listed (default 2).
    #[arg(long)]
    pub min_card: Option<usize>,
}

pub fn shortsets(a: ShortSetArgs) -> Out {
    let alpha = weights(&require(&a.alpha, "alpha")?)?;
    let sets = short_sets(alpha.entries(), a.min_card.unwrap_or(2))?;
    Ok(json!({ "count": sets.len(), "short_sets": sets }))
}

pub fn chamber(a: AlphaArgs) -> Out {
    let alpha = a.weights()?;
    Ok(serde_json::to_value(chamber_signature(alpha.entries())?)?)
}

pub fn polygon(a: AlphaArgs) -> Out {
    let alpha = a.weights()?;
    Ok(json!({ "nonempty": polygon_nonempty(alpha.entries())? }))
}

pub fn fixed(a: AlphaArgs) -> Out {
    let alpha = a.weights()?;
    Ok(json!({ "components": fixed_components(alpha.entries())? }))
}

#[derive(Args, Serialize, Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
pub struct CoreArgs {
    #[arg(long, value_delimiter = ',')]
    pub alpha: Option<Vec<String>>,
    /// With `--T`, classify the intersection of two core components.
    #[arg(long = "S", value_delimiter = ',')]
    #[serde(rename = "S", alias = "s")]
    pub s: Option<Vec<usize>>,
    #[arg(long = "T", value_delimiter = ',')]
    #[serde(rename = "T", alias = "t")]
    pub t: Option<Vec<usize>>,
}

pub fn core(a: CoreArgs) -> Out {
    let alpha = weights(&require(&a.alpha, "alpha")?)?;
    let n = alpha.n();
    match (&a.s, &a.t) {
        (Some(s), Some(t)) => {
            let class = core_intersection(alpha.entries(), index_set(n, s)?, index_set(n, t)?)?;
            Ok(json!({ "intersection": class }))
        }
        (None, None) => Ok(json!({ "components": core_components(alpha.entries())? })),
        (Some(_), None) => Err(CliError::missing("T")),
        (None, Some(_)) => Err(CliError::missing("S")),
    }
}

pub fn betti(a: AlphaArgs) -> Out {
    let alpha = a.weights()?;
    let n = alpha.n();
    let px = poincare_x(n)?;
    let fixed = fixed_point_sum(alpha.entries())?;
    let polygon = derived_polygon_poincare(alpha.entries())?;
    let shorts = short_sets(alpha.entries(), 2)?.len();
    let nonempty = polygon_nonempty(alpha.entries())?;
    Ok(json!({
        "poincare_x": px.coefficients,
        "fixed_point_sum": fixed.coefficients,
        "polygon_poincare": polygon.coefficients,
        "middle_betti": px.top(),
        "short_set_count": shorts,
        "polygon_nonempty": nonempty,
    }))
}

pub fn triangular(a: AlphaArgs) -> Out {
    let alpha = a.weights()?;
    let family = triangular_sets(alpha.entries())?;
    let power = polygon_c1_power(alpha.entries())?;
    Ok(json!({ "m": family.m, "sets": family.sets, "polygon_c1_power": power }))
}

#[derive(ValueEnum, Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Closed,
    Recursive,
}

#[derive(Args, Serialize, Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
pub struct IntersectArgs {
    #[arg(long, value_delimiter = ',')]
    pub alpha: Option<Vec<String>>,
    #[arg(long = "S", value_delimiter = ',')]
    #[serde(rename = "S", alias = "s")]
    pub s: Option<Vec<usize>>,
    /// Exponents of `c_1, …, c_n`, aligned with the weights.
    #[arg(long, value_delimiter = ',')]
    pub monomial: Option<Vec<u32>>,
    #[arg(long, value_enum)]
    pub method: Option<Method>,
}

pub fn intersect(a: IntersectArgs) -> Out {
    let alpha = weights(&require(&a.alpha, "alpha")?)?;
    let s = index_set(alpha.n(), &require(&a.s, "S")?)?;
    let exps = require(&a.monomial, "monomial")?;
    if exps.len() != alpha.n() {
        return Err(CliError::input(
            "LENGTH_MISMATCH",
            format!("monomial has {} exponents for {} weights", exps.len(), alpha.n()),
        ));
    }
    let m = Monomial::new(exps);
    let value = match a.method.unwrap_or(Method::Closed) {
        Method::Closed => integrate(alpha.entries(), s, &m)?,
        Method::Recursive => integrate_recursive(alpha.entries(), s, &m)?,
    };
    Ok(json!({ "value": value }))
}

#[derive(Args, Serialize, Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
pub struct PairingArgs {
    #[arg(long, value_delimiter = ',')]
    pub alpha: Option<Vec<String>>,
    #[arg(long = "S", value_delimiter = ',')]
    #[serde(rename = "S", alias = "s")]
    pub s: Option<Vec<usize>>,
    /// JSON file with a list of polynomials, each a list of `{coeff, exponents}` terms.
    #[arg(long, value_parser = raw_value)]
    pub basis: Option<Value>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TermWire {
    coeff: Value,
    exponents: Vec<u32>,
}

fn parse_basis(doc: &Value, n: usize) -> Result<Vec<Poly>, CliError> {
    let list = match doc {
        Value::Object(map) => map.get("basis").cloned().ok_or_else(|| CliError::missing("basis"))?,
        other => other.clone(),
    };
    let polys: Vec<Vec<TermWire>> = serde_json::from_value(list)?;
    polys
        .into_iter()
        .map(|terms| {
            let mut out = Vec::with_capacity(terms.len());
            for t in terms {
                if t.exponents.len() != n {
                    return Err(CliError::input(
                        "LENGTH_MISMATCH",
                        format!("term has {} exponents for {n} weights", t.exponents.len()),
                    ));
                }
                let c = input::rational_strings(&Value::Array(vec![t.coeff]))?;
                let coeff = hypoly_combinatorics::parse_rational(&c[0])?;
                out.push((t.exponents, coeff));
            }
            Ok(Poly::from_terms(n, out))
        })
        .collect()
}

pub fn pairing(a: PairingArgs) -> Out {
    let alpha = weights(&require(&a.alpha, "alpha")?)?;
    let s = index_set(alpha.n(), &require(&a.s, "S")?)?;
    let basis = parse_basis(&document(&require(&a.basis, "basis")?)?, alpha.n())?;
    let matrix = pairing_matrix(alpha.entries(), s, &basis)?;
    Ok(json!({ "matrix": matrix }))
}

#[derive(ValueEnum, Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Space {
    #[value(name = "X")]
    X,
    #[value(name = "US")]
    US,
}

#[derive(Args, Serialize, Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
pub struct RingArgs {
    #[arg(long, value_enum)]
    pub space: Option<Space>,
    /// Number of weights for `--space X`.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    pub alpha: Option<Vec<String>>,
    #[arg(long = "S", value_delimiter = ',')]
    #[serde(rename = "S", alias = "s")]
    pub s: Option<Vec<usize>>,
    /// Include every relation, not just the family sizes.
    #[arg(long)]
    #[serde(default, skip_serializing_if = "is_false")]
    pub with_relations: bool,
}

fn describe_ring(pres: &GradedRingPresentation, with_relations: bool) -> Value {
    let dims = graded_dims(pres);
    let families: Vec<Value> = pres
        .families
        .iter()
        .map(|f| {
            let mut v = json!({ "name": f.name, "count": f.relations.len() });
            if with_relations {
                v["relations"] = json!(f.relations);
            }
            v
        })
        .collect();
    json!({
        "generators": pres.generator_names,
        "top_degree": pres.top_degree,
        "families": families,
        "dims": dims.dims,
        "palindromic": dims.is_palindromic(),
    })
}

pub fn ring(a: RingArgs) -> Out {
    let pres = match require(&a.space, "space")? {
        Space::X => {
            let n = match (&a.n, &a.alpha) {
                (Some(n), _) => *n,
                (None, Some(alpha)) => alpha.len(),
                (None, None) => return Err(CliError::missing("n")),
            };
            check_n(n)?;
            ring_x(n)?
        }
        Space::US => {
            let alpha = weights(&require(&a.alpha, "alpha")?)?;
            let s = index_set(alpha.n(), &require(&a.s, "S")?)?;
            ring_us(alpha.entries(), s)?
        }
    };
    Ok(describe_ring(&pres, a.with_relations))
}

#[derive(Args, Serialize, Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
pub struct SetArgs {
    #[arg(long, value_delimiter = ',')]
    pub alpha: Option<Vec<String>>,
    #[arg(long = "S", value_delimiter = ',')]
    #[serde(rename = "S", alias = "s")]
    pub s: Option<Vec<usize>>,
}

pub fn verify_ideal(a: SetArgs) -> Out {
    let alpha = weights(&require(&a.alpha, "alpha")?)?;
    let s = index_set(alpha.n(), &require(&a.s, "S")?)?;
    let witness = ideal_consistency_witness(alpha.entries(), s)?;
    Ok(json!({ "consistent": witness.is_none(), "witness": witness }))
}

#[derive(Args, Serialize, Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
pub struct PhbArgs {
    /// Genus of the curve (default 0).
    #[arg(long)]
    pub g: Option<u32>,
    /// Degree of the bundle (default 0).
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<i64>,
    /// JSON file with `{"beta1": [...], "beta2": [...]}` or `{"alpha": [...]}`.
    #[arg(long, value_parser = raw_value)]
    pub weights: Option<Value>,
    /// Shortcut for `β₁ = 0`, `β₂ = α/(1 + Σα)`.
    #[arg(long, value_delimiter = ',')]
    pub alpha: Option<Vec<String>>,
    /// Keep only components with trivial underlying bundle.
    #[arg(long = "restrict-H")]
    #[serde(default, rename = "restrict_H", alias = "restrict_h", skip_serializing_if = "is_false")]
    pub restrict_h: bool,
}

pub fn parabolic_weights(doc: &Value) -> Result<ParabolicWeights, CliError> {
    let Value::Object(map) = doc else {
        return Err(CliError::input("PARSE_ERROR", "parabolic weights must be a JSON object"));
    };
    if let (Some(b1), Some(b2)) = (map.get("beta1"), map.get("beta2")) {
        let parse = |v: &Value| -> Result<Vec<_>, CliError> {
            input::rational_strings(v)?
                .iter()
                .map(|s| Ok(hypoly_combinatorics::parse_rational(s)?))
                .collect()
        };
        let (b1, b2) = (parse(b1)?, parse(b2)?);
        check_n(b1.len())?;
        return Ok(ParabolicWeights::new(b1, b2)?);
    }
    let alpha = input::weights_value(doc)?;
    Ok(ParabolicWeights::from_alpha(&alpha)?)
}

pub fn phb_critical(a: PhbArgs) -> Out {
    let beta = match (&a.weights, &a.alpha) {
        (Some(w), _) => parabolic_weights(&document(w)?)?,
        (None, Some(alpha)) => ParabolicWeights::from_alpha(&weights(alpha)?)?,
        (None, None) => return Err(CliError::missing("weights")),
    };
    let (g, d) = (a.g.unwrap_or(0), a.d.unwrap_or(0));
    let mut components = critical_submanifolds(g, d, &beta)?;
    if a.restrict_h {
        components = restrict_to_trivial(components);
    }
    let zero = zero_index_components(g, d, &beta)?;
    Ok(json!({
        "weights": beta,
        "alpha": beta.alpha(),
        "components": components,
        "zero_index_components": zero,
    }))
}

#[derive(Args, Serialize, Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
pub struct IsomArgs {
    /// JSON point file: `{"alpha", "p", "q"}` or `{"beta1", "beta2", "flags", "residues"}`.
    #[arg(long, value_parser = raw_value)]
    pub point: Option<Value>,
    #[arg(long)]
    pub tol: Option<f64>,
}

pub fn verify_isom(a: IsomArgs) -> Out {
    let doc = document(&require(&a.point, "point")?)?;
    isom::verify(&doc, a.tol.unwrap_or(hypoly_isom_bridge::DEFAULT_TOL))
}

#[derive(Args, Serialize, Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
pub struct WallArgs {
    /// Weights on the first side: a JSON file or a comma-separated list.
    #[arg(long, value_parser = raw_value, allow_hyphen_values = true)]
    pub minus: Option<Value>,
    #[arg(long, value_parser = raw_value, allow_hyphen_values = true)]
    pub plus: Option<Value>,
}

pub fn wallcross(a: WallArgs) -> Out {
    let minus = input::weights_value(&require(&a.minus, "minus")?)?;
    let plus = input::weights_value(&require(&a.plus, "plus")?)?;
    Ok(serde_json::to_value(crossing_report(minus.entries(), plus.entries())?)?)
}
