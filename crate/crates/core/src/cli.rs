//! Batch front end: one verb per invocation, JSON in, JSON (or a flat
//! table) out.
//!
//! Every payload may carry `"irreducibles": [...]`, the registry used to
//! interpret polynomial labels. Algebras are `{"m", "field", "invariants"}`;
//! `field` defaults to ℚ with its real place `inf`. Classes are
//! `{"algebra", "lambda": {label: [parts]}}`.

use std::collections::BTreeMap;

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::arthur::{self, StdParabolic};
use crate::brauer::{CsaAlgebra, CsaRepr, FieldSpec, IrreducibleSpec, Registry};
use crate::checks::{self, CheckResult, ClosureFn};
use crate::classes::{self, CharPoly, ConjClass, LeviShape};
use crate::error::{Error, Result};
use crate::measures::{self, FieldCase, LocalParams};
use crate::partitions::Partition;
use crate::ratio::{fmt_q, parse_q, Q};
use crate::split_oracle::{self, RationalMatrix};

pub const VERBS: [&str; 12] = [
    "classify",
    "enumerate",
    "induce",
    "centralizer",
    "closure",
    "transfer",
    "local-global",
    "elliptic",
    "gamma",
    "volk",
    "arthur",
    "oracle",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy)]
pub struct Options {
    pub seed: u64,
    pub format: Format,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            seed: 0,
            format: Format::Json,
        }
    }
}

pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Runs a `{"verb", "payload"}` document.
pub fn run_document(text: &str, opts: &Options) -> Result<Value> {
    let doc = parse_json(text)?;
    let verb = doc
        .get("verb")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Schema("request needs a string `verb`".into()))?;
    let payload = doc
        .get("payload")
        .ok_or_else(|| Error::Schema("request needs a `payload`".into()))?;
    dispatch(verb, payload, opts)
}

/// Runs `verb` on a raw payload text.
pub fn run_verb(verb: &str, text: &str, opts: &Options) -> Result<Value> {
    let payload = parse_json(text)?;
    dispatch(verb, &payload, opts)
}

pub fn dispatch(verb: &str, payload: &Value, opts: &Options) -> Result<Value> {
    if !payload.is_object() {
        return Err(Error::Schema("payload must be an object".into()));
    }
    let reg = registry(payload)?;
    match verb {
        "classify" => classify(payload, &reg),
        "enumerate" => enumerate(payload, &reg),
        "induce" => {
            let (levi, blocks) = levi_and_blocks(payload)?;
            Ok(json!({"class": classes::induce(&levi, &blocks)?}))
        }
        "centralizer" => {
            let c = class_field(payload, "class")?;
            let shape = classes::centralizer_shape(&c, &reg)?;
            Ok(json!({"shape": shape, "dim": classes::centralizer_dim(&c, &reg)?}))
        }
        "closure" => {
            let (a, b) = (class_field(payload, "left")?, class_field(payload, "right")?);
            Ok(json!({"leq": classes::closure_leq(&a, &b, &reg)?, "geq": classes::closure_leq(&b, &a, &reg)?}))
        }
        "transfer" => transfer(payload, &reg),
        "local-global" => {
            let c = class_field(payload, "class")?;
            let target = algebra_field(payload, "target")?;
            to_value(&classes::local_global_transfer(&c, &target, &reg)?)
        }
        "elliptic" => {
            let c = class_field(payload, "class")?;
            let (levi, blocks) = classes::elliptic_support(&c, &reg)?;
            Ok(json!({"elliptic": classes::is_elliptic(&c), "levi": levi, "blocks": blocks}))
        }
        "gamma" => gamma(payload),
        "volk" => volk(payload),
        "arthur" => arthur_fn(payload, opts),
        "oracle" => oracle(payload, &reg, opts),
        other => Err(Error::Schema(format!("unknown verb `{other}`"))),
    }
}

fn to_value<T: Serialize>(v: &T) -> Result<Value> {
    serde_json::to_value(v).map_err(|e| Error::Schema(e.to_string()))
}

fn field<T: DeserializeOwned>(payload: &Value, key: &str) -> Result<T> {
    let v = payload
        .get(key)
        .ok_or_else(|| Error::Schema(format!("missing field `{key}`")))?;
    serde_json::from_value(v.clone()).map_err(|e| Error::Schema(format!("field `{key}`: {e}")))
}

fn opt_field<T: DeserializeOwned>(payload: &Value, key: &str) -> Result<Option<T>> {
    match payload.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(_) => field(payload, key).map(Some),
    }
}

fn registry(payload: &Value) -> Result<Registry> {
    let specs: Vec<IrreducibleSpec> = opt_field(payload, "irreducibles")?.unwrap_or_default();
    Registry::from_specs(specs)
}

fn algebra(v: &Value) -> Result<CsaAlgebra> {
    let mut v = v.clone();
    if let Value::Object(m) = &mut v {
        if !m.contains_key("field") {
            m.insert("field".into(), to_value(&FieldSpec::rationals())?);
        }
    }
    let repr: CsaRepr = serde_json::from_value(v).map_err(|e| Error::Schema(format!("algebra: {e}")))?;
    repr.build()
}

fn algebra_field(payload: &Value, key: &str) -> Result<CsaAlgebra> {
    algebra(
        payload
            .get(key)
            .ok_or_else(|| Error::Schema(format!("missing field `{key}`")))?,
    )
}

fn class(v: &Value) -> Result<ConjClass> {
    let alg = algebra_field(v, "algebra")?;
    let lambda: BTreeMap<String, Partition> = field(v, "lambda")?;
    Ok(ConjClass::new(alg, lambda))
}

fn class_field(payload: &Value, key: &str) -> Result<ConjClass> {
    class(
        payload
            .get(key)
            .ok_or_else(|| Error::Schema(format!("missing field `{key}`")))?,
    )
}

fn levi_and_blocks(payload: &Value) -> Result<(LeviShape, Vec<ConjClass>)> {
    let levi = LeviShape::new(field(payload, "levi")?)?;
    let blocks = payload
        .get("blocks")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Schema("missing array `blocks`".into()))?
        .iter()
        .map(class)
        .collect::<Result<Vec<_>>>()?;
    Ok((levi, blocks))
}

fn rational(v: &Value) -> Result<Q> {
    match v {
        Value::String(s) => parse_q(s),
        Value::Number(n) => n
            .as_i64()
            .map(|i| Q::from_integer(i.into()))
            .ok_or_else(|| Error::Schema(format!("`{n}` is not an integer; write rationals as \"r/s\""))),
        other => Err(Error::Schema(format!("expected a rational, got {other}"))),
    }
}

fn vector(payload: &Value, key: &str) -> Result<Vec<Q>> {
    payload
        .get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Schema(format!("missing array `{key}`")))?
        .iter()
        .map(rational)
        .collect()
}

fn show_vector(x: &[Q]) -> Value {
    Value::Array(x.iter().map(|v| Value::String(fmt_q(v))).collect())
}

fn classify(payload: &Value, reg: &Registry) -> Result<Value> {
    if payload.get("class").is_none() {
        let alg = algebra_field(payload, "algebra")?;
        let f: CharPoly = field(payload, "charpoly")?;
        return Ok(json!({"charpoly_valid": classes::charpoly_valid(&alg, &f, reg)?}));
    }
    let c = class_field(payload, "class")?;
    Ok(json!({
        "valid": classes::validate_class(&c, reg)?,
        "mass": classes::mass(&c, reg)?,
        "degree": c.algebra.degree(),
        "charpoly": classes::charpoly_of(&c, reg)?,
        "elliptic": classes::is_elliptic(&c),
        "semisimple_part": classes::semisimple_part(&c),
    }))
}

fn enumerate(payload: &Value, reg: &Registry) -> Result<Value> {
    let alg = algebra_field(payload, "algebra")?;
    let found = match opt_field::<CharPoly>(payload, "charpoly")? {
        Some(f) => classes::enumerate_classes(&alg, &f, reg)?,
        None => classes::all_classes(&alg, reg)?,
    };
    Ok(json!({"count": found.len(), "classes": found}))
}

fn transfer(payload: &Value, reg: &Registry) -> Result<Value> {
    let c = class_field(payload, "class")?;
    if payload.get("target").is_none() {
        return Ok(json!({"class": classes::transfer_to_split(&c, reg)?}));
    }
    let target = algebra_field(payload, "target")?;
    let rep = classes::local_global_transfer(&c, &target, reg)?;
    let mut out = json!({"global": rep.global, "per_place": rep.per_place});
    if let Some(back) = rep.class {
        out["class"] = to_value(&back)?;
    }
    Ok(out)
}

fn local_params(payload: &Value) -> Result<LocalParams> {
    Ok(LocalParams {
        q: field(payload, "q")?,
        d: opt_field(payload, "d")?.unwrap_or(1),
    })
}

fn gamma(payload: &Value) -> Result<Value> {
    let case: FieldCase = field(payload, "case")?;
    let comp: Vec<u32> = field(payload, "composition")?;
    // `disc_exp` is accepted for symmetry with place descriptions; the
    // discriminant stays a formal symbol in the output.
    let _: Option<Value> = opt_field(payload, "disc_exp")?;
    let params = if case.is_archimedean() {
        None
    } else {
        Some(local_params(payload)?)
    };
    let g = measures::gamma(case, &comp, params)?;
    let mut out = to_value(&g)?;
    if let Some(inner) = opt_field::<Vec<Vec<u32>>>(payload, "inner")? {
        out["transitive"] = Value::Bool(measures::gamma_transitive_check(case, &comp, &inner, params)?);
    }
    Ok(out)
}

fn volk(payload: &Value) -> Result<Value> {
    let m: u32 = field(payload, "m")?;
    let params = local_params(payload)?;
    let case: FieldCase = opt_field(payload, "case")?.unwrap_or(FieldCase::NonArch);
    Ok(json!({
        "vol_k": measures::vol_k(params, m),
        "selfdual": measures::selfdual_constant(case, m),
    }))
}

fn parabolic(payload: &Value, key: &str) -> Result<StdParabolic> {
    StdParabolic::from_composition(&field::<Vec<u32>>(payload, key)?)
}

fn arthur_fn(payload: &Value, opts: &Options) -> Result<Value> {
    let name: String = field(payload, "fn")?;
    let pair = || -> Result<(StdParabolic, StdParabolic, Vec<Q>)> {
        Ok((parabolic(payload, "p1")?, parabolic(payload, "p2")?, vector(payload, "x")?))
    };
    match name.as_str() {
        "tau" => {
            let (a, b, x) = pair()?;
            Ok(json!({"value": arthur::tau(&a, &b, &x)?}))
        }
        "tau_hat" => {
            let (a, b, x) = pair()?;
            Ok(json!({"value": arthur::tau_hat(&a, &b, &x)?}))
        }
        "sigma" => {
            let (a, b, x) = pair()?;
            Ok(json!({"value": arthur::sigma(&a, &b, &x)?}))
        }
        "langlands" => {
            let (a, b, x) = pair()?;
            Ok(json!({"value": arthur::langlands_sum(&a, &b, &x)?}))
        }
        "roots" => {
            let (a, b, x) = pair()?;
            Ok(json!({
                "roots": show_vector(&arthur::simple_root_values(&a, &b, &x)?),
                "weights": show_vector(&arthur::weight_values(&a, &b, &x)?),
            }))
        }
        "gamma" => {
            let p = parabolic(payload, "p")?;
            let (x, y) = (vector(payload, "x")?, vector(payload, "y")?);
            Ok(json!({"value": arthur::gamma_trunc(&p, &x, &y)?}))
        }
        "inversion" => {
            let p = parabolic(payload, "p")?;
            let (x, y) = (vector(payload, "x")?, vector(payload, "y")?);
            let (l, r) = arthur::inversion_sides(&p, &x, &y)?;
            Ok(json!({"lhs": l, "rhs": r, "holds": l == r}))
        }
        "sweep" => {
            let m: u32 = field(payload, "m")?;
            let points: u32 = opt_field(payload, "points")?.unwrap_or(100);
            to_value(&arthur::identity_sweep(m, points, opts.seed))
        }
        "support" => {
            let p = parabolic(payload, "p")?;
            let y = vector(payload, "y")?;
            let samples: u32 = opt_field(payload, "samples")?.unwrap_or(100);
            let rep = arthur::compact_support_check(&p, &y, samples, opts.seed)?;
            let mut out = to_value(&rep)?;
            out["radius"] = Value::String(fmt_q(&arthur::support_radius(&y)));
            Ok(out)
        }
        other => Err(Error::Schema(format!("unknown arthur function `{other}`"))),
    }
}

fn matrix(payload: &Value) -> Result<RationalMatrix> {
    let rows = payload
        .get("matrix")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Schema("missing array `matrix`".into()))?;
    let rows = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| Error::Schema("matrix rows must be arrays".into()))?
                .iter()
                .map(rational)
                .collect::<Result<Vec<Q>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    RationalMatrix::from_rows(rows)
}

fn oracle(payload: &Value, reg: &Registry, opts: &Options) -> Result<Value> {
    let op: String = field(payload, "op")?;
    match op.as_str() {
        "realize" => {
            let c = class_field(payload, "class")?;
            Ok(json!({"matrix": split_oracle::realize(&c, reg)?}))
        }
        "class_of" => {
            let x = matrix(payload)?;
            let alg = match payload.get("algebra") {
                Some(a) => algebra(a)?,
                None => CsaAlgebra::split_rational(x.dim() as u32),
            };
            Ok(json!({"class": split_oracle::class_of(&x, &alg, reg, None)?}))
        }
        "closure" => {
            let (a, b) = (class_field(payload, "left")?, class_field(payload, "right")?);
            Ok(json!({"leq": split_oracle::oracle_closure_leq(&a, &b, reg)?}))
        }
        "induction" => {
            let (levi, blocks) = levi_and_blocks(payload)?;
            let trials: u32 = opt_field(payload, "trials")?.unwrap_or(20);
            to_value(&split_oracle::generic_induction_check(&levi, &blocks, trials, opts.seed, reg)?)
        }
        "centralizer" => {
            let c = class_field(payload, "class")?;
            let x = split_oracle::realize(&c, reg)?;
            Ok(json!({
                "commutant_dim": split_oracle::commutant_dim(&x),
                "formula_dim": classes::centralizer_dim(&c, reg)?,
            }))
        }
        other => Err(Error::Schema(format!("unknown oracle op `{other}`"))),
    }
}

/// The machine-readable error object.
pub fn error_value(e: &Error) -> Value {
    json!({"error": {"code": e.code(), "message": e.to_string()}})
}

/// Process exit status for an error: 2 for malformed input, 1 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_domain() {
        1
    } else {
        2
    }
}

pub fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
            s.push('\n');
            s
        }
        Format::Table => {
            let mut lines = Vec::new();
            flatten("", v, &mut lines);
            lines.iter().map(|(k, v)| format!("{k}\t{v}\n")).collect()
        }
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let join = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(m) if !m.is_empty() => {
            for (k, x) in m {
                flatten(&join(k), x, out);
            }
        }
        Value::Array(a) if a.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&join(&i.to_string()), x, out);
            }
        }
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

/// Deliberate faults for exercising the self-test harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Fault {
    /// Replace the closure order by its reverse.
    ClosureLeq,
}

fn reversed_closure(a: &ConjClass, b: &ConjClass, reg: &Registry) -> Result<bool> {
    classes::closure_leq(b, a, reg)
}

/// Desk-scale run of the property checks with fixed seeds.
pub fn selftest(seed: u64, fault: Option<Fault>) -> Vec<CheckResult> {
    let closure: ClosureFn = match fault {
        Some(Fault::ClosureLeq) => reversed_closure,
        None => classes::closure_leq,
    };
    vec![
        checks::closure_oracle(3, closure),
        checks::generic_induction(3, 10, seed),
        checks::transfer_commutes_with_induction(4, &[1, 2]),
        checks::local_global_principle(100, seed),
        checks::gamma_transitivity(4),
        checks::measure_constants(4),
        checks::arthur_identities(3, 50, seed),
        checks::arthur_compact_support(3, 20, seed),
        checks::transpose_scaling(6, 3),
        checks::minor_lemma_two_groups(4),
        checks::enumeration_counts(6, &[1, 2, 3]),
        checks::realize_round_trip(4),
        checks::centralizer_oracle(4),
    ]
}

pub fn selftest_value(results: &[CheckResult]) -> Value {
    let mut m = Map::new();
    m.insert("passed".into(), Value::Bool(results.iter().all(CheckResult::passed)));
    m.insert("properties".into(), serde_json::to_value(results).expect("serializable"));
    Value::Object(m)
}

/// One line per property; failures carry their counterexample payload.
pub fn selftest_lines(results: &[CheckResult]) -> String {
    let mut s = String::new();
    for r in results {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        s.push_str(&format!("{status} {} ({} checked)\n", r.name, r.checked));
        if let Some(c) = &r.counterexample {
            s.push_str(&format!("  counterexample: {c}\n"));
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(verb: &str, payload: Value) -> Result<Value> {
        dispatch(verb, &payload, &Options::default())
    }

    #[test]
    fn gamma_run_example() {
        let out = run("gamma", json!({"case":"nonarch","q":3,"d":1,"disc_exp":0,"composition":[1,1]})).unwrap();
        assert_eq!(out, json!({"value":"3/4","disc_quarter_exp":2}));
    }

    #[test]
    fn error_codes() {
        assert_eq!(run_document("{", &Options::default()).unwrap_err().code(), "parse-error");
        assert_eq!(run("gamma", json!({"case":"nonarch"})).unwrap_err().code(), "schema-error");
        assert_eq!(run("frobnicate", json!({})).unwrap_err().code(), "schema-error");
        let bad = json!({"m":1,"field":{"kind":"global","places":[{"label":"3","kind":"finite","q":3}]},
                         "invariants":{"3":"1/2"}});
        assert_eq!(run("enumerate", json!({"algebra": bad})).unwrap_err().code(), "invalid-class");
    }

    #[test]
    fn induce_full_levi_is_identity() {
        let block = json!({"algebra":{"m":3},"lambda":{"T":[2,1]}});
        let out = run("induce", json!({"irreducibles":[{"label":"T","degree":1}],"levi":[3],"blocks":[block]})).unwrap();
        assert_eq!(class(&out["class"]).unwrap(), class(&block).unwrap());
    }

    #[test]
    fn table_rendering() {
        let s = render(&json!({"a":{"b":1},"c":["x"]}), Format::Table);
        assert_eq!(s, "a.b\t1\nc\t[\"x\"]\n");
    }
}
