//! JSON encodings of scalars, series, fractions, transforms and reports.
//!
//! Numbers are always exact: a rational is the string `"p/q"` (or `"p"`),
//! and a polynomial in γ is `{"coeffs": [c0, c1, …]}` in ascending powers.
//! Integer JSON numbers are accepted on input; floats are rejected.

use cfhankel::catalog::{ClaimReport, SpotCheck, Verdict, VerificationReport};
use cfhankel::closedform::DenseTransform;
use cfhankel::{CFraction, ParamPoly, Rational, Scalar, Series, Status};
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("InvalidJson: {0}")]
    InvalidJson(String),
    #[error("MissingField: {0:?}")]
    MissingField(&'static str),
    #[error("InvalidField: {field}: {reason}")]
    InvalidField { field: &'static str, reason: String },
}

fn invalid(field: &'static str, reason: impl Into<String>) -> FormatError {
    FormatError::InvalidField {
        field,
        reason: reason.into(),
    }
}

pub fn parse(text: &str) -> Result<Value, FormatError> {
    serde_json::from_str(text).map_err(|e| FormatError::InvalidJson(e.to_string()))
}

pub fn rational_to_json(r: &Rational) -> Value {
    Value::String(r.to_string())
}

fn rational_from_json(v: &Value, field: &'static str) -> Result<Rational, FormatError> {
    match v {
        Value::String(s) => s.trim().parse().map_err(|e| invalid(field, format!("{e}"))),
        Value::Number(n) => n.as_i64().map(Rational::from).ok_or_else(|| {
            invalid(
                field,
                format!("{n} is not an integer; write fractions as \"p/q\""),
            )
        }),
        other => Err(invalid(field, format!("expected a rational, got {other}"))),
    }
}

pub fn scalar_to_json(s: &Scalar) -> Value {
    match s {
        Scalar::Rational(r) => rational_to_json(r),
        Scalar::Poly(p) => {
            json!({ "coeffs": p.coeffs().iter().map(rational_to_json).collect::<Vec<_>>() })
        }
    }
}

pub fn scalar_from_json(v: &Value, field: &'static str) -> Result<Scalar, FormatError> {
    match v {
        Value::Object(obj) => {
            let coeffs = obj
                .get("coeffs")
                .and_then(Value::as_array)
                .ok_or_else(|| invalid(field, "polynomial scalars need a \"coeffs\" array"))?;
            let coeffs = coeffs
                .iter()
                .map(|c| rational_from_json(c, field))
                .collect::<Result<Vec<_>, _>>()?;
            let p = ParamPoly::new(coeffs);
            Ok(match p.as_constant() {
                Some(c) => Scalar::Rational(c),
                None => Scalar::Poly(p),
            })
        }
        other => rational_from_json(other, field).map(Scalar::Rational),
    }
}

pub fn scalars_to_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_to_json).collect())
}

fn scalars_from_json(v: &Value, field: &'static str) -> Result<Vec<Scalar>, FormatError> {
    v.as_array()
        .ok_or_else(|| invalid(field, "expected an array"))?
        .iter()
        .map(|x| scalar_from_json(x, field))
        .collect()
}

fn usize_from_json(v: &Value, field: &'static str) -> Result<usize, FormatError> {
    v.as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| invalid(field, format!("expected a nonnegative integer, got {v}")))
}

fn object<'a>(v: &'a Value, what: &'static str) -> Result<&'a Map<String, Value>, FormatError> {
    v.as_object()
        .ok_or_else(|| invalid(what, "expected a JSON object"))
}

fn field<'a>(obj: &'a Map<String, Value>, name: &'static str) -> Result<&'a Value, FormatError> {
    obj.get(name).ok_or(FormatError::MissingField(name))
}

/// A series read from JSON, with the optional flag saying it is known to be
/// exact rather than truncated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesInput {
    pub series: Series,
    pub exact: bool,
}

/// `{"coeffs": [...], "order": N, "exact": bool}`; `order` defaults to
/// `len − 1` and `exact` to false.
pub fn series_from_json(v: &Value) -> Result<SeriesInput, FormatError> {
    let obj = object(v, "series")?;
    let coeffs = scalars_from_json(field(obj, "coeffs")?, "coeffs")?;
    if coeffs.is_empty() {
        return Err(invalid("coeffs", "a series needs at least one coefficient"));
    }
    let order = match obj.get("order") {
        Some(o) => usize_from_json(o, "order")?,
        None => coeffs.len() - 1,
    };
    let exact = match obj.get("exact") {
        None => false,
        Some(Value::Bool(b)) => *b,
        Some(other) => return Err(invalid("exact", format!("expected a boolean, got {other}"))),
    };
    let series = Series::new(coeffs, order).map_err(|e| invalid("order", e.to_string()))?;
    Ok(SeriesInput { series, exact })
}

pub fn series_to_json(s: &Series) -> Value {
    json!({ "coeffs": scalars_to_json(s.coeffs()), "order": s.order() })
}

fn status_to_json(s: Status) -> Value {
    match s {
        Status::Terminated => json!("terminated"),
        Status::Truncated(n) => json!({ "truncated": n }),
    }
}

fn status_from_json(v: &Value) -> Result<Status, FormatError> {
    match v {
        Value::String(s) if s == "terminated" => Ok(Status::Terminated),
        Value::Object(obj) if obj.len() == 1 && obj.contains_key("truncated") => Ok(
            Status::Truncated(usize_from_json(&obj["truncated"], "status")?),
        ),
        other => Err(invalid(
            "status",
            format!("expected \"terminated\" or {{\"truncated\": N}}, got {other}"),
        )),
    }
}

/// `{"a": [...], "q": [...], "status": "terminated" | {"truncated": N}}`.
pub fn cfraction_to_json(cf: &CFraction) -> Value {
    json!({
        "a": scalars_to_json(cf.a()),
        "q": cf.q(),
        "status": status_to_json(cf.status()),
    })
}

pub fn cfraction_from_json(v: &Value) -> Result<CFraction, FormatError> {
    let obj = object(v, "cfraction")?;
    let a = scalars_from_json(field(obj, "a")?, "a")?;
    let q = field(obj, "q")?
        .as_array()
        .ok_or_else(|| invalid("q", "expected an array"))?
        .iter()
        .map(|e| usize_from_json(e, "q"))
        .collect::<Result<Vec<_>, _>>()?;
    let status = status_from_json(field(obj, "status")?)?;
    CFraction::new(a, q, status).map_err(|e| invalid("cfraction", e.to_string()))
}

pub fn dense_to_json(d: &DenseTransform) -> Value {
    let profile: Vec<Value> = d
        .profile
        .iter()
        .map(|e| json!({ "n": e.n, "value": scalar_to_json(&e.value), "multiplicity": e.multiplicity }))
        .collect();
    json!({
        "convention": d.convention.name(),
        "dense": scalars_to_json(&d.dense),
        "profile": profile,
    })
}

fn verdict_to_json(v: &Verdict) -> Value {
    match v {
        Verdict::Confirmed => json!("confirmed"),
        Verdict::Refuted => json!("refuted"),
        Verdict::Unchecked(why) => json!({ "unchecked": why }),
    }
}

fn spot_check_to_json(s: &SpotCheck) -> Value {
    let rats = |v: &[Rational]| v.iter().map(rational_to_json).collect::<Vec<_>>();
    json!({
        "gamma": rational_to_json(&s.gamma),
        "expected": rats(&s.expected),
        "computed": rats(&s.computed),
        "agree": s.agree,
    })
}

fn claim_to_json(c: &ClaimReport) -> Value {
    let closed: Map<String, Value> = c
        .closed_form
        .iter()
        .map(|(conv, values)| (conv.name().to_string(), scalars_to_json(values)))
        .collect();
    json!({
        "id": c.id,
        "location": c.location,
        "position": c.position,
        "expected": scalars_to_json(&c.expected),
        "computed": scalars_to_json(&c.computed),
        "closed_form": closed,
        "spot_checks": c.spot_checks.iter().map(spot_check_to_json).collect::<Vec<_>>(),
        "verdict": verdict_to_json(&c.verdict),
    })
}

pub fn report_to_json(r: &VerificationReport) -> Value {
    let arbitration: Vec<Value> = r
        .arbitration
        .iter()
        .map(|row| {
            let agrees: Map<String, Value> = row
                .agrees
                .iter()
                .map(|(c, ok)| (c.name().to_string(), Value::Bool(*ok)))
                .collect();
            json!({ "entry": row.entry.name(), "max_n": row.max_n, "agrees": agrees })
        })
        .collect();
    json!({
        "max_n": r.max_n,
        "convention": r.convention.map(|c| c.name()),
        "arbitration": arbitration,
        "claims": r.claims.iter().map(claim_to_json).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_forms() {
        assert_eq!(scalar_to_json(&Scalar::ratio(-3, 6)), json!("-1/2"));
        assert_eq!(
            scalar_from_json(&json!("4/6"), "x").unwrap(),
            Scalar::ratio(2, 3)
        );
        assert_eq!(scalar_from_json(&json!(5), "x").unwrap(), Scalar::int(5));
        assert!(scalar_from_json(&json!(0.5), "x").is_err());
        assert!(scalar_from_json(&json!("1/0"), "x").is_err());
        let g = scalar_from_json(&json!({"coeffs": ["0", "1"]}), "x").unwrap();
        assert_eq!(g, Scalar::gamma());
        assert_eq!(scalar_to_json(&g), json!({"coeffs": ["0", "1"]}));
    }

    #[test]
    fn series_defaults_and_errors() {
        let s = series_from_json(&json!({"coeffs": ["1", "2"]})).unwrap();
        assert_eq!(s.series.order(), 1);
        assert!(!s.exact);
        assert!(series_from_json(&json!({"coeffs": ["1"], "order": 3})).is_err());
        assert_eq!(
            series_from_json(&json!({"order": 0})),
            Err(FormatError::MissingField("coeffs"))
        );
    }

    #[test]
    fn cfraction_round_trip() {
        let cf = CFraction::new(
            vec![Scalar::int(-1), Scalar::gamma()],
            vec![1, 2],
            Status::Truncated(4),
        )
        .unwrap();
        let v = cfraction_to_json(&cf);
        assert_eq!(v["status"], json!({"truncated": 4}));
        assert_eq!(cfraction_from_json(&v).unwrap(), cf);
        let bad = json!({"a": ["1"], "q": [0], "status": "terminated"});
        assert!(cfraction_from_json(&bad).is_err());
    }
}
