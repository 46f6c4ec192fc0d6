//! Reading and writing field elements, forms, ambient spaces and
//! hypersurfaces as JSON.

use num_bigint::BigInt;
use num_rational::BigRational;
use ratcurve::exact::field::{format_rational, parse_rational};
use ratcurve::{AmbientSpace, BinaryForm, Field, Grading, Hypersurface, MultiForm, PrimeField, Rationals};
use serde::Deserialize;
use serde_json::Value;

use crate::jobs::Failure;

/// A coefficient field with a JSON encoding of its elements.
pub trait WireField: Field {
    fn descriptor(&self) -> String;
    fn parse_elem(&self, v: &Value) -> Result<Self::Elem, Failure>;
    fn elem_json(&self, e: &Self::Elem) -> Value;
}

fn integer(v: &Value) -> Option<BigInt> {
    v.as_i64().map(BigInt::from).or_else(|| v.as_u64().map(BigInt::from))
}

fn bad_coefficient(v: &Value) -> Failure {
    Failure::invalid(format!("coefficient {v} is neither an integer nor a string \"p/q\""))
}

impl WireField for Rationals {
    fn descriptor(&self) -> String {
        "Q".into()
    }

    fn parse_elem(&self, v: &Value) -> Result<BigRational, Failure> {
        if let Some(n) = integer(v) {
            return Ok(BigRational::from_integer(n));
        }
        v.as_str().and_then(parse_rational).ok_or_else(|| bad_coefficient(v))
    }

    fn elem_json(&self, e: &BigRational) -> Value {
        Value::String(format_rational(e))
    }
}

impl WireField for PrimeField {
    fn descriptor(&self) -> String {
        format!("Fp:{}", self.modulus())
    }

    fn parse_elem(&self, v: &Value) -> Result<u64, Failure> {
        if let Some(n) = integer(v) {
            return Ok(self.from_bigint(&n));
        }
        let r = v.as_str().and_then(parse_rational).ok_or_else(|| bad_coefficient(v))?;
        self.from_ratio(r.numer(), r.denom())
            .ok_or_else(|| Failure::invalid(format!("denominator of {v} vanishes mod {}", self.modulus())))
    }

    fn elem_json(&self, e: &u64) -> Value {
        Value::from(*e)
    }
}

pub fn parse_form<F: WireField>(field: &F, v: &Value) -> Result<BinaryForm<F::Elem>, Failure> {
    let coeffs = v.as_array().ok_or_else(|| Failure::invalid(format!("form {v} is not an array")))?;
    if coeffs.is_empty() {
        return Err(Failure::invalid("a form needs at least one coefficient"));
    }
    Ok(BinaryForm::new(coeffs.iter().map(|c| field.parse_elem(c)).collect::<Result<_, _>>()?))
}

pub fn form_json<F: WireField>(field: &F, g: &BinaryForm<F::Elem>) -> Value {
    Value::Array(g.coeffs().iter().map(|c| field.elem_json(c)).collect())
}

/// `"P:N"`, `"biP:a,b"`, `{"P": N}` or `{"biP": [a, b]}`.
pub fn parse_ambient(v: &Value) -> Result<AmbientSpace, Failure> {
    let bad = || Failure::invalid(format!("unrecognised ambient space {v}"));
    let ambient = match v {
        Value::String(s) => {
            if let Some(n) = s.strip_prefix("P:") {
                AmbientSpace::projective(n.trim().parse().map_err(|_| bad())?)
            } else if let Some(ab) = s.strip_prefix("biP:") {
                let (a, b) = ab.split_once(',').ok_or_else(bad)?;
                AmbientSpace::biprojective(a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?)
            } else {
                return Err(bad());
            }
        }
        Value::Object(m) if m.len() == 1 => {
            if let Some(n) = m.get("P") {
                AmbientSpace::projective(n.as_u64().ok_or_else(bad)? as usize)
            } else if let Some(ab) = m.get("biP") {
                let (a, b) = <(usize, usize)>::deserialize(ab).map_err(|_| bad())?;
                AmbientSpace::biprojective(a, b)
            } else {
                return Err(bad());
            }
        }
        _ => return Err(bad()),
    };
    ambient.map_err(Failure::from)
}

pub fn ambient_json(a: AmbientSpace) -> Value {
    match a {
        AmbientSpace::Projective(n) => serde_json::json!({ "P": n }),
        AmbientSpace::Biprojective(a, b) => serde_json::json!({ "biP": [a, b] }),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub exp: Vec<u32>,
    pub c: Value,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypersurfaceSpec {
    #[serde(default)]
    pub ambient: Option<Value>,
    pub degree: Value,
    pub terms: Vec<TermSpec>,
}

/// Builds the hypersurface; `ambient` overrides a missing `ambient` key and
/// must agree with a present one.
pub fn parse_hypersurface<F: WireField>(
    field: &F,
    spec: &HypersurfaceSpec,
    ambient: Option<AmbientSpace>,
) -> Result<Hypersurface<F::Elem>, Failure> {
    let own = spec.ambient.as_ref().map(parse_ambient).transpose()?;
    let ambient = match (own, ambient) {
        (Some(a), Some(b)) if a != b => {
            return Err(Failure::invalid(format!("hypersurface lives in {a:?} but the job is in {b:?}")))
        }
        (Some(a), _) | (None, Some(a)) => a,
        (None, None) => return Err(Failure::invalid("hypersurface needs an ambient space")),
    };
    let grading = match (ambient, &spec.degree) {
        (AmbientSpace::Projective(n), d) if d.is_i64() => {
            Grading::Standard { nvars: n + 1, degree: d.as_i64().unwrap() }
        }
        (AmbientSpace::Biprojective(a, b), d) => {
            let (e1, e2) = <(i64, i64)>::deserialize(d)
                .map_err(|_| Failure::invalid(format!("bidegree {d} is not a pair of integers")))?;
            Grading::Bigraded { blocks: (a + 1, b + 1), degree: (e1, e2) }
        }
        (_, d) => return Err(Failure::invalid(format!("degree {d} does not fit {ambient:?}"))),
    };
    let terms =
        spec.terms.iter().map(|t| Ok((t.exp.clone(), field.parse_elem(&t.c)?))).collect::<Result<Vec<_>, Failure>>()?;
    let g = MultiForm::from_terms(field, grading, terms)?;
    Ok(Hypersurface::new(ambient, g)?)
}

/// `{"blocks": [[form, ...], ...]}` or a bare list of forms (one block).
pub fn parse_map<F: WireField>(field: &F, v: &Value) -> Result<Vec<Vec<BinaryForm<F::Elem>>>, Failure> {
    let block = |b: &Value| -> Result<Vec<BinaryForm<F::Elem>>, Failure> {
        b.as_array()
            .ok_or_else(|| Failure::invalid(format!("block {b} is not an array of forms")))?
            .iter()
            .map(|g| parse_form(field, g))
            .collect()
    };
    match v {
        Value::Object(m) if m.len() == 1 && m.contains_key("blocks") => m["blocks"]
            .as_array()
            .ok_or_else(|| Failure::invalid("\"blocks\" must be an array"))?
            .iter()
            .map(block)
            .collect(),
        Value::Array(_) => Ok(vec![block(v)?]),
        _ => Err(Failure::invalid("map must be a list of forms or {\"blocks\": [...]}")),
    }
}
