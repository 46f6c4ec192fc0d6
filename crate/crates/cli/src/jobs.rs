//! Job documents: validation, dispatch and result serialisation.

use ratcurve::fano::{self, LineStatus};
use ratcurve::hirzebruch::{self, Hirzebruch, SurfaceClass};
use ratcurve::tangent::{self, Certificate, Verdict};
use ratcurve::{dimension, AmbientSpace, GradedMatrix, PrimeField, RationalCurve, Rationals};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::selfcheck;
use crate::wire::{self, form_json, HypersurfaceSpec, WireField};

/// Exit code for a successful job.
pub const EXIT_OK: i32 = 0;
/// Internal consistency failure; should not happen.
pub const EXIT_INTERNAL: i32 = 1;
/// Malformed or out-of-range input.
pub const EXIT_INVALID: i32 = 2;
/// Well-formed input that violates a mathematical precondition.
pub const EXIT_PRECONDITION: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    Invalid(String),
    Core(ratcurve::Error),
}

impl Failure {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Failure::Invalid(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        use ratcurve::Error as E;
        match self {
            Failure::Invalid(_) => EXIT_INVALID,
            Failure::Core(e) => match e {
                E::InvalidField(_)
                | E::ArityMismatch(_)
                | E::DegreeMismatch(_)
                | E::AllFormsZero
                | E::InvalidAmbient(_)
                | E::InvalidArgument(_) => EXIT_INVALID,
                E::Inconsistent(_) => EXIT_INTERNAL,
                _ => EXIT_PRECONDITION,
            },
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Failure::Invalid(_) => "InvalidInput",
            Failure::Core(e) => e.kind(),
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Invalid(m) => m.clone(),
            Failure::Core(e) => e.to_string(),
        }
    }

    fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Body<'a> {
            kind: &'a str,
            message: String,
        }
        #[derive(Serialize)]
        struct Wrapper<'a> {
            error: Body<'a>,
        }
        serde_json::to_string(&Wrapper { error: Body { kind: self.kind(), message: self.message() } })
            .expect("serialisable")
    }
}

impl From<ratcurve::Error> for Failure {
    fn from(e: ratcurve::Error) -> Self {
        Failure::Core(e)
    }
}

/// Values used when a job omits `field` or `seed`.
#[derive(Debug, Clone)]
pub struct Defaults {
    pub field: String,
    pub seed: u64,
}

impl Default for Defaults {
    fn default() -> Self {
        Defaults { field: "Q".into(), seed: 0 }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JobSpec {
    command: String,
    #[serde(default)]
    field: Option<String>,
    #[serde(default)]
    payload: Option<Value>,
    #[serde(default)]
    seed: Option<u64>,
}

pub enum FieldChoice {
    Q(Rationals),
    Fp(PrimeField),
}

pub fn parse_field(s: &str) -> Result<FieldChoice, Failure> {
    if s == "Q" {
        return Ok(FieldChoice::Q(Rationals));
    }
    let p = s
        .strip_prefix("Fp:")
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| Failure::invalid(format!("field must be \"Q\" or \"Fp:<prime>\", got {s:?}")))?;
    Ok(FieldChoice::Fp(PrimeField::new(p)?))
}

/// The result of one job: compact JSON and its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub json: String,
    pub exit: i32,
}

impl Outcome {
    fn from_result(r: Result<String, Failure>) -> Self {
        match r {
            Ok(json) => Outcome { json, exit: EXIT_OK },
            Err(f) => Outcome { json: f.to_json(), exit: f.exit_code() },
        }
    }
}

fn payload<T: for<'de> Deserialize<'de>>(v: Option<Value>) -> Result<T, Failure> {
    let v = v.unwrap_or(Value::Object(Default::default()));
    serde_json::from_value(v).map_err(|e| Failure::invalid(format!("payload: {e}")))
}

fn to_json<T: Serialize>(v: &T) -> Result<String, Failure> {
    Ok(serde_json::to_string(v).expect("serialisable"))
}

pub fn run_job(doc: &Value, defaults: &Defaults) -> Outcome {
    Outcome::from_result(dispatch(doc, defaults))
}

fn dispatch(doc: &Value, defaults: &Defaults) -> Result<String, Failure> {
    let job: JobSpec = serde_json::from_value(doc.clone()).map_err(|e| Failure::invalid(format!("job: {e}")))?;
    let field = parse_field(job.field.as_deref().unwrap_or(&defaults.field))?;
    let seed = job.seed.unwrap_or(defaults.seed);
    match job.command.as_str() {
        "splitting" => match field {
            FieldChoice::Q(f) => splitting(&f, payload(job.payload)?),
            FieldChoice::Fp(f) => splitting(&f, payload(job.payload)?),
        },
        "formulas" => formulas(payload(job.payload)?),
        "lines" => match field {
            FieldChoice::Fp(f) => lines(&f, payload(job.payload)?),
            FieldChoice::Q(_) => Err(Failure::invalid("lines are enumerated over a prime field \"Fp:<p>\"")),
        },
        "hirzebruch" => hirzebruch_op(payload(job.payload)?),
        "selfcheck" => to_json(&selfcheck::run(&payload(job.payload)?, seed)?),
        other => Err(Failure::invalid(format!(
            "unknown command {other:?}; expected splitting, formulas, lines, hirzebruch or selfcheck"
        ))),
    }
}

/// Runs a single job object or a batch array. Batch results keep input
/// order; the exit code is the largest of the individual codes.
pub fn run_document(text: &str, defaults: &Defaults) -> Outcome {
    let doc: Value = match serde_json::from_str(text) {
        Ok(v) => v,
        Err(e) => return Outcome::from_result(Err(Failure::invalid(format!("not valid JSON: {e}")))),
    };
    match doc {
        Value::Array(jobs) => {
            let outcomes: Vec<Outcome> = jobs.par_iter().map(|j| run_job(j, defaults)).collect();
            let exit = outcomes.iter().map(|o| o.exit).max().unwrap_or(EXIT_OK);
            let body: Vec<&str> = outcomes.iter().map(|o| o.json.as_str()).collect();
            Outcome { json: format!("[{}]", body.join(",")), exit }
        }
        job => run_job(&job, defaults),
    }
}

// ---- splitting ----

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SplittingPayload {
    ambient: Value,
    #[serde(default)]
    hypersurface: Option<HypersurfaceSpec>,
    map: Value,
    #[serde(default)]
    certificate: bool,
}

#[derive(Serialize)]
struct SplittingOut {
    splitting: Vec<i64>,
    h0: i64,
    h1: i64,
    c1_beta: i64,
    free: bool,
    very_free: bool,
    gw_rigid: bool,
    expected_dim: i64,
    tangent_dim_direct: i64,
    verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    obstruction_excess: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<CertificateOut>,
}

#[derive(Serialize)]
struct MatrixOut {
    source: Vec<i64>,
    target: Vec<i64>,
    entries: Vec<Vec<Value>>,
}

#[derive(Serialize)]
struct CertificateOut {
    verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    jacobian: Option<MatrixOut>,
    kernel_inclusion: MatrixOut,
    euler_coords: Vec<Vec<Value>>,
    dual_inclusion: MatrixOut,
}

fn matrix_json<F: WireField>(field: &F, m: &GradedMatrix<F::Elem>) -> MatrixOut {
    MatrixOut {
        source: m.source().twists().to_vec(),
        target: m.target().twists().to_vec(),
        entries: (0..m.rows()).map(|k| (0..m.cols()).map(|j| form_json(field, m.entry(k, j))).collect()).collect(),
    }
}

fn certificate_json<F: WireField>(field: &F, c: &Certificate<F::Elem>, f: &RationalCurve<F::Elem>) -> CertificateOut {
    CertificateOut {
        verified: c.verify(field, f),
        jacobian: c.jacobian.as_ref().map(|j| matrix_json(field, j)),
        kernel_inclusion: matrix_json(field, &c.stage1_inclusion),
        euler_coords: c.euler_coords.iter().map(|w| w.iter().map(|g| form_json(field, g)).collect()).collect(),
        dual_inclusion: matrix_json(field, &c.dual_inclusion),
    }
}

fn splitting<F: WireField>(field: &F, p: SplittingPayload) -> Result<String, Failure> {
    let ambient = wire::parse_ambient(&p.ambient)?;
    let x = match &p.hypersurface {
        Some(spec) => wire::parse_hypersurface(field, spec, Some(ambient))?,
        None => ratcurve::Hypersurface::ambient_space(ambient),
    };
    let f = RationalCurve::new(field, ambient, wire::parse_map(field, &p.map)?)?;
    let t = tangent::pullback_tangent_splitting(field, &f, &x)?;
    let report = tangent::smoothness_report(&t.splitting);
    let direct = tangent::mor_tangent_dim_direct(field, &f, &x)?;
    let (verdict, excess) = match report.verdict {
        Verdict::Smooth { dim } => (format!("smooth_of_dim_{dim}"), None),
        Verdict::Inconclusive { excess } => ("inconclusive".to_string(), Some(excess)),
    };
    to_json(&SplittingOut {
        splitting: t.splitting.values().to_vec(),
        h0: report.h0,
        h1: report.h1,
        c1_beta: report.c1_beta,
        free: t.splitting.is_free(),
        very_free: t.splitting.is_very_free(),
        gw_rigid: t.splitting.is_gw_rigid(),
        expected_dim: report.expected,
        tangent_dim_direct: direct,
        verdict,
        obstruction_excess: excess,
        certificate: p.certificate.then(|| certificate_json(field, &t.certificate, &f)),
    })
}

// ---- formulas ----

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FormulaPayload {
    name: String,
    n: Option<i64>,
    d: Option<i64>,
    e: Option<i64>,
    g: Option<i64>,
    h0: Option<i64>,
    #[serde(rename = "h0L")]
    h0_l: Option<i64>,
    #[serde(rename = "h0Le")]
    h0_le: Option<i64>,
    #[serde(rename = "h1L")]
    h1_l: Option<i64>,
    #[serde(rename = "h1Le")]
    h1_le: Option<i64>,
    c1_beta: Option<i64>,
    #[serde(rename = "dimX")]
    dim_x: Option<i64>,
    codims: Option<Vec<i64>>,
}

#[derive(Serialize)]
struct ValueOut<T> {
    value: T,
}

/// Fetches a required argument and checks its lower bound.
fn arg(name: &str, v: Option<i64>, min: Option<i64>) -> Result<i64, Failure> {
    let x = v.ok_or_else(|| Failure::invalid(format!("missing argument {name:?}")))?;
    if let Some(m) = min {
        if x < m {
            return Err(Failure::invalid(format!("argument {name:?} must be >= {m}, got {x}")));
        }
    }
    Ok(x)
}

fn formulas(p: FormulaPayload) -> Result<String, Failure> {
    let value = match p.name.as_str() {
        "mor_dim_projective" => dimension::mor_dim_projective(arg("n", p.n, Some(1))?, arg("d", p.d, Some(0))?),
        "mor_hypersurface_bound" => {
            dimension::mor_hypersurface_bound(arg("n", p.n, Some(1))?, arg("e", p.e, Some(1))?, arg("d", p.d, Some(1))?)
        }
        "mor_fixed_bundle_dim" => dimension::mor_fixed_bundle_dim(arg("n", p.n, Some(1))?, arg("h0", p.h0, Some(0))?),
        "mor_L_hypersurface_bound" => dimension::mor_l_hypersurface_bound(
            arg("n", p.n, Some(1))?,
            arg("h0L", p.h0_l, Some(0))?,
            arg("h0Le", p.h0_le, Some(0))?,
        ),
        "mor_bound" => dimension::mor_bound(
            arg("c1_beta", p.c1_beta, None)?,
            arg("dimX", p.dim_x, Some(0))?,
            arg("g", p.g, Some(0))?,
        ),
        "mor_refined_bound" => dimension::mor_refined_bound(
            arg("c1_beta", p.c1_beta, None)?,
            arg("dimX", p.dim_x, Some(0))?,
            arg("g", p.g, Some(0))?,
            arg("h1L", p.h1_l, Some(0))?,
            arg("h1Le", p.h1_le, Some(0))?,
        ),
        "curves_bound" => dimension::curves_bound(
            arg("c1_beta", p.c1_beta, None)?,
            arg("dimX", p.dim_x, Some(0))?,
            arg("g", p.g, Some(0))?,
        ),
        "gw_expected_dim" => {
            let codims = p.codims.ok_or_else(|| Failure::invalid("missing argument \"codims\""))?;
            if let Some(c) = codims.iter().find(|&&c| c < 1) {
                return Err(Failure::invalid(format!("codimensions must be >= 1, got {c}")));
            }
            dimension::gw_expected_dim(
                arg("c1_beta", p.c1_beta, None)?,
                arg("dimX", p.dim_x, Some(0))?,
                arg("g", p.g, Some(0))?,
                &codims,
            )
        }
        "fano_lines_expected_dim" => {
            dimension::fano_lines_expected_dim(arg("n", p.n, Some(2))?, arg("e", p.e, Some(1))?)
        }
        other => return Err(Failure::invalid(format!("unknown formula {other:?}"))),
    };
    to_json(&ValueOut { value })
}

// ---- lines ----

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LinesPayload {
    hypersurface: HypersurfaceSpec,
    #[serde(default)]
    budget: Option<u64>,
}

#[derive(Serialize)]
struct LineOut {
    rows: [Vec<u64>; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    splitting: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    h0: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    fano_tangent_dim: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    unobstructed: Option<bool>,
    singular: bool,
}

#[derive(Serialize)]
struct LinesOut {
    field: String,
    rational_lines_only: bool,
    expected_dim: i64,
    count: usize,
    lines: Vec<LineOut>,
}

fn lines(field: &PrimeField, p: LinesPayload) -> Result<String, Failure> {
    let x = wire::parse_hypersurface(field, &p.hypersurface, None)?;
    if !matches!(x.ambient(), AmbientSpace::Projective(_)) {
        return Err(Failure::invalid("lines are enumerated in P^N only"));
    }
    let budget = p.budget.map_or(fano::DEFAULT_LINE_BUDGET, u128::from);
    let records = fano::enumerate_lines(field, &x, budget)?;
    let lines = records
        .into_iter()
        .map(|r| match r.status {
            LineStatus::Smooth { splitting, h0, fano_tangent_dim, unobstructed } => LineOut {
                rows: r.rows,
                splitting: Some(splitting.values().to_vec()),
                h0: Some(h0),
                fano_tangent_dim: Some(fano_tangent_dim),
                unobstructed: Some(unobstructed),
                singular: false,
            },
            LineStatus::Singular => LineOut {
                rows: r.rows,
                splitting: None,
                h0: None,
                fano_tangent_dim: None,
                unobstructed: None,
                singular: true,
            },
        })
        .collect::<Vec<_>>();
    to_json(&LinesOut {
        field: field.descriptor(),
        rational_lines_only: true,
        expected_dim: fano::expected_dim(&x),
        count: lines.len(),
        lines,
    })
}

// ---- hirzebruch ----

#[derive(Deserialize, Serialize, Clone, Copy)]
#[serde(deny_unknown_fields)]
struct ClassSpec {
    e: u32,
    a: i64,
    b: i64,
}

impl From<ClassSpec> for SurfaceClass {
    fn from(c: ClassSpec) -> Self {
        Hirzebruch::new(c.e).class(c.a, c.b)
    }
}

impl From<SurfaceClass> for ClassSpec {
    fn from(c: SurfaceClass) -> Self {
        ClassSpec { e: c.e, a: c.a, b: c.b }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct HirzebruchPayload {
    op: String,
    #[serde(default)]
    class: Option<ClassSpec>,
    #[serde(default)]
    other: Option<ClassSpec>,
    #[serde(default)]
    m: Option<i64>,
    #[serde(default)]
    k: Option<i64>,
    #[serde(default)]
    e: Option<u32>,
}

#[derive(Serialize)]
struct ClassOut {
    class: ClassSpec,
}

fn hirzebruch_op(p: HirzebruchPayload) -> Result<String, Failure> {
    let class = || -> Result<SurfaceClass, Failure> {
        p.class.map(SurfaceClass::from).ok_or_else(|| Failure::invalid("missing \"class\""))
    };
    match p.op.as_str() {
        "intersect" => {
            let other = p.other.map(SurfaceClass::from).ok_or_else(|| Failure::invalid("missing \"other\""))?;
            to_json(&ValueOut { value: hirzebruch::intersect(&class()?, &other)? })
        }
        "is_effective" => to_json(&ValueOut { value: hirzebruch::is_effective(&class()?) }),
        "h0_class" => to_json(&ValueOut { value: hirzebruch::h0_class(&class()?) }),
        "through_points_dim" => {
            let m = arg("m", p.m, Some(0))?;
            to_json(&ValueOut { value: hirzebruch::through_points_dim(&class()?, m) })
        }
        "transport_to_F0" => to_json(&ClassOut { class: hirzebruch::transport_to_f0(&class()?)?.into() }),
        "cover_moduli_dim" => to_json(&ValueOut { value: hirzebruch::cover_moduli_dim(arg("k", p.k, Some(1))?) }),
        "canonical" => {
            let e = p.e.ok_or_else(|| Failure::invalid("missing \"e\""))?;
            to_json(&ClassOut { class: Hirzebruch::new(e).canonical().into() })
        }
        other => Err(Failure::invalid(format!("unknown hirzebruch op {other:?}"))),
    }
}
