//! Randomised consistency checks across modules.
//!
//! All randomness comes from ChaCha8 seeded with the job seed; check `i` of
//! each family reads its own stream, so results do not depend on the number
//! of worker threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ratcurve::hirzebruch::{h0_class, intersect, transport_to_f0, Hirzebruch};
use ratcurve::sampling::{random_instance, random_multiform};
use ratcurve::tangent::{pullback_tangent_splitting, tangent_sections_direct};
use ratcurve::{dimension, Field, Grading, MultiForm, PrimeField};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::jobs::Failure;

/// Streams `[0, EULER_STREAMS)` are used by the tangent instances.
const EULER_STREAMS: u64 = 1 << 32;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SelfcheckPayload {
    #[serde(default = "default_instances")]
    pub instances: usize,
    #[serde(default = "default_prime")]
    pub prime: u64,
}

fn default_instances() -> usize {
    100
}

fn default_prime() -> u64 {
    101
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct CheckFailure {
    pub check: &'static str,
    pub index: usize,
    pub detail: String,
}

#[derive(Serialize, Debug)]
pub struct SelfcheckReport {
    pub checks_run: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failed: Vec<CheckFailure>,
}

#[derive(Default)]
struct Tally {
    run: usize,
    failed: Vec<CheckFailure>,
}

impl Tally {
    fn check(&mut self, name: &'static str, index: usize, ok: bool, detail: impl FnOnce() -> String) {
        self.run += 1;
        if !ok {
            self.failed.push(CheckFailure { check: name, index, detail: detail() });
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.run += other.run;
        self.failed.extend(other.failed);
        self
    }
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn tangent_checks(field: &PrimeField, seed: u64, i: usize) -> Tally {
    let mut t = Tally::default();
    let mut rng = rng_for(seed, i as u64);
    let inst = random_instance(field, &mut rng);
    let split = match pullback_tangent_splitting(field, &inst.curve, &inst.target) {
        Ok(s) => s,
        Err(e) => {
            t.check("splitting", i, false, || e.to_string());
            return t;
        }
    };
    let st = &split.splitting;
    t.check("rank_equals_dim", i, st.rank() == inst.target.dim(), || format!("{st} on dim {}", inst.target.dim()));
    let c1 = inst.target.c1_beta(&inst.curve);
    t.check("degree_identity", i, st.degree() == c1, || format!("{st} against c1·β = {c1}"));
    let rr = dimension::mor_bound(st.degree(), st.rank() as i64, 0);
    t.check("riemann_roch", i, st.h0(0) - st.h1(0) == rr, || format!("{st}: h0 - h1 != {rr}"));
    for k in -1..=2 {
        let direct = tangent_sections_direct(field, &inst.curve, &inst.target, k);
        t.check("direct_h0", i, direct.as_ref().ok() == Some(&st.h0(k)), || {
            format!("k = {k}: splitting {st} gives {}, direct route {direct:?}", st.h0(k))
        });
    }
    t.check("certificate", i, split.certificate.verify(field, &inst.curve), || format!("certificate for {st}"));
    t
}

fn euler_check(field: &PrimeField, seed: u64, i: usize) -> Tally {
    let mut t = Tally::default();
    let mut rng = rng_for(seed, EULER_STREAMS + i as u64);
    let grading = if rng.gen_bool(0.5) {
        Grading::Standard { nvars: rng.gen_range(2..=4), degree: rng.gen_range(1..=4) }
    } else {
        Grading::Bigraded {
            blocks: (rng.gen_range(2..=3), rng.gen_range(2..=3)),
            degree: (rng.gen_range(0..=3), rng.gen_range(0..=3)),
        }
    };
    let g = random_multiform(field, &mut rng, grading);
    let blocks = match grading {
        Grading::Standard { nvars, degree } => vec![(0..nvars, degree)],
        Grading::Bigraded { blocks: (a, b), degree: (d1, d2) } => vec![(0..a, d1), (a..a + b, d2)],
    };
    for (range, d) in blocks {
        let mut acc = MultiForm::zero(grading);
        for j in range {
            acc = acc.add(field, &g.partial(field, j).mul_var(field, j)).expect("same grading");
        }
        t.check("euler_identity", i, acc == g.scale(field, &field.from_i64(d)), || format!("{grading:?}"));
    }
    t
}

fn hirzebruch_checks() -> Tally {
    let mut t = Tally::default();
    for e in 0..=3u32 {
        let s = Hirzebruch::new(2 * e);
        let f0 = Hirzebruch::new(0);
        let idx = e as usize;
        t.check("canonical_transport", idx, transport_to_f0(&s.canonical()) == Ok(f0.canonical()), || {
            format!("e = {e}")
        });
        for a in -4..=4 {
            for b in -4..=4 {
                let c = s.class(a, b);
                let tc = transport_to_f0(&c).expect("even ruling index");
                for (a2, b2) in [(1, 0), (0, 1), (1, 2), (-2, 3)] {
                    let c2 = s.class(a2, b2);
                    let tc2 = transport_to_f0(&c2).expect("even ruling index");
                    t.check("transport_isometry", idx, intersect(&c, &c2) == intersect(&tc, &tc2), || {
                        format!("{c} . {c2}")
                    });
                }
                let lattice = (0..=a).map(|i| (0..=b - i * i64::from(2 * e)).count() as i64).sum::<i64>();
                t.check("h0_lattice_points", idx, h0_class(&c) == lattice, || format!("{c}"));
            }
        }
    }
    t
}

pub fn run(p: &SelfcheckPayload, seed: u64) -> Result<SelfcheckReport, Failure> {
    let field = PrimeField::new(p.prime)?;
    if p.prime < 11 {
        return Err(Failure::invalid("selfcheck needs a prime of at least 11"));
    }
    let tangent = (0..p.instances).into_par_iter().map(|i| tangent_checks(&field, seed, i)).collect::<Vec<_>>();
    let euler = (0..p.instances).into_par_iter().map(|i| euler_check(&field, seed, i)).collect::<Vec<_>>();
    let total = tangent.into_iter().chain(euler).chain([hirzebruch_checks()]).fold(Tally::default(), Tally::merge);
    Ok(SelfcheckReport { checks_run: total.run, failures: total.failed.len(), failed: total.failed })
}
