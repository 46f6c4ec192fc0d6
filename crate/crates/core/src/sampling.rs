//! Random test instances: rational curves and hypersurfaces through them.

use rand::Rng;

use crate::exact::binary::{is_coprime, BinaryForm};
use crate::exact::field::Field;
use crate::exact::linalg::{kernel_basis, Matrix};
use crate::exact::multi::{graded_monomials, Grading, MultiForm};
use crate::tangent::{self, AmbientSpace, Hypersurface, RationalCurve};
use crate::Error;

/// A curve together with a target it lies on, smooth along the curve.
#[derive(Clone, Debug)]
pub struct Instance<E> {
    pub curve: RationalCurve<E>,
    pub target: Hypersurface<E>,
}

pub fn random_form<F: Field, R: Rng + ?Sized>(field: &F, rng: &mut R, degree: i64) -> BinaryForm<F::Elem> {
    if degree < 0 {
        return BinaryForm::zero(field, degree);
    }
    BinaryForm::new((0..=degree).map(|_| field.sample(rng)).collect())
}

/// Random form with every monomial of the grading present with a random
/// (possibly zero) coefficient.
pub fn random_multiform<F: Field, R: Rng + ?Sized>(field: &F, rng: &mut R, grading: Grading) -> MultiForm<F::Elem> {
    let terms: Vec<_> = graded_monomials(grading).into_iter().map(|m| (m, field.sample(rng))).collect();
    MultiForm::from_terms(field, grading, terms).expect("monomials fit their grading")
}

/// A base-point-free map with the given block degrees, redrawn until valid.
pub fn random_curve<F: Field, R: Rng + ?Sized>(
    field: &F,
    rng: &mut R,
    ambient: AmbientSpace,
    degrees: &[i64],
) -> RationalCurve<F::Elem> {
    let sizes = ambient.block_sizes();
    loop {
        let blocks: Vec<Vec<_>> =
            sizes.iter().zip(degrees).map(|(&n, &d)| (0..n).map(|_| random_form(field, rng, d)).collect()).collect();
        if blocks.iter().all(|b| is_coprime(field, b)) {
            return RationalCurve::new(field, ambient, blocks).expect("validated above");
        }
    }
}

/// A random hypersurface of the given grading containing `curve`, or `None`
/// if no such nonzero form exists (or the draw was zero).
pub fn random_hypersurface_through<F: Field, R: Rng + ?Sized>(
    field: &F,
    rng: &mut R,
    curve: &RationalCurve<F::Elem>,
    grading: Grading,
) -> Option<Hypersurface<F::Elem>> {
    let monomials = graded_monomials(grading);
    let forms = curve.forms();
    let images: Vec<BinaryForm<F::Elem>> = monomials
        .iter()
        .map(|m| {
            MultiForm::from_terms(field, grading, [(m.clone(), field.one())])
                .and_then(|g| g.substitute(field, &forms))
                .expect("monomial substitution")
        })
        .collect();
    let rows = images.first().map_or(0, |g| (g.degree() + 1).max(0) as usize);
    let mut mat = Matrix::zeros(field, rows, monomials.len());
    for (c, g) in images.iter().enumerate() {
        for (r, v) in g.coeffs().iter().enumerate() {
            mat[(r, c)] = v.clone();
        }
    }
    let kernel = kernel_basis(field, &mat);
    if kernel.is_empty() {
        return None;
    }
    let mut coeffs = vec![field.zero(); monomials.len()];
    for v in &kernel {
        let c = field.sample(rng);
        for (x, y) in coeffs.iter_mut().zip(v) {
            *x = field.add(x, &field.mul(&c, y));
        }
    }
    let g = MultiForm::from_terms(field, grading, monomials.into_iter().zip(coeffs)).ok()?;
    Hypersurface::new(curve.ambient(), g).ok()
}

fn draw_projective<F: Field, R: Rng + ?Sized>(field: &F, rng: &mut R) -> Option<Instance<F::Elem>> {
    let n = rng.gen_range(2..=3usize);
    let d = rng.gen_range(1..=4i64);
    let e = rng.gen_range(1..=3i64);
    let ambient = AmbientSpace::Projective(n);
    let curve = random_curve(field, rng, ambient, &[d]);
    let target = random_hypersurface_through(field, rng, &curve, Grading::Standard { nvars: n + 1, degree: e })?;
    Some(Instance { curve, target })
}

fn draw_bare<F: Field, R: Rng + ?Sized>(field: &F, rng: &mut R) -> Instance<F::Elem> {
    let n = rng.gen_range(1..=3usize);
    let d = rng.gen_range(1..=4i64);
    let ambient = AmbientSpace::Projective(n);
    Instance { curve: random_curve(field, rng, ambient, &[d]), target: Hypersurface::ambient_space(ambient) }
}

fn draw_biprojective<F: Field, R: Rng + ?Sized>(field: &F, rng: &mut R) -> Option<Instance<F::Elem>> {
    let (a, b) = (rng.gen_range(1..=2usize), rng.gen_range(1..=2usize));
    let (d1, d2) = (rng.gen_range(0..=3i64), rng.gen_range(0..=3i64));
    let (e1, e2) = (rng.gen_range(0..=2i64), rng.gen_range(0..=2i64));
    if d1 + d2 == 0 || e1 + e2 == 0 {
        return None;
    }
    let ambient = AmbientSpace::Biprojective(a, b);
    let curve = random_curve(field, rng, ambient, &[d1, d2]);
    let grading = Grading::Bigraded { blocks: (a + 1, b + 1), degree: (e1, e2) };
    let target = random_hypersurface_through(field, rng, &curve, grading)?;
    Some(Instance { curve, target })
}

/// A random instance on which the tangent pipeline is defined: about 70%
/// curves on hypersurfaces in `P^2` or `P^3`, 15% curves in `P^N` itself and
/// 15% curves on bihomogeneous hypersurfaces in `P^a x P^b`. Draws that are
/// singular along the curve are discarded.
pub fn random_instance<F: Field, R: Rng + ?Sized>(field: &F, rng: &mut R) -> Instance<F::Elem> {
    loop {
        let kind = rng.gen_range(0..100u32);
        let candidate = if kind < 70 {
            draw_projective(field, rng)
        } else if kind < 85 {
            Some(draw_bare(field, rng))
        } else {
            draw_biprojective(field, rng)
        };
        if let Some(inst) = candidate {
            match tangent::pullback_tangent_splitting(field, &inst.curve, &inst.target) {
                Ok(_) => return inst,
                Err(Error::SingularAlongCurve) => continue,
                Err(e) => panic!("pipeline failed on a random instance: {e}"),
            }
        }
    }
}
