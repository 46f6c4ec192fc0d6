//! Pulled-back tangent bundles `f*T_X` of rational curves.
//!
//! For `X` a hypersurface `G = 0` in `P^N` (or a `(e1, e2)` hypersurface in
//! `P^a x P^b`) and `f: P^1 -> X` given by binary forms, the Euler sequence
//! gives `f*T_X = M / O` (one `O` per projective factor), where
//! `M = ker(⊕ O(d) -> O(de))` is cut out by the pulled-back Jacobian row and
//! the `O` summands are embedded by the Euler sections `f`. The splitting type
//! of `f*T_X` is read off the dual: `(f*T_X)^∨ = ker(M^∨ -> O^k)`, where the
//! map is given by the coordinates of the Euler sections in `M`.

use crate::dimension;
use crate::exact::binary::{is_coprime, BinaryForm};
use crate::exact::field::Field;
use crate::exact::linalg::{self, Matrix};
use crate::exact::multi::{Grading, MultiForm};
use crate::syzygy::{self, GradedMatrix, SplittingType};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AmbientSpace {
    /// `P^N`
    Projective(usize),
    /// `P^a x P^b`
    Biprojective(usize, usize),
}

impl AmbientSpace {
    pub fn projective(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidAmbient("P^N needs N >= 1".into()));
        }
        Ok(AmbientSpace::Projective(n))
    }

    pub fn biprojective(a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidAmbient("P^a x P^b needs a, b >= 1".into()));
        }
        Ok(AmbientSpace::Biprojective(a, b))
    }

    pub fn dim(&self) -> usize {
        match *self {
            AmbientSpace::Projective(n) => n,
            AmbientSpace::Biprojective(a, b) => a + b,
        }
    }

    /// Number of homogeneous coordinates in each factor.
    pub fn block_sizes(&self) -> Vec<usize> {
        match *self {
            AmbientSpace::Projective(n) => vec![n + 1],
            AmbientSpace::Biprojective(a, b) => vec![a + 1, b + 1],
        }
    }

    /// One Euler relation per projective factor.
    pub fn euler_relations(&self) -> usize {
        self.block_sizes().len()
    }

    pub fn nvars(&self) -> usize {
        self.block_sizes().iter().sum()
    }
}

/// A hypersurface `G = 0`, or the ambient space itself when `G` is absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypersurface<E> {
    ambient: AmbientSpace,
    equation: Option<MultiForm<E>>,
}

impl<E: Clone> Hypersurface<E> {
    pub fn ambient_space(ambient: AmbientSpace) -> Self {
        Hypersurface { ambient, equation: None }
    }

    pub fn new(ambient: AmbientSpace, equation: MultiForm<E>) -> Result<Self> {
        let ok = match (ambient, equation.grading()) {
            (AmbientSpace::Projective(n), Grading::Standard { nvars, degree }) => nvars == n + 1 && degree >= 1,
            (AmbientSpace::Biprojective(a, b), Grading::Bigraded { blocks, degree }) => {
                blocks == (a + 1, b + 1) && degree.0 >= 0 && degree.1 >= 0 && degree.0 + degree.1 >= 1
            }
            _ => false,
        };
        if !ok {
            return Err(Error::DegreeMismatch(format!(
                "equation grading {:?} does not fit {ambient:?}",
                equation.grading()
            )));
        }
        if equation.is_zero() {
            return Err(Error::InvalidArgument("the zero polynomial does not define a hypersurface".into()));
        }
        Ok(Hypersurface { ambient, equation: Some(equation) })
    }

    pub fn ambient(&self) -> AmbientSpace {
        self.ambient
    }

    pub fn equation(&self) -> Option<&MultiForm<E>> {
        self.equation.as_ref()
    }

    pub fn dim(&self) -> usize {
        self.ambient.dim() - usize::from(self.equation.is_some())
    }

    /// Degree of the equation in each factor (empty equation: zeros).
    pub fn degrees(&self) -> Vec<i64> {
        match self.equation.as_ref().map(MultiForm::grading) {
            Some(Grading::Standard { degree, .. }) => vec![degree],
            Some(Grading::Bigraded { degree, .. }) => vec![degree.0, degree.1],
            None => vec![0; self.ambient.euler_relations()],
        }
    }

    /// `c_1(X) · f_*[P^1]` by adjunction: `Σ (n_i + 1 - e_i) d_i` over the
    /// projective factors `P^(n_i)`.
    pub fn c1_beta(&self, curve: &RationalCurve<E>) -> i64 {
        self.ambient
            .block_sizes()
            .iter()
            .zip(self.degrees())
            .zip(curve.block_degrees())
            .map(|((&size, e), d)| (size as i64 - e) * d)
            .sum()
    }
}

/// `f: P^1 -> ambient`, one block of binary forms per projective factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalCurve<E> {
    ambient: AmbientSpace,
    blocks: Vec<Vec<BinaryForm<E>>>,
}

impl<E: Clone> RationalCurve<E> {
    /// Checks block sizes, a common non-negative degree per block, and that
    /// no block has a base point.
    pub fn new<F: Field<Elem = E>>(field: &F, ambient: AmbientSpace, blocks: Vec<Vec<BinaryForm<E>>>) -> Result<Self> {
        let sizes = ambient.block_sizes();
        if blocks.len() != sizes.len() || blocks.iter().zip(&sizes).any(|(b, &n)| b.len() != n) {
            return Err(Error::ArityMismatch(format!(
                "expected blocks of sizes {sizes:?}, got {:?}",
                blocks.iter().map(Vec::len).collect::<Vec<_>>()
            )));
        }
        for (i, block) in blocks.iter().enumerate() {
            let d = block[0].degree();
            if d < 0 || block.iter().any(|f| f.degree() != d) {
                return Err(Error::DegreeMismatch(format!("block {i} must consist of forms of one degree >= 0")));
            }
            if !is_coprime(field, block) {
                return Err(Error::BasePoint(format!("the forms of block {i} have a common zero")));
            }
        }
        Ok(RationalCurve { ambient, blocks })
    }

    pub fn ambient(&self) -> AmbientSpace {
        self.ambient
    }

    pub fn blocks(&self) -> &[Vec<BinaryForm<E>>] {
        &self.blocks
    }

    pub fn block_degrees(&self) -> Vec<i64> {
        self.blocks.iter().map(|b| b[0].degree()).collect()
    }

    /// All coordinate forms, blocks concatenated.
    pub fn forms(&self) -> Vec<BinaryForm<E>> {
        self.blocks.iter().flatten().cloned().collect()
    }

    /// Twists of `f*O(1,..)^(N+1)`: each coordinate contributes its block degree.
    fn coordinate_twists(&self) -> Vec<i64> {
        self.blocks.iter().flat_map(|b| std::iter::repeat_n(b[0].degree(), b.len())).collect()
    }

    /// The Euler sections: block `i` of `f` placed in its own coordinates,
    /// zero elsewhere.
    fn euler_sections<F: Field<Elem = E>>(&self, field: &F) -> Vec<Vec<BinaryForm<E>>> {
        (0..self.blocks.len())
            .map(|i| {
                self.blocks
                    .iter()
                    .enumerate()
                    .flat_map(|(k, b)| {
                        b.iter()
                            .map(|g| if k == i { g.clone() } else { BinaryForm::zero(field, g.degree()) })
                            .collect::<Vec<_>>()
                    })
                    .collect()
            })
            .collect()
    }
}

fn check_ambient<E: Clone>(f: &RationalCurve<E>, x: &Hypersurface<E>) -> Result<()> {
    if f.ambient != x.ambient {
        return Err(Error::ArityMismatch(format!("curve in {:?}, hypersurface in {:?}", f.ambient, x.ambient)));
    }
    Ok(())
}

/// Whether `G(f) ≡ 0`; always true for the ambient space itself.
pub fn on_hypersurface<F: Field>(field: &F, f: &RationalCurve<F::Elem>, x: &Hypersurface<F::Elem>) -> Result<bool> {
    check_ambient(f, x)?;
    match &x.equation {
        None => Ok(true),
        Some(g) => Ok(g.substitute(field, &f.forms())?.is_zero(field)),
    }
}

/// The pulled-back Jacobian row `(∂G/∂x_j (f))` as a map
/// `⊕ O(d_j) -> O(deg G(f))`.
fn jacobian_row<F: Field>(
    field: &F,
    g: &MultiForm<F::Elem>,
    f: &RationalCurve<F::Elem>,
) -> Result<GradedMatrix<F::Elem>> {
    let forms = f.forms();
    let target = g.substitute(field, &forms)?.degree();
    let entries = g.partials(field).iter().map(|p| p.substitute(field, &forms)).collect::<Result<Vec<_>>>()?;
    GradedMatrix::row(field, f.coordinate_twists(), target, entries)
}

/// Everything needed to re-check a splitting computation without trusting
/// the generator search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate<E> {
    /// Pulled-back Jacobian row; `None` for the ambient space.
    pub jacobian: Option<GradedMatrix<E>>,
    /// `M -> ⊕ O(d_j)`.
    pub stage1_inclusion: GradedMatrix<E>,
    /// Coordinates of the Euler sections in `M`.
    pub euler_coords: Vec<Vec<BinaryForm<E>>>,
    /// `M^∨ -> O^k`, rows the Euler coordinates.
    pub dual_map: GradedMatrix<E>,
    /// `(f*T_X)^∨ -> M^∨`.
    pub dual_inclusion: GradedMatrix<E>,
}

impl<E: Clone + PartialEq> Certificate<E> {
    /// Re-verifies every identity the splitting rests on: the Jacobian kills
    /// `M`, the Euler coordinates map to `f`, the dual map kills the dual
    /// inclusion, and the dual map is surjective.
    pub fn verify<F: Field<Elem = E>>(&self, field: &F, f: &RationalCurve<E>) -> bool {
        if let Some(jac) = &self.jacobian {
            match jac.compose(field, &self.stage1_inclusion) {
                Ok(c) if c.is_zero(field) => {}
                _ => return false,
            }
        }
        for (w, u) in self.euler_coords.iter().zip(f.euler_sections(field)) {
            match self.stage1_inclusion.apply(field, w) {
                Ok(image) if image == u => {}
                _ => return false,
            }
        }
        for (b, w) in self.euler_coords.iter().enumerate() {
            if self.dual_map.rows() <= b || (0..w.len()).any(|i| *self.dual_map.entry(b, i) != w[i]) {
                return false;
            }
        }
        syzygy::is_surjective(field, &self.dual_map)
            && matches!(self.dual_map.compose(field, &self.dual_inclusion), Ok(c) if c.is_zero(field))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentSplitting<E> {
    pub splitting: SplittingType,
    pub certificate: Certificate<E>,
}

/// Splitting type of `f*T_X`.
///
/// Errors: [`Error::NotOnHypersurface`], [`Error::SingularAlongCurve`] when
/// the Jacobian row has a common zero along `f`, and
/// [`Error::DegenerateEulerFrame`] if the Euler sections fail to span a
/// subbundle of `M` (not expected for valid input).
pub fn pullback_tangent_splitting<F: Field>(
    field: &F,
    f: &RationalCurve<F::Elem>,
    x: &Hypersurface<F::Elem>,
) -> Result<TangentSplitting<F::Elem>> {
    if !on_hypersurface(field, f, x)? {
        return Err(Error::NotOnHypersurface);
    }
    let (jacobian, stage1_inclusion) = match &x.equation {
        Some(g) => {
            let row = jacobian_row(field, g, f)?;
            let kernel = syzygy::kernel_bundle(field, &row).map_err(|e| match e {
                Error::NotSurjective => Error::SingularAlongCurve,
                other => other,
            })?;
            (Some(row), kernel.inclusion)
        }
        None => (None, GradedMatrix::identity(field, f.coordinate_twists())),
    };

    let euler_coords = f
        .euler_sections(field)
        .iter()
        .map(|u| {
            syzygy::express_in_kernel(field, &stage1_inclusion, u).map_err(|e| match e {
                Error::NotInKernel => Error::Inconsistent("Euler section outside the Jacobian kernel".into()),
                other => other,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let dual_source: Vec<i64> = stage1_inclusion.source().twists().iter().map(|a| -a).collect();
    let dual_map = GradedMatrix::new(field, dual_source, vec![0; euler_coords.len()], euler_coords.clone())?;
    let dual = syzygy::kernel_bundle(field, &dual_map).map_err(|e| match e {
        Error::NotSurjective => Error::DegenerateEulerFrame,
        other => other,
    })?;
    let splitting = dual.splitting.negated();

    if splitting.rank() != x.dim() {
        return Err(Error::Inconsistent(format!("rank {} but dim X = {}", splitting.rank(), x.dim())));
    }
    let c1 = x.c1_beta(f);
    if splitting.degree() != c1 {
        return Err(Error::Inconsistent(format!("degree {} but c1(X)·f_*[P^1] = {c1}", splitting.degree())));
    }
    Ok(TangentSplitting {
        splitting,
        certificate: Certificate { jacobian, stage1_inclusion, euler_coords, dual_map, dual_inclusion: dual.inclusion },
    })
}

/// `(h^0, h^1)` of `f*T_X(k)` from its splitting type.
pub fn h0_h1(st: &SplittingType, k: i64) -> (i64, i64) {
    (st.h0(k), st.h1(k))
}

pub fn is_free<F: Field>(field: &F, f: &RationalCurve<F::Elem>, x: &Hypersurface<F::Elem>) -> Result<bool> {
    Ok(pullback_tangent_splitting(field, f, x)?.splitting.is_free())
}

pub fn is_very_free<F: Field>(field: &F, f: &RationalCurve<F::Elem>, x: &Hypersurface<F::Elem>) -> Result<bool> {
    Ok(pullback_tangent_splitting(field, f, x)?.splitting.is_very_free())
}

pub fn is_gw_rigid_type<F: Field>(field: &F, f: &RationalCurve<F::Elem>, x: &Hypersurface<F::Elem>) -> Result<bool> {
    Ok(pullback_tangent_splitting(field, f, x)?.splitting.is_gw_rigid())
}

/// Dimension of the space of first-order deformations `h` of degree
/// `d + k` (per block) with `Σ ∂G/∂x_j (f) · h_j = 0`, minus the
/// `max(0, k + 1)`-dimensional Euler directions `λ·f` of each factor.
///
/// Computed straight from the Taylor condition: every coordinate monomial is
/// multiplied through by the pulled-back partials and the resulting linear
/// map is row reduced. For `k >= -1` this equals `h^0(f*T_X(k))`; it does not
/// use the syzygy engine.
pub fn tangent_sections_direct<F: Field>(
    field: &F,
    f: &RationalCurve<F::Elem>,
    x: &Hypersurface<F::Elem>,
    k: i64,
) -> Result<i64> {
    if !on_hypersurface(field, f, x)? {
        return Err(Error::NotOnHypersurface);
    }
    let forms = f.forms();
    let twists = f.coordinate_twists();
    let unknown_degrees: Vec<i64> = twists.iter().map(|d| d + k).collect();
    let total_unknowns: usize = unknown_degrees.iter().map(|&d| (d + 1).max(0) as usize).sum();
    let kernel_dim = match &x.equation {
        None => total_unknowns as i64,
        Some(g) => {
            let partials: Vec<BinaryForm<F::Elem>> =
                g.partials(field).iter().map(|p| p.substitute(field, &forms)).collect::<Result<_>>()?;
            let target_degree = g.substitute(field, &forms)?.degree() + k;
            let rows = (target_degree + 1).max(0) as usize;
            let mut columns: Vec<Vec<F::Elem>> = Vec::with_capacity(total_unknowns);
            for (j, &deg) in unknown_degrees.iter().enumerate() {
                for i in 0..(deg + 1).max(0) as usize {
                    let image = partials[j].mul(field, &BinaryForm::monomial(field, deg, i));
                    columns.push(if image.degree() < 0 { vec![field.zero(); rows] } else { image.into_coeffs() });
                }
            }
            let mut mat = Matrix::zeros(field, rows, total_unknowns);
            for (c, col) in columns.iter().enumerate() {
                for (r, v) in col.iter().enumerate() {
                    mat[(r, c)] = v.clone();
                }
            }
            (total_unknowns - linalg::rank(field, &mat)) as i64
        }
    };
    Ok(kernel_dim - (x.ambient.euler_relations() as i64) * (k + 1).max(0))
}

/// `dim T_[f] Mor(P^1, X)` in the projectivised parametrisation, computed
/// directly from the Taylor condition (no splitting type involved).
pub fn mor_tangent_dim_direct<F: Field>(
    field: &F,
    f: &RationalCurve<F::Elem>,
    x: &Hypersurface<F::Elem>,
) -> Result<i64> {
    tangent_sections_direct(field, f, x, 0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// `h^1 = 0`: `Mor(P^1, X)` is smooth at `[f]` of this dimension.
    Smooth { dim: i64 },
    /// `h^1 > 0`: the tangent space exceeds the expected dimension by
    /// `excess`, so smoothness cannot be concluded.
    Inconclusive { excess: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothnessReport {
    pub splitting: SplittingType,
    pub h0: i64,
    pub h1: i64,
    pub expected: i64,
    pub c1_beta: i64,
    pub verdict: Verdict,
}

pub fn smoothness_report(st: &SplittingType) -> SmoothnessReport {
    let (h0, h1) = h0_h1(st, 0);
    let c1_beta = st.degree();
    let expected = dimension::mor_bound(c1_beta, st.rank() as i64, 0);
    let verdict = if h1 == 0 { Verdict::Smooth { dim: h0 } } else { Verdict::Inconclusive { excess: h0 - expected } };
    SmoothnessReport { splitting: st.clone(), h0, h1, expected, c1_beta, verdict }
}

pub fn smoothness_verdict<F: Field>(
    field: &F,
    f: &RationalCurve<F::Elem>,
    x: &Hypersurface<F::Elem>,
) -> Result<SmoothnessReport> {
    Ok(smoothness_report(&pullback_tangent_splitting(field, f, x)?.splitting))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::{PrimeField, Rationals};
    use num_rational::BigRational;

    type Q = BigRational;

    fn form(c: &[i64]) -> BinaryForm<Q> {
        BinaryForm::new(c.iter().map(|&x| Rationals.from_i64(x)).collect())
    }

    fn q(x: i64) -> Q {
        Rationals.from_i64(x)
    }

    fn plane_line() -> (RationalCurve<Q>, Hypersurface<Q>) {
        let amb = AmbientSpace::projective(2).unwrap();
        let f = RationalCurve::new(&Rationals, amb, vec![vec![form(&[1, 0]), form(&[0, 1]), form(&[0, 0])]]).unwrap();
        (f, Hypersurface::ambient_space(amb))
    }

    fn quadric() -> Hypersurface<Q> {
        let g = MultiForm::from_terms(
            &Rationals,
            Grading::Standard { nvars: 4, degree: 2 },
            [(vec![1, 0, 0, 1], q(1)), (vec![0, 1, 1, 0], q(-1))],
        )
        .unwrap();
        Hypersurface::new(AmbientSpace::projective(3).unwrap(), g).unwrap()
    }

    fn quadric_line() -> RationalCurve<Q> {
        RationalCurve::new(
            &Rationals,
            AmbientSpace::projective(3).unwrap(),
            vec![vec![form(&[1, 0]), form(&[0, 1]), form(&[0, 0]), form(&[0, 0])]],
        )
        .unwrap()
    }

    fn blowup() -> Hypersurface<Q> {
        // x0 y1 - x1 y0 in P^2 x P^1
        let g = MultiForm::from_terms(
            &Rationals,
            Grading::Bigraded { blocks: (3, 2), degree: (1, 1) },
            [(vec![1, 0, 0, 0, 1], q(1)), (vec![0, 1, 0, 1, 0], q(-1))],
        )
        .unwrap();
        Hypersurface::new(AmbientSpace::biprojective(2, 1).unwrap(), g).unwrap()
    }

    fn exceptional(second: Vec<BinaryForm<Q>>) -> RationalCurve<Q> {
        RationalCurve::new(
            &Rationals,
            AmbientSpace::biprojective(2, 1).unwrap(),
            vec![vec![form(&[0]), form(&[0]), form(&[1])], second],
        )
        .unwrap()
    }

    #[test]
    fn incidence_examples() {
        let f = Rationals;
        assert!(on_hypersurface(&f, &quadric_line(), &quadric()).unwrap());
        let off = RationalCurve::new(
            &f,
            AmbientSpace::projective(3).unwrap(),
            vec![vec![form(&[1, 0]), form(&[0, 1]), form(&[0, 1]), form(&[1, 0])]],
        )
        .unwrap();
        assert!(!on_hypersurface(&f, &off, &quadric()).unwrap());
        assert!(on_hypersurface(&f, &exceptional(vec![form(&[1, 0]), form(&[0, 1])]), &blowup()).unwrap());
        assert!(matches!(pullback_tangent_splitting(&f, &off, &quadric()), Err(Error::NotOnHypersurface)));
    }

    #[test]
    fn plane_line_splits_as_two_one() {
        let f = Rationals;
        let (c, x) = plane_line();
        let t = pullback_tangent_splitting(&f, &c, &x).unwrap();
        assert_eq!(t.splitting.values(), &[2, 1]);
        assert!(t.certificate.verify(&f, &c));
        assert_eq!(tangent_sections_direct(&f, &c, &x, -1).unwrap(), 3);
        assert_eq!(tangent_sections_direct(&f, &c, &x, 0).unwrap(), 5);
    }

    // T_P2 restricted to a smooth conic is O(3) + O(3): at twist -4 the Euler
    // sequence gives H^0 = ker(H^1(O(-4)) -> H^1(O(-2))^3), which is dual to
    // the surjection (a, b, c) -> a s^2 + b st + c t^2, hence zero.
    #[test]
    fn conic_in_plane() {
        let f = Rationals;
        let amb = AmbientSpace::projective(2).unwrap();
        let c = RationalCurve::new(&f, amb, vec![vec![form(&[1, 0, 0]), form(&[0, 1, 0]), form(&[0, 0, 1])]]).unwrap();
        let t = pullback_tangent_splitting(&f, &c, &Hypersurface::ambient_space(amb)).unwrap();
        assert_eq!(t.splitting.values(), &[3, 3]);
        assert!(t.certificate.verify(&f, &c));
    }

    #[test]
    fn exceptional_curve_and_its_double_cover() {
        let f = Rationals;
        let e = exceptional(vec![form(&[1, 0]), form(&[0, 1])]);
        let t = pullback_tangent_splitting(&f, &e, &blowup()).unwrap();
        assert_eq!(t.splitting.values(), &[2, -1]);
        assert!(t.certificate.verify(&f, &e));
        assert!(!is_free(&f, &e, &blowup()).unwrap());
        assert_eq!(mor_tangent_dim_direct(&f, &e, &blowup()).unwrap(), 3);

        let cover = exceptional(vec![form(&[1, 0, 0]), form(&[0, 0, 1])]);
        let t = pullback_tangent_splitting(&f, &cover, &blowup()).unwrap();
        assert_eq!(t.splitting.values(), &[4, -2]);
        let r = smoothness_verdict(&f, &cover, &blowup()).unwrap();
        assert_eq!((r.h0, r.h1, r.expected), (5, 1, 4));
        assert_eq!(r.verdict, Verdict::Inconclusive { excess: 1 });
    }

    #[test]
    fn line_on_quadric_surface() {
        let f = Rationals;
        let t = pullback_tangent_splitting(&f, &quadric_line(), &quadric()).unwrap();
        assert_eq!(t.splitting.values(), &[2, 0]);
        assert!(is_free(&f, &quadric_line(), &quadric()).unwrap());
        assert!(!is_very_free(&f, &quadric_line(), &quadric()).unwrap());
        assert!(!is_gw_rigid_type(&f, &quadric_line(), &quadric()).unwrap());
        assert_eq!(mor_tangent_dim_direct(&f, &quadric_line(), &quadric()).unwrap(), 4);
        assert_eq!(tangent_sections_direct(&f, &quadric_line(), &quadric(), -1).unwrap(), 2);
        let r = smoothness_verdict(&f, &quadric_line(), &quadric()).unwrap();
        assert_eq!(r.verdict, Verdict::Smooth { dim: 4 });
        assert_eq!(r.expected, 4);
    }

    #[test]
    fn line_on_fermat_cubic_is_rigid_type() {
        let f = PrimeField::new(101).unwrap();
        let g = MultiForm::from_terms(
            &f,
            Grading::Standard { nvars: 4, degree: 3 },
            (0..4).map(|j| {
                let mut e = vec![0; 4];
                e[j] = 3;
                (e, 1)
            }),
        )
        .unwrap();
        let x = Hypersurface::new(AmbientSpace::projective(3).unwrap(), g).unwrap();
        let m1 = f.neg(&1);
        let line = RationalCurve::new(
            &f,
            AmbientSpace::projective(3).unwrap(),
            vec![vec![
                BinaryForm::new(vec![1, 0]),
                BinaryForm::new(vec![m1, 0]),
                BinaryForm::new(vec![0, 1]),
                BinaryForm::new(vec![0, m1]),
            ]],
        )
        .unwrap();
        assert!(is_gw_rigid_type(&f, &line, &x).unwrap());
        assert_eq!(mor_tangent_dim_direct(&f, &line, &x).unwrap(), 3);
    }

    #[test]
    fn constant_map_has_trivial_splitting() {
        let f = Rationals;
        let c = RationalCurve::new(
            &f,
            AmbientSpace::projective(3).unwrap(),
            vec![vec![form(&[1]), form(&[0]), form(&[0]), form(&[0])]],
        )
        .unwrap();
        let t = pullback_tangent_splitting(&f, &c, &quadric()).unwrap();
        assert_eq!(t.splitting.values(), &[0, 0]);
    }

    #[test]
    fn singular_point_is_reported() {
        let f = Rationals;
        // cone x0 x1 - x2^2 in P^3, line through the vertex (0:0:0:1)
        let g = MultiForm::from_terms(
            &f,
            Grading::Standard { nvars: 4, degree: 2 },
            [(vec![1, 1, 0, 0], q(1)), (vec![0, 0, 2, 0], q(-1))],
        )
        .unwrap();
        let x = Hypersurface::new(AmbientSpace::projective(3).unwrap(), g).unwrap();
        let c = RationalCurve::new(
            &f,
            AmbientSpace::projective(3).unwrap(),
            vec![vec![form(&[1, 0]), form(&[0, 0]), form(&[0, 0]), form(&[0, 1])]],
        )
        .unwrap();
        assert!(matches!(pullback_tangent_splitting(&f, &c, &x), Err(Error::SingularAlongCurve)));
    }

    #[test]
    fn base_points_rejected() {
        let f = Rationals;
        let r = RationalCurve::new(
            &f,
            AmbientSpace::projective(1).unwrap(),
            vec![vec![form(&[1, 0, 0]), form(&[0, 1, 0])]],
        );
        assert!(matches!(r, Err(Error::BasePoint(_))));
        let r = RationalCurve::new(&f, AmbientSpace::projective(1).unwrap(), vec![vec![form(&[0]), form(&[0])]]);
        assert!(matches!(r, Err(Error::BasePoint(_))));
    }
}
