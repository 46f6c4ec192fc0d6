//! Kernels of maps between split vector bundles on `P^1`.
//!
//! A map `φ: ⊕ O(b_j) -> ⊕ O(c_k)` is a matrix of binary forms with entry
//! `(k, j)` of degree `c_k - b_j`. Its sheaf kernel is again split, and since
//! kernels of maps of free graded modules are saturated, the kernel module is
//! visible degree by degree: the sections of `ker(φ)(m)` are exactly the
//! solutions of a finite linear system. [`kernel_bundle`] scans twists upward
//! and collects minimal generators; the twist at which a generator first
//! appears is minus the degree of its summand.

use std::fmt;

use crate::exact::binary::{gcd_forms, BinaryForm};
use crate::exact::field::Field;
use crate::exact::linalg::{self, Matrix};
use crate::{Error, Result};

/// `⊕ O(t_i)`; twist order is significant (it fixes the coordinates of
/// sections), [`GradedFreeModule::canonical`] sorts it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedFreeModule {
    twists: Vec<i64>,
}

impl GradedFreeModule {
    pub fn new(twists: Vec<i64>) -> Self {
        GradedFreeModule { twists }
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn canonical(&self) -> GradedFreeModule {
        let mut twists = self.twists.clone();
        twists.sort_unstable_by(|a, b| b.cmp(a));
        GradedFreeModule { twists }
    }

    /// Degrees of the components of a section at twist `m`.
    fn section_degrees(&self, m: i64) -> Vec<i64> {
        self.twists.iter().map(|b| b + m).collect()
    }
}

/// The splitting type `(a_1 >= ... >= a_r)` of `⊕ O(a_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SplittingType {
    values: Vec<i64>,
}

impl SplittingType {
    pub fn new(mut values: Vec<i64>) -> Self {
        values.sort_unstable_by(|a, b| b.cmp(a));
        SplittingType { values }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn rank(&self) -> usize {
        self.values.len()
    }

    pub fn degree(&self) -> i64 {
        self.values.iter().sum()
    }

    /// `h^0(⊕ O(a_i + k))`.
    pub fn h0(&self, k: i64) -> i64 {
        self.values.iter().map(|a| (a + k + 1).max(0)).sum()
    }

    /// `h^1(⊕ O(a_i + k))`.
    pub fn h1(&self, k: i64) -> i64 {
        self.values.iter().map(|a| (-(a + k) - 1).max(0)).sum()
    }

    pub fn min(&self) -> Option<i64> {
        self.values.last().copied()
    }

    /// Globally generated: every `a_i >= 0`.
    pub fn is_free(&self) -> bool {
        self.values.iter().all(|&a| a >= 0)
    }

    /// Every `a_i >= 1`.
    pub fn is_very_free(&self) -> bool {
        self.values.iter().all(|&a| a >= 1)
    }

    /// `O(2) ⊕ O(-1)^(r-1)`, the type for which naive enumeration of curves
    /// computes the Gromov-Witten count.
    pub fn is_gw_rigid(&self) -> bool {
        matches!(self.values.split_first(), Some((2, rest)) if rest.iter().all(|&a| a == -1))
    }

    pub fn negated(&self) -> SplittingType {
        SplittingType::new(self.values.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|a| format!("O({a})")).collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// A map of split bundles given by a matrix of binary forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMatrix<E> {
    source: GradedFreeModule,
    target: GradedFreeModule,
    /// row-major, `target.rank()` rows
    entries: Vec<BinaryForm<E>>,
}

impl<E: Clone> GradedMatrix<E> {
    /// `entries[k][j]` must have degree `target[k] - source[j]`, or be zero
    /// (a zero form of any degree is normalised to the required one).
    pub fn new<F: Field<Elem = E>>(
        field: &F,
        source: Vec<i64>,
        target: Vec<i64>,
        entries: Vec<Vec<BinaryForm<E>>>,
    ) -> Result<Self> {
        if entries.len() != target.len() || entries.iter().any(|r| r.len() != source.len()) {
            return Err(Error::ArityMismatch(format!("expected a {}x{} matrix of forms", target.len(), source.len())));
        }
        let mut flat = Vec::with_capacity(target.len() * source.len());
        for (k, row) in entries.into_iter().enumerate() {
            for (j, form) in row.into_iter().enumerate() {
                let want = target[k] - source[j];
                if form.degree() == want {
                    flat.push(form);
                } else if form.is_zero(field) {
                    flat.push(BinaryForm::zero(field, want));
                } else {
                    return Err(Error::DegreeMismatch(format!(
                        "entry ({k},{j}) has degree {} but the twists require {want}",
                        form.degree()
                    )));
                }
            }
        }
        Ok(GradedMatrix { source: GradedFreeModule::new(source), target: GradedFreeModule::new(target), entries: flat })
    }

    /// A single row `⊕ O(source_j) -> O(target)`.
    pub fn row<F: Field<Elem = E>>(
        field: &F,
        source: Vec<i64>,
        target: i64,
        forms: Vec<BinaryForm<E>>,
    ) -> Result<Self> {
        Self::new(field, source, vec![target], vec![forms])
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, twists: Vec<i64>) -> Self {
        let n = twists.len();
        let entries = (0..n)
            .map(|k| {
                (0..n)
                    .map(|j| if j == k { BinaryForm::constant(field.one()) } else { BinaryForm::zero(field, 0) })
                    .collect()
            })
            .collect();
        Self::new(field, twists.clone(), twists, entries).expect("identity is well graded")
    }

    pub fn source(&self) -> &GradedFreeModule {
        &self.source
    }

    pub fn target(&self) -> &GradedFreeModule {
        &self.target
    }

    pub fn rows(&self) -> usize {
        self.target.rank()
    }

    pub fn cols(&self) -> usize {
        self.source.rank()
    }

    pub fn entry(&self, k: usize, j: usize) -> &BinaryForm<E> {
        &self.entries[k * self.cols() + j]
    }

    /// Column `j` as a section of the target.
    pub fn column(&self, j: usize) -> Vec<BinaryForm<E>> {
        (0..self.rows()).map(|k| self.entry(k, j).clone()).collect()
    }

    pub fn max_entry_degree(&self) -> i64 {
        self.entries.iter().map(BinaryForm::degree).max().unwrap_or(0).max(0)
    }

    /// `φ(v)` for a section `v` of the source at some twist.
    pub fn apply<F: Field<Elem = E>>(&self, field: &F, v: &[BinaryForm<E>]) -> Result<Vec<BinaryForm<E>>> {
        let m = section_twist(&self.source, v)?;
        Ok((0..self.rows())
            .map(|k| {
                let mut acc = BinaryForm::zero(field, self.target.twists[k] + m);
                for (j, vj) in v.iter().enumerate() {
                    acc = acc.add(field, &self.entry(k, j).mul(field, vj));
                }
                acc
            })
            .collect())
    }

    /// `self ∘ inner`.
    pub fn compose<F: Field<Elem = E>>(&self, field: &F, inner: &GradedMatrix<E>) -> Result<GradedMatrix<E>> {
        if inner.target != self.source {
            return Err(Error::ArityMismatch("composing maps with mismatched middle module".into()));
        }
        let entries = (0..self.rows())
            .map(|k| {
                (0..inner.cols())
                    .map(|i| {
                        let mut acc = BinaryForm::zero(field, self.target.twists[k] - inner.source.twists[i]);
                        for j in 0..self.cols() {
                            acc = acc.add(field, &self.entry(k, j).mul(field, inner.entry(j, i)));
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        GradedMatrix::new(field, inner.source.twists.clone(), self.target.twists.clone(), entries)
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.entries.iter().all(|e| e.is_zero(field))
    }
}

fn section_twist<E: Clone>(module: &GradedFreeModule, v: &[BinaryForm<E>]) -> Result<i64> {
    if v.len() != module.rank() {
        return Err(Error::ArityMismatch(format!("section has {} components, module rank {}", v.len(), module.rank())));
    }
    let Some(first) = v.first() else { return Ok(0) };
    let m = first.degree() - module.twists[0];
    if v.iter().zip(&module.twists).any(|(f, b)| f.degree() != b + m) {
        return Err(Error::DegreeMismatch("section components do not share a twist".into()));
    }
    Ok(m)
}

/// Flat coordinates of sections with prescribed component degrees.
struct Layout {
    degrees: Vec<i64>,
    offsets: Vec<usize>,
    len: usize,
}

impl Layout {
    fn new(degrees: Vec<i64>) -> Self {
        let mut offsets = Vec::with_capacity(degrees.len());
        let mut len = 0;
        for &d in &degrees {
            offsets.push(len);
            len += if d < 0 { 0 } else { d as usize + 1 };
        }
        Layout { degrees, offsets, len }
    }

    fn flatten<E: Clone>(&self, v: &[BinaryForm<E>]) -> Vec<E> {
        v.iter().flat_map(|f| f.coeffs().iter().cloned()).collect()
    }

    fn unflatten<F: Field>(&self, field: &F, flat: &[F::Elem]) -> Vec<BinaryForm<F::Elem>> {
        self.degrees
            .iter()
            .zip(&self.offsets)
            .map(
                |(&d, &o)| {
                    if d < 0 {
                        BinaryForm::zero(field, d)
                    } else {
                        BinaryForm::new(flat[o..o + d as usize + 1].to_vec())
                    }
                },
            )
            .collect()
    }
}

/// Coefficient matrix of `v -> φ(v)` on sections at twist `m`, with the
/// layouts of source and target coordinates.
fn twist_system<F: Field>(field: &F, phi: &GradedMatrix<F::Elem>, m: i64) -> (Matrix<F::Elem>, Layout, Layout) {
    let src = Layout::new(phi.source.section_degrees(m));
    let tgt = Layout::new(phi.target.section_degrees(m));
    let mut mat = Matrix::zeros(field, tgt.len, src.len);
    for k in 0..phi.rows() {
        for j in 0..phi.cols() {
            let entry = phi.entry(k, j);
            let vdeg = src.degrees[j];
            if vdeg < 0 || entry.degree() < 0 {
                continue;
            }
            for (i, c) in entry.coeffs().iter().enumerate() {
                if field.is_zero(c) {
                    continue;
                }
                for l in 0..=vdeg as usize {
                    mat[(tgt.offsets[k] + l + i, src.offsets[j] + l)] = c.clone();
                }
            }
        }
    }
    (mat, src, tgt)
}

/// Basis of `H^0(ker(φ)(m))`: sections `v` of the source at twist `m`
/// (component `j` of degree `b_j + m`) with `φ(v) = 0`.
pub fn sections_at_twist<F: Field>(field: &F, phi: &GradedMatrix<F::Elem>, m: i64) -> Vec<Vec<BinaryForm<F::Elem>>> {
    let (mat, src, _) = twist_system(field, phi, m);
    linalg::kernel_basis(field, &mat).iter().map(|v| src.unflatten(field, v)).collect()
}

/// Kernel of a surjective map of split bundles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelBundle<E> {
    pub splitting: SplittingType,
    /// Inclusion `⊕ O(a_i) -> source`, columns in non-increasing `a_i`.
    pub inclusion: GradedMatrix<E>,
}

/// Fraction-free elimination over the ring of binary forms; returns the last
/// pivot of a square matrix (the determinant up to sign) or `None` if the
/// matrix is singular.
fn det_up_to_sign<F: Field>(field: &F, mut a: Vec<Vec<BinaryForm<F::Elem>>>) -> Option<BinaryForm<F::Elem>> {
    let n = a.len();
    if n == 0 {
        return Some(BinaryForm::constant(field.one()));
    }
    let mut prev = BinaryForm::constant(field.one());
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero(field))?;
        a.swap(c, p);
        for i in c + 1..n {
            for j in c + 1..n {
                let num = a[c][c].mul(field, &a[i][j]).sub(field, &a[i][c].mul(field, &a[c][j]));
                a[i][j] = num.div_exact(field, &prev).expect("Bareiss division is exact");
            }
        }
        prev = a[c][c].clone();
    }
    Some(prev)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Whether `φ` is surjective as a map of sheaves: the maximal minors have no
/// common zero on `P^1`.
pub fn is_surjective<F: Field>(field: &F, phi: &GradedMatrix<F::Elem>) -> bool {
    let (q, r) = (phi.rows(), phi.cols());
    if q == 0 {
        return true;
    }
    if r < q {
        return false;
    }
    let minors: Vec<_> = combinations(r, q)
        .into_iter()
        .filter_map(|cols| {
            let sub = (0..q).map(|k| cols.iter().map(|&j| phi.entry(k, j).clone()).collect()).collect();
            det_up_to_sign(field, sub)
        })
        .collect();
    matches!(gcd_forms(field, &minors), Ok(g) if g.degree() == 0)
}

/// Splitting type and inclusion of `ker(φ)` for a surjective `φ`.
///
/// Twists are scanned upward from `-max b_j`. At each twist `m` the full
/// space of kernel sections is computed and reduced modulo
/// `s·K_(m-1) + t·K_(m-1)`; the reduced vectors, row-reduced, are the new
/// generators, each contributing a summand `O(-m)`. The scan stops once the
/// generator count equals `rank(source) - rank(target)` and the twists sum
/// to `Σ b_j - Σ c_k`.
pub fn kernel_bundle<F: Field>(field: &F, phi: &GradedMatrix<F::Elem>) -> Result<KernelBundle<F::Elem>> {
    if !is_surjective(field, phi) {
        return Err(Error::NotSurjective);
    }
    let b = phi.source.twists();
    let expected_rank = phi.cols() - phi.rows();
    let expected_degree: i64 = b.iter().sum::<i64>() - phi.target.twists().iter().sum::<i64>();
    let mut gens: Vec<(i64, Vec<BinaryForm<F::Elem>>)> = Vec::new();

    if expected_rank > 0 {
        let max_b = *b.iter().max().unwrap();
        let min_b = *b.iter().min().unwrap();
        let m_min = -max_b;
        // every summand satisfies a <= max b, so the smallest one is at least
        // expected_degree - (rank - 1) max b
        let m_max = (-min_b).max((expected_rank as i64 - 1) * max_b - expected_degree) + phi.max_entry_degree();

        let mut previous: Vec<Vec<BinaryForm<F::Elem>>> = Vec::new();
        let mut m = m_min;
        loop {
            if m > m_max {
                return Err(Error::BudgetExceeded(m_max));
            }
            let (mat, src, _) = twist_system(field, phi, m);
            let kernel = linalg::kernel_basis(field, &mat);
            let old: Vec<Vec<F::Elem>> = previous
                .iter()
                .flat_map(|sec| {
                    let by_s: Vec<_> = sec.iter().map(|f| f.shift_s(field)).collect();
                    let by_t: Vec<_> = sec.iter().map(|f| f.shift_t(field)).collect();
                    [src.flatten(&by_s), src.flatten(&by_t)]
                })
                .collect();
            let (span, pivots) = linalg::span_basis(field, src.len, &old);
            let reduced: Vec<Vec<F::Elem>> = kernel
                .iter()
                .map(|v| {
                    let mut v = v.clone();
                    linalg::reduce_against(field, &span, &pivots, &mut v);
                    v
                })
                .collect();
            let (fresh, _) = linalg::span_basis(field, src.len, &reduced);
            for row in fresh.to_rows() {
                gens.push((m, src.unflatten(field, &row)));
            }
            previous = kernel.iter().map(|v| src.unflatten(field, v)).collect();

            if gens.len() > expected_rank {
                return Err(Error::Inconsistent(format!(
                    "found {} kernel generators, expected {expected_rank}",
                    gens.len()
                )));
            }
            let degree: i64 = gens.iter().map(|(m, _)| -m).sum();
            if gens.len() == expected_rank && degree == expected_degree {
                break;
            }
            m += 1;
        }
    }

    let twists: Vec<i64> = gens.iter().map(|(m, _)| -m).collect();
    let entries = (0..phi.cols()).map(|j| gens.iter().map(|(_, g)| g[j].clone()).collect()).collect();
    let inclusion = GradedMatrix::new(field, twists.clone(), b.to_vec(), entries)?;
    Ok(KernelBundle { splitting: SplittingType::new(twists), inclusion })
}

/// The unique `w` with `Ψ w = v`, for an injective `Ψ` (such as a kernel
/// inclusion) and a section `v` of its target.
pub fn express_in_kernel<F: Field>(
    field: &F,
    psi: &GradedMatrix<F::Elem>,
    v: &[BinaryForm<F::Elem>],
) -> Result<Vec<BinaryForm<F::Elem>>> {
    let m = section_twist(&psi.target, v)?;
    let (mat, src, tgt) = twist_system(field, psi, m);
    let rhs = tgt.flatten(v);
    let w = linalg::solve(field, &mat, &rhs).ok_or(Error::NotInKernel)?;
    Ok(src.unflatten(field, &w))
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

    fn koszul_row() -> GradedMatrix<Q> {
        GradedMatrix::row(&Rationals, vec![0, 0], 1, vec![form(&[1, 0]), form(&[0, 1])]).unwrap()
    }

    fn veronese_row() -> GradedMatrix<Q> {
        GradedMatrix::row(&Rationals, vec![0, 0, 0], 2, vec![form(&[1, 0, 0]), form(&[0, 1, 0]), form(&[0, 0, 1])])
            .unwrap()
    }

    #[test]
    fn koszul_sections() {
        let f = Rationals;
        assert!(sections_at_twist(&f, &koszul_row(), 0).is_empty());
        let s1 = sections_at_twist(&f, &koszul_row(), 1);
        assert_eq!(s1.len(), 1);
        // proportional to (t, -s)
        let v = &s1[0];
        let scale = f.div(&v[0].coeffs()[1], &f.one()).unwrap();
        assert_eq!(v[0], form(&[0, 1]).scale(&f, &scale));
        assert_eq!(v[1], form(&[-1, 0]).scale(&f, &scale));
    }

    #[test]
    fn veronese_sections_at_twist_one() {
        // 4 equations in 6 unknowns of full rank
        assert_eq!(sections_at_twist(&Rationals, &veronese_row(), 1).len(), 2);
    }

    #[test]
    fn koszul_kernel_bundle() {
        let f = Rationals;
        let k = kernel_bundle(&f, &koszul_row()).unwrap();
        assert_eq!(k.splitting.values(), &[-1]);
        let col = k.inclusion.column(0);
        // (t, -s) up to the normalisation chosen by row reduction
        let lead = col[0].coeffs()[1].clone();
        assert_eq!(col[0], form(&[0, 1]).scale(&f, &lead));
        assert_eq!(col[1], form(&[-1, 0]).scale(&f, &lead));
        assert!(koszul_row().compose(&f, &k.inclusion).unwrap().is_zero(&f));
    }

    #[test]
    fn veronese_kernel_bundle() {
        let f = Rationals;
        let k = kernel_bundle(&f, &veronese_row()).unwrap();
        assert_eq!(k.splitting.values(), &[-1, -1]);
        assert!(veronese_row().compose(&f, &k.inclusion).unwrap().is_zero(&f));
    }

    #[test]
    fn common_root_is_not_surjective() {
        let f = Rationals;
        // (s^2, st) share s
        let phi = GradedMatrix::row(&f, vec![0, 0], 2, vec![form(&[1, 0, 0]), form(&[0, 1, 0])]).unwrap();
        assert!(matches!(kernel_bundle(&f, &phi), Err(Error::NotSurjective)));
    }

    #[test]
    fn express_examples() {
        let f = Rationals;
        let psi = GradedMatrix::new(&f, vec![-1], vec![0, 0], vec![vec![form(&[0, 1])], vec![form(&[-1, 0])]]).unwrap();
        assert_eq!(express_in_kernel(&f, &psi, &[form(&[0, 1]), form(&[-1, 0])]).unwrap(), vec![form(&[1])]);
        assert_eq!(express_in_kernel(&f, &psi, &[form(&[0, 1, 0]), form(&[-1, 0, 0])]).unwrap(), vec![form(&[1, 0])]);
        assert!(matches!(express_in_kernel(&f, &psi, &[form(&[1, 0]), form(&[0, 1])]), Err(Error::NotInKernel)));
    }

    #[test]
    fn rejects_badly_graded_entries() {
        let f = Rationals;
        let r = GradedMatrix::row(&f, vec![0, 0], 2, vec![form(&[1, 0]), form(&[0, 1])]);
        assert!(matches!(r, Err(Error::DegreeMismatch(_))));
        let ok = GradedMatrix::row(&f, vec![0, 3], 2, vec![form(&[1, 0, 1]), BinaryForm::zero(&f, 0)]).unwrap();
        assert_eq!(ok.entry(0, 1).degree(), -1);
    }

    #[test]
    fn zero_target_keeps_source() {
        let f = PrimeField::new(5).unwrap();
        let phi: GradedMatrix<u64> = GradedMatrix::new(&f, vec![3, -1], vec![], vec![]).unwrap();
        let k = kernel_bundle(&f, &phi).unwrap();
        assert_eq!(k.splitting.values(), &[3, -1]);
    }

    #[test]
    fn square_invertible_map_has_zero_kernel() {
        let f = Rationals;
        let phi = GradedMatrix::identity(&f, vec![2, 1]);
        let k = kernel_bundle(&f, &phi).unwrap();
        assert_eq!(k.splitting.rank(), 0);
    }

    #[test]
    fn two_row_map() {
        // (s t 0 0; 0 0 s t): O^4 -> O(1)^2, kernel O(-1)^2
        let f = Rationals;
        let z = || BinaryForm::zero(&f, 1);
        let phi = GradedMatrix::new(
            &f,
            vec![0; 4],
            vec![1, 1],
            vec![vec![form(&[1, 0]), form(&[0, 1]), z(), z()], vec![z(), z(), form(&[1, 0]), form(&[0, 1])]],
        )
        .unwrap();
        let k = kernel_bundle(&f, &phi).unwrap();
        assert_eq!(k.splitting.values(), &[-1, -1]);
        // rows that drop rank at s = 0 are caught by the minors
        let bad = GradedMatrix::new(
            &f,
            vec![0; 4],
            vec![1, 1],
            vec![vec![form(&[1, 0]), z(), z(), z()], vec![z(), form(&[1, 0]), z(), z()]],
        )
        .unwrap();
        assert!(!is_surjective(&f, &bad));
    }

    #[test]
    fn splitting_cohomology() {
        let st = SplittingType::new(vec![1, 2]);
        assert_eq!(st.values(), &[2, 1]);
        assert_eq!((st.h0(0), st.h1(0)), (5, 0));
        let st = SplittingType::new(vec![-2, 4]);
        assert_eq!((st.h0(0), st.h1(0)), (5, 1));
        let st = SplittingType::new(vec![2, 0]);
        assert_eq!((st.h0(-2), st.h1(-2)), (1, 1));
        assert!(SplittingType::new(vec![2, -1, -1]).is_gw_rigid());
        assert!(!SplittingType::new(vec![2, 1]).is_gw_rigid());
        assert_eq!(SplittingType::new(vec![4, -2]).to_string(), "O(4) + O(-2)");
    }
}
