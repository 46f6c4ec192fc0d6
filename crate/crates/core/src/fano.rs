//! Lines on hypersurfaces over prime fields, by exhaustive search of the
//! Grassmannian of lines in `P^N`.
//!
//! Only `GF(p)`-rational lines are found. A line is stored as the reduced
//! row echelon form of a 2-row spanning matrix and parametrised as
//! `(s, t) ↦ s·row_1 + t·row_2`.

use rayon::prelude::*;

use crate::dimension;
use crate::exact::binary::BinaryForm;
use crate::exact::field::{Field, PrimeField};
use crate::exact::linalg::{gauss_jordan, Matrix};
use crate::syzygy::SplittingType;
use crate::tangent::{self, AmbientSpace, Hypersurface, RationalCurve};
use crate::{Error, Result};

/// Default cap on the number of candidate lines examined.
pub const DEFAULT_LINE_BUDGET: u128 = 20_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineStatus {
    Smooth {
        splitting: SplittingType,
        h0: i64,
        /// `h^0(ℓ*T_X) - 3`: tangent space to the Fano scheme at the line.
        fano_tangent_dim: i64,
        /// The tangent dimension equals the expected dimension.
        unobstructed: bool,
    },
    /// `X` is singular somewhere along the line.
    Singular,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineRecord<E> {
    /// Reduced row echelon spanning matrix.
    pub rows: [Vec<E>; 2],
    pub status: LineStatus,
}

impl<E: Clone> LineRecord<E> {
    pub fn curve<F: Field<Elem = E>>(&self, field: &F, ambient: AmbientSpace) -> Result<RationalCurve<E>> {
        line_curve(field, ambient, &self.rows)
    }
}

fn line_curve<F: Field>(field: &F, ambient: AmbientSpace, rows: &[Vec<F::Elem>; 2]) -> Result<RationalCurve<F::Elem>> {
    let forms = rows[0].iter().zip(&rows[1]).map(|(a, b)| BinaryForm::new(vec![a.clone(), b.clone()])).collect();
    RationalCurve::new(field, ambient, vec![forms])
}

/// Expected dimension of the family of lines: `2N - 2` on `P^N` itself,
/// `2n - e - 1` on a degree-`e` hypersurface in `P^(n+1)`.
pub fn expected_dim<E: Clone>(x: &Hypersurface<E>) -> i64 {
    let n = x.ambient().dim() as i64;
    match x.equation() {
        None => 2 * n - 2,
        Some(_) => dimension::fano_lines_expected_dim(n - 1, x.degrees()[0]),
    }
}

/// Canonical spanning rows of a degree-1 map.
fn canonical_rows<F: Field>(field: &F, f: &RationalCurve<F::Elem>) -> Result<[Vec<F::Elem>; 2]> {
    let forms = f.forms();
    if forms.iter().any(|g| g.degree() != 1) {
        return Err(Error::DegreeMismatch("a line is given by forms of degree 1".into()));
    }
    let mut m = Matrix::from_rows(vec![
        forms.iter().map(|g| g.coeffs()[0].clone()).collect(),
        forms.iter().map(|g| g.coeffs()[1].clone()).collect(),
    ]);
    if gauss_jordan(field, &mut m).len() != 2 {
        return Err(Error::BasePoint("the forms do not span a line".into()));
    }
    Ok([m.row(0).to_vec(), m.row(1).to_vec()])
}

fn report<F: Field>(
    field: &F,
    rows: [Vec<F::Elem>; 2],
    f: &RationalCurve<F::Elem>,
    x: &Hypersurface<F::Elem>,
) -> Result<LineRecord<F::Elem>> {
    let status = match tangent::pullback_tangent_splitting(field, f, x) {
        Ok(t) => {
            let h0 = t.splitting.h0(0);
            let fano_tangent_dim = h0 - 3;
            LineStatus::Smooth {
                splitting: t.splitting,
                h0,
                fano_tangent_dim,
                unobstructed: fano_tangent_dim == expected_dim(x),
            }
        }
        Err(Error::SingularAlongCurve) => LineStatus::Singular,
        Err(e) => return Err(e),
    };
    Ok(LineRecord { rows, status })
}

/// Tangent data for one line on `X`.
pub fn line_report<F: Field>(
    field: &F,
    line: &RationalCurve<F::Elem>,
    x: &Hypersurface<F::Elem>,
) -> Result<LineRecord<F::Elem>> {
    if !tangent::on_hypersurface(field, line, x)? {
        return Err(Error::NotOnHypersurface);
    }
    let rows = canonical_rows(field, line)?;
    report(field, rows, line, x)
}

/// Number of `GF(q)`-points of the Grassmannian of lines in `P^N`:
/// `(q^(N+1) - 1)(q^N - 1) / ((q^2 - 1)(q - 1))`.
pub fn grassmannian_size(q: u64, n: usize) -> u128 {
    let q = u128::from(q);
    let pow = |k: usize| (0..k).try_fold(1u128, |acc, _| acc.checked_mul(q));
    match (pow(n + 1), pow(n)) {
        (Some(a), Some(b)) => match (a - 1).checked_mul(b - 1) {
            Some(num) => num / ((q * q - 1) * (q - 1)),
            None => u128::MAX,
        },
        _ => u128::MAX,
    }
}

/// All `GF(p)`-rational lines on `X ⊂ P^N`, sorted by their echelon rows.
///
/// Fails with [`Error::SearchTooLarge`] when the Grassmannian has more than
/// `budget` points.
pub fn enumerate_lines(field: &PrimeField, x: &Hypersurface<u64>, budget: u128) -> Result<Vec<LineRecord<u64>>> {
    let AmbientSpace::Projective(n) = x.ambient() else {
        return Err(Error::InvalidAmbient("lines are enumerated in P^N only".into()));
    };
    let candidates = grassmannian_size(field.modulus(), n);
    if candidates > budget {
        return Err(Error::SearchTooLarge { candidates, budget });
    }
    let cells: Vec<(usize, usize)> = (0..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    let found = cells.par_iter().map(|&(i, j)| search_cell(field, x, n + 1, i, j)).collect::<Result<Vec<_>>>()?;
    let mut lines: Vec<LineRecord<u64>> = found.into_iter().flatten().collect();
    lines.sort_by(|a, b| a.rows.cmp(&b.rows));
    Ok(lines)
}

/// Lines whose echelon form has pivots in columns `i < j`.
fn search_cell(
    field: &PrimeField,
    x: &Hypersurface<u64>,
    width: usize,
    i: usize,
    j: usize,
) -> Result<Vec<LineRecord<u64>>> {
    let p = field.modulus();
    let free1: Vec<usize> = (i + 1..width).filter(|&c| c != j).collect();
    let free2: Vec<usize> = (j + 1..width).collect();
    let slots = free1.len() + free2.len();
    let mut digits = vec![0u64; slots];
    let mut out = Vec::new();
    loop {
        let mut r1 = vec![0u64; width];
        let mut r2 = vec![0u64; width];
        r1[i] = 1;
        r2[j] = 1;
        for (k, &c) in free1.iter().enumerate() {
            r1[c] = digits[k];
        }
        for (k, &c) in free2.iter().enumerate() {
            r2[c] = digits[free1.len() + k];
        }
        let rows = [r1, r2];
        let f = line_curve(field, x.ambient(), &rows)?;
        if tangent::on_hypersurface(field, &f, x)? {
            out.push(report(field, rows, &f, x)?);
        }
        // odometer increment
        let mut k = 0;
        while k < slots {
            digits[k] += 1;
            if digits[k] < p {
                break;
            }
            digits[k] = 0;
            k += 1;
        }
        if k == slots {
            return Ok(out);
        }
    }
}
