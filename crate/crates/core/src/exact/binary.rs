//! Binary forms: homogeneous polynomials in `(s, t)`.
//!
//! Coefficients are stored densely in descending powers of `s`, entry `i`
//! being the coefficient of `s^(d-i) t^i`. A form may carry a negative degree,
//! in which case it is the zero form with no coefficients; this lets graded
//! code treat "no sections of O(-k)" uniformly.

use super::field::Field;
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm<E> {
    degree: i64,
    coeffs: Vec<E>,
}

impl<E: Clone> BinaryForm<E> {
    pub fn zero<F: Field<Elem = E>>(field: &F, degree: i64) -> Self {
        BinaryForm { degree, coeffs: vec![field.zero(); len_for(degree)] }
    }

    /// A form of degree `coeffs.len() - 1`. Panics on an empty vector.
    pub fn new(coeffs: Vec<E>) -> Self {
        assert!(!coeffs.is_empty(), "a form needs at least one coefficient");
        BinaryForm { degree: coeffs.len() as i64 - 1, coeffs }
    }

    pub fn constant(c: E) -> Self {
        BinaryForm { degree: 0, coeffs: vec![c] }
    }

    /// `s^(d-i) t^i`.
    pub fn monomial<F: Field<Elem = E>>(field: &F, degree: i64, i: usize) -> Self {
        let mut f = Self::zero(field, degree);
        f.coeffs[i] = field.one();
        f
    }

    pub fn s<F: Field<Elem = E>>(field: &F) -> Self {
        Self::monomial(field, 1, 0)
    }

    pub fn t<F: Field<Elem = E>>(field: &F) -> Self {
        Self::monomial(field, 1, 1)
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.coeffs.iter().all(|c| field.is_zero(c))
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "adding forms of different degree");
        BinaryForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| field.add(a, b)).collect(),
        }
    }

    pub fn sub<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "subtracting forms of different degree");
        BinaryForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| field.sub(a, b)).collect(),
        }
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, c: &E) -> Self {
        BinaryForm { degree: self.degree, coeffs: self.coeffs.iter().map(|a| field.mul(a, c)).collect() }
    }

    pub fn neg<F: Field<Elem = E>>(&self, field: &F) -> Self {
        BinaryForm { degree: self.degree, coeffs: self.coeffs.iter().map(|a| field.neg(a)).collect() }
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let degree = self.degree + other.degree;
        let mut out = Self::zero(field, degree);
        if self.degree < 0 || other.degree < 0 {
            return out;
        }
        for (i, a) in self.coeffs.iter().enumerate() {
            if field.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = field.mul(a, b);
                out.coeffs[i + j] = field.add(&out.coeffs[i + j], &t);
            }
        }
        out
    }

    pub fn pow<F: Field<Elem = E>>(&self, field: &F, k: u32) -> Self {
        let mut acc = Self::constant(field.one());
        for _ in 0..k {
            acc = acc.mul(field, self);
        }
        acc
    }

    /// Multiplication by `s`.
    pub fn shift_s<F: Field<Elem = E>>(&self, field: &F) -> Self {
        self.mul(field, &Self::s(field))
    }

    /// Multiplication by `t`.
    pub fn shift_t<F: Field<Elem = E>>(&self, field: &F) -> Self {
        self.mul(field, &Self::t(field))
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder or the divisor is zero.
    pub fn div_exact<F: Field<Elem = E>>(&self, field: &F, divisor: &Self) -> Option<Self> {
        let j0 = divisor.coeffs.iter().position(|c| !field.is_zero(c))?;
        let qdeg = self.degree - divisor.degree;
        if self.is_zero(field) {
            return (qdeg >= 0 || self.degree < 0).then(|| Self::zero(field, qdeg));
        }
        if qdeg < 0 {
            return None;
        }
        let lead_inv = field.inv(&divisor.coeffs[j0]).expect("nonzero");
        let mut q: Vec<E> = Vec::with_capacity(qdeg as usize + 1);
        for k in 0..=qdeg as usize {
            let mut acc = self.coeffs[k + j0].clone();
            for (i, qi) in q.iter().enumerate() {
                let idx = k + j0 - i;
                if idx < divisor.coeffs.len() {
                    acc = field.sub(&acc, &field.mul(qi, &divisor.coeffs[idx]));
                }
            }
            q.push(field.mul(&acc, &lead_inv));
        }
        let quotient = BinaryForm { degree: qdeg, coeffs: q };
        quotient.mul(field, divisor).sub(field, self).is_zero(field).then_some(quotient)
    }

    /// Largest `k` with `t^k` dividing the form (the index of the first
    /// nonzero coefficient); `None` for the zero form.
    fn t_valuation<F: Field<Elem = E>>(&self, field: &F) -> Option<usize> {
        self.coeffs.iter().position(|c| !field.is_zero(c))
    }

    /// `F(s, 1)` as a univariate polynomial in `s`, ascending powers.
    fn dehomogenize(&self) -> Vec<E> {
        self.coeffs.iter().rev().cloned().collect()
    }
}

fn len_for(degree: i64) -> usize {
    if degree < 0 {
        0
    } else {
        degree as usize + 1
    }
}

/// Monic greatest common divisor of a family of binary forms.
///
/// The forms are dehomogenized at `t = 1`, their univariate gcd is taken and
/// rehomogenized, and the common power of `t` (which dehomogenization loses)
/// is multiplied back in. Zero forms are ignored. The result is the constant
/// 1 exactly when the forms have no common zero on the projective line over
/// the algebraic closure.
pub fn gcd_forms<F: Field>(field: &F, forms: &[BinaryForm<F::Elem>]) -> Result<BinaryForm<F::Elem>, Error> {
    let mut t_power = usize::MAX;
    let mut g: Option<Vec<F::Elem>> = None;
    for f in forms {
        let Some(v) = f.t_valuation(field) else { continue };
        t_power = t_power.min(v);
        let p = trim(field, f.dehomogenize());
        g = Some(match g {
            None => p,
            Some(acc) => poly_gcd(field, acc, p),
        });
    }
    let g = g.ok_or(Error::AllFormsZero)?;
    let g = make_monic(field, g);
    // rehomogenize: sum g_k s^k t^(deg - k), then multiply by t^t_power
    let deg = g.len() - 1;
    let total = deg + t_power;
    let mut coeffs = vec![field.zero(); total + 1];
    for (k, c) in g.iter().enumerate() {
        coeffs[deg - k + t_power] = c.clone();
    }
    Ok(BinaryForm::new(coeffs))
}

/// True when the forms have no common zero on the projective line.
pub fn is_coprime<F: Field>(field: &F, forms: &[BinaryForm<F::Elem>]) -> bool {
    matches!(gcd_forms(field, forms), Ok(g) if g.degree() == 0)
}

fn trim<F: Field>(field: &F, mut p: Vec<F::Elem>) -> Vec<F::Elem> {
    while p.len() > 1 && field.is_zero(p.last().unwrap()) {
        p.pop();
    }
    p
}

fn make_monic<F: Field>(field: &F, p: Vec<F::Elem>) -> Vec<F::Elem> {
    let lead = field.inv(p.last().unwrap()).expect("gcd of nonzero polynomials is nonzero");
    p.iter().map(|c| field.mul(c, &lead)).collect()
}

fn is_zero_poly<F: Field>(field: &F, p: &[F::Elem]) -> bool {
    p.iter().all(|c| field.is_zero(c))
}

fn poly_rem<F: Field>(field: &F, mut a: Vec<F::Elem>, b: &[F::Elem]) -> Vec<F::Elem> {
    let lead_inv = field.inv(b.last().unwrap()).expect("trimmed divisor");
    while a.len() >= b.len() && !is_zero_poly(field, &a) {
        let factor = field.mul(a.last().unwrap(), &lead_inv);
        let shift = a.len() - b.len();
        for (i, bc) in b.iter().enumerate() {
            a[shift + i] = field.sub(&a[shift + i], &field.mul(&factor, bc));
        }
        a.pop();
        a = trim(field, a);
        if a.len() < b.len() {
            break;
        }
    }
    trim(field, a)
}

fn poly_gcd<F: Field>(field: &F, a: Vec<F::Elem>, b: Vec<F::Elem>) -> Vec<F::Elem> {
    let (mut a, mut b) = (trim(field, a), trim(field, b));
    while !is_zero_poly(field, &b) {
        let r = poly_rem(field, a, &b);
        a = make_monic(field, b);
        b = r;
    }
    a
}
