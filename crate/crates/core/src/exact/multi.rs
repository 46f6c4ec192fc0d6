//! Sparse homogeneous and bihomogeneous forms in several variables, and their
//! substitution by binary forms.

use std::collections::BTreeMap;

use super::binary::BinaryForm;
use super::field::Field;
use crate::Error;

/// How the variables of a [`MultiForm`] are graded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Grading {
    /// `nvars` variables, every monomial of total degree `degree`.
    Standard { nvars: usize, degree: i64 },
    /// Two blocks of `blocks.0` and `blocks.1` variables with block degrees
    /// `degree.0` and `degree.1`.
    Bigraded { blocks: (usize, usize), degree: (i64, i64) },
}

impl Grading {
    pub fn nvars(&self) -> usize {
        match *self {
            Grading::Standard { nvars, .. } => nvars,
            Grading::Bigraded { blocks, .. } => blocks.0 + blocks.1,
        }
    }

    fn accepts(&self, exp: &[u32]) -> bool {
        if exp.len() != self.nvars() {
            return false;
        }
        match *self {
            Grading::Standard { degree, .. } => exp.iter().map(|&e| e as i64).sum::<i64>() == degree,
            Grading::Bigraded { blocks, degree } => {
                let (a, b) = exp.split_at(blocks.0);
                a.iter().map(|&e| e as i64).sum::<i64>() == degree.0
                    && b.iter().map(|&e| e as i64).sum::<i64>() == degree.1
            }
        }
    }

    /// Grading of `∂/∂x_j` applied to a form of this grading.
    fn lowered(&self, j: usize) -> Grading {
        match *self {
            Grading::Standard { nvars, degree } => Grading::Standard { nvars, degree: degree - 1 },
            Grading::Bigraded { blocks, degree } => {
                let degree = if j < blocks.0 { (degree.0 - 1, degree.1) } else { (degree.0, degree.1 - 1) };
                Grading::Bigraded { blocks, degree }
            }
        }
    }
}

/// A sparse form: exponent vectors mapped to nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiForm<E> {
    grading: Grading,
    terms: BTreeMap<Vec<u32>, E>,
}

impl<E: Clone> MultiForm<E> {
    pub fn zero(grading: Grading) -> Self {
        MultiForm { grading, terms: BTreeMap::new() }
    }

    /// Collects terms, summing repeated exponents and dropping zeros.
    pub fn from_terms<F, I>(field: &F, grading: Grading, terms: I) -> Result<Self, Error>
    where
        F: Field<Elem = E>,
        I: IntoIterator<Item = (Vec<u32>, E)>,
    {
        let mut out = Self::zero(grading);
        for (exp, c) in terms {
            if !grading.accepts(&exp) {
                return Err(Error::DegreeMismatch(format!("monomial {exp:?} does not have grading {grading:?}")));
            }
            out.add_term(field, exp, c);
        }
        Ok(out)
    }

    fn add_term<F: Field<Elem = E>>(&mut self, field: &F, exp: Vec<u32>, c: E) {
        let sum = match self.terms.get(&exp) {
            Some(old) => field.add(old, &c),
            None => c,
        };
        if field.is_zero(&sum) {
            self.terms.remove(&exp);
        } else {
            self.terms.insert(exp, sum);
        }
    }

    pub fn grading(&self) -> Grading {
        self.grading
    }

    pub fn nvars(&self) -> usize {
        self.grading.nvars()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &E)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Result<Self, Error> {
        if self.grading != other.grading {
            return Err(Error::DegreeMismatch("adding forms of different grading".into()));
        }
        let mut out = self.clone();
        for (exp, c) in &other.terms {
            out.add_term(field, exp.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, c: &E) -> Self {
        let mut out = Self::zero(self.grading);
        for (exp, a) in &self.terms {
            out.add_term(field, exp.clone(), field.mul(a, c));
        }
        out
    }

    /// Product of two forms over the same variables; gradings add.
    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Result<Self, Error> {
        let grading = match (self.grading, other.grading) {
            (Grading::Standard { nvars: a, degree: d }, Grading::Standard { nvars: b, degree: e }) if a == b => {
                Grading::Standard { nvars: a, degree: d + e }
            }
            (Grading::Bigraded { blocks: a, degree: d }, Grading::Bigraded { blocks: b, degree: e }) if a == b => {
                Grading::Bigraded { blocks: a, degree: (d.0 + e.0, d.1 + e.1) }
            }
            _ => return Err(Error::ArityMismatch("multiplying forms in different variables".into())),
        };
        let mut out = Self::zero(grading);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(field, exp, field.mul(ca, cb));
            }
        }
        Ok(out)
    }

    /// Multiplication by the variable `x_j`.
    pub fn mul_var<F: Field<Elem = E>>(&self, field: &F, j: usize) -> Self {
        let grading = match self.grading {
            Grading::Standard { nvars, degree } => Grading::Standard { nvars, degree: degree + 1 },
            Grading::Bigraded { blocks, degree } => Grading::Bigraded {
                blocks,
                degree: if j < blocks.0 { (degree.0 + 1, degree.1) } else { (degree.0, degree.1 + 1) },
            },
        };
        let mut out = Self::zero(grading);
        for (exp, c) in &self.terms {
            let mut e = exp.clone();
            e[j] += 1;
            out.add_term(field, e, c.clone());
        }
        out
    }

    /// `∂/∂x_j`. The result has degree one less in the block of `x_j`
    /// (possibly negative, in which case it is zero).
    pub fn partial<F: Field<Elem = E>>(&self, field: &F, j: usize) -> Self {
        let mut out = Self::zero(self.grading.lowered(j));
        for (exp, c) in &self.terms {
            if exp[j] == 0 {
                continue;
            }
            let mut e = exp.clone();
            e[j] -= 1;
            out.add_term(field, e, field.mul(c, &field.from_i64(exp[j] as i64)));
        }
        out
    }

    /// All first partial derivatives, in variable order.
    pub fn partials<F: Field<Elem = E>>(&self, field: &F) -> Vec<Self> {
        (0..self.nvars()).map(|j| self.partial(field, j)).collect()
    }

    /// `G(f_0, ..., f_N)` for binary forms `f_j`.
    ///
    /// Within a block all forms must share one degree; the result has degree
    /// `d * e` (bigraded: `d1 * e1 + d2 * e2`).
    pub fn substitute<F: Field<Elem = E>>(&self, field: &F, f: &[BinaryForm<E>]) -> Result<BinaryForm<E>, Error> {
        if f.len() != self.nvars() {
            return Err(Error::ArityMismatch(format!(
                "form in {} variables evaluated at {} binary forms",
                self.nvars(),
                f.len()
            )));
        }
        let degree = match self.grading {
            Grading::Standard { degree, .. } => common_degree(f)? * degree,
            Grading::Bigraded { blocks, degree } => {
                let (a, b) = f.split_at(blocks.0);
                common_degree(a)? * degree.0 + common_degree(b)? * degree.1
            }
        };
        let mut out = BinaryForm::zero(field, degree);
        // powers[j][k] = f_j^k, filled lazily up to the largest exponent used
        let mut powers: Vec<Vec<BinaryForm<E>>> = f.iter().map(|_| vec![BinaryForm::constant(field.one())]).collect();
        for (exp, c) in &self.terms {
            let mut term = BinaryForm::constant(c.clone());
            for (j, &k) in exp.iter().enumerate() {
                while powers[j].len() <= k as usize {
                    let next = powers[j].last().unwrap().mul(field, &f[j]);
                    powers[j].push(next);
                }
                if k > 0 {
                    term = term.mul(field, &powers[j][k as usize]);
                }
            }
            out = out.add(field, &term);
        }
        Ok(out)
    }
}

fn common_degree<E: Clone>(forms: &[BinaryForm<E>]) -> Result<i64, Error> {
    let Some(first) = forms.first() else { return Ok(0) };
    if forms.iter().any(|g| g.degree() != first.degree()) {
        return Err(Error::DegreeMismatch("forms in one block must share a degree".into()));
    }
    Ok(first.degree())
}

/// All exponent vectors in `nvars` variables of total degree `degree`, in
/// lexicographically descending order (`x_0^degree` first).
pub fn monomials(nvars: usize, degree: u32) -> Vec<Vec<u32>> {
    fn rec(nvars: usize, degree: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == nvars {
            prefix.push(degree);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in (0..=degree).rev() {
            prefix.push(k);
            rec(nvars, degree - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars > 0 {
        rec(nvars, degree, &mut Vec::new(), &mut out);
    } else if degree == 0 {
        out.push(Vec::new());
    }
    out
}

/// Monomials of a grading: standard monomials or products of the two block
/// monomial lists.
pub fn graded_monomials(grading: Grading) -> Vec<Vec<u32>> {
    match grading {
        Grading::Standard { nvars, degree } if degree >= 0 => monomials(nvars, degree as u32),
        Grading::Bigraded { blocks, degree } if degree.0 >= 0 && degree.1 >= 0 => {
            let left = monomials(blocks.0, degree.0 as u32);
            let right = monomials(blocks.1, degree.1 as u32);
            left.iter().flat_map(|a| right.iter().map(move |b| a.iter().chain(b).copied().collect())).collect()
        }
        _ => Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::Rationals;
    use num_rational::BigRational;

    fn q(x: i64) -> BigRational {
        Rationals.from_i64(x)
    }

    fn form(c: &[i64]) -> BinaryForm<BigRational> {
        BinaryForm::new(c.iter().map(|&x| q(x)).collect())
    }

    fn conic() -> MultiForm<BigRational> {
        // x0 x2 - x1^2
        MultiForm::from_terms(
            &Rationals,
            Grading::Standard { nvars: 3, degree: 2 },
            [(vec![1, 0, 1], q(1)), (vec![0, 2, 0], q(-1))],
        )
        .unwrap()
    }

    fn fermat_cubic() -> MultiForm<BigRational> {
        let g = Grading::Standard { nvars: 4, degree: 3 };
        MultiForm::from_terms(
            &Rationals,
            g,
            (0..4).map(|j| {
                let mut e = vec![0; 4];
                e[j] = 3;
                (e, q(1))
            }),
        )
        .unwrap()
    }

    #[test]
    fn conic_vanishes_on_its_parametrisation() {
        let f = Rationals;
        let out = conic().substitute(&f, &[form(&[1, 0, 0]), form(&[0, 1, 0]), form(&[0, 0, 1])]).unwrap();
        assert_eq!(out.degree(), 4);
        assert!(out.is_zero(&f));
    }

    #[test]
    fn sum_of_squares() {
        let f = Rationals;
        let g = MultiForm::from_terms(
            &f,
            Grading::Standard { nvars: 2, degree: 2 },
            [(vec![2, 0], q(1)), (vec![0, 2], q(1))],
        )
        .unwrap();
        assert_eq!(g.substitute(&f, &[form(&[1, 0]), form(&[0, 1])]).unwrap(), form(&[1, 0, 1]));
    }

    #[test]
    fn fermat_cubic_contains_line() {
        let f = Rationals;
        let line = [form(&[1, 0]), form(&[-1, 0]), form(&[0, 1]), form(&[0, -1])];
        assert!(fermat_cubic().substitute(&f, &line).unwrap().is_zero(&f));
    }

    #[test]
    fn partials_of_conic_and_cubic() {
        let f = Rationals;
        let p = conic().partials(&f);
        let g1 = Grading::Standard { nvars: 3, degree: 1 };
        assert_eq!(p[0], MultiForm::from_terms(&f, g1, [(vec![0, 0, 1], q(1))]).unwrap());
        assert_eq!(p[1], MultiForm::from_terms(&f, g1, [(vec![0, 1, 0], q(-2))]).unwrap());
        assert_eq!(p[2], MultiForm::from_terms(&f, g1, [(vec![1, 0, 0], q(1))]).unwrap());
        let pc = fermat_cubic().partials(&f);
        for (j, d) in pc.iter().enumerate() {
            let mut e = vec![0; 4];
            e[j] = 2;
            assert_eq!(*d, MultiForm::from_terms(&f, Grading::Standard { nvars: 4, degree: 2 }, [(e, q(3))]).unwrap());
        }
    }

    #[test]
    fn euler_identity_on_conic() {
        let f = Rationals;
        let g = conic();
        let mut acc = MultiForm::zero(g.grading());
        for (j, d) in g.partials(&f).iter().enumerate() {
            acc = acc.add(&f, &d.mul_var(&f, j)).unwrap();
        }
        assert_eq!(acc, g.scale(&f, &q(2)));
    }

    #[test]
    fn rejects_inhomogeneous_terms() {
        let r = MultiForm::from_terms(&Rationals, Grading::Standard { nvars: 2, degree: 2 }, [(vec![1, 0], q(1))]);
        assert!(matches!(r, Err(Error::DegreeMismatch(_))));
    }

    #[test]
    fn substitution_checks_arity_and_degrees() {
        let f = Rationals;
        assert!(matches!(conic().substitute(&f, &[form(&[1, 0])]), Err(Error::ArityMismatch(_))));
        let r = conic().substitute(&f, &[form(&[1, 0]), form(&[1]), form(&[0, 1])]);
        assert!(matches!(r, Err(Error::DegreeMismatch(_))));
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials(4, 3).len(), 20);
        assert_eq!(monomials(3, 0), vec![vec![0, 0, 0]]);
        assert_eq!(monomials(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        let g = Grading::Bigraded { blocks: (3, 2), degree: (1, 1) };
        assert_eq!(graded_monomials(g).len(), 6);
    }

    #[test]
    fn bigraded_partial_lowers_its_block() {
        let f = Rationals;
        let g = Grading::Bigraded { blocks: (3, 2), degree: (1, 1) };
        // x0 y1 - x1 y0
        let x = MultiForm::from_terms(&f, g, [(vec![1, 0, 0, 0, 1], q(1)), (vec![0, 1, 0, 1, 0], q(-1))]).unwrap();
        assert_eq!(x.partial(&f, 0).grading(), Grading::Bigraded { blocks: (3, 2), degree: (0, 1) });
        assert_eq!(x.partial(&f, 4).grading(), Grading::Bigraded { blocks: (3, 2), degree: (1, 0) });
        assert!(x.partial(&f, 2).is_zero());
    }
}
