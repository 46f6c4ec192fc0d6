//! Divisor classes on Hirzebruch surfaces `F_e`.
//!
//! `H_2(F_e, Z)` is spanned by the negative section `E` (with `E² = -e`) and
//! a fiber `F` (`E·F = 1`, `F² = 0`).

use std::fmt;

use crate::{Error, Result};

/// The surface `F_e`; classes carry it so mixing surfaces is caught.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Hirzebruch {
    e: u32,
}

impl Hirzebruch {
    pub fn new(e: u32) -> Self {
        Hirzebruch { e }
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn class(&self, a: i64, b: i64) -> SurfaceClass {
        SurfaceClass { e: self.e, a, b }
    }

    pub fn section(&self) -> SurfaceClass {
        self.class(1, 0)
    }

    pub fn fiber(&self) -> SurfaceClass {
        self.class(0, 1)
    }

    /// `K = -2E - (e+2)F`.
    pub fn canonical(&self) -> SurfaceClass {
        self.class(-2, -(i64::from(self.e) + 2))
    }
}

/// `aE + bF` on `F_e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SurfaceClass {
    pub e: u32,
    pub a: i64,
    pub b: i64,
}

impl SurfaceClass {
    pub fn surface(&self) -> Hirzebruch {
        Hirzebruch::new(self.e)
    }

    pub fn add(&self, other: &SurfaceClass) -> Result<SurfaceClass> {
        same_surface(self, other)?;
        Ok(SurfaceClass { e: self.e, a: self.a + other.a, b: self.b + other.b })
    }

    pub fn scale(&self, k: i64) -> SurfaceClass {
        SurfaceClass { e: self.e, a: k * self.a, b: k * self.b }
    }
}

impl fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}E + {}F on F_{}", self.a, self.b, self.e)
    }
}

fn same_surface(c1: &SurfaceClass, c2: &SurfaceClass) -> Result<()> {
    if c1.e != c2.e {
        return Err(Error::MixedContexts(c1.e, c2.e));
    }
    Ok(())
}

pub fn intersect(c1: &SurfaceClass, c2: &SurfaceClass) -> Result<i64> {
    same_surface(c1, c2)?;
    Ok(-i64::from(c1.e) * c1.a * c2.a + c1.a * c2.b + c2.a * c1.b)
}

/// The effective cone is spanned by `E` and `F`.
pub fn is_effective(c: &SurfaceClass) -> bool {
    c.a >= 0 && c.b >= 0
}

/// `h^0(O(aE + bF)) = Σ_{i=0}^{a} max(0, b - ie + 1)`, zero for `a < 0`.
pub fn h0_class(c: &SurfaceClass) -> i64 {
    let e = i64::from(c.e);
    (0..=c.a).map(|i| (c.b - i * e + 1).max(0)).sum()
}

/// Dimension of the curves in `|c|` through `m` general points.
pub fn through_points_dim(c: &SurfaceClass, m: i64) -> i64 {
    h0_class(c) - 1 - m
}

/// `F_{2e}` deforms to `F_0`, carrying `E_{2e}` to `E_0 - eF` and `F` to `F`.
pub fn transport_to_f0(c: &SurfaceClass) -> Result<SurfaceClass> {
    if !c.e.is_multiple_of(2) {
        return Err(Error::OddRulingIndex(c.e));
    }
    let half = i64::from(c.e / 2);
    Ok(SurfaceClass { e: 0, a: c.a, b: c.b - c.a * half })
}

/// Dimension `2k - 2` of degree-`k` covers of a fixed `P^1`.
pub fn cover_moduli_dim(k: i64) -> i64 {
    2 * k - 2
}
