//! Dimension counts for spaces of maps and curves.
//!
//! Plain integer evaluators. Negative results mean "expected empty" and are
//! returned unclamped. `g` is the genus of the domain curve, so
//! `χ(O_C) = 1 - g`.

/// `dim Mor_d(P^1, P^n) = (n+1)(d+1) - 1`.
pub fn mor_dim_projective(n: i64, d: i64) -> i64 {
    (n + 1) * (d + 1) - 1
}

/// Lower bound `(n+2-e)d + n` for degree-`d` maps `P^1 -> X` where
/// `X ⊂ P^(n+1)` has degree `e`.
pub fn mor_hypersurface_bound(n: i64, e: i64, d: i64) -> i64 {
    (n + 2 - e) * d + n
}

/// `dim Mor_L(C, P^n) = (n+1) h^0(L) - 1`.
pub fn mor_fixed_bundle_dim(n: i64, h0: i64) -> i64 {
    (n + 1) * h0 - 1
}

/// `(n+2) h^0(L) - 1 - h^0(L^e)`: maps into a degree-`e` hypersurface of
/// `P^(n+1)` with fixed pullback `L` of the hyperplane class.
pub fn mor_l_hypersurface_bound(n: i64, h0_l: i64, h0_le: i64) -> i64 {
    (n + 2) * h0_l - 1 - h0_le
}

/// `c1(X)·β + dim X · χ(O_C)`.
pub fn mor_bound(c1_beta: i64, dim_x: i64, g: i64) -> i64 {
    c1_beta + dim_x * (1 - g)
}

/// The sharper count `c1·β + dim X·χ(O_C) - g + dim X·h^1(L) - h^1(L^e)`.
pub fn mor_refined_bound(c1_beta: i64, dim_x: i64, g: i64, h1_l: i64, h1_le: i64) -> i64 {
    mor_bound(c1_beta, dim_x, g) - g + dim_x * h1_l - h1_le
}

/// Bound for the Chow variety / Hilbert scheme of curves:
/// `c1·β + (dim X - 3) χ(O_C)`.
pub fn curves_bound(c1_beta: i64, dim_x: i64, g: i64) -> i64 {
    c1_beta + (dim_x - 3) * (1 - g)
}

/// Expected dimension of curves meeting subvarieties `Z_i`; each imposes
/// `codim Z_i - 1` conditions.
pub fn gw_expected_dim(c1_beta: i64, dim_x: i64, g: i64, codims: &[i64]) -> i64 {
    curves_bound(c1_beta, dim_x, g) - codims.iter().map(|c| c - 1).sum::<i64>()
}

/// Expected dimension of the Fano scheme of lines on a degree-`e`
/// hypersurface in `P^(n+1)`: `dim G(1, n+1) = 2n` minus the `e + 1`
/// coefficients of `G` restricted to a line.
pub fn fano_lines_expected_dim(n: i64, e: i64) -> i64 {
    2 * n - e - 1
}
