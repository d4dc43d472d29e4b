//! Closed-form generating functions for the adjacency statistics: the
//! two-variable functions F(x,t) and G(x,t), their staircase and Hertzsprung
//! specializations, and exact series expansions of all of them.
//!
//! The closed forms evaluate Chebyshev polynomials at the substitution
//! phi = (1-x(t-1))/(2x(t-1)), which has a pole at x = 0, so U_j(phi) is
//! never formed directly. Instead the cleared numerators
//! P_j = (2x(t-1))^j U_j(phi) are generated by the denominator-cleared
//! recurrence P_{j+1} = 2(1-x(t-1)) P_j - (2x(t-1))^2 P_{j-1}, and every
//! ratio of U-values turns into a ratio of P-polynomials times an explicit
//! power of 2x(t-1) that cancels inside the rational-function field. The
//! same trick at fixed t handles the one-variable forms.

use num_bigint::BigUint;
use num_traits::{One, Signed};

use crate::bipoly::BiPoly;
use crate::error::Result;
use crate::poly::{Poly, Var};
use crate::rational::{rat, Rational};
use crate::ratfunc::RatFunc;
use crate::series::BiSeries;

/// Cleared Chebyshev numerators at the phi substitution, for one alphabet
/// size: `p[j] = (2x(t-1))^j * U_j(phi)` as a genuine polynomial in (x, t).
pub struct PhiContext {
    k: u32,
    /// `2x(t-1)`
    w: BiPoly,
    p: Vec<BiPoly>,
}

impl PhiContext {
    pub fn new(k: u32) -> PhiContext {
        assert!(k >= 1);
        // w = 2x(t-1) = 2xt - 2x
        let w = &BiPoly::monomial(1, 1, rat(2)) - &BiPoly::monomial(1, 0, rat(2));
        // 2(1-x(t-1)) = 2 - 2xt + 2x
        let lead = &BiPoly::constant(rat(2)) - &w;
        let w2 = &w * &w;
        let mut p = Vec::with_capacity(k as usize + 1);
        p.push(BiPoly::one());
        p.push(lead.scale(&rat(1)));
        for j in 2..=k as usize {
            let next = &(&lead * &p[j - 1]) - &(&w2 * &p[j - 2]);
            p.push(next);
        }
        PhiContext { k, w, p }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `P_j` for 0 <= j <= k.
    pub fn cleared(&self, j: usize) -> &BiPoly {
        &self.p[j]
    }

    /// `U_j(phi)` as a rational function (`P_j / w^j`).
    fn u_phi(&self, j: usize) -> RatFunc {
        RatFunc::new(self.p[j].clone(), self.w.pow(j as u32)).expect("w is nonzero")
    }
}

/// Closed form together with its expansion.
#[derive(Clone, Debug)]
pub struct GFResult {
    pub closed: RatFunc,
    pub series: BiSeries,
}

fn x_rf() -> RatFunc {
    RatFunc::from_bipoly(BiPoly::x())
}

/// `1 - 3x(t-1)` and friends as bivariate polynomials.
fn one_minus_3xtm1() -> BiPoly {
    &(&BiPoly::one() + &BiPoly::monomial(1, 0, rat(3))) - &BiPoly::monomial(1, 1, rat(3))
}

fn one_plus_3xtm1() -> BiPoly {
    &(&BiPoly::one() - &BiPoly::monomial(1, 0, rat(3))) + &BiPoly::monomial(1, 1, rat(3))
}

fn one_plus_xtm1() -> BiPoly {
    &(&BiPoly::one() - &BiPoly::monomial(1, 0, rat(1))) + &BiPoly::monomial(1, 1, rat(1))
}

/// The kernel of the linear-statistic generating function:
/// gamma = k/(1-3x(t-1)) - [2x(t-1)/(1-3x(t-1))^2] (U_k - U_{k-1} - 1)/U_k
/// at the phi substitution, assembled from cleared numerators so the result
/// is a genuine rational function regular at x = 0.
pub fn gamma_ratfunc(k: u32) -> RatFunc {
    assert!(k >= 2);
    let ctx = PhiContext::new(k);
    let s = one_minus_3xtm1();
    // (U_k - U_{k-1} - 1) / U_k = (P_k - w P_{k-1} - w^k) / P_k
    let n = &(ctx.cleared(k as usize) - &(&ctx.w * ctx.cleared(k as usize - 1)))
        - &ctx.w.pow(k);
    let num = &(&BiPoly::constant(rat(k as i64)) * &(&s * ctx.cleared(k as usize)))
        - &(&ctx.w * &n);
    let den = &(&s * &s) * ctx.cleared(k as usize);
    RatFunc::new(num, den).expect("denominator nonzero").reduce_full()
}

/// F(x,t) = 1/(1 - x gamma(x,t)): coefficient of x^n t^m counts length-n
/// words over [k] with m adjacent close pairs.
pub fn f_ratfunc(k: u32) -> RatFunc {
    let gamma = gamma_ratfunc(k);
    (RatFunc::one() / (RatFunc::one() - x_rf() * gamma)).reduce_full()
}

pub fn f_series(k: u32, order: usize) -> Result<GFResult> {
    let closed = f_ratfunc(k);
    let series = BiSeries::expand(&closed, order)?;
    Ok(GFResult { closed, series })
}

/// G(x,t): the cyclic analogue, assembled term by term as stated.
pub fn g_ratfunc(k: u32) -> RatFunc {
    assert!(k >= 2);
    let ctx = PhiContext::new(k);
    let one = RatFunc::one();
    let s = RatFunc::from_bipoly(one_minus_3xtm1());
    let s3p = RatFunc::from_bipoly(one_plus_3xtm1());
    let s1p = RatFunc::from_bipoly(one_plus_xtm1());
    let w = RatFunc::from_bipoly(ctx.w.clone());
    let u_k = ctx.u_phi(k as usize);
    let u_km1 = ctx.u_phi(k as usize - 1);
    let f = {
        let gamma = gamma_ratfunc(k);
        &one / &(&one - &(&x_rf() * &gamma))
    };
    // kx(t-1) = (k/2) w
    let kxtm1 = RatFunc::from_bipoly(ctx.w.scale(&Rational::new((k as i64).into(), 2.into())));
    let inner = {
        let frac_top = &one - &(&x_rf() * &(&(&RatFunc::integer(1 + k as i64) - &u_k) / &s));
        &(&frac_top * &f) + &(&u_km1 - &one)
    };
    let term2 = &(&(&w * &RatFunc::integer(k as i64 + 1)) / &(&s3p * &u_k)) * &inner;
    let bracket = &(&(&f - &term2) + &kxtm1) - &one;
    let prefactor = &s3p / &(&s * &s1p);
    &one + &(&prefactor * &bracket)
}

pub fn g_series(k: u32, order: usize) -> Result<GFResult> {
    let closed = g_ratfunc(k);
    let series = BiSeries::expand(&closed, order)?;
    Ok(GFResult { closed, series })
}

/// Cleared one-variable ladder: `r[j] = (2cx)^j U_j((b0 + b1 x)/(2cx))`
/// generated by `r_{j+1} = 2(b0 + b1 x) r_j - (2cx)^2 r_{j-1}`.
fn cleared_ladder(k: u32, b: &Poly, c: i64) -> Vec<Poly> {
    let four_c2_x2 = Poly::monomial(Var::X, 2, rat(4 * c * c));
    let two_b = b.scale(&rat(2));
    let mut r = Vec::with_capacity(k as usize + 1);
    r.push(Poly::one(Var::X));
    r.push(two_b.clone());
    for j in 2..=k as usize {
        let next = &(&two_b * &r[j - 1]) - &(&four_c2_x2 * &r[j - 2]);
        r.push(next);
    }
    r
}

fn univariate_gf(num_terms: Vec<RatFunc>) -> RatFunc {
    num_terms
        .into_iter()
        .fold(RatFunc::zero(), |acc, t| acc + t)
}

fn xpoly(coeffs: &[i64]) -> Poly {
    Poly::from_ints(Var::X, coeffs)
}

/// D(x), the staircase-word counting series:
/// D = 1 + x(k-(3k+2)x)/(1-3x)^2 + [2x^2/(1-3x)^2] (U_{k-1}+1)/U_k at
/// the argument (1-x)/(2x).
pub fn staircase_gf(k: u32, order: usize) -> Result<GFResult> {
    assert!(k >= 2);
    let r = cleared_ladder(k, &xpoly(&[1, -1]), 1); // argument (1-x)/(2x)
    let den_sq = xpoly(&[1, -6, 9]); // (1-3x)^2
    let kx = k as i64;
    let term1 = RatFunc::new(
        BiPoly::from_poly(&xpoly(&[0, kx, -(3 * kx + 2)])),
        BiPoly::from_poly(&den_sq),
    )
    .expect("nonzero");
    // (U_{k-1}+1)/U_k = (2x R_{k-1} + (2x)^k) / R_k
    let two_x = xpoly(&[0, 2]);
    let ratio_num = &(&two_x * &r[k as usize - 1]) + &two_x.pow(k);
    let term2 = RatFunc::new(
        BiPoly::from_poly(&(&xpoly(&[0, 0, 2]) * &ratio_num)),
        BiPoly::from_poly(&(&den_sq * &r[k as usize])),
    )
    .expect("nonzero");
    let closed = univariate_gf(vec![RatFunc::one(), term1, term2]);
    let series = BiSeries::expand(&closed, order)?;
    Ok(GFResult { closed, series })
}

/// E(x), the cyclic-staircase counting series:
/// E = 1 + kx(1+3x)/((1+x)(1-3x)) - 2(k+1)x U_{k-1}/((1+x)(1-3x) U_k) at
/// the argument (1-x)/(2x).
pub fn cyclic_staircase_gf(k: u32, order: usize) -> Result<GFResult> {
    assert!(k >= 2);
    let r = cleared_ladder(k, &xpoly(&[1, -1]), 1);
    let kx = k as i64;
    let den = xpoly(&[1, -2, -3]); // (1+x)(1-3x)
    let term1 = RatFunc::new(
        BiPoly::from_poly(&xpoly(&[0, kx, 3 * kx])),
        BiPoly::from_poly(&den),
    )
    .expect("nonzero");
    // U_{k-1}/U_k = 2x R_{k-1} / R_k
    let num = &xpoly(&[0, 0, -4 * (kx + 1)]) * &r[k as usize - 1];
    let term2 = RatFunc::new(
        BiPoly::from_poly(&num),
        BiPoly::from_poly(&(&den * &r[k as usize])),
    )
    .expect("nonzero");
    let closed = univariate_gf(vec![RatFunc::one(), term1, term2]);
    let series = BiSeries::expand(&closed, order)?;
    Ok(GFResult { closed, series })
}

/// Hertzsprung words (no adjacent close pair): the series of
/// [1 - kx/(1+3x) - 2x^2/(1+3x)^2 (U_k - U_{k-1} - 1)/U_k]^{-1} at the
/// argument -(1+x)/(2x).
pub fn hertzsprung_gf(k: u32, order: usize) -> Result<GFResult> {
    assert!(k >= 2);
    // (-2x)^j U_j(-(1+x)/(2x)): cleared denominator -2x pairs with
    // numerator 1+x, so the ladder multiplier is 2(1+x)
    let q = cleared_ladder(k, &xpoly(&[1, 1]), -1);
    let kx = k as i64;
    let one_p3 = xpoly(&[1, 3]);
    let one_p3_sq = &one_p3 * &one_p3;
    // (U_k - U_{k-1} - 1)/U_k = (Q_k + 2x Q_{k-1} - (-2x)^k)/Q_k
    let minus_two_x = xpoly(&[0, -2]);
    let ratio_num = &(&q[k as usize] + &(&xpoly(&[0, 2]) * &q[k as usize - 1])) - &minus_two_x.pow(k);
    let t1 = RatFunc::new(
        BiPoly::from_poly(&xpoly(&[0, kx])),
        BiPoly::from_poly(&one_p3),
    )
    .expect("nonzero");
    let t2 = RatFunc::new(
        BiPoly::from_poly(&(&xpoly(&[0, 0, 2]) * &ratio_num)),
        BiPoly::from_poly(&(&one_p3_sq * &q[k as usize])),
    )
    .expect("nonzero");
    let closed = (RatFunc::one() - t1 - t2).recip()?;
    let series = BiSeries::expand(&closed, order)?;
    Ok(GFResult { closed, series })
}

/// Cyclic Hertzsprung words: the t = 0 specialization of G, reduced to a
/// one-variable rational function.
pub fn cyclic_hertzsprung_gf(k: u32, order: usize) -> Result<GFResult> {
    let g = g_ratfunc(k);
    let closed = g.subst_t(&Rational::from_integer(0.into()))?;
    let series = BiSeries::expand(&closed, order)?;
    Ok(GFResult { closed, series })
}

/// Read off the diagonal `[x^n t^{n-shift}]` of an expanded series; this is
/// the exact counterpart of substituting (tx, 1/t) and letting t -> 0.
pub fn diagonal_extract(series: &BiSeries, shift: usize) -> Vec<Rational> {
    series.diagonal(shift)
}

/// Integer series coefficients, for counting series whose coefficients are
/// nonnegative integers by construction.
pub fn integer_series(series: &[Rational]) -> Vec<BigUint> {
    series
        .iter()
        .map(|c| {
            assert!(c.denom().is_one() && !c.numer().is_negative(), "not a count: {c}");
            c.numer().to_biguint().expect("nonnegative")
        })
        .collect()
}
