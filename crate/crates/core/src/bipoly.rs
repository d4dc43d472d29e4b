//! Sparse bivariate polynomials in (x, t) over the rational scalar field.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::{format_coeff, Poly, Var};
use crate::rational::{rat, Rational};

/// Map from (x-degree, t-degree) to a nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn zero() -> BiPoly {
        BiPoly::default()
    }

    pub fn one() -> BiPoly {
        BiPoly::constant(rat(1))
    }

    pub fn constant(c: Rational) -> BiPoly {
        BiPoly::monomial(0, 0, c)
    }

    pub fn monomial(x_deg: u32, t_deg: u32, c: Rational) -> BiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((x_deg, t_deg), c);
        }
        BiPoly { terms }
    }

    pub fn x() -> BiPoly {
        BiPoly::monomial(1, 0, rat(1))
    }

    pub fn t() -> BiPoly {
        BiPoly::monomial(0, 1, rat(1))
    }

    pub fn from_poly(p: &Poly) -> BiPoly {
        let mut terms = BTreeMap::new();
        for (d, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                let key = match p.var() {
                    Var::X => (d as u32, 0),
                    Var::T => (0, d as u32),
                };
                terms.insert(key, c.clone());
            }
        }
        BiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(xd, _)| xd).max()
    }

    pub fn t_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, td)| td).max()
    }

    fn insert_add(terms: &mut BTreeMap<(u32, u32), Rational>, key: (u32, u32), c: Rational) {
        if c.is_zero() {
            return;
        }
        match terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> BiPoly {
        let mut base = self.clone();
        let mut acc = BiPoly::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    pub fn eval(&self, xv: &Rational, tv: &Rational) -> Rational {
        // Powers are tiny here; memoize them anyway to avoid repeated pow.
        let xmax = self.x_degree().unwrap_or(0) as usize;
        let tmax = self.t_degree().unwrap_or(0) as usize;
        let xpow = power_table(xv, xmax);
        let tpow = power_table(tv, tmax);
        let mut acc = Rational::zero();
        for (&(xd, td), c) in &self.terms {
            acc += c * &xpow[xd as usize] * &tpow[td as usize];
        }
        acc
    }

    /// Substitute a rational value for `t`; the result is univariate in `x`.
    pub fn subst_t(&self, tv: &Rational) -> Poly {
        let tmax = self.t_degree().unwrap_or(0) as usize;
        let tpow = power_table(tv, tmax);
        let n = self.x_degree().map_or(0, |d| d as usize + 1);
        let mut coeffs = vec![Rational::zero(); n];
        for (&(xd, td), c) in &self.terms {
            coeffs[xd as usize] += c * &tpow[td as usize];
        }
        Poly::new(Var::X, coeffs)
    }

    /// Coefficient of `x^n` as a polynomial in `t`.
    pub fn coeff_of_x(&self, n: u32) -> Poly {
        let mut coeffs = vec![];
        for (&(xd, td), c) in &self.terms {
            if xd == n {
                if coeffs.len() <= td as usize {
                    coeffs.resize(td as usize + 1, Rational::zero());
                }
                coeffs[td as usize] = c.clone();
            }
        }
        Poly::new(Var::T, coeffs)
    }

    /// If every term is free of one variable, view the polynomial as
    /// univariate in the other. Constants come back as `Var::X`.
    pub fn as_univariate(&self) -> Option<Poly> {
        let uses_x = self.terms.keys().any(|&(xd, _)| xd > 0);
        let uses_t = self.terms.keys().any(|&(_, td)| td > 0);
        match (uses_x, uses_t) {
            (true, true) => None,
            (_, false) => {
                let n = self.x_degree().map_or(0, |d| d as usize + 1);
                let mut coeffs = vec![Rational::zero(); n];
                for (&(xd, _), c) in &self.terms {
                    coeffs[xd as usize] = c.clone();
                }
                Some(Poly::new(Var::X, coeffs))
            }
            (false, true) => {
                let n = self.t_degree().map_or(0, |d| d as usize + 1);
                let mut coeffs = vec![Rational::zero(); n];
                for (&(_, td), c) in &self.terms {
                    coeffs[td as usize] = c.clone();
                }
                Some(Poly::new(Var::T, coeffs))
            }
        }
    }

    /// Componentwise minimum of exponents: the largest monomial dividing
    /// every term. Zero polynomial gives (0, 0).
    pub fn monomial_content(&self) -> (u32, u32) {
        let mut it = self.terms.keys();
        let Some(&(x0, t0)) = it.next() else {
            return (0, 0);
        };
        it.fold((x0, t0), |(ax, at), &(bx, bt)| (ax.min(bx), at.min(bt)))
    }

    pub fn div_monomial(&self, x_deg: u32, t_deg: u32) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(xd, td), c)| ((xd - x_deg, td - t_deg), c.clone()))
                .collect(),
        }
    }

    /// Positive rational `c` such that `self / c` has coprime integer
    /// coefficients. Zero polynomial gives 1.
    pub fn content(&self) -> Rational {
        if self.is_zero() {
            return rat(1);
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(&c.numer().abs());
            den_lcm = den_lcm.lcm(c.denom());
        }
        Rational::new(num_gcd, den_lcm)
    }

    /// Coefficient of the lexicographically smallest (x, t) monomial.
    pub fn trailing_coeff(&self) -> Rational {
        self.terms
            .values()
            .next()
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    fn x_rows(&self) -> Vec<Poly> {
        let n = self.x_degree().map_or(0, |d| d as usize + 1);
        let mut rows = vec![Poly::zero(Var::T); n];
        for (&(xd, td), c) in &self.terms {
            rows[xd as usize] = &rows[xd as usize]
                + &Poly::monomial(Var::T, td as usize, c.clone());
        }
        rows
    }

    fn from_x_rows(rows: Vec<Poly>) -> BiPoly {
        let mut out = BiPoly::zero();
        for (xd, row) in rows.into_iter().enumerate() {
            for (td, c) in row.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    out = &out + &BiPoly::monomial(xd as u32, td as u32, c.clone());
                }
            }
        }
        out
    }

    /// gcd of the x-row coefficients, a polynomial in t (monic).
    fn t_content(&self) -> Poly {
        self.x_rows()
            .iter()
            .fold(Poly::zero(Var::T), |g, r| g.gcd(r))
    }

    /// Monic-ish gcd in the bivariate ring: t-content gcd times a primitive
    /// pseudo-remainder sequence in x over Q[t]. Returned up to a rational
    /// unit; callers divide both sides of a fraction by it.
    pub fn gcd(&self, other: &BiPoly) -> BiPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let cf = self.t_content();
        let cg = other.t_content();
        let cont = cf.gcd(&cg);
        let strip = |p: &BiPoly, c: &Poly| -> Vec<Poly> {
            p.x_rows()
                .iter()
                .map(|r| r.div_exact(c).expect("content divides"))
                .collect()
        };
        let mut f = strip(self, &cf);
        let mut g = strip(other, &cg);
        if f.len() < g.len() {
            std::mem::swap(&mut f, &mut g);
        }
        loop {
            while g.last().is_some_and(|r| r.is_zero()) {
                g.pop();
            }
            if g.is_empty() {
                break;
            }
            let r = pseudo_rem(&f, &g);
            f = g;
            g = primitive_rows(r);
        }
        let pp = BiPoly::from_x_rows(f);
        &pp * &BiPoly::from_poly(&cont)
    }

    /// Exact division in the bivariate ring, viewing both sides as
    /// polynomials in x over the t-coefficient ring. If the quotient exists
    /// every intermediate t-division is exact; otherwise `NotDivisible`.
    pub fn div_exact(&self, rhs: &BiPoly) -> crate::error::Result<BiPoly> {
        use crate::error::Error;
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if self.is_zero() {
            return Ok(BiPoly::zero());
        }
        let mut rem = self.x_rows();
        let div = rhs.x_rows();
        let dd = div.len() - 1;
        let dlead = &div[dd];
        if rem.len() < div.len() {
            return Err(Error::NotDivisible);
        }
        let mut quot = vec![Poly::zero(Var::T); rem.len() - dd];
        loop {
            while rem.last().is_some_and(|r| r.is_zero()) {
                rem.pop();
            }
            if rem.is_empty() {
                break;
            }
            if rem.len() - 1 < dd {
                return Err(Error::NotDivisible);
            }
            let deg = rem.len() - 1 - dd;
            let qt = rem.last().unwrap().div_exact(dlead)?;
            for (i, d) in div.iter().enumerate() {
                rem[deg + i] = &rem[deg + i] - &(&qt * d);
            }
            quot[deg] = qt;
        }
        Ok(BiPoly::from_x_rows(quot))
    }
}

/// Pseudo-remainder of row vectors in x over Q[t]: repeatedly scale by the
/// divisor's leading coefficient and cancel the top term until the degree
/// drops below the divisor's.
fn pseudo_rem(f: &[Poly], g: &[Poly]) -> Vec<Poly> {
    let dg = g.len() - 1;
    let lead = &g[dg];
    let mut r = f.to_vec();
    loop {
        while r.last().is_some_and(|p| p.is_zero()) {
            r.pop();
        }
        if r.len() <= dg {
            return r;
        }
        let deg = r.len() - 1 - dg;
        let top = r.last().unwrap().clone();
        for p in r.iter_mut() {
            *p = &*p * lead;
        }
        for (i, gp) in g.iter().enumerate() {
            r[deg + i] = &r[deg + i] - &(&top * gp);
        }
    }
}

/// Divide rows by their common t-content.
fn primitive_rows(rows: Vec<Poly>) -> Vec<Poly> {
    let content = rows.iter().fold(Poly::zero(Var::T), |g, r| g.gcd(r));
    if content.is_zero() || content.is_constant() {
        return rows;
    }
    rows.iter()
        .map(|r| r.div_exact(&content).expect("content divides"))
        .collect()
}

fn power_table(v: &Rational, max: usize) -> Vec<Rational> {
    let mut t = Vec::with_capacity(max + 1);
    t.push(Rational::one());
    for i in 0..max {
        let next = &t[i] * v;
        t.push(next);
    }
    t
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut terms = self.terms.clone();
        for (&k, c) in &rhs.terms {
            BiPoly::insert_add(&mut terms, k, c.clone());
        }
        BiPoly { terms }
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut terms = self.terms.clone();
        for (&k, c) in &rhs.terms {
            BiPoly::insert_add(&mut terms, k, -c);
        }
        BiPoly { terms }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut terms = BTreeMap::new();
        for (&(ax, at), ac) in &self.terms {
            for (&(bx, bt), bc) in &rhs.terms {
                BiPoly::insert_add(&mut terms, (ax + bx, at + bt), ac * bc);
            }
        }
        BiPoly { terms }
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: BiPoly) -> BiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: &BiPoly) -> BiPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<BiPoly> for &BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: BiPoly) -> BiPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

/// Monomials printed in descending (x-degree, t-degree) order.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(xd, td), c) in self.terms.iter().rev() {
            let neg = c < &Rational::zero();
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !abs.is_one() || (xd == 0 && td == 0);
            if show_coeff {
                write!(f, "{}", format_coeff(&abs))?;
            }
            let mut star = show_coeff;
            for (sym, d) in [("x", xd), ("t", td)] {
                if d > 0 {
                    if star {
                        write!(f, "*")?;
                    }
                    write!(f, "{sym}")?;
                    if d > 1 {
                        write!(f, "^{d}")?;
                    }
                    star = true;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn mul_and_display() {
        // (1 + x t)(1 - x t) = 1 - x^2 t^2
        let a = &BiPoly::one() + &(&BiPoly::x() * &BiPoly::t());
        let b = &BiPoly::one() - &(&BiPoly::x() * &BiPoly::t());
        let p = &a * &b;
        assert_eq!(p.to_string(), "-x^2*t^2 + 1");
        assert_eq!(p.x_degree(), Some(2));
        assert_eq!(p.t_degree(), Some(2));
    }

    #[test]
    fn eval_subst_roundtrip() {
        // p = 2x^2 t - 3x + 1/2
        let p = &(&BiPoly::monomial(2, 1, rat(2)) - &BiPoly::monomial(1, 0, rat(3)))
            + &BiPoly::constant(ratio(1, 2));
        let (xv, tv) = (ratio(1, 3), ratio(2, 5));
        assert_eq!(p.eval(&xv, &tv), p.subst_t(&tv).eval(&xv));
    }

    #[test]
    fn content_and_monomial_content() {
        let p = &BiPoly::monomial(2, 1, rat(6)) + &BiPoly::monomial(1, 1, rat(-4));
        assert_eq!(p.content(), rat(2));
        assert_eq!(p.monomial_content(), (1, 1));
        let q = p.div_monomial(1, 1);
        assert_eq!(q.x_degree(), Some(1));
        assert_eq!(q.t_degree(), Some(0));
    }

    #[test]
    fn coeff_rows() {
        let p = &(&BiPoly::x() * &BiPoly::t()) + &BiPoly::x();
        let row = p.coeff_of_x(1);
        assert_eq!(row.to_string(), "t + 1");
        assert!(p.coeff_of_x(0).is_zero());
    }

    #[test]
    fn div_exact_detects_failure() {
        // (1 + xt) does not divide (1 + x)
        let f = &BiPoly::one() + &BiPoly::x();
        let g = &BiPoly::one() + &BiPoly::monomial(1, 1, rat(1));
        assert!(f.div_exact(&g).is_err());
        assert_eq!((&f * &g).div_exact(&g).unwrap(), f);
    }

    #[test]
    fn gcd_finds_planted_factor() {
        // gcd((x+t)(1+2x), (x+t)(3-t)) is a rational multiple of x+t
        let common = &BiPoly::x() + &BiPoly::t();
        let a = &common * &(&BiPoly::one() + &BiPoly::monomial(1, 0, rat(2)));
        let b = &common * &(&BiPoly::constant(rat(3)) - &BiPoly::t());
        let g = a.gcd(&b);
        assert!(a.div_exact(&g).is_ok());
        assert!(b.div_exact(&g).is_ok());
        assert!(g.div_exact(&common).is_ok());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_bipoly(max_terms: usize) -> impl Strategy<Value = BiPoly> {
            proptest::collection::vec(((0u32..3, 0u32..3), -4i64..=4), 0..max_terms).prop_map(
                |terms| {
                    terms.into_iter().fold(BiPoly::zero(), |acc, ((xd, td), c)| {
                        &acc + &BiPoly::monomial(xd, td, rat(c))
                    })
                },
            )
        }

        proptest! {
            #[test]
            fn product_division_round_trips(p in arb_bipoly(4), q in arb_bipoly(4)) {
                prop_assume!(!q.is_zero());
                let prod = &p * &q;
                prop_assert_eq!(prod.div_exact(&q).unwrap(), p);
            }

            #[test]
            fn gcd_divides_and_respects_planted_factor(
                p in arb_bipoly(3), q in arb_bipoly(3), f in arb_bipoly(3)
            ) {
                prop_assume!(!p.is_zero() && !q.is_zero() && !f.is_zero());
                let a = &p * &f;
                let b = &q * &f;
                let g = a.gcd(&b);
                prop_assert!(a.div_exact(&g).is_ok());
                prop_assert!(b.div_exact(&g).is_ok());
                prop_assert!(g.div_exact(&f).is_ok(), "gcd misses the planted factor");
            }
        }
    }
}
