//! Reduced ratios of bivariate polynomials.
//!
//! Construction-time reduction is deliberately lightweight: integer content,
//! common monomial factors, and a full univariate gcd when both sides live
//! in one variable. Genuinely bivariate pairs keep whatever common factor
//! they have unless [`RatFunc::reduce_full`] is asked for, so equality is
//! decided by cross-multiplication, which is exact either way.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::Zero;

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{rat, Rational};

#[derive(Clone, Debug)]
pub struct RatFunc {
    num: BiPoly,
    den: BiPoly,
}

impl RatFunc {
    /// Build and normalize `num / den`. Fails on an identically zero
    /// denominator.
    pub fn new(num: BiPoly, den: BiPoly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let mut f = RatFunc { num, den };
        f.reduce();
        Ok(f)
    }

    pub fn from_bipoly(p: BiPoly) -> RatFunc {
        RatFunc {
            num: p,
            den: BiPoly::one(),
        }
    }

    pub fn from_poly(p: &Poly) -> RatFunc {
        RatFunc::from_bipoly(BiPoly::from_poly(p))
    }

    pub fn constant(c: Rational) -> RatFunc {
        RatFunc::from_bipoly(BiPoly::constant(c))
    }

    pub fn zero() -> RatFunc {
        RatFunc::constant(Rational::zero())
    }

    pub fn one() -> RatFunc {
        RatFunc::constant(rat(1))
    }

    pub fn integer(n: i64) -> RatFunc {
        RatFunc::constant(rat(n))
    }

    pub fn num(&self) -> &BiPoly {
        &self.num
    }

    pub fn den(&self) -> &BiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = BiPoly::one();
            return;
        }
        // Common monomial factor.
        let (nx, nt) = self.num.monomial_content();
        let (dx, dt) = self.den.monomial_content();
        let (mx, mt) = (nx.min(dx), nt.min(dt));
        if mx > 0 || mt > 0 {
            self.num = self.num.div_monomial(mx, mt);
            self.den = self.den.div_monomial(mx, mt);
        }
        // Univariate pairs get a real gcd.
        if let (Some(pn), Some(pd)) = (self.num.as_univariate(), self.den.as_univariate()) {
            if pn.var() == pd.var() || pn.is_constant() || pd.is_constant() {
                let g = pn.gcd(&pd);
                if !g.is_constant() {
                    let pn = pn.div_exact(&g).expect("gcd divides");
                    let pd = pd.div_exact(&g).expect("gcd divides");
                    self.num = BiPoly::from_poly(&pn);
                    self.den = BiPoly::from_poly(&pd);
                }
            }
        }
        // Primitive integer coefficients on both sides.
        let cn = self.num.content();
        let cd = self.den.content();
        self.num = self.num.scale(&(rat(1) / &cn));
        self.den = self.den.scale(&(rat(1) / &cd));
        let extra = cn / cd;
        self.num = self.num.scale(&Rational::from(extra.numer().clone()));
        self.den = self.den.scale(&Rational::from(extra.denom().clone()));
        // Sign convention: trailing coefficient of the denominator positive.
        if self.den.trailing_coeff() < Rational::zero() {
            self.num = -&self.num;
            self.den = -&self.den;
        }
    }

    fn cancel_bivariate_gcd(&mut self) {
        let g = self.num.gcd(&self.den);
        if g.x_degree().unwrap_or(0) > 0 || g.t_degree().unwrap_or(0) > 0 {
            self.num = self.num.div_exact(&g).expect("gcd divides");
            self.den = self.den.div_exact(&g).expect("gcd divides");
        }
    }

    /// Cancel the full bivariate gcd. Construction never attempts this (the
    /// pseudo-remainder sequence gets expensive on large operands), so the
    /// call is an explicit opt-in for values known to stay small, like
    /// symbolic matrix entries.
    pub fn reduce_full(mut self) -> RatFunc {
        if self.num.as_univariate().is_none() || self.den.as_univariate().is_none() {
            self.cancel_bivariate_gcd();
            let cn = self.num.content();
            let cd = self.den.content();
            self.num = self.num.scale(&(rat(1) / &cn));
            self.den = self.den.scale(&(rat(1) / &cd));
            let extra = cn / cd;
            self.num = self.num.scale(&Rational::from(extra.numer().clone()));
            self.den = self.den.scale(&Rational::from(extra.denom().clone()));
            if self.den.trailing_coeff() < Rational::zero() {
                self.num = -&self.num;
                self.den = -&self.den;
            }
        }
        self
    }

    pub fn recip(&self) -> Result<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// Evaluate at a rational point; `None` if the reduced denominator
    /// vanishes there.
    pub fn eval(&self, xv: &Rational, tv: &Rational) -> Option<Rational> {
        let d = self.den.eval(xv, tv);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(xv, tv) / d)
    }

    /// Specialize `t` to a rational constant, keeping a function of `x`.
    pub fn subst_t(&self, tv: &Rational) -> Result<RatFunc> {
        let den = self.den.subst_t(tv);
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        RatFunc::new(
            BiPoly::from_poly(&self.num.subst_t(tv)),
            BiPoly::from_poly(&den),
        )
    }
}

/// Cross-multiplication equality: exact on the field of fractions.
impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFunc {}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero denominators")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero denominators")
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

/// Panics on division by the zero function; use `checked_div` where the
/// divisor is data-dependent.
impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero RatFunc")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                (&self).$method(rhs)
            }
        }
        impl $trait<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
