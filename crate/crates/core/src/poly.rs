//! Dense univariate polynomials over the rational scalar field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{rat, Rational};

/// The two symbolic variables used across the crate: `x` carries Chebyshev
/// material, `t` carries statistic distributions.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    X,
    T,
}

impl Var {
    pub fn symbol(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::T => "t",
        }
    }
}

/// Dense polynomial: `coeffs[d]` is the coefficient of degree `d`.
/// Trailing coefficient is nonzero unless the polynomial is zero (empty list).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    var: Var,
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(var: Var, mut coeffs: Vec<Rational>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { var, coeffs }
    }

    pub fn zero(var: Var) -> Poly {
        Poly { var, coeffs: vec![] }
    }

    pub fn one(var: Var) -> Poly {
        Poly::constant(var, rat(1))
    }

    pub fn constant(var: Var, c: Rational) -> Poly {
        Poly::new(var, vec![c])
    }

    /// The variable itself as a degree-1 polynomial.
    pub fn ident(var: Var) -> Poly {
        Poly::monomial(var, 1, rat(1))
    }

    pub fn monomial(var: Var, degree: usize, c: Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(var);
        }
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Poly { var, coeffs }
    }

    pub fn from_ints(var: Var, coeffs: &[i64]) -> Poly {
        Poly::new(var, coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, degree: usize) -> Rational {
        self.coeffs.get(degree).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, v: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.var);
        }
        Poly::new(self.var, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut n: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(self.var);
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// Substitute `inner` for the variable. The result lives in `inner`'s
    /// variable.
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero(inner.var);
        for c in self.coeffs.iter().rev() {
            acc = &acc * inner + &Poly::constant(inner.var, c.clone());
        }
        acc
    }

    /// Exact division: returns `q` with `q * b == self`, or `NotDivisible`.
    pub fn div_exact(&self, b: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(b)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }

    /// Euclidean division by a nonzero divisor.
    pub fn div_rem(&self, b: &Poly) -> Result<(Poly, Poly)> {
        if b.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let var = join_vars(self, b);
        let db = b.coeffs.len() - 1;
        let lead = b.leading_coeff();
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((Poly::zero(var), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - db];
        loop {
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() <= db {
                break;
            }
            let deg = rem.len() - 1 - db;
            let c = rem.last().unwrap() / &lead;
            for (i, bc) in b.coeffs.iter().enumerate() {
                let idx = deg + i;
                rem[idx] = &rem[idx] - &(&c * bc);
            }
            quot[deg] = c;
        }
        Ok((Poly::new(var, quot), Poly::new(var, rem)))
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let var = join_vars(self, other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        if a.is_zero() {
            return Poly::zero(var);
        }
        let lead = a.leading_coeff();
        a.scale(&lead.recip())
    }
}

/// Two polynomials may combine when they share a variable or either side is
/// constant; the non-constant side's variable wins.
fn join_vars(a: &Poly, b: &Poly) -> Var {
    if a.var == b.var || b.is_constant() {
        a.var
    } else if a.is_constant() {
        b.var
    } else {
        panic!(
            "mixed polynomial variables: {} vs {}",
            a.var.symbol(),
            b.var.symbol()
        )
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let var = join_vars(self, rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::new(var, coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let var = join_vars(self, rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::new(var, coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let var = join_vars(self, rhs);
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(var);
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Poly::new(var, coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.var, self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl $trait<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

pub(crate) fn format_coeff(c: &Rational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Terms printed in descending degree, e.g. `4*x^2 - 2*x - 2`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let sym = self.var.symbol();
        let mut first = true;
        for d in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[d];
            if c.is_zero() {
                continue;
            }
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
            let show_coeff = !abs.is_one() || d == 0;
            if show_coeff {
                write!(f, "{}", format_coeff(&abs))?;
            }
            if d > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                write!(f, "{sym}")?;
                if d > 1 {
                    write!(f, "^{d}")?;
                }
            }
        }
        Ok(())
    }
}
