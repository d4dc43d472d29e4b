//! Power series in `x`, truncated, with polynomial-in-`t` coefficients.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::Rational;
use crate::ratfunc::RatFunc;

/// Coefficients of `x^0 .. x^order`, each a polynomial in `t`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiSeries {
    order: usize,
    coeffs: Vec<Poly>,
}

impl BiSeries {
    pub fn new(coeffs: Vec<Poly>) -> BiSeries {
        assert!(!coeffs.is_empty());
        BiSeries {
            order: coeffs.len() - 1,
            coeffs,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `x^n` (a polynomial in `t`).
    pub fn coeff(&self, n: usize) -> &Poly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    /// Taylor-expand `f` at `x = 0` through `x^order`.
    ///
    /// Works row by row: with `f = N/D` and `D = sum_j d_j(t) x^j`, the
    /// coefficients satisfy `d_0 c_n = n_n - sum_{j>=1} d_j c_{n-j}`, and the
    /// division by `d_0` must be exact for the coefficients to be polynomials
    /// in `t`.
    pub fn expand(f: &RatFunc, order: usize) -> Result<BiSeries> {
        let num_rows: Vec<Poly> = (0..=order as u32).map(|n| f.num().coeff_of_x(n)).collect();
        let den_deg = f.den().x_degree().unwrap_or(0).min(order as u32);
        let den_rows: Vec<Poly> = (0..=den_deg).map(|n| f.den().coeff_of_x(n)).collect();
        let d0 = &den_rows[0];
        if d0.is_zero() {
            return Err(Error::PoleAtOrigin);
        }
        let mut coeffs: Vec<Poly> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = num_rows[n].clone();
            for j in 1..=(n.min(den_deg as usize)) {
                acc = &acc - &(&den_rows[j] * &coeffs[n - j]);
            }
            let c = acc
                .div_exact(d0)
                .map_err(|_| Error::NonPolynomialCoefficient)?;
            coeffs.push(c);
        }
        Ok(BiSeries { order, coeffs })
    }

    /// Read off `[x^n t^{n-shift}]`; entries with `n < shift` are zero.
    pub fn diagonal(&self, shift: usize) -> Vec<Rational> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n < shift {
                    Rational::from_integer(0.into())
                } else {
                    c.coeff(n - shift)
                }
            })
            .collect()
    }

    /// Evaluate every coefficient at a fixed `t`.
    pub fn specialize_t(&self, tv: &Rational) -> Vec<Rational> {
        self.coeffs.iter().map(|c| c.eval(tv)).collect()
    }
}

impl fmt::Display for BiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate() {
            writeln!(f, "x^{n}: {c}")?;
        }
        Ok(())
    }
}
