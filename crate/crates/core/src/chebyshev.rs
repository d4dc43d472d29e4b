//! Chebyshev polynomials of both kinds over the exact polynomial ring,
//! with the index conventions the word-counting identities rely on.
//!
//! Second-kind polynomials extend to negative indices by running the
//! recurrence backward: `U_{-1} = 0`, `U_{-2} = -1`, and in general
//! `U_{-n} = -U_{n-2}`. First-kind negative indices are rejected.

use std::sync::OnceLock;

use crate::error::Result;
use crate::poly::{Poly, Var};
use crate::rational::{rat, Rational};

/// Polynomials are cached once per process up to this degree; larger indices
/// are computed on the fly.
pub const CACHE_LIMIT: usize = 64;

fn u_cache() -> &'static Vec<Poly> {
    static CACHE: OnceLock<Vec<Poly>> = OnceLock::new();
    CACHE.get_or_init(|| build_table(Poly::one(Var::X), Poly::from_ints(Var::X, &[0, 2])))
}

fn t_cache() -> &'static Vec<Poly> {
    static CACHE: OnceLock<Vec<Poly>> = OnceLock::new();
    CACHE.get_or_init(|| build_table(Poly::one(Var::X), Poly::ident(Var::X)))
}

fn build_table(p0: Poly, p1: Poly) -> Vec<Poly> {
    let two_x = Poly::from_ints(Var::X, &[0, 2]);
    let mut table = Vec::with_capacity(CACHE_LIMIT + 1);
    table.push(p0);
    table.push(p1);
    for n in 2..=CACHE_LIMIT {
        let next = &(&two_x * &table[n - 1]) - &table[n - 2];
        table.push(next);
    }
    table
}

fn from_table(table: &[Poly], n: usize) -> Poly {
    if n < table.len() {
        return table[n].clone();
    }
    let two_x = Poly::from_ints(Var::X, &[0, 2]);
    let mut a = table[table.len() - 2].clone();
    let mut b = table[table.len() - 1].clone();
    for _ in table.len()..=n {
        let next = &(&two_x * &b) - &a;
        a = b;
        b = next;
    }
    b
}

/// `U_n(x)`, any integer index.
pub fn cheb_u(n: i64) -> Poly {
    if n >= 0 {
        from_table(u_cache(), n as usize)
    } else if n == -1 {
        Poly::zero(Var::X)
    } else {
        -cheb_u(-n - 2)
    }
}

/// `T_n(x)`, nonnegative index only.
pub fn cheb_t(n: i64) -> Poly {
    assert!(n >= 0, "first-kind Chebyshev index must be nonnegative, got {n}");
    from_table(t_cache(), n as usize)
}

/// `U_n` evaluated at a rational point by the value recurrence.
pub fn cheb_u_at(n: i64, v: &Rational) -> Rational {
    if n < -1 {
        return -cheb_u_at(-n - 2, v);
    }
    let mut prev = Rational::from_integer(0.into()); // U_{-1}
    let mut cur = rat(1); // U_0
    if n == -1 {
        return prev;
    }
    let two_v = v + v;
    for _ in 0..n {
        let next = &two_v * &cur - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `Z_k(x) = (U_k - U_{k-1} - 1) / (2(x-1))`, exact in the polynomial ring.
/// The division always cancels because the numerator vanishes at `x = 1`;
/// a `NotDivisible` from here means the implementation is broken.
pub fn z_poly(k: i64) -> Result<Poly> {
    let num = &(&cheb_u(k) - &cheb_u(k - 1)) - &Poly::one(Var::X);
    num.div_exact(&Poly::from_ints(Var::X, &[-2, 2]))
}

/// `U_i(T_m(x))`: the composition the product identities are phrased in.
pub fn u_at_t(i: i64, m: i64) -> Poly {
    cheb_u(i).compose(&cheb_t(m))
}

/// `Z_k(T_m(x))`.
pub fn z_at_t(k: i64, m: i64) -> Result<Poly> {
    Ok(z_poly(k)?.compose(&cheb_t(m)))
}
