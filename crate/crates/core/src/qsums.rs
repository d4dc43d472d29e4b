//! A catalog of 42 closed forms for sums of products of Chebyshev
//! polynomials (`q_0` .. `q_41`), with both sides computed independently and
//! compared exactly.
//!
//! The direct side is the literal summation; the closed side is the stated
//! formula. Where a closed form cites another `q_j(k')`, the reference is
//! resolved by the cited identity's direct sum, so each entry's verdict
//! reflects its own claim and does not inherit a defect in a cited formula.
//! Verdicts are computed, never assumed: a handful of catalogued forms are
//! wrong as stated, and the registry records the corrected reading that does
//! verify alongside the mismatch witness.

use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::chebyshev::{cheb_t, cheb_u, u_at_t, z_at_t, z_poly};
use crate::error::{Error, Result};
use crate::poly::{Poly, Var};
use crate::rational::{ratio, Rational};
use crate::ratfunc::RatFunc;
use crate::report::csv_row;

/// Metadata for one identity.
#[derive(Clone, Debug)]
pub struct QIdentity {
    pub id: u8,
    /// Smallest k for which the identity is asserted. Derived from the
    /// summand index range (every second-kind index stays >= -2 under the
    /// negative-index convention) and, for q_38, from the observed failure
    /// of the empty-reference case k = 1.
    pub min_k: i64,
    /// The two sides cannot be compared as stated (unbound parameter).
    pub ambiguous: bool,
    /// Notes on defects in the stated form and the corrected reading that
    /// verifies, where one was found.
    pub note: Option<&'static str>,
    /// Other identities cited by the closed form.
    pub cites: Option<&'static str>,
}

const fn q(id: u8) -> QIdentity {
    QIdentity {
        id,
        min_k: 1,
        ambiguous: false,
        note: None,
        cites: None,
    }
}

const fn q_cites(id: u8, cites: &'static str) -> QIdentity {
    QIdentity {
        cites: Some(cites),
        ..q(id)
    }
}

static REGISTRY: [QIdentity; 42] = [
    q(0),
    q(1),
    q(2),
    q(3),
    q(4),
    q_cites(5, "q_4(k-1)"),
    q_cites(6, "q_3(k-1)"),
    QIdentity {
        note: Some(
            "mismatches as stated; corrected reading flips the sign of the \
             U_{k-1}(Z_{k-1}(T_3)-Z_{k+1}(T_3)+1) term, i.e. the second \
             fraction is -4T_{k+2}U_{k-1}+U_{k-1}(...), and then verifies \
             for all k",
        ),
        ..q(7)
    },
    q_cites(8, "q_7(k-2)"),
    q_cites(9, "q_7(k-1)"),
    q_cites(10, "q_7(k)"),
    q_cites(11, "q_7(k-1)"),
    q(12),
    q_cites(13, "q_12(k)"),
    q_cites(14, "q_12(k-2)"),
    q_cites(15, "q_14(k)"),
    q(16),
    q_cites(17, "q_16(k-2)"),
    q(18),
    q_cites(19, "q_18(k-1)"),
    q_cites(20, "q_12(k-2), q_7(k-2)"),
    q(21),
    q_cites(22, "q_21(k)"),
    q_cites(23, "q_7(k+1)"),
    QIdentity {
        note: Some(
            "mismatches as stated for k >= 3; corrected reading multiplies \
             the q_12(k-2) reference by U_2(x), matching the shape of q_20 \
             and q_29, and then verifies for all k",
        ),
        ..q_cites(24, "q_12(k-2), q_7(k-2)")
    },
    QIdentity {
        ambiguous: true,
        note: Some(
            "summation index written 'ii' and the summand carries an unbound \
             parameter m that the closed side does not mention; no fixed \
             m in {0,1,2} makes the sides agree, so only the closed side is \
             checked for evaluability",
        ),
        ..q_cites(25, "q_18(k+1)")
    },
    q_cites(26, "q_1(k-1)"),
    q_cites(27, "q_1(k-1)"),
    q_cites(28, "q_4(k-2)"),
    QIdentity {
        note: Some(
            "reference written q_7(k-4) without a point argument, read as \
             q_7(k-4,x); still mismatches as stated: corrected reading \
             replaces 64x^6 by 256x^6 in the U_{2k-1} coefficient and \
             subtracts (rather than adds) the final fraction, verifying for \
             k >= 3; equivalently q_29(k) = q_24(k-2) - U_k U_{k-2} \
             - 2x U_{k+1} U_{k-1} for all k",
        ),
        ..q_cites(29, "q_12(k-4), q_7(k-4)")
    },
    q_cites(30, "q_7(k+1)"),
    q_cites(31, "q_2(k+1)"),
    q_cites(32, "q_20(k+2)"),
    q_cites(33, "q_7(k-2)"),
    q(34),
    q_cites(35, "q_34(k-2)"),
    QIdentity {
        note: Some(
            "T(4,x) read as T_4(x); still mismatches as stated: corrected \
             reading replaces -72x^6+(16k+90)x^4 by -64x^6+(16k+80)x^4 in \
             the U_{2k} coefficient, and then verifies for all k",
        ),
        ..q(36)
    },
    QIdentity {
        note: Some("summand factor written 'U_{i-1}i(x)', read as U_{i-1}(x)"),
        ..q_cites(37, "q_36(k-2)")
    },
    QIdentity {
        min_k: 2,
        note: Some(
            "fails at k = 1, where the cited sums are empty; holds for every \
             k >= 2, so the asserted range starts there",
        ),
        ..q_cites(38, "q_24(k-1), q_23(k-3)")
    },
    q_cites(39, "q_12(k-2), q_7(k-2), q_7(k-1)"),
    QIdentity {
        note: Some("first-kind factors written T(n,x) style, read as T_4(x), T_2(x), T_6(x)"),
        ..q(40)
    },
    q_cites(41, "q_40(k)"),
];

pub fn registry() -> &'static [QIdentity; 42] {
    &REGISTRY
}

/// Chebyshev index list of the summand for one value of `i`, or `None` for
/// the ambiguous entry.
fn summand_indices(id: u8, k: i64, i: i64) -> Option<Vec<i64>> {
    let f = match id {
        0 => vec![i],
        1 => vec![i, i],
        2 => vec![i, k - i],
        3 => vec![i - 1, i],
        4 => vec![i - 1, k - i],
        5 => vec![k - 1 - i, i - 1],
        6 => vec![k - 1 - i, k - i],
        7 => vec![k - i, i, i - 1],
        8 => vec![i, k - i - 2, i - 1],
        9 => vec![k - i, k - i - 1, i - 1],
        10 => vec![k - 1 - i, k - i, i],
        11 => vec![k - 1 - i, i - 1, i],
        12 => vec![k - i, k - i, i],
        13 => vec![i, i, k - i],
        14 => vec![i - 1, i - 1, k - i - 1],
        15 => vec![i - 1, k - i - 1, k - i - 1],
        16 => vec![i, i, k - i, k - i],
        17 => vec![i - 1, i - 1, k - 1 - i, k - 1 - i],
        18 => vec![i, i - 1, k - i, k - i - 1],
        19 => vec![i, k - i - 2, i - 1, k - i - 1],
        20 => vec![i, k - i - 2, k - i],
        21 => vec![i, i, k - i - 2, k - i],
        22 => vec![k - 1 - i, k - 1 - i, i + 1, i - 1],
        23 => vec![k - 1 - i, i + 1, k - i],
        24 => vec![k - 1 - i, i + 1, i - 1],
        25 => return None,
        26 => vec![i - 1, i - 1],
        27 => vec![k - i, k - i],
        28 => vec![i - 1, k - i - 2],
        29 => vec![k - 3 - i, i + 1, i - 1],
        30 => vec![i + 1, i, k - i],
        31 => vec![k - i, i + 1],
        32 => vec![k - i, k - i - 2, i + 2],
        33 => vec![i - 1, k - i - 2, k - i - 1],
        34 => vec![i - 1, i + 1],
        35 => vec![k - i, k - i - 2],
        36 => vec![k - i, i, k - i - 2, i + 2],
        37 => vec![i - 1, k - i - 1, k - i - 3, i + 1],
        38 => vec![i - 1, k - i - 2, i + 2],
        39 => vec![i + 1, k - i, k - i - 3],
        40 => vec![k - i, i, i + 1, k - i - 3],
        41 => vec![i - 1, k - i - 1, k - i - 2, i + 2],
        _ => panic!("unknown identity id {id}"),
    };
    Some(f)
}

/// Exact direct summation over i = 1..=k (empty for k <= 0), with negative
/// second-kind indices resolved by the convention. `None` only for q_25.
fn direct_sum(id: u8, k: i64) -> Option<Poly> {
    if id == 25 {
        return None;
    }
    let mut acc = Poly::zero(Var::X);
    for i in 1..=k {
        let indices = summand_indices(id, k, i)?;
        let mut term = Poly::one(Var::X);
        for idx in indices {
            term = &term * &cheb_u(idx);
        }
        acc = &acc + &term;
    }
    Some(acc)
}

/// The summation side of `q_id(k, x)`.
pub fn q_direct(id: u8, k: i64) -> Result<Poly> {
    direct_sum(id, k).ok_or(Error::AmbiguousDefinition(
        25,
        "the summand carries an unbound parameter m",
    ))
}

// -- closed-form building blocks --------------------------------------------

fn cu(i: i64) -> RatFunc {
    RatFunc::from_poly(&cheb_u(i))
}

fn ct(n: i64) -> RatFunc {
    RatFunc::from_poly(&cheb_t(n))
}

fn cz(k: i64) -> RatFunc {
    RatFunc::from_poly(&z_poly(k).expect("Z_k division is exact"))
}

fn czt(k: i64, m: i64) -> RatFunc {
    RatFunc::from_poly(&z_at_t(k, m).expect("Z_k division is exact"))
}

fn cut(i: i64, m: i64) -> RatFunc {
    RatFunc::from_poly(&u_at_t(i, m))
}

/// Polynomial in x from integer coefficients in ascending degree.
fn px(coeffs: &[i64]) -> RatFunc {
    RatFunc::from_poly(&Poly::from_ints(Var::X, coeffs))
}

fn ci(n: i64) -> RatFunc {
    RatFunc::integer(n)
}

/// The cited `q_j(k')`, resolved by its direct sum.
fn rf(id: u8, k: i64) -> RatFunc {
    RatFunc::from_poly(&direct_sum(id, k).expect("cited identities are unambiguous"))
}

/// The stated closed form of `q_id(k, x)`, transcribed as printed, including
/// the entries the audit found to be wrong as stated.
fn closed_form(id: u8, k: i64) -> RatFunc {
    let two_x2m1 = px(&[-2, 0, 2]); // 2(x^2-1)
    let four_x2m1 = px(&[-4, 0, 4]); // 4(x^2-1)
    match id {
        0 => (cu(k + 1) - cu(k) - ci(1)) / px(&[-2, 2]) - ci(1),
        1 => (cu(2) * (cu(2 * k) - ci(1)) - px(&[0, 2]) * cu(2 * k - 1) - ci(2 * k)) / four_x2m1,
        2 => (ci(k) * ct(2) * cu(k) - ci(k + 1) * px(&[0, 1]) * cu(k - 1)) / two_x2m1,
        3 => (px(&[0, 2]) * cu(2 * k) - cu(2 * k - 1) - px(&[0, 2 * (k + 1)])) / four_x2m1,
        4 => (ci(k) * px(&[0, 1]) * cu(k) - ci(k + 1) * cu(k - 1)) / two_x2m1,
        5 => rf(4, k - 1),
        6 => rf(3, k - 1),
        7 => {
            let first =
                ci(2) * ct(k) * cu(2) * czt(k, 3) + ci(2) * (ci(1) - ci(2) * ct(k + 2)) * cz(k - 1);
            let second =
                ci(4) * ct(k + 2) * cu(k - 1) + cu(k - 1) * (czt(k - 1, 3) - czt(k + 1, 3) + ci(1));
            (first - second) / px(&[8, 0, -8])
        }
        8 => rf(7, k - 2) - (px(&[0, 1]) * cu(2 * k) - cu(2 * k - 1) - px(&[0, 1])) / two_x2m1,
        9 => rf(7, k - 1),
        10 => rf(7, k) - (px(&[0, 1]) * cu(2 * k) - cu(2 * k - 1) - px(&[0, 1])) / two_x2m1,
        11 => rf(7, k - 1),
        12 => {
            ((ci(2) + ct(2 * k + 4)) * cz(k + 2) - ct(2 * k + 4) * cu(2) * czt(k + 2, 3))
                / px(&[4, 0, -4])
                - cu(k) * cu(k)
                + cu(2 * k + 3) * (czt(k + 3, 3) - czt(k + 1, 3) + cz(k + 1) - cz(k + 3))
                    / px(&[8, 0, -8])
        }
        13 => {
            rf(12, k)
                + (ct(2) * cu(2 * k) - px(&[0, 1]) * cu(2 * k - 1) - px(&[-2, 0, 2]) * cu(k)
                    - ci(1))
                    / two_x2m1
        }
        14 => rf(12, k - 2) + (ct(2) * cu(2 * k) - ct(3) * cu(2 * k - 1) - ci(1)) / two_x2m1,
        15 => rf(14, k),
        16 => {
            let den = px(&[0, 16, 0, -32, 0, 16]); // 16x(x^2-1)^2
            px(&[0, 1])
                * (px(&[2 * k, 0, -8 * (2 * k + 1), 0, 16 * k]) * cu(2 * k) + px(&[4 * k, 0, 8]))
                / den.clone()
                - px(&[1, 0, -6 * (k + 1), 0, 8 * k]) * cu(2 * k - 1) / den
        }
        17 => rf(16, k - 2) + (ct(2) * cu(2 * k) - ct(3) * cu(2 * k - 1) - ci(1)) / two_x2m1,
        18 => {
            let den16 = px(&[16, 0, -32, 0, 16]); // 16(x^2-1)^2
            let den4 = px(&[4, 0, -8, 0, 4]); // 4(x^2-1)^2
            (px(&[3 - 2 * k, 0, 4 * (k - 1)]) * cu(2 * k)
                - px(&[0, 2 * k - 1]) * cu(2 * k - 1)
                + px(&[0, 0, 4 * (k + 1)]))
                / den16.clone()
                - (czt(k + 1, 2) - czt(k - 1, 2)) / den4.clone()
                + ct(2 * k) * (czt(k + 1, 4) - czt(k - 1, 4)) / den16
                + (ci(1) - ct(2) * ct(2)) * ct(2) * cut(k - 1, 2) * czt(k, 4) / den4
        }
        19 => rf(18, k - 1),
        20 => {
            cu(2) * rf(12, k - 2) - px(&[0, 2]) * rf(7, k - 2)
                + (px(&[0, 1]) * ct(3) * cu(2 * k)
                    - px(&[0, 1]) * ct(4) * cu(2 * k - 1)
                    - px(&[-1, 0, 1]) * cu(k)
                    - px(&[0, 0, 1]))
                    / px(&[-1, 0, 1])
        }
        21 => {
            let den = px(&[0, 16, 0, -32, 0, 16]);
            px(&[1, 0, -2 * (k + 8), 0, 16]) * cu(2 * k - 1) / den.clone()
                + px(&[0, 1])
                    * (px(&[-2 * k, 0, 4 * (k + 3), 0, -16]) * cu(2 * k)
                        + ci(2 * (2 * k + 1)) * ct(2)
                        + ci(2) * ct(4))
                    / den
        }
        22 => {
            rf(21, k)
                + (px(&[0, 0, 2]) * cu(2 * k) - px(&[0, 2]) * cu(2 * k - 1) + ct(2) - cu(2))
                    / two_x2m1
        }
        23 => {
            rf(7, k + 1)
                + ((ct(2) + px(&[0, 2])) * cu(2 * k - 1) - (ct(3) + px(&[0, 0, 2])) * cu(2 * k)
                    + px(&[0, 1, 2]))
                    / two_x2m1
        }
        24 => {
            rf(12, k - 2) - px(&[0, 2]) * rf(7, k - 2)
                + (px(&[0, -3, 0, 16, 0, -16]) * cu(2 * k - 1)
                    + px(&[1, 0, -6, 0, 8]) * cu(2 * k)
                    - cu(2))
                    / two_x2m1
        }
        25 => {
            rf(18, k + 1)
                - px(&[0, 1]) * (px(&[0, 1]) * cu(2 * k) - cu(2 * k - 1) - px(&[0, 1]))
                    / px(&[-1, 0, 1])
        }
        26 => rf(1, k - 1) + ci(1),
        27 => rf(1, k - 1) + ci(1),
        28 => rf(4, k - 2) - cu(k - 1),
        29 => {
            cu(2) * rf(12, k - 4) - px(&[0, 2]) * rf(7, k - 4)
                - px(&[0, 1]) * px(&[3, -1, -42, 0, 168, 0, -64, 0, 128]) * cu(2 * k - 1)
                    / px(&[-1, 0, 1])
                + px(&[0, 1])
                    * (px(&[-1, 11, 2, -60, 0, 112, 0, -64]) * cu(2 * k) + px(&[0, 1, 2]) - cu(2))
                    / px(&[-1, 0, 1])
        }
        30 => rf(7, k + 1) - px(&[0, 2]) * cu(k),
        31 => rf(2, k + 1) - px(&[0, 2]) * cu(k),
        32 => {
            rf(20, k + 2)
                + ((px(&[0, 0, 2]) + px(&[0, 1]) * cu(2)) * cu(2 * k - 1)
                    + (px(&[0, 2, 0, -4]) - cu(2)) * cu(2 * k)
                    - (px(&[0, 2]) + cu(2)) * (px(&[0, 0, 2]) - cu(2)))
                    / two_x2m1
        }
        33 => rf(7, k - 2),
        34 => {
            (cu(2) * cu(2 * k) - px(&[0, 2]) * cu(2 * k - 1) - ci(2 * (k + 1)) * ct(2) - ci(1))
                / four_x2m1
        }
        35 => rf(34, k - 2) - ci(1),
        36 => {
            let den = px(&[0, 16, 0, -32, 0, 16]);
            px(&[-1, 0, 6 * (k + 5), 0, -8 * (k + 11), 0, 64]) * cu(2 * k - 1) / den.clone()
                + px(&[0, 1])
                    * (px(&[2 * k, 0, -(16 * k + 24), 0, 16 * k + 90, 0, -72]) * cu(2 * k)
                        + ci(2 * (k + 1)) * ct(4)
                        + px(&[2 * k, 0, 4])
                        + ci(2) * ct(6))
                    / den
        }
        37 => {
            rf(36, k - 2)
                - cu(2) * (ct(5) * cu(2 * k - 1) - ct(4) * cu(2 * k) + cu(2) - px(&[0, 0, 2]))
                    / two_x2m1
        }
        38 => {
            px(&[0, 2]) * rf(24, k - 1) - rf(23, k - 3)
                + px(&[0, -2, -6, 36, 8, -96, 0, 64]) * cu(2 * k - 1) / two_x2m1.clone()
                + (px(&[0, 6, -10, -8, 40, 0, -32]) * cu(2 * k) + px(&[0, 0, 2])
                    - px(&[0, 1]) * cu(2)
                    + cu(3)
                    + px(&[0, 1]))
                    / two_x2m1
        }
        39 => {
            px(&[0, 2]) * cu(2) * rf(12, k - 2) - px(&[0, 0, 4]) * rf(7, k - 2) - rf(7, k - 1)
                + (px(&[0, 1, -2, -12, 0, 16]) * cu(2 * k)
                    + px(&[1, -2, -6, 4, 32, 0, -32]) * cu(2 * k - 1))
                    / two_x2m1.clone()
                + (px(&[0, 4, 8, -4, -8]) * cu(k)
                    + px(&[0, -4, 0, 4]) * cu(k - 1)
                    + px(&[1, 2]) * cu(3)
                    - px(&[0, 3, 2]) * cu(2))
                    / two_x2m1
        }
        40 => {
            let den = px(&[0, 16, 0, -32, 0, 16]); // 16x^5 - 32x^3 + 16x
            px(&[-1, 0, -2 * (k - 13), 0, -88, 0, 64]) * cu(2 * k - 1) / den.clone()
                + px(&[0, 1])
                    * (px(&[-2 * k, 0, 4 * k - 20, 0, 80, 0, -64]) * cu(2 * k)
                        + ci(2 * (k + 1)) * ct(4)
                        + ci(2 * k) * ct(2)
                        + ci(2) * ct(6))
                    / den
        }
        41 => {
            rf(40, k)
                + px(&[0, 1])
                    * (px(&[0, -1, 0, 4]) * cu(2 * k) - cu(2) * cu(2 * k - 1) + px(&[0, 1]) * cu(2)
                        - cu(3)
                        - px(&[0, 2]))
                    / px(&[-1, 0, 1])
        }
        _ => panic!("unknown identity id {id}"),
    }
}

/// The stated closed form of `q_id(k, x)` as a reduced rational function.
/// For q_25 the closed side is well-defined (it is m-free) even though the
/// summation side is not.
pub fn q_closed(id: u8, k: i64) -> Result<RatFunc> {
    assert!((id as usize) < REGISTRY.len(), "unknown identity id {id}");
    Ok(closed_form(id, k))
}

// -- verification ------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QStatus {
    Verified,
    Mismatched,
    Ambiguous,
}

impl QStatus {
    pub fn name(self) -> &'static str {
        match self {
            QStatus::Verified => "verified",
            QStatus::Mismatched => "mismatched",
            QStatus::Ambiguous => "ambiguous",
        }
    }
}

/// First counterexample: the exact polynomials of both sides at the failing k.
#[derive(Clone, Debug)]
pub struct QWitness {
    pub k: i64,
    pub direct: Poly,
    pub closed: RatFunc,
}

#[derive(Clone, Debug)]
pub struct QEntry {
    pub id: u8,
    pub k_lo: i64,
    pub k_hi: i64,
    pub status: QStatus,
    pub witness: Option<QWitness>,
    pub note: Option<&'static str>,
    /// Random evaluation points, when the size fallback was taken.
    pub sample_points: Vec<Rational>,
}

#[derive(Clone, Debug)]
pub struct QReport {
    pub entries: Vec<QEntry>,
}

/// Above this many coefficient-by-coefficient products the harness falls back
/// from the cross-multiplied polynomial identity to random rational
/// evaluation. Desk-scale k never gets near it.
const SYMBOLIC_SIZE_LIMIT: usize = 1_000_000;

fn cross_multiplied_equal(direct: &Poly, closed: &RatFunc) -> bool {
    let lhs = &crate::bipoly::BiPoly::from_poly(direct) * closed.den();
    lhs == *closed.num()
}

fn estimated_size(direct: &Poly, closed: &RatFunc) -> usize {
    (direct.coeffs().len() + 1) * closed.den().num_terms() + closed.num().num_terms()
}

/// Compare the two sides, symbolically when small enough, otherwise at
/// `samples` random rational points avoiding 0, +-1 and denominator roots.
fn sides_equal(
    direct: &Poly,
    closed: &RatFunc,
    size_limit: usize,
    samples: usize,
    rng: &mut ChaCha8Rng,
    used_points: &mut Vec<Rational>,
) -> bool {
    if estimated_size(direct, closed) <= size_limit {
        return cross_multiplied_equal(direct, closed);
    }
    let zero_t = Rational::zero();
    for _ in 0..samples {
        let point = loop {
            let p = ratio(rng.gen_range(-50i64..=50), rng.gen_range(1i64..=50));
            if p.is_zero() || p == ratio(1, 1) || p == ratio(-1, 1) {
                continue;
            }
            if closed.den().eval(&p, &zero_t).is_zero() {
                continue;
            }
            break p;
        };
        let lhs = direct.eval(&point);
        let rhs = closed
            .eval(&point, &zero_t)
            .expect("denominator checked nonzero");
        used_points.push(point);
        if lhs != rhs {
            return false;
        }
    }
    true
}

fn verify_one(id: u8, k_max: i64, rng: &mut ChaCha8Rng, size_limit: usize) -> QEntry {
    let info = &REGISTRY[id as usize];
    let mut sample_points = Vec::new();
    if info.ambiguous {
        // Nothing to compare; confirm the closed side still evaluates.
        for k in 1..=k_max {
            let _ = closed_form(id, k);
        }
        return QEntry {
            id,
            k_lo: 1,
            k_hi: k_max,
            status: QStatus::Ambiguous,
            witness: None,
            note: info.note,
            sample_points,
        };
    }
    let k_lo = info.min_k;
    for k in k_lo..=k_max {
        let direct = direct_sum(id, k).expect("unambiguous");
        let closed = closed_form(id, k);
        if !sides_equal(&direct, &closed, size_limit, 8, rng, &mut sample_points) {
            return QEntry {
                id,
                k_lo,
                k_hi: k_max,
                status: QStatus::Mismatched,
                witness: Some(QWitness { k, direct, closed }),
                note: info.note,
                sample_points,
            };
        }
    }
    QEntry {
        id,
        k_lo,
        k_hi: k_max,
        status: QStatus::Verified,
        witness: None,
        note: info.note,
        sample_points,
    }
}

/// Verify one identity for k in `[min_k, k_max]`.
pub fn verify_q(id: u8, k_max: i64, seed: u64) -> QEntry {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    verify_one(id, k_max, &mut rng, SYMBOLIC_SIZE_LIMIT)
}

/// Verify the whole catalog; entries are ordered by id.
pub fn verify_all(k_max: i64, seed: u64) -> QReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries = (0..42u8)
        .map(|id| verify_one(id, k_max, &mut rng, SYMBOLIC_SIZE_LIMIT))
        .collect();
    QReport { entries }
}

impl QEntry {
    pub fn witness_text(&self) -> String {
        match &self.witness {
            Some(w) => format!("k={}: direct={}; closed={}", w.k, w.direct, w.closed),
            None => String::new(),
        }
    }
}

impl QReport {
    /// Ids that mismatch without a recorded defect note; these are the
    /// failures nothing explains.
    pub fn unexplained_mismatches(&self) -> Vec<u8> {
        self.entries
            .iter()
            .filter(|e| e.status == QStatus::Mismatched && e.note.is_none())
            .map(|e| e.id)
            .collect()
    }

    pub fn has_failures(&self) -> bool {
        self.entries.iter().any(|e| e.status == QStatus::Mismatched)
    }

    pub fn csv(&self) -> String {
        let mut out = csv_row(&["id", "k_range", "status", "witness", "note", "samples"]);
        for e in &self.entries {
            let samples = e
                .sample_points
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            out.push_str(&csv_row(&[
                &format!("q_{}", e.id),
                &format!("{}..{}", e.k_lo, e.k_hi),
                e.status.name(),
                &e.witness_text(),
                e.note.unwrap_or(""),
                &samples,
            ]));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xp(coeffs: &[i64]) -> Poly {
        Poly::from_ints(Var::X, coeffs)
    }

    #[test]
    fn direct_examples() {
        // q_0, k=2: U_1 + U_2
        assert_eq!(q_direct(0, 2).unwrap(), xp(&[-1, 2, 4]));
        // q_2, k=1: U_1 U_0
        assert_eq!(q_direct(2, 1).unwrap(), xp(&[0, 2]));
        // q_4, k=1: U_0 U_0
        assert_eq!(q_direct(4, 1).unwrap(), xp(&[1]));
    }

    #[test]
    fn closed_examples() {
        assert_eq!(q_closed(0, 2).unwrap(), RatFunc::from_poly(&xp(&[-1, 2, 4])));
        assert_eq!(q_closed(2, 1).unwrap(), RatFunc::from_poly(&xp(&[0, 2])));
        assert_eq!(q_closed(4, 1).unwrap(), RatFunc::from_poly(&xp(&[1])));
    }

    #[test]
    fn q3_both_sides_at_k2() {
        // direct: U_0 U_1 + U_1 U_2 = 8x^3; closed: (2x U_4 - U_3 - 6x)/(4(x^2-1))
        let direct = q_direct(3, 2).unwrap();
        assert_eq!(direct, xp(&[0, 0, 0, 8]));
        assert_eq!(q_closed(3, 2).unwrap(), RatFunc::from_poly(&direct));
    }

    #[test]
    fn ambiguous_direct_rejected() {
        assert!(matches!(
            q_direct(25, 3),
            Err(Error::AmbiguousDefinition(25, _))
        ));
        // the closed side is m-free and evaluates
        assert!(!q_closed(25, 3).unwrap().is_zero());
    }

    #[test]
    fn verify_q0_through_k10() {
        let entry = verify_q(0, 10, 1);
        assert_eq!(entry.status, QStatus::Verified);
        assert!(entry.witness.is_none());
        assert!(entry.sample_points.is_empty());
    }

    #[test]
    fn cross_reference_relations() {
        // Pure reindexings: both sides by direct summation.
        let pure: &[(u8, u8, i64)] = &[
            (5, 4, -1),
            (6, 3, -1),
            (9, 7, -1),
            (11, 7, -1),
            (15, 14, 0),
            (19, 18, -1),
            (33, 7, -2),
        ];
        for &(a, b, shift) in pure {
            for k in 1..=9i64 {
                assert_eq!(
                    q_direct(a, k).unwrap(),
                    direct_sum(b, k + shift).unwrap(),
                    "q_{a}(k) vs q_{b}(k{shift:+}) at k={k}"
                );
            }
        }
        let one = Poly::one(Var::X);
        for k in 1..=9i64 {
            // q_26 = q_1(k-1) + 1 = q_27, all by direct sums
            assert_eq!(
                q_direct(26, k).unwrap(),
                &direct_sum(1, k - 1).unwrap() + &one
            );
            assert_eq!(q_direct(26, k).unwrap(), q_direct(27, k).unwrap());
            // q_28 = q_4(k-2) - U_{k-1}
            assert_eq!(
                q_direct(28, k).unwrap(),
                &direct_sum(4, k - 2).unwrap() - &cheb_u(k - 1)
            );
            // q_35 = q_34(k-2) - 1
            assert_eq!(
                q_direct(35, k).unwrap(),
                &direct_sum(34, k - 2).unwrap() - &one
            );
            // q_8 = q_7(k-2) - (x U_2k - U_{2k-1} - x)/(2(x^2-1)), and
            // q_10 = q_7(k) - the same correction
            let corr = (px(&[0, 1]) * cu(2 * k) - cu(2 * k - 1) - px(&[0, 1])) / px(&[-2, 0, 2]);
            assert_eq!(
                RatFunc::from_poly(&q_direct(8, k).unwrap()),
                RatFunc::from_poly(&direct_sum(7, k - 2).unwrap()) - corr.clone()
            );
            assert_eq!(
                RatFunc::from_poly(&q_direct(10, k).unwrap()),
                RatFunc::from_poly(&direct_sum(7, k).unwrap()) - corr
            );
        }
    }

    #[test]
    fn q26_q27_same_sum_reindexed() {
        for k in 1..=12i64 {
            assert_eq!(q_direct(26, k).unwrap(), q_direct(27, k).unwrap());
        }
    }

    /// The corrected readings recorded in the registry notes hold; the stated
    /// forms they amend are the ones the report witnesses against.
    #[test]
    fn corrected_readings_verify() {
        for k in 1..=10i64 {
            // q_7 with the sign of the U_{k-1}(...) term flipped
            let first = ci(2) * ct(k) * cu(2) * czt(k, 3)
                + ci(2) * (ci(1) - ci(2) * ct(k + 2)) * cz(k - 1);
            let fixed7 = (first
                - ci(4) * ct(k + 2) * cu(k - 1)
                + cu(k - 1) * (czt(k - 1, 3) - czt(k + 1, 3) + ci(1)))
                / px(&[8, 0, -8]);
            assert!(
                cross_multiplied_equal(&direct_sum(7, k).unwrap(), &fixed7),
                "corrected q_7 at k={k}"
            );
            // q_24 with the U_2 factor restored
            let fixed24 = cu(2) * rf(12, k - 2) - px(&[0, 2]) * rf(7, k - 2)
                + (px(&[0, -3, 0, 16, 0, -16]) * cu(2 * k - 1)
                    + px(&[1, 0, -6, 0, 8]) * cu(2 * k)
                    - cu(2))
                    / px(&[-2, 0, 2]);
            assert!(
                cross_multiplied_equal(&direct_sum(24, k).unwrap(), &fixed24),
                "corrected q_24 at k={k}"
            );
            // q_29 via its q_24 relation, valid for all k
            let rel29 = &(&direct_sum(24, k - 2).unwrap()
                - &(&cheb_u(k) * &cheb_u(k - 2)))
                - &(&Poly::from_ints(Var::X, &[0, 2]) * &(&cheb_u(k + 1) * &cheb_u(k - 1)));
            assert_eq!(direct_sum(29, k).unwrap(), rel29, "q_29 relation at k={k}");
            // q_29 coefficient form, valid from k = 3
            if k >= 3 {
                let fixed29 = cu(2) * rf(12, k - 4) - px(&[0, 2]) * rf(7, k - 4)
                    - px(&[0, 1]) * px(&[3, -1, -42, 0, 168, 0, -256, 0, 128]) * cu(2 * k - 1)
                        / px(&[-1, 0, 1])
                    - px(&[0, 1])
                        * (px(&[-1, 11, 2, -60, 0, 112, 0, -64]) * cu(2 * k) + px(&[0, 1, 2])
                            - cu(2))
                        / px(&[-1, 0, 1]);
                assert!(
                    cross_multiplied_equal(&direct_sum(29, k).unwrap(), &fixed29),
                    "corrected q_29 at k={k}"
                );
            }
            // q_36 with the amended U_{2k} coefficient
            let den = px(&[0, 16, 0, -32, 0, 16]);
            let fixed36 = px(&[-1, 0, 6 * (k + 5), 0, -8 * (k + 11), 0, 64]) * cu(2 * k - 1)
                / den.clone()
                + px(&[0, 1])
                    * (px(&[2 * k, 0, -(16 * k + 24), 0, 16 * k + 80, 0, -64]) * cu(2 * k)
                        + ci(2 * (k + 1)) * ct(4)
                        + px(&[2 * k, 0, 4])
                        + ci(2) * ct(6))
                    / den;
            assert!(
                cross_multiplied_equal(&direct_sum(36, k).unwrap(), &fixed36),
                "corrected q_36 at k={k}"
            );
        }
    }

    #[test]
    fn sampling_fallback_agrees() {
        // Force the sampling path with a zero size limit; a correct identity
        // passes, a broken one is caught at some sampled point.
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let good = verify_one(0, 6, &mut rng, 0);
        assert_eq!(good.status, QStatus::Verified);
        assert!(!good.sample_points.is_empty());
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let bad = verify_one(7, 6, &mut rng, 0);
        assert_eq!(bad.status, QStatus::Mismatched);
    }

    #[test]
    fn registry_shape() {
        let reg = registry();
        assert_eq!(reg.len(), 42);
        for (i, e) in reg.iter().enumerate() {
            assert_eq!(e.id as usize, i);
        }
        assert!(reg[25].ambiguous);
        assert_eq!(reg[38].min_k, 2);
    }
}
