//! Ground-truth enumeration of the adjacency statistics on words over [k]:
//! a brute-force oracle and a transfer-matrix dynamic program that must agree.
//!
//! For a word `w` of length `n`, the linear statistic counts positions
//! `1 <= i <= n-1` with `|w_{i+1} - w_i| <= 1`; the cyclic statistic also
//! counts the wrap-around pair `(w_n, w_1)`. Length-0 words score 0 for both
//! kinds; the length-1 word scores 0 linearly and 1 cyclically (a letter is
//! within distance 1 of itself).

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Poly, Var};
use crate::rational::Rational;

/// Word over the alphabet `{1, ..., k}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Word {
    letters: Vec<u32>,
    alphabet: u32,
}

impl Word {
    pub fn new(letters: Vec<u32>, alphabet: u32) -> Word {
        assert!(alphabet >= 1);
        assert!(
            letters.iter().all(|&l| (1..=alphabet).contains(&l)),
            "letter out of range for alphabet {alphabet}"
        );
        Word { letters, alphabet }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StatKind {
    Linear,
    Cyclic,
}

impl StatKind {
    pub fn name(self) -> &'static str {
        match self {
            StatKind::Linear => "linear",
            StatKind::Cyclic => "cyclic",
        }
    }
}

fn close(a: u32, b: u32) -> bool {
    a.abs_diff(b) <= 1
}

fn stat_slice(w: &[u32], kind: StatKind) -> usize {
    let mut count = w.windows(2).filter(|p| close(p[0], p[1])).count();
    if kind == StatKind::Cyclic && !w.is_empty() && close(w[w.len() - 1], w[0]) {
        count += 1;
    }
    count
}

/// Number of (cyclically) adjacent positions whose letters differ by at most 1.
pub fn stat(word: &Word, kind: StatKind) -> usize {
    stat_slice(&word.letters, kind)
}

/// Exact histogram of a statistic over all `k^n` words.
///
/// `counts[m]` is the number of words with statistic value `m`. Linear
/// distributions have support in `0..=n-1` (and the single value 0 for
/// `n <= 1`); cyclic ones in `0..=n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TDist {
    n: usize,
    k: u32,
    kind: StatKind,
    counts: Vec<BigUint>,
}

impl TDist {
    fn new(n: usize, k: u32, kind: StatKind, mut counts: Vec<BigUint>) -> TDist {
        let len = match kind {
            StatKind::Linear => n.max(1),
            StatKind::Cyclic => n + 1,
        };
        counts.resize(len, BigUint::zero());
        TDist { n, k, kind, counts }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn kind(&self) -> StatKind {
        self.kind
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn count(&self, m: usize) -> BigUint {
        self.counts.get(m).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// The distribution as a polynomial in `t`.
    pub fn to_poly(&self) -> Poly {
        Poly::new(
            Var::T,
            self.counts
                .iter()
                .map(|c| Rational::from_integer(c.clone().into()))
                .collect(),
        )
    }
}

impl fmt::Display for TDist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// Default cap on brute-force enumeration, in words visited.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// Enumerate all `k^n` words (odometer-style, no recursion) and histogram the
/// statistic. Refuses to start if `k^n` exceeds the budget.
pub fn brute_distribution(n: usize, k: u32, kind: StatKind, budget: u128) -> Result<TDist> {
    match (k as u128).checked_pow(n as u32) {
        Some(words) if words <= budget && words <= u64::MAX as u128 => {}
        words => {
            return Err(Error::BudgetExceeded {
                words: words.unwrap_or(u128::MAX),
                budget,
            })
        }
    }
    // budget <= 1e8 words, so plain u64 bins cannot overflow
    let mut counts = vec![0u64; n + 2];
    let done = |counts: Vec<u64>| {
        Ok(TDist::new(
            n,
            k,
            kind,
            counts.into_iter().map(BigUint::from).collect(),
        ))
    };
    if n == 0 {
        counts[0] = 1;
        return done(counts);
    }
    let mut letters = vec![1u32; n];
    loop {
        counts[stat_slice(&letters, kind)] += 1;
        // odometer increment
        let mut pos = n;
        loop {
            if pos == 0 {
                return done(counts);
            }
            pos -= 1;
            if letters[pos] < k {
                letters[pos] += 1;
                break;
            }
            letters[pos] = 1;
        }
    }
}

type IntPoly = Vec<BigUint>;

fn shifted_add(acc: &mut IntPoly, p: &IntPoly, shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, BigUint::zero());
    }
    for (i, c) in p.iter().enumerate() {
        acc[i + shift] += c;
    }
}

/// Transfer-matrix dynamic program; exact big-integer coefficients, identical
/// to the brute-force histogram. Linear cost `O(n k^2)` polynomial updates;
/// the cyclic variant additionally tracks the first letter to apply the
/// closing weight.
pub fn dp_distribution(n: usize, k: u32, kind: StatKind) -> TDist {
    assert!(k >= 1);
    let kk = k as usize;
    if n == 0 {
        return TDist::new(n, k, kind, vec![BigUint::one()]);
    }
    match kind {
        StatKind::Linear => {
            // state[j] = distribution over words ending in letter j+1
            let mut state: Vec<IntPoly> = vec![vec![BigUint::one()]; kk];
            for _ in 1..n {
                state = advance(&state, k);
            }
            let mut total: IntPoly = vec![];
            for p in &state {
                shifted_add(&mut total, p, 0);
            }
            TDist::new(n, k, kind, total)
        }
        StatKind::Cyclic => {
            let mut total: IntPoly = vec![];
            for first in 1..=k {
                let mut state: Vec<IntPoly> = vec![vec![]; kk];
                state[(first - 1) as usize] = vec![BigUint::one()];
                for _ in 1..n {
                    state = advance(&state, k);
                }
                for (j, p) in state.iter().enumerate() {
                    let closing = usize::from(close(j as u32 + 1, first));
                    shifted_add(&mut total, p, closing);
                }
            }
            TDist::new(n, k, kind, total)
        }
    }
}

fn advance(state: &[IntPoly], k: u32) -> Vec<IntPoly> {
    let kk = k as usize;
    let mut next: Vec<IntPoly> = vec![vec![]; kk];
    for (j, slot) in next.iter_mut().enumerate() {
        for (i, p) in state.iter().enumerate() {
            if p.is_empty() {
                continue;
            }
            let weight = usize::from(close(i as u32 + 1, j as u32 + 1));
            shifted_add(slot, p, weight);
        }
    }
    next
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpecialKind {
    Staircase,
    CyclicStaircase,
    Hertzsprung,
    CyclicHertzsprung,
}

impl SpecialKind {
    pub fn name(self) -> &'static str {
        match self {
            SpecialKind::Staircase => "staircase",
            SpecialKind::CyclicStaircase => "cyclic-staircase",
            SpecialKind::Hertzsprung => "hertzsprung",
            SpecialKind::CyclicHertzsprung => "cyclic-hertzsprung",
        }
    }
}

/// Count of the distinguished words of length `n`: staircase words have every
/// adjacent pair close (statistic `n-1`, or the empty word), Hertzsprung
/// words have none (statistic 0); cyclic variants use the cyclic statistic.
pub fn special_count(n: usize, k: u32, which: SpecialKind) -> BigUint {
    match which {
        SpecialKind::Staircase => {
            if n == 0 {
                BigUint::one()
            } else {
                dp_distribution(n, k, StatKind::Linear).count(n - 1)
            }
        }
        SpecialKind::CyclicStaircase => dp_distribution(n, k, StatKind::Cyclic).count(n),
        SpecialKind::Hertzsprung => dp_distribution(n, k, StatKind::Linear).count(0),
        SpecialKind::CyclicHertzsprung => dp_distribution(n, k, StatKind::Cyclic).count(0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dist_counts(d: &TDist) -> Vec<u64> {
        d.counts()
            .iter()
            .map(|c| u64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn six_letter_word_statistics() {
        let w = Word::new(vec![4, 2, 3, 3, 5, 3], 5);
        assert_eq!(stat(&w, StatKind::Linear), 2);
        assert_eq!(stat(&w, StatKind::Cyclic), 3);
    }

    #[test]
    fn equal_letters() {
        let w = Word::new(vec![1, 1], 3);
        assert_eq!(stat(&w, StatKind::Linear), 1);
        assert_eq!(stat(&w, StatKind::Cyclic), 2);
    }

    #[test]
    fn brute_small_cases() {
        let d = brute_distribution(2, 3, StatKind::Linear, DEFAULT_BUDGET).unwrap();
        assert_eq!(dist_counts(&d), vec![2, 7]);
        let d = brute_distribution(2, 3, StatKind::Cyclic, DEFAULT_BUDGET).unwrap();
        assert_eq!(dist_counts(&d), vec![2, 0, 7]);
        let d = brute_distribution(3, 2, StatKind::Linear, DEFAULT_BUDGET).unwrap();
        assert_eq!(dist_counts(&d), vec![0, 0, 8]);
    }

    #[test]
    fn budget_guard() {
        assert!(matches!(
            brute_distribution(40, 10, StatKind::Linear, DEFAULT_BUDGET),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn dp_equals_brute() {
        for k in 2..=6u32 {
            for n in 0..=8usize {
                if (k as u128).pow(n as u32) > 2_000_000 {
                    continue;
                }
                for kind in [StatKind::Linear, StatKind::Cyclic] {
                    let b = brute_distribution(n, k, kind, DEFAULT_BUDGET).unwrap();
                    let d = dp_distribution(n, k, kind);
                    assert_eq!(b, d, "n={n} k={k} kind={kind:?}");
                }
            }
        }
    }

    #[test]
    fn mass_is_k_to_n() {
        let d = dp_distribution(8, 5, StatKind::Linear);
        assert_eq!(d.total(), BigUint::from(390625u64));
        let d = dp_distribution(8, 5, StatKind::Cyclic);
        assert_eq!(d.total(), BigUint::from(390625u64));
    }

    #[test]
    fn k2_degeneracy() {
        // every adjacent pair over [2] is close
        for n in 1..=7usize {
            let lin = dp_distribution(n, 2, StatKind::Linear);
            assert_eq!(lin.count(n - 1), BigUint::from(2u64.pow(n as u32)));
            assert_eq!(lin.total(), lin.count(n - 1));
            let cyc = dp_distribution(n, 2, StatKind::Cyclic);
            assert_eq!(cyc.count(n), BigUint::from(2u64.pow(n as u32)));
        }
    }

    #[test]
    fn cyclic_cube_trace() {
        let d = dp_distribution(3, 3, StatKind::Cyclic);
        assert_eq!(d.count(3), BigUint::from(15u32));
    }

    #[test]
    fn special_counts() {
        assert_eq!(special_count(3, 3, SpecialKind::Staircase), 17u32.into());
        assert_eq!(special_count(2, 4, SpecialKind::Hertzsprung), 6u32.into());
        assert_eq!(
            special_count(3, 3, SpecialKind::CyclicHertzsprung),
            0u32.into()
        );
        assert_eq!(special_count(2, 4, SpecialKind::Staircase), 10u32.into());
        assert_eq!(special_count(1, 5, SpecialKind::CyclicStaircase), 5u32.into());
        assert_eq!(special_count(0, 3, SpecialKind::Staircase), 1u32.into());
    }

    #[test]
    fn linear_support_extremes() {
        // for k >= 4 and n >= 2 both statistic extremes are achievable
        for k in 4..=6u32 {
            for n in 2..=6usize {
                let d = dp_distribution(n, k, StatKind::Linear);
                assert!(d.count(0) > BigUint::zero(), "n={n} k={k} m=0");
                assert!(d.count(n - 1) > BigUint::zero(), "n={n} k={k} m=n-1");
                assert_eq!(d.counts().len(), n);
            }
        }
    }

    proptest! {
        /// The statistic is invariant under the alphabet reflection
        /// i -> k+1-i, letter by letter.
        #[test]
        fn reflection_symmetry(
            letters in proptest::collection::vec(1u32..=6, 0..9),
            kind in prop_oneof![Just(StatKind::Linear), Just(StatKind::Cyclic)]
        ) {
            let k = 6;
            let w = Word::new(letters.clone(), k);
            let reflected = Word::new(letters.iter().map(|&l| k + 1 - l).collect(), k);
            prop_assert_eq!(stat(&w, kind), stat(&reflected, kind));
        }
    }
}
