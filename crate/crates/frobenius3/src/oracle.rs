//! Brute-force ground truth used to cross-validate every formula.
//!
//! Everything here is deliberately naive: a forward dynamic-programming
//! membership table plus linear scans. No closed form from the other
//! modules is reused, so agreement between the two sides is evidence, not
//! tautology.

use crate::error::{Error, Result};
use crate::johnson::DiagonalTriple;
use crate::semigroup::{GapSet, Generators};

/// Hard cap on table length (entries); larger requests are refused rather
/// than allocated blindly.
const MAX_TABLE_LEN: usize = 1 << 27;

/// Membership table: `is_representable(n)` answers whether n is a
/// non-negative integer combination of the generators, for 0 <= n <= bound.
#[derive(Debug, Clone)]
pub struct RepresentabilityTable {
    bound: i64,
    bits: Vec<bool>,
}

impl RepresentabilityTable {
    pub fn bound(&self) -> i64 {
        self.bound
    }

    /// Membership for -inf < n <= bound. Negative integers are never
    /// representable; asking beyond the bound panics, because the table
    /// holds no information there.
    pub fn is_representable(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        assert!(n <= self.bound, "query {n} beyond table bound {}", self.bound);
        self.bits[n as usize]
    }

    /// The gaps recorded in this table: positive unmarked integers.
    pub fn gaps(&self) -> GapSet {
        GapSet::from_elements(
            (1..=self.bound).filter(|&n| !self.bits[n as usize]),
        )
    }

    /// True iff the top `window` positions are all marked. Once a run of
    /// d_1 consecutive representable integers exists, everything above it
    /// is representable too (keep adding d_1), so the table is complete.
    fn tail_certified(&self, window: i64) -> bool {
        debug_assert!(window >= 1 && window <= self.bound);
        ((self.bound - window + 1)..=self.bound).all(|n| self.bits[n as usize])
    }
}

/// Forward DP over a raw generator list (need not be coprime): mark 0, then
/// for each generator sweep upward marking n when n - d is marked.
pub(crate) fn build_table_raw(ds: &[i64], bound: i64) -> Result<RepresentabilityTable> {
    assert!(!ds.is_empty() && ds.iter().all(|&d| d > 0));
    assert!(bound >= 0, "table bound must be non-negative");
    let len = bound as usize + 1;
    if len > MAX_TABLE_LEN {
        return Err(Error::Overflow(format!(
            "oracle table of {len} entries exceeds the cap of {MAX_TABLE_LEN}"
        )));
    }
    let mut bits = vec![false; len];
    bits[0] = true;
    for &d in ds {
        let d = d as usize;
        for n in d..len {
            if bits[n - d] {
                bits[n] = true;
            }
        }
    }
    Ok(RepresentabilityTable { bound, bits })
}

/// DP table for a validated tuple up to an explicit bound.
pub fn build_table(gens: &Generators, bound: i64) -> Result<RepresentabilityTable> {
    build_table_raw(gens.as_slice(), bound)
}

/// DP table guaranteed to contain every gap: starts at bound d_1*d_2 and
/// doubles until the top d_1 positions are all representable, which
/// certifies completeness. The starting bound alone is not always enough;
/// (6,10,59) has its certificate window clean only from bound 120.
pub fn certified_table(gens: &Generators) -> Result<RepresentabilityTable> {
    assert!(gens.m() >= 2, "a single generator leaves infinitely many gaps");
    let d1 = gens.d(1);
    let mut bound = d1
        .checked_mul(gens.d(2))
        .ok_or_else(|| Error::Overflow("initial oracle bound".into()))?;
    loop {
        let table = build_table(gens, bound)?;
        if table.tail_certified(d1) {
            return Ok(table);
        }
        bound = bound
            .checked_mul(2)
            .ok_or_else(|| Error::Overflow("oracle bound doubling".into()))?;
    }
}

/// All gaps of a tuple with m >= 2, by exhaustion.
pub fn gaps_bruteforce(gens: &Generators) -> GapSet {
    certified_table(gens)
        .expect("oracle table within memory cap")
        .gaps()
}

/// Largest gap, by exhaustion. Defined for every valid tuple with m >= 2
/// (1 is always a gap since d_1 >= 2).
pub fn frobenius_bruteforce(gens: &Generators) -> i64 {
    let table = certified_table(gens).expect("oracle table within memory cap");
    (1..=table.bound())
        .rev()
        .find(|&n| !table.is_representable(n))
        .expect("1 is a gap of every valid tuple")
}

/// Number of gaps, by exhaustion.
pub fn genus_bruteforce(gens: &Generators) -> i64 {
    let table = certified_table(gens).expect("oracle table within memory cap");
    (1..=table.bound())
        .filter(|&n| !table.is_representable(n))
        .count() as i64
}

/// Diagonal of the matrix of minimal relations by direct search: for each
/// axis k, the least v >= 2 such that v*d_k is a combination of the other
/// two generators. Uses a DP table over the complementary pair, so it
/// shares no code path with the formula-side modular scan.
///
/// The scan is bounded: v = d_j always works (v*d_k = d_k copies of d_j),
/// so a table up to min(d_j, d_l) * d_k must contain the answer.
pub fn johnson_direct(gens: &Generators) -> DiagonalTriple {
    assert_eq!(gens.m(), 3, "minimal relations are for triples");
    let mut diag = [0i64; 3];
    for k in 1..=3 {
        let (dj, dl) = gens.other_pair(k);
        let dk = gens.d(k);
        let bound = dj.min(dl) * dk;
        let table =
            build_table_raw(&[dj, dl], bound).expect("oracle table within memory cap");
        let v = (2..=dj.min(dl))
            .find(|&v| table.is_representable(v * dk))
            .expect("v = min(d_j, d_l) is always representable");
        diag[k - 1] = v;
    }
    DiagonalTriple {
        a11: diag[0],
        a22: diag[1],
        a33: diag[2],
    }
}
