//! Generator tuples, their validation, and the two-generator closed forms.
//!
//! A numerical semigroup is the set of all non-negative integer combinations
//! of its generators. This module owns the validated [`Generators`] type and
//! everything that is special about one and two generators: the Sylvester
//! closed forms and the matrix representation of the gap set.

use crate::error::{Error, Result};

/// Default magnitude guard: tuples with a generator product above this are
/// rejected so that every downstream intermediate fits exact integer
/// arithmetic (the worst quadratic intermediates are computed in 128 bits).
pub const DEFAULT_MAGNITUDE_GUARD: i64 = 1 << 40;

fn gcd(a: i64, b: i64) -> i64 {
    num_integer::gcd(a, b)
}

/// A validated generator tuple (d_1, ..., d_m) with m in {1, 2, 3}.
///
/// Invariants established by [`Generators::validate`]:
/// strictly increasing, gcd 1 (for m >= 2), d_1 >= max(m, 2), generator
/// product within the magnitude guard, and minimality: no generator is a
/// non-negative combination of the others.
///
/// # Example
///
/// ```
/// use frobenius3::semigroup::Generators;
/// let g = Generators::validate(&[23, 29, 44]).unwrap();
/// assert_eq!(g.m(), 3);
/// assert_eq!(g.d(3), 44);
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Generators {
    d: [i64; 3],
    m: usize,
}

impl Generators {
    /// Validates a raw tuple against the default magnitude guard.
    pub fn validate(raw: &[i64]) -> Result<Self> {
        Self::validate_with_guard(raw, DEFAULT_MAGNITUDE_GUARD)
    }

    /// Validates a raw tuple against an explicit magnitude guard.
    ///
    /// Checks run in a fixed order: length, strict increase, gcd (m >= 2),
    /// multiplicity, magnitude guard, minimality. The first failure wins.
    pub fn validate_with_guard(raw: &[i64], guard: i64) -> Result<Self> {
        let m = raw.len();
        if m == 0 || m > 3 {
            return Err(Error::UnsupportedLength(m));
        }
        for i in 1..m {
            if raw[i] <= raw[i - 1] {
                return Err(Error::NotStrictlyIncreasing {
                    index: i,
                    value: raw[i],
                });
            }
        }
        if m >= 2 {
            let g = raw.iter().copied().fold(0, gcd);
            if g != 1 {
                return Err(Error::GcdNotOne(g));
            }
        }
        let min_d1 = (m as i64).max(2);
        if raw[0] < min_d1 {
            return Err(Error::MultiplicityTooSmall {
                d1: raw[0],
                min: min_d1,
                m,
            });
        }
        let product = raw.iter().map(|&d| d as i128).product::<i128>();
        if product > guard as i128 {
            return Err(Error::Overflow(format!(
                "generator product {product} exceeds the magnitude guard {guard}"
            )));
        }
        // Minimality. For m = 2 it is implied: d_2 = k*d_1 would force
        // gcd = d_1 >= 2. For m = 3 each generator is tested against the
        // other two.
        if m == 3 {
            for i in 0..3 {
                let (a, b) = match i {
                    0 => (raw[1], raw[2]),
                    1 => (raw[0], raw[2]),
                    _ => (raw[0], raw[1]),
                };
                if pair_representable(raw[i], a, b) {
                    return Err(Error::NonMinimal { index: i + 1 });
                }
            }
        }
        let mut d = [0i64; 3];
        d[..m].copy_from_slice(raw);
        Ok(Generators { d, m })
    }

    /// Number of generators.
    pub fn m(&self) -> usize {
        self.m
    }

    /// The generators as a slice of length `m`.
    pub fn as_slice(&self) -> &[i64] {
        &self.d[..self.m]
    }

    /// The k-th generator, 1-based. Panics if `k` is out of range.
    pub fn d(&self, k: usize) -> i64 {
        assert!(k >= 1 && k <= self.m, "generator index {k} out of range");
        self.d[k - 1]
    }

    /// For a three-generator tuple, the two generators complementary to axis
    /// `k`, in increasing order. Panics unless `m = 3` and `k` is in 1..=3.
    pub fn other_pair(&self, k: usize) -> (i64, i64) {
        assert_eq!(self.m, 3, "axis pairs require three generators");
        match k {
            1 => (self.d[1], self.d[2]),
            2 => (self.d[0], self.d[2]),
            3 => (self.d[0], self.d[1]),
            _ => panic!("axis {k} out of range"),
        }
    }

    /// Sum of the generators.
    pub fn sum(&self) -> i64 {
        self.as_slice().iter().sum()
    }
}

impl std::fmt::Display for Generators {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.as_slice().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// A finite or infinite invariant value. One generator alone leaves
/// infinitely many gaps, so its Frobenius number and genus are reported as
/// [`Extent::Infinite`] rather than any numeric stand-in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extent {
    Finite(i64),
    Infinite,
}

impl std::fmt::Display for Extent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Extent::Finite(v) => write!(f, "{v}"),
            Extent::Infinite => write!(f, "inf"),
        }
    }
}

/// True iff `t = x*a + y*b` has a solution in non-negative integers.
///
/// Any solution can be reduced so that the coefficient of the larger
/// generator stays below the smaller one, so the scan is bounded by
/// `min(a, b)` steps. Valid for any positive pair, coprime or not.
pub(crate) fn pair_representable(t: i64, a: i64, b: i64) -> bool {
    debug_assert!(a > 0 && b > 0);
    if t < 0 {
        return false;
    }
    // Scan coefficients of the larger generator modulo the smaller one.
    let (small, large) = if a <= b { (a, b) } else { (b, a) };
    let mut rest = t;
    for _ in 0..small {
        if rest < 0 {
            return false;
        }
        if rest % small == 0 {
            return true;
        }
        rest -= large;
    }
    false
}

/// True iff `target` is a non-negative integer combination of a validated
/// two-generator tuple.
///
/// # Example
///
/// ```
/// use frobenius3::semigroup::{Generators, is_representable};
/// let g = Generators::validate(&[29, 44]).unwrap();
/// assert!(is_representable(161, &g)); // 161 = 29 + 3*44
/// ```
pub fn is_representable(target: i64, gens: &Generators) -> bool {
    assert_eq!(gens.m(), 2, "representability test requires a pair");
    pair_representable(target, gens.d(1), gens.d(2))
}

/// Frobenius number and genus of a two-generator semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairInvariants {
    pub f: i64,
    pub g: i64,
}

/// Sylvester's closed forms for a coprime pair:
/// F = d_1 d_2 - d_1 - d_2 and G = (d_1 - 1)(d_2 - 1) / 2.
///
/// Panics unless `gens` has exactly two generators.
pub fn sylvester_pair(gens: &Generators) -> Result<PairInvariants> {
    assert_eq!(gens.m(), 2, "closed forms require a pair");
    let (d1, d2) = (gens.d(1), gens.d(2));
    let prod = d1
        .checked_mul(d2)
        .ok_or_else(|| Error::Overflow(format!("{d1}*{d2} exceeds 64 bits")))?;
    let f = prod - d1 - d2;
    let g = (d1 - 1) * (d2 - 1) / 2;
    Ok(PairInvariants { f, g })
}

/// The sorted set of gaps of a semigroup: positive integers that are not
/// representable. The largest gap is the Frobenius number, the cardinality
/// is the genus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapSet {
    elements: std::collections::BTreeSet<i64>,
}

impl GapSet {
    pub fn from_elements(iter: impl IntoIterator<Item = i64>) -> Self {
        let elements: std::collections::BTreeSet<i64> = iter.into_iter().collect();
        debug_assert!(elements.iter().all(|&e| e > 0), "gaps are positive");
        GapSet { elements }
    }

    /// Largest gap, or `None` for the empty gap set.
    pub fn frobenius(&self) -> Option<i64> {
        self.elements.iter().next_back().copied()
    }

    /// Number of gaps.
    pub fn genus(&self) -> i64 {
        self.elements.len() as i64
    }

    pub fn contains(&self, n: i64) -> bool {
        self.elements.contains(&n)
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.elements.iter().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// One cell of the gap-set matrix representation of a pair.
///
/// The value is `sigma(p, q) = d_1 d_2 - p d_1 - q d_2`. Over the index
/// ranges `1 <= p <= floor(d_2 - d_2/d_1)`, `1 <= q <= d_1 - 1` the positive
/// values run through the gap set exactly once; non-positive cells are kept
/// so callers can render the full matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatrixRepEntry {
    pub p: i64,
    pub q: i64,
    pub value: i64,
}

impl MatrixRepEntry {
    /// True iff this cell carries a gap (positive value).
    pub fn is_gap(&self) -> bool {
        self.value > 0
    }
}

/// Enumerates the gap-set matrix of a pair in row-major order (p outer, q
/// inner). Requires d_1 >= 3; the pair (2, d_2) is degenerate for this
/// representation.
pub fn matrix_representation(gens: &Generators) -> Result<Vec<MatrixRepEntry>> {
    assert_eq!(gens.m(), 2, "matrix representation requires a pair");
    let (d1, d2) = (gens.d(1), gens.d(2));
    if d1 <= 2 {
        return Err(Error::PairTooSmall { d1, d2 });
    }
    let p_max = d2 * (d1 - 1) / d1; // floor(d_2 - d_2/d_1)
    let q_max = d1 - 1;
    // The q range must fit inside the p range for the bijection to cover
    // the whole gap set; this holds for every pair with d_1 >= 3.
    assert!(
        q_max <= p_max,
        "index ranges degenerate for ({d1},{d2}): {q_max} > {p_max}"
    );
    let mut out = Vec::with_capacity((p_max * q_max) as usize);
    for p in 1..=p_max {
        for q in 1..=q_max {
            out.push(MatrixRepEntry {
                p,
                q,
                value: d1 * d2 - p * d1 - q * d2,
            });
        }
    }
    Ok(out)
}
