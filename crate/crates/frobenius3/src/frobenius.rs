//! Closed-form invariants: largest gap, gap count, and the numerator
//! polynomial of the generating function of the semigroup.
//!
//! For three generators the numerator is determined by the diagonal of the
//! relation matrix together with the square root J of a quadratic
//! discriminant. Non-symmetric semigroups carry six numerator terms and a
//! full relation matrix; symmetric ones collapse to a product of two
//! binomials and have no off-diagonal construction.

use crate::error::{Error, Result};
use crate::johnson::{self, DiagonalTriple, JohnsonMatrix};
use crate::semigroup::{self, Extent, Generators};
use crate::series::{self, SparseSeries};

/// The complete exact description of a three-generator semigroup.
#[derive(Debug, Clone, PartialEq)]
pub struct Invariants3 {
    /// Largest non-representable integer.
    pub f: i64,
    /// Number of non-representable positive integers.
    pub g: i64,
    /// Discriminant root, when it is a perfect square.
    pub j: Option<i64>,
    /// Numerator of the generating function over the standard denominator.
    pub q: SparseSeries,
    /// Whether the gap set is mirror-symmetric about F/2.
    pub symmetric: bool,
    /// The matrix of minimal relations; absent for symmetric semigroups,
    /// whose off-diagonal entries are not uniquely determined.
    pub matrix: Option<JohnsonMatrix>,
}

/// The discriminant `<a,d>^2 - 4 sum of adjacent diagonal products + 4 d1 d2 d3`,
/// computed in 128 bits because the square of the weighted sum overflows
/// 64 bits well inside the magnitude guard.
pub(crate) fn j_squared(gens: &Generators, diag: &DiagonalTriple) -> i128 {
    let (d1, d2, d3) = (gens.d(1) as i128, gens.d(2) as i128, gens.d(3) as i128);
    let (a11, a22, a33) = (diag.a11 as i128, diag.a22 as i128, diag.a33 as i128);
    let ad = a11 * d1 + a22 * d2 + a33 * d3;
    ad * ad - 4 * (a11 * a22 * d1 * d2 + a22 * a33 * d2 * d3 + a33 * a11 * d3 * d1)
        + 4 * d1 * d2 * d3
}

/// The non-negative square root J of the discriminant, as an exact
/// integer. The discriminant of a valid diagonal is always a perfect
/// square; a non-square value means the caller fed a wrong diagonal.
pub fn j_invariant(gens: &Generators, diag: &DiagonalTriple) -> Result<i64> {
    let sq = j_squared(gens, diag);
    if sq < 0 {
        return Err(Error::NotPerfectSquare(sq));
    }
    let root = (sq as u128).isqrt();
    if root * root != sq as u128 {
        return Err(Error::NotPerfectSquare(sq));
    }
    Ok(root as i64)
}

/// F and G from the weighted diagonal sum and J alone. These are the
/// authoritative values for a non-symmetric tuple; for a symmetric one
/// they are a cross-check against the series-derived values.
pub fn closed_form_check(gens: &Generators, diag: &DiagonalTriple) -> Result<(i64, i64)> {
    let j = j_invariant(gens, diag)?;
    let ad = diag.weighted_sum(gens);
    let sum = gens.sum();
    assert_eq!((ad + j) % 2, 0, "weighted sum and J must share parity");
    let f = (ad + j) / 2 - sum;
    let odd = 1 + ad - sum - diag.a11 * diag.a22 * diag.a33;
    assert_eq!(odd % 2, 0, "gap-count numerator must be even");
    Ok((f, odd / 2))
}

/// Computes every invariant of a three-generator tuple exactly.
///
/// The diagonal comes from the modular scan; symmetry dictates the shape
/// of the numerator. Non-symmetric tuples get F and G from the closed
/// forms and a fully checked relation matrix. Symmetric tuples get the
/// two-binomial numerator, F from its degree, and G by expanding the
/// generating function up to F and counting the gaps.
pub fn invariants(gens: &Generators) -> Result<Invariants3> {
    assert_eq!(gens.m(), 3, "invariants require exactly three generators");
    let diag = johnson::diagonal_via_xi(gens)?;
    let sum = gens.sum();
    let weighted = [
        diag.a11 * gens.d(1),
        diag.a22 * gens.d(2),
        diag.a33 * gens.d(3),
    ];
    match johnson::is_symmetric(gens, &diag) {
        None => {
            let j = j_invariant(gens, &diag)?;
            let (f, g) = closed_form_check(gens, &diag)?;
            let matrix = johnson::off_diagonal(gens, &diag)?;
            let ad = diag.weighted_sum(gens);
            let degree = (ad + j) / 2;
            let q = SparseSeries::from_terms(
                [
                    (0, 1),
                    (weighted[0], -1),
                    (weighted[1], -1),
                    (weighted[2], -1),
                    ((ad - j) / 2, 1),
                    (degree, 1),
                ],
                degree,
            )?;
            Ok(Invariants3 {
                f,
                g,
                j: Some(j),
                q,
                symmetric: false,
                matrix: Some(matrix),
            })
        }
        Some((i, _)) => {
            // The matched pair contributes one binomial; the smaller
            // matched index is dropped so each factor appears once.
            let kept: Vec<i64> = (1..=3).filter(|&k| k != i).map(|k| weighted[k - 1]).collect();
            let degree = kept[0] + kept[1];
            let factors: Vec<SparseSeries> = kept
                .iter()
                .map(|&e| SparseSeries::from_terms([(0, 1), (e, -1)], degree))
                .collect::<Result<_>>()?;
            let q = &factors[0] * &factors[1];
            let f = q.degree().expect("binomial product is nonzero") - sum;
            let g = count_gaps(gens, &q, f)?;
            let j = match j_invariant(gens, &diag) {
                Ok(j) => Some(j),
                Err(Error::NotPerfectSquare(_)) => None,
                Err(e) => return Err(e),
            };
            Ok(Invariants3 {
                f,
                g,
                j,
                q,
                symmetric: true,
                matrix: None,
            })
        }
    }
}

/// Expands `q / prod (1 - z^d_k)` as a dense coefficient table up to
/// `horizon` inclusive. The division is exact cumulative addition, one
/// pass per generator.
fn dense_expansion(gens: &Generators, q: &SparseSeries, horizon: i64) -> Result<Vec<i64>> {
    assert!(horizon >= 0);
    let len = horizon as usize + 1;
    if len > series::MAX_DENSE_LEN {
        return Err(Error::Overflow(format!(
            "dense expansion of length {len} exceeds the table cap"
        )));
    }
    let mut c = vec![0i64; len];
    for (e, v) in q.terms() {
        if e <= horizon {
            c[e as usize] = v;
        }
    }
    for &d in gens.as_slice() {
        let d = d as usize;
        for n in d..len {
            c[n] += c[n - d];
        }
    }
    Ok(c)
}

fn count_gaps(gens: &Generators, q: &SparseSeries, f: i64) -> Result<i64> {
    assert!(f >= 1, "a valid tuple always has 1 as a gap");
    let c = dense_expansion(gens, q, f)?;
    Ok(c[1..].iter().filter(|&&v| v == 0).count() as i64)
}

/// The generating function of the semigroup, truncated at `horizon`:
/// coefficient 1 at representable exponents, 0 at gaps.
pub fn hilbert_series(gens: &Generators, horizon: i64) -> Result<SparseSeries> {
    assert!(horizon >= 0, "horizon must be non-negative");
    let q = match gens.m() {
        1 => return Ok(SparseSeries::geometric(gens.d(1), horizon)),
        2 => {
            let e = gens.d(1) * gens.d(2);
            let bound = horizon.max(e);
            SparseSeries::from_terms([(0, 1), (e, -1)], bound)?
        }
        _ => invariants(gens)?.q,
    };
    let c = dense_expansion(gens, &q, horizon)?;
    let series = SparseSeries::from_terms(
        c.iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(e, &v)| (e as i64, v)),
        horizon,
    )?;
    debug_assert!(series.is_characteristic());
    Ok(series)
}

/// The generating function of the gap set: `1/(1-z) - H`, truncated at
/// `horizon`. For two or three generators the horizon must reach F so the
/// full polynomial is returned; a single generator has infinitely many
/// gaps and any horizon is accepted, the result being a plain truncation.
pub fn gap_generating_function(gens: &Generators, horizon: i64) -> Result<SparseSeries> {
    assert!(horizon >= 0, "horizon must be non-negative");
    if gens.m() >= 2 {
        let f = match frobenius_genus(gens)?.0 {
            Extent::Finite(f) => f,
            Extent::Infinite => unreachable!("finite for m >= 2"),
        };
        if horizon < f {
            return Err(Error::HorizonTooSmall {
                horizon: horizon as u64,
                needed: f as u64,
            });
        }
    }
    let h = hilbert_series(gens, horizon)?;
    Ok(&SparseSeries::all_ones(horizon) - &h)
}

/// Largest gap and gap count for any valid tuple. A single generator has
/// infinitely many gaps; two generators follow the classical pair
/// formulas; three dispatch to the full construction.
pub fn frobenius_genus(gens: &Generators) -> Result<(Extent, Extent)> {
    match gens.m() {
        1 => Ok((Extent::Infinite, Extent::Infinite)),
        2 => {
            let p = semigroup::sylvester_pair(gens)?;
            Ok((Extent::Finite(p.f), Extent::Finite(p.g)))
        }
        _ => {
            let inv = invariants(gens)?;
            Ok((Extent::Finite(inv.f), Extent::Finite(inv.g)))
        }
    }
}
