//! The matrix of minimal relations of a three-generator semigroup.
//!
//! Each generator has a minimal multiple that the other two can represent;
//! those multipliers form the diagonal. The diagonal is computed three
//! interchangeable ways (modular scan, auxiliary-series lowest exponent,
//! and the oracle's direct search), and the off-diagonal entries follow
//! from six quadratic identities whose conjugate root assemblies are told
//! apart by exact integrality checks.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::frobenius;
use crate::semigroup::{pair_representable, Generators};
use crate::series;

/// The three diagonal elements of the matrix of minimal relations:
/// `a_kk` is the least v >= 2 with `v * d_k` representable by the other
/// two generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiagonalTriple {
    pub a11: i64,
    pub a22: i64,
    pub a33: i64,
}

impl DiagonalTriple {
    pub fn as_array(&self) -> [i64; 3] {
        [self.a11, self.a22, self.a33]
    }

    /// The weighted sum `a_11 d_1 + a_22 d_2 + a_33 d_3`.
    pub fn weighted_sum(&self, gens: &Generators) -> i64 {
        self.a11 * gens.d(1) + self.a22 * gens.d(2) + self.a33 * gens.d(3)
    }
}

/// A 3x3 non-negative integer matrix encoding the minimal relations
/// `a_kk d_k = sum of a_kj d_j over j != k`. Valid instances satisfy
/// `invariant_failures(gens).is_empty()`: the three relations, row gcds 1,
/// column sums, the three product identities, and the diagonal bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JohnsonMatrix {
    a: [[i64; 3]; 3],
}

impl JohnsonMatrix {
    pub fn rows(&self) -> [[i64; 3]; 3] {
        self.a
    }

    /// Entry a_ij, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        assert!((1..=3).contains(&i) && (1..=3).contains(&j));
        self.a[i - 1][j - 1]
    }

    pub fn diagonal(&self) -> DiagonalTriple {
        DiagonalTriple {
            a11: self.a[0][0],
            a22: self.a[1][1],
            a33: self.a[2][2],
        }
    }

    /// `|a_12 a_23 a_31 - a_13 a_32 a_21|`, which equals the discriminant
    /// root J for a valid matrix.
    pub fn cross_product_j(&self) -> i64 {
        let a = &self.a;
        (a[0][1] * a[1][2] * a[2][0] - a[0][2] * a[2][1] * a[1][0]).abs()
    }

    /// Every broken structural invariant, as human-readable labels; empty
    /// for a valid matrix.
    pub fn invariant_failures(&self, gens: &Generators) -> Vec<String> {
        invariant_failures(&self.a, gens)
    }
}

fn invariant_failures(a: &[[i64; 3]; 3], gens: &Generators) -> Vec<String> {
    let (d1, d2, d3) = (gens.d(1), gens.d(2), gens.d(3));
    let mut failures = Vec::new();
    let names = [["a11", "a12", "a13"], ["a21", "a22", "a23"], ["a31", "a32", "a33"]];
    for i in 0..3 {
        for j in 0..3 {
            if a[i][j] < 0 {
                failures.push(format!("negative entry {}", names[i][j]));
            }
        }
    }
    if a[0][0] * d1 != a[0][1] * d2 + a[0][2] * d3 {
        failures.push("row 1 relation".into());
    }
    if a[1][1] * d2 != a[1][0] * d1 + a[1][2] * d3 {
        failures.push("row 2 relation".into());
    }
    if a[2][2] * d3 != a[2][0] * d1 + a[2][1] * d2 {
        failures.push("row 3 relation".into());
    }
    for (i, row) in a.iter().enumerate() {
        let g = row.iter().fold(0i64, |acc, &x| num_integer::gcd(acc, x));
        if g != 1 {
            failures.push(format!("row {} gcd is {g}", i + 1));
        }
    }
    if a[1][0] + a[2][0] != a[0][0] {
        failures.push("column 1 sum".into());
    }
    if a[0][1] + a[2][1] != a[1][1] {
        failures.push("column 2 sum".into());
    }
    if a[0][2] + a[1][2] != a[2][2] {
        failures.push("column 3 sum".into());
    }
    if a[1][2] * a[2][1] != a[1][1] * a[2][2] - d1 {
        failures.push("product identity (2,3)".into());
    }
    if a[0][2] * a[2][0] != a[0][0] * a[2][2] - d2 {
        failures.push("product identity (1,3)".into());
    }
    if a[0][1] * a[1][0] != a[0][0] * a[1][1] - d3 {
        failures.push("product identity (1,2)".into());
    }
    if !(2 <= a[0][0] && a[0][0] <= d2 - 1) {
        failures.push("diagonal bound a11".into());
    }
    if !(2 <= a[1][1] && a[1][1] <= d1 - 1) {
        failures.push("diagonal bound a22".into());
    }
    if !(2 <= a[2][2] && a[2][2] <= d1 - 1) {
        failures.push("diagonal bound a33".into());
    }
    failures
}

/// Upper bound for the diagonal scan on axis k: a_11 < d_2 and
/// a_22, a_33 < d_1.
pub fn diagonal_scan_bound(gens: &Generators, k: usize) -> i64 {
    assert_eq!(gens.m(), 3);
    match k {
        1 => gens.d(2) - 1,
        2 | 3 => gens.d(1) - 1,
        _ => panic!("axis {k} out of range"),
    }
}

/// Indicator of non-representability at integer argument b: one minus the
/// coefficient of `z^(b*d_k)` in the characteristic series of the other
/// two generators. Zero exactly when `b*d_k` is representable by them.
pub fn xi(gens: &Generators, k: usize, b: i64) -> Result<i64> {
    assert_eq!(gens.m(), 3);
    assert!((1..=3).contains(&k), "axis {k} out of range");
    assert!(b >= 1, "argument b must be positive");
    let (dj, dl) = gens.other_pair(k);
    let target = b
        .checked_mul(gens.d(k))
        .ok_or_else(|| Error::Overflow(format!("{b}*d_{k} exceeds 64 bits")))?;
    Ok(if pair_representable(target, dj, dl) { 0 } else { 1 })
}

/// Floating-point cross-check of [`xi`]: extracts the same coefficient by
/// quadrature on a circle of radius r < 1 chosen so that `r^(-b*d_k)` stays
/// near 1e3. Exact code never calls this.
pub fn xi_numeric(gens: &Generators, k: usize, b: i64) -> Result<f64> {
    assert_eq!(gens.m(), 3);
    assert!((1..=3).contains(&k), "axis {k} out of range");
    assert!(b >= 1, "argument b must be positive");
    let (dj, dl) = gens.other_pair(k);
    let n = b
        .checked_mul(gens.d(k))
        .ok_or_else(|| Error::Overflow(format!("{b}*d_{k} exceeds 64 bits")))?;
    let lcm = num_integer::lcm(dj, dl);
    let r = (-3.0 * std::f64::consts::LN_10 / n as f64).exp();
    let m_points: usize = ((4 * n).max(8192) as usize).next_power_of_two().min(1 << 20);
    let one = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    for i in 0..m_points {
        let theta = 2.0 * std::f64::consts::PI * i as f64 / m_points as f64;
        let s = Complex64::from_polar(r, theta);
        let h = (one - cpow(s, lcm)) / ((one - cpow(s, dj)) * (one - cpow(s, dl)));
        let s_inv = Complex64::from_polar(1.0 / r, -theta);
        sum += h * cpow(s_inv, n);
    }
    let coeff = sum / m_points as f64;
    Ok(1.0 - coeff.re)
}

fn cpow(z: Complex64, mut e: i64) -> Complex64 {
    debug_assert!(e >= 0);
    let mut base = z;
    let mut acc = Complex64::new(1.0, 0.0);
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        base *= base;
        e >>= 1;
    }
    acc
}

/// Diagonal by modular scan: for each axis the least b in 2..=bound with
/// `xi = 0`. A validated tuple always has one inside the bound; running
/// past it signals an internal bug or an invalid input.
pub fn diagonal_via_xi(gens: &Generators) -> Result<DiagonalTriple> {
    assert_eq!(gens.m(), 3);
    let mut diag = [0i64; 3];
    for k in 1..=3 {
        let bound = diagonal_scan_bound(gens, k);
        let hit = (2..=bound)
            .find(|&b| xi(gens, k, b).map(|v| v == 0).unwrap_or(false));
        diag[k - 1] = hit.ok_or(Error::NoZeroInRange { k, bound })?;
    }
    Ok(DiagonalTriple {
        a11: diag[0],
        a22: diag[1],
        a33: diag[2],
    })
}

/// Diagonal via the auxiliary series: `a_kk` is the lowest exponent of the
/// axis-k series divided by d_k. Starts from the horizon the series
/// requires and doubles on an empty result; the first representable
/// multiple can exceed the pair product (axis 3 of (10,11,89) does), so
/// the growth step is load-bearing. Capped by `min(d_j,d_l) * d_k`, which
/// always contains the answer.
pub fn diagonal_via_psi(gens: &Generators) -> Result<DiagonalTriple> {
    assert_eq!(gens.m(), 3);
    let mut diag = [0i64; 3];
    for k in 1..=3 {
        let (dj, dl) = gens.other_pair(k);
        let dk = gens.d(k);
        let start = dj * dl + dk;
        let cap = start.max(dj.min(dl) * dk);
        let mut horizon = start;
        diag[k - 1] = loop {
            let p = series::psi(gens, k, horizon)?;
            if let Some(e) = p.lowest_exponent() {
                debug_assert_eq!(e % dk, 0);
                break e / dk;
            }
            if horizon >= cap {
                return Err(Error::NoZeroInRange { k, bound: cap / dk });
            }
            horizon = (horizon * 2).min(cap);
        };
    }
    Ok(DiagonalTriple {
        a11: diag[0],
        a22: diag[1],
        a33: diag[2],
    })
}

/// Symmetry test: `Some((i, j))` for the first pair (in the order (1,2),
/// (1,3), (2,3)) with `a_ii d_i = a_jj d_j`, `None` for a non-symmetric
/// semigroup. A symmetric semigroup's numerator splits into two binomial
/// factors instead of carrying six terms.
pub fn is_symmetric(gens: &Generators, diag: &DiagonalTriple) -> Option<(usize, usize)> {
    assert_eq!(gens.m(), 3);
    let w = [
        diag.a11 * gens.d(1),
        diag.a22 * gens.d(2),
        diag.a33 * gens.d(3),
    ];
    for (i, j) in [(1, 2), (1, 3), (2, 3)] {
        if w[i - 1] == w[j - 1] {
            return Some((i, j));
        }
    }
    None
}

/// Which sign of the discriminant root the a_23-pattern entries took in an
/// assembly (the other three entries take the opposite sign).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootBranch {
    Plus,
    Minus,
}

impl RootBranch {
    fn sign(self) -> i64 {
        match self {
            RootBranch::Plus => 1,
            RootBranch::Minus => -1,
        }
    }

    pub fn conjugate(self) -> Self {
        match self {
            RootBranch::Plus => RootBranch::Minus,
            RootBranch::Minus => RootBranch::Plus,
        }
    }
}

/// Outcome of assembling the six off-diagonal entries from one root branch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AssemblyOutcome {
    /// An entry came out negative or non-integral; entry named.
    NotIntegral {
        entry: &'static str,
        numerator: i64,
        denominator: i64,
    },
    /// All six entries are non-negative integers, but a structural
    /// invariant fails.
    FailedChecks {
        entries: [[i64; 3]; 3],
        failures: Vec<String>,
    },
    /// Non-negative, integral, and every structural check passes.
    Valid(JohnsonMatrix),
}

impl AssemblyOutcome {
    pub fn is_valid(&self) -> bool {
        matches!(self, AssemblyOutcome::Valid(_))
    }
}

/// The audited result of the off-diagonal construction: the accepted
/// matrix, the branch it came from, and the rejected conjugate branch with
/// the reason it failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSelection {
    pub chosen: JohnsonMatrix,
    pub chosen_branch: RootBranch,
    pub rejected: AssemblyOutcome,
}

fn assemble(gens: &Generators, diag: &DiagonalTriple, j: i64, branch: RootBranch) -> AssemblyOutcome {
    let (d1, d2, d3) = (gens.d(1), gens.d(2), gens.d(3));
    let ad = diag.weighted_sum(gens);
    let s1 = ad - 2 * diag.a11 * d1;
    let s2 = ad - 2 * diag.a22 * d2;
    let s3 = ad - 2 * diag.a33 * d3;
    let sg = branch.sign();
    // Conjugate pairs share a numerator sum: a23/a32 split s1, a13/a31
    // split s2, a12/a21 split s3. Flipping every sign at once yields the
    // other branch; mixed flips would break the column sums.
    let entries = [
        ("a12", s3 + sg * j, 2 * d2),
        ("a13", s2 - sg * j, 2 * d3),
        ("a21", s3 - sg * j, 2 * d1),
        ("a23", s1 + sg * j, 2 * d3),
        ("a31", s2 + sg * j, 2 * d1),
        ("a32", s1 - sg * j, 2 * d2),
    ];
    let mut value = std::collections::HashMap::new();
    for (name, numerator, denominator) in entries {
        if numerator < 0 || numerator % denominator != 0 {
            return AssemblyOutcome::NotIntegral {
                entry: name,
                numerator,
                denominator,
            };
        }
        value.insert(name, numerator / denominator);
    }
    let a = [
        [diag.a11, value["a12"], value["a13"]],
        [value["a21"], diag.a22, value["a23"]],
        [value["a31"], value["a32"], diag.a33],
    ];
    let failures = invariant_failures(&a, gens);
    if failures.is_empty() {
        AssemblyOutcome::Valid(JohnsonMatrix { a })
    } else {
        AssemblyOutcome::FailedChecks { entries: a, failures }
    }
}

/// Builds both conjugate root assemblies and keeps the one that is
/// integral, non-negative, and passes every structural check.
///
/// Exactly one assembly survives for a non-symmetric tuple; both surviving
/// is reported as `RootSelectionAmbiguous`, and neither surviving would
/// contradict the existence of the relation matrix, so it panics as an
/// internal invariant violation.
pub fn select_roots(gens: &Generators, diag: &DiagonalTriple) -> Result<RootSelection> {
    assert_eq!(gens.m(), 3);
    if let Some((i, j)) = is_symmetric(gens, diag) {
        return Err(Error::SymmetricSemigroup { i, j });
    }
    let j = frobenius::j_invariant(gens, diag)?;
    let plus = assemble(gens, diag, j, RootBranch::Plus);
    let minus = assemble(gens, diag, j, RootBranch::Minus);
    match (plus, minus) {
        (AssemblyOutcome::Valid(_), AssemblyOutcome::Valid(_)) => {
            Err(Error::RootSelectionAmbiguous)
        }
        (AssemblyOutcome::Valid(m), rejected) => Ok(RootSelection {
            chosen: m,
            chosen_branch: RootBranch::Plus,
            rejected,
        }),
        (rejected, AssemblyOutcome::Valid(m)) => Ok(RootSelection {
            chosen: m,
            chosen_branch: RootBranch::Minus,
            rejected,
        }),
        (p, m) => panic!(
            "no integral root assembly for {gens}: both branches failed ({p:?} / {m:?})"
        ),
    }
}

/// The full matrix of minimal relations for a non-symmetric tuple: the
/// diagonal extended by the surviving root assembly.
pub fn off_diagonal(gens: &Generators, diag: &DiagonalTriple) -> Result<JohnsonMatrix> {
    select_roots(gens, diag).map(|s| s.chosen)
}

/// Exact indicator values over an inclusive range of integer arguments,
/// for CSV emission. The range must sit inside `[1, diagonal_scan_bound]`.
pub fn xi_sweep(
    gens: &Generators,
    k: usize,
    b_range: std::ops::RangeInclusive<i64>,
) -> Result<Vec<(i64, i64)>> {
    let (lo, hi) = (*b_range.start(), *b_range.end());
    assert!(lo >= 1 && lo <= hi, "empty or non-positive sweep range");
    assert!(
        hi <= diagonal_scan_bound(gens, k),
        "sweep range exceeds the diagonal bound"
    );
    (lo..=hi).map(|b| Ok((b, xi(gens, k, b)?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn gens(raw: &[i64]) -> Generators {
        Generators::validate(raw).unwrap()
    }

    #[test]
    fn xi_known_values() {
        let g = gens(&[23, 29, 44]);
        assert_eq!(xi(&g, 3, 5).unwrap(), 0);
        assert_eq!(xi(&g, 3, 2).unwrap(), 1);
        assert_eq!(xi(&g, 1, 7).unwrap(), 0);
    }

    #[test]
    fn diagonal_via_xi_known_tuples() {
        let d = diagonal_via_xi(&gens(&[23, 29, 44])).unwrap();
        assert_eq!(d.as_array(), [7, 7, 5]);
        let d = diagonal_via_xi(&gens(&[3, 4, 5])).unwrap();
        assert_eq!(d.as_array(), [3, 2, 2]);
        let d = diagonal_via_xi(&gens(&[4, 5, 6])).unwrap();
        assert_eq!(d.as_array(), [3, 2, 2]);
    }

    #[test]
    fn diagonal_via_psi_agrees() {
        for raw in [
            [23i64, 29, 44],
            [3, 4, 5],
            [4, 5, 6],
            [10, 11, 89],
            [6, 10, 59],
            [4, 6, 9],
        ] {
            let g = gens(&raw);
            assert_eq!(
                diagonal_via_psi(&g).unwrap(),
                diagonal_via_xi(&g).unwrap(),
                "tuple {g}"
            );
            assert_eq!(diagonal_via_psi(&g).unwrap(), oracle::johnson_direct(&g));
        }
    }

    #[test]
    fn off_diagonal_reference_tuple() {
        let g = gens(&[23, 29, 44]);
        let diag = diagonal_via_xi(&g).unwrap();
        let m = off_diagonal(&g, &diag).unwrap();
        assert_eq!(m.rows(), [[7, 1, 3], [5, 7, 2], [2, 6, 5]]);
        assert_eq!(m.cross_product_j(), 86);
        assert!(m.invariant_failures(&g).is_empty());
    }

    #[test]
    fn off_diagonal_small_tuple() {
        let g = gens(&[3, 4, 5]);
        let diag = diagonal_via_xi(&g).unwrap();
        let m = off_diagonal(&g, &diag).unwrap();
        assert_eq!(m.rows(), [[3, 1, 1], [1, 2, 1], [2, 1, 2]]);
        assert_eq!(m.cross_product_j(), 1);
    }

    #[test]
    fn off_diagonal_rejects_symmetric() {
        let g = gens(&[4, 5, 6]);
        let diag = diagonal_via_xi(&g).unwrap();
        assert_eq!(
            off_diagonal(&g, &diag),
            Err(Error::SymmetricSemigroup { i: 1, j: 3 })
        );
    }

    #[test]
    fn symmetry_detection() {
        let g = gens(&[4, 5, 6]);
        let diag = diagonal_via_xi(&g).unwrap();
        assert_eq!(is_symmetric(&g, &diag), Some((1, 3)));

        let g = gens(&[3, 4, 5]);
        let diag = diagonal_via_xi(&g).unwrap();
        assert_eq!(is_symmetric(&g, &diag), None);

        let g = gens(&[23, 29, 44]);
        let diag = diagonal_via_xi(&g).unwrap();
        assert_eq!(is_symmetric(&g, &diag), None);
    }

    #[test]
    fn rejected_branch_fails_loudly() {
        let g = gens(&[23, 29, 44]);
        let diag = diagonal_via_xi(&g).unwrap();
        let sel = select_roots(&g, &diag).unwrap();
        assert_eq!(sel.chosen_branch, RootBranch::Minus);
        assert!(!sel.rejected.is_valid());
        // The conjugate fails integrality outright on this tuple.
        assert!(matches!(sel.rejected, AssemblyOutcome::NotIntegral { .. }));
    }

    #[test]
    fn xi_sweep_examples() {
        let g = gens(&[23, 29, 44]);
        let sweep = xi_sweep(&g, 3, 2..=22).unwrap();
        assert_eq!(sweep.len(), 21);
        let first_zero = sweep.iter().find(|&&(_, v)| v == 0).unwrap().0;
        assert_eq!(first_zero, 5);
        for &(b, v) in &sweep {
            assert_eq!(v, xi(&g, 3, b).unwrap());
        }

        let g = gens(&[3, 4, 5]);
        assert_eq!(xi_sweep(&g, 1, 2..=3).unwrap(), vec![(2, 1), (3, 0)]);
        assert_eq!(xi_sweep(&g, 3, 2..=2).unwrap(), vec![(2, 0)]);
    }

    #[test]
    fn discriminant_identities_hold_on_assembled_matrices() {
        for raw in [[23i64, 29, 44], [3, 4, 5], [5, 7, 9], [7, 11, 13]] {
            let g = gens(&raw);
            let diag = diagonal_via_xi(&g).unwrap();
            if is_symmetric(&g, &diag).is_some() {
                continue;
            }
            let m = off_diagonal(&g, &diag).unwrap();
            let j = frobenius::j_invariant(&g, &diag).unwrap();
            let ad = diag.weighted_sum(&g);
            let (d1, d2, d3) = (g.d(1), g.d(2), g.d(3));
            let s1 = ad - 2 * diag.a11 * d1;
            let s2 = ad - 2 * diag.a22 * d2;
            let s3 = ad - 2 * diag.a33 * d3;
            // Each axis quadratic has discriminant J^2.
            assert_eq!(s1 * s1 - 4 * d2 * d3 * m.entry(2, 3) * m.entry(3, 2), j * j);
            assert_eq!(s2 * s2 - 4 * d1 * d3 * m.entry(1, 3) * m.entry(3, 1), j * j);
            assert_eq!(s3 * s3 - 4 * d1 * d2 * m.entry(1, 2) * m.entry(2, 1), j * j);
            assert_eq!(m.cross_product_j(), j);
        }
    }

    #[test]
    fn xi_numeric_tracks_exact_values() {
        let g = gens(&[3, 4, 5]);
        for b in [2i64, 3, 4] {
            for k in [1usize, 3] {
                let exact = xi(&g, k, b).unwrap() as f64;
                let approx = xi_numeric(&g, k, b).unwrap();
                assert!(
                    (exact - approx).abs() < 1e-6,
                    "axis {k}, b {b}: {exact} vs {approx}"
                );
            }
        }
    }
}
