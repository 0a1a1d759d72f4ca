//! Sparse truncated power series over the integers.
//!
//! A [`SparseSeries`] stores only its nonzero coefficients together with a
//! truncation horizon: coefficients at exponents beyond the horizon are
//! unknown, not zero. Operations propagate horizons conservatively and
//! never fabricate coefficients they cannot certify; anything that would
//! need data past a horizon fails with `HorizonTooSmall` instead of
//! silently truncating.

use std::collections::{BTreeMap, BTreeSet};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::semigroup::Generators;

/// Refuse dense expansions beyond this many entries.
pub(crate) const MAX_DENSE_LEN: usize = 1 << 27;

/// z^e for a non-negative machine-integer exponent, by squaring. The
/// standard library bounds float powers at i32 exponents; series exponents
/// are i64.
fn powi64(z: f64, mut e: i64) -> f64 {
    debug_assert!(e >= 0);
    let mut base = z;
    let mut acc = 1.0;
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        base *= base;
        e >>= 1;
    }
    acc
}

fn cpowi64(z: Complex64, mut e: i64) -> Complex64 {
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

/// Integer power series truncated at `horizon`: the coefficient at every
/// exponent `0..=horizon` is determined (zero when absent from `terms`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseSeries {
    terms: BTreeMap<i64, i64>,
    horizon: i64,
}

impl SparseSeries {
    /// The zero series, known up to `horizon`.
    pub fn zero(horizon: i64) -> Self {
        assert!(horizon >= 0);
        SparseSeries { terms: BTreeMap::new(), horizon }
    }

    /// The constant series 1.
    pub fn one(horizon: i64) -> Self {
        Self::monomial(0, 1, horizon)
    }

    /// A single term `coeff * z^exp`.
    pub fn monomial(exp: i64, coeff: i64, horizon: i64) -> Self {
        Self::from_terms([(exp, coeff)], horizon).expect("monomial within horizon")
    }

    /// Builds a series from (exponent, coefficient) pairs. Duplicate
    /// exponents are summed; zero coefficients are dropped; an exponent
    /// beyond the horizon is an error.
    pub fn from_terms(
        pairs: impl IntoIterator<Item = (i64, i64)>,
        horizon: i64,
    ) -> Result<Self> {
        assert!(horizon >= 0);
        let mut terms = BTreeMap::new();
        for (exp, coeff) in pairs {
            assert!(exp >= 0, "exponents are non-negative");
            if exp > horizon {
                return Err(Error::HorizonTooSmall {
                    horizon: horizon as u64,
                    needed: exp as u64,
                });
            }
            let entry = terms.entry(exp).or_insert(0i64);
            *entry += coeff;
            if *entry == 0 {
                terms.remove(&exp);
            }
        }
        Ok(SparseSeries { terms, horizon })
    }

    /// The all-ones series (the truncation of 1/(1-z)).
    pub fn all_ones(horizon: i64) -> Self {
        assert!(horizon >= 0);
        let terms = (0..=horizon).map(|e| (e, 1)).collect();
        SparseSeries { terms, horizon }
    }

    /// The truncation of 1/(1-z^n): ones at multiples of n.
    pub fn geometric(n: i64, horizon: i64) -> Self {
        assert!(n >= 1 && horizon >= 0);
        let terms = (0..=horizon / n).map(|j| (j * n, 1)).collect();
        SparseSeries { terms, horizon }
    }

    pub fn horizon(&self) -> i64 {
        self.horizon
    }

    /// Coefficient at `exp`, or `None` beyond the horizon where the series
    /// carries no information.
    pub fn coeff(&self, exp: i64) -> Option<i64> {
        if exp < 0 || exp > self.horizon {
            return None;
        }
        Some(self.terms.get(&exp).copied().unwrap_or(0))
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn lowest_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Largest exponent with a nonzero coefficient (the degree, for a
    /// series known to be a polynomial within its horizon).
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True iff every coefficient is 0 or 1.
    pub fn is_characteristic(&self) -> bool {
        self.terms.values().all(|&c| c == 1)
    }

    /// Sum of all coefficients: the exact value at z = 1 of the truncated
    /// polynomial.
    pub fn sum_coefficients(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Value of the truncated polynomial at a real point.
    pub fn eval_f64(&self, z: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&e, &c)| c as f64 * powi64(z, e))
            .sum()
    }

    /// Value of the truncated polynomial at a complex point.
    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|(&e, &c)| cpowi64(z, e).scale(c as f64))
            .sum()
    }

    /// Restriction to a smaller horizon. Panics if `new_horizon` exceeds
    /// the current one: that would fabricate unknown coefficients.
    pub fn truncate(&self, new_horizon: i64) -> Self {
        assert!(
            (0..=self.horizon).contains(&new_horizon),
            "cannot extend horizon {} to {}",
            self.horizon,
            new_horizon
        );
        let terms = self
            .terms
            .range(..=new_horizon)
            .map(|(&e, &c)| (e, c))
            .collect();
        SparseSeries { terms, horizon: new_horizon }
    }

    /// The substitution z -> z^k. Exponents scale by k; the horizon
    /// becomes `k*horizon + k - 1` because the coefficients strictly
    /// between scaled exponents are known to be zero.
    pub fn dilate(&self, k: i64) -> Self {
        assert!(k >= 1);
        let terms = self.terms.iter().map(|(&e, &c)| (e * k, c)).collect();
        SparseSeries { terms, horizon: self.horizon * k + (k - 1) }
    }

    /// True iff the two series have equal coefficients at every exponent
    /// up to `up_to`, which must be within both horizons.
    pub fn agrees_with(&self, other: &SparseSeries, up_to: i64) -> bool {
        assert!(up_to <= self.horizon && up_to <= other.horizon);
        let mine = self.terms.range(..=up_to);
        let theirs = other.terms.range(..=up_to);
        mine.eq(theirs)
    }

    /// The set of exponents carrying coefficient 1, for a characteristic
    /// series; `NotCharacteristic` otherwise.
    pub fn tau(&self) -> Result<BTreeSet<i64>> {
        for (&e, &c) in &self.terms {
            if c != 1 {
                return Err(Error::NotCharacteristic { exponent: e as u64, coeff: c });
            }
        }
        Ok(self.terms.keys().copied().collect())
    }
}

impl std::ops::Add for &SparseSeries {
    type Output = SparseSeries;

    fn add(self, rhs: &SparseSeries) -> SparseSeries {
        let horizon = self.horizon.min(rhs.horizon);
        let mut terms: BTreeMap<i64, i64> = self.terms.range(..=horizon).map(|(&e, &c)| (e, c)).collect();
        for (&e, &c) in rhs.terms.range(..=horizon) {
            let entry = terms.entry(e).or_insert(0);
            *entry += c;
            if *entry == 0 {
                terms.remove(&e);
            }
        }
        SparseSeries { terms, horizon }
    }
}

impl std::ops::Sub for &SparseSeries {
    type Output = SparseSeries;

    fn sub(self, rhs: &SparseSeries) -> SparseSeries {
        let horizon = self.horizon.min(rhs.horizon);
        let mut terms: BTreeMap<i64, i64> = self.terms.range(..=horizon).map(|(&e, &c)| (e, c)).collect();
        for (&e, &c) in rhs.terms.range(..=horizon) {
            let entry = terms.entry(e).or_insert(0);
            *entry -= c;
            if *entry == 0 {
                terms.remove(&e);
            }
        }
        SparseSeries { terms, horizon }
    }
}

/// Full polynomial product. The result is certain only up to the smaller
/// horizon, because unknown high-order terms of one factor could otherwise
/// contribute; build polynomial factors with a large horizon when the full
/// product is wanted.
impl std::ops::Mul for &SparseSeries {
    type Output = SparseSeries;

    fn mul(self, rhs: &SparseSeries) -> SparseSeries {
        let horizon = self.horizon.min(rhs.horizon);
        let mut terms: BTreeMap<i64, i64> = BTreeMap::new();
        for (&e1, &c1) in &self.terms {
            if e1 > horizon {
                break;
            }
            for (&e2, &c2) in rhs.terms.range(..=horizon - e1) {
                let entry = terms.entry(e1 + e2).or_insert(0);
                *entry += c1 * c2;
                if *entry == 0 {
                    terms.remove(&(e1 + e2));
                }
            }
        }
        SparseSeries { terms, horizon }
    }
}

impl std::fmt::Display for SparseSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, &c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (e, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "z")?,
                (1, m) => write!(f, "{m} z")?,
                (_, 1) => write!(f, "z^{e}")?,
                (_, m) => write!(f, "{m} z^{e}")?,
            }
        }
        Ok(())
    }
}

/// The characteristic series of a finite subset of the naturals: coefficient
/// 1 at each element. Fails with `HorizonTooSmall` if an element lies
/// beyond the horizon.
pub fn tau_inverse(elements: impl IntoIterator<Item = i64>, horizon: i64) -> Result<SparseSeries> {
    SparseSeries::from_terms(elements.into_iter().map(|e| (e, 1)), horizon)
}

/// Termwise coefficient product. Commutative and associative; the all-ones
/// series is its identity.
pub fn hadamard(u: &SparseSeries, v: &SparseSeries) -> SparseSeries {
    let horizon = u.horizon().min(v.horizon());
    let (small, large) = if u.num_terms() <= v.num_terms() { (u, v) } else { (v, u) };
    let terms = small
        .terms
        .range(..=horizon)
        .filter_map(|(&e, &c1)| {
            let c2 = large.terms.get(&e).copied().unwrap_or(0);
            (c2 != 0).then_some((e, c1 * c2))
        })
        .collect();
    SparseSeries { terms, horizon }
}

/// The exponent-doubling variant of the termwise product: the coefficient
/// at `2n` is the product of the two coefficients at `n`, and every odd
/// coefficient is zero. Commutative but not associative.
pub fn circ(u: &SparseSeries, v: &SparseSeries) -> SparseSeries {
    let inner = u.horizon().min(v.horizon());
    let terms = u
        .terms
        .range(..=inner)
        .filter_map(|(&e, &c1)| {
            let c2 = v.terms.get(&e).copied().unwrap_or(0);
            (c2 != 0).then_some((2 * e, c1 * c2))
        })
        .collect();
    SparseSeries { terms, horizon: 2 * inner }
}

/// Termwise product of any non-empty list of series, folded left.
pub fn hadamard_multi(us: &[SparseSeries]) -> SparseSeries {
    assert!(!us.is_empty(), "termwise product needs at least one operand");
    let mut acc = us[0].clone();
    for u in &us[1..] {
        acc = hadamard(&acc, u);
    }
    acc
}

/// Keeps exactly the coefficients at exponents divisible by n. This is the
/// exact, coefficient-level form of averaging the series over the n-th
/// roots of unity.
pub fn multisection(u: &SparseSeries, n: i64) -> SparseSeries {
    assert!(n >= 1);
    let terms = u.terms.iter().filter(|(&e, _)| e % n == 0).map(|(&e, &c)| (e, c)).collect();
    SparseSeries { terms, horizon: u.horizon }
}

/// Intersection of two sets presented as characteristic series: the
/// termwise product, with the 0/1 contract checked on both operands.
pub fn intersect_sets_series(a: &SparseSeries, b: &SparseSeries) -> Result<SparseSeries> {
    for s in [a, b] {
        if let Some((&e, &c)) = s.terms.iter().find(|(_, &c)| c != 1) {
            return Err(Error::NotCharacteristic { exponent: e as u64, coeff: c });
        }
    }
    Ok(hadamard(a, b))
}

/// Characteristic series of the semigroup generated by a pair (coprime or
/// not), truncated at `horizon`: forward closure from 0.
pub fn pair_characteristic_series(a: i64, b: i64, horizon: i64) -> Result<SparseSeries> {
    assert!(a > 0 && b > 0 && horizon >= 0);
    let len = horizon as usize + 1;
    if len > MAX_DENSE_LEN {
        return Err(Error::Overflow(format!(
            "dense expansion of {len} coefficients exceeds the cap of {MAX_DENSE_LEN}"
        )));
    }
    let mut member = vec![false; len];
    member[0] = true;
    for d in [a, b] {
        let d = d as usize;
        for n in d..len {
            if member[n - d] {
                member[n] = true;
            }
        }
    }
    let terms = member
        .iter()
        .enumerate()
        .filter_map(|(n, &m)| m.then_some((n as i64, 1)))
        .collect();
    Ok(SparseSeries { terms, horizon })
}

/// The auxiliary series of axis k: the characteristic series of the
/// semigroup of the other two generators, restricted to positive multiples
/// of d_k. Its lowest exponent is `a_kk * d_k`, which realizes the minimal
/// relation diagonal exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiSeries {
    base: SparseSeries,
    k: usize,
    gens: Generators,
}

impl PsiSeries {
    pub fn base(&self) -> &SparseSeries {
        &self.base
    }

    pub fn axis(&self) -> usize {
        self.k
    }

    pub fn gens(&self) -> &Generators {
        &self.gens
    }

    pub fn lowest_exponent(&self) -> Option<i64> {
        self.base.lowest_exponent()
    }

    /// The multiples b with `b * d_k` representable by the other two
    /// generators, up to the horizon: exponents divided by d_k.
    pub fn multiple_indices(&self) -> Vec<i64> {
        let dk = self.gens.d(self.k);
        self.base.terms().map(|(e, _)| e / dk).collect()
    }
}

/// Builds the axis-k auxiliary series up to `horizon`.
///
/// The horizon must cover at least the product of the other two
/// generators; callers that need the first term guaranteed should grow the
/// horizon on an empty result (the product bound alone does not always
/// reach `a_kk * d_k`; see `johnson::diagonal_via_psi`).
pub fn psi(gens: &Generators, k: usize, horizon: i64) -> Result<PsiSeries> {
    assert_eq!(gens.m(), 3, "the auxiliary series is defined for triples");
    assert!((1..=3).contains(&k), "axis {k} out of range");
    let (dj, dl) = gens.other_pair(k);
    let dk = gens.d(k);
    let needed = dj * dl;
    if horizon < needed {
        return Err(Error::HorizonTooSmall {
            horizon: horizon as u64,
            needed: needed as u64,
        });
    }
    let pair = pair_characteristic_series(dj, dl, horizon)?;
    let sieved = multisection(&pair, dk);
    let base = &sieved - &SparseSeries::one(horizon);
    debug_assert!(base.is_characteristic());
    debug_assert!(base.terms().all(|(e, _)| e % dk == 0 && e > 0));
    Ok(PsiSeries { base, k, gens: *gens })
}

/// Numeric contour realization of the axis-k auxiliary series at a point z.
///
/// The termwise product underlying the series is evaluated as a mean over
/// `m_points` quadrature nodes on a circle of radius `r < 1`, where both
/// rational factors are pole-free; the literal boundary integral on the
/// unit circle would run through the poles of the pair series. Requires
/// `|z| < r < 1`; exact computations never use this path.
pub fn psi_numeric(
    gens: &Generators,
    k: usize,
    z: Complex64,
    m_points: usize,
    r: f64,
) -> Result<Complex64> {
    assert_eq!(gens.m(), 3);
    assert!((1..=3).contains(&k), "axis {k} out of range");
    assert!(m_points >= 1);
    if !(z.norm() < r && r < 1.0) {
        return Err(Error::InvalidContour { z_abs: z.norm(), r });
    }
    let (dj, dl) = gens.other_pair(k);
    let dk = gens.d(k);
    let lcm = num_integer::lcm(dj, dl);
    let one = Complex64::new(1.0, 0.0);
    // Pair series as a rational function: (1 - s^lcm) / ((1 - s^dj)(1 - s^dl)).
    let pair_value = |s: Complex64| -> Complex64 {
        (one - cpowi64(s, lcm)) / ((one - cpowi64(s, dj)) * (one - cpowi64(s, dl)))
    };
    let mut sum = Complex64::new(0.0, 0.0);
    for i in 0..m_points {
        let theta = 2.0 * std::f64::consts::PI * i as f64 / m_points as f64;
        let s = Complex64::from_polar(r, theta);
        let w = (z / r) * Complex64::from_polar(1.0, -theta);
        let geom = one / (one - cpowi64(w, dk));
        sum += pair_value(s) * geom;
    }
    Ok(sum / m_points as f64 - 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(raw: &[i64]) -> Generators {
        Generators::validate(raw).unwrap()
    }

    #[test]
    fn tau_inverse_examples() {
        let s = tau_inverse([1, 2, 4, 7], 10).unwrap();
        assert_eq!(s.terms().collect::<Vec<_>>(), vec![(1, 1), (2, 1), (4, 1), (7, 1)]);
        assert!(tau_inverse([], 5).unwrap().is_zero());
        assert_eq!(
            tau_inverse([1, 11], 10),
            Err(Error::HorizonTooSmall { horizon: 10, needed: 11 })
        );
    }

    #[test]
    fn tau_round_trip() {
        let set = BTreeSet::from([0i64, 3, 9, 10]);
        let s = tau_inverse(set.iter().copied(), 12).unwrap();
        assert_eq!(s.tau().unwrap(), set);
    }

    #[test]
    fn hadamard_identity_and_orthogonality() {
        let u = SparseSeries::from_terms([(0, 1), (3, -2), (7, 5)], 9).unwrap();
        assert_eq!(hadamard(&u, &SparseSeries::all_ones(9)), u);
        let z1 = SparseSeries::monomial(1, 1, 4);
        let z2 = SparseSeries::monomial(2, 1, 4);
        assert!(hadamard(&z1, &z2).is_zero());
    }

    #[test]
    fn hadamard_lcm_rule() {
        let a = SparseSeries::geometric(2, 12);
        let b = SparseSeries::geometric(3, 12);
        let product = hadamard(&a, &b);
        assert_eq!(product, SparseSeries::geometric(6, 12));
        assert_eq!(
            product.terms().map(|(e, _)| e).collect::<Vec<_>>(),
            vec![0, 6, 12]
        );
    }

    #[test]
    fn circ_single_terms_and_doubling() {
        let z = SparseSeries::monomial(1, 1, 1);
        let sq = circ(&z, &z);
        assert_eq!(sq, SparseSeries::monomial(2, 1, 2));

        let u = SparseSeries::from_terms([(0, 1), (2, 3)], 4).unwrap();
        let ones = SparseSeries::all_ones(4);
        let doubled = circ(&u, &ones);
        assert_eq!(doubled, SparseSeries::from_terms([(0, 1), (4, 3)], 8).unwrap());
    }

    #[test]
    fn circ_is_not_associative() {
        let z = SparseSeries::monomial(1, 1, 4);
        let z2 = SparseSeries::monomial(2, 1, 4);
        let left = circ(&circ(&z, &z), &z2);
        assert_eq!(left.terms().collect::<Vec<_>>(), vec![(4, 1)]);
        let right = circ(&z, &circ(&z, &z2));
        assert!(right.is_zero());
    }

    #[test]
    fn hadamard_multi_examples() {
        let gs = [
            SparseSeries::geometric(2, 30),
            SparseSeries::geometric(3, 30),
            SparseSeries::geometric(5, 30),
        ];
        let p = hadamard_multi(&gs);
        assert_eq!(p.terms().map(|(e, _)| e).collect::<Vec<_>>(), vec![0, 30]);

        let single = hadamard_multi(&gs[..1]);
        assert_eq!(single, gs[0]);

        let with_zero = [gs[0].clone(), SparseSeries::zero(30)];
        assert!(hadamard_multi(&with_zero).is_zero());
    }

    #[test]
    fn multisection_examples() {
        let u = SparseSeries::from_terms([(0, 1), (2, 1), (3, 1)], 3).unwrap();
        assert_eq!(
            multisection(&u, 2).terms().collect::<Vec<_>>(),
            vec![(0, 1), (2, 1)]
        );
        assert_eq!(multisection(&u, 1), u);

        let h = pair_characteristic_series(3, 5, 24).unwrap();
        let quads = multisection(&h, 4);
        assert_eq!(
            quads.terms().map(|(e, _)| e).collect::<Vec<_>>(),
            vec![0, 8, 12, 16, 20, 24]
        );
    }

    #[test]
    fn intersection_of_sets() {
        let a = tau_inverse([1, 2, 4, 7], 10).unwrap();
        let b = tau_inverse([4, 8], 10).unwrap();
        let i = intersect_sets_series(&a, &b).unwrap();
        assert_eq!(i.terms().collect::<Vec<_>>(), vec![(4, 1)]);

        assert_eq!(intersect_sets_series(&a, &a).unwrap(), a);

        let c = tau_inverse([3, 5], 10).unwrap();
        assert!(intersect_sets_series(&b, &c).unwrap().is_zero());

        let bad = SparseSeries::from_terms([(2, 2)], 10).unwrap();
        assert_eq!(
            intersect_sets_series(&a, &bad),
            Err(Error::NotCharacteristic { exponent: 2, coeff: 2 })
        );
    }

    #[test]
    fn psi_known_lowest_exponents() {
        let g = gens(&[23, 29, 44]);
        let p = psi(&g, 3, 23 * 29).unwrap();
        assert_eq!(p.lowest_exponent(), Some(220));

        let g = gens(&[3, 4, 5]);
        let p = psi(&g, 3, 25).unwrap();
        assert_eq!(
            p.base().terms().map(|(e, _)| e).collect::<Vec<_>>(),
            vec![10, 15, 20, 25]
        );
        let p = psi(&g, 1, 20).unwrap();
        assert_eq!(p.lowest_exponent(), Some(9));
        assert_eq!(p.multiple_indices()[0], 3);
    }

    #[test]
    fn psi_requires_pair_product_horizon() {
        let g = gens(&[3, 4, 5]);
        assert_eq!(
            psi(&g, 3, 11),
            Err(Error::HorizonTooSmall { horizon: 11, needed: 12 })
        );
    }

    #[test]
    fn psi_numeric_matches_exact_series() {
        let g = gens(&[3, 4, 5]);
        let exact = psi(&g, 3, 80).unwrap();
        let z = Complex64::new(0.3, 0.0);
        let numeric = psi_numeric(&g, 3, z, 1 << 14, 0.9).unwrap();
        let series_value = exact.base().eval_f64(0.3);
        assert!((numeric.re - series_value).abs() < 1e-6);
        assert!(numeric.im.abs() < 1e-9, "real inputs give real values");

        let at_zero = psi_numeric(&g, 3, Complex64::new(0.0, 0.0), 1 << 12, 0.9).unwrap();
        assert!(at_zero.norm() < 1e-9);
    }

    #[test]
    fn psi_numeric_rejects_bad_contours() {
        let g = gens(&[3, 4, 5]);
        let z = Complex64::new(0.5, 0.0);
        assert!(matches!(
            psi_numeric(&g, 3, z, 64, 0.4),
            Err(Error::InvalidContour { .. })
        ));
        assert!(matches!(
            psi_numeric(&g, 3, z, 64, 1.1),
            Err(Error::InvalidContour { .. })
        ));
    }

    #[test]
    fn display_formats_signed_terms() {
        let q = SparseSeries::from_terms(
            [(0, 1), (161, -1), (203, -1), (220, -1), (249, 1), (335, 1)],
            335,
        )
        .unwrap();
        assert_eq!(
            q.to_string(),
            "1 - z^161 - z^203 - z^220 + z^249 + z^335"
        );
        assert_eq!(SparseSeries::zero(3).to_string(), "0");
    }

    #[test]
    fn dilate_and_bridge() {
        let u = SparseSeries::from_terms([(0, 2), (3, 1)], 5).unwrap();
        let v = SparseSeries::from_terms([(0, 1), (3, 4), (5, 1)], 5).unwrap();
        let bridge = hadamard(&u.dilate(2), &v.dilate(2));
        let direct = circ(&u, &v);
        assert!(bridge.agrees_with(&direct, 10));
    }
}
