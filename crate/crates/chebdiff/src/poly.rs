//! Polynomial representations and basis conversions.
//!
//! Two sparse representations live here: [`MonomialPoly`] (degree ->
//! coefficient in powers of x) and [`ChebExpansion`] (degree -> coefficient
//! in a tagged Chebyshev family). Both are canonical: zero coefficients are
//! never stored, so derived equality is mathematical equality.
//!
//! The module also owns the classical monomial forms of T_n and U_n, the
//! inversion of x^j into the U basis, the two directions of conversion built
//! on those, and exact Clenshaw evaluation. Serialized forms (JSON objects
//! with decimal-degree keys and lowest-terms rational values, emitted in
//! descending degree order) are shared by the CLI and the C ABI.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::de::{Deserializer, Error as _};
use serde::ser::{SerializeMap, SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{binomial, ExactInt, ExactRational};
use crate::Error;

/// The two classical Chebyshev families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChebBasis {
    /// T_n, serialized as `"T"`.
    FirstKind,
    /// U_n, serialized as `"U"`.
    SecondKind,
}

impl ChebBasis {
    /// One-letter name used in every serialized form.
    pub fn symbol(self) -> &'static str {
        match self {
            ChebBasis::FirstKind => "T",
            ChebBasis::SecondKind => "U",
        }
    }

    /// Monomial form of the degree-n basis polynomial of this family.
    pub fn monomial(self, n: usize) -> MonomialPoly {
        match self {
            ChebBasis::FirstKind => chebyshev_t_monomial(n),
            ChebBasis::SecondKind => chebyshev_u_monomial(n),
        }
    }
}

impl fmt::Display for ChebBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for ChebBasis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "T" => Ok(ChebBasis::FirstKind),
            "U" => Ok(ChebBasis::SecondKind),
            other => Err(Error::ParseBasis(other.to_string())),
        }
    }
}

/// Accumulate (degree, coefficient) terms into canonical form: repeated
/// degrees are summed, and anything that ends at zero is dropped.
fn collect_terms<I>(terms: I) -> BTreeMap<usize, ExactRational>
where
    I: IntoIterator<Item = (usize, ExactRational)>,
{
    let mut coeffs: BTreeMap<usize, ExactRational> = BTreeMap::new();
    for (degree, c) in terms {
        if c.is_zero() {
            continue;
        }
        match coeffs.entry(degree) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }
    coeffs
}

/// x^e for a rational already in lowest terms; numerator and denominator
/// powers stay coprime, so no reduction pass is needed.
fn rational_pow(x: &ExactRational, e: usize) -> ExactRational {
    ExactRational::new_raw(x.numer().pow(e as u32), x.denom().pow(e as u32))
}

/// Sparse polynomial in the monomial basis.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MonomialPoly {
    coeffs: BTreeMap<usize, ExactRational>,
}

impl MonomialPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// Build from terms; degrees may repeat and zero contributions are dropped.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, ExactRational)>,
    {
        MonomialPoly {
            coeffs: collect_terms(terms),
        }
    }

    /// Coefficient of x^degree (zero when absent).
    pub fn coeff(&self, degree: usize) -> ExactRational {
        self.coeffs
            .get(&degree)
            .cloned()
            .unwrap_or_else(ExactRational::zero)
    }

    /// Terms in ascending degree order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &ExactRational)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    /// Highest degree with a nonzero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Exact evaluation: Horner over descending degrees, bridging sparse
    /// gaps with a single power per gap.
    pub fn eval(&self, x: &ExactRational) -> ExactRational {
        let mut acc = ExactRational::zero();
        let mut last_degree: Option<usize> = None;
        for (degree, c) in self.coeffs.iter().rev() {
            if let Some(prev) = last_degree {
                acc *= rational_pow(x, prev - degree);
            }
            acc += c;
            last_degree = Some(*degree);
        }
        match last_degree {
            Some(lowest) if lowest > 0 => acc * rational_pow(x, lowest),
            _ => acc,
        }
    }
}

/// Sparse expansion in a Chebyshev basis, tagged with its family.
///
/// Equality requires the same family and the same canonical coefficient map;
/// the degree-k key holds the coefficient of T_k or U_k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChebExpansion {
    basis: ChebBasis,
    coeffs: BTreeMap<usize, ExactRational>,
}

impl ChebExpansion {
    /// The zero expansion in the given family.
    pub fn zero(basis: ChebBasis) -> Self {
        ChebExpansion {
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// Build from terms; degrees may repeat and zero contributions are dropped.
    pub fn from_terms<I>(basis: ChebBasis, terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, ExactRational)>,
    {
        ChebExpansion {
            basis,
            coeffs: collect_terms(terms),
        }
    }

    pub fn basis(&self) -> ChebBasis {
        self.basis
    }

    /// Coefficient of the degree-n basis polynomial (zero when absent).
    pub fn coeff(&self, degree: usize) -> ExactRational {
        self.coeffs
            .get(&degree)
            .cloned()
            .unwrap_or_else(ExactRational::zero)
    }

    /// Terms in ascending degree order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &ExactRational)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    /// Highest degree with a nonzero coefficient; `None` for the zero expansion.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Raw coefficient map, for serializers elsewhere in the crate.
    pub(crate) fn coeff_map(&self) -> &BTreeMap<usize, ExactRational> {
        &self.coeffs
    }
}

/// Monomial coefficients of U_n:
/// sum over 0 <= k <= n/2 of (-1)^k C(n-k, k) (2x)^(n-2k).
///
/// Degree n with leading coefficient 2^n; only every other degree appears.
pub fn chebyshev_u_monomial(n: usize) -> MonomialPoly {
    let mut terms = Vec::with_capacity(n / 2 + 1);
    for k in 0..=n / 2 {
        let degree = n - 2 * k;
        let mut c: ExactInt = binomial((n - k) as u64, k as i64) << degree;
        if k % 2 == 1 {
            c = -c;
        }
        terms.push((degree, ExactRational::from_integer(c)));
    }
    MonomialPoly::from_terms(terms)
}

/// Monomial coefficients of T_n:
/// sum over 0 <= k <= n/2 of (-1)^k n/(n-k) C(n-k, k) 2^(n-1-2k) x^(n-2k),
/// with T_0 = 1 handled separately (the n/(n-k) factor degenerates there).
///
/// The power of two is negative exactly when n is even and k = n/2, so the
/// term arithmetic runs over rationals even though every final coefficient
/// is an integer.
pub fn chebyshev_t_monomial(n: usize) -> MonomialPoly {
    if n == 0 {
        return MonomialPoly::from_terms([(0, ExactRational::one())]);
    }
    let mut terms = Vec::with_capacity(n / 2 + 1);
    for k in 0..=n / 2 {
        let degree = n - 2 * k;
        let ratio = ExactRational::new(
            ExactInt::from(n) * binomial((n - k) as u64, k as i64),
            ExactInt::from(n - k),
        );
        let e = n as i64 - 1 - 2 * k as i64;
        let two_pow = if e >= 0 {
            ExactRational::from_integer(ExactInt::one() << e as usize)
        } else {
            ExactRational::new(ExactInt::one(), ExactInt::one() << (-e) as usize)
        };
        let mut c = ratio * two_pow;
        if k % 2 == 1 {
            c = -c;
        }
        terms.push((degree, c));
    }
    MonomialPoly::from_terms(terms)
}

/// U-basis expansion of the single power x^j:
/// x^j = 2^(-j) sum over 0 <= h <= j/2 of [C(j, h) - C(j, h-1)] U_(j-2h).
///
/// Every bracket weight is strictly positive on this range, so the expansion
/// has exactly floor(j/2) + 1 terms. The weights are produced by updating
/// one binomial row entry at a time (C(j, h+1) = C(j, h)(j-h)/(h+1)), which
/// keeps the whole call linear in j up to big-int costs.
pub fn monomial_power_to_u(j: usize) -> ChebExpansion {
    let scale = ExactRational::new(ExactInt::one(), ExactInt::one() << j);
    let mut terms = Vec::with_capacity(j / 2 + 1);
    let mut choose = ExactInt::one(); // C(j, h)
    let mut choose_prev = ExactInt::zero(); // C(j, h-1)
    for h in 0..=j / 2 {
        let weight = &choose - &choose_prev;
        terms.push((j - 2 * h, ExactRational::from_integer(weight) * &scale));
        let next = &choose * ((j - h) as u64) / ((h + 1) as u64);
        choose_prev = std::mem::replace(&mut choose, next);
    }
    ChebExpansion::from_terms(ChebBasis::SecondKind, terms)
}

/// U-basis expansion of an arbitrary monomial polynomial, by expanding each
/// power through [`monomial_power_to_u`] and summing by linearity.
pub fn monomial_to_u(p: &MonomialPoly) -> ChebExpansion {
    let mut terms = Vec::new();
    for (j, c) in p.terms() {
        for (degree, weight) in monomial_power_to_u(j).terms() {
            terms.push((degree, weight * c));
        }
    }
    ChebExpansion::from_terms(ChebBasis::SecondKind, terms)
}

/// Monomial form of an expansion, substituting the classical monomial form
/// of each basis polynomial and summing by linearity.
pub fn expansion_to_monomial(e: &ChebExpansion) -> MonomialPoly {
    let mut terms = Vec::new();
    for (n, c) in e.terms() {
        for (degree, weight) in e.basis().monomial(n).terms() {
            terms.push((degree, weight * c));
        }
    }
    MonomialPoly::from_terms(terms)
}

/// Exact Clenshaw evaluation of an expansion at a rational point.
///
/// Both families satisfy p_(k+1) = 2x p_k - p_(k-1), so the backward
/// recurrence b_k = c_k + 2x b_(k+1) - b_(k+2) is shared; the families
/// differ only in how the two lowest states combine (U: b_0, T: b_0 - x b_1).
pub fn clenshaw_eval(e: &ChebExpansion, x: &ExactRational) -> ExactRational {
    let Some(top) = e.degree() else {
        return ExactRational::zero();
    };
    let two_x = x + x;
    let mut b_next = ExactRational::zero(); // b_(k+1)
    let mut b_next2 = ExactRational::zero(); // b_(k+2)
    for k in (0..=top).rev() {
        let b = e.coeff(k) + &two_x * &b_next - &b_next2;
        b_next2 = std::mem::replace(&mut b_next, b);
    }
    match e.basis() {
        ChebBasis::SecondKind => b_next,
        ChebBasis::FirstKind => b_next - x * &b_next2,
    }
}

/// Parse `"p"` or `"p/q"` into an exact rational; the result is reduced and
/// a zero denominator is rejected.
pub fn parse_rational(s: &str) -> Result<ExactRational, Error> {
    let trimmed = s.trim();
    let (numer_s, denom_s) = match trimmed.split_once('/') {
        Some((a, b)) => (a, b),
        None => (trimmed, "1"),
    };
    let numer =
        ExactInt::from_str(numer_s.trim()).map_err(|_| Error::ParseRational(s.to_string()))?;
    let denom =
        ExactInt::from_str(denom_s.trim()).map_err(|_| Error::ParseRational(s.to_string()))?;
    if denom.is_zero() {
        return Err(Error::ParseRational(s.to_string()));
    }
    Ok(ExactRational::new(numer, denom))
}

/// Coefficient maps serialize as JSON objects with decimal-degree keys and
/// lowest-terms rational values ("-3", "1/8"), highest degree first.
pub(crate) struct CoeffMapSer<'a>(pub(crate) &'a BTreeMap<usize, ExactRational>);

impl Serialize for CoeffMapSer<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (degree, c) in self.0.iter().rev() {
            map.serialize_entry(&degree.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

/// Parse the string-keyed form a coefficient map is serialized as.
pub(crate) fn terms_from_repr(
    map: BTreeMap<String, String>,
) -> Result<Vec<(usize, ExactRational)>, Error> {
    let mut terms = Vec::with_capacity(map.len());
    for (key, value) in map {
        let degree: usize = key
            .trim()
            .parse()
            .map_err(|_| Error::ParseDegree(key.clone()))?;
        terms.push((degree, parse_rational(&value)?));
    }
    Ok(terms)
}

impl Serialize for MonomialPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("MonomialPoly", 1)?;
        st.serialize_field("coeffs", &CoeffMapSer(&self.coeffs))?;
        st.end()
    }
}

#[derive(Deserialize)]
struct MonomialRepr {
    coeffs: BTreeMap<String, String>,
}

impl<'de> Deserialize<'de> for MonomialPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = MonomialRepr::deserialize(deserializer)?;
        let terms = terms_from_repr(repr.coeffs).map_err(D::Error::custom)?;
        Ok(MonomialPoly::from_terms(terms))
    }
}

impl Serialize for ChebExpansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ChebExpansion", 2)?;
        st.serialize_field("basis", self.basis.symbol())?;
        st.serialize_field("coeffs", &CoeffMapSer(&self.coeffs))?;
        st.end()
    }
}

#[derive(Deserialize)]
struct ExpansionRepr {
    basis: String,
    coeffs: BTreeMap<String, String>,
}

impl<'de> Deserialize<'de> for ChebExpansion {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = ExpansionRepr::deserialize(deserializer)?;
        let basis: ChebBasis = repr.basis.parse().map_err(D::Error::custom)?;
        let terms = terms_from_repr(repr.coeffs).map_err(D::Error::custom)?;
        Ok(ChebExpansion::from_terms(basis, terms))
    }
}
