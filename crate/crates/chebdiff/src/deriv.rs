//! Derivatives of Chebyshev polynomials, expressed in the Chebyshev basis.
//!
//! The two closed forms here produce the s-th derivative of U_n (in U) and
//! T_n (in T) in a single pass over floor((n-s)/2) + 1 terms. Alongside them
//! live the routes everything is checked against: the unsimplified double
//! sum the U closed form collapses to, the collapsed inner-sum identity with
//! both of its sides, and a monomial-basis oracle that never touches any
//! closed form. [`DiffMatrix`] packages the closed forms as sparse operator
//! columns.

use num_traits::{One, Zero};
use serde::de::{Deserializer, Error as _};
use serde::ser::{SerializeSeq, SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::combinatorics::{binomial, falling_factorial, iverson, ExactInt, ExactRational};
use crate::poly::{ChebBasis, ChebExpansion, CoeffMapSer, MonomialPoly};
use crate::Error;

/// s-th derivative of U_n as a U-basis expansion, via the closed form
///
/// ```text
/// 2^s sum_(j=0)^((n-s)/2) (n-j)_(s-1) C(s+j-1, s-1) (n-2j-s+1) U_(n-s-2j)
/// ```
///
/// where `(x)_(m)` is the falling factorial. s = 0 is the identity and
/// s > n gives the zero expansion (the sum range is empty). Every surviving
/// coefficient is a strictly positive integer.
pub fn u_derivative_explicit(n: usize, s: usize) -> ChebExpansion {
    if s == 0 {
        return ChebExpansion::from_terms(ChebBasis::SecondKind, [(n, ExactRational::one())]);
    }
    if s > n {
        return ChebExpansion::zero(ChebBasis::SecondKind);
    }
    let (ni, si) = (n as i64, s as i64);
    let scale = ExactInt::one() << s;
    let mut terms = Vec::with_capacity((n - s) / 2 + 1);
    for j in 0..=(n - s) / 2 {
        let ji = j as i64;
        let c = falling_factorial(ni - ji, s as u64 - 1)
            * binomial((si + ji - 1) as u64, si - 1)
            * (ni - 2 * ji - si + 1)
            * &scale;
        terms.push((n - s - 2 * j, ExactRational::from_integer(c)));
    }
    ChebExpansion::from_terms(ChebBasis::SecondKind, terms)
}

/// s-th derivative of T_n as a T-basis expansion, via the closed form
///
/// ```text
/// 2^s sum_(j=0)^((n-s)/2) n (n-1-j)_(s-1) C(s+j-1, s-1) T_(n-s-2j)
///   - [n-s even] 2^(s-1) n ((n+s)/2 - 1)_(s-1) C((n+s)/2 - 1, s-1)
/// ```
///
/// The bracketed correction lands on the T_0 coefficient and exactly halves
/// it, mirroring the halved constant in T-basis series conventions. s = 0 is
/// the identity; s > n gives the zero expansion.
pub fn t_derivative_explicit(n: usize, s: usize) -> ChebExpansion {
    if s == 0 {
        return ChebExpansion::from_terms(ChebBasis::FirstKind, [(n, ExactRational::one())]);
    }
    if s > n {
        return ChebExpansion::zero(ChebBasis::FirstKind);
    }
    let (ni, si) = (n as i64, s as i64);
    let scale = ExactInt::one() << s;
    let mut terms = Vec::with_capacity((n - s) / 2 + 2);
    for j in 0..=(n - s) / 2 {
        let ji = j as i64;
        let c = falling_factorial(ni - 1 - ji, s as u64 - 1)
            * binomial((si + ji - 1) as u64, si - 1)
            * ni
            * &scale;
        terms.push((n - s - 2 * j, ExactRational::from_integer(c)));
    }
    // (n+s)/2 >= 1 whenever 1 <= s <= n, so the subtraction below is safe.
    let half = (n + s) / 2;
    let correction = iverson((n - s).is_multiple_of(2))
        * (ExactInt::one() << (s - 1))
        * ni
        * falling_factorial(half as i64 - 1, s as u64 - 1)
        * binomial((half - 1) as u64, si - 1);
    terms.push((0, ExactRational::from_integer(-correction)));
    ChebExpansion::from_terms(ChebBasis::FirstKind, terms)
}

/// The same derivative as [`u_derivative_explicit`], computed from the
/// unsimplified double sum
///
/// ```text
/// 2^s sum_(j) sum_(k=0)^(j) (-1)^k C(n-k, k) (n-2k)_(s)
///     [C(n-s-2k, j-k) - C(n-s-2k, j-k-1)] U_(n-s-2j)
/// ```
///
/// i.e. with the inner alternating k-sum left uncollapsed. Quadratically
/// more work than the closed form; kept as an independent cross-check of
/// the collapse. The s = 0 and s > n cases are extended to match the
/// closed form (identity and zero).
pub fn u_derivative_triple_sum(n: usize, s: usize) -> ChebExpansion {
    if s == 0 {
        return ChebExpansion::from_terms(ChebBasis::SecondKind, [(n, ExactRational::one())]);
    }
    if s > n {
        return ChebExpansion::zero(ChebBasis::SecondKind);
    }
    let scale = ExactInt::one() << s;
    let mut terms = Vec::with_capacity((n - s) / 2 + 1);
    for j in 0..=(n - s) / 2 {
        let inner = inner_alternating_sum(n, s, j);
        terms.push((n - s - 2 * j, ExactRational::from_integer(inner * &scale)));
    }
    ChebExpansion::from_terms(ChebBasis::SecondKind, terms)
}

/// The alternating k-sum shared by [`u_derivative_triple_sum`] and the
/// left-hand side of [`inner_sum_pair`].
fn inner_alternating_sum(n: usize, s: usize, j: usize) -> ExactInt {
    let (ni, si, ji) = (n as i64, s as i64, j as i64);
    let mut sum = ExactInt::zero();
    for k in 0..=j {
        let ki = k as i64;
        let bracket = binomial((ni - si - 2 * ki) as u64, ji - ki)
            - binomial((ni - si - 2 * ki) as u64, ji - ki - 1);
        let mut term =
            binomial((ni - ki) as u64, ki) * falling_factorial(ni - 2 * ki, s as u64) * bracket;
        if k % 2 == 1 {
            term = -term;
        }
        sum += term;
    }
    sum
}

/// One instance of the collapsed inner-sum identity, carrying both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerSumCase {
    pub n: usize,
    pub s: usize,
    pub j: usize,
    /// The alternating sum over k, computed term by term.
    pub lhs: ExactInt,
    /// The closed form (n-j)_(s-1) C(s+j-1, s-1) (n-2j-s+1).
    pub rhs: ExactInt,
}

impl InnerSumCase {
    /// True when both sides agree.
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Evaluate both sides of the collapsed inner-sum identity
///
/// ```text
/// sum_(k=0)^(j) (-1)^k C(n-k, k) (n-2k)_(s) [C(n-s-2k, j-k) - C(n-s-2k, j-k-1)]
///   = (n-j)_(s-1) C(s+j-1, s-1) (n-2j-s+1)
/// ```
///
/// Only `1 <= s <= n` with `0 <= j <= (n-s)/2` is a valid case; anything
/// else is rejected rather than extended.
pub fn inner_sum_pair(n: usize, s: usize, j: usize) -> Result<InnerSumCase, Error> {
    if s < 1 || s > n || j > (n - s) / 2 {
        return Err(Error::InvalidArgument(format!(
            "inner sum cases require 1 <= s <= n and 0 <= j <= (n-s)/2, got n={n}, s={s}, j={j}"
        )));
    }
    let (ni, si, ji) = (n as i64, s as i64, j as i64);
    let lhs = inner_alternating_sum(n, s, j);
    let rhs = falling_factorial(ni - ji, s as u64 - 1)
        * binomial((si + ji - 1) as u64, si - 1)
        * (ni - 2 * ji - si + 1);
    Ok(InnerSumCase { n, s, j, lhs, rhs })
}

/// Monomial form of the s-th derivative of the degree-n basis polynomial,
/// by repeated term-by-term power-rule differentiation of the classical
/// monomial coefficients. Shares no code with the closed forms; this is the
/// baseline they are verified against.
pub fn derivative_oracle(n: usize, s: usize, basis: ChebBasis) -> MonomialPoly {
    let mut p = basis.monomial(n);
    for _ in 0..s {
        if p.is_zero() {
            break;
        }
        p = differentiate_monomial(&p);
    }
    p
}

/// One power-rule pass: c x^d -> c d x^(d-1).
fn differentiate_monomial(p: &MonomialPoly) -> MonomialPoly {
    MonomialPoly::from_terms(
        p.terms()
            .filter(|&(d, _)| d > 0)
            .map(|(d, c)| (d - 1, c.clone() * ExactInt::from(d))),
    )
}

/// Sparse s-th order differentiation operator on one Chebyshev family.
///
/// Column j holds the closed-form expansion of the j-th basis polynomial's
/// s-th derivative, so applying the operator to a coefficient vector is
/// term-by-term differentiation of the expansion. Entry (i, j) is the U_i
/// (or T_i) coefficient of the derivative of U_j (or T_j); column sparsity
/// means at most floor((j-s)/2) + 1 nonzero rows per column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffMatrix {
    basis: ChebBasis,
    order: usize,
    n_max: usize,
    columns: Vec<ChebExpansion>,
}

impl DiffMatrix {
    /// Assemble the (n_max+1) x (n_max+1) operator of the given order.
    pub fn new(basis: ChebBasis, order: usize, n_max: usize) -> Self {
        let columns = (0..=n_max)
            .map(|j| match basis {
                ChebBasis::FirstKind => t_derivative_explicit(j, order),
                ChebBasis::SecondKind => u_derivative_explicit(j, order),
            })
            .collect();
        DiffMatrix {
            basis,
            order,
            n_max,
            columns,
        }
    }

    pub fn basis(&self) -> ChebBasis {
        self.basis
    }

    /// Derivative order s.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Largest representable degree; the operator is square of side n_max + 1.
    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// The expansion stored in column j.
    pub fn column(&self, j: usize) -> &ChebExpansion {
        &self.columns[j]
    }

    /// Entry at (row, col); zero when absent from the sparse column.
    pub fn entry(&self, row: usize, col: usize) -> ExactRational {
        self.columns[col].coeff(row)
    }

    /// Differentiate an expansion by weighted combination of columns.
    ///
    /// The expansion must live in the operator's basis and fit inside its
    /// degree bound.
    pub fn apply(&self, e: &ChebExpansion) -> Result<ChebExpansion, Error> {
        if e.basis() != self.basis {
            return Err(Error::BasisMismatch {
                expected: self.basis,
                found: e.basis(),
            });
        }
        if let Some(degree) = e.degree() {
            if degree > self.n_max {
                return Err(Error::DegreeOverflow {
                    degree,
                    n_max: self.n_max,
                });
            }
        }
        let mut terms = Vec::new();
        for (j, c) in e.terms() {
            for (i, weight) in self.columns[j].terms() {
                terms.push((i, weight * c));
            }
        }
        Ok(ChebExpansion::from_terms(self.basis, terms))
    }

    /// Dense CSV rendering: header `row\col,0,...,n_max`, one ascending row
    /// per line, every entry as a lowest-terms rational with zero as `0`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("row\\col");
        for j in 0..=self.n_max {
            out.push(',');
            out.push_str(&j.to_string());
        }
        out.push('\n');
        for i in 0..=self.n_max {
            out.push_str(&i.to_string());
            for j in 0..=self.n_max {
                out.push(',');
                out.push_str(&self.entry(i, j).to_string());
            }
            out.push('\n');
        }
        out
    }
}

impl Serialize for DiffMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Columns<'a>(&'a [ChebExpansion]);
        impl Serialize for Columns<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
                for column in self.0 {
                    seq.serialize_element(&CoeffMapSer(column.coeff_map()))?;
                }
                seq.end()
            }
        }

        let mut st = serializer.serialize_struct("DiffMatrix", 4)?;
        st.serialize_field("basis", self.basis.symbol())?;
        st.serialize_field("s", &self.order)?;
        st.serialize_field("n_max", &self.n_max)?;
        st.serialize_field("columns", &Columns(&self.columns))?;
        st.end()
    }
}

#[derive(Deserialize)]
struct MatrixRepr {
    basis: String,
    s: usize,
    n_max: usize,
    columns: Vec<BTreeMap<String, String>>,
}

impl<'de> Deserialize<'de> for DiffMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = MatrixRepr::deserialize(deserializer)?;
        let basis: ChebBasis = repr.basis.parse().map_err(D::Error::custom)?;
        if repr.columns.len() != repr.n_max + 1 {
            return Err(D::Error::custom(format!(
                "matrix with n_max = {} must have {} columns, got {}",
                repr.n_max,
                repr.n_max + 1,
                repr.columns.len()
            )));
        }
        let mut columns = Vec::with_capacity(repr.columns.len());
        for column in repr.columns {
            let terms = crate::poly::terms_from_repr(column).map_err(D::Error::custom)?;
            columns.push(ChebExpansion::from_terms(basis, terms));
        }
        Ok(DiffMatrix {
            basis,
            order: repr.s,
            n_max: repr.n_max,
            columns,
        })
    }
}
