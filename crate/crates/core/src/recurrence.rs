//! Characteristic polynomials, minimal linear recurrences and rational
//! generating functions over the integers.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::graphs::{BaseSpec, Topology};

/// Largest matrix [`char_poly`] accepts.
pub const MAX_CHARPOLY_DIM: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecurrenceError {
    #[error(
        "matrix dimension {dim} exceeds {max}; derive the recurrence from sequence terms instead"
    )]
    DimensionLimit { dim: usize, max: usize },
    #[error("matrix is not square")]
    NotSquare,
    #[error("{have} terms supplied but {need} are required (2 * max_order + 4)")]
    InsufficientTerms { have: usize, need: usize },
    #[error(
        "no recurrence of order <= {max_order} fits; order {best_order} fits the longest prefix"
    )]
    NoRecurrence { max_order: usize, best_order: usize },
    #[error("the order-{order} fit has non-integral coefficients")]
    NonIntegral { order: usize },
}

/// Polynomial with big-integer coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Keeps the terms of degree `<= deg`.
    pub fn truncate(&self, deg: usize) -> Self {
        Self::new(self.coeffs.iter().take(deg + 1).cloned().collect())
    }

    /// Quotient and remainder by a divisor whose leading coefficient is `±1`.
    pub fn div_rem_monic(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.coeffs[dd].clone();
        assert!(
            lead.abs().is_one(),
            "divisor must have a unit leading coefficient"
        );
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + dd] * &lead;
            if q.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * c;
            }
            quot[i] = q;
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_rem_monic(self).1.is_zero()
    }

    /// gcd of all coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }
}

impl fmt::Display for IntPolynomial {
    /// Ascending powers with explicit signs, e.g. `1 - 4*x + x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = match (p, mag.is_one()) {
                (0, _) => mag.to_string(),
                (1, true) => "x".to_string(),
                (1, false) => format!("{mag}*x"),
                (_, true) => format!("x^{p}"),
                (_, false) => format!("{mag}*x^{p}"),
            };
            match (first, c.is_negative()) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Characteristic polynomial `det(x I - M)` by the Faddeev-LeVerrier
/// recursion; the division by `k` at each step is exact over the integers.
pub fn char_poly(m: &[Vec<BigInt>]) -> Result<IntPolynomial, RecurrenceError> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(RecurrenceError::NotSquare);
    }
    if n > MAX_CHARPOLY_DIM {
        return Err(RecurrenceError::DimensionLimit {
            dim: n,
            max: MAX_CHARPOLY_DIM,
        });
    }
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    // aux holds M_k; M_0 = 0
    let mut aux = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        let mut next = mat_mul(m, &aux);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &c[n - k + 1];
        }
        aux = next;
        let trace: BigInt = (0..n)
            .map(|i| (0..n).map(|j| &m[i][j] * &aux[j][i]).sum::<BigInt>())
            .sum();
        let (q, r) = trace.div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero());
        c[n - k] = -q;
    }
    Ok(IntPolynomial::new(c))
}

/// `sum_i p_i T_(n+i) = 0` for every window that fits in `terms`: the
/// scalar form of `p(M) = 0` applied to a sequence read off powers of `M`.
pub fn annihilates(p: &IntPolynomial, terms: &[BigInt]) -> bool {
    let Some(m) = p.degree() else {
        return terms.iter().all(Zero::is_zero);
    };
    (0..terms.len().saturating_sub(m)).all(|n| {
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| c * &terms[n + i])
            .sum::<BigInt>()
            .is_zero()
    })
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

/// `T_n = c_1 T_(n-1) + … + c_d T_(n-d)` together with `T_1 ..= T_d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Recurrence {
    coeffs: Vec<BigInt>,
    initial: Vec<BigInt>,
}

impl Recurrence {
    pub fn new(coeffs: Vec<BigInt>, initial: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "order must be at least 1");
        assert_eq!(coeffs.len(), initial.len(), "one initial term per order");
        Recurrence { coeffs, initial }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// `c_1 ..= c_d`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn initial(&self) -> &[BigInt] {
        &self.initial
    }

    /// `x^d - c_1 x^(d-1) - … - c_d`.
    pub fn polynomial(&self) -> IntPolynomial {
        let d = self.order();
        let mut p = vec![BigInt::zero(); d + 1];
        p[d] = BigInt::one();
        for (i, c) in self.coeffs.iter().enumerate() {
            p[d - 1 - i] = -c;
        }
        IntPolynomial::new(p)
    }

    /// `T_1 ..= T_terms`.
    pub fn terms(&self, terms: usize) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = self.initial.iter().take(terms).cloned().collect();
        while out.len() < terms {
            let n = out.len();
            out.push(
                self.coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, c)| c * &out[n - 1 - i])
                    .sum(),
            );
        }
        out
    }

    /// Index (0-based) of the first term the recurrence fails to reproduce.
    pub fn first_mismatch(&self, terms: &[BigInt]) -> Option<usize> {
        let d = self.order();
        if let Some(i) = terms.iter().zip(&self.initial).position(|(a, b)| a != b) {
            return Some(i);
        }
        (d..terms.len()).find(|&n| predict(&self.coeffs, terms, n) != terms[n])
    }
}

impl fmt::Display for Recurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T(n) =")?;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = if mag.is_one() {
                format!("T(n-{})", i + 1)
            } else {
                format!("{mag}*T(n-{})", i + 1)
            };
            let sign = match (first, c.is_negative()) {
                (true, false) => " ",
                (true, true) => " -",
                (false, false) => " + ",
                (false, true) => " - ",
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        if first {
            write!(f, " 0")?;
        }
        Ok(())
    }
}

fn predict(coeffs: &[BigInt], terms: &[BigInt], n: usize) -> BigInt {
    coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| c * &terms[n - 1 - i])
        .sum()
}

/// Lowest-order recurrence with constant coefficients fitting every term.
///
/// For each order `d` the `d x d` Hankel system built from the first `2d`
/// terms is solved exactly; the first solution that reproduces all terms
/// wins. Orders with a singular Hankel block are skipped.
pub fn minimal_recurrence_from_terms(
    terms: &[BigInt],
    max_order: usize,
) -> Result<Recurrence, RecurrenceError> {
    let need = 2 * max_order + 4;
    if terms.len() < need || max_order == 0 {
        return Err(RecurrenceError::InsufficientTerms {
            have: terms.len(),
            need: need.max(6),
        });
    }
    if terms.iter().all(Zero::is_zero) {
        return Ok(Recurrence::new(vec![BigInt::zero()], vec![BigInt::zero()]));
    }
    let mut best = (0, 0);
    for d in 1..=max_order {
        let rows: Vec<Vec<BigInt>> = (0..d)
            .map(|i| {
                let mut row: Vec<BigInt> = (0..d).map(|j| terms[d - 1 + i - j].clone()).collect();
                row.push(terms[d + i].clone());
                row
            })
            .collect();
        let Some(solution) = solve_exact(rows) else {
            continue;
        };
        if solution.iter().any(|x| !x.is_integer()) {
            // a rational fit that also reproduces every term is still a bug-level surprise
            let coeffs: Vec<BigRational> = solution;
            let fits = (d..terms.len()).all(|n| {
                let p: BigRational = coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, c)| c * BigRational::from(terms[n - 1 - i].clone()))
                    .sum();
                p == BigRational::from(terms[n].clone())
            });
            if fits {
                return Err(RecurrenceError::NonIntegral { order: d });
            }
            continue;
        }
        let coeffs: Vec<BigInt> = solution.into_iter().map(|x| x.to_integer()).collect();
        let fitted = (d..terms.len())
            .take_while(|&n| predict(&coeffs, terms, n) == terms[n])
            .count();
        if d + fitted == terms.len() {
            return Ok(Recurrence::new(coeffs, terms[..d].to_vec()));
        }
        if fitted > best.1 {
            best = (d, fitted);
        }
    }
    Err(RecurrenceError::NoRecurrence {
        max_order,
        best_order: best.0,
    })
}

/// Solves a square system given as augmented rows `[A | b]`. Fraction-free
/// forward elimination, rational back substitution. `None` if singular.
fn solve_exact(mut a: Vec<Vec<BigInt>>) -> Option<Vec<BigRational>> {
    let n = a.len();
    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = (k..n).find(|&i| !a[i][k].is_zero())?;
        a.swap(pivot, k);
        let (top, rest) = a.split_at_mut(k + 1);
        let p = &top[k];
        for row in rest.iter_mut() {
            let factor = row[k].clone();
            for j in k + 1..=n {
                row[j] = (&row[j] * &p[k] - &factor * &p[j]) / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let mut x = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = BigRational::from(a[i][n].clone());
        for j in i + 1..n {
            acc -= &x[j] * BigRational::from(a[i][j].clone());
        }
        x[i] = acc / BigRational::from(a[i][i].clone());
    }
    Some(x)
}

/// `numerator / denominator` with `denominator(0) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RationalGf {
    pub numerator: IntPolynomial,
    pub denominator: IntPolynomial,
}

impl RationalGf {
    /// Series coefficients of `x^1 ..= x^terms`.
    pub fn expand(&self, terms: usize) -> Vec<BigInt> {
        let den = self.denominator.coeffs();
        let lead = &den[0];
        let mut s: Vec<BigInt> = Vec::with_capacity(terms + 1);
        for n in 0..=terms {
            let mut acc = self.numerator.coeff(n);
            for i in 1..den.len().min(n + 1) {
                acc -= &den[i] * &s[n - i];
            }
            s.push(acc / lead);
        }
        s.split_off(1)
    }
}

impl fmt::Display for RationalGf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = |p: &IntPolynomial| p.coeffs().iter().filter(|c| !c.is_zero()).count();
        let num = self.numerator.to_string();
        let den = self.denominator.to_string();
        let num = if terms(&self.numerator) > 1 {
            format!("({num})")
        } else {
            num
        };
        let den = if terms(&self.denominator) > 1 {
            format!("({den})")
        } else {
            den
        };
        write!(f, "{num}/{den}")
    }
}

/// Generating function `sum_(n>=1) T_n x^n` of a recurrence.
pub fn generating_function(r: &Recurrence) -> RationalGf {
    let d = r.order();
    let mut den = vec![BigInt::one()];
    den.extend(r.coeffs().iter().map(|c| -c));
    let denominator = IntPolynomial::new(den);
    let mut series = vec![BigInt::zero()];
    series.extend(r.initial().iter().cloned());
    let numerator = denominator.mul(&IntPolynomial::new(series)).truncate(d);

    let g = numerator.content().gcd(&denominator.content());
    let mut gf = if g.is_zero() || g.is_one() {
        RationalGf {
            numerator,
            denominator,
        }
    } else {
        let div =
            |p: &IntPolynomial| IntPolynomial::new(p.coeffs().iter().map(|c| c / &g).collect());
        RationalGf {
            numerator: div(&numerator),
            denominator: div(&denominator),
        }
    };
    if gf.denominator.coeff(0).is_negative() {
        let neg = |p: &IntPolynomial| IntPolynomial::new(p.coeffs().iter().map(|c| -c).collect());
        gf = RationalGf {
            numerator: neg(&gf.numerator),
            denominator: neg(&gf.denominator),
        };
    }
    assert_eq!(
        gf.expand(2 * d + 4),
        r.terms(2 * d + 4),
        "generating function disagrees with its recurrence"
    );
    gf
}

/// A product family whose minimal recurrence is being checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    pub base: BaseSpec,
    pub topology: Topology,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = match self.topology {
            Topology::Path => "P_n",
            Topology::Cycle => "C_n",
        };
        write!(f, "{} x {t}", self.base)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureCheck {
    pub family: String,
    pub check: &'static str,
    /// `None` when the check was not run.
    pub holds: Option<bool>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub checks: Vec<ConjectureCheck>,
}

impl ConjectureReport {
    pub fn violations(&self) -> impl Iterator<Item = &ConjectureCheck> {
        self.checks.iter().filter(|c| c.holds == Some(false))
    }

    pub fn all_hold(&self) -> bool {
        self.violations().next().is_none()
    }
}

impl fmt::Display for ConjectureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let verdict = match c.holds {
                Some(true) => "CONSISTENT",
                Some(false) => "VIOLATED",
                None => "UNCHECKED",
            };
            writeln!(
                f,
                "{verdict:<10} {:<24} {:<20} {}",
                c.check, c.family, c.detail
            )?;
        }
        Ok(())
    }
}

/// `c_i` has sign `(-1)^(i+1)`, i.e. `1 - c_1 x - … - c_d x^d` alternates.
pub fn alternates_in_sign(r: &Recurrence) -> bool {
    r.coeffs().iter().enumerate().all(|(i, c)| {
        if i % 2 == 0 {
            c.is_positive()
        } else {
            c.is_negative()
        }
    })
}

/// Runs the empirical checks on minimal recurrences: sign alternation for
/// every family, order `2^(k-1)` for grids `P_k x P_n`, order `k` for
/// `K_k x P_n`. The integer factorization pattern of the characteristic
/// polynomial is listed as unchecked.
pub fn check_conjectures(results: &[(Family, Recurrence)]) -> ConjectureReport {
    let mut checks = Vec::new();
    for (family, r) in results {
        let name = family.to_string();
        let d = r.order();
        let signs = r
            .coeffs()
            .iter()
            .map(|c| if c.is_negative() { '-' } else { '+' })
            .collect::<String>();
        checks.push(ConjectureCheck {
            family: name.clone(),
            check: "alternating-signs",
            holds: Some(alternates_in_sign(r)),
            detail: format!("order {d}, signs {signs}"),
        });
        match (&family.base, family.topology) {
            (BaseSpec::Path(k), Topology::Path) => {
                let expect = 1usize << (k - 1);
                checks.push(ConjectureCheck {
                    family: name.clone(),
                    check: "grid-order-2^(k-1)",
                    holds: Some(d == expect),
                    detail: format!("order {d}, expected {expect}"),
                });
            }
            (BaseSpec::Complete(k), Topology::Path) => {
                checks.push(ConjectureCheck {
                    family: name.clone(),
                    check: "complete-order-k",
                    holds: Some(d == *k),
                    detail: format!("order {d}, expected {k}"),
                });
            }
            _ => {}
        }
    }
    checks.push(ConjectureCheck {
        family: "all".into(),
        check: "charpoly-factor-degrees",
        holds: None,
        detail: "needs integer polynomial factorization".into(),
    });
    ConjectureReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| big(r)).collect()
    }

    #[test]
    fn polynomial_text() {
        assert_eq!(
            IntPolynomial::from_i64(&[1, -4, 1]).to_string(),
            "1 - 4*x + x^2"
        );
        assert_eq!(IntPolynomial::from_i64(&[0, 1]).to_string(), "x");
        assert_eq!(
            IntPolynomial::from_i64(&[-3, 0, 0, 2]).to_string(),
            "-3 + 2*x^3"
        );
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(IntPolynomial::from_i64(&[1, 0, 0]).degree(), Some(0));
    }

    #[test]
    fn division() {
        let a = IntPolynomial::from_i64(&[-1, 0, 1]);
        let b = IntPolynomial::from_i64(&[-1, 1]);
        let (q, r) = a.div_rem_monic(&b);
        assert_eq!(q, IntPolynomial::from_i64(&[1, 1]));
        assert!(r.is_zero());
        assert!(!IntPolynomial::from_i64(&[1, 1]).divides(&IntPolynomial::from_i64(&[1, 0, 1])));
    }

    #[test]
    fn char_poly_a2() {
        let p = char_poly(&mat(&[&[3, 1], &[2, 1]])).unwrap();
        assert_eq!(p, IntPolynomial::from_i64(&[1, -4, 1]));
        assert!(p.is_monic());
    }

    #[test]
    fn char_poly_identity() {
        let p = char_poly(&mat(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap();
        assert_eq!(p, IntPolynomial::from_i64(&[-1, 3, -3, 1]));
    }

    #[test]
    fn cayley_hamilton_scalar_form() {
        let p = char_poly(&mat(&[&[3, 1], &[2, 1]])).unwrap();
        let t = big(&[1, 4, 15, 56, 209, 780]);
        assert!(annihilates(&p, &t));
        assert!(!annihilates(&p, &big(&[1, 4, 15, 57])));
    }

    #[test]
    fn char_poly_errors() {
        assert_eq!(char_poly(&mat(&[&[1, 2]])), Err(RecurrenceError::NotSquare));
        let big_id = vec![vec![BigInt::zero(); 201]; 201];
        assert!(matches!(
            char_poly(&big_id),
            Err(RecurrenceError::DimensionLimit { dim: 201, .. })
        ));
    }

    #[test]
    fn char_poly_matches_cofactor_expansion() {
        // det(xI - M) at integer points, computed by Bareiss
        let m = mat(&[&[2, -1, 0, 3], &[1, 0, 4, 1], &[0, 5, -2, 1], &[7, 1, 1, 1]]);
        let p = char_poly(&m).unwrap();
        for x in -3i64..=3 {
            let shifted: Vec<Vec<BigInt>> = (0..4)
                .map(|i| {
                    (0..4)
                        .map(|j| {
                            if i == j {
                                BigInt::from(x) - &m[i][j]
                            } else {
                                -m[i][j].clone()
                            }
                        })
                        .collect()
                })
                .collect();
            let at: BigInt = p
                .coeffs()
                .iter()
                .rev()
                .fold(BigInt::zero(), |acc, c| acc * x + c);
            assert_eq!(at, crate::kirchhoff::determinant(shifted));
        }
    }

    #[test]
    fn grid2_recurrence_and_gf() {
        let terms = big(&[1, 4, 15, 56, 209, 780, 2911, 10864, 40545, 151316]);
        let r = minimal_recurrence_from_terms(&terms, 3).unwrap();
        assert_eq!(r.coeffs(), big(&[4, -1]).as_slice());
        assert_eq!(r.to_string(), "T(n) = 4*T(n-1) - T(n-2)");
        let gf = generating_function(&r);
        assert_eq!(gf.numerator, IntPolynomial::from_i64(&[0, 1]));
        assert_eq!(gf.denominator, IntPolynomial::from_i64(&[1, -4, 1]));
        assert_eq!(gf.to_string(), "x/(1 - 4*x + x^2)");
        assert_eq!(gf.expand(10), terms);
    }

    #[test]
    fn constant_and_geometric() {
        let ones = vec![BigInt::one(); 8];
        let r = minimal_recurrence_from_terms(&ones, 2).unwrap();
        assert_eq!(r.coeffs(), big(&[1]).as_slice());
        let geo = Recurrence::new(big(&[2]), big(&[1]));
        let gf = generating_function(&geo);
        assert_eq!(gf.to_string(), "x/(1 - 2*x)");
    }

    #[test]
    fn insufficient_and_missing() {
        let t = big(&[1, 2, 3]);
        assert_eq!(
            minimal_recurrence_from_terms(&t, 1),
            Err(RecurrenceError::InsufficientTerms { have: 3, need: 6 })
        );
        // squares of primes-ish noise: no order-1 or order-2 fit
        let noise = big(&[1, 7, 2, 9, 4, 1, 8, 3, 5, 0]);
        assert!(matches!(
            minimal_recurrence_from_terms(&noise, 2),
            Err(RecurrenceError::NoRecurrence { max_order: 2, .. })
        ));
    }

    #[test]
    fn fibonacci_needs_order_two() {
        let mut f = vec![BigInt::one(), BigInt::one()];
        for i in 2..12 {
            let next = &f[i - 1] + &f[i - 2];
            f.push(next);
        }
        let r = minimal_recurrence_from_terms(&f, 4).unwrap();
        assert_eq!(r.coeffs(), big(&[1, 1]).as_slice());
        assert_eq!(r.first_mismatch(&f), None);
        assert_eq!(r.polynomial(), IntPolynomial::from_i64(&[-1, -1, 1]));
        assert!(!alternates_in_sign(&r));
    }

    #[test]
    fn conjecture_report_layout() {
        let g2 = Recurrence::new(big(&[4, -1]), big(&[1, 4]));
        let fam = Family {
            base: BaseSpec::Path(2),
            topology: Topology::Path,
        };
        let bad = Family {
            base: BaseSpec::Complete(3),
            topology: Topology::Path,
        };
        let report = check_conjectures(&[(fam, g2.clone()), (bad, g2)]);
        assert_eq!(report.violations().count(), 1);
        let text = report.to_string();
        assert!(text.contains("CONSISTENT grid-order-2^(k-1)"));
        assert!(text.contains("VIOLATED   complete-order-k"));
        assert!(text.contains("UNCHECKED  charpoly-factor-degrees"));
    }
}
