//! Exact Laurent polynomials with arbitrary-precision integer coefficients.
//!
//! A [`LaurentPoly`] is tagged with the variable it is written in. Three
//! variables occur in knot computations:
//!
//! * [`Var::T`] is the Jones variable `t`,
//! * [`Var::Q`] is `q` with `q^2 = t` (links with an even number of components),
//! * [`Var::A`] is the Kauffman bracket variable with `t = A^-4`.
//!
//! Terms are stored sorted by ascending exponent with no zero coefficients, so
//! structural equality is polynomial equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::PolyError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    T,
    Q,
    A,
}

impl Var {
    pub fn symbol(self) -> char {
        match self {
            Var::T => 't',
            Var::Q => 'q',
            Var::A => 'A',
        }
    }

    fn from_symbol(c: char) -> Option<Var> {
        match c {
            't' => Some(Var::T),
            'q' => Some(Var::Q),
            'A' => Some(Var::A),
            _ => None,
        }
    }

    /// Exponent of this variable measured in units of `A^-1`:
    /// `t = A^-4`, `q = A^-2`, `A = A^1`.
    fn in_a_units(self) -> i64 {
        match self {
            Var::T => -4,
            Var::Q => -2,
            Var::A => 1,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Order in which terms are rendered by [`LaurentPoly::render`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TermOrder {
    Ascending,
    Descending,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    var: Var,
    terms: Vec<(i64, BigInt)>,
}

impl LaurentPoly {
    pub fn zero(var: Var) -> Self {
        LaurentPoly {
            var,
            terms: Vec::new(),
        }
    }

    pub fn one(var: Var) -> Self {
        Self::monomial(var, 1, 0)
    }

    pub fn constant(var: Var, c: impl Into<BigInt>) -> Self {
        Self::monomial(var, c, 0)
    }

    /// `c * var^exp`.
    pub fn monomial(var: Var, c: impl Into<BigInt>, exp: i64) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero(var);
        }
        LaurentPoly {
            var,
            terms: vec![(exp, c)],
        }
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs,
    /// merging repeated exponents.
    pub fn from_terms<C: Into<BigInt>>(var: Var, terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *acc.entry(e).or_insert_with(BigInt::zero) += c.into();
        }
        LaurentPoly {
            var,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Dense coefficients starting at exponent `low`.
    pub fn from_dense(var: Var, low: i64, coeffs: Vec<BigInt>) -> Self {
        let terms = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (low + i as i64, c))
            .collect();
        LaurentPoly { var, terms }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|(e, _)| *e)
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        match self.terms.binary_search_by_key(&exp, |(e, _)| *e) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// Sum of absolute values of the coefficients.
    pub fn l1_norm(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c.abs()).sum()
    }

    /// Dense coefficient vector of `t^-min_exp * self`, lowest degree first.
    pub fn to_dense(&self) -> (i64, Vec<BigInt>) {
        let (lo, hi) = match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return (0, Vec::new()),
        };
        let mut out = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            out[(e - lo) as usize] = c.clone();
        }
        (lo, out)
    }

    fn check_var(&self, other: &Self) -> Result<(), PolyError> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(PolyError::VariableMismatch {
                left: self.var,
                right: other.var,
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_var(other)?;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            match (self.terms.get(i), other.terms.get(j)) {
                (Some((ea, ca)), Some((eb, cb))) if ea == eb => {
                    let c = ca + cb;
                    if !c.is_zero() {
                        out.push((*ea, c));
                    }
                    i += 1;
                    j += 1;
                }
                (Some((ea, ca)), Some((eb, _))) if ea < eb => {
                    out.push((*ea, ca.clone()));
                    i += 1;
                }
                (Some(_), Some((eb, cb))) => {
                    out.push((*eb, cb.clone()));
                    j += 1;
                }
                (Some((ea, ca)), None) => {
                    out.push((*ea, ca.clone()));
                    i += 1;
                }
                (None, Some((eb, cb))) => {
                    out.push((*eb, cb.clone()));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Ok(LaurentPoly {
            var: self.var,
            terms: out,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_var(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.var));
        }
        let (lo_a, a) = self.to_dense();
        let (lo_b, b) = other.to_dense();
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if !cb.is_zero() {
                    out[i + j] += ca * cb;
                }
            }
        }
        Ok(Self::from_dense(self.var, lo_a + lo_b, out))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.var);
        }
        LaurentPoly {
            var: self.var,
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            var: self.var,
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one(self.var);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Substitutes `var -> var^-1`.
    pub fn mirror(&self) -> Self {
        let mut terms: Vec<_> = self.terms.iter().map(|(e, c)| (-e, c.clone())).collect();
        terms.reverse();
        LaurentPoly { var: self.var, terms }
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Units of the Laurent ring are `±var^k`, so divisibility reduces to
    /// divisibility in `Z[var]` after stripping monomial factors from both
    /// sides. Long division runs from the top degree; a leading coefficient
    /// that does not divide exactly means the quotient is not integral.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, PolyError> {
        self.check_var(divisor)?;
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.var));
        }
        let (lo_p, mut rem) = self.to_dense();
        let (lo_q, q) = divisor.to_dense();
        if rem.len() < q.len() {
            return Err(PolyError::NotDivisible);
        }
        let dq = q.len() - 1;
        let lead = &q[dq];
        let mut quot = vec![BigInt::zero(); rem.len() - dq];
        for i in (dq..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let (qc, r) = rem[i].div_rem(lead);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible);
            }
            for (k, c) in q.iter().enumerate() {
                if !c.is_zero() {
                    rem[i - dq + k] -= &qc * c;
                }
            }
            quot[i - dq] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(PolyError::NotDivisible);
        }
        Ok(Self::from_dense(self.var, lo_p - lo_q, quot))
    }

    /// Whether `divisor` divides `self` exactly.
    pub fn is_divisible_by(&self, divisor: &Self) -> Result<bool, PolyError> {
        match self.div_exact(divisor) {
            Ok(_) => Ok(true),
            Err(PolyError::NotDivisible) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// Horner evaluation at a complex point.
    pub fn eval_complex(&self, z: Complex64) -> Result<Complex64, PolyError> {
        let (lo, dense) = self.to_dense();
        if dense.is_empty() {
            return Ok(Complex64::new(0.0, 0.0));
        }
        if lo < 0 && z.norm() == 0.0 {
            return Err(PolyError::PoleAtZero);
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for c in dense.iter().rev() {
            acc = acc * z + big_to_f64(c);
        }
        let value = if lo == 0 { acc } else { acc * z.powi(lo as i32) };
        if lo < 0 && !value.is_finite() {
            return Err(PolyError::PoleAtZero);
        }
        Ok(value)
    }

    /// Exact value at `var = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c).sum()
    }

    /// Exact value at `var = -1`.
    pub fn eval_at_minus_one(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(e, c)| if e.rem_euclid(2) == 0 { c.clone() } else { -c })
            .sum()
    }

    pub fn derivative(&self) -> Self {
        LaurentPoly {
            var: self.var,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| *e != 0)
                .map(|(e, c)| (e - 1, c * BigInt::from(*e)))
                .collect(),
        }
    }

    /// Re-expresses the polynomial in another variable using
    /// `t = q^2 = A^-4`.
    pub fn change_variable(&self, target: Var) -> Result<Self, PolyError> {
        if target == self.var {
            return Ok(self.clone());
        }
        let from = self.var.in_a_units();
        let to = target.in_a_units();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let a_exp = e * from;
            if a_exp % to != 0 {
                return Err(PolyError::ExponentNotConvertible {
                    exponent: *e,
                    from: self.var,
                    to: target,
                });
            }
            terms.push((a_exp / to, c.clone()));
        }
        terms.sort_by_key(|(e, _)| *e);
        Ok(LaurentPoly { var: target, terms })
    }

    /// Text form such as `2*t^-3 - t^-2 + t`.
    pub fn render(&self, order: TermOrder) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let v = self.var.symbol();
        let mut out = String::new();
        let iter: Box<dyn Iterator<Item = &(i64, BigInt)>> = match order {
            TermOrder::Ascending => Box::new(self.terms.iter()),
            TermOrder::Descending => Box::new(self.terms.iter().rev()),
        };
        for (i, (e, c)) in iter.enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            match (*e, mag.is_one()) {
                (0, _) => out.push_str(&mag.to_string()),
                (1, true) => out.push(v),
                (1, false) => out.push_str(&format!("{mag}*{v}")),
                (e, true) => out.push_str(&format!("{v}^{e}")),
                (e, false) => out.push_str(&format!("{mag}*{v}^{e}")),
            }
        }
        out
    }

    /// Parses the output of [`render`](Self::render) (either order) in a
    /// given variable. Whitespace is ignored.
    pub fn parse_in(s: &str, var: Var) -> Result<Self, PolyError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(PolyError::Parse("empty input".into()));
        }
        let mut terms: Vec<(i64, BigInt)> = Vec::new();
        for raw in split_terms(&compact) {
            terms.push(parse_term(&raw, var)?);
        }
        Ok(Self::from_terms(var, terms))
    }
}

fn split_terms(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut prev: Option<char> = None;
    for ch in s.chars() {
        if (ch == '+' || ch == '-') && !cur.is_empty() && prev != Some('^') {
            out.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
        prev = Some(ch);
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn parse_term(raw: &str, var: Var) -> Result<(i64, BigInt), PolyError> {
    let bad = || PolyError::Parse(format!("malformed term `{raw}`"));
    let (sign, body) = match raw.as_bytes().first() {
        Some(b'+') => (1, &raw[1..]),
        Some(b'-') => (-1, &raw[1..]),
        _ => (1, raw),
    };
    let v = var.symbol();
    let (coef, exp) = match body.find(v) {
        None => (body.parse::<BigInt>().map_err(|_| bad())?, 0),
        Some(pos) => {
            let coef = match &body[..pos] {
                "" => BigInt::one(),
                c => c
                    .strip_suffix('*')
                    .ok_or_else(bad)?
                    .parse::<BigInt>()
                    .map_err(|_| bad())?,
            };
            let rest = &body[pos + v.len_utf8()..];
            let exp = match rest {
                "" => 1,
                r => r
                    .strip_prefix('^')
                    .ok_or_else(bad)?
                    .parse::<i64>()
                    .map_err(|_| bad())?,
            };
            (coef, exp)
        }
    };
    Ok((exp, coef * sign))
}

impl FromStr for LaurentPoly {
    type Err = PolyError;

    /// Infers the variable from the first variable symbol in the text; a
    /// bare constant is taken to be in `t`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let var = s.chars().find_map(Var::from_symbol).unwrap_or(Var::T);
        Self::parse_in(s, var)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(TermOrder::Ascending))
    }
}

pub(crate) fn big_to_f64(c: &BigInt) -> f64 {
    c.to_f64().unwrap_or(if c.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

/// The `d`-th cyclotomic polynomial in `t`, obtained by dividing `t^d - 1`
/// by `Φ_e` for every proper divisor `e` of `d`.
///
/// # Panics
/// If `d == 0`.
pub fn cyclotomic(d: u64) -> LaurentPoly {
    assert!(d >= 1, "cyclotomic index must be positive");
    let divisors: Vec<u64> = (1..=d).filter(|e| d.is_multiple_of(*e)).collect();
    let mut table: BTreeMap<u64, LaurentPoly> = BTreeMap::new();
    for &e in &divisors {
        let mut p = LaurentPoly::from_terms(Var::T, [(e as i64, 1), (0, -1)]);
        for (&f, phi) in table.iter() {
            if e % f == 0 {
                p = p.div_exact(phi).expect("cyclotomic factors divide t^d - 1");
            }
        }
        table.insert(e, p);
    }
    table.remove(&d).expect("d divides itself")
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;

            /// Panics on a variable mismatch; use the `checked_*` form to
            /// get an error instead.
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;

            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            var: self.var,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> LaurentPoly {
        LaurentPoly::parse_in(s, Var::T).unwrap()
    }

    #[test]
    fn add_cancels_and_keeps_disjoint_supports() {
        assert_eq!(t("1 + t") + t("1 - t"), t("2"));
        assert_eq!(t("t^-1") + t("t"), t("t^-1 + t"));
        let p = t("3*t^-2 - t^5");
        assert_eq!(&p + &LaurentPoly::zero(Var::T), p);
        assert!((t("t") - t("t")).is_zero());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(t("1 + t") * t("1 - t"), t("1 - t^2"));
        assert_eq!(t("t^3 - 1") * t("t^4 - 1"), t("t^7 - t^4 - t^3 + 1"));
        assert_eq!(t("t^-3") * t("1 + t"), t("t^-3 + t^-2"));
    }

    #[test]
    fn variable_mismatch_is_an_error() {
        let a = LaurentPoly::monomial(Var::A, 1, 2);
        assert!(matches!(
            t("t").checked_add(&a),
            Err(PolyError::VariableMismatch {
                left: Var::T,
                right: Var::A
            })
        ));
        assert!(t("t").checked_mul(&a).is_err());
    }

    #[test]
    fn exact_division() {
        assert_eq!(
            t("t^6 + t^4 + t^3 - 1").div_exact(&t("1 + t")).unwrap(),
            t("t^5 - t^4 + 2*t^3 - t^2 + t - 1")
        );
        assert_eq!(t("1 - t^2").div_exact(&t("1 + t")).unwrap(), t("1 - t"));
        assert_eq!(t("t^2 + 1").div_exact(&t("1 + t")), Err(PolyError::NotDivisible));
        assert_eq!(
            t("t").div_exact(&LaurentPoly::zero(Var::T)),
            Err(PolyError::DivisionByZero)
        );
        // non-monic divisor with an integral quotient, and one without
        assert_eq!(t("4*t^2 - 1").div_exact(&t("2*t + 1")).unwrap(), t("2*t - 1"));
        assert_eq!(
            t("t^2 - 1").div_exact(&t("2*t + 2")),
            Err(PolyError::NotDivisible)
        );
        // monomial units
        assert_eq!(t("t^-4 + t^-3").div_exact(&t("t^2 + t^3")).unwrap(), t("t^-6"));
    }

    #[test]
    fn divisibility_predicate() {
        let p1 = t("-t^7 + t^4 + t^3 - 1");
        assert!(t("t^3 - 1").is_divisible_by(&cyclotomic(3)).unwrap());
        assert!(p1.is_divisible_by(&t("1 + t")).unwrap());
        assert!(!p1.is_divisible_by(&cyclotomic(5)).unwrap());
        assert_eq!(
            p1.is_divisible_by(&LaurentPoly::zero(Var::T)),
            Err(PolyError::DivisionByZero)
        );
    }

    #[test]
    fn complex_evaluation() {
        let i = Complex64::new(0.0, 1.0);
        assert!(t("t^2 + 1").eval_complex(i).unwrap().norm() < 1e-15);
        let j1 = t("t^-1 - t^-2 + 2*t^-3 - t^-4 + t^-5 - t^-6");
        assert!((j1.eval_complex(Complex64::new(1.0, 0.0)).unwrap() - 1.0).norm() < 1e-15);
        // direct summation of the six monomials at t = i
        let direct: Complex64 = j1.terms().map(|(e, c)| big_to_f64(c) * i.powi(e as i32)).sum();
        assert!((direct - 1.0).norm() < 1e-14);
        assert!((j1.eval_complex(i).unwrap() - 1.0).norm() < 1e-14);
        assert_eq!(
            j1.eval_complex(Complex64::new(0.0, 0.0)),
            Err(PolyError::PoleAtZero)
        );
        assert_eq!(
            t("t^2").eval_complex(Complex64::new(0.0, 0.0)).unwrap(),
            Complex64::new(0.0, 0.0)
        );
    }

    #[test]
    fn exact_evaluation_at_units() {
        let p = t("t^-3 + 2*t - 5");
        assert_eq!(p.eval_at_one(), BigInt::from(-2));
        assert_eq!(p.eval_at_minus_one(), BigInt::from(-8));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(t("t^3 - t^2 - 1").derivative(), t("3*t^2 - 2*t"));
        assert_eq!(t("t^-1").derivative(), t("-t^-2"));
        let n1 = t("t^6 + t^4 + t^3 - 1");
        assert_eq!(n1.derivative().eval_at_minus_one(), BigInt::from(-7));
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic(1), t("t - 1"));
        assert_eq!(cyclotomic(2), t("t + 1"));
        assert_eq!(cyclotomic(6), t("t^2 - t + 1"));
        assert_eq!(cyclotomic(12), t("t^4 - t^2 + 1"));
        assert_eq!(cyclotomic(105).coeff(7), BigInt::from(-2));
    }

    #[test]
    fn cyclotomic_product_is_t_n_minus_one() {
        for n in 1..=60u64 {
            let prod = (1..=n)
                .filter(|d| n % d == 0)
                .fold(LaurentPoly::one(Var::T), |acc, d| acc * cyclotomic(d));
            assert_eq!(
                prod,
                LaurentPoly::from_terms(Var::T, [(n as i64, 1), (0, -1)]),
                "n = {n}"
            );
        }
    }

    #[test]
    fn variable_changes() {
        let a = LaurentPoly::from_terms(Var::A, [(-4, 1), (-8, 1)]);
        assert_eq!(a.change_variable(Var::T).unwrap(), t("t + t^2"));
        let q = LaurentPoly::monomial(Var::Q, 1, 2);
        assert_eq!(q.change_variable(Var::T).unwrap(), t("t"));
        let bad = LaurentPoly::monomial(Var::A, 1, -2);
        assert!(matches!(
            bad.change_variable(Var::T),
            Err(PolyError::ExponentNotConvertible { exponent: -2, .. })
        ));
        assert_eq!(
            bad.change_variable(Var::Q).unwrap(),
            LaurentPoly::monomial(Var::Q, 1, 1)
        );
        assert_eq!(
            t("t^3 - 2")
                .change_variable(Var::A)
                .unwrap()
                .change_variable(Var::T)
                .unwrap(),
            t("t^3 - 2")
        );
    }

    #[test]
    fn rendering() {
        let j1 = t("t^-1 - t^-2 + 2*t^-3 - t^-4 + t^-5 - t^-6");
        assert_eq!(
            j1.render(TermOrder::Descending),
            "t^-1 - t^-2 + 2*t^-3 - t^-4 + t^-5 - t^-6"
        );
        assert_eq!(j1.to_string(), "-t^-6 + t^-5 - t^-4 + 2*t^-3 - t^-2 + t^-1");
        assert_eq!(t("-3 + t - 2*t^2").to_string(), "-3 + t - 2*t^2");
        assert_eq!(LaurentPoly::zero(Var::T).to_string(), "0");
        assert_eq!("A^-3 - A".parse::<LaurentPoly>().unwrap().var(), Var::A);
        assert!(LaurentPoly::parse_in("t^^2", Var::T).is_err());
        assert!(LaurentPoly::parse_in("", Var::T).is_err());
    }

    #[test]
    fn pow_and_mirror() {
        assert_eq!(t("1 + t").pow(3), t("1 + 3*t + 3*t^2 + t^3"));
        assert_eq!(t("t").pow(0), t("1"));
        assert_eq!(t("2*t^-1 + t^3").mirror(), t("2*t + t^-3"));
    }
}
