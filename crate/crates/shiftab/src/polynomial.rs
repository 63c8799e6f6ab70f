//! Sparse Laurent polynomials with big-integer coefficients.
//!
//! Variables are `x_i`, `y_i`, `t` and an auxiliary scalar `L` used only by
//! the lambda-determinant identity.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::core_types::Mode;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X(u16),
    Y(u16),
    T,
    L,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{i}"),
            Var::Y(i) => write!(f, "y{i}"),
            Var::T => write!(f, "t"),
            Var::L => write!(f, "L"),
        }
    }
}

impl std::str::FromStr for Var {
    type Err = Error;
    fn from_str(s: &str) -> Result<Var> {
        let index = |rest: &str| rest.parse::<u16>().map_err(|_| Error::Parse(format!("bad variable {s:?}")));
        match s {
            "t" => Ok(Var::T),
            "L" => Ok(Var::L),
            _ if s.starts_with('x') => Ok(Var::X(index(&s[1..])?)),
            _ if s.starts_with('y') => Ok(Var::Y(index(&s[1..])?)),
            _ => Err(Error::Parse(format!("bad variable {s:?}"))),
        }
    }
}

/// A product of variable powers; exponents are never zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<(Var, i32)>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: Var) -> Monomial {
        Monomial::power(v, 1)
    }

    pub fn power(v: Var, e: i32) -> Monomial {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial { exps: vec![(v, e)] }
        }
    }

    pub fn from_exponents(pairs: impl IntoIterator<Item = (Var, i32)>) -> Monomial {
        pairs.into_iter().fold(Monomial::one(), |m, (v, e)| m.mul(&Monomial::power(v, e)))
    }

    pub fn exponents(&self) -> &[(Var, i32)] {
        &self.exps
    }

    pub fn exponent(&self, v: Var) -> i32 {
        self.exps.iter().find(|(w, _)| *w == v).map_or(0, |&(_, e)| e)
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.exps.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (a, b) = (self.exps[i], other.exps[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    exps.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    if a.1 + b.1 != 0 {
                        exps.push((a.0, a.1 + b.1));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&other.exps[j..]);
        Monomial { exps }
    }

    pub fn inverse(&self) -> Monomial {
        Monomial { exps: self.exps.iter().map(|&(v, e)| (v, -e)).collect() }
    }

    /// Graded lexicographic comparison: total degree first, then the
    /// exponent of the earliest variable in `x1..xn, y1..yn, t, L`.
    pub fn grlex_cmp(&self, other: &Monomial) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (mut i, mut j) = (0, 0);
            loop {
                let a = self.exps.get(i);
                let b = other.exps.get(j);
                match (a, b) {
                    (None, None) => return Ordering::Equal,
                    (Some(&(_, e)), None) => return e.cmp(&0),
                    (None, Some(&(_, e))) => return 0.cmp(&e),
                    (Some(&(v, e)), Some(&(w, f))) => match v.cmp(&w) {
                        Ordering::Less => return e.cmp(&0),
                        Ordering::Greater => return 0.cmp(&f),
                        Ordering::Equal => {
                            if e != f {
                                return e.cmp(&f);
                            }
                            i += 1;
                            j += 1;
                        }
                    },
                }
            }
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (i, &(v, e)) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Exact Laurent polynomial; no zero coefficients are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        LaurentPoly::term(c, Monomial::one())
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(m, c.into());
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        LaurentPoly::term(1, m)
    }

    pub fn var(v: Var) -> Self {
        LaurentPoly::monomial(Monomial::var(v))
    }

    pub fn x(i: usize) -> Self {
        LaurentPoly::var(Var::X(i as u16))
    }

    pub fn y(i: usize) -> Self {
        LaurentPoly::var(Var::Y(i as u16))
    }

    pub fn t() -> Self {
        LaurentPoly::var(Var::T)
    }

    /// `t^2 x_i^{-1}`.
    pub fn t2_xbar(i: usize) -> Self {
        LaurentPoly::monomial(Monomial::from_exponents([(Var::X(i as u16), -1), (Var::T, 2)]))
    }

    /// `t^2 y_i^{-1}`.
    pub fn t2_ybar(i: usize) -> Self {
        LaurentPoly::monomial(Monomial::from_exponents([(Var::Y(i as u16), -1), (Var::T, 2)]))
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Terms sorted in decreasing graded lexicographic order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.grlex_cmp(a.0));
        v
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(n, k)| (n.mul(m), k.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> LaurentPoly {
        let mut out = LaurentPoly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Sum of the coefficients, i.e. the value at all variables equal to one.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Coefficient of `m` in `self * other` without forming the product.
    pub fn product_coefficient(&self, other: &LaurentPoly, m: &Monomial) -> BigInt {
        self.terms.iter().map(|(a, c)| c * other.coefficient(&m.mul(&a.inverse()))).sum()
    }

    /// Replace variables according to `rule`; variables mapped to `None` are kept.
    ///
    /// A variable carrying a negative exponent can only be replaced by a
    /// single term with unit coefficient.
    pub fn substitute(&self, rule: impl Fn(Var) -> Option<LaurentPoly>) -> Result<LaurentPoly> {
        let mut cache: BTreeMap<Var, Option<LaurentPoly>> = BTreeMap::new();
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let mut acc = LaurentPoly::constant(c.clone());
            let mut kept = Monomial::one();
            for &(v, e) in m.exponents() {
                let rep = cache.entry(v).or_insert_with(|| rule(v));
                match rep {
                    None => kept = kept.mul(&Monomial::power(v, e)),
                    Some(r) => {
                        let factor = if e >= 0 { r.pow(e as u32) } else { invert_term(r)?.pow((-e) as u32) };
                        acc = &acc * &factor;
                    }
                }
            }
            out += &acc.mul_monomial(&kept);
        }
        Ok(out)
    }

    /// `y_i -> x_i`.
    pub fn y_to_x(&self) -> LaurentPoly {
        self.substitute(|v| match v {
            Var::Y(i) => Some(LaurentPoly::var(Var::X(i))),
            _ => None,
        })
        .expect("monomial substitution is always invertible")
    }

    /// `y_i -> s * x_i` for a monomial scale `s`, e.g. `t` or `L`.
    pub fn y_to_scaled_x(&self, s: &Monomial) -> LaurentPoly {
        self.substitute(|v| match v {
            Var::Y(i) => Some(LaurentPoly::monomial(Monomial::var(Var::X(i)).mul(s))),
            _ => None,
        })
        .expect("monomial substitution is always invertible")
    }

    /// `y_i -> t x_i`.
    pub fn y_to_tx(&self) -> LaurentPoly {
        self.y_to_scaled_x(&Monomial::var(Var::T))
    }

    /// `y_i -> -x_i`.
    pub fn y_to_neg_x(&self) -> LaurentPoly {
        self.substitute(|v| match v {
            Var::Y(i) => Some(LaurentPoly::term(-1, Monomial::var(Var::X(i)))),
            _ => None,
        })
        .expect("unit substitution is always invertible")
    }

    /// Set a single variable to an integer value.
    pub fn eval_var(&self, v: Var, value: i64) -> Result<LaurentPoly> {
        self.substitute(|w| (w == v).then(|| LaurentPoly::constant(value)))
    }

    /// Set `x_i` to `point[i-1]`.
    pub fn eval_x(&self, point: &[i64]) -> Result<LaurentPoly> {
        self.substitute(|v| match v {
            Var::X(i) if (i as usize) >= 1 && (i as usize) <= point.len() => {
                Some(LaurentPoly::constant(point[i as usize - 1]))
            }
            _ => None,
        })
    }

    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        self.sorted_terms()
            .into_iter()
            .map(|(m, c)| JsonTerm {
                coeff: c.to_string(),
                exps: m.exponents().iter().map(|&(v, e)| (v.to_string(), e)).collect(),
            })
            .collect()
    }

    pub fn from_json_terms(terms: &[JsonTerm]) -> Result<LaurentPoly> {
        let mut p = LaurentPoly::zero();
        for t in terms {
            let c: BigInt = t.coeff.parse().map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.coeff)))?;
            let mut m = Monomial::one();
            for (name, &e) in &t.exps {
                m = m.mul(&Monomial::power(name.parse()?, e));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }
}

fn invert_term(p: &LaurentPoly) -> Result<LaurentPoly> {
    if p.is_zero() {
        return Err(Error::PoleAtZero);
    }
    if p.num_terms() != 1 {
        return Err(Error::NonIntegral);
    }
    let (m, c) = p.terms.iter().next().expect("one term");
    if c.abs() != BigInt::one() {
        return Err(Error::NonIntegral);
    }
    Ok(LaurentPoly::term(c.clone(), m.inverse()))
}

/// One term of the JSON encoding of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub coeff: String,
    pub exps: BTreeMap<String, i32>,
}

/// Serialized as the list of [`JsonTerm`]s in graded order.
impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<JsonTerm>::deserialize(d)?;
        LaurentPoly::from_json_terms(&terms).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                (_, false) => write!(f, " + ")?,
                (_, true) => write!(f, " - ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag} * {m}")?;
            }
        }
        Ok(())
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                out.add_term(a.mul(b), c * d);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> LaurentPoly {
        iter.fold(LaurentPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> LaurentPoly {
        iter.fold(LaurentPoly::one(), |acc, p| &acc * &p)
    }
}

/// Index range of a double product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexRange {
    /// `1 <= i < j <= n`
    Strict,
    /// `1 <= i <= j <= n`
    Weak,
}

/// `x_i + y_j` in gl mode, `x_i + t^2 x_i^{-1} + y_j + t^2 y_j^{-1}` in sp mode.
pub fn pair_factor(i: usize, j: usize, mode: Mode) -> LaurentPoly {
    match mode {
        Mode::Gl => LaurentPoly::x(i) + LaurentPoly::y(j),
        Mode::Sp => LaurentPoly::x(i) + LaurentPoly::t2_xbar(i) + LaurentPoly::y(j) + LaurentPoly::t2_ybar(j),
    }
}

/// Product of [`pair_factor`] over the chosen index range.
pub fn product_xy(n: usize, range: IndexRange, mode: Mode) -> LaurentPoly {
    let mut out = LaurentPoly::one();
    for i in 1..=n {
        let first = if range == IndexRange::Weak { i } else { i + 1 };
        for j in first..=n {
            out = &out * &pair_factor(i, j, mode);
        }
    }
    out
}

/// `x_1 x_2 ... x_n`.
pub fn prod_x(n: usize) -> LaurentPoly {
    LaurentPoly::monomial(Monomial::from_exponents((1..=n).map(|i| (Var::X(i as u16), 1))))
}

/// `prod_i (x_i + t^2 x_i^{-1})`.
pub fn prod_x_plus_t2_xbar(n: usize) -> LaurentPoly {
    (1..=n).map(|i| LaurentPoly::x(i) + LaurentPoly::t2_xbar(i)).product()
}

/// Convert a small polynomial coefficient to `i64`, if it fits.
pub fn coeff_to_i64(c: &BigInt) -> Option<i64> {
    c.to_i64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> LaurentPoly {
        LaurentPoly::x(i)
    }
    fn y(i: usize) -> LaurentPoly {
        LaurentPoly::y(i)
    }

    #[test]
    fn ring_examples() {
        let a = &(x(1) + y(1)) * &(x(1) - y(1));
        assert_eq!(a, &x(1).pow(2) - &y(1).pow(2));
        let inv = LaurentPoly::monomial(Monomial::power(Var::X(1), -1));
        assert_eq!(&x(1) * &inv, LaurentPoly::one());
        assert!((x(1) + y(2) + (-&(x(1) + y(2)))).is_zero());
    }

    #[test]
    fn product_examples() {
        assert_eq!(product_xy(2, IndexRange::Strict, Mode::Gl), x(1) + y(2));
        assert_eq!(product_xy(1, IndexRange::Weak, Mode::Gl), x(1) + y(1));
        assert_eq!(
            product_xy(1, IndexRange::Weak, Mode::Sp),
            x(1) + LaurentPoly::t2_xbar(1) + y(1) + LaurentPoly::t2_ybar(1)
        );
        assert_eq!(product_xy(1, IndexRange::Strict, Mode::Gl), LaurentPoly::one());
    }

    #[test]
    fn weak_is_strict_times_diagonal() {
        for n in 1..=5 {
            let diag: LaurentPoly = (1..=n).map(|i| x(i) + y(i)).product();
            assert_eq!(product_xy(n, IndexRange::Weak, Mode::Gl), &product_xy(n, IndexRange::Strict, Mode::Gl) * &diag);
        }
    }

    #[test]
    fn substitution_examples() {
        assert_eq!((x(1) + y(2)).y_to_tx(), &x(1) + &(&LaurentPoly::t() * &x(2)));
        assert_eq!((x(1) + y(1)).y_to_x(), x(1).scale(&BigInt::from(2)));
        let inv = LaurentPoly::monomial(Monomial::power(Var::X(1), -1));
        assert_eq!(inv.eval_x(&[0]), Err(Error::PoleAtZero));
        assert_eq!(inv.eval_x(&[2]), Err(Error::NonIntegral));
        assert_eq!(inv.eval_x(&[-1]).unwrap(), LaurentPoly::constant(-1));
        assert_eq!((x(1) + y(1)).y_to_neg_x(), LaurentPoly::zero());
    }

    #[test]
    fn text_and_json_forms() {
        let p = &(&x(1) - &y(2)).pow(2) + &LaurentPoly::t2_xbar(1);
        assert_eq!(p.to_string(), "1 * x1^2 - 2 * x1 y2 + 1 * y2^2 + 1 * x1^-1 t^2");
        let back = LaurentPoly::from_json_terms(&p.to_json_terms()).unwrap();
        assert_eq!(back, p);
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<LaurentPoly>(&text).unwrap(), p);
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::constant(-3).to_string(), "-3");
    }

    #[test]
    fn product_coefficient_matches_full_product() {
        let a = product_xy(3, IndexRange::Weak, Mode::Gl);
        let b = (x(1) + y(3)).pow(2);
        let full = &a * &b;
        for (m, c) in full.terms() {
            assert_eq!(&a.product_coefficient(&b, m), c);
        }
    }
}
