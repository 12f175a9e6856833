//! Exact arithmetic in `Z[√2]` and its fraction field `Q(√2)`.
//!
//! Every value is kept as a pair of exact integers (resp. rationals); no
//! floating point is involved anywhere, including comparisons, which are
//! decided by integer case analysis on `a² - 2b²`.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Error, Result};

/// An element `a + b√2` of the ring `Z[√2]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ZSqrt2 {
    pub a: BigInt,
    pub b: BigInt,
}

/// An element `a + b√2` of the field `Q(√2)`.
///
/// Both parts are `BigRational`, which is always in lowest terms with a
/// positive denominator, so derived equality and hashing are exact.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QSqrt2 {
    a: BigRational,
    b: BigRational,
}

impl ZSqrt2 {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        ZSqrt2 { a: a.into(), b: b.into() }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn sqrt2() -> Self {
        Self::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        ZSqrt2 { a: self.a.clone(), b: -&self.b }
    }

    /// `a² - 2b²`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - BigInt::from(2) * &self.b * &self.b
    }

    /// Units of `Z[√2]` are exactly the elements of norm ±1.
    pub fn is_unit(&self) -> bool {
        self.norm().abs().is_one()
    }

    /// Trace `x + conj(x) = 2a`.
    pub fn trace(&self) -> BigInt {
        BigInt::from(2) * &self.a
    }

    pub fn sign(&self) -> i32 {
        self.to_qsqrt2().sign()
    }

    pub fn to_qsqrt2(&self) -> QSqrt2 {
        QSqrt2::from(self.clone())
    }
}

/// Sign of `a + b√2` under the embedding sending `√2` to the positive root.
fn sign_of(a: &BigRational, b: &BigRational) -> i32 {
    let sa = signum_i32(a);
    let sb = signum_i32(b);
    if sa >= 0 && sb >= 0 {
        return if sa == 0 && sb == 0 { 0 } else { 1 };
    }
    if sa <= 0 && sb <= 0 {
        return -1;
    }
    // opposite signs: compare a² against 2b²
    let a2 = a * a;
    let b2 = BigRational::from_integer(2.into()) * b * b;
    let a_dominates = a2 > b2;
    match (sa > 0, a_dominates) {
        (true, true) | (false, false) => 1,
        _ => -1,
    }
}

fn signum_i32<T: Signed>(x: &T) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl QSqrt2 {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QSqrt2 { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        QSqrt2 { a: BigRational::from_integer(a.into()), b: BigRational::from_integer(b.into()) }
    }

    /// `(an/ad) + (bn/bd)√2`.
    pub fn from_fracs(an: i64, ad: i64, bn: i64, bd: i64) -> Self {
        QSqrt2 {
            a: BigRational::new(an.into(), ad.into()),
            b: BigRational::new(bn.into(), bd.into()),
        }
    }

    pub fn from_rational(a: BigRational) -> Self {
        QSqrt2 { a, b: BigRational::zero() }
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0)
    }

    pub fn sqrt2() -> Self {
        Self::from_ints(0, 1)
    }

    /// `1/√2 = √2/2`.
    pub fn inv_sqrt2() -> Self {
        Self::from_fracs(0, 1, 1, 2)
    }

    /// Rational part `a`.
    pub fn a(&self) -> &BigRational {
        &self.a
    }

    /// Coefficient `b` of `√2`.
    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// True when the value is a rational multiple of `√2`.
    pub fn is_pure_irrational(&self) -> bool {
        self.a.is_zero()
    }

    /// Some(ZSqrt2) when both parts are integers.
    pub fn to_zsqrt2(&self) -> Option<ZSqrt2> {
        if self.a.is_integer() && self.b.is_integer() {
            Some(ZSqrt2 { a: self.a.to_integer(), b: self.b.to_integer() })
        } else {
            None
        }
    }

    pub fn is_algebraic_integer(&self) -> bool {
        self.a.is_integer() && self.b.is_integer()
    }

    /// Galois conjugation `a + b√2 ↦ a - b√2`.
    pub fn conjugate(&self) -> Self {
        QSqrt2 { a: self.a.clone(), b: -&self.b }
    }

    /// `x·conj(x) = a² - 2b²`.
    pub fn field_norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(2.into()) * &self.b * &self.b
    }

    pub fn trace(&self) -> BigRational {
        &self.a + &self.a
    }

    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(domain!("inverse of zero in Q(√2)"));
        }
        let n = self.field_norm();
        Ok(QSqrt2 { a: &self.a / &n, b: -&self.b / &n })
    }

    /// Sign of the real number under the positive embedding of `√2`.
    pub fn sign(&self) -> i32 {
        sign_of(&self.a, &self.b)
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        QSqrt2 { a: &self.a * r, b: &self.b * r }
    }

    /// Floating-point approximation, for display and heuristics only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.a.to_f64().unwrap_or(f64::NAN)
            + self.b.to_f64().unwrap_or(f64::NAN) * std::f64::consts::SQRT_2
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = QSqrt2::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }
}

impl From<ZSqrt2> for QSqrt2 {
    fn from(z: ZSqrt2) -> Self {
        QSqrt2 { a: BigRational::from_integer(z.a), b: BigRational::from_integer(z.b) }
    }
}

impl From<i64> for QSqrt2 {
    fn from(v: i64) -> Self {
        QSqrt2::from_ints(v, 0)
    }
}

impl From<BigRational> for QSqrt2 {
    fn from(v: BigRational) -> Self {
        QSqrt2::from_rational(v)
    }
}

impl From<BigInt> for QSqrt2 {
    fn from(v: BigInt) -> Self {
        QSqrt2::from_rational(BigRational::from_integer(v))
    }
}

impl Ord for QSqrt2 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign().cmp(&0)
    }
}

impl PartialOrd for QSqrt2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ZSqrt2 {
    fn cmp(&self, other: &Self) -> Ordering {
        ZSqrt2 { a: &self.a - &other.a, b: &self.b - &other.b }.sign().cmp(&0)
    }
}

impl PartialOrd for ZSqrt2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// ---- arithmetic ----

macro_rules! forward_binop {
    ($ty:ident, $tr:ident, $m:ident) => {
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &'a $ty) -> $ty {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<$ty> for &'a $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                self.$m(&rhs)
            }
        }
    };
}

impl<'b> Add<&'b QSqrt2> for &QSqrt2 {
    type Output = QSqrt2;
    fn add(self, rhs: &'b QSqrt2) -> QSqrt2 {
        QSqrt2 { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl<'b> Sub<&'b QSqrt2> for &QSqrt2 {
    type Output = QSqrt2;
    fn sub(self, rhs: &'b QSqrt2) -> QSqrt2 {
        QSqrt2 { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl<'b> Mul<&'b QSqrt2> for &QSqrt2 {
    type Output = QSqrt2;
    fn mul(self, rhs: &'b QSqrt2) -> QSqrt2 {
        // (a1 + b1√2)(a2 + b2√2) = (a1a2 + 2b1b2) + (a1b2 + a2b1)√2
        if self.b.is_zero() && rhs.b.is_zero() {
            return QSqrt2 { a: &self.a * &rhs.a, b: BigRational::zero() };
        }
        let two = BigRational::from_integer(2.into());
        QSqrt2 {
            a: &self.a * &rhs.a + two * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &rhs.a * &self.b,
        }
    }
}

impl<'b> Div<&'b QSqrt2> for &QSqrt2 {
    type Output = QSqrt2;
    fn div(self, rhs: &'b QSqrt2) -> QSqrt2 {
        self * &rhs.invert().expect("division by zero in Q(√2)")
    }
}

forward_binop!(QSqrt2, Add, add);
forward_binop!(QSqrt2, Sub, sub);
forward_binop!(QSqrt2, Mul, mul);
forward_binop!(QSqrt2, Div, div);

impl Neg for QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        QSqrt2 { a: -self.a, b: -self.b }
    }
}

impl Neg for &QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        QSqrt2 { a: -&self.a, b: -&self.b }
    }
}

impl<'a> AddAssign<&'a QSqrt2> for QSqrt2 {
    fn add_assign(&mut self, rhs: &'a QSqrt2) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl AddAssign for QSqrt2 {
    fn add_assign(&mut self, rhs: QSqrt2) {
        self.a += rhs.a;
        self.b += rhs.b;
    }
}

impl<'a> SubAssign<&'a QSqrt2> for QSqrt2 {
    fn sub_assign(&mut self, rhs: &'a QSqrt2) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl<'a> MulAssign<&'a QSqrt2> for QSqrt2 {
    fn mul_assign(&mut self, rhs: &'a QSqrt2) {
        *self = &*self * rhs;
    }
}

impl Sum for QSqrt2 {
    fn sum<I: Iterator<Item = QSqrt2>>(iter: I) -> QSqrt2 {
        let mut acc = QSqrt2::zero();
        for x in iter {
            acc += x;
        }
        acc
    }
}

impl<'a> Sum<&'a QSqrt2> for QSqrt2 {
    fn sum<I: Iterator<Item = &'a QSqrt2>>(iter: I) -> QSqrt2 {
        let mut acc = QSqrt2::zero();
        for x in iter {
            acc += x;
        }
        acc
    }
}

impl<'b> Add<&'b ZSqrt2> for &ZSqrt2 {
    type Output = ZSqrt2;
    fn add(self, rhs: &'b ZSqrt2) -> ZSqrt2 {
        ZSqrt2 { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl<'b> Sub<&'b ZSqrt2> for &ZSqrt2 {
    type Output = ZSqrt2;
    fn sub(self, rhs: &'b ZSqrt2) -> ZSqrt2 {
        ZSqrt2 { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl<'b> Mul<&'b ZSqrt2> for &ZSqrt2 {
    type Output = ZSqrt2;
    fn mul(self, rhs: &'b ZSqrt2) -> ZSqrt2 {
        ZSqrt2 {
            a: &self.a * &rhs.a + BigInt::from(2) * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &rhs.a * &self.b,
        }
    }
}

forward_binop!(ZSqrt2, Add, add);
forward_binop!(ZSqrt2, Sub, sub);
forward_binop!(ZSqrt2, Mul, mul);

impl Neg for ZSqrt2 {
    type Output = ZSqrt2;
    fn neg(self) -> ZSqrt2 {
        ZSqrt2 { a: -self.a, b: -self.b }
    }
}

impl<'a> AddAssign<&'a ZSqrt2> for ZSqrt2 {
    fn add_assign(&mut self, rhs: &'a ZSqrt2) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

// ---- text form ----

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Canonical text form of a rational, as used in JSON output.
pub fn rational_to_string(r: &BigRational) -> String {
    fmt_rational(r)
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let t = t.strip_prefix('+').unwrap_or(t);
    if t.is_empty() {
        return Err(Error::Parse(format!("empty rational in {s:?}")));
    }
    let r = match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
            let d: BigInt = d.parse().map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            BigRational::new(n, d)
        }
        None => BigRational::from_integer(
            t.parse().map_err(|_| Error::Parse(format!("bad integer {s:?}")))?,
        ),
    };
    Ok(r)
}

impl fmt::Display for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", fmt_rational(&self.a));
        }
        let mut out = String::new();
        if !self.a.is_zero() {
            out.push_str(&fmt_rational(&self.a));
            if self.b.is_positive() {
                out.push('+');
            }
        }
        if self.b.is_negative() {
            out.push('-');
        }
        let mag = self.b.abs();
        if !mag.is_one() {
            out.push_str(&fmt_rational(&mag));
        }
        out.push('√');
        out.push('2');
        f.write_str(&out)
    }
}

impl fmt::Display for ZSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_qsqrt2())
    }
}

impl FromStr for QSqrt2 {
    type Err = Error;

    /// Accepts the canonical printed form (`"3/2-1/2√2"`, `"-√2"`, `"7"`);
    /// `sqrt2` is accepted as an ASCII spelling of `√2`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.trim().replace("sqrt2", "√2").chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let Some(head) = t.strip_suffix("√2") else {
            return Ok(QSqrt2::from_rational(parse_rational(&t)?));
        };
        // split off the last signed term, skipping a sign at position 0
        let split = head
            .char_indices()
            .filter(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i)
            .next_back();
        let (a_str, b_str) = match split {
            Some(i) => (&head[..i], &head[i..]),
            None => ("", head),
        };
        let a = if a_str.is_empty() { BigRational::zero() } else { parse_rational(a_str)? };
        let b = match b_str {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other)?,
        };
        Ok(QSqrt2 { a, b })
    }
}
