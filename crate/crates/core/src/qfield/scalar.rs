use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::QPolyZ;
use super::QError;

/// Element of `Q(q)` kept in canonical form.
///
/// `num/den` is fully reduced, the integer contents of `num` and `den` share no
/// factor, and `den` has a positive leading coefficient. Two scalars are equal iff
/// their canonical forms coincide, so the derived `PartialEq` is field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QScalar {
    num: QPolyZ,
    den: QPolyZ,
}

impl QScalar {
    pub fn zero() -> Self {
        QScalar {
            num: QPolyZ::zero(),
            den: QPolyZ::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(QPolyZ::one())
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::from_poly(QPolyZ::constant(c))
    }

    pub fn from_poly(p: QPolyZ) -> Self {
        QScalar {
            num: p,
            den: QPolyZ::one(),
        }
    }

    pub fn from_ratio(r: &BigRational) -> Self {
        Self::new(
            QPolyZ::constant(r.numer().clone()),
            QPolyZ::constant(r.denom().clone()),
        )
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::from_poly(QPolyZ::monomial(1, 1))
    }

    /// `q^e` for any integer `e`; negative powers become `1/q^|e|`.
    pub fn q_pow(e: i64) -> Self {
        if e >= 0 {
            Self::from_poly(QPolyZ::monomial(1, e as usize))
        } else {
            QScalar {
                num: QPolyZ::one(),
                den: QPolyZ::monomial(1, e.unsigned_abs() as usize),
            }
        }
    }

    /// `c * q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        Self::from_int(c) * Self::q_pow(e)
    }

    /// Builds `num/den` and reduces it. Panics if `den` is zero.
    pub fn new(num: QPolyZ, den: QPolyZ) -> Self {
        Self::try_new(num, den).expect("QScalar with zero denominator")
    }

    pub fn try_new(num: QPolyZ, den: QPolyZ) -> Result<Self, QError> {
        if den.is_zero() {
            return Err(QError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(mut num: QPolyZ, mut den: QPolyZ) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return QScalar { num, den };
        }
        if !den.is_constant() {
            let g = num.gcd_primitive(&den);
            if !g.is_one() {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        let g = num.content().gcd(&den.content());
        let g = if den.leading().unwrap().is_negative() {
            -g
        } else {
            g
        };
        if !g.is_one() {
            num = num.div_int_exact(&g);
            den = den.div_int_exact(&g);
        }
        QScalar { num, den }
    }

    pub fn numer(&self) -> &QPolyZ {
        &self.num
    }

    pub fn denom(&self) -> &QPolyZ {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1.
    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    /// The polynomial numerator, when the denominator is 1.
    pub fn as_poly(&self) -> Option<&QPolyZ> {
        self.is_poly().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<Self, QError> {
        if self.is_zero() {
            return Err(QError::DivisionByZero);
        }
        // already coprime: only the sign and integer content need fixing
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &QScalar) -> Result<Self, QError> {
        if rhs.is_zero() {
            return Err(QError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if self.den.is_one() && rhs.den.is_one() {
            if let Some(quot) = self.num.div_exact(&rhs.num) {
                return Ok(Self::from_poly(quot));
            }
        }
        Ok(Self::reduce(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `q -> q^k` for any integer `k`.
    pub fn subst_q_pow(&self, k: i64) -> Self {
        if k >= 0 {
            let k = k as usize;
            return Self::reduce(self.num.compose_power(k), self.den.compose_power(k));
        }
        // p(q^-m) = q^(-m*deg p) * rev(p)(q^m)
        let m = k.unsigned_abs() as usize;
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        let num = self.num.reversed().compose_power(m);
        let den = self.den.reversed().compose_power(m);
        let (num, den) = if dd >= dn {
            (num.shift(m * (dd - dn)), den)
        } else {
            (num, den.shift(m * (dn - dd)))
        };
        Self::reduce(num, den)
    }

    /// Exact value at the rational point `q = r`.
    pub fn eval_at(&self, r: &BigRational) -> Result<BigRational, QError> {
        let d = self.den.eval(r);
        if d.is_zero() {
            return Err(QError::VanishingDenominator { point: r.clone() });
        }
        Ok(self.num.eval(r) / d)
    }

    /// A single signed term `c q^k` over denominator 1.
    fn is_signed_monomial(&self) -> bool {
        self.den.is_one() && self.num.term_count() == 1
    }

    /// Sign of the lowest-degree numerator coefficient; used to pull a leading
    /// minus sign out when printing.
    pub(crate) fn prints_negative(&self) -> bool {
        self.num
            .valuation()
            .is_some_and(|v| self.num.coeffs()[v].is_negative())
    }

    /// Writes the scalar as a coefficient in front of a monomial: `1` is omitted,
    /// single terms print bare and anything longer is parenthesised. The caller
    /// handles the sign.
    pub(crate) fn fmt_coefficient(
        &self,
        f: &mut fmt::Formatter<'_>,
        latex: bool,
        bare_one: bool,
    ) -> fmt::Result {
        let mag = if self.prints_negative() {
            -self
        } else {
            self.clone()
        };
        if mag.is_one() {
            return if bare_one { write!(f, "1") } else { Ok(()) };
        }
        if mag.is_signed_monomial() {
            return mag.num.fmt_ascending(f, latex);
        }
        if mag.den.is_one() {
            write!(f, "(")?;
            mag.num.fmt_ascending(f, latex)?;
            return write!(f, ")");
        }
        write!(f, "(")?;
        mag.fmt_plain(f, latex)?;
        write!(f, ")")
    }

    fn fmt_plain(&self, f: &mut fmt::Formatter<'_>, latex: bool) -> fmt::Result {
        if self.den.is_one() {
            return self.num.fmt_ascending(f, latex);
        }
        if latex {
            write!(f, "\\frac{{")?;
            self.num.fmt_ascending(f, true)?;
            write!(f, "}}{{")?;
            self.den.fmt_ascending(f, true)?;
            return write!(f, "}}");
        }
        if self.num.term_count() > 1 {
            write!(f, "({})/", self.num)?;
        } else {
            write!(f, "{}/", self.num)?;
        }
        let v = self.den.valuation().unwrap();
        let den_bare = self.den.term_count() == 1 && (v == 0 || self.den.coeff(v).is_one());
        if den_bare {
            write!(f, "{}", self.den)
        } else {
            write!(f, "({})", self.den)
        }
    }

    /// LaTeX rendering.
    pub fn to_latex(&self) -> String {
        struct L<'a>(&'a QScalar);
        impl fmt::Display for L<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_plain(f, true)
            }
        }
        L(self).to_string()
    }
}

impl Default for QScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_plain(f, false)
    }
}

impl fmt::Debug for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QScalar({self})")
    }
}

impl From<i64> for QScalar {
    fn from(c: i64) -> Self {
        QScalar::from_int(c)
    }
}

impl From<QPolyZ> for QScalar {
    fn from(p: QPolyZ) -> Self {
        QScalar::from_poly(p)
    }
}

impl Add for &QScalar {
    type Output = QScalar;
    fn add(self, rhs: &QScalar) -> QScalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QScalar::from_poly(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return QScalar::reduce(&self.num + &rhs.num, self.den.clone());
        }
        QScalar::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &QScalar {
    type Output = QScalar;
    fn sub(self, rhs: &QScalar) -> QScalar {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QScalar::from_poly(&self.num - &rhs.num);
        }
        self + &(-rhs)
    }
}

impl Mul for &QScalar {
    type Output = QScalar;
    fn mul(self, rhs: &QScalar) -> QScalar {
        if self.is_zero() || rhs.is_zero() {
            return QScalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QScalar::from_poly(&self.num * &rhs.num);
        }
        QScalar::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &QScalar {
    type Output = QScalar;
    fn div(self, rhs: &QScalar) -> QScalar {
        self.checked_div(rhs).expect("division of QScalar by zero")
    }
}

impl Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QScalar {
            type Output = QScalar;
            fn $m(self, rhs: QScalar) -> QScalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QScalar> for QScalar {
            type Output = QScalar;
            fn $m(self, rhs: &QScalar) -> QScalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl std::iter::Sum for QScalar {
    fn sum<I: Iterator<Item = QScalar>>(iter: I) -> Self {
        iter.fold(QScalar::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for QScalar {
    fn product<I: Iterator<Item = QScalar>>(iter: I) -> Self {
        iter.fold(QScalar::one(), |a, b| a * b)
    }
}
