//! Dense univariate polynomials in `q` with arbitrary-precision integer coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial in `q` over the integers. `coeffs[i]` is the coefficient of `q^i`.
///
/// The coefficient vector is always trimmed: the last entry is nonzero unless the
/// polynomial is zero, in which case the vector is empty.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPolyZ {
    coeffs: Vec<BigInt>,
}

impl QPolyZ {
    pub fn zero() -> Self {
        QPolyZ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * q^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        QPolyZ { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPolyZ { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Nonnegative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            if c.is_zero() {
                continue;
            }
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QPolyZ {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides every coefficient by `c`, which must divide them all.
    pub fn div_int_exact(&self, c: &BigInt) -> Self {
        if c.is_one() {
            return self.clone();
        }
        QPolyZ {
            coeffs: self
                .coeffs
                .iter()
                .map(|a| {
                    debug_assert!((a % c).is_zero());
                    a / c
                })
                .collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPolyZ { coeffs }
    }

    /// Divides by `q^k`; the low `k` coefficients must be zero.
    pub fn unshift(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        debug_assert!(self.coeffs.iter().take(k).all(|c| c.is_zero()));
        QPolyZ {
            coeffs: self.coeffs.iter().skip(k).cloned().collect(),
        }
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(|l| l.is_negative()) {
            c = -c;
        }
        self.div_int_exact(&c)
    }

    /// `p(q^k)` for `k >= 0`.
    pub fn compose_power(&self, k: usize) -> Self {
        if k == 1 || self.is_zero() {
            return self.clone();
        }
        if k == 0 {
            return Self::constant(self.coeffs.iter().sum::<BigInt>());
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        QPolyZ { coeffs }
    }

    /// Coefficient-reversed polynomial `q^deg * p(1/q)`.
    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::from_coeffs(coeffs)
    }

    pub fn eval(&self, r: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * r + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Exact quotient `self / d` in `Z[q]`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &QPolyZ) -> Option<QPolyZ> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let nd = self.degree().unwrap();
        if nd < dd {
            return None;
        }
        if dd == 0 {
            let c = &d.coeffs[0];
            if self.coeffs.iter().all(|a| (a % c).is_zero()) {
                return Some(QPolyZ {
                    coeffs: self.coeffs.iter().map(|a| a / c).collect(),
                });
            }
            return None;
        }
        let lc = d.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (qc, r) = top.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[i + j] -= &qc * dc;
                }
            }
            quot[i] = qc;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(Self::from_coeffs(quot))
        } else {
            None
        }
    }

    /// Pseudo-remainder of `self` by `d` (nonzero), made primitive.
    fn prem_primitive(&self, d: &QPolyZ) -> QPolyZ {
        let dd = d.degree().expect("nonzero divisor");
        let lc = d.leading().unwrap().clone();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let rl = r.leading().unwrap().clone();
            let g = rl.gcd(&lc);
            let a = &lc / &g;
            let b = &rl / &g;
            // r <- a*r - b*q^(rd-dd)*d cancels the leading term
            let mut coeffs = r.coeffs;
            for c in coeffs.iter_mut() {
                *c *= &a;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                coeffs[rd - dd + j] -= &b * dc;
            }
            r = QPolyZ::from_coeffs(coeffs);
            let c = r.content();
            if !c.is_zero() && !c.is_one() {
                r = r.div_int_exact(&c);
            }
        }
        r
    }

    /// Greatest common divisor, primitive with positive leading coefficient.
    ///
    /// Integer content is ignored: the result divides both primitive parts.
    pub fn gcd_primitive(&self, other: &QPolyZ) -> QPolyZ {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        let va = self.valuation().unwrap();
        let vb = other.valuation().unwrap();
        let v = va.min(vb);
        let a = self.unshift(va).primitive();
        let b = other.unshift(vb).primitive();
        let core = if a.is_constant() || b.is_constant() {
            QPolyZ::one()
        } else if a == b {
            a
        } else {
            let (mut a, mut b) = match a.degree().cmp(&b.degree()) {
                Ordering::Less => (b, a),
                _ => (a, b),
            };
            loop {
                let r = a.prem_primitive(&b);
                if r.is_zero() {
                    break b.primitive();
                }
                if r.is_constant() {
                    break QPolyZ::one();
                }
                a = b;
                b = r;
            }
        };
        core.shift(v)
    }

    pub(crate) fn fmt_ascending(&self, f: &mut fmt::Formatter<'_>, latex: bool) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            if i == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match (i, latex) {
                (1, _) => write!(f, "q")?,
                (_, true) => write!(f, "q^{{{i}}}")?,
                (_, false) => write!(f, "q^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for QPolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_ascending(f, false)
    }
}

impl fmt::Debug for QPolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPolyZ({self})")
    }
}

impl Add for &QPolyZ {
    type Output = QPolyZ;
    fn add(self, rhs: &QPolyZ) -> QPolyZ {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        QPolyZ::from_coeffs(coeffs)
    }
}

impl Sub for &QPolyZ {
    type Output = QPolyZ;
    fn sub(self, rhs: &QPolyZ) -> QPolyZ {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        QPolyZ::from_coeffs(coeffs)
    }
}

impl Mul for &QPolyZ {
    type Output = QPolyZ;
    fn mul(self, rhs: &QPolyZ) -> QPolyZ {
        if self.is_zero() || rhs.is_zero() {
            return QPolyZ::zero();
        }
        if rhs.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return rhs.clone();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        QPolyZ::from_coeffs(coeffs)
    }
}

impl Neg for &QPolyZ {
    type Output = QPolyZ;
    fn neg(self) -> QPolyZ {
        QPolyZ {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QPolyZ {
            type Output = QPolyZ;
            fn $m(self, rhs: QPolyZ) -> QPolyZ {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QPolyZ {
    type Output = QPolyZ;
    fn neg(self) -> QPolyZ {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> QPolyZ {
        QPolyZ::from_i64s(cs)
    }

    #[test]
    fn trims_and_degrees() {
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[1, 2, 0]).degree(), Some(1));
        assert_eq!(p(&[0, 0, 3]).valuation(), Some(2));
    }

    #[test]
    fn exact_division() {
        // (1-q^2) / (1-q) = 1+q
        assert_eq!(p(&[1, 0, -1]).div_exact(&p(&[1, -1])), Some(p(&[1, 1])));
        assert_eq!(p(&[1, 0, 1]).div_exact(&p(&[1, 1])), None);
        assert_eq!(p(&[2, 4]).div_exact(&p(&[2])), Some(p(&[1, 2])));
        assert_eq!(p(&[1, 3]).div_exact(&p(&[2])), None);
    }

    #[test]
    fn gcd_cases() {
        let a = &p(&[1, 1]) * &p(&[2, -3, 1]);
        let b = &p(&[1, 1]) * &p(&[5, 0, 7]);
        assert_eq!(a.gcd_primitive(&b), p(&[1, 1]));
        // powers of q are pulled out first
        assert_eq!(p(&[0, 0, 4, 2]).gcd_primitive(&p(&[0, 6])), p(&[0, 1]));
        assert_eq!(p(&[3]).gcd_primitive(&p(&[1, 2])), p(&[1]));
        assert_eq!(p(&[-2, 2]).gcd_primitive(&p(&[0])), p(&[-1, 1]));
    }

    #[test]
    fn formatting() {
        assert_eq!(p(&[3, 2, 1]).to_string(), "3+2q+q^2");
        assert_eq!(p(&[-1, 0, -2]).to_string(), "-1-2q^2");
        assert_eq!(p(&[]).to_string(), "0");
    }
}
