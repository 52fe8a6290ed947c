use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::qfield::{qint, QError, QScalar};

/// Exponent pair of a monomial `x^x s^s`.
///
/// Ordered graded-lexicographically: total degree first, then by `x` degree.
/// Iterating a polynomial therefore runs from low to high total degree, and the
/// highest monomial of a given degree is the pure power of `x`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Mono {
    pub x: u32,
    pub s: u32,
}

impl Mono {
    pub const ONE: Mono = Mono { x: 0, s: 0 };

    pub fn new(x: u32, s: u32) -> Self {
        Mono { x, s }
    }

    pub fn degree(&self) -> u32 {
        self.x + self.s
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.x.cmp(&other.x))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `x` and `s` with coefficients in `Q(q)`.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct XSPoly {
    terms: BTreeMap<Mono, QScalar>,
}

impl XSPoly {
    pub fn zero() -> Self {
        XSPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(QScalar::one())
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, QScalar::one())
    }

    pub fn s() -> Self {
        Self::monomial(0, 1, QScalar::one())
    }

    pub fn constant(c: QScalar) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(QScalar::from_int(c))
    }

    /// `c x^xd s^sd`.
    pub fn monomial(xd: u32, sd: u32, c: QScalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::new(xd, sd), c);
        }
        XSPoly { terms }
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (Mono, QScalar)>) -> Self {
        let mut p = XSPoly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Mono, c: QScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Mono::ONE).is_some_and(|c| c.is_one())
    }

    /// The constant value, if the polynomial has no `x` or `s`.
    pub fn as_constant(&self) -> Option<QScalar> {
        match self.terms.len() {
            0 => Some(QScalar::zero()),
            1 => self.terms.get(&Mono::ONE).cloned(),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (graded, `x` ascending) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &QScalar)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, xd: u32, sd: u32) -> QScalar {
        self.terms
            .get(&Mono::new(xd, sd))
            .cloned()
            .unwrap_or_default()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.x).max()
    }

    pub fn degree_s(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.s).max()
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        XSPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// Multiplies by `x^xd s^sd`.
    pub fn shift(&self, xd: u32, sd: u32) -> Self {
        XSPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Mono::new(m.x + xd, m.s + sd), c.clone()))
                .collect(),
        }
    }

    /// Divides by `x^xd s^sd` when every term is divisible.
    pub fn div_monomial(&self, xd: u32, sd: u32) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.x < xd || m.s < sd {
                return None;
            }
            terms.insert(Mono::new(m.x - xd, m.s - sd), c.clone());
        }
        Some(XSPoly { terms })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = XSPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn map_coeffs(&self, f: impl Fn(&QScalar) -> QScalar) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// The q-derivative in `x`: `x^n -> [n]_q x^(n-1)`, `s` held constant.
    pub fn qderiv_x(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.x > 0)
                .map(|(m, c)| (Mono::new(m.x - 1, m.s), c * &qint(m.x as usize))),
        )
    }

    /// Ordinary `d/dx`.
    pub fn deriv_x(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.x > 0)
                .map(|(m, c)| (Mono::new(m.x - 1, m.s), c * &QScalar::from_int(m.x))),
        )
    }

    /// `x -> c x`.
    pub fn subst_x_scale(&self, c: &QScalar) -> Self {
        let mut powers = PowerCache::new(c.clone());
        Self::from_terms(self.terms.iter().map(|(m, a)| (*m, a * powers.get(m.x))))
    }

    /// `s -> c s`.
    pub fn subst_s_scale(&self, c: &QScalar) -> Self {
        let mut powers = PowerCache::new(c.clone());
        Self::from_terms(self.terms.iter().map(|(m, a)| (*m, a * powers.get(m.s))))
    }

    /// Substitutes field values for both `x` and `s`.
    pub fn subst_values(&self, xv: &QScalar, sv: &QScalar) -> QScalar {
        let mut xp = PowerCache::new(xv.clone());
        let mut sp = PowerCache::new(sv.clone());
        self.terms
            .iter()
            .map(|(m, c)| &(c * xp.get(m.x)) * sp.get(m.s))
            .sum()
    }

    /// Exact value at a rational point `(q, x, s)`.
    pub fn eval_rational(
        &self,
        q: &BigRational,
        x: &BigRational,
        s: &BigRational,
    ) -> Result<BigRational, QError> {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.eval_at(q)?;
            t *= pow_rat(x, m.x);
            t *= pow_rat(s, m.s);
            acc += t;
        }
        Ok(acc)
    }

    /// True when every monomial has `x` degree congruent to `n` mod 2.
    pub fn has_x_parity(&self, n: u32) -> bool {
        self.terms.keys().all(|m| m.x % 2 == n % 2)
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    ///
    /// Plain multivariate division with respect to lex order `x > s`; the
    /// remainder is zero exactly when `d` divides `self`.
    pub fn div_exact(&self, d: &XSPoly) -> Option<XSPoly> {
        if d.is_zero() {
            return None;
        }
        if d.is_one() {
            return Some(self.clone());
        }
        if let Some(c) = d.as_constant() {
            let inv = c.inv().ok()?;
            return Some(self.scale(&inv));
        }
        let key = |m: &Mono| (m.x, m.s);
        let mut rem: BTreeMap<(u32, u32), QScalar> = self
            .terms
            .iter()
            .map(|(m, c)| (key(m), c.clone()))
            .collect();
        let dterms: Vec<((u32, u32), QScalar)> =
            d.terms.iter().map(|(m, c)| (key(m), c.clone())).collect();
        let (dlead, dlc) = dterms.iter().max_by_key(|(k, _)| *k).cloned().unwrap();
        let mut quot = XSPoly::zero();
        while let Some((&(rx, rs), rc)) = rem.iter().next_back() {
            if rx < dlead.0 || rs < dlead.1 {
                return None;
            }
            let qx = rx - dlead.0;
            let qs = rs - dlead.1;
            let qc = rc.checked_div(&dlc).ok()?;
            for ((dx, ds), dc) in &dterms {
                let k = (dx + qx, ds + qs);
                let sub = &qc * dc;
                match rem.get_mut(&k) {
                    Some(v) => {
                        let nv = &*v - &sub;
                        if nv.is_zero() {
                            rem.remove(&k);
                        } else {
                            *v = nv;
                        }
                    }
                    None => {
                        rem.insert(k, -sub);
                    }
                }
            }
            quot.add_term(Mono::new(qx, qs), qc);
        }
        Some(quot)
    }

    /// Renders with LaTeX exponents and fractions.
    pub fn to_latex(&self) -> String {
        struct L<'a>(&'a XSPoly);
        impl fmt::Display for L<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_with(f, true)
            }
        }
        L(self).to_string()
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, latex: bool) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.prints_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, "-")?,
                (_, false) => write!(f, "+")?,
            }
            c.fmt_coefficient(f, latex, *m == Mono::ONE)?;
            write_var(f, 's', m.s, latex)?;
            write_var(f, 'x', m.x, latex)?;
        }
        Ok(())
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, v: char, e: u32, latex: bool) -> fmt::Result {
    match (e, latex) {
        (0, _) => Ok(()),
        (1, _) => write!(f, "{v}"),
        (_, true) => write!(f, "{v}^{{{e}}}"),
        (_, false) => write!(f, "{v}^{e}"),
    }
}

fn pow_rat(r: &BigRational, e: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= r;
    }
    acc
}

/// Lazily extended table of powers of one scalar.
pub(crate) struct PowerCache {
    base: QScalar,
    powers: Vec<QScalar>,
}

impl PowerCache {
    pub(crate) fn new(base: QScalar) -> Self {
        PowerCache {
            base,
            powers: vec![QScalar::one()],
        }
    }

    pub(crate) fn get(&mut self, e: u32) -> &QScalar {
        while self.powers.len() <= e as usize {
            let next = self.powers.last().unwrap() * &self.base;
            self.powers.push(next);
        }
        &self.powers[e as usize]
    }
}

impl fmt::Display for XSPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, false)
    }
}

impl fmt::Debug for XSPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XSPoly({self})")
    }
}

impl From<QScalar> for XSPoly {
    fn from(c: QScalar) -> Self {
        XSPoly::constant(c)
    }
}

impl Add for &XSPoly {
    type Output = XSPoly;
    fn add(self, rhs: &XSPoly) -> XSPoly {
        let (mut acc, other) = if self.terms.len() >= rhs.terms.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (m, c) in &other.terms {
            acc.add_term(*m, c.clone());
        }
        acc
    }
}

impl Sub for &XSPoly {
    type Output = XSPoly;
    fn sub(self, rhs: &XSPoly) -> XSPoly {
        let mut acc = self.clone();
        for (m, c) in &rhs.terms {
            acc.add_term(*m, -c);
        }
        acc
    }
}

impl Mul for &XSPoly {
    type Output = XSPoly;
    fn mul(self, rhs: &XSPoly) -> XSPoly {
        if self.is_zero() || rhs.is_zero() {
            return XSPoly::zero();
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        let mut acc = XSPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                acc.add_term(Mono::new(ma.x + mb.x, ma.s + mb.s), ca * cb);
            }
        }
        acc
    }
}

impl Neg for &XSPoly {
    type Output = XSPoly;
    fn neg(self) -> XSPoly {
        XSPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for XSPoly {
    type Output = XSPoly;
    fn neg(self) -> XSPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for XSPoly {
            type Output = XSPoly;
            fn $m(self, rhs: XSPoly) -> XSPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&XSPoly> for XSPoly {
            type Output = XSPoly;
            fn $m(self, rhs: &XSPoly) -> XSPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for XSPoly {
    fn sum<I: Iterator<Item = XSPoly>>(iter: I) -> Self {
        iter.fold(XSPoly::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for XSPoly {
    fn product<I: Iterator<Item = XSPoly>>(iter: I) -> Self {
        iter.fold(XSPoly::one(), |a, b| a * b)
    }
}
