use std::fmt;

use super::xs::XSPoly;

/// Quotient of two [`XSPoly`] values, used for continued-fraction coefficients
/// that are not polynomials (e.g. `(1-q)s/x`).
///
/// No multivariate gcd is taken. Denominators that are constants are folded into
/// the numerator, and equality is decided by cross-multiplication.
#[derive(Clone)]
pub struct XSFrac {
    num: XSPoly,
    den: XSPoly,
}

impl XSFrac {
    pub fn new(num: XSPoly, den: XSPoly) -> Self {
        assert!(!den.is_zero(), "XSFrac with zero denominator");
        if let Some(c) = den.as_constant() {
            return XSFrac {
                num: num.scale(&c.inv().unwrap()),
                den: XSPoly::one(),
            };
        }
        if num.is_zero() {
            return Self::from_poly(XSPoly::zero());
        }
        // a single-term denominator is cheap to try dividing out
        if den.len() == 1 {
            if let Some(qt) = num.div_exact(&den) {
                return Self::from_poly(qt);
            }
        }
        Self::normalized(num, den)
    }

    /// Cancels the common monomial factor and, when the denominator's leading
    /// coefficient is an integer, scales it to 1. Non-integer leading
    /// coefficients are left alone to keep polynomial coefficients polynomial.
    fn normalized(num: XSPoly, den: XSPoly) -> Self {
        let min_deg = |p: &XSPoly| {
            p.terms().fold((u32::MAX, u32::MAX), |(a, b), (m, _)| {
                (a.min(m.x), b.min(m.s))
            })
        };
        let (nx, ns) = min_deg(&num);
        let (dx, ds) = min_deg(&den);
        let (gx, gs) = (nx.min(dx), ns.min(ds));
        let (mut num, mut den) = if gx > 0 || gs > 0 {
            (
                num.div_monomial(gx, gs).expect("common monomial divides"),
                den.div_monomial(gx, gs).expect("common monomial divides"),
            )
        } else {
            (num, den)
        };
        let lc = den.terms().next().map(|(_, c)| c.clone());
        if let Some(lc) = lc {
            if !lc.is_one() {
                let inv = lc.inv().expect("nonzero leading coefficient");
                num = num.scale(&inv);
                den = den.scale(&inv);
            }
        }
        XSFrac { num, den }
    }

    pub fn from_poly(p: XSPoly) -> Self {
        XSFrac {
            num: p,
            den: XSPoly::one(),
        }
    }

    pub fn numer(&self) -> &XSPoly {
        &self.num
    }

    pub fn denom(&self) -> &XSPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial value, if the denominator divides the numerator.
    pub fn to_poly(&self) -> Option<XSPoly> {
        self.num.div_exact(&self.den)
    }

    pub fn add(&self, o: &XSFrac) -> XSFrac {
        if self.den == o.den {
            return XSFrac::new(&self.num + &o.num, self.den.clone());
        }
        XSFrac::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }

    pub fn sub(&self, o: &XSFrac) -> XSFrac {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &XSFrac) -> XSFrac {
        XSFrac::new(&self.num * &o.num, &self.den * &o.den)
    }

    pub fn neg(&self) -> XSFrac {
        XSFrac {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl PartialEq for XSFrac {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl PartialEq<XSPoly> for XSFrac {
    fn eq(&self, other: &XSPoly) -> bool {
        self.num == &self.den * other
    }
}

impl fmt::Display for XSFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for XSFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XSFrac({self})")
    }
}

impl From<XSPoly> for XSFrac {
    fn from(p: XSPoly) -> Self {
        XSFrac::from_poly(p)
    }
}
