//! Polynomials in `x` and `s` over `Q(q)`, the q-derivative, and polynomials in
//! `z` over that ring.

mod frac;
mod xs;
mod zpoly;

use std::fmt::Debug;

pub use frac::XSFrac;
pub use xs::{Mono, XSPoly};
pub use zpoly::ZPoly;

use crate::qfield::QScalar;

/// The commutative-ring operations the continued-fraction engine needs.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Ring for XSPoly {
    fn zero() -> Self {
        XSPoly::zero()
    }
    fn one() -> Self {
        XSPoly::one()
    }
    fn is_zero(&self) -> bool {
        XSPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Ring for XSFrac {
    fn zero() -> Self {
        XSFrac::from_poly(XSPoly::zero())
    }
    fn one() -> Self {
        XSFrac::from_poly(XSPoly::one())
    }
    fn is_zero(&self) -> bool {
        XSFrac::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        XSFrac::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        XSFrac::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        XSFrac::mul(self, o)
    }
    fn neg(&self) -> Self {
        XSFrac::neg(self)
    }
}

/// `(alpha x + beta s D_q)^n . 1`.
pub fn apply_operator_power(alpha: &QScalar, beta: &QScalar, n: usize) -> XSPoly {
    let ax = XSPoly::monomial(1, 0, alpha.clone());
    let bs = XSPoly::monomial(0, 1, beta.clone());
    let mut p = XSPoly::one();
    for _ in 0..n {
        p = &(&ax * &p) + &(&bs * &p.qderiv_x());
    }
    p
}
