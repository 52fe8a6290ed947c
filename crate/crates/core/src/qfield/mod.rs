//! The coefficient field `Q(q)` and the standard q-analogues built on it.
//!
//! Every scalar in the crate is a [`QScalar`]: a reduced quotient of integer
//! polynomials in `q`. Negative powers of `q` are ordinary fractions `1/q^k`.

mod poly;
mod scalar;

use std::cell::RefCell;

use num_rational::BigRational;
use thiserror::Error;

pub use poly::QPolyZ;
pub use scalar::QScalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QError {
    #[error("division by zero in Q(q)")]
    DivisionByZero,
    #[error("denominator vanishes at q = {point}")]
    VanishingDenominator { point: BigRational },
}

/// `[n]_q = 1 + q + ... + q^(n-1)`; `[0]_q = 0`.
pub fn qint(n: usize) -> QScalar {
    QScalar::from_poly(QPolyZ::from_i64s(&vec![1; n]))
}

/// `[n]_q! = [1][2]...[n]`.
pub fn qfact(n: usize) -> QScalar {
    (1..=n).map(qint).product()
}

/// `[2n-1]_q!! = [1][3]...[2n-1]`.
pub fn qdoublefact_odd(n: usize) -> QScalar {
    (1..=n).map(|k| qint(2 * k - 1)).product()
}

thread_local! {
    // rows of the q-Pascal triangle, grown on demand
    static QBINOM_ROWS: RefCell<Vec<Vec<QPolyZ>>> = RefCell::new(vec![vec![QPolyZ::one()]]);
}

/// Gaussian binomial as an integer polynomial in `q`; zero outside `0 <= k <= n`.
pub fn qbinom_poly(n: usize, k: usize) -> QPolyZ {
    if k > n {
        return QPolyZ::zero();
    }
    QBINOM_ROWS.with(|rows| {
        let mut rows = rows.borrow_mut();
        while rows.len() <= n {
            let m = rows.len();
            let prev = &rows[m - 1];
            let mut row = Vec::with_capacity(m + 1);
            row.push(QPolyZ::one());
            for j in 1..m {
                // [m, j] = [m-1, j-1] + q^j [m-1, j]
                row.push(&prev[j - 1] + &prev[j].shift(j));
            }
            row.push(QPolyZ::one());
            rows.push(row);
        }
        rows[n][k].clone()
    })
}

/// Gaussian binomial `[n choose k]_q`; zero when `k < 0` or `k > n`.
pub fn qbinom(n: i64, k: i64) -> QScalar {
    if n < 0 || k < 0 || k > n {
        return QScalar::zero();
    }
    QScalar::from_poly(qbinom_poly(n as usize, k as usize))
}

/// `(a; q)_n = (1-a)(1-aq)...(1-aq^(n-1))`.
pub fn qpochhammer(a: &QScalar, n: usize) -> QScalar {
    let one = QScalar::one();
    let mut acc = QScalar::one();
    let mut factor = a.clone();
    let q = QScalar::q();
    for _ in 0..n {
        acc = acc * (&one - &factor);
        if acc.is_zero() {
            break;
        }
        factor = &factor * &q;
    }
    acc
}

/// Ordinary binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> i64 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}

/// `binomial(n, 2)` for any integer `n`, i.e. `n(n-1)/2`.
pub fn choose2(n: i64) -> i64 {
    n * (n - 1) / 2
}
