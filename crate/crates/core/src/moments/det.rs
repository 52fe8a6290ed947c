//! Fraction-free (Bareiss) elimination over `XSPoly`.

use rayon::prelude::*;

use crate::mpoly::XSPoly;

/// Determinant of a square matrix by Bareiss elimination with row pivoting.
///
/// Every intermediate entry is a minor of the input, so all divisions are exact
/// in the polynomial ring.
pub fn bareiss_det(mut m: Vec<Vec<XSPoly>>) -> XSPoly {
    let n = m.len();
    if n == 0 {
        return XSPoly::one();
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut negate = false;
    let mut prev = XSPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return XSPoly::zero(),
            }
        }
        eliminate(&mut m, k, &prev);
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Leading principal minors `D_1, D_2, ...` of a square matrix.
///
/// Bareiss without pivoting leaves `D_k` on the diagonal. The sequence stops at
/// the first vanishing minor, since later minors cannot be read off the
/// elimination after that; the vanishing minor itself is included.
pub fn leading_minors(mut m: Vec<Vec<XSPoly>>) -> Vec<XSPoly> {
    let n = m.len();
    let mut out = Vec::with_capacity(n);
    let mut prev = XSPoly::one();
    for k in 0..n {
        let pivot = m[k][k].clone();
        out.push(pivot.clone());
        if pivot.is_zero() || k + 1 == n {
            break;
        }
        eliminate(&mut m, k, &prev);
        prev = pivot;
    }
    out
}

/// One Bareiss step on rows/columns `k+1..`:
/// `a[i][j] <- (a[k][k] a[i][j] - a[i][k] a[k][j]) / prev`.
fn eliminate(m: &mut [Vec<XSPoly>], k: usize, prev: &XSPoly) {
    let n = m.len();
    let (top, rest) = m.split_at_mut(k + 1);
    let pivot_row = &top[k];
    let pivot = &pivot_row[k];
    rest.par_iter_mut().for_each(|row| {
        let factor = row[k].clone();
        for j in k + 1..n {
            let num = &(pivot * &row[j]) - &(&factor * &pivot_row[j]);
            row[j] = num
                .div_exact(prev)
                .expect("Bareiss step must divide exactly");
        }
        row[k] = XSPoly::zero();
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::QScalar;

    fn c(v: i64) -> XSPoly {
        XSPoly::from_int(v)
    }

    /// Cofactor expansion along the first row; exponential but independent.
    fn laplace(m: &[Vec<XSPoly>]) -> XSPoly {
        let n = m.len();
        if n == 0 {
            return XSPoly::one();
        }
        let mut acc = XSPoly::zero();
        for j in 0..n {
            let minor: Vec<Vec<XSPoly>> = m[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let t = &m[0][j] * &laplace(&minor);
            acc = if j % 2 == 0 { &acc + &t } else { &acc - &t };
        }
        acc
    }

    #[test]
    fn integer_matrices() {
        let m = vec![
            vec![c(2), c(0), c(1)],
            vec![c(1), c(3), c(2)],
            vec![c(1), c(1), c(1)],
        ];
        assert_eq!(bareiss_det(m.clone()), laplace(&m));
        // zero pivot forces a row swap
        let m = vec![vec![c(0), c(1)], vec![c(1), c(0)]];
        assert_eq!(bareiss_det(m), c(-1));
        let singular = vec![vec![c(1), c(2)], vec![c(2), c(4)]];
        assert!(bareiss_det(singular).is_zero());
    }

    #[test]
    fn symbolic_matrix_matches_cofactor_expansion() {
        let x = XSPoly::x();
        let s = XSPoly::s();
        let q = XSPoly::constant(QScalar::q());
        let m = vec![
            vec![XSPoly::one(), x.clone(), &x * &x - s.clone()],
            vec![x.clone(), &q * &x, s.clone()],
            vec![&s + &x, XSPoly::from_int(3), &(&q * &s) * &x],
        ];
        assert_eq!(bareiss_det(m.clone()), laplace(&m));
        let minors = leading_minors(m.clone());
        assert_eq!(minors.len(), 3);
        assert_eq!(
            minors[1],
            laplace(&[m[0][..2].to_vec(), m[1][..2].to_vec()])
        );
        assert_eq!(minors[2], laplace(&m));
    }

    #[test]
    fn minors_stop_at_zero() {
        let m = vec![
            vec![c(1), c(1), c(0)],
            vec![c(1), c(1), c(5)],
            vec![c(0), c(2), c(1)],
        ];
        let minors = leading_minors(m);
        assert_eq!(minors, vec![c(1), c(0)]);
    }
}
