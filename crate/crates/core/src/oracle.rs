//! Brute-force matchings of `[n]` and the crossing/covering statistics.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::families::cont_qhermite;
use crate::qfield::{qint, QPolyZ, QScalar};

/// Largest `n` accepted by the enumerator.
pub const MAX_N: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("matching enumeration is capped at n = {cap}, got n = {n}")]
    CapExceeded { n: usize, cap: usize },
}

/// A set of disjoint edges `(i, j)`, `1 <= i < j <= n`, sorted by `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matching {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct StatTriple {
    /// Number of edges.
    pub ed: usize,
    /// Pairs of edges `(i,j)`, `(k,l)` with `i < k < j < l`.
    pub cr: usize,
    /// Sum over unmatched vertices `a` of the edges `i < a < j`.
    pub c: usize,
}

/// Streams every matching of `[n]` (partial and empty ones included) exactly once.
///
/// Vertices are decided from the largest down: each undecided vertex is either
/// left unmatched or matched to a smaller free vertex.
pub fn enumerate_matchings(n: usize) -> Result<MatchingIter, OracleError> {
    if n > MAX_N {
        return Err(OracleError::CapExceeded { n, cap: MAX_N });
    }
    Ok(MatchingIter::new(n))
}

pub struct MatchingIter {
    n: usize,
    /// `mate[v]`, 0 if unmatched; index 0 unused.
    mate: Vec<usize>,
    /// Decision vertices (descending) and their choice: 0 = unmatched, else partner.
    stack: Vec<(usize, usize)>,
    fresh: bool,
    done: bool,
}

impl MatchingIter {
    fn new(n: usize) -> Self {
        let mut it = MatchingIter {
            n,
            mate: vec![0; n + 1],
            stack: Vec::with_capacity(n),
            fresh: true,
            done: false,
        };
        it.descend(n);
        it
    }

    /// Leaves every undecided vertex `<= from` unmatched.
    fn descend(&mut self, from: usize) {
        for w in (1..=from).rev() {
            if self.mate[w] == 0 {
                self.stack.push((w, 0));
            }
        }
    }

    /// Moves to the next assignment; false when exhausted.
    fn advance(&mut self) -> bool {
        while let Some((v, choice)) = self.stack.pop() {
            if choice > 0 {
                self.mate[choice] = 0;
                self.mate[v] = 0;
            }
            let start = if choice == 0 { v } else { choice };
            if let Some(u) = (1..start).rev().find(|&u| self.mate[u] == 0) {
                self.mate[u] = v;
                self.mate[v] = u;
                self.stack.push((v, u));
                self.descend(v - 1);
                return true;
            }
        }
        false
    }

    fn current(&self) -> Matching {
        let edges = (1..=self.n)
            .filter(|&i| self.mate[i] > i)
            .map(|i| (i, self.mate[i]))
            .collect();
        Matching { n: self.n, edges }
    }

    /// Statistics of the current assignment without materialising the edge list.
    fn current_stats(&self) -> StatTriple {
        stats_from_mates(&self.mate)
    }

    fn step(&mut self) -> bool {
        if self.done {
            return false;
        }
        if self.fresh {
            self.fresh = false;
            return true;
        }
        if self.advance() {
            true
        } else {
            self.done = true;
            false
        }
    }
}

impl Iterator for MatchingIter {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        self.step().then(|| self.current())
    }
}

fn stats_from_mates(mate: &[usize]) -> StatTriple {
    let n = mate.len() - 1;
    let mut st = StatTriple::default();
    for i in 1..=n {
        let j = mate[i];
        if j <= i {
            if j == 0 {
                // unmatched vertex i: count covering edges
                st.c += (1..i).filter(|&a| mate[a] > i).count();
            }
            continue;
        }
        st.ed += 1;
        // edges (k, l) with i < k < j < l
        st.cr += (i + 1..j).filter(|&k| mate[k] > j).count();
    }
    st
}

/// The statistics of one matching.
pub fn stats(m: &Matching) -> StatTriple {
    let mut mate = vec![0; m.n + 1];
    for &(i, j) in &m.edges {
        mate[i] = j;
        mate[j] = i;
    }
    stats_from_mates(&mate)
}

/// `c(n,k,q) = sum over matchings with k unmatched vertices of q^(c + cr)`, by enumeration.
pub fn c_table(n: usize) -> Result<BTreeMap<usize, QScalar>, OracleError> {
    let mut it = enumerate_matchings(n)?;
    let mut counts: BTreeMap<usize, Vec<i64>> = BTreeMap::new();
    while it.step() {
        let st = it.current_stats();
        let row = counts.entry(n - 2 * st.ed).or_default();
        let e = st.c + st.cr;
        if row.len() <= e {
            row.resize(e + 1, 0);
        }
        row[e] += 1;
    }
    Ok(counts
        .into_iter()
        .map(|(k, cs)| (k, QScalar::from_poly(QPolyZ::from_i64s(&cs))))
        .collect())
}

/// Rows `0..=n_max` of `c(n,k) = c(n-1,k-1) + [k+1] c(n-1,k+1)`, `c(0,k) = δ_k0`.
pub fn c_triangle(n_max: usize) -> Vec<Vec<QScalar>> {
    let mut rows = vec![vec![QScalar::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let at = |k: usize| prev.get(k).cloned().unwrap_or_else(QScalar::zero);
        let row = (0..=n)
            .map(|k| {
                let left = if k > 0 { at(k - 1) } else { QScalar::zero() };
                &left + &(&qint(k + 1) * &at(k + 1))
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// `c(n,k,q)` from the recurrence, keyed like [`c_table`] (nonzero entries only).
pub fn c_table_recurrence(n: usize) -> BTreeMap<usize, QScalar> {
    c_triangle(n)
        .pop()
        .unwrap_or_default()
        .into_iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .collect()
}

/// `b(n,k,q)` with `H̃_n = sum_k b(n,k,q) x^k (-s)^((n-k)/2)`.
pub fn b_table(n: usize) -> BTreeMap<usize, QScalar> {
    b_table_from(&cont_qhermite(n).entries[n], n)
}

pub(crate) fn b_table_from(h: &crate::mpoly::XSPoly, n: usize) -> BTreeMap<usize, QScalar> {
    (n % 2..=n)
        .step_by(2)
        .map(|k| {
            let e = (n - k) / 2;
            let c = h.coeff(k as u32, e as u32);
            (k, if e.is_multiple_of(2) { c } else { -c })
        })
        .filter(|(_, v)| !v.is_zero())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::binomial;
    use std::collections::HashSet;

    fn poly(cs: &[i64]) -> QScalar {
        QScalar::from_poly(QPolyZ::from_i64s(cs))
    }

    fn involutions(n: usize) -> usize {
        let mut a = vec![1usize, 1];
        for m in 2..=n {
            a.push(a[m - 1] + (m - 1) * a[m - 2]);
        }
        a[n]
    }

    #[test]
    fn counts_are_involution_numbers() {
        assert_eq!(enumerate_matchings(0).unwrap().count(), 1);
        assert_eq!(enumerate_matchings(2).unwrap().count(), 2);
        assert_eq!(enumerate_matchings(4).unwrap().count(), 10);
        for n in 0..=10 {
            assert_eq!(
                enumerate_matchings(n).unwrap().count(),
                involutions(n),
                "n={n}"
            );
        }
        assert_eq!(involutions(10), 9496);
    }

    #[test]
    fn matchings_are_distinct_and_canonical() {
        let all: Vec<Matching> = enumerate_matchings(7).unwrap().collect();
        let set: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), all.len());
        for m in &all {
            assert!(m.edges.windows(2).all(|w| w[0].0 < w[1].0));
            let mut seen = HashSet::new();
            for &(i, j) in &m.edges {
                assert!(1 <= i && i < j && j <= 7);
                assert!(seen.insert(i) && seen.insert(j));
            }
            let st = stats(m);
            assert!(st.cr <= binomial(st.ed as i64, 2) as usize);
            assert!(st.c <= st.ed * (7 - 2 * st.ed));
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            enumerate_matchings(15).err(),
            Some(OracleError::CapExceeded { n: 15, cap: 14 })
        );
        assert!(c_table(15).is_err());
    }

    #[test]
    fn statistics() {
        let st = stats(&Matching {
            n: 3,
            edges: vec![(1, 3)],
        });
        assert_eq!(st, StatTriple { ed: 1, cr: 0, c: 1 });
        let st = stats(&Matching {
            n: 4,
            edges: vec![(1, 3), (2, 4)],
        });
        assert_eq!(st.cr, 1);
        let st = stats(&Matching {
            n: 4,
            edges: vec![(1, 4), (2, 3)],
        });
        assert_eq!((st.cr, st.c), (0, 0));
        assert_eq!(
            stats(&Matching {
                n: 5,
                edges: vec![]
            }),
            StatTriple::default()
        );
    }

    #[test]
    fn c_values() {
        let t4 = c_table(4).unwrap();
        assert_eq!(t4[&0], poly(&[2, 1]));
        assert_eq!(t4[&2], poly(&[3, 2, 1]));
        assert_eq!(t4[&4], QScalar::one());
        assert_eq!(c_table(6).unwrap()[&0], poly(&[5, 6, 3, 1]));
        assert_eq!(c_table(3).unwrap()[&1], poly(&[2, 1]));
        assert_eq!(c_table_recurrence(2)[&0], QScalar::one());
    }

    #[test]
    fn oracle_matches_recurrence() {
        for n in 0..=10 {
            assert_eq!(c_table(n).unwrap(), c_table_recurrence(n), "n={n}");
        }
    }

    #[test]
    fn catalan_at_q_zero() {
        let zero = num_rational::BigRational::from_integer(0.into());
        let tri = c_triangle(12);
        for n in 0..=6usize {
            for k in 0..=n {
                let v = tri[2 * n][2 * k].eval_at(&zero).unwrap();
                let want = binomial(2 * n as i64, (n - k) as i64)
                    - binomial(2 * n as i64, n as i64 - k as i64 - 1);
                assert_eq!(
                    v,
                    num_rational::BigRational::from_integer(want.into()),
                    "n={n} k={k}"
                );
            }
        }
        assert_eq!(
            tri[8][0].eval_at(&zero).unwrap(),
            num_rational::BigRational::from_integer(14.into())
        );
    }

    #[test]
    fn b_values() {
        assert_eq!(b_table(2)[&0], QScalar::one());
        assert_eq!(b_table(4)[&2], poly(&[3, 2, 1]));
        for n in 0..=8 {
            assert_eq!(b_table(n)[&n], QScalar::one());
        }
    }
}
