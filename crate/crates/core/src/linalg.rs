//! Small exact linear algebra: fraction-free rank, rational solves and Smith normal form.

use num_traits::{One, Zero};

use crate::scalar::{Zphi, Q};

/// Rank of a matrix over ℤ[φ] by fraction-free (Bareiss) elimination.
///
/// Every division performed is exact in ℤ[φ], so no fractions appear.
pub fn rank_zphi(mut m: Vec<Vec<Zphi>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = Zphi::ONE;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col];
        for r in rank + 1..rows {
            let f = m[r][col];
            for c in col..cols {
                let v = m[r][c] * pivot - f * m[rank][c];
                m[r][c] = v
                    .checked_div(prev)
                    .expect("Bareiss division is exact in an integral domain");
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Solves `a · x = b` over ℚ where `a` has `rows × cols` shape.
///
/// Returns `None` when the system is inconsistent. When there are free
/// variables they are set to zero; callers only use full-column-rank systems.
pub fn solve_q(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(*rhs);
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Q::one() / m[r][c];
        for v in m[r].iter_mut() {
            *v *= inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                for k in c..=cols {
                    let t = m[r][k] * f;
                    m[i][k] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![Q::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][cols];
    }
    Some(x)
}

/// Inverse of a square rational matrix, if it exists.
pub fn inverse_q(a: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = a.len();
    let mut cols = vec![vec![Q::zero(); n]; n];
    for j in 0..n {
        let mut e = vec![Q::zero(); n];
        e[j] = Q::one();
        let x = solve_q(a, &e)?;
        // verify, since solve_q zero-fills free variables
        for (i, row) in a.iter().enumerate() {
            let v: Q = row.iter().zip(&x).map(|(p, q)| p * q).sum();
            if v != e[i] {
                return None;
            }
        }
        for i in 0..n {
            cols[i][j] = x[i];
        }
    }
    Some(cols)
}

/// Smith normal form of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smith {
    /// Diagonal entries `d_1 | d_2 | …`, length `min(rows, cols)`, nonnegative.
    pub diagonal: Vec<i64>,
    /// Unimodular `rows × rows` matrix with `U · A · V = D`.
    pub left: Vec<Vec<i64>>,
}

/// Computes the Smith normal form `U·A·V = D`, returning `D`'s diagonal and `U`.
pub fn smith_normal_form(a: &[Vec<i64>]) -> Smith {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<i64>> = a.to_vec();
    let mut u: Vec<Vec<i64>> = (0..rows)
        .map(|i| (0..rows).map(|j| i64::from(i == j)).collect())
        .collect();
    let n = rows.min(cols);
    for t in 0..n {
        loop {
            // smallest nonzero entry in the remaining block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if m[i][j] != 0
                        && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            m.swap(t, pi);
            u.swap(t, pi);
            for row in m.iter_mut() {
                row.swap(t, pj);
            }
            let p = m[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let f = m[i][t] / p;
                if f != 0 {
                    for k in 0..cols {
                        m[i][k] -= f * m[t][k];
                    }
                    for k in 0..rows {
                        u[i][k] -= f * u[t][k];
                    }
                }
                if m[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let f = m[t][j] / p;
                if f != 0 {
                    for row in m.iter_mut() {
                        row[j] -= f * row[t];
                    }
                }
                if m[t][j] != 0 {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility: pivot must divide the rest of the block
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| m[i][j] % p != 0);
            match bad {
                Some((i, _)) => {
                    for k in 0..cols {
                        m[t][k] += m[i][k];
                    }
                    for k in 0..rows {
                        u[t][k] += u[i][k];
                    }
                }
                None => break,
            }
        }
        if m[t][t] < 0 {
            for k in 0..cols {
                m[t][k] = -m[t][k];
            }
            for k in 0..rows {
                u[t][k] = -u[t][k];
            }
        }
    }
    Smith {
        diagonal: (0..n).map(|i| m[i][i]).collect(),
        left: u,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    #[test]
    fn rank_of_identity_minus_reflection() {
        // A2 Cartan-matrix reflection s1 in the simple-root basis
        let m = vec![
            vec![Zphi::int(-2), Zphi::int(1)],
            vec![Zphi::ZERO, Zphi::ZERO],
        ];
        assert_eq!(rank_zphi(m), 1);
    }

    #[test]
    fn rank_over_golden_ring() {
        let m = vec![
            vec![Zphi::ONE, Zphi::PHI],
            vec![Zphi::PHI, Zphi::new(1, 1)],
        ];
        // second row is φ times the first
        assert_eq!(rank_zphi(m), 1);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = vec![vec![q(1)], vec![q(-1)]];
        assert_eq!(solve_q(&a, &[q(2), q(-2)]), Some(vec![q(2)]));
        assert_eq!(solve_q(&a, &[q(2), q(2)]), None);
    }

    #[test]
    fn smith_of_gl2_coroots() {
        let s = smith_normal_form(&[vec![1], vec![-1]]);
        assert_eq!(s.diagonal, vec![1]);
    }

    #[test]
    fn smith_of_a2_cartan() {
        let s = smith_normal_form(&[vec![2, -1], vec![-1, 2]]);
        assert_eq!(s.diagonal, vec![1, 3]);
    }

    #[test]
    fn smith_left_transform_is_consistent() {
        let a = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        let s = smith_normal_form(&a);
        assert_eq!(s.diagonal, vec![2, 6, 12]);
        // U·A has rows spanning the same lattice as D·V⁻¹; its row gcds follow D
        let ua: Vec<Vec<i64>> = (0..3)
            .map(|i| (0..3).map(|j| (0..3).map(|k| s.left[i][k] * a[k][j]).sum()).collect())
            .collect();
        for (i, row) in ua.iter().enumerate() {
            assert!(row.iter().all(|v| v % s.diagonal[i] == 0));
        }
    }
}
