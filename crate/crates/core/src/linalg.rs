//! Exact linear algebra over the rationals: rank by fraction-free
//! elimination and particular solutions of consistent linear systems.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::scalar::Rational;

/// Rank and pivot columns of a row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankProfile {
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
}

/// Scales a rational row by the lcm of its denominators.
fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    row.iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect()
}

/// Exact rank of a rational matrix via Bareiss elimination.
///
/// Rows are cleared of denominators first (which leaves the rank
/// unchanged); every intermediate entry is then a minor of the integer
/// matrix, so each division is exact.
pub fn rank(rows: &[Vec<Rational>]) -> RankProfile {
    let mut a: Vec<Vec<BigInt>> = rows.iter().map(|r| integer_row(r)).collect();
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut pivot_columns = Vec::new();
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..nrows {
            for j in col + 1..ncols {
                let num = &a[r][col] * &a[i][j] - &a[i][col] * &a[r][j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                a[i][j] = q;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[r][col].clone();
        pivot_columns.push(col);
        r += 1;
    }
    RankProfile {
        rank: r,
        pivot_columns,
    }
}

/// Outcome of solving `A·m = b` exactly.
#[derive(Clone, Debug, PartialEq)]
pub enum LinearSolution {
    /// Particular solution with every free variable set to zero.
    Solved {
        values: Vec<Rational>,
        pivot_columns: Vec<usize>,
    },
    Inconsistent,
}

/// Reduces `[A | b]` to reduced row echelon form and reads off the
/// solution whose free variables are zero.
pub fn solve_free_zero(a: &[Vec<Rational>], b: &[Rational]) -> LinearSolution {
    let ncols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut row = row.clone();
            row.push(rhs.clone());
            row
        })
        .collect();
    let nrows = m.len();
    let mut r = 0;
    let mut pivots = Vec::new();
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rational::one() / m[r][col].clone();
        for v in m[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..nrows {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in col..=ncols {
                    let t = &f * &m[r][j];
                    m[i][j] = &m[i][j] - t;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[ncols].is_zero()) {
        return LinearSolution::Inconsistent;
    }
    let mut values = vec![Rational::zero(); ncols];
    for (row, &col) in pivots.iter().enumerate() {
        values[col] = m[row][ncols].clone();
    }
    LinearSolution::Solved {
        values,
        pivot_columns: pivots,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rational, Scalar};
    use proptest::prelude::*;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    /// Independent oracle: rank as the size of the largest nonzero minor.
    fn rank_by_minors(rows: &[Vec<Rational>]) -> usize {
        fn det(m: &[Vec<Rational>]) -> Rational {
            if m.len() == 1 {
                return m[0][0].clone();
            }
            (0..m.len())
                .map(|c| {
                    let minor: Vec<Vec<Rational>> = m[1..]
                        .iter()
                        .map(|r| {
                            r.iter()
                                .enumerate()
                                .filter(|&(j, _)| j != c)
                                .map(|(_, v)| v.clone())
                                .collect()
                        })
                        .collect();
                    let s = if c % 2 == 0 { q(1) } else { q(-1) };
                    s * m[0][c].clone() * det(&minor)
                })
                .fold(q(0), |a, b| a + b)
        }
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            (k - 1..n)
                .flat_map(|last| {
                    subsets(last, k - 1).into_iter().map(move |mut s| {
                        s.push(last);
                        s
                    })
                })
                .collect()
        }
        let (nr, nc) = (rows.len(), rows[0].len());
        for k in (1..=nr.min(nc)).rev() {
            for rs in subsets(nr, k) {
                for cs in subsets(nc, k) {
                    let m: Vec<Vec<Rational>> = rs
                        .iter()
                        .map(|&i| cs.iter().map(|&j| rows[i][j].clone()).collect())
                        .collect();
                    if !Scalar::is_zero(&det(&m)) {
                        return k;
                    }
                }
            }
        }
        0
    }

    #[test]
    fn rank_of_small_matrices() {
        let m = vec![
            vec![q(1), q(2), q(3)],
            vec![q(2), q(4), q(6)],
            vec![q(0), q(1), q(1)],
        ];
        let p = rank(&m);
        assert_eq!(p.rank, 2);
        assert_eq!(p.pivot_columns, vec![0, 1]);
        let z = vec![vec![q(0); 3]; 2];
        assert_eq!(rank(&z).rank, 0);
        let frac = vec![vec![rational(1, 2), rational(1, 3)], vec![rational(3, 2), q(1)]];
        assert_eq!(rank(&frac).rank, 1);
    }

    #[test]
    fn solve_with_free_variables() {
        // x + y + z = 3, y - z = 0  →  pivots x, y; z free = 0
        let a = vec![vec![q(1), q(1), q(1)], vec![q(0), q(1), q(-1)]];
        let b = vec![q(3), q(0)];
        assert_eq!(
            solve_free_zero(&a, &b),
            LinearSolution::Solved {
                values: vec![q(3), q(0), q(0)],
                pivot_columns: vec![0, 1],
            }
        );
        let a = vec![vec![q(1), q(1)], vec![q(2), q(2)]];
        assert_eq!(solve_free_zero(&a, &[q(1), q(3)]), LinearSolution::Inconsistent);
    }

    proptest! {
        #[test]
        fn bareiss_rank_matches_minor_oracle(
            entries in proptest::collection::vec(-3i64..=3, 12),
            dup in any::<bool>(),
        ) {
            let mut rows: Vec<Vec<Rational>> = entries
                .chunks(4)
                .map(|c| c.iter().map(|&v| rational(v, 2)).collect())
                .collect();
            if dup {
                let r0 = rows[0].clone();
                rows[2] = r0.iter().map(|v| v.clone() * q(3)).collect();
            }
            prop_assert_eq!(rank(&rows).rank, rank_by_minors(&rows));
        }

        #[test]
        fn particular_solution_satisfies_system(
            entries in proptest::collection::vec(-4i64..=4, 15),
            x in proptest::collection::vec(-5i64..=5, 5),
        ) {
            let a: Vec<Vec<Rational>> = entries
                .chunks(5)
                .map(|c| c.iter().map(|&v| q(v)).collect())
                .collect();
            let b: Vec<Rational> = a
                .iter()
                .map(|row| row.iter().zip(&x).fold(q(0), |s, (u, &v)| s + u.clone() * q(v)))
                .collect();
            match solve_free_zero(&a, &b) {
                LinearSolution::Solved { values, .. } => {
                    for (row, rhs) in a.iter().zip(&b) {
                        let lhs = row.iter().zip(&values).fold(q(0), |s, (u, v)| s + u.clone() * v.clone());
                        prop_assert_eq!(&lhs, rhs);
                    }
                }
                LinearSolution::Inconsistent => prop_assert!(false, "consistent system reported inconsistent"),
            }
        }
    }
}
