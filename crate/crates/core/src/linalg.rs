//! Gaussian elimination over any [`Field`].
//!
//! Exact fields pivot on the first nonzero entry and decide zero with `==`;
//! float fields use partial pivoting and treat entries below
//! [`FLOAT_ZERO`] (relative to the column scale) as zero.

use crate::scalars::Field;

pub const FLOAT_ZERO: f64 = 1e-10;

pub fn negligible<S: Field>(x: &S) -> bool {
    if S::EXACT {
        x.is_zero()
    } else {
        x.magnitude() <= FLOAT_ZERO
    }
}

/// Reduced row echelon form, rows stored densely.
#[derive(Clone, Debug)]
pub struct Rref<S> {
    pub rows: Vec<Vec<S>>,
    pub pivots: Vec<usize>,
    pub cols: usize,
}

impl<S: Field> Rref<S> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of the null space, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<S>> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![S::zero(); self.cols];
            v[free] = S::one();
            for (r, &p) in self.pivots.iter().enumerate() {
                let c = &self.rows[r][free];
                if !c.is_zero() {
                    v[p] = c.neg_ref();
                }
            }
            out.push(v);
        }
        out
    }
}

pub fn rref<S: Field>(mut rows: Vec<Vec<S>>, cols: usize) -> Rref<S> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let pick = if S::EXACT {
            (r..rows.len()).find(|&i| !rows[i][c].is_zero())
        } else {
            (r..rows.len())
                .filter(|&i| !negligible(&rows[i][c]))
                .max_by(|&a, &b| rows[a][c].magnitude().total_cmp(&rows[b][c].magnitude()))
        };
        let Some(p) = pick else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        for v in rows[r].iter_mut().skip(c) {
            if !v.is_zero() {
                *v = v.mul_ref(&inv);
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let (prow, below) = tail.split_first_mut().expect("pivot row");
        for other in head.iter_mut().chain(below.iter_mut()) {
            if negligible(&other[c]) {
                if !S::EXACT {
                    other[c] = S::zero();
                }
                continue;
            }
            let f = other[c].clone();
            for k in c..cols {
                if !prow[k].is_zero() {
                    other[k] = other[k].sub_ref(&f.mul_ref(&prow[k]));
                }
            }
            other[c] = S::zero();
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    Rref { rows, pivots, cols }
}

pub fn kernel<S: Field>(rows: Vec<Vec<S>>, cols: usize) -> Vec<Vec<S>> {
    rref(rows, cols).kernel()
}

pub fn rank<S: Field>(rows: Vec<Vec<S>>, cols: usize) -> usize {
    rref(rows, cols).rank()
}

/// One solution of `A x = b`, or `None` if inconsistent.
pub fn solve<S: Field>(a: &[Vec<S>], b: &[S]) -> Option<Vec<S>> {
    let cols = a.first().map_or(0, |r| r.len());
    let aug: Vec<Vec<S>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let red = rref(aug, cols + 1);
    if red.pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![S::zero(); cols];
    for (r, &p) in red.pivots.iter().enumerate() {
        x[p] = red.rows[r][cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::QSqrt3;

    fn q(n: i64) -> QSqrt3 {
        QSqrt3::int(n)
    }

    #[test]
    fn kernel_of_rank_one() {
        let k = kernel(vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]], 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            let s = &(&v[0] + &(&q(2) * &v[1])) + &(&q(3) * &v[2]);
            assert!(num_traits::Zero::is_zero(&s));
        }
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = vec![vec![q(1), q(1)], vec![q(1), q(-1)]];
        assert_eq!(solve(&a, &[q(2), q(0)]), Some(vec![q(1), q(1)]));
        let b = vec![vec![q(1), q(1)], vec![q(2), q(2)]];
        assert_eq!(solve(&b, &[q(1), q(3)]), None);
    }

    #[test]
    fn float_rank() {
        let m = vec![vec![1.0, 2.0], vec![2.0, 4.0 + 1e-14]];
        assert_eq!(rank(m, 2), 1);
    }
}
