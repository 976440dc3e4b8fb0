//! Ground-truth Hankel determinants by fraction-free elimination.

use alloc::vec::Vec;

use crate::exact::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HankelError {
    #[error("InsufficientTerms: need {needed} sequence terms, have {available}")]
    InsufficientTerms { needed: usize, available: usize },
}

/// The `(n+1)×(n+1)` matrix with entry `(i, j) = seq[i + j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HankelMatrix {
    terms: Vec<Scalar>,
    n: usize,
}

impl HankelMatrix {
    pub fn new(seq: &[Scalar], n: usize) -> Result<Self, HankelError> {
        let needed = 2 * n + 1;
        if seq.len() < needed {
            return Err(HankelError::InsufficientTerms {
                needed,
                available: seq.len(),
            });
        }
        Ok(HankelMatrix {
            terms: seq[..needed].to_vec(),
            n,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.n + 1
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.terms[i + j]
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.size())
            .map(|i| (0..self.size()).map(|j| self.entry(i, j).clone()).collect())
            .collect()
    }

    pub fn determinant(&self) -> Scalar {
        bareiss_determinant(self.rows())
    }
}

/// Determinant of a square matrix over an integral domain by Bareiss
/// elimination.
///
/// Row exchanges flip the sign; a pivot column with no nonzero entry gives 0.
/// Panics if a Bareiss division is not exact, which can only happen when the
/// ring arithmetic is wrong.
pub fn bareiss_determinant(mut m: Vec<Vec<Scalar>>) -> Scalar {
    let size = m.len();
    assert!(
        m.iter().all(|row| row.len() == size),
        "matrix must be square"
    );
    if size == 0 {
        return Scalar::one();
    }
    let mut negate = false;
    let mut prev = Scalar::one();
    for k in 0..size - 1 {
        if m[k][k].is_zero() {
            match (k + 1..size).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Scalar::zero(),
            }
        }
        let (upper, lower) = m.split_at_mut(k + 1);
        let pivot_row = &upper[k];
        let pivot = &pivot_row[k];
        for row in lower.iter_mut() {
            let factor = row[k].clone();
            for j in k + 1..size {
                let num = &(&row[j] * pivot) - &(&factor * &pivot_row[j]);
                row[j] = num
                    .exact_div(&prev)
                    .expect("Bareiss step must divide exactly");
            }
            row[k] = Scalar::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[size - 1][size - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// `det(seq[i + j])_{0 ≤ i, j ≤ n}`.
pub fn hankel_det(seq: &[Scalar], n: usize) -> Result<Scalar, HankelError> {
    Ok(HankelMatrix::new(seq, n)?.determinant())
}

/// `(h_0, …, h_max_n)`.
pub fn hankel_transform(seq: &[Scalar], max_n: usize) -> Result<Vec<Scalar>, HankelError> {
    let needed = 2 * max_n + 1;
    if seq.len() < needed {
        return Err(HankelError::InsufficientTerms {
            needed,
            available: seq.len(),
        });
    }
    (0..=max_n).map(|n| hankel_det(seq, n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&c| Scalar::int(c)).collect()
    }

    #[test]
    fn rank_one_examples() {
        let seq = ints(&[1, 0, 0]);
        assert_eq!(hankel_det(&seq, 0).unwrap(), Scalar::one());
        assert_eq!(hankel_det(&seq, 1).unwrap(), Scalar::zero());
        assert_eq!(
            hankel_transform(&ints(&[1; 7]), 2).unwrap(),
            ints(&[1, 0, 0])
        );
    }

    #[test]
    fn catalan_is_all_ones() {
        let seq = ints(&[1, 1, 2, 5, 14]);
        assert_eq!(hankel_det(&seq, 2).unwrap(), Scalar::one());
    }

    #[test]
    fn needs_pivoting() {
        // [[0,1],[1,0]] has determinant -1.
        assert_eq!(hankel_det(&ints(&[0, 1, 0]), 1).unwrap(), Scalar::int(-1));
        // Zero pivot column.
        assert_eq!(hankel_det(&ints(&[0, 0, 5]), 1).unwrap(), Scalar::zero());
    }

    #[test]
    fn insufficient_terms() {
        assert_eq!(
            hankel_det(&ints(&[1, 2]), 1),
            Err(HankelError::InsufficientTerms {
                needed: 3,
                available: 2
            })
        );
        assert!(hankel_transform(&ints(&[1, 2, 3, 4]), 2).is_err());
    }

    #[test]
    fn matrix_is_symmetric() {
        let m = HankelMatrix::new(&ints(&[1, 2, 3, 4, 5]), 2).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m.entry(i, j), m.entry(j, i));
            }
        }
        assert_eq!(bareiss_determinant(vec![]), Scalar::one());
    }
}
