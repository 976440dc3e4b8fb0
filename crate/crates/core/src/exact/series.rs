use core::ops::{Add, Mul, Neg, Sub};

use alloc::vec;
use alloc::vec::Vec;

use super::{Rational, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("ZeroConstantTerm: the series has zero constant term and no reciprocal")]
    ZeroConstantTerm,
    #[error("NonInvertibleScalar: constant term {0} has no inverse in the scalar ring")]
    NonInvertibleScalar(Scalar),
    #[error("EmptySeries: a series needs at least its constant coefficient")]
    Empty,
    #[error("LengthMismatch: {len} coefficients cannot have order {order}")]
    LengthMismatch { len: usize, order: usize },
}

/// Result of [`Series::valuation`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Valuation {
    /// Index of the first nonzero coefficient.
    At(usize),
    /// Every trusted coefficient is zero.
    ZeroSoFar,
}

/// Truncated formal power series `c_0 + c_1 x + … + c_N x^N + O(x^{N+1})`.
///
/// The coefficient vector always has exactly `order + 1` entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Scalar>,
    order: usize,
}

impl Series {
    pub fn new(coeffs: Vec<Scalar>, order: usize) -> Result<Self, SeriesError> {
        if coeffs.len() != order + 1 {
            return Err(SeriesError::LengthMismatch {
                len: coeffs.len(),
                order,
            });
        }
        Ok(Series { coeffs, order })
    }

    /// Series whose order is fixed by the number of coefficients supplied.
    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Result<Self, SeriesError> {
        let order = coeffs.len().checked_sub(1).ok_or(SeriesError::Empty)?;
        Ok(Series { coeffs, order })
    }

    pub fn from_ints(coeffs: &[i64]) -> Result<Self, SeriesError> {
        Series::from_coeffs(coeffs.iter().map(|&c| Scalar::int(c)).collect())
    }

    pub fn from_rationals(coeffs: Vec<Rational>) -> Result<Self, SeriesError> {
        Series::from_coeffs(coeffs.into_iter().map(Scalar::Rational).collect())
    }

    pub fn constant(c: Scalar, order: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); order + 1];
        coeffs[0] = c;
        Series { coeffs, order }
    }

    pub fn one(order: usize) -> Self {
        Series::constant(Scalar::one(), order)
    }

    pub fn zero(order: usize) -> Self {
        Series::constant(Scalar::zero(), order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Scalar {
        &self.coeffs[k]
    }

    /// Drops coefficients above `order`; a larger `order` is clamped.
    pub fn truncate(&self, order: usize) -> Series {
        let order = order.min(self.order);
        Series {
            coeffs: self.coeffs[..=order].to_vec(),
            order,
        }
    }

    pub fn valuation(&self) -> Valuation {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map_or(Valuation::ZeroSoFar, Valuation::At)
    }

    pub fn scale(&self, c: &Scalar) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            order: self.order,
        }
    }

    /// Divides every coefficient by `c`, provided each division is exact.
    pub fn exact_div_scalar(&self, c: &Scalar) -> Option<Series> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|x| x.exact_div(c))
            .collect::<Option<Vec<_>>>()?;
        Some(Series {
            coeffs,
            order: self.order,
        })
    }

    /// Multiplies by `x^k`; the low coefficients are exact zeros so the
    /// trusted order grows by `k`.
    pub fn shift_up(&self, k: usize) -> Series {
        let mut coeffs = vec![Scalar::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Series {
            coeffs,
            order: self.order + k,
        }
    }

    /// Divides by `x^k`. Panics if a dropped coefficient is nonzero or `k`
    /// exceeds the order.
    pub fn shift_down(&self, k: usize) -> Series {
        assert!(k <= self.order, "shift past the trusted order");
        assert!(
            self.coeffs[..k].iter().all(Scalar::is_zero),
            "shift_down would discard nonzero coefficients"
        );
        Series {
            coeffs: self.coeffs[k..].to_vec(),
            order: self.order - k,
        }
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Series) -> Series {
        let order = self.order.min(other.order);
        let mut coeffs = vec![Scalar::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        Series { coeffs, order }
    }

    /// Multiplicative inverse to the same order.
    pub fn reciprocal(&self) -> Result<Series, SeriesError> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let inv0 = c0
            .inverse()
            .ok_or_else(|| SeriesError::NonInvertibleScalar(c0.clone()))?;
        let mut out: Vec<Scalar> = Vec::with_capacity(self.order + 1);
        out.push(inv0.clone());
        for k in 1..=self.order {
            let mut acc = Scalar::zero();
            for i in 1..=k {
                let fi = &self.coeffs[i];
                if !fi.is_zero() {
                    acc = acc + fi * &out[k - i];
                }
            }
            out.push(-(&acc * &inv0));
        }
        Ok(Series {
            coeffs: out,
            order: self.order,
        })
    }

    fn zip_with(&self, other: &Series, op: impl Fn(&Scalar, &Scalar) -> Scalar) -> Series {
        let order = self.order.min(other.order);
        Series {
            coeffs: (0..=order)
                .map(|k| op(&self.coeffs[k], &other.coeffs[k]))
                .collect(),
            order,
        }
    }

    /// Substitutes `γ = r` in every coefficient.
    pub fn eval_gamma(&self, r: &Rational) -> Series {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| Scalar::Rational(c.eval_gamma(r)))
                .collect(),
            order: self.order,
        }
    }
}

impl Add<&Series> for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub<&Series> for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul<&Series> for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        Series::mul(self, rhs)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            order: self.order,
        }
    }
}

/// Dense polynomial in `x` with [`Scalar`] coefficients, trailing zeros
/// stripped.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::new(vec![Scalar::one()])
    }

    /// `c · x^k`.
    pub fn monomial(c: Scalar, k: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); k + 1];
        coeffs[k] = c;
        Polynomial::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients `0..=order` as an exact truncated series.
    pub fn to_series(&self, order: usize) -> Series {
        Series {
            coeffs: (0..=order).map(|k| self.coeff(k)).collect(),
            order,
        }
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Polynomial::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(cs: &[i64]) -> Series {
        Series::from_ints(cs).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(s(&[1, 1, 0]).mul(&s(&[1, -1, 0])), s(&[1, 0, -1]));
    }

    #[test]
    fn identity_truncates() {
        let f = s(&[3, 1, 4, 1, 5]);
        assert_eq!(f.mul(&Series::one(2)), s(&[3, 1, 4]));
    }

    #[test]
    fn catalan_reciprocal() {
        let c = s(&[1, 1, 2, 5, 14]);
        let r = c.reciprocal().unwrap();
        assert_eq!(r, s(&[1, -1, -1, -2, -5]));
        assert_eq!(c.mul(&r), Series::one(4));
    }

    #[test]
    fn geometric_and_constant_reciprocals() {
        let mut one_minus_x = Series::one(5);
        one_minus_x = &one_minus_x - &s(&[0, 1, 0, 0, 0, 0]);
        assert_eq!(one_minus_x.reciprocal().unwrap(), s(&[1, 1, 1, 1, 1, 1]));
        let two = s(&[2, 0]);
        assert_eq!(
            two.reciprocal().unwrap(),
            Series::from_coeffs(vec![Scalar::ratio(1, 2), Scalar::zero()]).unwrap()
        );
    }

    #[test]
    fn reciprocal_errors() {
        assert_eq!(s(&[0, 1]).reciprocal(), Err(SeriesError::ZeroConstantTerm));
        let f = Series::from_coeffs(vec![Scalar::gamma(), Scalar::one()]).unwrap();
        assert!(matches!(
            f.reciprocal(),
            Err(SeriesError::NonInvertibleScalar(_))
        ));
        // A constant polynomial is invertible.
        let g = Series::from_coeffs(vec![
            Scalar::Poly(crate::exact::ParamPoly::constant(Rational::from(2))),
            Scalar::gamma(),
        ])
        .unwrap();
        assert_eq!(g.mul(&g.reciprocal().unwrap()), Series::one(1));
    }

    #[test]
    fn valuation() {
        assert_eq!(s(&[0, 0, 3, 1]).valuation(), Valuation::At(2));
        assert_eq!(s(&[1, 5]).valuation(), Valuation::At(0));
        assert_eq!(s(&[0, 0, 0, 0]).valuation(), Valuation::ZeroSoFar);
    }

    #[test]
    fn order_is_min_of_operands() {
        let f = s(&[1, 2, 3, 4]);
        let g = s(&[1, 1]);
        assert_eq!((&f + &g).order(), 1);
        assert_eq!(f.mul(&g).order(), 1);
        assert_eq!(
            Series::new(vec![Scalar::one()], 2),
            Err(SeriesError::LengthMismatch { len: 1, order: 2 })
        );
    }

    #[test]
    fn shifts() {
        let f = s(&[0, 0, 3, 1]);
        assert_eq!(f.shift_down(2), s(&[3, 1]));
        assert_eq!(s(&[3, 1]).shift_up(2), f);
    }
}
