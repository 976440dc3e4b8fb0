use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::{ParamPoly, Rational};

/// The coefficient ring every computation runs in: either an exact rational
/// or a polynomial in γ over the rationals.
///
/// Mixed-variant arithmetic promotes to [`Scalar::Poly`]. Equality is by
/// value, so `Rational(2)` equals the constant polynomial `2`.
#[derive(Clone)]
pub enum Scalar {
    Rational(Rational),
    Poly(ParamPoly),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(Rational::one())
    }

    pub fn int(n: i64) -> Self {
        Scalar::Rational(Rational::from(n))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::Rational(Rational::new(n, d))
    }

    /// The formal parameter γ.
    pub fn gamma() -> Self {
        Scalar::Poly(ParamPoly::gamma())
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Poly(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Poly(p) => p.as_constant().is_some_and(|c| c.is_one()),
        }
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, Scalar::Poly(_))
    }

    /// The rational value if the scalar does not depend on γ.
    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Scalar::Rational(r) => Some(r.clone()),
            Scalar::Poly(p) => p.as_constant(),
        }
    }

    pub fn to_poly(&self) -> ParamPoly {
        match self {
            Scalar::Rational(r) => ParamPoly::constant(r.clone()),
            Scalar::Poly(p) => p.clone(),
        }
    }

    /// Multiplicative inverse within the ring. Fails for zero and for
    /// polynomials of positive degree.
    pub fn inverse(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(r) => r.recip().map(Scalar::Rational),
            Scalar::Poly(p) => p
                .as_constant()
                .and_then(|c| c.recip())
                .map(|c| Scalar::Poly(ParamPoly::constant(c))),
        }
    }

    /// `self / divisor` when the quotient stays in the ring.
    pub fn exact_div(&self, divisor: &Scalar) -> Option<Scalar> {
        match (self, divisor) {
            (Scalar::Rational(a), Scalar::Rational(b)) => {
                b.recip().map(|inv| Scalar::Rational(a * inv))
            }
            _ => self
                .to_poly()
                .exact_div(&divisor.to_poly())
                .map(Scalar::Poly),
        }
    }

    pub fn pow(&self, exp: u64) -> Scalar {
        match self {
            Scalar::Rational(r) => {
                let e = u32::try_from(exp).expect("exponent fits in u32");
                Scalar::Rational(r.pow(e))
            }
            Scalar::Poly(p) => Scalar::Poly(p.pow(exp)),
        }
    }

    /// Substitutes `γ = r`.
    pub fn eval_gamma(&self, r: &Rational) -> Rational {
        match self {
            Scalar::Rational(x) => x.clone(),
            Scalar::Poly(p) => p.eval(r),
        }
    }

    /// `Some(+1)`, `Some(-1)` or `Some(0)` for rationals; `None` for
    /// non-constant polynomials.
    pub fn sign(&self) -> Option<i8> {
        let r = self.as_rational()?;
        Some(if r.is_zero() {
            0
        } else if r.is_negative() {
            -1
        } else {
            1
        })
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Rational(r)
    }
}

impl From<ParamPoly> for Scalar {
    fn from(p: ParamPoly) -> Self {
        Scalar::Poly(p)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a == b,
            _ => self.to_poly() == other.to_poly(),
        }
    }
}

impl Eq for Scalar {}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => fmt::Display::fmt(r, f),
            Scalar::Poly(p) => fmt::Display::fmt(p, f),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Poly(p) => write!(f, "[{p}]"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Poly(p) => Scalar::Poly(-p),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a.$method(b)),
                    (Scalar::Poly(a), Scalar::Poly(b)) => Scalar::Poly(a.$method(b)),
                    _ => Scalar::Poly(self.to_poly().$method(&rhs.to_poly())),
                }
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

scalar_binop!(Add, add);
scalar_binop!(Sub, sub);
scalar_binop!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_arithmetic_promotes() {
        let s = Scalar::int(2) + Scalar::gamma();
        assert!(s.is_symbolic());
        assert_eq!(s.eval_gamma(&Rational::from(3)), Rational::from(5));
        assert_eq!(
            Scalar::int(2),
            Scalar::Poly(ParamPoly::constant(Rational::from(2)))
        );
    }

    #[test]
    fn inverse_and_division() {
        assert_eq!(Scalar::ratio(2, 3).inverse(), Some(Scalar::ratio(3, 2)));
        assert_eq!(Scalar::zero().inverse(), None);
        assert_eq!(Scalar::gamma().inverse(), None);
        let g2 = &Scalar::gamma() * &Scalar::gamma();
        assert_eq!(g2.exact_div(&Scalar::gamma()), Some(Scalar::gamma()));
        assert_eq!(Scalar::int(1).exact_div(&Scalar::gamma()), None);
        assert_eq!(Scalar::int(1).exact_div(&Scalar::zero()), None);
    }
}
