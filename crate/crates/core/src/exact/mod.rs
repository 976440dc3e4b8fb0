//! Exact scalars and the dense polynomial / truncated power-series
//! arithmetic everything else is built on.

use alloc::vec::Vec;

mod param_poly;
mod rational;
mod scalar;
mod series;

pub use param_poly::ParamPoly;
pub use rational::{ParseRationalError, Rational};
pub use scalar::Scalar;
pub use series::{Polynomial, Series, SeriesError, Valuation};

/// First `count` Taylor coefficients of `numer / denom`, both given by
/// ascending coefficient lists.
///
/// Returns `None` when `denom(0) = 0`.
pub fn expand_quotient(
    numer: &[Rational],
    denom: &[Rational],
    count: usize,
) -> Option<Vec<Rational>> {
    if count == 0 {
        return denom.first().filter(|d| !d.is_zero()).map(|_| Vec::new());
    }
    let order = count - 1;
    let pad = |cs: &[Rational]| {
        Series::new(
            (0..=order)
                .map(|k| Scalar::Rational(cs.get(k).cloned().unwrap_or_default()))
                .collect(),
            order,
        )
        .expect("padded to order + 1")
    };
    let inv = pad(denom).reciprocal().ok()?;
    let out = pad(numer).mul(&inv);
    Some(
        out.into_coeffs()
            .into_iter()
            .map(|c| c.as_rational().expect("rational input stays rational"))
            .collect(),
    )
}
