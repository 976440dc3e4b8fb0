#![allow(dead_code)]

use cfhankel::{CFraction, Rational, Scalar, Series, Status};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn coefficient_pool() -> Vec<Rational> {
    let mut pool: Vec<Rational> = [-3, -2, -1, 1, 2, 3].map(Rational::from).to_vec();
    pool.push(Rational::new(1, 2));
    pool.push(Rational::new(-1, 2));
    pool
}

/// A terminating fraction with 1 to `max_len` quotients, `a_k` from the
/// pool, `q_k ∈ {1, 2, 3}`, and every `p_n` nonnegative.
pub fn random_cfraction<R: Rng>(rng: &mut R, max_len: usize) -> CFraction {
    let pool = coefficient_pool();
    let len = rng.gen_range(1..=max_len);
    let mut a = Vec::with_capacity(len);
    let mut q = Vec::with_capacity(len);
    let mut prev_p = 1;
    for _ in 0..len {
        let e = rng.gen_range(prev_p.max(1)..=3);
        prev_p = e - prev_p;
        q.push(e);
        a.push(Scalar::Rational(pool.choose(rng).unwrap().clone()));
    }
    CFraction::new(a, q, Status::Terminated).unwrap()
}

/// Order-`order` series with constant term 1; about a third of the other
/// coefficients are zero.
pub fn random_unit_series<R: Rng>(rng: &mut R, order: usize) -> Series {
    let pool = coefficient_pool();
    let mut coeffs = vec![Scalar::one()];
    for _ in 0..order {
        let c = if rng.gen_bool(0.3) {
            Scalar::zero()
        } else {
            Scalar::Rational(pool.choose(rng).unwrap().clone())
        };
        coeffs.push(c);
    }
    Series::new(coeffs, order).unwrap()
}

pub fn random_coefficients<R: Rng>(rng: &mut R, len: usize) -> Vec<Scalar> {
    let pool = coefficient_pool();
    (0..len)
        .map(|_| Scalar::Rational(pool.choose(rng).unwrap().clone()))
        .collect()
}

pub fn ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&c| Scalar::int(c)).collect()
}
