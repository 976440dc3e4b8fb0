//! Closed-form Hankel transforms of C-fractions.
//!
//! A C-fraction `1/(1 + a_1 x^{q_1}/(1 + …))` is rewritten as the fraction
//! `x^{p_0}/(b_1 x^{p_0} + 1/(b_2 x^{p_1} + 1/(b_3 x^{p_2} + …)))` with
//! `p_0 = 1`, `p_n = q̃_n − p_{n−1}` and `a_k = 1/(b_k b_{k+1})`. The
//! nonzero Hankel determinants then sit at positions `p_1 + … + p_m` and are
//! signed monomials in the `a_k`.

use core::fmt;
use core::str::FromStr;

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::cfrac::CFraction;
use crate::exact::{self, Rational, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClosedFormError {
    #[error(
        "NegativePExponent: p_{index} = {value} is negative; the fraction has no P-fraction form"
    )]
    NegativePExponent { index: usize, value: i64 },
    #[error("InvalidExponent: q̃_{index} = {value} (need q̃_0 = 1 and q̃_n ≥ 1)")]
    InvalidExponent { index: usize, value: usize },
    #[error("ZeroCoefficient: coefficient {index} is zero")]
    ZeroCoefficient { index: usize },
    #[error("NotEnoughTerms: need {needed} terms, have {available}")]
    NotEnoughTerms { needed: usize, available: usize },
    #[error("MultiplicityConflict: position {position} receives both {first} and {second}")]
    MultiplicityConflict {
        position: usize,
        first: Box<Scalar>,
        second: Box<Scalar>,
    },
    #[error("NonInvertibleQuotient: {0} is not an element of the scalar ring")]
    NonInvertibleQuotient(String),
}

/// Which sign factor to use in the monomial formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Convention {
    /// `(−1)^{1 + Σ i·p_{i+1}}`, as the formula is commonly printed.
    AsPrinted,
    /// `(−1)^{Σ i·p_{i+1}}`, which reproduces the determinants.
    SignCorrected,
}

/// Convention chosen by checking both against the determinant oracle on
/// every catalog entry; `catalog::verify_paper_claims` re-derives it.
pub const ARBITRATED_CONVENTION: Convention = Convention::SignCorrected;

impl Convention {
    pub const ALL: [Convention; 2] = [Convention::AsPrinted, Convention::SignCorrected];

    pub fn name(self) -> &'static str {
        match self {
            Convention::AsPrinted => "as-printed",
            Convention::SignCorrected => "sign-corrected",
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Convention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "as-printed" => Ok(Convention::AsPrinted),
            "sign-corrected" => Ok(Convention::SignCorrected),
            other => Err(alloc::format!(
                "unknown convention {other:?} (expected as-printed or sign-corrected)"
            )),
        }
    }
}

/// `p_0 = q̃_0`, `p_n = q̃_n − p_{n−1}`.
pub fn p_sequence(qtilde: &[usize]) -> Result<Vec<usize>, ClosedFormError> {
    let mut p = Vec::with_capacity(qtilde.len());
    for (n, &qt) in qtilde.iter().enumerate() {
        if (n == 0 && qt != 1) || qt == 0 {
            return Err(ClosedFormError::InvalidExponent {
                index: n,
                value: qt,
            });
        }
        let value = match p.last() {
            None => qt as i64,
            Some(&prev) => qt as i64 - prev as i64,
        };
        if value < 0 {
            return Err(ClosedFormError::NegativePExponent { index: n, value });
        }
        p.push(value as usize);
    }
    Ok(p)
}

/// Exponent bookkeeping derived from `(q_1, …, q_M)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexProfile {
    /// `(1, q_1, …, q_M)`.
    pub qtilde: Vec<usize>,
    /// `(p_0, …, p_M)`.
    pub p: Vec<usize>,
    /// `m_n = p_0 + … + p_n`.
    pub m: Vec<usize>,
    /// `n_j = p_1 + … + p_j = m_j − 1`; repeats encode multiplicity.
    pub dense_pos: Vec<usize>,
}

/// Coefficients of `(1 + x G(x)) / (1 − x²)` where `G` generates
/// `q_1, q_2, …`; the first `len(q) + 1` of them are the index set.
pub fn index_generating_series(q: &[usize], count: usize) -> Vec<Rational> {
    let mut numer = vec![Rational::one()];
    numer.extend(q.iter().map(|&e| Rational::from(e as i64)));
    let denom = [Rational::one(), Rational::zero(), Rational::from(-1)];
    exact::expand_quotient(&numer, &denom, count).expect("1 − x² is invertible")
}

pub fn index_profile(q: &[usize]) -> Result<IndexProfile, ClosedFormError> {
    let mut qtilde = vec![1];
    qtilde.extend_from_slice(q);
    let p = p_sequence(&qtilde)?;
    let m: Vec<usize> = p
        .iter()
        .scan(0, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect();
    let dense_pos = m.iter().map(|&x| x - 1).collect();
    let riordan = index_generating_series(q, m.len());
    assert!(
        riordan
            .iter()
            .zip(&m)
            .all(|(r, &mi)| *r == Rational::from(mi as i64)),
        "index set disagrees with its generating function"
    );
    Ok(IndexProfile {
        qtilde,
        p,
        m,
        dense_pos,
    })
}

/// A formal quotient `num / den` of scalars, used where a coefficient such
/// as `γ^{−1}` has no inverse inside the scalar ring.
///
/// Equality is by cross-multiplication.
#[derive(Debug, Clone)]
pub struct Quotient {
    num: Scalar,
    den: Scalar,
}

impl Quotient {
    /// `None` if `den` is zero. Reduces to `q / 1` whenever the division is
    /// exact.
    pub fn new(num: Scalar, den: Scalar) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(match num.exact_div(&den) {
            Some(q) => Quotient {
                num: q,
                den: Scalar::one(),
            },
            None => Quotient { num, den },
        })
    }

    pub fn from_scalar(s: Scalar) -> Self {
        Quotient {
            num: s,
            den: Scalar::one(),
        }
    }

    pub fn one() -> Self {
        Quotient::from_scalar(Scalar::one())
    }

    pub fn num(&self) -> &Scalar {
        &self.num
    }

    pub fn den(&self) -> &Scalar {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Option<Quotient> {
        Quotient::new(self.den.clone(), self.num.clone())
    }

    pub fn mul(&self, other: &Quotient) -> Quotient {
        Quotient::new(&self.num * &other.num, &self.den * &other.den)
            .expect("denominators are nonzero")
    }

    pub fn neg(&self) -> Quotient {
        Quotient {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    /// Integer power; `None` for a negative power of zero.
    pub fn powi(&self, exp: i64) -> Option<Quotient> {
        let base = if exp < 0 { self.recip()? } else { self.clone() };
        let e = exp.unsigned_abs();
        Quotient::new(base.num.pow(e), base.den.pow(e))
    }

    /// The scalar value, if the quotient lies in the ring.
    pub fn to_scalar(&self) -> Option<Scalar> {
        self.num.exact_div(&self.den)
    }

    /// Substitutes `γ = r`; `None` if the denominator vanishes there.
    pub fn eval_gamma(&self, r: &Rational) -> Option<Rational> {
        let d = self.den.eval_gamma(r);
        d.recip().map(|inv| self.num.eval_gamma(r) * inv)
    }
}

impl PartialEq for Quotient {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for Quotient {}

impl fmt::Display for Quotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// `b_0, …, b_L` from `a_0, …, a_{L−1}` (with `a_0 = 1` for C-fractions of
/// the standard shape), by the alternating product formulas
/// `b_{2n} = (a_0 a_2 ⋯ a_{2n−2}) / (a_1 a_3 ⋯ a_{2n−1})` and
/// `b_{2n+1} = (a_1 a_3 ⋯ a_{2n−1}) / (a_0 a_2 ⋯ a_{2n})`.
pub fn b_from_a(a: &[Scalar]) -> Result<Vec<Quotient>, ClosedFormError> {
    if let Some(k) = a.iter().position(Scalar::is_zero) {
        return Err(ClosedFormError::ZeroCoefficient { index: k });
    }
    let mut b = Vec::with_capacity(a.len() + 1);
    // Products over even and odd indices below the current one.
    let mut even = Scalar::one();
    let mut odd = Scalar::one();
    for j in 0..=a.len() {
        let (num, den) = if j % 2 == 0 {
            (even.clone(), odd.clone())
        } else {
            (odd.clone(), even.clone())
        };
        b.push(Quotient::new(num, den).expect("products of nonzero scalars"));
        if let Some(aj) = a.get(j) {
            if j % 2 == 0 {
                even = &even * aj;
            } else {
                odd = &odd * aj;
            }
        }
    }
    Ok(b)
}

/// `a_k = 1/(b_k b_{k+1})` for `k = 0, …, len(b) − 1`, given
/// `b = (b_1, b_2, …)` and the implicit `b_0 = 1`.
pub fn a_from_b(b: &[Quotient]) -> Result<Vec<Scalar>, ClosedFormError> {
    if let Some(k) = b.iter().position(Quotient::is_zero) {
        return Err(ClosedFormError::ZeroCoefficient { index: k + 1 });
    }
    let one = Quotient::one();
    let mut out = Vec::with_capacity(b.len());
    for k in 0..b.len() {
        let left = if k == 0 { &one } else { &b[k - 1] };
        let a = left.mul(&b[k]).recip().expect("nonzero b");
        let s = a
            .to_scalar()
            .ok_or_else(|| ClosedFormError::NonInvertibleQuotient(a.to_string()))?;
        out.push(s);
    }
    Ok(out)
}

/// The fraction `x^{p_0}/(b_1 x^{p_0} + 1/(b_2 x^{p_1} + …))` matching a
/// C-fraction with `a_0 = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PFraction {
    /// `(b_1, b_2, …)`; `b_0 = 1` is implicit.
    pub b: Vec<Quotient>,
    /// `(p_0, p_1, …)`; partial denominator `i` has exponent `p_{i−1}`.
    pub p: Vec<usize>,
}

impl PFraction {
    pub fn from_cfraction(cf: &CFraction) -> Result<Self, ClosedFormError> {
        let p = p_sequence(&cf.qtilde())?;
        let mut a = vec![Scalar::one()];
        a.extend(cf.a().iter().cloned());
        let mut b = b_from_a(&a)?;
        b.remove(0);
        Ok(PFraction { b, p })
    }
}

fn parity_flip(neg: &mut bool, count: usize) {
    if count % 2 == 1 {
        *neg = !*neg;
    }
}

/// Hankel value for the `m`-th block of a fraction
/// `1/(b_1 x^{e_1} + 1/(b_2 x^{e_2} + …))`, where `b` and `exps` list the
/// partial denominators from the first:
///
/// `Π (−1)^{e_i(e_i−1)/2} · (−1)^{Σ_{i<m} i·e_{i+1}} · Π b_i^{−(e_i + 2 Σ_{j>i} e_j)}`.
///
/// For a C-fraction, `exps = (p_0, p_1, …)` and `prop2_value(m + 1)` is the
/// determinant at position `p_1 + … + p_m`.
pub fn prop2_value(b: &[Quotient], exps: &[usize], m: usize) -> Result<Quotient, ClosedFormError> {
    if b.len() < m || exps.len() < m {
        return Err(ClosedFormError::NotEnoughTerms {
            needed: m,
            available: b.len().min(exps.len()),
        });
    }
    if let Some(k) = b[..m].iter().position(Quotient::is_zero) {
        return Err(ClosedFormError::ZeroCoefficient { index: k + 1 });
    }
    let e = &exps[..m];
    let mut neg = false;
    for &ei in e {
        parity_flip(&mut neg, ei * ei.saturating_sub(1) / 2);
    }
    parity_flip(&mut neg, (0..m).map(|i| i * e[i]).sum());
    let mut value = Quotient::one();
    let mut tail: usize = 0;
    for i in (0..m).rev() {
        let power = e[i] + 2 * tail;
        tail += e[i];
        let factor = b[i].powi(-(power as i64)).expect("nonzero b");
        value = value.mul(&factor);
    }
    Ok(if neg { value.neg() } else { value })
}

/// `sign · Π_{k=1}^m a_k^{e_k}` with `e_k = p_k + … + p_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialValue {
    pub sign: i8,
    /// `(e_1, …, e_m)`.
    pub exponents: Vec<usize>,
}

impl MonomialValue {
    pub fn instantiate(&self, a: &[Scalar]) -> Scalar {
        let prod = self
            .exponents
            .iter()
            .zip(a)
            .fold(Scalar::one(), |acc, (&e, ak)| acc * ak.pow(e as u64));
        match self.sign {
            0 => Scalar::zero(),
            s if s < 0 => -prod,
            _ => prod,
        }
    }

    /// Total degree in γ when every `a_k = γ`.
    pub fn total_exponent(&self) -> usize {
        self.exponents.iter().sum()
    }
}

fn monomial_from_p(p: &[usize], m: usize, convention: Convention) -> MonomialValue {
    let mut neg = convention == Convention::AsPrinted;
    for &pi in &p[1..=m] {
        parity_flip(&mut neg, pi * (pi + 1) / 2);
    }
    parity_flip(&mut neg, (0..m).map(|i| i * p[i + 1]).sum());
    let mut exponents = vec![0; m];
    let mut acc = 0;
    for k in (1..=m).rev() {
        acc += p[k];
        exponents[k - 1] = acc;
    }
    MonomialValue {
        sign: if neg { -1 } else { 1 },
        exponents,
    }
}

/// The `m`-th nonzero Hankel value of the C-fraction with coefficients
/// `a = (a_1, …)` and `qtilde = (1, q_1, …)`.
pub fn prop3_value(
    a: &[Scalar],
    qtilde: &[usize],
    m: usize,
    convention: Convention,
) -> Result<MonomialValue, ClosedFormError> {
    if a.len() < m || qtilde.len() < m + 1 {
        return Err(ClosedFormError::NotEnoughTerms {
            needed: m,
            available: a.len().min(qtilde.len().saturating_sub(1)),
        });
    }
    let p = p_sequence(&qtilde[..=m])?;
    if let Some(k) = a[..m].iter().position(Scalar::is_zero) {
        return Err(ClosedFormError::ZeroCoefficient { index: k + 1 });
    }
    Ok(monomial_from_p(&p, m, convention))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileEntry {
    pub n: usize,
    pub value: Scalar,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseTransform {
    pub dense: Vec<Scalar>,
    pub profile: Vec<ProfileEntry>,
    pub convention: Convention,
}

/// `(h_0, …, h_max_n)` of the finite C-fraction `(a, q̃)` from the monomial
/// formula, with the nonzero positions and their multiplicities.
pub fn dense_transform(
    a: &[Scalar],
    qtilde: &[usize],
    max_n: usize,
    convention: Convention,
) -> Result<DenseTransform, ClosedFormError> {
    if qtilde.len() != a.len() + 1 {
        return Err(ClosedFormError::NotEnoughTerms {
            needed: a.len() + 1,
            available: qtilde.len(),
        });
    }
    let p = p_sequence(qtilde)?;
    if let Some(k) = a.iter().position(Scalar::is_zero) {
        return Err(ClosedFormError::ZeroCoefficient { index: k + 1 });
    }
    let mut slots: Vec<Option<(Scalar, usize)>> = vec![None; max_n + 1];
    let mut position = 0;
    for m in 0..=a.len() {
        if m > 0 {
            position += p[m];
        }
        if position > max_n {
            break;
        }
        let value = monomial_from_p(&p, m, convention).instantiate(a);
        match &mut slots[position] {
            Some((existing, count)) => {
                if *existing != value {
                    return Err(ClosedFormError::MultiplicityConflict {
                        position,
                        first: Box::new(existing.clone()),
                        second: Box::new(value),
                    });
                }
                *count += 1;
            }
            slot @ None => *slot = Some((value, 1)),
        }
    }
    let mut dense = Vec::with_capacity(max_n + 1);
    let mut profile = Vec::new();
    for (n, slot) in slots.into_iter().enumerate() {
        match slot {
            Some((value, multiplicity)) => {
                dense.push(value.clone());
                profile.push(ProfileEntry {
                    n,
                    value,
                    multiplicity,
                });
            }
            None => dense.push(Scalar::zero()),
        }
    }
    Ok(DenseTransform {
        dense,
        profile,
        convention,
    })
}

pub fn dense_transform_of(
    cf: &CFraction,
    max_n: usize,
    convention: Convention,
) -> Result<DenseTransform, ClosedFormError> {
    dense_transform(cf.a(), &cf.qtilde(), max_n, convention)
}
