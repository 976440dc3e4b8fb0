//! C-fractions `g(x) = 1/(1 + a_1 x^{q_1}/(1 + a_2 x^{q_2}/(1 + …)))` and
//! their correspondence with power series.
//!
//! A [`CFraction`] always denotes the shape above, with `g(0) = 1`. Its
//! reciprocal `1 + a_1 x^{q_1}/(1 + …)` is what the term-by-term extraction
//! actually consumes, so [`correspond`] inverts its input first.

use alloc::vec::Vec;

use crate::exact::{Polynomial, Scalar, Series, SeriesError, Valuation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CfracError {
    #[error("ConstantTermNotOne: series must start with 1, found {0}")]
    ConstantTermNotOne(Scalar),
    #[error("NonInvertibleLeadingScalar: partial quotient {step} has leading coefficient {leading} that does not divide the remainder")]
    NonInvertibleLeadingScalar { step: usize, leading: Scalar },
    #[error("IndexOutOfRange: index {index} with {len} partial quotients")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("LengthMismatch: {a} coefficients but {q} exponents")]
    LengthMismatch { a: usize, q: usize },
    #[error("ZeroCoefficient: a_{index} is zero")]
    ZeroCoefficient { index: usize },
    #[error("ZeroExponent: q_{index} must be at least 1")]
    ZeroExponent { index: usize },
    #[error("ZeroSeries: every trusted coefficient vanishes")]
    ZeroSeries,
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Whether a C-fraction is known in full.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    /// The expansion reached a remainder of exactly 1: the fraction is finite.
    Terminated,
    /// Extraction stopped at the input's trusted order; the fraction
    /// reproduces its series through `x^N` and says nothing beyond.
    Truncated(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CFraction {
    a: Vec<Scalar>,
    q: Vec<usize>,
    status: Status,
}

impl CFraction {
    /// Checks `len(a) = len(q)`, every `a_k ≠ 0` and every `q_k ≥ 1`.
    pub fn new(a: Vec<Scalar>, q: Vec<usize>, status: Status) -> Result<Self, CfracError> {
        if a.len() != q.len() {
            return Err(CfracError::LengthMismatch {
                a: a.len(),
                q: q.len(),
            });
        }
        if let Some(k) = a.iter().position(Scalar::is_zero) {
            return Err(CfracError::ZeroCoefficient { index: k + 1 });
        }
        if let Some(k) = q.iter().position(|&e| e == 0) {
            return Err(CfracError::ZeroExponent { index: k + 1 });
        }
        Ok(CFraction { a, q, status })
    }

    /// The fraction `1`, with no partial quotients.
    pub fn empty() -> Self {
        CFraction {
            a: Vec::new(),
            q: Vec::new(),
            status: Status::Terminated,
        }
    }

    /// `(a_1, a_2, …)`.
    pub fn a(&self) -> &[Scalar] {
        &self.a
    }

    /// `(q_1, q_2, …)`.
    pub fn q(&self) -> &[usize] {
        &self.q
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// `s_n = q_1 + … + q_n`, with `s_0 = 0`.
    pub fn s(&self, n: usize) -> usize {
        self.q[..n].iter().sum()
    }

    /// `(1, q_1, q_2, …)`: the exponent list with the leading 1 the
    /// closed-form machinery expects.
    pub fn qtilde(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.q.len() + 1);
        out.push(1);
        out.extend_from_slice(&self.q);
        out
    }

    /// Highest order to which this fraction's series is pinned.
    pub fn reliable_order(&self) -> Option<usize> {
        match self.status {
            Status::Terminated => None,
            Status::Truncated(n) => Some(n),
        }
    }

    /// Substitutes `γ = r` in every coefficient.
    pub fn eval_gamma(&self, r: &crate::exact::Rational) -> Result<CFraction, CfracError> {
        CFraction::new(
            self.a
                .iter()
                .map(|c| Scalar::Rational(c.eval_gamma(r)))
                .collect(),
            self.q.clone(),
            self.status,
        )
    }
}

/// Runs `f_{n+1} = a_{n+1} x^{q_{n+1}} / (f_n − 1)` starting from `h`, which
/// must have constant term 1.
fn extract(h: Series, exact: bool) -> Result<(Vec<Scalar>, Vec<usize>, Status), CfracError> {
    let trusted = h.order();
    let mut cur = h;
    let mut a = Vec::new();
    let mut q = Vec::new();
    loop {
        let tail = &cur - &Series::one(cur.order());
        match tail.valuation() {
            Valuation::ZeroSoFar => {
                let status = if exact {
                    Status::Terminated
                } else {
                    Status::Truncated(trusted)
                };
                return Ok((a, q, status));
            }
            Valuation::At(v) => {
                let lead = tail.coeff(v).clone();
                let step = a.len() + 1;
                let normalized = tail.shift_down(v).exact_div_scalar(&lead).ok_or_else(|| {
                    CfracError::NonInvertibleLeadingScalar {
                        step,
                        leading: lead.clone(),
                    }
                })?;
                cur = normalized.reciprocal()?;
                a.push(lead);
                q.push(v);
            }
        }
    }
}

/// Expands a series with constant term 1 into its C-fraction.
///
/// Extraction stops as soon as the remainder vanishes to its trusted order.
/// With `exact` set, such a remainder is taken to be identically zero and the
/// result is [`Status::Terminated`]; otherwise it is
/// [`Status::Truncated`] at the input's order.
pub fn correspond(f: &Series, exact: bool) -> Result<CFraction, CfracError> {
    let c0 = f.coeff(0);
    if !c0.is_one() {
        return Err(CfracError::ConstantTermNotOne(c0.clone()));
    }
    let (a, q, status) = extract(f.reciprocal()?, exact)?;
    Ok(CFraction { a, q, status })
}

/// Taylor expansion of the finite fraction to `order`.
///
/// For a truncated fraction the result is clipped to its reliable order.
pub fn evaluate(cf: &CFraction, order: usize) -> Series {
    let order = cf.reliable_order().map_or(order, |r| order.min(r));
    let one = Series::one(order);
    let mut t = one.clone();
    for (a, &q) in cf.a.iter().zip(&cf.q).rev() {
        let inv = t.reciprocal().expect("partial denominators start with 1");
        t = &one + &inv.shift_up(q).truncate(order).scale(a);
    }
    t.reciprocal().expect("partial denominators start with 1")
}

/// The `n`-th approximant `A_n / B_n` of `1 + a_1 x^{q_1}/(1 + …)`; the
/// fraction `g` itself is approximated by `B_n / A_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproximantPair {
    pub numerator: Polynomial,
    pub denominator: Polynomial,
    pub n: usize,
}

fn approximant_table(
    cf: &CFraction,
    n: usize,
) -> Result<Vec<(Polynomial, Polynomial)>, CfracError> {
    if n > cf.len() {
        return Err(CfracError::IndexOutOfRange {
            index: n,
            len: cf.len(),
        });
    }
    let mut table = Vec::with_capacity(n + 1);
    table.push((Polynomial::one(), Polynomial::one()));
    if n >= 1 {
        let first = &Polynomial::one() + &Polynomial::monomial(cf.a[0].clone(), cf.q[0]);
        table.push((first, Polynomial::one()));
    }
    for k in 2..=n {
        let step = Polynomial::monomial(cf.a[k - 1].clone(), cf.q[k - 1]);
        let (a1, b1) = &table[k - 1];
        let (a2, b2) = &table[k - 2];
        let next = (a1 + &(&step * a2), b1 + &(&step * b2));
        table.push(next);
    }
    Ok(table)
}

pub fn approximants(cf: &CFraction, n: usize) -> Result<ApproximantPair, CfracError> {
    let (numerator, denominator) = approximant_table(cf, n)?
        .pop()
        .expect("table has n + 1 rows");
    Ok(ApproximantPair {
        numerator,
        denominator,
        n,
    })
}

/// `A_n B_{n−1} − A_{n−1} B_n − (−1)^{n−1} a_1⋯a_n x^{s_n}`, which must be
/// the zero polynomial.
pub fn determinant_identity_residual(cf: &CFraction, n: usize) -> Result<Polynomial, CfracError> {
    if n == 0 {
        return Err(CfracError::IndexOutOfRange {
            index: 0,
            len: cf.len(),
        });
    }
    let table = approximant_table(cf, n)?;
    let (an, bn) = &table[n];
    let (ap, bp) = &table[n - 1];
    let lhs = &(an * bp) - &(ap * bn);
    let mut coeff = cf.a[..n].iter().fold(Scalar::one(), |acc, a| acc * a);
    if (n - 1) % 2 == 1 {
        coeff = -coeff;
    }
    let rhs = Polynomial::monomial(coeff, cf.s(n));
    Ok(&lhs - &rhs)
}

/// A series `f` written as `a_0 x^{q_0} · g(x)` with `g` a [`CFraction`];
/// obtained by expanding `1 + x f(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadingCFraction {
    pub a0: Scalar,
    pub q0: usize,
    pub tail: CFraction,
}

impl LeadingCFraction {
    pub fn evaluate(&self, order: usize) -> Series {
        if order < self.q0 {
            return Series::zero(order);
        }
        let g = evaluate(&self.tail, order - self.q0);
        g.scale(&self.a0).shift_up(self.q0)
    }
}

/// Expands an arbitrary nonzero series via `1 + x f(x)`.
pub fn correspond_leading(f: &Series, exact: bool) -> Result<LeadingCFraction, CfracError> {
    let lifted = &Series::one(f.order() + 1) + &f.shift_up(1);
    let (mut a, mut q, status) = extract(lifted, exact)?;
    if a.is_empty() {
        return Err(CfracError::ZeroSeries);
    }
    let a0 = a.remove(0);
    let q0 = q.remove(0) - 1;
    let status = match status {
        Status::Terminated => Status::Terminated,
        Status::Truncated(_) => Status::Truncated(f.order() - q0),
    };
    Ok(LeadingCFraction {
        a0,
        q0,
        tail: CFraction { a, q, status },
    })
}
