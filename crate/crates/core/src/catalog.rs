//! Named example fractions and the harness that checks their published
//! Hankel data against the determinant oracle and the closed forms.

use core::fmt;
use core::str::FromStr;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cfrac::{self, CFraction, Status};
use crate::closedform::{self, Convention, DenseTransform};
use crate::exact::{self, ParamPoly, Rational, Scalar, Series};
use crate::hankel;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("UnknownName: {0:?} is not a catalog entry (catalan, aerated-catalan, fibonacci-cf, rogers-ramanujan)")]
    UnknownName(String),
    #[error("UnexpectedParameter: {0} takes no γ parameter")]
    UnexpectedParameter(CatalogName),
    #[error("InvalidParameter: {0}")]
    InvalidParameter(String),
    #[error("ZeroConstantDenominator: the denominator vanishes at x = 0")]
    ZeroConstantDenominator,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogName {
    FibonacciCf,
    Catalan,
    AeratedCatalan,
    RogersRamanujan,
}

impl CatalogName {
    pub const ALL: [CatalogName; 4] = [
        CatalogName::FibonacciCf,
        CatalogName::Catalan,
        CatalogName::AeratedCatalan,
        CatalogName::RogersRamanujan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CatalogName::FibonacciCf => "fibonacci-cf",
            CatalogName::Catalan => "catalan",
            CatalogName::AeratedCatalan => "aerated-catalan",
            CatalogName::RogersRamanujan => "rogers-ramanujan",
        }
    }

    /// `q_k` for `k ≥ 1`.
    pub fn exponent(self, k: usize) -> usize {
        match self {
            CatalogName::FibonacciCf => {
                usize::try_from(fibonacci(k)).expect("Fibonacci exponent fits in usize")
            }
            CatalogName::Catalan => 1,
            CatalogName::AeratedCatalan => 2,
            CatalogName::RogersRamanujan => k,
        }
    }

    fn coefficient(self, k: usize, gamma: &Scalar) -> Scalar {
        match self {
            CatalogName::FibonacciCf => Scalar::Rational(Rational::from(fibonacci(k))),
            CatalogName::Catalan | CatalogName::AeratedCatalan => Scalar::int(-1),
            CatalogName::RogersRamanujan => gamma.clone(),
        }
    }

    /// Smallest number of partial quotients whose prefix pins the series
    /// through `x^order`.
    pub fn terms_for_order(self, order: usize) -> usize {
        let mut s = 0;
        let mut m = 0;
        loop {
            s += self.exponent(m + 1);
            if s > order {
                return m;
            }
            m += 1;
        }
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CatalogName {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CatalogName::ALL
            .into_iter()
            .find(|n| n.name() == s)
            .ok_or_else(|| CatalogError::UnknownName(s.to_string()))
    }
}

/// `F_0 = 0`, `F_1 = 1`, `F_{n+1} = F_n + F_{n−1}`.
pub fn fibonacci(n: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = core::mem::replace(&mut b, next);
    }
    a
}

/// `C_n = binomial(2n, n) / (n + 1)`.
pub fn catalan_number(n: usize) -> BigInt {
    let mut binom = BigInt::one();
    for k in 0..n {
        binom = binom * BigInt::from(2 * n - k) / BigInt::from(k + 1);
    }
    binom / BigInt::from(n + 1)
}

/// The first `terms` partial quotients of a named example.
///
/// `gamma` applies only to `rogers-ramanujan`, which is symbolic in γ when
/// it is omitted. The prefix is marked truncated at `s_{terms+1} − 1`, the
/// highest order it pins.
pub fn catalog_cfraction(
    name: CatalogName,
    gamma: Option<&Rational>,
    terms: usize,
) -> Result<CFraction, CatalogError> {
    let gamma = match (name, gamma) {
        (CatalogName::RogersRamanujan, None) => Scalar::gamma(),
        (CatalogName::RogersRamanujan, Some(g)) if g.is_zero() => {
            return Err(CatalogError::InvalidParameter(
                "γ = 0 makes every partial numerator vanish".to_string(),
            ))
        }
        (CatalogName::RogersRamanujan, Some(g)) => Scalar::Rational(g.clone()),
        (_, Some(_)) => return Err(CatalogError::UnexpectedParameter(name)),
        (_, None) => Scalar::one(),
    };
    let a = (1..=terms).map(|k| name.coefficient(k, &gamma)).collect();
    let q: Vec<usize> = (1..=terms).map(|k| name.exponent(k)).collect();
    let reliable = q.iter().sum::<usize>() + name.exponent(terms + 1) - 1;
    Ok(CFraction::new(a, q, Status::Truncated(reliable)).expect("catalog entries are well formed"))
}

/// First `count` Taylor coefficients of `numer / denom`.
pub fn expand_rational_gf(
    numer: &[Rational],
    denom: &[Rational],
    count: usize,
) -> Result<Vec<Rational>, CatalogError> {
    if denom.first().is_none_or(Rational::is_zero) {
        return Err(CatalogError::ZeroConstantDenominator);
    }
    Ok(exact::expand_quotient(numer, denom, count).expect("denominator checked"))
}

fn mul_coeffs(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

fn rats(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&c| Rational::from(c)).collect()
}

fn ints(v: impl IntoIterator<Item = i64>) -> Vec<Scalar> {
    v.into_iter().map(Scalar::int).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Confirmed,
    Refuted,
    Unchecked(String),
}

/// Expected and computed values after substituting a rational γ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpotCheck {
    pub gamma: Rational,
    pub expected: Vec<Rational>,
    pub computed: Vec<Rational>,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimReport {
    pub id: String,
    pub location: &'static str,
    /// Hankel position the claim refers to, for single-value claims.
    pub position: Option<usize>,
    pub expected: Vec<Scalar>,
    pub computed: Vec<Scalar>,
    /// Closed-form values under each convention, for value claims.
    pub closed_form: Vec<(Convention, Vec<Scalar>)>,
    pub spot_checks: Vec<SpotCheck>,
    pub verdict: Verdict,
}

/// Whether each convention's dense transform equals the oracle for one
/// catalog entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArbitrationRow {
    pub entry: CatalogName,
    pub max_n: usize,
    pub agrees: Vec<(Convention, bool)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub max_n: usize,
    /// The single convention matching the oracle on every entry, if any.
    pub convention: Option<Convention>,
    pub arbitration: Vec<ArbitrationRow>,
    pub claims: Vec<ClaimReport>,
}

impl VerificationReport {
    pub fn claim(&self, id: &str) -> Option<&ClaimReport> {
        self.claims.iter().find(|c| c.id == id)
    }
}

/// Oracle and closed-form data for one catalog entry up to `max_n`.
struct EntryRun {
    name: CatalogName,
    cf: CFraction,
    oracle: Vec<Scalar>,
    dense: Vec<(Convention, Option<DenseTransform>)>,
}

impl EntryRun {
    fn new(name: CatalogName, max_n: usize) -> EntryRun {
        let order = 2 * max_n;
        // One spare quotient so repeated positions at the edge keep their full
        // multiplicity.
        let cf =
            catalog_cfraction(name, None, name.terms_for_order(order) + 1).expect("catalog entry");
        let series = cfrac::evaluate(&cf, order);
        let oracle =
            hankel::hankel_transform(series.coeffs(), max_n).expect("series has 2·max_n + 1 terms");
        let dense = Convention::ALL
            .into_iter()
            .map(|c| (c, closedform::dense_transform_of(&cf, max_n, c).ok()))
            .collect();
        EntryRun {
            name,
            cf,
            oracle,
            dense,
        }
    }

    fn agrees(&self, convention: Convention) -> bool {
        self.dense_for(convention)
            .is_some_and(|d| d.dense == self.oracle)
    }

    fn dense_for(&self, convention: Convention) -> Option<&DenseTransform> {
        self.dense
            .iter()
            .find(|(c, _)| *c == convention)
            .and_then(|(_, d)| d.as_ref())
    }

    /// Positions `n_m` for `m = 0..count`, stopping past `max_n`.
    fn positions(&self, count: usize, max_n: usize) -> Vec<usize> {
        let q: Vec<usize> = (1..count).map(|k| self.name.exponent(k)).collect();
        let profile = closedform::index_profile(&q).expect("catalog exponents are admissible");
        profile
            .dense_pos
            .into_iter()
            .take_while(|&n| n <= max_n)
            .collect()
    }

    fn closed_values(&self, positions: &[usize]) -> Vec<(Convention, Vec<Scalar>)> {
        Convention::ALL
            .into_iter()
            .filter_map(|c| {
                let d = self.dense_for(c)?;
                Some((c, positions.iter().map(|&n| d.dense[n].clone()).collect()))
            })
            .collect()
    }
}

fn verdict_for(expected: &[Scalar], computed: &[Scalar]) -> Verdict {
    if expected == computed {
        Verdict::Confirmed
    } else {
        Verdict::Refuted
    }
}

fn claim(
    id: impl Into<String>,
    location: &'static str,
    expected: Vec<Scalar>,
    computed: Vec<Scalar>,
) -> ClaimReport {
    let verdict = verdict_for(&expected, &computed);
    ClaimReport {
        id: id.into(),
        location,
        position: None,
        expected,
        computed,
        closed_form: Vec::new(),
        spot_checks: Vec::new(),
        verdict,
    }
}

fn unchecked(
    id: impl Into<String>,
    location: &'static str,
    expected: Vec<Scalar>,
    reason: String,
) -> ClaimReport {
    ClaimReport {
        id: id.into(),
        location,
        position: None,
        expected,
        computed: Vec::new(),
        closed_form: Vec::new(),
        spot_checks: Vec::new(),
        verdict: Verdict::Unchecked(reason),
    }
}

fn spot_check(gamma: i64, expected: &[Scalar], computed: &[Scalar]) -> SpotCheck {
    let g = Rational::from(gamma);
    let expected: Vec<Rational> = expected.iter().map(|s| s.eval_gamma(&g)).collect();
    let computed: Vec<Rational> = computed.iter().map(|s| s.eval_gamma(&g)).collect();
    let agree = expected == computed;
    SpotCheck {
        gamma: g,
        expected,
        computed,
        agree,
    }
}

fn gamma_monomial(sign: i64, exp: usize) -> Scalar {
    Scalar::Poly(ParamPoly::monomial(Rational::from(sign), exp))
}

fn multiplicities(d: Option<&DenseTransform>) -> Vec<Scalar> {
    d.map(|d| {
        d.profile
            .iter()
            .map(|e| Scalar::int(e.multiplicity as i64))
            .collect()
    })
    .unwrap_or_default()
}

fn sequence_series(terms: impl Iterator<Item = BigInt>) -> Series {
    Series::from_rationals(terms.map(Rational::from).collect()).expect("nonempty")
}

/// Checks every published Hankel value, index set and multiplicity of the
/// four catalog examples against the determinant oracle, and arbitrates the
/// sign convention of the closed form.
///
/// Oracle transforms run to `max_n`; the Fibonacci dense claim needs
/// `max_n ≥ 12`, and claims beyond `max_n` are reported as unchecked.
pub fn verify_paper_claims(max_n: usize) -> VerificationReport {
    let runs: Vec<(CatalogName, EntryRun)> = CatalogName::ALL
        .into_iter()
        .map(|name| (name, EntryRun::new(name, max_n)))
        .collect();
    let run = |name: CatalogName| {
        &runs
            .iter()
            .find(|(n, _)| *n == name)
            .expect("all entries run")
            .1
    };

    let arbitration: Vec<ArbitrationRow> = runs
        .iter()
        .map(|(name, r)| ArbitrationRow {
            entry: *name,
            max_n,
            agrees: Convention::ALL
                .into_iter()
                .map(|c| (c, r.agrees(c)))
                .collect(),
        })
        .collect();
    let convention = Convention::ALL.into_iter().find(|&c| {
        arbitration
            .iter()
            .all(|row| row.agrees.contains(&(c, true)))
    });

    let mut claims = Vec::new();
    let order = 2 * max_n;

    // Catalan numbers, straight from the binomial formula.
    let catalan = sequence_series((0..=order).map(catalan_number));
    let catalan_oracle = hankel::hankel_transform(catalan.coeffs(), max_n).expect("enough terms");
    claims.push(claim(
        "intro.catalan-hankel",
        "Introduction",
        ints(core::iter::repeat_n(1, max_n + 1)),
        catalan_oracle.clone(),
    ));

    // Example 1.
    let fib = run(CatalogName::FibonacciCf);
    let fib_index =
        closedform::index_profile(&fib.cf.q()[..6.min(fib.cf.len())]).expect("admissible");
    claims.push(claim(
        "ex1.index",
        "Example 1",
        (1..=fib_index.m.len())
            .map(|i| Scalar::Rational(fibonacci(i).into()))
            .collect(),
        ints(fib_index.m.iter().map(|&x| x as i64)),
    ));
    let fib_positions = fib.positions(6, max_n);
    let nonzero_expected = ints([1, 1, 1, -2, 72, 1_944_000]);
    if fib_positions.len() == 6 {
        let mut c = claim(
            "ex1.nonzero",
            "Example 1",
            nonzero_expected,
            fib_positions
                .iter()
                .map(|&n| fib.oracle[n].clone())
                .collect(),
        );
        c.closed_form = fib.closed_values(&fib_positions);
        claims.push(c);
    } else {
        claims.push(unchecked(
            "ex1.nonzero",
            "Example 1",
            nonzero_expected,
            format!("needs max_n ≥ 7, got {max_n}"),
        ));
    }
    let mut dense_expected = ints([1, 1, -2, 0, 72, 0, 0, 1_944_000, 0, 0, 0, 0]);
    dense_expected.push(Scalar::Rational(
        "1547934105600000000".parse().expect("literal"),
    ));
    if max_n >= 12 {
        let all: Vec<usize> = (0..=12).collect();
        let mut c = claim(
            "ex1.dense",
            "Example 1",
            dense_expected,
            fib.oracle[..=12].to_vec(),
        );
        c.closed_form = fib.closed_values(&all);
        claims.push(c);
    } else {
        claims.push(unchecked(
            "ex1.dense",
            "Example 1",
            dense_expected,
            format!("needs max_n ≥ 12, got {max_n}"),
        ));
    }
    let chosen = convention.unwrap_or(closedform::ARBITRATED_CONVENTION);
    let fib_mults = multiplicities(fib.dense_for(chosen));
    let mut expected_mults = ints([2]);
    expected_mults.extend(ints(core::iter::repeat_n(
        1,
        fib_mults.len().saturating_sub(1),
    )));
    claims.push(claim(
        "ex1.multiplicity",
        "Example 1",
        expected_mults,
        fib_mults,
    ));

    // Examples 2 and 3: Catalan and aerated Catalan.
    let aerated = sequence_series((0..=order).map(|n| {
        if n % 2 == 0 {
            catalan_number(n / 2)
        } else {
            BigInt::zero()
        }
    }));
    for (tag, location, name, series, step) in [
        ("ex2", "Example 2", CatalogName::Catalan, &catalan, 1usize),
        ("ex3", "Example 3", CatalogName::AeratedCatalan, &aerated, 2),
    ] {
        let r = run(name);
        let cf = cfrac::correspond(series, false).expect("constant term 1");
        claims.push(claim(
            format!("{tag}.coefficients"),
            location,
            ints(core::iter::repeat_n(-1, cf.len())),
            cf.a().to_vec(),
        ));
        claims.push(claim(
            format!("{tag}.exponents"),
            location,
            ints(core::iter::repeat_n(step as i64, cf.len())),
            ints(cf.q().iter().map(|&e| e as i64)),
        ));
        let (expected_index, q): (Vec<i64>, Vec<usize>) = if step == 1 {
            (vec![1, 1, 2, 2, 3, 3, 4, 4, 5, 5], vec![1; 9])
        } else {
            (vec![1, 2, 3, 4, 5, 6], vec![2; 5])
        };
        let profile = closedform::index_profile(&q).expect("admissible");
        claims.push(claim(
            format!("{tag}.index"),
            location,
            ints(expected_index),
            ints(profile.m.iter().map(|&x| x as i64)),
        ));
        let oracle = hankel::hankel_transform(series.coeffs(), max_n).expect("enough terms");
        claims.push(claim(
            format!("{tag}.values"),
            location,
            ints(core::iter::repeat_n(1, max_n + 1)),
            oracle,
        ));
        let mults = multiplicities(r.dense_for(chosen));
        claims.push(claim(
            format!("{tag}.multiplicity"),
            location,
            ints(core::iter::repeat_n(step as i64 % 2 + 1, mults.len())),
            mults,
        ));
    }

    // Example 4: generalized Rogers–Ramanujan fraction, symbolic in γ.
    let rr = run(CatalogName::RogersRamanujan);
    let rr_q: Vec<usize> = (1..=10).collect();
    let rr_profile = closedform::index_profile(&rr_q).expect("admissible");
    claims.push(claim(
        "ex4.p",
        "Example 4",
        ints([1, 0, 2, 1, 3, 2, 4, 3, 5, 4, 6]),
        ints(rr_profile.p.iter().map(|&x| x as i64)),
    ));
    claims.push(claim(
        "ex4.m",
        "Example 4",
        ints([1, 1, 3, 4, 7, 9, 13, 16, 21, 25, 31]),
        ints(rr_profile.m.iter().map(|&x| x as i64)),
    ));
    let printed: [(i64, usize); 11] = [
        (1, 0),
        (1, 0),
        (-1, 6),
        (1, 12),
        (1, 32),
        (1, 52),
        (-1, 94),
        (1, 136),
        (1, 208),
        (1, 280),
        (-1, 390),
    ];
    let mut oracle_exponents = Vec::new();
    for (m, (&(sign, exp), &position)) in printed.iter().zip(&rr_profile.dense_pos).enumerate() {
        let id = format!("ex4.value.{m:02}");
        let expected = vec![gamma_monomial(sign, exp)];
        if position > max_n {
            let mut c = unchecked(
                id,
                "Example 4",
                expected,
                format!("position {position} exceeds max_n {max_n}"),
            );
            c.position = Some(position);
            claims.push(c);
            continue;
        }
        let computed = vec![rr.oracle[position].clone()];
        if let Some(deg) = rr.oracle[position].to_poly().as_monomial().map(|(_, k)| k) {
            oracle_exponents.push(Scalar::int(deg as i64));
        }
        let mut c = claim(id, "Example 4", expected.clone(), computed.clone());
        c.position = Some(position);
        c.closed_form = rr.closed_values(&[position]);
        c.spot_checks = vec![
            spot_check(1, &expected, &computed),
            spot_check(2, &expected, &computed),
        ];
        claims.push(c);
    }

    let exponent_expected = ints([0, 0, 6, 12, 32, 52, 94]);
    let mut c = claim(
        "ex4.exponents",
        "Example 4",
        exponent_expected.clone(),
        oracle_exponents.clone(),
    );
    if oracle_exponents.len() < exponent_expected.len()
        && exponent_expected[..oracle_exponents.len()] == oracle_exponents[..]
    {
        c.verdict = Verdict::Unchecked(format!(
            "only {} exponents reachable at max_n {max_n}",
            oracle_exponents.len()
        ));
    }
    claims.push(c);

    // The printed generating function 2x²(x³ + 3) / ((x + 1)²(x − 1)⁴), and
    // the same with x² in place of x³ in the numerator.
    let denom = mul_coeffs(
        &mul_coeffs(&rats(&[1, 1]), &rats(&[1, 1])),
        &mul_coeffs(
            &mul_coeffs(&rats(&[-1, 1]), &rats(&[-1, 1])),
            &mul_coeffs(&rats(&[-1, 1]), &rats(&[-1, 1])),
        ),
    );
    for (id, numer) in [
        ("ex4.exponent-gf", rats(&[0, 0, 6, 0, 0, 2])),
        ("ex4.exponent-gf-amended", rats(&[0, 0, 6, 0, 2])),
    ] {
        let expansion = expand_rational_gf(&numer, &denom, 7).expect("denominator is 1 at 0");
        claims.push(claim(
            id,
            "Example 4",
            exponent_expected.clone(),
            expansion.into_iter().map(Scalar::Rational).collect(),
        ));
    }

    claims.sort_by(|a, b| a.id.cmp(&b.id));
    VerificationReport {
        max_n,
        convention,
        arbitration,
        claims,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn helper_sequences() {
        let fib: Vec<BigInt> = (0..8).map(fibonacci).collect();
        assert_eq!(fib, [0, 1, 1, 2, 3, 5, 8, 13].map(BigInt::from));
        let cat: Vec<BigInt> = (0..7).map(catalan_number).collect();
        assert_eq!(cat, [1, 1, 2, 5, 14, 42, 132].map(BigInt::from));
    }

    #[test]
    fn named_fractions() {
        let fib = catalog_cfraction(CatalogName::FibonacciCf, None, 5).unwrap();
        assert_eq!(fib.a(), &ints([1, 1, 2, 3, 5])[..]);
        assert_eq!(fib.q(), &[1, 1, 2, 3, 5]);
        assert_eq!(fib.status(), Status::Truncated(12 + 8 - 1));

        let cat = catalog_cfraction(CatalogName::Catalan, None, 4).unwrap();
        assert_eq!(cat.a(), &ints([-1; 4])[..]);
        assert_eq!(cat.q(), &[1; 4]);

        let rr = catalog_cfraction(CatalogName::RogersRamanujan, None, 4).unwrap();
        assert!(rr.a().iter().all(|a| *a == Scalar::gamma()));
        assert_eq!(rr.q(), &[1, 2, 3, 4]);
    }

    #[test]
    fn parameter_errors() {
        assert_eq!(
            "pell".parse::<CatalogName>(),
            Err(CatalogError::UnknownName("pell".into()))
        );
        let two = Rational::from(2);
        assert_eq!(
            catalog_cfraction(CatalogName::Catalan, Some(&two), 3),
            Err(CatalogError::UnexpectedParameter(CatalogName::Catalan))
        );
        assert!(matches!(
            catalog_cfraction(CatalogName::RogersRamanujan, Some(&Rational::zero()), 3),
            Err(CatalogError::InvalidParameter(_))
        ));
        let rr2 = catalog_cfraction(CatalogName::RogersRamanujan, Some(&two), 3).unwrap();
        assert_eq!(rr2.a(), &ints([2, 2, 2])[..]);
    }

    #[test]
    fn terms_for_order_pins_requested_order() {
        for name in CatalogName::ALL {
            for order in [0, 1, 5, 12, 24] {
                let m = name.terms_for_order(order);
                let cf = catalog_cfraction(name, None, m).unwrap();
                assert!(cf.reliable_order().unwrap() >= order, "{name} {order}");
                if m > 0 {
                    let shorter = catalog_cfraction(name, None, m - 1).unwrap();
                    assert!(shorter.reliable_order().unwrap() < order);
                }
            }
        }
    }

    #[test]
    fn rational_gf_expansion() {
        assert_eq!(
            expand_rational_gf(&rats(&[1]), &rats(&[1, -1]), 5).unwrap(),
            rats(&[1; 5])
        );
        // (1 + x/(1 - x)) / (1 - x^2) = 1 / ((1 - x)(1 - x^2))
        let denom = mul_coeffs(&rats(&[1, -1]), &rats(&[1, 0, -1]));
        assert_eq!(
            expand_rational_gf(&rats(&[1]), &denom, 6).unwrap(),
            rats(&[1, 1, 2, 2, 3, 3])
        );
        assert_eq!(
            expand_rational_gf(&rats(&[1]), &rats(&[0, 1]), 3),
            Err(CatalogError::ZeroConstantDenominator)
        );
    }

    #[test]
    fn verification_report() {
        let report = verify_paper_claims(12);
        assert_eq!(report.convention, Some(closedform::ARBITRATED_CONVENTION));
        for row in &report.arbitration {
            assert!(
                row.agrees.contains(&(Convention::SignCorrected, true)),
                "{:?}",
                row.entry
            );
        }
        let verdict = |id: &str| {
            report
                .claim(id)
                .unwrap_or_else(|| panic!("{id}"))
                .verdict
                .clone()
        };
        for id in [
            "intro.catalan-hankel",
            "ex1.index",
            "ex1.nonzero",
            "ex1.dense",
            "ex1.multiplicity",
            "ex2.coefficients",
            "ex2.exponents",
            "ex2.index",
            "ex2.values",
            "ex2.multiplicity",
            "ex3.coefficients",
            "ex3.exponents",
            "ex3.index",
            "ex3.values",
            "ex3.multiplicity",
            "ex4.p",
            "ex4.m",
            "ex4.exponent-gf-amended",
            "ex4.value.00",
            "ex4.value.01",
        ] {
            assert_eq!(verdict(id), Verdict::Confirmed, "{id}");
        }
        let h2 = report.claim("ex4.value.02").unwrap();
        assert_eq!(h2.verdict, Verdict::Refuted);
        assert_eq!(h2.position, Some(2));
        assert_eq!(h2.computed, vec![gamma_monomial(-1, 4)]);
        assert!(h2.spot_checks[0].agree && !h2.spot_checks[1].agree);
        assert_eq!(
            report.claim("ex4.value.03").unwrap().computed,
            vec![gamma_monomial(1, 7)]
        );
        assert_eq!(verdict("ex4.exponents"), Verdict::Refuted);
        let gf = report.claim("ex4.exponent-gf").unwrap();
        assert_eq!(gf.verdict, Verdict::Refuted);
        assert_eq!(gf.computed, ints([0, 0, 6, 12, 30, 50, 88]));
        assert_eq!(report.claim("ex4.value.06").unwrap().position, Some(12));
        assert!(matches!(verdict("ex4.value.07"), Verdict::Unchecked(_)));
        assert_eq!(verify_paper_claims(12), report);
    }

    #[test]
    fn small_max_n_leaves_claims_unchecked() {
        let report = verify_paper_claims(4);
        assert!(matches!(
            report.claim("ex1.dense").unwrap().verdict,
            Verdict::Unchecked(_)
        ));
        assert_eq!(report.convention, Some(Convention::SignCorrected));
    }
}
