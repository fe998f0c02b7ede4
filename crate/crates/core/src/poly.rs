//! Constructs the even polynomial families `Xi_n` and `Lambda_n` by two
//! independent routes, exposes exact evaluation, the adapted (`y = x^2`)
//! forms, and the exact structural checks that need no root isolation.
//!
//! Route one expands the auxiliary odd polynomials
//! `E_{n,k}(x) = (1-x^2)^k ((1+x)^(2n-2k-1) - (1-x)^(2n-2k-1))` and folds
//! them against Eulerian weights. Route two composes the Eulerian
//! polynomial of the doubled index with the argument `-(1-x)/(1+x)` by
//! working in the numerator ring and dividing by `x` exactly. Exact
//! coefficientwise equality of the two routes is the strongest available
//! correctness oracle and is checked by the suites.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::exact::{binom_nonneg, factorial, pow2, rational_string, sign, Int, Rational};
use crate::report::{Check, Status};
use crate::special::{eulerian_row_a, eulerian_row_b};

/// Hard cap on the polynomial index; guards runaway requests.
pub const MAX_N: u32 = 64;

/// The two polynomial families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Xi,
    Lambda,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::Xi, Family::Lambda];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Xi => "xi",
            Family::Lambda => "lambda",
        }
    }

    /// Coefficient family feeding this polynomial family.
    pub fn coeff_family(self) -> CoeffFamily {
        match self {
            Family::Xi => CoeffFamily::B,
            Family::Lambda => CoeffFamily::A,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Eulerian weight type behind a coefficient vector: type-A weights build
/// `Lambda`, type-B weights build `Xi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoeffFamily {
    A,
    B,
}

impl CoeffFamily {
    pub fn as_str(self) -> &'static str {
        match self {
            CoeffFamily::A => "A",
            CoeffFamily::B => "B",
        }
    }
}

/// Errors from the polynomial constructions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// `k` outside `0..=n-1` in an `E_{n,k}` operation.
    KOutOfRange { n: u32, k: i64 },
    /// Division by `x` in the Moebius route left a remainder; indicates an
    /// implementation bug since polynomiality is guaranteed.
    MoebiusRemainder,
    /// The Moebius route produced a nonzero odd-degree term.
    MoebiusOddTerm,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::KOutOfRange { n, k } => {
                write!(f, "k = {k} outside 0..={} for index n = {n}", n - 1)
            }
            PolyError::MoebiusRemainder => {
                write!(f, "internal: division by x left a remainder")
            }
            PolyError::MoebiusOddTerm => {
                write!(f, "internal: nonzero odd-degree coefficient")
            }
        }
    }
}

impl core::error::Error for PolyError {}

/// Even polynomial of degree `2n-2`, stored densely by the index `t`
/// of `x^(2t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenPolynomial {
    pub family: Family,
    pub n: u32,
    coeffs: Vec<Rational>,
}

impl EvenPolynomial {
    pub(crate) fn new(family: Family, n: u32, coeffs: Vec<Rational>) -> Self {
        assert_eq!(coeffs.len(), n as usize, "coefficient count must equal n");
        EvenPolynomial { family, n, coeffs }
    }

    /// An even polynomial from explicit coefficients of `x^(2t)`; the top
    /// coefficient must be nonzero.
    pub fn from_coeffs(family: Family, coeffs: Vec<Rational>) -> Self {
        assert!(
            coeffs.last().map(|c| !c.is_zero()).unwrap_or(false),
            "top coefficient must be nonzero"
        );
        let n = coeffs.len() as u32;
        EvenPolynomial::new(family, n, coeffs)
    }

    /// Coefficient of `x^(2t)`.
    pub fn coeff(&self, t: usize) -> &Rational {
        &self.coeffs[t]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Leading coefficient (of `x^(2n-2)`).
    pub fn leading(&self) -> &Rational {
        &self.coeffs[self.n as usize - 1]
    }

    pub fn degree(&self) -> u32 {
        2 * self.n - 2
    }

    /// Exact Horner evaluation in `x^2`.
    pub fn eval(&self, x: &Rational) -> Rational {
        let y = x * x;
        self.adapted().eval_y(&y)
    }

    /// The substitution `P(sqrt(y))`: same coefficients, dense in `y`.
    pub fn adapted(&self) -> AdaptedPolynomial {
        AdaptedPolynomial {
            family: self.family,
            n: self.n,
            coeffs: self.coeffs.clone(),
        }
    }
}

/// Exact integer coefficient vector (the Eulerian-weighted expansion sums
/// before the rational prefactor).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffVector {
    pub family: CoeffFamily,
    pub n: u32,
    pub values: Vec<Int>,
}

/// `P(sqrt(y))` for an even polynomial `P`: degree `n-1` in `y`; the object
/// root isolation runs on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdaptedPolynomial {
    pub family: Family,
    pub n: u32,
    pub coeffs: Vec<Rational>,
}

impl AdaptedPolynomial {
    pub fn degree(&self) -> u32 {
        self.n - 1
    }

    pub fn leading(&self) -> &Rational {
        &self.coeffs[self.n as usize - 1]
    }

    /// Exact Horner evaluation in `y`.
    pub fn eval_y(&self, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * y + c;
        }
        acc
    }
}

fn assert_n(n: u32) {
    assert!(
        (1..=MAX_N).contains(&n),
        "polynomial index n = {n} outside 1..={MAX_N}"
    );
}

/// Exact evaluation of the product form
/// `E_{n,k}(x) = (1-x^2)^k ((1+x)^(2n-2k-1) - (1-x)^(2n-2k-1))`.
pub fn enk_product_eval(n: u32, k: i64, x: &Rational) -> Result<Rational, PolyError> {
    assert_n(n);
    if k < 0 || k >= n as i64 {
        return Err(PolyError::KOutOfRange { n, k });
    }
    let m = (2 * n as i64 - 2 * k - 1) as i32;
    let one = Rational::one();
    let a = (&one - &(x * x)).pow(k as i32);
    let b = (&one + x).pow(m) - (&one - x).pow(m);
    Ok(a * b)
}

/// Expansion coefficients of the inner bracket: entry `t` is
/// `sum_i (-1)^i C(k,i) C(2n-2k-1, 2t-2i+1)`, so that
/// `E_{n,k}(x) = 2x sum_t c_t x^(2t)`.
pub fn enk_expansion_coeffs(n: u32, k: u32) -> Vec<Int> {
    assert_n(n);
    assert!(k < n, "k = {k} outside 0..={}", n - 1);
    let upper = (2 * n - 2 * k - 1) as u64;
    (0..n as i64)
        .map(|t| {
            let mut c = Int::zero();
            for i in 0..=k as i64 {
                let term = binom_nonneg(k as u64, i) * binom_nonneg(upper, 2 * t - 2 * i + 1);
                if i % 2 == 0 {
                    c += term;
                } else {
                    c -= term;
                }
            }
            c
        })
        .collect()
}

/// Exact integer coefficient vector `C_{n,t}` combining Eulerian weights
/// with the expansion sums.
pub fn coeff_vector(family: CoeffFamily, n: u32) -> CoeffVector {
    assert_n(n);
    let weights = match family {
        CoeffFamily::B => eulerian_row_b(2 * n as usize - 1),
        CoeffFamily::A => eulerian_row_a(2 * n as usize),
    };
    let mut values = vec![Int::zero(); n as usize];
    for k in 0..n {
        let inner = enk_expansion_coeffs(n, k);
        let w = &weights[k as usize];
        for (t, c) in inner.into_iter().enumerate() {
            let term = w * c;
            if k % 2 == 0 {
                values[t] += term;
            } else {
                values[t] -= term;
            }
        }
    }
    CoeffVector { family, n, values }
}

fn prefactor(family: Family, n: u32) -> Rational {
    let sign = if n % 2 == 1 { Int::one() } else { -Int::one() };
    match family {
        // (-1)^(n+1) / (2^(4n-2) (2n-1)!)
        Family::Xi => Rational::new(sign, pow2(4 * n as u64 - 2) * factorial(2 * n as u64 - 1)),
        // 2 (-1)^(n+1) / ((2^(2n+1)-1) (2n)!)
        Family::Lambda => Rational::new(
            Int::from(2) * sign,
            (pow2(2 * n as u64 + 1) - Int::one()) * factorial(2 * n as u64),
        ),
    }
}

/// Builds the polynomial from the expansion-sum route:
/// prefactor times [`coeff_vector`].
pub fn build(family: Family, n: u32) -> EvenPolynomial {
    assert_n(n);
    let pf = prefactor(family, n);
    let cv = coeff_vector(family.coeff_family(), n);
    let coeffs = cv
        .values
        .into_iter()
        .map(|v| &pf * Rational::from_integer(v))
        .collect();
    EvenPolynomial::new(family, n, coeffs)
}

/// Builds the polynomial from the Eulerian-polynomial closed form with
/// argument `-(1-x)/(1+x)`.
///
/// Denominators are cleared by expanding
/// `N(x) = sum_k w_k (-1)^k (1-x)^k (1+x)^(2n-1-k)` over the full Eulerian
/// row, then dividing by `x` (exact: the constant term cancels because the
/// row is palindromic) and applying the route's own prefactor.
pub fn build_via_moebius(family: Family, n: u32) -> Result<EvenPolynomial, PolyError> {
    assert_n(n);
    let deg = 2 * n as usize - 1;
    let weights = match family {
        Family::Xi => eulerian_row_b(deg),
        Family::Lambda => eulerian_row_a(deg + 1),
    };
    debug_assert_eq!(weights.len(), deg + 1);

    // Powers of (1+x) up to (1+x)^deg.
    let mut plus_pows: Vec<Vec<Int>> = Vec::with_capacity(deg + 1);
    plus_pows.push(vec![Int::one()]);
    for j in 1..=deg {
        plus_pows.push(int_poly_mul(&plus_pows[j - 1], &[Int::one(), Int::one()]));
    }

    let mut numerator = vec![Int::zero(); deg + 1];
    let mut minus_pow = vec![Int::one()]; // (1-x)^k
    for (k, w) in weights.iter().enumerate() {
        let term = int_poly_mul(&minus_pow, &plus_pows[deg - k]);
        for (i, c) in term.into_iter().enumerate() {
            let signed = if k % 2 == 0 { w * &c } else { -(w * &c) };
            numerator[i] += signed;
        }
        if k < deg {
            minus_pow = int_poly_mul(&minus_pow, &[Int::one(), -Int::one()]);
        }
    }

    if !numerator[0].is_zero() {
        return Err(PolyError::MoebiusRemainder);
    }
    let quotient = &numerator[1..];
    let mut coeffs = Vec::with_capacity(n as usize);
    let pf = match family {
        // (-1)^(n+1) / (2^(4n-1) (2n-1)!)
        Family::Xi => Rational::new(
            if n % 2 == 1 { Int::one() } else { -Int::one() },
            pow2(4 * n as u64 - 1) * factorial(2 * n as u64 - 1),
        ),
        // (-1)^(n+1) / ((2^(2n+1)-1) (2n)!)
        Family::Lambda => Rational::new(
            if n % 2 == 1 { Int::one() } else { -Int::one() },
            (pow2(2 * n as u64 + 1) - Int::one()) * factorial(2 * n as u64),
        ),
    };
    for (i, c) in quotient.iter().enumerate() {
        if i % 2 == 1 {
            if !c.is_zero() {
                return Err(PolyError::MoebiusOddTerm);
            }
        } else {
            coeffs.push(&pf * Rational::from_integer(c.clone()));
        }
    }
    Ok(EvenPolynomial::new(family, n, coeffs))
}

fn int_poly_mul(a: &[Int], b: &[Int]) -> Vec<Int> {
    let mut out = vec![Int::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Exact Horner evaluation of an even polynomial.
pub fn eval(p: &EvenPolynomial, x: &Rational) -> Rational {
    p.eval(x)
}

/// Closed-form value at `x = 0` from Euler/Bernoulli numbers.
pub fn expected_value_at_zero(family: Family, n: u32) -> Rational {
    assert_n(n);
    let sign = if n.is_multiple_of(2) { Int::one() } else { -Int::one() };
    match family {
        // (-1)^n E_{2n} / (2^(2n) (2n-1)!)
        Family::Xi => Rational::new(
            sign * crate::special::euler_number(2 * n as usize),
            pow2(2 * n as u64) * factorial(2 * n as u64 - 1),
        ),
        // (-1)^n 2^(2n+2) (2^(2n+2)-1) B_{2n+2} / ((2^(2n+1)-1)(2n+2)(2n)!)
        Family::Lambda => {
            let num = Rational::from_integer(
                sign * pow2(2 * n as u64 + 2) * (pow2(2 * n as u64 + 2) - Int::one()),
            ) * crate::special::bernoulli(2 * n as usize + 2);
            let den = Rational::from_integer(
                (pow2(2 * n as u64 + 1) - Int::one())
                    * Int::from(2 * n + 2)
                    * factorial(2 * n as u64),
            );
            num / den
        }
    }
}

/// Closed-form value at `x = 1`.
pub fn expected_value_at_one(family: Family, n: u32) -> Rational {
    assert_n(n);
    let sign = if n % 2 == 1 { Int::one() } else { -Int::one() };
    match family {
        // (-1)^(n+1) / (2^(2n) (2n-1)!)
        Family::Xi => Rational::new(sign, pow2(2 * n as u64) * factorial(2 * n as u64 - 1)),
        // (-1)^(n+1) 2^(2n-1) / ((2^(2n+1)-1) (2n)!)
        Family::Lambda => Rational::new(
            sign * pow2(2 * n as u64 - 1),
            (pow2(2 * n as u64 + 1) - Int::one()) * factorial(2 * n as u64),
        ),
    }
}

/// Closed-form leading coefficient (of `x^(2n-2)`).
pub fn expected_leading(family: Family, n: u32) -> Rational {
    assert_n(n);
    let sign = if n % 2 == 1 { Int::one() } else { -Int::one() };
    match family {
        Family::Xi => Rational::new(sign, pow2(2 * n as u64)),
        Family::Lambda => Rational::new(sign, pow2(2 * n as u64 + 1) - Int::one()),
    }
}

/// Closed-form top entry of the coefficient vector.
pub fn expected_coeff_top(family: CoeffFamily, n: u32) -> Int {
    match family {
        CoeffFamily::B => pow2(2 * n as u64 - 2) * factorial(2 * n as u64 - 1),
        CoeffFamily::A => factorial(2 * n as u64) / Int::from(2),
    }
}

/// Exact structural checks for index `n`, both families: cross-construction
/// equality, leading/boundary values against the closed forms, coefficient
/// sums, sign alternation, log-concavity, and spot positivity for `x > 1`.
pub fn structural_checks(n: u32) -> Vec<Check> {
    assert_n(n);
    let mut out = Vec::new();
    for family in Family::ALL {
        let fam = family.as_str();
        let p = build(family, n);

        match build_via_moebius(family, n) {
            Ok(q) => out.push(
                Check::verdict("cross-construction-equality", p == q)
                    .family(fam)
                    .n(n),
            ),
            Err(e) => out.push(
                Check::new("cross-construction-equality", Status::Fail)
                    .family(fam)
                    .n(n)
                    .numeric(format!("{e}")),
            ),
        }

        let lead_ok = p.leading() == &expected_leading(family, n);
        out.push(
            Check::verdict("leading-coefficient", lead_ok)
                .family(fam)
                .n(n)
                .exact(rational_string(p.leading())),
        );

        let v0 = p.eval(&Rational::zero());
        out.push(
            Check::verdict("value-at-zero", v0 == expected_value_at_zero(family, n))
                .family(fam)
                .n(n)
                .exact(rational_string(&v0)),
        );

        let v1 = p.eval(&Rational::one());
        out.push(
            Check::verdict("value-at-one", v1 == expected_value_at_one(family, n))
                .family(fam)
                .n(n)
                .exact(rational_string(&v1)),
        );

        // sum_t C_{n,t} = 2^(2n-2) for both coefficient families.
        let cv = coeff_vector(family.coeff_family(), n);
        let csum: Int = cv.values.iter().sum();
        out.push(
            Check::verdict("coeff-sum", csum == pow2(2 * n as u64 - 2))
                .family(fam)
                .n(n)
                .exact(format!("{csum}")),
        );

        let top_ok = cv.values[n as usize - 1] == expected_coeff_top(family.coeff_family(), n);
        out.push(
            Check::verdict("coeff-top", top_ok)
                .family(fam)
                .n(n)
                .exact(format!("{}", cv.values[n as usize - 1])),
        );

        // Sign pattern: top sign (-1)^(n+1), strictly alternating downward.
        let top_sign = if n % 2 == 1 { 1 } else { -1 };
        let mut alt_ok = true;
        for (t, c) in p.coeffs().iter().enumerate() {
            let expect = if (n as usize - 1 - t).is_multiple_of(2) {
                top_sign
            } else {
                -top_sign
            };
            if sign(c) != expect {
                alt_ok = false;
            }
        }
        out.push(Check::verdict("sign-alternation", alt_ok).family(fam).n(n));

        // Log-concavity |C_t|^2 >= |C_{t-1}| |C_{t+1}|; vacuous for n < 3.
        let abs: Vec<Int> = cv.values.iter().map(|v| v.abs()).collect();
        let mut lc_ok = true;
        for t in 1..abs.len().saturating_sub(1) {
            if &abs[t] * &abs[t] < &abs[t - 1] * &abs[t + 1] {
                lc_ok = false;
            }
        }
        out.push(Check::verdict("log-concavity", lc_ok).family(fam).n(n));

        // Spot check of the no-zeros theorem for x > 1 (full statement is
        // established exactly in the roots module).
        let mut pos_ok = true;
        for x in [Rational::new(Int::from(3), Int::from(2)), Rational::from_integer(Int::from(2)), Rational::from_integer(Int::from(5))] {
            let v = p.eval(&x);
            let signed = if n % 2 == 1 { v } else { -v };
            if !signed.is_positive() {
                pos_ok = false;
            }
        }
        out.push(Check::verdict("positivity-beyond-one", pos_ok).family(fam).n(n));
    }
    out
}

/// Grid and symmetry checks: the 1024-point sup bound `|p(x)| <= |lc|`
/// on (0,1) and evenness under `x -> -x`.
pub fn property_checks(n: u32) -> Vec<Check> {
    assert_n(n);
    let mut out = Vec::new();
    for family in Family::ALL {
        let fam = family.as_str();
        let p = build(family, n);

        out.push(
            Check::verdict("grid-sup-bound", grid_sup_bound_holds(&p, 10))
                .family(fam)
                .n(n),
        );

        let mut even_ok = true;
        for x in [
            Rational::new(Int::from(3), Int::from(7)),
            Rational::new(Int::from(-5), Int::from(9)),
            Rational::new(Int::from(13), Int::from(8)),
        ] {
            if p.eval(&x) != p.eval(&(-x.clone())) {
                even_ok = false;
            }
        }
        out.push(Check::verdict("evenness", even_ok).family(fam).n(n));
    }
    out
}

/// `|p(i / 2^bits)| <= |lc|` for every grid point `i = 1 .. 2^bits - 1`,
/// decided in pure integer arithmetic after clearing denominators.
pub fn grid_sup_bound_holds(p: &EvenPolynomial, bits: u32) -> bool {
    let n = p.n as usize;
    // Common denominator D: integer coefficients c_t = D a_t.
    let mut den = Int::one();
    for c in p.coeffs() {
        den = num_integer::lcm(den, c.denom().clone());
    }
    let ints: Vec<Int> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    let shift = 2 * bits as usize;
    // |sum_t c_t j^t 2^(shift (n-1-t))| <= |c_{n-1}| 2^(shift (n-1)), j = i^2.
    let bound = ints[n - 1].abs() << (shift * (n - 1));
    let grid: u64 = 1 << bits;
    for i in 1..grid {
        let j = Int::from(i * i);
        let mut acc = Int::zero();
        let mut jp = Int::one();
        for (t, c) in ints.iter().enumerate() {
            acc += (c * &jp) << (shift * (n - 1 - t));
            jp *= &j;
        }
        if acc.abs() > bound {
            return false;
        }
    }
    true
}

/// Coefficient metadata rendered for serialization.
pub fn coefficient_strings(p: &EvenPolynomial) -> Vec<(usize, String, String)> {
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(t, c)| (t, format!("{}", c.numer()), format!("{}", c.denom())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn enk_product_values() {
        // n=1, k=0, x=1: (1+1)^1 - 0 = 2.
        assert_eq!(
            enk_product_eval(1, 0, &Rational::one()).unwrap(),
            ratio(2, 1)
        );
        // k >= 1 at x = 1 vanishes.
        for n in 2..=6 {
            for k in 1..n as i64 {
                assert_eq!(
                    enk_product_eval(n, k, &Rational::one()).unwrap(),
                    Rational::zero()
                );
            }
        }
        // n=2, k=0, x=1/2: (3/2)^3 - (1/2)^3 = 13/4.
        assert_eq!(
            enk_product_eval(2, 0, &ratio(1, 2)).unwrap(),
            ratio(13, 4)
        );
        assert!(matches!(
            enk_product_eval(3, 5, &Rational::one()),
            Err(PolyError::KOutOfRange { .. })
        ));
        assert!(matches!(
            enk_product_eval(3, -1, &Rational::one()),
            Err(PolyError::KOutOfRange { .. })
        ));
    }

    #[test]
    fn enk_expansion_basics() {
        assert_eq!(enk_expansion_coeffs(1, 0), vec![Int::one()]);
        // Top entry t = n-1 equals (-1)^k.
        for n in 1..=10u32 {
            for k in 0..n {
                let c = enk_expansion_coeffs(n, k);
                let expect = if k % 2 == 0 { Int::one() } else { -Int::one() };
                assert_eq!(c[n as usize - 1], expect, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn enk_expansion_matches_product_eval() {
        // 2x sum_t c_t x^(2t) agrees with the product form at sample points.
        for n in 1..=10u32 {
            for k in 0..n {
                let c = enk_expansion_coeffs(n, k);
                for x in [ratio(1, 3), ratio(1, 2), ratio(2, 5)] {
                    let mut acc = Rational::zero();
                    let xx = &x * &x;
                    for ct in c.iter().rev() {
                        acc = acc * &xx + Rational::from_integer(ct.clone());
                    }
                    let series = ratio(2, 1) * &x * acc;
                    let product = enk_product_eval(n, k as i64, &x).unwrap();
                    assert_eq!(series, product, "n={n} k={k} x={x}");
                }
            }
        }
    }

    #[test]
    fn coeff_vector_base_cases() {
        assert_eq!(coeff_vector(CoeffFamily::B, 1).values, vec![Int::one()]);
        assert_eq!(coeff_vector(CoeffFamily::A, 1).values, vec![Int::one()]);
        for n in 1..=8u32 {
            let top = coeff_vector(CoeffFamily::B, n).values[n as usize - 1].clone();
            assert_eq!(top, expected_coeff_top(CoeffFamily::B, n), "n={n}");
        }
    }

    #[test]
    fn build_small_cases() {
        let xi1 = build(Family::Xi, 1);
        assert_eq!(xi1.coeffs(), &[ratio(1, 4)]);
        let la1 = build(Family::Lambda, 1);
        assert_eq!(la1.coeffs(), &[ratio(1, 7)]);
        let xi2 = build(Family::Xi, 2);
        assert_eq!(xi2.coeff(1), &ratio(-1, 16));
        assert_eq!(xi2.coeff(0), &ratio(5, 96));
    }

    #[test]
    fn moebius_route_agrees() {
        for n in 1..=10u32 {
            for family in Family::ALL {
                let direct = build(family, n);
                let moebius = build_via_moebius(family, n).unwrap();
                assert_eq!(direct, moebius, "family={family} n={n}");
            }
        }
    }

    #[test]
    fn moebius_xi2_value_at_one() {
        let p = build_via_moebius(Family::Xi, 2).unwrap();
        assert_eq!(p.eval(&Rational::one()), ratio(-1, 96));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(build(Family::Xi, 1).eval(&ratio(7, 3)), ratio(1, 4));
        assert_eq!(
            build(Family::Lambda, 1).eval(&Rational::zero()),
            expected_value_at_zero(Family::Lambda, 1)
        );
        let p = build(Family::Lambda, 4);
        for x in [ratio(2, 9), ratio(-31, 17)] {
            assert_eq!(p.eval(&x), p.eval(&-x.clone()));
        }
    }

    #[test]
    fn boundary_closed_forms() {
        assert_eq!(expected_value_at_zero(Family::Xi, 1), ratio(1, 4));
        assert_eq!(expected_value_at_zero(Family::Lambda, 1), ratio(1, 7));
        assert_eq!(expected_value_at_zero(Family::Xi, 2), ratio(5, 96));
        assert_eq!(expected_value_at_one(Family::Xi, 1), ratio(1, 4));
        assert_eq!(expected_value_at_one(Family::Lambda, 1), ratio(1, 7));
        assert_eq!(expected_value_at_one(Family::Lambda, 2), ratio(-1, 93));
        for n in 1..=12u32 {
            for family in Family::ALL {
                let p = build(family, n);
                assert_eq!(p.eval(&Rational::zero()), expected_value_at_zero(family, n));
                assert_eq!(p.eval(&Rational::one()), expected_value_at_one(family, n));
                assert_eq!(p.leading(), &expected_leading(family, n));
            }
        }
    }

    #[test]
    fn structural_suite_passes() {
        for n in 1..=12u32 {
            for c in structural_checks(n) {
                assert_ne!(
                    c.status,
                    Status::Fail,
                    "structural check {} failed at n={n} ({:?})",
                    c.name,
                    c.family
                );
            }
        }
    }

    #[test]
    fn property_suite_passes() {
        for n in 1..=12u32 {
            for c in property_checks(n) {
                assert_ne!(c.status, Status::Fail, "{} failed at n={n}", c.name);
            }
        }
    }

    #[test]
    fn adapted_polynomial_shape() {
        let p = build(Family::Lambda, 5);
        let a = p.adapted();
        assert_eq!(a.degree(), 4);
        assert_eq!(a.coeffs.len(), 5);
        // Value at y=0 is nonzero.
        assert!(!a.eval_y(&Rational::zero()).is_zero());
        // p(x) = adapted(x^2).
        let x = ratio(3, 5);
        assert_eq!(p.eval(&x), a.eval_y(&(&x * &x)));
    }

    #[test]
    #[should_panic(expected = "outside 1..=64")]
    fn n_zero_rejected() {
        let _ = build(Family::Xi, 0);
    }

    #[test]
    #[should_panic(expected = "outside 1..=64")]
    fn n_above_cap_rejected() {
        let _ = build(Family::Lambda, 65);
    }
}
