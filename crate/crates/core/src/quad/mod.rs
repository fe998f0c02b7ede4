//! Arbitrary-precision validation of the integral representations and the
//! exact sqrt-weight integrals.
//!
//! The working substitution is `x = tanh u`, which turns both weighted
//! integrals over `(0,1)` into smooth integrands on `(0, infinity)` with
//! exponential decay (`sech u` for the beta kernel, `sech^2 u` for the
//! zeta kernel) and a removable singularity at `u = 0` that is filled by
//! the exact polynomial value at zero. The hyperbolic-stage route computes
//! the same targets through Eulerian-weighted `sinh/cosh` kernels and is
//! used as an independent cross-check.

pub mod rule;
pub mod series;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::bigfloat::{bigfloat_decimal, BigFloat, FloatCtx};
use crate::exact::{double_factorial, pow2, rational_string, Int, Rational};
use crate::poly::{build, CoeffFamily, EvenPolynomial, Family};
use crate::report::Check;
use crate::special::{eulerian_row_a, eulerian_row_b};

pub use rule::QuadOutcome;
pub use series::{beta_ref, beta_ref_alt, chebyshev_alternating_sum, zeta_ref, zeta_ref_alt};

/// How a numeric result was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadRoute {
    TanhSubstitution,
    HyperbolicForm,
}

impl QuadRoute {
    pub fn as_str(self) -> &'static str {
        match self {
            QuadRoute::TanhSubstitution => "tanh_substitution",
            QuadRoute::HyperbolicForm => "hyperbolic_form",
        }
    }
}

/// A converged quadrature value with its step-halving error estimate.
#[derive(Debug, Clone)]
pub struct QuadResult {
    pub value: BigFloat,
    pub est_error: BigFloat,
    pub nodes_used: usize,
    pub route: QuadRoute,
}

/// Quadrature failure modes.
#[derive(Debug, Clone)]
pub enum QuadError {
    /// The refinement did not converge within the node budget; carries the
    /// best estimate reached.
    NonConvergence { best: QuadResult },
    /// A non-finite value surfaced.
    Numeric,
}

impl fmt::Display for QuadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuadError::NonConvergence { best } => write!(
                f,
                "quadrature did not converge within the node budget ({} nodes)",
                best.nodes_used
            ),
            QuadError::Numeric => write!(f, "non-finite value in quadrature"),
        }
    }
}

impl core::error::Error for QuadError {}

const MAX_LEVEL: u32 = 14;
const NODE_BUDGET: usize = 400_000;

/// `beta(2n)/pi^(2n-1) = int_0^1 x Xi_n(x) / (sqrt(1-x^2) arctanh x) dx`,
/// computed as `int_0^inf tanh(u) Xi_n(tanh u) sech(u) / u du`.
pub fn integral_beta(n: u32, precision: usize) -> Result<QuadResult, QuadError> {
    let p = build(Family::Xi, n);
    let mut ctx = FloatCtx::new(precision);
    let coeffs = float_coeffs(&ctx, &p);
    let rel_tol = ctx.pow2_neg(precision);
    let mut f = |c: &mut FloatCtx, u: &BigFloat| {
        let (tanh_over_u, tanh, denom, s) = tanh_parts(c, u);
        let value = horner(c, &coeffs, &c.mul(&tanh, &tanh));
        let sech = c.div(&c.mul(&c.from_u64(2), &s), &denom);
        c.mul(&c.mul(&tanh_over_u, &value), &sech)
    };
    let out = rule::integrate_exp_decay(&mut ctx, &mut f, &rel_tol, MAX_LEVEL, NODE_BUDGET);
    finish(out, QuadRoute::TanhSubstitution)
}

/// `zeta(2n+1)/pi^(2n) = int_0^1 x Lambda_n(x) / arctanh x dx`, computed
/// as `int_0^inf tanh(u) Lambda_n(tanh u) sech^2(u) / u du`.
pub fn integral_zeta(n: u32, precision: usize) -> Result<QuadResult, QuadError> {
    let p = build(Family::Lambda, n);
    let mut ctx = FloatCtx::new(precision);
    let coeffs = float_coeffs(&ctx, &p);
    let rel_tol = ctx.pow2_neg(precision);
    let mut f = |c: &mut FloatCtx, u: &BigFloat| {
        let (tanh_over_u, tanh, denom, s) = tanh_parts(c, u);
        let value = horner(c, &coeffs, &c.mul(&tanh, &tanh));
        let sech = c.div(&c.mul(&c.from_u64(2), &s), &denom);
        let sech2 = c.mul(&sech, &sech);
        c.mul(&c.mul(&tanh_over_u, &value), &sech2)
    };
    let out = rule::integrate_exp_decay(&mut ctx, &mut f, &rel_tol, MAX_LEVEL, NODE_BUDGET);
    finish(out, QuadRoute::TanhSubstitution)
}

/// The hyperbolic-stage route: Eulerian-weighted sums of
/// `int_0^inf sinh(alpha u) / (u cosh^m u) du`, normalized to the same
/// targets as [`integral_beta`] (family `B`) and [`integral_zeta`]
/// (family `A`) so the two routes are directly comparable.
pub fn integral_hyperbolic_route(
    family: CoeffFamily,
    n: u32,
    precision: usize,
) -> Result<QuadResult, QuadError> {
    // Per-term coefficients c_k with result = sum_k c_k I_k:
    //   B: (-1)^(n+1+k) <2n-1,k>^B / (2^(4n-2) (2n-1)!)
    //   A: (-1)^(n+1+k) <2n,k>   * 2 / ((2^(2n+1)-1) (2n)!)
    let (weights, m, scale) = match family {
        CoeffFamily::B => (
            eulerian_row_b(2 * n as usize - 1),
            2 * n,
            Rational::new(
                Int::one(),
                pow2(4 * n as u64 - 2) * crate::exact::factorial(2 * n as u64 - 1),
            ),
        ),
        CoeffFamily::A => (
            eulerian_row_a(2 * n as usize),
            2 * n + 1,
            Rational::new(
                Int::from(2),
                (pow2(2 * n as u64 + 1) - Int::one()) * crate::exact::factorial(2 * n as u64),
            ),
        ),
    };

    let mut ctx = FloatCtx::new(precision + 16);
    let rel_tol = ctx.pow2_neg(precision + 8);
    let mut total = ctx.zero();
    let mut est_total = ctx.zero();
    let mut nodes = 0usize;
    for (k, weight) in weights.iter().enumerate().take(n as usize) {
        let alpha = 2 * n as u64 - 2 * k as u64 - 1;
        let mut f = |c: &mut FloatCtx, u: &BigFloat| sinh_cosh_kernel(c, u, alpha, m);
        let out = rule::integrate_exp_decay(&mut ctx, &mut f, &rel_tol, MAX_LEVEL, NODE_BUDGET);
        nodes += out.nodes_used;
        if out.value.is_nan() {
            return Err(QuadError::Numeric);
        }
        let sign_flip = (n as usize + 1 + k).is_multiple_of(2);
        let c_k = &scale * Rational::from_integer(weight.clone());
        let c_bf = ctx.from_rational(&c_k);
        let contribution = ctx.mul(&c_bf, &out.value);
        total = if sign_flip {
            ctx.add(&total, &contribution)
        } else {
            ctx.sub(&total, &contribution)
        };
        est_total = ctx.add(&est_total, &ctx.mul(&c_bf.abs(), &out.est_error));
        if !out.converged {
            return Err(QuadError::NonConvergence {
                best: QuadResult {
                    value: total,
                    est_error: est_total,
                    nodes_used: nodes,
                    route: QuadRoute::HyperbolicForm,
                },
            });
        }
    }
    Ok(QuadResult {
        value: total,
        est_error: est_total,
        nodes_used: nodes,
        route: QuadRoute::HyperbolicForm,
    })
}

/// `sinh(alpha u) / (u cosh^m u)` evaluated without large intermediates:
/// `2^(m-1) s^(m-alpha) (1 - s^(2 alpha)) / (u (1+s^2)^m)` with
/// `s = exp(-u)`.
fn sinh_cosh_kernel(c: &mut FloatCtx, u: &BigFloat, alpha: u64, m: u32) -> BigFloat {
    debug_assert!(alpha < m as u64);
    let s = c.exp(&u.neg());
    let s2 = c.mul(&s, &s);
    let two_alpha_u = c.mul(&c.from_u64(2 * alpha), u);
    let q = c.one_minus_exp_neg(&two_alpha_u); // 1 - s^(2 alpha)
    let denom = c.powi(&c.add(&c.from_u64(1), &s2), m as usize);
    let s_pow = c.powi(&s, (m as u64 - alpha) as usize);
    let num = c.mul(&c.mul(&s_pow, &q), &c.powi(&c.from_u64(2), m as usize - 1));
    c.div(&c.div(&num, &denom), u)
}

/// Pieces shared by the tanh-route integrands: returns
/// `(tanh(u)/u, tanh(u), 1+s^2, s)` with `s = exp(-u)`, all cancellation
/// free near `u = 0`.
fn tanh_parts(c: &mut FloatCtx, u: &BigFloat) -> (BigFloat, BigFloat, BigFloat, BigFloat) {
    let s = c.exp(&u.neg());
    let s2 = c.mul(&s, &s);
    let two_u = c.mul(&c.from_u64(2), u);
    let q = c.one_minus_exp_neg(&two_u); // 1 - s^2
    let denom = c.add(&c.from_u64(1), &s2);
    let tanh = c.div(&q, &denom);
    let tanh_over_u = c.div(&q, &c.mul(u, &denom));
    (tanh_over_u, tanh, denom, s)
}

fn float_coeffs(ctx: &FloatCtx, p: &EvenPolynomial) -> Vec<BigFloat> {
    p.coeffs().iter().map(|c| ctx.from_rational(c)).collect()
}

fn horner(c: &mut FloatCtx, coeffs: &[BigFloat], x: &BigFloat) -> BigFloat {
    let mut acc = c.zero();
    for coeff in coeffs.iter().rev() {
        acc = c.add(&c.mul(&acc, x), coeff);
    }
    acc
}

fn finish(out: QuadOutcome, route: QuadRoute) -> Result<QuadResult, QuadError> {
    if out.value.is_nan() {
        return Err(QuadError::Numeric);
    }
    let result = QuadResult {
        value: out.value,
        est_error: out.est_error,
        nodes_used: out.nodes_used,
        route,
    };
    if out.converged {
        Ok(result)
    } else {
        Err(QuadError::NonConvergence { best: result })
    }
}

/// The exact rational `p/q` with `int_0^1 P(x)/sqrt(1-x^2) dx = (p/q) pi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiMultiple {
    pub ratio: Rational,
}

/// `sum_t a_t (1/2) (2t-1)!!/(2t)!!`: the moment identity applied to each
/// even power; pure rational arithmetic, no floats.
pub fn sqrt_weight_integral_exact(p: &EvenPolynomial) -> PiMultiple {
    let mut ratio = Rational::zero();
    for (t, a) in p.coeffs().iter().enumerate() {
        let t = t as i64;
        let moment = Rational::new(
            double_factorial(2 * t - 1).expect("2t-1 >= -1"),
            Int::from(2) * double_factorial(2 * t).expect("2t >= 0"),
        );
        ratio += a * moment;
    }
    PiMultiple { ratio }
}

/// Positivity and monotonicity of the sqrt-weight pi-ratios over
/// `n = 1..=n_max`, both families; exact arithmetic throughout.
pub fn pi_ratio_suite(n_max: u32) -> Vec<Check> {
    let mut out = Vec::new();
    for family in Family::ALL {
        let fam = family.as_str();
        let mut ratios = Vec::new();
        for n in 1..=n_max {
            let r = sqrt_weight_integral_exact(&build(family, n)).ratio;
            out.push(
                Check::verdict("pi-ratio-positive", r.is_positive())
                    .family(fam)
                    .n(n)
                    .exact(rational_string(&r)),
            );
            ratios.push(r);
        }
        let decreasing = ratios.windows(2).all(|w| w[1] < w[0]);
        out.push(
            Check::verdict("pi-ratio-decreasing", decreasing)
                .family(fam)
                .n(n_max),
        );
        out.push(
            Check::info("pi-ratio-limit-trend")
                .family(fam)
                .numeric(String::from(if decreasing {
                    "decreasing-toward-zero"
                } else {
                    "not-monotone"
                })),
        );
    }
    out
}

/// Integral-representation checks for one index `n`: quadrature against
/// the series references at relative tolerance `10^-(digits-2)`, the
/// dual-route agreement for `n <= 5`, and the desk-scale anchors at
/// `n = 1`. The quadrature itself targets `10^-digits`.
pub fn integral_checks_for_n(n: u32, digits: usize) -> Vec<Check> {
    let bits = digits * 10 / 3 + 16;
    let assert_tol = Rational::new(Int::one(), Int::from(10u32).pow(digits as u32 - 2));
    let mut ctx = FloatCtx::new(bits + 16);
    let tol_bf = ctx.from_rational(&assert_tol);
    let pi = ctx.pi();
    let mut out = Vec::new();

    // beta(2n)/pi^(2n-1)
    let reference = {
        let b = beta_ref(2 * n, bits + 16);
        let pi_pow = ctx.powi(&pi, 2 * n as usize - 1);
        ctx.div(&b, &pi_pow)
    };
    out.push(quad_vs_reference_check(
        &mut ctx,
        "integral-beta-vs-reference",
        "xi",
        n,
        integral_beta(n, bits),
        &reference,
        &tol_bf,
        digits,
    ));
    if n == 1 {
        out.push(anchor_check(
            &mut ctx,
            "anchor-beta2-over-pi",
            &reference,
            Rational::new(Int::from(2915609040u64), Int::from(10_000_000_000u64)),
            digits,
        ));
    }

    // zeta(2n+1)/pi^(2n)
    let reference = {
        let z = zeta_ref(2 * n + 1, bits + 16);
        let pi_pow = ctx.powi(&pi, 2 * n as usize);
        ctx.div(&z, &pi_pow)
    };
    out.push(quad_vs_reference_check(
        &mut ctx,
        "integral-zeta-vs-reference",
        "lambda",
        n,
        integral_zeta(n, bits),
        &reference,
        &tol_bf,
        digits,
    ));
    if n == 1 {
        out.push(anchor_check(
            &mut ctx,
            "anchor-zeta3-over-pi2",
            &reference,
            Rational::new(Int::from(1217938282u64), Int::from(10_000_000_000u64)),
            digits,
        ));
    }

    // Dual-route agreement.
    if n <= 5 {
        for (family, direct) in [
            (CoeffFamily::B, integral_beta(n, bits)),
            (CoeffFamily::A, integral_zeta(n, bits)),
        ] {
            let fam = match family {
                CoeffFamily::B => "xi",
                CoeffFamily::A => "lambda",
            };
            let check = match (direct, integral_hyperbolic_route(family, n, bits)) {
                (Ok(a), Ok(b)) => {
                    let rel = relative_error(&mut ctx, &a.value, &b.value);
                    let ok = matches!(rel.cmp(&tol_bf), Some(c) if c <= 0);
                    Check::verdict("dual-route-agreement", ok)
                        .family(fam)
                        .n(n)
                        .numeric(bigfloat_decimal(&b.value, digits))
                        .error_estimate(bigfloat_decimal(&rel, 3))
                }
                (a, b) => {
                    let msg = a
                        .err()
                        .map(|e| format!("{e}"))
                        .unwrap_or_else(|| b.err().map(|e| format!("{e}")).unwrap_or_default());
                    Check::verdict("dual-route-agreement", false)
                        .family(fam)
                        .n(n)
                        .numeric(msg)
                }
            };
            out.push(check);
        }
    }
    out
}

/// [`integral_checks_for_n`] over `n = 1..=n_max`.
pub fn integral_checks(n_max: u32, digits: usize) -> Vec<Check> {
    (1..=n_max)
        .flat_map(|n| integral_checks_for_n(n, digits))
        .collect()
}

/// Cross-validation of the series references themselves: the two
/// independent algorithms for each of `zeta(2n+1)` and `beta(2n)` must
/// agree to `2^-(precision-8)`.
pub fn reference_checks(n_max: u32, digits: usize) -> Vec<Check> {
    let bits = digits * 10 / 3 + 16;
    let ctx = FloatCtx::new(bits);
    let gate = ctx.pow2_neg(bits - 8);
    let mut out = Vec::new();
    for n in 1..=n_max {
        let z1 = zeta_ref(2 * n + 1, bits);
        let z2 = zeta_ref_alt(2 * n + 1, bits);
        let dz = ctx.abs_diff(&z1, &z2);
        out.push(
            Check::verdict(
                "zeta-dual-algorithm",
                matches!(dz.cmp(&gate), Some(c) if c <= 0),
            )
            .n(n)
            .numeric(bigfloat_decimal(&z1, digits))
            .error_estimate(bigfloat_decimal(&dz, 3)),
        );
        let b1 = beta_ref(2 * n, bits);
        let b2 = beta_ref_alt(2 * n, bits);
        let db = ctx.abs_diff(&b1, &b2);
        out.push(
            Check::verdict(
                "beta-dual-algorithm",
                matches!(db.cmp(&gate), Some(c) if c <= 0),
            )
            .n(n)
            .numeric(bigfloat_decimal(&b1, digits))
            .error_estimate(bigfloat_decimal(&db, 3)),
        );
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn quad_vs_reference_check(
    ctx: &mut FloatCtx,
    name: &str,
    fam: &str,
    n: u32,
    result: Result<QuadResult, QuadError>,
    reference: &BigFloat,
    tol: &BigFloat,
    digits: usize,
) -> Check {
    match result {
        Ok(r) => {
            let rel = relative_error(ctx, &r.value, reference);
            let ok = matches!(rel.cmp(tol), Some(c) if c <= 0);
            Check::verdict(name, ok)
                .family(fam)
                .n(n)
                .numeric(bigfloat_decimal(&r.value, digits))
                .error_estimate(bigfloat_decimal(&rel, 3))
        }
        Err(e) => Check::verdict(name, false)
            .family(fam)
            .n(n)
            .numeric(format!("{e}")),
    }
}

fn anchor_check(
    ctx: &mut FloatCtx,
    name: &str,
    value: &BigFloat,
    anchor: Rational,
    digits: usize,
) -> Check {
    // The anchor carries 10 published decimals; allow half an ulp of the
    // last printed digit.
    let slack = ctx.from_rational(&Rational::new(Int::one(), Int::from(20_000_000_000u64)));
    let diff = ctx.abs_diff(value, &ctx.from_rational(&anchor));
    let ok = matches!(diff.cmp(&slack), Some(c) if c <= 0);
    Check::verdict(name, ok).numeric(bigfloat_decimal(value, digits))
}

fn relative_error(ctx: &mut FloatCtx, value: &BigFloat, reference: &BigFloat) -> BigFloat {
    let diff = ctx.abs_diff(value, reference);
    ctx.div(&diff, &reference.abs())
}
