//! Double-exponential quadrature on `(0, infinity)` for integrands with
//! exponential decay.
//!
//! The substitution is `u = exp(t - exp(-t))`: the trapezoid rule in `t`
//! then converges geometrically for integrands analytic on the open
//! half-line, with both tails of the transformed sum decaying
//! double-exponentially. Refinement halves the step; the error estimate is
//! the plain step-halving difference, which the callers treat as heuristic.

use alloc::vec::Vec;

use crate::bigfloat::{BigFloat, FloatCtx};

/// Outcome of one adaptive integration.
#[derive(Debug, Clone)]
pub struct QuadOutcome {
    pub value: BigFloat,
    /// `|value_h - value_{h/2}|` at the final level.
    pub est_error: BigFloat,
    pub nodes_used: usize,
    pub converged: bool,
    /// `(total nodes, step-halving difference)` per refinement level.
    pub history: Vec<(usize, BigFloat)>,
}

/// Integrates `f` over `(0, infinity)` until the step-halving difference
/// drops below `rel_tol * |value|`, beginning the comparison at the second
/// level. Gives up after `max_level` refinements or `node_budget` nodes.
pub fn integrate_exp_decay<F>(
    ctx: &mut FloatCtx,
    f: &mut F,
    rel_tol: &BigFloat,
    max_level: u32,
    node_budget: usize,
) -> QuadOutcome
where
    F: FnMut(&mut FloatCtx, &BigFloat) -> BigFloat,
{
    let mut nodes_used = 0usize;
    let mut history = Vec::new();
    let mut prev: Option<BigFloat> = None;
    let mut value = ctx.zero();
    let mut est = ctx.from_u64(1);
    let mut converged = false;

    for level in 1..=max_level {
        let h = ctx.pow2_neg(level as usize);
        let (sum, n) = trapezoid_pass(ctx, f, &h, node_budget.saturating_sub(nodes_used));
        nodes_used += n;
        value = ctx.mul(&h, &sum);
        if let Some(p) = &prev {
            est = ctx.abs_diff(&value, p);
            history.push((nodes_used, est.clone()));
            let gate = ctx.mul(rel_tol, &value.abs());
            if matches!(est.cmp(&gate), Some(c) if c <= 0) {
                converged = true;
                break;
            }
        }
        prev = Some(value.clone());
        if nodes_used >= node_budget {
            break;
        }
    }

    QuadOutcome {
        value,
        est_error: est,
        nodes_used,
        converged,
        history,
    }
}

/// One trapezoid pass at step `h`: scans outward from `t = 0` in both
/// directions and stops a direction after several consecutive terms fall
/// below the working-precision floor of the running sum.
fn trapezoid_pass<F>(
    ctx: &mut FloatCtx,
    f: &mut F,
    h: &BigFloat,
    node_cap: usize,
) -> (BigFloat, usize)
where
    F: FnMut(&mut FloatCtx, &BigFloat) -> BigFloat,
{
    let work = ctx.prec();
    let mut sum = ctx.zero();
    let mut scale = ctx.zero();
    let mut nodes = 0usize;

    let term0 = node_term(ctx, f, &ctx.zero());
    nodes += 1;
    scale = ctx.add(&scale, &term0.abs());
    sum = ctx.add(&sum, &term0);

    for dir in [1i64, -1i64] {
        let mut small_streak = 0u32;
        let mut j = 1i64;
        while nodes < node_cap {
            let t = ctx.mul(h, &ctx.from_i64(dir * j));
            let term = node_term(ctx, f, &t);
            nodes += 1;
            sum = ctx.add(&sum, &term);
            scale = scale.max(&term.abs());

            // Term floor: contributions below the working epsilon of the
            // largest term seen cannot move the sum.
            let mut floor = scale.clone();
            if let Some(e) = floor.exponent() {
                floor.set_exponent(e - (work as i32 - 8));
            }
            if term.is_zero() || matches!(term.abs().cmp(&floor), Some(c) if c <= 0) {
                small_streak += 1;
                if small_streak >= 3 {
                    break;
                }
            } else {
                small_streak = 0;
            }
            j += 1;
        }
    }
    (sum, nodes)
}

/// `f(u(t)) u'(t)` with `u = exp(t - exp(-t))`, `u' = u (1 + exp(-t))`.
fn node_term<F>(ctx: &mut FloatCtx, f: &mut F, t: &BigFloat) -> BigFloat
where
    F: FnMut(&mut FloatCtx, &BigFloat) -> BigFloat,
{
    let exp_neg_t = ctx.exp(&t.neg());
    let u = ctx.exp(&ctx.sub(t, &exp_neg_t));
    let weight = ctx.mul(&u, &ctx.add(&ctx.from_u64(1), &exp_neg_t));
    let fu = f(ctx, &u);
    ctx.mul(&fu, &weight)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigfloat::{cmp_finite, to_rational};
    use crate::exact::ratio;
    use core::cmp::Ordering;
    use num_traits::Zero;

    fn run<F>(prec: usize, f: &mut F) -> (QuadOutcome, FloatCtx)
    where
        F: FnMut(&mut FloatCtx, &BigFloat) -> BigFloat,
    {
        let mut ctx = FloatCtx::new(prec);
        let tol = ctx.pow2_neg(prec);
        let out = integrate_exp_decay(&mut ctx, f, &tol, 14, 1_000_000);
        (out, ctx)
    }

    #[test]
    fn integrates_exponential() {
        // int_0^inf e^-u du = 1.
        let (out, ctx) = run(80, &mut |c: &mut FloatCtx, u: &BigFloat| c.exp(&u.neg()));
        assert!(out.converged);
        let err = ctx.abs_diff(&out.value, &ctx.from_u64(1));
        assert_eq!(cmp_finite(&err, &ctx.pow2_neg(75)), Ordering::Less);
    }

    #[test]
    fn integrates_sech_to_half_pi() {
        // int_0^inf sech u du = pi/2.
        let (out, mut ctx) = run(80, &mut |c: &mut FloatCtx, u: &BigFloat| {
            let s = c.exp(&u.neg());
            let denom = c.add(&c.from_u64(1), &c.mul(&s, &s));
            c.div(&c.mul(&c.from_u64(2), &s), &denom)
        });
        assert!(out.converged);
        let pi = ctx.pi();
        let half_pi = ctx.div(&pi, &ctx.from_u64(2));
        let err = ctx.abs_diff(&out.value, &half_pi);
        assert_eq!(cmp_finite(&err, &ctx.pow2_neg(74)), Ordering::Less);
    }

    #[test]
    fn integrates_sech_squared_to_one() {
        // int_0^inf sech^2 u du = tanh(inf) = 1.
        let (out, ctx) = run(80, &mut |c: &mut FloatCtx, u: &BigFloat| {
            let s = c.exp(&u.neg());
            let s2 = c.mul(&s, &s);
            let denom = c.add(&c.from_u64(1), &s2);
            let sech = c.div(&c.mul(&c.from_u64(2), &s), &denom);
            c.mul(&sech, &sech)
        });
        assert!(out.converged);
        let err = ctx.abs_diff(&out.value, &ctx.from_u64(1));
        assert_eq!(cmp_finite(&err, &ctx.pow2_neg(74)), Ordering::Less);
    }

    #[test]
    fn error_estimates_shrink_quartically_or_better() {
        // Step-halving on a double-exponential rule: each level should cut
        // the difference by far more than 4x once in the asymptotic regime.
        let (out, _ctx) = run(96, &mut |c: &mut FloatCtx, u: &BigFloat| c.exp(&u.neg()));
        let improving = out.history.windows(2).any(|w| {
            let (_, e1) = &w[0];
            let (_, e2) = &w[1];
            if e1.is_zero() || e2.is_zero() {
                return true;
            }
            let r1 = to_rational(e1).unwrap();
            let r2 = to_rational(e2).unwrap();
            !r2.is_zero() && r1 / r2 >= ratio(4, 1)
        });
        assert!(improving, "history: {:?}", out.history);
    }

    #[test]
    fn node_budget_reports_nonconvergence() {
        let mut ctx = FloatCtx::new(128);
        let tol = ctx.pow2_neg(128);
        let out = integrate_exp_decay(
            &mut ctx,
            &mut |c: &mut FloatCtx, u: &BigFloat| c.exp(&u.neg()),
            &tol,
            14,
            20,
        );
        assert!(!out.converged);
        assert!(out.nodes_used <= 21);
    }
}
