//! Independent series references for `zeta` at odd integers and the
//! Dirichlet beta function at even integers.
//!
//! Each value is computable by two routes that share no code path:
//!
//! * `zeta_ref`: direct summation with the integral tail refined by exact
//!   rational Bernoulli corrections (remainder below the first omitted
//!   term); `zeta_ref_alt` goes through the alternating eta series.
//! * `beta_ref`: Chebyshev-accelerated alternating summation carried out
//!   entirely in exact rational arithmetic, with the proven error bound
//!   `S / T_n(3)`; `beta_ref_alt` splits into two Hurwitz-style sums with
//!   the same Bernoulli tail treatment.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::bigfloat::{BigFloat, FloatCtx};
use crate::exact::{pow2, Int, Rational};
use crate::special::bernoulli_seq;

/// `zeta(s)` for odd `s >= 3` with absolute error at most `2^-precision`.
pub fn zeta_ref(s: u32, precision: usize) -> BigFloat {
    assert!(s >= 3 && s % 2 == 1, "s must be odd and at least 3");
    let mut ctx = FloatCtx::new(precision);
    let v = hurwitz_zeta_sum(&mut ctx, s, &Rational::zero(), precision);
    ctx.round_to_requested(v)
}

/// Second route: `zeta(s) = eta(s) / (1 - 2^(1-s))` with `eta` summed by
/// exact-rational Chebyshev acceleration.
pub fn zeta_ref_alt(s: u32, precision: usize) -> BigFloat {
    assert!(s >= 3 && s % 2 == 1, "s must be odd and at least 3");
    let eta = chebyshev_alternating_sum(
        |k| Rational::new(Int::one(), Int::from(k as u64 + 1).pow(s)),
        precision + 4,
    );
    // 1 - 2^(1-s) = (2^(s-1) - 1) / 2^(s-1)
    let factor = Rational::new(pow2(s as u64 - 1) - Int::one(), pow2(s as u64 - 1));
    let ctx = FloatCtx::new(precision);
    ctx.round_to_requested(ctx.from_rational(&(eta / factor)))
}

/// Dirichlet `beta(s)` for even `s >= 2` with absolute error at most
/// `2^-precision`, via exact-rational accelerated alternating summation.
pub fn beta_ref(s: u32, precision: usize) -> BigFloat {
    assert!(s >= 2 && s.is_multiple_of(2), "s must be even and at least 2");
    let v = chebyshev_alternating_sum(
        |k| Rational::new(Int::one(), Int::from(2 * k as u64 + 1).pow(s)),
        precision + 4,
    );
    let ctx = FloatCtx::new(precision);
    ctx.round_to_requested(ctx.from_rational(&v))
}

/// Second route: `beta(s) = 4^-s (zeta(s,1/4) - zeta(s,3/4))`.
pub fn beta_ref_alt(s: u32, precision: usize) -> BigFloat {
    assert!(s >= 2 && s.is_multiple_of(2), "s must be even and at least 2");
    let mut ctx = FloatCtx::new(precision + 2 * s as usize + 8);
    let quarter = Rational::new(Int::one(), Int::from(4));
    let three_quarter = Rational::new(Int::from(3), Int::from(4));
    let z1 = hurwitz_zeta_sum(&mut ctx, s, &quarter, precision + 2 * s as usize + 4);
    let z3 = hurwitz_zeta_sum(&mut ctx, s, &three_quarter, precision + 2 * s as usize + 4);
    let diff = ctx.sub(&z1, &z3);
    let scale = ctx.from_rational(&Rational::new(Int::one(), pow2(2 * s as u64)));
    let out = ctx.mul(&diff, &scale);
    let final_ctx = FloatCtx::new(precision);
    final_ctx.round_to_requested(out)
}

/// `sum_{j>=1} (j+a)^-s` for `a = 0` (the classical case includes `j = 0`
/// shifted: here `a = 0` means plain `zeta(s)` over `j >= 1`, while a
/// fractional `a` sums `(j+a)^-s` over `j >= 0`).
///
/// Head terms are summed in floating point at working precision; the tail
/// past `N` uses the integral term, the half-term, and exact rational
/// Bernoulli corrections. The correction series is truncated at its
/// smallest term, and for decreasing convex integrands the remainder is
/// below the first omitted term; `N` doubles until that bound meets the
/// target.
fn hurwitz_zeta_sum(ctx: &mut FloatCtx, s: u32, a: &Rational, precision: usize) -> BigFloat {
    let target = Rational::new(Int::one(), Int::one() << (precision + 4));
    let bern = bernoulli_seq(64);
    let mut n = 64usize.max(precision / 2);

    loop {
        if let Some(tail) = em_tail(s, a, n, &bern, &target) {
            // Head: every term with base <= x = N + a, so j = 1..=N when
            // a = 0 and j = 0..=N otherwise.
            let mut head = ctx.zero();
            let j_start = if a.is_zero() { 1 } else { 0 };
            for j in j_start..=n {
                let base = a + Rational::from_integer(Int::from(j as u64));
                let den = base_pow(&base, s);
                head = ctx.add(&head, &ctx.from_rational(&den.recip()));
            }
            return ctx.add(&head, &ctx.from_rational(&tail));
        }
        n *= 2;
        assert!(n <= 1 << 22, "tail failed to converge");
    }
}

/// Exact rational Euler-Maclaurin tail past `x = N + a`, or `None` when
/// the asymptotic correction series cannot reach `target` at this `N`.
///
/// `tail = x^(1-s)/(s-1) - x^-s/2 + sum_i B_{2i}/(2i)! (s)_{2i-1}
/// x^(-s-2i+1)`, truncated just before the first term at or below
/// `target`; for this completely monotone integrand the remainder is
/// bounded by that first omitted term.
fn em_tail(
    s: u32,
    a: &Rational,
    n: usize,
    bern: &[Rational],
    target: &Rational,
) -> Option<Rational> {
    let x = a + Rational::from_integer(Int::from(n as u64));
    let inv_xs = base_pow(&x, s).recip();
    let inv_x2 = (&x * &x).recip();

    let mut tail = &x * &inv_xs / Rational::from_integer(Int::from(s as u64 - 1))
        - &inv_xs / Rational::from_integer(Int::from(2));

    let mut poch = Rational::from_integer(Int::from(s as u64)); // (s)_{2i-1}
    let mut fact = Rational::from_integer(Int::from(2)); // (2i)!
    let mut x_power = (&x * &inv_xs) * &inv_x2; // x^(-s-1), then x^(-s-2i+1)
    let mut prev_mag: Option<Rational> = None;
    for i in 1..bern.len() / 2 {
        let term = &bern[2 * i] / &fact * &poch * &x_power;
        let mag = term.abs();
        if &mag <= target {
            // Stop before adding: the remainder is below this first
            // omitted term, hence below target.
            return Some(tail);
        }
        if let Some(p) = &prev_mag {
            if &mag > p {
                // The asymptotic series diverges before reaching the
                // target: N is too small.
                return None;
            }
        }
        tail += &term;
        prev_mag = Some(mag);
        // (2i)! -> (2i+2)!, (s)_{2i-1} -> (s)_{2i+1}, x exponent -2.
        let two_i = 2 * i as u64;
        fact *= Rational::from_integer(Int::from((two_i + 1) * (two_i + 2)));
        poch *= Rational::from_integer(Int::from(s as u64 + two_i - 1));
        poch *= Rational::from_integer(Int::from(s as u64 + two_i));
        x_power *= &inv_x2;
    }
    None
}

fn base_pow(base: &Rational, s: u32) -> Rational {
    base.pow(s as i32)
}

/// Chebyshev-accelerated alternating sum `sum_k (-1)^k a_k` for a totally
/// monotone coefficient sequence with `0 < a_k <= 1`, exact in rationals.
///
/// With `P(x) = T_n(2x-1)` and `D = P(-1)`, the estimate
/// `(1/D) sum_k e_k a_k` (where `(D - P(x))/(1+x) = sum e_k x^k`) has error
/// at most `S / |T_n(3)| <= 1 / T_n(3)`, since `|P| <= 1` on `[0,1]`.
pub fn chebyshev_alternating_sum(a: impl Fn(usize) -> Rational, precision: usize) -> Rational {
    // Pick n with T_n(3) >= 2^(precision): T_n(3) gains log2(3+sqrt(8)) ~
    // 2.54 bits per step.
    let bound = Int::one() << precision;
    let mut t_prev = Int::one();
    let mut t_cur = Int::from(3);
    let mut n = 1usize;
    while t_cur < bound {
        let next = Int::from(6) * &t_cur - &t_prev;
        t_prev = t_cur;
        t_cur = next;
        n += 1;
    }

    // Coefficients of T_n(2x-1), exact integers.
    let mut p_prev: Vec<Int> = vec![Int::one()];
    let mut p_cur: Vec<Int> = vec![-Int::one(), Int::from(2)];
    for _ in 2..=n {
        // p_next = (4x - 2) p_cur - p_prev
        let mut next = vec![Int::zero(); p_cur.len() + 1];
        for (i, c) in p_cur.iter().enumerate() {
            next[i + 1] += Int::from(4) * c;
            next[i] -= Int::from(2) * c;
        }
        for (i, c) in p_prev.iter().enumerate() {
            next[i] -= c;
        }
        p_prev = p_cur;
        p_cur = next;
    }

    // D = P(-1); numerator c(x) = D - P(x); quotient e(x) = c(x)/(1+x).
    let mut d = Int::zero();
    for (i, c) in p_cur.iter().enumerate() {
        if i % 2 == 0 {
            d += c;
        } else {
            d -= c;
        }
    }
    let mut c: Vec<Int> = p_cur.iter().map(|v| -v.clone()).collect();
    c[0] += &d;
    // Ruffini division by (x + 1).
    let deg = c.len() - 1;
    let mut e = vec![Int::zero(); deg];
    e[deg - 1] = c[deg].clone();
    for i in (1..deg).rev() {
        e[i - 1] = &c[i] - &e[i];
    }
    debug_assert_eq!(c[0], e[0], "division by (1+x) must be exact");

    let mut sum = Rational::zero();
    for (k, ek) in e.iter().enumerate() {
        if ek.is_zero() {
            continue;
        }
        sum += Rational::from_integer(ek.clone()) * a(k);
    }
    sum / Rational::from_integer(d)
}
