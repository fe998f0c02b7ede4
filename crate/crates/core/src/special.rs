//! Exact Bernoulli numbers, Euler (secant) numbers, Eulerian numbers and
//! Eulerian polynomials of types A and B, plus the identity checks the
//! polynomial constructions rely on.
//!
//! Sign conventions are fixed once here: the Euler numbers follow the
//! secant convention (`E_0 = 1, E_2 = -1, E_4 = 5`) and Bernoulli numbers
//! use `B_1 = -1/2`. A wrong Euler convention would flip the sign of the
//! Xi values at zero and is caught by the cross-construction tests.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::bigfloat::{self, BigFloat, FloatCtx, RoundingMode};
use crate::exact::{binom_nonneg, pow2, Int, Rational};

fn next_row_a(prev: &[Int], n: usize) -> Vec<Int> {
    let mut next = vec![Int::zero(); n];
    for (k, slot) in next.iter_mut().enumerate() {
        // <n,k> = (k+1)<n-1,k> + (n-k)<n-1,k-1>
        let mut v = Int::zero();
        if k < prev.len() {
            v += Int::from((k + 1) as u64) * &prev[k];
        }
        if k >= 1 && k - 1 < prev.len() {
            v += Int::from((n - k) as u64) * &prev[k - 1];
        }
        *slot = v;
    }
    next
}

fn next_row_b(prev: &[Int], n: usize) -> Vec<Int> {
    let mut next = vec![Int::zero(); n + 1];
    for (k, slot) in next.iter_mut().enumerate() {
        // <n,k>^B = (2k+1)<n-1,k>^B + (2(n-k)+1)<n-1,k-1>^B
        let mut v = Int::zero();
        if k < prev.len() {
            v += Int::from((2 * k + 1) as u64) * &prev[k];
        }
        if k >= 1 && k - 1 < prev.len() {
            v += Int::from((2 * (n - k) + 1) as u64) * &prev[k - 1];
        }
        *slot = v;
    }
    next
}

/// Row `m` of the type-A Eulerian triangle: `<m,0>, ..., <m,m-1>`
/// (row 0 is the single entry 1 by convention).
pub fn eulerian_row_a(m: usize) -> Vec<Int> {
    let mut row = vec![Int::one()];
    for n in 1..=m {
        row = next_row_a(&row, n);
    }
    row
}

/// Row `m` of the type-B Eulerian triangle: `<m,0>^B, ..., <m,m>^B`.
pub fn eulerian_row_b(m: usize) -> Vec<Int> {
    let mut row = vec![Int::one()];
    for n in 1..=m {
        row = next_row_b(&row, n);
    }
    row
}

/// Type-A Eulerian number, zero outside `0 <= k <= m-1` (and `<0,0> = 1`).
pub fn eulerian_a(m: usize, k: i64) -> Int {
    let row = eulerian_row_a(m);
    if k < 0 || k as usize >= row.len() {
        Int::zero()
    } else {
        row[k as usize].clone()
    }
}

/// Type-B Eulerian number, zero outside `0 <= k <= m`.
pub fn eulerian_b(m: usize, k: i64) -> Int {
    let row = eulerian_row_b(m);
    if k < 0 || k as usize >= row.len() {
        Int::zero()
    } else {
        row[k as usize].clone()
    }
}

/// Memoized type-A Eulerian triangle. Rows are immutable once built;
/// build rows eagerly (or behind external synchronization) before sharing
/// across threads.
#[derive(Debug, Clone, Default)]
pub struct EulerianTableA {
    rows: Vec<Vec<Int>>,
}

impl EulerianTableA {
    pub fn new() -> Self {
        EulerianTableA { rows: Vec::new() }
    }

    pub fn with_rows(m_max: usize) -> Self {
        let mut t = Self::new();
        t.ensure(m_max);
        t
    }

    pub fn ensure(&mut self, m_max: usize) {
        if self.rows.is_empty() {
            self.rows.push(vec![Int::one()]);
        }
        while self.rows.len() <= m_max {
            let n = self.rows.len();
            let next = next_row_a(&self.rows[n - 1], n);
            self.rows.push(next);
        }
    }

    /// Row `m`; panics if the row has not been built.
    pub fn row(&self, m: usize) -> &[Int] {
        &self.rows[m]
    }

    pub fn entry(&self, m: usize, k: i64) -> Int {
        let row = self.row(m);
        if k < 0 || k as usize >= row.len() {
            Int::zero()
        } else {
            row[k as usize].clone()
        }
    }
}

/// Memoized type-B Eulerian triangle; same sharing discipline as
/// [`EulerianTableA`].
#[derive(Debug, Clone, Default)]
pub struct EulerianTableB {
    rows: Vec<Vec<Int>>,
}

impl EulerianTableB {
    pub fn new() -> Self {
        EulerianTableB { rows: Vec::new() }
    }

    pub fn with_rows(m_max: usize) -> Self {
        let mut t = Self::new();
        t.ensure(m_max);
        t
    }

    pub fn ensure(&mut self, m_max: usize) {
        if self.rows.is_empty() {
            self.rows.push(vec![Int::one()]);
        }
        while self.rows.len() <= m_max {
            let n = self.rows.len();
            let next = next_row_b(&self.rows[n - 1], n);
            self.rows.push(next);
        }
    }

    pub fn row(&self, m: usize) -> &[Int] {
        &self.rows[m]
    }

    pub fn entry(&self, m: usize, k: i64) -> Int {
        let row = self.row(m);
        if k < 0 || k as usize >= row.len() {
            Int::zero()
        } else {
            row[k as usize].clone()
        }
    }
}

/// Exact Bernoulli number `B_n` (`B_1 = -1/2` convention), via the
/// classical recurrence `sum_{k<=m} C(m+1,k) B_k = 0` seeded with `B_0 = 1`.
pub fn bernoulli(n: usize) -> Rational {
    bernoulli_seq(n).pop().expect("nonempty")
}

/// `B_0 .. B_n` in one recurrence pass.
pub fn bernoulli_seq(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    b.push(Rational::one());
    for m in 1..=n {
        if m > 1 && m % 2 == 1 {
            b.push(Rational::zero());
            continue;
        }
        let mut acc = Rational::zero();
        for (k, bk) in b.iter().enumerate() {
            if bk.is_zero() {
                continue;
            }
            acc += Rational::from_integer(binom_nonneg((m + 1) as u64, k as i64)) * bk;
        }
        b.push(-acc / Rational::from_integer(Int::from((m + 1) as u64)));
    }
    b
}

/// Exact Euler (secant) number `E_n`; odd indices are zero.
///
/// Convention: `sec x = sum (-1)^k E_{2k} x^{2k} / (2k)!` with
/// `E_0 = 1, E_2 = -1, E_4 = 5`.
pub fn euler_number(n: usize) -> Int {
    if n % 2 == 1 {
        return Int::zero();
    }
    euler_seq_even(n / 2).pop().expect("nonempty")
}

/// `E_0, E_2, ..., E_{2m}` via `sum_k C(2n,2k) E_{2k} = 0`.
pub fn euler_seq_even(m: usize) -> Vec<Int> {
    let mut e: Vec<Int> = Vec::with_capacity(m + 1);
    e.push(Int::one());
    for n in 1..=m {
        let mut acc = Int::zero();
        for (k, ek) in e.iter().enumerate() {
            acc += binom_nonneg(2 * n as u64, 2 * k as i64) * ek;
        }
        e.push(-acc);
    }
    e
}

/// Cache of signed Bernoulli/Euler values for the suite runner.
#[derive(Debug, Clone, Default)]
pub struct SignedNumberCache {
    bernoulli: Vec<Rational>,
    euler_even: Vec<Int>,
}

impl SignedNumberCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn ensure(&mut self, n_max: usize) {
        if self.bernoulli.len() <= n_max {
            self.bernoulli = bernoulli_seq(n_max);
        }
        if self.euler_even.len() <= n_max / 2 {
            self.euler_even = euler_seq_even(n_max / 2);
        }
    }

    pub fn bernoulli(&self, n: usize) -> &Rational {
        &self.bernoulli[n]
    }

    pub fn euler(&self, n: usize) -> Int {
        if n % 2 == 1 {
            Int::zero()
        } else {
            self.euler_even[n / 2].clone()
        }
    }
}

/// Type-A Eulerian polynomial `A_m(t) = sum_{k=0}^{m-1} <m,k> t^k`, `m >= 1`.
pub fn eulerian_poly_a(m: usize, t: &Rational) -> Rational {
    debug_assert!(m >= 1);
    horner_int(&eulerian_row_a(m), t)
}

/// Type-B Eulerian polynomial `B_m(t) = sum_{k=0}^{m} <m,k>^B t^k`.
pub fn eulerian_poly_b(m: usize, t: &Rational) -> Rational {
    horner_int(&eulerian_row_b(m), t)
}

fn horner_int(coeffs: &[Int], t: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * t + Rational::from_integer(c.clone());
    }
    acc
}

/// Checks `sum_l C(m+k-l, m) <m,l>^B = (2k+1)^m` exactly.
pub fn worpitzky_b_check(m: usize, k: usize) -> bool {
    let row = eulerian_row_b(m);
    let mut lhs = Int::zero();
    for (l, w) in row.iter().enumerate() {
        // m + k - l >= k >= 0 for l <= m, so the upper index never goes negative.
        lhs += binom_nonneg((m + k - l) as u64, m as i64) * w;
    }
    let rhs = Int::from((2 * k + 1) as u64).pow(m as u32);
    lhs == rhs
}

/// Checks both alternating Eulerian sums at index `n >= 1`:
/// the type-B sum against `-2^(2n-2) E_{2n}` and the type-A sum against
/// `-2^(2n+1) (2^(2n+2)-1) B_{2n+2} / (2n+2)`. Returns `(pass_b, pass_a)`.
pub fn eulerian_sum_identity(n: usize) -> (bool, bool) {
    debug_assert!(n >= 1);
    let row_b = eulerian_row_b(2 * n - 1);
    let row_a = eulerian_row_a(2 * n);

    let mut sum_b = Int::zero();
    let mut sum_a = Int::zero();
    for k in 0..n {
        let weight = Int::from((2 * n - 2 * k - 1) as u64);
        let term_b = &row_b[k] * &weight;
        let term_a = &row_a[k] * &weight;
        if k % 2 == 0 {
            sum_b += term_b;
            sum_a += term_a;
        } else {
            sum_b -= term_b;
            sum_a -= term_a;
        }
    }

    let rhs_b = -(pow2(2 * n as u64 - 2) * euler_number(2 * n));
    let pass_b = sum_b == rhs_b;

    let rhs_a = -(Rational::from_integer(
        pow2(2 * n as u64 + 1) * (pow2(2 * n as u64 + 2) - Int::one()),
    ) / Rational::from_integer(Int::from((2 * n + 2) as u64)))
        * bernoulli(2 * n + 2);
    let pass_a = Rational::from_integer(sum_a) == rhs_a;

    (pass_b, pass_a)
}

/// Outcome of the truncated-series check of the negative-order polylog
/// closed form.
#[derive(Debug, Clone)]
pub struct PolylogCheck {
    /// `|truncated LHS series - exact rational RHS|`, rounded up.
    pub residual: BigFloat,
    /// Rigorous bound on the series truncation tail.
    pub tail_bound: BigFloat,
    pub terms_used: usize,
}

impl PolylogCheck {
    /// The identity holds iff the residual is explained by truncation
    /// (`residual <= 2 * tail_bound`).
    pub fn passes(&self) -> bool {
        let mut two_tail = self.tail_bound.clone();
        if let Some(e) = two_tail.exponent() {
            two_tail.set_exponent(e + 1);
        }
        !matches!(self.residual.cmp(&two_tail), Some(c) if c > 0)
    }
}

/// Errors from the polylog identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolylogError {
    /// `z` must lie strictly inside (0, 1).
    ZOutOfRange,
    /// The truncated series did not reach the tolerance within the term cap.
    SlowConvergence { terms: usize },
}

impl fmt::Display for PolylogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolylogError::ZOutOfRange => write!(f, "z must lie strictly in (0,1)"),
            PolylogError::SlowConvergence { terms } => {
                write!(f, "series did not converge within {terms} terms")
            }
        }
    }
}

impl core::error::Error for PolylogError {}

/// Compares the truncated series `sum_k (2k+1)^m x^k`, `x = -z^2`, against
/// the exact closed form `sum_r <m,r>^B (-z^2)^r / (1+z^2)^(m+1)`.
///
/// The partial sum is computed in exact rational arithmetic, so the returned
/// residual is the exact truncation error of the series up to one final
/// upward rounding. The tail bound comes from the geometric ratio of the
/// first omitted term.
pub fn polylog_b_identity_residual(
    m: usize,
    z: &Rational,
    precision: usize,
) -> Result<PolylogCheck, PolylogError> {
    if !(z.is_positive() && z < &Rational::one()) {
        return Err(PolylogError::ZOutOfRange);
    }
    let r = z * z; // |x|, with x = -z^2
    let tol = Rational::new(Int::one(), Int::one() << (precision + 2));

    let cap = 200_000usize;
    let mut sum = Rational::zero();
    let mut rpow = Rational::one();
    let mut k = 0usize;
    let tail = loop {
        let term = Rational::from_integer(Int::from((2 * k + 1) as u64).pow(m as u32)) * &rpow;
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        rpow *= &r;
        // Term-ratio bound for indices past k: ((2j+3)/(2j+1))^m r <= rho.
        let rho = Rational::new(
            Int::from((2 * k + 5) as u64).pow(m as u32),
            Int::from((2 * k + 3) as u64).pow(m as u32),
        ) * &r;
        if rho < Rational::one() {
            let first_omitted =
                Rational::from_integer(Int::from((2 * k + 3) as u64).pow(m as u32)) * &rpow;
            let bound = first_omitted / (Rational::one() - rho);
            if bound <= tol {
                break bound;
            }
        }
        k += 1;
        if k > cap {
            return Err(PolylogError::SlowConvergence { terms: cap });
        }
    };

    // Exact closed form.
    let mut num = Rational::zero();
    let mut pw = Rational::one();
    for w in eulerian_row_b(m) {
        num += Rational::from_integer(w) * &pw;
        pw *= -(&r);
    }
    let den = (Rational::one() + &r).pow((m + 1) as i32);
    let rhs = num / den;

    let residual = (sum - rhs).abs();
    let ctx = FloatCtx::new(precision);
    Ok(PolylogCheck {
        residual: round_up(&ctx, &residual),
        tail_bound: round_up(&ctx, &tail),
        terms_used: k + 1,
    })
}

fn round_up(ctx: &FloatCtx, r: &Rational) -> BigFloat {
    let num = bigfloat::int_to_bigfloat(r.numer());
    let den = bigfloat::int_to_bigfloat(r.denom());
    num.div(&den, ctx.prec(), RoundingMode::Up)
}

fn permutations<T: Clone>(items: &mut Vec<T>, k: usize, out: &mut Vec<Vec<T>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, out);
        items.swap(k, i);
    }
}

/// Independent oracle: descent counts over all `m!` permutations of
/// `{1..m}`.
pub(crate) fn eulerian_a_by_descents(m: usize) -> Vec<Int> {
    let mut perms = Vec::new();
    permutations(&mut (1..=m).collect(), 0, &mut perms);
    let mut counts = vec![Int::zero(); m.max(1)];
    for p in perms {
        let d = p.windows(2).filter(|w| w[0] > w[1]).count();
        counts[d] += 1;
    }
    counts
}

/// Independent oracle: type-B descent counts over all `2^m m!` signed
/// permutations, with `w_0 = 0`.
pub(crate) fn eulerian_b_by_descents(m: usize) -> Vec<Int> {
    let mut counts = vec![Int::zero(); m + 1];
    let mut perms = Vec::new();
    permutations(&mut (1..=m as i64).collect(), 0, &mut perms);
    for p in perms {
        for mask in 0u32..(1 << m) {
            let signed: Vec<i64> = p
                .iter()
                .enumerate()
                .map(|(i, &v)| if mask & (1 << i) != 0 { -v } else { v })
                .collect();
            let mut d = 0usize;
            let mut prev = 0i64;
            for &w in &signed {
                if prev > w {
                    d += 1;
                }
                prev = w;
            }
            counts[d] += 1;
        }
    }
    counts
}

/// The Eulerian identity suite: the Worpitzky identity for `m <= 10`,
/// `k <= 20`, both alternating-sum identities for `n <= 12`, brute-force
/// descent-count agreement (type A to `m = 7`, type B to `m = 5`), and the
/// symmetry and row-sum laws to `m = 20`. All exact.
pub fn eulerian_checks() -> Vec<crate::report::Check> {
    use crate::report::Check;
    let mut out = Vec::new();

    let mut worpitzky_ok = true;
    for m in 0..=10 {
        for k in 0..=20 {
            if !worpitzky_b_check(m, k) {
                worpitzky_ok = false;
            }
        }
    }
    out.push(Check::verdict("worpitzky-type-b", worpitzky_ok));

    for n in 1..=12u32 {
        let (b, a) = eulerian_sum_identity(n as usize);
        out.push(Check::verdict("eulerian-sum-type-b", b).n(n));
        out.push(Check::verdict("eulerian-sum-type-a", a).n(n));
    }

    let mut descent_a_ok = true;
    for m in 1..=7 {
        if eulerian_row_a(m) != eulerian_a_by_descents(m) {
            descent_a_ok = false;
        }
    }
    out.push(Check::verdict("descent-count-type-a", descent_a_ok));

    let mut descent_b_ok = true;
    for m in 1..=5 {
        if eulerian_row_b(m) != eulerian_b_by_descents(m) {
            descent_b_ok = false;
        }
    }
    out.push(Check::verdict("descent-count-type-b", descent_b_ok));

    let mut laws_ok = true;
    for m in 0..=20usize {
        let ra = eulerian_row_a(m);
        let rb = eulerian_row_b(m);
        let sum_a: Int = ra.iter().sum();
        let sum_b: Int = rb.iter().sum();
        if sum_a != crate::exact::factorial(m as u64)
            || sum_b != pow2(m as u64) * crate::exact::factorial(m as u64)
        {
            laws_ok = false;
        }
        for (i, v) in ra.iter().enumerate() {
            if !v.is_positive() || *v != ra[ra.len() - 1 - i] {
                laws_ok = false;
            }
        }
        for (i, v) in rb.iter().enumerate() {
            if !v.is_positive() || *v != rb[rb.len() - 1 - i] {
                laws_ok = false;
            }
        }
    }
    out.push(Check::verdict("symmetry-and-row-sums", laws_ok));

    out
}

/// Polylog closed-form residual checks for `m <= m_max` at
/// `z in {1/3, 1/2}`.
pub fn polylog_checks(m_max: usize, precision: usize) -> Vec<crate::report::Check> {
    use crate::bigfloat::bigfloat_decimal;
    use crate::report::{Check, Status};
    let mut out = Vec::new();
    for m in 0..=m_max {
        for (label, z) in [
            ("1/3", Rational::new(Int::one(), Int::from(3))),
            ("1/2", Rational::new(Int::one(), Int::from(2))),
        ] {
            let check = match polylog_b_identity_residual(m, &z, precision) {
                Ok(c) => Check::verdict("polylog-closed-form-residual", c.passes())
                    .n(m as u32)
                    .numeric(bigfloat_decimal(&c.residual, 6))
                    .error_estimate(bigfloat_decimal(&c.tail_bound, 6))
                    .exact(alloc::string::String::from(label)),
                Err(e) => Check::new("polylog-closed-form-residual", Status::Fail)
                    .n(m as u32)
                    .numeric(alloc::format!("{e}")),
            };
            out.push(check);
        }
    }
    out
}
