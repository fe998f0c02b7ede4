//! Exact real-root isolation for adapted polynomials via Sturm chains,
//! plus the interlacing and endpoint-ratio verifications built on top.
//!
//! Chain polynomials are kept as primitive integer polynomials (each
//! remainder is divided by the gcd of its coefficients); every element is
//! a positive scalar multiple of the rational signed-remainder sequence,
//! so sign variations are unchanged and coefficient growth stays tame.
//! All interval endpoints are dyadic rationals.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::bigfloat::{decimal_string, BigFloat, FloatCtx};
use crate::exact::{factorial, pow2, rational_string, Int, Rational};
use crate::poly::{AdaptedPolynomial, Family};
use crate::report::Check;

/// Which endpoint a ratio bound refers to: `Right` bounds the distance from
/// the largest root up to `a`, `Left` the distance from `a` down to the
/// smallest root. The numeric value `|p(a)/lc|^(1/deg)` is the same.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EndpointSide {
    Left,
    Right,
}

/// Errors from root isolation and its consumers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootError {
    /// `a < b` violated.
    InvalidInterval,
    /// An endpoint stayed on a root through all shift retries.
    EndpointShiftExhausted,
    /// Interval refinement hit the depth limit before deciding.
    RefinementExhausted,
    /// Ratio bound needs `deg >= 1`.
    DegreeTooSmall,
    /// Ratio bound evaluated at a root.
    EndpointIsRoot,
    /// Interlacing inputs must have root counts differing by one.
    RootCountMismatch,
}

impl fmt::Display for RootError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootError::InvalidInterval => write!(f, "interval endpoints must satisfy a < b"),
            RootError::EndpointShiftExhausted => {
                write!(f, "endpoint remained a root after bounded shift retries")
            }
            RootError::RefinementExhausted => write!(f, "refinement-exhausted"),
            RootError::DegreeTooSmall => write!(f, "polynomial degree must be at least 1"),
            RootError::EndpointIsRoot => write!(f, "p(a) = 0 at the ratio-bound endpoint"),
            RootError::RootCountMismatch => {
                write!(f, "interlacing requires root counts n-1 and n")
            }
        }
    }
}

impl core::error::Error for RootError {}

/// Dense primitive integer polynomial; empty coefficient list is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<Int>,
}

impl IntPoly {
    fn from_coeffs(mut coeffs: Vec<Int>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Clears denominators and strips content; the result is a positive
    /// rational multiple of the input.
    pub fn from_rationals(coeffs: &[Rational]) -> Self {
        let mut den = Int::one();
        for c in coeffs {
            den = num_integer::lcm(den, c.denom().clone());
        }
        let ints: Vec<Int> = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        IntPoly::from_coeffs(ints).primitive()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> &Int {
        self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    fn primitive(mut self) -> Self {
        if self.coeffs.is_empty() {
            return self;
        }
        let mut g = Int::zero();
        for c in &self.coeffs {
            g = num_integer::gcd(g, c.clone());
        }
        if !g.is_one() {
            for c in &mut self.coeffs {
                *c /= &g;
            }
        }
        self
    }

    fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return IntPoly { coeffs: Vec::new() };
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Int::from(i as u64))
            .collect();
        IntPoly::from_coeffs(coeffs)
    }

    /// Sign of the value at the rational `num/den` (`den > 0`).
    fn sign_at(&self, num: &Int, den: &Int) -> i32 {
        if self.coeffs.is_empty() {
            return 0;
        }
        let mut acc = self.coeffs.last().unwrap().clone();
        let mut denpow = Int::one();
        for c in self.coeffs.iter().rev().skip(1) {
            denpow *= den;
            acc = acc * num + c * &denpow;
        }
        int_sign(&acc)
    }

    fn sign_at_rational(&self, x: &Rational) -> i32 {
        self.sign_at(x.numer(), x.denom())
    }

    fn sign_at_pos_inf(&self) -> i32 {
        if self.coeffs.is_empty() {
            0
        } else {
            int_sign(self.leading())
        }
    }

    fn sign_at_neg_inf(&self) -> i32 {
        match self.degree() {
            None => 0,
            Some(d) => {
                let s = int_sign(self.leading());
                if d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        }
    }

    /// Value at a rational point, exactly.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc
    }

    /// Pseudo-remainder with a positive multiplier: the result is a
    /// positive scalar multiple of `self mod other`.
    fn pseudo_rem_abs(&self, other: &Self) -> Self {
        let dg = other.degree().expect("nonzero divisor");
        let glc = other.leading().clone();
        let glc_abs = glc.abs();
        let glc_sign = Int::from(int_sign(&glc) as i64);
        let mut r = self.coeffs.clone();
        loop {
            while r.last().map(|c| c.is_zero()).unwrap_or(false) {
                r.pop();
            }
            if r.len() <= dg {
                break;
            }
            let dr = r.len() - 1;
            let factor = r.last().unwrap().clone() * &glc_sign;
            for c in r.iter_mut() {
                *c *= &glc_abs;
            }
            for (i, gc) in other.coeffs.iter().enumerate() {
                r[dr - dg + i] -= &factor * gc;
            }
            debug_assert!(r[dr].is_zero());
        }
        IntPoly::from_coeffs(r)
    }

    /// Exact division for primitive polynomials where `other` divides
    /// `self` over the rationals (up to sign).
    fn div_exact(&self, other: &Self) -> Option<Self> {
        let dg = other.degree()?;
        let df = self.degree()?;
        if df < dg {
            return None;
        }
        let mut r = self.coeffs.clone();
        let mut q = vec![Int::zero(); df - dg + 1];
        for qi in (0..q.len()).rev() {
            let lead = r[qi + dg].clone();
            if lead.is_zero() {
                continue;
            }
            let (c, rem) = num_integer::div_rem(lead, other.leading().clone());
            if !rem.is_zero() {
                return None;
            }
            for (i, gc) in other.coeffs.iter().enumerate() {
                r[qi + i] -= &c * gc;
            }
            q[qi] = c;
        }
        if r.iter().all(|c| c.is_zero()) {
            Some(IntPoly::from_coeffs(q))
        } else {
            None
        }
    }
}

fn int_sign(v: &Int) -> i32 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Signed remainder sequence of `p` and `p'`, content-stripped.
#[derive(Debug, Clone)]
pub struct SturmChain {
    polys: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: IntPoly) -> Self {
        let mut polys = Vec::new();
        if p.is_zero() {
            return SturmChain { polys };
        }
        let dp = p.derivative().primitive();
        polys.push(p);
        if dp.is_zero() {
            return SturmChain { polys };
        }
        polys.push(dp);
        loop {
            let k = polys.len();
            let rem = polys[k - 2].pseudo_rem_abs(&polys[k - 1]);
            if rem.is_zero() {
                break;
            }
            let mut next = rem.primitive();
            for c in &mut next.coeffs {
                *c = -c.clone();
            }
            polys.push(next);
        }
        SturmChain { polys }
    }

    pub fn polys(&self) -> &[IntPoly] {
        &self.polys
    }

    /// Squarefree input leaves a nonzero constant at the end of the chain.
    pub fn squarefree(&self) -> bool {
        match self.polys.last() {
            Some(last) => last.degree() == Some(0),
            None => true,
        }
    }

    /// The last chain element is (a positive multiple of) `gcd(p, p')`.
    pub fn gcd_part(&self) -> Option<&IntPoly> {
        self.polys.last()
    }

    fn variations<F: Fn(&IntPoly) -> i32>(&self, sign_of: F) -> usize {
        let mut count = 0;
        let mut prev = 0;
        for p in &self.polys {
            let s = sign_of(p);
            if s == 0 {
                continue;
            }
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
        count
    }

    fn variations_at(&self, x: &Rational) -> usize {
        self.variations(|p| p.sign_at_rational(x))
    }

    /// Number of distinct real roots in `(a, b]`; requires `p(a), p(b) != 0`.
    fn count_between(&self, a: &Rational, b: &Rational) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }

    /// Number of distinct real roots.
    pub fn count_all_real(&self) -> usize {
        self.variations(|p| p.sign_at_neg_inf()) - self.variations(|p| p.sign_at_pos_inf())
    }
}

/// Exact number of distinct real roots of `p` in `(a, b]`.
///
/// If an endpoint happens to be a root, it is shifted up by `2^-64`
/// (repeatedly, at most 64 times) so that the half-open counting
/// convention is preserved; the Xi/Lambda families never need this, but
/// synthetic inputs with rational roots do.
pub fn sturm_count(
    p: &AdaptedPolynomial,
    a: &Rational,
    b: &Rational,
) -> Result<usize, RootError> {
    if a >= b {
        return Err(RootError::InvalidInterval);
    }
    let ip = IntPoly::from_rationals(&p.coeffs);
    if ip.degree().unwrap_or(0) == 0 {
        return Ok(0);
    }
    let chain = SturmChain::new(ip.clone());
    let a = shift_off_root(&ip, a.clone())?;
    let b = shift_off_root(&ip, b.clone())?;
    if a >= b {
        return Err(RootError::InvalidInterval);
    }
    Ok(chain.count_between(&a, &b))
}

/// Endpoint-shift rule: move up by `2^-64` until off the root set.
fn shift_off_root(p: &IntPoly, mut x: Rational) -> Result<Rational, RootError> {
    let step = Rational::new(Int::one(), Int::one() << 64usize);
    let mut tries = 0;
    while p.sign_at_rational(&x) == 0 {
        x += &step;
        tries += 1;
        if tries > 64 {
            return Err(RootError::EndpointShiftExhausted);
        }
    }
    Ok(x)
}

/// One isolating interval `(lo, hi]`: exactly one distinct root inside,
/// endpoints never roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatingInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl IsolatingInterval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

/// Serializable view of an isolating interval.
#[derive(Debug, Clone, Serialize)]
pub struct IntervalReport {
    pub lo: String,
    pub hi: String,
    pub lo_decimal: String,
    pub hi_decimal: String,
    /// Sign-variation drop across the interval (always one root).
    pub sign_change_count_delta: u32,
}

/// Root isolation outcome for one adapted polynomial, carrying the chain
/// so intervals can be refined further.
#[derive(Debug, Clone)]
pub struct RootIsolation {
    pub family: Family,
    pub n: u32,
    poly: IntPoly,
    chain: SturmChain,
    pub intervals: Vec<IsolatingInterval>,
    pub all_real: bool,
    pub all_simple: bool,
    pub all_in_unit: bool,
    pub largest_root_bound_ok: bool,
}

/// Serializable root report.
#[derive(Debug, Clone, Serialize)]
pub struct RootReport {
    pub family: String,
    pub n: u32,
    pub intervals: Vec<IntervalReport>,
    pub all_real: bool,
    pub all_simple: bool,
    pub all_in_unit: bool,
    pub largest_root_bound_ok: bool,
}

impl RootIsolation {
    pub fn report(&self, digits: usize) -> RootReport {
        RootReport {
            family: String::from(self.family.as_str()),
            n: self.n,
            intervals: self
                .intervals
                .iter()
                .map(|iv| IntervalReport {
                    lo: rational_string(&iv.lo),
                    hi: rational_string(&iv.hi),
                    lo_decimal: decimal_string(&iv.lo, digits),
                    hi_decimal: decimal_string(&iv.hi, digits),
                    sign_change_count_delta: 1,
                })
                .collect(),
            all_real: self.all_real,
            all_simple: self.all_simple,
            all_in_unit: self.all_in_unit,
            largest_root_bound_ok: self.largest_root_bound_ok,
        }
    }

    /// Bisect interval `idx` until its width is at most `width`.
    pub fn refine_interval(&mut self, idx: usize, width: &Rational) -> Result<(), RootError> {
        let iv = self.intervals[idx].clone();
        let refined = bisect_to_width(&self.poly, &self.chain, iv, width)?;
        self.intervals[idx] = refined;
        Ok(())
    }
}

fn bisect_to_width(
    poly: &IntPoly,
    chain: &SturmChain,
    mut iv: IsolatingInterval,
    width: &Rational,
) -> Result<IsolatingInterval, RootError> {
    let depth_limit = Rational::new(Int::one(), Int::one() << 512usize);
    while iv.width() > *width {
        if iv.width() < depth_limit {
            return Err(RootError::RefinementExhausted);
        }
        let mut mid = (&iv.lo + &iv.hi) / Rational::from_integer(Int::from(2));
        let nudge = iv.width() / Rational::from_integer(Int::one() << 64usize);
        let mut tries = 0;
        while poly.sign_at_rational(&mid) == 0 {
            mid += &nudge;
            tries += 1;
            if tries > 64 {
                return Err(RootError::EndpointShiftExhausted);
            }
        }
        if chain.count_between(&iv.lo, &mid) == 1 {
            iv.hi = mid;
        } else {
            iv.lo = mid;
        }
    }
    Ok(iv)
}

/// Isolates all real roots of an adapted polynomial.
///
/// Flags: `all_real` holds iff the number of distinct real roots equals the
/// degree; `all_simple` iff `gcd(p, p')` is constant; `all_in_unit` iff the
/// count in `(0,1)` equals the degree. A non-squarefree input (which would
/// contradict the underlying theorems for `n >= 2`) is flagged, not a
/// crash: isolation proceeds on the squarefree part.
pub fn isolate_all(p: &AdaptedPolynomial, width: &Rational) -> Result<RootIsolation, RootError> {
    assert!(width.is_positive(), "isolation width must be positive");
    let ip = IntPoly::from_rationals(&p.coeffs);
    let deg = ip.degree().unwrap_or(0);

    if deg == 0 {
        return Ok(RootIsolation {
            family: p.family,
            n: p.n,
            chain: SturmChain::new(ip.clone()),
            poly: ip,
            intervals: Vec::new(),
            all_real: true,
            all_simple: true,
            all_in_unit: true,
            largest_root_bound_ok: true,
        });
    }

    let chain = SturmChain::new(ip.clone());
    let all_simple = chain.squarefree();

    // Work on the squarefree part so Sturm counting stays valid.
    let (work_poly, work_chain) = if all_simple {
        (ip.clone(), chain)
    } else {
        let gcd = chain.gcd_part().expect("nonzero chain").clone();
        let sqfree = ip
            .div_exact(&gcd.primitive())
            .expect("gcd divides p")
            .primitive();
        let ch = SturmChain::new(sqfree.clone());
        (sqfree, ch)
    };

    let distinct = work_chain.count_all_real();
    let all_real = distinct == deg;

    let zero = Rational::zero();
    let one = Rational::one();
    let lo1 = shift_off_root(&work_poly, zero)?;
    let hi1 = shift_off_root(&work_poly, one.clone())?;
    let in_unit = work_chain.count_between(&lo1, &hi1);
    let all_in_unit = in_unit == deg;

    // Isolation window: (0,1) when everything lives there, otherwise a
    // dyadic Cauchy bound.
    let (lo, hi) = if all_in_unit {
        (lo1, hi1)
    } else {
        let m = cauchy_bound_pow2(&work_poly);
        (-m.clone(), m)
    };

    let mut intervals = Vec::new();
    let total = work_chain.count_between(&lo, &hi);
    let mut stack = vec![(lo, hi, total)];
    while let Some((a, b, count)) = stack.pop() {
        if count == 0 {
            continue;
        }
        let iv = IsolatingInterval { lo: a.clone(), hi: b.clone() };
        if count == 1 {
            intervals.push(bisect_to_width(&work_poly, &work_chain, iv, width)?);
            continue;
        }
        let mut mid = (&a + &b) / Rational::from_integer(Int::from(2));
        let nudge = iv.width() / Rational::from_integer(Int::one() << 64usize);
        let mut tries = 0;
        while work_poly.sign_at_rational(&mid) == 0 {
            mid += &nudge;
            tries += 1;
            if tries > 64 {
                return Err(RootError::EndpointShiftExhausted);
            }
        }
        let left = work_chain.count_between(&a, &mid);
        stack.push((a, mid.clone(), left));
        stack.push((mid, b, count - left));
    }
    intervals.sort_by(|x, y| x.lo.cmp(&y.lo));

    // Quantitative endpoint bound at a = 1, checked in exact arithmetic
    // from the isolating interval's upper endpoint: a certified violation
    // would need (1 - hi_last)^deg > |p(1)/lc| already (the bound is an
    // exact equality at degree one, so the lower endpoint can never
    // decide).
    let largest_root_bound_ok = if all_in_unit && !intervals.is_empty() {
        let pa = work_poly.eval(&one);
        if pa.is_zero() {
            false
        } else {
            let ratio = (pa / Rational::from_integer(work_poly.leading().clone())).abs();
            let hi_last = &intervals.last().unwrap().hi;
            let gap = one - hi_last;
            gap.pow(deg as i32) <= ratio
        }
    } else {
        false
    };

    Ok(RootIsolation {
        family: p.family,
        n: p.n,
        poly: work_poly,
        chain: work_chain,
        intervals,
        all_real,
        all_simple,
        all_in_unit,
        largest_root_bound_ok,
    })
}

/// Smallest power of two strictly above the Cauchy root bound
/// `1 + max |c_i| / |lc|`.
fn cauchy_bound_pow2(p: &IntPoly) -> Rational {
    let lc = Rational::from_integer(p.leading().abs());
    let mut max = Rational::zero();
    for c in p.coeffs() {
        let q = Rational::from_integer(c.abs()) / &lc;
        if q > max {
            max = q;
        }
    }
    let bound = Rational::one() + max;
    let mut m = Rational::one();
    let two = Rational::from_integer(Int::from(2));
    while m <= bound {
        m *= &two;
    }
    m
}

/// Decides `root(a) < root(b)` from isolating intervals, or `None` when the
/// intervals overlap.
fn certainly_less(a: &IsolatingInterval, b: &IsolatingInterval) -> Option<bool> {
    if a.hi <= b.lo {
        Some(true)
    } else if b.hi <= a.lo {
        Some(false)
    } else {
        None
    }
}

/// Strict interlacing: between consecutive roots of `larger` lies exactly
/// one root of `smaller`. `smaller` must have one root fewer. Intervals are
/// auto-refined (down to width `2^-512`) until every comparison is decided.
pub fn check_interlacing(
    smaller: &mut RootIsolation,
    larger: &mut RootIsolation,
) -> Result<bool, RootError> {
    if smaller.intervals.len() + 1 != larger.intervals.len() {
        return Err(RootError::RootCountMismatch);
    }
    if smaller.intervals.is_empty() {
        return Ok(true);
    }
    // Required order: q_0 < p_0 < q_1 < p_1 < ... < q_{n-1}.
    for i in 0..smaller.intervals.len() {
        // q_i < p_i
        if !decide_pair(larger, i, smaller, i)? {
            return Ok(false);
        }
        // p_i < q_{i+1}
        if !decide_pair(smaller, i, larger, i + 1)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn decide_pair(
    x: &mut RootIsolation,
    xi: usize,
    y: &mut RootIsolation,
    yi: usize,
) -> Result<bool, RootError> {
    loop {
        if let Some(v) = certainly_less(&x.intervals[xi], &y.intervals[yi]) {
            return Ok(v);
        }
        let wx = x.intervals[xi].width();
        let wy = y.intervals[yi].width();
        let limit = Rational::new(Int::one(), Int::one() << 512usize);
        if wx < limit && wy < limit {
            return Err(RootError::RefinementExhausted);
        }
        let half_x = wx / Rational::from_integer(Int::from(2));
        let half_y = wy / Rational::from_integer(Int::from(2));
        x.refine_interval(xi, &half_x)?;
        y.refine_interval(yi, &half_y)?;
    }
}

/// `|p(a) / lc(p)|^(1/deg p)` as a float at the requested precision.
pub fn endpoint_ratio_bound(
    p: &AdaptedPolynomial,
    a: &Rational,
    _side: EndpointSide,
    precision: usize,
) -> Result<BigFloat, RootError> {
    let deg = p.degree() as usize;
    if deg < 1 {
        return Err(RootError::DegreeTooSmall);
    }
    let pa = p.eval_y(a);
    if pa.is_zero() {
        return Err(RootError::EndpointIsRoot);
    }
    let ratio = (pa / p.leading()).abs();
    let mut ctx = FloatCtx::new(precision);
    let x = ctx.from_rational(&ratio);
    Ok(ctx.root(&x, deg))
}

/// Exact closed form of the ratio `|ptilde(1)/lc|` for each family:
/// `1/(2n-1)!` for Xi and `2^(2n-1)/(2n)!` for Lambda.
pub fn endpoint_ratio_exact(family: Family, n: u32) -> Rational {
    match family {
        Family::Xi => Rational::new(Int::one(), factorial(2 * n as u64 - 1)),
        Family::Lambda => Rational::new(pow2(2 * n as u64 - 1), factorial(2 * n as u64)),
    }
}

/// Verification fragment for the extremal-zero program: the quantitative
/// endpoint bound (pass/fail), the exact monotonicity of the bound
/// sequences over n = 2..30 (pass/fail), and the observed trends of the
/// extremal zeros (info; these cover limit statements that desk scale
/// cannot prove).
pub fn extremal_zero_checks(n_max: u32) -> Result<Vec<Check>, RootError> {
    assert!(n_max >= 3, "n_max must be at least 3");
    let width = Rational::new(Int::one(), Int::one() << 80usize);
    let mut out = Vec::new();

    let mut isolations: Vec<(Family, Vec<RootIsolation>)> = Vec::new();
    for family in Family::ALL {
        let mut per_n = Vec::new();
        for n in 2..=n_max {
            let iso = isolate_all(&crate::poly::build(family, n).adapted(), &width)?;
            out.push(
                Check::verdict("endpoint-bound", iso.largest_root_bound_ok)
                    .family(family.as_str())
                    .n(n),
            );
            per_n.push(iso);
        }
        isolations.push((family, per_n));
    }

    // Bound sequences decrease strictly over 2..=30: exact cross-multiplied
    // integer comparisons, no roots taken.
    let mut xi_dec = true;
    let mut la_dec = true;
    for n in 2u64..30 {
        // Xi: ((2n-1)!)^(-1/(n-1)) decreasing <=> ((2n+1)!)^(n-1) > ((2n-1)!)^n
        let lhs = factorial(2 * n + 1).pow((n - 1) as u32);
        let rhs = factorial(2 * n - 1).pow(n as u32);
        if lhs <= rhs {
            xi_dec = false;
        }
        // Lambda: (2^(2n-1)/(2n)!)^(1/(n-1)) decreasing <=>
        // (2^(2n+1))^(n-1) ((2n)!)^n < (2^(2n-1))^n ((2n+2)!)^(n-1)
        let lhs = pow2(2 * n + 1).pow((n - 1) as u32) * factorial(2 * n).pow(n as u32);
        let rhs = pow2(2 * n - 1).pow(n as u32) * factorial(2 * n + 2).pow((n - 1) as u32);
        if lhs >= rhs {
            la_dec = false;
        }
    }
    out.push(Check::verdict("bound-sequence-decreasing", xi_dec).family("xi"));
    out.push(Check::verdict("bound-sequence-decreasing", la_dec).family("lambda"));

    // Observed extremal-zero trends (info: trend evidence for the limit
    // statements and the smallest-zero conjecture).
    for (family, per_n) in &isolations {
        out.push(trend_check(
            "largest-zero-increasing",
            family.as_str(),
            per_n,
            |iso| iso.intervals.last().cloned(),
            false,
        ));
        out.push(trend_check(
            "smallest-zero-decreasing",
            family.as_str(),
            per_n,
            |iso| iso.intervals.first().cloned(),
            true,
        ));
    }
    Ok(out)
}

fn trend_check(
    name: &str,
    family: &str,
    per_n: &[RootIsolation],
    pick: impl Fn(&RootIsolation) -> Option<IsolatingInterval>,
    decreasing: bool,
) -> Check {
    let mut holds = true;
    let mut decided = true;
    for w in per_n.windows(2) {
        let (a, b) = match (pick(&w[0]), pick(&w[1])) {
            (Some(a), Some(b)) => (a, b),
            _ => continue,
        };
        let cmp = if decreasing {
            certainly_less(&b, &a)
        } else {
            certainly_less(&a, &b)
        };
        match cmp {
            Some(true) => {}
            Some(false) => holds = false,
            None => decided = false,
        }
    }
    let observation = if !decided {
        "undecided-at-current-width"
    } else if holds {
        if decreasing {
            "strictly-decreasing"
        } else {
            "strictly-increasing"
        }
    } else {
        "not-monotone"
    };
    Check::info(name)
        .family(family)
        .numeric(String::from(observation))
}

/// Interlacing checks for consecutive indices `n, n+1` over
/// `2 <= n <= n_max - 1`, both families.
pub fn interlacing_checks(n_max: u32, width: &Rational) -> Result<Vec<Check>, RootError> {
    let mut out = Vec::new();
    if n_max < 3 {
        return Ok(out);
    }
    for family in Family::ALL {
        let mut prev = isolate_all(&crate::poly::build(family, 2).adapted(), width)?;
        for n in 3..=n_max {
            let mut cur = isolate_all(&crate::poly::build(family, n).adapted(), width)?;
            let ok = check_interlacing(&mut prev, &mut cur)?;
            out.push(
                Check::verdict("interlacing", ok)
                    .family(family.as_str())
                    .n(n - 1),
            );
            prev = cur;
        }
    }
    Ok(out)
}

/// Root-suite fragment for criterion-style verification at one `n`:
/// distinct-root count, squarefreeness, unit-interval location, the
/// endpoint bound, and the root count of the even polynomial itself.
pub fn root_checks(family: Family, n: u32, width: &Rational) -> Result<Vec<Check>, RootError> {
    let p = crate::poly::build(family, n);
    let iso = isolate_all(&p.adapted(), width)?;
    let fam = family.as_str();
    let deg = (n - 1) as usize;
    let mut out = vec![
        Check::verdict("adapted-root-count", iso.intervals.len() == deg)
            .family(fam)
            .n(n),
        Check::verdict("all-real", iso.all_real).family(fam).n(n),
        Check::verdict("squarefree", iso.all_simple).family(fam).n(n),
        Check::verdict("all-in-unit", iso.all_in_unit).family(fam).n(n),
        Check::verdict("endpoint-bound", n == 1 || iso.largest_root_bound_ok)
            .family(fam)
            .n(n),
    ];

    // The even polynomial itself carries the root pairs +-sqrt(y): count on
    // (-1, 1) must be 2(n-1).
    let even_as_adapted = AdaptedPolynomial {
        family,
        n: 2 * n - 1,
        coeffs: even_coeff_spread(&p),
    };
    let lo = Rational::from_integer(Int::from(-1));
    let hi = Rational::one();
    let count = sturm_count(&even_as_adapted, &lo, &hi)?;
    out.push(
        Check::verdict("even-poly-root-pairs", count == 2 * deg)
            .family(fam)
            .n(n),
    );
    Ok(out)
}

// The even polynomial in x, laid out densely (odd coefficients zero) so the
// generic machinery can run on it.
fn even_coeff_spread(p: &crate::poly::EvenPolynomial) -> Vec<Rational> {
    let mut coeffs = vec![Rational::zero(); 2 * p.n as usize - 1];
    for (t, c) in p.coeffs().iter().enumerate() {
        coeffs[2 * t] = c.clone();
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use crate::poly::{build, Family};
    use crate::report::Status;

    fn adapted_from(coeffs: Vec<Rational>) -> AdaptedPolynomial {
        let n = coeffs.len() as u32;
        AdaptedPolynomial {
            family: Family::Lambda,
            n,
            coeffs,
        }
    }

    fn default_width() -> Rational {
        Rational::new(Int::one(), Int::one() << 80usize)
    }

    #[test]
    fn sturm_counts_linear() {
        // y - 1/2 on (0,1): one root.
        let p = adapted_from(vec![ratio(-1, 2), Rational::one()]);
        assert_eq!(
            sturm_count(&p, &Rational::zero(), &Rational::one()).unwrap(),
            1
        );
        assert_eq!(
            sturm_count(&p, &ratio(3, 5), &Rational::one()).unwrap(),
            0
        );
    }

    #[test]
    fn sturm_count_rejects_bad_interval() {
        let p = adapted_from(vec![ratio(-1, 2), Rational::one()]);
        assert!(matches!(
            sturm_count(&p, &Rational::one(), &Rational::zero()),
            Err(RootError::InvalidInterval)
        ));
    }

    #[test]
    fn sturm_count_shifts_root_endpoints() {
        // Root at 1/2; counting from the root endpoint shifts it up, so the
        // root is excluded on the left and included on the right.
        let p = adapted_from(vec![ratio(-1, 2), Rational::one()]);
        assert_eq!(sturm_count(&p, &ratio(1, 2), &Rational::one()).unwrap(), 0);
        assert_eq!(sturm_count(&p, &Rational::zero(), &ratio(1, 2)).unwrap(), 1);
    }

    #[test]
    fn endpoint_shift_retries_past_adjacent_roots() {
        // Roots at 1/2 and 1/2 + 2^-64: counting from a = 1/2 must shift
        // twice, landing past both; the documented rule then excludes the
        // second root as well.
        let step = Rational::new(Int::one(), Int::one() << 64usize);
        let r1 = ratio(1, 2);
        let r2 = &r1 + &step;
        let p = adapted_from(vec![
            &r1 * &r2,
            -(&r1 + &r2),
            Rational::one(),
        ]);
        assert_eq!(sturm_count(&p, &r1, &Rational::one()).unwrap(), 0);
        assert_eq!(
            sturm_count(&p, &Rational::zero(), &Rational::one()).unwrap(),
            2
        );
    }

    #[test]
    fn chain_head_is_scaled_p_and_derivative() {
        // First two chain entries are positive scalar multiples of p and
        // p', so cross-multiplied coefficients agree.
        let p = build(Family::Lambda, 4).adapted();
        let ip = IntPoly::from_rationals(&p.coeffs);
        let chain = SturmChain::new(ip.clone());
        let polys = chain.polys();
        assert_eq!(polys[0], ip);
        let dp = ip.derivative();
        let (a, b) = (&polys[1], &dp);
        assert_eq!(a.degree(), b.degree());
        for (ca, cb) in a.coeffs().iter().zip(b.coeffs()) {
            assert_eq!(ca * b.leading(), cb * a.leading());
        }
        assert!(int_sign(a.leading()) == int_sign(b.leading()));
    }

    #[test]
    fn sturm_counts_quadratic_with_known_roots() {
        // (y - 1/4)(y - 3/4) = y^2 - y + 3/16.
        let p = adapted_from(vec![ratio(3, 16), ratio(-1, 1), Rational::one()]);
        assert_eq!(
            sturm_count(&p, &Rational::zero(), &Rational::one()).unwrap(),
            2
        );
        assert_eq!(
            sturm_count(&p, &Rational::zero(), &ratio(1, 2)).unwrap(),
            1
        );
        let iso = isolate_all(&p, &default_width()).unwrap();
        assert_eq!(iso.intervals.len(), 2);
        assert!(iso.all_real && iso.all_simple && iso.all_in_unit);
        // Roots 1/4 and 3/4 inside their intervals.
        assert!(iso.intervals[0].lo < ratio(1, 4) && ratio(1, 4) <= iso.intervals[0].hi);
        assert!(iso.intervals[1].lo < ratio(3, 4) && ratio(3, 4) <= iso.intervals[1].hi);
    }

    #[test]
    fn non_squarefree_is_flagged_not_crashed() {
        // (y - 1/2)^2 = y^2 - y + 1/4.
        let p = adapted_from(vec![ratio(1, 4), ratio(-1, 1), Rational::one()]);
        let iso = isolate_all(&p, &default_width()).unwrap();
        assert!(!iso.all_simple);
        assert!(!iso.all_real); // one distinct root, degree two
        assert_eq!(iso.intervals.len(), 1);
    }

    #[test]
    fn roots_outside_unit_interval_detected() {
        // (y - 2)(y + 1) = y^2 - y - 2.
        let p = adapted_from(vec![ratio(-2, 1), ratio(-1, 1), Rational::one()]);
        let iso = isolate_all(&p, &default_width()).unwrap();
        assert!(iso.all_real && iso.all_simple && !iso.all_in_unit);
        assert_eq!(iso.intervals.len(), 2);
    }

    #[test]
    fn constant_polynomial_has_no_roots() {
        let p = build(Family::Xi, 1).adapted();
        let iso = isolate_all(&p, &default_width()).unwrap();
        assert!(iso.intervals.is_empty());
        assert!(iso.all_real && iso.all_simple && iso.all_in_unit);
    }

    #[test]
    fn adapted_lambda2_has_one_root_in_unit() {
        let p = build(Family::Lambda, 2).adapted();
        assert_eq!(
            sturm_count(&p, &Rational::zero(), &Rational::one()).unwrap(),
            1
        );
        let iso = isolate_all(&p, &default_width()).unwrap();
        assert_eq!(iso.intervals.len(), 1);
        assert!(iso.all_in_unit);
    }

    #[test]
    fn adapted_xi5_has_four_roots_in_unit() {
        let p = build(Family::Xi, 5).adapted();
        assert_eq!(
            sturm_count(&p, &Rational::zero(), &Rational::one()).unwrap(),
            4
        );
    }

    #[test]
    fn paper_polynomials_fully_verified_small_range() {
        let width = default_width();
        for family in Family::ALL {
            for n in 2..=6u32 {
                let iso = isolate_all(&build(family, n).adapted(), &width).unwrap();
                assert_eq!(iso.intervals.len(), (n - 1) as usize, "{family} n={n}");
                assert!(iso.all_real && iso.all_simple && iso.all_in_unit);
                assert!(iso.largest_root_bound_ok);
            }
        }
    }

    #[test]
    fn interlacing_consecutive_indices() {
        let width = default_width();
        for family in Family::ALL {
            for n in 2..=5u32 {
                let mut a = isolate_all(&build(family, n).adapted(), &width).unwrap();
                let mut b = isolate_all(&build(family, n + 1).adapted(), &width).unwrap();
                assert!(
                    check_interlacing(&mut a, &mut b).unwrap(),
                    "{family} n={n}"
                );
            }
        }
    }

    #[test]
    fn interlacing_vacuous_for_constant() {
        let width = default_width();
        let mut a = isolate_all(&build(Family::Lambda, 1).adapted(), &width).unwrap();
        let mut b = isolate_all(&build(Family::Lambda, 2).adapted(), &width).unwrap();
        assert!(check_interlacing(&mut a, &mut b).unwrap());
    }

    #[test]
    fn interlacing_detects_failure() {
        // p = y - 1/8 does not interlace q = (y-1/2)(y-3/4): both roots of
        // q sit above the single root of p.
        let width = default_width();
        let mut p = isolate_all(
            &adapted_from(vec![ratio(-1, 8), Rational::one()]),
            &width,
        )
        .unwrap();
        let mut q = isolate_all(
            &adapted_from(vec![ratio(3, 8), ratio(-5, 4), Rational::one()]),
            &width,
        )
        .unwrap();
        assert!(!check_interlacing(&mut p, &mut q).unwrap());
    }

    #[test]
    fn interlacing_rejects_wrong_sizes() {
        let width = default_width();
        let mut a = isolate_all(&build(Family::Xi, 2).adapted(), &width).unwrap();
        let mut b = isolate_all(&build(Family::Xi, 4).adapted(), &width).unwrap();
        assert!(matches!(
            check_interlacing(&mut a, &mut b),
            Err(RootError::RootCountMismatch)
        ));
    }

    #[test]
    fn endpoint_ratio_linear_case() {
        // p = y - 1/2 at a = 1: |1/2|^1 = 1/2.
        let p = adapted_from(vec![ratio(-1, 2), Rational::one()]);
        let b = endpoint_ratio_bound(&p, &Rational::one(), EndpointSide::Right, 96).unwrap();
        let r = crate::bigfloat::to_rational(&b).unwrap();
        assert!((r - ratio(1, 2)).abs() < ratio(1, 2).pow(90));
    }

    #[test]
    fn endpoint_ratio_closed_forms() {
        // Xi: ((2n-1)!)^(-1/(n-1)); n=2 gives 1/6. Lambda: (2^(2n-1)/(2n)!)^(1/(n-1)); n=2 gives 1/3.
        for (family, expect) in [(Family::Xi, ratio(1, 6)), (Family::Lambda, ratio(1, 3))] {
            let p = build(family, 2).adapted();
            let b = endpoint_ratio_bound(&p, &Rational::one(), EndpointSide::Right, 96).unwrap();
            let r = crate::bigfloat::to_rational(&b).unwrap();
            assert!(
                (r - expect.clone()).abs() < ratio(1, 2).pow(90),
                "{family}"
            );
            assert_eq!(endpoint_ratio_exact(family, 2), expect);
        }
        // Ratio |ptilde(1)/lc| matches the closed form for larger n.
        for family in Family::ALL {
            for n in 2..=8u32 {
                let p = build(family, n).adapted();
                let ratio_exact = (p.eval_y(&Rational::one()) / p.leading()).abs();
                assert_eq!(ratio_exact, endpoint_ratio_exact(family, n), "{family} n={n}");
            }
        }
    }

    #[test]
    fn endpoint_ratio_left_side_mirror() {
        // p = (y - 1/2)(y - 3/4) at a = 0 bounds the smallest root from
        // below: |p(0)/lc|^(1/2) = (3/8)^(1/2), and r_min - 0 = 1/2 <= that.
        let p = adapted_from(vec![ratio(3, 8), ratio(-5, 4), Rational::one()]);
        let b = endpoint_ratio_bound(&p, &Rational::zero(), EndpointSide::Left, 96).unwrap();
        let r = crate::bigfloat::to_rational(&b).unwrap();
        // (3/8)^(1/2) = 0.61237...
        assert!(&r * &r - ratio(3, 8) < ratio(1, 2).pow(80));
        assert!(r > ratio(1, 2));
    }

    #[test]
    fn endpoint_ratio_errors() {
        let constant = build(Family::Xi, 1).adapted();
        assert!(matches!(
            endpoint_ratio_bound(&constant, &Rational::one(), EndpointSide::Right, 64),
            Err(RootError::DegreeTooSmall)
        ));
        let p = adapted_from(vec![ratio(-1, 2), Rational::one()]);
        assert!(matches!(
            endpoint_ratio_bound(&p, &ratio(1, 2), EndpointSide::Left, 64),
            Err(RootError::EndpointIsRoot)
        ));
    }

    #[test]
    fn extremal_checks_pass() {
        let checks = extremal_zero_checks(5).unwrap();
        for c in &checks {
            assert_ne!(c.status, Status::Fail, "{} ({:?})", c.name, c.family);
        }
        // Trend observations are info, not pass.
        assert!(checks.iter().any(|c| c.status == Status::Info));
    }

    #[test]
    fn root_checks_pass_small() {
        let width = default_width();
        for family in Family::ALL {
            for n in 2..=5u32 {
                for c in root_checks(family, n, &width).unwrap() {
                    assert_ne!(c.status, Status::Fail, "{} {family} n={n}", c.name);
                }
            }
        }
    }
}
