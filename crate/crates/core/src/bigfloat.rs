//! Arbitrary-precision binary floating point with explicit working
//! precision, backed by `astro-float`.
//!
//! A [`FloatCtx`] owns the constants cache and a working precision that is
//! always at least 32 guard bits above the requested output precision, so
//! a final rounding step delivers faithfully rounded results. No global
//! state is involved; independent contexts can run on different threads.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::{BigInt, Sign as IntSign};
use num_traits::{One, Signed, Zero};

pub use astro_float::{BigFloat, Consts, RoundingMode, Sign};

use crate::exact::{Int, Rational};

// Exact Int <-> mantissa-word conversion below assumes 64-bit words.
const _: () = assert!(core::mem::size_of::<astro_float::Word>() == 8);

/// Guard bits kept above the requested precision for all intermediate work.
pub const GUARD_BITS: usize = 64;

const RM: RoundingMode = RoundingMode::ToEven;

/// Working-precision context: requested precision, guard bits, constant cache.
pub struct FloatCtx {
    requested: usize,
    work: usize,
    cc: Consts,
}

impl FloatCtx {
    /// Context delivering `requested` bits; internal work carries
    /// [`GUARD_BITS`] extra bits.
    pub fn new(requested: usize) -> Self {
        let cc = Consts::new().expect("constants cache allocation");
        FloatCtx {
            requested,
            work: requested + GUARD_BITS,
            cc,
        }
    }

    pub fn requested(&self) -> usize {
        self.requested
    }

    /// Working precision in bits.
    pub fn prec(&self) -> usize {
        self.work
    }

    pub fn zero(&self) -> BigFloat {
        BigFloat::new(self.work)
    }

    pub fn from_u64(&self, v: u64) -> BigFloat {
        BigFloat::from_u64(v, self.work)
    }

    pub fn from_i64(&self, v: i64) -> BigFloat {
        BigFloat::from_i64(v, self.work)
    }

    /// Exact conversion of a big integer (never rounds).
    pub fn from_int(&self, v: &Int) -> BigFloat {
        int_to_bigfloat(v)
    }

    /// Rational to float, correctly rounded at working precision.
    pub fn from_rational(&self, r: &Rational) -> BigFloat {
        let num = int_to_bigfloat(r.numer());
        let den = int_to_bigfloat(r.denom());
        num.div(&den, self.work, RM)
    }

    pub fn pi(&mut self) -> BigFloat {
        self.cc.pi(self.work, RM)
    }

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.work, RM)
    }

    pub fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.work, RM)
    }

    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.work, RM)
    }

    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.work, RM)
    }

    pub fn recip(&self, a: &BigFloat) -> BigFloat {
        a.reciprocal(self.work, RM)
    }

    pub fn powi(&self, a: &BigFloat, n: usize) -> BigFloat {
        a.powi(n, self.work, RM)
    }

    pub fn exp(&mut self, a: &BigFloat) -> BigFloat {
        a.exp(self.work, RM, &mut self.cc)
    }

    pub fn ln(&mut self, a: &BigFloat) -> BigFloat {
        a.ln(self.work, RM, &mut self.cc)
    }

    pub fn sqrt(&self, a: &BigFloat) -> BigFloat {
        a.sqrt(self.work, RM)
    }

    /// `1 - exp(-v)` for `v >= 0` without cancellation near `v = 0`.
    pub fn one_minus_exp_neg(&mut self, v: &BigFloat) -> BigFloat {
        debug_assert!(!v.is_negative());
        let half = BigFloat::from_f64(0.5, self.work);
        if v.cmp(&half).map(|c| c >= 0).unwrap_or(true) {
            let e = self.exp(&v.neg());
            return self.sub(&self.from_u64(1), &e);
        }
        // Alternating series v - v^2/2! + v^3/3! - ...; terms shrink by at
        // least a factor of 4 per step, truncation below first omitted term.
        let mut term = v.clone();
        let mut sum = v.clone();
        let mut k = 1u64;
        loop {
            k += 1;
            term = self.mul(&term, v);
            term = self.div(&term, &self.from_u64(k));
            let next = if k.is_multiple_of(2) {
                self.sub(&sum, &term)
            } else {
                self.add(&sum, &term)
            };
            if next.cmp(&sum) == Some(0) || term.is_zero() {
                return next;
            }
            sum = next;
            if k > 10_000 {
                return sum;
            }
        }
    }

    /// `x^(1/d)` for `x > 0`, via `exp(ln x / d)` at working precision,
    /// rounded to the requested precision.
    pub fn root(&mut self, x: &BigFloat, d: usize) -> BigFloat {
        debug_assert!(d >= 1);
        if d == 1 {
            return self.round_to_requested(x.clone());
        }
        let l = self.ln(x);
        let scaled = self.div(&l, &self.from_u64(d as u64));
        let r = self.exp(&scaled);
        self.round_to_requested(r)
    }

    /// Final rounding step from working to requested precision.
    pub fn round_to_requested(&self, mut x: BigFloat) -> BigFloat {
        let _ = x.set_precision(self.requested, RM);
        x
    }

    /// `|a - b|` at working precision.
    pub fn abs_diff(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        self.sub(a, b).abs()
    }

    /// `2^-k` exactly.
    pub fn pow2_neg(&self, k: usize) -> BigFloat {
        let one = self.from_u64(1);
        let mut x = one.clone();
        x.set_exponent(x.exponent().unwrap() - k as i32);
        x
    }
}

/// Exact value of a big integer as a float (no rounding).
pub fn int_to_bigfloat(v: &Int) -> BigFloat {
    if v.is_zero() {
        return BigFloat::new(64);
    }
    let (sign, mag) = v.clone().into_parts();
    let words: Vec<u64> = mag.iter_u64_digits().collect();
    let s = if sign == IntSign::Minus {
        Sign::Neg
    } else {
        Sign::Pos
    };
    let e = (words.len() * 64) as i32;
    BigFloat::from_words(&words, s, e)
}

/// Exact rational value of a finite float.
pub fn to_rational(x: &BigFloat) -> Option<Rational> {
    if x.is_nan() || x.is_inf() {
        return None;
    }
    if x.is_zero() {
        return Some(Rational::zero());
    }
    let (words, _n, sign, e, _inexact) = x.as_raw_parts()?;
    let mut bytes = Vec::with_capacity(words.len() * 8);
    for w in words {
        bytes.extend_from_slice(&w.to_le_bytes());
    }
    let mag = BigInt::from_bytes_le(IntSign::Plus, &bytes);
    let p = (words.len() * 64) as i64;
    let shift = e as i64 - p;
    let mut r = if shift >= 0 {
        Rational::from_integer(mag << shift as usize)
    } else {
        Rational::new(mag, Int::one() << (-shift) as usize)
    };
    if sign == Sign::Neg {
        r = -r;
    }
    Some(r)
}

/// Total order on finite floats (panics on NaN).
pub fn cmp_finite(a: &BigFloat, b: &BigFloat) -> Ordering {
    match a.cmp(b).expect("finite comparison") {
        d if d < 0 => Ordering::Less,
        0 => Ordering::Equal,
        _ => Ordering::Greater,
    }
}

/// Render a rational in decimal with `digits` significant digits.
///
/// Fixed-point form for moderate magnitudes, scientific otherwise; trailing
/// zeros after the decimal point are trimmed. Rounds half away from zero.
pub fn decimal_string(r: &Rational, digits: usize) -> String {
    use alloc::format;
    let digits = digits.max(1);
    if r.is_zero() {
        return String::from("0");
    }
    let neg = r.is_negative();
    let a = r.abs();

    // e10 = floor(log10(a)): initial estimate from digit counts, then adjust.
    let num_digits = a.numer().to_string().len() as i64;
    let den_digits = a.denom().to_string().len() as i64;
    let mut e10 = num_digits - den_digits;
    let pow10 = |k: i64| -> Rational {
        let p = Int::from(10u32).pow(k.unsigned_abs() as u32);
        if k >= 0 {
            Rational::from_integer(p)
        } else {
            Rational::new(Int::one(), p)
        }
    };
    while a < pow10(e10) {
        e10 -= 1;
    }
    while a >= pow10(e10 + 1) {
        e10 += 1;
    }

    // Scale so that the integer part carries `digits` digits, round half up.
    let scaled = &a * pow10(digits as i64 - 1 - e10);
    let rounded = (scaled + Rational::new(Int::one(), Int::from(2))).floor();
    let mut mantissa = rounded.numer().to_string();
    if mantissa.len() > digits {
        // Rounding carried into a new leading digit.
        e10 += 1;
        mantissa.truncate(digits);
    }

    let sign_str = if neg { "-" } else { "" };
    let trim = |s: &str| -> String {
        let t = s.trim_end_matches('0').trim_end_matches('.');
        String::from(if t.is_empty() { "0" } else { t })
    };

    if e10 >= -4 && e10 < digits as i64 + 6 {
        // Fixed-point rendering.
        if e10 >= 0 {
            let ip_len = (e10 as usize + 1).min(mantissa.len());
            let int_part = &mantissa[..ip_len];
            let frac_part = &mantissa[ip_len..];
            let zeros = e10 as usize + 1 - ip_len;
            let mut s = format!("{sign_str}{int_part}");
            for _ in 0..zeros {
                s.push('0');
            }
            if !frac_part.is_empty() && zeros == 0 {
                s.push('.');
                s.push_str(frac_part);
                return trim(&s);
            }
            s
        } else {
            let zeros = (-e10 - 1) as usize;
            let mut s = format!("{sign_str}0.");
            for _ in 0..zeros {
                s.push('0');
            }
            s.push_str(&mantissa);
            trim(&s)
        }
    } else {
        let head = &mantissa[..1];
        let tail = mantissa[1..].trim_end_matches('0');
        if tail.is_empty() {
            format!("{sign_str}{head}e{e10}")
        } else {
            format!("{sign_str}{head}.{tail}e{e10}")
        }
    }
}

/// Decimal rendering of a finite float.
pub fn bigfloat_decimal(x: &BigFloat, digits: usize) -> String {
    match to_rational(x) {
        Some(r) => decimal_string(&r, digits),
        None => String::from("nan"),
    }
}
