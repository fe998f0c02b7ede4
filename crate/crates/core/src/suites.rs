//! Assembly of the named verification suites from the per-module check
//! generators. The CLI runs the same compositions (optionally fanning the
//! per-index work out to a thread pool) and the acceptance tests pin their
//! criteria to them.


use crate::exact::{Int, Rational};
use crate::poly;
use crate::quad;
use crate::report::{Check, SuiteReport};
use crate::roots;
use crate::special;

use num_traits::One;

/// Default per-suite index caps.
pub const STRUCTURAL_CAP: u32 = 12;
pub const ROOTS_CAP: u32 = 10;
pub const INTEGRAL_CAP: u32 = 6;

/// Default isolation width `2^-80`.
pub fn default_width() -> Rational {
    Rational::new(Int::one(), Int::one() << 80usize)
}

/// Exact structural suite over `n = 1..=n_max`, both families.
pub fn structural_suite(n_max: u32) -> SuiteReport {
    let mut suite = SuiteReport::new("structural");
    for n in 1..=n_max {
        suite.extend(poly::structural_checks(n));
    }
    suite
}

/// Eulerian identity suite (fixed desk-scale ranges).
pub fn eulerian_suite() -> SuiteReport {
    let mut suite = SuiteReport::new("eulerian");
    suite.extend(special::eulerian_checks());
    suite
}

/// Root suite over `n = 2..=n_max`: isolation flags, interlacing between
/// consecutive indices, and the extremal-zero program.
pub fn roots_suite(n_max: u32) -> SuiteReport {
    let mut suite = SuiteReport::new("roots");
    let width = default_width();
    for n in 2..=n_max {
        for family in poly::Family::ALL {
            match roots::root_checks(family, n, &width) {
                Ok(checks) => suite.extend(checks),
                Err(e) => suite.push(fail_check("root-isolation", Some(family), n, &e)),
            }
        }
    }
    match roots::interlacing_checks(n_max, &width) {
        Ok(checks) => suite.extend(checks),
        Err(e) => suite.push(fail_check("interlacing", None, n_max, &e)),
    }
    match roots::extremal_zero_checks(n_max.max(3)) {
        Ok(checks) => suite.extend(checks),
        Err(e) => suite.push(fail_check("extremal-zeros", None, n_max, &e)),
    }
    suite
}

/// Integral suite over `n = 1..=n_max` at `10^-digits` working tolerance,
/// including the reference cross-validation.
pub fn integral_suite(n_max: u32, digits: usize) -> SuiteReport {
    let mut suite = SuiteReport::new("integral");
    suite.extend(quad::reference_checks(n_max, digits));
    suite.extend(quad::integral_checks(n_max, digits));
    suite
}

/// Exact pi-multiple suite over `n = 1..=n_max`.
pub fn pi_multiple_suite(n_max: u32) -> SuiteReport {
    let mut suite = SuiteReport::new("pi_multiple");
    suite.extend(quad::pi_ratio_suite(n_max));
    suite
}

/// Property suite: grid sup bounds and evenness over `n = 1..=n_max`, and
/// the polylog residual checks for `m <= 8`.
pub fn property_suite(n_max: u32) -> SuiteReport {
    let mut suite = SuiteReport::new("property");
    for n in 1..=n_max {
        suite.extend(poly::property_checks(n));
    }
    suite.extend(special::polylog_checks(8, 64));
    suite
}

fn fail_check(
    name: &str,
    family: Option<poly::Family>,
    n: u32,
    err: &dyn core::fmt::Display,
) -> Check {
    use alloc::format;
    let mut c = Check::verdict(name, false).n(n).numeric(format!("{err}"));
    if let Some(f) = family {
        c = c.family(f.as_str());
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn desk_suites_pass_at_small_scale() {
        assert!(structural_suite(4).passed());
        assert!(eulerian_suite().passed());
        assert!(pi_multiple_suite(4).passed());
        assert!(property_suite(3).passed());
        assert!(roots_suite(4).passed());
    }
}
