//! Command implementations.

use std::fs;

use rayon::prelude::*;

use xilambda_core::exact::{rational_string, Int, Rational};
use xilambda_core::poly::{self, Family, MAX_N};
use xilambda_core::quad;
use xilambda_core::report::{Check, SuiteReport};
use xilambda_core::roots::{check_interlacing, isolate_all};
use xilambda_core::special;
use xilambda_core::suites;

use num_traits::One;

use crate::document::{Coefficient, GenDocument, Meta, ReportDocument, RootsDocument};
use crate::{Cli, FormatArg, SuiteArg};

const RENDER_DIGITS: usize = 30;

pub fn gen(cli: &Cli, family: Family, n: u32, format: FormatArg) -> u8 {
    let p = poly::build(family, n);
    let content = match format {
        FormatArg::Json => {
            let doc = GenDocument {
                meta: Meta::new(!cli.no_timestamp),
                family: family.as_str().to_string(),
                n,
                degree: p.degree(),
                leading: rational_string(p.leading()),
                value_at_0: rational_string(&p.eval(&Rational::from_integer(Int::from(0)))),
                value_at_1: rational_string(&p.eval(&Rational::one())),
                coefficients: poly::coefficient_strings(&p)
                    .into_iter()
                    .map(|(t, num, den)| Coefficient { t, num, den })
                    .collect(),
            };
            match serde_json::to_string_pretty(&doc) {
                Ok(s) => s + "\n",
                Err(e) => {
                    eprintln!("error: {e}");
                    return 3;
                }
            }
        }
        FormatArg::Csv => {
            let mut s = String::new();
            for (t, num, den) in poly::coefficient_strings(&p) {
                s.push_str(&format!("{t},{num},{den}\n"));
            }
            s
        }
    };
    write_output(cli, &content)
}

struct SuitePlan {
    exact_n: Option<u32>,
    roots_n: Option<u32>,
    integral_n: Option<u32>,
}

pub fn verify(
    cli: &Cli,
    suite: SuiteArg,
    n_max: Option<u32>,
    digits: usize,
    force: bool,
    threads: Option<usize>,
) -> u8 {
    if !(4..=50).contains(&digits) {
        eprintln!("error: digits must lie in 4..=50");
        return 2;
    }

    let plan = SuitePlan {
        exact_n: matches!(suite, SuiteArg::Structural | SuiteArg::All)
            .then(|| n_max.unwrap_or(suites::STRUCTURAL_CAP)),
        roots_n: matches!(suite, SuiteArg::Roots | SuiteArg::All)
            .then(|| n_max.unwrap_or(suites::ROOTS_CAP)),
        integral_n: matches!(suite, SuiteArg::Integral | SuiteArg::All)
            .then(|| n_max.unwrap_or(suites::INTEGRAL_CAP)),
    };
    for (n, cap, name) in [
        (plan.exact_n, suites::STRUCTURAL_CAP, "structural"),
        (plan.roots_n, suites::ROOTS_CAP, "roots"),
        (plan.integral_n, suites::INTEGRAL_CAP, "integral"),
    ] {
        if let Some(n) = n {
            if !(1..=MAX_N).contains(&n) {
                eprintln!("error: n-max must lie in 1..={MAX_N}");
                return 2;
            }
            if n > cap && !force {
                eprintln!(
                    "error: n-max {n} exceeds the {name} suite cap {cap}; pass --force to override"
                );
                return 2;
            }
        }
    }

    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        builder = builder.num_threads(t);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return 3;
        }
    };

    let suites = pool.install(|| run_suites(&plan, digits));
    let doc = ReportDocument {
        meta: Meta::new(!cli.no_timestamp),
        suites,
    };
    let passed = doc.passed();
    let content = match serde_json::to_string_pretty(&doc) {
        Ok(s) => s + "\n",
        Err(e) => {
            eprintln!("error: {e}");
            return 3;
        }
    };
    let code = write_output(cli, &content);
    if code != 0 {
        return code;
    }
    if passed {
        0
    } else {
        1
    }
}

/// Runs the selected suites, fanning per-index work out to the pool. The
/// check order matches the sequential compositions in the core crate.
fn run_suites(plan: &SuitePlan, digits: usize) -> Vec<SuiteReport> {
    let mut out = Vec::new();

    if let Some(n_max) = plan.exact_n {
        let mut suite = SuiteReport::new("structural");
        let per_n: Vec<Vec<Check>> = (1..=n_max)
            .into_par_iter()
            .map(poly::structural_checks)
            .collect();
        suite.extend(per_n.into_iter().flatten());
        out.push(suite);

        out.push(suites::eulerian_suite());
        out.push(suites::pi_multiple_suite(n_max));

        let mut suite = SuiteReport::new("property");
        let per_n: Vec<Vec<Check>> = (1..=n_max)
            .into_par_iter()
            .map(poly::property_checks)
            .collect();
        suite.extend(per_n.into_iter().flatten());
        suite.extend(special::polylog_checks(8, 64));
        out.push(suite);
    }

    if let Some(n_max) = plan.roots_n {
        let mut suite = SuiteReport::new("roots");
        let width = suites::default_width();
        let per_n: Vec<Vec<Check>> = (2..=n_max)
            .into_par_iter()
            .map(|n| {
                let mut checks = Vec::new();
                for family in Family::ALL {
                    match xilambda_core::roots::root_checks(family, n, &width) {
                        Ok(cs) => checks.extend(cs),
                        Err(e) => checks.push(
                            Check::verdict("root-isolation", false)
                                .family(family.as_str())
                                .n(n)
                                .numeric(format!("{e}")),
                        ),
                    }
                }
                checks
            })
            .collect();
        suite.extend(per_n.into_iter().flatten());
        match xilambda_core::roots::interlacing_checks(n_max, &width) {
            Ok(cs) => suite.extend(cs),
            Err(e) => suite.push(Check::verdict("interlacing", false).numeric(format!("{e}"))),
        }
        match xilambda_core::roots::extremal_zero_checks(n_max.max(3)) {
            Ok(cs) => suite.extend(cs),
            Err(e) => suite.push(Check::verdict("extremal-zeros", false).numeric(format!("{e}"))),
        }
        out.push(suite);
    }

    if let Some(n_max) = plan.integral_n {
        let mut suite = SuiteReport::new("integral");
        suite.extend(quad::reference_checks(n_max, digits));
        let per_n: Vec<Vec<Check>> = (1..=n_max)
            .into_par_iter()
            .map(|n| quad::integral_checks_for_n(n, digits))
            .collect();
        suite.extend(per_n.into_iter().flatten());
        out.push(suite);
    }

    out
}

pub fn roots(cli: &Cli, family: Family, n: u32, width_bits: u32) -> u8 {
    let width = Rational::new(Int::one(), Int::one() << width_bits as usize);
    let adapted = poly::build(family, n).adapted();
    let iso = match isolate_all(&adapted, &width) {
        Ok(iso) => iso,
        Err(e) => {
            eprintln!("error: {e}");
            return 3;
        }
    };

    let mut checks = Vec::new();
    let mut interlacing_with_previous = None;
    if n == 1 {
        checks.push(
            Check::info("constant-polynomial-no-roots")
                .family(family.as_str())
                .n(1),
        );
    } else {
        match xilambda_core::roots::root_checks(family, n, &width) {
            Ok(cs) => checks.extend(cs),
            Err(e) => {
                eprintln!("error: {e}");
                return 3;
            }
        }
        let mut prev = match isolate_all(&poly::build(family, n - 1).adapted(), &width) {
            Ok(p) => p,
            Err(e) => {
                eprintln!("error: {e}");
                return 3;
            }
        };
        let mut cur = iso.clone();
        match check_interlacing(&mut prev, &mut cur) {
            Ok(ok) => {
                interlacing_with_previous = Some(ok);
                checks.push(
                    Check::verdict("interlacing-with-previous", ok)
                        .family(family.as_str())
                        .n(n),
                );
            }
            Err(e) => {
                checks.push(
                    Check::verdict("interlacing-with-previous", false)
                        .family(family.as_str())
                        .n(n)
                        .numeric(format!("{e}")),
                );
            }
        }
    }

    let mut suite = SuiteReport::new("roots");
    suite.extend(checks);
    let passed = suite.passed();
    let doc = RootsDocument {
        meta: Meta::new(!cli.no_timestamp),
        width_bits,
        root_report: iso.report(RENDER_DIGITS),
        interlacing_with_previous,
        suites: vec![suite],
    };
    let content = match serde_json::to_string_pretty(&doc) {
        Ok(s) => s + "\n",
        Err(e) => {
            eprintln!("error: {e}");
            return 3;
        }
    };
    let code = write_output(cli, &content);
    if code != 0 {
        return code;
    }
    if passed {
        0
    } else {
        1
    }
}

fn write_output(cli: &Cli, content: &str) -> u8 {
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, content) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 3;
            }
            0
        }
        None => {
            print!("{content}");
            0
        }
    }
}
