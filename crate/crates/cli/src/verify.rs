//! Self-verification: exact identities for every k up to `k_max`, numeric
//! cross-checks for k up to 6.

use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};
use spectral_zeta::exact::{
    check_identities, factorial, integrality_holds, methods_agree, parity_holds,
};
use spectral_zeta::numeric::{
    dirichlet_oracle, hurwitz_zeta, limit_numeric, residue_numeric, riemann_zeta, zeta_continuation,
};
use spectral_zeta::special_values::{residue, special_value, special_value_by_series};
use spectral_zeta::{Dim, EvalOptions, Rational, SpaceSpec};

use crate::output::VerifyRecord;

const NUMERIC_K_MAX: usize = 6;
const DIRICHLET_TERMS: usize = 20_000;
const RESIDUE_EPS: f64 = 1e-3;
const LIMIT_TOL: f64 = 1e-6;

fn record(
    check: &str,
    k: Option<usize>,
    space: Option<SpaceSpec>,
    failures: Vec<String>,
) -> VerifyRecord {
    VerifyRecord {
        check: check.to_string(),
        k,
        space: space.map(|s| s.space.as_str().to_string()),
        passed: failures.is_empty(),
        detail: (!failures.is_empty()).then(|| failures.join("; ")),
    }
}

pub(crate) fn describe(r: &VerifyRecord) -> String {
    let mut out = format!("check `{}`", r.check);
    if let Some(k) = r.k {
        out.push_str(&format!(" k={k}"));
    }
    if let Some(space) = &r.space {
        out.push_str(&format!(" space={space}"));
    }
    if let Some(detail) = &r.detail {
        out.push_str(&format!(": {detail}"));
    }
    out
}

fn specs(k: usize) -> [SpaceSpec; 2] {
    [
        SpaceSpec::sphere(k).expect("k >= 2"),
        SpaceSpec::projective(k).expect("k >= 2"),
    ]
}

fn flag(ok: bool, what: &str) -> Vec<String> {
    if ok {
        Vec::new()
    } else {
        vec![what.to_string()]
    }
}

fn exact_checks(k: usize, out: &mut Vec<VerifyRecord>) {
    let dim = Dim::new(k).expect("k >= 2");
    let [sphere, proj] = specs(k);
    out.push(record(
        "cross-method",
        Some(k),
        None,
        flag(methods_agree(dim), "tables differ"),
    ));
    out.push(record(
        "parity",
        Some(k),
        None,
        flag(parity_holds(dim), "zero pattern wrong"),
    ));
    out.push(record(
        "integrality",
        Some(k),
        None,
        flag(integrality_holds(dim), "non-integral entry"),
    ));
    let report = check_identities(dim);
    out.push(record(
        "identities",
        Some(k),
        None,
        report
            .failures()
            .map(|c| format!("{}: {} != {}", c.name, c.lhs, c.rhs))
            .collect(),
    ));

    let lead = Rational::one() / Rational::from_integer(factorial(k - 1));
    let mut failures = flag(residue(sphere, 0) == lead, "sphere leading residue");
    failures.extend(flag(
        residue(proj, 0) * Rational::from_integer(2.into()) == lead,
        "projective leading residue",
    ));
    out.push(record("leading-residue", Some(k), None, failures));

    let failures = (0..=10)
        .filter(|&n| residue(proj, n) * Rational::from_integer(2.into()) != residue(sphere, n))
        .map(|n| format!("n={n}"))
        .collect();
    out.push(record("projective-half", Some(k), None, failures));

    if dim.is_even() {
        let failures = specs(k)
            .into_iter()
            .flat_map(|spec| {
                (k / 2..=10)
                    .filter(move |&n| !residue(spec, n).is_zero())
                    .map(move |n| format!("{spec} n={n}"))
            })
            .collect();
        out.push(record("even-truncation", Some(k), None, failures));
        let failures = (0..=6)
            .filter(|&n| special_value(sphere, n).ok() != special_value_by_series(sphere, n).ok())
            .map(|n| format!("n={n}"))
            .collect();
        out.push(record("special-values", Some(k), Some(sphere), failures));
    } else {
        for spec in specs(k) {
            let failures = (0..=10)
                .filter(|&n| {
                    let expected = if n == 0 {
                        -Rational::one()
                    } else {
                        Rational::zero()
                    };
                    special_value(spec, n).ok() != Some(expected)
                })
                .map(|n| format!("n={n}"))
                .collect();
            out.push(record("special-values", Some(k), Some(spec), failures));
        }
    }
}

fn numeric_checks(spec: SpaceSpec, opts: &EvalOptions, out: &mut Vec<VerifyRecord>) {
    let k = spec.k();
    let bound_limit = opts.tol.max(1e-8);
    let half_k = k as f64 / 2.0;

    let mut failures = Vec::new();
    for (dre, im) in [(0.75, 0.0), (1.5, 2.0), (2.5, -4.5)] {
        let s = Complex64::new(half_k + dre, im);
        match (
            zeta_continuation(spec, s, opts),
            dirichlet_oracle(spec, s, DIRICHLET_TERMS, opts),
        ) {
            (Ok(a), Ok(b)) => {
                let diff = (a.value - b.value).norm();
                if diff > a.error_bound + b.error_bound || a.error_bound > bound_limit {
                    failures.push(format!(
                        "s={s}: diff {diff:.3e}, bounds {:.3e} + {:.3e}",
                        a.error_bound, b.error_bound
                    ));
                }
            }
            (a, b) => failures.push(format!("s={s}: {:?} / {:?}", a.err(), b.err())),
        }
    }
    out.push(record("dirichlet-agreement", Some(k), Some(spec), failures));

    let mut failures = Vec::new();
    for n in 0..=4 {
        let exact = residue(spec, n).to_f64().unwrap_or(f64::NAN);
        match residue_numeric(spec, n, RESIDUE_EPS, opts) {
            Ok(est) if (est - Complex64::new(exact, 0.0)).norm() <= bound_limit => {}
            Ok(est) => failures.push(format!("n={n}: {} vs {exact}", est.re)),
            Err(e) => failures.push(format!("n={n}: {e}")),
        }
    }
    out.push(record("residue-numeric", Some(k), Some(spec), failures));

    let mut failures = Vec::new();
    for n in 0..=5usize {
        let Ok(exact) = special_value(spec, n) else {
            continue;
        };
        let exact = exact.to_f64().unwrap_or(f64::NAN);
        let s0 = -(n as f64);
        match zeta_continuation(spec, Complex64::new(s0, 0.0), opts) {
            Ok(r) if r.flags.exact_routed && r.value == Complex64::new(exact, 0.0) => {}
            Ok(r) => failures.push(format!("n={n}: routed value {} vs {exact}", r.value)),
            Err(e) => failures.push(format!("n={n}: {e}")),
        }
        match limit_numeric(spec, s0, RESIDUE_EPS, opts) {
            Ok(v) if (v - Complex64::new(exact, 0.0)).norm() <= LIMIT_TOL => {}
            Ok(v) => failures.push(format!("n={n}: limit {} vs {exact}", v.re)),
            Err(e) => failures.push(format!("n={n}: limit {e}")),
        }
    }
    out.push(record("exact-routing", Some(k), Some(spec), failures));
}

fn hurwitz_check(opts: &EvalOptions, out: &mut Vec<VerifyRecord>) {
    let mut failures = Vec::new();
    for (re, im) in [
        (2.0, 0.0),
        (0.5, 14.0),
        (-3.5, 2.0),
        (-7.0, 0.0),
        (1.3, -0.4),
        (4.0, 9.0),
    ] {
        let s = Complex64::new(re, im);
        match (hurwitz_zeta(s, 0.5, opts), riemann_zeta(s, opts)) {
            (Ok(h), Ok(z)) => {
                let factor = Complex64::new(2.0, 0.0).powc(s) - 1.0;
                let rhs = factor * z.value;
                let slack = 4.0 * f64::EPSILON * (h.value.norm() + rhs.norm());
                let diff = (h.value - rhs).norm();
                if diff > h.error_bound + factor.norm() * z.error_bound + slack {
                    failures.push(format!("s={s}: diff {diff:.3e}"));
                }
            }
            (a, b) => failures.push(format!("s={s}: {:?} / {:?}", a.err(), b.err())),
        }
    }
    out.push(record("hurwitz-half-argument", None, None, failures));
}

pub(crate) fn run(k_max: usize, opts: &EvalOptions) -> Vec<VerifyRecord> {
    let mut out = Vec::new();
    for k in 2..=k_max {
        exact_checks(k, &mut out);
    }
    for k in 2..=k_max.min(NUMERIC_K_MAX) {
        for spec in specs(k) {
            numeric_checks(spec, opts, &mut out);
        }
    }
    hurwitz_check(opts, &mut out);
    out
}
