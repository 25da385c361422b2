//! Values of the continuation frozen from a 50-digit evaluation of the same
//! l-series (coefficient rows from an independent symbolic expansion). The
//! computed value must lie within its own reported error bound.

#![allow(clippy::excessive_precision)]

use num_complex::Complex64;
use spectral_zeta::numeric::zeta_continuation;
use spectral_zeta::{EvalOptions, Space, SpaceSpec};

use Space::{Projective, Sphere};

const REFERENCE: &[(Space, usize, f64, f64, f64, f64)] = &[
    (Sphere, 2, 3.0, 0.0, 0.4041138063191885708, 0.0),
    (
        Sphere,
        3,
        2.5,
        1.0,
        0.060727374350858350703,
        -0.26889655894373617829,
    ),
    (
        Sphere,
        4,
        0.3,
        -2.0,
        -0.84675578728101253569,
        0.15707562344919985153,
    ),
    (
        Sphere,
        5,
        -0.7,
        0.5,
        -0.384825059104606484,
        -0.15204913396655912185,
    ),
    (
        Sphere,
        6,
        1.25,
        3.0,
        0.17565916587439737897,
        0.30264188689147366673,
    ),
    (
        Sphere,
        7,
        -2.2,
        1.5,
        1.9461560694982519283,
        -5.4938687722454374182,
    ),
    (
        Sphere,
        8,
        4.1,
        -0.3,
        0.0014455647077516100613,
        0.0018166134336538557171,
    ),
    (Sphere, 3, 0.0002, 0.0, -1.0002412288650266228, 0.0),
    (Sphere, 4, -0.4996, 0.0, -0.43193087332865951566, 0.0),
    (Sphere, 2, -0.5, 0.0, -0.26509554911885852545, 0.0),
    (Sphere, 4, -1.5, 0.0, 0.024380681877027027382, 0.0),
    (
        Projective,
        2,
        1.5,
        0.5,
        0.11690281023698566934,
        -0.44258010959487318513,
    ),
    (
        Projective,
        3,
        0.75,
        -1.0,
        -0.69492624734196890394,
        0.033414207163752841094,
    ),
    (
        Projective,
        4,
        -1.3,
        2.0,
        -13.874066790885655885,
        -6.2467610926569807597,
    ),
    (
        Projective,
        5,
        2.2,
        7.0,
        0.019418584063902416261,
        0.12732047603699359736,
    ),
    (Projective, 6, -0.25, 0.0, -0.82521485436044356354, 0.0),
    (
        Projective,
        7,
        3.5,
        -4.0,
        -0.00012341928817076261288,
        -0.0018042960915638007605,
    ),
    // removable crossings at non-positive integers, no closed form
    (Projective, 4, 0.0, 0.0, -0.83888888888888888889, 0.0),
    (Projective, 2, -2.0, 0.0, 0.012698412698412698413, 0.0),
];

#[test]
fn continuation_matches_reference() {
    let opts = EvalOptions::default();
    for &(space, k, re, im, v_re, v_im) in REFERENCE {
        let spec = SpaceSpec::new(space, k).unwrap();
        let r = zeta_continuation(spec, Complex64::new(re, im), &opts).unwrap();
        let expected = Complex64::new(v_re, v_im);
        // the frozen constants carry their own rounding
        let slack = 2.0 * f64::EPSILON * expected.norm();
        let err = (r.value - expected).norm();
        assert!(
            err <= r.error_bound + slack,
            "{spec} s={re}+{im}i: err {err:e} > bound {:e}",
            r.error_bound
        );
        assert!(
            r.error_bound <= 1e-8 * expected.norm().max(1.0),
            "{spec} s={re}+{im}i: bound {:e}",
            r.error_bound
        );
    }
}
