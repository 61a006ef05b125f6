//! Evaluators against arbitrary-precision reference values.

mod common;

use common::{c, golden, rel_err};
use critline::elem::{ccos, cexp, clog, cpow_real_base, csin};
use critline::gamma::cgamma;
use critline::zeta::{zeta_direct, zeta_eta, zeta_strip};
use critline::Complex;

#[test]
fn elementary_functions() {
    for &(z, want) in golden::EXP {
        assert!(rel_err(cexp(c(z)).unwrap(), c(want)) < 4e-16, "exp{z:?}");
    }
    for &(z, want) in golden::COS {
        assert!(rel_err(ccos(c(z)).unwrap(), c(want)) < 4e-16, "cos{z:?}");
    }
    for &(z, want) in golden::SIN {
        assert!(rel_err(csin(c(z)).unwrap(), c(want)) < 4e-16, "sin{z:?}");
    }
    for &(z, want) in golden::LOG {
        assert!(rel_err(clog(c(z)).unwrap(), c(want)) < 4e-16, "log{z:?}");
    }
    let p = cpow_real_base(2, Complex::I).unwrap();
    assert!(rel_err(p, c(golden::POW2_I)) < 4e-16);
}

#[test]
fn gamma_values() {
    for &(z, want) in golden::GAMMA {
        let r = cgamma(c(z)).unwrap();
        let err = rel_err(r.value, c(want));
        println!("gamma{z:?}: rel {err:e}");
        assert!(err < 1e-12, "gamma{z:?}: rel err {err:e}");
        assert!(
            (r.value - c(want)).abs() <= r.abs_error_estimate,
            "gamma{z:?} estimate"
        );
    }
}

#[test]
fn zeta_values() {
    for &(z, want) in golden::ZETA {
        let r = zeta_strip(c(z)).unwrap();
        let abs = (r.value - c(want)).abs();
        let err = rel_err(r.value, c(want));
        println!(
            "zeta{z:?}: rel {err:e} abs {abs:e} est {:e}",
            r.abs_error_estimate
        );
        assert!(
            abs <= 1e-12 * (1.0 + c(want).abs()),
            "zeta{z:?}: abs err {abs:e}"
        );
    }
}

#[test]
fn zeta_direct_values() {
    for &(z, want) in golden::ZETA.iter().filter(|(z, _)| z.0 >= 1.1) {
        let r = zeta_direct(c(z), 1e-13).unwrap();
        let abs = (r.value - c(want)).abs();
        assert!(abs < 1e-12, "direct{z:?}: {abs:e}");
        assert!(r.abs_error_estimate <= 1e-13);
    }
}

#[test]
fn eta_matches_strip_on_right_half_plane() {
    for &(z, _) in golden::ZETA.iter().filter(|(z, _)| z.0 > 0.0) {
        assert_eq!(zeta_eta(c(z)).unwrap(), zeta_strip(c(z)).unwrap());
    }
}

#[test]
fn xi_values() {
    use critline::xi::{xi_eval, xi_on_line};
    for &(z, want) in golden::XI {
        let r = xi_eval(c(z)).unwrap();
        let err = rel_err(r.value, c(want));
        println!(
            "xi{z:?}: rel {err:e} est/|v| {:e}",
            r.abs_error_estimate / c(want).abs()
        );
        assert!(err < 1e-10, "xi{z:?}: rel err {err:e}");
    }
    for &(t, want) in golden::XI_ON_LINE {
        let got = xi_on_line(t).unwrap();
        assert!(
            (got - want).abs() <= 1e-10 * want.abs(),
            "xi_on_line({t}) = {got}"
        );
    }
}
