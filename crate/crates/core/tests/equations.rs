mod common;

use common::*;
use fermat_forge::algebra::{MPoly, Shift};
use fermat_forge::equations::{
    diagnose, factor_check, factor_identity_error, omega_roots, residual, residual_parts, verify, EquationSpec, Sign,
    VerdictKind,
};
use fermat_forge::expfun::{CertificateKind, ExpPoly, SampleConfig};
use fermat_forge::{Cx, Error};
use rand::Rng;

/// Left minus right side of each family, evaluated from values of `f`.
fn direct_residual(spec: &EquationSpec, f: &ExpPoly, z: &[Cx]) -> Cx {
    let fz = naive_exp_eval(f, z);
    let fc = naive_exp_eval(f, &add(z, spec.shift().as_slice()));
    match spec {
        EquationSpec::BinomialDiff { a, b, p, q, g, a1, a0, .. } => {
            let pz = naive_eval(p, z);
            let l = a1 * fc + a0 * fz;
            a * fz * fz + b * pz * pz * l * l - naive_eval(q, z) * naive_eval(g, z).exp()
        }
        EquationSpec::Pdde { a, b, p, q, g, axis, .. } => {
            let d = central_diff(|w| naive_exp_eval(f, w), z, *axis, 1e-5);
            let pz = naive_eval(p, z);
            a * fc * fc + b * pz * pz * d * d - naive_eval(q, z) * naive_eval(g, z).exp()
        }
        EquationSpec::Trinomial { a, b, omega, gamma1, gamma2, g, .. } => {
            let gz = gamma1 * fc + gamma2 * fz;
            a * fz * fz + 2.0 * omega * fz * gz + b * gz * gz - naive_eval(g, z).exp()
        }
        EquationSpec::LinearReduced { a, b, gamma1, gamma2, g, sign_b, sign_rhs, .. } => {
            let gz = gamma1 * fc + gamma2 * fz;
            a.sqrt() * fz + sign_b.value() * b.sqrt() * gz - sign_rhs.value() * (naive_eval(g, z) / 2.0).exp()
        }
    }
}

fn random_spec(r: &mut rand_chacha::ChaCha8Rng, kind: usize, n: usize) -> EquationSpec {
    let c = rand_shift(r, n, 1.0);
    let g = rand_poly(r, n, 2, 3, 0.5);
    match kind {
        0 => EquationSpec::BinomialDiff {
            a: rand_nonzero(r, 0.5, 2.0),
            b: rand_nonzero(r, 0.5, 2.0),
            p: rand_poly(r, n, 1, 2, 1.0),
            q: rand_poly(r, n, 1, 2, 1.0),
            g,
            a1: rand_nonzero(r, 0.5, 2.0),
            a0: rand_cx(r, 1.0),
            c,
        },
        1 => EquationSpec::Pdde {
            a: rand_nonzero(r, 0.5, 2.0),
            b: rand_nonzero(r, 0.5, 2.0),
            p: rand_poly(r, n, 1, 2, 1.0),
            q: rand_poly(r, n, 1, 2, 1.0),
            g,
            c,
            axis: r.gen_range(0..n),
        },
        2 => EquationSpec::Trinomial {
            a: rand_nonzero(r, 0.5, 2.0),
            b: rand_nonzero(r, 0.5, 2.0),
            omega: rand_cx(r, 2.0),
            gamma1: rand_nonzero(r, 0.5, 2.0),
            gamma2: rand_cx(r, 1.0),
            g,
            c,
        },
        _ => EquationSpec::LinearReduced {
            a: rand_nonzero(r, 0.5, 2.0),
            b: rand_nonzero(r, 0.5, 2.0),
            gamma1: rand_nonzero(r, 0.5, 2.0),
            gamma2: rand_cx(r, 1.0),
            g,
            c,
            sign_b: if r.gen() { Sign::Plus } else { Sign::Minus },
            sign_rhs: if r.gen() { Sign::Plus } else { Sign::Minus },
        },
    }
}

#[test]
fn residual_matches_direct_evaluation_for_every_family() {
    let mut r = rng(31);
    for k in 0..80 {
        let kind = k % 4;
        let n = 1 + (k / 4) % 3;
        let spec = random_spec(&mut r, kind, n);
        let f = rand_exppoly(&mut r, n, 2);
        let res = residual(&spec, &f).unwrap();
        let parts = residual_parts(&spec, &f).unwrap();
        for _ in 0..3 {
            let z = rand_point(&mut r, n, 1.0);
            let scale: f64 = parts.iter().map(|p| naive_exp_abs(p, &z)).sum();
            let want = direct_residual(&spec, &f, &z);
            let got = naive_exp_eval(&res, &z);
            let tol = if kind == 1 { 1e-6 } else { 1e-11 };
            assert!((got - want).norm() <= tol * scale, "kind {kind}: {got} vs {want}");
        }
    }
}

#[test]
fn omega_roots_satisfy_vieta_relations() {
    let mut r = rng(32);
    for _ in 0..1000 {
        let (a, b, omega) = (rand_nonzero(&mut r, 0.2, 3.0), rand_nonzero(&mut r, 0.2, 3.0), rand_cx(&mut r, 3.0));
        let roots = omega_roots(a, b, omega).unwrap();
        if roots.double_root {
            continue;
        }
        let s = a.sqrt() * b.sqrt();
        assert!((roots.w1 * roots.w2 - 1.0).norm() <= 1e-12);
        let want = -2.0 * omega / s;
        assert!((roots.w1 + roots.w2 - want).norm() <= 1e-12 * want.norm().max(1.0));
        let (f, g) = (rand_cx(&mut r, 2.0), rand_cx(&mut r, 2.0));
        assert!(factor_identity_error(a, b, omega, &roots, f, g) <= 1e-12);
    }
}

#[test]
fn omega_root_formula_for_integer_coefficients() {
    // a = 2, b = 3, ω = 4: w = (−4 ± √10)/√6
    let roots = omega_roots(re(2.0), re(3.0), re(4.0)).unwrap();
    let s6 = 6f64.sqrt();
    let mut w = [roots.w1.re, roots.w2.re];
    w.sort_by(f64::total_cmp);
    assert!((w[0] - (-4.0 - 10f64.sqrt()) / s6).abs() < 1e-14);
    assert!((w[1] - (-4.0 + 10f64.sqrt()) / s6).abs() < 1e-14);
}

#[test]
fn omega_zero_and_double_roots_are_flagged() {
    let z = omega_roots(re(2.0), re(3.0), re(0.0)).unwrap();
    assert!(z.omega_zero);
    assert!((z.w1 * z.w1 + 1.0).norm() < 1e-15);
    let d = omega_roots(re(4.0), re(9.0), re(6.0)).unwrap();
    assert!(d.double_root);
    assert_eq!(omega_roots(re(0.0), re(1.0), re(1.0)), Err(Error::ZeroProduct));
    let f = ExpPoly::constant(1, re(1.0));
    assert!(matches!(
        factor_check(re(4.0), re(9.0), re(6.0), &f, &f, &SampleConfig::default()),
        Err(Error::DegenerateOmega(_))
    ));
}

#[test]
fn factor_check_holds_on_exponential_polynomials() {
    let mut r = rng(33);
    let f = rand_exppoly(&mut r, 2, 3);
    let g = rand_exppoly(&mut r, 2, 2);
    let e = factor_check(cx(2.0, 1.0), re(3.0), cx(0.5, 0.5), &f, &g, &SampleConfig::default()).unwrap();
    assert!(e <= 1e-12, "{e:e}");
}

fn binomial(p: MPoly, a1: f64, a0: f64) -> EquationSpec {
    EquationSpec::BinomialDiff {
        a: re(1.0),
        b: re(1.0),
        p,
        q: MPoly::one(2),
        g: MPoly::zero(2),
        a1: re(a1),
        a0: re(a0),
        c: Shift::real(&[1.0, 0.5]).unwrap(),
    }
}

#[test]
fn difference_operator_form_gets_parity_certificate() {
    let p = MPoly::linear(&[re(1.0), re(0.0)], re(1.0)).unwrap();
    let v = diagnose(&binomial(p, 1.0, -1.0));
    assert_eq!(v.kind, VerdictKind::NoFiniteOrderSolution);
    let cert = v.certificate.unwrap();
    assert_eq!((cert.p, cert.q), (1, 0));
    assert_eq!(cert.lhs_degree, 1);
    assert_eq!(cert.rhs_degree, 0);
    assert_eq!(cert.forced_p, 0.5);
}

#[test]
fn non_constant_p_rules_out_finite_order() {
    let p = MPoly::from_terms(2, [(vec![1, 1], re(1.0))]).unwrap();
    let v = diagnose(&binomial(p, 2.0, 0.5));
    assert_eq!(v.kind, VerdictKind::NoFiniteOrderSolution);
    assert!(v.certificate.is_none());
    assert_eq!(v.family, "binomial-difference");
}

#[test]
fn constant_p_admits_a_family() {
    let v = diagnose(&binomial(MPoly::constant(2, re(3.0)), 1.0, -1.0));
    assert_eq!(v.kind, VerdictKind::SolutionFamilyExists);
}

#[test]
fn trinomial_families_are_routed_by_omega() {
    let spec = |omega: f64| EquationSpec::Trinomial {
        a: re(4.0),
        b: re(9.0),
        omega: re(omega),
        gamma1: re(1.0),
        gamma2: re(0.0),
        g: MPoly::zero(1),
        c: Shift::real(&[1.0]).unwrap(),
    };
    assert_eq!(diagnose(&spec(0.0)).family, "trinomial-omega-zero");
    assert_eq!(diagnose(&spec(6.0)).family, "linear-reduction");
    assert_eq!(diagnose(&spec(1.0)).family, "trinomial");
}

#[test]
fn malformed_specs_are_out_of_scope() {
    let spec = EquationSpec::Pdde {
        a: re(1.0),
        b: re(1.0),
        p: MPoly::one(1),
        q: MPoly::one(1),
        g: MPoly::zero(1),
        c: Shift::real(&[1.0]).unwrap(),
        axis: 3,
    };
    assert_eq!(diagnose(&spec).kind, VerdictKind::OutOfScope);
    assert!(matches!(residual(&spec, &ExpPoly::zero(1)), Err(Error::AxisOutOfRange { .. })));
}

#[test]
fn empty_candidate_fails_with_witness() {
    let spec = binomial(MPoly::one(2), 1.0, 0.0);
    let r = verify(&spec, &ExpPoly::zero(2), &SampleConfig::default()).unwrap();
    assert!(!r.passed);
    assert_eq!(r.certificate, CertificateKind::Failed);
    assert!(r.witness.is_some());
}

#[test]
fn verification_report_has_fixed_key_order() {
    let spec = binomial(MPoly::one(2), 1.0, 0.0);
    let r = verify(&spec, &ExpPoly::zero(2), &SampleConfig::default()).unwrap();
    let s = serde_json::to_string(&r).unwrap();
    let keys =
        ["\"schema\"", "\"equation\"", "\"passed\"", "\"symbolic_zero\"", "\"certificate\"", "\"max_rel_residual\""];
    let pos: Vec<usize> = keys.iter().map(|k| s.find(k).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]));
    assert!(s.starts_with("{\"schema\":\"fermat-forge/1\""));
}

#[test]
fn equation_json_roundtrip() {
    let mut r = rng(34);
    for kind in 0..4 {
        let spec = random_spec(&mut r, kind, 2);
        let s = serde_json::to_string(&spec).unwrap();
        assert!(s.contains("\"kind\""));
        let back: EquationSpec = serde_json::from_str(&s).unwrap();
        assert_eq!(back, spec);
    }
}
