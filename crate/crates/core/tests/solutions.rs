mod common;

use std::f64::consts::PI;

use common::*;
use fermat_forge::algebra::{MPoly, PeriodicDirection, PeriodicPoly, Shift};
use fermat_forge::equations::{omega_roots, Sign};
use fermat_forge::expfun::{ExpPoly, ExpTerm, SampleConfig};
use fermat_forge::solutions::{
    required_exponentials, solve_linear_exponent, solve_xi, xi_relation, BinomialI, BinomialII, ClassicalParams,
    ConstructRequest, LinearReduction, OmegaZeroI, OmegaZeroII, PddeI, PddeII, SolutionBundle, TrinomialI, TrinomialII,
};
use fermat_forge::{Cx, Error};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

const DRAWS: usize = 20;

fn assert_verifies(b: &SolutionBundle, what: &str) {
    let r = b.verify(&SampleConfig::default()).unwrap();
    assert!(r.passed, "{what}: max_rel_residual {:e}", r.max_rel_residual);
    assert!(r.max_rel_residual <= 1e-8);
}

fn periodic_on(r: &mut ChaCha8Rng, c: &Shift, i: usize, j: usize, deg: usize) -> PeriodicPoly {
    let d = PeriodicDirection::structured(c, i, j).unwrap();
    let mut coeffs: Vec<Cx> = (0..=deg).map(|_| rand_cx(r, 0.5)).collect();
    coeffs[0] = re(0.0);
    PeriodicPoly { linear: None, direction: Some(d.direction().to_vec()), coeffs, constant: rand_cx(r, 0.5) }
}

fn sign(r: &mut ChaCha8Rng) -> Sign {
    if r.gen() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

#[test]
fn binomial_two_exponential_family() {
    let mut r = rng(41);
    for k in 0..DRAWS {
        let c = rand_shift(&mut r, 3, 1.0);
        let p = BinomialI {
            c: c.clone(),
            a: rand_nonzero(&mut r, 0.5, 2.0),
            b: rand_nonzero(&mut r, 0.5, 2.0),
            a1: rand_nonzero(&mut r, 0.5, 2.0),
            a0: rand_cx(&mut r, 1.0),
            l1: rand_point(&mut r, 3, 0.5),
            l2: rand_point(&mut r, 3, 0.5),
            psi1: periodic_on(&mut r, &c, 0, 1, 3),
            psi2: periodic_on(&mut r, &c, 1, 2, 2),
            q1: periodic_on(&mut r, &c, 0, 2, 1),
            q2: periodic_on(&mut r, &c, 0, 1, 2),
            k1: rand_cx(&mut r, 0.5),
            k2: rand_cx(&mut r, 0.5),
            p_sign: sign(&mut r),
        };
        let p = p.with_compatible_exponents(rand_cx(&mut r, 0.5), k % 2).unwrap();
        let b = p.construct().unwrap();
        assert_eq!(b.theorem, "binomial-difference/i");
        assert_verifies(&b, "binomial-i");
    }
}

#[test]
fn binomial_rejects_incompatible_exponents() {
    let c = Shift::real(&[1.0, 2.0]).unwrap();
    let p = BinomialI {
        c: c.clone(),
        a: re(1.0),
        b: re(1.0),
        a1: re(1.0),
        a0: re(1.0),
        l1: vec![re(0.1), re(0.2)],
        l2: vec![re(0.3), re(0.1)],
        psi1: PeriodicPoly { linear: None, direction: None, coeffs: vec![], constant: re(0.0) },
        psi2: PeriodicPoly { linear: None, direction: None, coeffs: vec![], constant: re(0.0) },
        q1: PeriodicPoly { linear: None, direction: None, coeffs: vec![], constant: re(1.0) },
        q2: PeriodicPoly { linear: None, direction: None, coeffs: vec![], constant: re(1.0) },
        k1: re(0.0),
        k2: re(0.0),
        p_sign: Sign::Plus,
    };
    assert!(matches!(p.construct(), Err(Error::ConstraintViolated { .. })));
}

/// `√q·sin(u·z)·e^{L₂₁}` with `u·c = π/2` and `L₂₁(c) ∈ 2πiℤ`.
#[test]
fn binomial_single_exponential_family() {
    let mut r = rng(42);
    for _ in 0..DRAWS {
        let u = rand_point(&mut r, 2, 1.0);
        let raw = rand_point(&mut r, 2, 1.0);
        let uc: Cx = u.iter().zip(&raw).map(|(x, y)| x * y).sum();
        let c = Shift::new(raw.iter().map(|x| x * (PI / 2.0) / uc).collect()).unwrap();
        let q = rand_nonzero(&mut r, 0.5, 2.0);
        let iu = MPoly::linear(&u, re(0.0)).unwrap().scale(cx(0.0, 1.0));
        let beta = ExpPoly::from_terms(
            2,
            vec![
                ExpTerm { coef: MPoly::constant(2, cx(0.0, -0.5) * q.sqrt()), expo: iu.clone() },
                ExpTerm { coef: MPoly::constant(2, cx(0.0, 0.5) * q.sqrt()), expo: -&iu },
            ],
        )
        .unwrap();
        let l21 = solve_linear_exponent(re(1.0), &c, [r.gen_range(-2..3)], Some(&rand_point(&mut r, 2, 0.5)))
            .unwrap()
            .remove(0)
            .linear
            .unwrap();
        let p = BinomialII {
            c,
            a: re(1.0),
            b: re(1.0),
            a1: re(1.0),
            a0: re(0.0),
            p: re(1.0),
            q: MPoly::constant(2, q),
            beta,
            l21,
            b_const: re(0.0),
        };
        assert_verifies(&p.construct().unwrap(), "binomial-ii");
    }
}

#[test]
fn pdde_two_exponential_family() {
    let mut r = rng(43);
    for k in 0..DRAWS {
        let c = rand_shift(&mut r, 2, 1.0);
        let p = PddeI {
            c,
            a: rand_nonzero(&mut r, 0.5, 2.0),
            b: rand_nonzero(&mut r, 0.5, 2.0),
            axis: k % 2,
            h1: vec![rand_nonzero(&mut r, 0.3, 1.0), rand_nonzero(&mut r, 0.3, 1.0)],
            r1: rand_cx(&mut r, 0.5),
            h2: vec![rand_nonzero(&mut r, 0.3, 1.0), rand_nonzero(&mut r, 0.3, 1.0)],
            r2: rand_cx(&mut r, 0.5),
            alpha1: rand_nonzero(&mut r, 0.5, 2.0),
            alpha2: rand_nonzero(&mut r, 0.5, 2.0),
        };
        let p = p.with_compatible_h1(0).unwrap();
        assert_verifies(&p.construct().unwrap(), "pdde-i");
    }
}

#[test]
fn pdde_single_exponential_family() {
    let mut r = rng(44);
    for _ in 0..DRAWS {
        let c = rand_shift(&mut r, 3, 1.0);
        let p = PddeII {
            c: c.clone(),
            a: rand_nonzero(&mut r, 0.5, 2.0),
            b: rand_nonzero(&mut r, 0.5, 2.0),
            axis: 0,
            p: rand_nonzero(&mut r, 0.5, 2.0),
            q: rand_nonzero(&mut r, 0.5, 2.0),
            gamma: ExpPoly::constant(3, rand_nonzero(&mut r, 0.5, 2.0)),
            l1: rand_point(&mut r, 3, 0.5),
            h: periodic_on(&mut r, &c, 1, 2, 3),
            r5: None,
        };
        assert_verifies(&p.construct().unwrap(), "pdde-ii");
    }
}

fn admissible_omega(r: &mut ChaCha8Rng, a: Cx, b: Cx) -> Cx {
    loop {
        let w = rand_cx(r, 2.0);
        let roots = omega_roots(a, b, w).unwrap();
        if !roots.double_root && w.norm() > 0.1 && (w * w - a * b).norm() > 0.1 {
            return w;
        }
    }
}

#[test]
fn trinomial_single_exponential_family() {
    let mut r = rng(45);
    let mut built = 0;
    for k in 0..DRAWS * 2 {
        let c = rand_shift(&mut r, 3, 1.0);
        let (a, b) = (rand_nonzero(&mut r, 0.5, 2.0), rand_nonzero(&mut r, 0.5, 2.0));
        let p = TrinomialI {
            c: c.clone(),
            a,
            b,
            omega: admissible_omega(&mut r, a, b),
            gamma1: rand_nonzero(&mut r, 0.5, 2.0),
            gamma2: rand_cx(&mut r, 1.0),
            xi: None,
            l: rand_point(&mut r, 3, 0.5),
            h: periodic_on(&mut r, &c, 0, 2, 2),
            b3: rand_cx(&mut r, 0.5),
            swap_roots: k % 2 == 1,
            xi_sign: sign(&mut r),
        };
        // a draw can land on the one value of L(c) the relation cannot reach
        let Ok(bundle) = p.construct() else { continue };
        built += 1;
        assert_verifies(&bundle, "trinomial-i");
    }
    assert!(built >= DRAWS);
}

#[test]
fn trinomial_two_exponential_family() {
    let mut r = rng(46);
    for k in 0..DRAWS {
        let c = rand_shift(&mut r, 2, 1.0);
        let (a, b) = (rand_nonzero(&mut r, 0.5, 2.0), rand_nonzero(&mut r, 0.5, 2.0));
        let omega = admissible_omega(&mut r, a, b);
        let (g1, g2) = (rand_nonzero(&mut r, 0.5, 2.0), rand_cx(&mut r, 1.0));
        let mut roots = omega_roots(a, b, omega).unwrap();
        if k % 2 == 1 {
            roots = roots.swapped();
        }
        let (r1, r2) = required_exponentials(a, b, &roots, g1, g2);
        let l1 = solve_linear_exponent(r1, &c, [0], Some(&rand_point(&mut r, 2, 0.5))).unwrap().remove(0);
        let l2 = solve_linear_exponent(r2, &c, [1], Some(&rand_point(&mut r, 2, 0.5))).unwrap().remove(0);
        let p = TrinomialII {
            c: c.clone(),
            a,
            b,
            omega,
            gamma1: g1,
            gamma2: g2,
            l1: l1.linear.unwrap(),
            l2: l2.linear.unwrap(),
            h1: periodic_on(&mut r, &c, 0, 1, 2),
            h2: periodic_on(&mut r, &c, 0, 1, 3),
            d1: rand_cx(&mut r, 0.5),
            d2: rand_cx(&mut r, 0.5),
            swap_roots: k % 2 == 1,
        };
        assert_verifies(&p.construct().unwrap(), "trinomial-ii");
    }
}

#[test]
fn omega_zero_families() {
    let mut r = rng(47);
    let mut singles = 0;
    for k in 0..DRAWS {
        let c = rand_shift(&mut r, 2, 1.0);
        let (a, b) = (rand_nonzero(&mut r, 0.5, 2.0), rand_nonzero(&mut r, 0.5, 2.0));
        let (g1, g2) = (rand_nonzero(&mut r, 0.5, 2.0), if k % 3 == 0 { re(0.0) } else { rand_cx(&mut r, 1.0) });
        let single = OmegaZeroI {
            c: c.clone(),
            a,
            b,
            gamma1: g1,
            gamma2: g2,
            xi: None,
            l: rand_point(&mut r, 2, 0.5),
            h: periodic_on(&mut r, &c, 0, 1, 2),
            a_const: rand_cx(&mut r, 0.5),
            xi_sign: sign(&mut r),
        };
        if let Ok(bundle) = single.construct() {
            singles += 1;
            assert_verifies(&bundle, "omega-zero-i");
        }
        let (r1, r2) = OmegaZeroII::required_exponentials(a, b, g1, g2);
        let l1 = solve_linear_exponent(r1, &c, [0], Some(&rand_point(&mut r, 2, 0.5))).unwrap().remove(0);
        let l2 = solve_linear_exponent(r2, &c, [0], Some(&rand_point(&mut r, 2, 0.5))).unwrap().remove(0);
        let pair = OmegaZeroII {
            c: c.clone(),
            a,
            b,
            gamma1: g1,
            gamma2: g2,
            l1: l1.linear.unwrap(),
            l2: l2.linear.unwrap(),
            h1: periodic_on(&mut r, &c, 0, 1, 2),
            h2: periodic_on(&mut r, &c, 0, 1, 1),
            b1: rand_cx(&mut r, 0.5),
            b2: rand_cx(&mut r, 0.5),
        };
        assert_verifies(&pair.construct().unwrap(), "omega-zero-ii");
    }
    assert!(singles >= DRAWS / 2, "only {singles} single-exponential draws were admissible");
}

#[test]
fn linear_reduction_in_all_three_cases() {
    let mut r = rng(48);
    for k in 0..DRAWS * 3 {
        let c = rand_shift(&mut r, 2, 1.0);
        let norm2: f64 = c.as_slice().iter().map(|x| x.norm_sqr()).sum();
        let ell: Vec<Cx> = c.as_slice().iter().map(|x| x.conj() / norm2).collect();
        let two_pi_i_ell = MPoly::linear(&ell, re(0.0)).unwrap().scale(cx(0.0, 2.0 * PI));
        let pi = ExpPoly::from_terms(
            2,
            vec![
                ExpTerm { coef: MPoly::constant(2, rand_cx(&mut r, 1.0)), expo: two_pi_i_ell.clone() },
                ExpTerm { coef: MPoly::constant(2, rand_cx(&mut r, 1.0)), expo: -&two_pi_i_ell },
            ],
        )
        .unwrap();
        let periodic = periodic_on(&mut r, &c, 0, 1, 2).build(&c).unwrap();
        let g = match k % 3 {
            0 => MPoly::constant(2, rand_cx(&mut r, 1.0)),
            1 => periodic,
            _ => periodic.try_add(&MPoly::linear(&rand_point(&mut r, 2, 0.3), re(0.0)).unwrap()).unwrap(),
        };
        let p = LinearReduction {
            c,
            a: rand_nonzero(&mut r, 0.5, 2.0),
            b: rand_nonzero(&mut r, 0.5, 2.0),
            gamma1: rand_nonzero(&mut r, 0.5, 2.0),
            gamma2: rand_cx(&mut r, 1.0),
            sign_b: sign(&mut r),
            sign_rhs: sign(&mut r),
            ell,
            pi,
            g,
        };
        assert_eq!(p.case().unwrap() as usize, k % 3 + 1);
        let b = p.construct().unwrap();
        assert_eq!(b.theorem, format!("linear-reduction/case-{}", k % 3 + 1));
        assert_verifies(&b, "linear-reduction");
    }
}

#[test]
fn classical_sine_for_several_branches() {
    for k in -2..3 {
        let b = fermat_forge::solutions::classical::construct(&ClassicalParams::Sine {
            q: cx(2.0, 1.0),
            c: cx(0.7, -0.3),
            k,
            b: cx(0.1, 0.2),
        })
        .unwrap();
        assert_verifies(&b, "sine");
    }
}

#[test]
fn error_paths() {
    let c = Shift::real(&[1.0, 1.0]).unwrap();
    let bad_h = PeriodicPoly {
        linear: None,
        direction: Some(vec![re(1.0), re(0.0)]),
        coeffs: vec![re(0.0), re(1.0)],
        constant: re(0.0),
    };
    let p = TrinomialI {
        c: c.clone(),
        a: re(2.0),
        b: re(3.0),
        omega: re(4.0),
        gamma1: re(1.0),
        gamma2: re(0.0),
        xi: None,
        l: vec![re(0.1), re(0.2)],
        h: bad_h,
        b3: re(0.0),
        swap_roots: false,
        xi_sign: Sign::Plus,
    };
    assert!(matches!(p.construct(), Err(Error::PeriodicityViolation { .. })));
    assert!(matches!(solve_xi(re(4.0), re(9.0), re(6.0), re(1.0), re(0.0), re(0.3)), Err(Error::DegenerateOmega(_))));
    assert_eq!(solve_linear_exponent(re(0.0), &c, [0], None).unwrap_err(), Error::ZeroTarget);
    let pd = PddeI {
        c,
        a: re(0.0),
        b: re(1.0),
        axis: 0,
        h1: vec![re(1.0), re(1.0)],
        r1: re(0.0),
        h2: vec![re(1.0), re(1.0)],
        r2: re(0.0),
        alpha1: re(1.0),
        alpha2: re(1.0),
    };
    assert_eq!(pd.construct().unwrap_err(), Error::ZeroProduct);
    assert!(matches!(PddeI { axis: 5, a: re(1.0), ..pd }.construct(), Err(Error::AxisOutOfRange { .. })));
}

#[test]
fn xi_solver_round_trips() {
    let mut r = rng(49);
    let mut done = 0;
    while done < 100 {
        let (a, b) = (rand_nonzero(&mut r, 0.5, 2.0), rand_nonzero(&mut r, 0.5, 2.0));
        let omega = admissible_omega(&mut r, a, b);
        let (g1, g2, lc) = (rand_nonzero(&mut r, 0.5, 2.0), rand_cx(&mut r, 1.0), rand_cx(&mut r, 1.0));
        let Ok(s) = solve_xi(a, b, omega, g1, g2, lc) else { continue };
        let roots = omega_roots(a, b, omega).unwrap();
        let back = xi_relation(a, b, &roots, g1, g2, s.value);
        let e = (lc / 2.0).exp();
        assert!((back - e).norm() <= 1e-12 * e.norm().max(1.0), "{back} vs {e}");
        done += 1;
    }
}

#[test]
fn linear_exponent_solver_round_trips() {
    let mut r = rng(50);
    for _ in 0..100 {
        let n = r.gen_range(1..4);
        let c = rand_shift(&mut r, n, 2.0);
        let target = rand_nonzero(&mut r, 0.1, 10.0);
        let k = r.gen_range(-3..4);
        let base = rand_point(&mut r, n, 1.0);
        let s = solve_linear_exponent(target, &c, [k], Some(&base)).unwrap().remove(0);
        let l = s.linear.unwrap();
        let lc: Cx = l.iter().zip(c.as_slice()).map(|(x, y)| x * y).sum();
        assert!((lc.exp() - target).norm() <= 1e-12 * target.norm());
        assert!(s.residual <= 1e-12);
        assert!(((lc - target.ln()).im - 2.0 * PI * k as f64).abs() < 1e-9);
    }
}

#[test]
fn request_and_bundle_json_roundtrip() {
    for fx in fermat_forge::fixtures::registry() {
        for (_, req) in fx.branches().unwrap() {
            let s = serde_json::to_string(&req).unwrap();
            let back: ConstructRequest = serde_json::from_str(&s).unwrap();
            assert_eq!(back, req);
            if let Ok(b) = req.construct() {
                let s = serde_json::to_string(&b).unwrap();
                assert!(s.starts_with("{\"schema\":\"fermat-forge/1\""));
                let back: SolutionBundle = serde_json::from_str(&s).unwrap();
                assert_eq!(back, b);
            }
        }
    }
}
