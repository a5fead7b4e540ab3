//! Named regression instances: the worked examples plus coverage cases for
//! every constructor and equation family.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::algebra::{MPoly, PeriodicPoly, Shift};
use crate::equations::Sign;
use crate::expfun::{CertificateKind, ExpPoly, ExpTerm, SampleConfig};
use crate::growth::structural_order;
use crate::solutions::{
    required_exponentials, solve_linear_exponent, BinomialI, BinomialII, Check, ClassicalParams, ConstructRequest,
    LinearReduction, OmegaZeroI, OmegaZeroII, PddeI, PddeII, SolutionBundle, TrinomialI, TrinomialII,
};
use crate::{Cx, Result, SchemaTag};

type Branches = Vec<(String, ConstructRequest)>;

pub struct Fixture {
    pub id: &'static str,
    /// Where the instance comes from, in words.
    pub source: &'static str,
    pub tol: f64,
    branches: fn() -> Result<Branches>,
    extra: fn(&SolutionBundle) -> Vec<Check>,
}

impl Fixture {
    pub fn branches(&self) -> Result<Branches> {
        (self.branches)()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchSelect {
    All,
    Index(usize),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BranchOutcome {
    pub label: String,
    pub constructor: String,
    pub equation: Option<String>,
    pub passed: bool,
    pub certificate: Option<CertificateKind>,
    pub max_rel_residual: Option<f64>,
    pub structural_order: Option<u32>,
    pub checks: Vec<Check>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FixtureReport {
    pub schema: SchemaTag,
    pub id: String,
    pub source: String,
    pub tol: f64,
    pub passed: bool,
    pub branches: Vec<BranchOutcome>,
}

fn re(x: f64) -> Cx {
    Cx::new(x, 0.0)
}

fn cx(a: f64, b: f64) -> Cx {
    Cx::new(a, b)
}

fn ints(v: &[f64]) -> Vec<Cx> {
    v.iter().map(|&x| re(x)).collect()
}

fn shift(v: &[f64]) -> Shift {
    Shift::real(v).expect("finite fixture shift")
}

/// `coeff·s^k` in the direction `d`.
fn power(d: Vec<Cx>, k: usize) -> PeriodicPoly {
    let mut coeffs = vec![re(0.0); k + 1];
    coeffs[k] = re(1.0);
    PeriodicPoly { linear: None, direction: Some(d), coeffs, constant: re(0.0) }
}

/// `m·z + (e·z)^k + constant`.
fn periodic_q(m: &[f64], e: &[f64], k: usize, constant: Cx) -> PeriodicPoly {
    let mut p = power(ints(e), k);
    p.linear = Some(ints(m));
    p.constant = constant;
    p
}

fn sine_of(ell: &[Cx], freq: f64, cosine: bool) -> ExpPoly {
    let n = ell.len();
    let u = MPoly::linear(ell, re(0.0)).unwrap().scale(cx(0.0, freq));
    let (p, m) = if cosine { (re(0.5), re(0.5)) } else { (cx(0.0, -0.5), cx(0.0, 0.5)) };
    ExpPoly::from_terms(
        n,
        vec![
            ExpTerm { coef: MPoly::constant(n, p), expo: u.clone() },
            ExpTerm { coef: MPoly::constant(n, m), expo: -u },
        ],
    )
    .unwrap()
}

fn report(name: &str, residual: f64, tol: f64, enforced: bool) -> Check {
    Check { name: name.into(), residual, tol, holds: residual <= tol, enforced }
}

fn rel(x: Cx, y: Cx) -> f64 {
    (x - y).norm() / x.norm().max(y.norm()).max(f64::MIN_POSITIVE)
}

fn no_extra(_: &SolutionBundle) -> Vec<Check> {
    Vec::new()
}

fn order_check(b: &SolutionBundle, want: u32) -> Check {
    let got = structural_order(&b.f);
    report(&format!("structural order = {want}"), (got as f64 - want as f64).abs(), 0.0, true)
}

// ---- binomial difference examples ----------------------------------------

fn binomial_1_template() -> BinomialI {
    let s = vec![re(1.0), cx(2.0, 3.0), cx(0.0, 1.0)];
    BinomialI {
        c: shift(&[2.0, -1.0, 3.0]),
        a: re(7.0),
        b: re(1.0),
        a1: re(3f64.sqrt()),
        a0: re(5.0),
        l1: vec![re(3.0), cx(0.0, 1.0), re(PI)],
        l2: vec![re(1.0), re(2.0 * PI), cx(0.0, 1.0)],
        psi1: power(s.clone(), 10),
        psi2: power(s, 7),
        q1: periodic_q(&[4.0, 2.0, -2.0], &[2.0, 1.0, -1.0], 5, cx(0.0, PI / 12.0)),
        q2: periodic_q(&[5.0, 1.0, -3.0], &[2.0, 1.0, -1.0], 8, cx(0.0, PI / 13.0)),
        k1: cx(0.0, 3f64.sqrt() * PI / 7.0),
        k2: re(7f64.sqrt() * PI / 11.0),
        p_sign: Sign::Plus,
    }
}

fn binomial_2_template() -> BinomialI {
    let s = ints(&[3.0, 6.0, -1.0]);
    BinomialI {
        c: shift(&[5.0, -2.0, 3.0]),
        a: re(13.0),
        b: re(1.0),
        a1: re(5f64.sqrt()),
        a0: re(7f64.sqrt() / 2.0),
        l1: vec![re(2.0), re(1.0), cx(0.0, -1.0)],
        l2: vec![re(3.0), cx(0.0, 1.0), re(-2.0)],
        psi1: power(s.clone(), 13),
        psi2: power(s, 5),
        q1: periodic_q(&[4.0, 1.0, -6.0], &[1.0, 1.0, -1.0], 7, cx(0.0, PI / 4.0)),
        q2: periodic_q(&[6.0, 3.0, -8.0], &[1.0, 1.0, -1.0], 6, cx(0.0, PI / 9.0)),
        k1: cx(0.0, 5f64.sqrt() * PI / 2.0),
        k2: cx(0.0, 7f64.sqrt() * PI / 5.0),
        p_sign: Sign::Plus,
    }
}

/// The printed linear forms violate the sum condition on `e^{L₁(c)}`,
/// `e^{L₂(c)}`; both roots of the compatible pair with the printed product
/// are offered as branches.
fn binomial_branches(t: BinomialI) -> Result<Branches> {
    let half =
        (crate::algebra::exact_dot(&t.l1, t.c.as_slice()) + crate::algebra::exact_dot(&t.l2, t.c.as_slice())) / 2.0;
    let mut out = Vec::new();
    for (root, label) in [(0, "root +"), (1, "root -")] {
        out.push((label.to_string(), ConstructRequest::BinomialI(t.with_compatible_exponents(half, root)?)));
    }
    Ok(out)
}

fn binomial_extra(b: &SolutionBundle, half: Cx, linear: [Cx; 3], constant: Cx, order: u32) -> Vec<Check> {
    let got = b.derived("half exponent").unwrap_or_default();
    let lin: Vec<Cx> = (0..3)
        .map(|i| {
            let mut e = vec![0; 3];
            e[i] = 1;
            b.g.coeff(&e)
        })
        .collect();
    let lin_gap = lin.iter().zip(linear).map(|(x, y)| rel(*x, y)).fold(0.0, f64::max);
    vec![
        report("half exponent matches printed", rel(got, half), 1e-12, true),
        report("linear part of g matches printed", lin_gap, 1e-12, true),
        report("constant of g matches printed", (b.g.constant_term() - constant).norm(), 1e-12, false),
        order_check(b, order),
    ]
}

fn binomial_1_extra(b: &SolutionBundle) -> Vec<Check> {
    binomial_extra(b, cx(4.0 + PI / 2.0, 1.0), [re(4.0), cx(2.0 * PI, 1.0), cx(PI, 1.0)], cx(0.0, PI / 3.0), 10)
}

fn binomial_2_extra(b: &SolutionBundle) -> Vec<Check> {
    binomial_extra(b, cx(8.5, -2.5), [re(5.0), cx(1.0, 1.0), cx(-2.0, -1.0)], cx(0.0, 17f64.sqrt() * PI / 15.0), 13)
}

// ---- trinomial examples ----------------------------------------------------

fn trinomial_1_printed(ps: f64) -> (Cx, Cx) {
    let r10 = 10f64.sqrt();
    let ratio = (10.0 + ps * 9.0 * r10) / (5.0 * (4.0 + ps * 3.0 * r10));
    let prefactor = (-4.0 - ps * 3.0 * r10) / (-ps * 4.0 * r10);
    (re(ratio).ln(), re(prefactor))
}

fn trinomial_1_branches() -> Result<Branches> {
    let mut out = Vec::new();
    for (ps, pl) in [(1.0, '+'), (-1.0, '-')] {
        for swap in [false, true] {
            let (log_ratio, _) = trinomial_1_printed(ps);
            let p = TrinomialI {
                c: shift(&[5.0, 2.0, -3.0]),
                a: re(2.0),
                b: re(3.0),
                omega: re(4.0),
                gamma1: re(5.0),
                gamma2: re(-3.0),
                xi: None,
                l: vec![re(3.0), log_ratio, re(5.0)],
                h: power(ints(&[4.0, -1.0, 6.0]), 3),
                b3: cx(0.0, 5.0 * PI / 6.0),
                swap_roots: swap,
                xi_sign: Sign::Plus,
            };
            out.push((
                format!("printed {pl}, roots {}", if swap { "swapped" } else { "default" }),
                ConstructRequest::TrinomialI(p),
            ));
        }
    }
    Ok(out)
}

fn trinomial_1_extra(b: &SolutionBundle) -> Vec<Check> {
    let got = b.derived("prefactor").unwrap_or_default();
    let lc = b.derived("L(c)").unwrap_or_default();
    // the printed sign is the one whose logarithm produced L(c)
    let ps = if (lc - 2.0 * trinomial_1_printed(1.0).0).norm() < 1e-9 { 1.0 } else { -1.0 };
    let (_, want) = trinomial_1_printed(ps);
    vec![report("prefactor matches printed up to sign", rel(got * got, want * want), 1e-12, true)]
}

fn trinomial_2_printed(ps: f64) -> (Cx, Cx, Cx, Cx) {
    let r22 = 22f64.sqrt();
    let r66 = 66f64.sqrt();
    let q_plus = re((7.0 + ps * 2.0 * r22) / (3.0 * (5.0 + ps * r22)));
    let q_minus = re((7.0 - ps * 2.0 * r22) / (3.0 * (5.0 - ps * r22)));
    let p1 = re((-5.0 - ps * r22) / (-ps * 2.0 * r66));
    let p2 = -re((-5.0 + ps * r22) / (-ps * 2.0 * r66));
    (q_plus.ln(), q_minus.ln(), p1, p2)
}

fn trinomial_2_branches() -> Result<Branches> {
    let mut out = Vec::new();
    for (ps, pl) in [(1.0, '+'), (-1.0, '-')] {
        let (lp, lm, _, _) = trinomial_2_printed(ps);
        for swap in [false, true] {
            let s = ints(&[5.0, 4.0, 2.0]);
            let p = TrinomialII {
                c: shift(&[2.0, -3.0, 1.0]),
                a: re(3.0),
                b: re(1.0),
                omega: re(5.0),
                gamma1: re(3.0),
                gamma2: re(-2.0),
                l1: vec![re(6.0), re(4.0), lp],
                l2: vec![re(5.0), -lm / 3.0, re(-10.0)],
                h1: power(s.clone(), 2),
                h2: power(s, 3),
                d1: cx(0.0, 7.0 * PI / 8.0),
                d2: cx(0.0, 13.0 * PI / 11.0),
                swap_roots: swap,
            };
            out.push((
                format!("printed {pl}, roots {}", if swap { "swapped" } else { "default" }),
                ConstructRequest::TrinomialIi(p),
            ));
        }
    }
    Ok(out)
}

fn trinomial_2_extra(b: &SolutionBundle) -> Vec<Check> {
    let lc1 = b.derived("L1(c)").unwrap_or_default();
    let ps = if (lc1 - trinomial_2_printed(1.0).0).norm() < 1e-9 { 1.0 } else { -1.0 };
    let (_, _, p1, p2) = trinomial_2_printed(ps);
    let g1 = b.derived("first prefactor").unwrap_or_default();
    let g2 = b.derived("second prefactor").unwrap_or_default();
    vec![
        report("first prefactor matches printed", rel(g1, p1), 1e-12, true),
        report("second prefactor matches printed", rel(g2, p2), 1e-12, true),
        report("g constant 181πi/88", (b.g.constant_term() - cx(0.0, 181.0 * PI / 88.0)).norm(), 1e-12, true),
    ]
}

// ---- linear reduction examples ---------------------------------------------

struct LinearExample {
    sa: f64,
    sb: f64,
    gamma1: f64,
    gamma2: f64,
    sign_b: Sign,
    sign_rhs: Sign,
    cosine: bool,
    k: f64,
    c: f64,
}

fn linear_c() -> Shift {
    shift(&[1.0, 2.0, -1.0])
}

fn linear_ell() -> Vec<Cx> {
    ints(&[1.0, 0.0, 0.0])
}

/// `g = (2z₁ − z₂) + (z₁ + z₃)² + A`, periodic for `c = (1, 2, −1)`.
fn periodic_g() -> MPoly {
    let c = linear_c();
    PeriodicPoly {
        linear: Some(ints(&[2.0, -1.0, 0.0])),
        direction: Some(ints(&[1.0, 0.0, 1.0])),
        coeffs: vec![re(0.0), re(0.0), re(1.0)],
        constant: cx(0.3, 0.2),
    }
    .build(&c)
    .unwrap()
}

fn linear_request(e: &LinearExample, g: MPoly) -> ConstructRequest {
    ConstructRequest::LinearReduction(LinearReduction {
        c: linear_c(),
        a: re(e.sa * e.sa),
        b: re(e.sb * e.sb),
        gamma1: re(e.gamma1),
        gamma2: re(e.gamma2),
        sign_b: e.sign_b,
        sign_rhs: e.sign_rhs,
        ell: linear_ell(),
        pi: sine_of(&linear_ell(), 2.0 * PI, e.cosine),
        g,
    })
}

fn linear_examples() -> [LinearExample; 4] {
    let (r2, r3, r5, r7, r11) = (2f64.sqrt(), 3f64.sqrt(), 5f64.sqrt(), 7f64.sqrt(), 11f64.sqrt());
    [
        LinearExample {
            sa: 3.0,
            sb: 2.0,
            gamma1: r3,
            gamma2: r5,
            sign_b: Sign::Plus,
            sign_rhs: Sign::Plus,
            cosine: false,
            k: -(3.0 + 2.0 * r5) / (2.0 * r3),
            c: 1.0 / (3.0 + 2.0 * (r5 + r3)),
        },
        LinearExample {
            sa: r7,
            sb: r3,
            gamma1: 2.0,
            gamma2: -1.0,
            sign_b: Sign::Plus,
            sign_rhs: Sign::Minus,
            cosine: true,
            k: -(r7 - r3) / (2.0 * r3),
            c: -1.0 / (r7 + r3),
        },
        LinearExample {
            sa: r5,
            sb: r2,
            gamma1: 3.0,
            gamma2: -2.0,
            sign_b: Sign::Minus,
            sign_rhs: Sign::Plus,
            cosine: false,
            k: (r5 + 2.0 * r2) / (3.0 * r2),
            c: 1.0 / (r5 - r2),
        },
        LinearExample {
            sa: r2,
            sb: r3,
            gamma1: r7,
            gamma2: r11,
            sign_b: Sign::Minus,
            sign_rhs: Sign::Minus,
            cosine: true,
            k: (r2 - 33f64.sqrt()) / 21f64.sqrt(),
            c: -1.0 / (r2 - (r7 + r11) * r3),
        },
    ]
}

fn linear_branches(i: usize) -> Result<Branches> {
    let e = &linear_examples()[i];
    Ok(vec![("printed signs".into(), linear_request(e, periodic_g()))])
}

fn linear_extra(b: &SolutionBundle, i: usize) -> Vec<Check> {
    let e = &linear_examples()[i];
    vec![
        report("K matches printed", rel(b.derived("K").unwrap_or_default(), re(e.k)), 1e-12, true),
        report("C matches printed", rel(b.derived("C").unwrap_or_default(), re(e.c)), 1e-12, true),
    ]
}

// ---- coverage instances ----------------------------------------------------

fn sine_branches() -> Result<Branches> {
    Ok(vec![(
        "k = 0".into(),
        ConstructRequest::Classical(ClassicalParams::Sine { q: re(1.0), c: re(PI / 2.0), k: 0, b: re(0.0) }),
    )])
}

fn pair_branches() -> Result<Branches> {
    let h = MPoly::from_terms(2, [(vec![2, 1], re(1.0))])?;
    Ok(vec![("h = z1^2 z2".into(), ConstructRequest::Classical(ClassicalParams::CosSinPair { h }))])
}

fn binomial_ii_branches() -> Result<Branches> {
    let c = Shift::real(&[PI / 2.0, 1.0])?;
    let beta = sine_of(&ints(&[1.0, 0.0]), 1.0, false);
    Ok(vec![(
        "beta = sin z1".into(),
        ConstructRequest::BinomialIi(BinomialII {
            c,
            a: re(1.0),
            b: re(1.0),
            a1: re(1.0),
            a0: re(0.0),
            p: re(1.0),
            q: MPoly::one(2),
            beta,
            l21: vec![re(0.0), cx(0.0, 2.0 * PI)],
            b_const: re(0.0),
        }),
    )])
}

fn pdde_i_branches() -> Result<Branches> {
    Ok(vec![(
        "A = 1, c = π".into(),
        ConstructRequest::PddeI(PddeI {
            c: Shift::real(&[PI])?,
            a: re(1.0),
            b: re(1.0),
            axis: 0,
            h1: vec![cx(0.0, 1.0)],
            r1: re(0.0),
            h2: vec![cx(0.0, -1.0)],
            r2: re(0.0),
            alpha1: re(1.0),
            alpha2: re(1.0),
        }),
    )])
}

fn pdde_ii_branches() -> Result<Branches> {
    Ok(vec![(
        "gamma = 1".into(),
        ConstructRequest::PddeIi(PddeII {
            c: shift(&[1.0, 0.0, 2.0]),
            a: re(2.0),
            b: re(3.0),
            axis: 0,
            p: re(1.0),
            q: re(1.0),
            gamma: ExpPoly::constant(3, re(1.0)),
            l1: vec![re(0.5), cx(0.0, 1.0), re(-0.25)],
            h: PeriodicPoly {
                linear: None,
                direction: Some(ints(&[0.0, 2.0, 0.0])),
                coeffs: vec![re(0.0), re(1.0), re(0.0), re(0.5)],
                constant: re(0.0),
            },
            r5: None,
        }),
    )])
}

fn omega_zero_i_branches() -> Result<Branches> {
    let mut out = Vec::new();
    for sign in [Sign::Plus, Sign::Minus] {
        out.push((
            format!("xi sign {}", sign.symbol()),
            ConstructRequest::OmegaZeroI(OmegaZeroI {
                c: shift(&[1.0, -1.0, 2.0]),
                a: re(2.0),
                b: re(5.0),
                gamma1: re(1.5),
                gamma2: re(-0.5),
                xi: None,
                l: vec![re(0.3), cx(0.2, 0.1), re(0.4)],
                h: power(ints(&[1.0, 1.0, 0.0]), 2),
                a_const: cx(0.0, 0.25),
                xi_sign: sign,
            }),
        ));
    }
    Ok(out)
}

fn omega_zero_ii_branches() -> Result<Branches> {
    let c = shift(&[1.0, 2.0]);
    let (a, b, g1, g2) = (re(1.0), re(1.0), re(1.0), re(0.0));
    let (r1, r2) = OmegaZeroII::required_exponentials(a, b, g1, g2);
    let l1 = solve_linear_exponent(r1, &c, [0], Some(&[re(0.5), re(0.0)]))?.remove(0);
    let l2 = solve_linear_exponent(r2, &c, [0], Some(&[re(0.0), re(-0.75)]))?.remove(0);
    let d = ints(&[2.0, -1.0]);
    Ok(vec![(
        "gamma2 = 0".into(),
        ConstructRequest::OmegaZeroIi(OmegaZeroII {
            c,
            a,
            b,
            gamma1: g1,
            gamma2: g2,
            l1: l1.linear.unwrap(),
            l2: l2.linear.unwrap(),
            h1: power(d.clone(), 2),
            h2: power(d, 1),
            b1: re(0.1),
            b2: cx(0.0, 0.2),
        }),
    )])
}

fn linear_case_branches(case: u8) -> Result<Branches> {
    let e = &linear_examples()[0];
    let g = match case {
        1 => MPoly::constant(3, cx(0.7, 0.0)),
        _ => {
            // drift g(z+c) − g(z) = 0.4 − 0.1 = 0.3
            let lin = MPoly::linear(&ints(&[0.4, 0.0, 0.1]), re(0.5))?;
            lin.try_add(&periodic_g())?
        }
    };
    Ok(vec![(format!("case {case}"), linear_request(e, g))])
}

fn trinomial_random_ii_branches() -> Result<Branches> {
    let c = Shift::new(vec![cx(1.0, 0.5), re(-2.0), re(0.5)])?;
    let (a, b, omega, g1, g2) = (cx(2.0, 1.0), re(3.0), cx(0.5, -1.0), re(1.5), cx(0.0, 0.7));
    let p = TrinomialII {
        c: c.clone(),
        a,
        b,
        omega,
        gamma1: g1,
        gamma2: g2,
        l1: vec![],
        l2: vec![],
        h1: PeriodicPoly { linear: None, direction: None, coeffs: vec![], constant: re(0.0) },
        h2: PeriodicPoly { linear: None, direction: None, coeffs: vec![], constant: re(0.0) },
        d1: re(0.0),
        d2: re(0.0),
        swap_roots: false,
    };
    let (r1, r2) = required_exponentials(a, b, &p.roots()?, g1, g2);
    let l1 = solve_linear_exponent(r1, &c, [0], Some(&[re(0.2), re(0.1), re(0.0)]))?.remove(0);
    let l2 = solve_linear_exponent(r2, &c, [1], Some(&[re(0.0), re(0.3), re(-0.2)]))?.remove(0);
    let d = crate::algebra::PeriodicDirection::structured(&c, 0, 1)?;
    Ok(vec![(
        "complex coefficients".into(),
        ConstructRequest::TrinomialIi(TrinomialII {
            l1: l1.linear.unwrap(),
            l2: l2.linear.unwrap(),
            h1: PeriodicPoly {
                direction: Some(d.direction().to_vec()),
                coeffs: vec![re(0.0), re(0.0), re(1.0)],
                ..p.h1.clone()
            },
            ..p
        }),
    )])
}

pub fn registry() -> Vec<Fixture> {
    vec![
        Fixture {
            id: "thm11-sine",
            source: "classical sine solution f = sin z of f(z)^2 + f(z + π/2)^2 = 1",
            tol: 1e-9,
            branches: sine_branches,
            extra: no_extra,
        },
        Fixture {
            id: "ex-binomial-1",
            source: "worked example: 7f^2 + P^2(√3 f(z+c) + 5f)^2 = Q1 Q2 e^g, c = (2,-1,3), exponents s^10 and s^7",
            tol: 1e-8,
            branches: || binomial_branches(binomial_1_template()),
            extra: binomial_1_extra,
        },
        Fixture {
            id: "ex-binomial-2",
            source:
                "worked example: 13f^2 + P^2(√5 f(z+c) + (√7/2) f)^2 = Q1 Q2 e^g, c = (5,-2,3), exponents s^13 and s^5",
            tol: 1e-8,
            branches: || binomial_branches(binomial_2_template()),
            extra: binomial_2_extra,
        },
        Fixture {
            id: "ex-trinomial-1",
            source: "worked example: 2f^2 + 8f[5f(z+c) - 3f] + 3[5f(z+c) - 3f]^2 = e^g, c = (5,2,-3)",
            tol: 1e-8,
            branches: trinomial_1_branches,
            extra: trinomial_1_extra,
        },
        Fixture {
            id: "ex-trinomial-2",
            source: "worked example: 3f^2 + 10f[3f(z+c) - 2f] + [3f(z+c) - 2f]^2 = e^g, c = (2,-3,1)",
            tol: 1e-8,
            branches: trinomial_2_branches,
            extra: trinomial_2_extra,
        },
        Fixture {
            id: "rem35-case2-a",
            source: "worked example: 3f + 2(√3 f(z+c) + √5 f) = e^{g/2}, sine factor",
            tol: 1e-9,
            branches: || linear_branches(0),
            extra: |b| linear_extra(b, 0),
        },
        Fixture {
            id: "rem35-case2-b",
            source: "worked example: √7 f + √3(2f(z+c) - f) = -e^{g/2}, cosine factor",
            tol: 1e-9,
            branches: || linear_branches(1),
            extra: |b| linear_extra(b, 1),
        },
        Fixture {
            id: "rem35-case2-c",
            source: "worked example: √5 f - √2(3f(z+c) - 2f) = e^{g/2}, sine factor",
            tol: 1e-9,
            branches: || linear_branches(2),
            extra: |b| linear_extra(b, 2),
        },
        Fixture {
            id: "rem35-case2-d",
            source: "worked example: √2 f - √3(√7 f(z+c) + √11 f) = -e^{g/2}, cosine factor",
            tol: 1e-9,
            branches: || linear_branches(3),
            extra: |b| linear_extra(b, 3),
        },
        Fixture {
            id: "rem35-case1",
            source: "linear reduction with constant exponent",
            tol: 1e-9,
            branches: || linear_case_branches(1),
            extra: no_extra,
        },
        Fixture {
            id: "rem35-case3",
            source: "linear reduction with an exponent drifting linearly along c",
            tol: 1e-9,
            branches: || linear_case_branches(3),
            extra: no_extra,
        },
        Fixture {
            id: "thm21-ii",
            source: "single-exponential binomial family f = sin(z1) e^{2πi z2}",
            tol: 1e-9,
            branches: binomial_ii_branches,
            extra: no_extra,
        },
        Fixture {
            id: "thm22-i-sine",
            source: "f(z+c)^2 + f'(z)^2 = 1 with f = -cos z, c = π",
            tol: 1e-9,
            branches: pdde_i_branches,
            extra: no_extra,
        },
        Fixture {
            id: "thm22-ii-single",
            source: "single-exponential differential-difference family with constant γ",
            tol: 1e-9,
            branches: pdde_ii_branches,
            extra: no_extra,
        },
        Fixture {
            id: "thm23-ii-complex",
            source: "two-exponential trinomial family with complex coefficients and shift",
            tol: 1e-9,
            branches: trinomial_random_ii_branches,
            extra: no_extra,
        },
        Fixture {
            id: "thm24-i",
            source: "ω = 0 single-exponential family with solved ξ",
            tol: 1e-9,
            branches: omega_zero_i_branches,
            extra: no_extra,
        },
        Fixture {
            id: "thm24-ii",
            source: "ω = 0 two-exponential family, γ1 = 1, γ2 = 0",
            tol: 1e-9,
            branches: omega_zero_ii_branches,
            extra: no_extra,
        },
        Fixture {
            id: "saleeby-m2",
            source: "pair (cos h, sin h) solving f^2 + g^2 = 1, h = z1^2 z2",
            tol: 1e-12,
            branches: pair_branches,
            extra: no_extra,
        },
    ]
}

pub fn find(id: &str) -> Option<Fixture> {
    registry().into_iter().find(|f| f.id == id)
}

/// Construct and verify every selected branch.
pub fn run(fx: &Fixture, cfg: &SampleConfig, select: BranchSelect) -> FixtureReport {
    let mut outcomes = Vec::new();
    match fx.branches() {
        Err(e) => outcomes.push(BranchOutcome {
            label: "parameters".into(),
            constructor: String::new(),
            equation: None,
            passed: false,
            certificate: None,
            max_rel_residual: None,
            structural_order: None,
            checks: Vec::new(),
            error: Some(e.to_string()),
        }),
        Ok(branches) => {
            for (i, (label, req)) in branches.into_iter().enumerate() {
                if let BranchSelect::Index(k) = select {
                    if k != i {
                        continue;
                    }
                }
                outcomes.push(run_branch(fx, cfg, label, &req));
            }
        }
    }
    FixtureReport {
        schema: SchemaTag,
        id: fx.id.to_string(),
        source: fx.source.to_string(),
        tol: cfg.tol,
        passed: outcomes.iter().any(|o| o.passed),
        branches: outcomes,
    }
}

fn run_branch(fx: &Fixture, cfg: &SampleConfig, label: String, req: &ConstructRequest) -> BranchOutcome {
    let mut out = BranchOutcome {
        label,
        constructor: req.arm().to_string(),
        equation: None,
        passed: false,
        certificate: None,
        max_rel_residual: None,
        structural_order: None,
        checks: Vec::new(),
        error: None,
    };
    let bundle = match req.construct() {
        Ok(b) => b,
        Err(e) => {
            out.error = Some(e.to_string());
            return out;
        }
    };
    out.structural_order = Some(structural_order(&bundle.f));
    out.checks = bundle.checks.clone();
    out.checks.extend((fx.extra)(&bundle));
    match bundle.verify(cfg) {
        Ok(r) => {
            out.equation = Some(r.equation.clone());
            out.certificate = Some(r.certificate);
            out.max_rel_residual = Some(r.max_rel_residual);
            out.passed = r.passed && out.checks.iter().all(|c| c.holds || !c.enforced);
        }
        Err(e) => out.error = Some(e.to_string()),
    }
    out
}

/// Constructor and equation arms exercised by the registry.
pub fn coverage() -> (Vec<String>, Vec<String>) {
    let mut arms = Vec::new();
    let mut eqs = Vec::new();
    for fx in registry() {
        for (_, req) in fx.branches().unwrap_or_default() {
            arms.push(req.arm().to_string());
            if let Ok(b) = req.construct() {
                if let Some(e) = &b.equation {
                    eqs.push(e.kind().to_string());
                }
            }
        }
    }
    arms.sort();
    arms.dedup();
    eqs.sort();
    eqs.dedup();
    (arms, eqs)
}
