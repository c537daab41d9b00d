//! Map evaluations against a 256-bit software float.

use astro_float::{BigFloat, Consts, RoundingMode};
use qpwb_core::maps::{
    henon_eigenvalues, henon_fixed_point, henon_step, iterate, siegel_derivative, siegel_step, Generator,
    HenonParams, SiegelMapParams,
};
use qpwb_core::xprec::golden;
use qpwb_core::{XComplex, XReal};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const P: usize = 256;
const RM: RoundingMode = RoundingMode::ToEven;

fn big(x: XReal) -> BigFloat {
    BigFloat::from_f64(x.hi(), P).add(&BigFloat::from_f64(x.lo(), P), P, RM)
}

fn x(s: &str) -> XReal {
    s.parse().unwrap()
}

#[derive(Clone)]
struct C(BigFloat, BigFloat);

impl C {
    fn of(z: XComplex) -> Self {
        C(big(z.re), big(z.im))
    }
    fn add(&self, o: &C) -> C {
        C(self.0.add(&o.0, P, RM), self.1.add(&o.1, P, RM))
    }
    fn sub(&self, o: &C) -> C {
        C(self.0.sub(&o.0, P, RM), self.1.sub(&o.1, P, RM))
    }
    fn mul(&self, o: &C) -> C {
        C(
            self.0.mul(&o.0, P, RM).sub(&self.1.mul(&o.1, P, RM), P, RM),
            self.0.mul(&o.1, P, RM).add(&self.1.mul(&o.0, P, RM), P, RM),
        )
    }
    /// Distance to an XComplex, as f64.
    fn dist(&self, z: XComplex) -> f64 {
        let d = C::of(z).sub(self);
        let n = d.0.mul(&d.0, P, RM).add(&d.1.mul(&d.1, P, RM), P, RM).sqrt(P, RM);
        let mut cc = Consts::new().unwrap();
        n.format(astro_float::Radix::Dec, RM, &mut cc).unwrap().parse::<f64>().unwrap()
    }
}

fn cis(t: &BigFloat, cc: &mut Consts) -> C {
    C(t.cos(P, RM, cc), t.sin(P, RM, cc))
}

#[test]
fn siegel_step_at_example_point() {
    let mut cc = Consts::new().unwrap();
    let rho = golden();
    let p = SiegelMapParams::new(rho).unwrap();
    let z = XComplex::from_f64(0.37, 0.0);
    let tau = cc.pi(P, RM).mul(&BigFloat::from_f64(2.0, P), P, RM);
    let lam = cis(&big(rho).mul(&tau, P, RM), &mut cc);
    let zb = C::of(z);
    let want = zb.mul(&zb).add(&lam.mul(&zb));
    assert!(want.dist(siegel_step(&p, z)) <= 1e-30);
}

#[test]
fn henon_step_matches_oracle() {
    let mut cc = Consts::new().unwrap();
    let (theta, phi) = (x("0.664"), x("2.032"));
    let h = HenonParams::new(theta, phi).unwrap();
    let x0 = XComplex::new(x("-0.500"), x("0.126"));
    let y0 = XComplex::new(x("-0.387"), x("-0.163"));
    let (tb, pb) = (big(theta), big(phi));
    let (ct, cp) = (tb.cos(P, RM, &mut cc), pb.cos(P, RM, &mut cc));
    let alpha = ct.mul(&cp, P, RM).mul(&BigFloat::from_f64(2.0, P), P, RM).sub(&cp.mul(&cp, P, RM), P, RM);
    let beta = cis(&tb, &mut cc);
    let (xb, yb) = (C::of(x0), C::of(y0));
    let inner = yb.mul(&yb).add(&C(alpha, BigFloat::from_f64(0.0, P)));
    let want = beta.mul(&inner).sub(&beta.mul(&beta).mul(&xb));
    let (a, b) = henon_step(&h, x0, y0);
    assert_eq!(a, y0);
    assert!(want.dist(b) <= 1e-30);
}

#[test]
fn fixed_point_residual_for_random_angles() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..100 {
        let h = HenonParams::new(XReal::from_f64(rng.gen_range(-3.2..3.2)), XReal::from_f64(rng.gen_range(-3.2..3.2)))
            .unwrap();
        let (fx, fy) = henon_fixed_point(&h);
        let (a, b) = henon_step(&h, fx, fy);
        assert!((a - fx).abs().to_f64() <= 1e-30 && (b - fy).abs().to_f64() <= 1e-30);
    }
}

#[test]
fn finite_difference_jacobian_determinant() {
    // The map is quadratic, so central differences are exact up to rounding.
    let hstep = XReal::from_f64(0.25);
    for h in [
        HenonParams::new(x("0.664"), x("2.032")).unwrap(),
        HenonParams::from_rotations(golden(), qpwb_core::xprec::sqrt3_half()).unwrap(),
    ] {
        let (fx, fy) = henon_fixed_point(&h);
        let col = |dx: XComplex, dy: XComplex| {
            let (a1, b1) = henon_step(&h, fx + dx, fy + dy);
            let (a0, b0) = henon_step(&h, fx - dx, fy - dy);
            let s = XReal::ONE / (hstep * XReal::TWO);
            ((a1 - a0) * s, (b1 - b0) * s)
        };
        let d = XComplex::from_real(hstep);
        let (j00, j10) = col(d, XComplex::ZERO);
        let (j01, j11) = col(XComplex::ZERO, d);
        let det = j00 * j11 - j01 * j10;
        let (l1, l2) = henon_eigenvalues(&h);
        assert!((det - l1 * l2).abs().to_f64() <= 1e-28);
        // det DF = β^2; the matrix DF/β has determinant +1
        let unit = det / h.beta().sqr();
        assert!((unit - XComplex::ONE).abs().to_f64() <= 1e-28);
    }
}

#[test]
fn siegel_derivative_at_origin() {
    let p = SiegelMapParams::new(golden()).unwrap();
    let step = XReal::from_f64(1e-10);
    let d = (siegel_step(&p, XComplex::from_real(step)) - siegel_step(&p, XComplex::from_real(-step)))
        / (step * XReal::TWO);
    assert!((d - p.lambda()).abs().to_f64() <= 1e-20);
    assert!((siegel_derivative(&p, XComplex::ZERO).abs() - XReal::ONE).abs().to_f64() <= 1e-30);
}

#[test]
fn rotation_identities_of_example_2a() {
    let h = HenonParams::from_rotations(golden(), qpwb_core::xprec::sqrt3_half()).unwrap();
    let (r1, r2) = h.rotation_turns();
    assert!((r1 - golden()).abs().to_f64() <= 1e-31);
    assert!((r2 - qpwb_core::xprec::sqrt3_half()).abs().to_f64() <= 1e-31);
    let cphi = henon_fixed_point(&h).0.re;
    assert!((cphi.to_f64() - 0.71155).abs() < 1e-5, "{cphi}");
    let (l1, l2) = henon_eigenvalues(&h);
    assert!((l1.arg_turns().unwrap() - golden()).abs().to_f64() <= 1e-30);
    assert!((l2.arg_turns().unwrap() - qpwb_core::xprec::sqrt3_half()).abs().to_f64() <= 1e-30);
}

#[test]
fn orbits_are_deterministic_and_bounded() {
    let h = HenonParams::new(x("0.664"), x("2.032")).unwrap();
    let g = Generator::Henon(h);
    let z0 = [XComplex::new(x("-0.500"), x("0.126")), XComplex::new(x("-0.387"), x("-0.163"))];
    let a = iterate(&g, &z0, 1_000_000, 1).unwrap();
    let b = iterate(&g, &z0, 1_000_000, 1).unwrap();
    assert_eq!(a, b);
    let m = a.points().map(|p| p[0].abs().to_f64().max(p[1].abs().to_f64())).fold(0.0, f64::max);
    assert!(m < 2.0, "{m}");

    let s = Generator::Siegel(SiegelMapParams::new(golden()).unwrap());
    let t = iterate(&s, &[XComplex::from_f64(0.37, 0.0)], 400_000, 1).unwrap();
    assert!(t.component(0).all(|z| z.abs().to_f64() < 1.0));
}
