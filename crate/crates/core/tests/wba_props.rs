use qpwb_core::wba::{build_weights, convergence_profile, wb_average, WeightKind};
use qpwb_core::xprec::{exp_i2pi, golden};
use qpwb_core::{XComplex, XReal};

fn sigma(j: u64) -> impl Fn(usize) -> XComplex {
    let rho = golden();
    move |n| exp_i2pi(rho.mul_frac(j * n as u64))
}

fn magnitudes(kind: WeightKind, j: u64, checkpoints: &[usize]) -> Vec<f64> {
    convergence_profile(sigma(j), kind, checkpoints)
        .unwrap()
        .into_iter()
        .map(|(_, v)| v.abs().to_f64())
        .collect()
}

#[test]
fn golden_mode_average_vanishes_at_1e5() {
    let xs: Vec<XComplex> = (0..100_000).map(sigma(1)).collect();
    let t = build_weights(WeightKind::Bump(2), xs.len()).unwrap();
    let m = wb_average(&xs, &t).unwrap().abs().to_f64();
    assert!(m <= 1e-25, "{m:e}");
}

// Bump(2) reaches the double-word floor near N = 500 for the golden mean,
// so the decay is measured on the short windows where it is visible.
#[test]
fn super_convergence_beats_every_power() {
    let ns = [50usize, 100, 200];
    for j in [1, 2] {
        let mags = magnitudes(WeightKind::Bump(2), j, &ns);
        for m in 0..=5 {
            let scaled: Vec<f64> = ns.iter().zip(&mags).map(|(&n, v)| v * (n as f64).powi(m)).collect();
            assert!(scaled[1] < scaled[0] && scaled[2] < scaled[1], "j={j} m={m}: {scaled:?}");
        }
        // each doubling of N gains more than the previous one
        assert!(mags[1] / mags[2] > mags[0] / mags[1], "j={j}: {mags:?}");
    }
}

#[test]
fn long_windows_sit_at_the_rounding_floor() {
    for j in [1, 2] {
        let mags = magnitudes(WeightKind::Bump(2), j, &[1_000, 10_000, 100_000]);
        assert!(mags.iter().all(|&m| m <= 1e-32), "j={j}: {mags:?}");
    }
}

#[test]
fn uniform_gains_at_most_two_decades() {
    let u = magnitudes(WeightKind::Uniform, 1, &[1_000, 10_000, 100_000]);
    assert!(u[0] / u[1] <= 1e2 && u[1] / u[2] <= 1e2, "{u:?}");
}

#[test]
fn uniform_small_window_matches_direct_sum() {
    let xs: Vec<XComplex> = (0..1000).map(sigma(1)).collect();
    let t = build_weights(WeightKind::Uniform, 1000).unwrap();
    let avg = wb_average(&xs, &t).unwrap();
    // closed form of the geometric sum: (1 - λ^N) / (N (1 - λ))
    let lam = exp_i2pi(golden());
    let lam_n = exp_i2pi(golden().mul_frac(1000));
    let direct = (XComplex::ONE - lam_n) / ((XComplex::ONE - lam) * XReal::from_f64(1000.0));
    assert!((avg - direct).abs().to_f64() <= 1e-30);
}

#[test]
fn sum_to_one_at_a_million() {
    for kind in [WeightKind::Bump(1), WeightKind::Bump(2), WeightKind::IteratedBump, WeightKind::Uniform] {
        for n in [2usize, 10, 1000, 1_000_000] {
            let Ok(t) = build_weights(kind, n) else {
                assert!(kind == WeightKind::IteratedBump && n < 1000);
                continue;
            };
            let s: XReal = qpwb_core::sum::pairwise_sum(t.weights().iter().copied());
            assert!((s - XReal::ONE).abs().to_f64() <= 1e-30, "{kind} {n}");
        }
    }
}
