//! Acceptance gate: one test per validation target, one `[PASS]`/`[FAIL]`
//! line per target (visible with `--nocapture`), tolerances pinned here.
//!
//! These anchor the library against its reference operating points:
//! depth-8 and depth-15 improvement factors, the deep-multiplexing limit,
//! Monte Carlo agreement, truncation behavior, the spatial-scheme
//! reconstruction, determinism, and the waiting-time crossover.

use photon_mux::{
    analytic_p_success, asymptotic_gain, binomial_loss, improvement_factor, p_success, pnr_herald,
    snr, solve_nbar_for_snr, spatial_improvement_factor, thermal_pmf, truncation_delta,
    waiting_time, DetectorModel, ImprovementMode, JointPairState, PhotonNumberDist, SourceParams,
    SpatialParams,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

const ETA_D: f64 = 0.7;
const ETA_L: f64 = 0.8;
const SNR_TARGET: f64 = 100.0;
const REP_RATE_HZ: f64 = 80e6;

fn report(name: &str, passed: bool, detail: &str) {
    println!(
        "[{}] {name}: {detail}",
        if passed { "PASS" } else { "FAIL" }
    );
    assert!(passed, "{name}: {detail}");
}

fn within(value: f64, target: f64, rtol: f64) -> bool {
    (value - target).abs() <= rtol * target.abs()
}

fn bin() -> std::process::Command {
    std::process::Command::new(env!("CARGO_BIN_EXE_photon-mux"))
}

#[test]
fn a01_fixed_snr_improvement_at_depth_8() {
    const TARGET: f64 = 6.06;
    const RTOL: f64 = 0.10;
    const BUDGET: Duration = Duration::from_secs(60);

    let start = Instant::now();
    let device = SourceParams::new(0.0, ETA_D, ETA_L, 8).unwrap();
    let factor =
        improvement_factor(&device, ImprovementMode::FixedSnr { target: SNR_TARGET }).unwrap();
    let elapsed = start.elapsed();

    report(
        "criterion 1",
        within(factor, TARGET, RTOL) && elapsed < BUDGET,
        &format!(
            "fixed-SNR improvement at depth 8 = {factor:.4} (target {TARGET} ±{:.0}%), \
             computed in {elapsed:.2?} (budget {BUDGET:?})",
            RTOL * 100.0
        ),
    );
}

#[test]
fn a02_fixed_pump_improvement_at_depth_8() {
    const TARGET: f64 = 3.32;
    const RTOL: f64 = 0.10;

    let device = SourceParams::new(0.01, ETA_D, ETA_L, 8).unwrap();
    let factor = improvement_factor(&device, ImprovementMode::FixedNbar).unwrap();

    report(
        "criterion 2",
        within(factor, TARGET, RTOL),
        &format!(
            "fixed-pump improvement at depth 8, n̄=0.01 = {factor:.4} (target {TARGET} ±{:.0}%)",
            RTOL * 100.0
        ),
    );
}

#[test]
fn a03_fixed_snr_improvement_at_depth_15_reaches_ten() {
    const RANGE: (f64, f64) = (8.0, 12.0);

    // Design target: a factor-of-ten improvement at depth 15. The computed
    // improvement saturates as depth grows — each added pulse contributes
    // through one more lossy pass, a geometric tail bounded near 8.3 for
    // these efficiencies — and reaches ~7.78 at depth 15, short of this
    // range. The assertion keeps the target as stated rather than what
    // the model attains; see README "Validation targets" for the analysis.
    let device = SourceParams::new(0.0, ETA_D, ETA_L, 15).unwrap();
    let factor =
        improvement_factor(&device, ImprovementMode::FixedSnr { target: SNR_TARGET }).unwrap();

    report(
        "criterion 3",
        factor >= RANGE.0 && factor <= RANGE.1,
        &format!(
            "fixed-SNR improvement at depth 15 = {factor:.4} (target range [{}, {}])",
            RANGE.0, RANGE.1
        ),
    );
}

#[test]
fn a04_deep_multiplexing_approaches_asymptotic_gain() {
    const RTOL: f64 = 0.02;
    const NBAR: f64 = 1e-3;

    let device = SourceParams::new(NBAR, ETA_D, ETA_L, 200).unwrap();
    let reference = device.unswitched_baseline();
    let ratio = p_success(&device).unwrap() / p_success(&reference).unwrap();
    let limit = asymptotic_gain(ETA_L).unwrap();

    report(
        "criterion 4",
        within(ratio, limit, RTOL),
        &format!(
            "p_success(depth 200)/p_success(reference) at n̄={NBAR} = {ratio:.5} \
             (limit η_L/(1−η_L) = {limit:.2} ±{:.0}%)",
            RTOL * 100.0
        ),
    );
}

#[test]
fn a05_monte_carlo_agreement_on_the_validation_grid() {
    const BUDGET: Duration = Duration::from_secs(300);

    let dir = tempfile::tempdir().unwrap();
    let start = Instant::now();
    let out = bin()
        .args([
            "mc-validate",
            "--trials",
            "1000000",
            "--seed",
            "42",
            "--output",
            dir.path().to_str().unwrap(),
        ])
        .output()
        .unwrap();
    let elapsed = start.elapsed();

    let csv = std::fs::read_to_string(dir.path().join("mc_validate.csv")).unwrap_or_default();
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    let all_passed = !rows.is_empty() && rows.iter().all(|r| r.ends_with(",true"));

    report(
        "criterion 5",
        out.status.code() == Some(0) && rows.len() == 36 && all_passed && elapsed < BUDGET,
        &format!(
            "mc-validate exit {:?}, {}/{} checks within 3 combined standard errors, \
             {elapsed:.2?} (budget {BUDGET:?})",
            out.status.code(),
            rows.iter().filter(|r| r.ends_with(",true")).count(),
            rows.len()
        ),
    );
}

#[test]
fn a06_truncation_consistency_with_the_closed_form() {
    const EXACT_TOL: f64 = 1e-12;
    const SMALL_PUMP_BOUND: f64 = 1e-4;

    // With a one-pair truncation the numerics must reproduce the closed
    // form identically, for arbitrary parameters.
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst_gap = 0.0f64;
    for _ in 0..100 {
        let params = SourceParams::new(
            rng.random::<f64>() * 2.0,
            rng.random::<f64>(),
            rng.random::<f64>(),
            rng.random_range(1..=20),
        )
        .unwrap()
        .with_n_max(1)
        .unwrap();
        let gap = (p_success(&params).unwrap() - analytic_p_success(&params).unwrap()).abs();
        worst_gap = worst_gap.max(gap);
    }

    // At the default truncation the closed form stays accurate in the
    // low-pump regime for every depth...
    let mut worst_small = 0.0f64;
    for m in 1..=15 {
        for i in 0..=30 {
            let nbar = 1e-6 * 1000f64.powf(i as f64 / 30.0); // [1e-6, 1e-3]
            let params = SourceParams::new(nbar, ETA_D, ETA_L, m).unwrap();
            let delta = truncation_delta(&params, &[5]).unwrap()[0].1;
            worst_small = worst_small.max(delta.abs());
        }
    }

    // ...and the gap grows with pump strength.
    let at = |nbar: f64| {
        let params = SourceParams::new(nbar, ETA_D, ETA_L, 1).unwrap();
        truncation_delta(&params, &[5]).unwrap()[0].1
    };
    let (gap_hi, gap_lo) = (at(0.1), at(1e-3));

    report(
        "criterion 6",
        worst_gap < EXACT_TOL && worst_small < SMALL_PUMP_BOUND && gap_hi.abs() > gap_lo.abs(),
        &format!(
            "one-pair truncation vs closed form: worst gap {worst_gap:.2e} (tol {EXACT_TOL:.0e}) \
             over 100 random parameter sets; |Δp| ≤ {worst_small:.2e} (bound {SMALL_PUMP_BOUND:.0e}) \
             for n̄ ≤ 1e-3, depths 1–15; |Δp(0.1)| = {:.3e} > |Δp(1e-3)| = {:.3e}",
            gap_hi.abs(),
            gap_lo.abs()
        ),
    );
}

#[test]
fn a07_spatial_scheme_reconstruction() {
    const TARGET_SNR_MODE: f64 = 7.40;
    const TARGET_PUMP_MODE: f64 = 4.03;
    const RTOL: f64 = 0.20;

    let tree = SpatialParams::new(0.01, ETA_D, ETA_L, 3).unwrap();
    let at_snr =
        spatial_improvement_factor(&tree, ImprovementMode::FixedSnr { target: SNR_TARGET })
            .unwrap();
    let at_pump = spatial_improvement_factor(&tree, ImprovementMode::FixedNbar).unwrap();

    report(
        "criterion 7",
        within(at_snr, TARGET_SNR_MODE, RTOL) && within(at_pump, TARGET_PUMP_MODE, RTOL),
        &format!(
            "spatial tree depth 3: fixed-SNR improvement {at_snr:.4} (target {TARGET_SNR_MODE} \
             ±{:.0}%), fixed-pump improvement {at_pump:.4} (target {TARGET_PUMP_MODE} ±{:.0}%)",
            RTOL * 100.0,
            RTOL * 100.0
        ),
    );
}

#[test]
fn a08_invariants_and_deterministic_output() {
    const COMP_TOL: f64 = 1e-12;
    const SOLVER_RTOL: f64 = 1e-3;

    // Loss-channel composition and mean scaling.
    let dist = PhotonNumberDist::new(vec![0.3, 0.25, 0.2, 0.15, 0.1]).unwrap();
    let composed = binomial_loss(&binomial_loss(&dist, 0.9).unwrap(), 0.7).unwrap();
    let direct = binomial_loss(&dist, 0.63).unwrap();
    let comp_gap: f64 = composed
        .probs()
        .iter()
        .zip(direct.probs())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    let mean_gap = (binomial_loss(&dist, 0.41).unwrap().mean() - 0.41 * dist.mean()).abs();

    // Normalization laws: conditional herald output is a distribution, and
    // the loss channel preserves total mass.
    let pairs = JointPairState::thermal(0.2, 5).unwrap();
    let herald = pnr_herald(&pairs, &DetectorModel::pnr(0.7).unwrap(), 1).unwrap();
    let herald_mass = herald.idler.as_ref().unwrap().total_mass();
    let thermal = thermal_pmf(0.2, 5).unwrap();
    let mass_gap =
        (binomial_loss(&thermal, 0.37).unwrap().total_mass() - thermal.total_mass()).abs();

    // Monotonicity spot checks on the documented grid corners.
    let p = |nbar: f64, eta_l: f64, m: u32| {
        p_success(&SourceParams::new(nbar, ETA_D, eta_l, m).unwrap()).unwrap()
    };
    let monotone = p(1e-2, 0.8, 5) > p(1e-2, 0.8, 1)
        && p(1e-2, 0.9, 5) > p(1e-2, 0.5, 5)
        && p(1e-1, 0.8, 5) > p(1e-3, 0.8, 5);

    // Solver round trip.
    let mut solver_ok = true;
    for m in [1, 4, 10] {
        let params = SourceParams::new(0.0, ETA_D, ETA_L, m).unwrap();
        let nbar = solve_nbar_for_snr(&params, SNR_TARGET).unwrap();
        let achieved = snr(&params.with_nbar(nbar).unwrap()).unwrap();
        solver_ok &= within(achieved, SNR_TARGET, SOLVER_RTOL);
    }

    // Byte-identical reruns of the binary.
    let d1 = tempfile::tempdir().unwrap();
    let d2 = tempfile::tempdir().unwrap();
    for d in [&d1, &d2] {
        let path = d.path().to_str().unwrap();
        assert!(bin()
            .args(["table1", "--output", path])
            .output()
            .unwrap()
            .status
            .success());
        assert!(bin()
            .args(["figure2", "--nbar", "1e-3,1e-2,1e-1", "--output", path])
            .output()
            .unwrap()
            .status
            .success());
    }
    let identical = [
        "table1.csv",
        "figure2a.csv",
        "figure2b.csv",
        "figure2c.csv",
        "figure2d.csv",
    ]
    .iter()
    .all(|name| {
        std::fs::read(d1.path().join(name)).unwrap() == std::fs::read(d2.path().join(name)).unwrap()
    });

    report(
        "criterion 8",
        comp_gap < COMP_TOL
            && mean_gap < COMP_TOL
            && (herald_mass - 1.0).abs() < COMP_TOL
            && mass_gap < COMP_TOL
            && monotone
            && solver_ok
            && identical,
        &format!(
            "loss composition gap {comp_gap:.2e}, mean-scaling gap {mean_gap:.2e} \
             (tol {COMP_TOL:.0e}); herald output mass − 1 = {:.2e}; monotone grid {}; \
             solver round-trip within {SOLVER_RTOL}: {}; byte-identical reruns: {}",
            herald_mass - 1.0,
            monotone,
            solver_ok,
            identical
        ),
    );
}

#[test]
fn a09_waiting_time_crossover() {
    let device = SourceParams::new(0.0, ETA_D, ETA_L, 15).unwrap();
    let future = SourceParams::new(0.0, 0.98, 0.95, 15).unwrap();
    let reference = device.unswitched_baseline();

    let solved = |params: &SourceParams| {
        let nbar = solve_nbar_for_snr(params, SNR_TARGET).unwrap();
        params.with_nbar(nbar).unwrap()
    };
    let (device, future, reference) = (solved(&device), solved(&future), solved(&reference));

    let waits = |params: &SourceParams| -> Vec<f64> {
        (1..=10)
            .map(|n| waiting_time(params, n, REP_RATE_HZ).unwrap())
            .collect()
    };
    let (w_dev, w_fut, w_ref) = (waits(&device), waits(&future), waits(&reference));

    // The reference source's single extraction is faster, but it loses for
    // every N beyond a finite crossover; the advantage ratio must grow
    // monotonically so the lead is never given back.
    let crossover = (0..10).find(|&i| w_dev[i] < w_ref[i]);
    let holds_beyond = crossover.is_some_and(|i| (i..10).all(|j| w_dev[j] < w_ref[j]));
    let ratios: Vec<f64> = (0..10).map(|i| w_ref[i] / w_dev[i]).collect();
    let ratio_monotone = ratios.windows(2).all(|w| w[1] > w[0]);
    let future_dominates = (0..10).all(|i| w_fut[i] < w_dev[i] && w_fut[i] < w_ref[i]);

    report(
        "criterion 9",
        w_ref[0] < w_dev[0]
            && crossover.is_some()
            && holds_beyond
            && ratio_monotone
            && future_dominates,
        &format!(
            "waiting-time crossover at N = {} (reference faster at N=1: {}), \
             advantage ratio monotone: {ratio_monotone}, future device fastest at all N: \
             {future_dominates}",
            crossover.map_or("none".into(), |i| (i + 1).to_string()),
            w_ref[0] < w_dev[0]
        ),
    );
}
