//! Seeded generators for synthetic series and null-distribution draws.
//!
//! Every generator takes an explicit seed and derives its own ChaCha stream,
//! so Monte Carlo suites can parallelize by replication (seed + replication
//! index) and produce results independent of worker count.

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// n independent N(0, sigma^2) draws.
pub fn white_noise(n: usize, sigma: f64, seed: u64) -> Vec<f64> {
    let mut rng = rng_for(seed);
    (0..n).map(|_| sigma * rng.sample::<f64, _>(StandardNormal)).collect()
}

/// Driftless Gaussian random walk of length n starting at 0.
pub fn random_walk(n: usize, seed: u64) -> Vec<f64> {
    let mut rng = rng_for(seed);
    let mut y = Vec::with_capacity(n);
    let mut level = 0.0;
    for _ in 0..n {
        level += rng.sample::<f64, _>(StandardNormal);
        y.push(level);
    }
    y
}

/// Stationary AR(1) y_t = phi y_{t-1} + e_t with a burn-in of 200 draws.
pub fn ar1(n: usize, phi: f64, seed: u64) -> Vec<f64> {
    assert!(phi.abs() < 1.0, "ar1 requires |phi| < 1");
    let mut rng = rng_for(seed);
    let mut y = 0.0;
    for _ in 0..200 {
        y = phi * y + rng.sample::<f64, _>(StandardNormal);
    }
    (0..n)
        .map(|_| {
            y = phi * y + rng.sample::<f64, _>(StandardNormal);
            y
        })
        .collect()
}

/// Bivariate error-correction system with cointegrating vector (1, -1):
/// x is a random walk and y corrects toward x at speed `lambda`
/// (y_t - y_{t-1} = lambda (y_{t-1} - x_{t-1}) + e_t). Returns (y, x).
pub fn cointegrated_pair(n: usize, lambda: f64, seed: u64) -> (Vec<f64>, Vec<f64>) {
    let mut rng = rng_for(seed);
    let mut x = 0.0f64;
    let mut y = 0.0f64;
    let mut xs = Vec::with_capacity(n);
    let mut ys = Vec::with_capacity(n);
    for _ in 0..n {
        let dy = lambda * (y - x) + rng.sample::<f64, _>(StandardNormal);
        let dx: f64 = rng.sample(StandardNormal);
        y += dy;
        x += dx;
        ys.push(y);
        xs.push(x);
    }
    (ys, xs)
}

/// `cointegrated_pair` with a common drift: dx gains `drift` per period, so
/// both series trend while y - x stays stationary. Matches the maintained
/// assumption of the unrestricted-constant rank test, whose critical values
/// presume a linear trend in the data. Returns (y, x).
pub fn cointegrated_pair_with_drift(
    n: usize,
    lambda: f64,
    drift: f64,
    seed: u64,
) -> (Vec<f64>, Vec<f64>) {
    let mut rng = rng_for(seed);
    let mut x = 0.0f64;
    let mut y = 0.0f64;
    let mut xs = Vec::with_capacity(n);
    let mut ys = Vec::with_capacity(n);
    for _ in 0..n {
        let dy = lambda * (y - x) + rng.sample::<f64, _>(StandardNormal);
        let dx = drift + rng.sample::<f64, _>(StandardNormal);
        y += dy;
        x += dx;
        ys.push(y);
        xs.push(x);
    }
    (ys, xs)
}

/// Bivariate error-correction system where both sides adjust to the
/// equilibrium error y - x: dy = l1 (y - x) + e, dx = l2 (y - x) + u.
/// Stable when -2 < l1 - l2 < 0. Returns (y, x).
pub fn vecm_pair(n: usize, l1: f64, l2: f64, seed: u64) -> (Vec<f64>, Vec<f64>) {
    let mut rng = rng_for(seed);
    let mut x = 0.0f64;
    let mut y = 0.0f64;
    let mut xs = Vec::with_capacity(n);
    let mut ys = Vec::with_capacity(n);
    for _ in 0..n {
        let ect = y - x;
        let dy = l1 * ect + rng.sample::<f64, _>(StandardNormal);
        let dx = l2 * ect + rng.sample::<f64, _>(StandardNormal);
        y += dy;
        x += dx;
        ys.push(y);
        xs.push(x);
    }
    (ys, xs)
}

/// Stable VAR(1) y_t = A y_{t-1} + e_t; `a` is row-major k x k. Burn-in 200.
pub fn var1(n: usize, a: &[Vec<f64>], seed: u64) -> Vec<Vec<f64>> {
    let k = a.len();
    assert!(a.iter().all(|r| r.len() == k), "coefficient matrix must be square");
    let mut rng = rng_for(seed);
    let mut state = vec![0.0f64; k];
    let step = |state: &mut Vec<f64>, rng: &mut ChaCha8Rng| {
        let next: Vec<f64> = (0..k)
            .map(|i| {
                let mean: f64 = (0..k).map(|j| a[i][j] * state[j]).sum();
                mean + rng.sample::<f64, _>(StandardNormal)
            })
            .collect();
        *state = next;
    };
    for _ in 0..200 {
        step(&mut state, &mut rng);
    }
    let mut cols = vec![Vec::with_capacity(n); k];
    for _ in 0..n {
        step(&mut state, &mut rng);
        for (i, c) in cols.iter_mut().enumerate() {
            c.push(state[i]);
        }
    }
    cols
}

/// t-ratio of the Dickey-Fuller regression on a fresh driftless random walk,
/// used to simulate the null distribution of the unit-root statistic.
///
/// `det`: 0 none, 1 constant, 2 constant and trend. The regression is built
/// directly here (plain normal equations on a 1-3 column design) so the
/// draw does not route through the estimator it is used to validate.
pub fn df_t_statistic(n: usize, det: usize, seed: u64) -> f64 {
    let y = random_walk(n + 1, seed);
    let t_eff = n;
    let p = 1 + det;
    let mut x = DMatrix::zeros(t_eff, p);
    let mut dy = DMatrix::zeros(t_eff, 1);
    for t in 0..t_eff {
        dy[(t, 0)] = y[t + 1] - y[t];
        x[(t, 0)] = y[t];
        if det >= 1 {
            x[(t, 1)] = 1.0;
        }
        if det >= 2 {
            x[(t, 2)] = (t + 1) as f64;
        }
    }
    let xtx = x.transpose() * &x;
    let xty = x.transpose() * &dy;
    let inv = xtx.try_inverse().expect("simulated design is full rank");
    let beta = &inv * &xty;
    let resid = &dy - &x * &beta;
    let rss: f64 = resid.iter().map(|e| e * e).sum();
    let sigma2 = rss / (t_eff - p) as f64;
    beta[(0, 0)] / (sigma2 * inv[(0, 0)]).sqrt()
}

/// One draw of the asymptotic null (trace, max-eigenvalue) statistics for
/// dimension d and deterministic case 2, 3, or 4, via the discretized
/// Brownian functionals tr{ (int F dB')' (int F F')^{-1} (int F dB') }.
///
/// Independent of the estimation path: no moment matrices or eigenvector
/// extraction from data, just the limit form of the statistics.
pub fn johansen_null_statistics(case: u8, d: usize, steps: usize, seed: u64) -> (f64, f64) {
    assert!(matches!(case, 2..=4), "deterministic case must be 2, 3, or 4");
    assert!(d >= 1);
    let mut rng = rng_for(seed);
    let t = steps;
    let scale = 1.0 / (t as f64).sqrt();
    // Increments dB (d x t) and the pre-increment Brownian path B_{i-1}.
    let mut db = DMatrix::zeros(d, t);
    let mut bprev = DMatrix::zeros(d, t);
    for i in 0..d {
        let mut level = 0.0;
        for s in 0..t {
            bprev[(i, s)] = level;
            let inc = scale * rng.sample::<f64, _>(StandardNormal);
            db[(i, s)] = inc;
            level += inc;
        }
    }
    let f = match case {
        2 => {
            // (B', 1)': constant restricted to the relation.
            let mut f = DMatrix::zeros(d + 1, t);
            f.view_mut((0, 0), (d, t)).copy_from(&bprev);
            for s in 0..t {
                f[(d, s)] = 1.0;
            }
            f
        }
        3 => {
            // first d-1 demeaned components, demeaned trend u - 1/2 last.
            let mut f = DMatrix::zeros(d, t);
            for i in 0..d - 1 {
                let mean: f64 = bprev.row(i).sum() / t as f64;
                for s in 0..t {
                    f[(i, s)] = bprev[(i, s)] - mean;
                }
            }
            for s in 0..t {
                f[(d - 1, s)] = (s + 1) as f64 / t as f64 - 0.5;
            }
            f
        }
        _ => {
            // all d components demeaned plus the demeaned trend.
            let mut f = DMatrix::zeros(d + 1, t);
            for i in 0..d {
                let mean: f64 = bprev.row(i).sum() / t as f64;
                for s in 0..t {
                    f[(i, s)] = bprev[(i, s)] - mean;
                }
            }
            for s in 0..t {
                f[(d, s)] = (s + 1) as f64 / t as f64 - 0.5;
            }
            f
        }
    };
    let m1 = &f * db.transpose(); // int F dB'
    let m2 = (&f * f.transpose()) / t as f64; // int F F' du
    let sol = m2.clone().lu().solve(&m1).expect("F moment matrix is invertible");
    let w = m1.transpose() * sol; // d x d
    let eig = nalgebra::SymmetricEigen::new((&w + w.transpose()) * 0.5);
    let trace = eig.eigenvalues.iter().sum();
    let maxeig = eig.eigenvalues.iter().cloned().fold(f64::MIN, f64::max);
    (trace, maxeig)
}
