//! Finite-difference solver for the reduced radial Coulomb equation
//!
//! ```text
//! u'' = [l(l+1)/r² − 2mα/r − 2mE] u,   u(r_min) = u(r_max) = 0
//! ```
//!
//! on a uniform grid with the three-point Laplacian. The discretized operator
//! is symmetric tridiagonal. Eigenvalues come from Sturm-sequence bisection,
//! eigenvectors from inverse iteration.
//!
//! Internally lengths are measured in Bohr radii and energies in mα², so the
//! operator reads `−u''/2 + [l(l+1)/(2ρ²) − 1/ρ] u = ε u`.
//!
//! The pivots of `T − x` are carried as offsets from the free-Laplacian
//! pivots (`g = 1 + t`). This keeps the absolute eigenvalue error at the scale
//! of the potential instead of eps/h².

use std::collections::HashMap;

use serde::Serialize;

use super::grid::{trapezoid, RadialGrid};
use super::refine::{refine_until, OracleResult, Resolution};
use crate::constants::Constants;
use crate::error::{Error, Result};
use crate::hydrogen::{bohr_energy, HydrogenState};

pub const MAX_LEVELS: usize = 10;

/// Default inner wall in Bohr radii. The Dirichlet wall at r_min biases the
/// energies by roughly 4 r_min / (n³ a) relative for s states, so it sits
/// far below any grid spacing.
pub const DEFAULT_R_MIN_BOHR: f64 = 1e-12;

/// One bound state on the grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadialLevel {
    /// Energy in eV.
    pub energy: f64,
    /// u(r) = r R(r) at every grid node, boundaries included, normalized so
    /// that the trapezoidal ∫u² dr = 1 with r in eV⁻¹. Positive near the origin.
    pub u: Vec<f64>,
}

struct ScaledOperator {
    /// 2h²(l(l+1)/(2ρ²) − 1/ρ) at interior nodes.
    potential: Vec<f64>,
    two_h2: f64,
}

impl ScaledOperator {
    fn new(l: u32, grid: &RadialGrid, bohr: f64) -> Self {
        let rho_min = grid.r_min() / bohr;
        let h = grid.spacing() / bohr;
        let centrifugal = f64::from(l) * f64::from(l + 1) / 2.0;
        let two_h2 = 2.0 * h * h;
        let potential = (1..grid.points() - 1)
            .map(|i| {
                let rho = rho_min + i as f64 * h;
                two_h2 * (centrifugal / (rho * rho) - 1.0 / rho)
            })
            .collect();
        ScaledOperator { potential, two_h2 }
    }

    /// Offsets `t_i` of the pivots `g_i = 1 + t_i` of `T − x`, scaled by 2h².
    fn pivots(&self, x: f64) -> impl Iterator<Item = f64> + '_ {
        let shift = self.two_h2 * x;
        let mut carry = 1.0;
        self.potential.iter().map(move |&w| {
            let mut t = w - shift + carry;
            let mut g = 1.0 + t;
            if g == 0.0 {
                g = -f64::MIN_POSITIVE.sqrt();
                t = g - 1.0;
            }
            carry = t / g;
            g
        })
    }

    /// Number of eigenvalues strictly below `x`.
    fn count_below(&self, x: f64) -> usize {
        self.pivots(x).filter(|&g| g < 0.0).count()
    }

    fn lower_bound(&self) -> f64 {
        self.potential.iter().copied().fold(0.0, f64::min) / self.two_h2
    }

    /// Eigenvalue with 0-based index `j` within `[lo, hi]`.
    fn bisect(&self, j: usize, mut lo: f64, mut hi: f64) -> f64 {
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_below(mid) > j {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// Inverse iteration at the converged eigenvalue `x`.
    fn eigenvector(&self, x: f64) -> Vec<f64> {
        let pivots: Vec<f64> = self.pivots(x).collect();
        let m = pivots.len();
        let mut y = vec![1.0; m];
        for _ in 0..3 {
            let mut z = vec![0.0; m];
            z[0] = y[0];
            for i in 1..m {
                z[i] = y[i] + z[i - 1] / pivots[i - 1];
            }
            y[m - 1] = z[m - 1] / pivots[m - 1];
            for i in (0..m - 1).rev() {
                y[i] = (z[i] + y[i + 1]) / pivots[i];
            }
            let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
            y.iter_mut().for_each(|v| *v /= norm);
        }
        y
    }
}

/// Lowest `k_levels` bound states of angular momentum `l` on `grid`.
pub fn solve_radial(
    l: u32,
    grid: &RadialGrid,
    c: &Constants,
    k_levels: usize,
) -> Result<Vec<RadialLevel>> {
    if k_levels == 0 || k_levels > MAX_LEVELS {
        return Err(Error::validation(format!(
            "number of levels must lie in 1..={MAX_LEVELS}, got {k_levels}"
        )));
    }
    let bohr = c.bohr_length();
    let hartree = c.electron_mass() * c.alpha() * c.alpha();
    let op = ScaledOperator::new(l, grid, bohr);

    let bound = op.count_below(0.0);
    if bound < k_levels {
        return Err(Error::OracleResolution(format!(
            "only {bound} bound states with l = {l} resolved on the grid, {k_levels} requested; \
             increase r_max or the number of points"
        )));
    }

    let lower = op.lower_bound();
    let mut levels = Vec::with_capacity(k_levels);
    let mut lo = lower;
    for j in 0..k_levels {
        let eps = op.bisect(j, lo, 0.0);
        lo = eps;

        let interior = op.eigenvector(eps);
        let mut u = Vec::with_capacity(grid.points());
        u.push(0.0);
        u.extend(interior);
        u.push(0.0);
        let first = u.iter().copied().find(|v| v.abs() > 0.0).unwrap_or(1.0);
        let norm = trapezoid(&u.iter().map(|v| v * v).collect::<Vec<_>>(), grid.spacing()).sqrt();
        let scale = first.signum() / norm;
        u.iter_mut().for_each(|v| *v *= scale);

        levels.push(RadialLevel {
            energy: eps * hartree,
            u,
        });
    }
    Ok(levels)
}

/// Default grid for resolving states up to principal quantum number `n_max`.
///
/// Spacing is 0.02 Bohr radii; r_max = max(30 n_max, 40) Bohr radii.
pub fn default_level_grid(n_max: u32, c: &Constants) -> Result<RadialGrid> {
    let a = c.bohr_length();
    let extent = (30 * n_max).max(40) as usize;
    RadialGrid::new(DEFAULT_R_MIN_BOHR * a, extent as f64 * a, extent * 50 + 1)
}

/// Numeric-versus-Bohr comparison for one level.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LevelCheck {
    pub state: HydrogenState,
    /// Richardson-extrapolated finite-difference energy in eV.
    pub numeric: OracleResult,
    pub exact: f64,
    pub relative_difference: f64,
    /// Error ratio E(h) − E over E(h/2) − E at the finest pair of grids.
    pub convergence_ratio: f64,
}

/// Refines the finite-difference energy of `(n, l)` until successive
/// Richardson extrapolants agree to `tolerance`.
pub fn level_check(
    n: u32,
    l: u32,
    c: &Constants,
    tolerance: f64,
    max_refinements: u32,
) -> Result<LevelCheck> {
    let state = HydrogenState::new(n, l)?;
    let k = (n - l) as usize;
    let base = default_level_grid(n, c)?;
    let mut cache: HashMap<u32, f64> = HashMap::new();
    let mut raw = |level: u32| -> Result<f64> {
        if let Some(e) = cache.get(&level) {
            return Ok(*e);
        }
        let e = solve_radial(l, &base.refined_by(level), c, k)?[k - 1].energy;
        cache.insert(level, e);
        Ok(e)
    };
    let mut finest = 0;
    let numeric = refine_until(tolerance, max_refinements, |level| {
        let coarse = raw(level)?;
        let fine = raw(level + 1)?;
        finest = level + 1;
        Ok((
            (4.0 * fine - coarse) / 3.0,
            Resolution::Grid(base.refined_by(level + 1)),
        ))
    })?;
    let exact = bohr_energy(&state, c).magnitude();
    let convergence_ratio = (raw(finest - 1)? - exact) / (raw(finest)? - exact);
    Ok(LevelCheck {
        state,
        relative_difference: ((numeric.value - exact) / exact).abs(),
        numeric,
        exact,
        convergence_ratio,
    })
}
