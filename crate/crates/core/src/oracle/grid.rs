use serde::Serialize;

use crate::error::{Error, Result};

pub const MIN_POINTS: usize = 100;

/// Uniform radial grid in natural units (eV⁻¹), endpoints included.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadialGrid {
    r_min: f64,
    r_max: f64,
    points: usize,
}

impl RadialGrid {
    pub fn new(r_min: f64, r_max: f64, points: usize) -> Result<Self> {
        if !(r_min > 0.0 && r_min < r_max && r_max.is_finite()) {
            return Err(Error::validation(format!(
                "radial grid needs 0 < r_min < r_max, got [{r_min}, {r_max}]"
            )));
        }
        if points < MIN_POINTS {
            return Err(Error::validation(format!(
                "radial grid needs at least {MIN_POINTS} points, got {points}"
            )));
        }
        Ok(RadialGrid {
            r_min,
            r_max,
            points,
        })
    }

    pub fn r_min(&self) -> f64 {
        self.r_min
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn spacing(&self) -> f64 {
        (self.r_max - self.r_min) / (self.points - 1) as f64
    }

    pub fn node(&self, i: usize) -> f64 {
        self.r_min + i as f64 * self.spacing()
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        let h = self.spacing();
        (0..self.points).map(move |i| self.r_min + i as f64 * h)
    }

    /// Halves the spacing; the old nodes remain nodes of the new grid.
    pub fn refined(&self) -> Self {
        RadialGrid {
            points: 2 * (self.points - 1) + 1,
            ..*self
        }
    }

    /// Refined `times` times.
    pub fn refined_by(&self, times: u32) -> Self {
        (0..times).fold(*self, |g, _| g.refined())
    }
}

/// Composite Simpson rule over samples on a uniform grid.
///
/// An even sample count finishes with Simpson's 3/8 rule on the last three
/// intervals.
pub fn simpson(values: &[f64], h: f64) -> f64 {
    let n = values.len();
    match n {
        0 | 1 => 0.0,
        2 => 0.5 * h * (values[0] + values[1]),
        3 => h / 3.0 * (values[0] + 4.0 * values[1] + values[2]),
        _ if n % 2 == 1 => {
            let mut odd = 0.0;
            let mut even = 0.0;
            for (i, v) in values[1..n - 1].iter().enumerate() {
                if i % 2 == 0 {
                    odd += v;
                } else {
                    even += v;
                }
            }
            h / 3.0 * (values[0] + 4.0 * odd + 2.0 * even + values[n - 1])
        }
        _ => {
            let head = simpson(&values[..n - 3], h);
            let t = &values[n - 4..];
            head + 3.0 * h / 8.0 * (t[0] + 3.0 * t[1] + 3.0 * t[2] + t[3])
        }
    }
}

/// Trapezoidal rule over samples on a uniform grid.
pub fn trapezoid(values: &[f64], h: f64) -> f64 {
    match values {
        [] | [_] => 0.0,
        [first, inner @ .., last] => h * (0.5 * (first + last) + inner.iter().sum::<f64>()),
    }
}
