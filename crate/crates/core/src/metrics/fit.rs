//! Least-squares slope fits on log-log and semi-log axes.

use crate::error::{Error, Result};
use crate::metrics::degree::DegreeHistogram;

const MIN_POINTS: usize = 3;

/// Closed degree interval used to select fit points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitWindow {
    pub lo: f64,
    pub hi: f64,
}

impl FitWindow {
    pub fn new(lo: f64, hi: f64) -> Self {
        Self { lo, hi }
    }

    pub fn unbounded() -> Self {
        Self::new(f64::NEG_INFINITY, f64::INFINITY)
    }

    /// From the distribution mode up to the start of the top 1% of degrees.
    pub fn default_for(hist: &DegreeHistogram) -> Self {
        match (hist.mode(), hist.upper_tail_degree(0.01)) {
            (Some(lo), Some(hi)) => Self::new(lo as f64, hi as f64),
            _ => Self::unbounded(),
        }
    }

    /// One decade of degree centred (on a log axis) on the default window.
    pub fn central_decade(hist: &DegreeHistogram) -> Self {
        let base = Self::default_for(hist);
        if !base.lo.is_finite() || base.lo <= 0.0 {
            return base;
        }
        let centre = (base.lo * base.hi).sqrt();
        let half = 10f64.sqrt();
        Self::new(centre / half, centre * half)
    }

    pub fn contains(&self, k: f64) -> bool {
        k >= self.lo && k <= self.hi
    }
}

impl Default for FitWindow {
    fn default() -> Self {
        Self::unbounded()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
}

/// Ordinary least squares of `y` on `x`. `r_squared` is 1 when the residuals
/// vanish, including the degenerate case of constant `y`.
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> Result<LinearFit> {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    if n < 2 {
        return Err(Error::InsufficientData {
            usable: n,
            required: 2,
        });
    }
    let nf = n as f64;
    let mean_x = xs.iter().sum::<f64>() / nf;
    let mean_y = ys.iter().sum::<f64>() / nf;
    let (mut sxx, mut sxy, mut syy) = (0.0, 0.0, 0.0);
    for (&x, &y) in xs.iter().zip(ys) {
        let (dx, dy) = (x - mean_x, y - mean_y);
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if sxx == 0.0 {
        return Err(Error::InvalidArgument("all abscissae are equal".into()));
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let ss_res: f64 = xs
        .iter()
        .zip(ys)
        .map(|(&x, &y)| (y - intercept - slope * x).powi(2))
        .sum();
    // Spread at rounding level counts as constant.
    let y_scale = ys.iter().fold(0.0f64, |acc, y| acc.max(y.abs()));
    let noise = 16.0 * nf * (f64::EPSILON * y_scale).powi(2);
    let r_squared = if syy <= noise || ss_res <= f64::EPSILON * syy {
        1.0
    } else {
        (1.0 - ss_res / syy).clamp(0.0, 1.0)
    };
    Ok(LinearFit {
        slope,
        intercept,
        r_squared,
    })
}

/// Slope fit of `y(k)`. For log-log fits `slope` is the exponent
/// (`-gamma` for `CP(k)`, `-alpha` for `C(k)`); for semi-log fits it is the
/// decay rate in `ln y = intercept + slope * k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerLawFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    /// Smallest and largest `k` that entered the fit.
    pub k_range: (f64, f64),
    pub points: usize,
}

fn usable(points: &[(f64, f64)], window: FitWindow, need_positive_k: bool) -> Vec<(f64, f64)> {
    points
        .iter()
        .copied()
        .filter(|&(k, y)| window.contains(k) && y > 0.0 && (!need_positive_k || k > 0.0))
        .collect()
}

fn fit_transformed(
    points: Vec<(f64, f64)>,
    transform_k: impl Fn(f64) -> f64,
) -> Result<PowerLawFit> {
    if points.len() < MIN_POINTS {
        return Err(Error::InsufficientData {
            usable: points.len(),
            required: MIN_POINTS,
        });
    }
    let xs: Vec<f64> = points.iter().map(|&(k, _)| transform_k(k)).collect();
    let ys: Vec<f64> = points.iter().map(|&(_, y)| y.ln()).collect();
    let fit = linear_fit(&xs, &ys)?;
    let lo = points.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
    let hi = points.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
    Ok(PowerLawFit {
        slope: fit.slope,
        intercept: fit.intercept,
        r_squared: fit.r_squared,
        k_range: (lo, hi),
        points: points.len(),
    })
}

/// Least squares on `(ln k, ln y)`.
pub fn fit_loglog_slope(points: &[(f64, f64)], window: FitWindow) -> Result<PowerLawFit> {
    fit_transformed(usable(points, window, true), f64::ln)
}

/// Least squares on `(k, ln y)`.
pub fn fit_semilog_slope(points: &[(f64, f64)], window: FitWindow) -> Result<PowerLawFit> {
    fit_transformed(usable(points, window, false), |k| k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn exact_power_law() {
        let pts: Vec<_> = (2..=100).map(|k| (k as f64, (k as f64).powf(-1.48))).collect();
        let fit = fit_loglog_slope(&pts, FitWindow::unbounded()).unwrap();
        assert!((fit.slope + 1.48).abs() < 1e-9);
        assert!((fit.r_squared - 1.0).abs() < 1e-12);
        assert_eq!(fit.k_range, (2.0, 100.0));
        assert_eq!(fit.points, 99);
    }

    #[test]
    fn constant_series() {
        let pts: Vec<_> = (1..=10).map(|k| (k as f64, 7.0)).collect();
        let fit = fit_loglog_slope(&pts, FitWindow::unbounded()).unwrap();
        assert!(fit.slope.abs() < 1e-12);
        assert_eq!(fit.r_squared, 1.0);
        let fit = fit_semilog_slope(&pts, FitWindow::unbounded()).unwrap();
        assert!(fit.slope.abs() < 1e-12);
    }

    #[test]
    fn exact_exponential() {
        let pts: Vec<_> = (0..40).map(|k| (k as f64, (-0.3 * k as f64).exp())).collect();
        let fit = fit_semilog_slope(&pts, FitWindow::unbounded()).unwrap();
        assert!((fit.slope + 0.3).abs() < 1e-9);
        assert!(fit.intercept.abs() < 1e-9);
    }

    #[test]
    fn window_and_positivity_filter() {
        let pts = vec![(1.0, 1.0), (2.0, 0.5), (3.0, 0.0), (4.0, 0.25), (50.0, 1.0)];
        let fit = fit_loglog_slope(&pts, FitWindow::new(1.0, 10.0)).unwrap();
        assert_eq!(fit.points, 3);
        assert!((fit.slope + 1.0).abs() < 1e-12);
        assert!(matches!(
            fit_loglog_slope(&pts, FitWindow::new(1.0, 3.0)),
            Err(Error::InsufficientData { usable: 2, required: 3 })
        ));
    }

    #[test]
    fn default_window_drops_top_percent() {
        let mut degrees = vec![4; 60];
        degrees.extend(std::iter::repeat_n(8, 39));
        degrees.push(40);
        let h = DegreeHistogram::from_degrees(degrees);
        assert_eq!(FitWindow::default_for(&h), FitWindow::new(4.0, 8.0));
        let mut degrees = vec![4; 60];
        degrees.extend(std::iter::repeat_n(8, 38));
        degrees.extend([30, 40]);
        let h = DegreeHistogram::from_degrees(degrees);
        assert_eq!(FitWindow::default_for(&h), FitWindow::new(4.0, 30.0));
        let decade = FitWindow::central_decade(&h);
        assert!((decade.hi / decade.lo - 10.0).abs() < 1e-12);
        assert!((decade.lo * decade.hi - 120.0).abs() < 1e-9);
    }

    proptest! {
        #[test]
        fn recovers_any_power_law(exponent in -4.0f64..2.0, scale in 0.01f64..100.0) {
            let pts: Vec<_> = (1..=60).map(|k| (k as f64, scale * (k as f64).powf(exponent))).collect();
            let fit = fit_loglog_slope(&pts, FitWindow::unbounded()).unwrap();
            prop_assert!((fit.slope - exponent).abs() < 1e-9);
            prop_assert!((fit.intercept - scale.ln()).abs() < 1e-8);
        }
    }
}
