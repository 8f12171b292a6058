/// Least-squares slope of y against x.
pub fn linear_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    if points.len() < 2 {
        return 0.0;
    }
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let cov: f64 = points
        .iter()
        .map(|(x, y)| (x - mean_x) * (y - mean_y))
        .sum();
    let var: f64 = points.iter().map(|(x, _)| (x - mean_x).powi(2)).sum();
    if var == 0.0 {
        0.0
    } else {
        cov / var
    }
}

/// Fitted exponent of y ~ x^a: the slope of log y against log x. Values
/// are clamped away from zero so an exactly-zero sample cannot poison the
/// fit.
pub fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    let logged: Vec<(f64, f64)> = points
        .iter()
        .map(|&(x, y)| (x.max(1e-9).ln(), y.max(0.5).ln()))
        .collect();
    linear_slope(&logged)
}
