//! Degree arithmetic on the 0°/360° circle.

use crate::error::{Error, Result};

/// Wraps any finite angle into `[0, 360)`.
///
/// `((x mod 360) + 360) mod 360`, with the rounding case that lands exactly on
/// 360 folded back to 0.
pub fn wrap360(x: f64) -> f64 {
    let r = ((x % 360.0) + 360.0) % 360.0;
    if r >= 360.0 {
        0.0
    } else {
        r
    }
}

/// Checked variant of [`wrap360`]; rejects NaN and infinities.
pub fn circ360(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::param(format!("circ360 of non-finite value {x}")));
    }
    Ok(wrap360(x))
}

/// Shortest angular distance between two azimuths, in `[0, 180]`.
pub fn circ_diff(a: f64, b: f64) -> f64 {
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    let d = wrap360(hi - lo);
    d.min(360.0 - d)
}

/// Cosine of an angle in degrees, exact at multiples of 30° where the value
/// is rational (0, ±1/2, ±1).
pub fn cos_deg(x: f64) -> f64 {
    let r = wrap360(x);
    match r {
        v if v == 0.0 => 1.0,
        v if v == 60.0 || v == 300.0 => 0.5,
        v if v == 90.0 || v == 270.0 => 0.0,
        v if v == 120.0 || v == 240.0 => -0.5,
        v if v == 180.0 => -1.0,
        v => v.to_radians().cos(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circ360_examples() {
        assert_eq!(circ360(190.0 - 10.0).unwrap(), 180.0);
        assert_eq!(circ360(165.0 - 350.0).unwrap(), 175.0);
        assert_eq!(circ360(30.0 - 200.0).unwrap(), 190.0);
        assert!(circ360(f64::NAN).is_err());
        assert!(circ360(f64::INFINITY).is_err());
    }

    #[test]
    fn wrap_tiny_negative_stays_in_range() {
        let w = wrap360(-1e-17);
        assert!((0.0..360.0).contains(&w));
    }

    #[test]
    fn circ_diff_examples() {
        assert_eq!(circ_diff(10.0, 350.0), 20.0);
        assert_eq!(circ_diff(0.0, 180.0), 180.0);
        assert_eq!(circ_diff(143.0, 147.0), 4.0);
    }

    #[test]
    fn cos_deg_special_angles() {
        assert_eq!(cos_deg(90.0), 0.0);
        assert_eq!(cos_deg(-60.0), 0.5);
        assert_eq!(cos_deg(480.0), -0.5);
        assert!((cos_deg(40.0) - 40f64.to_radians().cos()).abs() < 1e-15);
    }
}
