//! Richardson-extrapolated central differences.

use crate::lorentz::Vec3;

/// Default step for frame derivatives.
pub const DEFAULT_STEP: f64 = 1e-5;

/// `(4 D(h/2) - D(h)) / 3` where `D(h)` is the central difference with
/// step `h`. Fourth-order accurate in `h`.
pub fn richardson<E, F>(f: F, x: f64, h: f64) -> Result<Vec3, E>
where
    F: Fn(f64) -> Result<Vec3, E>,
{
    let central =
        |step: f64| -> Result<Vec3, E> { Ok((1.0 / (2.0 * step)) * (f(x + step)? - f(x - step)?)) };
    let coarse = central(h)?;
    let fine = central(h / 2.0)?;
    Ok((1.0 / 3.0) * (4.0 * fine - coarse))
}
