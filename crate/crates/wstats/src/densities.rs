//! Standardized density families (mean 0, variance 1) and their analytic
//! machinery: pdf, cdf, quantile, partial first/second moments and the fourth
//! moment. Location-scale members are generated from a standardized base by
//! x = σz + μ.
//!
//! Three builtin families (gaussian, uniform, laplace) carry closed forms for
//! everything. Custom densities — from an arbitrary pdf closure or a tabulated
//! two-column pdf — are standardized numerically at construction and answer
//! cdf/quantile queries by adaptive quadrature and bisection.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quad::{integrate, integrate_with_cap};
use crate::special::{norm_cdf, norm_pdf, norm_quantile};

/// Uniform support half-width: a mean-0 variance-1 uniform lives on [-√3, √3].
pub const UNIFORM_HALF_WIDTH: f64 = 1.7320508075688772;
/// Laplace scale for unit variance (variance of Laplace(b) is 2b²).
const LAPLACE_B: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Mass left outside the finite integration window of an unbounded support.
pub const TAIL_MASS: f64 = 1e-12;

/// Probability tolerance of numeric quantile inversion.
pub const QUANTILE_TOL: f64 = 1e-12;

/// Default |z| cap for bracket expansion in numeric quantile inversion.
pub const DEFAULT_BRACKET_BOUND: f64 = 1e9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Gaussian,
    Uniform,
    Laplace,
    Custom,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Gaussian => "gaussian",
            Family::Uniform => "uniform",
            Family::Laplace => "laplace",
            Family::Custom => "custom",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gaussian" => Ok(Family::Gaussian),
            "uniform" => Ok(Family::Uniform),
            "laplace" => Ok(Family::Laplace),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

type PdfFn = dyn Fn(f64) -> f64 + Send + Sync;

struct CustomKernel {
    /// Standardized pdf.
    pdf: Box<PdfFn>,
    /// Support in standardized coordinates; may be infinite.
    support: (f64, f64),
    /// Finite window holding all but ≤ TAIL_MASS of each unbounded tail.
    window: (f64, f64),
    fourth_moment: f64,
}

enum Kernel {
    Gaussian,
    Uniform,
    Laplace,
    Custom(CustomKernel),
}

/// A standardized (mean 0, variance 1) probability density.
///
/// Immutable after construction; clones share the kernel.
#[derive(Clone)]
pub struct StandardDensity {
    kernel: Arc<Kernel>,
}

impl fmt::Debug for StandardDensity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StandardDensity")
            .field("family", &self.family())
            .finish()
    }
}

/// Builds a builtin standardized family from its identifier.
pub fn make_standard(name: &str) -> Result<StandardDensity> {
    Ok(StandardDensity::builtin(name.parse()?))
}

impl StandardDensity {
    pub fn gaussian() -> Self {
        StandardDensity { kernel: Arc::new(Kernel::Gaussian) }
    }

    pub fn uniform() -> Self {
        StandardDensity { kernel: Arc::new(Kernel::Uniform) }
    }

    pub fn laplace() -> Self {
        StandardDensity { kernel: Arc::new(Kernel::Laplace) }
    }

    /// Builtin family by tag. `Family::Custom` has no builtin member.
    pub fn builtin(family: Family) -> Self {
        match family {
            Family::Gaussian => Self::gaussian(),
            Family::Uniform => Self::uniform(),
            Family::Laplace => Self::laplace(),
            Family::Custom => panic!("custom densities are built with from_pdf/from_table"),
        }
    }

    /// Standardizes an arbitrary nonnegative pdf to mean 0, variance 1.
    ///
    /// The input need not be normalized. Unbounded supports are scanned
    /// outward until the remaining tail contributes nothing to mass or
    /// variance at working precision; non-integrable input (including
    /// infinite-variance tails) is rejected.
    pub fn from_pdf<F>(pdf: F, support: (f64, f64)) -> Result<Self>
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        let (lo, hi) = support;
        if !(lo < hi) {
            return Err(Error::InvalidParameter(format!(
                "empty pdf support ({lo}, {hi})"
            )));
        }

        let (wl, wu) = scan_window(&pdf, lo, hi)?;
        let mass = checked_quad(&pdf, wl, wu)?;
        if !(mass > 0.0) || !mass.is_finite() {
            return Err(Error::NonIntegrable(format!(
                "pdf mass over ({wl}, {wu}) evaluated to {mass}"
            )));
        }
        let mean = checked_quad(|x| x * pdf(x), wl, wu)? / mass;
        let var = checked_quad(|x| (x - mean).powi(2) * pdf(x), wl, wu)? / mass;
        let scale = var.sqrt();
        if !(scale.is_finite()) || scale <= 1e-9 * mean.abs().max(1.0) {
            return Err(Error::ZeroVariance);
        }

        let std_pdf = move |z: f64| scale * pdf(mean + scale * z) / mass;
        let map = |x: f64| {
            if x.is_infinite() {
                x
            } else {
                (x - mean) / scale
            }
        };
        let window = ((wl - mean) / scale, (wu - mean) / scale);
        let fourth = checked_quad(|z| z.powi(4) * std_pdf(z), window.0, window.1)?;

        Ok(StandardDensity {
            kernel: Arc::new(Kernel::Custom(CustomKernel {
                pdf: Box::new(std_pdf),
                support: (map(lo), map(hi)),
                window,
                fourth_moment: fourth,
            })),
        })
    }

    /// Standardized density from a tabulated pdf, linearly interpolated
    /// between the given (z, f(z)) nodes and zero outside them.
    pub fn from_table(points: &[(f64, f64)]) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::PdfTableTooSmall(points.len()));
        }
        for (i, w) in points.windows(2).enumerate() {
            if !(w[1].0 > w[0].0) {
                return Err(Error::PdfTableNotSorted(i + 1));
            }
        }
        if let Some(i) = points.iter().position(|&(_, f)| f < 0.0 || !f.is_finite()) {
            return Err(Error::PdfTableNegative(i));
        }
        let table: Vec<(f64, f64)> = points.to_vec();
        let support = (table[0].0, table[table.len() - 1].0);
        let interp = move |x: f64| {
            let n = table.len();
            if x < table[0].0 || x > table[n - 1].0 {
                return 0.0;
            }
            let idx = table.partition_point(|&(z, _)| z <= x).min(n - 1);
            let (z0, f0) = table[idx - 1];
            let (z1, f1) = table[idx];
            f0 + (f1 - f0) * (x - z0) / (z1 - z0)
        };
        Self::from_pdf(interp, support)
    }

    pub fn family(&self) -> Family {
        match *self.kernel {
            Kernel::Gaussian => Family::Gaussian,
            Kernel::Uniform => Family::Uniform,
            Kernel::Laplace => Family::Laplace,
            Kernel::Custom(_) => Family::Custom,
        }
    }

    /// Support interval; endpoints may be infinite.
    pub fn support(&self) -> (f64, f64) {
        match &*self.kernel {
            Kernel::Gaussian | Kernel::Laplace => (f64::NEG_INFINITY, f64::INFINITY),
            Kernel::Uniform => (-UNIFORM_HALF_WIDTH, UNIFORM_HALF_WIDTH),
            Kernel::Custom(c) => c.support,
        }
    }

    /// Finite window carrying all mass except ≤ TAIL_MASS per unbounded tail.
    /// Quadrature over the density happens on this window.
    pub fn integration_bounds(&self) -> (f64, f64) {
        match &*self.kernel {
            Kernel::Gaussian => {
                let q = norm_quantile(TAIL_MASS);
                (q, -q)
            }
            Kernel::Uniform => (-UNIFORM_HALF_WIDTH, UNIFORM_HALF_WIDTH),
            Kernel::Laplace => {
                let q = laplace_quantile(TAIL_MASS);
                (q, -q)
            }
            Kernel::Custom(c) => c.window,
        }
    }

    /// The standardized pdf f(z).
    pub fn pdf(&self, z: f64) -> f64 {
        match &*self.kernel {
            Kernel::Gaussian => norm_pdf(z),
            Kernel::Uniform => {
                if z.abs() <= UNIFORM_HALF_WIDTH {
                    0.5 / UNIFORM_HALF_WIDTH
                } else {
                    0.0
                }
            }
            Kernel::Laplace => (-(z.abs()) / LAPLACE_B).exp() / (2.0 * LAPLACE_B),
            Kernel::Custom(c) => {
                if z < c.support.0 || z > c.support.1 {
                    0.0
                } else {
                    (c.pdf)(z)
                }
            }
        }
    }

    /// F(z) = ∫_{-∞}^z f. For custom kernels this is adaptive quadrature over
    /// the nearer half of the window, so both tails stay accurate.
    pub fn cdf(&self, z: f64) -> f64 {
        match &*self.kernel {
            Kernel::Gaussian => norm_cdf(z),
            Kernel::Uniform => {
                ((z + UNIFORM_HALF_WIDTH) / (2.0 * UNIFORM_HALF_WIDTH)).clamp(0.0, 1.0)
            }
            Kernel::Laplace => {
                if z < 0.0 {
                    0.5 * (z / LAPLACE_B).exp()
                } else {
                    1.0 - 0.5 * (-z / LAPLACE_B).exp()
                }
            }
            Kernel::Custom(c) => {
                let (wl, wu) = c.window;
                if z <= wl {
                    return 0.0;
                }
                if z >= wu {
                    return 1.0;
                }
                let v = if z <= 0.5 * (wl + wu) {
                    integrate(|x| self.pdf(x), wl, z, 1e-11, 1e-13).value
                } else {
                    1.0 - integrate(|x| self.pdf(x), z, wu, 1e-11, 1e-13).value
                };
                v.clamp(0.0, 1.0)
            }
        }
    }

    /// F⁻¹(u) for u in (0, 1); analytic where the family provides it, else
    /// bisection against the cdf.
    pub fn quantile(&self, u: f64) -> Result<f64> {
        if !(u > 0.0 && u < 1.0) {
            return Err(Error::InvalidProbability(u));
        }
        match &*self.kernel {
            Kernel::Gaussian => Ok(norm_quantile(u)),
            Kernel::Uniform => Ok(UNIFORM_HALF_WIDTH * (2.0 * u - 1.0)),
            Kernel::Laplace => Ok(laplace_quantile(u)),
            Kernel::Custom(c) => {
                let (wl, wu) = c.window;
                Ok(bisect_cdf(|z| self.cdf(z), u, wl, wu))
            }
        }
    }

    /// ∫_a^b z f(z) dz; analytic for the builtin families.
    pub fn partial_first_moment(&self, a: f64, b: f64) -> f64 {
        match &*self.kernel {
            Kernel::Gaussian => gauss_first_antideriv(b) - gauss_first_antideriv(a),
            Kernel::Uniform => {
                let (a, b) = clamp_interval(a, b, UNIFORM_HALF_WIDTH);
                (b * b - a * a) / (4.0 * UNIFORM_HALF_WIDTH)
            }
            Kernel::Laplace => laplace_first_antideriv(b) - laplace_first_antideriv(a),
            Kernel::Custom(c) => {
                let (a, b) = (a.max(c.window.0), b.min(c.window.1));
                if !(a < b) {
                    return 0.0;
                }
                integrate(|z| z * self.pdf(z), a, b, 1e-11, 1e-14).value
            }
        }
    }

    /// ∫_a^b z² f(z) dz; analytic for the builtin families.
    pub fn partial_second_moment(&self, a: f64, b: f64) -> f64 {
        match &*self.kernel {
            Kernel::Gaussian => gauss_second_antideriv(b) - gauss_second_antideriv(a),
            Kernel::Uniform => {
                let (a, b) = clamp_interval(a, b, UNIFORM_HALF_WIDTH);
                (b * b * b - a * a * a) / (6.0 * UNIFORM_HALF_WIDTH)
            }
            Kernel::Laplace => laplace_second_antideriv(b) - laplace_second_antideriv(a),
            Kernel::Custom(c) => {
                let (a, b) = (a.max(c.window.0), b.min(c.window.1));
                if !(a < b) {
                    return 0.0;
                }
                integrate(|z| z * z * self.pdf(z), a, b, 1e-11, 1e-14).value
            }
        }
    }

    /// ∫ z⁴ f(z) dz.
    pub fn fourth_moment(&self) -> f64 {
        match &*self.kernel {
            Kernel::Gaussian => 3.0,
            Kernel::Uniform => 9.0 / 5.0,
            Kernel::Laplace => 6.0,
            Kernel::Custom(c) => c.fourth_moment,
        }
    }
}

/// Generic quantile inversion by bracketed bisection on the cdf, ignoring any
/// analytic quantile the family may have. The bracket starts at the support
/// (or ±1 for unbounded sides) and expands geometrically until it straddles
/// `u`; expansion past `bound` is an error.
pub fn quantile_numeric_bounded(d: &StandardDensity, u: f64, bound: f64) -> Result<f64> {
    if !(u > 0.0 && u < 1.0) {
        return Err(Error::InvalidProbability(u));
    }
    let (slo, shi) = d.support();
    let mut lo = if slo.is_finite() { slo } else { -1.0 };
    let mut hi = if shi.is_finite() { shi } else { 1.0 };
    while d.cdf(lo) > u {
        lo *= 2.0;
        if lo < -bound {
            return Err(Error::BracketExpansion { u, bound });
        }
    }
    while d.cdf(hi) < u {
        hi *= 2.0;
        if hi > bound {
            return Err(Error::BracketExpansion { u, bound });
        }
    }
    Ok(bisect_cdf(|z| d.cdf(z), u, lo, hi))
}

/// `quantile_numeric_bounded` with the default expansion bound.
pub fn quantile_numeric(d: &StandardDensity, u: f64) -> Result<f64> {
    quantile_numeric_bounded(d, u, DEFAULT_BRACKET_BOUND)
}

/// Bisection for F(z) = u on [lo, hi], assuming F(lo) ≤ u ≤ F(hi). Stops at
/// |F(mid) - u| ≤ QUANTILE_TOL or once the interval is at f64 resolution.
fn bisect_cdf<F: Fn(f64) -> f64>(cdf: F, u: f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut mid = 0.5 * (lo + hi);
    for _ in 0..200 {
        mid = 0.5 * (lo + hi);
        if !(lo < mid && mid < hi) {
            break;
        }
        let c = cdf(mid);
        if (c - u).abs() <= QUANTILE_TOL {
            return mid;
        }
        if c < u {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    mid
}

fn clamp_interval(a: f64, b: f64, half_width: f64) -> (f64, f64) {
    let a = a.clamp(-half_width, half_width);
    let b = b.clamp(-half_width, half_width);
    (a, b.max(a))
}

/// ∫ z φ(z) dz = -φ(z).
fn gauss_first_antideriv(z: f64) -> f64 {
    if z.is_infinite() {
        0.0
    } else {
        -norm_pdf(z)
    }
}

/// ∫ z² φ(z) dz = Φ(z) - z φ(z).
fn gauss_second_antideriv(z: f64) -> f64 {
    if z.is_infinite() {
        if z > 0.0 {
            1.0
        } else {
            0.0
        }
    } else {
        norm_cdf(z) - z * norm_pdf(z)
    }
}

fn laplace_quantile(u: f64) -> f64 {
    if u < 0.5 {
        LAPLACE_B * (2.0 * u).ln()
    } else {
        -LAPLACE_B * (2.0 * (1.0 - u)).ln()
    }
}

/// ∫_{-∞}^z t f(t) dt for the unit-variance laplace.
fn laplace_first_antideriv(z: f64) -> f64 {
    if z.is_infinite() {
        return 0.0;
    }
    if z < 0.0 {
        0.5 * (z / LAPLACE_B).exp() * (z - LAPLACE_B)
    } else {
        -0.5 * (-z / LAPLACE_B).exp() * (z + LAPLACE_B)
    }
}

/// ∫_{-∞}^z t² f(t) dt for the unit-variance laplace.
fn laplace_second_antideriv(z: f64) -> f64 {
    let b = LAPLACE_B;
    if z.is_infinite() {
        return if z > 0.0 { 2.0 * b * b } else { 0.0 };
    }
    if z < 0.0 {
        0.5 * (z / b).exp() * (z * z - 2.0 * z * b + 2.0 * b * b)
    } else {
        2.0 * b * b - 0.5 * (-z / b).exp() * (z * z + 2.0 * z * b + 2.0 * b * b)
    }
}

fn checked_quad<F: Fn(f64) -> f64>(f: F, a: f64, b: f64) -> Result<f64> {
    let r = integrate_with_cap(&f, a, b, 1e-12, 1e-300, 4096);
    if !r.converged || !r.value.is_finite() {
        return Err(Error::NonIntegrable(format!(
            "quadrature over ({a}, {b}) did not converge (estimate {}, error {})",
            r.value, r.abs_error
        )));
    }
    Ok(r.value)
}

/// Finds a finite window of an (possibly unbounded) support outside which
/// neither the mass nor the second-moment integrand contributes at working
/// precision. Doubling chunks; gives up (non-integrable) after 100 rounds.
fn scan_window<F: Fn(f64) -> f64>(pdf: &F, lo: f64, hi: f64) -> Result<(f64, f64)> {
    const ROUNDS: usize = 100;
    const TINY: f64 = 1e-15;

    let (mut wl, mut wu) = match (lo.is_finite(), hi.is_finite()) {
        (true, true) => return Ok((lo, hi)),
        (true, false) => (lo, lo + 2.0_f64.max(lo.abs() * 0.5)),
        (false, true) => (hi - 2.0_f64.max(hi.abs() * 0.5), hi),
        (false, false) => (-1.0, 1.0),
    };

    let chunk = |a: f64, b: f64| -> (f64, f64) {
        let m = integrate(pdf, a, b, 1e-10, 1e-300).value;
        let s = integrate(|x| x * x * pdf(x), a, b, 1e-10, 1e-300).value;
        (m, s)
    };

    let (mut mass, mut second) = chunk(wl, wu);

    if !hi.is_finite() {
        let mut step = (wu - wl).max(1.0);
        let mut done = false;
        for _ in 0..ROUNDS {
            let (dm, ds) = chunk(wu, wu + step);
            if dm <= TINY * mass.max(TINY) && ds <= TINY * second.max(TINY) {
                done = true;
                break;
            }
            mass += dm;
            second += ds;
            wu += step;
            step *= 2.0;
        }
        if !done {
            return Err(Error::NonIntegrable(
                "upper tail keeps contributing mass or variance; not integrable".into(),
            ));
        }
    }
    if !lo.is_finite() {
        let mut step = (wu - wl).max(1.0);
        let mut done = false;
        for _ in 0..ROUNDS {
            let (dm, ds) = chunk(wl - step, wl);
            if dm <= TINY * mass.max(TINY) && ds <= TINY * second.max(TINY) {
                done = true;
                break;
            }
            mass += dm;
            second += ds;
            wl -= step;
            step *= 2.0;
        }
        if !done {
            return Err(Error::NonIntegrable(
                "lower tail keeps contributing mass or variance; not integrable".into(),
            ));
        }
    }
    Ok((wl, wu))
}

/// A location-scale member: density (1/σ) f((x-μ)/σ) over a standardized base.
#[derive(Debug, Clone)]
pub struct LocationScaleModel {
    base: StandardDensity,
    mu: f64,
    sigma: f64,
}

impl LocationScaleModel {
    pub fn new(base: StandardDensity, mu: f64, sigma: f64) -> Result<Self> {
        if !mu.is_finite() {
            return Err(Error::InvalidParameter(format!("non-finite mu: {mu}")));
        }
        if !(sigma > 0.0) || !sigma.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "scale must be positive and finite, got {sigma}"
            )));
        }
        Ok(LocationScaleModel { base, mu, sigma })
    }

    pub fn base(&self) -> &StandardDensity {
        &self.base
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn mean(&self) -> f64 {
        self.mu
    }

    pub fn variance(&self) -> f64 {
        self.sigma * self.sigma
    }

    fn standardize(&self, x: f64) -> f64 {
        (x - self.mu) / self.sigma
    }

    pub fn pdf(&self, x: f64) -> f64 {
        self.base.pdf(self.standardize(x)) / self.sigma
    }

    pub fn cdf(&self, x: f64) -> f64 {
        self.base.cdf(self.standardize(x))
    }

    pub fn quantile(&self, u: f64) -> Result<f64> {
        Ok(self.mu + self.sigma * self.base.quantile(u)?)
    }

    pub fn support(&self) -> (f64, f64) {
        let (a, b) = self.base.support();
        (self.mu + self.sigma * a, self.mu + self.sigma * b)
    }

    /// Finite quadrature window in x coordinates.
    pub fn integration_bounds(&self) -> (f64, f64) {
        let (a, b) = self.base.integration_bounds();
        (self.mu + self.sigma * a, self.mu + self.sigma * b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn quad_check(d: &StandardDensity) {
        let (lo, hi) = d.integration_bounds();
        let mass = integrate(|z| d.pdf(z), lo, hi, 1e-12, 0.0).value;
        let mean = integrate(|z| z * d.pdf(z), lo, hi, 1e-12, 1e-15).value;
        let var = integrate(|z| z * z * d.pdf(z), lo, hi, 1e-12, 0.0).value;
        assert!((mass - 1.0).abs() < 1e-8, "mass {mass}");
        assert!(mean.abs() < 1e-8, "mean {mean}");
        assert!((var - 1.0).abs() < 1e-8, "variance {var}");
    }

    #[test]
    fn builtins_are_standardized() {
        for d in [
            StandardDensity::gaussian(),
            StandardDensity::uniform(),
            StandardDensity::laplace(),
        ] {
            quad_check(&d);
        }
    }

    #[test]
    fn make_standard_by_name() {
        assert_eq!(make_standard("gaussian").unwrap().family(), Family::Gaussian);
        assert_eq!(make_standard("UNIFORM").unwrap().family(), Family::Uniform);
        assert!(matches!(
            make_standard("cauchy"),
            Err(Error::UnknownFamily(_))
        ));
    }

    #[test]
    fn fourth_moments() {
        assert_eq!(StandardDensity::gaussian().fourth_moment(), 3.0);
        assert_eq!(StandardDensity::uniform().fourth_moment(), 1.8);
        assert_eq!(StandardDensity::laplace().fourth_moment(), 6.0);
    }

    #[test]
    fn uniform_geometry() {
        let u = StandardDensity::uniform();
        assert_relative_eq!(u.pdf(0.0), 0.5 / UNIFORM_HALF_WIDTH);
        assert_eq!(u.pdf(2.0), 0.0);
        assert_relative_eq!(u.quantile(0.25).unwrap(), -UNIFORM_HALF_WIDTH / 2.0);
    }

    #[test]
    fn gaussian_quantiles() {
        let g = StandardDensity::gaussian();
        assert_eq!(g.quantile(0.5).unwrap(), 0.0);
        assert_relative_eq!(
            g.quantile(0.975).unwrap(),
            1.959963984540054,
            epsilon = 1e-12
        );
    }

    #[test]
    fn quantile_rejects_bad_probability() {
        let g = StandardDensity::gaussian();
        assert!(matches!(g.quantile(0.0), Err(Error::InvalidProbability(_))));
        assert!(matches!(g.quantile(1.0), Err(Error::InvalidProbability(_))));
        assert!(matches!(
            quantile_numeric(&g, -0.25),
            Err(Error::InvalidProbability(_))
        ));
    }

    #[test]
    fn numeric_quantile_matches_analytic() {
        for d in [
            StandardDensity::gaussian(),
            StandardDensity::uniform(),
            StandardDensity::laplace(),
        ] {
            for &u in &[0.01, 0.25, 0.5, 0.8, 0.999] {
                let zn = quantile_numeric(&d, u).unwrap();
                assert!(
                    (d.cdf(zn) - u).abs() <= QUANTILE_TOL,
                    "{:?} u={u}: cdf(z)={}",
                    d.family(),
                    d.cdf(zn)
                );
                let za = d.quantile(u).unwrap();
                assert!((zn - za).abs() < 1e-9, "{:?}: {zn} vs {za}", d.family());
            }
        }
    }

    #[test]
    fn bracket_expansion_bound_errors() {
        let g = StandardDensity::gaussian();
        // A bound of 2 cannot straddle the 1e-9 quantile (≈ -6).
        assert!(matches!(
            quantile_numeric_bounded(&g, 1e-9, 2.0),
            Err(Error::BracketExpansion { .. })
        ));
    }

    #[test]
    fn partial_moments_full_range() {
        for d in [
            StandardDensity::gaussian(),
            StandardDensity::uniform(),
            StandardDensity::laplace(),
        ] {
            let (lo, hi) = d.support();
            assert!(d.partial_first_moment(lo, hi).abs() < 1e-12);
            assert!((d.partial_second_moment(lo, hi) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn custom_exponential_standardizes() {
        // pdf ∝ exp(-z) on z > 0; standardized mean 0, variance 1.
        let d = StandardDensity::from_pdf(|z| (-z).exp(), (0.0, f64::INFINITY)).unwrap();
        quad_check(&d);
        assert_eq!(d.family(), Family::Custom);
        // Standardized exponential: support starts at -1.
        assert!((d.support().0 + 1.0).abs() < 1e-9);
        assert!(d.support().1.is_infinite());
        // E[z⁴] of standardized exponential is 9.
        assert!((d.fourth_moment() - 9.0).abs() < 1e-7);
    }

    #[test]
    fn custom_gaussian_matches_builtin() {
        let d = StandardDensity::from_pdf(
            |z| (-0.5 * z * z).exp(),
            (f64::NEG_INFINITY, f64::INFINITY),
        )
        .unwrap();
        let g = StandardDensity::gaussian();
        for &u in &[0.05, 0.3, 0.5, 0.7, 0.975] {
            let zq = d.quantile(u).unwrap();
            assert!(
                (zq - g.quantile(u).unwrap()).abs() < 1e-7,
                "u={u}: {zq} vs {}",
                g.quantile(u).unwrap()
            );
        }
    }

    #[test]
    fn custom_unit_uniform_standardizes_to_builtin_support() {
        let d = StandardDensity::from_pdf(
            |z| if (0.0..=1.0).contains(&z) { 1.0 } else { 0.0 },
            (0.0, 1.0),
        )
        .unwrap();
        let (lo, hi) = d.support();
        assert!((lo + UNIFORM_HALF_WIDTH).abs() < 1e-9, "lo {lo}");
        assert!((hi - UNIFORM_HALF_WIDTH).abs() < 1e-9, "hi {hi}");
    }

    #[test]
    fn custom_rejects_degenerate_input() {
        assert!(StandardDensity::from_pdf(|_| 0.0, (0.0, 1.0)).is_err());
        // Infinite variance: pdf ~ |z|^-3 tails.
        let heavy = |z: f64| (1.0 + z.abs()).powi(-3);
        assert!(matches!(
            StandardDensity::from_pdf(heavy, (f64::NEG_INFINITY, f64::INFINITY)),
            Err(Error::NonIntegrable(_))
        ));
    }

    #[test]
    fn tabulated_pdf_round_trip() {
        // Tabulate a triangle density on [0, 2]; peak at 1.
        let pts: Vec<(f64, f64)> = (0..=200)
            .map(|i| {
                let z = 2.0 * i as f64 / 200.0;
                (z, 1.0 - (z - 1.0).abs())
            })
            .collect();
        let d = StandardDensity::from_table(&pts).unwrap();
        quad_check(&d);
    }

    #[test]
    fn tabulated_pdf_validation() {
        assert!(matches!(
            StandardDensity::from_table(&[(0.0, 1.0)]),
            Err(Error::PdfTableTooSmall(1))
        ));
        assert!(matches!(
            StandardDensity::from_table(&[(0.0, 1.0), (0.0, 1.0)]),
            Err(Error::PdfTableNotSorted(1))
        ));
        assert!(matches!(
            StandardDensity::from_table(&[(0.0, 1.0), (1.0, -0.5)]),
            Err(Error::PdfTableNegative(1))
        ));
    }

    #[test]
    fn location_scale_density_and_moments() {
        let m = LocationScaleModel::new(StandardDensity::gaussian(), 2.0, 3.0).unwrap();
        // (1/σ) f((x-μ)/σ) against a direct evaluation.
        let x = 4.2;
        assert_relative_eq!(m.pdf(x), norm_pdf((x - 2.0) / 3.0) / 3.0, epsilon = 1e-15);
        let (lo, hi) = m.integration_bounds();
        let mean = integrate(|x| x * m.pdf(x), lo, hi, 1e-12, 1e-15).value;
        let var = integrate(|x| (x - 2.0) * (x - 2.0) * m.pdf(x), lo, hi, 1e-12, 0.0).value;
        assert!((mean - 2.0).abs() < 1e-6);
        assert!((var - 9.0).abs() < 1e-6);
    }

    #[test]
    fn location_scale_rejects_bad_scale() {
        assert!(LocationScaleModel::new(StandardDensity::gaussian(), 0.0, 0.0).is_err());
        assert!(LocationScaleModel::new(StandardDensity::gaussian(), 0.0, -1.0).is_err());
        assert!(LocationScaleModel::new(StandardDensity::gaussian(), f64::NAN, 1.0).is_err());
    }
}
