//! Barnes integrals along vertical contours, their right-side power series and
//! left-side residue expansions.

mod checks;
mod quadrature;
mod series;
mod integrand;

pub use checks::{scale_value, t_independence_check, weierstrass_limit_check, FamilyCheckReport, SampleCheck};
pub use quadrature::{choose_contour, eval_integral, integrand_magnitude, ContourSpec, QuadratureResult};
pub use series::{residue_series_left, series_right, ResidueExpansion, ResidueFamily};
pub use integrand::{IntegrandSpec, Resolved, Scale};

#[cfg(test)]
mod tests;
