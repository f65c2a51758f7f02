//! The auxiliary polynomial, the coefficient transform, exact `U`, `V`, `W`
//! at `x_k`, and the integer linear-form coefficients built from them.

mod coeff_transform;
mod params;
mod poly;
mod scaled;
mod uvw;

pub use coeff_transform::{transform_coeffs, transform_numerators, transformed_sum};
pub use params::{Family, Params};
pub use poly::{build_a, IntPoly};
pub use scaled::{scaled_integer_forms, scaling, IntegerForms, Scaling};
pub use uvw::{eval_uvw, eval_uvw_at_x, t_of, x_point, UVWValues};
