//! Potential-guided (p+1)-packing optimisation and the end-to-end p-center solver.

mod brute;
mod extract;
mod improve;
mod properties;
mod solve;
mod state;

pub use brute::{brute_dispersion, brute_pcenter, BruteCaps};
pub use extract::extract_centers;
pub use improve::{improve_b, improve_c, optimize_packing, Optimized};
pub use properties::{check_properties, PropertyReport};
pub use solve::{round_cap, solve, SolveOptions};
pub use state::{recompute_state, PackingState};
