//! Lattice simplices, their box groups and age profiles.

pub mod box_group;
pub mod group;
pub mod payne;
pub mod profile;
pub mod samples;
pub mod snf;

pub use box_group::{parallelepiped_hstar, BoxElement, BoxGroup};
pub use group::AbelianGroup;
pub use payne::{box_group, dilation_count_hstar, enumerate_alphas, payne_hstar, PayneSimplex};
pub use profile::{age_profile, AgeProfile, Convention, ElementClass};
pub use samples::{terminal_cyclic_samples, terminal_cyclic_weights, CyclicSample};
