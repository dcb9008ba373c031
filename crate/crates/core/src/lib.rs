pub mod corpus;
pub mod density;
pub mod graph;
pub mod graphon;
pub mod par;
pub mod random;
pub mod rational;
pub mod reduce;
pub mod rng;
pub mod spectral;
