//! Distribution-level evaluation metrics for sets of molecules.
//!
//! The crate parses SMILES into molecular graphs, turns molecules into
//! circular fingerprints or learned sequence-model embeddings, fits Gaussian
//! statistics to either representation, and evaluates the squared Fréchet
//! (Wasserstein-2) distance between two such Gaussians. On top of that sit
//! diversity metrics, disturbed-dataset generators and the experiment
//! harness that drives them.

pub mod chemnet;
pub mod fingerprint;
pub mod frechet;
pub mod harness;
pub mod linalg;
pub mod real;
pub mod rng;
pub mod smiles;

pub use real::Real;
pub use rng::SplitMix64;

/// Single-precision model, the default for bulk embedding work.
pub type ChemNetModel32 = chemnet::ChemNetModel<f32>;
/// Double-precision model, used where layer outputs are checked to tight tolerances.
pub type ChemNetModel64 = chemnet::ChemNetModel<f64>;
/// Dense matrix aliases for the two supported scalar widths.
pub type Matrix32 = linalg::Matrix<f32>;
pub type Matrix64 = linalg::Matrix<f64>;
