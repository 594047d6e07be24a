//! ECOCECS: error-correcting output codes driven by class-separability
//! data-complexity measures.
//!
//! The crate reduces an R-class problem to binary problems through a coding
//! matrix. The ECOCECS encoder builds that matrix as a binary tree of class
//! bipartitions, each refined by an exchange-based local search that lowers a
//! nearest-neighbor complexity index (N2 or N3) between the two groups.
//! Baseline coders (one-vs-all, one-vs-one, ordinal), binary base learners,
//! filter feature selection, Hamming-style decoding, and macro-averaged
//! evaluation metrics round out the pipeline.
//!
//! Typical flow:
//!
//! ```
//! use ecocecs::data::{generate_blobs, split_stratified, BlobSpec};
//! use ecocecs::complexity::ComplexityKind;
//! use ecocecs::encoder::{ecocecs_encode, SearchOptions};
//! use ecocecs::dichotomizer::{DichotomizerKind, TrainConfig};
//! use ecocecs::pipeline::EcocModel;
//! use ecocecs::metrics::evaluate;
//!
//! let data = generate_blobs(&BlobSpec {
//!     classes: 4,
//!     per_class: 12,
//!     features: 6,
//!     informative: 6,
//!     spread: 0.3,
//!     seed: 7,
//! })
//! .unwrap();
//! let (train, test) = split_stratified(&data, 0.7, 11).unwrap();
//! let enc = ecocecs_encode(&train, ComplexityKind::N2, 3, &SearchOptions::default()).unwrap();
//! let model = EcocModel::fit(
//!     &train,
//!     enc.matrix,
//!     DichotomizerKind::GaussianNb,
//!     &TrainConfig::default(),
//!     5,
//! )
//! .unwrap();
//! let predicted = model.predict_batch(&test).unwrap();
//! let truth: Vec<String> = (0..test.n_samples()).map(|i| test.label_name(i).to_string()).collect();
//! let report = evaluate(&truth, &predicted, test.class_names(), 1.0).unwrap();
//! assert!(report.accuracy > 0.9);
//! ```

pub mod complexity;
pub mod data;
pub mod dichotomizer;
pub mod encoder;
pub mod error;
pub mod feature_selection;
pub mod matrix;
pub mod metrics;
pub mod pipeline;
pub mod seeding;

pub use error::{EcocError, Result};
