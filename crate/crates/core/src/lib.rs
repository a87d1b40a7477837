//! Plutchik's wheel of emotions rendered as deterministic SVG.
//!
//! ```
//! use plutchik::{render_svg, ScoreSet, RenderOptions};
//!
//! let scores = ScoreSet::basic([1.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0]).unwrap();
//! let svg = render_svg(&scores, &RenderOptions::default()).unwrap();
//! assert!(svg.contains("petal-joy"));
//! ```

pub mod cli;
pub mod doc;
pub mod emotion;
pub mod error;
pub mod geometry;
pub mod ingest;
pub mod layout;
pub mod render;

pub use doc::{FontWeight, VectorDoc};
pub use emotion::{
    aggregate_corpus, angular_position, parse_scores, Degree, Dyad, DyadKind, Emotion,
    IntensityTriple, RawScore, Score, ScoreKind, ScoreSet, Slot, Wheel,
};
pub use error::{Error, Result, ScoreError};
pub use geometry::{intensity_sections, petal_outline, two_tone_halves, PetalPath};
pub use ingest::{load_corpus, load_scores, parse_score_json, save_scores};
pub use layout::{compose_grid, render_grid, GridSpec};
pub use render::{render_svg, render_wheel, Highlight, RenderOptions};
