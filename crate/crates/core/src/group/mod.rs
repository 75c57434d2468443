//! Free-group words, presentations and their invariants.

pub mod abelian;
pub mod extract;
pub mod finite;
pub mod matrix;
pub mod presentation;
pub mod presets;
pub mod tietze;
pub mod word;

pub use abelian::{h1, AbelianGroup};
pub use extract::{presentation_from_cw, presentation_from_pairings, TreeStrategy};
pub use finite::{count_homomorphisms, groups_up_to_order_12, FiniteGroup};
pub use matrix::{smith_normal_form, IntegerMatrix, SmithDecomposition};
pub use presentation::Presentation;
pub use presets::{preset_presentation, PresetId};
pub use tietze::{reduced_family_presentation, reduction_trace, simplify, tietze_eliminate};
pub use word::{Letter, Word};
