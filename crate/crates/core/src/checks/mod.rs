//! Machine checks of the homotopy-type claims, each producing a
//! [`TheoremReport`].

pub mod predictions;
pub mod report;
pub mod table;
pub mod validators;

pub use predictions::{predict_clique_cycle_power, predict_ind_circular, predict_ind_cycle};
pub use report::{TheoremReport, Verdict, HOMOLOGY_LEVEL_NOTE};
pub use table::{parse_table, predicted_table, reference_table, render_csv, render_markdown, TableEntry};
pub use validators::*;
