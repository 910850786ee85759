//! Result files and resumable search checkpoints.
//!
//! Every exported record carries [`SCHEMA_VERSION`]. JSONL files hold one
//! object per line. CSV files start with a header row and carry the same
//! fields minus `schema_version` and `kind`; list-valued fields are joined
//! by `;` and always quoted. Qualities are written as strings with 10 significant
//! digits so that output is identical on every platform.

mod checkpoint;
mod records;
mod resume;

pub use checkpoint::{
    load_checkpoint, run_resumable, save_checkpoint, ResumableRun, RunOutcome, SearchCheckpoint, SearchParams,
    CHECKPOINT_VERSION,
};
pub use resume::{resume_abc_hunt, resume_power_sum};
pub use records::{
    export, export_to_path, format_quality, parse, AuditRecord, ExportRecord, Format, SolutionRecord, TupleRecord,
    SCHEMA_VERSION,
};
