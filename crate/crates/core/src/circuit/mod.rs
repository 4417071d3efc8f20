//! Oracle synthesis, interaction graph, layer scheduling and classical checks.

mod format;
mod gate;
mod graph;
mod resources;
mod schedule;
mod verify;

pub use format::{read_csv, write_csv, write_text};
pub use gate::Gate;
pub use graph::{build_gates, interaction_graph, max_degree, InteractionGraph};
pub use resources::{resource_report, ResourceReport};
pub use schedule::{
    color_bipartite_edges, schedule, schedule_with, ScheduleOptions, ScheduledCircuit,
};
pub use verify::{
    evaluate_basis, verify_oracle, Counterexample, OracleReport, VerifyMode, VerifyOptions,
};
