//! File formats, instance generation, verification and benchmarking around
//! [`primatch_core`].

pub mod bench;
pub mod format;
pub mod gen;
pub mod verify;

pub use format::{
    format_trace, parse_graph, parse_matching, serialize_matching, write_instance, MatchingFile, ParseError,
};
pub use gen::{generate, instance_text, GenError, InstanceSpec, PriorityDistribution};
pub use verify::{verify_matching, VerifyError, VerifyReport};
