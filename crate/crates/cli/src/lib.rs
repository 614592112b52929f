//! Library side of the `szeged` command-line tool.

pub mod commands;
pub mod document;

pub use document::GraphDocument;

/// Exit code for an error: 3 for structural problems with the graph
/// (disconnected, not a tree), 2 for everything else.
pub fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<szeged_core::Error>() {
        Some(e) if e.is_structural() => 3,
        _ => 2,
    }
}
