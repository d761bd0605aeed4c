//! Crate-wide error type.

use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("unreadable file {path}: {reason}")]
    UnreadableFile { path: PathBuf, reason: String },

    #[error("unsupported codec in {path}: {detail}")]
    UnsupportedCodec { path: PathBuf, detail: String },

    #[error("sample rate mismatch: clip is {clip_hz} Hz, params expect {params_hz} Hz")]
    SampleRateMismatch { clip_hz: u32, params_hz: u32 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("shape mismatch in {op}: {detail}")]
    ShapeMismatch { op: &'static str, detail: String },

    #[error("non-finite value produced by {op}")]
    NonFinite { op: &'static str },

    #[error("token id {id} out of range for vocabulary of size {vocab_size}")]
    TokenOutOfRange { id: u32, vocab_size: usize },

    #[error("manifest error at {path}:{line}: {detail}")]
    Manifest {
        path: PathBuf,
        line: usize,
        detail: String,
    },

    #[error("empty reference")]
    EmptyReference,

    #[error("checkpoint magic mismatch (not a kasr checkpoint)")]
    CheckpointMagic,

    #[error("checkpoint format version {found} unsupported (expected {expected})")]
    CheckpointVersion { found: u32, expected: u32 },

    #[error("checkpoint truncated: {0}")]
    CheckpointTruncated(String),

    #[error("checkpoint checksum failure: payload CRC {found:#010x} != stored {stored:#010x}")]
    CheckpointChecksum { found: u32, stored: u32 },

    #[error("checkpoint invalid: {0}")]
    CheckpointInvalid(String),

    #[error("unknown LoRA target name: {0}")]
    UnknownLoraTarget(String),

    #[error("rank not low: r={rank} >= min(d_in={d_in}, d_out={d_out}) for target {target}")]
    RankNotLow {
        rank: usize,
        d_in: usize,
        d_out: usize,
        target: String,
    },

    #[error("training diverged at step {step}: {detail}")]
    Divergence { step: usize, detail: String },

    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
