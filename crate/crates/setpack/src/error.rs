use std::fmt;

use thiserror::Error;

/// Names the runtime check that a lifted witness failed. Each check is a
/// conclusion the reduction guarantees for any valid witness; a failure
/// falsifies the reduction and must abort verification loudly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SoundnessCheck {
    /// A witness of size r must split into exactly l V-sets and k E-sets.
    PartitionSizes,
    /// A witness packing must cover the whole universe.
    Coverage,
    /// The G-vertices extracted per position must be strictly increasing.
    VertexOrdering,
    /// The extracted vertex map must be an injective homomorphism.
    Homomorphism,
}

impl fmt::Display for SoundnessCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            SoundnessCheck::PartitionSizes => "partition-sizes",
            SoundnessCheck::Coverage => "coverage",
            SoundnessCheck::VertexOrdering => "vertex-ordering",
            SoundnessCheck::Homomorphism => "homomorphism",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("index out of range: {0}")]
    Range(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("no labeled set in the instance matches {0}")]
    WitnessNotFound(String),
    #[error("soundness violation ({check}): {detail}")]
    Soundness {
        check: SoundnessCheck,
        detail: String,
    },
    #[error("equivalence failure: {0}")]
    Equivalence(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
