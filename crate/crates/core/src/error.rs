use thiserror::Error;

/// Errors produced by the task suite, model, trainer and analysis code.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument fell outside the domain a task family or operation accepts.
    #[error("parameter out of domain: {0}")]
    ParameterDomain(String),

    /// A prompt contained a character the fixed vocabulary does not cover.
    #[error("cannot tokenize character {0:?}: not in vocabulary")]
    Tokenization(char),

    /// A prompt could not be parsed into query/is/answer/separator roles.
    #[error("malformed prompt: {0}")]
    PromptParse(String),

    /// Requested table size exceeds what the key/value alphabets can hold.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// Checkpoint bytes do not match the expected layout or config.
    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    /// A (layer, position) address fell outside the trace bounds.
    #[error("address out of range: {0}")]
    AddressOutOfRange(String),

    /// Donor and recipient demonstration counts disagree.
    #[error("demonstration count mismatch: donor has {donor}, recipient has {recipient}")]
    JMismatch { donor: usize, recipient: usize },

    /// A matrix was too ill-conditioned for the requested factorization.
    #[error("numerical conditioning failure: {0}")]
    Conditioning(String),

    /// Training loss blew past the divergence guard.
    #[error("training diverged at step {step}: loss {loss} exceeded 10x initial loss {initial} for {window} consecutive steps")]
    TrainingDiverged {
        step: usize,
        loss: f64,
        initial: f64,
        window: usize,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
