use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid spec: need 1 <= k < t, got k={k}, t={t}")]
    InvalidSpec { k: i64, t: i64 },

    #[error("G({k},{t}) is not connected (gcd = {g})")]
    NotConnected { k: i64, t: i64, g: i64 },

    #[error("grid point column {col} outside [0, {t}]")]
    InvalidPoint { col: i64, t: i64 },

    #[error("integer overflow in grid arithmetic")]
    Overflow,

    #[error("malformed sequence: {0}")]
    MalformedSequence(String),

    #[error("sequence index must be >= 1")]
    IndexOutOfRange,

    #[error("unsupported sequence: {0}")]
    UnsupportedSequence(String),

    #[error("invalid color {color} at vertex {vertex}: colors start at 1")]
    InvalidColor { vertex: i64, color: u32 },

    #[error("invalid schema: {0}")]
    InvalidSchema(String),

    #[error("family {family} does not admit (k,t)=({k},{t}): shift-sum residue mismatch")]
    WrongFamily { family: String, k: i64, t: i64 },

    #[error("family {family} needs t >= {min}, got t={t}")]
    FamilyTooSmall { family: String, t: i64, min: i64 },

    #[error("constructive colorings cover 3 <= k < t only (got k={k}); chromatic values remain available")]
    ConstructiveOutOfScope { k: i64 },

    #[error("empty assignment window")]
    EmptyWindow,

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
