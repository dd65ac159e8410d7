//! Transcribed sequence lists used to cross-check the generated rule sets.

/// The 92 order-3 sequences listed as forbidden for Hermitian matrices.
pub const LISTED_ORDER3_HERMITIAN: [&str; 92] = [
    "A+A*A+", "A-A*A-", "A*A*N", "A+A*N", "A-A*N", "A+A*S+", "A-A*S-", "A*NA*", "A*NA+", "A*NA-", "A+NA*", "A+NA+",
    "A-NA*", "A-NA-", "A*NN", "A*NS*", "A*NS+", "A*NS-", "A+NS*", "A+NS+", "A-NS*", "A-NS-", "A+S*A+", "A+S+A+",
    "A+S-A+", "A-S*A-", "A-S+A-", "A-S-A-", "A*S*N", "A+S*N", "A-S*N", "A+S*S+", "A-S*S-", "NA*A*", "NA*A+", "NA*A-",
    "NA*N", "NA*S*", "NA*S+", "NA*S-", "NNA*", "NNA+", "NNA-", "NNS*", "NNS+", "NNS-", "NS*A*", "NS*A+", "NS*A-",
    "NS+A*", "NS+A+", "NS+A-", "NS-A*", "NS-A+", "NS-A-", "NS*N", "NS*S*", "NS*S+", "NS*S-", "S+A*A+", "S-A*A-",
    "S*A*N", "S+A*N", "S-A*N", "S+A*S+", "S-A*S-", "S*NA*", "S*NA+", "S*NA-", "S+NA*", "S+NA+", "S-NA*", "S-NA-",
    "S*NN", "S*NS*", "S*NS+", "S*NS-", "S+NS*", "S+NS+", "S-NS*", "S-NS-", "S+S*A+", "S+S+A+", "S+S-A+", "S-S*A-",
    "S-S+A-", "S-S-A-", "S*S*N", "S+S*N", "S-S*N", "S+S*S+", "S-S*S-",
];

/// Order-3 sequences attainable by some Hermitian matrix but by no real
/// symmetric one.
pub const REAL_ONLY_ORDER3: [&str; 9] = ["NA+A*", "NA+N", "NA+S*", "NA+S+", "NA+S-", "NA-N", "NA-S*", "NA-S+", "NA-S-"];

/// The 44 order-2 sequences other than `NN` that are attained as windows of
/// real symmetric witnesses.
pub const LISTED_ORDER2_ATTAINABLE: [&str; 44] = [
    "A*A*", "A*A+", "A*A-", "A+A*", "A+A+", "A+A-", "A-A*", "A-A+", "A-A-", "A+N", "A-N", "A*S*", "A*S+", "A*S-",
    "A+S*", "A+S+", "A+S-", "A-S*", "A-S+", "A-S-", "NA+", "NA-", "NS+", "NS-", "S*A*", "S*A+", "S*A-", "S+A*", "S+A+",
    "S+A-", "S-A*", "S-A+", "S-A-", "S+N", "S-N", "S*S*", "S*S+", "S*S-", "S+S*", "S+S+", "S+S-", "S-S*", "S-S+",
    "S-S-",
];

/// Sequences that never begin the sepr-sequence of a Hermitian matrix.
pub const NOT_INITIAL: [&str; 12] =
    ["A*A+", "A*N", "A*S+", "NA*", "NA+", "NS*", "NS+", "S*A+", "S*N", "S*S+", "S+A+", "S-A+"];
