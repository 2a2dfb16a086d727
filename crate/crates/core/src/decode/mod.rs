//! Classical decoding for the cycle code: recover a low-weight edge set from
//! its vertex-parity syndrome via a minimum T-join.

mod matching;
mod tjoin;

pub use matching::{min_weight_perfect_matching, min_weight_perfect_matching_with, Matching};
pub use tjoin::{decode_parity, decode_parity_with, min_t_join, min_t_join_with, DecodeOutcome, JoinResult, TSet};
