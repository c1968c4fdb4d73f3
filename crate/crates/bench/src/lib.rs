//! Fixtures shared by the benchmarks.

use percode_core::codes::hamming_code;
use percode_core::partition::{krotov_partition, Partition};
use percode_core::{make_field, Code};

pub fn length_8_partition() -> Partition {
    krotov_partition(&make_field(3).expect("m=3")).expect("length-8 partition")
}

/// Hamming code of length `2^m - 1`.
pub fn perfect(m: u32) -> Code {
    hamming_code(&make_field(m).expect("field")).expect("Hamming code")
}
