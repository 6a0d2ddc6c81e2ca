//! Fuzzes the level-breakdown JSON decoder: arbitrary documents must parse
//! or be rejected without panicking, and accepted ones must round-trip
//! through the stable serialization byte-for-byte.

#![no_main]

use libfuzzer_sys::fuzz_target;
use partition_lab::levels::LevelBreakdown;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(breakdown) = LevelBreakdown::from_json_str(text) {
        let rendered = breakdown.to_json_string();
        let round =
            LevelBreakdown::from_json_str(&rendered).expect("a serialized breakdown re-parses");
        assert_eq!(round.to_json_string(), rendered);
        assert_eq!(round.n(), breakdown.n());
        assert_eq!(round.total(), breakdown.total());
        assert_eq!(round.per_level(), breakdown.per_level());
    }
});
