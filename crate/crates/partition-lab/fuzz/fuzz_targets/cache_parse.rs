//! Fuzzes the cache file parser: arbitrary bytes must either parse or be
//! rejected with an error, never panic, and parsed tables must survive a
//! serialize/parse round trip unchanged.

#![no_main]

use libfuzzer_sys::fuzz_target;
use partition_lab::euler::PartitionTable;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(table) = PartitionTable::from_cache_str(text) {
        let round = PartitionTable::from_cache_str(&table.to_cache_string())
            .expect("a serialized cache re-parses");
        assert_eq!(round.values(), table.values());
        assert_eq!(round.max_n(), table.max_n());
    }
});
