//! Fuzzes the partition notation parser: no panics on arbitrary input, and
//! whatever parses must round-trip through `ascending_string`.

#![no_main]

use libfuzzer_sys::fuzz_target;
use partition_lab::partition::Partition;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(partition) = Partition::parse(text) {
        let rendered = partition.ascending_string();
        let round = Partition::parse(&rendered).expect("rendered notation re-parses");
        assert_eq!(round, partition);
        // Conjugation allocates one cell per unit of the greatest part, so
        // only exercise it on inputs of reasonable total size.
        if partition.n() <= 1 << 20 {
            assert_eq!(partition.conjugate().conjugate(), partition);
        }
    }
});
