#![no_main]

use libfuzzer_sys::fuzz_target;
use symplactic::io::{format_word, parse_word};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    // first byte-ish of entropy picks the rank
    let rank = (data.first().copied().unwrap_or(1) % 8) + 1;
    if let Ok(word) = parse_word(text, rank) {
        // anything that parses must round-trip
        let printed = format_word(&word, false);
        let reparsed = parse_word(&printed, rank).expect("formatted words reparse");
        assert_eq!(reparsed, word);
    }
});
