#![no_main]

use libfuzzer_sys::fuzz_target;
use symplactic::io::parse_shape_spec;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if text.len() > 256 {
        return;
    }
    if let Ok((outer, inner)) = parse_shape_spec(text) {
        assert!(outer.contains(&inner));
        assert!(outer.heights().windows(2).all(|w| w[0] >= w[1]));
    }
});
