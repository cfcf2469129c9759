#![no_main]
use libfuzzer_sys::fuzz_target;
use locchroma::io::{parse_palm_spec, write_palm_spec};

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(spec) = parse_palm_spec(s) {
            assert_eq!(parse_palm_spec(&write_palm_spec(&spec)).unwrap(), spec);
        }
    }
});
