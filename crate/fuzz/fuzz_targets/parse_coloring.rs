#![no_main]
use libfuzzer_sys::fuzz_target;
use locchroma::io::{parse_coloring, write_coloring};

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(c) = parse_coloring(s) {
            assert_eq!(
                write_coloring(&c),
                write_coloring(&parse_coloring(&write_coloring(&c)).unwrap())
            );
        }
    }
});
