#![no_main]
use libfuzzer_sys::fuzz_target;

// Mixed streams as piped between subcommands.
fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = locchroma::io::parse_documents(s);
    }
});
