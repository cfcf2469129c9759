#![no_main]
use libfuzzer_sys::fuzz_target;
use locchroma::io::{parse_tree, write_tree};

// Whatever parses must write back to text that parses to the same tree.
fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(tree) = parse_tree(s) {
            let again = parse_tree(&write_tree(&tree)).expect("written tree parses");
            assert_eq!(again, tree);
        }
    }
});
