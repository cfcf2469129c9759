//! Replays the checked-in fuzz corpus and throws random text at the parsers.

use std::path::Path;

use proptest::prelude::*;

use locchroma::io::{
    parse_coloring, parse_documents, parse_palm_spec, parse_tree, write_coloring, write_palm_spec,
    write_tree,
};

fn exercise(s: &str) {
    if let Ok(t) = parse_tree(s) {
        assert_eq!(parse_tree(&write_tree(&t)).unwrap(), t);
    }
    if let Ok(p) = parse_palm_spec(s) {
        assert_eq!(parse_palm_spec(&write_palm_spec(&p)).unwrap(), p);
    }
    if let Ok(c) = parse_coloring(s) {
        assert_eq!(parse_coloring(&write_coloring(&c)).unwrap(), c);
    }
    let _ = parse_documents(s);
}

#[test]
fn fuzz_corpus_seeds() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus");
    let mut seen = 0;
    for target in std::fs::read_dir(&root).unwrap() {
        for seed in std::fs::read_dir(target.unwrap().path()).unwrap() {
            let bytes = std::fs::read(seed.unwrap().path()).unwrap();
            exercise(&String::from_utf8_lossy(&bytes));
            seen += 1;
        }
    }
    assert!(seen >= 4);
}

proptest! {
    #[test]
    fn parsers_never_panic(s in "(tree|palm|coloring)?[ 0-9,\\n-]{0,60}") {
        exercise(&s);
    }

    #[test]
    fn parsers_never_panic_on_any_text(s in "\\PC{0,80}") {
        exercise(&s);
    }
}
