//! Every book chapter is listed in SUMMARY.md and compiled as a doctest.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

fn book_src() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/../../book/src"))
}

fn chapters_on_disk() -> BTreeSet<String> {
    fs::read_dir(book_src())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .filter(|name| name.ends_with(".md") && name != "SUMMARY.md")
        .collect()
}

fn linked(text: &str, open: &str, close: char) -> BTreeSet<String> {
    text.split(open)
        .skip(1)
        .filter_map(|rest| rest.split(close).next())
        .map(|s| s.trim_start_matches("../../../book/src/").to_string())
        .filter(|s| s.ends_with(".md"))
        .collect()
}

#[test]
fn summary_lists_every_chapter() {
    let summary = fs::read_to_string(book_src().join("SUMMARY.md")).unwrap();
    assert_eq!(linked(&summary, "](", ')'), chapters_on_disk());
}

#[test]
fn every_chapter_is_doctested() {
    let lib = fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/src/lib.rs")).unwrap();
    assert_eq!(linked(&lib, "include_str!(\"", '"'), chapters_on_disk());
}
