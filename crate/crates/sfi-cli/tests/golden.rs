//! Byte-identical regeneration of the committed figure-data files.

mod common;

use common::{golden_cases, golden_dir, stdout_of};

#[test]
fn golden_files_regenerate_byte_identically() {
    for (name, args) in golden_cases() {
        let path = golden_dir().join(name);
        let expected = std::fs::read(&path)
            .unwrap_or_else(|e| panic!("missing golden file {}: {e}", path.display()));
        let actual = stdout_of(&args);
        assert_eq!(
            actual.as_bytes(),
            expected.as_slice(),
            "{name} drifted from the committed bytes"
        );
    }
}

/// Rewrites the committed files from the current binary. Run explicitly:
/// `cargo test -p sfi-cli --test golden -- --ignored`
#[test]
#[ignore]
fn regenerate_golden_files() {
    let dir = golden_dir();
    std::fs::create_dir_all(&dir).unwrap();
    for (name, args) in golden_cases() {
        std::fs::write(dir.join(name), stdout_of(&args)).unwrap();
    }
}
