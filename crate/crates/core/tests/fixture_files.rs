//! The presentation files shipped under `fixtures/` match the built-ins.

use std::path::PathBuf;

use posmon_core::fixtures::Fixture;
use posmon_core::Presentation;

#[test]
fn fixture_files_match_builtins() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    for f in Fixture::ALL {
        let text = std::fs::read_to_string(dir.join(f.name())).unwrap();
        let parsed = Presentation::parse(&text).unwrap();
        assert_eq!(parsed, f.presentation(), "{}", f.name());
        assert_eq!(Presentation::parse(&parsed.to_text()).unwrap(), parsed);
    }
}
