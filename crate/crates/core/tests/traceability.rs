//! The claim table in the README lists exactly the registered claims.

use std::collections::BTreeSet;

use kordered::claims::claim_ids;

#[test]
fn readme_table_matches_registry() {
    let readme = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../README.md")).unwrap();
    let documented: Vec<&str> = readme
        .lines()
        .filter_map(|l| l.strip_prefix("| `"))
        .filter_map(|l| l.split('`').next())
        .collect();
    let registered: Vec<&str> = claim_ids().collect();
    assert_eq!(documented, registered);
    assert_eq!(documented.iter().collect::<BTreeSet<_>>().len(), documented.len());
}
