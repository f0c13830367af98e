use alexpara::catalog::catalog_list;
use alexpara::laws::{run_laws, LawConfig, LawId};

#[test]
fn every_catalog_entry_meets_its_expected_law_table() {
    let cfg = LawConfig::default();
    let mut mismatches = Vec::new();
    for entry in catalog_list() {
        let start = std::time::Instant::now();
        let outcomes = run_laws(&entry, LawId::ALL, &cfg).expect("laws run");
        eprintln!("{} in {:?}", entry.name, start.elapsed());
        for (id, out) in LawId::ALL.iter().zip(&outcomes) {
            eprintln!("  {:<28} {:?} (expected {:?}) {}", id.as_str(), out.result.status, out.expected, out.result.note);
            if !out.matched {
                mismatches.push(format!("{}:{} got {:?}", entry.name, id, out.result.status));
            }
            if out.result.failed() {
                assert_eq!(out.result.replay(&entry.oracle), Ok(true), "{}:{} witness replays", entry.name, id);
            }
        }
    }
    assert!(mismatches.is_empty(), "{mismatches:#?}");
}
