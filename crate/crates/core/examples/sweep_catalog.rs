// Sweep admissible lengths, write a catalog, and verify it.

use gbcodex::arithmetic::{sweep_catalog, SweepConfig};
use gbcodex::catalog::{render_csv, render_ndjson, verify_text, CatalogHeader};

pub fn run_example() -> gbcodex::Result<()> {
    let config = SweepConfig {
        max_length: 120,
        ..SweepConfig::default()
    };
    let entries = sweep_catalog(&config)?;
    print!("{}", render_csv(&entries));

    let text = render_ndjson(&CatalogHeader::for_sweep(&config), &entries)?;
    let outcome = verify_text(&text);
    println!(
        "verified {} records, {} failures",
        outcome.records,
        outcome.failures.len()
    );
    assert!(outcome.ok());
    Ok(())
}

fn main() {
    run_example().expect("sweep_catalog");
}
