// Certified distance reports, with and without the oracle.

use gbcodex::{determine, Budget};

pub fn run_example() -> gbcodex::Result<()> {
    let no_oracle = Budget {
        oracle_cap: 0,
        ..Budget::default()
    };
    for (alpha, n, budget) in [
        (2, 5, Budget::default()),
        (5, 13, Budget::default()),
        (31, 74, no_oracle.clone()),
        (9, 82, no_oracle),
    ] {
        let r = determine(alpha, n, &budget)?;
        println!(
            "alpha={alpha} n={n}: {} <= d <= {}  exact={:?}  {}",
            r.certified_lower(),
            r.upper_bound,
            r.exact,
            r.method.as_str()
        );
    }
    Ok(())
}

fn main() {
    run_example().expect("distance_report");
}
