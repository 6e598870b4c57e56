// Equivalent presentations of weight-two GB codes: shifts, substitutions,
// swaps and the canonical form.

use gbcodex::arithmetic::optimized_kitaev_spec;
use gbcodex::{GbSpec, Side};

fn params(spec: &GbSpec) -> gbcodex::Result<(usize, usize, String)> {
    let code = spec.build()?;
    Ok((
        code.length(),
        code.dimension(),
        code.exhaustive_distance(Side::X, 22)?.to_string(),
    ))
}

pub fn run_example() -> gbcodex::Result<()> {
    let spec = GbSpec::parse("x^2+x^5", "x^4+x^9", 13)?;
    let normalized = spec.shift_normalize()?;
    let canonical = spec.canonicalize(true)?;
    println!(
        "{} {} -> {} {} -> alpha {}",
        spec.a(),
        spec.b(),
        normalized.a(),
        normalized.b(),
        canonical.alpha
    );
    for variant in [
        spec.clone(),
        spec.shifted(3, 7),
        spec.substituted(2),
        spec.swapped(),
        canonical.spec(),
    ] {
        println!(
            "  GB({}, {}, 13): {:?}",
            variant.a(),
            variant.b(),
            params(&variant)?
        );
    }

    for t in 1..=3 {
        let c = optimized_kitaev_spec(t)?.canonicalize(false)?;
        println!("optimized family t={t}: alpha={} n={}", c.alpha, c.n);
    }
    Ok(())
}

fn main() {
    run_example().expect("equivalences");
}
