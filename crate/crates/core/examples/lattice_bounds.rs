// Lattice quantities behind the distance bounds: reduced basis, shortest
// vector, minimal L1 vector, and the bound for general weight-two pairs.

use gbcodex::distance::{lattice_lower_bound, lattice_lower_bound_uv};
use gbcodex::Lattice2D;

pub fn run_example() -> gbcodex::Result<()> {
    for (alpha, n) in [(3, 10), (5, 13), (7, 50), (31, 74)] {
        let s = Lattice2D::gb(alpha, n)?.summary();
        let bound = lattice_lower_bound(alpha, n)?;
        println!(
            "alpha={alpha:>2} n={n:>3}  basis={:?}  λ²={:>3}  d >= {}  minL1={} at {:?}",
            s.reduced_basis, s.lambda_sq, bound.value, s.min_l1, s.min_l1_witness
        );
    }
    let b = lattice_lower_bound_uv(3, 1, 10)?;
    println!("GB(1+x^3, 1+x, 10): λ²={} d >= {}", b.lambda_sq, b.value);
    Ok(())
}

fn main() {
    run_example().expect("lattice_bounds");
}
