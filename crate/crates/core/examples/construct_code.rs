// Build GB codes from generator strings and compare the two ways of
// computing their dimension.

use gbcodex::{GbSpec, Side};

pub fn run_example() -> gbcodex::Result<()> {
    for (a, b, n) in [
        ("1+x", "1+x^5", 13),
        ("1+x^3", "x+x^2", 5),
        ("1", "1", 3),
        ("1+x+x^2", "1+x^3", 9),
    ] {
        let spec = GbSpec::parse(a, b, n)?;
        let code = spec.build()?;
        let k = code.dimension();
        assert_eq!(k, spec.dimension_formula());
        print!("GB({a}, {b}, {n}): [[{}, {k}]]", code.length());
        if code.kernel_dimension(Side::X) <= 20 {
            print!(" d_X = {}", code.exhaustive_distance(Side::X, 20)?);
        }
        println!();
    }
    Ok(())
}

fn main() {
    run_example().expect("construct_code");
}
