// Square roots of −1 modulo n and the admissible lengths.

use gbcodex::arithmetic::{factorize, is_admissible, sqrt_minus_one_all};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> gbcodex::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in [5u64, 10, 25, 65, 1105, 12] {
        if is_admissible(n) {
            let roots = sqrt_minus_one_all(n, &mut rng)?;
            println!("{n:>5} = {:?}: {roots:?}", factorize(n).0);
        } else {
            println!("{n:>5} is not admissible");
        }
    }
    let count = (1..=1000).filter(|&n| is_admissible(n)).count();
    println!("{count} admissible n up to 1000");
    Ok(())
}

fn main() {
    run_example().expect("square_roots");
}
