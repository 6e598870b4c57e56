// Walks on the torus graph: closed walks lift to lattice vectors, and a
// staircase over a short lattice vector is a logical operator.

use gbcodex::torus_graph::Step;
use gbcodex::{TorusGraph, Walk};

pub fn run_example() -> gbcodex::Result<()> {
    let g = TorusGraph::new(13, 5)?;
    let steps = vec![
        Step::PlusOne,
        Step::PlusAlpha,
        Step::PlusOne,
        Step::PlusAlpha,
        Step::PlusOne,
    ];
    let walk = Walk::new(0, steps);
    println!("vertices {:?}", g.walk_vertices(&walk));
    println!("closed: {}, lift {:?}", g.is_closed(&walk), walk.lift());

    let code = g.code();
    let witness = g.lattice().min_l1().witness;
    let staircase = g.staircase(witness, 0)?;
    println!(
        "staircase over {witness:?}: edges {:?}, logical: {}",
        staircase.edge_indices(),
        code.is_logical_x(staircase.bits())?
    );
    let face = g.face(3);
    println!(
        "face 3 {:?} is a stabilizer: {}",
        face.edge_indices(),
        g.is_sum_of_faces(&face)?
    );
    Ok(())
}

fn main() {
    run_example().expect("torus_walks");
}
