//! The full conversion pipeline on the [[7,1,3]] code: qubits -> Majorana
//! modes -> weakly self-dual CSS, with parameters [[n,k,d]] turning into
//! [[4n,2k,2d]].
//!
//! ```bash
//! cargo run --release -p mfc --example steane_pipeline
//! ```

use mfc::maps;

fn main() {
    let steane = maps::steane();
    println!(
        "input: [[{}, {}, {}]] stabilizer code",
        steane.n(),
        steane.k(),
        steane.qubit_distance(7).unwrap().weight().unwrap()
    );

    // four modes per qubit plus one quartic generator each
    let maj = maps::stabilizer_to_majorana(&steane);
    println!(
        "Majorana image: {} modes, {} generators (rank {}), k = {}, d = {}",
        maj.modes(),
        maj.generators().n_rows(),
        maj.rank(),
        maj.count_logicals().1,
        maj.distance(6).unwrap().weight().unwrap()
    );

    let css = maps::double(&maj).unwrap();
    println!(
        "doubled: [[{}, {}, {}]], weakly self-dual CSS: {}",
        css.n(),
        css.k(),
        css.qubit_distance(6).unwrap().weight().unwrap(),
        css.is_weakly_self_dual_css()
    );
}
