//! The four-mode code and its doubled CSS form.
//!
//! ```bash
//! cargo run --release -p mfc --example four_mode_doubling
//! ```

use mfc::maps;

fn main() {
    let code = maps::four_mode();
    let (lm, k) = code.count_logicals();
    println!(
        "four-mode code: {} modes, {} generator, logical modes = {lm}, k = {k}",
        code.modes(),
        code.generators().n_rows()
    );
    println!("distance: {:?}", code.distance(4).unwrap().weight());

    // doubling: every generator support becomes an X-type and a Z-type
    // stabilizer on one qubit per mode
    let css = maps::double(&code).unwrap();
    println!("\ndoubled stabilizer code on {} qubits:", css.n());
    for g in css.generators() {
        println!("  {g}");
    }
    println!(
        "k = {}, qubit distance = {:?}, weakly self-dual CSS: {}",
        css.k(),
        css.qubit_distance(4).unwrap().weight(),
        css.is_weakly_self_dual_css()
    );
}
