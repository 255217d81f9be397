//! The 1D mode-to-qubit map: single modes become Pauli strings with a Z
//! tail, and mapping a whole code preserves the number of encoded qubits.
//!
//! ```bash
//! cargo run --release -p mfc --example jordan_wigner
//! ```

use mfc::maps::{jordan_wigner, jw_map_code, kitaev_chain};
use mfc::MajoranaOperator;

fn main() {
    let qubits = 4;
    println!("single-mode images on {qubits} qubits:");
    for u in 0..2 * qubits {
        let op = MajoranaOperator::from_indices(2 * qubits, &[u]);
        println!("  c_{} -> {}", u + 1, jordan_wigner(&op, qubits).unwrap());
    }

    let chain = kitaev_chain(5);
    let image = jw_map_code(&chain).unwrap();
    println!("\nchain on {} modes maps to {} qubits:", chain.modes(), image.n());
    for g in image.generators() {
        println!("  {g}");
    }
    println!("k = {} (matches the chain's single encoded qubit)", image.k());
}
