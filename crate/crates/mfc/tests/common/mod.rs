//! Exhaustive oracles shared by the integration suites. These enumerate the
//! full operator space and are kept independent of the library's search
//! implementations.

use mfc::gf2::{BitVector, Echelon};
use mfc::{MajoranaCode, PauliOperator, Region, StabilizerCode};

/// All logical operators of a Majorana code, by scanning every one of the
/// `2^m` supports (m <= 20): nonzero vectors commuting with every generator
/// that are not themselves stabilizers.
pub fn brute_logicals(code: &MajoranaCode) -> Vec<BitVector> {
    let m = code.modes();
    assert!(m <= 20, "brute force limited to 20 modes");
    let gens = code.generators();
    let ech = Echelon::from(gens);
    let mut out = Vec::new();
    for mask in 1u64..(1 << m) {
        let mut v = BitVector::zeros(m);
        for i in 0..m {
            if (mask >> i) & 1 == 1 {
                v.set(i, true);
            }
        }
        if gens.rows().iter().any(|g| v.overlap(g) % 2 == 1) {
            continue;
        }
        if ech.contains(&v) {
            continue;
        }
        out.push(v);
    }
    out
}

pub fn brute_min_logical_weight(code: &MajoranaCode) -> Option<usize> {
    brute_logicals(code).iter().map(|v| v.weight()).min()
}

/// Is some logical operator supported entirely inside the region?
pub fn brute_logical_in_region(code: &MajoranaCode, region: &Region) -> bool {
    let coords = region.modes();
    let gens = code.generators();
    let ech = Echelon::from(gens);
    for mask in 1u64..(1 << coords.len()) {
        let mut v = BitVector::zeros(code.modes());
        for (j, &c) in coords.iter().enumerate() {
            if (mask >> j) & 1 == 1 {
                v.set(c, true);
            }
        }
        if gens.rows().iter().all(|g| v.overlap(g).is_multiple_of(2)) && !ech.contains(&v) {
            return true;
        }
    }
    false
}

/// Minimum qubit weight over all 4^n Pauli operators that commute with every
/// generator and lie outside the stabilizer rowspace (n <= 8).
pub fn brute_qubit_distance(code: &StabilizerCode) -> Option<usize> {
    let n = code.n();
    assert!(n <= 8, "brute force limited to 8 qubits");
    let span = Echelon::from(&code.symplectic_matrix());
    let mut best = None;
    for mask in 1u64..(1 << (2 * n)) {
        let mut v = BitVector::zeros(2 * n);
        for i in 0..2 * n {
            if (mask >> i) & 1 == 1 {
                v.set(i, true);
            }
        }
        let op = PauliOperator::from_symplectic(&v);
        if code.generators().iter().any(|g| g.anticommutes_with(&op)) {
            continue;
        }
        if span.contains(&v) {
            continue;
        }
        let w = op.weight();
        if best.is_none_or(|b| w < b) {
            best = Some(w);
        }
    }
    best
}
