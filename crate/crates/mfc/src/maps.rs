//! Conversions between qubit stabilizer codes and Majorana fermion codes,
//! code products, and the named catalog of reference codes.
//!
//! Three mappings do the heavy lifting:
//!
//! * [`stabilizer_to_majorana`] — replaces each qubit by four Majorana modes
//!   `(b^x, b^y, b^z, c)` with `X -> b^x c`, `Y -> b^y c`, `Z -> b^z c`, and
//!   adds one quartic generator per qubit. An `[[n,k,d]]` code becomes a
//!   Majorana code on `4n` modes with `k` logical qubits and distance `2d`.
//! * [`double`] — sends a Majorana code on `2n` modes to a `[[2n,2k,d]]`
//!   weakly self-dual CSS code by emitting an X-copy and a Z-copy of every
//!   generator support.
//! * [`jordan_wigner`] — the 1D mode-to-qubit map
//!   `c_{2i-1} -> Z_1..Z_{i-1} X_i`, `c_{2i} -> Z_1..Z_{i-1} Y_i`
//!   (phases dropped throughout).
//!
//! Composing the first two maps sends `[[n,k,d]]` to `[[4n,2k,2d]]`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::color;
use crate::geometry::Layout;
use crate::gf2::BitVector;
use crate::majorana::{MajoranaCode, MajoranaOperator};
use crate::pauli::{PauliOperator, StabilizerCode};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MapError {
    #[error("doubling requires an even mode count, got {modes}")]
    OddModeCount { modes: usize },
    #[error("the Jordan-Wigner map requires an even total mode count, got {modes}")]
    OddTotalModes { modes: usize },
    #[error("mapping produced an invalid code: {0}")]
    InvalidInput(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog name '{0}'")]
    UnknownName(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
}

/// Maps an `n`-qubit stabilizer code onto a Majorana code on `4n` modes.
///
/// Qubit `j` owns modes `4j..4j+3` in the order `(b^x, b^y, b^z, c)`; the four
/// modes are laid out as a 2x2 block at the qubit's coordinate. Each Pauli
/// generator maps factor-wise and one generator `b^x b^y b^z c` is added per
/// qubit, for `2n - k` independent generators in total.
pub fn stabilizer_to_majorana(code: &StabilizerCode) -> MajoranaCode {
    let n = code.n();
    let modes = 4 * n;
    let mut supports: Vec<Vec<usize>> = Vec::with_capacity(code.generators().len() + n);
    for g in code.generators() {
        let mut s = Vec::new();
        for j in 0..n {
            match (g.x().get(j), g.z().get(j)) {
                (false, false) => {}
                (true, false) => s.extend([4 * j, 4 * j + 3]),     // X
                (true, true) => s.extend([4 * j + 1, 4 * j + 3]),  // Y
                (false, true) => s.extend([4 * j + 2, 4 * j + 3]), // Z
            }
        }
        supports.push(s);
    }
    for j in 0..n {
        supports.push(vec![4 * j, 4 * j + 1, 4 * j + 2, 4 * j + 3]);
    }
    let mut positions = Vec::with_capacity(modes);
    for j in 0..n as i64 {
        positions.push((2 * j, 0)); // b^x
        positions.push((2 * j + 1, 0)); // b^y
        positions.push((2 * j, 1)); // b^z
        positions.push((2 * j + 1, 1)); // c
    }
    MajoranaCode::from_supports(modes, &supports, Some(Layout::new(positions, [None, None])))
        .expect("mode indices in range")
}

/// Doubles a Majorana code on `2n` modes into a `[[2n, 2k, d]]` weakly
/// self-dual CSS code: every generator support is emitted once as an X-type
/// and once as a Z-type stabilizer.
pub fn double(code: &MajoranaCode) -> Result<StabilizerCode, MapError> {
    let m = code.modes();
    if m % 2 == 1 {
        return Err(MapError::OddModeCount { modes: m });
    }
    let mut gens = Vec::with_capacity(2 * code.generators().n_rows());
    for row in code.generators().rows() {
        gens.push(PauliOperator::new(row.clone(), BitVector::zeros(m)));
    }
    for row in code.generators().rows() {
        gens.push(PauliOperator::new(BitVector::zeros(m), row.clone()));
    }
    StabilizerCode::new(m, gens).map_err(|e| MapError::InvalidInput(e.to_string()))
}

/// Jordan-Wigner image of a single Majorana operator on `2n` modes as an
/// `n`-qubit Pauli operator (phase dropped). Mode `2i-1` (1-indexed) maps to
/// `Z_1..Z_{i-1} X_i` and mode `2i` to `Z_1..Z_{i-1} Y_i`.
pub fn jordan_wigner(op: &MajoranaOperator, qubits: usize) -> Result<PauliOperator, MapError> {
    let m = op.modes();
    if m % 2 == 1 || m != 2 * qubits {
        return Err(MapError::OddTotalModes { modes: m });
    }
    let mut x = BitVector::zeros(qubits);
    let mut z = BitVector::zeros(qubits);
    for u in op.support() {
        let q = u / 2;
        for p in 0..q {
            z.flip(p);
        }
        x.flip(q);
        if u % 2 == 1 {
            z.flip(q); // Y = X·Z on the target qubit
        }
    }
    Ok(PauliOperator::new(x, z))
}

/// Applies [`jordan_wigner`] to every generator; the image is a stabilizer
/// code on `m/2` qubits with the same number of encoded qubits.
pub fn jw_map_code(code: &MajoranaCode) -> Result<StabilizerCode, MapError> {
    let m = code.modes();
    if m % 2 == 1 {
        return Err(MapError::OddTotalModes { modes: m });
    }
    let qubits = m / 2;
    let gens = code
        .generators()
        .rows()
        .iter()
        .map(|row| jordan_wigner(&MajoranaOperator::new(row.clone()), qubits))
        .collect::<Result<Vec<_>, _>>()?;
    StabilizerCode::new(qubits, gens).map_err(|e| MapError::InvalidInput(e.to_string()))
}

/// Product of two Majorana codes with a passive spacer in between: `spacer`
/// pairs of idle modes, each consumed by a weight-2 generator, separate the
/// two blocks. Layouts are concatenated along the x axis.
pub fn product(a: &MajoranaCode, b: &MajoranaCode, spacer: usize) -> MajoranaCode {
    let ma = a.modes();
    let mb = b.modes();
    let modes = ma + 2 * spacer + mb;
    let off_b = ma + 2 * spacer;
    let mut supports: Vec<Vec<usize>> = Vec::new();
    for row in a.generators().rows() {
        supports.push(row.support());
    }
    for i in 0..spacer {
        supports.push(vec![ma + 2 * i, ma + 2 * i + 1]);
    }
    for row in b.generators().rows() {
        supports.push(row.support().iter().map(|&u| u + off_b).collect());
    }

    let layout = match (a.layout(), b.layout()) {
        (Some(la), Some(lb)) => {
            let a_max_x = la.positions().iter().map(|p| p.0).max().unwrap_or(-1);
            let b_min_x = lb.positions().iter().map(|p| p.0).min().unwrap_or(0);
            let off = a_max_x + 1;
            let mut positions: Vec<(i64, i64)> = la.positions().to_vec();
            for i in 0..spacer as i64 {
                positions.push((off + 2 * i, 0));
                positions.push((off + 2 * i + 1, 0));
            }
            let shift = off + 2 * spacer as i64 - b_min_x;
            positions.extend(lb.positions().iter().map(|&(x, y)| (x + shift, y)));
            Some(Layout::new(positions, [None, None]))
        }
        _ => None,
    };
    MajoranaCode::from_supports(modes, &supports, layout).expect("indices in range")
}

// ============================================================================
// Catalog
// ============================================================================

/// Reference chain on `2n` modes: generators pair interior neighbours
/// `(c_2 c_3), (c_4 c_5), …`, leaving the two end modes unpaired.
pub fn kitaev_chain(n_fermions: usize) -> MajoranaCode {
    assert!(n_fermions >= 1);
    let modes = 2 * n_fermions;
    let supports: Vec<Vec<usize>> = (1..n_fermions).map(|j| vec![2 * j - 1, 2 * j]).collect();
    MajoranaCode::from_supports(modes, &supports, Some(Layout::line(modes)))
        .expect("indices in range")
}

/// The smallest interesting code: four modes, one quartic generator.
pub fn four_mode() -> MajoranaCode {
    MajoranaCode::from_supports(4, &[vec![0, 1, 2, 3]], Some(Layout::line(4)))
        .expect("indices in range")
}

/// The `[[7,1,3]]` code from the `[7,4,3]` Hamming code, with X- and Z-type
/// checks on the same three parity vectors.
pub fn steane() -> StabilizerCode {
    StabilizerCode::parse_stab(
        "XIXIXIX\nIXXIIXX\nIIIXXXX\nZIZIZIZ\nIZZIIZZ\nIIIZZZZ\n",
    )
    .expect("fixed generators commute")
}

/// The 7-mode half-qubit code: the three Hamming checks read as Majorana
/// supports. Its only logical class is the odd all-modes product.
pub fn steane_majorana() -> MajoranaCode {
    MajoranaCode::from_supports(
        7,
        &[vec![0, 2, 4, 6], vec![1, 2, 5, 6], vec![3, 4, 5, 6]],
        Some(Layout::line(7)),
    )
    .expect("indices in range")
}

/// A single unpaired mode: no generators at all.
pub fn trivial_mode() -> MajoranaCode {
    MajoranaCode::from_supports(1, &[], Some(Layout::line(1))).expect("trivial")
}

/// A code in either family, as produced by the catalog.
#[derive(Clone, Debug)]
pub enum CatalogCode {
    Majorana(MajoranaCode),
    Stabilizer(StabilizerCode),
}

/// Builds a named reference code. Recognized names:
/// `kitaev-chain` (`n`), `four-mode`, `steane`, `steane-majorana`,
/// `hex-torus` (`lx`, `ly`).
pub fn catalog_build(
    name: &str,
    params: &BTreeMap<String, i64>,
) -> Result<CatalogCode, CatalogError> {
    let get = |key: &str| -> Result<i64, CatalogError> {
        params
            .get(key)
            .copied()
            .ok_or_else(|| CatalogError::BadParams(format!("missing parameter '{key}'")))
    };
    match name {
        "kitaev-chain" => {
            let n = get("n")?;
            if n < 1 {
                return Err(CatalogError::BadParams("n must be >= 1".into()));
            }
            Ok(CatalogCode::Majorana(kitaev_chain(n as usize)))
        }
        "four-mode" => Ok(CatalogCode::Majorana(four_mode())),
        "steane" => Ok(CatalogCode::Stabilizer(steane())),
        "steane-majorana" => Ok(CatalogCode::Majorana(steane_majorana())),
        "hex-torus" => {
            let lx = get("lx")?;
            let ly = get("ly")?;
            if lx < 1 || ly < 1 {
                return Err(CatalogError::BadParams("lx and ly must be >= 1".into()));
            }
            Ok(CatalogCode::Majorana(color::hex_torus_code(lx as usize, ly as usize)))
        }
        other => Err(CatalogError::UnknownName(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::Search;

    #[test]
    fn steane_image_parameters() {
        let maj = stabilizer_to_majorana(&steane());
        assert_eq!(maj.modes(), 28);
        assert_eq!(maj.generators().n_rows(), 13);
        assert!(maj.is_valid());
        assert_eq!(maj.rank(), 13); // 2n - k = 13 independent generators
        assert_eq!(maj.count_logicals().1.to_string(), "1");
        assert_eq!(maj.distance(6).unwrap().weight(), Some(6));
    }

    #[test]
    fn single_qubit_code_image() {
        let z = StabilizerCode::parse_stab("Z").unwrap();
        let maj = stabilizer_to_majorana(&z);
        assert_eq!(maj.modes(), 4);
        let supports: Vec<Vec<usize>> =
            maj.generators().rows().iter().map(|r| r.support()).collect();
        assert_eq!(supports, vec![vec![2, 3], vec![0, 1, 2, 3]]);
        assert_eq!(maj.logical_modes(), 0);
    }

    /// Exhaustive distance oracle over all 2^m supports (m <= 16).
    fn brute_distance(code: &MajoranaCode) -> Option<usize> {
        let m = code.modes();
        let gens = code.generators();
        let mut best = None;
        for mask in 1u64..(1 << m) {
            let mut v = BitVector::zeros(m);
            for i in 0..m {
                if (mask >> i) & 1 == 1 {
                    v.set(i, true);
                }
            }
            if gens.rows().iter().any(|g| v.overlap(g) % 2 == 1) || gens.in_span(&v) {
                continue;
            }
            let w = v.weight();
            if best.is_none_or(|b| w < b) {
                best = Some(w);
            }
        }
        best
    }

    #[test]
    fn image_distance_doubles_for_four_two_two() {
        let c = StabilizerCode::parse_stab("XXXX\nZZZZ").unwrap();
        let maj = stabilizer_to_majorana(&c);
        assert_eq!(maj.modes(), 16);
        assert_eq!(maj.count_logicals().1.to_string(), "2");
        assert_eq!(brute_distance(&maj), Some(4));
        assert_eq!(maj.distance(16).unwrap().weight(), Some(4));
    }

    #[test]
    fn image_logicals_meet_quartic_blocks_evenly() {
        let c = StabilizerCode::parse_stab("XXXX\nZZZZ").unwrap();
        let maj = stabilizer_to_majorana(&c);
        let result = maj.distance_search(16).unwrap();
        for w in &result.witnesses {
            for j in 0..4 {
                let block = BitVector::from_indices(16, &[4 * j, 4 * j + 1, 4 * j + 2, 4 * j + 3]);
                assert_eq!(w.overlap(&block) % 2, 0);
            }
        }
    }

    #[test]
    fn doubling_the_four_mode_code() {
        let css = double(&four_mode()).unwrap();
        assert_eq!(css.n(), 4);
        let strs: Vec<String> = css.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(strs, vec!["XXXX", "ZZZZ"]);
        assert_eq!(css.k(), 2);
        assert_eq!(css.qubit_distance(4).unwrap().weight(), Some(2));
        assert!(css.is_weakly_self_dual_css());
    }

    #[test]
    fn doubling_the_chain() {
        let chain = kitaev_chain(4);
        let css = double(&chain).unwrap();
        assert_eq!(css.n(), 8);
        assert_eq!(css.k(), 2);
        assert_eq!(css.qubit_distance(8).unwrap().weight(), Some(1));
        assert!(css.is_weakly_self_dual_css());
    }

    #[test]
    fn doubling_rejects_odd_mode_counts() {
        assert_eq!(
            double(&steane_majorana()),
            Err(MapError::OddModeCount { modes: 7 })
        );
    }

    #[test]
    fn composed_pipeline_gives_four_n_two_k_two_d() {
        // [[4,2,2]] -> 16-mode Majorana code -> [[16,4,4]]
        let c = StabilizerCode::parse_stab("XXXX\nZZZZ").unwrap();
        let maj = stabilizer_to_majorana(&c);
        let css = double(&maj).unwrap();
        assert_eq!(css.n(), 16);
        assert_eq!(css.k(), 4);
        assert!(css.is_weakly_self_dual_css());
        assert_eq!(css.qubit_distance(4).unwrap().weight(), Some(4));
    }

    #[test]
    fn jordan_wigner_single_modes() {
        let m = 4;
        let img = |u: usize| {
            jordan_wigner(&MajoranaOperator::from_indices(m, &[u]), m / 2)
                .unwrap()
                .to_string()
        };
        assert_eq!(img(0), "XI"); // c_1 -> X_1
        assert_eq!(img(1), "YI"); // c_2 -> Y_1
        assert_eq!(img(2), "ZX"); // c_3 -> Z_1 X_2
        assert_eq!(img(3), "ZY"); // c_4 -> Z_1 Y_2
    }

    #[test]
    fn jordan_wigner_rejects_odd_mode_totals() {
        let op = MajoranaOperator::from_indices(7, &[0]);
        assert!(matches!(
            jordan_wigner(&op, 3),
            Err(MapError::OddTotalModes { modes: 7 })
        ));
    }

    #[test]
    fn jw_code_images_preserve_k() {
        let chain = kitaev_chain(5);
        let img = jw_map_code(&chain).unwrap();
        assert_eq!(img.n(), 5);
        assert_eq!(img.k(), 1);

        let img = jw_map_code(&four_mode()).unwrap();
        assert_eq!(img.n(), 2);
        assert_eq!(img.k(), 1);

        let empty = MajoranaCode::from_supports(4, &[], None).unwrap();
        let img = jw_map_code(&empty).unwrap();
        assert_eq!(img.n(), 2);
        assert_eq!(img.k(), 2);
    }

    #[test]
    fn jw_maps_commuting_pairs_to_commuting_pairs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(77);
        let modes = 8;
        let mut checked = 0;
        while checked < 50 {
            let mut a = crate::gf2::BitVector::zeros(modes);
            let mut b = crate::gf2::BitVector::zeros(modes);
            for i in 0..modes {
                if rng.gen() {
                    a.set(i, true);
                }
                if rng.gen() {
                    b.set(i, true);
                }
            }
            let oa = MajoranaOperator::new(a);
            let ob = MajoranaOperator::new(b);
            let ia = jordan_wigner(&oa, modes / 2).unwrap();
            let ib = jordan_wigner(&ob, modes / 2).unwrap();
            assert_eq!(
                oa.anticommutes_with(&ob),
                ia.anticommutes_with(&ib),
                "images preserve the commutation relation"
            );
            checked += 1;
        }
    }

    #[test]
    fn product_of_steane_halves() {
        let sm = steane_majorana();
        let prod = product(&sm, &sm, 0);
        assert_eq!(prod.modes(), 14);
        assert!(prod.is_valid());
        assert_eq!(prod.count_logicals().1.to_string(), "1");
        assert_eq!(prod.distance(14).unwrap().weight(), Some(3));
        // an odd weight-3 logical lives entirely on the first block
        match prod.min_odd_logical_weight(14).unwrap() {
            Search::Found { weight, witness } => {
                assert_eq!(weight, 3);
                assert!(witness.support().iter().all(|&u| u < 7));
            }
            _ => panic!("expected an odd logical"),
        }
    }

    #[test]
    fn chain_as_product_of_trivial_codes() {
        let left = trivial_mode();
        let right = trivial_mode();
        for len in 2..=6usize {
            let prod = product(&left, &right, len - 1);
            let chain = kitaev_chain(len);
            assert_eq!(prod.modes(), chain.modes());
            assert_eq!(prod.generators().rows(), chain.generators().rows());
            assert_eq!(prod.layout(), chain.layout());
        }
    }

    #[test]
    fn product_with_empty_block_preserves_modes() {
        let empty = MajoranaCode::from_supports(0, &[], Some(Layout::line(0))).unwrap();
        let prod = product(&four_mode(), &empty, 0);
        assert_eq!(prod.modes(), 4);
        assert_eq!(prod.generators().rows(), four_mode().generators().rows());
    }

    #[test]
    fn spacer_sets_even_logical_diameter() {
        // two half-qubit blocks with a passive spacer: the even logical spans
        // both blocks, so its diameter grows with the spacer
        let sm = steane_majorana();
        let no_gap = product(&sm, &sm, 0);
        let gap = product(&sm, &sm, 3);
        let d0 = match no_gap.l_even().unwrap() {
            crate::majorana::LEven::Exact { diameter, witness } => {
                assert!(witness.iter().any(|&u| u < 7));
                assert!(witness.iter().any(|&u| u >= 7));
                diameter
            }
            other => panic!("expected exact l_even, got {other:?}"),
        };
        let d1 = match gap.l_even().unwrap() {
            crate::majorana::LEven::Exact { diameter, .. } => diameter,
            other => panic!("expected exact l_even, got {other:?}"),
        };
        assert!(d1 >= d0 + 6, "spacer of 3 pairs adds at least 6 lattice units");
    }

    #[test]
    fn catalog_names_and_errors() {
        let mut params = BTreeMap::new();
        params.insert("n".to_string(), 5i64);
        match catalog_build("kitaev-chain", &params).unwrap() {
            CatalogCode::Majorana(c) => {
                assert_eq!(c.modes(), 10);
                assert_eq!(c.generators().n_rows(), 4);
            }
            _ => panic!("chain is a Majorana code"),
        }
        assert!(matches!(
            catalog_build("nonsense", &BTreeMap::new()),
            Err(CatalogError::UnknownName(_))
        ));
        assert!(matches!(
            catalog_build("kitaev-chain", &BTreeMap::new()),
            Err(CatalogError::BadParams(_))
        ));
        match catalog_build("steane-majorana", &BTreeMap::new()).unwrap() {
            CatalogCode::Majorana(c) => assert_eq!(c.modes(), 7),
            _ => panic!(),
        }
        assert!(matches!(
            catalog_build("steane", &BTreeMap::new()).unwrap(),
            CatalogCode::Stabilizer(_)
        ));
    }
}
