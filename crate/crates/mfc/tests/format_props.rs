//! Property tests for the text formats and the core linear-algebra
//! invariants.

use proptest::prelude::*;

use mfc::gf2::{BitMatrix, BitVector};
use mfc::{random, MajoranaCode};

proptest! {
    #[test]
    fn mfc_round_trip_is_identity(seed in any::<u64>(), modes in 2usize..16, gens in 0usize..5) {
        let mut rng = random::rng(seed);
        let code = random::random_majorana_code(&mut rng, modes, gens);
        let text = code.to_mfc();
        let parsed = MajoranaCode::parse_mfc(&text).unwrap();
        prop_assert_eq!(parsed.modes(), code.modes());
        prop_assert_eq!(parsed.generators().rows(), code.generators().rows());
        prop_assert_eq!(parsed.layout(), code.layout());
        prop_assert_eq!(parsed.to_mfc(), text);
    }

    #[test]
    fn stab_round_trip_is_identity(seed in any::<u64>(), n in 1usize..8, gens in 0usize..5) {
        let mut rng = random::rng(seed);
        let code = random::random_stabilizer_code(&mut rng, n, gens);
        let text = code.to_stab();
        let parsed = mfc::StabilizerCode::parse_stab(&text);
        match (code.generators().is_empty(), parsed) {
            // a file without generator lines is rejected by the parser
            (true, Err(_)) => {}
            (false, Ok(parsed)) => prop_assert_eq!(parsed.generators(), code.generators()),
            (empty, other) => prop_assert!(false, "empty={} result={:?}", empty, other.is_ok()),
        }
    }

    #[test]
    fn rank_nullity_identity(rows in prop::collection::vec(prop::collection::vec(any::<bool>(), 9), 0..6)) {
        let cols = 9;
        let mut m = BitMatrix::new(cols);
        for row in rows {
            let mut v = BitVector::zeros(cols);
            for (i, b) in row.iter().enumerate() {
                if *b {
                    v.set(i, true);
                }
            }
            m.push_row(v);
        }
        prop_assert_eq!(m.rank() + m.kernel_basis().n_rows(), cols);
        // every kernel vector is orthogonal to every row
        for k in m.kernel_basis().rows() {
            for r in m.rows() {
                prop_assert!(!r.dot(k));
            }
        }
    }

    #[test]
    fn span_membership_closed_under_sums(seed in any::<u64>(), modes in 2usize..14) {
        let mut rng = random::rng(seed);
        let code = random::random_majorana_code(&mut rng, modes, 4);
        let gens = code.generators();
        let mut acc = BitVector::zeros(modes);
        for (i, row) in gens.rows().iter().enumerate() {
            if seed >> i & 1 == 1 {
                acc.xor_assign(row);
            }
        }
        prop_assert!(gens.in_span(&acc));
    }
}
