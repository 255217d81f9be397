//! Seeded generators of random valid codes and regions, used by the
//! cross-validation suites to compare fast algorithms against exhaustive
//! enumeration. All generators are deterministic for a fixed seed.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::geometry::{Layout, Region};
use crate::gf2::BitVector;
use crate::majorana::MajoranaCode;
use crate::pauli::{PauliOperator, StabilizerCode};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

fn random_even_row(rng: &mut StdRng, modes: usize) -> BitVector {
    let mut v = BitVector::zeros(modes);
    for i in 0..modes {
        if rng.gen() {
            v.set(i, true);
        }
    }
    if v.parity() {
        v.flip(rng.gen_range(0..modes));
    }
    v
}

/// A random valid Majorana code: generators are sampled even-weight rows,
/// accepted only when they overlap every previously accepted row evenly.
/// The code always carries a line layout.
pub fn random_majorana_code(rng: &mut StdRng, modes: usize, max_gens: usize) -> MajoranaCode {
    assert!(modes >= 2);
    let mut rows: Vec<BitVector> = Vec::new();
    for _ in 0..max_gens {
        for _attempt in 0..60 {
            let cand = random_even_row(rng, modes);
            if cand.is_zero() {
                continue;
            }
            if rows.iter().all(|r| cand.overlap(r).is_multiple_of(2)) {
                rows.push(cand);
                break;
            }
        }
    }
    let supports: Vec<Vec<usize>> = rows.iter().map(|r| r.support()).collect();
    let code = MajoranaCode::from_supports(modes, &supports, Some(Layout::line(modes)))
        .expect("indices in range");
    debug_assert!(code.is_valid());
    code
}

/// A random stabilizer code: non-identity Pauli rows accepted when they
/// commute with everything accepted so far.
pub fn random_stabilizer_code(rng: &mut StdRng, n: usize, max_gens: usize) -> StabilizerCode {
    assert!(n >= 1);
    let mut gens: Vec<PauliOperator> = Vec::new();
    for _ in 0..max_gens {
        for _attempt in 0..60 {
            let mut x = BitVector::zeros(n);
            let mut z = BitVector::zeros(n);
            for i in 0..n {
                match rng.gen_range(0..4) {
                    1 => x.set(i, true),
                    2 => z.set(i, true),
                    3 => {
                        x.set(i, true);
                        z.set(i, true);
                    }
                    _ => {}
                }
            }
            let cand = PauliOperator::new(x, z);
            if cand.is_identity() {
                continue;
            }
            if gens.iter().all(|g| !g.anticommutes_with(&cand)) {
                gens.push(cand);
                break;
            }
        }
    }
    StabilizerCode::new(n, gens).expect("sampled generators commute")
}

/// A uniformly random subset of the modes.
pub fn random_region(rng: &mut StdRng, modes: usize) -> Region {
    Region::new((0..modes).filter(|_| rng.gen()).collect())
}
