//! Region cleanability: a region is uncleanable exactly when some logical
//! operator fits inside it, and the decision is pure linear algebra.
//!
//! ```bash
//! cargo run --release -p mfc --example cleaning_regions
//! ```

use mfc::geometry::{is_cleanable, Cleanability, Region};
use mfc::maps;

fn show(code: &mfc::MajoranaCode, label: &str, region: Region) {
    match is_cleanable(code, &region) {
        Cleanability::Cleanable => println!("{label}: cleanable"),
        Cleanability::Uncleanable { witness } => {
            println!("{label}: uncleanable, witness logical c{:?}", witness.support())
        }
    }
}

fn main() {
    let chain = maps::kitaev_chain(5);
    println!("chain on 10 modes:");
    show(&chain, "  {0}      ", Region::new(vec![0]));
    show(&chain, "  {1,2}    ", Region::new(vec![1, 2]));
    show(&chain, "  {}       ", Region::new(vec![]));
    show(&chain, "  {0..4}   ", Region::new((0..5).collect()));

    // growing a region never makes it cleanable again
    let mut grown = vec![0];
    for extra in [3, 5, 7] {
        grown.push(extra);
        show(&chain, "  grown    ", Region::new(grown.clone()));
    }

    let cyl = mfc::color::face_code(&mfc::color::build_cylinder(3, 1).unwrap()).unwrap();
    println!("\ncylinder R=3 L=1 ({} modes):", cyl.modes());
    let layout = cyl.layout().unwrap().clone();
    // the bottom boundary row supports an odd logical
    show(&cyl, "  bottom row", Region::from_rect(&layout, 0, 0, 8, 0));
    // a single interior row does not
    show(&cyl, "  row y=1  ", Region::from_rect(&layout, 0, 1, 8, 1));
}
