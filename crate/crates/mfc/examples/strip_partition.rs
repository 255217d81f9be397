//! Strip structure of 2D codes: partitioned into bands at least as wide as
//! the generators, every code yields either an even logical inside one band
//! or odd logicals in two different bands.
//!
//! ```bash
//! cargo run --release -p mfc --example strip_partition
//! ```

use mfc::geometry::{generator_axis_extent, make_strips, strip_lemma_analysis, Axis};
use mfc::{color, maps, MajoranaCode};

fn analyze(label: &str, code: &MajoranaCode, axis: Axis, width: i64) {
    println!("{label}:");
    let extent = generator_axis_extent(code, axis).unwrap();
    println!("  generator extent along {axis:?}: {extent}, strip width: {width}");
    let partition = make_strips(code.layout().unwrap(), axis, width).unwrap();
    println!("  strips: {}", partition.strips().len());
    let verdict = strip_lemma_analysis(code, &partition).unwrap();
    match &verdict.even_in_strip {
        Some((s, support)) => println!("  case (i): even logical in strip {s}: c{support:?}"),
        None => println!("  case (i): none"),
    }
    match &verdict.odd_pair {
        Some(((s0, w0), (s1, w1))) => {
            println!("  case (ii): odd logicals in strips {s0} and {s1}: c{w0:?}, c{w1:?}")
        }
        None => println!("  case (ii): none"),
    }
}

fn main() {
    analyze("chain (10 modes)", &maps::kitaev_chain(5), Axis::X, 2);

    let cyl = color::face_code(&color::build_cylinder(5, 2).unwrap()).unwrap();
    analyze("\ncylinder R=5 L=2", &cyl, Axis::Y, 2);

    let torus = color::hex_torus_code(1, 1);
    analyze("\nhex torus", &torus, Axis::Y, 2);
}
