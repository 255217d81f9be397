//! The cylinder color code: an odd-boundary trivalent lattice whose face
//! code stores one qubit with two protection mechanisms at once.
//!
//! ```bash
//! cargo run --release -p mfc --example color_cylinder
//! ```

use mfc::color;

fn main() {
    let (r, l) = (5, 2);
    let g = color::build_cylinder(r, l).unwrap();
    println!(
        "cylinder R={r} L={l}: |V| = {}, |E| = {}, |F| = {}, boundaries {} / {}",
        g.vertex_count(),
        g.edges.len(),
        g.faces.len(),
        g.boundary[0].len(),
        g.boundary[1].len()
    );
    assert!(color::validate_surface(&g).is_empty());

    let code = color::face_code(&g).unwrap();
    println!(
        "face code: {} modes, k = {}, k_odd = {}",
        code.modes(),
        code.count_logicals().1,
        code.k_odd()
    );

    let (c0, c1) = color::boundary_logicals(&g).unwrap();
    println!(
        "boundary logicals: |C0| = {}, |C1| = {}, anti-commuting: {}",
        c0.weight(),
        c1.weight(),
        c0.anticommutes_with(&c1)
    );

    let partition = color::partition_faces(&g).unwrap();
    println!(
        "face partition: |F0| = {}, |F1| = {}",
        partition.f0.len(),
        partition.f1.len()
    );

    let (path, string) = color::shortest_string_logical(&g, &partition).unwrap();
    println!(
        "shortest string logical: {} edges, weight {}, odd: {}",
        path.len(),
        string.weight(),
        string.is_odd()
    );

    let report = color::colorability(&g, &partition, Some((0, 3)));
    println!(
        "face 3-colorable: {} (cut open: {:?})",
        report.three_colorable, report.cut_three_colorable
    );

    println!(
        "disjoint string paths: {} (every odd logical weighs at least this)",
        color::disjoint_path_count(&g, &partition)
    );
}
