//! Cylinder scaling: distance grows with the smaller surface dimension,
//! the even-logical diameter grows with the length, and odd logicals always
//! weigh exactly the boundary length R.
//!
//! ```bash
//! cargo run --release -p mfc --example scaling_table
//! ```

use mfc::color::scaling_experiment;

fn main() {
    let rows = scaling_experiment(&[3, 5], &[1, 2, 3], 24, 120).unwrap();
    println!("{:>3} {:>3} {:>6} {:>4} {:>7} {:>9} {:>6}", "R", "L", "modes", "d", "l_even", "min_odd", "paths");
    for row in &rows {
        if row.skipped {
            println!("{:>3} {:>3} {:>6}   (skipped: above mode cap)", row.r, row.l, row.modes);
            continue;
        }
        println!(
            "{:>3} {:>3} {:>6} {:>4} {:>7} {:>9} {:>6}",
            row.r,
            row.l,
            row.modes,
            row.d.map_or("-".into(), |v| v.to_string()),
            row.l_even.map_or("-".into(), |v| v.to_string()),
            row.min_odd_weight.map_or("-".into(), |v| v.to_string()),
            row.disjoint_paths.map_or("-".into(), |v| v.to_string()),
        );
    }
    println!("\nd tracks min(R, 2L+2); l_even = 2L+2; min_odd = R = disjoint-path bound.");
}
