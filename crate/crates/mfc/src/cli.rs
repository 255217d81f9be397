//! Command-line surface: build | analyze | map | clean | strips | scale.
//!
//! Exit codes: 0 on success, 1 on semantic failure (an input file holds an
//! invalid code), 2 on usage errors (bad parameters, malformed files,
//! domain mismatches).

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::color;
use crate::geometry::{self, Axis, Region};
use crate::gf2::Search;
use crate::majorana::MajoranaCode;
use crate::maps::{self, CatalogCode};
use crate::pauli::StabilizerCode;

#[derive(Parser)]
#[command(
    name = "mfc",
    about = "Majorana fermion codes and stabilizer codes: build, map, analyze",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a named code to a file (.mfc or .stab depending on the code)
    Build {
        /// kitaev-chain | four-mode | steane | steane-majorana | hex-torus |
        /// color-cylinder
        name: String,
        /// Chain length in fermions (kitaev-chain)
        #[arg(long)]
        n: Option<i64>,
        /// Torus width multiplier (hex-torus)
        #[arg(long)]
        lx: Option<i64>,
        /// Torus height multiplier (hex-torus)
        #[arg(long)]
        ly: Option<i64>,
        /// Boundary length of the color cylinder (odd)
        #[arg(long = "R", visible_alias = "radius")]
        r: Option<i64>,
        /// Number of hexagon layers of the color cylinder
        #[arg(long = "L", visible_alias = "layers")]
        l: Option<i64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Validate a code file and report its invariants
    Analyze {
        #[arg(long)]
        input: PathBuf,
        /// Bound for distance searches; defaults to a full search for codes
        /// of at most 20 modes and to 6 above that
        #[arg(long = "max-weight")]
        max_weight: Option<usize>,
        /// Emit the report as JSON (keys always sorted)
        #[arg(long)]
        json: bool,
        /// Accepted for compatibility; JSON keys are always sorted
        #[arg(long, hide = true)]
        sorted: bool,
        /// Reserved for search heuristics; current algorithms are
        /// deterministic and ignore it
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Transform a code file: qubit-to-majorana | double | jordan-wigner |
    /// product
    Map {
        kind: String,
        #[arg(long)]
        input: PathBuf,
        /// Second operand for `product`
        #[arg(long)]
        input2: Option<PathBuf>,
        /// Passive spacer pairs inserted between product blocks
        #[arg(long, default_value_t = 0)]
        spacer: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Decide whether a region is cleanable
    Clean {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated mode indices, or `rect x0 y0 x1 y1`
        #[arg(long)]
        region: String,
    },
    /// Strip-partition analysis: even logical in one strip, or odd logicals
    /// in two strips
    Strips {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        axis: String,
        #[arg(long)]
        width: i64,
    },
    /// Cylinder scaling table as CSV: R,L,modes,d,l_even,min_odd_weight
    Scale {
        #[arg(long = "r-list", default_value = "3,5")]
        r_list: String,
        #[arg(long = "l-list", default_value = "1,2,3")]
        l_list: String,
        #[arg(long = "max-weight", default_value_t = 24)]
        max_weight: usize,
        /// Instances with more modes than this are emitted as skipped rows
        #[arg(long, default_value_t = 120)]
        cap: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum CliError {
    Usage(String),
    Semantic(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Semantic(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Semantic(m) => write!(f, "{m}"),
        }
    }
}

fn usage<E: fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.code()
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, content: &str) -> Result<(), CliError> {
    std::fs::write(path, content)
        .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))
}

fn load_majorana(path: &Path) -> Result<MajoranaCode, CliError> {
    let text = read_file(path)?;
    MajoranaCode::parse_mfc(&text).map_err(usage)
}

fn load_valid_majorana(path: &Path) -> Result<MajoranaCode, CliError> {
    let code = load_majorana(path)?;
    let violations = code.validate();
    if !violations.is_empty() {
        let mut msg = String::from("invalid code:");
        for v in violations {
            msg.push_str(&format!("\n  {v}"));
        }
        return Err(CliError::Semantic(msg));
    }
    Ok(code)
}

fn load_stabilizer(path: &Path) -> Result<StabilizerCode, CliError> {
    let text = read_file(path)?;
    StabilizerCode::parse_stab(&text).map_err(|e| {
        use crate::pauli::PauliError;
        match e {
            PauliError::NonCommutingGenerators { .. } => CliError::Semantic(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    })
}

fn default_max_weight(modes: usize, requested: Option<usize>) -> usize {
    requested.unwrap_or(if modes <= 20 { modes } else { 6 })
}

fn dispatch(cmd: Command) -> Result<(), CliError> {
    match cmd {
        Command::Build { name, n, lx, ly, r, l, out } => build(&name, n, lx, ly, r, l, &out),
        Command::Analyze { input, max_weight, json, sorted: _, seed: _ } => {
            analyze(&input, max_weight, json)
        }
        Command::Map { kind, input, input2, spacer, out } => {
            map_cmd(&kind, &input, input2.as_deref(), spacer, &out)
        }
        Command::Clean { input, region } => clean(&input, &region),
        Command::Strips { input, axis, width } => strips(&input, &axis, width),
        Command::Scale { r_list, l_list, max_weight, cap, seed: _ } => {
            scale(&r_list, &l_list, max_weight, cap)
        }
    }
}

fn build(
    name: &str,
    n: Option<i64>,
    lx: Option<i64>,
    ly: Option<i64>,
    r: Option<i64>,
    l: Option<i64>,
    out: &Path,
) -> Result<(), CliError> {
    if name == "color-cylinder" {
        let r = r.ok_or_else(|| CliError::Usage("color-cylinder needs --R".into()))? as usize;
        let l = l.ok_or_else(|| CliError::Usage("color-cylinder needs --L".into()))? as usize;
        let g = color::build_cylinder(r, l).map_err(usage)?;
        let partition = color::partition_faces(&g).map_err(usage)?;
        let code = color::face_code(&g).map_err(usage)?;
        write_file(out, &code.to_mfc())?;
        println!(
            "color-cylinder R={r} L={l}: {} vertices, {} faces, |F0| = {}, boundaries {}/{}",
            g.vertex_count(),
            g.faces.len(),
            partition.f0.len(),
            g.boundary[0].len(),
            g.boundary[1].len()
        );
        return Ok(());
    }
    let mut params = BTreeMap::new();
    if let Some(v) = n {
        params.insert("n".to_string(), v);
    }
    if let Some(v) = lx {
        params.insert("lx".to_string(), v);
    }
    if let Some(v) = ly {
        params.insert("ly".to_string(), v);
    }
    match maps::catalog_build(name, &params).map_err(usage)? {
        CatalogCode::Majorana(code) => {
            write_file(out, &code.to_mfc())?;
            println!(
                "{name}: {} modes, {} generators -> {}",
                code.modes(),
                code.generators().n_rows(),
                out.display()
            );
        }
        CatalogCode::Stabilizer(code) => {
            write_file(out, &code.to_stab())?;
            println!(
                "{name}: {} qubits, {} generators, k={} -> {}",
                code.n(),
                code.generators().len(),
                code.k(),
                out.display()
            );
        }
    }
    Ok(())
}

fn analyze(input: &Path, max_weight: Option<usize>, json: bool) -> Result<(), CliError> {
    if input.extension().is_some_and(|e| e == "stab") {
        let code = load_stabilizer(input)?;
        let max = default_max_weight(code.n(), max_weight);
        let d = if code.k() > 0 {
            match code.qubit_distance(max).map_err(usage)? {
                Search::Found { weight, .. } => weight.to_string(),
                Search::Exhausted { max_weight } => format!("exhausted (searched to {max_weight})"),
            }
        } else {
            "n/a (k = 0)".to_string()
        };
        println!("qubits:   {}", code.n());
        println!("k:        {}", code.k());
        println!("distance: {d}");
        println!("weakly self-dual CSS: {}", code.is_weakly_self_dual_css());
        return Ok(());
    }
    let code = load_valid_majorana(input)?;
    let max = default_max_weight(code.modes(), max_weight);
    let report = code.analyze(max);
    if json {
        println!("{}", report.to_json());
    } else {
        println!("{report}");
    }
    Ok(())
}

fn map_cmd(
    kind: &str,
    input: &Path,
    input2: Option<&Path>,
    spacer: usize,
    out: &Path,
) -> Result<(), CliError> {
    match kind {
        "qubit-to-majorana" => {
            let code = load_stabilizer(input)?;
            let maj = maps::stabilizer_to_majorana(&code);
            write_file(out, &maj.to_mfc())?;
            println!(
                "input:  {} qubits, k = {}",
                code.n(),
                code.k()
            );
            println!(
                "output: {} modes, k = {} -> {}",
                maj.modes(),
                maj.count_logicals().1,
                out.display()
            );
        }
        "double" => {
            let code = load_valid_majorana(input)?;
            let css = maps::double(&code).map_err(usage)?;
            write_file(out, &css.to_stab())?;
            println!("input:  {} modes, k = {}", code.modes(), code.count_logicals().1);
            println!(
                "output: [[{}, {}]] weakly self-dual CSS ({}) -> {}",
                css.n(),
                css.k(),
                css.is_weakly_self_dual_css(),
                out.display()
            );
        }
        "jordan-wigner" => {
            let code = load_valid_majorana(input)?;
            let img = maps::jw_map_code(&code).map_err(usage)?;
            write_file(out, &img.to_stab())?;
            println!("input:  {} modes, k = {}", code.modes(), code.count_logicals().1);
            println!("output: {} qubits, k = {} -> {}", img.n(), img.k(), out.display());
        }
        "product" => {
            let a = load_valid_majorana(input)?;
            let b_path =
                input2.ok_or_else(|| CliError::Usage("product needs --input2".into()))?;
            let b = load_valid_majorana(b_path)?;
            let prod = maps::product(&a, &b, spacer);
            write_file(out, &prod.to_mfc())?;
            println!(
                "product: {} + {} modes with {spacer} spacer pairs = {} modes, k = {} -> {}",
                a.modes(),
                b.modes(),
                prod.modes(),
                prod.count_logicals().1,
                out.display()
            );
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown map kind '{other}' (expected qubit-to-majorana, double, jordan-wigner or product)"
            )))
        }
    }
    Ok(())
}

fn clean(input: &Path, region_spec: &str) -> Result<(), CliError> {
    let code = load_valid_majorana(input)?;
    let region =
        Region::parse(region_spec, code.layout(), code.modes()).map_err(usage)?;
    match geometry::is_cleanable(&code, &region) {
        geometry::Cleanability::Cleanable => println!("cleanable"),
        geometry::Cleanability::Uncleanable { witness } => {
            println!("uncleanable; witness logical support: {:?}", witness.support())
        }
    }
    Ok(())
}

fn strips(input: &Path, axis: &str, width: i64) -> Result<(), CliError> {
    let code = load_valid_majorana(input)?;
    let axis: Axis = axis.parse().map_err(CliError::Usage)?;
    let layout = code
        .layout()
        .ok_or_else(|| CliError::Usage("code has no layout; strips need positions".into()))?;
    let required = geometry::generator_axis_extent(&code, axis).map_err(usage)?;
    let chebyshev = geometry::generator_diameter(&code).map_err(usage)?;
    if width < required {
        return Err(CliError::Usage(format!(
            "strip width {width} is below the generator extent {required} along the axis \
             (full generator diameter: {chebyshev})"
        )));
    }
    let partition = geometry::make_strips(layout, axis, width).map_err(usage)?;
    println!(
        "{} strips of width {} along {:?} (generator extent {} along axis, diameter {})",
        partition.strips().len(),
        width,
        partition.axis,
        required,
        chebyshev
    );
    let verdict = geometry::strip_lemma_analysis(&code, &partition).map_err(usage)?;
    match &verdict.even_in_strip {
        Some((strip, support)) => {
            println!("case (i): even logical in strip {strip}, support {support:?}")
        }
        None => println!("case (i): no single-strip even logical found"),
    }
    match &verdict.odd_pair {
        Some(((s0, w0), (s1, w1))) => {
            println!("case (ii): odd logicals in strips {s0} and {s1}, supports {w0:?} / {w1:?}")
        }
        None => println!("case (ii): fewer than two strips with odd logicals"),
    }
    Ok(())
}

fn parse_list(list: &str) -> Result<Vec<usize>, CliError> {
    list.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| CliError::Usage(format!("bad list entry '{t}': {e}")))
        })
        .collect()
}

fn scale(r_list: &str, l_list: &str, max_weight: usize, cap: usize) -> Result<(), CliError> {
    let rs = parse_list(r_list)?;
    let ls = parse_list(l_list)?;
    let rows = color::scaling_experiment(&rs, &ls, max_weight, cap).map_err(usage)?;
    println!("R,L,modes,d,l_even,min_odd_weight");
    for row in rows {
        let fmt_u = |v: Option<usize>| v.map_or("exhausted".to_string(), |x| x.to_string());
        let fmt_i = |v: Option<i64>| v.map_or("exhausted".to_string(), |x| x.to_string());
        println!(
            "{},{},{},{},{},{}",
            row.r,
            row.l,
            row.modes,
            fmt_u(row.d),
            fmt_i(row.l_even),
            fmt_u(row.min_odd_weight)
        );
    }
    Ok(())
}
