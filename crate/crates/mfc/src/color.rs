//! Cylinder color codes: trivalent lattices with odd boundaries and their
//! face codes.
//!
//! A surface graph cellularly decomposing a cylinder supports a Majorana
//! code with one generator per face (the product of the modes around the
//! face) when four conditions hold:
//!
//! * (G1) the vertex count is even,
//! * (G2) every vertex has degree 3,
//! * (G3) every face boundary has even length,
//! * (G4) both boundary cycles have odd length.
//!
//! The face code then encodes exactly one qubit, its two odd logical
//! operators live on the two boundary cycles, and the face set splits
//! uniquely into `F0`/`F1` such that every vertex touches exactly two `F1`
//! faces and every interior vertex exactly one `F0` face. Edges whose two
//! side faces are both in `F1` form a perfect matching `E0`; paths of `E0`
//! edges between the two external patches yield the even string logicals.
//!
//! # Lattice family
//!
//! [`build_cylinder`]`(R, L)` produces a brick-wall cylinder with `R`
//! vertices on each boundary (R odd) and `L` layers of `F0` hexagons,
//! `|V| = 2R(3L+1)` vertices and `R(3L+1)` faces. From bottom to top:
//! a belt of `R` hexagons on the bottom boundary, then `L` belts of `R`
//! squares plus `R` hexagons (the `F0` layer), consecutive layers joined by
//! belts of `R` octagons, and a final belt of `R` hexagons closing the top
//! boundary. The horizontal period is `3R` position units and each octagon
//! belt shifts the pattern by one boundary step, which is exactly why the
//! lattice is face 3-colorable on every topologically trivial patch but not
//! globally.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::geometry::Layout;
use crate::gf2::{BitMatrix, BitVector};
use crate::majorana::{MajoranaCode, MajoranaOperator};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColorError {
    #[error("R must be odd (boundary cycles must have odd length), got {0}")]
    EvenR(usize),
    #[error("R must be at least 3, got {0}")]
    RTooSmall(usize),
    #[error("L must be at least 1, got {0}")]
    LTooSmall(usize),
    #[error("surface violates the code conditions: {0:?}")]
    InvalidSurface(Vec<SurfaceViolation>),
    #[error("edge sequence is not a path in the derived graph")]
    NotAPath,
    #[error("path does not connect the two external faces")]
    PathDoesNotConnectExternalFaces,
    #[error("face dependency system inconsistent: {0}")]
    InconsistencyDetected(String),
    #[error("instance with {modes} modes exceeds the cap of {cap}")]
    TooLarge { modes: usize, cap: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum SurfaceViolation {
    OddVertexCount { vertices: usize },
    WrongDegree { vertex: usize, degree: usize },
    OddFace { face: usize, len: usize },
    BadFaceCycle { face: usize },
    WrongBoundaryCount { count: usize },
    EvenBoundary { boundary: usize, len: usize },
    BadBoundaryCycle { boundary: usize },
    EdgeFaceIncidence { edge: (usize, usize), faces: usize, expected: usize },
    VertexFaceIncidence { vertex: usize, faces: usize, expected: usize },
    EulerCharacteristic { chi: i64 },
}

/// A cellular decomposition of a surface (cylinder or torus): vertices with
/// positions, edges, faces as vertex cycles, and 0 or 2 boundary cycles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceGraph {
    pub positions: Vec<(i64, i64)>,
    /// Declared wrap extents (x is periodic for cylinders; both for tori).
    pub periodic: [Option<i64>; 2],
    pub edges: Vec<(usize, usize)>,
    pub faces: Vec<Vec<usize>>,
    pub boundary: Vec<Vec<usize>>,
}

impl SurfaceGraph {
    pub fn vertex_count(&self) -> usize {
        self.positions.len()
    }

    fn edge_set(&self) -> BTreeMap<(usize, usize), usize> {
        self.edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| ((u.min(v), u.max(v)), i))
            .collect()
    }

    fn has_edge(&self, set: &BTreeMap<(usize, usize), usize>, u: usize, v: usize) -> bool {
        set.contains_key(&(u.min(v), u.max(v)))
    }

    /// For every edge, the indices of the faces whose boundary uses it.
    fn edge_faces(&self) -> BTreeMap<(usize, usize), Vec<usize>> {
        let mut map: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (fi, cycle) in self.faces.iter().enumerate() {
            for i in 0..cycle.len() {
                let u = cycle[i];
                let v = cycle[(i + 1) % cycle.len()];
                map.entry((u.min(v), u.max(v))).or_default().push(fi);
            }
        }
        map
    }

    /// For every vertex, the indices of its adjacent faces.
    fn vertex_faces(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.vertex_count()];
        for (fi, cycle) in self.faces.iter().enumerate() {
            for &v in cycle {
                out[v].push(fi);
            }
        }
        out
    }

    fn boundary_vertex_set(&self) -> Vec<Option<usize>> {
        let mut which = vec![None; self.vertex_count()];
        for (bi, cycle) in self.boundary.iter().enumerate() {
            for &v in cycle {
                which[v] = Some(bi);
            }
        }
        which
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("surface serializes")
    }
}

/// Checks conditions (G1)-(G4) plus cellularity and reports every violation.
pub fn validate_surface(g: &SurfaceGraph) -> Vec<SurfaceViolation> {
    let mut out = Vec::new();
    let n = g.vertex_count();
    if n % 2 == 1 {
        out.push(SurfaceViolation::OddVertexCount { vertices: n });
    }
    // G2: degree 3 everywhere
    let mut degree = vec![0usize; n];
    for &(u, v) in &g.edges {
        degree[u] += 1;
        degree[v] += 1;
    }
    for (v, &d) in degree.iter().enumerate() {
        if d != 3 {
            out.push(SurfaceViolation::WrongDegree { vertex: v, degree: d });
        }
    }
    // G3: even faces, and faces must be closed cycles of existing edges
    let eset = g.edge_set();
    for (fi, cycle) in g.faces.iter().enumerate() {
        if cycle.len() % 2 == 1 {
            out.push(SurfaceViolation::OddFace { face: fi, len: cycle.len() });
        }
        let mut distinct = cycle.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let closed = cycle.len() >= 3
            && distinct.len() == cycle.len()
            && (0..cycle.len()).all(|i| g.has_edge(&eset, cycle[i], cycle[(i + 1) % cycle.len()]));
        if !closed {
            out.push(SurfaceViolation::BadFaceCycle { face: fi });
        }
    }
    // G4: exactly two odd boundary cycles
    if g.boundary.len() != 2 {
        out.push(SurfaceViolation::WrongBoundaryCount { count: g.boundary.len() });
    }
    for (bi, cycle) in g.boundary.iter().enumerate() {
        if cycle.len() % 2 == 0 {
            out.push(SurfaceViolation::EvenBoundary { boundary: bi, len: cycle.len() });
        }
        let closed = cycle.len() >= 3
            && (0..cycle.len()).all(|i| g.has_edge(&eset, cycle[i], cycle[(i + 1) % cycle.len()]));
        if !closed {
            out.push(SurfaceViolation::BadBoundaryCycle { boundary: bi });
        }
    }
    // cellularity: boundary edges border one face, interior edges two
    let mut boundary_edges: BTreeMap<(usize, usize), ()> = BTreeMap::new();
    for cycle in &g.boundary {
        for i in 0..cycle.len() {
            let u = cycle[i];
            let v = cycle[(i + 1) % cycle.len()];
            boundary_edges.insert((u.min(v), u.max(v)), ());
        }
    }
    let ef = g.edge_faces();
    for &(u, v) in &g.edges {
        let key = (u.min(v), u.max(v));
        let count = ef.get(&key).map_or(0, |f| f.len());
        let expected = if boundary_edges.contains_key(&key) { 1 } else { 2 };
        if count != expected {
            out.push(SurfaceViolation::EdgeFaceIncidence { edge: key, faces: count, expected });
        }
    }
    // interior vertices touch three faces, boundary vertices two
    let which_boundary = g.boundary_vertex_set();
    for (v, faces) in g.vertex_faces().iter().enumerate() {
        let expected = if which_boundary[v].is_some() { 2 } else { 3 };
        if faces.len() != expected {
            out.push(SurfaceViolation::VertexFaceIncidence {
                vertex: v,
                faces: faces.len(),
                expected,
            });
        }
    }
    let chi = n as i64 - g.edges.len() as i64 + g.faces.len() as i64;
    if chi != 0 {
        out.push(SurfaceViolation::EulerCharacteristic { chi });
    }
    out
}

// ============================================================================
// Builders
// ============================================================================

struct Builder {
    positions: Vec<(i64, i64)>,
    edges: Vec<(usize, usize)>,
    faces: Vec<Vec<usize>>,
    width: i64,
}

impl Builder {
    fn vertex(&mut self, x: i64, y: i64) -> usize {
        self.positions.push((x.rem_euclid(self.width), y));
        self.positions.len() - 1
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u.min(v), u.max(v)));
    }

    fn face(&mut self, cycle: Vec<usize>) -> usize {
        self.faces.push(cycle);
        self.faces.len() - 1
    }
}

#[derive(Clone, Copy)]
struct Slot {
    vid: usize,
    open: bool,
}

/// Builds the brick-wall cylinder with `R` boundary vertices per end and `L`
/// hexagon layers; see the module docs for the belt structure. The result
/// always passes [`validate_surface`].
pub fn build_cylinder(r: usize, l: usize) -> Result<SurfaceGraph, ColorError> {
    let (g, _) = build_cylinder_with_f0(r, l)?;
    Ok(g)
}

/// Like [`build_cylinder`] but also returns the face indices the construction
/// places in `F0` (used as an independent cross-check of the partition).
pub fn build_cylinder_with_f0(
    r: usize,
    l: usize,
) -> Result<(SurfaceGraph, Vec<usize>), ColorError> {
    if r.is_multiple_of(2) {
        return Err(ColorError::EvenR(r));
    }
    if r < 3 {
        return Err(ColorError::RTooSmall(r));
    }
    if l < 1 {
        return Err(ColorError::LTooSmall(l));
    }
    let width = 3 * r as i64;
    let mut b = Builder { positions: Vec::new(), edges: Vec::new(), faces: Vec::new(), width };
    let mut f0 = Vec::new();

    // bottom boundary ring
    let ring0: Vec<usize> = (0..r).map(|t| b.vertex(3 * t as i64, 0)).collect();
    for t in 0..r {
        b.edge(ring0[t], ring0[(t + 1) % r]);
    }

    // bottom hexagon belt: ring -> rim with pattern [closed, open, open]
    let mut rim: Vec<Slot> = Vec::with_capacity(3 * r);
    {
        let tops: Vec<usize> = (0..r).map(|t| b.vertex(3 * t as i64, 1)).collect();
        for t in 0..r {
            b.edge(ring0[t], tops[t]);
        }
        let mut mids = Vec::with_capacity(r);
        for t in 0..r {
            let m = b.vertex(3 * t as i64 + 1, 1);
            let n = b.vertex(3 * t as i64 + 2, 1);
            b.edge(tops[t], m);
            b.edge(m, n);
            b.edge(n, tops[(t + 1) % r]);
            mids.push((m, n));
        }
        for t in 0..r {
            let (m, n) = mids[t];
            b.face(vec![ring0[t], ring0[(t + 1) % r], tops[(t + 1) % r], n, m, tops[t]]);
        }
        for t in 0..r {
            let (m, n) = mids[t];
            rim.push(Slot { vid: tops[t], open: false });
            rim.push(Slot { vid: m, open: true });
            rim.push(Slot { vid: n, open: true });
        }
    }

    for layer in 1..=l {
        rim = sq_hex_belt(&mut b, &rim, r, &mut f0);
        if layer < l {
            rim = oct_belt(&mut b, &rim, r);
        }
    }

    // cap: rim pattern is [TM closed, TN closed, PK open]
    let y = b.positions[rim[0].vid].1 + 1;
    let pk: Vec<usize> = (0..r).map(|t| rim[3 * t + 2].vid).collect();
    let ring1: Vec<usize> = (0..r).map(|t| b.vertex(b.positions[pk[t]].0, y)).collect();
    for t in 0..r {
        b.edge(ring1[t], ring1[(t + 1) % r]);
        b.edge(ring1[t], pk[t]);
    }
    for t in 0..r {
        let tm1 = rim[3 * ((t + 1) % r)].vid;
        let tn1 = rim[3 * ((t + 1) % r) + 1].vid;
        b.face(vec![ring1[t], ring1[(t + 1) % r], pk[(t + 1) % r], tn1, tm1, pk[t]]);
    }

    let g = SurfaceGraph {
        positions: b.positions,
        periodic: [Some(width), None],
        edges: b.edges,
        faces: b.faces,
        boundary: vec![ring0, ring1],
    };
    debug_assert!(validate_surface(&g).is_empty());
    Ok((g, f0))
}

/// One square+hexagon belt on a rim with pattern `[closed, open, open] × R`;
/// returns the new rim with pattern `[closed, closed, open] × R` and records
/// the hexagons (the layer's `F0` faces).
fn sq_hex_belt(b: &mut Builder, rim: &[Slot], r: usize, f0: &mut Vec<usize>) -> Vec<Slot> {
    let y = b.positions[rim[0].vid].1 + 1;
    let c: Vec<usize> = (0..r).map(|t| rim[3 * t].vid).collect();
    let o1: Vec<usize> = (0..r).map(|t| rim[3 * t + 1].vid).collect();
    let o2: Vec<usize> = (0..r).map(|t| rim[3 * t + 2].vid).collect();
    debug_assert!(rim.iter().enumerate().all(|(i, s)| s.open == (i % 3 != 0)));

    let tm: Vec<usize> = (0..r).map(|t| b.vertex(b.positions[o1[t]].0, y)).collect();
    let tn: Vec<usize> = (0..r).map(|t| b.vertex(b.positions[o2[t]].0, y)).collect();
    let pk: Vec<usize> = (0..r)
        .map(|t| b.vertex(b.positions[c[(t + 1) % r]].0, y))
        .collect();
    for t in 0..r {
        b.edge(o1[t], tm[t]);
        b.edge(o2[t], tn[t]);
        b.edge(tm[t], tn[t]);
        b.edge(tn[t], pk[t]);
        b.edge(pk[t], tm[(t + 1) % r]);
    }
    for t in 0..r {
        b.face(vec![o1[t], o2[t], tn[t], tm[t]]);
    }
    for t in 0..r {
        let fi = b.face(vec![
            o2[t],
            c[(t + 1) % r],
            o1[(t + 1) % r],
            tm[(t + 1) % r],
            pk[t],
            tn[t],
        ]);
        f0.push(fi);
    }
    let mut out = Vec::with_capacity(3 * r);
    for t in 0..r {
        out.push(Slot { vid: tm[t], open: false });
        out.push(Slot { vid: tn[t], open: false });
        out.push(Slot { vid: pk[t], open: true });
    }
    out
}

/// One octagon belt on a rim with pattern `[closed, closed, open] × R`;
/// returns a rim with pattern `[closed, open, open] × R`, shifted by one
/// boundary step (the spiral that obstructs a global 3-coloring).
fn oct_belt(b: &mut Builder, rim: &[Slot], r: usize) -> Vec<Slot> {
    let y = b.positions[rim[0].vid].1 + 1;
    let tm: Vec<usize> = (0..r).map(|t| rim[3 * t].vid).collect();
    let tn: Vec<usize> = (0..r).map(|t| rim[3 * t + 1].vid).collect();
    let pk: Vec<usize> = (0..r).map(|t| rim[3 * t + 2].vid).collect();
    debug_assert!(rim.iter().enumerate().all(|(i, s)| s.open == (i % 3 == 2)));

    let u: Vec<usize> = (0..r).map(|t| b.vertex(b.positions[pk[t]].0, y)).collect();
    let rv: Vec<usize> = (0..r).map(|t| b.vertex(b.positions[pk[t]].0 + 1, y)).collect();
    let sv: Vec<usize> = (0..r).map(|t| b.vertex(b.positions[pk[t]].0 + 2, y)).collect();
    for t in 0..r {
        b.edge(pk[t], u[t]);
        b.edge(u[t], rv[t]);
        b.edge(rv[t], sv[t]);
        b.edge(sv[t], u[(t + 1) % r]);
    }
    for t in 0..r {
        b.face(vec![
            pk[t],
            tm[(t + 1) % r],
            tn[(t + 1) % r],
            pk[(t + 1) % r],
            u[(t + 1) % r],
            sv[t],
            rv[t],
            u[t],
        ]);
    }
    let mut out = Vec::with_capacity(3 * r);
    for t in 0..r {
        out.push(Slot { vid: u[t], open: false });
        out.push(Slot { vid: rv[t], open: true });
        out.push(Slot { vid: sv[t], open: true });
    }
    out
}

/// Brick-wall hexagonal lattice on a torus, sized so that a face 3-coloring
/// closes up: `3*lx` hexagons per row and `6*ly` rows.
pub fn build_hex_torus(lx: usize, ly: usize) -> SurfaceGraph {
    assert!(lx >= 1 && ly >= 1);
    let bricks = 3 * lx;
    let cols = 2 * bricks;
    let rows = 6 * ly;
    let vid = |x: usize, y: usize| (y % rows) * cols + (x % cols);
    let mut edges = Vec::new();
    for y in 0..rows {
        for x in 0..cols {
            let a = vid(x, y);
            let b = vid(x + 1, y);
            edges.push((a.min(b), a.max(b)));
            if x % 2 == y % 2 {
                let c = vid(x, y + 1);
                edges.push((a.min(c), a.max(c)));
            }
        }
    }
    let mut faces = Vec::new();
    for g in 0..rows {
        for j in 0..bricks {
            let s = 2 * j + (g % 2);
            faces.push(vec![
                vid(s, g),
                vid(s + 1, g),
                vid(s + 2, g),
                vid(s + 2, g + 1),
                vid(s + 1, g + 1),
                vid(s, g + 1),
            ]);
        }
    }
    let positions = (0..rows)
        .flat_map(|y| (0..cols).map(move |x| (x as i64, y as i64)))
        .collect();
    SurfaceGraph {
        positions,
        periodic: [Some(cols as i64), Some(rows as i64)],
        edges,
        faces,
        boundary: vec![],
    }
}

/// Majorana code of a surface graph without boundary-condition checks; used
/// for tori, whose face codes are valid although (G4) fails.
pub fn face_code_unchecked(g: &SurfaceGraph) -> MajoranaCode {
    let supports: Vec<Vec<usize>> = g
        .faces
        .iter()
        .map(|cycle| {
            let mut s = cycle.clone();
            s.sort_unstable();
            s
        })
        .collect();
    let layout = Layout::new(g.positions.clone(), g.periodic);
    MajoranaCode::from_supports(g.vertex_count(), &supports, Some(layout))
        .expect("face vertices in range")
}

/// One mode per vertex, one generator per face. Requires the surface to pass
/// [`validate_surface`]; the resulting code is always a valid Majorana code
/// (even faces, pairwise even vertex sharing).
pub fn face_code(g: &SurfaceGraph) -> Result<MajoranaCode, ColorError> {
    let violations = validate_surface(g);
    if !violations.is_empty() {
        return Err(ColorError::InvalidSurface(violations));
    }
    let code = face_code_unchecked(g);
    debug_assert!(code.is_valid());
    Ok(code)
}

/// Face code of the sized hexagonal torus.
pub fn hex_torus_code(lx: usize, ly: usize) -> MajoranaCode {
    let code = face_code_unchecked(&build_hex_torus(lx, ly));
    debug_assert!(code.is_valid());
    code
}

// ============================================================================
// Face partition and derived graphs
// ============================================================================

/// The unique split of the faces with every vertex adjacent to exactly two
/// `F1` faces and every interior vertex to exactly one `F0` face.
#[derive(Clone, Debug, Serialize)]
pub struct FacePartition {
    /// x_f = true means f is in F1.
    pub marks: Vec<bool>,
    pub f0: Vec<usize>,
    pub f1: Vec<usize>,
}

impl FacePartition {
    fn from_marks(marks: Vec<bool>) -> Self {
        let f0 = (0..marks.len()).filter(|&f| !marks[f]).collect();
        let f1 = (0..marks.len()).filter(|&f| marks[f]).collect();
        Self { marks, f0, f1 }
    }
}

/// Face-dependency matrix: column space over faces, rows are the vertex
/// incidence constraints. A marking `x` multiplies to the identity iff every
/// vertex is covered an even number of times.
fn dependency_kernel(g: &SurfaceGraph) -> BitMatrix {
    let incidence = BitMatrix::from_supports(
        g.vertex_count(),
        &g.faces
            .iter()
            .map(|c| {
                let mut s = c.clone();
                s.sort_unstable();
                s
            })
            .collect::<Vec<_>>(),
    );
    incidence.transpose().kernel_basis()
}

fn check_partition_conditions(g: &SurfaceGraph, marks: &[bool]) -> Result<(), String> {
    let which_boundary = g.boundary_vertex_set();
    for (v, faces) in g.vertex_faces().iter().enumerate() {
        let f1 = faces.iter().filter(|&&f| marks[f]).count();
        let f0 = faces.len() - f1;
        if f1 != 2 {
            return Err(format!("vertex {v} touches {f1} F1 faces, expected 2"));
        }
        let expected_f0 = if which_boundary[v].is_some() { 0 } else { 1 };
        if f0 != expected_f0 {
            return Err(format!("vertex {v} touches {f0} F0 faces, expected {expected_f0}"));
        }
    }
    Ok(())
}

/// Computes the unique face partition of a valid cylinder surface by solving
/// the dependency system over GF(2), then validating the vertex conditions.
pub fn partition_faces(g: &SurfaceGraph) -> Result<FacePartition, ColorError> {
    let violations = validate_surface(g);
    if !violations.is_empty() {
        return Err(ColorError::InvalidSurface(violations));
    }
    let kernel = dependency_kernel(g);
    if kernel.n_rows() != 1 {
        return Err(ColorError::InconsistencyDetected(format!(
            "dependency kernel has dimension {}, expected 1",
            kernel.n_rows()
        )));
    }
    let marks: Vec<bool> = (0..g.faces.len()).map(|f| kernel.row(0).get(f)).collect();
    check_partition_conditions(g, &marks).map_err(ColorError::InconsistencyDetected)?;
    Ok(FacePartition::from_marks(marks))
}

/// For surfaces without boundary (tori) the dependency kernel has dimension
/// 2; any non-trivial kernel vector whose marked faces cover every vertex
/// exactly twice serves as an `F1` marking. Returns the first such choice.
pub fn any_face_partition(g: &SurfaceGraph) -> Option<FacePartition> {
    let kernel = dependency_kernel(g);
    let dim = kernel.n_rows().min(8);
    for mask in 1u64..(1 << dim) {
        let mut x = BitVector::zeros(g.faces.len());
        for (i, row) in kernel.rows().iter().take(dim).enumerate() {
            if (mask >> i) & 1 == 1 {
                x.xor_assign(row);
            }
        }
        let marks: Vec<bool> = (0..g.faces.len()).map(|f| x.get(f)).collect();
        if check_partition_conditions(g, &marks).is_ok() {
            return Some(FacePartition::from_marks(marks));
        }
    }
    None
}

/// Independent construction of the partition following the dependency
/// propagation argument: fix the marking on the two faces at a starting
/// boundary vertex and propagate the per-vertex parity constraints.
pub fn partition_by_propagation(
    g: &SurfaceGraph,
    start_boundary: usize,
) -> Result<FacePartition, ColorError> {
    let vertex_faces = g.vertex_faces();
    let start = *g
        .boundary
        .get(start_boundary)
        .and_then(|c| c.first())
        .ok_or_else(|| ColorError::InconsistencyDetected("no boundary cycle".into()))?;
    let mut marks: Vec<Option<bool>> = vec![None; g.faces.len()];
    // boundary faces carry the mark: seed both faces at the start vertex
    for &f in &vertex_faces[start] {
        marks[f] = Some(true);
    }
    // propagate until fixed point: at each vertex the marks must sum to 0
    // (interior: three faces; boundary: two faces, forced equal)
    let mut changed = true;
    while changed {
        changed = false;
        for (v, faces) in vertex_faces.iter().enumerate() {
            let unknown: Vec<usize> = faces.iter().copied().filter(|&f| marks[f].is_none()).collect();
            let known_sum = faces
                .iter()
                .filter_map(|&f| marks[f])
                .fold(false, |a, b| a ^ b);
            match unknown.len() {
                0 => {
                    if known_sum {
                        return Err(ColorError::InconsistencyDetected(format!(
                            "vertex {v} parity constraint violated during propagation"
                        )));
                    }
                }
                1 => {
                    marks[unknown[0]] = Some(known_sum);
                    changed = true;
                }
                _ => {}
            }
        }
    }
    let marks: Option<Vec<bool>> = marks.into_iter().collect();
    let marks = marks.ok_or_else(|| {
        ColorError::InconsistencyDetected("propagation did not reach every face".into())
    })?;
    check_partition_conditions(g, &marks).map_err(ColorError::InconsistencyDetected)?;
    Ok(FacePartition::from_marks(marks))
}

/// A node of the derived graph on `F0`: either an `F0` face or one of the
/// two external patches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum DerivedNode {
    Face(usize),
    External(usize),
}

/// The `E0` matching and both derived graphs. `E0` edges have both side
/// faces in `F1`; each such edge connects, through its two endpoints, the
/// third faces there (an `F0` face, or the external patch for boundary
/// vertices).
pub struct DerivedGraphs {
    /// E0 edges as vertex pairs.
    pub e0: Vec<(usize, usize)>,
    /// Endpoints of each E0 edge in the F0-derived graph.
    pub g0_edges: Vec<(DerivedNode, DerivedNode)>,
    /// For each E0 edge, the two F1 side faces (the edges of the F1-derived
    /// graph, whose bipartiteness decides 3-colorability).
    pub g1_edges: Vec<(usize, usize)>,
}

pub fn derived_graphs(g: &SurfaceGraph, partition: &FacePartition) -> DerivedGraphs {
    let ef = g.edge_faces();
    let vertex_faces = g.vertex_faces();
    let which_boundary = g.boundary_vertex_set();
    let mut e0 = Vec::new();
    let mut g0_edges = Vec::new();
    let mut g1_edges = Vec::new();

    let end_node = |u: usize, sides: &[usize]| -> DerivedNode {
        if let Some(b) = which_boundary[u] {
            return DerivedNode::External(b);
        }
        let third: Vec<usize> = vertex_faces[u]
            .iter()
            .copied()
            .filter(|f| !sides.contains(f))
            .collect();
        debug_assert_eq!(third.len(), 1);
        debug_assert!(!partition.marks[third[0]]);
        DerivedNode::Face(third[0])
    };

    for (&(u, v), sides) in &ef {
        if sides.len() != 2 {
            continue; // boundary edge
        }
        if !(partition.marks[sides[0]] && partition.marks[sides[1]]) {
            continue;
        }
        e0.push((u, v));
        g0_edges.push((end_node(u, sides), end_node(v, sides)));
        g1_edges.push((sides[0], sides[1]));
    }
    DerivedGraphs { e0, g0_edges, g1_edges }
}

// ============================================================================
// Logical operators
// ============================================================================

/// The two odd logical operators supported on the boundary cycles. They are
/// verified to commute with every face operator, to lie outside the
/// stabilizer rowspace, and to anti-commute with each other.
pub fn boundary_logicals(
    g: &SurfaceGraph,
) -> Result<(MajoranaOperator, MajoranaOperator), ColorError> {
    let code = face_code(g)?;
    let ops: Vec<MajoranaOperator> = g
        .boundary
        .iter()
        .map(|cycle| MajoranaOperator::from_indices(code.modes(), &{
            let mut s = cycle.clone();
            s.sort_unstable();
            s
        }))
        .collect();
    let [c0, c1]: [MajoranaOperator; 2] = ops
        .try_into()
        .map_err(|_| ColorError::InconsistencyDetected("expected two boundary cycles".into()))?;
    for op in [&c0, &c1] {
        let in_kernel = code
            .generators()
            .rows()
            .iter()
            .all(|g| op.bits().overlap(g) % 2 == 0);
        if !in_kernel || code.generators().in_span(op.bits()) {
            return Err(ColorError::InconsistencyDetected(
                "boundary operator is not a logical operator".into(),
            ));
        }
    }
    if !c0.anticommutes_with(&c1) {
        return Err(ColorError::InconsistencyDetected(
            "boundary operators fail to anti-commute".into(),
        ));
    }
    Ok((c0, c1))
}

/// Builds the even string logical along a path of `E0` edges connecting the
/// two external patches; the operator is the product `c_u c_v` over the path
/// edges and has weight twice the path length.
pub fn string_logical(
    g: &SurfaceGraph,
    partition: &FacePartition,
    path_edges: &[(usize, usize)],
) -> Result<MajoranaOperator, ColorError> {
    let derived = derived_graphs(g, partition);
    let index: BTreeMap<(usize, usize), usize> = derived
        .e0
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| ((u.min(v), u.max(v)), i))
        .collect();
    if path_edges.is_empty() {
        return Err(ColorError::NotAPath);
    }
    let mut nodes: Vec<DerivedNode> = Vec::new();
    for (i, &(u, v)) in path_edges.iter().enumerate() {
        let ei = *index
            .get(&(u.min(v), u.max(v)))
            .ok_or(ColorError::NotAPath)?;
        let (a, b) = derived.g0_edges[ei];
        if i == 0 {
            nodes.push(a);
            nodes.push(b);
        } else {
            // the first edge's orientation is free: flip it once if needed
            if i == 1 && a != nodes[1] && b != nodes[1] && (a == nodes[0] || b == nodes[0]) {
                nodes.swap(0, 1);
            }
            let last = *nodes.last().unwrap();
            if a == last {
                nodes.push(b);
            } else if b == last {
                nodes.push(a);
            } else {
                return Err(ColorError::NotAPath);
            }
        }
    }
    let first = *nodes.first().unwrap();
    let last = *nodes.last().unwrap();
    match (first, last) {
        (DerivedNode::External(a), DerivedNode::External(b)) if a != b => {}
        _ => return Err(ColorError::PathDoesNotConnectExternalFaces),
    }
    let mut bits = BitVector::zeros(g.vertex_count());
    for &(u, v) in path_edges {
        bits.flip(u);
        bits.flip(v);
    }
    Ok(MajoranaOperator::new(bits))
}

/// Shortest `E0` path between the two external patches (breadth-first search
/// on the derived graph) together with its string logical.
pub fn shortest_string_logical(
    g: &SurfaceGraph,
    partition: &FacePartition,
) -> Result<(Vec<(usize, usize)>, MajoranaOperator), ColorError> {
    let derived = derived_graphs(g, partition);
    // BFS over derived nodes, tracking the E0 edge used to reach each node
    let mut nodes: Vec<DerivedNode> = derived
        .g0_edges
        .iter()
        .flat_map(|&(a, b)| [a, b])
        .collect();
    nodes.sort();
    nodes.dedup();
    let node_id = |n: DerivedNode| nodes.binary_search(&n).expect("node present");
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nodes.len()]; // (neighbour, e0 index)
    for (ei, &(a, b)) in derived.g0_edges.iter().enumerate() {
        adj[node_id(a)].push((node_id(b), ei));
        adj[node_id(b)].push((node_id(a), ei));
    }
    let start = node_id(DerivedNode::External(0));
    let goal = node_id(DerivedNode::External(1));
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; nodes.len()];
    let mut seen = vec![false; nodes.len()];
    let mut queue = std::collections::VecDeque::from([start]);
    seen[start] = true;
    while let Some(cur) = queue.pop_front() {
        if cur == goal {
            break;
        }
        for &(next, ei) in &adj[cur] {
            if !seen[next] {
                seen[next] = true;
                prev[next] = Some((cur, ei));
                queue.push_back(next);
            }
        }
    }
    if !seen[goal] {
        return Err(ColorError::PathDoesNotConnectExternalFaces);
    }
    let mut path = Vec::new();
    let mut cur = goal;
    while let Some((p, ei)) = prev[cur] {
        path.push(derived.e0[ei]);
        cur = p;
    }
    path.reverse();
    let op = string_logical(g, partition, &path)?;
    Ok((path, op))
}

// ============================================================================
// Colorability
// ============================================================================

#[derive(Clone, Debug, Serialize)]
pub struct ColorabilityReport {
    /// Whether the F1-derived graph is bipartite; by the local-coloring
    /// correspondence this equals face 3-colorability of the whole graph.
    pub g1_bipartite: bool,
    pub three_colorable: bool,
    /// When 3-colorable, a verified proper face coloring (values 0, 1, 2
    /// with all F0 faces colored 0).
    pub coloring: Option<Vec<u8>>,
    /// 3-colorability of the subgraph left after removing the cut faces.
    pub cut_three_colorable: Option<bool>,
    /// Faces removed by the cut.
    pub cut_faces: Vec<usize>,
}

fn bipartition(n_faces: usize, members: &[usize], edges: &[(usize, usize)]) -> Option<Vec<u8>> {
    let mut side = vec![u8::MAX; n_faces];
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(a, b) in edges {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    for &start in members {
        if side[start] != u8::MAX {
            continue;
        }
        side[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(cur) = queue.pop_front() {
            for &next in adj.get(&cur).map(|v| v.as_slice()).unwrap_or(&[]) {
                if side[next] == u8::MAX {
                    side[next] = 1 - side[cur];
                    queue.push_back(next);
                } else if side[next] == side[cur] {
                    return None;
                }
            }
        }
    }
    Some(side)
}

/// Decides face 3-colorability via bipartiteness of the F1-derived graph and
/// verifies any produced coloring directly against face adjacency. With a
/// `cut` (a span of horizontal positions), also reports colorability of the
/// subgraph with the cut faces removed.
pub fn colorability(
    g: &SurfaceGraph,
    partition: &FacePartition,
    cut: Option<(i64, i64)>,
) -> ColorabilityReport {
    let derived = derived_graphs(g, partition);
    let side = bipartition(g.faces.len(), &partition.f1, &derived.g1_edges);
    let g1_bipartite = side.is_some();

    // adjacency between faces sharing an edge, for direct verification
    let mut face_adj: Vec<(usize, usize)> = Vec::new();
    for sides in g.edge_faces().values() {
        if sides.len() == 2 {
            face_adj.push((sides[0], sides[1]));
        }
    }

    let coloring = side.map(|side| {
        let coloring: Vec<u8> = (0..g.faces.len())
            .map(|f| if partition.marks[f] { 1 + side[f] } else { 0 })
            .collect();
        for &(a, b) in &face_adj {
            assert_ne!(coloring[a], coloring[b], "constructed coloring must be proper");
        }
        coloring
    });

    let (cut_three_colorable, cut_faces) = match cut {
        None => (None, Vec::new()),
        Some((x_lo, x_hi)) => {
            let in_window = |f: usize| {
                g.faces[f]
                    .iter()
                    .any(|&v| x_lo <= g.positions[v].0 && g.positions[v].0 <= x_hi)
            };
            let cut_faces: Vec<usize> = (0..g.faces.len()).filter(|&f| in_window(f)).collect();
            let keep: Vec<usize> = partition
                .f1
                .iter()
                .copied()
                .filter(|&f| !in_window(f))
                .collect();
            let sub_edges: Vec<(usize, usize)> = derived
                .g1_edges
                .iter()
                .copied()
                .filter(|&(a, b)| !in_window(a) && !in_window(b))
                .collect();
            (
                Some(bipartition(g.faces.len(), &keep, &sub_edges).is_some()),
                cut_faces,
            )
        }
    };

    ColorabilityReport {
        g1_bipartite,
        three_colorable: g1_bipartite,
        coloring,
        cut_three_colorable,
        cut_faces,
    }
}

// ============================================================================
// Disjoint paths and the scaling experiment
// ============================================================================

/// Maximum number of vertex-disjoint paths between the two external patches
/// in the F0-derived graph; every odd logical operator must have weight at
/// least this number.
pub fn disjoint_path_count(g: &SurfaceGraph, partition: &FacePartition) -> usize {
    let derived = derived_graphs(g, partition);
    let mut nodes: Vec<DerivedNode> = derived
        .g0_edges
        .iter()
        .flat_map(|&(a, b)| [a, b])
        .collect();
    nodes.sort();
    nodes.dedup();
    let id = |n: DerivedNode| nodes.binary_search(&n).expect("node present");
    // split interior nodes to enforce unit vertex capacity
    let n = nodes.len();
    let size = 2 * n;
    let idx_in = |v: usize| 2 * v;
    let idx_out = |v: usize| 2 * v + 1;
    let mut cap = vec![vec![0i32; size]; size];
    for (v, node) in nodes.iter().enumerate() {
        cap[idx_in(v)][idx_out(v)] = match node {
            DerivedNode::External(_) => i32::MAX / 2,
            DerivedNode::Face(_) => 1,
        };
    }
    for &(a, b) in &derived.g0_edges {
        let (a, b) = (id(a), id(b));
        cap[idx_out(a)][idx_in(b)] += 1;
        cap[idx_out(b)][idx_in(a)] += 1;
    }
    let source = idx_in(id(DerivedNode::External(0)));
    let sink = idx_out(id(DerivedNode::External(1)));
    // Edmonds-Karp
    let mut flow = 0usize;
    loop {
        let mut prev = vec![usize::MAX; size];
        prev[source] = source;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(cur) = queue.pop_front() {
            for next in 0..size {
                if prev[next] == usize::MAX && cap[cur][next] > 0 {
                    prev[next] = cur;
                    queue.push_back(next);
                }
            }
        }
        if prev[sink] == usize::MAX {
            break;
        }
        let mut cur = sink;
        while cur != source {
            let p = prev[cur];
            cap[p][cur] -= 1;
            cap[cur][p] += 1;
            cur = p;
        }
        flow += 1;
    }
    flow
}

/// One row of the scaling table.
#[derive(Clone, Debug, Serialize)]
pub struct ScaleRow {
    pub r: usize,
    pub l: usize,
    pub modes: usize,
    /// None when the search was exhausted or the instance skipped.
    pub d: Option<usize>,
    pub l_even: Option<i64>,
    pub min_odd_weight: Option<usize>,
    pub disjoint_paths: Option<usize>,
    /// Instance exceeded the mode cap; only `modes` is meaningful.
    pub skipped: bool,
}

/// Evaluates `d`, `l_even`, the minimum odd-logical weight, and the
/// disjoint-path lower bound over a grid of cylinder sizes. Instances above
/// `mode_cap` are emitted as skipped rows rather than computed.
pub fn scaling_experiment(
    r_list: &[usize],
    l_list: &[usize],
    max_weight: usize,
    mode_cap: usize,
) -> Result<Vec<ScaleRow>, ColorError> {
    let mut rows = Vec::new();
    for &r in r_list {
        for &l in l_list {
            let g = build_cylinder(r, l)?;
            let modes = g.vertex_count();
            if modes > mode_cap {
                rows.push(ScaleRow {
                    r,
                    l,
                    modes,
                    d: None,
                    l_even: None,
                    min_odd_weight: None,
                    disjoint_paths: None,
                    skipped: true,
                });
                continue;
            }
            let code = face_code(&g)?;
            let partition = partition_faces(&g)?;
            let d = code
                .distance(max_weight.min(modes))
                .expect("cylinder codes encode one qubit")
                .weight();
            let l_even = match code.l_even().expect("layout present") {
                crate::majorana::LEven::Exact { diameter, .. } => Some(diameter),
                _ => None,
            };
            let min_odd = code
                .min_odd_logical_weight(max_weight.min(modes))
                .expect("logicals exist")
                .weight();
            let paths = disjoint_path_count(&g, &partition);
            rows.push(ScaleRow {
                r,
                l,
                modes,
                d,
                l_even,
                min_odd_weight: min_odd,
                disjoint_paths: Some(paths),
                skipped: false,
            });
        }
    }
    Ok(rows)
}
