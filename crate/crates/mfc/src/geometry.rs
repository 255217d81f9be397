//! Layouts, regions, strip partitions, and region cleanability.
//!
//! Modes occupy integer points of a 2D lattice, optionally periodic per axis.
//! All metric questions use the Chebyshev distance (periodic axes wrap), and
//! the diameter of a non-empty support is the maximum pairwise distance plus
//! one lattice unit, so a single mode has diameter 1 and a pair of adjacent
//! modes has diameter 2.
//!
//! A region `M` is *cleanable* when every logical operator can be moved off
//! `M` by multiplying with a stabilizer. Writing `C(M)` for the stabilizers
//! supported inside `M` and `C^M` for the restrictions to `M` of all
//! stabilizers, cleanability is equivalent to `C(M) = (C^M)^⊥` inside the
//! coordinates of `M`; when the inclusion is strict, any element of
//! `(C^M)^⊥ \ C(M)` is a logical operator supported on `M` and is returned
//! as a witness.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::gf2::{BitMatrix, BitVector, Echelon};
use crate::majorana::MajoranaCode;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error("code has no layout")]
    NoLayout,
    #[error("strip width {width} exceeds the lattice extent {extent} along the axis")]
    WidthExceedsLattice { width: i64, extent: i64 },
    #[error("strip width must be at least 1")]
    ZeroWidth,
    #[error("strips of width {width} are narrower than the generator extent {required} along the axis")]
    StripsTooNarrow { width: i64, required: i64 },
    #[error("code has no logical operators")]
    NoLogicals,
    #[error("internal inconsistency: no strip witness found although one is guaranteed")]
    InconsistencyDetected,
    #[error("mode {mode} out of range (modes: {modes})")]
    ModeOutOfRange { mode: usize, modes: usize },
    #[error("bad region spec: {0}")]
    BadRegionSpec(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Axis {
    X,
    Y,
}

impl Axis {
    pub fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
        }
    }
}

impl std::str::FromStr for Axis {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "x" | "X" | "0" => Ok(Axis::X),
            "y" | "Y" | "1" => Ok(Axis::Y),
            other => Err(format!("unknown axis '{other}' (expected x or y)")),
        }
    }
}

/// Integer 2D positions for every mode, with optional per-axis periodicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    positions: Vec<(i64, i64)>,
    /// Declared extent per axis when that axis wraps.
    periodic: [Option<i64>; 2],
}

impl Layout {
    pub fn new(positions: Vec<(i64, i64)>, periodic: [Option<i64>; 2]) -> Self {
        Self { positions, periodic }
    }

    /// Modes 0..n placed on a line at x = 0..n-1.
    pub fn line(n: usize) -> Self {
        Self {
            positions: (0..n as i64).map(|x| (x, 0)).collect(),
            periodic: [None, None],
        }
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn position(&self, mode: usize) -> (i64, i64) {
        self.positions[mode]
    }

    pub fn positions(&self) -> &[(i64, i64)] {
        &self.positions
    }

    pub fn periodic(&self) -> [Option<i64>; 2] {
        self.periodic
    }

    fn axis_dist(&self, axis: usize, a: i64, b: i64) -> i64 {
        let d = (a - b).abs();
        match self.periodic[axis] {
            Some(extent) if extent > 0 => {
                let d = d.rem_euclid(extent);
                d.min(extent - d)
            }
            _ => d,
        }
    }

    /// Chebyshev distance between two modes, wrapping on periodic axes.
    pub fn distance(&self, u: usize, v: usize) -> i64 {
        let (ux, uy) = self.positions[u];
        let (vx, vy) = self.positions[v];
        self.axis_dist(0, ux, vx).max(self.axis_dist(1, uy, vy))
    }

    /// Distance along a single axis only.
    pub fn axis_distance(&self, axis: Axis, u: usize, v: usize) -> i64 {
        let i = axis.index();
        let pu = if i == 0 { self.positions[u].0 } else { self.positions[u].1 };
        let pv = if i == 0 { self.positions[v].0 } else { self.positions[v].1 };
        self.axis_dist(i, pu, pv)
    }

    /// Diameter of a support set: max pairwise distance plus one unit.
    /// Empty supports have diameter 0, singletons 1.
    pub fn diameter(&self, support: &[usize]) -> i64 {
        if support.is_empty() {
            return 0;
        }
        let mut max = 0;
        for (i, &u) in support.iter().enumerate() {
            for &v in &support[i + 1..] {
                max = max.max(self.distance(u, v));
            }
        }
        max + 1
    }

    /// Diameter of the support projected onto one axis.
    pub fn axis_diameter(&self, axis: Axis, support: &[usize]) -> i64 {
        if support.is_empty() {
            return 0;
        }
        let mut max = 0;
        for (i, &u) in support.iter().enumerate() {
            for &v in &support[i + 1..] {
                max = max.max(self.axis_distance(axis, u, v));
            }
        }
        max + 1
    }

    fn coord(&self, axis: Axis, mode: usize) -> i64 {
        match axis {
            Axis::X => self.positions[mode].0,
            Axis::Y => self.positions[mode].1,
        }
    }

    /// Coordinate extent along an axis: declared extent for periodic axes,
    /// otherwise max - min + 1.
    pub fn extent(&self, axis: Axis) -> i64 {
        if let Some(e) = self.periodic[axis.index()] {
            return e;
        }
        let coords: Vec<i64> = (0..self.len()).map(|m| self.coord(axis, m)).collect();
        match (coords.iter().min(), coords.iter().max()) {
            (Some(lo), Some(hi)) => hi - lo + 1,
            _ => 0,
        }
    }
}

/// A subset of the code's modes, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Region {
    modes: Vec<usize>,
}

impl Region {
    pub fn new(mut modes: Vec<usize>) -> Self {
        modes.sort_unstable();
        modes.dedup();
        Self { modes }
    }

    pub fn modes(&self) -> &[usize] {
        &self.modes
    }

    pub fn len(&self) -> usize {
        self.modes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modes.is_empty()
    }

    /// All modes whose position falls in the inclusive rectangle.
    pub fn from_rect(layout: &Layout, x0: i64, y0: i64, x1: i64, y1: i64) -> Self {
        Self::new(
            (0..layout.len())
                .filter(|&m| {
                    let (x, y) = layout.position(m);
                    x0 <= x && x <= x1 && y0 <= y && y <= y1
                })
                .collect(),
        )
    }

    /// Parses either a comma-separated index list (`0,3,4`) or a rectangle
    /// spec (`rect x0 y0 x1 y1`, which requires a layout).
    pub fn parse(spec: &str, layout: Option<&Layout>, modes: usize) -> Result<Self, GeometryError> {
        let spec = spec.trim();
        if let Some(rest) = spec.strip_prefix("rect") {
            let nums: Result<Vec<i64>, _> =
                rest.split_whitespace().map(|t| t.parse::<i64>()).collect();
            let nums =
                nums.map_err(|e| GeometryError::BadRegionSpec(format!("rect coords: {e}")))?;
            if nums.len() != 4 {
                return Err(GeometryError::BadRegionSpec(
                    "rect expects exactly 4 coordinates".into(),
                ));
            }
            let layout = layout.ok_or(GeometryError::NoLayout)?;
            Ok(Self::from_rect(layout, nums[0], nums[1], nums[2], nums[3]))
        } else {
            let mut out = Vec::new();
            for tok in spec.split(',') {
                let tok = tok.trim();
                if tok.is_empty() {
                    continue;
                }
                let m: usize = tok
                    .parse()
                    .map_err(|e| GeometryError::BadRegionSpec(format!("mode index: {e}")))?;
                if m >= modes {
                    return Err(GeometryError::ModeOutOfRange { mode: m, modes });
                }
                out.push(m);
            }
            Ok(Self::new(out))
        }
    }
}

// ============================================================================
// Cleanability
// ============================================================================

/// Outcome of the cleanability decision for a region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cleanability {
    Cleanable,
    /// The region supports a logical operator; one is returned as witness.
    Uncleanable { witness: BitVector },
}

impl Cleanability {
    pub fn is_cleanable(&self) -> bool {
        matches!(self, Cleanability::Cleanable)
    }
}

/// Parity restriction for logical-in-region searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum RegionParity {
    Any,
    Even,
    Odd,
}

/// Basis (full-length vectors) of the stabilizers whose support lies inside
/// `M`. Computed exactly on the rowspace, not by scanning generators:
/// coefficient vectors `u` with `u · (G restricted to the complement) = 0`
/// enumerate exactly the rowspace elements vanishing outside `M`.
pub fn stabilizers_within(code: &MajoranaCode, region: &Region) -> BitMatrix {
    let m = code.modes();
    let gens = code.generators();
    let complement: Vec<usize> = {
        let inside: BTreeSet<usize> = region.modes().iter().copied().collect();
        (0..m).filter(|i| !inside.contains(i)).collect()
    };
    let restricted = gens
        .rows()
        .iter()
        .map(|r| r.restrict(&complement))
        .collect::<Vec<_>>();
    let rc = BitMatrix::from_rows(complement.len(), restricted).expect("equal lengths");
    let coeffs = rc.transpose().kernel_basis();
    let mut out = BitMatrix::new(m);
    for u in coeffs.rows() {
        let mut v = BitVector::zeros(m);
        for i in u.support() {
            v.xor_assign(gens.row(i));
        }
        out.push_row(v);
    }
    out.rref().0
}

/// Basis of the projection of the stabilizer rowspace onto the region's
/// coordinates (vectors of length `|M|`).
pub fn stabilizers_restricted(code: &MajoranaCode, region: &Region) -> BitMatrix {
    code.generators()
        .project(region.modes())
        .expect("region modes are in range")
}

/// Finds a logical operator supported on `M` with the requested parity, if
/// one exists. The returned vector has full length `m`.
pub(crate) fn logical_within(
    code: &MajoranaCode,
    region: &Region,
    parity: RegionParity,
) -> Option<BitVector> {
    if region.is_empty() {
        return None;
    }
    let coords = region.modes();
    let restricted = stabilizers_restricted(code, region);
    // (C^M)^⊥ inside the region's coordinates
    let w = restricted.kernel_basis();
    let within = stabilizers_within(code, region);
    let within_m: Vec<BitVector> = within.rows().iter().map(|r| r.restrict(coords)).collect();
    let within_ech =
        Echelon::from(&BitMatrix::from_rows(coords.len(), within_m).expect("equal lengths"));

    let candidate_rows: Vec<BitVector> = match parity {
        RegionParity::Any => w.rows().to_vec(),
        RegionParity::Odd => {
            // any odd vector commuting with everything is automatically a
            // logical (stabilizers are even)
            return w
                .rows()
                .iter()
                .find(|r| r.parity())
                .map(|r| r.embed(code.modes(), coords));
        }
        RegionParity::Even => {
            // basis of the even-weight subspace of W
            let mut rows: Vec<BitVector> = w.rows().to_vec();
            if let Some(odd_at) = rows.iter().position(|r| r.parity()) {
                let odd = rows[odd_at].clone();
                for (i, r) in rows.iter_mut().enumerate() {
                    if i != odd_at && r.parity() {
                        r.xor_assign(&odd);
                    }
                }
                rows.remove(odd_at);
            }
            rows
        }
    };

    for row in &candidate_rows {
        let mut residual = row.clone();
        within_ech.reduce(&mut residual);
        if !residual.is_zero() {
            debug_assert!(match parity {
                RegionParity::Even => !residual.parity(),
                _ => true,
            });
            return Some(residual.embed(code.modes(), coords));
        }
    }
    None
}

/// Decides whether the region is cleanable; when it is not, returns a logical
/// operator supported on the region.
pub fn is_cleanable(code: &MajoranaCode, region: &Region) -> Cleanability {
    match logical_within(code, region, RegionParity::Any) {
        None => Cleanability::Cleanable,
        Some(witness) => Cleanability::Uncleanable { witness },
    }
}

// ============================================================================
// Strips
// ============================================================================

/// An ordered partition of the modes into contiguous coordinate bands.
#[derive(Clone, Debug)]
pub struct StripPartition {
    pub axis: Axis,
    pub width: i64,
    strips: Vec<Region>,
    /// Coordinate range `[lo, hi]` of each strip.
    bounds: Vec<(i64, i64)>,
}

impl StripPartition {
    pub fn strips(&self) -> &[Region] {
        &self.strips
    }

    pub fn bounds(&self) -> &[(i64, i64)] {
        &self.bounds
    }
}

/// Cuts the lattice into contiguous bands of the given width along one axis;
/// the last strip absorbs any remainder, so every strip has width at least
/// `width` except that a lattice narrower than `2*width` yields one strip.
pub fn make_strips(layout: &Layout, axis: Axis, width: i64) -> Result<StripPartition, GeometryError> {
    if width < 1 {
        return Err(GeometryError::ZeroWidth);
    }
    let extent = layout.extent(axis);
    if width > extent {
        return Err(GeometryError::WidthExceedsLattice { width, extent });
    }
    let lo = (0..layout.len())
        .map(|m| layout.coord(axis, m))
        .min()
        .unwrap_or(0);
    let count = (extent / width).max(1);
    let mut strips = Vec::with_capacity(count as usize);
    let mut bounds = Vec::with_capacity(count as usize);
    for i in 0..count {
        let start = lo + i * width;
        let end = if i == count - 1 { lo + extent - 1 } else { start + width - 1 };
        let modes: Vec<usize> = (0..layout.len())
            .filter(|&m| {
                let c = layout.coord(axis, m);
                start <= c && c <= end
            })
            .collect();
        strips.push(Region::new(modes));
        bounds.push((start, end));
    }
    Ok(StripPartition { axis, width, strips, bounds })
}

/// A strip index together with the support of a logical found inside it.
pub type StripWitness = (usize, Vec<usize>);

/// Witnesses produced by the strip analysis.
#[derive(Clone, Debug, Serialize)]
pub struct StripVerdict {
    /// Case (i): an even logical operator supported on a single strip.
    pub even_in_strip: Option<StripWitness>,
    /// Case (ii): odd logical operators supported on two distinct strips.
    pub odd_pair: Option<(StripWitness, StripWitness)>,
}

/// Maximum diameter of any generator support under the layout metric.
pub fn generator_diameter(code: &MajoranaCode) -> Result<i64, GeometryError> {
    let layout = code.layout().ok_or(GeometryError::NoLayout)?;
    Ok(code
        .generators()
        .rows()
        .iter()
        .map(|g| layout.diameter(&g.support()))
        .max()
        .unwrap_or(0))
}

/// Generator extent measured along a single axis; this is the quantity strip
/// widths must dominate for the strip analysis to be conclusive.
pub fn generator_axis_extent(code: &MajoranaCode, axis: Axis) -> Result<i64, GeometryError> {
    let layout = code.layout().ok_or(GeometryError::NoLayout)?;
    Ok(code
        .generators()
        .rows()
        .iter()
        .map(|g| layout.axis_diameter(axis, &g.support()))
        .max()
        .unwrap_or(0))
}

/// Scans a strip partition for the guaranteed structure: either an even
/// logical operator inside one strip, or odd logical operators in two
/// distinct strips. Both witnesses are reported when both exist.
///
/// Requires the strip width to be at least the generator extent along the
/// partition axis; when no witness of either kind is found under that
/// precondition, the failure indicates an implementation bug and is reported
/// as [`GeometryError::InconsistencyDetected`].
pub fn strip_lemma_analysis(
    code: &MajoranaCode,
    partition: &StripPartition,
) -> Result<StripVerdict, GeometryError> {
    if code.logical_modes() == 0 {
        return Err(GeometryError::NoLogicals);
    }
    let required = generator_axis_extent(code, partition.axis)?;
    if partition.width < required {
        return Err(GeometryError::StripsTooNarrow { width: partition.width, required });
    }

    let mut even_in_strip = None;
    let mut odd_hits: Vec<(usize, Vec<usize>)> = Vec::new();
    for (i, strip) in partition.strips().iter().enumerate() {
        if even_in_strip.is_none() {
            if let Some(w) = logical_within(code, strip, RegionParity::Even) {
                even_in_strip = Some((i, w.support()));
            }
        }
        if odd_hits.len() < 2 {
            if let Some(w) = logical_within(code, strip, RegionParity::Odd) {
                odd_hits.push((i, w.support()));
            }
        }
    }
    let odd_pair = if odd_hits.len() >= 2 {
        let mut it = odd_hits.into_iter();
        Some((it.next().unwrap(), it.next().unwrap()))
    } else {
        None
    };
    if even_in_strip.is_none() && odd_pair.is_none() {
        return Err(GeometryError::InconsistencyDetected);
    }
    Ok(StripVerdict { even_in_strip, odd_pair })
}

// ============================================================================
// Exact minimum even-logical diameter
// ============================================================================

/// Result of the even-logical diameter search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum EvenDiameter {
    Exact { diameter: i64, witness: BitVector },
    /// Clique enumeration exceeded its budget; the reported value is only an
    /// upper bound obtained from minimum-weight even logicals.
    UpperBound { diameter: i64, witness: BitVector },
    NoEvenLogical,
}

const CLIQUE_BUDGET: usize = 200_000;

/// Exact minimum diameter of a region supporting an even logical operator.
///
/// For each candidate threshold `s` (in ascending order of realized pairwise
/// distances) the modes whose pairwise distances are all `<= s` form cliques
/// of the threshold graph `H_s`; an even logical of diameter `s + 1` exists
/// iff some maximal clique of `H_s` supports one. Scanning `s` upward makes
/// the first hit exact. Handles periodic axes correctly, where supports of
/// bounded diameter need not be contained in any coordinate box.
pub(crate) fn min_even_logical_diameter(code: &MajoranaCode) -> Result<EvenDiameter, GeometryError> {
    let layout = code.layout().ok_or(GeometryError::NoLayout)?;
    let m = code.modes();
    if code.logical_modes() == 0 {
        return Err(GeometryError::NoLogicals);
    }

    // ascending candidate thresholds: 0 plus all realized pairwise distances
    let mut thresholds: BTreeSet<i64> = BTreeSet::new();
    thresholds.insert(0);
    for u in 0..m {
        for v in u + 1..m {
            thresholds.insert(layout.distance(u, v));
        }
    }

    for s in thresholds {
        let adj: Vec<BitVector> = (0..m)
            .map(|u| {
                let mut row = BitVector::zeros(m);
                for v in 0..m {
                    if v != u && layout.distance(u, v) <= s {
                        row.set(v, true);
                    }
                }
                row
            })
            .collect();
        let Some(cliques) = maximal_cliques(&adj, CLIQUE_BUDGET) else {
            return Ok(fallback_upper_bound(code, layout));
        };
        let mut best: Option<(i64, BitVector)> = None;
        for clique in cliques {
            let region = Region::new(clique.support());
            if let Some(w) = logical_within(code, &region, RegionParity::Even) {
                let d = layout.diameter(&w.support());
                debug_assert!(d <= s + 1);
                if best.as_ref().is_none_or(|(bd, _)| d < *bd) {
                    best = Some((d, w));
                }
            }
        }
        if let Some((diameter, witness)) = best {
            return Ok(EvenDiameter::Exact { diameter, witness });
        }
    }
    Ok(EvenDiameter::NoEvenLogical)
}

/// Upper-bound fallback: the smallest diameter among minimum-weight even
/// logical operators.
fn fallback_upper_bound(code: &MajoranaCode, layout: &Layout) -> EvenDiameter {
    use crate::gf2::{coset_min_weight, ParityFilter, WeightMode};
    let kernel = code.generators().kernel_basis();
    let result = coset_min_weight(
        &kernel,
        code.generators(),
        code.modes(),
        ParityFilter::Even,
        WeightMode::Hamming,
    )
    .expect("generators lie in their own kernel");
    let mut best: Option<(i64, BitVector)> = None;
    for w in &result.witnesses {
        let d = layout.diameter(&w.support());
        if best.as_ref().is_none_or(|(bd, _)| d < *bd) {
            best = Some((d, w.clone()));
        }
    }
    match best {
        Some((diameter, witness)) => EvenDiameter::UpperBound { diameter, witness },
        None => EvenDiameter::NoEvenLogical,
    }
}

/// Bron–Kerbosch with pivoting over bitset adjacency. Returns `None` when the
/// clique budget is exceeded.
fn maximal_cliques(adj: &[BitVector], budget: usize) -> Option<Vec<BitVector>> {
    let n = adj.len();
    let mut out = Vec::new();
    let mut r = BitVector::zeros(n);
    let mut p = BitVector::zeros(n);
    for i in 0..n {
        p.set(i, true);
    }
    let x = BitVector::zeros(n);
    let mut nodes = 0usize;
    if bk(adj, &mut r, p, x, &mut out, budget, &mut nodes) {
        Some(out)
    } else {
        None
    }
}

fn bk(
    adj: &[BitVector],
    r: &mut BitVector,
    p: BitVector,
    x: BitVector,
    out: &mut Vec<BitVector>,
    budget: usize,
    nodes: &mut usize,
) -> bool {
    *nodes += 1;
    if *nodes > budget || out.len() > budget {
        return false;
    }
    if p.is_zero() && x.is_zero() {
        out.push(r.clone());
        return true;
    }
    // pivot: vertex of P ∪ X with the most neighbours in P
    let pivot = p
        .support()
        .into_iter()
        .chain(x.support())
        .max_by_key(|&u| adj[u].overlap(&p))
        .expect("P or X non-empty");
    let mut candidates = p.clone();
    for v in adj[pivot].support() {
        if candidates.get(v) {
            candidates.set(v, false);
        }
    }
    let mut p = p;
    let mut x = x;
    for v in candidates.support() {
        r.set(v, true);
        let mut p2 = p.clone();
        let mut x2 = x.clone();
        for u in 0..adj.len() {
            if p2.get(u) && !adj[v].get(u) {
                p2.set(u, false);
            }
            if x2.get(u) && !adj[v].get(u) {
                x2.set(u, false);
            }
        }
        if !bk(adj, r, p2, x2, out, budget, nodes) {
            r.set(v, false);
            return false;
        }
        r.set(v, false);
        p.set(v, false);
        x.set(v, true);
    }
    true
}
