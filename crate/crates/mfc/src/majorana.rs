//! Majorana fermion codes as GF(2) support matrices.
//!
//! A code on `m` modes is a set of generator supports, each of even size and
//! with even pairwise overlaps (the support-level form of commutativity for
//! even operators: `c_A c_B = (-1)^{|A||B| + |A∩B|} c_B c_A`). Phases are
//! never tracked. The centralizer is the GF(2) kernel of the generator
//! matrix, logical operators are kernel elements outside the generator
//! rowspace, and all parameters (`k`, `k_odd`, distance `d`, even-logical
//! diameter `l_even`) reduce to linear algebra plus bounded weight searches.
//!
//! Codes with an odd number of modes are allowed and encode a half-integer
//! number of qubits; `k` is therefore reported as an exact rational, never a
//! float.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::geometry::{self, EvenDiameter, Layout};
use crate::gf2::{
    coset_min_weight, BitMatrix, BitVector, Echelon, ParityFilter, Search, WeightMode,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MajoranaError {
    #[error("code has no logical operators")]
    NoLogicals,
    #[error("code has no layout")]
    NoLayout,
    #[error("logical mode count {logical_modes} is odd: half-qubit codes have no full logical basis")]
    OddLogicalModeCount { logical_modes: usize },
    #[error("mode {mode} out of range (modes = {modes})")]
    ModeOutOfRange { mode: usize, modes: usize },
    #[error("layout covers {got} modes but the code has {expected}")]
    LayoutSize { expected: usize, got: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MfcError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing 'modes' declaration")]
    MissingModes,
    #[error("line {line}: mode {mode} out of range (modes = {modes})")]
    ModeOutOfRange { line: usize, mode: usize, modes: usize },
    #[error("positions were given for only some modes; declare 'pos' for all modes or none")]
    PartialPositions,
}

/// A product of Majorana mode operators, identified by its support.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MajoranaOperator {
    support: BitVector,
}

impl MajoranaOperator {
    pub fn new(support: BitVector) -> Self {
        Self { support }
    }

    pub fn from_indices(modes: usize, indices: &[usize]) -> Self {
        Self { support: BitVector::from_indices(modes, indices) }
    }

    pub fn modes(&self) -> usize {
        self.support.len()
    }

    pub fn weight(&self) -> usize {
        self.support.weight()
    }

    /// Odd operators create or destroy single fermions and are blocked by
    /// parity superselection.
    pub fn is_odd(&self) -> bool {
        self.support.parity()
    }

    pub fn support(&self) -> Vec<usize> {
        self.support.support()
    }

    pub fn bits(&self) -> &BitVector {
        &self.support
    }

    /// Commutation rule on supports: `c_A` and `c_B` anti-commute iff
    /// `|A||B| + |A∩B|` is odd.
    pub fn anticommutes_with(&self, other: &Self) -> bool {
        (self.weight() * other.weight() + self.support.overlap(&other.support)) % 2 == 1
    }

    /// Phase-free product: symmetric difference of supports.
    pub fn product(&self, other: &Self) -> Self {
        Self { support: self.support.xor(&other.support) }
    }
}

impl fmt::Debug for MajoranaOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c{:?}", self.support())
    }
}

/// An exact multiple of one half, used for logical qubit counts.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct HalfInteger {
    twice: usize,
}

impl HalfInteger {
    pub fn from_twice(twice: usize) -> Self {
        Self { twice }
    }

    pub fn twice(&self) -> usize {
        self.twice
    }

    pub fn is_integer(&self) -> bool {
        self.twice.is_multiple_of(2)
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice.is_multiple_of(2) {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// Reported violations of the two code conditions. Violations are data, not
/// errors: analysis tooling prints all of them at once.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Violation {
    OddWeightGenerator { row: usize, weight: usize },
    OddOverlap { row_a: usize, row_b: usize, overlap: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OddWeightGenerator { row, weight } => {
                write!(f, "generator {row} has odd weight {weight}")
            }
            Violation::OddOverlap { row_a, row_b, overlap } => {
                write!(f, "generators {row_a} and {row_b} overlap in {overlap} modes (anti-commute)")
            }
        }
    }
}

/// A Majorana fermion code: a generator support matrix over `m` modes plus
/// an optional geometric layout.
#[derive(Clone, PartialEq)]
pub struct MajoranaCode {
    modes: usize,
    generators: BitMatrix,
    layout: Option<Layout>,
}

impl MajoranaCode {
    pub fn new(
        modes: usize,
        generators: BitMatrix,
        layout: Option<Layout>,
    ) -> Result<Self, MajoranaError> {
        if generators.n_cols() != modes {
            return Err(MajoranaError::ModeOutOfRange { mode: generators.n_cols(), modes });
        }
        if let Some(l) = &layout {
            if l.len() != modes {
                return Err(MajoranaError::LayoutSize { expected: modes, got: l.len() });
            }
        }
        Ok(Self { modes, generators, layout })
    }

    pub fn from_supports(
        modes: usize,
        supports: &[Vec<usize>],
        layout: Option<Layout>,
    ) -> Result<Self, MajoranaError> {
        for s in supports {
            for &i in s {
                if i >= modes {
                    return Err(MajoranaError::ModeOutOfRange { mode: i, modes });
                }
            }
        }
        Self::new(modes, BitMatrix::from_supports(modes, supports), layout)
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn generators(&self) -> &BitMatrix {
        &self.generators
    }

    pub fn layout(&self) -> Option<&Layout> {
        self.layout.as_ref()
    }

    pub fn set_layout(&mut self, layout: Option<Layout>) {
        self.layout = layout;
    }

    /// Checks both code conditions and reports every violation: odd-weight
    /// generator rows and generator pairs with odd overlap.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (i, g) in self.generators.rows().iter().enumerate() {
            let w = g.weight();
            if w % 2 == 1 {
                out.push(Violation::OddWeightGenerator { row: i, weight: w });
            }
        }
        for i in 0..self.generators.n_rows() {
            for j in i + 1..self.generators.n_rows() {
                let ov = self.generators.row(i).overlap(self.generators.row(j));
                if ov % 2 == 1 {
                    out.push(Violation::OddOverlap { row_a: i, row_b: j, overlap: ov });
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub fn rank(&self) -> usize {
        self.generators.rank()
    }

    /// Unencoded Majorana degrees of freedom: `m - 2·rank`.
    pub fn logical_modes(&self) -> usize {
        self.modes
            .checked_sub(2 * self.rank())
            .expect("valid codes satisfy 2·rank <= modes")
    }

    /// `(logical_modes, k)` with `k = logical_modes / 2` as an exact rational.
    pub fn count_logicals(&self) -> (usize, HalfInteger) {
        let lm = self.logical_modes();
        (lm, HalfInteger::from_twice(lm))
    }

    /// Basis of all supports commuting with every generator; its dimension is
    /// `m - rank`.
    pub fn centralizer_basis(&self) -> BitMatrix {
        self.generators.kernel_basis()
    }

    /// 1 iff the code has at least one odd logical operator, which happens
    /// exactly when the all-modes product is not (a phase times) a
    /// stabilizer. Odd mode counts always yield 1.
    pub fn k_odd(&self) -> u8 {
        let all_ones = BitVector::from_indices(self.modes, &(0..self.modes).collect::<Vec<_>>());
        if self.generators.in_span(&all_ones) {
            0
        } else {
            1
        }
    }

    /// Minimum weight over logical operators, searching `1..=max_weight`.
    pub fn distance(&self, max_weight: usize) -> Result<Search, MajoranaError> {
        Ok(self.distance_search(max_weight)?.outcome)
    }

    /// Like [`Self::distance`] but also returns every minimum-weight logical
    /// support found (capped), sorted lexicographically.
    pub fn distance_search(&self, max_weight: usize) -> Result<crate::gf2::SearchResult, MajoranaError> {
        if self.logical_modes() == 0 {
            return Err(MajoranaError::NoLogicals);
        }
        let kernel = self.centralizer_basis();
        Ok(coset_min_weight(
            &kernel,
            &self.generators,
            max_weight,
            ParityFilter::None,
            WeightMode::Hamming,
        )
        .expect("generators lie in their own kernel"))
    }

    /// Minimum weight over odd logical operators only.
    pub fn min_odd_logical_weight(&self, max_weight: usize) -> Result<Search, MajoranaError> {
        if self.logical_modes() == 0 {
            return Err(MajoranaError::NoLogicals);
        }
        let kernel = self.centralizer_basis();
        Ok(coset_min_weight(
            &kernel,
            &self.generators,
            max_weight,
            ParityFilter::Odd,
            WeightMode::Hamming,
        )
        .expect("generators lie in their own kernel")
        .outcome)
    }

    /// Minimum diameter of a region supporting an even logical operator.
    pub fn l_even(&self) -> Result<LEven, MajoranaError> {
        if self.layout.is_none() {
            return Err(MajoranaError::NoLayout);
        }
        if self.logical_modes() == 0 {
            return Err(MajoranaError::NoLogicals);
        }
        let r = geometry::min_even_logical_diameter(self).map_err(|e| match e {
            geometry::GeometryError::NoLayout => MajoranaError::NoLayout,
            geometry::GeometryError::NoLogicals => MajoranaError::NoLogicals,
            other => panic!("unexpected geometry error: {other}"),
        })?;
        Ok(match r {
            EvenDiameter::Exact { diameter, witness } => {
                LEven::Exact { diameter, witness: witness.support() }
            }
            EvenDiameter::UpperBound { diameter, witness } => {
                LEven::UpperBound { diameter, witness: witness.support() }
            }
            EvenDiameter::NoEvenLogical => LEven::NoEvenLogical,
        })
    }

    /// A symplectic basis of logical operator classes: `k` pairs
    /// `(X̄_i, Z̄_i)` where `X̄_i` anti-commutes with `Z̄_i` and commutes with
    /// every other basis operator.
    ///
    /// When the code has odd logical operators, the first pair is pinned to
    /// `Z̄_1 =` the class of the all-modes parity operator with an odd `X̄_1`;
    /// every remaining basis operator is then even. Representatives are the
    /// canonical coset representatives modulo the stabilizer rowspace.
    pub fn canonical_logical_basis(
        &self,
    ) -> Result<Vec<(MajoranaOperator, MajoranaOperator)>, MajoranaError> {
        let lm = self.logical_modes();
        if lm == 0 {
            return Err(MajoranaError::NoLogicals);
        }
        if lm % 2 == 1 {
            return Err(MajoranaError::OddLogicalModeCount { logical_modes: lm });
        }
        let k = lm / 2;
        let span_ech = Echelon::from(&self.generators);
        let omega = |a: &BitVector, b: &BitVector| -> bool {
            (a.weight() * b.weight() + a.overlap(b)) % 2 == 1
        };

        // quotient representatives: kernel basis reduced mod the stabilizer
        // rowspace, re-echelonized
        let mut avail: Vec<BitVector> = self
            .centralizer_basis()
            .rows()
            .iter()
            .map(|r| span_ech.canonical_coset_rep(r))
            .filter(|r| !r.is_zero())
            .collect();
        avail = echelonize(avail, self.modes);
        debug_assert_eq!(avail.len(), lm);

        let mut pairs: Vec<(BitVector, BitVector)> = Vec::with_capacity(k);
        if self.k_odd() == 1 {
            let all_ones =
                BitVector::from_indices(self.modes, &(0..self.modes).collect::<Vec<_>>());
            let z = span_ech.canonical_coset_rep(&all_ones);
            let x = avail
                .iter()
                .find(|w| omega(w, &z))
                .expect("an odd logical class pairs with the total parity class")
                .clone();
            sweep(&mut avail, &x, &z, &omega);
            avail = echelonize(
                avail.into_iter().map(|w| span_ech.canonical_coset_rep(&w)).collect(),
                self.modes,
            );
            pairs.push((x, z));
        }
        while pairs.len() < k {
            let x = avail[0].clone();
            let z = avail[1..]
                .iter()
                .find(|w| omega(&x, w))
                .expect("the commutation form is non-degenerate on logical classes")
                .clone();
            sweep(&mut avail, &x, &z, &omega);
            avail = echelonize(
                avail.into_iter().map(|w| span_ech.canonical_coset_rep(&w)).collect(),
                self.modes,
            );
            pairs.push((x, z));
        }
        debug_assert!(avail.is_empty());
        Ok(pairs
            .into_iter()
            .map(|(x, z)| (MajoranaOperator::new(x), MajoranaOperator::new(z)))
            .collect())
    }

    /// True iff some minimum-weight logical operator has a support that
    /// cannot be split into two parts separated by more than the maximum
    /// generator diameter.
    pub fn min_logical_connected(&self) -> Result<bool, MajoranaError> {
        let layout = self.layout.as_ref().ok_or(MajoranaError::NoLayout)?;
        let r = geometry::generator_diameter(self).map_err(|_| MajoranaError::NoLayout)?;
        let result = self.distance_search(self.modes)?;
        Ok(result
            .witnesses
            .iter()
            .any(|w| support_connected(layout, &w.support(), r)))
    }

    /// Computes the full analysis report. `max_weight` bounds the distance
    /// search; pass `modes` for an unbounded (full) search.
    pub fn analyze(&self, max_weight: usize) -> AnalysisReport {
        let (logical_modes, k) = self.count_logicals();
        let (distance, witnesses) = if logical_modes == 0 {
            (DistanceReport::NoLogicals("no-logicals"), Vec::new())
        } else {
            let result = self.distance_search(max_weight).expect("logicals exist");
            let witnesses = result.witnesses.iter().map(|w| w.support()).collect();
            match result.outcome {
                Search::Found { weight, .. } => (DistanceReport::Exact(weight), witnesses),
                Search::Exhausted { max_weight } => {
                    (DistanceReport::Exhausted { exhausted: max_weight }, Vec::new())
                }
            }
        };
        let l_even = if logical_modes == 0 {
            LEvenReport::Status("no-logicals")
        } else {
            match self.l_even() {
                Ok(LEven::Exact { diameter, .. }) => LEvenReport::Exact(diameter),
                Ok(LEven::UpperBound { diameter, .. }) => {
                    LEvenReport::UpperBound { upper_bound: diameter }
                }
                Ok(LEven::NoEvenLogical) => LEvenReport::Status("no-even-logical"),
                Err(MajoranaError::NoLayout) => LEvenReport::Status("no-layout"),
                Err(e) => panic!("unexpected analysis error: {e}"),
            }
        };
        AnalysisReport {
            distance,
            k: k.to_string(),
            k_odd: self.k_odd(),
            l_even,
            logical_modes,
            modes: self.modes,
            rank: self.rank(),
            witnesses,
        }
    }

    // ------------------------------------------------------------------
    // .mfc text format
    // ------------------------------------------------------------------

    /// Parses the `.mfc` format: `#` comments; `modes <m>`; one
    /// `gen <i1> <i2> …` line per generator (strictly increasing 0-indexed
    /// modes); optional `pos <mode> <x> <y>` lines (all modes or none);
    /// optional `periodic <x|y> <extent>` lines for wrapped axes.
    pub fn parse_mfc(text: &str) -> Result<Self, MfcError> {
        let mut modes: Option<usize> = None;
        let mut gens: Vec<Vec<usize>> = Vec::new();
        let mut pos: Vec<Option<(i64, i64)>> = Vec::new();
        let mut periodic: [Option<i64>; 2] = [None, None];
        let mut any_pos = false;

        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut toks = line.split_whitespace();
            let head = toks.next().unwrap();
            let syntax = |msg: &str| MfcError::Syntax { line: lineno, msg: msg.to_string() };
            match head {
                "modes" => {
                    if modes.is_some() {
                        return Err(syntax("duplicate 'modes' declaration"));
                    }
                    let m: usize = toks
                        .next()
                        .ok_or_else(|| syntax("expected mode count"))?
                        .parse()
                        .map_err(|_| syntax("mode count must be a non-negative integer"))?;
                    modes = Some(m);
                    pos = vec![None; m];
                }
                "gen" => {
                    let m = modes.ok_or(MfcError::MissingModes)?;
                    let mut support = Vec::new();
                    for t in toks {
                        let i: usize = t
                            .parse()
                            .map_err(|_| syntax("generator indices must be integers"))?;
                        if i >= m {
                            return Err(MfcError::ModeOutOfRange { line: lineno, mode: i, modes: m });
                        }
                        if let Some(&last) = support.last() {
                            if i <= last {
                                return Err(syntax("generator indices must be strictly increasing"));
                            }
                        }
                        support.push(i);
                    }
                    gens.push(support);
                }
                "pos" => {
                    let m = modes.ok_or(MfcError::MissingModes)?;
                    let vals: Vec<&str> = toks.collect();
                    if vals.len() != 3 {
                        return Err(syntax("pos expects: pos <mode> <x> <y>"));
                    }
                    let mode: usize =
                        vals[0].parse().map_err(|_| syntax("pos mode must be an integer"))?;
                    if mode >= m {
                        return Err(MfcError::ModeOutOfRange { line: lineno, mode, modes: m });
                    }
                    let x: i64 =
                        vals[1].parse().map_err(|_| syntax("pos x must be an integer"))?;
                    let y: i64 =
                        vals[2].parse().map_err(|_| syntax("pos y must be an integer"))?;
                    if pos[mode].is_some() {
                        return Err(syntax("duplicate pos for mode"));
                    }
                    pos[mode] = Some((x, y));
                    any_pos = true;
                }
                "periodic" => {
                    let axis = toks.next().ok_or_else(|| syntax("periodic expects an axis"))?;
                    let extent: i64 = toks
                        .next()
                        .ok_or_else(|| syntax("periodic expects an extent"))?
                        .parse()
                        .map_err(|_| syntax("periodic extent must be an integer"))?;
                    match axis {
                        "x" => periodic[0] = Some(extent),
                        "y" => periodic[1] = Some(extent),
                        _ => return Err(syntax("periodic axis must be x or y")),
                    }
                }
                other => {
                    return Err(syntax(&format!("unknown directive '{other}'")));
                }
            }
        }
        let modes = modes.ok_or(MfcError::MissingModes)?;
        let layout = if any_pos {
            let mut positions = Vec::with_capacity(modes);
            for p in &pos {
                positions.push(p.ok_or(MfcError::PartialPositions)?);
            }
            Some(Layout::new(positions, periodic))
        } else {
            None
        };
        Ok(Self {
            modes,
            generators: BitMatrix::from_supports(modes, &gens),
            layout,
        })
    }

    pub fn to_mfc(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("modes {}\n", self.modes));
        for g in self.generators.rows() {
            s.push_str("gen");
            for i in g.support() {
                s.push_str(&format!(" {i}"));
            }
            s.push('\n');
        }
        if let Some(layout) = &self.layout {
            let periodic = layout.periodic();
            if let Some(e) = periodic[0] {
                s.push_str(&format!("periodic x {e}\n"));
            }
            if let Some(e) = periodic[1] {
                s.push_str(&format!("periodic y {e}\n"));
            }
            for (m, (x, y)) in layout.positions().iter().enumerate() {
                s.push_str(&format!("pos {m} {x} {y}\n"));
            }
        }
        s
    }
}

impl fmt::Debug for MajoranaCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MajoranaCode(m={}, gens={})", self.modes, self.generators.n_rows())
    }
}

fn echelonize(rows: Vec<BitVector>, cols: usize) -> Vec<BitVector> {
    BitMatrix::from_rows(cols, rows)
        .expect("equal lengths")
        .rref()
        .0
        .rows()
        .to_vec()
}

fn sweep(
    avail: &mut [BitVector],
    x: &BitVector,
    z: &BitVector,
    omega: &dyn Fn(&BitVector, &BitVector) -> bool,
) {
    for w in avail.iter_mut() {
        let cz = omega(w, z);
        let cx = omega(w, x);
        if cz {
            w.xor_assign(x);
        }
        if cx {
            w.xor_assign(z);
        }
    }
}

/// True iff the support cannot be split into two non-empty parts separated by
/// more than `r`: equivalently, the graph joining modes at distance `<= r` is
/// connected on the support.
fn support_connected(layout: &Layout, support: &[usize], r: i64) -> bool {
    if support.len() <= 1 {
        return true;
    }
    let n = support.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if !seen[j] && layout.distance(support[i], support[j]) <= r {
                seen[j] = true;
                count += 1;
                stack.push(j);
            }
        }
    }
    count == n
}

/// Result of the even-logical diameter computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LEven {
    Exact { diameter: i64, witness: Vec<usize> },
    UpperBound { diameter: i64, witness: Vec<usize> },
    NoEvenLogical,
}

/// Distance field of a report: an exact value, or the exhausted search bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum DistanceReport {
    Exact(usize),
    Exhausted { exhausted: usize },
    NoLogicals(&'static str),
}

/// `l_even` field of a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum LEvenReport {
    Exact(i64),
    UpperBound { upper_bound: i64 },
    Status(&'static str),
}

/// Computed invariants of a code, serialized with stable, alphabetically
/// sorted field names.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub distance: DistanceReport,
    /// Logical qubit count as an exact rational string, e.g. `"1"` or `"1/2"`.
    pub k: String,
    pub k_odd: u8,
    pub l_even: LEvenReport,
    pub logical_modes: usize,
    pub modes: usize,
    pub rank: usize,
    /// Supports of all minimum-weight logical operators found (capped).
    pub witnesses: Vec<Vec<usize>>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn distance_value(&self) -> Option<usize> {
        match self.distance {
            DistanceReport::Exact(d) => Some(d),
            _ => None,
        }
    }

    pub fn l_even_value(&self) -> Option<i64> {
        match self.l_even {
            LEvenReport::Exact(d) => Some(d),
            _ => None,
        }
    }
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "modes:         {}", self.modes)?;
        writeln!(f, "rank:          {}", self.rank)?;
        writeln!(f, "logical_modes: {}", self.logical_modes)?;
        writeln!(f, "k:             {}", self.k)?;
        writeln!(f, "k_odd:         {}", self.k_odd)?;
        match &self.distance {
            DistanceReport::Exact(d) => writeln!(f, "distance:      {d}")?,
            DistanceReport::Exhausted { exhausted } => {
                writeln!(f, "distance:      exhausted (searched up to weight {exhausted})")?
            }
            DistanceReport::NoLogicals(_) => writeln!(f, "distance:      n/a (no logicals)")?,
        }
        match &self.l_even {
            LEvenReport::Exact(d) => writeln!(f, "l_even:        {d}")?,
            LEvenReport::UpperBound { upper_bound } => {
                writeln!(f, "l_even:        <= {upper_bound} (upper bound only)")?
            }
            LEvenReport::Status(s) => writeln!(f, "l_even:        {s}")?,
        }
        write!(f, "witnesses:     ")?;
        if self.witnesses.is_empty() {
            write!(f, "[]")?;
        } else {
            write!(f, "{:?}", self.witnesses)?;
        }
        Ok(())
    }
}
