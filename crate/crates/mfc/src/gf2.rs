//! Bit-packed linear algebra over GF(2).
//!
//! [`BitVector`] and [`BitMatrix`] back every group-theoretic computation in
//! the crate: rank, kernel bases, span membership, orthogonal complements,
//! coordinate projections, and a bounded minimum-weight coset search used by
//! all distance computations.
//!
//! All operations are pure functions on immutable inputs and deterministic:
//! the same input always produces the same basis vectors and the same search
//! witnesses, independent of platform.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Gf2Error {
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("span rowspace is not contained in the kernel rowspace")]
    SpanNotContained,
    #[error("coordinate {coord} out of range for length {len}")]
    CoordOutOfRange { coord: usize, len: usize },
}

// ============================================================================
// BitVector
// ============================================================================

/// A fixed-length vector over GF(2), packed 64 bits per word.
///
/// Bit `i` lives in `words[i / 64]` at position `i % 64`. The length is
/// immutable after creation; trailing bits of the last word are kept zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    words: Vec<u64>,
    len: usize,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    /// Builds a vector of length `len` with the given positions set.
    ///
    /// Panics if an index is out of range.
    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in indices {
            assert!(i < len, "index {i} out of range for length {len}");
            v.set(i, true);
        }
        v
    }

    /// Parses a string of `0`/`1` characters, most significant position first
    /// (index 0 is the leftmost character).
    pub fn from_01(s: &str) -> Option<Self> {
        let mut v = Self::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                _ => return None,
            }
        }
        Some(v)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        if value {
            self.words[i / 64] |= 1u64 << (i % 64);
        } else {
            self.words[i / 64] &= !(1u64 << (i % 64));
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    /// Number of set positions.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// True iff the weight is odd.
    pub fn parity(&self) -> bool {
        self.words.iter().fold(0u64, |a, w| a ^ w).count_ones() % 2 == 1
    }

    /// Standard dot product over GF(2).
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "dot: length mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u64, |a, (x, y)| a ^ (x & y))
            .count_ones()
            % 2
            == 1
    }

    /// Size of the support intersection with `other`.
    pub fn overlap(&self, other: &Self) -> usize {
        assert_eq!(self.len, other.len, "overlap: length mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(x, y)| (x & y).count_ones() as usize)
            .sum()
    }

    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "xor: length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.xor_assign(other);
        r
    }

    /// Index of the lowest set bit, if any.
    pub fn first_one(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Indices of set bits in ascending order.
    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (wi, &word) in self.words.iter().enumerate() {
            let mut w = word;
            while w != 0 {
                out.push(wi * 64 + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        out
    }

    /// Restriction to the given coordinates (which must be strictly
    /// increasing); bit `j` of the result is `self[coords[j]]`.
    pub fn restrict(&self, coords: &[usize]) -> Self {
        let mut v = Self::zeros(coords.len());
        for (j, &c) in coords.iter().enumerate() {
            if self.get(c) {
                v.set(j, true);
            }
        }
        v
    }

    /// Embeds a short vector back into length `len` at the given coordinates.
    pub fn embed(&self, len: usize, coords: &[usize]) -> Self {
        assert_eq!(self.len, coords.len());
        let mut v = Self::zeros(len);
        for (j, &c) in coords.iter().enumerate() {
            if self.get(j) {
                v.set(c, true);
            }
        }
        v
    }

    /// Compares supports as ascending index sequences: at the first position
    /// where the two vectors differ, the one with the bit set is smaller.
    pub fn cmp_support(&self, other: &Self) -> Ordering {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter().zip(&other.words) {
            let diff = a ^ b;
            if diff != 0 {
                let i = diff.trailing_zeros();
                return if (a >> i) & 1 == 1 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        Ordering::Equal
    }

    /// Reads 64 bits starting at an arbitrary bit offset (zero-padded).
    fn word_from(&self, off: usize) -> u64 {
        let w = off / 64;
        let r = off % 64;
        let lo = self.words.get(w).copied().unwrap_or(0);
        if r == 0 {
            lo
        } else {
            (lo >> r) | (self.words.get(w + 1).copied().unwrap_or(0) << (64 - r))
        }
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({}; {:?})", self.len, self.support())
    }
}

/// Weight of a symplectic `(x|z)` vector counted per qubit: qubit `i` is in
/// the support iff bit `i` or bit `qubits + i` is set.
pub(crate) fn qubit_support_weight(v: &BitVector, qubits: usize) -> usize {
    debug_assert_eq!(v.len() % 2, 0);
    debug_assert_eq!(v.len(), 2 * qubits);
    let mut w = 0usize;
    let mut i = 0;
    while i < qubits {
        let take = (qubits - i).min(64);
        let mask = if take == 64 { u64::MAX } else { (1u64 << take) - 1 };
        let x = v.word_from(i) & mask;
        let z = v.word_from(qubits + i) & mask;
        w += (x | z).count_ones() as usize;
        i += take;
    }
    w
}

// ============================================================================
// BitMatrix
// ============================================================================

/// A list of equal-length rows over GF(2). Rank never exceeds
/// `min(rows, cols)`.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: Vec<BitVector>,
    cols: usize,
}

impl BitMatrix {
    /// An empty matrix (zero rows) over `cols` coordinates.
    pub fn new(cols: usize) -> Self {
        Self { rows: Vec::new(), cols }
    }

    pub fn from_rows(cols: usize, rows: Vec<BitVector>) -> Result<Self, Gf2Error> {
        for r in &rows {
            if r.len() != cols {
                return Err(Gf2Error::LengthMismatch { expected: cols, got: r.len() });
            }
        }
        Ok(Self { rows, cols })
    }

    /// Builds a matrix from rows given as support index lists.
    pub fn from_supports(cols: usize, supports: &[Vec<usize>]) -> Self {
        Self {
            rows: supports.iter().map(|s| BitVector::from_indices(cols, s)).collect(),
            cols,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: (0..n).map(|i| BitVector::from_indices(n, &[i])).collect(),
            cols: n,
        }
    }

    pub fn push_row(&mut self, row: BitVector) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        self.rows.push(row);
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::new(self.rows.len());
        for c in 0..self.cols {
            let mut row = BitVector::zeros(self.rows.len());
            for (r, v) in self.rows.iter().enumerate() {
                if v.get(c) {
                    row.set(r, true);
                }
            }
            t.push_row(row);
        }
        t
    }

    /// GF(2) row rank. The input is not modified.
    pub fn rank(&self) -> usize {
        self.rref().0.n_rows()
    }

    /// Reduced row echelon form with zero rows dropped; returns the echelon
    /// matrix and its pivot columns (ascending).
    pub fn rref(&self) -> (BitMatrix, Vec<usize>) {
        let mut rows: Vec<BitVector> = self.rows.clone();
        let mut pivots: Vec<usize> = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            // find a row at or below r with a 1 in column c
            let Some(sel) = (r..rows.len()).find(|&i| rows[i].get(c)) else {
                continue;
            };
            rows.swap(r, sel);
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row.get(c) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        (BitMatrix { rows, cols: self.cols }, pivots)
    }

    /// Basis of `{v : M v = 0}`, i.e. vectors orthogonal to every row.
    /// The result has `cols - rank` rows, one per free column, in ascending
    /// free-column order.
    pub fn kernel_basis(&self) -> BitMatrix {
        let (ech, pivots) = self.rref();
        let pivot_set: Vec<bool> = {
            let mut s = vec![false; self.cols];
            for &p in &pivots {
                s[p] = true;
            }
            s
        };
        let mut basis = BitMatrix::new(self.cols);
        for (f, &is_pivot) in pivot_set.iter().enumerate() {
            if is_pivot {
                continue;
            }
            let mut v = BitVector::zeros(self.cols);
            v.set(f, true);
            for (ri, &p) in pivots.iter().enumerate() {
                if ech.rows[ri].get(f) {
                    v.set(p, true);
                }
            }
            basis.push_row(v);
        }
        basis
    }

    /// Basis of the orthogonal complement of the rowspace under the standard
    /// dot product. Coincides with [`Self::kernel_basis`]; complementing twice
    /// recovers the original rowspace.
    pub fn orthogonal_complement(&self) -> BitMatrix {
        self.kernel_basis()
    }

    /// True iff `v` is a GF(2) linear combination of the rows.
    pub fn in_span(&self, v: &BitVector) -> bool {
        Echelon::from(self).contains(v)
    }

    /// Basis of the projection of the rowspace onto `coords` (strictly
    /// increasing coordinate indices); result vectors have length
    /// `coords.len()`.
    pub fn project(&self, coords: &[usize]) -> Result<BitMatrix, Gf2Error> {
        for &c in coords {
            if c >= self.cols {
                return Err(Gf2Error::CoordOutOfRange { coord: c, len: self.cols });
            }
        }
        let restricted = BitMatrix {
            rows: self.rows.iter().map(|r| r.restrict(coords)).collect(),
            cols: coords.len(),
        };
        Ok(restricted.rref().0)
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.rows.len(), self.cols)?;
        for r in &self.rows {
            writeln!(f, "  {r}")?;
        }
        write!(f, "]")
    }
}

/// Row echelon form kept around for repeated span-membership tests.
pub struct Echelon {
    rows: Vec<BitVector>,
    pivots: Vec<usize>,
    cols: usize,
}

impl Echelon {
    pub fn from(m: &BitMatrix) -> Self {
        let (ech, pivots) = m.rref();
        Self { cols: ech.cols, rows: ech.rows, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` in place against the echelon rows; the result is zero iff
    /// `v` was in the rowspace.
    pub fn reduce(&self, v: &mut BitVector) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        assert_eq!(v.len(), self.cols);
        let mut r = v.clone();
        self.reduce(&mut r);
        r.is_zero()
    }

    /// The unique coset representative with zeros at every pivot column.
    pub fn canonical_coset_rep(&self, v: &BitVector) -> BitVector {
        let mut r = v.clone();
        self.reduce(&mut r);
        r
    }
}

// ============================================================================
// Minimum-weight coset search
// ============================================================================

/// Restricts search candidates by support-size parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParityFilter {
    None,
    Even,
    Odd,
}

impl ParityFilter {
    fn admits(self, weight: usize) -> bool {
        match self {
            ParityFilter::None => true,
            ParityFilter::Even => weight.is_multiple_of(2),
            ParityFilter::Odd => weight % 2 == 1,
        }
    }
}

/// How candidate weight is measured during the search.
#[derive(Clone, Copy, Debug)]
pub enum WeightMode {
    /// Plain Hamming weight of the GF(2) vector.
    Hamming,
    /// Per-qubit support size of a symplectic `(x|z)` vector.
    QubitSupport { qubits: usize },
}

impl WeightMode {
    fn eval(self, v: &BitVector) -> usize {
        match self {
            WeightMode::Hamming => v.weight(),
            WeightMode::QubitSupport { qubits } => qubit_support_weight(v, qubits),
        }
    }

    /// Once a candidate of weight `best` is known, enumeration may stop after
    /// finishing this combination-weight level: every strictly lighter
    /// candidate (and, for Hamming, every tie) has already been visited.
    fn settled_level(self, best: usize) -> usize {
        match self {
            WeightMode::Hamming => best,
            WeightMode::QubitSupport { .. } => 2 * best.saturating_sub(1),
        }
    }

    fn level_cap(self, max_weight: usize) -> usize {
        match self {
            WeightMode::Hamming => max_weight,
            WeightMode::QubitSupport { .. } => 2 * max_weight,
        }
    }
}

/// Outcome of a bounded minimum-weight search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Search {
    /// A minimum-weight element was found within the bound; the reported
    /// weight is globally minimal and the witness is the
    /// support-lexicographically smallest minimizer (Hamming searches).
    Found { weight: usize, witness: BitVector },
    /// No element of weight `<= max_weight` exists outside the span.
    Exhausted { max_weight: usize },
}

impl Search {
    pub fn weight(&self) -> Option<usize> {
        match self {
            Search::Found { weight, .. } => Some(*weight),
            Search::Exhausted { .. } => None,
        }
    }
}

/// Full result of [`coset_min_weight`], including every minimum-weight
/// witness found (Hamming searches collect all of them, capped).
pub struct SearchResult {
    pub outcome: Search,
    /// All minimum-weight vectors outside the span, sorted by support
    /// lexicographic order; capped at [`WITNESS_CAP`] entries.
    pub witnesses: Vec<BitVector>,
}

/// Cap on how many tied minimum-weight witnesses are retained.
pub const WITNESS_CAP: usize = 64;

/// Finds a minimum-weight vector of `rowspace(kernel) \ rowspace(span)`,
/// searching weights `1..=max_weight` and returning `Exhausted` when nothing
/// lighter exists in that range.
///
/// Requires `rowspace(span) ⊆ rowspace(kernel)`. The witness tie-break is the
/// support-lexicographically smallest minimizer, so results are independent
/// of any internal evaluation order.
pub fn min_weight_not_in_span(
    kernel: &BitMatrix,
    span: &BitMatrix,
    max_weight: usize,
    filter: ParityFilter,
) -> Result<Search, Gf2Error> {
    Ok(coset_min_weight(kernel, span, max_weight, filter, WeightMode::Hamming)?.outcome)
}

/// Weight-ordered coset search over an information set of the kernel basis.
///
/// The kernel is brought to reduced row echelon form; every coset element is
/// the XOR of a subset of echelon rows, and its restriction to the pivot
/// columns is exactly the subset indicator. A vector of weight `w` therefore
/// uses at most `w` echelon rows (at most `2w` in qubit-support mode), so
/// enumerating row subsets in increasing size order and stopping once the
/// settled level is finished yields a globally minimal result.
pub fn coset_min_weight(
    kernel: &BitMatrix,
    span: &BitMatrix,
    max_weight: usize,
    filter: ParityFilter,
    mode: WeightMode,
) -> Result<SearchResult, Gf2Error> {
    if span.n_cols() != kernel.n_cols() {
        return Err(Gf2Error::LengthMismatch {
            expected: kernel.n_cols(),
            got: span.n_cols(),
        });
    }
    let (basis, pivots) = kernel.rref();
    let kernel_ech = Echelon {
        cols: basis.cols,
        rows: basis.rows.clone(),
        pivots,
    };
    for r in span.rows() {
        if !kernel_ech.contains(r) {
            return Err(Gf2Error::SpanNotContained);
        }
    }
    let span_ech = Echelon::from(span);
    let dim = basis.n_rows();
    let exhausted = Search::Exhausted { max_weight };
    if dim == 0 {
        return Ok(SearchResult { outcome: exhausted, witnesses: vec![] });
    }

    let collect_ties = matches!(mode, WeightMode::Hamming);
    let mut state = SearchState {
        rows: basis.rows(),
        span: &span_ech,
        filter,
        mode,
        max_weight,
        collect_ties,
        best: None,
        witnesses: Vec::new(),
    };

    let cap = mode.level_cap(max_weight).min(dim);
    let mut acc = BitVector::zeros(kernel.n_cols());
    for level in 1..=cap {
        state.enumerate(0, level, &mut acc);
        if let Some(best) = state.best {
            if mode.settled_level(best) <= level {
                break;
            }
        }
    }

    state.witnesses.sort_by(|a, b| a.cmp_support(b));
    state.witnesses.dedup();
    let outcome = match state.best {
        Some(weight) => Search::Found { weight, witness: state.witnesses[0].clone() },
        None => exhausted,
    };
    Ok(SearchResult { outcome, witnesses: state.witnesses })
}

struct SearchState<'a> {
    rows: &'a [BitVector],
    span: &'a Echelon,
    filter: ParityFilter,
    mode: WeightMode,
    max_weight: usize,
    collect_ties: bool,
    best: Option<usize>,
    witnesses: Vec<BitVector>,
}

impl SearchState<'_> {
    fn enumerate(&mut self, start: usize, remaining: usize, acc: &mut BitVector) {
        for i in start..=self.rows.len() - remaining {
            acc.xor_assign(&self.rows[i]);
            if remaining == 1 {
                self.visit(acc);
            } else {
                self.enumerate(i + 1, remaining - 1, acc);
            }
            acc.xor_assign(&self.rows[i]);
        }
    }

    fn visit(&mut self, c: &BitVector) {
        let w = self.mode.eval(c);
        if w > self.max_weight || !self.filter.admits(c.weight()) {
            return;
        }
        match self.best {
            Some(b) if w > b => {}
            Some(b) if w == b => {
                if self.collect_ties
                    && self.witnesses.len() < WITNESS_CAP
                    && !self.span.contains(c)
                {
                    self.witnesses.push(c.clone());
                }
            }
            _ => {
                if !self.span.contains(c) {
                    self.best = Some(w);
                    self.witnesses.clear();
                    self.witnesses.push(c.clone());
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(s: &str) -> BitVector {
        BitVector::from_01(s).unwrap()
    }

    fn mat(rows: &[&str]) -> BitMatrix {
        let cols = rows[0].len();
        BitMatrix::from_rows(cols, rows.iter().map(|r| bv(r)).collect()).unwrap()
    }

    /// Enumerates the whole rowspace of `m` (feasible for rank <= 20).
    fn rowspace(m: &BitMatrix) -> Vec<BitVector> {
        let (ech, _) = m.rref();
        let k = ech.n_rows();
        (0..1u64 << k)
            .map(|mask| {
                let mut v = BitVector::zeros(m.n_cols());
                for (i, row) in ech.rows().iter().enumerate() {
                    if (mask >> i) & 1 == 1 {
                        v.xor_assign(row);
                    }
                }
                v
            })
            .collect()
    }

    #[test]
    fn rank_identity_and_degenerate() {
        assert_eq!(BitMatrix::identity(3).rank(), 3);
        assert_eq!(BitMatrix::from_supports(4, &[vec![], vec![]]).rank(), 0);
        assert_eq!(mat(&["1111", "0000"]).rank(), 1);
    }

    #[test]
    fn kernel_of_single_parity_check() {
        let m = mat(&["1111"]);
        let k = m.kernel_basis();
        assert_eq!(k.n_rows(), 3);
        for v in k.rows() {
            assert!(!m.row(0).dot(v));
        }
        // every 3-dim kernel vector is reachable
        assert!(k.in_span(&bv("1100")));
        assert!(k.in_span(&bv("1010")));
        assert!(k.in_span(&bv("1001")));
        assert!(!k.in_span(&bv("1000")));
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert_eq!(BitMatrix::identity(4).kernel_basis().n_rows(), 0);
    }

    #[test]
    fn kernel_of_paired_chain_generators() {
        // 10 modes, generators supported on {1,2},{3,4},{5,6},{7,8}
        let m = BitMatrix::from_supports(
            10,
            &[vec![1, 2], vec![3, 4], vec![5, 6], vec![7, 8]],
        );
        let k = m.kernel_basis();
        assert_eq!(k.n_rows(), 6);
        // verified by direct matrix-vector products
        for v in k.rows() {
            for row in m.rows() {
                assert!(!row.dot(v));
            }
        }
        assert!(k.in_span(&bv("1000000000")));
        assert!(k.in_span(&bv("0000000001")));
    }

    #[test]
    fn rank_plus_kernel_dim_is_cols() {
        let cases = [
            mat(&["1111"]),
            mat(&["1100", "0110", "0011"]),
            BitMatrix::identity(5),
            BitMatrix::new(7),
        ];
        for m in cases {
            assert_eq!(m.rank() + m.kernel_basis().n_rows(), m.n_cols());
        }
    }

    #[test]
    fn in_span_basics() {
        let m = mat(&["1100", "0011"]);
        assert!(m.in_span(&bv("0000")));
        assert!(m.in_span(&bv("1111")));
        assert!(!m.in_span(&bv("1000")));
        for r in m.rows() {
            assert!(m.in_span(r));
        }
    }

    #[test]
    fn complement_is_involutive_on_rowspaces() {
        let m = mat(&["1111", "1100"]);
        let cc = m.orthogonal_complement().orthogonal_complement();
        for r in m.rows() {
            assert!(cc.in_span(r));
        }
        for r in cc.rows() {
            assert!(m.in_span(r));
        }
        // complement of an empty matrix is the full space
        let e = BitMatrix::new(3).orthogonal_complement();
        assert_eq!(e.n_rows(), 3);
    }

    #[test]
    fn complement_matches_kernel_for_parity_check() {
        let m = mat(&["1111"]);
        let a = m.orthogonal_complement();
        let b = m.kernel_basis();
        for r in a.rows() {
            assert!(b.in_span(r));
        }
        assert_eq!(a.n_rows(), b.n_rows());
    }

    #[test]
    fn project_matches_rowspace_enumeration() {
        // projection of span{1100, 0110} onto coords {1,2} is the full space
        let m = mat(&["1100", "0110"]);
        let p = m.project(&[1, 2]).unwrap();
        assert_eq!(p.n_rows(), 2);
        // oracle: enumerate all 4 rowspace elements and restrict
        let mut seen: Vec<BitVector> = rowspace(&m).iter().map(|v| v.restrict(&[1, 2])).collect();
        seen.sort_by(|a, b| a.cmp_support(b));
        seen.dedup();
        assert_eq!(seen.len(), 4);
        for v in seen {
            assert!(v.is_zero() || p.in_span(&v));
        }
    }

    #[test]
    fn project_corner_cases() {
        let m = mat(&["1111"]);
        assert_eq!(m.project(&[]).unwrap().n_rows(), 0);
        let p = m.project(&[0, 1]).unwrap();
        assert_eq!(p.n_rows(), 1);
        assert!(p.in_span(&bv("11")));
        assert!(matches!(
            m.project(&[9]),
            Err(Gf2Error::CoordOutOfRange { .. })
        ));
    }

    #[test]
    fn project_agrees_with_enumeration_randomized() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let cols = rng.gen_range(1..=10);
            let n_rows = rng.gen_range(0..=4);
            let mut m = BitMatrix::new(cols);
            for _ in 0..n_rows {
                let mut v = BitVector::zeros(cols);
                for i in 0..cols {
                    if rng.gen() {
                        v.set(i, true);
                    }
                }
                m.push_row(v);
            }
            let coords: Vec<usize> = (0..cols).filter(|_| rng.gen()).collect();
            let p = m.project(&coords).unwrap();
            for v in rowspace(&m) {
                let r = v.restrict(&coords);
                assert!(r.is_zero() || p.in_span(&r));
            }
        }
    }

    #[test]
    fn in_span_closed_under_row_sums_randomized() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        let m = mat(&["110010", "011001", "000111"]);
        for _ in 0..100 {
            let mut v = BitVector::zeros(6);
            for r in m.rows() {
                if rng.gen() {
                    v.xor_assign(r);
                }
            }
            assert!(m.in_span(&v));
        }
    }

    /// Brute-force oracle: scan all 2^m vectors for the minimum weight in
    /// kernel-rowspace minus span-rowspace under the parity filter.
    fn brute_min_weight(
        kernel: &BitMatrix,
        span: &BitMatrix,
        filter: ParityFilter,
    ) -> Option<(usize, Vec<usize>)> {
        let m = kernel.n_cols();
        assert!(m <= 20);
        let kech = Echelon::from(kernel);
        let sech = Echelon::from(span);
        let mut best: Option<(usize, BitVector)> = None;
        for mask in 1u64..(1 << m) {
            let mut v = BitVector::zeros(m);
            for i in 0..m {
                if (mask >> i) & 1 == 1 {
                    v.set(i, true);
                }
            }
            let w = v.weight();
            if !filter.admits(w) || !kech.contains(&v) || sech.contains(&v) {
                continue;
            }
            match &best {
                Some((bw, bv)) => {
                    if w < *bw || (w == *bw && v.cmp_support(bv) == Ordering::Less) {
                        best = Some((w, v));
                    }
                }
                None => best = Some((w, v)),
            }
        }
        best.map(|(w, v)| (w, v.support()))
    }

    #[test]
    fn min_weight_chain_examples() {
        // 10-mode paired chain: kernel of the generators, span = generators
        let gens = BitMatrix::from_supports(
            10,
            &[vec![1, 2], vec![3, 4], vec![5, 6], vec![7, 8]],
        );
        let kernel = gens.kernel_basis();
        let got = min_weight_not_in_span(&kernel, &gens, 10, ParityFilter::None).unwrap();
        match got {
            Search::Found { weight, witness } => {
                assert_eq!(weight, 1);
                assert_eq!(witness.support(), vec![0]); // lex tie-break picks mode 0 over mode 9
            }
            _ => panic!("expected a weight-1 element"),
        }
        // even filter forces both chain ends
        let got = min_weight_not_in_span(&kernel, &gens, 10, ParityFilter::Even).unwrap();
        match got {
            Search::Found { weight, witness } => {
                assert_eq!(weight, 2);
                assert_eq!(witness.support(), vec![0, 9]);
            }
            _ => panic!("expected a weight-2 even element"),
        }
    }

    #[test]
    fn min_weight_four_mode_example() {
        let gens = BitMatrix::from_supports(4, &[vec![0, 1, 2, 3]]);
        let kernel = gens.kernel_basis();
        let got = min_weight_not_in_span(&kernel, &gens, 4, ParityFilter::None).unwrap();
        assert_eq!(got.weight(), Some(2));
    }

    #[test]
    fn min_weight_exhausted_when_coset_empty() {
        let m = mat(&["1100", "0011"]);
        let got = min_weight_not_in_span(&m, &m, 4, ParityFilter::None).unwrap();
        assert_eq!(got, Search::Exhausted { max_weight: 4 });
    }

    #[test]
    fn min_weight_respects_bound() {
        // kernel contains only the all-ones beyond the span; weight 4 > bound 2
        let kernel = mat(&["1111", "1100", "0011"]);
        let span = mat(&["1100", "0011"]);
        let got = min_weight_not_in_span(&kernel, &span, 1, ParityFilter::None).unwrap();
        assert_eq!(got, Search::Exhausted { max_weight: 1 });
    }

    #[test]
    fn min_weight_rejects_span_outside_kernel() {
        let kernel = mat(&["1100"]);
        let span = mat(&["0011"]);
        assert_eq!(
            min_weight_not_in_span(&kernel, &span, 4, ParityFilter::None),
            Err(Gf2Error::SpanNotContained)
        );
    }

    #[test]
    fn min_weight_matches_exhaustive_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(42);
        for trial in 0..60 {
            let m = rng.gen_range(2..=12);
            let mut span = BitMatrix::new(m);
            for _ in 0..rng.gen_range(0..3) {
                let mut v = BitVector::zeros(m);
                for i in 0..m {
                    if rng.gen() {
                        v.set(i, true);
                    }
                }
                span.push_row(v);
            }
            // kernel = span rowspace plus extra random vectors
            let mut kernel = span.clone();
            for _ in 0..rng.gen_range(1..4) {
                let mut v = BitVector::zeros(m);
                for i in 0..m {
                    if rng.gen() {
                        v.set(i, true);
                    }
                }
                kernel.push_row(v);
            }
            for filter in [ParityFilter::None, ParityFilter::Even, ParityFilter::Odd] {
                let expected = brute_min_weight(&kernel, &span, filter);
                let got = min_weight_not_in_span(&kernel, &span, m, filter).unwrap();
                match (expected, got) {
                    (Some((w, sup)), Search::Found { weight, witness }) => {
                        assert_eq!(weight, w, "trial {trial}");
                        assert_eq!(witness.support(), sup, "trial {trial}: lex witness");
                    }
                    (None, Search::Exhausted { .. }) => {}
                    (e, g) => panic!("trial {trial}: oracle {e:?} vs search {g:?}"),
                }
            }
        }
    }

    #[test]
    fn min_weight_sixteen_coordinate_case() {
        // one 16-coordinate case against the exhaustive oracle
        let span = BitMatrix::from_supports(16, &[vec![0, 1, 2, 3], vec![4, 5, 6, 7]]);
        let mut kernel = span.clone();
        kernel.push_row(BitVector::from_indices(16, &[2, 3, 8, 12]));
        kernel.push_row(BitVector::from_indices(16, &[9, 10, 11, 12, 13]));
        let expected = brute_min_weight(&kernel, &span, ParityFilter::None).unwrap();
        match min_weight_not_in_span(&kernel, &span, 16, ParityFilter::None).unwrap() {
            Search::Found { weight, witness } => {
                assert_eq!(weight, expected.0);
                assert_eq!(witness.support(), expected.1);
            }
            _ => panic!("expected found"),
        }
    }

    #[test]
    fn qubit_support_weight_counts_or_of_halves() {
        // (x|z) on 3 qubits: x = 101, z = 001 -> qubits {0, 2} occupied
        let v = bv("101001");
        assert_eq!(qubit_support_weight(&v, 3), 2);
        let v = bv("000000");
        assert_eq!(qubit_support_weight(&v, 3), 0);
        // crossing a word boundary
        let mut v = BitVector::zeros(2 * 70);
        v.set(0, true);
        v.set(70 + 69, true);
        assert_eq!(qubit_support_weight(&v, 70), 2);
        v.set(70, true); // z-bit of qubit 0, already occupied
        assert_eq!(qubit_support_weight(&v, 70), 2);
    }

    #[test]
    fn canonical_coset_rep_is_lex_minimal() {
        let span = mat(&["1111"]);
        let ech = Echelon::from(&span);
        let rep = ech.canonical_coset_rep(&bv("1100"));
        assert_eq!(rep.support(), vec![2, 3]);
        // 0011 < 1100 in support order (first differing index favors the set bit)
        assert_eq!(bv("0011").cmp_support(&bv("1100")), Ordering::Greater);
        assert_eq!(bv("1100").cmp_support(&bv("0011")), Ordering::Less);
    }
}
