//! Qubit stabilizer codes in the binary symplectic representation.
//!
//! A Pauli operator on `n` qubits is a pair of GF(2) vectors `(x|z)`: qubit
//! `i` carries `X` iff `x_i = 1, z_i = 0`, `Z` iff `x_i = 0, z_i = 1`, and
//! `Y` iff both. Phases are never tracked; every group computation here is
//! modulo `{±1, ±i}`, which is all that support-level code parameters need.

use std::fmt;

use thiserror::Error;

use crate::gf2::{
    coset_min_weight, BitMatrix, BitVector, ParityFilter, Search, WeightMode,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PauliError {
    #[error("line {line}: illegal character '{ch}' (expected I, X, Y or Z)")]
    IllegalCharacter { line: usize, ch: char },
    #[error("line {line}: length {got} does not match first line's length {expected}")]
    LengthMismatch { line: usize, expected: usize, got: usize },
    #[error("no generator lines found")]
    Empty,
    #[error("generators {first} and {second} anti-commute")]
    NonCommutingGenerators { first: usize, second: usize },
    #[error("code has no logical qubits (k = 0)")]
    NoLogicalQubits,
    #[error("operator length {got} does not match qubit count {expected}")]
    OperatorLength { expected: usize, got: usize },
}

/// A phase-free Pauli operator in `(x|z)` form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    x: BitVector,
    z: BitVector,
}

impl PauliOperator {
    pub fn identity(n: usize) -> Self {
        Self { x: BitVector::zeros(n), z: BitVector::zeros(n) }
    }

    pub fn new(x: BitVector, z: BitVector) -> Self {
        assert_eq!(x.len(), z.len(), "x and z halves must have equal length");
        Self { x, z }
    }

    /// Builds an operator from a string over `I X Y Z`.
    pub fn parse(s: &str) -> Result<Self, PauliError> {
        Self::parse_line(s, 0)
    }

    fn parse_line(s: &str, line: usize) -> Result<Self, PauliError> {
        let n = s.chars().count();
        let mut x = BitVector::zeros(n);
        let mut z = BitVector::zeros(n);
        for (i, c) in s.chars().enumerate() {
            match c {
                'I' => {}
                'X' => x.set(i, true),
                'Z' => z.set(i, true),
                'Y' => {
                    x.set(i, true);
                    z.set(i, true);
                }
                _ => return Err(PauliError::IllegalCharacter { line, ch: c }),
            }
        }
        Ok(Self { x, z })
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &BitVector {
        &self.x
    }

    pub fn z(&self) -> &BitVector {
        &self.z
    }

    /// Qubits acted on non-trivially.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.x.get(i) || self.z.get(i)).collect()
    }

    /// Support size (the operator's weight).
    pub fn weight(&self) -> usize {
        self.support().len()
    }

    /// Symplectic form: true iff the operators anti-commute.
    pub fn anticommutes_with(&self, other: &Self) -> bool {
        self.x.dot(&other.z) ^ self.z.dot(&other.x)
    }

    /// Phase-free product (XOR of both halves).
    pub fn product(&self, other: &Self) -> Self {
        Self { x: self.x.xor(&other.x), z: self.z.xor(&other.z) }
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// Concatenated `(x|z)` vector of length `2n`.
    pub fn to_symplectic(&self) -> BitVector {
        let n = self.n();
        let mut v = BitVector::zeros(2 * n);
        for i in 0..n {
            if self.x.get(i) {
                v.set(i, true);
            }
            if self.z.get(i) {
                v.set(n + i, true);
            }
        }
        v
    }

    /// Inverse of [`Self::to_symplectic`].
    pub fn from_symplectic(v: &BitVector) -> Self {
        assert_eq!(v.len() % 2, 0);
        let n = v.len() / 2;
        let mut x = BitVector::zeros(n);
        let mut z = BitVector::zeros(n);
        for i in 0..n {
            if v.get(i) {
                x.set(i, true);
            }
            if v.get(n + i) {
                z.set(i, true);
            }
        }
        Self { x, z }
    }

    pub fn is_pure_x(&self) -> bool {
        self.z.is_zero()
    }

    pub fn is_pure_z(&self) -> bool {
        self.x.is_zero()
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n() {
            let c = match (self.x.get(i), self.z.get(i)) {
                (false, false) => 'I',
                (true, false) => 'X',
                (false, true) => 'Z',
                (true, true) => 'Y',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An `n`-qubit stabilizer code given by a list of commuting generators.
#[derive(Clone, PartialEq, Eq)]
pub struct StabilizerCode {
    n: usize,
    generators: Vec<PauliOperator>,
}

impl StabilizerCode {
    /// Validates pairwise commutation; the generator list may be redundant.
    pub fn new(n: usize, generators: Vec<PauliOperator>) -> Result<Self, PauliError> {
        for g in &generators {
            if g.n() != n {
                return Err(PauliError::OperatorLength { expected: n, got: g.n() });
            }
        }
        for i in 0..generators.len() {
            for j in i + 1..generators.len() {
                if generators[i].anticommutes_with(&generators[j]) {
                    return Err(PauliError::NonCommutingGenerators { first: i, second: j });
                }
            }
        }
        Ok(Self { n, generators })
    }

    /// Parses the `.stab` text format: `#` comment lines, then one Pauli
    /// string per line, qubits 0-indexed left to right.
    pub fn parse_stab(text: &str) -> Result<Self, PauliError> {
        let mut generators = Vec::new();
        let mut n: Option<usize> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let op = PauliOperator::parse_line(line, lineno + 1)?;
            match n {
                None => n = Some(op.n()),
                Some(expected) if op.n() != expected => {
                    return Err(PauliError::LengthMismatch {
                        line: lineno + 1,
                        expected,
                        got: op.n(),
                    })
                }
                _ => {}
            }
            generators.push(op);
        }
        let n = n.ok_or(PauliError::Empty)?;
        Self::new(n, generators)
    }

    /// Serializes back to `.stab`; parsing the output reproduces the
    /// generator list exactly.
    pub fn to_stab(&self) -> String {
        let mut s = String::new();
        for g in &self.generators {
            s.push_str(&g.to_string());
            s.push('\n');
        }
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[PauliOperator] {
        &self.generators
    }

    /// Generator matrix in `(x|z)` form, one row per generator.
    pub fn symplectic_matrix(&self) -> BitMatrix {
        let mut m = BitMatrix::new(2 * self.n);
        for g in &self.generators {
            m.push_row(g.to_symplectic());
        }
        m
    }

    /// Rows `(z|x)`: a vector `v` commutes with every generator iff this
    /// matrix annihilates `v`.
    fn twisted_matrix(&self) -> BitMatrix {
        let mut m = BitMatrix::new(2 * self.n);
        for g in &self.generators {
            let mut row = BitVector::zeros(2 * self.n);
            for i in 0..self.n {
                if g.z.get(i) {
                    row.set(i, true);
                }
                if g.x.get(i) {
                    row.set(self.n + i, true);
                }
            }
            m.push_row(row);
        }
        m
    }

    /// Number of independent generators.
    pub fn rank(&self) -> usize {
        self.symplectic_matrix().rank()
    }

    /// Logical qubit count `k = n - rank`.
    pub fn k(&self) -> usize {
        self.n - self.rank()
    }

    /// Basis of the centralizer (all symplectic vectors commuting with every
    /// generator); its dimension is `n + k`.
    pub fn centralizer_basis(&self) -> BitMatrix {
        self.twisted_matrix().kernel_basis()
    }

    /// Minimum qubit weight over logical operators (centralizer elements
    /// outside the stabilizer group), searching weights `1..=max_weight`.
    pub fn qubit_distance(&self, max_weight: usize) -> Result<Search, PauliError> {
        if self.k() == 0 {
            return Err(PauliError::NoLogicalQubits);
        }
        let kernel = self.centralizer_basis();
        let span = self.symplectic_matrix();
        let result = coset_min_weight(
            &kernel,
            &span,
            max_weight,
            ParityFilter::None,
            WeightMode::QubitSupport { qubits: self.n },
        )
        .expect("stabilizer rows lie in their own centralizer");
        Ok(result.outcome)
    }

    /// True iff the generators split into pure-X and pure-Z sets whose
    /// underlying classical codes have equal row spaces.
    pub fn is_weakly_self_dual_css(&self) -> bool {
        let mut x_rows = BitMatrix::new(self.n);
        let mut z_rows = BitMatrix::new(self.n);
        for g in &self.generators {
            if g.is_identity() {
                continue;
            }
            if g.is_pure_x() {
                x_rows.push_row(g.x.clone());
            } else if g.is_pure_z() {
                z_rows.push_row(g.z.clone());
            } else {
                return false;
            }
        }
        if x_rows.rank() != z_rows.rank() {
            return false;
        }
        x_rows.rows().iter().all(|r| z_rows.in_span(r))
    }
}

impl fmt::Debug for StabilizerCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StabilizerCode(n={}, k={}, gens=[", self.n, self.k())?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(lines: &[&str]) -> StabilizerCode {
        StabilizerCode::parse_stab(&lines.join("\n")).unwrap()
    }

    pub(crate) fn steane() -> StabilizerCode {
        code(&[
            "XIXIXIX", "IXXIIXX", "IIIXXXX", "ZIZIZIZ", "IZZIIZZ", "IIIZZZZ",
        ])
    }

    #[test]
    fn parse_five_qubit_code() {
        let c = code(&["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]);
        assert_eq!(c.n(), 5);
        assert_eq!(c.rank(), 4);
        assert_eq!(c.k(), 1);
    }

    #[test]
    fn parse_single_zz() {
        let c = code(&["ZZ"]);
        assert_eq!(c.n(), 2);
        assert_eq!(c.k(), 1);
    }

    #[test]
    fn xx_zz_commute_and_fill_rank() {
        // overlap 2 makes the symplectic form vanish
        let c = code(&["XX", "ZZ"]);
        assert_eq!(c.k(), 0);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            StabilizerCode::parse_stab("XQ"),
            Err(PauliError::IllegalCharacter { line: 1, ch: 'Q' })
        ));
        assert!(matches!(
            StabilizerCode::parse_stab("XX\nZZZ"),
            Err(PauliError::LengthMismatch { line: 2, expected: 2, got: 3 })
        ));
        assert!(matches!(
            StabilizerCode::parse_stab("# only comments\n"),
            Err(PauliError::Empty)
        ));
        assert!(matches!(
            StabilizerCode::parse_stab("XI\nZI"),
            Err(PauliError::NonCommutingGenerators { first: 0, second: 1 })
        ));
    }

    #[test]
    fn stab_round_trip_is_identity_on_generators() {
        let c = steane();
        let again = StabilizerCode::parse_stab(&c.to_stab()).unwrap();
        assert_eq!(c.generators(), again.generators());
    }

    #[test]
    fn centralizer_dimension_is_n_plus_k() {
        for c in [
            code(&["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]),
            code(&["XXXX", "ZZZZ"]),
            steane(),
            code(&["ZZ"]),
        ] {
            assert_eq!(c.rank() + c.k(), c.n());
            assert_eq!(c.centralizer_basis().n_rows(), c.n() + c.k());
        }
    }

    #[test]
    fn distance_of_four_two_two() {
        let c = code(&["XXXX", "ZZZZ"]);
        assert_eq!(c.k(), 2);
        assert_eq!(c.qubit_distance(4).unwrap().weight(), Some(2));
    }

    #[test]
    fn distance_of_steane_is_three() {
        let c = steane();
        assert_eq!(c.k(), 1);
        assert_eq!(c.qubit_distance(7).unwrap().weight(), Some(3));
    }

    #[test]
    fn distance_requires_logicals() {
        let c = code(&["Z"]);
        assert_eq!(c.qubit_distance(1), Err(PauliError::NoLogicalQubits));
    }

    /// Brute-force oracle over all 4^n Pauli operators.
    fn brute_distance(c: &StabilizerCode) -> Option<usize> {
        let n = c.n();
        assert!(n <= 7);
        let span = c.symplectic_matrix();
        let mut best = None;
        for mask in 1u64..(1 << (2 * n)) {
            let mut v = BitVector::zeros(2 * n);
            for i in 0..2 * n {
                if (mask >> i) & 1 == 1 {
                    v.set(i, true);
                }
            }
            let op = PauliOperator::from_symplectic(&v);
            if c.generators().iter().any(|g| g.anticommutes_with(&op)) {
                continue;
            }
            if span.in_span(&v) {
                continue;
            }
            let w = op.weight();
            if best.is_none_or(|b| w < b) {
                best = Some(w);
            }
        }
        best
    }

    #[test]
    fn distance_matches_brute_force() {
        for c in [
            code(&["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]),
            code(&["XXXX", "ZZZZ"]),
            code(&["ZZ"]),
            code(&["XXI", "IIZ"]),
            steane(),
        ] {
            if c.k() == 0 {
                continue;
            }
            let expected = brute_distance(&c);
            assert_eq!(c.qubit_distance(c.n()).unwrap().weight(), expected);
        }
    }

    #[test]
    fn weak_self_duality() {
        assert!(code(&["XXXX", "ZZZZ"]).is_weakly_self_dual_css());
        assert!(steane().is_weakly_self_dual_css());
        assert!(!code(&["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]).is_weakly_self_dual_css());
        // CSS but not weakly self-dual: X- and Z-code rowspaces differ
        assert!(!code(&["XXI", "IIZ"]).is_weakly_self_dual_css());
    }
}
