//! Generator rows, circulant weight matrices, bipolar states and local fields.
//!
//! A circulant matrix is fully determined by its first row `c`: entry `(i, j)`
//! is `c[(j - i) mod n]`, so each row is the right cyclic shift of the one
//! above. Only the row is stored; the full `n x n` view is derived on demand.
//!
//! All arithmetic is exact integer arithmetic. Weight magnitudes are bounded
//! by [`MAX_WEIGHT_MAGNITUDE`] so that a local field (a sum of `n` products of
//! a weight and a spin) can never overflow an `i64`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest absolute weight accepted in a generator row (2^20).
pub const MAX_WEIGHT_MAGNITUDE: i64 = 1 << 20;

/// Largest network size a [`BipolarState`] can pack into its 64-bit index.
pub const MAX_STATE_NEURONS: usize = 64;

/// First row of a circulant weight matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct GeneratorRow {
    weights: Vec<i64>,
}

impl GeneratorRow {
    pub fn new(weights: Vec<i64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::EmptyRow);
        }
        if weights[0] != 0 {
            return Err(Error::NonZeroDiagonal(weights[0]));
        }
        if let Some((position, &value)) = weights
            .iter()
            .enumerate()
            .find(|(_, w)| w.abs() > MAX_WEIGHT_MAGNITUDE)
        {
            return Err(Error::WeightOutOfRange {
                position,
                value,
                bound: MAX_WEIGHT_MAGNITUDE,
            });
        }
        Ok(Self { weights })
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// Sum of the generator row, which is also the sum of every matrix row.
    pub fn row_sum(&self) -> i64 {
        self.weights.iter().sum()
    }
}

impl TryFrom<Vec<i64>> for GeneratorRow {
    type Error = Error;

    fn try_from(weights: Vec<i64>) -> Result<Self> {
        Self::new(weights)
    }
}

impl From<GeneratorRow> for Vec<i64> {
    fn from(row: GeneratorRow) -> Self {
        row.weights
    }
}

impl fmt::Display for GeneratorRow {
    /// Comma-separated weights, e.g. `0,2,-5,3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, w) in self.weights.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

/// Sum of the generator row.
pub fn row_sum(row: &GeneratorRow) -> i64 {
    row.row_sum()
}

/// Immutable `n x n` circulant weight matrix backed by its generator row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculantWeightMatrix {
    row: GeneratorRow,
}

pub fn build_circulant(row: GeneratorRow) -> CirculantWeightMatrix {
    CirculantWeightMatrix { row }
}

impl CirculantWeightMatrix {
    pub fn new(row: GeneratorRow) -> Self {
        build_circulant(row)
    }

    /// Convenience constructor from raw weights.
    pub fn from_weights(weights: Vec<i64>) -> Result<Self> {
        GeneratorRow::new(weights).map(Self::new)
    }

    pub fn n(&self) -> usize {
        self.row.n()
    }

    pub fn row(&self) -> &GeneratorRow {
        &self.row
    }

    pub fn row_sum(&self) -> i64 {
        self.row.row_sum()
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        let n = self.n();
        self.row.weights[(j + n - i) % n]
    }

    /// Dense row-major view.
    pub fn entries(&self) -> Vec<Vec<i64>> {
        let n = self.n();
        (0..n)
            .map(|i| (0..n).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    /// Exact product `W * s`.
    pub fn local_field(&self, state: &BipolarState) -> Result<LocalFieldVector> {
        self.check_size(state.n())?;
        let mut out = vec![0; self.n()];
        self.field_of_packed(state.index(), &mut out);
        Ok(LocalFieldVector(out))
    }

    /// Writes `W * s` for the packed state `bits` into `out` (length `n`).
    pub(crate) fn field_of_packed(&self, bits: u64, out: &mut [i64]) {
        let n = self.n();
        let c = &self.row.weights;
        let spin = |j: usize| -> i64 {
            if bits >> (n - 1 - j) & 1 == 0 {
                1
            } else {
                -1
            }
        };
        for (i, slot) in out.iter_mut().enumerate() {
            let mut acc = 0i64;
            for j in 0..n {
                acc += c[(j + n - i) % n] * spin(j);
            }
            *slot = acc;
        }
    }

    pub(crate) fn check_size(&self, actual: usize) -> Result<()> {
        if actual != self.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                actual,
            });
        }
        Ok(())
    }
}

/// A single neuron output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Spin {
    Plus,
    Minus,
}

impl Spin {
    pub fn value(self) -> i64 {
        match self {
            Spin::Plus => 1,
            Spin::Minus => -1,
        }
    }

    pub fn flipped(self) -> Spin {
        match self {
            Spin::Plus => Spin::Minus,
            Spin::Minus => Spin::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Spin::Plus => '+',
            Spin::Minus => '-',
        }
    }
}

/// A state in `{+1, -1}^n`, packed into a `u64`.
///
/// Position 0 is the most significant of the `n` bits; a set bit means `-1`.
/// Numeric order of the index is therefore lexicographic order of the
/// pattern string with `+` before `-`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BipolarState {
    n: u8,
    bits: u64,
}

impl BipolarState {
    pub fn from_index(n: usize, index: u64) -> Result<Self> {
        check_state_size(n)?;
        Ok(Self {
            n: n as u8,
            bits: index & mask(n),
        })
    }

    pub fn from_spins(spins: &[Spin]) -> Result<Self> {
        let n = spins.len();
        check_state_size(n)?;
        let bits = spins
            .iter()
            .fold(0u64, |acc, s| acc << 1 | u64::from(*s == Spin::Minus));
        Ok(Self { n: n as u8, bits })
    }

    pub fn all_plus(n: usize) -> Result<Self> {
        Self::from_index(n, 0)
    }

    pub fn all_minus(n: usize) -> Result<Self> {
        Self::from_index(n, u64::MAX)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn index(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn spin(&self, position: usize) -> Spin {
        debug_assert!(position < self.n());
        if self.bits >> (self.n() - 1 - position) & 1 == 0 {
            Spin::Plus
        } else {
            Spin::Minus
        }
    }

    pub fn spins(&self) -> Vec<Spin> {
        (0..self.n()).map(|i| self.spin(i)).collect()
    }

    pub fn with_spin(&self, position: usize, spin: Spin) -> Self {
        let bit = 1u64 << (self.n() - 1 - position);
        let bits = match spin {
            Spin::Plus => self.bits & !bit,
            Spin::Minus => self.bits | bit,
        };
        Self { n: self.n, bits }
    }

    /// Pattern in the bracketed, space-separated layout, e.g. `[+ + - -]`.
    pub fn to_row_string(&self) -> String {
        let body: Vec<String> = self.spins().iter().map(|s| s.symbol().to_string()).collect();
        format!("[{}]", body.join(" "))
    }
}

impl fmt::Display for BipolarState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.spins() {
            write!(f, "{}", s.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for BipolarState {
    type Err = Error;

    /// Parses `+`/`-` characters; whitespace and brackets are ignored.
    fn from_str(s: &str) -> Result<Self> {
        let mut spins = Vec::new();
        for ch in s.chars() {
            match ch {
                '+' => spins.push(Spin::Plus),
                '-' | '\u{2212}' => spins.push(Spin::Minus),
                '[' | ']' | ',' => {}
                c if c.is_whitespace() => {}
                _ => return Err(Error::InvalidStateString(s.to_string())),
            }
        }
        Self::from_spins(&spins)
    }
}

pub(crate) fn mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_state_size(n: usize) -> Result<()> {
    if n == 0 || n > MAX_STATE_NEURONS {
        return Err(Error::StateSize {
            n,
            max: MAX_STATE_NEURONS,
        });
    }
    Ok(())
}

/// `W * s`, one exact integer per neuron.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalFieldVector(pub Vec<i64>);

impl LocalFieldVector {
    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

/// Exact product `W * s`.
pub fn local_field(w: &CirculantWeightMatrix, s: &BipolarState) -> Result<LocalFieldVector> {
    w.local_field(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(s: &str) -> BipolarState {
        s.parse().unwrap()
    }

    #[test]
    fn builds_class1_4x4() {
        let w = CirculantWeightMatrix::from_weights(vec![0, 2, -5, 3]).unwrap();
        assert_eq!(
            w.entries(),
            vec![
                vec![0, 2, -5, 3],
                vec![3, 0, 2, -5],
                vec![-5, 3, 0, 2],
                vec![2, -5, 3, 0],
            ]
        );
    }

    #[test]
    fn builds_single_neuron() {
        let w = CirculantWeightMatrix::from_weights(vec![0]).unwrap();
        assert_eq!(w.entries(), vec![vec![0]]);
    }

    #[test]
    fn builds_5x5_third_row() {
        let w = CirculantWeightMatrix::from_weights(vec![0, -2, 3, 3, -2]).unwrap();
        assert_eq!(w.entries()[2], vec![3, -2, 0, -2, 3]);
    }

    #[test]
    fn rejects_bad_rows() {
        assert_eq!(GeneratorRow::new(vec![]), Err(Error::EmptyRow));
        assert_eq!(GeneratorRow::new(vec![1, 2, 3]), Err(Error::NonZeroDiagonal(1)));
        assert!(matches!(
            GeneratorRow::new(vec![0, MAX_WEIGHT_MAGNITUDE + 1]),
            Err(Error::WeightOutOfRange { position: 1, .. })
        ));
        assert!(GeneratorRow::new(vec![0, -MAX_WEIGHT_MAGNITUDE]).is_ok());
    }

    #[test]
    fn row_sums() {
        assert_eq!(row_sum(&GeneratorRow::new(vec![0, 2, -5, 3]).unwrap()), 0);
        assert_eq!(row_sum(&GeneratorRow::new(vec![0, 2, -5, 4]).unwrap()), 1);
        assert_eq!(row_sum(&GeneratorRow::new(vec![0, -2, 3, 3, -2]).unwrap()), 2);
    }

    #[test]
    fn local_field_examples() {
        let w = CirculantWeightMatrix::from_weights(vec![0, 2, -5, 3]).unwrap();
        assert_eq!(w.local_field(&st("++--")).unwrap().0, vec![4, 6, -4, -6]);
        assert_eq!(w.local_field(&st("++++")).unwrap().0, vec![0, 0, 0, 0]);

        let w2 = CirculantWeightMatrix::from_weights(vec![0, 2, -5, 4]).unwrap();
        assert_eq!(w2.local_field(&st("----")).unwrap().0, vec![-1, -1, -1, -1]);
    }

    #[test]
    fn local_field_size_mismatch() {
        let w = CirculantWeightMatrix::from_weights(vec![0, 2, -5, 3]).unwrap();
        assert_eq!(
            w.local_field(&st("+++")),
            Err(Error::SizeMismatch {
                expected: 4,
                actual: 3
            })
        );
    }

    #[test]
    fn packing_puts_position_zero_in_msb() {
        let s = st("-++-");
        assert_eq!(s.index(), 0b1001);
        assert_eq!(s.to_string(), "-++-");
        assert_eq!(s.to_row_string(), "[- + + -]");
        assert_eq!(BipolarState::all_minus(4).unwrap().index(), 0b1111);
        assert!(st("++--") < st("+-++"));
    }

    #[test]
    fn state_string_errors() {
        assert!("+x-".parse::<BipolarState>().is_err());
        assert!("".parse::<BipolarState>().is_err());
        assert_eq!(st("[+ + - -]"), st("++--"));
    }

    #[test]
    fn row_display_roundtrip() {
        let row = GeneratorRow::new(vec![0, -2, 3, 3, -2]).unwrap();
        assert_eq!(row.to_string(), "0,-2,3,3,-2");
    }
}
