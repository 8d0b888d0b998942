use num_bigint::BigInt;

use super::BigRat;

/// Truncated power series: `coeffs[k]` is the coefficient of `t^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigRat>,
}

impl Series {
    pub fn new(coeffs: Vec<BigRat>) -> Self {
        Series { coeffs }
    }

    /// Number of computed terms.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn get(&self, k: usize) -> Option<&BigRat> {
        self.coeffs.get(k)
    }

    /// The coefficients as integers, if they all are.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}
