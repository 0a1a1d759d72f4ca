//! JSON-facing report shape shared by all subcommands. Field order is
//! fixed by declaration order so serialized output is stable for golden
//! tests.

use frobenius3::Invariants3;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub input: Vec<i64>,
    pub f: i64,
    pub g: i64,
    pub j: Option<i64>,
    pub symmetric: bool,
    pub matrix: Option<[[i64; 3]; 3]>,
    /// Numerator polynomial as sorted (exponent, coefficient) pairs.
    pub q: Vec<(i64, i64)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verdicts: Option<Vec<Verdict>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub check: String,
    pub pass: bool,
}

impl Report {
    pub fn from_invariants(input: &[i64], inv: &Invariants3) -> Self {
        Report {
            input: input.to_vec(),
            f: inv.f,
            g: inv.g,
            j: inv.j,
            symmetric: inv.symmetric,
            matrix: inv.matrix.as_ref().map(|m| m.rows()),
            q: inv.q.terms().collect(),
            verdicts: None,
        }
    }

    /// Two-generator report: the numerator is the single binomial and
    /// the semigroup is always symmetric.
    pub fn from_pair(input: &[i64], f: i64, g: i64) -> Self {
        let product = input[0] * input[1];
        Report {
            input: input.to_vec(),
            f,
            g,
            j: None,
            symmetric: true,
            matrix: None,
            q: vec![(0, 1), (product, -1)],
            verdicts: None,
        }
    }
}
