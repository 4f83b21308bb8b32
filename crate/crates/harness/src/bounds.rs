use serde::{Deserialize, Serialize};
use stdbasis::binomial;

/// Bounds on generator counts for a grade-`g` ideal examined at level `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundSet {
    pub g: u64,
    pub n: u64,
    /// `C(g+n-2, g-1)`
    pub e1_bound: u64,
    /// `C(g+n-3, g-2)`
    pub e2_hypothesis: u64,
    /// `C((g-1)(n-1)+a, g-1)` with `a = 1` iff `g = 2`
    pub main_bound: u64,
    /// `C(g+l-2, g-1)` for `l = 1..=n`
    pub block_bounds: Vec<u64>,
    /// Case-by-case bounds known for `g = 3`, `2 <= n <= 5`.
    pub sharp_g3_bound: Option<u64>,
}

impl BoundSet {
    pub fn new(g: u64, n: u64) -> Self {
        assert!(g >= 1 && n >= 1, "bounds need g >= 1 and n >= 1");
        let alpha = u64::from(g == 2);
        BoundSet {
            g,
            n,
            e1_bound: binomial(g + n - 2, g - 1),
            e2_hypothesis: if g >= 2 { binomial(g + n - 3, g - 2) } else { 0 },
            main_bound: binomial((g - 1) * (n - 1) + alpha, g - 1),
            block_bounds: (1..=n).map(|l| block_bound(g, l)).collect(),
            sharp_g3_bound: sharp_g3_bound(g, n),
        }
    }
}

pub fn block_bound(g: u64, l: u64) -> u64 {
    binomial(g + l - 2, g - 1)
}

pub fn sharp_g3_bound(g: u64, n: u64) -> Option<u64> {
    match (g, n) {
        (3, 2) => Some(3),
        (3, 3) => Some(6),
        (3, 4) => Some(10),
        (3, 5) => Some(16),
        _ => None,
    }
}
