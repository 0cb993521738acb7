//! Weighted operation cost and the closed-form efficiency model.

use crate::counter::OpCounter;

/// Time units per operation class.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CostModel {
    pub assign: f64,
    pub compare: f64,
    pub addsub: f64,
    pub mul: f64,
    pub div: f64,
}

impl Default for CostModel {
    fn default() -> Self {
        CostModel { assign: 33.0, compare: 50.0, addsub: 16.0, mul: 20.0, div: 114.0 }
    }
}

impl CostModel {
    /// `None` unless every weight is positive and finite.
    pub fn new(assign: f64, compare: f64, addsub: f64, mul: f64, div: f64) -> Option<Self> {
        let m = CostModel { assign, compare, addsub, mul, div };
        m.is_valid().then_some(m)
    }

    pub fn is_valid(&self) -> bool {
        [self.assign, self.compare, self.addsub, self.mul, self.div].iter().all(|w| *w > 0.0 && w.is_finite())
    }
}

pub fn weighted_cost(c: &OpCounter, model: &CostModel) -> f64 {
    c.assigns as f64 * model.assign
        + c.compares as f64 * model.compare
        + c.addsubs as f64 * model.addsub
        + c.muls as f64 * model.mul
        + c.divs as f64 * model.div
}

/// Modelled per-line cost of Cyrus-Beck in the plane.
pub const CB_2D_FIXED: f64 = 590.0;
pub const CB_2D_PER_EDGE: f64 = 621.0;
/// Modelled per-line cost of the constant-time clipper in the plane.
pub const O1_2D: f64 = 2020.0;
/// Per-facet CB cost in space: counts `(9, 3, 6, 6, 1)` under the default weights.
pub const CB_3D_PER_FACET: f64 = 777.0;
/// Lookup and AND, counts `(18, 3, 8, 8, 4)`, plus a two-facet CB pass.
pub const O1_3D: f64 = 1488.0 + 2.0 * CB_3D_PER_FACET;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Efficiency {
    /// CB cost over O(1) cost.
    pub v1: f64,
    /// As `v1` with the amortized preprocessing cost added to the denominator.
    pub v2: f64,
}

/// Modelled efficiency for `n` edges (`dimension == 2`) or facets (`3`).
/// `amortized_prep` is the preprocessing cost divided by the number of lines.
pub fn theoretical_efficiency(n: usize, dimension: u8, amortized_prep: f64) -> Efficiency {
    let n = n as f64;
    let (cb, o1) = match dimension {
        2 => (CB_2D_FIXED + CB_2D_PER_EDGE * n, O1_2D),
        3 => (CB_3D_PER_FACET * n, O1_3D),
        _ => panic!("dimension must be 2 or 3"),
    };
    Efficiency { v1: cb / o1, v2: cb / (o1 + amortized_prep) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights() {
        let m = CostModel::default();
        assert_eq!(weighted_cost(&OpCounter::new(), &m), 0.0);
        assert_eq!(weighted_cost(&OpCounter::from_tuple((9, 3, 6, 6, 1)), &m), 777.0);
        assert_eq!(weighted_cost(&OpCounter::from_tuple((18, 3, 8, 8, 4)), &m), 1488.0);
        let n25 = OpCounter::from_tuple((9, 3, 6, 6, 1)).scaled(25);
        assert_eq!(weighted_cost(&n25, &m), 777.0 * 25.0);
        assert_eq!(O1_3D, 3042.0);
        assert!(CostModel::new(1.0, 0.0, 1.0, 1.0, 1.0).is_none());
    }

    #[test]
    fn efficiency_values() {
        let e = theoretical_efficiency(10, 2, 0.0);
        assert!((e.v1 - 6800.0 / 2020.0).abs() < 1e-12);
        assert_eq!(e.v1, e.v2);
        assert!((theoretical_efficiency(25, 3, 0.0).v1 - 6.39).abs() < 0.01);
        assert!((theoretical_efficiency(1, 3, 0.0).v1 - 0.26).abs() < 0.01);
        assert!((theoretical_efficiency(3, 2, 0.0).v1 - 1.21).abs() < 0.01);
        let e = theoretical_efficiency(10, 2, 2020.0);
        assert!((e.v2 - e.v1 / 2.0).abs() < 1e-12);
    }

    #[test]
    fn strictly_increasing_and_breakeven() {
        for dim in [2, 3] {
            for n in 1..200 {
                assert!(theoretical_efficiency(n + 1, dim, 0.0).v1 > theoretical_efficiency(n, dim, 0.0).v1);
            }
        }
        assert!(theoretical_efficiency(2, 2, 0.0).v1 < 1.0);
        assert!(theoretical_efficiency(3, 2, 0.0).v1 > 1.0);
    }
}
