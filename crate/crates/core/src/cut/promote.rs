use serde::{Deserialize, Serialize};

use crate::graph::Graph;

use super::exact::{int, rat};
use super::profile::cut_profile;
use super::{Cut, CutError, ParamConfig};

/// Effect of moving `X(Π)` from `A` to `B`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PromotionReport {
    pub moved: Vec<u32>,
    pub cut_size: usize,
    pub promoted_size: usize,
    /// `|Π*| - |Π|`.
    pub gain: i64,
    /// `Σ_{x ∈ X} (d(x) - 2 d_B(x) - |X|)`.
    pub degree_sum: i64,
    /// `|Π*| ≥ |Π| + degree_sum`.
    pub meets_degree_sum: bool,
    /// `|X| n p / 2`.
    pub benchmark: f64,
    /// `|Π*| - |Π| ≥ |X| n p / 2`, exactly.
    pub meets_benchmark: bool,
}

/// `Π* = (A \ X(Π), B ∪ X(Π))` with its report.
pub fn promote_cut(
    g: &Graph,
    pi: &Cut,
    cfg: &ParamConfig,
    p: f64,
) -> Result<(Cut, PromotionReport), CutError> {
    let prof = cut_profile(g, pi, cfg, p)?;
    let mut a = pi.side_a().clone();
    for &x in &prof.x {
        a.remove(x as usize);
    }
    let promoted = Cut::new(a);
    let cut_size = pi.size(g);
    let promoted_size = promoted.size(g);
    let k = prof.x.len() as i64;
    let degree_sum: i64 = prof
        .x
        .iter()
        .map(|&x| {
            let d_b = prof.degree_to_b(x as usize).expect("X ⊆ A") as i64;
            g.degree(x as usize) as i64 - 2 * d_b - k
        })
        .sum();
    let gain = promoted_size as i64 - cut_size as i64;
    let benchmark = int(k) * int(g.vertex_count() as i64) * rat(p) / int(2);
    let report = PromotionReport {
        moved: prof.x.clone(),
        cut_size,
        promoted_size,
        gain,
        degree_sum,
        meets_degree_sum: gain >= degree_sum,
        benchmark: num_traits::ToPrimitive::to_f64(&benchmark).unwrap_or(f64::INFINITY),
        meets_benchmark: int(gain) >= benchmark,
    };
    Ok((promoted, report))
}
