use num_bigint::BigUint;

use super::Support;
use crate::error::Result;
use crate::graph::Graph;
use crate::labeling::{Labeling, SetLabel};

pub const LABEL_BASE: u32 = 4;

/// Positional labeling realising `support` as a weak IASI.
///
/// With vertices in sorted order `v0 < v1 < ...` and `b = 4`, vertex `vk`
/// gets `{b^k}` outside the support and `{0, b^k, 2 b^k}` inside it. Every
/// edge sum has base-4 digits at most 3, so no carries occur and each edge
/// label determines its endpoint pair. Mono-indexed edges are exactly those
/// with both endpoints outside the support.
pub fn construct_weak_iasi(g: &Graph, support: &Support) -> Result<Labeling> {
    support.check_independent(g)?;
    Ok(g.vertices()
        .iter()
        .enumerate()
        .map(|(k, v)| {
            let power = BigUint::from(LABEL_BASE).pow(k as u32);
            let label = if support.contains(v) {
                SetLabel::new([BigUint::from(0u8), power.clone(), power * 2u8]).unwrap()
            } else {
                SetLabel::singleton(power)
            };
            (v.clone(), label)
        })
        .collect())
}
