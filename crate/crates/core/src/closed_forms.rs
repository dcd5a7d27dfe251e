//! Closed-form sparing numbers and composite identities, exactly as claimed,
//! each restricted to the parameter range of its hypothesis.
//!
//! These functions encode claims, not truths; `audit` checks them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer parameters keyed by name (`m`, `n`, `phi1`, ...).
pub type Params = BTreeMap<String, u64>;

/// Builds a [`Params`] map from `(name, value)` pairs.
pub fn params<const N: usize>(pairs: [(&str, u64); N]) -> Params {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaId {
    Cycle,
    Complete,
    Bipartite,
    Fan,
    Cone,
    Tent,
    Friendship,
    PathFriendship,
    ClosedFriendship,
    Windmill,
    UnionIdentity,
    RingsumIdentity,
    ComplementIdentity,
    RingsumCycles,
}

impl FormulaId {
    pub const ALL: [FormulaId; 14] = [
        FormulaId::Cycle,
        FormulaId::Complete,
        FormulaId::Bipartite,
        FormulaId::Fan,
        FormulaId::Cone,
        FormulaId::Tent,
        FormulaId::Friendship,
        FormulaId::PathFriendship,
        FormulaId::ClosedFriendship,
        FormulaId::Windmill,
        FormulaId::UnionIdentity,
        FormulaId::RingsumIdentity,
        FormulaId::ComplementIdentity,
        FormulaId::RingsumCycles,
    ];

    /// Formulas that give φ of a generated graph family.
    pub const FAMILIES: [FormulaId; 10] = [
        FormulaId::Cycle,
        FormulaId::Complete,
        FormulaId::Bipartite,
        FormulaId::Fan,
        FormulaId::Cone,
        FormulaId::Tent,
        FormulaId::Friendship,
        FormulaId::PathFriendship,
        FormulaId::ClosedFriendship,
        FormulaId::Windmill,
    ];

    pub fn name(self) -> &'static str {
        use FormulaId::*;
        match self {
            Cycle => "cycle",
            Complete => "complete",
            Bipartite => "bipartite",
            Fan => "fan",
            Cone => "cone",
            Tent => "tent",
            Friendship => "friendship",
            PathFriendship => "path_friendship",
            ClosedFriendship => "closed_friendship",
            Windmill => "windmill",
            UnionIdentity => "union_identity",
            RingsumIdentity => "ringsum_identity",
            ComplementIdentity => "complement_identity",
            RingsumCycles => "ringsum_cycles",
        }
    }

    pub fn is_family(self) -> bool {
        Self::FAMILIES.contains(&self)
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.replace('-', "_");
        FormulaId::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| Error::ParamOutOfRange(format!("unknown formula {s:?}")))
    }
}

fn get(p: &Params, key: &str, min: u64, id: FormulaId) -> Result<u64> {
    match p.get(key) {
        Some(&v) if v >= min => Ok(v),
        Some(&v) => Err(Error::ParamOutOfRange(format!(
            "{id}: {key} = {v}, needs {key} >= {min}"
        ))),
        None => Err(Error::ParamOutOfRange(format!(
            "{id}: missing parameter {key}"
        ))),
    }
}

/// The claimed sparing number for `id` at `p`.
pub fn phi_formula(id: FormulaId, p: &Params) -> Result<u64> {
    use FormulaId::*;
    let m = |min| get(p, "m", min, id);
    let n = |min| get(p, "n", min, id);
    match id {
        Cycle => Ok(n(3)? % 2),
        Complete => {
            let n = n(2)?;
            Ok((n - 1) * (n - 2) / 2)
        }
        Bipartite => Ok(0),
        Fan => {
            m(2)?;
            n(2)
        }
        Cone => {
            m(2)?;
            n(3)
        }
        Tent => {
            m(2)?;
            Ok(2 * n(3)?)
        }
        // stated as "n" for K1 + mK2; the count in its proof is m
        Friendship => m(2),
        PathFriendship => Ok(m(2)? * n(2)?.div_ceil(2)),
        ClosedFriendship => Ok(m(2)? * n(3)?.div_ceil(2)),
        Windmill => {
            let (m, n) = (m(2)?, n(2)?);
            Ok(m * n * (n - 1) / 2)
        }
        UnionIdentity => phi_union_identity(
            get(p, "phi1", 0, id)?,
            get(p, "phi2", 0, id)?,
            get(p, "phi_cap", 0, id)?,
        ),
        RingsumIdentity => phi_ringsum_identity(
            get(p, "phi1", 0, id)?,
            get(p, "phi2", 0, id)?,
            get(p, "phi_cap", 0, id)?,
        ),
        ComplementIdentity => {
            phi_complement_identity(get(p, "phi_g", 0, id)?, get(p, "phi_h", 0, id)?)
        }
        RingsumCycles => Ok(ringsum_cycles_predict(
            get(p, "m", 3, id)?,
            get(p, "n", 3, id)?,
            get(p, "shared", 0, id)?,
        )?
        .phi),
    }
}

fn non_negative(v: i128) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::NegativeResult(v))
}

/// `φ(G1 ∪ G2) = φ(G1) + φ(G2) − φ(G1 ∩ G2)`.
pub fn phi_union_identity(phi1: u64, phi2: u64, phi_cap: u64) -> Result<u64> {
    non_negative(phi1 as i128 + phi2 as i128 - phi_cap as i128)
}

/// `φ(G1 ⊕ G2) = φ(G1) + φ(G2) − 2 φ(G1 ∩ G2)`.
pub fn phi_ringsum_identity(phi1: u64, phi2: u64, phi_cap: u64) -> Result<u64> {
    non_negative(phi1 as i128 + phi2 as i128 - 2 * phi_cap as i128)
}

/// `φ(G ⊕ H) = φ(G) − φ(H)` for a subgraph `H` of `G`.
pub fn phi_complement_identity(phi_g: u64, phi_h: u64) -> Result<u64> {
    non_negative(phi_g as i128 - phi_h as i128)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(x: u64) -> Self {
        if x.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RingsumPrediction {
    pub phi: u64,
    pub mono_parity: Parity,
}

/// Whether two cycles of sizes `m` and `n` can share exactly `shared` edges
/// forming one path (0 means edge-disjoint).
pub fn ringsum_cycles_realizable(m: u64, n: u64, shared: u64) -> bool {
    m >= 3 && n >= 3 && (shared == 0 || (shared < m.min(n) && (m - shared) + (n - shared) >= 3))
}

/// Claimed sparing number and mono-indexed parity of `C_m ⊕ C_n`.
pub fn ringsum_cycles_predict(m: u64, n: u64, shared: u64) -> Result<RingsumPrediction> {
    if !ringsum_cycles_realizable(m, n, shared) {
        return Err(Error::ParamOutOfRange(format!(
            "cycles C{m}, C{n} cannot share exactly {shared} edges along one path"
        )));
    }
    let mono_parity = Parity::of(m + n);
    let phi = if shared == 0 {
        m % 2 + n % 2
    } else if m % 2 == n % 2 {
        0
    } else {
        1
    };
    Ok(RingsumPrediction { phi, mono_parity })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_examples() {
        assert_eq!(
            phi_formula(FormulaId::Cycle, &params([("n", 7)])).unwrap(),
            1
        );
        assert_eq!(
            phi_formula(FormulaId::Windmill, &params([("m", 2), ("n", 3)])).unwrap(),
            6
        );
        assert_eq!(
            phi_formula(FormulaId::Tent, &params([("m", 2), ("n", 4)])).unwrap(),
            8
        );
        assert_eq!(
            phi_formula(FormulaId::Complete, &params([("n", 5)])).unwrap(),
            6
        );
        assert_eq!(
            phi_formula(FormulaId::Fan, &params([("m", 2), ("n", 3)])).unwrap(),
            3
        );
        assert_eq!(
            phi_formula(FormulaId::Cone, &params([("m", 2), ("n", 5)])).unwrap(),
            5
        );
        assert_eq!(
            phi_formula(FormulaId::PathFriendship, &params([("m", 3), ("n", 4)])).unwrap(),
            6
        );
        assert_eq!(
            phi_formula(FormulaId::ClosedFriendship, &params([("m", 2), ("n", 5)])).unwrap(),
            6
        );
        assert_eq!(
            phi_formula(FormulaId::Bipartite, &Params::new()).unwrap(),
            0
        );
    }

    #[test]
    fn refuses_outside_hypotheses() {
        for (id, p) in [
            (FormulaId::Cycle, params([("n", 2)])),
            (FormulaId::Fan, params([("m", 1), ("n", 3)])),
            (FormulaId::Cone, params([("m", 2), ("n", 2)])),
            (FormulaId::Tent, params([("m", 2)])),
            (FormulaId::Complete, params([("n", 1)])),
            (FormulaId::Friendship, params([("m", 1)])),
        ] {
            assert!(
                matches!(phi_formula(id, &p), Err(Error::ParamOutOfRange(_))),
                "{id} {p:?}"
            );
        }
    }

    #[test]
    fn cycle_and_complete_shapes() {
        for n in 3..40u64 {
            assert_eq!(
                phi_formula(FormulaId::Cycle, &params([("n", n)])).unwrap(),
                n % 2
            );
        }
        for n in 2..40u64 {
            // C(n-1, 2) by counting pairs among n-1 items
            let pairs = (0..n - 1)
                .flat_map(|i| (i + 1..n - 1).map(move |j| (i, j)))
                .count() as u64;
            assert_eq!(
                phi_formula(FormulaId::Complete, &params([("n", n)])).unwrap(),
                pairs
            );
        }
    }

    #[test]
    fn windmill_at_two_is_friendship() {
        for m in 2..20u64 {
            let w = phi_formula(FormulaId::Windmill, &params([("m", m), ("n", 2)])).unwrap();
            let f = phi_formula(FormulaId::Friendship, &params([("m", m)])).unwrap();
            assert_eq!((w, f), (m, m));
        }
    }

    #[test]
    fn ringsum_cycle_predictions() {
        let p = ringsum_cycles_predict(3, 3, 1).unwrap();
        assert_eq!((p.phi, p.mono_parity), (0, Parity::Even));
        let p = ringsum_cycles_predict(3, 4, 2).unwrap();
        assert_eq!((p.phi, p.mono_parity), (1, Parity::Odd));
        assert_eq!(ringsum_cycles_predict(5, 7, 0).unwrap().phi, 2);
        assert!(ringsum_cycles_predict(4, 4, 3).is_err());
        assert!(ringsum_cycles_predict(3, 5, 3).is_err());
        assert!(ringsum_cycles_predict(2, 5, 0).is_err());
        assert_eq!(ringsum_cycles_predict(3, 5, 2).unwrap().phi, 0);
        let via_table = phi_formula(
            FormulaId::RingsumCycles,
            &params([("m", 3), ("n", 4), ("shared", 1)]),
        );
        assert_eq!(via_table.unwrap(), 1);
    }

    #[test]
    fn names_round_trip() {
        for id in FormulaId::ALL {
            assert_eq!(id.name().parse::<FormulaId>().unwrap(), id);
        }
        assert_eq!(
            "closed-friendship".parse::<FormulaId>().unwrap(),
            FormulaId::ClosedFriendship
        );
    }

    #[test]
    fn identities() {
        assert_eq!(phi_union_identity(1, 1, 0).unwrap(), 2);
        assert_eq!(phi_union_identity(0, 0, 0).unwrap(), 0);
        assert_eq!(phi_union_identity(4, 3, 0).unwrap(), 7);
        assert_eq!(phi_union_identity(0, 1, 2), Err(Error::NegativeResult(-1)));
        assert_eq!(phi_ringsum_identity(1, 1, 0).unwrap(), 2);
        assert_eq!(phi_ringsum_identity(2, 2, 1).unwrap(), 2);
        assert_eq!(phi_ringsum_identity(0, 0, 0).unwrap(), 0);
        assert_eq!(phi_ringsum_identity(1, 1, 1).unwrap(), 0);
        assert_eq!(
            phi_ringsum_identity(0, 1, 1),
            Err(Error::NegativeResult(-1))
        );
        assert_eq!(phi_complement_identity(1, 0).unwrap(), 1);
        assert_eq!(phi_complement_identity(3, 3).unwrap(), 0);
        assert_eq!(
            phi_complement_identity(0, 1),
            Err(Error::NegativeResult(-1))
        );
    }
}
