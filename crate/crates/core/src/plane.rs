//! Pushing plane characters into ℙ³ and moving ℙ² tilt walls into the
//! `(α, s)`-slice.
//!
//! With `w = (0, c, d)` on ℙ², `v = ι_*w = (0, 0, c, d − c/2)`,
//! `s̄ = d/c`, `β̄ = d/c − 1/2` and `t² = (2s + 1/3)α² − 1/12`, the zero locus
//! of the ℙ² tilt slope of a subobject `A` matches the zero locus of the
//! Bridgeland slope of `ι_*A` twisted by `β̄`. This only suggests walls; it
//! certifies nothing.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::chern::{twist, ChernVector};
use crate::enumerate::WallCatalog;
use crate::error::WallError;
use crate::rat::{q, ExtRat, Rat};

/// A Chern character `(r, c, d)` on ℙ².
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PlaneChern {
    pub r: Rat,
    pub c: Rat,
    pub d: Rat,
}

impl PlaneChern {
    pub fn new(r: Rat, c: Rat, d: Rat) -> Self {
        PlaneChern { r, c, d }
    }
}

impl FromStr for PlaneChern {
    type Err = WallError;

    /// `"r,c,d"` with each entry an exact rational.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').collect();
        let bad = || WallError::InvalidTarget(format!("plane character {s:?}: expected r,c,d"));
        if parts.len() != 3 {
            return Err(bad());
        }
        let mut vals = parts.iter().map(|p| p.parse::<Rat>().map_err(|_| bad()));
        Ok(PlaneChern::new(
            vals.next().unwrap()?,
            vals.next().unwrap()?,
            vals.next().unwrap()?,
        ))
    }
}

impl fmt::Display for PlaneChern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.r, self.c, self.d)
    }
}

/// `ch(ι_*F) = (0, r, c − r/2, d − c/2 + r/6)`.
pub fn pushforward_chern(p: &PlaneChern) -> ChernVector {
    ChernVector::new(
        Rat::zero(),
        p.r.clone(),
        &p.c - &p.r / Rat::int(2),
        &p.d - &p.c / Rat::int(2) + &p.r / Rat::int(6),
    )
}

/// The parameter dictionary for a rank-zero plane character `w = (0, c, d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dictionary {
    pub w: PlaneChern,
    pub v: ChernVector,
    pub s_bar: Rat,
    pub beta_bar: Rat,
}

pub fn build_dictionary(c: &Rat, d: &Rat) -> Result<Dictionary, WallError> {
    if c.is_zero() {
        return Err(WallError::Zero { what: "c" });
    }
    let w = PlaneChern::new(Rat::zero(), c.clone(), d.clone());
    let v = pushforward_chern(&w);
    let s_bar = d / c;
    let beta_bar = &s_bar - q(1, 2);
    Ok(Dictionary { w, v, s_bar, beta_bar })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TSquared {
    pub value: Rat,
    /// Set when `t² ≤ 0`, i.e. the point maps outside the ℙ² tilt half-plane.
    pub below_slice: bool,
}

/// `t² = (2s + 1/3)·α² − 1/12`.
pub fn t_squared(alpha_sq: &Rat, s: &Rat) -> TSquared {
    let value = (Rat::int(2) * s + q(1, 3)) * alpha_sq - q(1, 12);
    let below_slice = !value.is_positive();
    TSquared { value, below_slice }
}

/// `ν_{b,t}(r, c, d) = (d − bc + ((b² − t²)/2)·r) / (c − br)`.
pub fn plane_tilt_slope(p: &PlaneChern, b: &Rat, t_sq: &Rat) -> ExtRat {
    let den = &p.c - b * &p.r;
    if den.is_zero() {
        return ExtRat::PositiveInfinity;
    }
    let num = &p.d - b * &p.c + (b * b - t_sq) / Rat::int(2) * &p.r;
    ExtRat::Finite(num / den)
}

/// A wall suggested by a plane subobject, and where it sits in a catalog.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneSuggestion {
    pub sub: PlaneChern,
    /// `β`-twisted character of `ι_*sub`.
    pub twisted: ChernVector,
    /// `None` when the pushforward has `ch1^β ≤ 0` (no wall of this kind).
    pub alpha0_sq: Option<Rat>,
    /// Candidates with exactly this `(c, d, e)` and rank 0.
    pub matching: Vec<usize>,
    /// Whether some catalog wall has this `α₀²`.
    pub wall_in_catalog: bool,
}

/// Push `sub` forward, twist it by the catalog's `β`, and look it up.
pub fn suggest_wall(catalog: &WallCatalog, sub: &PlaneChern) -> PlaneSuggestion {
    let twisted = twist(&pushforward_chern(sub), &catalog.twist.beta());
    let alpha0_sq = twisted
        .ch1
        .is_positive()
        .then(|| Rat::int(6) * &twisted.ch3 / &twisted.ch1);
    let matching = catalog
        .candidates
        .iter()
        .enumerate()
        .filter(|(_, cand)| {
            cand.c == twisted.ch1 && cand.d == twisted.ch2 && cand.e == twisted.ch3
                && cand.ranks.contains(&0)
        })
        .map(|(i, _)| i)
        .collect();
    let wall_in_catalog = alpha0_sq
        .as_ref()
        .is_some_and(|a| catalog.walls.iter().any(|(w, _)| w == a));
    PlaneSuggestion { sub: sub.clone(), twisted, alpha0_sq, matching, wall_in_catalog }
}
