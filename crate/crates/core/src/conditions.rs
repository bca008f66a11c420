//! Numerical and integrality conditions on a candidate subobject character
//! `(r, c, d, e)`, given in twisted coordinates, for the target
//! `(−R, 0, D, 0)`.
//!
//! Everything here is exact; integer membership means "denominator one
//! after reduction".

use serde::{Deserialize, Serialize};

use crate::chern::{ChernVector, TwistParameter};
use crate::error::WallError;
use crate::rat::Rat;
/// The target `ch^β = (−R, 0, D, 0)`, with `R ≥ 0` and `D ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TargetClass {
    /// `R`, minus the twisted rank of the target.
    #[serde(rename = "R")]
    pub rank_deficit: i64,
    /// `D`, the twisted `ch2` of the target.
    #[serde(rename = "D")]
    pub degree: i64,
}

impl TargetClass {
    pub fn new(rank_deficit: i64, degree: i64) -> Result<Self, WallError> {
        if rank_deficit < 0 {
            return Err(WallError::InvalidTarget(format!("R = {rank_deficit} is negative")));
        }
        if degree < 1 {
            return Err(WallError::InvalidTarget(format!("D = {degree} is not positive")));
        }
        Ok(TargetClass { rank_deficit, degree })
    }

    pub fn chern(&self) -> ChernVector {
        ChernVector::new(
            Rat::int(-self.rank_deficit),
            Rat::zero(),
            Rat::int(self.degree),
            Rat::zero(),
        )
    }
}

/// Twisted character `(r, c, d, e)` of a potential destabilizing subobject.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CandidateQuad {
    pub r: i64,
    pub c: Rat,
    pub d: Rat,
    pub e: Rat,
}

impl CandidateQuad {
    pub fn new(r: i64, c: Rat, d: Rat, e: Rat) -> Self {
        CandidateQuad { r, c, d, e }
    }

    pub fn chern(&self) -> ChernVector {
        ChernVector::new(Rat::int(self.r), self.c.clone(), self.d.clone(), self.e.clone())
    }
}

/// Inclusive integer interval; empty when `lo > hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RankInterval {
    pub lo: i64,
    pub hi: i64,
}

impl RankInterval {
    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn contains(&self, r: i64) -> bool {
        self.lo <= r && r <= self.hi
    }

    pub fn len(&self) -> u64 {
        if self.is_empty() {
            0
        } else {
            (self.hi - self.lo) as u64 + 1
        }
    }

    pub fn iter(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi
    }
}

/// `α₀² = 6e/c`.
pub fn alpha0_squared(c: &Rat, e: &Rat) -> Result<Rat, WallError> {
    if !c.is_positive() {
        return Err(WallError::NotPositive { what: "c", value: c.clone() });
    }
    Ok(Rat::int(6) * e / c)
}

/// `min{4d², 4(D − d)²}`, the right-hand side of N2.
pub fn n2_bound(d: &Rat, target: &TargetClass) -> Rat {
    let two = Rat::int(2);
    let lower = (&two * d).pow(2);
    let upper = (&two * (Rat::int(target.degree) - d)).pow(2);
    lower.min(upper)
}

/// N1, N2 and N3. With `strict_upper`, N2's upper inequality becomes strict.
///
/// Returns `false` when `c ≤ 0`: those candidates are outside the scan.
pub fn check_numerical(quad: &CandidateQuad, target: &TargetClass, strict_upper: bool) -> bool {
    let CandidateQuad { r, c, d, e } = quad;
    if !c.is_positive() {
        return false;
    }
    // N1: 0 < 2d < 2D
    if !d.is_positive() || *d >= Rat::int(target.degree) {
        return false;
    }
    // N2: 0 < c·6e ≤ min{4d², 4(D−d)²}
    let lhs = c * Rat::int(6) * e;
    let bound = n2_bound(d, target);
    if !lhs.is_positive() || lhs > bound || (strict_upper && lhs == bound) {
        return false;
    }
    // N3, in rational form.
    let six_e = Rat::int(6) * e;
    let lo = -(c * (Rat::int(2 * target.degree) - Rat::int(2) * d)) / &six_e
        - Rat::int(target.rank_deficit);
    let hi = c * Rat::int(2) * d / &six_e;
    let r = Rat::int(*r);
    lo <= r && r <= hi
}

/// I1–I3 for `β = 0`. These do not involve the rank.
pub fn check_integral_beta0(c: &Rat, d: &Rat, e: &Rat) -> bool {
    let i1 = d - c * c / Rat::int(2);
    let i2 = Rat::int(2) * e - c * d + c.pow(3) / Rat::int(6);
    let i3 = e - c / Rat::int(6);
    i1.is_integer() && i2.is_integer() && i3.is_integer()
}

/// The three quantities whose integrality is tested for a twist `β`
/// (`Iβ1`, `Iβ2`, `Iβ3`, in that order), as written in the twisted
/// coordinates. With `β = 0` they reduce to I1, I3, I2.
///
/// `Iβ3` is not literally the twist of `2ch3 − ch1·ch2 + ch1³/6`: the two
/// differ by `(5/2)·β·c²·r`. This form is the one whose solutions match the
/// reference wall tables in `fixtures/`.
pub fn integral_residues(quad: &CandidateQuad, beta: &Rat) -> [Rat; 3] {
    let CandidateQuad { r, c, d, e } = quad;
    let r = Rat::int(*r);
    let one = Rat::one();
    let two = Rat::int(2);
    let b2 = beta * beta / &two;
    let b3 = beta * beta * beta / Rat::int(6);

    let ib1 = d - c * c / &two + beta * (&one - &r) * (beta * &r / &two + c);

    let ib2 = e - c / Rat::int(6) + beta * (d - &r / Rat::int(6)) + &b2 * c + &b3 * &r;

    let ib3 = two.clone() * e - c * d
        + c.pow(3) / Rat::int(6)
        + beta * (d * (&two - &r) + c * c * (Rat::int(3) * &r - &one))
        + &b2 * c * (&two + &r * (&r - Rat::int(3)))
        + &b3 * &r * (&r - &one) * (&r - &two);

    [ib1, ib2, ib3]
}

/// `Iβ1`–`Iβ3` for the given twist. These depend on `r` unless `β = 0`.
pub fn check_integral_betak(quad: &CandidateQuad, twist: &TwistParameter) -> bool {
    integral_residues(quad, &twist.beta())
        .iter()
        .all(Rat::is_integer)
}

/// The integer solutions of N3: `[⌈−c(2D−2d)/6e − R⌉, ⌊2cd/6e⌋]`.
pub fn rank_interval(
    c: &Rat,
    d: &Rat,
    e: &Rat,
    target: &TargetClass,
) -> Result<RankInterval, WallError> {
    if !c.is_positive() {
        return Err(WallError::NotPositive { what: "c", value: c.clone() });
    }
    if !e.is_positive() {
        return Err(WallError::NotPositive { what: "e", value: e.clone() });
    }
    let six_e = Rat::int(6) * e;
    let lo = -(c * (Rat::int(2 * target.degree) - Rat::int(2) * d)) / &six_e
        - Rat::int(target.rank_deficit);
    let hi = c * Rat::int(2) * d / &six_e;
    Ok(RankInterval {
        lo: lo.ceil_i64().ok_or(WallError::Overflow)?,
        hi: hi.floor_i64().ok_or(WallError::Overflow)?,
    })
}

/// `(kc, 2k²d, 6k³e)` when all three are integers (the lattice condition).
pub fn scaled_coordinates(quad: &CandidateQuad, twist: &TwistParameter) -> Option<[Rat; 3]> {
    let [_, sc, sd, se] = twist.lattice_denominators();
    let scaled = [&quad.c * Rat::int(sc), &quad.d * Rat::int(sd), &quad.e * Rat::int(se)];
    scaled.iter().all(Rat::is_integer).then_some(scaled)
}
