//! Chern characters on ℙ³ (with `H³ = 1`), the `β`-twist, the three slope
//! functions of the double-tilt construction and the support quadratic form.
//!
//! `α` and `t` never appear directly: every formula is written in `α²`.

use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::WallError;
use crate::rat::{q, ExtRat, Rat};

/// `(ch0, ch1, ch2, ch3)`. Read as a twisted vector the same components are
/// the `(r, c, d, e)` of a wall candidate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[Rat; 4]", into = "[Rat; 4]")]
pub struct ChernVector {
    pub ch0: Rat,
    pub ch1: Rat,
    pub ch2: Rat,
    pub ch3: Rat,
}

impl ChernVector {
    pub fn new(ch0: Rat, ch1: Rat, ch2: Rat, ch3: Rat) -> Self {
        ChernVector { ch0, ch1, ch2, ch3 }
    }

    pub fn components(&self) -> [&Rat; 4] {
        [&self.ch0, &self.ch1, &self.ch2, &self.ch3]
    }
}

impl From<[Rat; 4]> for ChernVector {
    fn from([ch0, ch1, ch2, ch3]: [Rat; 4]) -> Self {
        ChernVector { ch0, ch1, ch2, ch3 }
    }
}

impl From<ChernVector> for [Rat; 4] {
    fn from(v: ChernVector) -> Self {
        [v.ch0, v.ch1, v.ch2, v.ch3]
    }
}

impl Add for &ChernVector {
    type Output = ChernVector;
    fn add(self, rhs: &ChernVector) -> ChernVector {
        ChernVector::new(
            &self.ch0 + &rhs.ch0,
            &self.ch1 + &rhs.ch1,
            &self.ch2 + &rhs.ch2,
            &self.ch3 + &rhs.ch3,
        )
    }
}

impl Sub for &ChernVector {
    type Output = ChernVector;
    fn sub(self, rhs: &ChernVector) -> ChernVector {
        ChernVector::new(
            &self.ch0 - &rhs.ch0,
            &self.ch1 - &rhs.ch1,
            &self.ch2 - &rhs.ch2,
            &self.ch3 - &rhs.ch3,
        )
    }
}

impl fmt::Display for ChernVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.ch0, self.ch1, self.ch2, self.ch3)
    }
}

/// The twist `β`, restricted to `0` or `1/k`.
///
/// `β = 0` and `β = 1` (k = 1) are different values: the latter runs the
/// twisted integrality tests with every `β`-term present.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwistParameter {
    Zero,
    Reciprocal(u32),
}

impl TwistParameter {
    pub fn reciprocal(k: u32) -> Result<Self, WallError> {
        if k == 0 {
            return Err(WallError::InvalidTwist("1/0".into()));
        }
        Ok(TwistParameter::Reciprocal(k))
    }

    pub fn beta(&self) -> Rat {
        match *self {
            TwistParameter::Zero => Rat::zero(),
            TwistParameter::Reciprocal(k) => q(1, k as i64),
        }
    }

    pub fn k(&self) -> Option<u32> {
        match *self {
            TwistParameter::Zero => None,
            TwistParameter::Reciprocal(k) => Some(k),
        }
    }

    /// The lattice scale: `k` for `β = 1/k`, `1` for `β = 0`.
    pub fn scale(&self) -> i64 {
        self.k().map_or(1, i64::from)
    }

    /// Denominators `(1, k, 2k², 6k³)` of the twisted lattice.
    pub fn lattice_denominators(&self) -> [i64; 4] {
        let k = self.scale();
        [1, k, 2 * k * k, 6 * k * k * k]
    }
}

impl FromStr for TwistParameter {
    type Err = WallError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let invalid = || WallError::InvalidTwist(s.to_string());
        let beta: Rat = s.parse().map_err(|_| invalid())?;
        if beta.is_zero() {
            return Ok(TwistParameter::Zero);
        }
        if !beta.is_positive() || !beta.numer().is_one() {
            return Err(invalid());
        }
        let k: u32 = beta.denom().to_string().parse().map_err(|_| invalid())?;
        TwistParameter::reciprocal(k)
    }
}

impl fmt::Display for TwistParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.beta().fmt(f)
    }
}

impl Serialize for TwistParameter {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.beta().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TwistParameter {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A point `(α², s)` of the slice, both strictly positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityPoint {
    alpha_sq: Rat,
    s: Rat,
}

impl StabilityPoint {
    pub fn new(alpha_sq: Rat, s: Rat) -> Result<Self, WallError> {
        if !alpha_sq.is_positive() {
            return Err(WallError::NotPositive { what: "alpha^2", value: alpha_sq });
        }
        if !s.is_positive() {
            return Err(WallError::NotPositive { what: "s", value: s });
        }
        Ok(StabilityPoint { alpha_sq, s })
    }

    pub fn alpha_sq(&self) -> &Rat {
        &self.alpha_sq
    }

    pub fn s(&self) -> &Rat {
        &self.s
    }

    /// `(s + 1/6)·α²`, the quantity that orders the nested wall hyperbolas.
    pub fn wall_parameter(&self) -> Rat {
        (&self.s + q(1, 6)) * &self.alpha_sq
    }
}

/// `exp(−βH)·ch`.
pub fn twist(ch: &ChernVector, beta: &Rat) -> ChernVector {
    let b2 = beta * beta / Rat::int(2);
    let b3 = beta * beta * beta / Rat::int(6);
    ChernVector::new(
        ch.ch0.clone(),
        &ch.ch1 - beta * &ch.ch0,
        &ch.ch2 - beta * &ch.ch1 + &b2 * &ch.ch0,
        &ch.ch3 - beta * &ch.ch2 + &b2 * &ch.ch1 - &b3 * &ch.ch0,
    )
}

/// Inverse of [`twist`]: `twist(·, −β)`.
pub fn untwist(chb: &ChernVector, beta: &Rat) -> ChernVector {
    twist(chb, &-beta)
}

pub fn mumford_slope(chb: &ChernVector) -> ExtRat {
    if chb.ch0.is_zero() {
        ExtRat::PositiveInfinity
    } else {
        ExtRat::Finite(&chb.ch1 / &chb.ch0)
    }
}

pub fn tilt_slope(chb: &ChernVector, alpha_sq: &Rat) -> ExtRat {
    if chb.ch1.is_zero() {
        return ExtRat::PositiveInfinity;
    }
    let num = &chb.ch2 - alpha_sq * &chb.ch0 / Rat::int(2);
    ExtRat::Finite(num / &chb.ch1)
}

/// Numerator of the Bridgeland slope: `ch3 − (s + 1/6)·α²·ch1`.
fn bridgeland_numerator(chb: &ChernVector, p: &StabilityPoint) -> Rat {
    &chb.ch3 - p.wall_parameter() * &chb.ch1
}

pub fn bridgeland_slope(chb: &ChernVector, p: &StabilityPoint) -> ExtRat {
    let den = &chb.ch2 - p.alpha_sq() * &chb.ch0 / Rat::int(2);
    if den.is_zero() {
        return ExtRat::PositiveInfinity;
    }
    ExtRat::Finite(bridgeland_numerator(chb, p) / den)
}

/// `Kα²(ch1² − 2·ch0·ch2) + 4·ch2² − 6·ch1·ch3`. Any `K` is accepted; the
/// support property needs `K < 6s + 1`, which is up to the caller.
pub fn quadratic_form(chb: &ChernVector, alpha_sq: &Rat, k: &Rat) -> Rat {
    let ChernVector { ch0, ch1, ch2, ch3 } = chb;
    k * alpha_sq * (ch1 * ch1 - Rat::int(2) * ch0 * ch2) + Rat::int(4) * ch2 * ch2
        - Rat::int(6) * ch1 * ch3
}

/// The symmetric matrix `B_{α,K}` with `Q(v) = v·B·vᵀ`.
pub fn support_matrix(alpha_sq: &Rat, k: &Rat) -> [[Rat; 4]; 4] {
    let ka = k * alpha_sq;
    let z = Rat::zero;
    [
        [z(), z(), -&ka, z()],
        [z(), ka.clone(), z(), Rat::int(-3)],
        [-&ka, z(), Rat::int(4), z()],
        [z(), Rat::int(-3), z(), z()],
    ]
}

pub fn discriminant(ch: &ChernVector) -> Rat {
    &ch.ch1 * &ch.ch1 - Rat::int(2) * &ch.ch0 * &ch.ch2
}
