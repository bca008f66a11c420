//! Closed-form bounds on where walls can occur.
//!
//! Every threshold is reported both as an `α₀²` value and, where useful, as
//! the matching value of `(s + 1/6)·α² = α₀²/6`.

use serde::{Deserialize, Serialize};

use crate::chern::TwistParameter;
use crate::error::WallError;
use crate::rat::{q, Rat};

/// Largest numerical wall `α∞²` for `(−R, 0, D, 0)` at `β = 0`.
///
/// Odd `D`: `D² − 2` if `D ≡ 3 (mod 6)`, else `D²`; the maximizing candidate
/// is `(0, 1, D/2, α∞²/6)`. Even `D` reduces to `D − 1`. Independent of `R`.
pub fn max_wall_beta0(degree: u64) -> Rat {
    assert!(degree >= 1, "D must be positive");
    let odd = if degree.is_multiple_of(2) { degree - 1 } else { degree };
    let square = odd as i64 * odd as i64;
    if odd % 6 == 3 {
        Rat::int(square - 2)
    } else {
        Rat::int(square)
    }
}

/// `(s + 1/6)·α²` beyond which every Gieseker semistable sheaf of class
/// `(0, 0, D, 0)` is Bridgeland semistable (`β = 0`): `D²/6`.
pub fn gieseker_region_beta0(degree: u64) -> Rat {
    let d = degree as i64;
    q(d * d, 6)
}

/// The twist-independent no-wall region.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NoWallCap {
    /// `4D²`: no wall with larger `α₀²` (for `R = 0`).
    pub cap_sq: Rat,
    /// `2D²/3`, the same bound on `(s + 1/6)·α²`.
    pub region_threshold: Rat,
}

pub fn no_wall_cap(degree: u64) -> NoWallCap {
    let d = degree as i64;
    NoWallCap { cap_sq: Rat::int(4 * d * d), region_threshold: q(2 * d * d, 3) }
}

/// `α₀² = 2D`: above it (region `(s + 1/6)α² > D/3`) a destabilizing
/// subobject of a sheaf has rank zero.
pub fn rank_zero_threshold(degree: u64) -> Rat {
    Rat::int(2 * degree as i64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerCutoff {
    /// `(1 − β)²`.
    pub alpha0_sq: Rat,
    /// `(1 − β)²/6`.
    pub region: Rat,
}

/// Lower bound on walls destabilizing Gieseker sheaves that contain `O(1)`
/// as a subobject in the double-tilted heart. Whether that holds is the
/// caller's problem.
pub fn lower_cutoff(beta: &Rat) -> Result<LowerCutoff, WallError> {
    if beta.is_negative() || *beta >= Rat::one() {
        return Err(WallError::InvalidTwist(beta.to_string()));
    }
    let alpha0_sq = (Rat::one() - beta).pow(2);
    let region = &alpha0_sq / Rat::int(6);
    Ok(LowerCutoff { alpha0_sq, region })
}

/// Everything the `bounds` subcommand reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    #[serde(rename = "D")]
    pub degree: u64,
    pub beta: TwistParameter,
    /// `α∞²`; only known in closed form for `β = 0`.
    pub max_wall_sq: Option<Rat>,
    pub cap_sq: Rat,
    pub rank_zero_threshold_sq: Rat,
    /// `1` for `β = 0`.
    pub killing_wall_sq: Option<Rat>,
    /// `(s + 1/6)·α²` above which no walls exist: `D²/6` at `β = 0`,
    /// otherwise `2D²/3`.
    pub gieseker_region_threshold: Rat,
    pub lower_cutoff: Option<LowerCutoff>,
}

pub fn bound_report(degree: u64, twist: &TwistParameter) -> Result<BoundReport, WallError> {
    if degree == 0 {
        return Err(WallError::InvalidTarget("D = 0 is not positive".into()));
    }
    let cap = no_wall_cap(degree);
    let beta = twist.beta();
    let (max_wall_sq, killing_wall_sq, region) = match twist {
        TwistParameter::Zero => (
            Some(max_wall_beta0(degree)),
            Some(Rat::one()),
            gieseker_region_beta0(degree),
        ),
        TwistParameter::Reciprocal(_) => (None, None, cap.region_threshold.clone()),
    };
    Ok(BoundReport {
        degree,
        beta: *twist,
        max_wall_sq,
        cap_sq: cap.cap_sq,
        rank_zero_threshold_sq: rank_zero_threshold(degree),
        killing_wall_sq,
        gieseker_region_threshold: region,
        lower_cutoff: lower_cutoff(&beta).ok(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn max_wall_examples() {
        assert_eq!(max_wall_beta0(3), Rat::int(7));
        assert_eq!(max_wall_beta0(4), Rat::int(7));
        assert_eq!(max_wall_beta0(5), Rat::int(25));
        assert_eq!(max_wall_beta0(9), Rat::int(79));
        assert_eq!(max_wall_beta0(1), Rat::one());
        assert_eq!(max_wall_beta0(2), Rat::one());
    }

    #[test]
    fn max_wall_within_band() {
        for d in 3..=200u64 {
            let w = max_wall_beta0(d);
            let di = d as i64;
            assert!(w > Rat::int((di - 2) * (di - 2)), "D={d}");
            assert!(w <= Rat::int(di * di), "D={d}");
        }
    }

    #[test]
    fn gieseker_region_examples() {
        assert_eq!(gieseker_region_beta0(3), q(3, 2));
        assert_eq!(gieseker_region_beta0(4), q(8, 3));
        for d in 1..=50 {
            assert!(max_wall_beta0(d) / Rat::int(6) <= gieseker_region_beta0(d));
        }
    }

    #[test]
    fn cap_examples() {
        assert_eq!(no_wall_cap(3), NoWallCap { cap_sq: Rat::int(36), region_threshold: Rat::int(6) });
        assert_eq!(no_wall_cap(4), NoWallCap { cap_sq: Rat::int(64), region_threshold: q(32, 3) });
    }

    #[test]
    fn rank_zero_examples() {
        assert_eq!(rank_zero_threshold(4), Rat::int(8));
        assert!(q(151, 16) > rank_zero_threshold(4));
        assert_eq!(rank_zero_threshold(3), Rat::int(6));
        assert!(Rat::int(7) > rank_zero_threshold(3));
        assert_eq!(rank_zero_threshold(1), Rat::int(2));
    }

    #[test]
    fn lower_cutoff_examples() {
        let c = lower_cutoff(&q(1, 3)).unwrap();
        assert_eq!((c.alpha0_sq, c.region), (q(4, 9), q(2, 27)));
        let c = lower_cutoff(&q(1, 4)).unwrap();
        assert_eq!((c.alpha0_sq, c.region), (q(9, 16), q(3, 32)));
        let c = lower_cutoff(&Rat::zero()).unwrap();
        assert_eq!(c.alpha0_sq, Rat::one());
        assert!(lower_cutoff(&Rat::one()).is_err());
        assert!(lower_cutoff(&q(-1, 2)).is_err());
    }

    #[test]
    fn report_fields() {
        let r = bound_report(3, &TwistParameter::Zero).unwrap();
        assert_eq!(r.max_wall_sq, Some(Rat::int(7)));
        assert_eq!(r.cap_sq, Rat::int(36));
        assert_eq!(r.killing_wall_sq, Some(Rat::one()));
        assert_eq!(r.gieseker_region_threshold, q(3, 2));
        let r = bound_report(4, &TwistParameter::Reciprocal(4)).unwrap();
        assert_eq!(r.max_wall_sq, None);
        assert_eq!(r.gieseker_region_threshold, q(32, 3));
        assert_eq!(r.lower_cutoff.unwrap().alpha0_sq, q(9, 16));
        // β = 1 has no cutoff
        assert!(bound_report(4, &TwistParameter::Reciprocal(1)).unwrap().lower_cutoff.is_none());
        assert!(bound_report(0, &TwistParameter::Zero).is_err());
    }
}
