//! Exhaustive, deterministic enumeration of wall candidates.
//!
//! The scan runs over the integer lattice `(m_d, m_c, m_e) = (2k²d, kc, 6k³e)`
//! (with `k = 1` for `β = 0`). N1 and N2 are folded into the loop bounds, the
//! `α₀²` cutoff tightens the `m_e` range, N3 gives a rank interval, and the
//! integrality tests run last. Rationals are only built for survivors.
//!
//! Rows (one `m_d` each) are independent and are dealt to workers; the merged
//! output is sorted canonically by `(d, c, e)`, so the catalog does not depend
//! on the number of workers.

use std::collections::BTreeMap;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chern::{untwist, ChernVector, TwistParameter};
use crate::conditions::{CandidateQuad, TargetClass};
use crate::error::WallError;
use crate::rat::Rat;

/// Default cap on the number of lattice cells a single enumeration may visit.
pub const DEFAULT_CELL_BUDGET: u128 = 1 << 32;

/// A candidate in lattice units: `(r, kc, 2k²d, 6k³e)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ScaledQuad {
    pub m_r: i64,
    pub m_c: i64,
    pub m_d: i64,
    pub m_e: i64,
}

impl ScaledQuad {
    pub fn to_quad(&self, twist: &TwistParameter) -> CandidateQuad {
        let [_, sc, sd, se] = twist.lattice_denominators();
        CandidateQuad::new(
            self.m_r,
            Rat::new(self.m_c, sc),
            Rat::new(self.m_d, sd),
            Rat::new(self.m_e, se),
        )
    }

    /// The lattice point of `quad`, if it lies on the lattice of `twist`
    /// with positive `c`, `d`, `e`.
    pub fn from_quad(quad: &CandidateQuad, twist: &TwistParameter) -> Option<Self> {
        let [_, sc, sd, se] = twist.lattice_denominators();
        let scale = |x: &Rat, s: i64| {
            let v = x * Rat::int(s);
            if v.is_integer() && v.is_positive() {
                v.floor_i64()
            } else {
                None
            }
        };
        Some(ScaledQuad {
            m_r: quad.r,
            m_c: scale(&quad.c, sc)?,
            m_d: scale(&quad.d, sd)?,
            m_e: scale(&quad.e, se)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationOptions {
    /// Keep only candidates with `α₀²` at or above this value.
    pub min_alpha0_sq: Option<Rat>,
    /// Make the cutoff strict (`α₀² > min_alpha0_sq`).
    #[serde(default)]
    pub min_exclusive: bool,
    /// Use `<` instead of `≤` for the upper inequality of N2.
    #[serde(default)]
    pub strict_n2: bool,
    #[serde(skip, default = "default_workers")]
    pub workers: usize,
    #[serde(skip, default = "default_budget")]
    pub cell_budget: u128,
}

fn default_workers() -> usize {
    1
}

fn default_budget() -> u128 {
    DEFAULT_CELL_BUDGET
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            min_alpha0_sq: None,
            min_exclusive: false,
            strict_n2: false,
            workers: 1,
            cell_budget: DEFAULT_CELL_BUDGET,
        }
    }
}

impl EnumerationOptions {
    pub fn with_min(min_alpha0_sq: Rat) -> Self {
        EnumerationOptions { min_alpha0_sq: Some(min_alpha0_sq), ..Default::default() }
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    /// Whether `alpha0_sq` passes the cutoff.
    pub fn admits(&self, alpha0_sq: &Rat) -> bool {
        match &self.min_alpha0_sq {
            None => true,
            Some(min) if self.min_exclusive => alpha0_sq > min,
            Some(min) => alpha0_sq >= min,
        }
    }
}

/// One `m_d` row of the search space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchRow {
    pub m_d: i64,
    /// `M(d) = min{4d², 4(D−d)²}`.
    pub bound: Rat,
    /// `k⁴·M(d)`, the bound on `m_c·m_e`.
    pub scaled_bound: i64,
    /// Largest `m_c` with a nonempty `m_e` range.
    pub max_m_c: i64,
}

/// The finite lattice scanned by [`enumerate_walls`].
#[derive(Clone, Debug)]
pub struct SearchSpace {
    pub target: TargetClass,
    pub twist: TwistParameter,
    pub rows: Vec<SearchRow>,
    strict_n2: bool,
    /// Cutoff as `m_e ≥ ⌈num·m_c / den⌉` (or `>` when exclusive).
    cutoff: Option<(i128, i128, bool)>,
}

impl SearchSpace {
    /// `2k²D`, the exclusive upper end of `m_d`.
    pub fn m_d_limit(&self) -> i64 {
        2 * self.twist.scale().pow(2) * self.target.degree
    }

    /// Inclusive `m_e` range for a given row and `m_c`; may be empty.
    pub fn m_e_range(&self, row: &SearchRow, m_c: i64) -> (i64, i64) {
        let cap = if self.strict_n2 { row.scaled_bound - 1 } else { row.scaled_bound };
        let hi = Integer::div_floor(&cap, &m_c);
        let lo = match self.cutoff {
            None => 1,
            Some((num, den, exclusive)) => {
                let x = num * m_c as i128;
                let bound = if exclusive { Integer::div_floor(&x, &den) + 1 } else { Integer::div_ceil(&x, &den) };
                bound.clamp(1, i64::MAX as i128) as i64
            }
        };
        (lo, hi)
    }

    /// Number of `(m_d, m_c, m_e)` lattice points.
    pub fn triple_count(&self) -> u128 {
        self.rows
            .iter()
            .map(|row| {
                (1..=row.max_m_c)
                    .map(|m_c| {
                        let (lo, hi) = self.m_e_range(row, m_c);
                        (hi - lo + 1).max(0) as u128
                    })
                    .sum::<u128>()
            })
            .sum()
    }

    /// Cells the scan is accountable for, counting each rank of the N3
    /// interval separately when the integrality tests depend on the rank
    /// (`β ≠ 0`). Stops counting once `limit` is passed.
    pub fn cell_count(&self, limit: u128) -> u128 {
        let r_dependent = self.twist.k().is_some();
        let limit_m = self.m_d_limit() as i128;
        let big_r = self.target.rank_deficit as i128;
        let mut total: u128 = 0;
        for row in &self.rows {
            let m_d = row.m_d as i128;
            for m_c in 1..=row.max_m_c {
                let (lo, hi) = self.m_e_range(row, m_c);
                if !r_dependent {
                    total += (hi - lo + 1).max(0) as u128;
                } else {
                    let mc = m_c as i128;
                    let (lo, hi) = (lo as i128, hi as i128);
                    if lo <= hi {
                        let width = floor_sum(mc * m_d, lo, hi)
                            + floor_sum(mc * (limit_m - m_d), lo, hi)
                            + (big_r + 1) * (hi - lo + 1);
                        total += width as u128;
                    }
                }
                if total > limit {
                    return total;
                }
            }
        }
        total
    }
}

/// `Σ_{x=lo}^{hi} ⌊a/x⌋` for `a ≥ 0`, `1 ≤ lo`, in `O(√a)` blocks.
fn floor_sum(a: i128, lo: i128, hi: i128) -> i128 {
    let mut total = 0;
    let mut x = lo;
    let hi = hi.min(a);
    while x <= hi {
        let v = a / x;
        let end = (a / v).min(hi);
        total += v * (end - x + 1);
        x = end + 1;
    }
    total
}

/// Lay out the finite lattice for `target` under `twist`.
pub fn search_space(
    target: &TargetClass,
    twist: &TwistParameter,
    opts: &EnumerationOptions,
) -> Result<SearchSpace, WallError> {
    let k = twist.scale();
    let k2 = k.checked_mul(k).ok_or(WallError::Overflow)?;
    let limit = k2
        .checked_mul(2)
        .and_then(|x| x.checked_mul(target.degree))
        .ok_or(WallError::Overflow)?;
    let cutoff = match &opts.min_alpha0_sq {
        None => None,
        Some(min) if !min.is_positive() => None,
        Some(min) => {
            // α₀² = m_e / (k²·m_c)
            let num = num_traits::ToPrimitive::to_i128(&(min.numer() * k2))
                .ok_or(WallError::Overflow)?;
            let den = num_traits::ToPrimitive::to_i128(min.denom()).ok_or(WallError::Overflow)?;
            Some((num, den, opts.min_exclusive))
        }
    };
    let mut space = SearchSpace {
        target: *target,
        twist: *twist,
        rows: Vec::new(),
        strict_n2: opts.strict_n2,
        cutoff,
    };
    let k4 = Rat::int(k2) * Rat::int(k2);
    for m_d in 1..limit {
        let side = m_d.min(limit - m_d);
        let scaled_bound = side.checked_mul(side).ok_or(WallError::Overflow)?;
        let d = Rat::new(m_d, 2 * k2);
        let bound = Rat::int(scaled_bound) / &k4;
        let mut row = SearchRow { m_d, bound, scaled_bound, max_m_c: 0 };
        // The m_e range shrinks as m_c grows, so the valid m_c form a prefix.
        let nonempty = |m_c: i64| {
            let (lo, hi) = space.m_e_range(&row, m_c);
            lo <= hi
        };
        let (mut good, mut bad) = (0i64, scaled_bound + 1);
        while bad - good > 1 {
            let mid = good + (bad - good) / 2;
            if nonempty(mid) {
                good = mid;
            } else {
                bad = mid;
            }
        }
        let m_c = good;
        row.max_m_c = m_c;
        debug_assert!(d.is_positive());
        space.rows.push(row);
    }
    Ok(space)
}

/// A group of candidates sharing `(c, d, e)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallCandidate {
    pub c: Rat,
    pub d: Rat,
    pub e: Rat,
    /// Sorted, nonempty.
    pub ranks: Vec<i64>,
    pub alpha0_sq: Rat,
    /// Untwisted character for each rank, in rank order.
    pub chern_untwisted: Vec<ChernVector>,
}

impl WallCandidate {
    pub fn quads(&self) -> impl Iterator<Item = CandidateQuad> + '_ {
        self.ranks
            .iter()
            .map(|&r| CandidateQuad::new(r, self.c.clone(), self.d.clone(), self.e.clone()))
    }
}

/// All candidates for one target, twist and option set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallCatalog {
    pub target: TargetClass,
    pub twist: TwistParameter,
    pub options: EnumerationOptions,
    /// Ordered by `(d, c, e)` ascending.
    pub candidates: Vec<WallCandidate>,
    /// `α₀²` (descending) to indices into `candidates`.
    pub walls: Vec<(Rat, Vec<usize>)>,
}

impl WallCatalog {
    pub fn from_candidates(
        target: TargetClass,
        twist: TwistParameter,
        options: EnumerationOptions,
        mut candidates: Vec<WallCandidate>,
    ) -> Self {
        candidates.sort_by(|a, b| (&a.d, &a.c, &a.e).cmp(&(&b.d, &b.c, &b.e)));
        let mut index: BTreeMap<Rat, Vec<usize>> = BTreeMap::new();
        for (i, cand) in candidates.iter().enumerate() {
            index.entry(cand.alpha0_sq.clone()).or_default().push(i);
        }
        let walls = index.into_iter().rev().collect();
        WallCatalog { target, twist, options, candidates, walls }
    }

    pub fn is_empty(&self) -> bool {
        self.candidates.is_empty()
    }

    pub fn len(&self) -> usize {
        self.candidates.len()
    }

    pub fn find(&self, c: &Rat, d: &Rat, e: &Rat) -> Option<&WallCandidate> {
        self.candidates
            .iter()
            .find(|cand| &cand.c == c && &cand.d == d && &cand.e == e)
    }
}

/// Distinct `α₀²` values, largest first.
pub fn distinct_walls(catalog: &WallCatalog) -> Vec<Rat> {
    catalog.walls.iter().map(|(a, _)| a.clone()).collect()
}

/// Enumerate every candidate passing N1–N3 and the integrality tests.
pub fn enumerate_walls(
    target: &TargetClass,
    twist: &TwistParameter,
    opts: &EnumerationOptions,
) -> Result<WallCatalog, WallError> {
    if opts.workers == 0 {
        return Err(WallError::NoWorkers);
    }
    let space = search_space(target, twist, opts)?;
    let cells = space.cell_count(opts.cell_budget);
    if cells > opts.cell_budget {
        return Err(WallError::BudgetExceeded { cells, budget: opts.cell_budget });
    }
    let scanner = RowScanner::new(&space);

    let groups: Vec<RawGroup> = if opts.workers == 1 {
        space.rows.iter().flat_map(|row| scanner.scan(row)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.workers)
            .build()
            .map_err(|_| WallError::NoWorkers)?;
        let per_row: Vec<Vec<RawGroup>> =
            pool.install(|| space.rows.par_iter().map(|row| scanner.scan(row)).collect());
        per_row.into_iter().flatten().collect()
    };

    let beta = twist.beta();
    let candidates = groups
        .into_iter()
        .map(|g| g.into_candidate(twist, &beta))
        .collect();
    Ok(WallCatalog::from_candidates(*target, *twist, opts.clone(), candidates))
}

struct RawGroup {
    m_c: i64,
    m_d: i64,
    m_e: i64,
    ranks: Vec<i64>,
}

impl RawGroup {
    fn into_candidate(self, twist: &TwistParameter, beta: &Rat) -> WallCandidate {
        let quad = ScaledQuad { m_r: 0, m_c: self.m_c, m_d: self.m_d, m_e: self.m_e }
            .to_quad(twist);
        let alpha0_sq = Rat::int(6) * &quad.e / &quad.c;
        let chern_untwisted = self
            .ranks
            .iter()
            .map(|&r| {
                let v = ChernVector::new(Rat::int(r), quad.c.clone(), quad.d.clone(), quad.e.clone());
                if beta.is_zero() {
                    v
                } else {
                    untwist(&v, beta)
                }
            })
            .collect();
        WallCandidate {
            c: quad.c,
            d: quad.d,
            e: quad.e,
            ranks: self.ranks,
            alpha0_sq,
            chern_untwisted,
        }
    }
}

/// Integrality tests in lattice units, with everything multiplied through by
/// `2k²` (first test) or `6k³` (second and third).
#[derive(Clone, Copy, Debug)]
enum Integrality {
    Untwisted,
    Twisted {
        k2: i128,
        mod1: i128,
        mod6: i128,
        /// The second test is `slope·r ≡ rhs (mod 6k³)`; solutions form the
        /// class `r ≡ r0 (mod step)` where `step = 6k³ / gcd(slope, 6k³)`.
        gcd: i128,
        step: i128,
        inverse: i128,
    },
}

impl Integrality {
    fn new(twist: &TwistParameter) -> Self {
        match twist.k() {
            None => Integrality::Untwisted,
            Some(k) => {
                let k = k as i128;
                let k2 = k * k;
                let mod6 = 6 * k * k2;
                let slope = (1 - k2).rem_euclid(mod6);
                let gcd = slope.gcd(&mod6);
                let step = mod6 / gcd;
                let inverse = if step == 1 {
                    0
                } else {
                    let eg = (slope / gcd).extended_gcd(&step);
                    eg.x.rem_euclid(step)
                };
                Integrality::Twisted { k2, mod1: 2 * k2, mod6, gcd, step, inverse }
            }
        }
    }
}

struct RowScanner<'a> {
    space: &'a SearchSpace,
    integrality: Integrality,
}

impl<'a> RowScanner<'a> {
    fn new(space: &'a SearchSpace) -> Self {
        RowScanner { space, integrality: Integrality::new(&space.twist) }
    }

    fn scan(&self, row: &SearchRow) -> Vec<RawGroup> {
        let limit = self.space.m_d_limit() as i128;
        let big_r = self.space.target.rank_deficit as i128;
        let m_d = row.m_d as i128;
        let mut out = Vec::new();
        for m_c in 1..=row.max_m_c {
            let (e_lo, e_hi) = self.space.m_e_range(row, m_c);
            let mc = m_c as i128;
            for m_e in e_lo..=e_hi {
                let me = m_e as i128;
                // N3: −m_c(2k²D − m_d)/m_e − R ≤ r ≤ m_c·m_d/m_e
                let hi = Integer::div_floor(&(mc * m_d), &me);
                let lo = -Integer::div_floor(&(mc * (limit - m_d)), &me) - big_r;
                let ranks = self.ranks(mc, m_d, me, lo, hi);
                if !ranks.is_empty() {
                    out.push(RawGroup { m_c, m_d: row.m_d, m_e, ranks });
                }
            }
        }
        out
    }

    fn ranks(&self, mc: i128, md: i128, me: i128, lo: i128, hi: i128) -> Vec<i64> {
        match self.integrality {
            Integrality::Untwisted => {
                let i1 = md - mc * mc;
                let i2 = 2 * me - 3 * mc * md + mc * mc * mc;
                let i3 = me - mc;
                if i1.rem_euclid(2) == 0 && i2.rem_euclid(6) == 0 && i3.rem_euclid(6) == 0 {
                    (lo as i64..=hi as i64).collect()
                } else {
                    Vec::new()
                }
            }
            Integrality::Twisted { k2, mod1, mod6, gcd, step, inverse } => {
                let rhs = -(me - k2 * mc + 3 * md + 3 * mc);
                let rhs = rhs.rem_euclid(mod6);
                if rhs % gcd != 0 {
                    return Vec::new();
                }
                let r0 = ((rhs / gcd) * inverse).rem_euclid(step);
                let first = lo + (r0 - lo).rem_euclid(step);
                let mut ranks = Vec::new();
                let mut r = first;
                while r <= hi {
                    let i1 = md - mc * mc + (1 - r) * (r + 2 * mc);
                    if i1.rem_euclid(mod1) == 0 {
                        let i3 = 2 * me - 3 * mc * md + mc * mc * mc + 3 * md * (2 - r)
                            + 6 * mc * mc * (3 * r - 1)
                            + 3 * mc * (r * r - 3 * r + 2)
                            + r * (r - 1) * (r - 2);
                        if i3.rem_euclid(mod6) == 0 {
                            ranks.push(r as i64);
                        }
                    }
                    r += step;
                }
                ranks
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::q;

    fn target(r: i64, d: i64) -> TargetClass {
        TargetClass::new(r, d).unwrap()
    }

    fn triples(cat: &WallCatalog) -> Vec<(Rat, Rat, Rat)> {
        cat.candidates
            .iter()
            .map(|c| (c.c.clone(), c.d.clone(), c.e.clone()))
            .collect()
    }

    #[test]
    fn floor_sum_matches_direct() {
        for a in 0..200 {
            for lo in 1..20 {
                for hi in lo - 1..40 {
                    let direct: i128 = (lo..=hi).map(|x| a / x).sum();
                    assert_eq!(floor_sum(a, lo, hi), direct, "a={a} lo={lo} hi={hi}");
                }
            }
        }
    }

    #[test]
    fn search_space_d1() {
        let space =
            search_space(&target(0, 1), &TwistParameter::Zero, &EnumerationOptions::default())
                .unwrap();
        assert_eq!(space.rows.len(), 1);
        let row = &space.rows[0];
        assert_eq!(row.m_d, 1);
        assert_eq!(row.bound, Rat::one());
        assert_eq!(row.max_m_c, 1);
        assert_eq!(space.m_e_range(row, 1), (1, 1));
        assert_eq!(space.triple_count(), 1);
    }

    #[test]
    fn search_space_row_counts() {
        let opts = EnumerationOptions::default();
        let s = search_space(&target(0, 3), &TwistParameter::Zero, &opts).unwrap();
        assert_eq!(s.rows.iter().map(|r| r.m_d).collect::<Vec<_>>(), vec![1, 2, 3, 4, 5]);
        let s = search_space(&target(0, 4), &TwistParameter::Reciprocal(4), &opts).unwrap();
        assert_eq!(s.rows.len(), 127);
        assert_eq!(s.rows.last().unwrap().m_d, 127);
    }

    #[test]
    fn cutoff_tightens_range() {
        let opts = EnumerationOptions::with_min(q(9, 16));
        let s = search_space(&target(0, 4), &TwistParameter::Reciprocal(4), &opts).unwrap();
        let row = s.rows.iter().find(|r| r.m_d == 64).unwrap();
        // α₀² = m_e / (16·m_c) ≥ 9/16  ⇔  m_e ≥ 9·m_c
        assert_eq!(s.m_e_range(row, 1), (9, 4096));
        assert_eq!(s.m_e_range(row, 3), (27, 1365));
        assert_eq!(row.max_m_c, 21);
        let strict = EnumerationOptions { min_exclusive: true, ..opts };
        let s = search_space(&target(0, 4), &TwistParameter::Reciprocal(4), &strict).unwrap();
        let row = s.rows.iter().find(|r| r.m_d == 64).unwrap();
        assert_eq!(s.m_e_range(row, 1), (10, 4096));
    }

    #[test]
    fn scaled_quad_roundtrip() {
        let tw = TwistParameter::Reciprocal(2);
        let quad = CandidateQuad::new(2, q(5, 2), q(13, 8), q(5, 12));
        let s = ScaledQuad::from_quad(&quad, &tw).unwrap();
        assert_eq!(s, ScaledQuad { m_r: 2, m_c: 5, m_d: 13, m_e: 20 });
        assert_eq!(s.to_quad(&tw), quad);
        let off = CandidateQuad::new(0, q(1, 3), q(1, 2), q(1, 6));
        assert!(ScaledQuad::from_quad(&off, &tw).is_none());
    }

    #[test]
    fn full_listing_d3() {
        let cat = enumerate_walls(&target(0, 3), &TwistParameter::Zero, &Default::default())
            .unwrap();
        assert_eq!(cat.len(), 8);
        let expected = [
            (-5, 1, 1, q(1, 2), q(1, 6)),
            (-4, 2, 2, Rat::one(), q(1, 3)),
            (-3, 3, 1, q(3, 2), q(1, 6)),
            (0, 0, 1, q(3, 2), q(7, 6)),
            (-3, 3, 3, q(3, 2), q(1, 2)),
            (-21, 21, 7, q(3, 2), q(1, 6)),
            (-2, 4, 2, Rat::int(2), q(1, 3)),
            (-1, 5, 1, q(5, 2), q(1, 6)),
        ];
        for (cand, (lo, hi, c, d, e)) in cat.candidates.iter().zip(expected) {
            assert_eq!(cand.ranks, (lo..=hi).collect::<Vec<_>>());
            assert_eq!((&cand.c, &cand.d, &cand.e), (&Rat::int(c), &d, &e));
        }
        assert_eq!(distinct_walls(&cat), vec![Rat::int(7), Rat::one(), q(1, 7)]);
    }

    #[test]
    fn d1_single_group() {
        let cat = enumerate_walls(&target(0, 1), &TwistParameter::Zero, &Default::default())
            .unwrap();
        assert_eq!(cat.len(), 1);
        assert_eq!(cat.candidates[0].ranks, vec![-1, 0, 1]);
        assert_eq!(triples(&cat), vec![(Rat::one(), q(1, 2), q(1, 6))]);
    }

    #[test]
    fn untwisted_characters_follow_ranks() {
        let cat = enumerate_walls(
            &target(0, 3),
            &TwistParameter::Reciprocal(3),
            &EnumerationOptions { min_exclusive: true, ..EnumerationOptions::with_min(q(4, 9)) },
        )
        .unwrap();
        assert_eq!(cat.len(), 2);
        let top = cat.find(&Rat::one(), &q(7, 6), &q(13, 18)).unwrap();
        assert_eq!(top.chern_untwisted[0].to_string(), "(0, 1, 3/2, 7/6)");
    }

    #[test]
    fn budget_is_enforced() {
        let opts = EnumerationOptions { cell_budget: 10, ..Default::default() };
        let err = enumerate_walls(&target(0, 4), &TwistParameter::Zero, &opts).unwrap_err();
        assert!(matches!(err, WallError::BudgetExceeded { budget: 10, .. }));
    }

    #[test]
    fn zero_workers_rejected() {
        let opts = EnumerationOptions::default().workers(0);
        assert!(matches!(
            enumerate_walls(&target(0, 2), &TwistParameter::Zero, &opts),
            Err(WallError::NoWorkers)
        ));
    }

    #[test]
    fn empty_catalog_has_no_walls() {
        let cat = enumerate_walls(
            &target(0, 3),
            &TwistParameter::Zero,
            &EnumerationOptions::with_min(Rat::int(100)),
        )
        .unwrap();
        assert!(cat.is_empty());
        assert!(distinct_walls(&cat).is_empty());
    }
}
