//! Exact-rational Turán density engine.
//!
//! Asymptotic density bounds come exclusively from limit formulas of
//! infinite construction families; finite graphs only ever feed the
//! integer table of [`table::TuranValueTable`] (the ratio
//! `T(n,k,4)/C(n,4)` is increasing in n, so a finite instance does NOT
//! bound the density - the API keeps that mistake unrepresentable).
//!
//! All arithmetic is exact; decimal strings appear only in
//! [`BoundRecord::decimal`], rounded outward so the printed digits are
//! themselves a valid bound.

pub mod report;
pub mod section8;
pub mod table;

use serde::Serialize;
use thiserror::Error;

use crate::constructions::BuildError;
use crate::rational::{binomial_u128, Rat, Round};

pub use report::{render_csv, render_json, render_markdown, table9_report, Table9Row};
pub use section8::{section8_exact, union_upper, Section8};
pub use table::{density_from_graph, lift_lower, ExternalConstants, TuranValueTable};

#[derive(Debug, Error)]
pub enum BoundError {
    #[error("alpha certificate must have Exact status")]
    UncertifiedAlpha,
    #[error("m={m} too small for this family (minimum {min})")]
    MTooSmall { m: u64, min: u64 },
    #[error("n/alpha = {n}/{alpha} outside [3/2, 7/4]")]
    RatioOutOfRange { n: u64, alpha: u64 },
    #[error("no table entry at (n={n}, k={k}) to lift from")]
    MissingBaseEntry { n: u64, k: u64 },
    #[error("entry (n={n}, k={k}) would have lower {lower} > upper {upper}")]
    ContradictoryEntry { n: u64, k: u64, lower: u64, upper: u64 },
    #[error(transparent)]
    Build(#[from] BuildError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BoundKind {
    Upper,
    Lower,
}

/// Where a bound came from: a reproduced construction family, or an
/// external constant taken on citation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Provenance {
    Construction { name: String, params: String },
    External { cite: String },
}

impl Provenance {
    pub fn reproduced(&self) -> bool {
        matches!(self, Provenance::Construction { .. })
    }

    pub fn describe(&self) -> String {
        match self {
            Provenance::Construction { name, params } if params.is_empty() => name.clone(),
            Provenance::Construction { name, params } => format!("{name} ({params})"),
            Provenance::External { cite } => format!("external: {cite}"),
        }
    }
}

/// One row of the density report: a bound on `t(k,4)` and its rescaled
/// form `t_*(k,4) = (k-1)^3 t / 24`. `k = 0` denotes a bound on the
/// limit over k. `decimal` renders `t_star` outward at 6 digits.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundRecord {
    pub k: u64,
    pub kind: BoundKind,
    #[serde(serialize_with = "ser_opt_rat")]
    pub t_value: Option<Rat>,
    #[serde(serialize_with = "ser_rat")]
    pub t_star: Rat,
    pub provenance: Provenance,
    pub decimal: String,
}

fn ser_rat<S: serde::Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn ser_opt_rat<S: serde::Serializer>(r: &Option<Rat>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_some(&r.to_string()),
        None => s.serialize_none(),
    }
}

impl BoundRecord {
    fn rounding(kind: BoundKind) -> Round {
        match kind {
            BoundKind::Upper => Round::Up,
            BoundKind::Lower => Round::Down,
        }
    }

    /// Record from a bound on `t(k,4)`; `t_star` is derived exactly.
    pub fn from_t(k: u64, kind: BoundKind, t_value: Rat, provenance: Provenance) -> Self {
        let t_star = Rat::from_bigint(num_bigint::BigInt::from(k - 1).pow(3))
            * &t_value
            * Rat::new(1, 24);
        let decimal = t_star.decimal(6, Self::rounding(kind));
        BoundRecord { k, kind, t_value: Some(t_value), t_star, provenance, decimal }
    }

    /// Record from a bound stated directly on `t_*`.
    pub fn from_t_star(k: u64, kind: BoundKind, t_star: Rat, provenance: Provenance) -> Self {
        let t_value = if k > 1 {
            Some(
                t_star.clone() * Rat::from_int(24)
                    / Rat::from_bigint(num_bigint::BigInt::from(k - 1).pow(3)),
            )
        } else {
            None
        };
        let decimal = t_star.decimal(6, Self::rounding(kind));
        BoundRecord { k, kind, t_value, t_star, provenance, decimal }
    }

    /// External constant known only through its printed digits.
    pub fn external_decimal(k: u64, kind: BoundKind, digits: &str, cite: &str) -> Self {
        let t_star = decimal_to_rat(digits);
        let decimal = t_star.decimal(6, Self::rounding(kind));
        BoundRecord {
            k,
            kind,
            t_value: None,
            t_star,
            provenance: Provenance::External { cite: cite.to_string() },
            decimal,
        }
    }
}

fn decimal_to_rat(digits: &str) -> Rat {
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    let scale = 10i64.pow(frac_part.len() as u32);
    let whole: i64 = int_part.parse().expect("decimal literal");
    let frac: i64 = if frac_part.is_empty() { 0 } else { frac_part.parse().expect("decimal literal") };
    Rat::new(whole * scale + frac, scale)
}

/// Density bound of the expansion family:
/// `t(alpha+2, 4) <= (24 e + 3n(n-1) + 4c + n - (11/16) d) / n^4`
/// where `c` and `d` sum the per-vertex critical-set sizes and flags.
pub fn expansion_density_bound(n: u64, e: u64, alpha: u64, c: u64, d: u64) -> BoundRecord {
    let numerator = Rat::from_int((24 * e + 3 * n * (n - 1) + 4 * c + n) as i64)
        - Rat::new(11, 16) * Rat::from_int(d as i64);
    let t = numerator / Rat::from_int(n as i64).pow(4);
    BoundRecord::from_t(
        alpha + 2,
        BoundKind::Upper,
        t,
        Provenance::Construction {
            name: "expansion".into(),
            params: format!("n={n}, e={e}, alpha={alpha}, c={c}, d={d}"),
        },
    )
}

/// Density bound of the circular family expanded with one block as
/// each critical set: `t(3m+2,4) <= (768m + 30837) / (65536 m^3)`.
/// Needs three or more blocks so every vertex has two disjoint blocks
/// to point at.
pub fn circular_expansion_bound(m: u64) -> Result<BoundRecord, BoundError> {
    if m < 3 {
        return Err(BoundError::MTooSmall { m, min: 3 });
    }
    let t = Rat::from_int((768 * m + 30_837) as i64)
        / (Rat::from_int(65_536) * Rat::from_int(m as i64).pow(3));
    Ok(BoundRecord::from_t(
        3 * m + 2,
        BoundKind::Upper,
        t,
        Provenance::Construction { name: "circular+expansion".into(), params: format!("m={m}") },
    ))
}

/// Limit bound of the rainbow family: `t(3m+1,4) <= (443/640) m^-3`.
pub fn rainbow_limit_bound(m: u64) -> Result<BoundRecord, BoundError> {
    if m < 2 {
        return Err(BoundError::MTooSmall { m, min: 2 });
    }
    let t = Rat::new(443, 640) / Rat::from_int(m as i64).pow(3);
    Ok(BoundRecord::from_t(
        3 * m + 1,
        BoundKind::Upper,
        t,
        Provenance::Construction { name: "rainbow".into(), params: format!("m={m}") },
    ))
}

/// Finite-depth edge density of the circular product of `m` rainbow
/// graphs of depth `k`:
/// `e = m [4(|E0| + |E1| 4^k + |E2| 4^{2k}) + 6 C(4^k,2)^2 + 4^{4k}]`
/// over `C(m 4^{k+1}, 4)`. Converges to `(443/640) m^-3` as k grows.
pub fn rainbow_finite_bound(k: u32, m: u64) -> Result<Rat, BoundError> {
    if k < 1 {
        return Err(BoundError::MTooSmall { m: k as u64, min: 1 });
    }
    if m < 2 {
        return Err(BoundError::MTooSmall { m, min: 2 });
    }
    let counts = crate::constructions::rainbow_counts(k);
    let p4k = 4u128.pow(k);
    let bracket = 4 * (counts.e0 + counts.e1 * p4k + counts.e2 * p4k * p4k)
        + 6 * binomial_u128(p4k as u64, 2).pow(2)
        + p4k.pow(4);
    let edges = m as u128 * bracket;
    let vertices = m * 4u64.pow(k + 1);
    let denom = binomial_u128(vertices, 4);
    Ok(Rat::from_big(edges.into(), denom.into()))
}

/// Density bound of the `Z_m + Z_2^6` family restricted to a
/// lambda-subset, expanded with levels as critical sets:
/// `t_*(3m+2,4) <= (3m+1)^3 (e + (v/24)(3v + 64 lambda - 43/16)) v^-4`
/// with `v = 16 m lambda`.
pub fn corollary74_bound(m: u64, lambda: u64) -> Result<BoundRecord, BoundError> {
    let e = crate::constructions::hm_edge_formula(m as usize, lambda as usize)?;
    let v = 16 * m * lambda;
    let vr = Rat::from_int(v as i64);
    let inner = Rat::from_int(3 * v as i64) + Rat::from_int(64 * lambda as i64) - Rat::new(43, 16);
    let t_star = Rat::from_int(((3 * m + 1) as i64).pow(3))
        * (Rat::from_int(e as i64) + &vr * Rat::new(1, 24) * inner)
        / vr.pow(4);
    Ok(BoundRecord::from_t_star(
        3 * m + 2,
        BoundKind::Upper,
        t_star,
        Provenance::Construction {
            name: "cyclic-z26+expansion".into(),
            params: format!("m={m}, lambda={lambda}"),
        },
    ))
}

/// Limit of the two-part parity family with a mean-density matrix:
/// within-class quadruples contribute `2 C(h,4)` and half of the
/// `C(h,2)^2` mixed quadruples survive, so the density over
/// `C(2h,4)` tends to `(2/24 + 1/8) / (16/24) = 5/16`.
pub fn parity_limit_bound() -> BoundRecord {
    let numerator_lead = Rat::new(2, 24) + Rat::new(1, 8);
    let denominator_lead = Rat::new(16, 24);
    let t = numerator_lead / denominator_lead;
    debug_assert_eq!(t, Rat::new(5, 16));
    BoundRecord::from_t(
        5,
        BoundKind::Upper,
        t,
        Provenance::Construction { name: "two-part parity".into(), params: "random matrix mean".into() },
    )
}

/// Transversal-based lower bound: `tau(H) <= (5 v + 4 e)/21` gives
/// `T(n, alpha+1, 4) >= 4n - (21/4) alpha`, hence
/// `t_*(4) >= (4/7)^3` in the limit.
pub fn thomasse_yeo_lower() -> BoundRecord {
    BoundRecord::from_t_star(
        0,
        BoundKind::Lower,
        Rat::new(4, 7).pow(3),
        Provenance::External { cite: "Thomassé–Yeo 2007 transversal bound".into() },
    )
}

/// Check the recursive consistency `t_*(m(k-1)+1, 4) <= t_*(k, 4)`
/// within a family of upper-bound records. Returns the violating
/// pairs (empty when consistent).
pub fn recursive_consistency(records: &[BoundRecord]) -> Vec<(u64, u64)> {
    let mut bad = Vec::new();
    for a in records {
        for b in records {
            if a.kind != BoundKind::Upper || b.kind != BoundKind::Upper || a.k < 2 {
                continue;
            }
            // b.k = m (a.k - 1) + 1 for integral m >= 1
            if (b.k - 1) % (a.k - 1) == 0 && b.k > a.k && b.t_star > a.t_star {
                bad.push((a.k, b.k));
            }
        }
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expansion_bound_worked_example() {
        let r = expansion_density_bound(8, 14, 4, 32, 8);
        assert_eq!(r.k, 6);
        assert_eq!(r.t_value, Some(Rat::new(1269, 8192)));
        assert_eq!(r.t_star, Rat::new(52875, 65536));
        assert_eq!(r.decimal, "0.806809");
    }

    #[test]
    fn expansion_bound_degenerate_inputs() {
        // formula evaluation only; not a meaningful graph
        let r = expansion_density_bound(4, 0, 0, 0, 0);
        assert_eq!(r.t_value, Some(Rat::new(3 * 4 * 3 + 4, 256)));
    }

    #[test]
    fn circular_family_rows() {
        assert!(matches!(circular_expansion_bound(2), Err(BoundError::MTooSmall { .. })));
        let m5 = circular_expansion_bound(5).unwrap();
        assert_eq!((m5.k, m5.decimal.as_str()), (17, "0.722438"));
        let m6 = circular_expansion_bound(6).unwrap();
        assert_eq!((m6.k, m6.decimal.as_str()), (20, "0.715601"));
        let m7 = circular_expansion_bound(7).unwrap();
        assert_eq!((m7.k, m7.decimal.as_str()), (23, "0.714739"));
    }

    #[test]
    fn circular_bound_equals_assembled_expansion_bound() {
        // two-path equality: the family formula must equal the general
        // expansion bound assembled from (n, e, alpha, c, d) =
        // (16m, 1244m, 3m, 256m, 16m)
        for m in [3u64, 5, 7, 11] {
            let direct = circular_expansion_bound(m).unwrap();
            let assembled =
                expansion_density_bound(16 * m, 1244 * m, 3 * m, 16 * 16 * m, 16 * m);
            assert_eq!(direct.t_value, assembled.t_value, "m={m}");
            assert_eq!(direct.t_star, assembled.t_star, "m={m}");
        }
    }

    #[test]
    fn rainbow_rows() {
        let r = rainbow_limit_bound(2).unwrap();
        assert_eq!(r.k, 7);
        assert_eq!(r.t_value, Some(Rat::new(443, 5120)));
        assert_eq!(r.t_star, Rat::new(3987, 5120));
        assert_eq!(r.decimal, "0.778711");
        let r3 = rainbow_limit_bound(3).unwrap();
        assert_eq!(r3.t_value, Some(Rat::new(443, 640 * 27)));
    }

    #[test]
    fn rainbow_finite_values() {
        let b1 = rainbow_finite_bound(1, 2).unwrap();
        assert_eq!(b1, Rat::from_big(2488.into(), binomial_u128(32, 4).into()));
        let b2 = rainbow_finite_bound(2, 2).unwrap();
        let target = Rat::new(443, 5120);
        let rel = (target.clone() - &b2) / &target;
        assert!(rel > Rat::zero() && rel < Rat::new(51, 1000), "rel {}", rel.to_f64());
    }

    #[test]
    fn corollary_rows_match_published_decimals() {
        for (m, l, expect) in [
            (10, 2, "0.711838"),
            (11, 2, "0.709199"),
            (12, 2, "0.707575"),
            (13, 2, "0.706727"),
            (14, 2, "0.706485"),
            (20, 3, "0.706452"),
            (21, 3, "0.706335"),
        ] {
            let r = corollary74_bound(m, l).unwrap();
            assert_eq!(r.k, 3 * m + 2);
            assert_eq!(r.decimal, expect, "m={m} lambda={l}");
        }
    }

    #[test]
    fn parity_limit_is_five_sixths_rescaled() {
        let r = parity_limit_bound();
        assert_eq!(r.t_value, Some(Rat::new(5, 16)));
        assert_eq!(r.t_star, Rat::new(5, 6));
        assert_eq!(r.decimal, "0.833334");
    }

    #[test]
    fn thomasse_yeo_record() {
        let r = thomasse_yeo_lower();
        assert_eq!(r.t_star, Rat::new(64, 343));
        assert_eq!(r.decimal, "0.186588");
        // consistency: at (n, alpha) = (7m, 4m) the linear form gives 7m
        for m in 1..20i64 {
            let val = Rat::from_int(4 * 7 * m) - Rat::new(21, 4) * Rat::from_int(4 * m);
            assert_eq!(val, Rat::from_int(7 * m));
        }
    }

    #[test]
    fn recursive_consistency_on_rainbow_family() {
        let records: Vec<BoundRecord> =
            [2u64, 4, 5].iter().map(|&m| rainbow_limit_bound(m).unwrap()).collect();
        // k = 7, 13, 16; 13 = 2*(7-1)+1 pairs with 7
        assert!(recursive_consistency(&records).is_empty());
    }

    #[test]
    fn decimal_literal_parsing() {
        assert_eq!(decimal_to_rat("0.765046"), Rat::new(765046, 1_000_000));
        assert_eq!(decimal_to_rat("1.5"), Rat::new(3, 2));
    }
}
