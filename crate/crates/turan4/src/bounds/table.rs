//! Integer table of Turán values `T(n, k, 4)` with per-entry
//! provenance. Finite solver-certified graphs land here (never in the
//! density records), external constants load from a versioned JSON
//! file, and lower bounds lift recursively through
//! `T(n,k,4) >= ceil(n T(n-1,k,4) / (n-4))`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::hypergraph::FourGraph;
use crate::solver::{AlphaResult, SolveStatus};

use super::BoundError;

#[derive(Clone, Debug, Default, Serialize)]
pub struct TableEntry {
    pub lower: Option<u64>,
    pub upper: Option<u64>,
    pub provenance: Vec<String>,
}

/// Map `(n, k) -> {lower, upper}` bounds on `T(n, k, 4)`.
#[derive(Clone, Debug, Default)]
pub struct TuranValueTable {
    entries: BTreeMap<(u64, u64), TableEntry>,
}

#[derive(Debug, Deserialize)]
pub struct ExternalConstants {
    pub version: u32,
    pub turan_values: Vec<ExternalValue>,
    pub tstar_rows: Vec<ExternalTstarRow>,
}

#[derive(Debug, Deserialize)]
pub struct ExternalValue {
    pub n: u64,
    pub k: u64,
    #[serde(default)]
    pub lower: Option<u64>,
    #[serde(default)]
    pub upper: Option<u64>,
    pub cite: String,
}

#[derive(Debug, Deserialize)]
pub struct ExternalTstarRow {
    pub k: u64,
    pub upper_decimal: String,
    pub cite: String,
}

impl ExternalConstants {
    /// The constants bundled with the crate.
    pub fn bundled() -> Self {
        serde_json::from_str(include_str!("../../data/turan_constants.json"))
            .expect("bundled constants parse")
    }
}

impl TuranValueTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Table seeded with every bundled external constant.
    pub fn with_external_constants() -> Result<Self, BoundError> {
        let mut table = Self::new();
        for row in ExternalConstants::bundled().turan_values {
            if let Some(lo) = row.lower {
                table.insert_lower(row.n, row.k, lo, &row.cite)?;
            }
            if let Some(up) = row.upper {
                table.insert_upper(row.n, row.k, up, &row.cite)?;
            }
        }
        Ok(table)
    }

    pub fn get(&self, n: u64, k: u64) -> Option<&TableEntry> {
        self.entries.get(&(n, k))
    }

    pub fn rows(&self) -> impl Iterator<Item = (&(u64, u64), &TableEntry)> {
        self.entries.iter()
    }

    /// Exact value when lower and upper agree.
    pub fn exact(&self, n: u64, k: u64) -> Option<u64> {
        let e = self.get(n, k)?;
        match (e.lower, e.upper) {
            (Some(l), Some(u)) if l == u => Some(l),
            _ => None,
        }
    }

    /// Merge an upper bound (keeps the minimum). Errors if the entry
    /// would contradict its lower bound.
    pub fn insert_upper(
        &mut self,
        n: u64,
        k: u64,
        value: u64,
        provenance: &str,
    ) -> Result<u64, BoundError> {
        let entry = self.entries.entry((n, k)).or_default();
        if let Some(lo) = entry.lower {
            if value < lo {
                return Err(BoundError::ContradictoryEntry { n, k, lower: lo, upper: value });
            }
        }
        let improved = entry.upper.is_none_or(|u| value < u);
        if improved {
            entry.upper = Some(entry.upper.map_or(value, |u| u.min(value)));
            entry.provenance.push(format!("upper {value}: {provenance}"));
        }
        Ok(entry.upper.unwrap())
    }

    /// Merge a lower bound (keeps the maximum).
    pub fn insert_lower(
        &mut self,
        n: u64,
        k: u64,
        value: u64,
        provenance: &str,
    ) -> Result<u64, BoundError> {
        let entry = self.entries.entry((n, k)).or_default();
        if let Some(up) = entry.upper {
            if value > up {
                return Err(BoundError::ContradictoryEntry { n, k, lower: value, upper: up });
            }
        }
        let improved = entry.lower.is_none_or(|l| value > l);
        if improved {
            entry.lower = Some(entry.lower.map_or(value, |l| l.max(value)));
            entry.provenance.push(format!("lower {value}: {provenance}"));
        }
        Ok(entry.lower.unwrap())
    }
}

/// Record a finite instance: a graph with solver-certified alpha
/// witnesses `T(v, alpha+1, 4) <= e`. The certificate must be Exact.
pub fn density_from_graph(
    table: &mut TuranValueTable,
    h: &FourGraph,
    certificate: &AlphaResult,
    provenance: &str,
) -> Result<(u64, u64), BoundError> {
    if certificate.status != SolveStatus::Exact {
        return Err(BoundError::UncertifiedAlpha);
    }
    let n = h.n() as u64;
    let k = certificate.alpha as u64 + 1;
    table.insert_upper(n, k, h.edge_count() as u64, provenance)?;
    Ok((n, k))
}

/// Lift a lower bound one vertex up:
/// `T(n,k,4) >= ceil(n T(n-1,k,4) / (n-4))`, inserted at `(n, k)`.
pub fn lift_lower(table: &mut TuranValueTable, n: u64, k: u64) -> Result<u64, BoundError> {
    assert!(n >= 5, "lift needs n - 4 > 0");
    let base = table
        .get(n - 1, k)
        .and_then(|e| e.lower)
        .ok_or(BoundError::MissingBaseEntry { n: n - 1, k })?;
    let lifted = (n * base).div_ceil(n - 4);
    table.insert_lower(n, k, lifted, &format!("lifted from T({},{k},4) >= {base}", n - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{Rat, Round};
    use crate::solver::{alpha_exact, SolveBudget};

    #[test]
    fn bundled_constants_load_consistently() {
        let table = TuranValueTable::with_external_constants().unwrap();
        assert_eq!(table.exact(7, 5), Some(7));
        assert_eq!(table.get(17, 5).unwrap().lower, Some(627));
        assert_eq!(table.get(17, 5).unwrap().upper, Some(644));
        for (&(n, k), e) in table.rows() {
            if let (Some(l), Some(u)) = (e.lower, e.upper) {
                assert!(l <= u, "({n},{k})");
            }
        }
    }

    #[test]
    fn exact_entries_have_increasing_ratio() {
        // T(n,k,4)/C(n,4) is nondecreasing in n on exact entries
        let table = TuranValueTable::with_external_constants().unwrap();
        for k in [5u64, 6, 7] {
            let mut prev: Option<Rat> = None;
            for n in 4..=20u64 {
                if let Some(v) = table.exact(n, k) {
                    let ratio = Rat::from_int(v as i64)
                        / Rat::from_bigint(crate::rational::binomial_u128(n, 4).into());
                    if let Some(p) = &prev {
                        assert!(&ratio >= p, "k={k} n={n}");
                    }
                    prev = Some(ratio);
                }
            }
        }
    }

    #[test]
    fn lift_reproduces_chain() {
        let mut table = TuranValueTable::with_external_constants().unwrap();
        let lifted = lift_lower(&mut table, 18, 5).unwrap();
        assert_eq!(lifted, 807);
        // the lifted bound gives t(5,4) >= 807/C(18,4); the rescaled
        // form renders down as 0.703267
        let t = Rat::from_int(807) / Rat::from_int(3060);
        let t_star = Rat::new(4i64.pow(3), 24) * t;
        assert_eq!(t_star, Rat::new(538, 765));
        assert_eq!(t_star.decimal(6, Round::Down), "0.703267");
        // lifting with no base errors
        let mut empty = TuranValueTable::new();
        assert!(matches!(
            lift_lower(&mut empty, 18, 5),
            Err(BoundError::MissingBaseEntry { n: 17, k: 5 })
        ));
        // degenerate base 0 lifts to 0
        empty.insert_lower(9, 5, 0, "test").unwrap();
        assert_eq!(lift_lower(&mut empty, 10, 5).unwrap(), 0);
    }

    #[test]
    fn table_merges_and_rejects_contradictions() {
        let mut t = TuranValueTable::new();
        t.insert_upper(10, 6, 25, "a").unwrap();
        assert_eq!(t.insert_upper(10, 6, 20, "b").unwrap(), 20);
        assert_eq!(t.insert_upper(10, 6, 30, "c").unwrap(), 20);
        t.insert_lower(10, 6, 18, "d").unwrap();
        assert!(matches!(
            t.insert_lower(10, 6, 21, "e"),
            Err(BoundError::ContradictoryEntry { .. })
        ));
    }

    #[test]
    fn constructions_feed_the_table() {
        let mut table = TuranValueTable::new();
        let z = crate::constructions::z2cube_construction();
        let cert = alpha_exact(z.four_graph(), SolveBudget::unbounded());
        assert_eq!(density_from_graph(&mut table, z.four_graph(), &cert, "two-block").unwrap(), (16, 6));
        assert_eq!(table.get(16, 6).unwrap().upper, Some(220));

        let k5 = crate::constructions::k5_line_construction();
        let cert = alpha_exact(k5.four_graph(), SolveBudget::unbounded());
        density_from_graph(&mut table, k5.four_graph(), &cert, "k5 lines").unwrap();
        assert_eq!(table.get(10, 6).unwrap().upper, Some(20));
    }

    #[test]
    fn graph_feeds_table_only_with_exact_certificates() {
        let mut table = TuranValueTable::new();
        let k5 = FourGraph::complete(5);
        let cert = alpha_exact(&k5, SolveBudget::unbounded());
        let (n, k) = density_from_graph(&mut table, &k5, &cert, "complete graph").unwrap();
        assert_eq!((n, k), (5, 4));
        assert_eq!(table.get(5, 4).unwrap().upper, Some(5));

        let mut bogus = cert.clone();
        bogus.status = SolveStatus::LowerBoundOnly;
        assert!(matches!(
            density_from_graph(&mut table, &k5, &bogus, "x"),
            Err(BoundError::UncertifiedAlpha)
        ));
    }
}
