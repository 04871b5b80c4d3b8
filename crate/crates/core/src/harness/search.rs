//! Bounded search for a semipure poset whose rank selections `P_S` are all
//! sequentially acyclic although `P` is not sequentially Cohen–Macaulay.
//!
//! Layered posets are enumerated exhaustively by size; if that finds nothing
//! a seeded random phase follows. Every hit is verified twice, by the
//! interval route and by the link route on the order complex.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::harness::enumerate::for_each_layered_poset;
use crate::harness::generate::{derive_seed, generate_semipure_poset, rng};
use crate::homology::Coefficient;
use crate::poset::FinitePoset;
use crate::scm::{Checker, RankLevel, RankSetMode, ScmVerdict};

use rand::Rng;

const STREAM_SEARCH: u64 = 11;

#[derive(Clone, Debug, Serialize)]
pub struct SearchBounds {
    pub max_elements: usize,
    /// Longest chain length, i.e. at most `max_length + 1` layers.
    pub max_length: usize,
    /// Random candidates tried after an unsuccessful exhaustive phase.
    pub random_samples: usize,
    pub coefficient: Coefficient,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds { max_elements: 10, max_length: 3, random_samples: 2000, coefficient: Coefficient::Rationals }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchOutcome {
    Found,
    /// Every candidate within the bounds was examined without a hit.
    ExhaustedBounds,
    BudgetExhausted,
}

/// The independent confirmations attached to a hit.
#[derive(Clone, Debug, Serialize)]
pub struct Verification {
    pub rank_selections: ScmVerdict,
    pub rank_layers: ScmVerdict,
    pub intervals: ScmVerdict,
    pub links: ScmVerdict,
}

impl Verification {
    pub fn confirmed(&self) -> bool {
        self.rank_selections.verdict && !self.rank_layers.verdict && !self.intervals.verdict && !self.links.verdict
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub tool_version: &'static str,
    pub bounds: SearchBounds,
    pub seed: u64,
    pub outcome: SearchOutcome,
    /// Exhaustive candidates examined, by element count.
    pub examined: BTreeMap<usize, usize>,
    pub random_examined: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub poset: Option<FinitePoset>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<Verification>,
}

/// `Some(true)` for a confirmed hit; prunes on the cheapest failing check.
fn is_hit(ch: &Checker, p: &FinitePoset) -> Result<bool> {
    if !ch.is_sequentially_acyclic(&p.order_complex())?.verdict {
        return Ok(false);
    }
    if ch.semipure_is_scm_rankgen(p)?.verdict {
        return Ok(false);
    }
    Ok(ch.rank_selection_profile(p, RankSetMode::AllSubsets, RankLevel::Whole)?.verdict)
}

pub fn verify(ch: &Checker, p: &FinitePoset) -> Result<Verification> {
    Ok(Verification {
        rank_selections: ch.rank_selection_profile(p, RankSetMode::AllSubsets, RankLevel::Whole)?,
        rank_layers: ch.semipure_is_scm_rankgen(p)?,
        intervals: ch.poset_is_scm_intervals(p)?,
        links: ch.is_scm_links(&p.order_complex())?,
    })
}

pub fn search_counterexample(bounds: &SearchBounds, seed: u64, deadline: Option<Instant>) -> SearchReport {
    let ch = Checker::with_deadline(bounds.coefficient, deadline);
    let mut report = SearchReport {
        tool_version: env!("CARGO_PKG_VERSION"),
        bounds: bounds.clone(),
        seed,
        outcome: SearchOutcome::ExhaustedBounds,
        examined: BTreeMap::new(),
        random_examined: 0,
        poset: None,
        verification: None,
    };
    let mut hit: Option<FinitePoset> = None;
    let mut failure: Option<Error> = None;
    for m in 1..=bounds.max_elements {
        let mut count = 0;
        for_each_layered_poset(m, bounds.max_length, &mut |p| {
            count += 1;
            match is_hit(&ch, &p) {
                Ok(true) => {
                    hit = Some(p);
                    false
                }
                Ok(false) => true,
                Err(e) => {
                    failure = Some(e);
                    false
                }
            }
        });
        report.examined.insert(m, count);
        if hit.is_some() || failure.is_some() {
            break;
        }
    }
    if hit.is_none() && failure.is_none() {
        for i in 0..bounds.random_samples as u64 {
            let s = derive_seed(seed, STREAM_SEARCH, i);
            let m = rng(s).gen_range(1..=bounds.max_elements);
            let Ok(p) = generate_semipure_poset(m, s) else { continue };
            report.random_examined += 1;
            match is_hit(&ch, &p) {
                Ok(true) => {
                    hit = Some(p);
                    break;
                }
                Ok(false) => {}
                Err(e) => {
                    failure = Some(e);
                    break;
                }
            }
        }
    }
    if failure.is_some() {
        report.outcome = SearchOutcome::BudgetExhausted;
        return report;
    }
    if let Some(p) = hit {
        match verify(&ch, &p) {
            Ok(v) if v.confirmed() => {
                report.outcome = SearchOutcome::Found;
                report.poset = Some(p);
                report.verification = Some(v);
            }
            Ok(_) => unreachable!("hit failed double verification"),
            Err(_) => report.outcome = SearchOutcome::BudgetExhausted,
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_bounds_are_exhausted() {
        let b = SearchBounds { max_elements: 4, random_samples: 50, ..SearchBounds::default() };
        let r = search_counterexample(&b, 0, None);
        assert_eq!(r.outcome, SearchOutcome::ExhaustedBounds);
        assert!(r.poset.is_none());
        assert_eq!(r.random_examined, 50);
    }
}
