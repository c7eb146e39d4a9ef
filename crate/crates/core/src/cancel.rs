//! Super-upper-indecomposability and cancellation in the forest formula.
//!
//! An indecomposable interval is upper-indecomposable when every `[x, 1]`
//! with `x < 1` is indecomposable, and s.u.i. when every indecomposable
//! subinterval is upper-indecomposable. For indecomposable `P` the forest
//! expansion of `χ(P)` is cancellation-free exactly when `P` is s.u.i.

use std::collections::{BTreeMap, BTreeSet};

use crate::canonical::{ClassId, ClassRegistry};
use crate::error::{HopfError, Result};
use crate::forest::{forest_terms, Forest, ForestMode};
use crate::hopf::{Incidence, Monomial};
use crate::poset::{ElementId, Interval};

fn indecomposable(inc: &Incidence<'_>, x: ElementId, y: ElementId) -> bool {
    inc.monomial(x, y).degree() == 1
}

fn require_indecomposable(inc: &Incidence<'_>) -> Result<()> {
    if inc.whole().degree() > 1 {
        return Err(HopfError::InputDecomposable);
    }
    Ok(())
}

/// First `x < y` in `[lo, y]` with `[x, y]` decomposable.
fn upper_split(inc: &Incidence<'_>, lo: ElementId, y: ElementId) -> Option<ElementId> {
    let p = inc.interval();
    p.up_set(lo)
        .iter()
        .copied()
        .find(|&x| p.lt(x, y) && !indecomposable(inc, x, y))
}

pub fn is_upper_indecomposable(inc: &Incidence<'_>) -> Result<bool> {
    require_indecomposable(inc)?;
    let p = inc.interval();
    Ok(upper_split(inc, p.bottom(), p.top()).is_none())
}

/// A subinterval `[lower, upper]` that is indecomposable while
/// `[split, upper]` is not.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiWitness {
    pub lower: ElementId,
    pub upper: ElementId,
    pub split: ElementId,
}

/// Scans every subinterval.
pub fn sui_witness(inc: &Incidence<'_>) -> Option<SuiWitness> {
    let p = inc.interval();
    for lower in p.elements() {
        for &upper in p.up_set(lower) {
            if indecomposable(inc, lower, upper) {
                if let Some(split) = upper_split(inc, lower, upper) {
                    return Some(SuiWitness {
                        lower,
                        upper,
                        split,
                    });
                }
            }
        }
    }
    None
}

pub fn is_sui(inc: &Incidence<'_>) -> Result<bool> {
    require_indecomposable(inc)?;
    Ok(sui_witness(inc).is_none())
}

/// Only lower intervals `[0, x]` are inspected.
pub fn is_sui_via_lower_intervals(inc: &Incidence<'_>) -> Result<bool> {
    require_indecomposable(inc)?;
    let p = inc.interval();
    Ok(p.elements()
        .all(|x| !indecomposable(inc, p.bottom(), x) || upper_split(inc, p.bottom(), x).is_none()))
}

/// Forests grouped by the monomial of `Θ(F)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CancellationReport {
    pub groups: BTreeMap<Monomial, Vec<(Forest, i64)>>,
}

impl CancellationReport {
    pub fn is_cancellation_free(&self) -> bool {
        self.canceling_groups().next().is_none()
    }

    pub fn canceling_groups(&self) -> impl Iterator<Item = (&Monomial, &[(Forest, i64)])> {
        self.groups.iter().filter_map(|(m, members)| {
            let mixed = members.iter().any(|t| t.1 > 0) && members.iter().any(|t| t.1 < 0);
            mixed.then_some((m, members.as_slice()))
        })
    }

    /// Opposite-sign pairs, the smaller forest first.
    pub fn canceling_pairs(&self) -> Vec<(&Forest, &Forest)> {
        let mut out = Vec::new();
        for (_, members) in self.canceling_groups() {
            for (f, s) in members.iter().filter(|t| t.1 > 0) {
                for (g, _) in members.iter().filter(|t| t.1 != *s) {
                    out.push(if (f.len(), f) <= (g.len(), g) {
                        (f, g)
                    } else {
                        (g, f)
                    });
                }
            }
        }
        out.sort();
        out
    }

    pub fn forest_count(&self) -> usize {
        self.groups.values().map(Vec::len).sum()
    }
}

pub fn cancellation_report(inc: &Incidence<'_>, mode: ForestMode) -> Result<CancellationReport> {
    let mut groups: BTreeMap<Monomial, Vec<(Forest, i64)>> = BTreeMap::new();
    for t in forest_terms(inc, mode)? {
        groups.entry(t.theta).or_default().push((t.forest, t.sign));
    }
    Ok(CancellationReport { groups })
}

/// An indecomposable subinterval of a generator that is not
/// upper-indecomposable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyWitness {
    pub generator: usize,
    pub class: ClassId,
    pub sui: SuiWitness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    /// Distinct indecomposable classes met among the subintervals.
    pub classes_checked: usize,
    pub witness: Option<FamilyWitness>,
}

impl FamilyReport {
    pub fn upper_indecomposable(&self) -> bool {
        self.witness.is_none()
    }
}

/// Checks upper-indecomposability of every indecomposable subinterval of
/// every generator. Factors of products are themselves subintervals, so this
/// covers the closure under subintervals and factorization.
pub fn family_upper_indecomposable(
    generators: &[Interval],
    registry: &ClassRegistry,
) -> FamilyReport {
    let mut seen: BTreeSet<ClassId> = BTreeSet::new();
    let mut witness = None;
    for (g, p) in generators.iter().enumerate() {
        let inc = Incidence::new(p, registry);
        for lower in p.elements() {
            for &upper in p.up_set(lower) {
                if !indecomposable(&inc, lower, upper) {
                    continue;
                }
                let class = inc.monomial(lower, upper).factors()[0];
                if !seen.insert(class) {
                    continue;
                }
                if witness.is_none() {
                    if let Some(split) = upper_split(&inc, lower, upper) {
                        witness = Some(FamilyWitness {
                            generator: g,
                            class,
                            sui: SuiWitness {
                                lower,
                                upper,
                                split,
                            },
                        });
                    }
                }
            }
        }
    }
    FamilyReport {
        classes_checked: seen.len(),
        witness,
    }
}
