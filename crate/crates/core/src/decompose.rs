//! Centers, prime centers and unique factorization into indecomposables.

use crate::canonical::{canonical_form, ClassId, ClassRegistry};
use crate::coloring::LabelKey;
use crate::error::{HopfError, Result};
use crate::families::boolean_lattice;
use crate::poset::{ElementId, Interval};

/// Elements `a` with a complement `a'` such that `(x, y) -> x ∨ y` is a
/// (color-preserving) isomorphism `[0,a] x [0,a'] -> P`.
pub fn center(p: &Interval) -> Vec<ElementId> {
    center_with_complements(p)
        .into_iter()
        .filter(|(_, partners)| !partners.is_empty())
        .map(|(a, _)| a)
        .collect()
}

/// For every element, all complements realizing a direct splitting.
fn center_with_complements(p: &Interval) -> Vec<(ElementId, Vec<ElementId>)> {
    let (zero, top) = (p.bottom(), p.top());
    let labels = p.coloring().map(|c| c.relative_labels(zero));
    p.elements()
        .map(|a| {
            let partners = p
                .elements()
                .filter(|&b| p.down_set(a).len() * p.down_set(b).len() == p.len())
                .filter(|&b| {
                    splits_directly(p, p.down_set(a), p.down_set(b), top, labels.as_deref())
                })
                .collect();
            (a, partners)
        })
        .collect()
}

/// Some `a'` in `[lo, hi]` such that `(x, y) -> x ∨ y` is a color-preserving
/// isomorphism `[lo,a] x [lo,a'] -> [lo,hi]`, i.e. `a` is in the center of
/// `[lo, hi]`.
pub fn direct_complement(
    p: &Interval,
    lo: ElementId,
    hi: ElementId,
    a: ElementId,
) -> Option<ElementId> {
    let span = |x: ElementId| -> Vec<ElementId> {
        p.down_set(x)
            .iter()
            .copied()
            .filter(|&z| p.leq(lo, z))
            .collect()
    };
    let size = span(hi).len();
    let left = span(a);
    let labels = p.coloring().map(|c| c.relative_labels(lo));
    span(hi)
        .into_iter()
        .filter(|&b| left.len() * span(b).len() == size)
        .find(|&b| splits_directly(p, &left, &span(b), hi, labels.as_deref()))
}

/// `xs x ys -> [lo, hi]` by joins is a bijection preserving and reflecting
/// order, and relative labels add up.
pub(crate) fn splits_directly(
    p: &Interval,
    xs: &[ElementId],
    ys: &[ElementId],
    hi: ElementId,
    labels: Option<&[LabelKey]>,
) -> bool {
    let mut seen = vec![false; p.len()];
    let mut image = Vec::with_capacity(xs.len() * ys.len());
    for &x in xs {
        for &y in ys {
            let Some(z) = p.join_within(x, y, hi) else {
                return false;
            };
            if std::mem::replace(&mut seen[z.0], true) {
                return false;
            }
            if let Some(l) = labels {
                if !adds_up(&l[z.0], &l[x.0], &l[y.0]) {
                    return false;
                }
            }
            image.push((z, x, y));
        }
    }
    image.iter().all(|&(z, x, y)| {
        image
            .iter()
            .all(|&(w, u, v)| p.leq(z, w) == (p.leq(x, u) && p.leq(y, v)))
    })
}

fn adds_up(z: &LabelKey, x: &LabelKey, y: &LabelKey) -> bool {
    let merged = |a: &[u32], b: &[u32]| {
        let mut m = [a, b].concat();
        m.sort_unstable();
        m
    };
    z.0 == merged(&x.0, &y.0) && z.1 == merged(&x.1, &y.1)
}

fn join_meet_tables(p: &Interval) -> Result<(Vec<ElementId>, Vec<ElementId>)> {
    let n = p.len();
    let mut join = vec![ElementId(0); n * n];
    let mut meet = vec![ElementId(0); n * n];
    for x in p.elements() {
        for y in p.elements() {
            join[x.0 * n + y.0] = p.join(x, y).ok_or(HopfError::NotALattice)?;
            meet[x.0 * n + y.0] = p.meet(x, y).ok_or(HopfError::NotALattice)?;
        }
    }
    Ok((join, meet))
}

/// Elements that are distributive and complemented; on lattices this is the
/// center with respect to plain isomorphism.
pub fn center_via_distributivity(p: &Interval) -> Result<Vec<ElementId>> {
    let n = p.len();
    let (join, meet) = join_meet_tables(p)?;
    let j = |x: ElementId, y: ElementId| join[x.0 * n + y.0];
    let m = |x: ElementId, y: ElementId| meet[x.0 * n + y.0];
    let distributive = |a: ElementId| {
        p.elements().all(|x| {
            p.elements().all(|y| {
                m(a, j(x, y)) == j(m(a, x), m(a, y))
                    && m(x, j(a, y)) == j(m(x, a), m(x, y))
                    && j(a, m(x, y)) == m(j(a, x), j(a, y))
                    && j(x, m(a, y)) == m(j(x, a), j(x, y))
            })
        })
    };
    let complemented = |a: ElementId| {
        p.elements()
            .any(|b| j(a, b) == p.top() && m(a, b) == p.bottom())
    };
    Ok(p.elements()
        .filter(|&a| distributive(a) && complemented(a))
        .collect())
}

/// Minimal nonzero elements of the center.
pub fn prime_center(p: &Interval) -> Vec<ElementId> {
    minimal_nonzero(p, &center(p))
}

fn minimal_nonzero(p: &Interval, set: &[ElementId]) -> Vec<ElementId> {
    let nonzero: Vec<ElementId> = set.iter().copied().filter(|&a| a != p.bottom()).collect();
    nonzero
        .iter()
        .copied()
        .filter(|&a| !nonzero.iter().any(|&b| b != a && p.leq(b, a)))
        .collect()
}

pub fn is_decomposable(p: &Interval) -> bool {
    prime_center(p).len() > 1
}

/// `P ≅ ∏ [0,a]` over the prime center, each factor indecomposable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<(ClassId, ElementId)>,
    /// The product of the factor representatives was verified to be `≅ P`.
    pub complete: bool,
}

impl Factorization {
    pub fn class_ids(&self) -> Vec<ClassId> {
        let mut ids: Vec<ClassId> = self.factors.iter().map(|(id, _)| *id).collect();
        ids.sort_unstable();
        ids
    }
}

pub fn factor_indecomposable(p: &Interval, registry: &ClassRegistry) -> Factorization {
    if p.is_singleton() {
        return Factorization {
            factors: Vec::new(),
            complete: true,
        };
    }
    let zero = p.bottom();
    let primes = prime_center(p);
    let mut product = Interval::singleton();
    let mut factors = Vec::with_capacity(primes.len());
    for a in primes {
        let lower = p.subinterval(zero, a).expect("0 <= a");
        factors.push((registry.register_class(&lower), a));
        product = product.cartesian_product(&lower).into_interval();
    }
    factors.sort();
    Factorization {
        factors,
        complete: canonical_form(&product) == canonical_form(p),
    }
}

/// Outcome of the structural checks on the center of one interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterReport {
    /// Center elements have joins and meets with everything, and
    /// `z -> (z ∧ a, z ∨ a)` is an isomorphism onto `[0,a] x [a,1]`.
    pub splits: bool,
    /// Each center element has exactly one complement in the center, and it
    /// realizes the factorization.
    pub unique_complements: bool,
    /// The center is a sublattice isomorphic to a Boolean lattice.
    pub boolean: bool,
    /// Prime center = center elements with indecomposable lower interval.
    pub prime_is_indecomposable: bool,
    /// The prime center factorization reproduces `P`.
    pub factorization: bool,
}

impl CenterReport {
    pub fn all(&self) -> bool {
        self.splits
            && self.unique_complements
            && self.boolean
            && self.prime_is_indecomposable
            && self.factorization
    }
}

pub fn center_report(p: &Interval, registry: &ClassRegistry) -> CenterReport {
    let complements = center_with_complements(p);
    let z: Vec<ElementId> = complements
        .iter()
        .filter(|(_, c)| !c.is_empty())
        .map(|(a, _)| *a)
        .collect();
    let in_z = |x: ElementId| z.contains(&x);

    let splits = z.iter().all(|&a| splits_at(p, a));

    let unique_complements = z.iter().all(|&b| {
        let comps: Vec<ElementId> = z
            .iter()
            .copied()
            .filter(|&c| p.join(b, c) == Some(p.top()) && p.meet(b, c) == Some(p.bottom()))
            .collect();
        comps.len() == 1 && complements[b.0].1.contains(&comps[0])
    });

    let closed = z.iter().all(|&a| {
        z.iter()
            .all(|&b| p.join(a, b).is_some_and(in_z) && p.meet(a, b).is_some_and(in_z))
    });
    let primes = minimal_nonzero(p, &z);
    let boolean = closed && {
        let sub = p.induced(&z);
        crate::canonical::are_equivalent(&strip(&sub), &boolean_lattice(primes.len()))
    };

    let prime_is_indecomposable = z.iter().all(|&a| {
        let lower = p.subinterval(p.bottom(), a).expect("0 <= a");
        let indecomposable = !lower.is_singleton() && !is_decomposable(&lower);
        primes.contains(&a) == indecomposable
    });

    let factorization = factor_indecomposable(p, registry).complete;

    CenterReport {
        splits,
        unique_complements,
        boolean,
        prime_is_indecomposable,
        factorization,
    }
}

fn strip(p: &Interval) -> Interval {
    Interval::from_flat_unchecked(p.names().to_vec(), flat(p), None)
}

fn flat(p: &Interval) -> Vec<bool> {
    p.leq_table().into_iter().flatten().collect()
}

fn splits_at(p: &Interval, a: ElementId) -> bool {
    let mut image = Vec::with_capacity(p.len());
    for z in p.elements() {
        match (p.meet(z, a), p.join(z, a)) {
            (Some(m), Some(j)) => image.push((m, j)),
            _ => return false,
        }
    }
    let target = p.down_set(a).len() * p.up_set(a).len();
    let mut distinct = image.clone();
    distinct.sort();
    distinct.dedup();
    if distinct.len() != p.len() || target != p.len() {
        return false;
    }
    p.elements().all(|x| {
        p.elements().all(|y| {
            let (mx, jx) = image[x.0];
            let (my, jy) = image[y.0];
            p.leq(x, y) == (p.leq(mx, my) && p.leq(jx, jy))
        })
    })
}
