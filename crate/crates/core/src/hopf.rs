//! The incidence Hopf algebra: monomials over indecomposable classes,
//! coproduct, counit, convolution and the alternating chain sum.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::canonical::{canonical_form, CanonicalForm, ClassId, ClassRegistry};
use crate::decompose::splits_directly;
use crate::error::{HopfError, Result};
use crate::poset::{Chain, ElementId, Interval};

/// Sorted multiset of indecomposable classes; the empty monomial is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<ClassId>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn single(id: ClassId) -> Self {
        Monomial(vec![id])
    }

    pub fn from_factors(mut factors: Vec<ClassId>) -> Self {
        factors.sort_unstable();
        Monomial(factors)
    }

    pub fn factors(&self) -> &[ClassId] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiset union.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i] <= b[j] {
                out.push(a[i]);
                i += 1;
            } else {
                out.push(b[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `(class, exponent)` pairs in increasing class order.
    pub fn powers(&self) -> Vec<(ClassId, usize)> {
        let mut out: Vec<(ClassId, usize)> = Vec::new();
        for &id in &self.0 {
            match out.last_mut() {
                Some((last, k)) if *last == id => *k += 1,
                _ => out.push((id, 1)),
            }
        }
        out
    }

    pub fn format_with(&self, name: &dyn Fn(ClassId) -> String) -> String {
        if self.is_unit() {
            return "1".to_string();
        }
        self.powers()
            .into_iter()
            .map(|(id, k)| {
                if k == 1 {
                    name(id)
                } else {
                    format!("{}^{k}", name(id))
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.0.len(), &self.0).cmp(&(other.0.len(), &other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Integer linear combination of monomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HopfElement {
    terms: BTreeMap<Monomial, BigInt>,
}

impl HopfElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_monomial(Monomial::unit())
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut e = Self::zero();
        e.add_term(m, BigInt::one());
        e
    }

    pub fn add_term(&mut self, m: Monomial, c: impl Into<BigInt>) {
        let c = c.into();
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.is_empty()
    }

    /// Image under the character sending every class to 1.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Human-readable form such as `-X2 + X1^2`; the first term carries its
    /// sign without a space.
    pub fn format_with(&self, name: &dyn Fn(ClassId) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { '-' } else { '+' };
            if i == 0 {
                out.push(sign);
            } else {
                let _ = write!(out, " {sign} ");
            }
            let abs = c.abs();
            if m.is_unit() {
                let _ = write!(out, "{abs}");
            } else if abs.is_one() {
                out.push_str(&m.format_with(name));
            } else {
                let _ = write!(out, "{abs}*{}", m.format_with(name));
            }
        }
        out
    }
}

impl FromIterator<(Monomial, BigInt)> for HopfElement {
    fn from_iter<I: IntoIterator<Item = (Monomial, BigInt)>>(iter: I) -> Self {
        let mut e = HopfElement::zero();
        for (m, c) in iter {
            e.add_term(m, c);
        }
        e
    }
}

impl Add for &HopfElement {
    type Output = HopfElement;
    fn add(self, rhs: &HopfElement) -> HopfElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &HopfElement {
    type Output = HopfElement;
    fn sub(self, rhs: &HopfElement) -> HopfElement {
        self + &(-rhs)
    }
}

impl Neg for &HopfElement {
    type Output = HopfElement;
    fn neg(self) -> HopfElement {
        HopfElement {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &HopfElement {
    type Output = HopfElement;
    fn mul(self, rhs: &HopfElement) -> HopfElement {
        let mut out = HopfElement::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }
}

/// Integer linear combination of `left ⊗ right` monomial pairs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorElement {
    terms: BTreeMap<(Monomial, Monomial), BigInt>,
}

impl TensorElement {
    pub fn add_term(&mut self, left: Monomial, right: Monomial, c: impl Into<BigInt>) {
        let c = c.into();
        if c.is_zero() {
            return;
        }
        let key = (left, right);
        let slot = self.terms.entry(key.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coefficient(&self, left: &Monomial, right: &Monomial) -> BigInt {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, Monomial), &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl Mul for &TensorElement {
    type Output = TensorElement;
    fn mul(self, rhs: &TensorElement) -> TensorElement {
        let mut out = TensorElement::default();
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &rhs.terms {
                out.add_term(a.mul(c), b.mul(d), x * y);
            }
        }
        out
    }
}

/// Factors `p` into indecomposable classes, registering new ones.
pub fn class_monomial(p: &Interval, registry: &ClassRegistry) -> Monomial {
    if p.is_singleton() {
        return Monomial::unit();
    }
    let form = canonical_form(p);
    class_monomial_with_form(p, form, registry)
}

fn class_monomial_with_form(
    p: &Interval,
    form: CanonicalForm,
    registry: &ClassRegistry,
) -> Monomial {
    if let Some(m) = registry.cached_monomial(&form) {
        return m;
    }
    let m = match split_point(p, &form) {
        Some(a) => {
            let lower = p.subinterval(p.bottom(), a).expect("bottom <= a");
            let upper = p.subinterval(a, p.top()).expect("a <= top");
            class_monomial(&lower, registry).mul(&class_monomial(&upper, registry))
        }
        None => Monomial::single(registry.register_with_form(form.clone(), p)),
    };
    registry.store_monomial(form, m.clone());
    m
}

/// Some `a` strictly inside `p` with `p ≅ [0,a] x [a,1]`. Every nontrivial
/// center element qualifies, so `None` means `p` is indecomposable.
fn split_point(p: &Interval, form: &CanonicalForm) -> Option<ElementId> {
    let n = p.len();
    p.elements()
        .filter(|&a| a != p.bottom() && a != p.top())
        .filter(|&a| p.down_set(a).len() * p.up_set(a).len() == n)
        .find(|&a| {
            let lower = p.subinterval(p.bottom(), a).expect("bottom <= a");
            let upper = p.subinterval(a, p.top()).expect("a <= top");
            let product = lower.cartesian_product(&upper).into_interval();
            canonical_form(&product) == *form
        })
}

pub fn counit(p: &Interval) -> i64 {
    i64::from(p.is_singleton())
}

/// `δ(P) = Σ_x [0,x] ⊗ [x,1]`.
pub fn coproduct(p: &Interval, registry: &ClassRegistry) -> TensorElement {
    let mut out = TensorElement::default();
    for x in p.elements() {
        let lower = p.subinterval(p.bottom(), x).expect("bottom <= x");
        let upper = p.subinterval(x, p.top()).expect("x <= top");
        out.add_term(
            class_monomial(&lower, registry),
            class_monomial(&upper, registry),
            1,
        );
    }
    out
}

/// Coproduct of a monomial, computed multiplicatively from class
/// representatives.
pub fn coproduct_of_monomial(m: &Monomial, registry: &ClassRegistry) -> TensorElement {
    let mut out = TensorElement::default();
    out.add_term(Monomial::unit(), Monomial::unit(), 1);
    for &id in m.factors() {
        out = &out * &coproduct(&registry.representative(id), registry);
    }
    out
}

/// Checks `(δ ⊗ id) δ(P) = (id ⊗ δ) δ(P)`.
pub fn coassociativity_holds(p: &Interval, registry: &ClassRegistry) -> bool {
    type Triple = BTreeMap<(Monomial, Monomial, Monomial), BigInt>;
    fn add(t: &mut Triple, key: (Monomial, Monomial, Monomial), c: BigInt) {
        *t.entry(key).or_default() += c;
    }
    let delta = coproduct(p, registry);
    let mut left = Triple::new();
    let mut right = Triple::new();
    for ((a, b), c) in delta.terms() {
        for ((x, y), d) in coproduct_of_monomial(a, registry).terms() {
            add(&mut left, (x.clone(), y.clone(), b.clone()), c * d);
        }
        for ((x, y), d) in coproduct_of_monomial(b, registry).terms() {
            add(&mut right, (a.clone(), x.clone(), y.clone()), c * d);
        }
    }
    left.retain(|_, v| !v.is_zero());
    right.retain(|_, v| !v.is_zero());
    left == right
}

/// `Ω(C) = ∏ [c_{i-1}, c_i]`.
pub fn omega(chain: &Chain, p: &Interval, registry: &ClassRegistry) -> Result<Monomial> {
    if !p.is_chain(chain) {
        return Err(HopfError::ChainNotInInterval);
    }
    Ok(chain.links().fold(Monomial::unit(), |acc, (x, y)| {
        let link = p.subinterval(x, y).expect("chain links are comparable");
        acc.mul(&class_monomial(&link, registry))
    }))
}

/// Antipode by the alternating sum over all chains.
pub fn antipode_chains(p: &Interval, registry: &ClassRegistry) -> HopfElement {
    Incidence::new(p, registry).antipode_chains()
}

/// `(f * g)(P) = Σ_x f([0,x]) g([x,1])`.
pub fn convolve<F, G>(p: &Interval, f: F, g: G) -> HopfElement
where
    F: Fn(&Interval) -> HopfElement,
    G: Fn(&Interval) -> HopfElement,
{
    let mut out = HopfElement::zero();
    for x in p.elements() {
        let lower = p.subinterval(p.bottom(), x).expect("bottom <= x");
        let upper = p.subinterval(x, p.top()).expect("x <= top");
        out = &out + &(&f(&lower) * &g(&upper));
    }
    out
}

/// Checks `Σ_x χ([0,x]) [x,1] = ε(P) 1`.
pub fn antipode_axiom_check(p: &Interval, registry: &ClassRegistry) -> bool {
    let lhs = convolve(
        p,
        |q| antipode_chains(q, registry),
        |q| HopfElement::from_monomial(class_monomial(q, registry)),
    );
    let mut rhs = HopfElement::zero();
    rhs.add_term(Monomial::unit(), counit(p));
    lhs == rhs
}

/// `μ(0,1)` as the signed chain count `Σ_C (-1)^{ℓ(C)}`.
pub fn evaluate_mobius(p: &Interval) -> i64 {
    let mut total = 0i64;
    p.for_each_chain(|c| {
        total += if c.len() % 2 == 1 { 1 } else { -1 };
    });
    total
}

/// `μ(0,1)` by the recursion `μ(0,0) = 1`, `Σ_{z <= y} μ(0,z) = 0`.
pub fn mobius_recursive(p: &Interval) -> i64 {
    let mut order: Vec<ElementId> = p.elements().collect();
    order.sort_by_key(|&x| p.down_set(x).len());
    let mut mu = vec![0i64; p.len()];
    for y in order {
        mu[y.0] = if y == p.bottom() {
            1
        } else {
            -p.down_set(y)
                .iter()
                .filter(|&&z| z != y)
                .map(|z| mu[z.0])
                .sum::<i64>()
        };
    }
    mu[p.top().0]
}

/// An interval together with the class monomials of all its subintervals.
pub struct Incidence<'a> {
    interval: &'a Interval,
    registry: &'a ClassRegistry,
    monomials: Vec<Option<Monomial>>,
    lower_prime: Vec<OnceLock<Vec<ElementId>>>,
}

impl<'a> Incidence<'a> {
    pub fn new(interval: &'a Interval, registry: &'a ClassRegistry) -> Self {
        let n = interval.len();
        let rows: Vec<Vec<(usize, Monomial)>> = (0..n)
            .into_par_iter()
            .map(|x| {
                let x = ElementId(x);
                interval
                    .up_set(x)
                    .iter()
                    .map(|&y| {
                        let sub = interval.subinterval(x, y).expect("x <= y");
                        (y.0, class_monomial(&sub, registry))
                    })
                    .collect()
            })
            .collect();
        let mut monomials = vec![None; n * n];
        for (x, row) in rows.into_iter().enumerate() {
            for (y, m) in row {
                monomials[x * n + y] = Some(m);
            }
        }
        Incidence {
            interval,
            registry,
            monomials,
            lower_prime: (0..n).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn interval(&self) -> &'a Interval {
        self.interval
    }

    pub fn registry(&self) -> &'a ClassRegistry {
        self.registry
    }

    /// Class monomial of `[x, y]`. Panics unless `x <= y`.
    pub fn monomial(&self, x: ElementId, y: ElementId) -> &Monomial {
        self.monomials[x.0 * self.interval.len() + y.0]
            .as_ref()
            .unwrap_or_else(|| panic!("{x} is not below {y}"))
    }

    pub fn whole(&self) -> &Monomial {
        self.monomial(self.interval.bottom(), self.interval.top())
    }

    /// `[0, x]` is indecomposable (and not a singleton).
    pub fn is_lower_indecomposable(&self, x: ElementId) -> bool {
        self.monomial(self.interval.bottom(), x).degree() == 1
    }

    /// `I(P)`: elements with indecomposable lower interval.
    pub fn indecomposable_elements(&self) -> Vec<ElementId> {
        self.interval
            .elements()
            .filter(|&x| self.is_lower_indecomposable(x))
            .collect()
    }

    /// Center of `[0, c]`; the monomial table filters candidate complements
    /// before the direct splitting check.
    pub fn lower_center(&self, c: ElementId) -> Vec<ElementId> {
        let p = self.interval;
        let zero = p.bottom();
        let target = self.monomial(zero, c);
        let below = p.down_set(c);
        let labels = p.coloring().map(|col| col.relative_labels(zero));
        below
            .iter()
            .copied()
            .filter(|&a| {
                let ma = self.monomial(zero, a);
                below.iter().any(|&b| {
                    let mb = self.monomial(zero, b);
                    ma.degree() + mb.degree() == target.degree()
                        && &ma.mul(mb) == target
                        && splits_directly(p, p.down_set(a), p.down_set(b), c, labels.as_deref())
                })
            })
            .collect()
    }

    /// Prime center of `[0, c]`: minimal nonzero elements of its center.
    pub fn lower_prime_center(&self, c: ElementId) -> &[ElementId] {
        self.lower_prime[c.0].get_or_init(|| {
            let p = self.interval;
            let center: Vec<ElementId> = self
                .lower_center(c)
                .into_iter()
                .filter(|&a| a != p.bottom())
                .collect();
            center
                .iter()
                .copied()
                .filter(|&a| !center.iter().any(|&b| b != a && p.leq(b, a)))
                .collect()
        })
    }

    pub fn omega(&self, chain: &Chain) -> Result<Monomial> {
        if !self.interval.is_chain(chain) {
            return Err(HopfError::ChainNotInInterval);
        }
        Ok(chain
            .links()
            .fold(Monomial::unit(), |acc, (x, y)| acc.mul(self.monomial(x, y))))
    }

    pub fn antipode_chains(&self) -> HopfElement {
        let p = self.interval;
        if p.is_singleton() {
            return HopfElement::one();
        }
        let bottom = p.bottom();
        let firsts: Vec<ElementId> = p
            .up_set(bottom)
            .iter()
            .copied()
            .filter(|&x| x != bottom)
            .collect();
        let partial: Vec<HashMap<Monomial, i128>> = firsts
            .par_iter()
            .map(|&c1| {
                let mut acc = HashMap::new();
                self.chain_terms(c1, self.monomial(bottom, c1).clone(), -1, &mut acc);
                acc
            })
            .collect();
        let mut total: BTreeMap<Monomial, i128> = BTreeMap::new();
        for acc in partial {
            for (m, c) in acc {
                let slot = total.entry(m).or_insert(0);
                *slot = slot.checked_add(c).expect("chain sum overflow");
            }
        }
        total
            .into_iter()
            .map(|(m, c)| (m, BigInt::from(c)))
            .collect()
    }

    fn chain_terms(
        &self,
        cur: ElementId,
        m: Monomial,
        sign: i128,
        acc: &mut HashMap<Monomial, i128>,
    ) {
        let top = self.interval.top();
        if cur == top {
            *acc.entry(m).or_insert(0) += sign;
            return;
        }
        for &next in self.interval.up_set(cur) {
            if next != cur {
                self.chain_terms(next, m.mul(self.monomial(cur, next)), -sign, acc);
            }
        }
    }
}
