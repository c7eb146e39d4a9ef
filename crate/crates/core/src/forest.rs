//! Forests of intervals, Θ, the chain-to-forest map, filtrations and the
//! forest formula for the antipode.
//!
//! A lattice forest is a set `F` of elements with indecomposable lower
//! intervals, `⋁F ≠ 1`, pairwise comparable or meeting in `0`, such that
//! every antichain `S ⊆ F` has `∏_{b∈S} [0,b] ≅ [0,⋁S]`. A poset forest
//! replaces joins by an explicit map `J` from subsets of `F` to `P ∖ {1}`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use crate::canonical::ClassRegistry;
use crate::error::{HopfError, Result};
use crate::hopf::{HopfElement, Incidence, Monomial};
use crate::poset::{Chain, ElementId, Interval};

/// Which forest definition to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ForestMode {
    /// Joins play the role of `J`; requires a lattice.
    Lattice,
    /// Explicit `J` maps, valid for any interval.
    Poset,
}

impl ForestMode {
    pub fn for_interval(p: &Interval) -> Self {
        if p.is_lattice() {
            ForestMode::Lattice
        } else {
            ForestMode::Poset
        }
    }
}

/// Values of `J` indexed by bitmask over the forest's sorted nodes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JMap {
    values: Vec<ElementId>,
}

impl JMap {
    pub fn from_values(values: Vec<ElementId>) -> Self {
        assert!(values.len().is_power_of_two(), "one value per subset");
        JMap { values }
    }

    pub fn get(&self, mask: usize) -> ElementId {
        self.values[mask]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, ElementId)> + '_ {
        self.values.iter().copied().enumerate()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Forest {
    nodes: Vec<ElementId>,
    jmap: Option<JMap>,
}

impl Forest {
    pub fn new(mut nodes: Vec<ElementId>) -> Self {
        nodes.sort_unstable();
        nodes.dedup();
        Forest { nodes, jmap: None }
    }

    /// `nodes` must be sorted; `jmap` is indexed by masks over them.
    pub fn with_jmap(nodes: Vec<ElementId>, jmap: JMap) -> Self {
        assert!(
            nodes.windows(2).all(|w| w[0] < w[1]),
            "nodes must be sorted"
        );
        assert_eq!(jmap.values.len(), 1 << nodes.len());
        Forest {
            nodes,
            jmap: Some(jmap),
        }
    }

    pub fn nodes(&self) -> &[ElementId] {
        &self.nodes
    }

    pub fn jmap(&self) -> Option<&JMap> {
        self.jmap.as_ref()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, x: ElementId) -> bool {
        self.nodes.binary_search(&x).is_ok()
    }

    pub fn mask_of(&self, subset: &[ElementId]) -> usize {
        subset.iter().fold(0, |m, x| {
            m | 1 << self.nodes.binary_search(x).expect("element of the forest")
        })
    }

    pub fn subset(&self, mask: usize) -> Vec<ElementId> {
        bits(mask).map(|i| self.nodes[i]).collect()
    }

    /// `J(subset)`: the explicit map if present, otherwise the join.
    pub fn j(&self, p: &Interval, subset: &[ElementId]) -> Option<ElementId> {
        match &self.jmap {
            Some(m) => Some(m.get(self.mask_of(subset))),
            None => p.join_all(subset),
        }
    }

    /// Maximal forest elements strictly below `b`.
    pub fn predecessors(&self, p: &Interval, b: ElementId) -> Vec<ElementId> {
        let below: Vec<ElementId> = self.nodes.iter().copied().filter(|&a| p.lt(a, b)).collect();
        maximal(p, &below)
    }

    pub fn names(&self, p: &Interval) -> Vec<String> {
        self.nodes.iter().map(|&x| p.name(x).to_string()).collect()
    }

    /// Drops the J-map (used to compare with lattice forests).
    pub fn without_jmap(&self) -> Forest {
        Forest::new(self.nodes.clone())
    }
}

fn bits(mask: usize) -> impl Iterator<Item = usize> {
    (0..usize::BITS as usize).filter(move |i| mask >> i & 1 == 1)
}

/// Maximal elements of `set`, in the order given.
pub fn maximal(p: &Interval, set: &[ElementId]) -> Vec<ElementId> {
    set.iter()
        .copied()
        .filter(|&a| !set.iter().any(|&b| p.lt(a, b)))
        .collect()
}

/// `d(F) = |F| + 1`.
pub fn sign_degree(f: &Forest) -> usize {
    f.len() + 1
}

fn sign_of(f: &Forest) -> i64 {
    if sign_degree(f).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn product_of_lowers(inc: &Incidence<'_>, set: &[ElementId]) -> Monomial {
    let zero = inc.interval().bottom();
    set.iter()
        .fold(Monomial::unit(), |m, &b| m.mul(inc.monomial(zero, b)))
}

/// Candidate forest elements: `I(P)` without the top.
fn candidates(inc: &Incidence<'_>) -> Vec<ElementId> {
    let top = inc.interval().top();
    inc.indecomposable_elements()
        .into_iter()
        .filter(|&x| x != top)
        .collect()
}

/// All lattice forests, the empty forest first, in lexicographic order of
/// element indices.
pub fn enumerate_forests_lattice(inc: &Incidence<'_>) -> Result<Vec<Forest>> {
    let p = inc.interval();
    if !p.is_lattice() {
        return Err(HopfError::NotALattice);
    }
    let cands = candidates(inc);
    let mut out = Vec::new();
    let mut current = Vec::new();
    lattice_dfs(inc, &cands, 0, &mut current, &mut out);
    Ok(out)
}

fn lattice_dfs(
    inc: &Incidence<'_>,
    cands: &[ElementId],
    start: usize,
    current: &mut Vec<ElementId>,
    out: &mut Vec<Forest>,
) {
    out.push(Forest::new(current.clone()));
    for i in start..cands.len() {
        let e = cands[i];
        if can_extend_lattice(inc, current, e) {
            current.push(e);
            lattice_dfs(inc, cands, i + 1, current, out);
            current.pop();
        }
    }
}

/// Forest conditions for `current ∪ {e}`, given that `current` is a forest.
/// Only antichains containing `e` are new.
fn can_extend_lattice(inc: &Incidence<'_>, current: &[ElementId], e: ElementId) -> bool {
    let p = inc.interval();
    let mut all = current.to_vec();
    all.push(e);
    if p.join_all(&all) == Some(p.top()) {
        return false;
    }
    let non_overlapping = current
        .iter()
        .all(|&s| p.comparable(s, e) || p.meet(s, e) == Some(p.bottom()));
    if !non_overlapping {
        return false;
    }
    let incomparable: Vec<ElementId> = current
        .iter()
        .copied()
        .filter(|&s| !p.comparable(s, e))
        .collect();
    let mut ok = true;
    for_each_antichain(p, &incomparable, &mut |chosen| {
        if chosen.is_empty() || !ok {
            return;
        }
        let mut set = chosen.to_vec();
        set.push(e);
        let join = p.join_all(&set).expect("lattice");
        ok = product_of_lowers(inc, &set) == *inc.monomial(p.bottom(), join);
    });
    ok
}

fn for_each_antichain(p: &Interval, pool: &[ElementId], visit: &mut impl FnMut(&[ElementId])) {
    fn go(
        p: &Interval,
        pool: &[ElementId],
        i: usize,
        chosen: &mut Vec<ElementId>,
        visit: &mut impl FnMut(&[ElementId]),
    ) {
        if i == pool.len() {
            visit(chosen);
            return;
        }
        go(p, pool, i + 1, chosen, visit);
        let x = pool[i];
        if chosen.iter().all(|&c| !p.comparable(c, x)) {
            chosen.push(x);
            go(p, pool, i + 1, chosen, visit);
            chosen.pop();
        }
    }
    go(p, pool, 0, &mut Vec::new(), visit);
}

/// Full check of the lattice forest definition.
pub fn is_lattice_forest(inc: &Incidence<'_>, nodes: &[ElementId]) -> bool {
    let p = inc.interval();
    if !p.is_lattice() {
        return false;
    }
    if nodes
        .iter()
        .any(|&x| x == p.top() || !inc.is_lower_indecomposable(x))
    {
        return false;
    }
    if p.join_all(nodes) == Some(p.top()) {
        return false;
    }
    let pairwise = nodes.iter().all(|&a| {
        nodes
            .iter()
            .all(|&b| p.comparable(a, b) || p.meet(a, b) == Some(p.bottom()))
    });
    let mut antichains = true;
    for_each_antichain(p, nodes, &mut |s| {
        if s.len() >= 2 {
            let join = p.join_all(s).expect("lattice");
            antichains &= product_of_lowers(inc, s) == *inc.monomial(p.bottom(), join);
        }
    });
    pairwise && antichains
}

/// All poset forests `(F, J)`. For every set `F` each admissible `J` yields
/// its own forest.
pub fn enumerate_forests_poset(inc: &Incidence<'_>) -> Vec<Forest> {
    let cands = candidates(inc);
    let by_monomial = elements_by_lower_monomial(inc);
    let mut out = Vec::new();
    let mut nodes = Vec::new();
    let start = vec![vec![inc.interval().bottom()]];
    poset_dfs(inc, &by_monomial, &cands, 0, &mut nodes, start, &mut out);
    out
}

fn elements_by_lower_monomial(inc: &Incidence<'_>) -> BTreeMap<Monomial, Vec<ElementId>> {
    let p = inc.interval();
    let mut map: BTreeMap<Monomial, Vec<ElementId>> = BTreeMap::new();
    for c in p.elements().filter(|&c| c != p.top()) {
        map.entry(inc.monomial(p.bottom(), c).clone())
            .or_default()
            .push(c);
    }
    map
}

fn poset_dfs(
    inc: &Incidence<'_>,
    by_monomial: &BTreeMap<Monomial, Vec<ElementId>>,
    cands: &[ElementId],
    start: usize,
    nodes: &mut Vec<ElementId>,
    jmaps: Vec<Vec<ElementId>>,
    out: &mut Vec<Forest>,
) {
    for j in &jmaps {
        out.push(Forest::with_jmap(
            nodes.clone(),
            JMap::from_values(j.clone()),
        ));
    }
    let p = inc.interval();
    for i in start..cands.len() {
        let e = cands[i];
        let separated = nodes
            .iter()
            .all(|&s| p.comparable(s, e) || p.lower_interval_intersection(s, e).len() == 1);
        if !separated {
            continue;
        }
        nodes.push(e);
        let k = nodes.len() - 1;
        let mut order: Vec<usize> = (0..1usize << k).map(|m| m | 1 << k).collect();
        order.sort_by_key(|m| (m.count_ones(), *m));
        let mut extended = Vec::new();
        for j in &jmaps {
            let mut values = j.clone();
            values.resize(1 << (k + 1), p.bottom());
            assign_jmap(
                inc,
                by_monomial,
                nodes,
                &order,
                0,
                &mut values,
                &mut extended,
            );
        }
        if !extended.is_empty() {
            poset_dfs(inc, by_monomial, cands, i + 1, nodes, extended, out);
        }
        nodes.pop();
    }
}

fn assign_jmap(
    inc: &Incidence<'_>,
    by_monomial: &BTreeMap<Monomial, Vec<ElementId>>,
    nodes: &[ElementId],
    order: &[usize],
    idx: usize,
    values: &mut Vec<ElementId>,
    out: &mut Vec<Vec<ElementId>>,
) {
    if idx == order.len() {
        out.push(values.clone());
        return;
    }
    let p = inc.interval();
    let mask = order[idx];
    let subset: Vec<ElementId> = bits(mask).map(|i| nodes[i]).collect();
    let tops = maximal(p, &subset);
    let target = product_of_lowers(inc, &tops);
    let Some(options) = by_monomial.get(&target) else {
        return;
    };
    for &c in options {
        let fits = tops.iter().all(|&a| p.leq(a, c))
            && bits(mask).all(|i| p.leq(values[mask & !(1 << i)], c));
        if fits {
            values[mask] = c;
            assign_jmap(inc, by_monomial, nodes, order, idx + 1, values, out);
        }
    }
}

/// Which conditions of the poset forest definition hold for `(F, J)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PosetForestCheck {
    /// Elements have indecomposable lower intervals and differ from `1`.
    pub elements: bool,
    /// Pairwise comparable or lower intervals meet in `{0}`.
    pub non_overlapping: bool,
    /// `[0, J(G)] ≅ ∏ [0, a]` over the maximal elements of `G`.
    pub product: bool,
    /// `G' ⊆ G` implies `J(G') <= J(G)`.
    pub monotone: bool,
    /// `J(G)` bounds `G` from above and is never `1`.
    pub bounded: bool,
}

impl PosetForestCheck {
    pub fn holds(&self) -> bool {
        self.elements && self.non_overlapping && self.product && self.monotone && self.bounded
    }
}

pub fn check_poset_forest(inc: &Incidence<'_>, f: &Forest) -> PosetForestCheck {
    let p = inc.interval();
    let nodes = f.nodes();
    let elements = nodes
        .iter()
        .all(|&x| x != p.top() && inc.is_lower_indecomposable(x));
    let non_overlapping = nodes.iter().all(|&a| {
        nodes
            .iter()
            .all(|&b| p.comparable(a, b) || p.lower_interval_intersection(a, b).len() == 1)
    });
    let all = 1usize << nodes.len();
    let value = |m: usize| f.j(p, &f.subset(m));
    let mut product = true;
    let mut bounded = true;
    let mut monotone = true;
    for m in 0..all {
        let Some(v) = value(m) else {
            product = false;
            bounded = false;
            continue;
        };
        let subset = f.subset(m);
        let tops = maximal(p, &subset);
        product &= product_of_lowers(inc, &tops) == *inc.monomial(p.bottom(), v);
        bounded &= v != p.top() && subset.iter().all(|&a| p.leq(a, v));
        for i in bits(m) {
            if let Some(w) = value(m & !(1 << i)) {
                monotone &= p.leq(w, v);
            }
        }
    }
    PosetForestCheck {
        elements,
        non_overlapping,
        product,
        monotone,
        bounded,
    }
}

/// `Θ(F) = ∏_{b ∈ F ∪ {1}} [b̃, b]`, `b̃` being `J` of the predecessors.
pub fn theta(inc: &Incidence<'_>, f: &Forest) -> Result<Monomial> {
    let p = inc.interval();
    let mut targets = f.nodes().to_vec();
    targets.push(p.top());
    theta_over(inc, f, &targets)
}

/// The same product taken over `F ∪ Z'(P)` instead of `F ∪ {1}`.
pub fn theta_over_prime_center(inc: &Incidence<'_>, f: &Forest) -> Result<Monomial> {
    let p = inc.interval();
    let targets: BTreeSet<ElementId> = f
        .nodes()
        .iter()
        .chain(inc.lower_prime_center(p.top()))
        .copied()
        .collect();
    theta_over(inc, f, &targets.into_iter().collect::<Vec<_>>())
}

fn theta_over(inc: &Incidence<'_>, f: &Forest, targets: &[ElementId]) -> Result<Monomial> {
    let p = inc.interval();
    let mut m = Monomial::unit();
    for &b in targets {
        let preds = f.predecessors(p, b);
        let tilde = f
            .j(p, &preds)
            .ok_or_else(|| HopfError::NotAForest("predecessors have no join".into()))?;
        if !p.leq(tilde, b) {
            return Err(HopfError::NotAForest(format!(
                "J of the predecessors of {} is not below it",
                p.name(b)
            )));
        }
        m = m.mul(inc.monomial(tilde, b));
    }
    Ok(m)
}

/// The map φ: `F_C = ⋃_{i=1}^{ℓ-1} Z'([0, c_i])`. In poset mode `J` is
/// built by folding joins inside `[0, c_k]` in order of first appearance.
pub fn chain_to_forest(inc: &Incidence<'_>, chain: &Chain, mode: ForestMode) -> Result<Forest> {
    let p = inc.interval();
    if !p.is_chain(chain) {
        return Err(HopfError::ChainNotInInterval);
    }
    let inner = chain.inner();
    let mut first_seen: BTreeMap<ElementId, usize> = BTreeMap::new();
    for (i, &c) in inner.iter().enumerate() {
        for &b in inc.lower_prime_center(c) {
            first_seen.entry(b).or_insert(i);
        }
    }
    let nodes: Vec<ElementId> = first_seen.keys().copied().collect();
    if mode == ForestMode::Lattice {
        return Ok(Forest::new(nodes));
    }
    let mut values = Vec::with_capacity(1 << nodes.len());
    for mask in 0..1usize << nodes.len() {
        let subset: Vec<ElementId> = bits(mask).map(|i| nodes[i]).collect();
        let mut tops = maximal(p, &subset);
        tops.sort_by_key(|b| (first_seen[b], *b));
        let mut acc = p.bottom();
        for b in tops {
            let bound = inner[first_seen[&b]];
            acc = p
                .join_within(acc, b, bound)
                .ok_or_else(|| HopfError::NotAForest(format!("no join below {}", p.name(bound))))?;
        }
        values.push(acc);
    }
    Ok(Forest::with_jmap(nodes, JMap::from_values(values)))
}

/// `C_F`: `0 < J(S_k) < ... < J(S_1) < 1` with `S_1 = max F`,
/// `S_2 = max(F ∖ S_1)`, and so on.
pub fn forest_to_chain(inc: &Incidence<'_>, f: &Forest) -> Result<Chain> {
    let p = inc.interval();
    let mut rest = f.nodes().to_vec();
    let mut elements = vec![p.top()];
    while !rest.is_empty() {
        let layer = maximal(p, &rest);
        rest.retain(|x| !layer.contains(x));
        let j = f
            .j(p, &layer)
            .ok_or_else(|| HopfError::NotAForest("layer has no join".into()))?;
        elements.push(j);
    }
    elements.push(p.bottom());
    elements.reverse();
    let chain = Chain { elements };
    if !p.is_chain(&chain) {
        return Err(HopfError::NotAForest(
            "layer joins do not form a chain".into(),
        ));
    }
    Ok(chain)
}

/// `∅ = I_0 ⊂ I_1 ⊂ ... ⊂ I_k = F`, each `I_j` a down-set of `F` and each
/// difference an antichain.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filtration {
    pub ideals: Vec<Vec<ElementId>>,
}

impl Filtration {
    pub fn length(&self) -> usize {
        self.ideals.len() - 1
    }
}

pub fn enumerate_filtrations(p: &Interval, f: &Forest) -> Vec<Filtration> {
    let n = f.len();
    let full = (1usize << n) - 1;
    let mut out = Vec::new();
    let mut stack = vec![0usize];
    filtration_dfs(p, f, full, &mut stack, &mut out);
    out
}

fn filtration_dfs(
    p: &Interval,
    f: &Forest,
    full: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<Filtration>,
) {
    let current = *stack.last().unwrap();
    if current == full {
        out.push(Filtration {
            ideals: stack.iter().map(|&m| f.subset(m)).collect(),
        });
        return;
    }
    let rest = f.subset(full & !current);
    let minimal: Vec<usize> = rest
        .iter()
        .filter(|&&a| !rest.iter().any(|&b| p.lt(b, a)))
        .map(|&a| f.mask_of(&[a]))
        .collect();
    for pick in 1..1usize << minimal.len() {
        let step = bits(pick).fold(0, |m, i| m | minimal[i]);
        stack.push(current | step);
        filtration_dfs(p, f, full, stack, out);
        stack.pop();
    }
}

/// The filtration attached to a chain: `I_k = I_{k-1} ∪ Z'([0, c_k])`.
pub fn chain_filtration(inc: &Incidence<'_>, chain: &Chain) -> Filtration {
    let mut ideals = vec![Vec::new()];
    let mut acc: BTreeSet<ElementId> = BTreeSet::new();
    for &c in chain.inner() {
        acc.extend(inc.lower_prime_center(c).iter().copied());
        ideals.push(acc.iter().copied().collect());
    }
    Filtration { ideals }
}

/// Chains grouped by their image under φ.
pub fn fibers(inc: &Incidence<'_>, mode: ForestMode) -> Result<BTreeMap<Forest, Vec<Chain>>> {
    let mut out: BTreeMap<Forest, Vec<Chain>> = BTreeMap::new();
    for chain in inc.interval().enumerate_chains() {
        let f = chain_to_forest(inc, &chain, mode)?;
        out.entry(f).or_default().push(chain);
    }
    Ok(out)
}

/// `Σ (-1)^{ℓ(C)}` over the chains `C` with `φ(C) = F`.
pub fn fiber_sign_sum(inc: &Incidence<'_>, f: &Forest, mode: ForestMode) -> Result<i64> {
    let mut sum = 0;
    for chain in inc.interval().enumerate_chains() {
        if chain_to_forest(inc, &chain, mode)? == *f {
            sum += if chain.length() % 2 == 0 { 1 } else { -1 };
        }
    }
    Ok(sum)
}

/// Sign sums over one fiber of φ, computed three ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberCheck {
    pub forest: Forest,
    /// `Σ_{C ∈ φ⁻¹(F)} (-1)^{ℓ(C)}` by direct enumeration.
    pub direct: i64,
    /// `(-1)^{d(F)}`.
    pub expected: i64,
    /// `Σ_G (-1)^{ℓ(G)+1}` over filtrations of `F`.
    pub via_filtrations: i64,
    pub chains: usize,
    pub filtrations: usize,
    /// Chains map bijectively onto filtrations with `ℓ(C) = ℓ(G) + 1`.
    pub bijection: bool,
}

impl FiberCheck {
    pub fn holds(&self) -> bool {
        self.direct == self.expected && self.via_filtrations == self.expected && self.bijection
    }
}

/// One check per forest in the image of φ.
pub fn fiber_checks(inc: &Incidence<'_>, mode: ForestMode) -> Result<Vec<FiberCheck>> {
    let p = inc.interval();
    let mut out = Vec::new();
    for (forest, chains) in fibers(inc, mode)? {
        let filtrations: BTreeSet<Filtration> =
            enumerate_filtrations(p, &forest).into_iter().collect();
        let direct = chains
            .iter()
            .map(|c| if c.length() % 2 == 0 { 1 } else { -1 })
            .sum();
        let via_filtrations = filtrations
            .iter()
            .map(|g| if (g.length() + 1) % 2 == 0 { 1 } else { -1 })
            .sum();
        let images: BTreeSet<Filtration> = chains
            .iter()
            .filter_map(|c| {
                let g = chain_filtration(inc, c);
                (g.length() + 1 == c.length() && is_strict(&g)).then_some(g)
            })
            .collect();
        let bijection = images.len() == chains.len() && images == filtrations;
        out.push(FiberCheck {
            expected: sign_of(&forest),
            direct,
            via_filtrations,
            chains: chains.len(),
            filtrations: filtrations.len(),
            bijection,
            forest,
        });
    }
    Ok(out)
}

fn is_strict(g: &Filtration) -> bool {
    g.ideals.windows(2).all(|w| w[0].len() < w[1].len())
}

/// One signed summand of the forest formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestTerm {
    pub forest: Forest,
    pub sign: i64,
    pub theta: Monomial,
}

pub fn enumerate_forests(inc: &Incidence<'_>, mode: ForestMode) -> Result<Vec<Forest>> {
    match mode {
        ForestMode::Lattice => enumerate_forests_lattice(inc),
        ForestMode::Poset => Ok(enumerate_forests_poset(inc)),
    }
}

/// Terms of the forest formula. The singleton has none: its antipode is `1`
/// by definition.
pub fn forest_terms(inc: &Incidence<'_>, mode: ForestMode) -> Result<Vec<ForestTerm>> {
    if inc.interval().is_singleton() {
        return Ok(Vec::new());
    }
    enumerate_forests(inc, mode)?
        .into_iter()
        .map(|forest| {
            Ok(ForestTerm {
                sign: sign_of(&forest),
                theta: theta(inc, &forest)?,
                forest,
            })
        })
        .collect()
}

/// `χ(P) = Σ_F (-1)^{d(F)} Θ(F)`; the singleton interval maps to `1`.
pub fn antipode_forests_with(inc: &Incidence<'_>, mode: ForestMode) -> Result<HopfElement> {
    if inc.interval().is_singleton() {
        return Ok(HopfElement::one());
    }
    Ok(forest_terms(inc, mode)?
        .into_iter()
        .map(|t| (t.theta, BigInt::from(t.sign)))
        .collect())
}

/// Forest antipode using lattice forests on lattices and poset forests
/// otherwise.
pub fn antipode_forests(p: &Interval, registry: &ClassRegistry) -> HopfElement {
    let inc = Incidence::new(p, registry);
    antipode_forests_with(&inc, ForestMode::for_interval(p)).expect("mode matches the interval")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{boolean_lattice, chain_lattice, figure_lattice};
    use crate::hopf::antipode_chains;

    fn names(p: &Interval, forests: &[Forest]) -> Vec<Vec<String>> {
        forests.iter().map(|f| f.names(p)).collect()
    }

    #[test]
    fn figure_one_forests() {
        let p = figure_lattice(1).unwrap();
        let reg = ClassRegistry::new();
        let inc = Incidence::new(&p, &reg);
        let fs = enumerate_forests_lattice(&inc).unwrap();
        let expected: Vec<Vec<String>> = vec![
            vec![],
            vec!["a".into()],
            vec!["a".into(), "b".into()],
            vec!["b".into()],
        ];
        assert_eq!(names(&p, &fs), expected);
    }

    #[test]
    fn figure_two_forests() {
        let p = figure_lattice(2).unwrap();
        let reg = ClassRegistry::new();
        let inc = Incidence::new(&p, &reg);
        let fs = enumerate_forests_lattice(&inc).unwrap();
        assert_eq!(fs.len(), 8);
        let ab = Forest::new(vec![p.find("a").unwrap(), p.find("b").unwrap()]);
        assert!(!fs.contains(&ab));
    }

    #[test]
    fn two_chain_has_only_the_empty_forest() {
        let p = chain_lattice(1);
        let reg = ClassRegistry::new();
        let inc = Incidence::new(&p, &reg);
        assert_eq!(
            enumerate_forests_lattice(&inc).unwrap(),
            vec![Forest::new(vec![])]
        );
    }

    #[test]
    fn theta_on_figures() {
        let reg = ClassRegistry::new();
        let p = figure_lattice(1).unwrap();
        let inc = Incidence::new(&p, &reg);
        let (a, b, c) = (
            p.find("a").unwrap(),
            p.find("b").unwrap(),
            p.find("c").unwrap(),
        );
        let t = theta(&inc, &Forest::new(vec![a, b])).unwrap();
        let expected = inc
            .monomial(p.bottom(), a)
            .mul(inc.monomial(p.bottom(), b))
            .mul(inc.monomial(c, p.top()));
        assert_eq!(t, expected);
        assert_eq!(theta(&inc, &Forest::new(vec![])).unwrap(), *inc.whole());

        let q = figure_lattice(3).unwrap();
        let inc = Incidence::new(&q, &reg);
        let (a, b) = (q.find("a").unwrap(), q.find("b").unwrap());
        assert_eq!(
            theta(&inc, &Forest::new(vec![a])).unwrap(),
            theta(&inc, &Forest::new(vec![a, b])).unwrap()
        );
    }

    #[test]
    fn phi_and_its_section() {
        let reg = ClassRegistry::new();
        let p = figure_lattice(1).unwrap();
        let inc = Incidence::new(&p, &reg);
        let id = |s: &str| p.find(s).unwrap();
        let chain = Chain {
            elements: vec![id("0"), id("a"), id("c"), id("1")],
        };
        let ab = Forest::new(vec![id("a"), id("b")]);
        assert_eq!(
            chain_to_forest(&inc, &chain, ForestMode::Lattice).unwrap(),
            ab
        );
        let short = Chain {
            elements: vec![id("0"), id("c"), id("1")],
        };
        assert_eq!(
            chain_to_forest(&inc, &short, ForestMode::Lattice).unwrap(),
            ab
        );
        assert_eq!(forest_to_chain(&inc, &ab).unwrap(), short);
        let trivial = Chain {
            elements: vec![id("0"), id("1")],
        };
        assert!(chain_to_forest(&inc, &trivial, ForestMode::Lattice)
            .unwrap()
            .is_empty());

        let q = figure_lattice(2).unwrap();
        let inc = Incidence::new(&q, &reg);
        let ad = Forest::new(vec![q.find("a").unwrap(), q.find("d").unwrap()]);
        let names: Vec<&str> = forest_to_chain(&inc, &ad)
            .unwrap()
            .elements
            .iter()
            .map(|&x| q.name(x))
            .collect();
        assert_eq!(names, ["0", "a", "d", "1"]);
    }

    #[test]
    fn filtrations_of_an_antichain() {
        let p = boolean_lattice(3);
        let f = Forest::new(vec![ElementId(1), ElementId(2)]);
        let gs = enumerate_filtrations(&p, &f);
        let mut lengths: Vec<usize> = gs.iter().map(Filtration::length).collect();
        lengths.sort_unstable();
        assert_eq!(lengths, [1, 2, 2]);
        assert_eq!(enumerate_filtrations(&p, &Forest::new(vec![])).len(), 1);
    }

    #[test]
    fn fibers_of_figure_one() {
        let reg = ClassRegistry::new();
        let p = figure_lattice(1).unwrap();
        let inc = Incidence::new(&p, &reg);
        let checks = fiber_checks(&inc, ForestMode::Lattice).unwrap();
        assert_eq!(checks.len(), 4);
        assert!(checks.iter().all(FiberCheck::holds));
        let ab = checks.iter().find(|c| c.forest.len() == 2).unwrap();
        assert_eq!((ab.chains, ab.direct), (3, -1));
    }

    #[test]
    fn engines_agree_on_small_lattices() {
        let reg = ClassRegistry::new();
        for p in [
            figure_lattice(1).unwrap(),
            figure_lattice(2).unwrap(),
            figure_lattice(3).unwrap(),
            boolean_lattice(3),
            chain_lattice(3),
        ] {
            assert_eq!(antipode_forests(&p, &reg), antipode_chains(&p, &reg));
            let inc = Incidence::new(&p, &reg);
            assert_eq!(
                antipode_forests_with(&inc, ForestMode::Poset).unwrap(),
                antipode_chains(&p, &reg)
            );
        }
    }

    #[test]
    fn poset_forests_on_a_lattice_use_joins() {
        let reg = ClassRegistry::new();
        let p = figure_lattice(2).unwrap();
        let inc = Incidence::new(&p, &reg);
        let posets = enumerate_forests_poset(&inc);
        let lattice = enumerate_forests_lattice(&inc).unwrap();
        assert_eq!(posets.len(), lattice.len());
        for f in &posets {
            assert!(lattice.contains(&f.without_jmap()));
            for (mask, v) in f.jmap().unwrap().entries() {
                assert_eq!(Some(v), p.join_all(&f.subset(mask)));
            }
        }
    }

    #[test]
    fn lattice_enumeration_rejects_non_lattices() {
        let reg = ClassRegistry::new();
        let p = crate::families::colored_partition_poset(&[2, 2], 1).unwrap();
        let inc = Incidence::new(&p, &reg);
        assert_eq!(enumerate_forests_lattice(&inc), Err(HopfError::NotALattice));
    }
}
