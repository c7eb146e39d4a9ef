//! Canonical forms of (colored) intervals and the class registry.
//!
//! Canonical labeling is an exact individualization/refinement search. The
//! initial partition uses vertex invariants (relative color label, height,
//! depth, down-degree, up-degree); refinement splits cells by the multisets of
//! cells found strictly below and strictly above each element. Among all
//! leaves of the search tree the lexicographically smallest encoding of the
//! relabeled `<=` table wins. Automorphisms found at leaves prune sibling
//! branches lying in the same orbit of the prefix stabilizer.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use parking_lot::RwLock;

use crate::hopf::Monomial;
use crate::poset::{ElementId, Interval};

/// Certificate of a (color-)isomorphism class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Canonical form together with the canonical position of every element.
#[derive(Debug, Clone)]
pub struct Labeling {
    pub form: CanonicalForm,
    pub position: Vec<usize>,
}

pub fn canonical_form(p: &Interval) -> CanonicalForm {
    canonical_labeling(p).form
}

pub fn are_equivalent(p: &Interval, q: &Interval) -> bool {
    p.len() == q.len() && canonical_form(p) == canonical_form(q)
}

/// An explicit (color-preserving) isomorphism `p -> q`, if one exists.
pub fn isomorphism(p: &Interval, q: &Interval) -> Option<Vec<ElementId>> {
    if p.len() != q.len() {
        return None;
    }
    let lp = canonical_labeling(p);
    let lq = canonical_labeling(q);
    if lp.form != lq.form {
        return None;
    }
    let mut at_position = vec![ElementId(0); q.len()];
    for (x, &pos) in lq.position.iter().enumerate() {
        at_position[pos] = ElementId(x);
    }
    Some(lp.position.iter().map(|&pos| at_position[pos]).collect())
}

pub fn canonical_labeling(p: &Interval) -> Labeling {
    let n = p.len();
    let up: Vec<Vec<u32>> = p
        .elements()
        .map(|x| {
            p.up_set(x)
                .iter()
                .filter(|&&y| y != x)
                .map(|y| y.0 as u32)
                .collect()
        })
        .collect();
    let down: Vec<Vec<u32>> = p
        .elements()
        .map(|x| {
            p.down_set(x)
                .iter()
                .filter(|&&y| y != x)
                .map(|y| y.0 as u32)
                .collect()
        })
        .collect();

    // Relative color labels, interned by their sorted order.
    let keys = p
        .coloring()
        .map(|c| c.relative_labels(p.bottom()))
        .filter(|keys| keys.iter().any(|(a, r)| !a.is_empty() || !r.is_empty()));
    let (label_rank, mut header) = match &keys {
        Some(keys) => {
            let mut distinct: Vec<_> = keys.clone();
            distinct.sort();
            distinct.dedup();
            let rank = keys
                .iter()
                .map(|k| distinct.binary_search(k).unwrap() as u32)
                .collect::<Vec<_>>();
            let mut header = Vec::new();
            push_u32(&mut header, n as u32);
            push_u32(&mut header, distinct.len() as u32);
            for (added, removed) in &distinct {
                push_u32(&mut header, added.len() as u32);
                added.iter().for_each(|&c| push_u32(&mut header, c));
                push_u32(&mut header, removed.len() as u32);
                removed.iter().for_each(|&c| push_u32(&mut header, c));
            }
            (rank, header)
        }
        None => {
            let mut header = Vec::new();
            push_u32(&mut header, n as u32);
            push_u32(&mut header, 0);
            (vec![0; n], header)
        }
    };
    let colored = keys.is_some();

    let heights = p.heights();
    let depths = p.depths();
    let invariants: Vec<(u32, usize, usize, usize, usize)> = (0..n)
        .map(|x| {
            (
                label_rank[x],
                heights[x],
                depths[x],
                down[x].len(),
                up[x].len(),
            )
        })
        .collect();
    let mut distinct = invariants.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let mut colors: Vec<u32> = invariants
        .iter()
        .map(|inv| distinct.binary_search(inv).unwrap() as u32)
        .collect();

    let mut search = Search {
        n,
        p,
        up: &up,
        down: &down,
        best: None,
        first: None,
        automorphisms: Vec::new(),
    };
    refine(&mut colors, &up, &down);
    let mut prefix = Vec::new();
    search.descend(colors, &mut prefix);
    let (encoding, position) = search.best.expect("search visits at least one leaf");

    if colored {
        let mut by_position = vec![0u32; n];
        for x in 0..n {
            by_position[position[x] as usize] = label_rank[x];
        }
        by_position.iter().for_each(|&r| push_u32(&mut header, r));
    }
    header.extend_from_slice(&encoding);
    Labeling {
        form: CanonicalForm(header),
        position: position.into_iter().map(|p| p as usize).collect(),
    }
}

fn push_u32(out: &mut Vec<u8>, v: u32) {
    out.extend_from_slice(&v.to_be_bytes());
}

/// Refines `colors` to the coarsest stable partition; colors stay ranks in
/// `0..cells` and refine the previous order.
fn refine(colors: &mut [u32], up: &[Vec<u32>], down: &[Vec<u32>]) -> usize {
    let n = colors.len();
    let mut cells = count_cells(colors);
    loop {
        if cells == n {
            return cells;
        }
        let signatures: Vec<(u32, Vec<u32>, Vec<u32>)> = (0..n)
            .map(|x| {
                let mut d: Vec<u32> = down[x].iter().map(|&y| colors[y as usize]).collect();
                let mut u: Vec<u32> = up[x].iter().map(|&y| colors[y as usize]).collect();
                d.sort_unstable();
                u.sort_unstable();
                (colors[x], d, u)
            })
            .collect();
        let mut distinct: Vec<&(u32, Vec<u32>, Vec<u32>)> = signatures.iter().collect();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() == cells {
            return cells;
        }
        for x in 0..n {
            colors[x] = distinct.binary_search(&&signatures[x]).unwrap() as u32;
        }
        cells = distinct.len();
    }
}

fn count_cells(colors: &[u32]) -> usize {
    colors.iter().max().map_or(0, |&m| m as usize + 1)
}

struct Search<'a> {
    n: usize,
    p: &'a Interval,
    up: &'a [Vec<u32>],
    down: &'a [Vec<u32>],
    best: Option<(Vec<u8>, Vec<u32>)>,
    first: Option<(Vec<u8>, Vec<u32>)>,
    automorphisms: Vec<Vec<u32>>,
}

impl Search<'_> {
    fn descend(&mut self, colors: Vec<u32>, prefix: &mut Vec<usize>) {
        let cells = count_cells(&colors);
        if cells == self.n {
            self.leaf(colors);
            return;
        }
        let mut sizes = vec![0usize; cells];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let target = (0..cells)
            .filter(|&c| sizes[c] > 1)
            .min_by_key(|&c| (sizes[c], c))
            .unwrap() as u32;
        let members: Vec<usize> = (0..self.n).filter(|&x| colors[x] == target).collect();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &members {
            if !explored.is_empty() && self.same_orbit(prefix, &explored, v) {
                continue;
            }
            let mut next: Vec<u32> = colors
                .iter()
                .enumerate()
                .map(|(w, &c)| 2 * c + u32::from(w != v))
                .collect();
            compress(&mut next);
            refine(&mut next, self.up, self.down);
            prefix.push(v);
            self.descend(next, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    fn same_orbit(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for g in &self.automorphisms {
            if prefix.iter().any(|&x| g[x] as usize != x) {
                continue;
            }
            any = true;
            for (x, &gx) in g.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, gx as usize));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }

    fn leaf(&mut self, position: Vec<u32>) {
        let n = self.n;
        let mut inverse = vec![0usize; n];
        for (x, &pos) in position.iter().enumerate() {
            inverse[pos as usize] = x;
        }
        let mut encoding = vec![0u8; (n * n).div_ceil(8)];
        let mut bit = 0usize;
        for i in 0..n {
            for j in 0..n {
                if self.p.leq(ElementId(inverse[i]), ElementId(inverse[j])) {
                    encoding[bit / 8] |= 0x80 >> (bit % 8);
                }
                bit += 1;
            }
        }
        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.0 == encoding {
                let mut ref_inverse = vec![0u32; n];
                for (x, &pos) in reference.1.iter().enumerate() {
                    ref_inverse[pos as usize] = x as u32;
                }
                let g: Vec<u32> = position
                    .iter()
                    .map(|&pos| ref_inverse[pos as usize])
                    .collect();
                if g.iter().enumerate().any(|(x, &gx)| gx as usize != x) {
                    self.automorphisms.push(g);
                }
                break;
            }
        }
        if self.first.is_none() {
            self.first = Some((encoding.clone(), position.clone()));
        }
        match &self.best {
            Some((best, _)) if *best <= encoding => {}
            _ => self.best = Some((encoding, position)),
        }
    }
}

fn compress(colors: &mut [u32]) {
    let mut distinct = colors.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    for c in colors.iter_mut() {
        *c = distinct.binary_search(c).unwrap() as u32;
    }
}

/// Opaque identifier of a registered class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassId(pub u32);

#[derive(Debug, Clone)]
pub struct ClassRecord {
    pub id: ClassId,
    pub name: String,
    pub certificate: CanonicalForm,
    pub representative: Interval,
}

#[derive(Default)]
struct RegistryInner {
    by_certificate: HashMap<CanonicalForm, ClassId>,
    records: Vec<Arc<ClassRecord>>,
    monomials: HashMap<CanonicalForm, Monomial>,
}

/// Map from certificates to class identifiers. Names `X1, X2, ...` follow
/// registration order. Reads are concurrent, writes serialized.
#[derive(Default)]
pub struct ClassRegistry {
    inner: RwLock<RegistryInner>,
}

impl fmt::Debug for ClassRegistry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ClassRegistry")
            .field("classes", &self.len())
            .finish()
    }
}

impl ClassRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn register_class(&self, p: &Interval) -> ClassId {
        let form = canonical_form(p);
        self.register_with_form(form, p)
    }

    pub fn register_with_form(&self, form: CanonicalForm, p: &Interval) -> ClassId {
        if let Some(&id) = self.inner.read().by_certificate.get(&form) {
            return id;
        }
        let mut inner = self.inner.write();
        if let Some(&id) = inner.by_certificate.get(&form) {
            return id;
        }
        let id = ClassId(inner.records.len() as u32);
        inner.records.push(Arc::new(ClassRecord {
            id,
            name: format!("X{}", id.0 + 1),
            certificate: form.clone(),
            representative: p.clone(),
        }));
        inner.by_certificate.insert(form, id);
        id
    }

    pub fn lookup(&self, form: &CanonicalForm) -> Option<ClassId> {
        self.inner.read().by_certificate.get(form).copied()
    }

    pub fn record(&self, id: ClassId) -> Arc<ClassRecord> {
        Arc::clone(&self.inner.read().records[id.0 as usize])
    }

    pub fn name(&self, id: ClassId) -> String {
        self.record(id).name.clone()
    }

    pub fn representative(&self, id: ClassId) -> Interval {
        self.record(id).representative.clone()
    }

    pub fn records(&self) -> Vec<Arc<ClassRecord>> {
        self.inner.read().records.clone()
    }

    pub fn len(&self) -> usize {
        self.inner.read().records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub(crate) fn cached_monomial(&self, form: &CanonicalForm) -> Option<Monomial> {
        self.inner.read().monomials.get(form).cloned()
    }

    pub(crate) fn store_monomial(&self, form: CanonicalForm, m: Monomial) {
        self.inner.write().monomials.entry(form).or_insert(m);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::Coloring;

    fn from_covers(names: &[&str], covers: &[(usize, usize)]) -> Interval {
        Interval::from_covers(names.iter().map(|s| s.to_string()).collect(), covers, None).unwrap()
    }

    fn diamond() -> Interval {
        from_covers(&["0", "a", "b", "1"], &[(0, 1), (0, 2), (1, 3), (2, 3)])
    }

    #[test]
    fn relabeled_diamond_has_same_certificate() {
        let d = diamond();
        let relabeled = from_covers(&["1", "b", "0", "a"], &[(2, 1), (2, 3), (1, 0), (3, 0)]);
        assert_eq!(canonical_form(&d), canonical_form(&relabeled));
        assert!(are_equivalent(&d, &relabeled));
    }

    #[test]
    fn three_chain_differs_from_diamond() {
        let c3 = from_covers(&["0", "1", "2"], &[(0, 1), (1, 2)]);
        assert_ne!(canonical_form(&c3), canonical_form(&diamond()));
    }

    #[test]
    fn colored_two_chains_are_distinguished_by_top_color() {
        let names = vec!["0".to_string(), "1".to_string()];
        let make = |c| {
            let coloring = Coloring::from_vertex_colors(&names, &[None, Some(c)]);
            Interval::from_covers(names.clone(), &[(0, 1)], Some(coloring)).unwrap()
        };
        assert_ne!(canonical_form(&make(1)), canonical_form(&make(2)));
        assert_eq!(canonical_form(&make(1)), canonical_form(&make(1)));
    }

    #[test]
    fn isomorphism_maps_elements_consistently() {
        let d = diamond();
        let order = [ElementId(3), ElementId(1), ElementId(0), ElementId(2)];
        let q = d.permuted(&order);
        let iso = isomorphism(&d, &q).unwrap();
        for x in d.elements() {
            for y in d.elements() {
                assert_eq!(d.leq(x, y), q.leq(iso[x.0], iso[y.0]));
            }
        }
    }

    #[test]
    fn registration_is_idempotent() {
        let reg = ClassRegistry::new();
        let a = reg.register_class(&diamond());
        let b = reg.register_class(&diamond().permuted(&[
            ElementId(0),
            ElementId(2),
            ElementId(1),
            ElementId(3),
        ]));
        assert_eq!(a, b);
        assert_eq!(reg.len(), 1);
        assert_eq!(reg.name(a), "X1");
    }
}
