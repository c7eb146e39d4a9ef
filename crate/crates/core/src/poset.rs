//! Finite intervals: posets with a unique minimum and maximum.
//!
//! Orders are stored as full `<=` tables plus sorted up/down sets, so order
//! queries are O(1) and neighborhood scans are linear in their output.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::error::{HopfError, Result};

/// Position of an element inside one [`Interval`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ElementId(pub usize);

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    len: usize,
    leq: Vec<bool>,
    up: Vec<Vec<ElementId>>,
    down: Vec<Vec<ElementId>>,
    bottom: ElementId,
    top: ElementId,
    names: Vec<String>,
    coloring: Option<Coloring>,
}

/// A bottom-to-top chain `0 = c_0 < c_1 < ... < c_n = 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chain {
    pub elements: Vec<ElementId>,
}

impl Chain {
    pub fn length(&self) -> usize {
        self.elements.len() - 1
    }

    /// Consecutive pairs `(c_{i-1}, c_i)`.
    pub fn links(&self) -> impl Iterator<Item = (ElementId, ElementId)> + '_ {
        self.elements.windows(2).map(|w| (w[0], w[1]))
    }

    /// The inner elements `c_1, ..., c_{n-1}`.
    pub fn inner(&self) -> &[ElementId] {
        let n = self.elements.len();
        if n <= 2 {
            &[]
        } else {
            &self.elements[1..n - 1]
        }
    }
}

/// Cartesian product `P x Q` together with the pair map `psi`.
#[derive(Debug, Clone)]
pub struct Product {
    pub interval: Interval,
    left_len: usize,
    right_len: usize,
}

impl Product {
    pub fn psi(&self, x: ElementId, y: ElementId) -> ElementId {
        debug_assert!(x.0 < self.left_len && y.0 < self.right_len);
        ElementId(x.0 * self.right_len + y.0)
    }

    pub fn components(&self, z: ElementId) -> (ElementId, ElementId) {
        (
            ElementId(z.0 / self.right_len),
            ElementId(z.0 % self.right_len),
        )
    }

    pub fn into_interval(self) -> Interval {
        self.interval
    }
}

/// A finite poset without boundedness requirements (input to the ideal
/// lattice builder).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    pub names: Vec<String>,
    leq: Vec<bool>,
}

impl FinitePoset {
    pub fn from_leq_table(names: Vec<String>, table: &[Vec<bool>]) -> Result<Self> {
        let n = table.len();
        if names.len() != n {
            return Err(HopfError::InvalidInput(
                "name count differs from table size".into(),
            ));
        }
        let leq = flatten_square(table)?;
        check_partial_order(n, &leq)?;
        Ok(FinitePoset { names, leq })
    }

    /// Builds the order from cover pairs `(x, y)` meaning `y` covers `x`.
    pub fn from_covers(names: Vec<String>, covers: &[(usize, usize)]) -> Result<Self> {
        let n = names.len();
        let leq = closure_of_covers(n, covers)?;
        check_partial_order(n, &leq)?;
        Ok(FinitePoset { names, leq })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.len() + y]
    }

    /// Interval obtained by adjoining a new bottom and a new top.
    pub fn bounded(&self) -> Interval {
        let n = self.len();
        let m = n + 2;
        let mut leq = vec![false; m * m];
        for i in 0..m {
            leq[i] = true;
            leq[i * m + (m - 1)] = true;
        }
        for x in 0..n {
            for y in 0..n {
                leq[(x + 1) * m + (y + 1)] = self.leq(x, y);
            }
        }
        let mut names = Vec::with_capacity(m);
        names.push("_0".to_string());
        names.extend(self.names.iter().cloned());
        names.push("_1".to_string());
        Interval::from_flat_unchecked(names, leq, None)
    }
}

fn flatten_square(table: &[Vec<bool>]) -> Result<Vec<bool>> {
    let n = table.len();
    let mut leq = Vec::with_capacity(n * n);
    for row in table {
        if row.len() != n {
            return Err(HopfError::InvalidInput("order table is not square".into()));
        }
        leq.extend_from_slice(row);
    }
    Ok(leq)
}

fn closure_of_covers(n: usize, covers: &[(usize, usize)]) -> Result<Vec<bool>> {
    let mut leq = vec![false; n * n];
    for i in 0..n {
        leq[i * n + i] = true;
    }
    for &(x, y) in covers {
        if x >= n || y >= n {
            return Err(HopfError::InvalidInput(format!(
                "cover ({x}, {y}) refers to a missing element"
            )));
        }
        leq[x * n + y] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if leq[i * n + k] {
                for j in 0..n {
                    if leq[k * n + j] {
                        leq[i * n + j] = true;
                    }
                }
            }
        }
    }
    Ok(leq)
}

fn check_partial_order(n: usize, leq: &[bool]) -> Result<()> {
    for i in 0..n {
        if !leq[i * n + i] {
            return Err(HopfError::NotAPartialOrder(format!(
                "element {i} is not below itself"
            )));
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if leq[i * n + j] && leq[j * n + i] {
                return Err(HopfError::NotAPartialOrder(format!(
                    "elements {i} and {j} are mutually below each other"
                )));
            }
        }
    }
    for i in 0..n {
        for k in 0..n {
            if !leq[i * n + k] {
                continue;
            }
            for j in 0..n {
                if leq[k * n + j] && !leq[i * n + j] {
                    return Err(HopfError::NotAPartialOrder(format!(
                        "transitivity fails for {i} <= {k} <= {j}"
                    )));
                }
            }
        }
    }
    Ok(())
}

impl Interval {
    /// Validates a `<=` table and locates the bottom and top.
    pub fn from_leq_table(table: &[Vec<bool>], coloring: Option<Coloring>) -> Result<Self> {
        let names = (0..table.len()).map(|i| i.to_string()).collect();
        Self::from_named_leq_table(names, table, coloring)
    }

    pub fn from_named_leq_table(
        names: Vec<String>,
        table: &[Vec<bool>],
        coloring: Option<Coloring>,
    ) -> Result<Self> {
        let leq = flatten_square(table)?;
        Self::from_flat(names, leq, coloring)
    }

    /// Builds an interval from cover pairs `(x, y)` meaning `y` covers `x`;
    /// the order is the reflexive-transitive closure.
    pub fn from_covers(
        names: Vec<String>,
        covers: &[(usize, usize)],
        coloring: Option<Coloring>,
    ) -> Result<Self> {
        let leq = closure_of_covers(names.len(), covers)?;
        Self::from_flat(names, leq, coloring)
    }

    pub(crate) fn from_flat(
        names: Vec<String>,
        leq: Vec<bool>,
        coloring: Option<Coloring>,
    ) -> Result<Self> {
        let n = names.len();
        if leq.len() != n * n {
            return Err(HopfError::InvalidInput(
                "name count differs from table size".into(),
            ));
        }
        if let Some(c) = &coloring {
            if c.len() != n {
                return Err(HopfError::InvalidInput(
                    "coloring size differs from element count".into(),
                ));
            }
        }
        if n == 0 {
            return Err(HopfError::NoUniqueBottom);
        }
        check_partial_order(n, &leq)?;
        let bottoms: Vec<usize> = (0..n).filter(|&x| (0..n).all(|y| leq[x * n + y])).collect();
        if bottoms.len() != 1 {
            return Err(HopfError::NoUniqueBottom);
        }
        let tops: Vec<usize> = (0..n).filter(|&y| (0..n).all(|x| leq[x * n + y])).collect();
        if tops.len() != 1 {
            return Err(HopfError::NoUniqueTop);
        }
        Ok(Self::from_flat_unchecked(names, leq, coloring))
    }

    /// Builder path for orders that are intervals by construction.
    pub(crate) fn from_flat_unchecked(
        names: Vec<String>,
        leq: Vec<bool>,
        coloring: Option<Coloring>,
    ) -> Self {
        let n = names.len();
        debug_assert!(check_partial_order(n, &leq).is_ok());
        let up: Vec<Vec<ElementId>> = (0..n)
            .map(|x| (0..n).filter(|&y| leq[x * n + y]).map(ElementId).collect())
            .collect();
        let down: Vec<Vec<ElementId>> = (0..n)
            .map(|y| (0..n).filter(|&x| leq[x * n + y]).map(ElementId).collect())
            .collect();
        let bottom = ElementId((0..n).find(|&x| up[x].len() == n).expect("no bottom"));
        let top = ElementId((0..n).find(|&y| down[y].len() == n).expect("no top"));
        let coloring = coloring.filter(|c| !c.is_trivial());
        Interval {
            len: n,
            leq,
            up,
            down,
            bottom,
            top,
            names,
            coloring,
        }
    }

    /// The one-element interval.
    pub fn singleton() -> Self {
        Self::from_flat_unchecked(vec!["0".to_string()], vec![true], None)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_singleton(&self) -> bool {
        self.len == 1
    }

    pub fn bottom(&self) -> ElementId {
        self.bottom
    }

    pub fn top(&self) -> ElementId {
        self.top
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + Clone {
        (0..self.len).map(ElementId)
    }

    #[inline]
    pub fn leq(&self, x: ElementId, y: ElementId) -> bool {
        self.leq[x.0 * self.len + y.0]
    }

    #[inline]
    pub fn lt(&self, x: ElementId, y: ElementId) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: ElementId, y: ElementId) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// All `y` with `x <= y`, ascending.
    pub fn up_set(&self, x: ElementId) -> &[ElementId] {
        &self.up[x.0]
    }

    /// All `y` with `y <= x`, ascending.
    pub fn down_set(&self, x: ElementId) -> &[ElementId] {
        &self.down[x.0]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: ElementId) -> &str {
        &self.names[x.0]
    }

    pub fn find(&self, name: &str) -> Option<ElementId> {
        self.names.iter().position(|n| n == name).map(ElementId)
    }

    pub fn coloring(&self) -> Option<&Coloring> {
        self.coloring.as_ref()
    }

    /// Full `<=` table as nested rows.
    pub fn leq_table(&self) -> Vec<Vec<bool>> {
        self.leq.chunks(self.len).map(<[bool]>::to_vec).collect()
    }

    /// Cover pairs `(x, y)` with `y` covering `x`.
    pub fn covers(&self) -> Vec<(ElementId, ElementId)> {
        let mut out = Vec::new();
        for x in self.elements() {
            for &y in &self.up[x.0] {
                if y == x {
                    continue;
                }
                let covered = !self.up[x.0]
                    .iter()
                    .any(|&z| z != x && z != y && self.leq(z, y));
                if covered {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Elements covering `x`.
    pub fn upper_covers(&self, x: ElementId) -> Vec<ElementId> {
        self.up[x.0]
            .iter()
            .copied()
            .filter(|&y| {
                y != x
                    && !self.up[x.0]
                        .iter()
                        .any(|&z| z != x && z != y && self.leq(z, y))
            })
            .collect()
    }

    /// Length of the longest chain from the bottom to each element.
    pub fn heights(&self) -> Vec<usize> {
        let mut order: Vec<ElementId> = self.elements().collect();
        order.sort_by_key(|x| self.down[x.0].len());
        let mut h = vec![0usize; self.len];
        for &y in &order {
            h[y.0] = self.down[y.0]
                .iter()
                .filter(|&&x| x != y)
                .map(|x| h[x.0] + 1)
                .max()
                .unwrap_or(0);
        }
        h
    }

    /// Length of the longest chain from each element to the top.
    pub fn depths(&self) -> Vec<usize> {
        let mut order: Vec<ElementId> = self.elements().collect();
        order.sort_by_key(|x| self.up[x.0].len());
        let mut d = vec![0usize; self.len];
        for &x in &order {
            d[x.0] = self.up[x.0]
                .iter()
                .filter(|&&y| y != x)
                .map(|y| d[y.0] + 1)
                .max()
                .unwrap_or(0);
        }
        d
    }

    /// Length of the longest bottom-to-top chain.
    pub fn rank(&self) -> usize {
        self.heights()[self.top.0]
    }

    /// The subinterval `[x, y]` together with its embedding into `self`.
    pub fn subinterval_with_embedding(
        &self,
        x: ElementId,
        y: ElementId,
    ) -> Result<(Interval, Vec<ElementId>)> {
        if !self.leq(x, y) {
            return Err(HopfError::NotComparable(x, y));
        }
        let embedding: Vec<ElementId> = self.up[x.0]
            .iter()
            .copied()
            .filter(|&z| self.leq(z, y))
            .collect();
        Ok((self.induced(&embedding), embedding))
    }

    pub fn subinterval(&self, x: ElementId, y: ElementId) -> Result<Interval> {
        self.subinterval_with_embedding(x, y).map(|(i, _)| i)
    }

    /// Induced order on `elements` (which must form an interval).
    pub(crate) fn induced(&self, elements: &[ElementId]) -> Interval {
        let m = elements.len();
        let mut leq = vec![false; m * m];
        for (i, &a) in elements.iter().enumerate() {
            for (j, &b) in elements.iter().enumerate() {
                leq[i * m + j] = self.leq(a, b);
            }
        }
        let names = elements.iter().map(|&z| self.names[z.0].clone()).collect();
        let coloring = self.coloring.as_ref().map(|c| c.restrict(elements));
        Interval::from_flat_unchecked(names, leq, coloring)
    }

    /// Copy of `self` with elements reordered: new element `i` is old `order[i]`.
    pub fn permuted(&self, order: &[ElementId]) -> Interval {
        assert_eq!(order.len(), self.len);
        self.induced(order)
    }

    /// Cartesian product ordered componentwise.
    pub fn cartesian_product(&self, other: &Interval) -> Product {
        let (n, m) = (self.len, other.len);
        let size = n * m;
        let mut leq = vec![false; size * size];
        for x in 0..n {
            for y in 0..m {
                let a = x * m + y;
                for &x2 in &self.up[x] {
                    for &y2 in &other.up[y] {
                        leq[a * size + x2.0 * m + y2.0] = true;
                    }
                }
            }
        }
        let mut names = Vec::with_capacity(size);
        for x in &self.names {
            for y in &other.names {
                names.push(format!("({x},{y})"));
            }
        }
        let coloring = Coloring::product(self.coloring.as_ref(), n, other.coloring.as_ref(), m);
        Product {
            interval: Interval::from_flat_unchecked(names, leq, coloring),
            left_len: n,
            right_len: m,
        }
    }

    /// Visits every bottom-to-top chain in lexicographic order of element
    /// indices.
    pub fn for_each_chain(&self, mut visit: impl FnMut(&[ElementId])) {
        let mut stack = vec![self.bottom];
        if self.is_singleton() {
            visit(&stack);
            return;
        }
        self.chain_dfs(&mut stack, &mut visit);
    }

    fn chain_dfs(&self, stack: &mut Vec<ElementId>, visit: &mut impl FnMut(&[ElementId])) {
        let cur = *stack.last().unwrap();
        for &next in &self.up[cur.0] {
            if next == cur {
                continue;
            }
            stack.push(next);
            if next == self.top {
                visit(stack);
            } else {
                self.chain_dfs(stack, visit);
            }
            stack.pop();
        }
    }

    pub fn enumerate_chains(&self) -> Vec<Chain> {
        let mut out = Vec::new();
        self.for_each_chain(|c| {
            out.push(Chain {
                elements: c.to_vec(),
            })
        });
        out
    }

    /// Checks that `chain` is a strictly increasing bottom-to-top chain.
    pub fn is_chain(&self, chain: &Chain) -> bool {
        let e = &chain.elements;
        !e.is_empty()
            && e[0] == self.bottom
            && *e.last().unwrap() == self.top
            && e.iter().all(|x| x.0 < self.len)
            && e.windows(2).all(|w| self.lt(w[0], w[1]))
    }

    /// Least upper bound, if it exists.
    pub fn join(&self, x: ElementId, y: ElementId) -> Option<ElementId> {
        let ubs: Vec<ElementId> = self.up[x.0]
            .iter()
            .copied()
            .filter(|&z| self.leq(y, z))
            .collect();
        ubs.iter()
            .copied()
            .find(|&u| ubs.iter().all(|&v| self.leq(u, v)))
    }

    /// Greatest lower bound, if it exists.
    pub fn meet(&self, x: ElementId, y: ElementId) -> Option<ElementId> {
        let lbs: Vec<ElementId> = self.down[x.0]
            .iter()
            .copied()
            .filter(|&z| self.leq(z, y))
            .collect();
        lbs.iter()
            .copied()
            .find(|&l| lbs.iter().all(|&v| self.leq(v, l)))
    }

    /// Least upper bound of `x` and `y` among the elements below `bound`.
    pub fn join_within(&self, x: ElementId, y: ElementId, bound: ElementId) -> Option<ElementId> {
        let ubs: Vec<ElementId> = self.up[x.0]
            .iter()
            .copied()
            .filter(|&z| self.leq(y, z) && self.leq(z, bound))
            .collect();
        ubs.iter()
            .copied()
            .find(|&u| ubs.iter().all(|&v| self.leq(u, v)))
    }

    /// Least upper bound of a set (the bottom for the empty set).
    pub fn join_all(&self, xs: &[ElementId]) -> Option<ElementId> {
        let mut acc = self.bottom;
        for &x in xs {
            acc = self.join(acc, x)?;
        }
        Some(acc)
    }

    pub fn is_lattice(&self) -> bool {
        // Finite bounded posets are lattices as soon as all joins exist.
        self.elements()
            .all(|x| self.elements().all(|y| y < x || self.join(x, y).is_some()))
    }

    /// `{z : z <= a and z <= b}`.
    pub fn lower_interval_intersection(&self, a: ElementId, b: ElementId) -> Vec<ElementId> {
        self.down[a.0]
            .iter()
            .copied()
            .filter(|&z| self.leq(z, b))
            .collect()
    }
}

/// A total order check used by tests and debug assertions.
pub fn is_partial_order(table: &[Vec<bool>]) -> bool {
    flatten_square(table)
        .and_then(|leq| check_partial_order(table.len(), &leq))
        .is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain_interval(n: usize) -> Interval {
        let names = (0..n).map(|i| i.to_string()).collect();
        let covers: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Interval::from_covers(names, &covers, None).unwrap()
    }

    fn diamond() -> Interval {
        let names = ["0", "a", "b", "1"].map(String::from).to_vec();
        Interval::from_covers(names, &[(0, 1), (0, 2), (1, 3), (2, 3)], None).unwrap()
    }

    #[test]
    fn singleton_table_is_an_interval() {
        let p = Interval::from_leq_table(&[vec![true]], None).unwrap();
        assert_eq!(p.bottom(), p.top());
        assert_eq!(p.enumerate_chains().len(), 1);
        assert_eq!(p.enumerate_chains()[0].length(), 0);
    }

    #[test]
    fn two_chain_has_one_chain_of_length_one() {
        let p = Interval::from_leq_table(&[vec![true, true], vec![false, true]], None).unwrap();
        let chains = p.enumerate_chains();
        assert_eq!(chains.len(), 1);
        assert_eq!(chains[0].length(), 1);
    }

    #[test]
    fn antichain_has_no_bottom() {
        let err = Interval::from_leq_table(&[vec![true, false], vec![false, true]], None);
        assert_eq!(err.unwrap_err(), HopfError::NoUniqueBottom);
    }

    #[test]
    fn missing_top_is_reported() {
        // 0 < a, 0 < b
        let names = ["0", "a", "b"].map(String::from).to_vec();
        let err = Interval::from_covers(names, &[(0, 1), (0, 2)], None).unwrap_err();
        assert_eq!(err, HopfError::NoUniqueTop);
    }

    #[test]
    fn order_axiom_violations() {
        let not_reflexive = vec![vec![false]];
        assert!(matches!(
            Interval::from_leq_table(&not_reflexive, None),
            Err(HopfError::NotAPartialOrder(_))
        ));
        let cyclic = vec![vec![true, true], vec![true, true]];
        assert!(matches!(
            Interval::from_leq_table(&cyclic, None),
            Err(HopfError::NotAPartialOrder(_))
        ));
        let intransitive = vec![
            vec![true, true, false],
            vec![false, true, true],
            vec![false, false, true],
        ];
        assert!(matches!(
            Interval::from_leq_table(&intransitive, None),
            Err(HopfError::NotAPartialOrder(_))
        ));
        let cover_cycle = Interval::from_covers(
            ["a", "b"].map(String::from).to_vec(),
            &[(0, 1), (1, 0)],
            None,
        );
        assert!(matches!(cover_cycle, Err(HopfError::NotAPartialOrder(_))));
    }

    #[test]
    fn subinterval_edge_cases() {
        let d = diamond();
        let whole = d.subinterval(d.bottom(), d.top()).unwrap();
        assert_eq!(whole.leq_table(), d.leq_table());
        let point = d.subinterval(ElementId(1), ElementId(1)).unwrap();
        assert!(point.is_singleton());
        assert_eq!(
            d.subinterval(ElementId(1), ElementId(2)).unwrap_err(),
            HopfError::NotComparable(ElementId(1), ElementId(2))
        );
    }

    #[test]
    fn diamond_chains_in_lexicographic_order() {
        let chains = diamond().enumerate_chains();
        let seqs: Vec<Vec<usize>> = chains
            .iter()
            .map(|c| c.elements.iter().map(|e| e.0).collect())
            .collect();
        assert_eq!(seqs, vec![vec![0, 1, 3], vec![0, 2, 3], vec![0, 3]]);
    }

    #[test]
    fn product_of_two_chains_is_diamond() {
        let c = chain_interval(2);
        let prod = c.cartesian_product(&c);
        let p = &prod.interval;
        assert_eq!(p.len(), 4);
        assert_eq!(p.bottom(), prod.psi(ElementId(0), ElementId(0)));
        assert_eq!(p.top(), prod.psi(ElementId(1), ElementId(1)));
        assert_eq!(p.enumerate_chains().len(), 3);
        let a = prod.psi(ElementId(1), ElementId(0));
        let b = prod.psi(ElementId(0), ElementId(1));
        assert_eq!(p.join(a, b), Some(p.top()));
        assert_eq!(p.meet(a, b), Some(p.bottom()));
        assert_eq!(prod.components(a), (ElementId(1), ElementId(0)));
    }

    #[test]
    fn join_undefined_with_two_minimal_upper_bounds() {
        // 0 < a,b < c,d < 1 with both c and d above a and b.
        let names = ["0", "a", "b", "c", "d", "1"].map(String::from).to_vec();
        let covers = [
            (0, 1),
            (0, 2),
            (1, 3),
            (2, 3),
            (1, 4),
            (2, 4),
            (3, 5),
            (4, 5),
        ];
        let p = Interval::from_covers(names, &covers, None).unwrap();
        assert_eq!(p.join(ElementId(1), ElementId(2)), None);
        assert!(!p.is_lattice());
        assert!(diamond().is_lattice());
    }

    #[test]
    fn lower_interval_intersection_cases() {
        let d = diamond();
        assert_eq!(
            d.lower_interval_intersection(ElementId(1), ElementId(2)),
            vec![ElementId(0)]
        );
        assert_eq!(
            d.lower_interval_intersection(ElementId(3), ElementId(3)),
            d.elements().collect::<Vec<_>>()
        );
    }

    #[test]
    fn covers_and_heights() {
        let d = diamond();
        assert_eq!(d.covers().len(), 4);
        assert_eq!(d.heights(), vec![0, 1, 1, 2]);
        assert_eq!(d.depths(), vec![2, 1, 1, 0]);
        assert_eq!(d.rank(), 2);
    }

    #[test]
    fn bounded_closure_of_antichain_is_diamond() {
        let q = FinitePoset::from_covers(vec!["x".into(), "y".into()], &[]).unwrap();
        let p = q.bounded();
        assert_eq!(p.len(), 4);
        assert_eq!(p.enumerate_chains().len(), 3);
    }
}
