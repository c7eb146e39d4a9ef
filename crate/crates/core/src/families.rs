//! Builders for concrete families of intervals and seeded random generators.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canonical::canonical_form;
use crate::coloring::{Coloring, Token};
use crate::error::{HopfError, Result};
use crate::poset::{FinitePoset, Interval};

pub const MAX_PARTITION_POINTS: usize = 6;
pub const MAX_COLORED_POINTS: usize = 9;
pub const MAX_RANDOM_SIZE: usize = 14;

/// Subsets of `{1..n}` ordered by inclusion.
pub fn boolean_lattice(n: usize) -> Interval {
    assert!(n <= 12, "boolean lattice too large");
    let size = 1usize << n;
    let mut leq = vec![false; size * size];
    for x in 0..size {
        for y in 0..size {
            leq[x * size + y] = x & !y == 0;
        }
    }
    let names = (0..size)
        .map(|s| {
            let items: Vec<String> = (0..n)
                .filter(|i| s >> i & 1 == 1)
                .map(|i| (i + 1).to_string())
                .collect();
            format!("{{{}}}", items.join(","))
        })
        .collect();
    Interval::from_flat_unchecked(names, leq, None)
}

/// The chain `0 < 1 < ... < n`.
pub fn chain_lattice(n: usize) -> Interval {
    let size = n + 1;
    let mut leq = vec![false; size * size];
    for x in 0..size {
        for y in x..size {
            leq[x * size + y] = true;
        }
    }
    let names = (0..size).map(|i| i.to_string()).collect();
    Interval::from_flat_unchecked(names, leq, None)
}

/// Restricted growth strings of length `n`, i.e. set partitions of `0..n`.
fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn grow(cur: &mut Vec<usize>, max: usize, n: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..=max + 1 {
            cur.push(b);
            grow(cur, max.max(b), n, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut cur = vec![0];
    grow(&mut cur, 0, n, &mut out);
    out
}

/// Blocks of a restricted growth string, each sorted, ordered by minimum.
fn blocks_of(rgs: &[usize]) -> Vec<Vec<usize>> {
    let k = rgs.iter().max().map_or(0, |m| m + 1);
    let mut blocks = vec![Vec::new(); k];
    for (i, &b) in rgs.iter().enumerate() {
        blocks[b].push(i);
    }
    blocks
}

fn block_label(block: &[usize]) -> String {
    block.iter().map(|p| (p + 1).to_string()).collect()
}

/// The partition lattice of `{1..n}` ordered by refinement.
pub fn partition_lattice(n: usize) -> Result<Interval> {
    if n == 0 || n > MAX_PARTITION_POINTS {
        return Err(HopfError::SizeLimit(format!(
            "partition lattice needs 1 <= n <= {MAX_PARTITION_POINTS}, got {n}"
        )));
    }
    let parts = set_partitions(n);
    let m = parts.len();
    let mut leq = vec![false; m * m];
    for (i, p) in parts.iter().enumerate() {
        for (j, q) in parts.iter().enumerate() {
            leq[i * m + j] = refines(p, q);
        }
    }
    let names = parts
        .iter()
        .map(|p| {
            blocks_of(p)
                .iter()
                .map(|b| block_label(b))
                .collect::<Vec<_>>()
                .join("/")
        })
        .collect();
    Ok(Interval::from_flat_unchecked(names, leq, None))
}

fn refines(p: &[usize], q: &[usize]) -> bool {
    (0..p.len()).all(|i| (i + 1..p.len()).all(|j| p[i] != p[j] || q[i] == q[j]))
}

/// A colored partition: blocks (sorted point lists, ordered by minimum) with
/// a color per block.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ColoredPartition {
    pub blocks: Vec<(Vec<usize>, u32)>,
}

impl ColoredPartition {
    fn normalize(mut self) -> Self {
        for (b, _) in &mut self.blocks {
            b.sort_unstable();
        }
        self.blocks.sort();
        self
    }

    /// Parses notation such as `1_1/2_2/(34)_1`: points are the digits 1-9,
    /// non-singleton blocks are parenthesized, `_c` gives the color.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || HopfError::InvalidInput(format!("malformed colored partition {s:?}"));
        let mut blocks = Vec::new();
        for part in s.split('/') {
            let (points, color) = part.trim().rsplit_once('_').ok_or_else(bad)?;
            let color: u32 = color.parse().map_err(|_| bad())?;
            let points = points.trim_start_matches('(').trim_end_matches(')');
            let block: Vec<usize> = points
                .chars()
                .map(|c| c.to_digit(10).filter(|&d| d > 0).map(|d| d as usize - 1))
                .collect::<Option<_>>()
                .ok_or_else(bad)?;
            if block.is_empty() || color == 0 {
                return Err(bad());
            }
            blocks.push((block, color));
        }
        let p = ColoredPartition { blocks }.normalize();
        let mut all: Vec<usize> = p.blocks.iter().flat_map(|(b, _)| b.clone()).collect();
        all.sort_unstable();
        if all != (0..all.len()).collect::<Vec<_>>() {
            return Err(HopfError::InvalidInput(format!(
                "colored partition {s:?} must cover the points 1..n exactly once"
            )));
        }
        Ok(p)
    }

    pub fn point_count(&self) -> usize {
        self.blocks.iter().map(|(b, _)| b.len()).sum()
    }

    /// `self <= other`: refinement, and blocks common to both agree in color.
    pub fn leq(&self, other: &ColoredPartition) -> bool {
        self.blocks.iter().all(|(b, c)| {
            other.blocks.iter().any(|(ob, oc)| {
                b.iter().all(|p| ob.contains(p)) && (ob.len() != b.len() || oc == c)
            })
        })
    }

    pub fn label(&self) -> String {
        self.blocks
            .iter()
            .map(|(b, c)| {
                if b.len() == 1 {
                    format!("{}_{c}", block_label(b))
                } else {
                    format!("({})_{c}", block_label(b))
                }
            })
            .collect::<Vec<_>>()
            .join("/")
    }

    fn plain_label(&self) -> String {
        self.blocks
            .iter()
            .map(|(b, _)| block_label(b))
            .collect::<Vec<_>>()
            .join("/")
    }

    fn tokens(&self) -> Vec<Token> {
        self.blocks
            .iter()
            .map(|(b, c)| Token {
                name: block_label(b),
                color: *c,
            })
            .collect()
    }
}

/// The interval `[lower, upper]` of the colored partition poset, with colors
/// drawn from `1..=colors`. Colorings are omitted when `colors == 1`.
pub fn colored_partition_interval_between(
    lower: &ColoredPartition,
    upper: &ColoredPartition,
    colors: u32,
) -> Result<Interval> {
    if lower.point_count() != upper.point_count() {
        return Err(HopfError::InvalidInput(
            "colored partitions are over different point sets".into(),
        ));
    }
    if lower.point_count() > MAX_COLORED_POINTS {
        return Err(HopfError::SizeLimit(format!(
            "colored partitions support at most {MAX_COLORED_POINTS} points"
        )));
    }
    if !lower.leq(upper) {
        return Err(HopfError::InvalidInput(format!(
            "{} is not below {}",
            lower.label(),
            upper.label()
        )));
    }
    let units = &lower.blocks;
    let mut elements: Vec<ColoredPartition> = Vec::new();
    for rgs in set_partitions(units.len()) {
        let groups = blocks_of(&rgs);
        let merged: Vec<Vec<usize>> = groups
            .iter()
            .map(|g| {
                let mut pts: Vec<usize> = g.iter().flat_map(|&u| units[u].0.clone()).collect();
                pts.sort_unstable();
                pts
            })
            .collect();
        if !merged.iter().all(|b| {
            upper
                .blocks
                .iter()
                .any(|(ub, _)| b.iter().all(|p| ub.contains(p)))
        }) {
            continue;
        }
        // Fixed colors: blocks kept from `lower`, or equal to a block of `upper`.
        let mut choices: Vec<Vec<u32>> = Vec::new();
        for (g, b) in groups.iter().zip(&merged) {
            if g.len() == 1 {
                choices.push(vec![units[g[0]].1]);
            } else if let Some((_, c)) = upper.blocks.iter().find(|(ub, _)| ub == b) {
                choices.push(vec![*c]);
            } else {
                choices.push((1..=colors).collect());
            }
        }
        let mut pick = vec![0usize; choices.len()];
        loop {
            let blocks = merged
                .iter()
                .zip(&pick)
                .zip(&choices)
                .map(|((b, &i), cs)| (b.clone(), cs[i]))
                .collect();
            elements.push(ColoredPartition { blocks }.normalize());
            let mut k = 0;
            while k < pick.len() {
                pick[k] += 1;
                if pick[k] < choices[k].len() {
                    break;
                }
                pick[k] = 0;
                k += 1;
            }
            if k == pick.len() {
                break;
            }
        }
    }
    let m = elements.len();
    let mut leq = vec![false; m * m];
    for (i, a) in elements.iter().enumerate() {
        for (j, b) in elements.iter().enumerate() {
            leq[i * m + j] = a.leq(b);
        }
    }
    let (names, coloring) = if colors <= 1 {
        (
            elements.iter().map(ColoredPartition::plain_label).collect(),
            None,
        )
    } else {
        let per_element = elements.iter().map(ColoredPartition::tokens).collect();
        (
            elements.iter().map(ColoredPartition::label).collect(),
            Some(Coloring::from_element_tokens(per_element)),
        )
    };
    Interval::from_flat(names, leq, coloring)
}

/// Parses both endpoints and builds the interval between them; the number
/// of colors is the largest color mentioned.
pub fn colored_partition_interval(lower: &str, upper: &str) -> Result<Interval> {
    let lo = ColoredPartition::parse(lower)?;
    let hi = ColoredPartition::parse(upper)?;
    let colors = lo
        .blocks
        .iter()
        .chain(&hi.blocks)
        .map(|(_, c)| *c)
        .max()
        .unwrap_or(1);
    colored_partition_interval_between(&lo, &hi, colors)
}

/// Colored partitions of a colored set with `counts[i]` points of color
/// `i + 1`, truncated to the single top colored `top_color`.
pub fn colored_partition_poset(counts: &[usize], top_color: u32) -> Result<Interval> {
    let colors = counts.len() as u32;
    if colors == 0 || top_color == 0 || top_color > colors {
        return Err(HopfError::InvalidInput(format!(
            "top color {top_color} outside 1..={colors}"
        )));
    }
    let n: usize = counts.iter().sum();
    if n == 0 {
        return Err(HopfError::InvalidInput("colored set is empty".into()));
    }
    let mut point_colors = Vec::with_capacity(n);
    for (i, &k) in counts.iter().enumerate() {
        point_colors.extend(std::iter::repeat_n(i as u32 + 1, k));
    }
    if n == 1 {
        return Ok(Interval::singleton());
    }
    let lower = ColoredPartition {
        blocks: point_colors
            .iter()
            .enumerate()
            .map(|(p, &c)| (vec![p], c))
            .collect(),
    };
    let upper = ColoredPartition {
        blocks: vec![((0..n).collect(), top_color)],
    };
    colored_partition_interval_between(&lower, &upper, colors)
}

/// Order ideals (down-sets) of `q` ordered by inclusion.
pub fn distributive_lattice_of_ideals(q: &FinitePoset) -> Interval {
    let n = q.len();
    assert!(n <= 20, "poset too large for ideal enumeration");
    let ideals: Vec<u32> = (0u32..1 << n)
        .filter(|&s| {
            (0..n).all(|y| s >> y & 1 == 0 || (0..n).all(|x| !q.leq(x, y) || s >> x & 1 == 1))
        })
        .collect();
    let m = ideals.len();
    let mut leq = vec![false; m * m];
    for (i, &a) in ideals.iter().enumerate() {
        for (j, &b) in ideals.iter().enumerate() {
            leq[i * m + j] = a & !b == 0;
        }
    }
    let names = ideals
        .iter()
        .map(|&s| {
            let items: Vec<&str> = (0..n)
                .filter(|i| s >> i & 1 == 1)
                .map(|i| q.names[i].as_str())
                .collect();
            format!("{{{}}}", items.join(","))
        })
        .collect();
    Interval::from_flat_unchecked(names, leq, None)
}

/// The three small lattices used as worked examples:
/// 1: `0 < a,b < c < 1`; 2: `0 < a,b,c < d < 1`; 3: `0 < a < b,b' < 1`.
pub fn figure_lattice(which: u8) -> Result<Interval> {
    let (names, covers): (&[&str], &[(usize, usize)]) = match which {
        1 => (
            &["0", "a", "b", "c", "1"],
            &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)],
        ),
        2 => (
            &["0", "a", "b", "c", "d", "1"],
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4), (4, 5)],
        ),
        3 => (
            &["0", "a", "b", "b'", "1"],
            &[(0, 1), (1, 2), (1, 3), (2, 4), (3, 4)],
        ),
        _ => {
            return Err(HopfError::InvalidInput(format!(
                "unknown figure {which}; expected 1, 2 or 3"
            )))
        }
    };
    Interval::from_covers(names.iter().map(|s| s.to_string()).collect(), covers, None)
}

fn check_random_size(max_size: usize) -> Result<()> {
    if max_size == 0 || max_size > MAX_RANDOM_SIZE {
        return Err(HopfError::SizeLimit(format!(
            "random intervals need 1 <= max_size <= {MAX_RANDOM_SIZE}, got {max_size}"
        )));
    }
    Ok(())
}

/// Random strict order on `k` elements: edges `i -> j` for `i < j` with a
/// random density, then transitively closed.
fn random_order(rng: &mut ChaCha8Rng, k: usize) -> Vec<bool> {
    let density = rng.gen_range(0.15..0.6);
    let mut leq = vec![false; k * k];
    for i in 0..k {
        leq[i * k + i] = true;
        for j in i + 1..k {
            leq[i * k + j] = rng.gen_bool(density);
        }
    }
    for m in 0..k {
        for i in 0..k {
            if leq[i * k + m] {
                for j in 0..k {
                    if leq[m * k + j] {
                        leq[i * k + j] = true;
                    }
                }
            }
        }
    }
    leq
}

fn random_interval_from(rng: &mut ChaCha8Rng, max_size: usize) -> Interval {
    if max_size == 1 {
        return Interval::singleton();
    }
    let k = rng.gen_range(0..=max_size - 2);
    let inner = random_order(rng, k);
    let has_bottom = k > 0 && (0..k).any(|x| (0..k).all(|y| inner[x * k + y]));
    let has_top = k > 0 && (0..k).any(|y| (0..k).all(|x| inner[x * k + y]));
    let lo = usize::from(!has_bottom);
    let m = k + lo + usize::from(!has_top);
    let mut leq = vec![false; m * m];
    for x in 0..m {
        leq[x * m + x] = true;
        if !has_bottom {
            leq[x] = true;
        }
        if !has_top {
            leq[x * m + m - 1] = true;
        }
    }
    for x in 0..k {
        for y in 0..k {
            leq[(x + lo) * m + y + lo] = inner[x * k + y];
        }
    }
    let mut names: Vec<String> = Vec::with_capacity(m);
    if !has_bottom {
        names.push("0".into());
    }
    names.extend((1..=k).map(|i| format!("e{i}")));
    if !has_top {
        names.push("1".into());
    }
    Interval::from_flat_unchecked(names, leq, None)
}

/// Reproducible random interval with at most `max_size` elements.
pub fn random_interval(seed: u64, max_size: usize) -> Result<Interval> {
    check_random_size(max_size)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(random_interval_from(&mut rng, max_size))
}

/// Reproducible random lattice: the Dedekind-MacNeille completion of a random
/// poset, redrawn until it has at most `max_size` elements.
pub fn random_lattice(seed: u64, max_size: usize) -> Result<Interval> {
    check_random_size(max_size)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let k = rng.gen_range(0..=max_size.saturating_sub(2).min(8));
        let order = random_order(&mut rng, k);
        let full: u32 = (1u32 << k) - 1;
        let principal: Vec<u32> = (0..k)
            .map(|y| {
                (0..k)
                    .filter(|&x| order[x * k + y])
                    .fold(0, |s, x| s | 1 << x)
            })
            .collect();
        let mut cuts: BTreeSet<u32> = BTreeSet::new();
        cuts.insert(full);
        cuts.extend(principal.iter().copied());
        loop {
            let current: Vec<u32> = cuts.iter().copied().collect();
            let before = cuts.len();
            for &a in &current {
                for &b in &current {
                    cuts.insert(a & b);
                }
            }
            if cuts.len() == before {
                break;
            }
        }
        if cuts.len() > max_size {
            continue;
        }
        let cuts: Vec<u32> = cuts.into_iter().collect();
        let m = cuts.len();
        let mut leq = vec![false; m * m];
        for (i, &a) in cuts.iter().enumerate() {
            for (j, &b) in cuts.iter().enumerate() {
                leq[i * m + j] = a & !b == 0;
            }
        }
        let names = cuts
            .iter()
            .map(|&s| {
                let items: Vec<String> = (0..k)
                    .filter(|i| s >> i & 1 == 1)
                    .map(|i| format!("e{}", i + 1))
                    .collect();
                format!("{{{}}}", items.join(","))
            })
            .collect();
        return Ok(Interval::from_flat_unchecked(names, leq, None));
    }
}

/// Reproducible random interval that is not a lattice.
pub fn random_non_lattice(seed: u64, max_size: usize) -> Result<Interval> {
    check_random_size(max_size)?;
    if max_size < 6 {
        return Err(HopfError::SizeLimit(
            "non-lattice intervals need at least 6 elements".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let p = random_interval_from(&mut rng, max_size);
        if !p.is_lattice() {
            return Ok(p);
        }
    }
}

/// All posets on at most `k` elements up to isomorphism (`k <= 5`).
pub fn all_posets(k: usize) -> Result<Vec<FinitePoset>> {
    if k > 5 {
        return Err(HopfError::SizeLimit(format!(
            "poset enumeration supports at most 5 elements, got {k}"
        )));
    }
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for n in 0..=k {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        for mask in 0u32..1 << pairs.len() {
            let mut table = vec![vec![false; n]; n];
            for (i, row) in table.iter_mut().enumerate() {
                row[i] = true;
            }
            for (b, &(i, j)) in pairs.iter().enumerate() {
                table[i][j] = mask >> b & 1 == 1;
            }
            let names: Vec<String> = (0..n).map(|i| format!("q{}", i + 1)).collect();
            let Ok(q) = FinitePoset::from_leq_table(names, &table) else {
                continue;
            };
            if seen.insert(canonical_form(&q.bounded())) {
                out.push(q);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::are_equivalent;

    fn bell(n: usize) -> usize {
        // Bell triangle.
        let mut row = vec![1usize];
        for _ in 1..n {
            let mut next = vec![*row.last().unwrap()];
            for &x in &row {
                next.push(next.last().unwrap() + x);
            }
            row = next;
        }
        *row.last().unwrap()
    }

    #[test]
    fn boolean_and_chain_sizes() {
        assert!(boolean_lattice(0).is_singleton());
        assert_eq!(boolean_lattice(3).len(), 8);
        assert_eq!(boolean_lattice(2).enumerate_chains().len(), 3);
        assert_eq!(chain_lattice(3).len(), 4);
        assert_eq!(boolean_lattice(3).enumerate_chains().len(), 13);
    }

    #[test]
    fn partition_lattice_sizes_are_bell_numbers() {
        for n in 1..=5 {
            assert_eq!(partition_lattice(n).unwrap().len(), bell(n));
        }
        assert!(partition_lattice(1).unwrap().is_singleton());
        assert!(matches!(partition_lattice(7), Err(HopfError::SizeLimit(_))));
        assert!(matches!(partition_lattice(0), Err(HopfError::SizeLimit(_))));
    }

    #[test]
    fn single_color_matches_partition_lattice() {
        for n in 2..=4 {
            let colored = colored_partition_poset(&[n], 1).unwrap();
            assert!(colored.coloring().is_none());
            assert!(are_equivalent(&colored, &partition_lattice(n).unwrap()));
        }
    }

    #[test]
    fn two_colored_posets() {
        let p = colored_partition_poset(&[1, 2], 1).unwrap();
        // Blocks {23},{12},{13} two colors each, plus bottom and the top.
        assert_eq!(p.len(), 1 + 6 + 1);
        assert!(p.coloring().is_some());
        let q = colored_partition_poset(&[2, 2], 2).unwrap();
        assert!(!q.is_lattice());
    }

    #[test]
    fn colored_partition_parsing() {
        let p = ColoredPartition::parse("1_1/2_2/(34)_1").unwrap();
        assert_eq!(p.label(), "1_1/2_2/(34)_1");
        assert!(ColoredPartition::parse("1_1/1_2").is_err());
        assert!(ColoredPartition::parse("(12)").is_err());
    }

    #[test]
    fn ideals_of_small_posets() {
        let anti = FinitePoset::from_covers(vec!["x".into(), "y".into()], &[]).unwrap();
        assert!(are_equivalent(
            &distributive_lattice_of_ideals(&anti),
            &boolean_lattice(2)
        ));
        let chain = FinitePoset::from_covers(vec!["x".into(), "y".into()], &[(0, 1)]).unwrap();
        assert!(are_equivalent(
            &distributive_lattice_of_ideals(&chain),
            &chain_lattice(2)
        ));
        let empty = FinitePoset::from_covers(Vec::new(), &[]).unwrap();
        assert!(distributive_lattice_of_ideals(&empty).is_singleton());
    }

    #[test]
    fn figures_match_their_descriptions() {
        let f1 = figure_lattice(1).unwrap();
        let (a, b, c) = (
            f1.find("a").unwrap(),
            f1.find("b").unwrap(),
            f1.find("c").unwrap(),
        );
        assert_eq!(f1.join(a, b), Some(c));
        let f2 = figure_lattice(2).unwrap();
        let d = f2.find("d").unwrap();
        for x in ["a", "b", "c"] {
            assert!(f2.lt(f2.find(x).unwrap(), d));
        }
        let f3 = figure_lattice(3).unwrap();
        assert_eq!(f3.upper_covers(f3.find("a").unwrap()).len(), 2);
        assert!(figure_lattice(4).is_err());
    }

    #[test]
    fn random_generators_are_reproducible_and_bounded() {
        for seed in 0..50 {
            let p = random_interval(seed, 10).unwrap();
            assert_eq!(p, random_interval(seed, 10).unwrap());
            assert!(p.len() <= 10);
            let l = random_lattice(seed, 10).unwrap();
            assert!(l.len() <= 10 && l.is_lattice());
            let q = random_non_lattice(seed, 8).unwrap();
            assert!(q.len() <= 8 && !q.is_lattice());
        }
        assert!(random_interval(0, 15).is_err());
    }

    #[test]
    fn poset_census() {
        let counts: Vec<usize> = (0..=4).map(|k| all_posets(k).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 9, 25]);
    }

    #[test]
    fn upper_intervals_of_partition_lattices() {
        let p = partition_lattice(4).unwrap();
        for x in p.elements() {
            let blocks = p.name(x).split('/').count();
            let upper = p.subinterval(x, p.top()).unwrap();
            assert!(are_equivalent(&upper, &partition_lattice(blocks).unwrap()));
        }
    }

    #[test]
    fn colored_interval_equivalences() {
        let a = colored_partition_interval("1_1/2_1/3_2/4_2/5_1", "(13)_2/(45)_1/2_1").unwrap();
        let b = colored_partition_interval("1_1/2_1/3_2/(45)_2", "(145)_2/(23)_1").unwrap();
        let c = colored_partition_interval("1_1/2_2/3_1/4_2", "(12)_2/(34)_1").unwrap();
        assert!(are_equivalent(&a, &b));
        assert!(are_equivalent(&b, &c));
        let other = colored_partition_interval("1_1/2_2/3_1/4_2", "(12)_1/(34)_1").unwrap();
        assert!(!are_equivalent(&c, &other));
    }

    #[test]
    fn colored_interval_products() {
        let x = colored_partition_interval("1_1/2_2/3_1", "(12)_1/3_1").unwrap();
        let y = colored_partition_interval("1_2/(23)_1", "(123)_2").unwrap();
        let xy = x.cartesian_product(&y).into_interval();
        let p = colored_partition_interval("1_1/2_2/3_1/4_2/(56)_1", "(12)_1/3_1/(456)_2").unwrap();
        let q = colored_partition_interval("1_1/2_2/3_2/4_1", "(12)_1/(34)_2").unwrap();
        assert!(are_equivalent(&xy, &p));
        assert!(are_equivalent(&p, &q));
    }
}
