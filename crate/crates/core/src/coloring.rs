//! Element colorings used by color-isomorphism.
//!
//! Every element carries a set of colored tokens. Two colored intervals are
//! equivalent when there is an order isomorphism preserving, for every
//! element `z`, the pair of color multisets
//! `(colors(tokens(z) \ tokens(0)), colors(tokens(0) \ tokens(z)))`,
//! i.e. labels are read *relative to the bottom of the interval*.
//!
//! A plain per-element color `c` is the special case of one private token of
//! color `c` per element. Colored partitions use one token per colored block,
//! which makes the relative label of `σ` inside `[π, ρ]` the pair
//! (colors of the new blocks of `σ`, colors of the blocks of `π` merged away).
//! Relative labels make singletons colorless and add up over Cartesian
//! products, so the colored intervals still form a hereditary family.

use std::collections::BTreeMap;

use crate::poset::ElementId;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Token {
    pub name: String,
    pub color: u32,
}

/// Relative label of an element: (added colors, removed colors), both sorted.
pub type LabelKey = (Vec<u32>, Vec<u32>);

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Coloring {
    tokens: Vec<Token>,
    element_tokens: Vec<Vec<u32>>,
}

impl Coloring {
    /// Builds a coloring from per-element token lists. Tokens are identified
    /// by `(name, color)`.
    pub fn from_element_tokens(per_element: Vec<Vec<Token>>) -> Self {
        let mut index: BTreeMap<Token, u32> = BTreeMap::new();
        let mut tokens = Vec::new();
        let element_tokens = per_element
            .into_iter()
            .map(|list| {
                let mut ids: Vec<u32> = list
                    .into_iter()
                    .map(|t| {
                        *index.entry(t.clone()).or_insert_with(|| {
                            tokens.push(t);
                            (tokens.len() - 1) as u32
                        })
                    })
                    .collect();
                ids.sort_unstable();
                ids.dedup();
                ids
            })
            .collect();
        Coloring {
            tokens,
            element_tokens,
        }
    }

    /// One private token per colored element.
    pub fn from_vertex_colors(names: &[String], colors: &[Option<u32>]) -> Self {
        let per_element = names
            .iter()
            .zip(colors)
            .map(|(name, c)| match c {
                Some(color) => vec![Token {
                    name: name.clone(),
                    color: *color,
                }],
                None => Vec::new(),
            })
            .collect();
        Self::from_element_tokens(per_element)
    }

    pub fn len(&self) -> usize {
        self.element_tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.element_tokens.is_empty()
    }

    pub fn tokens_of(&self, x: ElementId) -> impl Iterator<Item = &Token> + '_ {
        self.element_tokens[x.0]
            .iter()
            .map(move |&t| &self.tokens[t as usize])
    }

    /// True when no element carries any token.
    pub fn is_trivial(&self) -> bool {
        self.element_tokens.iter().all(Vec::is_empty)
    }

    /// If every element has at most one token and no token is shared, returns
    /// the equivalent plain per-element colors.
    pub fn as_vertex_colors(&self) -> Option<Vec<Option<u32>>> {
        let mut seen = vec![false; self.tokens.len()];
        let mut out = Vec::with_capacity(self.element_tokens.len());
        for list in &self.element_tokens {
            match list.as_slice() {
                [] => out.push(None),
                [t] => {
                    if std::mem::replace(&mut seen[*t as usize], true) {
                        return None;
                    }
                    out.push(Some(self.tokens[*t as usize].color));
                }
                _ => return None,
            }
        }
        Some(out)
    }

    /// Relative labels of all elements with respect to `bottom`.
    pub fn relative_labels(&self, bottom: ElementId) -> Vec<LabelKey> {
        let base = &self.element_tokens[bottom.0];
        self.element_tokens
            .iter()
            .map(|own| {
                let mut added: Vec<u32> = own
                    .iter()
                    .filter(|t| base.binary_search(t).is_err())
                    .map(|&t| self.tokens[t as usize].color)
                    .collect();
                let mut removed: Vec<u32> = base
                    .iter()
                    .filter(|t| own.binary_search(t).is_err())
                    .map(|&t| self.tokens[t as usize].color)
                    .collect();
                added.sort_unstable();
                removed.sort_unstable();
                (added, removed)
            })
            .collect()
    }

    /// Coloring of the elements listed in `embedding` (new index -> old index).
    pub fn restrict(&self, embedding: &[ElementId]) -> Self {
        Coloring {
            tokens: self.tokens.clone(),
            element_tokens: embedding
                .iter()
                .map(|x| self.element_tokens[x.0].clone())
                .collect(),
        }
    }

    /// Coloring of the Cartesian product; element `(x, y)` has index
    /// `x * right_len + y` and carries the disjoint union of both token sets.
    pub fn product(
        left: Option<&Coloring>,
        left_len: usize,
        right: Option<&Coloring>,
        right_len: usize,
    ) -> Option<Coloring> {
        if left.is_none() && right.is_none() {
            return None;
        }
        let empty_l = Coloring {
            tokens: Vec::new(),
            element_tokens: vec![Vec::new(); left_len],
        };
        let empty_r = Coloring {
            tokens: Vec::new(),
            element_tokens: vec![Vec::new(); right_len],
        };
        let l = left.unwrap_or(&empty_l);
        let r = right.unwrap_or(&empty_r);
        let offset = l.tokens.len() as u32;
        let mut tokens = l.tokens.clone();
        tokens.extend(r.tokens.iter().cloned());
        let mut element_tokens = Vec::with_capacity(left_len * right_len);
        for x in &l.element_tokens {
            for y in &r.element_tokens {
                let mut ids = x.clone();
                ids.extend(y.iter().map(|t| t + offset));
                element_tokens.push(ids);
            }
        }
        Some(Coloring {
            tokens,
            element_tokens,
        })
    }

    /// Coloring after permuting elements: new element `i` is old `order[i]`.
    pub fn permuted(&self, order: &[ElementId]) -> Self {
        self.restrict(order)
    }
}
