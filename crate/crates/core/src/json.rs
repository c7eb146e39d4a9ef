//! Interval JSON: `{"elements": [...], "covers": [["x", "y"], ...]}` where
//! `y` covers `x`, with optional `"colors": {"x": 1}` or token colorings
//! `"blocks": {"x": [["13", 2], ...]}`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::coloring::{Coloring, Token};
use crate::error::{HopfError, Result};
use crate::poset::{FinitePoset, Interval};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntervalDoc {
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colors: Option<BTreeMap<String, u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<BTreeMap<String, Vec<(String, u32)>>>,
}

fn invalid(msg: impl Into<String>) -> HopfError {
    HopfError::InvalidInput(msg.into())
}

impl IntervalDoc {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| invalid(format!("malformed interval JSON: {e}")))
    }

    fn index(&self) -> Result<HashMap<&str, usize>> {
        let mut index = HashMap::with_capacity(self.elements.len());
        for (i, name) in self.elements.iter().enumerate() {
            if index.insert(name.as_str(), i).is_some() {
                return Err(invalid(format!("duplicate element {name:?}")));
            }
        }
        Ok(index)
    }

    fn cover_pairs(&self, index: &HashMap<&str, usize>) -> Result<Vec<(usize, usize)>> {
        let lookup = |name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| invalid(format!("unknown element {name:?}")))
        };
        self.covers
            .iter()
            .map(|(x, y)| Ok((lookup(x)?, lookup(y)?)))
            .collect()
    }

    fn coloring(&self, index: &HashMap<&str, usize>) -> Result<Option<Coloring>> {
        let check = |name: &String| {
            if index.contains_key(name.as_str()) {
                Ok(())
            } else {
                Err(invalid(format!("color given for unknown element {name:?}")))
            }
        };
        match (&self.colors, &self.blocks) {
            (Some(_), Some(_)) => Err(invalid("give either colors or blocks, not both")),
            (Some(colors), None) => {
                colors.keys().try_for_each(check)?;
                let per_element: Vec<Option<u32>> = self
                    .elements
                    .iter()
                    .map(|name| colors.get(name).copied())
                    .collect();
                Ok(Some(Coloring::from_vertex_colors(
                    &self.elements,
                    &per_element,
                )))
            }
            (None, Some(blocks)) => {
                blocks.keys().try_for_each(check)?;
                let per_element = self
                    .elements
                    .iter()
                    .map(|name| {
                        blocks
                            .get(name)
                            .into_iter()
                            .flatten()
                            .map(|(token, color)| Token {
                                name: token.clone(),
                                color: *color,
                            })
                            .collect()
                    })
                    .collect();
                Ok(Some(Coloring::from_element_tokens(per_element)))
            }
            (None, None) => Ok(None),
        }
    }

    pub fn to_interval(&self) -> Result<Interval> {
        let index = self.index()?;
        let covers = self.cover_pairs(&index)?;
        let coloring = self.coloring(&index)?;
        Interval::from_covers(self.elements.clone(), &covers, coloring)
    }

    /// Plain posets only; colorings are rejected.
    pub fn to_poset(&self) -> Result<FinitePoset> {
        if self.colors.is_some() || self.blocks.is_some() {
            return Err(invalid("posets for the ideal construction carry no colors"));
        }
        let index = self.index()?;
        let covers = self.cover_pairs(&index)?;
        FinitePoset::from_covers(self.elements.clone(), &covers)
    }

    pub fn from_interval(p: &Interval) -> Self {
        let name = |x| p.name(x).to_string();
        let covers = p
            .covers()
            .into_iter()
            .map(|(x, y)| (name(x), name(y)))
            .collect();
        let (mut colors, mut blocks) = (None, None);
        if let Some(c) = p.coloring() {
            if let Some(vertex) = c.as_vertex_colors() {
                colors = Some(
                    p.elements()
                        .zip(vertex)
                        .filter_map(|(x, col)| col.map(|col| (name(x), col)))
                        .collect(),
                );
            } else {
                blocks = Some(
                    p.elements()
                        .map(|x| {
                            let tokens =
                                c.tokens_of(x).map(|t| (t.name.clone(), t.color)).collect();
                            (name(x), tokens)
                        })
                        .collect(),
                );
            }
        }
        IntervalDoc {
            elements: p.names().to_vec(),
            covers,
            colors,
            blocks,
        }
    }
}

pub fn interval_from_json(text: &str) -> Result<Interval> {
    IntervalDoc::parse(text)?.to_interval()
}

pub fn poset_from_json(text: &str) -> Result<FinitePoset> {
    IntervalDoc::parse(text)?.to_poset()
}

pub fn interval_to_json(p: &Interval) -> String {
    serde_json::to_string_pretty(&IntervalDoc::from_interval(p)).expect("serializable")
}
