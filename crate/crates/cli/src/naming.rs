use std::collections::HashMap;

use hopf_core::{ClassId, ClassRegistry, HopfElement, Monomial};
use serde_json::{json, Value};

/// Stable class names for one run: classes are ranked by representative
/// size, then certificate, so `X1` is always the 2-chain and names do not
/// depend on the order in which parallel workers registered them.
pub struct Names {
    rank: HashMap<ClassId, u32>,
    table: Vec<(u32, usize, String)>,
}

impl Names {
    pub fn new(registry: &ClassRegistry) -> Self {
        let mut records = registry.records();
        records.sort_by(|a, b| {
            (a.representative.len(), a.certificate.as_bytes())
                .cmp(&(b.representative.len(), b.certificate.as_bytes()))
        });
        let rank = records
            .iter()
            .enumerate()
            .map(|(i, r)| (r.id, i as u32))
            .collect();
        let table = records
            .iter()
            .enumerate()
            .map(|(i, r)| (i as u32, r.representative.len(), r.certificate.to_hex()))
            .collect();
        Names { rank, table }
    }

    pub fn name(&self, id: ClassId) -> String {
        format!("X{}", self.rank[&id] + 1)
    }

    /// Re-indexes by rank so that term order follows the stable names.
    pub fn monomial(&self, m: &Monomial) -> Monomial {
        Monomial::from_factors(
            m.factors()
                .iter()
                .map(|id| ClassId(self.rank[id]))
                .collect(),
        )
    }

    pub fn element(&self, e: &HopfElement) -> HopfElement {
        e.terms()
            .map(|(m, c)| (self.monomial(m), c.clone()))
            .collect()
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        self.monomial(m).format_with(&ranked)
    }

    pub fn format_element(&self, e: &HopfElement) -> String {
        self.element(e).format_with(&ranked)
    }

    pub fn terms_json(&self, e: &HopfElement) -> Value {
        let ranked_element = self.element(e);
        Value::Array(
            ranked_element
                .terms()
                .map(|(m, c)| {
                    let coefficient = i64::try_from(c)
                        .map(Value::from)
                        .unwrap_or_else(|_| Value::from(c.to_string()));
                    json!({"coefficient": coefficient, "monomial": m.format_with(&ranked)})
                })
                .collect(),
        )
    }

    pub fn classes_json(&self) -> Value {
        Value::Array(
            self.table
                .iter()
                .map(|(rank, size, cert)| {
                    json!({"name": format!("X{}", rank + 1), "size": size, "certificate": cert})
                })
                .collect(),
        )
    }
}

fn ranked(id: ClassId) -> String {
    format!("X{}", id.0 + 1)
}
