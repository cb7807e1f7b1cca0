//! JSON shapes shared by every subcommand.
//!
//! Labelings are `{"n": 3, "rows": [["0", "2", "3", "3"], ...]}` with
//! `rows[i-1][k]` the label of `a^i_k`, each a rational string `"p"` or
//! `"p/q"`. Partitions are integer arrays.

use std::collections::BTreeMap;

use hive_core::bijection::PartitionChain;
use hive_core::hive::{HiveCoord, Labeling};
use hive_core::polytope::{Flatspace, HiveGraph, LinearForm, Node};
use hive_core::saturation::{Incident, Provenance, Report, TripleSample};
use hive_core::tableau::{ContraTableau, SkewTableau};
use hive_core::{Partition, Rational};
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingJson {
    pub n: usize,
    pub rows: Vec<Vec<String>>,
}

impl From<&Labeling> for LabelingJson {
    fn from(h: &Labeling) -> Self {
        LabelingJson {
            n: h.n(),
            rows: h
                .rows()
                .iter()
                .map(|row| row.iter().map(Rational::to_string).collect())
                .collect(),
        }
    }
}

impl LabelingJson {
    pub fn to_labeling(&self) -> Result<Labeling, String> {
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|s| parse_rational(s)).collect())
            .collect::<Result<Vec<Vec<Rational>>, String>>()?;
        let h = Labeling::from_rows(rows).map_err(|e| e.to_string())?;
        if h.n() != self.n {
            return Err(format!(
                "\"n\" is {} but the rows describe side {}",
                self.n,
                h.n()
            ));
        }
        Ok(h)
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let t = s.trim();
    let r: Rational = t.parse().map_err(|_| format!("not a rational: {s:?}"))?;
    Ok(r)
}

pub fn labeling_value(h: &Labeling) -> Value {
    serde_json::to_value(LabelingJson::from(h)).expect("plain data")
}

pub fn labeling_from_value(v: &Value) -> Result<Labeling, String> {
    LabelingJson::deserialize(v)
        .map_err(|e| format!("not a labeling: {e}"))?
        .to_labeling()
}

pub fn partition_value(p: &Partition) -> Value {
    json!(p.parts())
}

pub fn partition_from_value(v: &Value) -> Result<Partition, String> {
    let parts: Vec<u64> =
        serde_json::from_value(v.clone()).map_err(|e| format!("not a partition: {e}"))?;
    Partition::new(parts).map_err(|e| e.to_string())
}

/// Skew tableau rows, `null` in the inner cells.
pub fn skew_tableau_value(t: &SkewTableau) -> Value {
    json!(t.grid())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContraTableauJson {
    pub shape: Vec<u64>,
    /// Row `k` from the bottom, left to right.
    pub rows: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub chain: Vec<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub word: Vec<u32>,
}

impl ContraTableauJson {
    pub fn new(
        t: &ContraTableau,
        mu: &Partition,
        n: usize,
        chain: Option<&PartitionChain>,
    ) -> Self {
        ContraTableauJson {
            shape: t.shape().parts().to_vec(),
            rows: t.rows().to_vec(),
            mu: Some(mu.parts().to_vec()),
            n: Some(n),
            chain: chain
                .map(|c| c.levels().iter().map(|p| p.parts().to_vec()).collect())
                .unwrap_or_default(),
            word: t.word().0,
        }
    }

    pub fn to_contratableau(&self) -> Result<ContraTableau, String> {
        let shape = Partition::new(self.shape.clone()).map_err(|e| e.to_string())?;
        ContraTableau::new(shape, self.rows.clone()).map_err(|e| e.to_string())
    }
}

pub fn provenance_value(p: &Provenance) -> Value {
    match p {
        Provenance::Seeded { seed, index } => json!({"seed": seed, "index": index}),
        Provenance::Exhaustive(range) => json!({"exhaustive": range}),
    }
}

pub fn triple_value(t: &TripleSample) -> Value {
    json!({
        "lambda": partition_value(&t.lambda),
        "mu": partition_value(&t.mu),
        "nu": partition_value(&t.nu),
        "n": t.n,
        "provenance": provenance_value(&t.provenance),
    })
}

fn incident_value(i: &Incident) -> Value {
    json!({
        "triple": i.triple.as_ref().map(triple_value),
        "labeling": i.labeling.as_ref().map(labeling_value),
        "detail": i.detail,
    })
}

pub fn report_value(r: &Report, witness: Option<&Labeling>) -> Value {
    let mut v = json!({
        "claim": r.claim.id(),
        "passed": r.passed(),
        "samples": r.samples,
        "failures": r.failures.iter().map(incident_value).collect::<Vec<_>>(),
        "findings": r.findings.iter().map(incident_value).collect::<Vec<_>>(),
        "seed": r.seed,
        "runtime_ms": r.runtime.map(|d| d.as_millis() as u64),
    });
    if let Some(w) = witness {
        v["witness"] = labeling_value(w);
    }
    v
}

pub fn flatspace_value(f: &Flatspace) -> Value {
    json!({
        "shape": f.shape.to_string(),
        "triangles": f.triangles.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "sides": f.side_lengths(),
        "interior_vertices": f.interior_vertices().iter().map(ToString::to_string).collect::<Vec<_>>(),
    })
}

pub fn graph_value(g: &HiveGraph) -> Value {
    let node = |n: &Node| match n {
        Node::Blue(b) => format!("blue {b}"),
        Node::Red(r) => format!("red {r}"),
    };
    json!({
        "blue": g.blues.iter().map(|b| b.triangle.to_string()).collect::<Vec<_>>(),
        "red": g.reds.iter().map(|r| json!({"edge": r.edge.to_string(), "label": r.label.to_string()})).collect::<Vec<_>>(),
        "edges": g.edges.iter().map(|(a, b)| [node(a), node(b)]).collect::<Vec<_>>(),
    })
}

pub fn forms_value(forms: &BTreeMap<HiveCoord, LinearForm>) -> Value {
    Value::Object(
        forms
            .iter()
            .map(|(c, f)| (c.to_string(), Value::String(f.to_string())))
            .collect(),
    )
}

/// A big count as a JSON number when it fits, a decimal string otherwise.
pub fn count_value(c: &hive_core::BigUint) -> Value {
    match c.to_u64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}
