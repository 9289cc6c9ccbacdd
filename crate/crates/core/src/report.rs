//! Serializable summary of an analysis. Vertices are 1-based.

use serde::{Deserialize, Serialize};

use crate::graph::Vertex;
use crate::solver::DominationResult;
use crate::structure::C0PStructure;

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: u32,
    pub n: usize,
    pub c0p: bool,
    pub ordering: Option<Vec<Vertex>>,
    pub partition: Option<PartitionReport>,
    pub alpha: Option<[usize; 2]>,
    pub results: Vec<ResultEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionReport {
    pub c1: Vec<Vertex>,
    pub c2: Vec<Vertex>,
    pub u: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultEntry {
    pub k: usize,
    pub status: String,
    pub gamma: Option<usize>,
    pub witness: Option<Vec<Vertex>>,
    pub rule: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

fn one_based(vs: &[Vertex]) -> Vec<Vertex> {
    vs.iter().map(|v| v + 1).collect()
}

impl ResultEntry {
    pub fn new(k: usize, result: &DominationResult) -> Self {
        Self {
            k,
            status: result.status().to_string(),
            gamma: result.gamma(),
            witness: result.witness().map(|w| one_based(w.as_slice())),
            rule: result.rule().map(|r| r.as_str().to_string()),
            reason: match result {
                DominationResult::Undetermined { reason } => Some(reason.clone()),
                _ => None,
            },
        }
    }
}

impl Report {
    pub fn not_c0p(n: usize) -> Self {
        Self {
            version: REPORT_VERSION,
            n,
            c0p: false,
            ordering: None,
            partition: None,
            alpha: None,
            results: Vec::new(),
        }
    }

    pub fn from_structure(st: &C0PStructure) -> Self {
        Self {
            version: REPORT_VERSION,
            n: st.n(),
            c0p: true,
            ordering: Some(one_based(st.ordering())),
            partition: Some(PartitionReport {
                c1: one_based(st.c1()),
                c2: one_based(st.c2()),
                u: one_based(st.u()),
            }),
            alpha: Some([st.alpha1(), st.alpha2()]),
            results: Vec::new(),
        }
    }

    pub fn with_results<'a>(
        mut self,
        results: impl IntoIterator<Item = (usize, &'a DominationResult)>,
    ) -> Self {
        self.results = results
            .into_iter()
            .map(|(k, r)| ResultEntry::new(k, r))
            .collect();
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::example_graph;
    use crate::solver::gamma_ktuple;
    use crate::structure::analyze;

    #[test]
    fn json_shape() {
        let g = example_graph();
        let st = analyze(&g).unwrap();
        let r2 = gamma_ktuple(&g, 2).unwrap();
        let r5 = gamma_ktuple(&g, 5).unwrap();
        let report = Report::from_structure(&st).with_results([(2, &r2), (5, &r5)]);
        let v: serde_json::Value = serde_json::to_value(&report).unwrap();
        assert_eq!(v["version"], 1);
        assert_eq!(v["n"], 7);
        assert_eq!(v["partition"]["u"], serde_json::json!([7]));
        assert_eq!(v["results"][0]["gamma"], 3);
        assert_eq!(v["results"][1]["status"], "infeasible");
        assert!(v["results"][1]["gamma"].is_null());
        let back: Report = serde_json::from_value(v).unwrap();
        assert_eq!(back, report);
    }
}
