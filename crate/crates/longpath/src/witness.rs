//! Machine-readable answers printed by the solver commands.

use serde::{Deserialize, Serialize};

use longpath_core::detour::{DetourAnswer, Verdict};
use longpath_core::diameter::{LpadAnswer, LpadMethod};
use longpath_core::graph::Adjacency;
use longpath_core::{Baseline, Certainty, PathWitness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BaselineKind {
    Dist,
    Diameter,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaselineDoc {
    pub kind: BaselineKind,
    pub value: usize,
}

impl From<Baseline> for BaselineDoc {
    fn from(b: Baseline) -> Self {
        match b {
            Baseline::Dist(value) => BaselineDoc { kind: BaselineKind::Dist, value },
            Baseline::Diameter(value) => BaselineDoc { kind: BaselineKind::Diameter, value },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum VerdictMeta {
    Exact,
    Randomized { delta: f64 },
    Inconclusive,
}

impl VerdictMeta {
    fn of(verdict: Verdict, certainty: Certainty) -> Self {
        match (verdict, certainty) {
            (Verdict::Inconclusive, _) => VerdictMeta::Inconclusive,
            (_, Certainty::Exact) => VerdictMeta::Exact,
            (_, Certainty::Randomized { delta }) => VerdictMeta::Randomized { delta },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct WitnessDocument {
    pub found: bool,
    /// Arcs of `path`; 0 when nothing was found.
    pub length: usize,
    /// Absent when the baseline is undefined (target unreachable).
    pub baseline: Option<BaselineDoc>,
    /// 1-indexed vertices.
    pub path: Vec<usize>,
    pub stage: String,
    pub verdict_meta: VerdictMeta,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notice: Option<String>,
}

impl WitnessDocument {
    fn new(
        verdict: Verdict,
        certainty: Certainty,
        witness: Option<&PathWitness>,
        baseline: Option<Baseline>,
        stage: String,
    ) -> Self {
        let path: Vec<usize> = witness.map(|w| w.vertices.iter().map(|v| v + 1).collect()).unwrap_or_default();
        WitnessDocument {
            found: witness.is_some(),
            length: path.len().saturating_sub(1),
            baseline: baseline.map(BaselineDoc::from),
            path,
            stage,
            verdict_meta: VerdictMeta::of(verdict, certainty),
            verdict: verdict_name(verdict).into(),
            notice: None,
        }
    }

    pub fn from_detour(a: &DetourAnswer) -> Self {
        let stage = a.witness.as_ref().map_or_else(|| a.stage.name().to_string(), |w| w.stage.clone());
        WitnessDocument::new(a.verdict, a.certainty, a.witness.as_ref(), a.dist.map(Baseline::Dist), stage)
    }

    pub fn from_lpad(a: &LpadAnswer) -> Self {
        let stage = a.witness.as_ref().map_or_else(|| method_name(a.method).to_string(), |w| w.stage.clone());
        let mut doc = WitnessDocument::new(
            a.verdict,
            a.certainty,
            a.witness.as_ref(),
            Some(Baseline::Diameter(a.diameter)),
            stage,
        );
        doc.notice = a.notice.clone();
        doc
    }

    /// Replays the path against `g` (no-op when nothing was found).
    pub fn revalidate(&self, g: &impl Adjacency) -> longpath_core::Result<()> {
        if !self.found {
            return Ok(());
        }
        let vertices = self.path.iter().map(|v| v.wrapping_sub(1)).collect();
        PathWitness::new(vertices, self.stage.clone()).validate(g)
    }
}

pub fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Yes => "yes",
        Verdict::No => "no",
        Verdict::Inconclusive => "inconclusive",
    }
}

pub fn method_name(m: LpadMethod) -> &'static str {
    match m {
        LpadMethod::Cycle => "cycle",
        LpadMethod::PathSearch => "path-search",
        LpadMethod::Builder => "builder",
        LpadMethod::Fallback => "fallback",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use longpath_core::detour::{solve_directed_detour, DetourConfig};
    use longpath_core::DirectedGraph;

    #[test]
    fn detour_document_round_trips() {
        let g = DirectedGraph::new(5, [(0, 1), (1, 4), (0, 2), (2, 3), (3, 1)]).unwrap();
        let a = solve_directed_detour(&g, 0, 4, 2, &DetourConfig::default()).unwrap();
        let doc = WitnessDocument::from_detour(&a);
        assert!(doc.found);
        assert_eq!(doc.length, 4);
        assert_eq!(doc.path, vec![1, 3, 4, 2, 5]);
        assert_eq!(doc.baseline, Some(BaselineDoc { kind: BaselineKind::Dist, value: 2 }));
        doc.revalidate(&g).unwrap();
        let json = serde_json::to_string(&doc).unwrap();
        assert!(json.contains("\"verdictMeta\":{\"kind\":\"exact\"}"), "{json}");
        assert_eq!(serde_json::from_str::<WitnessDocument>(&json).unwrap(), doc);
    }

    #[test]
    fn tampered_path_fails_revalidation() {
        let g = DirectedGraph::new(3, [(0, 1), (1, 2)]).unwrap();
        let a = solve_directed_detour(&g, 0, 2, 0, &DetourConfig::default()).unwrap();
        let mut doc = WitnessDocument::from_detour(&a);
        doc.revalidate(&g).unwrap();
        doc.path = vec![1, 3];
        assert!(doc.revalidate(&g).is_err());
    }

    #[test]
    fn randomized_meta_serializes_delta() {
        let json = serde_json::to_string(&VerdictMeta::Randomized { delta: 0.25 }).unwrap();
        assert_eq!(json, r#"{"kind":"randomized","delta":0.25}"#);
    }
}
