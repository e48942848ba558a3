//! JSON side documents written next to generated graphs: the role map of a
//! gadget graph and the embedding of a reduction instance. Vertex ids are
//! 1-indexed, as in graph files.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use longpath_core::gadgets::{GadgetBlueprint, ReductionInstance, ReductionKind};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DocumentError {
    #[error("blueprint has no role \"{0}\"")]
    MissingRole(String),
    #[error("role \"{role}\" has vertex 0; ids are 1-indexed")]
    ZeroVertex { role: String },
    #[error("blueprint rejected: {0}")]
    Core(#[from] longpath_core::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlueprintDocument {
    pub ell: usize,
    pub vertices: usize,
    /// Role name (`s`, `t`, `s1`..`s14`, `t1`..`t14`, `hat<j>.h<i>`) to
    /// vertex.
    pub roles: BTreeMap<String, usize>,
}

impl BlueprintDocument {
    pub fn from_blueprint(bp: &GadgetBlueprint) -> Self {
        BlueprintDocument {
            ell: bp.ell,
            vertices: bp.vertex_count(),
            roles: bp.roles().into_iter().map(|(name, v)| (name, v + 1)).collect(),
        }
    }

    /// Rebuilds the blueprint; fails on missing roles or broken
    /// identifications.
    pub fn to_blueprint(&self) -> Result<GadgetBlueprint, DocumentError> {
        let role = |name: String| -> Result<usize, DocumentError> {
            match self.roles.get(&name) {
                Some(0) => Err(DocumentError::ZeroVertex { role: name }),
                Some(&v) => Ok(v - 1),
                None => Err(DocumentError::MissingRole(name)),
            }
        };
        let mut source = [0; 14];
        let mut sink = [0; 14];
        for i in 1..=14 {
            source[i - 1] = role(format!("s{i}"))?;
            sink[i - 1] = role(format!("t{i}"))?;
        }
        let hats = (1..=(2 * self.ell).saturating_sub(1))
            .map(|j| {
                let mut hat = [0; 10];
                for (i, slot) in hat.iter_mut().enumerate() {
                    *slot = role(format!("hat{j}.h{}", i + 1))?;
                }
                Ok(hat)
            })
            .collect::<Result<Vec<_>, DocumentError>>()?;
        let s = role("s".into())?;
        let t = role("t".into())?;
        Ok(GadgetBlueprint::from_roles(self.ell, s, t, source, sink, hats)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct EmbeddingDocument {
    /// `"reduce-k1"` or `"reduce-kge5"`.
    pub reduction: String,
    pub target_k: usize,
    pub claimed_diameter: usize,
    /// `embedding[x - 1]` is the vertex of input vertex `x`.
    pub embedding: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub universal: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pendant_ends: Option<(usize, usize)>,
    /// `c1..c4`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub connector: Option<[usize; 4]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gadget: Option<BlueprintDocument>,
}

impl EmbeddingDocument {
    pub fn from_instance(r: &ReductionInstance) -> Self {
        let one = |v: usize| v + 1;
        EmbeddingDocument {
            reduction: match r.kind {
                ReductionKind::Prop41Undirected => "reduce-k1",
                ReductionKind::Lemma412TwoStrong => "reduce-kge5",
            }
            .into(),
            target_k: r.target_k,
            claimed_diameter: r.claimed_diameter,
            embedding: r.embedding.iter().map(|&v| one(v)).collect(),
            w: r.w.map(one),
            universal: r.universal.map(one),
            pendant_ends: r.pendant_ends.map(|(a, b)| (one(a), one(b))),
            connector: r.connector.map(|c| c.c.map(one)),
            gadget: r.blueprint.as_ref().map(BlueprintDocument::from_blueprint),
        }
    }
}
