use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};
use sz5_core::graph::canonical_form;
use sz5_core::Multigraph;

use crate::mgf::{serialize, GraphDocument};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    /// The tested property holds.
    Holds,
    /// The property fails; a witness is attached.
    Fails,
    /// The budget ran out first.
    Unknown,
    /// The command computed an artifact rather than testing a property.
    Produced,
}

impl Verdict {
    pub fn exit_code(self) -> u8 {
        match self {
            Verdict::Holds | Verdict::Produced => 0,
            Verdict::Fails => 1,
            Verdict::Unknown => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Unknown => "unknown",
            Verdict::Produced => "produced",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "holds" => Some(Verdict::Holds),
            "fails" => Some(Verdict::Fails),
            "unknown" => Some(Verdict::Unknown),
            "produced" => Some(Verdict::Produced),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub input_hash: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Value>,
    pub budget_used: u64,
}

impl Report {
    pub fn new(command: &str, input_hash: String, verdict: Verdict) -> Self {
        Report { command: command.to_string(), input_hash, verdict, witness: None, certificate: None, budget_used: 0 }
    }

    pub fn witness(mut self, w: Value) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn certificate(mut self, c: Value) -> Self {
        self.certificate = Some(c);
        self
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("{}: {}\ninput {}\n", self.command, self.verdict.as_str(), self.input_hash);
        if let Some(w) = &self.witness {
            out += &format!("witness {w}\n");
        }
        if let Some(c) = &self.certificate {
            out += &format!("certificate {c}\n");
        }
        out += &format!("budget used {}\n", self.budget_used);
        out
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// SHA-256 of the MGF serialization of the canonical representative, so
/// isomorphic inputs share a hash.
pub fn graph_hash(g: &Multigraph) -> String {
    let doc = GraphDocument::new(canonical_form(g).to_graph());
    sha256_hex(serialize(&doc).as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hash_ignores_labels() {
        let a = Multigraph::from_multiplicities(3, &[(0, 1, 2), (1, 2, 1)]).unwrap();
        let b = Multigraph::from_multiplicities(3, &[(2, 0, 1), (1, 2, 2)]).unwrap();
        let c = Multigraph::from_multiplicities(3, &[(0, 1, 1), (1, 2, 1)]).unwrap();
        assert_eq!(graph_hash(&a), graph_hash(&b));
        assert_ne!(graph_hash(&a), graph_hash(&c));
        assert_eq!(graph_hash(&a).len(), 64);
    }

    #[test]
    fn optional_fields_are_omitted() {
        let r = Report::new("szk", "00".into(), Verdict::Holds);
        let v: Value = serde_json::from_str(&r.render_json()).unwrap();
        assert_eq!(v["verdict"], "holds");
        assert!(v.get("witness").is_none());
        assert_eq!(Verdict::parse("fails"), Some(Verdict::Fails));
    }
}
