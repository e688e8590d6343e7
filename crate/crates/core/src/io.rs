//! Diagram input files.
//!
//! ```json
//! {"vars": 2, "support": [[2, 0], [0, 3]]}
//! ```

use serde::{Deserialize, Serialize};

use crate::lattice::Support;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramFile {
    pub vars: usize,
    pub support: Vec<Vec<i64>>,
}

impl DiagramFile {
    /// Parses JSON; serde's message carries the line and column of a schema error.
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_support(&self) -> Result<Support> {
        Support::new(self.vars, self.support.clone())
    }

    pub fn from_support(support: &Support) -> Self {
        DiagramFile {
            vars: support.dim(),
            support: support.points().to_vec(),
        }
    }
}
