//! Lookup tables from user-facing identifiers to positions.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// Maps identifiers to their position in a list, rejecting duplicates.
#[derive(Debug, Clone, Default)]
pub(crate) struct IdIndex {
    kind: &'static str,
    positions: HashMap<String, usize>,
}

impl IdIndex {
    pub(crate) fn build<'a>(kind: &'static str, ids: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        let mut positions = HashMap::new();
        for (i, id) in ids.into_iter().enumerate() {
            if positions.insert(id.to_string(), i).is_some() {
                return Err(Error::DuplicateId { kind, id: id.to_string() });
            }
        }
        Ok(IdIndex { kind, positions })
    }

    pub(crate) fn get(&self, id: &str, context: impl FnOnce() -> String) -> Result<usize> {
        self.positions.get(id).copied().ok_or_else(|| Error::DanglingId {
            kind: self.kind,
            id: id.to_string(),
            context: context(),
        })
    }
}

/// Checks that a sign field is +1 or -1.
pub(crate) fn check_sign(value: i64, what: impl FnOnce() -> String) -> Result<i64> {
    if value == 1 || value == -1 {
        Ok(value)
    } else {
        Err(Error::InvalidValue(format!("{} must be +1 or -1, got {value}", what())))
    }
}
