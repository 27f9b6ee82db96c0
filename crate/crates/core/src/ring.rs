use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::varset::MAX_VARS;

/// Default bound on any single exponent.
pub const DEFAULT_MAX_EXPONENT: u32 = 1 << 16;

/// The polynomial ring `K[x_1, …, x_n]` as far as monomial computations are concerned:
/// a number of variables, their labels, and an exponent limit.
#[derive(Clone, PartialEq, Eq)]
pub struct RingContext {
    names: Vec<String>,
    index: HashMap<String, usize>,
    max_exponent: u32,
}

impl RingContext {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Arc<Self>> {
        Self::with_max_exponent(names, DEFAULT_MAX_EXPONENT)
    }

    pub fn with_max_exponent<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        max_exponent: u32,
    ) -> Result<Arc<Self>> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidRing(
                "a ring needs at least one variable".into(),
            ));
        }
        if names.len() > MAX_VARS {
            return Err(Error::TooManyVariables(names.len()));
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidRing(format!(
                    "`{name}` is not a valid variable name"
                )));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::InvalidRing(format!("duplicate variable `{name}`")));
            }
        }
        Ok(Arc::new(RingContext {
            names,
            index,
            max_exponent,
        }))
    }

    /// Ring with variables `x1, …, xn`.
    pub fn standard(n: usize) -> Result<Arc<Self>> {
        Self::new((1..=n).map(|i| format!("x{i}")))
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn max_exponent(&self) -> u32 {
        self.max_exponent
    }

    pub(crate) fn check_exponent(&self, value: u64) -> Result<u32> {
        if value > u64::from(self.max_exponent) {
            Err(Error::ExponentOverflow {
                value,
                limit: self.max_exponent,
            })
        } else {
            Ok(value as u32)
        }
    }
}

impl fmt::Debug for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K[{}]", self.names.join(", "))
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_contexts() {
        assert!(RingContext::new(Vec::<String>::new()).is_err());
        assert!(RingContext::new(["x", "x"]).is_err());
        assert!(RingContext::new(["1x"]).is_err());
        assert!(matches!(
            RingContext::standard(MAX_VARS + 1),
            Err(Error::TooManyVariables(_))
        ));
    }

    #[test]
    fn standard_names() {
        let r = RingContext::standard(3).unwrap();
        assert_eq!(r.names(), ["x1", "x2", "x3"]);
        assert_eq!(r.index_of("x2"), Some(1));
    }
}
