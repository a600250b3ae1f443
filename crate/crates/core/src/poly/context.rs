use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::PolyError;

/// Ordered, duplicate-free list of variable names.
///
/// A polynomial's exponent vector is indexed against its context, so the
/// index of a name never changes once the context is built.
#[derive(Clone, PartialEq, Eq)]
pub struct VariableContext {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

pub type Ctx = Arc<VariableContext>;

impl VariableContext {
    pub fn new<I, S>(names: I) -> Result<Ctx, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(PolyError::Parse(format!("invalid variable name `{name}`")));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(PolyError::Parse(format!("duplicate variable name `{name}`")));
            }
        }
        Ok(Arc::new(Self { names, index }))
    }

    /// `prefix1, prefix2, ..., prefixN`
    pub fn numbered(prefix: &str, n: usize) -> Ctx {
        Self::new((1..=n).map(|i| format!("{prefix}{i}"))).expect("numbered names are valid")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// A new context with `extra` appended.
    pub fn extended<I, S>(&self, extra: I) -> Result<Ctx, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::new(self.names.iter().cloned().chain(extra.into_iter().map(Into::into)))
    }
}

impl fmt::Debug for VariableContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.names).finish()
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub(crate) fn same_context(a: &Ctx, b: &Ctx) -> bool {
    Arc::ptr_eq(a, b) || a.names == b.names
}
