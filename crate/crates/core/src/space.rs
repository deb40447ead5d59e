use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// The ordered variables of `F(z)[s]`: parameters `z1..zq` followed by the
/// pencil indeterminate.
///
/// Cloning is cheap (shared). Two spaces are equal when their parameter
/// lists and indeterminate names agree.
#[derive(Clone)]
pub struct ParamSpace {
    inner: Arc<SpaceInner>,
}

struct SpaceInner {
    params: Vec<String>,
    s_name: String,
    gcd_threshold: usize,
}

/// Default term count above which rational functions are fully gcd-reduced.
pub const DEFAULT_GCD_THRESHOLD: usize = 64;

impl ParamSpace {
    pub fn new<I, S>(params: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::with_indeterminate(params, "s")
    }

    pub fn with_indeterminate<I, S>(params: I, s_name: &str) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let params: Vec<String> = params.into_iter().map(Into::into).collect();
        let mut all: Vec<&str> = params.iter().map(String::as_str).collect();
        all.push(s_name);
        for name in &all {
            if !is_identifier(name) {
                return Err(Error::InvalidSpace(format!("`{name}` is not an identifier")));
            }
        }
        for (i, name) in all.iter().enumerate() {
            if all[..i].contains(name) {
                return Err(Error::InvalidSpace(format!("`{name}` is declared twice")));
            }
        }
        Ok(ParamSpace {
            inner: Arc::new(SpaceInner {
                params,
                s_name: s_name.to_string(),
                gcd_threshold: DEFAULT_GCD_THRESHOLD,
            }),
        })
    }

    /// Same variables, different lazy-reduction threshold.
    pub fn with_gcd_threshold(&self, threshold: usize) -> Self {
        ParamSpace {
            inner: Arc::new(SpaceInner {
                params: self.inner.params.clone(),
                s_name: self.inner.s_name.clone(),
                gcd_threshold: threshold,
            }),
        }
    }

    pub fn params(&self) -> &[String] {
        &self.inner.params
    }

    pub fn s_name(&self) -> &str {
        &self.inner.s_name
    }

    pub fn gcd_threshold(&self) -> usize {
        self.inner.gcd_threshold
    }

    /// Number of variables including `s`.
    pub fn nvars(&self) -> usize {
        self.inner.params.len() + 1
    }

    /// Index of `s`; always the last variable.
    pub fn s_index(&self) -> usize {
        self.inner.params.len()
    }

    pub fn var_name(&self, index: usize) -> &str {
        if index == self.s_index() {
            &self.inner.s_name
        } else {
            &self.inner.params[index]
        }
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        if name == self.inner.s_name {
            return Some(self.s_index());
        }
        self.inner.params.iter().position(|p| p == name)
    }

    pub fn same_as(&self, other: &ParamSpace) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.params == other.inner.params && self.inner.s_name == other.inner.s_name)
    }

    pub(crate) fn check(&self, other: &ParamSpace) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }
}

impl PartialEq for ParamSpace {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for ParamSpace {}

impl fmt::Debug for ParamSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamSpace({:?}; {})", self.inner.params, self.inner.s_name)
    }
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
