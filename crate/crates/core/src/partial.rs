/// Outcome of a partial binary operation.
///
/// Undefinedness is part of the algebra, not an error, so it is a value here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PartialResult<T> {
    Defined(T),
    Undefined,
}

pub use PartialResult::{Defined, Undefined};

impl<T> PartialResult<T> {
    pub fn is_defined(&self) -> bool {
        matches!(self, Defined(_))
    }

    pub fn as_ref(&self) -> PartialResult<&T> {
        match self {
            Defined(x) => Defined(x),
            Undefined => Undefined,
        }
    }

    pub fn defined(self) -> Option<T> {
        self.into()
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> PartialResult<U> {
        match self {
            Defined(x) => Defined(f(x)),
            Undefined => Undefined,
        }
    }

    pub fn and_then<U>(self, f: impl FnOnce(T) -> PartialResult<U>) -> PartialResult<U> {
        match self {
            Defined(x) => f(x),
            Undefined => Undefined,
        }
    }

    /// Renders the value with `render`, or `undef`.
    pub fn render_with(&self, render: impl FnOnce(&T) -> String) -> String {
        match self {
            Defined(x) => render(x),
            Undefined => "undef".to_string(),
        }
    }
}

impl<T> From<Option<T>> for PartialResult<T> {
    fn from(value: Option<T>) -> Self {
        match value {
            Some(x) => Defined(x),
            None => Undefined,
        }
    }
}

impl<T> From<PartialResult<T>> for Option<T> {
    fn from(value: PartialResult<T>) -> Self {
        match value {
            Defined(x) => Some(x),
            Undefined => None,
        }
    }
}
