use std::fmt;

use serde::Serialize;

/// A value that is constant on isometry orbits (equivalently, on ideal
/// isomorphism classes for posets with the extension property).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum ShapeLabel {
    /// Counts of maximal elements per chain level.
    Nrt(Vec<usize>),
    /// Balanced bitstring of the rooted tree induced on an ideal.
    Tree(String),
    /// Tag 0 when the upper summand is touched, 1 otherwise.
    OrdinalSum(u8, Box<ShapeLabel>),
    /// Index of the ideal isomorphism class.
    IdealClass(usize),
    /// A plain integer invariant such as the ideal size.
    Count(usize),
}

impl fmt::Display for ShapeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeLabel::Nrt(e) => {
                let parts: Vec<String> = e.iter().map(usize::to_string).collect();
                write!(f, "({})", parts.join(","))
            }
            ShapeLabel::Tree(bits) => f.write_str(bits),
            ShapeLabel::OrdinalSum(tag, inner) => write!(f, "({tag}, {inner})"),
            ShapeLabel::IdealClass(c) => write!(f, "class {c}"),
            ShapeLabel::Count(c) => write!(f, "{c}"),
        }
    }
}
