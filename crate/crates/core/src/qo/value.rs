use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

/// A value of a valuation: finite, or the absorbing top element `∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Extended<T> {
    Finite(T),
    Infinity,
}

impl<T: Copy> Extended<T> {
    pub fn finite(&self) -> Option<T> {
        match self {
            Extended::Finite(t) => Some(*t),
            Extended::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Extended::Infinity)
    }
}

impl Extended<GroupValue> {
    /// Addition with `∞` absorbing; `None` if the finite parts live in
    /// different groups.
    pub fn checked_add(self, other: Self) -> Option<Self> {
        match (self, other) {
            (Extended::Finite(a), Extended::Finite(b)) => a.checked_add(b).map(Extended::Finite),
            _ => Some(Extended::Infinity),
        }
    }
}

impl<T: fmt::Display> fmt::Display for Extended<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(t) => t.fmt(f),
            Extended::Infinity => f.write_str("inf"),
        }
    }
}

impl<T: fmt::Display> Serialize for Extended<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Elements of the value groups used by the catalog: the integers, and
/// `Z x Z` under the inverse lexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupValue {
    Int(i64),
    InvLex(InvLex),
}

impl GroupValue {
    pub fn checked_add(self, other: GroupValue) -> Option<GroupValue> {
        match (self, other) {
            (GroupValue::Int(a), GroupValue::Int(b)) => Some(GroupValue::Int(a + b)),
            (GroupValue::InvLex(a), GroupValue::InvLex(b)) => {
                Some(GroupValue::InvLex(InvLex::new(a.x + b.x, a.y + b.y)))
            }
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            GroupValue::Int(a) => *a == 0,
            GroupValue::InvLex(a) => a.x == 0 && a.y == 0,
        }
    }
}

/// Values of different groups never meet inside one valuation; they are
/// ordered by group only to make the type totally ordered.
impl Ord for GroupValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (GroupValue::Int(a), GroupValue::Int(b)) => a.cmp(b),
            (GroupValue::InvLex(a), GroupValue::InvLex(b)) => a.cmp(b),
            (GroupValue::Int(_), GroupValue::InvLex(_)) => Ordering::Less,
            (GroupValue::InvLex(_), GroupValue::Int(_)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for GroupValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GroupValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupValue::Int(a) => write!(f, "{a}"),
            GroupValue::InvLex(a) => write!(f, "({}, {})", a.x, a.y),
        }
    }
}

/// A pair `(x, y)` of `Z x Z` ordered inverse lexicographically: the second
/// coordinate decides first, the first coordinate breaks ties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct InvLex {
    pub x: i64,
    pub y: i64,
}

impl InvLex {
    pub const fn new(x: i64, y: i64) -> Self {
        InvLex { x, y }
    }
}

impl Ord for InvLex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.y.cmp(&other.y).then(self.x.cmp(&other.x))
    }
}

impl PartialOrd for InvLex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invlex_compares_second_coordinate_first() {
        assert!(InvLex::new(5, 0) < InvLex::new(0, 1));
        assert!(InvLex::new(1, 1) < InvLex::new(2, 1));
    }

    #[test]
    fn infinity_is_top_and_absorbing() {
        let one = Extended::Finite(GroupValue::Int(1));
        assert!(one < Extended::Infinity);
        assert_eq!(one.checked_add(Extended::Infinity), Some(Extended::Infinity));
        assert_eq!(
            one.checked_add(one),
            Some(Extended::Finite(GroupValue::Int(2)))
        );
        let lex = Extended::Finite(GroupValue::InvLex(InvLex::new(0, 1)));
        assert_eq!(one.checked_add(lex), None);
    }
}
