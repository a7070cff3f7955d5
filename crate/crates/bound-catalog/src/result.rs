//! The value type every catalog evaluator returns.

use combinat_core::ExactScalar;
use num_traits::Signed;

/// An evaluated upper bound together with its provenance: which catalog
/// entry produced it, which hypotheses were checked, and — for bounds defined
/// as a minimum of several expressions — which arm won.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundResult {
    /// The bound itself, as an exact rational (never floating point).
    pub value: ExactScalar,
    /// Catalog identifier of the formula family (see [`crate::catalog`]).
    pub citation: &'static str,
    /// Hypothesis clauses that were verified before evaluation.
    pub assumptions: Vec<String>,
    /// Which arm of a min / which inequality chain produced `value`, when the
    /// formula has more than one. Ties report the first arm.
    pub branch: Option<String>,
    /// True when the formula is integer-valued by construction (a signed
    /// count rather than a genuinely rational estimate). Exact-flagged values
    /// are always nonnegative integers.
    pub exact: bool,
}

impl BoundResult {
    /// Builds a result after asserting the value invariant (`value > 0` for
    /// every bound in the catalog, and integrality when `exact`). Public so
    /// that crates composing these bounds into larger ones construct their
    /// results under the same invariant.
    pub fn checked(
        value: ExactScalar,
        citation: &'static str,
        assumptions: Vec<String>,
        branch: Option<String>,
        exact: bool,
    ) -> Self {
        assert!(
            value.is_positive(),
            "{citation}: bound evaluated to non-positive value {value}"
        );
        assert!(
            !exact || value.is_integer(),
            "{citation}: exact-flagged value {value} is not an integer"
        );
        BoundResult {
            value,
            citation,
            assumptions,
            branch,
            exact,
        }
    }
}
