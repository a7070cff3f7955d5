//! Name-indexed catalog of every bound family this crate evaluates, used
//! by callers that dispatch on a textual id (e.g. a command line).

use crate::error::BoundError;

/// One catalog row: a stable id, a one-line summary, and the parameters
/// the family expects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogEntry {
    /// Stable kebab-case identifier.
    pub id: &'static str,
    /// What the bound controls.
    pub summary: &'static str,
    /// Comma-separated parameter names with their meaning.
    pub parameters: &'static str,
}

static CATALOG: &[CatalogEntry] = &[
    CatalogEntry {
        id: "optm",
        summary: "total Betti numbers of a real algebraic set of degree <= d in R^k",
        parameters: "d (max degree), k (variables)",
    },
    CatalogEntry {
        id: "closed-semialgebraic",
        summary: "total Betti numbers of a closed set cut out by s polynomial inequalities",
        parameters: "s (polynomials), d (max degree), k (variables)",
    },
    CatalogEntry {
        id: "general-semialgebraic",
        summary: "total Betti numbers of an arbitrary set defined from s polynomials",
        parameters: "s (polynomials), d (max degree), k (variables)",
    },
    CatalogEntry {
        id: "quadratic-inequalities",
        summary: "i-th Betti number of a set cut out by s quadratic inequalities",
        parameters: "s (inequalities, s <= k), k (variables), i (Betti index)",
    },
    CatalogEntry {
        id: "smooth-components",
        summary: "connected components of a smooth algebraic set from listed degrees",
        parameters: "degrees (list), k (variables), dim (set dimension), regular-sequence flag",
    },
    CatalogEntry {
        id: "total-degree",
        summary: "total Betti numbers of a variety from ell polynomials of degree <= d",
        parameters: "d (max degree), k (variables), l (polynomials)",
    },
    CatalogEntry {
        id: "multi-degree-blocks",
        summary: "Betti bounds for polynomials with one degree per block of variables",
        parameters: "d (degree per block), blocks (variables per block), l or s/i",
    },
    CatalogEntry {
        id: "multi-degree-boxes",
        summary: "Betti bounds for polynomials with per-variable degree boxes",
        parameters: "degree matrix (rows = polynomials, cols = variables), optional s/i",
    },
    CatalogEntry {
        id: "partially-quadratic",
        summary: "Betti bounds for polynomials quadratic outside one variable block",
        parameters: "d (degree on the block), k1, k2 (block sizes), l or s/i",
    },
    CatalogEntry {
        id: "projective-quadrics",
        summary: "total Betti numbers of an intersection of quadrics in projective space",
        parameters: "k (projective dimension), l (quadrics)",
    },
    CatalogEntry {
        id: "two-family-quadratic",
        summary: "sign-condition bounds for a degree-d family plus a quadratic family",
        parameters: "d, k1, k2 (block sizes), s (first family), m (quadratic family minus one), optional i",
    },
    CatalogEntry {
        id: "multi-partially-quadratic",
        summary: "Betti bounds with individual variable degrees plus a quadratic block",
        parameters: "d (per-variable degrees), k2 (quadratic variables), l or s/i",
    },
    CatalogEntry {
        id: "refined-two-degree",
        summary: "connected components of a variety mixing one smaller-degree polynomial",
        parameters: "d1 <= d2 (the two degrees), k (variables)",
    },
    CatalogEntry {
        id: "component-two-degree",
        summary: "sign-condition Betti bound on a fixed-dimension two-degree set",
        parameters: "d1 <= d2, k (variables), k' (set dimension), s (conditions), degree reading",
    },
    CatalogEntry {
        id: "two-degree-sign-conditions",
        summary: "per-index sign-condition bound from the refined two-degree sum",
        parameters: "d1 <= d2, k (variables), k' (set dimension), s (conditions), i (Betti index)",
    },
    CatalogEntry {
        id: "one-multi",
        summary: "exact total Betti numbers of one generic multi-degree polynomial (not an upper bound)",
        parameters: "d (degree per variable block); evaluated by the chi engine",
    },
];

/// All catalog rows, in presentation order.
pub fn catalog() -> &'static [CatalogEntry] {
    CATALOG
}

/// Looks up a catalog row by id.
///
/// # Errors
/// [`BoundError::UnknownId`] carrying the full id list when no row
/// matches.
pub fn lookup(id: &str) -> Result<&'static CatalogEntry, BoundError> {
    CATALOG.iter().find(|e| e.id == id).ok_or_else(|| BoundError::UnknownId {
        id: id.to_string(),
        known: CATALOG
            .iter()
            .map(|e| e.id)
            .collect::<Vec<_>>()
            .join(", "),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_ids_are_unique_and_kebab_case() {
        let mut seen = std::collections::HashSet::new();
        for entry in catalog() {
            assert!(seen.insert(entry.id), "duplicate id {}", entry.id);
            assert!(
                entry.id.chars().all(|c| c.is_ascii_lowercase() || c == '-'),
                "id {} is not kebab-case",
                entry.id
            );
        }
    }

    #[test]
    fn test_lookup_known_id() {
        assert_eq!(lookup("optm").unwrap().id, "optm");
        assert_eq!(lookup("total-degree").unwrap().id, "total-degree");
    }

    #[test]
    fn test_lookup_unknown_id_lists_alternatives() {
        let err = lookup("no-such-bound").unwrap_err();
        match err {
            BoundError::UnknownId { id, known } => {
                assert_eq!(id, "no-such-bound");
                assert!(known.contains("optm"));
                assert!(known.contains("two-degree-sign-conditions"));
            }
            other => panic!("expected UnknownId, got {other:?}"),
        }
    }
}
