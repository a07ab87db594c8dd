//! Weighted crossing diagrams and their linking numbers.
//!
//! Several diagrams may be drawn in one common projection. Strands are named
//! by ids that are unique across that projection, and a crossing between two
//! diagrams may be recorded by either of them (or both, under the same site
//! name). Each strand has a reference direction; its `orientation` says
//! whether the diagram runs along it (+1) or against it (-1). A crossing sign
//! is the sign for the reference directions of its two strands.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ids::check_sign;

/// An oriented strand carrying an integer multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strand {
    pub id: String,
    pub weight: i64,
    pub orientation: i64,
}

/// A crossing of two strands.
///
/// The sign is +1 when, travelling along the over strand, the under strand
/// passes from right to left (both in their reference directions).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub site: String,
    pub over: String,
    pub under: String,
    pub sign: i64,
}

/// A weighted, oriented diagram: strands plus the crossings it records.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WeightedDiagram {
    strands: BTreeMap<String, Strand>,
    crossings: Vec<Crossing>,
}

impl WeightedDiagram {
    /// Builds a diagram. Strand ids must be distinct, weights at least 1,
    /// orientations and signs ±1, and every crossing must involve at least one
    /// strand of this diagram.
    pub fn new(strands: Vec<Strand>, crossings: Vec<Crossing>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for s in strands {
            if s.weight < 1 {
                return Err(Error::InvalidValue(format!("strand `{}` has weight {}", s.id, s.weight)));
            }
            check_sign(s.orientation, || format!("orientation of strand `{}`", s.id))?;
            if map.contains_key(&s.id) {
                return Err(Error::DuplicateId { kind: "strand", id: s.id });
            }
            map.insert(s.id.clone(), s);
        }
        for c in &crossings {
            check_sign(c.sign, || format!("sign of crossing `{}`", c.site))?;
            if c.over == c.under {
                return Err(Error::InvalidValue(format!("crossing `{}` has one strand on both sides", c.site)));
            }
            if !map.contains_key(&c.over) && !map.contains_key(&c.under) {
                return Err(Error::DanglingId {
                    kind: "strand",
                    id: c.over.clone(),
                    context: format!("crossing `{}`", c.site),
                });
            }
        }
        Ok(WeightedDiagram { strands: map, crossings })
    }

    /// Strands in id order.
    pub fn strands(&self) -> impl Iterator<Item = &Strand> {
        self.strands.values()
    }

    pub fn strand(&self, id: &str) -> Option<&Strand> {
        self.strands.get(id)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn is_empty(&self) -> bool {
        self.strands.is_empty()
    }
}

/// Linking number `½ Σ sign · weights` over crossings between `a` and `b`.
///
/// Crossings listed by both diagrams under the same site and strands are
/// counted once. The half-sum must be an integer; an odd total means the
/// diagrams are malformed.
pub fn linking_number(a: &WeightedDiagram, b: &WeightedDiagram) -> Result<i64> {
    if let Some(shared) = a.strands.keys().find(|id| b.strands.contains_key(*id)) {
        return Err(Error::InvalidValue(format!("strand `{shared}` belongs to both diagrams")));
    }
    let mut seen: BTreeMap<(&str, &str, &str), i64> = BTreeMap::new();
    for c in a.crossings.iter().chain(&b.crossings) {
        let key = (c.site.as_str(), c.over.as_str(), c.under.as_str());
        if let Some(&sign) = seen.get(&key) {
            if sign != c.sign {
                return Err(Error::InvalidValue(format!("crossing `{}` is recorded with two signs", c.site)));
            }
        }
        seen.insert(key, c.sign);
    }
    let lookup = |id: &str| a.strands.get(id).map(|s| (0, s)).or_else(|| b.strands.get(id).map(|s| (1, s)));
    let mut total: i64 = 0;
    for ((_, over, under), sign) in seen {
        let (Some((side_o, o)), Some((side_u, u))) = (lookup(over), lookup(under)) else { continue };
        if side_o == side_u {
            continue;
        }
        total += sign * o.orientation * u.orientation * o.weight * u.weight;
    }
    if total % 2 != 0 {
        return Err(Error::OddCrossingSum(total.to_string()));
    }
    Ok(total / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strand(id: &str, weight: i64) -> Strand {
        Strand { id: id.into(), weight, orientation: 1 }
    }

    fn crossing(site: &str, over: &str, under: &str, sign: i64) -> Crossing {
        Crossing { site: site.into(), over: over.into(), under: under.into(), sign }
    }

    #[test]
    fn positive_hopf_link() {
        let a =
            WeightedDiagram::new(vec![strand("x", 1)], vec![crossing("c1", "x", "y", 1), crossing("c2", "y", "x", 1)])
                .unwrap();
        let b = WeightedDiagram::new(vec![strand("y", 1)], vec![crossing("c1", "x", "y", 1)]).unwrap();
        assert_eq!(linking_number(&a, &b).unwrap(), 1);
        assert_eq!(linking_number(&b, &a).unwrap(), 1);
    }

    #[test]
    fn disjoint_diagrams_do_not_link() {
        let a = WeightedDiagram::new(vec![strand("x", 1)], vec![]).unwrap();
        let b = WeightedDiagram::new(vec![strand("y", 3)], vec![]).unwrap();
        assert_eq!(linking_number(&a, &b).unwrap(), 0);
    }

    #[test]
    fn weights_multiply() {
        let a =
            WeightedDiagram::new(vec![strand("x", 2)], vec![crossing("c1", "x", "y", 1), crossing("c2", "y", "x", 1)])
                .unwrap();
        let b = WeightedDiagram::new(vec![strand("y", 1)], vec![]).unwrap();
        assert_eq!(linking_number(&a, &b).unwrap(), 2);
    }

    #[test]
    fn orientation_reverses_signs() {
        let a = WeightedDiagram::new(
            vec![Strand { id: "x".into(), weight: 1, orientation: -1 }],
            vec![crossing("c1", "x", "y", 1), crossing("c2", "y", "x", 1)],
        )
        .unwrap();
        let b = WeightedDiagram::new(vec![strand("y", 1)], vec![]).unwrap();
        assert_eq!(linking_number(&a, &b).unwrap(), -1);
    }

    #[test]
    fn odd_sums_and_shared_strands_are_rejected() {
        let a = WeightedDiagram::new(vec![strand("x", 1)], vec![crossing("c1", "x", "y", 1)]).unwrap();
        let b = WeightedDiagram::new(vec![strand("y", 1)], vec![]).unwrap();
        assert!(matches!(linking_number(&a, &b), Err(Error::OddCrossingSum(_))));
        assert!(linking_number(&a, &a).is_err());
    }

    #[test]
    fn construction_checks() {
        assert!(WeightedDiagram::new(vec![strand("x", 0)], vec![]).is_err());
        assert!(WeightedDiagram::new(vec![strand("x", 1), strand("x", 1)], vec![]).is_err());
        assert!(WeightedDiagram::new(vec![strand("x", 1)], vec![crossing("c", "p", "q", 1)]).is_err());
    }
}
