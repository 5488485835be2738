//! Interior, closure, exterior and boundary; point roles; density; separated pairs.
//!
//! `interior` and `closure` use the family formulas (union of open subsets,
//! intersection of closed supersets). [`point_roles`] instead quantifies over
//! the open neighbourhoods of the point, so agreement between the two is a
//! genuine cross-check rather than a tautology.

use crate::carrier::{Family, PointSet};
use crate::space::TopSpace;

/// Union of every open subset of `a`.
pub fn interior(s: &TopSpace, a: PointSet) -> PointSet {
    s.opens().iter().filter(|u| u.is_subset(a)).fold(s.empty_set(), |acc, u| acc | u)
}

/// Intersection of every closed superset of `a`.
pub fn closure(s: &TopSpace, a: PointSet) -> PointSet {
    s.closeds().iter().filter(|c| a.is_subset(*c)).fold(s.carrier(), |acc, c| acc & c)
}

/// Interior of the complement.
pub fn exterior(s: &TopSpace, a: PointSet) -> PointSet {
    interior(s, a.complement())
}

pub fn boundary(s: &TopSpace, a: PointSet) -> PointSet {
    closure(s, a) - interior(s, a)
}

/// Which of the six point classes `p` falls in relative to `a`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct RoleFlags {
    pub interior: bool,
    pub exterior: bool,
    pub boundary: bool,
    pub adherent: bool,
    pub limit: bool,
    pub isolated: bool,
}

/// Evaluates each role from its neighbourhood definition.
pub fn point_roles(s: &TopSpace, a: PointSet, p: usize) -> RoleFlags {
    let nbhds: Vec<PointSet> = s.opens().iter().filter(|u| u.contains(p)).collect();
    let rest = a.complement();
    let off_p = a.without(p);

    let interior = nbhds.iter().any(|u| u.is_subset(a));
    // second formula: some open subset of `a` contains p
    let interior_alt = s.opens().iter().filter(|u| u.is_subset(a)).any(|u| u.contains(p));
    assert_eq!(interior, interior_alt, "the two interior-point formulas disagree");

    RoleFlags {
        interior,
        exterior: nbhds.iter().any(|u| !u.meets(a)),
        boundary: nbhds.iter().all(|u| u.meets(a) && u.meets(rest)),
        adherent: nbhds.iter().all(|u| u.meets(a)),
        limit: nbhds.iter().all(|u| u.meets(off_p)),
        isolated: nbhds.iter().any(|u| (*u & a) == PointSet::raw(s.n(), 1 << p)),
    }
}

/// Points every neighbourhood of which meets `a` away from the point itself.
pub fn limit_set(s: &TopSpace, a: PointSet) -> PointSet {
    let bits = (0..s.n())
        .filter(|&p| s.min_opens()[p].meets(a.without(p)))
        .fold(0u32, |acc, p| acc | 1 << p);
    PointSet::raw(s.n(), bits)
}

/// Points of `a` having a neighbourhood that meets `a` only in the point.
pub fn isolated_set(s: &TopSpace, a: PointSet) -> PointSet {
    let bits = a
        .points()
        .filter(|&p| (s.min_opens()[p] & a).len() == 1)
        .fold(0u32, |acc, p| acc | 1 << p);
    PointSet::raw(s.n(), bits)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct DensityReport {
    pub dense: bool,
    pub dense_in_itself: bool,
    pub nowhere_dense: bool,
    pub perfect: bool,
}

pub fn density_report(s: &TopSpace, a: PointSet) -> DensityReport {
    let cl = closure(s, a);
    let dense_in_itself = isolated_set(s, a).is_empty();
    DensityReport {
        dense: cl.is_full(),
        dense_in_itself,
        nowhere_dense: interior(s, cl).is_empty(),
        perfect: s.is_closed(a) && dense_in_itself,
    }
}

/// Subsets whose closure is the whole carrier.
pub fn dense_sets(s: &TopSpace) -> Family {
    Family::from_sorted(s.n(), s.subsets().filter(|&a| closure(s, a).is_full()).collect())
}

pub fn nowhere_dense_sets(s: &TopSpace) -> Family {
    Family::from_sorted(s.n(), s.subsets().filter(|&a| interior(s, closure(s, a)).is_empty()).collect())
}

/// Relative position of two sets with respect to each other's closures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairRelation {
    /// Each set meets the closure of the other.
    Glued,
    /// Neither set meets the closure of the other.
    Free,
    Neither,
}

impl PairRelation {
    pub fn name(self) -> &'static str {
        match self {
            PairRelation::Glued => "glued",
            PairRelation::Free => "free",
            PairRelation::Neither => "neither",
        }
    }
}

pub fn pair_relation(s: &TopSpace, a: PointSet, b: PointSet) -> PairRelation {
    let a_meets = a.meets(closure(s, b));
    let b_meets = b.meets(closure(s, a));
    match (a_meets, b_meets) {
        (true, true) => PairRelation::Glued,
        (false, false) => PairRelation::Free,
        _ => PairRelation::Neither,
    }
}

/// `a_prime` is dense in `a`: its closure contains `a`.
pub fn is_dense_in(s: &TopSpace, a_prime: PointSet, a: PointSet) -> bool {
    a.is_subset(closure(s, a_prime))
}
