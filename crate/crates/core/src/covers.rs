//! Covers: classification, subcovers, refinements, pasting and minimum subcovers.

use crate::carrier::{Family, PointSet};
use crate::constructors::subspace;
use crate::error::{Error, Result};
use crate::maps::{is_continuous, restrict, FiniteMap};
use crate::space::TopSpace;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct CoverReport {
    pub is_cover: bool,
    pub open_cover: bool,
    pub closed_cover: bool,
    pub locally_finite: bool,
    /// Only evaluated when the target is the whole carrier.
    pub fundamental: Option<bool>,
}

/// Sets `U` such that `S ∩ U` is open (or closed) in the subspace `S` for every member `S`.
pub fn locally_determined_sets(s: &TopSpace, c: &Family, closed: bool) -> Family {
    let subspaces: Vec<(PointSet, TopSpace)> = c.iter().map(|m| (m, subspace(s, m).unwrap().0)).collect();
    let keep = |u: PointSet| {
        subspaces.iter().all(|(m, sub)| {
            let trace = u.compress(*m);
            if closed {
                sub.is_closed(trace)
            } else {
                sub.is_open(trace)
            }
        })
    };
    Family::from_sorted(s.n(), s.subsets().filter(|&u| keep(u)).collect())
}

/// `c` covers the carrier and every set that is relatively open in each member is open.
pub fn is_fundamental(s: &TopSpace, c: &Family) -> bool {
    c.union().is_full() && locally_determined_sets(s, c, false).iter().all(|u| s.is_open(u))
}

pub fn classify_cover(s: &TopSpace, c: &Family, target: PointSet) -> Result<CoverReport> {
    for n in [c.n(), target.n()] {
        if n != s.n() {
            return Err(Error::CarrierMismatch { left: s.n(), right: n });
        }
    }
    let is_cover = target.is_subset(c.union());
    // members meeting a neighbourhood are counted; on a finite carrier the count is always finite
    let locally_finite = is_cover
        && (0..s.n()).all(|p| {
            s.opens().iter().filter(|u| u.contains(p)).any(|u| c.iter().filter(|m| m.meets(u)).count() < usize::MAX)
        });
    Ok(CoverReport {
        is_cover,
        open_cover: is_cover && c.iter().all(|m| s.is_open(m)),
        closed_cover: is_cover && c.iter().all(|m| s.is_closed(m)),
        locally_finite,
        fundamental: target.is_full().then(|| is_fundamental(s, c)),
    })
}

/// `sub ⊆ c` and `sub` covers `target`.
pub fn is_subcover(sub: &Family, c: &Family, target: PointSet) -> bool {
    sub.is_subfamily(c) && target.is_subset(sub.union())
}

/// `r` covers the carrier and each member of `r` lies inside a member of `c`.
pub fn is_refinement(r: &Family, c: &Family, s: &TopSpace) -> bool {
    r.n() == s.n() && r.union().is_full() && r.iter().all(|a| c.iter().any(|b| a.is_subset(b)))
}

/// Truth of "every restriction of `f` to a member of `c` is continuous implies
/// `f` is continuous" for a fundamental cover `c` of `s1`.
pub fn verify_pasting(s1: &TopSpace, s2: &TopSpace, f: &FiniteMap, c: &Family) -> Result<bool> {
    if c.n() != s1.n() {
        return Err(Error::CarrierMismatch { left: s1.n(), right: c.n() });
    }
    if !is_fundamental(s1, c) {
        return Err(Error::NotFundamental);
    }
    let pieces_continuous = c.iter().all(|m| {
        let (sub, _) = subspace(s1, m).unwrap();
        let g = restrict(f, m).unwrap();
        is_continuous(&g, &sub, s2).unwrap()
    });
    Ok(!pieces_continuous || is_continuous(f, s1, s2)?)
}

/// Depth-first search over members in order, choosing exactly `k` of them.
fn choose_cover(members: &[PointSet], start: usize, k: usize, uncovered: PointSet, picked: &mut Vec<usize>) -> bool {
    if uncovered.is_empty() {
        return true;
    }
    if k == 0 {
        return false;
    }
    for i in start..members.len() {
        if members.len() - i < k {
            break;
        }
        // bound: the remaining members must be able to cover what is left
        let reach = members[i..].iter().fold(PointSet::empty(uncovered.n()), |acc, &m| acc | m);
        if !uncovered.is_subset(reach) {
            break;
        }
        if !members[i].meets(uncovered) {
            continue;
        }
        picked.push(i);
        if choose_cover(members, i + 1, k - 1, uncovered - members[i], picked) {
            return true;
        }
        picked.pop();
    }
    false
}

/// A subcover of minimum size; among those, the lexicographically least list
/// of member bitmasks.
pub fn minimal_subcover(s: &TopSpace, c: &Family, target: PointSet) -> Result<Family> {
    if c.n() != s.n() || target.n() != s.n() {
        return Err(Error::CarrierMismatch { left: s.n(), right: c.n() });
    }
    if !target.is_subset(c.union()) {
        return Err(Error::NotACover);
    }
    let members = c.members();
    for k in 0..=members.len() {
        let mut picked = Vec::with_capacity(k);
        if choose_cover(members, 0, k, target, &mut picked) {
            return Ok(Family::from_sorted(s.n(), picked.iter().map(|&i| members[i]).collect()));
        }
    }
    unreachable!("the whole family covers the target")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::{discrete, sierpinski};

    fn fam(n: usize, lists: &[&[usize]]) -> Family {
        Family::from_lists(n, lists).unwrap()
    }

    #[test]
    fn classify_examples() {
        let s = sierpinski();
        let r = classify_cover(&s, &fam(2, &[&[0, 1]]), s.carrier()).unwrap();
        assert_eq!(
            r,
            CoverReport { is_cover: true, open_cover: true, closed_cover: true, locally_finite: true, fundamental: Some(true) }
        );
        let d = discrete(3).unwrap();
        let r = classify_cover(&d, &fam(3, &[&[0], &[1], &[2]]), d.carrier()).unwrap();
        assert!(r.open_cover && r.fundamental == Some(true));
        let r = classify_cover(&s, &fam(2, &[&[0], &[1]]), s.carrier()).unwrap();
        assert!(r.is_cover && !r.closed_cover && !r.open_cover);
        assert_eq!(r.fundamental, Some(false));
        let r = classify_cover(&s, &fam(2, &[&[1]]), s.set(&[1])).unwrap();
        assert!(r.is_cover && r.fundamental.is_none());
    }

    #[test]
    fn subcover_and_refinement_examples() {
        let d = discrete(3).unwrap();
        let c = fam(3, &[&[0, 1], &[2]]);
        assert!(is_subcover(&c, &c, d.carrier()));
        assert!(is_refinement(&fam(3, &[&[0, 1, 2]]), &fam(3, &[&[0], &[0, 1, 2]]), &d));
        assert!(is_refinement(&fam(3, &[&[0], &[1], &[2]]), &c, &d));
        assert!(!is_refinement(&fam(3, &[&[0, 1, 2]]), &c, &d));
    }

    #[test]
    fn pasting_examples() {
        let s = sierpinski();
        let whole = fam(2, &[&[0, 1]]);
        for f in FiniteMap::all(2, 2) {
            assert_eq!(verify_pasting(&s, &s, &f, &whole), Ok(true));
        }
        assert_eq!(verify_pasting(&s, &s, &FiniteMap::identity(2), &fam(2, &[&[0], &[1]])), Err(Error::NotFundamental));
    }

    #[test]
    fn minimal_subcover_examples() {
        let d = discrete(3).unwrap();
        let x = d.carrier();
        assert_eq!(minimal_subcover(&d, &fam(3, &[&[0], &[0, 1, 2]]), x).unwrap(), fam(3, &[&[0, 1, 2]]));
        let singles = fam(3, &[&[0], &[1], &[2]]);
        assert_eq!(minimal_subcover(&d, &singles, x).unwrap(), singles);
        let tri = fam(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert_eq!(minimal_subcover(&d, &tri, x).unwrap(), fam(3, &[&[0, 1], &[0, 2]]));
        assert_eq!(minimal_subcover(&d, &fam(3, &[&[0]]), x), Err(Error::NotACover));
        assert!(minimal_subcover(&d, &singles, d.empty_set()).unwrap().is_empty());
    }
}
