//! Distinguishability of point pairs and the separation axioms.

use crate::carrier::{Family, PointSet};
use crate::error::{Error, Result};
use crate::operators::closure;
use crate::space::{meet_topologies, neighborhoods, NeighborhoodKind, TopSpace};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct PairClass {
    /// `p` and `q` have the same neighbourhoods.
    pub indistinguishable: bool,
    pub partially_distinguishable: bool,
    /// Neither neighbourhood family includes the other.
    pub distinguishable: bool,
    /// Some neighbourhoods of `p` and `q` are disjoint.
    pub separated: bool,
}

fn point_nbhds(s: &TopSpace, p: usize) -> Family {
    neighborhoods(s, PointSet::raw(s.n(), 1 << p), NeighborhoodKind::Open)
}

pub fn classify_pair(s: &TopSpace, p: usize, q: usize) -> Result<PairClass> {
    for x in [p, q] {
        if x >= s.n() {
            return Err(Error::PointOutOfRange { point: x, n: s.n() });
        }
    }
    let np = point_nbhds(s, p);
    let nq = point_nbhds(s, q);
    let indistinguishable = np == nq;

    let single = |x: usize| PointSet::raw(s.n(), 1 << x);
    let closed_equal = neighborhoods(s, single(p), NeighborhoodKind::Closed)
        == neighborhoods(s, single(q), NeighborhoodKind::Closed);
    let min_equal = s.min_opens()[p] == s.min_opens()[q];
    let cl_equal = closure(s, single(p)) == closure(s, single(q));
    assert!(
        indistinguishable == closed_equal && closed_equal == min_equal && min_equal == cl_equal,
        "indistinguishability criteria disagree at ({p},{q})"
    );

    Ok(PairClass {
        indistinguishable,
        partially_distinguishable: !indistinguishable,
        distinguishable: !np.is_subfamily(&nq) && !nq.is_subfamily(&np),
        separated: np.iter().any(|u| nq.iter().any(|v| !u.meets(v))),
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct SeparationReport {
    pub t0: bool,
    pub t1: bool,
    pub t2: bool,
    pub t3: bool,
    pub t4: bool,
    pub regular: bool,
    pub normal: bool,
}

fn distinct_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |p| (0..n).filter(move |&q| q != p).map(move |q| (p, q)))
}

fn all_pairs<F: Fn(PairClass) -> bool>(s: &TopSpace, f: F) -> bool {
    distinct_pairs(s.n()).all(|(p, q)| f(classify_pair(s, p, q).unwrap()))
}

/// Every closed set and point outside it have disjoint neighbourhoods.
fn t3_literal(s: &TopSpace) -> bool {
    s.closeds().iter().all(|a| {
        a.complement().points().all(|p| {
            s.opens()
                .iter()
                .filter(|u| a.is_subset(*u))
                .any(|u| s.opens().iter().any(|v| v.contains(p) && !v.meets(u)))
        })
    })
}

/// Every open neighbourhood of `p` contains the closure of a smaller one.
fn t3_shrinking(s: &TopSpace) -> bool {
    (0..s.n()).all(|p| {
        s.opens().iter().filter(|u| u.contains(p)).all(|u| {
            s.opens().iter().filter(|v| v.contains(p)).any(|v| closure(s, v).is_subset(u))
        })
    })
}

/// Disjoint closed sets have disjoint neighbourhoods.
fn t4_literal(s: &TopSpace) -> bool {
    let cl = s.closeds();
    cl.iter().all(|a| {
        cl.iter().filter(|b| !a.meets(*b)).all(|b| {
            s.opens()
                .iter()
                .filter(|u| a.is_subset(*u))
                .any(|u| s.opens().iter().any(|v| b.is_subset(v) && !u.meets(v)))
        })
    })
}

/// Every open neighbourhood of a closed set contains the closure of a smaller one.
fn t4_shrinking(s: &TopSpace) -> bool {
    s.closeds().iter().all(|a| {
        s.opens().iter().filter(|u| a.is_subset(*u)).all(|u| {
            s.opens().iter().filter(|v| a.is_subset(*v)).any(|v| closure(s, v).is_subset(u))
        })
    })
}

pub fn is_t0(s: &TopSpace) -> bool {
    let literal = all_pairs(s, |c| !c.indistinguishable);
    let closures: Vec<PointSet> = (0..s.n()).map(|p| closure(s, PointSet::raw(s.n(), 1 << p))).collect();
    let injective = distinct_pairs(s.n()).all(|(p, q)| closures[p] != closures[q]);
    assert_eq!(literal, injective, "T0 criteria disagree");
    literal
}

pub fn is_t1(s: &TopSpace) -> bool {
    let literal = all_pairs(s, |c| c.distinguishable);
    let singletons_closed = (0..s.n()).all(|p| s.is_closed(PointSet::raw(s.n(), 1 << p)));
    assert_eq!(literal, singletons_closed, "T1 criteria disagree");
    literal
}

pub fn is_t2(s: &TopSpace) -> bool {
    let literal = all_pairs(s, |c| c.separated);
    let meets = (0..s.n()).all(|p| {
        let single = PointSet::raw(s.n(), 1 << p);
        neighborhoods(s, single, NeighborhoodKind::Closed).intersection().ok() == Some(single)
    });
    assert_eq!(literal, meets, "T2 criteria disagree");
    literal
}

pub fn is_t3(s: &TopSpace) -> bool {
    let literal = t3_literal(s);
    assert_eq!(literal, t3_shrinking(s), "T3 criteria disagree");
    literal
}

pub fn is_t4(s: &TopSpace) -> bool {
    let literal = t4_literal(s);
    assert_eq!(literal, t4_shrinking(s), "T4 criteria disagree");
    literal
}

pub fn separation_report(s: &TopSpace) -> SeparationReport {
    let (t0, t1, t2, t3, t4) = (is_t0(s), is_t1(s), is_t2(s), is_t3(s), is_t4(s));
    SeparationReport { t0, t1, t2, t3, t4, regular: t2 && t3, normal: t2 && t4 }
}

/// Coarsest T1 topology on `n ≤ 3` points: the meet of every T1 topology.
pub fn t1_minimum(n: usize) -> Result<TopSpace> {
    if n > 3 {
        return Err(Error::CarrierTooLarge { n, cap: 3 });
    }
    let t1: Vec<TopSpace> = crate::enumeration::all_topologies(n)?.into_iter().filter(is_t1).collect();
    meet_topologies(&t1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::{discrete, indiscrete, one_point, sierpinski};

    #[test]
    fn pair_examples() {
        let s = sierpinski();
        assert!(classify_pair(&s, 1, 1).unwrap().indistinguishable);
        assert!(classify_pair(&indiscrete(2).unwrap(), 0, 1).unwrap().indistinguishable);
        let c = classify_pair(&s, 0, 1).unwrap();
        assert!(c.partially_distinguishable && !c.separated && !c.distinguishable);
        assert!(classify_pair(&s, 0, 2).is_err());
    }

    #[test]
    fn report_examples() {
        for n in 0..5 {
            let r = separation_report(&discrete(n).unwrap());
            assert!(r.t0 && r.t1 && r.t2 && r.t3 && r.t4 && r.regular && r.normal);
        }
        let r = separation_report(&indiscrete(2).unwrap());
        assert!(!r.t0 && r.t3 && r.t4 && !r.regular && !r.normal);
        let r = separation_report(&sierpinski());
        assert!(r.t0 && !r.t1 && !r.t3 && r.t4);
    }

    #[test]
    fn t1_minimum_examples() {
        assert_eq!(t1_minimum(1).unwrap(), one_point());
        assert_eq!(t1_minimum(2).unwrap(), discrete(2).unwrap());
        assert_eq!(t1_minimum(3).unwrap(), discrete(3).unwrap());
        assert!(t1_minimum(4).is_err());
    }
}
