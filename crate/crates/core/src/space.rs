//! Validated topological spaces over `{0, .., n-1}`.

use std::fmt;

use crate::carrier::{check_carrier, full_bits, Family, PointSet, MAX_CARRIER};
use crate::error::{Error, Result};

/// Cap for [`discrete`]; its topology has `2^n` members.
pub const MAX_DISCRETE: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationKind {
    MissingEmpty,
    MissingCarrier,
    NotIntersectionClosed,
    NotUnionClosed,
    MemberOutOfCarrier,
}

impl ViolationKind {
    pub fn name(self) -> &'static str {
        match self {
            ViolationKind::MissingEmpty => "MissingEmpty",
            ViolationKind::MissingCarrier => "MissingCarrier",
            ViolationKind::NotIntersectionClosed => "NotIntersectionClosed",
            ViolationKind::NotUnionClosed => "NotUnionClosed",
            ViolationKind::MemberOutOfCarrier => "MemberOutOfCarrier",
        }
    }
}

/// One failed topology axiom with up to two witness sets.
///
/// Witnesses are given as raw bitmasks so a member lying outside the carrier
/// can still be reported.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AxiomViolation {
    pub kind: ViolationKind,
    pub witness: Vec<u32>,
}

impl AxiomViolation {
    pub fn witness_lists(&self) -> Vec<Vec<usize>> {
        self.witness.iter().map(|&b| bit_positions(b)).collect()
    }
}

fn bit_positions(bits: u32) -> Vec<usize> {
    (0..32).filter(|i| bits & (1 << i) != 0).collect()
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind.name())?;
        if !self.witness.is_empty() {
            let parts: Vec<String> = self
                .witness_lists()
                .iter()
                .map(|w| format!("{{{}}}", w.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")))
                .collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

/// A finite topological space: the open sets plus cached closed sets and
/// per-point minimal open neighbourhoods.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TopSpace {
    n: u8,
    opens: Family,
    closeds: Family,
    min_open: Vec<PointSet>,
}

impl fmt::Debug for TopSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TopSpace").field("n", &self.n).field("opens", &self.opens).finish()
    }
}

impl PartialOrd for TopSpace {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Spaces order by carrier size, then lexicographically by their open families.
impl Ord for TopSpace {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, self.opens.members()).cmp(&(other.n, other.opens.members()))
    }
}

impl TopSpace {
    /// Builds the caches for a family already known to be a topology.
    pub(crate) fn from_valid(n: usize, opens: Family) -> TopSpace {
        debug_assert_eq!(opens.n(), n);
        let full = PointSet::full(n);
        let closeds = Family::from_unsorted(n, opens.iter().map(PointSet::complement).collect());
        let mut min_open = vec![full; n];
        for u in opens.iter() {
            for p in u.points() {
                min_open[p] = min_open[p] & u;
            }
        }
        TopSpace { n: n as u8, opens, closeds, min_open }
    }

    /// Validates point lists as a topology, e.g. `TopSpace::from_lists(2, &[&[], &[1], &[0, 1]])`.
    pub fn from_lists<L: AsRef<[usize]>>(n: usize, lists: &[L]) -> Result<TopSpace> {
        let fam = Family::from_lists(n, lists)?;
        validate_topology(n, &fam).map_err(Error::InvalidTopology)
    }

    pub fn from_family(fam: Family) -> Result<TopSpace> {
        validate_topology(fam.n(), &fam).map_err(Error::InvalidTopology)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn opens(&self) -> &Family {
        &self.opens
    }

    pub fn closeds(&self) -> &Family {
        &self.closeds
    }

    pub fn carrier(&self) -> PointSet {
        PointSet::full(self.n())
    }

    pub fn empty_set(&self) -> PointSet {
        PointSet::empty(self.n())
    }

    /// Table of minimal open neighbourhoods, indexed by point.
    pub fn min_opens(&self) -> &[PointSet] {
        &self.min_open
    }

    pub fn is_open(&self, a: PointSet) -> bool {
        self.opens.contains(a)
    }

    pub fn is_closed(&self, a: PointSet) -> bool {
        self.closeds.contains(a)
    }

    pub fn is_clopen(&self, a: PointSet) -> bool {
        self.is_open(a) && self.is_closed(a)
    }

    pub fn is_discrete(&self) -> bool {
        self.min_open.iter().all(|m| m.len() == 1)
    }

    pub fn is_indiscrete(&self) -> bool {
        self.opens.len() <= 2
    }

    /// All subsets of the carrier.
    pub fn subsets(&self) -> crate::carrier::SubsetsOf {
        self.carrier().subsets()
    }

    /// `PointSet` from points of this carrier; panics on an out-of-range point.
    pub fn set(&self, points: &[usize]) -> PointSet {
        PointSet::from_points(self.n(), points.iter().copied()).expect("point inside the carrier")
    }
}

/// Checks the topology axioms for `fam` over `n` points.
///
/// Every violated axiom is reported once, with the lexicographically smallest
/// witness.
pub fn validate_topology(n: usize, fam: &Family) -> std::result::Result<TopSpace, Vec<AxiomViolation>> {
    if n > MAX_CARRIER {
        return Err(vec![AxiomViolation { kind: ViolationKind::MemberOutOfCarrier, witness: vec![] }]);
    }
    let full = full_bits(n);
    let mut violations = Vec::new();

    let inside: Vec<u32> = fam.iter().map(PointSet::bits).filter(|b| b & !full == 0).collect();
    let outside = fam.iter().map(PointSet::bits).find(|b| b & !full != 0);

    let has = |b: u32| inside.binary_search(&b).is_ok();
    if !has(0) {
        violations.push(AxiomViolation { kind: ViolationKind::MissingEmpty, witness: vec![] });
    }
    if !has(full) {
        violations.push(AxiomViolation { kind: ViolationKind::MissingCarrier, witness: vec![] });
    }
    let first_bad_pair = |op: fn(u32, u32) -> u32| {
        for (i, &a) in inside.iter().enumerate() {
            for &b in &inside[i + 1..] {
                if !has(op(a, b)) {
                    return Some(vec![a, b]);
                }
            }
        }
        None
    };
    if let Some(w) = first_bad_pair(|a, b| a & b) {
        violations.push(AxiomViolation { kind: ViolationKind::NotIntersectionClosed, witness: w });
    }
    if let Some(w) = first_bad_pair(|a, b| a | b) {
        violations.push(AxiomViolation { kind: ViolationKind::NotUnionClosed, witness: w });
    }
    if let Some(b) = outside {
        violations.push(AxiomViolation { kind: ViolationKind::MemberOutOfCarrier, witness: vec![b] });
    }

    if violations.is_empty() {
        Ok(TopSpace::from_valid(n, Family::from_sorted_bits(n, &inside)))
    } else {
        Err(violations)
    }
}

/// Every subset open.
pub fn discrete(n: usize) -> Result<TopSpace> {
    check_carrier(n, MAX_DISCRETE)?;
    let opens = Family::from_sorted_bits(n, &(0..=full_bits(n)).collect::<Vec<_>>());
    Ok(TopSpace::from_valid(n, opens))
}

/// Only `∅` and the carrier open (a single open set when `n = 0`).
pub fn indiscrete(n: usize) -> Result<TopSpace> {
    check_carrier(n, MAX_CARRIER)?;
    let opens = Family::from_unsorted(n, vec![PointSet::empty(n), PointSet::full(n)]);
    Ok(TopSpace::from_valid(n, opens))
}

/// The two-point space with opens `{∅, {1}, {0,1}}`.
pub fn sierpinski() -> TopSpace {
    TopSpace::from_valid(2, Family::from_sorted_bits(2, &[0b00, 0b10, 0b11]))
}

/// The unique topology on one point.
pub fn one_point() -> TopSpace {
    TopSpace::from_valid(1, Family::from_sorted_bits(1, &[0, 1]))
}

pub fn closed_sets(s: &TopSpace) -> &Family {
    s.closeds()
}

/// Sets that are both open and closed.
pub fn clopen_sets(s: &TopSpace) -> Family {
    s.opens().filter(|u| s.is_closed(u))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NeighborhoodKind {
    Open,
    Closed,
}

/// Open (or closed) sets containing `a`.
pub fn neighborhoods(s: &TopSpace, a: PointSet, kind: NeighborhoodKind) -> Family {
    let source = match kind {
        NeighborhoodKind::Open => s.opens(),
        NeighborhoodKind::Closed => s.closeds(),
    };
    source.filter(|u| a.is_subset(u))
}

/// Intersection of every open neighbourhood of `{p}`.
pub fn minimal_open(s: &TopSpace, p: usize) -> Result<PointSet> {
    if p >= s.n() {
        return Err(Error::PointOutOfRange { point: p, n: s.n() });
    }
    Ok(s.min_open[p])
}

/// How the first topology relates to the second under inclusion of open families.
///
/// Every comparable pair is either equal or strictly ordered, so the non-strict
/// relations are exposed as [`is_finer`](Self::is_finer) / [`is_coarser`](Self::is_coarser).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    StrictlyFiner,
    StrictlyCoarser,
    Incomparable,
}

impl Comparison {
    pub fn is_finer(self) -> bool {
        matches!(self, Comparison::Equal | Comparison::StrictlyFiner)
    }

    pub fn is_coarser(self) -> bool {
        matches!(self, Comparison::Equal | Comparison::StrictlyCoarser)
    }

    pub fn name(self) -> &'static str {
        match self {
            Comparison::Equal => "equal",
            Comparison::StrictlyFiner => "strictly_finer",
            Comparison::StrictlyCoarser => "strictly_coarser",
            Comparison::Incomparable => "incomparable",
        }
    }
}

pub fn compare(t1: &TopSpace, t2: &TopSpace) -> Result<Comparison> {
    if t1.n() != t2.n() {
        return Err(Error::CarrierMismatch { left: t1.n(), right: t2.n() });
    }
    let t2_in_t1 = t2.opens().is_subfamily(t1.opens());
    let t1_in_t2 = t1.opens().is_subfamily(t2.opens());
    Ok(match (t2_in_t1, t1_in_t2) {
        (true, true) => Comparison::Equal,
        (true, false) => Comparison::StrictlyFiner,
        (false, true) => Comparison::StrictlyCoarser,
        (false, false) => Comparison::Incomparable,
    })
}

/// Intersection of the open families of every space in `spaces`.
pub fn meet_topologies(spaces: &[TopSpace]) -> Result<TopSpace> {
    let (first, rest) = spaces.split_first().ok_or(Error::EmptyList)?;
    for s in rest {
        if s.n() != first.n() {
            return Err(Error::CarrierMismatch { left: first.n(), right: s.n() });
        }
    }
    let opens = first.opens().filter(|u| rest.iter().all(|s| s.is_open(u)));
    validate_topology(first.n(), &opens).map_err(Error::InvalidTopology)
}

/// Adjoins a new point `a` (index `n`); opens become `{∅} ∪ {{a} ∪ U : U open}`.
pub fn one_point_extension(s: &TopSpace) -> Result<TopSpace> {
    let n = s.n() + 1;
    check_carrier(n, MAX_CARRIER)?;
    let a = 1u32 << s.n();
    let mut members = vec![PointSet::empty(n)];
    members.extend(s.opens().iter().map(|u| PointSet::raw(n, u.bits() | a)));
    let fam = Family::from_unsorted(n, members);
    validate_topology(n, &fam).map_err(Error::InvalidTopology)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::subsets_iter;

    fn fam(n: usize, lists: &[&[usize]]) -> Family {
        Family::from_lists(n, lists).unwrap()
    }

    #[test]
    fn validate_examples() {
        let s = validate_topology(1, &fam(1, &[&[], &[0]])).unwrap();
        assert_eq!(s, discrete(1).unwrap());
        assert_eq!(s, indiscrete(1).unwrap());

        let d = validate_topology(2, &fam(2, &[&[], &[0], &[1], &[0, 1]])).unwrap();
        assert_eq!(d, discrete(2).unwrap());

        let v = validate_topology(2, &fam(2, &[&[], &[0], &[1]])).unwrap_err();
        assert_eq!(
            v,
            vec![
                AxiomViolation { kind: ViolationKind::MissingCarrier, witness: vec![] },
                AxiomViolation { kind: ViolationKind::NotUnionClosed, witness: vec![0b01, 0b10] },
            ]
        );
    }

    #[test]
    fn violations_report_every_axiom() {
        // {0,1},{1,2} over 3 points: no ∅, no X, {1} missing, {0,1,2} missing
        let v = validate_topology(3, &fam(3, &[&[0, 1], &[1, 2]])).unwrap_err();
        let kinds: Vec<_> = v.iter().map(|x| x.kind).collect();
        assert_eq!(
            kinds,
            vec![
                ViolationKind::MissingEmpty,
                ViolationKind::MissingCarrier,
                ViolationKind::NotIntersectionClosed,
                ViolationKind::NotUnionClosed
            ]
        );
        let f = Family::from_bits(3, [0, 0b111]).unwrap();
        let v = validate_topology(2, &f).unwrap_err();
        assert!(v.iter().any(|x| x.kind == ViolationKind::MemberOutOfCarrier && x.witness == vec![0b111]));
    }

    #[test]
    fn witnesses_recheck() {
        for bits in 0u32..(1 << 8) {
            let f = Family::from_bits(3, (0..8).filter(|i| bits & (1 << i) != 0)).unwrap();
            if let Err(vs) = validate_topology(3, &f) {
                for v in vs {
                    match v.kind {
                        ViolationKind::NotIntersectionClosed => {
                            assert!(!f.contains_bits(v.witness[0] & v.witness[1]))
                        }
                        ViolationKind::NotUnionClosed => assert!(!f.contains_bits(v.witness[0] | v.witness[1])),
                        ViolationKind::MissingEmpty => assert!(!f.contains_bits(0)),
                        ViolationKind::MissingCarrier => assert!(!f.contains_bits(7)),
                        ViolationKind::MemberOutOfCarrier => unreachable!(),
                    }
                }
            }
        }
    }

    #[test]
    fn empty_space_is_admitted() {
        let s = validate_topology(0, &Family::from_bits(0, [0]).unwrap()).unwrap();
        assert_eq!(s.opens().len(), 1);
        assert_eq!(indiscrete(0).unwrap(), s);
        assert_eq!(discrete(0).unwrap(), s);
    }

    #[test]
    fn discrete_and_indiscrete() {
        assert_eq!(discrete(1).unwrap(), indiscrete(1).unwrap());
        assert_eq!(indiscrete(3).unwrap().opens(), &fam(3, &[&[], &[0, 1, 2]]));
        assert_eq!(discrete(2).unwrap().opens().len(), 4);
        assert!(matches!(discrete(21), Err(Error::CarrierTooLarge { .. })));
        assert!(matches!(indiscrete(25), Err(Error::CarrierTooLarge { .. })));
        assert_eq!(indiscrete(24).unwrap().opens().len(), 2);
    }

    #[test]
    fn closed_set_examples() {
        assert_eq!(closed_sets(&discrete(2).unwrap()).len(), 4);
        assert_eq!(closed_sets(&indiscrete(3).unwrap()), &fam(3, &[&[], &[0, 1, 2]]));
        assert_eq!(closed_sets(&sierpinski()), &fam(2, &[&[], &[0], &[0, 1]]));
    }

    #[test]
    fn neighborhood_examples() {
        let s = sierpinski();
        assert_eq!(&neighborhoods(&s, s.empty_set(), NeighborhoodKind::Open), s.opens());
        assert_eq!(neighborhoods(&s, s.set(&[0]), NeighborhoodKind::Open), fam(2, &[&[0, 1]]));
        assert_eq!(neighborhoods(&s, s.set(&[1]), NeighborhoodKind::Closed), fam(2, &[&[0, 1]]));
    }

    #[test]
    fn minimal_open_examples() {
        let d = discrete(3).unwrap();
        assert_eq!(minimal_open(&d, 1).unwrap(), d.set(&[1]));
        let i = indiscrete(3).unwrap();
        assert_eq!(minimal_open(&i, 1).unwrap(), i.set(&[0, 1, 2]));
        let s = sierpinski();
        assert_eq!(minimal_open(&s, 0).unwrap(), s.set(&[0, 1]));
        assert!(minimal_open(&s, 2).is_err());
    }

    #[test]
    fn compare_examples() {
        let d = discrete(2).unwrap();
        let i = indiscrete(2).unwrap();
        let s = sierpinski();
        let mirror = TopSpace::from_lists(2, &[&[][..], &[0], &[0, 1]]).unwrap();
        assert_eq!(compare(&d, &i).unwrap(), Comparison::StrictlyFiner);
        assert_eq!(compare(&i, &d).unwrap(), Comparison::StrictlyCoarser);
        assert_eq!(compare(&s, &s).unwrap(), Comparison::Equal);
        assert_eq!(compare(&s, &mirror).unwrap(), Comparison::Incomparable);
        assert!(compare(&s, &discrete(3).unwrap()).is_err());
    }

    #[test]
    fn meet_examples() {
        let d = discrete(2).unwrap();
        let i = indiscrete(2).unwrap();
        let s = sierpinski();
        let mirror = TopSpace::from_lists(2, &[&[][..], &[0], &[0, 1]]).unwrap();
        assert_eq!(meet_topologies(&[d, i.clone()]).unwrap(), i);
        assert_eq!(meet_topologies(&[s.clone(), mirror]).unwrap(), i);
        assert_eq!(meet_topologies(&[s.clone()]).unwrap(), s);
        assert_eq!(meet_topologies(&[]), Err(Error::EmptyList));
        assert!(matches!(meet_topologies(&[s, discrete(1).unwrap()]), Err(Error::CarrierMismatch { .. })));
    }

    #[test]
    fn one_point_extension_examples() {
        let e = one_point_extension(&indiscrete(1).unwrap()).unwrap();
        assert_eq!(e.opens(), &fam(2, &[&[], &[1], &[0, 1]]));
        let e = one_point_extension(&discrete(0).unwrap()).unwrap();
        assert_eq!(e.opens(), &fam(1, &[&[], &[0]]));
        for s in [sierpinski(), discrete(3).unwrap(), indiscrete(2).unwrap()] {
            let e = one_point_extension(&s).unwrap();
            assert!(e.is_open(e.carrier()));
        }
        assert!(one_point_extension(&indiscrete(24).unwrap()).is_err());
    }

    #[test]
    fn min_open_is_smallest_open_neighbourhood() {
        let s = TopSpace::from_lists(3, &[&[][..], &[0], &[0, 1], &[0, 1, 2]]).unwrap();
        for p in 0..3 {
            let m = minimal_open(&s, p).unwrap();
            assert!(s.is_open(m) && m.contains(p));
            for u in neighborhoods(&s, s.set(&[p]), NeighborhoodKind::Open).iter() {
                assert!(m.is_subset(u));
            }
        }
        assert_eq!(subsets_iter(3).unwrap().count(), 8);
    }
}
