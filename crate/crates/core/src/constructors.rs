//! Topologies generated from bases, sub-bases and metrics; subspaces,
//! binary products, quotients and the Alexandroff extension.

use std::collections::HashSet;
use std::fmt;

use crate::carrier::{check_carrier, Family, Partition, PointSet, MAX_CARRIER};
use crate::compactness::is_compact_set;
use crate::error::{Error, Result};
use crate::maps::FiniteMap;
use crate::space::{compare, validate_topology, Comparison, TopSpace};

/// Why a family fails to be a base.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BaseDefect {
    NotCovering,
    /// The intersection of the pair is not a union of members.
    IntersectionNotUnion(PointSet, PointSet),
}

impl fmt::Display for BaseDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseDefect::NotCovering => write!(f, "NotCovering"),
            BaseDefect::IntersectionNotUnion(a, b) => write!(f, "IntersectionNotUnion({a},{b})"),
        }
    }
}

fn check_family_carrier(n: usize, fam: &Family) -> Result<()> {
    check_carrier(n, MAX_CARRIER)?;
    if fam.n() != n {
        return Err(Error::CarrierMismatch { left: n, right: fam.n() });
    }
    Ok(())
}

/// `Ok(None)` when `b` is a base for some topology on `n` points, otherwise the
/// first defect found (non-covering before intersection pairs, pairs in order).
pub fn check_base_conditions(n: usize, b: &Family) -> Result<Option<BaseDefect>> {
    check_family_carrier(n, b)?;
    if !b.union().is_full() {
        return Ok(Some(BaseDefect::NotCovering));
    }
    let members = b.members();
    for (i, &b1) in members.iter().enumerate() {
        for &b2 in &members[i + 1..] {
            let meet = b1 & b2;
            let ok = meet.points().all(|x| members.iter().any(|m| m.contains(x) && m.is_subset(meet)));
            if !ok {
                return Ok(Some(BaseDefect::IntersectionNotUnion(b1, b2)));
            }
        }
    }
    Ok(None)
}

/// Closure of `fam ∪ {∅}` under binary union.
pub(crate) fn union_closure(n: usize, fam: &Family) -> Family {
    let mut seen: HashSet<u32> = HashSet::with_capacity(fam.len() * 2 + 1);
    let mut all: Vec<u32> = Vec::with_capacity(fam.len() + 1);
    for b in std::iter::once(0).chain(fam.iter().map(PointSet::bits)) {
        if seen.insert(b) {
            all.push(b);
        }
    }
    let mut i = 0;
    while i < all.len() {
        let x = all[i];
        for k in 0..all.len() {
            let u = all[k] | x;
            if seen.insert(u) {
                all.push(u);
            }
        }
        i += 1;
    }
    all.sort_unstable();
    Family::from_sorted_bits(n, &all)
}

/// All unions of subfamilies of a valid base.
pub fn topology_from_base(n: usize, b: &Family) -> Result<TopSpace> {
    if let Some(defect) = check_base_conditions(n, b)? {
        return Err(Error::InvalidBase(defect));
    }
    validate_topology(n, &union_closure(n, b)).map_err(Error::InvalidTopology)
}

/// `b ⊆ τ` and every open set is the union of the members it contains.
pub fn is_base_for(s: &TopSpace, b: &Family) -> bool {
    b.n() == s.n()
        && b.iter().all(|m| s.is_open(m))
        && s.opens().iter().all(|u| b.iter().filter(|m| m.is_subset(u)).fold(s.empty_set(), |acc, m| acc | m) == u)
}

/// `τ(b2) ⊆ τ(b1)` by the pointwise criterion: each point of each member of
/// `b2` lies in a member of `b1` inside it.
fn pointwise_finer(b1: &Family, b2: &Family) -> bool {
    b2.iter().all(|m2| m2.points().all(|x| b1.iter().any(|m1| m1.contains(x) && m1.is_subset(m2))))
}

/// How the topology generated by `b1` compares to the one generated by `b2`.
pub fn base_generates_same(n: usize, b1: &Family, b2: &Family) -> Result<Comparison> {
    let t1 = topology_from_base(n, b1)?;
    let t2 = topology_from_base(n, b2)?;
    let cmp = compare(&t1, &t2)?;
    let pointwise = match (pointwise_finer(b1, b2), pointwise_finer(b2, b1)) {
        (true, true) => Comparison::Equal,
        (true, false) => Comparison::StrictlyFiner,
        (false, true) => Comparison::StrictlyCoarser,
        (false, false) => Comparison::Incomparable,
    };
    assert_eq!(cmp, pointwise, "pointwise base comparison disagrees with generated topologies");
    Ok(cmp)
}

/// Topology whose base is the finite intersections of members of `sub`.
pub fn topology_from_subbase(n: usize, sub: &Family) -> Result<TopSpace> {
    check_family_carrier(n, sub)?;
    if !sub.union().is_full() {
        return Err(Error::SubbaseDoesNotCover);
    }
    let mut seen: HashSet<u32> = sub.iter().map(|m| m.bits()).collect();
    let mut all: Vec<u32> = seen.iter().copied().collect();
    let mut i = 0;
    while i < all.len() {
        let x = all[i];
        for k in 0..all.len() {
            let m = all[k] & x;
            if seen.insert(m) {
                all.push(m);
            }
        }
        i += 1;
    }
    let base = Family::from_unsorted(n, all.into_iter().map(|b| PointSet::raw(n, b)).collect());
    topology_from_base(n, &base)
}

/// Subspace on `y`, points re-indexed in ascending order, with its inclusion map.
pub fn subspace(s: &TopSpace, y: PointSet) -> Result<(TopSpace, FiniteMap)> {
    if y.n() != s.n() {
        return Err(Error::CarrierMismatch { left: s.n(), right: y.n() });
    }
    let m = y.len();
    let opens = Family::from_unsorted(m, s.opens().iter().map(|u| u.compress(y)).collect());
    let inclusion = FiniteMap::new(s.n(), y.to_vec())?;
    Ok((TopSpace::from_valid(m, opens), inclusion))
}

/// Carrier of a binary product: `(i, j) ↦ i·n2 + j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PairEncoding {
    pub n1: usize,
    pub n2: usize,
}

impl PairEncoding {
    pub fn encode(&self, i: usize, j: usize) -> usize {
        i * self.n2 + j
    }

    pub fn decode(&self, k: usize) -> (usize, usize) {
        (k / self.n2, k % self.n2)
    }

    pub fn n(&self) -> usize {
        self.n1 * self.n2
    }

    pub fn rectangle(&self, u: PointSet, v: PointSet) -> PointSet {
        let mut bits = 0u32;
        for i in u.points() {
            for j in v.points() {
                bits |= 1 << self.encode(i, j);
            }
        }
        PointSet::raw(self.n(), bits)
    }

    pub fn first_projection(&self) -> FiniteMap {
        FiniteMap::new(self.n1, (0..self.n()).map(|k| self.decode(k).0).collect()).unwrap()
    }

    pub fn second_projection(&self) -> FiniteMap {
        FiniteMap::new(self.n2, (0..self.n()).map(|k| self.decode(k).1).collect()).unwrap()
    }
}

/// Product topology generated by open rectangles.
pub fn product(s1: &TopSpace, s2: &TopSpace) -> Result<(TopSpace, PairEncoding)> {
    let enc = PairEncoding { n1: s1.n(), n2: s2.n() };
    check_carrier(enc.n(), MAX_CARRIER)?;
    let mut rects = Vec::with_capacity(s1.opens().len() * s2.opens().len());
    for u in s1.opens().iter() {
        for v in s2.opens().iter() {
            rects.push(enc.rectangle(u, v));
        }
    }
    let base = Family::from_unsorted(enc.n(), rects);
    Ok((topology_from_base(enc.n(), &base)?, enc))
}

/// Quotient by `p`: a set of blocks is open when the union of its blocks is open.
pub fn quotient(s: &TopSpace, p: &Partition) -> Result<(TopSpace, FiniteMap)> {
    if p.n() != s.n() {
        return Err(Error::CarrierMismatch { left: s.n(), right: p.n() });
    }
    let k = p.len();
    let labels: Vec<usize> = (0..s.n()).map(|x| p.block_of(x)).collect();
    let projection = FiniteMap::new(k, labels)?;
    let opens: Vec<PointSet> = s
        .opens()
        .iter()
        .filter(|&u| projection.preimage(projection.image(u)) == u)
        .map(|u| projection.image(u))
        .collect();
    let fam = Family::from_unsorted(k, opens);
    let space = validate_topology(k, &fam).map_err(Error::InvalidTopology)?;
    Ok((space, projection))
}

/// Metric axiom that a table violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MetricAxiom {
    /// Rows of unequal length or a table that is not square.
    Shape,
    ZeroDiagonal,
    Symmetry,
    Positivity,
    Triangle,
}

impl MetricAxiom {
    pub fn name(self) -> &'static str {
        match self {
            MetricAxiom::Shape => "shape",
            MetricAxiom::ZeroDiagonal => "zero-diagonal",
            MetricAxiom::Symmetry => "symmetry",
            MetricAxiom::Positivity => "positivity",
            MetricAxiom::Triangle => "triangle",
        }
    }
}

impl fmt::Display for MetricAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exact integer distance table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MetricTable {
    d: Vec<Vec<u64>>,
}

impl MetricTable {
    pub fn new(d: Vec<Vec<u64>>) -> Result<MetricTable> {
        let n = d.len();
        check_carrier(n, MAX_CARRIER)?;
        let bad = |axiom, witness: Vec<usize>| Err(Error::InvalidMetric { axiom, witness });
        if let Some(i) = d.iter().position(|row| row.len() != n) {
            return bad(MetricAxiom::Shape, vec![i]);
        }
        if let Some(i) = (0..n).find(|&i| d[i][i] != 0) {
            return bad(MetricAxiom::ZeroDiagonal, vec![i]);
        }
        for i in 0..n {
            for j in i + 1..n {
                if d[i][j] != d[j][i] {
                    return bad(MetricAxiom::Symmetry, vec![i, j]);
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if d[i][j] == 0 {
                    return bad(MetricAxiom::Positivity, vec![i, j]);
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if d[i][k] > d[i][j] + d[j][k] {
                        return bad(MetricAxiom::Triangle, vec![i, j, k]);
                    }
                }
            }
        }
        Ok(MetricTable { d })
    }

    pub fn n(&self) -> usize {
        self.d.len()
    }

    pub fn dist(&self, i: usize, j: usize) -> u64 {
        self.d[i][j]
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.d
    }

    /// Open ball `{x : d(p, x) < r}`.
    pub fn ball(&self, p: usize, r: u64) -> PointSet {
        let bits = (0..self.n()).filter(|&x| self.d[p][x] < r).fold(0u32, |acc, x| acc | 1 << x);
        PointSet::raw(self.n(), bits)
    }

    /// Distinct positive distances, followed by one radius above the maximum.
    pub fn radii(&self) -> Vec<u64> {
        let mut r: Vec<u64> = self.d.iter().flatten().copied().filter(|&x| x > 0).collect();
        r.sort_unstable();
        r.dedup();
        r.push(r.last().copied().unwrap_or(0) + 1);
        r
    }

    /// Every open ball at the sampled radii.
    pub fn balls(&self) -> Family {
        let radii = self.radii();
        let balls = (0..self.n()).flat_map(|p| radii.iter().map(move |&r| (p, r))).map(|(p, r)| self.ball(p, r));
        Family::from_unsorted(self.n(), balls.collect())
    }
}

/// Topology generated by the open balls.
pub fn metric_topology(m: &MetricTable) -> Result<TopSpace> {
    topology_from_base(m.n(), &m.balls())
}

/// Finite metric spaces are discrete, so only discrete topologies qualify.
pub fn is_metrizable(s: &TopSpace) -> bool {
    s.n() == 0 || s.is_discrete()
}

/// The discrete metric `d(i, j) = 1` for `i ≠ j`.
pub fn unit_metric(n: usize) -> Result<MetricTable> {
    MetricTable::new((0..n).map(|i| (0..n).map(|j| u64::from(i != j)).collect()).collect())
}

/// Adjoins the point `s.n()`; its open neighbourhoods are `(X \ K) ∪ {∞}` for
/// `K` closed and compact.
pub fn alexandroff(s: &TopSpace) -> Result<TopSpace> {
    let n = s.n() + 1;
    check_carrier(n, MAX_CARRIER)?;
    let inf = 1u32 << s.n();
    let mut members: Vec<PointSet> = s.opens().iter().map(|u| PointSet::raw(n, u.bits())).collect();
    for k in s.closeds().iter() {
        if is_compact_set(s, k) {
            members.push(PointSet::raw(n, k.complement().bits() | inf));
        }
    }
    let fam = Family::from_unsorted(n, members);
    validate_topology(n, &fam).map_err(Error::InvalidTopology)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::find_homeomorphism;
    use crate::space::{discrete, indiscrete, one_point, sierpinski};

    fn fam(n: usize, lists: &[&[usize]]) -> Family {
        Family::from_lists(n, lists).unwrap()
    }

    #[test]
    fn base_condition_examples() {
        assert_eq!(check_base_conditions(2, &fam(2, &[&[0], &[1]])).unwrap(), None);
        assert_eq!(check_base_conditions(2, &fam(2, &[&[0, 1]])).unwrap(), None);
        let b = fam(3, &[&[0, 1], &[1, 2]]);
        assert_eq!(
            check_base_conditions(3, &b).unwrap(),
            Some(BaseDefect::IntersectionNotUnion(b.members()[0], b.members()[1]))
        );
        assert_eq!(check_base_conditions(2, &fam(2, &[&[0]])).unwrap(), Some(BaseDefect::NotCovering));
    }

    #[test]
    fn from_base_examples() {
        assert_eq!(topology_from_base(2, &fam(2, &[&[0], &[1]])).unwrap(), discrete(2).unwrap());
        assert_eq!(topology_from_base(1, &fam(1, &[&[0]])).unwrap(), one_point());
        let s = TopSpace::from_lists(3, &[&[][..], &[1], &[0, 1], &[1, 2], &[0, 1, 2]]).unwrap();
        assert_eq!(topology_from_base(3, s.opens()).unwrap(), s);
        assert!(matches!(topology_from_base(3, &fam(3, &[&[0, 1], &[1, 2]])), Err(Error::InvalidBase(_))));
    }

    #[test]
    fn union_closure_is_complete() {
        let f = fam(4, &[&[0], &[1], &[2], &[3]]);
        assert_eq!(union_closure(4, &f).len(), 16);
    }

    #[test]
    fn is_base_for_examples() {
        let s = sierpinski();
        assert!(is_base_for(&s, s.opens()));
        assert!(is_base_for(&discrete(3).unwrap(), &fam(3, &[&[0], &[1], &[2]])));
        assert!(!is_base_for(&indiscrete(2).unwrap(), &fam(2, &[&[0]])));
    }

    #[test]
    fn base_comparison_examples() {
        let singles = fam(2, &[&[0], &[1]]);
        let all = fam(2, &[&[], &[0], &[1], &[0, 1]]);
        assert_eq!(base_generates_same(2, &singles, &all).unwrap(), Comparison::Equal);
        let coarse = fam(2, &[&[0, 1]]);
        assert_eq!(base_generates_same(2, &coarse, &singles).unwrap(), Comparison::StrictlyCoarser);
        assert_eq!(base_generates_same(2, &coarse, &coarse).unwrap(), Comparison::Equal);
    }

    #[test]
    fn subbase_examples() {
        let t = topology_from_subbase(3, &fam(3, &[&[0, 1], &[1, 2]])).unwrap();
        assert_eq!(t.opens().to_lists(), vec![vec![], vec![1], vec![0, 1], vec![1, 2], vec![0, 1, 2]]);
        let s = sierpinski();
        let sub = s.opens().filter(|u| !u.is_empty());
        assert_eq!(topology_from_subbase(2, &sub).unwrap(), s);
        assert_eq!(topology_from_subbase(2, &fam(2, &[&[0]])), Err(Error::SubbaseDoesNotCover));
    }

    #[test]
    fn subspace_examples() {
        let s = sierpinski();
        let (sub, inc) = subspace(&s, s.carrier()).unwrap();
        assert_eq!(sub, s);
        assert_eq!(inc, FiniteMap::identity(2));
        for p in 0..2 {
            assert_eq!(subspace(&s, s.set(&[p])).unwrap().0, one_point());
        }
        let d = discrete(3).unwrap();
        assert_eq!(subspace(&d, d.set(&[0, 2])).unwrap().0, discrete(2).unwrap());
    }

    #[test]
    fn product_examples() {
        let i2 = indiscrete(2).unwrap();
        assert_eq!(product(&i2, &i2).unwrap().0, indiscrete(4).unwrap());
        let d2 = discrete(2).unwrap();
        assert_eq!(product(&d2, &d2).unwrap().0, discrete(4).unwrap());
        let s = sierpinski();
        let (p, _) = product(&s, &one_point()).unwrap();
        assert!(find_homeomorphism(&p, &s).is_some());
        assert!(matches!(product(&discrete(5).unwrap(), &discrete(5).unwrap()), Err(Error::CarrierTooLarge { .. })));
    }

    #[test]
    fn quotient_examples() {
        let s = sierpinski();
        let (q, proj) = quotient(&s, &Partition::singletons(2)).unwrap();
        assert_eq!(q, s);
        assert_eq!(proj, FiniteMap::identity(2));
        let d = discrete(3).unwrap();
        let p = Partition::from_lists(3, &[&[0, 1][..], &[2]]).unwrap();
        assert_eq!(quotient(&d, &p).unwrap().0, discrete(2).unwrap());
        let whole = Partition::from_lists(2, &[&[0, 1]]).unwrap();
        assert_eq!(quotient(&s, &whole).unwrap().0, one_point());
    }

    #[test]
    fn metric_examples() {
        let m = MetricTable::new(vec![vec![0]]).unwrap();
        assert_eq!(metric_topology(&m).unwrap(), one_point());
        let m = MetricTable::new(vec![vec![0, 2, 3], vec![2, 0, 4], vec![3, 4, 0]]).unwrap();
        assert_eq!(metric_topology(&m).unwrap(), discrete(3).unwrap());
        let e = MetricTable::new(vec![vec![0, 0], vec![0, 0]]);
        assert_eq!(e, Err(Error::InvalidMetric { axiom: MetricAxiom::Positivity, witness: vec![0, 1] }));
        let e = MetricTable::new(vec![vec![0, 1, 5], vec![1, 0, 1], vec![5, 1, 0]]);
        assert!(matches!(e, Err(Error::InvalidMetric { axiom: MetricAxiom::Triangle, .. })));
    }

    #[test]
    fn metrizable_examples() {
        assert!(is_metrizable(&discrete(4).unwrap()));
        assert!(!is_metrizable(&indiscrete(2).unwrap()));
        assert!(is_metrizable(&one_point()));
        assert_eq!(metric_topology(&unit_metric(4).unwrap()).unwrap(), discrete(4).unwrap());
    }

    #[test]
    fn alexandroff_examples() {
        assert_eq!(alexandroff(&discrete(1).unwrap()).unwrap(), discrete(2).unwrap());
        let a = alexandroff(&indiscrete(2).unwrap()).unwrap();
        assert_eq!(a.opens().to_lists(), vec![vec![], vec![0, 1], vec![2], vec![0, 1, 2]]);
        let s = sierpinski();
        let a = alexandroff(&s).unwrap();
        let (sub, _) = subspace(&a, a.set(&[0, 1])).unwrap();
        assert_eq!(sub.opens(), s.opens());
    }
}
