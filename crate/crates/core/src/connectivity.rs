//! Connected spaces and sets, components, total disconnectedness and local
//! connectedness.

use crate::carrier::{Family, Partition, PointSet};
use crate::constructors::{is_base_for, subspace};
use crate::operators::{boundary, pair_relation, PairRelation};
use crate::space::TopSpace;

/// Only `∅` and the carrier are clopen.
pub fn is_connected(s: &TopSpace) -> bool {
    s.opens().iter().all(|u| !s.is_closed(u) || u.is_empty() || u.is_full())
}

/// The subspace on `a` is connected.
pub fn is_connected_set(s: &TopSpace, a: PointSet) -> bool {
    let (sub, _) = subspace(s, a).expect("set over the space's carrier");
    is_connected(&sub)
}

/// Every connected subset, ascending by bitmask.
pub fn connected_sets(s: &TopSpace) -> Family {
    Family::from_sorted(s.n(), s.subsets().filter(|&a| is_connected_set(s, a)).collect())
}

fn mcp_in(connected: &Family, a: PointSet) -> PointSet {
    connected.iter().filter(|c| a.is_subset(*c)).fold(PointSet::empty(a.n()), |acc, c| acc | c)
}

/// Union of every connected superset of `a`.
pub fn mcp(s: &TopSpace, a: PointSet) -> PointSet {
    mcp_in(&connected_sets(s), a)
}

/// Components as a partition, with the block index of each point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub blocks: Partition,
    pub block_of: Vec<usize>,
}

impl ComponentDecomposition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// Components computed as the distinct `mcp({p})`.
pub fn components(s: &TopSpace) -> ComponentDecomposition {
    let connected = connected_sets(s);
    let mut blocks: Vec<PointSet> = Vec::new();
    for p in 0..s.n() {
        let c = mcp_in(&connected, PointSet::raw(s.n(), 1 << p));
        if !blocks.contains(&c) {
            blocks.push(c);
        }
    }
    let blocks = Partition::new(s.n(), blocks).expect("components partition the carrier");
    let block_of = (0..s.n()).map(|p| blocks.block_of(p)).collect();
    ComponentDecomposition { blocks, block_of }
}

/// Number of components, counted as classes of the symmetric closure of the
/// specialization relation (`q ∈ minopen(p)`).
pub fn component_count(s: &TopSpace) -> usize {
    let n = s.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for p in 0..n {
        for q in s.min_opens()[p].points() {
            let (a, b) = (find(&mut parent, p), find(&mut parent, q));
            parent[a] = b;
        }
    }
    (0..n).filter(|&p| find(&mut parent, p) == p).count()
}

/// The only connected sets are `∅` and singletons.
pub fn is_totally_disconnected(s: &TopSpace) -> bool {
    connected_sets(s).iter().all(|c| c.len() <= 1)
}

/// For every open `U`, each component of the subspace `U` is open in `s`.
pub fn is_locally_connected(s: &TopSpace) -> bool {
    s.opens().iter().all(|u| {
        let (sub, _) = subspace(s, u).expect("open set over the carrier");
        components(&sub).blocks.blocks().iter().all(|b| s.is_open(b.expand(u)))
    })
}

/// Every open neighbourhood of `p` contains a connected open neighbourhood of `p`.
pub fn is_locally_connected_at(s: &TopSpace, p: usize) -> bool {
    let connected_opens: Vec<PointSet> = s.opens().iter().filter(|&v| v.contains(p) && is_connected_set(s, v)).collect();
    s.opens().iter().filter(|u| u.contains(p)).all(|u| connected_opens.iter().any(|v| v.is_subset(u)))
}

/// The connected open sets form a base.
pub fn has_connected_base(s: &TopSpace) -> bool {
    let connected_opens = s.opens().filter(|v| is_connected_set(s, v));
    is_base_for(s, &connected_opens)
}

/// Kind of two-block partition considered by [`two_block_partitions`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartitionKind {
    Open,
    Closed,
    /// Neither block meets the closure of the other.
    NonAttached,
}

/// Partitions `{A, X \ A}` with both blocks nonempty of the given kind, each
/// listed once with the block holding point 0 first.
pub fn two_block_partitions(s: &TopSpace, kind: PartitionKind) -> Vec<(PointSet, PointSet)> {
    if s.n() == 0 {
        return Vec::new();
    }
    s.subsets()
        .filter(|a| a.contains(0) && !a.is_full())
        .filter(|&a| {
            let b = a.complement();
            match kind {
                PartitionKind::Open => s.is_open(a) && s.is_open(b),
                PartitionKind::Closed => s.is_closed(a) && s.is_closed(b),
                PartitionKind::NonAttached => pair_relation(s, a, b) == PairRelation::Free,
            }
        })
        .map(|a| (a, a.complement()))
        .collect()
}

/// Subsets with empty boundary.
pub fn boundaryless_sets(s: &TopSpace) -> Family {
    Family::from_sorted(s.n(), s.subsets().filter(|&a| boundary(s, a).is_empty()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::{discrete, indiscrete, one_point, sierpinski};

    #[test]
    fn connectedness_examples() {
        for n in 0..5 {
            assert!(is_connected(&indiscrete(n).unwrap()));
        }
        assert!(!is_connected(&discrete(2).unwrap()));
        assert!(is_connected(&sierpinski()));
        let s = discrete(3).unwrap();
        assert!(is_connected_set(&s, s.empty_set()));
        assert!((0..3).all(|p| is_connected_set(&s, s.set(&[p]))));
    }

    #[test]
    fn component_examples() {
        assert!(components(&discrete(0).unwrap()).is_empty());
        let c = components(&discrete(3).unwrap());
        assert_eq!(c.blocks.as_family().to_lists(), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(c.block_of, vec![0, 1, 2]);
        let c = components(&sierpinski());
        assert_eq!(c.blocks.as_family().to_lists(), vec![vec![0, 1]]);
    }

    #[test]
    fn component_count_matches() {
        let two = TopSpace::from_lists(4, &[&[][..], &[0], &[0, 1], &[2, 3], &[0, 2, 3], &[0, 1, 2, 3]]).unwrap();
        assert_eq!(component_count(&two), 2);
        for s in [two, sierpinski(), discrete(3).unwrap(), indiscrete(3).unwrap(), one_point()] {
            assert_eq!(component_count(&s), components(&s).len());
        }
    }

    #[test]
    fn mcp_examples() {
        let d = discrete(3).unwrap();
        assert_eq!(mcp(&d, d.empty_set()), d.carrier());
        assert_eq!(mcp(&d, d.set(&[1])), d.set(&[1]));
        assert_eq!(mcp(&d, d.set(&[0, 1])), d.empty_set());
        let s = sierpinski();
        assert_eq!(mcp(&s, s.set(&[0])), s.carrier());
    }

    #[test]
    fn total_disconnection_examples() {
        assert!(is_totally_disconnected(&discrete(4).unwrap()));
        assert!(is_totally_disconnected(&one_point()));
        assert!(!is_totally_disconnected(&indiscrete(2).unwrap()));
    }

    #[test]
    fn local_connectedness_examples() {
        for s in [discrete(3).unwrap(), indiscrete(3).unwrap(), sierpinski()] {
            assert!(is_locally_connected(&s));
            assert!(has_connected_base(&s));
            assert!((0..s.n()).all(|p| is_locally_connected_at(&s, p)));
        }
    }

    #[test]
    fn partition_examples() {
        let d = discrete(2).unwrap();
        assert_eq!(two_block_partitions(&d, PartitionKind::Open).len(), 1);
        assert_eq!(two_block_partitions(&d, PartitionKind::NonAttached).len(), 1);
        let s = sierpinski();
        assert!(two_block_partitions(&s, PartitionKind::Closed).is_empty());
        assert_eq!(boundaryless_sets(&s).len(), 2);
    }
}
