//! Every topology on a small carrier, labeled or one per homeomorphism class.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::carrier::{full_bits, Family, PointSet};
use crate::compactness::{is_compact, is_locally_compact};
use crate::connectivity::{is_connected, is_locally_connected, is_totally_disconnected};
use crate::constructors::{is_metrizable, union_closure};
use crate::error::{Error, Result};
use crate::maps::find_homeomorphism;
use crate::separation::separation_report;
use crate::space::{validate_topology, TopSpace};

/// Largest carrier the enumerator accepts.
pub const MAX_ENUM: usize = 5;
/// Largest carrier for the naive power-family filter.
pub const MAX_NAIVE: usize = 4;
/// Largest carrier for the preorder-based generator.
pub const MAX_PREORDER: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Predicate {
    T0,
    T1,
    T2,
    T3,
    T4,
    Regular,
    Normal,
    Connected,
    Compact,
    Metrizable,
    LocallyConnected,
    TotallyDisconnected,
    LocallyCompact,
    Discrete,
    Indiscrete,
}

impl Predicate {
    pub const ALL: [Predicate; 15] = [
        Predicate::T0,
        Predicate::T1,
        Predicate::T2,
        Predicate::T3,
        Predicate::T4,
        Predicate::Regular,
        Predicate::Normal,
        Predicate::Connected,
        Predicate::Compact,
        Predicate::Metrizable,
        Predicate::LocallyConnected,
        Predicate::TotallyDisconnected,
        Predicate::LocallyCompact,
        Predicate::Discrete,
        Predicate::Indiscrete,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::T0 => "t0",
            Predicate::T1 => "t1",
            Predicate::T2 => "t2",
            Predicate::T3 => "t3",
            Predicate::T4 => "t4",
            Predicate::Regular => "regular",
            Predicate::Normal => "normal",
            Predicate::Connected => "connected",
            Predicate::Compact => "compact",
            Predicate::Metrizable => "metrizable",
            Predicate::LocallyConnected => "locally-connected",
            Predicate::TotallyDisconnected => "totally-disconnected",
            Predicate::LocallyCompact => "locally-compact",
            Predicate::Discrete => "discrete",
            Predicate::Indiscrete => "indiscrete",
        }
    }

    pub fn holds(self, s: &TopSpace) -> bool {
        match self {
            Predicate::T0 => separation_report(s).t0,
            Predicate::T1 => separation_report(s).t1,
            Predicate::T2 => separation_report(s).t2,
            Predicate::T3 => separation_report(s).t3,
            Predicate::T4 => separation_report(s).t4,
            Predicate::Regular => separation_report(s).regular,
            Predicate::Normal => separation_report(s).normal,
            Predicate::Connected => is_connected(s),
            Predicate::Compact => is_compact(s),
            Predicate::Metrizable => is_metrizable(s),
            Predicate::LocallyConnected => is_locally_connected(s),
            Predicate::TotallyDisconnected => is_totally_disconnected(s),
            Predicate::LocallyCompact => is_locally_compact(s),
            Predicate::Discrete => s.is_discrete(),
            Predicate::Indiscrete => s.is_indiscrete(),
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownPredicate(pub String);

impl fmt::Display for UnknownPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown predicate `{}`", self.0)
    }
}

impl std::error::Error for UnknownPredicate {}

impl FromStr for Predicate {
    type Err = UnknownPredicate;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        Predicate::ALL.into_iter().find(|p| p.name() == key).ok_or_else(|| UnknownPredicate(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum EnumMode {
    #[default]
    Labeled,
    /// One canonical representative per homeomorphism class.
    UpToHomeomorphism,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EnumConfig {
    pub n: usize,
    pub predicate: Option<Predicate>,
    pub mode: EnumMode,
}

impl EnumConfig {
    pub fn labeled(n: usize) -> EnumConfig {
        EnumConfig { n, predicate: None, mode: EnumMode::Labeled }
    }

    pub fn classes(n: usize) -> EnumConfig {
        EnumConfig { n, predicate: None, mode: EnumMode::UpToHomeomorphism }
    }

    pub fn with_predicate(self, predicate: Predicate) -> EnumConfig {
        EnumConfig { predicate: Some(predicate), ..self }
    }

    fn accepts(&self, s: &TopSpace) -> bool {
        let rep = match self.mode {
            EnumMode::Labeled => true,
            EnumMode::UpToHomeomorphism => is_canonical(s),
        };
        rep && self.predicate.is_none_or(|p| p.holds(s))
    }
}

struct Frame {
    next: u32,
    /// Largest candidate worth trying at this depth.
    stop: u32,
    /// Unions still owed to the family, ascending; all exceed the last member.
    required: Vec<u32>,
}

/// Depth-first search over intersection- and union-closed families in
/// lexicographic order of their sorted bitmask lists.
///
/// Members are appended in increasing order. A candidate must keep every
/// intersection with earlier members inside the family and may not skip past
/// a union that is still owed.
pub struct RawTopologies {
    n: usize,
    full: u32,
    members: Vec<u32>,
    stack: Vec<Frame>,
    emit_root: bool,
}

impl RawTopologies {
    pub fn new(n: usize) -> Result<RawTopologies> {
        check_enum(n)?;
        let full = full_bits(n);
        Ok(RawTopologies {
            n,
            full,
            members: vec![0],
            stack: vec![Frame { next: 1, stop: full, required: Vec::new() }],
            emit_root: full == 0,
        })
    }

    /// Only the families whose smallest nonempty member is `second`.
    pub fn with_second(n: usize, second: u32) -> Result<RawTopologies> {
        let mut g = RawTopologies::new(n)?;
        g.stack[0].next = second;
        g.stack[0].stop = second;
        Ok(g)
    }

    fn admissible(&self, m: u32) -> bool {
        self.members.iter().all(|&p| self.members.binary_search(&(p & m)).is_ok())
    }

    fn emit(&self) -> TopSpace {
        TopSpace::from_valid(self.n, Family::from_sorted_bits(self.n, &self.members))
    }
}

impl Iterator for RawTopologies {
    type Item = TopSpace;

    fn next(&mut self) -> Option<TopSpace> {
        if self.emit_root {
            self.emit_root = false;
            self.stack.clear();
            return Some(self.emit());
        }
        loop {
            let top = self.stack.last()?;
            let last = *self.members.last().unwrap();
            if last == self.full || top.next > top.stop {
                self.stack.pop();
                if !self.stack.is_empty() {
                    self.members.pop();
                }
                continue;
            }
            let m = top.next;
            self.stack.last_mut().unwrap().next += 1;
            if !self.admissible(m) {
                continue;
            }
            let top = self.stack.last().unwrap();
            let mut required: Vec<u32> = top.required.iter().copied().filter(|&r| r != m).collect();
            for &p in &self.members {
                let u = p | m;
                if u > m {
                    required.push(u);
                }
            }
            required.sort_unstable();
            required.dedup();
            let stop = required.first().copied().unwrap_or(self.full);
            let done = m == self.full && required.is_empty();
            self.members.push(m);
            self.stack.push(Frame { next: m + 1, stop, required });
            if done {
                return Some(self.emit());
            }
        }
    }
}

fn check_enum(n: usize) -> Result<()> {
    if n > MAX_ENUM {
        return Err(Error::CarrierTooLarge { n, cap: MAX_ENUM });
    }
    Ok(())
}

/// Every topology on `n` points in canonical order.
pub fn all_topologies(n: usize) -> Result<Vec<TopSpace>> {
    Ok(RawTopologies::new(n)?.collect())
}

/// Topologies selected by `cfg`, in canonical order.
pub fn enumerate_topologies(cfg: EnumConfig) -> Result<impl Iterator<Item = TopSpace>> {
    Ok(RawTopologies::new(cfg.n)?.filter(move |s| cfg.accepts(s)))
}

pub fn count(cfg: EnumConfig) -> Result<u64> {
    Ok(enumerate_topologies(cfg)?.count() as u64)
}

/// Labeled count, optionally filtered.
pub fn count_topologies(n: usize, predicate: Option<Predicate>) -> Result<u64> {
    count(EnumConfig { n, predicate, mode: EnumMode::Labeled })
}

/// Same as [`count`], with the search split by second member across threads.
pub fn count_parallel(cfg: EnumConfig) -> Result<u64> {
    check_enum(cfg.n)?;
    if cfg.n == 0 {
        return count(cfg);
    }
    let full = full_bits(cfg.n);
    (1..=full)
        .into_par_iter()
        .map(|second| Ok(RawTopologies::with_second(cfg.n, second)?.filter(|s| cfg.accepts(s)).count() as u64))
        .sum()
}

/// Applies a carrier permutation to a set.
fn permute_bits(bits: u32, perm: &[usize]) -> u32 {
    let mut out = 0u32;
    let mut b = bits;
    while b != 0 {
        let p = b.trailing_zeros() as usize;
        out |= 1 << perm[p];
        b &= b - 1;
    }
    out
}

/// Steps `v` to its lexicographic successor; false after the last permutation.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Calls `f` with every permutation of `0..n`.
pub fn for_each_permutation<F: FnMut(&[usize])>(n: usize, mut f: F) {
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        f(&perm);
        if !next_permutation(&mut perm) {
            break;
        }
    }
}

/// Image of `s` under relabeling point `p` as `perm[p]`.
pub fn relabel(s: &TopSpace, perm: &[usize]) -> TopSpace {
    let mut bits: Vec<u32> = s.opens().iter().map(|u| permute_bits(u.bits(), perm)).collect();
    bits.sort_unstable();
    TopSpace::from_valid(s.n(), Family::from_sorted_bits(s.n(), &bits))
}

/// Least open family, in canonical order, over all relabelings of `s`.
pub fn canonical_form(s: &TopSpace) -> TopSpace {
    let mut best: Vec<u32> = s.opens().iter().map(PointSet::bits).collect();
    let mut buf = Vec::with_capacity(best.len());
    for_each_permutation(s.n(), |perm| {
        buf.clear();
        buf.extend(s.opens().iter().map(|u| permute_bits(u.bits(), perm)));
        buf.sort_unstable();
        if buf < best {
            best.clone_from(&buf);
        }
    });
    TopSpace::from_valid(s.n(), Family::from_sorted_bits(s.n(), &best))
}

pub fn is_canonical(s: &TopSpace) -> bool {
    canonical_form(s) == *s
}

/// Groups `spaces` into homeomorphism classes by witness search; each class
/// lists indices in input order.
pub fn classes_by_search(spaces: &[TopSpace]) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, s) in spaces.iter().enumerate() {
        match classes.iter_mut().find(|c| find_homeomorphism(&spaces[c[0]], s).is_some()) {
            Some(c) => c.push(i),
            None => classes.push(vec![i]),
        }
    }
    classes
}

/// Number of homeomorphism classes on `n` points, by witness search.
pub fn count_classes_by_search(n: usize) -> Result<usize> {
    Ok(classes_by_search(&all_topologies(n)?).len())
}

/// Number of homeomorphism classes on `n` points, by distinct canonical forms.
pub fn count_classes_by_canonical(n: usize) -> Result<usize> {
    let mut forms: Vec<TopSpace> = all_topologies(n)?.iter().map(canonical_form).collect();
    forms.sort();
    forms.dedup();
    Ok(forms.len())
}

/// Every family of subsets of an `n`-point carrier that contains `∅` and the
/// carrier, kept when it validates as a topology.
pub fn naive_topologies(n: usize) -> Result<Vec<TopSpace>> {
    if n > MAX_NAIVE {
        return Err(Error::CarrierTooLarge { n, cap: MAX_NAIVE });
    }
    let full = full_bits(n);
    let middle: Vec<u32> = (1..full).collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << middle.len() {
        let mut bits = vec![0];
        bits.extend(middle.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &b)| b));
        if full != 0 {
            bits.push(full);
        }
        let fam = Family::from_sorted_bits(n, &bits);
        if let Ok(s) = validate_topology(n, &fam) {
            out.push(s);
        }
    }
    out.sort();
    Ok(out)
}

/// Topologies obtained from preorders: every transitive relation on the
/// carrier, with opens the up-closed sets.
pub fn preorder_topologies(n: usize) -> Result<Vec<TopSpace>> {
    if n > MAX_PREORDER {
        return Err(Error::CarrierTooLarge { n, cap: MAX_PREORDER });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|p| (0..n).filter(move |&q| q != p).map(move |q| (p, q))).collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        // up[p] = {q : p ≤ q}
        let mut up: Vec<u32> = (0..n).map(|p| 1 << p).collect();
        for (i, &(p, q)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                up[p] |= 1 << q;
            }
        }
        let transitive = (0..n).all(|p| {
            let mut b = up[p];
            while b != 0 {
                let q = b.trailing_zeros() as usize;
                if up[q] & !up[p] != 0 {
                    return false;
                }
                b &= b - 1;
            }
            true
        });
        if !transitive {
            continue;
        }
        let gens = Family::from_unsorted(n, up.iter().map(|&b| PointSet::from_bits(n, b).unwrap()).collect());
        out.push(TopSpace::from_valid(n, union_closure(n, &gens)));
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::{discrete, one_point};

    #[test]
    fn counts() {
        let expected = [1u64, 1, 4, 29, 355, 6942];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(count_topologies(n, None).unwrap(), c, "n = {n}");
        }
        assert!(count_topologies(6, None).is_err());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(all_topologies(1).unwrap(), vec![one_point()]);
        assert_eq!(all_topologies(2).unwrap(), naive_topologies(2).unwrap());
        assert_eq!(count(EnumConfig::classes(3)).unwrap(), 9);
        assert_eq!(count_topologies(2, Some(Predicate::Connected)).unwrap(), 3);
        assert_eq!(count_topologies(0, None).unwrap(), 1);
    }

    #[test]
    fn canonical_order() {
        for n in 0..=4 {
            let v = all_topologies(n).unwrap();
            assert!(v.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn generators_agree() {
        for n in 0..=3 {
            let fast = all_topologies(n).unwrap();
            assert_eq!(fast, naive_topologies(n).unwrap());
            assert_eq!(fast, preorder_topologies(n).unwrap());
        }
    }

    #[test]
    fn parallel_matches_sequential() {
        for n in 0..=4 {
            let cfg = EnumConfig::labeled(n);
            assert_eq!(count_parallel(cfg).unwrap(), count(cfg).unwrap());
        }
        let cfg = EnumConfig::classes(4).with_predicate(Predicate::T0);
        assert_eq!(count_parallel(cfg).unwrap(), count(cfg).unwrap());
    }

    #[test]
    fn predicate_names_round_trip() {
        for p in Predicate::ALL {
            assert_eq!(p.name().parse::<Predicate>().unwrap(), p);
        }
        assert_eq!("Locally_Connected".parse::<Predicate>().unwrap(), Predicate::LocallyConnected);
        assert!("t5".parse::<Predicate>().is_err());
    }

    #[test]
    fn canonical_forms() {
        let d = discrete(3).unwrap();
        assert_eq!(canonical_form(&d), d);
        assert_eq!(count_classes_by_canonical(3).unwrap(), 9);
        assert_eq!(count_classes_by_search(3).unwrap(), 9);
        assert_eq!(count_classes_by_canonical(4).unwrap(), 33);
    }
}
