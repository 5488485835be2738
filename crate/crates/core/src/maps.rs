//! Maps between finite spaces: continuity, open/closed maps, homeomorphisms,
//! embeddings, homeomorphism search and limits at limit points.

use crate::carrier::PointSet;
use crate::connectivity::component_count;
use crate::constructors::subspace;
use crate::error::{Error, Result};
use crate::operators::point_roles;
use crate::space::TopSpace;

/// Total function `{0..dom_n-1} -> {0..cod_n-1}` stored as a lookup table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteMap {
    cod_n: usize,
    table: Vec<usize>,
}

impl FiniteMap {
    pub fn new(cod_n: usize, table: Vec<usize>) -> Result<FiniteMap> {
        if let Some((index, &value)) = table.iter().enumerate().find(|(_, &v)| v >= cod_n) {
            return Err(Error::MapOutOfRange { index, value, cod_n });
        }
        Ok(FiniteMap { cod_n, table })
    }

    pub fn identity(n: usize) -> FiniteMap {
        FiniteMap { cod_n: n, table: (0..n).collect() }
    }

    pub fn constant(dom_n: usize, cod_n: usize, value: usize) -> Result<FiniteMap> {
        FiniteMap::new(cod_n, vec![value; dom_n])
    }

    pub fn dom_n(&self) -> usize {
        self.table.len()
    }

    pub fn cod_n(&self) -> usize {
        self.cod_n
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    #[inline]
    pub fn apply(&self, p: usize) -> usize {
        self.table[p]
    }

    pub fn image(&self, a: PointSet) -> PointSet {
        let bits = a.points().fold(0u32, |acc, p| acc | 1 << self.table[p]);
        PointSet::raw(self.cod_n, bits)
    }

    pub fn preimage(&self, b: PointSet) -> PointSet {
        let bits = self
            .table
            .iter()
            .enumerate()
            .filter(|(_, &y)| b.contains(y))
            .fold(0u32, |acc, (x, _)| acc | 1 << x);
        PointSet::raw(self.dom_n(), bits)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = 0u64;
        self.table.iter().all(|&y| {
            let fresh = seen & (1 << y) == 0;
            seen |= 1 << y;
            fresh
        })
    }

    pub fn is_surjective(&self) -> bool {
        self.image(PointSet::full(self.dom_n())).is_full()
    }

    pub fn is_bijective(&self) -> bool {
        self.dom_n() == self.cod_n && self.is_injective()
    }

    /// `after ∘ self`.
    pub fn then(&self, after: &FiniteMap) -> Result<FiniteMap> {
        if self.cod_n != after.dom_n() {
            return Err(Error::CarrierMismatch { left: self.cod_n, right: after.dom_n() });
        }
        Ok(FiniteMap { cod_n: after.cod_n, table: self.table.iter().map(|&y| after.table[y]).collect() })
    }

    pub fn inverse(&self) -> Option<FiniteMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut table = vec![0; self.cod_n];
        for (x, &y) in self.table.iter().enumerate() {
            table[y] = x;
        }
        Some(FiniteMap { cod_n: self.dom_n(), table })
    }

    /// Every map `{0..dom_n-1} -> {0..cod_n-1}`, tables in lexicographic order.
    pub fn all(dom_n: usize, cod_n: usize) -> AllMaps {
        let next = if cod_n == 0 && dom_n > 0 { None } else { Some(vec![0; dom_n]) };
        AllMaps { cod_n, next }
    }
}

/// Iterator behind [`FiniteMap::all`].
pub struct AllMaps {
    cod_n: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for AllMaps {
    type Item = FiniteMap;

    fn next(&mut self) -> Option<FiniteMap> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let mut i = succ.len();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            succ[i] += 1;
            if succ[i] < self.cod_n {
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(FiniteMap { cod_n: self.cod_n, table: cur })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct MapReport {
    pub continuous: bool,
    pub open_map: bool,
    pub closed_map: bool,
    pub injective: bool,
    pub surjective: bool,
    pub homeomorphism: bool,
    pub embedding: bool,
}

fn check_shape(f: &FiniteMap, s1: &TopSpace, s2: &TopSpace) -> Result<()> {
    if f.dom_n() != s1.n() {
        return Err(Error::CarrierMismatch { left: f.dom_n(), right: s1.n() });
    }
    if f.cod_n() != s2.n() {
        return Err(Error::CarrierMismatch { left: f.cod_n(), right: s2.n() });
    }
    Ok(())
}

/// Preimage of every open set is open.
pub fn is_continuous(f: &FiniteMap, s1: &TopSpace, s2: &TopSpace) -> Result<bool> {
    check_shape(f, s1, s2)?;
    Ok(continuous_unchecked(f, s1, s2))
}

fn continuous_unchecked(f: &FiniteMap, s1: &TopSpace, s2: &TopSpace) -> bool {
    s2.opens().iter().all(|v| s1.is_open(f.preimage(v)))
}

fn homeomorphism_unchecked(f: &FiniteMap, s1: &TopSpace, s2: &TopSpace) -> bool {
    match f.inverse() {
        Some(inv) => continuous_unchecked(f, s1, s2) && continuous_unchecked(&inv, s2, s1),
        None => false,
    }
}

/// Image of every open set is open.
pub fn is_open_map(f: &FiniteMap, s1: &TopSpace, s2: &TopSpace) -> Result<bool> {
    check_shape(f, s1, s2)?;
    Ok(s1.opens().iter().all(|u| s2.is_open(f.image(u))))
}

/// Image of every closed set is closed.
pub fn is_closed_map(f: &FiniteMap, s1: &TopSpace, s2: &TopSpace) -> Result<bool> {
    check_shape(f, s1, s2)?;
    Ok(s1.closeds().iter().all(|c| s2.is_closed(f.image(c))))
}

/// Bijective, continuous, with continuous inverse.
pub fn is_homeomorphism(f: &FiniteMap, s1: &TopSpace, s2: &TopSpace) -> Result<bool> {
    check_shape(f, s1, s2)?;
    Ok(homeomorphism_unchecked(f, s1, s2))
}

/// The corestriction of `f` to its image is a homeomorphism onto the image subspace.
pub fn is_embedding(f: &FiniteMap, s1: &TopSpace, s2: &TopSpace) -> Result<bool> {
    check_shape(f, s1, s2)?;
    let img = f.image(s1.carrier());
    let (sub, _) = subspace(s2, img)?;
    let corestricted = FiniteMap {
        cod_n: sub.n(),
        table: f.table.iter().map(|&y| PointSet::raw(s2.n(), 1 << y).compress(img).first().unwrap()).collect(),
    };
    Ok(homeomorphism_unchecked(&corestricted, s1, &sub))
}

pub fn check_map(f: &FiniteMap, s1: &TopSpace, s2: &TopSpace) -> Result<MapReport> {
    Ok(MapReport {
        continuous: is_continuous(f, s1, s2)?,
        open_map: is_open_map(f, s1, s2)?,
        closed_map: is_closed_map(f, s1, s2)?,
        injective: f.is_injective(),
        surjective: f.is_surjective(),
        homeomorphism: is_homeomorphism(f, s1, s2)?,
        embedding: is_embedding(f, s1, s2)?,
    })
}

/// For every open neighbourhood `U'` of `f(p)` some open neighbourhood `V` of
/// `p` satisfies `f[V] ⊆ U'`.
pub fn is_continuous_at(f: &FiniteMap, s1: &TopSpace, s2: &TopSpace, p: usize) -> Result<bool> {
    check_shape(f, s1, s2)?;
    if p >= s1.n() {
        return Err(Error::PointOutOfRange { point: p, n: s1.n() });
    }
    let fp = f.apply(p);
    Ok(s2
        .opens()
        .iter()
        .filter(|u| u.contains(fp))
        .all(|u| s1.opens().iter().filter(|v| v.contains(p)).any(|v| f.image(v).is_subset(u))))
}

/// Limits at `p` of a map `f` defined on the subspace `a` of `s1`.
///
/// `f` is indexed by the points of `a` in ascending order. The result holds
/// every `y` of `s2` such that each neighbourhood of `y` contains the image of
/// `(U ∩ a) \ {p}` for some neighbourhood `U` of `p`.
pub fn limits_at(f: &FiniteMap, s1: &TopSpace, a: PointSet, s2: &TopSpace, p: usize) -> Result<PointSet> {
    if a.n() != s1.n() {
        return Err(Error::CarrierMismatch { left: a.n(), right: s1.n() });
    }
    if f.dom_n() != a.len() {
        return Err(Error::CarrierMismatch { left: f.dom_n(), right: a.len() });
    }
    if f.cod_n() != s2.n() {
        return Err(Error::CarrierMismatch { left: f.cod_n(), right: s2.n() });
    }
    if p >= s1.n() {
        return Err(Error::PointOutOfRange { point: p, n: s1.n() });
    }
    if !point_roles(s1, a, p).limit {
        return Err(Error::NotALimitPoint(p));
    }
    let punctured_images: Vec<PointSet> = s1
        .opens()
        .iter()
        .filter(|u| u.contains(p))
        .map(|u| f.image((u & a).without(p).compress(a)))
        .collect();
    let bits = (0..s2.n())
        .filter(|&y| {
            s2.opens()
                .iter()
                .filter(|v| v.contains(y))
                .all(|v| punctured_images.iter().any(|img| img.is_subset(v)))
        })
        .fold(0u32, |acc, y| acc | 1 << y);
    Ok(PointSet::raw(s2.n(), bits))
}

/// Restriction of `f` to `a`, as a map out of the subspace on `a`.
pub fn restrict(f: &FiniteMap, a: PointSet) -> Result<FiniteMap> {
    if a.n() != f.dom_n() {
        return Err(Error::CarrierMismatch { left: a.n(), right: f.dom_n() });
    }
    Ok(FiniteMap { cod_n: f.cod_n, table: a.points().map(|p| f.table[p]).collect() })
}

/// Per-point signature preserved by every homeomorphism.
fn signature(s: &TopSpace, p: usize) -> (usize, usize) {
    (s.min_opens()[p].len(), s.opens().iter().filter(|u| u.contains(p)).count())
}

/// Cheap necessary conditions for two spaces to be homeomorphic.
pub fn invariants_match(s1: &TopSpace, s2: &TopSpace) -> bool {
    if s1.n() != s2.n() || s1.opens().len() != s2.opens().len() {
        return false;
    }
    let mut a: Vec<_> = (0..s1.n()).map(|p| signature(s1, p)).collect();
    let mut b: Vec<_> = (0..s2.n()).map(|p| signature(s2, p)).collect();
    a.sort_unstable();
    b.sort_unstable();
    a == b && component_count(s1) == component_count(s2)
}

/// Backtracking over bijections that preserve the specialization order
/// (`x ∈ minopen(y)`), restricted to signature-compatible candidates.
struct HomeoSearch<'a> {
    s1: &'a TopSpace,
    s2: &'a TopSpace,
    sig1: Vec<(usize, usize)>,
    sig2: Vec<(usize, usize)>,
    table: Vec<usize>,
    used: u32,
}

impl HomeoSearch<'_> {
    fn compatible(&self, p: usize, q: usize) -> bool {
        let m1 = self.s1.min_opens();
        let m2 = self.s2.min_opens();
        (0..p).all(|pp| {
            let qq = self.table[pp];
            m1[p].contains(pp) == m2[q].contains(qq) && m1[pp].contains(p) == m2[qq].contains(q)
        })
    }

    /// Visits complete witnesses in lexicographic order; stops when `visit` returns false.
    fn run(&mut self, p: usize, visit: &mut dyn FnMut(FiniteMap) -> bool) -> bool {
        let n = self.s1.n();
        if p == n {
            let f = FiniteMap { cod_n: n, table: self.table.clone() };
            if homeomorphism_unchecked(&f, self.s1, self.s2) {
                return visit(f);
            }
            return true;
        }
        for q in 0..n {
            if self.used & (1 << q) != 0 || self.sig1[p] != self.sig2[q] || !self.compatible(p, q) {
                continue;
            }
            self.table[p] = q;
            self.used |= 1 << q;
            let go_on = self.run(p + 1, visit);
            self.used &= !(1 << q);
            if !go_on {
                return false;
            }
        }
        true
    }
}

fn search_homeomorphisms(s1: &TopSpace, s2: &TopSpace, visit: &mut dyn FnMut(FiniteMap) -> bool) {
    if !invariants_match(s1, s2) {
        return;
    }
    let n = s1.n();
    let mut search = HomeoSearch {
        s1,
        s2,
        sig1: (0..n).map(|p| signature(s1, p)).collect(),
        sig2: (0..n).map(|p| signature(s2, p)).collect(),
        table: vec![0; n],
        used: 0,
    };
    search.run(0, visit);
}

/// Lexicographically least homeomorphism `s1 -> s2`, if one exists.
pub fn find_homeomorphism(s1: &TopSpace, s2: &TopSpace) -> Option<FiniteMap> {
    let mut found = None;
    search_homeomorphisms(s1, s2, &mut |f| {
        found = Some(f);
        false
    });
    found
}

pub fn are_homeomorphic(s1: &TopSpace, s2: &TopSpace) -> bool {
    find_homeomorphism(s1, s2).is_some()
}

/// Every homeomorphism `s1 -> s2`, in lexicographic order of tables.
pub fn homeomorphisms(s1: &TopSpace, s2: &TopSpace) -> Vec<FiniteMap> {
    let mut all = Vec::new();
    search_homeomorphisms(s1, s2, &mut |f| {
        all.push(f);
        true
    });
    all
}

/// `e1 ~ e2` iff `e1 ∘ h1 = h2 ∘ e2` for some self-homeomorphisms `h1` of
/// `s1` and `h2` of `s2`. False when either map is not an embedding.
pub fn equivalent_embeddings(e1: &FiniteMap, e2: &FiniteMap, s1: &TopSpace, s2: &TopSpace) -> Result<bool> {
    if !is_embedding(e1, s1, s2)? || !is_embedding(e2, s1, s2)? {
        return Ok(false);
    }
    let auts1 = homeomorphisms(s1, s1);
    let auts2 = homeomorphisms(s2, s2);
    for h1 in &auts1 {
        let left = h1.then(e1)?;
        for h2 in &auts2 {
            if left == e2.then(h2)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}
