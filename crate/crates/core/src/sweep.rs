//! Exhaustive regression of structural laws over every topology on a small
//! carrier (and every map between two such topologies).
//!
//! Set operators are taken from a [`Kernel`] so that a deliberately broken
//! operator can be swapped in and the sweep shown to catch it.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::carrier::{subsets_iter, Family, Partition, PointSet};
use crate::compactness::{hausdorff_compact_checks, is_compact, is_compact_set, is_locally_compact};
use crate::connectivity::{
    boundaryless_sets, component_count, components, connected_sets, has_connected_base, is_connected,
    is_locally_connected, is_locally_connected_at, is_totally_disconnected, two_block_partitions,
    PartitionKind,
};
use crate::constructors::{
    alexandroff, check_base_conditions, is_base_for, is_metrizable, metric_topology, product, quotient,
    subspace, topology_from_base, topology_from_subbase, MetricTable,
};
use crate::covers::{classify_cover, is_fundamental, is_refinement, locally_determined_sets, minimal_subcover};
use crate::enumeration::all_topologies;
use crate::error::{Error, Result};
use crate::maps::{
    check_map, find_homeomorphism, is_continuous, is_continuous_at, limits_at, restrict, FiniteMap,
};
use crate::operators::{self, isolated_set, limit_set, point_roles};
use crate::separation::{classify_pair, separation_report, t1_minimum};
use crate::space::{compare, minimal_open, neighborhoods, NeighborhoodKind, TopSpace};

/// Largest carrier for the full single-space sweep.
pub const MAX_SPACE_SWEEP: usize = 4;
/// Largest carrier for map-quantified laws.
pub const MAX_MAP_SWEEP: usize = 3;

/// Source of the four set operators used by the sweep.
pub trait Kernel: Sync {
    fn interior(&self, s: &TopSpace, a: PointSet) -> PointSet {
        operators::interior(s, a)
    }

    fn closure(&self, s: &TopSpace, a: PointSet) -> PointSet {
        operators::closure(s, a)
    }

    fn exterior(&self, s: &TopSpace, a: PointSet) -> PointSet {
        self.interior(s, a.complement())
    }

    fn boundary(&self, s: &TopSpace, a: PointSet) -> PointSet {
        self.closure(s, a) - self.interior(s, a)
    }
}

/// The library operators.
pub struct StandardKernel;

impl Kernel for StandardKernel {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    Space,
    Map,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremResult {
    pub id: &'static str,
    pub scope: Scope,
    pub instances: u64,
    pub violations: u64,
    pub passed: bool,
    /// First violating instance, in sweep order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepReport {
    pub n: usize,
    pub spaces: usize,
    pub maps_swept: bool,
    pub theorems: Vec<TheoremResult>,
}

impl SweepReport {
    pub fn all_passed(&self) -> bool {
        self.theorems.iter().all(|t| t.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &TheoremResult> {
        self.theorems.iter().filter(|t| !t.passed)
    }

    pub fn get(&self, id: &str) -> Option<&TheoremResult> {
        self.theorems.iter().find(|t| t.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

#[derive(Default)]
struct Recorder {
    results: Vec<TheoremResult>,
    index: HashMap<&'static str, usize>,
}

impl Recorder {
    fn slot(&mut self, id: &'static str, scope: Scope) -> &mut TheoremResult {
        let i = *self.index.entry(id).or_insert_with(|| {
            self.results.push(TheoremResult {
                id,
                scope,
                instances: 0,
                violations: 0,
                passed: true,
                counterexample: None,
            });
            self.results.len() - 1
        });
        &mut self.results[i]
    }

    fn check<F: FnOnce() -> Value>(&mut self, scope: Scope, id: &'static str, ok: bool, cex: F) {
        let r = self.slot(id, scope);
        r.instances += 1;
        if !ok {
            r.violations += 1;
            r.passed = false;
            if r.counterexample.is_none() {
                r.counterexample = Some(cex());
            }
        }
    }

    /// Folds `other` in after `self`; earlier counterexamples win.
    fn absorb(&mut self, other: Recorder) {
        for r in other.results {
            let mine = self.slot(r.id, r.scope);
            mine.instances += r.instances;
            mine.violations += r.violations;
            mine.passed &= r.passed;
            if mine.counterexample.is_none() {
                mine.counterexample = r.counterexample;
            }
        }
    }
}

fn js(s: &TopSpace) -> Value {
    json!({ "n": s.n(), "opens": s.opens().to_lists() })
}

fn jset(a: PointSet) -> Value {
    json!(a.to_vec())
}

fn jfam(f: &Family) -> Value {
    json!(f.to_lists())
}

fn jmap(f: &FiniteMap) -> Value {
    json!(f.table())
}

fn single(s: &TopSpace, p: usize) -> PointSet {
    s.set(&[p])
}

/// Families of at most `k` members drawn from `pool`, in index order.
fn small_families(n: usize, pool: &[PointSet], k: usize) -> Vec<Family> {
    fn go(n: usize, pool: &[PointSet], start: usize, k: usize, cur: &mut Vec<PointSet>, out: &mut Vec<Family>) {
        if !cur.is_empty() {
            out.push(Family::from_unsorted(n, cur.clone()));
        }
        if cur.len() == k {
            return;
        }
        for i in start..pool.len() {
            cur.push(pool[i]);
            go(n, pool, i + 1, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, pool, 0, k, &mut Vec::new(), &mut out);
    out
}

fn operator_laws(k: &dyn Kernel, s: &TopSpace, rec: &mut Recorder) {
    const S: Scope = Scope::Space;
    let x = s.carrier();
    for a in s.subsets() {
        let int = k.interior(s, a);
        let cl = k.closure(s, a);
        let ext = k.exterior(s, a);
        let fr = k.boundary(s, a);
        let cex = || json!({ "space": js(s), "set": jset(a) });
        rec.check(S, "interior-inside-set", int.is_subset(a), cex);
        rec.check(S, "interior-open", s.is_open(int), cex);
        rec.check(S, "interior-idempotent", k.interior(s, int) == int, cex);
        rec.check(S, "interior-largest-open", s.opens().iter().filter(|u| u.is_subset(a)).all(|u| u.is_subset(int)), cex);
        rec.check(S, "closure-contains-set", a.is_subset(cl), cex);
        rec.check(S, "closure-closed", s.is_closed(cl), cex);
        rec.check(S, "closure-idempotent", k.closure(s, cl) == cl, cex);
        rec.check(S, "closure-smallest-closed", s.closeds().iter().filter(|c| a.is_subset(*c)).all(|c| cl.is_subset(c)), cex);
        rec.check(S, "closure-interior-duality", cl == k.interior(s, a.complement()).complement(), cex);
        rec.check(S, "exterior-complement-of-closure", ext == cl.complement(), cex);
        rec.check(S, "boundary-two-closures", fr == cl & k.closure(s, a.complement()), cex);
        rec.check(S, "boundary-closed", s.is_closed(fr), cex);
        rec.check(S, "boundary-complement-symmetric", fr == k.boundary(s, a.complement()), cex);
        let fr2 = k.boundary(s, fr);
        rec.check(S, "boundary-cubed-equals-squared", k.boundary(s, fr2) == fr2, cex);
        rec.check(
            S,
            "interior-boundary-exterior-partition",
            (int | fr | ext) == x && !int.meets(fr) && !int.meets(ext) && !fr.meets(ext),
            cex,
        );
        rec.check(S, "closure-adds-limit-points", cl == a | limit_set(s, a), cex);
        let iso = isolated_set(s, a);
        rec.check(
            S,
            "points-isolated-or-limit",
            a.is_subset(iso | limit_set(s, a)) && !iso.meets(limit_set(s, a)),
            cex,
        );
        for p in 0..s.n() {
            let r = point_roles(s, a, p);
            let ok = r.interior == int.contains(p)
                && r.exterior == ext.contains(p)
                && r.boundary == fr.contains(p)
                && r.adherent == cl.contains(p)
                && r.limit == limit_set(s, a).contains(p)
                && r.isolated == iso.contains(p);
            rec.check(S, "point-roles-match-operators", ok, || json!({ "space": js(s), "set": jset(a), "point": p }));
        }
        let dense = cl == x;
        let meets_all = s.opens().iter().filter(|u| !u.is_empty()).all(|u| u.meets(a));
        rec.check(S, "dense-iff-meets-every-open", dense == meets_all, cex);
        let nowhere = k.interior(s, cl).is_empty();
        rec.check(S, "nowhere-dense-iff-exterior-dense", nowhere == (k.closure(s, ext) == x), cex);
        if s.is_open(a) {
            rec.check(S, "boundary-of-open-nowhere-dense", k.interior(s, k.closure(s, fr)).is_empty(), cex);
        }
        if s.is_open(a) || s.is_closed(a) {
            rec.check(S, "boundary-of-open-or-closed-has-empty-interior", k.interior(s, fr).is_empty(), cex);
        }
        rec.check(
            S,
            "boundary-of-closure-and-interior-has-empty-interior",
            k.interior(s, k.boundary(s, cl)).is_empty() && k.interior(s, k.boundary(s, int)).is_empty(),
            cex,
        );
        rec.check(S, "closure-is-interior-plus-boundary", cl == int | fr && cl == a | fr, cex);
        rec.check(S, "open-meeting-closure-meets-set", s.opens().iter().filter(|u| u.meets(cl)).all(|u| u.meets(a)), cex);
        for b in s.subsets() {
            let cex2 = || json!({ "space": js(s), "a": jset(a), "b": jset(b) });
            rec.check(S, "closure-of-union", k.closure(s, a | b) == cl | k.closure(s, b), cex2);
            rec.check(S, "interior-of-intersection", k.interior(s, a & b) == int & k.interior(s, b), cex2);
            rec.check(S, "exterior-of-union", k.exterior(s, a | b) == ext & k.exterior(s, b), cex2);
            if a.is_subset(b) {
                rec.check(S, "closure-monotone", cl.is_subset(k.closure(s, b)), cex2);
                rec.check(S, "interior-monotone", int.is_subset(k.interior(s, b)), cex2);
                rec.check(S, "exterior-antitone", k.exterior(s, b).is_subset(ext), cex2);
            }
        }
    }
}

fn connectivity_laws(k: &dyn Kernel, s: &TopSpace, all: &[TopSpace], rec: &mut Recorder) {
    const S: Scope = Scope::Space;
    let x = s.carrier();
    let conn = is_connected(s);
    let cex = || json!({ "space": js(s) });
    let open_split = !two_block_partitions(s, PartitionKind::Open).is_empty();
    let closed_split = !two_block_partitions(s, PartitionKind::Closed).is_empty();
    let free_split = !two_block_partitions(s, PartitionKind::NonAttached).is_empty();
    let boundaryless = boundaryless_sets(s);
    let trivial = Family::from_unsorted(s.n(), vec![s.empty_set(), x]);
    rec.check(
        S,
        "connectedness-equivalences",
        conn != open_split && conn != closed_split && conn != free_split && (conn == (boundaryless == trivial)),
        cex,
    );
    let empty_boundary_by_kernel = s.subsets().filter(|&a| k.boundary(s, a).is_empty()).count();
    rec.check(S, "boundaryless-sets-clopen", empty_boundary_by_kernel == boundaryless.len(), cex);

    let connected = connected_sets(s);
    rec.check(S, "empty-and-singletons-connected", connected.contains(s.empty_set()) && (0..s.n()).all(|p| connected.contains(single(s, p))), cex);
    for a in s.subsets() {
        // a set is disconnected when two open sets split it
        let split = s.opens().iter().any(|u| {
            s.opens().iter().any(|v| a.is_subset(u | v) && !(a & u).is_empty() && !(a & v).is_empty() && (a & u & v).is_empty())
        });
        rec.check(S, "connected-set-via-open-split", connected.contains(a) != split, || json!({ "space": js(s), "set": jset(a) }));
    }
    for a in connected.iter() {
        let cl = k.closure(s, a);
        let between_ok = (cl - a).subsets().all(|extra| connected.contains(a | extra));
        rec.check(S, "sets-between-connected-and-closure", between_ok, || json!({ "space": js(s), "set": jset(a) }));
        for b in connected.iter() {
            if a.meets(k.closure(s, b)) {
                rec.check(S, "union-of-attached-connected", connected.contains(a | b), || json!({ "space": js(s), "a": jset(a), "b": jset(b) }));
            }
            if a.meets(b) {
                rec.check(S, "union-of-meeting-connected", connected.contains(a | b), || json!({ "space": js(s), "a": jset(a), "b": jset(b) }));
            }
        }
        for b in connected.iter().filter(|b| b.meets(a)) {
            for c in connected.iter().filter(|c| c.meets(a) && c.meets(b)) {
                rec.check(S, "union-of-pairwise-meeting-connected", connected.contains(a | b | c), || {
                    json!({ "space": js(s), "family": [jset(a), jset(b), jset(c)] })
                });
            }
        }
        for (u, v) in two_block_partitions(s, PartitionKind::Open) {
            rec.check(S, "connected-inside-one-part", a.is_subset(u) || a.is_subset(v), || json!({ "space": js(s), "set": jset(a), "parts": [jset(u), jset(v)] }));
        }
    }
    let comps = components(s);
    let blocks = comps.blocks.blocks();
    let partition_ok = Partition::new(s.n(), blocks.iter().copied()).is_ok();
    rec.check(
        S,
        "components-closed-connected-partition",
        partition_ok && blocks.iter().all(|&b| k.closure(s, b) == b && connected.contains(b)),
        cex,
    );
    rec.check(S, "component-count-by-specialization", component_count(s) == comps.len(), cex);
    let maximal = connected.iter().filter(|&c| !c.is_empty() && connected.iter().all(|d| !c.is_subset(d) || c == d)).count();
    rec.check(S, "components-are-maximal-connected", maximal == comps.len(), cex);

    let lc = is_locally_connected(s);
    let pointwise = (0..s.n()).all(|p| is_locally_connected_at(s, p));
    rec.check(S, "locally-connected-equivalences", lc == has_connected_base(s) && lc == pointwise, cex);
    if s.is_discrete() {
        rec.check(S, "discrete-totally-disconnected", is_totally_disconnected(s), cex);
    }
    if conn {
        for t in all.iter().filter(|t| t.opens().is_subfamily(s.opens())) {
            rec.check(S, "coarsening-keeps-connected", is_connected(t), || json!({ "space": js(s), "coarser": js(t) }));
        }
        for p in partitions(s.n()) {
            let (q, _) = quotient(s, &p).unwrap();
            rec.check(S, "quotient-of-connected", is_connected(&q), || json!({ "space": js(s), "partition": jfam(&p.as_family()) }));
        }
    }
}

/// Every partition of an `n`-point carrier.
fn partitions(n: usize) -> Vec<Partition> {
    fn go(p: usize, n: usize, labels: &mut Vec<usize>, next: usize, out: &mut Vec<Partition>) {
        if p == n {
            out.push(Partition::from_labels(labels).unwrap());
            return;
        }
        for l in 0..=next {
            labels.push(l);
            go(p + 1, n, labels, next.max(l + 1), out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), 0, &mut out);
    out
}

fn separation_laws(k: &dyn Kernel, s: &TopSpace, rec: &mut Recorder) {
    const S: Scope = Scope::Space;
    let cex = || json!({ "space": js(s) });
    let r = separation_report(s);
    for p in 0..s.n() {
        for q in 0..s.n() {
            let c = classify_pair(s, p, q).unwrap();
            let ok = (!c.separated || c.distinguishable)
                && (!c.distinguishable || c.partially_distinguishable)
                && c.partially_distinguishable != c.indistinguishable
                && (p != q || c.indistinguishable);
            rec.check(S, "pair-relation-hierarchy", ok, || json!({ "space": js(s), "p": p, "q": q }));
        }
    }
    rec.check(S, "separation-ladder", (!r.t2 || r.t1) && (!r.t1 || r.t0) && r.regular == (r.t2 && r.t3) && r.normal == (r.t2 && r.t4), cex);
    let closures: Vec<PointSet> = (0..s.n()).map(|p| k.closure(s, single(s, p))).collect();
    let injective = (0..s.n()).all(|p| (0..p).all(|q| closures[p] != closures[q]));
    rec.check(S, "t0-iff-point-closures-distinct", r.t0 == injective, cex);
    let singletons_closed = (0..s.n()).all(|p| closures[p] == single(s, p));
    rec.check(S, "t1-iff-singletons-closed", r.t1 == singletons_closed, cex);
    rec.check(S, "finite-t1-iff-discrete", r.t1 == s.is_discrete() && r.t2 == r.t1, cex);
    let shrink = (0..s.n()).all(|p| {
        s.opens().iter().filter(|u| u.contains(p)).all(|u| s.opens().iter().filter(|v| v.contains(p)).any(|v| k.closure(s, v).is_subset(u)))
    });
    rec.check(S, "t3-iff-neighbourhoods-shrink", r.t3 == shrink, cex);
    let shrink4 = s.closeds().iter().all(|a| {
        s.opens().iter().filter(|u| a.is_subset(*u)).all(|u| s.opens().iter().filter(|v| a.is_subset(*v)).any(|v| k.closure(s, v).is_subset(u)))
    });
    rec.check(S, "t4-iff-closed-neighbourhoods-shrink", r.t4 == shrink4, cex);
    for y in s.subsets() {
        let (sub, _) = subspace(s, y).unwrap();
        let rs = separation_report(&sub);
        let cex = || json!({ "space": js(s), "subset": jset(y) });
        if r.t1 {
            rec.check(S, "t1-hereditary", rs.t1, cex);
        }
        if r.t3 {
            rec.check(S, "t3-hereditary", rs.t3, cex);
        }
        if r.normal && s.is_closed(y) {
            rec.check(S, "closed-subspace-of-normal-normal", rs.normal, cex);
        }
    }
}

fn space_laws(s: &TopSpace, all: &[TopSpace], rec: &mut Recorder) {
    const S: Scope = Scope::Space;
    let cex = || json!({ "space": js(s) });
    let back = Family::from_unsorted(s.n(), s.closeds().iter().map(PointSet::complement).collect());
    rec.check(S, "closed-complements-are-opens", &back == s.opens(), cex);
    let mut every_set_is_intersection = true;
    for a in s.subsets() {
        let meet = neighborhoods(s, a, NeighborhoodKind::Open).intersection().unwrap();
        rec.check(S, "set-inside-its-neighbourhoods", a.is_subset(meet), || json!({ "space": js(s), "set": jset(a) }));
        every_set_is_intersection &= meet == a;
    }
    rec.check(S, "t1-iff-sets-are-neighbourhood-intersections", every_set_is_intersection == separation_report(s).t1, cex);
    for p in 0..s.n() {
        let m = minimal_open(s, p).unwrap();
        let least = s.opens().iter().filter(|u| u.contains(p)).all(|u| m.is_subset(u));
        rec.check(S, "minimal-open-is-least-neighbourhood", s.is_open(m) && m.contains(p) && least, || json!({ "space": js(s), "point": p }));
    }
    for t in all {
        if compare(s, t).unwrap().is_finer() {
            rec.check(S, "finer-topology-has-more-closed-sets", t.closeds().is_subfamily(s.closeds()), || json!({ "finer": js(s), "coarser": js(t) }));
        }
    }
}

fn compactness_laws(s: &TopSpace, rec: &mut Recorder) {
    const S: Scope = Scope::Space;
    let cex = || json!({ "space": js(s) });
    rec.check(S, "finite-space-compact", is_compact(s) && is_locally_compact(s), cex);
    // indexed by bitmask; every subset is checked once
    let table: Vec<bool> = s.subsets().map(|a| is_compact_set(s, a)).collect();
    let is_cpt = |a: PointSet| table[a.bits() as usize];
    let compact: Vec<PointSet> = s.subsets().filter(|&a| is_cpt(a)).collect();
    for a in s.subsets() {
        let (sub, _) = subspace(s, a).unwrap();
        let cex = || json!({ "space": js(s), "set": jset(a) });
        rec.check(S, "compact-set-iff-compact-subspace", is_cpt(a) == is_compact(&sub), cex);
        if s.is_closed(a) {
            rec.check(S, "closed-subset-of-compact-compact", is_cpt(a), cex);
        }
    }
    for &a in &compact {
        for &b in &compact {
            let cex = || json!({ "space": js(s), "a": jset(a), "b": jset(b) });
            rec.check(S, "union-of-compacts-compact", is_cpt(a | b), cex);
            if s.is_closed(a) && s.is_closed(b) {
                rec.check(S, "intersection-of-closed-compacts-compact", is_cpt(a & b), cex);
            }
        }
    }
    if separation_report(s).t2 {
        rec.check(S, "hausdorff-compact-sets-closed", compact.iter().all(|&a| s.is_closed(a)), cex);
        let separated = compact.iter().all(|&a| {
            compact.iter().filter(|&&b| !a.is_empty() && !b.is_empty() && !a.meets(b)).all(|&b| {
                s.opens().iter().any(|u| a.is_subset(u) && s.opens().iter().any(|v| b.is_subset(v) && !u.meets(v)))
            })
        });
        rec.check(S, "hausdorff-disjoint-compacts-separated", separated, cex);
        for &a in &compact {
            for &b in &compact {
                rec.check(S, "hausdorff-intersection-of-compacts-compact", is_cpt(a & b), || json!({ "space": js(s), "a": jset(a), "b": jset(b) }));
            }
        }
    }
}

fn constructor_laws(s: &TopSpace, rec: &mut Recorder) {
    const S: Scope = Scope::Space;
    let cex = || json!({ "space": js(s) });
    match alexandroff(s) {
        Ok(a) => {
            let (back, _) = subspace(&a, a.set(&s.carrier().to_vec())).unwrap();
            rec.check(S, "alexandroff-compact", is_compact(&a), || json!({ "space": js(s), "extension": js(&a) }));
            rec.check(S, "alexandroff-restores-space", back.opens() == s.opens(), || json!({ "space": js(s), "extension": js(&a) }));
        }
        Err(e) => rec.check(S, "alexandroff-compact", false, || json!({ "space": js(s), "error": e.to_string() })),
    }
    let min_base = Family::new(s.n(), s.min_opens().iter().copied()).unwrap();
    rec.check(S, "minimal-opens-form-base", is_base_for(s, &min_base), cex);
    rec.check(S, "opens-form-base-for-themselves", is_base_for(s, s.opens()), cex);
    let from_base = topology_from_base(s.n(), &min_base);
    rec.check(S, "base-generates-space", from_base.as_ref().ok() == Some(s), cex);
    let nonempty = s.opens().filter(|u| !u.is_empty());
    rec.check(S, "subbase-of-opens-regenerates", topology_from_subbase(s.n(), &nonempty).as_ref().ok() == Some(s) || s.n() == 0, cex);
    rec.check(S, "metrizable-iff-discrete", is_metrizable(s) == (s.is_discrete() || s.n() == 0), cex);
    let (prod, enc) = product(s, &crate::space::one_point()).unwrap();
    rec.check(S, "product-with-point-homeomorphic", find_homeomorphism(&prod, s).is_some(), cex);
    let p1 = enc.first_projection();
    rec.check(S, "product-projection-continuous", is_continuous(&p1, &prod, s).unwrap(), cex);
    let (q, _) = quotient(s, &Partition::singletons(s.n())).unwrap();
    rec.check(S, "quotient-by-singletons-homeomorphic", find_homeomorphism(&q, s).is_some(), cex);
    for y in s.subsets() {
        let (sy, inc) = subspace(s, y).unwrap();
        rec.check(S, "subspace-inclusion-is-embedding", check_map(&inc, &sy, s).unwrap().embedding, || json!({ "space": js(s), "subset": jset(y) }));
        let base_y = Family::from_unsorted(y.len(), min_base.iter().map(|b| b.compress(y)).collect());
        rec.check(S, "subspace-inherits-base", is_base_for(&sy, &base_y), || json!({ "space": js(s), "subset": jset(y) }));
        for y2 in y.subsets() {
            let (direct, _) = subspace(s, y2).unwrap();
            let (nested, _) = subspace(&sy, y2.compress(y)).unwrap();
            rec.check(S, "subspace-transitivity", direct == nested, || json!({ "space": js(s), "outer": jset(y), "inner": jset(y2) }));
        }
        for v in sy.opens().iter() {
            if s.is_open(y) {
                rec.check(S, "open-in-open-subspace-open", s.is_open(v.expand(y)), || json!({ "space": js(s), "subspace": jset(y), "set": jset(v.expand(y)) }));
            }
        }
        for c in sy.closeds().iter() {
            if s.is_closed(y) {
                rec.check(S, "closed-in-closed-subspace-closed", s.is_closed(c.expand(y)), || json!({ "space": js(s), "subspace": jset(y), "set": jset(c.expand(y)) }));
            }
        }
    }
    let flagged = check_base_conditions(s.n(), s.opens()).unwrap();
    rec.check(S, "topology-is-a-base", flagged.is_none(), cex);
}

/// Least topology containing `b`, by scanning the enumeration.
fn least_containing<'a>(all: &'a [TopSpace], b: &Family) -> Option<&'a TopSpace> {
    let containing: Vec<&TopSpace> = all.iter().filter(|t| b.is_subfamily(t.opens())).collect();
    containing.iter().copied().find(|t| containing.iter().all(|u| t.opens().is_subfamily(u.opens())))
}

fn base_laws(s: &TopSpace, all: &[TopSpace], rec: &mut Recorder) {
    const S: Scope = Scope::Space;
    let pool: Vec<PointSet> = s.opens().iter().collect();
    for b in small_families(s.n(), &pool, 3) {
        if check_base_conditions(s.n(), &b).unwrap().is_some() {
            continue;
        }
        let t = topology_from_base(s.n(), &b).unwrap();
        rec.check(S, "generated-topology-is-least", least_containing(all, &b) == Some(&t), || json!({ "base": jfam(&b) }));
    }
}

fn cover_laws(s: &TopSpace, rec: &mut Recorder) {
    const S: Scope = Scope::Space;
    let x = s.carrier();
    let pool: Vec<PointSet> = subsets_iter(s.n()).expect("sweep carriers are small").collect();
    let covers: Vec<Family> = small_families(s.n(), &pool, 3).into_iter().filter(|c| c.union() == x).collect();
    let fundamental: Vec<bool> = covers.iter().map(|c| is_fundamental(s, c)).collect();
    for (c, &fund) in covers.iter().zip(&fundamental) {
        let r = classify_cover(s, c, x).unwrap();
        let cex = || json!({ "space": js(s), "cover": jfam(c) });
        rec.check(S, "cover-report-consistent", r.fundamental == Some(fund) && r.is_cover && r.locally_finite, cex);
        if r.open_cover {
            rec.check(S, "open-cover-fundamental", fund, cex);
        }
        if r.closed_cover {
            rec.check(S, "finite-closed-cover-fundamental", fund, cex);
            if r.locally_finite {
                rec.check(S, "locally-finite-closed-cover-fundamental", fund, cex);
            }
        }
        let open_sets = locally_determined_sets(s, c, false);
        rec.check(S, "fundamental-iff-local-opens-equal-topology", fund == (&open_sets == s.opens()), cex);
        let closed_sets = locally_determined_sets(s, c, true);
        rec.check(S, "fundamental-iff-local-closeds-equal-closeds", fund == (&closed_sets == s.closeds()), cex);
        // each point has a neighbourhood V with {V ∩ U : U ∈ C} fundamental
        let literal = (0..s.n()).all(|p| {
            s.opens().iter().filter(|v| v.contains(p)).any(|v| {
                let traces = Family::from_unsorted(s.n(), c.iter().map(|u| v & u).collect());
                is_fundamental(s, &traces)
            })
        });
        if literal {
            rec.check(S, "local-fundamental-criterion", fund, cex);
        }
        let in_subspace = (0..s.n()).all(|p| {
            s.opens().iter().filter(|v| v.contains(p)).any(|v| {
                let (sv, _) = subspace(s, v).unwrap();
                let traces = Family::from_unsorted(v.len(), c.iter().map(|u| (v & u).compress(v)).collect());
                is_fundamental(&sv, &traces)
            })
        });
        if in_subspace {
            rec.check(S, "local-fundamental-criterion-in-subspace", fund, cex);
        }
        let m = minimal_subcover(s, c, x).unwrap();
        let smaller = small_families(s.n(), c.members(), m.len().saturating_sub(1)).iter().any(|f| f.union() == x && f.len() < m.len());
        rec.check(S, "minimal-subcover-optimal", m.is_subfamily(c) && m.union() == x && !smaller, cex);
    }
    for (i, r) in covers.iter().enumerate() {
        if !fundamental[i] {
            continue;
        }
        for (j, c) in covers.iter().enumerate() {
            if is_refinement(r, c, s) {
                rec.check(S, "coarsening-of-fundamental-fundamental", fundamental[j], || json!({ "space": js(s), "refinement": jfam(r), "cover": jfam(c) }));
            }
        }
    }
}

/// A random metric on `n` points: random positive weights closed under shortest paths.
pub fn random_metric(n: usize, rng: &mut ChaCha8Rng) -> MetricTable {
    let mut d = vec![vec![0u64; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let w = rng.random_range(1..=9);
            d[i][j] = w;
            d[j][i] = w;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    MetricTable::new(d).expect("shortest-path closure is a metric")
}

fn carrier_laws(n: usize, all: &[TopSpace], rec: &mut Recorder) {
    const S: Scope = Scope::Space;
    let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
    for _ in 0..25 {
        let m = random_metric(n, &mut rng);
        let t = metric_topology(&m).unwrap();
        rec.check(S, "metric-topology-discrete", t.is_discrete(), || json!({ "metric": m.rows() }));
    }
    if n <= 3 {
        let d = crate::space::discrete(n).unwrap();
        rec.check(S, "coarsest-t1-is-discrete", t1_minimum(n).ok() == Some(d), || json!({ "n": n }));
    }
    for s in all {
        let canon = crate::enumeration::canonical_form(s);
        rec.check(S, "canonical-form-homeomorphic", find_homeomorphism(s, &canon).is_some(), || json!({ "space": js(s) }));
    }
}

/// Single-space laws over every topology on `n` points.
pub fn sweep_spaces(n: usize, k: &dyn Kernel) -> Result<SweepReport> {
    if n > MAX_SPACE_SWEEP {
        return Err(Error::CarrierTooLarge { n, cap: MAX_SPACE_SWEEP });
    }
    let all = all_topologies(n)?;
    let recs: Vec<Recorder> = all
        .par_iter()
        .map(|s| {
            let mut rec = Recorder::default();
            operator_laws(k, s, &mut rec);
            connectivity_laws(k, s, &all, &mut rec);
            separation_laws(k, s, &mut rec);
            space_laws(s, &all, &mut rec);
            compactness_laws(s, &mut rec);
            constructor_laws(s, &mut rec);
            if n <= 3 {
                base_laws(s, &all, &mut rec);
                cover_laws(s, &mut rec);
            }
            rec
        })
        .collect();
    let mut rec = Recorder::default();
    for r in recs {
        rec.absorb(r);
    }
    carrier_laws(n, &all, &mut rec);
    Ok(SweepReport { n, spaces: all.len(), maps_swept: false, theorems: rec.results })
}

/// Operator identities only, over every topology on `n` points.
pub fn sweep_operators(n: usize, k: &dyn Kernel) -> Result<SweepReport> {
    let all = all_topologies(n)?;
    let mut rec = Recorder::default();
    let recs: Vec<Recorder> = all
        .par_iter()
        .map(|s| {
            let mut r = Recorder::default();
            operator_laws(k, s, &mut r);
            r
        })
        .collect();
    for r in recs {
        rec.absorb(r);
    }
    Ok(SweepReport { n, spaces: all.len(), maps_swept: false, theorems: rec.results })
}

/// Per-space data reused across every map out of or into the space.
struct Prepared {
    space: TopSpace,
    subsets: Vec<PointSet>,
    connected: Family,
    compact: Vec<PointSet>,
    t1: bool,
    t2: bool,
    base: Family,
    /// Every base of the topology.
    bases: Vec<Family>,
    /// Fundamental open covers of size at most 3, with member subspaces.
    open_covers: Vec<(Family, Vec<(PointSet, TopSpace)>)>,
    /// Fundamental closed covers of size at most 2, with member subspaces.
    closed_covers: Vec<(Family, Vec<(PointSet, TopSpace)>)>,
    subspaces: Vec<TopSpace>,
    self_continuous: Vec<FiniteMap>,
}

fn fundamental_covers(s: &TopSpace, pool: &[PointSet], k: usize) -> Vec<(Family, Vec<(PointSet, TopSpace)>)> {
    small_families(s.n(), pool, k)
        .into_iter()
        .filter(|c| c.union().is_full() && is_fundamental(s, c))
        .map(|c| {
            let pieces = c.iter().map(|m| (m, subspace(s, m).unwrap().0)).collect();
            (c, pieces)
        })
        .collect()
}

fn all_bases(s: &TopSpace) -> Vec<Family> {
    let opens = s.opens().members();
    (0u32..1 << opens.len())
        .map(|mask| Family::from_sorted(s.n(), opens.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &u)| u).collect()))
        .filter(|b| is_base_for(s, b))
        .collect()
}

fn prepare(s: &TopSpace) -> Prepared {
    let r = separation_report(s);
    let opens: Vec<PointSet> = s.opens().iter().collect();
    let closeds: Vec<PointSet> = s.closeds().iter().collect();
    Prepared {
        space: s.clone(),
        subsets: s.subsets().collect(),
        connected: connected_sets(s),
        compact: s.subsets().filter(|&a| is_compact_set(s, a)).collect(),
        t1: r.t1,
        t2: r.t2,
        base: Family::new(s.n(), s.min_opens().iter().copied()).unwrap(),
        bases: all_bases(s),
        open_covers: fundamental_covers(s, &opens, 3),
        closed_covers: fundamental_covers(s, &closeds, 2),
        subspaces: s.subsets().map(|a| subspace(s, a).unwrap().0).collect(),
        self_continuous: FiniteMap::all(s.n(), s.n()).filter(|f| is_continuous(f, s, s).unwrap()).collect(),
    }
}

fn pieces_continuous(f: &FiniteMap, pieces: &[(PointSet, TopSpace)], s2: &TopSpace) -> bool {
    pieces.iter().all(|(m, sub)| is_continuous(&restrict(f, *m).unwrap(), sub, s2).unwrap())
}

fn map_laws(k: &dyn Kernel, p1: &Prepared, p2: &Prepared, f: &FiniteMap, rec: &mut Recorder) {
    const M: Scope = Scope::Map;
    let (s1, s2) = (&p1.space, &p2.space);
    let cex = || json!({ "domain": js(s1), "codomain": js(s2), "map": jmap(f) });
    let r = check_map(f, s1, s2).unwrap();

    let c_open = r.continuous;
    let c_closed = s2.closeds().iter().all(|c| s1.is_closed(f.preimage(c)));
    let c_cl_pre = p2.subsets.iter().all(|&b| k.closure(s1, f.preimage(b)).is_subset(f.preimage(k.closure(s2, b))));
    let c_cl_img = p1.subsets.iter().all(|&a| f.image(k.closure(s1, a)).is_subset(k.closure(s2, f.image(a))));
    let c_int = p2.subsets.iter().all(|&b| f.preimage(k.interior(s2, b)).is_subset(k.interior(s1, f.preimage(b))));
    rec.check(M, "continuity-equivalences", c_open == c_closed && c_open == c_cl_pre && c_open == c_cl_img && c_open == c_int, cex);
    let local = (0..s1.n()).all(|p| is_continuous_at(f, s1, s2, p).unwrap());
    rec.check(M, "continuity-iff-continuous-at-every-point", c_open == local, cex);
    let by_base = p2.base.iter().all(|b| s1.is_open(f.preimage(b)));
    rec.check(M, "continuity-via-base-preimages", c_open == by_base, cex);
    let every_base = p2.bases.iter().all(|base| base.iter().all(|b| s1.is_open(f.preimage(b))) == c_open);
    rec.check(M, "continuity-via-any-base", every_base, cex);

    let open_by_int = p1.subsets.iter().all(|&a| f.image(k.interior(s1, a)).is_subset(k.interior(s2, f.image(a))));
    rec.check(M, "open-map-iff-interior-images", r.open_map == open_by_int, cex);
    let closed_by_cl = p1.subsets.iter().all(|&a| k.closure(s2, f.image(a)).is_subset(f.image(k.closure(s1, a))));
    rec.check(M, "closed-map-iff-closure-images", r.closed_map == closed_by_cl, cex);
    let bij = r.injective && r.surjective;
    rec.check(
        M,
        "homeomorphism-characterizations",
        r.homeomorphism == (bij && r.continuous && r.open_map) && r.homeomorphism == (bij && r.continuous && r.closed_map),
        cex,
    );
    if r.homeomorphism {
        let transport = p1.subsets.iter().all(|&a| {
            f.image(k.closure(s1, a)) == k.closure(s2, f.image(a))
                && f.image(k.interior(s1, a)) == k.interior(s2, f.image(a))
                && f.image(k.boundary(s1, a)) == k.boundary(s2, f.image(a))
        }) && Family::from_unsorted(s2.n(), s1.opens().iter().map(|u| f.image(u)).collect()) == *s2.opens();
        rec.check(M, "homeomorphism-transports-structure", transport, cex);
        for g in p2.self_continuous.iter().filter(|g| g.is_bijective()) {
            let both = check_map(g, s2, s2).unwrap().homeomorphism;
            if both {
                rec.check(M, "composition-of-homeomorphisms", check_map(&f.then(g).unwrap(), s1, s2).unwrap().homeomorphism, || {
                    json!({ "domain": js(s1), "codomain": js(s2), "map": jmap(f), "after": jmap(g) })
                });
            }
        }
        let inv = f.inverse().unwrap();
        rec.check(M, "inverse-homeomorphism", check_map(&inv, s2, s1).unwrap().homeomorphism, cex);
        rec.check(
            M,
            "homeomorphism-invariants",
            component_count(s1) == component_count(s2)
                && is_connected(s1) == is_connected(s2)
                && is_compact(s1) == is_compact(s2)
                && separation_report(s1) == separation_report(s2),
            cex,
        );
    }
    if r.continuous {
        for a in p1.connected.iter() {
            rec.check(M, "image-of-connected-connected", p2.connected.contains(f.image(a)), || json!({ "domain": js(s1), "codomain": js(s2), "map": jmap(f), "set": jset(a) }));
        }
        for &a in &p1.compact {
            rec.check(M, "image-of-compact-compact", p2.compact.contains(&f.image(a)), || json!({ "domain": js(s1), "codomain": js(s2), "map": jmap(f), "set": jset(a) }));
        }
        if r.surjective {
            for &a in &p1.subsets {
                if k.closure(s1, a).is_full() {
                    rec.check(M, "image-of-dense-dense", k.closure(s2, f.image(a)).is_full(), || json!({ "domain": js(s1), "codomain": js(s2), "map": jmap(f), "set": jset(a) }));
                }
            }
        }
        for (i, &a) in p1.subsets.iter().enumerate() {
            let g = restrict(f, a).unwrap();
            rec.check(M, "restriction-continuous", is_continuous(&g, &p1.subspaces[i], s2).unwrap(), || json!({ "domain": js(s1), "codomain": js(s2), "map": jmap(f), "set": jset(a) }));
        }
        for g in &p2.self_continuous {
            rec.check(M, "composition-continuous", is_continuous(&f.then(g).unwrap(), s1, s2).unwrap(), || json!({ "domain": js(s1), "codomain": js(s2), "map": jmap(f), "after": jmap(g) }));
        }
        if r.injective && p2.t1 {
            rec.check(M, "injective-into-t1-forces-t1", p1.t1, cex);
        }
        if s1.is_indiscrete() && p2.t1 && s1.n() > 0 {
            rec.check(M, "indiscrete-into-t1-constant", f.image(s1.carrier()).len() == 1, cex);
        }
    }
    for (c, pieces) in &p1.open_covers {
        rec.check(M, "pasting-open-cover", !pieces_continuous(f, pieces, s2) || r.continuous, || json!({ "domain": js(s1), "codomain": js(s2), "map": jmap(f), "cover": jfam(c) }));
    }
    for (c, pieces) in &p1.closed_covers {
        rec.check(M, "pasting-closed-cover", !pieces_continuous(f, pieces, s2) || r.continuous, || json!({ "domain": js(s1), "codomain": js(s2), "map": jmap(f), "cover": jfam(c) }));
    }
    if p2.t2 {
        let h = hausdorff_compact_checks(s1, s2, f).unwrap();
        rec.check(
            M,
            "compact-to-hausdorff-maps",
            h.continuous_is_closed && h.continuous_bijection_is_homeomorphism && h.continuous_injection_is_embedding,
            cex,
        );
        for &a in &p1.subsets {
            let g = restrict(f, a).unwrap();
            for p in limit_set(s1, a).points() {
                let lim = limits_at(&g, s1, a, s2, p).unwrap();
                rec.check(M, "hausdorff-limits-unique", lim.len() <= 1, || json!({ "domain": js(s1), "codomain": js(s2), "map": jmap(f), "set": jset(a), "point": p }));
            }
        }
    }
}

fn pair_laws(p1: &Prepared, p2: &Prepared, rec: &mut Recorder) {
    const M: Scope = Scope::Map;
    let (s1, s2) = (&p1.space, &p2.space);
    let cex = || json!({ "left": js(s1), "right": js(s2) });
    let h12 = find_homeomorphism(s1, s2);
    let h21 = find_homeomorphism(s2, s1);
    rec.check(M, "homeomorphic-symmetric", h12.is_some() == h21.is_some(), cex);
    if let Some(h) = &h12 {
        rec.check(M, "homeomorphism-witness-valid", check_map(h, s1, s2).unwrap().homeomorphism, cex);
    }
    let brute = FiniteMap::all(s1.n(), s2.n()).any(|f| check_map(&f, s1, s2).unwrap().homeomorphism);
    rec.check(M, "homeomorphism-search-complete", brute == h12.is_some(), cex);
    if let Ok((prod, enc)) = product(s1, s2) {
        let pr1 = enc.first_projection();
        let pr2 = enc.second_projection();
        let projections = is_continuous(&pr1, &prod, s1).unwrap() && is_continuous(&pr2, &prod, s2).unwrap();
        rec.check(M, "product-projections-continuous", projections, cex);
        if is_connected(s1) && is_connected(s2) {
            rec.check(M, "product-of-connected-connected", is_connected(&prod), cex);
        }
        rec.check(M, "product-of-compact-compact", is_compact(&prod), cex);
        if s1.n() * s2.n() <= 4 {
            // the product is the coarsest topology making both projections continuous
            let coarser_ok = all_topologies(prod.n()).unwrap().iter().all(|t| {
                let both = is_continuous(&pr1, t, s1).unwrap() && is_continuous(&pr2, t, s2).unwrap();
                !both || prod.opens().is_subfamily(t.opens())
            });
            rec.check(M, "product-coarsest-with-continuous-projections", coarser_ok, cex);
        }
        for f in FiniteMap::all(s2.n(), prod.n()) {
            let via = is_continuous(&f.then(&pr1).unwrap(), s2, s1).unwrap() && is_continuous(&f.then(&pr2).unwrap(), s2, s2).unwrap();
            rec.check(M, "map-into-product-continuity", via == is_continuous(&f, s2, &prod).unwrap(), || json!({ "left": js(s1), "right": js(s2), "map": jmap(&f) }));
        }
    }
}

fn quotient_laws(p: &Prepared, rec: &mut Recorder) {
    const M: Scope = Scope::Map;
    let s = &p.space;
    for part in partitions(s.n()) {
        let (q, proj) = quotient(s, &part).unwrap();
        let cex = || json!({ "space": js(s), "partition": jfam(&part.as_family()) });
        rec.check(M, "quotient-projection-continuous", is_continuous(&proj, s, &q).unwrap(), cex);
        let finest = all_topologies(q.n())
            .unwrap()
            .iter()
            .filter(|t| is_continuous(&proj, s, t).unwrap())
            .all(|t| t.opens().is_subfamily(q.opens()));
        rec.check(M, "quotient-finest-with-continuous-projection", finest, cex);
        rec.check(M, "quotient-of-compact-compact", is_compact(&q), cex);
    }
}

fn equivalence_laws(prepared: &[Prepared], rec: &mut Recorder) {
    const M: Scope = Scope::Map;
    let n = prepared.len();
    let rel: Vec<Vec<bool>> = prepared
        .par_iter()
        .map(|a| prepared.iter().map(|b| find_homeomorphism(&a.space, &b.space).is_some()).collect())
        .collect();
    for i in 0..n {
        rec.check(M, "homeomorphic-reflexive", rel[i][i], || json!({ "space": js(&prepared[i].space) }));
        for j in 0..n {
            if !rel[i][j] {
                continue;
            }
            for l in 0..n {
                if rel[j][l] {
                    rec.check(M, "homeomorphic-transitive", rel[i][l], || {
                        json!({ "a": js(&prepared[i].space), "b": js(&prepared[j].space), "c": js(&prepared[l].space) })
                    });
                }
            }
        }
    }
}

/// Map-quantified laws over every ordered pair of topologies on `n ≤ 3` points
/// and every map between them.
pub fn sweep_maps(n: usize, k: &dyn Kernel) -> Result<SweepReport> {
    if n > MAX_MAP_SWEEP {
        return Err(Error::CarrierTooLarge { n, cap: MAX_MAP_SWEEP });
    }
    let all = all_topologies(n)?;
    let prepared: Vec<Prepared> = all.par_iter().map(prepare).collect();
    let recs: Vec<Recorder> = prepared
        .par_iter()
        .map(|p1| {
            let mut rec = Recorder::default();
            for p2 in &prepared {
                for f in FiniteMap::all(n, n) {
                    map_laws(k, p1, p2, &f, &mut rec);
                }
                pair_laws(p1, p2, &mut rec);
            }
            quotient_laws(p1, &mut rec);
            rec
        })
        .collect();
    let mut rec = Recorder::default();
    for r in recs {
        rec.absorb(r);
    }
    equivalence_laws(&prepared, &mut rec);
    Ok(SweepReport { n, spaces: all.len(), maps_swept: true, theorems: rec.results })
}

/// Single-space laws for `n ≤ 4`, plus map-quantified laws when `n ≤ 3`.
pub fn sweep_theorems_with(n: usize, k: &dyn Kernel) -> Result<SweepReport> {
    if n > MAX_SPACE_SWEEP {
        return Err(Error::CarrierTooLarge { n, cap: MAX_SPACE_SWEEP });
    }
    let mut report = sweep_spaces(n, k)?;
    if n <= MAX_MAP_SWEEP {
        let maps = sweep_maps(n, k)?;
        report.theorems.extend(maps.theorems);
        report.maps_swept = true;
    }
    Ok(report)
}

pub fn sweep_theorems(n: usize) -> Result<SweepReport> {
    sweep_theorems_with(n, &StandardKernel)
}

#[cfg(test)]
mod tests {
    use super::*;

    struct ShrunkClosure;

    impl Kernel for ShrunkClosure {
        fn closure(&self, s: &TopSpace, a: PointSet) -> PointSet {
            let c = operators::closure(s, a);
            match c.points().last() {
                Some(p) => c.without(p),
                None => c,
            }
        }
    }

    #[test]
    fn small_sweeps_pass() {
        for n in 0..=2 {
            let r = sweep_theorems(n).unwrap();
            let failed: Vec<_> = r.failures().map(|t| t.id).collect();
            assert!(failed.is_empty(), "n = {n}: {failed:?}");
        }
    }

    #[test]
    fn injected_fault_is_named() {
        let r = sweep_spaces(2, &ShrunkClosure).unwrap();
        let bad = r.get("closure-contains-set").unwrap();
        assert!(!bad.passed);
        assert!(bad.counterexample.is_some());
        assert!(r.to_json().contains("closure-contains-set"));
    }

    #[test]
    fn partition_counts() {
        let bell = [1, 1, 2, 5, 15];
        for (n, &b) in bell.iter().enumerate() {
            assert_eq!(partitions(n).len(), b);
        }
    }

    #[test]
    fn families_up_to_size() {
        let pool: Vec<PointSet> = subsets_iter(2).unwrap().collect();
        assert_eq!(small_families(2, &pool, 2).len(), 4 + 6);
    }
}
