//! Command-line front end for `fintop`.
//!
//! Every command writes one JSON value to standard output. Exit codes:
//! `0` success or predicate true, `1` predicate false, `2` bad input,
//! `64` usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use fintop::carrier::{Family, Partition, PointSet};
use fintop::compactness::{compact_set_check, compactness_report, hausdorff_compact_checks, hausdorff_set_checks, CompactnessMode};
use fintop::connectivity::{
    boundaryless_sets, components, connected_sets, has_connected_base, is_connected, is_connected_set,
    is_locally_connected, is_locally_connected_at, mcp, two_block_partitions, PartitionKind,
};
use fintop::constructors::{
    alexandroff, base_generates_same, check_base_conditions, is_base_for, metric_topology, product, quotient,
    subspace, topology_from_base, topology_from_subbase, unit_metric, BaseDefect, MetricTable,
};
use fintop::covers::{classify_cover, is_refinement, is_subcover, minimal_subcover, verify_pasting};
use fintop::document::{emit_document, parse_family, parse_map, parse_space_document, MapData, SpaceDocument};
use fintop::enumeration::{
    canonical_form, count, count_classes_by_canonical, count_classes_by_search, count_parallel, enumerate_topologies,
    naive_topologies, preorder_topologies, relabel, EnumConfig, EnumMode, Predicate,
};
use fintop::maps::{check_map, equivalent_embeddings, find_homeomorphism, homeomorphisms, is_continuous_at, limits_at, restrict};
use fintop::operators::{
    boundary, closure, dense_sets, density_report, exterior, interior, is_dense_in, isolated_set, limit_set,
    nowhere_dense_sets, pair_relation, point_roles,
};
use fintop::separation::{classify_pair, separation_report, t1_minimum};
use fintop::space::{
    clopen_sets, closed_sets, compare, discrete, indiscrete, meet_topologies, minimal_open, neighborhoods, one_point,
    one_point_extension, sierpinski, NeighborhoodKind, TopSpace,
};
use fintop::sweep::{sweep_operators, sweep_theorems, StandardKernel};
use fintop::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "fintop", version, about = "Finite topological spaces from the command line")]
pub struct Cli {
    /// Indent JSON output.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// JSON output (the default; accepted for symmetry with --pretty).
    #[arg(long, global = true)]
    pub json: bool,
    /// Also print a one-line human summary on standard error.
    #[arg(long, global = true)]
    pub summary: bool,
    #[command(subcommand)]
    pub command: Command,
}

/// Spaces are given as a path to a JSON document or as
/// `builtin:sierpinski`, `builtin:point`, `builtin:discrete:N`, `builtin:indiscrete:N`.
#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate a space document and print it in canonical form.
    Validate(SpaceArg),
    /// Interior, closure, exterior, boundary and point roles of a set.
    Ops(OpsArgs),
    /// Evaluate topological predicates.
    Check(CheckArgs),
    /// Build a topology from a base, sub-base or metric table.
    Generate(GenerateArgs),
    /// Check the base conditions for a family, or compare two bases.
    Base(BaseArgs),
    /// Subspace on a set, with its inclusion map.
    Subspace(SetArgs),
    /// Product of two spaces.
    Product(TwoSpaces),
    /// Quotient by a partition.
    Quotient(QuotientArgs),
    /// One-point compactification.
    Alexandroff(SpaceArg),
    /// Adjoin a point whose only neighbourhood is the whole carrier.
    Extend(SpaceArg),
    /// Connected components and related decompositions.
    Components(ComponentsArgs),
    /// Search for a homeomorphism between two spaces.
    Homeo(HomeoArgs),
    /// Classify a map between spaces.
    Map(MapArgs),
    /// Compare two embeddings with the same domain and codomain.
    Embeddings(EmbeddingArgs),
    /// Classify a cover and find minimum subcovers.
    Cover(CoverArgs),
    /// Enumerate or count topologies on a small carrier.
    Enumerate(EnumerateArgs),
    /// Run the exhaustive theorem sweep.
    Sweep(SweepArgs),
    /// Compare two topologies on the same carrier.
    Compare(TwoSpaces),
    /// Meet (intersection) of topologies on the same carrier.
    Meet(ManySpaces),
    /// Neighbourhoods of a set.
    Nbhd(NbhdArgs),
    /// Distinguishability of two points, or the relation between two sets.
    Pair(PairArgs),
    /// Compactness details.
    Compactness(CompactnessArgs),
    /// Coarsest T1 topology on a carrier of at most three points.
    T1Min(NArg),
    /// Canonical representative of the homeomorphism class.
    Canonical(SpaceArg),
}

#[derive(Args, Debug)]
pub struct SpaceArg {
    pub space: String,
}

#[derive(Args, Debug)]
pub struct NArg {
    #[arg(long)]
    pub n: usize,
}

#[derive(Args, Debug)]
pub struct SetArgs {
    pub space: String,
    /// Comma-separated points; empty for the empty set.
    #[arg(long, allow_hyphen_values = true)]
    pub set: String,
}

#[derive(Args, Debug)]
pub struct TwoSpaces {
    pub first: String,
    pub second: String,
}

#[derive(Args, Debug)]
pub struct ManySpaces {
    #[arg(required = true)]
    pub spaces: Vec<String>,
}

#[derive(Args, Debug)]
pub struct OpsArgs {
    pub space: String,
    #[arg(long)]
    pub set: String,
    #[arg(long, visible_alias = "int")]
    pub interior: bool,
    #[arg(long, visible_alias = "cl")]
    pub closure: bool,
    #[arg(long, visible_alias = "ext")]
    pub exterior: bool,
    #[arg(long, visible_alias = "fr")]
    pub boundary: bool,
    #[arg(long)]
    pub limit: bool,
    #[arg(long)]
    pub isolated: bool,
    #[arg(long)]
    pub density: bool,
    /// Roles of every point, or of `--point` only.
    #[arg(long)]
    pub roles: bool,
    #[arg(long)]
    pub point: Option<usize>,
    /// Whether `--set` is dense in this set.
    #[arg(long)]
    pub dense_in: Option<String>,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    pub space: String,
    #[arg(long)]
    pub t0: bool,
    #[arg(long)]
    pub t1: bool,
    #[arg(long)]
    pub t2: bool,
    #[arg(long)]
    pub t3: bool,
    #[arg(long)]
    pub t4: bool,
    #[arg(long)]
    pub regular: bool,
    #[arg(long)]
    pub normal: bool,
    #[arg(long)]
    pub connected: bool,
    #[arg(long)]
    pub compact: bool,
    #[arg(long)]
    pub metrizable: bool,
    #[arg(long)]
    pub locally_connected: bool,
    #[arg(long)]
    pub totally_disconnected: bool,
    #[arg(long)]
    pub locally_compact: bool,
    #[arg(long)]
    pub discrete: bool,
    #[arg(long)]
    pub indiscrete: bool,
}

impl CheckArgs {
    fn requested(&self) -> Vec<Predicate> {
        let flags = [
            self.t0,
            self.t1,
            self.t2,
            self.t3,
            self.t4,
            self.regular,
            self.normal,
            self.connected,
            self.compact,
            self.metrizable,
            self.locally_connected,
            self.totally_disconnected,
            self.locally_compact,
            self.discrete,
            self.indiscrete,
        ];
        let picked: Vec<Predicate> = Predicate::ALL.into_iter().zip(flags).filter(|(_, on)| *on).map(|(p, _)| p).collect();
        if picked.is_empty() {
            Predicate::ALL.to_vec()
        } else {
            picked
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenerateKind {
    Base,
    Subbase,
    Metric,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    pub kind: GenerateKind,
    /// Carrier size (base and sub-base).
    #[arg(long)]
    pub n: Option<usize>,
    /// JSON list of point lists (base and sub-base).
    #[arg(long)]
    pub family: Option<String>,
    /// JSON distance table (metric); omit for the unit metric on `--n` points.
    #[arg(long)]
    pub table: Option<String>,
}

#[derive(Args, Debug)]
pub struct BaseArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub family: String,
    /// Second base to compare generated topologies with.
    #[arg(long)]
    pub against: Option<String>,
    /// Space to test the family as a base for.
    #[arg(long)]
    pub of: Option<String>,
}

#[derive(Args, Debug)]
pub struct QuotientArgs {
    pub space: String,
    /// JSON list of blocks.
    #[arg(long)]
    pub partition: String,
}

#[derive(Args, Debug)]
pub struct ComponentsArgs {
    pub space: String,
    /// Connectedness of this set instead.
    #[arg(long)]
    pub set: Option<String>,
    /// Component of this point.
    #[arg(long)]
    pub point: Option<usize>,
    /// List two-block partitions of each kind and the clopen sets.
    #[arg(long)]
    pub partitions: bool,
    /// Include connected subsets and local connectedness.
    #[arg(long)]
    pub detail: bool,
}

#[derive(Args, Debug)]
pub struct HomeoArgs {
    pub first: String,
    pub second: String,
    /// List every homeomorphism.
    #[arg(long)]
    pub all: bool,
}

#[derive(Args, Debug)]
pub struct MapArgs {
    /// Map document.
    pub map: String,
    /// Continuity at this point.
    #[arg(long)]
    pub at: Option<usize>,
    /// Restrict the domain to this set.
    #[arg(long)]
    pub restrict: Option<String>,
    /// Limits at `--point` of the restriction to this set.
    #[arg(long)]
    pub limit: Option<String>,
    #[arg(long)]
    pub point: Option<usize>,
    /// Compact-to-Hausdorff checks.
    #[arg(long)]
    pub hausdorff: bool,
}

#[derive(Args, Debug)]
pub struct EmbeddingArgs {
    pub first: String,
    pub second: String,
}

#[derive(Args, Debug)]
pub struct CoverArgs {
    pub space: String,
    /// JSON list of point lists.
    #[arg(long)]
    pub cover: String,
    /// Set to cover; defaults to the carrier.
    #[arg(long)]
    pub target: Option<String>,
    #[arg(long)]
    pub minimal: bool,
    /// Is this family a subcover?
    #[arg(long)]
    pub subcover: Option<String>,
    /// Is this family a refinement?
    #[arg(long)]
    pub refinement: Option<String>,
    /// Check the pasting property for a map document out of this space.
    #[arg(long)]
    pub pasting: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Labeled,
    Classes,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    /// Print only the count.
    #[arg(long)]
    pub count: bool,
    #[arg(long, value_enum, default_value = "labeled")]
    pub mode: ModeArg,
    #[arg(long)]
    pub parallel: bool,
    #[arg(long)]
    pub predicate: Option<String>,
    /// Count classes two ways: witness search and canonical forms.
    #[arg(long)]
    pub cross_check: bool,
    /// Reference generator to list labeled topologies with instead.
    #[arg(long, value_enum)]
    pub generator: Option<GeneratorArg>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GeneratorArg {
    /// Filter every family containing the empty set and the carrier.
    Naive,
    /// Up-sets of every preorder.
    Preorder,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(long)]
    pub n: usize,
    /// Operator identities only.
    #[arg(long)]
    pub operators: bool,
}

#[derive(Args, Debug)]
pub struct NbhdArgs {
    pub space: String,
    #[arg(long)]
    pub set: String,
    /// Closed neighbourhoods instead of open ones.
    #[arg(long)]
    pub closed: bool,
}

#[derive(Args, Debug)]
pub struct PairArgs {
    pub space: String,
    #[arg(long, num_args = 2, value_names = ["P", "Q"])]
    pub points: Option<Vec<usize>>,
    #[arg(long, num_args = 2, value_names = ["A", "B"], allow_hyphen_values = true)]
    pub sets: Option<Vec<String>>,
}

#[derive(Args, Debug)]
pub struct CompactnessArgs {
    pub space: String,
    #[arg(long)]
    pub set: Option<String>,
}

/// A failed command: exit code plus a message.
#[derive(Debug)]
struct Failure {
    code: i32,
    kind: String,
    message: String,
    detail: Option<Value>,
}

impl Failure {
    fn input(message: impl Into<String>) -> Failure {
        Failure { code: EXIT_INPUT, kind: "InputError".into(), message: message.into(), detail: None }
    }

    fn usage(message: impl Into<String>) -> Failure {
        Failure { code: EXIT_USAGE, kind: "UsageError".into(), message: message.into(), detail: None }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let detail = match &e {
            Error::InvalidTopology(v) => Some(violations_json(v)),
            Error::Syntax { line, column, .. } => Some(json!({ "line": line, "column": column })),
            _ => None,
        };
        Failure { code: EXIT_INPUT, kind: error_kind(&e).into(), message: e.to_string(), detail }
    }
}

fn violations_json(v: &[fintop::space::AxiomViolation]) -> Value {
    Value::Array(v.iter().map(|x| json!({ "kind": x.kind.name(), "witness": x.witness_lists() })).collect())
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::CarrierTooLarge { .. } => "CarrierTooLarge",
        Error::CarrierMismatch { .. } => "CarrierMismatch",
        Error::EmptyFamilyIntersection => "EmptyFamilyIntersection",
        Error::EmptyList => "EmptyList",
        Error::OutOfCarrier { .. } => "OutOfCarrier",
        Error::PointOutOfRange { .. } => "PointOutOfRange",
        Error::InvalidTopology(_) => "InvalidTopology",
        Error::InvalidBase(_) => "InvalidBase",
        Error::SubbaseDoesNotCover => "SubbaseDoesNotCover",
        Error::NotAPartition(_) => "NotAPartition",
        Error::InvalidMetric { .. } => "InvalidMetric",
        Error::MapOutOfRange { .. } => "MapOutOfRange",
        Error::NotALimitPoint(_) => "NotALimitPoint",
        Error::NotFundamental => "NotFundamental",
        Error::NotACover => "NotACover",
        Error::CodomainNotHausdorff => "CodomainNotHausdorff",
        Error::Syntax { .. } => "SyntaxError",
        Error::InvalidDocument(_) => "InvalidDocument",
    }
}

/// Result of a successful command.
struct Outcome {
    value: Value,
    code: i32,
    summary: String,
}

impl Outcome {
    fn ok(value: Value, summary: impl Into<String>) -> Outcome {
        Outcome { value, code: EXIT_OK, summary: summary.into() }
    }

    fn truth(value: Value, holds: bool, summary: impl Into<String>) -> Outcome {
        Outcome { value, code: if holds { EXIT_OK } else { EXIT_FALSE }, summary: summary.into() }
    }
}

type CmdResult = Result<Outcome, Failure>;

fn read_text(path: &str) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::input(format!("cannot read {path}: {e}")))
}

fn builtin(name: &str) -> Result<TopSpace, Failure> {
    let mut parts = name.split(':');
    let kind = parts.next().unwrap_or_default();
    let size = parts.next().map(|v| v.parse::<usize>().map_err(|_| Failure::input(format!("bad size in builtin:{name}"))));
    let space = match (kind, size) {
        ("sierpinski", None) => sierpinski(),
        ("point", None) => one_point(),
        ("discrete", Some(n)) => discrete(n?)?,
        ("indiscrete", Some(n)) => indiscrete(n?)?,
        _ => return Err(Failure::input(format!("unknown builtin space `{name}`"))),
    };
    Ok(space)
}

fn load_document(spec: &str) -> Result<SpaceDocument, Failure> {
    match spec.strip_prefix("builtin:") {
        Some(name) => Ok(SpaceDocument::from_space(&builtin(name)?)),
        None => Ok(parse_space_document(&read_text(spec)?)?),
    }
}

fn load_space(spec: &str) -> Result<TopSpace, Failure> {
    Ok(load_document(spec)?.to_space()?)
}

fn load_map(path: &str) -> Result<MapData, Failure> {
    let text = read_text(path)?;
    let dir = Path::new(path).parent().map(Path::to_path_buf).unwrap_or_default();
    let resolved = parse_map(&text, |r| {
        if let Some(name) = r.strip_prefix("builtin:") {
            return builtin(name).map(|s| fintop::document::emit_space(&s)).map_err(|f| Error::InvalidDocument(f.message));
        }
        std::fs::read_to_string(dir.join(r)).map_err(|e| Error::InvalidDocument(format!("cannot read {r}: {e}")))
    });
    Ok(resolved?)
}

fn parse_set(n: usize, text: &str) -> Result<PointSet, Failure> {
    let mut points = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        points.push(part.parse::<usize>().map_err(|_| Failure::input(format!("bad point `{part}` in set `{text}`")))?);
    }
    Ok(PointSet::from_points(n, points)?)
}

fn family_arg(n: usize, text: &str) -> Result<Family, Failure> {
    Ok(parse_family(n, text)?)
}

fn set_json(a: PointSet) -> Value {
    json!(a.to_vec())
}

fn family_json(f: &Family) -> Value {
    json!(f.to_lists())
}

fn space_json(s: &TopSpace) -> Value {
    serde_json::to_value(SpaceDocument::from_space(s)).expect("documents serialize")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_validate(a: &SpaceArg) -> CmdResult {
    let doc = match a.space.strip_prefix("builtin:") {
        Some(_) => load_document(&a.space)?,
        None => {
            let text = read_text(&a.space)?;
            match parse_space_document(&text) {
                Ok(d) => d,
                Err(Error::InvalidTopology(v)) => {
                    let value = json!({ "valid": false, "violations": violations_json(&v) });
                    let names: Vec<&str> = v.iter().map(|x| x.kind.name()).collect();
                    return Ok(Outcome::truth(value, false, format!("not a topology: {}", names.join(", "))));
                }
                Err(e) => return Err(e.into()),
            }
        }
    };
    let value: Value = serde_json::from_str(&emit_document(&doc)).expect("emitted documents parse");
    let closed = closed_sets(&doc.to_space()?).to_lists();
    Ok(Outcome::ok(json!({ "valid": true, "space": value, "closed": closed }), format!("valid topology with {} open sets", doc.opens.len())))
}

fn cmd_ops(a: &OpsArgs) -> CmdResult {
    let s = load_space(&a.space)?;
    let set = parse_set(s.n(), &a.set)?;
    let any = a.interior || a.closure || a.exterior || a.boundary || a.limit || a.isolated || a.density || a.roles || a.dense_in.is_some();
    let mut out = Map::new();
    if a.interior || !any {
        out.insert("interior".into(), set_json(interior(&s, set)));
    }
    if a.closure || !any {
        out.insert("closure".into(), set_json(closure(&s, set)));
    }
    if a.exterior || !any {
        out.insert("exterior".into(), set_json(exterior(&s, set)));
    }
    if a.boundary || !any {
        out.insert("boundary".into(), set_json(boundary(&s, set)));
    }
    if a.limit || !any {
        out.insert("limit".into(), set_json(limit_set(&s, set)));
    }
    if a.isolated || !any {
        out.insert("isolated".into(), set_json(isolated_set(&s, set)));
    }
    if a.density {
        let d = density_report(&s, set);
        out.insert(
            "density".into(),
            json!({ "dense": d.dense, "dense_in_itself": d.dense_in_itself, "nowhere_dense": d.nowhere_dense, "perfect": d.perfect }),
        );
        out.insert("dense_sets".into(), family_json(&dense_sets(&s)));
        out.insert("nowhere_dense_sets".into(), family_json(&nowhere_dense_sets(&s)));
    }
    if let Some(other) = &a.dense_in {
        let b = parse_set(s.n(), other)?;
        out.insert("dense_in".into(), json!(is_dense_in(&s, set, b)));
    }
    if a.roles {
        let points: Vec<usize> = match a.point {
            Some(p) if p >= s.n() => return Err(Error::PointOutOfRange { point: p, n: s.n() }.into()),
            Some(p) => vec![p],
            None => (0..s.n()).collect(),
        };
        let roles: Vec<Value> = points
            .iter()
            .map(|&p| {
                let r = point_roles(&s, set, p);
                json!({ "point": p, "interior": r.interior, "exterior": r.exterior, "boundary": r.boundary,
                        "adherent": r.adherent, "limit": r.limit, "isolated": r.isolated })
            })
            .collect();
        out.insert("roles".into(), Value::Array(roles));
    }
    let summary = format!("operators of {} in a {}-point space", set, s.n());
    Ok(Outcome::ok(Value::Object(out), summary))
}

fn cmd_check(a: &CheckArgs) -> CmdResult {
    let s = load_space(&a.space)?;
    let mut out = Map::new();
    let mut all = true;
    let mut failed = Vec::new();
    for p in a.requested() {
        let holds = p.holds(&s);
        all &= holds;
        if !holds {
            failed.push(p.name());
        }
        out.insert(p.name().into(), json!(holds));
    }
    let summary = if failed.is_empty() { "all predicates hold".to_string() } else { format!("false: {}", failed.join(", ")) };
    Ok(Outcome::truth(Value::Object(out), all, summary))
}

fn cmd_generate(a: &GenerateArgs) -> CmdResult {
    let need_n = || a.n.ok_or_else(|| Failure::usage("--n is required"));
    let need_family = |n| a.family.as_deref().ok_or_else(|| Failure::usage("--family is required")).and_then(|f| family_arg(n, f));
    let s = match a.kind {
        GenerateKind::Base => {
            let n = need_n()?;
            topology_from_base(n, &need_family(n)?)?
        }
        GenerateKind::Subbase => {
            let n = need_n()?;
            topology_from_subbase(n, &need_family(n)?)?
        }
        GenerateKind::Metric => {
            let m = match (&a.table, a.n) {
                (Some(t), _) => {
                    let rows: Vec<Vec<u64>> = serde_json::from_str(t).map_err(|e| Failure::input(format!("bad table: {e}")))?;
                    MetricTable::new(rows)?
                }
                (None, Some(n)) => unit_metric(n)?,
                (None, None) => return Err(Failure::usage("--table or --n is required")),
            };
            metric_topology(&m)?
        }
    };
    let summary = format!("{} open sets on {} points", s.opens().len(), s.n());
    Ok(Outcome::ok(space_json(&s), summary))
}

fn defect_json(d: &Option<BaseDefect>) -> Value {
    match d {
        None => Value::Null,
        Some(BaseDefect::NotCovering) => json!({ "kind": "NotCovering" }),
        Some(BaseDefect::IntersectionNotUnion(a, b)) => json!({ "kind": "IntersectionNotUnion", "witness": [set_json(*a), set_json(*b)] }),
    }
}

fn cmd_base(a: &BaseArgs) -> CmdResult {
    let fam = family_arg(a.n, &a.family)?;
    if let Some(space) = &a.of {
        let s = load_space(space)?;
        if s.n() != a.n {
            return Err(Error::CarrierMismatch { left: s.n(), right: a.n }.into());
        }
        let holds = is_base_for(&s, &fam);
        return Ok(Outcome::truth(json!({ "base_for": holds }), holds, format!("base for the space: {}", yes(holds))));
    }
    if let Some(other) = &a.against {
        let b2 = family_arg(a.n, other)?;
        let c = base_generates_same(a.n, &fam, &b2)?;
        let same = c == fintop::space::Comparison::Equal;
        return Ok(Outcome::truth(json!({ "comparison": c.name() }), same, format!("generated topologies: {}", c.name())));
    }
    let defect = check_base_conditions(a.n, &fam)?;
    let ok = defect.is_none();
    Ok(Outcome::truth(json!({ "base": ok, "defect": defect_json(&defect) }), ok, format!("base conditions hold: {}", yes(ok))))
}

fn cmd_subspace(a: &SetArgs) -> CmdResult {
    let s = load_space(&a.space)?;
    let y = parse_set(s.n(), &a.set)?;
    let (sub, inc) = subspace(&s, y)?;
    let summary = format!("subspace on {} points with {} open sets", sub.n(), sub.opens().len());
    Ok(Outcome::ok(json!({ "space": space_json(&sub), "inclusion": inc.table() }), summary))
}

fn cmd_product(a: &TwoSpaces) -> CmdResult {
    let s1 = load_space(&a.first)?;
    let s2 = load_space(&a.second)?;
    let (p, enc) = product(&s1, &s2)?;
    let pairs: Vec<(usize, usize)> = (0..p.n()).map(|k| enc.decode(k)).collect();
    let summary = format!("product on {} points with {} open sets", p.n(), p.opens().len());
    Ok(Outcome::ok(json!({ "space": space_json(&p), "pairs": pairs }), summary))
}

fn cmd_quotient(a: &QuotientArgs) -> CmdResult {
    let s = load_space(&a.space)?;
    let blocks: Vec<Vec<usize>> = serde_json::from_str(&a.partition).map_err(|e| Failure::input(format!("bad partition: {e}")))?;
    let part = Partition::from_lists(s.n(), &blocks)?;
    let (q, proj) = quotient(&s, &part)?;
    let summary = format!("quotient on {} points with {} open sets", q.n(), q.opens().len());
    Ok(Outcome::ok(json!({ "space": space_json(&q), "projection": proj.table() }), summary))
}

fn cmd_alexandroff(a: &SpaceArg) -> CmdResult {
    let s = load_space(&a.space)?;
    let x = alexandroff(&s)?;
    let summary = format!("compactification adds point {}", s.n());
    Ok(Outcome::ok(json!({ "space": space_json(&x), "infinity": s.n() }), summary))
}

fn cmd_extend(a: &SpaceArg) -> CmdResult {
    let s = load_space(&a.space)?;
    let x = one_point_extension(&s)?;
    Ok(Outcome::ok(json!({ "space": space_json(&x), "added": s.n() }), format!("extension adds point {}", s.n())))
}

fn cmd_components(a: &ComponentsArgs) -> CmdResult {
    let s = load_space(&a.space)?;
    if let Some(text) = &a.set {
        let set = parse_set(s.n(), text)?;
        let holds = is_connected_set(&s, set);
        return Ok(Outcome::truth(json!({ "connected": holds }), holds, format!("{} connected: {}", set, yes(holds))));
    }
    let c = components(&s);
    let mut out = Map::new();
    out.insert("connected".into(), json!(is_connected(&s)));
    out.insert("count".into(), json!(c.len()));
    out.insert("components".into(), json!(c.blocks.as_family().to_lists()));
    if let Some(p) = a.point {
        if p >= s.n() {
            return Err(Error::PointOutOfRange { point: p, n: s.n() }.into());
        }
        out.insert("component_of".into(), set_json(mcp(&s, s.set(&[p]))));
    }
    if a.partitions {
        let pairs = |k| -> Value {
            Value::Array(two_block_partitions(&s, k).into_iter().map(|(u, v)| json!([u.to_vec(), v.to_vec()])).collect())
        };
        out.insert("open_partitions".into(), pairs(PartitionKind::Open));
        out.insert("closed_partitions".into(), pairs(PartitionKind::Closed));
        out.insert("separated_partitions".into(), pairs(PartitionKind::NonAttached));
        out.insert("boundaryless".into(), family_json(&boundaryless_sets(&s)));
        out.insert("clopen".into(), family_json(&clopen_sets(&s)));
    }
    if a.detail {
        out.insert("connected_sets".into(), family_json(&connected_sets(&s)));
        out.insert("locally_connected".into(), json!(is_locally_connected(&s)));
        out.insert("connected_base".into(), json!(has_connected_base(&s)));
        let at: Vec<bool> = (0..s.n()).map(|p| is_locally_connected_at(&s, p)).collect();
        out.insert("locally_connected_at".into(), json!(at));
    }
    Ok(Outcome::ok(Value::Object(out), format!("{} component(s)", c.len())))
}

fn cmd_homeo(a: &HomeoArgs) -> CmdResult {
    let s1 = load_space(&a.first)?;
    let s2 = load_space(&a.second)?;
    let witness = find_homeomorphism(&s1, &s2);
    let found = witness.is_some();
    let mut out = Map::new();
    out.insert("homeomorphic".into(), json!(found));
    out.insert("witness".into(), witness.map(|f| json!(f.table())).unwrap_or(Value::Null));
    if a.all {
        let all: Vec<Value> = homeomorphisms(&s1, &s2).iter().map(|f| json!(f.table())).collect();
        out.insert("all".into(), Value::Array(all));
    }
    Ok(Outcome::truth(Value::Object(out), found, format!("homeomorphic: {}", yes(found))))
}

fn cmd_map(a: &MapArgs) -> CmdResult {
    let m = load_map(&a.map)?;
    let (s1, s2, f) = (&m.dom, &m.cod, &m.map);
    let r = check_map(f, s1, s2)?;
    let mut out = Map::new();
    out.insert("continuous".into(), json!(r.continuous));
    out.insert("open".into(), json!(r.open_map));
    out.insert("closed".into(), json!(r.closed_map));
    out.insert("injective".into(), json!(r.injective));
    out.insert("surjective".into(), json!(r.surjective));
    out.insert("homeomorphism".into(), json!(r.homeomorphism));
    out.insert("embedding".into(), json!(r.embedding));
    if let Some(p) = a.at {
        out.insert("continuous_at".into(), json!(is_continuous_at(f, s1, s2, p)?));
    }
    if let Some(text) = &a.restrict {
        let set = parse_set(s1.n(), text)?;
        let (sub, _) = subspace(s1, set)?;
        let g = restrict(f, set)?;
        out.insert("restriction".into(), json!({ "table": g.table(), "continuous": check_map(&g, &sub, s2)?.continuous }));
    }
    if let Some(text) = &a.limit {
        let set = parse_set(s1.n(), text)?;
        let p = a.point.ok_or_else(|| Failure::usage("--limit needs --point"))?;
        let g = restrict(f, set)?;
        out.insert("limits".into(), set_json(limits_at(&g, s1, set, s2, p)?));
    }
    if a.hausdorff {
        let h = hausdorff_compact_checks(s1, s2, f)?;
        out.insert(
            "hausdorff".into(),
            json!({ "continuous_is_closed": h.continuous_is_closed,
                    "continuous_bijection_is_homeomorphism": h.continuous_bijection_is_homeomorphism,
                    "continuous_injection_is_embedding": h.continuous_injection_is_embedding }),
        );
    }
    Ok(Outcome::ok(Value::Object(out), format!("continuous: {}, homeomorphism: {}", yes(r.continuous), yes(r.homeomorphism))))
}

fn cmd_embeddings(a: &EmbeddingArgs) -> CmdResult {
    let m1 = load_map(&a.first)?;
    let m2 = load_map(&a.second)?;
    if m1.dom != m2.dom || m1.cod != m2.cod {
        return Err(Failure::input("embeddings must share domain and codomain"));
    }
    let eq = equivalent_embeddings(&m1.map, &m2.map, &m1.dom, &m1.cod)?;
    Ok(Outcome::truth(json!({ "equivalent": eq }), eq, format!("equivalent: {}", yes(eq))))
}

fn cmd_cover(a: &CoverArgs) -> CmdResult {
    let s = load_space(&a.space)?;
    let c = family_arg(s.n(), &a.cover)?;
    let target = match &a.target {
        Some(t) => parse_set(s.n(), t)?,
        None => s.carrier(),
    };
    let r = classify_cover(&s, &c, target)?;
    let mut out = Map::new();
    out.insert("cover".into(), json!(r.is_cover));
    out.insert("open".into(), json!(r.open_cover));
    out.insert("closed".into(), json!(r.closed_cover));
    out.insert("locally_finite".into(), json!(r.locally_finite));
    out.insert("fundamental".into(), json!(r.fundamental));
    if a.minimal {
        out.insert("minimal_subcover".into(), family_json(&minimal_subcover(&s, &c, target)?));
    }
    if let Some(text) = &a.subcover {
        out.insert("subcover".into(), json!(is_subcover(&family_arg(s.n(), text)?, &c, target)));
    }
    if let Some(text) = &a.refinement {
        out.insert("refinement".into(), json!(is_refinement(&family_arg(s.n(), text)?, &c, &s)));
    }
    if let Some(path) = &a.pasting {
        let m = load_map(path)?;
        if m.dom != s {
            return Err(Failure::input("map domain differs from the covered space"));
        }
        out.insert("pasting".into(), json!(verify_pasting(&m.dom, &m.cod, &m.map, &c)?));
    }
    let summary = format!("cover: {}, fundamental: {}", yes(r.is_cover), r.fundamental.map(yes).unwrap_or("n/a"));
    Ok(Outcome::truth(Value::Object(out), r.is_cover, summary))
}

fn cmd_enumerate(a: &EnumerateArgs) -> CmdResult {
    let predicate = match &a.predicate {
        Some(p) => Some(p.parse::<Predicate>().map_err(|e| Failure::usage(e.to_string()))?),
        None => None,
    };
    let mode = match a.mode {
        ModeArg::Labeled => EnumMode::Labeled,
        ModeArg::Classes => EnumMode::UpToHomeomorphism,
    };
    let cfg = EnumConfig { n: a.n, predicate, mode };
    if a.cross_check {
        let by_search = count_classes_by_search(a.n)?;
        let by_canonical = count_classes_by_canonical(a.n)?;
        let agree = by_search == by_canonical;
        let value = json!({ "by_search": by_search, "by_canonical": by_canonical });
        return Ok(Outcome::truth(value, agree, format!("{by_search} classes by search, {by_canonical} by canonical form")));
    }
    if let Some(g) = a.generator {
        if mode != EnumMode::Labeled {
            return Err(Failure::usage("--generator lists labeled topologies only"));
        }
        let all = match g {
            GeneratorArg::Naive => naive_topologies(a.n)?,
            GeneratorArg::Preorder => preorder_topologies(a.n)?,
        };
        let kept: Vec<TopSpace> = all.into_iter().filter(|s| predicate.is_none_or(|p| p.holds(s))).collect();
        if a.count {
            return Ok(Outcome::ok(json!({ "count": kept.len() }), format!("{} topologies", kept.len())));
        }
        let spaces: Vec<Value> = kept.iter().map(|s| json!(s.opens().to_lists())).collect();
        return Ok(Outcome::ok(json!({ "n": a.n, "spaces": spaces }), format!("{} topologies", kept.len())));
    }
    if a.count {
        let c = if a.parallel { count_parallel(cfg)? } else { count(cfg)? };
        return Ok(Outcome::ok(json!({ "count": c }), format!("{c} topologies")));
    }
    let spaces: Vec<Value> = enumerate_topologies(cfg)?.map(|s| json!(s.opens().to_lists())).collect();
    let summary = format!("{} topologies", spaces.len());
    Ok(Outcome::ok(json!({ "n": a.n, "spaces": spaces }), summary))
}

fn cmd_sweep(a: &SweepArgs) -> CmdResult {
    let report = if a.operators { sweep_operators(a.n, &StandardKernel)? } else { sweep_theorems(a.n)? };
    let passed = report.all_passed();
    let failed: Vec<&str> = report.failures().map(|t| t.id).collect();
    let summary = if passed {
        format!("{} laws hold over {} spaces", report.theorems.len(), report.spaces)
    } else {
        format!("violated: {}", failed.join(", "))
    };
    let value = serde_json::to_value(&report).expect("report serializes");
    Ok(Outcome::truth(value, passed, summary))
}

fn cmd_compare(a: &TwoSpaces) -> CmdResult {
    let s1 = load_space(&a.first)?;
    let s2 = load_space(&a.second)?;
    let c = compare(&s1, &s2)?;
    Ok(Outcome::ok(json!({ "comparison": c.name() }), c.name()))
}

fn cmd_meet(a: &ManySpaces) -> CmdResult {
    let spaces = a.spaces.iter().map(|p| load_space(p)).collect::<Result<Vec<_>, _>>()?;
    let m = meet_topologies(&spaces)?;
    Ok(Outcome::ok(space_json(&m), format!("meet has {} open sets", m.opens().len())))
}

fn cmd_nbhd(a: &NbhdArgs) -> CmdResult {
    let s = load_space(&a.space)?;
    let set = parse_set(s.n(), &a.set)?;
    let kind = if a.closed { NeighborhoodKind::Closed } else { NeighborhoodKind::Open };
    let fam = neighborhoods(&s, set, kind);
    let mut out = Map::new();
    out.insert("neighborhoods".into(), family_json(&fam));
    if set.len() == 1 {
        out.insert("minimal_open".into(), set_json(minimal_open(&s, set.first().unwrap())?));
    }
    Ok(Outcome::ok(Value::Object(out), format!("{} neighbourhoods", fam.len())))
}

fn cmd_pair(a: &PairArgs) -> CmdResult {
    let s = load_space(&a.space)?;
    match (&a.points, &a.sets) {
        (Some(pq), None) => {
            let c = classify_pair(&s, pq[0], pq[1])?;
            let value = json!({ "indistinguishable": c.indistinguishable, "partially_distinguishable": c.partially_distinguishable,
                                "distinguishable": c.distinguishable, "separated": c.separated });
            Ok(Outcome::ok(value, format!("separated: {}", yes(c.separated))))
        }
        (None, Some(ab)) => {
            let x = parse_set(s.n(), &ab[0])?;
            let y = parse_set(s.n(), &ab[1])?;
            let r = pair_relation(&s, x, y);
            Ok(Outcome::ok(json!({ "relation": r.name() }), r.name()))
        }
        _ => Err(Failure::usage("give exactly one of --points or --sets")),
    }
}

fn cmd_compactness(a: &CompactnessArgs) -> CmdResult {
    let s = load_space(&a.space)?;
    let mode_name = |m| match m {
        CompactnessMode::Literal => "literal",
        CompactnessMode::Sampled => "sampled",
    };
    if let Some(text) = &a.set {
        let set = parse_set(s.n(), text)?;
        let c = compact_set_check(&s, set);
        let value = json!({ "compact": c.compact, "mode": mode_name(c.mode), "covers_examined": c.covers_examined });
        return Ok(Outcome::truth(value, c.compact, format!("{} compact: {}", set, yes(c.compact))));
    }
    let r = compactness_report(&s);
    let mut out = Map::new();
    out.insert("compact".into(), json!(r.compact));
    out.insert("locally_compact".into(), json!(r.locally_compact));
    out.insert("mode".into(), json!(mode_name(r.mode)));
    out.insert("minimal_open_subcover".into(), json!(r.minimal_open_subcover));
    if separation_report(&s).t2 {
        let h = hausdorff_set_checks(&s)?;
        out.insert(
            "hausdorff".into(),
            json!({ "compact_sets_closed": h.compact_sets_closed, "disjoint_compacts_separated": h.disjoint_compacts_separated }),
        );
    }
    Ok(Outcome::truth(Value::Object(out), r.compact, format!("compact: {}", yes(r.compact))))
}

fn cmd_t1_min(a: &NArg) -> CmdResult {
    let s = t1_minimum(a.n)?;
    Ok(Outcome::ok(space_json(&s), format!("coarsest T1 topology has {} open sets", s.opens().len())))
}

fn cmd_canonical(a: &SpaceArg) -> CmdResult {
    let s = load_space(&a.space)?;
    let c = canonical_form(&s);
    let witness = find_homeomorphism(&s, &c).expect("a space is homeomorphic to its canonical form");
    debug_assert_eq!(relabel(&s, witness.table()), c);
    Ok(Outcome::ok(json!({ "space": space_json(&c), "relabeling": witness.table() }), "canonical form"))
}

fn dispatch(cmd: &Command) -> CmdResult {
    match cmd {
        Command::Validate(a) => cmd_validate(a),
        Command::Ops(a) => cmd_ops(a),
        Command::Check(a) => cmd_check(a),
        Command::Generate(a) => cmd_generate(a),
        Command::Base(a) => cmd_base(a),
        Command::Subspace(a) => cmd_subspace(a),
        Command::Product(a) => cmd_product(a),
        Command::Quotient(a) => cmd_quotient(a),
        Command::Alexandroff(a) => cmd_alexandroff(a),
        Command::Extend(a) => cmd_extend(a),
        Command::Components(a) => cmd_components(a),
        Command::Homeo(a) => cmd_homeo(a),
        Command::Map(a) => cmd_map(a),
        Command::Embeddings(a) => cmd_embeddings(a),
        Command::Cover(a) => cmd_cover(a),
        Command::Enumerate(a) => cmd_enumerate(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Compare(a) => cmd_compare(a),
        Command::Meet(a) => cmd_meet(a),
        Command::Nbhd(a) => cmd_nbhd(a),
        Command::Pair(a) => cmd_pair(a),
        Command::Compactness(a) => cmd_compactness(a),
        Command::T1Min(a) => cmd_t1_min(a),
        Command::Canonical(a) => cmd_canonical(a),
    }
}

fn render(value: &Value, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(value).expect("values serialize")
    } else {
        serde_json::to_string(value).expect("values serialize")
    }
}

/// Runs one command line. `argv[0]` is the program name.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(&cli.command) {
        Ok(o) => {
            let _ = writeln!(out, "{}", render(&o.value, cli.pretty));
            if cli.summary {
                let _ = writeln!(err, "{}", o.summary);
            }
            o.code
        }
        Err(f) => {
            let mut body = Map::new();
            body.insert("kind".into(), json!(f.kind));
            body.insert("message".into(), json!(f.message));
            if let Some(d) = f.detail {
                body.insert("detail".into(), d);
            }
            let _ = writeln!(out, "{}", render(&json!({ "error": Value::Object(body) }), cli.pretty));
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// Library operations and the subcommand that reaches each one.
pub const OPERATIONS: &[(&str, &str)] = &[
    ("family_union", "cover"),
    ("family_intersection", "check"),
    ("subsets_iter", "sweep"),
    ("validate_topology", "validate"),
    ("parse_space", "validate"),
    ("parse_space_document", "validate"),
    ("emit_space", "validate"),
    ("emit_document", "validate"),
    ("parse_map", "map"),
    ("emit_map", "map"),
    ("parse_family", "cover"),
    ("discrete", "validate"),
    ("indiscrete", "validate"),
    ("sierpinski", "validate"),
    ("one_point", "validate"),
    ("closed_sets", "ops"),
    ("clopen_sets", "components"),
    ("neighborhoods", "nbhd"),
    ("minimal_open", "nbhd"),
    ("compare", "compare"),
    ("meet_topologies", "meet"),
    ("one_point_extension", "extend"),
    ("interior", "ops"),
    ("closure", "ops"),
    ("exterior", "ops"),
    ("boundary", "ops"),
    ("point_roles", "ops"),
    ("limit_set", "ops"),
    ("isolated_set", "ops"),
    ("density_report", "ops"),
    ("dense_sets", "ops"),
    ("nowhere_dense_sets", "ops"),
    ("pair_relation", "pair"),
    ("is_dense_in", "ops"),
    ("check_map", "map"),
    ("is_continuous", "map"),
    ("is_open_map", "map"),
    ("is_closed_map", "map"),
    ("is_homeomorphism", "map"),
    ("is_embedding", "map"),
    ("is_continuous_at", "map"),
    ("limits_at", "map"),
    ("restrict", "map"),
    ("invariants_match", "homeo"),
    ("find_homeomorphism", "homeo"),
    ("are_homeomorphic", "homeo"),
    ("homeomorphisms", "homeo"),
    ("equivalent_embeddings", "embeddings"),
    ("check_base_conditions", "base"),
    ("topology_from_base", "generate"),
    ("is_base_for", "base"),
    ("base_generates_same", "base"),
    ("topology_from_subbase", "generate"),
    ("subspace", "subspace"),
    ("product", "product"),
    ("quotient", "quotient"),
    ("metric_topology", "generate"),
    ("is_metrizable", "check"),
    ("unit_metric", "generate"),
    ("alexandroff", "alexandroff"),
    ("is_connected", "check"),
    ("is_connected_set", "components"),
    ("connected_sets", "components"),
    ("mcp", "components"),
    ("components", "components"),
    ("component_count", "components"),
    ("is_totally_disconnected", "check"),
    ("is_locally_connected", "check"),
    ("is_locally_connected_at", "components"),
    ("has_connected_base", "components"),
    ("two_block_partitions", "components"),
    ("boundaryless_sets", "components"),
    ("classify_pair", "pair"),
    ("is_t0", "check"),
    ("is_t1", "check"),
    ("is_t2", "check"),
    ("is_t3", "check"),
    ("is_t4", "check"),
    ("separation_report", "check"),
    ("t1_minimum", "t1-min"),
    ("compact_set_check", "compactness"),
    ("is_compact_set", "compactness"),
    ("is_compact", "check"),
    ("is_locally_compact", "check"),
    ("compactness_report", "compactness"),
    ("hausdorff_compact_checks", "map"),
    ("hausdorff_set_checks", "compactness"),
    ("locally_determined_sets", "cover"),
    ("is_fundamental", "cover"),
    ("classify_cover", "cover"),
    ("is_subcover", "cover"),
    ("is_refinement", "cover"),
    ("verify_pasting", "cover"),
    ("minimal_subcover", "cover"),
    ("all_topologies", "enumerate"),
    ("enumerate_topologies", "enumerate"),
    ("count", "enumerate"),
    ("count_topologies", "enumerate"),
    ("count_parallel", "enumerate"),
    ("for_each_permutation", "canonical"),
    ("relabel", "canonical"),
    ("canonical_form", "canonical"),
    ("is_canonical", "enumerate"),
    ("classes_by_search", "enumerate"),
    ("count_classes_by_search", "enumerate"),
    ("count_classes_by_canonical", "enumerate"),
    ("naive_topologies", "enumerate"),
    ("preorder_topologies", "enumerate"),
    ("sweep_theorems", "sweep"),
    ("sweep_theorems_with", "sweep"),
    ("sweep_spaces", "sweep"),
    ("sweep_maps", "sweep"),
    ("sweep_operators", "sweep"),
    ("random_metric", "sweep"),
];

/// Names of every subcommand.
pub fn subcommand_names() -> Vec<String> {
    use clap::CommandFactory;
    Cli::command().get_subcommands().map(|c| c.get_name().to_string()).collect()
}
