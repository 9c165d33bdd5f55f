//! Obstructions to shellability and to purity: predicates with checkable
//! witnesses, minimum nonshellable induced subcomplexes, and enumeration of
//! isomorphism classes.
//!
//! Enumeration is orderly generation by vertex count. Level `m` holds one
//! representative per class of complexes on `m` vertices, of dimension at
//! most `d`, all of whose induced subcomplexes have the property. A complex
//! on `m + 1` vertices is the cone of a link `L` glued onto a level-`m`
//! representative, and it is only examined when every one of its
//! `m`-vertex deletions is again a level-`m` class. The examined candidates
//! that lack the property are exactly the minimal failures, and those of
//! dimension `d` are the obstructions.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;

use crate::canonical::{canonical_form_with_bound, canonical_masks, CanonicalKey};
use crate::complex::{BitComplex, Face, SimplicialComplex, Vertex};
use crate::error::{domain, Error, Result};
use crate::families::{random_complex, Seed};
use crate::format::write_complex;
use crate::shelling::{find_shelling, is_shellable, is_shelling, SearchBudget, SearchOutcome, Shellability, ShellingCertificate};

/// Largest vertex count for which `is_obstruction` will scan every proper
/// induced subcomplex.
pub const MAX_OBSTRUCTION_TEST_VERTICES: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ObstructionKind {
    Shellability,
    Purity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Decided,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// The complex itself is shellable.
    Shelling(ShellingCertificate),
    /// The complex itself is pure.
    Pure,
    /// A proper vertex subset whose induced subcomplex lacks the property.
    Subset(Vec<Vertex>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub complex: SimplicialComplex,
    pub kind: ObstructionKind,
    /// Meaningful only when `status` is `Decided`.
    pub verdict: bool,
    pub status: Status,
    /// Present exactly for decided negative verdicts.
    pub witness: Option<Witness>,
    /// Why the report is undecided.
    pub reason: Option<String>,
}

impl ObstructionReport {
    pub fn is_decided(&self) -> bool {
        self.status == Status::Decided
    }

    /// Decided and positive.
    pub fn is_obstruction(&self) -> bool {
        self.is_decided() && self.verdict
    }

    /// Rechecks a negative verdict from its witness alone. Positive and
    /// undecided reports have nothing to replay and return `Ok(true)`.
    pub fn verify_witness(&self, budget: &SearchBudget) -> Result<bool> {
        let Some(w) = &self.witness else {
            return Ok(self.verdict || !self.is_decided());
        };
        if self.verdict {
            return Ok(false);
        }
        Ok(match (w, self.kind) {
            (Witness::Shelling(cert), ObstructionKind::Shellability) => {
                is_shelling(&self.complex, &cert.order)?.is_valid()
            }
            (Witness::Pure, ObstructionKind::Purity) => self.complex.is_pure()?,
            (Witness::Subset(u), kind) => {
                if u.len() >= self.complex.vertex_count() {
                    return Ok(false);
                }
                let sub = self.complex.induced(u)?;
                match kind {
                    ObstructionKind::Shellability => {
                        is_shellable(&sub, budget)? == Shellability::NotShellable
                    }
                    ObstructionKind::Purity => !sub.is_pure()?,
                }
            }
            _ => false,
        })
    }
}

fn require_proper(k: &SimplicialComplex) -> Result<()> {
    if k.is_void() || k.is_irrelevant() {
        return domain("obstruction tests need a complex with at least one vertex");
    }
    if k.vertex_count() > MAX_OBSTRUCTION_TEST_VERTICES {
        return Err(Error::Capability(format!(
            "obstruction tests scan every induced subcomplex; {} vertices exceeds {}",
            k.vertex_count(),
            MAX_OBSTRUCTION_TEST_VERTICES
        )));
    }
    Ok(())
}

/// Vertex subsets of `vs` of the given size, lexicographically.
fn subsets_of(vs: &[Vertex], size: usize) -> Vec<Vec<Vertex>> {
    Face::from_sorted(vs.to_vec())
        .subsets_of_size(size)
        .into_iter()
        .map(|f| f.vertices().to_vec())
        .collect()
}

fn undecided(k: &SimplicialComplex, kind: ObstructionKind, reason: String) -> ObstructionReport {
    ObstructionReport {
        complex: k.clone(),
        kind,
        verdict: false,
        status: Status::Undecided,
        witness: None,
        reason: Some(reason),
    }
}

fn decided(k: &SimplicialComplex, kind: ObstructionKind, witness: Option<Witness>) -> ObstructionReport {
    ObstructionReport {
        complex: k.clone(),
        kind,
        verdict: witness.is_none(),
        status: Status::Decided,
        witness,
        reason: None,
    }
}

/// Decides whether `k` is nonshellable with every proper induced subcomplex
/// shellable. Proper subsets are scanned by increasing size, so a negative
/// witness subset is one of minimum size.
pub fn is_obstruction(k: &SimplicialComplex, budget: &SearchBudget) -> Result<ObstructionReport> {
    let kind = ObstructionKind::Shellability;
    require_proper(k)?;
    match find_shelling(k, budget, false)? {
        SearchOutcome::Certificate(cert) => return Ok(decided(k, kind, Some(Witness::Shelling(cert)))),
        SearchOutcome::Undecided(why) => return Ok(undecided(k, kind, why)),
        SearchOutcome::NoShelling => {}
    }
    let n = k.vertex_count();
    let mut unknown = None;
    for size in 1..n {
        for u in subsets_of(k.vertices(), size) {
            match is_shellable(&k.induced(&u)?, budget)? {
                Shellability::Shellable => {}
                Shellability::NotShellable => return Ok(decided(k, kind, Some(Witness::Subset(u)))),
                Shellability::Undecided => {
                    unknown.get_or_insert(u);
                }
            }
        }
    }
    Ok(match unknown {
        Some(u) => undecided(k, kind, format!("could not decide the subcomplex induced on {u:?}")),
        None => decided(k, kind, None),
    })
}

/// Decides whether `k` is nonpure with every proper induced subcomplex pure.
pub fn is_purity_obstruction(k: &SimplicialComplex) -> Result<ObstructionReport> {
    let kind = ObstructionKind::Purity;
    require_proper(k)?;
    if k.is_pure()? {
        return Ok(decided(k, kind, Some(Witness::Pure)));
    }
    for size in 1..k.vertex_count() {
        for u in subsets_of(k.vertices(), size) {
            if !k.induced(&u)?.is_pure()? {
                return Ok(decided(k, kind, Some(Witness::Subset(u))));
            }
        }
    }
    Ok(decided(k, kind, None))
}

/// A minimum-size vertex subset inducing a nonshellable subcomplex of a
/// nonshellable 2-dimensional `k`, least in lexicographic order among those
/// of that size.
pub fn nonshellable_witness(k: &SimplicialComplex, budget: &SearchBudget) -> Result<Vec<Vertex>> {
    if k.dim() != Some(2) {
        return domain("witness search needs a 2-dimensional complex");
    }
    if k.vertex_count() > 64 {
        return Err(Error::Capability("witness search supports at most 64 vertices".into()));
    }
    match is_shellable(k, budget)? {
        Shellability::Shellable => return domain("the complex is shellable"),
        Shellability::Undecided => {
            return Err(Error::Capability("could not decide shellability within budget".into()))
        }
        Shellability::NotShellable => {}
    }
    for size in 1..=k.vertex_count() {
        for u in subsets_of(k.vertices(), size) {
            match is_shellable(&k.induced(&u)?, budget)? {
                Shellability::Shellable => {}
                Shellability::NotShellable => return Ok(u),
                Shellability::Undecided => {
                    return Err(Error::Capability(format!(
                        "could not decide the subcomplex induced on {u:?} within budget"
                    )))
                }
            }
        }
    }
    Err(Error::Internal("the whole complex should have been found nonshellable".into()))
}

// ---------------------------------------------------------------------------
// Enumeration

#[derive(Clone, Debug, PartialEq)]
pub enum EnumerationMode {
    Exhaustive,
    /// `samples` random complexes from `random_complex(n, d, density, seed + i)`.
    /// Only samples using all `n` vertices can contribute classes.
    Sampled { samples: usize, seed: Seed, density: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct EnumerationTask {
    pub dimension: usize,
    pub vertex_count: usize,
    pub budget: SearchBudget,
    pub mode: EnumerationMode,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Exhaustive,
    Sampled,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Exhaustive => "exhaustive",
            Provenance::Sampled => "sampled",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnumerationStats {
    /// Candidates whose property was evaluated (exhaustive) or samples drawn
    /// (sampled).
    pub examined: u64,
    /// Classes passing every induced-subcomplex check, per vertex count.
    pub hereditary_classes: Vec<usize>,
    /// Distinct isomorphism classes among the samples.
    pub distinct_samples: u64,
    /// Samples whose vertex count equals the requested one.
    pub full_support_samples: u64,
    pub undecided: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EnumerationReport {
    pub kind: ObstructionKind,
    pub dimension: usize,
    pub vertex_count: usize,
    pub provenance: Provenance,
    /// False when some candidate could not be decided within budget.
    pub complete: bool,
    /// Sorted by key, one representative on vertices `1..=n` per class.
    pub classes: Vec<(CanonicalKey, SimplicialComplex)>,
    pub stats: EnumerationStats,
}

/// Largest vertex count allowed in exhaustive mode.
pub const EXHAUSTIVE_VERTEX_BOUND: usize = 6;

/// Vertex counts at which exhaustive shellability enumeration must run
/// under an explicit time limit.
fn needs_time_limit(kind: ObstructionKind, d: usize, n: usize) -> bool {
    kind == ObstructionKind::Shellability && d == 2 && n >= 6
}

pub fn enumerate_obstructions(task: &EnumerationTask) -> Result<EnumerationReport> {
    enumerate(ObstructionKind::Shellability, task)
}

pub fn enumerate_purity_obstructions(task: &EnumerationTask) -> Result<EnumerationReport> {
    enumerate(ObstructionKind::Purity, task)
}

fn enumerate(kind: ObstructionKind, task: &EnumerationTask) -> Result<EnumerationReport> {
    let (d, n) = (task.dimension, task.vertex_count);
    match &task.mode {
        EnumerationMode::Exhaustive => {
            let bound = EXHAUSTIVE_VERTEX_BOUND;
            if n > bound {
                return Err(Error::Capability(format!(
                    "exhaustive enumeration is limited to {bound} vertices"
                )));
            }
            if needs_time_limit(kind, d, n) && task.budget.time_limit.is_none() {
                return Err(Error::Capability(format!(
                    "exhaustive enumeration in dimension {d} on {n} vertices needs a time limit"
                )));
            }
            let deadline = task.budget.time_limit.map(|t| Instant::now() + t);
            let scan = match kind {
                ObstructionKind::Shellability => {
                    let budget = task.budget.clone();
                    hereditary_scan(n, d, deadline, move |k| {
                        Ok(match is_shellable(k, &budget)? {
                            Shellability::Shellable => Some(true),
                            Shellability::NotShellable => Some(false),
                            Shellability::Undecided => None,
                        })
                    })?
                }
                ObstructionKind::Purity => hereditary_scan(n, d, deadline, |k| Ok(Some(k.is_pure()?)))?,
            };
            let classes = scan.minimal_failures[n]
                .iter()
                .filter(|(_, k)| k.dim() == Some(d as isize))
                .cloned()
                .collect();
            Ok(EnumerationReport {
                kind,
                dimension: d,
                vertex_count: n,
                provenance: Provenance::Exhaustive,
                complete: scan.complete,
                classes,
                stats: EnumerationStats {
                    examined: scan.examined,
                    hereditary_classes: scan.levels.iter().map(Vec::len).collect(),
                    undecided: scan.undecided,
                    ..Default::default()
                },
            })
        }
        EnumerationMode::Sampled { samples, seed, density } => {
            sampled(kind, task, *samples, *seed, *density)
        }
    }
}

fn sampled(
    kind: ObstructionKind,
    task: &EnumerationTask,
    samples: usize,
    seed: Seed,
    density: f64,
) -> Result<EnumerationReport> {
    let (d, n) = (task.dimension, task.vertex_count);
    let deadline = task.budget.time_limit.map(|t| Instant::now() + t);
    let drawn = (0..samples)
        .map(|i| random_complex(n, d, density, Seed(seed.0.wrapping_add(i as u64))))
        .collect::<Result<Vec<_>>>()?;
    let full_support = drawn.iter().filter(|k| k.vertex_count() == n).count() as u64;

    let mut seen = HashSet::new();
    let mut distinct = Vec::new();
    for k in drawn {
        let (key, rep) = canonical_form_with_bound(&k, n.max(1))?;
        if seen.insert(key.clone()) {
            distinct.push((key, rep));
        }
    }
    let timed_out = AtomicBool::new(false);
    let results = distinct
        .par_iter()
        .map(|(key, k)| -> Result<Option<(Option<(CanonicalKey, SimplicialComplex)>, bool)>> {
            if deadline.is_some_and(|t| Instant::now() > t) {
                timed_out.store(true, Ordering::Relaxed);
                return Ok(None);
            }
            let report = match kind {
                ObstructionKind::Shellability => is_obstruction(k, &task.budget)?,
                ObstructionKind::Purity => is_purity_obstruction(k)?,
            };
            let hit = (report.is_obstruction() && k.dim() == Some(d as isize) && k.vertex_count() == n)
                .then(|| (key.clone(), k.clone()));
            Ok(Some((hit, !report.is_decided())))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut undecided = 0;
    let mut classes = Vec::new();
    for r in results.iter().flatten() {
        if r.1 {
            undecided += 1;
        }
        if let Some(hit) = &r.0 {
            classes.push(hit.clone());
        }
    }
    classes.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(EnumerationReport {
        kind,
        dimension: d,
        vertex_count: n,
        provenance: Provenance::Sampled,
        complete: undecided == 0 && !timed_out.load(Ordering::Relaxed),
        classes,
        stats: EnumerationStats {
            examined: samples as u64,
            hereditary_classes: Vec::new(),
            distinct_samples: distinct.len() as u64,
            full_support_samples: full_support,
            undecided,
        },
    })
}

/// Every isomorphism class of complexes on exactly `n` vertices with
/// dimension at most `max_dim`, sorted by key.
pub fn all_classes(n: usize, max_dim: usize) -> Result<Vec<(CanonicalKey, SimplicialComplex)>> {
    if n > EXHAUSTIVE_VERTEX_BOUND {
        return Err(Error::Capability(format!("class listing is limited to {EXHAUSTIVE_VERTEX_BOUND} vertices")));
    }
    let scan = hereditary_scan(n, max_dim, None, |_| Ok(Some(true)))?;
    Ok(scan.levels.into_iter().nth(n).unwrap_or_default())
}

/// Output of [`hereditary_scan`]. Index `m` of each vector refers to
/// complexes on exactly `m` vertices.
#[derive(Clone, Debug, Default)]
pub struct HereditaryScan {
    /// Classes all of whose induced subcomplexes (itself included) pass.
    pub levels: Vec<Vec<(CanonicalKey, SimplicialComplex)>>,
    /// Classes that fail while every proper induced subcomplex passes.
    pub minimal_failures: Vec<Vec<(CanonicalKey, SimplicialComplex)>>,
    pub examined: u64,
    pub undecided: u64,
    pub complete: bool,
}

/// Orderly generation of classes of dimension at most `max_dim` on up to
/// `max_n` vertices, pruned by an induced-hereditary property. The property
/// returns `None` when it cannot decide; such candidates are dropped and
/// the scan is marked incomplete.
pub fn hereditary_scan<P>(
    max_n: usize,
    max_dim: usize,
    deadline: Option<Instant>,
    property: P,
) -> Result<HereditaryScan>
where
    P: Fn(&SimplicialComplex) -> Result<Option<bool>> + Sync,
{
    if max_n > 12 {
        return Err(Error::Capability("enumeration is limited to 12 vertices".into()));
    }
    let mut scan = HereditaryScan { complete: true, ..Default::default() };
    let empty = SimplicialComplex::irrelevant();
    let (key0, _) = canonical_masks(0, &[0]);
    match property(&empty)? {
        Some(true) => scan.levels.push(vec![(key0, empty)]),
        Some(false) => {
            scan.levels.push(Vec::new());
            scan.minimal_failures.push(vec![(key0, empty)]);
        }
        None => {
            scan.levels.push(Vec::new());
            scan.complete = false;
        }
    }
    if scan.minimal_failures.is_empty() {
        scan.minimal_failures.push(Vec::new());
    }

    let examined = AtomicU64::new(0);
    let undecided = AtomicU64::new(0);
    let timed_out = AtomicBool::new(false);
    for m in 1..=max_n {
        let below: HashSet<&CanonicalKey> = scan.levels[m - 1].iter().map(|(k, _)| k).collect();
        let seen: Mutex<HashSet<CanonicalKey>> = Mutex::new(HashSet::new());
        type Found = (Vec<(CanonicalKey, SimplicialComplex)>, Vec<(CanonicalKey, SimplicialComplex)>);
        let parts: Vec<Found> = scan.levels[m - 1]
            .par_iter()
            .map(|(_, base)| -> Result<Found> {
                let mut pass = Vec::new();
                let mut fail = Vec::new();
                let base_masks = masks_of(base);
                let mut failure = None;
                for_each_extension(&base_masks, m, max_dim, &mut |masks| {
                    if timed_out.load(Ordering::Relaxed) {
                        return false;
                    }
                    if deadline.is_some_and(|t| Instant::now() > t) {
                        timed_out.store(true, Ordering::Relaxed);
                        return false;
                    }
                    let (key, canon) = canonical_masks(m, &masks);
                    if !seen.lock().expect("poisoned").insert(key.clone()) {
                        return true;
                    }
                    let hereditary = (0..m - 1).all(|v| {
                        let del = delete_vertex(&masks, v);
                        below.contains(&canonical_masks(m - 1, &del).0)
                    });
                    if !hereditary {
                        return true;
                    }
                    let k = complex_of(&canon);
                    examined.fetch_add(1, Ordering::Relaxed);
                    match property(&k) {
                        Ok(Some(true)) => pass.push((key, k)),
                        Ok(Some(false)) => fail.push((key, k)),
                        Ok(None) => {
                            undecided.fetch_add(1, Ordering::Relaxed);
                        }
                        Err(e) => {
                            failure = Some(e);
                            return false;
                        }
                    }
                    true
                });
                if let Some(e) = failure {
                    return Err(e);
                }
                Ok((pass, fail))
            })
            .collect::<Result<Vec<_>>>()?;
        let (mut pass, mut fail): Found = (Vec::new(), Vec::new());
        for (p, f) in parts {
            pass.extend(p);
            fail.extend(f);
        }
        pass.sort_by(|a, b| a.0.cmp(&b.0));
        fail.sort_by(|a, b| a.0.cmp(&b.0));
        scan.levels.push(pass);
        scan.minimal_failures.push(fail);
    }
    scan.examined = examined.into_inner();
    scan.undecided = undecided.into_inner();
    if scan.undecided > 0 || timed_out.into_inner() {
        scan.complete = false;
    }
    Ok(scan)
}

fn masks_of(k: &SimplicialComplex) -> Vec<u64> {
    if k.is_irrelevant() {
        return vec![0];
    }
    BitComplex::new(k).expect("at most 12 vertices").facets
}

fn complex_of(masks: &[u64]) -> SimplicialComplex {
    SimplicialComplex::from_faces(masks.iter().map(|&m| {
        Face::from_sorted((0..64u32).filter(|i| m >> i & 1 == 1).map(|i| i + 1).collect())
    }))
}

/// Inclusion-maximal members, sorted.
fn maximal(mut faces: Vec<u64>) -> Vec<u64> {
    faces.sort_unstable_by_key(|f| std::cmp::Reverse(f.count_ones()));
    let mut out: Vec<u64> = Vec::with_capacity(faces.len());
    for f in faces {
        if !out.iter().any(|&g| f & g == f) {
            out.push(f);
        }
    }
    out.sort_unstable();
    out
}

/// Removes bit `v` and shifts the higher bits down.
fn delete_vertex(masks: &[u64], v: usize) -> Vec<u64> {
    let low = (1u64 << v) - 1;
    maximal(masks.iter().map(|&f| (f & low) | ((f >> (v + 1)) << v)).collect())
}

/// Visits every complex on `m` vertices obtained from `base` (on bits
/// `0..m-1`) by adding vertex `m-1` with a nonvoid link of dimension below
/// `max_dim`. The visitor returns false to stop early.
fn for_each_extension(base: &[u64], m: usize, max_dim: usize, visit: &mut dyn FnMut(Vec<u64>) -> bool) {
    let apex = 1u64 << (m - 1);
    // nonempty faces of base of size at most max_dim, by size then mask
    let mut index: HashMap<u64, usize> = HashMap::new();
    for &f in base {
        let mut sub = f;
        while sub != 0 {
            if sub.count_ones() as usize <= max_dim {
                index.entry(sub).or_insert(0);
            }
            sub = (sub - 1) & f;
        }
    }
    let mut faces: Vec<u64> = index.keys().copied().collect();
    faces.sort_unstable_by_key(|&f| (f.count_ones(), f));
    for (i, f) in faces.iter().enumerate() {
        index.insert(*f, i);
    }
    let boundary: Vec<Vec<usize>> = faces
        .iter()
        .map(|&f| {
            if f.count_ones() == 1 {
                return Vec::new();
            }
            let mut out = Vec::new();
            let mut rest = f;
            while rest != 0 {
                let b = rest & rest.wrapping_neg();
                rest &= rest - 1;
                out.push(index[&(f & !b)]);
            }
            out
        })
        .collect();

    struct Walk<'a> {
        faces: &'a [u64],
        boundary: &'a [Vec<usize>],
        base: &'a [u64],
        apex: u64,
        chosen: Vec<bool>,
    }

    impl Walk<'_> {
        fn run(&mut self, i: usize, visit: &mut dyn FnMut(Vec<u64>) -> bool) -> bool {
            if i == self.faces.len() {
                let mut all: Vec<u64> = self.base.iter().copied().filter(|&f| f != 0).collect();
                let before = all.len();
                all.extend((0..i).filter(|&j| self.chosen[j]).map(|j| self.faces[j] | self.apex));
                if all.len() == before {
                    all.push(self.apex);
                }
                return visit(maximal(all));
            }
            if !self.run(i + 1, visit) {
                return false;
            }
            if self.boundary[i].iter().all(|&j| self.chosen[j]) {
                self.chosen[i] = true;
                let go = self.run(i + 1, visit);
                self.chosen[i] = false;
                return go;
            }
            true
        }
    }

    let mut walk = Walk { faces: &faces, boundary: &boundary, base, apex, chosen: vec![false; faces.len()] };
    walk.run(0, visit);
}

/// Writes `<digest>.complex` per class and an `index.txt` with one
/// `digest key vertices facets flag provenance` row per class.
pub fn write_report_dir(report: &EnumerationReport, dir: &Path) -> Result<()> {
    let io = |e: std::io::Error| Error::Domain(format!("cannot write {}: {e}", dir.display()));
    fs::create_dir_all(dir).map_err(io)?;
    let mut index = String::from("# digest key vertices facets flag provenance\n");
    for (key, k) in &report.classes {
        let digest = key.digest();
        let mut text = format!("# key {key}\n# provenance {}\n", report.provenance.as_str());
        text.push_str(&write_complex(k));
        fs::write(dir.join(format!("{digest}.complex")), text).map_err(io)?;
        writeln!(
            index,
            "{digest} {key} {} {} {} {}",
            k.vertex_count(),
            k.facet_count(),
            k.is_flag()?,
            report.provenance.as_str()
        )
        .unwrap();
    }
    fs::write(dir.join("index.txt"), index).map_err(io)?;
    Ok(())
}
