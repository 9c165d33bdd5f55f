//! Nonpure shellings: verification, exact search and the vertex-splitting
//! construction.
//!
//! An order `F1, …, Fm` of the facets is a shelling when, for every `k ≥ 2`,
//! the complex `F̄k ∩ (F̄1 ∪ … ∪ F̄k-1)` is pure of dimension `dim Fk − 1`.
//! Whether a facet may extend a prefix depends only on the set of facets in
//! the prefix, so the search runs over subsets of facets and remembers the
//! subsets from which no completion exists.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use crate::complex::{BitComplex, Face, SimplicialComplex, Vertex};
use crate::error::{domain, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_facet_count_for_exact: usize,
    pub max_states: usize,
    pub time_limit: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_facet_count_for_exact: 24, max_states: 50_000_000, time_limit: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingOrder(pub Vec<Face>);

impl ShellingOrder {
    pub fn facets(&self) -> &[Face] {
        &self.0
    }

    /// The facets of `k` in lexicographic order.
    pub fn lex(k: &SimplicialComplex) -> ShellingOrder {
        ShellingOrder(k.facets().to_vec())
    }
}

/// A shelling order with the intersection recorded at every step `k ≥ 2`.
/// `step_intersections[i]` lists the facets of the intersection at step `i + 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingCertificate {
    pub order: ShellingOrder,
    pub step_intersections: Vec<Vec<Face>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShellingCheck {
    Valid,
    /// First violating step (1-based) and the intersection found there.
    Fails { step: usize, intersection: SimplicialComplex },
}

impl ShellingCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, ShellingCheck::Valid)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Certificate(ShellingCertificate),
    NoShelling,
    Undecided(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shellability {
    Shellable,
    NotShellable,
    Undecided,
}

impl Shellability {
    pub fn is_shellable(self) -> bool {
        self == Shellability::Shellable
    }
}

fn step_intersection(f: &Face, prefix: &[Face]) -> SimplicialComplex {
    SimplicialComplex::from_faces(prefix.iter().map(|g| f.intersection(g)))
}

fn step_condition_holds(f: &Face, inter: &SimplicialComplex) -> bool {
    inter.facets().iter().all(|g| g.len() + 1 == f.len())
}

fn require_permutation(k: &SimplicialComplex, order: &ShellingOrder) -> Result<()> {
    let mut sorted = order.0.clone();
    sorted.sort();
    if sorted.as_slice() != k.facets() {
        return domain("order is not a permutation of the facets of the complex");
    }
    Ok(())
}

/// Checks the nonpure shelling condition step by step.
pub fn is_shelling(k: &SimplicialComplex, order: &ShellingOrder) -> Result<ShellingCheck> {
    if k.is_void() {
        return domain("the void complex has no shellings");
    }
    require_permutation(k, order)?;
    for step in 1..order.0.len() {
        let f = &order.0[step];
        let inter = step_intersection(f, &order.0[..step]);
        if !step_condition_holds(f, &inter) {
            return Ok(ShellingCheck::Fails { step: step + 1, intersection: inter });
        }
    }
    Ok(ShellingCheck::Valid)
}

/// Builds the certificate for an order already known to be a shelling.
pub fn certify(k: &SimplicialComplex, order: ShellingOrder) -> Result<ShellingCertificate> {
    match is_shelling(k, &order)? {
        ShellingCheck::Valid => {}
        ShellingCheck::Fails { step, .. } => {
            return domain(format!("order fails the shelling condition at step {step}"))
        }
    }
    let step_intersections = (1..order.0.len())
        .map(|i| step_intersection(&order.0[i], &order.0[..i]).facets().to_vec())
        .collect();
    Ok(ShellingCertificate { order, step_intersections })
}

trait VertexSet: Clone {
    fn meet(&self, other: &Self) -> Self;
    fn size(&self) -> usize;
    fn within(&self, other: &Self) -> bool;
}

impl VertexSet for u64 {
    fn meet(&self, other: &Self) -> Self {
        self & other
    }
    fn size(&self) -> usize {
        self.count_ones() as usize
    }
    fn within(&self, other: &Self) -> bool {
        self & !other == 0
    }
}

impl VertexSet for Face {
    fn meet(&self, other: &Self) -> Self {
        self.intersection(other)
    }
    fn size(&self) -> usize {
        self.len()
    }
    fn within(&self, other: &Self) -> bool {
        self.is_subset(other)
    }
}

enum Stop {
    States,
    Time,
}

struct Search<'a, S: VertexSet> {
    facets: &'a [S],
    sizes: Vec<usize>,
    decreasing: bool,
    dead: HashSet<u64>,
    order: Vec<usize>,
    states: usize,
    max_states: usize,
    deadline: Option<Instant>,
}

impl<S: VertexSet> Search<'_, S> {
    fn can_extend(&self, i: usize, placed: u64) -> bool {
        if placed == 0 {
            return true;
        }
        let f = &self.facets[i];
        let need = self.sizes[i] - 1;
        let mut tops: Vec<S> = Vec::new();
        let mut lower: Vec<S> = Vec::new();
        let mut rest = placed;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let x = f.meet(&self.facets[j]);
            if x.size() == need {
                tops.push(x);
            } else {
                lower.push(x);
            }
        }
        !tops.is_empty() && lower.iter().all(|x| tops.iter().any(|t| x.within(t)))
    }

    fn run(&mut self, placed: u64, full: u64) -> std::result::Result<bool, Stop> {
        if placed == full {
            return Ok(true);
        }
        if self.dead.contains(&placed) {
            return Ok(false);
        }
        self.states += 1;
        if self.states > self.max_states {
            return Err(Stop::States);
        }
        if self.states % 4096 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() > d {
                    return Err(Stop::Time);
                }
            }
        }
        let max_unplaced = if self.decreasing {
            (0..self.facets.len())
                .filter(|&j| placed >> j & 1 == 0)
                .map(|j| self.sizes[j])
                .max()
                .unwrap_or(0)
        } else {
            0
        };
        for i in 0..self.facets.len() {
            if placed >> i & 1 == 1 {
                continue;
            }
            if self.decreasing && self.sizes[i] < max_unplaced {
                continue;
            }
            if self.can_extend(i, placed) {
                self.order.push(i);
                if self.run(placed | 1 << i, full)? {
                    return Ok(true);
                }
                self.order.pop();
            }
        }
        self.dead.insert(placed);
        Ok(false)
    }
}

fn search_order<S: VertexSet>(
    facets: &[S],
    budget: &SearchBudget,
    decreasing: bool,
) -> std::result::Result<Option<Vec<usize>>, Stop> {
    let m = facets.len();
    let mut s = Search {
        facets,
        sizes: facets.iter().map(VertexSet::size).collect(),
        decreasing,
        dead: HashSet::new(),
        order: Vec::with_capacity(m),
        states: 0,
        max_states: budget.max_states,
        deadline: budget.time_limit.map(|t| Instant::now() + t),
    };
    let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    Ok(if s.run(0, full)? { Some(s.order) } else { None })
}

/// Exact shelling search over subsets of facets, candidates tried in
/// lexicographic facet order. With `decreasing_dim` only orders of weakly
/// decreasing facet dimension are searched.
pub fn find_shelling(
    k: &SimplicialComplex,
    budget: &SearchBudget,
    decreasing_dim: bool,
) -> Result<SearchOutcome> {
    if k.is_void() {
        return domain("the void complex has no shellings");
    }
    let m = k.facet_count();
    if m > budget.max_facet_count_for_exact || m > 64 {
        return Ok(SearchOutcome::Undecided(format!(
            "{m} facets exceeds the exact-search bound of {}",
            budget.max_facet_count_for_exact.min(64)
        )));
    }
    let found = match BitComplex::new(k) {
        Some(bits) => search_order(&bits.facets, budget, decreasing_dim),
        None => search_order(k.facets(), budget, decreasing_dim),
    };
    match found {
        Err(Stop::States) => Ok(SearchOutcome::Undecided(format!(
            "state budget of {} exhausted",
            budget.max_states
        ))),
        Err(Stop::Time) => Ok(SearchOutcome::Undecided("time budget exhausted".into())),
        Ok(None) => Ok(SearchOutcome::NoShelling),
        Ok(Some(idx)) => {
            let order = ShellingOrder(idx.iter().map(|&i| k.facets()[i].clone()).collect());
            let cert = certify(k, order)
                .map_err(|e| Error::Internal(format!("search produced a non-shelling: {e}")))?;
            Ok(SearchOutcome::Certificate(cert))
        }
    }
}

pub fn is_shellable(k: &SimplicialComplex, budget: &SearchBudget) -> Result<Shellability> {
    Ok(match find_shelling(k, budget, false)? {
        SearchOutcome::Certificate(_) => Shellability::Shellable,
        SearchOutcome::NoShelling => Shellability::NotShellable,
        SearchOutcome::Undecided(_) => Shellability::Undecided,
    })
}

/// Concatenates a shelling of `K(V ∖ {v})` with the cone over a shelling of
/// the link of `v`, after checking every hypothesis that makes the result a
/// shelling of `K`.
pub fn lemma6_shelling(
    k: &SimplicialComplex,
    v: Vertex,
    deletion_order: &ShellingOrder,
    link_order: &ShellingOrder,
) -> Result<ShellingOrder> {
    let violation = |m: String| Err(Error::HypothesisViolation(m));
    if !k.has_vertex(v) {
        return violation(format!("vertex {v} is not in the complex"));
    }
    let deletion = k.deletion(v)?;
    let link = k.link(v)?;
    match is_shelling(&deletion, deletion_order) {
        Ok(ShellingCheck::Valid) => {}
        Ok(ShellingCheck::Fails { step, .. }) => {
            return violation(format!("deletion order fails the shelling condition at step {step}"))
        }
        Err(_) => return violation("deletion order is not an ordering of the facets of K(V∖{v})".into()),
    }
    match is_shelling(&link, link_order) {
        Ok(ShellingCheck::Valid) => {}
        Ok(ShellingCheck::Fails { step, .. }) => {
            return violation(format!("link order fails the shelling condition at step {step}"))
        }
        Err(_) => return violation("link order is not an ordering of the facets of the link".into()),
    }
    if let Some(shared) = link.facets().iter().find(|g| deletion.is_facet(g)) {
        return violation(format!("link facet {shared} is also a facet of the deletion"));
    }
    let mut out = deletion_order.0.clone();
    out.extend(link_order.0.iter().map(|g| g.with(v)));
    let order = ShellingOrder(out);
    if !is_shelling(k, &order)?.is_valid() {
        return Err(Error::Internal("combined order is not a shelling".into()));
    }
    Ok(order)
}
