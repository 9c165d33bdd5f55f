//! Finite posets with string labels, bounded posets and order complexes.
//!
//! Elements keep their declaration order; that order is the internal index
//! and, for order complexes, the vertex label. The strict order relation is
//! stored closed, with the cover relation derived from it.

use std::collections::HashMap;

use rand::Rng;

use crate::complex::{Face, SimplicialComplex, Vertex};
use crate::error::{domain, Error, Result};
use crate::families::Seed;

#[derive(Clone, Debug)]
pub struct FinitePoset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    less: Vec<Vec<bool>>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
}

impl PartialEq for FinitePoset {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.less == other.less
    }
}

impl Eq for FinitePoset {}

/// Two disjoint 2-chains `a < b`, `c < d` with no other comparabilities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoPlusTwo {
    pub first: (usize, usize),
    pub second: (usize, usize),
}

impl TwoPlusTwo {
    pub fn elements(&self) -> [usize; 4] {
        [self.first.0, self.first.1, self.second.0, self.second.1]
    }
}

impl FinitePoset {
    /// Builds a poset from elements and relation pairs `(x, y)` meaning
    /// `x < y`. The pairs need not be covers; they are closed transitively
    /// and the cover relation is recomputed.
    pub fn from_covers<S: AsRef<str>>(elements: &[S], pairs: &[(S, S)]) -> Result<FinitePoset> {
        let labels: Vec<String> = elements.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(Error::Malformed(format!("invalid element label {l:?}")));
            }
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::Malformed(format!("element {l} declared twice")));
            }
        }
        let n = labels.len();
        let mut succ = vec![Vec::new(); n];
        for (x, y) in pairs {
            let (x, y) = (x.as_ref(), y.as_ref());
            let xi = *index.get(x).ok_or_else(|| Error::Domain(format!("unknown element {x}")))?;
            let yi = *index.get(y).ok_or_else(|| Error::Domain(format!("unknown element {y}")))?;
            succ[xi].push(yi);
        }
        let mut less = vec![vec![false; n]; n];
        for s in 0..n {
            let mut stack = succ[s].clone();
            while let Some(v) = stack.pop() {
                if !less[s][v] {
                    less[s][v] = true;
                    stack.extend(succ[v].iter().copied());
                }
            }
            if less[s][s] {
                return Err(Error::NotAPoset(format!("cycle through {}", labels[s])));
            }
        }
        Ok(Self::from_relation(labels, less))
    }

    pub(crate) fn from_relation(labels: Vec<String>, less: Vec<Vec<bool>>) -> FinitePoset {
        let n = labels.len();
        let index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        for x in 0..n {
            for y in 0..n {
                if less[x][y] && !(0..n).any(|z| less[x][z] && less[z][y]) {
                    upper[x].push(y);
                    lower[y].push(x);
                }
            }
        }
        FinitePoset { labels, index, less, upper, lower }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::Domain(format!("unknown element {label}")))
    }

    /// Strict order `x < y`.
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.less[x][y]
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        x == y || self.less[x][y]
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.le(x, y) || self.le(y, x)
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    /// Every cover pair `(x, y)` with `x ⋖ y`, sorted by index.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|x| self.upper[x].iter().map(move |&y| (x, y)))
            .collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.lower[x].is_empty()).collect()
    }

    /// The order relation restricted to `subset`, elements kept in this
    /// poset's order.
    pub fn induced_subposet<S: AsRef<str>>(&self, subset: &[S]) -> Result<FinitePoset> {
        let mut keep = vec![false; self.len()];
        for s in subset {
            keep[self.index_of(s.as_ref())?] = true;
        }
        let idx: Vec<usize> = (0..self.len()).filter(|&i| keep[i]).collect();
        Ok(self.restrict(&idx))
    }

    pub(crate) fn restrict(&self, idx: &[usize]) -> FinitePoset {
        let labels = idx.iter().map(|&i| self.labels[i].clone()).collect();
        let less = idx
            .iter()
            .map(|&x| idx.iter().map(|&y| self.less[x][y]).collect())
            .collect();
        Self::from_relation(labels, less)
    }

    /// An induced copy of two disjoint 2-element chains, if one exists.
    pub fn contains_2plus2(&self) -> Option<TwoPlusTwo> {
        let n = self.len();
        let rel: Vec<(usize, usize)> = (0..n)
            .flat_map(|x| (0..n).filter(move |&y| self.less[x][y]).map(move |y| (x, y)))
            .collect();
        for (i, &(a, b)) in rel.iter().enumerate() {
            for &(c, d) in &rel[i + 1..] {
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                if !self.comparable(a, c)
                    && !self.comparable(a, d)
                    && !self.comparable(b, c)
                    && !self.comparable(b, d)
                {
                    return Some(TwoPlusTwo { first: (a, b), second: (c, d) });
                }
            }
        }
        None
    }

    pub fn is_interval_order(&self) -> bool {
        self.contains_2plus2().is_none()
    }

    /// Poset whose elements are labeled intervals, with `x < y` iff `x`
    /// ends strictly before `y` starts.
    pub fn from_intervals<S: AsRef<str>>(rep: &[(S, i64, i64)]) -> Result<FinitePoset> {
        if let Some((l, a, b)) = rep.iter().find(|(_, a, b)| a > b) {
            return domain(format!("interval for {} has left end {a} > right end {b}", l.as_ref()));
        }
        let labels: Vec<&str> = rep.iter().map(|(l, _, _)| l.as_ref()).collect();
        let mut pairs = Vec::new();
        for (x, _, rx) in rep {
            for (y, ly, _) in rep {
                if rx < ly {
                    pairs.push((x.as_ref(), y.as_ref()));
                }
            }
        }
        Self::from_covers(&labels, &pairs)
    }

    /// Adjoins a new minimum and maximum.
    pub fn bounded_extension(&self) -> BoundedPoset {
        let fresh = |base: &str| {
            let mut l = base.to_string();
            while self.index.contains_key(&l) {
                l.insert(0, '_');
            }
            l
        };
        let (bot, top) = (fresh("bot"), fresh("top"));
        let n = self.len();
        let mut labels = Vec::with_capacity(n + 2);
        labels.push(bot);
        labels.extend(self.labels.iter().cloned());
        labels.push(top);
        let mut less = vec![vec![false; n + 2]; n + 2];
        for x in 0..n {
            for y in 0..n {
                less[x + 1][y + 1] = self.less[x][y];
            }
            less[0][x + 1] = true;
            less[x + 1][n + 1] = true;
        }
        less[0][n + 1] = true;
        BoundedPoset { poset: Self::from_relation(labels, less), bottom: 0, top: n + 1 }
    }

    /// Maximal chains of the subposet on the elements flagged in `within`,
    /// each listed bottom to top.
    pub(crate) fn maximal_chains_within(&self, within: &[bool]) -> Vec<Vec<usize>> {
        let n = self.len();
        let members: Vec<usize> = (0..n).filter(|&i| within[i]).collect();
        let next = |x: usize| -> Vec<usize> {
            let above: Vec<usize> = members.iter().copied().filter(|&y| self.less[x][y]).collect();
            above
                .iter()
                .copied()
                .filter(|&y| !above.iter().any(|&z| self.less[z][y]))
                .collect()
        };
        let starts: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&y| !members.iter().any(|&z| self.less[z][y]))
            .collect();
        let mut out = Vec::new();
        let mut stack: Vec<Vec<usize>> = starts.into_iter().rev().map(|s| vec![s]).collect();
        while let Some(chain) = stack.pop() {
            let succ = next(*chain.last().unwrap());
            if succ.is_empty() {
                out.push(chain);
            } else {
                for &y in succ.iter().rev() {
                    let mut c = chain.clone();
                    c.push(y);
                    stack.push(c);
                }
            }
        }
        out
    }

    pub(crate) fn chain_complex_within(&self, within: &[bool]) -> SimplicialComplex {
        let chains = self.maximal_chains_within(within);
        if chains.is_empty() {
            return SimplicialComplex::irrelevant();
        }
        SimplicialComplex::from_faces(chains.into_iter().map(|c| {
            Face::new(c.into_iter().map(|i| i as Vertex)).expect("chains have distinct elements")
        }))
    }

    /// Maximal chains, bottom to top.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        self.maximal_chains_within(&vec![true; self.len()])
    }
}

/// The order complex: chains of `p` as faces, vertex `i` standing for the
/// element with index `i`. The empty poset gives IRRELEVANT.
pub fn order_complex(p: &FinitePoset) -> SimplicialComplex {
    p.chain_complex_within(&vec![true; p.len()])
}

/// A poset with designated minimum and maximum, of length at least one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedPoset {
    poset: FinitePoset,
    bottom: usize,
    top: usize,
}

impl BoundedPoset {
    pub fn new(poset: FinitePoset, bottom: &str, top: &str) -> Result<BoundedPoset> {
        let b = poset.index_of(bottom)?;
        let t = poset.index_of(top)?;
        if b == t {
            return domain("bottom and top coincide");
        }
        if let Some(x) = (0..poset.len()).find(|&x| !poset.le(b, x) || !poset.le(x, t)) {
            return domain(format!("element {} is not between bottom and top", poset.label(x)));
        }
        Ok(BoundedPoset { poset, bottom: b, top: t })
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn atoms(&self) -> Vec<usize> {
        self.poset.upper_covers(self.bottom).to_vec()
    }

    /// Number of edges in a longest chain from bottom to top.
    pub fn length(&self) -> usize {
        let p = &self.poset;
        let mut height = vec![0usize; p.len()];
        let mut order: Vec<usize> = (0..p.len()).collect();
        order.sort_by_key(|&x| (0..p.len()).filter(|&y| p.lt(y, x)).count());
        for &x in &order {
            for &y in p.upper_covers(x) {
                height[y] = height[y].max(height[x] + 1);
            }
        }
        height[self.top]
    }

    /// Indices of the proper part `P̄`.
    pub fn proper_part(&self) -> Vec<usize> {
        (0..self.poset.len()).filter(|&x| x != self.bottom && x != self.top).collect()
    }

    /// `Δ(P̄)` with vertex `i` standing for element index `i` of this poset.
    pub fn proper_part_complex(&self) -> SimplicialComplex {
        let mut within = vec![true; self.poset.len()];
        within[self.bottom] = false;
        within[self.top] = false;
        self.poset.chain_complex_within(&within)
    }

    /// The closed interval `[a, 1̂]` as a bounded poset with bottom `a`.
    pub fn upper_interval(&self, a: usize) -> Result<BoundedPoset> {
        if a == self.top {
            return domain("the interval [1̂, 1̂] has length zero");
        }
        let idx: Vec<usize> = (0..self.poset.len()).filter(|&x| self.poset.le(a, x)).collect();
        let sub = self.poset.restrict(&idx);
        let bottom = idx.iter().position(|&x| x == a).expect("a in interval");
        let top = idx.iter().position(|&x| x == self.top).expect("top in interval");
        Ok(BoundedPoset { poset: sub, bottom, top })
    }

    /// `[a, 1̂]`, the atoms of this poset, and the covers of `a`, as labels.
    pub fn interval_and_atoms(&self, a: &str) -> Result<(BoundedPoset, Vec<String>, Vec<String>)> {
        let ai = self.poset.index_of(a)?;
        let names = |xs: &[usize]| xs.iter().map(|&x| self.poset.label(x).to_string()).collect();
        Ok((
            self.upper_interval(ai)?,
            names(&self.atoms()),
            names(self.poset.upper_covers(ai)),
        ))
    }

    pub fn is_interval_order(&self) -> bool {
        self.poset.is_interval_order()
    }
}

/// `from_intervals` over `k` seeded intervals with endpoints in `[0, 2k]`,
/// labeled `p1..pk`.
pub fn random_interval_order(k: usize, seed: Seed) -> Result<FinitePoset> {
    if k < 1 {
        return domain("need at least one element");
    }
    let mut rng = seed.rng();
    let hi = 2 * k as i64;
    let rep: Vec<(String, i64, i64)> = (1..=k)
        .map(|i| {
            let l = rng.gen_range(0..=hi);
            let r = rng.gen_range(l..=hi);
            (format!("p{i}"), l, r)
        })
        .collect();
    FinitePoset::from_intervals(&rep)
}
