//! Shellability machinery for bounded interval orders: the precedence
//! relation on atoms, recursive atom orderings, falling chains, the Betti
//! number recursion, and an explicit shelling of the order complex.
//!
//! Every interval `[x, 1̂]` of a bounded poset is upward closed, so all the
//! recursions here run on element indices of the original poset and are
//! memoized by the bottom element `x`.

use std::collections::{BTreeMap, HashMap};

use crate::complex::{Face, Vertex};
use crate::error::{domain, Error, Result};
use crate::poset::BoundedPoset;
use crate::shelling::{lemma6_shelling, ShellingOrder};

/// The relation `a ≺ b` iff `a` has a cover that is not above `b`,
/// on the atoms of a bounded interval order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomPrecedence {
    pub atoms: Vec<String>,
    pub prec: Vec<(String, String)>,
    pub linear_extension: Vec<String>,
    pub smallest_atom: String,
}

#[derive(Clone, Debug)]
struct Prec {
    atoms: Vec<usize>,
    rel: Vec<(usize, usize)>,
    extension: Vec<usize>,
}

impl Prec {
    fn minimal(&self) -> Vec<usize> {
        self.atoms
            .iter()
            .copied()
            .filter(|a| !self.rel.iter().any(|&(_, b)| b == *a))
            .collect()
    }
}

fn require_interval_order(p: &BoundedPoset) -> Result<()> {
    if let Some(w) = p.poset().contains_2plus2() {
        let l = |i: usize| p.poset().label(i).to_string();
        return Err(Error::NotIntervalOrder(format!(
            "induced 2+2: {} < {} and {} < {}",
            l(w.first.0),
            l(w.first.1),
            l(w.second.0),
            l(w.second.1)
        )));
    }
    Ok(())
}

/// True iff `[x, 1̂]` has length one.
fn is_unit_interval(p: &BoundedPoset, x: usize) -> bool {
    p.poset().upper_covers(x) == [p.top()]
}

fn precedence_at(p: &BoundedPoset, x: usize) -> Result<Prec> {
    let po = p.poset();
    let atoms = po.upper_covers(x).to_vec();
    let precedes = |a: usize, b: usize| a != b && po.upper_covers(a).iter().any(|&c| !po.lt(b, c));
    let rel: Vec<(usize, usize)> = atoms
        .iter()
        .flat_map(|&a| atoms.iter().map(move |&b| (a, b)))
        .filter(|&(a, b)| precedes(a, b))
        .collect();
    for &(a, b) in &rel {
        if rel.contains(&(b, a)) {
            return Err(Error::NotIntervalOrder(format!(
                "atom precedence is not antisymmetric on {} and {}",
                po.label(a),
                po.label(b)
            )));
        }
        for &(b2, c) in &rel {
            if b2 == b && a != c && !rel.contains(&(a, c)) {
                return Err(Error::NotIntervalOrder(format!(
                    "atom precedence is not transitive on {}, {}, {}",
                    po.label(a),
                    po.label(b),
                    po.label(c)
                )));
            }
        }
    }
    // label-least available atom first
    let mut remaining = atoms.clone();
    let mut extension = Vec::with_capacity(atoms.len());
    while !remaining.is_empty() {
        let next = remaining
            .iter()
            .copied()
            .filter(|&a| !rel.iter().any(|&(b, c)| c == a && remaining.contains(&b)))
            .min_by(|&a, &b| po.label(a).cmp(po.label(b)))
            .expect("an acyclic relation has a minimal element");
        extension.push(next);
        remaining.retain(|&a| a != next);
    }
    Ok(Prec { atoms, rel, extension })
}

pub fn atom_precedence(p: &BoundedPoset) -> Result<AtomPrecedence> {
    require_interval_order(p)?;
    let prec = precedence_at(p, p.bottom())?;
    let l = |i: &usize| p.poset().label(*i).to_string();
    Ok(AtomPrecedence {
        atoms: prec.atoms.iter().map(l).collect(),
        prec: prec.rel.iter().map(|(a, b)| (l(a), l(b))).collect(),
        linear_extension: prec.extension.iter().map(l).collect(),
        smallest_atom: l(&prec.extension[0]),
    })
}

/// Recursive atom ordering checker for the nonpure setting.
struct RaoChecker<'a> {
    p: &'a BoundedPoset,
    memo: HashMap<(usize, Vec<usize>), bool>,
}

impl RaoChecker<'_> {
    /// Atoms of `[aj, 1̂]` lying above some earlier atom.
    fn carried(&self, aj: usize, earlier: &[usize]) -> Vec<usize> {
        let po = self.p.poset();
        po.upper_covers(aj)
            .iter()
            .copied()
            .filter(|&z| earlier.iter().any(|&ai| po.le(ai, z)))
            .collect()
    }

    /// Condition (ii) for `aj` placed after `earlier`.
    fn meets_condition(&self, aj: usize, earlier: &[usize]) -> bool {
        let po = self.p.poset();
        for &ai in earlier {
            for y in 0..po.len() {
                if po.lt(ai, y) && po.lt(aj, y) {
                    let ok = po.upper_covers(aj).iter().any(|&z| {
                        po.le(z, y) && earlier.iter().any(|&ak| po.lt(ak, z))
                    });
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn admissible(&mut self, aj: usize, earlier: &[usize]) -> bool {
        if !self.meets_condition(aj, earlier) {
            return false;
        }
        let first = self.carried(aj, earlier);
        self.exists(aj, first)
    }

    /// Does `[x, 1̂]` admit a recursive atom ordering starting with the
    /// atoms in `first` (in some order)?
    fn exists(&mut self, x: usize, mut first: Vec<usize>) -> bool {
        if is_unit_interval(self.p, x) {
            return true;
        }
        first.sort_unstable();
        if let Some(&v) = self.memo.get(&(x, first.clone())) {
            return v;
        }
        let atoms = self.p.poset().upper_covers(x).to_vec();
        let mut dead = std::collections::HashSet::new();
        let mut prefix = Vec::new();
        let found = self.extend(&atoms, &first, &mut prefix, 0, &mut dead);
        self.memo.insert((x, first), found);
        found
    }

    fn extend(
        &mut self,
        atoms: &[usize],
        first: &[usize],
        prefix: &mut Vec<usize>,
        placed: u64,
        dead: &mut std::collections::HashSet<u64>,
    ) -> bool {
        if prefix.len() == atoms.len() {
            return true;
        }
        if dead.contains(&placed) {
            return false;
        }
        let pending_first = first.iter().any(|a| !prefix.contains(a));
        for (i, &a) in atoms.iter().enumerate() {
            if placed >> i & 1 == 1 || (pending_first && !first.contains(&a)) {
                continue;
            }
            if self.admissible(a, prefix) {
                prefix.push(a);
                if self.extend(atoms, first, prefix, placed | 1 << i, dead) {
                    return true;
                }
                prefix.pop();
            }
        }
        dead.insert(placed);
        false
    }
}

/// Checks that `ordering` (atom labels) is a recursive atom ordering of `p`.
pub fn verify_recursive_atom_ordering<S: AsRef<str>>(p: &BoundedPoset, ordering: &[S]) -> Result<bool> {
    let po = p.poset();
    let ord = ordering
        .iter()
        .map(|s| po.index_of(s.as_ref()))
        .collect::<Result<Vec<_>>>()?;
    let mut sorted = ord.clone();
    sorted.sort_unstable();
    let mut atoms = p.atoms();
    atoms.sort_unstable();
    if sorted != atoms {
        return domain("ordering is not a permutation of the atoms");
    }
    if is_unit_interval(p, p.bottom()) {
        return Ok(true);
    }
    let mut checker = RaoChecker { p, memo: HashMap::new() };
    Ok((0..ord.len()).all(|j| checker.admissible(ord[j], &ord[..j])))
}

/// Maximal chains that are falling under the descent rule, as label lists
/// from bottom to top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FallingChainSet {
    pub chains: Vec<Vec<String>>,
}

impl FallingChainSet {
    /// Number of falling chains by length (edge count).
    pub fn counts_by_length(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for c in &self.chains {
            *out.entry(c.len() - 1).or_default() += 1;
        }
        out
    }
}

struct Recursion<'a> {
    p: &'a BoundedPoset,
    prec: HashMap<usize, Prec>,
    chains: HashMap<usize, Vec<Vec<usize>>>,
    betti: HashMap<usize, BTreeMap<isize, u64>>,
}

impl<'a> Recursion<'a> {
    fn new(p: &'a BoundedPoset) -> Self {
        Recursion { p, prec: HashMap::new(), chains: HashMap::new(), betti: HashMap::new() }
    }

    fn smallest(&mut self, x: usize) -> Result<usize> {
        if !self.prec.contains_key(&x) {
            let pr = precedence_at(self.p, x)?;
            self.prec.insert(x, pr);
        }
        Ok(self.prec[&x].extension[0])
    }

    fn falling(&mut self, x: usize) -> Result<Vec<Vec<usize>>> {
        if let Some(c) = self.chains.get(&x) {
            return Ok(c.clone());
        }
        let out = if is_unit_interval(self.p, x) {
            vec![vec![x, self.p.top()]]
        } else {
            let a0 = self.smallest(x)?;
            let mut out = Vec::new();
            for &a in self.p.poset().upper_covers(x) {
                if a == a0 {
                    continue;
                }
                for c in self.falling(a)? {
                    let mut chain = Vec::with_capacity(c.len() + 1);
                    chain.push(x);
                    chain.extend(c);
                    out.push(chain);
                }
            }
            out
        };
        self.chains.insert(x, out.clone());
        Ok(out)
    }

    fn betti_with(&mut self, x: usize, a0: usize) -> Result<BTreeMap<isize, u64>> {
        let mut sum: BTreeMap<isize, u64> = BTreeMap::new();
        for &a in self.p.poset().upper_covers(x) {
            if a == a0 {
                continue;
            }
            for (i, b) in self.betti_from(a)? {
                *sum.entry(i + 1).or_default() += b;
            }
        }
        Ok(sum)
    }

    fn betti_from(&mut self, x: usize) -> Result<BTreeMap<isize, u64>> {
        if let Some(b) = self.betti.get(&x) {
            return Ok(b.clone());
        }
        let out = if is_unit_interval(self.p, x) {
            BTreeMap::from([(-1, 1)])
        } else {
            let a0 = self.smallest(x)?;
            self.betti_with(x, a0)?
        };
        self.betti.insert(x, out.clone());
        Ok(out)
    }
}

pub fn falling_chains(p: &BoundedPoset) -> Result<FallingChainSet> {
    require_interval_order(p)?;
    let mut r = Recursion::new(p);
    let chains = r
        .falling(p.bottom())?
        .into_iter()
        .map(|c| c.into_iter().map(|i| p.poset().label(i).to_string()).collect())
        .collect();
    Ok(FallingChainSet { chains })
}

/// Reduced Betti numbers of `Δ(P̄)` in degrees `i ≥ 0` by the atom
/// recursion; only nonzero entries are returned.
pub fn betti_interval_order(p: &BoundedPoset) -> Result<BTreeMap<isize, u64>> {
    require_interval_order(p)?;
    let mut r = Recursion::new(p);
    let all = r.betti_from(p.bottom())?;
    Ok(all.into_iter().filter(|&(i, b)| i >= 0 && b > 0).collect())
}

/// The same recursion with a caller-chosen smallest atom at the top level,
/// which must be minimal for the precedence relation.
pub fn betti_interval_order_with_smallest(p: &BoundedPoset, smallest: &str) -> Result<BTreeMap<isize, u64>> {
    require_interval_order(p)?;
    let a0 = p.poset().index_of(smallest)?;
    let prec = precedence_at(p, p.bottom())?;
    if !prec.minimal().contains(&a0) {
        return domain(format!("{smallest} is not a minimal atom"));
    }
    if is_unit_interval(p, p.bottom()) {
        return Ok(BTreeMap::new());
    }
    let mut r = Recursion::new(p);
    let all = r.betti_with(p.bottom(), a0)?;
    Ok(all.into_iter().filter(|&(i, b)| i >= 0 && b > 0).collect())
}

/// Shelling of `Δ(P̄)` built by repeatedly splitting off an atom all of
/// whose covers lie above another atom. Vertex `i` is element index `i`.
pub fn prop10_shelling(p: &BoundedPoset) -> Result<ShellingOrder> {
    require_interval_order(p)?;
    shell_subposet(p, &p.proper_part())
}

fn shell_subposet(p: &BoundedPoset, members: &[usize]) -> Result<ShellingOrder> {
    let po = p.poset();
    if members.is_empty() {
        return Ok(ShellingOrder(vec![Face::empty()]));
    }
    let minimal: Vec<usize> = members
        .iter()
        .copied()
        .filter(|&y| !members.iter().any(|&z| po.lt(z, y)))
        .collect();
    if let [a] = minimal[..] {
        let rest: Vec<usize> = members.iter().copied().filter(|&y| y != a).collect();
        let sub = shell_subposet(p, &rest)?;
        return Ok(ShellingOrder(sub.0.iter().map(|f| f.with(a as Vertex)).collect()));
    }
    let covers_within = |a: usize| -> Vec<usize> {
        let above: Vec<usize> = members.iter().copied().filter(|&y| po.lt(a, y)).collect();
        above
            .iter()
            .copied()
            .filter(|&y| !above.iter().any(|&z| po.lt(z, y)))
            .collect()
    };
    let a = minimal
        .iter()
        .copied()
        .find(|&a| {
            covers_within(a)
                .iter()
                .all(|&c| minimal.iter().any(|&b| b != a && po.lt(b, c)))
        })
        .ok_or_else(|| Error::Internal("no atom with every cover above another atom".into()))?;
    let rest: Vec<usize> = members.iter().copied().filter(|&y| y != a).collect();
    let above: Vec<usize> = members.iter().copied().filter(|&y| po.lt(a, y)).collect();
    let deletion = shell_subposet(p, &rest)?;
    let link = shell_subposet(p, &above)?;
    let mut within = vec![false; po.len()];
    for &m in members {
        within[m] = true;
    }
    let complex = po.chain_complex_within(&within);
    lemma6_shelling(&complex, a as Vertex, &deletion, &link)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::reduced_homology;
    use crate::poset::FinitePoset;
    use crate::shelling::is_shelling;

    fn bounded(elems: &[&str], rel: &[(&str, &str)]) -> BoundedPoset {
        FinitePoset::from_covers(elems, rel).unwrap().bounded_extension()
    }

    fn diamond() -> BoundedPoset {
        bounded(&["a", "b"], &[])
    }

    /// atoms a, b; a ⋖ x; x and b below the top
    fn five() -> BoundedPoset {
        bounded(&["a", "b", "x"], &[("a", "x")])
    }

    #[test]
    fn precedence_examples() {
        let ap = atom_precedence(&five()).unwrap();
        assert_eq!(ap.prec, vec![("a".to_string(), "b".to_string())]);
        assert_eq!(ap.smallest_atom, "a");
        assert_eq!(ap.linear_extension, vec!["a", "b"]);

        let d = atom_precedence(&diamond()).unwrap();
        assert!(d.prec.is_empty());
        assert_eq!(d.smallest_atom, "a");

        let c = atom_precedence(&bounded(&["a"], &[])).unwrap();
        assert_eq!(c.atoms, vec!["a"]);
        assert!(c.prec.is_empty());
        assert_eq!(c.smallest_atom, "a");
    }

    #[test]
    fn precedence_rejects_two_plus_two() {
        let q = bounded(&["w", "x", "y", "z"], &[("w", "x"), ("y", "z")]);
        assert!(matches!(atom_precedence(&q), Err(Error::NotIntervalOrder(_))));
        assert!(matches!(betti_interval_order(&q), Err(Error::NotIntervalOrder(_))));
        assert!(matches!(falling_chains(&q), Err(Error::NotIntervalOrder(_))));
    }

    #[test]
    fn recursive_atom_orderings() {
        assert!(verify_recursive_atom_ordering(&diamond(), &["a", "b"]).unwrap());
        assert!(verify_recursive_atom_ordering(&bounded(&["a"], &[]), &["a"]).unwrap());
        assert!(verify_recursive_atom_ordering(&diamond(), &["a"]).is_err());
        assert!(verify_recursive_atom_ordering(&five(), &["a", "b"]).unwrap());
    }

    #[test]
    fn rejects_a_bad_atom_ordering() {
        // a and b share the cover x, c sits alone
        let p = bounded(&["a", "b", "c", "x"], &[("a", "x"), ("b", "x")]);
        assert!(verify_recursive_atom_ordering(&p, &["a", "b", "c"]).unwrap());
        assert!(verify_recursive_atom_ordering(&p, &["a", "c", "b"]).unwrap());
        // the common upper bound of a and b is only reached from b through c
        let q = bounded(
            &["a", "b", "c", "u", "v"],
            &[("a", "u"), ("c", "u"), ("c", "v"), ("b", "v")],
        );
        assert!(!verify_recursive_atom_ordering(&q, &["a", "b", "c"]).unwrap());
        assert!(verify_recursive_atom_ordering(&q, &["a", "c", "b"]).unwrap());
    }

    #[test]
    fn falling_chain_examples() {
        let d = falling_chains(&diamond()).unwrap();
        assert_eq!(d.chains, vec![vec!["bot", "b", "top"]]);
        assert_eq!(d.counts_by_length(), BTreeMap::from([(2, 1)]));
        assert!(falling_chains(&bounded(&["a"], &[])).unwrap().chains.is_empty());
        let f = falling_chains(&five()).unwrap();
        assert_eq!(f.chains, vec![vec!["bot", "b", "top"]]);
    }

    #[test]
    fn betti_examples_match_homology() {
        for k in 1..=5 {
            let names: Vec<String> = (0..k).map(|i| format!("a{i}")).collect();
            let p = FinitePoset::from_covers::<String>(&names, &[]).unwrap().bounded_extension();
            let expect = if k > 1 { BTreeMap::from([(0, k as u64 - 1)]) } else { BTreeMap::new() };
            assert_eq!(betti_interval_order(&p).unwrap(), expect);
        }
        let chain = bounded(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        assert!(betti_interval_order(&chain).unwrap().is_empty());
        let h = reduced_homology(&five().proper_part_complex()).unwrap();
        assert_eq!(h.betti(0), 1);
        assert_eq!(betti_interval_order(&five()).unwrap(), BTreeMap::from([(0, 1)]));
        assert_eq!(
            betti_interval_order_with_smallest(&diamond(), "b").unwrap(),
            BTreeMap::from([(0, 1)])
        );
        assert!(betti_interval_order_with_smallest(&five(), "b").is_err());
    }

    #[test]
    fn explicit_shellings() {
        let d = diamond();
        let o = prop10_shelling(&d).unwrap();
        assert_eq!(o.0.len(), 2);
        assert!(is_shelling(&d.proper_part_complex(), &o).unwrap().is_valid());
        let f = five();
        let o = prop10_shelling(&f).unwrap();
        assert!(is_shelling(&f.proper_part_complex(), &o).unwrap().is_valid());
        let unit = FinitePoset::from_covers::<&str>(&[], &[]).unwrap().bounded_extension();
        assert_eq!(prop10_shelling(&unit).unwrap().0, vec![Face::empty()]);
    }
}
