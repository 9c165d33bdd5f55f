//! Brute-force reference implementations used as test oracles. Complexes are
//! facet bitmasks over vertices `0..n`; nothing here calls the library's
//! search or canonicalization code.

#![allow(dead_code)]

use std::collections::HashSet;

use proptest::prelude::*;
use shellob::{Face, SimplicialComplex};

pub fn maximal(faces: &[u64]) -> Vec<u64> {
    let mut out: Vec<u64> = faces
        .iter()
        .copied()
        .filter(|&f| !faces.iter().any(|&g| g != f && f & g == f))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

pub fn to_complex(masks: &[u64]) -> SimplicialComplex {
    if masks.iter().all(|&m| m == 0) {
        return if masks.is_empty() { SimplicialComplex::void() } else { SimplicialComplex::irrelevant() };
    }
    SimplicialComplex::from_faces(masks.iter().map(|&m| {
        Face::new((0..64u32).filter(|i| m >> i & 1 == 1).map(|i| i + 1)).unwrap()
    }))
}

pub fn to_masks(k: &SimplicialComplex) -> Vec<u64> {
    k.facets()
        .iter()
        .map(|f| f.vertices().iter().fold(0u64, |m, &v| m | 1 << (v - 1)))
        .collect()
}

/// Whether appending `f` after the facets in `prefix` satisfies the shelling
/// condition, computed from the maximal pairwise intersections.
pub fn step_ok(f: u64, prefix: &[u64]) -> bool {
    if prefix.is_empty() {
        return true;
    }
    let inter: Vec<u64> = prefix.iter().map(|&g| f & g).collect();
    let want = f.count_ones() - 1;
    maximal(&inter).iter().all(|m| m.count_ones() == want)
}

pub fn is_shelling_order(order: &[u64]) -> bool {
    (1..order.len()).all(|i| step_ok(order[i], &order[..i]))
}

/// Plain backtracking over facet orders with a dead-set memo.
pub fn oracle_shellable(facets: &[u64]) -> bool {
    fn go(facets: &[u64], used: u32, order: &mut Vec<u64>, dead: &mut HashSet<u32>) -> bool {
        if order.len() == facets.len() {
            return true;
        }
        if dead.contains(&used) {
            return false;
        }
        for (i, &f) in facets.iter().enumerate() {
            if used >> i & 1 == 0 && step_ok(f, order) {
                order.push(f);
                if go(facets, used | 1 << i, order, dead) {
                    return true;
                }
                order.pop();
            }
        }
        dead.insert(used);
        false
    }
    assert!(facets.len() <= 32);
    go(facets, 0, &mut Vec::new(), &mut HashSet::new())
}

pub fn induced(facets: &[u64], u: u64) -> Vec<u64> {
    maximal(&facets.iter().map(|&f| f & u).collect::<Vec<_>>())
}

pub fn support(facets: &[u64]) -> u64 {
    facets.iter().fold(0, |a, &f| a | f)
}

pub fn oracle_obstruction(facets: &[u64]) -> bool {
    let all = support(facets);
    if oracle_shellable(facets) {
        return false;
    }
    let mut u = (all - 1) & all;
    loop {
        if u != 0 && !oracle_shellable(&induced(facets, u)) {
            return false;
        }
        if u == 0 {
            return true;
        }
        u = (u - 1) & all;
    }
}

pub fn oracle_purity_obstruction(facets: &[u64]) -> bool {
    let pure = |fs: &[u64]| fs.iter().all(|f| f.count_ones() == fs[0].count_ones());
    if pure(facets) {
        return false;
    }
    let all = support(facets);
    let mut u = (all - 1) & all;
    while u != 0 {
        if !pure(&induced(facets, u)) {
            return false;
        }
        u = (u - 1) & all;
    }
    true
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Least sorted mask list over all `n!` relabelings.
pub fn oracle_key(n: usize, facets: &[u64]) -> Vec<u64> {
    permutations(n)
        .into_iter()
        .map(|p| {
            let mut m: Vec<u64> = facets
                .iter()
                .map(|&f| (0..n).filter(|&v| f >> v & 1 == 1).fold(0u64, |a, v| a | 1 << p[v]))
                .collect();
            m.sort_unstable();
            m
        })
        .min()
        .unwrap()
}

/// Every antichain of nonempty subsets of `0..n` with faces of size at most
/// `max_size` that covers all `n` vertices.
pub fn covering_antichains(n: usize, max_size: u32) -> Vec<Vec<u64>> {
    let mut subsets: Vec<u64> = (1..1u64 << n).filter(|s| s.count_ones() <= max_size).collect();
    subsets.sort_by_key(|s| std::cmp::Reverse(s.count_ones()));
    let full = (1u64 << n) - 1;
    let mut out = Vec::new();
    fn go(i: usize, subsets: &[u64], cur: &mut Vec<u64>, full: u64, out: &mut Vec<Vec<u64>>) {
        if i == subsets.len() {
            if cur.iter().fold(0, |a, &f| a | f) == full {
                out.push(cur.clone());
            }
            return;
        }
        go(i + 1, subsets, cur, full, out);
        let s = subsets[i];
        if !cur.iter().any(|&f| s & f == s) {
            cur.push(s);
            go(i + 1, subsets, cur, full, out);
            cur.pop();
        }
    }
    go(0, &subsets, &mut Vec::new(), full, &mut out);
    out
}

/// Random complexes on vertices `1..=n` with up to `max_facets` facets.
pub fn arb_complex(max_n: usize, max_facets: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(1u64..(1u64 << n), 1..=max_facets)
            .prop_map(|raw| to_complex(&maximal(&raw)))
    })
}
