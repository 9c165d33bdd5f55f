//! Relabeling-invariant keys for isomorphism-class deduplication.
//!
//! Vertices are first split into classes by iterated color refinement over
//! facet incidences. The key is the lexicographically least sorted facet
//! mask list over every relabeling that sends each color class to its own
//! block of positions. The set of such relabelings is carried along by any
//! isomorphism, so equal keys coincide exactly with isomorphic complexes.

use std::collections::BTreeMap;
use std::fmt;

use sha2::{Digest, Sha256};

use crate::complex::{BitComplex, SimplicialComplex};
use crate::error::{Error, Result};

pub const DEFAULT_PERMUTATION_BOUND: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    /// Short stable digest used for file names.
    pub fn digest(&self) -> String {
        let d = Sha256::digest(&self.0);
        hex::encode(&d[..8])
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

pub fn canonical_key(k: &SimplicialComplex) -> Result<CanonicalKey> {
    canonical_key_with_bound(k, DEFAULT_PERMUTATION_BOUND)
}

pub fn canonical_key_with_bound(k: &SimplicialComplex, bound: usize) -> Result<CanonicalKey> {
    Ok(canonical_form_with_bound(k, bound)?.0)
}

/// The key together with the representative on vertices `1..=n` it encodes.
pub fn canonical_form(k: &SimplicialComplex) -> Result<(CanonicalKey, SimplicialComplex)> {
    canonical_form_with_bound(k, DEFAULT_PERMUTATION_BOUND)
}

pub fn canonical_form_with_bound(
    k: &SimplicialComplex,
    bound: usize,
) -> Result<(CanonicalKey, SimplicialComplex)> {
    let n = k.vertex_count();
    if n > bound || n > 64 {
        return Err(Error::Capability(format!(
            "canonical form needs at most {bound} vertices, complex has {n}"
        )));
    }
    let bits = BitComplex::new(k).expect("vertex count checked");
    let (key, masks) = canonical_masks(n, &bits.facets);
    let rep = SimplicialComplex::from_faces(masks.iter().map(|&m| {
        crate::complex::Face::from_sorted((0..n as u32).filter(|i| m >> i & 1 == 1).map(|i| i + 1).collect())
    }));
    Ok((key, rep))
}

/// Key and minimal relabeled masks for a complex whose vertices are exactly
/// the bit positions `0..n`.
pub(crate) fn canonical_masks(n: usize, facets: &[u64]) -> (CanonicalKey, Vec<u64>) {
    let masks = minimal_masks(n, facets);
    let width = if n <= 16 { 2 } else { 8 };
    let mut bytes = Vec::with_capacity(5 + width * masks.len());
    bytes.push(n as u8);
    bytes.extend_from_slice(&(masks.len() as u32).to_be_bytes());
    for m in &masks {
        bytes.extend_from_slice(&m.to_be_bytes()[8 - width..]);
    }
    (CanonicalKey(bytes), masks)
}

/// Stable vertex colors from iterated refinement on facet incidences.
fn refine_colors(n: usize, facets: &[u64]) -> Vec<usize> {
    let mut colors = vec![0usize; n];
    let mut classes = 1;
    loop {
        let sigs: Vec<(usize, Vec<(u32, Vec<usize>)>)> = (0..n)
            .map(|v| {
                let mut inc: Vec<(u32, Vec<usize>)> = facets
                    .iter()
                    .filter(|&&f| f >> v & 1 == 1)
                    .map(|&f| {
                        let mut mates: Vec<usize> = (0..n)
                            .filter(|&w| w != v && f >> w & 1 == 1)
                            .map(|w| colors[w])
                            .collect();
                        mates.sort_unstable();
                        (f.count_ones(), mates)
                    })
                    .collect();
                inc.sort();
                (colors[v], inc)
            })
            .collect();
        let mut ranks: BTreeMap<&(usize, Vec<(u32, Vec<usize>)>), usize> = BTreeMap::new();
        for s in &sigs {
            ranks.insert(s, 0);
        }
        for (i, r) in ranks.values_mut().enumerate() {
            *r = i;
        }
        let next: Vec<usize> = sigs.iter().map(|s| ranks[s]).collect();
        let count = ranks.len();
        colors = next;
        if count == classes {
            return colors;
        }
        classes = count;
    }
}

fn minimal_masks(n: usize, facets: &[u64]) -> Vec<u64> {
    let colors = refine_colors(n, facets);
    // position blocks: vertices sorted by color, block per color
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| colors[v]);
    let slot_color: Vec<usize> = order.iter().map(|&v| colors[v]).collect();

    let mut best: Option<Vec<u64>> = None;
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut scratch = Vec::with_capacity(facets.len());
    search(0, n, &slot_color, &colors, facets, &mut perm, &mut used, &mut scratch, &mut best);
    best.unwrap_or_default()
}

#[allow(clippy::too_many_arguments)]
fn search(
    pos: usize,
    n: usize,
    slot_color: &[usize],
    colors: &[usize],
    facets: &[u64],
    perm: &mut [usize],
    used: &mut [bool],
    scratch: &mut Vec<u64>,
    best: &mut Option<Vec<u64>>,
) {
    if pos == n {
        scratch.clear();
        scratch.extend(facets.iter().map(|&f| {
            let mut m = 0u64;
            let mut rest = f;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                m |= 1 << perm[v];
            }
            m
        }));
        scratch.sort_unstable();
        if best.as_ref().is_none_or(|b| scratch.as_slice() < b.as_slice()) {
            *best = Some(scratch.clone());
        }
        return;
    }
    for v in 0..n {
        if !used[v] && colors[v] == slot_color[pos] {
            used[v] = true;
            perm[v] = pos;
            search(pos + 1, n, slot_color, colors, facets, perm, used, scratch, best);
            used[v] = false;
        }
    }
}
