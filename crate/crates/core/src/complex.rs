//! Simplicial complexes stored by their facets.
//!
//! A complex is kept in a normal form: facets are an inclusion antichain,
//! each facet is a strictly increasing vertex list, and the facet list is
//! sorted lexicographically. Two degenerate complexes exist: VOID, with no
//! faces at all, and IRRELEVANT, whose only face is the empty face.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{domain, Error, Result};

pub type Vertex = u32;

/// A finite vertex set in sorted encoding. The empty face is a valid value.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face(Vec<Vertex>);

impl Face {
    /// Builds a face, rejecting repeated vertices.
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Result<Face> {
        let mut vs: Vec<Vertex> = vertices.into_iter().collect();
        vs.sort_unstable();
        if vs.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Malformed(format!("repeated vertex in face {vs:?}")));
        }
        Ok(Face(vs))
    }

    /// Builds a face from a list already known to be strictly increasing.
    pub(crate) fn from_sorted(vs: Vec<Vertex>) -> Face {
        debug_assert!(vs.windows(2).all(|w| w[0] < w[1]));
        Face(vs)
    }

    pub fn empty() -> Face {
        Face(Vec::new())
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn intersection(&self, other: &Face) -> Face {
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        Face(out)
    }

    pub fn with(&self, v: Vertex) -> Face {
        let mut vs = self.0.clone();
        if let Err(pos) = vs.binary_search(&v) {
            vs.insert(pos, v);
        }
        Face(vs)
    }

    pub fn without(&self, v: Vertex) -> Face {
        Face(self.0.iter().copied().filter(|&w| w != v).collect())
    }

    /// Every subset of the face, the empty face and the face itself included.
    pub fn subsets(&self) -> impl Iterator<Item = Face> + '_ {
        let k = self.0.len();
        assert!(k < 64, "face too large to expand");
        (0u64..(1u64 << k)).map(move |mask| {
            Face(
                (0..k)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| self.0[i])
                    .collect(),
            )
        })
    }

    /// Subsets of exactly `size` vertices, in lexicographic order.
    pub fn subsets_of_size(&self, size: usize) -> Vec<Face> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(size);
        fn rec(src: &[Vertex], size: usize, start: usize, cur: &mut Vec<Vertex>, out: &mut Vec<Face>) {
            if cur.len() == size {
                out.push(Face(cur.clone()));
                return;
            }
            let need = size - cur.len();
            for i in start..src.len() {
                if src.len() - i < need {
                    break;
                }
                cur.push(src[i]);
                rec(src, size, i + 1, cur, out);
                cur.pop();
            }
        }
        if size <= self.0.len() {
            rec(&self.0, size, 0, &mut current, &mut out);
        }
        out
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A finite abstract simplicial complex in facet normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    facets: Vec<Face>,
    vertices: Vec<Vertex>,
}

impl SimplicialComplex {
    /// The complex with no faces at all.
    pub fn void() -> Self {
        SimplicialComplex { facets: Vec::new(), vertices: Vec::new() }
    }

    /// The complex whose only face is the empty face.
    pub fn irrelevant() -> Self {
        SimplicialComplex { facets: vec![Face::empty()], vertices: Vec::new() }
    }

    /// The full simplex on the given vertices.
    pub fn simplex(vertices: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        Ok(Self::from_faces(vec![Face::new(vertices)?]))
    }

    /// The complex generated by `faces`; non-maximal faces are absorbed.
    pub fn from_faces(faces: impl IntoIterator<Item = Face>) -> Self {
        let mut faces: Vec<Face> = faces.into_iter().collect();
        faces.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        faces.dedup();
        let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
        for f in faces {
            if !kept.iter().any(|g| f.is_subset(g)) {
                kept.push(f);
            }
        }
        kept.sort();
        let vertices: BTreeSet<Vertex> = kept.iter().flat_map(|f| f.0.iter().copied()).collect();
        SimplicialComplex { facets: kept, vertices: vertices.into_iter().collect() }
    }

    /// Builds a complex from raw vertex lists, rejecting repeated vertices
    /// inside a list.
    pub fn from_facets<I, F>(faces: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = Vertex>,
    {
        let faces = faces.into_iter().map(Face::new).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_faces(faces))
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    /// Dimension; `None` for VOID, `Some(-1)` for IRRELEVANT.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(Face::dim).max()
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn contains_face(&self, face: &Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(f))
    }

    pub fn is_facet(&self, face: &Face) -> bool {
        self.facets.binary_search(face).is_ok()
    }

    fn require_nonvoid(&self, op: &str) -> Result<()> {
        if self.is_void() {
            return domain(format!("{op} is undefined on the void complex"));
        }
        Ok(())
    }

    /// Faces of dimension `d`, or every face when `d` is `None`.
    pub fn enumerate_faces(&self, d: Option<isize>) -> BTreeSet<Face> {
        let mut out = BTreeSet::new();
        for f in &self.facets {
            match d {
                None => out.extend(f.subsets()),
                Some(d) if d >= -1 => out.extend(f.subsets_of_size((d + 1) as usize)),
                Some(_) => {}
            }
        }
        out
    }

    /// Face counts by dimension, starting at dimension −1.
    pub fn f_vector(&self) -> Vec<usize> {
        match self.dim() {
            None => Vec::new(),
            Some(d) => (-1..=d).map(|i| self.enumerate_faces(Some(i)).len()).collect(),
        }
    }

    /// The induced subcomplex `K(U)`.
    pub fn induced(&self, subset: &[Vertex]) -> Result<Self> {
        let u = Face::new(subset.iter().copied())?;
        if let Some(v) = u.vertices().iter().find(|v| !self.has_vertex(**v)) {
            return domain(format!("vertex {v} is not in the complex"));
        }
        Ok(self.induced_unchecked(&u))
    }

    pub(crate) fn induced_unchecked(&self, u: &Face) -> Self {
        Self::from_faces(self.facets.iter().map(|f| f.intersection(u)))
    }

    /// The induced subcomplex on every vertex but `v`.
    pub fn deletion(&self, v: Vertex) -> Result<Self> {
        if !self.has_vertex(v) {
            return domain(format!("vertex {v} is not in the complex"));
        }
        Ok(Self::from_faces(self.facets.iter().map(|f| f.without(v))))
    }

    /// The subcomplex generated by the facets of maximum dimension.
    pub fn pure_part(&self) -> Result<Self> {
        self.require_nonvoid("pure part")?;
        let top = self.facets.iter().map(Face::len).max().unwrap_or(0);
        Ok(SimplicialComplex::from_faces(
            self.facets.iter().filter(|f| f.len() == top).cloned(),
        ))
    }

    /// The link of `v`: faces `F` not containing `v` with `F ∪ {v}` a face.
    pub fn link(&self, v: Vertex) -> Result<Self> {
        if !self.has_vertex(v) {
            return domain(format!("vertex {v} is not in the complex"));
        }
        Ok(Self::from_faces(
            self.facets.iter().filter(|f| f.contains(v)).map(|f| f.without(v)),
        ))
    }

    /// Faces of dimension at most `k`.
    pub fn skeleton(&self, k: isize) -> Self {
        if self.is_void() || k < -1 {
            return Self::void();
        }
        let size = (k + 1) as usize;
        let mut faces = Vec::new();
        for f in &self.facets {
            if f.len() <= size {
                faces.push(f.clone());
            } else {
                faces.extend(f.subsets_of_size(size));
            }
        }
        Self::from_faces(faces)
    }

    pub fn is_pure(&self) -> Result<bool> {
        self.require_nonvoid("purity")?;
        let n = self.facets[0].len();
        Ok(self.facets.iter().all(|f| f.len() == n))
    }

    /// True iff every vertex set spanning a clique of edges is a face.
    pub fn is_flag(&self) -> Result<bool> {
        self.require_nonvoid("flag test")?;
        let mut adj: BTreeMap<Vertex, BTreeSet<Vertex>> =
            self.vertices.iter().map(|&v| (v, BTreeSet::new())).collect();
        for e in self.enumerate_faces(Some(1)) {
            let (a, b) = (e.vertices()[0], e.vertices()[1]);
            adj.get_mut(&a).unwrap().insert(b);
            adj.get_mut(&b).unwrap().insert(a);
        }
        let mut cliques = Vec::new();
        bron_kerbosch(
            &adj,
            Vec::new(),
            self.vertices.iter().copied().collect(),
            BTreeSet::new(),
            &mut cliques,
        );
        Ok(cliques.into_iter().all(|c| self.contains_face(&Face::from_sorted(c))))
    }

    /// True iff every face that is not a facet lies in at least two facets.
    pub fn nonfacet_faces_in_two_facets(&self) -> bool {
        let mut counts: BTreeMap<Face, usize> = BTreeMap::new();
        for f in &self.facets {
            for g in f.subsets() {
                *counts.entry(g).or_default() += 1;
            }
        }
        counts
            .iter()
            .all(|(face, &c)| self.is_facet(face) || c >= 2)
    }

    /// Applies a vertex relabeling, which must be injective on the vertex set.
    pub fn relabel(&self, map: impl Fn(Vertex) -> Vertex) -> Result<Self> {
        let faces = self
            .facets
            .iter()
            .map(|f| Face::new(f.vertices().iter().map(|&v| map(v))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_faces(faces))
    }

    /// Relabels vertices to `1..=n` preserving their order.
    pub fn normalized(&self) -> Self {
        let verts = &self.vertices;
        self.relabel(|v| verts.binary_search(&v).unwrap() as Vertex + 1)
            .expect("order-preserving relabeling is injective")
    }
}

/// The cone `v * J` over `J` with apex `v`.
pub fn join_vertex(v: Vertex, j: &SimplicialComplex) -> Result<SimplicialComplex> {
    j.require_nonvoid("join")?;
    if j.has_vertex(v) {
        return domain(format!("apex {v} already belongs to the complex"));
    }
    Ok(SimplicialComplex::from_faces(j.facets.iter().map(|f| f.with(v))))
}

fn bron_kerbosch(
    adj: &BTreeMap<Vertex, BTreeSet<Vertex>>,
    r: Vec<Vertex>,
    mut p: BTreeSet<Vertex>,
    mut x: BTreeSet<Vertex>,
    out: &mut Vec<Vec<Vertex>>,
) {
    if p.is_empty() && x.is_empty() {
        let mut c = r;
        c.sort_unstable();
        out.push(c);
        return;
    }
    let candidates: Vec<Vertex> = p.iter().copied().collect();
    for v in candidates {
        let nv = &adj[&v];
        let mut r2 = r.clone();
        r2.push(v);
        bron_kerbosch(
            adj,
            r2,
            p.intersection(nv).copied().collect(),
            x.intersection(nv).copied().collect(),
            out,
        );
        p.remove(&v);
        x.insert(v);
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return write!(f, "VOID");
        }
        write!(f, "[")?;
        for (i, face) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{face}")?;
        }
        write!(f, "]")
    }
}

/// Dense bitmask view for complexes on at most 64 vertices.
#[derive(Clone, Debug)]
pub(crate) struct BitComplex {
    pub facets: Vec<u64>,
}

impl BitComplex {
    pub fn new(k: &SimplicialComplex) -> Option<BitComplex> {
        if k.vertex_count() > 64 {
            return None;
        }
        let facets = k.facets.iter().map(|f| mask_of(&k.vertices, f)).collect();
        Some(BitComplex { facets })
    }
}

pub(crate) fn mask_of(verts: &[Vertex], f: &Face) -> u64 {
    f.vertices()
        .iter()
        .fold(0u64, |m, v| m | 1 << verts.binary_search(v).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(faces: &[&[Vertex]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(faces.iter().map(|f| f.iter().copied())).unwrap()
    }

    fn m5() -> SimplicialComplex {
        cx(&[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5], &[4, 5, 1], &[5, 1, 2]])
    }

    #[test]
    fn absorption_and_degenerates() {
        let k = cx(&[&[1, 2], &[1], &[3]]);
        assert_eq!(k.facets(), &[Face::new([1, 2]).unwrap(), Face::new([3]).unwrap()]);
        assert!(cx(&[]).is_void());
        let irr = cx(&[&[]]);
        assert!(irr.is_irrelevant());
        assert_eq!(irr.dim(), Some(-1));
        assert!(irr.vertices().is_empty());
        assert_eq!(m5().facet_count(), 5);
        assert_eq!(m5().dim(), Some(2));
    }

    #[test]
    fn repeated_vertex_is_malformed() {
        assert!(matches!(
            SimplicialComplex::from_facets([vec![1, 1, 2]]),
            Err(Error::Malformed(_))
        ));
    }

    #[test]
    fn face_enumeration() {
        assert_eq!(m5().enumerate_faces(Some(1)).len(), 10);
        let s = SimplicialComplex::simplex([1, 2, 3]).unwrap();
        let verts: Vec<Face> = s.enumerate_faces(Some(0)).into_iter().collect();
        assert_eq!(verts, vec![Face::new([1]).unwrap(), Face::new([2]).unwrap(), Face::new([3]).unwrap()]);
        assert!(SimplicialComplex::void().enumerate_faces(Some(1)).is_empty());
        assert!(SimplicialComplex::void().enumerate_faces(None).is_empty());
        let simplex5 = SimplicialComplex::simplex(1..=5).unwrap();
        assert_eq!(simplex5.enumerate_faces(None).len(), 32);
    }

    #[test]
    fn induced_subcomplexes() {
        assert_eq!(m5().induced(&[1, 2, 3, 4]).unwrap(), cx(&[&[1, 2, 3], &[2, 3, 4], &[1, 4]]));
        assert_eq!(m5().induced(&[1, 2, 3, 4, 5]).unwrap(), m5());
        assert_eq!(cx(&[&[1, 2], &[3, 4]]).induced(&[1, 3]).unwrap(), cx(&[&[1], &[3]]));
        assert!(m5().induced(&[]).unwrap().is_irrelevant());
        assert!(matches!(m5().induced(&[1, 9]), Err(Error::Domain(_))));
    }

    #[test]
    fn pure_part_and_purity() {
        assert_eq!(cx(&[&[1, 2, 3], &[3, 4]]).pure_part().unwrap(), cx(&[&[1, 2, 3]]));
        assert_eq!(m5().pure_part().unwrap(), m5());
        assert!(SimplicialComplex::void().pure_part().is_err());
        assert!(m5().is_pure().unwrap());
        assert!(!cx(&[&[1, 2, 3], &[4, 5]]).is_pure().unwrap());
        assert!(!cx(&[&[1, 2], &[3]]).is_pure().unwrap());
        assert!(SimplicialComplex::irrelevant().is_pure().unwrap());
        assert!(SimplicialComplex::void().is_pure().is_err());
    }

    #[test]
    fn links_and_joins() {
        assert_eq!(m5().link(1).unwrap(), cx(&[&[2, 3], &[4, 5], &[2, 5]]));
        assert_eq!(SimplicialComplex::simplex([1, 2, 3]).unwrap().link(1).unwrap(), cx(&[&[2, 3]]));
        assert!(cx(&[&[1], &[2, 3]]).link(1).unwrap().is_irrelevant());
        assert!(m5().link(7).is_err());

        assert_eq!(join_vertex(9, &cx(&[&[1, 2]])).unwrap(), cx(&[&[9, 1, 2]]));
        assert_eq!(join_vertex(9, &SimplicialComplex::irrelevant()).unwrap(), cx(&[&[9]]));
        let l = m5().link(1).unwrap();
        assert_eq!(join_vertex(1, &l).unwrap(), cx(&[&[1, 2, 3], &[1, 4, 5], &[1, 2, 5]]));
        assert!(join_vertex(2, &l).is_err());
        assert!(join_vertex(2, &SimplicialComplex::void()).is_err());
    }

    #[test]
    fn skeleta() {
        let s4 = SimplicialComplex::simplex(1..=4).unwrap();
        let g = s4.skeleton(1);
        assert_eq!(g.facet_count(), 6);
        assert!(g.facets().iter().all(|f| f.len() == 2));
        let k5 = m5().skeleton(1);
        assert_eq!(k5.facet_count(), 10);
        assert!(m5().skeleton(-1).is_irrelevant());
    }

    #[test]
    fn flag_predicate() {
        let m7 = cx(&[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5], &[4, 5, 6], &[5, 6, 7], &[6, 7, 1], &[7, 1, 2]]);
        assert!(m7.is_flag().unwrap());
        assert!(!m5().is_flag().unwrap());
        assert!(SimplicialComplex::simplex(1..=6).unwrap().is_flag().unwrap());
        assert!(!SimplicialComplex::simplex(1..=3).unwrap().skeleton(1).is_flag().unwrap());
    }

    #[test]
    fn two_facet_condition() {
        let boundary = SimplicialComplex::from_faces(
            SimplicialComplex::simplex(1..=4).unwrap().enumerate_faces(Some(2)),
        );
        assert_eq!(boundary.facet_count(), 4);
        assert!(boundary.nonfacet_faces_in_two_facets());
        assert!(!m5().nonfacet_faces_in_two_facets());
        assert!(!cx(&[&[1, 2], &[2, 3]]).nonfacet_faces_in_two_facets());
    }
}
