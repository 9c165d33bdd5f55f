//! Named complexes on vertex labels `1..=n`, plus seeded random complexes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{Face, SimplicialComplex, Vertex};
use crate::error::{domain, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Seed(pub u64);

impl Seed {
    pub(crate) fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }
}

fn range_face(lo: Vertex, hi: Vertex) -> Face {
    Face::new(lo..=hi).expect("ranges have distinct vertices")
}

fn skeleton_with(n: Vertex, k: isize, extra: &[Face]) -> SimplicialComplex {
    let mut faces: Vec<Face> = SimplicialComplex::from_faces([range_face(1, n)])
        .skeleton(k)
        .facets()
        .to_vec();
    faces.extend_from_slice(extra);
    SimplicialComplex::from_faces(faces)
}

/// The `(d−1)`-skeleton of the simplex on `1..=d+3` with the two `d`-faces
/// `{1..d+1}` and `{3..d+3}`.
pub fn prop1_obstruction(d: usize) -> Result<SimplicialComplex> {
    if d < 1 {
        return domain("dimension must be at least 1");
    }
    let d = d as Vertex;
    Ok(skeleton_with(d + 3, d as isize - 1, &[range_face(1, d + 1), range_face(3, d + 3)]))
}

/// The `(d−1)`-skeleton of the simplex on `1..=d+2` with the face `{1..d+1}`.
pub fn prop1_j(d: usize) -> Result<SimplicialComplex> {
    if d < 1 {
        return domain("dimension must be at least 1");
    }
    let d = d as Vertex;
    Ok(skeleton_with(d + 2, d as isize - 1, &[range_face(1, d + 1)]))
}

/// Smallest obstruction to purity in dimension `d`. Same complex as
/// [`prop1_j`].
pub fn purity_obstruction(d: usize) -> Result<SimplicialComplex> {
    prop1_j(d)
}

/// `M_n`: the cyclic triples `{i, i+1, i+2}` taken mod `n`.
pub fn m_cycle(n: usize) -> Result<SimplicialComplex> {
    if n < 4 {
        return domain("M_n needs at least 4 vertices");
    }
    let n = n as Vertex;
    let wrap = |x: Vertex| (x - 1) % n + 1;
    Ok(SimplicialComplex::from_faces(
        (1..=n).map(|i| Face::new([i, wrap(i + 1), wrap(i + 2)]).expect("n >= 4")),
    ))
}

pub fn disjoint_edges() -> SimplicialComplex {
    SimplicialComplex::from_facets([[1, 2], [3, 4]]).expect("static")
}

/// `{1,2,3}, {3,4,5}, {1,4}`: nonshellable without an induced pair of
/// disjoint edges.
pub fn five_vertex_counterexample() -> SimplicialComplex {
    SimplicialComplex::from_facets([vec![1, 2, 3], vec![3, 4, 5], vec![1, 4]]).expect("static")
}

/// Boundary of the simplex on `1..=n`, a sphere of dimension `n − 2`.
pub fn boundary_of_simplex(n: usize) -> Result<SimplicialComplex> {
    if n < 2 {
        return domain("boundary of simplex needs at least 2 vertices");
    }
    let full = range_face(1, n as Vertex);
    Ok(SimplicialComplex::from_faces(full.subsets_of_size(n - 1)))
}

/// Six-vertex triangulation of the real projective plane.
pub fn projective_plane() -> SimplicialComplex {
    SimplicialComplex::from_facets([
        [1, 2, 3],
        [1, 3, 4],
        [1, 4, 5],
        [1, 5, 6],
        [1, 2, 6],
        [2, 3, 5],
        [3, 4, 6],
        [2, 4, 5],
        [3, 5, 6],
        [2, 4, 6],
    ])
    .expect("static")
}

/// Includes each `d`-subset of `1..=n` independently with probability
/// `density`, then re-maximalizes. Resamples until at least one facet is
/// drawn.
pub fn random_complex(n: usize, d: usize, density: f64, seed: Seed) -> Result<SimplicialComplex> {
    if d >= n {
        return domain(format!("need d < n, got d = {d}, n = {n}"));
    }
    if !(density > 0.0 && density <= 1.0) {
        return domain(format!("density must lie in (0, 1], got {density}"));
    }
    let candidates = range_face(1, n as Vertex).subsets_of_size(d + 1);
    let mut rng = seed.rng();
    loop {
        let chosen: Vec<Face> = candidates
            .iter()
            .filter(|_| rng.gen_bool(density))
            .cloned()
            .collect();
        if !chosen.is_empty() {
            return Ok(SimplicialComplex::from_faces(chosen));
        }
    }
}
