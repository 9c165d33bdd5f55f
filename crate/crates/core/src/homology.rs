//! Reduced simplicial homology over the integers.
//!
//! Chain groups use the augmented complex: the empty face spans degree −1
//! and `∂0` sends every vertex to it. Ranks and torsion come from the Smith
//! normal form of each boundary matrix, computed with exact big integers.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{domain, Result};

/// Dense matrix of arbitrary-precision integers, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        IntegerMatrix {
            rows: r,
            cols: c,
            entries: rows.iter().flatten().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntegerMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.entries[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.entries.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.entries.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// row[target] -= q * row[source]
    fn row_axpy(&mut self, target: usize, source: usize, q: &BigInt, from_col: usize) {
        for c in from_col..self.cols {
            let s = &self.entries[source * self.cols + c];
            if !s.is_zero() {
                let delta = q * s;
                self.entries[target * self.cols + c] -= delta;
            }
        }
    }

    /// col[target] -= q * col[source]
    fn col_axpy(&mut self, target: usize, source: usize, q: &BigInt, from_row: usize) {
        for r in from_row..self.rows {
            let s = &self.entries[r * self.cols + source];
            if !s.is_zero() {
                let delta = q * s;
                self.entries[r * self.cols + target] -= delta;
            }
        }
    }
}

/// Rank and invariant factors `d1 | d2 | …` of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub rank: usize,
    pub invariant_factors: Vec<BigInt>,
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let mut a = m.clone();
    let mut diag: Vec<BigInt> = Vec::new();
    let mut t = 0;
    while t < a.rows.min(a.cols) {
        // pivot of minimal absolute value in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for r in t..a.rows {
            for c in t..a.cols {
                let x = a.get(r, c);
                if !x.is_zero() && best.is_none_or(|(br, bc)| x.abs() < a.get(br, bc).abs()) {
                    best = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = best else { break };
        a.swap_rows(t, pr);
        a.swap_cols(t, pc);
        loop {
            let p = a.get(t, t).clone();
            let mut dirty = false;
            for r in t + 1..a.rows {
                if !a.get(r, t).is_zero() {
                    let q = a.get(r, t).div_floor(&p);
                    a.row_axpy(r, t, &q, t);
                    if !a.get(r, t).is_zero() {
                        dirty = true;
                    }
                }
            }
            for c in t + 1..a.cols {
                if !a.get(t, c).is_zero() {
                    let q = a.get(t, c).div_floor(&p);
                    a.col_axpy(c, t, &q, t);
                    if !a.get(t, c).is_zero() {
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break;
            }
            // move the smallest remainder in row/column t onto the pivot
            let mut best = (t, t);
            for r in t + 1..a.rows {
                let x = a.get(r, t);
                if !x.is_zero() && x.abs() < a.get(best.0, best.1).abs() {
                    best = (r, t);
                }
            }
            for c in t + 1..a.cols {
                let x = a.get(t, c);
                if !x.is_zero() && x.abs() < a.get(best.0, best.1).abs() {
                    best = (t, c);
                }
            }
            a.swap_rows(t, best.0);
            a.swap_cols(t, best.1);
        }
        diag.push(a.get(t, t).abs());
        t += 1;
    }
    // diag(x, y) is equivalent to diag(gcd, lcm); sweep until each divides the next
    let n = diag.len();
    for i in 0..n {
        for j in i + 1..n {
            if !(&diag[j] % &diag[i]).is_zero() {
                let g = diag[i].gcd(&diag[j]);
                let l = diag[i].lcm(&diag[j]);
                diag[i] = g;
                diag[j] = l;
            }
        }
    }
    SmithForm { rank: n, invariant_factors: diag }
}

/// Matrix of `∂d` from `d`-faces (columns) to `(d−1)`-faces (rows), both
/// in sorted order. Removing the vertex at position `i` carries sign `(−1)^i`.
pub fn boundary_matrix(k: &SimplicialComplex, d: isize) -> Result<IntegerMatrix> {
    if k.is_void() {
        return domain("the void complex has no chain complex");
    }
    if d < -1 {
        return domain(format!("boundary map in degree {d} is not defined"));
    }
    let cols: Vec<Face> = k.enumerate_faces(Some(d)).into_iter().collect();
    let rows: Vec<Face> = if d == -1 {
        Vec::new()
    } else {
        k.enumerate_faces(Some(d - 1)).into_iter().collect()
    };
    let mut m = IntegerMatrix::zeros(rows.len(), cols.len());
    for (c, face) in cols.iter().enumerate() {
        for (i, &v) in face.vertices().iter().enumerate() {
            let r = rows.binary_search(&face.without(v)).expect("boundary face present");
            m.set(r, c, if i % 2 == 0 { BigInt::one() } else { -BigInt::one() });
        }
    }
    Ok(m)
}

/// Reduced Betti numbers by degree (−1 upward) and torsion coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HomologyProfile {
    pub betti: BTreeMap<isize, u64>,
    pub torsion: BTreeMap<isize, Vec<BigInt>>,
    top_dim: isize,
}

impl HomologyProfile {
    pub fn betti(&self, d: isize) -> u64 {
        self.betti.get(&d).copied().unwrap_or(0)
    }

    pub fn torsion(&self, d: isize) -> &[BigInt] {
        self.torsion.get(&d).map_or(&[], Vec::as_slice)
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.values().all(Vec::is_empty)
    }

    /// Nonzero Betti numbers only.
    pub fn nonzero_betti(&self) -> BTreeMap<isize, u64> {
        self.betti.iter().filter(|(_, &b)| b > 0).map(|(&d, &b)| (d, b)).collect()
    }

    pub fn top_dim(&self) -> isize {
        self.top_dim
    }

    /// Reduced Euler characteristic `Σ (−1)^i βi`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .map(|(&d, &b)| if d.rem_euclid(2) == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, b) in &self.betti {
            writeln!(f, "beta[{d}] = {b}")?;
        }
        for (d, t) in &self.torsion {
            if !t.is_empty() {
                let parts: Vec<String> = t.iter().map(|x| x.to_string()).collect();
                writeln!(f, "torsion[{d}] = ({})", parts.join(","))?;
            }
        }
        Ok(())
    }
}

/// Reduced homology of a nonvoid complex.
pub fn reduced_homology(k: &SimplicialComplex) -> Result<HomologyProfile> {
    let Some(dim) = k.dim() else {
        return domain("the void complex has no homology");
    };
    let f = k.f_vector();
    // ranks[i] = rank ∂_i for i in -1..=dim+1; ∂_{-1} and ∂_{dim+1} vanish
    let mut ranks: BTreeMap<isize, usize> = BTreeMap::new();
    let mut factors: BTreeMap<isize, Vec<BigInt>> = BTreeMap::new();
    ranks.insert(-1, 0);
    ranks.insert(dim + 1, 0);
    for d in 0..=dim {
        let snf = smith_normal_form(&boundary_matrix(k, d)?);
        ranks.insert(d, snf.rank);
        factors.insert(d, snf.invariant_factors);
    }
    let mut profile = HomologyProfile { top_dim: dim, ..Default::default() };
    for i in -1..=dim {
        let faces = f[(i + 1) as usize];
        let b = faces - ranks[&i] - ranks[&(i + 1)];
        profile.betti.insert(i, b as u64);
        let tors: Vec<BigInt> = factors
            .get(&(i + 1))
            .map(|v| v.iter().filter(|x| !x.is_one()).cloned().collect())
            .unwrap_or_default();
        profile.torsion.insert(i, tors);
    }
    Ok(profile)
}
