//! Abstract simplicial complexes on a labeled vertex set.
//!
//! Faces are bitmasks over the labels `1..=m`. A complex remembers the vertex
//! set it lives on separately from its faces, so a vertex of the vertex set
//! that is not itself a face (a *ghost vertex*) is representable: ghosts index
//! a coordinate of a polyhedral product even though they never appear in the
//! geometric realization.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;

/// Largest label count a face bitmask can hold.
pub const MAX_LABELS: usize = 63;

/// Default bound on `m` for anything that enumerates all subsets of `[m]`.
pub const DEFAULT_MAX_VERTICES: usize = 20;

/// A subset of `[m]`, stored as a bitmask (bit `i - 1` is vertex `i`).
///
/// The ordering is length-lexicographic: shorter faces first, ties broken by
/// comparing the ascending vertex lists left to right.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_bits(bits: u64) -> Face {
        Face(bits)
    }

    /// Builds a face from 1-based labels. Duplicates collapse.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Result<Face> {
        let mut bits = 0u64;
        for v in vertices {
            if v == 0 || v > MAX_LABELS {
                return Err(Error::VertexOutOfRange { vertex: v, m: MAX_LABELS });
            }
            bits |= 1 << (v - 1);
        }
        Ok(Face(bits))
    }

    /// The full vertex set `[m]`.
    pub fn full(m: usize) -> Face {
        assert!(m <= MAX_LABELS);
        Face((1u64 << m) - 1)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn dim(self) -> isize {
        self.len() as isize - 1
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_LABELS).contains(&v) && self.0 >> (v - 1) & 1 == 1
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn minus(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    /// Ascending vertex labels.
    pub fn vertices(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..64).filter(move |i| bits >> i & 1 == 1).map(|i| i + 1)
    }

    /// All subsets of this face, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = Face> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(Face(cur))
        })
    }

    /// Faces obtained by deleting one vertex, with the simplicial boundary
    /// sign `(-1)^position`.
    pub fn boundary(self) -> impl Iterator<Item = (Face, i64)> {
        self.vertices().enumerate().map(move |(pos, v)| {
            let sign = if pos % 2 == 0 { 1 } else { -1 };
            (Face(self.0 & !(1 << (v - 1))), sign)
        })
    }

    /// Set-style rendering, e.g. `{1,3}`.
    pub fn to_set_string(self) -> String {
        let parts: Vec<String> = self.vertices().map(|v| v.to_string()).collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & diff & diff.wrapping_neg() != 0 {
                // self owns the smallest vertex where the lists first differ
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        for v in self.vertices() {
            write!(f, "v{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_set_string())
    }
}

/// A simplicial complex on a vertex set `V ⊆ [m]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    m: usize,
    vertex_set: Face,
    faces: BTreeSet<Face>,
}

impl SimplicialComplex {
    /// The downward closure of `generators` on the vertex set `[m]`.
    ///
    /// The empty face is always present, so `new(m, &[])` is the complex
    /// `{∅}` with `m` ghost vertices.
    pub fn new<G: AsRef<[usize]>>(m: usize, generators: &[G]) -> Result<Self> {
        if m == 0 {
            return Err(Error::NoVertices);
        }
        if m > MAX_LABELS {
            return Err(Error::GuardExceeded { m, max: MAX_LABELS });
        }
        let mut masks = Vec::with_capacity(generators.len());
        for g in generators {
            for &v in g.as_ref() {
                if v == 0 || v > m {
                    return Err(Error::VertexOutOfRange { vertex: v, m });
                }
            }
            masks.push(Face::from_vertices(g.as_ref().iter().copied())?);
        }
        Ok(Self::from_faces(m, Face::full(m), masks))
    }

    /// Closes `generators` downward. Callers guarantee the generators lie in
    /// `vertex_set`.
    pub fn from_faces<I: IntoIterator<Item = Face>>(m: usize, vertex_set: Face, generators: I) -> Self {
        let mut faces = BTreeSet::new();
        faces.insert(Face::EMPTY);
        for g in generators {
            if faces.contains(&g) {
                continue;
            }
            faces.extend(g.subsets());
        }
        SimplicialComplex { m, vertex_set, faces }
    }

    /// The full simplex on `[m]`.
    pub fn simplex(m: usize) -> Result<Self> {
        let all: Vec<usize> = (1..=m).collect();
        Self::new(m, &[all])
    }

    /// The boundary of the simplex on `[m]`.
    pub fn simplex_boundary(m: usize) -> Result<Self> {
        let gens: Vec<Vec<usize>> = (1..=m).map(|skip| (1..=m).filter(|&v| v != skip).collect()).collect();
        Self::new(m, &gens)
    }

    /// The cycle graph `1-2-...-m-1`, for `m >= 3`.
    pub fn cycle(m: usize) -> Result<Self> {
        let gens: Vec<Vec<usize>> = (1..=m).map(|v| vec![v, v % m + 1]).collect();
        Self::new(m, &gens)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertex_set(&self) -> Face {
        self.vertex_set
    }

    /// Vertices of the vertex set that are not faces.
    pub fn ghosts(&self) -> Face {
        let present = self.faces.iter().filter(|f| f.len() == 1).fold(Face::EMPTY, |acc, f| acc.union(*f));
        self.vertex_set.minus(present)
    }

    pub fn contains(&self, face: Face) -> bool {
        self.faces.contains(&face)
    }

    /// Faces in length-lexicographic order.
    pub fn faces(&self) -> impl Iterator<Item = Face> + '_ {
        self.faces.iter().copied()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    /// Dimension of the largest face; `-1` for `{∅}`.
    pub fn dim(&self) -> isize {
        self.faces.iter().map(|f| f.dim()).max().unwrap_or(-1)
    }

    /// Maximal faces.
    pub fn facets(&self) -> Vec<Face> {
        self.faces.iter().copied().filter(|&f| !self.faces.iter().any(|&g| g != f && f.is_subset(g))).collect()
    }

    /// Is the realization empty (the complex `{∅}`)?
    pub fn is_void_realization(&self) -> bool {
        self.faces.len() == 1
    }

    /// The full subcomplex `K_J = {σ ∈ K : σ ⊆ J}` on vertex set `J`.
    pub fn full_subcomplex(&self, subset: Face) -> Result<Self> {
        if !subset.is_subset(self.vertex_set) {
            return Err(Error::SubsetOutsideVertexSet { subset: subset.to_set_string() });
        }
        Ok(self.restrict_unchecked(subset))
    }

    pub(crate) fn restrict_unchecked(&self, subset: Face) -> Self {
        SimplicialComplex {
            m: self.m,
            vertex_set: subset,
            faces: self.faces.iter().copied().filter(|f| f.is_subset(subset)).collect(),
        }
    }

    /// The link `lk_σ(K) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ K}` on vertex set `V − σ`.
    pub fn link(&self, sigma: Face) -> Result<Self> {
        if !self.contains(sigma) {
            return Err(Error::InvalidFace { face: sigma.to_set_string() });
        }
        Ok(self.link_unchecked(sigma))
    }

    pub(crate) fn link_unchecked(&self, sigma: Face) -> Self {
        let faces = self.faces.iter().filter(|f| sigma.is_subset(**f)).map(|f| f.minus(sigma)).collect();
        SimplicialComplex { m: self.m, vertex_set: self.vertex_set.minus(sigma), faces }
    }

    /// The cone on `K` with apex `m + 1`.
    pub fn cone(&self) -> Result<Self> {
        let m = self.m + 1;
        if m > MAX_LABELS {
            return Err(Error::GuardExceeded { m, max: MAX_LABELS });
        }
        let apex = Face::from_bits(1 << self.m);
        let gens: Vec<Face> = self.faces.iter().map(|f| f.union(apex)).collect();
        Ok(Self::from_faces(m, self.vertex_set.union(apex), gens))
    }

    /// The faces `σ₀ = ∅ < σ₁ < … < σ_s` in length-lexicographic order.
    pub fn length_lex_order(&self) -> OrderedFaceList {
        OrderedFaceList(self.faces.iter().copied().collect())
    }

    /// `F_t K = K ∩ F_t Δ[m−1]`: the faces of `K` whose position in the
    /// length-lexicographic order of all subsets of `[m]` is at most `t`.
    pub fn filtration(&self, t: usize) -> Result<Self> {
        let max = simplex_face_count(self.m) - 1;
        if t > max {
            return Err(Error::FiltrationIndexOutOfRange { t, max });
        }
        let faces = self.faces.iter().copied().filter(|f| simplex_position(*f, self.m) <= t).collect();
        Ok(SimplicialComplex { m: self.m, vertex_set: self.vertex_set, faces })
    }

    /// Reduced Betti numbers of the realization over `field`. Ghost vertices
    /// play no role; `{∅}` has `b̃₋₁ = 1`.
    pub fn reduced_betti(&self, field: Field) -> Result<BettiVector> {
        field.validate()?;
        let top = self.dim();
        // chain groups in degrees -1..=top, indexed by degree + 1
        let mut by_degree: Vec<Vec<Face>> = vec![Vec::new(); (top + 2) as usize];
        for f in self.faces() {
            by_degree[(f.dim() + 1) as usize].push(f);
        }
        let index: Vec<HashMap<Face, usize>> =
            by_degree.iter().map(|fs| fs.iter().enumerate().map(|(i, f)| (*f, i)).collect()).collect();
        // ranks[k] = rank of the boundary out of chain group k (degree k - 1)
        let mut ranks = vec![0usize; by_degree.len() + 1];
        for k in 1..by_degree.len() {
            let mut d = Matrix::zeros(by_degree[k - 1].len(), by_degree[k].len());
            for (col, f) in by_degree[k].iter().enumerate() {
                for (g, sign) in f.boundary() {
                    d.set(index[k - 1][&g], col, sign);
                }
            }
            ranks[k] = d.rank(field);
        }
        let values = (0..by_degree.len()).map(|k| by_degree[k].len() - ranks[k] - ranks[k + 1]).collect();
        Ok(BettiVector::from_values(field, values))
    }
}

/// Number of faces of `Δ[m−1]`, the empty face included.
fn simplex_face_count(m: usize) -> usize {
    if m >= usize::BITS as usize {
        usize::MAX
    } else {
        1usize << m
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Position of `face` in the length-lexicographic order of all subsets of
/// `[m]` (the empty face is position 0).
pub fn simplex_position(face: Face, m: usize) -> usize {
    let k = face.len();
    let shorter: usize = (0..k).map(|j| binomial(m, j)).sum();
    // lexicographic rank among k-subsets of [m]
    let mut rank = 0;
    let mut prev = 0;
    for (i, c) in face.vertices().enumerate() {
        for skipped in prev + 1..c {
            rank += binomial(m - skipped, k - i - 1);
        }
        prev = c;
    }
    shorter + rank
}

/// Every simplicial complex on vertex set `[m]` (ghosts allowed), in a fixed
/// order. Brute force over families of subsets, so only for `m <= 4`.
pub fn all_complexes(m: usize) -> Result<Vec<SimplicialComplex>> {
    if m == 0 {
        return Err(Error::NoVertices);
    }
    if m > 4 {
        return Err(Error::GuardExceeded { m, max: 4 });
    }
    let n = 1usize << m;
    let mut out = Vec::new();
    for family in 0u64..1 << n {
        if family & 1 == 0 {
            continue;
        }
        let closed = (0..n)
            .filter(|&s| family >> s & 1 == 1)
            .all(|s| Face::from_bits(s as u64).subsets().all(|t| family >> t.bits() & 1 == 1));
        if closed {
            let faces = (0..n).filter(|&s| family >> s & 1 == 1).map(|s| Face::from_bits(s as u64));
            out.push(SimplicialComplex::from_faces(m, Face::full(m), faces));
        }
    }
    Ok(out)
}

/// Faces `σ₀ = ∅ < σ₁ < … < σ_s` in length-lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedFaceList(Vec<Face>);

impl OrderedFaceList {
    pub fn as_slice(&self) -> &[Face] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for OrderedFaceList {
    /// Renders as `∅ < v1 < v2 < v1v2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Face::to_string).collect();
        write!(f, "{}", parts.join(" < "))
    }
}

/// Reduced Betti numbers `b̃_q`, `q >= -1`, over a field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiVector {
    field: Field,
    // values[q + 1] = b̃_q, trailing zeros trimmed
    values: Vec<usize>,
}

impl BettiVector {
    /// `values[k]` is `b̃_{k-1}`.
    pub fn from_values(field: Field, mut values: Vec<usize>) -> Self {
        while values.last() == Some(&0) {
            values.pop();
        }
        BettiVector { field, values }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, q: isize) -> usize {
        if q < -1 {
            return 0;
        }
        self.values.get((q + 1) as usize).copied().unwrap_or(0)
    }

    /// `(degree, b̃)` for every nonzero entry.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.values.iter().enumerate().filter(|(_, &b)| b != 0).map(|(k, &b)| (k as isize - 1, b))
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// `Σ (−1)^q b̃_q`.
    pub fn euler_characteristic(&self) -> i64 {
        self.nonzero().map(|(q, b)| if q.rem_euclid(2) == 0 { b as i64 } else { -(b as i64) }).sum()
    }
}
