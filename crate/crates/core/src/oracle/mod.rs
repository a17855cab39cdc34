//! Chain-level ground truth for polyhedral products.
//!
//! Each vertex carries an explicit finite CW pair `(X_i, A_i)` given by its
//! cellular chain complex. The polyhedral product `Z(K; (X, A))` is the union
//! of the product cells `c_1 × … × c_m` whose support `{i : c_i ∉ A_i}` is a
//! face of `K`, so its cellular chains are the span of those tensors inside
//! `⊗ C(X_i)`, with the Leibniz boundary. Because `A_i` is a subcomplex, the
//! boundary never enlarges a support and the span is a subcomplex.
//!
//! The smash version uses the reduced chains `C(X_i)/C(∗)`: tensors with a
//! basepoint factor are dropped, together with every boundary term that
//! lands on one.
//!
//! Nothing here uses the wedge decomposition, which makes it an independent
//! check on [`crate::cartan`].

pub mod catalog;

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::pairs::PairHomology;
use crate::series::GradedSeries;
use crate::simplicial::SimplicialComplex;

/// File form of a cell pair.
///
/// `boundary["q"]` has one row per `q`-cell (in the order listed under
/// `cells["q"]`) giving its coefficients on the `(q−1)`-cells. Missing
/// dimensions have zero boundary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellPairSpec {
    pub cells: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub boundary: BTreeMap<String, Vec<Vec<i64>>>,
    pub basepoint: String,
    pub a_cells: Vec<String>,
}

/// A pointed finite CW pair `(X, A)` described by its cellular chains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellPair {
    // names[q] = q-cells in order
    names: Vec<Vec<String>>,
    // boundary[q]: rows are q-cells, columns (q-1)-cells; boundary[0] is empty
    boundary: Vec<Matrix>,
    in_a: Vec<Vec<bool>>,
    basepoint: usize,
}

impl CellPair {
    pub fn from_spec(spec: &CellPairSpec) -> Result<Self> {
        let bad = |msg: String| Error::InvalidCellPair(msg);
        let parse_dim = |key: &str| {
            key.parse::<usize>().map_err(|_| bad(format!("dimension key {key:?} is not a nonnegative integer")))
        };

        let mut by_dim: BTreeMap<usize, Vec<String>> = BTreeMap::new();
        for (key, names) in &spec.cells {
            by_dim.insert(parse_dim(key)?, names.clone());
        }
        let top = by_dim.keys().next_back().copied().unwrap_or(0);
        let names: Vec<Vec<String>> = (0..=top).map(|q| by_dim.remove(&q).unwrap_or_default()).collect();

        let mut rows_by_dim: BTreeMap<usize, Vec<Vec<i64>>> = BTreeMap::new();
        for (key, rows) in &spec.boundary {
            let q = parse_dim(key)?;
            if q == 0 || q > top {
                if rows.iter().all(|r| r.iter().all(|&x| x == 0)) {
                    continue;
                }
                return Err(bad(format!("boundary given in dimension {q}, which has no cells below or none at all")));
            }
            rows_by_dim.insert(q, rows.clone());
        }
        let mut boundary = vec![Matrix::zeros(names[0].len(), 0)];
        for q in 1..=top {
            let (n, below) = (names[q].len(), names[q - 1].len());
            let m = match rows_by_dim.remove(&q) {
                None => Matrix::zeros(n, below),
                Some(rows) => {
                    if rows.len() != n || rows.iter().any(|r| r.len() != below) {
                        return Err(bad(format!("boundary in dimension {q} must be {n} rows of {below} entries")));
                    }
                    if n == 0 {
                        Matrix::zeros(0, below)
                    } else {
                        Matrix::from_rows(&rows)
                    }
                }
            };
            boundary.push(m);
        }

        let mut seen = HashSet::new();
        let mut lookup = HashMap::new();
        for (q, row) in names.iter().enumerate() {
            for (i, name) in row.iter().enumerate() {
                if !seen.insert(name.clone()) {
                    return Err(bad(format!("cell name {name:?} is used twice")));
                }
                lookup.insert(name.clone(), (q, i));
            }
        }
        let basepoint = match lookup.get(&spec.basepoint) {
            Some(&(0, i)) => i,
            Some(_) => return Err(bad(format!("basepoint {:?} is not a 0-cell", spec.basepoint))),
            None => return Err(bad(format!("basepoint {:?} is not a cell", spec.basepoint))),
        };
        let mut in_a: Vec<Vec<bool>> = names.iter().map(|r| vec![false; r.len()]).collect();
        for name in &spec.a_cells {
            let &(q, i) = lookup.get(name).ok_or_else(|| bad(format!("A-cell {name:?} is not a cell")))?;
            in_a[q][i] = true;
        }
        if !in_a[0][basepoint] {
            return Err(bad("the basepoint must belong to A".into()));
        }

        let pair = CellPair { names, boundary, in_a, basepoint };
        pair.validate()?;
        Ok(pair)
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Error::InvalidCellPair(msg);
        for q in 2..self.boundary.len() {
            if !self.boundary[q].mul(&self.boundary[q - 1]).is_zero() {
                return Err(bad(format!("∂∘∂ ≠ 0 from dimension {q}")));
            }
        }
        for q in 1..self.boundary.len() {
            for i in 0..self.names[q].len() {
                if !self.in_a[q][i] {
                    continue;
                }
                let row = self.boundary[q].row(i);
                if let Some(j) = (0..row.len()).find(|&j| row[j] != 0 && !self.in_a[q - 1][j]) {
                    return Err(bad(format!(
                        "A is not a subcomplex: ∂{} involves {}",
                        self.names[q][i],
                        self.names[q - 1][j]
                    )));
                }
            }
        }
        // path-connected: one component in X and in A
        let components = |restrict_to_a: bool| {
            let keep0: Vec<usize> = (0..self.names[0].len()).filter(|&i| !restrict_to_a || self.in_a[0][i]).collect();
            let rank = if self.boundary.len() > 1 {
                let keep1: Vec<usize> =
                    (0..self.names[1].len()).filter(|&i| !restrict_to_a || self.in_a[1][i]).collect();
                self.boundary[1].select_rows(&keep1).select_cols(&keep0).rank(Field::Rational)
            } else {
                0
            };
            keep0.len() - rank
        };
        if components(false) != 1 {
            return Err(bad("X is not connected".into()));
        }
        if components(true) != 1 {
            return Err(bad("A is not connected".into()));
        }
        Ok(())
    }

    pub fn top_dim(&self) -> usize {
        self.names.len() - 1
    }

    pub fn basepoint_name(&self) -> &str {
        &self.names[0][self.basepoint]
    }

    /// Back to the file form.
    pub fn to_spec(&self) -> CellPairSpec {
        let mut cells = BTreeMap::new();
        let mut boundary = BTreeMap::new();
        let mut a_cells = Vec::new();
        for (q, row) in self.names.iter().enumerate() {
            cells.insert(q.to_string(), row.clone());
            a_cells.extend(row.iter().zip(&self.in_a[q]).filter(|(_, &a)| a).map(|(n, _)| n.clone()));
            if q > 0 && !self.boundary[q].is_zero() {
                let m = &self.boundary[q];
                boundary.insert(q.to_string(), (0..m.rows()).map(|r| m.row(r).to_vec()).collect());
            }
        }
        CellPairSpec { cells, boundary, basepoint: self.basepoint_name().to_string(), a_cells }
    }

    /// Ranks of the cellular boundary out of each dimension, over `field`,
    /// optionally restricted to `A`. `ranks[q]` is the rank of `∂: C_q → C_{q−1}`.
    fn boundary_ranks(&self, field: Field, only_a: bool) -> Vec<usize> {
        let mut ranks = vec![0; self.names.len() + 1];
        for (q, rank) in ranks.iter_mut().enumerate().take(self.names.len()).skip(1) {
            let rows: Vec<usize> = (0..self.names[q].len()).filter(|&i| !only_a || self.in_a[q][i]).collect();
            let cols: Vec<usize> = (0..self.names[q - 1].len()).filter(|&i| !only_a || self.in_a[q - 1][i]).collect();
            *rank = self.boundary[q].select_rows(&rows).select_cols(&cols).rank(field);
        }
        ranks
    }

    fn count(&self, q: usize, only_a: bool) -> usize {
        self.in_a.get(q).map_or(0, |row| row.iter().filter(|&&a| a || !only_a).count())
    }

    /// Reduced homology dimensions of `X` (or `A`), degree ≥ 1 only.
    fn reduced_dims(&self, field: Field, only_a: bool) -> BTreeMap<u32, usize> {
        let ranks = self.boundary_ranks(field, only_a);
        (1..self.names.len())
            .map(|q| (q as u32, self.count(q, only_a) - ranks[q] - ranks[q + 1]))
            .filter(|&(_, d)| d != 0)
            .collect()
    }

    /// Homology data of the pair over `field`.
    ///
    /// The rank of `ι_*` in degree `q` is `dim H_q(A) − dim ker ι_*`, where
    /// `ker ι_* = (B_q(X) ∩ C_q(A)) / B_q(A)` and `dim (B_q(X) ∩ C_q(A))` is
    /// `rank ∂^X_{q+1}` minus the rank of its rows on cells outside `A`.
    pub fn homology(&self, field: Field) -> Result<PairHomology> {
        field.validate()?;
        let x_ranks = self.boundary_ranks(field, false);
        let a_ranks = self.boundary_ranks(field, true);
        // connectivity can fail over 𝔽_p only for degenerate ∂_1 entries
        for (only_a, ranks) in [(false, &x_ranks), (true, &a_ranks)] {
            if self.count(0, only_a) - ranks[1] != 1 {
                return Err(Error::InvalidCellPair(format!("H_0 is not one-dimensional over {field}")));
            }
        }
        let a_dims = self.reduced_dims(field, true);
        let x_dims = self.reduced_dims(field, false);
        let mut inc_rank = BTreeMap::new();
        for (&q, &a_dim) in &a_dims {
            let q_us = q as usize;
            let above = q_us + 1;
            let (bx, outside) = if above < self.names.len() {
                let non_a: Vec<usize> = (0..self.names[q_us].len()).filter(|&i| !self.in_a[q_us][i]).collect();
                // boundary[above] rows are (q+1)-cells, columns q-cells
                let proj = self.boundary[above].select_cols(&non_a).rank(field);
                (x_ranks[above], proj)
            } else {
                (0, 0)
            };
            let kernel = bx - outside - a_ranks[above];
            inc_rank.insert(q, a_dim - kernel);
        }
        PairHomology::new(a_dims, x_dims, inc_rank)
    }
}

/// Finite chain complex with integer boundaries, read over a field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplexOverField {
    field: Field,
    // basis[n] = labels of degree-n generators
    basis: Vec<Vec<String>>,
    // boundary[n]: C_n -> C_{n-1}, rows indexed by degree n-1, columns by degree n
    boundary: Vec<Matrix>,
}

impl ChainComplexOverField {
    /// Checks `∂∘∂ = 0` over the integers.
    pub fn new(field: Field, basis: Vec<Vec<String>>, boundary: Vec<Matrix>) -> Result<Self> {
        field.validate()?;
        assert_eq!(basis.len(), boundary.len());
        for n in 2..boundary.len() {
            if !boundary[n - 1].mul(&boundary[n]).is_zero() {
                return Err(Error::BoundarySquareNonZero(n));
            }
        }
        Ok(ChainComplexOverField { field, basis, boundary })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rank_in_degree(&self, n: usize) -> usize {
        self.basis.get(n).map_or(0, Vec::len)
    }

    pub fn basis(&self, n: usize) -> &[String] {
        self.basis.get(n).map_or(&[], Vec::as_slice)
    }

    pub fn top_degree(&self) -> usize {
        self.basis.len().saturating_sub(1)
    }

    /// `∂_n` as a matrix from degree `n` to degree `n − 1`.
    pub fn boundary(&self, n: usize) -> &Matrix {
        &self.boundary[n]
    }

    /// `Σ (−1)^n rank C_n`.
    pub fn euler_characteristic(&self) -> i64 {
        self.basis.iter().enumerate().map(|(n, b)| if n % 2 == 0 { b.len() as i64 } else { -(b.len() as i64) }).sum()
    }
}

/// `dim H_n = nullity ∂_n − rank ∂_{n+1}`. With `reduced`, one class is
/// removed from degree 0 (the basepoint component of a product complex);
/// smash complexes are already reduced and should pass `false`.
pub fn homology_series(c: &ChainComplexOverField, reduced: bool) -> GradedSeries {
    let ranks: Vec<usize> = (0..c.basis.len()).map(|n| c.boundary[n].rank(c.field)).collect();
    let rank = |n: usize| ranks.get(n).copied().unwrap_or(0);
    let mut terms = Vec::new();
    for n in 0..c.basis.len() {
        let mut dim = c.basis[n].len() - rank(n) - rank(n + 1);
        if reduced && n == 0 {
            dim = dim.saturating_sub(1);
        }
        terms.push((n as u32, dim as u64));
    }
    GradedSeries::from_terms(terms)
}

/// Cellular chains of `Z(K; (X, A))`.
pub fn product_chain_complex(k: &SimplicialComplex, pairs: &[CellPair], field: Field) -> Result<ChainComplexOverField> {
    tensor_complex(k, pairs, field, false)
}

/// Reduced cellular chains of `Ẑ(K; (X, A))`.
pub fn smash_chain_complex(k: &SimplicialComplex, pairs: &[CellPair], field: Field) -> Result<ChainComplexOverField> {
    tensor_complex(k, pairs, field, true)
}

struct FactorCell {
    dim: usize,
    in_a: bool,
    basepoint: bool,
    label: String,
    // (index of boundary cell within this factor, coefficient)
    boundary: Vec<(usize, i64)>,
}

fn flatten(pair: &CellPair) -> Vec<FactorCell> {
    let mut offsets = vec![0];
    for row in &pair.names {
        offsets.push(offsets.last().unwrap() + row.len());
    }
    let mut out = Vec::new();
    for (q, row) in pair.names.iter().enumerate() {
        for (i, name) in row.iter().enumerate() {
            let boundary = if q == 0 {
                Vec::new()
            } else {
                pair.boundary[q]
                    .row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(j, &c)| (offsets[q - 1] + j, c))
                    .collect()
            };
            out.push(FactorCell {
                dim: q,
                in_a: pair.in_a[q][i],
                basepoint: q == 0 && i == pair.basepoint,
                label: name.clone(),
                boundary,
            });
        }
    }
    out
}

fn tensor_complex(
    k: &SimplicialComplex,
    pairs: &[CellPair],
    field: Field,
    smash: bool,
) -> Result<ChainComplexOverField> {
    if pairs.len() != k.m() {
        return Err(Error::ModelCount { expected: k.m(), got: pairs.len() });
    }
    let coords: Vec<usize> = k.vertex_set().vertices().collect();
    let factors: Vec<Vec<FactorCell>> = coords.iter().map(|&v| flatten(&pairs[v - 1])).collect();

    // enumerate admissible tuples depth-first, pruning supports outside K
    let mut tuples: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<(Vec<usize>, u64)> = vec![(Vec::new(), 0)];
    while let Some((prefix, support)) = stack.pop() {
        let pos = prefix.len();
        if pos == coords.len() {
            tuples.push(prefix);
            continue;
        }
        for (ci, cell) in factors[pos].iter().enumerate().rev() {
            if smash && cell.basepoint {
                continue;
            }
            let support = if cell.in_a { support } else { support | 1 << (coords[pos] - 1) };
            if !k.contains(crate::simplicial::Face::from_bits(support)) {
                continue;
            }
            let mut next = prefix.clone();
            next.push(ci);
            stack.push((next, support));
        }
    }

    let degree_of = |t: &[usize]| -> usize { t.iter().zip(&factors).map(|(&c, f)| f[c].dim).sum() };
    let top = tuples.iter().map(|t| degree_of(t)).max().unwrap_or(0);
    let mut basis: Vec<Vec<String>> = vec![Vec::new(); top + 1];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::with_capacity(tuples.len());
    for t in &tuples {
        let n = degree_of(t);
        index.insert(t.clone(), basis[n].len());
        let label = if t.is_empty() {
            "1".to_string()
        } else {
            t.iter().zip(&factors).map(|(&c, f)| f[c].label.as_str()).collect::<Vec<_>>().join("⊗")
        };
        basis[n].push(label);
    }

    let mut boundary: Vec<Matrix> =
        (0..=top).map(|n| Matrix::zeros(if n == 0 { 0 } else { basis[n - 1].len() }, basis[n].len())).collect();
    for t in &tuples {
        let n = degree_of(t);
        let col = index[t];
        let mut preceding = 0;
        for (i, &c) in t.iter().enumerate() {
            let cell = &factors[i][c];
            let sign = if preceding % 2 == 0 { 1 } else { -1 };
            for &(target, coeff) in &cell.boundary {
                if smash && factors[i][target].basepoint {
                    continue;
                }
                let mut face = t.clone();
                face[i] = target;
                let row = *index.get(&face).ok_or_else(|| {
                    Error::InvalidCellPair("boundary leaves the polyhedral product; A is not a subcomplex".into())
                })?;
                boundary[n].add_to(row, col, sign * coeff);
            }
            preceding += cell.dim;
        }
    }
    ChainComplexOverField::new(field, basis, boundary)
}
