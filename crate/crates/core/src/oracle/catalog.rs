//! Small cell models of the pairs used throughout the tests and examples.

use std::collections::BTreeMap;

use super::{CellPair, CellPairSpec};

fn build(cells: &[(usize, &[&str])], boundary: &[(usize, Vec<Vec<i64>>)], a_cells: &[&str]) -> CellPair {
    let spec = CellPairSpec {
        cells: cells.iter().map(|(q, names)| (q.to_string(), names.iter().map(|s| s.to_string()).collect())).collect(),
        boundary: boundary.iter().map(|(q, rows)| (q.to_string(), rows.clone())).collect::<BTreeMap<_, _>>(),
        basepoint: "*".into(),
        a_cells: a_cells.iter().map(|s| s.to_string()).collect(),
    };
    CellPair::from_spec(&spec).expect("catalog cell pairs are valid")
}

/// `(S^n, ∗)` with one `n`-cell.
pub fn sphere(n: usize) -> CellPair {
    assert!(n >= 1);
    build(&[(0, &["*"]), (n, &["s"])], &[], &["*"])
}

/// `(D^{n+1}, S^n)`: the top cell is attached by the identity of `S^n`.
pub fn disk_sphere(n: usize) -> CellPair {
    assert!(n >= 1);
    build(&[(0, &["*"]), (n, &["s"]), (n + 1, &["D"])], &[(n + 1, vec![vec![1]])], &["*", "s"])
}

/// `(D², S¹)`, the pair of moment-angle complexes.
pub fn disk_circle() -> CellPair {
    disk_sphere(1)
}

/// `(ℝP³, ℝP²)` with one cell per dimension; `∂e_k = (1 + (−1)^k) e_{k−1}`.
pub fn rp3_rp2() -> CellPair {
    build(
        &[(0, &["*"]), (1, &["e1"]), (2, &["e2"]), (3, &["e3"])],
        &[(2, vec![vec![2]]), (3, vec![vec![0]])],
        &["*", "e1", "e2"],
    )
}

/// A wedge of spheres of the given dimensions, with `A` the wedge of the
/// first `a_count` of them.
pub fn wedge_of_spheres(dims: &[usize], a_count: usize) -> CellPair {
    assert!(dims.iter().all(|&d| d >= 1) && a_count <= dims.len());
    let names: Vec<String> = (0..dims.len()).map(|i| format!("s{i}")).collect();
    let mut cells: BTreeMap<String, Vec<String>> = BTreeMap::new();
    cells.insert("0".into(), vec!["*".into()]);
    for (name, d) in names.iter().zip(dims) {
        cells.entry(d.to_string()).or_default().push(name.clone());
    }
    let mut a_cells = vec!["*".to_string()];
    a_cells.extend(names[..a_count].iter().cloned());
    let spec = CellPairSpec { cells, boundary: BTreeMap::new(), basepoint: "*".into(), a_cells };
    CellPair::from_spec(&spec).expect("catalog cell pairs are valid")
}

/// A pair with the homology of `(M_f, ℂP²)` for the composite
/// `ℂP² → ℂP³ → ℂP³/ℂP¹`: `A ≃ S² ∨ S⁴`, `X ≃ S⁴ ∨ S⁶` (the 3-cell cones off
/// the 2-sphere) and the inclusion is onto the 4-dimensional class.
pub fn mapping_cylinder_cp2() -> CellPair {
    build(
        &[(0, &["*"]), (2, &["e2"]), (3, &["e3"]), (4, &["e4"]), (6, &["e6"])],
        &[(3, vec![vec![1]])],
        &["*", "e2", "e4"],
    )
}

/// A cell model of `(B ∨ C, B ∨ E)` where `B`, `C` and `E` are wedges of
/// spheres of the listed dimensions. Each sphere of `E` is coned off in `X`
/// by an extra cell, so `E → X` is null-homotopic.
pub fn wedge_decomposable(b: &[usize], c: &[usize], e: &[usize]) -> CellPair {
    assert!(b.iter().chain(c).chain(e).all(|&d| d >= 1));
    let mut cells: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    cells.entry(0).or_default().push("*".into());
    let mut a_cells = vec!["*".to_string()];
    for (i, &d) in b.iter().enumerate() {
        cells.entry(d).or_default().push(format!("b{i}"));
        a_cells.push(format!("b{i}"));
    }
    for (i, &d) in c.iter().enumerate() {
        cells.entry(d).or_default().push(format!("c{i}"));
    }
    let mut cones = Vec::new();
    for (i, &d) in e.iter().enumerate() {
        cells.entry(d).or_default().push(format!("e{i}"));
        a_cells.push(format!("e{i}"));
        cells.entry(d + 1).or_default().push(format!("ce{i}"));
        cones.push((d + 1, format!("ce{i}"), format!("e{i}")));
    }
    let mut boundary: BTreeMap<String, Vec<Vec<i64>>> = BTreeMap::new();
    for (&q, names) in &cells {
        if q == 0 {
            continue;
        }
        let below = cells.get(&(q - 1)).map_or(&[][..], Vec::as_slice);
        let rows: Vec<Vec<i64>> = names
            .iter()
            .map(|n| {
                below
                    .iter()
                    .map(|target| i64::from(cones.iter().any(|(cq, cn, ce)| *cq == q && cn == n && ce == target)))
                    .collect()
            })
            .collect();
        if rows.iter().any(|r| r.iter().any(|&x| x != 0)) {
            boundary.insert(q.to_string(), rows);
        }
    }
    let spec = CellPairSpec {
        cells: cells.into_iter().map(|(q, n)| (q.to_string(), n)).collect(),
        boundary,
        basepoint: "*".into(),
        a_cells,
    };
    CellPair::from_spec(&spec).expect("wedge-decomposable cell models are valid")
}

impl CellPair {
    /// The same `X` with `A` shrunk to the basepoint.
    pub fn with_point_subspace(&self) -> CellPair {
        let mut spec = self.to_spec();
        spec.a_cells = vec![spec.basepoint.clone()];
        CellPair::from_spec(&spec).expect("a basepoint is always a subcomplex")
    }
}
