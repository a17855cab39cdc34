//! Homology of a pointed pair `(X, A)` and its wedge-decomposable model.
//!
//! Over a field the reduced homology of `A` splits as image ⊕ kernel of
//! `ι_*: H̃(A) → H̃(X)`, and that of `X` as image ⊕ cokernel. Those three
//! graded pieces are the series of `B`, `E` and `C` in a wedge-decomposable
//! pair `(B ∨ C, B ∨ E)` whose smash polyhedral product has the same
//! homology as the one built from `(X, A)`.

use std::collections::BTreeMap;

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::series::GradedSeries;

/// Per-degree dimensions of `H̃(A)`, `H̃(X)` and the rank of the inclusion.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PairHomology {
    a_dims: BTreeMap<u32, usize>,
    x_dims: BTreeMap<u32, usize>,
    inc_rank: BTreeMap<u32, usize>,
}

impl PairHomology {
    /// Validates and stores the data.
    ///
    /// Every degree must be at least 1 (both spaces are path-connected).
    /// A rank must be listed wherever both `A` and `X` have homology; a
    /// missing rank is never read as "maximal".
    pub fn new(
        a_dims: BTreeMap<u32, usize>,
        x_dims: BTreeMap<u32, usize>,
        inc_rank: BTreeMap<u32, usize>,
    ) -> Result<Self> {
        let strip =
            |m: BTreeMap<u32, usize>| -> BTreeMap<u32, usize> { m.into_iter().filter(|(_, v)| *v != 0).collect() };
        let (a_dims, x_dims, inc_rank) = (strip(a_dims), strip(x_dims), inc_rank);
        for (name, map) in [("a_dims", &a_dims), ("x_dims", &x_dims)] {
            if map.contains_key(&0) {
                return Err(Error::DegreeZeroTerm { name });
            }
        }
        for (&degree, &rank) in &inc_rank {
            let a = a_dims.get(&degree).copied().unwrap_or(0);
            let x = x_dims.get(&degree).copied().unwrap_or(0);
            if rank > a.min(x) {
                return Err(Error::InconsistentRank { degree, rank, a, x });
            }
        }
        for &degree in a_dims.keys() {
            if x_dims.contains_key(&degree) && !inc_rank.contains_key(&degree) {
                return Err(Error::MissingRank { degree });
            }
        }
        Ok(PairHomology { a_dims, x_dims, inc_rank: strip(inc_rank) })
    }

    pub fn a_dim(&self, q: u32) -> usize {
        self.a_dims.get(&q).copied().unwrap_or(0)
    }

    pub fn x_dim(&self, q: u32) -> usize {
        self.x_dims.get(&q).copied().unwrap_or(0)
    }

    pub fn inc_rank(&self, q: u32) -> usize {
        self.inc_rank.get(&q).copied().unwrap_or(0)
    }

    /// Reduced series of `A`.
    pub fn a_series(&self) -> GradedSeries {
        dims_series(&self.a_dims)
    }

    /// Reduced series of `X`.
    pub fn x_series(&self) -> GradedSeries {
        dims_series(&self.x_dims)
    }

    /// The wedge-decomposable model: `B` is the image of `ι_*`, `E` its
    /// kernel and `C` its cokernel, degree by degree.
    pub fn wedge_model(&self) -> WedgeModel {
        let image = |q: u32| self.inc_rank(q);
        let b = GradedSeries::from_terms(self.inc_rank.iter().map(|(&q, &r)| (q, r as u64)));
        let e = GradedSeries::from_terms(self.a_dims.iter().map(|(&q, &d)| (q, (d - image(q)) as u64)));
        let c = GradedSeries::from_terms(self.x_dims.iter().map(|(&q, &d)| (q, (d - image(q)) as u64)));
        WedgeModel { b, c, e }
    }
}

fn dims_series(m: &BTreeMap<u32, usize>) -> GradedSeries {
    GradedSeries::from_terms(m.iter().map(|(&q, &d)| (q, d as u64)))
}

/// Reduced series of `B`, `C` and `E` for one vertex of a wedge-decomposable
/// pair `(U, V) = (B ∨ C, B ∨ E)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WedgeModel {
    b: GradedSeries,
    c: GradedSeries,
    e: GradedSeries,
}

impl WedgeModel {
    /// A model given directly by its three series. No series may have a
    /// constant term.
    pub fn from_series(b: GradedSeries, c: GradedSeries, e: GradedSeries) -> Result<Self> {
        for (name, s) in [("b", &b), ("c", &c), ("e", &e)] {
            if !s.coeff(0).is_zero() {
                return Err(Error::DegreeZeroTerm { name });
            }
        }
        Ok(WedgeModel { b, c, e })
    }

    pub fn b(&self) -> &GradedSeries {
        &self.b
    }

    pub fn c(&self) -> &GradedSeries {
        &self.c
    }

    pub fn e(&self) -> &GradedSeries {
        &self.e
    }

    /// Reduced series of `U = B ∨ C`.
    pub fn u_series(&self) -> GradedSeries {
        self.b.add(&self.c)
    }

    /// Reduced series of `V = B ∨ E`.
    pub fn v_series(&self) -> GradedSeries {
        self.b.add(&self.e)
    }

    /// The pair homology this model realizes: `A = B ∨ E`, `X = B ∨ C`, and
    /// the inclusion is the identity on `B` and zero on `E`.
    pub fn pair_homology(&self) -> Result<PairHomology> {
        let dims = |s: &GradedSeries| -> Result<BTreeMap<u32, usize>> {
            s.terms()
                .map(|(d, c)| c.to_usize().map(|c| (d, c)).ok_or(Error::CoefficientTooLarge { degree: d }))
                .collect()
        };
        let a = dims(&self.v_series())?;
        let x = dims(&self.u_series())?;
        let b = dims(&self.b)?;
        let ranks = a.keys().chain(x.keys()).map(|q| (*q, b.get(q).copied().unwrap_or(0))).collect();
        PairHomology::new(a, x, ranks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dims(pairs: &[(u32, usize)]) -> BTreeMap<u32, usize> {
        pairs.iter().copied().collect()
    }

    fn s(text: &str) -> GradedSeries {
        text.parse().unwrap()
    }

    #[test]
    fn mapping_cylinder_pair() {
        // X ≃ S^4 ∨ S^6, A = CP^2, inclusion onto the 4-class
        let p = PairHomology::new(dims(&[(2, 1), (4, 1)]), dims(&[(4, 1), (6, 1)]), dims(&[(4, 1)])).unwrap();
        let w = p.wedge_model();
        assert_eq!((w.b(), w.c(), w.e()), (&s("t^4"), &s("t^6"), &s("t^2")));
    }

    #[test]
    fn pair_with_point_subspace() {
        let p = PairHomology::new(dims(&[]), dims(&[(3, 2)]), dims(&[])).unwrap();
        let w = p.wedge_model();
        assert!(w.b().is_zero() && w.e().is_zero());
        assert_eq!(w.c(), &s("2t^3"));
    }

    #[test]
    fn projective_pair_mod_two() {
        let p = PairHomology::new(dims(&[(1, 1), (2, 1)]), dims(&[(1, 1), (2, 1), (3, 1)]), dims(&[(1, 1), (2, 1)]))
            .unwrap();
        let w = p.wedge_model();
        assert_eq!((w.b(), w.c(), w.e()), (&s("t+t^2"), &s("t^3"), &GradedSeries::zero()));
    }

    #[test]
    fn invalid_pair_data() {
        assert_eq!(
            PairHomology::new(dims(&[(2, 1)]), dims(&[(2, 1)]), dims(&[(2, 2)])),
            Err(Error::InconsistentRank { degree: 2, rank: 2, a: 1, x: 1 })
        );
        assert_eq!(
            PairHomology::new(dims(&[(2, 1)]), dims(&[(2, 1)]), dims(&[])),
            Err(Error::MissingRank { degree: 2 })
        );
        assert_eq!(
            PairHomology::new(dims(&[(0, 1)]), dims(&[]), dims(&[])),
            Err(Error::DegreeZeroTerm { name: "a_dims" })
        );
        // a zero rank is still a listed rank
        assert!(PairHomology::new(dims(&[(2, 1)]), dims(&[(2, 1)]), dims(&[(2, 0)])).is_ok());
    }

    #[test]
    fn models_from_series() {
        let w = WedgeModel::from_series(s("t^4"), s("t^6"), s("t^2")).unwrap();
        assert_eq!(w.u_series(), s("t^4+t^6"));
        assert_eq!(w.v_series(), s("t^2+t^4"));
        // (D^2, S^1): B = *, C = D^2, E = S^1
        assert!(WedgeModel::from_series(GradedSeries::zero(), GradedSeries::zero(), s("t")).is_ok());
        assert_eq!(
            WedgeModel::from_series(GradedSeries::zero(), GradedSeries::zero(), s("1+t")),
            Err(Error::DegreeZeroTerm { name: "e" })
        );
    }

    fn pair_homology() -> impl Strategy<Value = PairHomology> {
        proptest::collection::btree_map(1u32..6, (0usize..4, 0usize..4, 0usize..4), 0..4).prop_map(|m| {
            let mut a = BTreeMap::new();
            let mut x = BTreeMap::new();
            let mut r = BTreeMap::new();
            for (q, (da, dx, dr)) in m {
                a.insert(q, da);
                x.insert(q, dx);
                r.insert(q, dr.min(da).min(dx));
            }
            PairHomology::new(a, x, r).unwrap()
        })
    }

    proptest! {
        #[test]
        fn model_reconstructs_the_pair(p in pair_homology()) {
            let w = p.wedge_model();
            prop_assert_eq!(w.u_series(), p.x_series());
            prop_assert_eq!(w.v_series(), p.a_series());
        }

        #[test]
        fn modeling_is_idempotent(p in pair_homology()) {
            let w = p.wedge_model();
            prop_assert_eq!(w.pair_homology().unwrap().wedge_model(), w);
        }
    }
}
