//! Poincaré series of polyhedral smash products for wedge-decomposable pairs.
//!
//! For `(U_i, V_i) = (B_i ∨ C_i, B_i ∨ E_i)` with `E_i → C_i` null-homotopic,
//! the smash polyhedral product splits as a wedge indexed by pairs `(I, σ)`,
//! `I ⊆ [m]` and `σ ∈ K_I`:
//!
//! ```text
//!   Ẑ(K; (U, V)) ≃ ⋁_{I} ⋁_{σ ∈ K_I} |lk_σ(K_I)| ∗ D̂^I_{C,E}(σ) ∧ ⋀_{j ∉ I} B_j
//! ```
//!
//! where `D̂^I_{C,E}(σ)` smashes `C_i` over `i ∈ σ` with `E_i` over `i ∈ I − σ`.
//! Passing to reduced series, the join with a nonempty link contributes
//! `t · P̄(|lk|)` and the join with the empty space contributes `1`.
//!
//! The outer sum over `I` is evaluated in parallel. Summand listings are
//! always returned in canonical order: `I` by increasing bitmask, then `σ` in
//! length-lexicographic order within `K_I`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::pairs::WedgeModel;
use crate::series::GradedSeries;
use crate::simplicial::{Face, SimplicialComplex, DEFAULT_MAX_VERTICES};

/// Settings shared by every engine entry point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineOptions {
    pub field: Field,
    /// Largest vertex set the engine will enumerate subsets of.
    pub max_vertices: usize,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions { field: Field::Rational, max_vertices: DEFAULT_MAX_VERTICES }
    }
}

impl EngineOptions {
    pub fn with_field(field: Field) -> Self {
        EngineOptions { field, ..Self::default() }
    }

    fn check(&self, k: &SimplicialComplex, models: &[WedgeModel]) -> Result<()> {
        self.field.validate()?;
        let n = k.vertex_set().len();
        if n > self.max_vertices {
            return Err(Error::GuardExceeded { m: n, max: self.max_vertices });
        }
        if models.len() != k.m() {
            return Err(Error::ModelCount { expected: k.m(), got: models.len() });
        }
        Ok(())
    }
}

/// One wedge summand `|lk_σ(K_I)| ∗ D̂^I_{C,E}(σ) ∧ ⋀_{j ∉ I} B_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeSummand {
    pub subset: Face,
    pub sigma: Face,
    pub link: SimplicialComplex,
    /// `t · P̄(|lk_σ(K_I)|)`, or `1` for an empty link.
    pub join_factor: GradedSeries,
    /// `P̄(D̂^I_{C,E}(σ))`.
    pub d_hat: GradedSeries,
    /// `∏_{j ∉ I} P̄(B_j)`.
    pub b_factor: GradedSeries,
    /// Product of the three factors.
    pub series: GradedSeries,
}

/// `P̄(D̂^I_{C,E}(σ)) = ∏_{i∈σ} P̄(C_i) · ∏_{i∈I−σ} P̄(E_i)`; `1` for `I = ∅`.
pub fn d_hat_series(subset: Face, sigma: Face, models: &[WedgeModel]) -> Result<GradedSeries> {
    if !sigma.is_subset(subset) {
        return Err(Error::SigmaNotInSubset { sigma: sigma.to_set_string(), subset: subset.to_set_string() });
    }
    if let Some(v) = subset.vertices().find(|&v| v > models.len()) {
        return Err(Error::VertexOutOfRange { vertex: v, m: models.len() });
    }
    Ok(d_hat_unchecked(subset, sigma, models))
}

fn d_hat_unchecked(subset: Face, sigma: Face, models: &[WedgeModel]) -> GradedSeries {
    let mut acc = GradedSeries::one();
    for v in subset.vertices() {
        let model = &models[v - 1];
        let factor = if sigma.contains(v) { model.c() } else { model.e() };
        if factor.is_zero() {
            return GradedSeries::zero();
        }
        acc = acc.mul(factor);
    }
    acc
}

fn b_product(vertices: Face, models: &[WedgeModel]) -> GradedSeries {
    GradedSeries::product(vertices.vertices().map(|v| models[v - 1].b()))
}

/// Series of the join with a link: `1` when the link is `{∅}` (joining with
/// the empty space changes nothing), otherwise `t · P̄(|L|)`.
pub fn join_factor(link: &SimplicialComplex, field: Field) -> Result<GradedSeries> {
    if link.is_void_realization() {
        field.validate()?;
        return Ok(GradedSeries::one());
    }
    let betti = link.reduced_betti(field)?;
    Ok(GradedSeries::from_betti(&betti)?.shift(1))
}

/// The `(I, σ)` term with its factors.
pub fn summand_contribution(
    k: &SimplicialComplex,
    subset: Face,
    sigma: Face,
    models: &[WedgeModel],
    opts: &EngineOptions,
) -> Result<WedgeSummand> {
    opts.check(k, models)?;
    let k_i = k.full_subcomplex(subset)?;
    if !k_i.contains(sigma) {
        return Err(Error::InvalidFace { face: sigma.to_set_string() });
    }
    summand_unchecked(&k_i, k.vertex_set(), sigma, models, opts.field)
}

fn summand_unchecked(
    k_i: &SimplicialComplex,
    vertex_set: Face,
    sigma: Face,
    models: &[WedgeModel],
    field: Field,
) -> Result<WedgeSummand> {
    let subset = k_i.vertex_set();
    let link = k_i.link_unchecked(sigma);
    let join = join_factor(&link, field)?;
    let d_hat = d_hat_unchecked(subset, sigma, models);
    let b_factor = b_product(vertex_set.minus(subset), models);
    let series = join.mul(&d_hat).mul(&b_factor);
    Ok(WedgeSummand { subset, sigma, link, join_factor: join, d_hat, b_factor, series })
}

/// Every summand of the decomposition, in canonical order.
pub fn wedge_summands(k: &SimplicialComplex, models: &[WedgeModel], opts: &EngineOptions) -> Result<Vec<WedgeSummand>> {
    opts.check(k, models)?;
    let vertex_set = k.vertex_set();
    let subsets: Vec<Face> = vertex_set.subsets().collect();
    let per_subset: Vec<Vec<WedgeSummand>> = subsets
        .par_iter()
        .map(|&subset| {
            let k_i = k.restrict_unchecked(subset);
            k_i.faces().map(|sigma| summand_unchecked(&k_i, vertex_set, sigma, models, opts.field)).collect()
        })
        .collect::<Result<_>>()?;
    Ok(per_subset.into_iter().flatten().collect())
}

/// Sum over `I` and `σ ∈ K_I` of `join · D̂ · weight(V − I)`, skipping terms
/// with a vanishing factor before touching the link.
fn wedge_sum<W>(k: &SimplicialComplex, models: &[WedgeModel], field: Field, weight: W) -> Result<GradedSeries>
where
    W: Fn(Face) -> GradedSeries + Sync,
{
    let vertex_set = k.vertex_set();
    let subsets: Vec<Face> = vertex_set.subsets().collect();
    let terms: Vec<GradedSeries> = subsets
        .par_iter()
        .map(|&subset| -> Result<GradedSeries> {
            let outer = weight(vertex_set.minus(subset));
            if outer.is_zero() {
                return Ok(GradedSeries::zero());
            }
            let k_i = k.restrict_unchecked(subset);
            let mut inner = GradedSeries::zero();
            for sigma in k_i.faces() {
                let d_hat = d_hat_unchecked(subset, sigma, models);
                if d_hat.is_zero() {
                    continue;
                }
                let join = join_factor(&k_i.link_unchecked(sigma), field)?;
                inner += &join.mul(&d_hat);
            }
            Ok(inner.mul(&outer))
        })
        .collect::<Result<_>>()?;
    Ok(terms.into_iter().sum())
}

/// Reduced Poincaré series of `Ẑ(K; (B ∨ C, B ∨ E))`, which is also that of
/// `Ẑ(K; (X, A))` for any pair with the same homology data.
///
/// The sum runs over subsets of the complex's vertex set, so applied to a
/// full subcomplex `K_J` it yields the series of `Ẑ(K_J; (X, A)_J)`; for
/// `J = ∅` this is the series `1` of `S⁰`.
pub fn smash_pp_series(k: &SimplicialComplex, models: &[WedgeModel], opts: &EngineOptions) -> Result<GradedSeries> {
    opts.check(k, models)?;
    wedge_sum(k, models, opts.field, |rest| b_product(rest, models))
}

/// The same series assembled from the Cartan formula alone: each
/// `Ẑ(K_I; (C, E)_I)` is evaluated on its own (as the smash product for the
/// model with `B = ∗`) and multiplied by `⋀_{j ∉ I} B_j`.
pub fn cartan_series(k: &SimplicialComplex, models: &[WedgeModel], opts: &EngineOptions) -> Result<GradedSeries> {
    opts.check(k, models)?;
    let c_e_models: Vec<WedgeModel> = models
        .iter()
        .map(|w| WedgeModel::from_series(GradedSeries::zero(), w.c().clone(), w.e().clone()))
        .collect::<Result<_>>()?;
    let vertex_set = k.vertex_set();
    let mut total = GradedSeries::zero();
    for subset in vertex_set.subsets() {
        let b = b_product(vertex_set.minus(subset), models);
        if b.is_zero() {
            continue;
        }
        let inner = smash_pp_series(&k.restrict_unchecked(subset), &c_e_models, opts)?;
        total += &inner.mul(&b);
    }
    Ok(total)
}

/// Closed form for models with every `E_i` acyclic: `Ẑ(K_I; (C, E)_I)` is
/// `Ĉ^I` when `I` is a face and contractible otherwise, so the series is
/// `Σ_{I ∈ K} ∏_{i∈I} P̄(C_i) · ∏_{j∉I} P̄(B_j)`.
pub fn e_trivial_series(k: &SimplicialComplex, models: &[WedgeModel], opts: &EngineOptions) -> Result<GradedSeries> {
    opts.check(k, models)?;
    if let Some(v) = k.vertex_set().vertices().find(|&v| !models[v - 1].e().is_zero()) {
        return Err(Error::NonTrivialE { vertex: v });
    }
    let vertex_set = k.vertex_set();
    Ok(k.faces()
        .map(|face| {
            let c = GradedSeries::product(face.vertices().map(|v| models[v - 1].c()));
            c.mul(&b_product(vertex_set.minus(face), models))
        })
        .sum())
}

/// Unreduced Poincaré series of the polyhedral product `Z(K; (X, A))`.
///
/// After one suspension `Z(K)` splits as the wedge of `Ẑ(K_J)` over all
/// `J ⊆ [m]`, so `P(Z(K)) = Σ_J P̄(Ẑ(K_J))` with the `J = ∅` term equal to
/// `1`. Summing the wedge decomposition of each `Ẑ(K_J)` over the `J ⊇ I`
/// replaces each `P̄(B_j)` weight by `1 + P̄(B_j) = P(B_j)`, which is what is
/// evaluated here; [`pp_series_by_splitting`] sums over `J` literally.
pub fn pp_series(k: &SimplicialComplex, models: &[WedgeModel], opts: &EngineOptions) -> Result<GradedSeries> {
    opts.check(k, models)?;
    let unreduced_b: Vec<GradedSeries> = models.iter().map(|w| w.b().add(&GradedSeries::one())).collect();
    wedge_sum(k, models, opts.field, |rest| GradedSeries::product(rest.vertices().map(|v| &unreduced_b[v - 1])))
}

/// `Σ_{J ⊆ V} P̄(Ẑ(K_J; (X, A)_J))`, one smash series per full subcomplex.
/// Costs `3^|V|` terms; see [`pp_series`] for the direct evaluation.
pub fn pp_series_by_splitting(
    k: &SimplicialComplex,
    models: &[WedgeModel],
    opts: &EngineOptions,
) -> Result<GradedSeries> {
    opts.check(k, models)?;
    let mut total = GradedSeries::zero();
    for j in k.vertex_set().subsets() {
        total += &smash_pp_series(&k.restrict_unchecked(j), models, opts)?;
    }
    Ok(total)
}
