use num_bigint::BigInt;
use polyprod::oracle::{catalog, homology_series, product_chain_complex, smash_chain_complex, CellPair};
use polyprod::simplicial::all_complexes;
use polyprod::{cartan, EngineOptions, Field, GradedSeries, SimplicialComplex, WedgeModel};

fn models(pairs: &[CellPair], field: Field) -> Vec<WedgeModel> {
    pairs.iter().map(|p| p.homology(field).unwrap().wedge_model()).collect()
}

fn assert_agree(k: &SimplicialComplex, pairs: &[CellPair], field: Field) {
    let opts = EngineOptions::with_field(field);
    let ms = models(pairs, field);

    let smash_c = smash_chain_complex(k, pairs, field).unwrap();
    let smash = cartan::smash_pp_series(k, &ms, &opts).unwrap();
    assert_eq!(smash, homology_series(&smash_c, false), "smash, K={:?}, field {field}", k.facets());

    let pp_c = product_chain_complex(k, pairs, field).unwrap();
    let pp = cartan::pp_series(k, &ms, &opts).unwrap();
    assert_eq!(pp, homology_series(&pp_c, false), "pp, K={:?}, field {field}", k.facets());

    assert_eq!(smash.euler_characteristic(), BigInt::from(smash_c.euler_characteristic()));
    assert_eq!(pp.euler_characteristic(), BigInt::from(pp_c.euler_characteristic()));
}

fn catalog_pairs() -> Vec<CellPair> {
    vec![
        catalog::wedge_of_spheres(&[1, 2], 1),
        catalog::disk_circle(),
        catalog::rp3_rp2(),
        catalog::mapping_cylinder_cp2(),
        catalog::sphere(2).with_point_subspace(),
    ]
}

#[test]
fn exhaustive_m_le_3_uniform_pairs() {
    let pairs = catalog_pairs();
    for field in [Field::Rational, Field::Prime(2), Field::Prime(3)] {
        for m in 1..=3 {
            for k in all_complexes(m).unwrap() {
                for p in &pairs {
                    assert_agree(&k, &vec![p.clone(); m], field);
                }
            }
        }
    }
}

#[test]
fn exhaustive_m_2_mixed_pairs() {
    let pairs = catalog_pairs();
    for field in [Field::Rational, Field::Prime(2)] {
        for k in all_complexes(2).unwrap() {
            for p in &pairs {
                for q in &pairs {
                    assert_agree(&k, &[p.clone(), q.clone()], field);
                }
            }
        }
    }
}

#[test]
fn point_subspaces_on_void_complex() {
    let k = SimplicialComplex::new(3, &[] as &[Vec<usize>]).unwrap();
    let pairs = vec![catalog::disk_circle().with_point_subspace(); 3];
    let c = product_chain_complex(&k, &pairs, Field::Rational).unwrap();
    assert_eq!(homology_series(&c, false), GradedSeries::one());
}

#[test]
fn wedge_decomposable_cells_realize_their_model() {
    let pair = catalog::wedge_decomposable(&[1, 3], &[2], &[2, 4]);
    let w = pair.homology(Field::Rational).unwrap().wedge_model();
    assert_eq!(w.b(), &"t+t^3".parse().unwrap());
    assert_eq!(w.c(), &"t^2".parse().unwrap());
    assert_eq!(w.e(), &"t^2+t^4".parse().unwrap());
}

#[test]
fn rp3_depends_on_the_field() {
    let f2 = catalog::rp3_rp2().homology(Field::Prime(2)).unwrap().wedge_model();
    assert_eq!(
        (f2.b().to_string(), f2.c().to_string(), f2.e().to_string()),
        ("t+t^2".into(), "t^3".into(), "0".into())
    );
    let q = catalog::rp3_rp2().homology(Field::Rational).unwrap().wedge_model();
    assert_eq!((q.b().to_string(), q.c().to_string(), q.e().to_string()), ("0".into(), "t^3".into(), "0".into()));
}
