//! Problem files: a complex, a coefficient field and one pair per vertex.
//!
//! ```json
//! {
//!   "complex": {"m": 3, "generators": [[1, 2], [1, 3]]},
//!   "field": "Q",
//!   "pairs": {
//!     "default": {"type": "model", "b": "t^4", "c": "t^6", "e": "t^2"},
//!     "2": {"type": "homology", "a_dims": {"2": 1}, "x_dims": {"2": 1}, "inc_rank": {"2": 1}}
//!   }
//! }
//! ```
//!
//! Pair descriptors are `model`, `homology` or `cells`. The `default` entry
//! applies to every vertex without its own entry. TOML files with the same
//! structure are accepted.

use std::collections::BTreeMap;
use std::path::Path;

use polyprod::{CellPair, CellPairSpec, Field, GradedSeries, PairHomology, SimplicialComplex, WedgeModel};
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    pub complex: ComplexSpec,
    #[serde(default)]
    pub field: Option<String>,
    #[serde(default)]
    pub pairs: BTreeMap<String, PairDescriptor>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexSpec {
    pub m: usize,
    #[serde(default)]
    pub generators: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum PairDescriptor {
    Model {
        #[serde(default)]
        b: GradedSeries,
        #[serde(default)]
        c: GradedSeries,
        #[serde(default)]
        e: GradedSeries,
    },
    Homology {
        #[serde(default)]
        a_dims: BTreeMap<String, usize>,
        #[serde(default)]
        x_dims: BTreeMap<String, usize>,
        inc_rank: BTreeMap<String, usize>,
        #[serde(default)]
        field: Option<String>,
    },
    Cells(CellPairSpec),
}

/// Input syntax of a problem file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Json,
    Toml,
}

impl InputFormat {
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some("toml") => InputFormat::Toml,
            _ => InputFormat::Json,
        }
    }
}

impl ProblemSpec {
    pub fn parse(source: &str, format: InputFormat, origin: &str) -> Result<Self, CliError> {
        let parse_err =
            |location: String, message: String| CliError::Parse { origin: origin.to_string(), location, message };
        match format {
            InputFormat::Json => {
                let mut de = serde_json::Deserializer::from_str(source);
                serde_path_to_error::deserialize(&mut de).map_err(|err| {
                    let field = err.path().to_string();
                    let inner = err.into_inner();
                    parse_err(
                        format!("field `{field}`, line {}, column {}", inner.line(), inner.column()),
                        inner.to_string(),
                    )
                })
            }
            InputFormat::Toml => {
                let de = toml::Deserializer::new(source);
                serde_path_to_error::deserialize(de).map_err(|err| {
                    let field = err.path().to_string();
                    let inner = err.into_inner();
                    let line = inner.span().map(|span| source[..span.start.min(source.len())].lines().count().max(1));
                    let location = match line {
                        Some(l) => format!("field `{field}`, line {l}"),
                        None => format!("field `{field}`"),
                    };
                    parse_err(location, inner.message().to_string())
                })
            }
        }
    }
}

/// A pair descriptor resolved against the problem's field.
#[derive(Debug, Clone)]
pub struct ResolvedPair {
    pub model: WedgeModel,
    pub cells: Option<CellPair>,
}

/// A validated problem.
#[derive(Debug, Clone)]
pub struct Problem {
    pub complex: SimplicialComplex,
    pub field: Field,
    /// One entry per vertex, in label order. Empty when the file lists no pairs.
    pub pairs: Vec<ResolvedPair>,
}

impl Problem {
    /// Resolves fields and pair descriptors. `field_flag` comes from the
    /// command line; it must agree with any field named in the file.
    pub fn resolve(spec: &ProblemSpec, field_flag: Option<Field>, max_m: usize) -> Result<Self, CliError> {
        let m = spec.complex.m;
        if m > max_m {
            return Err(polyprod::Error::GuardExceeded { m, max: max_m }.into());
        }
        let complex = SimplicialComplex::new(m, &spec.complex.generators)?;

        let mut declared: Vec<(String, Field)> = Vec::new();
        if let Some(f) = field_flag {
            declared.push(("--field".into(), f));
        }
        if let Some(f) = &spec.field {
            declared.push(("problem file".into(), f.parse()?));
        }
        for (key, d) in &spec.pairs {
            if let PairDescriptor::Homology { field: Some(f), .. } = d {
                declared.push((format!("pair {key}"), f.parse()?));
            }
        }
        if let Some((first, f0)) = declared.first() {
            if let Some((other, f1)) = declared.iter().find(|(_, f)| f != f0) {
                return Err(CliError::MixedField {
                    first: format!("{first} ({f0})"),
                    second: format!("{other} ({f1})"),
                });
            }
        }
        let field = declared.first().map_or(Field::Rational, |(_, f)| *f);

        for key in spec.pairs.keys() {
            if key != "default" && !matches!(key.parse::<usize>(), Ok(v) if (1..=m).contains(&v)) {
                return Err(CliError::UnknownPairKey(key.clone()));
            }
        }
        let mut pairs = Vec::new();
        if !spec.pairs.is_empty() {
            for v in 1..=m {
                let descriptor = spec
                    .pairs
                    .get(&v.to_string())
                    .or_else(|| spec.pairs.get("default"))
                    .ok_or(CliError::MissingPair(v))?;
                pairs.push(resolve_pair(descriptor, field).map_err(|e| CliError::Pair { vertex: v, source: e })?);
            }
        }
        Ok(Problem { complex, field, pairs })
    }

    pub fn models(&self) -> Result<Vec<WedgeModel>, CliError> {
        if self.pairs.is_empty() {
            return Err(CliError::MissingPair(1));
        }
        Ok(self.pairs.iter().map(|p| p.model.clone()).collect())
    }

    pub fn cell_pairs(&self) -> Result<Vec<CellPair>, CliError> {
        if self.pairs.is_empty() {
            return Err(CliError::MissingPair(1));
        }
        self.pairs
            .iter()
            .enumerate()
            .map(|(i, p)| p.cells.clone().ok_or(CliError::NeedsCells { vertex: i + 1 }))
            .collect()
    }
}

fn degree_map(raw: &BTreeMap<String, usize>) -> Result<BTreeMap<u32, usize>, polyprod::Error> {
    raw.iter()
        .map(|(k, v)| {
            k.parse::<u32>().map(|d| (d, *v)).map_err(|_| polyprod::Error::SeriesParse {
                text: k.clone(),
                reason: "degree is not a nonnegative integer".into(),
            })
        })
        .collect()
}

fn resolve_pair(d: &PairDescriptor, field: Field) -> Result<ResolvedPair, polyprod::Error> {
    match d {
        PairDescriptor::Model { b, c, e } => {
            Ok(ResolvedPair { model: WedgeModel::from_series(b.clone(), c.clone(), e.clone())?, cells: None })
        }
        PairDescriptor::Homology { a_dims, x_dims, inc_rank, .. } => {
            let h = PairHomology::new(degree_map(a_dims)?, degree_map(x_dims)?, degree_map(inc_rank)?)?;
            Ok(ResolvedPair { model: h.wedge_model(), cells: None })
        }
        PairDescriptor::Cells(spec) => {
            let cells = CellPair::from_spec(spec)?;
            let model = cells.homology(field)?.wedge_model();
            Ok(ResolvedPair { model, cells: Some(cells) })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(json: &str) -> Result<Problem, CliError> {
        let spec = ProblemSpec::parse(json, InputFormat::Json, "test")?;
        Problem::resolve(&spec, None, 20)
    }

    #[test]
    fn default_and_specific_pairs() {
        let p = parse(
            r#"{"complex":{"m":2,"generators":[[1,2]]},
                "pairs":{"default":{"type":"model","e":"t"},
                         "2":{"type":"homology","a_dims":{"2":1,"4":1},"x_dims":{"4":1,"6":1},"inc_rank":{"4":1}}}}"#,
        )
        .unwrap();
        assert_eq!(p.pairs[0].model.e().to_string(), "t");
        assert_eq!(p.pairs[1].model.b().to_string(), "t^4");
        assert_eq!(p.field, Field::Rational);
    }

    #[test]
    fn missing_and_unknown_pairs() {
        let e = parse(r#"{"complex":{"m":2},"pairs":{"1":{"type":"model"}}}"#).unwrap_err();
        assert!(matches!(e, CliError::MissingPair(2)));
        let e = parse(r#"{"complex":{"m":2},"pairs":{"default":{"type":"model"},"3":{"type":"model"}}}"#).unwrap_err();
        assert!(matches!(e, CliError::UnknownPairKey(k) if k == "3"));
    }

    #[test]
    fn rank_is_mandatory() {
        let e =
            parse(r#"{"complex":{"m":1},"pairs":{"default":{"type":"homology","a_dims":{"2":1},"x_dims":{"2":1}}}}"#)
                .unwrap_err();
        match e {
            CliError::Parse { location, message, .. } => {
                assert!(location.contains("pairs.default"), "{location}");
                assert!(message.contains("inc_rank"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parse_errors_carry_position() {
        let e = parse("{\"complex\": {\"m\": 3,\n \"generators\": [[1, \"x\"]]}}").unwrap_err();
        match e {
            CliError::Parse { location, .. } => {
                assert!(location.contains("complex.generators"), "{location}");
                assert!(location.contains("line 2"), "{location}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn fields_must_agree() {
        let src = r#"{"complex":{"m":1},"field":"Fp:2",
                      "pairs":{"default":{"type":"homology","a_dims":{},"x_dims":{"1":1},"inc_rank":{},"field":"Q"}}}"#;
        assert!(matches!(parse(src), Err(CliError::MixedField { .. })));
        let spec = ProblemSpec::parse(r#"{"complex":{"m":1},"field":"Fp:2"}"#, InputFormat::Json, "t").unwrap();
        assert!(matches!(Problem::resolve(&spec, Some(Field::Rational), 20), Err(CliError::MixedField { .. })));
        assert_eq!(Problem::resolve(&spec, Some(Field::Prime(2)), 20).unwrap().field, Field::Prime(2));
        let spec = ProblemSpec::parse(r#"{"complex":{"m":1}}"#, InputFormat::Json, "t").unwrap();
        assert_eq!(Problem::resolve(&spec, Some(Field::Prime(3)), 20).unwrap().field, Field::Prime(3));
    }

    #[test]
    fn guard_on_vertex_count() {
        let spec = ProblemSpec::parse(r#"{"complex":{"m":21}}"#, InputFormat::Json, "t").unwrap();
        assert!(matches!(
            Problem::resolve(&spec, None, 20),
            Err(CliError::Core(polyprod::Error::GuardExceeded { m: 21, max: 20 }))
        ));
        assert!(Problem::resolve(&spec, None, 21).is_ok());
    }

    #[test]
    fn toml_sugar() {
        let src = r#"
field = "Q"

[complex]
m = 3
generators = [[1, 2], [1, 3]]

[pairs.default]
type = "model"
b = "t^4"
c = "t^6"
e = "t^2"
"#;
        let spec = ProblemSpec::parse(src, InputFormat::Toml, "t").unwrap();
        let p = Problem::resolve(&spec, None, 20).unwrap();
        assert_eq!(p.pairs.len(), 3);
        let bad = ProblemSpec::parse("[complex]\nm = \"x\"\n", InputFormat::Toml, "t").unwrap_err();
        assert!(
            matches!(bad, CliError::Parse { location, .. } if location.contains("complex.m") && location.contains("line 2"))
        );
    }
}
