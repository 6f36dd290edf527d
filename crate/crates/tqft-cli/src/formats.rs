//! JSON codecs for complexes, gluings, surfaces and groups.
//!
//! Serialization is canonical: object keys sorted, simplices sorted by
//! dimension then lexicographically, vertices ascending, rationals as
//! `"p/q"` strings. Canonical output makes golden files stable across
//! platforms and lets round-trip tests assert byte equality. Floating point
//! never appears.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use tqft_core::complex::{
    BoundaryComponent, Label, MarkedComplex, Simplex, SimplicialComplex, VertexId,
};
use tqft_core::gluing::GluingSpec;
use tqft_core::statesum::{FiniteGroup, Surface2D};

/// A CLI-level error: either bad input (exit 2) or a violated property
/// (exit 1).
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Violation(String),
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    pub fn violation(msg: impl Into<String>) -> Self {
        CliError::Violation(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Violation(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Violation(m) => write!(f, "violation: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

// ---------------------------------------------------------------------------
// Complex files

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundaryDto {
    pub name: String,
    pub label: String,
    pub simplices: Vec<Vec<VertexId>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexDto {
    #[serde(default)]
    pub vertices: Vec<VertexId>,
    pub simplices: Vec<Vec<VertexId>>,
    /// When true, the listed simplices are maximal and faces are generated.
    #[serde(default)]
    pub closure: bool,
    #[serde(default)]
    pub boundary: Vec<BoundaryDto>,
}

fn parse_label(s: &str) -> Result<Label, CliError> {
    match s {
        "in" => Ok(Label::In),
        "out" => Ok(Label::Out),
        other => Err(CliError::input(format!("label must be \"in\" or \"out\", got `{other}`"))),
    }
}

fn simplices_from_dto(
    tuples: &[Vec<VertexId>],
    closure: bool,
) -> Result<Vec<Simplex>, CliError> {
    let parsed: Result<Vec<Simplex>, _> = tuples
        .iter()
        .map(|t| Simplex::try_new(t.clone()).map_err(CliError::input))
        .collect();
    let parsed = parsed?;
    if closure {
        Ok(SimplicialComplex::from_simplices(parsed).simplices().iter().cloned().collect())
    } else {
        Ok(parsed)
    }
}

impl ComplexDto {
    pub fn into_marked(self) -> Result<MarkedComplex, CliError> {
        let simplices = simplices_from_dto(&self.simplices, self.closure)?;
        let complex = if self.closure || self.vertices.is_empty() {
            // Vertices are derivable when faces are generated.
            SimplicialComplex::from_simplices(simplices)
        } else {
            SimplicialComplex::from_raw(self.vertices.iter().copied(), simplices)
        };
        let mut boundary = Vec::new();
        for dto in self.boundary {
            let label = parse_label(&dto.label)?;
            let simplices = simplices_from_dto(&dto.simplices, self.closure)?;
            boundary.push(BoundaryComponent {
                name: dto.name,
                label,
                complex: SimplicialComplex::from_simplices(simplices),
            });
        }
        let marked = MarkedComplex::new(complex, boundary);
        marked
            .validate()
            .map_err(|v| CliError::input(format!("invalid complex: {v}")))?;
        Ok(marked)
    }
}

fn simplex_value(s: &Simplex) -> Value {
    Value::Array(s.vertices().iter().map(|&v| json!(v)).collect())
}

fn sorted_simplices(c: &SimplicialComplex) -> Vec<&Simplex> {
    let mut all: Vec<&Simplex> = c.simplices().iter().collect();
    all.sort_by_key(|s| (s.dim(), s.vertices().to_vec()));
    all
}

/// Canonical JSON value of a marked complex: full face closure listed,
/// sorted keys and simplices.
pub fn marked_to_value(m: &MarkedComplex) -> Value {
    let mut obj = serde_json::Map::new();
    if !m.boundary.is_empty() {
        obj.insert(
            "boundary".into(),
            Value::Array(
                m.boundary
                    .iter()
                    .map(|c| {
                        json!({
                            "label": c.label.to_string(),
                            "name": c.name,
                            "simplices": sorted_simplices(&c.complex)
                                .into_iter()
                                .map(simplex_value)
                                .collect::<Vec<_>>(),
                        })
                    })
                    .collect(),
            ),
        );
    }
    obj.insert(
        "simplices".into(),
        Value::Array(sorted_simplices(&m.complex).into_iter().map(simplex_value).collect()),
    );
    obj.insert(
        "vertices".into(),
        Value::Array(m.complex.vertices().iter().map(|&v| json!(v)).collect()),
    );
    Value::Object(obj)
}

// ---------------------------------------------------------------------------
// Gluing files: a complex plus sigma1/sigma2/phi.

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GluingDto {
    #[serde(flatten)]
    pub complex: ComplexDto,
    pub sigma1: Vec<String>,
    pub sigma2: Vec<String>,
    /// Vertex map as strings, `{"0": "7"}`.
    pub phi: BTreeMap<String, String>,
}

impl GluingDto {
    pub fn into_spec(self) -> Result<GluingSpec, CliError> {
        let source = self.complex.into_marked()?;
        let mut phi = BTreeMap::new();
        for (k, v) in &self.phi {
            let from: VertexId = k
                .parse()
                .map_err(|_| CliError::input(format!("phi key `{k}` is not a vertex id")))?;
            let to: VertexId = v
                .parse()
                .map_err(|_| CliError::input(format!("phi value `{v}` is not a vertex id")))?;
            phi.insert(from, to);
        }
        Ok(GluingSpec { source, sigma1: self.sigma1, sigma2: self.sigma2, phi })
    }
}

pub fn gluing_to_value(spec: &GluingSpec) -> Value {
    let mut obj = match marked_to_value(&spec.source) {
        Value::Object(o) => o,
        _ => unreachable!(),
    };
    obj.insert(
        "phi".into(),
        Value::Object(
            spec.phi
                .iter()
                .map(|(k, v)| (k.to_string(), Value::String(v.to_string())))
                .collect(),
        ),
    );
    obj.insert("sigma1".into(), json!(spec.sigma1));
    obj.insert("sigma2".into(), json!(spec.sigma2));
    Value::Object(obj)
}

// ---------------------------------------------------------------------------
// Surface and group files

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SurfaceDto {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
    pub triangles: Vec<[(usize, bool); 3]>,
}

impl SurfaceDto {
    pub fn into_surface(self) -> Result<Surface2D, CliError> {
        let s = Surface2D {
            vertex_count: self.vertex_count,
            edges: self.edges,
            triangles: self.triangles,
        };
        s.validate()
            .map_err(|v| CliError::input(format!("invalid surface: {v}")))?;
        Ok(s)
    }
}

pub fn surface_to_value(s: &Surface2D) -> Value {
    json!({
        "edges": s.edges,
        "triangles": s.triangles,
        "vertex_count": s.vertex_count,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupDto {
    Cyclic { n: usize },
    Symmetric { n: usize },
    Table { mul: Vec<Vec<usize>> },
}

impl GroupDto {
    pub fn into_group(self) -> Result<FiniteGroup, CliError> {
        match self {
            GroupDto::Cyclic { n } => {
                if n == 0 {
                    return Err(CliError::input("cyclic group order must be positive"));
                }
                Ok(FiniteGroup::cyclic(n))
            }
            GroupDto::Symmetric { n } => {
                if n != 3 {
                    return Err(CliError::input("only the symmetric group S3 is built in"));
                }
                Ok(FiniteGroup::symmetric_3())
            }
            GroupDto::Table { mul } => {
                FiniteGroup::from_table(&mul).map_err(|e| CliError::input(e.to_string()))
            }
        }
    }
}

/// Parses a `--group` argument: `cyclic:N`, `s3`, or a path to a group JSON
/// file.
pub fn parse_group_arg(arg: &str) -> Result<FiniteGroup, CliError> {
    if let Some(n) = arg.strip_prefix("cyclic:") {
        let n: usize = n
            .parse()
            .map_err(|_| CliError::input(format!("bad cyclic order `{n}`")))?;
        if n == 0 {
            return Err(CliError::input("cyclic group order must be positive"));
        }
        return Ok(FiniteGroup::cyclic(n));
    }
    if arg == "s3" || arg == "S3" {
        return Ok(FiniteGroup::symmetric_3());
    }
    let dto: GroupDto = read_json(std::path::Path::new(arg))?;
    dto.into_group()
}

// ---------------------------------------------------------------------------
// IO helpers

/// Canonical rendering: two-space indentation, sorted keys (serde_json maps
/// are BTree-backed), object-free arrays inlined when short, and a trailing
/// newline. Purely structural, so output is bit-stable across platforms.
pub fn canonical_string(v: &Value) -> String {
    let mut out = String::new();
    write_value(v, 0, &mut out);
    out.push('\n');
    out
}

fn inline_candidate(v: &Value) -> Option<String> {
    match v {
        Value::Object(_) => None,
        Value::Array(items) => {
            let mut parts = Vec::with_capacity(items.len());
            for item in items {
                parts.push(inline_candidate(item)?);
            }
            let s = format!("[{}]", parts.join(", "));
            (s.len() <= 60).then_some(s)
        }
        other => Some(other.to_string()),
    }
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    let inner = "  ".repeat(indent + 1);
    match v {
        Value::Object(map) => {
            if map.is_empty() {
                out.push_str("{}");
                return;
            }
            out.push_str("{\n");
            for (i, (k, val)) in map.iter().enumerate() {
                out.push_str(&inner);
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(val, indent + 1, out);
                if i + 1 < map.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad);
            out.push('}');
        }
        Value::Array(items) => {
            if items.is_empty() {
                out.push_str("[]");
                return;
            }
            if let Some(inline) = inline_candidate(v) {
                out.push_str(&inline);
                return;
            }
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&inner);
                write_value(item, indent + 1, out);
                if i + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad);
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &std::path::Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| {
        CliError::input(format!(
            "{}: malformed JSON at line {}, column {}: {e}",
            path.display(),
            e.line(),
            e.column()
        ))
    })
}

pub fn load_marked(path: &std::path::Path) -> Result<MarkedComplex, CliError> {
    read_json::<ComplexDto>(path)?.into_marked()
}

pub fn load_gluing(path: &std::path::Path) -> Result<GluingSpec, CliError> {
    read_json::<GluingDto>(path)?.into_spec()
}

pub fn load_surface(path: &std::path::Path) -> Result<Surface2D, CliError> {
    read_json::<SurfaceDto>(path)?.into_surface()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_roundtrip_through_canonical_value() {
        let dto: ComplexDto = serde_json::from_value(json!({
            "vertices": [0, 1, 2],
            "simplices": [[0], [1], [2], [0, 1], [1, 2], [0, 2]],
            "boundary": [{"label": "in", "name": "A", "simplices": [[0]]}],
        }))
        .unwrap();
        let marked = dto.into_marked().unwrap();
        let value = marked_to_value(&marked);
        let reparsed: ComplexDto = serde_json::from_value(value.clone()).unwrap();
        assert_eq!(reparsed.into_marked().unwrap(), marked);
        // Canonical string is stable.
        assert_eq!(canonical_string(&value), canonical_string(&value));
    }

    #[test]
    fn closure_flag_generates_faces() {
        let dto: ComplexDto = serde_json::from_value(json!({
            "simplices": [[0, 1, 2]],
            "closure": true,
        }))
        .unwrap();
        let marked = dto.into_marked().unwrap();
        assert_eq!(marked.complex.simplices().len(), 7);
    }

    #[test]
    fn missing_faces_are_an_input_error() {
        let dto: ComplexDto = serde_json::from_value(json!({
            "vertices": [0, 1],
            "simplices": [[0, 1]],
        }))
        .unwrap();
        assert!(matches!(dto.into_marked(), Err(CliError::Input(_))));
    }

    #[test]
    fn group_arguments_parse() {
        assert_eq!(parse_group_arg("cyclic:4").unwrap().order(), 4);
        assert_eq!(parse_group_arg("s3").unwrap().order(), 6);
        assert!(parse_group_arg("cyclic:x").is_err());
    }
}
