//! Finite abstract simplicial complexes and marked complexes.
//!
//! A [`SimplicialComplex`] is a finite set of integer vertex ids together
//! with a face-closed set of simplices (non-empty sorted vertex tuples). A
//! [`MarkedComplex`] pairs a complex `M` with an ordered list of named,
//! labelled (in/out), pairwise vertex-disjoint boundary subcomplexes — the
//! pairs `(M, Σ)` on which the gluing calculus and the Euler-characteristic
//! theories operate.
//!
//! All values are immutable after construction.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// Vertex identifier. Ids are arbitrary non-negative integers; they carry no
/// geometric meaning beyond identity.
pub type VertexId = u32;

/// A simplex: a non-empty, strictly increasing tuple of vertex ids.
///
/// A simplex on `n + 1` vertices has dimension `n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex(Vec<VertexId>);

impl Simplex {
    /// Builds a simplex from vertices in any order. Panics when empty or
    /// when a vertex repeats; use [`Simplex::try_new`] for fallible input.
    pub fn new(vertices: impl Into<Vec<VertexId>>) -> Self {
        Self::try_new(vertices).expect("simplex vertices must be non-empty and distinct")
    }

    pub fn try_new(vertices: impl Into<Vec<VertexId>>) -> Result<Self, String> {
        let mut v: Vec<VertexId> = vertices.into();
        v.sort_unstable();
        if v.is_empty() {
            return Err("empty simplex".to_string());
        }
        if v.windows(2).any(|w| w[0] == w[1]) {
            return Err(alloc::format!("repeated vertex in simplex {v:?}"));
        }
        Ok(Simplex(v))
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    /// Dimension = number of vertices − 1.
    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// The codimension-one faces, in order of the deleted vertex index.
    pub fn facets(&self) -> Vec<Simplex> {
        if self.dim() == 0 {
            return Vec::new();
        }
        (0..self.0.len())
            .map(|i| {
                let mut v = self.0.clone();
                v.remove(i);
                Simplex(v)
            })
            .collect()
    }

    /// All proper non-empty faces (every dimension below `self.dim()`).
    pub fn proper_faces(&self) -> Vec<Simplex> {
        let mut out = Vec::new();
        // Enumerate non-empty proper subsets by bitmask; simplices are tiny.
        let n = self.0.len();
        for mask in 1..((1u32 << n) - 1) {
            let v: Vec<VertexId> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| self.0[i]).collect();
            out.push(Simplex(v));
        }
        out
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Why a [`SimplicialComplex`] fails validation. Reports the first offender
/// in deterministic (sorted) order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexViolation {
    /// A face of `simplex` is not itself a simplex of the complex.
    MissingFace { simplex: Simplex, face: Simplex },
    /// A simplex uses a vertex id absent from the vertex set.
    UnregisteredVertex { simplex: Simplex, vertex: VertexId },
    /// A registered vertex does not appear as a 0-simplex.
    VertexNotASimplex { vertex: VertexId },
}

impl fmt::Display for ComplexViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexViolation::MissingFace { simplex, face } => {
                write!(f, "simplex {simplex:?} is present but its face {face:?} is missing")
            }
            ComplexViolation::UnregisteredVertex { simplex, vertex } => {
                write!(f, "simplex {simplex:?} uses vertex {vertex} which is not registered")
            }
            ComplexViolation::VertexNotASimplex { vertex } => {
                write!(f, "vertex {vertex} is not itself a 0-simplex")
            }
        }
    }
}

/// A finite abstract simplicial complex.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SimplicialComplex {
    vertices: BTreeSet<VertexId>,
    simplices: BTreeSet<Simplex>,
}

impl SimplicialComplex {
    /// The empty complex: the unit of disjoint union.
    pub fn empty() -> Self {
        SimplicialComplex::default()
    }

    /// Builds a complex from raw data without repairing anything. Call
    /// [`SimplicialComplex::validate`] to check the invariants.
    pub fn from_raw(
        vertices: impl IntoIterator<Item = VertexId>,
        simplices: impl IntoIterator<Item = Simplex>,
    ) -> Self {
        SimplicialComplex {
            vertices: vertices.into_iter().collect(),
            simplices: simplices.into_iter().collect(),
        }
    }

    /// Builds the face closure of the given simplices. The result is always
    /// valid.
    pub fn from_simplices(simplices: impl IntoIterator<Item = Simplex>) -> Self {
        let mut all: BTreeSet<Simplex> = BTreeSet::new();
        for s in simplices {
            for face in s.proper_faces() {
                all.insert(face);
            }
            all.insert(s);
        }
        let vertices = all
            .iter()
            .filter(|s| s.dim() == 0)
            .map(|s| s.vertices()[0])
            .collect();
        SimplicialComplex { vertices, simplices: all }
    }

    /// Convenience: face closure of vertex tuples.
    pub fn from_vertex_tuples<I, T>(tuples: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<Vec<VertexId>>,
    {
        Self::from_simplices(tuples.into_iter().map(Simplex::new))
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn simplices(&self) -> &BTreeSet<Simplex> {
        &self.simplices
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty() && self.simplices.is_empty()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.simplices.contains(s)
    }

    /// Top dimension, or `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.iter().map(|s| s.dim()).max()
    }

    /// Simplices of one dimension, in sorted order.
    pub fn simplices_of_dim(&self, d: usize) -> Vec<&Simplex> {
        self.simplices.iter().filter(|s| s.dim() == d).collect()
    }

    /// Checks all structural invariants, reporting the first violation:
    /// face closure, vertex registration, and vertices-as-0-simplices.
    pub fn validate(&self) -> Result<(), ComplexViolation> {
        for s in &self.simplices {
            for &v in s.vertices() {
                if !self.vertices.contains(&v) {
                    return Err(ComplexViolation::UnregisteredVertex { simplex: s.clone(), vertex: v });
                }
            }
            for face in s.facets() {
                if !self.simplices.contains(&face) {
                    return Err(ComplexViolation::MissingFace { simplex: s.clone(), face });
                }
            }
        }
        for &v in &self.vertices {
            if !self.simplices.contains(&Simplex(alloc::vec![v])) {
                return Err(ComplexViolation::VertexNotASimplex { vertex: v });
            }
        }
        Ok(())
    }

    /// Euler characteristic as the alternating simplex count
    /// `Σ_n (−1)^n · #(n-simplices)`.
    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .map(|s| if s.dim() % 2 == 0 { 1 } else { -1 })
            .sum()
    }

    /// Is every simplex of `self` a simplex of `other`?
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.vertices.is_subset(&other.vertices)
            && self.simplices.iter().all(|s| other.simplices.contains(s))
    }

    /// Partition into connected components (vertices related by sharing a
    /// simplex), ordered by smallest vertex id. Isolated vertices form their
    /// own components; the empty complex has none.
    pub fn connected_components(&self) -> Vec<SimplicialComplex> {
        let ids: Vec<VertexId> = self.vertices.iter().copied().collect();
        let index: BTreeMap<VertexId, usize> =
            ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut parent: Vec<usize> = (0..ids.len()).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut root = x;
            while parent[root] != root {
                root = parent[root];
            }
            let mut cur = x;
            while parent[cur] != root {
                let next = parent[cur];
                parent[cur] = root;
                cur = next;
            }
            root
        }
        for s in &self.simplices {
            let first = index[&s.vertices()[0]];
            for &v in &s.vertices()[1..] {
                let (a, b) = (find(&mut parent, first), find(&mut parent, index[&v]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut groups: BTreeMap<usize, SimplicialComplex> = BTreeMap::new();
        for (i, &v) in ids.iter().enumerate() {
            let root = find(&mut parent, i);
            groups.entry(root).or_default().vertices.insert(v);
        }
        for s in &self.simplices {
            let root = find(&mut parent, index[&s.vertices()[0]]);
            groups.get_mut(&root).unwrap().simplices.insert(s.clone());
        }
        groups.into_values().collect()
    }

    /// Largest vertex id, or `None` when empty.
    pub fn max_vertex_id(&self) -> Option<VertexId> {
        self.vertices.iter().next_back().copied()
    }

    /// The same complex with every vertex id pushed through `f`. The caller
    /// must supply an injective map; the result keeps simplex structure.
    pub fn relabel(&self, f: impl Fn(VertexId) -> VertexId) -> SimplicialComplex {
        SimplicialComplex {
            vertices: self.vertices.iter().map(|&v| f(v)).collect(),
            simplices: self
                .simplices
                .iter()
                .map(|s| Simplex::new(s.vertices().iter().map(|&v| f(v)).collect::<Vec<_>>()))
                .collect(),
        }
    }

    /// Union of two complexes (no relabelling; overlapping ids merge).
    pub fn union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        SimplicialComplex {
            vertices: self.vertices.union(&other.vertices).copied().collect(),
            simplices: self.simplices.union(&other.simplices).cloned().collect(),
        }
    }
}

/// Boundary-piece label: `In` or `Out`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub enum Label {
    In,
    Out,
}

impl Label {
    pub fn flipped(self) -> Label {
        match self {
            Label::In => Label::Out,
            Label::Out => Label::In,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::In => write!(f, "in"),
            Label::Out => write!(f, "out"),
        }
    }
}

/// A named, labelled boundary piece of a marked complex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundaryComponent {
    pub name: String,
    pub label: Label,
    pub complex: SimplicialComplex,
}

/// Why a [`MarkedComplex`] fails validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MarkedViolation {
    Complex(ComplexViolation),
    /// A boundary piece is invalid as a complex.
    BoundaryComplex { name: String, violation: ComplexViolation },
    /// A boundary piece is not a subcomplex of the underlying complex.
    NotASubcomplex { name: String, simplex: Simplex },
    /// Two boundary pieces share a vertex.
    NotSeparated { first: String, second: String, vertex: VertexId },
    /// Two boundary pieces share a name.
    DuplicateName { name: String },
}

impl fmt::Display for MarkedViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MarkedViolation::Complex(v) => write!(f, "underlying complex: {v}"),
            MarkedViolation::BoundaryComplex { name, violation } => {
                write!(f, "boundary component `{name}`: {violation}")
            }
            MarkedViolation::NotASubcomplex { name, simplex } => {
                write!(f, "boundary component `{name}`: {simplex:?} is not a simplex of the complex")
            }
            MarkedViolation::NotSeparated { first, second, vertex } => {
                write!(f, "boundary components `{first}` and `{second}` share vertex {vertex}")
            }
            MarkedViolation::DuplicateName { name } => write!(f, "duplicate component name `{name}`"),
        }
    }
}

/// A pair `(M, Σ)`: a complex with an ordered list of named in/out boundary
/// pieces, pairwise vertex-disjoint.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MarkedComplex {
    pub complex: SimplicialComplex,
    pub boundary: Vec<BoundaryComponent>,
}

impl MarkedComplex {
    pub fn new(complex: SimplicialComplex, boundary: Vec<BoundaryComponent>) -> Self {
        MarkedComplex { complex, boundary }
    }

    /// A complex with no marked boundary.
    pub fn unmarked(complex: SimplicialComplex) -> Self {
        MarkedComplex { complex, boundary: Vec::new() }
    }

    pub fn validate(&self) -> Result<(), MarkedViolation> {
        self.complex.validate().map_err(MarkedViolation::Complex)?;
        let mut names: BTreeSet<&str> = BTreeSet::new();
        for comp in &self.boundary {
            if !names.insert(&comp.name) {
                return Err(MarkedViolation::DuplicateName { name: comp.name.clone() });
            }
            comp.complex
                .validate()
                .map_err(|violation| MarkedViolation::BoundaryComplex {
                    name: comp.name.clone(),
                    violation,
                })?;
            for s in comp.complex.simplices() {
                if !self.complex.contains(s) {
                    return Err(MarkedViolation::NotASubcomplex {
                        name: comp.name.clone(),
                        simplex: s.clone(),
                    });
                }
            }
        }
        for (i, a) in self.boundary.iter().enumerate() {
            for b in &self.boundary[i + 1..] {
                if let Some(&v) = a.complex.vertices().intersection(b.complex.vertices()).next() {
                    return Err(MarkedViolation::NotSeparated {
                        first: a.name.clone(),
                        second: b.name.clone(),
                        vertex: v,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn component(&self, name: &str) -> Option<&BoundaryComponent> {
        self.boundary.iter().find(|c| c.name == name)
    }

    /// Union of the boundary pieces with the given label.
    pub fn boundary_union(&self, label: Label) -> SimplicialComplex {
        self.boundary
            .iter()
            .filter(|c| c.label == label)
            .fold(SimplicialComplex::empty(), |acc, c| acc.union(&c.complex))
    }

    /// Union of the named boundary pieces. Unknown names are reported back.
    pub fn named_union(&self, names: &[String]) -> Result<SimplicialComplex, String> {
        let mut acc = SimplicialComplex::empty();
        for n in names {
            let comp = self.component(n).ok_or_else(|| n.clone())?;
            acc = acc.union(&comp.complex);
        }
        Ok(acc)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.complex.euler_characteristic()
    }

    /// Swaps every `In` label with `Out` and vice versa. An involution; the
    /// underlying complex is untouched.
    pub fn flip_labels(&self) -> MarkedComplex {
        MarkedComplex {
            complex: self.complex.clone(),
            boundary: self
                .boundary
                .iter()
                .map(|c| BoundaryComponent {
                    name: c.name.clone(),
                    label: c.label.flipped(),
                    complex: c.complex.clone(),
                })
                .collect(),
        }
    }

    /// Disjoint union. Vertex ids of `other` are shifted by
    /// `max id of self + 1`; boundary lists concatenate, with `other`'s
    /// names suffixed by `'` until unique.
    pub fn disjoint_union(&self, other: &MarkedComplex) -> MarkedComplex {
        let offset = match self.complex.max_vertex_id() {
            Some(m) => m + 1,
            None => 0,
        };
        let shifted = other.complex.relabel(|v| v + offset);
        let mut boundary = self.boundary.clone();
        let taken: BTreeSet<String> = boundary.iter().map(|c| c.name.clone()).collect();
        for comp in &other.boundary {
            let mut name = comp.name.clone();
            while taken.contains(&name) || boundary.iter().any(|c| c.name == name) {
                name.push('\'');
            }
            boundary.push(BoundaryComponent {
                name,
                label: comp.label,
                complex: comp.complex.relabel(|v| v + offset),
            });
        }
        MarkedComplex { complex: self.complex.union(&shifted), boundary }
    }

    /// Pushes the whole marked complex through an isomorphism of the
    /// underlying complex (names and labels are kept).
    pub fn relabel(&self, f: impl Fn(VertexId) -> VertexId + Copy) -> MarkedComplex {
        MarkedComplex {
            complex: self.complex.relabel(f),
            boundary: self
                .boundary
                .iter()
                .map(|c| BoundaryComponent {
                    name: c.name.clone(),
                    label: c.label,
                    complex: c.complex.relabel(f),
                })
                .collect(),
        }
    }
}

/// A simplicial map: a vertex map under which the image of every simplex of
/// the source is a simplex of the target.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimplicialMap {
    pub source: SimplicialComplex,
    pub target: SimplicialComplex,
    pub vertex_map: BTreeMap<VertexId, VertexId>,
}

impl SimplicialMap {
    pub fn new(
        source: SimplicialComplex,
        target: SimplicialComplex,
        vertex_map: BTreeMap<VertexId, VertexId>,
    ) -> Self {
        SimplicialMap { source, target, vertex_map }
    }

    pub fn identity(c: &SimplicialComplex) -> Self {
        SimplicialMap {
            source: c.clone(),
            target: c.clone(),
            vertex_map: c.vertices().iter().map(|&v| (v, v)).collect(),
        }
    }

    pub fn apply_vertex(&self, v: VertexId) -> Option<VertexId> {
        self.vertex_map.get(&v).copied()
    }

    /// Image of a simplex as a (deduplicated) vertex set. `None` when some
    /// vertex is outside the map's domain.
    pub fn apply(&self, s: &Simplex) -> Option<Simplex> {
        let mut image: Vec<VertexId> = Vec::with_capacity(s.vertices().len());
        for &v in s.vertices() {
            image.push(self.apply_vertex(v)?);
        }
        image.sort_unstable();
        image.dedup();
        Some(Simplex(image))
    }

    /// Total on the source's vertices, and every simplex image is a simplex
    /// of the target. Collapses are allowed.
    pub fn is_simplicial(&self) -> bool {
        self.source.vertices().iter().all(|v| self.vertex_map.contains_key(v))
            && self
                .source
                .simplices()
                .iter()
                .all(|s| self.apply(s).is_some_and(|img| self.target.contains(&img)))
    }

    /// Simplicial, vertex-bijective, and the inverse vertex map is simplicial
    /// too.
    pub fn is_isomorphism(&self) -> bool {
        if !self.is_simplicial() {
            return false;
        }
        if self.vertex_map.len() != self.source.vertices().len() {
            return false;
        }
        let mut inverse: BTreeMap<VertexId, VertexId> = BTreeMap::new();
        for (&v, &w) in &self.vertex_map {
            if !self.target.vertices().contains(&w) || inverse.insert(w, v).is_some() {
                return false;
            }
        }
        if inverse.len() != self.target.vertices().len() {
            return false;
        }
        let back = SimplicialMap {
            source: self.target.clone(),
            target: self.source.clone(),
            vertex_map: inverse,
        };
        back.is_simplicial()
    }

    /// The inverse of an isomorphism. Caller must have checked
    /// [`SimplicialMap::is_isomorphism`].
    pub fn inverse(&self) -> SimplicialMap {
        SimplicialMap {
            source: self.target.clone(),
            target: self.source.clone(),
            vertex_map: self.vertex_map.iter().map(|(&v, &w)| (w, v)).collect(),
        }
    }

    /// `other ∘ self` (apply `self` first). `None` when targets mismatch.
    pub fn then(&self, other: &SimplicialMap) -> Option<SimplicialMap> {
        if self.target != other.source {
            return None;
        }
        Some(SimplicialMap {
            source: self.source.clone(),
            target: other.target.clone(),
            vertex_map: self
                .vertex_map
                .iter()
                .map(|(&v, &w)| (v, other.vertex_map[&w]))
                .collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    pub(crate) fn triangle_boundary() -> SimplicialComplex {
        SimplicialComplex::from_vertex_tuples([vec![0, 1], vec![1, 2], vec![0, 2]])
    }

    pub(crate) fn tetrahedron_boundary() -> SimplicialComplex {
        SimplicialComplex::from_vertex_tuples([
            vec![0, 1, 2],
            vec![0, 1, 3],
            vec![0, 2, 3],
            vec![1, 2, 3],
        ])
    }

    fn interval() -> MarkedComplex {
        let c = SimplicialComplex::from_vertex_tuples([vec![0, 1]]);
        MarkedComplex::new(
            c,
            vec![
                BoundaryComponent {
                    name: "A".into(),
                    label: Label::In,
                    complex: SimplicialComplex::from_vertex_tuples([vec![0]]),
                },
                BoundaryComponent {
                    name: "B".into(),
                    label: Label::Out,
                    complex: SimplicialComplex::from_vertex_tuples([vec![1]]),
                },
            ],
        )
    }

    #[test]
    fn validate_accepts_triangle_boundary() {
        assert_eq!(triangle_boundary().validate(), Ok(()));
    }

    #[test]
    fn validate_reports_missing_faces() {
        let c = SimplicialComplex::from_raw([0, 1], [Simplex::new(vec![0, 1])]);
        match c.validate() {
            Err(ComplexViolation::MissingFace { simplex, face }) => {
                assert_eq!(simplex, Simplex::new(vec![0, 1]));
                assert!(face == Simplex::new(vec![0]) || face == Simplex::new(vec![1]));
            }
            other => panic!("expected MissingFace, got {other:?}"),
        }
    }

    #[test]
    fn validate_accepts_solid_tetrahedron_skeleton() {
        // All subsets of {0,1,2,3} of size ≤ 3.
        assert_eq!(tetrahedron_boundary().validate(), Ok(()));
    }

    #[test]
    fn validate_reports_unregistered_vertex() {
        let c = SimplicialComplex::from_raw([0], [Simplex::new(vec![0]), Simplex::new(vec![1])]);
        assert_eq!(
            c.validate(),
            Err(ComplexViolation::UnregisteredVertex {
                simplex: Simplex::new(vec![1]),
                vertex: 1
            })
        );
    }

    #[test]
    fn validate_reports_vertex_without_simplex() {
        let c = SimplicialComplex::from_raw([0, 1], [Simplex::new(vec![0])]);
        assert_eq!(c.validate(), Err(ComplexViolation::VertexNotASimplex { vertex: 1 }));
    }

    #[test]
    fn euler_characteristic_of_small_complexes() {
        assert_eq!(triangle_boundary().euler_characteristic(), 0);
        assert_eq!(tetrahedron_boundary().euler_characteristic(), 2);
        let interval = SimplicialComplex::from_vertex_tuples([vec![0, 1]]);
        assert_eq!(interval.euler_characteristic(), 1);
        assert_eq!(SimplicialComplex::empty().euler_characteristic(), 0);
    }

    #[test]
    fn disjoint_union_shifts_and_adds_euler() {
        let a = interval();
        let b = interval();
        let u = a.disjoint_union(&b);
        assert_eq!(u.validate(), Ok(()));
        assert_eq!(u.euler_characteristic(), 2);
        assert_eq!(u.boundary.len(), 4);
        // Shifted copies keep disjoint vertex sets.
        assert_eq!(u.complex.vertices().len(), 4);
        // Name collisions resolved by suffixing.
        assert_eq!(u.boundary[2].name, "A'");
        assert_eq!(u.boundary[3].name, "B'");
    }

    #[test]
    fn disjoint_union_with_empty_is_identity_on_structure() {
        let a = interval();
        let u = a.disjoint_union(&MarkedComplex::default());
        assert_eq!(u, a);
        let v = MarkedComplex::default().disjoint_union(&a);
        assert_eq!(v.complex, a.complex);
        assert_eq!(v.boundary.len(), 2);
    }

    #[test]
    fn disjoint_union_triangle_and_tetra() {
        let a = MarkedComplex::unmarked(triangle_boundary());
        let b = MarkedComplex::unmarked(tetrahedron_boundary());
        assert_eq!(a.disjoint_union(&b).euler_characteristic(), 2);
    }

    #[test]
    fn connected_components_counts() {
        let two_edges = SimplicialComplex::from_vertex_tuples([vec![0, 1], vec![5, 9]]);
        assert_eq!(two_edges.connected_components().len(), 2);
        assert_eq!(triangle_boundary().connected_components().len(), 1);
        assert_eq!(SimplicialComplex::empty().connected_components().len(), 0);
    }

    #[test]
    fn components_partition_the_simplices() {
        let c = SimplicialComplex::from_vertex_tuples([vec![0, 1, 2], vec![4, 5], vec![7]]);
        let comps = c.connected_components();
        assert_eq!(comps.len(), 3);
        let mut total = 0;
        for comp in &comps {
            assert_eq!(comp.validate(), Ok(()));
            total += comp.simplices().len();
            for other in &comps {
                if other != comp {
                    assert!(comp.vertices().intersection(other.vertices()).next().is_none());
                }
            }
        }
        assert_eq!(total, c.simplices().len());
    }

    #[test]
    fn flip_labels_is_an_involution() {
        let m = interval();
        let f = m.flip_labels();
        assert_eq!(f.boundary[0].label, Label::Out);
        assert_eq!(f.boundary[1].label, Label::In);
        assert_eq!(f.complex, m.complex);
        assert_eq!(f.flip_labels(), m);
        // No boundary: unchanged.
        let plain = MarkedComplex::unmarked(triangle_boundary());
        assert_eq!(plain.flip_labels(), plain);
    }

    #[test]
    fn marked_validation_rejects_shared_vertices() {
        let c = SimplicialComplex::from_vertex_tuples([vec![0, 1]]);
        let m = MarkedComplex::new(
            c.clone(),
            vec![
                BoundaryComponent {
                    name: "A".into(),
                    label: Label::In,
                    complex: SimplicialComplex::from_vertex_tuples([vec![0]]),
                },
                BoundaryComponent {
                    name: "B".into(),
                    label: Label::Out,
                    complex: SimplicialComplex::from_vertex_tuples([vec![0]]),
                },
            ],
        );
        assert!(matches!(m.validate(), Err(MarkedViolation::NotSeparated { .. })));
    }

    #[test]
    fn marked_validation_rejects_non_subcomplexes() {
        let c = SimplicialComplex::from_vertex_tuples([vec![0, 1]]);
        let m = MarkedComplex::new(
            c,
            vec![BoundaryComponent {
                name: "A".into(),
                label: Label::In,
                complex: SimplicialComplex::from_vertex_tuples([vec![7]]),
            }],
        );
        assert!(matches!(m.validate(), Err(MarkedViolation::NotASubcomplex { .. })));
    }

    #[test]
    fn simplicial_map_detects_isomorphisms() {
        let c = triangle_boundary();
        let shifted = c.relabel(|v| v + 10);
        let map = SimplicialMap::new(
            c.clone(),
            shifted.clone(),
            c.vertices().iter().map(|&v| (v, v + 10)).collect(),
        );
        assert!(map.is_simplicial());
        assert!(map.is_isomorphism());
        assert!(map.inverse().is_isomorphism());

        // Collapse: simplicial but not an isomorphism.
        let edge = SimplicialComplex::from_vertex_tuples([vec![0, 1]]);
        let point = SimplicialComplex::from_vertex_tuples([vec![5]]);
        let collapse =
            SimplicialMap::new(edge, point, [(0, 5), (1, 5)].into_iter().collect());
        assert!(collapse.is_simplicial());
        assert!(!collapse.is_isomorphism());
    }

    #[test]
    fn face_closure_is_preserved_by_union_and_relabel() {
        let a = tetrahedron_boundary();
        let b = triangle_boundary().relabel(|v| v + 20);
        assert_eq!(a.union(&b).validate(), Ok(()));
        assert_eq!(b.validate(), Ok(()));
    }
}
