//! Gluing morphisms: quotients of a marked complex that identify two of its
//! boundary pieces, the five point-set conditions such a quotient map must
//! satisfy, and composition.
//!
//! A [`GluingSpec`] selects two disjoint families of boundary components,
//! `Σ₁` and `Σ₂`, together with a simplicial isomorphism `φ : Σ₁ → Σ₂`.
//! [`glue`] builds the identification space `M_φ = M / (x ∼ φ(x))` and the
//! canonical quotient map, rejecting inputs whose quotient would not be a
//! simplicial complex (the caller must subdivide first). The quotient map of
//! every accepted gluing satisfies the conditions verified by
//! [`check_conditions`]:
//!
//! 1. the map is surjective;
//! 2. it is injective away from `Σ₁ ⊔ Σ₂`;
//! 3. restricted to the remaining boundary it is an isomorphism onto its
//!    image;
//! 4. over each point of the image of `Σ₁` there is exactly one identified
//!    pair `(x, φ(x))`;
//! 5. the image of `Σ₁` does not meet the image of the rest of `M`.
//!
//! Gluing in two stages equals gluing everything at once: [`compose`] builds
//! the combined morphism, and the quotient's choice of representatives
//! (minimum vertex id per identified class) makes the staged and one-shot
//! targets agree simplex for simplex, not merely up to isomorphism.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::{
    BoundaryComponent, MarkedComplex, Simplex, SimplicialComplex, SimplicialMap, VertexId,
};

/// Input data for a gluing: which boundary pieces to identify and how.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingSpec {
    pub source: MarkedComplex,
    /// Names of the components forming `Σ₁`.
    pub sigma1: Vec<String>,
    /// Names of the components forming `Σ₂`.
    pub sigma2: Vec<String>,
    /// Vertex map of the isomorphism `φ : Σ₁ → Σ₂` (as unlabelled
    /// complexes).
    pub phi: BTreeMap<VertexId, VertexId>,
}

impl GluingSpec {
    /// Union subcomplex of the `Σ₁` components.
    pub fn sigma1_union(&self) -> Result<SimplicialComplex, GluingError> {
        self.source
            .named_union(&self.sigma1)
            .map_err(|name| GluingError::UnknownComponent { name })
    }

    /// Union subcomplex of the `Σ₂` components.
    pub fn sigma2_union(&self) -> Result<SimplicialComplex, GluingError> {
        self.source
            .named_union(&self.sigma2)
            .map_err(|name| GluingError::UnknownComponent { name })
    }

    /// `φ` packaged as a simplicial map `Σ₁ → Σ₂`.
    pub fn phi_map(&self) -> Result<SimplicialMap, GluingError> {
        Ok(SimplicialMap::new(
            self.sigma1_union()?,
            self.sigma2_union()?,
            self.phi.clone(),
        ))
    }
}

/// Why a gluing is rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GluingError {
    UnknownComponent { name: String },
    /// `Σ₁` and `Σ₂` overlap (by name), or a selection is empty.
    NotDisjoint { detail: String },
    /// `φ` is not a simplicial isomorphism `Σ₁ → Σ₂`.
    NotIsomorphism { detail: String },
    /// The identification would not produce a simplicial complex; the
    /// offending simplices are named so the caller can subdivide.
    NonSimplicialQuotient { detail: String },
    /// Composition attempted between morphisms whose middle objects differ.
    NotComposable { detail: String },
}

impl fmt::Display for GluingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GluingError::UnknownComponent { name } => write!(f, "unknown boundary component `{name}`"),
            GluingError::NotDisjoint { detail } => write!(f, "not-disjoint: {detail}"),
            GluingError::NotIsomorphism { detail } => write!(f, "not-isomorphism: {detail}"),
            GluingError::NonSimplicialQuotient { detail } => {
                write!(f, "non-simplicial-quotient: {detail}")
            }
            GluingError::NotComposable { detail } => write!(f, "not-composable: {detail}"),
        }
    }
}

/// A condition from the gluing definition that a candidate map fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionFailure {
    /// Condition number, 1 through 5.
    pub number: u8,
    pub detail: String,
}

impl fmt::Display for ConditionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "condition {} failed: {}", self.number, self.detail)
    }
}

/// A gluing morphism: the spec, the canonical quotient map, and the target
/// marked complex (remaining boundary components keep their names and
/// labels).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingMorphism {
    pub spec: GluingSpec,
    pub target: MarkedComplex,
    /// The canonical map `ν : M → M_φ`.
    pub map: SimplicialMap,
}

impl GluingMorphism {
    pub fn source(&self) -> &MarkedComplex {
        &self.spec.source
    }
}

fn fail(number: u8, detail: impl Into<String>) -> ConditionFailure {
    ConditionFailure { number, detail: detail.into() }
}

/// Validates the spec selections: names exist, the two selections are
/// disjoint and non-empty, and `φ` is a simplicial isomorphism between the
/// unions.
fn validate_spec(spec: &GluingSpec) -> Result<(SimplicialComplex, SimplicialComplex), GluingError> {
    let s1 = spec.sigma1_union()?;
    let s2 = spec.sigma2_union()?;
    if spec.sigma1.is_empty() || s1.is_empty() {
        return Err(GluingError::NotDisjoint { detail: "sigma1 selects nothing".into() });
    }
    if spec.sigma2.is_empty() || s2.is_empty() {
        return Err(GluingError::NotDisjoint { detail: "sigma2 selects nothing".into() });
    }
    if let Some(name) = spec.sigma1.iter().find(|n| spec.sigma2.contains(n)) {
        return Err(GluingError::NotDisjoint {
            detail: alloc::format!("component `{name}` appears in both sigma1 and sigma2"),
        });
    }
    if let Some(&v) = s1.vertices().intersection(s2.vertices()).next() {
        return Err(GluingError::NotDisjoint {
            detail: alloc::format!("sigma1 and sigma2 share vertex {v}"),
        });
    }
    let phi = SimplicialMap::new(s1.clone(), s2.clone(), spec.phi.clone());
    if !phi.is_isomorphism() {
        return Err(GluingError::NotIsomorphism {
            detail: "phi is not a simplicial isomorphism from sigma1 onto sigma2".into(),
        });
    }
    Ok((s1, s2))
}

/// Builds the identification space and canonical map for a gluing spec.
pub fn glue(spec: &GluingSpec) -> Result<GluingMorphism, GluingError> {
    let (s1, s2) = validate_spec(spec)?;
    let m = &spec.source.complex;

    // Identified classes are exactly the pairs {x, φ(x)}; the class keeps
    // the minimum id of its members.
    let mut rep: BTreeMap<VertexId, VertexId> = m.vertices().iter().map(|&v| (v, v)).collect();
    for (&x, &y) in &spec.phi {
        let r = x.min(y);
        rep.insert(x, r);
        rep.insert(y, r);
    }

    // Map every simplex; reject collapses and unintended coincidences.
    let mut images: BTreeMap<Simplex, Vec<Simplex>> = BTreeMap::new();
    for s in m.simplices() {
        let mut img: Vec<VertexId> = s.vertices().iter().map(|&v| rep[&v]).collect();
        img.sort_unstable();
        if img.windows(2).any(|w| w[0] == w[1]) {
            return Err(GluingError::NonSimplicialQuotient {
                detail: alloc::format!(
                    "simplex {s:?} collapses under the identification; subdivide first"
                ),
            });
        }
        images.entry(Simplex::new(img)).or_default().push(s.clone());
    }
    let phi_map = SimplicialMap::new(s1.clone(), s2.clone(), spec.phi.clone());
    for (image, sources) in &images {
        match sources.as_slice() {
            [_] => {}
            [a, b] => {
                // The only legitimate coincidence is an identified pair
                // σ ∈ Σ₁ with φ(σ) ∈ Σ₂.
                let pair_ok = (s1.contains(a)
                    && phi_map.apply(a).is_some_and(|img| &img == b))
                    || (s1.contains(b) && phi_map.apply(b).is_some_and(|img| &img == a));
                if !pair_ok {
                    return Err(GluingError::NonSimplicialQuotient {
                        detail: alloc::format!(
                            "distinct simplices {a:?} and {b:?} would coincide as {image:?}; subdivide first"
                        ),
                    });
                }
            }
            many => {
                return Err(GluingError::NonSimplicialQuotient {
                    detail: alloc::format!(
                        "{} simplices would coincide as {image:?}; subdivide first",
                        many.len()
                    ),
                });
            }
        }
    }

    let target_complex = SimplicialComplex::from_raw(
        m.vertices().iter().map(|&v| rep[&v]).collect::<BTreeSet<_>>(),
        images.keys().cloned(),
    );
    debug_assert_eq!(target_complex.validate(), Ok(()));

    // Remaining boundary components are untouched by the identification
    // (they are vertex-disjoint from Σ₁ and Σ₂), so they carry over as-is.
    let glued: BTreeSet<&String> = spec.sigma1.iter().chain(spec.sigma2.iter()).collect();
    let boundary: Vec<BoundaryComponent> = spec
        .source
        .boundary
        .iter()
        .filter(|c| !glued.contains(&c.name))
        .cloned()
        .collect();

    let target = MarkedComplex::new(target_complex, boundary);
    let map = SimplicialMap::new(m.clone(), target.complex.clone(), rep);
    Ok(GluingMorphism { spec: spec.clone(), target, map })
}

/// Evaluates the five gluing-map conditions for an arbitrary candidate map
/// `f` against a spec, reporting the first failure by number.
///
/// Conditions are checked set-theoretically on vertices and simplices. In
/// condition 3 the unglued remainder is compared against its own image
/// (which is what the target boundary of a well-formed morphism consists
/// of).
pub fn check_conditions(f: &SimplicialMap, spec: &GluingSpec) -> Result<(), ConditionFailure> {
    let s1 = spec
        .sigma1_union()
        .map_err(|e| fail(1, alloc::format!("bad spec: {e}")))?;
    let s2 = spec
        .sigma2_union()
        .map_err(|e| fail(1, alloc::format!("bad spec: {e}")))?;
    let m = &spec.source.complex;
    let glued_vertices: BTreeSet<VertexId> =
        s1.vertices().union(s2.vertices()).copied().collect();

    // 1) surjectivity on vertices and simplices.
    let vertex_image: BTreeSet<VertexId> =
        m.vertices().iter().filter_map(|&v| f.apply_vertex(v)).collect();
    if vertex_image.len() != f.target.vertices().len()
        || !vertex_image.is_subset(f.target.vertices())
    {
        return Err(fail(1, "vertex map is not onto the target"));
    }
    let simplex_image: BTreeSet<Simplex> =
        m.simplices().iter().filter_map(|s| f.apply(s)).collect();
    if !f.target.simplices().iter().all(|s| simplex_image.contains(s)) {
        return Err(fail(1, "some target simplex is not an image"));
    }

    // 2) injectivity off Σ₁ ⊔ Σ₂, including "no simplex outside the glued
    // part collapses".
    let mut seen: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    for &v in m.vertices() {
        if glued_vertices.contains(&v) {
            continue;
        }
        let Some(w) = f.apply_vertex(v) else {
            return Err(fail(2, alloc::format!("vertex {v} has no image")));
        };
        if let Some(&prev) = seen.get(&w) {
            return Err(fail(2, alloc::format!("vertices {prev} and {v} both map to {w}")));
        }
        seen.insert(w, v);
    }
    let outside: Vec<&Simplex> = m
        .simplices()
        .iter()
        .filter(|s| !s1.contains(s) && !s2.contains(s))
        .collect();
    let mut outside_images: BTreeMap<Simplex, &Simplex> = BTreeMap::new();
    for s in &outside {
        let Some(img) = f.apply(s) else {
            return Err(fail(2, alloc::format!("simplex {s:?} has no image")));
        };
        if img.vertices().len() != s.vertices().len() {
            return Err(fail(2, alloc::format!("simplex {s:?} collapses to {img:?}")));
        }
        if let Some(prev) = outside_images.insert(img.clone(), s) {
            return Err(fail(
                2,
                alloc::format!("simplices {prev:?} and {s:?} both map to {img:?}"),
            ));
        }
    }

    // 3) the unglued boundary remainder maps isomorphically onto its image.
    let glued_names: BTreeSet<&String> = spec.sigma1.iter().chain(spec.sigma2.iter()).collect();
    for comp in spec.source.boundary.iter().filter(|c| !glued_names.contains(&c.name)) {
        let mut comp_map: BTreeMap<VertexId, VertexId> = BTreeMap::new();
        for &v in comp.complex.vertices() {
            match f.apply_vertex(v) {
                Some(w) => {
                    comp_map.insert(v, w);
                }
                None => {
                    return Err(fail(3, alloc::format!("vertex {v} of `{}` has no image", comp.name)))
                }
            }
        }
        let image_simplices: Result<Vec<Simplex>, ConditionFailure> = comp
            .complex
            .simplices()
            .iter()
            .map(|s| {
                f.apply(s).ok_or_else(|| {
                    fail(3, alloc::format!("simplex {s:?} of `{}` has no image", comp.name))
                })
            })
            .collect();
        let image =
            SimplicialComplex::from_raw(comp_map.values().copied().collect::<Vec<_>>(), image_simplices?);
        let restricted = SimplicialMap::new(comp.complex.clone(), image, comp_map);
        if !restricted.is_isomorphism() {
            return Err(fail(
                3,
                alloc::format!("component `{}` does not map isomorphically onto its image", comp.name),
            ));
        }
    }

    // 4) a unique identified pair (x, φ(x)) over each image point of Σ₁.
    let mut preimages: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for &v in m.vertices() {
        if let Some(w) = f.apply_vertex(v) {
            preimages.entry(w).or_default().push(v);
        }
    }
    for &x in s1.vertices() {
        let Some(y) = f.apply_vertex(x) else {
            return Err(fail(4, alloc::format!("vertex {x} of sigma1 has no image")));
        };
        let pre = &preimages[&y];
        let Some(&phi_x) = spec.phi.get(&x) else {
            return Err(fail(4, alloc::format!("phi is undefined on vertex {x}")));
        };
        let expected: BTreeSet<VertexId> = [x, phi_x].into_iter().collect();
        let actual: BTreeSet<VertexId> = pre.iter().copied().collect();
        if actual != expected {
            return Err(fail(
                4,
                alloc::format!(
                    "image {y} of sigma1 vertex {x} has preimage {actual:?}, expected the pair {expected:?}"
                ),
            ));
        }
    }
    // Simplex level: each simplex of Σ₁ coincides with exactly its φ-image.
    let phi_map = SimplicialMap::new(s1.clone(), s2.clone(), spec.phi.clone());
    for s in s1.simplices() {
        let (Some(img), Some(phi_s)) = (f.apply(s), phi_map.apply(s)) else {
            return Err(fail(4, alloc::format!("simplex {s:?} of sigma1 has no image")));
        };
        if f.apply(&phi_s) != Some(img) {
            return Err(fail(
                4,
                alloc::format!("{s:?} and its phi-image {phi_s:?} do not map to the same simplex"),
            ));
        }
    }

    // 5) the image of Σ₁ avoids the image of the rest of M.
    let sigma1_vertex_image: BTreeSet<VertexId> =
        s1.vertices().iter().filter_map(|&v| f.apply_vertex(v)).collect();
    for &v in m.vertices() {
        if !glued_vertices.contains(&v) {
            if let Some(w) = f.apply_vertex(v) {
                if sigma1_vertex_image.contains(&w) {
                    return Err(fail(
                        5,
                        alloc::format!("vertex {v} outside the glued part maps into f(sigma1)"),
                    ));
                }
            }
        }
    }
    let sigma1_simplex_image: BTreeSet<Simplex> =
        s1.simplices().iter().filter_map(|s| f.apply(s)).collect();
    for s in &outside {
        if let Some(img) = f.apply(s) {
            if sigma1_simplex_image.contains(&img) {
                return Err(fail(
                    5,
                    alloc::format!("simplex {s:?} outside the glued part maps into f(sigma1)"),
                ));
            }
        }
    }
    Ok(())
}

/// Composes two gluing morphisms (`g2 ∘ g1`, gluing with `g1` first).
///
/// The combined morphism glues `Σ₁ ⊔ f⁻¹(Σ₁′)` to `Σ₂ ⊔ f⁻¹(Σ₂′)` with the
/// combined isomorphism; because the quotient map is the identity on every
/// unglued vertex, the pulled-back second-stage isomorphism is literally
/// `ψ` again. The result is validated against the five conditions.
pub fn compose(g1: &GluingMorphism, g2: &GluingMorphism) -> Result<GluingMorphism, GluingError> {
    if g1.target != g2.spec.source {
        return Err(GluingError::NotComposable {
            detail: "target of the first morphism differs from the source of the second".into(),
        });
    }
    let mut sigma1 = g1.spec.sigma1.clone();
    sigma1.extend(g2.spec.sigma1.iter().cloned());
    let mut sigma2 = g1.spec.sigma2.clone();
    sigma2.extend(g2.spec.sigma2.iter().cloned());
    let mut phi = g1.spec.phi.clone();
    for (&x, &y) in &g2.spec.phi {
        phi.insert(x, y);
    }
    let spec = GluingSpec { source: g1.spec.source.clone(), sigma1, sigma2, phi };
    let map = g1
        .map
        .then(&g2.map)
        .ok_or_else(|| GluingError::NotComposable { detail: "maps do not chain".into() })?;
    let composed = GluingMorphism { spec, target: g2.target.clone(), map };
    if let Err(failure) = check_conditions(&composed.map, &composed.spec) {
        return Err(GluingError::NotComposable {
            detail: alloc::format!("composite violates {failure}"),
        });
    }
    Ok(composed)
}

/// An isomorphism of marked complexes: a simplicial isomorphism of the
/// underlying complexes restricting, component by component, to a
/// label-preserving isomorphism of the boundaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedIsomorphism {
    pub source: MarkedComplex,
    pub target: MarkedComplex,
    pub map: SimplicialMap,
    /// For each source component name, the matching target component name.
    pub component_map: BTreeMap<String, String>,
}

impl MarkedIsomorphism {
    /// Builds and checks an isomorphism from a vertex map.
    pub fn new(
        source: MarkedComplex,
        target: MarkedComplex,
        vertex_map: BTreeMap<VertexId, VertexId>,
    ) -> Result<Self, GluingError> {
        let map = SimplicialMap::new(source.complex.clone(), target.complex.clone(), vertex_map);
        if !map.is_isomorphism() {
            return Err(GluingError::NotIsomorphism {
                detail: "vertex map is not a simplicial isomorphism".into(),
            });
        }
        if source.boundary.len() != target.boundary.len() {
            return Err(GluingError::NotIsomorphism {
                detail: "boundary component counts differ".into(),
            });
        }
        let mut component_map = BTreeMap::new();
        let mut used: BTreeSet<&str> = BTreeSet::new();
        for comp in &source.boundary {
            let image = comp.complex.relabel(|v| map.vertex_map[&v]);
            let found = target
                .boundary
                .iter()
                .find(|t| !used.contains(t.name.as_str()) && t.label == comp.label && t.complex == image);
            match found {
                Some(t) => {
                    used.insert(&t.name);
                    component_map.insert(comp.name.clone(), t.name.clone());
                }
                None => {
                    return Err(GluingError::NotIsomorphism {
                        detail: alloc::format!(
                            "component `{}` has no label-preserving image in the target",
                            comp.name
                        ),
                    })
                }
            }
        }
        Ok(MarkedIsomorphism { source, target, map, component_map })
    }

    pub fn identity(m: &MarkedComplex) -> Self {
        MarkedIsomorphism {
            source: m.clone(),
            target: m.clone(),
            map: SimplicialMap::identity(&m.complex),
            component_map: m.boundary.iter().map(|c| (c.name.clone(), c.name.clone())).collect(),
        }
    }
}

/// A morphism of the gluing category: either a marked isomorphism or a
/// gluing morphism. Mixed compositions stay in the category.
#[derive(Clone, Debug)]
pub enum Morphism {
    Iso(MarkedIsomorphism),
    Gluing(GluingMorphism),
}

impl Morphism {
    pub fn source(&self) -> &MarkedComplex {
        match self {
            Morphism::Iso(i) => &i.source,
            Morphism::Gluing(g) => g.source(),
        }
    }

    pub fn target(&self) -> &MarkedComplex {
        match self {
            Morphism::Iso(i) => &i.target,
            Morphism::Gluing(g) => &g.target,
        }
    }

    /// `second ∘ first`. Iso∘iso stays an isomorphism; every combination
    /// with a gluing is a gluing.
    pub fn compose(first: &Morphism, second: &Morphism) -> Result<Morphism, GluingError> {
        if first.target() != second.source() {
            return Err(GluingError::NotComposable {
                detail: "middle objects differ".into(),
            });
        }
        match (first, second) {
            (Morphism::Iso(a), Morphism::Iso(b)) => {
                let map = a.map.then(&b.map).expect("objects checked above");
                Ok(Morphism::Iso(MarkedIsomorphism::new(
                    a.source.clone(),
                    b.target.clone(),
                    map.vertex_map,
                )?))
            }
            (Morphism::Gluing(g), Morphism::Iso(h)) => {
                // Transport the gluing along the isomorphism on the right.
                let map = g.map.then(&h.map).expect("objects checked above");
                Ok(Morphism::Gluing(GluingMorphism {
                    spec: g.spec.clone(),
                    target: h.target.clone(),
                    map,
                }))
            }
            (Morphism::Iso(h), Morphism::Gluing(g)) => {
                // Pull the gluing data back through the isomorphism.
                let inv = h.map.inverse();
                let name_of = |target_name: &String| -> String {
                    h.component_map
                        .iter()
                        .find(|(_, t)| *t == target_name)
                        .map(|(s, _)| s.clone())
                        .expect("component correspondence is total")
                };
                let sigma1: Vec<String> = g.spec.sigma1.iter().map(&name_of).collect();
                let sigma2: Vec<String> = g.spec.sigma2.iter().map(&name_of).collect();
                let phi: BTreeMap<VertexId, VertexId> = g
                    .spec
                    .phi
                    .iter()
                    .map(|(&x, &y)| (inv.vertex_map[&x], inv.vertex_map[&y]))
                    .collect();
                let spec = GluingSpec { source: h.source.clone(), sigma1, sigma2, phi };
                let map = h.map.then(&g.map).expect("objects checked above");
                let composed = GluingMorphism { spec, target: g.target.clone(), map };
                if let Err(failure) = check_conditions(&composed.map, &composed.spec) {
                    return Err(GluingError::NotComposable {
                        detail: alloc::format!("composite violates {failure}"),
                    });
                }
                Ok(Morphism::Gluing(composed))
            }
            (Morphism::Gluing(a), Morphism::Gluing(b)) => compose(a, b).map(Morphism::Gluing),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Label;
    use alloc::string::ToString;
    use alloc::vec;

    fn point_component(name: &str, label: Label, v: VertexId) -> BoundaryComponent {
        BoundaryComponent {
            name: name.to_string(),
            label,
            complex: SimplicialComplex::from_vertex_tuples([vec![v]]),
        }
    }

    /// Path v0–v1–v2–v3 with endpoints marked In/Out.
    fn path4() -> MarkedComplex {
        MarkedComplex::new(
            SimplicialComplex::from_vertex_tuples([vec![0, 1], vec![1, 2], vec![2, 3]]),
            vec![point_component("A", Label::In, 0), point_component("B", Label::Out, 3)],
        )
    }

    fn path4_spec() -> GluingSpec {
        GluingSpec {
            source: path4(),
            sigma1: vec!["A".to_string()],
            sigma2: vec!["B".to_string()],
            phi: [(0, 3)].into_iter().collect(),
        }
    }

    /// Two disjoint 2-edge intervals with all four endpoints marked.
    fn interval_pair() -> MarkedComplex {
        MarkedComplex::new(
            SimplicialComplex::from_vertex_tuples([vec![0, 1], vec![1, 2], vec![3, 4], vec![4, 5]]),
            vec![
                point_component("A0", Label::In, 0),
                point_component("A2", Label::Out, 2),
                point_component("B3", Label::In, 3),
                point_component("B5", Label::Out, 5),
            ],
        )
    }

    #[test]
    fn path_glues_to_a_circle() {
        let g = glue(&path4_spec()).unwrap();
        assert_eq!(g.target.complex.vertices().len(), 3);
        assert_eq!(g.target.complex.euler_characteristic(), 0);
        // χ(M_φ) = χ(M) − χ(Σ₂) with Σ₂ a point.
        assert_eq!(
            g.target.complex.euler_characteristic(),
            g.source().euler_characteristic() - 1
        );
        assert_eq!(g.target.boundary.len(), 0);
        assert_eq!(g.target.complex.validate(), Ok(()));
        assert_eq!(check_conditions(&g.map, &g.spec), Ok(()));
    }

    #[test]
    fn mutual_gluing_of_two_intervals_gives_a_path() {
        let m = interval_pair();
        let spec = GluingSpec {
            source: m,
            sigma1: vec!["A2".to_string()],
            sigma2: vec!["B3".to_string()],
            phi: [(2, 3)].into_iter().collect(),
        };
        let g = glue(&spec).unwrap();
        // χ = 1 + 1 − 1.
        assert_eq!(g.target.complex.euler_characteristic(), 1);
        assert_eq!(g.target.boundary.len(), 2);
        assert_eq!(check_conditions(&g.map, &g.spec), Ok(()));
        // The identified class keeps the minimum id.
        assert_eq!(g.map.apply_vertex(3), Some(2));
        assert_eq!(g.map.apply_vertex(2), Some(2));
    }

    #[test]
    fn three_vertex_cylinder_self_gluing_is_rejected() {
        // Gluing the two rims of a minimal triangulated cylinder would make
        // a 3-vertex torus, which cannot be a simplicial complex.
        let cylinder = SimplicialComplex::from_vertex_tuples([
            vec![0, 1, 4],
            vec![0, 4, 3],
            vec![1, 2, 5],
            vec![1, 5, 4],
            vec![2, 0, 3],
            vec![2, 3, 5],
        ]);
        let m = MarkedComplex::new(
            cylinder,
            vec![
                BoundaryComponent {
                    name: "Bottom".into(),
                    label: Label::In,
                    complex: SimplicialComplex::from_vertex_tuples([vec![0, 1], vec![1, 2], vec![0, 2]]),
                },
                BoundaryComponent {
                    name: "Top".into(),
                    label: Label::Out,
                    complex: SimplicialComplex::from_vertex_tuples([vec![3, 4], vec![4, 5], vec![3, 5]]),
                },
            ],
        );
        let spec = GluingSpec {
            source: m,
            sigma1: vec!["Bottom".to_string()],
            sigma2: vec!["Top".to_string()],
            phi: [(0, 3), (1, 4), (2, 5)].into_iter().collect(),
        };
        assert!(matches!(glue(&spec), Err(GluingError::NonSimplicialQuotient { .. })));
    }

    #[test]
    fn overlapping_selections_are_rejected() {
        let mut spec = path4_spec();
        spec.sigma2 = vec!["A".to_string()];
        assert!(matches!(glue(&spec), Err(GluingError::NotDisjoint { .. })));
    }

    #[test]
    fn non_isomorphic_phi_is_rejected() {
        let m = interval_pair();
        let spec = GluingSpec {
            source: m,
            sigma1: vec!["A0".to_string(), "A2".to_string()],
            sigma2: vec!["B3".to_string()],
            phi: [(0, 3), (2, 3)].into_iter().collect(),
        };
        assert!(matches!(glue(&spec), Err(GluingError::NotIsomorphism { .. })));
    }

    #[test]
    fn identity_map_fails_condition_four() {
        let spec = path4_spec();
        let f = SimplicialMap::identity(&spec.source.complex);
        let result = check_conditions(&f, &spec);
        assert_eq!(result.unwrap_err().number, 4);
    }

    #[test]
    fn constant_map_fails_condition_two() {
        let interval = MarkedComplex::new(
            SimplicialComplex::from_vertex_tuples([vec![0, 1]]),
            vec![point_component("A", Label::In, 0), point_component("B", Label::Out, 1)],
        );
        let spec = GluingSpec {
            source: interval,
            sigma1: vec!["A".to_string()],
            sigma2: vec!["B".to_string()],
            phi: [(0, 1)].into_iter().collect(),
        };
        let point = SimplicialComplex::from_vertex_tuples([vec![0]]);
        let f = SimplicialMap::new(
            spec.source.complex.clone(),
            point,
            [(0, 0), (1, 0)].into_iter().collect(),
        );
        let result = check_conditions(&f, &spec);
        assert_eq!(result.unwrap_err().number, 2);
    }

    #[test]
    fn staged_gluing_equals_one_shot() {
        let m = interval_pair();
        let stage1 = glue(&GluingSpec {
            source: m.clone(),
            sigma1: vec!["A2".to_string()],
            sigma2: vec!["B3".to_string()],
            phi: [(2, 3)].into_iter().collect(),
        })
        .unwrap();
        let stage2 = glue(&GluingSpec {
            source: stage1.target.clone(),
            sigma1: vec!["A0".to_string()],
            sigma2: vec!["B5".to_string()],
            phi: [(0, 5)].into_iter().collect(),
        })
        .unwrap();
        let composed = compose(&stage1, &stage2).unwrap();
        assert_eq!(check_conditions(&composed.map, &composed.spec), Ok(()));

        let oneshot = glue(&GluingSpec {
            source: m,
            sigma1: vec!["A2".to_string(), "A0".to_string()],
            sigma2: vec!["B3".to_string(), "B5".to_string()],
            phi: [(2, 3), (0, 5)].into_iter().collect(),
        })
        .unwrap();
        // Simplex-for-simplex agreement, not merely isomorphism.
        assert_eq!(composed.target, oneshot.target);
        assert_eq!(composed.map.vertex_map, oneshot.map.vertex_map);
        // χ dropped by χ(Σ₂ of stage1) + χ(Σ₂ of stage2) = 2.
        assert_eq!(oneshot.target.complex.euler_characteristic(), 0);
    }

    #[test]
    fn one_edge_intervals_glue_to_a_two_vertex_circle_and_are_rejected() {
        // Both identifications at once on 1-edge intervals would leave two
        // parallel edges on two vertices.
        let m = MarkedComplex::new(
            SimplicialComplex::from_vertex_tuples([vec![0, 1], vec![2, 3]]),
            vec![
                point_component("A0", Label::In, 0),
                point_component("A1", Label::Out, 1),
                point_component("B2", Label::In, 2),
                point_component("B3", Label::Out, 3),
            ],
        );
        let spec = GluingSpec {
            source: m,
            sigma1: vec!["A1".to_string(), "A0".to_string()],
            sigma2: vec!["B2".to_string(), "B3".to_string()],
            phi: [(1, 2), (0, 3)].into_iter().collect(),
        };
        assert!(matches!(glue(&spec), Err(GluingError::NonSimplicialQuotient { .. })));
    }

    #[test]
    fn composition_with_identity_is_identity() {
        let g = glue(&path4_spec()).unwrap();
        let id_source = Morphism::Iso(MarkedIsomorphism::identity(g.source()));
        let id_target = Morphism::Iso(MarkedIsomorphism::identity(&g.target));
        let left = Morphism::compose(&id_source, &Morphism::Gluing(g.clone())).unwrap();
        let right = Morphism::compose(&Morphism::Gluing(g.clone()), &id_target).unwrap();
        for composed in [left, right] {
            match composed {
                Morphism::Gluing(c) => {
                    assert_eq!(c.target, g.target);
                    assert_eq!(c.map.vertex_map, g.map.vertex_map);
                }
                Morphism::Iso(_) => panic!("expected a gluing morphism"),
            }
        }
    }

    #[test]
    fn gluing_transports_along_isomorphisms() {
        // Relabel the path, then glue: same circle up to the relabelling.
        let shifted = path4().relabel(|v| v + 10);
        let iso = MarkedIsomorphism::new(
            path4(),
            shifted.clone(),
            path4().complex.vertices().iter().map(|&v| (v, v + 10)).collect(),
        )
        .unwrap();
        let g_shifted = glue(&GluingSpec {
            source: shifted,
            sigma1: vec!["A".to_string()],
            sigma2: vec!["B".to_string()],
            phi: [(10, 13)].into_iter().collect(),
        })
        .unwrap();
        let composed =
            Morphism::compose(&Morphism::Iso(iso), &Morphism::Gluing(g_shifted.clone())).unwrap();
        match composed {
            Morphism::Gluing(c) => {
                assert_eq!(c.source(), &path4());
                assert_eq!(c.target, g_shifted.target);
                assert_eq!(check_conditions(&c.map, &c.spec), Ok(()));
            }
            Morphism::Iso(_) => panic!("expected a gluing morphism"),
        }
    }

    #[test]
    fn composition_is_associative_on_a_chain_of_gluings() {
        // Three 2-edge intervals glued into a chain and then into a circle.
        let m = MarkedComplex::new(
            SimplicialComplex::from_vertex_tuples([
                vec![0, 1],
                vec![1, 2],
                vec![3, 4],
                vec![4, 5],
                vec![6, 7],
                vec![7, 8],
            ]),
            vec![
                point_component("A0", Label::In, 0),
                point_component("A2", Label::Out, 2),
                point_component("B3", Label::In, 3),
                point_component("B5", Label::Out, 5),
                point_component("C6", Label::In, 6),
                point_component("C8", Label::Out, 8),
            ],
        );
        let g1 = glue(&GluingSpec {
            source: m.clone(),
            sigma1: vec!["A2".to_string()],
            sigma2: vec!["B3".to_string()],
            phi: [(2, 3)].into_iter().collect(),
        })
        .unwrap();
        let g2 = glue(&GluingSpec {
            source: g1.target.clone(),
            sigma1: vec!["B5".to_string()],
            sigma2: vec!["C6".to_string()],
            phi: [(5, 6)].into_iter().collect(),
        })
        .unwrap();
        let g3 = glue(&GluingSpec {
            source: g2.target.clone(),
            sigma1: vec!["A0".to_string()],
            sigma2: vec!["C8".to_string()],
            phi: [(0, 8)].into_iter().collect(),
        })
        .unwrap();
        let left = compose(&compose(&g1, &g2).unwrap(), &g3).unwrap();
        let right = compose(&g1, &compose(&g2, &g3).unwrap()).unwrap();
        assert_eq!(left.spec, right.spec);
        assert_eq!(left.target, right.target);
        assert_eq!(left.map.vertex_map, right.map.vertex_map);

        let oneshot = glue(&GluingSpec {
            source: m,
            sigma1: vec!["A2".to_string(), "B5".to_string(), "A0".to_string()],
            sigma2: vec!["B3".to_string(), "C6".to_string(), "C8".to_string()],
            phi: [(2, 3), (5, 6), (0, 8)].into_iter().collect(),
        })
        .unwrap();
        assert_eq!(left.target, oneshot.target);
        assert_eq!(left.target.complex.euler_characteristic(), 0);
    }

    #[test]
    fn compose_rejects_mismatched_morphisms() {
        let g = glue(&path4_spec()).unwrap();
        assert!(matches!(compose(&g, &g), Err(GluingError::NotComposable { .. })));
    }
}
